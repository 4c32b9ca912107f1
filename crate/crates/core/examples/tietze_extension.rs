// Extending a surjective piecewise-linear function from a closed set.

use staircase::rational::rat;
use staircase::region::{parse_region, ClosedRegion};
use staircase::tietze::{extend_surjective, verify_extension, Evaluator, Extension, PLFunction};

pub fn run_example() -> staircase::Result<()> {
    let e = ClosedRegion::new(parse_region("[0,1/4] u [3/4,1]")?)?;
    let f = PLFunction::new(
        e.clone(),
        vec![
            vec![(rat(0, 1), rat(0, 1)), (rat(1, 4), rat(1, 1))],
            vec![(rat(3, 4), rat(1, 1)), (rat(1, 1), rat(1, 1))],
        ],
    )?;
    println!("f = {f}");
    let ext = extend_surjective(&f, 3)?;
    for (q, u) in ext.family().opens() {
        println!(
            "q = {q:<6} complement(U_q) n E = {:<24} f^-1([{},1]) = {}",
            u.complement().intersection(&e).to_string(),
            q.phi().to_rational(),
            f.upper_set(&q.phi().to_rational())
        );
    }
    for k in [0, 1, 2, 4, 6, 8] {
        let x = rat(k, 8);
        println!("F({x}) = {}", ext.value_at(&x)?);
    }
    print!(
        "{}",
        verify_extension(&Extension::Surjective(ext), 1000).render()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("tietze example");
}
