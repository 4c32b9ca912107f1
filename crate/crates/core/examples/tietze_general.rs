// A function that is not onto [0,1] is glued to a ramp first.

use staircase::rational::rat;
use staircase::region::{parse_region, ClosedRegion};
use staircase::tietze::{extend, verify_extension, Evaluator, Extension, PLFunction};

pub fn run_example() -> staircase::Result<()> {
    let e = ClosedRegion::new(parse_region("[2/5,3/5]")?)?;
    let h = PLFunction::constant(&e, rat(1, 2))?;
    let ext = extend(&h, 3)?;
    if let Extension::Glued(g) = &ext {
        println!("V1 = {}\nV2 = {}\nglued f = {}", g.v1(), g.v2(), g.glued());
    }
    for k in 0..=10 {
        let x = rat(k, 10);
        println!("F({x}) = {}", ext.value_at(&x)?);
    }
    print!("{}", verify_extension(&ext, 1000).render());

    let point = PLFunction::constant(&ClosedRegion::new(parse_region("[1/2,1/2]")?)?, rat(0, 1))?;
    let ext = extend(&point, 1)?;
    println!(
        "h = 0 at 1/2 only: F(1/2) = {}, route {}",
        ext.value_at(&rat(1, 2))?,
        ext.route()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("general extension example");
}
