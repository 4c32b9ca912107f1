// The Cantor-indexed family next to the textbook dyadic-indexed one. Both
// separate A from B; they are not expected to coincide.

use staircase::rational::rat;
use staircase::region::{parse_region, ClosedRegion};
use staircase::urysohn::{build_family, build_family_classical, verify_classical};

pub fn run_example() -> staircase::Result<()> {
    let a = ClosedRegion::new(parse_region("[0,1/10] u [7/10,3/4]")?)?;
    let b = ClosedRegion::new(parse_region("[2/5,1/2] u [19/20,1]")?)?;
    let depth = 6;
    let cantor = build_family(&a, &b, depth)?;
    let classical = build_family_classical(&a, &b, depth)?;

    let mut same = 0;
    let grid = 200;
    for k in 0..=grid {
        let x = rat(k, grid);
        if cantor.evaluate(&x)?.value == classical.evaluate(&x)? {
            same += 1;
        }
    }
    println!("values agree at {same} of {} grid points", grid + 1);
    print!("{}", verify_classical(&classical).render());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classical example");
}
