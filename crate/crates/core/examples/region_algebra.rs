// Exact interval unions on [0,1] and the two insertion witnesses.

use staircase::region::{insert_open, insert_with_trace, parse_region, ClosedRegion, OpenRegion};

pub fn run_example() -> staircase::Result<()> {
    let a = ClosedRegion::new(parse_region("[0,1/10] u [2/5,1/2]")?)?;
    let b = ClosedRegion::new(parse_region("[9/10,1]")?)?;
    let gap = b.complement();
    println!("A = {a}\nB = {b}\ncomplement(B) = {gap}");
    println!("A u B = {}", a.union(&b));
    println!(
        "interior(A) = {}, boundary(A) = {}",
        a.interior(),
        a.boundary()
    );
    println!("distance(A, B) = {}", a.distance(&b)?);

    // an open set between A and the complement of B
    let u = insert_open(&a, &gap)?;
    println!("insert_open(A, complement(B)) = {u}");
    println!(
        "closure = {} inside complement(B): {}",
        u.closure(),
        u.closure().is_subset(&gap)
    );

    // a closed set around Y that meets E in exactly C
    let y = ClosedRegion::new(parse_region("[9/10,1]")?)?;
    let o = OpenRegion::new(parse_region("(1/10,1]")?)?;
    let e = ClosedRegion::new(parse_region("[1/5,3/10] u [3/5,1]")?)?;
    let c = ClosedRegion::new(parse_region("[4/5,1]")?)?;
    let z = insert_with_trace(&y, &o, &e, &c)?;
    println!("Z = {z}; Z n E = {} (wanted {c})", z.intersection(&e));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("region example");
}
