// Renders F_n with its nested bands and writes the SVG to the temp directory.

use staircase::plot::family_svg;
use staircase::region::{parse_region, ClosedRegion};
use staircase::urysohn::build_family;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = ClosedRegion::new(parse_region("[0,1/10] u [1/2,11/20]")?)?;
    let b = ClosedRegion::new(parse_region("[3/10,7/20] u [9/10,1]")?)?;
    let fam = build_family(&a, &b, 5)?;
    let svg = family_svg(&fam);
    let path = std::env::temp_dir().join("staircase_example.svg");
    std::fs::write(&path, &svg)?;
    println!("wrote {} ({} bytes)", path.display(), svg.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("svg example");
}
