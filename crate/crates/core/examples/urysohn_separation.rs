// A separating step function for two closed sets, its level sets and its
// verification report.

use staircase::rational::{parse_unit, Dyadic};
use staircase::region::{parse_region, ClosedRegion};
use staircase::urysohn::{build_family, verify_family, Side};

pub fn run_example() -> staircase::Result<()> {
    let a = ClosedRegion::new(parse_region("[0,1/10]")?)?;
    let b = ClosedRegion::new(parse_region("[9/10,1]")?)?;
    let fam = build_family(&a, &b, 2)?;

    for (p, u) in fam.opens() {
        println!("U_{p:<4} = {u}   (phi = {})", p.phi().to_rational());
    }
    println!("U_1    = {}", fam.top());

    for x in ["1/50", "2/5", "3/5", "4/5"] {
        let e = fam.evaluate(&parse_unit(x)?)?;
        println!("F({x}) = {}  via g = {}", e.value.to_rational(), e.g_index);
    }

    let half: Dyadic = "1/2".parse()?;
    println!("{{F <= 1/2}} = {}", fam.preimage(Side::Below, half)?);
    println!("{{F > 1/2}}  = {}", fam.preimage(Side::Above, half)?);
    let image: Vec<String> = fam
        .image_values()
        .iter()
        .map(|d| d.to_rational().to_string())
        .collect();
    println!("image = {{{}}}", image.join(", "));

    let deep = build_family(
        &ClosedRegion::new(parse_region("[0,1/10] u [1/2,3/5]")?)?,
        &b,
        8,
    )?;
    print!("{}", verify_family(&deep).render());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("urysohn example");
}
