// The Cantor function on rationals, the endpoint sets and the dyadic
// substitution that inverts Φ.

use staircase::cantor::{approach, enumerate_endpoints, gamma, in_cantor, neighbors, phi, ternary};
use staircase::rational::{parse_unit, Dyadic};

pub fn run_example() -> staircase::Result<()> {
    for text in ["0", "1/4", "1/3", "1/2", "2/3", "3/4", "7/9", "1"] {
        let x = parse_unit(text)?;
        println!(
            "x = {text:>4}  ternary {:<12}  in C: {:<5}  phi = {}",
            ternary::expand(&x)?.to_string(),
            in_cantor(&x)?,
            phi(&x)?
        );
    }

    for level in 1..=3 {
        let pts: Vec<String> = enumerate_endpoints(level)?
            .iter()
            .map(|e| e.alpha().to_string())
            .collect();
        println!("L_{level} = {{{}}}", pts.join(", "));
    }

    let seven_ninths = enumerate_endpoints(2)?[1];
    let (below, above) = neighbors(&seven_ninths);
    let (q, l) = approach(&seven_ninths, 1)?;
    println!(
        "neighbours of {seven_ninths}: {below} < . < {above}; first approach points {q} and {l}"
    );

    for d in ["1/2", "3/4", "5/8"] {
        let d: Dyadic = d.parse()?;
        let c = gamma(d);
        println!("gamma({}) = {c}, phi back = {}", d.to_rational(), phi(&c)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cantor example");
}
