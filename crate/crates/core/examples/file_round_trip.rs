// Problem file in, family file out, and the same report after reloading.

use staircase::io::{to_json, FamilyForm, ProblemFile};
use staircase::urysohn::{build_family, verify_family};

const PROBLEM: &str = r#"{
  "kind": "urysohn",
  "A": "[0,1/10]",
  "B": "[9/10,1]",
  "depth": 2
}"#;

pub fn run_example() -> staircase::Result<()> {
    let problem = ProblemFile::parse(PROBLEM)?;
    let (a, b) = problem.urysohn_sets()?;
    let fam = build_family(&a, &b, problem.depth.unwrap_or(2))?;
    let stored = to_json(&FamilyForm::of(&fam));
    println!("{stored}");
    let loaded = FamilyForm::parse(&stored)?;
    let before = verify_family(&fam).render();
    let after = verify_family(&loaded).render();
    println!("reports identical: {}", before == after);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("round trip example");
}
