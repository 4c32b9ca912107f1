// Every example compiles into this test target and must run cleanly.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }
    };
}

example!(cantor_function);
example!(region_algebra);
example!(urysohn_separation);
example!(classical_comparison);
example!(tietze_extension);
example!(tietze_general);
example!(staircase_svg);
example!(file_round_trip);

#[test]
fn cantor_function_runs() {
    cantor_function::run_example().unwrap();
}

#[test]
fn region_algebra_runs() {
    region_algebra::run_example().unwrap();
}

#[test]
fn urysohn_separation_runs() {
    urysohn_separation::run_example().unwrap();
}

#[test]
fn classical_comparison_runs() {
    classical_comparison::run_example().unwrap();
}

#[test]
fn tietze_extension_runs() {
    tietze_extension::run_example().unwrap();
}

#[test]
fn tietze_general_runs() {
    tietze_general::run_example().unwrap();
}

#[test]
fn staircase_svg_runs() {
    staircase_svg::run_example().unwrap();
}

#[test]
fn file_round_trip_runs() {
    file_round_trip::run_example().unwrap();
}
