//! Benchmark inputs shared by the criterion targets.

use atinf_core::Poly;

pub fn parse(text: &str, vars: &[&str]) -> Poly {
    Poly::parse(text, vars).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Brieskorn-Pham germ `x^a + y^b` plus the `x^2*y + y^3` germ.
pub fn germs() -> Vec<(String, Poly)> {
    let mut out: Vec<(String, Poly)> = [(3, 4), (5, 5), (7, 8)]
        .iter()
        .map(|(a, b)| {
            let text = format!("x^{a} + y^{b}");
            let f = parse(&text, &["x", "y"]);
            (text, f)
        })
        .collect();
    out.push(("x^2*y + y^3".into(), parse("x^2*y + y^3", &["x", "y"])));
    out
}

/// Generators of the cyclic-3 ideal and a Jacobian ideal of a dense cubic.
pub fn ideals() -> Vec<(&'static str, Vec<Poly>)> {
    let xyz = ["x", "y", "z"];
    let cyclic = ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"].map(|t| parse(t, &xyz)).to_vec();
    let cubic = parse("x^3 + 2*y^3 + 3*z^3 - x*y*z + x^2 - y + 1", &xyz);
    vec![("cyclic-3", cyclic), ("cubic jacobian", cubic.gradient())]
}

/// Polynomials for the end-to-end analysis, with whether the
/// concentrated-homology override is needed.
pub fn pipeline_inputs() -> Vec<(&'static str, Poly, bool)> {
    vec![
        ("cusp x + x^2*y", parse("x + x^2*y", &["x", "y"]), false),
        ("fermat n=3 d=3", parse("x^3 + y^3 + z^3", &["x", "y", "z"]), false),
        ("critical line d=5", parse("z^2*x^3 + z^5", &["x", "z"]), true),
    ]
}
