//! Shared fixtures for the benchmarks.

use fpbetti::{parse_ideal_spec, IdealSpec};

pub const FIXTURES: &[(&str, &str)] = &[
    (
        "hypersurfaces",
        "xvars: 2\nyvars: 2\nI: x1^2; x2^2\nI': y1^2; y2^2\n",
    ),
    (
        "mixed",
        "xvars: 3\nyvars: 3\nI: x1; x2^2; x2*x3\nI': y1^2; y2*y3; y3^3\n",
    ),
    (
        "wide",
        "xvars: 4\nyvars: 3\nI: x1*x2; x3^2; x4^2\nI': y1^2; y2^2\n",
    ),
];

pub fn fixture(text: &str) -> IdealSpec {
    parse_ideal_spec(text).expect("fixture parses")
}
