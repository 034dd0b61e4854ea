//! Every construction family, built from its textual spec.

use facenum::constructions::{build, ConstructionSpec};
use facenum::invariants::h_vector;

const SPECS: &[&str] = &[
    "simplex d=3",
    "simplex-boundary d=4",
    "cross-polytope d=3",
    "cyclic d=4 n=8",
    "stacked-ball d=3 n=7 seed=2",
    "stacked d=4 n=9",
    "stacked-cross-polytopal d=3 k=3",
    "join-of-cycles k=2 n=10",
    "klee-novik r=1 m=5",
    "rp2-6",
    "bnd-klee-novik r=1 m=4",
    "barycentric base=[cross-polytope d=3]",
    "connected-sum parts=[cyclic d=3 n=6 + stacked d=3 n=6]",
];

fn main() -> facenum::Result<()> {
    for text in SPECS {
        let spec: ConstructionSpec = text.parse()?;
        let built = build(&spec)?;
        let c = &built.complex;
        println!("{spec:<36} vertices={:<3} facets={:<4} h={:?}", c.n(), c.facets().len(), h_vector(c)?);
    }
    Ok(())
}
