//! Reduced Betti numbers depend on the field: RP² has 2-torsion.

use facenum::constructions::{klee_novik_boundary, rp2_six_vertex};
use facenum::homology::{euler_characteristic, is_orientable, reduced_betti};
use facenum::FieldSpec;

fn main() -> facenum::Result<()> {
    let fields = [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)];
    for (name, c) in [("RP2 (6 vertices)", rp2_six_vertex()), ("torus", klee_novik_boundary(1, 4)?)] {
        println!("{name}: reduced Euler characteristic {}", euler_characteristic(&c)?);
        for field in fields {
            let b = reduced_betti(&c, field)?;
            let orientable = is_orientable(&c, field)?;
            println!("  over {field}: betti {:?}, orientable {orientable}", b.entries());
        }
    }
    Ok(())
}
