//! f-, h-, g- and γ-vectors of a few standard spheres.

use facenum::constructions::{cross_polytope_boundary, cyclic_boundary, stacked_sphere};
use facenum::invariants::{g_from_h, gamma_vector, h_vector, short_h};

fn main() -> facenum::Result<()> {
    let spheres = [
        ("cyclic C_4(8)", cyclic_boundary(4, 8)?),
        ("stacked 4-ball boundary on 8 vertices", stacked_sphere(8, 4, None)?),
        ("boundary of the 4-cross-polytope", cross_polytope_boundary(4)?),
    ];
    for (name, c) in &spheres {
        let h = h_vector(c)?;
        println!("{name}");
        println!("  f     = {:?}", c.f_vector().entries());
        println!("  h     = {h:?}");
        println!("  g     = {:?}", g_from_h(&h));
        println!("  ĥ     = {:?}", short_h(c)?);
        match gamma_vector(&h) {
            Ok(gamma) => println!("  gamma = {gamma:?}"),
            Err(e) => println!("  gamma: {e}"),
        }
    }
    Ok(())
}
