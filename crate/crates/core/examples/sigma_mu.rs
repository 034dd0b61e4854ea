//! σ- and μ-numbers: averages of Betti numbers of induced subcomplexes and of
//! vertex links. They bound Betti numbers from above, like Morse inequalities.

use facenum::audit::ratio_string;
use facenum::constructions::{klee_novik_boundary, stacked_sphere};
use facenum::homology::reduced_betti;
use facenum::invariants::mu_vector;
use facenum::FieldSpec;

fn main() -> facenum::Result<()> {
    for (name, c) in [("torus", klee_novik_boundary(1, 4)?), ("stacked 3-sphere", stacked_sphere(8, 4, None)?)] {
        let ms = mu_vector(&c, FieldSpec::Rationals, 22)?;
        let show = |v: &[num_rational::BigRational]| v.iter().map(ratio_string).collect::<Vec<_>>().join(", ");
        println!("{name}");
        if let Some(sigma) = &ms.sigma {
            println!("  sigma = [{}]", show(sigma));
        }
        println!("  mu    = [{}]", show(&ms.mu));
        println!("  betti = {:?}", reduced_betti(&c, FieldSpec::Rationals)?.entries());
    }
    Ok(())
}
