//! Artinian reductions of Stanley–Reisner rings by random linear systems of
//! parameters, their Hilbert functions, socles and Lefschetz maps.

use facenum::constructions::{cyclic_boundary, klee_novik_boundary, rp2_six_vertex};
use facenum::face_ring::{hilbert_artinian, lefschetz_probe, random_lsop, socle_dims};
use facenum::invariants::corrected_h;
use facenum::FieldSpec;

fn main() -> facenum::Result<()> {
    let field = FieldSpec::generic();
    for (name, c) in [
        ("C_4(7)", cyclic_boundary(4, 7)?),
        ("torus", klee_novik_boundary(1, 4)?),
        ("RP2", rp2_six_vertex()),
    ] {
        let sys = random_lsop(&c, field, 1)?;
        let hilbert = hilbert_artinian(&c, &sys, c.d())?;
        let socle = socle_dims(&c, &sys)?;
        let hv = corrected_h(&c, field)?;
        println!("{name} over {field}");
        println!("  Hilbert function {hilbert:?} (h {:?}, h' {:?})", hv.h, hv.h_prime);
        println!("  socle            {socle:?}");
        let probe = lefschetz_probe(&c, field, 1)?;
        println!("  weak Lefschetz {}, strong Lefschetz {}", probe.weak_holds(), probe.strong_holds());
    }
    Ok(())
}
