use facenum::classify::missing_faces;
use facenum::constructions::{cross_polytope_boundary, cyclic_boundary};
use facenum::face_ring::graded_betti_hochster;
use facenum::FieldSpec;

fn main() -> facenum::Result<()> {
    for (name, c) in [("octahedron", cross_polytope_boundary(3)?), ("C_3(6)", cyclic_boundary(3, 6)?)] {
        let table = graded_betti_hochster(&c, FieldSpec::Rationals, 22)?;
        println!("{name}: graded Betti numbers of the Stanley-Reisner ring");
        for (&(i, j), &b) in &table.entries {
            println!("  beta_({i},{j}) = {b}");
        }
        // The linear strand beta_(1,j) counts missing faces of size j.
        let mut sizes = vec![0usize; c.n() + 1];
        for f in missing_faces(&c) {
            sizes[f.len()] += 1;
        }
        println!("  missing faces by size: {:?}", &sizes[1..]);
    }
    Ok(())
}
