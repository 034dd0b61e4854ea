use facenum::classify::classify;
use facenum::constructions::{klee_novik_ball, rp2_six_vertex, stacked_ball};
use facenum::{FieldSpec, SimplicialComplex};

fn yes(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn main() -> facenum::Result<()> {
    let cases: Vec<(&str, SimplicialComplex)> = vec![
        ("three triangles on an edge", SimplicialComplex::from_facets([[1, 2, 3], [1, 2, 4], [1, 2, 5]])?),
        ("RP2", rp2_six_vertex()),
        ("stacked 3-ball", stacked_ball(8, 3, Some(5))?),
        ("B(1,4)", klee_novik_ball(1, 4)?),
    ];
    println!("{:<28} {:>6} {:>8} {:>6} {:>6} {:>6} {:>8}", "complex", "pseudo", "manifold", "ball", "sphere", "flag", "stacked");
    for (name, c) in &cases {
        let r = classify(c, FieldSpec::Rationals)?;
        let stacked = r.r_stackedness.map_or("-".to_string(), |s| s.to_string());
        println!(
            "{:<28} {:>6} {:>8} {:>6} {:>6} {:>6} {:>8}",
            name,
            if r.pseudomanifold { "yes" } else { "no" },
            yes(Some(r.is_any_manifold())),
            yes(r.homology_ball),
            yes(r.homology_sphere),
            yes(r.flag),
            stacked,
        );
    }
    Ok(())
}
