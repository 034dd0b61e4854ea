//! Library values checked against the dense brute-force oracles in `common`.

mod common;

use common::*;
use facenum::classify;
use facenum::constructions::{self, Family};
use facenum::face_ring;
use facenum::homology;
use facenum::invariants;
use facenum::{FieldSpec, SimplicialComplex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)];

fn extra_complexes() -> Vec<SimplicialComplex> {
    vec![
        SimplicialComplex::from_facets([[1, 2, 3], [1, 2, 4], [1, 2, 5]]).unwrap(),
        SimplicialComplex::from_facets(vec![vec![1, 2, 3], vec![3, 4], vec![5]]).unwrap(),
        constructions::stacked_ball(7, 3, Some(4)).unwrap(),
        constructions::klee_novik_ball(1, 4).unwrap(),
        constructions::simplex_boundary(3).unwrap().cone().unwrap(),
    ]
}

fn everything() -> Vec<(String, SimplicialComplex)> {
    closed_suite()
        .iter()
        .map(|s| (s.to_string(), construct(s)))
        .chain(extra_complexes().into_iter().enumerate().map(|(i, c)| (format!("extra #{i}"), c)))
        .collect()
}

#[test]
fn f_and_h_vectors_match_subset_enumeration() {
    for (name, c) in everything() {
        let faces = all_faces(&facets_of(&c));
        let f = f_vector(&faces);
        assert_eq!(c.f_vector().entries(), &f[..], "{name}");
        assert_eq!(invariants::h_vector(&c).unwrap(), h_from_f(&f), "{name}");
    }
}

#[test]
fn betti_numbers_match_dense_elimination() {
    for (name, c) in everything() {
        let faces = all_faces(&facets_of(&c));
        for field in FIELDS {
            let lib = homology::reduced_betti(&c, field).unwrap();
            assert_eq!(lib.entries(), &betti(&faces, field)[..], "{name} over {field}");
        }
    }
}

#[test]
fn torsion_separates_gf2_from_q_on_rp2() {
    let faces = all_faces(&facets_of(&constructions::rp2_six_vertex()));
    assert_eq!(betti(&faces, FieldSpec::Rationals), vec![0, 0, 0, 0]);
    assert_eq!(betti(&faces, FieldSpec::Prime(2)), vec![0, 0, 1, 1]);
    assert_eq!(betti(&faces, FieldSpec::Prime(3)), vec![0, 0, 0, 0]);
}

#[test]
fn cyclic_facets_agree_with_moment_curve_geometry() {
    for d in 2..=5 {
        for n in d + 1..=9 {
            let c = constructions::cyclic_boundary(d, n).unwrap();
            let lib: std::collections::BTreeSet<Vec<usize>> = facets_of(&c).into_iter().collect();
            assert_eq!(lib, cyclic_facets_geometric(d, n), "C_{d}({n})");
        }
    }
}

/// `h′` and `h″` evaluated straight from their definitions with dense Betti numbers.
fn corrected_by_hand(c: &SimplicialComplex, field: FieldSpec) -> (Vec<i64>, Vec<i64>) {
    let faces = all_faces(&facets_of(c));
    let h = h_from_f(&f_vector(&faces));
    let b = betti(&faces, field);
    let beta = |i: i64| if i + 1 >= 0 { b.get((i + 1) as usize).copied().unwrap_or(0) as i64 } else { 0 };
    let d = h.len() as i64 - 1;
    let hp: Vec<i64> = (0..=d)
        .map(|j| h[j as usize] + binom(d, j) * (1..j).map(|i| (-1i64).pow((j - i - 1) as u32) * beta(i - 1)).sum::<i64>())
        .collect();
    let mut hpp: Vec<i64> = (0..d).map(|j| hp[j as usize] - binom(d, j) * beta(j - 1)).collect();
    hpp.push(beta(d - 1));
    (hp, hpp)
}

#[test]
fn known_vectors() {
    let c47 = constructions::cyclic_boundary(4, 7).unwrap();
    assert_eq!(invariants::h_vector(&c47).unwrap(), vec![1, 3, 6, 3, 1]);
    assert_eq!(h_from_f(&f_vector(&all_faces(&facets_of(&c47)))), vec![1, 3, 6, 3, 1]);

    let st = constructions::stacked_sphere(7, 4, None).unwrap();
    assert_eq!(invariants::h_vector(&st).unwrap(), vec![1, 3, 3, 3, 1]);
    assert_eq!(h_from_f(&f_vector(&all_faces(&facets_of(&st)))), vec![1, 3, 3, 3, 1]);

    let rp2 = constructions::rp2_six_vertex();
    assert_eq!(invariants::h_double_prime(&rp2, FieldSpec::gf2()).unwrap(), vec![1, 3, 3, 1]);
    assert_eq!(corrected_by_hand(&rp2, FieldSpec::gf2()).1, vec![1, 3, 3, 1]);

    let torus = constructions::klee_novik_boundary(1, 4).unwrap();
    let corrected = invariants::corrected_h(&torus, FieldSpec::Rationals).unwrap();
    assert_eq!(corrected.h, vec![1, 5, 11, -1]);
    assert_eq!(corrected.h_prime, vec![1, 5, 11, 1]);
    assert_eq!(corrected.h_double_prime, vec![1, 5, 5, 1]);
    assert_eq!(corrected_by_hand(&torus, FieldSpec::Rationals), (vec![1, 5, 11, 1], vec![1, 5, 5, 1]));

    let oct = constructions::cross_polytope_boundary(3).unwrap();
    assert_eq!(invariants::gamma_vector(&invariants::h_vector(&oct).unwrap()).unwrap(), vec![1, 0]);
    let table = face_ring::graded_betti_hochster(&oct, FieldSpec::Rationals, 22).unwrap();
    let entries: Vec<_> = table.entries.iter().map(|(&k, &v)| (k, v)).collect();
    assert_eq!(entries, vec![((1, 2), 3), ((2, 4), 3), ((3, 6), 1)]);
}

#[test]
fn corrected_vectors_match_definitions_on_the_suite() {
    for (name, c) in everything() {
        for field in [FieldSpec::Rationals, FieldSpec::gf2()] {
            let lib = invariants::corrected_h(&c, field).unwrap();
            let (hp, hpp) = corrected_by_hand(&c, field);
            assert_eq!(lib.h_prime, hp, "{name} over {field}");
            assert_eq!(lib.h_double_prime, hpp, "{name} over {field}");
        }
    }
}

#[test]
fn hochster_linear_strand_counts_missing_faces() {
    for (name, c) in everything().into_iter().filter(|(_, c)| c.n() <= 12) {
        let faces = all_faces(&facets_of(&c));
        let counts = missing_face_counts(&faces, c.n());
        let table = face_ring::graded_betti_hochster(&c, FieldSpec::Rationals, 22).unwrap();
        for j in 1..=c.n() {
            assert_eq!(table.get(1, j), counts[j], "{name}: β_(1,{j})");
        }
        let lib: Vec<u64> = (1..=c.n()).map(|k| classify::missing_faces(&c).iter().filter(|f| f.len() == k).count() as u64).collect();
        assert_eq!(lib, counts[1..], "{name}");
    }
}

#[test]
fn sigma_matches_subset_enumeration() {
    for (name, c) in everything().into_iter().filter(|(_, c)| c.n() <= 9) {
        let faces = all_faces(&facets_of(&c));
        for field in [FieldSpec::Rationals, FieldSpec::gf2()] {
            let lib = invariants::sigma_vector(&c, field, 22).unwrap();
            assert_eq!(lib, sigma(&faces, c.n(), c.d() + 1, field), "{name} over {field}");
        }
    }
}

#[test]
fn mu_matches_link_by_link_enumeration() {
    for (name, c) in everything().into_iter().filter(|(_, c)| c.n() <= 9) {
        let faces = all_faces(&facets_of(&c));
        let d = c.d();
        let mut mu = vec![BigRational::zero(); d];
        for v in 0..c.n() {
            let link: Faces = faces
                .iter()
                .filter(|s| !s.contains(&v) && faces.contains(&{
                    let mut t = (*s).clone();
                    t.push(v);
                    t.sort();
                    t
                }))
                .cloned()
                .collect();
            let verts: Vec<usize> = link.iter().flatten().copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
            let relabel: Faces =
                link.iter().map(|s| s.iter().map(|x| verts.binary_search(x).unwrap()).collect()).collect();
            let s = sigma(&relabel, verts.len(), d, FieldSpec::Rationals);
            for (j, slot) in mu.iter_mut().enumerate() {
                *slot += &s[j] / BigRational::from_integer(BigInt::from(verts.len() + 1));
            }
        }
        let lib = invariants::mu_vector(&c, FieldSpec::Rationals, 22).unwrap();
        assert_eq!(lib.mu, mu, "{name}");
    }
}

#[test]
fn neighborliness_matches_subset_check() {
    for (name, c) in everything() {
        let faces = all_faces(&facets_of(&c));
        assert_eq!(classify::neighborliness(&c), neighborliness(&faces, c.n()), "{name}");
    }
}

#[test]
fn macaulay_and_kruskal_katona_match_compression() {
    for a in 0..=4i64 {
        for b in 0..=11i64 {
            for c in 0..=22i64 {
                let v = [1, a, b, c];
                assert_eq!(face_ring::is_m_sequence(&v).unwrap(), is_m_sequence_brute(&v), "M {v:?}");
                assert_eq!(face_ring::is_f_vector(&v).unwrap(), is_f_vector_brute(&v), "KK {v:?}");
            }
        }
    }
    assert!(!face_ring::is_m_sequence(&[1, 2, 4]).unwrap());
    assert!(!face_ring::is_f_vector(&[1, 3, 4]).unwrap());
}

#[test]
fn artinian_hilbert_function_matches_the_direct_computation() {
    for (name, c) in everything().into_iter().filter(|(_, c)| c.n() <= 9) {
        let sys = face_ring::random_lsop(&c, FieldSpec::generic(), 7).unwrap();
        let d = c.d();
        assert_eq!(
            face_ring::hilbert_artinian(&c, &sys, d).unwrap(),
            face_ring::hilbert_artinian_direct(&c, &sys, d).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn klee_novik_ball_interior_faces_start_high() {
    for m in 3..=6 {
        for r in 0..=m - 2 {
            let ball = constructions::klee_novik_ball(r, m).unwrap();
            let bd = classify::boundary_complex(&ball, FieldSpec::Rationals).unwrap();
            let boundary = all_faces(&facets_of(&bd).iter().map(|f| f.iter().map(|&v| ball.vertex_of(bd.label(v)).unwrap()).collect()).collect::<Vec<_>>());
            let interior_low = all_faces(&facets_of(&ball))
                .into_iter()
                .filter(|s| !s.is_empty() && s.len() < m - r && !boundary.contains(s))
                .count();
            assert_eq!(interior_low, 0, "B({r},{m})");
        }
    }
}

#[test]
fn family_tags_cover_every_family() {
    for f in Family::ALL {
        assert_eq!(f.tag().parse::<Family>().unwrap(), f);
    }
}
