//! Reduced simplicial homology over a field.

use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{self, SparseMatrix};

/// Reduced Betti numbers `β_{-1}, β_0, …, β_{d-1}`, stored from index −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector(Vec<u64>);

impl BettiVector {
    pub fn new(entries: Vec<u64>) -> Self {
        BettiVector(entries)
    }

    /// `β_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1).ok().and_then(|j| self.0.get(j)).copied().unwrap_or(0)
    }

    /// Entries starting at `β_{-1}`.
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Entries `β_0, …, β_{d-1}`.
    pub fn from_zero(&self) -> &[u64] {
        self.0.get(1..).unwrap_or(&[])
    }

    /// `∑ (-1)^i β_i`.
    pub fn alternating_sum(&self) -> i64 {
        self.0.iter().enumerate().map(|(j, &b)| if j % 2 == 1 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// The boundary map `∂_k : C_k → C_{k-1}` of the augmented chain complex.
///
/// Rows are the sorted `(k-1)`-faces, columns the sorted `k`-faces. The sign
/// of vertex `v` in a face `F` is `(-1)^{position of v in F}`; for `k = 0` the
/// matrix is the all-ones augmentation row.
pub fn boundary_matrix(complex: &SimplicialComplex, k: isize) -> SparseMatrix {
    let lower = complex.all_faces(k - 1);
    let upper = complex.all_faces(k);
    boundary_between(&lower, &upper)
}

fn boundary_between(lower: &[Face], upper: &[Face]) -> SparseMatrix {
    let index: HashMap<&Face, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = SparseMatrix::new(lower.len());
    for face in upper {
        let col = face
            .vertices()
            .enumerate()
            .map(|(pos, v)| {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                (index[&face.without(v)], sign)
            })
            .collect();
        m.cols.push(col);
    }
    m
}

/// Reduced Betti numbers from faces grouped by dimension (index `i` holding
/// the `(i-1)`-faces, as produced by [`SimplicialComplex::faces_by_dim`]).
pub fn betti_from_faces(faces: &[Vec<Face>], field: FieldSpec) -> BettiVector {
    if faces.is_empty() {
        return BettiVector(Vec::new());
    }
    // ranks[i] = rank of the map out of faces[i]
    let mut ranks = vec![0usize; faces.len() + 1];
    for i in 1..faces.len() {
        let m = boundary_between(&faces[i - 1], &faces[i]);
        ranks[i] = if i == 1 {
            usize::from(!faces[1].is_empty())
        } else {
            linalg::rank(&m, field)
        };
    }
    let betti = (0..faces.len()).map(|i| (faces[i].len() - ranks[i] - ranks[i + 1]) as u64).collect();
    BettiVector(betti)
}

/// Reduced Betti numbers over `field`.
pub fn reduced_betti(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiVector> {
    complex.require_nonvoid("homology")?;
    Ok(betti_from_faces(&complex.faces_by_dim(), field))
}

/// Reduced Euler characteristic `∑_{i ≥ -1} (-1)^i f_i`.
pub fn euler_characteristic(complex: &SimplicialComplex) -> Result<i64> {
    complex.require_nonvoid("the Euler characteristic")?;
    Ok(reduced_euler_from_f(complex.f_vector().entries()))
}

/// `χ̃` from f-numbers stored from `f_{-1}`.
pub fn reduced_euler_from_f(f: &[u64]) -> i64 {
    f.iter().enumerate().map(|(j, &x)| if j % 2 == 1 { x as i64 } else { -(x as i64) }).sum()
}

/// Whether a closed homology manifold is orientable over `field`: its top
/// Betti number equals the number of connected components.
pub fn is_orientable(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    complex.require_nonvoid("orientability")?;
    if !crate::classify::is_closed_homology_manifold(complex, field) {
        return Err(Error::domain("orientability is only defined here for closed homology manifolds"));
    }
    let top = complex.dim().unwrap_or(-1);
    let beta = reduced_betti(complex, field)?;
    let mut b = beta.get(top);
    if top == 0 {
        // reduced β_0 undercounts components by one
        b += 1;
    }
    Ok(b as usize == complex.num_components())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    fn octahedron() -> SimplicialComplex {
        let c4 = cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1]]);
        c4.suspension().unwrap()
    }

    fn rp2() -> SimplicialComplex {
        cx(&[
            &[1, 2, 3],
            &[1, 3, 4],
            &[1, 4, 5],
            &[1, 5, 6],
            &[1, 6, 2],
            &[2, 3, 5],
            &[3, 4, 6],
            &[4, 5, 2],
            &[5, 6, 3],
            &[6, 2, 4],
        ])
    }

    #[test]
    fn boundary_matrix_shapes_and_ranks() {
        let t = tetra_boundary();
        let d2 = boundary_matrix(&t, 2);
        assert_eq!((d2.rows, d2.ncols()), (6, 4));
        assert_eq!(linalg::rank(&d2, FieldSpec::Rationals), 3);
        let d0 = boundary_matrix(&t, 0);
        assert_eq!(d0.to_dense(), vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for c in [tetra_boundary(), octahedron(), rp2()] {
            for k in 0..=c.dim().unwrap() {
                let prod = boundary_matrix(&c, k).mul_dense(&boundary_matrix(&c, k + 1));
                assert!(prod.iter().flatten().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn betti_numbers_of_fixtures() {
        assert_eq!(reduced_betti(&octahedron(), FieldSpec::Rationals).unwrap().entries(), &[0, 0, 0, 1]);
        assert_eq!(reduced_betti(&rp2(), FieldSpec::Prime(2)).unwrap().entries(), &[0, 0, 1, 1]);
        assert_eq!(reduced_betti(&rp2(), FieldSpec::Rationals).unwrap().entries(), &[0, 0, 0, 0]);
        assert_eq!(reduced_betti(&rp2(), FieldSpec::Prime(3)).unwrap().entries(), &[0, 0, 0, 0]);
        let empty = SimplicialComplex::empty();
        assert_eq!(reduced_betti(&empty, FieldSpec::Rationals).unwrap().entries(), &[1]);
        let two = cx(&[&[1], &[2]]);
        assert_eq!(reduced_betti(&two, FieldSpec::Prime(2)).unwrap().entries(), &[0, 1]);
        assert!(reduced_betti(&SimplicialComplex::void(), FieldSpec::Rationals).is_err());
    }

    #[test]
    fn euler_characteristic_matches_betti() {
        for c in [tetra_boundary(), octahedron(), rp2(), SimplicialComplex::empty()] {
            let chi = euler_characteristic(&c).unwrap();
            for field in [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals] {
                assert_eq!(reduced_betti(&c, field).unwrap().alternating_sum(), chi);
            }
        }
        assert_eq!(euler_characteristic(&SimplicialComplex::empty()).unwrap(), -1);
    }

    #[test]
    fn orientability() {
        assert!(is_orientable(&octahedron(), FieldSpec::Rationals).unwrap());
        assert!(!is_orientable(&rp2(), FieldSpec::Rationals).unwrap());
        assert!(is_orientable(&rp2(), FieldSpec::Prime(2)).unwrap());
        let two = octahedron().disjoint_union(&octahedron()).unwrap();
        assert!(is_orientable(&two, FieldSpec::Rationals).unwrap());
        let fan = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert!(matches!(is_orientable(&fan, FieldSpec::Rationals), Err(Error::Domain(_))));
    }
}
