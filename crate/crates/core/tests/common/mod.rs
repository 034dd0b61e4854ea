//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works on plain vertex-index facet lists and uses dense
//! elimination, so it shares no code with the library beyond reading facets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use facenum::constructions::{build, ConstructionSpec, Family};
use facenum::{FieldSpec, SimplicialComplex};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Faces = BTreeSet<Vec<usize>>;

pub fn facets_of(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    c.facets().iter().map(|f| f.to_vec()).collect()
}

/// Every subset of every facet, the empty face included.
pub fn all_faces(facets: &[Vec<usize>]) -> Faces {
    let mut out = Faces::new();
    for f in facets {
        for k in 0..=f.len() {
            for s in f.iter().copied().combinations(k) {
                out.insert(s);
            }
        }
    }
    out
}

/// `f_{-1}, f_0, …`
pub fn f_vector(faces: &Faces) -> Vec<u64> {
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut f = vec![0u64; top + 1];
    for s in faces {
        f[s.len()] += 1;
    }
    f
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_j = ∑_i (-1)^{j-i} C(d-i, j-i) f_{i-1}`.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|j| (0..=j).map(|i| (-1i64).pow((j - i) as u32) * binom(d - i, j - i) * f[i as usize] as i64).sum())
        .collect()
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let m = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + p * p - m * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_q(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, piv);
        let lead = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let m = &rows[r][c] / &lead;
            for k in c..cols {
                let t = &m * &rows[rank][k];
                rows[r][k] -= t;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the boundary map from `k`-element faces to `(k-1)`-element faces.
fn boundary_rank(faces: &Faces, k: usize, field: FieldSpec) -> usize {
    let upper: Vec<&Vec<usize>> = faces.iter().filter(|s| s.len() == k).collect();
    let lower: Vec<&Vec<usize>> = faces.iter().filter(|s| s.len() + 1 == k).collect();
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let entries = |s: &Vec<usize>| -> Vec<(usize, i64)> {
        (0..s.len())
            .map(|i| {
                let mut t = s.clone();
                t.remove(i);
                let row = lower.binary_search(&&t).expect("faces are closed under subsets");
                (row, if i % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    };
    match field {
        FieldSpec::Prime(p) => {
            let p = p as u64;
            let rows = upper
                .iter()
                .map(|s| {
                    let mut row = vec![0u64; lower.len()];
                    for (r, sign) in entries(s) {
                        row[r] = if sign > 0 { 1 } else { p - 1 } % p;
                    }
                    row
                })
                .collect();
            rank_mod_p(rows, p)
        }
        FieldSpec::Rationals => {
            let rows = upper
                .iter()
                .map(|s| {
                    let mut row = vec![BigRational::zero(); lower.len()];
                    for (r, sign) in entries(s) {
                        row[r] = BigRational::from_integer(sign.into());
                    }
                    row
                })
                .collect();
            rank_q(rows)
        }
    }
}

/// Reduced Betti numbers `β_{-1}, …, β_{top-1}` of a face set.
pub fn betti(faces: &Faces, field: FieldSpec) -> Vec<u64> {
    let f = f_vector(faces);
    let ranks: Vec<usize> = (0..=f.len()).map(|k| boundary_rank(faces, k, field)).collect();
    (0..f.len()).map(|k| (f[k] as usize - ranks[k] - ranks[k + 1]) as u64).collect()
}

pub fn induced(faces: &Faces, w: &[usize]) -> Faces {
    faces.iter().filter(|s| s.iter().all(|v| w.contains(v))).cloned().collect()
}

/// `σ_{j}` for `j = -1..len-1` by enumerating every vertex subset.
pub fn sigma(faces: &Faces, n: usize, len: usize, field: FieldSpec) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); len];
    for mask in 0u64..1 << n {
        let w: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let b = betti(&induced(faces, &w), field);
        let weight = BigRational::new(BigInt::one(), BigInt::from(binom(n as i64, w.len() as i64)));
        for (j, slot) in out.iter_mut().enumerate() {
            if let Some(&x) = b.get(j) {
                *slot += &weight * BigRational::from_integer(x.into());
            }
        }
    }
    out
}

/// Minimal non-faces, grouped by size.
pub fn missing_face_counts(faces: &Faces, n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for k in 1..=n {
        for s in (0..n).combinations(k) {
            if !faces.contains(&s) && (0..k).all(|i| faces.contains(&[&s[..i], &s[i + 1..]].concat())) {
                counts[k] += 1;
            }
        }
    }
    counts
}

/// Largest `k` such that every `k`-subset of the vertices is a face.
pub fn neighborliness(faces: &Faces, n: usize) -> usize {
    (1..=n).take_while(|&k| (0..n).combinations(k).all(|s| faces.contains(&s))).last().unwrap_or(0)
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else { return BigRational::zero() };
        if piv != c {
            m.swap(piv, c);
            acc = -acc;
        }
        acc *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    acc
}

/// Facets of the cyclic polytope on the moment curve at `t = 1..n`, found
/// as the `d`-subsets whose hyperplane leaves every other point on one side.
pub fn cyclic_facets_geometric(d: usize, n: usize) -> BTreeSet<Vec<usize>> {
    let point = |t: usize| -> Vec<BigRational> {
        let mut row = vec![BigRational::one()];
        row.extend((1..=d).map(|e| BigRational::from_integer(BigInt::from(t + 1).pow(e as u32))));
        row
    };
    (0..n)
        .combinations(d)
        .filter(|s| {
            let signs: BTreeSet<bool> = (0..n)
                .filter(|j| !s.contains(j))
                .map(|j| {
                    let mut m: Vec<_> = s.iter().map(|&i| point(i)).collect();
                    m.push(point(j));
                    det(m).is_positive()
                })
                .collect();
            signs.len() == 1
        })
        .collect()
}

/// Kruskal–Katona by compression: the first `f_i` sets of size `i+1` in
/// colex order must have their shadow among the first `f_{i-1}`.
pub fn is_f_vector_brute(v: &[i64]) -> bool {
    if v.is_empty() || v[0] != 1 || v.iter().any(|&x| x < 0) {
        return v.is_empty();
    }
    let ground = v.get(1).copied().unwrap_or(0) as usize;
    let colex = |k: usize| -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = (0..ground).combinations(k).collect();
        sets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        sets
    };
    for i in 2..v.len() {
        let want = v[i] as usize;
        let upper = colex(i);
        if want > upper.len() {
            return false;
        }
        let lower: BTreeSet<Vec<usize>> = colex(i - 1).into_iter().take(v[i - 1] as usize).collect();
        let closed = upper[..want]
            .iter()
            .all(|s| (0..s.len()).all(|j| lower.contains(&[&s[..j], &s[j + 1..]].concat())));
        if !closed {
            return false;
        }
    }
    true
}

/// Macaulay by compression: the first `h_i` monomials of degree `i` in
/// reverse lexicographic order must have all their divisors among the first
/// `h_{i-1}`.
pub fn is_m_sequence_brute(v: &[i64]) -> bool {
    if v.is_empty() || v[0] != 1 || v.iter().any(|&x| x < 0) {
        return v.is_empty();
    }
    let vars = v.get(1).copied().unwrap_or(0) as usize;
    let revlex = |deg: usize| -> Vec<Vec<usize>> {
        let mut ms: Vec<Vec<usize>> = (0..vars).combinations_with_replacement(deg).collect();
        ms.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        ms
    };
    for i in 2..v.len() {
        let want = v[i] as usize;
        let upper = revlex(i);
        if want > upper.len() {
            return false;
        }
        let lower: BTreeSet<Vec<usize>> = revlex(i - 1).into_iter().take(v[i - 1] as usize).collect();
        let closed = upper[..want]
            .iter()
            .all(|m| (0..m.len()).all(|j| lower.contains(&[&m[..j], &m[j + 1..]].concat())));
        if !closed {
            return false;
        }
    }
    true
}

pub fn spec(family: Family) -> ConstructionSpec {
    ConstructionSpec::new(family)
}

/// Closed manifolds from every family, small enough for dense oracles.
pub fn closed_suite() -> Vec<ConstructionSpec> {
    let mut out = Vec::new();
    for d in 2..=5 {
        out.push(spec(Family::SimplexBoundary).d(d));
        out.push(spec(Family::CrossPolytope).d(d));
    }
    for d in 3..=5 {
        for n in d + 2..=d + 4 {
            out.push(spec(Family::Cyclic).d(d).n(n));
            out.push(spec(Family::Stacked).d(d).n(n));
        }
    }
    for (k, d) in [(2, 3), (2, 4)] {
        out.push(spec(Family::StackedCrossPolytopal).k(k).d(d));
    }
    for (r, m) in [(0, 3), (1, 3), (0, 4), (1, 4), (2, 4)] {
        out.push(spec(Family::KleeNovikBoundary).r(r).m(m));
    }
    out.push(spec(Family::ProjectivePlane));
    out.push(spec(Family::JoinOfCycles).k(2).n(8));
    out.push(spec(Family::Barycentric).base(spec(Family::SimplexBoundary).d(3)));
    out
}

pub fn construct(s: &ConstructionSpec) -> SimplicialComplex {
    build(s).unwrap_or_else(|e| panic!("{s}: {e}")).complex
}
