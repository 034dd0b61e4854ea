//! Enumerative invariants: f ↔ h, g, the Betti-corrected h′, h″, g″ and g̃,
//! γ, the short h-vector, σ and μ, and the Dehn–Sommerville residuals.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify;
use crate::complex::{FVector, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{self, BettiVector};

/// Default vertex cap for the `2^n` subset enumerations behind σ and μ.
pub const DEFAULT_MU_CAP: usize = 22;

/// `C(n, k)`, zero unless `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    num_integer::binomial(n as i128, k as i128) as i64
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 { 1 } else { -1 }
}

/// `h_j = ∑_{i ≤ j} (-1)^{j-i} C(d-i, j-i) f_{i-1}` for `j = 0..d`.
pub fn h_from_f(f: &FVector, d: usize) -> Result<Vec<i64>> {
    if f.entries().len() != d + 1 {
        return Err(Error::domain(format!("f-vector has {} entries, expected d+1 = {}", f.entries().len(), d + 1)));
    }
    let d = d as i64;
    Ok((0..=d)
        .map(|j| (0..=j).map(|i| sign(j - i) * binomial(d - i, j - i) * f.get(i as isize - 1) as i64).sum())
        .collect())
}

/// `f_{j-1} = ∑_{i ≤ j} C(d-i, j-i) h_i`; fails if an entry comes out negative.
pub fn f_from_h(h: &[i64]) -> Result<FVector> {
    let d = h.len() as i64 - 1;
    let f: Vec<i64> = (0..=d).map(|j| (0..=j).map(|i| binomial(d - i, j - i) * h[i as usize]).sum()).collect();
    if let Some(bad) = f.iter().find(|&&x| x < 0) {
        return Err(Error::domain(format!("h-vector maps to a negative face count {bad}")));
    }
    Ok(FVector::new(f.into_iter().map(|x| x as u64).collect()))
}

pub fn h_vector(complex: &SimplicialComplex) -> Result<Vec<i64>> {
    complex.require_nonvoid("the h-vector")?;
    h_from_f(&complex.f_vector(), complex.d())
}

/// `g_j = h_j - h_{j-1}` for `j = 0..⌊d/2⌋`.
pub fn g_from_h(h: &[i64]) -> Vec<i64> {
    let d = h.len().saturating_sub(1);
    (0..=d / 2).map(|j| h[j] - if j > 0 { h[j - 1] } else { 0 }).collect()
}

/// `h′_j = h_j + C(d,j) ∑_{i=1}^{j-1} (-1)^{j-i-1} β_{i-1}`.
pub fn h_prime_from(h: &[i64], betti: &BettiVector) -> Vec<i64> {
    let d = h.len() as i64 - 1;
    (0..=d)
        .map(|j| {
            let s: i64 = (1..j).map(|i| sign(j - i - 1) * betti.get(i as isize - 1) as i64).sum();
            h[j as usize] + binomial(d, j) * s
        })
        .collect()
}

/// `h″_j = h_j - C(d,j) ∑_{i=0}^{j} (-1)^{j-i} β_{i-1}` for `j < d`, and `h″_d = β_{d-1}`.
pub fn h_double_prime_from(h: &[i64], betti: &BettiVector) -> Vec<i64> {
    let d = h.len() as i64 - 1;
    (0..=d)
        .map(|j| {
            if j == d {
                return betti.get(d as isize - 1) as i64;
            }
            let s: i64 = (0..=j).map(|i| sign(j - i) * betti.get(i as isize - 1) as i64).sum();
            h[j as usize] - binomial(d, j) * s
        })
        .collect()
}

/// `g̃_r` for `r = 0..⌊d/2⌋`, evaluated by both defining formulas.
///
/// Panics if the two disagree, which would mean a bookkeeping bug.
pub fn tilde_g_from(h: &[i64], betti: &BettiVector) -> Vec<i64> {
    let d = h.len() as i64 - 1;
    let g = g_from_h(h);
    let hpp = h_double_prime_from(h, betti);
    (0..=d / 2)
        .map(|r| {
            let s: i64 = (1..=r).map(|j| sign(r - j) * betti.get(j as isize - 1) as i64).sum();
            let direct = g[r as usize] - binomial(d + 1, r) * s;
            if r >= 1 && r < d {
                let via_hpp =
                    hpp[r as usize] - hpp[r as usize - 1] - binomial(d, r - 1) * betti.get(r as isize - 1) as i64;
                assert_eq!(direct, via_hpp, "the two g̃ formulas disagree at r = {r}");
            }
            direct
        })
        .collect()
}

/// All Betti-corrected vectors of a complex over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrectedHVectors {
    pub field: FieldSpec,
    pub betti: Vec<u64>,
    pub h: Vec<i64>,
    pub h_prime: Vec<i64>,
    pub h_double_prime: Vec<i64>,
    /// `g″_j = h″_j - h″_{j-1}` for `j ≤ ⌊d/2⌋`.
    pub g_double_prime: Vec<i64>,
    pub tilde_g: Vec<i64>,
}

pub fn corrected_h(complex: &SimplicialComplex, field: FieldSpec) -> Result<CorrectedHVectors> {
    let h = h_vector(complex)?;
    let betti = homology::reduced_betti(complex, field)?;
    let hpp = h_double_prime_from(&h, &betti);
    Ok(CorrectedHVectors {
        field,
        betti: betti.entries().to_vec(),
        h_prime: h_prime_from(&h, &betti),
        g_double_prime: g_from_h(&hpp),
        tilde_g: tilde_g_from(&h, &betti),
        h_double_prime: hpp,
        h,
    })
}

pub fn h_prime(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<i64>> {
    Ok(corrected_h(complex, field)?.h_prime)
}

pub fn h_double_prime(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<i64>> {
    Ok(corrected_h(complex, field)?.h_double_prime)
}

pub fn tilde_g(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<i64>> {
    if complex.d() < 2 {
        return Err(Error::domain("g̃ needs d ≥ 2"));
    }
    Ok(corrected_h(complex, field)?.tilde_g)
}

/// Coefficients of `∑ h_j t^j` in the basis `t^i (1+t)^{d-2i}`.
pub fn gamma_vector(h: &[i64]) -> Result<Vec<i64>> {
    let d = h.len().saturating_sub(1);
    if (0..=d).any(|j| h[j] != h[d - j]) {
        return Err(Error::NotEulerian(format!("{h:?}")));
    }
    let mut rest = h.to_vec();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let c = rest[i];
        gamma.push(c);
        let width = (d - 2 * i) as i64;
        for j in 0..=width {
            rest[i + j as usize] -= c * binomial(width, j);
        }
    }
    debug_assert!(rest.iter().all(|&x| x == 0));
    Ok(gamma)
}

/// Expands `∑ γ_i t^i (1+t)^{d-2i}` back into h-numbers.
pub fn h_from_gamma(gamma: &[i64], d: usize) -> Vec<i64> {
    let mut h = vec![0i64; d + 1];
    for (i, &c) in gamma.iter().enumerate() {
        let width = d as i64 - 2 * i as i64;
        for j in 0..=width.max(-1) {
            h[i + j as usize] += c * binomial(width, j);
        }
    }
    h
}

/// `ĥ_i = ∑_v h_i(lk v)` for `i = 0..d-1`.
pub fn short_h(complex: &SimplicialComplex) -> Result<Vec<i64>> {
    complex.require_nonvoid("the short h-vector")?;
    if !complex.is_pure() {
        return Err(Error::domain("the short h-vector needs a pure complex"));
    }
    let mut out = vec![0i64; complex.d()];
    for v in 0..complex.n() {
        let link = complex.link_unchecked(&Face::singleton(v));
        for (acc, x) in out.iter_mut().zip(h_vector(&link)?) {
            *acc += x;
        }
    }
    Ok(out)
}

/// Recovers `f_j = (1/(j+1)) ∑_i C(d-1-i, j-i) ĥ_i`; each vertex link counts
/// every `j`-face once per vertex.
pub fn f_from_short_h(hhat: &[i64]) -> Vec<BigRational> {
    let d = hhat.len() as i64;
    (0..d)
        .map(|j| {
            let s: i64 = (0..=j).map(|i| binomial(d - 1 - i, j - i) * hhat[i as usize]).sum();
            BigRational::new(BigInt::from(s), BigInt::from(j + 1))
        })
        .collect()
}

/// σ and μ over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuSigma {
    pub field: FieldSpec,
    /// `σ_{-1}, …, σ_{d-1}`; absent when the complex itself exceeds the cap.
    pub sigma: Option<Vec<BigRational>>,
    /// `μ_0, …, μ_{d-1}`.
    pub mu: Vec<BigRational>,
    /// Set when some vertex is isolated; its link `{∅}` then contributes
    /// `σ_{-1}({∅}) / 1 = 1` to `μ_0`.
    pub isolated_vertex_convention: bool,
}

/// `σ_j = ∑_{W ⊆ V} β_j(Δ_W) / C(n, |W|)` for `j = -1..d-1`.
///
/// Enumerates all `2^n` induced subcomplexes, so `n` above `cap` is refused.
pub fn sigma_vector(complex: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<Vec<BigRational>> {
    complex.require_nonvoid("σ")?;
    let n = complex.n();
    if n > cap || n > 63 {
        return Err(Error::Resource(format!(
            "σ enumerates 2^{n} induced subcomplexes; the vertex cap is {}",
            cap.min(63)
        )));
    }
    let counts = induced_betti_counts(complex, field);
    let d = complex.d();
    Ok((0..=d)
        .map(|j| {
            (0..=n).fold(BigRational::from_integer(0.into()), |acc, s| {
                acc + BigRational::new(BigInt::from(counts[j][s]), BigInt::from(binomial(n as i64, s as i64)))
            })
        })
        .collect())
}

/// `counts[j+1][s] = ∑_{|W| = s} β_j(Δ_W)`, by Gray-code walks over blocks of subsets.
fn induced_betti_counts(complex: &SimplicialComplex, field: FieldSpec) -> Vec<Vec<u64>> {
    let n = complex.n();
    let d = complex.d();
    let faces: Vec<Face> = complex.faces_by_dim().into_iter().skip(1).flatten().collect();
    let mut star: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, f) in faces.iter().enumerate() {
        for v in f.vertices() {
            star[v].push(idx);
        }
    }
    let block_bits = n.min(10);
    let blocks = 1u64 << (n - block_bits);
    let partials: Vec<Vec<Vec<u64>>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut counts = vec![vec![0u64; n + 1]; d + 1];
            let start = b << block_bits;
            let mut state = InducedState::new(&faces, d);
            let mut w: u64 = 0;
            let g0 = start ^ (start >> 1);
            for v in 0..n {
                if g0 >> v & 1 == 1 {
                    w |= 1 << v;
                    state.add_vertex(w, &star[v], &faces);
                }
            }
            for i in start..start + (1u64 << block_bits) {
                if i > start {
                    let v = i.trailing_zeros() as usize;
                    w ^= 1 << v;
                    if w >> v & 1 == 1 {
                        state.add_vertex(w, &star[v], &faces);
                    } else {
                        state.remove_vertex(&star[v]);
                    }
                }
                let betti = homology::betti_from_faces(&state.by_dim, field);
                let size = w.count_ones() as usize;
                for (j, &b) in betti.entries().iter().enumerate() {
                    counts[j][size] += b;
                }
            }
            counts
        })
        .collect();
    let mut total = vec![vec![0u64; n + 1]; d + 1];
    for p in partials {
        for (t, row) in total.iter_mut().zip(p) {
            for (a, b) in t.iter_mut().zip(row) {
                *a += b;
            }
        }
    }
    total
}

/// The faces of `Δ_W` for the current subset `W`, grouped by dimension.
struct InducedState {
    by_dim: Vec<Vec<Face>>,
    ids: Vec<Vec<usize>>,
    slot: Vec<Option<(usize, usize)>>,
}

impl InducedState {
    fn new(faces: &[Face], d: usize) -> Self {
        let mut by_dim = vec![Vec::new(); d + 1];
        by_dim[0].push(Face::empty());
        InducedState { by_dim, ids: vec![Vec::new(); d + 1], slot: vec![None; faces.len()] }
    }

    fn add_vertex(&mut self, w: u64, star: &[usize], faces: &[Face]) {
        for &idx in star {
            let f = &faces[idx];
            if f.low_word() & !w == 0 {
                let k = f.len();
                self.slot[idx] = Some((k, self.by_dim[k].len()));
                self.by_dim[k].push(f.clone());
                self.ids[k].push(idx);
            }
        }
    }

    fn remove_vertex(&mut self, star: &[usize]) {
        for &idx in star {
            if let Some((k, pos)) = self.slot[idx].take() {
                self.by_dim[k].swap_remove(pos);
                self.ids[k].swap_remove(pos);
                if let Some(&moved) = self.ids[k].get(pos) {
                    self.slot[moved] = Some((k, pos));
                }
            }
        }
    }
}

/// σ and `μ_j = ∑_v σ_{j-1}(lk v) / (f_0(lk v) + 1)`.
///
/// The cap applies to the largest vertex link, where the subset enumeration
/// happens; σ of the complex itself is only computed when it fits as well.
pub fn mu_vector(complex: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<MuSigma> {
    let (mu, isolated) = mu_numbers(complex, field, cap)?;
    Ok(MuSigma { field, sigma: sigma_vector(complex, field, cap).ok(), mu, isolated_vertex_convention: isolated })
}

/// `μ_0, …, μ_{d-1}` alone, plus whether some vertex was isolated.
pub fn mu_numbers(complex: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<(Vec<BigRational>, bool)> {
    complex.require_nonvoid("μ")?;
    let d = complex.d();
    let links: Vec<SimplicialComplex> =
        (0..complex.n()).map(|v| complex.link_unchecked(&Face::singleton(v))).collect();
    if let Some(big) = links.iter().map(SimplicialComplex::n).max().filter(|&m| m > cap) {
        return Err(Error::Resource(format!(
            "μ enumerates 2^{big} induced subcomplexes of a vertex link; the vertex cap is {cap}"
        )));
    }
    let sigmas: Vec<Vec<BigRational>> =
        links.par_iter().map(|lk| sigma_vector(lk, field, cap)).collect::<Result<_>>()?;
    let zero = BigRational::from_integer(0.into());
    let mut mu = vec![zero; d];
    for (lk, s) in links.iter().zip(&sigmas) {
        let denom = BigInt::from(lk.n() as u64 + 1);
        for (j, m) in mu.iter_mut().enumerate() {
            if let Some(x) = s.get(j) {
                *m += x / BigRational::from_integer(denom.clone());
            }
        }
    }
    Ok((mu, links.iter().any(SimplicialComplex::is_empty_complex)))
}

/// `(h_{d-j} - h_j) - (-1)^j C(d,j) [χ̃(Δ) - (-1)^{d-1}]` for `j = 0..d`.
pub fn dehn_sommerville_residual(complex: &SimplicialComplex) -> Result<Vec<i64>> {
    let h = h_vector(complex)?;
    let chi = homology::euler_characteristic(complex)?;
    Ok(ds_residual_from(&h, chi))
}

pub fn ds_residual_from(h: &[i64], chi: i64) -> Vec<i64> {
    let d = h.len() as i64 - 1;
    (0..=d).map(|j| (h[(d - j) as usize] - h[j as usize]) - sign(j) * binomial(d, j) * (chi - sign(d - 1))).collect()
}

/// `h_{d-i} - h_i - C(d,i)(-1)^{d-i-1} χ̃(Δ) + g_i(∂Δ)` for `i = 0..d`, on a
/// homology manifold with boundary.
pub fn ds_boundary_residual(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<i64>> {
    let boundary = classify::boundary_complex(complex, field)?;
    let h = h_vector(complex)?;
    let chi = homology::euler_characteristic(complex)?;
    let hb = h_vector(&boundary)?;
    Ok(ds_boundary_residual_from(&h, chi, &hb))
}

pub fn ds_boundary_residual_from(h: &[i64], chi: i64, boundary_h: &[i64]) -> Vec<i64> {
    let d = h.len() as i64 - 1;
    let hb = |i: i64| if i >= 0 { boundary_h.get(i as usize).copied().unwrap_or(0) } else { 0 };
    (0..=d)
        .map(|i| {
            let g = hb(i) - hb(i - 1);
            h[(d - i) as usize] - h[i as usize] - binomial(d, i) * sign(d - i - 1) * chi + g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn c4() -> SimplicialComplex {
        cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1]])
    }

    fn octahedron() -> SimplicialComplex {
        c4().suspension().unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    #[test]
    fn f_h_transforms() {
        let f = FVector::new(vec![1, 4, 6, 4]);
        assert_eq!(h_from_f(&f, 3).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(h_from_f(&FVector::new(vec![1, 6, 12, 8]), 3).unwrap(), vec![1, 3, 3, 1]);
        let torus = FVector::new(vec![1, 8, 24, 16]);
        let h = h_from_f(&torus, 3).unwrap();
        assert_eq!(h, vec![1, 5, 11, -1]);
        assert_eq!(f_from_h(&h).unwrap(), torus);
        assert!(matches!(h_from_f(&f, 4), Err(Error::Domain(_))));
        assert!(f_from_h(&[1, -5]).is_err());
    }

    #[test]
    fn corrected_vectors_of_torus_values() {
        let h = [1, 5, 11, -1];
        let b = BettiVector::new(vec![0, 0, 2, 1]);
        assert_eq!(h_prime_from(&h, &b), vec![1, 5, 11, 1]);
        assert_eq!(h_double_prime_from(&h, &b), vec![1, 5, 5, 1]);
        assert_eq!(tilde_g_from(&h, &b), vec![1, 4]);
    }

    #[test]
    fn corrected_vectors_agree_with_h_on_spheres() {
        let c = corrected_h(&octahedron(), FieldSpec::Rationals).unwrap();
        assert_eq!(c.h, vec![1, 3, 3, 1]);
        assert_eq!(c.h_prime, c.h);
        assert_eq!(c.h_double_prime, c.h);
        assert_eq!(c.tilde_g, vec![1, 2]);
        assert_eq!(c.g_double_prime, vec![1, 2]);
    }

    #[test]
    fn gamma_vectors() {
        assert_eq!(gamma_vector(&[1, 3, 3, 1]).unwrap(), vec![1, 0]);
        assert_eq!(gamma_vector(&[1, 3, 6, 3, 1]).unwrap(), vec![1, -1, 2]);
        assert_eq!(gamma_vector(&[1, 4, 6, 4, 1]).unwrap(), vec![1, 0, 0]);
        assert_eq!(h_from_gamma(&[1, -1, 2], 4), vec![1, 3, 6, 3, 1]);
        assert!(matches!(gamma_vector(&[1, 5, 11, -1]), Err(Error::NotEulerian(_))));
    }

    #[test]
    fn short_h_vectors() {
        assert_eq!(short_h(&tetra_boundary()).unwrap(), vec![4, 4, 4]);
        assert_eq!(short_h(&octahedron()).unwrap(), vec![6, 12, 6]);
        let mixed = cx(&[&[1, 2, 3], &[3, 4]]);
        assert!(matches!(short_h(&mixed), Err(Error::Domain(_))));
        let f: Vec<BigRational> = f_from_short_h(&[6, 12, 6]);
        assert_eq!(f, vec![rat(6, 1), rat(12, 1), rat(8, 1)]);
    }

    #[test]
    fn sigma_and_mu_of_small_spheres() {
        let s = sigma_vector(&c4(), FieldSpec::Rationals, 22).unwrap();
        assert_eq!(s, vec![rat(1, 1), rat(1, 3), rat(1, 1)]);
        let ms = mu_vector(&octahedron(), FieldSpec::Rationals, 22).unwrap();
        assert_eq!(ms.mu, vec![rat(6, 5), rat(2, 5), rat(6, 5)]);
        assert_eq!(ms.sigma.unwrap(), vec![rat(1, 1), rat(1, 5), rat(1, 5), rat(1, 1)]);
        assert!(!ms.isolated_vertex_convention);
        let t = mu_vector(&tetra_boundary(), FieldSpec::Prime(2), 22).unwrap();
        assert_eq!(t.mu, vec![rat(1, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn sigma_cap_is_enforced() {
        let err = sigma_vector(&octahedron(), FieldSpec::Rationals, 5).unwrap_err();
        assert!(matches!(err, Error::Resource(ref m) if m.contains("2^6")));
        assert!(matches!(mu_vector(&octahedron(), FieldSpec::Rationals, 3), Err(Error::Resource(_))));
    }

    #[test]
    fn isolated_vertices_are_flagged() {
        let c = cx(&[&[1, 2], &[3]]);
        let ms = mu_vector(&c, FieldSpec::Rationals, 22).unwrap();
        assert!(ms.isolated_vertex_convention);
        // the isolated vertex adds 1; each edge endpoint adds 1/2
        assert_eq!(ms.mu[0], rat(2, 1));
    }

    #[test]
    fn dehn_sommerville_residuals() {
        assert!(dehn_sommerville_residual(&octahedron()).unwrap().iter().all(|&x| x == 0));
        assert_eq!(ds_residual_from(&[1, 5, 11, -1], -1), vec![0, 0, 0, 0]);
        let book = cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 1, 4]]);
        assert!(dehn_sommerville_residual(&book).unwrap().iter().any(|&x| x != 0));
        let tri = cx(&[&[1, 2, 3]]);
        assert_eq!(ds_boundary_residual(&tri, FieldSpec::Rationals).unwrap(), vec![0, 0, 0, 0]);
        assert!(matches!(ds_boundary_residual(&octahedron(), FieldSpec::Rationals), Err(Error::Domain(_))));
    }
}
