//! The Stanley–Reisner ring `k[Δ]` and its Artinian reductions, modelled by
//! degreewise linear algebra.
//!
//! An Artinian reduction `k(Δ;Θ) = k[Δ]/(Θ)` is computed in a substituted
//! presentation: the `d` forms of `Θ` are solved for the variables of one
//! facet, the remaining `m = n − d` variables `y` are kept, and
//! `k(Δ;Θ) ≅ k[y]/J` where `J` is the image of the Stanley–Reisner ideal.
//! `J_j` is spanned by `y·J_{j−1}` and the images of missing faces of size
//! `j`, so every graded piece is an explicit row space.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{self, Coloring};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, RingField};
use crate::homology::betti_from_faces;
use crate::invariants::binomial;
use crate::linalg::{rank_ring, Echelon};

/// Draws of a random l.s.o.p. before giving up.
pub const LSOP_ATTEMPTS: usize = 16;

/// Largest graded piece of `k[y]` the Artinian model will build.
pub const DEFAULT_RING_CAP: usize = 5000;

/// Default vertex cap for Hochster's formula.
pub const DEFAULT_HOCHSTER_CAP: usize = 22;

/// Extra draws allowed when a Lefschetz probe comes back rank deficient.
pub const PROBE_RETRIES: usize = 3;

/// Monomials of `k[Δ]` of one degree: exponent vectors whose support is a face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    pub degree: usize,
    pub monomials: Vec<Vec<u32>>,
}

/// The natural monomial basis of `k[Δ]_degree`, ordered by support then exponents.
pub fn monomial_basis(complex: &SimplicialComplex, degree: usize) -> MonomialBasis {
    let n = complex.n();
    let mut monomials = Vec::new();
    if complex.is_void() {
        return MonomialBasis { degree, monomials };
    }
    if degree == 0 {
        monomials.push(vec![0; n]);
        return MonomialBasis { degree, monomials };
    }
    for size in 1..=degree.min(complex.d()) {
        for face in complex.all_faces(size as isize - 1) {
            let support = face.to_vec();
            // compositions of `degree` into `size` positive parts
            for cuts in (1..degree).combinations(size - 1) {
                let mut e = vec![0u32; n];
                let mut prev = 0;
                for (k, &c) in cuts.iter().chain(std::iter::once(&degree)).enumerate() {
                    e[support[k]] = (c - prev) as u32;
                    prev = c;
                }
                monomials.push(e);
            }
        }
    }
    MonomialBasis { degree, monomials }
}

/// `d` linear forms `θ_1..θ_d` (and optionally `ω`) with coefficients in the
/// ring field for `field`, as integer-encoded field elements.
#[derive(Clone, Debug, Serialize)]
pub struct LinearSystem {
    pub field: FieldSpec,
    #[serde(skip)]
    pub ring: RingField,
    pub theta: Vec<Vec<u32>>,
    pub omega: Option<Vec<u32>>,
    pub seed: Option<u64>,
    pub attempts: usize,
}

impl LinearSystem {
    /// Builds a system from explicit coefficients without checking it.
    pub fn new(field: FieldSpec, ring: RingField, theta: Vec<Vec<u32>>) -> Self {
        LinearSystem { field, ring, theta, omega: None, seed: None, attempts: 0 }
    }

    pub fn with_omega(mut self, omega: Vec<u32>) -> Self {
        self.omega = Some(omega);
        self
    }

    /// Adds a uniformly random `ω` over `n` variables.
    pub fn with_random_omega(self, n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let omega = (0..n).map(|_| self.ring.random(&mut rng)).collect();
        self.with_omega(omega)
    }

    /// The restriction criterion: on every facet `F` the `d × |F|` block of
    /// coefficients has rank `|F|`.
    pub fn is_lsop_for(&self, complex: &SimplicialComplex) -> bool {
        if self.theta.len() != complex.d() || self.theta.iter().any(|t| t.len() != complex.n()) {
            return false;
        }
        complex.facets().iter().all(|f| {
            let cols: Vec<usize> = f.to_vec();
            let rows = cols.iter().map(|&c| self.theta.iter().map(|t| t[c]).collect());
            rank_ring(&self.ring, rows, self.theta.len()) == cols.len()
        })
    }
}

/// A random l.s.o.p. over the ring field for `field`.
pub fn random_lsop(complex: &SimplicialComplex, field: FieldSpec, seed: u64) -> Result<LinearSystem> {
    random_lsop_in(complex, field, RingField::for_spec(field), seed)
}

/// As [`random_lsop`] with an explicit coefficient field, which may be a
/// small prime field where l.s.o.p.s are rare or absent.
pub fn random_lsop_in(complex: &SimplicialComplex, field: FieldSpec, ring: RingField, seed: u64) -> Result<LinearSystem> {
    complex.require_nonvoid("an l.s.o.p.")?;
    let (n, d) = (complex.n(), complex.d());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=LSOP_ATTEMPTS {
        let theta = (0..d).map(|_| (0..n).map(|_| ring.random(&mut rng)).collect()).collect();
        let mut sys = LinearSystem::new(field, ring.clone(), theta);
        sys.seed = Some(seed);
        sys.attempts = attempt;
        if sys.is_lsop_for(complex) {
            return Ok(sys);
        }
    }
    Err(Error::UnluckyField(format!(
        "no l.s.o.p. found in {LSOP_ATTEMPTS} draws over a field with {} elements",
        ring.size()
    )))
}

/// The colored l.s.o.p. of a balanced complex: `θ_c` is the sum of the
/// variables of color `c`.
pub fn colored_lsop(complex: &SimplicialComplex, coloring: &Coloring, field: FieldSpec) -> Result<LinearSystem> {
    let (n, d) = (complex.n(), complex.d());
    if coloring.0.len() != n || coloring.0.iter().any(|&c| c >= d) || !coloring.is_proper_for(complex) {
        return Err(Error::domain("not a proper d-coloring of the complex"));
    }
    let ring = RingField::for_spec(field);
    let theta = (0..d).map(|c| (0..n).map(|v| u32::from(coloring.color(v) == c)).collect()).collect();
    let sys = LinearSystem::new(field, ring, theta);
    if !sys.is_lsop_for(complex) {
        return Err(Error::domain("the color classes do not give an l.s.o.p."));
    }
    Ok(sys)
}

/// Degree-`j` monomials of `k[y_0..y_{m-1}]` as sorted variable multisets.
#[derive(Debug)]
struct Monomials {
    list: Vec<Vec<u16>>,
    /// `up[i][u]`: index of `y_u · list[i]` one degree higher.
    up: Vec<Vec<usize>>,
}

fn monomials_by_degree(m: usize, top: usize) -> Vec<Monomials> {
    let mut out: Vec<Monomials> = (0..=top)
        .map(|j| Monomials { list: (0..m as u16).combinations_with_replacement(j).collect(), up: Vec::new() })
        .collect();
    for j in 0..top {
        let index: HashMap<&Vec<u16>, usize> = out[j + 1].list.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let up = out[j]
            .list
            .iter()
            .map(|mono| {
                (0..m as u16)
                    .map(|u| {
                        let mut next = mono.clone();
                        let at = next.partition_point(|&x| x <= u);
                        next.insert(at, u);
                        index[&next]
                    })
                    .collect()
            })
            .collect();
        out[j].up = up;
    }
    out
}

struct Piece {
    relations: Echelon,
    basis: Vec<usize>,
}

/// `k(Δ;Θ)` in degrees `0..=max_degree` in the substituted presentation.
pub struct ArtinianReduction {
    ring: RingField,
    d: usize,
    m: usize,
    /// `x_i` as a linear form in `y`.
    forms: Vec<Vec<u32>>,
    monomials: Vec<Monomials>,
    pieces: Vec<Piece>,
}

impl ArtinianReduction {
    pub fn new(complex: &SimplicialComplex, system: &LinearSystem, max_degree: usize) -> Result<Self> {
        Self::with_cap(complex, system, max_degree, DEFAULT_RING_CAP)
    }

    /// Builds the graded pieces, refusing any piece of `k[y]` larger than `cap`.
    pub fn with_cap(complex: &SimplicialComplex, system: &LinearSystem, max_degree: usize, cap: usize) -> Result<Self> {
        complex.require_nonvoid("the face ring")?;
        if !system.is_lsop_for(complex) {
            return Err(Error::domain("the linear system is not an l.s.o.p. for this complex"));
        }
        let ring = system.ring.clone();
        let (n, d) = (complex.n(), complex.d());
        let m = n - d;
        let top = max_degree.min(d);
        let largest = binomial((m + top) as i64 - 1, top as i64).max(1) as usize;
        if largest > cap {
            return Err(Error::Resource(format!(
                "degree {top} of the reduced polynomial ring has {largest} monomials; the cap is {cap}"
            )));
        }
        let forms = substitution(&ring, &system.theta, complex, n, d);
        let monomials = monomials_by_degree(m, top);
        let generators = classify::missing_faces_up_to(complex, top);
        let mut this = ArtinianReduction { ring, d, m, forms, monomials, pieces: Vec::new() };
        for j in 0..=top {
            let dim = this.monomials[j].list.len();
            let mut relations = Echelon::new(this.ring.clone(), dim);
            if j > 0 {
                let prev = &this.pieces[j - 1].relations;
                'shift: for row in prev.rows() {
                    for u in 0..m {
                        relations.insert(this.shift(j - 1, row, u));
                        if relations.is_full() {
                            break 'shift;
                        }
                    }
                }
                for g in generators.iter().filter(|g| g.len() == j) {
                    if relations.is_full() {
                        break;
                    }
                    relations.insert(this.image_of(g));
                }
            }
            let basis = relations.free_columns();
            this.pieces.push(Piece { relations, basis });
        }
        Ok(this)
    }

    /// Highest degree modelled; all higher pieces vanish for an l.s.o.p.
    pub fn top_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn dim(&self, j: usize) -> usize {
        self.pieces.get(j).map_or(0, |p| p.basis.len())
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.basis.len()).collect()
    }

    /// `y_u · v` for `v` of degree `j`.
    fn shift(&self, j: usize, v: &[u32], u: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.monomials[j + 1].list.len()];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                out[self.monomials[j].up[i][u]] = c;
            }
        }
        out
    }

    /// `ℓ · v` for a linear form `ℓ` in `y` and `v` of degree `j`.
    fn times_linear(&self, j: usize, v: &[u32], form: &[u32]) -> Vec<u32> {
        let f = &self.ring;
        let mut out = vec![0u32; self.monomials[j + 1].list.len()];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (u, &a) in form.iter().enumerate() {
                if a != 0 {
                    let k = self.monomials[j].up[i][u];
                    out[k] = f.add(out[k], f.mul(c, a));
                }
            }
        }
        out
    }

    /// Image of the squarefree monomial `x^S` in degree `|S|`.
    fn image_of(&self, support: &Face) -> Vec<u32> {
        let mut v = vec![1u32];
        for (j, i) in support.vertices().enumerate() {
            v = self.times_linear(j, &v, &self.forms[i]);
        }
        v
    }

    /// Normal form of a degree-`j` vector, as coordinates on the quotient basis.
    fn coordinates(&self, j: usize, mut v: Vec<u32>) -> Vec<u32> {
        let piece = &self.pieces[j];
        piece.relations.reduce(&mut v);
        piece.basis.iter().map(|&c| v[c]).collect()
    }

    /// Lifts quotient coordinates back to a degree-`j` vector.
    fn lift(&self, j: usize, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.monomials[j].list.len()];
        for (&c, &x) in self.pieces[j].basis.iter().zip(coords) {
            v[c] = x;
        }
        v
    }

    /// Multiplies quotient coordinates in degree `j` by a linear form in `y`.
    fn mul_coords(&self, j: usize, coords: &[u32], form: &[u32]) -> Vec<u32> {
        if j + 1 > self.top_degree() {
            return Vec::new();
        }
        let lifted = self.lift(j, coords);
        self.coordinates(j + 1, self.times_linear(j, &lifted, form))
    }

    /// A linear form in the original variables `x`, rewritten in `y`.
    pub fn substitute(&self, form_in_x: &[u32]) -> Vec<u32> {
        let f = &self.ring;
        let mut out = vec![0u32; self.m];
        for (i, &a) in form_in_x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (u, &b) in self.forms[i].iter().enumerate() {
                out[u] = f.add(out[u], f.mul(a, b));
            }
        }
        out
    }

    /// Rank of multiplication by `ω^power` from degree `j` to `j + power`.
    pub fn power_map_rank(&self, omega_in_x: &[u32], j: usize, power: usize) -> MapRank {
        let omega = self.substitute(omega_in_x);
        let source = self.dim(j);
        let target = if j + power <= self.top_degree() { self.dim(j + power) } else { 0 };
        if target == 0 || source == 0 {
            return MapRank { from_degree: j, power, source, target, rank: 0 };
        }
        let images = (0..source).map(|b| {
            let mut v: Vec<u32> = (0..source).map(|i| u32::from(i == b)).collect();
            for step in 0..power {
                v = self.mul_coords(j + step, &v, &omega);
            }
            v
        });
        let rank = rank_ring(&self.ring, images, target);
        MapRank { from_degree: j, power, source, target, rank }
    }

    /// `dim Soc_j`: the common kernel of multiplication by every variable.
    pub fn socle(&self) -> Vec<usize> {
        (0..=self.d)
            .map(|j| {
                let source = self.dim(j);
                if j >= self.top_degree() || self.dim(j + 1) == 0 {
                    return source;
                }
                // rows of the stacked matrix, one per (variable, target coordinate)
                let columns: Vec<Vec<Vec<u32>>> = (0..source)
                    .map(|b| {
                        let v: Vec<u32> = (0..source).map(|i| u32::from(i == b)).collect();
                        (0..self.m)
                            .map(|u| {
                                let e: Vec<u32> = (0..self.m).map(|k| u32::from(k == u)).collect();
                                self.mul_coords(j, &v, &e)
                            })
                            .collect()
                    })
                    .collect();
                let target = self.dim(j + 1);
                let rows = (0..self.m).flat_map(|u| {
                    let columns = &columns;
                    (0..target).map(move |t| columns.iter().map(|col| col[u][t]).collect::<Vec<u32>>())
                });
                source - rank_ring(&self.ring, rows, source)
            })
            .collect()
    }
}

/// Solves `Θ = 0` for the variables of a facet of size `d`, writing every
/// `x_i` as a linear form in the remaining variables.
fn substitution(ring: &RingField, theta: &[Vec<u32>], complex: &SimplicialComplex, n: usize, d: usize) -> Vec<Vec<u32>> {
    let facet = complex.facets().iter().find(|f| f.len() == d).expect("a facet of maximal size").to_vec();
    let rest: Vec<usize> = (0..n).filter(|v| !facet.contains(v)).collect();
    let order: Vec<usize> = facet.iter().chain(&rest).copied().collect();
    let mut ech = Echelon::new(ring.clone(), n);
    for t in theta {
        ech.insert(order.iter().map(|&c| t[c]).collect());
    }
    let m = rest.len();
    let mut forms = vec![vec![0u32; m]; n];
    for (u, &v) in rest.iter().enumerate() {
        forms[v][u] = 1;
    }
    for row in ech.rows() {
        let pivot = row.iter().position(|&x| x != 0).expect("nonzero row");
        forms[facet[pivot]] = (0..m).map(|u| ring.neg(row[d + u])).collect();
    }
    forms
}

/// Rank of a multiplication map between graded pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MapRank {
    pub from_degree: usize,
    pub power: usize,
    pub source: usize,
    pub target: usize,
    pub rank: usize,
}

impl MapRank {
    pub fn injective(&self) -> bool {
        self.rank == self.source
    }

    pub fn surjective(&self) -> bool {
        self.rank == self.target
    }

    pub fn full_rank(&self) -> bool {
        self.injective() || self.surjective()
    }

    pub fn status(&self) -> &'static str {
        match (self.injective(), self.surjective()) {
            (true, true) => "bijective",
            (true, false) => "injective",
            (false, true) => "surjective",
            (false, false) => "neither",
        }
    }
}

/// Ranks of `×ω` between consecutive degrees and of `×ω^{d−2j}`.
#[derive(Clone, Debug, Serialize)]
pub struct LefschetzProbe {
    pub weak: Vec<MapRank>,
    pub strong: Vec<MapRank>,
    pub seed: Option<u64>,
}

impl LefschetzProbe {
    pub fn weak_holds(&self) -> bool {
        self.weak.iter().all(MapRank::full_rank)
    }

    pub fn strong_holds(&self) -> bool {
        self.strong.iter().all(MapRank::full_rank)
    }
}

/// Probes the weak and strong Lefschetz maps for the `ω` carried by `system`.
pub fn wlp_probe(complex: &SimplicialComplex, system: &LinearSystem) -> Result<LefschetzProbe> {
    let omega = system.omega.as_ref().ok_or_else(|| Error::domain("the probe needs an extra form ω"))?;
    let d = complex.d();
    let art = ArtinianReduction::new(complex, system, d)?;
    let weak = (0..d).map(|i| art.power_map_rank(omega, i, 1)).collect();
    let strong = (0..=d / 2).map(|j| art.power_map_rank(omega, j, d - 2 * j)).collect();
    Ok(LefschetzProbe { weak, strong, seed: system.seed })
}

/// Draws `Θ` and `ω` from `seed` and probes; a rank-deficient strong probe is
/// redrawn up to [`PROBE_RETRIES`] times with consecutive seeds.
pub fn lefschetz_probe(complex: &SimplicialComplex, field: FieldSpec, seed: u64) -> Result<LefschetzProbe> {
    let mut last = None;
    for k in 0..=PROBE_RETRIES as u64 {
        let s = seed.wrapping_add(k);
        let system = random_lsop(complex, field, s)?.with_random_omega(complex.n(), s);
        let probe = wlp_probe(complex, &system)?;
        if probe.strong_holds() && probe.weak_holds() {
            return Ok(probe);
        }
        last = Some(probe);
    }
    Ok(last.expect("at least one draw"))
}

/// `dim k(Δ;Θ)_j` for `j = 0..=max_degree`; degrees above `d` vanish.
pub fn hilbert_artinian(complex: &SimplicialComplex, system: &LinearSystem, max_degree: usize) -> Result<Vec<usize>> {
    let art = ArtinianReduction::new(complex, system, max_degree)?;
    let mut h = art.hilbert();
    h.resize(max_degree + 1, 0);
    Ok(h)
}

/// The same Hilbert function computed literally in the monomial basis of
/// `k[Δ]`: `dim k[Δ]_j` minus the rank of `(m_s) ↦ ∑ θ_s m_s`. Only practical
/// for small complexes.
pub fn hilbert_artinian_direct(
    complex: &SimplicialComplex,
    system: &LinearSystem,
    max_degree: usize,
) -> Result<Vec<usize>> {
    complex.require_nonvoid("the face ring")?;
    let faces = complex.face_set();
    let ring = &system.ring;
    let mut out = Vec::new();
    let mut lower = monomial_basis(complex, 0);
    for j in 0..=max_degree {
        let basis = if j == 0 { lower.clone() } else { monomial_basis(complex, j) };
        if j == 0 {
            out.push(basis.monomials.len());
            continue;
        }
        let index: HashMap<&Vec<u32>, usize> = basis.monomials.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows = Vec::new();
        for theta in &system.theta {
            for mono in &lower.monomials {
                let mut row = vec![0u32; basis.monomials.len()];
                for (i, &a) in theta.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let mut e = mono.clone();
                    e[i] += 1;
                    let support: Face = e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(v, _)| v).collect();
                    if faces.contains(&support) {
                        let k = index[&e];
                        row[k] = ring.add(row[k], a);
                    }
                }
                rows.push(row);
            }
        }
        out.push(basis.monomials.len() - rank_ring(ring, rows, basis.monomials.len()));
        lower = basis;
    }
    Ok(out)
}

/// `dim Soc(k(Δ;Θ))_j` for `j = 0..=d`.
pub fn socle_dims(complex: &SimplicialComplex, system: &LinearSystem) -> Result<Vec<usize>> {
    Ok(ArtinianReduction::new(complex, system, complex.d())?.socle())
}

/// Graded Betti numbers `β_{i,j}` of `k[Δ]` over the polynomial ring, with
/// the ideal generators at `i = 1`. `β_{0,0} = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBettiTable {
    pub n: usize,
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl GradedBettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if (i, j) == (0, 0) {
            return 1;
        }
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `σ_{j−1} = ∑_k β_{k−j,k} / C(n,k)` for `j = 0..len`.
    pub fn sigma(&self, len: usize) -> Vec<BigRational> {
        (0..len)
            .map(|j| {
                (j..=self.n).fold(BigRational::zero(), |acc, k| {
                    let b = self.get(k - j, k);
                    if b == 0 {
                        acc
                    } else {
                        acc + BigRational::new(b.into(), binomial(self.n as i64, k as i64).into())
                    }
                })
            })
            .collect()
    }
}

/// Hochster's formula `β_{i,i+j} = ∑_{|W|=i+j} β̃_{j−1}(Δ_W)` by enumerating
/// all `2^n` induced subcomplexes.
pub fn graded_betti_hochster(complex: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<GradedBettiTable> {
    complex.require_nonvoid("graded Betti numbers")?;
    let n = complex.n();
    if n > cap.min(63) {
        return Err(Error::Resource(format!(
            "Hochster's formula needs 2^{n} induced subcomplexes; the vertex cap is {}",
            cap.min(63)
        )));
    }
    let faces = complex.faces_by_dim();
    let masks: Vec<Vec<(u64, &Face)>> =
        faces.iter().map(|layer| layer.iter().map(|f| (f.low_word(), f)).collect()).collect();
    let strata: Vec<BTreeMap<(usize, usize), u64>> = (0..=n)
        .into_par_iter()
        .map(|size| {
            let mut acc = BTreeMap::new();
            for w in (0..n).combinations(size) {
                let wmask = w.iter().fold(0u64, |m, &v| m | 1 << v);
                let induced: Vec<Vec<Face>> = masks
                    .iter()
                    .map(|layer| layer.iter().filter(|(m, _)| m & !wmask == 0).map(|(_, f)| (*f).clone()).collect())
                    .collect();
                let top = induced.iter().rposition(|l| !l.is_empty()).unwrap_or(0);
                let betti = betti_from_faces(&induced[..=top], field);
                for (k, &b) in betti.entries().iter().enumerate() {
                    // entry k holds β̃_{k−1}, so j = k and i = |W| − k
                    if b > 0 && size > k {
                        *acc.entry((size - k, size)).or_insert(0) += b;
                    }
                }
            }
            acc
        })
        .collect();
    let mut entries = BTreeMap::new();
    for s in strata {
        for (key, b) in s {
            *entries.entry(key).or_insert(0) += b;
        }
    }
    Ok(GradedBettiTable { n, entries })
}

/// Greedy `i`-binomial representation `m = C(a_i,i) + C(a_{i−1},i−1) + …`
/// with `a_i > a_{i−1} > … ≥ j ≥ 1`, as pairs `(a_k, k)`.
pub fn binomial_representation(mut m: u64, i: usize) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    let mut k = i;
    while m > 0 && k >= 1 {
        // largest a with C(a, k) ≤ m
        let (mut lo, mut hi) = (k as u64, k as u64 + 1);
        while binom_sat(hi, k) <= m as u128 {
            lo = hi;
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if binom_sat(mid, k) <= m as u128 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push((lo, k));
        m -= binom_sat(lo, k) as u64;
        k -= 1;
    }
    out
}

fn binom_sat(a: u64, k: usize) -> u128 {
    if (k as u64) > a {
        return 0;
    }
    let k = k.min((a - k as u64) as usize) as u64;
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = match acc.checked_mul((a - t) as u128) {
            Some(x) => x / (t as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Macaulay's bound `m^⟨i⟩ = ∑ C(a_k + 1, k + 1)`.
pub fn macaulay_next(m: u64, i: usize) -> u128 {
    binomial_representation(m, i).into_iter().map(|(a, k)| binom_sat(a + 1, k + 1)).fold(0u128, u128::saturating_add)
}

/// Kruskal–Katona bound on the number of `(i+1)`-sets over `m` `i`-sets.
pub fn kruskal_katona_next(m: u64, i: usize) -> u128 {
    binomial_representation(m, i).into_iter().map(|(a, k)| binom_sat(a, k + 1)).fold(0u128, u128::saturating_add)
}

fn check_sequence(v: &[i64], next: fn(u64, usize) -> u128) -> Result<bool> {
    if v.iter().any(|&x| x < 0) {
        return Err(Error::domain("sequence has negative entries"));
    }
    if v.iter().all(|&x| x == 0) {
        return Ok(true);
    }
    if v[0] != 1 {
        return Ok(false);
    }
    Ok(v.windows(2).enumerate().skip(1).all(|(i, w)| w[1] as u128 <= next(w[0] as u64, i)))
}

/// Whether `v = (1, v_1, v_2, …)` is an M-sequence: `v_{i+1} ≤ v_i^⟨i⟩` for `i ≥ 1`.
pub fn is_m_sequence(v: &[i64]) -> Result<bool> {
    check_sequence(v, macaulay_next)
}

/// Whether `v = (1, f_0, f_1, …)` (indexed by face size) is the f-vector of a
/// simplicial complex, by the Kruskal–Katona inequalities.
pub fn is_f_vector(v: &[i64]) -> Result<bool> {
    check_sequence(v, kruskal_katona_next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cross_polytope_boundary, klee_novik_boundary, rp2_six_vertex, simplex_boundary};
    use crate::invariants::{h_prime, h_vector};

    fn gp() -> FieldSpec {
        FieldSpec::generic()
    }

    fn as_i64(v: &[usize]) -> Vec<i64> {
        v.iter().map(|&x| x as i64).collect()
    }

    #[test]
    fn monomial_counts() {
        let t = simplex_boundary(3).unwrap();
        assert_eq!(monomial_basis(&t, 2).monomials.len(), 10);
        assert_eq!(monomial_basis(&t, 0).monomials, vec![vec![0; 4]]);
        // Hilbert series h(t)/(1−t)^d
        let o = cross_polytope_boundary(3).unwrap();
        let h = h_vector(&o).unwrap();
        for i in 0..=6 {
            let series: i64 = (0..h.len()).map(|j| h[j] * binomial(i - j as i64 + 2, 2)).sum();
            assert_eq!(monomial_basis(&o, i as usize).monomials.len() as i64, series);
        }
    }

    #[test]
    fn lsop_draws() {
        let t = simplex_boundary(3).unwrap();
        let sys = random_lsop(&t, gp(), 1).unwrap();
        assert_eq!(sys.attempts, 1);
        let k4 = SimplicialComplex::from_index_faces((0..4).combinations(2).map(|e| e.into_iter().collect()).collect());
        let tiny = RingField::prime(2).unwrap();
        assert!(matches!(random_lsop_in(&k4, FieldSpec::gf2(), tiny, 0), Err(Error::UnluckyField(_))));
        let o = cross_polytope_boundary(3).unwrap();
        let col = Coloring((0..6).map(|v| v / 2).collect());
        assert!(colored_lsop(&o, &col, FieldSpec::gf2()).unwrap().is_lsop_for(&o));
    }

    #[test]
    fn artinian_hilbert_functions() {
        let o = cross_polytope_boundary(3).unwrap();
        let sys = random_lsop(&o, gp(), 7).unwrap();
        assert_eq!(hilbert_artinian(&o, &sys, 4).unwrap(), vec![1, 3, 3, 1, 0]);
        assert_eq!(hilbert_artinian_direct(&o, &sys, 4).unwrap(), vec![1, 3, 3, 1, 0]);
        let torus = klee_novik_boundary(1, 4).unwrap();
        let sys = random_lsop(&torus, gp(), 3).unwrap();
        assert_eq!(hilbert_artinian(&torus, &sys, 3).unwrap(), vec![1, 5, 11, 1]);
        let rp2 = rp2_six_vertex();
        let sys = random_lsop(&rp2, FieldSpec::gf2(), 5).unwrap();
        let hp = h_prime(&rp2, FieldSpec::gf2()).unwrap();
        assert_eq!(as_i64(&hilbert_artinian(&rp2, &sys, 3).unwrap()), hp);
        assert_eq!(as_i64(&hilbert_artinian_direct(&rp2, &sys, 3).unwrap()), hp);
    }

    #[test]
    fn socles() {
        let o = cross_polytope_boundary(3).unwrap();
        let sys = random_lsop(&o, gp(), 2).unwrap();
        assert_eq!(socle_dims(&o, &sys).unwrap(), vec![0, 0, 0, 1]);
        let rp2 = rp2_six_vertex();
        let sys = random_lsop(&rp2, FieldSpec::gf2(), 2).unwrap();
        assert_eq!(socle_dims(&rp2, &sys).unwrap(), vec![0, 0, 3, 1]);
        let torus = klee_novik_boundary(1, 4).unwrap();
        let sys = random_lsop(&torus, gp(), 2).unwrap();
        assert_eq!(socle_dims(&torus, &sys).unwrap()[2], 6);
    }

    #[test]
    fn lefschetz_maps() {
        let o = cross_polytope_boundary(3).unwrap();
        let probe = lefschetz_probe(&o, gp(), 11).unwrap();
        assert_eq!(probe.weak[1].status(), "bijective");
        assert!(probe.weak_holds() && probe.strong_holds());
        let again = lefschetz_probe(&o, gp(), 11).unwrap();
        assert_eq!(probe.weak, again.weak);
    }

    #[test]
    fn hochster_tables() {
        let t = simplex_boundary(3).unwrap();
        let table = graded_betti_hochster(&t, FieldSpec::Rationals, 22).unwrap();
        assert_eq!(table.entries, BTreeMap::from([((1, 4), 1)]));
        let o = cross_polytope_boundary(3).unwrap();
        let table = graded_betti_hochster(&o, FieldSpec::Rationals, 22).unwrap();
        assert_eq!(table.entries, BTreeMap::from([((1, 2), 3), ((2, 4), 3), ((3, 6), 1)]));
        let fifth = BigRational::new(1.into(), 5.into());
        let one = BigRational::from_integer(1.into());
        assert_eq!(table.sigma(4), vec![one.clone(), fifth.clone(), fifth, one]);
        assert!(matches!(graded_betti_hochster(&o, FieldSpec::Rationals, 5), Err(Error::Resource(_))));
    }

    #[test]
    fn macaulay_and_kruskal_katona() {
        assert_eq!(macaulay_next(10, 2), 20);
        assert_eq!(macaulay_next(2, 1), 3);
        assert_eq!(macaulay_next(0, 3), 0);
        assert_eq!(binomial_representation(13, 3), vec![(5, 3), (3, 2)]);
        assert!(!is_m_sequence(&[1, 2, 4]).unwrap());
        assert!(is_m_sequence(&[1, 2, 3, 4]).unwrap());
        assert!(is_m_sequence(&[1, 3, 6, 0, 0]).unwrap());
        assert!(!is_m_sequence(&[1, 3, 0, 1]).unwrap());
        assert!(is_f_vector(&[1, 4, 6, 4]).unwrap());
        assert!(!is_f_vector(&[1, 3, 4]).unwrap());
        assert!(is_m_sequence(&[1, -1]).is_err());
    }
}
