//! Generators for the standard families of spheres, balls and manifolds.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::Coloring;
use crate::complex::{Face, Label, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Simplex,
    SimplexBoundary,
    CrossPolytope,
    Cyclic,
    StackedBall,
    Stacked,
    StackedCrossPolytopal,
    Barycentric,
    JoinOfCycles,
    KleeNovik,
    KleeNovikBoundary,
    ConnectedSum,
    ProjectivePlane,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Simplex,
        Family::SimplexBoundary,
        Family::CrossPolytope,
        Family::Cyclic,
        Family::StackedBall,
        Family::Stacked,
        Family::StackedCrossPolytopal,
        Family::Barycentric,
        Family::JoinOfCycles,
        Family::KleeNovik,
        Family::KleeNovikBoundary,
        Family::ConnectedSum,
        Family::ProjectivePlane,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Simplex => "simplex",
            Family::SimplexBoundary => "simplex-boundary",
            Family::CrossPolytope => "cross-polytope",
            Family::Cyclic => "cyclic",
            Family::StackedBall => "stacked-ball",
            Family::Stacked => "stacked",
            Family::StackedCrossPolytopal => "stacked-cross-polytopal",
            Family::Barycentric => "barycentric",
            Family::JoinOfCycles => "join-of-cycles",
            Family::KleeNovik => "klee-novik",
            Family::KleeNovikBoundary => "bnd-klee-novik",
            Family::ConnectedSum => "connected-sum",
            Family::ProjectivePlane => "rp2-6",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::MalformedInput(format!("unknown construction family '{s}'")))
    }
}

/// A family tag plus its integer parameters.
///
/// Parameters are named as in the usual notation: `d` (dimension plus one of
/// the sphere, or of the ball's boundary), `n` (vertices), `k` (copies or
/// cycles), `r` and `m` for the two-sided balls. `parts` and `base` hold the
/// operands of connected sums and barycentric subdivisions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConstructionSpec {
    pub family: Option<Family>,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub m: Option<usize>,
    pub seed: Option<u64>,
    pub parts: Vec<ConstructionSpec>,
    pub base: Option<Box<ConstructionSpec>>,
}

impl ConstructionSpec {
    pub fn new(family: Family) -> Self {
        ConstructionSpec { family: Some(family), ..Default::default() }
    }

    pub fn d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn base(mut self, base: ConstructionSpec) -> Self {
        self.base = Some(Box::new(base));
        self
    }

    pub fn parts(mut self, parts: Vec<ConstructionSpec>) -> Self {
        self.parts = parts;
        self
    }

    fn family(&self) -> Family {
        self.family.expect("construction spec without a family")
    }

    fn need(&self, name: &str, v: Option<usize>) -> Result<usize> {
        v.ok_or_else(|| Error::MalformedInput(format!("{} needs parameter {name}", self.family().tag())))
    }
}

impl fmt::Display for ConstructionSpec {
    /// `family key=value ...`; nested operands are written in brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.map_or("?", Family::tag))?;
        for (name, v) in [("d", self.d), ("n", self.n), ("k", self.k), ("r", self.r), ("m", self.m)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        if let Some(s) = self.seed {
            write!(f, " seed={s}")?;
        }
        if let Some(b) = &self.base {
            write!(f, " base=[{b}]")?;
        }
        if !self.parts.is_empty() {
            write!(f, " parts=[{}]", self.parts.iter().join(" + "))?;
        }
        Ok(())
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConstructionSpec> {
        let bad = |msg: String| Error::MalformedInput(msg);
        let s = s.trim();
        let (head, mut rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
        let mut spec = ConstructionSpec::new(head.parse()?);
        loop {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let (key, after) = rest.split_once('=').ok_or_else(|| bad(format!("expected key=value in '{rest}'")))?;
            let key = key.trim();
            if let Some(inner) = after.strip_prefix('[') {
                let close = matching_bracket(inner).ok_or_else(|| bad("unbalanced brackets".into()))?;
                let body = &inner[..close];
                match key {
                    "base" => spec.base = Some(Box::new(body.parse()?)),
                    "parts" => {
                        spec.parts = split_top_level(body, '+').iter().map(|p| p.parse()).collect::<Result<_>>()?
                    }
                    _ => return Err(bad(format!("unknown nested key '{key}'"))),
                }
                rest = &inner[close + 1..];
            } else {
                let (val, after) = after.split_once(char::is_whitespace).unwrap_or((after, ""));
                let num: u64 = val.parse().map_err(|_| bad(format!("'{val}' is not a number")))?;
                let small = Some(num as usize);
                match key {
                    "d" => spec.d = small,
                    "n" => spec.n = small,
                    "k" => spec.k = small,
                    "r" => spec.r = small,
                    "m" => spec.m = small,
                    "seed" => spec.seed = Some(num),
                    _ => return Err(bad(format!("unknown parameter '{key}'"))),
                }
                rest = after;
            }
        }
        Ok(spec)
    }
}

fn matching_bracket(s: &str) -> Option<usize> {
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' if depth == 0 => return Some(i),
            ']' => depth -= 1,
            _ => {}
        }
    }
    None
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0, 0);
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// Facts known about a generated complex by construction.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Provenance {
    pub family: Option<Family>,
    /// Boundary of a simplicial polytope.
    pub polytopal: bool,
    /// Every vertex link is `r`-stacked (closed manifolds only).
    pub locally_stacked: Option<usize>,
    /// An `r`-stacked manifold with boundary.
    pub stacked: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub complex: SimplicialComplex,
    pub coloring: Option<Coloring>,
    pub provenance: Provenance,
}

impl Construction {
    fn plain(spec: ConstructionSpec, complex: SimplicialComplex) -> Self {
        Construction { spec, complex, coloring: None, provenance: Provenance::default() }
    }

    fn polytopal(mut self) -> Self {
        self.provenance.polytopal = true;
        self
    }
}

/// Builds the complex described by `spec`.
pub fn build(spec: &ConstructionSpec) -> Result<Construction> {
    let s = spec.clone();
    let c = match spec.family() {
        Family::Simplex => {
            let d = spec.need("d", spec.d)?;
            let mut c = Construction::plain(s, simplex(d));
            c.provenance.stacked = Some(0);
            c
        }
        Family::SimplexBoundary => Construction::plain(s, simplex_boundary(spec.need("d", spec.d)?)?).polytopal(),
        Family::CrossPolytope => {
            let d = spec.need("d", spec.d)?;
            let complex = cross_polytope_boundary(d)?;
            let coloring = Coloring((0..2 * d).map(|v| v / 2).collect());
            Construction { coloring: Some(coloring), ..Construction::plain(s, complex) }.polytopal()
        }
        Family::Cyclic => {
            Construction::plain(s, cyclic_boundary(spec.need("d", spec.d)?, spec.need("n", spec.n)?)?).polytopal()
        }
        Family::StackedBall => {
            let ball = stacked_ball(spec.need("n", spec.n)?, spec.need("d", spec.d)?, spec.seed)?;
            let mut c = Construction::plain(s, ball);
            c.provenance.stacked = Some(usize::from(c.complex.facets().len() > 1));
            c
        }
        Family::Stacked => {
            let sphere = stacked_sphere(spec.need("n", spec.n)?, spec.need("d", spec.d)?, spec.seed)?;
            Construction::plain(s, sphere).polytopal()
        }
        Family::StackedCrossPolytopal => {
            let (complex, coloring) = stacked_cross_polytopal(spec.need("k", spec.k)?, spec.need("d", spec.d)?)?;
            Construction { coloring: Some(coloring), ..Construction::plain(s, complex) }.polytopal()
        }
        Family::Barycentric => {
            let base = spec.base.as_ref().ok_or_else(|| Error::MalformedInput("barycentric needs a base".into()))?;
            let b = build(base)?;
            let (complex, coloring) = barycentric_subdivision(&b.complex)?;
            let polytopal = b.provenance.polytopal;
            let mut c = Construction { coloring: Some(coloring), ..Construction::plain(s, complex) };
            c.provenance.polytopal = polytopal;
            c
        }
        Family::JoinOfCycles => {
            Construction::plain(s, join_of_cycles(spec.need("k", spec.k)?, spec.need("n", spec.n)?)?).polytopal()
        }
        Family::KleeNovik => {
            let (r, m) = (spec.need("r", spec.r)?, spec.need("m", spec.m)?);
            let mut c = Construction::plain(s, klee_novik_ball(r, m)?);
            c.provenance.stacked = Some(r);
            c
        }
        Family::KleeNovikBoundary => {
            let (r, m) = (spec.need("r", spec.r)?, spec.need("m", spec.m)?);
            let mut c = Construction::plain(s, klee_novik_boundary(r, m)?);
            c.provenance.locally_stacked = Some(r);
            c
        }
        Family::ConnectedSum => {
            let parts: Vec<Construction> = spec.parts.iter().map(build).collect::<Result<_>>()?;
            let complexes: Vec<SimplicialComplex> = parts.iter().map(|p| p.complex.clone()).collect();
            let complex = connected_sum_chain(&complexes)?;
            let mut c = Construction::plain(s, complex);
            c.provenance.polytopal = parts.iter().all(|p| p.provenance.polytopal);
            c
        }
        Family::ProjectivePlane => Construction::plain(s, rp2_six_vertex()),
    };
    let mut c = c;
    c.provenance.family = Some(spec.family());
    Ok(c)
}

/// The full `d`-simplex on `d+1` vertices.
pub fn simplex(d: usize) -> SimplicialComplex {
    SimplicialComplex::from_index_faces(vec![(0..=d).collect()])
}

/// `∂Δ^d`: all `d`-subsets of `d+1` vertices.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex> {
    if d < 1 {
        return Err(Error::domain("simplex boundary needs d ≥ 1"));
    }
    let all: Face = (0..=d).collect();
    Ok(SimplicialComplex::from_index_faces(all.subfaces(d).collect()))
}

/// Boundary of the `d`-dimensional cross-polytope. Vertices `2i` and `2i+1`
/// are antipodal.
pub fn cross_polytope_boundary(d: usize) -> Result<SimplicialComplex> {
    if d < 1 {
        return Err(Error::domain("cross-polytope needs d ≥ 1"));
    }
    let facets = (0..1u64 << d).map(|mask| (0..d).map(|i| 2 * i + (mask >> i & 1) as usize).collect()).collect();
    Ok(SimplicialComplex::from_index_faces(facets))
}

/// Boundary of the cyclic polytope `C_d(n)` via Gale's evenness condition.
pub fn cyclic_boundary(d: usize, n: usize) -> Result<SimplicialComplex> {
    if d < 2 || n < d + 1 {
        return Err(Error::domain("cyclic polytope needs d ≥ 2 and n ≥ d+1"));
    }
    let facets = (0..n).combinations(d).filter(|s| gale_even(s, n)).map(|s| s.into_iter().collect()).collect();
    Ok(SimplicialComplex::from_index_faces(facets))
}

/// Every run of chosen indices strictly between two unchosen ones has even length.
fn gale_even(chosen: &[usize], n: usize) -> bool {
    let mut inside = vec![false; n];
    for &c in chosen {
        inside[c] = true;
    }
    let mut run = 0;
    let mut bounded_left = false;
    for &x in &inside {
        if x {
            run += 1;
        } else {
            if bounded_left && run % 2 == 1 {
                return false;
            }
            bounded_left = true;
            run = 0;
        }
    }
    true
}

/// A stacked `d`-ball on `n` vertices.
///
/// Without a seed the simplices form a path `{i, …, i+d}`: each new simplex is
/// glued onto the most recent one along the facet missing its oldest vertex.
/// With a seed each new simplex is glued onto a uniformly random free facet.
pub fn stacked_ball(n: usize, d: usize, seed: Option<u64>) -> Result<SimplicialComplex> {
    if d < 1 || n < d + 1 {
        return Err(Error::domain("stacked ball needs d ≥ 1 and n ≥ d+1"));
    }
    let mut simplices: Vec<Face> = vec![(0..=d).collect()];
    match seed {
        None => {
            for v in d + 1..n {
                let last = simplices.last().expect("nonempty");
                let oldest = last.vertices().next().expect("nonempty simplex");
                simplices.push(last.without(oldest).with(v));
            }
        }
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut free: Vec<Face> = simplices[0].subfaces(d).collect();
            for v in d + 1..n {
                let i = (0..free.len()).collect::<Vec<_>>().choose(&mut rng).copied().expect("free facets");
                let base = free.swap_remove(i);
                let new = base.with(v);
                free.extend(base.vertices().map(|u| new.without(u)));
                simplices.push(new);
            }
        }
    }
    Ok(SimplicialComplex::from_index_faces(simplices))
}

/// `∂ST(n, d)`: boundary of a stacked `d`-ball on `n` vertices.
pub fn stacked_sphere(n: usize, d: usize, seed: Option<u64>) -> Result<SimplicialComplex> {
    let ball = stacked_ball(n, d, seed)?;
    Ok(free_ridges(&ball))
}

/// The complex generated by ridges lying in exactly one facet.
pub fn free_ridges(complex: &SimplicialComplex) -> SimplicialComplex {
    let d = complex.d();
    let mut count: std::collections::HashMap<Face, usize> = Default::default();
    for f in complex.facets() {
        for r in f.subfaces(d - 1) {
            *count.entry(r).or_default() += 1;
        }
    }
    let ridges: Vec<Face> = count.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r).collect();
    SimplicialComplex::with_labels(complex.labels().to_vec(), ridges).expect("ridges use existing vertices")
}

/// Balanced connected sum of `k` cross-polytope boundaries of dimension `d-1`.
///
/// Each new copy is glued along its facet `{0, 2, 4, …}` to the facet of the
/// previous copy antipodal to where that copy was glued, matching vertices
/// of equal color.
pub fn stacked_cross_polytopal(k: usize, d: usize) -> Result<(SimplicialComplex, Coloring)> {
    if k < 1 {
        return Err(Error::domain("stacked cross-polytopal sphere needs k ≥ 1"));
    }
    let cross = cross_polytope_boundary(d)?;
    let mut complex = cross.clone();
    let mut colors: Vec<usize> = (0..2 * d).map(|v| v / 2).collect();
    let mut open: Vec<usize> = (0..d).map(|i| 2 * i + 1).collect();
    let glue: Face = (0..d).map(|i| 2 * i).collect();
    for _ in 1..k {
        let here: Face = open.iter().copied().collect();
        let matching: Vec<(usize, usize)> = (0..d).map(|i| (open[i], 2 * i)).collect();
        let (next, map) = complex.connected_sum_with_map(&cross, &here, &glue, &matching)?;
        colors.resize(next.n(), 0);
        for (u, &to) in map.iter().enumerate() {
            colors[to] = u / 2;
        }
        open = (0..d).map(|i| map[2 * i + 1]).collect();
        complex = next;
    }
    Ok((complex, Coloring(colors)))
}

/// `Sd(Δ)`: vertices are the nonempty faces, facets the maximal chains.
///
/// Vertex `i` is the `i`-th nonempty face in (size, lexicographic) order and
/// is labelled `i`; its color is its face size minus one.
pub fn barycentric_subdivision(complex: &SimplicialComplex) -> Result<(SimplicialComplex, Coloring)> {
    complex.require_nonvoid("barycentric subdivision")?;
    let faces: Vec<Face> = complex.faces_by_dim().into_iter().skip(1).flatten().collect();
    let index: std::collections::HashMap<&Face, usize> = faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut chains = Vec::new();
    for facet in complex.facets().iter().filter(|f| !f.is_empty()) {
        for perm in facet.vertices().permutations(facet.len()) {
            let mut cur = Face::empty();
            let chain: Face = perm
                .into_iter()
                .map(|v| {
                    cur.insert(v);
                    index[&cur]
                })
                .collect();
            chains.push(chain);
        }
    }
    if chains.is_empty() {
        return Ok((SimplicialComplex::empty(), Coloring(Vec::new())));
    }
    let labels = (0..faces.len()).map(Label::from).collect();
    let sd = SimplicialComplex::with_labels(labels, chains)?;
    let colors = sd
        .labels()
        .iter()
        .map(|l| match l {
            Label::Int(i) => faces[*i as usize].len() - 1,
            Label::Name(_) => unreachable!("subdivision labels are integers"),
        })
        .collect();
    Ok((sd, Coloring(colors)))
}

/// `J_k(n)`: the join of `k` cycles whose lengths are `⌊n/k⌋` or `⌈n/k⌉`.
pub fn join_of_cycles(k: usize, n: usize) -> Result<SimplicialComplex> {
    if k < 1 || n < 3 * k {
        return Err(Error::domain(format!("J_{k}({n}) needs every cycle to have at least 3 vertices")));
    }
    let mut out: Option<SimplicialComplex> = None;
    for i in 0..k {
        let len = n / k + usize::from(i < n % k);
        let cycle = SimplicialComplex::from_index_faces((0..len).map(|v| [v, (v + 1) % len].into_iter().collect()).collect());
        out = Some(match out {
            None => cycle,
            Some(acc) => acc.join(&cycle)?,
        });
    }
    Ok(out.expect("k ≥ 1"))
}

/// The two-sided ball `B(r, m)` on `x_1..x_m, y_1..y_m`.
///
/// Facets pick `z_i ∈ {x_i, y_i}` with at most `r` indices `i` where `z_i`
/// and `z_{i+1}` come from different sides.
pub fn klee_novik_ball(r: usize, m: usize) -> Result<SimplicialComplex> {
    if m < 2 || r > m - 2 {
        return Err(Error::domain("B(r, m) needs 0 ≤ r ≤ m-2"));
    }
    let labels: Vec<Label> =
        (1..=m).map(|i| Label::Name(format!("x{i}"))).chain((1..=m).map(|i| Label::Name(format!("y{i}")))).collect();
    let facets = (0..1u64 << m)
        .filter(|mask| (0..m - 1).filter(|&i| (mask >> i & 1) != (mask >> (i + 1) & 1)).count() <= r)
        .map(|mask| (0..m).map(|i| if mask >> i & 1 == 0 { i } else { m + i }).collect())
        .collect();
    SimplicialComplex::with_labels(labels, facets)
}

/// `∂B(r, m)`, a triangulation of `S^r × S^{m-r-2}`.
pub fn klee_novik_boundary(r: usize, m: usize) -> Result<SimplicialComplex> {
    Ok(free_ridges(&klee_novik_ball(r, m)?))
}

/// Connected sum of the given complexes in order, each glued along its first
/// facet to the first facet of the running result, matching vertices in order.
pub fn connected_sum_chain(parts: &[SimplicialComplex]) -> Result<SimplicialComplex> {
    let (first, rest) = parts.split_first().ok_or_else(|| Error::domain("connected sum of nothing"))?;
    let mut acc = first.clone();
    for p in rest {
        let f1 = acc.facets()[0].clone();
        let f2 = p.facets()[0].clone();
        let matching: Vec<(usize, usize)> = f1.vertices().zip(f2.vertices()).collect();
        acc = acc.connected_sum(p, &f1, &f2, &matching)?;
    }
    Ok(acc)
}

/// The 6-vertex real projective plane.
pub fn rp2_six_vertex() -> SimplicialComplex {
    let facets: [[i64; 3]; 10] = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ];
    SimplicialComplex::from_facets(facets).expect("fixture is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify;
    use crate::field::FieldSpec;
    use crate::invariants::h_vector;

    #[test]
    fn basic_families() {
        assert_eq!(cross_polytope_boundary(3).unwrap().f_vector().entries(), &[1, 6, 12, 8]);
        assert_eq!(simplex_boundary(3).unwrap().f_vector().entries(), &[1, 4, 6, 4]);
        assert_eq!(h_vector(&cross_polytope_boundary(4).unwrap()).unwrap(), vec![1, 4, 6, 4, 1]);
        let c47 = cyclic_boundary(4, 7).unwrap();
        assert_eq!(c47.f_vector().entries(), &[1, 7, 21, 28, 14]);
        assert_eq!(h_vector(&c47).unwrap(), vec![1, 3, 6, 3, 1]);
        assert_eq!(cyclic_boundary(3, 4).unwrap(), simplex_boundary(3).unwrap());
    }

    #[test]
    fn stacked_spheres() {
        assert_eq!(h_vector(&stacked_sphere(7, 4, None).unwrap()).unwrap(), vec![1, 3, 3, 3, 1]);
        assert_eq!(stacked_sphere(5, 3, None).unwrap().f_vector().entries(), &[1, 5, 9, 6]);
        for seed in 0..5 {
            let s = stacked_sphere(9, 4, Some(seed)).unwrap();
            assert_eq!(h_vector(&s).unwrap(), vec![1, 5, 5, 5, 1]);
        }
    }

    #[test]
    fn stacked_cross_polytopal_spheres_are_balanced() {
        let (s, col) = stacked_cross_polytopal(2, 3).unwrap();
        assert!(col.is_proper_for(&s));
        let h = h_vector(&s).unwrap();
        assert_eq!(2 * h[2], 2 * h[1]);
        assert_eq!(s.n(), 9);
        let (s4, col4) = stacked_cross_polytopal(3, 4).unwrap();
        assert!(col4.is_proper_for(&s4));
        let h4 = h_vector(&s4).unwrap();
        assert_eq!(2 * h4[2], 3 * h4[1]);
    }

    #[test]
    fn subdivisions_and_joins() {
        let tri = simplex_boundary(2).unwrap();
        let (sd, col) = barycentric_subdivision(&tri).unwrap();
        assert_eq!(sd.f_vector().entries(), &[1, 6, 6]);
        assert!(col.is_proper_for(&sd));
        let oct = cross_polytope_boundary(3).unwrap();
        let (sdo, colo) = barycentric_subdivision(&oct).unwrap();
        assert_eq!(sdo.n(), 26);
        assert!(colo.is_proper_for(&sdo));
        assert!(classify::is_flag(&sdo));
        let j = join_of_cycles(2, 8).unwrap();
        assert_eq!(j.f_vector().entries(), &[1, 8, 24, 32, 16]);
        assert_eq!(h_vector(&join_of_cycles(1, 7).unwrap()).unwrap(), vec![1, 5, 1]);
        assert!(classify::is_flag(&join_of_cycles(2, 9).unwrap()));
        assert!(join_of_cycles(3, 8).is_err());
    }

    #[test]
    fn two_sided_balls() {
        let b = klee_novik_ball(1, 4).unwrap();
        assert_eq!(b.facets().len(), 8);
        assert_eq!(b.f_vector().entries(), &[1, 8, 24, 24, 8]);
        let bd = klee_novik_boundary(1, 4).unwrap();
        assert_eq!(bd.f_vector().entries(), &[1, 8, 24, 16]);
        assert_eq!(klee_novik_ball(2, 6).unwrap().facets().len(), 32);
        assert_eq!(classify::r_stackedness(&b, FieldSpec::Rationals).unwrap(), 1);
        assert!(klee_novik_ball(3, 4).is_err());
    }

    #[test]
    fn spec_strings_round_trip() {
        let spec = ConstructionSpec::new(Family::Barycentric).base(ConstructionSpec::new(Family::Cyclic).d(4).n(7));
        let text = spec.to_string();
        assert_eq!(text, "barycentric base=[cyclic d=4 n=7]");
        assert_eq!(text.parse::<ConstructionSpec>().unwrap(), spec);
        let sum = ConstructionSpec::new(Family::ConnectedSum).parts(vec![
            ConstructionSpec::new(Family::CrossPolytope).d(3),
            ConstructionSpec::new(Family::SimplexBoundary).d(3),
        ]);
        assert_eq!(sum.to_string().parse::<ConstructionSpec>().unwrap(), sum);
        assert!("nope d=3".parse::<ConstructionSpec>().is_err());
    }

    #[test]
    fn connected_sum_program() {
        let spec = "connected-sum parts=[simplex-boundary d=3 + simplex-boundary d=3]".parse().unwrap();
        let c = build(&spec).unwrap();
        assert_eq!(c.complex.f_vector().entries(), &[1, 5, 9, 6]);
        assert!(c.provenance.polytopal);
    }
}
