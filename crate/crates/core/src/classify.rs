//! Structural predicates: pseudomanifold conditions, homology manifold, sphere
//! and ball recognition by link homology, boundary extraction, Eulerian
//! conditions, balanced colorings, missing faces, neighborliness and
//! r-stackedness.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{self, BettiVector};
use crate::invariants::binomial;

/// Default cap on the total number of faces for which link homology is computed.
pub const DEFAULT_FACE_CAP: usize = 100_000;

/// The homology type of a face link relative to the expected dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkProfile {
    Sphere,
    Ball,
    Other,
}

fn profile(betti: &BettiVector, sphere_dim: isize) -> LinkProfile {
    match betti.total() {
        0 => LinkProfile::Ball,
        1 if betti.get(sphere_dim) == 1 => LinkProfile::Sphere,
        _ => LinkProfile::Other,
    }
}

/// A proper coloring of the 1-skeleton: `colors[v] ∈ 0..d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }

    /// Whether every facet of `complex` sees each color at most once.
    pub fn is_proper_for(&self, complex: &SimplicialComplex) -> bool {
        complex.facets().iter().all(|f| {
            let cs: HashSet<usize> = f.vertices().map(|v| self.0[v]).collect();
            cs.len() == f.len()
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub face_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { face_cap: DEFAULT_FACE_CAP }
    }
}

/// Everything the audit needs to know about a complex's structure.
///
/// Optional fields are `None` when the corresponding test was skipped (see
/// `skipped`) or does not apply.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub field: FieldSpec,
    pub n: usize,
    pub dim: isize,
    pub num_faces: usize,
    pub pure: bool,
    /// The 1-skeleton is path-connected.
    pub connected: bool,
    pub pseudomanifold: bool,
    pub normal_pseudomanifold: Option<bool>,
    /// Links of all nonempty faces have the Euler characteristic of spheres.
    pub semi_eulerian: Option<bool>,
    /// Semi-Eulerian, and the complex itself has the Euler characteristic of a sphere.
    pub eulerian: Option<bool>,
    /// Closed homology manifold.
    pub homology_manifold: Option<bool>,
    pub manifold_with_boundary: Option<bool>,
    pub homology_sphere: Option<bool>,
    pub homology_ball: Option<bool>,
    /// Only decided for closed homology manifolds.
    pub orientable: Option<bool>,
    /// `∂Δ`; `{∅}` for closed manifolds, `None` when not a manifold.
    pub boundary: Option<SimplicialComplex>,
    pub balanced: Option<Coloring>,
    pub missing_faces: Option<Vec<Face>>,
    pub flag: Option<bool>,
    pub neighborliness: usize,
    pub r_stackedness: Option<usize>,
    pub betti: BettiVector,
    pub skipped: Vec<String>,
}

impl ClassificationReport {
    /// Connected homology manifold with or without boundary.
    pub fn is_any_manifold(&self) -> bool {
        self.homology_manifold == Some(true) || self.manifold_with_boundary == Some(true)
    }

    /// Internal consistency of the implication chain
    /// sphere ⇒ manifold ⇒ normal pseudomanifold ⇒ pseudomanifold ⇒ pure.
    pub fn implications_hold(&self) -> bool {
        let imp = |a: Option<bool>, b: Option<bool>| a != Some(true) || b == Some(true);
        imp(self.homology_sphere, self.homology_manifold)
            && imp(self.homology_manifold, self.normal_pseudomanifold)
            && imp(self.normal_pseudomanifold, Some(self.pseudomanifold))
            && (!self.pseudomanifold || self.pure)
            && imp(self.homology_ball, self.manifold_with_boundary)
    }
}

struct LinkData {
    face: Face,
    chi: i64,
    connected: bool,
    profile: LinkProfile,
}

fn link_data(complex: &SimplicialComplex, field: FieldSpec) -> Vec<LinkData> {
    let d = complex.d() as isize;
    let faces: Vec<Face> = complex.faces_by_dim().into_iter().skip(1).flatten().collect();
    faces
        .into_par_iter()
        .map(|face| {
            let link = complex.link_unchecked(&face);
            let by_dim = link.faces_by_dim();
            let f: Vec<u64> = by_dim.iter().map(|l| l.len() as u64).collect();
            let betti = homology::betti_from_faces(&by_dim, field);
            let sphere_dim = d - face.len() as isize - 1;
            LinkData {
                chi: homology::reduced_euler_from_f(&f),
                connected: link.is_connected(),
                profile: profile(&betti, sphere_dim),
                face,
            }
        })
        .collect()
}

fn is_pseudomanifold(complex: &SimplicialComplex) -> bool {
    if complex.is_void() || !complex.is_pure() {
        return false;
    }
    let d = complex.d();
    if d <= 1 {
        return true;
    }
    let mut count: HashMap<Face, usize> = HashMap::new();
    for f in complex.facets() {
        for r in f.subfaces(d - 1) {
            *count.entry(r).or_default() += 1;
        }
    }
    count.values().all(|&c| c == 2)
}

/// Closed homology manifold: every nonempty face link is a homology sphere
/// of the right dimension.
pub fn is_closed_homology_manifold(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    !complex.is_void() && link_data(complex, field).iter().all(|l| l.profile == LinkProfile::Sphere)
}

fn boundary_from_links(complex: &SimplicialComplex, links: &[LinkData]) -> SimplicialComplex {
    let faces: Vec<Face> = links.iter().filter(|l| l.profile == LinkProfile::Ball).map(|l| l.face.clone()).collect();
    if faces.is_empty() {
        return SimplicialComplex::empty();
    }
    SimplicialComplex::with_labels(complex.labels().to_vec(), faces).expect("boundary faces use existing vertices")
}

/// `∂Δ` of a homology manifold with boundary: the faces whose links are
/// acyclic. Errors if the complex is not such a manifold.
pub fn boundary_complex(complex: &SimplicialComplex, field: FieldSpec) -> Result<SimplicialComplex> {
    complex.require_nonvoid("the boundary")?;
    let links = link_data(complex, field);
    match manifold_kind(complex, &links, field) {
        (_, Some(b)) => Ok(b),
        _ => Err(Error::domain("not a homology manifold with boundary")),
    }
}

/// Returns `(closed, boundary)`: whether the complex is a closed homology
/// manifold, and `∂Δ` when it is a homology manifold with nonempty boundary.
fn manifold_kind(
    complex: &SimplicialComplex,
    links: &[LinkData],
    field: FieldSpec,
) -> (bool, Option<SimplicialComplex>) {
    if links.iter().any(|l| l.profile == LinkProfile::Other) {
        return (false, None);
    }
    if links.iter().all(|l| l.profile == LinkProfile::Sphere) {
        return (true, None);
    }
    let boundary = boundary_from_links(complex, links);
    let ok = boundary.dim() == Some(complex.dim().unwrap_or(-1) - 1)
        && is_closed_homology_manifold(&boundary, field);
    (false, ok.then_some(boundary))
}

pub fn classify(complex: &SimplicialComplex, field: FieldSpec) -> Result<ClassificationReport> {
    classify_with(complex, field, &ClassifyOptions::default())
}

pub fn classify_with(
    complex: &SimplicialComplex,
    field: FieldSpec,
    options: &ClassifyOptions,
) -> Result<ClassificationReport> {
    complex.require_nonvoid("classification")?;
    let d = complex.d();
    let dim = complex.dim().unwrap_or(-1);
    let num_faces = complex.num_faces();
    let betti = homology::reduced_betti(complex, field)?;
    let chi = betti.alternating_sum();
    let pure = complex.is_pure();
    let pseudomanifold = is_pseudomanifold(complex);
    let mut r = ClassificationReport {
        field,
        n: complex.n(),
        dim,
        num_faces,
        pure,
        connected: complex.is_connected(),
        pseudomanifold,
        normal_pseudomanifold: None,
        semi_eulerian: None,
        eulerian: None,
        homology_manifold: None,
        manifold_with_boundary: None,
        homology_sphere: None,
        homology_ball: None,
        orientable: None,
        boundary: None,
        balanced: None,
        missing_faces: None,
        flag: None,
        neighborliness: neighborliness(complex),
        r_stackedness: None,
        betti: betti.clone(),
        skipped: Vec::new(),
    };

    if num_faces > options.face_cap {
        r.skipped.push(format!(
            "link tests: {num_faces} faces exceed the face cap of {}",
            options.face_cap
        ));
    } else {
        let links = link_data(complex, field);
        let semi = links.iter().all(|l| l.chi == expected_chi(d, l.face.len()));
        r.semi_eulerian = Some(semi);
        r.eulerian = Some(semi && chi == expected_chi(d, 0));
        r.normal_pseudomanifold = Some(
            pseudomanifold && links.iter().filter(|l| l.face.dim() <= d as isize - 3).all(|l| l.connected),
        );
        let (closed, boundary) = manifold_kind(complex, &links, field);
        r.homology_manifold = Some(closed);
        r.manifold_with_boundary = Some(boundary.is_some());
        r.homology_sphere = Some(closed && betti == sphere_betti(d));
        if closed {
            r.boundary = Some(SimplicialComplex::empty());
            let mut top = betti.get(dim);
            if dim == 0 {
                top += 1;
            }
            r.orientable = Some(top as usize == complex.num_components());
        }
        if let Some(b) = boundary {
            let b_sphere = homology::reduced_betti(&b, field)? == sphere_betti(b.d());
            r.homology_ball = Some(betti.total() == 0 && b_sphere);
            r.r_stackedness = Some(stackedness_from(complex, &b));
            r.boundary = Some(b);
        } else {
            r.homology_ball = Some(false);
        }
        let missing = missing_faces(complex);
        r.flag = Some(missing.iter().all(|m| m.len() == 2));
        r.missing_faces = Some(missing);
    }
    if pure {
        r.balanced = balanced_coloring(complex)?;
    }
    debug_assert!(r.implications_hold(), "classification implications violated: {r:?}");
    Ok(r)
}

fn expected_chi(d: usize, face_size: usize) -> i64 {
    if (d as i64 - face_size as i64 - 1).rem_euclid(2) == 0 { 1 } else { -1 }
}

/// Reduced Betti numbers of the `(d-1)`-sphere.
fn sphere_betti(d: usize) -> BettiVector {
    let mut v = vec![0u64; d + 1];
    v[d] = 1;
    BettiVector::new(v)
}

/// A proper coloring with `d` colors, found by backtracking; `None` if none exists.
///
/// Every facet is a `d`-clique, so it must be rainbow. Vertices are colored
/// most-constrained first, which forces the last vertex of any facet whose
/// other vertices are colored.
pub fn balanced_coloring(complex: &SimplicialComplex) -> Result<Option<Coloring>> {
    complex.require_nonvoid("balanced coloring")?;
    if !complex.is_pure() {
        return Err(Error::domain("balanced coloring needs a pure complex"));
    }
    let d = complex.d();
    let n = complex.n();
    if n == 0 {
        return Ok(Some(Coloring(Vec::new())));
    }
    let adj = complex.adjacency();
    let component = components(&adj);
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut colored_in_comp = vec![0usize; n];
    let found = color_search(&adj, &component, d, &mut colors, &mut colored_in_comp);
    Ok(found.then(|| Coloring(colors.into_iter().map(|c| c.expect("all vertices colored")).collect())))
}

fn components(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut comp = vec![usize::MAX; adj.len()];
    for s in 0..adj.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if comp[u] == usize::MAX {
                    comp[u] = s;
                    stack.push(u);
                }
            }
        }
    }
    comp
}

fn color_search(
    adj: &[Vec<usize>],
    component: &[usize],
    d: usize,
    colors: &mut [Option<usize>],
    colored_in_comp: &mut [usize],
) -> bool {
    let available = |v: usize, colors: &[Option<usize>]| -> Vec<usize> {
        let used: HashSet<usize> = adj[v].iter().filter_map(|&u| colors[u]).collect();
        (0..d).filter(|c| !used.contains(c)).collect()
    };
    let mut best: Option<(usize, Vec<usize>)> = None;
    for v in (0..colors.len()).filter(|&v| colors[v].is_none()) {
        let a = available(v, colors);
        if a.is_empty() {
            return false;
        }
        if best.as_ref().is_none_or(|(_, b)| a.len() < b.len()) {
            let forced = a.len() == 1;
            best = Some((v, a));
            if forced {
                break;
            }
        }
    }
    let Some((v, mut options)) = best else {
        return true;
    };
    if colored_in_comp[component[v]] == 0 {
        // colors are interchangeable within an uncolored component
        options.truncate(1);
    }
    for c in options {
        colors[v] = Some(c);
        colored_in_comp[component[v]] += 1;
        if color_search(adj, component, d, colors, colored_in_comp) {
            return true;
        }
        colors[v] = None;
        colored_in_comp[component[v]] -= 1;
    }
    false
}

/// Minimal non-faces: `S ∉ Δ` with every proper subset in `Δ`, sorted by
/// size then lexicographically.
pub fn missing_faces(complex: &SimplicialComplex) -> Vec<Face> {
    missing_faces_up_to(complex, usize::MAX)
}

/// Missing faces with at most `max_size` vertices.
///
/// Each candidate is a face extended by a vertex larger than all of its
/// vertices, so every missing face is produced exactly once.
pub fn missing_faces_up_to(complex: &SimplicialComplex, max_size: usize) -> Vec<Face> {
    if complex.is_void() {
        return Vec::new();
    }
    let faces = complex.face_set();
    let n = complex.n();
    let mut out: Vec<Face> = faces
        .par_iter()
        .filter(|f| f.len() < max_size)
        .flat_map_iter(|f| {
            let start = f.max_vertex().map_or(0, |m| m + 1);
            let faces = &faces;
            (start..n).filter_map(move |v| {
                let s = f.with(v);
                let minimal = !faces.contains(&s) && f.vertices().all(|u| faces.contains(&s.without(u)));
                minimal.then_some(s)
            })
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn is_flag(complex: &SimplicialComplex) -> bool {
    missing_faces(complex).iter().all(|m| m.len() == 2)
}

/// The largest `s` such that every `s`-subset of vertices is a face.
pub fn neighborliness(complex: &SimplicialComplex) -> usize {
    let f = complex.f_vector();
    let n = complex.n() as i64;
    (1..=complex.n()).take_while(|&s| f.get(s as isize - 1) as i64 == binomial(n, s as i64)).last().unwrap_or(0)
}

/// The least `r` such that every face of dimension `≤ dim − r − 1` lies in `∂Δ`.
pub fn r_stackedness(complex: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    complex.require_nonvoid("r-stackedness")?;
    let links = link_data(complex, field);
    match manifold_kind(complex, &links, field) {
        (true, _) => Err(Error::domain("r-stackedness of closed manifolds is not decided here")),
        (false, Some(b)) => Ok(stackedness_from(complex, &b)),
        (false, None) => Err(Error::domain("not a homology manifold with boundary")),
    }
}

fn stackedness_from(complex: &SimplicialComplex, boundary: &SimplicialComplex) -> usize {
    let top = complex.dim().unwrap_or(0);
    let boundary_faces = boundary.face_set();
    let min_interior = complex
        .faces_by_dim()
        .iter()
        .flatten()
        .filter(|f| !boundary_faces.contains(*f))
        .map(Face::dim)
        .min()
        .unwrap_or(top);
    (top - min_interior).max(0) as usize
}
