//! Finite abstract simplicial complexes stored by their facets.
//!
//! Vertices are dense indices `0..n`. Every complex carries a label per vertex;
//! labels are interned in ascending [`Label`] order, so two complexes built
//! from the same labelled facet list are identical values.

use std::collections::{HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A set of vertex indices.
///
/// Stored as a bitmask: a single inline word covers vertex indices below 64,
/// larger indices spill into additional heap words. Trailing zero words are
/// always trimmed so that equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Face {
    words: SmallVec<[u64; 1]>,
}

impl Face {
    pub fn empty() -> Face {
        Face::default()
    }

    pub fn singleton(v: usize) -> Face {
        let mut f = Face::empty();
        f.insert(v);
        f
    }

    /// Builds a face from distinct vertex indices.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Result<Face> {
        let mut f = Face::empty();
        for v in vertices {
            if !f.insert(v) {
                return Err(Error::MalformedInput(format!("vertex {v} repeated within a face")));
            }
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Cardinality minus one; the empty face has dimension −1.
    pub fn dim(&self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        self.words.get(w).is_some_and(|x| x >> b & 1 == 1)
    }

    /// Adds `v`; returns false if it was already present.
    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let had = self.contains(v);
        if had {
            self.words[w] &= !(1 << b);
            self.trim();
        }
        had
    }

    pub fn with(&self, v: usize) -> Face {
        let mut f = self.clone();
        f.insert(v);
        f
    }

    pub fn without(&self, v: usize) -> Face {
        let mut f = self.clone();
        f.remove(v);
        f
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.words.len() > other.words.len() {
            return false;
        }
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Face) -> Face {
        let (long, short) = if self.words.len() >= other.words.len() { (self, other) } else { (other, self) };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(short.words.iter()) {
            *w |= s;
        }
        Face { words }
    }

    pub fn intersection(&self, other: &Face) -> Face {
        let mut f = Face {
            words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect(),
        };
        f.trim();
        f
    }

    pub fn difference(&self, other: &Face) -> Face {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        let mut f = Face { words };
        f.trim();
        f
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| BitIter(w).map(move |b| i * WORD_BITS + b))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.vertices().collect()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        let (i, w) = self.words.iter().enumerate().next_back()?;
        Some(i * WORD_BITS + (WORD_BITS - 1 - w.leading_zeros() as usize))
    }

    /// All subfaces with exactly `size` vertices.
    pub fn subfaces(&self, size: usize) -> impl Iterator<Item = Face> + '_ {
        self.vertices().combinations(size).map(|c| c.into_iter().collect())
    }

    /// Position of `v` among the vertices of this face (the sign exponent in ∂).
    pub fn rank_of(&self, v: usize) -> usize {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let below: usize = self.words.iter().take(w).map(|x| x.count_ones() as usize).sum();
        let mask = if b == 0 { 0 } else { u64::MAX >> (WORD_BITS - b) };
        below + self.words.get(w).map_or(0, |x| (x & mask).count_ones() as usize)
    }

    /// Applies a vertex map; the map must be injective on this face.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Face {
        self.vertices().map(f).collect()
    }

    /// The low 64 bits; exact whenever every vertex index is below 64.
    pub(crate) fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut f = Face::empty();
        for v in iter {
            f.insert(v);
        }
        f
    }
}

impl Ord for Face {
    /// Lexicographic order on the increasing vertex sequences.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices().join(","))
    }
}

/// A user-facing vertex label. Integers sort numerically and before names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Int(i64),
    Name(String),
}

impl Label {
    /// Integer-looking tokens become [`Label::Int`], everything else a name.
    pub fn parse(token: &str) -> Label {
        token.parse::<i64>().map(Label::Int).unwrap_or_else(|_| Label::Name(token.to_string()))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Label {
    fn from(v: i64) -> Self {
        Label::Int(v)
    }
}

impl From<i32> for Label {
    fn from(v: i32) -> Self {
        Label::Int(v as i64)
    }
}

impl From<usize> for Label {
    fn from(v: usize) -> Self {
        Label::Int(v as i64)
    }
}

impl From<&str> for Label {
    fn from(v: &str) -> Self {
        Label::parse(v)
    }
}

impl From<String> for Label {
    fn from(v: String) -> Self {
        Label::parse(&v)
    }
}

/// Face numbers `f_{-1}, f_0, …, f_{d-1}`, stored from index −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FVector(entries)
    }

    /// `f_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1).ok().and_then(|j| self.0.get(j)).copied().unwrap_or(0)
    }

    /// Entries starting at `f_{-1}`.
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `d = dim + 1`.
    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

/// A finite simplicial complex, immutable after construction.
///
/// The void complex (no faces at all) and the empty complex `{∅}` are distinct
/// values: the former has no facets, the latter has the empty face as its only
/// facet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    labels: Vec<Label>,
    dim: Option<isize>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n", &self.n())
            .field("dim", &self.dim)
            .field("facets", &self.facets)
            .finish()
    }
}

impl SimplicialComplex {
    pub fn void() -> Self {
        SimplicialComplex { facets: Vec::new(), labels: Vec::new(), dim: None }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex { facets: vec![Face::empty()], labels: Vec::new(), dim: Some(-1) }
    }

    /// Builds a complex from arbitrary labelled faces.
    ///
    /// Labels are interned to `0..n` in ascending label order; duplicate and
    /// non-maximal faces are dropped. An empty input yields the void complex,
    /// and a list containing only empty faces yields `{∅}`.
    pub fn from_facets<I, F, L>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        let raw: Vec<Vec<Label>> = raw.into_iter().map(|f| f.into_iter().map(Into::into).collect()).collect();
        let mut all: Vec<Label> = raw.iter().flatten().cloned().collect();
        all.sort();
        all.dedup();
        let index: HashMap<&Label, usize> = all.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut faces = Vec::with_capacity(raw.len());
        for f in &raw {
            let face = Face::new(f.iter().map(|l| index[l])).map_err(|_| {
                Error::MalformedInput(format!("face [{}] repeats a vertex", f.iter().join(" ")))
            })?;
            faces.push(face);
        }
        Ok(Self::from_parts(all.clone(), faces))
    }

    /// Builds a complex over vertex indices with the given labels.
    ///
    /// Unused vertices are dropped and the remainder re-interned in label order.
    pub fn with_labels(labels: Vec<Label>, faces: Vec<Face>) -> Result<Self> {
        let distinct: HashSet<&Label> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::MalformedInput("vertex labels are not distinct".into()));
        }
        if let Some(bad) = faces.iter().filter_map(Face::max_vertex).find(|&v| v >= labels.len()) {
            return Err(Error::MalformedInput(format!("vertex {bad} has no label")));
        }
        Ok(Self::from_parts(labels, faces))
    }

    /// Integer-labelled complex on vertices `0..` (labels are the indices).
    pub fn from_index_faces(faces: Vec<Face>) -> Self {
        let n = faces.iter().filter_map(Face::max_vertex).max().map_or(0, |m| m + 1);
        Self::from_parts((0..n).map(Label::from).collect(), faces)
    }

    fn from_parts(labels: Vec<Label>, faces: Vec<Face>) -> Self {
        if faces.is_empty() {
            return Self::void();
        }
        let used: Face = faces.iter().fold(Face::empty(), |acc, f| acc.union(f));
        let mut order: Vec<usize> = used.to_vec();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut remap = vec![usize::MAX; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let new_labels: Vec<Label> = order.iter().map(|&v| labels[v].clone()).collect();
        let faces: Vec<Face> = faces.iter().map(|f| f.map(|v| remap[v])).collect();
        let facets = maximal_faces(faces);
        let dim = facets.iter().map(Face::dim).max();
        SimplicialComplex { facets, labels: new_labels, dim }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True exactly for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.dim == Some(-1)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    /// Index of the vertex carrying `label`.
    pub fn vertex_of(&self, label: &Label) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// Maps labels to a face of vertex indices.
    pub fn face_of_labels<'a>(&self, labels: impl IntoIterator<Item = &'a Label>) -> Result<Face> {
        let mut f = Face::empty();
        for l in labels {
            let v = self.vertex_of(l).ok_or_else(|| Error::domain(format!("unknown vertex label {l}")))?;
            f.insert(v);
        }
        Ok(f)
    }

    /// `None` for the void complex, −1 for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.dim
    }

    /// `dim + 1` (the Krull dimension of the face ring); 0 for `{∅}` and the void complex.
    pub fn d(&self) -> usize {
        self.dim.map_or(0, |k| (k + 1) as usize)
    }

    pub fn vertex_set(&self) -> Face {
        (0..self.n()).collect()
    }

    pub(crate) fn require_nonvoid(&self, what: &str) -> Result<()> {
        if self.is_void() {
            Err(Error::domain(format!("{what} is undefined on the void complex")))
        } else {
            Ok(())
        }
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| Some(f.dim()) == self.dim)
    }

    /// Whether `face` belongs to the complex.
    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    pub fn is_facet(&self, face: &Face) -> bool {
        self.facets.binary_search(face).is_ok()
    }

    /// All faces of dimension `k`, sorted; empty when `k` is out of range.
    pub fn all_faces(&self, k: isize) -> Vec<Face> {
        if k < -1 || self.dim.is_none_or(|d| k > d) {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut set: HashSet<Face> = HashSet::new();
        for f in self.facets.iter().filter(|f| f.len() >= size) {
            set.extend(f.subfaces(size));
        }
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort();
        faces
    }

    /// Faces grouped by dimension: index `i` holds the `(i-1)`-faces.
    pub fn faces_by_dim(&self) -> Vec<Vec<Face>> {
        match self.dim {
            None => Vec::new(),
            Some(d) => (-1..=d).map(|k| self.all_faces(k)).collect(),
        }
    }

    /// Every face of the complex, the empty face included.
    pub fn face_set(&self) -> HashSet<Face> {
        let mut set = HashSet::new();
        for f in &self.facets {
            for size in 0..=f.len() {
                set.extend(f.subfaces(size));
            }
        }
        set
    }

    pub fn num_faces(&self) -> usize {
        self.f_vector().entries().iter().sum::<u64>() as usize
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_dim().iter().map(|fs| fs.len() as u64).collect())
    }

    /// The `k`-skeleton: all faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> SimplicialComplex {
        let size = (k + 1).max(0) as usize;
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                faces.push(f.clone());
            } else {
                faces.extend(f.subfaces(size));
            }
        }
        self.sub(faces)
    }

    /// The closed star `{G : F ∪ G ∈ Δ}`, re-interned over its own vertices.
    pub fn star(&self, face: &Face) -> Result<SimplicialComplex> {
        self.check_face(face)?;
        Ok(self.sub(self.facets.iter().filter(|f| face.is_subset(f)).cloned().collect()))
    }

    /// The link `{G ∈ st(F) : F ∩ G = ∅}`, re-interned over its own vertices.
    pub fn link(&self, face: &Face) -> Result<SimplicialComplex> {
        self.check_face(face)?;
        Ok(self.link_unchecked(face))
    }

    pub(crate) fn link_unchecked(&self, face: &Face) -> SimplicialComplex {
        let faces = self.facets.iter().filter(|f| face.is_subset(f)).map(|f| f.difference(face)).collect();
        self.sub(faces)
    }

    pub fn vertex_link(&self, v: usize) -> Result<SimplicialComplex> {
        self.link(&Face::singleton(v))
    }

    /// The induced subcomplex `Δ_W = {F ∈ Δ : F ⊆ W}`; `W = ∅` yields `{∅}`.
    pub fn induced(&self, w: &Face) -> SimplicialComplex {
        if self.is_void() {
            return Self::void();
        }
        self.sub(self.facets.iter().map(|f| f.intersection(w)).collect())
    }

    /// Subcomplex spanned by faces given in this complex's vertex indices.
    fn sub(&self, faces: Vec<Face>) -> SimplicialComplex {
        Self::from_parts(self.labels.clone(), faces)
    }

    fn check_face(&self, face: &Face) -> Result<()> {
        if self.contains_face(face) {
            Ok(())
        } else {
            Err(Error::domain(format!("{face:?} is not a face of the complex")))
        }
    }

    /// Join `Δ₁ * Δ₂` on disjoint vertex sets. Vertices are relabelled `0..n₁+n₂`,
    /// with this complex's vertices first.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.require_nonvoid("join")?;
        other.require_nonvoid("join")?;
        let shift = self.n();
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                faces.push(f.union(&g.map(|v| v + shift)));
            }
        }
        let labels = (0..shift + other.n()).map(Label::from).collect();
        Ok(Self::from_parts(labels, faces))
    }

    pub fn cone(&self) -> Result<SimplicialComplex> {
        self.join(&point())
    }

    pub fn suspension(&self) -> Result<SimplicialComplex> {
        self.join(&two_points())
    }

    /// Disjoint union, relabelled `0..n₁+n₂` with this complex's vertices first.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.require_nonvoid("disjoint union")?;
        other.require_nonvoid("disjoint union")?;
        let shift = self.n();
        let mut faces: Vec<Face> = self.facets.iter().filter(|f| !f.is_empty()).cloned().collect();
        faces.extend(other.facets.iter().filter(|f| !f.is_empty()).map(|g| g.map(|v| v + shift)));
        if faces.is_empty() {
            return Ok(Self::empty());
        }
        let labels = (0..shift + other.n()).map(Label::from).collect();
        Ok(Self::from_parts(labels, faces))
    }

    /// Connected sum along `facet1 ∈ Δ₁` and `facet2 ∈ Δ₂`.
    ///
    /// `matching` pairs each vertex of `facet1` with a vertex of `facet2`.
    /// Matched vertices are identified and both facets deleted. The result is
    /// labelled `0..n₁+n₂−d`: vertices of `Δ₁` keep their indices, unmatched
    /// vertices of `Δ₂` follow in order.
    pub fn connected_sum(
        &self,
        other: &SimplicialComplex,
        facet1: &Face,
        facet2: &Face,
        matching: &[(usize, usize)],
    ) -> Result<SimplicialComplex> {
        Ok(self.connected_sum_with_map(other, facet1, facet2, matching)?.0)
    }

    /// As [`connected_sum`](Self::connected_sum), also returning where each
    /// vertex of `Δ₂` went.
    pub fn connected_sum_with_map(
        &self,
        other: &SimplicialComplex,
        facet1: &Face,
        facet2: &Face,
        matching: &[(usize, usize)],
    ) -> Result<(SimplicialComplex, Vec<usize>)> {
        self.require_nonvoid("connected sum")?;
        other.require_nonvoid("connected sum")?;
        if self.dim != other.dim || !self.is_pure() || !other.is_pure() {
            return Err(Error::domain("connected sum needs pure complexes of equal dimension"));
        }
        if !self.is_facet(facet1) || !other.is_facet(facet2) {
            return Err(Error::domain("connected sum must be taken along facets"));
        }
        let left: Face = matching.iter().map(|p| p.0).collect();
        let right: Face = matching.iter().map(|p| p.1).collect();
        if matching.len() != facet1.len() || left != *facet1 || right != *facet2 {
            return Err(Error::domain("matching is not a bijection between the two facets"));
        }
        let n1 = self.n();
        let mut map = vec![usize::MAX; other.n()];
        for &(a, b) in matching {
            map[b] = a;
        }
        let mut next = n1;
        for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let mut faces: Vec<Face> = self.facets.iter().filter(|f| *f != facet1).cloned().collect();
        let ours: HashSet<&Face> = faces.iter().collect();
        let mut theirs = Vec::new();
        for g in other.facets.iter().filter(|g| *g != facet2) {
            let m = g.map(|v| map[v]);
            if ours.contains(&m) {
                return Err(Error::DegenerateGluing(format!("identification doubles the facet {m:?}")));
            }
            theirs.push(m);
        }
        faces.extend(theirs);
        let labels = (0..next).map(Label::from).collect();
        Ok((Self::from_parts(labels, faces), map))
    }

    /// Vertex adjacency lists of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for e in self.all_faces(1) {
            let v = e.to_vec();
            adj[v[0]].push(v[1]);
            adj[v[1]].push(v[0]);
        }
        adj
    }

    /// Number of connected components of the 1-skeleton.
    pub fn num_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for f in &self.facets {
            let mut it = f.vertices();
            if let Some(first) = it.next() {
                for v in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                    parent[a] = b;
                }
            }
        }
        (0..self.n()).filter(|&v| find(&mut parent, v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.num_components() == 1
    }
}

/// The one-vertex complex.
pub fn point() -> SimplicialComplex {
    SimplicialComplex::from_index_faces(vec![Face::singleton(0)])
}

/// `S⁰`: two isolated vertices.
pub fn two_points() -> SimplicialComplex {
    SimplicialComplex::from_index_faces(vec![Face::singleton(0), Face::singleton(1)])
}

/// Reduces a face list to its inclusion-maximal members, sorted.
fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort();
    faces.dedup();
    let sizes: HashSet<usize> = faces.iter().map(Face::len).collect();
    if sizes.len() <= 1 {
        return faces;
    }
    faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
    let mut kept: Vec<Face> = Vec::new();
    // covered: all proper subfaces (at the current size) of faces already kept
    let mut covered: HashSet<Face> = HashSet::new();
    let mut current = faces[0].len();
    let mut i = 0;
    while i < faces.len() {
        let size = faces[i].len();
        while current > size {
            let parents: Vec<Face> =
                covered.iter().cloned().chain(kept.iter().filter(|k| k.len() == current).cloned()).collect();
            covered.clear();
            for p in parents {
                for v in p.vertices() {
                    covered.insert(p.without(v));
                }
            }
            current -= 1;
        }
        if !covered.contains(&faces[i]) {
            kept.push(faces[i].clone());
        }
        i += 1;
    }
    kept.sort();
    kept
}
