//! Pure simplicial complexes given by their facet lists.
//!
//! Vertex tokens are mapped to dense ids `0..v` in canonical token order
//! (numeric tokens numerically, then everything else lexicographically), and
//! facets are stored as sorted id vectors, themselves sorted. Two complexes
//! built from the same facets in any order and any token order compare equal.

mod stacking;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};

pub use stacking::{find_stacking_order, is_stacked, StackingOrder};

pub type VertexId = usize;
pub type FacetId = usize;

/// Orders tokens: all-digit tokens numerically first, then the rest by string.
pub fn token_cmp(a: &str, b: &str) -> Ordering {
    fn numeric(s: &str) -> Option<&str> {
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            let trimmed = s.trim_start_matches('0');
            Some(if trimmed.is_empty() { "0" } else { trimmed })
        } else {
            None
        }
    }
    match (numeric(a), numeric(b)) {
        (Some(x), Some(y)) => x
            .len()
            .cmp(&y.len())
            .then_with(|| x.cmp(y))
            .then_with(|| a.cmp(b)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}

/// `a ∩ b` for sorted slices.
pub fn intersection(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn intersection_len(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// `a ⊆ b` for sorted slices.
pub fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    intersection_len(a, b) == a.len()
}

/// `a \ b` for sorted slices.
pub fn difference(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    a.iter()
        .copied()
        .filter(|x| b.binary_search(x).is_err())
        .collect()
}

/// Sorted, deduplicated union.
pub fn union(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// An immutable pure simplicial complex of dimension `d >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    facets: Vec<Vec<VertexId>>,
    dim: usize,
    ridges: BTreeMap<Vec<VertexId>, Vec<FacetId>>,
    vertex_facets: Vec<Vec<FacetId>>,
}

impl SimplicialComplex {
    /// Builds the canonical complex from facets given as token lists.
    ///
    /// Errors refer to facets by their position in `facets`.
    pub fn build<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let size = facets[0].len();
        for (i, facet) in facets.iter().enumerate() {
            let mut seen: Vec<&str> = facet.iter().map(AsRef::as_ref).collect();
            seen.sort_unstable();
            if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInFacet {
                    facet: i,
                    token: w[0].to_string(),
                });
            }
            if facet.len() != size {
                return Err(Error::NotPure {
                    facet: i,
                    expected: size,
                    found: facet.len(),
                });
            }
        }
        if size <= 1 {
            return Err(Error::ZeroDimensional);
        }

        let mut labels: Vec<String> = facets
            .iter()
            .flatten()
            .map(|t| t.as_ref().to_string())
            .collect();
        labels.sort_by(|a, b| token_cmp(a, b));
        labels.dedup();
        let index: HashMap<String, VertexId> = labels
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();

        let mut keyed: Vec<(Vec<VertexId>, usize)> = facets
            .iter()
            .enumerate()
            .map(|(pos, f)| {
                let mut ids: Vec<VertexId> = f.iter().map(|t| index[t.as_ref()]).collect();
                ids.sort_unstable();
                (ids, pos)
            })
            .collect();
        keyed.sort();
        for w in keyed.windows(2) {
            if w[0].0 == w[1].0 {
                let (first, facet) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                return Err(Error::DuplicateFacet { facet, first });
            }
        }
        let facets: Vec<Vec<VertexId>> = keyed.into_iter().map(|(f, _)| f).collect();
        Ok(Self::from_canonical(labels, index, facets, size - 1))
    }

    fn from_canonical(
        labels: Vec<String>,
        index: HashMap<String, VertexId>,
        facets: Vec<Vec<VertexId>>,
        dim: usize,
    ) -> Self {
        let mut ridges: BTreeMap<Vec<VertexId>, Vec<FacetId>> = BTreeMap::new();
        let mut vertex_facets = vec![Vec::new(); labels.len()];
        for (id, facet) in facets.iter().enumerate() {
            for (skip, &v) in facet.iter().enumerate() {
                vertex_facets[v].push(id);
                let ridge: Vec<VertexId> = facet
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                ridges.entry(ridge).or_default().push(id);
            }
        }
        Self {
            labels,
            index,
            facets,
            dim,
            ridges,
            vertex_facets,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Vec<VertexId>] {
        &self.facets
    }

    pub fn facet(&self, id: FacetId) -> &[VertexId] {
        &self.facets[id]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_id(&self, token: &str) -> Option<VertexId> {
        self.index.get(token).copied()
    }

    /// Looks up a facet by its sorted vertex ids.
    pub fn facet_id(&self, vertices: &[VertexId]) -> Option<FacetId> {
        self.facets
            .binary_search_by(|f| f.as_slice().cmp(vertices))
            .ok()
    }

    /// Facet token: vertex tokens in canonical order joined by commas, e.g. `2,3,4`.
    pub fn facet_label(&self, id: FacetId) -> String {
        self.face_label(&self.facets[id])
    }

    pub fn face_label(&self, face: &[VertexId]) -> String {
        face.iter()
            .map(|&v| self.labels[v].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Resolves a comma-joined facet token in any vertex order.
    pub fn facet_by_label(&self, token: &str) -> Result<FacetId> {
        let face = self.face_by_label(token)?;
        self.facet_id(&face)
            .ok_or_else(|| Error::UnknownToken(token.to_string()))
    }

    /// Resolves comma-joined vertex tokens into a sorted vertex set.
    pub fn face_by_label(&self, token: &str) -> Result<Vec<VertexId>> {
        let mut face = token
            .split(',')
            .map(|t| {
                self.vertex_id(t)
                    .ok_or_else(|| Error::UnknownToken(t.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        face.sort_unstable();
        face.dedup();
        Ok(face)
    }

    /// Facets containing vertex `v`, ascending.
    pub fn facets_of_vertex(&self, v: VertexId) -> &[FacetId] {
        &self.vertex_facets[v]
    }

    /// All codimension-one faces with the facets containing each.
    pub fn ridges(&self) -> impl Iterator<Item = (&[VertexId], &[FacetId])> {
        self.ridges
            .iter()
            .map(|(r, f)| (r.as_slice(), f.as_slice()))
    }

    /// Facets containing the codimension-one face `ridge`, or `None` if it is not one.
    pub fn ridge_facets(&self, ridge: &[VertexId]) -> Option<&[FacetId]> {
        self.ridges.get(ridge).map(Vec::as_slice)
    }

    /// Whether the sorted vertex set lies in some facet.
    pub fn is_face(&self, face: &[VertexId]) -> bool {
        match face.first() {
            None => true,
            Some(&v) if v < self.vertex_count() => self.vertex_facets[v]
                .iter()
                .any(|&f| is_subset(face, &self.facets[f])),
            Some(_) => false,
        }
    }

    pub fn share_facet(&self, v: VertexId, w: VertexId) -> bool {
        self.vertex_facets[v]
            .iter()
            .any(|f| self.facets[*f].binary_search(&w).is_ok())
    }

    /// Facets contained in the vertex set `allowed`.
    pub fn restrict(&self, allowed: &[VertexId]) -> Vec<FacetId> {
        let mut keep = vec![false; self.vertex_count()];
        for &v in allowed {
            if v < keep.len() {
                keep[v] = true;
            }
        }
        (0..self.facet_count())
            .filter(|&f| self.facets[f].iter().all(|&v| keep[v]))
            .collect()
    }

    /// The complex generated by a non-empty subset of facets, with id maps back
    /// into `self`. Vertex tokens are preserved.
    pub fn subcomplex(&self, facets: &[FacetId]) -> Result<Subcomplex> {
        let lists: Vec<Vec<&str>> = facets
            .iter()
            .map(|&f| self.facets[f].iter().map(|&v| self.label(v)).collect())
            .collect();
        let complex = SimplicialComplex::build(&lists)?;
        let vertices = complex
            .labels
            .iter()
            .map(|t| self.index[t.as_str()])
            .collect();
        let facets = (0..complex.facet_count())
            .map(|f| {
                let parent: Vec<VertexId> = {
                    let mut ids: Vec<_> = complex.facets[f]
                        .iter()
                        .map(|&v| self.index[complex.labels[v].as_str()])
                        .collect();
                    ids.sort_unstable();
                    ids
                };
                self.facet_id(&parent)
                    .expect("subcomplex facet exists in parent")
            })
            .collect();
        Ok(Subcomplex {
            complex,
            vertices,
            facets,
        })
    }

    /// Facets adjacent when they share a codimension-one face.
    pub fn dual_adjacency(&self) -> DualGraph {
        let mut adjacency = vec![Vec::new(); self.facet_count()];
        for shared in self.ridges.values() {
            for (i, &a) in shared.iter().enumerate() {
                for &b in &shared[i + 1..] {
                    adjacency[a].push(b);
                    adjacency[b].push(a);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        DualGraph { adjacency }
    }
}

/// A subcomplex together with its id maps into the parent complex.
#[derive(Clone, Debug)]
pub struct Subcomplex {
    pub complex: SimplicialComplex,
    /// `vertices[child] = parent`
    pub vertices: Vec<VertexId>,
    /// `facets[child] = parent`
    pub facets: Vec<FacetId>,
}

impl Subcomplex {
    pub fn child_vertex(&self, parent: VertexId) -> Option<VertexId> {
        self.vertices.iter().position(|&v| v == parent)
    }

    pub fn child_facet(&self, parent: FacetId) -> Option<FacetId> {
        self.facets.iter().position(|&f| f == parent)
    }
}

/// Undirected graph on facets; two facets are adjacent iff they share `d` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    adjacency: Vec<Vec<FacetId>>,
}

impl DualGraph {
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, f: FacetId) -> &[FacetId] {
        &self.adjacency[f]
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(FacetId, FacetId)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.adjacency.is_empty() {
            return true;
        }
        self.bfs(0).iter().all(|d| d.is_some())
    }

    /// Hop distances and BFS parents from `source`.
    pub fn bfs_tree(&self, source: FacetId) -> (Vec<Option<usize>>, Vec<Option<FacetId>>) {
        let n = self.adjacency.len();
        let mut dist = vec![None; n];
        let mut parent = vec![None; n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(f) = queue.pop_front() {
            let next = dist[f].unwrap() + 1;
            for &g in &self.adjacency[f] {
                if dist[g].is_none() {
                    dist[g] = Some(next);
                    parent[g] = Some(f);
                    queue.push_back(g);
                }
            }
        }
        (dist, parent)
    }

    pub fn bfs(&self, source: FacetId) -> Vec<Option<usize>> {
        self.bfs_tree(source).0
    }
}
