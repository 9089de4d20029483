//! Gallery walks and the unique paths of a stacked complex.
//!
//! A walk is a facet sequence whose consecutive facets share a codimension-one
//! face; a path is a walk whose consecutive intersections are pairwise
//! distinct. In a stacked complex there is exactly one path between any two
//! facets, and exactly one path between two separated faces, so both yield
//! well-defined distances.

use std::collections::HashMap;

use crate::complex::{
    intersection, intersection_len, is_stacked, is_subset, union, FacetId, SimplicialComplex,
    StackingOrder, VertexId,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetPath {
    facets: Vec<FacetId>,
}

impl FacetPath {
    pub fn facets(&self) -> &[FacetId] {
        &self.facets
    }

    /// Number of facets `p`.
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn first(&self) -> FacetId {
        self.facets[0]
    }

    pub fn last(&self) -> FacetId {
        *self.facets.last().unwrap()
    }

    /// Interior facets `f_2 .. f_{p-1}`.
    pub fn interior(&self) -> &[FacetId] {
        if self.facets.len() <= 2 {
            &[]
        } else {
            &self.facets[1..self.facets.len() - 1]
        }
    }

    /// `f_i ∩ f_{i+1}` for each consecutive pair.
    pub fn intersections(&self, x: &SimplicialComplex) -> Vec<Vec<VertexId>> {
        self.facets
            .windows(2)
            .map(|w| intersection(x.facet(w[0]), x.facet(w[1])))
            .collect()
    }

    /// Left end vertex `f_1 \ f_2` and right end vertex `f_p \ f_{p-1}`.
    pub fn end_vertices(&self, x: &SimplicialComplex) -> Result<(VertexId, VertexId)> {
        let p = self.facets.len();
        if p < 2 {
            return Err(Error::PathTooShort);
        }
        let only = |a: FacetId, b: FacetId| {
            let other = x.facet(b);
            x.facet(a)
                .iter()
                .copied()
                .find(|v| other.binary_search(v).is_err())
                .expect("adjacent facets differ in one vertex")
        };
        Ok((
            only(self.facets[0], self.facets[1]),
            only(self.facets[p - 1], self.facets[p - 2]),
        ))
    }

    /// A walk whose consecutive intersections are pairwise distinct.
    pub fn is_path(&self, x: &SimplicialComplex) -> bool {
        if !is_walk(x, &self.facets) {
            return false;
        }
        let mut cuts = self.intersections(x);
        cuts.sort();
        cuts.windows(2).all(|w| w[0] != w[1])
    }
}

/// Whether consecutive facets all meet in a codimension-one face.
pub fn is_walk(x: &SimplicialComplex, walk: &[FacetId]) -> bool {
    !walk.is_empty()
        && walk.iter().all(|&f| f < x.facet_count())
        && walk
            .windows(2)
            .all(|w| intersection_len(x.facet(w[0]), x.facet(w[1])) == x.dim())
}

/// Shortens a walk to a path with the same end facets.
///
/// Repeatedly takes the leftmost `j` whose intersection `f_j ∩ f_{j+1}`
/// already occurred as `f_i ∩ f_{i+1}` (`i < j`) and cuts out the loop:
/// `f_{i+1} .. f_j` when `f_i != f_{j+1}`, otherwise `f_i .. f_j`.
pub fn reduce_walk(x: &SimplicialComplex, walk: &[FacetId]) -> Result<FacetPath> {
    if walk.is_empty() {
        return Err(Error::InvalidWalk { step: 0 });
    }
    if let Some(step) = (0..walk.len()).find(|&i| walk[i] >= x.facet_count()) {
        return Err(Error::InvalidWalk { step });
    }
    if let Some(step) = walk
        .windows(2)
        .position(|w| intersection_len(x.facet(w[0]), x.facet(w[1])) != x.dim())
    {
        return Err(Error::InvalidWalk { step });
    }

    let mut facets = walk.to_vec();
    'outer: loop {
        let mut seen: HashMap<Vec<VertexId>, usize> = HashMap::new();
        for j in 0..facets.len().saturating_sub(1) {
            let cut = intersection(x.facet(facets[j]), x.facet(facets[j + 1]));
            if let Some(&i) = seen.get(&cut) {
                if facets[i] != facets[j + 1] {
                    facets.drain(i + 1..=j);
                } else {
                    facets.drain(i..=j);
                }
                continue 'outer;
            }
            seen.insert(cut, j);
        }
        break;
    }
    Ok(FacetPath { facets })
}

/// A path `h | f_1, ..., f_p | k` between two faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePath {
    pub h: Vec<VertexId>,
    pub k: Vec<VertexId>,
    pub path: FacetPath,
}

impl FacePath {
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// End containment plus: neither `h` nor `k` lies in any `f_i ∩ f_{i+1}`.
    pub fn satisfies_invariants(&self, x: &SimplicialComplex) -> bool {
        let f = self.path.facets();
        if f.is_empty() || !self.path.is_path(x) {
            return false;
        }
        if !is_subset(&self.h, x.facet(f[0])) || !is_subset(&self.k, x.facet(f[f.len() - 1])) {
            return false;
        }
        self.path
            .intersections(x)
            .iter()
            .all(|cut| !is_subset(&self.h, cut) && !is_subset(&self.k, cut))
    }
}

/// Facet sets `X_m` and vertex sets `V_m` around a codimension-one face `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhood {
    pub ridge: Vec<VertexId>,
    pub m: usize,
    /// Facets whose face path to `g` has at most `m` facets.
    pub facets: Vec<FacetId>,
    /// Vertices of `facets`; the vertices of `g` when `m = 0`.
    pub vertices: Vec<VertexId>,
    /// Each `v ∈ V_m \ V_{m-1}` with the facets of `X_m` containing it.
    pub new_vertices: Vec<(VertexId, Vec<FacetId>)>,
}

/// A stacked complex with all-pairs gallery distances precomputed.
#[derive(Clone, Debug)]
pub struct Gallery {
    complex: SimplicialComplex,
    order: StackingOrder,
    dist: Vec<Vec<usize>>,
    parent: Vec<Vec<Option<FacetId>>>,
}

impl Gallery {
    pub fn new(complex: SimplicialComplex) -> Result<Self> {
        let order = is_stacked(&complex).ok_or(Error::NotStacked)?;
        let dual = complex.dual_adjacency();
        let mut dist = Vec::with_capacity(complex.facet_count());
        let mut parent = Vec::with_capacity(complex.facet_count());
        for f in 0..complex.facet_count() {
            let (d, p) = dual.bfs_tree(f);
            dist.push(
                d.into_iter()
                    .map(|x| x.expect("stacked complexes are gallery connected"))
                    .collect(),
            );
            parent.push(p);
        }
        Ok(Self {
            complex,
            order,
            dist,
            parent,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn stacking_order(&self) -> &StackingOrder {
        &self.order
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.complex
    }

    /// The unique path from `f` to `g`: a shortest dual-graph walk, reduced.
    pub fn facet_path(&self, f: FacetId, g: FacetId) -> FacetPath {
        let mut walk = vec![g];
        let mut cur = g;
        while let Some(prev) = self.parent[f][cur] {
            walk.push(prev);
            cur = prev;
        }
        walk.reverse();
        debug_assert_eq!(walk[0], f);
        reduce_walk(&self.complex, &walk).expect("bfs walks are valid")
    }

    /// Number of facets in the unique path, minus one.
    pub fn facet_distance(&self, f: FacetId, g: FacetId) -> usize {
        self.dist[f][g]
    }

    /// The unique path `h | f_1 .. f_p | k`.
    ///
    /// `h` and `k` must be faces, and must not be equal or jointly lie in a
    /// codimension-one face shared by two facets; otherwise the path is not
    /// unique and `NotSeparated` is returned.
    pub fn face_path(&self, h: &[VertexId], k: &[VertexId]) -> Result<FacePath> {
        let x = &self.complex;
        let h = canonical_face(h);
        let k = canonical_face(k);
        if h.is_empty() || k.is_empty() || !x.is_face(&h) || !x.is_face(&k) {
            return Err(Error::NotAFace);
        }
        if h == k || self.in_shared_ridge(&union(&h, &k)) {
            return Err(Error::NotSeparated);
        }
        let start = self.first_facet_containing(&h);
        let end = self.first_facet_containing(&k);
        let full = self.facet_path(start, end);
        let f = full.facets();
        let i = (0..f.len())
            .rev()
            .find(|&i| is_subset(&h, x.facet(f[i])))
            .expect("first facet contains h");
        let j = (i..f.len())
            .find(|&j| is_subset(&k, x.facet(f[j])))
            .expect("last facet contains k");
        Ok(FacePath {
            h,
            k,
            path: FacetPath {
                facets: f[i..=j].to_vec(),
            },
        })
    }

    /// 0 for equal vertices, 1 for vertices on a common facet, otherwise the
    /// number of facets on the vertex-to-vertex face path.
    pub fn vertex_distance(&self, v: VertexId, w: VertexId) -> usize {
        if v == w {
            0
        } else if self.complex.share_facet(v, w) {
            1
        } else {
            self.face_path(&[v], &[w])
                .expect("vertices without a common facet are separated")
                .len()
        }
    }

    /// Facet count of the face path from facet `f` to the codimension-one face `ridge`.
    pub fn ridge_distance(&self, f: FacetId, ridge: &[VertexId]) -> Result<usize> {
        if self.complex.ridge_facets(ridge).is_none() {
            return Err(Error::NotCodimOneFace);
        }
        Ok(self.face_path(self.complex.facet(f), ridge)?.len())
    }

    pub fn distance_neighborhood(&self, ridge: &[VertexId], m: usize) -> Result<Neighborhood> {
        let x = &self.complex;
        let ridge = canonical_face(ridge);
        if x.ridge_facets(&ridge).is_none() {
            return Err(Error::NotCodimOneFace);
        }
        let dist = (0..x.facet_count())
            .map(|f| self.ridge_distance(f, &ridge))
            .collect::<Result<Vec<_>>>()?;
        let vertices_within = |m: usize| -> Vec<VertexId> {
            if m == 0 {
                return ridge.clone();
            }
            let mut vs: Vec<VertexId> = (0..x.facet_count())
                .filter(|&f| dist[f] <= m)
                .flat_map(|f| x.facet(f).iter().copied())
                .collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        };
        let facets: Vec<FacetId> = (0..x.facet_count())
            .filter(|&f| m > 0 && dist[f] <= m)
            .collect();
        let vertices = vertices_within(m);
        let new_vertices = if m == 0 {
            Vec::new()
        } else {
            let previous = vertices_within(m - 1);
            vertices
                .iter()
                .copied()
                .filter(|v| previous.binary_search(v).is_err())
                .map(|v| {
                    let containing = facets
                        .iter()
                        .copied()
                        .filter(|&f| x.facet(f).binary_search(&v).is_ok())
                        .collect();
                    (v, containing)
                })
                .collect()
        };
        Ok(Neighborhood {
            ridge,
            m,
            facets,
            vertices,
            new_vertices,
        })
    }

    fn first_facet_containing(&self, face: &[VertexId]) -> FacetId {
        *self
            .complex
            .facets_of_vertex(face[0])
            .iter()
            .find(|&&f| is_subset(face, self.complex.facet(f)))
            .expect("face lies in a facet")
    }

    /// Whether `face` lies in a codimension-one face contained in two or more facets.
    fn in_shared_ridge(&self, face: &[VertexId]) -> bool {
        let x = &self.complex;
        if face.len() > x.dim() || !x.is_face(face) {
            return false;
        }
        x.facets_of_vertex(face[0])
            .iter()
            .filter(|&&f| is_subset(face, x.facet(f)))
            .any(|&f| {
                x.facet(f)
                    .iter()
                    .filter(|v| face.binary_search(v).is_err())
                    .any(|&drop| {
                        let ridge: Vec<VertexId> =
                            x.facet(f).iter().copied().filter(|&u| u != drop).collect();
                        x.ridge_facets(&ridge).is_some_and(|fs| fs.len() >= 2)
                    })
            })
    }
}

fn canonical_face(face: &[VertexId]) -> Vec<VertexId> {
    let mut out = face.to_vec();
    out.sort_unstable();
    out.dedup();
    out
}
