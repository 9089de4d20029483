//! The correspondence between facet partitions and vertex partitions of a
//! stacked complex, and scatteredness.
//!
//! From vertices to facets: facets `f`, `f'` are related when the end vertices
//! of their path share a block `B` and no interior facet of the path meets `B`.
//! From facets to vertices: vertices `v`, `w` without a common facet are related
//! when the end facets of the face path `v | f_1 .. f_p | w` share a block and
//! no interior facet lies in that block. In both directions the output is the
//! equivalence closure of the generated pairs; unrelated elements stay singletons.

use crate::complex::{FacetId, VertexId};
use crate::error::{Error, Result};
use crate::oracle::{verify_bijection, Failure};
use crate::partition::{GroundKind, Partition, UnionFind};
use crate::paths::{FacetPath, Gallery};

/// One generating pair of the closure, with the path that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPair {
    pub a: usize,
    pub b: usize,
    pub witness: FacetPath,
}

/// Whether every two distinct elements of `set` are at distance `>= s`.
pub fn is_scattered(gallery: &Gallery, set: &[usize], s: usize, kind: GroundKind) -> bool {
    set.iter().enumerate().all(|(i, &a)| {
        set[i + 1..].iter().all(|&b| {
            a == b
                || match kind {
                    GroundKind::Vertices => gallery.vertex_distance(a, b),
                    GroundKind::Facets => gallery.facet_distance(a, b),
                } >= s
        })
    })
}

/// Whether every block of `p` is `s`-scattered.
pub fn blocks_scattered(gallery: &Gallery, p: &Partition, s: usize) -> bool {
    p.blocks()
        .iter()
        .all(|b| is_scattered(gallery, b, s, p.kind()))
}

struct FacetPair {
    a: FacetId,
    b: FacetId,
    left: VertexId,
    right: VertexId,
    path: FacetPath,
}

struct VertexPair {
    a: VertexId,
    b: VertexId,
    path: FacetPath,
}

/// Precomputed pair paths for repeated mapping on one complex.
pub struct Correspondence<'g> {
    gallery: &'g Gallery,
    facet_pairs: Vec<FacetPair>,
    vertex_pairs: Vec<VertexPair>,
}

impl<'g> Correspondence<'g> {
    pub fn new(gallery: &'g Gallery) -> Self {
        let x = gallery.complex();
        let mut facet_pairs = Vec::new();
        for a in 0..x.facet_count() {
            for b in a + 1..x.facet_count() {
                let path = gallery.facet_path(a, b);
                let (left, right) = path.end_vertices(x).expect("distinct facets");
                facet_pairs.push(FacetPair {
                    a,
                    b,
                    left,
                    right,
                    path,
                });
            }
        }
        let mut vertex_pairs = Vec::new();
        for a in 0..x.vertex_count() {
            for b in a + 1..x.vertex_count() {
                if x.share_facet(a, b) {
                    continue;
                }
                let fp = gallery
                    .face_path(&[a], &[b])
                    .expect("independent vertices are separated");
                vertex_pairs.push(VertexPair {
                    a,
                    b,
                    path: fp.path,
                });
            }
        }
        Self {
            gallery,
            facet_pairs,
            vertex_pairs,
        }
    }

    pub fn gallery(&self) -> &Gallery {
        self.gallery
    }

    fn check_vertex_input(&self, p: &Partition) -> Result<Vec<usize>> {
        let x = self.gallery.complex();
        if p.kind() != GroundKind::Vertices {
            return Err(Error::NotAPartition("expected a vertex partition".into()));
        }
        p.check_covers(x.vertex_count())?;
        for (i, block) in p.blocks().iter().enumerate() {
            for (j, &a) in block.iter().enumerate() {
                if let Some(&b) = block[j + 1..].iter().find(|&&b| x.share_facet(a, b)) {
                    return Err(Error::NotIndependent { block: i, a, b });
                }
            }
        }
        Ok(p.assignment(x.vertex_count()))
    }

    fn check_facet_input(&self, q: &Partition) -> Result<Vec<usize>> {
        let n = self.gallery.complex().facet_count();
        if q.kind() != GroundKind::Facets {
            return Err(Error::NotAPartition("expected a facet partition".into()));
        }
        q.check_covers(n)?;
        Ok(q.assignment(n))
    }

    /// Facet pairs generating the vertex-to-facet relation.
    pub fn vertex_to_facet_generators(&self, p: &Partition) -> Result<Vec<GeneratorPair>> {
        let color = self.check_vertex_input(p)?;
        let x = self.gallery.complex();
        Ok(self
            .facet_pairs
            .iter()
            .filter(|pair| {
                let c = color[pair.left];
                c == color[pair.right]
                    && pair
                        .path
                        .interior()
                        .iter()
                        .all(|&f| x.facet(f).iter().all(|&u| color[u] != c))
            })
            .map(|pair| GeneratorPair {
                a: pair.a,
                b: pair.b,
                witness: pair.path.clone(),
            })
            .collect())
    }

    /// Vertex pairs generating the facet-to-vertex relation.
    pub fn facet_to_vertex_generators(&self, q: &Partition) -> Result<Vec<GeneratorPair>> {
        let color = self.check_facet_input(q)?;
        Ok(self
            .vertex_pairs
            .iter()
            .filter(|pair| {
                let c = color[pair.path.first()];
                c == color[pair.path.last()] && pair.path.interior().iter().all(|&f| color[f] != c)
            })
            .map(|pair| GeneratorPair {
                a: pair.a,
                b: pair.b,
                witness: pair.path.clone(),
            })
            .collect())
    }

    pub fn vertex_to_facet(&self, p: &Partition) -> Result<Partition> {
        let mut uf = UnionFind::new(self.gallery.complex().facet_count());
        for g in self.vertex_to_facet_generators(p)? {
            uf.union(g.a, g.b);
        }
        Ok(uf.into_partition(GroundKind::Facets))
    }

    pub fn facet_to_vertex(&self, q: &Partition) -> Result<Partition> {
        let mut uf = UnionFind::new(self.gallery.complex().vertex_count());
        for g in self.facet_to_vertex_generators(q)? {
            uf.union(g.a, g.b);
        }
        Ok(uf.into_partition(GroundKind::Vertices))
    }
}

/// Maps a partition of the vertices into independent blocks to a facet partition.
pub fn vertex_to_facet(gallery: &Gallery, p: &Partition) -> Result<Partition> {
    Correspondence::new(gallery).vertex_to_facet(p)
}

/// Maps a facet partition to a vertex partition.
pub fn facet_to_vertex(gallery: &Gallery, q: &Partition) -> Result<Partition> {
    Correspondence::new(gallery).facet_to_vertex(q)
}

/// Result of [`check_theorem_instance`].
#[derive(Clone, Debug)]
pub struct TheoremReport {
    /// Facet partitions into `r` blocks, each `s`-scattered.
    pub facet_partitions: usize,
    /// Vertex partitions into `r + d` blocks, each `(s+1)`-scattered.
    pub vertex_partitions: usize,
    pub counterexample: Option<Failure>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none() && self.facet_partitions == self.vertex_partitions
    }
}

/// Checks on one instance that the two maps are mutually inverse bijections
/// between the `r`-block `s`-scattered facet partitions and the
/// `(r + d)`-block `(s+1)`-scattered vertex partitions.
pub fn check_theorem_instance(gallery: &Gallery, r: usize, s: usize) -> TheoremReport {
    let report = verify_bijection(gallery, r, s);
    TheoremReport {
        facet_partitions: report.left_count,
        vertex_partitions: report.right_count,
        counterexample: report.failures.into_iter().next(),
    }
}

/// Intersects each block with `subset`; see [`Partition::restrict`].
pub fn restrict_partition(p: &Partition, subset: &[usize]) -> Partition {
    p.restrict(subset)
}

/// Checks, for a facet partition `q` and the distance neighborhood `X_m` of
/// `ridge`, that restricting the image of `q` to `V_m` equals the image,
/// computed inside `X_m` alone, of `q` restricted to `X_m`.
pub fn restriction_compatible(
    gallery: &Gallery,
    q: &Partition,
    ridge: &[usize],
    m: usize,
) -> Result<bool> {
    let nb = gallery.distance_neighborhood(ridge, m)?;
    if nb.facets.is_empty() {
        return Ok(true);
    }
    let whole = facet_to_vertex(gallery, q)?.restrict(&nb.vertices);
    let sub = gallery.complex().subcomplex(&nb.facets)?;
    let local_gallery = Gallery::new(sub.complex.clone())?;
    let local_q = q.restrict(&nb.facets).relabel(|f| sub.child_facet(f));
    let local = facet_to_vertex(&local_gallery, &local_q)?;
    Ok(local.relabel(|v| Some(sub.vertices[v])) == whole)
}
