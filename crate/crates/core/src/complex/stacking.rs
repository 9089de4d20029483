use std::collections::HashSet;

use super::{is_subset, FacetId, SimplicialComplex, VertexId};

/// Certificate of stackedness: facets `order[0], order[1], ...` where each
/// `order[p]` (p >= 1) adds exactly one new vertex `free_vertices[p - 1]` and
/// its remaining vertices form a face of the facets before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackingOrder {
    pub order: Vec<FacetId>,
    pub free_vertices: Vec<VertexId>,
}

impl StackingOrder {
    /// Free vertex added at step `p`; `None` for the initial facet.
    pub fn free_vertex(&self, p: usize) -> Option<VertexId> {
        p.checked_sub(1)
            .and_then(|i| self.free_vertices.get(i).copied())
    }

    /// Replays the order against `x`.
    pub fn verify(&self, x: &SimplicialComplex) -> bool {
        let n = x.facet_count();
        if self.order.len() != n || self.free_vertices.len() + 1 != n {
            return false;
        }
        let mut used = vec![false; n];
        for &f in &self.order {
            if f >= n || std::mem::replace(&mut used[f], true) {
                return false;
            }
        }
        let mut seen = vec![false; x.vertex_count()];
        for &v in x.facet(self.order[0]) {
            seen[v] = true;
        }
        for p in 1..n {
            let facet = x.facet(self.order[p]);
            let free = self.free_vertices[p - 1];
            if facet.binary_search(&free).is_err() || seen[free] {
                return false;
            }
            let rest: Vec<VertexId> = facet.iter().copied().filter(|&v| v != free).collect();
            if !self.order[..p]
                .iter()
                .any(|&g| is_subset(&rest, x.facet(g)))
            {
                return false;
            }
            seen[free] = true;
        }
        true
    }
}

/// Searches for a stacking order by peeling leaves from the end, backtracking
/// over every removable leaf. Failed facet subsets are memoized.
pub fn find_stacking_order(x: &SimplicialComplex) -> Option<StackingOrder> {
    let n = x.facet_count();
    let mut search = Peel {
        x,
        alive: vec![true; n],
        alive_count: n,
        degree: (0..x.vertex_count())
            .map(|v| x.facets_of_vertex(v).len())
            .collect(),
        removed: Vec::with_capacity(n),
        failed: HashSet::new(),
    };
    if !search.run() {
        return None;
    }
    let first = (0..n)
        .find(|&f| search.alive[f])
        .expect("one facet remains");
    let mut order = vec![first];
    let mut free_vertices = Vec::with_capacity(n.saturating_sub(1));
    for &(f, v) in search.removed.iter().rev() {
        order.push(f);
        free_vertices.push(v);
    }
    Some(StackingOrder {
        order,
        free_vertices,
    })
}

/// Stacked iff `v = n + d` and a stacking order exists; returns the order.
pub fn is_stacked(x: &SimplicialComplex) -> Option<StackingOrder> {
    if x.vertex_count() != x.facet_count() + x.dim() {
        return None;
    }
    find_stacking_order(x)
}

struct Peel<'a> {
    x: &'a SimplicialComplex,
    alive: Vec<bool>,
    alive_count: usize,
    degree: Vec<usize>,
    removed: Vec<(FacetId, VertexId)>,
    failed: HashSet<Vec<bool>>,
}

impl Peel<'_> {
    fn run(&mut self) -> bool {
        if self.alive_count <= 1 {
            return true;
        }
        if self.failed.contains(&self.alive) {
            return false;
        }
        for f in 0..self.alive.len() {
            if !self.alive[f] {
                continue;
            }
            let Some(free) = self.removable(f) else {
                continue;
            };
            self.remove(f);
            self.removed.push((f, free));
            if self.run() {
                return true;
            }
            self.removed.pop();
            self.restore(f);
        }
        self.failed.insert(self.alive.clone());
        false
    }

    /// The single free vertex of `f`, if `f` minus it lies on another live facet.
    fn removable(&self, f: FacetId) -> Option<VertexId> {
        let facet = self.x.facet(f);
        let mut free = facet.iter().copied().filter(|&v| self.degree[v] == 1);
        let v = free.next()?;
        if free.next().is_some() {
            return None;
        }
        let ridge: Vec<VertexId> = facet.iter().copied().filter(|&u| u != v).collect();
        let attached = self
            .x
            .ridge_facets(&ridge)
            .is_some_and(|fs| fs.iter().any(|&g| g != f && self.alive[g]));
        attached.then_some(v)
    }

    fn remove(&mut self, f: FacetId) {
        self.alive[f] = false;
        self.alive_count -= 1;
        for &v in self.x.facet(f) {
            self.degree[v] -= 1;
        }
    }

    fn restore(&mut self, f: FacetId) {
        self.alive[f] = true;
        self.alive_count += 1;
        for &v in self.x.facet(f) {
            self.degree[v] += 1;
        }
    }
}
