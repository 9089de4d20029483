//! Set partitions of vertices or facets, in canonical form.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroundKind {
    Vertices,
    Facets,
}

impl fmt::Display for GroundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroundKind::Vertices => "vertices",
            GroundKind::Facets => "facets",
        })
    }
}

/// Disjoint non-empty blocks of element ids. Elements are sorted within each
/// block and blocks are sorted by their smallest element, so equal partitions
/// have equal representations regardless of how they were built.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    kind: GroundKind,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(kind: GroundKind, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::NotAPartition("empty block".into()));
        }
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotAPartition(format!(
                "element {} in more than one block",
                w[0]
            )));
        }
        Ok(Self::canonical(kind, blocks))
    }

    fn canonical(kind: GroundKind, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { kind, blocks }
    }

    /// Groups elements `0..tags.len()` by equal tag.
    pub fn from_assignment(kind: GroundKind, tags: &[usize]) -> Self {
        let mut slot = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (e, &t) in tags.iter().enumerate() {
            let i = *slot.entry(t).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[i].push(e);
        }
        Self::canonical(kind, blocks)
    }

    pub fn kind(&self) -> GroundKind {
        self.kind
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total number of elements.
    pub fn element_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Checks that the blocks cover exactly `0..size`.
    pub fn check_covers(&self, size: usize) -> Result<()> {
        let mut seen = vec![false; size];
        for &e in self.blocks.iter().flatten() {
            if e >= size {
                return Err(Error::NotAPartition(format!(
                    "element {e} outside ground set of size {size}"
                )));
            }
            seen[e] = true;
        }
        match seen.iter().position(|s| !s) {
            Some(e) => Err(Error::NotAPartition(format!("element {e} not covered"))),
            None => Ok(()),
        }
    }

    /// Block index of each element of `0..size`; `usize::MAX` for uncovered ones.
    pub fn assignment(&self, size: usize) -> Vec<usize> {
        let mut tags = vec![usize::MAX; size];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b {
                if e < size {
                    tags[e] = i;
                }
            }
        }
        tags
    }

    /// Intersects every block with `subset` and drops empty blocks.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .copied()
                    .filter(|e| keep.binary_search(e).is_ok())
                    .collect()
            })
            .collect();
        Self::canonical(self.kind, blocks)
    }

    /// Renames elements through `rename`, dropping those mapped to `None`.
    pub fn relabel(&self, rename: impl Fn(usize) -> Option<usize>) -> Partition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().filter_map(|&e| rename(e)).collect())
            .collect();
        Self::canonical(self.kind, blocks)
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Absorbs the classes of `other`, which must have the same length.
    pub fn merge(&mut self, other: &mut UnionFind) {
        for x in 0..other.parent.len() {
            let r = other.find(x);
            self.union(x, r);
        }
    }

    pub fn into_partition(mut self, kind: GroundKind) -> Partition {
        let tags: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_assignment(kind, &tags)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let p =
            Partition::new(GroundKind::Vertices, vec![vec![5, 3], vec![4], vec![2, 0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 2], vec![3, 5], vec![4]]);
        assert!(p.check_covers(6).is_err());
        assert!(p.check_covers(5).is_err());
    }

    #[test]
    fn rejects_overlap_and_empty_blocks() {
        assert!(Partition::new(GroundKind::Facets, vec![vec![0, 1], vec![1]]).is_err());
        assert!(Partition::new(GroundKind::Facets, vec![vec![0], vec![]]).is_err());
    }

    #[test]
    fn restriction_examples() {
        // {1,3,5},{2,6},{4} as ids 0..6
        let p = Partition::new(
            GroundKind::Vertices,
            vec![vec![0, 2, 4], vec![1, 5], vec![3]],
        )
        .unwrap();
        let r = p.restrict(&[0, 1, 2, 3, 4]);
        assert_eq!(r.blocks(), &[vec![0, 2, 4], vec![1], vec![3]]);
        assert_eq!(p.restrict(&[0, 1, 2, 3, 4, 5]), p);
        assert!(p.restrict(&[]).is_empty());
    }

    #[test]
    fn union_find_closure() {
        let mut uf = UnionFind::new(6);
        uf.union(0, 2);
        uf.union(4, 2);
        uf.union(1, 5);
        let p = uf.into_partition(GroundKind::Vertices);
        assert_eq!(p.blocks(), &[vec![0, 2, 4], vec![1, 5], vec![3]]);
    }

    proptest! {
        #[test]
        fn closure_is_order_independent(
            pairs in prop::collection::vec((0usize..12, 0usize..12), 0..20),
            split in 0usize..20,
        ) {
            let mut whole = UnionFind::new(12);
            for &(a, b) in &pairs {
                whole.union(a, b);
            }
            let cut = split.min(pairs.len());
            let (mut left, mut right) = (UnionFind::new(12), UnionFind::new(12));
            for &(a, b) in pairs[..cut].iter().rev() {
                left.union(a, b);
            }
            for &(a, b) in &pairs[cut..] {
                right.union(b, a);
            }
            left.merge(&mut right);
            prop_assert_eq!(
                whole.into_partition(GroundKind::Facets),
                left.into_partition(GroundKind::Facets)
            );
        }

        #[test]
        fn from_assignment_ignores_tag_names(tags in prop::collection::vec(0usize..5, 1..12), shift in 1usize..100) {
            let renamed: Vec<usize> = tags.iter().map(|t| (t * 7 + shift) % 1000).collect();
            prop_assert_eq!(
                Partition::from_assignment(GroundKind::Vertices, &tags),
                Partition::from_assignment(GroundKind::Vertices, &renamed)
            );
        }
    }
}
