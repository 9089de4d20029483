//! Partitions of prefixes `[1..n]` of the naturals through the line graph.
//!
//! `L_n` has vertices `1..=n+1` and edges `1..=n`, edge `i` joining `i` and
//! `i + 1`. Edge and vertex distances on `L_n` are both `|i - j|`, so a facet
//! partition of `L_n` is a partition of `[1..n]` and a vertex partition is a
//! partition of `[1..n+1]`, with scatteredness measured by integer gaps.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::maps::facet_to_vertex;
use crate::partition::{GroundKind, Partition};
use crate::paths::Gallery;

/// A partition of `[1..n]`; blocks sorted internally and by first element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrefixPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl PrefixPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &e in blocks.iter().flatten() {
            if e == 0 || e > n {
                return Err(Error::NotAPartition(format!("{e} outside [1..{n}]")));
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::NotAPartition(format!("{e} in more than one block")));
            }
        }
        if let Some(e) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::NotAPartition(format!("{e} not covered")));
        }
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::NotAPartition("empty block".into()));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    /// `{p_1, p_2, ...}` plus one block holding the rest of `[1..n]`.
    pub fn with_rest(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let listed: std::collections::HashSet<usize> = blocks.iter().flatten().copied().collect();
        let rest: Vec<usize> = (1..=n).filter(|e| !listed.contains(e)).collect();
        if !rest.is_empty() {
            blocks.push(rest);
        }
        Self::new(n, blocks)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Smallest gap between two members of one block; `None` if all blocks are singletons.
    pub fn scatter(&self) -> Option<usize> {
        self.blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| w[1] - w[0]))
            .min()
    }

    pub fn is_scattered(&self, s: usize) -> bool {
        self.scatter().is_none_or(|g| g >= s)
    }

    /// Restriction to `[1..m]`, `m <= n`.
    pub fn restrict(&self, m: usize) -> PrefixPartition {
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&e| e <= m).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        PrefixPartition {
            n: m.min(self.n),
            blocks,
        }
    }

    /// As a partition of element ids `0..n` (value `i` becomes id `i - 1`).
    pub fn to_partition(&self, kind: GroundKind) -> Partition {
        Partition::new(
            kind,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|e| e - 1).collect())
                .collect(),
        )
        .expect("valid prefix partition")
    }

    pub fn from_partition(n: usize, p: &Partition) -> Result<Self> {
        Self::new(
            n,
            p.blocks()
                .iter()
                .map(|b| b.iter().map(|e| e + 1).collect())
                .collect(),
        )
    }
}

/// The line graph with `n` edges as a one-dimensional complex.
pub fn line_graph(n: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::OutOfRange(
            "line graph needs at least one edge".into(),
        ));
    }
    let edges: Vec<Vec<String>> = (1..=n)
        .map(|i| vec![i.to_string(), (i + 1).to_string()])
        .collect();
    SimplicialComplex::build(&edges)
}

/// Treats `[1..n]` as the edges of `L_n` and maps to a partition of its
/// vertices `[1..n+1]`: one more block, scatter raised by one.
pub fn refine_once(p: &PrefixPartition) -> Result<PrefixPartition> {
    let n = p.len();
    let gallery = Gallery::new(line_graph(n)?)?;
    let x = gallery.complex();
    let edge_id: Vec<usize> = (1..=n)
        .map(|i| x.facet_by_label(&format!("{},{}", i, i + 1)))
        .collect::<Result<_>>()?;
    let q = Partition::new(
        GroundKind::Facets,
        p.blocks()
            .iter()
            .map(|b| b.iter().map(|&e| edge_id[e - 1]).collect())
            .collect(),
    )?;
    let image = facet_to_vertex(&gallery, &q)?;
    let blocks = image
        .blocks()
        .iter()
        .map(|b| {
            b.iter()
                .map(|&v| x.label(v).parse::<usize>().expect("numeric labels"))
                .collect()
        })
        .collect();
    PrefixPartition::new(n + 1, blocks)
}

/// `steps`-fold [`refine_once`].
pub fn refine_iter(p: &PrefixPartition, steps: usize) -> Result<PrefixPartition> {
    let mut cur = p.clone();
    for _ in 0..steps {
        cur = refine_once(&cur)?;
    }
    Ok(cur)
}

/// For `p` over `[1..n+1]`: mapping the restriction to `[1..n]` equals
/// restricting the image to `[1..n+1]`.
pub fn check_colimit_compatibility(p: &PrefixPartition) -> Result<bool> {
    if p.len() < 2 {
        return Err(Error::OutOfRange(
            "colimit check needs a prefix of length at least 2".into(),
        ));
    }
    let n = p.len() - 1;
    let short = refine_once(&p.restrict(n))?;
    let long = refine_once(p)?.restrict(n + 1);
    Ok(short == long)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(n: usize, blocks: &[&[usize]]) -> PrefixPartition {
        PrefixPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn line_graph_shape() {
        let x = line_graph(1).unwrap();
        assert_eq!((x.facet_count(), x.vertex_count()), (1, 2));
        let x = line_graph(5).unwrap();
        assert_eq!((x.facet_count(), x.vertex_count()), (5, 6));
        assert!(crate::complex::is_stacked(&x).is_some());
        assert!(line_graph(0).is_err());
    }

    #[test]
    fn path_split_into_two_edge_blocks() {
        let p = pp(5, &[&[3, 4], &[1, 2, 5]]);
        assert_eq!(
            refine_once(&p).unwrap(),
            pp(6, &[&[1, 3, 5], &[2, 6], &[4]])
        );
    }

    #[test]
    fn one_block_gives_parity_classes() {
        for n in 1..8 {
            let p = pp(n, &[&(1..=n).collect::<Vec<_>>()]);
            let odds: Vec<usize> = (1..=n + 1).filter(|i| i % 2 == 1).collect();
            let evens: Vec<usize> = (1..=n + 1).filter(|i| i % 2 == 0).collect();
            assert_eq!(refine_once(&p).unwrap(), pp(n + 1, &[&odds, &evens]));
        }
    }

    #[test]
    fn iteration_counts() {
        let p = pp(6, &[&[1, 2, 3, 4, 5, 6]]);
        assert_eq!(refine_iter(&p, 0).unwrap(), p);
        let q = refine_iter(&p, 3).unwrap();
        assert_eq!(q.len(), 9);
        assert_eq!(q.block_count(), 4);
        assert!(q.is_scattered(4));
        // one block of [1..n] becomes the residues mod t+1
        for b in q.blocks() {
            assert!(b.windows(2).all(|w| w[1] - w[0] == 4));
        }
    }

    #[test]
    fn validation() {
        assert!(PrefixPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(PrefixPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(PrefixPartition::new(3, vec![vec![1, 2, 4], vec![3]]).is_err());
        let p = PrefixPartition::with_rest(5, vec![vec![2]]).unwrap();
        assert_eq!(p, pp(5, &[&[1, 3, 4, 5], &[2]]));
    }

    #[test]
    fn colimit_examples() {
        assert!(check_colimit_compatibility(&pp(7, &[&[1, 2, 3, 4, 5, 6, 7]])).unwrap());
        assert!(check_colimit_compatibility(&pp(6, &[&[3, 4], &[1, 2, 5, 6]])).unwrap());
        assert!(check_colimit_compatibility(&pp(1, &[&[1]])).is_err());
    }

    #[test]
    fn restrict_keeps_order() {
        let p = pp(6, &[&[1, 3, 5], &[2, 6], &[4]]);
        assert_eq!(p.restrict(5), pp(5, &[&[1, 3, 5], &[2], &[4]]));
        assert_eq!(p.scatter(), Some(2));
    }
}
