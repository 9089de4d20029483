//! Test corpora: labeled trees, convex polygon triangulations and random
//! stacked complexes. Vertex tokens are `1, 2, ...`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

pub const MAX_TREE_VERTICES: usize = 8;
pub const MAX_POLYGON_SIZE: usize = 10;

fn complex_from_ids(facets: &[Vec<usize>]) -> SimplicialComplex {
    let lists: Vec<Vec<String>> = facets
        .iter()
        .map(|f| f.iter().map(usize::to_string).collect())
        .collect();
    SimplicialComplex::build(&lists).expect("generated facets are valid")
}

/// Decodes a Prüfer sequence over `1..=v` into tree edges.
pub fn prufer_tree(v: usize, seq: &[usize]) -> Result<SimplicialComplex> {
    if v < 2 || seq.len() != v - 2 || seq.iter().any(|&a| a == 0 || a > v) {
        return Err(Error::OutOfRange(format!(
            "Prüfer sequence of length {} over 1..={v}",
            seq.len()
        )));
    }
    let mut degree = vec![1usize; v + 1];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(v - 1);
    for &a in seq {
        let leaf = (1..=v).find(|&b| degree[b] == 1).expect("a leaf exists");
        edges.push(vec![leaf, a]);
        degree[leaf] -= 1;
        degree[a] -= 1;
    }
    let last: Vec<usize> = (1..=v).filter(|&b| degree[b] == 1).collect();
    edges.push(last);
    Ok(complex_from_ids(&edges))
}

/// All `v^(v-2)` labeled trees on `v` vertices, `2 <= v <= 8`.
pub fn all_trees(v: usize) -> Result<Vec<SimplicialComplex>> {
    if !(2..=MAX_TREE_VERTICES).contains(&v) {
        return Err(Error::OutOfRange(format!(
            "tree size {v} outside 2..={MAX_TREE_VERTICES}"
        )));
    }
    let len = v - 2;
    let mut seq = vec![1usize; len];
    let mut out = Vec::new();
    loop {
        out.push(prufer_tree(v, &seq)?);
        // odometer over 1..=v
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if seq[i] < v {
                seq[i] += 1;
                break;
            }
            seq[i] = 1;
        }
    }
}

/// Uniformly random labeled tree on `v` vertices via a random Prüfer sequence.
pub fn random_tree(v: usize, seed: u64) -> Result<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..v.saturating_sub(2))
        .map(|_| rng.gen_range(1..=v))
        .collect();
    prufer_tree(v, &seq)
}

/// All triangulations of the convex `k`-gon on vertices `1..=k`, `3 <= k <= 10`.
pub fn polygon_triangulations(k: usize) -> Result<Vec<SimplicialComplex>> {
    if !(3..=MAX_POLYGON_SIZE).contains(&k) {
        return Err(Error::OutOfRange(format!(
            "polygon size {k} outside 3..={MAX_POLYGON_SIZE}"
        )));
    }
    fn triangulate(i: usize, j: usize) -> Vec<Vec<Vec<usize>>> {
        if j - i < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for m in i + 1..j {
            let left = triangulate(i, m);
            let right = triangulate(m, j);
            for l in &left {
                for r in &right {
                    let mut t = vec![vec![i, m, j]];
                    t.extend(l.iter().cloned());
                    t.extend(r.iter().cloned());
                    out.push(t);
                }
            }
        }
        out
    }
    Ok(triangulate(1, k)
        .iter()
        .map(|t| complex_from_ids(t))
        .collect())
}

/// Starts from one `d`-simplex and `n - 1` times glues a new facet, with a new
/// vertex, onto a codimension-one face chosen uniformly among all current ones.
pub fn random_stacked(d: usize, n: usize, seed: u64) -> Result<SimplicialComplex> {
    if d == 0 || n == 0 {
        return Err(Error::OutOfRange(format!(
            "random stacking needs d >= 1 and n >= 1, got d={d} n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first: Vec<usize> = (1..=d + 1).collect();
    let mut ridges: BTreeSet<Vec<usize>> = BTreeSet::new();
    let add_ridges = |facet: &[usize], ridges: &mut BTreeSet<Vec<usize>>| {
        for skip in 0..facet.len() {
            let mut r: Vec<usize> = facet.to_vec();
            r.remove(skip);
            ridges.insert(r);
        }
    };
    add_ridges(&first, &mut ridges);
    let mut facets = vec![first];
    for step in 1..n {
        let pick = rng.gen_range(0..ridges.len());
        let ridge = ridges.iter().nth(pick).expect("index in range").clone();
        let mut facet = ridge;
        facet.push(d + 1 + step);
        facet.sort_unstable();
        add_ridges(&facet, &mut ridges);
        facets.push(facet);
    }
    Ok(complex_from_ids(&facets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::is_stacked;

    #[test]
    fn tree_counts() {
        assert_eq!(all_trees(2).unwrap().len(), 1);
        assert_eq!(all_trees(3).unwrap().len(), 3);
        assert_eq!(all_trees(4).unwrap().len(), 16);
        assert_eq!(all_trees(5).unwrap().len(), 125);
        assert!(all_trees(1).is_err());
        assert!(all_trees(9).is_err());
    }

    #[test]
    fn trees_are_distinct_and_stacked() {
        let trees = all_trees(5).unwrap();
        for t in &trees {
            assert_eq!(t.vertex_count(), 5);
            assert!(is_stacked(t).is_some());
        }
        let mut facets: Vec<_> = trees.iter().map(|t| t.facets().to_vec()).collect();
        facets.sort();
        facets.dedup();
        assert_eq!(facets.len(), 125);
    }

    #[test]
    fn polygon_counts() {
        assert_eq!(polygon_triangulations(3).unwrap().len(), 1);
        assert_eq!(polygon_triangulations(4).unwrap().len(), 2);
        assert_eq!(polygon_triangulations(7).unwrap().len(), 42);
        assert!(polygon_triangulations(2).is_err());
    }

    #[test]
    fn known_heptagon_triangulation_is_generated() {
        let lists: Vec<Vec<&str>> = ["2 3 4", "2 4 5", "2 5 7", "5 6 7", "1 2 7"]
            .iter()
            .map(|f| f.split(' ').collect())
            .collect();
        let known = SimplicialComplex::build(&lists).unwrap();
        let all = polygon_triangulations(7).unwrap();
        assert!(all.contains(&known));
        for t in &all {
            assert!(is_stacked(t).is_some());
        }
    }

    #[test]
    fn random_stacked_is_stacked_and_deterministic() {
        for d in 1..=3 {
            for n in 1..=8 {
                for seed in 0..5 {
                    let x = random_stacked(d, n, seed).unwrap();
                    assert_eq!(x.vertex_count(), n + d);
                    assert_eq!(x.facet_count(), n);
                    assert!(is_stacked(&x).is_some());
                    assert_eq!(x, random_stacked(d, n, seed).unwrap());
                }
            }
        }
        assert_eq!(random_stacked(2, 1, 0).unwrap().facet_count(), 1);
        assert!(random_stacked(0, 3, 0).is_err());
    }

    #[test]
    fn random_stacked_reaches_every_small_tree() {
        // every labeled tree on 4 vertices arises up to relabeling; count shapes
        let mut shapes = BTreeSet::new();
        for seed in 0..200 {
            let x = random_stacked(1, 3, seed).unwrap();
            let mut degrees: Vec<usize> = (0..x.vertex_count())
                .map(|v| x.facets_of_vertex(v).len())
                .collect();
            degrees.sort_unstable();
            shapes.insert(degrees);
        }
        // path and star
        assert_eq!(shapes.len(), 2);
    }
}
