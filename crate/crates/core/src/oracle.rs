//! Exhaustive enumeration of scattered partitions and brute-force checks of
//! the vertex/facet correspondence.

use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::maps::{blocks_scattered, Correspondence};
use crate::partition::{GroundKind, Partition};
use crate::paths::Gallery;

/// Largest `n` accepted by [`bell`] and [`stirling2`].
pub const MAX_COUNT_N: u64 = 25;

/// Pairwise distance on the ground set `0..size`.
#[derive(Clone, Debug)]
pub enum Distance {
    Matrix(Vec<Vec<usize>>),
    /// `|i - j|`, the distance on edges or vertices of a line graph.
    Gap,
}

impl Distance {
    fn get(&self, a: usize, b: usize) -> usize {
        match self {
            Distance::Matrix(m) => m[a][b],
            Distance::Gap => a.abs_diff(b),
        }
    }
}

/// Partitions of `0..ground_size` into exactly `parts` blocks, each `scatter`-scattered.
#[derive(Clone, Debug)]
pub struct EnumerationSpec {
    pub kind: GroundKind,
    pub ground_size: usize,
    pub parts: usize,
    pub scatter: usize,
    pub distance: Distance,
}

impl EnumerationSpec {
    pub fn vertices(gallery: &Gallery, parts: usize, scatter: usize) -> Self {
        let v = gallery.complex().vertex_count();
        let matrix = (0..v)
            .map(|a| (0..v).map(|b| gallery.vertex_distance(a, b)).collect())
            .collect();
        Self {
            kind: GroundKind::Vertices,
            ground_size: v,
            parts,
            scatter,
            distance: Distance::Matrix(matrix),
        }
    }

    pub fn facets(gallery: &Gallery, parts: usize, scatter: usize) -> Self {
        let n = gallery.complex().facet_count();
        let matrix = (0..n)
            .map(|a| (0..n).map(|b| gallery.facet_distance(a, b)).collect())
            .collect();
        Self {
            kind: GroundKind::Facets,
            ground_size: n,
            parts,
            scatter,
            distance: Distance::Matrix(matrix),
        }
    }

    /// Prefix `1..=n` of the naturals, stored as ids `0..n`, with gap distance.
    pub fn prefix(kind: GroundKind, n: usize, parts: usize, scatter: usize) -> Self {
        Self {
            kind,
            ground_size: n,
            parts,
            scatter,
            distance: Distance::Gap,
        }
    }

    pub fn enumerate(&self) -> PartitionStream {
        enumerate_partitions(self.clone())
    }
}

/// Streams every partition matching `spec` exactly once, in restricted-growth
/// (lexicographic block-label) order. Blocks are filled element by element,
/// rejecting an element as soon as it is too close to a block member, and
/// abandoning branches that can no longer reach `spec.parts` blocks.
pub fn enumerate_partitions(spec: EnumerationSpec) -> PartitionStream {
    let n = spec.ground_size;
    let compatible = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| a == b || spec.distance.get(a, b) >= spec.scatter)
                .collect()
        })
        .collect();
    PartitionStream {
        exhausted: spec.parts == 0 || spec.parts > n,
        spec,
        compatible,
        placed: Vec::with_capacity(n),
        blocks: Vec::new(),
        cursor: vec![0; n + 1],
        emitted: false,
    }
}

pub struct PartitionStream {
    spec: EnumerationSpec,
    compatible: Vec<Vec<bool>>,
    /// Block index of each placed element.
    placed: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    /// Next block choice to try at each depth.
    cursor: Vec<usize>,
    emitted: bool,
    exhausted: bool,
}

impl PartitionStream {
    fn pop(&mut self) {
        let c = self.placed.pop().expect("non-empty");
        self.blocks[c].pop();
        if self.blocks[c].is_empty() {
            self.blocks.pop();
        }
    }

    fn try_place(&mut self, e: usize, c: usize) -> bool {
        let n = self.spec.ground_size;
        let r = self.spec.parts;
        let count = if c == self.blocks.len() {
            if self.blocks.len() >= r {
                return false;
            }
            self.blocks.len() + 1
        } else {
            if !self.blocks[c].iter().all(|&m| self.compatible[e][m]) {
                return false;
            }
            self.blocks.len()
        };
        if count + (n - e - 1) < r {
            return false;
        }
        if c == self.blocks.len() {
            self.blocks.push(Vec::new());
        }
        self.blocks[c].push(e);
        self.placed.push(c);
        true
    }

    fn advance(&mut self) -> bool {
        let n = self.spec.ground_size;
        if self.emitted {
            self.emitted = false;
            self.pop();
        }
        loop {
            let e = self.placed.len();
            if e == n {
                return true;
            }
            let mut c = self.cursor[e];
            let mut placed = false;
            while c <= self.blocks.len() {
                if self.try_place(e, c) {
                    self.cursor[e] = c + 1;
                    placed = true;
                    break;
                }
                c += 1;
            }
            if !placed {
                self.cursor[e] = 0;
                if e == 0 {
                    return false;
                }
                self.pop();
            }
        }
    }
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.exhausted {
            return None;
        }
        if !self.advance() {
            self.exhausted = true;
            return None;
        }
        self.emitted = true;
        Some(Partition::new(self.spec.kind, self.blocks.clone()).expect("disjoint blocks"))
    }
}

/// Stirling number of the second kind `S(n, k)`; zero when `k > n`.
pub fn stirling2(n: u64, k: u64) -> Result<u64> {
    if n > MAX_COUNT_N {
        return Err(Error::OutOfRange(format!("n = {n} exceeds {MAX_COUNT_N}")));
    }
    if k > n {
        return Ok(0);
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] = S(i, j)
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=i.min(n)).rev() {
            let stay = (j as u64)
                .checked_mul(row[j])
                .and_then(|x| x.checked_add(row[j - 1]))
                .ok_or_else(|| Error::OutOfRange(format!("S({i}, {j}) overflows")))?;
            row[j] = stay;
        }
        row[0] = 0;
    }
    Ok(row[k])
}

/// Bell number `B_n`.
pub fn bell(n: u64) -> Result<u64> {
    (0..=n).try_fold(0u64, |acc, k| {
        let s = stirling2(n, k)?;
        acc.checked_add(s)
            .ok_or_else(|| Error::OutOfRange(format!("B({n}) overflows")))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// A mapped partition has the wrong block count or scatter.
    ImageMismatch,
    /// Mapping there and back does not return the input.
    RoundTrip,
    /// Two inputs map to the same image.
    Injectivity,
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub kind: FailureKind,
    pub input: Partition,
    pub image: Partition,
}

/// Outcome of checking the correspondence on one `(complex, r, s)` instance.
///
/// Left is the facet family (`r` blocks, `s`-scattered); right is the vertex
/// family (`r + d` blocks, `(s+1)`-scattered).
#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub dim: usize,
    pub parts: usize,
    pub scatter: usize,
    pub left_count: usize,
    pub right_count: usize,
    pub round_trip_failures: usize,
    pub image_mismatches: usize,
    pub injectivity_failures: usize,
    /// Up to [`BijectionReport::KEPT_FAILURES`] concrete failures.
    pub failures: Vec<Failure>,
}

impl BijectionReport {
    pub const KEPT_FAILURES: usize = 8;

    pub fn failure_count(&self) -> usize {
        self.round_trip_failures + self.image_mismatches + self.injectivity_failures
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0 && self.left_count == self.right_count
    }

    /// `key=value` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dim={}", self.dim);
        let _ = writeln!(out, "r={}", self.parts);
        let _ = writeln!(out, "s={}", self.scatter);
        let _ = writeln!(out, "left_count={}", self.left_count);
        let _ = writeln!(out, "right_count={}", self.right_count);
        let _ = writeln!(out, "round_trip_failures={}", self.round_trip_failures);
        let _ = writeln!(out, "image_mismatches={}", self.image_mismatches);
        let _ = writeln!(out, "injectivity_failures={}", self.injectivity_failures);
        let _ = writeln!(
            out,
            "status={}",
            if self.passed() { "ok" } else { "failed" }
        );
        out
    }

    fn record(&mut self, kind: FailureKind, input: &Partition, image: &Partition) {
        match kind {
            FailureKind::ImageMismatch => self.image_mismatches += 1,
            FailureKind::RoundTrip => self.round_trip_failures += 1,
            FailureKind::Injectivity => self.injectivity_failures += 1,
        }
        if self.failures.len() < Self::KEPT_FAILURES {
            self.failures.push(Failure {
                kind,
                input: input.clone(),
                image: image.clone(),
            });
        }
    }
}

/// Enumerates both families of the instance, maps each member across, and
/// checks family membership of the image, injectivity and both round trips.
pub fn verify_bijection(gallery: &Gallery, r: usize, s: usize) -> BijectionReport {
    let corr = Correspondence::new(gallery);
    let d = gallery.complex().dim();
    let left: Vec<Partition> = EnumerationSpec::facets(gallery, r, s).enumerate().collect();
    let right: Vec<Partition> = EnumerationSpec::vertices(gallery, r + d, s + 1)
        .enumerate()
        .collect();

    let in_right = |p: &Partition| p.block_count() == r + d && blocks_scattered(gallery, p, s + 1);
    let in_left = |q: &Partition| q.block_count() == r && blocks_scattered(gallery, q, s);

    let forward: Vec<(Partition, bool, Option<Partition>)> = left
        .par_iter()
        .map(|q| {
            let p = corr
                .facet_to_vertex(q)
                .expect("enumerated partitions are valid");
            let member = in_right(&p);
            let back = member.then(|| corr.vertex_to_facet(&p).ok()).flatten();
            (p, member, back)
        })
        .collect();
    let backward: Vec<(Partition, bool, Option<Partition>)> = right
        .par_iter()
        .map(|p| {
            let q = corr
                .vertex_to_facet(p)
                .expect("enumerated partitions are independent");
            let member = in_left(&q);
            let back = corr.facet_to_vertex(&q).ok();
            (q, member, back)
        })
        .collect();

    let mut report = BijectionReport {
        dim: d,
        parts: r,
        scatter: s,
        left_count: left.len(),
        right_count: right.len(),
        round_trip_failures: 0,
        image_mismatches: 0,
        injectivity_failures: 0,
        failures: Vec::new(),
    };
    let mut images = HashSet::new();
    for (q, (p, member, back)) in left.iter().zip(&forward) {
        if !member {
            report.record(FailureKind::ImageMismatch, q, p);
        }
        if back.as_ref() != Some(q) {
            report.record(FailureKind::RoundTrip, q, p);
        }
        if !images.insert(p.clone()) {
            report.record(FailureKind::Injectivity, q, p);
        }
    }
    let mut images = HashSet::new();
    for (p, (q, member, back)) in right.iter().zip(&backward) {
        if !member {
            report.record(FailureKind::ImageMismatch, p, q);
        }
        if back.as_ref() != Some(p) {
            report.record(FailureKind::RoundTrip, p, q);
        }
        if !images.insert(q.clone()) {
            report.record(FailureKind::Injectivity, p, q);
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub r: usize,
    /// `r + d`
    pub parts: usize,
    pub count: u64,
    pub stirling: u64,
}

/// Counts of independent vertex partitions by block count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub dim: usize,
    pub facets: usize,
    pub rows: Vec<CensusRow>,
    pub total: u64,
    pub bell: u64,
}

impl Census {
    pub fn consistent(&self) -> bool {
        self.total == self.bell && self.rows.iter().all(|row| row.count == row.stirling)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dim={}", self.dim);
        let _ = writeln!(out, "facets={}", self.facets);
        for row in &self.rows {
            let _ = writeln!(
                out,
                "r={} parts={} count={} stirling2={}",
                row.r, row.parts, row.count, row.stirling
            );
        }
        let _ = writeln!(out, "total={}", self.total);
        let _ = writeln!(out, "bell={}", self.bell);
        let _ = writeln!(
            out,
            "status={}",
            if self.consistent() { "ok" } else { "failed" }
        );
        out
    }
}

/// Tallies partitions of the vertices into `r + d` independent blocks for
/// `r = 1..=n`, next to `S(n, r)` and `B_n`.
pub fn census(gallery: &Gallery) -> Result<Census> {
    let x = gallery.complex();
    let (d, n) = (x.dim(), x.facet_count());
    let bell_n = bell(n as u64)?;
    let mut rows = Vec::with_capacity(n);
    for r in 1..=n {
        let count = EnumerationSpec::vertices(gallery, r + d, 2)
            .enumerate()
            .count() as u64;
        rows.push(CensusRow {
            r,
            parts: r + d,
            count,
            stirling: stirling2(n as u64, r as u64)?,
        });
    }
    let total = rows.iter().map(|row| row.count).sum();
    Ok(Census {
        dim: d,
        facets: n,
        rows,
        total,
        bell: bell_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn gallery(facets: &[&str]) -> Gallery {
        let lists: Vec<Vec<&str>> = facets.iter().map(|f| f.split(' ').collect()).collect();
        Gallery::new(SimplicialComplex::build(&lists).unwrap()).unwrap()
    }

    /// All set partitions of `0..n` as restricted growth strings, unpruned.
    fn all_set_partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for c in 0..=max {
                cur.push(c);
                go(n, cur, max.max(c + 1), out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            out.push(Vec::new());
        } else {
            go(n, &mut Vec::new(), 0, &mut out);
        }
        out
    }

    #[test]
    fn small_counts_match_brute_force() {
        for n in 0..=7 {
            let all = all_set_partitions(n);
            assert_eq!(bell(n as u64).unwrap(), all.len() as u64);
            for k in 0..=n {
                let count = all
                    .iter()
                    .filter(|rgs| rgs.iter().max().map_or(0, |m| m + 1) == k)
                    .count();
                assert_eq!(
                    stirling2(n as u64, k as u64).unwrap(),
                    count as u64,
                    "S({n},{k})"
                );
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(bell(0).unwrap(), 1);
        assert_eq!(bell(1).unwrap(), 1);
        assert_eq!(bell(5).unwrap(), 52);
        assert_eq!(stirling2(4, 2).unwrap(), 7);
        for n in 0..=25 {
            assert_eq!(stirling2(n, n).unwrap(), 1);
        }
        assert_eq!(bell(25).unwrap(), 4_638_590_332_229_999_353);
        assert!(matches!(bell(26), Err(Error::OutOfRange(_))));
        assert!(matches!(stirling2(26, 3), Err(Error::OutOfRange(_))));
        assert_eq!(stirling2(3, 5).unwrap(), 0);
    }

    #[test]
    fn enumerate_three_into_two() {
        let spec = EnumerationSpec::prefix(GroundKind::Facets, 3, 2, 1);
        let got: Vec<Vec<Vec<usize>>> = spec.enumerate().map(|p| p.blocks().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![vec![0, 1], vec![2]],
                vec![vec![0, 2], vec![1]],
                vec![vec![0], vec![1, 2]],
            ]
        );
    }

    #[test]
    fn too_many_parts_is_empty() {
        assert_eq!(
            EnumerationSpec::prefix(GroundKind::Facets, 3, 4, 1)
                .enumerate()
                .count(),
            0
        );
        assert_eq!(
            EnumerationSpec::prefix(GroundKind::Facets, 0, 1, 1)
                .enumerate()
                .count(),
            0
        );
    }

    #[test]
    fn pruned_equals_filtered_on_gaps() {
        for n in 1..=9 {
            let all = all_set_partitions(n);
            for r in 1..=n {
                for s in 1..=3 {
                    let expected: Vec<Vec<usize>> = all
                        .iter()
                        .filter(|rgs| rgs.iter().max().unwrap() + 1 == r)
                        .filter(|rgs| {
                            (0..n).all(|a| (a + 1..n).all(|b| rgs[a] != rgs[b] || b - a >= s))
                        })
                        .cloned()
                        .collect();
                    let got: Vec<Vec<usize>> = EnumerationSpec::prefix(GroundKind::Facets, n, r, s)
                        .enumerate()
                        .map(|p| {
                            let mut tags = vec![0; n];
                            for (i, b) in p.blocks().iter().enumerate() {
                                for &e in b {
                                    tags[e] = i;
                                }
                            }
                            tags
                        })
                        .collect();
                    assert_eq!(got, expected, "n={n} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn verify_small_instances() {
        let hept = gallery(&["2 3 4", "2 4 5", "2 5 7", "5 6 7", "1 2 7"]);
        let report = verify_bijection(&hept, 2, 1);
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.left_count, 15);

        let edge = gallery(&["1 2"]);
        let report = verify_bijection(&edge, 1, 1);
        assert!(report.passed());
        assert_eq!((report.left_count, report.right_count), (1, 1));
    }

    #[test]
    fn census_examples() {
        let hept = gallery(&["2 3 4", "2 4 5", "2 5 7", "5 6 7", "1 2 7"]);
        let c = census(&hept).unwrap();
        assert!(c.consistent(), "{}", c.to_text());
        assert_eq!(c.total, 52);

        let tree = gallery(&["1 2", "2 3", "2 4", "4 5", "5 6"]);
        let c = census(&tree).unwrap();
        assert!(c.consistent());
        assert_eq!(c.total, 52);

        let single = gallery(&["1 2 3"]);
        let c = census(&single).unwrap();
        assert_eq!(c.total, 1);
        assert!(c.consistent());
    }

    #[test]
    fn report_text_is_key_value() {
        let edge = gallery(&["1 2"]);
        let text = verify_bijection(&edge, 1, 1).to_text();
        assert!(text.lines().all(|l| l.split_once('=').is_some()));
        assert!(text.contains("status=ok"));
    }
}
