//! Exhaustive search for maximum hull families on a fixed point set.
//!
//! The search enumerates every candidate hull (a subset of at least two
//! points, all of them extreme in the subset), precomputes pairwise
//! compatibility, and runs a deterministic branch-and-bound over the
//! lexicographically ordered candidate pool. Results are exact maxima,
//! never heuristics, which is why point counts are capped by default:
//! the candidate pool grows exponentially.

use crate::geom::{intersect_regions, point_in_region, regions_intersect, ConvexRegion, PointLocation};
use crate::model::{region_contains, HullSet, Instance, ModelError, PointSet, VariantFlags};
use std::collections::HashMap;
use thiserror::Error;

/// Default point-count limit for sets with interior points.
pub const DEFAULT_LIMIT_GENERAL: usize = 9;
/// Default point-count limit for sets in convex position (the pool is
/// much denser in useful candidates there, and practice shows the
/// branch-and-bound copes with a few more points).
pub const DEFAULT_LIMIT_CONVEX: usize = 12;
/// Absolute cap: candidate subsets are enumerated as bit masks.
const HARD_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error(
        "point set of size {n} exceeds the search limit {limit}; pass an explicit limit to override"
    )]
    LimitExceeded { n: usize, limit: usize },
    #[error("point set of size {n} exceeds the hard enumeration cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("point index {index} out of range ({n} points)")]
    PointOutOfRange { index: usize, n: usize },
}

/// Search configuration. `max_points: None` applies the defaults (9 for
/// general position, 12 for convex position); an explicit value
/// overrides them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_points: Option<usize>,
}

impl SearchLimits {
    fn effective(&self, points: &PointSet) -> usize {
        self.max_points.unwrap_or(if points.in_convex_position() {
            DEFAULT_LIMIT_CONVEX
        } else {
            DEFAULT_LIMIT_GENERAL
        })
    }
}

/// All candidate hulls on a point set, in lexicographic order, with a
/// precomputed pairwise-compatibility matrix (distinctness, containment,
/// and intersection per the flags). Under multiset flags each candidate
/// appears twice, adjacent.
pub struct CandidatePool {
    hulls: Vec<HullSet>,
    regions: Vec<ConvexRegion>,
    words: usize,
    compat: Vec<u64>,
}

impl CandidatePool {
    pub fn len(&self) -> usize {
        self.hulls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hulls.is_empty()
    }

    pub fn hulls(&self) -> &[HullSet] {
        &self.hulls
    }

    pub fn region(&self, i: usize) -> &ConvexRegion {
        &self.regions[i]
    }

    fn compat_row(&self, i: usize) -> &[u64] {
        &self.compat[i * self.words..(i + 1) * self.words]
    }

    pub fn pair_compatible(&self, i: usize, j: usize) -> bool {
        self.compat_row(i)[j / 64] >> (j % 64) & 1 == 1
    }
}

/// Enumerates every subset of at least two points in which every member
/// is extreme, sorted lexicographically (doubled under multiset flags),
/// and fills in the compatibility matrix.
pub fn enumerate_candidates(
    points: &PointSet,
    flags: VariantFlags,
    limits: SearchLimits,
) -> Result<CandidatePool, SearchError> {
    let flags = flags.normalized();
    let n = points.len();
    let limit = limits.effective(points);
    if n > limit {
        return Err(SearchError::LimitExceeded { n, limit });
    }
    if n > HARD_CAP {
        return Err(SearchError::TooLarge { n, cap: HARD_CAP });
    }

    let mut members: Vec<(HullSet, ConvexRegion)> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let indices: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let size = indices.len();
        let (hull, region) =
            HullSet::canonical_with_region(&indices, points).expect("indices in range");
        if hull.len() == size {
            members.push((hull, region));
        }
    }
    members.sort_by(|a, b| a.0.cmp(&b.0));
    if flags.allow_multiset {
        members = members
            .into_iter()
            .flat_map(|m| [m.clone(), m])
            .collect();
    }
    let (hulls, regions): (Vec<HullSet>, Vec<ConvexRegion>) = members.into_iter().unzip();

    let count = hulls.len();
    let words = count.div_ceil(64).max(1);
    let mut compat = vec![0u64; count * words];
    for i in 0..count {
        for j in (i + 1)..count {
            if candidate_pair_ok(&hulls, &regions, flags, i, j) {
                compat[i * words + j / 64] |= 1 << (j % 64);
                compat[j * words + i / 64] |= 1 << (i % 64);
            }
        }
    }
    Ok(CandidatePool { hulls, regions, words, compat })
}

fn candidate_pair_ok(
    hulls: &[HullSet],
    regions: &[ConvexRegion],
    flags: VariantFlags,
    i: usize,
    j: usize,
) -> bool {
    if hulls[i] == hulls[j] && !flags.allow_multiset {
        return false;
    }
    if !flags.allow_containment
        && (region_contains(&regions[i], &regions[j]) || region_contains(&regions[j], &regions[i]))
    {
        return false;
    }
    regions_intersect(&regions[i], &regions[j])
}

/// Outcome of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Size of a maximum family.
    pub max_size: usize,
    /// One maximum family (the first found in lexicographic order).
    pub witness: Vec<HullSet>,
    /// Number of branch-and-bound nodes visited.
    pub nodes_explored: u64,
    /// Always true for completed runs: the maximum is exact.
    pub exhaustive: bool,
}

impl SearchResult {
    /// Materializes the witness as an instance over the given points.
    pub fn witness_instance(
        &self,
        points: &PointSet,
        flags: VariantFlags,
    ) -> Result<Instance, ModelError> {
        Instance::from_hull_sets(points.clone(), &self.witness, flags)
    }
}

/// What the intersection of a chosen pair looks like, as far as the
/// triple condition cares.
#[derive(Clone)]
enum PairClass {
    Empty,
    /// A single point of the point set: any third hull meets the pair in
    /// that point or nothing — always legal.
    MemberPoint,
    /// A single point outside the point set: a third hull must avoid it.
    StrayPoint(crate::geom::Point),
    /// One- or two-dimensional overlap: a third hull must meet it in at
    /// most a single member point.
    Fat(ConvexRegion),
}

struct Searcher<'a> {
    pool: &'a CandidatePool,
    points: &'a PointSet,
    check_triples: bool,
    best: usize,
    witness: Vec<usize>,
    nodes: u64,
    pair_memo: HashMap<(usize, usize), PairClass>,
}

fn memo_pair_class<'m>(
    memo: &'m mut HashMap<(usize, usize), PairClass>,
    pool: &CandidatePool,
    points: &PointSet,
    i: usize,
    j: usize,
) -> &'m PairClass {
    let key = (i.min(j), i.max(j));
    memo.entry(key).or_insert_with(|| {
        let region = intersect_regions(pool.region(key.0), pool.region(key.1));
        match region.dimension() {
            -1 => PairClass::Empty,
            0 => {
                let p = region.vertices()[0].clone();
                if points.index_of(&p).is_some() {
                    PairClass::MemberPoint
                } else {
                    PairClass::StrayPoint(p)
                }
            }
            _ => PairClass::Fat(region),
        }
    })
}

impl Searcher<'_> {
    /// Every triple formed by `cand` and a chosen pair must intersect in
    /// at most a single member point.
    fn triples_ok(&mut self, cand: usize, chosen: &[usize]) -> bool {
        for a in 0..chosen.len() {
            for b in (a + 1)..chosen.len() {
                let pair = memo_pair_class(
                    &mut self.pair_memo,
                    self.pool,
                    self.points,
                    chosen[a],
                    chosen[b],
                );
                match pair {
                    PairClass::Empty | PairClass::MemberPoint => {}
                    PairClass::StrayPoint(p) => {
                        if !matches!(
                            point_in_region(p, self.pool.region(cand)),
                            Ok(PointLocation::Outside)
                        ) {
                            return false;
                        }
                    }
                    PairClass::Fat(region) => {
                        let triple = intersect_regions(region, self.pool.region(cand));
                        match triple.dimension() {
                            -1 => {}
                            0 => {
                                if self.points.index_of(&triple.vertices()[0]).is_none() {
                                    return false;
                                }
                            }
                            _ => return false,
                        }
                    }
                }
            }
        }
        true
    }

    /// Upper-bounds the number of pairwise-compatible candidates in
    /// `allowed` by greedy graph coloring (any family is a clique of the
    /// compatibility graph, and a k-coloring caps cliques at k).
    fn color_bound(&self, allowed: &[u64]) -> usize {
        let words = allowed.len();
        // Each color class is an independent set of the compatibility
        // graph, stored as a bitset.
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for v in iter_ones(allowed) {
            let row = self.pool.compat_row(v);
            let slot = classes.iter_mut().find(|class| {
                class.iter().zip(row).all(|(c, r)| c & r == 0)
            });
            match slot {
                Some(class) => class[v / 64] |= 1 << (v % 64),
                None => {
                    let mut class = vec![0u64; words];
                    class[v / 64] |= 1 << (v % 64);
                    classes.push(class);
                }
            }
        }
        classes.len()
    }

    fn dfs(&mut self, chosen: &mut Vec<usize>, allowed: &[u64]) {
        self.nodes += 1;
        if chosen.len() > self.best {
            self.best = chosen.len();
            self.witness = chosen.clone();
        }
        let ids: Vec<usize> = iter_ones(allowed).collect();
        if ids.is_empty() || chosen.len() + self.color_bound(allowed) <= self.best {
            return;
        }
        for (pos, &cand) in ids.iter().enumerate() {
            // Even taking every remaining candidate cannot beat the best.
            if chosen.len() + (ids.len() - pos) <= self.best {
                break;
            }
            if self.check_triples && !self.triples_ok(cand, chosen) {
                continue;
            }
            let mut next: Vec<u64> = allowed
                .iter()
                .zip(self.pool.compat_row(cand))
                .map(|(a, c)| a & c)
                .collect();
            // Stay lexicographic: only candidates after this one.
            clear_upto(&mut next, cand);
            chosen.push(cand);
            self.dfs(chosen, &next);
            chosen.pop();
        }
    }
}

fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &bits)| {
        let mut rest = bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            }
        })
    })
}

/// Clears bits `0..=i`.
fn clear_upto(words: &mut [u64], i: usize) {
    let w = i / 64;
    for word in words.iter_mut().take(w) {
        *word = 0;
    }
    if w < words.len() {
        let keep_from = i % 64 + 1;
        if keep_from == 64 {
            words[w] = 0;
        } else {
            words[w] &= !0u64 << keep_from;
        }
    }
}

fn run_search(
    points: &PointSet,
    flags: VariantFlags,
    pool: &CandidatePool,
    through: Option<usize>,
) -> SearchResult {
    let words = pool.len().div_ceil(64).max(1);
    let mut initial = vec![0u64; words];
    match through {
        None => {
            for (i, word) in initial.iter_mut().enumerate() {
                let remaining = pool.len().saturating_sub(i * 64);
                *word = if remaining >= 64 { !0 } else { (1u64 << remaining) - 1 };
            }
        }
        Some(p) => {
            for (i, hull) in pool.hulls().iter().enumerate() {
                if hull.contains(p) {
                    initial[i / 64] |= 1 << (i % 64);
                }
            }
        }
    }

    if iter_ones(&initial).next().is_none() {
        // No usable candidate (at most one point): the best family is a
        // lone singleton hull when any point exists at all.
        let (max_size, witness) = if points.is_empty() {
            (0, Vec::new())
        } else {
            let p = through.unwrap_or(0);
            (1, vec![HullSet::canonical(&[p], points).expect("index in range")])
        };
        return SearchResult { max_size, witness, nodes_explored: 1, exhaustive: true };
    }

    let mut searcher = Searcher {
        pool,
        points,
        check_triples: !flags.allow_triple_interior,
        best: 0,
        witness: Vec::new(),
        nodes: 0,
        pair_memo: HashMap::new(),
    };
    let mut chosen = Vec::new();
    searcher.dfs(&mut chosen, &initial);
    SearchResult {
        max_size: searcher.best,
        witness: searcher.witness.iter().map(|&i| pool.hulls()[i].clone()).collect(),
        nodes_explored: searcher.nodes,
        exhaustive: true,
    }
}

/// Exact maximum family size over all hull families on `points` under
/// `flags`, with a lexicographically first witness.
pub fn max_thrackle(
    points: &PointSet,
    flags: VariantFlags,
    limits: SearchLimits,
) -> Result<SearchResult, SearchError> {
    let flags = flags.normalized();
    let pool = enumerate_candidates(points, flags, limits)?;
    Ok(run_search(points, flags, &pool, None))
}

/// Exact maximum over families whose every hull has `p` as a vertex.
pub fn max_through_point(
    points: &PointSet,
    p: usize,
    flags: VariantFlags,
    limits: SearchLimits,
) -> Result<SearchResult, SearchError> {
    if p >= points.len() {
        return Err(SearchError::PointOutOfRange { index: p, n: points.len() });
    }
    let flags = flags.normalized();
    let pool = enumerate_candidates(points, flags, limits)?;
    Ok(run_search(points, flags, &pool, Some(p)))
}
