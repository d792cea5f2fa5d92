//! Distinguishing labelings: verification, the exact brute-force number,
//! closed-form values for `C(m,p)` and complete multipartite graphs, the
//! explicit `(m+1)`-labeling, and the constructive breaker for labelings
//! that use too few labels.
//!
//! A labeling is *distinguishing* when no automorphism other than the
//! identity preserves it. Verification never lists the automorphism group:
//! it runs a color-constrained backtracking search, so it scales past
//! groups that are far too large to enumerate.

use rand::Rng;
use thiserror::Error;

use crate::graph::{CmpSpec, Graph};
use crate::perm::{first_nontrivial_automorphism, label_sort, reflection, PermError, Permutation};

/// Default budget on the number of candidate labelings the exact search may
/// examine. Level `r` costs `S(n,r)` candidates (Stirling numbers of the
/// second kind); the budget is checked before each level starts, so cheap
/// early levels always run and oversized instances fail fast instead of
/// hanging.
pub const DEFAULT_SEARCH_CAP: u128 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DistinguishingError {
    #[error("label {label} at position {index} outside 1..={r}")]
    LabelOutOfBounds {
        index: usize,
        label: usize,
        r: usize,
    },
    #[error("r_max must be at least 1")]
    BoundTooSmall,
    #[error("no distinguishing labeling with at most {r_max} labels")]
    ExceedsBound { r_max: usize },
    #[error("level {r} of the search needs about {needed} candidates, cap is {cap}")]
    CapExceeded { r: usize, needed: u128, cap: u128 },
    #[error("closed form for C(m,p) does not cover m={m}, p={p}")]
    FormulaOutOfDomain { m: usize, p: usize },
    #[error("explicit labeling is defined for m >= 2, got m={0}")]
    MultiplicityTooSmall(usize),
    #[error("explicit labeling is defined for p >= 2, got p={0}")]
    PeriodTooSmall(usize),
    #[error("C(m,4) admits no (m+1)-labeling: it is K_{{2m,2m}} and needs {0} labels")]
    NoSmallLabelingForPeriodFour(usize),
    #[error("breaker needs m >= 2 and p >= 2, got m={m}, p={p}")]
    BreakerOutOfScope { m: usize, p: usize },
    #[error("shape must have at least one part")]
    EmptyShape,
    #[error("part sizes must be positive")]
    ZeroPartSize,
    #[error("part multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("part sizes must be strictly decreasing: {0} then {1}")]
    ShapeNotDecreasing(usize, usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A vertex labeling with values in `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Labeling {
    r: usize,
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(r: usize, labels: Vec<usize>) -> Result<Self, DistinguishingError> {
        for (index, &label) in labels.iter().enumerate() {
            if label == 0 || label > r {
                return Err(DistinguishingError::LabelOutOfBounds { index, label, r });
            }
        }
        Ok(Labeling { r, labels })
    }

    /// The all-ones labeling.
    pub fn constant(n: usize) -> Self {
        Labeling {
            r: 1,
            labels: vec![1; n],
        }
    }

    /// Declared label count `r`.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Number of labels actually present.
    pub fn distinct_count(&self) -> usize {
        let mut seen = vec![false; self.r + 1];
        let mut count = 0;
        for &l in &self.labels {
            if !seen[l] {
                seen[l] = true;
                count += 1;
            }
        }
        count
    }
}

/// Uniform random labeling with values in `1..=max_label`.
pub fn random_labeling(n: usize, max_label: usize, rng: &mut impl Rng) -> Labeling {
    assert!(max_label >= 1);
    Labeling {
        r: max_label,
        labels: (0..n).map(|_| rng.gen_range(1..=max_label)).collect(),
    }
}

/// The lexicographically least nontrivial automorphism of `g` preserving
/// `c`, or `None` when `c` is distinguishing.
pub fn preserving_automorphism(g: &Graph, c: &Labeling) -> Option<Permutation> {
    assert_eq!(c.len(), g.n(), "labeling length must match graph order");
    first_nontrivial_automorphism(g, Some(c.labels()))
}

/// True iff no nontrivial automorphism of `g` preserves `c`.
pub fn is_distinguishing(g: &Graph, c: &Labeling) -> bool {
    preserving_automorphism(g, c).is_none()
}

// ---------------------------------------------------------------------------
// Restricted growth strings
// ---------------------------------------------------------------------------

/// Iterator over the restricted growth strings of length `n` using exactly
/// `blocks` distinct values, in lexicographic order.
///
/// A restricted growth string is the canonical form of a set partition:
/// position 0 carries 1, and every later position carries at most one more
/// than the maximum so far. Enumerating these instead of raw label vectors
/// quotients out label renaming.
pub struct RgsIter {
    n: usize,
    blocks: usize,
    current: Vec<usize>,
    maxes: Vec<usize>,
    started: bool,
    done: bool,
}

/// All restricted growth strings of length `n` with exactly `blocks` values.
pub fn restricted_growth_strings(n: usize, blocks: usize) -> RgsIter {
    let done = blocks == 0 || blocks > n;
    RgsIter {
        n,
        blocks,
        current: Vec::new(),
        maxes: Vec::new(),
        started: false,
        done,
    }
}

impl RgsIter {
    fn first(&mut self) {
        // lexicographically least: ones, then the forced climb to `blocks`
        self.current = vec![1; self.n];
        self.maxes = vec![1; self.n];
        for (offset, i) in (self.n - self.blocks + 1..self.n).enumerate() {
            self.current[i] = offset + 2;
        }
        let mut max = 0;
        for i in 0..self.n {
            max = max.max(self.current[i]);
            self.maxes[i] = max;
        }
    }

    fn advance(&mut self) -> bool {
        for i in (1..self.n).rev() {
            let prefix_max = self.maxes[i - 1];
            let candidate = self.current[i] + 1;
            if candidate > prefix_max + 1 || candidate > self.blocks {
                continue;
            }
            let new_max = prefix_max.max(candidate);
            let remaining = self.n - 1 - i;
            let need = self.blocks - new_max;
            if need > remaining {
                continue;
            }
            self.current[i] = candidate;
            self.maxes[i] = new_max;
            // least suffix still reaching `blocks` distinct values
            for j in i + 1..self.n {
                let climb_start = self.n - need;
                self.current[j] = if j < climb_start {
                    1
                } else {
                    new_max + (j - climb_start) + 1
                };
                self.maxes[j] = self.maxes[j - 1].max(self.current[j]);
            }
            return true;
        }
        false
    }
}

impl Iterator for RgsIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.first();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current.clone())
    }
}

/// Stirling numbers of the second kind `S(n, k)` for `k <= n`, saturating.
fn stirling2_row(n: usize) -> Vec<u128> {
    let mut row = vec![0u128; n + 1];
    if n == 0 {
        row[0] = 1;
        return row;
    }
    let mut prev = stirling2_row(n - 1);
    prev.push(0);
    for k in 1..=n {
        row[k] = prev[k - 1].saturating_add((k as u128).saturating_mul(prev[k]));
    }
    row
}

// ---------------------------------------------------------------------------
// Exact distinguishing number
// ---------------------------------------------------------------------------

/// Knobs for [`exact_distinguishing_number_opts`].
#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    /// Largest label count to try; `None` means the graph order.
    pub r_max: Option<usize>,
    /// Candidate budget; see [`DEFAULT_SEARCH_CAP`].
    pub cap: u128,
    /// Worker threads for scanning candidates. The result is identical for
    /// any thread count: workers race over chunks and the lowest-index hit
    /// wins.
    pub threads: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            r_max: None,
            cap: DEFAULT_SEARCH_CAP,
            threads: 1,
        }
    }
}

/// Smallest `r <= r_max` admitting a distinguishing labeling of `g`,
/// together with the lexicographically least witness in restricted growth
/// string order.
pub fn exact_distinguishing_number(
    g: &Graph,
    r_max: usize,
) -> Result<(usize, Labeling), DistinguishingError> {
    exact_distinguishing_number_opts(
        g,
        OracleOptions {
            r_max: Some(r_max),
            ..Default::default()
        },
    )
}

pub fn exact_distinguishing_number_opts(
    g: &Graph,
    opts: OracleOptions,
) -> Result<(usize, Labeling), DistinguishingError> {
    let n = g.n();
    if n == 0 {
        return Ok((
            0,
            Labeling {
                r: 0,
                labels: Vec::new(),
            },
        ));
    }
    if opts.r_max == Some(0) {
        return Err(DistinguishingError::BoundTooSmall);
    }
    let r_max = opts.r_max.unwrap_or(n);
    let stirling = stirling2_row(n);
    let mut spent: u128 = 0;

    // No restricted growth string with fewer blocks can be distinguishing
    // once the levels below have all failed, so each level only scans
    // strings with exactly r blocks and the first hit is the global
    // lexicographic minimum.
    for r in 1..=r_max.min(n) {
        let level = stirling[r];
        if spent.saturating_add(level) > opts.cap {
            return Err(DistinguishingError::CapExceeded {
                r,
                needed: spent.saturating_add(level),
                cap: opts.cap,
            });
        }
        spent += level;
        if let Some(labels) = scan_level(g, n, r, opts.threads.max(1)) {
            return Ok((r, Labeling { r, labels }));
        }
    }
    Err(DistinguishingError::ExceedsBound { r_max })
}

/// First distinguishing string at level `r`, in lexicographic order.
fn scan_level(g: &Graph, n: usize, r: usize, threads: usize) -> Option<Vec<usize>> {
    let mut iter = restricted_growth_strings(n, r);
    if threads <= 1 {
        return iter.find(|labels| first_nontrivial_automorphism(g, Some(labels)).is_none());
    }

    const CHUNK: usize = 4096;
    loop {
        let chunk: Vec<Vec<usize>> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return None;
        }
        let slice_len = chunk.len().div_ceil(threads);
        let winner = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (slice_idx, slice) in chunk.chunks(slice_len).enumerate() {
                handles.push(scope.spawn(move || {
                    slice
                        .iter()
                        .position(|labels| first_nontrivial_automorphism(g, Some(labels)).is_none())
                        .map(|i| slice_idx * slice_len + i)
                }));
            }
            handles
                .into_iter()
                .filter_map(|h| h.join().expect("scan worker panicked"))
                .min()
        });
        if let Some(idx) = winner {
            return Some(chunk[idx].clone());
        }
    }
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Distinguishing number of `C(m,p)` in closed form:
/// `m` for cliques (`p = 1`, `m >= 3`), `2m+1` for short cycles and the
/// `p = 4` collapse to `K_{2m,2m}`, and `m+1` everywhere else.
pub fn cmp_distinguishing_formula(spec: &CmpSpec) -> Result<usize, DistinguishingError> {
    let (m, p) = (spec.m(), spec.p());
    match (m, p) {
        (m, 1) if m >= 3 => Ok(m),
        (1, p) if (3..=5).contains(&p) => Ok(3),
        (1, p) if p >= 6 => Ok(2),
        (m, 4) if m >= 2 => Ok(2 * m + 1),
        (m, p) if m >= 2 && p >= 2 => Ok(m + 1),
        _ => Err(DistinguishingError::FormulaOutOfDomain { m, p }),
    }
}

/// A complete multipartite graph, described by its distinct part sizes
/// `a_1 > a_2 > ...` and how many parts of each size there are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartiteShape {
    parts: Vec<(usize, usize)>,
}

impl MultipartiteShape {
    /// `(size, multiplicity)` pairs with strictly decreasing sizes.
    pub fn new(parts: Vec<(usize, usize)>) -> Result<Self, DistinguishingError> {
        if parts.is_empty() {
            return Err(DistinguishingError::EmptyShape);
        }
        for &(a, j) in &parts {
            if a == 0 {
                return Err(DistinguishingError::ZeroPartSize);
            }
            if j == 0 {
                return Err(DistinguishingError::ZeroMultiplicity);
            }
        }
        for w in parts.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(DistinguishingError::ShapeNotDecreasing(w[0].0, w[1].0));
            }
        }
        Ok(MultipartiteShape { parts })
    }

    /// Groups a raw list of part sizes into a shape.
    pub fn from_part_sizes(sizes: &[usize]) -> Result<Self, DistinguishingError> {
        let mut sorted = sizes.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for s in sorted {
            match parts.last_mut() {
                Some((size, mult)) if *size == s => *mult += 1,
                _ => parts.push((s, 1)),
            }
        }
        MultipartiteShape::new(parts)
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Distinguishing number of a complete multipartite graph: the least `q`
/// with `C(q, a_i) >= j_i` for every part size. Each part must receive a
/// distinct `a_i`-subset of the labels, and that is also enough.
pub fn multipartite_distinguishing_formula(shape: &MultipartiteShape) -> usize {
    let mut q = shape.parts[0].0;
    loop {
        if shape
            .parts
            .iter()
            .all(|&(a, j)| binomial(q, a) >= j as u128)
        {
            return q;
        }
        q += 1;
    }
}

// ---------------------------------------------------------------------------
// The explicit (m+1)-labeling
// ---------------------------------------------------------------------------

/// The `rank`-th (1-based) `k`-subset of `{1..=universe}` in lexicographic
/// order.
fn kth_subset_lex(universe: usize, k: usize, mut rank: usize) -> Vec<usize> {
    debug_assert!(rank >= 1 && binomial(universe, k) >= rank as u128);
    let mut out = Vec::with_capacity(k);
    let mut next = 1;
    let mut remaining = k;
    while remaining > 0 {
        let with_next = binomial(universe - next, remaining - 1);
        if (rank as u128) <= with_next {
            out.push(next);
            remaining -= 1;
        } else {
            rank -= with_next as usize;
        }
        next += 1;
    }
    out
}

/// A distinguishing `(m+1)`-labeling of `C(m,p)` for `m >= 2`.
///
/// For `p >= 5`: band 1 carries label 1 up to position `p/2` and label 2
/// after it; band `j >= 2` carries label `j+1`; vertex `2p-1` is pulled
/// back to label 1. For `p` in `{2,3}` the graph is complete multipartite,
/// and each module receives a distinct `m`-subset of `{1..=m+1}` instead
/// (subsets in lexicographic order, assigned upward within the module).
/// `p = 4` is rejected: `C(m,4)` is `K_{2m,2m}`, whose distinguishing
/// number is `2m+1`.
pub fn explicit_labeling(spec: &CmpSpec) -> Result<Labeling, DistinguishingError> {
    let (m, p) = (spec.m(), spec.p());
    if m < 2 {
        return Err(DistinguishingError::MultiplicityTooSmall(m));
    }
    match p {
        0 | 1 => Err(DistinguishingError::PeriodTooSmall(p)),
        4 => Err(DistinguishingError::NoSmallLabelingForPeriodFour(2 * m + 1)),
        2 | 3 => {
            let partition = spec.module_partition().expect("m, p >= 2");
            let mut labels = vec![0; spec.order()];
            for (i, block) in partition.blocks().iter().enumerate() {
                let subset = kth_subset_lex(m + 1, m, i + 1);
                for (&v, &label) in block.iter().zip(&subset) {
                    labels[v] = label;
                }
            }
            Labeling::new(m + 1, labels)
        }
        _ => {
            let half = p / 2;
            let labels = (0..spec.order())
                .map(|v| {
                    if v <= half || v == 2 * p - 1 {
                        1
                    } else if v < p {
                        2
                    } else {
                        v / p + 2
                    }
                })
                .collect();
            Labeling::new(m + 1, labels)
        }
    }
}

/// Sorted multiset of the labels on `v`'s neighbors.
pub fn neighborhood_label_signature(g: &Graph, c: &Labeling, v: usize) -> Vec<usize> {
    assert_eq!(c.len(), g.n(), "labeling length must match graph order");
    let mut sig: Vec<usize> = g.neighbors(v).map(|u| c.get(u)).collect();
    sig.sort_unstable();
    sig
}

// ---------------------------------------------------------------------------
// The breaker
// ---------------------------------------------------------------------------

/// A nontrivial automorphism of `C(m,p)` preserving `c`, for any labeling
/// with at most `m` labels (so no such labeling is distinguishing).
///
/// If some block carries two equal labels, their transposition is a module
/// permutation and preserves `c`. Otherwise every block is rainbow:
/// sorting each block by label, reflecting the bands, and unsorting gives
/// an automorphism that sends each vertex to the vertex of the mirrored
/// block with the same label — in particular it moves vertex 0.
pub fn break_labeling(spec: &CmpSpec, c: &Labeling) -> Result<Permutation, DistinguishingError> {
    let (m, p) = (spec.m(), spec.p());
    let n = spec.order();
    if m < 2 || p < 2 {
        return Err(DistinguishingError::BreakerOutOfScope { m, p });
    }
    if c.len() != n {
        return Err(PermError::LabelingLengthMismatch {
            expected: n,
            got: c.len(),
        }
        .into());
    }
    for v in 0..n {
        let label = c.get(v);
        if label > m {
            return Err(PermError::LabelAboveBudget { v, label, m }.into());
        }
    }

    for i in 0..p {
        let mut holder = vec![None; m];
        for r in 0..m {
            let v = i + r * p;
            let label = c.get(v);
            if let Some(u) = holder[label - 1] {
                return Ok(Permutation::transposition(n, u, v));
            }
            holder[label - 1] = Some(v);
        }
    }

    let delta = label_sort(spec, c)?;
    let psi = reflection(spec)?;
    Ok(delta.inverse().compose(&psi)?.compose(&delta)?)
}
