//! Permutations on `0..n`, exhaustive automorphism enumeration for
//! desk-scale graphs, and the structured automorphisms of `C(m,p)`:
//! module permutations, the band reflection, and the label-sorting
//! permutation.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::distinguishing::Labeling;
use crate::graph::{CmpSpec, Graph, ModulePartition};

/// Default ceiling on enumerated automorphism-group size. Group orders blow
/// up factorially; the cap turns a silent hang into a typed error.
pub const DEFAULT_AUT_CAP: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images of length {0} do not form a permutation")]
    NotAPermutation(usize),
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("automorphism group has more than {cap} elements")]
    CapExceeded { cap: usize },
    #[error("expected {expected} block permutations, got {got}")]
    BlockCountMismatch { expected: usize, got: usize },
    #[error("block {block} has size {size} but its permutation has degree {degree}")]
    BlockShapeMismatch {
        block: usize,
        size: usize,
        degree: usize,
    },
    #[error("band reflection needs p >= 2, got p={0}")]
    ReflectionUndefined(usize),
    #[error("labeling length {got} does not match order {expected}")]
    LabelingLengthMismatch { expected: usize, got: usize },
    #[error("vertex {v} carries label {label}, above the m = {m} budget")]
    LabelAboveBudget { v: usize, label: usize, m: usize },
    #[error("block {block} is not rainbow: vertices {u} and {v} both carry label {label}")]
    NonRainbowBlock {
        block: usize,
        u: usize,
        v: usize,
        label: usize,
    },
}

/// A bijection on `{0..n-1}`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Validates that `images` hits every value in `0..len` exactly once.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &w in &images {
            if w >= n || seen[w] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[w] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// The transposition swapping `u` and `v`.
    pub fn transposition(n: usize, u: usize, v: usize) -> Self {
        assert!(
            u < n && v < n && u != v,
            "bad transposition ({u} {v}) on degree {n}"
        );
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(u, v);
        Permutation { images }
    }

    /// The rotation `v -> (v + shift) mod n`.
    pub fn rotation(n: usize, shift: usize) -> Self {
        Permutation {
            images: (0..n).map(|v| (v + shift) % n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Composition applying `other` first: `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = other.images.iter().map(|&w| self.images[w]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (v, &w) in self.images.iter().enumerate() {
            images[w] = v;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, fixed points omitted; the identity prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "({start}")?;
            seen[start] = true;
            let mut v = self.images[start];
            while v != start {
                write!(f, " {v}")?;
                seen[v] = true;
                v = self.images[v];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

/// True iff `sigma` maps the edge set of `g` onto itself.
pub fn is_automorphism(g: &Graph, sigma: &Permutation) -> bool {
    assert_eq!(
        sigma.degree(),
        g.n(),
        "permutation degree must match graph order"
    );
    g.edges()
        .iter()
        .all(|&(u, v)| g.adjacent(sigma.apply(u), sigma.apply(v)))
}

/// The full automorphism group of a graph, listed exhaustively with the
/// identity first and the rest in image-array order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Exhaustive group-axiom check: identity present, closed under
    /// composition, closed under inverse. Quadratic in the order; meant for
    /// groups of a few thousand elements.
    pub fn is_group(&self) -> bool {
        if self.elements.is_empty() || !self.elements[0].is_identity() {
            return false;
        }
        let index: HashSet<&[usize]> = self.elements.iter().map(|p| p.images()).collect();
        for a in &self.elements {
            if !index.contains(a.inverse().images()) {
                return false;
            }
            let mut product = vec![0usize; self.degree];
            for b in &self.elements {
                for (v, slot) in product.iter_mut().enumerate() {
                    *slot = a.images[b.images[v]];
                }
                if !index.contains(product.as_slice()) {
                    return false;
                }
            }
        }
        true
    }
}

/// Vertex-assignment order for the backtracker.
enum SearchOrder {
    /// BFS from the lowest vertex of each component: consecutive vertices
    /// constrain each other early, which is what makes pruning bite.
    Bfs,
    /// Plain `0..n`; leaves come out in image-array order, so the first
    /// hit is the lexicographically least one.
    Natural,
}

struct SearchCtx<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    colors: Option<&'a [usize]>,
    degree: Vec<usize>,
    sig: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
}

const UNASSIGNED: usize = usize::MAX;

impl<'a> SearchCtx<'a> {
    fn new(g: &'a Graph, order: SearchOrder, colors: Option<&'a [usize]>) -> Self {
        let n = g.n();
        if let Some(c) = colors {
            assert_eq!(c.len(), n, "color array must match graph order");
        }
        let order = match order {
            SearchOrder::Natural => (0..n).collect(),
            SearchOrder::Bfs => bfs_order(g),
        };
        let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();

        // Candidate images must match on degree and on the multiset of
        // neighbor degrees. Regular graphs defeat the first filter; the
        // second still separates vertices in lumpier graphs.
        let mut intern: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut sig = Vec::with_capacity(n);
        for v in 0..n {
            let mut s: Vec<usize> = g.neighbors(v).map(|u| degree[u]).collect();
            s.sort_unstable();
            let next = intern.len();
            sig.push(*intern.entry(s).or_insert(next));
        }

        SearchCtx {
            g,
            order,
            colors,
            degree,
            sig,
            image: vec![UNASSIGNED; n],
            used: vec![false; n],
        }
    }

    /// Depth-first over partial maps; `on_leaf` returns `true` to abort the
    /// whole search.
    fn dfs(&mut self, depth: usize, on_leaf: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let n = self.g.n();
        if depth == n {
            return on_leaf(&self.image);
        }
        let v = self.order[depth];
        for w in 0..n {
            if self.used[w] || self.degree[w] != self.degree[v] || self.sig[w] != self.sig[v] {
                continue;
            }
            if let Some(c) = self.colors {
                if c[w] != c[v] {
                    continue;
                }
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g.adjacent(u, v) == self.g.adjacent(self.image[u], w));
            if !consistent {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            let abort = self.dfs(depth + 1, on_leaf);
            self.image[v] = UNASSIGNED;
            self.used[w] = false;
            if abort {
                return true;
            }
        }
        false
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    order
}

/// Lists every automorphism of `g` by backtracking. Errors out as soon as
/// the count passes `cap`.
pub fn enumerate_automorphisms(g: &Graph, cap: usize) -> Result<AutGroup, PermError> {
    assert!(cap > 0, "cap must be positive");
    let mut ctx = SearchCtx::new(g, SearchOrder::Bfs, None);
    let mut elements: Vec<Permutation> = Vec::new();
    let mut overflow = false;
    ctx.dfs(0, &mut |image| {
        if elements.len() == cap {
            overflow = true;
            return true;
        }
        elements.push(Permutation::from_images_unchecked(image.to_vec()));
        false
    });
    if overflow {
        return Err(PermError::CapExceeded { cap });
    }
    elements.sort_unstable();
    debug_assert!(elements[0].is_identity());
    Ok(AutGroup {
        degree: g.n(),
        elements,
    })
}

/// The lexicographically least nontrivial automorphism of `g` that fixes
/// the given coloring, or `None` when only the identity does.
pub fn first_nontrivial_automorphism(g: &Graph, colors: Option<&[usize]>) -> Option<Permutation> {
    let mut ctx = SearchCtx::new(g, SearchOrder::Natural, colors);
    let mut found = None;
    ctx.dfs(0, &mut |image| {
        if image.iter().enumerate().all(|(v, &w)| v == w) {
            return false;
        }
        found = Some(Permutation::from_images_unchecked(image.to_vec()));
        true
    });
    found
}

/// Assembles the global permutation acting as `per_block[i]` inside block
/// `i` of the partition and fixing nothing else — which is everything,
/// since the blocks cover the vertex set. Any such permutation is an
/// automorphism of the corresponding `C(m,p)`.
pub fn module_permutation(
    partition: &ModulePartition,
    per_block: &[Permutation],
) -> Result<Permutation, PermError> {
    if per_block.len() != partition.block_count() {
        return Err(PermError::BlockCountMismatch {
            expected: partition.block_count(),
            got: per_block.len(),
        });
    }
    let n = partition.m() * partition.p();
    let mut images: Vec<usize> = (0..n).collect();
    for (i, sigma) in per_block.iter().enumerate() {
        let block = partition.block(i);
        if sigma.degree() != block.len() {
            return Err(PermError::BlockShapeMismatch {
                block: i,
                size: block.len(),
                degree: sigma.degree(),
            });
        }
        for (j, &v) in block.iter().enumerate() {
            images[v] = block[sigma.apply(j)];
        }
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// The involution of `C(m,p)` fixing every band and reversing residues:
/// `i + r*p  ->  (p - 1 - i) + r*p`. An automorphism for every `m`.
pub fn reflection(spec: &CmpSpec) -> Result<Permutation, PermError> {
    let (m, p) = (spec.m(), spec.p());
    if p < 2 {
        return Err(PermError::ReflectionUndefined(p));
    }
    let mut images = vec![0; spec.order()];
    for r in 0..m {
        for i in 0..p {
            images[i + r * p] = (p - 1 - i) + r * p;
        }
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// The module permutation that sorts every block of `C(m,p)` by label:
/// `v` in block `i` goes to slot `(c(v) - 1) * p + i`. Defined when the
/// labels stay within `1..=m` and every block is rainbow; a repeated label
/// inside a block is reported with the offending pair, which is exactly the
/// transposition that breaks such a labeling.
pub fn label_sort(spec: &CmpSpec, labeling: &Labeling) -> Result<Permutation, PermError> {
    let (m, p) = (spec.m(), spec.p());
    let n = spec.order();
    if p < 2 {
        return Err(PermError::ReflectionUndefined(p));
    }
    if labeling.len() != n {
        return Err(PermError::LabelingLengthMismatch {
            expected: n,
            got: labeling.len(),
        });
    }
    for v in 0..n {
        let label = labeling.get(v);
        if label > m {
            return Err(PermError::LabelAboveBudget { v, label, m });
        }
    }
    let mut images = vec![0; n];
    for i in 0..p {
        let mut holder = vec![None; m];
        for r in 0..m {
            let v = i + r * p;
            let label = labeling.get(v);
            if let Some(u) = holder[label - 1] {
                return Err(PermError::NonRainbowBlock {
                    block: i,
                    u,
                    v,
                    label,
                });
            }
            holder[label - 1] = Some(v);
            images[v] = (label - 1) * p + i;
        }
    }
    Ok(Permutation::from_images_unchecked(images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distinguishing::Labeling;
    use crate::graph::CmpSpec;
    use proptest::prelude::*;

    fn cmp(m: usize, p: usize) -> CmpSpec {
        CmpSpec::new(m, p).unwrap()
    }

    #[test]
    fn compose_and_inverse_basics() {
        let id = Permutation::identity(5);
        let rot = Permutation::rotation(5, 1);
        assert_eq!(rot.compose(&id).unwrap(), rot);
        assert_eq!(rot.compose(&rot.inverse()).unwrap(), id);
        assert_eq!(rot.inverse(), Permutation::rotation(5, 4));
        assert_eq!(id.inverse(), id);

        let other = Permutation::identity(4);
        assert_eq!(
            rot.compose(&other).unwrap_err(),
            PermError::DegreeMismatch(5, 4)
        );
    }

    #[test]
    fn reflection_is_an_involutive_automorphism() {
        let spec = cmp(2, 5);
        let psi = reflection(&spec).unwrap();
        assert_eq!(psi.compose(&psi).unwrap(), Permutation::identity(10));
        assert!(is_automorphism(&spec.build(), &psi));
        assert_eq!(psi.inverse(), psi);
        // i = 2 is the only fixed residue for p = 5
        assert_eq!(psi.apply(7), 7);

        let spec = cmp(4, 4);
        let psi = reflection(&spec).unwrap();
        assert_eq!(psi.apply(0), 3);
        assert_eq!(psi.apply(1), 2);
        assert_eq!(psi.apply(5), 6);

        assert_eq!(
            reflection(&cmp(3, 1)).unwrap_err(),
            PermError::ReflectionUndefined(1)
        );
    }

    #[test]
    fn reflection_involution_sweep() {
        for m in 1..=6 {
            for p in 2..=9 {
                if m * p < 3 {
                    continue;
                }
                let spec = cmp(m, p);
                let psi = reflection(&spec).unwrap();
                assert!(psi.compose(&psi).unwrap().is_identity(), "C({m},{p})");
                assert!(is_automorphism(&spec.build(), &psi), "C({m},{p})");
            }
        }
    }

    #[test]
    fn automorphism_predicate() {
        for (m, p) in [(2, 3), (2, 5), (3, 4), (1, 6)] {
            let g = cmp(m, p).build();
            let rot = Permutation::rotation(g.n(), 1);
            assert!(is_automorphism(&g, &rot), "rotation on C({m},{p})");
        }
        let p3 = Graph::path(3);
        assert!(!is_automorphism(&p3, &Permutation::transposition(3, 0, 1)));
        assert!(is_automorphism(&p3, &Permutation::transposition(3, 0, 2)));
    }

    #[test]
    fn enumerate_small_groups() {
        let c5 = Graph::cycle(5);
        let aut = enumerate_automorphisms(&c5, DEFAULT_AUT_CAP).unwrap();
        assert_eq!(aut.order(), 10);
        assert!(aut.elements()[0].is_identity());
        assert!(aut.is_group());

        // dihedral oracle: rotations and reflections, assembled directly
        let mut dihedral: Vec<Permutation> = Vec::new();
        for k in 0..5 {
            dihedral.push(Permutation::rotation(5, k));
            let refl: Vec<usize> = (0..5).map(|v| (5 + k - v) % 5).collect();
            dihedral.push(Permutation::from_images(refl).unwrap());
        }
        dihedral.sort_unstable();
        assert_eq!(aut.elements(), dihedral.as_slice());

        let k22 = cmp(2, 2).build();
        assert_eq!(enumerate_automorphisms(&k22, 100).unwrap().order(), 8);

        assert_eq!(
            enumerate_automorphisms(&c5, 5).unwrap_err(),
            PermError::CapExceeded { cap: 5 }
        );
    }

    #[test]
    fn enumerate_matches_generated_subgroup_on_c25() {
        // Independent route: close {block swaps, rotation, reflection}
        // under composition and compare with the backtracking enumeration.
        let spec = cmp(2, 5);
        let g = spec.build();
        let part = spec.module_partition().unwrap();

        let mut generators = vec![Permutation::rotation(10, 1), reflection(&spec).unwrap()];
        for i in 0..5 {
            let mut per_block = vec![Permutation::identity(2); 5];
            per_block[i] = Permutation::transposition(2, 0, 1);
            generators.push(module_permutation(&part, &per_block).unwrap());
        }

        let mut closure: HashSet<Permutation> = HashSet::new();
        let mut frontier = vec![Permutation::identity(10)];
        closure.insert(frontier[0].clone());
        while let Some(p) = frontier.pop() {
            for gen in &generators {
                let q = gen.compose(&p).unwrap();
                if closure.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        assert_eq!(closure.len(), 320);

        let aut = enumerate_automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
        assert_eq!(aut.order(), 320);
        let mut expected: Vec<Permutation> = closure.into_iter().collect();
        expected.sort_unstable();
        assert_eq!(aut.elements(), expected.as_slice());
    }

    #[test]
    fn named_automorphisms_appear_in_enumeration() {
        for m in 1..=3usize {
            for p in 2..=5usize {
                if m * p < 3 {
                    continue;
                }
                let spec = cmp(m, p);
                let g = spec.build();
                let cap = 1_200_000; // |Aut(C(3,4))| = |Aut(K_{6,6})| = 1,036,800
                let aut = enumerate_automorphisms(&g, cap).unwrap();
                assert!(
                    aut.contains(&Permutation::rotation(g.n(), 1)),
                    "C({m},{p}) rotation"
                );
                assert!(
                    aut.contains(&reflection(&spec).unwrap()),
                    "C({m},{p}) reflection"
                );
                if m >= 2 {
                    let part = spec.module_partition().unwrap();
                    let mut per_block = vec![Permutation::identity(m); p];
                    per_block[p - 1] = Permutation::transposition(m, 0, m - 1);
                    let mp = module_permutation(&part, &per_block).unwrap();
                    assert!(aut.contains(&mp), "C({m},{p}) module permutation");
                }
                if aut.order() <= 10_000 {
                    assert!(aut.is_group(), "C({m},{p}) closure");
                }
            }
        }
    }

    #[test]
    fn wreath_lower_bound_divides_group_order() {
        for m in 1..=2usize {
            for p in [5, 6, 7] {
                let g = cmp(m, p).build();
                let aut = enumerate_automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
                let factorial = |k: usize| (1..=k).product::<usize>();
                let bound = factorial(m).pow(p as u32) * 2 * p;
                assert_eq!(aut.order() % bound, 0, "C({m},{p})");
            }
        }
    }

    #[test]
    fn module_permutation_examples() {
        let spec = cmp(2, 3);
        let part = spec.module_partition().unwrap();
        let g = spec.build();

        let mut per_block = vec![Permutation::identity(2); 3];
        per_block[0] = Permutation::transposition(2, 0, 1);
        let swap = module_permutation(&part, &per_block).unwrap();
        assert_eq!(swap, Permutation::transposition(6, 0, 3));
        assert!(is_automorphism(&g, &swap));

        let idblocks = vec![Permutation::identity(2); 3];
        assert!(module_permutation(&part, &idblocks).unwrap().is_identity());

        let spec = cmp(3, 5);
        let part = spec.module_partition().unwrap();
        let mut per_block = vec![Permutation::identity(3); 5];
        per_block[0] = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let cyc = module_permutation(&part, &per_block).unwrap();
        assert!(is_automorphism(&spec.build(), &cyc));
        assert_eq!(cyc.apply(0), 5);
        assert_eq!(cyc.apply(5), 10);
        assert_eq!(cyc.apply(10), 0);

        assert_eq!(
            module_permutation(&part, &[Permutation::identity(3)]).unwrap_err(),
            PermError::BlockCountMismatch {
                expected: 5,
                got: 1
            }
        );
        let bad = vec![Permutation::identity(4); 5];
        assert_eq!(
            module_permutation(&part, &bad).unwrap_err(),
            PermError::BlockShapeMismatch {
                block: 0,
                size: 3,
                degree: 4
            }
        );
    }

    #[test]
    fn label_sort_examples() {
        let spec = cmp(2, 5);
        // band-indexed labels: block i reads (1, 2) bottom-up, so nothing moves
        let by_band = Labeling::new(2, (0..10).map(|v| v / 5 + 1).collect()).unwrap();
        let delta = label_sort(&spec, &by_band).unwrap();
        assert!(delta.is_identity());
        assert_eq!(delta.apply(0), 0);
        assert_eq!(delta.apply(5), 5);

        // swapped labels in block 0 relocate its vertices
        let mut labels: Vec<usize> = (0..10).map(|v| v / 5 + 1).collect();
        labels[0] = 2;
        labels[5] = 1;
        let c = Labeling::new(2, labels).unwrap();
        let delta = label_sort(&spec, &c).unwrap();
        assert_eq!(delta.apply(0), 5);
        assert_eq!(delta.apply(5), 0);
        assert!(is_automorphism(&spec.build(), &delta));

        let clash = Labeling::new(2, vec![1; 10]).unwrap();
        assert_eq!(
            label_sort(&spec, &clash).unwrap_err(),
            PermError::NonRainbowBlock {
                block: 0,
                u: 0,
                v: 5,
                label: 1
            }
        );

        let over = Labeling::new(3, vec![1, 3, 1, 2, 1, 2, 1, 2, 1, 2]).unwrap();
        assert_eq!(
            label_sort(&spec, &over).unwrap_err(),
            PermError::LabelAboveBudget {
                v: 1,
                label: 3,
                m: 2
            }
        );
    }

    #[test]
    fn label_sort_is_a_block_preserving_automorphism() {
        // random rainbow labelings: the sort stays inside every block and
        // always lands in the automorphism group
        let mut state = 42u64;
        for (m, p) in [(2, 5), (3, 4), (4, 3), (3, 7)] {
            let spec = cmp(m, p);
            let g = spec.build();
            for _ in 0..20 {
                let mut labels = vec![0usize; spec.order()];
                for i in 0..p {
                    let mut block_labels: Vec<usize> = (1..=m).collect();
                    for j in (1..m).rev() {
                        state = state
                            .wrapping_mul(6364136223846793005)
                            .wrapping_add(1442695040888963407);
                        block_labels.swap(j, (state >> 33) as usize % (j + 1));
                    }
                    for (r, &label) in block_labels.iter().enumerate() {
                        labels[i + r * p] = label;
                    }
                }
                let c = Labeling::new(m, labels).unwrap();
                let delta = label_sort(&spec, &c).unwrap();
                assert!(is_automorphism(&g, &delta), "C({m},{p})");
                assert!(
                    (0..spec.order()).all(|v| delta.apply(v) % p == v % p),
                    "C({m},{p}): delta must fix every block setwise"
                );
            }
        }
    }

    #[test]
    fn display_cycle_notation() {
        assert_eq!(Permutation::identity(4).to_string(), "id");
        assert_eq!(Permutation::transposition(6, 0, 3).to_string(), "(0 3)");
        assert_eq!(Permutation::rotation(3, 1).to_string(), "(0 1 2)");
    }

    proptest! {
        #[test]
        fn group_laws(seed in any::<u64>(), n in 1usize..30) {
            let shuffle = |s: u64| {
                let mut v: Vec<usize> = (0..n).collect();
                let mut state = s;
                for i in (1..n).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    v.swap(i, (state >> 33) as usize % (i + 1));
                }
                Permutation::from_images(v).unwrap()
            };
            let a = shuffle(seed);
            let b = shuffle(seed.wrapping_add(1));
            let c = shuffle(seed.wrapping_add(2));
            let id = Permutation::identity(n);
            prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
            prop_assert_eq!(a.compose(&a.inverse()).unwrap(), id);
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
