//! Simple undirected graphs and the circulant families built on them.
//!
//! Vertices are dense integers `0..n`. Adjacency is kept twice: as a
//! canonical sorted edge list (the serialization order) and as bit rows, so
//! pair queries are O(1) — the automorphism backtracker leans on that.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

/// Errors from graph and circulant construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("order must be at least 3, got {0}")]
    OrderTooSmall(usize),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("generator set contains 0")]
    ZeroGenerator,
    #[error("generator {a} out of range for order {n}")]
    GeneratorOutOfRange { a: usize, n: usize },
    #[error("generator set is not symmetric: contains {a} but not {missing}")]
    AsymmetricGenerator { a: usize, missing: usize },
    #[error("module partition needs m >= 2 and p >= 2, got m={m}, p={p}")]
    DegeneratePartition { m: usize, p: usize },
}

/// Finite simple undirected graph on vertices `0..n`.
///
/// Immutable after construction; no self-loops, no duplicate edges.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Edges may arrive in any order and
    /// orientation; they are stored canonically as `u < v`, sorted.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }

        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for &(u, v) in &list {
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        Ok(Graph {
            n,
            words,
            bits,
            edges: list,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is valid")
    }

    /// Path `P_n` on vertices `0..n` with edges `i -- i+1`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v));
        Graph::new(n, edges).expect("path is valid")
    }

    /// Cycle `C_n`; panics for `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Graph::new(n, edges).expect("cycle is valid")
    }

    /// Complete multipartite graph with the given part sizes; parts occupy
    /// consecutive vertex ranges in the order given.
    pub fn complete_multipartite(part_sizes: &[usize]) -> Self {
        let n: usize = part_sizes.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in part_sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v]);
        Graph::new(n, edges).expect("complete multipartite graph is valid")
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let n = self.n + other.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::new(n, edges).expect("disjoint union is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical edge list: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(v < self.n, "vertex {v} out of range");
        (0..self.n).filter(move |&u| self.adjacent(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range");
        self.bits[v * self.words..(v + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adjacent(u, v));
        Graph::new(self.n, edges).expect("complement is valid")
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        assert!(src < self.n, "vertex {src} out of range");
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path length between `u` and `v`, `None` if disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(v < self.n, "vertex {v} out of range");
        self.bfs_distances(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// True iff no edge has both endpoints in `set`.
    pub fn is_stable(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            assert!(u < self.n, "vertex {u} out of range");
            for &v in &set[i + 1..] {
                if u != v && self.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every vertex outside `set` is adjacent to all of it or to
    /// none of it. Empty sets, singletons and the full vertex set qualify
    /// trivially.
    pub fn is_module(&self, set: &[usize]) -> bool {
        let mut in_set = vec![false; self.n];
        for &v in set {
            assert!(v < self.n, "vertex {v} out of range");
            in_set[v] = true;
        }
        let members: Vec<usize> = (0..self.n).filter(|&v| in_set[v]).collect();
        if members.len() <= 1 {
            return true;
        }
        for y in 0..self.n {
            if in_set[y] {
                continue;
            }
            let hits = members.iter().filter(|&&x| self.adjacent(x, y)).count();
            if hits != 0 && hits != members.len() {
                return false;
            }
        }
        true
    }

    /// Part sizes (descending) if this graph is complete multipartite,
    /// `None` otherwise.
    ///
    /// Vertices are grouped by closed non-neighborhood; the graph is
    /// complete multipartite exactly when every non-adjacent pair falls in
    /// the same group.
    pub fn multipartite_part_sizes(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return Some(Vec::new());
        }
        let words = self.words;
        let mut keys: Vec<Vec<u64>> = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut key: Vec<u64> = self.bits[v * words..(v + 1) * words]
                .iter()
                .map(|w| !w)
                .collect();
            let tail = self.n % 64;
            if tail != 0 {
                key[words - 1] &= (1u64 << tail) - 1;
            }
            keys.push(key);
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) && keys[u] != keys[v] {
                    return None;
                }
            }
        }
        let mut counts: HashMap<&[u64], usize> = HashMap::new();
        for key in &keys {
            *counts.entry(key.as_slice()).or_insert(0) += 1;
        }
        let mut sizes: Vec<usize> = counts.into_values().collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(sizes)
    }
}

/// A circulant graph description: order `n` and a symmetric generator set
/// `A` of nonzero residues. Vertices `i` and `j` are adjacent iff
/// `(j - i) mod n` lies in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    n: usize,
    generators: Vec<usize>,
    member: Vec<bool>,
}

impl CirculantSpec {
    /// Validates the generator set: `n >= 3`, `0` absent, every residue in
    /// range, and `a` present iff `n - a` is. Asymmetric input is rejected,
    /// never repaired; see [`CirculantSpec::symmetrize`].
    pub fn new(n: usize, generators: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderTooSmall(n));
        }
        let set: BTreeSet<usize> = generators.into_iter().collect();
        for &a in &set {
            if a == 0 {
                return Err(GraphError::ZeroGenerator);
            }
            if a >= n {
                return Err(GraphError::GeneratorOutOfRange { a, n });
            }
        }
        for &a in &set {
            if !set.contains(&(n - a)) {
                return Err(GraphError::AsymmetricGenerator { a, missing: n - a });
            }
        }
        let mut member = vec![false; n];
        for &a in &set {
            member[a] = true;
        }
        Ok(CirculantSpec {
            n,
            generators: set.into_iter().collect(),
            member,
        })
    }

    /// Convenience constructor that closes the set under `a -> n - a`
    /// instead of rejecting asymmetric input.
    pub fn symmetrize(
        n: usize,
        generators: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderTooSmall(n));
        }
        let mut set: BTreeSet<usize> = generators.into_iter().collect();
        for a in set.clone() {
            if a == 0 {
                return Err(GraphError::ZeroGenerator);
            }
            if a >= n {
                return Err(GraphError::GeneratorOutOfRange { a, n });
            }
            set.insert(n - a);
        }
        CirculantSpec::new(n, set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted, deduplicated generator residues.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Residue-lookup adjacency; agrees with the built graph everywhere.
    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n, "vertex out of range");
        self.member[(j + self.n - i) % self.n]
    }

    /// Materializes the circulant graph.
    pub fn build(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adjacent(u, v));
        Graph::new(self.n, edges).expect("circulant graph is valid")
    }
}

/// Parameters of the circulant graph `C(m,p)` of order `n = m * p`:
/// `m` stable modules of size... rather, `p` modules of size `m`, with
/// vertex `i` adjacent to `j` iff the residues of `i` and `j` mod `p`
/// differ by one. `C(m,1)` is the clique `K_m`; `C(1,p)` is the cycle
/// `C_p`; `C(m,2)` and `C(m,3)` are `K_{m,m}` and `K_{m,m,m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CmpSpec {
    m: usize,
    p: usize,
}

impl CmpSpec {
    /// Requires `m * p >= 3`.
    pub fn new(m: usize, p: usize) -> Result<Self, GraphError> {
        if m * p < 3 {
            return Err(GraphError::OrderTooSmall(m * p));
        }
        Ok(CmpSpec { m, p })
    }

    /// Multiplicity: the size of each module.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Period: the number of modules.
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn order(&self) -> usize {
        self.m * self.p
    }

    /// The derived generator set `{p-1+rp, p+1+rp : 0 <= r < m}` mod `n`.
    /// `None` for `p == 1`, where the graph is the clique `K_m` and the
    /// formula would put 0 in the set.
    pub fn generator_spec(&self) -> Option<CirculantSpec> {
        if self.p == 1 {
            return None;
        }
        let n = self.order();
        let mut set = BTreeSet::new();
        for r in 0..self.m {
            set.insert((self.p - 1 + r * self.p) % n);
            set.insert((self.p + 1 + r * self.p) % n);
        }
        Some(CirculantSpec::new(n, set).expect("derived generator set is valid"))
    }

    /// Builds `C(m,p)`.
    pub fn build(&self) -> Graph {
        match self.generator_spec() {
            Some(spec) => spec.build(),
            None => Graph::complete(self.m),
        }
    }

    /// The partition of `C(m,p)` into `p` stable modules
    /// `M_i = {i + r*p : 0 <= r < m}`. Needs `m >= 2` and `p >= 2`;
    /// anything less degenerates to singletons or a single block.
    pub fn module_partition(&self) -> Result<ModulePartition, GraphError> {
        if self.m < 2 || self.p < 2 {
            return Err(GraphError::DegeneratePartition {
                m: self.m,
                p: self.p,
            });
        }
        let blocks = (0..self.p)
            .map(|i| (0..self.m).map(|r| i + r * self.p).collect())
            .collect();
        Ok(ModulePartition {
            m: self.m,
            p: self.p,
            blocks,
        })
    }
}

/// The `p` stable modules of `C(m,p)`, each of size `m`, listed by residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePartition {
    m: usize,
    p: usize,
    blocks: Vec<Vec<usize>>,
}

impl ModulePartition {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_count(&self) -> usize {
        self.p
    }

    /// Index of the block containing `v`.
    pub fn block_index(&self, v: usize) -> usize {
        assert!(v < self.m * self.p, "vertex {v} out of range");
        v % self.p
    }
}
