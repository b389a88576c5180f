//! Partite graded complexes: vertex classes, edges, downward closure.
//!
//! A [`Complex`] holds, for each level `i` in `2..=k`, a set of crossing
//! `i`-edges (sorted tuples of vertex ids, at most one vertex per class) that
//! is downward closed: every `(i-1)`-subset of an `i`-edge is an
//! `(i-1)`-edge. Levels may hold edges that do not extend upward.
//! Singleton sets are not stored.
//!
//! Complexes are immutable after construction; every constructor validates
//! the crossing and closure invariants and reports the offending edge on
//! failure.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use smallvec::SmallVec;

use crate::combin::for_each_combination;

pub type VertexId = u32;
pub type Level = usize;

/// Largest supported complex level. Clique enumeration cost grows steeply
/// with the level, so this is a build-scale bound.
pub const MAX_LEVEL: Level = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    OverlappingClasses { vertex: VertexId },
    NonDenseIds { vertex_count: usize },
    KTooSmall { k: Level },
    KTooLarge { k: Level, max: Level },
    LevelOutOfRange { level: Level, k: Level },
    EdgeArity { level: Level, len: usize },
    DuplicateVertex { vertex: VertexId },
    UnknownVertex { vertex: VertexId },
    NonCrossingEdge { level: Level, edge: Edge },
    ClosureViolated { level: Level, edge: Edge, missing: Edge },
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::OverlappingClasses { vertex } => {
                write!(f, "vertex {vertex} appears in more than one class")
            }
            ComplexError::NonDenseIds { vertex_count } => {
                write!(f, "class lists must cover ids 0..{vertex_count} exactly")
            }
            ComplexError::KTooSmall { k } => write!(f, "complex level k = {k} must be at least 2"),
            ComplexError::KTooLarge { k, max } => {
                write!(f, "complex level k = {k} exceeds the supported maximum {max}")
            }
            ComplexError::LevelOutOfRange { level, k } => {
                write!(f, "level {level} out of range 2..={k}")
            }
            ComplexError::EdgeArity { level, len } => {
                write!(f, "edge of {len} vertices stored at level {level}")
            }
            ComplexError::DuplicateVertex { vertex } => {
                write!(f, "vertex {vertex} repeated within an edge")
            }
            ComplexError::UnknownVertex { vertex } => write!(f, "unknown vertex {vertex}"),
            ComplexError::NonCrossingEdge { level, edge } => {
                write!(f, "edge {edge} at level {level} has two vertices in one class")
            }
            ComplexError::ClosureViolated { level, edge, missing } => write!(
                f,
                "edge {edge} at level {level} lacks subset {missing} at level {}",
                level - 1
            ),
        }
    }
}

/// A sorted tuple of distinct vertex ids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(SmallVec<[VertexId; 4]>);

impl Edge {
    pub fn new(vertices: &[VertexId]) -> Result<Self, ComplexError> {
        let mut v: SmallVec<[VertexId; 4]> = SmallVec::from_slice(vertices);
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::DuplicateVertex { vertex: w[0] });
            }
        }
        Ok(Edge(v))
    }

    /// `vertices` must already be sorted and duplicate-free.
    pub(crate) fn from_sorted(vertices: SmallVec<[VertexId; 4]>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Edge(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// All subsets of the given size, each sorted, in lexicographic order.
    pub fn subsets(&self, size: usize) -> Vec<Edge> {
        let mut out = Vec::new();
        for_each_combination(self.0.len(), size, |idx| {
            let sv: SmallVec<[VertexId; 4]> = idx.iter().map(|&i| self.0[i]).collect();
            out.push(Edge::from_sorted(sv));
        });
        out
    }

    pub fn without(&self, v: VertexId) -> Edge {
        Edge(self.0.iter().copied().filter(|&x| x != v).collect())
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Ordered, pairwise disjoint vertex classes over dense ids `0..total`.
///
/// Class order is identity-relevant: partition-respecting maps send the
/// pattern's class `j` into the host's class `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClasses {
    classes: Vec<Vec<VertexId>>,
    class_of: Vec<u32>,
}

impl VertexClasses {
    pub fn new(classes: Vec<Vec<VertexId>>) -> Result<Self, ComplexError> {
        let total: usize = classes.iter().map(Vec::len).sum();
        let mut class_of = alloc::vec![u32::MAX; total];
        for (c, members) in classes.iter().enumerate() {
            for &v in members {
                let slot = class_of
                    .get_mut(v as usize)
                    .ok_or(ComplexError::NonDenseIds { vertex_count: total })?;
                if *slot != u32::MAX {
                    return Err(ComplexError::OverlappingClasses { vertex: v });
                }
                *slot = c as u32;
            }
        }
        // every id 0..total must have been claimed
        if class_of.iter().any(|&c| c == u32::MAX) {
            return Err(ComplexError::NonDenseIds { vertex_count: total });
        }
        let mut classes = classes;
        for members in &mut classes {
            members.sort_unstable();
        }
        Ok(VertexClasses { classes, class_of })
    }

    /// `ell` contiguous classes of `n` vertices each.
    pub fn blocks(ell: usize, n: usize) -> Self {
        Self::from_sizes(&alloc::vec![n; ell])
    }

    /// Contiguous classes with the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Self {
        let mut classes = Vec::with_capacity(sizes.len());
        let mut next: VertexId = 0;
        for &n in sizes {
            classes.push((next..next + n as VertexId).collect());
            next += n as VertexId;
        }
        VertexClasses::new(classes).expect("contiguous blocks are always valid")
    }

    /// Classes from a per-vertex assignment into `0..class_count`.
    pub fn from_assignment(assignment: &[usize], class_count: usize) -> Result<Self, ComplexError> {
        let mut classes = alloc::vec![Vec::new(); class_count];
        for (v, &c) in assignment.iter().enumerate() {
            if c >= class_count {
                return Err(ComplexError::NonDenseIds { vertex_count: assignment.len() });
            }
            classes[c].push(v as VertexId);
        }
        VertexClasses::new(classes)
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class(&self, idx: usize) -> &[VertexId] {
        &self.classes[idx]
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    pub fn class_of(&self, v: VertexId) -> Option<usize> {
        self.class_of.get(v as usize).map(|&c| c as usize)
    }

    /// True when the vertices are known and lie in pairwise distinct classes.
    pub fn is_crossing(&self, vertices: &[VertexId]) -> bool {
        let mut seen: SmallVec<[u32; 8]> = SmallVec::new();
        for &v in vertices {
            match self.class_of.get(v as usize) {
                None => return false,
                Some(&c) => {
                    if seen.contains(&c) {
                        return false;
                    }
                    seen.push(c);
                }
            }
        }
        true
    }

    /// Sorted class indices met by `vertices` (distinct when crossing).
    pub fn class_tuple(&self, vertices: &[VertexId]) -> Vec<usize> {
        let mut t: Vec<usize> = vertices
            .iter()
            .filter_map(|&v| self.class_of(v))
            .collect();
        t.sort_unstable();
        t
    }
}

pub type EdgeSet = BTreeSet<Edge>;

/// A downward-closed graded edge family over vertex classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    classes: VertexClasses,
    k: Level,
    levels: Vec<EdgeSet>, // levels[0] holds level 2
}

impl Complex {
    pub fn new(
        classes: VertexClasses,
        k: Level,
        levels: Vec<EdgeSet>,
    ) -> Result<Self, ComplexError> {
        if k < 2 {
            return Err(ComplexError::KTooSmall { k });
        }
        if k > MAX_LEVEL {
            return Err(ComplexError::KTooLarge { k, max: MAX_LEVEL });
        }
        let mut levels = levels;
        levels.resize(k - 1, EdgeSet::new());
        let c = Complex { classes, k, levels };
        c.validate()?;
        Ok(c)
    }

    pub fn empty(classes: VertexClasses, k: Level) -> Result<Self, ComplexError> {
        Complex::new(classes, k, Vec::new())
    }

    /// Re-checks arity, crossing and closure for every stored edge.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for (slot, edges) in self.levels.iter().enumerate() {
            let level = slot + 2;
            for e in edges {
                if e.len() != level {
                    return Err(ComplexError::EdgeArity { level, len: e.len() });
                }
                if !self.classes.is_crossing(e.vertices()) {
                    return Err(ComplexError::NonCrossingEdge { level, edge: e.clone() });
                }
                if level > 2 {
                    for sub in e.subsets(level - 1) {
                        if !self.levels[slot - 1].contains(&sub) {
                            return Err(ComplexError::ClosureViolated {
                                level,
                                edge: e.clone(),
                                missing: sub,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn k(&self) -> Level {
        self.k
    }

    pub fn classes(&self) -> &VertexClasses {
        &self.classes
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.vertex_count()
    }

    /// Edge set of the given level. Panics if `level` is outside `2..=k`.
    pub fn level(&self, level: Level) -> &EdgeSet {
        assert!(
            (2..=self.k).contains(&level),
            "level {level} out of range 2..={}",
            self.k
        );
        &self.levels[level - 2]
    }

    pub fn edge_count(&self, level: Level) -> usize {
        self.level(level).len()
    }

    pub fn total_edge_count(&self) -> usize {
        self.levels.iter().map(BTreeSet::len).sum()
    }

    pub fn has_edge(&self, vertices: &[VertexId]) -> bool {
        let level = vertices.len();
        if !(2..=self.k).contains(&level) {
            return false;
        }
        match Edge::new(vertices) {
            Ok(e) => self.levels[level - 2].contains(&e),
            Err(_) => false,
        }
    }

    /// Maximum over levels of the number of edges containing `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize, ComplexError> {
        if (v as usize) >= self.classes.vertex_count() {
            return Err(ComplexError::UnknownVertex { vertex: v });
        }
        let mut best = 0;
        for edges in &self.levels {
            let at_level = edges.iter().filter(|e| e.contains(v)).count();
            best = best.max(at_level);
        }
        Ok(best)
    }

    /// Connected components of the level-2 graph, as sorted vertex sets
    /// covering every vertex (isolated vertices form singletons).
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let n = self.classes.vertex_count();
        let mut adj: Vec<Vec<VertexId>> = alloc::vec![Vec::new(); n];
        for e in &self.levels[0] {
            let vs = e.vertices();
            adj[vs[0] as usize].push(vs[1]);
            adj[vs[1] as usize].push(vs[0]);
        }
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = alloc::vec![start as VertexId];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &adj[v as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Subcomplex induced on `keep`, with vertices relabelled to dense ids
    /// in ascending original order. Class count and order are preserved.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Complex {
        self.induced_with_map(keep).0
    }

    /// As [`Complex::induced`]; also returns the new-id -> old-id table.
    pub fn induced_with_map(&self, keep: &BTreeSet<VertexId>) -> (Complex, Vec<VertexId>) {
        let old_ids: Vec<VertexId> = keep
            .iter()
            .copied()
            .filter(|&v| (v as usize) < self.classes.vertex_count())
            .collect();
        let mut new_of: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for (new, &old) in old_ids.iter().enumerate() {
            new_of.insert(old, new as VertexId);
        }
        let classes: Vec<Vec<VertexId>> = self
            .classes
            .classes()
            .iter()
            .map(|members| {
                members
                    .iter()
                    .filter_map(|v| new_of.get(v).copied())
                    .collect()
            })
            .collect();
        let classes = VertexClasses::new(classes).expect("relabelled classes stay disjoint");
        let levels: Vec<EdgeSet> = self
            .levels
            .iter()
            .map(|edges| {
                edges
                    .iter()
                    .filter(|e| e.vertices().iter().all(|v| new_of.contains_key(v)))
                    .map(|e| {
                        let sv: SmallVec<[VertexId; 4]> =
                            e.vertices().iter().map(|v| new_of[v]).collect();
                        Edge::from_sorted(sv)
                    })
                    .collect()
            })
            .collect();
        let complex = Complex { classes, k: self.k, levels };
        debug_assert!(complex.validate().is_ok());
        (complex, old_ids)
    }

    /// Drops all levels above `j`.
    pub fn truncate(&self, j: Level) -> Result<Complex, ComplexError> {
        if !(2..=self.k).contains(&j) {
            return Err(ComplexError::LevelOutOfRange { level: j, k: self.k });
        }
        Ok(Complex {
            classes: self.classes.clone(),
            k: j,
            levels: self.levels[..j - 1].to_vec(),
        })
    }

    /// Replaces the edge set of one level, revalidating the whole complex.
    pub fn with_level(&self, level: Level, edges: EdgeSet) -> Result<Complex, ComplexError> {
        if !(2..=self.k).contains(&level) {
            return Err(ComplexError::LevelOutOfRange { level, k: self.k });
        }
        let mut levels = self.levels.clone();
        levels[level - 2] = edges;
        Complex::new(self.classes.clone(), self.k, levels)
    }
}

/// A k-uniform hypergraph, optionally partite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformHypergraph {
    classes: Option<VertexClasses>,
    vertex_count: usize,
    k: usize,
    edges: EdgeSet,
}

impl UniformHypergraph {
    pub fn new(vertex_count: usize, k: usize, edges: EdgeSet) -> Result<Self, ComplexError> {
        if k < 2 {
            return Err(ComplexError::KTooSmall { k });
        }
        for e in &edges {
            if e.len() != k {
                return Err(ComplexError::EdgeArity { level: k, len: e.len() });
            }
            for &v in e.vertices() {
                if v as usize >= vertex_count {
                    return Err(ComplexError::UnknownVertex { vertex: v });
                }
            }
        }
        Ok(UniformHypergraph { classes: None, vertex_count, k, edges })
    }

    pub fn new_partite(
        classes: VertexClasses,
        k: usize,
        edges: EdgeSet,
    ) -> Result<Self, ComplexError> {
        let mut h = UniformHypergraph::new(classes.vertex_count(), k, edges)?;
        for e in &h.edges {
            if !classes.is_crossing(e.vertices()) {
                return Err(ComplexError::NonCrossingEdge { level: k, edge: e.clone() });
            }
        }
        h.classes = Some(classes);
        Ok(h)
    }

    /// The complete k-uniform hypergraph on `m` vertices.
    pub fn complete(m: usize, k: usize) -> Result<Self, ComplexError> {
        let mut edges = EdgeSet::new();
        for_each_combination(m, k, |idx| {
            let sv: SmallVec<[VertexId; 4]> = idx.iter().map(|&i| i as VertexId).collect();
            edges.insert(Edge::from_sorted(sv));
        });
        UniformHypergraph::new(m, k, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn classes(&self) -> Option<&VertexClasses> {
        self.classes.as_ref()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count as VertexId)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Downward closure: every hyperedge contributes all of its subsets of
    /// size `2..=k` as edges of the resulting complex.
    pub fn closure(&self) -> Result<Complex, ComplexError> {
        let classes = self
            .classes
            .clone()
            .ok_or(ComplexError::NonDenseIds { vertex_count: self.vertex_count })?;
        let mut levels = alloc::vec![EdgeSet::new(); self.k - 1];
        for e in &self.edges {
            for i in 2..=self.k {
                for sub in e.subsets(i) {
                    levels[i - 2].insert(sub);
                }
            }
        }
        Complex::new(classes, self.k, levels)
    }

    /// Reinterprets the hypergraph over the given classes (for example after
    /// a class assignment), checking that every edge becomes crossing.
    pub fn with_classes(&self, classes: VertexClasses) -> Result<Self, ComplexError> {
        UniformHypergraph::new_partite(classes, self.k, self.edges.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn edge(vs: &[VertexId]) -> Edge {
        Edge::new(vs).unwrap()
    }

    #[test]
    fn edge_sorts_and_rejects_duplicates() {
        assert_eq!(edge(&[3, 1, 2]).vertices(), &[1, 2, 3]);
        assert!(matches!(
            Edge::new(&[1, 1, 2]),
            Err(ComplexError::DuplicateVertex { vertex: 1 })
        ));
    }

    #[test]
    fn classes_validate_disjoint_dense() {
        assert!(VertexClasses::new(vec![vec![0, 1], vec![2]]).is_ok());
        assert!(matches!(
            VertexClasses::new(vec![vec![0, 1], vec![1]]),
            Err(ComplexError::OverlappingClasses { vertex: 1 })
        ));
        assert!(VertexClasses::new(vec![vec![0, 2]]).is_err()); // id 1 missing
    }

    #[test]
    fn closure_of_single_triple() {
        let classes = VertexClasses::blocks(3, 1);
        let h = UniformHypergraph::new_partite(
            classes,
            3,
            [edge(&[0, 1, 2])].into_iter().collect(),
        )
        .unwrap();
        let c = h.closure().unwrap();
        assert_eq!(c.edge_count(3), 1);
        assert_eq!(c.edge_count(2), 3);
        assert!(c.has_edge(&[0, 1]));
        assert!(c.has_edge(&[0, 2]));
        assert!(c.has_edge(&[1, 2]));
    }

    #[test]
    fn closure_of_empty_hypergraph_is_empty() {
        let h = UniformHypergraph::new_partite(VertexClasses::blocks(3, 2), 3, EdgeSet::new())
            .unwrap();
        let c = h.closure().unwrap();
        assert_eq!(c.edge_count(2), 0);
        assert_eq!(c.edge_count(3), 0);
    }

    #[test]
    fn closure_of_k4_three_uniform() {
        // K_4^{(3)}: 4 vertices in 4 classes, all four triples
        let classes = VertexClasses::blocks(4, 1);
        let mut edges = EdgeSet::new();
        for_each_combination(4, 3, |idx| {
            edges.insert(edge(&[idx[0] as u32, idx[1] as u32, idx[2] as u32]));
        });
        let c = UniformHypergraph::new_partite(classes, 3, edges)
            .unwrap()
            .closure()
            .unwrap();
        assert_eq!(c.edge_count(3), 4);
        assert_eq!(c.edge_count(2), 6);
        // every vertex: 3 pairs, 3 triples
        for v in 0..4 {
            assert_eq!(c.degree(v).unwrap(), 3);
        }
    }

    #[test]
    fn non_crossing_edge_is_named() {
        let classes = VertexClasses::new(vec![vec![0, 1], vec![2]]).unwrap();
        let err = UniformHypergraph::new_partite(
            classes,
            2,
            [edge(&[0, 1])].into_iter().collect(),
        )
        .unwrap_err();
        match err {
            ComplexError::NonCrossingEdge { edge: e, .. } => {
                assert_eq!(e.vertices(), &[0, 1]);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn degree_of_isolated_vertex_and_closure() {
        let classes = VertexClasses::blocks(3, 2);
        let h = UniformHypergraph::new_partite(
            classes,
            3,
            [edge(&[0, 2, 4])].into_iter().collect(),
        )
        .unwrap();
        let c = h.closure().unwrap();
        assert_eq!(c.degree(1).unwrap(), 0);
        // vertices of the triple: 2 pairs vs 1 triple
        assert_eq!(c.degree(0).unwrap(), 2);
        assert!(matches!(
            c.degree(99),
            Err(ComplexError::UnknownVertex { vertex: 99 })
        ));
    }

    #[test]
    fn components_cover_vertices() {
        let classes = VertexClasses::blocks(2, 3); // classes {0,1,2}, {3,4,5}
        let mut level2 = EdgeSet::new();
        level2.insert(edge(&[0, 3]));
        level2.insert(edge(&[1, 4]));
        let c = Complex::new(classes, 2, vec![level2]).unwrap();
        let comps = c.components();
        assert_eq!(comps.len(), 4); // {0,3}, {1,4}, {2}, {5}
        let union: BTreeSet<VertexId> = comps.iter().flatten().copied().collect();
        assert_eq!(union.len(), 6);
        assert_eq!(comps.iter().filter(|c| c.len() == 2).count(), 2);
    }

    #[test]
    fn components_of_closed_edge_form_one_block() {
        let classes = VertexClasses::blocks(3, 1);
        let c = UniformHypergraph::new_partite(
            classes,
            3,
            [edge(&[0, 1, 2])].into_iter().collect(),
        )
        .unwrap()
        .closure()
        .unwrap();
        assert_eq!(c.components().len(), 1);
    }

    #[test]
    fn induced_identity_and_empty() {
        let classes = VertexClasses::blocks(3, 2);
        let c = UniformHypergraph::new_partite(
            classes,
            3,
            [edge(&[0, 2, 4]), edge(&[1, 3, 5])].into_iter().collect(),
        )
        .unwrap()
        .closure()
        .unwrap();
        let all: BTreeSet<VertexId> = (0..6).collect();
        assert_eq!(c.induced(&all), c);
        let nothing = c.induced(&BTreeSet::new());
        assert_eq!(nothing.vertex_count(), 0);
        assert_eq!(nothing.edge_count(2), 0);
    }

    #[test]
    fn induced_drop_one_vertex_of_closed_triple() {
        let classes = VertexClasses::blocks(3, 1);
        let c = UniformHypergraph::new_partite(
            classes,
            3,
            [edge(&[0, 1, 2])].into_iter().collect(),
        )
        .unwrap()
        .closure()
        .unwrap();
        let keep: BTreeSet<VertexId> = [0, 1].into_iter().collect();
        let sub = c.induced(&keep);
        assert_eq!(sub.edge_count(3), 0);
        assert_eq!(sub.edge_count(2), 1);
        assert!(sub.has_edge(&[0, 1]));
    }

    #[test]
    fn induced_is_idempotent_and_monotone() {
        let classes = VertexClasses::blocks(3, 2);
        let c = UniformHypergraph::new_partite(
            classes,
            3,
            [edge(&[0, 2, 4]), edge(&[0, 3, 5]), edge(&[1, 2, 5])]
                .into_iter()
                .collect(),
        )
        .unwrap()
        .closure()
        .unwrap();
        let s: BTreeSet<VertexId> = [0, 1, 2, 4, 5].into_iter().collect();
        let s2: BTreeSet<VertexId> = [0, 2, 4].into_iter().collect();
        let once = c.induced(&s);
        // relabel s2 into `once` ids: s sorted = [0,1,2,4,5], s2 -> {0,2,3}
        let s2_relabelled: BTreeSet<VertexId> = [0, 2, 3].into_iter().collect();
        assert_eq!(once.induced(&s2_relabelled), c.induced(&s2));
        assert_eq!(c.induced(&s).induced(&(0..5).collect()), c.induced(&s));
    }

    #[test]
    fn truncate_drops_upper_levels() {
        let classes = VertexClasses::blocks(3, 1);
        let c = UniformHypergraph::new_partite(
            classes,
            3,
            [edge(&[0, 1, 2])].into_iter().collect(),
        )
        .unwrap()
        .closure()
        .unwrap();
        let t = c.truncate(2).unwrap();
        assert_eq!(t.k(), 2);
        assert_eq!(t.edge_count(2), 3);
        assert_eq!(c.truncate(3).unwrap(), c);
        assert!(c.truncate(4).is_err());
        assert!(c.truncate(1).is_err());
    }

    #[test]
    fn closure_violation_is_detected() {
        let classes = VertexClasses::blocks(3, 1);
        let mut l3 = EdgeSet::new();
        l3.insert(edge(&[0, 1, 2]));
        let err = Complex::new(classes, 3, vec![EdgeSet::new(), l3]).unwrap_err();
        assert!(matches!(err, ComplexError::ClosureViolated { .. }));
    }

    #[test]
    fn k_bounds_enforced() {
        let classes = VertexClasses::blocks(5, 1);
        assert!(matches!(
            Complex::empty(classes.clone(), 1),
            Err(ComplexError::KTooSmall { .. })
        ));
        assert!(matches!(
            Complex::empty(classes, MAX_LEVEL + 1),
            Err(ComplexError::KTooLarge { .. })
        ));
    }

    #[test]
    fn complete_hypergraph_edge_count() {
        let h = UniformHypergraph::complete(6, 3).unwrap();
        assert_eq!(h.edges().len(), 20);
        assert_eq!(h.max_degree(), 10);
    }
}
