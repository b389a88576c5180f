//! Relative densities between consecutive levels and graded regularity
//! certification.
//!
//! `K_i` below always means the set of crossing i-sets all of whose
//! (i-1)-subsets are edges of the level below; for `i == 2` that is simply
//! the set of crossing pairs. Densities follow the zero convention: a ratio
//! with an empty denominator is 0.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use smallvec::SmallVec;

use crate::combin::for_each_combination;
use crate::complex::{Complex, Edge, EdgeSet, Level, VertexId};
use crate::fmath::fabs;
use crate::rng::SplitRng;

#[derive(Clone, Debug, PartialEq)]
pub enum DensityError {
    InvalidRatio { name: &'static str, value: f64 },
    InvalidParameter { name: &'static str },
    MissingLevel { level: Level },
    LevelOutOfRange { level: Level, k: Level },
    NotASubhypergraph { member: usize, edge: Edge },
    CapacityExceeded { needed: u128, cap: u128 },
}

impl fmt::Display for DensityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityError::InvalidRatio { name, value } => {
                write!(f, "{name} = {value} outside the unit interval")
            }
            DensityError::InvalidParameter { name } => write!(f, "invalid parameter {name}"),
            DensityError::MissingLevel { level } => {
                write!(f, "no density supplied for level {level}")
            }
            DensityError::LevelOutOfRange { level, k } => {
                write!(f, "level {level} out of range for k = {k}")
            }
            DensityError::NotASubhypergraph { member, edge } => {
                write!(f, "tuple member {member} contains non-edge {edge}")
            }
            DensityError::CapacityExceeded { needed, cap } => {
                write!(f, "exhaustive enumeration needs {needed} candidates, cap is {cap}")
            }
        }
    }
}

/// Per-level densities `(d_2, ..., d_k)` with optional per-class-tuple
/// overrides.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityVector {
    base: Vec<f64>,
    overrides: BTreeMap<(Level, Vec<usize>), f64>,
}

fn check_ratio(name: &'static str, value: f64) -> Result<(), DensityError> {
    if !(0.0..=1.0).contains(&value) {
        return Err(DensityError::InvalidRatio { name, value });
    }
    Ok(())
}

impl DensityVector {
    /// One density per level; `base[0]` is the level-2 density. Values are
    /// validated into `[0, 1]` (0 is allowed and produces empty levels in
    /// the generators).
    pub fn homogeneous(base: Vec<f64>) -> Result<Self, DensityError> {
        if base.is_empty() {
            return Err(DensityError::InvalidParameter { name: "density vector is empty" });
        }
        for &d in &base {
            check_ratio("density", d)?;
        }
        Ok(DensityVector { base, overrides: BTreeMap::new() })
    }

    pub fn with_override(
        mut self,
        level: Level,
        class_tuple: &[usize],
        d: f64,
    ) -> Result<Self, DensityError> {
        check_ratio("override density", d)?;
        if !(2..=self.max_level()).contains(&level) {
            return Err(DensityError::LevelOutOfRange { level, k: self.max_level() });
        }
        if class_tuple.len() != level {
            return Err(DensityError::InvalidParameter { name: "class tuple arity" });
        }
        let mut t = class_tuple.to_vec();
        t.sort_unstable();
        t.dedup();
        if t.len() != level {
            return Err(DensityError::InvalidParameter { name: "class tuple repeats a class" });
        }
        self.overrides.insert((level, t), d);
        Ok(self)
    }

    pub fn max_level(&self) -> Level {
        self.base.len() + 1
    }

    pub fn base(&self, level: Level) -> Option<f64> {
        if (2..=self.max_level()).contains(&level) {
            Some(self.base[level - 2])
        } else {
            None
        }
    }

    /// Density for an edge spanning the given (sorted) class tuple.
    pub fn density(&self, level: Level, class_tuple: &[usize]) -> Option<f64> {
        if let Some(&d) = self.overrides.get(&(level, class_tuple.to_vec())) {
            return Some(d);
        }
        self.base(level)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.overrides.is_empty()
    }

    pub fn overrides(&self) -> impl Iterator<Item = (&(Level, Vec<usize>), &f64)> {
        self.overrides.iter()
    }

    /// Levels `i < k` whose base density has a non-integer reciprocal.
    /// Reported as a warning, never an error.
    pub fn integrality_warnings(&self) -> Vec<Level> {
        let k = self.max_level();
        let mut out = Vec::new();
        for level in 2..k {
            let d = self.base[level - 2];
            if d > 0.0 {
                let recip = 1.0 / d;
                if fabs(recip - libm::round(recip)) > 1e-9 {
                    out.push(level);
                }
            }
        }
        out
    }
}

/// All crossing `arity`-sets over `classes` whose every `(arity-1)`-subset
/// lies in `lower`. For `arity == 2`, all crossing pairs.
pub fn cliques_over(classes: &[Vec<VertexId>], lower: &EdgeSet, arity: Level) -> Vec<Edge> {
    let mut out = Vec::new();
    let mut tuple: SmallVec<[VertexId; 4]> = SmallVec::new();
    for_each_combination(classes.len(), arity, |combo| {
        extend_tuple(classes, lower, arity, combo, 0, &mut tuple, &mut out);
    });
    out
}

fn extend_tuple(
    classes: &[Vec<VertexId>],
    lower: &EdgeSet,
    arity: Level,
    combo: &[usize],
    depth: usize,
    tuple: &mut SmallVec<[VertexId; 4]>,
    out: &mut Vec<Edge>,
) {
    if depth == arity {
        let mut sv = tuple.clone();
        sv.sort_unstable();
        out.push(Edge::from_sorted(sv));
        return;
    }
    'next: for &v in &classes[combo[depth]] {
        tuple.push(v);
        // incremental closure check: every (arity-1)-subset of the partial
        // tuple that contains v must already be an edge of `lower`
        if arity >= 3 && tuple.len() >= arity - 1 {
            let mut probe: SmallVec<[VertexId; 4]> = SmallVec::new();
            let older = tuple.len() - 1;
            let mut ok = true;
            for_each_combination(older, arity - 2, |rest| {
                if !ok {
                    return;
                }
                probe.clear();
                probe.extend(rest.iter().map(|&i| tuple[i]));
                probe.push(v);
                probe.sort_unstable();
                if !lower.contains(&Edge::from_sorted(probe.clone())) {
                    ok = false;
                }
            });
            if !ok {
                tuple.pop();
                continue 'next;
            }
        }
        extend_tuple(classes, lower, arity, combo, depth + 1, tuple, out);
        tuple.pop();
    }
}

/// `K_i` of a complex: crossing i-sets spanning complete `(i-1)`-level
/// subhypergraphs. Panics if `i` is outside `2..=g.k()`.
pub fn cliques(g: &Complex, i: Level) -> Vec<Edge> {
    assert!((2..=g.k()).contains(&i), "level {i} out of range");
    let lower = if i >= 3 { g.level(i - 1).clone() } else { EdgeSet::new() };
    cliques_over(g.classes().classes(), &lower, i)
}

/// `(|K_i ∩ E_i|, |K_i|)` as exact counts.
pub fn relative_density_counts(g: &Complex, i: Level) -> (u64, u64) {
    let ks = cliques(g, i);
    let hits = ks.iter().filter(|e| g.level(i).contains(e)).count() as u64;
    (hits, ks.len() as u64)
}

/// Density of level `i` with respect to level `i-1`; 0 when `K_i` is empty.
pub fn relative_density(g: &Complex, i: Level) -> f64 {
    let (hits, vol) = relative_density_counts(g, i);
    ratio(hits, vol)
}

#[inline]
pub(crate) fn ratio(hits: u64, vol: u64) -> f64 {
    if vol == 0 {
        0.0
    } else {
        hits as f64 / vol as f64
    }
}

/// Density of level `i` with respect to an r-tuple `q` of subhypergraphs of
/// level `i-1`: `|K_i(Q) ∩ E_i| / |K_i(Q)|` where `K_i(Q)` is the union of
/// the members' clique sets. Only defined for `i >= 3`.
pub fn tuple_density(g: &Complex, i: Level, q: &[EdgeSet]) -> Result<f64, DensityError> {
    if !(3..=g.k()).contains(&i) {
        return Err(DensityError::LevelOutOfRange { level: i, k: g.k() });
    }
    for (m, member) in q.iter().enumerate() {
        for e in member {
            if !g.level(i - 1).contains(e) {
                return Err(DensityError::NotASubhypergraph { member: m, edge: e.clone() });
            }
        }
    }
    let mut union: BTreeSet<Edge> = BTreeSet::new();
    for member in q {
        union.extend(cliques_over(g.classes().classes(), member, i));
    }
    let hits = union.iter().filter(|e| g.level(i).contains(e)).count() as u64;
    Ok(ratio(hits, union.len() as u64))
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

pub const DEFAULT_EXHAUSTIVE_CAP: u128 = 1 << 20;

/// Class sizes up to which sampled-mode level-2 certification silently
/// upgrades to exhaustive subset enumeration (the report records the mode
/// that actually ran).
pub const BIPARTITE_EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub enum CertifyMode {
    /// Enumerate every admissible Q; errors out above `cap` candidates.
    Exhaustive { cap: u128 },
    /// Test `samples` seeded random r-tuples; each member includes each
    /// lower edge independently with probability 1/2.
    Sampled { samples: usize, seed: u64 },
}

impl CertifyMode {
    pub fn exhaustive() -> Self {
        CertifyMode::Exhaustive { cap: DEFAULT_EXHAUSTIVE_CAP }
    }

    pub fn sampled(samples: usize, seed: u64) -> Self {
        CertifyMode::Sampled { samples, seed }
    }
}

/// Which quantifier family produced a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    QTuple,
    SubsetPair,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeviationWitness {
    pub classes: Vec<usize>,
    pub kind: WitnessKind,
    pub volume: u64,
    pub density: f64,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityReport {
    pub level: Level,
    pub target_density: f64,
    pub delta: f64,
    pub r: usize,
    pub measured_base_density: f64,
    pub max_deviation: f64,
    pub tuples_tested: u64,
    pub mode: ReportMode,
    pub pass: bool,
    pub witnesses: Vec<DeviationWitness>,
}

/// Certifies `(d, delta, r)`-regularity of level `i` with respect to level
/// `i-1`, class tuple by class tuple. Tuples of zero density are exempt.
///
/// For `i == 2` the quantifier ranges over vertex-subset pairs `(X, Y)` with
/// `|X| >= delta |A|`, `|Y| >= delta |B|`; for `i >= 3` over r-tuples `Q`
/// of lower-level subhypergraphs with `|K_i(Q)| > delta |K_i|` (strict).
pub fn certify_regularity(
    g: &Complex,
    i: Level,
    d: f64,
    delta: f64,
    r: usize,
    mode: &CertifyMode,
) -> Result<RegularityReport, DensityError> {
    if !(2..=g.k()).contains(&i) {
        return Err(DensityError::LevelOutOfRange { level: i, k: g.k() });
    }
    check_ratio("d", d)?;
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(DensityError::InvalidRatio { name: "delta", value: delta });
    }
    if r == 0 {
        return Err(DensityError::InvalidParameter { name: "r" });
    }
    if let CertifyMode::Sampled { samples: 0, .. } = mode {
        return Err(DensityError::InvalidParameter { name: "samples" });
    }

    let classes = g.classes().classes();
    let mut effective_mode = mode.clone();
    if i == 2 {
        if let CertifyMode::Sampled { .. } = mode {
            let max_class = classes.iter().map(Vec::len).max().unwrap_or(0);
            if max_class <= BIPARTITE_EXHAUSTIVE_LIMIT {
                effective_mode = CertifyMode::Exhaustive { cap: u128::MAX };
            }
        }
    }

    let mut state = CertifyState {
        d,
        delta,
        max_deviation: 0.0,
        tuples_tested: 0,
        witnesses: Vec::new(),
        base_hits: 0,
        base_volume: 0,
        nonexempt_tuples: 0,
    };

    let class_indices: Vec<usize> = (0..classes.len()).collect();
    let mut result: Result<(), DensityError> = Ok(());
    for_each_combination(class_indices.len(), i, |combo| {
        if result.is_err() {
            return;
        }
        let tuple: Vec<usize> = combo.to_vec();
        result = certify_tuple(g, i, r, &effective_mode, &tuple, &mut state);
    });
    result?;

    let mode_out = match &effective_mode {
        CertifyMode::Exhaustive { .. } => ReportMode::Exhaustive,
        CertifyMode::Sampled { samples, seed } => {
            ReportMode::Sampled { samples: *samples, seed: *seed }
        }
    };
    let pass = state.max_deviation <= delta;
    Ok(RegularityReport {
        level: i,
        target_density: d,
        delta,
        r,
        measured_base_density: ratio(state.base_hits, state.base_volume),
        max_deviation: state.max_deviation,
        tuples_tested: state.tuples_tested,
        mode: mode_out,
        pass,
        witnesses: if pass { Vec::new() } else { state.witnesses },
    })
}

struct CertifyState {
    d: f64,
    delta: f64,
    max_deviation: f64,
    tuples_tested: u64,
    witnesses: Vec<DeviationWitness>,
    base_hits: u64,
    base_volume: u64,
    nonexempt_tuples: u64,
}

impl CertifyState {
    fn observe(&mut self, classes: &[usize], kind: WitnessKind, volume: u64, density: f64) {
        self.tuples_tested += 1;
        let deviation = fabs(density - self.d);
        if deviation > self.max_deviation {
            self.max_deviation = deviation;
        }
        if deviation > self.delta {
            let w = DeviationWitness {
                classes: classes.to_vec(),
                kind,
                volume,
                density,
                deviation,
            };
            self.witnesses.push(w);
            self.witnesses.sort_by(|a, b| {
                b.deviation.partial_cmp(&a.deviation).unwrap_or(core::cmp::Ordering::Equal)
            });
            self.witnesses.truncate(3);
        }
    }
}

fn certify_tuple(
    g: &Complex,
    i: Level,
    r: usize,
    mode: &CertifyMode,
    tuple: &[usize],
    state: &mut CertifyState,
) -> Result<(), DensityError> {
    if i == 2 {
        return certify_bipartite(g, mode, tuple, state);
    }
    let classes: Vec<Vec<VertexId>> = tuple
        .iter()
        .map(|&c| g.classes().class(c).to_vec())
        .collect();
    let scaffold = Scaffold::build(&classes, g.level(i - 1), i, &|e| g.level(i).contains(e));
    state.base_hits += scaffold.base_hits;
    state.base_volume += scaffold.base_volume;
    if scaffold.base_hits == 0 {
        return Ok(()); // zero-density tuple is exempt
    }
    state.nonexempt_tuples += 1;
    let volume_floor = state.delta * scaffold.base_volume as f64;
    match mode {
        CertifyMode::Exhaustive { cap } => {
            let mask_count: u128 = if scaffold.lower_list.len() >= 64 {
                u128::MAX
            } else {
                1u128 << scaffold.lower_list.len()
            };
            let needed = multiset_count(mask_count, r);
            if needed > *cap {
                return Err(DensityError::CapacityExceeded { needed, cap: *cap });
            }
            let mut masks = alloc::vec![0u64; r];
            enumerate_multisets(mask_count as u64, r, 0, 0, &mut masks, &mut |ms| {
                let (vol, hits, _) = scaffold.q_counts_masks(ms);
                if (vol as f64) > volume_floor {
                    state.observe(tuple, WitnessKind::QTuple, vol, ratio(hits, vol));
                }
            });
        }
        CertifyMode::Sampled { samples, seed } => {
            let rng = SplitRng::new(*seed).derive(i as u64).derive_seq(
                &tuple.iter().map(|&c| c as u32).collect::<Vec<_>>(),
            );
            for s in 0..*samples {
                let obs = scaffold.sample_q(r, &rng.derive(s as u64));
                if (obs.volume as f64) > volume_floor {
                    state.observe(tuple, WitnessKind::QTuple, obs.volume, ratio(obs.hits, obs.volume));
                }
            }
        }
    }
    Ok(())
}

fn certify_bipartite(
    g: &Complex,
    mode: &CertifyMode,
    tuple: &[usize],
    state: &mut CertifyState,
) -> Result<(), DensityError> {
    let a = g.classes().class(tuple[0]);
    let b = g.classes().class(tuple[1]);
    let na = a.len();
    let nb = b.len();
    // adjacency rows of A over positions in B
    let words = nb.div_ceil(64);
    let mut adj = alloc::vec![alloc::vec![0u64; words]; na];
    let mut edges: u64 = 0;
    for (ai, &av) in a.iter().enumerate() {
        for (bi, &bv) in b.iter().enumerate() {
            if g.has_edge(&[av, bv]) {
                adj[ai][bi / 64] |= 1u64 << (bi % 64);
                edges += 1;
            }
        }
    }
    state.base_hits += edges;
    state.base_volume += (na * nb) as u64;
    if edges == 0 {
        return Ok(());
    }
    state.nonexempt_tuples += 1;
    let min_x = state.delta * na as f64;
    let min_y = state.delta * nb as f64;

    let mut test_pair = |xs: &[usize], ys_mask: &[u64], ycount: u64| {
        if (xs.len() as f64) < min_x || (ycount as f64) < min_y {
            return;
        }
        if xs.is_empty() || ycount == 0 {
            return;
        }
        let mut e: u64 = 0;
        for &x in xs {
            for w in 0..words {
                e += (adj[x][w] & ys_mask[w]).count_ones() as u64;
            }
        }
        let vol = xs.len() as u64 * ycount;
        state.observe(tuple, WitnessKind::SubsetPair, vol, ratio(e, vol));
    };

    match mode {
        CertifyMode::Exhaustive { cap } => {
            if na >= 64 || nb >= 64 {
                return Err(DensityError::CapacityExceeded { needed: u128::MAX, cap: *cap });
            }
            let needed = (1u128 << na) * (1u128 << nb);
            if needed > *cap {
                return Err(DensityError::CapacityExceeded { needed, cap: *cap });
            }
            for xm in 0u64..(1 << na) {
                let xs: Vec<usize> = (0..na).filter(|&p| xm >> p & 1 == 1).collect();
                if (xs.len() as f64) < min_x {
                    continue;
                }
                for ym in 0u64..(1 << nb) {
                    let mask = [ym];
                    test_pair(&xs, &mask, ym.count_ones() as u64);
                }
            }
        }
        CertifyMode::Sampled { samples, seed } => {
            let rng = SplitRng::new(*seed).derive(2).derive_seq(
                &tuple.iter().map(|&c| c as u32).collect::<Vec<_>>(),
            );
            for s in 0..*samples {
                let srng = rng.derive(s as u64);
                let xs: Vec<usize> = (0..na)
                    .filter(|&p| srng.derive(p as u64).bernoulli(0.5))
                    .collect();
                let mut ys_mask = alloc::vec![0u64; words];
                let mut ycount = 0u64;
                let yrng = srng.derive(u64::MAX);
                for p in 0..nb {
                    if yrng.derive(p as u64).bernoulli(0.5) {
                        ys_mask[p / 64] |= 1u64 << (p % 64);
                        ycount += 1;
                    }
                }
                test_pair(&xs, &ys_mask, ycount);
            }
        }
    }
    Ok(())
}

/// Number of r-multisets over `n` items, saturating.
fn multiset_count(n: u128, r: usize) -> u128 {
    // C(n + r - 1, r)
    let mut acc: u128 = 1;
    for j in 0..r as u128 {
        let term = n.saturating_add(r as u128 - 1 - j);
        acc = acc.saturating_mul(term) / (j + 1);
        if acc == u128::MAX {
            return acc;
        }
    }
    acc
}

fn enumerate_multisets(
    n: u64,
    r: usize,
    slot: usize,
    start: u64,
    masks: &mut [u64],
    f: &mut impl FnMut(&[u64]),
) {
    if slot == r {
        f(masks);
        return;
    }
    for m in start..n {
        masks[slot] = m;
        enumerate_multisets(n, r, slot + 1, m, masks, f);
    }
}

// ---------------------------------------------------------------------------
// Scaffold: indexed cliques of one class tuple, shared by the certifier and
// the reduced-hypergraph machinery.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub(crate) struct CliqueEntry {
    pub edge: Edge,
    pub subsets: SmallVec<[usize; 4]>, // indices into lower_list
    pub upper: bool,
}

#[derive(Clone, Debug)]
pub(crate) struct Scaffold {
    pub lower_list: Vec<Edge>,
    pub cliques: Vec<CliqueEntry>,
    pub base_volume: u64,
    pub base_hits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QObservation {
    pub volume: u64,
    pub hits: u64,
    pub misses: u64,
}

impl Scaffold {
    /// `classes` are the member lists of the tuple under test; `lower` may be
    /// a superset of the relevant edges (only those within the tuple's
    /// vertices are indexed).
    pub(crate) fn build(
        classes: &[Vec<VertexId>],
        lower: &EdgeSet,
        arity: Level,
        upper: &dyn Fn(&Edge) -> bool,
    ) -> Scaffold {
        let member_set: BTreeSet<VertexId> =
            classes.iter().flat_map(|c| c.iter().copied()).collect();
        let lower_list: Vec<Edge> = lower
            .iter()
            .filter(|e| e.vertices().iter().all(|v| member_set.contains(v)))
            .cloned()
            .collect();
        let index: BTreeMap<&Edge, usize> =
            lower_list.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let cliques_raw = cliques_over(classes, lower, arity);
        let mut cliques = Vec::with_capacity(cliques_raw.len());
        let mut base_hits = 0u64;
        for edge in cliques_raw {
            let mut subsets: SmallVec<[usize; 4]> = SmallVec::new();
            if arity >= 3 {
                for s in edge.subsets(arity - 1) {
                    subsets.push(index[&s]);
                }
            }
            let hit = upper(&edge);
            if hit {
                base_hits += 1;
            }
            cliques.push(CliqueEntry { edge, subsets, upper: hit });
        }
        let base_volume = cliques.len() as u64;
        Scaffold { lower_list, cliques, base_volume, base_hits }
    }

    /// `(volume, hits, misses)` of `K(Q)` for an r-tuple of bitmask-encoded
    /// subhypergraphs (`lower_list` must fit in 64 bits).
    fn q_counts_masks(&self, masks: &[u64]) -> (u64, u64, u64) {
        let mut vol = 0u64;
        let mut hits = 0u64;
        let mut misses = 0u64;
        for c in &self.cliques {
            let included = masks
                .iter()
                .any(|m| c.subsets.iter().all(|&s| m >> s & 1 == 1));
            if included {
                vol += 1;
                if c.upper {
                    hits += 1;
                } else {
                    misses += 1;
                }
            }
        }
        (vol, hits, misses)
    }

    /// One sampled r-tuple: each member includes each lower edge
    /// independently with probability 1/2 (hash-derived, order independent).
    pub(crate) fn sample_q(&self, r: usize, rng: &SplitRng) -> QObservation {
        let e = self.lower_list.len();
        let mut membership = alloc::vec![false; e * r];
        for slot in 0..r {
            let srng = rng.derive(slot as u64);
            for idx in 0..e {
                membership[slot * e + idx] = srng.derive(idx as u64).bernoulli(0.5);
            }
        }
        let mut vol = 0u64;
        let mut hits = 0u64;
        let mut misses = 0u64;
        for c in &self.cliques {
            let included = (0..r).any(|slot| {
                c.subsets.iter().all(|&s| membership[slot * e + s])
            });
            if included {
                vol += 1;
                if c.upper {
                    hits += 1;
                } else {
                    misses += 1;
                }
            }
        }
        QObservation { volume: vol, hits, misses }
    }
}
