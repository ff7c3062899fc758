//! Section constructions for predictable, optional, measurable and
//! accessible sets.
//!
//! Every solver returns a time whose graph lies inside the target set and
//! whose finiteness probability falls short of the outer measure of the
//! target's projection by at most `ε`. The `Debut` strategy returns the
//! debut of the target, which is exact on a finite grid. The `Souslin`
//! strategy represents a predictable set by a monotone scheme of predictable
//! sets, then walks the scheme coordinate by coordinate, increasing each
//! index until the envelope below the chosen prefix carries enough
//! projection mass, and returns the debut of the selected branch.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::measure::{outer_measure, AtomSet, SampleSpace, SigmaAlgebra};
use crate::souslin::{Paving, SouslinScheme};
use crate::time::{
    combine_min, debut, interval, FilteredSpace, RandomTime, SetKind, StochasticSet, Tick,
};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Debut of the whole target set.
    Debut,
    /// Greedy prefix selection over a monotone scheme.
    Souslin,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Debut => "debut",
            Strategy::Souslin => "souslin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SectionKind {
    Predictable,
    Optional,
    Measurable,
    Accessible,
}

impl SectionKind {
    pub fn name(self) -> &'static str {
        match self {
            SectionKind::Predictable => "predictable",
            SectionKind::Optional => "optional",
            SectionKind::Measurable => "measurable",
            SectionKind::Accessible => "accessible",
        }
    }
}

/// How an optional section spent its `ε/2 + ε/2` budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonSplit {
    pub predictable_budget: Rational,
    pub predictable_deficit: Rational,
    pub thin_budget: Rational,
    pub thin_residual: Rational,
    /// Number of thin times folded into the minimum.
    pub thin_used: usize,
    pub thin_total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionTrace {
    /// Selected index prefix `m*` (empty for the debut strategy).
    pub chosen_prefix: Vec<usize>,
    /// Projection outer measure of the envelope below each prefix of `m*`.
    pub envelope_measures: Vec<Rational>,
    /// Deficit of the debut of the whole target.
    pub oracle_deficit: Rational,
    pub split: Option<EpsilonSplit>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionResult {
    pub kind: SectionKind,
    pub strategy: Strategy,
    pub epsilon: Rational,
    pub time: RandomTime,
    /// `P*(π(target)) − P(time < ∞)`.
    pub deficit: Rational,
    pub trace: SectionTrace,
}

/// `π_Ω(S)`.
pub fn projection(set: &StochasticSet) -> AtomSet {
    set.projection()
}

fn projection_mass(x: &FilteredSpace, set: &StochasticSet) -> Rational {
    outer_measure(&set.projection(), x.terminal_sigma(), x.space())
}

fn finite_mass(x: &FilteredSpace, time: &RandomTime) -> Rational {
    x.space().prob(&time.finite_set())
}

fn check_epsilon(epsilon: &Rational) -> Result<()> {
    if epsilon.is_negative() {
        return Err(Error::NegativeEpsilon(epsilon.clone()));
    }
    Ok(())
}

fn require_kind(x: &FilteredSpace, set: &StochasticSet, kind: SetKind) -> Result<()> {
    if x.is_set_of_kind(set, kind) {
        Ok(())
    } else {
        Err(Error::NotOfKind(kind.name()))
    }
}

/// One closed interval `⟦start, end⟧`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPair {
    pub start: RandomTime,
    pub end: RandomTime,
}

/// A finite union of closed intervals with predictable starts and finite
/// stopping-time ends, together with the set it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalUnion {
    pairs: Vec<IntervalPair>,
    realized: StochasticSet,
}

impl IntervalUnion {
    pub fn new(x: &FilteredSpace, pairs: Vec<IntervalPair>) -> Result<Self> {
        let mut realized = x.empty_set();
        for pair in &pairs {
            if !x.is_predictable_time(&pair.start) {
                return Err(Error::NotPredictableTime);
            }
            if !x.is_stopping_time(&pair.end) {
                return Err(Error::NotStoppingTime);
            }
            if pair.end.ticks().contains(&Tick::Never) {
                return Err(Error::UnboundedInterval);
            }
            realized = realized.union(&interval(&pair.start, &pair.end, true, true)?);
        }
        Ok(IntervalUnion { pairs, realized })
    }

    pub fn pairs(&self) -> &[IntervalPair] {
        &self.pairs
    }

    pub fn realized(&self) -> &StochasticSet {
        &self.realized
    }

    /// Debut of the union: the minimum over pairs of `start` restricted to
    /// `{start ≤ end}`.
    pub fn debut(&self, x: &FilteredSpace) -> RandomTime {
        let starts: Vec<RandomTime> = self
            .pairs
            .iter()
            .map(|p| {
                let keep = crate::measure::atom_set(
                    x.atoms(),
                    (0..x.atoms()).filter(|&a| p.start.at(a) <= p.end.at(a)),
                );
                p.start.restrict(&keep)
            })
            .collect();
        combine_min(&starts).unwrap_or_else(|_| x.never())
    }
}

/// Writes a predictable set as `⋃ₖ ⟦(tₖ)_{Aₖ}, tₖ⟧` with `Aₖ` its `k`-th slice.
pub fn to_interval_representation(set: &StochasticSet, x: &FilteredSpace) -> Result<IntervalUnion> {
    require_kind(x, set, SetKind::Predictable)?;
    let mut pairs = Vec::new();
    for k in 0..x.times() {
        let slice = set.slice(k);
        if slice.is_clear() {
            continue;
        }
        let constant = x.constant_time(k)?;
        pairs.push(IntervalPair {
            start: constant.restrict(&slice),
            end: constant,
        });
    }
    IntervalUnion::new(x, pairs)
}

/// Labels `atom@k` for the cells of `atoms × grid`, in cell order.
pub fn cell_labels(x: &FilteredSpace) -> Vec<String> {
    let mut labels = Vec::with_capacity(x.atoms() * x.times());
    for atom in x.space().atoms() {
        for k in 0..x.times() {
            labels.push(format!("{atom}@{k}"));
        }
    }
    labels
}

/// The predictable sets of `x`, as a paving over the cells: every union of
/// the blocks `B × {tₖ}` with `B` a block of the σ-algebra predictable
/// slices at `k` must belong to.
pub fn predictable_paving(x: &FilteredSpace) -> Result<Paving> {
    let mut blocks = Vec::new();
    for k in 0..x.times() {
        for b in x.sigma_before(k).blocks() {
            let mut cells = x.empty_set();
            cells.set_slice(k, b);
            blocks.push(cells.bits().clone());
        }
    }
    Paving::generated_by(cell_labels(x), blocks)
}

/// A monotone depth-2 scheme of predictable sets producing `set`.
///
/// Level 1 index `n₁` keeps the first `n₁` nonempty slices. Level 2 index
/// `n₂` keeps the first `n₂` predictable blocks of the level-1 node, blocks
/// listed by time and then by smallest atom.
pub fn build_monotone_scheme(set: &StochasticSet, x: &FilteredSpace) -> Result<SouslinScheme> {
    require_kind(x, set, SetKind::Predictable)?;
    let paving = Arc::new(predictable_paving(x)?);
    if set.is_empty() {
        return SouslinScheme::from_fn(paving.clone(), 1, 1, |_| paving.empty());
    }
    let slices: Vec<usize> = (0..x.times()).filter(|&k| !set.slice(k).is_clear()).collect();
    let mut blocks: Vec<(usize, FixedBitSet)> = Vec::new();
    for (rank, &k) in slices.iter().enumerate() {
        let slice = set.slice(k);
        for b in x.sigma_before(k).blocks() {
            if b.is_subset(&slice) {
                let mut cells = x.empty_set();
                cells.set_slice(k, b);
                blocks.push((rank, cells.bits().clone()));
            }
        }
    }
    let branching = slices.len().max(blocks.len());
    let upto_slice = |n1: usize| -> usize {
        let last_rank = n1.min(slices.len());
        blocks.iter().take_while(|(rank, _)| *rank < last_rank).count()
    };
    let prefix_union = |count: usize| -> FixedBitSet {
        let mut acc = paving.empty();
        for (_, b) in blocks.iter().take(count) {
            acc.union_with(b);
        }
        acc
    };
    SouslinScheme::from_fn(paving.clone(), 2, branching, |idx| match idx {
        [n1] => prefix_union(upto_slice(*n1)),
        [n1, n2] => prefix_union((*n2).min(upto_slice(*n1))),
        _ => unreachable!("depth is 2"),
    })
}

/// Outcome of the greedy prefix walk over a scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeSelection {
    pub time: RandomTime,
    pub chosen_prefix: Vec<usize>,
    pub envelope_measures: Vec<Rational>,
    /// `⋂ₖ P_{m*₁..m*ₖ}`.
    pub branch: StochasticSet,
}

/// Runs the greedy selection on a monotone scheme whose nodes are
/// predictable sets of `x` (ground set = the cells of `x` in cell order).
pub fn select_from_scheme(
    scheme: &SouslinScheme,
    x: &FilteredSpace,
    epsilon: &Rational,
) -> Result<SchemeSelection> {
    check_epsilon(epsilon)?;
    let (atoms, times) = (x.atoms(), x.times());
    if scheme.paving().ground_len() != atoms * times {
        return Err(Error::GroundMismatch);
    }
    if !scheme.check_monotone().is_monotone() {
        return Err(Error::NotMonotone);
    }
    let as_set = |bits: FixedBitSet| StochasticSet::from_bits(atoms, times, bits);
    for (_, node) in scheme.nodes() {
        require_kind(x, &as_set(node.clone()), SetKind::Predictable)?;
    }
    let target = projection_mass(x, &as_set(scheme.eval()));
    let threshold = &target - epsilon;
    let mut prefix = Vec::with_capacity(scheme.depth());
    let mut measures = Vec::with_capacity(scheme.depth());
    for _ in 0..scheme.depth() {
        let mut picked = None;
        for m in 1..=scheme.branching() {
            prefix.push(m);
            let mass = projection_mass(x, &as_set(scheme.envelope(&prefix)));
            if mass >= threshold {
                picked = Some(mass);
                break;
            }
            prefix.pop();
        }
        // The envelope at the largest index equals the parent envelope, so
        // the loop above always settles.
        measures.push(picked.expect("envelope reaches the threshold at the branching bound"));
    }
    let branch = as_set(scheme.branch_intersection(&prefix));
    Ok(SchemeSelection {
        time: debut(&branch),
        chosen_prefix: prefix,
        envelope_measures: measures,
        branch,
    })
}

/// Predictable time with graph inside `set` and deficit at most `epsilon`.
pub fn predictable_section(
    set: &StochasticSet,
    x: &FilteredSpace,
    epsilon: &Rational,
    strategy: Strategy,
) -> Result<SectionResult> {
    check_epsilon(epsilon)?;
    require_kind(x, set, SetKind::Predictable)?;
    let target = projection_mass(x, set);
    let oracle = debut(set);
    let oracle_deficit = &target - finite_mass(x, &oracle);
    let (time, chosen_prefix, envelope_measures) = match strategy {
        Strategy::Debut => (oracle, Vec::new(), Vec::new()),
        Strategy::Souslin => {
            let scheme = build_monotone_scheme(set, x)?;
            let sel = select_from_scheme(&scheme, x, epsilon)?;
            (sel.time, sel.chosen_prefix, sel.envelope_measures)
        }
    };
    let deficit = &target - finite_mass(x, &time);
    Ok(SectionResult {
        kind: SectionKind::Predictable,
        strategy,
        epsilon: epsilon.clone(),
        time,
        deficit,
        trace: SectionTrace {
            chosen_prefix,
            envelope_measures,
            oracle_deficit,
            split: None,
        },
    })
}

/// Section of an arbitrary set under the constant filtration `F_t = 2^Ω`,
/// where every set is predictable. The result is exact: `{time < ∞}` is the
/// projection of `set`.
pub fn measurable_section(
    set: &StochasticSet,
    space: &SampleSpace,
    grid: &crate::time::TimeGrid,
    strategy: Strategy,
) -> Result<SectionResult> {
    let constant = FilteredSpace::constant(
        space.clone(),
        grid.clone(),
        SigmaAlgebra::discrete(space.len()),
    )?;
    let mut result = predictable_section(set, &constant, &Rational::zero(), strategy)?;
    // A zero-deficit selection can still miss null atoms of the projection;
    // the debut picks those up so that {time < ∞} is the projection itself.
    let mut missed = set.projection();
    missed.difference_with(&result.time.finite_set());
    if !missed.is_clear() {
        let patch = debut(set).restrict(&missed);
        result.time = combine_min(&[result.time, patch])?;
    }
    result.kind = SectionKind::Measurable;
    Ok(result)
}

/// Predictable part and thin remainder of an optional set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptionalDecomposition {
    /// Largest predictable subset of the optional set.
    pub predictable: StochasticSet,
    /// Stopping times whose graphs union to the remainder, one per nonempty
    /// remainder slice.
    pub thin: Vec<RandomTime>,
}

impl OptionalDecomposition {
    pub fn thin_set(&self, x: &FilteredSpace) -> StochasticSet {
        self.thin
            .iter()
            .fold(x.empty_set(), |acc, t| acc.union(&t.graph()))
    }
}

/// Splits an optional set into its largest predictable subset and a finite
/// union of stopping-time graphs.
pub fn decompose_optional(set: &StochasticSet, x: &FilteredSpace) -> Result<OptionalDecomposition> {
    require_kind(x, set, SetKind::Optional)?;
    let mut predictable = x.empty_set();
    let mut thin = Vec::new();
    for k in 0..x.times() {
        let slice = set.slice(k);
        if slice.is_clear() {
            continue;
        }
        let kernel = x.sigma_before(k).measurable_kernel(&slice);
        predictable.set_slice(k, &kernel);
        let mut rest = slice;
        rest.difference_with(&kernel);
        if !rest.is_clear() {
            thin.push(x.constant_time(k)?.restrict(&rest));
        }
    }
    Ok(OptionalDecomposition { predictable, thin })
}

/// Stopping time with graph inside an optional set and deficit at most
/// `epsilon`, assembled from a predictable section at `ε/2` and a prefix of
/// the thin remainder covering all but `ε/2` of its projection.
pub fn optional_section(
    set: &StochasticSet,
    x: &FilteredSpace,
    epsilon: &Rational,
    strategy: Strategy,
) -> Result<SectionResult> {
    check_epsilon(epsilon)?;
    require_kind(x, set, SetKind::Optional)?;
    let half = epsilon / Rational::from_integer(2.into());
    let parts = decompose_optional(set, x)?;

    let inner = predictable_section(&parts.predictable, x, &half, strategy)?;
    // Drop graph points in P \ O; the decomposition keeps P ⊆ O so this is
    // normally a no-op.
    let outside = parts.predictable.difference(set);
    let keep = crate::measure::atom_set(
        x.atoms(),
        (0..x.atoms()).filter(|&a| match inner.time.at(a) {
            Tick::At(k) => !outside.contains(a, k),
            Tick::Never => false,
        }),
    );
    let rho = inner.time.restrict(&keep);

    let thin_projection = parts.thin_set(x).projection();
    let thin_total = x.space().prob(&thin_projection);
    let mut reached = x.space().empty_set();
    let mut used = 0;
    while &thin_total - x.space().prob(&reached) > half && used < parts.thin.len() {
        reached.union_with(&parts.thin[used].finite_set());
        used += 1;
    }
    let thin_residual = &thin_total - x.space().prob(&reached);

    let mut candidates = vec![rho];
    candidates.extend(parts.thin[..used].iter().cloned());
    let time = combine_min(&candidates)?;

    let target = projection_mass(x, set);
    let deficit = &target - finite_mass(x, &time);
    let oracle_deficit = &target - finite_mass(x, &debut(set));
    Ok(SectionResult {
        kind: SectionKind::Optional,
        strategy,
        epsilon: epsilon.clone(),
        time,
        deficit,
        trace: SectionTrace {
            chosen_prefix: inner.trace.chosen_prefix,
            envelope_measures: inner.trace.envelope_measures,
            oracle_deficit,
            split: Some(EpsilonSplit {
                predictable_budget: half.clone(),
                predictable_deficit: inner.deficit,
                thin_budget: half,
                thin_residual,
                thin_used: used,
                thin_total: parts.thin.len(),
            }),
        },
    })
}

/// Section by an accessible time. Built exactly like [`optional_section`];
/// the returned time is checked to be accessible.
pub fn accessible_section(
    set: &StochasticSet,
    x: &FilteredSpace,
    epsilon: &Rational,
    strategy: Strategy,
) -> Result<SectionResult> {
    let mut result = optional_section(set, x, epsilon, strategy)?;
    if !x.classify_time(&result.time)?.is_accessible() {
        return Err(Error::NotOfKind("accessible"));
    }
    result.kind = SectionKind::Accessible;
    Ok(result)
}
