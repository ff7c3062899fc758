//! Discrete filtrations, random times and stochastic sets.
//!
//! Time is a finite grid `t₀ < … < t_{N-1}` plus infinity. A random time maps
//! each atom to a grid index or to [`Tick::Never`]; a stochastic set is a
//! subset of `atoms × grid`.
//!
//! Measurability conditions are the discrete ones:
//!
//! * stopping time: `{τ ≤ tₖ} ∈ F_{tₖ}` for every `k`;
//! * predictable time: `{τ = t₀} ∈ F_{t₀}` and `{τ ≤ tₖ} ∈ F_{tₖ₋₁}` for `k ≥ 1`;
//! * optional set: every slice `{ω : (ω, tₖ) ∈ S}` lies in `F_{tₖ}`;
//! * predictable set: slice `0` lies in `F_{t₀}`, slice `k ≥ 1` in `F_{tₖ₋₁}`.

use std::fmt;

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::measure::{atom_set, AtomSet, SampleSpace, SigmaAlgebra};
use crate::Rational;

/// A grid index or infinity. Orders every finite tick below `Never`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tick {
    At(usize),
    Never,
}

impl Tick {
    pub fn index(self) -> Option<usize> {
        match self {
            Tick::At(k) => Some(k),
            Tick::Never => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Tick::At(_))
    }
}

impl fmt::Display for Tick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tick::At(k) => write!(f, "{k}"),
            Tick::Never => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeGrid {
    labels: Vec<Rational>,
}

impl TimeGrid {
    pub fn new(labels: Vec<Rational>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGrid);
        }
        if let Some(i) = labels.iter().position(|t| t.is_negative()) {
            return Err(Error::NegativeTime(i));
        }
        if let Some(i) = (1..labels.len()).find(|&i| labels[i] <= labels[i - 1]) {
            return Err(Error::GridNotIncreasing(i));
        }
        Ok(TimeGrid { labels })
    }

    /// `0, 1, …, n-1`.
    pub fn integers(n: usize) -> Result<Self> {
        Self::new((0..n as i64).map(|k| crate::rational::from_ratio(k, 1)).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Rational] {
        &self.labels
    }
}

/// Which measurability condition a stochastic set is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetKind {
    Predictable,
    Optional,
}

impl SetKind {
    pub fn name(self) -> &'static str {
        match self {
            SetKind::Predictable => "predictable",
            SetKind::Optional => "optional",
        }
    }
}

/// A map from atoms to grid indices or infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RandomTime {
    ticks: Vec<Tick>,
    horizon: usize,
}

impl RandomTime {
    pub fn new(ticks: Vec<Tick>, horizon: usize) -> Result<Self> {
        for t in &ticks {
            if let Tick::At(k) = *t {
                if k >= horizon {
                    return Err(Error::TickOutOfRange {
                        index: k,
                        len: horizon,
                    });
                }
            }
        }
        Ok(RandomTime { ticks, horizon })
    }

    pub fn constant(atoms: usize, tick: Tick, horizon: usize) -> Result<Self> {
        Self::new(vec![tick; atoms], horizon)
    }

    /// `≡ ∞`.
    pub fn never(atoms: usize, horizon: usize) -> Self {
        RandomTime {
            ticks: vec![Tick::Never; atoms],
            horizon,
        }
    }

    pub fn ticks(&self) -> &[Tick] {
        &self.ticks
    }

    pub fn at(&self, atom: usize) -> Tick {
        self.ticks[atom]
    }

    pub fn atoms(&self) -> usize {
        self.ticks.len()
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// `{τ ≤ tₖ}`.
    pub fn at_most(&self, k: usize) -> AtomSet {
        self.level_set(|t| t <= Tick::At(k))
    }

    /// `{τ = tₖ}`.
    pub fn equal_to(&self, k: usize) -> AtomSet {
        self.level_set(|t| t == Tick::At(k))
    }

    /// `{τ < ∞}`.
    pub fn finite_set(&self) -> AtomSet {
        self.level_set(Tick::is_finite)
    }

    fn level_set(&self, keep: impl Fn(Tick) -> bool) -> AtomSet {
        atom_set(
            self.atoms(),
            self.ticks.iter().enumerate().filter(|(_, t)| keep(**t)).map(|(i, _)| i),
        )
    }

    /// `τ_A`: `τ` on `A`, infinity elsewhere.
    pub fn restrict(&self, set: &AtomSet) -> RandomTime {
        let ticks = self
            .ticks
            .iter()
            .enumerate()
            .map(|(i, &t)| if set.contains(i) { t } else { Tick::Never })
            .collect();
        RandomTime {
            ticks,
            horizon: self.horizon,
        }
    }

    /// Moves every finite value `steps` grid points later; values pushed past
    /// the last grid point become infinite.
    pub fn shift(&self, steps: usize) -> RandomTime {
        let ticks = self
            .ticks
            .iter()
            .map(|&t| match t {
                Tick::At(k) if k + steps < self.horizon => Tick::At(k + steps),
                _ => Tick::Never,
            })
            .collect();
        RandomTime {
            ticks,
            horizon: self.horizon,
        }
    }

    /// `{(ω, τ(ω)) : τ(ω) < ∞}`.
    pub fn graph(&self) -> StochasticSet {
        let mut set = StochasticSet::empty(self.atoms(), self.horizon);
        for (i, t) in self.ticks.iter().enumerate() {
            if let Tick::At(k) = *t {
                set.insert(i, k);
            }
        }
        set
    }
}

fn combine(times: &[RandomTime], pick: impl Fn(Tick, Tick) -> Tick) -> Result<RandomTime> {
    let (first, rest) = times.split_first().ok_or(Error::EmptyTimeList)?;
    let mut out = first.clone();
    for t in rest {
        if t.atoms() != out.atoms() || t.horizon != out.horizon {
            return Err(Error::SizeMismatch {
                what: "random time",
                expected: out.atoms(),
                found: t.atoms(),
            });
        }
        for (a, &b) in out.ticks.iter_mut().zip(&t.ticks) {
            *a = pick(*a, b);
        }
    }
    Ok(out)
}

/// Pointwise minimum.
pub fn combine_min(times: &[RandomTime]) -> Result<RandomTime> {
    combine(times, Tick::min)
}

/// Pointwise maximum, the supremum of a finite family.
pub fn combine_sup(times: &[RandomTime]) -> Result<RandomTime> {
    combine(times, Tick::max)
}

/// A subset of `atoms × grid`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StochasticSet {
    atoms: usize,
    times: usize,
    cells: FixedBitSet,
}

impl StochasticSet {
    pub fn empty(atoms: usize, times: usize) -> Self {
        StochasticSet {
            atoms,
            times,
            cells: FixedBitSet::with_capacity(atoms * times),
        }
    }

    pub fn full(atoms: usize, times: usize) -> Self {
        let mut s = Self::empty(atoms, times);
        s.cells.insert_range(..);
        s
    }

    pub fn from_cells(
        atoms: usize,
        times: usize,
        cells: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut s = Self::empty(atoms, times);
        for (a, k) in cells {
            if a >= atoms {
                return Err(Error::SizeMismatch {
                    what: "atom index",
                    expected: atoms,
                    found: a,
                });
            }
            if k >= times {
                return Err(Error::TickOutOfRange { index: k, len: times });
            }
            s.insert(a, k);
        }
        Ok(s)
    }

    /// Wraps a bitset over cells numbered `atom * times + k`.
    pub fn from_bits(atoms: usize, times: usize, mut cells: FixedBitSet) -> Self {
        cells.grow(atoms * times);
        StochasticSet {
            atoms,
            times,
            cells,
        }
    }

    pub fn atoms(&self) -> usize {
        self.atoms
    }

    pub fn times(&self) -> usize {
        self.times
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.cells
    }

    pub fn cell(&self, atom: usize, k: usize) -> usize {
        atom * self.times + k
    }

    pub fn insert(&mut self, atom: usize, k: usize) {
        let c = self.cell(atom, k);
        self.cells.insert(c);
    }

    pub fn contains(&self, atom: usize, k: usize) -> bool {
        self.cells.contains(self.cell(atom, k))
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_clear()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.ones().map(|c| (c / self.times, c % self.times))
    }

    /// `{ω : (ω, tₖ) ∈ S}`.
    pub fn slice(&self, k: usize) -> AtomSet {
        atom_set(self.atoms, (0..self.atoms).filter(|&a| self.contains(a, k)))
    }

    /// Cells `(ω, tₖ)` with `ω ∈ set`.
    pub fn set_slice(&mut self, k: usize, set: &AtomSet) {
        for a in set.ones() {
            self.insert(a, k);
        }
    }

    pub fn is_subset(&self, other: &StochasticSet) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub fn union(&self, other: &StochasticSet) -> StochasticSet {
        let mut out = self.clone();
        out.cells.union_with(&other.cells);
        out
    }

    pub fn intersection(&self, other: &StochasticSet) -> StochasticSet {
        let mut out = self.clone();
        out.cells.intersect_with(&other.cells);
        out
    }

    pub fn difference(&self, other: &StochasticSet) -> StochasticSet {
        let mut out = self.clone();
        out.cells.difference_with(&other.cells);
        out
    }

    /// `π_Ω(S)`: atoms with at least one cell in the set.
    pub fn projection(&self) -> AtomSet {
        atom_set(
            self.atoms,
            (0..self.atoms).filter(|&a| (0..self.times).any(|k| self.contains(a, k))),
        )
    }
}

/// `𝒟[S]`: the first grid index at which each atom enters the set.
pub fn debut(set: &StochasticSet) -> RandomTime {
    let ticks = (0..set.atoms())
        .map(|a| {
            (0..set.times())
                .find(|&k| set.contains(a, k))
                .map_or(Tick::Never, Tick::At)
        })
        .collect();
    RandomTime {
        ticks,
        horizon: set.times(),
    }
}

/// `⟦ρ, τ⟧` with optional open ends. Atoms where `ρ = ∞` contribute nothing;
/// `ρ ≤ τ` is not required.
pub fn interval(
    start: &RandomTime,
    end: &RandomTime,
    left_closed: bool,
    right_closed: bool,
) -> Result<StochasticSet> {
    if start.atoms() != end.atoms() || start.horizon != end.horizon {
        return Err(Error::SizeMismatch {
            what: "random time",
            expected: start.atoms(),
            found: end.atoms(),
        });
    }
    let mut set = StochasticSet::empty(start.atoms(), start.horizon);
    for a in 0..start.atoms() {
        let Tick::At(lo) = start.at(a) else { continue };
        let hi = end.at(a);
        for k in 0..start.horizon {
            let after = if left_closed { lo <= k } else { lo < k };
            let before = match hi {
                Tick::Never => true,
                Tick::At(h) if right_closed => k <= h,
                Tick::At(h) => k < h,
            };
            if after && before {
                set.insert(a, k);
            }
        }
    }
    Ok(set)
}

/// A finite sample space with a time grid and a refining sequence of
/// partitions, one per grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredSpace {
    space: SampleSpace,
    grid: TimeGrid,
    filtration: Vec<SigmaAlgebra>,
}

impl FilteredSpace {
    pub fn new(space: SampleSpace, grid: TimeGrid, filtration: Vec<SigmaAlgebra>) -> Result<Self> {
        if filtration.len() != grid.len() {
            return Err(Error::SizeMismatch {
                what: "filtration",
                expected: grid.len(),
                found: filtration.len(),
            });
        }
        for f in &filtration {
            if f.len() != space.len() {
                return Err(Error::SizeMismatch {
                    what: "filtration atoms",
                    expected: space.len(),
                    found: f.len(),
                });
            }
        }
        if let Some(k) = (1..filtration.len()).find(|&k| !filtration[k].refines(&filtration[k - 1])) {
            return Err(Error::FiltrationNotRefining(k));
        }
        Ok(FilteredSpace {
            space,
            grid,
            filtration,
        })
    }

    /// `F_t = F` for every grid point.
    pub fn constant(space: SampleSpace, grid: TimeGrid, sigma: SigmaAlgebra) -> Result<Self> {
        let filtration = vec![sigma; grid.len()];
        Self::new(space, grid, filtration)
    }

    pub fn space(&self) -> &SampleSpace {
        &self.space
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn filtration(&self) -> &[SigmaAlgebra] {
        &self.filtration
    }

    pub fn atoms(&self) -> usize {
        self.space.len()
    }

    pub fn times(&self) -> usize {
        self.grid.len()
    }

    /// `F_{tₖ}`.
    pub fn sigma_at(&self, k: usize) -> &SigmaAlgebra {
        &self.filtration[k]
    }

    /// σ-algebra a predictable slice at index `k` must belong to:
    /// `F_{t₀}` for `k = 0`, `F_{tₖ₋₁}` otherwise.
    pub fn sigma_before(&self, k: usize) -> &SigmaAlgebra {
        &self.filtration[k.saturating_sub(1)]
    }

    /// The terminal σ-algebra `F_{t_{N-1}}`, against which outer measures of
    /// projections are taken.
    pub fn terminal_sigma(&self) -> &SigmaAlgebra {
        self.filtration.last().expect("grid is nonempty")
    }

    pub fn never(&self) -> RandomTime {
        RandomTime::never(self.atoms(), self.times())
    }

    pub fn constant_time(&self, k: usize) -> Result<RandomTime> {
        RandomTime::constant(self.atoms(), Tick::At(k), self.times())
    }

    pub fn empty_set(&self) -> StochasticSet {
        StochasticSet::empty(self.atoms(), self.times())
    }

    fn fits_time(&self, time: &RandomTime) -> bool {
        time.atoms() == self.atoms() && time.horizon() == self.times()
    }

    fn fits_set(&self, set: &StochasticSet) -> bool {
        set.atoms() == self.atoms() && set.times() == self.times()
    }

    pub fn is_stopping_time(&self, time: &RandomTime) -> bool {
        self.fits_time(time)
            && (0..self.times()).all(|k| self.sigma_at(k).is_measurable(&time.at_most(k)))
    }

    pub fn is_predictable_time(&self, time: &RandomTime) -> bool {
        self.fits_time(time)
            && (0..self.times()).all(|k| self.sigma_before(k).is_measurable(&time.at_most(k)))
    }

    pub fn is_set_of_kind(&self, set: &StochasticSet, kind: SetKind) -> bool {
        self.fits_set(set)
            && (0..self.times()).all(|k| {
                let sigma = match kind {
                    SetKind::Optional => self.sigma_at(k),
                    SetKind::Predictable => self.sigma_before(k),
                };
                sigma.is_measurable(&set.slice(k))
            })
    }

    /// Splits a stopping time into an accessible part and a totally
    /// inaccessible part.
    ///
    /// The cover holds one predictable time per grid index `k` and block `B`
    /// of `F_{tₖ₋₁}` meeting `{τ = tₖ}`: the constant `tₖ` restricted to `B`.
    /// Atoms whose graph point is not hit by the cover go to the totally
    /// inaccessible part; on a finite grid that part is always empty.
    pub fn classify_time(&self, time: &RandomTime) -> Result<TimeClassification> {
        if !self.is_stopping_time(time) {
            return Err(Error::NotStoppingTime);
        }
        let mut cover = Vec::new();
        for k in 0..self.times() {
            let level = time.equal_to(k);
            if level.is_clear() {
                continue;
            }
            let constant = self.constant_time(k)?;
            for block in self.sigma_before(k).blocks() {
                if !block.is_disjoint(&level) {
                    cover.push(constant.restrict(block));
                }
            }
        }
        let covered = atom_set(
            self.atoms(),
            (0..self.atoms()).filter(|&a| {
                let t = time.at(a);
                t.is_finite() && cover.iter().any(|rho| rho.at(a) == t)
            }),
        );
        let mut uncovered = time.finite_set();
        uncovered.difference_with(&covered);
        let inaccessible = time.restrict(&uncovered);
        let inaccessible_mass = self.space.prob(&inaccessible.finite_set());
        Ok(TimeClassification {
            accessible_cover: cover,
            accessible: time.restrict(&covered),
            inaccessible,
            inaccessible_mass,
        })
    }

    /// `P(τ = ρ < ∞)`.
    pub fn meeting_mass(&self, tau: &RandomTime, rho: &RandomTime) -> Rational {
        let hits = atom_set(
            self.atoms(),
            (0..self.atoms()).filter(|&a| tau.at(a).is_finite() && tau.at(a) == rho.at(a)),
        );
        self.space.prob(&hits)
    }
}

/// Output of [`FilteredSpace::classify_time`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeClassification {
    /// Predictable times whose graphs cover the accessible part.
    pub accessible_cover: Vec<RandomTime>,
    pub accessible: RandomTime,
    pub inaccessible: RandomTime,
    /// `P(inaccessible < ∞)`.
    pub inaccessible_mass: Rational,
}

impl TimeClassification {
    pub fn is_accessible(&self) -> bool {
        self.inaccessible_mass.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two fair atoms, `F₀` trivial, `F₁` discrete, grid `0, 1`.
    fn fix_a() -> FilteredSpace {
        FilteredSpace::new(
            SampleSpace::uniform(2).unwrap(),
            TimeGrid::integers(2).unwrap(),
            vec![SigmaAlgebra::trivial(2), SigmaAlgebra::discrete(2)],
        )
        .unwrap()
    }

    fn time(ticks: &[Option<usize>], horizon: usize) -> RandomTime {
        RandomTime::new(
            ticks.iter().map(|t| t.map_or(Tick::Never, Tick::At)).collect(),
            horizon,
        )
        .unwrap()
    }

    #[test]
    fn grid_validation() {
        use crate::rational::from_ratio;
        assert_eq!(TimeGrid::new(vec![]), Err(Error::EmptyGrid));
        assert_eq!(
            TimeGrid::new(vec![from_ratio(0, 1), from_ratio(0, 1)]),
            Err(Error::GridNotIncreasing(1))
        );
        assert_eq!(TimeGrid::new(vec![from_ratio(-1, 2)]), Err(Error::NegativeTime(0)));
    }

    #[test]
    fn filtration_must_refine() {
        let err = FilteredSpace::new(
            SampleSpace::uniform(2).unwrap(),
            TimeGrid::integers(2).unwrap(),
            vec![SigmaAlgebra::discrete(2), SigmaAlgebra::trivial(2)],
        );
        assert_eq!(err, Err(Error::FiltrationNotRefining(1)));
    }

    #[test]
    fn stopping_time_examples() {
        let x = fix_a();
        assert!(x.is_stopping_time(&x.constant_time(0).unwrap()));
        assert!(x.is_stopping_time(&time(&[Some(1), None], 2)));
        assert!(!x.is_stopping_time(&time(&[Some(0), None], 2)));
    }

    #[test]
    fn predictable_time_examples() {
        let x = fix_a();
        assert!(x.is_predictable_time(&x.constant_time(0).unwrap()));
        assert!(x.is_predictable_time(&x.constant_time(1).unwrap()));
        assert!(!x.is_predictable_time(&time(&[Some(1), None], 2)));
    }

    #[test]
    fn debut_examples() {
        let x = fix_a();
        assert_eq!(debut(&x.empty_set()), x.never());
        let s = StochasticSet::from_cells(2, 2, [(0, 0), (1, 1)]).unwrap();
        assert_eq!(debut(&s), time(&[Some(0), Some(1)], 2));
        assert_eq!(debut(&StochasticSet::full(2, 2)), x.constant_time(0).unwrap());
    }

    #[test]
    fn graph_examples() {
        let x = fix_a();
        assert!(x.never().graph().is_empty());
        let g = x.constant_time(0).unwrap().graph();
        assert_eq!(g, StochasticSet::from_cells(2, 2, [(0, 0), (1, 0)]).unwrap());
    }

    #[test]
    fn interval_examples() {
        let x = fix_a();
        let last = x.constant_time(1).unwrap();
        assert!(interval(&x.never(), &last, true, true).unwrap().is_empty());
        assert_eq!(
            interval(&x.constant_time(0).unwrap(), &last, true, true).unwrap(),
            StochasticSet::full(2, 2)
        );
        assert!(interval(&last, &x.constant_time(0).unwrap(), true, true)
            .unwrap()
            .is_empty());
        let half_open = interval(&x.constant_time(0).unwrap(), &last, true, false).unwrap();
        assert_eq!(half_open, StochasticSet::from_cells(2, 2, [(0, 0), (1, 0)]).unwrap());
        let to_inf = interval(&x.constant_time(0).unwrap(), &x.never(), false, true).unwrap();
        assert_eq!(to_inf, StochasticSet::from_cells(2, 2, [(0, 1), (1, 1)]).unwrap());
    }

    #[test]
    fn restrict_examples() {
        let x = fix_a();
        let one = x.constant_time(1).unwrap();
        assert_eq!(one.restrict(&x.space().full_set()), one);
        assert_eq!(one.restrict(&x.space().empty_set()), x.never());
        let partial = one.restrict(&atom_set(2, [0]));
        assert!(x.is_stopping_time(&partial));
        assert!(!x.is_predictable_time(&partial));
    }

    #[test]
    fn combine_examples() {
        let x = fix_a();
        let t = time(&[Some(1), None], 2);
        assert_eq!(combine_min(&[t.clone(), t.clone()]).unwrap(), t);
        assert_eq!(combine_min(&[]), Err(Error::EmptyTimeList));
        assert_eq!(combine_sup(&[]), Err(Error::EmptyTimeList));
        let u = time(&[None, Some(0)], 2);
        assert_eq!(combine_min(&[t.clone(), u.clone()]).unwrap(), time(&[Some(1), Some(0)], 2));
        assert_eq!(combine_sup(&[t, u]).unwrap(), x.never());
    }

    #[test]
    fn shift_examples() {
        let x = fix_a();
        assert_eq!(x.never().shift(1), x.never());
        let t = time(&[Some(1), None], 2);
        let shifted = t.shift(1);
        assert_eq!(shifted, x.never());
        assert!(x.is_predictable_time(&shifted));
    }

    #[test]
    fn shift_on_three_point_grid_is_predictable() {
        let x = FilteredSpace::new(
            SampleSpace::uniform(2).unwrap(),
            TimeGrid::integers(3).unwrap(),
            vec![
                SigmaAlgebra::trivial(2),
                SigmaAlgebra::discrete(2),
                SigmaAlgebra::discrete(2),
            ],
        )
        .unwrap();
        // first time the discrete "coin" shows heads (atom 0 at t₁)
        let hitting = time(&[Some(1), None], 3);
        assert!(x.is_stopping_time(&hitting));
        assert!(!x.is_predictable_time(&hitting));
        let shifted = hitting.shift(1);
        assert_eq!(shifted, time(&[Some(2), None], 3));
        assert!(x.is_predictable_time(&shifted));
    }

    #[test]
    fn set_kind_examples() {
        let x = fix_a();
        assert!(x.is_set_of_kind(&x.empty_set(), SetKind::Optional));
        assert!(x.is_set_of_kind(&x.empty_set(), SetKind::Predictable));
        let s = StochasticSet::from_cells(2, 2, [(0, 1)]).unwrap();
        assert!(x.is_set_of_kind(&s, SetKind::Optional));
        assert!(!x.is_set_of_kind(&s, SetKind::Predictable));
    }

    #[test]
    fn classify_examples() {
        let x = fix_a();
        let c = x.classify_time(&x.never()).unwrap();
        assert!(c.accessible_cover.is_empty());
        assert_eq!(c.accessible, x.never());
        assert_eq!(c.inaccessible, x.never());

        let t = time(&[Some(1), None], 2);
        let c = x.classify_time(&t).unwrap();
        assert_eq!(c.accessible_cover, vec![x.constant_time(1).unwrap()]);
        assert_eq!(c.accessible, t);
        assert!(c.is_accessible());

        assert_eq!(
            x.classify_time(&time(&[Some(0), None], 2)),
            Err(Error::NotStoppingTime)
        );
    }

    #[test]
    fn projection_of_graph_is_finite_set() {
        let t = time(&[Some(1), None, Some(0)], 2);
        assert_eq!(t.graph().projection(), t.finite_set());
    }
}
