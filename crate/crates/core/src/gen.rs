//! Seeded generators and small exhaustive enumerations of finite models.
//!
//! Used by the examples, the test suites and `validate` probing. All
//! randomness flows through a caller-supplied [`Rng`], so a fixed seed
//! reproduces the same fixtures.

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::measure::{atom_set, AtomSet, SampleSpace, SigmaAlgebra};
use crate::rational::from_ratio;
use crate::souslin::{GroundSet, Paving, SouslinScheme};
use crate::time::{FilteredSpace, RandomTime, StochasticSet, Tick, TimeGrid};
use crate::Rational;

/// Space with `n` atoms and random positive integer weights, normalized.
/// With `allow_null`, roughly one atom in five gets weight zero.
pub fn space<R: Rng + ?Sized>(rng: &mut R, n: usize, allow_null: bool) -> SampleSpace {
    let mut raw: Vec<i64> = (0..n)
        .map(|_| {
            if allow_null && rng.gen_ratio(1, 5) {
                0
            } else {
                rng.gen_range(1..=6)
            }
        })
        .collect();
    if raw.iter().all(|&w| w == 0) {
        raw[0] = 1;
    }
    let total: i64 = raw.iter().sum();
    let atoms = (1..=n).map(|i| format!("w{i}")).collect();
    let weights = raw.into_iter().map(|w| from_ratio(w, total)).collect();
    SampleSpace::new(atoms, weights).expect("normalized weights")
}

/// Random partition of `0..n` into at most `max_blocks` blocks.
pub fn partition<R: Rng + ?Sized>(rng: &mut R, n: usize, max_blocks: usize) -> SigmaAlgebra {
    let blocks = max_blocks.clamp(1, n.max(1));
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..blocks)).collect();
    from_labels(n, &labels)
}

fn from_labels(n: usize, labels: &[usize]) -> SigmaAlgebra {
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks = vec![FixedBitSet::with_capacity(n); count];
    for (atom, &l) in labels.iter().enumerate() {
        blocks[l].insert(atom);
    }
    SigmaAlgebra::from_blocks(n, blocks).expect("labels partition the atoms")
}

/// Splits each block of `coarse` at random into at most `split` pieces.
pub fn refine<R: Rng + ?Sized>(rng: &mut R, coarse: &SigmaAlgebra, split: usize) -> SigmaAlgebra {
    let n = coarse.len();
    let mut labels = vec![0; n];
    let mut next = 0;
    for block in coarse.blocks() {
        let pieces = rng.gen_range(1..=split.max(1));
        let base = next;
        for atom in block.ones() {
            labels[atom] = base + rng.gen_range(0..pieces);
        }
        next += pieces;
    }
    // relabel densely so empty pieces vanish
    let mut seen = std::collections::HashMap::new();
    for l in labels.iter_mut() {
        let fresh = seen.len();
        *l = *seen.entry(*l).or_insert(fresh);
    }
    from_labels(n, &labels)
}

/// Filtered space with `atoms` atoms and `times` grid points on `0, 1, …`.
pub fn filtered_space<R: Rng + ?Sized>(
    rng: &mut R,
    atoms: usize,
    times: usize,
    allow_null: bool,
) -> FilteredSpace {
    let space = space(rng, atoms, allow_null);
    let mut filtration = Vec::with_capacity(times);
    let first = if rng.gen_bool(0.5) {
        SigmaAlgebra::trivial(atoms)
    } else {
        partition(rng, atoms, 2)
    };
    filtration.push(first);
    for _ in 1..times {
        let prev = filtration.last().expect("nonempty");
        filtration.push(refine(rng, prev, 3));
    }
    FilteredSpace::new(space, TimeGrid::integers(times).expect("times ≥ 1"), filtration)
        .expect("refining filtration")
}

/// Filtered space with between 1 and `max_atoms` atoms and 1 and `max_times`
/// grid points.
pub fn any_filtered_space<R: Rng + ?Sized>(
    rng: &mut R,
    max_atoms: usize,
    max_times: usize,
) -> FilteredSpace {
    let atoms = rng.gen_range(1..=max_atoms);
    let times = rng.gen_range(1..=max_times);
    let allow_null = rng.gen_ratio(1, 4);
    filtered_space(rng, atoms, times, allow_null)
}

fn random_union<R: Rng + ?Sized>(rng: &mut R, sigma: &SigmaAlgebra, density: f64) -> AtomSet {
    let mut set = FixedBitSet::with_capacity(sigma.len());
    for b in sigma.blocks() {
        if rng.gen_bool(density) {
            set.union_with(b);
        }
    }
    set
}

/// Random predictable set: slice `k` is a random union of blocks of the
/// σ-algebra at `k - 1` (at `0` for `k = 0`).
pub fn predictable_set<R: Rng + ?Sized>(rng: &mut R, x: &FilteredSpace) -> StochasticSet {
    let density = rng.gen_range(0.1..0.9);
    let mut set = x.empty_set();
    for k in 0..x.times() {
        set.set_slice(k, &random_union(rng, x.sigma_before(k), density));
    }
    set
}

/// Random optional set: slice `k` is a random union of blocks at `k`.
pub fn optional_set<R: Rng + ?Sized>(rng: &mut R, x: &FilteredSpace) -> StochasticSet {
    let density = rng.gen_range(0.1..0.9);
    let mut set = x.empty_set();
    for k in 0..x.times() {
        set.set_slice(k, &random_union(rng, x.sigma_at(k), density));
    }
    set
}

/// Arbitrary subset of `atoms × grid`.
pub fn any_set<R: Rng + ?Sized>(rng: &mut R, atoms: usize, times: usize) -> StochasticSet {
    let density = rng.gen_range(0.05..0.8);
    let mut set = StochasticSet::empty(atoms, times);
    for a in 0..atoms {
        for k in 0..times {
            if rng.gen_bool(density) {
                set.insert(a, k);
            }
        }
    }
    set
}

fn staged_time<R: Rng + ?Sized>(
    rng: &mut R,
    x: &FilteredSpace,
    sigma: impl Fn(usize) -> SigmaAlgebra,
) -> RandomTime {
    let density = rng.gen_range(0.1..0.7);
    let mut ticks = vec![Tick::Never; x.atoms()];
    for k in 0..x.times() {
        let stop = random_union(rng, &sigma(k), density);
        for a in stop.ones() {
            if ticks[a] == Tick::Never {
                ticks[a] = Tick::At(k);
            }
        }
    }
    RandomTime::new(ticks, x.times()).expect("ticks in range")
}

/// Random stopping time: at each `k` stop on a random `F_{tₖ}` set.
pub fn stopping_time<R: Rng + ?Sized>(rng: &mut R, x: &FilteredSpace) -> RandomTime {
    staged_time(rng, x, |k| x.sigma_at(k).clone())
}

/// Random predictable time: at each `k` stop on a random set from the
/// σ-algebra one step earlier.
pub fn predictable_time<R: Rng + ?Sized>(rng: &mut R, x: &FilteredSpace) -> RandomTime {
    staged_time(rng, x, |k| x.sigma_before(k).clone())
}

/// Scheme with node values drawn from `members` (or the ground set).
pub fn scheme<R: Rng + ?Sized>(
    rng: &mut R,
    paving: std::sync::Arc<Paving>,
    members: &[GroundSet],
    depth: usize,
    branching: usize,
) -> SouslinScheme {
    let full = paving.full();
    SouslinScheme::from_fn(paving, depth, branching, |_| {
        if members.is_empty() || rng.gen_ratio(1, 6) {
            full.clone()
        } else {
            members.choose(rng).expect("nonempty").clone()
        }
    })
    .expect("members come from the paving")
}

/// Every subset of `0..n`, as bitsets, in binary counting order.
pub fn all_subsets(n: usize) -> Vec<AtomSet> {
    (0u64..(1u64 << n))
        .map(|mask| atom_set(n, (0..n).filter(|i| mask >> i & 1 == 1)))
        .collect()
}

/// Every partition of `0..n` (restricted growth strings).
pub fn all_partitions(n: usize) -> Vec<SigmaAlgebra> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn fill(pos: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<SigmaAlgebra>) {
        if pos == labels.len() {
            out.push(from_labels(labels.len(), labels));
            return;
        }
        for l in 0..=max + 1 {
            labels[pos] = l;
            fill(pos + 1, max.max(l), labels, out);
        }
    }
    if n == 0 {
        return vec![SigmaAlgebra::trivial(0)];
    }
    // first atom always carries label 0
    labels[0] = 0;
    fill(1, 0, &mut labels, &mut out);
    out
}

/// Every refining chain of `times` partitions of `0..atoms`.
pub fn all_filtrations(atoms: usize, times: usize) -> Vec<Vec<SigmaAlgebra>> {
    let partitions = all_partitions(atoms);
    let mut chains: Vec<Vec<SigmaAlgebra>> = partitions.iter().map(|p| vec![p.clone()]).collect();
    for _ in 1..times {
        let mut next = Vec::new();
        for chain in &chains {
            let last = chain.last().expect("nonempty chain");
            for p in &partitions {
                if p.refines(last) {
                    let mut c = chain.clone();
                    c.push(p.clone());
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    chains
}

/// Every filtered space on `atoms` atoms and `times` grid points, with the
/// given weights.
pub fn all_filtered_spaces(weights: &[Rational], times: usize) -> Vec<FilteredSpace> {
    let atoms = weights.len();
    let names = (1..=atoms).map(|i| format!("w{i}")).collect();
    let space = SampleSpace::new(names, weights.to_vec()).expect("weights sum to 1");
    let grid = TimeGrid::integers(times).expect("times ≥ 1");
    all_filtrations(atoms, times)
        .into_iter()
        .map(|f| FilteredSpace::new(space.clone(), grid.clone(), f).expect("refining chain"))
        .collect()
}

/// Every subset of `atoms × grid`.
pub fn all_sets(atoms: usize, times: usize) -> Vec<StochasticSet> {
    let cells = atoms * times;
    (0u64..(1u64 << cells))
        .map(|mask| {
            let bits = atom_set(cells, (0..cells).filter(|i| mask >> i & 1 == 1));
            StochasticSet::from_bits(atoms, times, bits)
        })
        .collect()
}

/// Every random time on `atoms` atoms over a grid of `times` points.
pub fn all_times(atoms: usize, times: usize) -> Vec<RandomTime> {
    let choices = times + 1;
    let total = choices.pow(atoms as u32);
    (0..total)
        .map(|mut code| {
            let ticks = (0..atoms)
                .map(|_| {
                    let c = code % choices;
                    code /= choices;
                    if c == times {
                        Tick::Never
                    } else {
                        Tick::At(c)
                    }
                })
                .collect();
            RandomTime::new(ticks, times).expect("ticks in range")
        })
        .collect()
}
