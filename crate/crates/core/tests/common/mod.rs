//! Brute-force oracles shared by the integration suites.
//!
//! Nothing here calls the evaluation, cover, predicate or section code under
//! test; each oracle recomputes its answer by direct enumeration.

#![allow(dead_code)]

use fixedbitset::FixedBitSet;
use sectionkit::measure::{SampleSpace, SigmaAlgebra};
use sectionkit::souslin::SouslinScheme;
use sectionkit::time::{FilteredSpace, RandomTime, StochasticSet, Tick};
use sectionkit::Rational;

pub fn bits(len: usize, xs: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(len);
    for x in xs {
        s.insert(x);
    }
    s
}

/// `θ⁻¹(n)` by scanning the square of side `⌈√n⌉ + 1`.
pub fn theta_inv_by_search(n: u64) -> (u64, u64) {
    let side = (n as f64).sqrt().ceil() as u64 + 1;
    for k in 1..=side {
        for m in 1..=side {
            let v = if k <= m {
                (m - 1) * (m - 1) + m - 1 + k
            } else {
                (k - 1) * (k - 1) + m
            };
            if v == n {
                return (k, m);
            }
        }
    }
    panic!("no preimage for {n}");
}

/// Souslin operation by the double loop: every sequence in `{1..B}^K`,
/// intersecting the node of each prefix.
pub fn eval_by_enumeration(s: &SouslinScheme) -> FixedBitSet {
    let (k, b) = (s.depth(), s.branching());
    let len = s.paving().ground_len();
    let mut out = FixedBitSet::with_capacity(len);
    let mut seq = vec![1usize; k];
    loop {
        let mut meet = bits(len, 0..len);
        for depth in 1..=k {
            meet.intersect_with(s.node(&seq[..depth]));
        }
        out.union_with(&meet);
        // odometer
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if seq[pos] < b {
                seq[pos] += 1;
                for later in seq.iter_mut().skip(pos + 1) {
                    *later = 1;
                }
                break;
            }
        }
    }
}

/// Envelope `M_{m₁..m_j}` by enumeration.
pub fn envelope_by_enumeration(s: &SouslinScheme, prefix: &[usize]) -> FixedBitSet {
    let (k, b) = (s.depth(), s.branching());
    let len = s.paving().ground_len();
    let limit = |i: usize| prefix.get(i).map_or(b, |&m| m.min(b));
    let mut out = FixedBitSet::with_capacity(len);
    let mut seq = vec![1usize; k];
    loop {
        let mut meet = bits(len, 0..len);
        for depth in 1..=k {
            meet.intersect_with(s.node(&seq[..depth]));
        }
        out.union_with(&meet);
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if seq[pos] < limit(pos) {
                seq[pos] += 1;
                for later in seq.iter_mut().skip(pos + 1) {
                    *later = 1;
                }
                break;
            }
        }
    }
}

/// Full monotonicity check by comparing every pair of comparable indices.
pub fn monotone_by_enumeration(s: &SouslinScheme) -> (bool, bool) {
    let (k, b) = (s.depth(), s.branching());
    let mut all: Vec<Vec<usize>> = Vec::new();
    for len in 1..=k {
        let total = b.pow(len as u32);
        for mut code in 0..total {
            let mut idx = vec![0; len];
            for slot in idx.iter_mut().rev() {
                *slot = code % b + 1;
                code /= b;
            }
            all.push(idx);
        }
    }
    let mut vertical = true;
    let mut horizontal = true;
    for n in &all {
        if n.len() > 1 && !s.node(n).is_subset(s.node(&n[..n.len() - 1])) {
            vertical = false;
        }
        for m in &all {
            if m.len() == n.len()
                && n.iter().zip(m).all(|(a, c)| a <= c)
                && !s.node(n).is_subset(s.node(m))
            {
                horizontal = false;
            }
        }
    }
    (vertical, horizontal)
}

/// Every union of blocks, listed by enumerating block masks.
pub fn measurable_sets(sigma: &SigmaAlgebra) -> Vec<FixedBitSet> {
    let blocks = sigma.blocks();
    (0u64..(1u64 << blocks.len()))
        .map(|mask| {
            let mut s = FixedBitSet::with_capacity(sigma.len());
            for (i, b) in blocks.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    s.union_with(b);
                }
            }
            s
        })
        .collect()
}

pub fn measurable_by_enumeration(set: &FixedBitSet, sigma: &SigmaAlgebra) -> bool {
    let mut set = set.clone();
    set.grow(sigma.len());
    measurable_sets(sigma).contains(&set)
}

pub fn prob(space: &SampleSpace, set: &FixedBitSet) -> Rational {
    space
        .weights()
        .iter()
        .enumerate()
        .filter(|(i, _)| set.contains(*i))
        .map(|(_, w)| w.clone())
        .sum()
}

/// `min { P(E) : A ⊆ E, E measurable }`.
pub fn outer_by_enumeration(set: &FixedBitSet, sigma: &SigmaAlgebra, space: &SampleSpace) -> Rational {
    measurable_sets(sigma)
        .into_iter()
        .filter(|e| set.is_subset(e))
        .map(|e| prob(space, &e))
        .min()
        .expect("Ω is a measurable superset")
}

fn level(time: &RandomTime, k: usize) -> FixedBitSet {
    bits(
        time.atoms(),
        (0..time.atoms()).filter(|&a| matches!(time.at(a), Tick::At(j) if j <= k)),
    )
}

pub fn stopping_by_enumeration(x: &FilteredSpace, time: &RandomTime) -> bool {
    (0..x.times()).all(|k| measurable_by_enumeration(&level(time, k), &x.filtration()[k]))
}

pub fn predictable_time_by_enumeration(x: &FilteredSpace, time: &RandomTime) -> bool {
    (0..x.times()).all(|k| {
        let sigma = &x.filtration()[k.saturating_sub(1)];
        measurable_by_enumeration(&level(time, k), sigma)
    })
}

fn slice(set: &StochasticSet, k: usize) -> FixedBitSet {
    bits(set.atoms(), (0..set.atoms()).filter(|&a| set.contains(a, k)))
}

pub fn optional_by_enumeration(x: &FilteredSpace, set: &StochasticSet) -> bool {
    (0..x.times()).all(|k| measurable_by_enumeration(&slice(set, k), &x.filtration()[k]))
}

pub fn predictable_set_by_enumeration(x: &FilteredSpace, set: &StochasticSet) -> bool {
    (0..x.times()).all(|k| {
        measurable_by_enumeration(&slice(set, k), &x.filtration()[k.saturating_sub(1)])
    })
}

pub fn projection_by_enumeration(set: &StochasticSet) -> FixedBitSet {
    bits(
        set.atoms(),
        (0..set.atoms()).filter(|&a| (0..set.times()).any(|k| set.contains(a, k))),
    )
}

pub fn graph_within(time: &RandomTime, set: &StochasticSet) -> bool {
    (0..time.atoms()).all(|a| match time.at(a) {
        Tick::At(k) => set.contains(a, k),
        Tick::Never => true,
    })
}

pub fn finite_mass(space: &SampleSpace, time: &RandomTime) -> Rational {
    prob(
        space,
        &bits(time.atoms(), (0..time.atoms()).filter(|&a| time.at(a) != Tick::Never)),
    )
}

/// Deficit of a candidate section against the projection's outer measure,
/// taken with respect to the terminal σ-algebra.
pub fn deficit(x: &FilteredSpace, set: &StochasticSet, time: &RandomTime) -> Rational {
    let sigma = x.filtration().last().unwrap();
    outer_by_enumeration(&projection_by_enumeration(set), sigma, x.space()) - finite_mass(x.space(), time)
}

/// All predictable times on a small fixture, by filtering every map.
pub fn all_predictable_times(x: &FilteredSpace) -> Vec<RandomTime> {
    sectionkit::gen::all_times(x.atoms(), x.times())
        .into_iter()
        .filter(|t| predictable_time_by_enumeration(x, t))
        .collect()
}

/// Measurability for larger spaces: every block lies inside or outside.
pub fn measurable_by_blocks(set: &FixedBitSet, sigma: &SigmaAlgebra) -> bool {
    sigma
        .blocks()
        .iter()
        .all(|b| b.is_subset(set) || b.is_disjoint(set))
}

/// Outer measure for larger spaces: mass of the blocks meeting `set`.
pub fn outer_by_blocks(set: &FixedBitSet, sigma: &SigmaAlgebra, space: &SampleSpace) -> Rational {
    sigma
        .blocks()
        .iter()
        .filter(|b| !b.is_disjoint(set))
        .map(|b| prob(space, b))
        .sum()
}

pub fn stopping_by_blocks(x: &FilteredSpace, time: &RandomTime) -> bool {
    (0..x.times()).all(|k| measurable_by_blocks(&level(time, k), &x.filtration()[k]))
}

pub fn predictable_time_by_blocks(x: &FilteredSpace, time: &RandomTime) -> bool {
    (0..x.times())
        .all(|k| measurable_by_blocks(&level(time, k), &x.filtration()[k.saturating_sub(1)]))
}

pub fn deficit_by_blocks(x: &FilteredSpace, set: &StochasticSet, time: &RandomTime) -> Rational {
    let sigma = x.filtration().last().unwrap();
    outer_by_blocks(&projection_by_enumeration(set), sigma, x.space()) - finite_mass(x.space(), time)
}

/// Weight vectors for the exhaustive regimes: uniform, plus one with a null
/// atom when there are at least two atoms.
pub fn small_weights(atoms: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::new(1.into(), (atoms as i64).into()); atoms]];
    if atoms >= 2 {
        let mut w = vec![Rational::new(1.into(), ((atoms - 1) as i64).into()); atoms - 1];
        w.push(Rational::from_integer(0.into()));
        out.push(w);
    }
    out
}

/// Every filtered space with at most 3 atoms and 3 grid points.
pub fn exhaustive_spaces() -> Vec<FilteredSpace> {
    let mut out = Vec::new();
    for atoms in 1..=3 {
        for times in 1..=3 {
            for w in small_weights(atoms) {
                out.extend(sectionkit::gen::all_filtered_spaces(&w, times));
            }
        }
    }
    out
}
