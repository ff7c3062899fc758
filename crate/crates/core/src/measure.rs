//! Finite probability spaces, partition σ-algebras and the outer measure.
//!
//! A finite σ-algebra is stored as the partition of its atoms: a set is
//! measurable exactly when it is a union of blocks. The outer measure of an
//! arbitrary set is the probability of its measurable cover, the union of
//! every block the set touches, which is the smallest measurable superset.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::Rational;

/// A subset of the atoms of a [`SampleSpace`], keyed by atom position.
pub type AtomSet = FixedBitSet;

/// Builds an [`AtomSet`] over `len` atoms from atom positions.
pub fn atom_set(len: usize, members: impl IntoIterator<Item = usize>) -> AtomSet {
    let mut set = FixedBitSet::with_capacity(len);
    for i in members {
        set.insert(i);
    }
    set
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSpace {
    atoms: Vec<String>,
    weights: Vec<Rational>,
    index: HashMap<String, usize>,
}

impl SampleSpace {
    pub fn new(atoms: Vec<String>, weights: Vec<Rational>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::EmptySpace);
        }
        if atoms.len() != weights.len() {
            return Err(Error::SizeMismatch {
                what: "weights",
                expected: atoms.len(),
                found: weights.len(),
            });
        }
        let mut index = HashMap::with_capacity(atoms.len());
        for (i, id) in atoms.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        for (id, w) in atoms.iter().zip(&weights) {
            if w.is_negative() {
                return Err(Error::NegativeWeight(id.clone()));
            }
        }
        let total: Rational = weights.iter().sum();
        if total != crate::rational::one() {
            return Err(Error::WeightsDoNotSumToOne(total));
        }
        Ok(SampleSpace {
            atoms,
            weights,
            index,
        })
    }

    /// `n` equally likely atoms named `w1..wn`.
    pub fn uniform(n: usize) -> Result<Self> {
        let atoms = (1..=n).map(|i| format!("w{i}")).collect();
        let weights = vec![crate::rational::from_ratio(1, n.max(1) as i64); n];
        SampleSpace::new(atoms, weights)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn atom_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn empty_set(&self) -> AtomSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> AtomSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// Probability of an arbitrary subset (the sum of its atom weights).
    pub fn prob(&self, set: &AtomSet) -> Rational {
        set.ones().map(|i| &self.weights[i]).sum()
    }
}

/// A finite σ-algebra given by the partition of its atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaAlgebra {
    blocks: Vec<AtomSet>,
    block_of: Vec<usize>,
}

impl SigmaAlgebra {
    /// Validates that `blocks` partition `0..len`; empty blocks are dropped
    /// and the rest ordered by their smallest atom.
    pub fn from_blocks(len: usize, blocks: Vec<AtomSet>) -> Result<Self> {
        let mut seen = FixedBitSet::with_capacity(len);
        let mut kept = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.len() > len && b.ones().any(|i| i >= len) {
                return Err(Error::NotAPartition(format!(
                    "block mentions an atom outside 0..{len}"
                )));
            }
            b.grow(len);
            if b.is_clear() {
                continue;
            }
            if !seen.is_disjoint(&b) {
                return Err(Error::NotAPartition("blocks overlap".into()));
            }
            seen.union_with(&b);
            kept.push(b);
        }
        if seen.count_ones(..) != len {
            return Err(Error::NotAPartition("blocks do not cover every atom".into()));
        }
        Ok(Self::canonical(len, kept))
    }

    fn canonical(len: usize, mut blocks: Vec<AtomSet>) -> Self {
        blocks.sort_by_key(|b| b.minimum());
        let mut block_of = vec![0; len];
        for (bi, b) in blocks.iter().enumerate() {
            for i in b.ones() {
                block_of[i] = bi;
            }
        }
        SigmaAlgebra { blocks, block_of }
    }

    /// `{∅, Ω}`.
    pub fn trivial(len: usize) -> Self {
        let mut all = FixedBitSet::with_capacity(len);
        all.insert_range(..);
        Self::canonical(len, if len == 0 { vec![] } else { vec![all] })
    }

    /// The power set.
    pub fn discrete(len: usize) -> Self {
        Self::canonical(len, (0..len).map(|i| atom_set(len, [i])).collect())
    }

    /// The σ-algebra generated by `family`: atoms are grouped by their
    /// membership pattern across the family members.
    pub fn generate(len: usize, family: &[AtomSet]) -> Self {
        let mut groups: HashMap<Vec<bool>, AtomSet> = HashMap::new();
        for atom in 0..len {
            let signature: Vec<bool> = family.iter().map(|s| s.contains(atom)).collect();
            groups
                .entry(signature)
                .or_insert_with(|| FixedBitSet::with_capacity(len))
                .insert(atom);
        }
        Self::canonical(len, groups.into_values().collect())
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn blocks(&self) -> &[AtomSet] {
        &self.blocks
    }

    pub fn block_of(&self, atom: usize) -> &AtomSet {
        &self.blocks[self.block_of[atom]]
    }

    pub fn is_measurable(&self, set: &AtomSet) -> bool {
        set.ones().all(|i| self.block_of(i).is_subset(set))
    }

    /// Union of all blocks meeting `set`.
    pub fn measurable_cover(&self, set: &AtomSet) -> AtomSet {
        let mut cover = FixedBitSet::with_capacity(self.len());
        for i in set.ones() {
            if !cover.contains(i) {
                cover.union_with(self.block_of(i));
            }
        }
        cover
    }

    /// Largest measurable subset of `set` (union of blocks inside it).
    pub fn measurable_kernel(&self, set: &AtomSet) -> AtomSet {
        let mut kernel = FixedBitSet::with_capacity(self.len());
        for b in &self.blocks {
            if b.is_subset(set) {
                kernel.union_with(b);
            }
        }
        kernel
    }

    /// True when every block of `self` lies inside a block of `coarser`,
    /// i.e. `coarser ⊆ self` as σ-algebras.
    pub fn refines(&self, coarser: &SigmaAlgebra) -> bool {
        self.len() == coarser.len()
            && self
                .blocks
                .iter()
                .all(|b| b.minimum().is_none_or(|i| b.is_subset(coarser.block_of(i))))
    }
}

/// `P*(A)`: probability of the measurable cover.
pub fn outer_measure(set: &AtomSet, sigma: &SigmaAlgebra, space: &SampleSpace) -> Rational {
    space.prob(&sigma.measurable_cover(set))
}

/// Inner counterpart of [`outer_measure`], used by the validator.
pub fn inner_measure(set: &AtomSet, sigma: &SigmaAlgebra, space: &SampleSpace) -> Rational {
    space.prob(&sigma.measurable_kernel(set))
}
