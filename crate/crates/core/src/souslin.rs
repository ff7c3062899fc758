//! Souslin schemes over finite pavings.
//!
//! A scheme assigns a set to every finite tuple of positive integers. The
//! schemes here are finitely generated: a scheme with depth `K` and
//! branching `B` stores one set per tuple of length at most `K` with entries
//! at most `B`. Any other tuple is read through [`SouslinScheme::node`],
//! which clamps entries to `B` and truncates the tuple to length `K`. Under
//! that reading the Souslin operation over all infinite index sequences
//! collapses to a union over `{1..B}^K`, so it can be evaluated exactly.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Subset of a paving's ground set, keyed by element position.
pub type GroundSet = FixedBitSet;

/// Upper bound on the number of stored nodes in a single scheme.
pub const NODE_BUDGET: usize = 1 << 22;

/// The pairing `ℕ × ℕ → ℕ` used to interleave countably many schemes.
///
/// Shell `r` covers `(r-1)²+1 ..= r²`: first `(r, 1..r-1)`, then `(1..=r, r)`.
pub fn theta(k: u64, m: u64) -> u64 {
    assert!(k >= 1 && m >= 1, "theta is defined on positive integers");
    if k <= m {
        (m - 1) * (m - 1) + m - 1 + k
    } else {
        (k - 1) * (k - 1) + m
    }
}

/// Inverse of [`theta`].
pub fn theta_inv(n: u64) -> (u64, u64) {
    assert!(n >= 1, "theta_inv is defined on positive integers");
    let mut r = n.isqrt();
    if r * r < n {
        r += 1;
    }
    let offset = n - (r - 1) * (r - 1);
    if offset < r {
        (r, offset)
    } else {
        (offset - (r - 1), r)
    }
}

/// A nonempty tuple of positive integers, written `2.1.3`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchemeIndex(Vec<usize>);

impl SchemeIndex {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() || entries.contains(&0) {
            let text = entries.iter().map(|e| e.to_string()).collect::<Vec<_>>();
            return Err(Error::InvalidSchemeIndex(text.join(".")));
        }
        Ok(SchemeIndex(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for SchemeIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split('.')
            .map(|part| part.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidSchemeIndex(s.to_string()))?;
        SchemeIndex::new(entries).map_err(|_| Error::InvalidSchemeIndex(s.to_string()))
    }
}

impl fmt::Display for SchemeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Members {
    Explicit(BTreeSet<GroundSet>),
    /// Every union of the given disjoint blocks (a finite σ-algebra).
    Unions(Vec<GroundSet>),
}

/// The value domain of a scheme: a nonempty family of subsets of a ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paving {
    ground: Vec<String>,
    members: Members,
}

impl Paving {
    pub fn explicit(ground: Vec<String>, members: Vec<GroundSet>) -> Result<Self> {
        check_ground(&ground)?;
        if members.is_empty() {
            return Err(Error::NodeNotInPaving("paving has no members".into()));
        }
        let len = ground.len();
        let members = members
            .into_iter()
            .map(|m| fit(m, len))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Paving {
            ground,
            members: Members::Explicit(members),
        })
    }

    /// All unions of `blocks`, which must partition the ground set.
    pub fn generated_by(ground: Vec<String>, blocks: Vec<GroundSet>) -> Result<Self> {
        check_ground(&ground)?;
        let len = ground.len();
        let mut seen = FixedBitSet::with_capacity(len);
        let mut kept = Vec::new();
        for b in blocks {
            let b = fit(b, len)?;
            if b.is_clear() {
                continue;
            }
            if !seen.is_disjoint(&b) {
                return Err(Error::NotAPartition("paving blocks overlap".into()));
            }
            seen.union_with(&b);
            kept.push(b);
        }
        if seen.count_ones(..) != len {
            return Err(Error::NotAPartition("paving blocks do not cover the ground set".into()));
        }
        Ok(Paving {
            ground,
            members: Members::Unions(kept),
        })
    }

    /// The full power set of `ground`.
    pub fn power_set(ground: Vec<String>) -> Result<Self> {
        let len = ground.len();
        let blocks = (0..len)
            .map(|i| {
                let mut b = FixedBitSet::with_capacity(len);
                b.insert(i);
                b
            })
            .collect();
        Self::generated_by(ground, blocks)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_len(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> GroundSet {
        let mut all = FixedBitSet::with_capacity(self.ground_len());
        all.insert_range(..);
        all
    }

    pub fn empty(&self) -> GroundSet {
        FixedBitSet::with_capacity(self.ground_len())
    }

    pub fn contains(&self, set: &GroundSet) -> bool {
        if set.len() != self.ground_len() {
            return false;
        }
        match &self.members {
            Members::Explicit(members) => members.contains(set),
            Members::Unions(blocks) => blocks
                .iter()
                .all(|b| b.is_subset(set) || b.is_disjoint(set)),
        }
    }

    /// Allowed node values: members plus the ground set itself.
    pub fn admits(&self, set: &GroundSet) -> bool {
        self.contains(set) || (set.len() == self.ground_len() && set.is_full())
    }

    /// Explicit members, when the paving is given by enumeration.
    pub fn explicit_members(&self) -> Option<impl Iterator<Item = &GroundSet>> {
        match &self.members {
            Members::Explicit(m) => Some(m.iter()),
            Members::Unions(_) => None,
        }
    }

    /// Closure under finite unions and intersections. Explicit pavings are
    /// checked pair by pair; block-generated ones are closed by construction.
    pub fn is_closed(&self) -> bool {
        match &self.members {
            Members::Unions(_) => true,
            Members::Explicit(members) => {
                let list: Vec<&GroundSet> = members.iter().collect();
                for (i, a) in list.iter().enumerate() {
                    for b in &list[i + 1..] {
                        let mut u = (*a).clone();
                        u.union_with(b);
                        let mut x = (*a).clone();
                        x.intersect_with(b);
                        if !members.contains(&u) || !members.contains(&x) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    pub fn format_set(&self, set: &GroundSet) -> Vec<String> {
        set.ones().map(|i| self.ground[i].clone()).collect()
    }
}

fn check_ground(ground: &[String]) -> Result<()> {
    if ground.is_empty() {
        return Err(Error::EmptySpace);
    }
    let mut seen = BTreeSet::new();
    for id in ground {
        if !seen.insert(id) {
            return Err(Error::DuplicateId(id.clone()));
        }
    }
    Ok(())
}

fn fit(mut set: GroundSet, len: usize) -> Result<GroundSet> {
    if set.ones().any(|i| i >= len) {
        return Err(Error::MemberOutsideGround);
    }
    set.grow(len);
    if set.len() > len {
        let mut trimmed = FixedBitSet::with_capacity(len);
        trimmed.extend(set.ones());
        set = trimmed;
    }
    Ok(set)
}

/// Result of [`SouslinScheme::check_monotone`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monotonicity {
    pub vertical: bool,
    pub horizontal: bool,
}

impl Monotonicity {
    pub fn is_monotone(self) -> bool {
        self.vertical && self.horizontal
    }
}

/// A finitely generated Souslin scheme.
///
/// Level `l` (tuples of length `l + 1`) is stored densely in mixed radix
/// `B`, first coordinate most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SouslinScheme {
    paving: Arc<Paving>,
    depth: usize,
    branching: usize,
    levels: Vec<Vec<GroundSet>>,
}

fn node_count(depth: usize, branching: usize) -> Option<usize> {
    let mut total = 0usize;
    let mut width = 1usize;
    for _ in 0..depth {
        width = width.checked_mul(branching)?;
        total = total.checked_add(width)?;
    }
    Some(total)
}

impl SouslinScheme {
    /// Materializes every node in bounds from `value`, checking each against
    /// the paving.
    pub fn from_fn(
        paving: Arc<Paving>,
        depth: usize,
        branching: usize,
        mut value: impl FnMut(&[usize]) -> GroundSet,
    ) -> Result<Self> {
        if depth == 0 || branching == 0 {
            return Err(Error::ZeroBound);
        }
        match node_count(depth, branching) {
            Some(n) if n <= NODE_BUDGET => {}
            _ => return Err(Error::SchemeTooLarge { depth, branching }),
        }
        let mut levels = Vec::with_capacity(depth);
        let mut index = Vec::with_capacity(depth);
        for level in 0..depth {
            let width = branching.pow(level as u32 + 1);
            let mut nodes = Vec::with_capacity(width);
            for offset in 0..width {
                decode(offset, level + 1, branching, &mut index);
                let set = value(&index);
                if !paving.admits(&set) {
                    let label = SchemeIndex(index.clone()).to_string();
                    return Err(Error::NodeNotInPaving(label));
                }
                nodes.push(set);
            }
            levels.push(nodes);
        }
        Ok(SouslinScheme {
            paving,
            depth,
            branching,
            levels,
        })
    }

    /// Builds a scheme from explicitly listed nodes; every in-bounds index
    /// that is not listed takes the ground set as its value.
    pub fn from_nodes(
        paving: Arc<Paving>,
        depth: usize,
        branching: usize,
        nodes: impl IntoIterator<Item = (SchemeIndex, GroundSet)>,
    ) -> Result<Self> {
        let mut listed = std::collections::HashMap::new();
        for (index, set) in nodes {
            if index.len() > depth || index.entries().iter().any(|&e| e > branching) {
                return Err(Error::InvalidSchemeIndex(index.to_string()));
            }
            let set = fit(set, paving.ground_len())?;
            listed.insert(index.0, set);
        }
        let full = paving.full();
        Self::from_fn(paving, depth, branching, |idx| {
            listed.get(idx).cloned().unwrap_or_else(|| full.clone())
        })
    }

    pub fn paving(&self) -> &Arc<Paving> {
        &self.paving
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn branching(&self) -> usize {
        self.branching
    }

    /// Node value for an arbitrary nonempty tuple of positive integers,
    /// clamping entries to the branching bound and truncating to the depth.
    pub fn node(&self, index: &[usize]) -> &GroundSet {
        assert!(!index.is_empty(), "scheme indices are nonempty");
        let len = index.len().min(self.depth);
        let mut offset = 0;
        for &entry in &index[..len] {
            assert!(entry >= 1, "scheme index entries are positive");
            offset = offset * self.branching + (entry.min(self.branching) - 1);
        }
        &self.levels[len - 1][offset]
    }

    /// Stored nodes in index order.
    pub fn nodes(&self) -> impl Iterator<Item = (SchemeIndex, &GroundSet)> + '_ {
        self.levels.iter().enumerate().flat_map(move |(level, nodes)| {
            nodes.iter().enumerate().map(move |(offset, set)| {
                let mut index = Vec::new();
                decode(offset, level + 1, self.branching, &mut index);
                (SchemeIndex(index), set)
            })
        })
    }

    /// The Souslin operation.
    pub fn eval(&self) -> GroundSet {
        let limits = vec![self.branching; self.depth];
        self.union_below(&limits)
    }

    /// `M_{m₁..m_j}`: the union over all index sequences with `nᵢ ≤ mᵢ` for
    /// `i ≤ j` of the intersection along the sequence.
    pub fn envelope(&self, prefix: &[usize]) -> GroundSet {
        let limits: Vec<usize> = (0..self.depth)
            .map(|i| match prefix.get(i) {
                Some(&m) => m.clamp(1, self.branching),
                None => self.branching,
            })
            .collect();
        self.union_below(&limits)
    }

    /// `⋂ₖ node(m₁..mₖ)` along one index sequence.
    pub fn branch_intersection(&self, sequence: &[usize]) -> GroundSet {
        let mut acc = self.paving.full();
        for k in 1..=self.depth {
            let prefix: Vec<usize> = (0..k).map(|i| sequence.get(i).copied().unwrap_or(1)).collect();
            acc.intersect_with(self.node(&prefix));
        }
        acc
    }

    fn union_below(&self, limits: &[usize]) -> GroundSet {
        let mut acc = self.paving.empty();
        let top = self.paving.full();
        self.walk(0, 0, &top, limits, &mut acc);
        acc
    }

    fn walk(
        &self,
        level: usize,
        offset: usize,
        current: &GroundSet,
        limits: &[usize],
        acc: &mut GroundSet,
    ) {
        if current.is_subset(acc) {
            return;
        }
        if level == self.depth {
            acc.union_with(current);
            return;
        }
        for j in (0..limits[level]).rev() {
            let child = offset * self.branching + j;
            let mut next = current.clone();
            next.intersect_with(&self.levels[level][child]);
            self.walk(level + 1, child, &next, limits, acc);
        }
    }

    /// Re-materializes the scheme with new bounds under the truncation reading.
    pub fn with_bounds(&self, depth: usize, branching: usize) -> Result<Self> {
        Self::from_fn(self.paving.clone(), depth, branching, |idx| self.node(idx).clone())
    }

    pub fn check_monotone(&self) -> Monotonicity {
        let b = self.branching;
        let mut vertical = true;
        for level in 1..self.depth {
            let parents = &self.levels[level - 1];
            let children = &self.levels[level];
            vertical &= children
                .iter()
                .enumerate()
                .all(|(offset, child)| child.is_subset(&parents[offset / b]));
            if !vertical {
                break;
            }
        }
        let mut horizontal = true;
        'levels: for (level, nodes) in self.levels.iter().enumerate() {
            let len = level + 1;
            for (offset, node) in nodes.iter().enumerate() {
                let mut stride = 1;
                for _ in 0..len {
                    let digit = (offset / stride) % b;
                    if digit + 1 < b && !node.is_subset(&nodes[offset + stride]) {
                        horizontal = false;
                        break 'levels;
                    }
                    stride *= b;
                }
            }
        }
        Monotonicity {
            vertical,
            horizontal,
        }
    }
}

fn decode(mut offset: usize, len: usize, branching: usize, out: &mut Vec<usize>) {
    out.clear();
    out.resize(len, 1);
    for slot in out.iter_mut().rev() {
        *slot = offset % branching + 1;
        offset /= branching;
    }
}

fn shared_paving(schemes: &[SouslinScheme]) -> Result<Arc<Paving>> {
    let first = schemes.first().ok_or(Error::EmptyMerge)?;
    for s in &schemes[1..] {
        if !Arc::ptr_eq(&s.paving, &first.paving) && s.paving != first.paving {
            return Err(Error::MismatchedPaving);
        }
    }
    Ok(first.paving.clone())
}

/// A scheme whose value is the union of the values of `schemes`.
///
/// The first index coordinate `h₁` is split through [`theta_inv`] into a
/// branch `k` of scheme `m`; out-of-range pairs are clamped onto the last
/// scheme and its last branch, which adds nothing new to the union.
pub fn merge_union(schemes: &[SouslinScheme]) -> Result<SouslinScheme> {
    let paving = shared_paving(schemes)?;
    let count = schemes.len() as u64;
    let depth = schemes.iter().map(|s| s.depth).max().unwrap_or(1);
    let branching = schemes
        .iter()
        .enumerate()
        .map(|(i, s)| theta(s.branching as u64, i as u64 + 1) as usize)
        .max()
        .unwrap_or(1);
    let mut shifted = Vec::with_capacity(depth);
    SouslinScheme::from_fn(paving, depth, branching, |idx| {
        let (k, m) = theta_inv(idx[0] as u64);
        let source = &schemes[(m.min(count) - 1) as usize];
        shifted.clear();
        shifted.push((k as usize).min(source.branching));
        shifted.extend_from_slice(&idx[1..]);
        source.node(&shifted).clone()
    })
}

/// A scheme whose value is the intersection of the values of `schemes`.
///
/// Level `l = theta(k, m)` carries node `k` of scheme `m`, reading its
/// indices from positions `theta(1, m), …, theta(k, m)`; levels belonging to
/// no input scheme hold the ground set.
pub fn merge_intersection(schemes: &[SouslinScheme]) -> Result<SouslinScheme> {
    let paving = shared_paving(schemes)?;
    let count = schemes.len() as u64;
    let depth = schemes
        .iter()
        .enumerate()
        .map(|(i, s)| theta(s.depth as u64, i as u64 + 1) as usize)
        .max()
        .unwrap_or(1);
    let branching = schemes.iter().map(|s| s.branching).max().unwrap_or(1);
    let full = paving.full();
    let mut picked = Vec::with_capacity(depth);
    SouslinScheme::from_fn(paving, depth, branching, |idx| {
        let (k, m) = theta_inv(idx.len() as u64);
        if m > count {
            return full.clone();
        }
        let source = &schemes[(m - 1) as usize];
        let k = k.min(source.depth as u64);
        picked.clear();
        picked.extend((1..=k).map(|j| idx[theta(j, m) as usize - 1]));
        source.node(&picked).clone()
    })
}

/// A monotone scheme with the same value, built from
/// `D(h₁..h_l) = ⋃_{n ≤ h} ⋂_{k ≤ l} A(n₁..n_k)`.
pub fn monotonize(scheme: &SouslinScheme) -> Result<SouslinScheme> {
    if !scheme.paving.is_closed() {
        return Err(Error::PavingNotClosed);
    }
    let b = scheme.branching;
    let mut levels: Vec<Vec<GroundSet>> = Vec::with_capacity(scheme.depth);
    let mut prefix_meets: Vec<GroundSet> = vec![scheme.paving.full()];
    for level in 0..scheme.depth {
        let mut meets = Vec::with_capacity(prefix_meets.len() * b);
        for (parent, above) in prefix_meets.iter().enumerate() {
            for j in 0..b {
                let mut x = above.clone();
                x.intersect_with(&scheme.levels[level][parent * b + j]);
                meets.push(x);
            }
        }
        // Downward-closed union: sweep each coordinate once.
        let mut closed = meets.clone();
        let len = level + 1;
        let mut stride = 1;
        for _ in 0..len {
            for offset in 0..closed.len() {
                if (offset / stride) % b > 0 {
                    let (lower, upper) = closed.split_at_mut(offset);
                    upper[0].union_with(&lower[offset - stride]);
                }
            }
            stride *= b;
        }
        levels.push(closed);
        prefix_meets = meets;
    }
    let mut cursor = levels.into_iter().flatten();
    SouslinScheme::from_fn(scheme.paving.clone(), scheme.depth, b, |_| {
        cursor.next().expect("one value per node")
    })
}
