//! The JSON fixture document and its conversions.
//!
//! ```json
//! {
//!   "space": { "atoms": ["w1", "w2"], "probs": ["1/2", "1/2"] },
//!   "grid": ["0", "1"],
//!   "filtration": [ [["w1", "w2"]], [["w1"], ["w2"]] ],
//!   "sets":    { "O": [["w1", 1]] },
//!   "times":   { "tau": { "w1": 1, "w2": "inf" } },
//!   "schemes": { "S": { "ground_set": ["1", "2"], "paving": [["1"], ["2"]],
//!                       "depth": 1, "branching": 2,
//!                       "nodes": { "1": ["1"], "2": ["2"] } } }
//! }
//! ```
//!
//! `grid` is optional and defaults to `0, 1, …`. Scheme nodes that are not
//! listed take the whole ground set as their value.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::measure::{SampleSpace, SigmaAlgebra};
use crate::rational;
use crate::souslin::{GroundSet, Paving, SchemeIndex, SouslinScheme};
use crate::time::{FilteredSpace, RandomTime, StochasticSet, Tick, TimeGrid};
use crate::Rational;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSpace {
    pub atoms: Vec<String>,
    pub probs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawTick {
    Index(usize),
    Word(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawScheme {
    pub ground_set: Vec<String>,
    pub paving: Vec<Vec<String>>,
    pub depth: usize,
    pub branching: usize,
    #[serde(default)]
    pub nodes: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDocument {
    pub space: RawSpace,
    #[serde(default)]
    pub grid: Option<Vec<String>>,
    pub filtration: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub sets: BTreeMap<String, Vec<(String, usize)>>,
    #[serde(default)]
    pub times: BTreeMap<String, BTreeMap<String, RawTick>>,
    #[serde(default)]
    pub schemes: BTreeMap<String, RawScheme>,
}

/// One failed invariant, located by a JSON-path-like string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl Violation {
    fn new(path: impl Into<String>, message: impl ToString) -> Self {
        Violation {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadError {
    /// Malformed JSON, wrong shapes or bad literals.
    Parse(String),
    /// Well-formed document breaking one or more invariants.
    Invalid(Vec<Violation>),
}

/// A fully validated document.
#[derive(Debug, Clone)]
pub struct Document {
    pub space: FilteredSpace,
    pub sets: BTreeMap<String, StochasticSet>,
    pub times: BTreeMap<String, RandomTime>,
    pub schemes: BTreeMap<String, SouslinScheme>,
}

pub fn parse(text: &str) -> Result<RawDocument, LoadError> {
    serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))
}

pub fn load(text: &str) -> Result<Document, LoadError> {
    resolve(&parse(text)?)
}

fn parse_rational(text: &str, path: &str) -> Result<Rational, LoadError> {
    rational::parse(text).map_err(|e| LoadError::Parse(format!("{path}: {e}")))
}

fn index_ids(ids: &[String], path: &str, violations: &mut Vec<Violation>) -> HashMap<String, usize> {
    let mut map = HashMap::new();
    for (i, id) in ids.iter().enumerate() {
        if map.insert(id.clone(), i).is_some() {
            violations.push(Violation::new(format!("{path}[{i}]"), Error::DuplicateId(id.clone())));
        }
    }
    map
}

fn resolve_members(
    ids: &[String],
    lookup: &HashMap<String, usize>,
    len: usize,
    path: &str,
    violations: &mut Vec<Violation>,
) -> Option<FixedBitSet> {
    let mut set = FixedBitSet::with_capacity(len);
    let mut ok = true;
    for id in ids {
        match lookup.get(id) {
            Some(&i) => set.insert(i),
            None => {
                violations.push(Violation::new(path, Error::UnknownId(id.clone())));
                ok = false;
            }
        }
    }
    ok.then_some(set)
}

/// Resolves names and checks every invariant, collecting all violations.
pub fn resolve(raw: &RawDocument) -> Result<Document, LoadError> {
    let mut violations = Vec::new();

    // literals first: these are parse failures
    let weights = raw
        .space
        .probs
        .iter()
        .enumerate()
        .map(|(i, p)| parse_rational(p, &format!("space.probs[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let labels = match &raw.grid {
        Some(g) => Some(
            g.iter()
                .enumerate()
                .map(|(i, t)| parse_rational(t, &format!("grid[{i}]")))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };
    let mut parsed_nodes = BTreeMap::new();
    for (name, scheme) in &raw.schemes {
        let mut nodes = Vec::new();
        for (key, members) in &scheme.nodes {
            let index: SchemeIndex = key
                .parse()
                .map_err(|e| LoadError::Parse(format!("schemes.{name}.nodes: {e}")))?;
            nodes.push((index, members));
        }
        parsed_nodes.insert(name.clone(), nodes);
    }
    let mut parsed_times = BTreeMap::new();
    for (name, map) in &raw.times {
        let mut ticks = Vec::new();
        for (atom, tick) in map {
            let tick = match tick {
                RawTick::Index(k) => Tick::At(*k),
                RawTick::Word(w) if w == "inf" => Tick::Never,
                RawTick::Word(w) => {
                    return Err(LoadError::Parse(format!(
                        "times.{name}.{atom}: expected an index or \"inf\", got \"{w}\""
                    )))
                }
            };
            ticks.push((atom, tick));
        }
        parsed_times.insert(name.clone(), ticks);
    }

    let atoms = &raw.space.atoms;
    let n = atoms.len();
    let lookup = index_ids(atoms, "space.atoms", &mut violations);
    let space = match SampleSpace::new(atoms.clone(), weights) {
        Ok(s) => Some(s),
        Err(e) => {
            violations.push(Violation::new("space", e));
            None
        }
    };

    let times = raw.filtration.len();
    let grid = match labels {
        Some(l) => TimeGrid::new(l),
        None => TimeGrid::integers(times),
    };
    let grid = match grid {
        Ok(g) if g.len() == times => Some(g),
        Ok(g) => {
            violations.push(Violation::new(
                "grid",
                Error::SizeMismatch {
                    what: "grid",
                    expected: times,
                    found: g.len(),
                },
            ));
            None
        }
        Err(e) => {
            violations.push(Violation::new("grid", e));
            None
        }
    };

    let mut filtration = Vec::with_capacity(times);
    for (k, partition) in raw.filtration.iter().enumerate() {
        let path = format!("filtration[{k}]");
        let blocks: Option<Vec<FixedBitSet>> = partition
            .iter()
            .map(|block| resolve_members(block, &lookup, n, &path, &mut violations))
            .collect();
        let Some(blocks) = blocks else {
            filtration.push(None);
            continue;
        };
        match SigmaAlgebra::from_blocks(n, blocks) {
            Ok(sigma) => filtration.push(Some(sigma)),
            Err(e) => {
                violations.push(Violation::new(&path, e));
                filtration.push(None);
            }
        }
    }
    for k in 1..filtration.len() {
        if let (Some(prev), Some(cur)) = (&filtration[k - 1], &filtration[k]) {
            if !cur.refines(prev) {
                violations.push(Violation::new(
                    format!("filtration[{k}]"),
                    format!("time index {k} does not refine time index {}", k - 1),
                ));
            }
        }
    }

    let mut sets = BTreeMap::new();
    for (name, cells) in &raw.sets {
        let path = format!("sets.{name}");
        let mut set = StochasticSet::empty(n, times);
        let mut ok = true;
        for (atom, k) in cells {
            match lookup.get(atom) {
                None => {
                    violations.push(Violation::new(&path, Error::UnknownId(atom.clone())));
                    ok = false;
                }
                Some(_) if *k >= times => {
                    violations.push(Violation::new(
                        &path,
                        Error::TickOutOfRange { index: *k, len: times },
                    ));
                    ok = false;
                }
                Some(&a) => set.insert(a, *k),
            }
        }
        if ok {
            sets.insert(name.clone(), set);
        }
    }

    let mut random_times = BTreeMap::new();
    for (name, entries) in &parsed_times {
        let path = format!("times.{name}");
        let mut ticks = vec![None; n];
        let mut ok = true;
        for (atom, tick) in entries {
            match lookup.get(*atom) {
                Some(&a) => ticks[a] = Some(*tick),
                None => {
                    violations.push(Violation::new(&path, Error::UnknownId((*atom).clone())));
                    ok = false;
                }
            }
        }
        for (a, t) in ticks.iter().enumerate() {
            if t.is_none() && a < atoms.len() {
                violations.push(Violation::new(&path, format!("no value for atom `{}`", atoms[a])));
                ok = false;
            }
        }
        if !ok {
            continue;
        }
        let ticks = ticks.into_iter().map(|t| t.expect("checked above")).collect();
        match RandomTime::new(ticks, times) {
            Ok(t) => {
                random_times.insert(name.clone(), t);
            }
            Err(e) => violations.push(Violation::new(&path, e)),
        }
    }

    let mut schemes = BTreeMap::new();
    for (name, scheme) in &raw.schemes {
        if let Some(s) = resolve_scheme(name, scheme, &parsed_nodes[name], &mut violations) {
            schemes.insert(name.clone(), s);
        }
    }

    if !violations.is_empty() {
        return Err(LoadError::Invalid(violations));
    }
    let filtration = filtration.into_iter().map(|f| f.expect("no violations")).collect();
    let space = FilteredSpace::new(
        space.expect("no violations"),
        grid.expect("no violations"),
        filtration,
    )
    .map_err(|e| LoadError::Invalid(vec![Violation::new("filtration", e)]))?;
    Ok(Document {
        space,
        sets,
        times: random_times,
        schemes,
    })
}

fn resolve_scheme(
    name: &str,
    raw: &RawScheme,
    nodes: &[(SchemeIndex, &Vec<String>)],
    violations: &mut Vec<Violation>,
) -> Option<SouslinScheme> {
    let path = format!("schemes.{name}");
    let before = violations.len();
    let lookup = index_ids(&raw.ground_set, &format!("{path}.ground_set"), violations);
    let len = raw.ground_set.len();
    let members: Vec<GroundSet> = raw
        .paving
        .iter()
        .enumerate()
        .filter_map(|(i, m)| {
            resolve_members(m, &lookup, len, &format!("{path}.paving[{i}]"), violations)
        })
        .collect();
    let mut listed = Vec::new();
    for (index, ids) in nodes {
        let node_path = format!("{path}.nodes.{index}");
        if index.len() > raw.depth || index.entries().iter().any(|&e| e > raw.branching) {
            violations.push(Violation::new(&node_path, "index outside the scheme bounds"));
            continue;
        }
        if let Some(set) = resolve_members(ids, &lookup, len, &node_path, violations) {
            listed.push((index.clone(), set));
        }
    }
    if violations.len() > before {
        return None;
    }
    let paving = match Paving::explicit(raw.ground_set.clone(), members) {
        Ok(p) => Arc::new(p),
        Err(e) => {
            violations.push(Violation::new(format!("{path}.paving"), e));
            return None;
        }
    };
    match SouslinScheme::from_nodes(paving, raw.depth, raw.branching, listed) {
        Ok(s) => Some(s),
        Err(e) => {
            violations.push(Violation::new(&path, e));
            None
        }
    }
}

/// `{atom: index | "inf"}` in atom order.
pub fn time_to_json(space: &SampleSpace, time: &RandomTime) -> Value {
    let mut map = Map::new();
    for (id, tick) in space.atoms().iter().zip(time.ticks()) {
        let v = match tick {
            Tick::At(k) => json!(k),
            Tick::Never => json!("inf"),
        };
        map.insert(id.clone(), v);
    }
    Value::Object(map)
}

/// `[[atom, index], …]` in cell order.
pub fn set_to_json(space: &SampleSpace, set: &StochasticSet) -> Value {
    Value::Array(
        set.cells()
            .map(|(a, k)| json!([space.atoms()[a], k]))
            .collect(),
    )
}

pub fn rational_to_json(value: &Rational) -> Value {
    Value::String(rational::format(value))
}

/// Scheme literal; nodes equal to the ground set are omitted.
pub fn scheme_to_json(scheme: &SouslinScheme) -> Value {
    let paving = scheme.paving();
    let mut nodes = Map::new();
    for (index, set) in scheme.nodes() {
        if !set.is_full() {
            nodes.insert(index.to_string(), json!(paving.format_set(set)));
        }
    }
    let members: Vec<Vec<String>> = paving
        .explicit_members()
        .map(|m| m.map(|s| paving.format_set(s)).collect())
        .unwrap_or_default();
    json!({
        "ground_set": paving.ground(),
        "paving": members,
        "depth": scheme.depth(),
        "branching": scheme.branching(),
        "nodes": Value::Object(nodes),
    })
}
