//! Path and tree decompositions, their validity checks, and bag metrics.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphs::{dot_escape, AdjList, Adjacency, Graph};
use crate::solvers::ChromaticSolver;

/// A partial map from vertex ids to colours.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: BTreeMap<usize, u32>,
}

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vec(colors: &[u32]) -> Self {
        Self::from_pairs(colors.iter().copied().enumerate())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        Coloring {
            colors: pairs.into_iter().collect(),
        }
    }

    pub fn set(&mut self, v: usize, color: u32) {
        self.colors.insert(v, color);
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.colors.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    /// Number of distinct colours used.
    pub fn color_count(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    /// No edge between two coloured vertices is monochromatic. Uncoloured
    /// vertices are ignored.
    pub fn is_proper<G: Adjacency>(&self, g: &G) -> bool {
        self.conflicts(g).is_empty()
    }

    /// Monochromatic edges `(u, v)` with `u < v`.
    pub fn conflicts<G: Adjacency>(&self, g: &G) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (&u, &cu) in &self.colors {
            if u >= g.order() {
                continue;
            }
            for &w in g.neighbors(u) {
                let w = w as usize;
                if w > u && self.get(w) == Some(cu) {
                    out.push((u, w));
                }
            }
        }
        out
    }

    pub fn to_keyed(&self, g: &Graph) -> BTreeMap<String, u32> {
        self.iter().map(|(v, c)| (g.key(v).to_string(), c)).collect()
    }
}

/// Closed integer interval `[left, right]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub fn new(left: i64, right: i64) -> Self {
        Interval { left, right }
    }

    pub fn contains(&self, p: i64) -> bool {
        self.left <= p && p <= self.right
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }

    pub fn is_empty(&self) -> bool {
        self.left > self.right
    }
}

/// One interval per vertex id over an implicit integer host path.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathDecomposition {
    intervals: Vec<Interval>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecompositionDoc {
    pub intervals: BTreeMap<String, [i64; 2]>,
}

impl PathDecomposition {
    pub fn new(intervals: Vec<Interval>) -> Self {
        PathDecomposition { intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Vertices whose interval contains `p`, ascending.
    pub fn bag_at(&self, p: i64) -> Vec<usize> {
        (0..self.intervals.len())
            .filter(|&v| self.intervals[v].contains(p))
            .collect()
    }

    /// Sorted distinct endpoints.
    pub fn endpoints(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .intervals
            .iter()
            .flat_map(|iv| [iv.left, iv.right])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Mirror image: every interval `[a,b]` becomes `[-b,-a]`.
    pub fn reversed(&self) -> Self {
        PathDecomposition::new(
            self.intervals
                .iter()
                .map(|iv| Interval::new(-iv.right, -iv.left))
                .collect(),
        )
    }

    pub fn to_doc(&self, g: &Graph) -> PathDecompositionDoc {
        PathDecompositionDoc {
            intervals: self
                .intervals
                .iter()
                .enumerate()
                .map(|(v, iv)| (g.key(v).to_string(), [iv.left, iv.right]))
                .collect(),
        }
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        serde_json::to_value(self.to_doc(g)).expect("decomposition documents serialize")
    }

    /// Every vertex of `g` must appear exactly once.
    pub fn from_doc(doc: &PathDecompositionDoc, g: &Graph) -> Result<Self> {
        let mut intervals: Vec<Option<Interval>> = vec![None; g.vertex_count()];
        for (key, &[a, b]) in &doc.intervals {
            let v = g
                .id_of(key)
                .ok_or_else(|| Error::UnknownVertex(key.clone()))?;
            intervals[v] = Some(Interval::new(a, b));
        }
        if let Some(v) = intervals.iter().position(Option::is_none) {
            return Err(Error::DecompositionMismatch(format!(
                "vertex {} has no interval",
                g.key(v)
            )));
        }
        Ok(PathDecomposition::new(
            intervals.into_iter().map(Option::unwrap).collect(),
        ))
    }

    fn check_order(&self, g: &Graph) -> Result<()> {
        if self.intervals.len() != g.vertex_count() {
            return Err(Error::DecompositionMismatch(format!(
                "{} intervals for {} vertices",
                self.intervals.len(),
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// Sweep events ordered by position, entries before exits at equal
    /// positions, then by vertex.
    fn events(&self) -> Vec<(i64, bool, u32)> {
        let mut events: Vec<(i64, bool, u32)> = Vec::with_capacity(2 * self.intervals.len());
        for (v, iv) in self.intervals.iter().enumerate() {
            if iv.is_empty() {
                continue;
            }
            events.push((iv.left, false, v as u32));
            events.push((iv.right, true, v as u32));
        }
        events.sort_unstable();
        events
    }
}

/// Host tree with named nodes and one bag per node.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeDecomposition {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    bags: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostDoc {
    pub nodes: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecompositionDoc {
    pub host: HostDoc,
    pub bags: BTreeMap<String, Vec<String>>,
}

impl TreeDecomposition {
    /// Bags are stored sorted and deduplicated.
    pub fn new(names: Vec<String>, edges: Vec<(usize, usize)>, mut bags: Vec<Vec<usize>>) -> Result<Self> {
        if names.len() != bags.len() {
            return Err(Error::DecompositionMismatch(format!(
                "{} host nodes but {} bags",
                names.len(),
                bags.len()
            )));
        }
        let unique: BTreeSet<&String> = names.iter().collect();
        if unique.len() != names.len() {
            return Err(Error::HostNotTree("repeated host node name".into()));
        }
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        Ok(TreeDecomposition { names, edges, bags })
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn host_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bags[t]
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Errors unless the host is a tree and every bag member is a vertex of
    /// a graph with `order` vertices.
    fn check_host(&self, order: usize) -> Result<Vec<Vec<usize>>> {
        let k = self.names.len();
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            if a >= k || b >= k {
                return Err(Error::HostNotTree(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::HostNotTree(format!("loop at {}", self.names[a])));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        if k > 0 {
            if self.edges.len() != k - 1 {
                return Err(Error::HostNotTree(format!(
                    "{} nodes and {} edges",
                    k,
                    self.edges.len()
                )));
            }
            let mut seen = vec![false; k];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(t) = stack.pop() {
                for &s in &adj[t] {
                    if !seen[s] {
                        seen[s] = true;
                        stack.push(s);
                    }
                }
            }
            if let Some(t) = seen.iter().position(|s| !s) {
                return Err(Error::HostNotTree(format!(
                    "node {:?} is disconnected",
                    self.names[t]
                )));
            }
        }
        for bag in &self.bags {
            if let Some(&v) = bag.iter().find(|&&v| v >= order) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        Ok(adj)
    }

    pub fn to_doc(&self, g: &Graph) -> TreeDecompositionDoc {
        TreeDecompositionDoc {
            host: HostDoc {
                nodes: self.names.clone(),
                edges: self
                    .edges
                    .iter()
                    .map(|&(a, b)| [self.names[a].clone(), self.names[b].clone()])
                    .collect(),
            },
            bags: self
                .names
                .iter()
                .zip(&self.bags)
                .map(|(name, bag)| {
                    (
                        name.clone(),
                        bag.iter().map(|&v| g.key(v).to_string()).collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        serde_json::to_value(self.to_doc(g)).expect("decomposition documents serialize")
    }

    pub fn from_doc(doc: &TreeDecompositionDoc, g: &Graph) -> Result<Self> {
        let index: HashMap<&str, usize> = doc
            .host
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::HostNotTree(format!("unknown host node {name:?}")))
        };
        let edges = doc
            .host
            .edges
            .iter()
            .map(|[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut bags = vec![Vec::new(); doc.host.nodes.len()];
        for (name, keys) in &doc.bags {
            let t = lookup(name)?;
            bags[t] = keys
                .iter()
                .map(|k| g.id_of(k).ok_or_else(|| Error::UnknownVertex(k.clone())))
                .collect::<Result<_>>()?;
        }
        TreeDecomposition::new(doc.host.nodes.clone(), edges, bags)
    }

    /// DOT rendering of the host tree; the empty name renders as `.`.
    pub fn host_to_dot(&self) -> String {
        let mut out = String::from("graph T {\n");
        for (t, name) in self.names.iter().enumerate() {
            let label = if name.is_empty() { "." } else { name.as_str() };
            let _ = writeln!(
                out,
                "  {t} [label=\"{}\", bag={}];",
                dot_escape(label),
                self.bags[t].len()
            );
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Either kind of decomposition, as read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyDecomposition {
    Path(PathDecomposition),
    Tree(TreeDecomposition),
}

impl AnyDecomposition {
    pub fn from_json_str(s: &str, g: &Graph) -> Result<Self> {
        let value: Value = serde_json::from_str(s)?;
        if value.get("intervals").is_some() {
            let doc: PathDecompositionDoc = serde_json::from_value(value)?;
            Ok(AnyDecomposition::Path(PathDecomposition::from_doc(&doc, g)?))
        } else {
            let doc: TreeDecompositionDoc = serde_json::from_value(value)?;
            Ok(AnyDecomposition::Tree(TreeDecomposition::from_doc(&doc, g)?))
        }
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        match self {
            AnyDecomposition::Path(d) => d.to_json(g),
            AnyDecomposition::Tree(d) => d.to_json(g),
        }
    }
}

/// Every (T1)/(T2) failure found.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub uncovered_vertices: Vec<usize>,
    pub uncovered_edges: Vec<(usize, usize)>,
    pub disconnected_traces: Vec<usize>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.uncovered_vertices.is_empty()
            && self.uncovered_edges.is_empty()
            && self.disconnected_traces.is_empty()
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        let key = |v: &usize| g.key(*v).to_string();
        json!({
            "valid": self.is_valid(),
            "uncovered_vertices": self.uncovered_vertices.iter().map(key).collect::<Vec<_>>(),
            "uncovered_edges": self
                .uncovered_edges
                .iter()
                .map(|(u, v)| [key(u), key(v)])
                .collect::<Vec<_>>(),
            "disconnected_traces": self.disconnected_traces.iter().map(key).collect::<Vec<_>>(),
        })
    }
}

pub fn verify_tree_decomposition(g: &Graph, d: &TreeDecomposition) -> Result<ValidityReport> {
    let host = d.check_host(g.vertex_count())?;
    let mut traces: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (t, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            traces[v].push(t);
        }
    }
    let mut report = ValidityReport::default();
    for (v, trace) in traces.iter().enumerate() {
        if trace.is_empty() {
            report.uncovered_vertices.push(v);
        }
    }
    for (u, v) in g.edges() {
        if !sorted_intersect(&traces[u], &traces[v]) {
            report.uncovered_edges.push((u, v));
        }
    }
    let mut mark = vec![usize::MAX; d.node_count()];
    let mut stack = Vec::new();
    for (v, trace) in traces.iter().enumerate() {
        if trace.len() <= 1 {
            continue;
        }
        for &t in trace {
            mark[t] = v;
        }
        // Flood from the first node inside the trace; unmark as we go.
        let mut reached = 1;
        mark[trace[0]] = usize::MAX;
        stack.push(trace[0]);
        while let Some(t) = stack.pop() {
            for &s in &host[t] {
                if mark[s] == v {
                    mark[s] = usize::MAX;
                    reached += 1;
                    stack.push(s);
                }
            }
        }
        if reached != trace.len() {
            report.disconnected_traces.push(v);
            for &t in trace {
                mark[t] = usize::MAX;
            }
        }
    }
    Ok(report)
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// An empty interval counts as an uncovered vertex; traces on a path are
/// intervals and so always connected.
pub fn verify_path_decomposition(g: &Graph, d: &PathDecomposition) -> Result<ValidityReport> {
    d.check_order(g)?;
    let mut report = ValidityReport::default();
    for (v, iv) in d.intervals.iter().enumerate() {
        if iv.is_empty() {
            report.uncovered_vertices.push(v);
        }
    }
    for (u, v) in g.edges() {
        let (a, b) = (d.intervals[u], d.intervals[v]);
        if a.is_empty() || b.is_empty() || !a.intersects(&b) {
            report.uncovered_edges.push((u, v));
        }
    }
    Ok(report)
}

/// How bag chromatic numbers are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticOptions {
    pub solver: ChromaticSolver,
    /// Worker threads for independent bags; 1 means sequential.
    pub jobs: usize,
}

impl Default for ChromaticOptions {
    fn default() -> Self {
        ChromaticOptions {
            solver: ChromaticSolver::default(),
            jobs: 1,
        }
    }
}

pub trait Decomposition {
    /// Maximum bag size minus one; -1 when there are no bags.
    fn width(&self) -> i64;

    /// Maximum chromatic number of a bag's induced subgraph; 0 when there
    /// are no nonempty bags.
    fn chromatic_with(&self, g: &Graph, opts: &ChromaticOptions) -> Result<usize>;
}

impl Decomposition for PathDecomposition {
    fn width(&self) -> i64 {
        let mut size = 0i64;
        let mut best = -1i64;
        for (_, leave, _) in self.events() {
            if leave {
                size -= 1;
            } else {
                size += 1;
                best = best.max(size - 1);
            }
        }
        best
    }

    /// Bags are evaluated where a run of entries ends, since every other bag
    /// is contained in one of those.
    fn chromatic_with(&self, g: &Graph, opts: &ChromaticOptions) -> Result<usize> {
        self.check_order(g)?;
        let mut sweep = BagSweep::new(g);
        let mut best = 0;
        let mut peak = false;
        for (_, leave, v) in self.events() {
            let v = v as usize;
            if leave {
                if peak {
                    best = best.max(sweep.chromatic(&opts.solver)?);
                    peak = false;
                }
                sweep.leave(v);
            } else {
                sweep.enter(v);
                peak = true;
            }
        }
        if peak {
            best = best.max(sweep.chromatic(&opts.solver)?);
        }
        Ok(best)
    }
}

impl Decomposition for TreeDecomposition {
    fn width(&self) -> i64 {
        self.bags.iter().map(|b| b.len() as i64 - 1).max().unwrap_or(-1)
    }

    fn chromatic_with(&self, g: &Graph, opts: &ChromaticOptions) -> Result<usize> {
        self.check_host(g.vertex_count())?;
        let eval = |bag: &Vec<usize>| opts.solver.chromatic_value(&g.induced(bag));
        let values: Vec<Result<usize>> = if opts.jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
            pool.install(|| self.bags.par_iter().map(eval).collect())
        } else {
            self.bags.iter().map(eval).collect()
        };
        let mut best = 0;
        for v in values {
            best = best.max(v?);
        }
        Ok(best)
    }
}

impl Decomposition for AnyDecomposition {
    fn width(&self) -> i64 {
        match self {
            AnyDecomposition::Path(d) => d.width(),
            AnyDecomposition::Tree(d) => d.width(),
        }
    }

    fn chromatic_with(&self, g: &Graph, opts: &ChromaticOptions) -> Result<usize> {
        match self {
            AnyDecomposition::Path(d) => d.chromatic_with(g, opts),
            AnyDecomposition::Tree(d) => d.chromatic_with(g, opts),
        }
    }
}

pub fn decomposition_chromatic<D: Decomposition>(g: &Graph, d: &D) -> Result<usize> {
    d.chromatic_with(g, &ChromaticOptions::default())
}

pub fn decomposition_chromatic_with<D: Decomposition>(
    g: &Graph,
    d: &D,
    opts: &ChromaticOptions,
) -> Result<usize> {
    d.chromatic_with(g, opts)
}

pub fn decomposition_width<D: Decomposition>(d: &D) -> i64 {
    d.width()
}

/// Live bag of a left-to-right sweep with its induced adjacency. Exits are
/// not removed from neighbour lists eagerly; stale entries are dropped the
/// next time a list is walked.
struct BagSweep<'g> {
    g: &'g Graph,
    in_bag: Vec<bool>,
    slot: Vec<u32>,
    members: Vec<u32>,
    adj: Vec<Vec<u32>>,
    side: Vec<u8>,
}

const UNSEEN: u8 = 2;

impl<'g> BagSweep<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        BagSweep {
            g,
            in_bag: vec![false; n],
            slot: vec![0; n],
            members: Vec::new(),
            adj: vec![Vec::new(); n],
            side: vec![UNSEEN; n],
        }
    }

    fn enter(&mut self, v: usize) {
        self.in_bag[v] = true;
        self.slot[v] = self.members.len() as u32;
        self.members.push(v as u32);
        for &w in self.g.neighbors(v) {
            if self.in_bag[w as usize] {
                self.adj[v].push(w);
                self.adj[w as usize].push(v as u32);
            }
        }
    }

    fn leave(&mut self, v: usize) {
        self.in_bag[v] = false;
        self.adj[v] = Vec::new();
        let i = self.slot[v] as usize;
        self.members.swap_remove(i);
        if let Some(&moved) = self.members.get(i) {
            self.slot[moved as usize] = i as u32;
        }
    }

    fn chromatic(&mut self, solver: &ChromaticSolver) -> Result<usize> {
        if self.members.is_empty() {
            return Ok(0);
        }
        let mut any_edge = false;
        let mut odd = false;
        let mut queue: Vec<u32> = Vec::new();
        'outer: for i in 0..self.members.len() {
            let s = self.members[i] as usize;
            if self.side[s] != UNSEEN {
                continue;
            }
            self.side[s] = 0;
            queue.clear();
            queue.push(s as u32);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head] as usize;
                head += 1;
                let in_bag = &self.in_bag;
                self.adj[u].retain(|&w| in_bag[w as usize]);
                any_edge |= !self.adj[u].is_empty();
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if self.side[w] == UNSEEN {
                        self.side[w] = 1 - self.side[u];
                        queue.push(w as u32);
                    } else if self.side[w] == self.side[u] {
                        odd = true;
                        break 'outer;
                    }
                }
            }
        }
        for &m in &self.members {
            self.side[m as usize] = UNSEEN;
        }
        if !odd {
            return Ok(if any_edge { 2 } else { 1 });
        }
        let local = AdjList(
            self.members
                .iter()
                .map(|&u| {
                    let mut list: Vec<u32> = self.adj[u as usize]
                        .iter()
                        .filter(|&&w| self.in_bag[w as usize])
                        .map(|&w| self.slot[w as usize])
                        .collect();
                    list.sort_unstable();
                    list
                })
                .collect(),
        );
        solver.chromatic_value(&local)
    }
}

/// Spreads all endpoints to distinct consecutive integers `0..2|V|`,
/// preserving which intervals meet. At equal positions left endpoints come
/// first. Ties among left endpoints open the longer interval first and ties
/// among right endpoints close the shorter one first, so containments
/// survive; remaining ties go by vertex key.
pub fn normalize_path(g: &Graph, d: &PathDecomposition) -> Result<PathDecomposition> {
    d.check_order(g)?;
    let mut ends: Vec<(i64, u8, i64, &str, usize)> = Vec::with_capacity(2 * d.len());
    for (v, iv) in d.intervals.iter().enumerate() {
        ends.push((iv.left, 0, -iv.right, g.key(v), v));
        ends.push((iv.right, 1, -iv.left, g.key(v), v));
    }
    ends.sort_unstable();
    let mut out = vec![Interval::new(0, 0); d.len()];
    for (i, &(_, side, _, _, v)) in ends.iter().enumerate() {
        if side == 0 {
            out[v].left = i as i64;
        } else {
            out[v].right = i as i64;
        }
    }
    Ok(PathDecomposition::new(out))
}

/// The same decomposition with an explicit host path: one node per distinct
/// endpoint, consecutive equal bags merged. Host nodes are named by position.
pub fn path_as_tree(d: &PathDecomposition) -> TreeDecomposition {
    let mut names = Vec::new();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    for p in d.endpoints() {
        let bag = d.bag_at(p);
        if bags.last() == Some(&bag) {
            continue;
        }
        names.push(p.to_string());
        bags.push(bag);
    }
    let edges = (1..names.len()).map(|i| (i - 1, i)).collect();
    TreeDecomposition::new(names, edges, bags).expect("distinct positions make a path host")
}
