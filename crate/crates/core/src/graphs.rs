//! Vertex families (intervals, V's, Y's), their adjacency rules, and the
//! generators for the shift graph `S_n`, the V-graph `G_n` and the
//! V/Y-graph `H_n`.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::btree::{side_above, Node, Side, TreeOrder};
use crate::decomp::Coloring;
use crate::error::{Error, Result};

/// A vertex `[a,b]` of the shift graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalVertex {
    pub a: i64,
    pub b: i64,
}

impl IntervalVertex {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 1 || a >= b {
            return Err(Error::InvalidInterval { a, b });
        }
        Ok(IntervalVertex { a, b })
    }
}

/// A V: the path from `y` down to the low point `x` and back up to `z`,
/// with `y` in the left tree above `x` and `z` in the right tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vee {
    x: Node,
    y: Node,
    z: Node,
}

impl Vee {
    pub fn new(x: Node, y: Node, z: Node) -> Result<Self> {
        let fail = |reason| Error::InvalidVee {
            x: x.to_string(),
            y: y.to_string(),
            z: z.to_string(),
            reason,
        };
        match side_above(&x, &y) {
            Ok(Side::Left) => {}
            Ok(Side::Right) => return Err(fail("left endpoint lies in the right tree")),
            Err(_) => return Err(fail("left endpoint is not above the low point")),
        }
        match side_above(&x, &z) {
            Ok(Side::Right) => {}
            Ok(Side::Left) => return Err(fail("right endpoint lies in the left tree")),
            Err(_) => return Err(fail("right endpoint is not above the low point")),
        }
        Ok(Vee { x, y, z })
    }

    /// Low point.
    pub fn x(&self) -> Node {
        self.x
    }

    /// Left endpoint.
    pub fn y(&self) -> Node {
        self.y
    }

    /// Right endpoint.
    pub fn z(&self) -> Node {
        self.z
    }

    pub fn endpoints(&self) -> [Node; 2] {
        [self.y, self.z]
    }

    /// Nodes of the path, from `y` through `x` to `z`.
    pub fn path_nodes(&self) -> Vec<Node> {
        let lo = self.x.len();
        let mut out: Vec<Node> = (lo..=self.y.len()).rev().map(|k| self.y.prefix(k)).collect();
        out.extend((lo + 1..=self.z.len()).map(|k| self.z.prefix(k)));
        out
    }

    pub fn contains_node(&self, t: &Node) -> bool {
        self.x.is_below(t) && (t.is_below(&self.y) || t.is_below(&self.z))
    }

    pub fn depth(&self) -> usize {
        self.y.len().max(self.z.len())
    }
}

pub fn make_vee(x: Node, y: Node, z: Node) -> Result<Vee> {
    Vee::new(x, y, z)
}

/// A Y: a subtree with three leaves whose lowest node is one of the leaves.
/// The branch point is the meet of the two upper leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wye {
    low: Node,
    branch: Node,
    up_left: Node,
    up_right: Node,
}

impl Wye {
    pub fn new(low: Node, up_left: Node, up_right: Node) -> Result<Self> {
        let fail = |reason| Error::InvalidWye {
            low: low.to_string(),
            up_left: up_left.to_string(),
            up_right: up_right.to_string(),
            reason,
        };
        let branch = up_left.meet(&up_right);
        if !low.is_strictly_below(&branch) {
            return Err(fail("lowest leaf is not strictly below the branch point"));
        }
        if side_above(&branch, &up_left).ok() != Some(Side::Left) {
            return Err(fail("first upper leaf is not in the left tree above the branch"));
        }
        if side_above(&branch, &up_right).ok() != Some(Side::Right) {
            return Err(fail("second upper leaf is not in the right tree above the branch"));
        }
        Ok(Wye {
            low,
            branch,
            up_left,
            up_right,
        })
    }

    pub fn low(&self) -> Node {
        self.low
    }

    pub fn branch(&self) -> Node {
        self.branch
    }

    pub fn up_left(&self) -> Node {
        self.up_left
    }

    pub fn up_right(&self) -> Node {
        self.up_right
    }

    pub fn upper_leaves(&self) -> [Node; 2] {
        [self.up_left, self.up_right]
    }

    /// Nodes of the subtree: the stem from `low` to the branch point and
    /// both legs above it.
    pub fn subtree_nodes(&self) -> Vec<Node> {
        let b = self.branch.len();
        let mut out: Vec<Node> = (self.low.len()..=b).map(|k| self.branch.prefix(k)).collect();
        out.extend((b + 1..=self.up_left.len()).map(|k| self.up_left.prefix(k)));
        out.extend((b + 1..=self.up_right.len()).map(|k| self.up_right.prefix(k)));
        out
    }

    pub fn contains_node(&self, t: &Node) -> bool {
        self.low.is_below(t)
            && (t.is_below(&self.branch) || t.is_below(&self.up_left) || t.is_below(&self.up_right))
    }

    pub fn depth(&self) -> usize {
        self.up_left.len().max(self.up_right.len())
    }
}

pub fn make_wye(low: Node, up_left: Node, up_right: Node) -> Result<Wye> {
    Wye::new(low, up_left, up_right)
}

/// Label attached to a graph vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    Interval(IntervalVertex),
    Vee(Vee),
    Wye(Wye),
    Opaque(String),
}

impl VertexLabel {
    /// Canonical key: `I:a,b`, `V:x,y,z`, `Y:low,ul,ur`, or the opaque id.
    pub fn key(&self) -> String {
        self.to_string()
    }

    pub fn dot_label(&self) -> String {
        match self {
            VertexLabel::Vee(v) => {
                format!("V:{},{},{}", v.x.dot_label(), v.y.dot_label(), v.z.dot_label())
            }
            VertexLabel::Wye(w) => format!(
                "Y:{},{},{}",
                w.low.dot_label(),
                w.up_left.dot_label(),
                w.up_right.dot_label()
            ),
            other => other.key(),
        }
    }

    pub fn parse_key(key: &str) -> Result<Self> {
        let bad = || Error::InvalidKey(key.to_string());
        let fields = |body: &str| -> Vec<String> { body.split(',').map(str::to_string).collect() };
        if let Some(body) = key.strip_prefix("I:") {
            let f = fields(body);
            let [a, b] = f.as_slice() else {
                return Err(bad());
            };
            let a = a.parse().map_err(|_| bad())?;
            let b = b.parse().map_err(|_| bad())?;
            return Ok(VertexLabel::Interval(IntervalVertex::new(a, b)?));
        }
        if let Some(body) = key.strip_prefix("V:") {
            let f = fields(body);
            let [x, y, z] = f.as_slice() else {
                return Err(bad());
            };
            return Ok(VertexLabel::Vee(Vee::new(x.parse()?, y.parse()?, z.parse()?)?));
        }
        if let Some(body) = key.strip_prefix("Y:") {
            let f = fields(body);
            let [l, ul, ur] = f.as_slice() else {
                return Err(bad());
            };
            return Ok(VertexLabel::Wye(Wye::new(l.parse()?, ul.parse()?, ur.parse()?)?));
        }
        Ok(VertexLabel::Opaque(key.to_string()))
    }

    pub fn as_vee(&self) -> Option<&Vee> {
        match self {
            VertexLabel::Vee(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_wye(&self) -> Option<&Wye> {
        match self {
            VertexLabel::Wye(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_interval(&self) -> Option<&IntervalVertex> {
        match self {
            VertexLabel::Interval(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Interval(i) => write!(f, "I:{},{}", i.a, i.b),
            VertexLabel::Vee(v) => write!(f, "V:{},{},{}", v.x, v.y, v.z),
            VertexLabel::Wye(w) => write!(f, "Y:{},{},{}", w.low, w.up_left, w.up_right),
            VertexLabel::Opaque(s) => f.write_str(s),
        }
    }
}

impl From<Vee> for VertexLabel {
    fn from(v: Vee) -> Self {
        VertexLabel::Vee(v)
    }
}

impl From<Wye> for VertexLabel {
    fn from(w: Wye) -> Self {
        VertexLabel::Wye(w)
    }
}

impl From<IntervalVertex> for VertexLabel {
    fn from(i: IntervalVertex) -> Self {
        VertexLabel::Interval(i)
    }
}

fn vee_vee(a: &Vee, b: &Vee) -> bool {
    b.endpoints().contains(&a.x) || a.endpoints().contains(&b.x)
}

fn wye_wye(a: &Wye, b: &Wye) -> bool {
    b.upper_leaves().contains(&a.low) || a.upper_leaves().contains(&b.low)
}

fn wye_vee(y: &Wye, v: &Vee) -> bool {
    y.upper_leaves().contains(&v.x)
}

fn shift(p: &IntervalVertex, q: &IntervalVertex) -> bool {
    p.b == q.a || q.b == p.a
}

/// The adjacency rule of the family both labels belong to. Labels from
/// different families, and opaque labels, are never adjacent.
pub fn adjacent(u: &VertexLabel, v: &VertexLabel) -> bool {
    use VertexLabel::*;
    if u == v {
        return false;
    }
    match (u, v) {
        (Vee(a), Vee(b)) => vee_vee(a, b),
        (Wye(a), Wye(b)) => wye_wye(a, b),
        (Wye(y), Vee(x)) | (Vee(x), Wye(y)) => wye_vee(y, x),
        (Interval(p), Interval(q)) => shift(p, q),
        _ => false,
    }
}

/// Read-only adjacency-list view used by the solvers and checkers.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn neighbors(&self, v: usize) -> &[u32];

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }
}

/// Plain adjacency lists, for induced subgraphs and hand-built inputs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AdjList(pub Vec<Vec<u32>>);

impl AdjList {
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        AdjList(adj)
    }
}

impl Adjacency for AdjList {
    fn order(&self) -> usize {
        self.0.len()
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.0[v]
    }
}

/// An immutable labeled graph with compressed adjacency lists.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    keys: Vec<String>,
    index: HashMap<String, usize>,
    offsets: Vec<usize>,
    adjacency: Vec<u32>,
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.labels.len()
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }
}

impl Graph {
    /// Builds a graph from labels and an explicit edge list. Rejects self
    /// loops, duplicate edges, out-of-range endpoints and duplicate keys.
    pub fn from_edges(labels: Vec<VertexLabel>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self loop at {u}")));
            }
        }
        let mut normalized: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge {:?}", w[0])));
        }
        Self::assemble(labels, |_, emit| {
            for &(u, v) in &normalized {
                emit(u, v);
            }
        })
    }

    /// Builds a graph by applying [`adjacent`] to every pair. Quadratic;
    /// meant for small inputs and as an oracle for the indexed generators.
    pub fn from_rule(labels: Vec<VertexLabel>) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                if adjacent(&labels[i], &labels[j]) {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(labels, &edges)
    }

    /// `edges` is called twice and must report each edge exactly once.
    fn assemble<F>(labels: Vec<VertexLabel>, edges: F) -> Result<Self>
    where
        F: Fn(&[VertexLabel], &mut dyn FnMut(usize, usize)),
    {
        let n = labels.len();
        let keys: Vec<String> = labels.iter().map(VertexLabel::key).collect();
        let mut index = HashMap::with_capacity(n);
        for (i, k) in keys.iter().enumerate() {
            if index.insert(k.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex key {k:?}")));
            }
        }
        let mut degree = vec![0usize; n];
        edges(&labels, &mut |u, v| {
            degree[u] += 1;
            degree[v] += 1;
        });
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adjacency = vec![0u32; offsets[n]];
        edges(&labels, &mut |u, v| {
            adjacency[fill[u]] = v as u32;
            fill[u] += 1;
            adjacency[fill[v]] = u as u32;
            fill[v] += 1;
        });
        for v in 0..n {
            let list = &mut adjacency[offsets[v]..offsets[v + 1]];
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph {
            labels,
            keys,
            index,
            offsets,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len() / 2
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn key(&self, v: usize) -> &str {
        &self.keys[v]
    }

    pub fn id_of(&self, key: &str) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced on `vertices` (in the given order), relabeled
    /// `0..vertices.len()`.
    pub fn induced(&self, vertices: &[usize]) -> AdjList {
        let local: HashMap<usize, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        AdjList(
            vertices
                .iter()
                .map(|&v| {
                    let mut list: Vec<u32> = self
                        .neighbors(v)
                        .iter()
                        .filter_map(|u| local.get(&(*u as usize)).copied())
                        .collect();
                    list.sort_unstable();
                    list
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> GraphDoc {
        GraphDoc {
            vertices: self
                .keys
                .iter()
                .enumerate()
                .map(|(id, key)| VertexDoc {
                    id,
                    key: key.clone(),
                })
                .collect(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Compact JSON followed by a newline.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string(&self.to_json()).expect("graph documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(doc: &GraphDoc) -> Result<Self> {
        let n = doc.vertices.len();
        let mut labels: Vec<Option<VertexLabel>> = vec![None; n];
        for v in &doc.vertices {
            let slot = labels
                .get_mut(v.id)
                .ok_or_else(|| Error::InvalidGraph(format!("vertex id {} out of range", v.id)))?;
            if slot.is_some() {
                return Err(Error::InvalidGraph(format!("vertex id {} repeated", v.id)));
            }
            *slot = Some(VertexLabel::parse_key(&v.key)?);
        }
        let labels: Vec<VertexLabel> = labels.into_iter().map(Option::unwrap).collect();
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(labels, &edges)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&label.dot_label()));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Serialized graph: `{"vertices":[{"id":int,"key":string}],"edges":[[int,int]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub key: String,
}

fn sort_by_key(labels: Vec<VertexLabel>) -> Vec<VertexLabel> {
    let mut keyed: Vec<(String, VertexLabel)> =
        labels.into_iter().map(|l| (l.key(), l)).collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, l)| l).collect()
}

/// Vertices of `S_n` in id order.
pub fn shift_vertices(n: usize) -> Vec<IntervalVertex> {
    let n = n as i64;
    let labels = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| IntervalVertex { a, b }.into()))
        .collect();
    sort_by_key(labels)
        .into_iter()
        .map(|l| *l.as_interval().unwrap())
        .collect()
}

/// Every V of `T_n` in id order.
pub fn vees(n: usize) -> Result<Vec<Vee>> {
    let tree = TreeOrder::new(n)?;
    let mut out = Vec::new();
    for x in tree.nodes() {
        let left = tree.tree_above(&x, Side::Left);
        let right = tree.tree_above(&x, Side::Right);
        for y in &left {
            for z in &right {
                out.push(Vee { x, y: *y, z: *z });
            }
        }
    }
    Ok(sort_by_key(out.into_iter().map(Into::into).collect())
        .into_iter()
        .map(|l| *l.as_vee().unwrap())
        .collect())
}

/// Every Y of `T_n`, unsorted.
fn wyes(n: usize) -> Result<Vec<Wye>> {
    let tree = TreeOrder::new(n)?;
    let mut out = Vec::new();
    for branch in tree.nodes().into_iter().filter(|b| !b.is_root()) {
        let left = tree.tree_above(&branch, Side::Left);
        let right = tree.tree_above(&branch, Side::Right);
        for low in branch.ancestors_inclusive().take(branch.len()) {
            for ul in &left {
                for ur in &right {
                    out.push(Wye {
                        low,
                        branch,
                        up_left: *ul,
                        up_right: *ur,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Every vertex of `H_n` (V's, then Y's, by key) in id order.
pub fn h_vertices(n: usize) -> Result<Vec<VertexLabel>> {
    let mut labels: Vec<VertexLabel> = vees(n)?.into_iter().map(Into::into).collect();
    labels.extend(wyes(n)?.into_iter().map(VertexLabel::from));
    Ok(sort_by_key(labels))
}

pub fn build_shift(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Precondition(format!("S_n needs n >= 2, got {n}")));
    }
    let labels: Vec<VertexLabel> = shift_vertices(n).into_iter().map(Into::into).collect();
    let mut by_start: HashMap<i64, Vec<usize>> = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        by_start.entry(l.as_interval().unwrap().a).or_default().push(i);
    }
    let ends: Vec<i64> = labels.iter().map(|l| l.as_interval().unwrap().b).collect();
    Graph::assemble(labels, |_, emit| {
        for (i, b) in ends.iter().enumerate() {
            for &j in by_start.get(b).into_iter().flatten() {
                emit(i, j);
            }
        }
    })
}

/// Edges of a V/Y graph from a low-point index: each vertex reaches the
/// V's (and, for a Y, the Y's) whose low point is one of its upper nodes.
fn assemble_tree_graph(labels: Vec<VertexLabel>) -> Result<Graph> {
    let mut vee_by_low: HashMap<Node, Vec<usize>> = HashMap::new();
    let mut wye_by_low: HashMap<Node, Vec<usize>> = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        match l {
            VertexLabel::Vee(v) => vee_by_low.entry(v.x).or_default().push(i),
            VertexLabel::Wye(w) => wye_by_low.entry(w.low).or_default().push(i),
            _ => {}
        }
    }
    Graph::assemble(labels, |labels, emit| {
        for (i, l) in labels.iter().enumerate() {
            let (uppers, reach_wyes) = match l {
                VertexLabel::Vee(v) => (v.endpoints(), false),
                VertexLabel::Wye(w) => (w.upper_leaves(), true),
                _ => continue,
            };
            for t in &uppers {
                let vs = vee_by_low.get(t).into_iter().flatten();
                let ws = wye_by_low
                    .get(t)
                    .filter(|_| reach_wyes)
                    .into_iter()
                    .flatten();
                for &j in vs.chain(ws) {
                    emit(i, j);
                }
            }
        }
    })
}

/// `G_n`: the V's of `T_n`.
pub fn build_g(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Precondition("G_n needs n >= 1".into()));
    }
    assemble_tree_graph(vees(n)?.into_iter().map(Into::into).collect())
}

/// `H_n`: the V's and Y's of `T_n`.
pub fn build_h(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Precondition("H_n needs n >= 1".into()));
    }
    assemble_tree_graph(h_vertices(n)?)
}

/// `|V(G_n)| = sum_{d<n} 2^d (2^(n-d) - 1)^2`.
pub fn vee_count(n: usize) -> usize {
    (0..n).map(|d| (1usize << d) * ((1usize << (n - d)) - 1).pow(2)).sum()
}

/// Colour of `[a,b]`: the most significant bit in which `a-1` and `b-1`
/// differ. Proper on `S_n` with `ceil(lg n)` colours.
pub fn shift_msb_color(v: &IntervalVertex) -> u32 {
    let diff = ((v.a - 1) ^ (v.b - 1)) as u64;
    63 - diff.leading_zeros()
}

pub fn shift_msb_coloring(graph: &Graph) -> Result<Coloring> {
    let mut coloring = Coloring::new();
    for (id, label) in graph.labels().iter().enumerate() {
        let iv = label
            .as_interval()
            .ok_or_else(|| Error::Precondition(format!("{label} is not a shift-graph vertex")))?;
        coloring.set(id, shift_msb_color(iv));
    }
    Ok(coloring)
}

pub fn is_triangle_free<G: Adjacency>(g: &G) -> bool {
    for u in 0..g.order() {
        let nu = g.neighbors(u);
        for &v in nu.iter().filter(|&&v| v as usize > u) {
            let nv = g.neighbors(v as usize);
            let (mut i, mut j) = (0, 0);
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
    }
    true
}
