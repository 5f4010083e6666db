//! Exact chromatic number and exact path-chromatic number for small graphs.
//!
//! `chromatic_number` splits the input into components and settles most of
//! them in polynomial time (edgeless, bipartite, or a DSATUR colouring that
//! meets the clique/odd-cycle bound). Only the remaining components go to
//! branch-and-bound, and those are subject to the vertex cap.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::decomp::{Coloring, Interval, PathDecomposition};
use crate::error::{Error, Result};
use crate::graphs::{AdjList, Adjacency, Graph};

pub const DEFAULT_VERTEX_CAP: usize = 64;
pub const PCHR_DP_CAP: usize = 22;
pub const PCHR_BRUTE_CAP: usize = 9;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Branch-and-bound nodes plus DP states visited.
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    Coloring(Coloring),
    PathDecomposition {
        order: Vec<usize>,
        decomposition: PathDecomposition,
        /// One colouring per introduction step, of the bag at that step.
        bag_colorings: Vec<Coloring>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub value: usize,
    pub certificate: Certificate,
    pub stats: SolveStats,
}

impl SolveResult {
    /// JSON with vertex keys in place of ids.
    pub fn to_json(&self, g: &Graph) -> Value {
        let certificate = match &self.certificate {
            Certificate::Coloring(c) => json!({ "coloring": c.to_keyed(g) }),
            Certificate::PathDecomposition {
                order,
                decomposition,
                bag_colorings,
            } => json!({
                "order": order.iter().map(|&v| g.key(v)).collect::<Vec<_>>(),
                "decomposition": decomposition.to_json(g),
                "bag_colorings": bag_colorings.iter().map(|c| c.to_keyed(g)).collect::<Vec<_>>(),
            }),
        };
        json!({
            "value": self.value,
            "certificate": certificate,
            "stats": self.stats,
        })
    }
}

/// Exact colouring with a size cap on the exponential phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticSolver {
    pub vertex_cap: usize,
}

impl Default for ChromaticSolver {
    fn default() -> Self {
        ChromaticSolver {
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl ChromaticSolver {
    pub fn with_cap(vertex_cap: usize) -> Self {
        ChromaticSolver { vertex_cap }
    }

    pub fn chromatic<G: Adjacency>(&self, g: &G) -> Result<SolveResult> {
        let mut stats = SolveStats::default();
        let mut colors = vec![0u32; g.order()];
        let mut value = 0;
        for comp in components(g) {
            let local = localize(g, &comp);
            let (k, col) = self.component_chromatic(&local, &mut stats)?;
            value = value.max(k);
            for (i, &v) in comp.iter().enumerate() {
                colors[v] = col[i];
            }
        }
        Ok(SolveResult {
            value,
            certificate: Certificate::Coloring(Coloring::from_vec(&colors)),
            stats,
        })
    }

    pub fn chromatic_value<G: Adjacency>(&self, g: &G) -> Result<usize> {
        Ok(self.chromatic(g)?.value)
    }

    /// A proper colouring with at most `k` colours, or `None` when the
    /// chromatic number exceeds `k`.
    pub fn k_coloring<G: Adjacency>(&self, g: &G, k: usize) -> Result<Option<Coloring>> {
        let mut colors = vec![0u32; g.order()];
        let mut stats = SolveStats::default();
        for comp in components(g) {
            let local = localize(g, &comp);
            let Some(col) = self.component_k_coloring(&local, k, &mut stats)? else {
                return Ok(None);
            };
            for (i, &v) in comp.iter().enumerate() {
                colors[v] = col[i];
            }
        }
        Ok(Some(Coloring::from_vec(&colors)))
    }

    fn component_chromatic(&self, g: &AdjList, stats: &mut SolveStats) -> Result<(usize, Vec<u32>)> {
        let n = g.order();
        if (0..n).all(|v| g.degree(v) == 0) {
            return Ok((1, vec![0; n]));
        }
        if let Some(col) = two_coloring(g) {
            return Ok((2, col));
        }
        let lower = greedy_clique(g).max(3);
        let (upper, best) = dsatur(g);
        if upper <= lower {
            return Ok((upper, best));
        }
        self.check_cap(n)?;
        for k in lower..upper {
            if let Some(col) = k_color_search(g, k, stats) {
                return Ok((k, col));
            }
        }
        Ok((upper, best))
    }

    fn component_k_coloring(
        &self,
        g: &AdjList,
        k: usize,
        stats: &mut SolveStats,
    ) -> Result<Option<Vec<u32>>> {
        let n = g.order();
        let edgeless = (0..n).all(|v| g.degree(v) == 0);
        if k == 0 {
            return Ok(None);
        }
        if edgeless {
            return Ok(Some(vec![0; n]));
        }
        if k == 1 {
            return Ok(None);
        }
        if let Some(col) = two_coloring(g) {
            return Ok(Some(col));
        }
        if k == 2 || greedy_clique(g) > k {
            return Ok(None);
        }
        let (upper, best) = dsatur(g);
        if upper <= k {
            return Ok(Some(best));
        }
        self.check_cap(n)?;
        Ok(k_color_search(g, k, stats))
    }

    fn check_cap(&self, size: usize) -> Result<()> {
        if size > self.vertex_cap {
            return Err(Error::CapExceeded {
                what: "component needing branch-and-bound",
                size,
                cap: self.vertex_cap,
            });
        }
        Ok(())
    }
}

pub fn chromatic_number<G: Adjacency>(g: &G) -> Result<SolveResult> {
    ChromaticSolver::default().chromatic(g)
}

pub fn is_k_colorable<G: Adjacency>(g: &G, k: usize) -> Result<Option<Coloring>> {
    ChromaticSolver::default().k_coloring(g, k)
}

/// Connected components, each sorted ascending, ordered by smallest vertex.
pub fn components<G: Adjacency>(g: &G) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn localize<G: Adjacency>(g: &G, comp: &[usize]) -> AdjList {
    if comp.len() == g.order() {
        return AdjList((0..g.order()).map(|v| g.neighbors(v).to_vec()).collect());
    }
    let local: HashMap<usize, u32> = comp.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    AdjList(
        comp.iter()
            .map(|&v| g.neighbors(v).iter().map(|w| local[&(*w as usize)]).collect())
            .collect(),
    )
}

/// BFS two-colouring, `None` when an odd cycle exists.
pub(crate) fn two_coloring<G: Adjacency>(g: &G) -> Option<Vec<u32>> {
    let n = g.order();
    let mut col = vec![u32::MAX; n];
    let mut queue = Vec::new();
    for s in 0..n {
        if col[s] != u32::MAX {
            continue;
        }
        col[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in g.neighbors(u) {
                let w = w as usize;
                if col[w] == u32::MAX {
                    col[w] = 1 - col[u];
                    queue.push(w);
                } else if col[w] == col[u] {
                    return None;
                }
            }
        }
    }
    Some(col)
}

/// Size of a clique grown greedily from each of the highest-degree vertices.
fn greedy_clique(g: &AdjList) -> usize {
    let n = g.order();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut best = usize::from(n > 0);
    for &s in by_degree.iter().take(64) {
        if g.degree(s) + 1 <= best {
            break;
        }
        let mut cand: Vec<usize> = g.neighbors(s).iter().map(|&w| w as usize).collect();
        cand.sort_by_key(|&v| (Reverse(g.degree(v)), v));
        let mut clique = vec![s];
        for c in cand {
            if clique
                .iter()
                .all(|&m| g.neighbors(m).binary_search(&(c as u32)).is_ok())
            {
                clique.push(c);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// DSATUR greedy colouring; returns the number of colours and the colouring.
fn dsatur(g: &AdjList) -> (usize, Vec<u32>) {
    let n = g.order();
    let mut color = vec![u32::MAX; n];
    // Distinct neighbour colours, kept small and sorted.
    let mut seen: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut heap: BinaryHeap<(usize, usize, Reverse<usize>)> =
        (0..n).map(|v| (0, g.degree(v), Reverse(v))).collect();
    let mut used = 0u32;
    while let Some((sat, deg, Reverse(v))) = heap.pop() {
        if color[v] != u32::MAX || sat != seen[v].len() {
            continue;
        }
        let _ = deg;
        let c = (0..).find(|c| seen[v].binary_search(c).is_err()).unwrap();
        color[v] = c;
        used = used.max(c + 1);
        for &w in g.neighbors(v) {
            let w = w as usize;
            if color[w] != u32::MAX {
                continue;
            }
            if let Err(pos) = seen[w].binary_search(&c) {
                seen[w].insert(pos, c);
                let uncolored_deg = g
                    .neighbors(w)
                    .iter()
                    .filter(|&&x| color[x as usize] == u32::MAX)
                    .count();
                heap.push((seen[w].len(), uncolored_deg, Reverse(w)));
            }
        }
    }
    (used as usize, color)
}

/// Exact `k`-colourability by backtracking with DSATUR branching and
/// colour-symmetry breaking.
fn k_color_search(g: &AdjList, k: usize, stats: &mut SolveStats) -> Option<Vec<u32>> {
    assert!(k <= 64, "colour masks hold at most 64 colours");
    let n = g.order();
    let mut color = vec![u32::MAX; n];
    fn neighbor_mask(g: &AdjList, color: &[u32], v: usize) -> u64 {
        g.neighbors(v)
            .iter()
            .filter_map(|&w| {
                let c = color[w as usize];
                (c != u32::MAX).then(|| 1u64 << c)
            })
            .fold(0, |a, b| a | b)
    }
    fn go(g: &AdjList, k: usize, color: &mut [u32], used: usize, stats: &mut SolveStats) -> bool {
        stats.nodes += 1;
        let mut pick: Option<(u32, usize, usize, u64)> = None;
        for v in 0..g.order() {
            if color[v] != u32::MAX {
                continue;
            }
            let mask = neighbor_mask(g, color, v);
            let sat = mask.count_ones();
            let free_deg = g
                .neighbors(v)
                .iter()
                .filter(|&&w| color[w as usize] == u32::MAX)
                .count();
            let better = match pick {
                None => true,
                Some((s, d, _, _)) => sat > s || (sat == s && free_deg > d),
            };
            if better {
                pick = Some((sat, free_deg, v, mask));
            }
        }
        let Some((sat, _, v, mask)) = pick else {
            return true;
        };
        if sat as usize >= k {
            return false;
        }
        let limit = k.min(used + 1);
        for c in 0..limit {
            if mask & (1u64 << c) != 0 {
                continue;
            }
            color[v] = c as u32;
            if go(g, k, color, used.max(c + 1), stats) {
                return true;
            }
        }
        color[v] = u32::MAX;
        false
    }
    go(g, k, &mut color, 0, stats).then_some(color)
}

fn dense_masks(g: &Graph, cap: usize, what: &'static str) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded { what, size: n, cap });
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect())
}

fn mask_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

fn mask_chromatic(adj: &[u32], mask: u32, memo: &mut HashMap<u32, usize>) -> Result<usize> {
    let members = mask_members(mask);
    if members.len() <= 1 {
        return Ok(members.len());
    }
    if members.iter().all(|&v| adj[v] & mask == 0) {
        return Ok(1);
    }
    if let Some(&k) = memo.get(&mask) {
        return Ok(k);
    }
    let local = AdjList(
        members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| adj[v] & (1 << w) != 0)
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect(),
    );
    let k = ChromaticSolver::default().chromatic_value(&local)?;
    memo.insert(mask, k);
    Ok(k)
}

/// Minimal intervals for an introduction order: vertex `u` lives from its
/// own step to the last step among its closed neighbourhood.
pub fn minimal_intervals(g: &Graph, order: &[usize]) -> PathDecomposition {
    let mut step = vec![0i64; g.vertex_count()];
    for (t, &v) in order.iter().enumerate() {
        step[v] = t as i64;
    }
    PathDecomposition::new(
        (0..g.vertex_count())
            .map(|u| {
                let last = g
                    .neighbors(u)
                    .iter()
                    .map(|&w| step[w as usize])
                    .fold(step[u], i64::max);
                Interval::new(step[u], last)
            })
            .collect(),
    )
}

fn bag_colorings(g: &Graph, d: &PathDecomposition, steps: usize) -> Result<Vec<Coloring>> {
    let solver = ChromaticSolver::default();
    (0..steps as i64)
        .map(|t| {
            let bag = d.bag_at(t);
            let SolveResult { certificate, .. } = solver.chromatic(&g.induced(&bag))?;
            let Certificate::Coloring(local) = certificate else {
                unreachable!("colouring solver returns colourings");
            };
            Ok(Coloring::from_pairs(
                bag.iter().enumerate().map(|(i, &v)| (v, local.get(i).unwrap())),
            ))
        })
        .collect()
}

/// Exact path-chromatic number by dynamic programming over the set of
/// already-introduced vertices.
///
/// Introducing `v` after the set `T` creates the bag `{v}` plus every vertex
/// of `T` with a neighbour outside `T`, so the best value for a prefix set
/// `S` is the minimum over `v` of the larger of the value for `S - v` and
/// the chromatic number of that bag.
pub fn pchr_exact(g: &Graph) -> Result<SolveResult> {
    let adj = dense_masks(g, PCHR_DP_CAP, "graph for the subset DP")?;
    let n = adj.len();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let states = 1usize << n;
    let frontier: Vec<u32> = (0..states as u32)
        .map(|t| {
            (0..n)
                .filter(|&u| t & (1 << u) != 0 && adj[u] & !t != 0)
                .fold(0, |m, u| m | (1 << u))
        })
        .collect();
    let mut best = vec![u8::MAX; states];
    let mut choice = vec![0u8; states];
    best[0] = 0;
    let mut memo = HashMap::new();
    let mut stats = SolveStats::default();
    for s in 1..states as u32 {
        stats.nodes += 1;
        let mut value = u8::MAX;
        let mut pick = 0u8;
        for v in 0..n {
            if s & (1 << v) == 0 {
                continue;
            }
            let rest = s & !(1 << v);
            let prior = best[rest as usize];
            if prior >= value {
                continue;
            }
            let chi = mask_chromatic(&adj, frontier[rest as usize] | (1 << v), &mut memo)? as u8;
            let here = prior.max(chi);
            if here < value {
                value = here;
                pick = v as u8;
            }
        }
        best[s as usize] = value;
        choice[s as usize] = pick;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let decomposition = minimal_intervals(g, &order);
    let bag_colorings = bag_colorings(g, &decomposition, n)?;
    Ok(SolveResult {
        value: best[full as usize] as usize,
        certificate: Certificate::PathDecomposition {
            order,
            decomposition,
            bag_colorings,
        },
        stats,
    })
}

/// Test oracle: the best introduction order found by trying all of them.
pub fn pchr_brute_permutations(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > PCHR_BRUTE_CAP {
        return Err(Error::CapExceeded {
            what: "graph for permutation search",
            size: n,
            cap: PCHR_BRUTE_CAP,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let solver = ChromaticSolver::default();
    let mut memo: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut best = usize::MAX;
    for order in (0..n).permutations(n) {
        let d = minimal_intervals(g, &order);
        let mut worst = 0;
        for t in 0..n as i64 {
            let bag = d.bag_at(t);
            let chi = match memo.get(&bag) {
                Some(&k) => k,
                None => {
                    let k = solver.chromatic_value(&g.induced(&bag))?;
                    memo.insert(bag, k);
                    k
                }
            };
            worst = worst.max(chi);
            if worst >= best {
                break;
            }
        }
        best = best.min(worst);
    }
    Ok(best)
}
