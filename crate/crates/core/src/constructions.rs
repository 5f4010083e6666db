//! Explicit decompositions with bag colourings, and embeddings of shift
//! graphs into `G_n` and `H_n`.

use std::collections::{BTreeMap, HashMap};

use crate::btree::{Embedding, Node, TreeOrder};
use crate::decomp::{Coloring, Interval, PathDecomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graphs::{adjacent, h_vertices, make_vee, make_wye, shift_vertices, vees, Vee, VertexLabel, Wye};

/// Intervals of `S_n` taken literally, with a 2-colouring of each bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftDecomposition {
    pub n: usize,
    pub decomposition: PathDecomposition,
    /// Colouring of the bag at each position `1..=n`.
    pub bag_colorings: Vec<(i64, Coloring)>,
}

/// At position `i`, `[a,b]` gets colour 1 when `a < i` and colour 2 when
/// `a = i`. Each class is independent: an edge needs one interval to end
/// where the other starts.
pub fn shift_path_decomposition(n: usize) -> Result<ShiftDecomposition> {
    if n < 2 {
        return Err(Error::Precondition(format!("S_n needs n >= 2, got {n}")));
    }
    let verts = shift_vertices(n);
    let decomposition = PathDecomposition::new(verts.iter().map(|v| Interval::new(v.a, v.b)).collect());
    let bag_colorings = (1..=n as i64)
        .map(|i| {
            let c = Coloring::from_pairs(
                verts
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.a <= i && i <= v.b)
                    .map(|(id, v)| (id, if v.a < i { 1 } else { 2 })),
            );
            (i, c)
        })
        .collect();
    Ok(ShiftDecomposition {
        n,
        decomposition,
        bag_colorings,
    })
}

/// The tree decomposition of `H_n` hosted on `T_n` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalDecomposition {
    pub n: usize,
    /// Host nodes are the nodes of `T_n` in level order.
    pub host_nodes: Vec<Node>,
    pub decomposition: TreeDecomposition,
    /// One colouring per host node, aligned with `host_nodes`.
    pub bag_colorings: Vec<Coloring>,
}

/// Nearest point of a vertex to the root that separates its two arms: the
/// low point of a V, the branch point of a Y.
fn branch_point(label: &VertexLabel) -> Node {
    match label {
        VertexLabel::Vee(v) => v.x(),
        VertexLabel::Wye(w) => w.branch(),
        _ => unreachable!("H_n has only V's and Y's"),
    }
}

fn tree_nodes(label: &VertexLabel) -> Vec<Node> {
    match label {
        VertexLabel::Vee(v) => v.path_nodes(),
        VertexLabel::Wye(w) => w.subtree_nodes(),
        _ => unreachable!("H_n has only V's and Y's"),
    }
}

/// Bag at `t`: every V or Y of `T_n` that uses node `t`. Within the bag,
/// colour 1 (stem) goes to members whose branch point is at or above `t`,
/// colour 2 to members whose branch point is strictly below `t`.
pub fn natural_tree_decomposition_h(n: usize) -> Result<NaturalDecomposition> {
    if n < 1 {
        return Err(Error::Precondition(format!("H_n needs n >= 1, got {n}")));
    }
    let tree = TreeOrder::new(n)?;
    let host_nodes = tree.nodes();
    let slot: HashMap<Node, usize> = host_nodes.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let labels = h_vertices(n)?;
    let mut bags: Vec<Vec<usize>> = vec![Vec::new(); host_nodes.len()];
    let mut colorings = vec![Coloring::new(); host_nodes.len()];
    for (id, label) in labels.iter().enumerate() {
        let b = branch_point(label);
        for t in tree_nodes(label) {
            let s = slot[&t];
            bags[s].push(id);
            colorings[s].set(id, if t.is_below(&b) { 1 } else { 2 });
        }
    }
    let edges = host_nodes
        .iter()
        .enumerate()
        .filter_map(|(i, t)| t.parent().map(|p| (slot[&p], i)))
        .collect();
    let names = host_nodes.iter().map(|t| t.to_string()).collect();
    Ok(NaturalDecomposition {
        n,
        decomposition: TreeDecomposition::new(names, edges, bags)?,
        host_nodes,
        bag_colorings: colorings,
    })
}

/// Path decomposition of `G_n` read off the geometric drawing of `T_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricDecomposition {
    pub n: usize,
    pub shrink: bool,
    pub embedding: Embedding,
    /// The V's in id order of `build_g(n)`.
    pub vees: Vec<Vee>,
    pub decomposition: PathDecomposition,
}

/// `(x,y,z)` gets `[pos(y), pos(z)]`, or `[pos(y)+1, pos(z)-1]` when shrunk.
pub fn geometric_path_decomposition_g(n: usize, shrink: bool) -> Result<GeometricDecomposition> {
    if n < 1 {
        return Err(Error::Precondition(format!("G_n needs n >= 1, got {n}")));
    }
    let embedding = Embedding::new(n)?;
    let vees = vees(n)?;
    let e = i64::from(shrink) * embedding.epsilon();
    let decomposition = PathDecomposition::new(
        vees.iter()
            .map(|v| Interval::new(embedding.pos(&v.y()) + e, embedding.pos(&v.z()) - e))
            .collect(),
    );
    Ok(GeometricDecomposition {
        n,
        shrink,
        embedding,
        vees,
        decomposition,
    })
}

impl GeometricDecomposition {
    /// Ids of the V's whose interval contains `pos(x0)`.
    pub fn bag_at_node(&self, x0: &Node) -> Result<Vec<usize>> {
        if x0.len() > self.n {
            return Err(Error::Precondition(format!("{x0:?} is not a node of T_{}", self.n)));
        }
        let p = self.embedding.pos(x0);
        Ok((0..self.vees.len())
            .filter(|&v| self.decomposition.interval(v).contains(p))
            .collect())
    }

    /// Edges of `G_n` that fail to meet in the decomposition, without
    /// building the graph. The V's adjacent to `V` through one of its
    /// endpoints `e` are exactly those with low point `e`, so it is enough to
    /// compare `V` against the extreme endpoints of that group.
    pub fn uncovered_edges(&self) -> Vec<(usize, usize)> {
        let mut by_low: HashMap<Node, Vec<usize>> = HashMap::new();
        for (i, v) in self.vees.iter().enumerate() {
            by_low.entry(v.x()).or_default().push(i);
        }
        let d = &self.decomposition;
        let span: HashMap<Node, (i64, i64)> = by_low
            .iter()
            .map(|(x, ids)| {
                let max_left = ids.iter().map(|&i| d.interval(i).left).max().unwrap();
                let min_right = ids.iter().map(|&i| d.interval(i).right).min().unwrap();
                (*x, (max_left, min_right))
            })
            .collect();
        let mut out = Vec::new();
        for (i, v) in self.vees.iter().enumerate() {
            let iv = d.interval(i);
            for e in v.endpoints() {
                let Some(&(max_left, min_right)) = span.get(&e) else {
                    continue;
                };
                if iv.right >= max_left && iv.left <= min_right {
                    continue;
                }
                for &j in &by_low[&e] {
                    if !iv.intersects(&d.interval(j)) {
                        out.push((i.min(j), i.max(j)));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// The bag at `pos(x0)` split by where each member's low point sits:
/// `C1` left of `x0`, `C2` right of it, `C3` exactly at `x0`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BagPartition {
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
    pub c3: Vec<usize>,
}

pub fn bag_three_partition(gd: &GeometricDecomposition, x0: &Node) -> Result<BagPartition> {
    let p = gd.embedding.pos(x0);
    let mut out = BagPartition::default();
    for v in gd.bag_at_node(x0)? {
        let q = gd.embedding.pos(&gd.vees[v].x());
        match q.cmp(&p) {
            std::cmp::Ordering::Less => out.c1.push(v),
            std::cmp::Ordering::Greater => out.c2.push(v),
            std::cmp::Ordering::Equal => out.c3.push(v),
        }
    }
    Ok(out)
}

fn two_coloring_of(part: &BagPartition) -> Coloring {
    Coloring::from_pairs(
        part.c1
            .iter()
            .chain(&part.c3)
            .map(|&v| (v, 1))
            .chain(part.c2.iter().map(|&v| (v, 2))),
    )
}

/// Colour 1 on `C1 ∪ C3`, colour 2 on `C2`. Only proper for the shrunk
/// decomposition, so the unshrunk one is rejected.
pub fn bag_two_coloring_g(gd: &GeometricDecomposition, x0: &Node) -> Result<Coloring> {
    if !gd.shrink {
        return Err(Error::RequiresShrunk);
    }
    Ok(two_coloring_of(&bag_three_partition(gd, x0)?))
}

/// Monochromatic edges of a partial colouring of `G_n`'s V's, found by
/// grouping the coloured V's by low point instead of scanning adjacency.
pub fn monochromatic_edges_g(vees: &[Vee], coloring: &Coloring) -> Vec<(usize, usize)> {
    let mut by_low: HashMap<(Node, u32), Vec<usize>> = HashMap::new();
    for (v, c) in coloring.iter() {
        by_low.entry((vees[v].x(), c)).or_default().push(v);
    }
    let mut out = Vec::new();
    for (v, c) in coloring.iter() {
        for e in vees[v].endpoints() {
            if let Some(ws) = by_low.get(&(e, c)) {
                out.extend(ws.iter().map(|&w| (v.min(w), v.max(w))));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Independence failures of the two-class colouring over every node of
/// `T_n`, for either mode. Empty for the shrunk decomposition.
pub fn two_coloring_failures(gd: &GeometricDecomposition) -> Result<Vec<(Node, (usize, usize))>> {
    let mut out = Vec::new();
    for x0 in TreeOrder::new(gd.n)?.nodes() {
        let c = two_coloring_of(&bag_three_partition(gd, &x0)?);
        out.extend(monochromatic_edges_g(&gd.vees, &c).into_iter().map(|e| (x0, e)));
    }
    Ok(out)
}

/// Five V's of `T_n` inducing a 5-cycle, all of whose unshrunk intervals
/// contain the position of `witness`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveCycle {
    pub vees: [Vee; 5],
    pub witness: Node,
    pub witness_pos: i64,
}

pub fn five_cycle_example(n: usize) -> Result<FiveCycle> {
    if n < 4 {
        return Err(Error::Precondition(format!("the 5-cycle needs n >= 4, got {n}")));
    }
    let v = |x: &str, y: &str, z: &str| -> Result<Vee> { make_vee(x.parse()?, y.parse()?, z.parse()?) };
    let vees = [
        v("", "0", "1")?,
        v("1", "10", "11")?,
        v("10", "100", "101")?,
        v("101", "1010", "1011")?,
        v("1", "101", "11")?,
    ];
    for i in 0..5 {
        for j in i + 1..5 {
            let cyclic = j == i + 1 || (i == 0 && j == 4);
            if adjacent(&vees[i].into(), &vees[j].into()) != cyclic {
                return Err(Error::Precondition(format!(
                    "V{} and V{} break the 5-cycle",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let emb = Embedding::new(n)?;
    let witness: Node = "101".parse()?;
    let witness_pos = emb.pos(&witness);
    for (i, vee) in vees.iter().enumerate() {
        if !(emb.pos(&vee.y()) <= witness_pos && witness_pos <= emb.pos(&vee.z())) {
            return Err(Error::Precondition(format!("V{} misses the witness", i + 1)));
        }
    }
    Ok(FiveCycle {
        vees,
        witness,
        witness_pos,
    })
}

/// `V[i,j] = (c_i, c_i·0, c_j)` with `c_i = 1^(i-1)`, a copy of `S_p` in `G_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftEmbeddingG {
    pub p: usize,
    pub n: usize,
    pub vees: BTreeMap<(usize, usize), Vee>,
}

fn ones(k: usize) -> Result<Node> {
    Node::ROOT.extend(&"1".repeat(k))
}

pub fn embed_shift_in_g(p: usize, n: usize) -> Result<ShiftEmbeddingG> {
    if p < 2 {
        return Err(Error::Precondition(format!("S_p needs p >= 2, got {p}")));
    }
    if n + 1 < p {
        return Err(Error::Precondition(format!("S_{p} needs T_n with n >= {}, got {n}", p - 1)));
    }
    let mut out = BTreeMap::new();
    for i in 1..=p {
        for j in i + 1..=p {
            let c_i = ones(i - 1)?;
            out.insert((i, j), make_vee(c_i, c_i.extend("0")?, ones(j - 1)?)?);
        }
    }
    Ok(ShiftEmbeddingG { p, n, vees: out })
}

/// Pairs `((i,j),(k,l))` where adjacency of the images differs from
/// adjacency of `[i,j]` and `[k,l]` in the shift graph.
fn shift_mismatches<T: Copy + Into<VertexLabel>>(
    family: &BTreeMap<(usize, usize), T>,
) -> Vec<((usize, usize), (usize, usize))> {
    let mut out = Vec::new();
    for (&(i, j), &a) in family {
        for (&(k, l), &b) in family {
            if (i, j) >= (k, l) {
                continue;
            }
            let shift = j == k || l == i;
            if adjacent(&a.into(), &b.into()) != shift {
                out.push(((i, j), (k, l)));
            }
        }
    }
    out
}

impl ShiftEmbeddingG {
    pub fn mismatches(&self) -> Vec<((usize, usize), (usize, usize))> {
        shift_mismatches(&self.vees)
    }

    pub fn is_isomorphic(&self) -> bool {
        self.vees.values().all(|v| v.depth() <= self.n) && self.mismatches().is_empty()
    }
}

/// The family `Y[i,j]` of `H_n` forming a copy of `S_m`, with the V's
/// `V_j` and `V'_j` that each `Y[i,j]` touches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftEmbeddingH {
    pub m: usize,
    pub n: usize,
    /// `x_1..x_m`.
    pub xs: Vec<Node>,
    /// `w_j` keyed by `j` in `2..=m`.
    pub ws: BTreeMap<usize, Node>,
    /// `V_j = (x_j, x_j·0, x_j·1)`.
    pub vees: BTreeMap<usize, Vee>,
    /// `V'_j = (w_j, w_j·0, w_j·1)`.
    pub primes: BTreeMap<usize, Vee>,
    pub wyes: BTreeMap<(usize, usize), Wye>,
}

/// `x_1 = 0`, `x_(i+1) = x_i·110`, `w_j = x_(j-1)·111` and
/// `Y[i,j]` has low leaf `x_i` and upper leaves `x_j`, `w_j`.
pub fn embed_shift_in_h(m: usize, n: usize) -> Result<ShiftEmbeddingH> {
    if m < 2 {
        return Err(Error::Precondition(format!("S_m needs m >= 2, got {m}")));
    }
    if n + 1 < 3 * m {
        return Err(Error::Precondition(format!("S_{m} needs T_n with n >= {}, got {n}", 3 * m - 1)));
    }
    let mut xs = vec![Node::ROOT.extend("0")?];
    for i in 1..m {
        let next = xs[i - 1].extend("110")?;
        xs.push(next);
    }
    let mut ws = BTreeMap::new();
    for j in 2..=m {
        ws.insert(j, xs[j - 2].extend("111")?);
    }
    let around = |t: Node| -> Result<Vee> { make_vee(t, t.extend("0")?, t.extend("1")?) };
    let mut vees = BTreeMap::new();
    for (i, x) in xs.iter().enumerate() {
        vees.insert(i + 1, around(*x)?);
    }
    let mut primes = BTreeMap::new();
    for (&j, w) in &ws {
        primes.insert(j, around(*w)?);
    }
    let mut wyes = BTreeMap::new();
    for i in 1..=m {
        for j in i + 1..=m {
            wyes.insert((i, j), make_wye(xs[i - 1], xs[j - 1], ws[&j])?);
        }
    }
    Ok(ShiftEmbeddingH {
        m,
        n,
        xs,
        ws,
        vees,
        primes,
        wyes,
    })
}

impl ShiftEmbeddingH {
    pub fn mismatches(&self) -> Vec<((usize, usize), (usize, usize))> {
        shift_mismatches(&self.wyes)
    }

    /// `Y[i,j]` pairs not adjacent to `V_j` or to `V'_j`.
    pub fn missing_attachments(&self) -> Vec<(usize, usize)> {
        self.wyes
            .iter()
            .filter(|(&(_, j), y)| {
                let y = VertexLabel::Wye(**y);
                !adjacent(&y, &self.vees[&j].into()) || !adjacent(&y, &self.primes[&j].into())
            })
            .map(|(&k, _)| k)
            .collect()
    }

    pub fn is_isomorphic(&self) -> bool {
        let fits = self.wyes.values().all(|y| y.depth() <= self.n)
            && self.vees.values().chain(self.primes.values()).all(|v| v.depth() <= self.n);
        fits && self.mismatches().is_empty()
    }
}
