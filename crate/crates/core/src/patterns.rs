//! Relative configurations of two V's, relative positions of two
//! intervals, and strong copies of binary trees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::btree::{Node, Side, TreeOrder};
use crate::decomp::{Interval, PathDecomposition};
use crate::error::{Error, Result};
use crate::graphs::{adjacent, Vee, VertexLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PatternClass {
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
    Q6,
    Q7,
    Other,
}

impl PatternClass {
    pub const CLASSIFIED: [PatternClass; 7] = [
        PatternClass::Q1,
        PatternClass::Q2,
        PatternClass::Q3,
        PatternClass::Q4,
        PatternClass::Q5,
        PatternClass::Q6,
        PatternClass::Q7,
    ];

    /// The relation a conforming decomposition assigns to this class.
    pub fn expected_relation(self) -> Option<RelationLabel> {
        use RelationLabel::*;
        Some(match self {
            PatternClass::Q1 => OMR,
            PatternClass::Q2 => OML,
            PatternClass::Q3 => DMR,
            PatternClass::Q4 => DML,
            PatternClass::Q5 => ISF,
            PatternClass::Q6 => ISF,
            PatternClass::Q7 => DMR,
            PatternClass::Other => return None,
        })
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RelationLabel {
    OMR,
    OML,
    DMR,
    DML,
    ISF,
    IFS,
}

impl RelationLabel {
    /// The label seen with the two intervals swapped.
    pub fn swapped(self) -> Self {
        use RelationLabel::*;
        match self {
            OMR => OML,
            OML => OMR,
            DMR => DML,
            DML => DMR,
            ISF => IFS,
            IFS => ISF,
        }
    }
}

impl fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn strictly_above_on(base: &Node, t: &Node, side: Side) -> bool {
    base.is_strictly_below(t) && t.digit(base.len()) == side.digit()
}

/// Configuration of the ordered pair `(v1, v2)`. Orientations not listed
/// (mirrors, or paths sharing two or more nodes) give `Other`.
pub fn classify_pair(v1: &Vee, v2: &Vee) -> PatternClass {
    let (x1, y1, z1) = (v1.x(), v1.y(), v1.z());
    let x2 = v2.x();
    if v1 == v2 {
        return PatternClass::Other;
    }
    if z1 == x2 {
        return PatternClass::Q1;
    }
    if y1 == x2 {
        return PatternClass::Q2;
    }
    let nonadjacent = || !adjacent(&VertexLabel::Vee(*v1), &VertexLabel::Vee(*v2));
    if strictly_above_on(&z1, &x2, Side::Right) {
        return if nonadjacent() { PatternClass::Q3 } else { PatternClass::Other };
    }
    if strictly_above_on(&y1, &x2, Side::Left) {
        return if nonadjacent() { PatternClass::Q4 } else { PatternClass::Other };
    }
    if strictly_above_on(&z1, &x2, Side::Left) {
        return if nonadjacent() { PatternClass::Q5 } else { PatternClass::Other };
    }
    if strictly_above_on(&y1, &x2, Side::Right) {
        return if nonadjacent() { PatternClass::Q6 } else { PatternClass::Other };
    }
    let w = x1.meet(&x2);
    if strictly_above_on(&w, &x1, Side::Left) && strictly_above_on(&w, &x2, Side::Right) && nonadjacent() {
        return PatternClass::Q7;
    }
    PatternClass::Other
}

/// Relative position of two intervals with four distinct endpoints.
pub fn interval_relation(i1: Interval, i2: Interval) -> Result<RelationLabel> {
    use RelationLabel::*;
    let (a1, b1, a2, b2) = (i1.left, i1.right, i2.left, i2.right);
    let ends = [a1, b1, a2, b2];
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| ends[i] != ends[j]));
    if !distinct || a1 > b1 || a2 > b2 {
        return Err(Error::CoincidingEndpoints(a1, b1, a2, b2));
    }
    Ok(if a1 < a2 {
        if b1 < a2 {
            DMR
        } else if b1 < b2 {
            OMR
        } else {
            ISF
        }
    } else if b2 < a1 {
        DML
    } else if b2 < b1 {
        OML
    } else {
        IFS
    })
}

/// A pair whose intervals break the expected pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub first: String,
    pub second: String,
    pub pattern: PatternClass,
    /// `None` when the endpoints coincide.
    pub observed: Option<RelationLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PropertyReport {
    pub observed: BTreeMap<PatternClass, BTreeSet<RelationLabel>>,
    pub pair_counts: BTreeMap<PatternClass, u64>,
    /// Up to [`MAX_LISTED_VIOLATIONS`] examples.
    pub violations: Vec<Violation>,
    pub violation_count: u64,
}

pub const MAX_LISTED_VIOLATIONS: usize = 100;

impl PropertyReport {
    /// Every classified pair got its expected label and no endpoints
    /// coincided.
    pub fn is_conformant(&self) -> bool {
        self.violation_count == 0
            && self.observed.iter().all(|(q, labels)| {
                labels.iter().all(|l| Some(*l) == q.expected_relation())
            })
    }

    /// Conformant, and every one of the seven classes occurred.
    pub fn is_exactly_expected(&self) -> bool {
        self.is_conformant()
            && PatternClass::CLASSIFIED.iter().all(|q| {
                self.observed.get(q).map(|s| s.len()) == Some(1)
            })
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        for q in PatternClass::CLASSIFIED {
            let labels: Vec<String> = self
                .observed
                .get(&q)
                .map(|s| s.iter().map(|l| l.to_string()).collect())
                .unwrap_or_default();
            out.insert(q.to_string(), json!(labels));
        }
        out.insert("conformant".into(), json!(self.is_conformant()));
        out.insert("violations".into(), json!(self.violations));
        out.insert("violation_count".into(), json!(self.violation_count));
        Value::Object(out)
    }
}

/// Labels observed over all ordered pairs of distinct V's, by class.
/// Coinciding endpoints and unexpected labels are recorded as violations.
pub fn property_report(vees: &[Vee], d: &PathDecomposition) -> Result<PropertyReport> {
    if vees.len() != d.len() {
        return Err(Error::DecompositionMismatch(format!(
            "{} V's but {} intervals",
            vees.len(),
            d.len()
        )));
    }
    let mut report = PropertyReport::default();
    for (i, v1) in vees.iter().enumerate() {
        for (j, v2) in vees.iter().enumerate() {
            if i == j {
                continue;
            }
            let q = classify_pair(v1, v2);
            if q == PatternClass::Other {
                continue;
            }
            *report.pair_counts.entry(q).or_default() += 1;
            let observed = interval_relation(d.interval(i), d.interval(j)).ok();
            if let Some(label) = observed {
                report.observed.entry(q).or_default().insert(label);
            }
            if observed.is_none() || observed != q.expected_relation() {
                report.violation_count += 1;
                if report.violations.len() < MAX_LISTED_VIOLATIONS {
                    report.violations.push(Violation {
                        first: VertexLabel::Vee(*v1).key(),
                        second: VertexLabel::Vee(*v2).key(),
                        pattern: q,
                        observed,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// A nonempty prefix-closed set of nodes, kept in preorder.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryTree {
    nodes: Vec<Node>,
}

impl BinaryTree {
    pub fn new(nodes: impl IntoIterator<Item = Node>) -> Result<Self> {
        let set: BTreeSet<Node> = nodes.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Precondition("a binary tree needs a root".into()));
        }
        for node in &set {
            if let Some(parent) = node.parent() {
                if !set.contains(&parent) {
                    return Err(Error::Precondition(format!(
                        "node {node:?} present without its parent"
                    )));
                }
            }
        }
        Ok(BinaryTree {
            nodes: set.into_iter().collect(),
        })
    }

    /// The complete tree `T_k`.
    pub fn complete(k: usize) -> Result<Self> {
        Self::new(TreeOrder::new(k)?.nodes())
    }

    pub fn parse(nodes: &[&str]) -> Result<Self> {
        Self::new(nodes.iter().map(|s| s.parse()).collect::<Result<Vec<Node>>>()?)
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn height(&self) -> usize {
        self.nodes.iter().map(Node::len).max().unwrap_or(0)
    }

    pub fn index_of(&self, node: &Node) -> Option<usize> {
        self.nodes.binary_search(node).ok()
    }

    fn parent_index(&self, i: usize) -> Option<usize> {
        self.nodes[i].parent().map(|p| self.index_of(&p).unwrap())
    }
}

/// Image of each source node, aligned with `source.nodes()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrongCopyMap {
    pub source: BinaryTree,
    pub image: Vec<Node>,
}

impl StrongCopyMap {
    pub fn from_pairs(source: &BinaryTree, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut image = vec![None; source.len()];
        for (s, t) in pairs {
            let s: Node = s.parse()?;
            let i = source
                .index_of(&s)
                .ok_or_else(|| Error::Precondition(format!("{s:?} is not in the source")))?;
            image[i] = Some(t.parse()?);
        }
        if image.iter().any(Option::is_none) {
            return Err(Error::Precondition("map is not total on the source".into()));
        }
        Ok(StrongCopyMap {
            source: source.clone(),
            image: image.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn get(&self, node: &Node) -> Option<Node> {
        self.source.index_of(node).map(|i| self.image[i])
    }

    /// Image nodes, sorted.
    pub fn node_set(&self) -> BTreeSet<Node> {
        self.image.iter().copied().collect()
    }

    /// `self` applied after `inner`, where `inner` maps into `self.source`.
    pub fn compose(&self, inner: &StrongCopyMap) -> Option<StrongCopyMap> {
        let image = inner
            .image
            .iter()
            .map(|t| self.get(t))
            .collect::<Option<Vec<Node>>>()?;
        Some(StrongCopyMap {
            source: inner.source.clone(),
            image,
        })
    }
}

/// The two defining conditions, checked pairwise, plus membership in `T_n`.
pub fn is_strong_copy(map: &StrongCopyMap, n: usize) -> bool {
    let q = map.source.nodes();
    let f = &map.image;
    if f.len() != q.len() || f.iter().any(|t| t.len() > n) {
        return false;
    }
    for i in 0..q.len() {
        for j in 0..q.len() {
            if i == j {
                if f[i] != f[j] {
                    return false;
                }
                continue;
            }
            if f[i] == f[j] {
                return false;
            }
            if q[i].is_below(&q[j]) != f[i].is_below(&f[j]) {
                return false;
            }
            if q[i].is_strictly_below(&q[j]) {
                let left_in_q = q[j].digit(q[i].len()) == 0;
                let left_in_f = f[j].digit(f[i].len()) == 0;
                if left_in_q != left_in_f {
                    return false;
                }
            }
        }
    }
    true
}

pub const STRONG_COPY_SOURCE_CAP: usize = 7;

/// Every strong copy of `source` in `T_n`, ordered lexicographically by the
/// image of the root, then of each later source node in preorder.
pub fn enumerate_strong_copies(source: &BinaryTree, n: usize) -> Result<Vec<StrongCopyMap>> {
    if source.len() > STRONG_COPY_SOURCE_CAP {
        return Err(Error::CapExceeded {
            what: "strong-copy source tree",
            size: source.len(),
            cap: STRONG_COPY_SOURCE_CAP,
        });
    }
    let tree = TreeOrder::new(n)?;
    let mut all = tree.nodes();
    all.sort();
    let mut out = Vec::new();
    let mut image: Vec<Node> = Vec::with_capacity(source.len());
    extend_copies(source, &tree, &all, &mut image, &mut out);
    Ok(out)
}

fn extend_copies(
    source: &BinaryTree,
    tree: &TreeOrder,
    all: &[Node],
    image: &mut Vec<Node>,
    out: &mut Vec<StrongCopyMap>,
) {
    let i = image.len();
    if i == source.len() {
        out.push(StrongCopyMap {
            source: source.clone(),
            image: image.clone(),
        });
        return;
    }
    let candidates: Vec<Node> = match source.parent_index(i) {
        None => all.to_vec(),
        Some(p) => {
            let s = source.nodes()[i];
            let side = if s.digit(s.len() - 1) == 0 { Side::Left } else { Side::Right };
            let mut c = tree.tree_above(&image[p], side);
            c.sort();
            c
        }
    };
    for c in candidates {
        image.push(c);
        extend_copies(source, tree, all, image, out);
        image.pop();
    }
}

/// A strong copy `R` of `T_p` in `T_n` on which `color` is constant over
/// the strong copies of `source` inside `R`, or `None` if there is none.
pub fn find_monochromatic_copy<F>(
    n: usize,
    p: usize,
    source: &BinaryTree,
    color: F,
) -> Result<Option<StrongCopyMap>>
where
    F: Fn(&StrongCopyMap) -> u32,
{
    if p < source.height() {
        return Err(Error::Precondition(format!(
            "p = {p} is below the source height {}",
            source.height()
        )));
    }
    let inner = enumerate_strong_copies(source, p)?;
    let hosts = enumerate_strong_copies(&BinaryTree::complete(p)?, n)?;
    for r in hosts {
        let mut colors = inner
            .iter()
            .map(|c| color(&r.compose(c).expect("copies of the source lie in T_p")));
        let Some(first) = colors.next() else {
            return Ok(Some(r));
        };
        if colors.all(|c| c == first) {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{make_vee, vees};
    use proptest::prelude::*;

    fn nd(s: &str) -> Node {
        s.parse().unwrap()
    }

    fn v(x: &str, y: &str, z: &str) -> Vee {
        make_vee(nd(x), nd(y), nd(z)).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_pair(&v("", "0", "1"), &v("1", "10", "11")), PatternClass::Q1);
        assert_eq!(classify_pair(&v("", "0", "1"), &v("0", "00", "01")), PatternClass::Q2);
        assert_eq!(classify_pair(&v("0", "00", "01"), &v("1", "10", "11")), PatternClass::Q7);
        assert_eq!(classify_pair(&v("1", "10", "11"), &v("0", "00", "01")), PatternClass::Other);
        assert_eq!(classify_pair(&v("", "0", "1"), &v("11", "110", "111")), PatternClass::Q3);
        assert_eq!(classify_pair(&v("", "0", "1"), &v("00", "000", "001")), PatternClass::Q4);
        assert_eq!(classify_pair(&v("", "0", "1"), &v("10", "100", "101")), PatternClass::Q5);
        assert_eq!(classify_pair(&v("", "0", "1"), &v("01", "010", "011")), PatternClass::Q6);
        assert_eq!(classify_pair(&v("", "0", "1"), &v("", "0", "11")), PatternClass::Other);
    }

    #[test]
    fn relation_examples() {
        use RelationLabel::*;
        let r = |a, b, c, d| interval_relation(Interval::new(a, b), Interval::new(c, d)).unwrap();
        assert_eq!(r(1, 4, 2, 5), OMR);
        assert_eq!(r(1, 6, 2, 3), ISF);
        assert_eq!(r(1, 2, 3, 4), DMR);
        assert_eq!(r(2, 5, 1, 4), OML);
        assert_eq!(r(3, 4, 1, 2), DML);
        assert_eq!(r(2, 3, 1, 6), IFS);
        assert!(interval_relation(Interval::new(1, 3), Interval::new(3, 4)).is_err());
    }

    proptest! {
        #[test]
        fn relation_swaps(ends in proptest::sample::subsequence((0i64..40).collect::<Vec<_>>(), 4), perm in 0usize..24) {
            let mut e = ends.clone();
            // Apply the perm-th permutation of the four endpoints.
            let mut k = perm;
            for i in (1..4).rev() {
                e.swap(i, k % (i + 1));
                k /= i + 1;
            }
            let i1 = Interval::new(e[0].min(e[1]), e[0].max(e[1]));
            let i2 = Interval::new(e[2].min(e[3]), e[2].max(e[3]));
            let l = interval_relation(i1, i2).unwrap();
            prop_assert_eq!(interval_relation(i2, i1).unwrap(), l.swapped());
        }
    }

    #[test]
    fn adjacency_matches_q1_q2() {
        for n in 1..=4 {
            let vs = vees(n).unwrap();
            for a in &vs {
                for b in &vs {
                    if a == b {
                        continue;
                    }
                    let shared = a.path_nodes().iter().filter(|t| b.contains_node(t)).count();
                    let q = classify_pair(a, b);
                    if shared > 1 || q == PatternClass::Other {
                        continue;
                    }
                    let adj = adjacent(&VertexLabel::Vee(*a), &VertexLabel::Vee(*b));
                    assert_eq!(matches!(q, PatternClass::Q1 | PatternClass::Q2), adj, "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn single_vee_report_is_empty() {
        let vs = vees(1).unwrap();
        let d = PathDecomposition::new(vec![Interval::new(-1, 1)]);
        let r = property_report(&vs, &d).unwrap();
        assert!(r.observed.is_empty());
        assert!(r.is_conformant());
        assert!(!r.is_exactly_expected());
    }

    #[test]
    fn strong_copy_checks() {
        let t2 = BinaryTree::complete(2).unwrap();
        let id = StrongCopyMap {
            source: t2.clone(),
            image: t2.nodes().to_vec(),
        };
        assert!(is_strong_copy(&id, 2));
        let t1 = BinaryTree::complete(1).unwrap();
        let vee = StrongCopyMap::from_pairs(&t1, &[("", "0"), ("0", "00110"), ("1", "01")]).unwrap();
        assert!(is_strong_copy(&vee, 5));
        let bad = StrongCopyMap::from_pairs(&t1, &[("", ""), ("0", "10"), ("1", "11")]).unwrap();
        assert!(!is_strong_copy(&bad, 2));
        assert!(BinaryTree::parse(&["", "01"]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let t0 = BinaryTree::complete(0).unwrap();
        assert_eq!(enumerate_strong_copies(&t0, 2).unwrap().len(), 7);
        let t1 = BinaryTree::complete(1).unwrap();
        assert_eq!(enumerate_strong_copies(&t1, 2).unwrap().len(), 11);
        for n in 1..=6 {
            let copies = enumerate_strong_copies(&t1, n).unwrap();
            assert_eq!(copies.len(), vees(n).unwrap().len());
        }
        let big = BinaryTree::complete(3).unwrap();
        assert!(enumerate_strong_copies(&big, 3).is_err());
    }

    #[test]
    fn enumeration_is_sound_and_ordered() {
        let q = BinaryTree::parse(&["", "0", "1", "10"]).unwrap();
        let copies = enumerate_strong_copies(&q, 4).unwrap();
        assert!(copies.iter().all(|c| is_strong_copy(c, 4)));
        let keys: Vec<Vec<Node>> = copies.iter().map(|c| c.image.clone()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let unique: BTreeSet<_> = keys.iter().collect();
        assert_eq!(unique.len(), keys.len());
    }

    // Brute force over all injective maps from a small source into T_n.
    #[test]
    fn enumeration_is_complete() {
        let q = BinaryTree::parse(&["", "1", "10"]).unwrap();
        let n = 3;
        let all = TreeOrder::new(n).unwrap().nodes();
        let mut count = 0;
        for a in &all {
            for b in &all {
                for c in &all {
                    let m = StrongCopyMap {
                        source: q.clone(),
                        image: vec![*a, *b, *c],
                    };
                    count += usize::from(is_strong_copy(&m, n));
                }
            }
        }
        assert_eq!(enumerate_strong_copies(&q, n).unwrap().len(), count);
    }

    #[test]
    fn constant_coloring_returns_first_copy() {
        let t0 = BinaryTree::complete(0).unwrap();
        let hit = find_monochromatic_copy(3, 1, &t0, |_| 0).unwrap().unwrap();
        let first = enumerate_strong_copies(&BinaryTree::complete(1).unwrap(), 3).unwrap()[0].clone();
        assert_eq!(hit, first);
        let t1 = BinaryTree::complete(1).unwrap();
        assert!(find_monochromatic_copy(3, 0, &t1, |_| 0).is_err());
    }
}
