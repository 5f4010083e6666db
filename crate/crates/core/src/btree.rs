//! The complete binary tree `T_n` as the poset of binary strings of length
//! at most `n`, ordered by the prefix relation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Longest string a [`Node`] can hold.
pub const MAX_NODE_LEN: usize = 63;

/// Largest `n` for which [`Embedding`] coordinates fit in an `i64`.
pub const MAX_EMBED_DEPTH: usize = 30;

/// A binary string; the empty string is the root (least element).
///
/// Digits are packed into `bits` with the first digit as the most
/// significant of the low `len` bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Node {
    len: u8,
    bits: u64,
}

/// Which subtree above a node another node lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn digit(self) -> u8 {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }
}

impl Node {
    pub const ROOT: Node = Node { len: 0, bits: 0 };

    pub fn root() -> Self {
        Self::ROOT
    }

    /// Builds a node from its digits. Fails on a digit other than 0/1.
    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        if digits.len() > MAX_NODE_LEN {
            return Err(Error::NodeTooLong(
                digits.iter().map(|d| char::from(b'0' + d)).collect(),
            ));
        }
        let mut node = Node::ROOT;
        for &d in digits {
            node = match d {
                0 => node.child(Side::Left),
                1 => node.child(Side::Right),
                _ => return Err(Error::InvalidNode(format!("{digits:?}"))),
            };
        }
        Ok(node)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_root(&self) -> bool {
        self.len == 0
    }

    /// Digit at 0-based position `i`.
    pub fn digit(&self, i: usize) -> u8 {
        assert!(i < self.len(), "digit index {i} out of range for {self}");
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    pub fn digits(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(|i| self.digit(i))
    }

    /// Appends one digit.
    pub fn child(&self, side: Side) -> Self {
        assert!(self.len() < MAX_NODE_LEN, "node too long to extend");
        Node {
            len: self.len + 1,
            bits: (self.bits << 1) | u64::from(side.digit()),
        }
    }

    /// Appends a digit string such as `"110"`.
    pub fn extend(&self, suffix: &str) -> Result<Self> {
        let tail: Node = suffix.parse()?;
        if self.len() + tail.len() > MAX_NODE_LEN {
            return Err(Error::NodeTooLong(format!("{self}{tail}")));
        }
        Ok(Node {
            len: self.len + tail.len,
            bits: (self.bits << tail.len) | tail.bits,
        })
    }

    pub fn parent(&self) -> Option<Self> {
        (!self.is_root()).then(|| self.prefix(self.len() - 1))
    }

    /// The initial segment of length `k` (`k <= len`).
    pub fn prefix(&self, k: usize) -> Self {
        assert!(k <= self.len());
        Node {
            len: k as u8,
            bits: if k == 0 { 0 } else { self.bits >> (self.len() - k) },
        }
    }

    /// All prefixes from the root up to and including `self`.
    pub fn ancestors_inclusive(&self) -> impl Iterator<Item = Node> + '_ {
        (0..=self.len()).map(|k| self.prefix(k))
    }

    /// `self <= other` in the prefix order.
    pub fn is_below(&self, other: &Node) -> bool {
        self.len <= other.len && other.prefix(self.len()) == *self
    }

    pub fn is_strictly_below(&self, other: &Node) -> bool {
        self.len < other.len && self.is_below(other)
    }

    pub fn comparable(&self, other: &Node) -> bool {
        self.is_below(other) || other.is_below(self)
    }

    /// Longest common prefix, the greatest lower bound in `T_n`.
    pub fn meet(&self, other: &Node) -> Node {
        let m = self.len.min(other.len) as usize;
        let a = self.prefix(m);
        let b = other.prefix(m);
        let diff = a.bits ^ b.bits;
        if diff == 0 {
            return a;
        }
        // Highest differing bit within the m-bit window.
        let highest = 63 - diff.leading_zeros() as usize;
        a.prefix(m - 1 - highest)
    }

    /// Level-order index: the root is 0, its children 1 and 2, and so on.
    pub fn heap_index(&self) -> usize {
        (1usize << self.len()) - 1 + self.bits as usize
    }

    /// Key used in DOT labels, where the empty string is shown as `.`.
    pub fn dot_label(&self) -> String {
        if self.is_root() {
            ".".to_string()
        } else {
            self.to_string()
        }
    }
}

/// Side of the tree above `x` that contains `y`.
pub fn side_above(x: &Node, y: &Node) -> Result<Side> {
    if !x.is_strictly_below(y) {
        return Err(Error::NotStrictlyBelow {
            lower: x.to_string(),
            upper: y.to_string(),
        });
    }
    Ok(if y.digit(x.len()) == 0 {
        Side::Left
    } else {
        Side::Right
    })
}

pub fn is_below(u: &Node, v: &Node) -> bool {
    u.is_below(v)
}

pub fn meet(u: &Node, v: &Node) -> Node {
    u.meet(v)
}

impl Ord for Node {
    /// Lexicographic order on the digit strings.
    fn cmp(&self, other: &Self) -> Ordering {
        let m = self.len.min(other.len) as usize;
        self.prefix(m)
            .bits
            .cmp(&other.prefix(m).bits)
            .then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.digits() {
            f.write_str(if d == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_root() {
            f.write_str("∅")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Node {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .bytes()
            .map(|c| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::InvalidNode(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()?;
        if digits.len() > MAX_NODE_LEN {
            return Err(Error::NodeTooLong(s.to_string()));
        }
        Node::from_digits(&digits)
    }
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Node {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The poset `T_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeOrder {
    n: usize,
}

impl TreeOrder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_NODE_LEN {
            return Err(Error::Precondition(format!(
                "tree height {n} exceeds {MAX_NODE_LEN}"
            )));
        }
        Ok(TreeOrder { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `2^(n+1) - 1`.
    pub fn size(&self) -> usize {
        (1usize << (self.n + 1)) - 1
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.len() <= self.n
    }

    /// All nodes in level order (by length, then by value).
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for len in 0..=self.n {
            for bits in 0..(1u64 << len) {
                out.push(Node {
                    len: len as u8,
                    bits,
                });
            }
        }
        out
    }

    /// Strict descendants of `x` on the given side, in level order.
    pub fn tree_above(&self, x: &Node, side: Side) -> Vec<Node> {
        let mut out = Vec::new();
        if x.len() >= self.n {
            return out;
        }
        let start = x.child(side);
        for extra in 0..=(self.n - start.len()) {
            for bits in 0..(1u64 << extra) {
                out.push(Node {
                    len: start.len + extra as u8,
                    bits: (start.bits << extra) | bits,
                });
            }
        }
        out
    }
}

/// Horizontal coordinates of the geometric-series drawing of `T_n`, scaled
/// by `2^(2n)` so that every coordinate is an exact integer.
///
/// The root sits at 0 and a node of length `m` at `h` has its children at
/// `h - 2^(2n-m)` and `h + 2^(2n-m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    n: usize,
}

impl Embedding {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_EMBED_DEPTH {
            return Err(Error::Precondition(format!(
                "embedding needs 1 <= n <= {MAX_EMBED_DEPTH}, got {n}"
            )));
        }
        Ok(Embedding { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// One unit of the scaled axis; the shrink amount of the geometric
    /// decomposition.
    pub fn epsilon(&self) -> i64 {
        1
    }

    /// Scaled projection of `node`, which must belong to `T_n`.
    pub fn pos(&self, node: &Node) -> i64 {
        assert!(
            node.len() <= self.n,
            "node {node} is not in T_{}",
            self.n
        );
        let top = 2 * self.n;
        node.digits()
            .enumerate()
            .map(|(m, d)| {
                let step = 1i64 << (top - m);
                if d == 0 {
                    -step
                } else {
                    step
                }
            })
            .sum()
    }

    /// Every node with its coordinate.
    pub fn positions(&self) -> BTreeMap<Node, i64> {
        TreeOrder { n: self.n }
            .nodes()
            .into_iter()
            .map(|x| (x, self.pos(&x)))
            .collect()
    }
}

pub fn embed(n: usize) -> Result<Embedding> {
    Embedding::new(n)
}

#[derive(Serialize, Deserialize)]
struct EmbeddingDoc {
    n: usize,
    pos: BTreeMap<String, i64>,
}

impl Serialize for Embedding {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EmbeddingDoc {
            n: self.n,
            pos: self
                .positions()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Embedding {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = EmbeddingDoc::deserialize(deserializer)?;
        let emb = Embedding::new(doc.n).map_err(serde::de::Error::custom)?;
        for (k, v) in &doc.pos {
            let node: Node = k.parse().map_err(serde::de::Error::custom)?;
            if !(TreeOrder { n: doc.n }).contains(&node) || emb.pos(&node) != *v {
                return Err(serde::de::Error::custom(format!(
                    "position of {k:?} disagrees with the drawing of T_{}",
                    doc.n
                )));
            }
        }
        Ok(emb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nd(s: &str) -> Node {
        s.parse().unwrap()
    }

    #[test]
    fn below_examples() {
        assert!(is_below(&Node::ROOT, &nd("01")));
        assert!(is_below(&nd("01"), &nd("01")));
        assert!(!is_below(&nd("10"), &nd("01")));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&nd("010"), &nd("011")), nd("01"));
        assert_eq!(meet(&nd("0"), &nd("1")), Node::ROOT);
        assert_eq!(meet(&nd("0110"), &nd("0")), nd("0"));
    }

    #[test]
    fn side_examples() {
        assert_eq!(side_above(&Node::ROOT, &nd("01")).unwrap(), Side::Left);
        assert_eq!(side_above(&nd("1"), &nd("110")).unwrap(), Side::Right);
        assert!(side_above(&nd("01"), &nd("01")).is_err());
        assert!(side_above(&nd("1"), &nd("01")).is_err());
    }

    #[test]
    fn embedding_examples() {
        let e = embed(4).unwrap();
        assert_eq!(e.pos(&nd("1")), 256);
        assert_eq!(e.pos(&nd("10")), 128);
        assert_eq!(e.pos(&nd("101")), 192);
        assert_eq!(e.pos(&nd("0")), -256);
        assert_eq!(e.pos(&Node::ROOT), 0);
        assert!(embed(0).is_err());
    }

    #[test]
    fn parse_rejects_other_digits() {
        assert!("012".parse::<Node>().is_err());
        assert_eq!("".parse::<Node>().unwrap(), Node::ROOT);
    }

    #[test]
    fn order_matches_string_order() {
        let mut nodes = TreeOrder::new(4).unwrap().nodes();
        let mut strings: Vec<String> = nodes.iter().map(|x| x.to_string()).collect();
        nodes.sort();
        strings.sort();
        let rendered: Vec<String> = nodes.iter().map(|x| x.to_string()).collect();
        assert_eq!(rendered, strings);
    }

    #[test]
    fn tree_size_and_heap_index() {
        for n in 0..8 {
            let t = TreeOrder::new(n).unwrap();
            let nodes = t.nodes();
            assert_eq!(nodes.len(), (1 << (n + 1)) - 1);
            for (i, x) in nodes.iter().enumerate() {
                assert_eq!(x.heap_index(), i);
            }
        }
    }

    // Meet is the greatest lower bound, checked against the order itself.
    #[test]
    fn meet_is_glb_brute_force() {
        let nodes = TreeOrder::new(4).unwrap().nodes();
        for u in &nodes {
            for v in &nodes {
                let lower: Vec<&Node> = nodes
                    .iter()
                    .filter(|w| w.is_below(u) && w.is_below(v))
                    .collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|w| lower.iter().all(|l| l.is_below(w)))
                    .expect("a greatest lower bound exists");
                assert_eq!(meet(u, v), *glb, "{u:?} {v:?}");
            }
        }
    }

    #[test]
    fn prefix_order_is_partial_order() {
        let nodes = TreeOrder::new(5).unwrap().nodes();
        for a in &nodes {
            assert!(a.is_below(a));
            for b in &nodes {
                if a.is_below(b) && b.is_below(a) {
                    assert_eq!(a, b);
                }
                for c in nodes.iter().step_by(7) {
                    if a.is_below(b) && b.is_below(c) {
                        assert!(a.is_below(c));
                    }
                }
            }
        }
    }

    // Placement by walking the drawing parent to child, independent of `pos`.
    fn placement_by_recursion(n: usize) -> BTreeMap<Node, i64> {
        let mut out = BTreeMap::new();
        let mut frontier = vec![(Node::ROOT, 0i64)];
        while let Some((x, h)) = frontier.pop() {
            out.insert(x, h);
            if x.len() < n {
                let delta = 1i64 << (2 * n - x.len());
                frontier.push((x.child(Side::Left), h - delta));
                frontier.push((x.child(Side::Right), h + delta));
            }
        }
        out
    }

    #[test]
    fn positions_match_recursive_placement_and_are_distinct() {
        for n in 1..=10 {
            let e = embed(n).unwrap();
            let oracle = placement_by_recursion(n);
            assert_eq!(e.positions(), oracle);
            let mut seen: Vec<i64> = oracle.values().copied().collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), (1 << (n + 1)) - 1);
        }
    }

    #[test]
    fn descendants_nest_inside_subtree_span() {
        for n in 1..=8 {
            let e = embed(n).unwrap();
            let t = TreeOrder::new(n).unwrap();
            let nodes = t.nodes();
            for x in &nodes {
                let span = 2i64 << (2 * n - x.len());
                let px = e.pos(x);
                for y in nodes.iter().filter(|y| x.is_strictly_below(y)) {
                    let py = e.pos(y);
                    assert!(px - span < py && py < px + span);
                    match side_above(x, y).unwrap() {
                        Side::Left => assert!(py < px),
                        Side::Right => assert!(py > px),
                    }
                }
            }
        }
    }

    #[test]
    fn embedding_json_shape() {
        let e = embed(1).unwrap();
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["n"], 1);
        assert_eq!(v["pos"][""], 0);
        assert_eq!(v["pos"]["0"], -4);
        assert_eq!(v["pos"]["1"], 4);
        let back: Embedding = serde_json::from_value(v).unwrap();
        assert_eq!(back, e);
    }

    proptest! {
        #[test]
        fn string_round_trip(s in "[01]{0,20}") {
            let x: Node = s.parse().unwrap();
            prop_assert_eq!(x.to_string(), s.clone());
            let json = serde_json::to_string(&x).unwrap();
            let back: Node = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn meet_is_common_prefix(a in "[01]{0,12}", b in "[01]{0,12}") {
            let common = a.bytes().zip(b.bytes()).take_while(|(p, q)| p == q).count();
            let expected: Node = a[..common].parse().unwrap();
            let (x, y): (Node, Node) = (a.parse().unwrap(), b.parse().unwrap());
            prop_assert_eq!(meet(&x, &y), expected);
        }
    }
}
