//! The four graded partial orders on compositions.
//!
//! * `C` – the reverse composition poset: prepend a part 1, or add 1 to the
//!   leftmost part of a given size.
//! * `M` – add 1 to any part, or insert a part 1 anywhere.
//! * `F` – add 1 to a part, or add 1 to a part and split it in two.
//! * `Q` – `α ≺ β` exactly when `α = rem_s(β)` for a part `s` of `β`.
//!
//! Every cover raises the weight by one, and the empty composition is the
//! unique minimum of each order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{compositions_of, Composition};
use crate::error::{QsymError, Result};
use crate::schur::rem;

/// Largest weight gap `leq` will search.
pub const DEFAULT_LEQ_GAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrderTag {
    C,
    M,
    F,
    Q,
}

impl OrderTag {
    pub const ALL: [OrderTag; 4] = [OrderTag::C, OrderTag::M, OrderTag::F, OrderTag::Q];
}

impl fmt::Display for OrderTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrderTag::C => "C",
            OrderTag::M => "M",
            OrderTag::F => "F",
            OrderTag::Q => "Q",
        };
        f.write_str(s)
    }
}

impl FromStr for OrderTag {
    type Err = QsymError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "c" => Ok(OrderTag::C),
            "M" | "m" => Ok(OrderTag::M),
            "F" | "f" => Ok(OrderTag::F),
            "Q" | "q" => Ok(OrderTag::Q),
            _ => Err(QsymError::InvalidInput(format!("unknown order {s:?}"))),
        }
    }
}

fn with_part(parts: &[u32], j: usize, value: u32) -> Composition {
    let mut v = parts.to_vec();
    if value == 0 {
        v.remove(j);
    } else {
        v[j] = value;
    }
    Composition::from_vec_unchecked(v)
}

fn is_leftmost_of_size(parts: &[u32], j: usize) -> bool {
    !parts[..j].contains(&parts[j])
}

/// All `β` with `α ≺ β`.
pub fn up_covers(order: OrderTag, alpha: &Composition) -> BTreeSet<Composition> {
    let a = alpha.parts();
    let mut out = BTreeSet::new();
    match order {
        OrderTag::C => {
            let mut v = Vec::with_capacity(a.len() + 1);
            v.push(1);
            v.extend_from_slice(a);
            out.insert(Composition::from_vec_unchecked(v));
            for j in 0..a.len() {
                if is_leftmost_of_size(a, j) {
                    out.insert(with_part(a, j, a[j] + 1));
                }
            }
        }
        OrderTag::M => {
            for j in 0..a.len() {
                out.insert(with_part(a, j, a[j] + 1));
            }
            for r in 0..=a.len() {
                let mut v = a.to_vec();
                v.insert(r, 1);
                out.insert(Composition::from_vec_unchecked(v));
            }
        }
        OrderTag::F => {
            if a.is_empty() {
                out.insert(Composition::row(1));
            }
            for j in 0..a.len() {
                out.insert(with_part(a, j, a[j] + 1));
                for h in 1..=a[j] {
                    let mut v = Vec::with_capacity(a.len() + 1);
                    v.extend_from_slice(&a[..j]);
                    v.push(h);
                    v.push(a[j] + 1 - h);
                    v.extend_from_slice(&a[j + 1..]);
                    out.insert(Composition::from_vec_unchecked(v));
                }
            }
        }
        OrderTag::Q => {
            for beta in up_covers(OrderTag::M, alpha) {
                if down_covers(OrderTag::Q, &beta).contains(alpha) {
                    out.insert(beta);
                }
            }
        }
    }
    out
}

/// `D(β)`: all `α` with `α ≺ β`.
pub fn down_covers(order: OrderTag, beta: &Composition) -> BTreeSet<Composition> {
    let b = beta.parts();
    let mut out = BTreeSet::new();
    match order {
        OrderTag::C => {
            if b.first() == Some(&1) {
                out.insert(Composition::from_vec_unchecked(b[1..].to_vec()));
            }
            for j in 0..b.len() {
                if b[j] >= 2 && !b[..j].contains(&(b[j] - 1)) {
                    out.insert(with_part(b, j, b[j] - 1));
                }
            }
        }
        OrderTag::M => {
            for j in 0..b.len() {
                out.insert(with_part(b, j, b[j] - 1));
            }
        }
        OrderTag::F => {
            if b == [1] {
                out.insert(Composition::empty());
            }
            for j in 0..b.len() {
                if b[j] >= 2 {
                    out.insert(with_part(b, j, b[j] - 1));
                }
                if j + 1 < b.len() {
                    let mut v = Vec::with_capacity(b.len() - 1);
                    v.extend_from_slice(&b[..j]);
                    v.push(b[j] + b[j + 1] - 1);
                    v.extend_from_slice(&b[j + 2..]);
                    out.insert(Composition::from_vec_unchecked(v));
                }
            }
        }
        OrderTag::Q => {
            let sizes: BTreeSet<u32> = b.iter().copied().collect();
            for s in sizes {
                if let Some(alpha) = rem(beta, s) {
                    out.insert(alpha);
                }
            }
        }
    }
    out
}

/// `α ≤ β`, searching at most `DEFAULT_LEQ_GAP` ranks.
pub fn leq(order: OrderTag, alpha: &Composition, beta: &Composition) -> Result<bool> {
    leq_bounded(order, alpha, beta, DEFAULT_LEQ_GAP)
}

/// Graded search downward from `β`, one rank at a time, until the rank of `α`.
pub fn leq_bounded(
    order: OrderTag,
    alpha: &Composition,
    beta: &Composition,
    max_gap: usize,
) -> Result<bool> {
    let (wa, wb) = (alpha.weight(), beta.weight());
    if wa > wb {
        return Ok(false);
    }
    if wb - wa > max_gap {
        return Err(QsymError::BoundExceeded {
            weight: wb - wa,
            cap: max_gap,
        });
    }
    let mut level: BTreeSet<Composition> = BTreeSet::from([beta.clone()]);
    for _ in wa..wb {
        level = level.iter().flat_map(|g| down_covers(order, g)).collect();
        if level.is_empty() {
            return Ok(false);
        }
    }
    Ok(level.contains(alpha))
}

/// Cover edges among all compositions of weight `1..=max_weight`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub order: OrderTag,
    pub max_weight: usize,
    pub nodes: Vec<Composition>,
    pub edges: Vec<(Composition, Composition)>,
}

pub fn hasse(order: OrderTag, max_weight: usize) -> Result<HasseDiagram> {
    hasse_with(order, max_weight, |a| up_covers(order, a))
}

/// Hasse diagram for an arbitrary up-cover function.
pub fn hasse_with<F>(order: OrderTag, max_weight: usize, covers: F) -> Result<HasseDiagram>
where
    F: Fn(&Composition) -> BTreeSet<Composition>,
{
    if max_weight == 0 {
        return Err(QsymError::InvalidInput(
            "max_weight must be positive".into(),
        ));
    }
    let nodes: Vec<Composition> = (1..=max_weight).flat_map(compositions_of).collect();
    let mut edges = Vec::new();
    for a in nodes.iter().filter(|a| a.weight() < max_weight) {
        for b in covers(a) {
            edges.push((a.clone(), b));
        }
    }
    edges.sort();
    Ok(HasseDiagram {
        order,
        max_weight,
        nodes,
        edges,
    })
}

impl HasseDiagram {
    pub fn edge_set(&self) -> BTreeSet<(Composition, Composition)> {
        self.edges.iter().cloned().collect()
    }

    /// Graphviz rendering, bottom rank first; nodes carry their weight as `rank`.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph hasse_{} {{\n  rankdir=BT;\n", self.order);
        for w in 1..=self.max_weight {
            s.push_str("  { rank=same;");
            for n in self.nodes.iter().filter(|n| n.weight() == w) {
                s.push_str(&format!(" \"{n}\";"));
            }
            s.push_str(" }\n");
        }
        for n in &self.nodes {
            s.push_str(&format!(
                "  \"{n}\" [label=\"{n}\", rank={}];\n",
                n.weight()
            ));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Unordered pairs of distinct compositions of `n` with identical down-cover
/// sets, each pair as `(smaller, larger)`, sorted.
pub fn equal_down_set_pairs(order: OrderTag, n: usize) -> Vec<(Composition, Composition)> {
    let mut groups: BTreeMap<BTreeSet<Composition>, Vec<Composition>> = BTreeMap::new();
    for c in compositions_of(n) {
        groups.entry(down_covers(order, &c)).or_default().push(c);
    }
    let mut pairs = Vec::new();
    for members in groups.values() {
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                pairs.push(ordered_pair(a.clone(), b.clone()));
            }
        }
    }
    pairs.sort();
    pairs
}

pub(crate) fn ordered_pair(a: Composition, b: Composition) -> (Composition, Composition) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// `{α, β} = {P·(1,2), P·(2,1)}` with every part of `P` equal to 1 or 2.
pub fn q_classification_predicate(alpha: &Composition, beta: &Composition) -> bool {
    fn ends_12(x: &[u32]) -> bool {
        x.len() >= 2 && x[x.len() - 2..] == [1, 2]
    }
    fn ends_21(x: &[u32]) -> bool {
        x.len() >= 2 && x[x.len() - 2..] == [2, 1]
    }
    let (a, b) = (alpha.parts(), beta.parts());
    let (x, y) = if ends_12(a) && ends_21(b) {
        (a, b)
    } else if ends_12(b) && ends_21(a) {
        (b, a)
    } else {
        return false;
    };
    if x.len() != y.len() {
        return false;
    }
    let prefix = &x[..x.len() - 2];
    prefix == &y[..y.len() - 2] && prefix.iter().all(|&p| p == 1 || p == 2)
}

/// The three families of pairs with equal `C`-down-sets:
/// `{(2),(1,1)}`, `{(3),(1,2)}`, and `{(a+1,1,b…), (1,a,1,b…)}` for
/// `a ∈ {1,2}` where each `b_j ≤ max(b_0+1, …, b_{j-1}+1)` with `b_0 = 1`.
pub fn c_classification_predicate(alpha: &Composition, beta: &Composition) -> bool {
    fn directed(x: &[u32], y: &[u32]) -> bool {
        match (x, y) {
            ([2], [1, 1]) | ([3], [1, 2]) => true,
            ([head, 1, tail @ ..], [1, a, 1, rest @ ..]) => {
                let a = *a;
                if !(a == 1 || a == 2) || *head != a + 1 || tail != rest {
                    return false;
                }
                let mut running_max = 1;
                for &b in tail {
                    if b > running_max + 1 {
                        return false;
                    }
                    running_max = running_max.max(b);
                }
                true
            }
            _ => false,
        }
    }
    let (a, b) = (alpha.parts(), beta.parts());
    a != b && (directed(a, b) || directed(b, a))
}

/// Edge lists of the rank 1–4 Hasse diagrams, transcribed from the reference
/// figures of the four orders.
pub mod figures {
    use super::OrderTag;

    pub const C_EDGES: &[(&str, &str)] = &[
        ("1", "1,1"),
        ("1", "2"),
        ("1,1", "1,1,1"),
        ("1,1", "2,1"),
        ("2", "1,2"),
        ("2", "3"),
        ("1,1,1", "1,1,1,1"),
        ("1,1,1", "2,1,1"),
        ("1,2", "1,1,2"),
        ("1,2", "1,3"),
        ("1,2", "2,2"),
        ("2,1", "1,2,1"),
        ("2,1", "2,2"),
        ("2,1", "3,1"),
        ("3", "4"),
        ("3", "1,3"),
    ];

    pub const Q_EDGES: &[(&str, &str)] = &[
        ("1", "1,1"),
        ("1", "2"),
        ("1,1", "1,1,1"),
        ("1,1", "1,2"),
        ("1,1", "2,1"),
        ("2", "1,2"),
        ("2", "2,1"),
        ("2", "3"),
        ("1,1,1", "1,1,1,1"),
        ("1,1,1", "1,1,2"),
        ("1,1,1", "1,2,1"),
        ("1,1,1", "2,1,1"),
        ("1,2", "1,1,2"),
        ("1,2", "1,2,1"),
        ("1,2", "1,3"),
        ("2,1", "2,1,1"),
        ("2,1", "2,2"),
        ("2,1", "3,1"),
        ("3", "3,1"),
        ("3", "4"),
        ("3", "1,3"),
    ];

    pub const M_EDGES: &[(&str, &str)] = &[
        ("1", "1,1"),
        ("1", "2"),
        ("1,1", "1,1,1"),
        ("1,1", "1,2"),
        ("1,1", "2,1"),
        ("2", "1,2"),
        ("2", "2,1"),
        ("2", "3"),
        ("1,1,1", "1,1,1,1"),
        ("1,1,1", "1,1,2"),
        ("1,1,1", "1,2,1"),
        ("1,1,1", "2,1,1"),
        ("1,2", "1,1,2"),
        ("1,2", "1,2,1"),
        ("1,2", "1,3"),
        ("1,2", "2,2"),
        ("2,1", "1,2,1"),
        ("2,1", "2,1,1"),
        ("2,1", "2,2"),
        ("2,1", "3,1"),
        ("3", "3,1"),
        ("3", "4"),
        ("3", "1,3"),
    ];

    pub const F_EDGES: &[(&str, &str)] = &[
        ("1", "1,1"),
        ("1", "2"),
        ("1,1", "1,1,1"),
        ("1,1", "1,2"),
        ("1,1", "2,1"),
        ("2", "1,2"),
        ("2", "2,1"),
        ("2", "3"),
        ("1,1,1", "1,1,1,1"),
        ("1,1,1", "1,1,2"),
        ("1,1,1", "1,2,1"),
        ("1,1,1", "2,1,1"),
        ("1,2", "1,1,2"),
        ("1,2", "1,2,1"),
        ("1,2", "1,3"),
        ("1,2", "2,2"),
        ("2,1", "1,2,1"),
        ("2,1", "2,1,1"),
        ("2,1", "2,2"),
        ("2,1", "3,1"),
        ("3", "3,1"),
        ("3", "2,2"),
        ("3", "4"),
        ("3", "1,3"),
    ];

    pub fn edges(order: OrderTag) -> &'static [(&'static str, &'static str)] {
        match order {
            OrderTag::C => C_EDGES,
            OrderTag::M => M_EDGES,
            OrderTag::F => F_EDGES,
            OrderTag::Q => Q_EDGES,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::from_parts(parts)
    }

    fn set(items: &[&[u32]]) -> BTreeSet<Composition> {
        items.iter().map(|p| c(p)).collect()
    }

    #[test]
    fn cover_examples() {
        assert!(up_covers(OrderTag::C, &c(&[2, 1])).contains(&c(&[1, 2, 1])));
        assert_eq!(up_covers(OrderTag::M, &c(&[1])), set(&[&[2], &[1, 1]]));
        assert_eq!(
            up_covers(OrderTag::F, &c(&[2])),
            set(&[&[3], &[1, 2], &[2, 1]])
        );

        assert_eq!(
            down_covers(OrderTag::Q, &c(&[1, 2, 1])),
            set(&[&[1, 2], &[1, 1, 1]])
        );
        assert_eq!(down_covers(OrderTag::M, &c(&[1, 2])), set(&[&[2], &[1, 1]]));
        assert_eq!(down_covers(OrderTag::M, &c(&[2, 1])), set(&[&[2], &[1, 1]]));
        assert_eq!(down_covers(OrderTag::C, &c(&[1, 1])), set(&[&[1]]));
        assert_eq!(down_covers(OrderTag::C, &c(&[2])), set(&[&[1]]));
    }

    #[test]
    fn empty_composition_is_the_minimum() {
        for order in OrderTag::ALL {
            assert_eq!(
                up_covers(order, &Composition::empty()),
                set(&[&[1]]),
                "{order}"
            );
            assert_eq!(down_covers(order, &c(&[1])), set(&[&[]]), "{order}");
        }
    }

    #[test]
    fn leq_examples() {
        assert!(leq(OrderTag::C, &c(&[1]), &c(&[1, 2, 1])).unwrap());
        assert!(leq(OrderTag::M, &c(&[2, 3]), &c(&[2, 3])).unwrap());
        assert!(!leq(OrderTag::Q, &c(&[2]), &c(&[1, 1])).unwrap());
        assert!(!leq(OrderTag::C, &c(&[1, 2]), &c(&[3])).unwrap());
        assert!(leq(OrderTag::C, &c(&[1, 3, 1]), &c(&[1, 2, 4, 2])).unwrap());
        let big = Composition::row(30);
        assert!(matches!(
            leq(OrderTag::M, &c(&[1]), &big),
            Err(QsymError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn small_hasse() {
        let h = hasse(OrderTag::F, 2).unwrap();
        assert_eq!(h.edges, vec![(c(&[1]), c(&[1, 1])), (c(&[1]), c(&[2]))]);
        assert_eq!(h.nodes.len(), 3);
        let dot = h.to_dot();
        assert!(dot.contains("\"1\" -> \"1,1\";"));
        assert!(dot.contains("\"1,1\" [label=\"1,1\", rank=2];"));
        assert!(hasse(OrderTag::C, 0).is_err());
    }

    #[test]
    fn pair_examples() {
        assert_eq!(
            equal_down_set_pairs(OrderTag::Q, 3),
            vec![(c(&[1, 2]), c(&[2, 1]))]
        );
        assert_eq!(
            equal_down_set_pairs(OrderTag::C, 2),
            vec![(c(&[1, 1]), c(&[2]))]
        );
        assert_eq!(
            equal_down_set_pairs(OrderTag::M, 3),
            vec![(c(&[1, 2]), c(&[2, 1]))]
        );
    }

    #[test]
    fn classification_predicates() {
        assert!(q_classification_predicate(&c(&[1, 2]), &c(&[2, 1])));
        assert!(q_classification_predicate(&c(&[1, 1, 2]), &c(&[1, 2, 1])));
        assert!(q_classification_predicate(&c(&[2, 2, 1]), &c(&[2, 1, 2])));
        assert!(!q_classification_predicate(&c(&[3]), &c(&[1, 1, 1])));
        assert!(!q_classification_predicate(&c(&[3, 1, 2]), &c(&[3, 2, 1])));

        assert!(c_classification_predicate(&c(&[2]), &c(&[1, 1])));
        assert!(c_classification_predicate(&c(&[1, 2]), &c(&[3])));
        assert!(c_classification_predicate(&c(&[2, 1]), &c(&[1, 1, 1])));
        assert!(c_classification_predicate(
            &c(&[3, 1, 2]),
            &c(&[1, 2, 1, 2])
        ));
        assert!(!c_classification_predicate(
            &c(&[2, 1, 3]),
            &c(&[1, 1, 1, 3])
        ));
        assert!(!c_classification_predicate(&c(&[4, 1]), &c(&[1, 3, 1])));
    }
}
