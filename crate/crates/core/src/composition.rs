//! Compositions, descent sets and the elementary operations on them.
//!
//! A [`Composition`] is an ordered list of positive integers. The canonical
//! text form is the comma separated list of parts (`"1,3,2"`), and the empty
//! composition is the empty string.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{QsymError, Result};

/// A finite ordered list of positive integers.
///
/// The derived ordering is lexicographic on the parts, which is the order
/// used everywhere a deterministic listing is needed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// Builds a composition, rejecting zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(QsymError::InvalidInput(format!(
                "composition parts must be positive, got {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    /// Builds a composition from parts known to be positive.
    ///
    /// Panics on a zero part; intended for literals and internal use.
    pub fn from_parts(parts: &[u32]) -> Self {
        assert!(!parts.contains(&0), "zero part in {parts:?}");
        Composition(parts.to_vec())
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    /// The single-part composition `(n)`, or the empty composition for `n == 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// The composition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Composition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn set(&self) -> DescentSet {
        set_of(self)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = QsymError;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let err = |reason: &str| QsymError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = Vec::new();
        for tok in s.split(',') {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected comma separated positive integers"));
            }
            let p: u32 = tok.parse().map_err(|_| err("part out of range"))?;
            if p == 0 {
                return Err(err("parts must be positive"));
            }
            parts.push(p);
        }
        Ok(Composition(parts))
    }
}

impl Serialize for Composition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A composition with weakly decreasing parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(QsymError::InvalidInput(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `μ ⊆ λ` in the Young-diagram sense.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Composition(self.0.clone()).fmt(f)
    }
}

/// A subset of `[n-1]`, stored as a strictly increasing list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "DescentSetRepr", into = "DescentSetRepr")]
pub struct DescentSet {
    ambient: u32,
    elements: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct DescentSetRepr {
    n: u32,
    set: Vec<u32>,
}

impl TryFrom<DescentSetRepr> for DescentSet {
    type Error = QsymError;

    fn try_from(r: DescentSetRepr) -> Result<Self> {
        DescentSet::new(r.n, r.set)
    }
}

impl From<DescentSet> for DescentSetRepr {
    fn from(d: DescentSet) -> Self {
        DescentSetRepr {
            n: d.ambient,
            set: d.elements,
        }
    }
}

impl DescentSet {
    pub fn new(ambient: u32, elements: Vec<u32>) -> Result<Self> {
        let in_range = elements.iter().all(|&e| e >= 1 && e < ambient);
        let increasing = elements.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !increasing {
            return Err(QsymError::InvalidInput(format!(
                "{elements:?} is not a strictly increasing subset of [{}]",
                ambient.saturating_sub(1)
            )));
        }
        Ok(DescentSet { ambient, elements })
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    /// `[n-1] \ S`.
    pub fn complement(&self) -> DescentSet {
        let elements = (1..self.ambient).filter(|&e| !self.contains(e)).collect();
        DescentSet {
            ambient: self.ambient,
            elements,
        }
    }
}

/// Partial sums `{α₁, α₁+α₂, …}` of all but the last part.
pub fn set_of(alpha: &Composition) -> DescentSet {
    let mut acc = 0;
    let mut elements = Vec::with_capacity(alpha.len().saturating_sub(1));
    for &p in alpha.parts() {
        if acc > 0 {
            elements.push(acc);
        }
        acc += p;
    }
    DescentSet {
        ambient: acc,
        elements,
    }
}

pub fn comp_of(set: &DescentSet) -> Composition {
    if set.ambient == 0 {
        return Composition::empty();
    }
    let mut parts = Vec::with_capacity(set.elements.len() + 1);
    let mut prev = 0;
    for &e in set.elements.iter().chain(std::iter::once(&set.ambient)) {
        parts.push(e - prev);
        prev = e;
    }
    Composition(parts)
}

pub fn reversal(alpha: &Composition) -> Composition {
    let mut parts = alpha.0.clone();
    parts.reverse();
    Composition(parts)
}

/// The composition whose descent set is the complement of `Set(α)`.
/// The empty composition is its own complement.
pub fn complement(alpha: &Composition) -> Composition {
    comp_of(&set_of(alpha).complement())
}

pub fn transpose(alpha: &Composition) -> Composition {
    complement(&reversal(alpha))
}

/// `α ⪯ β`: `α` refines `β`.
pub fn refines(alpha: &Composition, beta: &Composition) -> bool {
    alpha.weight() == beta.weight() && set_of(beta).is_subset(&set_of(alpha))
}

pub fn concat(alpha: &Composition, beta: &Composition) -> Composition {
    let mut parts = alpha.0.clone();
    parts.extend_from_slice(&beta.0);
    Composition(parts)
}

/// `α ⊙ β`: concatenation with the two boundary parts merged.
pub fn near_concat(alpha: &Composition, beta: &Composition) -> Result<Composition> {
    if alpha.is_empty() || beta.is_empty() {
        return Err(QsymError::InvalidInput(
            "near concatenation needs two nonempty compositions".into(),
        ));
    }
    let mut parts = alpha.0.clone();
    *parts.last_mut().unwrap() += beta.0[0];
    parts.extend_from_slice(&beta.0[1..]);
    Ok(Composition(parts))
}

pub fn underlying_partition(alpha: &Composition) -> Partition {
    let mut parts = alpha.0.clone();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

/// All compositions of `n` in lexicographic order; `[∅]` for `n == 0`.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    let mut out = Vec::with_capacity(if n == 0 { 1 } else { 1 << (n - 1) });
    let mut cur = Vec::with_capacity(n);
    fn rec(rest: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p as u32);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// All compositions of weight `0..=max_weight`, graded then lexicographic.
pub fn compositions_up_to(max_weight: usize) -> Vec<Composition> {
    (0..=max_weight).flat_map(compositions_of).collect()
}

/// Splittings of `δ` as a concatenation and as a near concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splittings {
    /// `δ = α·β`, including the two splits with an empty factor.
    pub concat: Vec<(Composition, Composition)>,
    /// `δ = α⊙β` with both factors nonempty.
    pub near_concat: Vec<(Composition, Composition)>,
}

/// Enumerates splittings through descent sets: `δ = α·β` exactly when
/// `Set(δ) = Set(α) ∪ {|α|} ∪ (|α| + Set(β))`, and `δ = α⊙β` exactly when
/// `|α|` is not a descent of `δ` and the same identity holds without `{|α|}`.
pub fn set_concat_split(delta: &Composition) -> Splittings {
    let n = delta.weight() as u32;
    let set = set_of(delta);
    let mut concat_splits = Vec::new();
    let mut near_splits = Vec::new();
    for cut in 0..=n {
        let below: Vec<u32> = set.elements.iter().copied().filter(|&e| e < cut).collect();
        let above: Vec<u32> = set
            .elements
            .iter()
            .copied()
            .filter(|&e| e > cut)
            .map(|e| e - cut)
            .collect();
        let left = comp_of(&DescentSet {
            ambient: cut,
            elements: below,
        });
        let right = comp_of(&DescentSet {
            ambient: n - cut,
            elements: above,
        });
        if cut == 0 || cut == n || set.contains(cut) {
            concat_splits.push((left, right));
        } else {
            near_splits.push((left, right));
        }
    }
    Splittings {
        concat: concat_splits,
        near_concat: near_splits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::from_parts(parts)
    }

    #[test]
    fn set_and_comp() {
        assert_eq!(set_of(&c(&[1, 3, 2])).elements(), &[1, 4]);
        assert_eq!(set_of(&c(&[1, 3, 2])).ambient(), 6);
        assert!(set_of(&c(&[5])).elements().is_empty());
        assert_eq!(set_of(&c(&[1, 1, 1])).elements(), &[1, 2]);
        assert_eq!(set_of(&Composition::empty()).ambient(), 0);

        let s = DescentSet::new(6, vec![1, 4]).unwrap();
        assert_eq!(comp_of(&s), c(&[1, 3, 2]));
        assert_eq!(
            comp_of(&DescentSet::new(0, vec![]).unwrap()),
            Composition::empty()
        );
        assert_eq!(comp_of(&DescentSet::new(5, vec![]).unwrap()), c(&[5]));
    }

    #[test]
    fn descent_set_validation() {
        assert!(DescentSet::new(3, vec![3]).is_err());
        assert!(DescentSet::new(5, vec![2, 2]).is_err());
        assert!(DescentSet::new(5, vec![0]).is_err());
        let json = serde_json::to_string(&DescentSet::new(6, vec![1, 4]).unwrap()).unwrap();
        assert_eq!(json, r#"{"n":6,"set":[1,4]}"#);
        let back: DescentSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back.elements(), &[1, 4]);
        assert!(serde_json::from_str::<DescentSet>(r#"{"n":2,"set":[4]}"#).is_err());
    }

    #[test]
    fn involutions() {
        assert_eq!(reversal(&c(&[1, 3, 2])), c(&[2, 3, 1]));
        assert_eq!(reversal(&Composition::empty()), Composition::empty());
        assert_eq!(reversal(&c(&[2, 2])), c(&[2, 2]));

        assert_eq!(complement(&c(&[1, 2])), c(&[2, 1]));
        assert_eq!(complement(&c(&[4])), c(&[1, 1, 1, 1]));
        // Set = {1,4} in [5]; complement {2,3,5} gives (2,1,2,1).
        assert_eq!(complement(&c(&[1, 3, 2])), c(&[2, 1, 2, 1]));
        assert_eq!(complement(&Composition::empty()), Composition::empty());

        assert_eq!(transpose(&c(&[1, 3, 2])), c(&[1, 2, 1, 2]));
        assert_eq!(transpose(&c(&[1, 1, 1])), c(&[3]));
        assert_eq!(transpose(&Composition::empty()), Composition::empty());
    }

    #[test]
    fn refinement_and_concatenation() {
        assert!(refines(&c(&[1, 1, 2]), &c(&[2, 2])));
        assert!(!refines(&c(&[2, 2]), &c(&[1, 1, 2])));
        assert!(refines(&c(&[3]), &c(&[3])));

        assert_eq!(concat(&c(&[1, 2]), &c(&[3])), c(&[1, 2, 3]));
        assert_eq!(near_concat(&c(&[1, 2]), &c(&[3])).unwrap(), c(&[1, 5]));
        assert_eq!(near_concat(&c(&[1]), &c(&[6])).unwrap(), c(&[7]));
        assert!(near_concat(&Composition::empty(), &c(&[1])).is_err());
        assert!(near_concat(&c(&[1]), &Composition::empty()).is_err());
    }

    #[test]
    fn partitions() {
        assert_eq!(
            underlying_partition(&c(&[1, 2, 4, 2])).parts(),
            &[4, 2, 2, 1]
        );
        assert_eq!(
            underlying_partition(&c(&[1, 1, 1, 2])).parts(),
            &[2, 1, 1, 1]
        );
        assert!(underlying_partition(&Composition::empty()).is_empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        assert_eq!(
            compositions_of(3),
            vec![c(&[1, 1, 1]), c(&[1, 2]), c(&[2, 1]), c(&[3])]
        );
        assert_eq!(compositions_of(8).len(), 128);
    }

    #[test]
    fn splittings() {
        let s = set_concat_split(&c(&[2]));
        assert_eq!(
            s.concat,
            vec![
                (Composition::empty(), c(&[2])),
                (c(&[2]), Composition::empty())
            ]
        );
        assert_eq!(s.near_concat, vec![(c(&[1]), c(&[1]))]);

        let s = set_concat_split(&c(&[1, 2]));
        assert!(s.concat.contains(&(c(&[1]), c(&[2]))));
        assert_eq!(s.concat.len(), 3);
        assert_eq!(s.near_concat, vec![(c(&[1, 1]), c(&[1]))]);

        let s = set_concat_split(&c(&[5]));
        let expected: Vec<_> = (1..5).map(|a| (c(&[a]), c(&[5 - a]))).collect();
        assert_eq!(s.near_concat, expected);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("1,3,2".parse::<Composition>().unwrap(), c(&[1, 3, 2]));
        assert_eq!("".parse::<Composition>().unwrap(), Composition::empty());
        assert_eq!("12".parse::<Composition>().unwrap(), c(&[12]));
        for bad in ["1,,2", "1, 2", "0", "a", ",1", "1,"] {
            assert!(bad.parse::<Composition>().is_err(), "{bad:?}");
        }
        assert_eq!(c(&[10, 2]).to_string(), "10,2");
        assert_eq!(format!("{:?}", Composition::empty()), "()");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn comp() -> impl Strategy<Value = Composition> {
            proptest::collection::vec(1u32..5, 0..7).prop_map(|v| Composition::from_parts(&v))
        }

        proptest! {
            #[test]
            fn involutions(a in comp()) {
                prop_assert_eq!(reversal(&reversal(&a)), a.clone());
                prop_assert_eq!(complement(&complement(&a)), a.clone());
                prop_assert_eq!(transpose(&transpose(&a)), a.clone());
                prop_assert_eq!(transpose(&a), reversal(&complement(&a)));
                prop_assert_eq!(complement(&a).weight(), a.weight());
            }

            #[test]
            fn set_comp_bijection(a in comp()) {
                prop_assert_eq!(comp_of(&set_of(&a)), a.clone());
                prop_assert_eq!(set_of(&a).elements().len() + 1, a.len().max(1));
            }

            #[test]
            fn refinement_of_concat(a in comp(), b in comp()) {
                prop_assume!(!a.is_empty() && !b.is_empty());
                let nc = near_concat(&a, &b).unwrap();
                prop_assert!(refines(&concat(&a, &b), &nc));
                prop_assert_eq!(complement(&concat(&a, &b)), near_concat(&complement(&a), &complement(&b)).unwrap());
            }
        }
    }
}
