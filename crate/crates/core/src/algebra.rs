//! QSym in the monomial and fundamental bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::{comp_of, set_concat_split, set_of, Composition, DescentSet};
use crate::error::{QsymError, Result};

/// Exact rational coefficient.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisTag {
    M,
    F,
    S,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisTag::M => "M",
            BasisTag::F => "F",
            BasisTag::S => "S",
        })
    }
}

impl FromStr for BasisTag {
    type Err = QsymError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(BasisTag::M),
            "F" | "f" => Ok(BasisTag::F),
            "S" | "s" => Ok(BasisTag::S),
            _ => Err(QsymError::InvalidInput(format!("unknown basis {s:?}"))),
        }
    }
}

pub(crate) fn expect_basis(found: BasisTag, expected: BasisTag) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(QsymError::BasisMismatch {
            expected: expected.to_string(),
            found,
        })
    }
}

/// A finite linear combination of basis elements `K_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymVector {
    basis: BasisTag,
    terms: BTreeMap<Composition, Scalar>,
}

impl QSymVector {
    pub fn zero(basis: BasisTag) -> Self {
        QSymVector {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: BasisTag, alpha: Composition) -> Self {
        let mut v = Self::zero(basis);
        v.terms.insert(alpha, Scalar::one());
        v
    }

    /// The unit `K_∅`.
    pub fn one(basis: BasisTag) -> Self {
        Self::basis_element(basis, Composition::empty())
    }

    pub fn from_terms<I>(basis: BasisTag, terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, Scalar)>,
    {
        let mut v = Self::zero(basis);
        for (c, s) in terms {
            v.add_term(c, s);
        }
        v
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Composition, Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `⟨K_α, u⟩` in the basis of `u`.
    pub fn coefficient(&self, alpha: &Composition) -> Scalar {
        self.terms.get(alpha).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        QSymVector {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        expect_basis(other.basis, self.basis)?;
        let mut out = self.clone();
        for (c, s) in &other.terms {
            out.add_term(c.clone(), s.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// The weight-`n` homogeneous part.
    pub fn graded_component(&self, n: usize) -> Self {
        QSymVector {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(c, _)| c.weight() == n)
                .map(|(c, s)| (c.clone(), s.clone()))
                .collect(),
        }
    }

    pub fn max_weight(&self) -> usize {
        self.terms
            .keys()
            .map(Composition::weight)
            .max()
            .unwrap_or(0)
    }

    /// Is this `±K_β` for a single `β`?
    pub fn as_signed_basis_element(&self) -> Option<(Composition, i8)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (c, s) = self.terms.iter().next().unwrap();
        if s.is_one() {
            Some((c.clone(), 1))
        } else if (-s).is_one() {
            Some((c.clone(), -1))
        } else {
            None
        }
    }

    /// Terms ordered by weight, then reverse lexicographically.
    pub fn display_order(&self) -> Vec<(&Composition, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| b.0.cmp(a.0)));
        v
    }
}

fn write_signed(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &Scalar,
    body: &str,
) -> fmt::Result {
    let neg = coeff.is_negative();
    let abs = coeff.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if !abs.is_one() {
        write!(f, "{abs} ")?;
    }
    f.write_str(body)
}

impl fmt::Display for QSymVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, s)) in self.display_order().into_iter().enumerate() {
            write_signed(f, i == 0, s, &format!("{}[{}]", self.basis, c))?;
        }
        Ok(())
    }
}

impl QSymVector {
    /// Parse the text rendering, e.g. `2 M[1,2] - 1/3 M[3] + M[]`. Every
    /// term must use `basis`; `0` is the zero vector.
    pub fn parse(text: &str, basis: BasisTag) -> Result<Self> {
        let err = |reason: &str| QsymError::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let mut out = QSymVector::zero(basis);
        let trimmed = text.trim();
        if trimmed == "0" {
            return Ok(out);
        }
        let mut rest = trimmed;
        let mut first = true;
        while !rest.is_empty() {
            let open = rest
                .find('[')
                .ok_or_else(|| err("expected a term like M[1,2]"))?;
            let close = rest[open..].find(']').ok_or_else(|| err("missing ']'"))? + open;
            let head = rest[..open].trim();
            let tag: BasisTag = head
                .get(head.len().saturating_sub(1)..)
                .unwrap_or("")
                .parse()
                .map_err(|_| err("missing basis letter"))?;
            if tag != basis {
                return Err(QsymError::BasisMismatch {
                    expected: basis.to_string(),
                    found: tag,
                });
            }
            let mut coeff = head[..head.len() - 1].trim();
            let mut negative = false;
            if let Some(c) = coeff.strip_prefix('-') {
                negative = true;
                coeff = c.trim();
            } else if let Some(c) = coeff.strip_prefix('+') {
                if first {
                    return Err(err("leading '+'"));
                }
                coeff = c.trim();
            } else if !first {
                return Err(err("terms must be joined by '+' or '-'"));
            }
            let mut value = if coeff.is_empty() {
                Scalar::one()
            } else {
                coeff
                    .parse::<Scalar>()
                    .map_err(|_| err(&format!("bad coefficient {coeff:?}")))?
            };
            if negative {
                value = -value;
            }
            let comp: Composition = rest[open + 1..close].parse()?;
            out.add_term(comp, value);
            rest = rest[close + 1..].trim_start();
            first = false;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    comp: Composition,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct VectorRepr {
    basis: BasisTag,
    terms: Vec<TermRepr>,
}

fn parse_scalar(num: &str, den: &str) -> std::result::Result<Scalar, String> {
    let n: BigInt = num.parse().map_err(|_| format!("bad numerator {num:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("bad denominator {den:?}"))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(n, d))
}

impl Serialize for QSymVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VectorRepr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(c, v)| TermRepr {
                    comp: c.clone(),
                    num: v.numer().to_string(),
                    den: v.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSymVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = VectorRepr::deserialize(d)?;
        let mut v = QSymVector::zero(repr.basis);
        for t in repr.terms {
            let s = parse_scalar(&t.num, &t.den).map_err(serde::de::Error::custom)?;
            v.add_term(t.comp, s);
        }
        Ok(v)
    }
}

/// A finite linear combination of `K_α ⊗ K_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    basis: (BasisTag, BasisTag),
    terms: BTreeMap<(Composition, Composition), Scalar>,
}

impl TensorVector {
    pub fn zero(basis: (BasisTag, BasisTag)) -> Self {
        TensorVector {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> (BasisTag, BasisTag) {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<(Composition, Composition), Scalar> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Composition, right: Composition, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, left: &Composition, right: &Composition) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(QsymError::BasisMismatch {
                expected: format!("{}⊗{}", self.basis.0, self.basis.1),
                found: if self.basis.0 != other.basis.0 {
                    other.basis.0
                } else {
                    other.basis.1
                },
            });
        }
        let mut out = self.clone();
        for ((l, r), s) in &other.terms {
            out.add_term(l.clone(), r.clone(), s.clone());
        }
        Ok(out)
    }

    /// Apply linear maps to both legs, `(f ⊗ g)(self)`.
    pub fn map_legs<F, G>(&self, f: F, g: G) -> Result<TensorVector>
    where
        F: Fn(&Composition) -> Result<QSymVector>,
        G: Fn(&Composition) -> Result<QSymVector>,
    {
        let mut out: Option<TensorVector> = None;
        let mut left_cache: HashMap<&Composition, QSymVector> = HashMap::new();
        let mut right_cache: HashMap<&Composition, QSymVector> = HashMap::new();
        for ((l, r), s) in &self.terms {
            if !left_cache.contains_key(l) {
                left_cache.insert(l, f(l)?);
            }
            if !right_cache.contains_key(r) {
                right_cache.insert(r, g(r)?);
            }
            let (fl, gr) = (&left_cache[l], &right_cache[r]);
            let acc = out.get_or_insert_with(|| TensorVector::zero((fl.basis, gr.basis)));
            for (a, x) in &fl.terms {
                for (b, y) in &gr.terms {
                    acc.add_term(a.clone(), b.clone(), s * x * y);
                }
            }
        }
        Ok(out.unwrap_or_else(|| TensorVector::zero(self.basis)))
    }

    /// `(ε ⊗ id)` applied to this tensor.
    pub fn counit_left(&self) -> QSymVector {
        let mut v = QSymVector::zero(self.basis.1);
        for ((l, r), s) in &self.terms {
            if l.is_empty() {
                v.add_term(r.clone(), s.clone());
            }
        }
        v
    }

    /// `(id ⊗ ε)` applied to this tensor.
    pub fn counit_right(&self) -> QSymVector {
        let mut v = QSymVector::zero(self.basis.0);
        for ((l, r), s) in &self.terms {
            if r.is_empty() {
                v.add_term(l.clone(), s.clone());
            }
        }
        v
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn mul_with<P>(&self, other: &Self, product: P) -> Result<TensorVector>
    where
        P: Fn(&QSymVector, &QSymVector) -> Result<QSymVector>,
    {
        let mut out = TensorVector::zero(self.basis);
        for ((a, b), s) in &self.terms {
            for ((c, d), t) in &other.terms {
                let left = product(
                    &QSymVector::basis_element(self.basis.0, a.clone()),
                    &QSymVector::basis_element(other.basis.0, c.clone()),
                )?;
                let right = product(
                    &QSymVector::basis_element(self.basis.1, b.clone()),
                    &QSymVector::basis_element(other.basis.1, d.clone()),
                )?;
                let st = s * t;
                for (x, u) in &left.terms {
                    for (y, w) in &right.terms {
                        out.add_term(x.clone(), y.clone(), &st * u * w);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn display_order(&self) -> Vec<(&(Composition, Composition), &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let wa = (a.0 .0.weight(), a.0 .1.weight());
            let wb = (b.0 .0.weight(), b.0 .1.weight());
            wa.cmp(&wb).then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((l, r), s)) in self.display_order().into_iter().enumerate() {
            let body = format!("{}[{}] ⊗ {}[{}]", self.basis.0, l, self.basis.1, r);
            write_signed(f, i == 0, s, &body)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermRepr {
    left: Composition,
    right: Composition,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    basis: [BasisTag; 2],
    terms: Vec<TensorTermRepr>,
}

impl Serialize for TensorVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TensorRepr {
            basis: [self.basis.0, self.basis.1],
            terms: self
                .terms
                .iter()
                .map(|((l, r), v)| TensorTermRepr {
                    left: l.clone(),
                    right: r.clone(),
                    num: v.numer().to_string(),
                    den: v.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TensorRepr::deserialize(d)?;
        let mut v = TensorVector::zero((repr.basis[0], repr.basis[1]));
        for t in repr.terms {
            let s = parse_scalar(&t.num, &t.den).map_err(serde::de::Error::custom)?;
            v.add_term(t.left, t.right, s);
        }
        Ok(v)
    }
}

type ShuffleMap = BTreeMap<Composition, u64>;
type ShuffleCache = RwLock<HashMap<(Composition, Composition), Arc<ShuffleMap>>>;

fn shuffle_cache() -> &'static ShuffleCache {
    static CACHE: OnceLock<ShuffleCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Drop all memoized quasi-shuffles.
pub fn clear_shuffle_cache() {
    shuffle_cache().write().unwrap().clear();
}

/// The quasi-shuffle `α * β` as a multiset of compositions.
///
/// With `α = (a)·α'` and `β = (b)·β'`,
/// `α*β = a·(α'*β) + b·(α*β') + (a+b)·(α'*β')`.
pub fn quasi_shuffle(alpha: &Composition, beta: &Composition) -> Arc<ShuffleMap> {
    if alpha.is_empty() || beta.is_empty() {
        let only = if alpha.is_empty() { beta } else { alpha };
        return Arc::new(BTreeMap::from([(only.clone(), 1)]));
    }
    let key = (alpha.clone(), beta.clone());
    if let Some(hit) = shuffle_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let (a, rest_a) = (alpha.parts()[0], &alpha.parts()[1..]);
    let (b, rest_b) = (beta.parts()[0], &beta.parts()[1..]);
    let rest_a = Composition::from_vec_unchecked(rest_a.to_vec());
    let rest_b = Composition::from_vec_unchecked(rest_b.to_vec());

    let mut out = ShuffleMap::new();
    let mut prepend = |head: u32, sub: &ShuffleMap| {
        for (d, n) in sub {
            let mut parts = Vec::with_capacity(d.len() + 1);
            parts.push(head);
            parts.extend_from_slice(d.parts());
            *out.entry(Composition::from_vec_unchecked(parts))
                .or_insert(0) += n;
        }
    };
    prepend(a, &quasi_shuffle(&rest_a, beta));
    prepend(b, &quasi_shuffle(alpha, &rest_b));
    prepend(a + b, &quasi_shuffle(&rest_a, &rest_b));

    let out = Arc::new(out);
    shuffle_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| out.clone());
    out
}

/// Product in the monomial basis.
pub fn m_product(u: &QSymVector, v: &QSymVector) -> Result<QSymVector> {
    expect_basis(u.basis, BasisTag::M)?;
    expect_basis(v.basis, BasisTag::M)?;
    let mut out = QSymVector::zero(BasisTag::M);
    for (a, x) in &u.terms {
        for (b, y) in &v.terms {
            let xy = x * y;
            for (d, n) in quasi_shuffle(a, b).iter() {
                out.add_term(d.clone(), &xy * scalar(*n as i64));
            }
        }
    }
    Ok(out)
}

/// All `β ⪯ α`, in lexicographic order.
pub fn refinements(alpha: &Composition) -> Vec<Composition> {
    let set = set_of(alpha);
    let n = alpha.weight() as u32;
    let free: Vec<u32> = (1..n).filter(|i| !set.contains(*i)).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1u64 << free.len()) {
        let mut elems: Vec<u32> = set.elements().to_vec();
        for (bit, &i) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                elems.push(i);
            }
        }
        elems.sort_unstable();
        out.push(comp_of(
            &DescentSet::new(n, elems).expect("valid descent set"),
        ));
    }
    out.sort();
    out
}

pub fn f_to_m(u: &QSymVector) -> Result<QSymVector> {
    expect_basis(u.basis, BasisTag::F)?;
    let mut out = QSymVector::zero(BasisTag::M);
    for (a, x) in &u.terms {
        for b in refinements(a) {
            out.add_term(b, x.clone());
        }
    }
    Ok(out)
}

pub fn m_to_f(u: &QSymVector) -> Result<QSymVector> {
    expect_basis(u.basis, BasisTag::M)?;
    let mut out = QSymVector::zero(BasisTag::F);
    for (a, x) in &u.terms {
        for b in refinements(a) {
            let sign = if (b.len() - a.len()) % 2 == 0 { 1 } else { -1 };
            out.add_term(b, x * scalar(sign));
        }
    }
    Ok(out)
}

/// Product in the fundamental basis, computed through `M`.
pub fn f_product(u: &QSymVector, v: &QSymVector) -> Result<QSymVector> {
    expect_basis(u.basis, BasisTag::F)?;
    expect_basis(v.basis, BasisTag::F)?;
    m_to_f(&m_product(&f_to_m(u)?, &f_to_m(v)?)?)
}

/// Coproduct in the `M` or `F` basis.
pub fn coproduct(u: &QSymVector) -> Result<TensorVector> {
    let basis = u.basis;
    if basis == BasisTag::S {
        return Err(QsymError::BasisMismatch {
            expected: "M or F".into(),
            found: basis,
        });
    }
    let mut out = TensorVector::zero((basis, basis));
    for (d, x) in &u.terms {
        let splits = set_concat_split(d);
        for (a, b) in splits.concat {
            out.add_term(a, b, x.clone());
        }
        if basis == BasisTag::F {
            for (a, b) in splits.near_concat {
                out.add_term(a, b, x.clone());
            }
        }
    }
    Ok(out)
}

/// Coefficient of `K_∅`.
pub fn counit(u: &QSymVector) -> Scalar {
    u.coefficient(&Composition::empty())
}

pub fn coefficient(u: &QSymVector, alpha: &Composition) -> Scalar {
    u.coefficient(alpha)
}

pub fn graded_component(u: &QSymVector, n: usize) -> QSymVector {
    u.graded_component(n)
}

/// `(Δ ⊗ id)(t)` and `(id ⊗ Δ)(t)` flattened to triples, for coassociativity.
pub fn coassociativity_sides<D>(t: &TensorVector, delta: D) -> Result<(TripleMap, TripleMap)>
where
    D: Fn(&QSymVector) -> Result<TensorVector>,
{
    let (bl, br) = t.basis();
    let mut left = TripleMap::new();
    let mut right = TripleMap::new();
    for ((a, b), s) in t.terms() {
        for ((x, y), u) in delta(&QSymVector::basis_element(bl, a.clone()))?.terms() {
            add_triple(&mut left, (x.clone(), y.clone(), b.clone()), s * u);
        }
        for ((x, y), u) in delta(&QSymVector::basis_element(br, b.clone()))?.terms() {
            add_triple(&mut right, (a.clone(), x.clone(), y.clone()), s * u);
        }
    }
    Ok((left, right))
}

pub type TripleMap = BTreeMap<(Composition, Composition, Composition), Scalar>;

fn add_triple(m: &mut TripleMap, key: (Composition, Composition, Composition), s: Scalar) {
    let e = m.entry(key.clone()).or_insert_with(Scalar::zero);
    *e += s;
    if e.is_zero() {
        m.remove(&key);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_of;

    fn c(parts: &[u32]) -> Composition {
        Composition::from_parts(parts)
    }

    fn m(parts: &[u32]) -> QSymVector {
        QSymVector::basis_element(BasisTag::M, c(parts))
    }

    fn f(parts: &[u32]) -> QSymVector {
        QSymVector::basis_element(BasisTag::F, c(parts))
    }

    fn vec_of(basis: BasisTag, terms: &[(&[u32], i64)]) -> QSymVector {
        QSymVector::from_terms(basis, terms.iter().map(|(p, n)| (c(p), scalar(*n))))
    }

    #[test]
    fn quasi_shuffle_examples() {
        let got = quasi_shuffle(&c(&[1, 3, 2]), &c(&[2]));
        let want: ShuffleMap = [
            (c(&[1, 3, 2, 2]), 2),
            (c(&[1, 2, 3, 2]), 1),
            (c(&[2, 1, 3, 2]), 1),
            (c(&[1, 3, 4]), 1),
            (c(&[1, 5, 2]), 1),
            (c(&[3, 3, 2]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(*got, want);
        assert_eq!(
            *quasi_shuffle(&Composition::empty(), &c(&[2, 1])),
            BTreeMap::from([(c(&[2, 1]), 1)])
        );
        assert_eq!(
            *quasi_shuffle(&c(&[1]), &c(&[1])),
            BTreeMap::from([(c(&[1, 1]), 2), (c(&[2]), 1)])
        );
    }

    #[test]
    fn m_product_examples() {
        assert_eq!(
            m_product(&m(&[1]), &m(&[1, 1])).unwrap(),
            vec_of(BasisTag::M, &[(&[1, 1, 1], 3), (&[1, 2], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            m_product(&m(&[1]), &m(&[2])).unwrap(),
            vec_of(BasisTag::M, &[(&[1, 2], 1), (&[2, 1], 1), (&[3], 1)])
        );
        let u = vec_of(BasisTag::M, &[(&[2, 1], 3), (&[4], -1)]);
        assert_eq!(m_product(&m(&[]), &u).unwrap(), u);
        assert!(m_product(&f(&[1]), &m(&[1])).is_err());
    }

    #[test]
    fn conversions() {
        assert_eq!(
            f_to_m(&f(&[2])).unwrap(),
            vec_of(BasisTag::M, &[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            m_to_f(&m(&[2])).unwrap(),
            vec_of(BasisTag::F, &[(&[2], 1), (&[1, 1], -1)])
        );
        for n in 0..=6 {
            for a in compositions_of(n) {
                assert_eq!(
                    m_to_f(&f_to_m(&f(a.parts())).unwrap()).unwrap(),
                    f(a.parts())
                );
            }
        }
        assert!(f_to_m(&m(&[1])).is_err());
    }

    #[test]
    fn f_product_examples() {
        assert_eq!(
            f_product(&f(&[1]), &f(&[2])).unwrap(),
            vec_of(BasisTag::F, &[(&[1, 2], 1), (&[2, 1], 1), (&[3], 1)])
        );
        assert!(f_product(&f(&[1]), &f(&[2]))
            .unwrap()
            .coefficient(&c(&[1, 1, 1]))
            .is_zero());
        assert_eq!(f_product(&f(&[]), &f(&[3, 1])).unwrap(), f(&[3, 1]));
    }

    #[test]
    fn coproduct_examples() {
        let d = coproduct(&m(&[1, 2])).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.coefficient(&c(&[]), &c(&[1, 2])).is_one());
        assert!(d.coefficient(&c(&[1]), &c(&[2])).is_one());
        assert!(d.coefficient(&c(&[1, 2]), &c(&[])).is_one());

        let d = coproduct(&f(&[2])).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.coefficient(&c(&[1]), &c(&[1])).is_one());

        assert_eq!(coproduct(&m(&[5])).unwrap().len(), 2);
        assert!(coproduct(&QSymVector::one(BasisTag::S)).is_err());
    }

    #[test]
    fn counit_and_coefficients() {
        assert!(counit(&m(&[])).is_one());
        assert!(counit(&f(&[3])).is_zero());
        let u = vec_of(BasisTag::M, &[(&[], 5), (&[1], -2)]);
        assert_eq!(counit(&u), scalar(5));
        let mm = m_product(&m(&[1]), &m(&[1])).unwrap();
        assert_eq!(coefficient(&mm, &c(&[1, 1])), scalar(2));
    }

    #[test]
    fn graded_parts() {
        let u = vec_of(BasisTag::M, &[(&[1], 1), (&[2], 1)]);
        assert_eq!(graded_component(&u, 2), m(&[2]));
        assert!(graded_component(&u, 3).is_zero());
        let mut total = QSymVector::zero(BasisTag::M);
        for n in 0..=u.max_weight() {
            total = total.add(&graded_component(&u, n)).unwrap();
        }
        assert_eq!(total, u);
    }

    #[test]
    fn rendering() {
        let u = m_product(&m(&[1, 3, 2]), &m(&[2])).unwrap();
        assert_eq!(
            u.to_string(),
            "M[3,3,2] + M[2,1,3,2] + M[1,5,2] + M[1,3,4] + 2 M[1,3,2,2] + M[1,2,3,2]"
        );
        assert_eq!(m_to_f(&m(&[2])).unwrap().to_string(), "F[2] - F[1,1]");
        assert_eq!(QSymVector::zero(BasisTag::S).to_string(), "0");
        assert_eq!(m(&[]).to_string(), "M[]");
        assert_eq!(
            coproduct(&m(&[1, 2])).unwrap().to_string(),
            "M[] ⊗ M[1,2] + M[1] ⊗ M[2] + M[1,2] ⊗ M[]"
        );
    }

    #[test]
    fn json_round_trip() {
        let u = QSymVector::from_terms(
            BasisTag::S,
            [
                (c(&[1, 3, 2]), scalar(2)),
                (c(&[]), BigRational::new(1.into(), 3.into())),
            ],
        );
        let s = serde_json::to_string(&u).unwrap();
        assert!(s.contains(r#"{"comp":"1,3,2","num":"2","den":"1"}"#));
        assert_eq!(serde_json::from_str::<QSymVector>(&s).unwrap(), u);

        let t = coproduct(&f(&[2, 1])).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with(r#"{"basis":["F","F"]"#));
        assert_eq!(serde_json::from_str::<TensorVector>(&s).unwrap(), t);
    }

    #[test]
    fn parse_round_trips_display() {
        let u = QSymVector::from_terms(
            BasisTag::M,
            [
                (c(&[1, 2]), scalar(2)),
                (c(&[3]), -scalar(1)),
                (Composition::empty(), scalar(1)),
            ],
        );
        assert_eq!(QSymVector::parse(&u.to_string(), BasisTag::M).unwrap(), u);
        let half = QSymVector::parse("-1/2 F[2,1]", BasisTag::F).unwrap();
        assert_eq!(
            half.coefficient(&c(&[2, 1])),
            BigRational::new(BigInt::from(-1), BigInt::from(2))
        );
        assert!(QSymVector::parse("0", BasisTag::S).unwrap().is_zero());
        assert!(QSymVector::parse("M[1] F[2]", BasisTag::M).is_err());
        assert!(QSymVector::parse("F[1]", BasisTag::M).is_err());
        assert!(QSymVector::parse("2 M[1", BasisTag::M).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn comp(max_len: usize) -> impl Strategy<Value = Composition> {
            proptest::collection::vec(1u32..4, 0..max_len).prop_map(|v| Composition::from_parts(&v))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn m_product_associative(a in comp(3), b in comp(3), c3 in comp(3)) {
                let (x, y, z) = (m(a.parts()), m(b.parts()), m(c3.parts()));
                let left = m_product(&m_product(&x, &y).unwrap(), &z).unwrap();
                let right = m_product(&x, &m_product(&y, &z).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }

            #[test]
            fn f_m_round_trip(a in comp(5)) {
                let u = f(a.parts());
                prop_assert_eq!(m_to_f(&f_to_m(&u).unwrap()).unwrap(), u);
            }

            #[test]
            fn coproduct_is_multiplicative(a in comp(3), b in comp(3)) {
                let (x, y) = (f(a.parts()), f(b.parts()));
                let lhs = coproduct(&f_product(&x, &y).unwrap()).unwrap();
                let rhs = coproduct(&x).unwrap().mul_with(&coproduct(&y).unwrap(), f_product).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
