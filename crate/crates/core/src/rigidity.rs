//! Bounded verification of the combinatorial lemmas and rigidity statements.
//!
//! Every check is exhaustive up to its configured weight and reports
//! "verified up to N", never a proof.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    coassociativity_sides, counit, f_product, f_to_m, m_product, m_to_f, scalar, BasisTag,
    QSymVector, Scalar,
};
use crate::composition::{complement, compositions_of, concat, near_concat, reversal, Composition};
use crate::error::{QsymError, Result};
use crate::morphisms::{
    basis_preservation_table, check_algebra_morphism, check_coalgebra_morphism, preserves_basis,
    sort_ascending, Image, LabelMap, NamedMap,
};
use crate::posets::{
    c_classification_predicate, down_covers, equal_down_set_pairs, figures, hasse, hasse_with,
    ordered_pair, q_classification_predicate, up_covers, OrderTag,
};
use crate::schur::{
    self, col_op, lr_coefficient, m_to_s, pieri_col, pieri_row, row_op, s_coproduct, s_product,
    s_to_m, schur_to_m, weight_cap, SkewReverseShape, Ssrct,
};

pub const SUITE_VERSION: &str = "1.0.0";

/// Registered check ids, sorted.
pub const MANIFEST: [&str; 15] = [
    "automorphism_suite",
    "c_classification",
    "complement_duality",
    "downset_rigidity_f",
    "downset_rigidity_m",
    "golden_examples",
    "lr_vertical_strip",
    "order_inclusions",
    "pieri_consistency",
    "poset_figures",
    "q_classification",
    "s_equals_f",
    "structural_laws",
    "term_counts",
    "weight_length_lemma",
];

/// Per-check weight bounds. Every field is required when deserializing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub poset_weight: usize,
    pub classification_weight: usize,
    pub pieri_weight: usize,
    pub pieri_s_weight: usize,
    pub pieri_multiplier: usize,
    pub term_count_exponent_sum: usize,
    pub term_count_max_k: usize,
    pub s_equals_f_weight: usize,
    pub lr_weight: usize,
    pub lr_max_n: usize,
    pub duality_weight: usize,
    pub algebra_morphism_weight: usize,
    pub coalgebra_morphism_weight: usize,
    pub rho_m_weight: usize,
    pub s_preservation_weight: usize,
    pub associativity_weight: usize,
    pub counit_weight: usize,
    pub coassociativity_weight: usize,
    pub bialgebra_weight: usize,
    pub mf_round_trip_weight: usize,
    pub ms_round_trip_weight: usize,
    pub s_coalgebra_weight: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            poset_weight: 9,
            classification_weight: 10,
            pieri_weight: 6,
            pieri_s_weight: 5,
            pieri_multiplier: 3,
            term_count_exponent_sum: 3,
            term_count_max_k: 2,
            s_equals_f_weight: 7,
            lr_weight: 6,
            lr_max_n: 3,
            duality_weight: 10,
            algebra_morphism_weight: 7,
            coalgebra_morphism_weight: 7,
            rho_m_weight: 8,
            s_preservation_weight: 4,
            associativity_weight: 8,
            counit_weight: 8,
            coassociativity_weight: 7,
            bialgebra_weight: 6,
            mf_round_trip_weight: 9,
            ms_round_trip_weight: 7,
            s_coalgebra_weight: 5,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SuiteConfig = serde_json::from_str(text)
            .map_err(|e| QsymError::InvalidInput(format!("bounds required: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Lower the bounds of the `S`-basis checks to at most `n`. The search
    /// for maps that move the `S` basis keeps its bound: the first
    /// counterexamples have weight 4.
    pub fn with_s_bound(mut self, n: usize) -> Self {
        for b in [
            &mut self.pieri_s_weight,
            &mut self.s_equals_f_weight,
            &mut self.lr_weight,
            &mut self.ms_round_trip_weight,
            &mut self.s_coalgebra_weight,
        ] {
            *b = (*b).min(n);
        }
        self.pieri_multiplier = self.pieri_multiplier.min(n);
        self.lr_max_n = self.lr_max_n.min(n);
        self
    }

    /// Largest weight any `S`-basis computation will reach.
    pub fn max_s_weight(&self) -> usize {
        [
            self.pieri_s_weight + self.pieri_multiplier,
            self.pieri_s_weight + 1,
            self.s_equals_f_weight,
            self.lr_weight,
            self.s_preservation_weight,
            self.ms_round_trip_weight,
            self.s_coalgebra_weight,
        ]
        .into_iter()
        .max()
        .unwrap()
    }

    pub fn validate(&self) -> Result<()> {
        let v = serde_json::to_value(self)?;
        for (k, x) in v.as_object().unwrap() {
            if x.as_u64() == Some(0) && k != "term_count_max_k" && k != "term_count_exponent_sum" {
                return Err(QsymError::InvalidInput(format!(
                    "bound {k} must be positive"
                )));
            }
        }
        let need = self.max_s_weight();
        if need > weight_cap() {
            return Err(QsymError::BoundExceeded {
                weight: need,
                cap: weight_cap(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub bound: usize,
    pub pass: bool,
    /// Counterexamples; nonempty when the check fails.
    pub details: Vec<String>,
    /// Observations recorded for inspection, such as boundary cases.
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite_version: String,
    pub config: SuiteConfig,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    /// The report without timings, for comparing runs.
    pub fn without_timings(&self) -> VerificationReport {
        let mut r = self.clone();
        for x in &mut r.results {
            x.elapsed_ms = 0;
        }
        r
    }
}

/// What a check found before timing and bookkeeping are attached.
#[derive(Clone, Debug, Default)]
pub struct Findings {
    pub bound: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Findings {
    fn new(bound: usize) -> Self {
        Findings {
            bound,
            ..Default::default()
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Display>(&mut self, label: &str, got: &T, want: &T) {
        if got != want {
            self.failures
                .push(format!("{label}: got {got}, expected {want}"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn merge(&mut self, other: Findings) {
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

type CheckFn = fn(&SuiteConfig) -> Result<Findings>;

fn registry() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("automorphism_suite", |c| {
            check_automorphism_suite(
                c.algebra_morphism_weight,
                c.coalgebra_morphism_weight,
                c.rho_m_weight,
                c.s_preservation_weight,
            )
        }),
        ("c_classification", |c| {
            check_c_classification(c.classification_weight)
        }),
        ("complement_duality", |c| {
            check_complement_duality(c.duality_weight)
        }),
        ("downset_rigidity_f", |c| {
            check_downset_rigidity(OrderTag::F, c.poset_weight)
        }),
        ("downset_rigidity_m", |c| {
            check_downset_rigidity(OrderTag::M, c.poset_weight)
        }),
        ("golden_examples", |_| check_golden_examples()),
        ("lr_vertical_strip", |c| {
            check_lr_vertical_strip(c.lr_weight, c.lr_max_n)
        }),
        ("order_inclusions", |c| {
            check_order_inclusions(c.poset_weight)
        }),
        ("pieri_consistency", |c| {
            check_pieri_consistency(c.pieri_weight, c.pieri_s_weight, c.pieri_multiplier)
        }),
        ("poset_figures", |_| check_poset_figures()),
        ("q_classification", |c| {
            check_q_classification(c.classification_weight)
        }),
        ("s_equals_f", |c| check_s_equals_f(c.s_equals_f_weight)),
        ("structural_laws", check_structural_laws),
        ("term_counts", |c| {
            check_lemma_term_counts(c.term_count_exponent_sum, c.term_count_max_k)
        }),
        ("weight_length_lemma", |c| {
            check_weight_length_lemma(c.poset_weight)
        }),
    ]
}

/// Run one check, turning errors and panics into failed results.
pub fn run_check(id: &str, config: &SuiteConfig) -> Result<CheckResult> {
    let (_, f) = registry()
        .into_iter()
        .find(|(name, _)| *name == id)
        .ok_or_else(|| QsymError::InvalidInput(format!("unknown check {id:?}")))?;
    Ok(execute(id, f, config))
}

fn execute(id: &str, f: CheckFn, config: &SuiteConfig) -> CheckResult {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| f(config)));
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (bound, details, notes) = match outcome {
        Ok(Ok(found)) => (found.bound, found.failures, found.notes),
        Ok(Err(e)) => (0, vec![format!("error: {e}")], vec![]),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            (0, vec![format!("panic: {msg}")], vec![])
        }
    };
    CheckResult {
        check_id: id.to_string(),
        bound,
        pass: details.is_empty(),
        details,
        notes,
        elapsed_ms,
    }
}

/// Run every registered check, in parallel; results are sorted by id.
pub fn run_all(config: &SuiteConfig) -> Result<VerificationReport> {
    run_selected(config, &MANIFEST)
}

pub fn run_selected(config: &SuiteConfig, ids: &[&str]) -> Result<VerificationReport> {
    config.validate()?;
    let reg = registry();
    let mut chosen = Vec::new();
    for id in ids {
        let entry = reg
            .iter()
            .find(|(name, _)| name == id)
            .ok_or_else(|| QsymError::InvalidInput(format!("unknown check {id:?}")))?;
        chosen.push(*entry);
    }
    let mut results: Vec<CheckResult> = chosen
        .par_iter()
        .map(|(id, f)| execute(id, *f, config))
        .collect();
    results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(VerificationReport {
        suite_version: SUITE_VERSION.to_string(),
        config: config.clone(),
        results,
    })
}

fn c(parts: &[u32]) -> Composition {
    Composition::from_parts(parts)
}

fn basis(b: BasisTag, parts: &[u32]) -> QSymVector {
    QSymVector::basis_element(b, c(parts))
}

fn ones(b: BasisTag, items: &[&[u32]]) -> QSymVector {
    QSymVector::from_terms(b, items.iter().map(|p| (c(p), Scalar::one())))
}

/// The worked examples, evaluated exactly.
pub fn check_golden_examples() -> Result<Findings> {
    use BasisTag::{F, M, S};
    let mut f = Findings::new(0);
    let want = QSymVector::from_terms(
        M,
        [
            (c(&[1, 3, 2, 2]), scalar(2)),
            (c(&[1, 2, 3, 2]), scalar(1)),
            (c(&[2, 1, 3, 2]), scalar(1)),
            (c(&[1, 3, 4]), scalar(1)),
            (c(&[1, 5, 2]), scalar(1)),
            (c(&[3, 3, 2]), scalar(1)),
        ],
    );
    f.expect_eq(
        "M132·M2",
        &m_product(&basis(M, &[1, 3, 2]), &basis(M, &[2]))?,
        &want,
    );
    f.expect_eq(
        "M1·M1",
        &m_product(&basis(M, &[1]), &basis(M, &[1]))?,
        &QSymVector::from_terms(M, [(c(&[1, 1]), scalar(2)), (c(&[2]), scalar(1))]),
    );
    f.expect_eq(
        "M1·M11",
        &m_product(&basis(M, &[1]), &basis(M, &[1, 1]))?,
        &QSymVector::from_terms(
            M,
            [
                (c(&[1, 1, 1]), scalar(3)),
                (c(&[1, 2]), scalar(1)),
                (c(&[2, 1]), scalar(1)),
            ],
        ),
    );
    let f1f2 = f_product(&basis(F, &[1]), &basis(F, &[2]))?;
    f.expect_eq("F1·F2", &f1f2, &ones(F, &[&[1, 2], &[2, 1], &[3]]));
    f.expect(f1f2.coefficient(&c(&[1, 1, 1])).is_zero(), || {
        "⟨F111, F1F2⟩ ≠ 0".into()
    });
    f.expect_eq(
        "S11·S11",
        &s_product(&basis(S, &[1, 1]), &basis(S, &[1, 1]))?,
        &ones(
            S,
            &[&[2, 2], &[2, 1, 1], &[1, 2, 1], &[1, 1, 2], &[1, 1, 1, 1]],
        ),
    );
    f.expect_eq(
        "S2·S2",
        &s_product(&basis(S, &[2]), &basis(S, &[2]))?,
        &ones(S, &[&[4], &[3, 1], &[2, 2], &[1, 3]]),
    );
    for i in 1..=3u32 {
        let mut a = vec![1; i as usize];
        a.push(2);
        let ones_i = vec![1u32; i as usize];
        let with = |tail: &[u32], extra_one: bool| {
            let mut v = ones_i.clone();
            if extra_one {
                v.push(1);
            }
            v.extend_from_slice(tail);
            v
        };
        let want = ones(
            S,
            &[
                &with(&[4], false),
                &with(&[3], true),
                &with(&[3, 1], false),
                &with(&[2, 2], false),
            ],
        );
        let label = format!("S2·S(1^{i},2)");
        f.expect_eq(&label, &s_product(&basis(S, &[2]), &basis(S, &a))?, &want);
    }
    let alpha = c(&[1, 2, 3]);
    f.expect(row_op(&alpha, &[2, 3])? == Some(c(&[1, 2, 1])), || {
        "row_{2,3}(1,2,3)".into()
    });
    f.expect(col_op(&alpha, &[2, 3])? == Some(c(&[1, 1, 2])), || {
        "col_{2,3}(1,2,3)".into()
    });
    f.expect(schur::rem(&c(&[1, 1]), 3).is_none(), || {
        "rem_3(1,1) should be absent".into()
    });

    let shape = SkewReverseShape::new(c(&[3, 4, 2, 3]), c(&[1, 2]))?;
    let example = Ssrct::new(
        shape,
        vec![vec![4, 3, 1], vec![5, 4, 4, 3], vec![6], vec![7]],
    )?;
    f.expect(example.content() == vec![1, 0, 2, 3, 1, 1, 1], || {
        format!("content of the example filling is {:?}", example.content())
    });
    f.note(format!(
        "the example filling of (3,4,2,3)//(1,2) is {} under the triple rule",
        if example.is_valid() {
            "valid"
        } else {
            "rejected"
        }
    ));

    for (beta, label) in [(c(&[3]), "C^{13}_{1,3}"), (c(&[1, 2]), "C^{13}_{1,12}")] {
        let got = lr_coefficient(&c(&[1]), &beta, &c(&[1, 3]))?;
        f.expect(got.is_one(), || format!("{label} = {got}"));
    }
    Ok(f)
}

fn parse_edges(edges: &[(&str, &str)]) -> BTreeSet<(Composition, Composition)> {
    edges
        .iter()
        .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
        .collect()
}

fn compare_with_figure(
    order: OrderTag,
    got: &BTreeSet<(Composition, Composition)>,
    f: &mut Findings,
) {
    let want = parse_edges(figures::edges(order));
    for (a, b) in got.difference(&want) {
        f.failures.push(format!("{order}: extra edge {a} -> {b}"));
    }
    for (a, b) in want.difference(got) {
        f.failures.push(format!("{order}: missing edge {a} -> {b}"));
    }
}

/// Hasse diagrams of rank ≤ 4 against the reference figures.
pub fn check_poset_figures() -> Result<Findings> {
    let mut f = Findings::new(4);
    for order in OrderTag::ALL {
        let h = hasse(order, 4)?;
        compare_with_figure(order, &h.edge_set(), &mut f);
        f.note(format!("{order}: {} edges", h.edges.len()));
    }
    Ok(f)
}

/// Cover-level inclusions `≺_C ⊆ ≺_M`, `≺_Q ⊆ ≺_M`, `≺_M ⊆ ≺_F`, gradedness
/// and up/down duality for all weights up to `n`, plus the rank-4 figures.
pub fn check_order_inclusions(n: usize) -> Result<Findings> {
    check_order_inclusions_with(n, &|a| up_covers(OrderTag::C, a))
}

/// As [`check_order_inclusions`], with a replacement for the `C` covers.
pub fn check_order_inclusions_with(
    n: usize,
    c_covers: &(dyn Fn(&Composition) -> BTreeSet<Composition> + Sync),
) -> Result<Findings> {
    let labels: Vec<Composition> = (0..n).flat_map(compositions_of).collect();
    let per_label: Vec<Findings> = labels
        .par_iter()
        .map(|a| {
            let mut f = Findings::default();
            let cc = c_covers(a);
            let q = up_covers(OrderTag::Q, a);
            let m = up_covers(OrderTag::M, a);
            let fc = up_covers(OrderTag::F, a);
            for (name, small, big) in [("C", &cc, &m), ("Q", &q, &m), ("M", &m, &fc)] {
                for b in small.difference(big) {
                    f.failures
                        .push(format!("{a} ≺_{name} {b} but not the larger order"));
                }
            }
            for b in &cc {
                if b.weight() != a.weight() + 1 {
                    f.failures.push(format!("C cover {a} -> {b} is not graded"));
                }
            }
            for (order, ups) in [(OrderTag::Q, &q), (OrderTag::M, &m), (OrderTag::F, &fc)] {
                for b in ups {
                    if b.weight() != a.weight() + 1 {
                        f.failures
                            .push(format!("{order} cover {a} -> {b} is not graded"));
                    }
                }
            }
            updown_duality(a, &mut f);
            f
        })
        .collect();
    let mut f = Findings::new(n);
    for x in per_label {
        f.merge(x);
    }
    if n >= 4 {
        compare_with_figure(
            OrderTag::C,
            &hasse_with(OrderTag::C, 4, c_covers)?.edge_set(),
            &mut f,
        );
        for order in [OrderTag::M, OrderTag::F, OrderTag::Q] {
            compare_with_figure(order, &hasse(order, 4)?.edge_set(), &mut f);
        }
    }
    Ok(f)
}

/// `b` is an up cover of `a` exactly when `a` is a down cover of `b`.
fn updown_duality(a: &Composition, f: &mut Findings) {
    for order in OrderTag::ALL {
        for b in up_covers(order, a) {
            if !down_covers(order, &b).contains(a) {
                f.failures
                    .push(format!("{order}: {a} -> {b} missing from D({b})"));
            }
        }
        for b in down_covers(order, a) {
            if !up_covers(order, &b).contains(a) {
                f.failures
                    .push(format!("{order}: {b} in D({a}) but {a} not an up cover"));
            }
        }
    }
}

/// No two distinct compositions of weight `4..=n` share a down-cover set.
pub fn check_downset_rigidity(order: OrderTag, n: usize) -> Result<Findings> {
    let mut f = Findings::new(n);
    for w in 4..=n {
        for (a, b) in equal_down_set_pairs(order, w) {
            f.failures.push(format!("D({a}) = D({b})"));
        }
    }
    let small = equal_down_set_pairs(order, 3);
    f.note(format!(
        "weight 3 pairs: {}",
        small
            .iter()
            .map(|(a, b)| format!("{{({a}),({b})}}"))
            .collect::<Vec<_>>()
            .join(" ")
    ));
    Ok(f)
}

/// Equal down-sets force equal weight and length, for `Q`, `M` and `F`.
pub fn check_weight_length_lemma(n: usize) -> Result<Findings> {
    let mut f = Findings::new(n);
    for order in [OrderTag::Q, OrderTag::M, OrderTag::F] {
        let mut groups: BTreeMap<BTreeSet<Composition>, Vec<Composition>> = BTreeMap::new();
        for w in 3..=n {
            for a in compositions_of(w) {
                groups.entry(down_covers(order, &a)).or_default().push(a);
            }
        }
        for members in groups.values() {
            let first = &members[0];
            for other in &members[1..] {
                if other.weight() != first.weight() || other.len() != first.len() {
                    f.failures.push(format!(
                        "{order}: D({first}) = D({other}) with different weight or length"
                    ));
                }
            }
        }
    }
    Ok(f)
}

fn check_classification(
    order: OrderTag,
    lo: usize,
    n: usize,
    predicate: fn(&Composition, &Composition) -> bool,
) -> Findings {
    let mut f = Findings::new(n);
    let per_weight: Vec<(usize, Findings)> = (lo..=n)
        .into_par_iter()
        .map(|w| {
            let mut f = Findings::default();
            let found: BTreeSet<_> = equal_down_set_pairs(order, w).into_iter().collect();
            let comps = compositions_of(w);
            let mut predicted = BTreeSet::new();
            for (i, a) in comps.iter().enumerate() {
                for b in &comps[i + 1..] {
                    if predicate(a, b) {
                        predicted.insert(ordered_pair(a.clone(), b.clone()));
                    }
                }
            }
            for (a, b) in found.difference(&predicted) {
                f.failures.push(format!(
                    "{order}: D({a}) = D({b}) but the predicate rejects it"
                ));
            }
            for (a, b) in predicted.difference(&found) {
                f.failures.push(format!(
                    "{order}: predicate accepts {{{a}, {b}}} but the down-sets differ"
                ));
            }
            if w <= lo + 2 {
                f.note(format!(
                    "weight {w}: {}",
                    found
                        .iter()
                        .map(|(a, b)| format!("{{({a}),({b})}}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            } else {
                f.note(format!("weight {w}: {} pairs", found.len()));
            }
            (w, f)
        })
        .collect();
    for (_, x) in per_weight {
        f.merge(x);
    }
    f
}

pub fn check_q_classification(n: usize) -> Result<Findings> {
    Ok(check_classification(
        OrderTag::Q,
        3,
        n,
        q_classification_predicate,
    ))
}

pub fn check_c_classification(n: usize) -> Result<Findings> {
    Ok(check_classification(
        OrderTag::C,
        2,
        n,
        c_classification_predicate,
    ))
}

/// `M_1 M_α` written out as the two sums over insertions of a 1 and
/// increments of a part.
fn m1_two_sum(alpha: &Composition) -> QSymVector {
    let a = alpha.parts();
    let mut out = QSymVector::zero(BasisTag::M);
    for r in 0..=a.len() {
        let mut v = a[..r].to_vec();
        v.push(1);
        v.extend_from_slice(&a[r..]);
        out.add_term(Composition::from_parts(&v), Scalar::one());
    }
    for r in 0..a.len() {
        let mut v = a.to_vec();
        v[r] += 1;
        out.add_term(Composition::from_parts(&v), Scalar::one());
    }
    out
}

fn cover_sum(basis: BasisTag, order: OrderTag, alpha: &Composition) -> QSymVector {
    QSymVector::from_terms(
        basis,
        up_covers(order, alpha)
            .into_iter()
            .map(|b| (b, Scalar::one())),
    )
}

/// Pieri rules against direct products: `M` and `F` for `|α| ≤ n_mf`, `S`
/// for `|α| ≤ n_s` with row and column multipliers up to `mult`.
pub fn check_pieri_consistency(n_mf: usize, n_s: usize, mult: usize) -> Result<Findings> {
    use BasisTag::{F, M, S};
    let mut f = Findings::new(n_mf);
    let mf_labels: Vec<Composition> = (0..=n_mf).flat_map(compositions_of).collect();
    let mf: Vec<Result<Findings>> = mf_labels
        .par_iter()
        .map(|a| {
            let mut f = Findings::default();
            let m1 = m_product(&basis(M, &[1]), &QSymVector::basis_element(M, a.clone()))?;
            f.expect_eq(&format!("M1·M{a}"), &m1, &m1_two_sum(a));
            let support: BTreeSet<Composition> = m1.terms().keys().cloned().collect();
            f.expect(support == up_covers(OrderTag::M, a), || {
                format!("support of M1·M{a} differs from the M-covers")
            });
            let f1 = f_product(&basis(F, &[1]), &QSymVector::basis_element(F, a.clone()))?;
            f.expect_eq(&format!("F1·F{a}"), &f1, &cover_sum(F, OrderTag::F, a));
            Ok(f)
        })
        .collect();
    for x in mf {
        f.merge(x?);
    }

    let s_labels: Vec<Composition> = (0..=n_s).flat_map(compositions_of).collect();
    let s: Vec<Result<Findings>> = s_labels
        .par_iter()
        .map(|a| {
            let mut f = Findings::default();
            let sa = QSymVector::basis_element(S, a.clone());
            let s1 = s_product(&basis(S, &[1]), &sa)?;
            f.expect_eq(&format!("S1·S{a}"), &s1, &cover_sum(S, OrderTag::Q, a));
            for k in 1..=mult as u32 {
                let row = s_product(&QSymVector::basis_element(S, Composition::row(k)), &sa)?;
                f.expect_eq(&format!("S{k}·S{a}"), &row, &pieri_row(k as usize, a)?);
                let col = s_product(&QSymVector::basis_element(S, Composition::column(k)), &sa)?;
                f.expect_eq(&format!("S(1^{k})·S{a}"), &col, &pieri_col(k as usize, a)?);
            }
            Ok(f)
        })
        .collect();
    for x in s {
        f.merge(x?);
    }
    f.note(format!(
        "M and F up to weight {n_mf}; S up to weight {n_s} with multipliers up to {mult}"
    ));
    Ok(f)
}

/// `(1^{i_1}, 2^{j_1}, …, 1^{i_k}, 2^{j_k})` followed by `tail`.
fn family(is: &[u32], js: &[u32], extra_two: bool, tail: &[u32]) -> Composition {
    let mut v = Vec::new();
    for (t, (&i, &j)) in is.iter().zip(js).enumerate() {
        v.extend(std::iter::repeat_n(1, i as usize));
        let last = t + 1 == is.len();
        v.extend(std::iter::repeat_n(
            2,
            j as usize + usize::from(last && extra_two),
        ));
    }
    if is.is_empty() && extra_two {
        v.push(2);
    }
    v.extend_from_slice(tail);
    Composition::from_parts(&v)
}

fn tuples(len: usize, max_sum: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=max_sum {
        for mut rest in tuples(len - 1, max_sum - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Term counts of `S_2 S_α` for the two composition families: `3Σj + 4` and
/// `3Σj + 6`, all coefficients 1.
pub fn check_lemma_term_counts(max_exponent_sum: usize, max_k: usize) -> Result<Findings> {
    let mut f = Findings::new(max_exponent_sum);
    let mut cases = Vec::new();
    for k in 0..=max_k {
        for is in tuples(k, max_exponent_sum as u32) {
            for js in tuples(k, max_exponent_sum as u32) {
                let jsum: u32 = js.iter().sum();
                cases.push((family(&is, &js, false, &[1, 2]), 3 * jsum as usize + 4));
                cases.push((family(&is, &js, true, &[1]), 3 * jsum as usize + 6));
            }
        }
    }
    cases.sort();
    cases.dedup();
    let cross_max = weight_cap().min(8);
    let results: Vec<Result<Findings>> = cases
        .par_iter()
        .map(|(alpha, want)| {
            let mut f = Findings::default();
            let p = pieri_row(2, alpha)?;
            f.expect(p.len() == *want, || {
                format!("S2·S({alpha}) has {} terms, expected {want}", p.len())
            });
            f.expect(p.iter().all(|(_, s)| s.is_one()), || {
                format!("S2·S({alpha}) has a coefficient other than 1")
            });
            if alpha.weight() + 2 <= cross_max {
                let direct = s_product(
                    &basis(BasisTag::S, &[2]),
                    &QSymVector::basis_element(BasisTag::S, alpha.clone()),
                )?;
                f.expect(direct == p, || {
                    format!("S2·S({alpha}) differs from the row Pieri rule")
                });
            }
            Ok(f)
        })
        .collect();
    for x in results {
        f.merge(x?);
    }
    f.note(format!(
        "{} compositions checked through the row Pieri rule, products of weight ≤ {cross_max} also multiplied directly",
        cases.len()
    ));
    Ok(f)
}

/// `α = (m, 1^{e_1}, 2, 1^{e_2}, …, 2, 1^f)` with `m ≠ 1` (possibly absent)
/// and every `e_i ≥ 1`.
pub fn s_equals_f_form(alpha: &Composition) -> bool {
    let parts = alpha.parts();
    let rest = match parts.first() {
        Some(&m) if m >= 2 => &parts[1..],
        _ => parts,
    };
    rest.iter().enumerate().all(|(i, &p)| match p {
        1 => true,
        2 => i > 0 && rest[i - 1] == 1,
        _ => false,
    })
}

/// `S_α = F_α` exactly for the compositions of [`s_equals_f_form`].
pub fn check_s_equals_f(n: usize) -> Result<Findings> {
    let mut f = Findings::new(n);
    let labels: Vec<Composition> = (0..=n).flat_map(compositions_of).collect();
    let rows: Vec<Result<(Composition, bool)>> = labels
        .par_iter()
        .map(|a| {
            let fm = f_to_m(&QSymVector::basis_element(BasisTag::F, a.clone()))?;
            Ok((a.clone(), *schur_to_m(a) == fm))
        })
        .collect();
    let mut equal = Vec::new();
    for r in rows {
        let (a, eq) = r?;
        if eq {
            equal.push(a.to_string());
        }
        let predicted = s_equals_f_form(&a);
        f.expect(eq == predicted, || {
            format!(
                "S({a}) {} F({a}) but the form predicts {}",
                if eq { "=" } else { "≠" },
                if predicted { "equality" } else { "inequality" }
            )
        });
    }
    f.note(format!(
        "{} of {} compositions have S = F",
        equal.len(),
        labels.len()
    ));
    Ok(f)
}

/// `C^γ_{1^m, β} = 1` exactly when `β ≤_C γ` and `γ⫽β` is a vertical strip
/// of size `m`, for `|γ| ≤ n` and `m ≤ max_m`.
pub fn check_lr_vertical_strip(n: usize, max_m: usize) -> Result<Findings> {
    let mut f = Findings::new(n);
    let gammas: Vec<Composition> = (1..=n).flat_map(compositions_of).collect();
    let per: Vec<Result<Findings>> = gammas
        .par_iter()
        .map(|g| {
            let mut f = Findings::default();
            let d = s_coproduct(&QSymVector::basis_element(BasisTag::S, g.clone()))?;
            for m in 1..=max_m.min(g.weight()) {
                let left = Composition::column(m as u32);
                for b in compositions_of(g.weight() - m) {
                    let got = d.coefficient(&left, &b);
                    let strip = SkewReverseShape::new(g.clone(), b.clone())
                        .map(|s| s.is_vertical_strip())
                        .unwrap_or(false);
                    let want = if strip { Scalar::one() } else { Scalar::zero() };
                    f.expect(got == want, || {
                        format!("C^({g})_(1^{m}),({b}) = {got}, vertical strip rule gives {want}")
                    });
                }
            }
            Ok(f)
        })
        .collect();
    for x in per {
        f.merge(x?);
    }
    Ok(f)
}

/// `(α·β)^c = α^c ⊙ β^c` and `(α⊙β)^c = α^c · β^c` for nonempty `α`, `β`.
pub fn check_complement_duality(n: usize) -> Result<Findings> {
    let mut f = Findings::new(n);
    let mut count = 0usize;
    for wa in 1..n {
        for wb in 1..=n - wa {
            for a in compositions_of(wa) {
                let ac = complement(&a);
                for b in compositions_of(wb) {
                    let bc = complement(&b);
                    count += 1;
                    if complement(&concat(&a, &b)) != near_concat(&ac, &bc)? {
                        f.failures.push(format!("(({a})·({b}))^c"));
                    }
                    if complement(&near_concat(&a, &b)?) != concat(&ac, &bc) {
                        f.failures.push(format!("(({a})⊙({b}))^c"));
                    }
                }
            }
        }
    }
    f.note(format!("{count} pairs"));
    Ok(f)
}

/// Algebra and coalgebra behaviour of ρ, Ψ, ω and their action on the `M`
/// and `S` bases.
pub fn check_automorphism_suite(
    algebra_bound: usize,
    coalgebra_bound: usize,
    rho_m_bound: usize,
    s_bound: usize,
) -> Result<Findings> {
    let mut f = Findings::new(algebra_bound);
    for map in NamedMap::NONTRIVIAL {
        let r = check_algebra_morphism(&map, algebra_bound)?;
        f.expect(r.pass, || {
            format!(
                "{map} is not multiplicative: {}",
                r.witness.clone().unwrap_or_default()
            )
        });
    }
    let control = check_algebra_morphism(&sort_ascending(), algebra_bound.min(5))?;
    f.expect(!control.pass, || {
        "sorting the parts passed the algebra check".into()
    });
    f.note(format!(
        "control map sort fails at {}",
        control.witness.unwrap_or_default()
    ));

    let psi = check_coalgebra_morphism(&NamedMap::Psi, coalgebra_bound)?;
    f.expect(psi.pass, || {
        format!(
            "psi is not comultiplicative at {}",
            psi.witness.clone().unwrap_or_default()
        )
    });
    let id = check_coalgebra_morphism(&NamedMap::Identity, coalgebra_bound.min(4))?;
    f.expect(id.pass, || "identity failed the coalgebra check".into());
    for map in [NamedMap::Rho, NamedMap::Omega] {
        let r = check_coalgebra_morphism(&map, coalgebra_bound)?;
        match &r.witness {
            Some(w) if !r.pass => {
                let weight = w.parse::<Composition>()?.weight();
                f.expect(weight <= 3, || {
                    format!("{map} coalgebra witness {w} has weight {weight}")
                });
                f.note(format!("{map} is not a coalgebra map: witness {w}"));
            }
            _ => f.failures.push(format!("{map} passed the coalgebra check")),
        }
    }

    let rho_m = basis_preservation_table(&NamedMap::Rho, BasisTag::M, rho_m_bound)?;
    for (a, img) in &rho_m {
        let want = Image::Basis {
            label: reversal(a),
            sign: 1,
        };
        f.expect(*img == want, || {
            format!("rho(M{a}) is not M{}", reversal(a))
        });
    }
    for map in [NamedMap::Psi, NamedMap::Omega] {
        let t = basis_preservation_table(&map, BasisTag::M, 3)?;
        match t.iter().find(|(_, img)| **img == Image::Combination) {
            Some((a, _)) => f.note(format!("{map}(M{a}) is not a basis element")),
            None => f
                .failures
                .push(format!("{map} preserves the M basis up to weight 3")),
        }
    }
    for map in NamedMap::NONTRIVIAL {
        let t = basis_preservation_table(&map, BasisTag::S, s_bound)?;
        if preserves_basis(&t) {
            f.failures.push(format!(
                "{map} preserves the S basis up to weight {s_bound}"
            ));
        } else {
            let (a, _) = t
                .iter()
                .find(|(_, img)| !matches!(img, Image::Basis { sign: 1, .. }))
                .unwrap();
            f.note(format!("{map}(S{a}) is not an S basis element"));
        }
    }

    // involutions that commute, checked on labels and through the M basis
    let maps = NamedMap::ALL;
    for a in (0..=rho_m_bound).flat_map(compositions_of) {
        for m in maps {
            f.expect(m.act(&m.act(&a)) == a, || {
                format!("{m} is not an involution at {a}")
            });
            for m2 in maps {
                f.expect(m.act(&m2.act(&a)) == m2.act(&m.act(&a)), || {
                    format!("{m} and {m2} do not commute at {a}")
                });
            }
        }
    }
    for a in (0..=4).flat_map(compositions_of) {
        let u = QSymVector::basis_element(BasisTag::M, a.clone());
        for m in NamedMap::NONTRIVIAL {
            let twice = crate::morphisms::apply(&m, &crate::morphisms::apply(&m, &u)?)?;
            f.expect(twice == u, || format!("{m}² ≠ id on M{a}"));
        }
    }
    Ok(f)
}

fn labels_up_to(n: usize) -> Vec<Composition> {
    (0..=n).flat_map(compositions_of).collect()
}

fn pairs_up_to(n: usize) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for total in 0..=n {
        for wa in 0..=total {
            for a in compositions_of(wa) {
                for b in compositions_of(total - wa) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

fn collect(results: Vec<Result<Findings>>, into: &mut Findings) -> Result<()> {
    for r in results {
        into.merge(r?);
    }
    Ok(())
}

/// Associativity, commutativity, counit, coassociativity, bialgebra
/// compatibility and basis round trips.
pub fn check_structural_laws(cfg: &SuiteConfig) -> Result<Findings> {
    use BasisTag::{F, M, S};
    let mut f = Findings::new(cfg.associativity_weight);

    // M: associativity and commutativity on basis triples
    let mut triples = Vec::new();
    for (a, b) in pairs_up_to(cfg.associativity_weight) {
        let rest = cfg.associativity_weight - a.weight() - b.weight();
        for w in 0..=rest {
            for c3 in compositions_of(w) {
                triples.push((a.clone(), b.clone(), c3));
            }
        }
    }
    let r: Vec<Result<Findings>> = triples
        .par_iter()
        .map(|(a, b, c3)| {
            let mut f = Findings::default();
            let (x, y, z) = (
                QSymVector::basis_element(M, a.clone()),
                QSymVector::basis_element(M, b.clone()),
                QSymVector::basis_element(M, c3.clone()),
            );
            let left = m_product(&m_product(&x, &y)?, &z)?;
            let right = m_product(&x, &m_product(&y, &z)?)?;
            f.expect(left == right, || format!("M associativity at {a}|{b}|{c3}"));
            if c3.is_empty() {
                f.expect(m_product(&x, &y)? == m_product(&y, &x)?, || {
                    format!("M commutativity at {a}|{b}")
                });
            }
            Ok(f)
        })
        .collect();
    collect(r, &mut f)?;
    f.note(format!("{} M triples", triples.len()));

    // F products commute and agree with M through conversion
    let r: Vec<Result<Findings>> = pairs_up_to(cfg.bialgebra_weight)
        .par_iter()
        .map(|(a, b)| {
            let mut f = Findings::default();
            let (x, y) = (
                QSymVector::basis_element(F, a.clone()),
                QSymVector::basis_element(F, b.clone()),
            );
            f.expect(f_product(&x, &y)? == f_product(&y, &x)?, || {
                format!("F commutativity at {a}|{b}")
            });
            Ok(f)
        })
        .collect();
    collect(r, &mut f)?;

    // counit and coassociativity in M and F
    for basis_tag in [M, F] {
        let r: Vec<Result<Findings>> =
            labels_up_to(cfg.counit_weight.max(cfg.coassociativity_weight))
                .par_iter()
                .map(|a| {
                    let mut f = Findings::default();
                    let u = QSymVector::basis_element(basis_tag, a.clone());
                    let d = crate::algebra::coproduct(&u)?;
                    if a.weight() <= cfg.counit_weight {
                        f.expect(d.counit_left() == u && d.counit_right() == u, || {
                            format!("{basis_tag} counit law at {a}")
                        });
                    }
                    if a.weight() <= cfg.coassociativity_weight {
                        let (l, r) = coassociativity_sides(&d, crate::algebra::coproduct)?;
                        f.expect(l == r, || format!("{basis_tag} coassociativity at {a}"));
                    }
                    Ok(f)
                })
                .collect();
        collect(r, &mut f)?;
    }

    // bialgebra compatibility Δ(uv) = Δ(u)Δ(v)
    for basis_tag in [M, F] {
        let prod = if basis_tag == M { m_product } else { f_product };
        let r: Vec<Result<Findings>> = pairs_up_to(cfg.bialgebra_weight)
            .par_iter()
            .map(|(a, b)| {
                let mut f = Findings::default();
                let (x, y) = (
                    QSymVector::basis_element(basis_tag, a.clone()),
                    QSymVector::basis_element(basis_tag, b.clone()),
                );
                let lhs = crate::algebra::coproduct(&prod(&x, &y)?)?;
                let rhs = crate::algebra::coproduct(&x)?
                    .mul_with(&crate::algebra::coproduct(&y)?, prod)?;
                f.expect(lhs == rhs, || {
                    format!("{basis_tag} bialgebra law at {a}|{b}")
                });
                Ok(f)
            })
            .collect();
        collect(r, &mut f)?;
    }

    // round trips
    let r: Vec<Result<Findings>> = labels_up_to(cfg.mf_round_trip_weight)
        .par_iter()
        .map(|a| {
            let mut f = Findings::default();
            let fa = QSymVector::basis_element(F, a.clone());
            let ma = QSymVector::basis_element(M, a.clone());
            f.expect(m_to_f(&f_to_m(&fa)?)? == fa, || format!("F→M→F at {a}"));
            f.expect(f_to_m(&m_to_f(&ma)?)? == ma, || format!("M→F→M at {a}"));
            Ok(f)
        })
        .collect();
    collect(r, &mut f)?;
    let r: Vec<Result<Findings>> = labels_up_to(cfg.ms_round_trip_weight)
        .par_iter()
        .map(|a| {
            let mut f = Findings::default();
            let sa = QSymVector::basis_element(S, a.clone());
            let ma = QSymVector::basis_element(M, a.clone());
            f.expect(m_to_s(&s_to_m(&sa)?)? == sa, || format!("S→M→S at {a}"));
            f.expect(s_to_m(&m_to_s(&ma)?)? == ma, || format!("M→S→M at {a}"));
            Ok(f)
        })
        .collect();
    collect(r, &mut f)?;

    // S basis: coalgebra laws, unimodular change of basis
    let r: Vec<Result<Findings>> = labels_up_to(cfg.s_coalgebra_weight)
        .par_iter()
        .map(|a| {
            let mut f = Findings::default();
            let u = QSymVector::basis_element(S, a.clone());
            let d = s_coproduct(&u)?;
            f.expect(d.counit_left() == u && d.counit_right() == u, || {
                format!("S counit law at {a}")
            });
            let (l, r) = coassociativity_sides(&d, s_coproduct)?;
            f.expect(l == r, || format!("S coassociativity at {a}"));
            f.expect(
                counit(&u)
                    == if a.is_empty() {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    },
                || format!("S counit at {a}"),
            );
            Ok(f)
        })
        .collect();
    collect(r, &mut f)?;
    for n in 1..=cfg.ms_round_trip_weight {
        let det = schur::basis_matrix(n)?.matrix().determinant();
        f.expect(det == scalar(1) || det == scalar(-1), || {
            format!("det of the weight {n} basis matrix is {det}")
        });
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_matches_registry() {
        let ids: Vec<&str> = registry().iter().map(|(id, _)| *id).collect();
        assert_eq!(ids, MANIFEST.to_vec());
        let mut sorted = MANIFEST.to_vec();
        sorted.sort();
        assert_eq!(sorted, MANIFEST.to_vec());
    }

    #[test]
    fn config_requires_every_bound() {
        assert!(SuiteConfig::from_json("{}").is_err());
        let full = serde_json::to_string(&SuiteConfig::default()).unwrap();
        assert_eq!(
            SuiteConfig::from_json(&full).unwrap(),
            SuiteConfig::default()
        );
        let zero = SuiteConfig {
            poset_weight: 0,
            ..SuiteConfig::default()
        };
        assert!(zero.validate().is_err());
    }

    #[test]
    fn s_equals_f_form_examples() {
        assert!(s_equals_f_form(&c(&[2, 1])));
        assert!(s_equals_f_form(&c(&[1, 2])));
        assert!(s_equals_f_form(&c(&[3, 1, 2, 1, 1, 2])));
        assert!(s_equals_f_form(&c(&[])));
        assert!(!s_equals_f_form(&c(&[2, 2])));
        assert!(!s_equals_f_form(&c(&[1, 3])));
        assert!(!s_equals_f_form(&c(&[2, 1, 2, 2])));
    }

    #[test]
    fn term_count_families() {
        assert_eq!(family(&[], &[], false, &[1, 2]), c(&[1, 2]));
        assert_eq!(family(&[], &[], true, &[1]), c(&[2, 1]));
        assert_eq!(family(&[1], &[1], false, &[1, 2]), c(&[1, 2, 1, 2]));
        assert_eq!(family(&[1], &[1], true, &[1]), c(&[1, 2, 2, 1]));
        assert_eq!(tuples(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn small_checks_pass() {
        for f in [
            check_golden_examples().unwrap(),
            check_poset_figures().unwrap(),
            check_order_inclusions(6).unwrap(),
            check_downset_rigidity(OrderTag::M, 6).unwrap(),
            check_q_classification(6).unwrap(),
            check_c_classification(6).unwrap(),
            check_s_equals_f(5).unwrap(),
            check_complement_duality(6).unwrap(),
            check_lemma_term_counts(1, 1).unwrap(),
        ] {
            assert!(f.failures.is_empty(), "{:?}", f.failures);
        }
    }

    #[test]
    fn corrupted_c_order_is_caught() {
        let corrupted = |a: &Composition| {
            let p = a.parts();
            let mut out = BTreeSet::new();
            let mut v = vec![1];
            v.extend_from_slice(p);
            out.insert(Composition::from_parts(&v));
            for j in 0..p.len() {
                let mut v = p.to_vec();
                v[j] += 1;
                out.insert(Composition::from_parts(&v));
            }
            out
        };
        let f = check_order_inclusions_with(5, &corrupted).unwrap();
        assert!(!f.failures.is_empty());
    }

    #[test]
    fn panics_become_failures() {
        let r = execute("boom", |_| panic!("kaboom"), &SuiteConfig::default());
        assert!(!r.pass);
        assert!(r.details[0].contains("kaboom"));
    }
}
