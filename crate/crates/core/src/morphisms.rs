//! Graded linear maps defined by relabelling the fundamental basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{f_product, BasisTag, QSymVector};
use crate::composition::{complement, compositions_of, reversal, transpose, Composition};
use crate::error::{QsymError, Result};
use crate::schur::{convert, coproduct};

/// A map `F_α ↦ F_{σ(α)}` for some weight-preserving `σ`.
pub trait LabelMap: Sync {
    fn name(&self) -> String;
    fn act(&self, alpha: &Composition) -> Composition;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedMap {
    Identity,
    Rho,
    Psi,
    Omega,
}

impl NamedMap {
    pub const ALL: [NamedMap; 4] = [
        NamedMap::Identity,
        NamedMap::Rho,
        NamedMap::Psi,
        NamedMap::Omega,
    ];
    pub const NONTRIVIAL: [NamedMap; 3] = [NamedMap::Rho, NamedMap::Psi, NamedMap::Omega];
}

impl fmt::Display for NamedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedMap::Identity => "identity",
            NamedMap::Rho => "rho",
            NamedMap::Psi => "psi",
            NamedMap::Omega => "omega",
        })
    }
}

impl FromStr for NamedMap {
    type Err = QsymError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "identity" | "id" => Ok(NamedMap::Identity),
            "rho" => Ok(NamedMap::Rho),
            "psi" => Ok(NamedMap::Psi),
            "omega" => Ok(NamedMap::Omega),
            _ => Err(QsymError::InvalidInput(format!("unknown map {s:?}"))),
        }
    }
}

impl LabelMap for NamedMap {
    fn name(&self) -> String {
        self.to_string()
    }

    fn act(&self, alpha: &Composition) -> Composition {
        match self {
            NamedMap::Identity => alpha.clone(),
            NamedMap::Rho => reversal(alpha),
            NamedMap::Psi => complement(alpha),
            NamedMap::Omega => transpose(alpha),
        }
    }
}

/// A label map given by a closure.
pub struct FnLabelMap<F> {
    name: String,
    f: F,
}

impl<F: Fn(&Composition) -> Composition + Sync> FnLabelMap<F> {
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnLabelMap {
            name: name.into(),
            f,
        }
    }
}

impl<F: Fn(&Composition) -> Composition + Sync> LabelMap for FnLabelMap<F> {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn act(&self, alpha: &Composition) -> Composition {
        (self.f)(alpha)
    }
}

/// Sorts the parts ascending; not an algebra map, useful as a negative control.
pub fn sort_ascending() -> FnLabelMap<fn(&Composition) -> Composition> {
    fn sort(alpha: &Composition) -> Composition {
        let mut parts = alpha.parts().to_vec();
        parts.sort_unstable();
        Composition::from_parts(&parts)
    }
    FnLabelMap::new("sort", sort as fn(&Composition) -> Composition)
}

/// Apply a label map to a vector in any basis, through `F`.
pub fn apply<M: LabelMap + ?Sized>(map: &M, u: &QSymVector) -> Result<QSymVector> {
    let f = convert(u, BasisTag::F)?;
    let relabelled =
        QSymVector::from_terms(BasisTag::F, f.iter().map(|(c, s)| (map.act(c), s.clone())));
    convert(&relabelled, u.basis())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Algebra,
    Coalgebra,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismCheck {
    pub map: String,
    pub property: Property,
    pub bound: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

fn f_elem(alpha: &Composition) -> QSymVector {
    QSymVector::basis_element(BasisTag::F, alpha.clone())
}

/// `map(F_α F_β) = map(F_α) map(F_β)` for all `|α| + |β| ≤ bound`. The
/// witness is the first failing pair ordered by total weight, then `α`, then
/// `β`, written `α|β`.
pub fn check_algebra_morphism<M: LabelMap + ?Sized>(
    map: &M,
    bound: usize,
) -> Result<MorphismCheck> {
    let mut pairs = Vec::new();
    for total in 0..=bound {
        for wa in 0..=total {
            for a in compositions_of(wa) {
                for b in compositions_of(total - wa) {
                    pairs.push((a.clone(), b));
                }
            }
        }
    }
    pairs.sort_by(|x, y| {
        (x.0.weight() + x.1.weight())
            .cmp(&(y.0.weight() + y.1.weight()))
            .then_with(|| x.cmp(y))
    });
    let outcomes: Vec<Result<bool>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let lhs = apply(map, &f_product(&f_elem(a), &f_elem(b))?)?;
            let rhs = f_product(&apply(map, &f_elem(a))?, &apply(map, &f_elem(b))?)?;
            Ok(lhs == rhs)
        })
        .collect();
    let mut witness = None;
    for (pair, ok) in pairs.iter().zip(outcomes) {
        if !ok? {
            witness = Some(format!("{}|{}", pair.0, pair.1));
            break;
        }
    }
    Ok(MorphismCheck {
        map: map.name(),
        property: Property::Algebra,
        bound,
        pass: witness.is_none(),
        witness,
    })
}

/// `(map ⊗ map)∘Δ = Δ∘map` and `ε∘map = ε` on `F_α` for all `|α| ≤ bound`.
pub fn check_coalgebra_morphism<M: LabelMap + ?Sized>(
    map: &M,
    bound: usize,
) -> Result<MorphismCheck> {
    let labels: Vec<Composition> = (0..=bound).flat_map(compositions_of).collect();
    let outcomes: Vec<Result<bool>> = labels
        .par_iter()
        .map(|a| {
            let image = apply(map, &f_elem(a))?;
            if crate::algebra::counit(&image) != crate::algebra::counit(&f_elem(a)) {
                return Ok(false);
            }
            let lhs = coproduct(&f_elem(a))?
                .map_legs(|c| apply(map, &f_elem(c)), |c| apply(map, &f_elem(c)))?;
            Ok(lhs == coproduct(&image)?)
        })
        .collect();
    let mut witness = None;
    for (a, ok) in labels.iter().zip(outcomes) {
        if !ok? {
            witness = Some(a.to_string());
            break;
        }
    }
    Ok(MorphismCheck {
        map: map.name(),
        property: Property::Coalgebra,
        bound,
        pass: witness.is_none(),
        witness,
    })
}

/// Where a basis element goes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Image {
    /// `± K_label`.
    Basis { label: Composition, sign: i8 },
    /// Anything else.
    Combination,
}

/// For each `α` of weight `1..=max_weight`, whether `map(K_α)` is a signed
/// basis element of the same basis.
pub fn basis_preservation_table<M: LabelMap + ?Sized>(
    map: &M,
    basis: BasisTag,
    max_weight: usize,
) -> Result<BTreeMap<Composition, Image>> {
    let labels: Vec<Composition> = (1..=max_weight).flat_map(compositions_of).collect();
    let images: Vec<Result<Image>> = labels
        .par_iter()
        .map(|a| {
            let image = apply(map, &QSymVector::basis_element(basis, a.clone()))?;
            Ok(match image.as_signed_basis_element() {
                Some((label, sign)) => Image::Basis { label, sign },
                None => Image::Combination,
            })
        })
        .collect();
    labels
        .into_iter()
        .zip(images)
        .map(|(a, r)| r.map(|img| (a, img)))
        .collect()
}

/// True when every entry is `+K_β`.
pub fn preserves_basis(table: &BTreeMap<Composition, Image>) -> bool {
    table
        .values()
        .all(|img| matches!(img, Image::Basis { sign: 1, .. }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::from_parts(parts)
    }

    #[test]
    fn apply_examples() {
        let m12 = QSymVector::basis_element(BasisTag::M, c(&[1, 2]));
        assert_eq!(
            apply(&NamedMap::Rho, &m12).unwrap(),
            QSymVector::basis_element(BasisTag::M, c(&[2, 1]))
        );
        assert_eq!(
            apply(&NamedMap::Psi, &f_elem(&c(&[2]))).unwrap(),
            f_elem(&c(&[1, 1]))
        );
        for a in compositions_of(4) {
            let u = f_elem(&a);
            assert_eq!(
                apply(&NamedMap::Omega, &u).unwrap(),
                apply(&NamedMap::Psi, &apply(&NamedMap::Rho, &u).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn small_checks() {
        assert!(check_algebra_morphism(&NamedMap::Psi, 5).unwrap().pass);
        let sort = check_algebra_morphism(&sort_ascending(), 4).unwrap();
        assert!(!sort.pass);
        assert!(sort.witness.is_some());

        let rho = check_coalgebra_morphism(&NamedMap::Rho, 4).unwrap();
        assert!(!rho.pass);
        assert_eq!(rho.witness.as_deref(), Some("1,2"));
        assert!(
            check_coalgebra_morphism(&NamedMap::Identity, 4)
                .unwrap()
                .pass
        );
        assert!(check_coalgebra_morphism(&NamedMap::Psi, 5).unwrap().pass);
    }

    #[test]
    fn preservation() {
        let t = basis_preservation_table(&NamedMap::Rho, BasisTag::M, 4).unwrap();
        assert!(preserves_basis(&t));
        assert_eq!(
            t[&c(&[1, 3])],
            Image::Basis {
                label: c(&[3, 1]),
                sign: 1
            }
        );
        assert!(!preserves_basis(
            &basis_preservation_table(&NamedMap::Psi, BasisTag::M, 3).unwrap()
        ));
        assert!(preserves_basis(
            &basis_preservation_table(&NamedMap::Identity, BasisTag::F, 4).unwrap()
        ));
    }

    #[test]
    fn json_shape() {
        let r = check_coalgebra_morphism(&NamedMap::Rho, 3).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"map":"rho","property":"coalgebra","bound":3,"pass":false,"witness":"1,2"}"#
        );
    }
}
