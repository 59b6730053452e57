//! Quasisymmetric Schur functions: tableaux, the change of basis to `M`,
//! products, coproducts and the Pieri rules.

mod basis;
mod pieri;
mod shape;
mod tableau;

use num::Zero;

pub use basis::{
    basis_matrix, cache_dir, set_cache_dir, set_weight_cap, weight_cap, BasisMatrix,
    DEFAULT_WEIGHT_CAP,
};
pub use pieri::{pieri_col, pieri_row};
pub use shape::{Cell, SkewPartitionShape, SkewReverseShape};
pub use tableau::{enumerate_ssrct, for_each_ssrct, is_valid_ssrct, schur_to_m, Ssrct};

use crate::algebra::{
    self, expect_basis, f_product, f_to_m, m_product, m_to_f, BasisTag, QSymVector, Scalar,
    TensorVector,
};
use crate::composition::Composition;
use crate::error::{QsymError, Result};

/// Subtract 1 from the rightmost part equal to `s`; `None` if there is none.
pub fn rem(alpha: &Composition, s: u32) -> Option<Composition> {
    let pos = alpha.parts().iter().rposition(|&p| p == s)?;
    let mut parts = alpha.parts().to_vec();
    if s == 1 {
        parts.remove(pos);
    } else {
        parts[pos] -= 1;
    }
    Some(Composition::from_vec_unchecked(parts))
}

/// `row_{s_1,…,s_j}`: `rem` for each size, largest first. Sizes must
/// strictly increase.
pub fn row_op(alpha: &Composition, sizes: &[u32]) -> Result<Option<Composition>> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(QsymError::InvalidInput(format!(
            "row sizes must strictly increase, got {sizes:?}"
        )));
    }
    Ok(apply_rems(alpha, sizes.iter().rev()))
}

/// `col_{m_1,…,m_j}`: `rem` for each size, smallest first. Sizes must weakly
/// increase.
pub fn col_op(alpha: &Composition, sizes: &[u32]) -> Result<Option<Composition>> {
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(QsymError::InvalidInput(format!(
            "column sizes must weakly increase, got {sizes:?}"
        )));
    }
    Ok(apply_rems(alpha, sizes.iter()))
}

fn apply_rems<'a>(
    alpha: &Composition,
    sizes: impl Iterator<Item = &'a u32>,
) -> Option<Composition> {
    let mut cur = alpha.clone();
    for &s in sizes {
        cur = rem(&cur, s)?;
    }
    Some(cur)
}

/// Expand an `S`-basis vector in the monomial basis.
pub fn s_to_m(u: &QSymVector) -> Result<QSymVector> {
    expect_basis(u.basis(), BasisTag::S)?;
    let mut out = QSymVector::zero(BasisTag::M);
    for (alpha, x) in u.iter() {
        check_cap(alpha.weight())?;
        for (gamma, y) in schur_to_m(alpha).iter() {
            out.add_term(gamma.clone(), x * y);
        }
    }
    Ok(out)
}

/// Express an `M`-basis vector in the `S` basis.
pub fn m_to_s(u: &QSymVector) -> Result<QSymVector> {
    expect_basis(u.basis(), BasisTag::M)?;
    let mut out = QSymVector::zero(BasisTag::S);
    for (gamma, x) in u.iter() {
        let bm = basis_matrix(gamma.weight())?;
        let row = bm
            .index_of(gamma)
            .expect("composition of the matrix weight");
        // M_γ = Σ_α (A⁻¹)[γ][α] S_α
        for (j, y) in bm.inverse().row(row).iter().enumerate() {
            if !y.is_zero() {
                out.add_term(bm.compositions()[j].clone(), x * y);
            }
        }
    }
    Ok(out)
}

fn check_cap(weight: usize) -> Result<()> {
    let cap = weight_cap();
    if weight > cap {
        Err(QsymError::BoundExceeded { weight, cap })
    } else {
        Ok(())
    }
}

/// Change of basis between any two of `M`, `F` and `S`.
pub fn convert(u: &QSymVector, to: BasisTag) -> Result<QSymVector> {
    use BasisTag::*;
    match (u.basis(), to) {
        (a, b) if a == b => Ok(u.clone()),
        (F, M) => f_to_m(u),
        (M, F) => m_to_f(u),
        (S, M) => s_to_m(u),
        (M, S) => m_to_s(u),
        (F, S) => m_to_s(&f_to_m(u)?),
        (S, F) => m_to_f(&s_to_m(u)?),
        _ => unreachable!(),
    }
}

pub fn s_product(u: &QSymVector, v: &QSymVector) -> Result<QSymVector> {
    expect_basis(u.basis(), BasisTag::S)?;
    expect_basis(v.basis(), BasisTag::S)?;
    check_cap(u.max_weight() + v.max_weight())?;
    m_to_s(&m_product(&s_to_m(u)?, &s_to_m(v)?)?)
}

/// Product of two vectors in the same basis.
pub fn product(u: &QSymVector, v: &QSymVector) -> Result<QSymVector> {
    expect_basis(v.basis(), u.basis())?;
    match u.basis() {
        BasisTag::M => m_product(u, v),
        BasisTag::F => f_product(u, v),
        BasisTag::S => s_product(u, v),
    }
}

/// `Δ(S_γ) = Σ C^γ_{αβ} S_α ⊗ S_β`, through the monomial basis.
pub fn s_coproduct(u: &QSymVector) -> Result<TensorVector> {
    expect_basis(u.basis(), BasisTag::S)?;
    let dm = algebra::coproduct(&s_to_m(u)?)?;
    let to_s = |c: &Composition| m_to_s(&QSymVector::basis_element(BasisTag::M, c.clone()));
    let out = dm.map_legs(to_s, to_s)?;
    if out.is_zero() {
        return Ok(TensorVector::zero((BasisTag::S, BasisTag::S)));
    }
    Ok(out)
}

/// Coproduct in any basis.
pub fn coproduct(u: &QSymVector) -> Result<TensorVector> {
    match u.basis() {
        BasisTag::S => s_coproduct(u),
        _ => algebra::coproduct(u),
    }
}

/// `C^γ_{αβ}`, the coefficient of `S_α ⊗ S_β` in `Δ(S_γ)`.
pub fn lr_coefficient(
    alpha: &Composition,
    beta: &Composition,
    gamma: &Composition,
) -> Result<Scalar> {
    if alpha.weight() + beta.weight() != gamma.weight() {
        return Ok(Scalar::zero());
    }
    let d = s_coproduct(&QSymVector::basis_element(BasisTag::S, gamma.clone()))?;
    Ok(d.coefficient(alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;
    use crate::composition::compositions_of;
    use num::One;

    fn c(parts: &[u32]) -> Composition {
        Composition::from_parts(parts)
    }

    fn s(parts: &[u32]) -> QSymVector {
        QSymVector::basis_element(BasisTag::S, c(parts))
    }

    fn s_sum(items: &[&[u32]]) -> QSymVector {
        QSymVector::from_terms(BasisTag::S, items.iter().map(|p| (c(p), Scalar::one())))
    }

    #[test]
    fn rem_row_col() {
        assert_eq!(rem(&c(&[1, 2, 2]), 2), Some(c(&[1, 2, 1])));
        assert_eq!(rem(&c(&[1, 2, 3]), 3), Some(c(&[1, 2, 2])));
        assert_eq!(rem(&c(&[1, 1]), 3), None);
        assert_eq!(rem(&c(&[1]), 1), Some(Composition::empty()));
        assert_eq!(
            row_op(&c(&[1, 2, 3]), &[2, 3]).unwrap(),
            Some(c(&[1, 2, 1]))
        );
        assert_eq!(
            col_op(&c(&[1, 2, 3]), &[2, 3]).unwrap(),
            Some(c(&[1, 1, 2]))
        );
        assert_eq!(row_op(&c(&[2, 1]), &[]).unwrap(), Some(c(&[2, 1])));
        assert!(row_op(&c(&[2, 2]), &[2, 2]).is_err());
        assert_eq!(col_op(&c(&[2, 2]), &[2, 2]).unwrap(), Some(c(&[1, 1])));
        assert!(col_op(&c(&[2, 2]), &[3, 2]).is_err());
        assert_eq!(
            row_op(&c(&[2]), &[1, 2]).unwrap(),
            Some(Composition::empty())
        );
        assert_eq!(row_op(&c(&[3]), &[1, 2]).unwrap(), None);
    }

    #[test]
    fn golden_products() {
        assert_eq!(
            s_product(&s(&[1, 1]), &s(&[1, 1])).unwrap(),
            s_sum(&[&[2, 2], &[2, 1, 1], &[1, 2, 1], &[1, 1, 2], &[1, 1, 1, 1]])
        );
        assert_eq!(
            s_product(&s(&[2]), &s(&[2])).unwrap(),
            s_sum(&[&[4], &[3, 1], &[2, 2], &[1, 3]])
        );
        assert_eq!(
            s_product(&s(&[2]), &s(&[1, 2])).unwrap(),
            s_sum(&[&[1, 4], &[1, 1, 3], &[1, 3, 1], &[1, 2, 2]])
        );
        assert!(s_product(&s(&[1]), &QSymVector::one(BasisTag::M)).is_err());
    }

    #[test]
    fn round_trips() {
        for n in 0..=5 {
            for alpha in compositions_of(n) {
                let u = s(alpha.parts());
                assert_eq!(m_to_s(&s_to_m(&u).unwrap()).unwrap(), u);
                let f = QSymVector::basis_element(BasisTag::F, alpha.clone());
                assert_eq!(
                    convert(&convert(&f, BasisTag::S).unwrap(), BasisTag::F).unwrap(),
                    f
                );
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert!(lr_coefficient(&c(&[1]), &c(&[3]), &c(&[1, 3]))
            .unwrap()
            .is_one());
        assert!(lr_coefficient(&c(&[1]), &c(&[1, 2]), &c(&[1, 3]))
            .unwrap()
            .is_one());
        assert!(lr_coefficient(&c(&[1]), &c(&[2, 1]), &c(&[1, 2, 1]))
            .unwrap()
            .is_one());
        assert!(lr_coefficient(&c(&[]), &c(&[2, 1]), &c(&[2, 1]))
            .unwrap()
            .is_one());
        assert!(lr_coefficient(&c(&[1]), &c(&[1]), &c(&[3]))
            .unwrap()
            .is_zero());
        let d = s_coproduct(&s(&[2, 1])).unwrap();
        assert_eq!(d.counit_left(), s(&[2, 1]));
        assert_eq!(d.counit_right(), s(&[2, 1]));
        assert_eq!(
            s_coproduct(&s(&[])).unwrap().coefficient(&c(&[]), &c(&[])),
            scalar(1)
        );
    }
}
