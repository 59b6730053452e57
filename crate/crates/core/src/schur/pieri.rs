use num::One;

use super::shape::SkewPartitionShape;
use super::{col_op, row_op};
use crate::algebra::{BasisTag, QSymVector, Scalar};
use crate::composition::{compositions_of, underlying_partition, Composition};
use crate::error::{QsymError, Result};

/// `S_n · S_α`: the sum of `S_β` over `β` such that `β̃/α̃` is a horizontal
/// strip of size `n` and `row_{S(δ)}(β) = α`.
pub fn pieri_row(n: usize, alpha: &Composition) -> Result<QSymVector> {
    pieri(n, alpha, |shape, beta| {
        if !shape.is_horizontal_strip() {
            return Ok(false);
        }
        let cols: Vec<u32> = shape.strip_columns()?.into_iter().collect();
        Ok(row_op(beta, &cols)?.as_ref() == Some(alpha))
    })
}

/// `S_{1^n} · S_α`: the sum of `S_β` over `β` such that `β̃/α̃` is a vertical
/// strip of size `n` and `col_{M(ε)}(β) = α`.
pub fn pieri_col(n: usize, alpha: &Composition) -> Result<QSymVector> {
    pieri(n, alpha, |shape, beta| {
        if !shape.is_vertical_strip() {
            return Ok(false);
        }
        let cols = shape.strip_column_multiset()?;
        Ok(col_op(beta, &cols)?.as_ref() == Some(alpha))
    })
}

fn pieri<P>(n: usize, alpha: &Composition, keep: P) -> Result<QSymVector>
where
    P: Fn(&SkewPartitionShape, &Composition) -> Result<bool>,
{
    if n == 0 {
        return Err(QsymError::InvalidInput(
            "Pieri multiplier must be positive".into(),
        ));
    }
    let inner = underlying_partition(alpha);
    let mut out = QSymVector::zero(BasisTag::S);
    for beta in compositions_of(alpha.weight() + n) {
        if beta.len() < alpha.len() || beta.len() > alpha.len() + n {
            continue;
        }
        let Ok(shape) = SkewPartitionShape::new(underlying_partition(&beta), inner.clone()) else {
            continue;
        };
        if keep(&shape, &beta)? {
            out.add_term(beta, Scalar::one());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::{up_covers, OrderTag};

    fn c(parts: &[u32]) -> Composition {
        Composition::from_parts(parts)
    }

    fn s_sum(items: &[&[u32]]) -> QSymVector {
        QSymVector::from_terms(BasisTag::S, items.iter().map(|p| (c(p), Scalar::one())))
    }

    #[test]
    fn row_rule_example() {
        assert_eq!(
            pieri_row(2, &c(&[1, 2])).unwrap(),
            s_sum(&[&[1, 4], &[1, 1, 3], &[1, 3, 1], &[1, 2, 2]])
        );
        assert_eq!(pieri_row(2, &c(&[1, 2])).unwrap().len(), 4);
        assert_eq!(pieri_row(2, &c(&[2, 1])).unwrap().len(), 6);
        assert!(pieri_row(0, &c(&[1])).is_err());
    }

    #[test]
    fn single_box_is_the_q_order() {
        for n in 0..=5 {
            for alpha in compositions_of(n) {
                let got = pieri_col(1, &alpha).unwrap();
                let want = QSymVector::from_terms(
                    BasisTag::S,
                    up_covers(OrderTag::Q, &alpha)
                        .into_iter()
                        .map(|b| (b, Scalar::one())),
                );
                assert_eq!(got, want, "{alpha}");
                assert_eq!(pieri_row(1, &alpha).unwrap(), want, "{alpha}");
            }
        }
    }
}
