//! Exact computation in the Hopf algebra of quasisymmetric functions.
//!
//! Vectors live in one of three bases: monomial (`M`), fundamental (`F`) and
//! quasisymmetric Schur (`S`). Coefficients are exact rationals.
//!
//! ```
//! use qsym::{product, BasisTag, Composition, QSymVector};
//!
//! let a = QSymVector::basis_element(BasisTag::F, "1".parse::<Composition>().unwrap());
//! let b = QSymVector::basis_element(BasisTag::F, "2".parse::<Composition>().unwrap());
//! assert_eq!(product(&a, &b).unwrap().to_string(), "F[3] + F[2,1] + F[1,2]");
//! ```

pub mod algebra;
pub mod composition;
pub mod error;
pub mod linalg;
pub mod morphisms;
pub mod posets;
pub mod rigidity;
pub mod schur;

pub use algebra::{
    coefficient, counit, f_product, f_to_m, graded_component, m_product, m_to_f, quasi_shuffle,
    scalar, BasisTag, QSymVector, Scalar, TensorVector,
};
pub use composition::{
    comp_of, complement, compositions_of, concat, near_concat, refines, reversal, set_concat_split,
    set_of, transpose, underlying_partition, Composition, DescentSet, Partition,
};
pub use error::{QsymError, Result};
pub use morphisms::{apply, NamedMap};
pub use posets::{
    down_covers, equal_down_set_pairs, hasse, leq, up_covers, HasseDiagram, OrderTag,
};
pub use rigidity::{run_all, CheckResult, SuiteConfig, VerificationReport};
pub use schur::{
    convert, coproduct, lr_coefficient, pieri_col, pieri_row, product, rem, s_coproduct, s_product,
    schur_to_m, SkewReverseShape, Ssrct,
};
