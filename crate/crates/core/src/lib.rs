//! Exact intersection theory on Grassmannians.
//!
//! The crate computes in `H*(Gr(k, n), Z)` with the Schubert basis
//! ([`ring`]), evaluates Chern classes and Chern characters of bundles built
//! from the tautological bundles ([`bundle`]) through formal Chern roots
//! ([`roots`]), and derives the numerical invariants of surfaces cut out as
//! zero loci ([`surface`]). All arithmetic is over arbitrary-precision
//! integers or rationals.
//!
//! ```
//! use schubert_core::{BundleExpr, Grassmannian, ZeroLocusProblem};
//!
//! let gr = Grassmannian::new(3, 7).unwrap();
//! let sym3 = BundleExpr::parse("sym(3, dual(U))").unwrap();
//! let surface = ZeroLocusProblem::new(gr, sym3, 42).unwrap();
//! let inv = surface.invariants().unwrap();
//! assert_eq!((inv.c1_sq, inv.c2), (25515, 13041));
//! ```

pub mod bundle;
pub mod error;
pub mod partition;
pub mod report;
pub mod ring;
pub mod roots;
pub mod surface;

pub use bundle::{
    chern_character, chern_classes, chern_from_character, chern_symbolic, to_schubert, top_chern,
    top_chern_symbolic, total_chern, BundleExpr, ChernData,
};
pub use error::{Error, Result};
pub use partition::{Partition, Rectangle};
pub use report::{reference_report, ReportEntry};
pub use ring::{Element, Grassmannian, RationalElement, SpecialPolynomial, TermRecord};
pub use roots::{
    power_sum, symmetric_reduce, Alphabet, Alphabets, ElementarySymmetricExpansion, RootPolynomial,
};
pub use surface::{
    bai_criterion, betti_numbers, hodge_numbers, noether_chi, p3_surface_oracle, BaiCheck,
    ChernNumbers, ProjectiveSurface, SurfaceInvariants, ZeroLocusProblem,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
