//! Exact local invariants of equimultiple first-order deformations of plane
//! curve germs, and the dimension counts they govern for curves in ℙ².
//!
//! All arithmetic is over ℚ. Germs are polynomials anchored at the origin;
//! every quantity computed here depends only on a finite jet of the germ.

pub mod defo;
pub mod error;
pub mod jets;
pub mod linalg;
pub mod plane;
pub mod poly;
pub mod singular;

pub use error::{Error, Result};
pub use jets::{AffineSolutionSet, JetSubspace, JetVector, MonoBasis};
pub use plane::{DimensionReport, JacobianBlock, PlaneCurve};
pub use poly::{BiPoly, FirstOrderDef, Monomial, Rational, SectionGerm, Var};
pub use singular::{CurveGerm, SingularityReport};
