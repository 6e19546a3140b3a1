//! Exact zeta-functions of the monodromy at infinity of complex polynomials.
//!
//! Local zeta-functions of the germs of `P` at points of the hyperplane at
//! infinity are combined along a stratification, weighted by the Euler
//! characteristics of the strata:
//!
//! ```
//! use zeta_infinity::pipeline::{yomdin_zeta, YomdinPoint, YomdinProblem};
//! use zeta_infinity::germ::AcampoData;
//!
//! // P_3 a cuspidal cubic, one singular point with the A'Campo data of x^2 + y^3
//! let problem = YomdinProblem {
//!     n: 2,
//!     d: 3,
//!     k: 1,
//!     points: vec![YomdinPoint {
//!         acampo: AcampoData::new([(2, 1), (3, 1), (6, -1)]).unwrap(),
//!         mu: Some(2),
//!     }],
//! };
//! let result = yomdin_zeta(&problem).unwrap();
//! assert_eq!(result.zeta.to_string(), "(1-t^2)*(1-t^3)*(1-t^4)^-1*(1-t^6)^-1*(1-t^12)");
//! assert_eq!(result.degree, 7);
//! ```

pub mod error;
pub mod euler;
pub mod germ;
pub mod perm;
pub mod pipeline;
pub mod poly;
pub mod zeta;

pub use error::{Error, Result};
pub use zeta::{IntPolynomial, RationalFunction, ZetaFactorization};
