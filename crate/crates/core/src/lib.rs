//! Exact-arithmetic toolkit for orbits of s-representations: root systems,
//! a database of compact symmetric pairs, tangential degeneracy of orbits,
//! Ferus numbers and the projection of exceptional root systems onto
//! strongly orthogonal roots.
//!
//! ```
//! use srep_core::orbits::{classify_spec, OrbitSpec};
//! use srep_core::pairdb::{PairDb, Params};
//!
//! let db = PairDb::embedded().unwrap();
//! let pair = db.lookup("g2|so(4)").unwrap().instantiate(Params::NONE).unwrap();
//! let rep = classify_spec(&pair, &OrbitSpec::Long).unwrap();
//! assert_eq!((rep.l, rep.r, rep.nullity), (5, 4, 1));
//! ```

pub mod cayley;
pub mod error;
pub mod ferus;
pub mod linalg;
pub mod orbits;
pub mod pairdb;
pub mod rational;
pub mod report;
pub mod rootsys;

pub use error::{Error, Result};
pub use rational::Q;
pub use rootsys::{Family, LexOrder, RootClass, RootSystem, RootSystemType, RootVec, WolfClass};
