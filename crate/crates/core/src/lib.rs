//! Root multiplicities of symmetrizable Kac-Moody algebras.
//!
//! Multiplicities are computed exactly by two independent methods, Peterson's
//! recursion ([`mult_peterson`]) and the Berman-Moody closed form
//! ([`mult_berman_moody`]). Around them sit Cartan matrix classification and
//! extension ([`cartan`]), the partition-type q-series ([`qseries`]), the
//! multiplicity bounds ([`bounds`]) and the Bessel main terms of the
//! Hardy-Ramanujan-Rademacher expansion ([`asymptotics`]).
//!
//! ```
//! use hyperroot::{mult_berman_moody, mult_peterson, Gcm, MultTable, RootVector};
//!
//! let g: Gcm = "2,-3;-3,2".parse().unwrap();
//! let alpha = RootVector::from([4, 5]);
//! let mut table = MultTable::new(&g);
//! assert_eq!(mult_peterson(&g, &alpha, &mut table).unwrap(), 9u32.into());
//! assert_eq!(mult_berman_moody(&g, &alpha).unwrap(), 9u32.into());
//! ```

#![allow(clippy::needless_range_loop)]

pub mod asymptotics;
pub mod bounds;
pub mod cartan;
pub mod error;
pub mod lattice;
pub mod multiplicity;
pub mod presets;
pub mod qseries;
pub mod roots;

pub use cartan::{classify, AlgebraKind, AlgebraType, Classification, Gcm};
pub use error::{Error, Result};
pub use lattice::RootVector;
pub use multiplicity::{
    coarse_bound, mult_berman_moody, mult_peterson, verify_denominator_identity, MultTable, TableCache,
};
pub use presets::parse_gcm;
pub use qseries::PowerSeries;
pub use roots::{enumerate_weyl_sums, WeylElement};
