//! Minimal factorizations of the full cycle `(0 1 ... kn)` into `(k + 1)`-cycles,
//! rooted forests with `k`-coloured edges, and k-parking functions, with
//! explicit bijections between them and the statistics they carry across.
//!
//! ```
//! use kfact::{jcdal, jcdal_inverse, KFactorization};
//!
//! let f = KFactorization::from_text("(0 1 2)(0 3 4)").unwrap();
//! let forest = jcdal(&f).unwrap();
//! assert_eq!(forest.to_text(), "2:1 0");
//! assert_eq!(f.area_stats().area, 2 * forest.stats().maj_k as i64);
//! assert_eq!(jcdal_inverse(&forest).unwrap(), f);
//! ```

pub mod archmap;
pub mod enumerate;
pub mod error;
pub mod factorization;
pub mod forest;
pub mod parking;
pub mod perm;
pub mod verify;

pub use archmap::{
    cda, cda_inverse, dual_layout, jcdal, jcdal_inverse, jcdal_via_upper, DualLayout,
};
pub use error::{Error, Result};
pub use factorization::{contract_lower, AreaStats, KFactorization};
pub use forest::{ForestStats, KForest, RootedForest};
pub use parking::{least_entries, least_entries_inverse, ParkingFunction};
pub use perm::{Cycle, Permutation};
pub use verify::{Report, Suite};
