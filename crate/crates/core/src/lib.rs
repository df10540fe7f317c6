//! Exact census of reducible and pseudo-Anosov mapping classes in the pure
//! mapping class group of the four-holed sphere.
//!
//! PMod(0,4) is free on the Dehn twists `t_a`, `t_b`; words use `a`, `b` for
//! the twists and `A`, `B` for their inverses.

pub mod census;
pub mod classify;
pub mod error;
pub mod gamma;
pub mod ratio;
pub mod series;
pub mod word;

pub use census::{
    closed_form_cumulative, closed_form_reducible, count_conjugacy_set, count_conjugates_bruteforce,
    count_sphere_by_class, ratio_table, verify_partition_phi, CensusRow, EnumOptions, TableMode,
};
pub use classify::{axis_power_form, classify, Axis, AxisPower, Classification};
pub use error::{CensusError, ParseWordError, SeriesError};
pub use gamma::{gamma_census, gamma_classify, gamma_length, gamma_sphere_count, GammaElement, GammaRow};
pub use series::{expand, gf_h, gf_identity_check, gf_p, gf_r, IntPolynomial, RationalGF};
pub use word::{enumerate_sphere, Letter, Word};
