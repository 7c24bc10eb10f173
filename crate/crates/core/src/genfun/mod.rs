//! Plethystic exponential and logarithm, configuration-space series and
//! character-variety generating functions.

mod charvar;
mod config;
mod plethexp;

pub use charvar::{charvar_full_from_irr, charvar_irr_from_full, GeometricSeries, SeriesRole};
pub use config::{
    alpha_j, conf_ordered_epoly, equiv_config_epoly, ordered_sign_series, symmetrized_config_epoly,
    unordered_config_series, CycleType,
};
pub use plethexp::{
    mobius, pe, pe_product_formula, pe_via_coloring, pe_via_generators, pe_via_hn, pl, sign_series_via_coloring,
    sign_series_via_en,
};
