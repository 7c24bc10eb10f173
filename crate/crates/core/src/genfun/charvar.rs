use crate::exactalg::TSeries;
use crate::{Error, Result};

use super::plethexp::{pe, pl};

/// What a [`GeometricSeries`] counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesRole {
    /// `Σ_{n≥0} E(X_Γ GLₙ) tⁿ`, constant term 1.
    Full,
    /// `Σ_{n≥1} E(X_Γ^irr GLₙ) tⁿ`, constant term 0.
    Irreducible,
    Generic,
}

/// A generating series tagged with its role. The tag is checked at the
/// boundaries of the character-variety conversions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricSeries {
    pub series: TSeries,
    pub role: SeriesRole,
}

impl GeometricSeries {
    pub fn new(series: TSeries, role: SeriesRole) -> Self {
        GeometricSeries { series, role }
    }
}

/// Full series from the irreducible one: `PE[irr]`.
pub fn charvar_full_from_irr(irr: &GeometricSeries) -> Result<GeometricSeries> {
    if irr.role == SeriesRole::Full {
        return Err(Error::ConstantTermNotOne);
    }
    Ok(GeometricSeries::new(pe(&irr.series)?, SeriesRole::Full))
}

/// Irreducible series from the full one: `PL[full]`.
pub fn charvar_irr_from_full(full: &GeometricSeries) -> Result<GeometricSeries> {
    if full.role == SeriesRole::Irreducible {
        return Err(Error::NonzeroConstantTerm);
    }
    Ok(GeometricSeries::new(pl(&full.series)?, SeriesRole::Irreducible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::BiPoly;

    #[test]
    fn examples() {
        let zero = GeometricSeries::new(TSeries::zero(3), SeriesRole::Irreducible);
        let full = charvar_full_from_irr(&zero).unwrap();
        assert_eq!(full, GeometricSeries::new(TSeries::one(3), SeriesRole::Full));
        assert!(charvar_irr_from_full(&full).unwrap().series.is_zero());

        let ones = TSeries::from_coeffs(3, alloc::vec![BiPoly::one(); 4]);
        let irr = charvar_irr_from_full(&GeometricSeries::new(ones, SeriesRole::Generic)).unwrap();
        assert_eq!(irr.series, TSeries::monomial(3, BiPoly::one(), 1));
        assert_eq!(irr.role, SeriesRole::Irreducible);
    }

    #[test]
    fn role_mismatch_rejected() {
        let s = GeometricSeries::new(TSeries::one(2), SeriesRole::Full);
        assert!(charvar_full_from_irr(&s).is_err());
        let s = GeometricSeries::new(TSeries::zero(2), SeriesRole::Irreducible);
        assert!(charvar_irr_from_full(&s).is_err());
    }
}
