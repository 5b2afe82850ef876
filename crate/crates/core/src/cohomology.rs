//! Poincare polynomials of the Laumon spaces, computed stratum by stratum,
//! and the closed-form generating function over all degrees `alpha`.
//!
//! All polynomials here live in `q` with `t = q^2`; before the shift to
//! symmetric degrees they are supported on even powers of `q` only.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::charseries::{CharSeries, LaurentPoly};
use crate::error::{Error, Result};
use crate::kostant::{
    enumerate_kostant, lusztig_kostant_poly, lusztig_kostant_poly_from_counts, KostantCounter,
    KostantPartition,
};
use crate::report::{Category, Report, ReportRow, Status};
use crate::rootdata::{weyl_poincare, CorootVector, RootSystem};
use crate::Caps;

/// The stratum of quasiflags in `Q_alpha` whose defect at infinity has type `kappa`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumDescriptor {
    alpha: CorootVector,
    kappa: KostantPartition,
}

impl StratumDescriptor {
    pub fn new(alpha: CorootVector, kappa: KostantPartition) -> Result<Self> {
        if kappa.rank() != alpha.len() || !kappa.weight().le(&alpha) {
            return Err(Error::MalformedStratum);
        }
        Ok(Self { alpha, kappa })
    }

    pub fn alpha(&self) -> &CorootVector {
        &self.alpha
    }

    pub fn kappa(&self) -> &KostantPartition {
        &self.kappa
    }
}

fn check_alpha(rs: &RootSystem, alpha: &CorootVector, caps: &Caps) -> Result<()> {
    rs.check_vector(alpha)?;
    if alpha.norm() > caps.kostant_weight {
        return Err(Error::CapExceeded {
            what: "|alpha|",
            value: alpha.norm() as u64,
            cap: caps.kostant_weight as u64,
        });
    }
    Ok(())
}

/// `t^{dim B + 2|alpha| - ||kappa|| - K(kappa)} K_{alpha-|kappa|}(t^{-1}) W(t^{-1})`,
/// the compactly supported Poincare polynomial of one stratum.
pub fn stratum_hc_poly(rs: &RootSystem, s: &StratumDescriptor, caps: &Caps) -> Result<LaurentPoly> {
    check_alpha(rs, &s.alpha, caps)?;
    let rest = s
        .alpha
        .checked_sub(&s.kappa.weight())
        .ok_or(Error::MalformedStratum)?;
    let fiber = lusztig_kostant_poly(rs, &rest, caps)?.negate_exponents();
    Ok(stratum_from_parts(
        rs,
        &s.alpha,
        s.kappa.norm(),
        s.kappa.num_parts(),
        &fiber,
    ))
}

fn stratum_from_parts(
    rs: &RootSystem,
    alpha: &CorootVector,
    norm: u32,
    parts: u32,
    fiber_inverted: &LaurentPoly,
) -> LaurentPoly {
    let shift = rs.dim_flag() as i64 + 2 * alpha.norm() as i64 - norm as i64 - parts as i64;
    let flag = weyl_poincare(rs.n()).negate_exponents();
    (fiber_inverted * &flag).shift(2 * shift)
}

/// Poincare polynomial of `Q_alpha` as the sum over all strata (Cousin sum).
pub fn laumon_poincare(rs: &RootSystem, alpha: &CorootVector, caps: &Caps) -> Result<LaurentPoly> {
    check_alpha(rs, alpha, caps)?;
    let mut total = LaurentPoly::zero();
    for gamma in alpha.dominated() {
        let rest = alpha.checked_sub(&gamma).expect("gamma <= alpha");
        let fiber = lusztig_kostant_poly(rs, &rest, caps)?.negate_exponents();
        for kappa in enumerate_kostant(rs, &gamma, caps)? {
            total += &stratum_from_parts(rs, alpha, kappa.norm(), kappa.num_parts(), &fiber);
        }
    }
    Ok(total)
}

/// The same Cousin sum, aggregated by number of parts through the counting
/// table instead of listing partitions.
pub fn laumon_poincare_aggregated(rs: &RootSystem, alpha: &CorootVector) -> Result<LaurentPoly> {
    rs.check_vector(alpha)?;
    let counter = KostantCounter::new(rs);
    let mut total = LaurentPoly::zero();
    for gamma in alpha.dominated() {
        let rest = alpha.checked_sub(&gamma).expect("gamma <= alpha");
        let fiber = lusztig_kostant_poly_from_counts(&counter, &rest).negate_exponents();
        for (parts, count) in counter.count_by_parts(&gamma).into_iter().enumerate() {
            let stratum = stratum_from_parts(rs, alpha, gamma.norm(), parts as u32, &fiber);
            total += &stratum.scale(&BigInt::from(count));
        }
    }
    Ok(total)
}

/// `laumon_poincare` re-centred to be symmetric around degree zero.
pub fn shifted_poincare(rs: &RootSystem, alpha: &CorootVector, caps: &Caps) -> Result<LaurentPoly> {
    let dim = rs.dim_flag() as i64 + 2 * alpha.norm() as i64;
    Ok(laumon_poincare(rs, alpha, caps)?.shift(-dim))
}

/// Expansion of
/// `e^{2rho} q^{-dim B} W(t) / prod_{theta > 0} (1 - t e^theta)(1 - t^{-1} e^theta)`
/// up to total degree `bound`.
pub fn generating_function_closed(rs: &RootSystem, bound: u32) -> Result<CharSeries> {
    let two_rho = rs.two_rho();
    let min = two_rho.norm();
    if bound < min {
        return Err(Error::DegreeTooSmall { bound, min });
    }
    let inner = bound - min;
    let t = LaurentPoly::t_power(1);
    let t_inv = LaurentPoly::t_power(-1);
    let mut product = CharSeries::one(rs.rank(), inner);
    for theta in rs.positive_vectors() {
        product = product.try_mul(&CharSeries::geometric_inverse(&t, &theta, inner)?)?;
        product = product.try_mul(&CharSeries::geometric_inverse(&t_inv, &theta, inner)?)?;
    }
    let prefactor = weyl_poincare(rs.n()).shift(-(rs.dim_flag() as i64));
    Ok(shift_series(&product, &two_rho, &prefactor, bound))
}

// Multiplies by c * e^shift and re-bounds; all keys land at |a + shift| <= bound.
pub(crate) fn shift_series(
    s: &CharSeries,
    shift: &CorootVector,
    c: &LaurentPoly,
    bound: u32,
) -> CharSeries {
    let mut out = CharSeries::zero(s.rank(), bound);
    for (a, coeff) in s.iter() {
        out.add_coeff(a + shift, &(coeff * c));
    }
    out
}

/// Compares every coefficient of the closed form against the Cousin sum, and
/// checks Poincare duality and parity of each shifted polynomial.
pub fn verify_generating_function(rs: &RootSystem, bound: u32, caps: &Caps) -> Result<Report> {
    let closed = generating_function_closed(rs, bound)?;
    let two_rho = rs.two_rho();
    let inner = bound - two_rho.norm();
    let alphas = CorootVector::all_up_to_norm(rs.rank(), inner);
    let expected_parity = (rs.dim_flag() % 2) as i64;

    let mut rows: Vec<ReportRow> = alphas
        .par_iter()
        .map(|alpha| -> Result<ReportRow> {
            let cousin = shifted_poincare(rs, alpha, caps)?;
            let closed_coeff = closed.coefficient(&(alpha + &two_rho));
            let matches = cousin == closed_coeff;
            let palindromic = cousin.is_palindromic();
            let parity_ok = cousin.parity() == Some(expected_parity);
            let mut row = ReportRow::new(
                format!("alpha={alpha}"),
                Status::from_bool(matches && palindromic && parity_ok),
            )
            .with("alpha", alpha)
            .with("matches", matches)
            .with("palindromic", palindromic)
            .with("single_parity", parity_ok);
            if matches {
                row = row.with("poly", cousin.to_q_string());
            } else {
                row = row
                    .with("cousin", cousin.to_q_string())
                    .with("closed", closed_coeff.to_q_string());
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;

    let stray: Vec<String> = closed
        .iter()
        .filter(|(a, _)| !two_rho.le(a))
        .map(|(a, _)| a.to_string())
        .collect();
    rows.push(
        ReportRow::new("support", Status::from_bool(stray.is_empty()))
            .with("outside_2rho_cone", stray),
    );
    Ok(Report::new(
        "genfunc",
        Category::Theorem,
        rs.n(),
        Some(bound),
        rows,
    ))
}
