//! Characters of the `sl_n`-module assembled from the Laumon cohomologies.
//!
//! Characters are [`CharSeries`] whose coefficients are constants.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cells::cell_count_formula;
use crate::charseries::{CharSeries, LaurentPoly};
use crate::cohomology::{generating_function_closed, laumon_poincare_aggregated, shift_series};
use crate::error::{Error, Result};
use crate::report::{Category, Report, ReportRow, Status};
use crate::rootdata::{CorootVector, RootSystem};

fn inner_bound(rs: &RootSystem, bound: u32) -> Result<u32> {
    let min = rs.two_rho().norm();
    bound
        .checked_sub(min)
        .ok_or(Error::DegreeTooSmall { bound, min })
}

/// `|W| e^{2rho} prod_theta (1 - e^theta)^{-power}` up to total degree `bound`.
fn weyl_denominator_series(rs: &RootSystem, bound: u32, power: u32) -> Result<CharSeries> {
    let inner = inner_bound(rs, bound)?;
    let one = LaurentPoly::one();
    let mut product = CharSeries::one(rs.rank(), inner);
    for theta in rs.positive_vectors() {
        let factor = CharSeries::geometric_inverse(&one, &theta, inner)?;
        for _ in 0..power {
            product = product.try_mul(&factor)?;
        }
    }
    let order: u64 = (1..=rs.n() as u64).product();
    Ok(shift_series(
        &product,
        &rs.two_rho(),
        &LaurentPoly::constant(order),
        bound,
    ))
}

/// `|W| e^{2rho} / prod_theta (1 - e^theta)^2`.
pub fn module_character(rs: &RootSystem, bound: u32) -> Result<CharSeries> {
    weyl_denominator_series(rs, bound, 2)
}

/// `|W| e^{2rho} / prod_theta (1 - e^theta)`: the Verma multiplicities the
/// module would have if it were free over `U(n)`.
pub fn verma_multiplicity_series(rs: &RootSystem, bound: u32) -> Result<CharSeries> {
    weyl_denominator_series(rs, bound, 1)
}

fn constant_of(p: &LaurentPoly) -> Option<BigInt> {
    match p.min_exp() {
        None => Some(BigInt::from(0)),
        Some(0) if p.max_exp() == Some(0) => Some(p.coeff(0)),
        _ => None,
    }
}

/// For each `alpha`, the weight `alpha + 2rho` multiplicity against the Poincare
/// polynomial at 1, the closed generating function at `q = 1` and the cell count.
pub fn weight_space_check(rs: &RootSystem, bound: u32) -> Result<Report> {
    let inner = inner_bound(rs, bound)?;
    let character = module_character(rs, bound)?;
    let closed = generating_function_closed(rs, bound)?.at_q_one();
    let two_rho = rs.two_rho();

    let mut rows = CorootVector::all_up_to_norm(rs.rank(), inner)
        .par_iter()
        .map(|alpha| -> Result<ReportRow> {
            let weight = alpha + &two_rho;
            let from_character = constant_of(&character.coefficient(&weight));
            let from_closed = constant_of(&closed.coefficient(&weight));
            let poincare = laumon_poincare_aggregated(rs, alpha)?.eval_at_one();
            let cells = BigInt::from(cell_count_formula(rs, alpha)?);
            let ok = from_character.as_ref() == Some(&poincare)
                && from_closed.as_ref() == Some(&poincare)
                && cells == poincare;
            let show =
                |v: Option<BigInt>| v.map_or_else(|| "non-constant".to_owned(), |c| c.to_string());
            Ok(
                ReportRow::new(format!("alpha={alpha}"), Status::from_bool(ok))
                    .with("alpha", alpha)
                    .with("character", show(from_character))
                    .with("closed_at_one", show(from_closed))
                    .with("poincare_at_one", poincare.to_string())
                    .with("cell_count", cells.to_string()),
            )
        })
        .collect::<Result<Vec<_>>>()?;

    let stray: Vec<String> = character
        .iter()
        .filter(|(a, _)| !two_rho.le(a))
        .map(|(a, _)| a.to_string())
        .collect();
    rows.push(
        ReportRow::new("support", Status::from_bool(stray.is_empty()))
            .with("outside_2rho_cone", stray),
    );
    Ok(Report::new(
        "characters",
        Category::Theorem,
        rs.n(),
        Some(bound),
        rows,
    ))
}

/// Necessary condition for freeness: Verma multiplicities are non-negative
/// integers and recombine to the module character.
pub fn freeness_consistency_check(rs: &RootSystem, bound: u32) -> Result<Report> {
    let inner = inner_bound(rs, bound)?;
    let verma = verma_multiplicity_series(rs, bound)?;
    let character = module_character(rs, bound)?;
    let two_rho = rs.two_rho();

    let mut rows: Vec<ReportRow> = CorootVector::all_up_to_norm(rs.rank(), inner)
        .iter()
        .map(|alpha| {
            let weight = alpha + &two_rho;
            let coeff = verma.coefficient(&weight);
            let value = constant_of(&coeff);
            let ok = value.as_ref().is_some_and(|c| *c >= BigInt::from(0));
            ReportRow::new(format!("alpha={alpha}"), Status::from_bool(ok))
                .with("alpha", alpha)
                .with("verma_multiplicity", coeff.to_q_string())
        })
        .collect();

    let mut rebuilt = verma;
    for theta in rs.positive_vectors() {
        let factor = CharSeries::geometric_inverse(&LaurentPoly::one(), &theta, bound)?;
        rebuilt = rebuilt.try_mul(&factor)?;
    }
    let mismatched: Vec<String> = CorootVector::all_up_to_norm(rs.rank(), bound)
        .into_iter()
        .filter(|a| rebuilt.coefficient(a) != character.coefficient(a))
        .map(|a| a.to_string())
        .collect();
    rows.push(
        ReportRow::new("recombination", Status::from_bool(mismatched.is_empty()))
            .with("mismatched_weights", mismatched),
    );
    Ok(Report::new(
        "freeness",
        Category::ConjectureConsistency,
        rs.n(),
        Some(bound),
        rows,
    ))
}
