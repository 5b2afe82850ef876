//! Torus fixed points of `Q_alpha` and the cells attached to them.
//!
//! A fixed point is a triple `(w, kappa0, kappa_inf)` with
//! `|kappa0| + |kappa_inf| = alpha`. The dimension statistic
//! `l(w) + ||kappa0|| + ||kappa_inf|| + K(kappa0) - K(kappa_inf)` is only
//! expected to be the cell dimension for a good choice of one-parameter
//! subgroup, so its check is reported as a conjecture.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::charseries::LaurentPoly;
use crate::cohomology::laumon_poincare;
use crate::error::Result;
use crate::kostant::{enumerate_kostant, kostant_count, FixedPointExponents, KostantPartition};
use crate::report::{Category, Report, ReportRow, Status};
use crate::rootdata::{weyl_elements, CorootVector, RootSystem, WeylElement};
use crate::Caps;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub w: WeylElement,
    pub kappa0: KostantPartition,
    pub kappa_inf: KostantPartition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointDatum {
    pub w: WeylElement,
    pub d0: FixedPointExponents,
    pub d_inf: FixedPointExponents,
}

impl Cell {
    pub fn alpha(&self) -> CorootVector {
        &self.kappa0.weight() + &self.kappa_inf.weight()
    }

    pub fn fixed_point_datum(&self) -> FixedPointDatum {
        FixedPointDatum {
            w: self.w.clone(),
            d0: self.kappa0.fixed_point_d(),
            d_inf: self.kappa_inf.fixed_point_d(),
        }
    }

    pub fn conjectured_dim(&self) -> i64 {
        self.w.length() as i64
            + self.kappa0.norm() as i64
            + self.kappa_inf.norm() as i64
            + self.kappa0.num_parts() as i64
            - self.kappa_inf.num_parts() as i64
    }
}

/// Pairs `(kappa0, kappa_inf)` over all splits of `alpha`, sorted.
fn partition_pairs(
    rs: &RootSystem,
    alpha: &CorootVector,
    caps: &Caps,
) -> Result<Vec<(KostantPartition, KostantPartition)>> {
    let mut pairs = Vec::new();
    for gamma0 in alpha.dominated() {
        let gamma_inf = alpha.checked_sub(&gamma0).expect("gamma0 <= alpha");
        let zeros = enumerate_kostant(rs, &gamma0, caps)?;
        let infs = enumerate_kostant(rs, &gamma_inf, caps)?;
        for k0 in &zeros {
            for ki in &infs {
                pairs.push((k0.clone(), ki.clone()));
            }
        }
    }
    pairs.sort();
    Ok(pairs)
}

/// All cells, ordered by `w` (lexicographic permutation), then `kappa0`, then `kappa_inf`.
pub fn enumerate_cells(rs: &RootSystem, alpha: &CorootVector, caps: &Caps) -> Result<Vec<Cell>> {
    rs.check_vector(alpha)?;
    let group = weyl_elements(rs.n(), caps.weyl_rank)?;
    let pairs = partition_pairs(rs, alpha, caps)?;
    let mut cells = Vec::with_capacity(group.len() * pairs.len());
    for w in &group {
        for (k0, ki) in &pairs {
            cells.push(Cell {
                w: w.clone(),
                kappa0: k0.clone(),
                kappa_inf: ki.clone(),
            });
        }
    }
    Ok(cells)
}

/// `n! * sum_{gamma0 + gamma_inf = alpha} #K(gamma0) #K(gamma_inf)`.
pub fn cell_count_formula(rs: &RootSystem, alpha: &CorootVector) -> Result<BigUint> {
    rs.check_vector(alpha)?;
    let order: BigUint = (1..=rs.n() as u64).product();
    let mut pairs = BigUint::from(0u32);
    for gamma in alpha.dominated() {
        let rest = alpha.checked_sub(&gamma).expect("gamma <= alpha");
        pairs += kostant_count(rs, &gamma)? * kostant_count(rs, &rest)?;
    }
    Ok(order * pairs)
}

/// Number of cells against the Poincare polynomial at `t = 1` and against the
/// closed count.
pub fn euler_check(rs: &RootSystem, alpha: &CorootVector, caps: &Caps) -> Result<ReportRow> {
    let cells = enumerate_cells(rs, alpha, caps)?.len();
    let at_one = laumon_poincare(rs, alpha, caps)?.eval_at_one();
    let formula = cell_count_formula(rs, alpha)?;
    let ok = BigInt::from(cells) == at_one && BigUint::from(cells) == formula;
    Ok(
        ReportRow::new(format!("alpha={alpha}"), Status::from_bool(ok))
            .with("alpha", alpha)
            .with("cells", cells)
            .with("poincare_at_one", at_one.to_string())
            .with("count_formula", formula.to_string()),
    )
}

/// `sum_{cells} t^{d(cell)}` with `d` the conjectured dimension.
pub fn conjectured_dim_polynomial(
    rs: &RootSystem,
    alpha: &CorootVector,
    caps: &Caps,
) -> Result<LaurentPoly> {
    let mut poly = LaurentPoly::zero();
    for cell in enumerate_cells(rs, alpha, caps)? {
        poly += &LaurentPoly::t_power(cell.conjectured_dim());
    }
    Ok(poly)
}

/// Compares the conjectured-dimension generating polynomial with the Poincare
/// polynomial. PASS and FAIL are empirical statements only.
pub fn cell_dimension_conjecture_check(
    rs: &RootSystem,
    alpha: &CorootVector,
    caps: &Caps,
) -> Result<ReportRow> {
    let from_cells = conjectured_dim_polynomial(rs, alpha, caps)?;
    let poincare = laumon_poincare(rs, alpha, caps)?;
    let ok = from_cells == poincare;
    let mut row = ReportRow::new(format!("alpha={alpha}"), Status::from_bool(ok))
        .with("alpha", alpha)
        .with("category", Category::Conjecture);
    if ok {
        row = row.with("poly", poincare.to_t_string());
    } else {
        row = row
            .with("cells", from_cells.to_t_string())
            .with("poincare", poincare.to_t_string());
    }
    Ok(row)
}

/// Euler identity for every `alpha` with `|alpha| <= max_norm`.
pub fn euler_report(
    rs: &RootSystem,
    max_norm: u32,
    degree: Option<u32>,
    caps: &Caps,
) -> Result<Report> {
    let rows = CorootVector::all_up_to_norm(rs.rank(), max_norm)
        .iter()
        .map(|a| euler_check(rs, a, caps))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(
        "euler",
        Category::Theorem,
        rs.n(),
        degree,
        rows,
    ))
}

/// Conjectured-dimension check for every `alpha` with `|alpha| <= max_norm`.
pub fn celldim_report(
    rs: &RootSystem,
    max_norm: u32,
    degree: Option<u32>,
    caps: &Caps,
) -> Result<Report> {
    let rows = CorootVector::all_up_to_norm(rs.rank(), max_norm)
        .iter()
        .map(|a| cell_dimension_conjecture_check(rs, a, caps))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(
        "celldim",
        Category::Conjecture,
        rs.n(),
        degree,
        rows,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{weyl_poincare, PositiveCoroot};
    use serde_json::Value;

    fn v(c: &[u32]) -> CorootVector {
        CorootVector::new(c.to_vec())
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn cell_counts() {
        let rs2 = RootSystem::new(2).unwrap();
        let rs3 = RootSystem::new(3).unwrap();
        assert_eq!(enumerate_cells(&rs2, &v(&[1]), &caps()).unwrap().len(), 4);
        assert_eq!(
            enumerate_cells(&rs3, &v(&[1, 0]), &caps()).unwrap().len(),
            12
        );
        for n in 2..=5 {
            let rs = RootSystem::new(n).unwrap();
            let order: usize = (1..=n).product();
            let cells = enumerate_cells(&rs, &CorootVector::zero(n - 1), &caps()).unwrap();
            assert_eq!(cells.len(), order);
        }
    }

    #[test]
    fn cells_are_well_formed_and_sorted() {
        let rs = RootSystem::new(3).unwrap();
        let alpha = v(&[2, 1]);
        let cells = enumerate_cells(&rs, &alpha, &caps()).unwrap();
        assert!(cells.iter().all(|c| c.alpha() == alpha));
        assert!(cells.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn fixed_point_examples() {
        let one = KostantPartition::from_parts(1, &[PositiveCoroot::simple(1)]);
        let cell = Cell {
            w: WeylElement::identity(2),
            kappa0: one,
            kappa_inf: KostantPartition::empty(1),
        };
        let d = cell.fixed_point_datum();
        assert_eq!((d.d0.0.get(1, 1), d.d_inf.0.get(1, 1)), (1, 0));

        let empty = Cell {
            w: WeylElement::identity(3),
            kappa0: KostantPartition::empty(2),
            kappa_inf: KostantPartition::empty(2),
        };
        let d = empty.fixed_point_datum();
        assert!(d
            .d0
            .0
            .entries()
            .iter()
            .chain(d.d_inf.0.entries())
            .all(|&x| x == 0));

        let top = Cell {
            w: WeylElement::from_perm(vec![3, 1, 2]).unwrap(),
            kappa0: KostantPartition::from_parts(2, &[PositiveCoroot::new(1, 2)]),
            kappa_inf: KostantPartition::empty(2),
        };
        let d0 = top.fixed_point_datum().d0.0;
        assert_eq!((d0.get(1, 1), d0.get(2, 1), d0.get(2, 2)), (1, 1, 0));
    }

    #[test]
    fn conjectured_dim_examples() {
        let one = KostantPartition::from_parts(1, &[PositiveCoroot::simple(1)]);
        let empty = KostantPartition::empty(1);
        let s = WeylElement::from_perm(vec![2, 1]).unwrap();
        let c = Cell {
            w: WeylElement::identity(2),
            kappa0: one.clone(),
            kappa_inf: empty.clone(),
        };
        assert_eq!(c.conjectured_dim(), 2);
        let c = Cell {
            w: s,
            kappa0: empty.clone(),
            kappa_inf: one,
        };
        assert_eq!(c.conjectured_dim(), 1);
        let c = Cell {
            w: WeylElement::identity(2),
            kappa0: empty.clone(),
            kappa_inf: empty,
        };
        assert_eq!(c.conjectured_dim(), 0);
    }

    #[test]
    fn conjectured_dims_stay_in_range() {
        for n in 2..=3 {
            let rs = RootSystem::new(n).unwrap();
            for alpha in CorootVector::all_up_to_norm(n - 1, 4) {
                let top = rs.dim_flag() as i64 + 2 * alpha.norm() as i64;
                for c in enumerate_cells(&rs, &alpha, &caps()).unwrap() {
                    let d = c.conjectured_dim();
                    assert!((0..=top).contains(&d), "{c:?}");
                }
            }
        }
    }

    #[test]
    fn euler_examples() {
        let rs2 = RootSystem::new(2).unwrap();
        let row = euler_check(&rs2, &v(&[1]), &caps()).unwrap();
        assert_eq!(row.status, Status::Pass);
        assert_eq!(row.values["cells"], Value::from(4));
        let row = euler_check(&rs2, &v(&[0]), &caps()).unwrap();
        assert_eq!(row.values["cells"], Value::from(2));
        let rs3 = RootSystem::new(3).unwrap();
        let row = euler_check(&rs3, &v(&[1, 0]), &caps()).unwrap();
        assert_eq!(row.status, Status::Pass);
        assert_eq!(row.values["poincare_at_one"], Value::from("12"));
    }

    #[test]
    fn conjecture_examples() {
        let rs2 = RootSystem::new(2).unwrap();
        let rs3 = RootSystem::new(3).unwrap();
        assert_eq!(
            conjectured_dim_polynomial(&rs2, &v(&[1]), &caps())
                .unwrap()
                .to_t_string(),
            "1+t+t^2+t^3"
        );
        assert_eq!(
            conjectured_dim_polynomial(&rs3, &v(&[1, 0]), &caps())
                .unwrap()
                .to_t_string(),
            "1+2t+3t^2+3t^3+2t^4+t^5"
        );
        assert_eq!(
            conjectured_dim_polynomial(&rs2, &v(&[0]), &caps()).unwrap(),
            weyl_poincare(2)
        );
        let row = cell_dimension_conjecture_check(&rs3, &v(&[1, 0]), &caps()).unwrap();
        assert_eq!(row.status, Status::Pass);
        assert_eq!(row.values["category"], Value::from("CONJECTURE"));
    }

    #[test]
    fn flag_variety_limit() {
        for n in 2..=5 {
            let rs = RootSystem::new(n).unwrap();
            let zero = CorootVector::zero(n - 1);
            assert_eq!(
                conjectured_dim_polynomial(&rs, &zero, &caps()).unwrap(),
                weyl_poincare(n)
            );
        }
    }
}
