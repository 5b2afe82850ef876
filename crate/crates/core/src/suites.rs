//! The verification suites behind `laumon verify`.
//!
//! Series suites (`genfunc`, `euler`, `celldim`, `characters`, `freeness`,
//! and the commutator rows of `commute`) range over `|alpha| <= D - |2rho|`.
//! The filtration suites depend only on `n`.

use rayon::prelude::*;

use crate::cells::{celldim_report, euler_report};
use crate::cohomology::verify_generating_function;
use crate::error::{Error, Result};
use crate::kostant::enumerate_kostant;
use crate::modchar::{freeness_consistency_check, weight_space_check};
use crate::quiverfilt::{
    commutator_constant, commuting_counts, commuting_pair, generic_shape_i_ij, generic_shape_iij,
    pbw_expected, pbw_multiplicity, pbw_type, serre_alternating_sum,
};
use crate::report::{Category, Report, ReportRow, Status};
use crate::rootdata::{CorootVector, PositiveCoroot, RootSystem};
use crate::Caps;

pub const SUITES: [&str; 8] = [
    "genfunc",
    "euler",
    "celldim",
    "serre",
    "pbw",
    "commute",
    "characters",
    "freeness",
];

/// Largest `sum c_k` in the PBW suite.
pub const PBW_MAX_TOTAL: u32 = 4;

pub fn is_known_suite(name: &str) -> bool {
    name == "all" || SUITES.contains(&name)
}

fn inner_bound(rs: &RootSystem, bound: u32) -> Result<u32> {
    let min = rs.two_rho().norm();
    bound
        .checked_sub(min)
        .ok_or(Error::DegreeTooSmall { bound, min })
}

/// Runs one named suite, or every suite for `"all"`. Unknown names are an
/// `InconsistentType` error; callers should check with [`is_known_suite`].
pub fn run(name: &str, rs: &RootSystem, bound: u32, caps: &Caps) -> Result<Vec<Report>> {
    if name == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(run(s, rs, bound, caps)?);
        }
        return Ok(out);
    }
    let inner = inner_bound(rs, bound)?;
    let degree = Some(bound);
    Ok(match name {
        "genfunc" => vec![verify_generating_function(rs, bound, caps)?],
        "euler" => vec![euler_report(rs, inner, degree, caps)?],
        "celldim" => vec![celldim_report(rs, inner, degree, caps)?],
        "serre" => vec![serre_report(rs, degree, caps)?],
        "pbw" => pbw_reports(rs, PBW_MAX_TOTAL, degree, caps)?,
        "commute" => vec![commute_report(rs, inner, degree, caps)?],
        "characters" => vec![weight_space_check(rs, bound)?],
        "freeness" => vec![freeness_consistency_check(rs, bound)?],
        other => return Err(Error::InconsistentType(format!("unknown suite {other}"))),
    })
}

/// 0 when everything passed; 1 when a theorem identity failed (or, under
/// `strict`, a conjectural check failed); 3 when only conjectural checks failed.
pub fn exit_code(reports: &[Report], strict: bool) -> i32 {
    let failed = |conjectural: bool| {
        reports
            .iter()
            .any(|r| r.category.is_conjectural() == conjectural && r.status == Status::Fail)
    };
    if failed(false) {
        1
    } else if failed(true) {
        if strict {
            1
        } else {
            3
        }
    } else {
        0
    }
}

/// Expected `(N_iij, N_iji, N_jii)` on the two generic shapes.
pub fn serre_expected(i: usize, j: usize) -> ([u64; 3], [u64; 3]) {
    if j + 1 == i {
        ([2, 2, 2], [2, 1, 0])
    } else {
        // with the interval at the other end the extension runs the other way
        ([2, 2, 2], [0, 1, 2])
    }
}

/// Filtration counts and alternating sums for every ordered adjacent pair.
pub fn serre_report(rs: &RootSystem, degree: Option<u32>, caps: &Caps) -> Result<Report> {
    let rank = rs.rank();
    let mut rows = Vec::new();
    for i in 1..=rank {
        for j in [i.wrapping_sub(1), i + 1] {
            if j < 1 || j > rank {
                continue;
            }
            let (exp_a, exp_b) = serre_expected(i, j);
            for (shape, rep, expected) in [
                ("iij", generic_shape_iij(rank, i, j)?, exp_a),
                ("i_ij", generic_shape_i_ij(rank, i, j)?, exp_b),
            ] {
                let check = serre_alternating_sum(i, j, &rep, caps)?;
                let ok = check.counts == expected && check.alternating_sum == 0;
                rows.push(
                    ReportRow::new(format!("i={i},j={j},shape={shape}"), Status::from_bool(ok))
                        .with("rep", rep.to_string())
                        .with("counts", check.counts)
                        .with("expected", expected)
                        .with("alternating_sum", check.alternating_sum),
                );
            }
        }
    }
    Ok(Report::new(
        "serre",
        Category::Theorem,
        rs.n(),
        degree,
        rows,
    ))
}

/// `<i', beta>` computed in the `epsilon` basis of the Cartan of `gl_n`.
pub fn pairing_via_epsilon(n: usize, i: usize, beta: &CorootVector) -> i64 {
    // beta = sum b_k (eps_k - eps_{k+1}) has eps-coordinates x_k = b_k - b_{k-1}
    let b = |k: usize| {
        if (1..n).contains(&k) {
            beta.coord(k) as i64
        } else {
            0
        }
    };
    let x = |k: usize| b(k) - b(k - 1);
    x(i) - x(i + 1)
}

/// Far-apart commuting counts, and the commutator constant against the
/// `epsilon`-basis computation for `|alpha| <= max_norm`.
pub fn commute_report(
    rs: &RootSystem,
    max_norm: u32,
    degree: Option<u32>,
    caps: &Caps,
) -> Result<Report> {
    let rank = rs.rank();
    let mut rows = Vec::new();
    for i in 1..=rank {
        for j in i + 2..=rank {
            for same in [false, true] {
                let rep = commuting_pair(rank, i, j, same)?;
                let [ij, ji] = commuting_counts(i, j, &rep, caps)?;
                let where_ = if same { "same" } else { "distinct" };
                rows.push(
                    ReportRow::new(
                        format!("i={i},j={j},points={where_}"),
                        Status::from_bool(ij == ji),
                    )
                    .with("counts", [ij, ji]),
                );
            }
        }
    }
    let two_rho = rs.two_rho();
    for alpha in CorootVector::all_up_to_norm(rank, max_norm) {
        let shifted = &alpha + &two_rho;
        for i in 1..=rank {
            let constant = commutator_constant(rs, i, &alpha)?;
            let oracle = pairing_via_epsilon(rs.n(), i, &shifted);
            rows.push(
                ReportRow::new(
                    format!("i={i},alpha={alpha}"),
                    Status::from_bool(constant == oracle),
                )
                .with("constant", constant)
                .with("epsilon_basis", oracle),
            );
        }
    }
    Ok(Report::new(
        "commute",
        Category::Theorem,
        rs.n(),
        degree,
        rows,
    ))
}

/// Every exponent vector of length `len` with `1 <= sum <= max_total`.
pub fn exponent_vectors(len: usize, max_total: u32) -> Vec<Vec<u32>> {
    CorootVector::all_up_to_norm(len, max_total)
        .into_iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.coords().to_vec())
        .collect()
}

fn pbw_rows(
    rs: &RootSystem,
    order: &[PositiveCoroot],
    max_total: u32,
    caps: &Caps,
) -> Result<Vec<(ReportRow, bool)>> {
    let per_c = exponent_vectors(order.len(), max_total)
        .par_iter()
        .map(|c| -> Result<Vec<(ReportRow, bool)>> {
            let weight = pbw_type(order, c).weight(rs.rank());
            let mut rows = Vec::new();
            for gamma in enumerate_kostant(rs, &weight, caps)? {
                let got = pbw_multiplicity(rs, order, c, &gamma, caps)?;
                let expected = pbw_expected(order, c, &gamma);
                let case = format!("c={} Gamma={gamma}", CorootVector::new(c.clone()));
                let row = ReportRow::new(case, Status::Pass)
                    .with("count", got)
                    .with("expected", expected);
                rows.push((row, got == expected));
            }
            Ok(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_c.into_iter().flatten().collect())
}

/// Divided-power multiplicities for the canonical coroot order (a theorem),
/// and for the reversed order as an order-sensitivity probe. The probe makes
/// no claim: disagreements are reported as UNKNOWN.
pub fn pbw_reports(
    rs: &RootSystem,
    max_total: u32,
    degree: Option<u32>,
    caps: &Caps,
) -> Result<Vec<Report>> {
    let need = max_total * rs.rank() as u32;
    let caps = Caps {
        kostant_weight: caps.kostant_weight.max(need),
        filtration_dim: caps.filtration_dim.max(need),
        ..*caps
    };
    let canonical = rs.positive().to_vec();
    let rows = pbw_rows(rs, &canonical, max_total, &caps)?
        .into_iter()
        .map(|(mut row, ok)| {
            row.status = Status::from_bool(ok);
            row
        })
        .collect();
    let main = Report::new("pbw", Category::Theorem, rs.n(), degree, rows);

    let reversed: Vec<PositiveCoroot> = canonical.iter().rev().copied().collect();
    let rows = pbw_rows(rs, &reversed, max_total, &caps)?
        .into_iter()
        .map(|(mut row, ok)| {
            row.status = if ok { Status::Pass } else { Status::Unknown };
            row
        })
        .collect();
    let probe = Report::new(
        "pbw-reversed-order",
        Category::Conjecture,
        rs.n(),
        degree,
        rows,
    );
    Ok(vec![main, probe])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_pairing_matches_cartan() {
        for n in 2..=5 {
            let rs = RootSystem::new(n).unwrap();
            for beta in CorootVector::all_up_to_norm(n - 1, 4) {
                for i in 1..n {
                    assert_eq!(
                        pairing_via_epsilon(n, i, &beta),
                        rs.pairing(i, &beta).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn exit_codes() {
        let pass = Report::new(
            "a",
            Category::Theorem,
            2,
            None,
            vec![ReportRow::new("x", Status::Pass)],
        );
        let fail = Report::new(
            "a",
            Category::Theorem,
            2,
            None,
            vec![ReportRow::new("x", Status::Fail)],
        );
        let soft = Report::new(
            "b",
            Category::Conjecture,
            2,
            None,
            vec![ReportRow::new("x", Status::Fail)],
        );
        let unknown = Report::new(
            "b",
            Category::Conjecture,
            2,
            None,
            vec![ReportRow::new("x", Status::Unknown)],
        );
        assert_eq!(exit_code(std::slice::from_ref(&pass), false), 0);
        assert_eq!(exit_code(&[pass.clone(), unknown], true), 0);
        assert_eq!(exit_code(&[pass.clone(), soft.clone()], false), 3);
        assert_eq!(exit_code(&[pass, soft.clone()], true), 1);
        assert_eq!(exit_code(&[fail, soft], false), 1);
    }

    #[test]
    fn serre_suite_small() {
        for n in 2..=4 {
            let rs = RootSystem::new(n).unwrap();
            let report = serre_report(&rs, None, &Caps::default()).unwrap();
            assert!(report.passed(), "n={n}");
            assert_eq!(report.rows.len(), 4 * (n - 2));
        }
    }

    #[test]
    fn commute_suite_small() {
        let rs = RootSystem::new(4).unwrap();
        let report = commute_report(&rs, 2, None, &Caps::default()).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn pbw_suite_small() {
        let rs = RootSystem::new(3).unwrap();
        let reports = pbw_reports(&rs, 3, None, &Caps::default()).unwrap();
        assert!(reports[0].passed());
        assert_eq!(reports[1].category, Category::Conjecture);
        assert_ne!(reports[1].status, Status::Fail);
    }

    #[test]
    fn all_suites_at_n2() {
        let rs = RootSystem::new(2).unwrap();
        let reports = run("all", &rs, 9, &Caps::default()).unwrap();
        assert_eq!(exit_code(&reports, true), 0);
        assert!(run("nope", &rs, 9, &Caps::default()).is_err());
        assert!(matches!(
            run("genfunc", &rs, 0, &Caps::default()),
            Err(Error::DegreeTooSmall { .. })
        ));
    }
}
