use laumon::cells::enumerate_cells;
use laumon::cohomology::{generating_function_closed, laumon_poincare, shifted_poincare};
use laumon::kostant::enumerate_kostant;
use laumon::suites;
use laumon::{Caps, CorootVector, LaurentPoly, Result, RootSystem};
use serde_json::{json, Value};

use crate::render::Table;

pub struct Output {
    pub json: Value,
    pub table: Table,
    pub exit_code: u8,
}

impl Output {
    fn ok(json: Value, table: Table) -> Self {
        Self {
            json,
            table,
            exit_code: 0,
        }
    }
}

fn vector(rs: &RootSystem, coords: &[u32]) -> Result<CorootVector> {
    let v = CorootVector::new(coords.to_vec());
    rs.check_vector(&v)?;
    Ok(v)
}

fn poly_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

pub fn kostant(n: usize, gamma: &[u32], caps: &Caps) -> Result<Output> {
    let rs = RootSystem::new(n)?;
    let gamma = vector(&rs, gamma)?;
    let partitions = enumerate_kostant(&rs, &gamma, caps)?;
    let mut table = Table::new(
        format!("Kostant partitions of {gamma}"),
        &["partition", "norm", "parts"],
    );
    let rows: Vec<Value> = partitions
        .iter()
        .map(|k| {
            let (_, norm, parts) = k.stats();
            table.push(vec![k.to_string(), norm.to_string(), parts.to_string()]);
            json!({
                "partition": k,
                "text": k.to_string(),
                "weight": k.weight(),
                "norm": norm,
                "parts": parts,
            })
        })
        .collect();
    let json = json!({
        "command": "kostant",
        "n": n,
        "gamma": gamma,
        "count": partitions.len(),
        "rows": rows,
    });
    Ok(Output::ok(json, table))
}

pub fn poincare(n: usize, alpha: &[u32], shifted: bool, caps: &Caps) -> Result<Output> {
    let rs = RootSystem::new(n)?;
    let alpha = vector(&rs, alpha)?;
    let (poly, text, variable, step) = if shifted {
        let p = shifted_poincare(&rs, &alpha, caps)?;
        let text = p.to_q_string();
        (p, text, "q", 1)
    } else {
        let p = laumon_poincare(&rs, &alpha, caps)?;
        let text = p.to_t_string();
        (p, text, "t", 2)
    };
    let mut table = Table::new(
        format!("Poincare polynomial, alpha = {alpha}"),
        &["exponent", "coefficient"],
    );
    for (e, c) in poly.terms() {
        table.push(vec![format!("{variable}^{}", e / step), c.to_string()]);
    }
    let json = json!({
        "command": "poincare",
        "n": n,
        "alpha": alpha,
        "shifted": shifted,
        "variable": variable,
        "poly": poly_json(&poly),
        "text": text,
    });
    Ok(Output::ok(json, table))
}

pub fn genfunc(n: usize, degree: u32) -> Result<Output> {
    let rs = RootSystem::new(n)?;
    let series = generating_function_closed(&rs, degree)?;
    let two_rho = rs.two_rho();
    let mut table = Table::new(
        format!("Generating function up to degree {degree}"),
        &["weight", "alpha", "coefficient"],
    );
    let rows: Vec<Value> = series
        .iter()
        .map(|(weight, coeff)| {
            let alpha = weight
                .checked_sub(&two_rho)
                .expect("support lies above 2rho");
            table.push(vec![
                weight.to_string(),
                alpha.to_string(),
                coeff.to_q_string(),
            ]);
            json!({
                "weight": weight,
                "alpha": alpha,
                "poly": poly_json(coeff),
                "text": coeff.to_q_string(),
            })
        })
        .collect();
    let json = json!({
        "command": "genfunc",
        "n": n,
        "degree": degree,
        "coefficients": rows,
    });
    Ok(Output::ok(json, table))
}

pub fn cells(n: usize, alpha: &[u32], dims: bool, caps: &Caps) -> Result<Output> {
    let rs = RootSystem::new(n)?;
    let alpha = vector(&rs, alpha)?;
    let cells = enumerate_cells(&rs, &alpha, caps)?;
    let mut headers = vec!["w", "length", "kappa0", "kappaInf"];
    if dims {
        headers.push("d_conjectured");
    }
    let mut table = Table::new(format!("Cells, alpha = {alpha}"), &headers);
    let rows: Vec<Value> = cells
        .iter()
        .map(|c| {
            let mut line = vec![
                c.w.to_string(),
                c.w.length().to_string(),
                c.kappa0.to_string(),
                c.kappa_inf.to_string(),
            ];
            let mut row = json!({
                "w": c.w.to_string(),
                "lengths": {
                    "w": c.w.length(),
                    "kappa0": c.kappa0.norm(),
                    "kappaInf": c.kappa_inf.norm(),
                },
                "kappa0": c.kappa0,
                "kappaInf": c.kappa_inf,
            });
            if dims {
                line.push(c.conjectured_dim().to_string());
                row["d_conjectured"] = json!(c.conjectured_dim());
            }
            table.push(line);
            row
        })
        .collect();
    let json = json!({
        "command": "cells",
        "n": n,
        "alpha": alpha,
        "count": cells.len(),
        "rows": rows,
    });
    Ok(Output::ok(json, table))
}

pub fn verify(n: usize, degree: u32, suite: &str, strict: bool, caps: &Caps) -> Result<Output> {
    let rs = RootSystem::new(n)?;
    let reports = suites::run(suite, &rs, degree, caps)?;
    let exit_code = suites::exit_code(&reports, strict) as u8;
    let mut table = Table::new(
        format!("Verification, n = {n}, degree {degree}"),
        &["suite", "category", "case", "status"],
    );
    for r in &reports {
        for row in &r.rows {
            table.push(vec![
                r.suite.clone(),
                r.category.as_str().to_owned(),
                row.case.clone(),
                row.status.as_str().to_owned(),
            ]);
        }
    }
    let json = json!({
        "command": "verify",
        "n": n,
        "degree": degree,
        "suite": suite,
        "strict": strict,
        "exit_code": exit_code,
        "reports": reports,
    });
    Ok(Output {
        json,
        table,
        exit_code,
    })
}
