//! Torsion representations of the `A_{n-1}` quiver `1 -> 2 -> ... -> n-1`
//! and counts of their filtrations of a prescribed type.
//!
//! A representation is a direct sum of interval modules `M_[q,p]`, each
//! placed at a labelled point of the curve. A filtration of type
//! `(beta_1, ..., beta_m)` is a chain `0 = F_0 < F_1 < ... < F_m = T` of
//! subrepresentations with `F_k / F_{k-1}` isomorphic to `M_{beta_k}` at a
//! single point. On `M_[q,p]` the socle sits at vertex `p` and the top at
//! vertex `q`.
//!
//! Counts are computed twice: as a polynomial in the size of the ground
//! field (see [`symbolic`]), and by exhaustive enumeration of subspaces over
//! `F_2` and `F_3` (see [`finite_field`]). The two must agree at 2 and 3.

pub mod finite_field;
pub mod symbolic;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::charseries::LaurentPoly;
use crate::error::{Error, Result};
use crate::kostant::KostantPartition;
use crate::rootdata::{CorootVector, PositiveCoroot, RootSystem};
use crate::Caps;

/// One summand `M_root (x) O_point`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Summand {
    pub root: PositiveCoroot,
    pub point: u32,
}

impl Summand {
    pub fn new(root: PositiveCoroot, point: u32) -> Self {
        Self { root, point }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TorsionRep {
    rank: usize,
    summands: Vec<Summand>,
}

impl TorsionRep {
    pub fn new(rank: usize, mut summands: Vec<Summand>) -> Result<Self> {
        for s in &summands {
            if s.root.q < 1 || s.root.q > s.root.p || s.root.p > rank {
                return Err(Error::IndexOutOfRange {
                    index: s.root.p.max(s.root.q),
                    max: rank,
                });
            }
        }
        summands.sort();
        Ok(Self { rank, summands })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn points(&self) -> Vec<u32> {
        self.summands
            .iter()
            .map(|s| s.point)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// `dim T = sum_r gamma_r`.
    pub fn dimension(&self) -> CorootVector {
        self.summands
            .iter()
            .fold(CorootVector::zero(self.rank), |acc, s| {
                &acc + &s.root.to_vector(self.rank)
            })
    }

    /// `dim_x T`.
    pub fn local_dimension(&self, point: u32) -> CorootVector {
        self.summands
            .iter()
            .filter(|s| s.point == point)
            .fold(CorootVector::zero(self.rank), |acc, s| {
                &acc + &s.root.to_vector(self.rank)
            })
    }

    pub fn total_dim(&self) -> u32 {
        self.summands.iter().map(|s| s.root.height()).sum()
    }

    /// Renames points through `f`.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Self {
        let summands = self
            .summands
            .iter()
            .map(|s| Summand::new(s.root, f(s.point)))
            .collect();
        Self::new(self.rank, summands).expect("relabelling keeps roots in range")
    }
}

impl fmt::Display for TorsionRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.summands.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "M[{},{}]@x{}", s.root.q, s.root.p, s.point)?;
        }
        Ok(())
    }
}

/// Subquotients from the bottom: `steps[0]` is `F_1`, the last is `T / F_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FiltrationType {
    steps: Vec<PositiveCoroot>,
}

impl FiltrationType {
    pub fn new(steps: Vec<PositiveCoroot>) -> Self {
        Self { steps }
    }

    /// A type made of simple coroots, e.g. `(i, i, j)`.
    pub fn simples(indices: &[usize]) -> Self {
        Self::new(indices.iter().map(|&i| PositiveCoroot::simple(i)).collect())
    }

    pub fn steps(&self) -> &[PositiveCoroot] {
        &self.steps
    }

    pub fn weight(&self, rank: usize) -> CorootVector {
        self.steps
            .iter()
            .fold(CorootVector::zero(rank), |acc, r| &acc + &r.to_vector(rank))
    }
}

impl fmt::Display for FiltrationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, r) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// The result of a filtration count, both symbolically and over two fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationCount {
    /// Count as a polynomial in the size of the ground field.
    pub symbolic: LaurentPoly,
    pub over_f2: u64,
    pub over_f3: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiltrationOutcome {
    Rigid(u64),
    NotRigid { over_f2: u64, over_f3: u64 },
}

impl FiltrationCount {
    pub fn outcome(&self) -> FiltrationOutcome {
        if self.over_f2 == self.over_f3 {
            FiltrationOutcome::Rigid(self.over_f2)
        } else {
            FiltrationOutcome::NotRigid {
                over_f2: self.over_f2,
                over_f3: self.over_f3,
            }
        }
    }

    pub fn rigid(&self) -> Result<u64> {
        match self.outcome() {
            FiltrationOutcome::Rigid(c) => Ok(c),
            FiltrationOutcome::NotRigid { over_f2, over_f3 } => {
                Err(Error::NotRigid { over_f2, over_f3 })
            }
        }
    }
}

/// Counts filtrations of `ty` on `rep` symbolically and over `F_2`, `F_3`.
pub fn count_filtrations(
    rep: &TorsionRep,
    ty: &FiltrationType,
    caps: &Caps,
) -> Result<FiltrationCount> {
    for r in ty.steps() {
        if r.q < 1 || r.q > r.p || r.p > rep.rank() {
            return Err(Error::InconsistentType(format!(
                "step {r} outside rank {}",
                rep.rank()
            )));
        }
    }
    let weight = ty.weight(rep.rank());
    if weight != rep.dimension() {
        return Err(Error::InconsistentType(format!(
            "type {ty} has weight {weight}, representation has dimension {}",
            rep.dimension()
        )));
    }
    let dim = rep.total_dim();
    if dim > caps.filtration_dim {
        return Err(Error::CapExceeded {
            what: "total dimension",
            value: dim as u64,
            cap: caps.filtration_dim as u64,
        });
    }
    let symbolic = symbolic::count(rep, ty);
    let over_f2 = finite_field::count(rep, ty, 2);
    let over_f3 = finite_field::count(rep, ty, 3);
    for (field, brute) in [(2u64, over_f2), (3, over_f3)] {
        let predicted = symbolic
            .eval_polynomial(&BigInt::from(field))
            .expect("field-size polynomials have no negative powers");
        if predicted != BigInt::from(brute) {
            return Err(Error::OracleDisagreement {
                field,
                symbolic: symbolic.to_q_string(),
                brute,
            });
        }
    }
    Ok(FiltrationCount {
        symbolic,
        over_f2,
        over_f3,
    })
}

/// `S_j @ x (+) S_i @ y (+) S_i @ z` with three distinct points.
pub fn generic_shape_iij(rank: usize, i: usize, j: usize) -> Result<TorsionRep> {
    TorsionRep::new(
        rank,
        vec![
            Summand::new(PositiveCoroot::simple(j), 0),
            Summand::new(PositiveCoroot::simple(i), 1),
            Summand::new(PositiveCoroot::simple(i), 2),
        ],
    )
}

/// `M_{i+j} @ x (+) S_i @ y`, `x != y`: the interval spanned by `i` and `j`
/// carries the non-zero arrow between them.
pub fn generic_shape_i_ij(rank: usize, i: usize, j: usize) -> Result<TorsionRep> {
    TorsionRep::new(
        rank,
        vec![
            Summand::new(PositiveCoroot::new(i.min(j), i.max(j)), 0),
            Summand::new(PositiveCoroot::simple(i), 1),
        ],
    )
}

/// `S_i @ x (+) S_j @ y`.
pub fn commuting_pair(rank: usize, i: usize, j: usize, same_point: bool) -> Result<TorsionRep> {
    TorsionRep::new(
        rank,
        vec![
            Summand::new(PositiveCoroot::simple(i), 0),
            Summand::new(PositiveCoroot::simple(j), if same_point { 0 } else { 1 }),
        ],
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SerreCheck {
    /// `N_(i,i,j)`, `N_(i,j,i)`, `N_(j,i,i)`.
    pub counts: [u64; 3],
    /// `N_(i,i,j) - 2 N_(i,j,i) + N_(j,i,i)`.
    pub alternating_sum: i64,
}

pub fn serre_alternating_sum(
    i: usize,
    j: usize,
    rep: &TorsionRep,
    caps: &Caps,
) -> Result<SerreCheck> {
    if i.abs_diff(j) != 1 {
        return Err(Error::InconsistentType(format!(
            "indices {i}, {j} are not adjacent"
        )));
    }
    let mut counts = [0u64; 3];
    for (slot, ty) in counts.iter_mut().zip([[i, i, j], [i, j, i], [j, i, i]]) {
        *slot = count_filtrations(rep, &FiltrationType::simples(&ty), caps)?.rigid()?;
    }
    let alternating_sum = counts[0] as i64 - 2 * counts[1] as i64 + counts[2] as i64;
    Ok(SerreCheck {
        counts,
        alternating_sum,
    })
}

/// `(N_(i,j), N_(j,i))` for `|i - j| > 1`.
pub fn commuting_counts(i: usize, j: usize, rep: &TorsionRep, caps: &Caps) -> Result<[u64; 2]> {
    if i.abs_diff(j) <= 1 {
        return Err(Error::InconsistentType(format!(
            "indices {i}, {j} are not far apart"
        )));
    }
    let ij = count_filtrations(rep, &FiltrationType::simples(&[i, j]), caps)?.rigid()?;
    let ji = count_filtrations(rep, &FiltrationType::simples(&[j, i]), caps)?.rigid()?;
    Ok([ij, ji])
}

fn check_order(rs: &RootSystem, order: &[PositiveCoroot]) -> Result<()> {
    let mut sorted = order.to_vec();
    sorted.sort();
    let mut canonical = rs.positive().to_vec();
    canonical.sort();
    if sorted != canonical {
        return Err(Error::InconsistentType(
            "coroot order is not a permutation of the positive coroots".into(),
        ));
    }
    Ok(())
}

/// The filtration type `(theta_1^{c_1}, ..., theta_nu^{c_nu})`.
pub fn pbw_type(order: &[PositiveCoroot], c: &[u32]) -> FiltrationType {
    FiltrationType::new(
        order
            .iter()
            .zip(c)
            .flat_map(|(r, &k)| std::iter::repeat_n(*r, k as usize))
            .collect(),
    )
}

/// `Gamma` with its parts placed at distinct points `0, 1, 2, ...`.
pub fn rep_at_distinct_points(gamma: &KostantPartition) -> TorsionRep {
    let summands = gamma
        .parts_expanded()
        .into_iter()
        .enumerate()
        .map(|(k, r)| Summand::new(r, k as u32))
        .collect();
    TorsionRep::new(gamma.rank(), summands).expect("partition parts are positive coroots")
}

/// Number of filtrations of type `(theta_1^{c_1}, ..., theta_nu^{c_nu})` on
/// `(+)_{gamma in Gamma} M_gamma (x) O_{x_gamma}` with distinct points.
pub fn pbw_multiplicity(
    rs: &RootSystem,
    order: &[PositiveCoroot],
    c: &[u32],
    gamma: &KostantPartition,
    caps: &Caps,
) -> Result<u64> {
    check_order(rs, order)?;
    if c.len() != order.len() {
        return Err(Error::DimensionMismatch {
            expected: order.len(),
            got: c.len(),
        });
    }
    let rep = rep_at_distinct_points(gamma);
    let count = count_filtrations(&rep, &pbw_type(order, c), caps)?;
    // distinct points never admit a family of filtrations
    count.rigid()
}

/// `prod c_k!` when `Gamma` is the multiset `{theta_k^{c_k}}`, else 0.
pub fn pbw_expected(order: &[PositiveCoroot], c: &[u32], gamma: &KostantPartition) -> u64 {
    let mut wanted: Vec<PositiveCoroot> = pbw_type(order, c).steps().to_vec();
    wanted.sort();
    let mut have = gamma.parts_expanded();
    have.sort();
    if wanted != have {
        return 0;
    }
    c.iter().map(|&k| (1..=k as u64).product::<u64>()).product()
}

/// `<i', alpha + 2rho>`, the scalar by which `[e_i, f_i]` acts in degree `alpha`.
pub fn commutator_constant(rs: &RootSystem, i: usize, alpha: &CorootVector) -> Result<i64> {
    rs.check_vector(alpha)?;
    rs.pairing(i, &(alpha + &rs.two_rho()))
}
