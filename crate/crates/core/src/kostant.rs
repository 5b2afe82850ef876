//! Kostant partitions: enumeration, counting, the collections `mu(kappa)`
//! and `d(kappa)`, and the Lusztig-Kostant polynomial.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::Serialize;

use crate::charseries::LaurentPoly;
use crate::error::{Error, Result};
use crate::rootdata::{CorootVector, PositiveCoroot, RootSystem};
use crate::Caps;

/// Lower-triangular array `(x_{p,q})_{1 <= q <= p <= m}`.
///
/// Entries are stored in the canonical positive-coroot order (lexicographic
/// in `(q, p)`), so the derived ordering is lexicographic in that order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriMatrix {
    size: usize,
    data: Vec<u32>,
}

impl TriMatrix {
    pub fn zero(size: usize) -> Self {
        Self {
            size,
            data: vec![0; size * (size + 1) / 2],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn offset(&self, p: usize, q: usize) -> usize {
        assert!(
            1 <= q && q <= p && p <= self.size,
            "({p},{q}) outside triangle"
        );
        let before: usize = (1..q).map(|r| self.size - r + 1).sum();
        before + p - q
    }

    pub fn get(&self, p: usize, q: usize) -> u32 {
        self.data[self.offset(p, q)]
    }

    pub fn set(&mut self, p: usize, q: usize, value: u32) {
        let k = self.offset(p, q);
        self.data[k] = value;
    }

    /// Entries in canonical `(q, p)` order.
    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    /// Entries pointwise `<=`.
    pub fn le(&self, other: &Self) -> bool {
        self.size == other.size && self.data.iter().zip(&other.data).all(|(a, b)| a <= b)
    }

    /// Row `p` is `[x_{p,1}, ..., x_{p,p}]`.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        (1..=self.size)
            .map(|p| (1..=p).map(|q| self.get(p, q)).collect())
            .collect()
    }
}

impl Serialize for TriMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// A multiset of positive coroots, `kappa_{p,q}` = multiplicity of `i_q + ... + i_p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KostantPartition {
    kappa: TriMatrix,
}

/// `mu_{p,q} = sum_{r <= q <= p <= s} kappa_{s,r}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MuCollection(pub TriMatrix);

/// `d_{p,q} = sum_{r=p}^{n-1} kappa_{r,q}`, the exponents of the torus-fixed quasiflag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FixedPointExponents(pub TriMatrix);

impl KostantPartition {
    pub fn empty(rank: usize) -> Self {
        Self {
            kappa: TriMatrix::zero(rank),
        }
    }

    /// Builds a partition from a list of parts (repetitions allowed).
    pub fn from_parts(rank: usize, parts: &[PositiveCoroot]) -> Self {
        let mut k = Self::empty(rank);
        for r in parts {
            let m = k.kappa.get(r.p, r.q);
            k.kappa.set(r.p, r.q, m + 1);
        }
        k
    }

    /// Builds a partition from multiplicities listed in canonical order.
    pub fn from_multiplicities(rank: usize, mult: Vec<u32>) -> Option<Self> {
        (mult.len() == rank * (rank + 1) / 2).then_some(Self {
            kappa: TriMatrix {
                size: rank,
                data: mult,
            },
        })
    }

    pub fn rank(&self) -> usize {
        self.kappa.size
    }

    pub fn matrix(&self) -> &TriMatrix {
        &self.kappa
    }

    /// `kappa_{p,q}`.
    pub fn get(&self, p: usize, q: usize) -> u32 {
        self.kappa.get(p, q)
    }

    /// Nonzero `(coroot, multiplicity)` pairs in canonical order.
    pub fn parts(&self) -> Vec<(PositiveCoroot, u32)> {
        let m = self.rank();
        (1..=m)
            .flat_map(|q| (q..=m).map(move |p| PositiveCoroot::new(q, p)))
            .map(|r| (r, self.get(r.p, r.q)))
            .filter(|(_, k)| *k > 0)
            .collect()
    }

    /// Parts with repetition, in canonical order.
    pub fn parts_expanded(&self) -> Vec<PositiveCoroot> {
        self.parts()
            .into_iter()
            .flat_map(|(r, k)| std::iter::repeat_n(r, k as usize))
            .collect()
    }

    /// `|kappa|`.
    pub fn weight(&self) -> CorootVector {
        let m = self.rank();
        let mut w = vec![0u32; m];
        for (r, k) in self.parts() {
            for slot in &mut w[r.q - 1..r.p] {
                *slot += k;
            }
        }
        CorootVector::new(w)
    }

    /// `||kappa|| = | |kappa| |`.
    pub fn norm(&self) -> u32 {
        self.parts().iter().map(|(r, k)| r.height() * k).sum()
    }

    /// `K(kappa)`, the number of summands.
    pub fn num_parts(&self) -> u32 {
        self.kappa.data.iter().sum()
    }

    /// `(|kappa|, ||kappa||, K(kappa))`.
    pub fn stats(&self) -> (CorootVector, u32, u32) {
        (self.weight(), self.norm(), self.num_parts())
    }

    pub fn mu(&self) -> MuCollection {
        let m = self.rank();
        let mut mu = TriMatrix::zero(m);
        for p in 1..=m {
            for q in 1..=p {
                let mut acc = 0;
                for s in p..=m {
                    for r in 1..=q {
                        acc += self.get(s, r);
                    }
                }
                mu.set(p, q, acc);
            }
        }
        MuCollection(mu)
    }

    pub fn fixed_point_d(&self) -> FixedPointExponents {
        let m = self.rank();
        let mut d = TriMatrix::zero(m);
        for p in 1..=m {
            for q in 1..=p {
                d.set(p, q, (p..=m).map(|r| self.get(r, q)).sum());
            }
        }
        FixedPointExponents(d)
    }
}

impl fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.parts_expanded();
        if parts.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (k, r) in parts.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

// Wire format: [{"coroot":[q,p],"mult":m}, ...] over the nonzero multiplicities.
impl Serialize for KostantPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Part(PositiveCoroot, u32);
        impl Serialize for Part {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("coroot", &[self.0.q, self.0.p])?;
                map.serialize_entry("mult", &self.1)?;
                map.end()
            }
        }
        let parts = self.parts();
        let mut seq = s.serialize_seq(Some(parts.len()))?;
        for (r, k) in parts {
            seq.serialize_element(&Part(r, k))?;
        }
        seq.end()
    }
}

fn check_weight_cap(gamma: &CorootVector, caps: &Caps) -> Result<()> {
    if gamma.norm() > caps.kostant_weight {
        return Err(Error::CapExceeded {
            what: "|gamma|",
            value: gamma.norm() as u64,
            cap: caps.kostant_weight as u64,
        });
    }
    Ok(())
}

/// All Kostant partitions of `gamma`, lexicographic in the `kappa` matrix.
pub fn enumerate_kostant(
    rs: &RootSystem,
    gamma: &CorootVector,
    caps: &Caps,
) -> Result<Vec<KostantPartition>> {
    rs.check_vector(gamma)?;
    check_weight_cap(gamma, caps)?;
    let expected = KostantCounter::new(rs).count(gamma);
    let mut out = Vec::with_capacity(expected.to_usize().unwrap_or(0));
    let mut remaining = gamma.coords().to_vec();
    let mut mult = vec![0u32; rs.positive().len()];
    descend(rs.positive(), 0, &mut remaining, &mut mult, &mut out);
    debug_assert_eq!(BigUint::from(out.len()), expected);
    Ok(out)
}

// Coroots are visited in canonical order, so all coroots starting at vertex q
// are consecutive; when the last of them is placed, vertex q must be exhausted.
fn descend(
    roots: &[PositiveCoroot],
    k: usize,
    remaining: &mut [u32],
    mult: &mut [u32],
    out: &mut Vec<KostantPartition>,
) {
    if k == roots.len() {
        if remaining.iter().all(|&r| r == 0) {
            let rank = remaining.len();
            out.push(KostantPartition {
                kappa: TriMatrix {
                    size: rank,
                    data: mult.to_vec(),
                },
            });
        }
        return;
    }
    let r = roots[k];
    let span = r.q - 1..r.p;
    let max = remaining[span.clone()].iter().copied().min().unwrap_or(0);
    let last_from_q = k + 1 == roots.len() || roots[k + 1].q != r.q;
    let range = if last_from_q {
        // forced: this coroot must absorb what is left at vertex q
        let need = remaining[r.q - 1];
        if need > max {
            return;
        }
        need..=need
    } else {
        0..=max
    };
    for m in range {
        for slot in &mut remaining[span.clone()] {
            *slot -= m;
        }
        mult[k] = m;
        descend(roots, k + 1, remaining, mult, out);
        mult[k] = 0;
        for slot in &mut remaining[span.clone()] {
            *slot += m;
        }
    }
}

/// Counts Kostant partitions by coin-change convolution over the coroot list,
/// memoized by weight.
#[derive(Debug, Clone)]
pub struct KostantCounter {
    roots: Vec<CorootVector>,
    cache: HashMap<CorootVector, BigUint>,
}

impl KostantCounter {
    pub fn new(rs: &RootSystem) -> Self {
        Self {
            roots: rs.positive_vectors(),
            cache: HashMap::new(),
        }
    }

    /// `#K(gamma)`.
    pub fn count(&mut self, gamma: &CorootVector) -> BigUint {
        if let Some(c) = self.cache.get(gamma) {
            return c.clone();
        }
        let by_parts = count_by_parts_table(&self.roots, gamma);
        // every sub-weight was filled in by the same table
        for (beta, counts) in by_parts {
            let total: BigUint = counts.iter().sum();
            self.cache.entry(beta).or_insert(total);
        }
        self.cache[gamma].clone()
    }

    /// `c[K]` = number of Kostant partitions of `gamma` with exactly `K` parts.
    pub fn count_by_parts(&self, gamma: &CorootVector) -> Vec<BigUint> {
        count_by_parts_table(&self.roots, gamma)
            .into_iter()
            .find(|(b, _)| b == gamma)
            .map(|(_, c)| c)
            .unwrap_or_default()
    }
}

// Unbounded knapsack over every beta <= gamma, with a polynomial marker for
// the number of parts. Returns (beta, counts-by-parts) for all beta.
fn count_by_parts_table(
    roots: &[CorootVector],
    gamma: &CorootVector,
) -> Vec<(CorootVector, Vec<BigUint>)> {
    let dims: Vec<usize> = gamma.coords().iter().map(|&a| a as usize + 1).collect();
    let mut strides = vec![1usize; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * dims[k + 1];
    }
    let states = gamma.dominated();
    let mut dp: Vec<Vec<BigUint>> = vec![Vec::new(); states.len()];
    dp[0] = vec![BigUint::from(1u32)];
    for theta in roots {
        if !theta.le(gamma) {
            continue;
        }
        let jump: usize = theta
            .coords()
            .iter()
            .zip(&strides)
            .map(|(&t, &s)| t as usize * s)
            .sum();
        for idx in 0..states.len() {
            if !theta.le(&states[idx]) {
                continue;
            }
            let prev = dp[idx - jump].clone();
            let cur = &mut dp[idx];
            if cur.len() < prev.len() + 1 {
                cur.resize(prev.len() + 1, BigUint::zero());
            }
            for (k, c) in prev.into_iter().enumerate() {
                cur[k + 1] += c;
            }
        }
    }
    states.into_iter().zip(dp).collect()
}

/// `#K(gamma)` via the convolution table.
pub fn kostant_count(rs: &RootSystem, gamma: &CorootVector) -> Result<BigUint> {
    rs.check_vector(gamma)?;
    Ok(KostantCounter::new(rs).count(gamma))
}

/// `K_alpha(t) = t^{|alpha|} sum_{kappa in K(alpha)} t^{-K(kappa)}`, by enumeration.
pub fn lusztig_kostant_poly(
    rs: &RootSystem,
    alpha: &CorootVector,
    caps: &Caps,
) -> Result<LaurentPoly> {
    let norm = alpha.norm() as i64;
    let mut poly = LaurentPoly::zero();
    for kappa in enumerate_kostant(rs, alpha, caps)? {
        poly += &LaurentPoly::t_power(norm - kappa.num_parts() as i64);
    }
    Ok(poly)
}

/// The same polynomial assembled from counts by number of parts.
pub fn lusztig_kostant_poly_from_counts(
    counter: &KostantCounter,
    alpha: &CorootVector,
) -> LaurentPoly {
    let norm = alpha.norm() as i64;
    let mut poly = LaurentPoly::zero();
    for (parts, c) in counter.count_by_parts(alpha).into_iter().enumerate() {
        poly.add_term(2 * (norm - parts as i64), c.into());
    }
    poly
}
