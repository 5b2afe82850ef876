//! Type `A_{n-1}` root data: simple and positive coroots, `2rho`, the
//! Cartan pairing and the symmetric group with its length function.
//!
//! Simple coroots are indexed `1..=n-1`. The positive coroot
//! `i_q + i_{q+1} + ... + i_p` is written `(q, p)` with `1 <= q <= p <= n-1`;
//! the canonical order on positive coroots is lexicographic in `(q, p)`.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::charseries::LaurentPoly;
use crate::error::{Error, Result};

/// Default bound on `n` for anything that walks the whole symmetric group.
pub const DEFAULT_WEYL_CAP: usize = 8;

/// An element of `N[I]`, stored densely as its `n-1` coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CorootVector(Vec<u32>);

impl CorootVector {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// The simple coroot `i_index` (1-based).
    pub fn simple(len: usize, index: usize) -> Self {
        let mut v = vec![0; len];
        v[index - 1] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|alpha|`, the sum of the coordinates.
    pub fn norm(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Coordinate `i` (1-based); out-of-range neighbours read as zero.
    pub fn coord(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Coordinatewise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn scaled(&self, k: u32) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    /// Every `gamma` with `0 <= gamma <= self` coordinatewise, in lexicographic order.
    pub fn dominated(&self) -> Vec<CorootVector> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.0.len()];
        loop {
            out.push(Self(cur.clone()));
            // odometer increment, last coordinate fastest
            let mut k = self.0.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < self.0[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    /// Every vector of length `len` with `|alpha| <= bound`, in lexicographic order.
    pub fn all_up_to_norm(len: usize, bound: u32) -> Vec<CorootVector> {
        fn rec(len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<CorootVector>) {
            if cur.len() == len {
                out.push(CorootVector(cur.clone()));
                return;
            }
            for a in 0..=left {
                cur.push(a);
                rec(len, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(len, bound, &mut Vec::with_capacity(len), &mut out);
        out
    }
}

impl Add for &CorootVector {
    type Output = CorootVector;

    fn add(self, rhs: &CorootVector) -> CorootVector {
        assert_eq!(
            self.0.len(),
            rhs.0.len(),
            "coroot vectors of different rank"
        );
        CorootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for CorootVector {
    type Output = CorootVector;

    fn add(self, rhs: CorootVector) -> CorootVector {
        &self + &rhs
    }
}

impl fmt::Display for CorootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// The positive coroot `i_q + ... + i_p`, equivalently the interval `[q, p]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PositiveCoroot {
    pub q: usize,
    pub p: usize,
}

impl PositiveCoroot {
    pub fn new(q: usize, p: usize) -> Self {
        debug_assert!(1 <= q && q <= p);
        Self { q, p }
    }

    pub fn simple(i: usize) -> Self {
        Self { q: i, p: i }
    }

    /// Height `p - q + 1`.
    pub fn height(&self) -> u32 {
        (self.p - self.q + 1) as u32
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.q <= vertex && vertex <= self.p
    }

    pub fn to_vector(&self, len: usize) -> CorootVector {
        let mut v = vec![0; len];
        for slot in &mut v[self.q - 1..self.p] {
            *slot = 1;
        }
        CorootVector(v)
    }
}

impl fmt::Display for PositiveCoroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == self.p {
            write!(f, "i{}", self.q)
        } else {
            write!(f, "i{}..i{}", self.q, self.p)
        }
    }
}

/// Root data of `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    n: usize,
    roots: Vec<PositiveCoroot>,
}

impl RootSystem {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        let m = n - 1;
        let roots = (1..=m)
            .flat_map(|q| (q..=m).map(move |p| PositiveCoroot { q, p }))
            .collect();
        Ok(Self { n, roots })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of simple coroots, `n - 1`.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// Positive coroots in canonical order.
    pub fn positive(&self) -> &[PositiveCoroot] {
        &self.roots
    }

    /// Position of `(q, p)` in the canonical order.
    pub fn index_of(&self, root: PositiveCoroot) -> Option<usize> {
        let m = self.rank();
        if root.q < 1 || root.q > root.p || root.p > m {
            return None;
        }
        let before: usize = (1..root.q).map(|q| m - q + 1).sum();
        Some(before + root.p - root.q)
    }

    pub fn positive_vectors(&self) -> Vec<CorootVector> {
        self.roots
            .iter()
            .map(|r| r.to_vector(self.rank()))
            .collect()
    }

    pub fn two_rho(&self) -> CorootVector {
        self.positive_vectors()
            .iter()
            .fold(CorootVector::zero(self.rank()), |acc, v| &acc + v)
    }

    /// `dim B = n(n-1)/2`, the dimension of the flag variety.
    pub fn dim_flag(&self) -> u32 {
        (self.n * (self.n - 1) / 2) as u32
    }

    pub fn check_vector(&self, v: &CorootVector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `<i', beta>`: the simple root dual to `i` paired with `beta`.
    pub fn pairing(&self, i: usize, beta: &CorootVector) -> Result<i64> {
        self.check_vector(beta)?;
        pairing(i, beta)
    }
}

pub fn positive_coroots(n: usize) -> Result<Vec<CorootVector>> {
    Ok(RootSystem::new(n)?.positive_vectors())
}

pub fn two_rho(n: usize) -> Result<CorootVector> {
    Ok(RootSystem::new(n)?.two_rho())
}

/// Cartan pairing `<i', beta> = 2 b_i - b_{i-1} - b_{i+1}`.
pub fn pairing(i: usize, beta: &CorootVector) -> Result<i64> {
    if i == 0 || i > beta.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: beta.len(),
        });
    }
    Ok(2 * beta.coord(i) as i64 - beta.coord(i - 1) as i64 - beta.coord(i + 1) as i64)
}

/// A permutation of `{1..n}` together with its number of inversions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    perm: Vec<usize>,
    length: usize,
}

impl WeylElement {
    /// Builds an element from a one-line permutation of `1..=n`.
    pub fn from_perm(perm: Vec<usize>) -> Option<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &v in &perm {
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        let length = inversions(&perm);
        Some(Self { perm, length })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            perm: (1..=n).collect(),
            length: 0,
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn length(&self) -> usize {
        self.length
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.perm {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn inversions(perm: &[usize]) -> usize {
    let mut inv = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inv += 1;
            }
        }
    }
    inv
}

// Narayana's next-permutation step; false once the last permutation is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All `n!` elements of `S_n` in lexicographic order of their one-line notation.
pub fn weyl_elements(n: usize, cap: usize) -> Result<Vec<WeylElement>> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "n",
            value: n as u64,
            cap: cap as u64,
        });
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(WeylElement {
            length: inversions(&perm),
            perm: perm.clone(),
        });
        if !next_permutation(&mut perm) {
            return Ok(out);
        }
    }
}

/// `sum_{w in S_n} t^{l(w)}` by walking the group.
pub fn weyl_poincare_enumerated(n: usize, cap: usize) -> Result<LaurentPoly> {
    let mut poly = LaurentPoly::zero();
    for w in weyl_elements(n, cap)? {
        poly += &LaurentPoly::t_power(w.length() as i64);
    }
    Ok(poly)
}

/// `prod_{k=1}^{n} (1 + t + ... + t^{k-1})`.
pub fn weyl_poincare_product(n: usize) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| {
        let factor = (0..k as i64).fold(LaurentPoly::zero(), |s, e| s + LaurentPoly::t_power(e));
        &acc * &factor
    })
}

/// Poincare polynomial `W_n(t)` of the flag variety, as a polynomial in `t = q^2`.
pub fn weyl_poincare(n: usize) -> LaurentPoly {
    let poly = weyl_poincare_product(n);
    if n <= DEFAULT_WEYL_CAP {
        debug_assert_eq!(
            Some(&poly),
            weyl_poincare_enumerated(n, DEFAULT_WEYL_CAP).ok().as_ref()
        );
    }
    poly
}
