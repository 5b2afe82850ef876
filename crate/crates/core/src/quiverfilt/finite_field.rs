//! Exhaustive filtration counts over a small prime field.
//!
//! Each point carries its own copy of the quiver representation with the
//! standard interval bases. A subrepresentation is a family of subspaces
//! `S_{v,x}`, stored in reduced row echelon form. The last step `M_[q,p]` at
//! `x` cuts each `S_{v,x}`, `q <= v <= p`, down to a hyperplane, subject to
//! arrow closure and non-vanishing of the induced arrows on the quotient.

use std::collections::HashMap;

use super::{FiltrationType, TorsionRep};
use crate::rootdata::PositiveCoroot;

type Vector = Vec<u8>;
/// Rows of a reduced echelon basis.
type Subspace = Vec<Vector>;

struct Ambient {
    prime: u8,
    rank: usize,
    points: usize,
    /// `dims[x][v]` for `v` in `1..=rank` (index 0 unused).
    dims: Vec<Vec<usize>>,
    /// `arrows[x][v]` maps `v -> v + 1` as a list of images of basis vectors.
    arrows: Vec<Vec<Vec<Vector>>>,
}

impl Ambient {
    fn new(rep: &TorsionRep, prime: u8) -> Self {
        let rank = rep.rank();
        let points = rep.points();
        let mut dims = Vec::new();
        let mut arrows = Vec::new();
        for &x in &points {
            let local: Vec<PositiveCoroot> = rep
                .summands()
                .iter()
                .filter(|s| s.point == x)
                .map(|s| s.root)
                .collect();
            // basis index of summand r at vertex v
            let index = |v: usize| -> Vec<Option<usize>> {
                let mut k = 0;
                local
                    .iter()
                    .map(|r| {
                        r.contains(v).then(|| {
                            k += 1;
                            k - 1
                        })
                    })
                    .collect()
            };
            let mut d = vec![0; rank + 1];
            for (v, slot) in d.iter_mut().enumerate().skip(1) {
                *slot = local.iter().filter(|r| r.contains(v)).count();
            }
            let mut a = vec![Vec::new(); rank + 1];
            for v in 1..rank {
                let from = index(v);
                let to = index(v + 1);
                let mut images = Vec::new();
                for (r, idx) in from.iter().enumerate() {
                    if idx.is_some() {
                        let mut img = vec![0u8; d[v + 1]];
                        if let Some(t) = to[r] {
                            img[t] = 1;
                        }
                        images.push(img);
                    }
                }
                a[v] = images;
            }
            dims.push(d);
            arrows.push(a);
        }
        Self {
            prime,
            rank,
            points: points.len(),
            dims,
            arrows,
        }
    }

    fn slot(&self, x: usize, v: usize) -> usize {
        x * self.rank + (v - 1)
    }

    fn full(&self) -> Vec<Subspace> {
        let mut out = Vec::with_capacity(self.points * self.rank);
        for x in 0..self.points {
            for v in 1..=self.rank {
                let d = self.dims[x][v];
                out.push(
                    (0..d)
                        .map(|k| {
                            let mut e = vec![0u8; d];
                            e[k] = 1;
                            e
                        })
                        .collect(),
                );
            }
        }
        out
    }

    fn apply(&self, x: usize, v: usize, w: &[u8]) -> Vector {
        let p = self.prime as u32;
        let mut out = vec![0u8; self.dims[x][v + 1]];
        for (c, img) in w.iter().zip(&self.arrows[x][v]) {
            if *c == 0 {
                continue;
            }
            for (o, b) in out.iter_mut().zip(img) {
                *o = ((*o as u32 + *c as u32 * *b as u32) % p) as u8;
            }
        }
        out
    }
}

fn inverse(a: u8, p: u8) -> u8 {
    (1..p)
        .find(|b| (a as u32 * *b as u32) % p as u32 == 1)
        .expect("field element is invertible")
}

fn rref(mut rows: Vec<Vector>, p: u8) -> Subspace {
    let pp = p as u32;
    let width = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = inverse(rows[pivot_row][col], p) as u32;
        for e in rows[pivot_row].iter_mut() {
            *e = ((*e as u32 * inv) % pp) as u8;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && row[col] != 0 {
                let f = row[col] as u32;
                for (e, b) in row.iter_mut().zip(&pivot) {
                    *e = ((*e as u32 + pp * pp - f * *b as u32) % pp) as u8;
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

fn contains(space: &Subspace, w: &[u8], p: u8) -> bool {
    if w.iter().all(|&c| c == 0) {
        return true;
    }
    let mut rows = space.clone();
    rows.push(w.to_vec());
    rref(rows, p).len() == space.len()
}

/// Coordinates of `sum c_k basis_k`.
fn combine(basis: &Subspace, coeffs: &[u8], p: u8) -> Vector {
    let width = basis.first().map_or(0, Vec::len);
    let mut out = vec![0u8; width];
    for (c, b) in coeffs.iter().zip(basis) {
        for (o, e) in out.iter_mut().zip(b) {
            *o = ((*o as u32 + *c as u32 * *e as u32) % p as u32) as u8;
        }
    }
    out
}

/// Every hyperplane of `space`, in its ambient coordinates.
fn hyperplanes(space: &Subspace, p: u8) -> Vec<Subspace> {
    let d = space.len();
    let mut out = Vec::new();
    // functionals on the coefficient space, normalised to a leading 1
    let total = (p as usize).pow(d as u32);
    for code in 1..total {
        let mut lambda = vec![0u8; d];
        let mut c = code;
        for l in lambda.iter_mut() {
            *l = (c % p as usize) as u8;
            c /= p as usize;
        }
        let lead = lambda
            .iter()
            .position(|&l| l != 0)
            .expect("code is non-zero");
        if lambda[lead] != 1 {
            continue;
        }
        let mut kernel = Vec::new();
        for i in (0..d).filter(|&i| i != lead) {
            let mut coeffs = vec![0u8; d];
            coeffs[i] = 1;
            coeffs[lead] = (p - lambda[i]) % p;
            kernel.push(combine(space, &coeffs, p));
        }
        out.push(rref(kernel, p));
    }
    out
}

struct Counter<'a> {
    amb: Ambient,
    steps: &'a [PositiveCoroot],
    memo: HashMap<(Vec<Subspace>, usize), u64>,
}

impl Counter<'_> {
    fn run(&mut self, state: Vec<Subspace>, k: usize) -> u64 {
        if k == 0 {
            return u64::from(state.iter().all(Vec::is_empty));
        }
        let key = (state, k);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let state = key.0.clone();
        let step = self.steps[k - 1];
        let mut total = 0;
        for x in 0..self.amb.points {
            for sub in self.subs_at(&state, x, step) {
                total += self.run(sub, k - 1);
            }
        }
        self.memo.insert(key, total);
        total
    }

    /// Subrepresentations of `state` with quotient `M_step` supported at `x`.
    fn subs_at(&self, state: &[Subspace], x: usize, step: PositiveCoroot) -> Vec<Vec<Subspace>> {
        let p = self.amb.prime;
        let vertices: Vec<usize> = (step.q..=step.p).collect();
        if vertices
            .iter()
            .any(|&v| state[self.amb.slot(x, v)].is_empty())
        {
            return Vec::new();
        }
        let choices: Vec<Vec<Subspace>> = vertices
            .iter()
            .map(|&v| hyperplanes(&state[self.amb.slot(x, v)], p))
            .collect();
        let mut out = Vec::new();
        let mut pick = vec![0usize; vertices.len()];
        loop {
            let mut next = state.to_vec();
            for (i, &v) in vertices.iter().enumerate() {
                next[self.amb.slot(x, v)] = choices[i][pick[i]].clone();
            }
            if self.valid(state, &next, x, step) {
                out.push(next);
            }
            // odometer over the product of hyperplane choices
            let mut i = 0;
            while i < pick.len() {
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == pick.len() {
                break;
            }
        }
        out
    }

    fn valid(&self, old: &[Subspace], new: &[Subspace], x: usize, step: PositiveCoroot) -> bool {
        let p = self.amb.prime;
        let slot = |v| self.amb.slot(x, v);
        for v in 1..self.amb.rank {
            for w in &new[slot(v)] {
                if !contains(&new[slot(v + 1)], &self.amb.apply(x, v, w), p) {
                    return false;
                }
            }
        }
        for v in step.q..step.p {
            let outside = old[slot(v)]
                .iter()
                .find(|w| !contains(&new[slot(v)], w, p))
                .expect("hyperplane misses some basis vector");
            if contains(&new[slot(v + 1)], &self.amb.apply(x, v, outside), p) {
                return false;
            }
        }
        true
    }
}

/// Number of filtrations of type `ty` on `rep` over `F_prime`.
pub fn count(rep: &TorsionRep, ty: &FiltrationType, prime: u8) -> u64 {
    let amb = Ambient::new(rep, prime);
    let full = amb.full();
    let mut counter = Counter {
        amb,
        steps: ty.steps(),
        memo: HashMap::new(),
    };
    counter.run(full, ty.steps().len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperplane_counts() {
        let plane: Subspace = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(hyperplanes(&plane, 2).len(), 3);
        assert_eq!(hyperplanes(&plane, 3).len(), 4);
        let space: Subspace = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(hyperplanes(&space, 3).len(), 13);
        let line: Subspace = vec![vec![1, 1]];
        assert_eq!(hyperplanes(&line, 3), vec![Vec::<Vector>::new()]);
    }

    #[test]
    fn rref_normalises() {
        assert_eq!(rref(vec![vec![2, 1], vec![1, 2]], 3), vec![vec![1, 2]]);
        assert_eq!(
            rref(vec![vec![0, 1], vec![1, 1]], 2),
            vec![vec![1, 0], vec![0, 1]]
        );
        assert!(contains(&vec![vec![1, 2]], &[2, 1], 3));
        assert!(!contains(&vec![vec![1, 2]], &[1, 1], 3));
    }
}
