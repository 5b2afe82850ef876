//! Filtration counts as polynomials in the field size `q`.
//!
//! Peels quotients off the top. At one point, a surjection from
//! `(+) M_[a_r,b_r]` onto `M_[q,p]` only involves summands with
//! `q <= a_r <= p <= b_r`. Up to automorphisms it is given by an antichain
//! `T` of interval types under `(a, b) <= (a', b')` coordinatewise, and `T`
//! must contain the (unique) type starting at `q`. The number of kernels with
//! a given normal form is
//!
//! `[m_0]_q * prod_{T \ tau_0} (q^{m_tau} - 1) * prod_{up(T) \ T} q^{m_sigma}`
//!
//! and the kernel replaces one copy of each `[a_t, b_t]` in `T` (sorted by
//! `a`) with `[a_{t+1}, b_t]`, plus `[p+1, b_last]` when `p < b_last`.

use std::collections::{BTreeMap, HashMap};

use crate::charseries::LaurentPoly;
use crate::rootdata::PositiveCoroot;

use super::{FiltrationType, TorsionRep};

type Interval = (usize, usize);
/// Per point, a sorted multiset of intervals.
type State = BTreeMap<u32, Vec<Interval>>;

pub fn count(rep: &TorsionRep, ty: &FiltrationType) -> LaurentPoly {
    let mut state = State::new();
    for s in rep.summands() {
        state.entry(s.point).or_default().push((s.root.q, s.root.p));
    }
    for v in state.values_mut() {
        v.sort_unstable();
    }
    let mut memo = HashMap::new();
    count_rec(&state, ty.steps(), &mut memo)
}

fn count_rec(
    state: &State,
    steps: &[PositiveCoroot],
    memo: &mut HashMap<(State, usize), LaurentPoly>,
) -> LaurentPoly {
    let Some((last, rest)) = steps.split_last() else {
        return if state.values().all(Vec::is_empty) {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
    };
    let key = (state.clone(), steps.len());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut total = LaurentPoly::zero();
    for (&x, intervals) in state {
        for (weight, kernel) in quotients(intervals, last.q, last.p) {
            let mut next = state.clone();
            if kernel.is_empty() {
                next.remove(&x);
            } else {
                next.insert(x, kernel);
            }
            let sub = count_rec(&next, rest, memo);
            if !sub.is_zero() {
                total += &(&weight * &sub);
            }
        }
    }
    memo.insert(key, total.clone());
    total
}

fn dominated(s: Interval, t: Interval) -> bool {
    s.0 <= t.0 && s.1 <= t.1
}

fn q_number(m: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..m as i64).map(|e| (e, 1)))
}

/// All kernels of surjections `intervals -> M_[q,p]`, with their multiplicities.
fn quotients(intervals: &[Interval], q: usize, p: usize) -> Vec<(LaurentPoly, Vec<Interval>)> {
    let mut mult: BTreeMap<Interval, usize> = BTreeMap::new();
    for &iv in intervals {
        if q <= iv.0 && iv.0 <= p && p <= iv.1 {
            *mult.entry(iv).or_default() += 1;
        }
    }
    let kinds: Vec<(Interval, usize)> = mult.into_iter().collect();
    let mut out = Vec::new();
    // antichains are small here; enumerate subsets directly
    for mask in 1u32..(1 << kinds.len()) {
        let chosen: Vec<usize> = (0..kinds.len()).filter(|k| mask >> k & 1 == 1).collect();
        let antichain = chosen.iter().all(|&s| {
            chosen
                .iter()
                .all(|&t| s == t || !dominated(kinds[s].0, kinds[t].0))
        });
        if !antichain || !chosen.iter().any(|&k| kinds[k].0 .0 == q) {
            continue;
        }
        let mut weight = LaurentPoly::one();
        for (k, &(iv, m)) in kinds.iter().enumerate() {
            let factor = if chosen.contains(&k) {
                if iv.0 == q {
                    q_number(m)
                } else {
                    LaurentPoly::from_terms([(m as i64, 1), (0, -1)])
                }
            } else if chosen.iter().any(|&t| dominated(kinds[t].0, iv)) {
                LaurentPoly::monomial(1, m as i64)
            } else {
                continue;
            };
            weight = &weight * &factor;
        }

        let mut tops: Vec<Interval> = chosen.iter().map(|&k| kinds[k].0).collect();
        tops.sort_unstable();
        let mut kernel = intervals.to_vec();
        for t in &tops {
            let pos = kernel
                .iter()
                .position(|iv| iv == t)
                .expect("chosen interval is present");
            kernel.remove(pos);
        }
        for w in tops.windows(2) {
            kernel.push((w[1].0, w[0].1));
        }
        let last = tops.last().expect("antichain is non-empty");
        if p < last.1 {
            kernel.push((p + 1, last.1));
        }
        kernel.sort_unstable();
        out.push((weight, kernel));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotients_of_semisimple_pair() {
        // S_1 + S_1 onto S_1: q + 1 kernels, each S_1
        let got = quotients(&[(1, 1), (1, 1)], 1, 1);
        assert_eq!(
            got,
            vec![(LaurentPoly::from_terms([(0, 1), (1, 1)]), vec![(1, 1)])]
        );
    }

    #[test]
    fn quotients_of_interval_plus_simple() {
        // M[1,2] + S_1 onto S_1: q lines in vertex 1 give a kernel isomorphic
        // to M[1,2]; the line of the S_1 summand leaves S_1 + S_2
        let mut got = quotients(&[(1, 1), (1, 2)], 1, 1);
        got.sort_by(|a, b| a.1.cmp(&b.1));
        assert_eq!(
            got,
            vec![
                (LaurentPoly::one(), vec![(1, 1), (2, 2)]),
                (LaurentPoly::monomial(1, 1), vec![(1, 2)]),
            ]
        );
    }

    #[test]
    fn quotient_of_wrong_top_is_empty() {
        assert!(quotients(&[(2, 3)], 1, 1).is_empty());
        assert!(quotients(&[(1, 1)], 1, 2).is_empty());
    }
}
