//! Trace reduction: express `tr(w)` for any word as a polynomial in the
//! canonical coordinates `t[i]`, `t[i,j]`, `t[i,j,k]`.
//!
//! The rewriting works on conjugacy classes up to inversion. Each class is
//! given a single representative, and the rules below are applied to it in a
//! fixed order, so the output depends only on the class:
//!
//! 1. `tr(1) = 2`.
//! 2. Inverse letters: `tr(u a⁻¹) = tr(a) tr(u) − tr(u a)`.
//! 3. Adjacent squares: `tr(a a v) = tr(a) tr(a v) − tr(v)`.
//! 4. Other repeated letters: `tr(a u a v) = tr(a u) tr(a v) − tr(u v⁻¹)`,
//!    splitting at the earliest letter that recurs.
//! 5. Out-of-order letters: `tr(b a z) = tr(a) tr(b z) + tr(b) tr(a z)
//!    + tr(z) tr(a b) − tr(a) tr(b) tr(z) − tr(a b z)`.
//! 6. Increasing words of length four or more, `A b c d` with `A` the
//!    leading block, use the four-matrix trace identity, whose terms are all
//!    traces of proper subsequences.
//!
//! Every right-hand trace is shorter, or has the same length with fewer
//! inverse letters, or is positive with fewer out-of-order pairs.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::poly::{rat, Rational, TracePoly, TraceVar};
use crate::word::{CyclicWord, Letter, Word};

/// Memoizing trace reducer. Safe to share between threads.
#[derive(Debug, Default)]
pub struct TraceReducer {
    memo: RwLock<HashMap<Word, TracePoly>>,
}

/// Reduces with the process-wide memo table.
pub fn reduce_trace(w: &Word) -> Result<TracePoly> {
    static GLOBAL: OnceLock<TraceReducer> = OnceLock::new();
    GLOBAL.get_or_init(TraceReducer::new).reduce(w)
}

/// Like [`reduce_trace`] but rejects generators beyond `rank`.
pub fn reduce_trace_in(w: &Word, rank: usize) -> Result<TracePoly> {
    w.check_rank(rank)?;
    reduce_trace(w)
}

impl TraceReducer {
    pub fn new() -> Self {
        TraceReducer::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn reduce(&self, w: &Word) -> Result<TracePoly> {
        let bound = 4u64.checked_pow(w.len().max(2) as u32).unwrap_or(u64::MAX);
        let mut steps = 0u64;
        let out = self.trace(w, &mut steps, bound);
        if steps > bound {
            return Err(Error::StepBound { word: w.to_string(), bound });
        }
        Ok(out)
    }

    fn trace(&self, w: &Word, steps: &mut u64, bound: u64) -> TracePoly {
        let key = class_key(w);
        if let Some(p) = self.memo.read().unwrap().get(&key) {
            return p.clone();
        }
        *steps += 1;
        if *steps > bound {
            // the caller reports the overflow; unwind without further work
            return TracePoly::zero();
        }
        let p = self.rewrite(&key, steps, bound);
        self.memo.write().unwrap().insert(key, p.clone());
        p
    }

    fn rewrite(&self, r: &Word, steps: &mut u64, bound: u64) -> TracePoly {
        let mut tr = |w: &Word| self.trace(w, steps, bound);
        let letters = r.letters();
        let n = letters.len();
        if n == 0 {
            return TracePoly::int(2);
        }

        // inverse letters
        if let Some(p) = letters.iter().position(|l| l.is_inverse()) {
            let rot = r.rotated(p as isize + 1);
            let a = letters[p].inv();
            let u = Word::from_reduced_unchecked(rot.letters()[..n - 1].to_vec());
            let ua = u.concat(&single(a));
            return &(&tr(&single(a)) * &tr(&u)) - &tr(&ua);
        }

        // adjacent square, cyclically
        if let Some(i) = (0..n).find(|&i| letters[i] == letters[(i + 1) % n]) {
            if n > 1 {
                let rot = r.rotated(i as isize);
                let a = rot.letters()[0];
                let v = Word::from_reduced_unchecked(rot.letters()[2..].to_vec());
                let av = single(a).concat(&v);
                return &(&tr(&single(a)) * &tr(&av)) - &tr(&v);
            }
        }

        // repeated letter, split between its first two occurrences
        if let Some((i, j)) = first_repeat(letters) {
            let a = single(letters[i]);
            let u = Word::from_reduced_unchecked(letters[i + 1..j].to_vec());
            let mut v_letters = letters[j + 1..].to_vec();
            v_letters.extend_from_slice(&letters[..i]);
            let v = Word::from_reduced_unchecked(v_letters);
            let au = a.concat(&u);
            let av = a.concat(&v);
            let uv = u.concat(&v.invert());
            return &(&tr(&au) * &tr(&av)) - &tr(&uv);
        }

        // distinct positive letters; rotate to start at the smallest one
        let start = (0..n).min_by_key(|&i| letters[i].index()).unwrap();
        let rot = r.rotated(start as isize);
        let idx: Vec<u32> = rot.letters().iter().map(|l| l.index()).collect();
        match idx.windows(2).position(|p| p[0] > p[1]) {
            Some(p) => {
                // tr(b a z) with b > a
                let rot2 = rot.rotated(p as isize);
                let b = single(rot2.letters()[0]);
                let a = single(rot2.letters()[1]);
                let z = Word::from_reduced_unchecked(rot2.letters()[2..].to_vec());
                let (ta, tb, tz) = (tr(&a), tr(&b), tr(&z));
                let mut out = &ta * &tr(&b.concat(&z));
                out = &out + &(&tb * &tr(&a.concat(&z)));
                out = &out + &(&tz * &tr(&a.concat(&b)));
                out = &out - &(&(&ta * &tb) * &tz);
                &out - &tr(&a.concat(&b).concat(&z))
            }
            None if n <= 3 => TracePoly::var(TraceVar::new(&idx)),
            None => {
                let lead = Word::from_reduced_unchecked(rot.letters()[..n - 3].to_vec());
                let [b, c, d] = [n - 3, n - 2, n - 1].map(|k| single(rot.letters()[k]));
                four_letter_identity(&lead, &b, &c, &d, &mut tr)
            }
        }
    }
}

/// `tr(abcd)` as one half of a sum of products of traces of proper
/// subsequences.
fn four_letter_identity<F>(a: &Word, b: &Word, c: &Word, d: &Word, tr: &mut F) -> TracePoly
where
    F: FnMut(&Word) -> TracePoly,
{
    let w = |xs: &[&Word]| xs.iter().fold(Word::empty(), |acc, x| acc.concat(x));
    let (ta, tb, tc, td) = (tr(a), tr(b), tr(c), tr(d));
    let t = |p: &TracePoly, q: &TracePoly| p * q;
    let terms: [(i64, TracePoly); 12] = [
        (1, t(&ta, &tr(&w(&[b, c, d])))),
        (1, t(&tb, &tr(&w(&[a, c, d])))),
        (1, t(&tc, &tr(&w(&[a, b, d])))),
        (1, t(&td, &tr(&w(&[a, b, c])))),
        (1, t(&tr(&w(&[a, b])), &tr(&w(&[c, d])))),
        (-1, t(&tr(&w(&[a, c])), &tr(&w(&[b, d])))),
        (1, t(&tr(&w(&[a, d])), &tr(&w(&[b, c])))),
        (-1, t(&t(&ta, &tb), &tr(&w(&[c, d])))),
        (-1, t(&t(&ta, &td), &tr(&w(&[b, c])))),
        (-1, t(&t(&tb, &tc), &tr(&w(&[a, d])))),
        (-1, t(&t(&tc, &td), &tr(&w(&[a, b])))),
        (1, t(&t(&ta, &tb), &t(&tc, &td))),
    ];
    let mut out = TracePoly::zero();
    for (s, p) in &terms {
        out.add_scaled(p, &Rational::from_integer((*s).into()));
    }
    out.scale(&rat(1, 2))
}

fn single(l: Letter) -> Word {
    Word::from_reduced_unchecked(vec![l])
}

/// Earliest letter that occurs again, with its next occurrence.
fn first_repeat(letters: &[Letter]) -> Option<(usize, usize)> {
    (0..letters.len()).find_map(|i| (i + 1..letters.len()).find(|&j| letters[j] == letters[i]).map(|j| (i, j)))
}

/// Representative of the class of `w` up to conjugation and inversion: the
/// orientation with fewer inverse letters (ties broken lexicographically),
/// in its greatest rotation, so it starts with the highest generator.
pub fn class_key(w: &Word) -> Word {
    let fwd = CyclicWord::new(w);
    let bwd = fwd.inverse();
    let inv_count = |c: &CyclicWord| c.representative().letters().iter().filter(|l| l.is_inverse()).count();
    let pick = match inv_count(&fwd).cmp(&inv_count(&bwd)) {
        std::cmp::Ordering::Less => fwd,
        std::cmp::Ordering::Greater => bwd,
        std::cmp::Ordering::Equal => fwd.min(bwd),
    };
    let rep = pick.representative();
    (0..rep.len().max(1)).map(|k| rep.rotated(k as isize)).max().unwrap()
}

impl TracePoly {
    /// `tr(w)` via the global reducer; panics only on step-bound overflow.
    pub fn trace_of(w: &Word) -> TracePoly {
        reduce_trace(w).expect("trace reduction step bound exceeded")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::polynomial_residual;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> TracePoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(reduce_trace(&Word::empty()).unwrap(), TracePoly::int(2));
        assert_eq!(reduce_trace(&w("c2 c1")).unwrap(), p("t[1,2]"));
        assert_eq!(reduce_trace(&w("c1^-1")).unwrap(), p("t[1]"));
        assert_eq!(reduce_trace(&w("c1 c2^-1")).unwrap(), p("t[1]*t[2] - t[1,2]"));
        assert_eq!(reduce_trace(&w("c1 c1")).unwrap(), p("t[1]^2 - 2"));
    }

    #[test]
    fn transposed_triple() {
        // frozen after checking against direct matrix products below
        let expected = p("t[1]*t[2,3] + t[2]*t[1,3] + t[3]*t[1,2] - t[1]*t[2]*t[3] - t[1,2,3]");
        let got = reduce_trace(&w("c1 c3 c2")).unwrap();
        assert_eq!(got, expected);
        assert!(polynomial_residual(&w("c1 c3 c2"), &expected, 3, 100, 1).unwrap() < 1e-9);
    }

    #[test]
    fn four_letters_match_matrices() {
        let word = w("c1 c2 c3 c4");
        let poly = reduce_trace(&word).unwrap();
        assert!(poly.variables().iter().all(|v| v.len() <= 3));
        assert!(polynomial_residual(&word, &poly, 4, 100, 2).unwrap() < 1e-9);
        let word = w("c1 c2 c3 c4 c5 c6");
        let poly = reduce_trace(&word).unwrap();
        assert!(polynomial_residual(&word, &poly, 6, 50, 3).unwrap() < 1e-9);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(reduce_trace_in(&w("c1 c5"), 4), Err(Error::IndexOutOfRange { index: 5, rank: 4 })));
    }

    #[test]
    fn class_key_ignores_rotation_and_inversion() {
        let a = w("c2 c1^-1 c3");
        let keys: Vec<Word> = (0..3).map(|k| class_key(&a.rotated(k))).collect();
        assert!(keys.iter().all(|k| *k == keys[0]));
        assert_eq!(class_key(&a.invert()), keys[0]);
    }
}
