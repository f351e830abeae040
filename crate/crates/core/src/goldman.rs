//! Intersection points of curves on a fat graph and the SL(2) Goldman bracket
//!
//! ```text
//! {tr α, tr β} = Σ_p ε(p; α, β) (tr(α_p β_p) − ½ tr α tr β)
//! ```
//!
//! Curves are cyclically reduced words and are drawn in taut position: they
//! run along the petals and turn at the vertex. Two curves cross either at a
//! single turn where their four ends interleave, or along a maximal stretch
//! they share, when they enter and leave the stretch on opposite sides.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{rat, Rational, TracePoly};
use crate::reduce::reduce_trace;
use crate::surface::{End, FatGraph};
use crate::word::{CyclicWord, Word};

/// One transverse double point of two curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionDatum {
    /// Oriented intersection number, `+1` when the second curve crosses the
    /// first from right to left.
    pub sign: i32,
    /// The product loop `α_p β_p` rebased at the base point.
    pub resolved: Word,
}

#[derive(Clone, Copy, Debug)]
struct Turn {
    arrive: End,
    depart: End,
}

fn turns(w: &Word) -> Vec<Turn> {
    let l = w.letters();
    let n = l.len();
    (0..n)
        .map(|i| Turn { arrive: End::arrival(l[(i + n - 1) % n]), depart: End::departure(l[i]) })
        .collect()
}

/// Crossings between `alpha` and `gamma` as `(turn in alpha, turn in gamma,
/// sign)`. Isolated crossings at a single turn are included only when
/// `transverse` is set; shared stretches are always examined.
fn crossings(fat: &FatGraph, alpha: &Word, gamma: &Word, transverse: bool) -> Vec<(usize, usize, i32)> {
    let ta = turns(alpha);
    let tg = turns(gamma);
    let (n, m) = (ta.len(), tg.len());
    let d = |from: End, to: End| fat.ccw_distance(from, to);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..m {
            let (a, b) = (ta[i], tg[j]);
            let disjoint = a.arrive != b.arrive && a.arrive != b.depart && a.depart != b.arrive && a.depart != b.depart;
            if disjoint {
                if !transverse {
                    continue;
                }
                let to_out = d(a.arrive, a.depart);
                let b_in_first = d(a.arrive, b.arrive) < to_out;
                let b_out_first = d(a.arrive, b.depart) < to_out;
                if b_in_first != b_out_first {
                    out.push((i, j, if b_in_first { 1 } else { -1 }));
                }
            } else if a.depart == b.depart && a.arrive != b.arrive {
                // start of a shared stretch; walk to its end
                let limit = n * m + 1;
                let mut k = 1;
                while k <= limit && ta[(i + k) % n].depart == tg[(j + k) % m].depart {
                    k += 1;
                }
                if k > limit {
                    continue;
                }
                let (a2, b2) = (ta[(i + k) % n], tg[(j + k) % m]);
                let shared_out = a.depart;
                let shared_in = a2.arrive;
                let alpha_left_before = d(shared_out, a.arrive) < d(shared_out, b.arrive);
                let alpha_right_after = d(shared_in, a2.depart) < d(shared_in, b2.depart);
                match (alpha_left_before, alpha_right_after) {
                    (true, true) => out.push((i, j, 1)),
                    (false, false) => out.push((i, j, -1)),
                    _ => {}
                }
            }
        }
    }
    out
}

fn taut(w: &Word, name: &str) -> Result<()> {
    if w.is_empty() || !w.is_cyclically_reduced() {
        return Err(Error::NotCyclicallyReduced(format!("{name} = {w}")));
    }
    Ok(())
}

/// Transverse double points of taut representatives of `alpha` and `beta`.
pub fn intersections(fat: &FatGraph, alpha: &Word, beta: &Word) -> Result<Vec<IntersectionDatum>> {
    taut(alpha, "alpha")?;
    taut(beta, "beta")?;
    alpha.check_rank(fat.rank())?;
    beta.check_rank(fat.rank())?;
    let (ca, cb) = (CyclicWord::new(alpha), CyclicWord::new(beta));
    if ca == cb || ca == cb.inverse() {
        return Err(Error::SameClass(alpha.to_string(), beta.to_string()));
    }
    let mut points = Vec::new();
    for (i, j, sign) in crossings(fat, alpha, beta, true) {
        let resolved = alpha.rotated(i as isize).concat(&beta.rotated(j as isize));
        points.push(IntersectionDatum { sign, resolved });
    }
    let beta_inv = beta.invert();
    for (i, j, sign) in crossings(fat, alpha, &beta_inv, false) {
        let resolved = alpha.rotated(i as isize).concat(&beta_inv.rotated(j as isize).invert());
        points.push(IntersectionDatum { sign: -sign, resolved });
    }
    Ok(points)
}

fn sum_points(points: &[IntersectionDatum], alpha: &Word, beta: &Word) -> Result<TracePoly> {
    if points.is_empty() {
        return Ok(TracePoly::zero());
    }
    let product = &reduce_trace(alpha)? * &reduce_trace(beta)?;
    let half_product = product.scale(&rat(1, 2));
    let mut out = TracePoly::zero();
    for p in points {
        let term = &reduce_trace(&p.resolved)? - &half_product;
        out.add_scaled(&term, &Rational::from_integer(p.sign.into()));
    }
    Ok(out)
}

/// `{tr α, tr β}` on the surface. Inputs are first cyclically reduced, so
/// any representatives of the free homotopy classes may be passed.
pub fn bracket(fat: &FatGraph, alpha: &Word, beta: &Word) -> Result<TracePoly> {
    alpha.check_rank(fat.rank())?;
    beta.check_rank(fat.rank())?;
    let (a, _) = alpha.cyclic_core();
    let (b, _) = beta.cyclic_core();
    if a.is_empty() || b.is_empty() {
        return Ok(TracePoly::zero());
    }
    let (ca, cb) = (CyclicWord::new(&a), CyclicWord::new(&b));
    if ca == cb || ca == cb.inverse() {
        return Ok(TracePoly::zero());
    }
    let points = intersections(fat, &a, &b)?;
    sum_points(&points, &a, &b)
}

/// Externally supplied intersection data for one bracket: the sign and product
/// word of every crossing of the two curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramData {
    pub figure: String,
    pub lhs: String,
    pub rhs: String,
    pub points: Vec<DiagramPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramPoint {
    pub sign: i64,
    pub word: String,
}

impl DiagramData {
    pub fn load(path: &Path) -> Result<DiagramData> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Diagram { figure: path.display().to_string(), reason: e.to_string() })
    }

    fn bad(&self, reason: String) -> Error {
        Error::Diagram { figure: self.figure.clone(), reason }
    }

    fn parse_word(&self, s: &str) -> Result<Word> {
        s.parse::<Word>().map_err(|e| self.bad(e.to_string()))
    }

    pub fn lhs_word(&self) -> Result<Word> {
        self.parse_word(&self.lhs)
    }

    pub fn rhs_word(&self) -> Result<Word> {
        self.parse_word(&self.rhs)
    }

    pub fn intersection_data(&self) -> Result<Vec<IntersectionDatum>> {
        self.points
            .iter()
            .map(|p| {
                if p.sign != 1 && p.sign != -1 {
                    return Err(self.bad(format!("sign must be +1 or -1, got {}", p.sign)));
                }
                Ok(IntersectionDatum { sign: p.sign as i32, resolved: self.parse_word(&p.word)? })
            })
            .collect()
    }
}

/// Same summation as [`bracket`], over externally supplied crossings.
pub fn bracket_from_data(data: &DiagramData) -> Result<TracePoly> {
    let lhs = data.lhs_word()?;
    let rhs = data.rhs_word()?;
    if lhs.is_empty() || rhs.is_empty() {
        return Err(data.bad("curves must be non-trivial".into()));
    }
    let points = data.intersection_data()?;
    sum_points(&points, &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> TracePoly {
        s.parse().unwrap()
    }

    fn s50() -> FatGraph {
        FatGraph::standard_model(5, 0).unwrap()
    }

    fn summary(points: &[IntersectionDatum]) -> Vec<(i32, String)> {
        let mut v: Vec<(i32, String)> = points.iter().map(|d| (d.sign, d.resolved.to_string())).collect();
        v.sort();
        v
    }

    #[test]
    fn disjoint_curves() {
        assert!(intersections(&s50(), &w("c1 c2"), &w("c3 c4")).unwrap().is_empty());
        assert!(intersections(&s50(), &w("c1 c2 c3"), &w("c1 c2")).unwrap().is_empty());
        assert!(intersections(&s50(), &w("c1 c4"), &w("c2 c3")).unwrap().is_empty());
    }

    #[test]
    fn four_points_for_13_24() {
        let pts = intersections(&s50(), &w("c1 c3"), &w("c2 c4")).unwrap();
        let mut expected = vec![
            (1, "c1 c3 c2 c4".to_string()),
            (-1, "c3 c1 c2 c4".to_string()),
            (1, "c3 c1 c4 c2".to_string()),
            (-1, "c1 c3 c4 c2".to_string()),
        ];
        expected.sort();
        assert_eq!(summary(&pts), expected);
    }

    #[test]
    fn shared_stretch_points() {
        let pts = intersections(&s50(), &w("c1 c2"), &w("c1 c4")).unwrap();
        let mut expected = vec![(1, "c1 c2 c1 c4".to_string()), (-1, "c1 c2 c4 c1".to_string())];
        expected.sort();
        assert_eq!(summary(&pts), expected);
    }

    #[test]
    fn displayed_brackets() {
        assert_eq!(
            bracket(&s50(), &w("c1 c2"), &w("c1 c4")).unwrap(),
            p("t[1,2]*t[1,4] + 2*t[2,4] - t[1]*t[1,2,4] - t[2]*t[4]")
        );
        assert_eq!(
            bracket(&s50(), &w("c1 c3"), &w("c2 c4")).unwrap(),
            p("t[3]*t[4]*t[1,2] - 2*t[3,4]*t[1,2] - t[2]*t[3]*t[1,4] - t[1]*t[4]*t[2,3] + 2*t[1,4]*t[2,3] + t[1]*t[2]*t[3,4]")
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        let fat = s50();
        assert!(matches!(intersections(&fat, &w("c1 c2"), &w("c2 c1")), Err(Error::SameClass(..))));
        assert!(matches!(intersections(&fat, &w("c1 c2"), &w("c1^-1 c2^-1")), Err(Error::SameClass(..))));
        assert!(intersections(&fat, &w("c1 c2 c1^-1"), &w("c3")).is_err());
        assert!(bracket(&fat, &w("c1 c2"), &w("c2 c1")).unwrap().is_zero());
    }

    #[test]
    fn bracket_ignores_conjugation() {
        let fat = s50();
        let conj = w("c3 c1 c3 c3^-1 c3^-1");
        assert_eq!(conj, w("c3 c1 c3^-1"));
        let a = bracket(&fat, &w("c1 c3 c4"), &w("c2 c3")).unwrap();
        let u = w("c2 c4^-1");
        let a2 = bracket(&fat, &u.concat(&w("c1 c3 c4")).concat(&u.invert()), &w("c3 c2")).unwrap();
        assert_eq!(a, a2);
    }

    #[test]
    fn diagram_summation() {
        let data = DiagramData {
            figure: "1214".into(),
            lhs: "c1 c2".into(),
            rhs: "c1 c4".into(),
            points: vec![
                DiagramPoint { sign: 1, word: "c1 c2 c1 c4".into() },
                DiagramPoint { sign: -1, word: "c1 c2 c4 c1".into() },
            ],
        };
        assert_eq!(bracket_from_data(&data).unwrap(), bracket(&s50(), &w("c1 c2"), &w("c1 c4")).unwrap());

        let empty = DiagramData { points: vec![], ..data.clone() };
        assert!(bracket_from_data(&empty).unwrap().is_zero());

        let mut bad = data.clone();
        bad.points[0].sign = 2;
        let msg = bracket_from_data(&bad).unwrap_err().to_string();
        assert!(msg.contains("1214"), "{msg}");
        bad.points[0] = DiagramPoint { sign: 1, word: "c1 x2".into() };
        assert!(bracket_from_data(&bad).unwrap_err().to_string().contains("1214"));
    }

    #[test]
    fn one_holed_torus_handle() {
        // The handle is oriented so its boundary reads ([a,b])⁻¹ like the
        // genus-zero boundaries; then b crosses a once, from left to right.
        let fat = FatGraph::standard_model(1, 1).unwrap();
        let a = fat.parse_word("a1").unwrap();
        let b = fat.parse_word("b1").unwrap();
        let pts = intersections(&fat, &a, &b).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].sign, -1);
        assert_eq!(pts[0].resolved, fat.parse_word("a1 b1").unwrap());
        assert_eq!(bracket(&fat, &a, &b).unwrap(), p("1/2*t[1]*t[2] - t[1,2]"));
        assert_eq!(bracket(&fat, &b, &a).unwrap(), p("t[1,2] - 1/2*t[1]*t[2]"));
    }
}
