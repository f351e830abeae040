//! One-vertex fat graph models of bounded surfaces.
//!
//! `Σ_{n,g}` with `n ≥ 1` retracts onto a rose with `2g + n − 1` petals. The
//! surface is recovered by thickening the rose according to a cyclic order
//! of the petal ends at the vertex. Generators are labelled `a1, b1, ...,
//! ag, bg, c1, ..., c(n-1)`; the last boundary `cn` is dependent.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter, Word};

/// One end of a petal at the vertex. The petal of generator `x` leaves the
/// vertex through its `Out` end and comes back through its `In` end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct End {
    pub gen: u32,
    pub out: bool,
}

impl End {
    /// End through which `l` leaves the vertex.
    pub fn departure(l: Letter) -> End {
        End { gen: l.index(), out: !l.is_inverse() }
    }

    /// End through which `l` arrives back at the vertex.
    pub fn arrival(l: Letter) -> End {
        End { gen: l.index(), out: l.is_inverse() }
    }
}

#[derive(Clone, Debug)]
pub struct FatGraph {
    n: usize,
    g: usize,
    labels: Vec<String>,
    cyclic_order: Vec<End>,
    position: HashMap<End, usize>,
}

impl FatGraph {
    /// Standard model of `Σ_{n,g}`.
    ///
    /// Genus zero: petals `c1..c(n-1)` with ends ordered `c1-out, c1-in,
    /// c2-out, c2-in, ...` (punctures in a row above the base point). Positive
    /// genus: one block `a-out, b-in, a-in, b-out` per handle, then the
    /// `c` petals as in genus zero.
    pub fn standard_model(n: usize, g: usize) -> Result<FatGraph> {
        if n == 0 {
            return Err(Error::Surface(format!("closed surface Σ_{{0,{g}}} is not supported")));
        }
        if n == 1 && g == 0 {
            return Err(Error::Surface("the disk is simply connected".into()));
        }
        let mut labels = Vec::new();
        let mut order = Vec::new();
        for i in 1..=g {
            let a = labels.len() as u32 + 1;
            let b = a + 1;
            labels.push(format!("a{i}"));
            labels.push(format!("b{i}"));
            order.extend([
                End { gen: a, out: true },
                End { gen: b, out: false },
                End { gen: a, out: false },
                End { gen: b, out: true },
            ]);
        }
        for j in 1..n {
            let c = labels.len() as u32 + 1;
            labels.push(format!("c{j}"));
            order.extend([End { gen: c, out: true }, End { gen: c, out: false }]);
        }
        FatGraph::from_order(n, g, labels, order)
    }

    pub fn from_order(n: usize, g: usize, labels: Vec<String>, cyclic_order: Vec<End>) -> Result<FatGraph> {
        let rank = labels.len();
        let mut position = HashMap::new();
        for (i, e) in cyclic_order.iter().enumerate() {
            if e.gen == 0 || e.gen as usize > rank || position.insert(*e, i).is_some() {
                return Err(Error::Surface(format!("bad cyclic order entry {e:?}")));
            }
        }
        if position.len() != 2 * rank {
            return Err(Error::Surface("cyclic order must list every petal end once".into()));
        }
        Ok(FatGraph { n, g, labels, cyclic_order, position })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cyclic_order(&self) -> &[End] {
        &self.cyclic_order
    }

    pub fn euler_characteristic(&self) -> i64 {
        1 - self.rank() as i64
    }

    pub(crate) fn pos(&self, e: End) -> usize {
        self.position[&e]
    }

    /// Steps from `from` to `to` going forward in the cyclic order.
    pub fn ccw_distance(&self, from: End, to: End) -> usize {
        let m = self.cyclic_order.len();
        (self.pos(to) + m - self.pos(from)) % m
    }

    /// Traces the boundary cycles of the thickened rose. After arriving at
    /// the vertex through an end, the walk leaves through the preceding end.
    pub fn boundary_words(&self) -> Vec<CyclicWord> {
        let m = self.cyclic_order.len();
        let mut used = vec![false; m];
        let mut faces = Vec::new();
        for start in 0..m {
            if used[start] {
                continue;
            }
            let mut letters = Vec::new();
            let mut cur = start;
            while !used[cur] {
                used[cur] = true;
                let e = self.cyclic_order[cur];
                let letter = Letter::new(e.gen, if e.out { 1 } else { -1 });
                letters.push(letter);
                let arrive = self.pos(End::arrival(letter));
                cur = (arrive + m - 1) % m;
            }
            faces.push(CyclicWord::new(&Word::from_pairs(letters.iter().map(|l| (l.index(), l.exponent())))));
        }
        faces
    }

    /// Peripheral classes from the standard presentation: `c1, ...,
    /// c(n-1)` and `(∏[a_i,b_i] c1⋯c(n-1))⁻¹`.
    pub fn peripheral_words(&self) -> Vec<Word> {
        let mut out: Vec<Word> = (1..self.n).map(|j| Word::from_indices(&[(2 * self.g + j) as u32])).collect();
        out.push(self.last_boundary());
        out
    }

    /// The dependent boundary word `cn = (∏[a_i,b_i] c1⋯c(n-1))⁻¹`.
    pub fn last_boundary(&self) -> Word {
        let mut rel = Word::empty();
        for i in 0..self.g as u32 {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            rel = rel.concat(&Word::from_pairs([(a, 1), (b, 1), (a, -1), (b, -1)]));
        }
        for j in 1..self.n {
            rel = rel.concat(&Word::from_indices(&[(2 * self.g + j) as u32]));
        }
        rel.invert()
    }

    /// Parses a word in this surface's labels. The dependent boundary
    /// `c{n}` is accepted and expanded.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let extra = self.rank() as u32 + 1;
        let last = format!("c{}", self.n);
        let raw = Word::parse_with(s, |name| {
            if name == last {
                return Some(extra);
            }
            self.labels.iter().position(|l| l == name).map(|i| i as u32 + 1)
        })?;
        let cn = self.last_boundary();
        Ok(raw.substitute(|i| if i == extra { cn.clone() } else { Word::from_indices(&[i]) }))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters()
            .iter()
            .map(|l| {
                let name = &self.labels[l.index() as usize - 1];
                if l.is_inverse() {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn format_end(&self, e: End) -> String {
        format!("{}-{}", self.labels[e.gen as usize - 1], if e.out { "out" } else { "in" })
    }
}

impl fmt::Display for FatGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "surface: n={} g={} rank={} euler={}", self.n, self.g, self.rank(), self.euler_characteristic())?;
        let ends: Vec<String> = self.cyclic_order.iter().map(|e| self.format_end(*e)).collect();
        writeln!(f, "cyclic order: ({})", ends.join(", "))?;
        writeln!(f, "boundary words:")?;
        for b in self.boundary_words() {
            writeln!(f, "  {}", self.format_word(b.representative()))?;
        }
        Ok(())
    }
}

/// Group data entering the dimension count: `dim G`, the rank `r` of the
/// derived subgroup and the dimension `s` of the maximal central torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupParams {
    pub dim_g: i64,
    pub r: i64,
    pub s: i64,
}

impl GroupParams {
    pub const SL2: GroupParams = GroupParams { dim_g: 3, r: 1, s: 0 };

    pub fn new(dim_g: i64, r: i64, s: i64) -> Result<Self> {
        if !(dim_g >= r && r >= 0 && s >= 0) {
            return Err(Error::Surface(format!("invalid group parameters ({dim_g}, {r}, {s})")));
        }
        Ok(GroupParams { dim_g, r, s })
    }

    /// `SL(n)`, `GL(n)` and `PGL(n)`-style lookups by name.
    pub fn named(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        let (kind, n) = lower.split_at(lower.find(|c: char| c.is_ascii_digit())?);
        let n: i64 = n.parse().ok()?;
        match kind {
            "sl" if n >= 2 => Some(GroupParams { dim_g: n * n - 1, r: n - 1, s: 0 }),
            "gl" if n >= 2 => Some(GroupParams { dim_g: n * n, r: n - 1, s: 1 }),
            _ => None,
        }
    }
}

pub fn euler_characteristic(n: usize, g: usize) -> i64 {
    2 - 2 * g as i64 - n as i64
}

/// Complex dimension of the `G`-character variety of `Σ_{n,g}`, `G`
/// non-abelian: `−χ·dim G + ζ`.
pub fn dimension(n: usize, g: usize, params: GroupParams) -> Result<i64> {
    if g == 0 && n < 2 {
        return Err(Error::Surface(format!("Σ_{{{n},0}} is simply connected")));
    }
    let zeta = if n > 0 {
        if 2 * g + n >= 3 {
            params.s
        } else {
            params.r + params.s
        }
    } else if g >= 2 {
        2 * params.s
    } else {
        2 * (params.r + params.s)
    };
    Ok(-euler_characteristic(n, g) * params.dim_g + zeta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes_up_to_inversion(ws: &[Word]) -> Vec<CyclicWord> {
        let mut out: Vec<CyclicWord> = ws
            .iter()
            .map(|w| {
                let c = CyclicWord::new(w);
                let i = c.inverse();
                c.min(i)
            })
            .collect();
        out.sort();
        out
    }

    fn check_boundaries(n: usize, g: usize) {
        let fat = FatGraph::standard_model(n, g).unwrap();
        let faces: Vec<Word> = fat.boundary_words().iter().map(|c| c.representative().clone()).collect();
        assert_eq!(faces.len(), n, "Σ_{{{n},{g}}}");
        assert_eq!(classes_up_to_inversion(&faces), classes_up_to_inversion(&fat.peripheral_words()));
        assert_eq!(fat.euler_characteristic(), euler_characteristic(n, g));
    }

    #[test]
    fn five_holed_sphere() {
        let fat = FatGraph::standard_model(5, 0).unwrap();
        assert_eq!(fat.rank(), 4);
        let peri: Vec<String> = fat.peripheral_words().iter().map(|w| w.to_string()).collect();
        assert_eq!(peri, ["c1", "c2", "c3", "c4", "c4^-1 c3^-1 c2^-1 c1^-1"]);
        check_boundaries(5, 0);
    }

    #[test]
    fn small_models() {
        let fat = FatGraph::standard_model(2, 0).unwrap();
        assert_eq!(fat.rank(), 1);
        check_boundaries(2, 0);
        let torus = FatGraph::standard_model(1, 1).unwrap();
        assert_eq!(torus.rank(), 2);
        assert_eq!(torus.labels(), ["a1", "b1"]);
        check_boundaries(1, 1);
        assert_eq!(torus.last_boundary(), torus.parse_word("b1 a1 b1^-1 a1^-1").unwrap());
    }

    #[test]
    fn face_count_matches_boundaries() {
        for g in 0..3 {
            for n in 1..6 {
                if g == 0 && n < 2 {
                    continue;
                }
                check_boundaries(n, g);
            }
        }
    }

    #[test]
    fn rejects_closed_and_disk() {
        assert!(FatGraph::standard_model(0, 2).is_err());
        assert!(FatGraph::standard_model(1, 0).is_err());
    }

    #[test]
    fn parse_dependent_boundary() {
        let fat = FatGraph::standard_model(5, 0).unwrap();
        assert_eq!(fat.parse_word("c5").unwrap(), "c4^-1 c3^-1 c2^-1 c1^-1".parse().unwrap());
        assert_eq!(fat.parse_word("c1 c2 c3 c4 c5").unwrap(), Word::empty());
        assert!(fat.parse_word("a1").is_err());
        let s21 = FatGraph::standard_model(2, 1).unwrap();
        assert_eq!(s21.format_word(&s21.parse_word("a1 b1^-1 c1").unwrap()), "a1 b1^-1 c1");
    }

    #[test]
    fn dimension_examples() {
        let sl2 = GroupParams::SL2;
        assert_eq!(dimension(5, 0, sl2).unwrap(), 9);
        assert_eq!(dimension(2, 0, sl2).unwrap(), 1);
        assert_eq!(dimension(0, 2, sl2).unwrap(), 6);
        assert!(dimension(1, 0, sl2).is_err());
        assert!(dimension(0, 0, sl2).is_err());
    }

    #[test]
    fn dimension_branches() {
        let gl3 = GroupParams::named("gl3").unwrap();
        assert_eq!(gl3, GroupParams { dim_g: 9, r: 2, s: 1 });
        // n > 0, 2g + n >= 3: ζ = s
        assert_eq!(dimension(3, 0, gl3).unwrap(), 9 + 1);
        // n > 0, 2g + n = 2: ζ = r + s
        assert_eq!(dimension(2, 0, gl3).unwrap(), 3);
        // n = 0, g >= 2: ζ = 2s
        assert_eq!(dimension(0, 3, gl3).unwrap(), 4 * 9 + 2);
        // n = 0, g = 1: ζ = 2(r + s)
        assert_eq!(dimension(0, 1, gl3).unwrap(), 6);
    }
}
