//! Words in a free group on generators `c1, c2, ...`.
//!
//! A [`Word`] is always freely reduced. Letters carry a generator index
//! (starting at 1) and an exponent of `+1` or `-1`. A [`CyclicWord`] is a
//! conjugacy class of words, stored as its canonical rotation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    index: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(index: u32, exponent: i32) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        assert!(exponent == 1 || exponent == -1, "exponent must be +1 or -1");
        Letter { index, inverse: exponent < 0 }
    }

    pub fn gen(index: u32) -> Self {
        Letter::new(index, 1)
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn exponent(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inv(self) -> Self {
        Letter { index: self.index, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

// Index ascending, then `+1` before `-1`.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index.cmp(&other.index).then(self.inverse.cmp(&other.inverse))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "c{}^-1", self.index)
        } else {
            write!(f, "c{}", self.index)
        }
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Freely reduce a raw letter sequence.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut buf: Vec<Letter> = Vec::new();
    for x in letters {
        if buf.last().is_some_and(|y| y.cancels(x)) {
            buf.pop();
        } else {
            buf.push(x);
        }
    }
    Word { letters: buf }
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from `(index, exponent)` pairs, freely reducing.
    pub fn from_pairs<I: IntoIterator<Item = (u32, i32)>>(pairs: I) -> Self {
        free_reduce(pairs.into_iter().map(|(i, e)| Letter::new(i, e)))
    }

    /// The positive word `c_{i1} c_{i2} ...`.
    pub fn from_indices(indices: &[u32]) -> Self {
        free_reduce(indices.iter().map(|&i| Letter::gen(i)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.letters.iter().find(|l| l.index as usize > rank) {
            Some(l) => Err(Error::IndexOutOfRange { index: l.index, rank }),
            None => Ok(()),
        }
    }

    pub fn invert(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) => self.letters.len() == 1 || !a.cancels(*b),
            _ => true,
        }
    }

    /// Splits `self` as `conjugator · core · conjugator⁻¹` with `core`
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let (core, conj) = self.cyclic_core();
        (CyclicWord::new(&core), conj)
    }

    /// Like [`Word::cyclic_reduce`] but keeps the core as a linear word.
    pub fn cyclic_core(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].cancels(self.letters[n - 1 - k]) {
            k += 1;
        }
        let core = Word { letters: self.letters[k..n - k].to_vec() };
        let conj = Word { letters: self.letters[..k].to_vec() };
        (core, conj)
    }

    /// Moves the first `k` letters (taken modulo the length) to the end.
    pub fn rotate(&self, k: isize) -> Result<Word> {
        if !self.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced(self.to_string()));
        }
        Ok(self.rotated(k))
    }

    pub(crate) fn rotated(&self, k: isize) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return Word::empty();
        }
        let k = k.rem_euclid(n as isize) as usize;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn concat(&self, other: &Word) -> Word {
        free_reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// Replaces every generator by a word, then freely reduces.
    pub fn substitute<F>(&self, mut image: F) -> Word
    where
        F: FnMut(u32) -> Word,
    {
        let mut out = Vec::new();
        for l in &self.letters {
            let w = image(l.index);
            if l.inverse {
                out.extend(w.invert().letters);
            } else {
                out.extend(w.letters);
            }
        }
        free_reduce(out)
    }

    /// Parses words with custom generator labels, e.g. `a1 b1 c1^-1`.
    pub fn parse_with<F>(s: &str, mut label: F) -> Result<Word>
    where
        F: FnMut(&str) -> Option<u32>,
    {
        let err = |reason: String| Error::WordParse { input: s.to_string(), reason };
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == '*' || c == '.') {
            if tok.is_empty() || tok == "1" && s.trim() == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e = e.trim_start_matches('{').trim_end_matches('}');
                    let e: i32 = e.parse().map_err(|_| err(format!("bad exponent in {tok:?}")))?;
                    (n, e)
                }
                None => (tok, 1),
            };
            let idx = label(name).ok_or_else(|| err(format!("unknown generator {name:?}")))?;
            if idx == 0 {
                return Err(err("generator indices start at 1".into()));
            }
            let letter = Letter::gen(idx);
            let (l, reps) = if exp < 0 { (letter.inv(), -exp) } else { (letter, exp) };
            for _ in 0..reps {
                letters.push(l);
            }
        }
        Ok(free_reduce(letters))
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `c1 c2 c3^-1`; the empty string (or `1`) is the identity.
    fn from_str(s: &str) -> Result<Word> {
        Word::parse_with(s, |name| name.strip_prefix('c').and_then(|d| d.parse().ok()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A conjugacy class of a free-group element.
///
/// The stored representative is the lexicographically least rotation of the
/// cyclically reduced core.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    rep: Word,
}

impl CyclicWord {
    pub fn new(w: &Word) -> Self {
        let (core, _) = w.cyclic_core();
        let n = core.len();
        let mut best = core.clone();
        for k in 1..n {
            let r = core.rotated(k as isize);
            if r.letters < best.letters {
                best = r;
            }
        }
        CyclicWord { rep: best }
    }

    pub fn representative(&self) -> &Word {
        &self.rep
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::new(&self.rep.invert())
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rep)
    }
}
