//! The Poisson bi-vector on trace coordinates, boundary permutations and the
//! compressed symmetric form of the five-holed sphere.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::goldman::bracket;
use crate::numeric::{relative_residual, Representation};
use crate::poly::{Rational, TracePoly, TraceVar};
use crate::reduce::reduce_trace;
use crate::surface::FatGraph;
use crate::word::Word;

/// Largest rank whose coordinate ring is generated by the `t[I]`, `|I| ≤ 3`.
pub const MAX_RANK: usize = 4;

/// Relative tolerance for on-variety comparisons.
pub const VARIETY_TOLERANCE: f64 = 1e-8;

/// Magnitude floor for on-variety comparisons.
pub const MAGNITUDE_FLOOR: f64 = 1e-6;

/// Antisymmetric table of coordinate brackets. Only pairs `u < v` are stored
/// and zero entries are omitted.
#[derive(Clone, Debug, PartialEq)]
pub struct Bivector {
    pub surface: (usize, usize),
    pub coordinates: Vec<TraceVar>,
    entries: BTreeMap<(TraceVar, TraceVar), TracePoly>,
}

impl Bivector {
    pub fn new(surface: (usize, usize), coordinates: Vec<TraceVar>) -> Self {
        Bivector { surface, coordinates, entries: BTreeMap::new() }
    }

    /// `{u, v}`, zero when absent.
    pub fn get(&self, u: &TraceVar, v: &TraceVar) -> TracePoly {
        if u == v {
            return TracePoly::zero();
        }
        if u < v {
            self.entries.get(&(u.clone(), v.clone())).cloned().unwrap_or_default()
        } else {
            -&self.entries.get(&(v.clone(), u.clone())).cloned().unwrap_or_default()
        }
    }

    /// Sets `{u, v} = p` (and so `{v, u} = −p`).
    pub fn set(&mut self, u: &TraceVar, v: &TraceVar, p: TracePoly) -> Result<()> {
        if u == v {
            if p.is_zero() {
                return Ok(());
            }
            return Err(Error::Data(format!("cannot pair {u} with itself")));
        }
        let (key, p) = if u < v { ((u.clone(), v.clone()), p) } else { ((v.clone(), u.clone()), -&p) };
        if p.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, p);
        }
        Ok(())
    }

    /// Non-zero entries as `(u, v, {u, v})` with `u < v`.
    pub fn entries(&self) -> impl Iterator<Item = (&TraceVar, &TraceVar, &TracePoly)> {
        self.entries.iter().map(|((u, v), p)| (u, v, p))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// All unordered coordinate pairs `u < v`.
    pub fn pairs(&self) -> Vec<(TraceVar, TraceVar)> {
        let mut out = Vec::new();
        for (i, u) in self.coordinates.iter().enumerate() {
            for v in &self.coordinates[i + 1..] {
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    fn check_coordinate(&self, v: &TraceVar) -> Result<()> {
        if self.coordinates.contains(v) {
            Ok(())
        } else {
            Err(Error::MissingVariable(v.to_string()))
        }
    }

    /// `{p, q}` extended from the coordinate table as a bi-derivation.
    pub fn bracket_polys(&self, p: &TracePoly, q: &TracePoly) -> Result<TracePoly> {
        let mut out = TracePoly::zero();
        for x in p.variables() {
            self.check_coordinate(&x)?;
            let dp = p.partial(&x);
            for y in q.variables() {
                self.check_coordinate(&y)?;
                let e = self.get(&x, &y);
                if e.is_zero() {
                    continue;
                }
                out = &out + &(&(&dp * &q.partial(&y)) * &e);
            }
        }
        Ok(out)
    }

    /// `{p, q}` evaluated at a point, with the summed size of its terms.
    pub fn eval_bracket(&self, p: &TracePoly, q: &TracePoly, values: &HashMap<TraceVar, Complex64>) -> Result<(Complex64, f64)> {
        let mut value = Complex64::new(0.0, 0.0);
        let mut magnitude = 0.0;
        for x in p.variables() {
            self.check_coordinate(&x)?;
            let dp = p.partial(&x).eval_map(values)?;
            for y in q.variables() {
                self.check_coordinate(&y)?;
                let e = self.get(&x, &y);
                if e.is_zero() {
                    continue;
                }
                let dq = q.partial(&y).eval_map(values)?;
                value += dp * dq * e.eval_map(values)?;
                magnitude += dp.norm() * dq.norm() * e.eval_magnitude(values)?;
            }
        }
        Ok((value, magnitude))
    }

    /// `{u,{v,w}} + {v,{w,u}} + {w,{u,v}}` at a point, relative to the size
    /// of its terms.
    pub fn jacobi_residual(&self, u: &TraceVar, v: &TraceVar, w: &TraceVar, values: &HashMap<TraceVar, Complex64>) -> Result<f64> {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut scale = 0.0;
        for (a, b, c) in [(u, v, w), (v, w, u), (w, u, v)] {
            let (val, mag) = self.eval_bracket(&TracePoly::var(a.clone()), &self.get(b, c), values)?;
            sum += val;
            scale += mag;
        }
        Ok(relative_residual(sum, Complex64::new(0.0, 0.0), scale, MAGNITUDE_FLOOR))
    }

    pub fn to_json(&self) -> Result<String> {
        let file = BivectorFile {
            surface: SurfaceTag { n: self.surface.0, g: self.surface.1 },
            coordinates: self.coordinates.iter().map(|v| v.to_string()).collect(),
            entries: self.entries().map(|(u, v, p)| EntryRecord { u: u.to_string(), v: v.to_string(), poly: p.to_string() }).collect(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json(text: &str) -> Result<Bivector> {
        let file: BivectorFile = serde_json::from_str(text)?;
        let coordinates = file.coordinates.iter().map(|s| s.parse()).collect::<Result<Vec<TraceVar>>>()?;
        let mut bv = Bivector::new((file.surface.n, file.surface.g), coordinates);
        for e in &file.entries {
            let (u, v) = (e.u.parse()?, e.v.parse()?);
            bv.check_coordinate(&u)?;
            bv.check_coordinate(&v)?;
            bv.set(&u, &v, e.poly.parse()?)?;
        }
        Ok(bv)
    }

    /// `Σ {u,v} ∂/∂u ∧ ∂/∂v` in LaTeX, one term per line.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.entries()
            .map(|(u, v, p)| format!("\\left({}\\right)\\frac{{\\partial}}{{\\partial {}}}\\wedge\\frac{{\\partial}}{{\\partial {}}}", p.latex(), u.latex(), v.latex()))
            .collect::<Vec<_>>()
            .join("\n+ ")
    }
}

impl fmt::Display for Bivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "surface {},{}; {} coordinates, {} non-zero entries", self.surface.0, self.surface.1, self.coordinates.len(), self.entries.len())?;
        for (u, v, p) in self.entries() {
            writeln!(f, "{{{u}, {v}}} = {p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct SurfaceTag {
    n: usize,
    g: usize,
}

#[derive(Serialize, Deserialize)]
struct EntryRecord {
    u: String,
    v: String,
    poly: String,
}

#[derive(Serialize, Deserialize)]
struct BivectorFile {
    surface: SurfaceTag,
    coordinates: Vec<String>,
    entries: Vec<EntryRecord>,
}

/// Brackets of all coordinate pairs on `fat`, computed in parallel.
pub fn compute_bivector(fat: &FatGraph) -> Result<Bivector> {
    if fat.rank() > MAX_RANK {
        return Err(Error::Surface(format!("rank {} exceeds the supported coordinate basis (rank ≤ {MAX_RANK})", fat.rank())));
    }
    let mut bv = Bivector::new((fat.n(), fat.genus()), TraceVar::basis(fat.rank()));
    let results: Vec<((TraceVar, TraceVar), TracePoly)> = bv
        .pairs()
        .into_par_iter()
        .map(|(u, v)| bracket(fat, &u.word(), &v.word()).map(|p| ((u, v), p)))
        .collect::<Result<_>>()?;
    for ((u, v), p) in results {
        bv.set(&u, &v, p)?;
    }
    Ok(bv)
}

/// Coordinates whose bracket with every coordinate vanishes.
pub fn casimirs(bv: &Bivector) -> Vec<TraceVar> {
    let busy: BTreeSet<&TraceVar> = bv.entries().flat_map(|(u, v, _)| [u, v]).collect();
    bv.coordinates.iter().filter(|v| !busy.contains(v)).cloned().collect()
}

/// A permutation of boundary labels `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let distinct: BTreeSet<u32> = images.iter().copied().collect();
        if distinct.len() != images.len() || images.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::Data(format!("not a permutation: {images:?}")));
        }
        Ok(Perm(images))
    }

    /// Cycle notation such as `(1432)` or `(13)(24)` on `n` labels.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let bad = |why: &str| Error::Data(format!("bad permutation {s:?}: {why}"));
        let mut images: Vec<u32> = (1..=n as u32).collect();
        let mut seen = BTreeSet::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("missing ')'"))?;
            let labels = body[..close]
                .chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(|c| c.to_digit(10).filter(|&d| d >= 1 && d as usize <= n).ok_or_else(|| bad("label out of range")))
                .collect::<Result<Vec<u32>>>()?;
            for &l in &labels {
                if labels.len() > 1 && !seen.insert(l) {
                    return Err(bad("repeated label"));
                }
            }
            for (k, &l) in labels.iter().enumerate() {
                images[l as usize - 1] = labels[(k + 1) % labels.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<u32>, n: u32, out: &mut Vec<Perm>) {
            if prefix.len() == n as usize {
                out.push(Perm(prefix.clone()));
                return;
            }
            for i in 1..=n {
                if !prefix.contains(&i) {
                    prefix.push(i);
                    rec(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), n as u32, &mut out);
        out
    }

    /// Sorted relabeling `t[I] ↦ t[sort σ(I)]`.
    pub fn relabel(&self, v: &TraceVar) -> Result<TraceVar> {
        let mut ix = v
            .indices()
            .iter()
            .map(|&i| if (i as usize) <= self.n() { Ok(self.apply(i)) } else { Err(Error::IndexOutOfRange { index: i, rank: self.n() }) })
            .collect::<Result<Vec<u32>>>()?;
        ix.sort_unstable();
        Ok(TraceVar::new(&ix))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut done = vec![false; self.n()];
        let mut any = false;
        for start in 1..=self.n() as u32 {
            if done[start as usize - 1] || self.apply(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            while !done[i as usize - 1] {
                done[i as usize - 1] = true;
                write!(f, "{i}")?;
                i = self.apply(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "(1)")?;
        }
        Ok(())
    }
}

/// Relabels every variable of `p` by `σ`.
pub fn apply_perm(sigma: &Perm, p: &TracePoly) -> Result<TracePoly> {
    let mut err = None;
    let out = p.substitute(|v| match sigma.relabel(v) {
        Ok(w) => Some(TracePoly::var(w)),
        Err(e) => {
            err = Some(e);
            Some(TracePoly::zero())
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// A formal integer combination of boundary permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymOperator {
    pub terms: Vec<(i64, Perm)>,
}

impl SymOperator {
    pub fn from_cycles(cycles: &[&str], n: usize) -> Result<Self> {
        let terms = cycles.iter().map(|c| Perm::parse_cycles(c, n).map(|p| (1, p))).collect::<Result<_>>()?;
        Ok(SymOperator { terms })
    }

    pub fn identity(n: usize) -> Self {
        SymOperator { terms: vec![(1, Perm::identity(n))] }
    }

    pub fn sigma1() -> Self {
        Self::from_cycles(
            &["(1)", "(34)", "(23)", "(123)", "(124)", "(142)", "(143)", "(13)(24)", "(1234)", "(1342)", "(1324)", "(1432)"],
            5,
        )
        .expect("built-in operator")
    }

    pub fn sigma2() -> Self {
        Self::from_cycles(&["(1)", "(1234)", "(13)(24)", "(1432)"], 5).expect("built-in operator")
    }

    pub fn sigma3() -> Self {
        Self::from_cycles(&["(1)", "(1432)"], 5).expect("built-in operator")
    }

    pub fn named(name: &str) -> Option<Self> {
        match name {
            "sigma1" => Some(Self::sigma1()),
            "sigma2" => Some(Self::sigma2()),
            "sigma3" => Some(Self::sigma3()),
            _ => None,
        }
    }

    /// All permutations carrying a non-zero coefficient.
    pub fn support(&self) -> Vec<Perm> {
        self.terms.iter().filter(|(k, _)| *k != 0).map(|(_, p)| p.clone()).collect()
    }
}

/// One base coefficient `𝔞` of the compressed form, placed at slot
/// `∂/∂u ∧ ∂/∂v` and spread by an optional operator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaseCoefficient {
    pub name: String,
    pub u: String,
    pub v: String,
    pub operator: Option<String>,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetricForm {
    surface: SurfaceTag,
    pub coefficients: Vec<BaseCoefficient>,
}

impl SymmetricForm {
    pub fn load(path: &Path) -> Result<SymmetricForm> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Data(format!("{}: {e}", path.display())))
    }

    pub fn surface(&self) -> (usize, usize) {
        (self.surface.n, self.surface.g)
    }
}

impl FromStr for SymmetricForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Expands the compressed form term by term. Two operator images landing in
/// the same slot must agree, otherwise the expansion is rejected.
pub fn expand_symmetric_form(form: &SymmetricForm) -> Result<Bivector> {
    let (n, g) = form.surface();
    let rank = 2 * g + n - 1;
    let mut bv = Bivector::new((n, g), TraceVar::basis(rank));
    let mut written: BTreeMap<(TraceVar, TraceVar), String> = BTreeMap::new();
    for c in &form.coefficients {
        let op = match &c.operator {
            None => SymOperator::identity(n),
            Some(name) => SymOperator::named(name).ok_or_else(|| Error::Data(format!("unknown operator {name:?} for {}", c.name)))?,
        };
        let (u, v): (TraceVar, TraceVar) = (c.u.parse()?, c.v.parse()?);
        let poly: TracePoly = c.poly.parse().map_err(|e| Error::Data(format!("coefficient {}: {e}", c.name)))?;
        for (k, sigma) in &op.terms {
            let (su, sv) = (sigma.relabel(&u)?, sigma.relabel(&v)?);
            let value = apply_perm(sigma, &poly)?.scale(&Rational::from_integer((*k).into()));
            let key = if su < sv { (su.clone(), sv.clone()) } else { (sv.clone(), su.clone()) };
            let source = format!("{sigma}·{}", c.name);
            if let Some(prev) = written.get(&key) {
                if bv.get(&su, &sv) != value {
                    return Err(Error::Data(format!("slot {{{}, {}}}: {source} conflicts with {prev}", key.0, key.1)));
                }
                continue;
            }
            bv.set(&su, &sv, value)?;
            written.insert(key, source);
        }
    }
    Ok(bv)
}

/// Image of a coordinate under the boundary permutation `σ` of `Σ_{n,0}`:
/// the sorted product of the permuted boundary loops, where the last loop
/// `c_n` is `(c1⋯c(n-1))⁻¹`, reduced back to coordinates.
pub fn boundary_perm_image(sigma: &Perm, v: &TraceVar) -> Result<TracePoly> {
    let n = sigma.n() as u32;
    let mut ix: Vec<u32> = v.indices().iter().map(|&i| sigma.apply(i)).collect();
    ix.sort_unstable();
    if !ix.contains(&n) {
        return Ok(TracePoly::var(TraceVar::new(&ix)));
    }
    let last = Word::from_indices(&(1..n).collect::<Vec<_>>()).invert();
    let w = ix.iter().fold(Word::empty(), |acc, &i| acc.concat(&if i == n { last.clone() } else { Word::from_indices(&[i]) }));
    reduce_trace(&w)
}

/// Outcome of testing all boundary permutations against a bi-vector.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub checked: usize,
    pub preserving: Vec<Perm>,
    /// For each rejected permutation, the first pair that fails.
    pub witnesses: Vec<(Perm, TraceVar, TraceVar, f64)>,
}

impl SymmetryReport {
    pub fn preserves(&self, sigma: &Perm) -> bool {
        self.preserving.contains(sigma)
    }

    /// Preserving permutations outside `documented`.
    pub fn beyond(&self, documented: &[Perm]) -> Vec<Perm> {
        self.preserving.iter().filter(|p| !documented.contains(p)).cloned().collect()
    }
}

/// Union of the supports of the three operators of the compressed form.
pub fn documented_symmetries() -> Vec<Perm> {
    let mut out: Vec<Perm> = [SymOperator::sigma1(), SymOperator::sigma2(), SymOperator::sigma3()].iter().flat_map(|o| o.support()).collect();
    out.sort();
    out.dedup();
    out
}

/// Tests every permutation of the `n` boundary labels of `Σ_{n,0}`: `σ`
/// preserves the bi-vector when `φ_σ{u,v} = {φ_σ u, φ_σ v}` for all
/// coordinate pairs. Images are compared exactly first and otherwise at
/// `samples` random points of the variety.
pub fn symmetry_exhaustion(bv: &Bivector, samples: usize, seed: u64) -> Result<SymmetryReport> {
    let (n, g) = bv.surface;
    if g != 0 || n < 3 || n - 1 > MAX_RANK {
        return Err(Error::Surface(format!("symmetry scan needs a punctured sphere of rank ≤ {MAX_RANK}, got ({n},{g})")));
    }
    let rank = n - 1;
    let points: Vec<HashMap<TraceVar, Complex64>> =
        (0..samples).map(|s| Representation::sample_stream(rank, seed, s as u64).coordinate_values()).collect();
    let pairs = bv.pairs();
    let perms = Perm::all(n);
    let outcomes: Vec<(Perm, Option<(TraceVar, TraceVar, f64)>)> = perms
        .into_par_iter()
        .map(|sigma| -> Result<_> {
            let image: HashMap<TraceVar, TracePoly> =
                bv.coordinates.iter().map(|v| boundary_perm_image(&sigma, v).map(|p| (v.clone(), p))).collect::<Result<_>>()?;
            for (u, v) in &pairs {
                let lhs = bv.get(u, v).substitute_map(&image)?;
                let (pu, pv) = (&image[u], &image[v]);
                if let (Some(x), Some(y)) = (single_var(pu), single_var(pv)) {
                    if lhs == bv.get(&x, &y) {
                        continue;
                    }
                }
                let mut worst: f64 = 0.0;
                for vals in &points {
                    let (rhs, mag) = bv.eval_bracket(pu, pv, vals)?;
                    let l = lhs.eval_map(vals)?;
                    let scale = mag.max(lhs.eval_magnitude(vals)?);
                    worst = worst.max(relative_residual(l, rhs, scale, MAGNITUDE_FLOOR));
                }
                if worst >= VARIETY_TOLERANCE {
                    return Ok((sigma, Some((u.clone(), v.clone(), worst))));
                }
            }
            Ok((sigma, None))
        })
        .collect::<Result<_>>()?;
    let mut report = SymmetryReport { checked: outcomes.len(), preserving: Vec::new(), witnesses: Vec::new() };
    for (sigma, bad) in outcomes {
        match bad {
            None => report.preserving.push(sigma),
            Some((u, v, r)) => report.witnesses.push((sigma, u, v, r)),
        }
    }
    Ok(report)
}

fn single_var(p: &TracePoly) -> Option<TraceVar> {
    let vars = p.variables();
    if vars.len() != 1 {
        return None;
    }
    let v = vars.into_iter().next().unwrap();
    (*p == TracePoly::var(v.clone())).then_some(v)
}
