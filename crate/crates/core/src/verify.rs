//! Checks of the engine against the checked-in datasets for `Σ_{5,0}`.

use std::fmt;
use std::path::Path;

use num_complex::Complex64;

use crate::bivector::{compute_bivector, MAGNITUDE_FLOOR, VARIETY_TOLERANCE, documented_symmetries, expand_symmetric_form, symmetry_exhaustion, Bivector, Perm, SymmetricForm, SymmetryReport};
use crate::data::{diagram_dir, golden_path, load_diagrams, symmetric_form_path, GoldenTable};
use crate::error::{Error, Result};
use crate::goldman::{bracket, bracket_from_data, DiagramData};
use crate::numeric::{relative_residual, Representation};
use crate::poly::{TracePoly, TraceVar};
use crate::reduce::reduce_trace;
use crate::surface::FatGraph;
use crate::word::Word;

/// One disagreement between two ways of obtaining a bracket.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub label: String,
    pub u: String,
    pub v: String,
    pub expected: TracePoly,
    pub computed: TracePoly,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {{{}, {}}}: expected {}, computed {}", self.label, self.u, self.v, self.expected, self.computed)
    }
}

/// Result of an exact entry-by-entry comparison.
#[derive(Clone, Debug, Default)]
pub struct Comparison {
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Comparison {
    pub fn passed(&self) -> bool {
        self.compared > 0 && self.mismatches.is_empty()
    }

    pub fn matched(&self) -> usize {
        self.compared - self.mismatches.len()
    }
}

/// Compares `bv` with the reference table, exactly.
pub fn check_golden(bv: &Bivector, table: &GoldenTable) -> Result<Comparison> {
    if (table.surface.n, table.surface.g) != bv.surface {
        return Err(Error::Data(format!("golden table is for ({},{}), bi-vector for {:?}", table.surface.n, table.surface.g, bv.surface)));
    }
    let mut out = Comparison::default();
    for e in &table.entries {
        let (u, v): (TraceVar, TraceVar) = (e.u.parse()?, e.v.parse()?);
        let expected: TracePoly = e.poly.parse().map_err(|err| Error::Data(format!("[{}] {err}", e.figure)))?;
        let computed = bv.get(&u, &v);
        out.compared += 1;
        if computed != expected {
            out.mismatches.push(Mismatch { label: e.figure.clone(), u: e.u.clone(), v: e.v.clone(), expected, computed });
        }
    }
    Ok(out)
}

/// Sums each diagram record and compares with the combinatorial bracket of
/// the same two curves on `fat`.
pub fn check_diagrams(fat: &FatGraph, diagrams: &[DiagramData]) -> Result<Comparison> {
    let mut out = Comparison::default();
    for d in diagrams {
        let expected = bracket_from_data(d)?;
        let computed = bracket(fat, &d.lhs_word()?, &d.rhs_word()?)?;
        out.compared += 1;
        if computed != expected {
            out.mismatches.push(Mismatch { label: d.figure.clone(), u: d.lhs.clone(), v: d.rhs.clone(), expected, computed });
        }
    }
    Ok(out)
}

/// Expands the compressed form and compares it with `bv` on every pair.
pub fn check_expansion(bv: &Bivector, form: &SymmetricForm) -> Result<Comparison> {
    let expanded = expand_symmetric_form(form)?;
    if expanded.surface != bv.surface || expanded.coordinates != bv.coordinates {
        return Err(Error::Data("compressed form is for a different surface".into()));
    }
    let mut out = Comparison::default();
    for (u, v) in bv.pairs() {
        let (expected, computed) = (expanded.get(&u, &v), bv.get(&u, &v));
        out.compared += 1;
        if expected != computed {
            out.mismatches.push(Mismatch { label: "expansion".into(), u: u.to_string(), v: v.to_string(), expected, computed });
        }
    }
    Ok(out)
}

/// Brackets of the boundary curves with every coordinate curve, which should
/// vanish exactly. The dependent boundary is also bracketed through its
/// reduced trace by the bi-derivation rule; that polynomial vanishes only on
/// the variety, so it is checked at sample points.
#[derive(Clone, Debug, Default)]
pub struct CasimirCheck {
    pub checked: usize,
    pub nonzero: Vec<(String, TraceVar, TracePoly)>,
    pub max_derived_residual: f64,
}

impl CasimirCheck {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.nonzero.is_empty() && self.max_derived_residual < VARIETY_TOLERANCE
    }
}

/// For a punctured sphere: the boundary curves `c1, ..., c(n-1)` and the
/// dependent boundary `c1⋯c(n-1)`.
pub fn check_casimirs(fat: &FatGraph, bv: &Bivector, samples: usize, seed: u64) -> Result<CasimirCheck> {
    if fat.genus() != 0 || (fat.n(), fat.genus()) != bv.surface {
        return Err(Error::Surface("the Casimir suite covers punctured spheres only".into()));
    }
    let rank = fat.rank() as u32;
    let all: Vec<u32> = (1..=rank).collect();
    let mut curves: Vec<Word> = (1..=rank).map(|i| Word::from_indices(&[i])).collect();
    curves.push(Word::from_indices(&all));
    let mut out = CasimirCheck::default();
    for c in &curves {
        for v in &bv.coordinates {
            let b = bracket(fat, c, &v.word())?;
            out.checked += 1;
            if !b.is_zero() {
                out.nonzero.push((format!("tr({c})"), v.clone(), b));
            }
        }
    }
    let boundary = reduce_trace(&Word::from_indices(&all))?;
    for s in 0..samples {
        let vals = Representation::sample_stream(fat.rank(), seed, s as u64).coordinate_values();
        for v in &bv.coordinates {
            let (value, magnitude) = bv.eval_bracket(&boundary, &TracePoly::var(v.clone()), &vals)?;
            let r = relative_residual(value, Complex64::new(0.0, 0.0), magnitude, MAGNITUDE_FLOOR);
            out.max_derived_residual = out.max_derived_residual.max(r);
        }
    }
    Ok(out)
}

/// Symmetry scan together with the permutations it finds outside the
/// supports of the documented operators.
#[derive(Clone, Debug)]
pub struct SymmetryCheck {
    pub report: SymmetryReport,
    pub beyond: Vec<Perm>,
}

impl SymmetryCheck {
    pub fn passed(&self) -> bool {
        let n = self.report.preserving.first().map_or(0, |p| p.n());
        self.beyond.is_empty() && self.report.preserving.len() < self.report.checked && self.report.preserves(&Perm::identity(n))
    }
}

pub fn check_symmetry(bv: &Bivector, samples: usize, seed: u64) -> Result<SymmetryCheck> {
    let report = symmetry_exhaustion(bv, samples, seed)?;
    let beyond = report.beyond(&documented_symmetries());
    Ok(SymmetryCheck { report, beyond })
}

/// Every check of the reference `Σ_{5,0}` data.
#[derive(Clone, Debug)]
pub struct PaperReport {
    pub golden: Comparison,
    pub diagrams: Comparison,
    pub expansion: Comparison,
    pub casimirs: CasimirCheck,
    pub symmetry: SymmetryCheck,
}

impl PaperReport {
    pub fn passed(&self) -> bool {
        self.golden.passed() && self.diagrams.passed() && self.expansion.passed() && self.casimirs.passed() && self.symmetry.passed()
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

impl fmt::Display for PaperReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.golden;
        writeln!(f, "golden brackets: {}/{} match [{}]", c.matched(), c.compared, status(c.passed()))?;
        for m in &c.mismatches {
            writeln!(f, "  {m}")?;
        }
        let c = &self.diagrams;
        writeln!(f, "diagram sums: {}/{} agree with the combinatorial bracket [{}]", c.matched(), c.compared, status(c.passed()))?;
        for m in &c.mismatches {
            writeln!(f, "  {m}")?;
        }
        let c = &self.expansion;
        writeln!(f, "symmetric form expansion: {}/{} entries agree [{}]", c.matched(), c.compared, status(c.passed()))?;
        for m in &c.mismatches {
            writeln!(f, "  {m}")?;
        }
        let c = &self.casimirs;
        writeln!(
            f,
            "casimirs: {} curve brackets, {} non-zero; dependent boundary on the variety: residual {:.1e} [{}]",
            c.checked,
            c.nonzero.len(),
            c.max_derived_residual,
            status(c.passed())
        )?;
        for (name, v, b) in &c.nonzero {
            writeln!(f, "  {{{name}, {v}}} = {b}")?;
        }
        let s = &self.symmetry;
        let list: Vec<String> = s.report.preserving.iter().map(|p| p.to_string()).collect();
        writeln!(f, "symmetry scan: {} of {} permutations preserve the bi-vector [{}]", list.len(), s.report.checked, status(s.passed()))?;
        writeln!(f, "  preserving: {}", list.join(" "))?;
        if !s.beyond.is_empty() {
            let extra: Vec<String> = s.beyond.iter().map(|p| p.to_string()).collect();
            writeln!(f, "  outside the documented operators: {}", extra.join(" "))?;
        }
        writeln!(f, "overall: {}", status(self.passed()))
    }
}

/// Runs every check against the datasets in `dir`.
pub fn verify_paper(dir: &Path, samples: usize, seed: u64) -> Result<PaperReport> {
    let fat = FatGraph::standard_model(5, 0)?;
    let bv = compute_bivector(&fat)?;
    let golden = check_golden(&bv, &GoldenTable::load(&golden_path(dir))?)?;
    let diagrams = check_diagrams(&fat, &load_diagrams(&diagram_dir(dir))?)?;
    let expansion = check_expansion(&bv, &SymmetricForm::load(&symmetric_form_path(dir))?)?;
    let casimirs = check_casimirs(&fat, &bv, samples, seed)?;
    let symmetry = check_symmetry(&bv, samples, seed)?;
    Ok(PaperReport { golden, diagrams, expansion, casimirs, symmetry })
}
