//! Homomorphisms between free groups and the maps they induce on trace
//! coordinates.
//!
//! A map of surfaces `q: Σ₁ → Σ₂` induces `q_#` on fundamental groups and
//! `ρ ↦ ρ ∘ q_#` on representations, so functions on the source variety pull
//! back to functions on the target variety.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bivector::{compute_bivector, Bivector, MAGNITUDE_FLOOR, VARIETY_TOLERANCE};
use crate::error::{Error, Result};
use crate::numeric::{relative_residual, Representation};
use crate::poly::{TracePoly, TraceVar};
use crate::reduce::reduce_trace;
use crate::surface::FatGraph;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    /// Sign relating the two brackets: `+1` for Poisson, `−1` for anti-Poisson.
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Preserving => 1.0,
            Orientation::Reversing => -1.0,
        }
    }
}

/// Generator `c_i` of the source goes to `images[i-1]` in the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeHom {
    source_rank: usize,
    target_rank: usize,
    images: Vec<Word>,
    pub orientation: Orientation,
}

impl FreeHom {
    pub fn new(target_rank: usize, images: Vec<Word>, orientation: Orientation) -> Result<Self> {
        for w in &images {
            w.check_rank(target_rank)?;
        }
        Ok(FreeHom { source_rank: images.len(), target_rank, images, orientation })
    }

    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank as u32).map(|i| Word::from_indices(&[i])).collect();
        FreeHom { source_rank: rank, target_rank: rank, images, orientation: Orientation::Preserving }
    }

    /// `c_i ↦ c_i` from rank `source` into rank `target ≥ source`.
    pub fn inclusion(source: usize, target: usize) -> Result<Self> {
        if source > target {
            return Err(Error::Data(format!("cannot include rank {source} into rank {target}")));
        }
        Self::new(target, (1..=source as u32).map(|i| Word::from_indices(&[i])).collect(), Orientation::Preserving)
    }

    /// Glues a disk onto the boundary `c_i` of a punctured sphere of the
    /// given rank: `c_i ↦ 1`, later generators shift down by one.
    pub fn disk_cap(rank: usize, i: u32) -> Result<Self> {
        if i == 0 || i as usize > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        let images = (1..=rank as u32)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => Word::from_indices(&[j]),
                std::cmp::Ordering::Equal => Word::empty(),
                std::cmp::Ordering::Greater => Word::from_indices(&[j - 1]),
            })
            .collect();
        Self::new(rank - 1, images, Orientation::Preserving)
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.check_rank(self.source_rank)?;
        Ok(w.substitute(|i| self.images[i as usize - 1].clone()))
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &FreeHom) -> Result<FreeHom> {
        if first.target_rank != self.source_rank {
            return Err(Error::Data(format!("cannot compose: rank {} into rank {}", first.target_rank, self.source_rank)));
        }
        let images = first.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>>>()?;
        let orientation = if self.orientation == first.orientation { Orientation::Preserving } else { Orientation::Reversing };
        Ok(FreeHom { source_rank: first.source_rank, target_rank: self.target_rank, images, orientation })
    }

    /// Image of a source coordinate as a target polynomial.
    pub fn pull_var(&self, v: &TraceVar) -> Result<TracePoly> {
        reduce_trace(&self.apply(&v.word())?)
    }

    /// `t[I] ↦ tr(h(c_I))` extended as a ring homomorphism.
    pub fn pullback(&self, p: &TracePoly) -> Result<TracePoly> {
        let images = p.variables().into_iter().map(|v| self.pull_var(&v).map(|q| (v, q))).collect::<Result<HashMap<_, _>>>()?;
        p.substitute_map(&images)
    }

    pub fn load(path: &Path) -> Result<FreeHom> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
        text.parse()
    }

    pub fn to_json(&self) -> Result<String> {
        let file = MapFile {
            source_rank: self.source_rank,
            target_rank: self.target_rank,
            orientation: self.orientation,
            images: self.images.iter().enumerate().map(|(i, w)| (format!("c{}", i + 1), w.to_string())).collect(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }
}

impl std::str::FromStr for FreeHom {
    type Err = Error;

    /// Map file: `{ "source_rank":3, "target_rank":4, "orientation":"preserving",
    /// "images": {"c1":"c1", ...} }`. Images use positional generator names.
    fn from_str(text: &str) -> Result<Self> {
        let file: MapFile = serde_json::from_str(text)?;
        let mut images = Vec::with_capacity(file.source_rank);
        for i in 1..=file.source_rank {
            let key = format!("c{i}");
            let w = file.images.get(&key).ok_or_else(|| Error::Data(format!("map has no image for {key}")))?;
            images.push(w.parse::<Word>()?);
        }
        if file.images.len() != file.source_rank {
            return Err(Error::Data(format!("map lists {} images for source rank {}", file.images.len(), file.source_rank)));
        }
        FreeHom::new(file.target_rank, images, file.orientation)
    }
}

#[derive(Serialize, Deserialize)]
struct MapFile {
    source_rank: usize,
    target_rank: usize,
    orientation: Orientation,
    images: BTreeMap<String, String>,
}

/// Outcome of [`poisson_check`].
#[derive(Clone, Debug)]
pub struct PoissonReport {
    pub pairs: usize,
    pub trials: usize,
    pub sign: f64,
    pub max_residual: f64,
    pub worst_pair: Option<(TraceVar, TraceVar)>,
}

impl PoissonReport {
    pub fn passed(&self) -> bool {
        self.max_residual < VARIETY_TOLERANCE
    }
}

/// Compares `h*{f,g}` with `±{h*f, h*g}` at random points of the target
/// variety, for every pair of source coordinates.
pub fn poisson_check(h: &FreeHom, source: &FatGraph, target: &FatGraph, trials: usize, seed: u64) -> Result<PoissonReport> {
    if source.rank() != h.source_rank || target.rank() != h.target_rank {
        return Err(Error::Data(format!(
            "map is rank {} → {}, surfaces are rank {} → {}",
            h.source_rank,
            h.target_rank,
            source.rank(),
            target.rank()
        )));
    }
    let src = compute_bivector(source)?;
    let tgt = compute_bivector(target)?;
    check_against(h, &src, &tgt, trials, seed)
}

/// [`poisson_check`] with both bi-vectors supplied.
pub fn check_against(h: &FreeHom, src: &Bivector, tgt: &Bivector, trials: usize, seed: u64) -> Result<PoissonReport> {
    let sign = h.orientation.sign();
    let pulled: HashMap<TraceVar, TracePoly> = src.coordinates.iter().map(|v| h.pull_var(v).map(|p| (v.clone(), p))).collect::<Result<_>>()?;
    let cases: Vec<(TraceVar, TraceVar, TracePoly)> = src
        .pairs()
        .into_iter()
        .map(|(u, v)| {
            let lhs = h.pullback(&src.get(&u, &v))?;
            Ok((u, v, lhs))
        })
        .collect::<Result<_>>()?;
    let per_trial: Vec<(f64, Option<(TraceVar, TraceVar)>)> = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<_> {
            let vals = Representation::sample_stream(h.target_rank.max(1), seed, trial as u64).coordinate_values();
            let mut worst = (0.0, None);
            for (u, v, lhs) in &cases {
                let l = if lhs.is_zero() { Complex64::new(0.0, 0.0) } else { lhs.eval_map(&vals)? };
                let (r, mag) = tgt.eval_bracket(&pulled[u], &pulled[v], &vals)?;
                let scale = mag.max(lhs.eval_magnitude(&vals)?);
                let res = relative_residual(l, r * sign, scale, MAGNITUDE_FLOOR);
                if res > worst.0 {
                    worst = (res, Some((u.clone(), v.clone())));
                }
            }
            Ok(worst)
        })
        .collect::<Result<_>>()?;
    let (max_residual, worst_pair) = per_trial.into_iter().fold((0.0, None), |acc, t| if t.0 > acc.0 { t } else { acc });
    Ok(PoissonReport { pairs: cases.len(), trials, sign, max_residual, worst_pair })
}
