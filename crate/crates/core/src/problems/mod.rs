//! DTLZ1-7 and WFG1-9 with the dimension rules used in the study:
//!
//! - DTLZ: `D = M + k - 1` with `k = 5` (DTLZ1), `20` (DTLZ7), `10` otherwise.
//! - WFG: `k = 2(M - 1)` position and `l = 20` distance parameters.
//!
//! DTLZ variables live in `[0, 1]`, WFG variable `j` (1-based) in `[0, 2j]`.
//! Problems are addressed by keys of the form `"DTLZ2/M3"`.

mod dtlz;
mod wfg;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::types::Bounds;

pub const MIN_OBJECTIVES: usize = 2;
pub const MAX_OBJECTIVES: usize = 5;
pub const WFG_DISTANCE_PARAMS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemId {
    Dtlz1,
    Dtlz2,
    Dtlz3,
    Dtlz4,
    Dtlz5,
    Dtlz6,
    Dtlz7,
    Wfg1,
    Wfg2,
    Wfg3,
    Wfg4,
    Wfg5,
    Wfg6,
    Wfg7,
    Wfg8,
    Wfg9,
}

impl ProblemId {
    pub const ALL: [ProblemId; 16] = [
        ProblemId::Dtlz1,
        ProblemId::Dtlz2,
        ProblemId::Dtlz3,
        ProblemId::Dtlz4,
        ProblemId::Dtlz5,
        ProblemId::Dtlz6,
        ProblemId::Dtlz7,
        ProblemId::Wfg1,
        ProblemId::Wfg2,
        ProblemId::Wfg3,
        ProblemId::Wfg4,
        ProblemId::Wfg5,
        ProblemId::Wfg6,
        ProblemId::Wfg7,
        ProblemId::Wfg8,
        ProblemId::Wfg9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemId::Dtlz1 => "DTLZ1",
            ProblemId::Dtlz2 => "DTLZ2",
            ProblemId::Dtlz3 => "DTLZ3",
            ProblemId::Dtlz4 => "DTLZ4",
            ProblemId::Dtlz5 => "DTLZ5",
            ProblemId::Dtlz6 => "DTLZ6",
            ProblemId::Dtlz7 => "DTLZ7",
            ProblemId::Wfg1 => "WFG1",
            ProblemId::Wfg2 => "WFG2",
            ProblemId::Wfg3 => "WFG3",
            ProblemId::Wfg4 => "WFG4",
            ProblemId::Wfg5 => "WFG5",
            ProblemId::Wfg6 => "WFG6",
            ProblemId::Wfg7 => "WFG7",
            ProblemId::Wfg8 => "WFG8",
            ProblemId::Wfg9 => "WFG9",
        }
    }

    pub fn is_wfg(self) -> bool {
        self >= ProblemId::Wfg1
    }

    /// Front shape and difficulty tags.
    pub fn properties(self) -> &'static [Property] {
        use Property::*;
        match self {
            ProblemId::Dtlz1 => &[Linear, Multimodal],
            ProblemId::Dtlz2 => &[Nonconvex],
            ProblemId::Dtlz3 => &[Nonconvex, Multimodal],
            ProblemId::Dtlz4 => &[Nonconvex, Biased],
            ProblemId::Dtlz5 => &[PartiallyDegenerate],
            ProblemId::Dtlz6 => &[PartiallyDegenerate],
            ProblemId::Dtlz7 => &[Disconnected, Multimodal],
            ProblemId::Wfg1 => &[Mixed, Biased],
            ProblemId::Wfg2 => &[Disconnected, Multimodal, Nonseparable],
            ProblemId::Wfg3 => &[PartiallyDegenerate, Nonseparable],
            ProblemId::Wfg4 => &[Nonconvex, Multimodal],
            ProblemId::Wfg5 => &[Nonconvex, Deceptive],
            ProblemId::Wfg6 => &[Nonconvex, Nonseparable],
            ProblemId::Wfg7 => &[Nonconvex, Biased],
            ProblemId::Wfg8 => &[Nonconvex, Nonseparable, Biased],
            ProblemId::Wfg9 => &[Nonconvex, Multimodal, Nonseparable, Deceptive, Biased],
        }
    }

    pub fn has(self, property: Property) -> bool {
        self.properties().contains(&property)
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProblemId::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unsupported(format!("unknown problem {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Linear,
    Nonconvex,
    Mixed,
    Disconnected,
    PartiallyDegenerate,
    Multimodal,
    Nonseparable,
    Biased,
    Deceptive,
}

/// One problem instance: a suite member at a given objective count.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    pub id: ProblemId,
    /// Objective count.
    pub m: usize,
    /// Decision dimension.
    pub d: usize,
    /// Position-related parameters.
    pub k: usize,
    /// Distance-related parameters (`D - (M - 1)` for DTLZ).
    pub l: usize,
    pub bounds: Bounds,
}

impl ProblemSpec {
    pub fn new(id: ProblemId, m: usize) -> Result<Self> {
        if !(MIN_OBJECTIVES..=MAX_OBJECTIVES).contains(&m) {
            return Err(Error::Unsupported(format!(
                "{id} with M = {m}; supported objective counts are {MIN_OBJECTIVES}..={MAX_OBJECTIVES}"
            )));
        }
        let (k, l, d, bounds) = if id.is_wfg() {
            let k = 2 * (m - 1);
            let l = WFG_DISTANCE_PARAMS;
            let d = k + l;
            let upper = (1..=d).map(|j| 2.0 * j as f64).collect();
            (k, l, d, Bounds::new(vec![0.0; d], upper)?)
        } else {
            let k = match id {
                ProblemId::Dtlz1 => 5,
                ProblemId::Dtlz7 => 20,
                _ => 10,
            };
            let d = m + k - 1;
            (k, k, d, Bounds::unit(d))
        };
        Ok(Self {
            id,
            m,
            d,
            k,
            l,
            bounds,
        })
    }

    /// Parses `"<PROBLEM>/M<count>"`, e.g. `"WFG7/M5"`.
    pub fn from_key(key: &str) -> Result<Self> {
        let (name, m) = key
            .split_once('/')
            .ok_or_else(|| Error::Unsupported(format!("problem key {key:?} is not NAME/M<count>")))?;
        let m = m
            .trim()
            .strip_prefix(['M', 'm'])
            .and_then(|m| m.parse::<usize>().ok())
            .ok_or_else(|| Error::Unsupported(format!("problem key {key:?} is not NAME/M<count>")))?;
        Self::new(name.parse()?, m)
    }

    pub fn key(&self) -> String {
        format!("{}/M{}", self.id, self.m)
    }

    pub fn properties(&self) -> &'static [Property] {
        self.id.properties()
    }

    /// Objective vector of `x`. Fails if `x` has the wrong length or lies
    /// outside the box.
    pub fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.bounds.check(x)?;
        let mut f = vec![0.0; self.m];
        self.evaluate_into(x, &mut f);
        Ok(f)
    }

    /// Unchecked variant for callers that already guarantee feasibility.
    pub(crate) fn evaluate_into(&self, x: &[f64], f: &mut [f64]) {
        debug_assert!(self.bounds.contains(x));
        debug_assert_eq!(f.len(), self.m);
        match self.id {
            ProblemId::Dtlz1 => dtlz::dtlz1(x, self.m, f),
            ProblemId::Dtlz2 => dtlz::dtlz2(x, self.m, f),
            ProblemId::Dtlz3 => dtlz::dtlz3(x, self.m, f),
            ProblemId::Dtlz4 => dtlz::dtlz4(x, self.m, f),
            ProblemId::Dtlz5 => dtlz::dtlz5(x, self.m, f),
            ProblemId::Dtlz6 => dtlz::dtlz6(x, self.m, f),
            ProblemId::Dtlz7 => dtlz::dtlz7(x, self.m, f),
            ProblemId::Wfg1 => wfg::wfg1(x, self.m, self.k, f),
            ProblemId::Wfg2 => wfg::wfg2(x, self.m, self.k, f),
            ProblemId::Wfg3 => wfg::wfg3(x, self.m, self.k, f),
            ProblemId::Wfg4 => wfg::wfg4(x, self.m, self.k, f),
            ProblemId::Wfg5 => wfg::wfg5(x, self.m, self.k, f),
            ProblemId::Wfg6 => wfg::wfg6(x, self.m, self.k, f),
            ProblemId::Wfg7 => wfg::wfg7(x, self.m, self.k, f),
            ProblemId::Wfg8 => wfg::wfg8(x, self.m, self.k, f),
            ProblemId::Wfg9 => wfg::wfg9(x, self.m, self.k, f),
        }
    }

    /// Ideal and nadir points of the true Pareto front.
    pub fn reference_points(&self) -> (Vec<f64>, Vec<f64>) {
        reference_points(self.id, self.m)
    }
}

/// Location of the largest `x (1 + sin 3 pi x)` on `[0, 1]`, and that value.
/// These fix the extent of the disconnected DTLZ7 front.
pub const DTLZ7_KNEE_X: f64 = 0.859_400_856_691_981_4;
pub const DTLZ7_KNEE_T: f64 = 1.692_995_634_498_422_5;

/// Analytic ideal and nadir of the Pareto front of `id` with `m` objectives.
///
/// Degenerate fronts (DTLZ5, DTLZ6, WFG3) use their degenerate-curve
/// parameterization; DTLZ7 uses the frozen knee constants above.
pub fn reference_points(id: ProblemId, m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut ideal = vec![0.0; m];
    let nadir: Vec<f64> = match id {
        ProblemId::Dtlz1 => vec![0.5; m],
        ProblemId::Dtlz2 | ProblemId::Dtlz3 | ProblemId::Dtlz4 => vec![1.0; m],
        ProblemId::Dtlz5 | ProblemId::Dtlz6 => {
            // Curve f = (c^{M-2} cos t, c^{M-2} cos t, c^{M-3} cos t, ..., c cos t, sin t)
            // with c = sqrt(1/2).
            let c = core::f64::consts::FRAC_1_SQRT_2;
            (1..=m)
                .map(|i| match i {
                    _ if i == m => 1.0,
                    1 => libm::pow(c, (m - 2) as f64),
                    _ => libm::pow(c, (m - i) as f64),
                })
                .collect()
        }
        ProblemId::Dtlz7 => {
            ideal[m - 1] = 2.0 * m as f64 - (m - 1) as f64 * DTLZ7_KNEE_T;
            let mut n = vec![DTLZ7_KNEE_X; m];
            n[m - 1] = 2.0 * m as f64;
            n
        }
        ProblemId::Wfg3 => (1..=m)
            .map(|i| {
                // Degenerate linear front: x_2..x_{M-1} fixed at 0.5.
                let h = match i {
                    _ if i == m => 1.0,
                    1 => libm::pow(0.5, (m - 2) as f64),
                    _ => libm::pow(0.5, (m - i) as f64),
                };
                2.0 * i as f64 * h
            })
            .collect(),
        _ => (1..=m).map(|i| 2.0 * i as f64).collect(),
    };
    (ideal, nadir)
}
