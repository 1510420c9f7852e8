//! Variation operators of MOEA/D-DE.
//!
//! A DE mutation is configured by three orthogonal choices, captured in
//! [`MutationConfig`]: the [`Strategy`] that combines parents into a mutant,
//! the [`Selection`] method that draws parent indices, and the
//! [`Repair`] method that maps an infeasible mutant back into the box.
//! Binomial crossover and polynomial mutation complete the pipeline.

mod crossover;
mod mutation;
mod repair;
mod selection;

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

pub use crossover::{binomial_crossover, pm_sigma, polynomial_mutation};
pub use mutation::{mutate, mutate_into};
pub use repair::{repair, repair_coordinate, Repaired, ResampleContext, RESAMPLE_LIMIT};
pub use selection::{select_indices, Parents};

/// DE scale factor and crossover rate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeParams {
    pub scale: f64,
    pub crossover_rate: f64,
}

impl DeParams {
    pub fn new(scale: f64, crossover_rate: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::Config(format!("scale factor F must be > 0, got {scale}")));
        }
        if !(0.0..=1.0).contains(&crossover_rate) {
            return Err(Error::Config(format!(
                "crossover rate CR must lie in [0, 1], got {crossover_rate}"
            )));
        }
        Ok(Self {
            scale,
            crossover_rate,
        })
    }
}

impl Default for DeParams {
    /// `F = 0.5`, `CR = 1`.
    fn default() -> Self {
        Self {
            scale: 0.5,
            crossover_rate: 1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolynomialMutationParams {
    /// Per-variable mutation probability.
    pub rate: f64,
    /// Distribution index.
    pub eta: f64,
}

impl PolynomialMutationParams {
    pub fn new(rate: f64, eta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&rate) {
            return Err(Error::Config(format!("mutation rate must lie in [0, 1], got {rate}")));
        }
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(Error::Config(format!("distribution index must be > 0, got {eta}")));
        }
        Ok(Self { rate, eta })
    }

    /// `rate = 1 / D`, `eta = 20`.
    pub fn for_dimension(d: usize) -> Self {
        Self {
            rate: 1.0 / d as f64,
            eta: 20.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    /// `v = x^{r1} + F (x^{r2} - x^{r3})`
    Rand1,
    /// `v = x^i + F (x^{r1} - x^{r2})`
    Current1,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::Current1, Strategy::Rand1];

    pub fn parent_count(self) -> usize {
        match self {
            Strategy::Rand1 => 3,
            Strategy::Current1 => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Rand1 => "rand1",
            Strategy::Current1 => "current1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Selection {
    /// Without replacement: parents pairwise distinct and distinct from the target.
    Wor,
    /// With replacement: independent uniform draws.
    Wr,
    /// Partial replacement: parents pairwise distinct, the target allowed.
    Wpr,
}

impl Selection {
    pub const ALL: [Selection; 3] = [Selection::Wor, Selection::Wr, Selection::Wpr];

    pub fn as_str(self) -> &'static str {
        match self {
            Selection::Wor => "WOR",
            Selection::Wr => "WR",
            Selection::Wpr => "WPR",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Repair {
    Replacement,
    Reinitialization,
    Reflection,
    RandomReflection,
    Resampling,
}

impl Repair {
    pub const ALL: [Repair; 5] = [
        Repair::Replacement,
        Repair::Reinitialization,
        Repair::Reflection,
        Repair::RandomReflection,
        Repair::Resampling,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Repair::Replacement => "replacement",
            Repair::Reinitialization => "reinitialization",
            Repair::Reflection => "reflection",
            Repair::RandomReflection => "r-reflection",
            Repair::Resampling => "resampling",
        }
    }
}

fn normalized(s: &str) -> String {
    s.trim()
        .chars()
        .filter(|c| !matches!(c, '/' | '_' | ' '))
        .flat_map(char::to_lowercase)
        .collect()
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match normalized(s).as_str() {
            "rand1" => Ok(Strategy::Rand1),
            "current1" => Ok(Strategy::Current1),
            _ => Err(Error::Unsupported(format!("unknown mutation strategy {s:?}"))),
        }
    }
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match normalized(s).as_str() {
            "wor" => Ok(Selection::Wor),
            "wr" => Ok(Selection::Wr),
            "wpr" => Ok(Selection::Wpr),
            _ => Err(Error::Unsupported(format!("unknown index selection method {s:?}"))),
        }
    }
}

impl FromStr for Repair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match normalized(s).as_str() {
            "replacement" => Ok(Repair::Replacement),
            "reinitialization" => Ok(Repair::Reinitialization),
            "reflection" => Ok(Repair::Reflection),
            "r-reflection" | "rreflection" => Ok(Repair::RandomReflection),
            "resampling" => Ok(Repair::Resampling),
            _ => Err(Error::Unsupported(format!("unknown bound-handling method {s:?}"))),
        }
    }
}

macro_rules! display_via_as_str {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    )*};
}
display_via_as_str!(Strategy, Selection, Repair);

/// One of the 30 DE mutation configurations.
///
/// Its canonical identifier is `"<repair>/<strategy>/<selection>"`, e.g.
/// `"replacement/current1/WR"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MutationConfig {
    pub repair: Repair,
    pub strategy: Strategy,
    pub selection: Selection,
}

impl MutationConfig {
    pub const fn new(strategy: Strategy, selection: Selection, repair: Repair) -> Self {
        Self {
            repair,
            strategy,
            selection,
        }
    }

    /// All 30 configurations, ordered by repair, then strategy
    /// (current/1 first), then selection (WOR, WR, WPR).
    pub fn all() -> impl Iterator<Item = MutationConfig> {
        Repair::ALL.into_iter().flat_map(|repair| {
            Strategy::ALL.into_iter().flat_map(move |strategy| {
                Selection::ALL
                    .into_iter()
                    .map(move |selection| MutationConfig::new(strategy, selection, repair))
            })
        })
    }

    /// Configurations found in published MOEA/D-DE code, labelled `#A`..`#H`.
    pub const NAMED: [(&'static str, MutationConfig); 8] = {
        use Repair::*;
        use Selection::*;
        use Strategy::*;
        [
            ("#A", MutationConfig::new(Current1, Wr, Reinitialization)),
            ("#B", MutationConfig::new(Current1, Wpr, Replacement)),
            ("#C", MutationConfig::new(Rand1, Wor, Replacement)),
            ("#D", MutationConfig::new(Rand1, Wpr, Replacement)),
            ("#E", MutationConfig::new(Current1, Wor, RandomReflection)),
            ("#F", MutationConfig::new(Current1, Wor, Replacement)),
            ("#G", MutationConfig::new(Rand1, Wor, RandomReflection)),
            ("#H", MutationConfig::new(Current1, Wpr, RandomReflection)),
        ]
    };

    pub fn named(label: &str) -> Option<MutationConfig> {
        let label = label.trim();
        let label = label.strip_prefix('#').unwrap_or(label);
        Self::NAMED
            .iter()
            .find(|(l, _)| l[1..].eq_ignore_ascii_case(label))
            .map(|&(_, c)| c)
    }

    pub fn label(&self) -> Option<&'static str> {
        Self::NAMED.iter().find(|(_, c)| c == self).map(|&(l, _)| l)
    }

    /// Builds a configuration from the three string fields used in
    /// experiment files, e.g. `("current1", "WR", "replacement")`.
    pub fn from_fields(strategy: &str, selection: &str, repair: &str) -> Result<Self> {
        Ok(Self::new(strategy.parse()?, selection.parse()?, repair.parse()?))
    }
}

impl fmt::Display for MutationConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.repair, self.strategy, self.selection)
    }
}

impl FromStr for MutationConfig {
    type Err = Error;

    /// Accepts the canonical `repair/strategy/selection` form or a
    /// `#A`..`#H` label.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('#') {
            return Self::named(s)
                .ok_or_else(|| Error::Unsupported(format!("unknown configuration label {s:?}")));
        }
        let mut parts = s.split('/');
        match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(repair), Some(strategy), Some(selection), None) => {
                Self::from_fields(strategy, selection, repair)
            }
            _ => Err(Error::Unsupported(format!(
                "configuration {s:?} is not repair/strategy/selection"
            ))),
        }
    }
}
