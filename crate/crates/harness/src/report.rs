use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use moeadde_core::indicators::{aps, competition_ranks, performance_scores, ALPHA};
use moeadde_core::operators::MutationConfig;
use moeadde_core::problems::{ProblemId, Property};

use crate::error::{HarnessError, Result};
use crate::records::RunRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grouping {
    /// One group per objective count.
    Objectives,
    /// Unimodal, multimodal, separable and nonseparable problems.
    ProblemType,
    Problem,
}

impl FromStr for Grouping {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(Self::Objectives),
            "problem-type" => Ok(Self::ProblemType),
            "problem" => Ok(Self::Problem),
            _ => Err(HarnessError::Plan(format!("unknown grouping {s:?}; use M, problem-type or problem"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemType {
    Unimodal,
    Multimodal,
    Separable,
    Nonseparable,
}

impl ProblemType {
    pub const ALL: [ProblemType; 4] = [
        ProblemType::Unimodal,
        ProblemType::Multimodal,
        ProblemType::Separable,
        ProblemType::Nonseparable,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ProblemType::Unimodal => "unimodal",
            ProblemType::Multimodal => "multimodal",
            ProblemType::Separable => "separable",
            ProblemType::Nonseparable => "nonseparable",
        }
    }

    pub fn contains(self, id: ProblemId) -> bool {
        match self {
            ProblemType::Unimodal => !id.has(Property::Multimodal),
            ProblemType::Multimodal => id.has(Property::Multimodal),
            ProblemType::Separable => !id.has(Property::Nonseparable),
            ProblemType::Nonseparable => id.has(Property::Nonseparable),
        }
    }
}

type Member = Box<dyn Fn(ProblemId, usize) -> bool>;

/// APS per configuration (rows) and group (columns).
#[derive(Clone, Debug, PartialEq)]
pub struct ReportTable {
    pub grouping: Grouping,
    pub configs: Vec<String>,
    pub groups: Vec<String>,
    /// `aps[config][group]`, `None` where the group has no complete instance.
    pub aps: Vec<Vec<Option<f64>>>,
    /// Competition ranks within each group, lowest APS first.
    pub ranks: Vec<Vec<Option<usize>>>,
    /// Mean rank over the groups with data.
    pub average_rank: Vec<Option<f64>>,
    pub warnings: Vec<String>,
}

/// Scores every (problem, M) instance and averages them into APS per group.
///
/// An instance where some configuration has fewer than two runs is left
/// out with a warning.
pub fn report_aps(records: &[RunRecord], grouping: Grouping) -> Result<ReportTable> {
    let mut configs: Vec<String> = Vec::new();
    let mut instances: Vec<(String, usize)> = Vec::new();
    let mut samples: HashMap<(String, usize, String), Vec<f64>> = HashMap::new();
    for r in records {
        if !configs.contains(&r.config) {
            configs.push(r.config.clone());
        }
        let inst = (r.problem.clone(), r.m);
        if !instances.contains(&inst) {
            instances.push(inst);
        }
        samples.entry((r.problem.clone(), r.m, r.config.clone())).or_default().push(r.hv);
    }
    let mut warnings = Vec::new();

    // Per complete instance: one score per configuration.
    let mut scored: Vec<((ProblemId, usize), Vec<usize>)> = Vec::new();
    for (problem, m) in &instances {
        let id: ProblemId = problem.parse()?;
        let columns: Vec<&[f64]> = configs
            .iter()
            .map(|c| samples.get(&(problem.clone(), *m, c.clone())).map_or(&[][..], Vec::as_slice))
            .collect();
        let short: Vec<String> = configs
            .iter()
            .zip(&columns)
            .filter(|(_, s)| s.len() < 2)
            .map(|(c, s)| format!("{c} ({} runs)", s.len()))
            .collect();
        if !short.is_empty() {
            warnings.push(format!("{problem}/M{m} left out: {}", short.join(", ")));
            continue;
        }
        let scores = if configs.len() < 2 {
            vec![0; configs.len()]
        } else {
            performance_scores(&columns, ALPHA)?
        };
        scored.push(((id, *m), scores));
    }

    let group_defs: Vec<(String, Member)> = match grouping {
        Grouping::Objectives => {
            let mut ms: Vec<usize> = instances.iter().map(|i| i.1).collect();
            ms.sort_unstable();
            ms.dedup();
            ms.into_iter()
                .map(|m| (format!("M={m}"), Box::new(move |_, mm| mm == m) as Member))
                .collect()
        }
        Grouping::ProblemType => ProblemType::ALL
            .into_iter()
            .map(|t| (t.label().to_string(), Box::new(move |id, _| t.contains(id)) as Member))
            .collect(),
        Grouping::Problem => {
            let mut ids: Vec<ProblemId> = Vec::new();
            for (p, _) in &instances {
                let id: ProblemId = p.parse()?;
                if !ids.contains(&id) {
                    ids.push(id);
                }
            }
            ids.sort();
            ids.into_iter()
                .map(|id| (id.name().to_string(), Box::new(move |p, _| p == id) as Member))
                .collect()
        }
    };

    let n = configs.len();
    let mut aps_cols = Vec::new();
    let mut rank_cols = Vec::new();
    let mut groups = Vec::new();
    for (label, member) in &group_defs {
        let rows: Vec<&Vec<usize>> = scored.iter().filter(|((id, m), _)| member(*id, *m)).map(|(_, s)| s).collect();
        if rows.is_empty() {
            if grouping != Grouping::ProblemType || instances.iter().any(|(p, m)| p.parse().is_ok_and(|id| member(id, *m))) {
                warnings.push(format!("group {label} has no complete instance"));
            }
            aps_cols.push(vec![None; n]);
            rank_cols.push(vec![None; n]);
        } else {
            let values = aps(&rows)?;
            rank_cols.push(competition_ranks(&values).into_iter().map(Some).collect());
            aps_cols.push(values.into_iter().map(Some).collect());
        }
        groups.push(label.clone());
    }

    let transpose = |cols: &Vec<Vec<Option<f64>>>| -> Vec<Vec<Option<f64>>> {
        (0..n).map(|c| cols.iter().map(|col| col[c]).collect()).collect()
    };
    let aps_rows = transpose(&aps_cols);
    let rank_rows: Vec<Vec<Option<usize>>> = (0..n).map(|c| rank_cols.iter().map(|col| col[c]).collect()).collect();
    let average_rank = rank_rows
        .iter()
        .map(|r| {
            let have: Vec<usize> = r.iter().flatten().copied().collect();
            (!have.is_empty()).then(|| have.iter().sum::<usize>() as f64 / have.len() as f64)
        })
        .collect();
    Ok(ReportTable {
        grouping,
        configs,
        groups,
        aps: aps_rows,
        ranks: rank_rows,
        average_rank,
        warnings,
    })
}

impl ReportTable {
    pub fn config_index(&self, config: &str) -> Option<usize> {
        self.configs.iter().position(|c| c == config)
    }
}

/// `"1.25 (3)"`, or `"-"` for a gap.
pub fn format_cell(aps: Option<f64>, rank: Option<usize>) -> String {
    match (aps, rank) {
        (Some(a), Some(r)) => format!("{a:.2} ({r})"),
        _ => "-".to_string(),
    }
}

impl fmt::Display for ReportTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .configs
            .iter()
            .map(|c| match c.parse::<MutationConfig>().ok().and_then(|m| m.label()) {
                Some(label) => format!("{c} {label}"),
                None => c.clone(),
            })
            .collect();
        let first = names.iter().map(String::len).max().unwrap_or(0).max("config".len());
        let cells: Vec<Vec<String>> = (0..self.configs.len())
            .map(|c| (0..self.groups.len()).map(|g| format_cell(self.aps[c][g], self.ranks[c][g])).collect())
            .collect();
        let width: Vec<usize> = (0..self.groups.len())
            .map(|g| cells.iter().map(|r| r[g].len()).chain([self.groups[g].len()]).max().unwrap_or(1))
            .collect();
        write!(f, "{:<first$}", "config")?;
        for (g, label) in self.groups.iter().enumerate() {
            write!(f, "  {:>w$}", label, w = width[g])?;
        }
        writeln!(f, "  avg rank")?;
        for (c, name) in names.iter().enumerate() {
            write!(f, "{name:<first$}")?;
            for (g, cell) in cells[c].iter().enumerate() {
                write!(f, "  {:>w$}", cell, w = width[g])?;
            }
            match self.average_rank[c] {
                Some(r) => writeln!(f, "  {r:>8.2}")?,
                None => writeln!(f, "  {:>8}", "-")?,
            }
        }
        Ok(())
    }
}
