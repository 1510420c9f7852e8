//! Front quality and statistical comparison.
//!
//! Fronts are normalized with the true ideal and nadir points, measured by
//! exact hypervolume against `(1.1, ..., 1.1)`, and algorithms are compared
//! per instance by counting who significantly beats whom (Wilcoxon rank-sum
//! at `alpha = 0.05`). The per-instance counts average into APS.

mod hypervolume;
mod normalize;
mod scores;
mod wilcoxon;

pub use hypervolume::{hypervolume, normalized_hypervolume, HV_REFERENCE};
pub use normalize::{normalize_front, NormalizationBounds};
pub use scores::{aps, competition_ranks, median, outperforms, performance_scores, ApsTable, ALPHA};
pub use wilcoxon::wilcoxon_rank_sum;
