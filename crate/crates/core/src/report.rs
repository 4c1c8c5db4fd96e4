//! Serializable summary of an [`Analysis`].

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::autgroup::SignReport;
use crate::braid::reduced_word;
use crate::exchange::{HalfMatrix, IntMatrix};
use crate::plabic::Anomalies;
use crate::variety::DimensionReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PermutationInfo {
    pub word: Vec<usize>,
    pub one_line: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub n: usize,
    pub u: PermutationInfo,
    pub beta: Vec<usize>,
    /// Bridge positions.
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub m: usize,
    pub f: usize,
    /// Origin position of each vertex, in vertex order.
    pub vertex_order: Vec<usize>,
    pub boundaries: Vec<Vec<i64>>,
    #[serde(rename = "H")]
    pub h: HalfMatrix,
    #[serde(rename = "D")]
    pub d: HalfMatrix,
    #[serde(rename = "Bhat")]
    pub bhat: IntMatrix,
    pub det: i64,
    #[serde(rename = "A")]
    pub a: IntMatrix,
    pub torus_weights: IntMatrix,
    pub torus_action: Vec<String>,
    pub sign_report: SignReport,
    #[serde(rename = "anomalyCounters")]
    pub anomalies: Anomalies,
    pub dimension: DimensionReport,
}

impl AnalysisReport {
    pub fn from_analysis(an: &Analysis) -> AnalysisReport {
        AnalysisReport {
            n: an.beta.n(),
            u: PermutationInfo { word: reduced_word(&an.u).letters().to_vec(), one_line: an.u.images().to_vec() },
            beta: an.beta.letters().to_vec(),
            j: an.trace.bridges.iter().copied().collect(),
            m: an.m(),
            f: an.f(),
            vertex_order: an.films.vertex_order(),
            boundaries: an.films.boundaries(),
            h: an.h.clone(),
            d: an.d.clone(),
            bhat: an.bhat().clone(),
            det: an.assembled.det,
            a: an.a.clone(),
            torus_weights: an.torus.weights.clone(),
            torus_action: an.torus.render_all(),
            sign_report: an.sign.clone(),
            anomalies: an.films.anomalies,
            dimension: an.dimension.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<AnalysisReport> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering.
    pub fn pretty(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        writeln!(out, "n = {}", self.n).unwrap();
        writeln!(out, "u = ({}) = [{}]", join(&self.u.word), join(&self.u.one_line)).unwrap();
        writeln!(out, "beta = ({})", join(&self.beta)).unwrap();
        writeln!(out, "J = {{{}}}", join(&self.j)).unwrap();
        writeln!(out, "m = {}, f = {}", self.m, self.f).unwrap();
        writeln!(out, "vertex order (origin positions) = {}", join(&self.vertex_order)).unwrap();
        for (i, b) in self.boundaries.iter().enumerate() {
            let entries: Vec<String> = b.iter().map(i64::to_string).collect();
            writeln!(out, "  boundary of vertex {} = ({})", i + 1, entries.join(",")).unwrap();
        }
        writeln!(out, "\nH =\n{}", self.h).unwrap();
        writeln!(out, "D =\n{}", self.d).unwrap();
        writeln!(out, "Bhat =\n{}", self.bhat).unwrap();
        writeln!(out, "det = {}", self.det).unwrap();
        writeln!(out, "\nA =\n{}", self.a).unwrap();
        writeln!(out, "torus action:").unwrap();
        for line in &self.torus_action {
            writeln!(out, "  {line}").unwrap();
        }
        writeln!(out, "all entries of A nonpositive: {}", self.sign_report.all_nonpositive).unwrap();
        for v in &self.sign_report.violations {
            writeln!(out, "  A[{},{}] = {}", v.row, v.col, v.entry).unwrap();
        }
        let an = &self.anomalies;
        writeln!(
            out,
            "anomalies: pinched {}, interior crossings {}, dropped markers {}, multiplicity > 1 {}",
            an.pinched_sheets, an.interior_crossings, an.dropped_markers, an.high_multiplicity
        )
        .unwrap();
        if let Some(dim) = self.dimension.dim {
            writeln!(out, "dimension = {dim}, variables = {}", self.dimension.s).unwrap();
        }
        out
    }
}
