//! The full pipeline from `(u, β)` to seed data, and its self-checks.

use serde::{Deserialize, Serialize};

use crate::autgroup::{is_direct_summand, kernel_basis, sign_report, torus_action, SignReport, TorusAction};
use crate::braid::{demazure_trace, BraidWord, DemazureTrace, Permutation};
use crate::error::{Error, Result};
use crate::exchange::{
    assemble_bhat, boundary_correction_matrix, half_arrow_matrix, inductive::inductive_build_diagram,
    quiver_from_half_arrows, unimodular_inverse, Assembled, HalfMatrix, IntMatrix, Quiver,
};
use crate::par::Execution;
use crate::plabic::{build_diagram, propagate_films_with, FilmSet, PlabicDiagram};
use crate::variety::{dimension_report, DimensionReport};

#[derive(Clone, Debug)]
pub struct Analysis {
    pub u: Permutation,
    pub beta: BraidWord,
    pub trace: DemazureTrace,
    pub diagram: PlabicDiagram,
    pub films: FilmSet,
    pub h: HalfMatrix,
    pub d: HalfMatrix,
    pub assembled: Assembled,
    pub a: IntMatrix,
    pub torus: TorusAction,
    pub sign: SignReport,
    pub quiver: Quiver,
    pub dimension: DimensionReport,
}

pub fn analyze(u: &Permutation, beta: &BraidWord) -> Result<Analysis> {
    analyze_with(u, beta, Execution::Sequential)
}

/// `exec` controls how the films of one instance are swept.
pub fn analyze_with(u: &Permutation, beta: &BraidWord, exec: Execution) -> Result<Analysis> {
    if u.n() != beta.n() {
        return Err(Error::StrandMismatch { perm: u.n(), word: beta.n() });
    }
    let trace = demazure_trace(u, beta)?;
    let diagram = build_diagram(u, beta)?;
    let films = propagate_films_with(&diagram, exec)?;
    let (m, f) = (films.m, films.f);
    let h = half_arrow_matrix(&diagram, &films)?;
    let d = boundary_correction_matrix(&films)?;
    let assembled = assemble_bhat(&h, &d, m, f)?;
    let a = unimodular_inverse(&assembled.bhat)?;
    let torus = torus_action(&a, m, f)?;
    let sign = sign_report(&a);
    let quiver = quiver_from_half_arrows(&h, m, f)?;
    let dimension = dimension_report(u, beta)?;
    Ok(Analysis { u: u.clone(), beta: beta.clone(), trace, diagram, films, h, d, assembled, a, torus, sign, quiver, dimension })
}

/// Outcome of one named validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Analysis {
    pub fn m(&self) -> usize {
        self.films.m
    }

    pub fn f(&self) -> usize {
        self.films.f
    }

    pub fn bhat(&self) -> &IntMatrix {
        &self.assembled.bhat
    }

    /// Runs every structural check; never fails early.
    pub fn check(&self) -> Vec<CheckItem> {
        let (m, f) = (self.m(), self.f());
        let mut items = Vec::new();
        let mut push = |name: &str, passed: bool, detail: String| {
            items.push(CheckItem { name: name.to_string(), passed, detail });
        };

        let h_skew = self.h.is_skew_symmetric();
        let h_int = (0..m + f).all(|i| (0..m + f).all(|j| (i >= m && j >= m) || self.h.get(i, j).is_integer()));
        push("half-arrow matrix skew-symmetric", h_skew && h_int, String::new());

        let d_sym = self.d.is_symmetric();
        let d_zero = (0..m).all(|i| self.d.row(i).iter().all(|x| *x == crate::Half::ZERO));
        push("boundary correction symmetric, zero on mutables", d_sym && d_zero, String::new());

        let frozen_ok = self.films.films.iter().all(|film| film.frozen == film.boundary.iter().any(|&x| x != 0));
        push("frozen iff boundary nonzero", frozen_ok, String::new());

        let det = crate::exchange::determinant(self.bhat());
        let expected = crate::exchange::expected_determinant(m, f);
        push(
            "determinant",
            det.as_ref().is_ok_and(|&d| d == i128::from(expected)),
            format!("{det:?}, expected {expected}"),
        );

        let inverse_ok = self.bhat().checked_mul(&self.a).is_ok_and(|p| p.is_identity())
            && self.a.checked_mul(self.bhat()).is_ok_and(|p| p.is_identity());
        push("A is the inverse of B̂", inverse_ok, String::new());

        let kernel = kernel_basis(self.bhat(), &self.a, m, f);
        push("kernel of extended exchange matrix", kernel.is_ok(), kernel.as_ref().err().map(ToString::to_string).unwrap_or_default());
        let summand = kernel.as_ref().map(|k| is_direct_summand(k));
        push(
            "kernel vectors span a direct summand",
            matches!(summand, Ok(Ok(true))),
            String::new(),
        );

        // For u = id every letter leaves exactly one frozen film; otherwise
        // letters consumed by u may leave none.
        let letters = self.beta.distinct_letters();
        push(
            "f equals the number of distinct letters when u = id",
            !self.u.is_identity() || f == letters,
            format!("f = {f}, letters = {letters}"),
        );

        match inductive_build_diagram(&self.diagram) {
            Ok(ind) => {
                let agree = ind.bhat == *self.bhat() && ind.a == self.a && ind.vertex_order == self.films.vertex_order();
                push("inductive route agrees", agree, String::new());
            }
            Err(e) => push("inductive route agrees", false, e.to_string()),
        }

        push("dimension formulas agree", self.dimension.formulas_agree, format!("{:?}", self.dimension));
        items
    }

    pub fn check_all(&self) -> Result<()> {
        match self.check().into_iter().find(|c| !c.passed) {
            None => Ok(()),
            Some(c) => Err(Error::Invariant(format!("{} failed {}", c.name, c.detail).trim_end().to_string())),
        }
    }
}
