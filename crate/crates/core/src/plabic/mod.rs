//! The 3D plabic graph of `(u, β)` and its soap films.

pub mod film;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::braid::{demazure_trace, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::par::Execution;

pub use film::{Anomalies, FilmSlice, LocalMultiplicity, Marker, Sheet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColumnKind {
    Crossing,
    Bridge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlabicColumn {
    pub kind: ColumnKind,
    pub gap: usize,
    /// 1-based, left to right.
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlabicDiagram {
    n: usize,
    columns: Vec<PlabicColumn>,
    bridge_positions: Vec<usize>,
}

impl PlabicDiagram {
    /// Builds a diagram from `(kind, gap)` pairs listed left to right.
    pub fn from_columns(n: usize, columns: &[(ColumnKind, usize)]) -> Result<PlabicDiagram> {
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        let mut cols = Vec::with_capacity(columns.len());
        let mut bridges = Vec::new();
        for (idx, &(kind, gap)) in columns.iter().enumerate() {
            if gap == 0 || gap >= n {
                return Err(Error::LetterOutOfRange { letter: gap, max: n - 1 });
            }
            if kind == ColumnKind::Bridge {
                bridges.push(idx + 1);
            }
            cols.push(PlabicColumn { kind, gap, position: idx + 1 });
        }
        Ok(PlabicDiagram { n, columns: cols, bridge_positions: bridges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gaps(&self) -> usize {
        self.n - 1
    }

    pub fn columns(&self) -> &[PlabicColumn] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// The column at 1-based `position`.
    pub fn column(&self, position: usize) -> &PlabicColumn {
        &self.columns[position - 1]
    }

    pub fn bridge_positions(&self) -> &[usize] {
        &self.bridge_positions
    }

    /// Columns `from..=k`, renumbered from 1.
    pub fn suffix(&self, from: usize) -> PlabicDiagram {
        let start = from.saturating_sub(1).min(self.columns.len());
        let cols: Vec<(ColumnKind, usize)> =
            self.columns[start..].iter().map(|c| (c.kind, c.gap)).collect();
        PlabicDiagram::from_columns(self.n, &cols).expect("suffix of a valid diagram")
    }
}

/// Bridges at the positions the Demazure recursion stalls, crossings elsewhere.
pub fn build_diagram(u: &Permutation, beta: &BraidWord) -> Result<PlabicDiagram> {
    let trace = demazure_trace(u, beta)?;
    if !trace.start().is_identity() {
        return Err(Error::EmptyVariety);
    }
    let cols: Vec<(ColumnKind, usize)> = beta
        .letters()
        .iter()
        .enumerate()
        .map(|(idx, &gap)| {
            let kind = if trace.is_bridge(idx + 1) { ColumnKind::Bridge } else { ColumnKind::Crossing };
            (kind, gap)
        })
        .collect();
    PlabicDiagram::from_columns(beta.n(), &cols)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoapFilm {
    /// Position of the bridge the film starts at.
    pub origin: usize,
    /// 1-based index in canonical order.
    pub vertex: usize,
    pub frozen: bool,
    pub boundary: Vec<i64>,
    /// Local multiplicities at every bridge up to and including the origin.
    pub bridge_local: BTreeMap<usize, LocalMultiplicity>,
    /// `coverage[b]` holds the gap multiplicities between columns `b` and `b + 1`,
    /// for `b < origin`; `coverage[0]` is the left border.
    pub coverage: Vec<Vec<u32>>,
    pub anomalies: Anomalies,
}

impl SoapFilm {
    pub fn local(&self, position: usize) -> LocalMultiplicity {
        self.bridge_local.get(&position).copied().unwrap_or_default()
    }

    /// Multiplicity of the film at `gap` between columns `boundary` and `boundary + 1`.
    pub fn multiplicity_at(&self, boundary: usize, gap: usize) -> u32 {
        self.coverage
            .get(boundary)
            .and_then(|row| row.get(gap.wrapping_sub(1)))
            .copied()
            .unwrap_or(0)
    }
}

/// All films of a diagram in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilmSet {
    pub m: usize,
    pub f: usize,
    pub films: Vec<SoapFilm>,
    pub anomalies: Anomalies,
}

impl FilmSet {
    pub fn len(&self) -> usize {
        self.films.len()
    }

    pub fn is_empty(&self) -> bool {
        self.films.is_empty()
    }

    /// Origin positions indexed by vertex - 1.
    pub fn vertex_order(&self) -> Vec<usize> {
        self.films.iter().map(|f| f.origin).collect()
    }

    pub fn vertex_of_origin(&self, origin: usize) -> Option<usize> {
        self.films.iter().find(|f| f.origin == origin).map(|f| f.vertex)
    }

    pub fn boundaries(&self) -> Vec<Vec<i64>> {
        self.films.iter().map(|f| f.boundary.clone()).collect()
    }
}

/// Sweeps the film of the bridge at `origin` to the left border.
pub fn propagate_film(diagram: &PlabicDiagram, origin: usize) -> Result<SoapFilm> {
    let column = diagram.column(origin);
    if column.kind != ColumnKind::Bridge {
        return Err(Error::Invalid(format!("position {origin} is not a bridge")));
    }
    let gaps = diagram.gaps();
    let mut anomalies = Anomalies::default();
    let mut bridge_local = BTreeMap::new();
    bridge_local.insert(origin, LocalMultiplicity::OWN_BRIDGE);

    let mut coverage = vec![Vec::new(); origin];
    let mut slice = FilmSlice::born(column.gap);
    coverage[origin - 1] = slice.multiplicities(gaps);
    for position in (1..origin).rev() {
        let col = diagram.column(position);
        slice = match col.kind {
            ColumnKind::Crossing => slice.step_crossing(col.gap, &mut anomalies),
            ColumnKind::Bridge => {
                let (next, local) = slice.step_bridge(col.gap);
                bridge_local.insert(position, local);
                next
            }
        };
        coverage[position - 1] = slice.multiplicities(gaps);
    }
    anomalies.high_multiplicity = coverage.iter().flatten().filter(|&&m| m > 1).count() as u64;

    let boundary: Vec<i64> = coverage[0].iter().map(|&m| i64::from(m)).collect();
    let frozen = boundary.iter().any(|&x| x != 0);
    Ok(SoapFilm { origin, vertex: 0, frozen, boundary, bridge_local, coverage, anomalies })
}

pub fn propagate_films(diagram: &PlabicDiagram) -> Result<FilmSet> {
    propagate_films_with(diagram, Execution::Sequential)
}

pub fn propagate_films_with(diagram: &PlabicDiagram, exec: Execution) -> Result<FilmSet> {
    let swept = exec.map(diagram.bridge_positions(), |&p| propagate_film(diagram, p));
    let mut films = swept.into_iter().collect::<Result<Vec<_>>>()?;
    films.sort_by_key(|f| (f.frozen, f.origin));
    let mut anomalies = Anomalies::default();
    for (idx, film) in films.iter_mut().enumerate() {
        film.vertex = idx + 1;
        anomalies.merge(&film.anomalies);
    }
    let f = films.iter().filter(|x| x.frozen).count();
    Ok(FilmSet { m: films.len() - f, f, films, anomalies })
}
