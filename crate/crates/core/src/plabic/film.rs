//! Cross-sections of a soap film and how they change across one column.
//!
//! A film is tracked right-to-left as a set of sheets. A sheet spans a
//! contiguous block of gaps and clings to the strands at its bottom and top
//! edges. Every strand strictly inside a sheet carries a marker saying whether
//! the sheet passes over or under it there.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Marker {
    /// The sheet is in front of the strand.
    Over,
    /// The sheet is behind the strand.
    Under,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sheet {
    pub low_gap: usize,
    pub high_gap: usize,
    pub multiplicity: u32,
    /// Keyed by strand, only for strands `low_gap + 1 ..= high_gap`.
    pub markers: BTreeMap<usize, Marker>,
}

impl Sheet {
    /// A sheet covering a single gap, clinging to both of its strands.
    pub fn flush(gap: usize, multiplicity: u32) -> Sheet {
        Sheet {
            low_gap: gap,
            high_gap: gap,
            multiplicity,
            markers: BTreeMap::new(),
        }
    }

    pub fn covers(&self, gap: usize) -> bool {
        self.low_gap <= gap && gap <= self.high_gap
    }

    fn restricted(&self, low_gap: usize, high_gap: usize) -> Sheet {
        Sheet {
            low_gap,
            high_gap,
            multiplicity: self.multiplicity,
            markers: self
                .markers
                .iter()
                .filter(|(&s, _)| low_gap < s && s <= high_gap)
                .map(|(&s, &m)| (s, m))
                .collect(),
        }
    }
}

/// Multiplicities of a film in the four regions around a bridge at gap `i`:
/// `a` above (gap `i+1`), `b` to the right, `c` below (gap `i-1`), `d` to the left.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalMultiplicity {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl LocalMultiplicity {
    pub const OWN_BRIDGE: LocalMultiplicity = LocalMultiplicity { a: 0, b: 0, c: 0, d: 1 };

    pub fn is_zero(&self) -> bool {
        *self == LocalMultiplicity::default()
    }
}

/// Occurrences of configurations that no worked example pins down.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Anomalies {
    /// Sheets covering exactly the gap of a crossing.
    pub pinched_sheets: u64,
    /// Sheets having both strands of a crossing in their interior.
    pub interior_crossings: u64,
    /// Markers discarded when a strand leaves a sheet at a crossing.
    pub dropped_markers: u64,
    /// Region slots where a single film has multiplicity above 1.
    pub high_multiplicity: u64,
}

impl Anomalies {
    pub fn merge(&mut self, other: &Anomalies) {
        self.pinched_sheets += other.pinched_sheets;
        self.interior_crossings += other.interior_crossings;
        self.dropped_markers += other.dropped_markers;
        self.high_multiplicity += other.high_multiplicity;
    }

    pub fn total(&self) -> u64 {
        self.pinched_sheets + self.interior_crossings + self.dropped_markers + self.high_multiplicity
    }
}

/// The film at one vertical slice of the diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FilmSlice {
    sheets: Vec<Sheet>,
}

impl FilmSlice {
    pub fn empty() -> FilmSlice {
        FilmSlice::default()
    }

    /// The slice of a film immediately left of its own bridge.
    pub fn born(gap: usize) -> FilmSlice {
        FilmSlice { sheets: vec![Sheet::flush(gap, 1)] }
    }

    pub fn from_sheets(sheets: Vec<Sheet>) -> FilmSlice {
        let mut slice = FilmSlice { sheets };
        slice.normalize();
        slice
    }

    pub fn sheets(&self) -> &[Sheet] {
        &self.sheets
    }

    pub fn is_empty(&self) -> bool {
        self.sheets.is_empty()
    }

    // Sorted by low gap; identical sheets are stacked into one.
    fn normalize(&mut self) {
        self.sheets.retain(|s| s.multiplicity > 0);
        self.sheets.sort_by(|x, y| {
            (x.low_gap, x.high_gap, &x.markers).cmp(&(y.low_gap, y.high_gap, &y.markers))
        });
        let mut merged: Vec<Sheet> = Vec::with_capacity(self.sheets.len());
        for sheet in self.sheets.drain(..) {
            match merged.last_mut() {
                Some(last)
                    if last.low_gap == sheet.low_gap
                        && last.high_gap == sheet.high_gap
                        && last.markers == sheet.markers =>
                {
                    last.multiplicity += sheet.multiplicity;
                }
                _ => merged.push(sheet),
            }
        }
        self.sheets = merged;
    }

    /// Total multiplicity in `gap`; 0 outside `1..=n-1`.
    pub fn multiplicity(&self, gap: usize) -> u32 {
        self.sheets
            .iter()
            .filter(|s| s.covers(gap))
            .map(|s| s.multiplicity)
            .sum()
    }

    /// Multiplicities of gaps `1..=gaps`.
    pub fn multiplicities(&self, gaps: usize) -> Vec<u32> {
        (1..=gaps).map(|g| self.multiplicity(g)).collect()
    }

    /// Moves the slice leftward through a positive crossing at `gap`.
    ///
    /// The strand entering at height `gap` on the left and leaving at
    /// `gap + 1` on the right is the front one.
    pub fn step_crossing(&self, gap: usize, anomalies: &mut Anomalies) -> FilmSlice {
        let i = gap;
        let mut out = Vec::with_capacity(self.sheets.len());
        for sheet in &self.sheets {
            let (lo, hi) = (sheet.low_gap, sheet.high_gap);
            let mut next = sheet.clone();
            if lo == i + 1 {
                // Hanging from the front strand: widen down, in front of the back strand.
                next.low_gap = i;
                next.markers.insert(i + 1, Marker::Over);
            } else if hi + 1 == i {
                // Hanging from the back strand: widen up, behind the front strand.
                next.high_gap = i;
                next.markers.insert(i, Marker::Under);
            } else if lo == i && hi == i {
                anomalies.pinched_sheets += 1;
            } else if lo == i {
                next.low_gap = i + 1;
                if next.markers.remove(&(i + 1)).is_some() {
                    anomalies.dropped_markers += 1;
                }
            } else if hi == i {
                next.high_gap = i - 1;
                if next.markers.remove(&i).is_some() {
                    anomalies.dropped_markers += 1;
                }
            } else if lo < i && hi > i {
                anomalies.interior_crossings += 1;
                let below = next.markers.remove(&i);
                let above = next.markers.remove(&(i + 1));
                if let Some(m) = below {
                    next.markers.insert(i + 1, m);
                }
                if let Some(m) = above {
                    next.markers.insert(i, m);
                }
            }
            out.push(next);
        }
        FilmSlice::from_sheets(out)
    }

    /// Moves the slice leftward through a bridge at `gap`.
    ///
    /// A sheet covering the gap survives intact iff it passes over the top
    /// strand or under the bottom strand; otherwise its coverage of the gap
    /// ends at the bridge and the parts above and below continue separately.
    pub fn step_bridge(&self, gap: usize) -> (FilmSlice, LocalMultiplicity) {
        let i = gap;
        let mut out = Vec::with_capacity(self.sheets.len() + 1);
        for sheet in &self.sheets {
            if !sheet.covers(i) {
                out.push(sheet.clone());
                continue;
            }
            let passes = sheet.markers.get(&(i + 1)) == Some(&Marker::Over)
                || sheet.markers.get(&i) == Some(&Marker::Under);
            if passes {
                out.push(sheet.clone());
                continue;
            }
            if sheet.low_gap < i {
                out.push(sheet.restricted(sheet.low_gap, i - 1));
            }
            if sheet.high_gap > i {
                out.push(sheet.restricted(i + 1, sheet.high_gap));
            }
        }
        let next = FilmSlice::from_sheets(out);
        let local = LocalMultiplicity {
            a: self.multiplicity(i + 1),
            b: self.multiplicity(i),
            c: if i > 1 { self.multiplicity(i - 1) } else { 0 },
            d: next.multiplicity(i),
        };
        (next, local)
    }
}
