use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::Field;
use crate::complex::ChainComplex;

/// Graded Betti numbers `β_{i,j}`: the number of copies of `R(-j)` in `F_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    start: i64,
    entries: BTreeMap<(i64, i64), usize>,
    totals: Vec<usize>,
}

impl BettiTable {
    pub fn from_complex<F: Field>(c: &ChainComplex<F>) -> Self {
        let mut entries = BTreeMap::new();
        for i in c.degrees() {
            for &t in &c.module(i).twists {
                *entries.entry((i, t)).or_insert(0) += 1;
            }
        }
        BettiTable { start: c.start(), entries, totals: c.ranks() }
    }

    /// Total Betti number `β_i`.
    pub fn betti(&self, i: i64) -> usize {
        let k = i - self.start;
        if k < 0 {
            return 0;
        }
        self.totals.get(k as usize).copied().unwrap_or(0)
    }

    pub fn graded(&self, i: i64, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn totals(&self) -> &[usize] {
        &self.totals
    }

    pub fn sum(&self) -> usize {
        self.totals.iter().sum()
    }

    /// Largest `i` with `β_i ≠ 0`.
    pub fn length(&self) -> Option<i64> {
        self.totals.iter().rposition(|&b| b > 0).map(|k| self.start + k as i64)
    }
}

/// Serialized as `{start, totals, graded: [[i, j, β_ij], ...]}`.
impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let graded: Vec<[i64; 3]> = self.entries.iter().map(|(&(i, j), &n)| [i, j, n as i64]).collect();
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("start", &self.start)?;
        st.serialize_field("totals", &self.totals)?;
        st.serialize_field("graded", &graded)?;
        st.end()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay2 layout: columns are `i`, rows are `j - i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<i64> = (0..self.totals.len()).map(|k| self.start + k as i64).collect();
        if cols.is_empty() {
            return writeln!(f, "total: 0");
        }
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|(i, j)| j - i).collect();
            r.sort();
            r.dedup();
            r
        };
        let mut cells: Vec<Vec<String>> = Vec::new();
        cells.push(cols.iter().map(|i| i.to_string()).collect());
        cells.push(self.totals.iter().map(|b| b.to_string()).collect());
        for &row in &rows {
            cells.push(
                cols.iter()
                    .map(|&i| match self.graded(i, i + row) {
                        0 => ".".to_string(),
                        n => n.to_string(),
                    })
                    .collect(),
            );
        }
        let width: Vec<usize> = (0..cols.len()).map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(1)).collect();
        let labels: Vec<String> = std::iter::once(String::new())
            .chain(std::iter::once("total:".to_string()))
            .chain(rows.iter().map(|r| format!("{r}:")))
            .collect();
        let lw = labels.iter().map(|l| l.len()).max().unwrap_or(0);
        for (label, row) in labels.iter().zip(&cells) {
            let body: Vec<String> = row.iter().zip(&width).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(f, "{label:>lw$} {}", body.join(" "))?;
        }
        Ok(())
    }
}
