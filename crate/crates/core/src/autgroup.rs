//! Torus actions on cluster variables and the sign survey.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::braid::{is_nonempty, reduced_word, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::exchange::IntMatrix;
use crate::par::Execution;

/// Columns `m+1..=m+f` of `A`, checked against the first `m` rows of `B̂`.
pub fn kernel_basis(bhat: &IntMatrix, a: &IntMatrix, m: usize, f: usize) -> Result<Vec<Vec<i64>>> {
    if a.rows() != m + f || !a.is_square() {
        return Err(Error::LengthMismatch { expected: m + f, actual: a.rows() });
    }
    let btilde = bhat.top_rows(m);
    let mut basis = Vec::with_capacity(f);
    for j in m..m + f {
        let v = a.column(j);
        if btilde.mul_vec(&v)?.iter().any(|&x| x != 0) {
            return Err(Error::Invariant(format!("column {} of A is not in the kernel", j + 1)));
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Diagonal of the Smith normal form, nonzero entries only.
pub fn elementary_divisors(m: &IntMatrix) -> Result<Vec<i64>> {
    let overflow = || Error::Overflow("smith normal form");
    let mut w: Vec<Vec<i128>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(|&x| i128::from(x)).collect()).collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut divisors = Vec::new();
    for t in 0..rows.min(cols) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let pick = |w: &Vec<Vec<i128>>| {
            (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| w[i][j] != 0)
                .min_by_key(|&(i, j)| w[i][j].abs())
        };
        let Some((pi, pj)) = pick(&w) else { break };
        w.swap(t, pi);
        for row in w.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = w[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = w[i][t] / p;
                if q != 0 {
                    let pivot = w[t].clone();
                    for (x, &y) in w[i][t..].iter_mut().zip(&pivot[t..]) {
                        *x = x.checked_sub(q.checked_mul(y).ok_or_else(overflow)?).ok_or_else(overflow)?;
                    }
                }
                clean &= w[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = w[t][j] / p;
                if q != 0 {
                    for row in w.iter_mut().skip(t) {
                        let s = q.checked_mul(row[t]).ok_or_else(overflow)?;
                        row[j] = row[j].checked_sub(s).ok_or_else(overflow)?;
                    }
                }
                clean &= w[t][j] == 0;
            }
            if clean {
                let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| w[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let source = w[i].clone();
                        for (x, &y) in w[t][t..].iter_mut().zip(&source[t..]) {
                            *x = x.checked_add(y).ok_or_else(overflow)?;
                        }
                        continue;
                    }
                }
            }
            let (pi, pj) = pick(&w).expect("block is nonzero");
            w.swap(t, pi);
            for row in w.iter_mut() {
                row.swap(t, pj);
            }
        }
        divisors.push(i64::try_from(w[t][t].abs()).map_err(|_| overflow())?);
    }
    Ok(divisors)
}

/// True iff the vectors span a saturated sublattice of full rank `vectors.len()`.
pub fn is_direct_summand(vectors: &[Vec<i64>]) -> Result<bool> {
    if vectors.is_empty() {
        return Ok(true);
    }
    let m = IntMatrix::from_rows(vectors.to_vec())?;
    let divisors = elementary_divisors(&m)?;
    Ok(divisors.len() == vectors.len() && divisors.iter().all(|&d| d == 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusAction {
    pub m: usize,
    pub f: usize,
    /// Entry `(i, j)` is the exponent of `t_{j+1}` acting on `x_{i+1}`.
    pub weights: IntMatrix,
}

pub fn torus_action(a: &IntMatrix, m: usize, f: usize) -> Result<TorusAction> {
    if a.rows() != m + f || !a.is_square() {
        return Err(Error::LengthMismatch { expected: m + f, actual: a.rows() });
    }
    Ok(TorusAction { m, f, weights: IntMatrix::from_fn(m + f, f, |i, j| a.get(i, m + j)) })
}

impl TorusAction {
    /// `x_i → t_1^{e_1} … t_f^{e_f} x_i` for the 1-based variable `i`.
    pub fn render(&self, i: usize) -> String {
        let mut out = format!("x_{i} →");
        for j in 0..self.f {
            match self.weights.get(i - 1, j) {
                0 => {}
                1 => write!(out, " t_{}", j + 1).unwrap(),
                e => write!(out, " t_{}^{{{e}}}", j + 1).unwrap(),
            }
        }
        write!(out, " x_{i}").unwrap();
        out
    }

    pub fn render_all(&self) -> Vec<String> {
        (1..=self.m + self.f).map(|i| self.render(i)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub entry: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SignReport {
    pub all_nonpositive: bool,
    /// 1-based coordinates of positive entries, row-major.
    pub violations: Vec<Violation>,
}

pub fn sign_report(a: &IntMatrix) -> SignReport {
    let violations: Vec<Violation> = a
        .entries()
        .filter(|&(_, _, v)| v > 0)
        .map(|(i, j, v)| Violation { row: i + 1, col: j + 1, entry: v })
        .collect();
    SignReport { all_nonpositive: violations.is_empty(), violations }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UFilter {
    All,
    Fixed(Permutation),
}

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub n: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub u: UFilter,
    /// Maximum number of `(u, β)` pairs to examine.
    pub budget: Option<usize>,
    pub execution: Execution,
}

impl SurveyConfig {
    pub fn new(n: usize, min_len: usize, max_len: usize) -> SurveyConfig {
        SurveyConfig { n, min_len, max_len, u: UFilter::All, budget: None, execution: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub n: usize,
    pub u_word: String,
    pub beta: String,
    pub m: usize,
    pub f: usize,
    pub distinct_letters: usize,
    pub det_ok: bool,
    pub sign_all_nonpositive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyTable {
    pub records: Vec<SurveyRecord>,
    pub skipped_empty: usize,
    /// Set when the budget cut the enumeration short; holds the number of pairs examined.
    pub truncated_after: Option<usize>,
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut images: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation::from_one_line(images.clone()).expect("identity")];
    // Lexicographic successor.
    while let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) {
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).expect("successor exists");
        images.swap(i, j);
        images[i + 1..].reverse();
        out.push(Permutation::from_one_line(images.clone()).expect("permutation"));
    }
    out
}

/// Every word over `1..=n-1` with length in `min..=max`, in lexicographic order.
pub fn all_words(n: usize, min: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn walk(n: usize, min: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() >= min && stack.len() <= max {
            out.push(stack.clone());
        }
        if stack.len() == max {
            return;
        }
        for l in 1..n {
            stack.push(l);
            walk(n, min, max, stack, out);
            stack.pop();
        }
    }
    if n >= 2 && min <= max {
        walk(n, min, max, &mut stack, &mut out);
    }
    out
}

fn join(letters: &[usize]) -> String {
    letters.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn survey_record(u: &Permutation, beta: &BraidWord) -> SurveyRecord {
    let base = SurveyRecord {
        n: beta.n(),
        u_word: join(reduced_word(u).letters()),
        beta: join(beta.letters()),
        m: 0,
        f: 0,
        distinct_letters: beta.distinct_letters(),
        det_ok: false,
        sign_all_nonpositive: false,
    };
    match crate::analysis::analyze_with(u, beta, Execution::Sequential) {
        Ok(an) => SurveyRecord {
            m: an.m(),
            f: an.f(),
            det_ok: true,
            sign_all_nonpositive: an.sign.all_nonpositive,
            ..base
        },
        Err(_) => base,
    }
}

pub fn survey(config: &SurveyConfig) -> Result<SurveyTable> {
    if config.n < 2 {
        return Err(Error::StrandCount(config.n));
    }
    let perms = match &config.u {
        UFilter::All => all_permutations(config.n),
        UFilter::Fixed(p) => {
            if p.n() != config.n {
                return Err(Error::StrandMismatch { perm: p.n(), word: config.n });
            }
            vec![p.clone()]
        }
    };
    let mut pairs = Vec::new();
    let mut skipped = 0;
    let mut examined = 0;
    let mut truncated_after = None;
    'outer: for word in all_words(config.n, config.min_len, config.max_len) {
        let beta = BraidWord::new(config.n, word)?;
        for u in &perms {
            if config.budget.is_some_and(|b| examined >= b) {
                truncated_after = Some(examined);
                break 'outer;
            }
            examined += 1;
            if is_nonempty(u, &beta)? {
                pairs.push((u.clone(), beta.clone()));
            } else {
                skipped += 1;
            }
        }
    }
    // Pairs are enumerated in (β, u) order and the map preserves it.
    let records = config.execution.map(&pairs, |(u, beta)| survey_record(u, beta));
    Ok(SurveyTable { records, skipped_empty: skipped, truncated_after })
}

impl SurveyTable {
    /// CSV with a header row; a trailing comment line marks truncation.
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        if self.records.is_empty() {
            writer
                .write_record(["n", "u_word", "beta", "m", "f", "distinct_letters", "det_ok", "sign_all_nonpositive"])
                .map_err(|e| Error::Invalid(e.to_string()))?;
        }
        for r in &self.records {
            writer.serialize(r).map_err(|e| Error::Invalid(e.to_string()))?;
        }
        let mut out = String::from_utf8(writer.into_inner().map_err(|e| Error::Invalid(e.to_string()))?)
            .expect("csv output is utf-8");
        if let Some(count) = self.truncated_after {
            writeln!(out, "# truncated: budget exhausted after {count} pairs").unwrap();
        }
        Ok(out)
    }
}
