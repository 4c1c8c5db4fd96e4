//! Braid matrices over integer polynomials and the equations of `X_{u,β}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{is_nonempty, reduced_word, BraidWord, Permutation};
use crate::error::{Error, Result};

/// Default cap on the number of terms of any intermediate polynomial.
pub const DEFAULT_MAX_TERMS: usize = 100_000;

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponents: Vec<u32>,
    pub coefficient: i64,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i64) -> Poly {
        let mut p = Poly::zero(nvars);
        if c != 0 {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    /// The variable `z_index` (1-based).
    pub fn var(nvars: usize, index: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[index - 1] = 1;
        Poly { nvars, terms: BTreeMap::from([(Monomial(e), 1)]) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading monomial down.
    pub fn terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .rev()
            .map(|(m, &c)| Term { exponents: m.0.clone(), coefficient: c })
            .collect()
    }

    fn accumulate(&mut self, mono: Monomial, c: i64) -> Result<()> {
        let slot = self.terms.entry(mono).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow("polynomial coefficient"))?;
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly, max_terms: usize) -> Result<Poly> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.accumulate(m.clone(), c)?;
        }
        out.check_budget(max_terms)
    }

    pub fn neg(&self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Poly, max_terms: usize) -> Result<Poly> {
        self.add(&other.neg(), max_terms)
    }

    pub fn mul(&self, other: &Poly, max_terms: usize) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let c = ca.checked_mul(cb).ok_or(Error::Overflow("polynomial coefficient"))?;
                out.accumulate(Monomial(e), c)?;
            }
            if out.len() > max_terms {
                return Err(Error::TermBudget(max_terms));
            }
        }
        out.check_budget(max_terms)
    }

    fn check_budget(self, max_terms: usize) -> Result<Poly> {
        if self.len() > max_terms {
            Err(Error::TermBudget(max_terms))
        } else {
            Ok(self)
        }
    }

    pub fn eval(&self, point: &[i64]) -> Result<i128> {
        let overflow = || Error::Overflow("polynomial evaluation");
        let mut total: i128 = 0;
        for (m, &c) in &self.terms {
            let mut v = i128::from(c);
            for (&x, &e) in point.iter().zip(&m.0) {
                v = v.checked_mul(i128::from(x).checked_pow(e).ok_or_else(overflow)?).ok_or_else(overflow)?;
            }
            total = total.checked_add(v).ok_or_else(overflow)?;
        }
        Ok(total)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, &c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("z_{}", i + 1) } else { format!("z_{}^{e}", i + 1) })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.unsigned_abs();
            match (vars.is_empty(), abs) {
                (true, _) => write!(f, "{abs}")?,
                (false, 1) => write!(f, "{}", vars.join("*"))?,
                (false, _) => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Square matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn identity(n: usize, nvars: usize) -> PolyMatrix {
        let entries = (0..n * n).map(|k| Poly::constant(nvars, i64::from(k / n == k % n))).collect();
        PolyMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based access.
    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[(row - 1) * self.n + (col - 1)]
    }

    fn set(&mut self, row: usize, col: usize, p: Poly) {
        self.entries[(row - 1) * self.n + (col - 1)] = p;
    }

    pub fn mul(&self, other: &PolyMatrix, max_terms: usize) -> Result<PolyMatrix> {
        let nvars = self.entries.first().map_or(0, Poly::nvars);
        let mut out = PolyMatrix::identity(self.n, nvars);
        for r in 1..=self.n {
            for c in 1..=self.n {
                let mut acc = Poly::zero(nvars);
                for k in 1..=self.n {
                    acc = acc.add(&self.get(r, k).mul(other.get(k, c), max_terms)?, max_terms)?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Right multiplication by the letter matrix at `i` with variable `var`, as a column operation.
    fn times_letter(&mut self, i: usize, var: usize, max_terms: usize) -> Result<()> {
        let nvars = self.entries.first().map_or(0, Poly::nvars);
        let z = Poly::var(nvars, var);
        for r in 1..=self.n {
            let left = self.get(r, i).clone();
            let right = self.get(r, i + 1).clone();
            self.set(r, i, left.mul(&z, max_terms)?.add(&right, max_terms)?);
            self.set(r, i + 1, left.neg());
        }
        Ok(())
    }

    /// Left multiplication by the permutation matrix of `w`.
    pub fn permute_rows(&self, w: &Permutation) -> PolyMatrix {
        let inv = w.inverse();
        let mut out = self.clone();
        for r in 1..=self.n {
            for c in 1..=self.n {
                out.set(r, c, self.get(inv.apply(r), c).clone());
            }
        }
        out
    }
}

/// Identity except for the block `[[z, -1], [1, 0]]` at rows and columns `i, i+1`.
pub fn braid_letter_matrix(i: usize, var: usize, n: usize, nvars: usize) -> Result<PolyMatrix> {
    if n < 2 {
        return Err(Error::StrandCount(n));
    }
    if i == 0 || i >= n {
        return Err(Error::LetterOutOfRange { letter: i, max: n - 1 });
    }
    if var == 0 || var > nvars {
        return Err(Error::Invalid(format!("variable index {var} outside 1..={nvars}")));
    }
    let mut m = PolyMatrix::identity(n, nvars);
    m.set(i, i, Poly::var(nvars, var));
    m.set(i, i + 1, Poly::constant(nvars, -1));
    m.set(i + 1, i, Poly::constant(nvars, 1));
    m.set(i + 1, i + 1, Poly::zero(nvars));
    Ok(m)
}

/// `B_{i_1}(z_1) ⋯ B_{i_s}(z_s)`.
pub fn braid_matrix(word: &BraidWord, max_terms: usize) -> Result<PolyMatrix> {
    let nvars = word.len();
    let mut m = PolyMatrix::identity(word.n(), nvars);
    for (idx, &i) in word.letters().iter().enumerate() {
        m.times_letter(i, idx + 1, max_terms)?;
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equation {
    pub row: usize,
    pub col: usize,
    pub terms: Vec<Term>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningEquations {
    pub n: usize,
    /// `β` followed by a reduced word of `u⁻¹w₀`.
    pub extended_word: BraidWord,
    pub variables: usize,
    pub equations: Vec<Equation>,
}

impl DefiningEquations {
    pub fn to_text(&self) -> String {
        let mut out = format!("# variables z_1..z_{} over {}\n", self.variables, self.extended_word);
        for e in &self.equations {
            out.push_str(&format!("[{},{}] {} = 0\n", e.row, e.col, e.text));
        }
        out
    }
}

/// Strictly lower entries of `w₀⁻¹ B_{β·β(u⁻¹w₀)}(z)`, read row by row.
pub fn defining_equations(u: &Permutation, beta: &BraidWord, max_terms: usize) -> Result<DefiningEquations> {
    if u.n() != beta.n() {
        return Err(Error::StrandMismatch { perm: u.n(), word: beta.n() });
    }
    if !is_nonempty(u, beta)? {
        return Err(Error::EmptyVariety);
    }
    let n = beta.n();
    let w0 = Permutation::longest(n);
    let tail = reduced_word(&u.inverse().compose(&w0));
    let extended = beta.concat(&tail)?;
    let product = braid_matrix(&extended, max_terms)?;
    let m = product.permute_rows(&w0.inverse());
    let mut equations = Vec::with_capacity(n * (n - 1) / 2);
    for row in 2..=n {
        for col in 1..row {
            let p = m.get(row, col);
            equations.push(Equation { row, col, terms: p.terms(), text: p.to_string() });
        }
    }
    Ok(DefiningEquations { n, variables: extended.len(), extended_word: extended, equations })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DimensionReport {
    pub nonempty: bool,
    /// Number of variables `ℓ(β) + ℓ(u⁻¹w₀)`.
    pub s: usize,
    /// `ℓ(β) - ℓ(u)`, when nonempty.
    pub dim: Option<i64>,
    /// `s - n(n-1)/2`, when nonempty.
    pub dim_from_variables: Option<i64>,
    pub formulas_agree: bool,
}

pub fn dimension_report(u: &Permutation, beta: &BraidWord) -> Result<DimensionReport> {
    if u.n() != beta.n() {
        return Err(Error::StrandMismatch { perm: u.n(), word: beta.n() });
    }
    let n = beta.n();
    let w0 = Permutation::longest(n);
    let s = beta.len() + u.inverse().compose(&w0).length();
    let nonempty = is_nonempty(u, beta)?;
    if !nonempty {
        return Ok(DimensionReport { nonempty, s, dim: None, dim_from_variables: None, formulas_agree: true });
    }
    let dim = beta.len() as i64 - u.length() as i64;
    let other = s as i64 - (n * (n - 1) / 2) as i64;
    Ok(DimensionReport { nonempty, s, dim: Some(dim), dim_from_variables: Some(other), formulas_agree: dim == other })
}
