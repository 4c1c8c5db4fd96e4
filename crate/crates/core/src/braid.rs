//! Type-A combinatorics: braid words, permutations, Demazure traces, and the
//! boundary correction form on `Z^(n-1)`.
//!
//! Strands are numbered `1..=n` from the bottom; gap `i` lies between strands
//! `i` and `i+1`. Letters and gaps are 1-based everywhere in the public API,
//! while vectors indexed by gap store gap `i` at offset `i - 1`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::Half;

/// A positive braid word `sigma_{i_1} ... sigma_{i_k}` on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    n: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l >= n) {
            return Err(Error::LetterOutOfRange { letter: bad, max: n - 1 });
        }
        Ok(BraidWord { n, letters })
    }

    pub fn empty(n: usize) -> Result<Self> {
        BraidWord::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of distinct Artin generators used.
    pub fn distinct_letters(&self) -> usize {
        self.letters.iter().collect::<BTreeSet<_>>().len()
    }

    /// Letters from 1-based position `from` to the end.
    pub fn suffix(&self, from: usize) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters[from - 1..].to_vec(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch { perm: self.n, word: other.n });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// The permutation obtained by multiplying the simple transpositions.
    pub fn to_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &l in &self.letters {
            p.swap_positions(l);
        }
        p
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[usize]) -> fmt::Result {
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

fn parse_integers(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::BadToken(t.to_string())))
        .collect()
}

/// Parses a whitespace- or comma-separated list of letters.
pub fn parse_word(text: &str, n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::StrandCount(n));
    }
    BraidWord::new(n, parse_integers(text)?)
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.images)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `w0(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation { n, images });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses one-line notation, e.g. `"1 2 5 4 3 6"`.
    pub fn parse_one_line(text: &str) -> Result<Self> {
        Permutation::from_one_line(parse_integers(text)?)
    }

    /// Product `s_{w_1} s_{w_2} ...` of simple transpositions.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        Ok(BraidWord::new(n, word.to_vec())?.to_permutation())
    }

    /// Parses a word in simple reflections, e.g. `"4 3 4"`.
    pub fn parse_word(text: &str, n: usize) -> Result<Self> {
        Ok(parse_word(text, n)?.to_permutation())
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::LetterOutOfRange { letter: i, max: self.n() - 1 });
        }
        Ok(())
    }

    // Right multiplication by s_i swaps positions i and i+1.
    fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// `self * s_i`.
    pub fn times_simple(&self, i: usize) -> Result<Permutation> {
        self.check_letter(i)?;
        let mut p = self.clone();
        p.swap_positions(i);
        Ok(p)
    }

    /// Whether `l(self * s_i) < l(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Whether `l(s_i * self) < l(self)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] > inv.images[i]
    }
}

/// The Demazure quotient `v ◁ s_i`: `v s_i` if that is shorter, else `v`.
pub fn demazure_quotient(v: &Permutation, i: usize) -> Result<Permutation> {
    v.check_letter(i)?;
    if v.has_right_descent(i) {
        v.times_simple(i)
    } else {
        Ok(v.clone())
    }
}

/// The sequence `u_k, ..., u_0` and the bridge positions `J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemazureTrace {
    /// `prefix_perms[j]` is `u_j`, for `j = 0..=k`.
    pub prefix_perms: Vec<Permutation>,
    /// 1-based positions `l` with `u_l = u_{l-1}`.
    pub bridges: BTreeSet<usize>,
}

impl DemazureTrace {
    /// `u_0`; the variety is nonempty iff this is the identity.
    pub fn start(&self) -> &Permutation {
        &self.prefix_perms[0]
    }

    pub fn is_bridge(&self, position: usize) -> bool {
        self.bridges.contains(&position)
    }

    /// Positions outside `J`, left to right.
    pub fn crossings(&self) -> Vec<usize> {
        let k = self.prefix_perms.len() - 1;
        (1..=k).filter(|p| !self.bridges.contains(p)).collect()
    }
}

fn check_same_n(u: &Permutation, beta: &BraidWord) -> Result<()> {
    if u.n() != beta.n() {
        return Err(Error::StrandMismatch { perm: u.n(), word: beta.n() });
    }
    Ok(())
}

pub fn demazure_trace(u: &Permutation, beta: &BraidWord) -> Result<DemazureTrace> {
    check_same_n(u, beta)?;
    let k = beta.len();
    let mut perms = vec![u.clone(); k + 1];
    let mut bridges = BTreeSet::new();
    for j in (1..=k).rev() {
        let next = demazure_quotient(&perms[j], beta.letters()[j - 1])?;
        if next == perms[j] {
            bridges.insert(j);
        }
        perms[j - 1] = next;
    }
    Ok(DemazureTrace { prefix_perms: perms, bridges })
}

pub fn is_nonempty(u: &Permutation, beta: &BraidWord) -> Result<bool> {
    Ok(demazure_trace(u, beta)?.start().is_identity())
}

/// Lexicographically smallest reduced word, built by repeatedly peeling off
/// the smallest left descent.
pub fn reduced_word(p: &Permutation) -> BraidWord {
    let n = p.n();
    let mut rest = p.clone();
    let mut letters = Vec::with_capacity(p.length());
    while let Some(i) = (1..n).find(|&i| rest.has_left_descent(i)) {
        letters.push(i);
        // s_i * rest swaps the values i and i+1.
        for v in rest.images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
    BraidWord { n, letters }
}

/// `R_i(v)`: replaces `v_i` by `-v_i + v_{i-1} + v_{i+1}` (missing neighbors are 0).
pub fn reflect(i: usize, v: &[i64]) -> Result<Vec<i64>> {
    let len = v.len();
    if i == 0 || i > len {
        return Err(Error::LetterOutOfRange { letter: i, max: len });
    }
    let at = |g: usize| if g >= 1 && g <= len { v[g - 1] } else { 0 };
    let mut out = v.to_vec();
    out[i - 1] = -at(i) + at(i - 1) + at(i + 1);
    Ok(out)
}

/// `(a, b) = a^T M b` with `M = -1/2` times the Cartan matrix of type `A_{n-1}`.
pub fn boundary_form(a: &[i64], b: &[i64]) -> Result<Half> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), actual: b.len() });
    }
    let mut halves = 0i64;
    for g in 0..a.len() {
        halves -= 2 * a[g] * b[g];
        if g + 1 < a.len() {
            halves += a[g] * b[g + 1] + a[g + 1] * b[g];
        }
    }
    Ok(Half::from_halves(halves))
}

/// Standard basis vector `e_i` of length `len`.
pub fn unit_vector(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i - 1] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_u() -> Permutation {
        Permutation::parse_word("4 3 4", 6).unwrap()
    }

    fn running_beta() -> BraidWord {
        parse_word("5 4 3 2 1 4 3 4 2 5 3 4 5", 6).unwrap()
    }

    #[test]
    fn parses_words() {
        assert_eq!(running_beta().letters(), &[5, 4, 3, 2, 1, 4, 3, 4, 2, 5, 3, 4, 5]);
        assert!(parse_word("", 3).unwrap().is_empty());
        assert_eq!(parse_word("1,2, 1", 3).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(
            parse_word("3", 3),
            Err(Error::LetterOutOfRange { letter: 3, max: 2 })
        );
        assert!(matches!(parse_word("1 x", 3), Err(Error::BadToken(_))));
        assert_eq!(parse_word("1", 1), Err(Error::StrandCount(1)));
    }

    #[test]
    fn permutation_basics() {
        assert_eq!(running_u().images(), &[1, 2, 5, 4, 3, 6]);
        assert_eq!(Permutation::longest(6).length(), 15);
        assert!(Permutation::from_one_line(vec![1, 1, 2]).is_err());
        let p = Permutation::parse_one_line("3 1 4 2").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn quotient_examples() {
        let id = Permutation::identity(4);
        for i in 1..4 {
            assert_eq!(demazure_quotient(&id, i).unwrap(), id);
        }
        let s2 = Permutation::from_word(4, &[2]).unwrap();
        assert!(demazure_quotient(&s2, 2).unwrap().is_identity());
        assert_eq!(demazure_quotient(&running_u(), 5).unwrap(), running_u());
        assert!(demazure_quotient(&id, 4).is_err());
    }

    #[test]
    fn trace_examples() {
        let t = demazure_trace(&running_u(), &running_beta()).unwrap();
        let expected: BTreeSet<usize> = (1..=13).filter(|p| ![8, 11, 12].contains(p)).collect();
        assert_eq!(t.bridges, expected);
        assert!(t.start().is_identity());

        let s2 = Permutation::from_word(4, &[2]).unwrap();
        let beta = parse_word("3 2 1 2 3", 4).unwrap();
        let t = demazure_trace(&s2, &beta).unwrap();
        assert_eq!(t.bridges, BTreeSet::from([1, 2, 3, 5]));

        let id = Permutation::identity(4);
        let t = demazure_trace(&id, &beta).unwrap();
        assert_eq!(t.bridges.len(), 5);
    }

    #[test]
    fn nonemptiness() {
        let s2 = Permutation::from_word(4, &[2]).unwrap();
        assert!(is_nonempty(&s2, &parse_word("3 2 1 2 3", 4).unwrap()).unwrap());
        assert!(is_nonempty(&Permutation::identity(3), &BraidWord::empty(3).unwrap()).unwrap());
        let s1 = Permutation::from_word(2, &[1]).unwrap();
        assert!(!is_nonempty(&s1, &BraidWord::empty(2).unwrap()).unwrap());
    }

    #[test]
    fn reduced_words() {
        assert!(reduced_word(&Permutation::identity(4)).is_empty());
        assert_eq!(reduced_word(&Permutation::longest(3)).letters(), &[1, 2, 1]);
        let w = reduced_word(&running_u());
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_permutation(), running_u());
    }

    #[test]
    fn reflection_and_form() {
        assert_eq!(reflect(2, &[0, 0, 0]).unwrap(), vec![0, 0, 0]);
        assert_eq!(reflect(2, &[1, 0, 0]).unwrap(), vec![1, 1, 0]);
        assert_eq!(reflect(2, &[1, 1, 1]).unwrap(), vec![1, 1, 1]);
        assert_eq!(reflect(1, &[1, 0]).unwrap(), vec![-1, 0]);
        assert!(reflect(3, &[1, 0]).is_err());

        assert_eq!(boundary_form(&[0, 0, 1], &[0, 1, 0]).unwrap(), Half::from_halves(1));
        assert_eq!(boundary_form(&[0, 0, 1], &[1, 0, 0]).unwrap(), Half::ZERO);
        for i in 1..=4 {
            let e = unit_vector(4, i);
            assert_eq!(boundary_form(&e, &e).unwrap(), Half::from_int(-1));
        }
        assert!(boundary_form(&[1], &[1, 2]).is_err());
    }
}
