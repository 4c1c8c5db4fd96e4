#![allow(dead_code)]

use plabic_seed::braid::is_nonempty;
use plabic_seed::exchange::{assemble_bhat, boundary_correction_matrix, half_arrow_matrix, IntMatrix};
use plabic_seed::plabic::{propagate_films, PlabicDiagram};
use plabic_seed::{BraidWord, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_one_line(images).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let letters = (0..len).map(|_| rng.gen_range(1..n)).collect();
    BraidWord::new(n, letters).unwrap()
}

/// A nonempty pair: `u` is the product of a random subword of `β`, kept only
/// when it is reachable.
pub fn random_instance<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> (Permutation, BraidWord) {
    loop {
        let n = rng.gen_range(2..=max_n);
        let len = rng.gen_range(0..=max_len);
        let beta = random_word(rng, n, len);
        let sub: Vec<usize> = beta.letters().iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
        let u = Permutation::from_word(n, &sub).unwrap();
        if is_nonempty(&u, &beta).unwrap() {
            return (u, beta);
        }
    }
}

pub fn corpus(seed: u64, count: usize, max_n: usize, max_len: usize) -> Vec<(Permutation, BraidWord)> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_instance(&mut rng, max_n, max_len)).collect()
}

/// Direct-scan B̂ of a diagram with rows ordered by increasing origin, and those origins.
pub fn direct_in_origin_order(diagram: &PlabicDiagram) -> (IntMatrix, Vec<usize>) {
    let films = propagate_films(diagram).unwrap();
    let h = half_arrow_matrix(diagram, &films).unwrap();
    let d = boundary_correction_matrix(&films).unwrap();
    let bhat = assemble_bhat(&h, &d, films.m, films.f).unwrap().bhat;
    let canonical = films.vertex_order();
    let mut origins = canonical.clone();
    origins.sort();
    let order: Vec<usize> = origins.iter().map(|o| canonical.iter().position(|c| c == o).unwrap()).collect();
    (bhat.permute_symmetric(&order), origins)
}

/// `(s_i u', σ_i β')` for a random nonempty `(u', β')`, kept when position 1
/// is a crossing of the result.
pub fn case_a_instance<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> (Permutation, BraidWord) {
    loop {
        let (u0, beta0) = random_instance(rng, max_n, max_len);
        let n = u0.n();
        let i = rng.gen_range(1..n);
        let u = Permutation::from_word(n, &[i]).unwrap().compose(&u0);
        let mut letters = vec![i];
        letters.extend_from_slice(beta0.letters());
        let beta = BraidWord::new(n, letters).unwrap();
        let trace = plabic_seed::braid::demazure_trace(&u, &beta).unwrap();
        if trace.start().is_identity() && !trace.is_bridge(1) {
            return (u, beta);
        }
    }
}
