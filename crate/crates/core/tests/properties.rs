mod common;

use proptest::prelude::*;

use plabic_seed::autgroup::{survey, SurveyConfig};
use plabic_seed::braid::{
    boundary_form, demazure_quotient, is_nonempty, reduced_word, reflect, unit_vector,
};
use plabic_seed::exchange::{mutate, quiver_from_half_arrows, IntMatrix};
use plabic_seed::plabic::ColumnKind;
use plabic_seed::variety::{defining_equations, DEFAULT_MAX_TERMS};
use plabic_seed::{analyze, Analysis, BraidWord, Permutation};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_n).prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_one_line(images).unwrap())
}

fn instance() -> impl Strategy<Value = (Permutation, BraidWord)> {
    any::<u64>().prop_map(|seed| common::random_instance(&mut common::rng(seed), 5, 10))
}

fn case_a_instance() -> impl Strategy<Value = (Permutation, BraidWord)> {
    any::<u64>().prop_map(|seed| common::case_a_instance(&mut common::rng(seed), 5, 9))
}

fn vectors(len: usize) -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (prop::collection::vec(-6i64..=6, len), prop::collection::vec(-6i64..=6, len))
}

fn inversions(p: &Permutation) -> usize {
    let im = p.images();
    (0..im.len()).flat_map(|i| (i + 1..im.len()).map(move |j| (i, j))).filter(|&(i, j)| im[i] > im[j]).count()
}

// Exhaustive subword test: some subsequence of β is a reduced word for u.
fn has_reduced_subword(u: &Permutation, beta: &BraidWord) -> bool {
    let letters = beta.letters();
    let len = u.length();
    (0u32..1 << letters.len()).filter(|mask| mask.count_ones() as usize == len).any(|mask| {
        let sub: Vec<usize> = (0..letters.len()).filter(|b| mask & (1 << b) != 0).map(|b| letters[b]).collect();
        Permutation::from_word(u.n(), &sub).unwrap() == *u
    })
}

fn strip_first(u: &Permutation, beta: &BraidWord) -> (Permutation, BraidWord) {
    let i = beta.letters()[0];
    let stripped = if analyze_bridge_at_one(u, beta) { u.clone() } else { Permutation::from_word(u.n(), &[i]).unwrap().compose(u) };
    (stripped, beta.suffix(2))
}

fn analyze_bridge_at_one(u: &Permutation, beta: &BraidWord) -> bool {
    plabic_seed::braid::demazure_trace(u, beta).unwrap().is_bridge(1)
}

// Index of the vertex whose origin is `origin`.
fn vertex(an: &Analysis, origin: usize) -> usize {
    an.films.vertex_of_origin(origin).unwrap() - 1
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(1000) })]

    #[test]
    fn quotient_is_idempotent(p in permutation(8), i in 1usize..8) {
        prop_assume!(i < p.n());
        let once = demazure_quotient(&p, i).unwrap();
        prop_assert_eq!(demazure_quotient(&once, i).unwrap(), once);
    }

    #[test]
    fn reflection_is_an_involution_preserving_the_form(n in 2usize..8, i in 1usize..7, seed in vectors(6)) {
        prop_assume!(i < n);
        let (a, b) = (seed.0[..n - 1].to_vec(), seed.1[..n - 1].to_vec());
        let (ra, rb) = (reflect(i, &a).unwrap(), reflect(i, &b).unwrap());
        prop_assert_eq!(reflect(i, &ra).unwrap(), a.clone());
        prop_assert_eq!(boundary_form(&ra, &rb).unwrap(), boundary_form(&a, &b).unwrap());
    }

    #[test]
    fn boundary_form_is_symmetric((a, b) in vectors(7)) {
        prop_assert_eq!(boundary_form(&a, &b).unwrap(), boundary_form(&b, &a).unwrap());
    }

    #[test]
    fn reduced_word_has_inversion_length(p in permutation(8)) {
        let w = reduced_word(&p);
        prop_assert_eq!(w.len(), inversions(&p));
        prop_assert_eq!(p.length(), inversions(&p));
        prop_assert_eq!(w.to_permutation(), p);
    }

    #[test]
    fn mutation_is_an_involution(m in 1usize..6, f in 0usize..4, k in 1usize..6, seed in any::<u64>()) {
        prop_assume!(k <= m);
        let mut rng = common::rng(seed);
        let b = IntMatrix::from_fn(m + f, m + f, |_, _| rand::Rng::gen_range(&mut rng, -3i64..=3));
        let once = mutate(&b, k, m).unwrap();
        prop_assert_eq!(mutate(&once, k, m).unwrap(), b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(1000) })]

    #[test]
    fn mutation_involution_on_larger_sample(m in 1usize..8, f in 0usize..5, k in 1usize..8, seed in any::<u64>()) {
        prop_assume!(k <= m);
        let mut rng = common::rng(seed);
        let b = IntMatrix::from_fn(m + f, m + f, |_, _| rand::Rng::gen_range(&mut rng, -4i64..=4));
        prop_assert_eq!(mutate(&mutate(&b, k, m).unwrap(), k, m).unwrap(), b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(300) })]

    #[test]
    fn nonemptiness_matches_subword_search(u in permutation(4), len in 0usize..=10, seed in any::<u64>()) {
        let beta = common::random_word(&mut common::rng(seed), u.n(), len);
        prop_assert_eq!(is_nonempty(&u, &beta).unwrap(), has_reduced_subword(&u, &beta));
    }

    #[test]
    fn universal_invariants((u, beta) in instance()) {
        let an = analyze(&u, &beta).unwrap();
        let (m, f) = (an.m(), an.f());
        prop_assert_eq!(i128::from(an.assembled.det), plabic_seed::exchange::determinant(an.bhat()).unwrap());
        prop_assert_eq!(an.assembled.det, if (m + f) % 2 == 0 { 1 } else { -1 });
        prop_assert!(an.bhat().checked_mul(&an.a).unwrap().is_identity());
        prop_assert!(an.h.is_skew_symmetric());
        prop_assert!(an.d.is_symmetric());
        for i in 0..m {
            prop_assert!(an.d.row(i).iter().all(|x| x.halves() == 0));
        }
        for film in &an.films.films {
            prop_assert_eq!(film.frozen, film.boundary.iter().any(|&x| x != 0));
        }
        for j in m..m + f {
            let col = an.a.column(j);
            prop_assert!(an.assembled.btilde.mul_vec(&col).unwrap().iter().all(|&x| x == 0));
        }
        if u.is_identity() {
            prop_assert_eq!(f, beta.distinct_letters());
        }
        prop_assert!(an.dimension.formulas_agree);
    }

    #[test]
    fn leftmost_bridge_film_sees_one_gap((u, beta) in instance()) {
        let an = analyze(&u, &beta).unwrap();
        let first = an.diagram.columns().first().copied();
        if let Some(col) = first.filter(|c| c.kind == ColumnKind::Bridge) {
            let film = &an.films.films[vertex(&an, 1)];
            prop_assert_eq!(&film.boundary, &unit_vector(beta.n() - 1, col.gap));
        }
    }

    #[test]
    fn boundary_multiplicities_stay_binary((u, beta) in instance()) {
        let an = analyze(&u, &beta).unwrap();
        prop_assume!(an.films.anomalies.high_multiplicity == 0);
        for film in &an.films.films {
            prop_assert!(film.boundary.iter().all(|&x| x == 0 || x == 1));
            for slice in &film.coverage {
                prop_assert!(slice.iter().all(|&x| x <= 1));
            }
        }
    }

    #[test]
    fn prepended_crossing_changes_nothing_but_boundaries((u, beta) in case_a_instance()) {
        let i = beta.letters()[0];
        let (u2, beta2) = strip_first(&u, &beta);
        prop_assert_eq!(u.length(), u2.length() + 1);
        let big = analyze(&u, &beta).unwrap();
        let small = analyze(&u2, &beta2).unwrap();
        prop_assert_eq!(big.bhat(), small.bhat());
        let shifted: Vec<usize> = small.films.vertex_order().iter().map(|o| o + 1).collect();
        prop_assert_eq!(big.films.vertex_order(), shifted);
        for (b, s) in big.films.films.iter().zip(&small.films.films) {
            prop_assert_eq!(&b.boundary, &reflect(i, &s.boundary).unwrap());
        }
    }

    #[test]
    fn prepended_bridge_identities((u, beta) in instance()) {
        prop_assume!(!beta.is_empty() && analyze_bridge_at_one(&u, &beta));
        let i = beta.letters()[0];
        let (u2, beta2) = strip_first(&u, &beta);
        let big = analyze(&u, &beta).unwrap();
        let small = analyze(&u2, &beta2).unwrap();
        let new = vertex(&big, 1);
        let e = unit_vector(beta.n() - 1, i);
        let (bb, sb) = (big.bhat(), small.bhat());
        let (h2, d2) = (big.h.doubled(), big.d.doubled());
        let hs2 = small.h.doubled();
        for (sx, film) in small.films.films.iter().enumerate() {
            let x = vertex(&big, film.origin + 1);
            let local = big.films.films[x].local(1);
            let r = i64::from(local.b) - i64::from(local.d);
            prop_assert_eq!(bb.get(new, x), r);
            let expected: Vec<i64> = big.films.films[x].boundary.iter().zip(&e).map(|(p, q)| p + r * q).collect();
            prop_assert_eq!(&film.boundary, &expected);
            for (sy, other) in small.films.films.iter().enumerate() {
                let y = vertex(&big, other.origin + 1);
                prop_assert_eq!(sb.get(sy, sx), bb.get(y, x) + bb.get(new, x) * bb.get(y, new));
                prop_assert_eq!(
                    2 * hs2.get(sy, sx),
                    2 * h2.get(y, x) + h2.get(new, x) * d2.get(new, y) - d2.get(new, x) * h2.get(new, y)
                );
            }
        }
    }

    #[test]
    fn quiver_mutation_matches_matrix_mutation((u, beta) in instance(), pick in any::<usize>()) {
        let an = analyze(&u, &beta).unwrap();
        prop_assume!(an.m() > 0);
        let k = pick % an.m() + 1;
        let quiver = quiver_from_half_arrows(&an.h, an.m(), an.f()).unwrap();
        let via_quiver = &quiver.mutate(k).unwrap().to_matrix() + &an.d;
        let via_matrix = mutate(an.bhat(), k, an.m()).unwrap();
        prop_assert_eq!(via_quiver, via_matrix.to_half());
    }
}

// n = 2: the equations have an integer solution in a small box iff the variety is nonempty.
#[test]
fn two_strand_equations_against_grid_search() {
    let grid: Vec<i64> = (-2..=2).collect();
    for len in 0..=6 {
        let beta = BraidWord::new(2, vec![1; len]).unwrap();
        for u in [Permutation::identity(2), Permutation::longest(2)] {
            let nonempty = is_nonempty(&u, &beta).unwrap();
            let Ok(eqs) = defining_equations(&u, &beta, DEFAULT_MAX_TERMS) else {
                assert!(!nonempty);
                continue;
            };
            let s = eqs.variables;
            let mut point = vec![grid[0]; s];
            let mut solvable = false;
            'search: for mut code in 0..grid.len().pow(s as u32) {
                for slot in point.iter_mut() {
                    *slot = grid[code % grid.len()];
                    code /= grid.len();
                }
                let polys = eqs.equations.iter().map(|e| {
                    e.terms.iter().map(|t| {
                        t.exponents.iter().zip(&point).map(|(&k, &z)| i128::from(z).pow(k)).product::<i128>()
                            * i128::from(t.coefficient)
                    }).sum::<i128>()
                });
                if polys.into_iter().all(|v| v == 0) {
                    solvable = true;
                    break 'search;
                }
            }
            assert_eq!(solvable, nonempty, "u = {:?}, len = {len}", u.images());
        }
    }
}

#[test]
fn small_survey_has_every_pair() {
    let table = survey(&SurveyConfig::new(2, 1, 3)).unwrap();
    assert_eq!(table.records.len(), 6);
    assert_eq!(table.skipped_empty, 0);
    assert!(table.records.iter().all(|r| r.det_ok));
}

#[test]
fn dimension_formulas_agree_on_corpus() {
    for (u, beta) in common::corpus(21, 300, 4, 8) {
        let an = analyze(&u, &beta).unwrap();
        assert!(an.dimension.formulas_agree);
        let eqs = defining_equations(&u, &beta, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(eqs.variables, an.dimension.s);
        assert_eq!(eqs.extended_word.len(), an.dimension.s);
    }
}
