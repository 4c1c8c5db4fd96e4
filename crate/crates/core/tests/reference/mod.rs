//! Reference matrices and strings for the worked examples.
#![allow(dead_code)]

use plabic_seed::braid::parse_word;
use plabic_seed::exchange::{HalfMatrix, IntMatrix};
use plabic_seed::{analyze, Analysis, Half, Permutation};

pub fn int(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// Entries given doubled.
pub fn halves(rows: &[&[i64]]) -> HalfMatrix {
    int(rows).map(Half::from_halves)
}

pub fn run(n: usize, u: &str, beta: &str) -> Analysis {
    let u = Permutation::parse_word(u, n).unwrap();
    let beta = parse_word(beta, n).unwrap();
    analyze(&u, &beta).unwrap()
}

pub fn example_a() -> Analysis {
    run(4, "2", "3 2 1 2 3")
}

pub fn running() -> Analysis {
    run(6, "4 3 4", "5 4 3 2 1 4 3 4 2 5 3 4 5")
}

pub fn example_c() -> Analysis {
    run(6, "3 1 2 5 4", "1 1 5 5 3 3 2 2 4 3 2 1 2 5 4 3")
}

pub fn example_d() -> Analysis {
    run(4, "1 2", "1 3 1 2 1 3 2 2 3")
}

pub fn example_a_boundaries() -> Vec<Vec<i64>> {
    vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0], vec![0, 1, 0]]
}

pub fn example_a_h() -> HalfMatrix {
    halves(&[&[0, -1, 0, 1], &[1, 0, -1, 0], &[0, 1, 0, -1], &[-1, 0, 1, 0]])
}

pub fn example_a_d() -> HalfMatrix {
    halves(&[&[-2, 1, 0, 1], &[1, -2, 1, -2], &[0, 1, -2, 1], &[1, -2, 1, -2]])
}

pub fn example_a_bhat() -> IntMatrix {
    int(&[&[-1, 0, 0, 1], &[1, -1, 0, -1], &[0, 1, -1, 0], &[0, -1, 1, -1]])
}

/// Gap vectors of the running example, in vertex order.
pub fn running_boundaries() -> Vec<Vec<i64>> {
    let e = |i: usize| (1..=5).map(|g| i64::from(g == i)).collect::<Vec<_>>();
    let mut out = vec![vec![0; 5]; 4];
    out.extend([e(5), e(4), e(3), e(2), e(1), e(4)]);
    out
}

pub fn running_h() -> HalfMatrix {
    halves(&[
        &[0, -2, 0, 0, 0, -2, 2, 0, 0, 0],
        &[2, 0, -2, 2, 0, 0, -2, 2, 0, 0],
        &[0, 2, 0, -2, 0, 0, 0, -2, 2, 0],
        &[0, -2, 2, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, -1, 0, 0, 0, 1],
        &[2, 0, 0, 0, 1, 0, -1, 0, 0, 0],
        &[-2, 2, 0, 0, 0, 1, 0, -1, 0, -1],
        &[0, -2, 2, 0, 0, 0, 1, 0, -1, 0],
        &[0, 0, -2, 0, 0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, -1, 0, 1, 0, 0, 0],
    ])
}

/// The frozen block of D.
pub fn running_d_frozen() -> HalfMatrix {
    halves(&[
        &[-2, 1, 0, 0, 0, 1],
        &[1, -2, 1, 0, 0, -2],
        &[0, 1, -2, 1, 0, 1],
        &[0, 0, 1, -2, 1, 0],
        &[0, 0, 0, 1, -2, 0],
        &[1, -2, 1, 0, 0, -2],
    ])
}

pub fn running_bhat() -> IntMatrix {
    int(&[
        &[0, -1, 0, 0, 0, -1, 1, 0, 0, 0],
        &[1, 0, -1, 1, 0, 0, -1, 1, 0, 0],
        &[0, 1, 0, -1, 0, 0, 0, -1, 1, 0],
        &[0, -1, 1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, -1, 0, 0, 0, 0, 1],
        &[1, 0, 0, 0, 1, -1, 0, 0, 0, -1],
        &[-1, 1, 0, 0, 0, 1, -1, 0, 0, 0],
        &[0, -1, 1, 0, 0, 0, 1, -1, 0, 0],
        &[0, 0, -1, 0, 0, 0, 0, 1, -1, 0],
        &[0, 0, 0, 0, 0, -1, 1, 0, 0, -1],
    ])
}

pub fn running_a() -> IntMatrix {
    int(&[
        &[-1, 0, 0, 0, 0, 0, -1, 0, 0, 0],
        &[-1, -1, -1, -1, 0, 0, -1, -1, -1, 0],
        &[-1, -1, -1, 0, 0, 0, -1, -1, -1, 0],
        &[0, 0, -1, -1, 0, 0, 0, 0, -1, 0],
        &[0, -1, -1, -1, -1, 0, -1, -1, -1, -1],
        &[-1, 0, 0, 0, -1, -1, -1, 0, 0, 0],
        &[-1, -1, -1, -1, -1, -1, -2, -1, -1, 0],
        &[-1, -1, -1, 0, -1, -1, -2, -2, -1, 0],
        &[0, 0, 0, 0, -1, -1, -1, -1, -1, 0],
        &[0, -1, -1, -1, 0, 0, -1, -1, -1, -1],
    ])
}

pub const RUNNING_TORUS: [&str; 10] = [
        "x_1 → t_3^{-1} x_1",
        "x_2 → t_3^{-1} t_4^{-1} t_5^{-1} x_2",
        "x_3 → t_3^{-1} t_4^{-1} t_5^{-1} x_3",
        "x_4 → t_5^{-1} x_4",
        "x_5 → t_1^{-1} t_3^{-1} t_4^{-1} t_5^{-1} t_6^{-1} x_5",
        "x_6 → t_1^{-1} t_2^{-1} t_3^{-1} x_6",
        "x_7 → t_1^{-1} t_2^{-1} t_3^{-2} t_4^{-1} t_5^{-1} x_7",
        "x_8 → t_1^{-1} t_2^{-1} t_3^{-2} t_4^{-2} t_5^{-1} x_8",
        "x_9 → t_1^{-1} t_2^{-1} t_3^{-1} t_4^{-1} t_5^{-1} x_9",
        "x_10 → t_3^{-1} t_4^{-1} t_5^{-1} t_6^{-1} x_10",
    ];

pub fn example_c_a() -> IntMatrix {
    int(&[
        &[0, 0, -1, -1, 0, -1, -1, -1, -1, -1, -1],
        &[-1, -1, -1, 0, -1, 0, 0, 0, -1, -1, -1],
        &[0, -1, -1, -2, -1, -1, -1, -1, -2, -1, -2],
        &[-1, -1, -3, -1, -1, -1, -1, -1, -1, -2, -2],
        &[0, -1, -1, -1, 0, -1, -1, 0, -1, -1, -1],
        &[-1, 0, -1, 0, -1, -1, 0, -1, -1, -1, -1],
        &[0, -1, -1, -1, 0, -1, -1, -1, -1, -1, -1],
        &[0, -1, -2, -1, 0, -1, -1, -1, -1, -1, -2],
        &[-1, -1, -3, -1, -1, -1, -1, -1, -2, -2, -2],
        &[-1, -1, -2, -2, -1, -1, -1, -1, -2, -2, -2],
        &[-1, 0, -1, -1, 0, -1, -1, -1, -1, -1, -1],
    ])
}

/// The x_1 line as given carries a repeated t_3; this is the string its A row yields.
pub const EXAMPLE_C_TORUS: [&str; 11] = [
        "x_1 → t_1^{-1} t_2^{-1} t_3^{-1} t_4^{-1} t_5^{-1} x_1",
        "x_2 → t_3^{-1} t_4^{-1} t_5^{-1} x_2",
        "x_3 → t_1^{-1} t_2^{-1} t_3^{-2} t_4^{-1} t_5^{-2} x_3",
        "x_4 → t_1^{-1} t_2^{-1} t_3^{-1} t_4^{-2} t_5^{-2} x_4",
        "x_5 → t_1^{-1} t_3^{-1} t_4^{-1} t_5^{-1} x_5",
        "x_6 → t_2^{-1} t_3^{-1} t_4^{-1} t_5^{-1} x_6",
        "x_7 → t_1^{-1} t_2^{-1} t_3^{-1} t_4^{-1} t_5^{-1} x_7",
        "x_8 → t_1^{-1} t_2^{-1} t_3^{-1} t_4^{-1} t_5^{-2} x_8",
        "x_9 → t_1^{-1} t_2^{-1} t_3^{-2} t_4^{-2} t_5^{-2} x_9",
        "x_10 → t_1^{-1} t_2^{-1} t_3^{-2} t_4^{-2} t_5^{-2} x_10",
        "x_11 → t_1^{-1} t_2^{-1} t_3^{-1} t_4^{-1} t_5^{-1} x_11",
    ];

pub fn example_d_a() -> IntMatrix {
    int(&[
        &[0, 0, 0, -1, 0, 0, 0],
        &[0, 0, 1, -1, 0, 0, 0],
        &[0, -1, -1, 0, -1, 0, -1],
        &[1, 1, 1, -1, 0, 0, 1],
        &[0, 0, 0, -1, -1, 0, 0],
        &[0, 0, 1, -1, 0, -1, 0],
        &[0, 0, 0, -1, -1, -1, -1],
    ])
}

pub const EXAMPLE_D_POSITIVE: [(usize, usize); 6] = [(2, 3), (4, 1), (4, 2), (4, 3), (4, 7), (6, 3)];

pub const EXAMPLE_D_TORUS: [&str; 7] = [
        "x_1 → x_1",
        "x_2 → x_2",
        "x_3 → t_1^{-1} t_3^{-1} x_3",
        "x_4 → t_3 x_4",
        "x_5 → t_1^{-1} x_5",
        "x_6 → t_2^{-1} x_6",
        "x_7 → t_1^{-1} t_2^{-1} t_3^{-1} x_7",
    ];
