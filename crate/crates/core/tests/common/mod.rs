#![allow(dead_code)]

use paraspec::ring::{rat, ratio};
use paraspec::{ParametricMatrix, Rational, UniPoly};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_ints(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn random_poly(rng: &mut ChaCha8Rng, var: &str, degree: usize, bound: i64) -> UniPoly {
    let mut c = random_ints(rng, degree + 1, bound);
    if c[degree] == 0 {
        c[degree] = 1;
    }
    UniPoly::from_ints(var, &c)
}

pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=7))
}

/// Symmetric `n x n` matrix with entries of degree at most `degree` in lambda.
pub fn random_parametric(rng: &mut ChaCha8Rng, n: usize, degree: usize) -> ParametricMatrix {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i..n {
            let c = random_ints(rng, degree + 1, 3);
            entries.push(((i, j), UniPoly::from_ints("lambda", &c)));
        }
    }
    ParametricMatrix::build(n, "lambda", entries).unwrap()
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap()
}

pub fn rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|_| (0..n).map(|_| random_rational(rng, 9)).collect())
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return rat(1);
    }
    let mut total = rat(0);
    for col in 0..n {
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][col].clone() * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
