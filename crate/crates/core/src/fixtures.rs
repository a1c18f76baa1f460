//! The alternating-bond hexagon model and its known closed forms.
//!
//! `H(lambda)` is the 6-site ring whose bonds alternate between 1 and
//! `lambda`; at `lambda = 1` it is the regular hexagon adjacency matrix.

use crate::matrix::ParametricMatrix;
use crate::poly::{BiPoly, UniPoly};
use crate::symmetry::SignedPermutation;

/// Name of the built-in hexagon fixture.
pub const BENZENE_HUCKEL: &str = "benzene-huckel";

/// Polynomial in `lambda` from integer coefficients, lowest power first.
pub fn lam(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_ints("lambda", coeffs)
}

/// Upper-triangle bonds `(i, j, coeffs)` of the hexagon, 1-based.
pub fn benzene_bonds() -> Vec<(usize, usize, Vec<i64>)> {
    vec![
        (1, 2, vec![1]),
        (2, 3, vec![0, 1]),
        (3, 4, vec![1]),
        (4, 5, vec![0, 1]),
        (5, 6, vec![1]),
        (1, 6, vec![0, 1]),
    ]
}

pub fn benzene() -> ParametricMatrix {
    let entries = benzene_bonds()
        .into_iter()
        .map(|(i, j, c)| ((i - 1, j - 1), lam(&c)));
    ParametricMatrix::build(6, "lambda", entries).expect("fixture is symmetric")
}

/// `E^6 - 3E^4(l^2+1) + 3E^2(l^4+l^2+1) - l^6 - 2l^3 - 1`.
pub fn benzene_char_poly_golden() -> BiPoly {
    BiPoly::new(
        "E",
        vec![
            lam(&[-1, 0, 0, -2, 0, 0, -1]),
            lam(&[]),
            lam(&[3, 0, 3, 0, 3]),
            lam(&[]),
            lam(&[-3, 0, -3]),
            lam(&[]),
            lam(&[1]),
        ],
    )
}

/// `E^4 - E^2(2l^2 + l + 2) + (l+1)^2 (l^2 - l + 1)`.
pub fn benzene_reduced_golden() -> BiPoly {
    BiPoly::new(
        "E",
        vec![
            lam(&[1, 1, 0, 1, 1]),
            lam(&[]),
            lam(&[-2, -1, -2]),
            lam(&[]),
            lam(&[1]),
        ],
    )
}

/// `1296 l^4 (l+1)^2 (l^2 - l + 1)`.
pub fn benzene_discriminant_golden() -> UniPoly {
    use crate::ring::Ring;
    let l4 = lam(&[0, 0, 0, 0, 1296]);
    l4.mul(&lam(&[1, 1]).pow(2)).mul(&lam(&[1, -1, 1]))
}

fn perm(images_one_based: [usize; 6]) -> SignedPermutation {
    SignedPermutation::unsigned(images_one_based.iter().map(|i| i - 1).collect())
        .expect("fixture is a permutation")
}

/// Rotation by 2pi/3: `[c1..c6] -> [c5, c6, c1, c2, c3, c4]`.
pub fn u1() -> SignedPermutation {
    perm([5, 6, 1, 2, 3, 4])
}

/// Rotation by 4pi/3, taken as `U1^2`.
pub fn u2() -> SignedPermutation {
    u1().compose(&u1())
}

/// Reflection `[c1..c6] -> [c2, c1, c6, c5, c4, c3]`.
pub fn u3() -> SignedPermutation {
    perm([2, 1, 6, 5, 4, 3])
}

/// Reflection `[c1..c6] -> [c6, c5, c4, c3, c2, c1]`.
pub fn u4() -> SignedPermutation {
    perm([6, 5, 4, 3, 2, 1])
}

/// Reflection `[c1..c6] -> [c4, c3, c2, c1, c6, c5]`.
pub fn u5() -> SignedPermutation {
    perm([4, 3, 2, 1, 6, 5])
}

/// A 0/1 matrix close to `U2` but with a
/// stray unit in row 4. Not orthogonal, so no search may accept it.
pub fn u2_with_stray_entry() -> [[i64; 6]; 6] {
    [
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
    ]
}
