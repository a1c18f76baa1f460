//! Permutation symmetries commuting with a whole matrix family.
//!
//! A [`SignedPermutation`] `U` has exactly one nonzero entry `signs[i]` per
//! row, in column `images[i]`, so `(U v)_i = signs[i] * v[images[i]]`. It
//! commutes with `H(lambda)` for every `lambda` iff
//! `U^T H_k U = H_k` for every coefficient matrix of `H(lambda) = sum
//! lambda^k H_k`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::elimination::Matrix;
use crate::error::{Error, Result};
use crate::matrix::ParametricMatrix;
use crate::ring::{rat, Rational, Ring};

/// Default upper bound on `n` for exhaustive search.
pub const DEFAULT_SEARCH_BOUND: usize = 10;
/// Default upper bound on group size.
pub const DEFAULT_GROUP_BOUND: usize = 10_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    images: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(images: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = images.len();
        if signs.len() != n {
            return Err(Error::domain("images and signs differ in length"));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::domain("signs must be +1 or -1"));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::domain(format!("{images:?} is not a permutation")));
            }
        }
        Ok(SignedPermutation { images, signs })
    }

    pub fn unsigned(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        Self::new(images, vec![1; n])
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// Reads a signed permutation matrix; anything else is a domain error.
    pub fn from_matrix(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut images = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::domain("matrix must be square"));
            }
            let nonzero: Vec<_> = row.iter().enumerate().filter(|(_, &v)| v != 0).collect();
            match nonzero.as_slice() {
                [(j, &v)] if v == 1 || v == -1 => {
                    images.push(*j);
                    signs.push(v as i8);
                }
                _ => {
                    return Err(Error::domain(format!(
                        "row {} is not a signed unit vector",
                        i + 1
                    )))
                }
            }
        }
        Self::new(images, signs)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n())
    }

    pub fn is_unsigned(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                let mut row = vec![0; n];
                row[self.images[i]] = self.signs[i] as i64;
                row
            })
            .collect()
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        let images = self.images.iter().map(|&j| other.images[j]).collect();
        let signs = self
            .images
            .iter()
            .zip(&self.signs)
            .map(|(&j, &s)| s * other.signs[j])
            .collect();
        SignedPermutation { images, signs }
    }

    /// The transpose, which is the inverse.
    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut images = vec![0; n];
        let mut signs = vec![1; n];
        for (i, (&j, &s)) in self.images.iter().zip(&self.signs).enumerate() {
            images[j] = i;
            signs[j] = s;
        }
        SignedPermutation { images, signs }
    }

    /// Smallest `k >= 1` with `self^k = I`.
    pub fn order(&self) -> usize {
        let id = Self::identity(self.n());
        let mut p = self.clone();
        let mut k = 1;
        while p != id {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<bool>) {
        (
            self.images.clone(),
            self.signs.iter().map(|&s| s < 0).collect(),
        )
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .zip(&self.signs)
            .map(|(&j, &s)| format!("{}{}", if s < 0 { "-" } else { "" }, j + 1))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn sort_canonically(elements: &mut [SignedPermutation]) {
    elements.sort_by_key(SignedPermutation::sort_key);
}

/// True iff `U^T H(lambda) U = H(lambda)` identically in `lambda`.
pub fn commutes(h: &ParametricMatrix, u: &SignedPermutation) -> Result<bool> {
    let n = h.n();
    if u.n() != n {
        return Err(Error::domain(format!(
            "{}x{} permutation against {n}x{n} matrix",
            u.n(),
            u.n()
        )));
    }
    let coeffs = h.coefficient_matrices();
    Ok(coeffs.iter().all(|hk| invariant_under(hk, u)))
}

/// `(U^T A U)_{pi(a) pi(b)} = s_a s_b A_{ab}`, so invariance means
/// `A_{pi(a) pi(b)} = s_a s_b A_{ab}` for all `a, b`.
fn invariant_under(a: &Matrix<Rational>, u: &SignedPermutation) -> bool {
    let n = u.n();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let s = (u.signs[i] * u.signs[j]) as i64;
            a.get(u.images[i], u.images[j]) == &a.get(i, j).scale(s)
        })
    })
}

#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    /// Largest dimension searched exhaustively.
    pub max_dimension: usize,
    /// Largest number of elements returned or generated.
    pub max_elements: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_dimension: DEFAULT_SEARCH_BOUND,
            max_elements: DEFAULT_GROUP_BOUND,
        }
    }
}

/// All (optionally signed) permutation matrices commuting with `h`,
/// canonically sorted with the identity first.
pub fn find_symmetries(h: &ParametricMatrix, signed: bool) -> Result<Vec<SignedPermutation>> {
    find_symmetries_with(h, signed, SearchLimits::default())
}

pub fn find_symmetries_with(
    h: &ParametricMatrix,
    signed: bool,
    limits: SearchLimits,
) -> Result<Vec<SignedPermutation>> {
    let n = h.n();
    if n > limits.max_dimension {
        return Err(Error::Capability(format!(
            "exhaustive symmetry search is limited to n <= {}; got n = {n} \
             (verify candidate generators with `commutes` and `group_closure` instead)",
            limits.max_dimension
        )));
    }
    if n == 0 {
        return Ok(vec![SignedPermutation::identity(0)]);
    }
    let coeffs = h.coefficient_matrices();
    let sign_choices: &[i8] = if signed { &[1, -1] } else { &[1] };
    let starts: Vec<(usize, i8)> = (0..n)
        .flat_map(|img| sign_choices.iter().map(move |&s| (img, s)))
        .collect();

    let found: Vec<Vec<SignedPermutation>> = starts
        .par_iter()
        .map(|&(img, s)| {
            let mut search = Search {
                coeffs: &coeffs,
                n,
                sign_choices,
                images: vec![img],
                signs: vec![s],
                used: {
                    let mut u = vec![false; n];
                    u[img] = true;
                    u
                },
                out: Vec::new(),
                limit: limits.max_elements,
            };
            if search.consistent() {
                search.extend();
            }
            search.out
        })
        .collect();

    let total: usize = found.iter().map(Vec::len).sum();
    if total > limits.max_elements {
        return Err(Error::Capability(format!(
            "more than {} commuting permutations",
            limits.max_elements
        )));
    }
    let mut all: Vec<_> = found.into_iter().flatten().collect();
    sort_canonically(&mut all);
    Ok(all)
}

struct Search<'a> {
    coeffs: &'a [Matrix<Rational>],
    n: usize,
    sign_choices: &'a [i8],
    images: Vec<usize>,
    signs: Vec<i8>,
    used: Vec<bool>,
    out: Vec<SignedPermutation>,
    limit: usize,
}

impl Search<'_> {
    /// Checks the newest assignment against all earlier ones (and itself).
    fn consistent(&self) -> bool {
        let a = self.images.len() - 1;
        let (pa, sa) = (self.images[a], self.signs[a] as i64);
        self.coeffs.iter().all(|hk| {
            (0..=a).all(|b| {
                let (pb, sb) = (self.images[b], self.signs[b] as i64);
                hk.get(pa, pb) == &hk.get(a, b).scale(sa * sb)
            })
        })
    }

    fn extend(&mut self) {
        if self.out.len() > self.limit {
            return;
        }
        if self.images.len() == self.n {
            self.out.push(SignedPermutation {
                images: self.images.clone(),
                signs: self.signs.clone(),
            });
            return;
        }
        for img in 0..self.n {
            if self.used[img] {
                continue;
            }
            for &s in self.sign_choices {
                self.images.push(img);
                self.signs.push(s);
                if self.consistent() {
                    self.used[img] = true;
                    self.extend();
                    self.used[img] = false;
                }
                self.images.pop();
                self.signs.pop();
            }
        }
    }
}

/// A finite group of signed permutations with its multiplication table.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryGroup {
    /// Canonically sorted; the identity comes first.
    pub elements: Vec<SignedPermutation>,
    /// `cayley_table[i][j]` is the index of `elements[i] * elements[j]`.
    pub cayley_table: Vec<Vec<usize>>,
    pub order: usize,
    pub abelian: bool,
}

impl SymmetryGroup {
    pub fn element_set(&self) -> BTreeSet<(Vec<usize>, Vec<i8>)> {
        self.elements
            .iter()
            .map(|e| (e.images.clone(), e.signs.clone()))
            .collect()
    }

    pub fn index_of(&self, u: &SignedPermutation) -> Option<usize> {
        self.elements.iter().position(|e| e == u)
    }
}

/// Closure of `generators` under composition, in dimension `n`.
pub fn group_closure(n: usize, generators: &[SignedPermutation]) -> Result<SymmetryGroup> {
    group_closure_with(n, generators, DEFAULT_GROUP_BOUND)
}

pub fn group_closure_with(
    n: usize,
    generators: &[SignedPermutation],
    max_elements: usize,
) -> Result<SymmetryGroup> {
    if let Some(g) = generators.iter().find(|g| g.n() != n) {
        return Err(Error::domain(format!(
            "generator {g:?} has dimension {} instead of {n}",
            g.n()
        )));
    }
    let identity = SignedPermutation::identity(n);
    let mut seen: HashMap<SignedPermutation, ()> = HashMap::new();
    seen.insert(identity.clone(), ());
    let mut elements = vec![identity];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(k) = queue.pop_front() {
        for g in generators {
            let next = elements[k].compose(g);
            if seen.insert(next.clone(), ()).is_none() {
                if elements.len() >= max_elements {
                    return Err(Error::Capability(format!(
                        "group closure exceeds {max_elements} elements"
                    )));
                }
                elements.push(next);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    sort_canonically(&mut elements);
    let index: HashMap<&SignedPermutation, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let cayley_table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let order = elements.len();
    let abelian = (0..order).all(|i| (0..order).all(|j| cayley_table[i][j] == cayley_table[j][i]));
    Ok(SymmetryGroup {
        elements,
        cayley_table,
        order,
        abelian,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryReport {
    pub order: usize,
    pub abelian: bool,
    pub signed: bool,
    /// A nonabelian commutant group forces repeated eigenvalues.
    pub degeneracy_expected: bool,
    /// The characteristic polynomial has a repeated factor for all parameters.
    pub degeneracy_observed: bool,
    pub consistent: bool,
    pub note: String,
    pub group: SymmetryGroup,
}

pub fn symmetry_report(h: &ParametricMatrix, signed: bool) -> Result<SymmetryReport> {
    let elements = find_symmetries(h, signed)?;
    let group = group_closure(h.n(), &elements)?;
    if group.elements != elements {
        return Err(Error::InternalFault(
            "commuting permutations are not closed under composition".into(),
        ));
    }
    let degeneracy_expected = !group.abelian;
    let degeneracy_observed = h.degeneracy_profile().persistent_degeneracy;
    let note = match (degeneracy_expected, degeneracy_observed) {
        (true, true) => {
            "persistent degeneracy predicted by a nonabelian symmetry group and observed"
        }
        (false, false) => "no persistent degeneracy predicted or observed",
        (false, true) => "degeneracy not explained by detected permutation symmetries",
        (true, false) => "nonabelian symmetry group detected but no persistent degeneracy observed",
    };
    Ok(SymmetryReport {
        order: group.order,
        abelian: group.abelian,
        signed,
        degeneracy_expected,
        degeneracy_observed,
        consistent: degeneracy_expected == degeneracy_observed,
        note: note.to_owned(),
        group,
    })
}

/// `H U - U H` for the matrix `H(value)`, computed exactly.
pub fn commutator_at(
    h: &ParametricMatrix,
    u: &SignedPermutation,
    value: &Rational,
) -> Matrix<Rational> {
    let n = h.n();
    let hm = Matrix::from_fn(n, n, |i, j| h.get(i, j).eval(value));
    let um = u.to_matrix();
    let mul = |a: &dyn Fn(usize, usize) -> Rational, b: &dyn Fn(usize, usize) -> Rational| {
        Matrix::from_fn(n, n, |i, j| {
            (0..n).fold(rat(0), |acc, k| acc + a(i, k) * b(k, j))
        })
    };
    let hf = |i: usize, j: usize| hm.get(i, j).clone();
    let uf = |i: usize, j: usize| rat(um[i][j]);
    let hu = mul(&hf, &uf);
    let uh = mul(&uf, &hf);
    Matrix::from_fn(n, n, |i, j| hu.get(i, j).sub(uh.get(i, j)))
}
