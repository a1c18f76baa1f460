//! End-to-end acceptance checks for the benzene model and the exact
//! algebra underneath it. Prints one PASS/FAIL line per criterion.

// checks read `!(err <= tol)` so that NaN fails
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::process::Command;

use nalgebra::{Complex, DMatrix, Schur};
use num_traits::ToPrimitive;
use paraspec::elimination::{discriminant_with, resultant_with, SubresultantPrs, SylvesterBareiss};
use paraspec::fixtures::benzene;
use paraspec::matrix::ENERGY;
use paraspec::poly::{gcd, square_free_decomposition};
use paraspec::ring::{rat, ratio};
use paraspec::spectra::{
    classify_crossings, jacobi_eigenvalues, sturm_real_roots, sweep, sweep_sequential,
    CrossingOptions,
};
use paraspec::symmetry::{
    commutator_at, commutes, find_symmetries, group_closure, SignedPermutation,
};
use paraspec::{BiPoly, ParametricMatrix, Rational, Ring, UniPoly, Var};
use paraspec_cli::document::{parse_document, Entry, MatrixDocument};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lam(c: &[i64]) -> UniPoly {
    UniPoly::from_ints("lambda", c)
}

/// `sum c[k] E^k` with coefficients in lambda.
fn in_e(c: Vec<UniPoly>) -> BiPoly {
    BiPoly::new(ENERGY, c)
}

fn energy() -> BiPoly {
    in_e(vec![lam(&[]), lam(&[1])])
}

fn from_lambda(p: UniPoly) -> BiPoly {
    in_e(vec![p])
}

fn f64_of(r: &Rational) -> f64 {
    r.to_f64().unwrap()
}

/// The hexagon written out row by row: 1 is a unit bond, 2 a lambda bond.
fn literal_matrix() -> ParametricMatrix {
    let rows = [
        [0, 1, 0, 0, 0, 2],
        [1, 0, 2, 0, 0, 0],
        [0, 2, 0, 1, 0, 0],
        [0, 0, 1, 0, 2, 0],
        [0, 0, 0, 2, 0, 1],
        [2, 0, 0, 0, 1, 0],
    ];
    let mut entries = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            match v {
                1 => entries.push(((i, j), lam(&[1]))),
                2 => entries.push(((i, j), lam(&[0, 1]))),
                _ => {}
            }
        }
    }
    ParametricMatrix::build(6, "lambda", entries).unwrap()
}

fn golden_char_poly() -> BiPoly {
    // E^6 - 3E^4(l^2+1) + 3E^2(l^4+l^2+1) - l^6 - 2l^3 - 1
    let e = energy();
    e.pow(6)
        .sub(&e.pow(4).mul(&from_lambda(lam(&[3, 0, 3]))))
        .add(&e.pow(2).mul(&from_lambda(lam(&[3, 0, 3, 0, 3]))))
        .sub(&from_lambda(lam(&[1, 0, 0, 2, 0, 0, 1])))
}

fn criterion_1() -> Check {
    let h = literal_matrix();
    ensure!(
        h == benzene(),
        "built-in fixture differs from the literal matrix"
    );
    let p = h.char_poly();
    let golden = golden_char_poly();
    ensure!(
        p.degree() == golden.degree(),
        "degree {:?} vs {:?}",
        p.degree(),
        golden.degree()
    );
    for k in 0..=6 {
        ensure!(
            p.coeff(k) == golden.coeff(k),
            "E^{k}: {} vs {}",
            p.coeff(k),
            golden.coeff(k)
        );
    }
    Ok(())
}

fn criterion_2() -> Check {
    let p = benzene().char_poly();
    let e = Var::new(ENERGY);
    for d in [
        discriminant_with(&SubresultantPrs, &p, &e).map_err(|x| x.to_string())?,
        discriminant_with(&SylvesterBareiss, &p, &e).map_err(|x| x.to_string())?,
    ] {
        ensure!(d.is_zero() && d.coeffs().is_empty(), "discriminant is {d}");
    }
    Ok(())
}

fn criterion_3() -> Check {
    let e = energy();
    let factored = e
        .add(&from_lambda(lam(&[1, 1])))
        .mul(&e.sub(&from_lambda(lam(&[1, 1]))))
        .mul(&e.pow(2).sub(&from_lambda(lam(&[1, -1, 1]))));
    let expanded = e
        .pow(4)
        .sub(&e.pow(2).mul(&from_lambda(lam(&[2, 1, 2]))))
        .add(&from_lambda(lam(&[1, 1]).pow(2).mul(&lam(&[1, -1, 1]))));
    ensure!(
        factored == expanded,
        "factored and expanded reduced polynomials disagree"
    );
    let q = benzene().reduced_char_poly();
    ensure!(q == expanded, "reduced polynomial is {q}");
    let golden = lam(&[0, 0, 0, 0, 1296])
        .mul(&lam(&[1, 1]).pow(2))
        .mul(&lam(&[1, -1, 1]));
    let ev = Var::new(ENERGY);
    for (name, d) in [
        ("subresultant", discriminant_with(&SubresultantPrs, &q, &ev)),
        ("sylvester", discriminant_with(&SylvesterBareiss, &q, &ev)),
    ] {
        let d = d.map_err(|x| x.to_string())?;
        ensure!(d == golden, "{name}: discriminant is {d}");
    }
    Ok(())
}

fn criterion_4() -> Check {
    let r =
        classify_crossings(&benzene(), &CrossingOptions::default()).map_err(|x| x.to_string())?;
    let found: Vec<f64> = r.crossings.iter().map(|c| c.lambda.value).collect();
    ensure!(found.len() == 2, "crossings at {found:?}");
    for (got, want) in found.iter().zip([-1.0, 0.0]) {
        ensure!(
            (got - want).abs() <= 1e-10,
            "crossing at {got}, expected {want}"
        );
    }
    ensure!(
        r.unconfirmed.is_empty(),
        "unconfirmed roots {:?}",
        r.unconfirmed
    );
    let eps: Vec<(f64, f64)> = r
        .exceptional_points
        .iter()
        .map(|p| (p.root.value.re, p.root.value.im))
        .collect();
    let half_root3 = 3f64.sqrt() / 2.0;
    ensure!(eps.len() == 2, "exceptional points {eps:?}");
    for ((re, im), want_im) in eps.iter().zip([-half_root3, half_root3]) {
        ensure!(
            (re - 0.5).abs() <= 1e-10 && (im - want_im).abs() <= 1e-10,
            "exceptional point {re} {im}i"
        );
    }
    let rho = r.convergence_radius.ok_or("no convergence radius")?;
    ensure!((rho - 1.0).abs() <= 1e-10, "convergence radius {rho}");

    // the same through the command line
    let out = Command::new(env!("CARGO_BIN_EXE_paraspec"))
        .args(["report", "--builtin", "benzene-huckel", "--format", "json"])
        .output()
        .map_err(|x| x.to_string())?;
    ensure!(
        out.status.success(),
        "report exited with {:?}",
        out.status.code()
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|x| x.to_string())?;
    ensure!(
        v["disc_before_reduction_zero"] == true,
        "disc_before_reduction_zero not true"
    );
    let lambdas: Vec<f64> = v["crossings"]
        .as_array()
        .ok_or("no crossings")?
        .iter()
        .map(|c| c["lambda"]["value"].as_f64().unwrap())
        .collect();
    ensure!(lambdas == [-1.0, 0.0], "report crossings {lambdas:?}");
    let ims: Vec<f64> = v["exceptional_points"]
        .as_array()
        .ok_or("no exceptional points")?
        .iter()
        .map(|p| p["im"].as_f64().unwrap())
        .collect();
    ensure!(
        ims.len() == 2 && (ims[1] - half_root3).abs() <= 1e-10,
        "report exceptional points {ims:?}"
    );
    ensure!(
        (v["convergence_radius"].as_f64().unwrap() - 1.0).abs() <= 1e-10,
        "report radius"
    );
    ensure!(
        v["symmetry"]["order"] == 6,
        "report symmetry order {}",
        v["symmetry"]["order"]
    );
    Ok(())
}

fn criterion_5() -> Check {
    let h = benzene();
    let p = h.char_poly();
    let (_, factors) =
        square_free_decomposition(&p, &Var::new(ENERGY)).map_err(|x| x.to_string())?;
    let double = in_e(vec![lam(&[-1, 1, -1]), lam(&[]), lam(&[1])]);
    let twice: Vec<_> = factors.iter().filter(|f| f.multiplicity == 2).collect();
    ensure!(
        twice.len() == 1,
        "{} factors of multiplicity 2",
        twice.len()
    );
    ensure!(
        twice[0].factor == double,
        "multiplicity-2 factor is {}",
        twice[0].factor
    );
    ensure!(
        h.degeneracy_profile().persistent_degeneracy,
        "persistent_degeneracy is false"
    );
    Ok(())
}

fn u_from_rows(rows: [[i64; 6]; 6]) -> SignedPermutation {
    SignedPermutation::from_matrix(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn criterion_6() -> Check {
    let h = benzene();
    let found = find_symmetries(&h, false).map_err(|x| x.to_string())?;
    ensure!(found.len() == 6, "{} symmetries", found.len());
    let group = group_closure(6, &found).map_err(|x| x.to_string())?;
    ensure!(
        group.elements == found,
        "symmetries are not closed under composition"
    );
    ensure!(!group.abelian, "group is abelian");

    let frozen = find_symmetries(&h.freeze(&rat(1)), false).map_err(|x| x.to_string())?;
    ensure!(
        frozen.len() == 12,
        "{} symmetries at lambda = 1",
        frozen.len()
    );

    let u1 = u_from_rows([
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
    ]);
    let u3 = u_from_rows([
        [0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
    ]);
    for (name, u) in [("U1", &u1), ("U3", &u3)] {
        ensure!(found.contains(u), "{name} not found");
        ensure!(
            commutes(&h, u).map_err(|x| x.to_string())?,
            "{name} does not commute"
        );
        for v in [rat(-3), ratio(1, 2), rat(0), rat(7)] {
            let c = commutator_at(&h, u, &v);
            let zero = (0..6).all(|i| (0..6).all(|j| Ring::is_zero(c.get(i, j))));
            ensure!(zero, "[H({v}), {name}] is not zero");
        }
    }
    Ok(())
}

fn spot(l: f64, want: &[f64], tol: f64) -> Check {
    let m = benzene().eval_at_f64(l).map_err(|x| x.to_string())?;
    let got = jacobi_eigenvalues(&m, 1e-14).map_err(|x| x.to_string())?;
    for (g, w) in got.iter().zip(want) {
        ensure!((g - w).abs() <= tol, "lambda = {l}: {got:?}");
    }
    Ok(())
}

fn criterion_7() -> Check {
    let r3 = 3f64.sqrt();
    spot(0.0, &[-1.0, -1.0, -1.0, 1.0, 1.0, 1.0], 1e-10)?;
    spot(-1.0, &[-r3, -r3, 0.0, 0.0, r3, r3], 1e-8)?;
    spot(1.0, &[-2.0, -1.0, -1.0, 1.0, 1.0, 2.0], 1e-8)
}

fn random_poly(rng: &mut ChaCha8Rng, var: &str, degree: usize) -> UniPoly {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-9..=9)).collect();
    if c[degree] == 0 {
        c[degree] = rng.gen_range(1..=9);
    }
    UniPoly::from_ints(var, &c)
}

fn companion_roots(p: &UniPoly) -> Vec<Complex<f64>> {
    let d = p.degree().unwrap();
    let lead = f64_of(p.leading().unwrap());
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 0..d {
        if i > 0 {
            m[(i, i - 1)] = 1.0;
        }
        m[(i, d - 1)] = -f64_of(&p.coeff(i)) / lead;
    }
    // QR without exceptional shifts can stall on cyclic companions such as
    // x^d + c; a diagonal shift breaks the cycle and is undone afterwards
    for shift in [0.0, 0.375, -0.625] {
        let shifted = &m + DMatrix::<f64>::identity(d, d) * shift;
        if let Some(schur) = Schur::try_new(shifted, f64::EPSILON, 10_000) {
            return schur
                .complex_eigenvalues()
                .iter()
                .map(|z| z - shift)
                .collect();
        }
    }
    panic!("no Schur form for {p}");
}

fn eval_c(p: &UniPoly, z: Complex<f64>) -> Complex<f64> {
    p.coeffs()
        .iter()
        .rev()
        .fold(Complex::new(0.0, 0.0), |acc, c| acc * z + f64_of(c))
}

fn relative(exact: f64, approx: f64) -> f64 {
    if exact == 0.0 {
        approx.abs()
    } else {
        (exact - approx).abs() / exact.abs()
    }
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let x = Var::new("x");
    let mut square_free = 0;
    for _ in 0..250 {
        let (da, db) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let a = random_poly(&mut rng, "x", da);
        let b = random_poly(&mut rng, "x", db);
        let s = resultant_with(&SylvesterBareiss, &a, &b, &x).map_err(|e| e.to_string())?;
        let t = resultant_with(&SubresultantPrs, &a, &b, &x).map_err(|e| e.to_string())?;
        ensure!(s == t, "Res({a}, {b}): {s} vs {t}");

        let lead = f64_of(a.leading().unwrap());
        let oracle = companion_roots(&a)
            .into_iter()
            .fold(Complex::new(lead.powi(db as i32), 0.0), |acc, z| {
                acc * eval_c(&b, z)
            });
        let err = relative(f64_of(&s), oracle.re);
        ensure!(
            err <= 1e-8,
            "Res({a}, {b}) = {s}, root product {oracle} (relative error {err:e})"
        );

        let sf = gcd(&a, &a.derivative(), &x).map_err(|e| e.to_string())?;
        if sf.degree() != Some(0) || da < 2 {
            continue;
        }
        square_free += 1;
        let d = discriminant_with(&SubresultantPrs, &a, &x).map_err(|e| e.to_string())?;
        let roots = companion_roots(&a);
        let mut oracle = Complex::new(lead.powi(2 * da as i32 - 2), 0.0);
        for i in 0..da {
            for j in i + 1..da {
                oracle *= (roots[i] - roots[j]).powi(2);
            }
        }
        let err = relative(f64_of(&d), oracle.re);
        ensure!(
            err <= 1e-8,
            "Disc({a}) = {d}, root differences {oracle} (relative error {err:e})"
        );
    }
    ensure!(
        square_free >= 100,
        "only {square_free} square-free instances"
    );
    Ok(())
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ParametricMatrix {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i..n {
            let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
            entries.push(((i, j), lam(&c)));
        }
    }
    ParametricMatrix::build(n, "lambda", entries).unwrap()
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    let mut matrices = vec![benzene()];
    for _ in 0..10 {
        let n = rng.gen_range(1..=5);
        matrices.push(random_matrix(&mut rng, n));
    }
    let tol = ratio(1, 1 << 50);
    for h in &matrices {
        let q = h.char_poly();
        for _ in 0..20 {
            let l0 = ratio(rng.gen_range(-300..=300), rng.gen_range(1..=100));
            let roots = sturm_real_roots(&q.eval_inner(&l0), &tol).map_err(|e| e.to_string())?;
            let exact: Vec<f64> = roots
                .iter()
                .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
                .collect();
            let numeric = jacobi_eigenvalues(&h.eval_at(&l0), 1e-14).map_err(|e| e.to_string())?;
            ensure!(
                exact.len() == h.n(),
                "{} real roots for n = {}",
                exact.len(),
                h.n()
            );
            for (a, b) in exact.iter().zip(&numeric) {
                ensure!(
                    (a - b).abs() <= 1e-8,
                    "lambda0 = {l0}: {exact:?} vs {numeric:?}"
                );
            }
        }
    }
    Ok(())
}

fn random_document(rng: &mut ChaCha8Rng) -> MatrixDocument {
    let n = rng.gen_range(1..=6);
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if rng.gen_bool(0.5) {
                let len = rng.gen_range(0..=4);
                let coeffs = (0..len)
                    .map(|_| ratio(rng.gen_range(-99..=99), rng.gen_range(1..=30)))
                    .collect();
                entries.push(Entry { i, j, coeffs });
            }
        }
    }
    MatrixDocument {
        n,
        parameter: "lambda".into(),
        entries,
    }
}

fn criterion_10() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_paraspec"))
            .args(["report", "--builtin", "benzene-huckel"])
            .output()
            .map(|o| o.stdout)
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    ensure!(!first.is_empty(), "empty report");
    for _ in 0..2 {
        ensure!(run()? == first, "report differs between runs");
    }
    let h = benzene();
    let par = sweep(&h, -2.0, 2.0, 401).map_err(|e| e.to_string())?;
    let seq = sweep_sequential(&h, -2.0, 2.0, 401).map_err(|e| e.to_string())?;
    ensure!(par == seq, "parallel sweep differs from sequential");

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..500 {
        let doc = random_document(&mut rng);
        let text = doc.to_json();
        let back = parse_document(text.as_bytes()).map_err(|e| e.to_string())?;
        ensure!(
            back == doc && back.to_json() == text,
            "round trip failed for {text}"
        );
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("golden characteristic polynomial", criterion_1),
        ("discriminant vanishes identically", criterion_2),
        ("square-free reduction and its discriminant", criterion_3),
        (
            "crossings, exceptional points, convergence radius",
            criterion_4,
        ),
        ("degeneracy profile", criterion_5),
        ("permutation symmetries", criterion_6),
        ("spectral spot values", criterion_7),
        ("resultant and discriminant identities", criterion_8),
        ("exact and numeric spectra agree", criterion_9),
        ("command-line determinism and round trip", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("acceptance {:>2} PASS  {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
