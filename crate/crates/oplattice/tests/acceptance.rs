//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured runtime. Every assertion is an exact rational equality.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use num_traits::{One, Zero};
use oplattice::detector::{classify, invert_quadratic, pearson_solve_from_moments, Verdict};
use oplattice::error::Error;
use oplattice::lattice::Lattice;
use oplattice::para_krawtchouk::{pk_functional, pk_table, ParaKrawtchoukParams};
use oplattice::pearson::{PearsonData, RecurrenceEngine};
use oplattice::poly::Polynomial;
use oplattice::recurrence::{generate, gram_check, moments_from_recurrence, RecurrenceTable};
use oplattice::scalar::{int, rat, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

fn budget(name: &str, start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    println!("acceptance {name}: PASS in {elapsed:.2?} (budget {limit:?})");
    assert!(
        elapsed <= limit,
        "{name} exceeded its runtime budget: {elapsed:?} > {limit:?}"
    );
}

fn grid_n() -> [u32; 5] {
    [3, 5, 7, 9, 11]
}

fn grid_gamma() -> [Scalar; 4] {
    [rat(1, 3), rat(1, 2), rat(3, 4), rat(3, 2)]
}

/// Recovered values the positive run must reproduce exactly:
/// a = 1/(1-N), b = (-1+N+gamma)/(-1+N), c = e = (1-N-gamma)/2, d = 1.
fn expected_pd(n: u32, gamma: &Scalar) -> PearsonData {
    let n = int(n as i64);
    let a = (int(1) - &n).recip();
    let b = (&n + gamma - int(1)) / (&n - int(1));
    let c = (int(1) - &n - gamma) / int(2);
    PearsonData::new(a, b, c.clone(), Scalar::one(), c).unwrap()
}

fn lat_2s_plus_1() -> Lattice {
    Lattice::quadratic(int(0), int(2), int(1)).unwrap()
}

fn lat_3s() -> Lattice {
    Lattice::quadratic(int(0), int(3), int(0)).unwrap()
}

#[test]
fn criterion_1_positive_reproduction() {
    let start = Instant::now();
    for n in grid_n() {
        for gamma in grid_gamma() {
            let p = ParaKrawtchoukParams::new(n, gamma.clone()).unwrap();
            let table = pk_table(&p);
            let verdict = classify(&table, &lat_2s_plus_1(), n as usize - 1).unwrap();
            match verdict {
                Verdict::Classical { pd, .. } => {
                    assert_eq!(pd, expected_pd(n, &gamma), "N = {n}, gamma = {gamma}");
                }
                v => panic!("N = {n}, gamma = {gamma}: expected Classical, got {v:?}"),
            }
        }
    }
    // N = 1 has a single recurrence pair: the expected value 1/(1 - N) is
    // undefined and classification is impossible by construction.
    let p = ParaKrawtchoukParams::new(1, rat(1, 2)).unwrap();
    let table = pk_table(&p);
    assert_eq!(table.len(), 1);
    assert!(matches!(
        classify(&table, &lat_2s_plus_1(), 2),
        Err(Error::TableTooShort { .. })
    ));
    budget("criterion 1 (positive grid)", start, Duration::from_secs(5));
}

#[test]
fn criterion_2_negative_reproduction() {
    let start = Instant::now();
    for n in grid_n() {
        for gamma in grid_gamma() {
            let p = ParaKrawtchoukParams::new(n, gamma.clone()).unwrap();
            let table = pk_table(&p);
            let verdict = classify(&table, &lat_3s(), n as usize - 1).unwrap();
            assert!(
                matches!(verdict, Verdict::NotClassical { .. }),
                "N = {n}, gamma = {gamma}: expected NotClassical, got {verdict:?}"
            );
        }
    }
    budget("criterion 2 (negative grid)", start, Duration::from_secs(5));
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Scalar {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=20))
}

fn rand_pd(rng: &mut ChaCha8Rng) -> PearsonData {
    loop {
        if let Ok(pd) = PearsonData::new(
            rand_rat(rng),
            rand_rat(rng),
            rand_rat(rng),
            Scalar::one(),
            rand_rat(rng),
        ) {
            return pd;
        }
    }
}

/// Table through `n = 0..=upto` for instances regular through `upto`.
fn regular_table(pd: &PearsonData, l: &Lattice, upto: usize) -> Option<RecurrenceTable> {
    let engine = RecurrenceEngine::new(pd, l);
    if !engine.regularity(upto).is_regular() {
        return None;
    }
    let mut b = Vec::with_capacity(upto + 1);
    let mut c = Vec::with_capacity(upto + 1);
    for n in 0..=upto {
        let (bn, cn) = engine.pair(n).ok()?;
        b.push(bn);
        c.push(cn);
    }
    RecurrenceTable::new(b, c).ok()
}

type Instances = Vec<(PearsonData, Lattice, RecurrenceTable)>;

/// Shared by criteria 3 and 7: the quadratic round-trip instances.
fn quadratic_roundtrip_instances() -> &'static Instances {
    static CACHE: std::sync::OnceLock<Instances> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(20250809);
        let mut out = Vec::with_capacity(200);
        while out.len() < 200 {
            let l = loop {
                if let Ok(l) =
                    Lattice::quadratic(rand_rat(&mut rng), rand_rat(&mut rng), rand_rat(&mut rng))
                {
                    break l;
                }
            };
            let pd = rand_pd(&mut rng);
            if let Some(t) = regular_table(&pd, &l, 25) {
                out.push((pd, l, t));
            }
        }
        out
    })
}

fn q_linear_roundtrip_instances(count: usize) -> Vec<(PearsonData, Lattice, RecurrenceTable)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1148);
    let rs = [rat(1, 3), rat(1, 2), int(2), int(3)];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = rs[rng.gen_range(0..4)].clone();
        let l = loop {
            if let Ok(l) = Lattice::q_linear(
                r.clone(),
                rand_rat(&mut rng),
                rand_rat(&mut rng),
                rand_rat(&mut rng),
            ) {
                break l;
            }
        };
        let pd = rand_pd(&mut rng);
        if let Some(t) = regular_table(&pd, &l, 25) {
            out.push((pd, l, t));
        }
    }
    out
}

#[test]
fn criterion_3_roundtrip_suite() {
    let start = Instant::now();
    let quad = quadratic_roundtrip_instances();
    let qlin = q_linear_roundtrip_instances(100);
    for (pd, l, t) in quad.iter().chain(&qlin) {
        match classify(t, l, 12).unwrap() {
            Verdict::Classical { pd: got, .. } => {
                assert_eq!(&got, pd, "round-trip failed on {l:?}");
            }
            v => panic!("expected Classical on {l:?}, got {v:?}"),
        }
    }
    budget(
        "criterion 3 (300 round-trips)",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_4_orthogonality_of_the_finite_family() {
    let start = Instant::now();
    for n in [3u32, 5, 7] {
        for gamma in [rat(1, 3), rat(1, 2)] {
            let p = ParaKrawtchoukParams::new(n, gamma.clone()).unwrap();
            let table = pk_table(&p);
            let u = pk_functional(&p);
            let ops = generate(&table, n as usize).unwrap();
            let g = gram_check(&u, &ops);
            let mass = u.total_mass();
            for i in 0..g.rows() {
                for j in 0..g.cols() {
                    if i != j {
                        assert!(
                            g.get(i, j).is_zero(),
                            "N = {n}, gamma = {gamma}: G[{i}][{j}] = {} != 0 (sum of weights = {})",
                            g.get(i, j),
                            mass
                        );
                    }
                }
            }
            let g00 = g.get(0, 0).clone();
            let mut prod = Scalar::one();
            for k in 1..=n as usize {
                prod *= table.c(k);
                assert_eq!(
                    g.get(k, k) / &g00,
                    prod,
                    "N = {n}, gamma = {gamma}: diagonal ratio at {k} (sum of weights = {mass})"
                );
            }
        }
    }
    budget(
        "criterion 4 (Gram matrices)",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_5_operator_identities() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let z = Polynomial::monomial(1);
    let z2 = Polynomial::monomial(2);
    for i in 0..50 {
        let l = if i % 2 == 0 {
            loop {
                if let Ok(l) =
                    Lattice::quadratic(rand_rat(&mut rng), rand_rat(&mut rng), rand_rat(&mut rng))
                {
                    break l;
                }
            }
        } else {
            let rs = [rat(1, 3), rat(1, 2), int(2), int(3), rat(5, 2)];
            let r = rs[rng.gen_range(0..5)].clone();
            loop {
                if let Ok(l) = Lattice::q_linear(
                    r.clone(),
                    rand_rat(&mut rng),
                    rand_rat(&mut rng),
                    rand_rat(&mut rng),
                ) {
                    break l;
                }
            }
        };
        let (alpha, beta) = l.alpha_beta();
        assert_eq!(l.d_op(&z).unwrap(), Polynomial::one());
        assert_eq!(
            l.s_op(&z).unwrap(),
            Polynomial::from_coeffs(vec![beta.clone(), alpha.clone()])
        );
        assert_eq!(
            l.d_op(&z2).unwrap(),
            Polynomial::from_coeffs(vec![int(2) * &beta, int(2) * &alpha])
        );
        // degree contracts on a random polynomial of degree <= 8
        let deg = rng.gen_range(1..=8usize);
        let mut coeffs: Vec<Scalar> = (0..=deg).map(|_| rand_rat(&mut rng)).collect();
        coeffs[deg] = int(1);
        let p = Polynomial::from_coeffs(coeffs);
        assert_eq!(l.d_op(&p).unwrap().degree(), Some(deg - 1));
        assert_eq!(l.s_op(&p).unwrap().degree(), Some(deg));
    }
    budget(
        "criterion 5 (operator identities)",
        start,
        Duration::from_secs(5),
    );
}

/// Monic Gram-Schmidt on explicit Gaussian moments — an oracle independent
/// of the forward engine.
fn gram_schmidt_bc(moments: &[Scalar], upto: usize) -> Vec<(Scalar, Scalar)> {
    let pair = |p: &Polynomial, q: &Polynomial| -> Scalar {
        (p * q)
            .coeffs()
            .iter()
            .zip(moments)
            .map(|(c, m)| c * m)
            .sum()
    };
    let z = Polynomial::monomial(1);
    let mut polys = vec![Polynomial::one()];
    let mut out = Vec::new();
    for n in 0..=upto {
        let pn = polys[n].clone();
        let norm = pair(&pn, &pn);
        let b = pair(&(&z * &pn), &pn) / &norm;
        let mut next = &(&z * &pn) - &pn.scale(&b);
        if n > 0 {
            let prev = &polys[n - 1];
            let c = &norm / pair(prev, prev);
            next = &next - &prev.scale(&c);
        }
        let c_next = pair(&next, &next) / &norm;
        polys.push(next);
        out.push((b, c_next));
    }
    out
}

#[test]
fn criterion_6_hermite_sanity() {
    let start = Instant::now();
    let l = Lattice::quadratic(int(0), int(0), int(1)).unwrap();
    let pd = PearsonData::new(int(0), int(0), rat(-1, 2), int(1), int(0)).unwrap();
    let engine = RecurrenceEngine::new(&pd, &l);
    for n in 0..=20usize {
        let (b, c) = engine.pair(n).unwrap();
        assert_eq!(b, int(0));
        assert_eq!(c, rat(n as i64 + 1, 2));
    }
    // Gaussian moments m_{2k} = (2k-1)!!/2^k, m_{2k+1} = 0, through m_12
    let mut moments = vec![Scalar::zero(); 13];
    let mut dfact = Scalar::one();
    for k in 0..=6usize {
        if k > 0 {
            dfact *= int(2 * k as i64 - 1);
        }
        moments[2 * k] = &dfact / oplattice::scalar::pow_i(&int(2), k as i64);
    }
    for (n, (b, c)) in gram_schmidt_bc(&moments, 5).into_iter().enumerate() {
        assert_eq!(b, int(0), "oracle B_{n}");
        assert_eq!(c, rat(n as i64 + 1, 2), "oracle C_{}", n + 1);
    }
    budget("criterion 6 (Hermite)", start, Duration::from_secs(2));
}

#[test]
fn criterion_7_detector_oracle_agreement() {
    let start = Instant::now();
    // classical instances from criterion 1 (moments straight off the
    // finite functional, normalized to m_0 = 1)
    for n in grid_n() {
        for gamma in grid_gamma() {
            let p = ParaKrawtchoukParams::new(n, gamma.clone()).unwrap();
            let table = pk_table(&p);
            let u = pk_functional(&p);
            let mass = u.total_mass();
            let moments: Vec<Scalar> = (0..8)
                .map(|k| u.pair(&Polynomial::monomial(k)) / &mass)
                .collect();
            let l = lat_2s_plus_1();
            let candidates = pearson_solve_from_moments(&moments, &l).unwrap();
            assert_eq!(candidates.len(), 1, "N = {n}, gamma = {gamma}");
            assert_eq!(
                candidates[0].normalized().unwrap(),
                invert_quadratic(table.b(0), table.b(1), table.c(1), table.c(2), &l).unwrap()
            );
        }
    }
    // classical instances from criterion 3 (quadratic lattices)
    for (_, l, t) in quadratic_roundtrip_instances() {
        let moments = moments_from_recurrence(t, 7).unwrap();
        let candidates = pearson_solve_from_moments(&moments, l).unwrap();
        assert_eq!(candidates.len(), 1, "on {l:?}");
        assert_eq!(
            candidates[0].normalized().unwrap(),
            invert_quadratic(t.b(0), t.b(1), t.c(1), t.c(2), l).unwrap()
        );
    }
    budget(
        "criterion 7 (detector agreement)",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_8_inversion_formula_audit() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut audited = 0;
    while audited < 50 {
        let l = loop {
            if let Ok(l) =
                Lattice::quadratic(rand_rat(&mut rng), rand_rat(&mut rng), rand_rat(&mut rng))
            {
                break l;
            }
        };
        let pd = rand_pd(&mut rng);
        let Some(t) = regular_table(&pd, &l, 3) else {
            continue;
        };
        let got = invert_quadratic(t.b(0), t.b(1), t.c(1), t.c(2), &l).unwrap();
        assert_eq!(got, pd, "inversion audit failed on {l:?}");
        audited += 1;
    }
    budget(
        "criterion 8 (inversion audit)",
        start,
        Duration::from_secs(10),
    );
}
