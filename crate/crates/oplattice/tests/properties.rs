//! Cross-module invariants, checked exactly on randomized data.

use num_traits::{One, Zero};
use oplattice::detector::{classify, invert_quadratic, CoefficientKind, Verdict};
use oplattice::lattice::Lattice;
use oplattice::linalg::{nullspace, rank, Matrix};
use oplattice::pearson::{regularity, PearsonData, RecurrenceEngine};
use oplattice::poly::{interpolate, Polynomial};
use oplattice::recurrence::{
    generate, gram_check, moments_from_recurrence, pearson_weak_check, RecurrenceTable,
};
use oplattice::scalar::{int, rat, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Scalar {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=20))
}

fn rand_nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let v = rand_rat(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

fn rand_quadratic(rng: &mut ChaCha8Rng) -> Lattice {
    loop {
        let (c4, c5, c6) = (rand_rat(rng), rand_rat(rng), rand_rat(rng));
        if let Ok(l) = Lattice::quadratic(c4, c5, c6) {
            return l;
        }
    }
}

fn rand_q_linear(rng: &mut ChaCha8Rng) -> Lattice {
    let r = [rat(1, 3), rat(1, 2), int(2), int(3)][rng.gen_range(0..4)].clone();
    loop {
        let (c1, c2, c3) = (rand_rat(rng), rand_rat(rng), rand_rat(rng));
        if let Ok(l) = Lattice::q_linear(r.clone(), c1, c2, c3) {
            return l;
        }
    }
}

fn rand_lattice(rng: &mut ChaCha8Rng) -> Lattice {
    if rng.gen_bool(0.5) {
        rand_quadratic(rng)
    } else {
        rand_q_linear(rng)
    }
}

fn rand_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Polynomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<Scalar> = (0..=deg).map(|_| rand_rat(rng)).collect();
    coeffs[deg] = rand_nonzero(rng);
    Polynomial::from_coeffs(coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interpolate_reproduces_inputs(
        xs in proptest::collection::btree_set(-30i64..=30, 1..=8),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points: Vec<(Scalar, Scalar)> = xs
            .into_iter()
            .map(|x| (int(x), rand_rat(&mut rng)))
            .collect();
        let p = interpolate(&points).unwrap();
        prop_assert!(p.degree().map_or(0, |d| d + 1) <= points.len());
        for (x, y) in &points {
            prop_assert_eq!(p.eval(x), y.clone());
        }
    }

    #[test]
    fn nullspace_vectors_annihilate(
        rows in 1usize..=5,
        cols in 1usize..=5,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // low-rank-prone entries
        let m = Matrix::from_fn(rows, cols, |_, _| {
            if rng.gen_bool(0.3) { Scalar::zero() } else { rand_rat(&mut rng) }
        });
        let ns = nullspace(&m);
        prop_assert_eq!(ns.len(), cols - rank(&m));
        for v in &ns {
            let lead = v.iter().find(|x| !x.is_zero()).unwrap();
            prop_assert_eq!(lead.clone(), Scalar::one());
            for i in 0..rows {
                let dot: Scalar = m.row(i).iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert_eq!(dot, Scalar::zero());
            }
        }
    }

    #[test]
    fn scalar_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            prop_assert_eq!(&a / &b * &b, a.clone());
        }
    }
}

#[test]
fn degree_contracts_on_random_lattices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let l = rand_lattice(&mut rng);
        let p = rand_poly(&mut rng, 8);
        let dp = l.d_op(&p).unwrap();
        let sp = l.s_op(&p).unwrap();
        match p.degree() {
            None | Some(0) => {
                assert!(dp.is_zero());
                assert_eq!(sp.degree(), p.degree());
            }
            Some(d) => {
                assert_eq!(dp.degree(), Some(d - 1), "deg Dp on {l:?}");
                assert_eq!(sp.degree(), Some(d), "deg Sp on {l:?}");
            }
        }
    }
}

#[test]
fn d_and_s_are_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..25 {
        let l = rand_lattice(&mut rng);
        let p = rand_poly(&mut rng, 6);
        let q = rand_poly(&mut rng, 6);
        let lam = rand_rat(&mut rng);
        let combo = &p.scale(&lam) + &q;
        assert_eq!(
            l.d_op(&combo).unwrap(),
            &l.d_op(&p).unwrap().scale(&lam) + &l.d_op(&q).unwrap()
        );
        assert_eq!(
            l.s_op(&combo).unwrap(),
            &l.s_op(&p).unwrap().scale(&lam) + &l.s_op(&q).unwrap()
        );
    }
}

#[test]
fn alpha_gamma_recurrences() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..25 {
        let l = rand_lattice(&mut rng);
        let (alpha, _) = l.alpha_beta();
        let asq1 = &alpha * &alpha - Scalar::one();
        for n in -8i64..=8 {
            assert_eq!(
                l.gamma_n(n + 1),
                &alpha * l.gamma_n(n) + l.alpha_n(n),
                "gamma recurrence at n = {n} on {l:?}"
            );
            assert_eq!(
                l.alpha_n(n + 1),
                &alpha * l.alpha_n(n) + &asq1 * l.gamma_n(n),
                "alpha recurrence at n = {n} on {l:?}"
            );
        }
    }
}

/// Literal transcription of the quadratic-lattice forward display, kept
/// independent of the library's rational-function path. `None` when a
/// denominator vanishes (the literal formulas stop being defined there).
fn quadratic_literal(pd: &PearsonData, lattice: &Lattice, n: i64) -> Option<(Scalar, Scalar)> {
    let Lattice::Quadratic { c4, c5, c6 } = lattice else {
        panic!("quadratic oracle on non-quadratic lattice")
    };
    let dn = |k: i64| &pd.a * int(k) + &pd.d;
    let en = |k: i64| &pd.b * int(k) + &pd.e + rat(1, 2) * c4 * &pd.d * int(k * k);
    let phi = |z: &Scalar| &pd.a * z * z + &pd.b * z + &pd.c;
    let psi = |z: &Scalar| &pd.d * z + &pd.e;
    let phin = |z: &Scalar, k: i64| {
        let q = c4 * int(k * k) / int(4);
        &pd.a * z * z
            + (&pd.b + rat(3, 2) * c4 * int(k) * dn(k)) * z
            + phi(&q)
            + rat(1, 2) * c4 * int(k) * psi(&q)
            - int(k) * (int(4) * c4 * c6 - c5 * c5) / int(4) * dn(k)
    };
    if n == 0 {
        if dn(0).is_zero() || dn(1).is_zero() {
            return None;
        }
        let pt = -en(0) / dn(0);
        Some((pt.clone(), -phin(&pt, 0) / dn(1)))
    } else {
        for k in [2 * n - 2, 2 * n - 1, 2 * n, 2 * n + 1] {
            if dn(k).is_zero() {
                return None;
            }
        }
        let b = int(n) * en(n - 1) / dn(2 * n - 2)
            - int(n + 1) * en(n) / dn(2 * n)
            - rat(1, 2) * c4 * int(n * (n - 1));
        let pt = -c4 * int(n * n) / int(4) - en(n) / dn(2 * n);
        let c = -int(n + 1) * dn(n - 1) / (dn(2 * n - 1) * dn(2 * n + 1)) * phin(&pt, n);
        Some((b, c))
    }
}

#[test]
fn engine_matches_literal_quadratic_transcription() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut checked = 0;
    while checked < 40 {
        let l = rand_quadratic(&mut rng);
        let pd = PearsonData::new(
            rand_rat(&mut rng),
            rand_rat(&mut rng),
            rand_rat(&mut rng),
            Scalar::one(),
            rand_rat(&mut rng),
        )
        .unwrap();
        let engine = RecurrenceEngine::new(&pd, &l);
        let mut used = false;
        for n in 0..=10 {
            if let Some((b, c)) = quadratic_literal(&pd, &l, n as i64) {
                let (eb, ec) = engine.pair(n).unwrap();
                assert_eq!(eb, b, "B_{n} differs on {l:?}");
                assert_eq!(ec, c, "C_{} differs on {l:?}", n + 1);
                used = true;
            }
        }
        if used {
            checked += 1;
        }
    }
}

/// Table generated by the forward engine; `None` if the instance fails the
/// regularity filter or any pair is undefined.
fn generated_table(pd: &PearsonData, l: &Lattice, upto: usize) -> Option<RecurrenceTable> {
    if !regularity(pd, l, upto).is_regular() {
        return None;
    }
    let engine = RecurrenceEngine::new(pd, l);
    let mut b = Vec::with_capacity(upto + 1);
    let mut c = Vec::with_capacity(upto + 1);
    for n in 0..=upto {
        let (bn, cn) = engine.pair(n).ok()?;
        b.push(bn);
        c.push(cn);
    }
    RecurrenceTable::new(b, c).ok()
}

fn rand_regular_instance(
    rng: &mut ChaCha8Rng,
    quadratic: bool,
    upto: usize,
) -> (PearsonData, Lattice, RecurrenceTable) {
    loop {
        let l = if quadratic {
            rand_quadratic(rng)
        } else {
            rand_q_linear(rng)
        };
        let pd = PearsonData::new(
            rand_rat(rng),
            rand_rat(rng),
            rand_rat(rng),
            Scalar::one(),
            rand_rat(rng),
        )
        .unwrap();
        if let Some(t) = generated_table(&pd, &l, upto) {
            return (pd, l, t);
        }
    }
}

#[test]
fn generated_families_are_orthogonal_for_their_moments() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..8 {
        let (_, _, t) = rand_regular_instance(&mut rng, true, 6);
        let moments = moments_from_recurrence(&t, 12).unwrap();
        let ops = generate(&t, 6).unwrap();
        let pair = |p: &Polynomial| -> Scalar {
            p.coeffs().iter().zip(&moments).map(|(c, m)| c * m).sum()
        };
        let mut prod = Scalar::one();
        for n in 0..=6usize {
            for m in 0..n {
                assert_eq!(
                    pair(&(ops.poly(n) * ops.poly(m))),
                    Scalar::zero(),
                    "<u, P_{n} P_{m}> must vanish"
                );
            }
            if n >= 1 {
                prod *= t.c(n);
                assert_eq!(pair(&(ops.poly(n) * ops.poly(n))), prod);
            }
        }
    }
}

#[test]
fn roundtrip_classify_recovers_pearson_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for quadratic in [true, false] {
        for _ in 0..12 {
            let (pd, l, t) = rand_regular_instance(&mut rng, quadratic, 12);
            match classify(&t, &l, 12).unwrap() {
                Verdict::Classical {
                    pd: got,
                    verified_to,
                } => {
                    assert_eq!(verified_to, 12);
                    assert_eq!(got, pd, "recovered data differs on {l:?}");
                }
                v => panic!("expected Classical on {l:?}, got {v:?}"),
            }
        }
    }
}

#[test]
fn perturbed_tables_flip_to_not_classical() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10 {
        let (_, l, t) = rand_regular_instance(&mut rng, true, 12);
        let k = rng.gen_range(3..=9usize);
        let mut c = t.c_slice().to_vec();
        c[k - 1] += Scalar::one(); // perturb C_k
        if c[k - 1].is_zero() {
            continue;
        }
        let bad = RecurrenceTable::new(t.b_slice().to_vec(), c).unwrap();
        match classify(&bad, &l, 12).unwrap() {
            Verdict::NotClassical { witness: Some(w) } => {
                assert!(
                    w.index == k || w.index + 1 == k,
                    "witness {} should be {} or {}",
                    w.index,
                    k - 1,
                    k
                );
                assert!(matches!(w.kind, CoefficientKind::B | CoefficientKind::C));
            }
            v => panic!("expected a witnessed NotClassical, got {v:?}"),
        }
    }
}

#[test]
fn moment_solve_agrees_with_inversion_on_classical_tables() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..10 {
        let (pd, l, t) = rand_regular_instance(&mut rng, true, 8);
        let moments = moments_from_recurrence(&t, 8).unwrap();
        let candidates = oplattice::detector::pearson_solve_from_moments(&moments, &l).unwrap();
        assert_eq!(candidates.len(), 1, "candidate space must be 1-dimensional");
        let via_moments = candidates[0].normalized().unwrap();
        let via_inversion = invert_quadratic(t.b(0), t.b(1), t.c(1), t.c(2), &l).unwrap();
        assert_eq!(via_moments, via_inversion);
        assert_eq!(via_moments, pd);
    }
}

#[test]
fn c6_shift_does_not_change_verdicts_on_linear_lattices() {
    // x(s) = 2s + 1 versus x(s) = 2s + 5
    let l1 = Lattice::quadratic(int(0), int(2), int(1)).unwrap();
    let l2 = Lattice::quadratic(int(0), int(2), int(5)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut done = 0;
    while done < 8 {
        let pd = PearsonData::new(
            rand_rat(&mut rng),
            rand_rat(&mut rng),
            rand_rat(&mut rng),
            Scalar::one(),
            rand_rat(&mut rng),
        )
        .unwrap();
        let Some(t) = generated_table(&pd, &l1, 10) else {
            continue;
        };
        done += 1;
        let v1 = classify(&t, &l1, 10).unwrap();
        let v2 = classify(&t, &l2, 10).unwrap();
        match (&v1, &v2) {
            (Verdict::Classical { pd: p1, .. }, Verdict::Classical { pd: p2, .. }) => {
                // a and d agree; b, c, e may shift with c6
                assert_eq!(p1.a, p2.a);
                assert_eq!(p1.d, p2.d);
            }
            (a, b) => panic!("verdicts disagree: {a:?} vs {b:?}"),
        }
    }
}

#[test]
fn weak_check_agrees_with_classify_on_finite_functionals() {
    use oplattice::para_krawtchouk::{pk_functional, pk_table, ParaKrawtchoukParams};
    for (n, g) in [(5u32, rat(1, 2)), (7, rat(1, 3))] {
        let p = ParaKrawtchoukParams::new(n, g).unwrap();
        let table = pk_table(&p);
        let u = pk_functional(&p);
        let mass = u.total_mass();
        let moments: Vec<Scalar> = (0..=8)
            .map(|k| u.pair(&Polynomial::monomial(k)) / &mass)
            .collect();

        let good = Lattice::quadratic(int(0), int(2), int(1)).unwrap();
        let bad = Lattice::quadratic(int(0), int(3), int(0)).unwrap();
        let verdict = classify(&table, &good, (n - 1) as usize).unwrap();
        let Verdict::Classical { pd, .. } = verdict else {
            panic!("expected Classical")
        };
        assert!(pearson_weak_check(&moments, &pd, &good, 6).unwrap());
        // the same data fails the weak form on the other lattice
        assert!(!pearson_weak_check(&moments, &pd, &bad, 6).unwrap());
    }
}

#[test]
fn jacobi_moments_are_truncation_stable() {
    // independent reimplementation with an adjustable truncation size:
    // m_k = (J^k)_{00} must not depend on the size once it exceeds K/2 + 1
    fn moments_with_size(t: &RecurrenceTable, k_max: usize, size: usize) -> Vec<Scalar> {
        let b = |i: usize| {
            if i < t.len() {
                t.b(i).clone()
            } else {
                Scalar::zero()
            }
        };
        let c = |k: usize| {
            if k <= t.len() {
                t.c(k).clone()
            } else {
                Scalar::zero()
            }
        };
        let mut v = vec![Scalar::zero(); size];
        v[0] = Scalar::one();
        let mut out = vec![Scalar::one()];
        for _ in 0..k_max {
            let mut w = vec![Scalar::zero(); size];
            for (j, w_j) in w.iter_mut().enumerate() {
                if j > 0 {
                    *w_j += &v[j - 1];
                }
                *w_j += &v[j] * b(j);
                if j + 1 < size {
                    *w_j += &v[j + 1] * c(j + 1);
                }
            }
            v = w;
            out.push(v[0].clone());
        }
        out
    }

    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let (_, _, t) = rand_regular_instance(&mut rng, true, 6);
    let base = moments_from_recurrence(&t, 8).unwrap();
    for size in [6usize, 7, 9, 12] {
        assert_eq!(moments_with_size(&t, 8, size), base, "size {size}");
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn check<T: Send + Sync>() {}
    check::<Scalar>();
    check::<Polynomial>();
    check::<Matrix>();
    check::<Lattice>();
    check::<PearsonData>();
    check::<RecurrenceEngine>();
    check::<RecurrenceTable>();
    check::<Verdict>();
}

#[test]
fn q_linear_classify_needs_four_pairs() {
    // three pairs satisfy verify_to = 2 but cannot feed the moment solve
    let l = Lattice::q_linear(int(2), rat(1, 2), rat(1, 2), int(0)).unwrap();
    let t = RecurrenceTable::new(vec![int(0); 3], vec![int(1); 3]).unwrap();
    assert!(matches!(
        classify(&t, &l, 2),
        Err(oplattice::error::Error::TableTooShort { needed: 4, .. })
    ));
}

#[test]
fn gram_of_pk_functional_is_diagonal() {
    use oplattice::para_krawtchouk::{pk_functional, pk_table, ParaKrawtchoukParams};
    let p = ParaKrawtchoukParams::new(5, rat(1, 2)).unwrap();
    let t = pk_table(&p);
    let ops = generate(&t, 5).unwrap();
    let g = gram_check(&pk_functional(&p), &ops);
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            if i != j {
                assert_eq!(g.get(i, j), &Scalar::zero());
            }
        }
    }
}
