use msaw_core::eigen::{power_iterate, DEFAULT_MAX_ITER, DEFAULT_TOL};
use msaw_core::methods::topsis::closeness;
use msaw_core::methods::wpm::wpm_log_scores;
use msaw_core::*;
use proptest::prelude::*;

/// Independent M-SAW: k_ij counts strictly better alternatives, then adds the
/// tie adjustment (earlier equal rows for stable, half the other tied rows
/// for mean rank).
fn naive_msaw(m: &DecisionMatrix, w: &[f64], tie: TiePolicy, alpha: f64) -> Vec<f64> {
    let n = m.n_alternatives();
    (0..n)
        .map(|i| {
            (0..m.n_criteria())
                .map(|j| {
                    let better = |a: f64, b: f64| match m.criteria()[j].direction {
                        Direction::Benefit => a > b,
                        Direction::Cost => a < b,
                    };
                    let x = m.value(i, j);
                    let strictly_better = (0..n).filter(|&o| better(m.value(o, j), x)).count();
                    let equal_before = (0..i).filter(|&o| m.value(o, j) == x).count();
                    let equal_total = (0..n).filter(|&o| m.value(o, j) == x).count();
                    let k = strictly_better as f64
                        + match tie {
                            TiePolicy::StableIndex => equal_before as f64,
                            TiePolicy::MeanRank => (equal_total - 1) as f64 / 2.0,
                        };
                    (alpha - k) * w[j]
                })
                .sum()
        })
        .collect()
}

fn value() -> impl Strategy<Value = f64> {
    // Small integers force ties; the float branch gives generic data.
    prop_oneof![(1u8..=4).prop_map(f64::from), 0.05f64..500.0]
}

fn matrix(max_n: usize, max_m: usize) -> impl Strategy<Value = DecisionMatrix> {
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        (
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(proptest::collection::vec(value(), m), n),
        )
            .prop_map(move |(dirs, values)| {
                let criteria = dirs
                    .iter()
                    .enumerate()
                    .map(|(j, &b)| {
                        CriterionSpec::new(
                            format!("c{j}"),
                            if b { Direction::Benefit } else { Direction::Cost },
                        )
                    })
                    .collect();
                DecisionMatrix::try_new(
                    (0..n).map(|i| format!("a{i}")).collect(),
                    criteria,
                    values,
                )
                .unwrap()
            })
    })
}

fn weights(m: usize) -> impl Strategy<Value = WeightVector> {
    proptest::collection::vec(0.01f64..1.0, m)
        .prop_map(|w| WeightVector::normalized(w).unwrap())
}

fn instance(max_n: usize, max_m: usize) -> impl Strategy<Value = (DecisionMatrix, WeightVector)> {
    matrix(max_n, max_m).prop_flat_map(|mat| {
        let m = mat.n_criteria();
        (Just(mat), weights(m))
    })
}

fn tie_policy() -> impl Strategy<Value = TiePolicy> {
    prop_oneof![Just(TiePolicy::StableIndex), Just(TiePolicy::MeanRank)]
}

fn map_columns(m: &DecisionMatrix, f: impl Fn(usize, f64) -> f64) -> DecisionMatrix {
    let values = m
        .rows()
        .iter()
        .map(|r| r.iter().enumerate().map(|(j, &x)| f(j, x)).collect())
        .collect();
    DecisionMatrix::try_new(m.alternatives().to_vec(), m.criteria().to_vec(), values).unwrap()
}

proptest! {
    #[test]
    fn msaw_matches_brute_force((m, w) in instance(5, 4), tie in tie_policy()) {
        let (r, _) = rank_msaw(&m, &w, tie, None).unwrap();
        let naive = naive_msaw(&m, w.as_slice(), tie, m.n_alternatives() as f64);
        for (a, b) in r.score_values().iter().zip(naive) {
            prop_assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn msaw_alpha_shift_preserves_order((m, w) in instance(8, 5), tie in tie_policy()) {
        let n = m.n_alternatives() as u64;
        let (base, _) = rank_msaw(&m, &w, tie, Some(n)).unwrap();
        for c in [1u64, 5, 100] {
            let (shifted, _) = rank_msaw(&m, &w, tie, Some(n + c)).unwrap();
            prop_assert_eq!(&shifted.order, &base.order);
            for (a, b) in shifted.score_values().iter().zip(base.score_values()) {
                prop_assert!((a - b - c as f64 * w.sum()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn msaw_ignores_monotone_transforms((m, w) in instance(8, 5), tie in tie_policy()) {
        let t = map_columns(&m, |_, x| x.powi(3) + 2.0 * x);
        let (a, _) = rank_msaw(&m, &w, tie, None).unwrap();
        let (b, _) = rank_msaw(&t, &w, tie, None).unwrap();
        prop_assert_eq!(a.score_values(), b.score_values());
        prop_assert_eq!(a.order, b.order);
    }

    #[test]
    fn msaw_mean_rank_is_permutation_invariant(
        (m, w) in instance(8, 5),
        seed in any::<u64>(),
    ) {
        let n = m.n_alternatives();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by a simple LCG so the permutation is part of the input.
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled = DecisionMatrix::try_new(
            perm.iter().map(|&i| m.alternatives()[i].clone()).collect(),
            m.criteria().to_vec(),
            perm.iter().map(|&i| m.rows()[i].clone()).collect(),
        ).unwrap();
        let (a, _) = rank_msaw(&m, &w, TiePolicy::MeanRank, None).unwrap();
        let (b, _) = rank_msaw(&shuffled, &w, TiePolicy::MeanRank, None).unwrap();
        for (k, &i) in perm.iter().enumerate() {
            prop_assert_eq!(b.scores[k].score, a.scores[i].score);
        }
    }

    #[test]
    fn msaw_scores_bounded_and_income_sums_exact((m, w) in instance(8, 5), tie in tie_policy()) {
        let n = m.n_alternatives();
        let (r, b) = rank_msaw(&m, &w, tie, None).unwrap();
        for s in r.score_values() {
            prop_assert!(s >= 1.0 - 1e-12 && s <= n as f64 + 1e-12, "score {s} outside [1, {n}]");
        }
        let alpha = n as f64;
        for (j, &wj) in w.as_slice().iter().enumerate() {
            let sum: f64 = b.incomes.iter().map(|row| row[j]).sum();
            let expect = wj * (n as f64 * alpha - (n * (n - 1)) as f64 / 2.0);
            prop_assert!((sum - expect).abs() < 1e-9);
            // The worst position earns exactly w_j (stable ranks only).
            if tie == TiePolicy::StableIndex {
                let worst = b.positions.iter().position(|p| p[j] == n - 1).unwrap();
                prop_assert!((b.incomes[worst][j] - wj).abs() < 1e-15);
            }
            let mut pos: Vec<usize> = b.positions.iter().map(|p| p[j]).collect();
            pos.sort_unstable();
            prop_assert_eq!(pos, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn normalization_is_scale_free(m in matrix(6, 4), c in 0.01f64..100.0, col in 0usize..4) {
        let col = col % m.n_criteria();
        let scaled = map_columns(&m, |j, x| if j == col { x * c } else { x });
        let a = m.normalize().unwrap();
        let b = scaled.normalize().unwrap();
        for (ra, rb) in a.iter().zip(&b) {
            prop_assert!((ra[col] - rb[col]).abs() < 1e-12);
        }
    }

    #[test]
    fn normalization_bounds(m in matrix(6, 4)) {
        let r = m.normalize().unwrap();
        for j in 0..m.n_criteria() {
            prop_assert!(r.iter().all(|row| row[j] > 0.0 && row[j] <= 1.0));
            prop_assert!(r.iter().any(|row| row[j] == 1.0));
        }
    }

    #[test]
    fn closeness_and_value_scores_in_range((m, w) in instance(7, 5)) {
        for c in closeness(&m, &w).unwrap() {
            prop_assert!((0.0..=1.0).contains(&c));
        }
        for s in rank_saw(&m, &w).unwrap().score_values() {
            prop_assert!(s > 0.0 && s <= 1.0 + 1e-12);
        }
        for s in rank_wpm(&m, &w).unwrap().score_values() {
            prop_assert!(s > 0.0 && s <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn wpm_log_form_agrees((m, w) in instance(7, 5)) {
        let direct = rank_wpm(&m, &w).unwrap().score_values();
        let logs = wpm_log_scores(&m, &w).unwrap();
        for (d, l) in direct.iter().zip(logs) {
            prop_assert!((d.ln() - l).abs() < 1e-12);
        }
    }

    #[test]
    fn weight_rescaling_keeps_every_order((m, w) in instance(7, 5), c in 0.1f64..10.0) {
        let scaled = w.scaled(c).unwrap();
        for method in Method::ALL {
            let a = method.rank(&m, &w, &RankOptions::default()).unwrap();
            let b = method.rank(&m, &scaled, &RankOptions::default()).unwrap();
            // Scores move by a common factor; compare orders after rounding
            // away float noise that might reorder near-ties.
            if a.ties.is_empty() && b.ties.is_empty() {
                let gaps_ok = a.order.windows(2).all(|p| {
                    (a.score_of(&p[0]).unwrap() - a.score_of(&p[1]).unwrap()).abs() > 1e-9
                });
                if gaps_ok {
                    prop_assert_eq!(&a.order, &b.order, "{}", method);
                }
            }
        }
    }

    #[test]
    fn eigenvector_recovers_consistent_weights(raw in proptest::collection::vec(0.05f64..1.0, 1..=8)) {
        let s: f64 = raw.iter().sum();
        let w: Vec<f64> = raw.iter().map(|x| x / s).collect();
        let pm = PairwiseMatrix::consistent(&w).unwrap();
        let d = principal_eigenvector(&pm, DEFAULT_MAX_ITER, DEFAULT_TOL).unwrap();
        for (a, b) in d.weights.as_slice().iter().zip(&w) {
            prop_assert!((a - b).abs() < 10.0 * DEFAULT_TOL);
        }
        prop_assert!((d.principal_eigenvalue - w.len() as f64).abs() < 1e-6);
        prop_assert!(d.consistency_ratio.abs() < 1e-6);
        // Reciprocal transpose of a reciprocal matrix gives the same weights.
        let t = principal_eigenvector(&pm.reciprocal_transpose(), DEFAULT_MAX_ITER, DEFAULT_TOL).unwrap();
        for (a, b) in d.weights.as_slice().iter().zip(t.weights.as_slice()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn power_iteration_ignores_start_scale(c in 0.01f64..100.0, a01 in 1.0f64..9.0, a02 in 1.0f64..9.0, a12 in 0.2f64..5.0) {
        let pm = PairwiseMatrix::new(vec![
            vec![1.0, a01, a02],
            vec![1.0 / a01, 1.0, a12],
            vec![1.0 / a02, 1.0 / a12, 1.0],
        ]).unwrap();
        let base = principal_eigenvector(&pm, DEFAULT_MAX_ITER, DEFAULT_TOL).unwrap();
        let scaled = power_iterate(&pm, vec![c / 3.0; 3], DEFAULT_MAX_ITER, DEFAULT_TOL).unwrap();
        for (x, y) in base.weights.as_slice().iter().zip(scaled.weights.as_slice()) {
            prop_assert!((x - y).abs() < 1e-12);
        }
        prop_assert!(base.principal_eigenvalue >= 3.0 - 1e-9);
    }

    #[test]
    fn perturbed_consistent_matrix_is_inconsistent(
        raw in proptest::collection::vec(0.1f64..1.0, 5),
        factor in 1.5f64..4.0,
    ) {
        let mut rows = PairwiseMatrix::consistent(&raw).unwrap().rows().to_vec();
        rows[0][1] *= factor;
        rows[1][0] /= factor;
        let pm = PairwiseMatrix::new(rows).unwrap();
        let d = principal_eigenvector(&pm, DEFAULT_MAX_ITER, DEFAULT_TOL).unwrap();
        prop_assert!(d.consistency_ratio > 0.0);
    }

    #[test]
    fn kendall_identity_and_reverse(n in 1usize..12, seed in any::<u64>()) {
        let mut v: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            v.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(kendall_tau(&v, &v).unwrap(), 1.0);
        let r: Vec<String> = v.iter().rev().cloned().collect();
        let expect = if n < 2 { 1.0 } else { -1.0 };
        prop_assert_eq!(kendall_tau(&v, &r).unwrap(), expect);
    }

    #[test]
    fn drop_keeps_raw_rows((m, _w) in instance(6, 4), k in 0usize..6) {
        prop_assume!(m.n_alternatives() > 1);
        let label = m.alternatives()[k % m.n_alternatives()].clone();
        let d = m.drop_alternative(&label).unwrap();
        for (l, row) in d.alternatives().iter().zip(d.rows()) {
            prop_assert_eq!(row, &m.rows()[m.index_of(l).unwrap()]);
        }
    }

    #[test]
    fn reversal_is_repeatable((m, w) in instance(6, 4), k in 0usize..6, mi in 0usize..5) {
        prop_assume!(m.n_alternatives() > 1);
        let label = m.alternatives()[k % m.n_alternatives()].clone();
        let method = Method::ALL[mi];
        let a = reversal_experiment(&m, &w, method, &RankOptions::default(), &label).unwrap();
        let b = reversal_experiment(&m, &w, method, &RankOptions::default(), &label).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.reversed, !a.flips.is_empty());
        let mut got = a.reduced_order.clone();
        got.sort();
        let mut want: Vec<String> = m.alternatives().iter().filter(|l| **l != label).cloned().collect();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn energy_is_linear(u in 0.0f64..100.0, d in 0.0f64..100.0, au in 0.0f64..1000.0, ad in 0.0f64..1000.0, beta in 0.0f64..2000.0) {
        let c = EnergyCoeffs { alpha_u: au, alpha_d: ad, beta };
        let p1 = energy_consumption(u, d, &c).unwrap();
        let p2 = energy_consumption(2.0 * u, 2.0 * d, &c).unwrap();
        prop_assert!(((p2 - beta) - 2.0 * (p1 - beta)).abs() <= 1e-9 * p2.max(1.0));
    }

    #[test]
    fn generated_rows_stay_in_range(seed in any::<u64>(), per in 1usize..6) {
        let mut spec = ScenarioSpec::example().with_seed(seed);
        spec.instances_per_profile = per;
        let m = generate_matrix(&spec).unwrap();
        let mut row = 0;
        for p in &spec.profiles {
            for _ in 0..per {
                let r = &m.rows()[row];
                let within = |x: f64, [lo, hi]: [f64; 2]| lo <= x && x <= hi;
                prop_assert!(within(r[0], p.bandwidth));
                prop_assert!(within(r[1], p.delay));
                prop_assert!(within(r[2], p.plr));
                let up = r[0] * spec.uplink_fraction;
                prop_assert_eq!(r[3], energy_consumption(up, r[0] - up, &p.energy).unwrap());
                prop_assert_eq!(r[4], p.cost_level);
                row += 1;
            }
        }
    }

    #[test]
    fn csv_round_trip_is_lossless(seed in any::<u64>()) {
        let m = generate_matrix(&ScenarioSpec::example().with_seed(seed)).unwrap();
        let text = m.to_csv_string().unwrap();
        let back = RawMatrix::from_csv_str(&text).unwrap().into_matrix(&m.directions()).unwrap();
        prop_assert_eq!(back, m);
    }
}

#[test]
fn saw_is_not_transform_invariant() {
    // a = .5·1 + .5·.5 = .75, b = .5·.25 + .5·1 = .625. Cubing column y
    // turns a's .5 into .125: a = .5625 < b.
    let m = DecisionMatrix::try_new(
        vec!["a".into(), "b".into()],
        vec![CriterionSpec::benefit("x"), CriterionSpec::benefit("y")],
        vec![vec![4.0, 1.0], vec![1.0, 2.0]],
    )
    .unwrap();
    let t = map_columns(&m, |j, x| if j == 1 { x.powi(3) } else { x });
    let w = WeightVector::new(vec![0.5, 0.5]).unwrap();
    assert_eq!(rank_saw(&m, &w).unwrap().order, ["a", "b"]);
    assert_eq!(rank_saw(&t, &w).unwrap().order, ["b", "a"]);
    let (ma, _) = rank_msaw(&m, &w, TiePolicy::MeanRank, None).unwrap();
    let (mt, _) = rank_msaw(&t, &w, TiePolicy::MeanRank, None).unwrap();
    assert_eq!(ma.score_values(), mt.score_values());
}
