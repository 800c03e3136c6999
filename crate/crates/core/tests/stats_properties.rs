use std::f64::consts::PI;

use deskcalc_core::stats::{
    f_cdf, f_inverse, five_number_summary, ln_gamma, one_way_anova_samples, quartile_inclusive,
    reg_inc_beta, t_cdf, t_inverse, welch_t_test, Sample, SummaryStats,
};
use proptest::prelude::*;
use statrs::distribution::{ContinuousCDF, FisherSnedecor, StudentsT};

const PROBS: [f64; 5] = [0.01, 0.05, 0.5, 0.95, 0.99];

#[test]
fn ln_gamma_factorials() {
    let mut fact = 1.0_f64;
    for n in 1..=30 {
        // ln Γ(n) = ln (n-1)!
        let got = ln_gamma(n as f64).unwrap();
        assert!(
            (got - fact.ln()).abs() <= 1e-10 * fact.ln().abs().max(1.0),
            "{n}"
        );
        fact *= n as f64;
    }
}

#[test]
fn ln_gamma_half_integers() {
    // Γ(n + 1/2) = (2n)! √π / (4^n n!)
    for n in 0..=20u32 {
        let mut ln_want = 0.5 * PI.ln();
        for k in 1..=n {
            ln_want += ((2 * k - 1) as f64 / 2.0).ln();
        }
        let got = ln_gamma(n as f64 + 0.5).unwrap();
        assert!(
            (got - ln_want).abs() <= 1e-10 * ln_want.abs().max(1.0),
            "{n}"
        );
    }
}

#[test]
fn ln_gamma_large_arguments_follow_stirling() {
    for x in [1e3, 5e4, 1e6] {
        let stirling = (x - 0.5) * f64::ln(x) - x + 0.5 * (2.0 * PI).ln() + 1.0 / (12.0 * x)
            - 1.0 / (360.0 * x * x * x);
        let got = ln_gamma(x).unwrap();
        assert!((got - stirling).abs() <= 1e-10 * stirling.abs(), "{x}");
    }
    assert!(ln_gamma(0.0).is_err());
    assert!(ln_gamma(-1.0).is_err());
}

#[test]
fn ln_gamma_agrees_with_statrs() {
    for i in 0..200 {
        let x = 0.5 + i as f64 * 0.731;
        let want = statrs::function::gamma::ln_gamma(x);
        let got = ln_gamma(x).unwrap();
        assert!((got - want).abs() <= 1e-10 * want.abs().max(1.0), "{x}");
    }
}

#[test]
fn incomplete_beta_boundaries() {
    for (a, b) in [(0.5, 0.5), (1.0, 3.0), (44.5, 0.5), (1.0, 21.0)] {
        assert_eq!(reg_inc_beta(a, b, 0.0).unwrap(), 0.0);
        assert_eq!(reg_inc_beta(a, b, 1.0).unwrap(), 1.0);
    }
    for x in [0.25, 0.5, 0.9] {
        assert!((reg_inc_beta(1.0, 1.0, x).unwrap() - x).abs() <= 1e-12);
    }
    for a in [0.5, 2.0, 10.0] {
        assert!((reg_inc_beta(a, a, 0.5).unwrap() - 0.5).abs() <= 1e-12);
    }
    assert!(reg_inc_beta(0.0, 1.0, 0.5).is_err());
    assert!(reg_inc_beta(1.0, 1.0, 1.5).is_err());
}

#[test]
fn t_cdf_closed_forms() {
    for i in -200..=200 {
        let t = i as f64 * 0.1;
        let cauchy = 0.5 + t.atan() / PI;
        let df2 = 0.5 + t / (2.0 * (2.0 + t * t).sqrt());
        assert!((t_cdf(t, 1.0).unwrap() - cauchy).abs() <= 1e-10, "{t}");
        assert!((t_cdf(t, 2.0).unwrap() - df2).abs() <= 1e-10, "{t}");
    }
}

#[test]
fn inverse_round_trips() {
    for df in [1.0, 2.0, 5.0, 30.0, 89.0, 1000.0] {
        for p in PROBS {
            let t = t_inverse(p, df).unwrap();
            assert!((t_cdf(t, df).unwrap() - p).abs() <= 1e-9, "t p={p} df={df}");
        }
    }
    for (d1, d2) in [(1.0, 1.0), (2.0, 42.0), (5.0, 10.0), (30.0, 3.0)] {
        for p in PROBS {
            let f = f_inverse(p, d1, d2).unwrap();
            assert!(
                (f_cdf(f, d1, d2).unwrap() - p).abs() <= 1e-9,
                "F p={p} ({d1},{d2})"
            );
        }
    }
}

#[test]
fn distributions_agree_with_statrs() {
    for df in [1.0, 3.0, 12.5, 89.0] {
        let oracle = StudentsT::new(0.0, 1.0, df).unwrap();
        for i in -40..=40 {
            let t = i as f64 * 0.25;
            assert!(
                (t_cdf(t, df).unwrap() - oracle.cdf(t)).abs() <= 1e-10,
                "t={t} df={df}"
            );
        }
    }
    for (d1, d2) in [(2.0, 42.0), (4.0, 9.0), (1.0, 100.0)] {
        let oracle = FisherSnedecor::new(d1, d2).unwrap();
        for i in 0..=60 {
            let f = i as f64 * 0.1;
            assert!(
                (f_cdf(f, d1, d2).unwrap() - oracle.cdf(f)).abs() <= 1e-10,
                "F={f}"
            );
        }
    }
}

#[test]
fn cdfs_are_monotone_probabilities() {
    for df in [0.5, 1.0, 4.0, 89.0] {
        let mut last = 0.0;
        for i in -500..=500 {
            let p = t_cdf(i as f64 * 0.05, df).unwrap();
            assert!((0.0..=1.0).contains(&p) && p >= last);
            last = p;
        }
    }
    for (d1, d2) in [(1.0, 1.0), (2.0, 42.0), (10.0, 3.0)] {
        let mut last = 0.0;
        for i in 0..=1000 {
            let p = f_cdf(i as f64 * 0.02, d1, d2).unwrap();
            assert!((0.0..=1.0).contains(&p) && p >= last);
            last = p;
        }
    }
}

#[test]
fn quartile_unit_cases() {
    let five = [1.0, 2.0, 3.0, 4.0, 5.0];
    let four = [1.0, 2.0, 3.0, 4.0];
    assert_eq!(five_number_summary(&five).unwrap().as_array(), five);
    assert_eq!(
        five_number_summary(&four).unwrap().as_array(),
        [1.0, 1.75, 2.5, 3.25, 4.0]
    );
    assert_eq!(five_number_summary(&[3.5]).unwrap().as_array(), [3.5; 5]);
    assert_eq!(quartile_inclusive(&four, 0.25).unwrap(), 1.75);
}

/// Equal-variance two-sample t statistic, written out directly.
fn pooled_t(a: &[f64], b: &[f64]) -> f64 {
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let ss = |v: &[f64], m: f64| v.iter().map(|x| (x - m).powi(2)).sum::<f64>();
    let (ma, mb) = (mean(a), mean(b));
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let sp2 = (ss(a, ma) + ss(b, mb)) / (na + nb - 2.0);
    (ma - mb) / (sp2 * (1.0 / na + 1.0 / nb)).sqrt()
}

proptest! {
    #[test]
    fn incomplete_beta_reflection(a in 0.05..60.0f64, b in 0.05..60.0f64, x in 0.0..=1.0f64) {
        let lhs = reg_inc_beta(a, b, x).unwrap();
        let rhs = 1.0 - reg_inc_beta(b, a, 1.0 - x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12, "{lhs} vs {rhs}");
    }

    #[test]
    fn incomplete_beta_agrees_with_statrs(a in 0.1..50.0f64, b in 0.1..50.0f64, x in 0.0..=1.0f64) {
        let want = statrs::function::beta::beta_reg(a, b, x);
        prop_assert!((reg_inc_beta(a, b, x).unwrap() - want).abs() <= 1e-10);
    }

    #[test]
    fn inverse_round_trip_random_df(p in 0.001..0.999f64, d1 in 1.0..80.0f64, d2 in 1.0..80.0f64) {
        let t = t_inverse(p, d1).unwrap();
        prop_assert!((t_cdf(t, d1).unwrap() - p).abs() <= 1e-9);
        let f = f_inverse(p, d1, d2).unwrap();
        prop_assert!((f_cdf(f, d1, d2).unwrap() - p).abs() <= 1e-9);
    }

    #[test]
    fn welch_on_equal_groups_has_pooled_df(
        m1 in -100.0..100.0f64,
        m2 in -100.0..100.0f64,
        v in 0.01..1e4f64,
        n in 2usize..500,
    ) {
        let g1 = SummaryStats::new(m1, v, n).unwrap();
        let g2 = SummaryStats::new(m2, v, n).unwrap();
        let r = welch_t_test(&g1, &g2, 0.05).unwrap();
        let want = (2 * n - 2) as f64;
        prop_assert!((r.df_exact - want).abs() <= 1e-12 * want);
        prop_assert!((r.p_two_tail - 2.0 * r.p_one_tail).abs() <= 1e-12 * r.p_two_tail);
        prop_assert_eq!(r.t_stat, r.mean_difference / r.standard_error);
    }

    #[test]
    fn two_group_anova_is_squared_pooled_t(
        a in prop::collection::vec(-50.0..50.0f64, 2..20),
        b in prop::collection::vec(-50.0..50.0f64, 2..20),
    ) {
        let t = pooled_t(&a, &b);
        prop_assume!(t.is_finite());
        let r = one_way_anova_samples(&[Sample::new("a", a), Sample::new("b", b)], 0.05).unwrap();
        prop_assert!((r.f_stat - t * t).abs() <= 1e-9 * (t * t).max(1e-300), "{} vs {}", r.f_stat, t * t);
        prop_assert!((r.ss_total - r.ss_between - r.ss_within).abs() <= 1e-9 * r.ss_total);
        prop_assert_eq!(r.df_total, r.df_between + r.df_within);
    }

    #[test]
    fn five_numbers_are_ordered(values in prop::collection::vec(-1e6..1e6f64, 1..200)) {
        let s = five_number_summary(&values).unwrap().as_array();
        prop_assert!(s.windows(2).all(|w| w[0] <= w[1]), "{s:?}");
    }
}
