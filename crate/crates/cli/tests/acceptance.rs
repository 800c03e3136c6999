//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

use std::f64::consts::PI;
use std::process::{Command, ExitCode, Output};

use deskcalc_core::calculus::{
    find_extremum, numeric_derivative, riemann_sum, ExtremumKind, Rule, DEFAULT_DIFF_STEP,
};
use deskcalc_core::expr::{BinOp, Func};
use deskcalc_core::finance::{compound_schedule, format_money, future_value, ScheduleParams};
use deskcalc_core::stats::{
    f_cdf, f_inverse, five_number_summary, ln_gamma, one_way_anova, quartile_inclusive,
    reg_inc_beta, t_cdf, t_inverse, welch_t_test, AnovaGroup, SummaryStats,
};
use deskcalc_core::{parse, Expr};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(name: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    ensure((got - want).abs() <= tol, || {
        format!("{name} = {got}, expected {want} +- {tol}")
    })
}

fn within_rel(name: &str, got: f64, want: f64, rel: f64) -> Result<(), String> {
    ensure((got - want).abs() <= rel * want.abs(), || {
        format!("{name} = {got}, expected {want} within {rel} relative")
    })
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deskcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs a CSV-emitting command and returns its records, header first.
fn csv_records(args: &[&str]) -> Result<Vec<Vec<String>>, String> {
    let out = run(args);
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(out.stdout.as_slice());
    rdr.records()
        .map(|r| {
            r.map(|r| r.iter().map(String::from).collect())
                .map_err(|e| e.to_string())
        })
        .collect()
}

fn field(records: &[Vec<String>], key: &str, col: usize) -> Result<f64, String> {
    records
        .iter()
        .find(|r| r[0] == key)
        .and_then(|r| r.get(col))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| format!("no numeric '{key}' column {col}"))
}

fn criterion_1() -> Outcome {
    let f = parse("42*x + 16800/x").map_err(|e| e.to_string())?;
    for x0 in [3.0, 10.0, 25.0, 100.0] {
        let r = find_extremum(&f, x0).map_err(|e| e.to_string())?;
        within(&format!("x from x0={x0}"), r.x, 20.0, 1e-6)?;
        within(&format!("C(x) from x0={x0}"), r.fx, 1680.0, 1e-6)?;
        ensure(r.kind == ExtremumKind::Minimum, || {
            format!("kind {:?}", r.kind)
        })?;

        let x0s = x0.to_string();
        let rec = csv_records(&[
            "minimize",
            "--fn",
            "42*x + 16800/x",
            "--x0",
            &x0s,
            "--format",
            "csv",
        ])?;
        let x: f64 = rec[1][0].parse().map_err(|_| "bad x".to_string())?;
        let fx: f64 = rec[1][1].parse().map_err(|_| "bad fx".to_string())?;
        within("cli x", x, 20.0, 1e-6)?;
        within("cli C(x)", fx, 1680.0, 1e-6)?;
        ensure(rec[1][3] == "minimum", || format!("cli kind {}", rec[1][3]))?;
    }
    Ok("x = 20, C(x) = 1680, minimum, from x0 in {3, 10, 25, 100}".into())
}

fn criterion_2() -> Outcome {
    let f = parse("x+2").map_err(|e| e.to_string())?;
    let r = riemann_sum(&f, 1.0, 3.0, 10, Rule::Right).map_err(|e| e.to_string())?;
    within("total", r.total, 8.2, 1e-12)?;
    let first = r.rows[0];
    let last = r.rows[9];
    ensure(
        (first.x, first.delta_x, first.fx) == (1.2, 0.2, 3.2),
        || format!("first row {first:?}"),
    )?;
    // 3.2 * 0.2 is 0.6400000000000001 in binary; one rounding from 0.64
    within("first product", first.product, 0.64, 2e-16)?;
    ensure(
        (last.x, last.delta_x, last.fx, last.product) == (3.0, 0.2, 5.0, 1.0),
        || format!("last row {last:?}"),
    )?;

    let out = run(&[
        "riemann", "--fn", "x+2", "--a", "1", "--b", "3", "--n", "10", "--rule", "right",
    ]);
    let text = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(|l| l.split_whitespace().collect())
        .collect();
    ensure(
        rows.get(1) == Some(&vec!["1.2", "0.2", "3.2", "0.64"]),
        || format!("displayed first row {:?}", rows.get(1)),
    )?;
    ensure(rows.get(10) == Some(&vec!["3", "0.2", "5", "1"]), || {
        format!("displayed last row {:?}", rows.get(10))
    })?;
    ensure(rows.get(11) == Some(&vec!["Total", "8.2"]), || {
        format!("displayed total {:?}", rows.get(11))
    })?;
    Ok(format!("total {} and both rows reproduced", r.total))
}

fn criterion_3() -> Outcome {
    let params = ScheduleParams {
        principal: 100.0,
        annual_rate: 0.04,
        periods_per_year: 4,
        num_periods: 4,
        ..Default::default()
    };
    let s = compound_schedule(&params).map_err(|e| e.to_string())?;
    ensure(format_money(s.rows[1].interest) == "1.00", || {
        "interest".into()
    })?;
    ensure(format_money(s.rows[1].balance) == "101.00", || {
        "balance".into()
    })?;
    within("final balance", s.final_balance(), 104.060401, 1e-9)?;
    within(
        "closed form",
        s.final_balance(),
        future_value(100.0, 0.01, 4),
        1e-9,
    )?;

    let rec = csv_records(&[
        "interest",
        "--principal",
        "100",
        "--rate",
        "0.04",
        "--periods-per-year",
        "4",
        "--n",
        "4",
        "--start",
        "1994-01-01",
        "--format",
        "csv",
    ])?;
    ensure(rec[2] == ["1", "1994-04-01", "", "1.00", "101.00"], || {
        format!("cli row {:?}", rec[2])
    })?;
    Ok(format!(
        "1.00 / 101.00 after one quarter, {} after four",
        s.final_balance()
    ))
}

fn criterion_4() -> Outcome {
    let g1 = SummaryStats::new(65.93478261, 260.5956522, 46).map_err(|e| e.to_string())?;
    let g2 = SummaryStats::new(80.45652174, 304.2980676, 46).map_err(|e| e.to_string())?;
    let r = welch_t_test(&g1, &g2, 0.05).map_err(|e| e.to_string())?;
    within("t Stat", r.t_stat, -4.14394682, 1e-6)?;
    ensure(r.df_displayed == 89, || format!("df {}", r.df_displayed))?;
    within("P one-tail", r.p_one_tail, 3.88116e-5, 1e-9)?;
    within("P two-tail", r.p_two_tail, 7.76231e-5, 2e-9)?;
    within("t Crit one-tail", r.t_crit_one_tail, 1.662155326, 1e-6)?;
    within("t Crit two-tail", r.t_crit_two_tail, 1.986978657, 1e-6)?;

    let rec = csv_records(&[
        "ttest",
        "--mean1",
        "65.93478261",
        "--var1",
        "260.5956522",
        "--n1",
        "46",
        "--mean2",
        "80.45652174",
        "--var2",
        "304.2980676",
        "--n2",
        "46",
        "--format",
        "csv",
    ])?;
    within("cli t Stat", field(&rec, "t_stat", 1)?, -4.14394682, 1e-6)?;
    within("cli df", field(&rec, "df", 1)?, 89.0, 0.0)?;
    within(
        "cli P one-tail",
        field(&rec, "p_one_tail", 1)?,
        3.88116e-5,
        1e-9,
    )?;
    within(
        "cli P two-tail",
        field(&rec, "p_two_tail", 1)?,
        7.76231e-5,
        2e-9,
    )?;
    within(
        "cli t Crit one-tail",
        field(&rec, "t_crit_one_tail", 1)?,
        1.662155326,
        1e-6,
    )?;
    within(
        "cli t Crit two-tail",
        field(&rec, "t_crit_two_tail", 1)?,
        1.986978657,
        1e-6,
    )?;
    Ok(format!(
        "t = {:.8}, df = {}, p = {:.6e} / {:.6e}, crit = {:.9} / {:.9}",
        r.t_stat, r.df_displayed, r.p_one_tail, r.p_two_tail, r.t_crit_one_tail, r.t_crit_two_tail
    ))
}

fn criterion_5() -> Outcome {
    let group = |label: &str, sum: f64, var: f64| {
        SummaryStats::new(sum / 15.0, var, 15).map(|s| AnovaGroup::new(label, s))
    };
    let groups = [
        group("Engineering", 1241.0, 238.49),
        group("Sciences", 1185.0, 304.42),
        group("Business", 1180.0, 408.80),
    ]
    .into_iter()
    .collect::<Result<Vec<_>, _>>()
    .map_err(|e| e.to_string())?;
    let r = one_way_anova(&groups, 0.05).map_err(|e| e.to_string())?;
    within("ssBetween", r.ss_between, 152.93, 0.01)?;
    within("msBetween", r.ms_between, 76.4667, 1e-3)?;
    within_rel("F", r.f_stat, 0.241033903, 1e-4)?;
    within_rel("P-value", r.p_value, 0.786894473, 1e-4)?;
    within("F crit", r.f_crit, 3.219942293, 1e-6)?;

    let rec = csv_records(&[
        "anova",
        "--summary",
        &format!("Engineering,{},238.49,15", 1241.0 / 15.0),
        "--summary",
        &format!("Sciences,{},304.42,15", 1185.0 / 15.0),
        "--summary",
        &format!("Business,{},408.8,15", 1180.0 / 15.0),
        "--format",
        "csv",
    ])?;
    within_rel(
        "cli F",
        field(&rec, "Between Groups", 4)?,
        0.241033903,
        1e-4,
    )?;
    within_rel(
        "cli P-value",
        field(&rec, "Between Groups", 5)?,
        0.786894473,
        1e-4,
    )?;
    within(
        "cli F crit",
        field(&rec, "Between Groups", 6)?,
        3.219942293,
        1e-6,
    )?;
    Ok(format!(
        "ssB = {:.4}, msB = {:.4}, F = {:.9}, P = {:.9}, F crit = {:.9}",
        r.ss_between, r.ms_between, r.f_stat, r.p_value, r.f_crit
    ))
}

fn criterion_6() -> Outcome {
    let err = |e: deskcalc_core::stats::StatsError| e.to_string();
    let mut checks = 0;
    for (a, b) in [(0.5, 0.5), (2.0, 3.0), (44.5, 0.5), (1.0, 21.0)] {
        within("I_0", reg_inc_beta(a, b, 0.0).map_err(err)?, 0.0, 0.0)?;
        within("I_1", reg_inc_beta(a, b, 1.0).map_err(err)?, 1.0, 0.0)?;
        checks += 2;
    }
    for x in [0.25, 0.5, 0.9] {
        within(
            "I_x(1,1)",
            reg_inc_beta(1.0, 1.0, x).map_err(err)?,
            x,
            1e-12,
        )?;
        checks += 1;
    }
    for a in [0.5, 2.0, 10.0] {
        within(
            "I_0.5(a,a)",
            reg_inc_beta(a, a, 0.5).map_err(err)?,
            0.5,
            1e-12,
        )?;
        checks += 1;
    }
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..500 {
        let (a, b, x) = (
            rng.gen_range(0.05..60.0),
            rng.gen_range(0.05..60.0),
            rng.gen_range(0.0..=1.0),
        );
        let lhs = reg_inc_beta(a, b, x).map_err(err)?;
        let rhs = 1.0 - reg_inc_beta(b, a, 1.0 - x).map_err(err)?;
        within(&format!("symmetry a={a} b={b} x={x}"), lhs, rhs, 1e-12)?;
        checks += 1;
    }
    for p in [0.01, 0.05, 0.5, 0.95, 0.99] {
        for df in [1.0, 2.0, 5.0, 30.0, 89.0] {
            let t = t_inverse(p, df).map_err(err)?;
            within("t round trip", t_cdf(t, df).map_err(err)?, p, 1e-9)?;
            checks += 1;
        }
        for (d1, d2) in [(1.0, 1.0), (2.0, 42.0), (5.0, 10.0)] {
            let f = f_inverse(p, d1, d2).map_err(err)?;
            within("F round trip", f_cdf(f, d1, d2).map_err(err)?, p, 1e-9)?;
            checks += 1;
        }
    }
    for i in -100..=100 {
        let t = i as f64 * 0.2;
        within(
            "t_cdf df=1",
            t_cdf(t, 1.0).map_err(err)?,
            0.5 + t.atan() / PI,
            1e-10,
        )?;
        let df2 = 0.5 + t / (2.0 * (2.0 + t * t).sqrt());
        within("t_cdf df=2", t_cdf(t, 2.0).map_err(err)?, df2, 1e-10)?;
        checks += 2;
    }
    let mut ln_fact = 0.0_f64;
    for n in 1..=40 {
        let got = ln_gamma(n as f64).map_err(err)?;
        within(
            &format!("ln_gamma({n})"),
            got,
            ln_fact,
            1e-10 * ln_fact.abs().max(1.0),
        )?;
        ln_fact += (n as f64).ln();
        checks += 1;
    }
    let mut ln_half = 0.5 * PI.ln();
    for n in 0..=40 {
        let x = n as f64 + 0.5;
        let got = ln_gamma(x).map_err(err)?;
        within(
            &format!("ln_gamma({x})"),
            got,
            ln_half,
            1e-10 * ln_half.abs().max(1.0),
        )?;
        ln_half += x.ln();
        checks += 1;
    }
    Ok(format!("{checks} identities hold"))
}

fn random_expr(rng: &mut StdRng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.65) {
            Expr::var()
        } else {
            Expr::constant(rng.gen_range(-40..=40) as f64 / 4.0)
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..9) {
        0 => Expr::neg(random_expr(rng, d)),
        1..=4 => {
            let op = [BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div][rng.gen_range(0..4)];
            Expr::binary(op, random_expr(rng, d), random_expr(rng, d))
        }
        5 => Expr::pow(
            random_expr(rng, d),
            Expr::constant(rng.gen_range(0..=4) as f64),
        ),
        6 => Expr::pow(random_expr(rng, d), random_expr(rng, d)),
        _ => Expr::call(
            Func::ALL[rng.gen_range(0..Func::ALL.len())],
            random_expr(rng, d),
        ),
    }
}

/// Whether a central difference at `x` is a sound oracle: `f` is defined
/// and moderate nearby, and the difference agrees with itself at twice the step.
fn oracle_usable(f: &Expr, x: f64) -> bool {
    let defined = (-4..=4).all(|k| f.eval(x + k as f64 * 2.5e-4).is_ok_and(|v| v.abs() < 1e4));
    defined
        && match (
            numeric_derivative(f, x, DEFAULT_DIFF_STEP),
            numeric_derivative(f, x, 2.0 * DEFAULT_DIFF_STEP),
        ) {
            (Ok(a), Ok(b)) => (a - b).abs() <= 1e-5 * (1.0 + a.abs()),
            _ => false,
        }
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let (mut tested, mut skipped) = (0, 0);
    while tested < 200 {
        let e = random_expr(&mut rng, 4);
        let x: f64 = rng.gen_range(-3.0..3.0);
        let d = e.derivative();
        let exact = match d.eval(x) {
            Ok(v) if oracle_usable(&e, x) => v,
            _ => {
                skipped += 1;
                continue;
            }
        };
        let approx = numeric_derivative(&e, x, DEFAULT_DIFF_STEP).map_err(|e| e.to_string())?;
        ensure((exact - approx).abs() <= 1e-4 * (1.0 + exact.abs()), || {
            format!("d/dx {e} = {d} at x = {x}: {exact} vs {approx}")
        })?;
        tested += 1;
    }
    Ok(format!(
        "200 pairs, 0 failures ({skipped} draws skipped: undefined or ill-conditioned)"
    ))
}

fn criterion_8() -> Outcome {
    let err = |e: deskcalc_core::stats::StatsError| e.to_string();
    let five = [1.0, 2.0, 3.0, 4.0, 5.0];
    let four = [1.0, 2.0, 3.0, 4.0];
    ensure(
        five_number_summary(&five).map_err(err)?.as_array() == five,
        || "{1..5}".into(),
    )?;
    ensure(
        five_number_summary(&four).map_err(err)?.as_array() == [1.0, 1.75, 2.5, 3.25, 4.0],
        || "{1..4}".into(),
    )?;
    ensure(quartile_inclusive(&five, 0.25).map_err(err)? == 2.0, || {
        "q1 {1..5}".into()
    })?;
    ensure(
        quartile_inclusive(&four, 0.25).map_err(err)? == 1.75,
        || "q1 {1..4}".into(),
    )?;
    ensure(
        quartile_inclusive(&[0.0, 1.0], 0.5).map_err(err)? == 0.5,
        || "{0,1}".into(),
    )?;
    ensure(
        five_number_summary(&[7.0]).map_err(err)?.as_array() == [7.0; 5],
        || "singleton".into(),
    )?;

    let mut rng = StdRng::seed_from_u64(8);
    for i in 0..1000 {
        let n = rng.gen_range(1..=60);
        let values: Vec<f64> = (0..n)
            .map(|_| match rng.gen_range(0..3) {
                0 => rng.gen_range(-1e6..1e6),
                1 => rng.gen_range(0..10) as f64,
                _ => rng.gen_range(-1.0..1.0) * 1e-9,
            })
            .collect();
        let s = five_number_summary(&values).map_err(err)?.as_array();
        ensure(s.windows(2).all(|w| w[0] <= w[1]), || {
            format!("sample {i}: {s:?}")
        })?;
    }
    Ok("unit cases exact; ordering holds on 1000 random samples".into())
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dir = dir.path();
    let groups = dir.join("groups.csv");
    std::fs::write(
        &groups,
        "group,value\nEngineering,46\nEngineering,75\nEngineering,89\nEngineering,95\n\
         Engineering,98\nSciences,60\nSciences,70\nSciences,65\n",
    )
    .map_err(|e| e.to_string())?;
    let single = dir.join("single.csv");
    std::fs::write(&single, "group,value\nA,1\nA,2\n").map_err(|e| e.to_string())?;
    let flat = dir.join("flat.csv");
    std::fs::write(&flat, "group,value\nA,1\nA,1\nB,2\nB,2\n").map_err(|e| e.to_string())?;
    let (g, s, f) = (
        groups.to_str().unwrap_or_default(),
        single.to_str().unwrap_or_default(),
        flat.to_str().unwrap_or_default(),
    );

    let matrix: Vec<(Vec<&str>, i32)> = vec![
        (vec!["goalseek", "--fn", "42 - 16800/x^2", "--x0", "3"], 0),
        (vec!["goalseek", "--fn", "42 -", "--x0", "3"], 1),
        (vec!["goalseek", "--fn", "ln(x)", "--x0", "-5"], 2),
        (vec!["goalseek", "--fn", "x^2+1", "--x0", "1"], 3),
        (vec!["minimize", "--fn", "42*x + 16800/x", "--x0", "3"], 0),
        (vec!["minimize", "--fn", "x*", "--x0", "3"], 1),
        (vec!["minimize", "--fn", "sqrt(x)", "--x0", "-4"], 2),
        (vec!["minimize", "--fn", "x", "--x0", "0"], 3),
        (
            vec![
                "riemann", "--fn", "x+2", "--a", "1", "--b", "3", "--n", "10",
            ],
            0,
        ),
        (
            vec!["riemann", "--fn", "x+2", "--a", "1", "--b", "3", "--n", "0"],
            1,
        ),
        (
            vec![
                "riemann", "--fn", "1/x", "--a", "-1", "--b", "1", "--n", "2",
            ],
            2,
        ),
        (
            vec![
                "tabulate",
                "--fn",
                "42*x+16800/x",
                "--from",
                "10",
                "--to",
                "30",
                "--step",
                "10",
            ],
            0,
        ),
        (
            vec![
                "tabulate", "--fn", "x", "--from", "0", "--to", "1", "--step", "0",
            ],
            1,
        ),
        (
            vec![
                "plot",
                "--fn",
                "42*x+16800/x",
                "--from",
                "1",
                "--to",
                "100",
                "--step",
                "1",
            ],
            0,
        ),
        (
            vec![
                "plot", "--fn", "x", "--from", "0", "--to", "1", "--step", "-1",
            ],
            1,
        ),
        (
            vec![
                "plot", "--fn", "ln(x)", "--from", "-2", "--to", "-1", "--step", "1",
            ],
            2,
        ),
        (
            vec![
                "interest",
                "--principal",
                "100",
                "--rate",
                "0.04",
                "--periods-per-year",
                "4",
                "--n",
                "4",
            ],
            0,
        ),
        (
            vec![
                "interest",
                "--principal",
                "100",
                "--rate",
                "0.04",
                "--periods-per-year",
                "0",
                "--n",
                "4",
            ],
            1,
        ),
        (
            vec![
                "interest",
                "--principal",
                "1",
                "--rate",
                "0",
                "--periods-per-year",
                "1",
                "--n",
                "5",
                "--start",
                "+262142-01-01",
            ],
            2,
        ),
        (vec!["ttest", "--input", g], 0),
        (vec!["ttest", "--input", s], 1),
        (vec!["ttest", "--input", f], 2),
        (
            vec![
                "ttest", "--mean1", "1", "--var1", "0", "--n1", "2", "--mean2", "1", "--var2", "0",
                "--n2", "2",
            ],
            2,
        ),
        (vec!["anova", "--input", g], 0),
        (vec!["anova", "--input", s], 1),
        (vec!["anova", "--input", f], 2),
        (vec!["summary", "--input", g], 0),
        (vec!["summary", "--input", "/no/such/file.csv"], 1),
        (vec!["boxplot", "--input", g], 0),
        (vec!["boxplot", "--input", g, "--format", "csv"], 1),
    ];
    for (args, want) in &matrix {
        let got = run(args).status.code();
        ensure(got == Some(*want), || {
            format!("{args:?} exited {got:?}, expected {want}")
        })?;
    }
    for sub in [
        "goalseek", "minimize", "riemann", "tabulate", "plot", "interest", "ttest", "anova",
        "summary", "boxplot",
    ] {
        ensure(run(&[sub, "--help"]).status.code() == Some(0), || {
            format!("{sub} --help")
        })?;
    }

    let csv_commands: Vec<Vec<&str>> = vec![
        vec![
            "riemann", "--fn", "x+2", "--a", "1", "--b", "3", "--n", "10", "--format", "csv",
        ],
        vec![
            "tabulate",
            "--fn",
            "42*x+16800/x",
            "--from",
            "1",
            "--to",
            "100",
            "--step",
            "1",
        ],
        vec![
            "interest",
            "--principal",
            "100",
            "--rate",
            "0.04",
            "--periods-per-year",
            "4",
            "--n",
            "40",
            "--start",
            "1994-01-01",
            "--format",
            "csv",
        ],
        vec!["ttest", "--input", g, "--format", "csv"],
        vec!["anova", "--input", g, "--format", "csv"],
        vec!["summary", "--input", g, "--format", "csv"],
        vec![
            "goalseek",
            "--fn",
            "42 - 16800/x^2",
            "--x0",
            "3",
            "--format",
            "csv",
        ],
        vec![
            "minimize",
            "--fn",
            "42*x + 16800/x",
            "--x0",
            "3",
            "--format",
            "csv",
        ],
    ];
    for args in &csv_commands {
        let (a, b) = (run(args), run(args));
        ensure(
            a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty(),
            || format!("{args:?} not byte-identical across runs"),
        )?;
    }

    let svg_commands: Vec<Vec<&str>> = vec![
        vec![
            "plot",
            "--fn",
            "42*x+16800/x",
            "--from",
            "1",
            "--to",
            "100",
            "--step",
            "1",
        ],
        vec![
            "plot", "--fn", "1/x", "--from", "-1", "--to", "1", "--step", "0.1",
        ],
        vec!["boxplot", "--input", g],
    ];
    for args in &svg_commands {
        let out = run(args);
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        let doc = roxmltree::Document::parse(&text).map_err(|e| format!("{args:?}: {e}"))?;
        let root = doc.root_element();
        ensure(
            root.has_tag_name("svg")
                && root.attribute("width").is_some()
                && root.attribute("height").is_some(),
            || format!("{args:?}: root element"),
        )?;
        ensure(run(args).stdout == text.as_bytes(), || {
            format!("{args:?} not byte-identical across runs")
        })?;
    }
    Ok(format!(
        "{} exit-code cases, {} CSV outputs stable, {} SVGs well-formed",
        matrix.len(),
        csv_commands.len(),
        svg_commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("cost minimisation", criterion_1),
        ("Riemann sum table", criterion_2),
        ("quarterly compounding", criterion_3),
        ("Welch t-test", criterion_4),
        ("one-way ANOVA", criterion_5),
        ("special functions", criterion_6),
        ("derivative oracle", criterion_7),
        ("quartiles", criterion_8),
        ("CLI contract", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
