//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Expected-failure readings are reported as XFAIL lines and
//! fail the suite only if they unexpectedly pass.

use std::process::{Command, ExitCode};

use eulerian::classical::{self, ClassicalFiniteSum};
use eulerian::general::{self, FiniteSumForm, Progression};
use eulerian::oracle::{self, DEFAULT_BOUND};
use eulerian::qeulerian::{self, DEFAULT_Q_BOUND};
use eulerian::{Check, Rat};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn grid() -> Vec<Progression> {
    let grid = general::default_grid();
    let expected = [(1, 1), (2, 3), (0, 1), (-1, 2), (3, 3)];
    for (a, d) in expected {
        assert!(grid.contains(&Progression::from_ints(a, d)), "grid lacks ({a},{d})");
    }
    let half = Progression::new("1/2".parse().unwrap(), "-1/3".parse().unwrap());
    assert!(grid.contains(&half), "grid lacks (1/2,-1/3)");
    grid
}

fn require(check: Check, what: impl FnOnce() -> String) -> Outcome {
    match check.mismatch() {
        None => Ok(()),
        Some(m) => Err(format!("{}: {m}", what())),
    }
}

fn require_ok(check: eulerian::Result<Check>, what: impl Fn() -> String) -> Outcome {
    match check {
        Ok(c) => require(c, what),
        Err(e) => Err(format!("{}: {e}", what())),
    }
}

fn example_one() -> Outcome {
    let counts = oracle::eulerian_by_enumeration(3, DEFAULT_BOUND).map_err(|e| e.to_string())?;
    if counts != [1, 4, 1] {
        return Err(format!("enumeration gave {counts:?}"));
    }
    let rec = classical::classical_triangle(3).get(3, 1);
    let closed = classical::classical_number_closed(3, 1);
    if rec != 4.into() || closed != 4.into() {
        return Err(format!("A(3,1): recurrence {rec}, closed form {closed}"));
    }
    Ok(())
}

fn classical_triple() -> Outcome {
    let tri = classical::classical_triangle(8);
    for n in 1..=8 {
        let closed: Vec<_> = (0..n as i64).map(|k| classical::classical_number_closed(n, k)).collect();
        require(Check::sequences(tri.row(n), &closed), || format!("closed form n={n}"))?;
        let counts: Vec<Rat> = oracle::eulerian_by_enumeration(n, DEFAULT_BOUND)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|c| Rat::from(c as i64))
            .collect();
        let row: Vec<Rat> = tri.row(n).iter().map(Rat::from).collect();
        require(Check::sequences(&row, &counts), || format!("enumeration n={n}"))?;
    }
    Ok(())
}

fn general_triple() -> Outcome {
    let classical = classical::classical_triangle(10);
    for prog in grid() {
        let tri = general::general_triangle(&prog, 10);
        for n in 0..=10 {
            let closed: Vec<Rat> = (-1..n as i64).map(|k| general::general_number_closed(n, k, &prog)).collect();
            require(Check::sequences(tri.row(n), &closed), || format!("{prog} n={n}"))?;
        }
        if prog == Progression::natural() {
            for n in 1..=10 {
                let expected: Vec<Rat> = classical.row(n).iter().map(Rat::from).collect();
                require(Check::sequences(&tri.row(n)[1..], &expected), || format!("natural n={n}"))?;
            }
        }
    }
    Ok(())
}

fn worpitzky_suite() -> Outcome {
    for n in 1..=8 {
        for x in 0..=20 {
            require_ok(classical::worpitzky_eval(n, x), || format!("classical n={n} x={x}"))?;
        }
    }
    for prog in grid() {
        for n in 1..=8 {
            for i in 1..=n as u64 + 2 {
                require_ok(general::general_worpitzky_check(n, &prog, i), || format!("{prog} n={n} i={i}"))?;
            }
        }
    }
    Ok(())
}

fn power_sum_suite() -> Outcome {
    for n in 1..=8 {
        for m in 1..=30 {
            require_ok(classical::power_sum_check_prop21(n, m), || format!("binomial form n={n} m={m}"))?;
        }
    }
    for prog in grid() {
        for n in 1..=8 {
            for m in 1..=30 {
                require_ok(general::general_power_sum_check(&prog, n, m), || format!("{prog} n={n} m={m}"))?;
            }
        }
    }
    for n in 1..=10 {
        for m in 1..=30 {
            require_ok(classical::faulhaber_check(n, m), || format!("Bernoulli n={n} m={m}"))?;
        }
    }
    Ok(())
}

fn polynomial_bridges() -> Outcome {
    for prog in grid() {
        for n in 0..=10 {
            require(general::general_poly_bridge_check(n, &prog), || format!("bridge {prog} n={n}"))?;
            require(general::general_row_sum_check(n, &prog), || format!("row sum {prog} n={n}"))?;
        }
    }
    for n in 1..=10 {
        require_ok(general::natural_specialization_check(n), || format!("T_n(t;1,1) n={n}"))?;
    }
    Ok(())
}

fn generating_functions() -> Outcome {
    require_ok(classical::egf_check_eq7(10), || "classical EGF order=10".into())?;
    for prog in grid() {
        require_ok(general::general_egf_check(&prog, 8), || format!("general EGF {prog}"))?;
    }
    for n in 0..=6 {
        require_ok(classical::geometric_series_check_eq5(n, n + 10), || format!("classical series n={n}"))?;
        for prog in grid() {
            require_ok(general::geometric_series_check_prop34(&prog, n, n + 10), || {
                format!("general series {prog} n={n}")
            })?;
        }
    }
    Ok(())
}

fn finite_sums() -> Outcome {
    for variant in [ClassicalFiniteSum::Eq2, ClassicalFiniteSum::Eq3] {
        for n in 1..=6 {
            for m in 1..=10 {
                require_ok(classical::classical_finite_sum_identity(variant, n, m), || {
                    format!("{variant:?} n={n} m={m}")
                })?;
            }
        }
    }
    for prog in grid() {
        for n in 0..=5 {
            for m in 2..=8 {
                for form in [FiniteSumForm::Eq24, FiniteSumForm::Eq25] {
                    require_ok(general::finite_sum_identity_check(form, &prog, n, m), || {
                        format!("{form:?} {prog} n={n} m={m}")
                    })?;
                }
                require_ok(general::full_sum_identity_check(&prog, n, m), || {
                    format!("full sum {prog} n={n} m={m}")
                })?;
            }
        }
    }
    Ok(())
}

fn q_suite() -> Outcome {
    for n in 1..=6 {
        for x in 1..=8 {
            require_ok(qeulerian::carlitz_identity_check(n, x), || format!("q expansion n={n} x={x}"))?;
        }
        require_ok(qeulerian::q_combinatorial_check(n, DEFAULT_Q_BOUND), || format!("q enumeration n={n}"))?;
    }
    for n in 1..=10 {
        require_ok(qeulerian::q_collapse_check(n), || format!("q = 1 n={n}"))?;
    }
    Ok(())
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_eulerian");
    let golden = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/");
    let cases: [(&[&str], &str); 3] = [
        (
            &["triangle", "--kind", "general", "--a", "2", "--d", "3", "--max-n", "2", "--format", "json"],
            "triangle_general.json",
        ),
        (&["powersum", "--a", "2", "--d", "3", "--n", "2", "--m", "3"], "powersum.txt"),
        (&["verify", "--suite", "all", "--max-n", "6"], "verify_all.txt"),
    ];
    for (args, file) in cases {
        let expected = std::fs::read(format!("{golden}{file}")).map_err(|e| format!("{file}: {e}"))?;
        for run in 0..2 {
            let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
            if out.status.code() != Some(0) {
                return Err(format!("{} exited with {:?}", args.join(" "), out.status.code()));
            }
            if out.stdout != expected {
                return Err(format!("{} run {run} differs from {file}", args.join(" ")));
            }
        }
    }
    Ok(())
}

/// Readings that must fail; returns an error if one unexpectedly passes.
fn expected_failures() -> Vec<(String, Outcome)> {
    let fails = |c: eulerian::Result<Check>| match c {
        Ok(c) if !c.passed() => Ok(()),
        Ok(_) => Err("unexpectedly passed".to_string()),
        Err(e) => Err(e.to_string()),
    };
    let mut out = Vec::new();
    for form in [FiniteSumForm::Eq24, FiniteSumForm::Eq25] {
        out.push((
            format!("{form:?} read as sum from i=1, a=1 d=1 n=1 m=2"),
            fails(general::printed_full_sum_reading_check(form, &Progression::natural(), 1, 2)),
        ));
    }
    out.push((
        "q expansion with [x+k-1 choose n], n=1 x=3".into(),
        fails(qeulerian::carlitz_identity_check_shifted(1, 3)),
    ));
    out.push((
        "q enumeration with unshifted prefactor, n=3 k=1".into(),
        fails((|| {
            let lhs = qeulerian::q_combinatorial_unshifted(3, 1, DEFAULT_Q_BOUND)?;
            Ok(Check::polys(&lhs, &qeulerian::q_triangle(3)?.get(3, 1)))
        })()),
    ));
    out
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("example 1: ascent counts of S_3 and A(3,1) = 4", example_one),
        ("classical recurrence = closed form = enumeration, n <= 8", classical_triple),
        ("general recurrence = closed form on the grid, n <= 10", general_triple),
        ("Worpitzky identities, classical and general", worpitzky_suite),
        ("power sums against direct summation", power_sum_suite),
        ("polynomial bridges, specialization and row sums", polynomial_bridges),
        ("generating functions and series windows", generating_functions),
        ("finite weighted power sums", finite_sums),
        ("q-Eulerian expansion, enumeration and q = 1 collapse", q_suite),
        ("CLI golden outputs and verify exit status", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("PASS criterion {:>2}: {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({why})", i + 1);
            }
        }
    }
    for (name, outcome) in expected_failures() {
        match outcome {
            Ok(()) => println!("XFAIL {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL expected failure {name} ({why})");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} failing");
        ExitCode::FAILURE
    }
}
