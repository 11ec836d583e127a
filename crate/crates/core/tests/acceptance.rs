//! Acceptance criteria. Every check is exact integer equality except the
//! numeric golden-ratio bound. Each test prints one PASS/FAIL line.
//!
//! Run with `cargo test -p qgolden --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use qgolden::cli::{self, Verifier};
use qgolden::combinatorics::{catalan, catalan_closed, fibonacci};
use qgolden::golden::{
    check_theorem, golden_ratio_numeric, golden_ratio_reference, phi_reciprocal_series, phi_series,
    ratio_series, reciprocal_ratio_series,
};
use qgolden::qfib::{qfib_at_one, qfib_closed, qfib_recursive};
use qgolden::sw_identity::{sw_geometric, sw_gf_coefficient, sw_lhs, sw_rhs};
use qgolden::{Quantity, TruncatedSeries, VerificationReport};

fn criterion(id: u32, name: &str, check: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(()) => println!("PASS [{id:>2}] {name} ({elapsed:.2}s)"),
        Err(why) => println!("FAIL [{id:>2}] {name} ({elapsed:.2}s): {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {id} failed: {why}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn signed(k: usize, v: BigInt) -> BigInt {
    if k.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

#[test]
fn c01_proposition_equivalence() {
    criterion(1, "recurrence == closed form for 0 <= n <= 300", || {
        for n in 0..=300 {
            ensure(qfib_recursive::<BigInt>(n) == qfib_closed(n), || {
                format!("n = {n}")
            })?;
        }
        Ok(())
    });
}

#[test]
fn c02_fibonacci_specialization() {
    criterion(2, "F_n(1) == F_n for 0 <= n <= 300", || {
        for n in 0..=300 {
            ensure(qfib_at_one(n) == fibonacci(n), || format!("n = {n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c03_theorem() {
    criterion(
        3,
        "F_(n+1)/F_n == phi(q) mod q^(n+1) for 0 <= n <= 100",
        || {
            for n in 0..=100 {
                let lhs = ratio_series(n, n + 1).map_err(|e| e.to_string())?;
                let rhs = phi_series(n + 1).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, || {
                    format!("n = {n}: {:?}", lhs.first_difference(&rhs))
                })?;
            }
            Ok(())
        },
    );
}

#[test]
fn c04_catalan_corollary() {
    criterion(
        4,
        "F_n/F_(n+1) coefficients are (-1)^k C_k through q^n",
        || {
            let head: Vec<BigInt> = [1, -1, 2, -5, 14].map(BigInt::from).to_vec();
            for n in 0..=100 {
                let s = reciprocal_ratio_series(n, n + 1).map_err(|e| e.to_string())?;
                if n >= 4 {
                    ensure(s.coeffs()[..5] == head[..], || {
                        format!("n = {n}: head {:?}", &s.coeffs()[..5])
                    })?;
                }
                for k in 0..=n {
                    let expected = signed(k, catalan_closed(k).map_err(|e| e.to_string())?);
                    ensure(s.coeffs()[k] == expected, || format!("n = {n}, k = {k}"))?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c05_sw_four_way() {
    criterion(5, "sw: direct == gf == geometric == (-1)^m C_(m-1)", || {
        let mut pairs: Vec<(u64, u64)> = (1..=18)
            .flat_map(|n| (1..=n).map(move |m| (n, m)))
            .collect();
        ensure(pairs.len() == 171, || format!("{} pairs", pairs.len()))?;
        pairs.extend([(40, 14), (60, 12)]);
        for (n, m) in pairs {
            let rhs = sw_rhs(m).map_err(|e| e.to_string())?;
            let routes = [
                ("direct", sw_lhs(n, m)),
                ("gf", sw_gf_coefficient(n, m)),
                ("geometric", sw_geometric(n, m)),
            ];
            for (name, value) in routes {
                let value = value.map_err(|e| e.to_string())?;
                ensure(value == rhs, || {
                    format!("n = {n}, m = {m}: {name} {value} != {rhs}")
                })?;
            }
        }
        Ok(())
    });
}

#[test]
fn c06_quadratic_residual() {
    criterion(6, "phi^2 - phi - q == 0 mod q^64", || {
        let phi = phi_series(64).map_err(|e| e.to_string())?;
        let q = TruncatedSeries::one(64).unwrap().shift(1);
        let residual = &(&(&phi * &phi) - &phi) - &q;
        ensure(residual == TruncatedSeries::zero(64).unwrap(), || {
            format!("{residual:?}")
        })
    });
}

#[test]
fn c07_mutual_inverse() {
    criterion(7, "phi * (1/phi) == 1 mod q^64", || {
        let prod = &phi_series(64).unwrap() * &phi_reciprocal_series(64).unwrap();
        ensure(prod == TruncatedSeries::one(64).unwrap(), || {
            format!("{prod:?}")
        })
    });
}

#[test]
fn c08_catalan_oracles() {
    criterion(
        8,
        "Catalan recurrence == binomial(2k, k)/(k+1) for 0 <= k <= 40",
        || {
            for k in 0..=40 {
                let closed = catalan_closed(k).map_err(|e| e.to_string())?;
                ensure(catalan(k) == closed, || format!("k = {k}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn c09_numeric_golden_ratio() {
    criterion(9, "|F_51/F_50 - (1 + sqrt 5)/2| < 1e-15", || {
        let scale = 40;
        let approx = golden_ratio_numeric(50, scale).map_err(|e| e.to_string())?;
        let exact = golden_ratio_reference(scale);
        // both truncated at 10^-40, so the bound is 10^25 units
        let diff = approx.abs_diff_units(&exact);
        let tolerance = BigInt::from(10).pow(scale - 15);
        ensure(diff < tolerance, || {
            format!("difference {diff} x 1e-{scale}")
        })
    });
}

struct Corrupted;

impl Verifier for Corrupted {
    fn theorem(&self, n: usize) -> VerificationReport {
        let r = check_theorem(n);
        let Quantity::Coefficients(mut lhs) = r.lhs else {
            unreachable!()
        };
        if n == 7 {
            lhs[4] += 1;
        }
        VerificationReport::compare(
            "theorem",
            &[("n", n as u64)],
            Quantity::Coefficients(lhs),
            r.rhs,
        )
    }
}

#[test]
fn c10_cli_contract() {
    criterion(10, "CLI exit codes and golden output", || {
        let bin = env!("CARGO_BIN_EXE_qgolden");
        let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();

        ensure(code(&["verify", "all"]) == Some(0), || {
            "verify all did not exit 0".into()
        })?;
        ensure(
            code(&["verify", "sw", "--max-n", "10", "--max-m", "11"]) == Some(2),
            || "m > n did not exit 2".into(),
        )?;

        let (mut out, mut err) = (Vec::new(), Vec::new());
        let corrupted = cli::run_with(["qgolden", "verify", "all"], &Corrupted, &mut out, &mut err);
        ensure(corrupted == cli::EXIT_CHECK_FAILED, || {
            format!("corrupted check exited {corrupted}")
        })?;

        let stdout = |args: &[&str]| {
            String::from_utf8(Command::new(bin).args(args).output().unwrap().stdout).unwrap()
        };
        let cases: [(&[&str], &str); 4] = [
            (&["qfib", "5"], "1 4 3\n"),
            (&["qfib", "5", "--json"], "{\"command\":\"qfib\",\"parameters\":{\"n\":5},\"result\":[\"1\",\"4\",\"3\"]}\n"),
            (&["phi", "--reciprocal", "--order", "5"], "1 -1 2 -5 14\n"),
            (
                &["phi", "--reciprocal", "--order", "5", "--json"],
                "{\"command\":\"phi\",\"parameters\":{\"order\":5,\"reciprocal\":true},\"result\":[\"1\",\"-1\",\"2\",\"-5\",\"14\"]}\n",
            ),
        ];
        for (args, expected) in cases {
            let got = stdout(args);
            ensure(got == expected, || format!("{args:?}: {got:?}"))?;
        }
        Ok(())
    });
}
