//! One-shot verification runner: golden values for the torus family, the
//! isolate-region-number-one classification over the census, and the
//! corpus-wide property checks, each reported as a named pass/fail line.

use serde::Serialize;

use crate::census::{corpus_property_suite, verify_theorem1};
use crate::error::Result;
use crate::regiongraph::{a2_bounds_check, RegionGraph};
use crate::torus::{fn_at_one, recurrence_check, torus_igen_closed_form, torus_projection};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &str, detail: String) -> Self {
        CheckResult { name: name.to_string(), passed: true, detail }
    }

    fn fail(name: &str, detail: String) -> Self {
        CheckResult { name: name.to_string(), passed: false, detail }
    }
}

/// Published I-generating functions of T(2,n) for n = 1..=12.
pub fn golden_igen_table() -> Vec<(usize, Vec<u64>)> {
    vec![
        (1, vec![1, 3]),
        (2, vec![1, 4]),
        (3, vec![1, 5]),
        (4, vec![1, 6, 2]),
        (5, vec![1, 7, 5]),
        (6, vec![1, 8, 9, 2]),
        (7, vec![1, 9, 14, 7]),
        (8, vec![1, 10, 20, 16, 2]),
        (9, vec![1, 11, 27, 30, 9]),
        (10, vec![1, 12, 35, 50, 25, 2]),
        (11, vec![1, 13, 44, 77, 55, 11]),
        (12, vec![1, 14, 54, 112, 105, 36, 2]),
    ]
}

/// Compare the enumerated I-generating functions of the torus family
/// against an expected table.
pub fn golden_table_check(expected: &[(usize, Vec<u64>)]) -> CheckResult {
    let name = "torus-golden-table";
    let mut mismatches = Vec::new();
    for (n, want) in expected {
        let got = match torus_projection(*n).and_then(|t| RegionGraph::from_projection(&t)) {
            Ok(g) => g.igen_polynomial().coeffs().to_vec(),
            Err(e) => {
                return CheckResult::fail(name, format!("f_{n}: {e}"));
            }
        };
        if &got != want {
            mismatches.push(format!("f_{n} mismatch: got {got:?}, want {want:?}"));
        }
    }
    if mismatches.is_empty() {
        CheckResult::pass(name, format!("f_1..f_{} as published", expected.len()))
    } else {
        CheckResult::fail(name, mismatches.join("; "))
    }
}

fn closed_form_check(max_n: usize) -> CheckResult {
    let name = "torus-closed-form";
    for n in 1..=max_n {
        let closed = match torus_igen_closed_form(n) {
            Ok(f) => f,
            Err(e) => return CheckResult::fail(name, format!("n={n}: {e}")),
        };
        let enumerated = match torus_projection(n).and_then(|t| RegionGraph::from_projection(&t))
        {
            Ok(g) => g.igen_polynomial(),
            Err(e) => return CheckResult::fail(name, format!("n={n}: {e}")),
        };
        if closed != enumerated {
            return CheckResult::fail(
                name,
                format!(
                    "n={n}: closed form {:?} vs enumerated {:?}",
                    closed.coeffs(),
                    enumerated.coeffs()
                ),
            );
        }
    }
    CheckResult::pass(name, format!("closed form = enumeration for n <= {max_n}"))
}

fn recurrence_checks(max_n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for n in 4..=max_n {
        match recurrence_check(n) {
            Ok(r) if r.ok => {}
            Ok(r) => bad.push(format!("n={n}: residual {:?}", r.residual)),
            Err(e) => bad.push(format!("n={n}: {e}")),
        }
    }
    out.push(if bad.is_empty() {
        CheckResult::pass("torus-recurrence", format!("f_n - f_(n-1) - x f_(n-2) = -2x^2 for 4 <= n <= {max_n}"))
    } else {
        CheckResult::fail("torus-recurrence", bad.join("; "))
    });

    let mut bad = Vec::new();
    for n in 4..=max_n {
        let ok = match (fn_at_one(n), fn_at_one(n - 1), fn_at_one(n - 2)) {
            (Ok(a), Ok(b), Ok(c)) => a == b + c - 2,
            _ => false,
        };
        if !ok {
            bad.push(format!("n={n}"));
        }
    }
    out.push(if bad.is_empty() {
        CheckResult::pass("torus-eval-at-one", format!("f_n(1) = f_(n-1)(1) + f_(n-2)(1) - 2 for 4 <= n <= {max_n}"))
    } else {
        CheckResult::fail("torus-eval-at-one", bad.join("; "))
    });
    out
}

fn torus_coefficient_checks(max_n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for n in 1..=max_n {
        let f = match torus_igen_closed_form(n) {
            Ok(f) => f,
            Err(e) => {
                bad.push(format!("n={n}: {e}"));
                continue;
            }
        };
        if f.coeff(0) != 1 || f.coeff(1) != (n + 2) as u64 || f.coeffs().iter().any(|&a| a == 0) {
            bad.push(format!("n={n}: {:?}", f.coeffs()));
        }
        if n >= 2 && f.maxdeg() != n / 2 {
            bad.push(format!("n={n}: maxdeg {}", f.maxdeg()));
        }
    }
    out.push(if bad.is_empty() {
        CheckResult::pass("torus-prop-5.1", format!("coefficients positive, a0=1, a1=n+2, maxdeg=floor(n/2) for n <= {max_n}"))
    } else {
        CheckResult::fail("torus-prop-5.1", bad.join("; "))
    });

    let mut bad = Vec::new();
    for n in 2..=max_n {
        match torus_projection(n).and_then(|t| a2_bounds_check(&t)) {
            Ok(b) if b.ok => {}
            Ok(b) => bad.push(format!("n={n}: a2={} not in [{}, {}]", b.a2, b.lower, b.upper)),
            Err(e) => bad.push(format!("n={n}: {e}")),
        }
    }
    out.push(if bad.is_empty() {
        CheckResult::pass("torus-prop-5.2", format!("a2 bounds hold for 2 <= n <= {max_n}"))
    } else {
        CheckResult::fail("torus-prop-5.2", bad.join("; "))
    });
    out
}

/// Run the whole verification suite. Census-backed checks use
/// `max_crossings`; the torus family always runs to n = 24.
pub fn paper_suite(max_crossings: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    out.push(golden_table_check(&golden_igen_table()));
    out.push(closed_form_check(24));
    out.extend(recurrence_checks(24));
    out.extend(torus_coefficient_checks(24));

    let report = verify_theorem1(max_crossings)?;
    out.push(if report.holds {
        CheckResult::pass(
            "theorem-1.1-census",
            format!(
                "I=1 members over {} projections (c <= {}): {:?}",
                report.members_checked, report.max_crossings, report.i1_members
            ),
        )
    } else {
        CheckResult::fail(
            "theorem-1.1-census",
            format!(
                "got {:?}, want {:?}",
                report.i1_members, report.expected_i1_members
            ),
        )
    });
    out.push(if report.cor22_violations.is_empty() {
        CheckResult::pass("cor-2.2-reducible", "every reducible member with c >= 2 has I >= 2".to_string())
    } else {
        CheckResult::fail("cor-2.2-reducible", format!("{:?}", report.cor22_violations))
    });
    out.push(if report.cor24_violations.is_empty() {
        CheckResult::pass("cor-2.4-four-crossings", "every member with c >= 4 has I >= 2".to_string())
    } else {
        CheckResult::fail("cor-2.4-four-crossings", format!("{:?}", report.cor24_violations))
    });

    let corpus = corpus_property_suite(max_crossings)?;
    let mut names: Vec<String> = corpus
        .records
        .iter()
        .flat_map(|r| r.checks.keys().cloned())
        .collect();
    names.sort();
    names.dedup();
    for check in names {
        let total = corpus
            .records
            .iter()
            .filter(|r| r.checks.contains_key(&check))
            .count();
        let failing: Vec<&str> = corpus
            .records
            .iter()
            .filter(|r| r.checks.get(&check) == Some(&false))
            .map(|r| r.pd.as_str())
            .collect();
        let name = format!("corpus-{}", check.replace('_', "-"));
        out.push(if failing.is_empty() {
            CheckResult::pass(&name, format!("{total}/{total} members (c <= {max_crossings})"))
        } else {
            CheckResult::fail(&name, format!("failing members: {failing:?}"))
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_green_at_two_crossings() {
        let results = paper_suite(2).unwrap();
        assert!(!results.is_empty());
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn injected_fault_is_reported_by_name() {
        let mut table = golden_igen_table();
        // corrupt one coefficient of f_8
        table[7].1[2] += 1;
        let result = golden_table_check(&table);
        assert!(!result.passed);
        assert!(result.detail.contains("f_8"), "{}", result.detail);
    }

    #[test]
    fn golden_table_is_green() {
        let result = golden_table_check(&golden_igen_table());
        assert!(result.passed, "{}", result.detail);
    }
}
