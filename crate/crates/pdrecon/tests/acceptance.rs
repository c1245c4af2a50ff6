//! Runs every acceptance criterion at its stated tolerance and prints one
//! PASS/FAIL line per criterion.
//!
//! One criterion is known to be red: the K_{a,b} token-jumping realization is
//! false when a = 3, because then a pair inside the 3-side is also a minimum
//! power dominating set. That criterion is reported as FAIL; the test asserts
//! that its failures are exactly those cases, so any other regression, or a
//! change in what fails, still breaks the build.

use pdrecon::verify::{self, Status, SuiteConfig};

const KNOWN_RED: &str = "AC08_TJ_REALIZATIONS";
const KNOWN_RED_CASES: [&str; 3] = ["K3,3 ~ K3xK3", "K3,4 ~ K3xK4", "K3,5 ~ K3xK5"];

#[test]
fn acceptance_criteria() {
    let results = verify::run_suite(None, &SuiteConfig::default()).expect("known ids");
    let criteria: Vec<_> = results.iter().filter(|r| r.criterion.is_some()).collect();
    assert_eq!(criteria.len(), 11, "one check per criterion");

    println!();
    for r in &criteria {
        println!(
            "criterion {:>2} {:<26} {} ({} ms): {}",
            r.criterion.unwrap(),
            r.id,
            verify::status_word(&r.status),
            r.runtime_ms,
            r.observed
        );
    }
    for r in results.iter().filter(|r| r.criterion.is_none()) {
        println!(
            "spot check   {:<26} {} ({} ms): {}",
            r.id,
            verify::status_word(&r.status),
            r.runtime_ms,
            r.observed
        );
    }
    let passed = criteria.iter().filter(|r| r.status == Status::Pass).count();
    println!("{passed}/11 criteria pass");

    for r in &results {
        if r.id == KNOWN_RED {
            assert_eq!(r.status, Status::Fail, "{}: {}", r.id, r.observed);
            assert!(
                r.observed.starts_with("21/24 realizations isomorphic; 3 failure(s)"),
                "{}",
                r.observed
            );
            for case in KNOWN_RED_CASES {
                assert!(r.observed.contains(&format!("{case} fails")), "{}", r.observed);
            }
        } else {
            assert_eq!(r.status, Status::Pass, "{}: {} (expected {})", r.id, r.observed, r.expected);
        }
    }
}
