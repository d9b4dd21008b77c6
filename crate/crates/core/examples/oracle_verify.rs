//! Seeded random instances checked against direct evaluation, with both
//! backends and the query budgets.

use signcond::oracle::{check_case, seeded_cases};
use signcond::queries::Backend;

fn main() -> signcond::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let cases = seeded_cases(seed, 50);
    for backend in [Backend::Sturm, Backend::Hermite] {
        let mut passed = 0;
        let mut worst = 0.0f64;
        for case in &cases {
            let report = check_case(case, backend)?;
            if report.passed {
                passed += 1;
            } else {
                println!("mismatch: {:?}", report.mismatches);
            }
            let s = case.system.len();
            let r = case.spec.distinct_roots();
            let used = report.stats.inv_calls as f64 / (1 + s * r) as f64;
            worst = worst.max(used);
        }
        println!(
            "{backend:?}: {passed}/{} passed, worst inv budget use {:.2}",
            cases.len(),
            worst
        );
    }
    Ok(())
}
