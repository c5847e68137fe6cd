//! Suites outside the numbered acceptance criteria.

use gbei::homology::OracleConfig;
use gbei::verify::{Suite, Verifier};

fn passes(suite: Suite) {
    let r = Verifier::new(OracleConfig::default()).run(suite);
    assert!(r.checked > 0);
    assert!(r.passed(), "{suite}: {:#?}", r.failures);
}

#[test]
fn formulas_agree_with_the_oracle() {
    passes(Suite::Agreement);
}

#[test]
fn regularity_does_not_depend_on_the_field() {
    passes(Suite::Characteristic);
}
