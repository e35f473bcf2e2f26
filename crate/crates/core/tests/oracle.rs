mod common;

use common::sig;
use lamcoord::oracle::{
    CHECK_BOX_ROUNDTRIP, CHECK_CENSUS_ROUNDTRIP, CHECK_DECODED_VALID, CHECK_EXACTNESS,
};
use lamcoord::{
    check_bijection, check_bijection_with, decode, enumerate_census_configurations,
    enumerate_dynnikov_box, EnumerationBudget, Error, TriangleCoords,
};

#[test]
fn n12_radius3_passes() {
    let report = check_bijection(&EnumerationBudget::new(sig(1, 2), 3, 6)).unwrap();
    assert!(report.passed(), "{report}");
    assert_eq!(report.box_tuples, 7u64.pow(3) - 1);
}

/// Without the parity restriction the box contains tuples no lamination has.
#[test]
fn n22_radius2_strict_and_lattice() {
    let strict = check_bijection(&EnumerationBudget::new(sig(2, 2), 2, 4)).unwrap();
    assert_eq!(strict.box_tuples, 15624);
    let rt = strict.check(CHECK_BOX_ROUNDTRIP).unwrap();
    assert!(rt.failures > 0);
    assert!(rt
        .first_failure
        .as_ref()
        .unwrap()
        .contains("differ in parity"));
    for name in [CHECK_CENSUS_ROUNDTRIP, CHECK_DECODED_VALID, CHECK_EXACTNESS] {
        assert!(strict.check(name).unwrap().passed(), "{strict}");
    }

    let lattice =
        check_bijection(&EnumerationBudget::new(sig(2, 2), 2, 4).parity_lattice_only(true))
            .unwrap();
    assert!(lattice.passed(), "{lattice}");
    assert_eq!(
        lattice.check(CHECK_BOX_ROUNDTRIP).unwrap().skipped,
        rt.failures
    );
}

#[test]
fn reports_are_deterministic() {
    let budget = EnumerationBudget::new(sig(3, 1), 1, 4).parity_lattice_only(true);
    let a = check_bijection(&budget).unwrap();
    let b = check_bijection(&budget).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_string(), b.to_string());
}

/// Dropping the `2R` term in β, and the α and γ it feeds, must be caught at
/// the first tuple that has R-components.
#[test]
fn decoder_without_r_term_is_caught() {
    let s = sig(2, 2);
    let broken = |rho: &_| {
        let (t, im) = decode(rho)?;
        let r = im.r;
        let shift = |v: &[i64], by: i64| v.iter().map(|x| x - by).collect::<Vec<_>>();
        TriangleCoords::new(
            t.signature(),
            shift(t.alpha(), r),
            shift(t.beta(), 2 * r),
            shift(t.gamma(), 2 * r),
            t.core().to_vec(),
        )
    };
    let budget = EnumerationBudget::new(s, 2, 4).parity_lattice_only(true);
    let report = check_bijection_with(&budget, broken).unwrap();
    assert!(!report.passed());

    let first_r = enumerate_dynnikov_box(s, 2)
        .filter(|rho| rho.in_parity_lattice())
        .find(|rho| decode(rho).unwrap().1.r > 0)
        .unwrap();
    let (_, im) = decode(&first_r).unwrap();
    assert!(2 * first_r.core()[1] > *im.beta_star.last().unwrap());
    let first = report
        .check(CHECK_BOX_ROUNDTRIP)
        .unwrap()
        .first_failure
        .clone()
        .unwrap();
    assert!(first.starts_with(&format!("ρ = {first_r} ")), "{first}");
}

#[test]
fn budget_ceiling() {
    let budget = EnumerationBudget::new(sig(2, 3), 6, 8).with_work_ceiling(1000);
    assert!(matches!(
        check_bijection(&budget),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn census_examples_present() {
    let configs =
        enumerate_census_configurations(&EnumerationBudget::new(sig(2, 2), 0, 6)).unwrap();
    assert!(configs.iter().any(|c| c.tau == common::example2()));
    let configs =
        enumerate_census_configurations(&EnumerationBudget::new(sig(2, 3), 0, 8)).unwrap();
    assert!(configs.iter().any(|c| c.tau == common::example1()));
}

/// With no strands at all only the curves recorded by negative core
/// coordinates remain, and those still need a strand bound of 2 to be listed
/// since `|c|` is bounded alongside β.
#[test]
fn strand_bound_zero() {
    let none = enumerate_census_configurations(&EnumerationBudget::new(sig(2, 2), 0, 0)).unwrap();
    assert!(none.is_empty());
    let two = enumerate_census_configurations(&EnumerationBudget::new(sig(2, 2), 0, 2)).unwrap();
    for c in two.iter().filter(|c| c.tau.beta().iter().all(|&b| b == 0)) {
        assert!(c.tau.core().iter().all(|&v| v <= 0), "{}", c.tau);
    }
}
