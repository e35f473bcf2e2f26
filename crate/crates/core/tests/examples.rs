//! Worked examples, one test per case.

mod common;

use common::{example1, example2, sig, tau};
use lamcoord::oracle::component_multiset;
use lamcoord::{
    build_diagram, component_count, compute_xy, decode, encode, r_count, trace, DynnikovCoords,
    Error, ExtraComponent, LoopSide, OracleTracer, RegionId, Sidedness, Signature, Violation,
};
use rand::SeedableRng;

fn rho(k: i64, n: i64, a: &[i64], b: &[i64], t: &[i64], c: &[i64]) -> DynnikovCoords {
    DynnikovCoords::new(sig(k, n), a.to_vec(), b.to_vec(), t.to_vec(), c.to_vec()).unwrap()
}

#[test]
fn signature_counts() {
    let s = sig(2, 3);
    assert_eq!(
        (
            s.alpha_count(),
            s.beta_count(),
            s.gamma_count(),
            s.core_count()
        ),
        (4, 4, 1, 2)
    );
    let s = sig(2, 2);
    assert_eq!(
        (
            s.alpha_count(),
            s.beta_count(),
            s.gamma_count(),
            s.core_count()
        ),
        (2, 3, 1, 2)
    );
}

#[test]
fn degenerate_signatures_rejected() {
    for (k, n) in [(1, 1), (0, 3), (3, 0), (-1, 4)] {
        let err = Signature::new(k, n).unwrap_err();
        assert!(matches!(err, Error::Signature { .. }), "{k},{n}: {err}");
    }
}

#[test]
fn region_order() {
    use RegionId::*;
    assert_eq!(
        sig(2, 3).regions(),
        [DeltaZero, S(1), S(2), SPrime(1), DeltaPrimeK]
    );
    assert_eq!(
        sig(2, 2).regions(),
        [DeltaZero, S(1), SPrime(1), DeltaPrimeK]
    );
    assert_eq!(sig(1, 3).regions(), [DeltaZero, S(1), S(2), DeltaPrimeK]);
}

#[test]
fn b_values() {
    assert_eq!(example1().b(), [-2, -1, 2]);
    assert_eq!(tau(2, 2, &[2, 2], &[4, 4, 4], &[4], &[0, 0]).b(), [0, 0]);
    assert_eq!(example2().b(), [2, 0]);
}

#[test]
fn s_census() {
    let t = example1();
    let s1 = t.census_s(1).unwrap();
    assert_eq!(
        (s1.above, s1.below, s1.loops, s1.side),
        (2, 0, 2, LoopSide::Left)
    );
    let s2 = t.census_s(2).unwrap();
    assert_eq!(
        (s2.above, s2.below, s2.loops, s2.side),
        (1, 5, 1, LoopSide::Left)
    );

    let z = tau(2, 3, &[0; 4], &[0; 4], &[0], &[-1, 0]);
    let s = z.census_s(1).unwrap();
    assert_eq!((s.above, s.below, s.loops), (0, 0, 0));
}

#[test]
fn s_prime_census() {
    let c = example1().census_sprime(1).unwrap();
    assert_eq!((c.noncore_loops, c.core_loops, c.straight_cores), (1, 1, 0));
    assert_eq!((c.above, c.below), (2, 2));

    let c = example2().census_sprime(1).unwrap();
    assert_eq!((c.noncore_loops, c.core_loops, c.straight_cores), (0, 0, 1));
    assert_eq!((c.above, c.below), (1, 0));

    let t = tau(2, 2, &[0, 0], &[0, 0, 0], &[0], &[-3, 0]);
    let c = t.census_sprime(1).unwrap();
    assert_eq!(
        (
            c.above,
            c.below,
            c.noncore_loops,
            c.core_loops,
            c.straight_cores
        ),
        (0, 0, 0, 0, 0)
    );
    assert_eq!(c.nonprimitive.nonprimitive_two_sided, 1);
    assert!(c.nonprimitive.includes_core);
}

#[test]
fn end_census() {
    let e = example1().census_ends();
    assert_eq!(
        (e.delta_zero_loops, e.noncore_loops, e.core_loops),
        (1, 1, 1)
    );
    let e = example2().census_ends();
    assert_eq!(
        (e.delta_zero_loops, e.noncore_loops, e.core_loops),
        (3, 1, 0)
    );
    let e = tau(2, 2, &[0, 0], &[0, 0, 0], &[0], &[-1, 0]).census_ends();
    assert_eq!((e.noncore_loops, e.core_loops, e.excess_core), (0, 0, 0));
}

#[test]
fn validate_example1() {
    assert!(example1().validate().is_valid());
}

#[test]
fn validate_odd_beta() {
    let t = tau(2, 3, &[4, 2, 2, 6], &[3, 6, 8, 4], &[8], &[1, 1]);
    let report = t.validate();
    assert!(matches!(
        report.violations[0],
        Violation::OddBeta { index: 1, value: 3 }
    ));
    assert!(report.to_string().contains("P1"));
}

/// A boundary-parallel curve crosses each α once and each β, γ twice. Adding
/// it keeps every local condition and only the round trip notices.
#[test]
fn validate_boundary_parallel() {
    let t = tau(2, 3, &[5, 3, 3, 7], &[4, 8, 10, 6], &[10], &[1, 1]);
    let report = t.validate();
    assert_eq!(report.violations.len(), 1, "{report}");
    match &report.violations[0] {
        Violation::NotFixpoint { decoded: Some(d) } => assert_eq!(**d, example1()),
        v => panic!("{v}"),
    }

    // Every α +2, γ +4 breaks the S equalities before the fixpoint is reached.
    let t = tau(2, 3, &[6, 4, 4, 8], &[4, 8, 10, 6], &[12], &[1, 1]);
    assert!(t
        .validate()
        .violations
        .iter()
        .any(|v| matches!(v, Violation::SEquality { .. })));
}

#[test]
fn encode_examples() {
    assert_eq!(
        encode(&example1()).unwrap(),
        rho(2, 3, &[-1, 2], &[-2, -1, 2], &[0], &[1, 1])
    );
    assert_eq!(
        encode(&example2()).unwrap(),
        rho(2, 2, &[-1], &[2, 0], &[1], &[1, 0])
    );
}

#[test]
fn psi_examples() {
    assert_eq!(rho(2, 2, &[-1], &[2, 0], &[1], &[1, 0]).psi(1), 1);
    assert_eq!(rho(2, 3, &[-1, 2], &[-2, -1, 2], &[0], &[1, 1]).psi(1), 0);
}

#[test]
fn xy_examples() {
    assert_eq!(
        compute_xy(&rho(2, 2, &[-1], &[2, 0], &[1], &[1, 0])),
        (Some(6), Some(6))
    );
    assert_eq!(
        compute_xy(&rho(2, 3, &[-1, 2], &[-2, -1, 2], &[0], &[1, 1])),
        (Some(2), Some(-2))
    );
}

#[test]
fn decode_examples() {
    let (t, im) = decode(&rho(2, 2, &[-1], &[2, 0], &[1], &[1, 0])).unwrap();
    assert_eq!(t, example2());
    assert_eq!(im.r, 0);
    let (t, im) = decode(&rho(2, 3, &[-1, 2], &[-2, -1, 2], &[0], &[1, 1])).unwrap();
    assert_eq!(t, example1());
    assert_eq!(im.r, 0);
}

#[test]
fn decode_zero_rejected() {
    assert_eq!(
        decode(&rho(2, 2, &[0], &[0, 0], &[0], &[0, 0])).unwrap_err(),
        Error::ZeroTuple
    );
}

#[test]
fn r_count_examples() {
    assert_eq!(r_count(2, 2), 1);
    assert_eq!(r_count(0, 1), 1);
    assert_eq!(r_count(4, 1), 0);
}

#[test]
fn r_components_in_decode() {
    let (t, im) = decode(&rho(1, 3, &[0, 0], &[0, 0], &[], &[1])).unwrap();
    assert_eq!(im.r, 1);
    assert_eq!(t.beta(), [2, 2, 2]);
    assert_eq!(encode(&t).unwrap(), rho(1, 3, &[0, 0], &[0, 0], &[], &[1]));
}

#[test]
fn diagram_example1() {
    let d = build_diagram(&example1()).unwrap();
    assert_eq!(d.recount(), example1().census().unwrap());
    let sp = &d.recount().s_prime[0];
    assert_eq!(
        (sp.noncore_loops + sp.core_loops, sp.core_loops, sp.side),
        (2, 1, LoopSide::Right)
    );
}

#[test]
fn diagram_example2() {
    let d = build_diagram(&example2()).unwrap();
    let c = d.recount();
    assert_eq!(c, example2().census().unwrap());
    assert_eq!(c.ends.delta_zero_loops, 3);
    assert_eq!((c.s[0].loops, c.s[0].side), (2, LoopSide::Right));
    assert_eq!(c.s_prime[0].straight_cores, 1);
    assert_eq!(c.ends.noncore_loops, 1);
}

#[test]
fn diagram_lone_core() {
    let d = build_diagram(&tau(2, 2, &[0, 0], &[0, 0, 0], &[0], &[-1, 0])).unwrap();
    assert!(d.regions().all(|(_, p)| p.is_empty()));
    assert_eq!(d.extras(), [ExtraComponent::CoreCurve(1)]);
}

#[test]
fn trace_lone_core() {
    let comps =
        trace(&build_diagram(&tau(2, 2, &[0, 0], &[0, 0, 0], &[0], &[-1, 0])).unwrap()).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].total_crossings(), 1);
    assert_eq!(comps[0].sidedness, Sidedness::OneSided);
}

/// The τ given for "a curve around crosscap 1", all β = 2 and γ = 2, fails
/// the S' count; the two curves of that shape that do exist are below.
#[test]
fn trace_curves_around_crosscap() {
    let bad = tau(2, 2, &[2, 2], &[2, 2, 2], &[2], &[0, 0]);
    assert!(!bad.validate().is_valid());

    for t in [
        tau(2, 2, &[1, 1], &[0, 2, 0], &[2], &[0, 0]),
        tau(2, 2, &[1, 1], &[2, 2, 0], &[2], &[0, 0]),
    ] {
        assert!(t.validate().is_valid(), "{t}: {}", t.validate());
        let comps = trace(&build_diagram(&t).unwrap()).unwrap();
        assert_eq!(comps.len(), 1, "{t}");
        assert_eq!(comps[0].sidedness, Sidedness::TwoSided, "{t}");
    }
}

#[test]
fn trace_matches_oracle_on_examples() {
    let mut tracer = OracleTracer::new();
    for t in [example1(), example2()] {
        let want = component_multiset(&trace(&build_diagram(&t).unwrap()).unwrap());
        for seed in 0..20 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let got = tracer.trace(&t, &t.census().unwrap(), &mut rng).unwrap();
            assert_eq!(got.components, want, "{t}, seed {seed}");
        }
        assert_eq!(component_count(&t).unwrap(), want.len());
    }
}

#[test]
fn component_counts() {
    assert_eq!(
        component_count(&tau(2, 2, &[0, 0], &[0, 0, 0], &[0], &[-5, 0])).unwrap(),
        3
    );
    assert_eq!(
        component_count(&tau(2, 2, &[0, 0], &[0, 0, 0], &[0], &[-1, -1])).unwrap(),
        2
    );
}
