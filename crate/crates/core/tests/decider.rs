//! Decider properties over random inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use omega_core::admissibility::{check_sample, decide_admissible, decide_with, propagate, DeciderMode, Settings, Verdict};
use omega_core::algebra::verify_witness;
use omega_core::catalog;
use omega_core::groebner::is_groebner_basis;
use omega_core::{FieldElement, FieldKind};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = FieldElement> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| FieldElement::fraction(FieldKind::Rational, p, q).unwrap())
}

fn triple() -> impl Strategy<Value = [FieldElement; 3]> {
    [rational(), rational(), rational()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn lsa_family_commutators_are_admissible(a in triple(), second in any::<bool>()) {
        let refs = [&a[0], &a[1], &a[2]];
        let lsa = if second { catalog::lsa3_2(refs) } else { catalog::lsa3_1(refs) }.unwrap();
        prop_assert!(lsa.check().unwrap().passed());
        prop_assert!(lsa.check_module_identity().passed());
        let lie = lsa.commutator_algebra().unwrap();
        prop_assert!(lie.check().unwrap().passed());
        prop_assert!(!lie.is_perfect());
        let r = decide_admissible(&lie, 6).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Admissible);
        prop_assert!(verify_witness(&lie, r.witness.as_ref().expect("witness")));
    }
}

#[test]
fn stage_dimensions_never_increase() {
    for (name, l) in catalog::theorem_instances() {
        for mode in [DeciderMode::Full, DeciderMode::ModuleOnly] {
            let r = decide_with(&l, Settings { mode, ..Settings::default() }).unwrap();
            let dims: Vec<Option<usize>> = r.certificate.iter().map(|s| s.dim).collect();
            for w in dims.windows(2) {
                let ok = match (w[0], w[1]) {
                    (_, None) => true,
                    (None, Some(_)) => false,
                    (Some(a), Some(b)) => b <= a,
                };
                assert!(ok, "{name} {mode}: {dims:?}");
            }
        }
    }
}

#[test]
fn full_mode_space_lies_in_module_only_space() {
    for (name, l) in catalog::theorem_instances() {
        let full = propagate(&l, DeciderMode::Full).unwrap();
        let module = propagate(&l, DeciderMode::ModuleOnly).unwrap();
        assert!(full.space.is_subset_of(&module.space), "{name}");
    }
}

#[test]
fn generic_verdicts_survive_specialization() {
    let samples = [(2, 1), (-2, 1), (1, 2)].map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)));
    for (name, l) in catalog::theorem_instances() {
        if l.kind() != FieldKind::RationalFunction {
            continue;
        }
        let generic = decide_admissible(&l, 6).unwrap();
        for at in &samples {
            let outcome = check_sample(&l, &generic, at);
            assert!(!outcome.is_mismatch(), "{name}: {outcome:?}");
        }
    }
}

#[test]
fn groebner_bases_from_theorem_runs_pass_the_criterion() {
    for (name, l) in catalog::theorem_instances() {
        let r = decide_admissible(&l, 6).unwrap();
        if let Some(basis) = r.groebner.as_ref().and_then(|g| g.polynomials.as_ref()) {
            assert!(is_groebner_basis(basis), "{name}");
        }
    }
}
