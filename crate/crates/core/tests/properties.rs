use proptest::prelude::*;

use semireg::buchberger::{
    buchberger, buchberger_h_seeded, buchberger_hilbert_driven, dehomogenize_gb, is_groebner,
    reduce_basis, EngineOptions,
};
use semireg::f5::{f5_gb, macaulay_gb};
use semireg::koszul::{check_d_regular, dimension_accounting, RegularityMethod};
use semireg::series::{
    cumulative_sums, hf_from_staircase, homogenized_prefix, rational_series, semiregular_dreg,
};
use semireg::verify::{random_affine_sequence, verify_sequence, CheckSet, InstanceSpec};
use semireg::PolySequence;

fn small_system() -> impl Strategy<Value = PolySequence> {
    (
        prop::sample::select(vec![7u32, 31, 73]),
        1usize..=3,
        1usize..=4,
        prop::collection::vec(1u32..=2, 4),
        any::<u64>(),
    )
        .prop_map(|(p, n, m, degrees, seed)| {
            let spec = InstanceSpec {
                p,
                n,
                m,
                degrees: degrees[..m].to_vec(),
                seed,
                require_semiregular: false,
            };
            random_affine_sequence(&spec).unwrap()
        })
}

fn certified_system() -> impl Strategy<Value = PolySequence> {
    (
        prop::sample::select(vec![31u32, 73, 65521]),
        2usize..=3,
        0usize..=2,
        any::<u64>(),
    )
        .prop_map(|(p, n, extra, seed)| {
            let m = n + extra;
            let degrees = (0..m)
                .map(|k| if k == 0 && seed % 3 == 0 { 3 } else { 2 })
                .collect();
            random_affine_sequence(&InstanceSpec {
                p,
                n,
                m,
                degrees,
                seed,
                require_semiregular: true,
            })
            .unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn homogenized_prefix_is_cumulative(n in 1usize..=6, extra in 0usize..=3, degrees in prop::collection::vec(1u32..=4, 9)) {
        let degrees = &degrees[..n + extra];
        let d = semiregular_dreg(n, degrees).unwrap().finite().unwrap() as usize;
        let prefix = homogenized_prefix(n, degrees).unwrap();
        let top = rational_series(n, degrees, d);
        prop_assert_eq!(prefix.coeffs, cumulative_sums(&top[..d]));
    }

    #[test]
    fn engines_return_the_same_reduced_basis(f in small_system()) {
        let opts = EngineOptions::default();
        let a = buchberger(&f, &opts).unwrap();
        let b = f5_gb(&f, &opts).unwrap();
        prop_assert_eq!(&a.elements, &b.elements);
        if let Ok((c, _)) = macaulay_gb(&f, 10) {
            prop_assert_eq!(&a.elements, &c.elements);
        }
        let plain = EngineOptions { coprime_criterion: false, chain_criterion: false, ..opts };
        prop_assert_eq!(&a.elements, &buchberger(&f, &plain).unwrap().elements);
    }

    #[test]
    fn bases_generate_the_input_ideal(f in small_system()) {
        let g = buchberger(&f, &EngineOptions::default()).unwrap();
        prop_assert!(is_groebner(&g.elements).unwrap());
        for fi in f.iter() {
            prop_assert!(fi.reduce(&g.elements).is_zero());
        }
        prop_assert_eq!(reduce_basis(&g.elements), g.elements.clone());
    }

    #[test]
    fn homogenize_then_dehomogenize(f in small_system()) {
        let opts = EngineOptions::default();
        let g_hom = buchberger(&f.homogenize().unwrap(), &opts).unwrap();
        prop_assert_eq!(dehomogenize_gb(&g_hom).elements, buchberger(&f, &opts).unwrap().elements);
    }

    #[test]
    fn hilbert_driven_matches_plain(f in small_system()) {
        let fh = f.homogenize().unwrap();
        let opts = EngineOptions::default();
        let g = buchberger(&fh, &opts).unwrap();
        let lms = g.lms();
        let n = fh.ring().arity();
        let hf = |d: u32| Some(hf_from_staircase(&lms, n, d));
        let driven = buchberger_hilbert_driven(&fh, &hf, &opts).unwrap();
        prop_assert_eq!(driven.elements, g.elements);
    }

    #[test]
    fn regularity_methods_agree(f in small_system(), d in 0u32..=5) {
        let top = f.top().unwrap();
        let direct = check_d_regular(&top, d, RegularityMethod::Direct).unwrap();
        prop_assert_eq!(direct, check_d_regular(&top, d, RegularityMethod::Series).unwrap());
        prop_assert_eq!(direct, check_d_regular(&top, d, RegularityMethod::Homology).unwrap());
    }

    #[test]
    fn dimension_identity(f in small_system(), t in 0u32..=5) {
        let top = f.top().unwrap();
        for i in 1..=top.len() {
            let acc = dimension_accounting(&top, i, t).unwrap();
            prop_assert!(acc.holds(), "{:?}", acc);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn certified_instances_satisfy_every_check(f in certified_system()) {
        let report = verify_sequence(&f, CheckSet::ALL, None).unwrap();
        prop_assert!(report.pass, "{}", serde_json::to_string(&report).unwrap());
    }

    #[test]
    fn h_seeded_run_reaches_the_same_basis(f in certified_system()) {
        let opts = EngineOptions::default();
        let d = semiregular_dreg(f.ring().nvars, &f.degrees()).unwrap().finite().unwrap();
        let run = buchberger_h_seeded(&f, d, &opts).unwrap();
        prop_assert_eq!(run.gb.elements, buchberger(&f, &opts).unwrap().elements);
        // generators above D join the seed unchanged
        prop_assert!(run.seed.iter().all(|h| h.degree() <= d || f.polys().contains(h)));
    }
}
