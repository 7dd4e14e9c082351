use semireg::buchberger::{buchberger, buchberger_h_seeded, EngineOptions};
use semireg::f5::{f5_gb, macaulay_gb};
use semireg::verify::{verify_golden, verify_sequence, worked_example, CheckSet};

#[test]
fn golden_quantities_recomputed() {
    let ex = worked_example().unwrap();
    let report = verify_golden(&ex).unwrap();
    for c in &report.checks {
        assert!(c.pass, "{}: {}", c.name, c.detail);
    }
    assert!(report.pass);
}

#[test]
fn engines_agree_on_the_example() {
    let ex = worked_example().unwrap();
    let f = ex.system().unwrap();
    let opts = EngineOptions::default();
    for seq in [f.top().unwrap(), f.homogenize().unwrap(), f.clone()] {
        let a = buchberger(&seq, &opts).unwrap();
        let b = f5_gb(&seq, &opts).unwrap();
        assert_eq!(a.elements, b.elements);
    }
    let (g, sd) = macaulay_gb(&f, 8).unwrap();
    assert_eq!(g.elements, ex.g().unwrap());
    assert_eq!(sd, macaulay_gb(&f.homogenize().unwrap(), 8).unwrap().1);
}

#[test]
fn example_report_values() {
    let ex = worked_example().unwrap();
    let f = ex.system().unwrap();
    let r = verify_sequence(&f, CheckSet::ALL, None).unwrap();
    assert_eq!(r.d, 3);
    assert_eq!(r.hs_top, vec![1, 3, 2]);
    let b = r.bounds.unwrap();
    assert_eq!(b.macaulay_bound, 5);
    assert!(b.max_gb_deg_affine <= 3);
    assert!(b.sd_hsd_seeded <= 4);
    let seeded = buchberger_h_seeded(&f, 3, &EngineOptions::default()).unwrap();
    assert_eq!(seeded.gb.elements, ex.g().unwrap());
}
