use std::time::Instant;

use fricke7_core::cmeval::{psi7_mod_41, verify_pd_factorization, verify_pd_root, verify_psi7_root};
use fricke7_core::qseries::{run_all_series, verify_series_identity, DEFAULT_PREC};
use fricke7_core::Verdict;

#[test]
fn series_identities_at_default_precision() {
    let t = Instant::now();
    for o in run_all_series(DEFAULT_PREC).unwrap() {
        assert_eq!(o.verdict, Verdict::Pass, "{}: {}", o.id, o.statement);
    }
    eprintln!("series registry at prec {DEFAULT_PREC}: {:?}", t.elapsed());
}

#[test]
fn j_series_agree_through_fifty_terms() {
    for id in ["J_TAU", "J_7TAU"] {
        let o = verify_series_identity(id, 50).unwrap();
        assert_eq!(o.verdict, Verdict::Pass, "{id}");
        assert!(o.checked_to >= 49 - 7, "{id} compared only to {}", o.checked_to);
    }
}

#[test]
fn cm_values_are_roots() {
    for d in [20, 52, 68, 83] {
        let c = verify_pd_root(d, 300).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        // 2^-100 is already below 1e-30.
        assert!(c.residual_log2 <= -100, "d = {d}: 2^{}", c.residual_log2);
    }
    let c = verify_psi7_root(300).unwrap();
    assert_eq!(c.verdict, Verdict::Pass);
    assert!(c.residual_log2 <= -100);
}

#[test]
fn printed_factorizations() {
    for (d, l) in [(20, 5), (52, 13), (68, 17), (83, 83)] {
        let c = verify_pd_factorization(d, l).unwrap();
        assert!(c.matches_table, "P_{d} mod {l}");
        assert_eq!(c.pattern, Verdict::Pass, "P_{d} mod {l}");
    }
    assert_eq!(psi7_mod_41().unwrap().1, Verdict::Pass);
}
