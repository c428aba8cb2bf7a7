use fricke7_core::constants::PaperPolynomials;
use fricke7_core::exactalg::{verify_identity, REGISTRY};

#[test]
fn every_registered_identity_holds() {
    let pp = PaperPolynomials::new();
    for case in REGISTRY {
        let start = std::time::Instant::now();
        let out = verify_identity(case.id, &pp).unwrap();
        eprintln!("{:<16} {:>8.2?} {}", case.id, start.elapsed(), out.verdict.label());
        assert!(out.verdict.is_pass(), "{}: {:?}", case.id, out.verdict);
    }
}
