use egcert::arith::primes_below;
use egcert::cert::{hilbert_dim, hilbert_poly_fit, sections, Variant};

#[test]
fn x6_dimensions_below_the_regularity() {
    let map = sections(6, Variant::X).unwrap();
    let primes = primes_below(1 << 31, 2);
    for (d, dim) in [(31, 14509), (32, 15514)] {
        let h = hilbert_dim(&map, d, &primes).unwrap();
        assert_eq!(h.dim, dim);
        assert!(h.primes_agree);
    }
}

#[test]
fn x6_hilbert_polynomial() {
    let map = sections(6, Variant::X).unwrap();
    let primes = primes_below(1 << 31, 2);
    let fit = hilbert_poly_fit(&map, 34, 3, &[31, 32, 33], &primes).unwrap();
    assert!(fit.consistent);
    assert_eq!(fit.degree, "33");
    let h1: Vec<(&str, &str)> = fit
        .h1
        .iter()
        .map(|e| (e.hilbert_polynomial.as_str(), e.h1.as_str()))
        .collect();
    assert_eq!(h1, [("14511", "2"), ("15515", "1"), ("16552", "0")]);
}
