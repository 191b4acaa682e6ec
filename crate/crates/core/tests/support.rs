use egcert::cert::{
    b, enumerate_support_monomials, peel_w_family, power_family_independent, power_family_matrix, PowerFamily,
};
use egcert::poly::{family_monomial, Context};

fn quad(k: u64, a: i64, b: i64, c: i64) -> u32 {
    let k = k as i64;
    (a * k * k + b * k + c) as u32
}

/// `(x1, x3, x4, x2 offset, u_max)` of each family, in the enumeration's order.
fn families(k: u64, d: u32, residue: u32) -> Vec<(u32, u32, u32, u32, u32)> {
    let fams = enumerate_support_monomials(k, d, quad(k, 0, 12, -2), residue).unwrap();
    assert!(fams.iter().all(|f| f.contiguous));
    fams.iter().map(|f| (f.x1, f.x3, f.x4, f.x2_offset, f.u_max)).collect()
}

#[test]
fn l_context_has_exactly_four_types() {
    for k in 1..=2 {
        let d = quad(k, 54, -21, 1);
        let k6 = 6 * k as u32;
        let expected = vec![
            (0, 0, 2 * k6 - 2, 0, quad(k, 18, -11, 1)),
            (0, 1, k6 - 2, 2, quad(k, 18, -9, 0)),
            (1, 0, k6 - 1, 0, quad(k, 18, -9, 0)),
            (2, 0, 0, 0, quad(k, 18, -7, -1)),
        ];
        assert_eq!(families(k, d, 2), expected, "k = {k}");
    }
}

#[test]
fn w_context_has_exactly_four_types() {
    for k in 1..=2 {
        let d = quad(k, 54, -21, 0);
        let k6 = 6 * k as u32;
        let expected = vec![
            (0, 0, 2 * k6 - 2, 0, quad(k, 18, -11, 0)),
            (0, 1, k6 - 2, 2, quad(k, 18, -9, -1)),
            (1, 0, k6 - 1, 0, quad(k, 18, -9, 0)),
            (2, 0, 0, 0, quad(k, 18, -7, -1)),
        ];
        assert_eq!(families(k, d, 1), expected, "k = {k}");
    }
}

#[test]
fn enumerated_types_are_the_w_families() {
    // the family monomials at u = 0 carry the same x1, x3, x4 and offset
    let k = 1;
    let fams = enumerate_support_monomials(k, quad(k, 54, -21, 0), 10, 1).unwrap();
    for (i, f) in [4, 2, 3, 1].into_iter().zip(&fams) {
        let a = family_monomial(k, Context::W, i, 0).unwrap();
        assert_eq!(
            [a[1], a[2], a[3], a[4]],
            [f.x1 as u64, f.x2_offset as u64, f.x3 as u64, f.x4 as u64]
        );
    }
}

#[test]
fn off_target_enumerations() {
    // only x4 carries a single y0, so target 1 leaves one family
    let fams = enumerate_support_monomials(1, 34, 1, 2).unwrap();
    assert_eq!(fams.len(), 1);
    assert_eq!((fams[0].x1, fams[0].x3, fams[0].x4), (0, 0, 1));
    // six y0 per degree at most
    assert!(enumerate_support_monomials(1, 5, 31, 0).unwrap().is_empty());
    assert!(enumerate_support_monomials(0, 5, 1, 0).is_err());
}

#[test]
fn peeling_leaves_the_w_blocks() {
    for k in 1..=4 {
        let peeled = peel_w_family(k).unwrap();
        for f in &peeled {
            let hi = b(k, f.family) - 1;
            assert_eq!(f.range, Some(0..=hi), "k = {k}, family {}", f.family);
        }
        let total: usize = peeled.iter().map(|f| f.survivors.len()).sum();
        assert_eq!(total as u64, 54 * k * k - 27 * k);
    }
}

#[test]
fn power_families_are_independent() {
    for k in 1..=2 {
        for t in 0..=60 {
            for v in [PowerFamily::A, PowerFamily::B] {
                assert!(power_family_independent(k, t, v).unwrap(), "k = {k}, t = {t}, {v:?}");
            }
        }
    }
    let m = power_family_matrix(1, 60, PowerFamily::A).unwrap();
    assert_eq!(m.rows(), 21);
}
