use std::collections::BTreeMap;

use egcert::arith::{primes_below, CoeffRing, IntegerCoeffs, PrimeField};
use egcert::cert::{
    conjectured_regularity, data, degree_formula, maxdeg_lower_bound, q_off_y, sections, toric_degree, y_points,
    Variant,
};
use egcert::groebner::{kernel_of_map, minimal_generator_degrees, partial_elimination, GbConfig, KernelMethod};
use egcert::linalg::{rank_dense_exact, IntMatrix};
use egcert::poly::{monomials_of_degree, polys_from_text, section_map_from_text, MonomialOrder, SectionMap};
use num_bigint::BigInt;

fn primes() -> Vec<u64> {
    primes_below(1 << 31, 2)
}

fn map(text: &str) -> SectionMap<IntegerCoeffs> {
    section_map_from_text(text, IntegerCoeffs).unwrap()
}

fn mingens(text: &str) -> (BTreeMap<u32, usize>, Option<u32>) {
    let ker = kernel_of_map(&map(text), KernelMethod::Block, &GbConfig::default()).unwrap();
    let g = minimal_generator_degrees(&ker, &primes()).unwrap();
    assert!(g.primes_agree);
    (g.degrees, g.maxdeg)
}

#[test]
fn twisted_cubic_quadrics_span_the_degree_two_nullspace() {
    let m = map("ring u v; map x0 = u^3; x1 = u^2*v; x2 = u*v^2; x3 = v^3;");
    let ker = kernel_of_map(&m, KernelMethod::Block, &GbConfig::default()).unwrap();
    let tgt = ker.ring();
    assert_eq!(ker.len(), 3);
    assert!(ker.polys().iter().all(|g| g.total_degree() == Some(2)));

    // oracle: images of the ten quadratic monomials as vectors over the
    // seven sextics in u, v; the nullspace has dimension 10 - rank
    let quads = monomials_of_degree(4, 2);
    let sextics = monomials_of_degree(2, 6);
    let images: Vec<Vec<BigInt>> = quads
        .iter()
        .map(|q| {
            let img = m.image_of_monomial(q);
            sextics.iter().map(|s| m.source().coefficient(&img, s)).collect()
        })
        .collect();
    let rank = rank_dense_exact(&IntMatrix::from_rows(images.clone(), sextics.len()).unwrap());
    assert_eq!(quads.len() - rank, 3);

    // each quadric is a nullspace vector, and the three are independent
    let coords: Vec<Vec<BigInt>> = ker
        .polys()
        .iter()
        .map(|g| quads.iter().map(|q| tgt.coefficient(g, q)).collect())
        .collect();
    for c in &coords {
        for (j, _) in sextics.iter().enumerate() {
            let s: BigInt = c.iter().zip(&images).map(|(a, row)| a * &row[j]).sum();
            assert_eq!(s, BigInt::from(0));
        }
    }
    assert_eq!(rank_dense_exact(&IntMatrix::from_rows(coords, quads.len()).unwrap()), 3);
}

#[test]
fn reg11_surface_generator_degrees() {
    let (degrees, maxdeg) = mingens(data::REG11_SURFACE);
    assert_eq!(degrees, BTreeMap::from([(5, 1), (6, 13), (7, 4), (8, 2), (11, 1)]));
    assert_eq!(maxdeg, Some(11));
}

#[test]
fn reg11_threefold_generator_degrees() {
    let (degrees, maxdeg) = mingens(data::REG11_THREEFOLD);
    assert_eq!(degrees, BTreeMap::from([(5, 1), (6, 8), (7, 18), (8, 3), (11, 1)]));
    assert_eq!(maxdeg, Some(11));
}

#[test]
fn kernels_agree_across_fields_and_orders() {
    let m = map(data::REG11_SURFACE);
    let over_z = kernel_of_map(&m, KernelMethod::Block, &GbConfig::default()).unwrap();
    let fp = PrimeField::new(32003).unwrap();
    let over_p = kernel_of_map(
        &m.map_coeffs(fp, |c| fp.from_bigint(c)),
        KernelMethod::Block,
        &GbConfig::default(),
    )
    .unwrap();
    assert_eq!(over_z.leading_monomials(), over_p.leading_monomials());
    let lex = kernel_of_map(&map(data::R1_THREEFOLD), KernelMethod::Lex, &GbConfig::default()).unwrap();
    let block = kernel_of_map(&map(data::R1_THREEFOLD), KernelMethod::Block, &GbConfig::default()).unwrap();
    assert!(lex.same_ideal(&block));
}

#[test]
fn degree_34_generator_vanishes_on_x6() {
    let x6 = sections(6, Variant::X).unwrap();
    let (ring, polys) = polys_from_text(data::X6_GENERATOR_34, IntegerCoeffs, MonomialOrder::DegRevLex).unwrap();
    assert_eq!(polys.len(), 1);
    let f = &polys[0];
    assert_eq!(f.total_degree(), Some(34));
    assert_eq!(f.len(), 31);
    let lead = egcert::poly::Monomial::new(&[32, 2, 0, 0, 0]);
    assert_eq!(ring.coefficient(f, &lead), BigInt::from(7));
    assert!(x6.substitute(&ring, f).unwrap().is_zero());
}

#[test]
fn y6_projection_filtration() {
    let m = sections(6, Variant::YLambda).unwrap();
    let ker = kernel_of_map(&m, KernelMethod::Block, &GbConfig::default()).unwrap();
    let x5 = 5;
    let pei = partial_elimination(ker.ring(), ker.polys(), x5, &GbConfig::default()).unwrap();
    assert_eq!(pei.stabilization, 3);
    assert!(pei.level(3).is_unit());
    assert!(!pei.level(2).is_unit());

    // K_0 is the ideal of X_6: it holds the degree-34 generator, and every
    // generator vanishes on the X_6 sections
    let k0 = pei.level(0);
    let (_, polys) = polys_from_text(data::X6_GENERATOR_34, IntegerCoeffs, MonomialOrder::DegRevLex).unwrap();
    let g34 = k0.ring().from_terms(polys[0].terms().to_vec());
    assert!(k0.contains(&g34));
    let x6 = sections(6, Variant::X).unwrap();
    assert!(k0
        .polys()
        .iter()
        .all(|g| x6.substitute(k0.ring(), g).unwrap().is_zero()));
    assert_eq!(k0.ring().order(), MonomialOrder::DegRevLex);
}

#[test]
fn degree_table() {
    let table = [
        (6, 33),
        (7, 45),
        (8, 59),
        (9, 75),
        (10, 93),
        (21, 423),
        (22, 465),
        (23, 509),
        (24, 555),
        (25, 603),
    ];
    for m in 6..=25u32 {
        let d = toric_degree(&y_points(m).unwrap()).unwrap();
        assert_eq!(d.lattice_index, 1);
        assert_eq!(d.degree, Some(degree_formula(m as u64)), "m = {m}");
    }
    for (m, deg) in table {
        assert_eq!(toric_degree(&y_points(m).unwrap()).unwrap().degree, Some(deg));
    }
}

#[test]
fn regularity_tables() {
    let first = [
        (6, 34),
        (7, 51),
        (8, 70),
        (9, 91),
        (10, 117),
        (21, 589),
        (22, 651),
        (23, 715),
        (24, 781),
        (25, 852),
    ];
    for (m, r) in first {
        assert_eq!(conjectured_regularity(m).value, r, "m = {m}");
    }
    let second = [
        (30, 873, 1246),
        (36, 1263, 1819),
        (42, 1725, 2500),
        (48, 2259, 3289),
        (54, 2865, 4186),
        (138, 18909, 28084),
        (144, 20595, 30601),
        (150, 22353, 33226),
        (156, 24183, 35959),
        (162, 26085, 38800),
    ];
    for (m, deg, lb) in second {
        assert_eq!((degree_formula(m), maxdeg_lower_bound(m)), (deg, lb), "m = {m}");
    }
}

#[test]
fn projection_centre_is_off_y() {
    for m in 6..=25 {
        let q = q_off_y(m).unwrap();
        assert!(q.in_ideal && q.q_off_y, "m = {m}");
        assert_eq!(q.value_at_q, -1);
        // the relation also vanishes at the image of [1, 1, 1]
        let y = sections(m, Variant::Y).unwrap();
        let ring = y.target_ring(MonomialOrder::DegRevLex);
        let rel = egcert::poly::parse_poly(&ring, &q.relation).unwrap();
        let ones = vec![BigInt::from(1); 3];
        let point: Vec<BigInt> = y.sections().iter().map(|s| y.source().evaluate(s, &ones)).collect();
        assert_eq!(ring.evaluate(&rel, &point), BigInt::from(0));
    }
}

#[test]
fn x6_has_a_minimal_generator_of_degree_34() {
    // maxdeg X_6 = 34, one more than deg X_6
    let m = sections(6, Variant::YLambda).unwrap();
    let ker = kernel_of_map(&m, KernelMethod::Block, &GbConfig::default()).unwrap();
    let pei = partial_elimination(ker.ring(), ker.polys(), 5, &GbConfig::default()).unwrap();
    let g = minimal_generator_degrees(pei.level(0), &primes()).unwrap();
    assert!(g.primes_agree);
    assert_eq!(g.maxdeg, Some(34));
}
