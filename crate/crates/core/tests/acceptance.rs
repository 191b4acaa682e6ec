//! One line per acceptance criterion: PASS, FAIL or INCOMPLETE, with the
//! wall time against the criterion's limit. Exits nonzero on any FAIL.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use egcert::arith::{binom, binom_mod_p, primes_below, IntegerCoeffs};
use egcert::cert::{
    b, build_matrix, certify, data, degree_formula, enumerate_support_monomials, fixture_diff, hilbert_dim,
    hilbert_poly_fit, peel_w_family, power_family_independent, sections, toric_degree, verify_column_certificates,
    w_block_from_n_block, y_points, BuildMode, CertError, CertMatrixSpec, CertifyOptions, PowerFamily, Variant, Which,
};
use egcert::groebner::{
    kernel_of_map, minimal_generator_degrees, partial_elimination, Budget, GbConfig, GroebnerError, KernelMethod,
};
use egcert::linalg::{rank_dense_exact, IntMatrix, InvertibilityMethod};
use egcert::poly::{monomials_of_degree, polys_from_text, section_map_from_text, Monomial, MonomialOrder};
use num_bigint::BigInt;

mod common;

enum Outcome {
    Pass(String),
    Fail(String),
    Incomplete(String),
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c1_fixtures() -> Check {
    let mut compared = 0;
    for which in [Which::L, Which::W] {
        let d = fixture_diff(which).map_err(err)?;
        ensure(d.is_empty(), format!("{which}: {} mismatches", d.mismatches.len()))?;
        compared += d.entries_compared;
    }
    ensure(compared == 900 + 729, format!("{compared} entries compared"))?;
    Ok(format!("{compared} entries, empty diff"))
}

fn c2_certify_six() -> Check {
    let r = certify(6, &CertifyOptions::default()).map_err(err)?;
    ensure(
        r.degree == 33 && r.maxdeg_lower_bound == Some(34),
        "wrong degree or bound",
    )?;
    let l = r.l_invertible.ok_or("no L verdict")?;
    let w = r.w_invertible.ok_or("no W verdict")?;
    ensure(l.verdict && w.verdict && r.eg_violated, "not certified")?;
    Ok(format!(
        "degree 33, maxdeg >= 34, L via {:?}, W via {:?}",
        l.method, w.method
    ))
}

fn c3_generator() -> Check {
    let (ring, polys) = polys_from_text(data::X6_GENERATOR_34, IntegerCoeffs, MonomialOrder::DegRevLex).map_err(err)?;
    let f = polys.first().ok_or("no polynomial")?;
    let lead = ring.coefficient(f, &Monomial::new(&[32, 2, 0, 0, 0]));
    ensure(
        lead == BigInt::from(7) && f.total_degree() == Some(34),
        "unexpected fixture",
    )?;
    let img = sections(6, Variant::X)
        .map_err(err)?
        .substitute(&ring, f)
        .map_err(err)?;
    ensure(img.is_zero(), format!("image has {} terms", img.len()))?;
    Ok(format!("{} terms map to 0", f.len()))
}

fn c4_columns() -> Check {
    let mut done = Vec::new();
    for (which, targets) in [(Which::L, 25..=30), (Which::W, 23..=27)] {
        let c = verify_column_certificates(which).map_err(err)?;
        ensure(
            c.certificates_failed.is_empty(),
            format!("{which}: failed {:?}", c.certificates_failed),
        )?;
        ensure(
            c.certificates_ok == targets.collect::<Vec<_>>(),
            format!("{which}: targets {:?}", c.certificates_ok),
        )?;
        ensure(
            c.staircase_ok() && c.invertible,
            format!("{which}: staircase does not close"),
        )?;
        done.push(format!("{which} {}", c.certificates_ok.len()));
    }
    Ok(format!("{} certificates over F3", done.join(", ")))
}

fn c5_scaling() -> Check {
    for k in 1..=5u64 {
        let r = certify(6 * k, &CertifyOptions::default()).map_err(err)?;
        ensure(r.eg_violated, format!("m = {} not certified", 6 * k))?;
        for c in [r.l_invertible.as_ref(), r.w_invertible.as_ref()].into_iter().flatten() {
            ensure(
                c.method == InvertibilityMethod::ModularDeterminant,
                "not via modular determinant",
            )?;
        }
        if k == 5 {
            ensure(r.maxdeg_lower_bound == Some(1246) && r.degree == 873, "m = 30 values")?;
        }
    }
    Ok("k = 1..5 certified, m = 30: degree 873, maxdeg >= 1246".into())
}

fn c6_degrees() -> Check {
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
        let d = toric_degree(&y_points(m).map_err(err)?).map_err(err)?;
        ensure(d.lattice_index == 1, format!("m = {m}: index {}", d.lattice_index))?;
        ensure(
            d.degree == Some(degree_formula(m as u64)),
            format!("m = {m}: {:?}", d.degree),
        )?;
    }
    for (m, deg) in table {
        ensure(degree_formula(m) == deg, format!("m = {m}"))?;
    }
    Ok("m = 6..25, index 1".into())
}

fn c7_hilbert() -> Check {
    let map = sections(6, Variant::X).map_err(err)?;
    let primes = primes_below(1 << 31, 2);
    for (d, want) in [(31, 14509), (32, 15514)] {
        let h = hilbert_dim(&map, d, &primes).map_err(err)?;
        ensure(
            h.dim == want && h.primes_agree,
            format!("d = {d}: {} ({:?})", h.dim, h.ranks),
        )?;
    }
    let fit = hilbert_poly_fit(&map, 34, 3, &[31, 32], &primes).map_err(err)?;
    ensure(fit.consistent && fit.degree == "33", format!("degree {}", fit.degree))?;
    let h1: Vec<(&str, &str)> = fit
        .h1
        .iter()
        .map(|e| (e.hilbert_polynomial.as_str(), e.h1.as_str()))
        .collect();
    ensure(h1 == [("14511", "2"), ("15515", "1")], format!("{h1:?}"))?;
    Ok("14509, 15514; P(31) = 14511, h1 = 2, 1; degree 33".into())
}

fn c8_kernels() -> Check {
    let cubic = section_map_from_text(
        "ring u v; map x0 = u^3; x1 = u^2*v; x2 = u*v^2; x3 = v^3;",
        IntegerCoeffs,
    )
    .map_err(err)?;
    let ker = kernel_of_map(&cubic, KernelMethod::Block, &GbConfig::default()).map_err(err)?;
    let quads = monomials_of_degree(4, 2);
    let sextics = monomials_of_degree(2, 6);
    let images: Vec<Vec<BigInt>> = quads
        .iter()
        .map(|q| {
            let img = cubic.image_of_monomial(q);
            sextics.iter().map(|s| cubic.source().coefficient(&img, s)).collect()
        })
        .collect();
    let null_dim = quads.len() - rank_dense_exact(&IntMatrix::from_rows(images.clone(), sextics.len()).map_err(err)?);
    let coords: Vec<Vec<BigInt>> = ker
        .polys()
        .iter()
        .map(|g| quads.iter().map(|q| ker.ring().coefficient(g, q)).collect())
        .collect();
    let in_null = coords.iter().all(|c| {
        (0..sextics.len()).all(|j| c.iter().zip(&images).map(|(a, row)| a * &row[j]).sum::<BigInt>() == BigInt::from(0))
    });
    let independent = rank_dense_exact(&IntMatrix::from_rows(coords, quads.len()).map_err(err)?) == 3;
    ensure(
        ker.len() == 3 && null_dim == 3 && in_null && independent,
        "twisted cubic kernel",
    )?;

    let surface = section_map_from_text(data::REG11_SURFACE, IntegerCoeffs).map_err(err)?;
    let ker = kernel_of_map(&surface, KernelMethod::Block, &GbConfig::default()).map_err(err)?;
    let g = minimal_generator_degrees(&ker, &primes_below(1 << 31, 2)).map_err(err)?;
    let want = BTreeMap::from([(5, 1), (6, 13), (7, 4), (8, 2), (11, 1)]);
    ensure(
        g.degrees == want && g.maxdeg == Some(11),
        format!("reg-11 surface: {:?}", g.degrees),
    )?;
    Ok(format!("twisted cubic 3 quadrics; reg-11 surface {:?}", g.degrees))
}

fn suite_modes() -> Result<(), String> {
    for k in 1..=3 {
        for which in Which::ALL {
            let spec = |mode| {
                CertMatrixSpec::new(k, which, mode)
                    .and_then(|s| build_matrix(&s))
                    .map_err(err)
            };
            ensure(
                spec(BuildMode::ClosedForm)? == spec(BuildMode::Expansion)?,
                format!("k = {k}, {which}"),
            )?;
        }
    }
    Ok(())
}

fn suite_slicing() -> Result<(), String> {
    for k in 1..=3 {
        let build = |w| {
            CertMatrixSpec::new(k, w, BuildMode::Expansion)
                .and_then(|s| build_matrix(&s))
                .map_err(err)
        };
        let mut blocks = Vec::new();
        for w in [Which::N1, Which::N2, Which::N3, Which::N4] {
            blocks.push(w_block_from_n_block(&build(w)?));
        }
        ensure(
            IntMatrix::vstack(&blocks).map_err(err)? == build(Which::W)?,
            format!("k = {k}"),
        )?;
    }
    Ok(())
}

fn suite_peeling() -> Result<(), String> {
    for k in 1..=4 {
        for f in peel_w_family(k).map_err(err)? {
            ensure(
                f.range == Some(0..=b(k, f.family) - 1),
                format!("k = {k}, family {}", f.family),
            )?;
        }
    }
    Ok(())
}

fn suite_enumeration() -> Result<(), String> {
    // (x1, x3, x4, x2 offset, u_max) at k = 1
    let l = vec![(0, 0, 10, 0, 8), (0, 1, 4, 2, 9), (1, 0, 5, 0, 9), (2, 0, 0, 0, 10)];
    let w = vec![(0, 0, 10, 0, 7), (0, 1, 4, 2, 8), (1, 0, 5, 0, 9), (2, 0, 0, 0, 10)];
    for (d, residue, want) in [(34, 2, l), (33, 1, w)] {
        let got: Vec<_> = enumerate_support_monomials(1, d, 10, residue)
            .map_err(err)?
            .iter()
            .filter(|f| f.contiguous)
            .map(|f| (f.x1, f.x3, f.x4, f.x2_offset, f.u_max))
            .collect();
        ensure(got == want, format!("degree {d}: {got:?}"))?;
    }
    Ok(())
}

fn suite_power_families() -> Result<(), String> {
    for t in 0..=60 {
        for v in [PowerFamily::A, PowerFamily::B] {
            ensure(
                power_family_independent(1, t, v).map_err(err)?,
                format!("t = {t}, {v:?}"),
            )?;
        }
    }
    Ok(())
}

fn suite_lucas() -> Result<(), String> {
    let f = common::factorials(200);
    for n in 0..=200u64 {
        for k in 0..=n {
            let c = &f[n as usize] / (&f[k as usize] * &f[(n - k) as usize]);
            ensure(binom(n, k) == c, format!("C({n},{k})"))?;
            for p in [2, 3, 5, 7] {
                let r = binom_mod_p(n, k, p).map_err(err)?.value();
                ensure(r == common::residue(&c, p), format!("C({n},{k}) mod {p}"))?;
            }
        }
    }
    Ok(())
}

fn suite_kernel_soundness() -> Result<(), String> {
    for text in [data::REG11_SURFACE, data::REG11_THREEFOLD, data::R1_THREEFOLD] {
        let map = section_map_from_text(text, IntegerCoeffs).map_err(err)?;
        let ker = kernel_of_map(&map, KernelMethod::Block, &GbConfig::default()).map_err(err)?;
        for g in ker.polys() {
            ensure(
                map.substitute(ker.ring(), g).map_err(err)?.is_zero(),
                "generator off the image",
            )?;
        }
    }
    Ok(())
}

fn c9_properties() -> Check {
    let suites: [(&str, fn() -> Result<(), String>); 8] = [
        ("modes", suite_modes),
        ("slicing", suite_slicing),
        ("peeling", suite_peeling),
        ("enumeration", suite_enumeration),
        ("power families", suite_power_families),
        ("lucas", suite_lucas),
        ("pei", || common::check_pei_against_definition(1000..1025)),
        ("kernels", suite_kernel_soundness),
    ];
    for (name, suite) in suites {
        suite().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} suites", suites.len()))
}

fn c10_pei(limit: Duration) -> Outcome {
    let config = GbConfig {
        budget: Budget {
            time_limit: Some(limit),
            ..Budget::default()
        },
        ..GbConfig::default()
    };
    let run = || -> Result<(usize, bool, bool), CertError> {
        let map = sections(6, Variant::YLambda)?;
        let ker = kernel_of_map(&map, KernelMethod::Block, &config)?;
        let pei = partial_elimination(ker.ring(), ker.polys(), 5, &config)?;
        Ok((pei.stabilization, pei.level(3).is_unit(), pei.level(2).is_unit()))
    };
    match run() {
        Ok((3, true, false)) => Outcome::Pass("K_3 = (1), s = 3".into()),
        Ok((s, k3, k2)) => Outcome::Fail(format!("s = {s}, K_3 unit {k3}, K_2 unit {k2}")),
        Err(CertError::Groebner(GroebnerError::Incomplete { reason, .. })) => Outcome::Incomplete(reason),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: Vec<(u32, &str, Duration, Box<dyn FnOnce(Duration) -> Outcome>)> = vec![
        (1, "fixture fidelity", secs(1), wrap(c1_fixtures)),
        (2, "certify m = 6", secs(10), wrap(c2_certify_six)),
        (3, "degree-34 generator", secs(1), wrap(c3_generator)),
        (4, "column certificates", secs(1), wrap(c4_columns)),
        (5, "certify m = 6k, k <= 5", secs(300), wrap(c5_scaling)),
        (6, "degree table", secs(1), wrap(c6_degrees)),
        (7, "Hilbert numbers of X_6", secs(1800), wrap(c7_hilbert)),
        (8, "kernels and generator degrees", secs(600), wrap(c8_kernels)),
        (9, "property suites", secs(600), wrap(c9_properties)),
        (10, "PEI of Y_6", secs(3600), Box::new(c10_pei)),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let mut outcome = check(limit);
        let elapsed = start.elapsed();
        if elapsed > limit {
            if let Outcome::Pass(detail) = outcome {
                outcome = Outcome::Fail(format!("{detail}; over the {}s limit", limit.as_secs()));
            }
        }
        let (tag, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Outcome::Incomplete(d) => ("INCOMPLETE", d),
        };
        println!(
            "{tag:<10} {id:>2}  {name:<30} {:>9.3}s  {detail}",
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn wrap(f: fn() -> Check) -> Box<dyn FnOnce(Duration) -> Outcome> {
    Box::new(move |_| match f() {
        Ok(d) => Outcome::Pass(d),
        Err(d) => Outcome::Fail(d),
    })
}
