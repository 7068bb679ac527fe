//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::time::{Duration, Instant};

use num_traits::Zero;
use polycauchy::cauchy::multiparam_cauchy_in_y;
use polycauchy::series::{gf_cauchy1, gf_cauchy2, gf_gen_bernoulli};
use polycauchy::{
    bernoulli_number, cauchy, cauchy_poly, central_u, factorial, gsn1, gsn2, int, multiparam_cauchy, q,
    CauchyKind, Construction, MultiParam, RatPoly, Rational,
};
use polycauchy_identities::{find, run_all, verify_case, ParameterGrid, RunOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn golden_tables() -> Outcome {
    let tables = [(CauchyKind::First, support::first_table()), (CauchyKind::Second, support::second_table())];
    let mut checked = 0;
    for (kind, table) in tables {
        for (n, expected) in table.iter().enumerate() {
            for c in Construction::ALL {
                let got = cauchy_poly(kind, n, 1, c).map_err(|e| e.to_string())?;
                ensure(&got == expected, format!("{kind:?} n={n} via {}: {got}", c.name()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} polynomials, n <= 6, {} constructions", Construction::ALL.len()))
}

fn poly_cauchy_golden() -> Outcome {
    for kind in [CauchyKind::First, CauchyKind::Second] {
        for k in 1..=4 {
            let got = cauchy(kind, 6, k);
            ensure(got == support::c6(kind, k), format!("{kind:?} k={k}: {got}"))?;
        }
    }
    Ok("c_6^(k) and c^_6^(k) for k = 1..4".into())
}

fn multiparameter_golden() -> Outcome {
    let y = q(-3, 2);
    let p = MultiParam::new(4, 1, int(-3), vec![int(1), int(1), q(1, 2)], y.clone()).map_err(|e| e.to_string())?;
    let five = int(5);
    let expected = [
        (CauchyKind::First, (q(114177911, 144000), q(-284203, 768))),
        (CauchyKind::Second, (q(14046697, 288000), q(10805, 768))),
    ];
    for (kind, ab) in expected {
        let by_x = multiparam_cauchy(kind, &p).map_err(|e| e.to_string())?.eval_quadratic_surd(&five);
        ensure(by_x == ab, format!("{kind:?}: got {} + {} sqrt5", by_x.0, by_x.1))?;
        let by_y = multiparam_cauchy_in_y(kind, &p, &y).map_err(|e| e.to_string())?.eval_quadratic_surd(&five);
        ensure(by_y == by_x, format!("{kind:?}: x <-> y symmetry broken"))?;
    }
    Ok("A + B sqrt5 for both kinds, a = 1 symmetry".into())
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let suite = run_all(&ParameterGrid::default(), RunOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    print!("{}", suite.summary());
    let failed: Vec<&str> = suite.failed().map(|r| r.id.as_str()).collect();
    ensure(failed.is_empty(), format!("failing cases: {failed:?}"))?;
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    let probes = suite.reports.iter().filter(|r| r.probe).count();
    Ok(format!("{} cases ({probes} probes), 0 failures", suite.reports.len()))
}

fn oracle_equivalence() -> Outcome {
    let (g1, g2) = (gf_cauchy1(12), gf_cauchy2(12));
    for n in 0..=12 {
        ensure(g1.coeff(n).scale(&factorial(n)) == cauchy(CauchyKind::First, n, 1), format!("first n={n}"))?;
        ensure(g2.coeff(n).scale(&factorial(n)) == cauchy(CauchyKind::Second, n, 1), format!("second n={n}"))?;
    }
    let b = gf_gen_bernoulli(1, 12);
    for n in 0..=12 {
        let bn = b.coeff(n).coeff(0) * factorial(n);
        ensure(bn == bernoulli_number(n), format!("B_{n} = {bn}"))?;
        if n >= 3 && n % 2 == 1 {
            ensure(bn.is_zero(), format!("B_{n} = {bn}"))?;
        }
    }
    ensure(b.coeff(4).coeff(0) * factorial(4) == q(-1, 30), "B_4")?;
    Ok("series vs gsn for n <= 12, B_0..B_12".into())
}

fn central_factorial_convention() -> Outcome {
    // c_{2n}(x) = n sum_m u(n,m)/m ((x+n-1)^(2m) - B_{2m}) at n = 2
    let n = 2usize;
    let base = RatPoly::new(vec![int(n as i64 - 1), int(1)]);
    let mut rhs = RatPoly::zero();
    for m in 1..=n {
        let u = central_u(n, m).map_err(|e| e.to_string())?;
        let term = base.pow(2 * m) - RatPoly::constant(bernoulli_number(2 * m));
        rhs += term.scale(&(u / int(m as i64)));
    }
    let rhs = rhs.scale(&int(n as i64));
    let expected = support::poly(&[(-19, 30), (0, 1), (4, 1), (4, 1), (1, 1)]);
    ensure(rhs == expected, format!("got {rhs}"))?;
    ensure(cauchy(CauchyKind::First, 4, 1) == expected, "c_4 itself")?;
    Ok("c_4(x) = -19/30 + 4x^2 + 4x^3 + x^4".into())
}

fn sign_probe() -> Outcome {
    let case = find("G06.k-recurrence-sign").ok_or("probe missing")?;
    let r = verify_case(case, &ParameterGrid::default(), false);
    let finding = r.finding.clone().unwrap_or_default();
    ensure(r.passed() && finding.contains("holds at all"), finding.clone())?;
    Ok(finding)
}

fn random_sequence(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let len = rng.gen_range(1..=8);
    (0..len).map(|_| q(rng.gen_range(-60..=60), rng.gen_range(1..=24))).collect()
}

fn inversion() -> Outcome {
    for n in 0..=10 {
        for m in 0..=n {
            let mut acc = RatPoly::zero();
            for l in m..=n {
                let s = if (n - l) % 2 == 0 { int(1) } else { int(-1) };
                acc += (gsn2(n, l).map_err(|e| e.to_string())? * gsn1(l, m).map_err(|e| e.to_string())?).scale(&s);
            }
            let delta = if n == m { RatPoly::constant(int(1)) } else { RatPoly::zero() };
            ensure(acc == delta, format!("orthogonality n={n} m={m}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let sign = |n: usize, m: usize| if (n - m).is_multiple_of(2) { int(1) } else { int(-1) };
    for trial in 0..100 {
        let f = random_sequence(&mut rng);
        let f: Vec<RatPoly> = f.into_iter().map(RatPoly::constant).collect();
        let g: Vec<RatPoly> = (0..f.len())
            .map(|n| (0..=n).fold(RatPoly::zero(), |acc, m| acc + gsn2(n, m).unwrap() * &f[m]))
            .collect();
        let back: Vec<RatPoly> = (0..g.len())
            .map(|n| (0..=n).fold(RatPoly::zero(), |acc, m| acc + (gsn1(n, m).unwrap() * &g[m]).scale(&sign(n, m))))
            .collect();
        ensure(back == f, format!("trial {trial}: inversion lost the sequence"))?;
        let f2: Vec<RatPoly> = (0..f.len())
            .map(|n| (0..=n).fold(RatPoly::zero(), |acc, m| acc + (gsn1(n, m).unwrap() * &f[m]).scale(&sign(n, m))))
            .collect();
        let back2: Vec<RatPoly> = (0..f2.len())
            .map(|n| (0..=n).fold(RatPoly::zero(), |acc, m| acc + gsn2(n, m).unwrap() * &f2[m]))
            .collect();
        ensure(back2 == f, format!("trial {trial}: reverse inversion lost the sequence"))?;
    }
    Ok("orthogonality n <= 10, 100 random sequences both directions".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden Cauchy tables", golden_tables),
        ("poly-Cauchy golden", poly_cauchy_golden),
        ("multiparameter golden", multiparameter_golden),
        ("identity suite", identity_suite),
        ("oracle equivalence", oracle_equivalence),
        ("central factorial convention", central_factorial_convention),
        ("sign probe", sign_probe),
        ("orthogonality and inversion", inversion),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({ms} ms): {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
