//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use kronecker_core::counting::{b, k_partition, k_series};
use kronecker_core::cyclotomic::{cyclotomic, cyclotomic_degree};
use kronecker_core::kronecker::{
    candidate_box_size, enumerate_brute, enumerate_canonical, is_kronecker, roots_in_disc_numeric,
};
use kronecker_core::numtheory::{divisors, euler_phi, inverse_phi, s};
use kronecker_core::poly::{from_power_sums, power_map, power_map_orbit, power_sums, IntPoly};

type Outcome = Result<String, String>;

const K_TABLE: [u64; 20] = [
    3, 9, 19, 43, 81, 159, 277, 501, 831, 1415, 2253, 3673, 5675, 8933, 13447, 20581, 30335,
    45345, 65611, 96143,
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: f64, what: &str) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s, || {
        format!("{what} took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64())
    })
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn golden_table() -> Outcome {
    let start = Instant::now();
    let series = k_series(150).map_err(|e| e.to_string())?;
    for (i, &want) in K_TABLE.iter().enumerate() {
        let n = i as u64 + 1;
        let part = k_partition(n).map_err(|e| e.to_string())?;
        ensure(part == BigUint::from(want), || format!("k_partition({n}) = {part}, want {want}"))?;
        let ser = &series.coeffs[n as usize];
        ensure(*ser == BigUint::from(want), || format!("k_series coefficient {n} = {ser}, want {want}"))?;
    }
    within(start.elapsed(), 5.0, "golden table")?;
    Ok(format!("k(1..20) exact by both engines in {:.2} s", start.elapsed().as_secs_f64()))
}

fn k100() -> Outcome {
    let start = Instant::now();
    let value = k_series(100).map_err(|e| e.to_string())?.coeffs[100].clone();
    ensure(value.to_string() == "13445370780675", || format!("k(100) = {value}"))?;
    within(start.elapsed(), 5.0, "k(100)")?;
    Ok(format!("k(100) = {value} in {:.3} s", start.elapsed().as_secs_f64()))
}

/// Number of solutions of `sum_{r >= 3} x_r phi(r) = m`, by direct search
/// over the weights `phi(r)` of all `r >= 3` with `phi(r) <= m`.
fn b_oracle(m: u64) -> u64 {
    let phi_by_gcd = |r: u64| (1..=r).filter(|k| k.gcd(&r) == 1).count() as u64;
    let weights: Vec<u64> = (3..=2 * m * m + 2)
        .map(phi_by_gcd)
        .filter(|&w| w <= m)
        .collect();
    fn count(weights: &[u64], rest: u64) -> u64 {
        match weights.split_first() {
            None => u64::from(rest == 0),
            Some((&w, tail)) => (0..=rest / w).map(|x| count(tail, rest - x * w)).sum(),
        }
    }
    count(&weights, m)
}

fn b_values() -> Outcome {
    for (m, want) in [(0u64, 1u64), (2, 3), (4, 10), (6, 26)] {
        let got = b(m).map_err(|e| e.to_string())?;
        ensure(got == BigUint::from(want), || format!("b({m}) = {got}, want {want}"))?;
    }
    for m in 0..=12 {
        let got = b(m).map_err(|e| e.to_string())?;
        let want = b_oracle(m);
        ensure(got == BigUint::from(want), || format!("b({m}) = {got}, oracle {want}"))?;
    }
    Ok("b(0,2,4,6) = 1,3,10,26; b(m) = brute-force count for m <= 12".into())
}

fn brute_small_cases() -> Outcome {
    let start = Instant::now();
    let e1 = enumerate_brute(1, false).map_err(|e| e.to_string())?;
    let want1: BTreeSet<IntPoly> = [p(&[0, 1]), p(&[-1, 1]), p(&[1, 1])].into();
    ensure(e1.polynomials.iter().cloned().collect::<BTreeSet<_>>() == want1 && e1.polynomials.len() == 3, || {
        format!("n=1 gave {:?}", e1.polynomials)
    })?;

    let e2 = enumerate_brute(2, false).map_err(|e| e.to_string())?;
    let want2: BTreeSet<IntPoly> = [
        &[0, 0, 1][..],
        &[0, -1, 1],
        &[0, 1, 1],
        &[-1, 0, 1],
        &[1, 1, 1],
        &[1, 0, 1],
        &[1, -1, 1],
        &[1, -2, 1],
        &[1, 2, 1],
    ]
    .iter()
    .map(|c| p(c))
    .collect();
    ensure(e2.candidates == BigInt::from(15), || format!("n=2 scanned {}", e2.candidates))?;
    ensure(
        e2.polynomials.len() == 9 && e2.polynomials.iter().cloned().collect::<BTreeSet<_>>() == want2,
        || format!("n=2 gave {:?}", e2.polynomials),
    )?;

    let e3 = enumerate_brute(3, false).map_err(|e| e.to_string())?;
    ensure(e3.candidates == BigInt::from(147) && e3.polynomials.len() == 19, || {
        format!("n=3 scanned {} found {}", e3.candidates, e3.polynomials.len())
    })?;
    for n in 4..=5 {
        enumerate_brute(n, false).map_err(|e| e.to_string())?;
    }
    within(start.elapsed(), 10.0, "brute force through n=5")?;
    Ok(format!(
        "n=1: 3, n=2: 15 -> 9, n=3: 147 -> 19; n<=5 in {:.2} s",
        start.elapsed().as_secs_f64()
    ))
}

fn cross_engine() -> Outcome {
    for n in 1..=5 {
        let brute: BTreeSet<IntPoly> = enumerate_brute(n, false)
            .map_err(|e| e.to_string())?
            .polynomials
            .into_iter()
            .collect();
        let canon: BTreeSet<IntPoly> = enumerate_canonical(n, false)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|f| f.expand())
            .collect();
        ensure(brute == canon, || format!("n={n}: brute {} vs canonical {}", brute.len(), canon.len()))?;
    }
    for n in 1..=12u64 {
        let listed = enumerate_canonical(n as usize, false).map_err(|e| e.to_string())?.len();
        let formula = k_partition(n).map_err(|e| e.to_string())?;
        ensure(BigUint::from(listed) == formula, || format!("n={n}: listed {listed}, k = {formula}"))?;
    }
    Ok("brute = canonical for n <= 5; |canonical| = k(n) for n <= 12".into())
}

fn inverse_totient() -> Outcome {
    let fib = |j| inverse_phi(j).map(|f| f.members.clone()).map_err(|e| e.to_string());
    ensure(fib(2)? == vec![3, 4, 6], || "phi^-1(2)".into())?;
    ensure(fib(8)? == vec![15, 16, 20, 24, 30], || "phi^-1(8)".into())?;
    ensure(fib(3)?.is_empty(), || "phi^-1(3)".into())?;
    ensure(fib(14)?.is_empty(), || "phi^-1(14)".into())?;

    const J_MAX: usize = 1000;
    let limit = 2 * J_MAX * J_MAX;
    let mut phi: Vec<usize> = (0..=limit).collect();
    for i in 2..=limit {
        if phi[i] == i {
            for k in (i..=limit).step_by(i) {
                phi[k] -= phi[k] / i;
            }
        }
    }
    let mut sieved: Vec<Vec<u64>> = vec![Vec::new(); J_MAX + 1];
    for (n, &v) in phi.iter().enumerate().skip(1) {
        if v <= J_MAX && n <= 2 * v * v {
            sieved[v].push(n as u64);
        }
    }
    for j in 1..=J_MAX {
        ensure(fib(j as u64)? == sieved[j], || format!("fiber {j} differs from sieve"))?;
    }

    let start = Instant::now();
    let big = s(1_000_000_000).map_err(|e| e.to_string())?;
    ensure(big == 152, || format!("s(10^9) = {big}"))?;
    within(start.elapsed(), 60.0, "s(10^9)")?;
    Ok(format!(
        "worked fibers, j <= 1000 vs sieve, s(10^9) = 152 in {:.3} s",
        start.elapsed().as_secs_f64()
    ))
}

fn cyclotomic_identity() -> Outcome {
    let g = |n| cyclotomic(n).map(|e| e.poly).map_err(|e| e.to_string());
    for (n, c) in [
        (1u64, &[-1, 1][..]),
        (2, &[1, 1]),
        (3, &[1, 1, 1]),
        (4, &[1, 0, 1]),
        (6, &[1, -1, 1]),
    ] {
        ensure(g(n)? == p(c), || format!("g_{n} = {}", g(n).unwrap()))?;
    }
    for n in 1..=300u64 {
        let mut prod = IntPoly::one();
        for d in divisors(n) {
            prod = prod.mul(&g(d)?);
        }
        ensure(prod == IntPoly::x_pow_minus_one(n as usize), || format!("product over divisors of {n}"))?;
    }
    let start = Instant::now();
    for n in 1..=10_000u64 {
        let deg = cyclotomic_degree(n).map_err(|e| e.to_string())?;
        let phi = euler_phi(n).map_err(|e| e.to_string())? as usize;
        ensure(deg == phi, || format!("deg g_{n} = {deg}, phi = {phi}"))?;
    }
    Ok(format!(
        "prod g_d = z^n - 1 for n <= 300; deg g_n = phi(n) for n <= 10^4 ({:.1} s)",
        start.elapsed().as_secs_f64()
    ))
}

fn monic_box(n: usize, bound: impl Fn(usize) -> i64) -> Vec<IntPoly> {
    let bounds: Vec<i64> = (0..n).map(bound).collect();
    let mut out = Vec::new();
    let mut c: Vec<i64> = bounds.iter().map(|b| -b).collect();
    c.push(1);
    loop {
        out.push(p(&c));
        let mut j = 0;
        while j < n && c[j] == bounds[j] {
            c[j] = -bounds[j];
            j += 1;
        }
        if j == n {
            return out;
        }
        c[j] += 1;
    }
}

fn power_map_properties() -> Outcome {
    let mut round_trips = 0;
    for n in 1..=4 {
        for f in monic_box(n, |_| 3) {
            let back = from_power_sums(&power_sums(&f, n).map_err(|e| e.to_string())?, n)
                .map_err(|e| e.to_string())?;
            ensure(back == f, || format!("round trip failed for {f}"))?;
            round_trips += 1;
        }
    }

    let pools: Vec<Vec<IntPoly>> = (1..=6)
        .map(|n| enumerate_canonical(n, false).map(|v| v.iter().map(|f| f.expand()).collect()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(0x6b726f6e);
    for _ in 0..100 {
        let pool = &pools[rng.random_range(0..pools.len())];
        let f = &pool[rng.random_range(0..pool.len())];
        let a = rng.random_range(1..=10);
        let b = rng.random_range(1..=10);
        let lhs = power_map(&power_map(f, a).map_err(|e| e.to_string())?, b).map_err(|e| e.to_string())?;
        let rhs = power_map(f, a * b).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("(f_{a})_{b} != f_{} for f = {f}", a * b))?;
    }

    let mut orbits = 0;
    let mut longest = 0;
    for n in 1..=6 {
        for fac in enumerate_canonical(n, false).map_err(|e| e.to_string())? {
            if fac.shift > 0 {
                continue;
            }
            let f = fac.expand();
            let orbit = power_map_orbit(&f, 600).map_err(|e| e.to_string())?;
            let (_, k) = orbit.repeat.ok_or_else(|| format!("no repeat within 600 steps for {f}"))?;
            longest = longest.max(k);
            orbits += 1;
        }
    }
    Ok(format!(
        "{round_trips} Newton round trips; 100 random (f_a)_b = f_ab; {orbits} orbits repeat (latest at step {longest})"
    ))
}

fn decision_vs_numeric() -> Outcome {
    let mut checked = 0;
    let mut positives = 0;
    for n in 1..=4usize {
        let bound = |j: usize| num_integer::binomial(n as i64, j as i64);
        let candidates = monic_box(n, bound);
        ensure(BigInt::from(candidates.len()) == candidate_box_size(n), || format!("box size {n}"))?;
        for f in candidates {
            let exact = is_kronecker(&f).map_err(|e| e.to_string())?.is_kronecker();
            let numeric = roots_in_disc_numeric(&f, 1e-8).map_err(|e| format!("{f}: {e}"))?;
            ensure(exact == numeric, || format!("{f}: exact {exact}, numeric {numeric}"))?;
            checked += 1;
            positives += usize::from(exact);
        }
    }
    Ok(format!("{checked} polynomials, {positives} Kronecker, 0 disagreements"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 golden k(n) table", golden_table),
        ("2 k(100) by series", k100),
        ("3 b(m) values and oracle", b_values),
        ("4 brute-force small cases", brute_small_cases),
        ("5 cross-engine equivalence", cross_engine),
        ("6 inverse totient", inverse_totient),
        ("7 cyclotomic identity", cyclotomic_identity),
        ("8 power-map properties", power_map_properties),
        ("9 decision vs numeric roots", decision_vs_numeric),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} [{secs:.2} s]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name} [{secs:.2} s]: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
