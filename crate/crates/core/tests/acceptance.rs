//! Acceptance gate: one PASS/FAIL line per criterion, every check exact.

mod common;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tanglekit::*;

type Res<T> = std::result::Result<T, String>;
type Outcome = Res<String>;

fn big(v: i128) -> BigInt {
    BigInt::from(v)
}

fn cf(v: &[i128]) -> ContinuedFraction {
    ContinuedFraction::new(v.iter().map(|&c| big(c)).collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Res<()> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn palindrome_lemma() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1);
    let cases = 20_000;
    let start = Instant::now();
    for _ in 0..cases {
        let len = rng.gen_range(0..=9);
        let c: Vec<i128> = (0..len).map(|_| rng.gen_range(-9..=9)).collect();
        let d: i128 = rng.gen_range(-9..=9);
        let ab = cf_value(&c);
        let expected = Frac::new(d * ab.n * ab.n, 1 + d * ab.n * ab.d);
        let mut v = c.clone();
        v.push(d);
        v.extend(c.iter().rev().map(|x| -x));
        let got = Frac::of(&cf_eval(&cf(&v)));
        ensure(got == expected, || {
            format!("c={c:?} d={d}: got {got:?}, expected {expected:?}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{cases} random cases in {elapsed:.2?}"))
}

fn cf_vectors() -> Outcome {
    let v = Frac::of(&cf_eval(&cf(&[3, 3, 4])));
    ensure(v == Frac::new(29, 11), || format!("[3,3,4] gave {v:?}"))?;
    let range: Vec<i128> = (2..=20).flat_map(|x| [x, -x]).collect();
    let (mut checked, mut skipped) = (0, 0);
    for &a in &range {
        for &b in &range {
            let cases = [
                (
                    vec![0, -a, -2, -b, -2, a, 1],
                    4 * a * b - 4 * a - 2 * b + 3,
                    (1 - 2 * a) * (1 - 2 * a) * (b - 1),
                ),
                (
                    vec![0, -b - 1, -1, 1, -a + 1, b, -2],
                    4 * a * b + 2 * a - 2 * b + 3,
                    (2 * b + 1) * (2 * a * b + a - b + 1),
                ),
            ];
            for (v, num, den) in cases {
                if den == 0 {
                    skipped += 1;
                    continue;
                }
                let got = Frac::of(&cf_eval(&cf(&v)));
                ensure(got == Frac::new(num, den), || {
                    format!("{v:?}: got {got:?}, expected {num}/{den}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} vectors exact, {skipped} degenerate skipped"))
}

fn witness(family: Family, d: u64, a: i128, b: i128) -> RsrWitness {
    RsrWitness {
        family,
        d,
        eps: 1,
        a: big(a),
        b: big(b),
        branch: None,
        transport: None,
    }
}

fn family_identities() -> Outcome {
    let mut checked = 0;
    for a in -20i128..=20 {
        for b in -20i128..=20 {
            let mut cases: Vec<(RsrWitness, Option<Frac>)> = Vec::new();
            if gcd(a, b) == 1 {
                for d in 1..=5u64 {
                    let di = d as i128;
                    cases.push((
                        witness(Family::I, d, a, b),
                        Some(Frac::new(-(1 + di * a * b), di * a * a)),
                    ));
                }
                cases.push((
                    witness(Family::II, 1, a, b),
                    Some(Frac::new(-(1 + 4 * a * b), 4 * a * a)),
                ));
            }
            let m3 = 2 * a * b - 2 * a - b;
            let m4 = 2 * a * b + a - b;
            let v3 = (m3 != 0).then(|| Frac::new((b - 1) * (4 * a * b - 4 * a - 2 * b - 1), m3 * m3));
            let v4 = (m4 != 0).then(|| Frac::new((2 * a - 1) * (2 * a * b + a - b + 1), m4 * m4));
            cases.push((witness(Family::III, 1, a, b), v3));
            cases.push((witness(Family::IV, 1, a, b), v4));
            for (w, expected) in cases {
                let Some(expected) = expected else { continue };
                let (first, second) = representative_cf_pair(&w).map_err(|e| e.to_string())?;
                let got = (Frac::of(&first.eval()), Frac::of(&second.eval()));
                ensure(got == (Frac::INF, expected), || {
                    format!(
                        "{} d={} a={a} b={b}: got {got:?}, expected {expected:?}",
                        w.family, w.d
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} parameter sets exact"))
}

/// Homeomorphism classes of `(1/0, F)` over every family value with
/// `|a|, |b| <= 80`, which reaches every class of distance at most 5000.
fn class_table() -> HashMap<(i128, i128), BTreeSet<(u64, Family)>> {
    let mut table: HashMap<(i128, i128), BTreeSet<(u64, Family)>> = HashMap::new();
    let mut add = |f: Frac, d: u64, family: Family| {
        if f.d > 0 && f.d <= 5000 {
            table.entry(orbit_min(f.n, f.d)).or_default().insert((d, family));
        }
    };
    for d in 1..=5u64 {
        let di = d as i128;
        for a in -80i128..=80 {
            if gcd(a, di) == 1 {
                add(Frac::new(a, di), d, Family::O);
            }
        }
    }
    for a in -80i128..=80 {
        for b in -80i128..=80 {
            if gcd(a, b) == 1 && a != 0 {
                for d in 1..=5u64 {
                    let di = d as i128;
                    add(Frac::new(1 + di * a * b, di * a * a), d, Family::I);
                }
                add(Frac::new(1 + 4 * a * b, 4 * a * a), 1, Family::II);
            }
            let m3 = 2 * a * b - 2 * a - b;
            if m3 != 0 {
                add(Frac::new((b - 1) * (2 * m3 - 1), m3 * m3), 1, Family::III);
            }
            let m4 = 2 * a * b + a - b;
            if m4 != 0 {
                add(Frac::new((2 * a - 1) * (m4 + 1), m4 * m4), 1, Family::IV);
            }
        }
    }
    table
}

fn classification_oracle() -> Outcome {
    let start = Instant::now();
    let table = class_table();
    let slopes = slopes_in_box(50);
    let lib: Vec<Slope> = slopes.iter().map(|f| f.slope()).collect();
    let none = BTreeSet::new();
    let mut pairs = 0u64;
    let mut positives = 0u64;
    for i in 0..slopes.len() {
        for j in i + 1..slopes.len() {
            let expected = table.get(&pair_class(slopes[i], slopes[j])).unwrap_or(&none);
            for d in 1..=5u64 {
                let want: Vec<Family> = expected
                    .iter()
                    .filter(|(e, _)| *e == d)
                    .map(|(_, f)| *f)
                    .collect();
                let got = rsr_families(&lib[i], &lib[j], d).map_err(|e| e.to_string())?;
                ensure(got == want, || {
                    format!("({}, {}) d={d}: got {got:?}, expected {want:?}", lib[i], lib[j])
                })?;
                positives += u64::from(!want.is_empty());
            }
            pairs += 1;
        }
    }
    // Members generated directly from the family formulas are classified
    // into their family.
    let mut members = 0u64;
    for base in slopes_in_box(4) {
        let base_s = base.slope();
        for family in Family::ALL {
            let ds: Vec<u64> = match family {
                Family::O | Family::I => (1..=5).collect(),
                _ => vec![1],
            };
            for d in ds {
                let generated = family_general_members(&base_s, d, family, 6).map_err(|e| e.to_string())?;
                for m in generated {
                    if m.slope == base_s {
                        continue;
                    }
                    let tags = rsr_families(&base_s, &m.slope, d).map_err(|e| e.to_string())?;
                    ensure(tags.contains(&family), || {
                        format!("{family} member {} of {base_s} at d={d} not classified", m.slope)
                    })?;
                    let class = pair_class(base, Frac::of(&m.slope));
                    ensure(
                        table.get(&class).is_some_and(|s| s.contains(&(d, family))) || class.0 > 5000,
                        || {
                            format!(
                                "{family} member {} of {base_s} at d={d} missing from the class table",
                                m.slope
                            )
                        },
                    )?;
                    members += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{pairs} pairs x 5 distances ({positives} positive), {members} generated members, {elapsed:.1?}"
    ))
}

fn square_test_reduction() -> Res<usize> {
    let bases = slopes_in_box(4);
    let targets = slopes_in_box(60);
    let mut checked = 0;
    for &base in &bases {
        let (p, q) = (base.n, base.d);
        let base_s = base.slope();
        for d in 1..=5i128 {
            // Brute-force membership from the general formula.
            let mut members: HashMap<Frac, Vec<GeneralParams>> = HashMap::new();
            for a in -30i128..=30 {
                for b in -30i128..=30 {
                    let t = a * q - b * p;
                    if gcd(a, b) != 1 || t == 0 {
                        continue;
                    }
                    for eps in [1i128, -1] {
                        let (u, v) = (p + eps * d * a * t, q + eps * d * b * t);
                        ensure(q * u - p * v == eps * d * t * t, || "square identity".into())?;
                        // (a, b) and (-a, -b) give the same slope; the test
                        // reports the one with t > 0.
                        let s = t.signum();
                        members.entry(Frac::new(u, v)).or_default().push(GeneralParams {
                            eps: eps as i8,
                            a: big(s * a),
                            b: big(s * b),
                            t: big(s * t),
                        });
                    }
                }
            }
            for (u, params) in &members {
                let got = family_i_general_params(&base_s, &u.slope(), d as u64);
                ensure(params.iter().all(|g| got.contains(g)), || {
                    format!("base {base_s} d={d} member {u:?}: test gave {got:?}, generated by {params:?}")
                })?;
                checked += 1;
            }
            for &u in &targets {
                if u == base {
                    continue;
                }
                let got = family_i_general_params(&base_s, &u.slope(), d as u64);
                let in_box = got.iter().any(|g| {
                    g.a.to_i64().is_some_and(|a| a.abs() <= 30) && g.b.to_i64().is_some_and(|b| b.abs() <= 30)
                });
                ensure(in_box == members.contains_key(&u), || {
                    format!("base {base_s} d={d} slope {u:?}: test gave {got:?}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn divisor_reduction() -> Res<usize> {
    let mut checked = 0;
    for (family, root) in [
        (
            Family::III,
            (|a: i128, b: i128| 2 * a * b - 2 * a - b) as fn(i128, i128) -> i128,
        ),
        (Family::IV, |a, b| 2 * a * b + a - b),
    ] {
        let value = |a: i128, b: i128| {
            let m = root(a, b);
            match family {
                Family::III => Frac::new((b - 1) * (2 * m - 1), m * m),
                _ => Frac::new((2 * a - 1) * (m + 1), m * m),
            }
        };
        let mut brute: HashMap<(i128, i8), BTreeSet<Frac>> = HashMap::new();
        let mut max_root = 0;
        for a in -30i128..=30 {
            for b in -30i128..=30 {
                let m = root(a, b);
                if m != 0 {
                    brute
                        .entry((m.abs(), m.signum() as i8))
                        .or_default()
                        .insert(value(a, b));
                    max_root = max_root.max(m.abs());
                }
            }
        }
        for m in 1..=max_root {
            for sigma in [1i8, -1] {
                let mut found = BTreeSet::new();
                for (a, b, s) in family_params_for_root(family, &big(m)) {
                    let (a, b) = (a.to_i128().unwrap(), b.to_i128().unwrap());
                    ensure(root(a, b) == s as i128 * m, || {
                        format!("{family}: ({a},{b}) is not a root of {}", s as i128 * m)
                    })?;
                    if s == sigma && a.abs() <= 30 && b.abs() <= 30 {
                        found.insert(value(a, b));
                    }
                }
                let expected = brute.remove(&(m, sigma)).unwrap_or_default();
                ensure(found == expected, || {
                    format!("{family} m={m} sigma={sigma}: found {found:?}, expected {expected:?}")
                })?;
                checked += 1;
            }
        }
        ensure(brute.is_empty(), || format!("{family}: roots beyond the scan"))?;
    }
    Ok(checked)
}

fn diophantine_reductions() -> Outcome {
    let a = square_test_reduction()?;
    let b = divisor_reduction()?;
    Ok(format!(
        "{a} square-test memberships, {b} divisor classes, no discrepancies"
    ))
}

fn two_bridge_round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let (mut instances, mut skipped) = (0, 0);
    let mut tries = 0;
    while instances < 1500 {
        tries += 1;
        ensure(tries < 100_000, || "too few usable instances".into())?;
        let prefix: Vec<i128> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(-5..=5)).collect();
        let c: Vec<i128> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(-5..=5)).collect();
        let d: i128 = rng.gen_range(2..=5);
        let middle = if rng.gen_bool(0.5) { d } else { -d };
        let shape = |mid: i128| {
            let mut v = prefix.clone();
            v.push(0);
            v.extend(&c);
            v.push(mid);
            v.extend(c.iter().rev().map(|x| -x));
            v
        };
        let (x, y) = (closure(cf_value(&shape(0))), closure(cf_value(&shape(middle))));
        if links_equivalent(x, y) {
            skipped += 1;
            continue;
        }
        let (xl, yl) = (link(x), link(y));
        let found = tb_rsr_decide(&xl, &yl, d as u64)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{xl} -> {yl} at d={d} not found (built from {:?})", shape(middle)))?;
        let (before, after) = tb_rsr_site_cf(&xl, &yl, &found).map_err(|e| format!("{xl} {yl}: {e}"))?;
        let (bv, av) = (cf_of(&before), cf_of(&after));
        ensure(links_equivalent(closure(cf_value(&bv)), x), || {
            format!("{bv:?} does not close to {xl}")
        })?;
        ensure(links_equivalent(closure(cf_value(&av)), y), || {
            format!("{av:?} does not close to {yl}")
        })?;
        // Same shape [prefix, 0, c, m, -rev c] with m = 0 before and ±d after.
        let diff: Vec<usize> = (0..bv.len()).filter(|&i| bv.get(i) != av.get(i)).collect();
        ensure(bv.len() == av.len() && diff.len() == 1, || {
            format!("{bv:?} vs {av:?}")
        })?;
        let j = diff[0];
        let tail = bv.len() - j - 1;
        let shaped = bv[j] == 0
            && av[j].abs() == d
            && j > tail
            && bv[j - tail - 1] == 0
            && (0..tail).all(|i| bv[j + 1 + i] == -bv[j - 1 - i]);
        ensure(shaped, || format!("site shape broken: {bv:?} vs {av:?}"))?;
        ensure(
            tb_rsr_decide(&yl, &xl, d as u64)
                .map_err(|e| e.to_string())?
                .is_some(),
            || format!("{yl} -> {xl} not symmetric"),
        )?;
        instances += 1;
    }
    Ok(format!(
        "{instances} instances round-tripped ({skipped} equivalent constructions skipped)"
    ))
}

fn greene_lisca() -> Outcome {
    let holds = |f: fn(&TwoBridgeLink) -> Result<CheckResult>, p: i128, q: i128| {
        f(&link((p, q))).map(|r| r.holds).map_err(|e| e.to_string())
    };
    for (p, q, want) in [(3, 1, true), (5, 2, false), (1137, 430, true)] {
        let got = holds(greene_check, p, q)?;
        ensure(got == want, || format!("greene S({p},{q}) = {got}"))?;
    }
    for (p, q, want) in [(4, 1, true), (9, 2, true), (9, 1, false)] {
        let got = holds(lisca_check, p, q)?;
        ensure(got == want, || format!("lisca S({p},{q}) = {got}"))?;
    }
    let (mut links, mut greene_true, mut lisca_true) = (0, 0, 0);
    for p in 2..=300i128 {
        for q in 1..p {
            if gcd(p, q) != 1 {
                continue;
            }
            let inv = inverse_mod(q, p);
            for (f, count) in [
                (
                    greene_check as fn(&TwoBridgeLink) -> Result<CheckResult>,
                    &mut greene_true,
                ),
                (lisca_check, &mut lisca_true),
            ] {
                let (h, hi) = (holds(f, p, q)?, holds(f, p, inv)?);
                ensure(h == hi, || format!("S({p},{q}) vs S({p},{inv}) disagree"))?;
                *count += usize::from(h);
            }
            links += 1;
        }
    }
    Ok(format!(
        "examples exact; {links} links q^-1 invariant ({greene_true} greene, {lisca_true} lisca)"
    ))
}

/// Canonical representatives of links up to mirror image, `1 <= p <= bound`.
fn link_classes(bound: i128) -> Vec<(i128, i128)> {
    let mut out = vec![(1, 0)];
    for p in 2..=bound {
        let mut seen = HashSet::new();
        for q in 1..p {
            if gcd(p, q) == 1 && !seen.contains(&q) {
                let inv = inverse_mod(q, p);
                seen.extend([q, inv, p - q, p - inv]);
                out.push((p, q));
            }
        }
    }
    out
}

fn agree(x: (i128, i128), y: (i128, i128), d: u64) -> Res<bool> {
    let decided = tb_rsr_decide(&link(x), &link(y), d)
        .map_err(|e| e.to_string())?
        .is_some();
    let solved = torus_knot_surgery_solve(&lens(x), &lens(y), d)
        .map_err(|e| e.to_string())?
        .iter()
        .any(|s| !s.trivial);
    ensure(decided == solved, || {
        format!(
            "S({},{}) / S({},{}) d={d}: decide {decided}, surgery {solved}",
            x.0, x.1, y.0, y.1
        )
    })?;
    Ok(decided)
}

fn surgery_suite() -> Outcome {
    let start = Instant::now();
    let mut calls = 0u64;
    for r in -20i64..=20 {
        for s in -20i64..=20 {
            if gcd(r as i128, s as i128) != 1 {
                continue;
            }
            for pp in -20i64..=20 {
                for qq in -20i64..=20 {
                    if gcd(pp as i128, qq as i128) != 1 {
                        continue;
                    }
                    let delta = pp * s - r * qq;
                    for n in -5i64..=5 {
                        let got = torus_knot_surgery(&r.into(), &s.into(), &pp.into(), &qq.into(), &n.into())
                            .map_err(|e| e.to_string())?;
                        let order = (r + n * delta * pp).abs();
                        ensure(got.result.p() == &BigInt::from(order), || {
                            format!("L({r},{s}) ({pp},{qq}) n={n}: {}", got.result)
                        })?;
                        calls += 1;
                    }
                }
            }
        }
    }

    let bound = 30;
    let k0: Vec<(Frac, LensSpace)> = klein_fiber_surgeries(&BigInt::from(0), bound)
        .iter()
        .map(|s| (Frac::of(&s.slope), s.result.clone()))
        .collect();
    let expected: Vec<(Frac, LensSpace)> = (-(bound as i128)..=bound as i128)
        .filter(|&n| n != 0)
        .map(|n| (Frac::new(1, n), lens((0, 1))))
        .collect();
    ensure(k0 == expected, || format!("k=0: {k0:?}"))?;
    for k in [1i128, -1] {
        let got = klein_fiber_surgeries(&big(k), bound);
        let expected: Vec<(Frac, LensSpace)> = (-(bound as i128)..=bound as i128)
            .filter(|&n| n != 0)
            .map(|n| {
                let l = LensSpace::new(4 * (n + 1), k * (2 * n + 1)).unwrap();
                (Frac::new(k * (n + 1), n), l)
            })
            .collect();
        let got: Vec<(Frac, LensSpace)> = got
            .iter()
            .map(|s| (Frac::of(&s.slope), s.result.clone()))
            .collect();
        ensure(got == expected, || format!("k={k}: {got:?}"))?;
    }
    let two = klein_fiber_surgeries(&BigInt::from(2), bound);
    ensure(
        two.len() == 1 && Frac::of(&two[0].slope) == Frac::int(1) && two[0].result == lens((8, 3)).mirror(),
        || format!("k=2: {two:?}"),
    )?;
    ensure(lens_equiv(&lens((8, 5)), &lens((8, 3)).mirror(), true), || {
        "L(8,5) vs -L(8,3)".into()
    })?;
    ensure(klein_fiber_surgeries(&BigInt::from(5), bound).is_empty(), || {
        "k=5".into()
    })?;

    // Cover/quotient agreement: every pair of classes up to 45, then for
    // each class up to 200 a sample of partners that pass the congruence
    // filter plus the partners reached by small family parameters.
    let mut rng = StdRng::seed_from_u64(8);
    let (mut pairs, mut positives) = (0u64, 0u64);
    let small = link_classes(45);
    for (i, &x) in small.iter().enumerate() {
        for &y in &small[i + 1..] {
            for d in 2..=4 {
                positives += u64::from(agree(x, y, d)?);
                pairs += 1;
            }
        }
    }
    let classes = link_classes(200);
    let by_p: HashMap<i128, Vec<(i128, i128)>> = classes.iter().fold(HashMap::new(), |mut m, &c| {
        m.entry(c.0).or_default().push(c);
        m
    });
    for &x in &classes {
        if x.0 <= 45 {
            continue;
        }
        for d in 2..=4i128 {
            let mut partners: Vec<(i128, i128)> = Vec::new();
            let us: Vec<i128> = (1..=200)
                .filter(|u| (u - x.0) % d == 0 || (u + x.0) % d == 0)
                .collect();
            for _ in 0..6 {
                let u = us[rng.gen_range(0..us.len())];
                let ys = &by_p[&u];
                partners.push(ys[rng.gen_range(0..ys.len())]);
            }
            let (p, q) = x;
            for a in -4i128..=4 {
                for b in -4i128..=4 {
                    let t = a * q - b * p;
                    if gcd(a, b) != 1 || t == 0 {
                        continue;
                    }
                    for eps in [1, -1] {
                        let y = closure(Frac::new(p + eps * d * a * t, q + eps * d * b * t));
                        if y.0 <= 200 {
                            partners.push(y);
                        }
                    }
                }
            }
            for y in partners {
                if links_equivalent(x, y) {
                    continue;
                }
                positives += u64::from(agree(x, y, d as u64)?);
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{calls} surgeries match |H1|; klein cases exact; {pairs} link pairs agree ({positives} related), {elapsed:.1?}"
    ))
}

fn render_corpus() -> Vec<PlatDesc> {
    let mut rng = StdRng::seed_from_u64(9);
    let mut corpus: Vec<PlatDesc> = Vec::new();
    corpus.push(cf_to_plat(&cf(&[])));
    corpus.push(cf_to_plat(&cf(&[3, 3, 4])));
    for (family, d, a, b) in [
        (Family::O, 5, 2, 0),
        (Family::I, 3, 2, 3),
        (Family::I, 1, 3, -1),
        (Family::II, 1, 1, 2),
    ] {
        let (before, after) = site_plat(&witness(family, d, a, b)).expect("supported site");
        corpus.push(before);
        corpus.push(after);
    }
    while corpus.len() < 100 {
        let len = rng.gen_range(0..=10);
        let v: Vec<i128> = (0..len)
            .map(|_| {
                if rng.gen_bool(0.1) {
                    rng.gen_range(-1000..=1000)
                } else {
                    rng.gen_range(-6..=6)
                }
            })
            .collect();
        let mut p = cf_to_plat(&cf(&v));
        if len > 0 && rng.gen_bool(0.5) {
            p.site = Some(rng.gen_range(0..len));
        }
        if rng.gen_bool(0.2) {
            p.framing_note = Some("arc <framed> & \"quoted\"".into());
        }
        corpus.push(p);
    }
    corpus
}

fn rendering_determinism() -> Outcome {
    let first = render_corpus();
    let second = render_corpus();
    let mut svgs = 0;
    for (a, b) in first.iter().zip(&second) {
        for format in [RenderFormat::Ascii, RenderFormat::Svg] {
            let (x, y) = (plat_render(a, format), plat_render(b, format));
            ensure(x == y, || {
                format!("{format:?} output differs for {:?}", a.coefficients())
            })?;
        }
        let svg = plat_render(a, RenderFormat::Svg);
        let doc = roxmltree::Document::parse(&svg).map_err(|e| format!("invalid SVG: {e}"))?;
        let root = doc.root_element();
        ensure(
            root.tag_name().name() == "svg"
                && root.tag_name().namespace() == Some("http://www.w3.org/2000/svg")
                && root.attribute("version") == Some("1.1"),
            || "bad root element".into(),
        )?;
        for node in doc.descendants().filter(|n| n.is_element()) {
            for attr in ["x", "y", "x1", "y1", "x2", "y2", "width", "height"] {
                if let Some(v) = node.attribute(attr) {
                    ensure(v.parse::<f64>().is_ok(), || format!("non-numeric {attr}={v}"))?;
                }
            }
        }
        ensure(
            a.site.is_none() || doc.descendants().any(|n| n.attribute("class") == Some("site")),
            || "site not drawn".into(),
        )?;
        svgs += 1;
    }
    Ok(format!(
        "{} plats byte-identical in both formats, {svgs} SVG documents valid",
        first.len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("palindrome lemma", palindrome_lemma),
        ("continued fraction vectors", cf_vectors),
        ("family identities", family_identities),
        ("classification oracle", classification_oracle),
        ("diophantine reductions", diophantine_reductions),
        ("2-bridge replacement round trip", two_bridge_round_trip),
        ("greene and lisca criteria", greene_lisca),
        ("surgery suite", surgery_suite),
        ("rendering determinism", rendering_determinism),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|v| v.parse().ok());
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        if only.is_some_and(|o| o != i + 1) {
            continue;
        }
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why}", i + 1);
                failed += 1;
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
