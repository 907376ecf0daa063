//! Acceptance checks, one PASS/FAIL line per criterion.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{cyclic_mul, Naive, Poly};
use skew_cyclic::codec::{Codec, CollisionPolicy, ErrorTerm, Message};
use skew_cyclic::factorization::table1_report;
use skew_cyclic::skew_code::{cofactor, tau, DEFAULT_GUARD};
use skew_cyclic::{parse_poly, ChainRingElement, Codeword, GeneratorForm, RingContext, SkewCyclicCode, SkewPoly};

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ctx(p: u64, k: usize, s: u64) -> RingContext {
    RingContext::new(p, k, s).unwrap()
}

fn poly(c: RingContext, text: &str) -> SkewPoly {
    parse_poly(c, text).unwrap()
}

const H: &str = "x^4+(1+u+u^2)x^2-(u+u^2)x+(1+u+u^2)";
const UA: &str = "u(x^2-x+1)";
const CODEWORD: &str = "(1+u+2u^2)x^5+(2u+u^2)x^4+(1+2u)x^3+ux^2+(1+2u)x+(2u+u^2)";

fn example_codec() -> (RingContext, Codec) {
    let c = ctx(3, 3, 2);
    let form = GeneratorForm::from_generators(c, 6, &[poly(c, H), poly(c, UA)]).unwrap();
    (c, Codec::new(form, 6).unwrap())
}

fn example_message(c: RingContext) -> Message {
    Message::new(vec![poly(c, "(1+u+2u^2)x+2u+u^2"), poly(c, "(2+u)x+u")])
}

fn reduce_cyclic(naive: &Naive, f: &Poly, n: usize) -> Poly {
    let mut out = vec![vec![0; naive.k]; n];
    for (i, c) in f.iter().enumerate() {
        for l in 0..naive.k {
            out[i % n][l] = (out[i % n][l] + c[l]) % naive.p;
        }
    }
    naive.trim(out)
}

fn criterion_1() -> Outcome {
    let (c, codec) = example_codec();
    let word = codec.encode(&example_message(c)).map_err(|e| e.to_string())?;
    let expected = Codeword::from_poly(&poly(c, CODEWORD), 6).unwrap();
    ensure!(word == expected, "encoded {} instead of {}", word, expected);

    // reference: I·h + u·J·a computed with plain integer arithmetic
    let naive = Naive::new(3, 3, 2);
    let lib = |t: &str| naive.naive_poly(&poly(c, t));
    let direct = naive.add(
        &naive.mul(&lib("(1+u+2u^2)x+2u+u^2"), &lib(H)),
        &naive.mul(&lib("u"), &naive.mul(&lib("(2+u)x+u"), &lib("x^2-x+1"))),
    );
    ensure!(
        reduce_cyclic(&naive, &direct, 6) == lib(CODEWORD),
        "reference arithmetic disagrees"
    );
    Ok(format!("c = {}", word.display_descending()))
}

fn criterion_2() -> Outcome {
    let (c, codec) = example_codec();
    let sent = codec.encode(&example_message(c)).map_err(|e| e.to_string())?;
    let received = sent
        .add(&c, &Codeword::from_poly(&poly(c, "u^2x^4"), 6).unwrap())
        .unwrap();

    let syndrome = codec.syndrome(&received).map_err(|e| e.to_string())?;
    let base = c.base_field();
    ensure!(
        syndrome.layers[0].is_zero() && syndrome.layers[1].is_zero(),
        "e0, e1 = {}",
        syndrome
    );
    ensure!(
        syndrome.layers[2] == poly(base, "x+x^2-x^4-x^5"),
        "e2 = {}",
        syndrome.layers[2]
    );

    // reference: layer polynomials times the check polynomials over F_3
    let layer = |l: usize| -> Vec<i64> { received.entries().iter().map(|e| i64::from(e.layer(l))).collect() };
    let check0 = [-1, 0, 1];
    let check12 = [-1, -1, 0, 1, 1];
    ensure!(
        cyclic_mul(3, &layer(0), &check0, 6).iter().all(|&x| x == 0),
        "reference e0 nonzero"
    );
    ensure!(
        cyclic_mul(3, &layer(1), &check12, 6).iter().all(|&x| x == 0),
        "reference e1 nonzero"
    );
    ensure!(
        cyclic_mul(3, &layer(2), &check12, 6) == vec![0, 1, 1, 0, 2, 2],
        "reference e2 differs"
    );

    let table = codec
        .build_table(1, CollisionPolicy::CosetLeader, DEFAULT_GUARD)
        .map_err(|e| e.to_string())?;
    let out = codec.decode(&received, &table).map_err(|e| e.to_string())?;
    let located = [ErrorTerm {
        position: 4,
        layer: 2,
        magnitude: 1,
    }];
    ensure!(out.error.terms() == located, "located {}", out.error);
    ensure!(out.corrected == sent, "corrected word differs");
    ensure!(out.message == example_message(c), "recovered message differs");
    let strict = codec.build_table(1, CollisionPolicy::Strict, DEFAULT_GUARD).is_err();
    let alternatives: Vec<String> = out.alternatives.iter().map(|a| a.to_string()).collect();
    Ok(format!(
        "{}; error {} (same syndrome: {}; strict single-error table collides: {})",
        syndrome,
        out.error,
        alternatives.join(", "),
        strict
    ))
}

fn criterion_3() -> Outcome {
    let c = ctx(3, 3, 2);
    let code = SkewCyclicCode::from_generators(c, 6, &[poly(c, H), poly(c, UA)]).unwrap();
    let words = code.enumerate_codewords().map_err(|e| e.to_string())?;
    let distinct: HashSet<&Codeword> = words.iter().collect();
    ensure!(
        distinct.len() == 59049,
        "enumerated {} distinct codewords",
        distinct.len()
    );
    ensure!(words.iter().all(|w| code.contains(w)), "enumeration left the code");
    let form = code.classify().map_err(|e| e.to_string())?;
    let GeneratorForm::CaseIII { r, t, torsion, .. } = form else {
        return Err(format!("classified as case {}", form.case_name()));
    };
    ensure!((r, t, torsion) == (4, 2, 1), "r, t, i = {r}, {t}, {torsion}");
    let (p, k, n) = (3u32, 3u32, 6u32);
    let formula = BigUint::from(p.pow(k)).pow(n - r as u32) * BigUint::from(p.pow(k - 1)).pow((r - t) as u32);
    ensure!(formula == BigUint::from(59049u32), "formula gives {formula}");
    ensure!(form.cardinality(6).unwrap() == formula, "library cardinality differs");
    Ok(format!("|C| = {} = 27^2 · 9^2", distinct.len()))
}

fn criterion_4() -> Outcome {
    let c = ctx(5, 3, 4);
    let report = table1_report(c, DEFAULT_GUARD).map_err(|e| e.to_string())?;
    ensure!(report.families.len() == 4, "{} families", report.families.len());
    for fam in &report.families {
        ensure!(
            fam.distinct_factors == 10,
            "family {} has {} distinct factors",
            fam.family,
            fam.distinct_factors
        );
        ensure!(fam.all_verified, "family {} has an invalid pair", fam.family);
    }
    let naive = Naive::new(5, 2, 4);
    let r2 = ctx(5, 2, 4);
    let xn: Poly = vec![vec![4, 0], vec![], vec![], vec![], vec![1, 0]]
        .into_iter()
        .map(|v| if v.is_empty() { vec![0, 0] } else { v })
        .collect();
    for row in &report.rows {
        ensure!(
            row.verified && row.found_by_search,
            "row {:?} not verified",
            row.parameters
        );
        let f1 = naive.naive_poly(&poly(r2, &row.f1));
        let f2 = naive.naive_poly(&poly(r2, &row.f2));
        ensure!(
            naive.mul(&f1, &f2) == xn,
            "reference product of {} and {} is not x^4 - 1",
            row.f1,
            row.f2
        );
        for stats in &row.code_stats {
            ensure!(stats.rank == 2, "rank {}", stats.rank);
            ensure!(
                stats.cardinality == BigUint::from(625u32),
                "|C| = {}",
                stats.cardinality
            );
            ensure!(stats.min_distance == Some(2), "d = {:?}", stats.min_distance);
        }
    }
    Ok(format!(
        "{} family members, 4 × 10 distinct factors, every code rank 2, |C| = 625, d = 2",
        report.rows.len()
    ))
}

fn criterion_5() -> Outcome {
    let c = ctx(5, 3, 4);
    let census = table1_report(c, DEFAULT_GUARD).map_err(|e| e.to_string())?.census;
    ensure!(
        census.distinct_linear_factors == 200,
        "{} distinct linear factors",
        census.distinct_linear_factors
    );
    ensure!(
        census.pairs_verified == census.pairs,
        "{} of {} pairs verify",
        census.pairs_verified,
        census.pairs
    );
    ensure!(
        census.rank_counts == BTreeMap::from([(3, 200)]),
        "ranks {:?}",
        census.rank_counts
    );
    ensure!(
        census.cardinality_counts == BTreeMap::from([("15625".to_string(), 200)]),
        "sizes {:?}",
        census.cardinality_counts
    );
    ensure!(census.enumerated >= 20, "only {} codes enumerated", census.enumerated);

    // reference: instantiate the families directly and multiply with plain arithmetic
    let naive = Naive::new(5, 2, 4);
    let target: Poly = vec![vec![1, 0], vec![0, 0], vec![1, 0]];
    let mut seen = HashSet::new();
    for t in 0..5i64 {
        for s in 0..5i64 {
            let m = |x: i64| x.rem_euclid(5);
            let families: [(Poly, Poly); 4] = [
                (vec![vec![2, s], vec![1, t]], vec![vec![3, s], vec![1, t]]),
                (vec![vec![2, s], vec![4, t]], vec![vec![3, s], vec![4, t]]),
                (vec![vec![1, m(-s)], vec![2, t]], vec![vec![1, s], vec![3, m(5 - t)]]),
                (vec![vec![4, m(-s)], vec![2, t]], vec![vec![4, s], vec![3, m(5 - t)]]),
            ];
            for (l1, l2) in families {
                ensure!(
                    naive.mul(&l1, &l2) == target,
                    "reference product fails at t = {t}, s = {s}"
                );
                seen.insert(l1);
                seen.insert(l2);
            }
        }
    }
    ensure!(seen.len() == 200, "reference count {}", seen.len());
    Ok(format!(
        "200 distinct linear factors; {} enumerated codes, each rank 3 with |C| = 25^3; they form {} distinct codes",
        census.enumerated, census.distinct_codes
    ))
}

fn criterion_6() -> Outcome {
    let c = ctx(5, 3, 4);
    let f = poly(c, "(1+4u+u^2)x^2+(4+u+4u^2)");
    let k_poly = cofactor(&f, 4).map_err(|e| e.to_string())?;
    ensure!(k_poly == poly(c, "(1+u)x^2+(1+u)"), "cofactor {}", k_poly);
    let naive = Naive::new(5, 3, 4);
    let product = naive.mul(&naive.naive_poly(&k_poly), &naive.naive_poly(&f));
    ensure!(
        naive.lib_poly(&product) == SkewPoly::x_pow_minus_one(c, 4),
        "reference k·g differs from x^4 - 1"
    );

    let form = GeneratorForm::from_generators(c, 4, &[f]).map_err(|e| e.to_string())?;
    let el = |v: &[i64]| c.element_reduced(v).unwrap();
    let g = form.generator_matrix(4).map_err(|e| e.to_string())?;
    let h = form.parity_check_display(4).map_err(|e| e.to_string())?;
    ensure!(
        g[0] == vec![el(&[4, 1, 4]), c.zero(), el(&[1, 4, 1]), c.zero()],
        "G row 1 differs"
    );
    ensure!(
        h[0] == vec![el(&[1, 1]), c.zero(), el(&[1, 1]), c.zero()],
        "H row 1 differs"
    );
    let g_plain = form.untwisted_generator_matrix(4).unwrap();
    let h_plain = form.untwisted_parity_check(4).unwrap();
    ensure!(
        g_plain[1] == vec![c.zero(), el(&[4, 1, 4]), c.zero(), el(&[1, 4, 1])],
        "untwisted G row 2 differs"
    );
    ensure!(
        g[1] != g_plain[1] && h[1] != h_plain[1],
        "twisted and untwisted row 2 agree"
    );
    let show =
        |row: &[ChainRingElement]| format!("({})", row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "));
    Ok(format!(
        "G row 2: x·g = {} vs shifted row 1 = {}; H row 2: x·k = {} vs shifted row 1 = {}",
        show(&g[1]),
        show(&g_plain[1]),
        show(&h[1]),
        show(&h_plain[1])
    ))
}

fn random_elem(rng: &mut ChaCha8Rng, c: &RingContext) -> ChainRingElement {
    let coeffs: Vec<u32> = (0..c.k()).map(|_| rng.gen_range(0..c.p())).collect();
    c.element(&coeffs).unwrap()
}

fn random_poly(rng: &mut ChaCha8Rng, c: &RingContext, max_deg: usize) -> SkewPoly {
    let deg = rng.gen_range(0..=max_deg);
    SkewPoly::new(*c, (0..=deg).map(|_| random_elem(rng, c)).collect()).unwrap()
}

fn random_unit_leading(rng: &mut ChaCha8Rng, c: &RingContext, deg: usize) -> SkewPoly {
    let mut coeffs: Vec<ChainRingElement> = (0..deg).map(|_| random_elem(rng, c)).collect();
    loop {
        let lead = random_elem(rng, c);
        if c.is_unit(&lead) {
            coeffs.push(lead);
            break;
        }
    }
    SkewPoly::new(*c, coeffs).unwrap()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rings = [(3i64, 2usize, 2i64), (3, 3, 2), (5, 3, 4)];
    let mut checked = 0;
    for round in 0..10_000 {
        let (p, k, s) = rings[round % 3];
        let naive = Naive::new(p, k, s);
        let c = naive.ctx();
        let f = random_poly(&mut rng, &c, 8);
        let g_deg = rng.gen_range(0..=4);
        let g = random_unit_leading(&mut rng, &c, g_deg);
        let (q, r) = f.right_divide(&g).map_err(|e| e.to_string())?;
        ensure!(r.degree().is_none_or(|d| d < g_deg), "right remainder too large");
        let rebuilt = naive.add(
            &naive.mul(&naive.naive_poly(&q), &naive.naive_poly(&g)),
            &naive.naive_poly(&r),
        );
        ensure!(rebuilt == naive.naive_poly(&f), "f ≠ q·g + r for f = {f}, g = {g}");
        let (q, r) = f.left_divide(&g).map_err(|e| e.to_string())?;
        ensure!(r.degree().is_none_or(|d| d < g_deg), "left remainder too large");
        let rebuilt = naive.add(
            &naive.mul(&naive.naive_poly(&g), &naive.naive_poly(&q)),
            &naive.naive_poly(&r),
        );
        ensure!(rebuilt == naive.naive_poly(&f), "f ≠ g·q + r for f = {f}, g = {g}");
        checked += 1;
    }

    // uniqueness over (3, 2, 2): for every unit-leading g of degree 1..=3, the maps
    // (q, r) ↦ q·g + r and (q, r) ↦ g·q + r are injective on deg f ≤ 3
    let naive = Naive::new(3, 2, 2);
    let elems: Vec<Vec<i64>> = (0..9).map(|i| vec![i % 3, i / 3]).collect();
    let index = |f: &Poly| -> usize {
        f.iter()
            .enumerate()
            .map(|(i, c)| (c[0] + 3 * c[1]) as usize * 9usize.pow(i as u32))
            .sum()
    };
    let decode_index = |mut idx: usize, len: usize| -> Poly {
        (0..len)
            .map(|_| {
                let e = elems[idx % 9].clone();
                idx /= 9;
                e
            })
            .collect()
    };
    let mut divisors = 0;
    for g_deg in 1..=3usize {
        for g_idx in 0..9usize.pow(g_deg as u32 + 1) {
            let g = decode_index(g_idx, g_deg + 1);
            if g[g_deg][0] == 0 {
                continue;
            }
            divisors += 1;
            let q_len = 4 - g_deg;
            for left in [false, true] {
                let mut seen = vec![false; 9usize.pow(4)];
                for q_idx in 0..9usize.pow(q_len as u32) {
                    let q = naive.trim(decode_index(q_idx, q_len));
                    let prod = if left { naive.mul(&g, &q) } else { naive.mul(&q, &g) };
                    for r_idx in 0..9usize.pow(g_deg as u32) {
                        let r = decode_index(r_idx, g_deg);
                        let f = naive.add(&prod, &r);
                        let slot = index(&f);
                        ensure!(
                            !seen[slot],
                            "two quotient/remainder pairs give the same f for g = {:?}",
                            g
                        );
                        seen[slot] = true;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{checked} random instances reconstruct exactly; uniqueness holds for all {divisors} divisors over (3,2,2)"
    ))
}

fn criterion_8() -> Outcome {
    let mut units = 0;
    for s in [1i64, 2] {
        let naive = Naive::new(3, 2, s);
        let all: Vec<Poly> = (0..729usize)
            .map(|mut idx| {
                let f: Poly = (0..3)
                    .map(|_| {
                        let e = vec![(idx % 3) as i64, (idx / 3 % 3) as i64];
                        idx /= 9;
                        e
                    })
                    .collect();
                naive.trim(f)
            })
            .collect();
        let one: Poly = vec![vec![1, 0]];
        for f in &all {
            let has_inverse = all.iter().any(|h| naive.mul(f, h) == one && naive.mul(h, f) == one);
            let claimed = naive.lib_poly(f).is_unit();
            ensure!(
                has_inverse == claimed,
                "s = {s}: {:?} classified {claimed}, search says {has_inverse}",
                f
            );
            if claimed {
                units += 1;
                let inv = naive.lib_poly(f).inverse_unit().map_err(|e| e.to_string())?;
                ensure!(
                    naive.mul(f, &naive.naive_poly(&inv)) == one,
                    "inverse_unit wrong for {:?}",
                    f
                );
            }
        }
    }
    Ok(format!(
        "729 polynomials of degree ≤ 2 for s = 1 and s = 2 agree; {units} units in total"
    ))
}

fn criterion_9() -> Outcome {
    let c = ctx(3, 3, 2);
    let elems: Vec<ChainRingElement> = c.elements().collect();
    let u: Vec<SkewPoly> = (1..=2).map(|i| SkewPoly::constant(c, c.u_pow(i))).collect();
    let total = 27usize.pow(5);
    for idx in 0..total {
        let mut rest = idx;
        let coeffs: Vec<ChainRingElement> = (0..5)
            .map(|_| {
                let e = elems[rest % 27].clone();
                rest /= 27;
                e
            })
            .collect();
        let f = SkewPoly::new(c, coeffs).unwrap();
        for (i, ui) in [1usize, 2].iter().zip(&u) {
            let fi = f.u_commute(*i).map_err(|e| e.to_string())?;
            ensure!(
                f.mul(ui).unwrap() == ui.mul(&fi).unwrap(),
                "f·u^{i} ≠ u^{i}·f_{i} for f = {f}"
            );
        }
    }
    Ok(format!("{total} polynomials, i = 1 and 2"))
}

fn case_formula(form: &GeneratorForm, p: u32, k: usize, n: usize) -> BigUint {
    let pk = |e: usize| BigUint::from(p).pow(e as u32);
    match form {
        GeneratorForm::CaseI { torsion, r, .. } => pk(k - torsion).pow((n - r) as u32),
        GeneratorForm::CaseII { r, .. } => pk(k).pow((n - r) as u32),
        GeneratorForm::CaseIII { torsion, r, t, .. } => pk(k).pow((n - r) as u32) * pk(k - torsion).pow((r - t) as u32),
        GeneratorForm::Layered { levels } => {
            let mut prev = n;
            let mut total = BigUint::from(1u32);
            for l in levels {
                total *= pk(k - l.layer).pow((prev - l.degree) as u32);
                prev = l.degree;
            }
            total
        }
    }
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut by_case: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut enumerated = 0;
    let mut tested = 0;
    while tested < 120 {
        let p = if rng.gen_bool(0.5) { 3u64 } else { 5 };
        let k = rng.gen_range(1..=3usize);
        let s = rng.gen_range(1..p);
        let n = rng.gen_range(2..=6usize);
        let c = ctx(p, k, s);
        let gens: Vec<SkewPoly> = match tested % 4 {
            0 => vec![random_poly(&mut rng, &c, n - 1)],
            1 => {
                let i = rng.gen_range(0..k);
                vec![random_poly(&mut rng, &c, n - 1).mul_u_pow(i)]
            }
            2 => {
                let d = rng.gen_range(1..n);
                let h = random_unit_leading(&mut rng, &c, d);
                let a = random_poly(&mut rng, &c, d).mul_u_pow(1);
                vec![h, a]
            }
            _ => (0..rng.gen_range(2..=3))
                .map(|_| random_poly(&mut rng, &c, n - 1))
                .collect(),
        };
        let code = SkewCyclicCode::from_generators(c, n, &gens).unwrap();
        if code.is_zero_code() {
            continue;
        }
        tested += 1;
        let form = code.classify().map_err(|e| e.to_string())?;
        *by_case.entry(form.case_name()).or_insert(0) += 1;
        let regenerated = form.regenerate(n).unwrap();
        ensure!(
            regenerated.same_codewords(&code),
            "regenerated code differs for {:?}",
            gens
        );
        for g in &gens {
            ensure!(
                regenerated.contains_poly(g).unwrap(),
                "generator {g} missing from regenerated code"
            );
        }
        for b in code.basis_words() {
            ensure!(code.contains(&tau(&c, &b)), "basis word not τ-closed");
            let ub = Codeword::from_poly(&b.to_poly(c).mul_u_pow(1), n).unwrap();
            ensure!(code.contains(&ub), "basis word not closed under u");
        }
        let formula = case_formula(&form, c.p(), k, n);
        ensure!(
            code.size() == formula,
            "|C| = {} but the case formula gives {formula}",
            code.size()
        );
        if code.size() <= BigUint::from(50_000u32) {
            let words = regenerated.enumerate_codewords().unwrap();
            let set: HashSet<&Codeword> = words.iter().collect();
            ensure!(
                BigUint::from(set.len()) == formula,
                "enumerated {} codewords, formula {formula}",
                set.len()
            );
            ensure!(
                words.iter().all(|w| set.contains(&tau(&c, w))),
                "enumerated set not τ-closed"
            );
            ensure!(
                words.iter().all(|w| code.contains(w)),
                "regenerated codeword outside the original code"
            );
            enumerated += 1;
        }
    }
    for case in ["I", "II", "III"] {
        ensure!(
            by_case.get(case).copied().unwrap_or(0) > 0,
            "no random code of case {case}: {:?}",
            by_case
        );
    }
    Ok(format!("{tested} codes {:?}, {enumerated} enumerated", by_case))
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("encode golden codeword", criterion_1),
        ("decode golden word", criterion_2),
        ("Case III cardinality by enumeration", criterion_3),
        ("x^4 - 1 factor families and their codes", criterion_4),
        ("linear factors of x^2 + 1", criterion_5),
        ("Case II generator and parity-check rows", criterion_6),
        ("division algorithm", criterion_7),
        ("unit characterization", criterion_8),
        ("u-commutation identity", criterion_9),
        ("classification round trip on random codes", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (number, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name} ({secs:.1}s): {detail}", number + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({secs:.1}s): {reason}", number + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
