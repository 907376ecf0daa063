//! Right factorizations `T = f1·f2` in `R_j[x;θ]`, found by exhaustive search,
//! by lifting a lower-level factorization through extra `u`-layers, and the
//! two fixed families used for the length-4 example over `(p, k, s) = (5, 3, 4)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{ChainRingElement, RingContext};
use crate::skew_code::{CodeStats, SkewCyclicCode};
use crate::skew_poly::SkewPoly;

/// `target = f1·f2` over `R_level`, where `level` is the nilpotency of the polynomials' ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorPair {
    pub f1: SkewPoly,
    pub f2: SkewPoly,
    pub target: SkewPoly,
}

impl FactorPair {
    /// Builds a pair at `level`, reducing all three polynomials into `R_level[x;θ]`.
    pub fn new(f1: &SkewPoly, f2: &SkewPoly, target: &SkewPoly, level: usize) -> Result<Self> {
        Ok(Self {
            f1: f1.to_level(level)?,
            f2: f2.to_level(level)?,
            target: target.to_level(level)?,
        })
    }

    /// The pair for `x^n - 1` with `n = deg f1 + deg f2`.
    pub fn for_xn_minus_1(f1: &SkewPoly, f2: &SkewPoly, level: usize) -> Result<Self> {
        let n = f1.degree().unwrap_or(0) + f2.degree().unwrap_or(0);
        let target = SkewPoly::x_pow_minus_one(*f1.ctx(), n);
        Self::new(f1, f2, &target, level)
    }

    pub fn level(&self) -> usize {
        self.f1.ctx().k()
    }

    pub fn n(&self) -> usize {
        self.target.degree().unwrap_or(0)
    }

    /// The pair reduced modulo `u^level`.
    pub fn reduce(&self, level: usize) -> Result<Self> {
        Self::new(&self.f1, &self.f2, &self.target, level)
    }
}

/// Multiplies and compares exactly; also requires unit leading coefficients and matching degrees.
pub fn verify_factorization(pair: &FactorPair) -> bool {
    let (Some(d1), Some(d2), Some(n)) = (pair.f1.degree(), pair.f2.degree(), pair.target.degree()) else {
        return false;
    };
    if d1 + d2 != n || !pair.f1.is_unit_leading() || !pair.f2.is_unit_leading() {
        return false;
    }
    pair.f1.mul(&pair.f2).is_ok_and(|prod| prod == pair.target)
}

fn checked_count(base: u64, exponent: usize, factor: u64, guard: u64) -> Result<()> {
    let total = BigUint::from(base).pow(exponent as u32) * BigUint::from(factor);
    if total > BigUint::from(guard) {
        return Err(Error::GuardExceeded {
            required: total.to_string(),
            guard,
        });
    }
    Ok(())
}

/// Calls `visit` on every `Σ_{i<len} c_i x^i` with each `c_i` drawn from `choices[i]`.
fn for_each_poly(
    ctx: RingContext,
    choices: &[Vec<ChainRingElement>],
    mut visit: impl FnMut(SkewPoly) -> Result<()>,
) -> Result<()> {
    if choices.iter().any(Vec::is_empty) {
        return Ok(());
    }
    let mut idx = vec![0usize; choices.len()];
    loop {
        let coeffs = idx.iter().zip(choices).map(|(&i, c)| c[i].clone()).collect();
        visit(SkewPoly::trimmed(ctx, coeffs))?;
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(());
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// All pairs with `deg f1 = d1` and `f1·f2 = x^n - 1` over `R_level`.
pub fn enumerate_factor_pairs(
    ctx: RingContext,
    n: usize,
    d1: usize,
    level: usize,
    guard: u64,
) -> Result<Vec<FactorPair>> {
    let ring = ctx.with_level(level)?;
    enumerate_factor_pairs_of(&SkewPoly::x_pow_minus_one(ring, n), d1, guard)
}

/// All pairs with `deg f1 = d1` and `f1·f2 = target`, over the ring of `target`.
///
/// Enumerates whichever factor has the smaller degree (the right factor on a
/// tie) and recovers the other by division.
pub fn enumerate_factor_pairs_of(target: &SkewPoly, d1: usize, guard: u64) -> Result<Vec<FactorPair>> {
    let ring = *target.ctx();
    let n = target.degree().ok_or(Error::DivisionByZero)?;
    if !target.is_unit_leading() {
        return Err(Error::NonUnitLeading(target.to_string()));
    }
    if d1 > n {
        return Ok(Vec::new());
    }
    let d2 = n - d1;
    let enumerate_right = d2 <= d1;
    let d = if enumerate_right { d2 } else { d1 };
    let q = u64::from(ring.p()).pow(ring.k() as u32);
    let units = q - q / u64::from(ring.p());
    checked_count(q, d, units, guard)?;

    let all: Vec<ChainRingElement> = ring.elements().collect();
    let unit_list: Vec<ChainRingElement> = ring.units().collect();
    let mut choices = vec![all; d];
    choices.push(unit_list);

    let mut out = Vec::new();
    for_each_poly(ring, &choices, |candidate| {
        let (other, rem) = if enumerate_right {
            target.right_divide(&candidate)?
        } else {
            target.left_divide(&candidate)?
        };
        if rem.is_zero() {
            let (f1, f2) = if enumerate_right {
                (other, candidate)
            } else {
                (candidate, other)
            };
            let pair = FactorPair {
                f1,
                f2,
                target: target.clone(),
            };
            if !verify_factorization(&pair) {
                return Err(Error::Inconsistent(format!(
                    "search produced an invalid pair {} · {}",
                    pair.f1, pair.f2
                )));
            }
            out.push(pair);
        }
        Ok(())
    })?;
    Ok(out)
}

/// Every lift of a verified pair to `level`: pairs over `R_level` that reduce
/// to `pair` modulo `u^(pair.level())`.
///
/// The lower-degree factor (the right factor on a tie) is corrected by
/// `u^j0·c(x)` with `deg c ≤` its degree, and the other factor is recovered
/// by division.
pub fn lift_factorization(pair: &FactorPair, level: usize, guard: u64) -> Result<Vec<FactorPair>> {
    if !verify_factorization(pair) {
        return Err(Error::NotDivisor(format!(
            "{} · {} is not {}",
            pair.f1, pair.f2, pair.target
        )));
    }
    let from = pair.level();
    if level < from {
        return Err(Error::OutOfRange {
            index: level,
            lo: from,
            hi: usize::MAX,
        });
    }
    let ring = pair.f1.ctx().with_level(level)?;
    let target = pair.target.to_level(level)?;
    if level == from {
        return Ok(vec![pair.clone()]);
    }
    let (d1, d2) = (pair.f1.degree().unwrap_or(0), pair.f2.degree().unwrap_or(0));
    let lift_right = d2 <= d1;
    let (base, other_base) = if lift_right {
        (&pair.f2, &pair.f1)
    } else {
        (&pair.f1, &pair.f2)
    };
    let d = base.degree().unwrap_or(0);
    let q = u64::from(ring.p()).pow((level - from) as u32);
    checked_count(q, d + 1, 1, guard)?;

    let corrections: Vec<ChainRingElement> = ring
        .elements()
        .filter(|e| e.coeffs()[..from].iter().all(|&c| c == 0))
        .collect();
    let choices = vec![corrections; d + 1];
    let base_lifted = base.to_level(level)?;
    let mut out = Vec::new();
    for_each_poly(ring, &choices, |correction| {
        let candidate = base_lifted.add(&correction)?;
        let (other, rem) = if lift_right {
            target.right_divide(&candidate)?
        } else {
            target.left_divide(&candidate)?
        };
        if !rem.is_zero() || other.to_level(from)? != *other_base {
            return Ok(());
        }
        let (f1, f2) = if lift_right {
            (other, candidate)
        } else {
            (candidate, other)
        };
        let lifted = FactorPair {
            f1,
            f2,
            target: target.clone(),
        };
        if !verify_factorization(&lifted) {
            return Err(Error::Inconsistent(format!(
                "lift produced an invalid pair {} · {}",
                lifted.f1, lifted.f2
            )));
        }
        out.push(lifted);
        Ok(())
    })?;
    Ok(out)
}

/// Lifts a factorization `g1·g2 = x^n - 1` over `F_p` to `R_level`. The
/// polynomials are read modulo `u` in their own ring, whose `s` fixes `θ`.
pub fn lift_from_base(g1: &SkewPoly, g2: &SkewPoly, level: usize, guard: u64) -> Result<Vec<FactorPair>> {
    let pair = FactorPair::for_xn_minus_1(g1, g2, 1)?;
    lift_factorization(&pair, level, guard)
}

type QuadraticTemplate = fn(i64) -> [[i64; 2]; 3];
type LinearTemplate = fn(i64, i64) -> [[i64; 2]; 2];

/// The four one-parameter families `x^4 - 1 = f1·f2` over `R_2`, `(p, s) = (5, 4)`,
/// as `[a0 + u b0, a1 + u b1, a2 + u b2]` in ascending degree.
const QUADRATIC_FAMILIES: [(QuadraticTemplate, QuadraticTemplate); 4] = [
    (|k| [[1, k], [0, 0], [1, k]], |k| [[4, k], [0, 0], [1, -k]]),
    (|k| [[1, k], [0, 0], [4, -k]], |k| [[4, k], [0, 0], [4, k]]),
    (|k| [[2, k], [0, 0], [2, k]], |k| [[2, -k], [0, 0], [3, k]]),
    (|k| [[3, k], [0, 0], [2, -k]], |k| [[3, -k], [0, 0], [3, -k]]),
];

/// The four two-parameter families `x^2 + 1 = ℓ1·ℓ2` over `R_2`, `(p, s) = (5, 4)`.
const LINEAR_FAMILIES: [(LinearTemplate, LinearTemplate); 4] = [
    (|t, s| [[2, s], [1, t]], |t, s| [[3, s], [1, t]]),
    (|t, s| [[2, s], [4, t]], |t, s| [[3, s], [4, t]]),
    (|t, s| [[1, -s], [2, t]], |t, s| [[1, s], [3, 5 - t]]),
    (|t, s| [[4, -s], [2, t]], |t, s| [[4, s], [3, 5 - t]]),
];

fn from_template(ring: RingContext, coeffs: &[[i64; 2]]) -> Result<SkewPoly> {
    let layers: Vec<&[i64]> = coeffs.iter().map(|c| c.as_slice()).collect();
    SkewPoly::from_ints(ring, &layers)
}

/// One instantiated family member with the codes `⟨u·f1⟩`, `⟨u·f2⟩` over `R_3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRow {
    pub family: usize,
    pub parameters: Vec<i64>,
    pub f1: String,
    pub f2: String,
    pub verified: bool,
    pub found_by_search: bool,
    pub code_stats: Vec<CodeStats>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub family: usize,
    pub distinct_factors: usize,
    pub all_verified: bool,
}

/// The linear factors of `x^2 + 1` and the codes `⟨u·ℓ⟩` of length 4 over `R_3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearCensus {
    pub pairs: usize,
    pub pairs_verified: usize,
    pub distinct_linear_factors: usize,
    /// Distinct codes as codeword sets; many generators give the same code.
    pub distinct_codes: usize,
    /// Rank (size of the minimal generating set) → number of generators with that rank.
    pub rank_counts: BTreeMap<usize, usize>,
    /// Code size → number of generators with that size.
    pub cardinality_counts: BTreeMap<String, usize>,
    /// Generators whose code was enumerated in full, with size equal to the formula.
    pub enumerated: usize,
    /// Linear right factors of `x^2 + 1` over `R_2` found by exhaustive search.
    pub search_total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub p: u32,
    pub k: usize,
    pub s: u32,
    pub n: usize,
    pub factor_level: usize,
    pub rows: Vec<FactorRow>,
    pub families: Vec<FamilySummary>,
    pub census: LinearCensus,
}

/// Instantiates the quadratic families of `x^4 - 1` and the linear families of
/// `x^2 + 1` over `R_2`, verifies every product, cross-checks membership in the
/// exhaustive search, and computes the codes `⟨u·f⟩` over `R_3`.
pub fn table1_report(ctx: RingContext, guard: u64) -> Result<Table1Report> {
    if (ctx.p(), ctx.k(), ctx.s()) != (5, 3, 4) {
        return Err(Error::InvalidForm(format!(
            "the factor families are defined for (p, k, s) = (5, 3, 4), not ({}, {}, {})",
            ctx.p(),
            ctx.k(),
            ctx.s()
        )));
    }
    let n = 4;
    let level = 2;
    let ring = ctx.with_level(level)?;
    let target = SkewPoly::x_pow_minus_one(ring, n);
    let searched: HashSet<(SkewPoly, SkewPoly)> = enumerate_factor_pairs(ctx, n, 2, level, guard)?
        .into_iter()
        .map(|p| (p.f1, p.f2))
        .collect();

    let code_of = |f: &SkewPoly| -> Result<SkewCyclicCode> {
        let g = f.to_level(ctx.k())?.mul_u_pow(1);
        Ok(SkewCyclicCode::from_generators(ctx, n, &[g])?.with_guard(guard))
    };

    let mut rows = Vec::new();
    let mut families = Vec::new();
    for (index, (t1, t2)) in QUADRATIC_FAMILIES.iter().enumerate() {
        let mut factors = BTreeSet::new();
        let mut all_verified = true;
        for param in 0..i64::from(ctx.p()) {
            let f1 = from_template(ring, &t1(param))?;
            let f2 = from_template(ring, &t2(param))?;
            let pair = FactorPair::new(&f1, &f2, &target, level)?;
            let verified = verify_factorization(&pair);
            all_verified &= verified;
            let code_stats = vec![code_of(&f1)?.stats()?, code_of(&f2)?.stats()?];
            rows.push(FactorRow {
                family: index + 1,
                parameters: vec![param],
                f1: f1.to_string(),
                f2: f2.to_string(),
                verified,
                found_by_search: searched.contains(&(f1.clone(), f2.clone())),
                code_stats,
            });
            factors.insert(f1);
            factors.insert(f2);
        }
        families.push(FamilySummary {
            family: index + 1,
            distinct_factors: factors.len(),
            all_verified,
        });
    }

    let census = linear_census(ctx, guard)?;
    Ok(Table1Report {
        p: ctx.p(),
        k: ctx.k(),
        s: ctx.s(),
        n,
        factor_level: level,
        rows,
        families,
        census,
    })
}

fn linear_census(ctx: RingContext, guard: u64) -> Result<LinearCensus> {
    let n = 4;
    let ring = ctx.with_level(2)?;
    let target = SkewPoly::from_base(ring, &[1, 0, 1]);
    let p = i64::from(ctx.p());
    let mut pairs = 0;
    let mut pairs_verified = 0;
    let mut linear = BTreeSet::new();
    for (t1, t2) in LINEAR_FAMILIES {
        for t in 0..p {
            for s in 0..p {
                let l1 = from_template(ring, &t1(t, s))?;
                let l2 = from_template(ring, &t2(t, s))?;
                pairs += 1;
                if verify_factorization(&FactorPair::new(&l1, &l2, &target, 2)?) {
                    pairs_verified += 1;
                }
                linear.insert(l1);
                linear.insert(l2);
            }
        }
    }
    let search_total = enumerate_factor_pairs_of(&target, 1, guard)?
        .into_iter()
        .map(|pair| pair.f2)
        .collect::<BTreeSet<_>>()
        .len();

    let mut fingerprints = HashSet::new();
    let mut rank_counts = BTreeMap::new();
    let mut cardinality_counts = BTreeMap::new();
    let mut enumerated = 0;
    for l in &linear {
        let code = SkewCyclicCode::from_generators(ctx, n, &[l.to_level(ctx.k())?.mul_u_pow(1)])?.with_guard(guard);
        let form = code.classify()?;
        let size = form.cardinality(n)?;
        *rank_counts.entry(form.rank(n)?).or_insert(0) += 1;
        *cardinality_counts.entry(size.to_string()).or_insert(0) += 1;
        match code.enumerate_codewords() {
            Ok(words) if BigUint::from(words.len()) == size => enumerated += 1,
            Ok(_) | Err(Error::GuardExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
        fingerprints.insert(code.fingerprint());
    }
    Ok(LinearCensus {
        pairs,
        pairs_verified,
        distinct_linear_factors: linear.len(),
        distinct_codes: fingerprints.len(),
        rank_counts,
        cardinality_counts,
        enumerated,
        search_total,
    })
}

impl Table1Report {
    /// A plain-text table, one line per family member.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "x^{} - 1 = f1·f2 over R_{}, codes <u f> of length {} over R_{} (p = {}, s = {})",
            self.n, self.factor_level, self.n, self.k, self.p, self.s
        );
        let _ = writeln!(
            out,
            "{:<6} {:<5} {:<26} {:<26} {:<8} rank  |C|  d",
            "family", "param", "f1", "f2", "ok"
        );
        for row in &self.rows {
            let stats: Vec<String> = row
                .code_stats
                .iter()
                .map(|s| {
                    let d = s.min_distance.map_or("-".to_string(), |d| d.to_string());
                    format!("{} {} {}", s.rank, s.cardinality, d)
                })
                .collect();
            let _ = writeln!(
                out,
                "{:<6} {:<5} {:<26} {:<26} {:<8} {}",
                row.family,
                row.parameters.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
                row.f1,
                row.f2,
                row.verified && row.found_by_search,
                stats.join(" | ")
            );
        }
        for fam in &self.families {
            let _ = writeln!(
                out,
                "family {}: {} distinct factors, all verified: {}",
                fam.family, fam.distinct_factors, fam.all_verified
            );
        }
        let c = &self.census;
        let _ = writeln!(
            out,
            "x^2 + 1: {} pairs ({} verified), {} distinct linear factors ({} found by search), {} distinct codes <u l>",
            c.pairs, c.pairs_verified, c.distinct_linear_factors, c.search_total, c.distinct_codes
        );
        let _ = writeln!(
            out,
            "ranks: {:?}; sizes: {:?}; enumerated: {}",
            c.rank_counts, c.cardinality_counts, c.enumerated
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::skew_code::DEFAULT_GUARD;

    fn ctx(p: u64, k: usize, s: u64) -> RingContext {
        RingContext::new(p, k, s).unwrap()
    }

    #[test]
    fn verify_examples() {
        let f5 = ctx(5, 1, 1);
        let pair = FactorPair::for_xn_minus_1(&parse_poly(f5, "x^2-1").unwrap(), &parse_poly(f5, "x^2+1").unwrap(), 1)
            .unwrap();
        assert!(verify_factorization(&pair));

        let r2 = ctx(5, 2, 4);
        for k in 0..5 {
            let f1 = from_template(r2, &QUADRATIC_FAMILIES[0].0(k)).unwrap();
            let f2 = from_template(r2, &QUADRATIC_FAMILIES[0].1(k)).unwrap();
            assert!(verify_factorization(&FactorPair::for_xn_minus_1(&f1, &f2, 2).unwrap()));
        }

        let f3 = ctx(3, 1, 1);
        let wrong =
            FactorPair::for_xn_minus_1(&parse_poly(f3, "x-1").unwrap(), &parse_poly(f3, "x-1").unwrap(), 1).unwrap();
        assert!(!verify_factorization(&wrong));
    }

    #[test]
    fn base_field_search() {
        let pairs = enumerate_factor_pairs(ctx(3, 1, 1), 2, 1, 1, DEFAULT_GUARD).unwrap();
        let f3 = ctx(3, 1, 1);
        let monic: BTreeSet<(SkewPoly, SkewPoly)> = pairs
            .iter()
            .filter(|p| p.f1.leading_coefficient() == Some(&f3.one()))
            .map(|p| (p.f1.clone(), p.f2.clone()))
            .collect();
        let expected: BTreeSet<_> = [("x-1", "x+1"), ("x+1", "x-1")]
            .iter()
            .map(|(a, b)| (parse_poly(f3, a).unwrap(), parse_poly(f3, b).unwrap()))
            .collect();
        assert_eq!(monic, expected);
        // the scalar 2 can move between the factors
        assert_eq!(pairs.len(), 4);
    }

    #[test]
    fn search_finds_the_families() {
        let c = ctx(5, 3, 4);
        let pairs = enumerate_factor_pairs(c, 4, 2, 2, DEFAULT_GUARD).unwrap();
        let found: HashSet<(SkewPoly, SkewPoly)> = pairs.iter().map(|p| (p.f1.clone(), p.f2.clone())).collect();
        let r2 = c.with_level(2).unwrap();
        for (t1, t2) in QUADRATIC_FAMILIES {
            for k in 0..5 {
                let f1 = from_template(r2, &t1(k)).unwrap();
                let f2 = from_template(r2, &t2(k)).unwrap();
                assert!(found.contains(&(f1, f2)));
            }
        }
        for pair in &pairs {
            assert!(verify_factorization(&pair.reduce(1).unwrap()));
        }
    }

    #[test]
    fn target_override_gives_linear_families() {
        let r2 = ctx(5, 2, 4);
        let target = SkewPoly::from_base(r2, &[1, 0, 1]);
        let pairs = enumerate_factor_pairs_of(&target, 1, DEFAULT_GUARD).unwrap();
        let found: HashSet<(SkewPoly, SkewPoly)> = pairs.iter().map(|p| (p.f1.clone(), p.f2.clone())).collect();
        for (t1, t2) in LINEAR_FAMILIES {
            for t in 0..5 {
                for s in 0..5 {
                    let l1 = from_template(r2, &t1(t, s)).unwrap();
                    let l2 = from_template(r2, &t2(t, s)).unwrap();
                    assert!(found.contains(&(l1, l2)), "family member ({t}, {s}) missing");
                }
            }
        }
    }

    #[test]
    fn lifting() {
        // base polynomials live in the target ring family so that θ carries over
        let r2 = ctx(5, 2, 4);
        let (g1, g2) = (parse_poly(r2, "x^2-1").unwrap(), parse_poly(r2, "x^2+1").unwrap());
        let lifts = lift_from_base(&g1, &g2, 2, DEFAULT_GUARD).unwrap();
        assert!(!lifts.is_empty());
        for pair in &lifts {
            assert!(verify_factorization(pair));
            assert_eq!(pair.f1.to_level(1).unwrap(), g1.to_level(1).unwrap());
            assert_eq!(pair.f2.to_level(1).unwrap(), g2.to_level(1).unwrap());
        }
        // family 1 with its factors swapped: (1 - uk)x^2 + 4 + uk times (1 + uk)x^2 + 1 + uk
        for k in 0..5 {
            let f1 = from_template(r2, &QUADRATIC_FAMILIES[0].1(k)).unwrap();
            let f2 = from_template(r2, &QUADRATIC_FAMILIES[0].0(k)).unwrap();
            assert!(lifts.contains(&FactorPair::for_xn_minus_1(&f1, &f2, 2).unwrap()));
        }

        let r3 = ctx(3, 2, 2);
        let (g1, g2) = (
            parse_poly(r3, "x^2-x+1").unwrap(),
            parse_poly(r3, "x^4+x^3-x-1").unwrap(),
        );
        let same = lift_from_base(&g1, &g2, 1, DEFAULT_GUARD).unwrap();
        assert_eq!(same, vec![FactorPair::for_xn_minus_1(&g1, &g2, 1).unwrap()]);
        let lifts = lift_from_base(&g1, &g2, 2, DEFAULT_GUARD).unwrap();
        assert!(lifts.contains(&FactorPair::for_xn_minus_1(&g1, &g2, 2).unwrap()));
        for pair in &lifts {
            assert!(verify_factorization(&pair.reduce(1).unwrap()));
        }

        let bad = lift_from_base(
            &parse_poly(r3, "x-1").unwrap(),
            &parse_poly(r3, "x-1").unwrap(),
            2,
            DEFAULT_GUARD,
        );
        assert!(matches!(bad, Err(Error::NotDivisor(_))));
    }

    #[test]
    fn guard_applies_to_search() {
        let err = enumerate_factor_pairs(ctx(5, 3, 4), 4, 2, 3, 1000).unwrap_err();
        assert!(matches!(err, Error::GuardExceeded { .. }));
    }

    #[test]
    fn report_rejects_other_rings() {
        assert!(table1_report(ctx(3, 3, 2), DEFAULT_GUARD).is_err());
    }
}
