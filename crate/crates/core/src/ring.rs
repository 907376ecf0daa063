//! Arithmetic in the prime field `F_p` and the chain ring `R_k = F_p[u]/<u^k>`,
//! together with the automorphism family `θ(u) = s·u`.
//!
//! A [`RingContext`] is a small `Copy` value; elements do not carry it, so every
//! element operation goes through the context that owns the element. Elements
//! are always stored fully reduced, which makes equality structural.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// An element of `F_p`, always in `[0, p)`.
pub type FieldElement = u32;

/// Parameters `(p, k, s)` of the ring `R_k` and its automorphism `θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingContext {
    p: u32,
    k: usize,
    s: u32,
    order: u32,
}

impl RingContext {
    /// Validates `(p, k, s)` and computes the order of `θ`.
    ///
    /// `s` is reduced modulo `p` first. `p = 2` is accepted; there the only
    /// automorphism is the identity and codes are ordinary cyclic codes.
    pub fn new(p: u64, k: usize, s: u64) -> Result<Self> {
        if p > u64::from(u32::MAX) {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 1 {
            return Err(Error::InvalidNilpotency);
        }
        let p32 = p as u32;
        let s32 = (s % p) as u32;
        if s32 == 0 {
            return Err(Error::DegenerateAutomorphism { p, s });
        }
        let mut order = 1;
        let mut acc = s32;
        while acc != 1 {
            acc = mul_mod(acc, s32, p32);
            order += 1;
        }
        Ok(Self {
            p: p32,
            k,
            s: s32,
            order,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Multiplicative order `m` of `s` modulo `p`; `θ^m` is the identity.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// True when `θ` acts trivially on `R_k` (either `s = 1` or `k = 1`).
    pub fn theta_is_identity(&self) -> bool {
        self.s == 1 || self.k == 1
    }

    /// The same `p` and `s` over `R_level = R_k / <u^level>`.
    pub fn with_level(&self, level: usize) -> Result<Self> {
        if level < 1 {
            return Err(Error::InvalidNilpotency);
        }
        Ok(Self { k: level, ..*self })
    }

    /// The residue field `F_p`, seen as `R_1`.
    pub fn base_field(&self) -> Self {
        Self { k: 1, ..*self }
    }

    // ---- F_p ----

    pub fn fp(&self, v: i64) -> FieldElement {
        v.rem_euclid(i64::from(self.p)) as u32
    }

    pub fn fp_add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    pub fn fp_sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.fp_add(a, self.fp_neg(b))
    }

    pub fn fp_neg(&self, a: FieldElement) -> FieldElement {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn fp_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        mul_mod(a, b, self.p)
    }

    pub fn fp_pow(&self, base: FieldElement, mut exp: u64) -> FieldElement {
        let mut result = 1 % self.p;
        let mut b = base % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.fp_mul(result, b);
            }
            b = self.fp_mul(b, b);
            exp >>= 1;
        }
        result
    }

    /// Inverse in `F_p`. Panics on zero.
    pub fn fp_inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse in F_p");
        self.fp_pow(a, u64::from(self.p) - 2)
    }

    /// `s^e mod p`.
    pub fn s_pow(&self, e: u64) -> FieldElement {
        self.fp_pow(self.s, e % u64::from(self.order))
    }

    // ---- R_k constructors ----

    pub fn zero(&self) -> ChainRingElement {
        ChainRingElement {
            coeffs: SmallVec::from_elem(0, self.k),
        }
    }

    pub fn one(&self) -> ChainRingElement {
        self.constant(1)
    }

    /// The embedding of `c ∈ F_p` into `R_k`.
    pub fn constant(&self, c: FieldElement) -> ChainRingElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    /// `u^j`, which is zero for `j ≥ k`.
    pub fn u_pow(&self, j: usize) -> ChainRingElement {
        let mut e = self.zero();
        if j < self.k {
            e.coeffs[j] = 1 % self.p;
        }
        e
    }

    /// Builds an element from exactly `k` coefficients, each already in `[0, p)`.
    pub fn element(&self, coeffs: &[u32]) -> Result<ChainRingElement> {
        if coeffs.len() != self.k {
            return Err(Error::WrongLength {
                expected: self.k,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::ContextMismatch);
        }
        Ok(ChainRingElement {
            coeffs: coeffs.iter().copied().collect(),
        })
    }

    /// Builds an element from up to `k` integer coefficients, reducing each mod `p`.
    /// Missing high layers are zero; extra layers are an error.
    pub fn element_reduced(&self, coeffs: &[i64]) -> Result<ChainRingElement> {
        if coeffs.len() > self.k {
            return Err(Error::WrongLength {
                expected: self.k,
                got: coeffs.len(),
            });
        }
        let mut e = self.zero();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *slot = self.fp(c);
        }
        Ok(e)
    }

    pub fn contains(&self, a: &ChainRingElement) -> bool {
        a.coeffs.len() == self.k && a.coeffs.iter().all(|&c| c < self.p)
    }

    fn check(&self, a: &ChainRingElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    // ---- R_k checked operations ----

    pub fn add(&self, a: &ChainRingElement, b: &ChainRingElement) -> Result<ChainRingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn sub(&self, a: &ChainRingElement, b: &ChainRingElement) -> Result<ChainRingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_unchecked(a, b))
    }

    /// Product in `R_k`: coefficient convolution with every `u^j`, `j ≥ k`, dropped.
    pub fn mul(&self, a: &ChainRingElement, b: &ChainRingElement) -> Result<ChainRingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub fn is_unit(&self, a: &ChainRingElement) -> bool {
        a.coeffs.first().is_some_and(|&c| c != 0)
    }

    /// Inverse of a unit, by back-substitution one `u`-layer at a time.
    pub fn inverse(&self, a: &ChainRingElement) -> Result<ChainRingElement> {
        self.check(a)?;
        if !self.is_unit(a) {
            return Err(Error::NotUnit(a.to_string()));
        }
        Ok(self.inverse_unchecked(a))
    }

    /// `θ^j(a)`: the `u^l` coefficient is scaled by `s^(j·l)`.
    pub fn theta(&self, a: &ChainRingElement, j: u64) -> Result<ChainRingElement> {
        self.check(a)?;
        Ok(self.theta_unchecked(a, j))
    }

    // ---- unchecked kernels used by the polynomial layer ----

    pub(crate) fn add_unchecked(&self, a: &ChainRingElement, b: &ChainRingElement) -> ChainRingElement {
        ChainRingElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.fp_add(x, y))
                .collect(),
        }
    }

    pub(crate) fn sub_unchecked(&self, a: &ChainRingElement, b: &ChainRingElement) -> ChainRingElement {
        ChainRingElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.fp_sub(x, y))
                .collect(),
        }
    }

    pub(crate) fn neg_unchecked(&self, a: &ChainRingElement) -> ChainRingElement {
        ChainRingElement {
            coeffs: a.coeffs.iter().map(|&x| self.fp_neg(x)).collect(),
        }
    }

    pub(crate) fn scale_unchecked(&self, c: FieldElement, a: &ChainRingElement) -> ChainRingElement {
        ChainRingElement {
            coeffs: a.coeffs.iter().map(|&x| self.fp_mul(c, x)).collect(),
        }
    }

    pub(crate) fn mul_unchecked(&self, a: &ChainRingElement, b: &ChainRingElement) -> ChainRingElement {
        let k = self.k;
        let mut out = self.zero();
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs[..k - i].iter().enumerate() {
                if y != 0 {
                    out.coeffs[i + j] = self.fp_add(out.coeffs[i + j], self.fp_mul(x, y));
                }
            }
        }
        out
    }

    /// Accumulates `a·b` into `acc`.
    pub(crate) fn mul_add_unchecked(&self, acc: &mut ChainRingElement, a: &ChainRingElement, b: &ChainRingElement) {
        let k = self.k;
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs[..k - i].iter().enumerate() {
                if y != 0 {
                    acc.coeffs[i + j] = self.fp_add(acc.coeffs[i + j], self.fp_mul(x, y));
                }
            }
        }
    }

    pub(crate) fn inverse_unchecked(&self, a: &ChainRingElement) -> ChainRingElement {
        // b_0 = a_0^{-1}; b_j = -a_0^{-1} · Σ_{i=1..j} a_i b_{j-i}
        let inv0 = self.fp_inv(a.coeffs[0]);
        let mut b = self.zero();
        b.coeffs[0] = inv0;
        for j in 1..self.k {
            let mut acc = 0;
            for i in 1..=j {
                acc = self.fp_add(acc, self.fp_mul(a.coeffs[i], b.coeffs[j - i]));
            }
            b.coeffs[j] = self.fp_neg(self.fp_mul(inv0, acc));
        }
        b
    }

    pub(crate) fn theta_unchecked(&self, a: &ChainRingElement, j: u64) -> ChainRingElement {
        if self.theta_is_identity() || j.is_multiple_of(u64::from(self.order)) {
            return a.clone();
        }
        let step = self.s_pow(j);
        let mut factor = 1;
        let mut out = a.clone();
        for c in out.coeffs.iter_mut() {
            *c = self.fp_mul(*c, factor);
            factor = self.fp_mul(factor, step);
        }
        out
    }

    /// Every element of `R_k`, in lexicographic order of the coefficient vector.
    pub fn elements(&self) -> impl Iterator<Item = ChainRingElement> + '_ {
        let total = (self.p as u64).pow(self.k as u32);
        (0..total).map(move |mut idx| {
            let mut e = self.zero();
            for c in e.coeffs.iter_mut() {
                *c = (idx % self.p as u64) as u32;
                idx /= self.p as u64;
            }
            e
        })
    }

    /// Every unit of `R_k`.
    pub fn units(&self) -> impl Iterator<Item = ChainRingElement> + '_ {
        self.elements().filter(move |e| self.is_unit(e))
    }
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element `a_0 + a_1 u + … + a_{k-1} u^{k-1}` of `R_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChainRingElement {
    coeffs: SmallVec<[u32; 4]>,
}

impl ChainRingElement {
    /// Coefficients in ascending powers of `u`.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn layer(&self, j: usize) -> FieldElement {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Smallest `j` with a nonzero `u^j` coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [u32] {
        &mut self.coeffs
    }

    /// Reinterprets the element in a ring with `k = level`, dropping or zero-filling layers.
    pub(crate) fn resized(&self, level: usize) -> Self {
        let mut coeffs: SmallVec<[u32; 4]> = self.coeffs.iter().copied().take(level).collect();
        coeffs.resize(level, 0);
        Self { coeffs }
    }

    /// Multiplies by `u^j` (shifts layers up, dropping the overflow).
    pub(crate) fn shift_up(&self, j: usize) -> Self {
        let k = self.coeffs.len();
        let mut coeffs: SmallVec<[u32; 4]> = SmallVec::from_elem(0, k);
        for i in 0..k.saturating_sub(j) {
            coeffs[i + j] = self.coeffs[i];
        }
        Self { coeffs }
    }

    /// Divides out `u^j`; layers below `j` are discarded and the top `j` layers become zero.
    pub(crate) fn shift_down(&self, j: usize) -> Self {
        let k = self.coeffs.len();
        let mut coeffs: SmallVec<[u32; 4]> = SmallVec::from_elem(0, k);
        for i in j..k {
            coeffs[i - j] = self.coeffs[i];
        }
        Self { coeffs }
    }
}

impl fmt::Display for ChainRingElement {
    /// `1+4u+u^2`; zero terms omitted, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if wrote {
                f.write_str("+")?;
            }
            match (j, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("u")?,
                (1, c) => write!(f, "{c}u")?,
                (j, 1) => write!(f, "u^{j}")?,
                (j, c) => write!(f, "{c}u^{j}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, k: usize, s: u64) -> RingContext {
        RingContext::new(p, k, s).unwrap()
    }

    fn el(c: &RingContext, v: &[i64]) -> ChainRingElement {
        c.element_reduced(v).unwrap()
    }

    #[test]
    fn context_orders() {
        assert_eq!(ctx(3, 3, 2).order(), 2);
        assert_eq!(ctx(5, 3, 4).order(), 2);
        assert_eq!(ctx(7, 2, 1).order(), 1);
        assert_eq!(ctx(7, 2, 3).order(), 6);
        assert_eq!(ctx(5, 1, 2).order(), 4);
    }

    #[test]
    fn context_rejects_bad_parameters() {
        assert_eq!(RingContext::new(4, 2, 1), Err(Error::NotPrime(4)));
        assert_eq!(RingContext::new(1, 2, 1), Err(Error::NotPrime(1)));
        assert_eq!(RingContext::new(5, 0, 1), Err(Error::InvalidNilpotency));
        assert_eq!(
            RingContext::new(5, 2, 10),
            Err(Error::DegenerateAutomorphism { p: 5, s: 10 })
        );
        // p = 2 degenerates to the identity automorphism but is accepted
        let two = ctx(2, 3, 1);
        assert!(two.theta_is_identity());
    }

    #[test]
    fn k_one_forces_identity() {
        let c = ctx(5, 1, 2);
        assert!(c.theta_is_identity());
        for a in c.elements() {
            assert_eq!(c.theta(&a, 1).unwrap(), a);
        }
    }

    #[test]
    fn addition_examples() {
        let c = ctx(3, 2, 2);
        assert!(c.add(&el(&c, &[1, 1]), &el(&c, &[2, 2])).unwrap().is_zero());
        let c3 = ctx(3, 3, 2);
        let a = el(&c3, &[1, 1, 2]);
        assert_eq!(c3.add(&a, &c3.zero()).unwrap(), a);
        let c5 = ctx(5, 2, 4);
        let b = el(&c5, &[4, 1]);
        assert_eq!(c5.add(&b, &b).unwrap(), el(&c5, &[3, 2]));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let c2 = ctx(3, 2, 2);
        let c3 = ctx(3, 3, 2);
        assert_eq!(c2.add(&c2.one(), &c3.one()), Err(Error::ContextMismatch));
        assert_eq!(c3.mul(&c2.one(), &c3.one()), Err(Error::ContextMismatch));
        let c5 = ctx(5, 2, 4);
        let big = c5.element(&[4, 4]).unwrap();
        assert_eq!(c2.add(&big, &c2.one()), Err(Error::ContextMismatch));
    }

    #[test]
    fn multiplication_examples() {
        let c5 = ctx(5, 2, 4);
        assert_eq!(c5.mul(&el(&c5, &[1, 1]), &el(&c5, &[4, 1])).unwrap(), el(&c5, &[4]));
        let c3 = ctx(3, 3, 2);
        assert_eq!(c3.mul(&el(&c3, &[1, 1]), &el(&c3, &[1, -1, 1])).unwrap(), c3.one());
        assert!(c3.mul(&c3.u_pow(2), &c3.u_pow(1)).unwrap().is_zero());
    }

    #[test]
    fn unit_examples() {
        let c3 = ctx(3, 3, 2);
        assert!(c3.is_unit(&el(&c3, &[2, 1, 0])));
        assert!(!c3.is_unit(&el(&c3, &[0, 1, 1])));
        assert!(!c3.is_unit(&c3.zero()));
    }

    #[test]
    fn inverse_examples() {
        let c5 = ctx(5, 3, 4);
        assert_eq!(c5.inverse(&el(&c5, &[1, 4, 1])).unwrap(), el(&c5, &[1, 1]));
        assert_eq!(c5.inverse(&c5.one()).unwrap(), c5.one());
        let c3 = ctx(3, 3, 2);
        assert_eq!(c3.inverse(&el(&c3, &[1, 1])).unwrap(), el(&c3, &[1, 2, 1]));
        assert!(matches!(c3.inverse(&c3.u_pow(1)), Err(Error::NotUnit(_))));
    }

    #[test]
    fn theta_examples() {
        let c3 = ctx(3, 3, 2);
        assert_eq!(c3.theta(&el(&c3, &[1, 1, 2]), 1).unwrap(), el(&c3, &[1, 2, 2]));
        for a in c3.elements() {
            assert_eq!(c3.theta(&a, 2).unwrap(), a);
        }
        let c5 = ctx(5, 3, 4);
        assert_eq!(c5.theta(&el(&c5, &[4, 1, 4]), 1).unwrap(), el(&c5, &[4, 4, 4]));
    }

    #[test]
    fn display_form() {
        let c5 = ctx(5, 3, 4);
        assert_eq!(el(&c5, &[1, 4, 1]).to_string(), "1+4u+u^2");
        assert_eq!(c5.zero().to_string(), "0");
        assert_eq!(el(&c5, &[0, 1]).to_string(), "u");
        assert_eq!(el(&c5, &[0, 0, 3]).to_string(), "3u^2");
        assert_eq!(serde_json::to_string(&el(&c5, &[1, 4, 1])).unwrap(), "[1,4,1]");
    }

    /// Exhaustive checks over every (p, k) in {3, 5} × {1, 2, 3} and every s.
    fn small_contexts() -> Vec<RingContext> {
        let mut out = Vec::new();
        for p in [3u64, 5] {
            for k in 1..=3 {
                for s in 1..p {
                    out.push(ctx(p, k, s));
                }
            }
        }
        out
    }

    #[test]
    fn theta_is_a_ring_automorphism_of_order_m() {
        for c in small_contexts().into_iter().filter(|c| c.p() == 3 || c.k() <= 2) {
            let all: Vec<_> = c.elements().collect();
            for a in &all {
                assert_eq!(&c.theta(a, c.order() as u64).unwrap(), a);
                for b in &all {
                    let ta = c.theta(a, 1).unwrap();
                    let tb = c.theta(b, 1).unwrap();
                    assert_eq!(c.theta(&c.mul(a, b).unwrap(), 1).unwrap(), c.mul(&ta, &tb).unwrap());
                    assert_eq!(c.theta(&c.add(a, b).unwrap(), 1).unwrap(), c.add(&ta, &tb).unwrap());
                }
            }
        }
    }

    #[test]
    fn units_are_exactly_the_invertible_elements() {
        for c in small_contexts() {
            let all: Vec<_> = c.elements().collect();
            for a in &all {
                let has_inverse = all.iter().any(|b| c.mul(a, b).unwrap() == c.one());
                assert_eq!(c.is_unit(a), has_inverse, "{a} in {c:?}");
                if has_inverse {
                    let inv = c.inverse(a).unwrap();
                    assert_eq!(c.mul(a, &inv).unwrap(), c.one());
                    assert_eq!(c.mul(&inv, a).unwrap(), c.one());
                }
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_p3_k2() {
        let c = ctx(3, 2, 2);
        let all: Vec<_> = c.elements().collect();
        for a in &all {
            for b in &all {
                for d in &all {
                    let ab_d = c.mul(&c.mul(a, b).unwrap(), d).unwrap();
                    let a_bd = c.mul(a, &c.mul(b, d).unwrap()).unwrap();
                    assert_eq!(ab_d, a_bd);
                    let lhs = c.mul(a, &c.add(b, d).unwrap()).unwrap();
                    let rhs = c.add(&c.mul(a, b).unwrap(), &c.mul(a, d).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn only_the_base_layer_survives_against_top_power() {
        for c in small_contexts() {
            let top = c.u_pow(c.k() - 1);
            for a in c.elements() {
                let expected = c.scale_unchecked(a.layer(0), &top);
                assert_eq!(c.mul(&a, &top).unwrap(), expected);
            }
        }
    }
}
