//! The skew polynomial ring `R_k[x;θ]`, where `x·a = θ(a)·x`.
//!
//! Coefficients are stored in ascending powers of `x` with trailing zeros
//! trimmed, so the zero polynomial has no coefficients and structural
//! equality is polynomial equality. Degrees are `Option<usize>`: `None` is the
//! degree of zero and compares below every `Some(_)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{ChainRingElement, RingContext};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewPoly {
    ctx: RingContext,
    coeffs: Vec<ChainRingElement>,
}

impl SkewPoly {
    pub fn zero(ctx: RingContext) -> Self {
        Self {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: RingContext) -> Self {
        Self::constant(ctx, ctx.one())
    }

    pub fn constant(ctx: RingContext, a: ChainRingElement) -> Self {
        Self::monomial(ctx, a, 0)
    }

    /// `a·x^deg`.
    pub fn monomial(ctx: RingContext, a: ChainRingElement, deg: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); deg + 1];
        coeffs[deg] = a;
        Self::trimmed(ctx, coeffs)
    }

    pub fn x_pow(ctx: RingContext, deg: usize) -> Self {
        Self::monomial(ctx, ctx.one(), deg)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(ctx: RingContext, n: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); n + 1];
        coeffs[n] = ctx.one();
        coeffs[0] = ctx.sub_unchecked(&coeffs[0], &ctx.one());
        Self::trimmed(ctx, coeffs)
    }

    /// Builds a polynomial from ascending coefficients, validating each against `ctx`.
    pub fn new(ctx: RingContext, coeffs: Vec<ChainRingElement>) -> Result<Self> {
        if coeffs.iter().any(|c| !ctx.contains(c)) {
            return Err(Error::ContextMismatch);
        }
        Ok(Self::trimmed(ctx, coeffs))
    }

    /// Builds a polynomial from integer coefficient layers, reducing mod `p`.
    /// `layers[i]` holds the `u`-coefficients of `x^i`.
    pub fn from_ints(ctx: RingContext, layers: &[&[i64]]) -> Result<Self> {
        let coeffs = layers
            .iter()
            .map(|c| ctx.element_reduced(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::trimmed(ctx, coeffs))
    }

    /// A polynomial with coefficients in `F_p` (layer 0 only), ascending.
    pub fn from_base(ctx: RingContext, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| ctx.constant(ctx.fp(c))).collect();
        Self::trimmed(ctx, coeffs)
    }

    pub(crate) fn trimmed(ctx: RingContext, mut coeffs: Vec<ChainRingElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { ctx, coeffs }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    /// Ascending coefficients; empty for zero.
    pub fn coeffs(&self) -> &[ChainRingElement] {
        &self.coeffs
    }

    /// The coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> ChainRingElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&ChainRingElement> {
        self.coeffs.last()
    }

    /// True when the leading coefficient is a unit of `R_k`.
    pub fn is_unit_leading(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| self.ctx.is_unit(c))
    }

    /// True when every coefficient lies in `F_p`.
    pub fn is_over_base_field(&self) -> bool {
        self.coeffs.iter().all(|c| c.coeffs()[1..].iter().all(|&x| x == 0))
    }

    /// Smallest `j` such that some coefficient has a nonzero `u^j` layer.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(ChainRingElement::valuation).min()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.add_unchecked(&other.neg_poly()))
    }

    /// Skew product: `a x^i · b x^j = a θ^i(b) x^(i+j)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let ctx = self.ctx;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => ctx.add_unchecked(a, b),
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::trimmed(ctx, coeffs)
    }

    fn neg_poly(&self) -> Self {
        Self {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| self.ctx.neg_unchecked(c)).collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let ctx = self.ctx;
        if self.is_zero() || other.is_zero() {
            return Self::zero(ctx);
        }
        let order = ctx.order() as usize;
        // θ^i(other) only depends on i mod m
        let twists: Vec<Vec<ChainRingElement>> = (0..order.min(self.coeffs.len()))
            .map(|i| other.coeffs.iter().map(|b| ctx.theta_unchecked(b, i as u64)).collect())
            .collect();
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in twists[i % order].iter().enumerate() {
                ctx.mul_add_unchecked(&mut out[i + j], a, b);
            }
        }
        Self::trimmed(ctx, out)
    }

    /// `a·f` for a scalar `a ∈ R_k` on the left.
    pub fn scale_left(&self, a: &ChainRingElement) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ctx.mul_unchecked(a, c)).collect();
        Self::trimmed(self.ctx, coeffs)
    }

    /// Multiplies by the leading coefficient's inverse so the result is monic.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading_coefficient().ok_or(Error::ZeroCode)?;
        let inv = self.ctx.inverse(lead)?;
        Ok(self.scale_left(&inv))
    }

    /// Right division: `f = q·g + r` with `deg r < deg g`.
    pub fn right_divide(&self, g: &Self) -> Result<(Self, Self)> {
        self.same_ring(g)?;
        let (dg, lead) = divisor_parts(g)?;
        let ctx = self.ctx;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ctx.zero(); rem.len().saturating_sub(dg)];
        for d in (dg..rem.len()).rev() {
            if rem[d].is_zero() {
                continue;
            }
            let e = d - dg;
            // a·θ^e(lead) = rem[d]
            let twisted_lead_inv = ctx.inverse_unchecked(&ctx.theta_unchecked(lead, e as u64));
            let a = ctx.mul_unchecked(&rem[d], &twisted_lead_inv);
            for (j, gj) in g.coeffs.iter().enumerate() {
                let t = ctx.mul_unchecked(&a, &ctx.theta_unchecked(gj, e as u64));
                rem[e + j] = ctx.sub_unchecked(&rem[e + j], &t);
            }
            quot[e] = a;
        }
        Ok((Self::trimmed(ctx, quot), Self::trimmed(ctx, rem)))
    }

    /// Left division: `f = g·q + r` with `deg r < deg g`.
    pub fn left_divide(&self, g: &Self) -> Result<(Self, Self)> {
        self.same_ring(g)?;
        let (dg, lead) = divisor_parts(g)?;
        let ctx = self.ctx;
        let order = u64::from(ctx.order());
        let untwist = (order - (dg as u64 % order)) % order;
        let lead_inv = ctx.inverse_unchecked(lead);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ctx.zero(); rem.len().saturating_sub(dg)];
        for d in (dg..rem.len()).rev() {
            if rem[d].is_zero() {
                continue;
            }
            let e = d - dg;
            // lead·θ^dg(a) = rem[d]
            let a = ctx.theta_unchecked(&ctx.mul_unchecked(&lead_inv, &rem[d]), untwist);
            for (j, gj) in g.coeffs.iter().enumerate() {
                let t = ctx.mul_unchecked(gj, &ctx.theta_unchecked(&a, j as u64));
                rem[e + j] = ctx.sub_unchecked(&rem[e + j], &t);
            }
            quot[e] = a;
        }
        Ok((Self::trimmed(ctx, quot), Self::trimmed(ctx, rem)))
    }

    /// True when `self` is a right divisor of `f`, i.e. `f = q·self`.
    pub fn right_divides(&self, f: &Self) -> Result<bool> {
        Ok(f.right_divide(self)?.1.is_zero())
    }

    /// True when `self` is a left divisor of `f`, i.e. `f = self·q`.
    pub fn left_divides(&self, f: &Self) -> Result<bool> {
        Ok(f.left_divide(self)?.1.is_zero())
    }

    /// The canonical representative modulo the left ideal generated by `x^n - 1`.
    pub fn mod_xn_minus_1(&self, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidLength);
        }
        if self.coeffs.len() <= n {
            return Ok(self.clone());
        }
        Ok(self.right_divide(&Self::x_pow_minus_one(self.ctx, n))?.1)
    }

    /// Returns `f_i` with `f·u^i = u^i·f_i`; `f_i` has no layers at or above `k - i`.
    pub fn u_commute(&self, i: usize) -> Result<Self> {
        let k = self.ctx.k();
        if i < 1 || i + 1 > k {
            return Err(Error::OutOfRange {
                index: i,
                lo: 1,
                hi: k.saturating_sub(1),
            });
        }
        Ok(self.twist_layers(i, |deg| deg as u64 * i as u64))
    }

    /// Inverse of [`Self::u_commute`] on polynomials already truncated to `R_(k-i)`:
    /// returns `w` with `w·u^i = u^i·f`.
    pub fn u_commute_inverse(&self, i: usize) -> Self {
        let order = u64::from(self.ctx.order());
        self.twist_layers(i, |deg| (order - (deg as u64 * i as u64) % order) % order)
    }

    fn twist_layers(&self, i: usize, exponent: impl Fn(usize) -> u64) -> Self {
        let ctx = self.ctx;
        let keep = ctx.k() - i;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(deg, a)| {
                let mut t = ctx.scale_unchecked(ctx.s_pow(exponent(deg)), a);
                for c in &mut t.coeffs_mut()[keep..] {
                    *c = 0;
                }
                t
            })
            .collect();
        Self::trimmed(ctx, coeffs)
    }

    /// `u^j·f`.
    pub fn mul_u_pow(&self, j: usize) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.shift_up(j)).collect();
        Self::trimmed(self.ctx, coeffs)
    }

    /// Strips a left factor `u^j`: for `f = u^j·b` returns the `b` with no layers at or
    /// above `k - j`. Layers of `f` below `j` must be zero.
    pub fn div_u_pow(&self, j: usize) -> Result<Self> {
        if self
            .coeffs
            .iter()
            .any(|c| c.coeffs()[..j.min(self.ctx.k())].iter().any(|&x| x != 0))
        {
            return Err(Error::InvalidForm(format!("{self} is not divisible by u^{j}")));
        }
        let coeffs = self.coeffs.iter().map(|c| c.shift_down(j)).collect();
        Ok(Self::trimmed(self.ctx, coeffs))
    }

    /// Image in `R_level[x;θ]` (reduction mod `u^level`, or zero-extension upward).
    pub fn to_level(&self, level: usize) -> Result<Self> {
        let ctx = self.ctx.with_level(level)?;
        let coeffs = self.coeffs.iter().map(|c| c.resized(level)).collect();
        Ok(Self::trimmed(ctx, coeffs))
    }

    /// Zeroes every layer at or above `level`, staying in the same ring.
    pub fn truncate_layers(&self, level: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let mut c = c.clone();
                for x in c.coeffs_mut().iter_mut().skip(level) {
                    *x = 0;
                }
                c
            })
            .collect();
        Self::trimmed(self.ctx, coeffs)
    }

    /// Unit test of the unit-group characterization: base layer is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        let mut base = self.coeffs.iter().map(|c| c.layer(0));
        match base.next() {
            Some(c0) if c0 != 0 => base.all(|c| c == 0),
            _ => false,
        }
    }

    /// Two-sided inverse of a unit.
    ///
    /// Starts from the inverse of the constant base layer and lifts it one
    /// `u`-adic step at a time with `v ← v·(2 - f·v)`, so `f·v ≡ 1 mod u^j`
    /// doubles its precision on every pass.
    pub fn inverse_unit(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotUnit(self.to_string()));
        }
        let ctx = self.ctx;
        let one = Self::one(ctx);
        let two = Self::constant(ctx, ctx.constant(2 % ctx.p()));
        let a0 = self.coeffs[0].layer(0);
        let mut v = Self::constant(ctx, ctx.constant(ctx.fp_inv(a0)));
        let mut precision = 1;
        while precision < ctx.k() {
            let fv = self.mul_unchecked(&v);
            v = v.mul_unchecked(&two.add_unchecked(&fv.neg_poly()));
            precision *= 2;
        }
        if self.mul_unchecked(&v) != one || v.mul_unchecked(self) != one {
            return Err(Error::Inconsistent(format!("lifted inverse of {self} failed")));
        }
        Ok(v)
    }

    /// Splits `f = Σ u^i t_i(x)` with each `t_i` over `F_p`.
    pub fn layers(&self) -> LayerDecomposition {
        let base = self.ctx.base_field();
        let layers = (0..self.ctx.k())
            .map(|l| {
                let coeffs = self.coeffs.iter().map(|c| base.constant(c.layer(l))).collect();
                SkewPoly::trimmed(base, coeffs)
            })
            .collect();
        LayerDecomposition { layers }
    }

    /// Lifts a base-field polynomial into `R_k[x;θ]` (coefficients in layer 0).
    pub fn lift_base(&self, ctx: RingContext) -> Result<Self> {
        if self.ctx.k() != 1 || self.ctx.p() != ctx.p() {
            return Err(Error::ContextMismatch);
        }
        let coeffs = self.coeffs.iter().map(|c| ctx.constant(c.layer(0))).collect();
        Ok(Self::trimmed(ctx, coeffs))
    }

    /// Formats with ascending powers of `x` instead of the default descending order.
    pub fn display_ascending(&self) -> String {
        self.render(false)
    }

    fn render(&self, descending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        let mut push = |i: usize, c: &ChainRingElement| {
            if c.is_zero() {
                return;
            }
            let text = c.to_string();
            let single = c.coeffs().iter().filter(|&&x| x != 0).count() == 1;
            let coef = if i > 0 && text == "1" {
                String::new()
            } else if single {
                text
            } else {
                format!("({text})")
            };
            let xpart = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(format!("{coef}{xpart}"));
        };
        if descending {
            for (i, c) in self.coeffs.iter().enumerate().rev() {
                push(i, c);
            }
        } else {
            for (i, c) in self.coeffs.iter().enumerate() {
                push(i, c);
            }
        }
        terms.join(" + ")
    }
}

fn divisor_parts(g: &SkewPoly) -> Result<(usize, &ChainRingElement)> {
    let lead = g.leading_coefficient().ok_or(Error::DivisionByZero)?;
    if !g.ctx.is_unit(lead) {
        return Err(Error::NonUnitLeading(lead.to_string()));
    }
    Ok((g.coeffs.len() - 1, lead))
}

impl fmt::Display for SkewPoly {
    /// Descending powers of `x`, e.g. `(1+u+2u^2)x^5 + (2u+u^2)x^4 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    /// Panics when the operands come from different rings.
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        SkewPoly::add(self, rhs).expect("operands from different rings")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        SkewPoly::sub(self, rhs).expect("operands from different rings")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        SkewPoly::mul(self, rhs).expect("operands from different rings")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        self.neg_poly()
    }
}

/// `f = Σ u^i t_i(x)` with every `t_i` over `F_p`, indexed from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub layers: Vec<SkewPoly>,
}

impl LayerDecomposition {
    pub fn reassemble(&self, ctx: RingContext) -> Result<SkewPoly> {
        if self.layers.len() != ctx.k() {
            return Err(Error::WrongLength {
                expected: ctx.k(),
                got: self.layers.len(),
            });
        }
        let mut out = SkewPoly::zero(ctx);
        for (i, t) in self.layers.iter().enumerate() {
            out = out.add(&t.lift_base(ctx)?.mul_u_pow(i))?;
        }
        Ok(out)
    }
}
