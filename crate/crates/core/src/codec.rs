//! Encoding into a classified code and table-based syndrome decoding.
//!
//! A message holds one polynomial per generator `u^l·b` of the form. For the
//! generator at layer `l` with `c` shifts, its polynomial has degree below `c`
//! and no layers at or above `k - l`; the codeword is
//! `Σ u^l·m·b`. Decoding divides the layers back out one generator at a time.
//!
//! Syndromes split a word into its `u`-layers over `F_p`. Layer `l` is multiplied
//! by `(x^n - 1)/(b mod u)` for the last generator at or below layer `l`.
//! That test is exact whenever every generator's codeword passes it, which
//! holds for the classical generator shapes. When it does not hold, the
//! remainder left by the division steps serves as the syndrome instead.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{FieldElement, RingContext};
use crate::skew_code::{Codeword, GeneratorForm, Level};
use crate::skew_poly::SkewPoly;

/// Message polynomials, one per generator of the form, in generator order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Message {
    pub parts: Vec<SkewPoly>,
}

impl Message {
    pub fn new(parts: Vec<SkewPoly>) -> Self {
        Self { parts }
    }
}

/// How syndromes are computed for a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SyndromeScheme {
    /// One base-field check polynomial per layer.
    LayerChecks(Vec<SkewPoly>),
    /// The remainder of the generator-by-generator division, split into layers.
    DivisionRemainder,
}

/// One base-field polynomial per layer, each reduced modulo `x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syndrome {
    pub layers: Vec<SkewPoly>,
}

impl Syndrome {
    pub fn is_zero(&self) -> bool {
        self.layers.iter().all(SkewPoly::is_zero)
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .layers
            .iter()
            .enumerate()
            .map(|(l, e)| format!("e{l} = {e}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// One additive error term: `magnitude·u^layer` added at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ErrorTerm {
    pub position: usize,
    pub layer: usize,
    pub magnitude: FieldElement,
}

/// A set of error terms on distinct `(position, layer)` cells, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ErrorPattern {
    terms: Vec<ErrorTerm>,
}

impl ErrorPattern {
    pub fn new(mut terms: Vec<ErrorTerm>) -> Result<Self> {
        terms.sort();
        if terms
            .windows(2)
            .any(|w| (w[0].position, w[0].layer) == (w[1].position, w[1].layer))
        {
            return Err(Error::InvalidForm(
                "error pattern repeats a (position, layer) cell".into(),
            ));
        }
        if terms.iter().any(|t| t.magnitude == 0) {
            return Err(Error::InvalidForm("error magnitudes must be nonzero".into()));
        }
        Ok(Self { terms })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[ErrorTerm] {
        &self.terms
    }

    /// Number of terms.
    pub fn weight(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The error as a word of length `n`.
    pub fn to_codeword(&self, ctx: &RingContext, n: usize) -> Result<Codeword> {
        let mut entries = vec![ctx.zero(); n];
        for t in &self.terms {
            if t.position >= n || t.layer >= ctx.k() || t.magnitude >= ctx.p() {
                return Err(Error::OutOfRange {
                    index: t.position,
                    lo: 0,
                    hi: n,
                });
            }
            let mut layers = vec![0; ctx.k()];
            layers[t.layer] = t.magnitude;
            entries[t.position] = ctx.add(&entries[t.position], &ctx.element(&layers)?)?;
        }
        Codeword::new(ctx, entries)
    }

    /// Order used to pick one pattern among several with the same syndrome:
    /// fewer terms first, then smaller magnitudes, then the term list.
    fn leader_key(&self) -> (usize, Vec<FieldElement>, &[ErrorTerm]) {
        let mut mags: Vec<FieldElement> = self.terms.iter().map(|t| t.magnitude).collect();
        mags.sort();
        (self.terms.len(), mags, &self.terms)
    }
}

impl fmt::Display for ErrorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let u = match t.layer {
                    0 => String::new(),
                    1 => "u".into(),
                    l => format!("u^{l}"),
                };
                let x = match t.position {
                    0 => String::new(),
                    1 => "x".into(),
                    d => format!("x^{d}"),
                };
                let mag = if t.magnitude == 1 && !(u.is_empty() && x.is_empty()) {
                    String::new()
                } else {
                    t.magnitude.to_string()
                };
                format!("{mag}{u}{x}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// What to do when several correctable patterns share a syndrome.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CollisionPolicy {
    /// Refuse to build the table.
    #[default]
    Strict,
    /// Keep the least pattern under (weight, sorted magnitudes, terms) and
    /// record the other patterns of that weight as alternatives.
    CosetLeader,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct TableEntry {
    leader: ErrorPattern,
    alternatives: Vec<ErrorPattern>,
}

/// Map from syndrome to the error pattern it is decoded to.
#[derive(Clone, Debug)]
pub struct SyndromeTable {
    max_weight: usize,
    policy: CollisionPolicy,
    entries: HashMap<Vec<FieldElement>, TableEntry>,
    ambiguous: usize,
}

impl SyndromeTable {
    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn policy(&self) -> CollisionPolicy {
        self.policy
    }

    /// Number of distinct syndromes in the table, including zero.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of syndromes shared by more than one minimal-weight pattern.
    pub fn ambiguous_syndromes(&self) -> usize {
        self.ambiguous
    }

    fn lookup(&self, key: &[FieldElement]) -> Option<&TableEntry> {
        self.entries.get(key)
    }

    /// The pattern a syndrome decodes to, and any equally light alternatives.
    pub fn get(&self, syndrome: &Syndrome, n: usize) -> Option<(&ErrorPattern, &[ErrorPattern])> {
        self.lookup(&flatten_syndrome(syndrome, n))
            .map(|e| (&e.leader, e.alternatives.as_slice()))
    }
}

/// Outcome of decoding one received word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub syndrome: Syndrome,
    pub error: ErrorPattern,
    pub alternatives: Vec<ErrorPattern>,
    pub corrected: Codeword,
    pub message: Message,
}

/// Encoder and decoder for one classified code.
#[derive(Clone, Debug)]
pub struct Codec {
    form: GeneratorForm,
    n: usize,
    levels: Vec<Level>,
    scheme: SyndromeScheme,
}

impl Codec {
    pub fn new(form: GeneratorForm, n: usize) -> Result<Self> {
        let levels = form.levels(n)?;
        let mut codec = Self {
            form,
            n,
            levels,
            scheme: SyndromeScheme::DivisionRemainder,
        };
        let checks = layer_check_polys(&codec.form, n)?;
        let layered = SyndromeScheme::LayerChecks(checks);
        let basis = codec.form.minimal_generating_set(n)?;
        if basis
            .iter()
            .all(|c| codec.syndrome_flat_with(&layered, c).iter().all(|&x| x == 0))
        {
            codec.scheme = layered;
        }
        Ok(codec)
    }

    pub fn form(&self) -> &GeneratorForm {
        &self.form
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> RingContext {
        self.form.ctx()
    }

    pub fn scheme(&self) -> &SyndromeScheme {
        &self.scheme
    }

    /// `(layer, shifts)` for each message part: part `j` has degree below
    /// `shifts` and coefficients in `R_(k - layer)`.
    pub fn message_shape(&self) -> Vec<(usize, usize)> {
        self.levels.iter().map(|l| (l.layer, l.shifts)).collect()
    }

    /// Number of distinct messages; equals the code size.
    pub fn message_count(&self) -> BigUint {
        let ctx = self.ctx();
        let exponent: usize = self.levels.iter().map(|l| (ctx.k() - l.layer) * l.shifts).sum();
        BigUint::from(ctx.p()).pow(exponent as u32)
    }

    pub fn check_message(&self, msg: &Message) -> Result<()> {
        let ctx = self.ctx();
        if msg.parts.len() != self.levels.len() {
            return Err(Error::MessageBound(format!(
                "expected {} message polynomials, got {}",
                self.levels.len(),
                msg.parts.len()
            )));
        }
        for (j, (part, level)) in msg.parts.iter().zip(&self.levels).enumerate() {
            if *part.ctx() != ctx {
                return Err(Error::ContextMismatch);
            }
            if part.degree().is_some_and(|d| d >= level.shifts) {
                return Err(Error::MessageBound(format!(
                    "message part {j} has degree {} but must stay below {}",
                    part.degree().unwrap_or(0),
                    level.shifts
                )));
            }
            let top = ctx.k() - level.layer;
            if part.coeffs().iter().any(|c| c.coeffs()[top..].iter().any(|&x| x != 0)) {
                return Err(Error::MessageBound(format!(
                    "message part {j} must have coefficients in R_{top} (no u^{top} or higher terms)"
                )));
            }
        }
        Ok(())
    }

    /// `Σ u^l·m_l·b_l`, reduced modulo `x^n - 1`.
    pub fn encode(&self, msg: &Message) -> Result<Codeword> {
        self.check_message(msg)?;
        let ctx = self.ctx();
        let mut total = SkewPoly::zero(ctx);
        for (part, level) in msg.parts.iter().zip(&self.levels) {
            total = total.add(&part.mul(&level.generator)?.mul_u_pow(level.layer))?;
        }
        Codeword::from_poly(&total.mod_xn_minus_1(self.n)?, self.n)
    }

    /// Divides generator by generator. Returns the quotients and what is left;
    /// the word is a codeword iff the remainder is zero.
    fn divide_out(&self, word: &Codeword) -> Result<(Vec<SkewPoly>, SkewPoly)> {
        let ctx = self.ctx();
        let k = ctx.k();
        let mut rest = word.to_poly(ctx);
        let mut quotients = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let low = rest.truncate_layers(level.layer);
            let high = rest.sub(&low)?.div_u_pow(level.layer)?;
            let top = k - level.layer;
            let (q, r) = high.to_level(top)?.right_divide(&level.generator.to_level(top)?)?;
            quotients.push(q.to_level(k)?);
            rest = low.add(&r.to_level(k)?.mul_u_pow(level.layer))?;
        }
        Ok((quotients, rest))
    }

    /// The message encoded by a codeword.
    pub fn extract(&self, word: &Codeword) -> Result<Message> {
        if word.len() != self.n {
            return Err(Error::WrongLength {
                expected: self.n,
                got: word.len(),
            });
        }
        let (parts, rest) = self.divide_out(word)?;
        if !rest.is_zero() {
            return Err(Error::NotCodeword);
        }
        Ok(Message { parts })
    }

    pub fn is_codeword(&self, word: &Codeword) -> Result<bool> {
        Ok(self.divide_out(word)?.1.is_zero())
    }

    fn syndrome_flat_with(&self, scheme: &SyndromeScheme, word: &Codeword) -> Vec<FieldElement> {
        let ctx = self.ctx();
        let (k, n) = (ctx.k(), self.n);
        let mut out = vec![0; k * n];
        match scheme {
            SyndromeScheme::LayerChecks(checks) => {
                let p = ctx.p();
                for (l, check) in checks.iter().enumerate() {
                    let cs: Vec<FieldElement> = check.coeffs().iter().map(|c| c.layer(0)).collect();
                    for (i, entry) in word.entries().iter().enumerate() {
                        let t = entry.layer(l);
                        if t == 0 {
                            continue;
                        }
                        for (j, &c) in cs.iter().enumerate() {
                            let slot = &mut out[l * n + (i + j) % n];
                            *slot = ((u64::from(*slot) + u64::from(t) * u64::from(c)) % u64::from(p)) as u32;
                        }
                    }
                }
            }
            SyndromeScheme::DivisionRemainder => {
                let rest = self.divide_out(word).expect("word length and ring already checked").1;
                for (d, c) in rest.coeffs().iter().enumerate() {
                    for l in 0..k {
                        out[l * n + d] = c.layer(l);
                    }
                }
            }
        }
        out
    }

    fn syndrome_flat(&self, word: &Codeword) -> Vec<FieldElement> {
        self.syndrome_flat_with(&self.scheme, word)
    }

    pub fn syndrome(&self, word: &Codeword) -> Result<Syndrome> {
        if word.len() != self.n {
            return Err(Error::WrongLength {
                expected: self.n,
                got: word.len(),
            });
        }
        Ok(unflatten_syndrome(&self.ctx(), &self.syndrome_flat(word), self.n))
    }

    /// Syndromes of every pattern of weight at most `max_weight`.
    pub fn build_table(&self, max_weight: usize, policy: CollisionPolicy, guard: u64) -> Result<SyndromeTable> {
        let ctx = self.ctx();
        let (n, k, p) = (self.n, ctx.k(), ctx.p());
        let cells = n * k;
        let count = pattern_count(cells, max_weight, p);
        if count > BigUint::from(guard) {
            return Err(Error::GuardExceeded {
                required: count.to_string(),
                guard,
            });
        }
        // syndrome of each single cell with magnitude 1; patterns combine linearly
        let unit: Vec<Vec<FieldElement>> = (0..cells)
            .map(|cell| {
                let term = ErrorTerm {
                    position: cell / k,
                    layer: cell % k,
                    magnitude: 1,
                };
                let word = ErrorPattern { terms: vec![term] }
                    .to_codeword(&ctx, n)
                    .expect("cell in range");
                self.syndrome_flat(&word)
            })
            .collect();

        let mut entries: HashMap<Vec<FieldElement>, TableEntry> = HashMap::new();
        entries.insert(
            vec![0; cells],
            TableEntry {
                leader: ErrorPattern::zero(),
                alternatives: Vec::new(),
            },
        );
        let mut failure = None;
        for_each_pattern(cells, max_weight, p, |chosen, mags| {
            if failure.is_some() {
                return;
            }
            let mut key = vec![0; cells];
            for (&cell, &m) in chosen.iter().zip(mags) {
                for (x, &y) in key.iter_mut().zip(&unit[cell]) {
                    *x = ctx.fp_add(*x, ctx.fp_mul(m, y));
                }
            }
            let pattern = ErrorPattern {
                terms: chosen
                    .iter()
                    .zip(mags)
                    .map(|(&cell, &magnitude)| ErrorTerm {
                        position: cell / k,
                        layer: cell % k,
                        magnitude,
                    })
                    .collect(),
            };
            match entries.get_mut(&key) {
                None => {
                    entries.insert(
                        key,
                        TableEntry {
                            leader: pattern,
                            alternatives: Vec::new(),
                        },
                    );
                }
                Some(entry) if entry.leader.is_zero() => {
                    failure = Some(Error::SyndromeCollision(format!(
                        "error {pattern} has zero syndrome and cannot be detected"
                    )));
                }
                Some(entry) => match policy {
                    CollisionPolicy::Strict => {
                        failure = Some(Error::SyndromeCollision(format!(
                            "errors {} and {pattern} share a syndrome",
                            entry.leader
                        )));
                    }
                    CollisionPolicy::CosetLeader => {
                        let mut pattern = pattern;
                        if pattern.leader_key() < entry.leader.leader_key() {
                            std::mem::swap(&mut pattern, &mut entry.leader);
                        }
                        if pattern.weight() == entry.leader.weight() {
                            entry.alternatives.push(pattern);
                        }
                        entry.alternatives.retain(|a| a.weight() == entry.leader.weight());
                    }
                },
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let ambiguous = entries.values().filter(|e| !e.alternatives.is_empty()).count();
        for entry in entries.values_mut() {
            entry.alternatives.sort();
        }
        Ok(SyndromeTable {
            max_weight,
            policy,
            entries,
            ambiguous,
        })
    }

    /// Looks up the syndrome, removes the error, and extracts the message.
    pub fn decode(&self, received: &Codeword, table: &SyndromeTable) -> Result<DecodeOutcome> {
        let ctx = self.ctx();
        let syndrome = self.syndrome(received)?;
        let key = self.syndrome_flat(received);
        let entry = table.lookup(&key).ok_or_else(|| {
            Error::Uncorrectable(format!(
                "syndrome {syndrome} matches no error of weight ≤ {}",
                table.max_weight
            ))
        })?;
        let corrected = received.sub(&ctx, &entry.leader.to_codeword(&ctx, self.n)?)?;
        let message = self.extract(&corrected).map_err(|e| match e {
            Error::NotCodeword => Error::Inconsistent("corrected word is not a codeword".into()),
            other => other,
        })?;
        Ok(DecodeOutcome {
            syndrome,
            error: entry.leader.clone(),
            alternatives: entry.alternatives.clone(),
            corrected,
            message,
        })
    }

    /// The largest `w ≤ limit` for which a strict table of all patterns of
    /// weight ≤ `w` exists. Returns `limit` if every tested weight succeeds.
    pub fn empirical_radius(&self, limit: usize, guard: u64) -> Result<usize> {
        for w in 1..=limit {
            match self.build_table(w, CollisionPolicy::Strict, guard) {
                Ok(_) => {}
                Err(Error::SyndromeCollision(_)) => return Ok(w - 1),
                Err(e) => return Err(e),
            }
        }
        Ok(limit)
    }
}

fn pattern_count(cells: usize, max_weight: usize, p: u32) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    for w in 0..=max_weight.min(cells) {
        if w > 0 {
            binom = binom * BigUint::from(cells - w + 1) / BigUint::from(w);
        }
        total += &binom * BigUint::from(p - 1).pow(w as u32);
    }
    total
}

/// Visits every nonempty set of at most `max_weight` cells with every choice of nonzero magnitudes.
fn for_each_pattern(cells: usize, max_weight: usize, p: u32, mut visit: impl FnMut(&[usize], &[FieldElement])) {
    fn recurse(
        start: usize,
        cells: usize,
        left: usize,
        p: u32,
        chosen: &mut Vec<usize>,
        mags: &mut Vec<FieldElement>,
        visit: &mut dyn FnMut(&[usize], &[FieldElement]),
    ) {
        if left == 0 {
            return;
        }
        for cell in start..cells {
            chosen.push(cell);
            for m in 1..p {
                mags.push(m);
                visit(chosen, mags);
                recurse(cell + 1, cells, left - 1, p, chosen, mags, visit);
                mags.pop();
            }
            chosen.pop();
        }
    }
    recurse(0, cells, max_weight, p, &mut Vec::new(), &mut Vec::new(), &mut visit);
}

fn flatten_syndrome(s: &Syndrome, n: usize) -> Vec<FieldElement> {
    let mut out = vec![0; s.layers.len() * n];
    for (l, e) in s.layers.iter().enumerate() {
        for (d, c) in e.coeffs().iter().enumerate().take(n) {
            out[l * n + d] = c.layer(0);
        }
    }
    out
}

fn unflatten_syndrome(ctx: &RingContext, flat: &[FieldElement], n: usize) -> Syndrome {
    let base = ctx.base_field();
    let layers = flat
        .chunks(n)
        .map(|chunk| {
            let coeffs: Vec<i64> = chunk.iter().map(|&c| i64::from(c)).collect();
            SkewPoly::from_base(base, &coeffs)
        })
        .collect();
    Syndrome { layers }
}

/// Per-layer check polynomials over `F_p`: `(x^n - 1)/(b mod u)` for the last
/// generator `u^j·b` with `j ≤ l`, or `1` if there is none.
pub fn layer_check_polys(form: &GeneratorForm, n: usize) -> Result<Vec<SkewPoly>> {
    let ctx = form.ctx();
    let base = ctx.base_field();
    let levels = form.levels(n)?;
    let xn = SkewPoly::x_pow_minus_one(base, n);
    (0..ctx.k())
        .map(|l| match levels.iter().rev().find(|lv| lv.layer <= l) {
            None => Ok(SkewPoly::one(base)),
            Some(level) => {
                let d = level.generator.to_level(1)?;
                let (check, rem) = xn.right_divide(&d)?;
                if !rem.is_zero() {
                    return Err(Error::NotDivisor(format!(
                        "{d} does not divide x^{n} - 1 over F_{}",
                        ctx.p()
                    )));
                }
                Ok(check)
            }
        })
        .collect()
}

/// `e_l = (layer l of the word)·check_l mod x^n - 1`, over `F_p`.
pub fn syndromes(received: &Codeword, checks: &[SkewPoly]) -> Result<Syndrome> {
    let n = received.len();
    let mut layers = Vec::with_capacity(checks.len());
    for (l, check) in checks.iter().enumerate() {
        let base = *check.ctx();
        let coeffs: Vec<i64> = received.entries().iter().map(|e| i64::from(e.layer(l))).collect();
        let t = SkewPoly::from_base(base, &coeffs);
        layers.push(t.mul(check)?.mod_xn_minus_1(n)?);
    }
    Ok(Syndrome { layers })
}

pub fn encode(form: &GeneratorForm, msg: &Message, n: usize) -> Result<Codeword> {
    Codec::new(form.clone(), n)?.encode(msg)
}

/// A strict table (see [`CollisionPolicy::Strict`]).
pub fn build_syndrome_table(form: &GeneratorForm, n: usize, max_weight: usize, guard: u64) -> Result<SyndromeTable> {
    Codec::new(form.clone(), n)?.build_table(max_weight, CollisionPolicy::Strict, guard)
}

pub fn decode(received: &Codeword, form: &GeneratorForm, table: &SyndromeTable) -> Result<DecodeOutcome> {
    Codec::new(form.clone(), received.len())?.decode(received, table)
}
