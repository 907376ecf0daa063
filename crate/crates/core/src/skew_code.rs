//! Skew cyclic codes: left `R_k[x;θ]`-submodules of `R_k[x;θ]/<x^n - 1>`.
//!
//! A code is held as the `F_p`-span of its codewords, each codeword flattened
//! to `n·k` base-field coordinates (`index = degree·k + layer`). The span is
//! built by closing the generators under `τ` and multiplication by `u`, which
//! yields exactly the generated submodule. Two echelon forms of that span do
//! the structural work:
//!
//! * in *canonical* order (degree descending, then layer ascending) the RREF is
//!   a unique fingerprint of the codeword set, and a row's pivot is the
//!   leading term of that codeword;
//! * in *torsion* order (layer ascending, then degree descending) the rows whose
//!   pivot lies in layer `l` project onto a basis of the torsion code `T_l`,
//!   the classical cyclic code over `F_p` of all `t` with `u^l·t + u^(l+1)(…) ∈ C`.
//!
//! The torsion codes form a chain `T_0 ⊆ … ⊆ T_(k-1)`, `|C| = Π |T_l|`, and
//! every layer where the chain grows contributes one generator `u^l·b_l` with
//! `b_l` monic over `R_(k-l)`. The three classical generator shapes are the
//! cases with one growth step at layer 0, one at layer `i ≥ 1`, or one at 0
//! and one at `i`.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::ring::{ChainRingElement, RingContext};
use crate::skew_poly::SkewPoly;

/// Default cap on the number of codewords any brute-force routine will visit.
pub const DEFAULT_GUARD: u64 = 1 << 24;

/// A word `(c_0, …, c_(n-1))` over `R_k`, identified with `c_0 + c_1 x + … + c_(n-1) x^(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    entries: Vec<ChainRingElement>,
}

impl Codeword {
    pub fn new(ctx: &RingContext, entries: Vec<ChainRingElement>) -> Result<Self> {
        if entries.iter().any(|e| !ctx.contains(e)) {
            return Err(Error::ContextMismatch);
        }
        Ok(Self { entries })
    }

    pub fn zero(ctx: &RingContext, n: usize) -> Self {
        Self {
            entries: vec![ctx.zero(); n],
        }
    }

    /// The coefficient vector of `f`, which must have degree below `n`.
    pub fn from_poly(f: &SkewPoly, n: usize) -> Result<Self> {
        if f.degree().is_some_and(|d| d >= n) {
            return Err(Error::InvalidForm(format!("{f} has degree ≥ n = {n}")));
        }
        Ok(Self {
            entries: (0..n).map(|i| f.coeff(i)).collect(),
        })
    }

    pub fn to_poly(&self, ctx: RingContext) -> SkewPoly {
        SkewPoly::trimmed(ctx, self.entries.clone())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[ChainRingElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ChainRingElement::is_zero)
    }

    /// Hamming weight: the number of nonzero `R_k` symbols.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn add(&self, ctx: &RingContext, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::WrongLength {
                expected: self.len(),
                got: other.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| ctx.add(a, b))
            .collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    pub fn sub(&self, ctx: &RingContext, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::WrongLength {
                expected: self.len(),
                got: other.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| ctx.sub(a, b))
            .collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    pub(crate) fn to_flat(&self, k: usize) -> Vec<u32> {
        let mut v = vec![0; self.entries.len() * k];
        for (d, e) in self.entries.iter().enumerate() {
            v[d * k..(d + 1) * k].copy_from_slice(e.coeffs());
        }
        v
    }

    pub(crate) fn from_flat(ctx: &RingContext, v: &[u32]) -> Self {
        let k = ctx.k();
        Self {
            entries: v
                .chunks(k)
                .map(|c| ctx.element(c).expect("flat vector holds reduced layers"))
                .collect(),
        }
    }

    /// `(c_(n-1), …, c_0)`, the high-degree-first display.
    pub fn display_descending(&self) -> String {
        let items: Vec<String> = self.entries.iter().rev().map(|e| e.to_string()).collect();
        format!("({})", items.join(", "))
    }
}

impl fmt::Display for Codeword {
    /// `(c_0, c_1, …, c_(n-1))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", items.join(", "))
    }
}

/// The θ-twisted cyclic shift `(θ(c_(n-1)), θ(c_0), …, θ(c_(n-2)))`.
pub fn tau(ctx: &RingContext, c: &Codeword) -> Codeword {
    let n = c.len();
    let entries = (0..n)
        .map(|i| ctx.theta_unchecked(&c.entries[(i + n - 1) % n], 1))
        .collect();
    Codeword { entries }
}

fn tau_flat(ctx: &RingContext, v: &[u32]) -> Vec<u32> {
    let k = ctx.k();
    let n = v.len() / k;
    let mut out = vec![0; v.len()];
    for d in 0..n {
        let src = (d + n - 1) % n;
        for l in 0..k {
            out[d * k + l] = ctx.fp_mul(v[src * k + l], ctx.s_pow(l as u64));
        }
    }
    out
}

fn u_times_flat(k: usize, v: &[u32]) -> Vec<u32> {
    let mut out = vec![0; v.len()];
    for (chunk_in, chunk_out) in v.chunks(k).zip(out.chunks_mut(k)) {
        chunk_out[1..].copy_from_slice(&chunk_in[..k - 1]);
    }
    out
}

fn canonical_order(n: usize, k: usize) -> Vec<usize> {
    (0..n).rev().flat_map(|d| (0..k).map(move |l| d * k + l)).collect()
}

fn torsion_order(n: usize, k: usize) -> Vec<usize> {
    (0..k).flat_map(|l| (0..n).rev().map(move |d| d * k + l)).collect()
}

/// A skew cyclic code of length `n`, given by generators; the span is computed on demand.
#[derive(Debug)]
pub struct SkewCyclicCode {
    ctx: RingContext,
    n: usize,
    generators: Vec<SkewPoly>,
    guard: u64,
    span: OnceLock<Echelon>,
}

impl Clone for SkewCyclicCode {
    fn clone(&self) -> Self {
        Self {
            ctx: self.ctx,
            n: self.n,
            generators: self.generators.clone(),
            guard: self.guard,
            span: self.span.clone(),
        }
    }
}

impl SkewCyclicCode {
    /// The submodule generated by `gens`; each generator is reduced modulo `x^n - 1`.
    pub fn from_generators(ctx: RingContext, n: usize, gens: &[SkewPoly]) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidLength);
        }
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        let generators = gens
            .iter()
            .map(|g| {
                if *g.ctx() != ctx {
                    return Err(Error::ContextMismatch);
                }
                g.mod_xn_minus_1(n)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ctx,
            n,
            generators,
            guard: DEFAULT_GUARD,
            span: OnceLock::new(),
        })
    }

    /// Replaces the enumeration guard.
    pub fn with_guard(mut self, guard: u64) -> Self {
        self.guard = guard.max(1);
        self
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn guard(&self) -> u64 {
        self.guard
    }

    pub fn generators(&self) -> &[SkewPoly] {
        &self.generators
    }

    fn span(&self) -> &Echelon {
        self.span.get_or_init(|| {
            let k = self.ctx.k();
            let mut span = Echelon::new(self.ctx, canonical_order(self.n, k));
            let mut queue: Vec<Vec<u32>> = self
                .generators
                .iter()
                .map(|g| Codeword::from_poly(g, self.n).expect("reduced").to_flat(k))
                .collect();
            while let Some(v) = queue.pop() {
                if span.insert(&v) {
                    queue.push(tau_flat(&self.ctx, &v));
                    queue.push(u_times_flat(k, &v));
                }
            }
            span
        })
    }

    /// Dimension of the code as an `F_p`-vector space; `|C| = p^dim`.
    pub fn dimension(&self) -> usize {
        self.span().dim()
    }

    /// Exact number of codewords.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.ctx.p()).pow(self.dimension() as u32)
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    pub fn contains(&self, c: &Codeword) -> bool {
        c.len() == self.n && self.span().contains(&c.to_flat(self.ctx.k()))
    }

    /// Membership for a polynomial of degree below `n`.
    pub fn contains_poly(&self, f: &SkewPoly) -> Result<bool> {
        Ok(self.contains(&Codeword::from_poly(&f.mod_xn_minus_1(self.n)?, self.n)?))
    }

    /// True when both codes have the same codeword set.
    pub fn same_codewords(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.n == other.n && self.span().basis() == other.span().basis()
    }

    /// An `F_p`-basis of the code: the rows of its canonical echelon form.
    pub fn basis_words(&self) -> Vec<Codeword> {
        self.span()
            .rows()
            .map(|(_, r)| Codeword::from_flat(&self.ctx, r))
            .collect()
    }

    /// A canonical fingerprint of the codeword set (the RREF of its span).
    pub fn fingerprint(&self) -> Vec<Vec<u32>> {
        self.span().basis()
    }

    fn check_guard(&self, count: &BigUint) -> Result<()> {
        if *count > BigUint::from(self.guard) {
            return Err(Error::GuardExceeded {
                required: count.to_string(),
                guard: self.guard,
            });
        }
        Ok(())
    }

    /// Visits every codeword's flattened coordinates, each exactly once.
    pub(crate) fn for_each_flat(&self, mut visit: impl FnMut(&[u32])) -> Result<()> {
        self.check_guard(&self.size())?;
        let p = self.ctx.p();
        let rows: Vec<&[u32]> = self.span().rows().map(|(_, r)| r).collect();
        let mut current = vec![0u32; self.n * self.ctx.k()];
        let mut digits = vec![0u32; rows.len()];
        visit(&current);
        // odometer: bumping digit i adds row i; a wrap adds it a p-th time, which cancels
        'outer: loop {
            for (i, row) in rows.iter().enumerate() {
                for (x, &y) in current.iter_mut().zip(row.iter()) {
                    *x = self.ctx.fp_add(*x, y);
                }
                digits[i] += 1;
                if digits[i] < p {
                    visit(&current);
                    continue 'outer;
                }
                digits[i] = 0;
            }
            break;
        }
        Ok(())
    }

    /// Every codeword, each once. Fails when `|C|` exceeds the guard.
    pub fn enumerate_codewords(&self) -> Result<Vec<Codeword>> {
        let mut out = Vec::new();
        self.for_each_flat(|v| out.push(Codeword::from_flat(&self.ctx, v)))?;
        Ok(out)
    }

    /// Minimum Hamming weight over nonzero codewords, by exhaustive search.
    pub fn min_distance(&self) -> Result<usize> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        let k = self.ctx.k();
        let mut best = usize::MAX;
        self.for_each_flat(|v| {
            let w = v.chunks(k).filter(|c| c.iter().any(|&x| x != 0)).count();
            if w > 0 && w < best {
                best = w;
            }
        })?;
        Ok(best)
    }

    /// Degrees `δ_l` of the torsion code generators, one per layer (`n` when `T_l = 0`).
    pub fn torsion_degrees(&self) -> Result<Vec<usize>> {
        let k = self.ctx.k();
        let torsion = self.span().reordered(torsion_order(self.n, k));
        let mut min_deg = vec![self.n; k];
        let mut count = vec![0usize; k];
        for (pivot, _) in torsion.rows() {
            let (deg, layer) = (pivot / k, pivot % k);
            min_deg[layer] = min_deg[layer].min(deg);
            count[layer] += 1;
        }
        for l in 0..k {
            if count[l] != self.n - min_deg[l] {
                return Err(Error::Inconsistent(format!(
                    "torsion code at layer {l} has dimension {} but minimal degree {}",
                    count[l], min_deg[l]
                )));
            }
        }
        Ok(min_deg)
    }

    /// The standard generating set: one monic generator per layer where the torsion chain grows.
    pub fn levels(&self) -> Result<Vec<Level>> {
        let k = self.ctx.k();
        let degrees = self.torsion_degrees()?;
        let torsion = self.span().reordered(torsion_order(self.n, k));
        let mut levels = Vec::new();
        let mut previous = self.n;
        for (layer, &deg) in degrees.iter().enumerate() {
            if deg >= previous {
                continue;
            }
            // C ∩ u^layer R^n, re-echelonized so pivots are leading terms
            let mut sub = Echelon::new(self.ctx, canonical_order(self.n, k));
            for (pivot, row) in torsion.rows() {
                if pivot % k >= layer {
                    sub.insert(row);
                }
            }
            let target = deg * k + layer;
            let row = sub
                .rows()
                .find(|(pivot, _)| *pivot == target)
                .map(|(_, r)| r.to_vec())
                .ok_or_else(|| Error::Inconsistent(format!("no clean generator at layer {layer}")))?;
            let word = Codeword::from_flat(&self.ctx, &row).to_poly(self.ctx);
            let b = monic_at_level(&word.div_u_pow(layer)?, k - layer)?;
            levels.push(Level {
                layer,
                generator: b,
                degree: deg,
                shifts: previous - deg,
            });
            previous = deg;
        }
        Ok(levels)
    }

    /// Shape, rank, size and (when enumerable) minimum distance.
    pub fn stats(&self) -> Result<CodeStats> {
        let form = self.classify()?;
        let min_distance = match self.min_distance() {
            Ok(d) => Some(d),
            Err(Error::GuardExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(CodeStats {
            case: form.case_name().to_string(),
            rank: form.rank(self.n)?,
            cardinality: self.size(),
            min_distance,
        })
    }

    /// Sorts the code into one of the generator shapes.
    ///
    /// Finds the minimal-degree codeword; if it is unit-leading the code is
    /// `⟨g⟩` (Case II). If no unit-leading codeword exists it is `⟨u^i a⟩`
    /// (Case I). Otherwise it is `⟨h, u^i a⟩` with `h` the minimal-degree
    /// unit-leading codeword (Case III). Codes that need more than two
    /// generators, possible once `k ≥ 3`, come back as [`GeneratorForm::Layered`].
    /// The returned form is checked to regenerate exactly this code.
    pub fn classify(&self) -> Result<GeneratorForm> {
        let levels = self.levels()?;
        let form = GeneratorForm::from_levels(self.ctx, levels)?;
        let regenerated = form.regenerate(self.n)?;
        if !regenerated.same_codewords(self) {
            return Err(Error::Inconsistent(
                "classified form does not regenerate the code".into(),
            ));
        }
        Ok(form)
    }
}

/// Summary numbers for a code. `min_distance` is `None` when the guard blocked enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeStats {
    pub case: String,
    pub rank: usize,
    #[serde(with = "crate::serial::biguint_string")]
    pub cardinality: BigUint,
    pub min_distance: Option<usize>,
}

/// `b` made monic over `R_level`, returned in the ring of `b` with layers `≥ level` zeroed.
fn monic_at_level(b: &SkewPoly, level: usize) -> Result<SkewPoly> {
    let k = b.ctx().k();
    b.to_level(level)?.monic()?.to_level(k)
}

/// True when every element of `set` lies in a single `F_p`-subspace equal to the set
/// itself, and that subspace is closed under `τ` and multiplication by `u`.
pub fn is_skew_cyclic_closed(ctx: &RingContext, set: &[Codeword]) -> bool {
    let Some(first) = set.first() else {
        return false;
    };
    let n = first.len();
    let k = ctx.k();
    if set.iter().any(|c| c.len() != n) {
        return false;
    }
    let distinct: HashSet<&Codeword> = set.iter().collect();
    let mut span = Echelon::new(*ctx, canonical_order(n, k));
    for c in &distinct {
        span.insert(&c.to_flat(k));
    }
    // a finite set is a subspace iff it is as large as its span
    let expected = BigUint::from(ctx.p()).pow(span.dim() as u32);
    if BigUint::from(distinct.len()) != expected {
        return false;
    }
    let closed = span
        .rows()
        .all(|(_, r)| span.contains(&tau_flat(ctx, r)) && span.contains(&u_times_flat(k, r)));
    closed
}

/// One generator `u^layer·generator` of the standard generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    /// The power of `u` in front of the generator.
    pub layer: usize,
    /// Unit-leading, with no layers at or above `k - layer`.
    pub generator: SkewPoly,
    /// Degree of `generator`, which is also the degree of the torsion code generator.
    pub degree: usize,
    /// Number of `x`-shifts of this generator in the minimal generating set.
    pub shifts: usize,
}

impl Level {
    /// The codeword polynomial `u^layer·generator`.
    pub fn element(&self) -> SkewPoly {
        self.generator.mul_u_pow(self.layer)
    }
}

/// The classified shape of a skew cyclic code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorForm {
    /// `⟨u^i·a⟩`, no unit-leading codeword; `a` unit-leading over `R_(k-i)`, degree `r`.
    CaseI { torsion: usize, a: SkewPoly, r: usize },
    /// `⟨g⟩`, `g` unit-leading of degree `r` with `x^n - 1 = k(x)·g(x)`.
    CaseII { g: SkewPoly, r: usize },
    /// `⟨h, u^i·a⟩` with `h = g + u p_1 + … + u^(k-1) p_(k-1)` of degree `r` and `a` of degree `t < r`.
    CaseIII {
        h: SkewPoly,
        g: SkewPoly,
        torsion: usize,
        a: SkewPoly,
        r: usize,
        t: usize,
    },
    /// Three or more torsion growth steps; needs one generator per step.
    Layered { levels: Vec<Level> },
}

impl GeneratorForm {
    fn from_levels(ctx: RingContext, levels: Vec<Level>) -> Result<Self> {
        match levels.as_slice() {
            [] => Err(Error::ZeroCode),
            [only] if only.layer == 0 => Ok(Self::CaseII {
                g: only.generator.clone(),
                r: only.degree,
            }),
            [only] => Ok(Self::CaseI {
                torsion: only.layer,
                a: only.generator.clone(),
                r: only.degree,
            }),
            [first, second] if first.layer == 0 => {
                let h = first.generator.clone();
                let g = base_layer(&h, ctx)?;
                Ok(Self::CaseIII {
                    h,
                    g,
                    torsion: second.layer,
                    a: second.generator.clone(),
                    r: first.degree,
                    t: second.degree,
                })
            }
            _ => Ok(Self::Layered { levels }),
        }
    }

    /// Reads generators already in one of the classified shapes, keeping them as given.
    ///
    /// `[g]` with `g` unit-leading is Case II, `[u^i a]` is Case I, and a
    /// unit-leading `h` together with some `u^i a` is Case III. The result is
    /// rejected unless these generators are a standard generating set of the
    /// code they span (right degrees, right torsion layers).
    pub fn from_generators(ctx: RingContext, n: usize, gens: &[SkewPoly]) -> Result<Self> {
        let code = SkewCyclicCode::from_generators(ctx, n, gens)?;
        let gens = code.generators();
        let k = ctx.k();
        let torsion_part = |f: &SkewPoly| -> Result<(usize, SkewPoly)> {
            let i = f.valuation().ok_or(Error::ZeroCode)?;
            let a = f.div_u_pow(i)?;
            if !a.to_level(k - i)?.is_unit_leading() {
                return Err(Error::InvalidForm(format!(
                    "{f} is not u^i times a unit-leading polynomial"
                )));
            }
            Ok((i, a))
        };
        let form = match gens {
            [g] if g.is_unit_leading() => Self::CaseII {
                g: g.clone(),
                r: g.degree().unwrap_or(0),
            },
            [f] => {
                let (torsion, a) = torsion_part(f)?;
                let r = a.degree().unwrap_or(0);
                Self::CaseI { torsion, a, r }
            }
            [x, y] => {
                let (h, other) = match (x.is_unit_leading(), y.is_unit_leading()) {
                    (true, false) => (x, y),
                    (false, true) => (y, x),
                    _ => {
                        return Err(Error::InvalidForm(
                            "Case III needs exactly one unit-leading generator".into(),
                        ))
                    }
                };
                let (torsion, a) = torsion_part(other)?;
                Self::CaseIII {
                    h: h.clone(),
                    g: base_layer(h, ctx)?,
                    torsion,
                    a: a.clone(),
                    r: h.degree().unwrap_or(0),
                    t: a.degree().unwrap_or(0),
                }
            }
            _ => return Err(Error::InvalidForm(format!("{} generators", gens.len()))),
        };
        if let Self::CaseII { g, .. } = &form {
            cofactor(g, n)?;
        }
        let expected: Vec<(usize, usize)> = code.levels()?.iter().map(|l| (l.layer, l.degree)).collect();
        let actual: Vec<(usize, usize)> = form.levels(n)?.iter().map(|l| (l.layer, l.degree)).collect();
        if expected != actual {
            return Err(Error::InvalidForm(format!(
                "generators span a code with (layer, degree) steps {expected:?}, not {actual:?}"
            )));
        }
        Ok(form)
    }

    /// The generators read as a form when they already have a classified
    /// shape, otherwise the canonical form of the code they span.
    pub fn resolve(ctx: RingContext, n: usize, gens: &[SkewPoly]) -> Result<Self> {
        match Self::from_generators(ctx, n, gens) {
            Ok(form) => Ok(form),
            Err(Error::InvalidForm(_) | Error::NotDivisor(_)) => {
                SkewCyclicCode::from_generators(ctx, n, gens)?.classify()
            }
            Err(e) => Err(e),
        }
    }

    pub fn ctx(&self) -> RingContext {
        match self {
            Self::CaseI { a, .. } => *a.ctx(),
            Self::CaseII { g, .. } => *g.ctx(),
            Self::CaseIII { h, .. } => *h.ctx(),
            Self::Layered { levels } => *levels[0].generator.ctx(),
        }
    }

    pub fn case_name(&self) -> &'static str {
        match self {
            Self::CaseI { .. } => "I",
            Self::CaseII { .. } => "II",
            Self::CaseIII { .. } => "III",
            Self::Layered { .. } => "layered",
        }
    }

    /// True when the torsion index exceeds 1 or more than two generators are needed.
    pub fn is_extended_shape(&self) -> bool {
        match self {
            Self::CaseI { torsion, .. } | Self::CaseIII { torsion, .. } => *torsion > 1,
            Self::CaseII { .. } => false,
            Self::Layered { .. } => true,
        }
    }

    /// The generators as codeword polynomials: `g`, `u^i a`, or `h, u^i a`.
    pub fn generators(&self) -> Vec<SkewPoly> {
        match self {
            Self::CaseI { torsion, a, .. } => vec![a.mul_u_pow(*torsion)],
            Self::CaseII { g, .. } => vec![g.clone()],
            Self::CaseIII { h, torsion, a, .. } => vec![h.clone(), a.mul_u_pow(*torsion)],
            Self::Layered { levels } => levels.iter().map(Level::element).collect(),
        }
    }

    /// The form as a list of growth steps, with shift counts for length `n`.
    pub fn levels(&self, n: usize) -> Result<Vec<Level>> {
        let raw: Vec<(usize, SkewPoly)> = match self {
            Self::CaseI { torsion, a, .. } => vec![(*torsion, a.clone())],
            Self::CaseII { g, .. } => vec![(0, g.clone())],
            Self::CaseIII { h, torsion, a, .. } => vec![(0, h.clone()), (*torsion, a.clone())],
            Self::Layered { levels } => return Ok(levels.clone()),
        };
        let mut previous = n;
        let mut out = Vec::with_capacity(raw.len());
        for (layer, generator) in raw {
            let degree = generator.degree().ok_or(Error::ZeroCode)?;
            if degree >= previous {
                return Err(Error::InvalidForm(format!(
                    "generator degree {degree} at layer {layer} is not below {previous}"
                )));
            }
            out.push(Level {
                layer,
                generator,
                degree,
                shifts: previous - degree,
            });
            previous = degree;
        }
        Ok(out)
    }

    /// The code spanned by this form's generators.
    pub fn regenerate(&self, n: usize) -> Result<SkewCyclicCode> {
        SkewCyclicCode::from_generators(self.ctx(), n, &self.generators())
    }

    /// `Γ`: the listed `x`-shifts of every generator, in order.
    pub fn minimal_generating_set(&self, n: usize) -> Result<Vec<Codeword>> {
        let ctx = self.ctx();
        let mut out = Vec::new();
        for level in self.levels(n)? {
            let element = level.element();
            for e in 0..level.shifts {
                let shifted = SkewPoly::x_pow(ctx, e).mul(&element)?.mod_xn_minus_1(n)?;
                out.push(Codeword::from_poly(&shifted, n)?);
            }
        }
        Ok(out)
    }

    /// Rank: the size of the minimal generating set.
    pub fn rank(&self, n: usize) -> Result<usize> {
        Ok(self.levels(n)?.iter().map(|l| l.shifts).sum())
    }

    /// `Π (p^(k-layer))^shifts`, which specializes to `(p^(k-i))^(n-r)`,
    /// `(p^k)^(n-r)` and `(p^k)^(n-r) (p^(k-i))^(r-t)`.
    pub fn cardinality(&self, n: usize) -> Result<BigUint> {
        let ctx = self.ctx();
        let mut exponent = 0u64;
        for level in self.levels(n)? {
            exponent += (ctx.k() - level.layer) as u64 * level.shifts as u64;
        }
        Ok(BigUint::from(ctx.p()).pow(exponent as u32))
    }

    /// Rows of the generator matrix: the coefficient vectors of `Γ`.
    pub fn generator_matrix(&self, n: usize) -> Result<Vec<Vec<ChainRingElement>>> {
        Ok(self.minimal_generating_set(n)?.into_iter().map(|c| c.entries).collect())
    }

    /// Rows obtained by plain cyclic shifts of each generator's coefficient
    /// vector, without applying `θ`. Differs from [`Self::generator_matrix`]
    /// whenever `θ` moves a coefficient; kept for side-by-side reports.
    pub fn untwisted_generator_matrix(&self, n: usize) -> Result<Vec<Vec<ChainRingElement>>> {
        let mut out = Vec::new();
        for level in self.levels(n)? {
            let base = Codeword::from_poly(&level.element(), n)?;
            out.extend((0..level.shifts).map(|e| rotate(&base.entries, e)));
        }
        Ok(out)
    }

    /// Rows `x^j·k(x)` (`0 ≤ j < r`) where `x^n - 1 = k(x)·g(x)`. Case II only;
    /// membership testing goes through division, not through this matrix.
    pub fn parity_check_display(&self, n: usize) -> Result<Vec<Vec<ChainRingElement>>> {
        let Self::CaseII { g, r } = self else {
            return Err(Error::InvalidForm("parity-check display needs a Case II form".into()));
        };
        let ctx = *g.ctx();
        let k_poly = cofactor(g, n)?.mod_xn_minus_1(n)?;
        (0..*r)
            .map(|j| {
                let row = SkewPoly::x_pow(ctx, j).mul(&k_poly)?.mod_xn_minus_1(n)?;
                Ok(Codeword::from_poly(&row, n)?.entries)
            })
            .collect()
    }

    /// [`Self::parity_check_display`] with plain, untwisted shifts.
    pub fn untwisted_parity_check(&self, n: usize) -> Result<Vec<Vec<ChainRingElement>>> {
        let Self::CaseII { g, r } = self else {
            return Err(Error::InvalidForm("parity-check display needs a Case II form".into()));
        };
        let base = Codeword::from_poly(&cofactor(g, n)?.mod_xn_minus_1(n)?, n)?;
        Ok((0..*r).map(|j| rotate(&base.entries, j)).collect())
    }

    /// Checks the two compatibility conditions between the generators of a Case III form:
    /// `a` right-divides `h mod u^(k-i)` over `R_(k-i)`, and
    /// `((x^n - 1)/g)·(h - g)` lies in `⟨u^i a⟩`.
    pub fn check_case3_constraints(&self, n: usize) -> Result<bool> {
        let Self::CaseIII { h, g, torsion, a, r, t } = self else {
            return Err(Error::InvalidForm("constraint check needs a Case III form".into()));
        };
        if t >= r {
            return Ok(false);
        }
        let ctx = *h.ctx();
        let level = ctx.k() - torsion;
        let a_low = a.to_level(level)?;
        if !a_low.is_unit_leading() {
            return Ok(false);
        }
        if !a_low.right_divides(&h.to_level(level)?)? {
            return Ok(false);
        }
        let k_poly = match cofactor(g, n) {
            Ok(k_poly) => k_poly,
            Err(Error::NotDivisor(_)) => return Ok(false),
            Err(e) => return Err(e),
        };
        let tail = k_poly.mul(&h.sub(g)?)?;
        let torsion_code = SkewCyclicCode::from_generators(ctx, n, &[a.mul_u_pow(*torsion)])?;
        torsion_code.contains_poly(&tail)
    }
}

fn rotate(entries: &[ChainRingElement], by: usize) -> Vec<ChainRingElement> {
    let n = entries.len();
    (0..n).map(|i| entries[(i + n - by % n) % n].clone()).collect()
}

/// `h mod u`, lifted back into `R_k[x;θ]`.
fn base_layer(h: &SkewPoly, ctx: RingContext) -> Result<SkewPoly> {
    h.layers().layers[0].lift_base(ctx)
}

/// The left cofactor `k(x)` with `x^n - 1 = k(x)·g(x)`.
pub fn cofactor(g: &SkewPoly, n: usize) -> Result<SkewPoly> {
    let (k_poly, rem) = SkewPoly::x_pow_minus_one(*g.ctx(), n).right_divide(g)?;
    if !rem.is_zero() {
        return Err(Error::NotDivisor(g.to_string()));
    }
    Ok(k_poly)
}
