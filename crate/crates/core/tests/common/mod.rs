//! Reference arithmetic written directly from the definitions, for cross-checks.
#![allow(dead_code)]

use skew_cyclic::{RingContext, SkewPoly};

/// `R_k[x;θ]` on plain integer vectors: `poly[i][l]` is the `u^l x^i` coefficient.
#[derive(Clone, Copy, Debug)]
pub struct Naive {
    pub p: i64,
    pub k: usize,
    pub s: i64,
}

pub type Elem = Vec<i64>;
pub type Poly = Vec<Elem>;

impl Naive {
    pub fn new(p: i64, k: usize, s: i64) -> Self {
        Self { p, k, s }
    }

    fn pow(&self, b: i64, e: u64) -> i64 {
        (0..e).fold(1, |acc, _| acc * b % self.p)
    }

    pub fn theta(&self, a: &Elem, i: usize) -> Elem {
        (0..self.k)
            .map(|l| a[l] * self.pow(self.s, (i * l) as u64) % self.p)
            .collect()
    }

    pub fn emul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = vec![0; self.k];
        for i in 0..self.k {
            for j in 0..self.k - i {
                out[i + j] = (out[i + j] + a[i] * b[j]) % self.p;
            }
        }
        out
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        if f.is_empty() || g.is_empty() {
            return Vec::new();
        }
        let mut out = vec![vec![0; self.k]; f.len() + g.len() - 1];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                let t = self.emul(a, &self.theta(b, i));
                for l in 0..self.k {
                    out[i + j][l] = (out[i + j][l] + t[l]) % self.p;
                }
            }
        }
        self.trim(out)
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Poly {
        let len = f.len().max(g.len());
        let zero = vec![0; self.k];
        let out = (0..len)
            .map(|i| {
                let a = f.get(i).unwrap_or(&zero);
                let b = g.get(i).unwrap_or(&zero);
                (0..self.k).map(|l| (a[l] + b[l]) % self.p).collect()
            })
            .collect();
        self.trim(out)
    }

    pub fn trim(&self, mut f: Poly) -> Poly {
        while f.last().is_some_and(|c| c.iter().all(|&x| x == 0)) {
            f.pop();
        }
        f
    }

    pub fn ctx(&self) -> RingContext {
        RingContext::new(self.p as u64, self.k, self.s as u64).unwrap()
    }

    pub fn lib_poly(&self, f: &Poly) -> SkewPoly {
        let layers: Vec<&[i64]> = f.iter().map(Vec::as_slice).collect();
        SkewPoly::from_ints(self.ctx(), &layers).unwrap()
    }

    pub fn naive_poly(&self, f: &SkewPoly) -> Poly {
        f.coeffs()
            .iter()
            .map(|c| c.coeffs().iter().map(|&x| i64::from(x)).collect())
            .collect()
    }
}

/// Base-field polynomials multiplied commutatively, reduced modulo `x^n - 1`.
pub fn cyclic_mul(p: i64, a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[(i + j) % n] = (out[(i + j) % n] + x * y).rem_euclid(p);
        }
    }
    out
}
