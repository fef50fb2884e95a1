//! Polynomial-coefficient differential operators in the variables `x[a,i]`,
//! `1 <= a <= m`, `1 <= i <= n`, kept in normal order (all `x` left of all `D`).
//!
//! Products are normal-ordered slot by slot with the closed contraction
//!
//! ```text
//! D^p x^q = Σ_j  j! C(p,j) C(q,j)  x^(q-j) D^(p-j)
//! ```
//!
//! which follows from `D x = x D + 1` and the commutation of distinct slots.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mattens::Coefficient;
use crate::scalar::{binomial, factorial, write_sum, Q};

/// Grid dimensions `(m, n)` of the variables `x[a,i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeylDims {
    pub m: usize,
    pub n: usize,
}

impl WeylDims {
    pub fn new(m: usize, n: usize) -> Self {
        WeylDims { m, n }
    }

    pub fn slots(&self) -> usize {
        self.m * self.n
    }

    fn slot(&self, a: usize, i: usize) -> usize {
        assert!(
            (1..=self.m).contains(&a) && (1..=self.n).contains(&i),
            "variable ({a},{i}) outside the {}x{} grid",
            self.m,
            self.n
        );
        (a - 1) * self.n + (i - 1)
    }
}

/// `x^α D^β` with exponent arrays flattened row-major over the `m × n` grid.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMonomial {
    x: Vec<u16>,
    d: Vec<u16>,
}

impl WeylMonomial {
    pub fn one(dims: WeylDims) -> Self {
        WeylMonomial {
            x: vec![0; dims.slots()],
            d: vec![0; dims.slots()],
        }
    }

    pub fn new(x: Vec<u16>, d: Vec<u16>) -> Self {
        assert_eq!(x.len(), d.len());
        WeylMonomial { x, d }
    }

    pub fn x_exponents(&self) -> &[u16] {
        &self.x
    }

    pub fn d_exponents(&self) -> &[u16] {
        &self.d
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().map(|&e| e as u32).sum()
    }

    pub fn d_degree(&self) -> u32 {
        self.d.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.x.iter().chain(&self.d).all(|&e| e == 0)
    }

    fn render(&self, n: usize) -> String {
        let mut parts = Vec::new();
        for (letter, exps) in [("x", &self.x), ("D", &self.d)] {
            for (s, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (a, i) = (s / n + 1, s % n + 1);
                if e == 1 {
                    parts.push(format!("{letter}[{a},{i}]"));
                } else {
                    parts.push(format!("{letter}[{a},{i}]^{e}"));
                }
            }
        }
        parts.join(" ")
    }
}

/// Coefficient table `(p, q) -> [j! C(p,j) C(q,j) for j = 0..=min(p,q)]`.
fn contraction_coefficients(p: u16, q: u16) -> Vec<BigInt> {
    (0..=p.min(q) as u32)
        .map(|j| factorial(j as usize) * binomial(p as u32, j) * binomial(q as u32, j))
        .collect()
}

/// Normal-ordered product of two monomials: `(x^α D^β)(x^γ D^δ)`.
fn multiply_monomials(
    lhs: &WeylMonomial,
    rhs: &WeylMonomial,
    mut emit: impl FnMut(WeylMonomial, BigInt),
) {
    let slots = lhs.x.len();
    let mut x: Vec<u16> = lhs.x.iter().zip(&rhs.x).map(|(a, b)| a + b).collect();
    let mut d: Vec<u16> = lhs.d.iter().zip(&rhs.d).map(|(a, b)| a + b).collect();
    // slots where a D on the left meets an x on the right
    let active: Vec<(usize, Vec<BigInt>)> = (0..slots)
        .filter(|&s| lhs.d[s] > 0 && rhs.x[s] > 0)
        .map(|s| (s, contraction_coefficients(lhs.d[s], rhs.x[s])))
        .collect();
    if active.is_empty() {
        emit(WeylMonomial { x, d }, BigInt::one());
        return;
    }
    let mut js = vec![0usize; active.len()];
    loop {
        let mut coeff = BigInt::one();
        for (idx, (s, table)) in active.iter().enumerate() {
            let j = js[idx];
            coeff *= &table[j];
            x[*s] = lhs.x[*s] + rhs.x[*s] - j as u16;
            d[*s] = lhs.d[*s] + rhs.d[*s] - j as u16;
        }
        emit(
            WeylMonomial {
                x: x.clone(),
                d: d.clone(),
            },
            coeff,
        );
        // odometer over the contraction counts
        let mut pos = 0;
        loop {
            if pos == active.len() {
                return;
            }
            if js[pos] + 1 < active[pos].1.len() {
                js[pos] += 1;
                break;
            }
            js[pos] = 0;
            pos += 1;
        }
    }
}

/// A sparse rational combination of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    dims: WeylDims,
    terms: BTreeMap<WeylMonomial, Q>,
}

impl WeylElement {
    pub fn zero(dims: WeylDims) -> Self {
        WeylElement {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dims: WeylDims) -> Self {
        Self::constant(dims, Q::one())
    }

    pub fn constant(dims: WeylDims, c: Q) -> Self {
        let mut out = Self::zero(dims);
        out.add_term(WeylMonomial::one(dims), c);
        out
    }

    /// The coordinate `x[a,i]` (1-based).
    pub fn x(dims: WeylDims, a: usize, i: usize) -> Self {
        let mut mono = WeylMonomial::one(dims);
        mono.x[dims.slot(a, i)] = 1;
        Self::from_monomial(dims, mono, Q::one())
    }

    /// The derivation `D[a,i] = ∂/∂x[a,i]` (1-based).
    pub fn d(dims: WeylDims, a: usize, i: usize) -> Self {
        let mut mono = WeylMonomial::one(dims);
        mono.d[dims.slot(a, i)] = 1;
        Self::from_monomial(dims, mono, Q::one())
    }

    pub fn from_monomial(dims: WeylDims, mono: WeylMonomial, c: Q) -> Self {
        assert_eq!(mono.x.len(), dims.slots());
        let mut out = Self::zero(dims);
        out.add_term(mono, c);
        out
    }

    pub fn dims(&self) -> WeylDims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeylMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &WeylMonomial) -> Q {
        self.terms.get(mono).cloned().unwrap_or_else(Q::zero)
    }

    pub(crate) fn add_term(&mut self, mono: WeylMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `x`-degree minus `D`-degree if every term shares it.
    pub fn degree_difference(&self) -> Option<i64> {
        let mut diffs = self
            .terms
            .keys()
            .map(|m| m.x_degree() as i64 - m.d_degree() as i64);
        let first = diffs.next()?;
        diffs.all(|d| d == first).then_some(first)
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(format!(
                "Weyl grids {}x{} and {}x{}",
                self.dims.m, self.dims.n, other.dims.m, other.dims.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    fn add_assign_unchecked(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.dims);
        }
        WeylElement {
            dims: self.dims,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self.multiply_unchecked(other))
    }

    fn multiply_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dims);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                multiply_monomials(m1, m2, |mono, k| {
                    out.add_term(mono, &c * Q::from_integer(k));
                });
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.dims), |acc, _| acc.multiply_unchecked(self))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dims.n;
        write_sum(f, self.terms.iter().rev().map(|(m, c)| (c, m.render(n))))
    }
}

impl Coefficient for WeylElement {
    type Context = WeylDims;

    fn context(&self) -> WeylDims {
        self.dims
    }

    fn zero_in(ctx: &WeylDims) -> Self {
        WeylElement::zero(*ctx)
    }

    fn from_scalar(ctx: &WeylDims, c: &Q) -> Self {
        WeylElement::constant(*ctx, c.clone())
    }

    fn is_null(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, other: &Self) {
        self.add_assign_unchecked(other);
    }

    fn product(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dims, other.dims);
        self.multiply_unchecked(other)
    }

    fn scale(&self, c: &Q) -> Self {
        WeylElement::scale(self, c)
    }

    fn term_count(&self) -> usize {
        self.terms.len()
    }
}

/// Normal-ordered product.
pub fn weyl_multiply(u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
    u.multiply(v)
}

/// A polynomial in the commuting variables `x[a,i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    dims: WeylDims,
    terms: BTreeMap<Vec<u16>, Q>,
}

impl Polynomial {
    pub fn zero(dims: WeylDims) -> Self {
        Polynomial {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dims: WeylDims, c: Q) -> Self {
        let mut out = Self::zero(dims);
        out.add_term(vec![0; dims.slots()], c);
        out
    }

    pub fn one(dims: WeylDims) -> Self {
        Self::constant(dims, Q::one())
    }

    pub fn var(dims: WeylDims, a: usize, i: usize) -> Self {
        let mut e = vec![0; dims.slots()];
        e[dims.slot(a, i)] = 1;
        let mut out = Self::zero(dims);
        out.add_term(e, Q::one());
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u16>, Q)>>(dims: WeylDims, terms: I) -> Self {
        let mut out = Self::zero(dims);
        for (e, c) in terms {
            assert_eq!(e.len(), dims.slots());
            out.add_term(e, c);
        }
        out
    }

    pub fn dims(&self) -> WeylDims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u16>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        Polynomial::from_terms(
            self.dims,
            self.terms.iter().map(|(e, v)| (e.clone(), v * c)),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims);
        let mut out = Self::zero(self.dims);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.dims), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dims.n;
        write_sum(
            f,
            self.terms.iter().rev().map(|(e, c)| {
                let mono = WeylMonomial {
                    x: e.clone(),
                    d: vec![0; e.len()],
                };
                (c, mono.render(n))
            }),
        )
    }
}

/// Applies a differential operator to a polynomial.
pub fn weyl_apply(u: &WeylElement, f: &Polynomial) -> Result<Polynomial> {
    if u.dims != f.dims {
        return Err(Error::DimensionMismatch(format!(
            "operator on {}x{} applied to polynomial on {}x{}",
            u.dims.m, u.dims.n, f.dims.m, f.dims.n
        )));
    }
    let mut out = Polynomial::zero(f.dims);
    for (mono, c) in &u.terms {
        'terms: for (e, fc) in &f.terms {
            // D^β x^γ = Π γ_s (γ_s - 1) ... (γ_s - β_s + 1) x^(γ - β)
            let mut coeff = c * fc;
            let mut exps = Vec::with_capacity(e.len());
            for (s, &g) in e.iter().enumerate() {
                let b = mono.d[s];
                if b > g {
                    continue 'terms;
                }
                for t in 0..b {
                    coeff *= Q::from_integer(BigInt::from(g - t));
                }
                exps.push(g - b + mono.x[s]);
            }
            out.add_term(exps, coeff);
        }
    }
    Ok(out)
}
