//! The universal enveloping algebra `U(gl(m))` in PBW normal form.
//!
//! Generators `E[a,b]` are totally ordered as lowering (`a > b`), then Cartan
//! (`a = b`), then raising (`a < b`), each block lexicographic. A PBW monomial
//! is an exponent vector over that order. Products are straightened with
//! `[E_ab, E_cd] = δ_cb E_ad - δ_ad E_cb`.
//!
//! With this order the Cartan-only part of a central element is its
//! Harish-Chandra image: raising factors on the right kill a highest-weight
//! vector, and any surviving lowering factor moves it off the highest weight.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mattens::Coefficient;
use crate::scalar::{write_sum, Q};
use crate::weyl::{WeylDims, WeylElement};

/// Generators `(a, b)` (1-based) in PBW order.
pub fn generator_order(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(m * m);
    for a in 1..=m {
        for b in 1..a {
            out.push((a, b));
        }
    }
    out.extend((1..=m).map(|a| (a, a)));
    for a in 1..=m {
        for b in a + 1..=m {
            out.push((a, b));
        }
    }
    out
}

/// Position of `E[a,b]` in [`generator_order`].
fn generator_index(m: usize, a: usize, b: usize) -> usize {
    match a.cmp(&b) {
        // lowering block: pairs (a', b') with a' > b', a' < a come first
        Ordering::Greater => (a - 1) * (a - 2) / 2 + (b - 1),
        Ordering::Equal => m * (m - 1) / 2 + (a - 1),
        Ordering::Less => {
            let lowering_and_cartan = m * (m - 1) / 2 + m;
            // rows 1..a-1 of the raising block contribute (m - r) each
            let before: usize = (1..a).map(|r| m - r).sum();
            lowering_and_cartan + before + (b - a - 1)
        }
    }
}

/// Exponent vector over the PBW generator order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    exps: Vec<u16>,
}

impl PbwMonomial {
    pub fn one(m: usize) -> Self {
        PbwMonomial {
            exps: vec![0; m * m],
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    fn from_sorted_word(m: usize, word: &[usize]) -> Self {
        let mut exps = vec![0u16; m * m];
        for &g in word {
            exps[g] += 1;
        }
        PbwMonomial { exps }
    }

    fn word(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }

    fn render(&self, order: &[(usize, usize)]) -> String {
        let mut parts = Vec::new();
        for (g, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (a, b) = order[g];
            if e == 1 {
                parts.push(format!("E[{a},{b}]"));
            } else {
                parts.push(format!("E[{a},{b}]^{e}"));
            }
        }
        parts.join(" ")
    }
}

// degree first, then exponents
impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `U(gl(m))` as a rational combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UglElement {
    m: usize,
    terms: BTreeMap<PbwMonomial, Q>,
}

/// Outcome of a centrality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Centrality {
    Central,
    /// `[u, E[a,b]]` is the first non-vanishing commutator in PBW generator order.
    NotCentral {
        a: usize,
        b: usize,
        commutator: UglElement,
    },
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        matches!(self, Centrality::Central)
    }
}

impl UglElement {
    pub fn zero(m: usize) -> Self {
        UglElement {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Q::one())
    }

    pub fn constant(m: usize, c: Q) -> Self {
        let mut out = Self::zero(m);
        out.add_term(PbwMonomial::one(m), c);
        out
    }

    /// The generator `E[a,b]` (1-based).
    pub fn generator(m: usize, a: usize, b: usize) -> Self {
        assert!(
            (1..=m).contains(&a) && (1..=m).contains(&b),
            "E[{a},{b}] outside gl({m})"
        );
        let mut mono = PbwMonomial::one(m);
        mono.exps[generator_index(m, a, b)] = 1;
        let mut out = Self::zero(m);
        out.add_term(mono, Q::one());
        out
    }

    /// `Σ_a E[a,a]`.
    pub fn trace_generator(m: usize) -> Self {
        let mut out = Self::zero(m);
        for a in 1..=m {
            out.add_assign_unchecked(&Self::generator(m, a, a));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.m
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PbwMonomial, &Q)> {
        self.terms.iter()
    }

    /// Coefficient of the PBW monomial given by `(generator, exponent)` pairs.
    pub fn coefficient_of(&self, factors: &[((usize, usize), u16)]) -> Q {
        let mut mono = PbwMonomial::one(self.m);
        for &((a, b), e) in factors {
            mono.exps[generator_index(self.m, a, b)] += e;
        }
        self.terms.get(&mono).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, mono: PbwMonomial, c: Q) {
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

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch(format!(
                "gl({}) vs gl({})",
                self.m, other.m
            )));
        }
        Ok(())
    }

    fn add_assign_unchecked(&mut self, other: &Self) {
        for (mono, c) in &other.terms {
            self.add_term(mono.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        UglElement {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self.multiply_unchecked(other))
    }

    fn multiply_unchecked(&self, other: &Self) -> Self {
        let mut pending = Pending::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut word = m1.word();
                word.extend(m2.word());
                *pending.entry((word.len(), word)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        straighten(self.m, pending)
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// Tests `[self, E[a,b]] = 0` for every generator.
    pub fn centrality(&self) -> Centrality {
        let order = generator_order(self.m);
        let commutators: Vec<UglElement> = order
            .par_iter()
            .map(|&(a, b)| {
                self.commutator(&UglElement::generator(self.m, a, b))
                    .expect("same rank")
            })
            .collect();
        for (&(a, b), commutator) in order.iter().zip(commutators) {
            if !commutator.is_zero() {
                return Centrality::NotCentral { a, b, commutator };
            }
        }
        Centrality::Central
    }

    /// The part of the PBW expansion that involves Cartan generators only.
    pub fn cartan_part(&self) -> UglElement {
        let cartan = |g: usize| {
            let (a, b) = generator_order(self.m)[g];
            a == b
        };
        UglElement {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(mono, _)| {
                    mono.exps
                        .iter()
                        .enumerate()
                        .all(|(g, &e)| e == 0 || cartan(g))
                })
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// Words in the generator indices awaiting straightening, keyed by `(length, word)`.
type Pending = BTreeMap<(usize, Vec<usize>), Q>;

/// Rewrites words in the generators into PBW order.
///
/// Each step swaps the first adjacent descent `g h` (`g > h`) into `h g` and
/// adds the commutator `[g, h]`, a single generator. Both results are smaller
/// in the (length, inversions) order, so the process terminates.
fn straighten(m: usize, mut pending: Pending) -> UglElement {
    let order = generator_order(m);
    let mut out = UglElement::zero(m);
    // longest words first so that equal words produced along the way merge
    while let Some(((_, word), c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let Some(i) = (0..word.len().saturating_sub(1)).find(|&i| word[i] > word[i + 1]) else {
            out.add_term(PbwMonomial::from_sorted_word(m, &word), c);
            continue;
        };
        let (g, h) = (word[i], word[i + 1]);
        let mut swapped = word.clone();
        swapped.swap(i, i + 1);
        *pending
            .entry((swapped.len(), swapped))
            .or_insert_with(Q::zero) += &c;
        // [E_ab, E_cd] = δ_cb E_ad - δ_ad E_cb
        let ((a, b), (cc, d)) = (order[g], order[h]);
        if cc == b {
            let mut w = word[..i].to_vec();
            w.push(generator_index(m, a, d));
            w.extend_from_slice(&word[i + 2..]);
            *pending.entry((w.len(), w)).or_insert_with(Q::zero) += &c;
        }
        if a == d {
            let mut w = word[..i].to_vec();
            w.push(generator_index(m, cc, b));
            w.extend_from_slice(&word[i + 2..]);
            *pending.entry((w.len(), w)).or_insert_with(Q::zero) -= &c;
        }
    }
    out
}

impl fmt::Display for UglElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = generator_order(self.m);
        write_sum(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(mono, c)| (c, mono.render(&order))),
        )
    }
}

impl Coefficient for UglElement {
    type Context = usize;

    fn context(&self) -> usize {
        self.m
    }

    fn zero_in(ctx: &usize) -> Self {
        UglElement::zero(*ctx)
    }

    fn from_scalar(ctx: &usize, c: &Q) -> Self {
        UglElement::constant(*ctx, c.clone())
    }

    fn is_null(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, other: &Self) {
        self.add_assign_unchecked(other);
    }

    fn product(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        self.multiply_unchecked(other)
    }

    fn scale(&self, c: &Q) -> Self {
        UglElement::scale(self, c)
    }

    fn term_count(&self) -> usize {
        self.terms.len()
    }
}

pub fn ugl_multiply(u: &UglElement, v: &UglElement) -> Result<UglElement> {
    u.multiply(v)
}

/// Image of `E[a,b]` under `E[a,b] ↦ Σ_i x[a,i] D[b,i]`.
pub fn generator_to_weyl(m: usize, n: usize, a: usize, b: usize) -> WeylElement {
    let dims = WeylDims::new(m, n);
    let mut out = WeylElement::zero(dims);
    for i in 1..=n {
        let t = WeylElement::x(dims, a, i)
            .multiply(&WeylElement::d(dims, b, i))
            .expect("same grid");
        out = out.add(&t).expect("same grid");
    }
    out
}

/// The algebra homomorphism `U(gl(m)) → PD(m×n)` determined by `E[a,b] ↦ Σ_i x[a,i] D[b,i]`.
pub fn ugl_to_weyl(u: &UglElement, n: usize) -> Result<WeylElement> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "number of columns n",
            value: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    let m = u.m;
    let dims = WeylDims::new(m, n);
    let images: Vec<WeylElement> = generator_order(m)
        .iter()
        .map(|&(a, b)| generator_to_weyl(m, n, a, b))
        .collect();
    let mut out = WeylElement::zero(dims);
    for (mono, c) in &u.terms {
        let mut img = WeylElement::constant(dims, c.clone());
        for (g, &e) in mono.exps.iter().enumerate() {
            for _ in 0..e {
                img = img.multiply(&images[g])?;
            }
        }
        out = out.add(&img)?;
    }
    Ok(out)
}

/// Centrality test with the first non-vanishing commutator as witness.
pub fn is_central(u: &UglElement) -> Centrality {
    u.centrality()
}

/// Eigenvalue of a central element on the highest-weight module with the given weight.
pub fn hc_eigenvalue(u: &UglElement, weights: &[Q]) -> Result<Q> {
    if weights.len() != u.m {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for gl({})",
            weights.len(),
            u.m
        )));
    }
    if let Centrality::NotCentral { a, b, commutator } = u.centrality() {
        return Err(Error::NotCentral {
            element: u.to_string(),
            a,
            b,
            commutator: commutator.to_string(),
        });
    }
    let order = generator_order(u.m);
    let mut total = Q::zero();
    for (mono, c) in &u.cartan_part().terms {
        let mut v = c.clone();
        for (g, &e) in mono.exps.iter().enumerate() {
            if e > 0 {
                let (a, _) = order[g];
                for _ in 0..e {
                    v *= &weights[a - 1];
                }
            }
        }
        total += v;
    }
    Ok(total)
}
