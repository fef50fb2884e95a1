//! Matrices over a coefficient algebra and the tensor powers `A ⊗ (Mat_{p×q})^{⊗k}`.
//!
//! A [`TensorElement`] stores the coefficient of `e_{a_1 b_1} ⊗ ... ⊗ e_{a_k b_k}`
//! under the multi-index pair `((a_1..a_k), (b_1..b_k))`. The tensor product of
//! matrices multiplies entries in factor order, which matters when the
//! coefficient algebra is noncommutative.
//!
//! Permutations act by place permutation: `P(s)` sends `u_1 ⊗ ... ⊗ u_k` to
//! `u_{s^{-1}(1)} ⊗ ... ⊗ u_{s^{-1}(k)}`, so that `P(s ∘ t) = P(s) P(t)`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Q;
use crate::symcore::{GroupAlgebraElement, Permutation};

/// The operations a coefficient algebra must supply.
///
/// `Context` carries whatever is needed to build constants (grid size for the
/// Weyl algebra, rank for `U(gl(m))`, nothing for rationals).
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Context: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn context(&self) -> Self::Context;
    fn zero_in(ctx: &Self::Context) -> Self;
    fn from_scalar(ctx: &Self::Context, c: &Q) -> Self;
    fn is_null(&self) -> bool;
    fn accumulate(&mut self, other: &Self);
    fn product(&self, other: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;

    /// Number of basis terms in the canonical form.
    fn term_count(&self) -> usize;

    fn one_in(ctx: &Self::Context) -> Self {
        Self::from_scalar(ctx, &Q::one())
    }
}

impl Coefficient for Q {
    type Context = ();

    fn context(&self) {}

    fn zero_in(_: &()) -> Self {
        Q::zero()
    }

    fn from_scalar(_: &(), c: &Q) -> Self {
        c.clone()
    }

    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }

    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }

    fn product(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, c: &Q) -> Self {
        self * c
    }

    fn term_count(&self) -> usize {
        usize::from(!Zero::is_zero(self))
    }
}

/// A `p × q` matrix with entries in a coefficient algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgMatrix<A: Coefficient> {
    p: usize,
    q: usize,
    ctx: A::Context,
    entries: Vec<A>,
}

impl<A: Coefficient> AlgMatrix<A> {
    /// Builds the matrix with entry `(a, b) = f(a, b)`, indices 1-based.
    pub fn from_fn(
        p: usize,
        q: usize,
        ctx: A::Context,
        mut f: impl FnMut(usize, usize) -> A,
    ) -> Self {
        let mut entries = Vec::with_capacity(p * q);
        for a in 1..=p {
            for b in 1..=q {
                entries.push(f(a, b));
            }
        }
        AlgMatrix { p, q, ctx, entries }
    }

    pub fn zero(p: usize, q: usize, ctx: A::Context) -> Self {
        let z = A::zero_in(&ctx);
        Self::from_fn(p, q, ctx, |_, _| z.clone())
    }

    pub fn identity(p: usize, ctx: A::Context) -> Self {
        let (z, o) = (A::zero_in(&ctx), A::one_in(&ctx));
        Self::from_fn(p, p, ctx, |a, b| if a == b { o.clone() } else { z.clone() })
    }

    pub fn rows(&self) -> usize {
        self.p
    }

    pub fn cols(&self) -> usize {
        self.q
    }

    pub fn context(&self) -> &A::Context {
        &self.ctx
    }

    /// Entry `(a, b)`, 1-based.
    pub fn entry(&self, a: usize, b: usize) -> &A {
        &self.entries[(a - 1) * self.q + (b - 1)]
    }

    fn entry0(&self, a: usize, b: usize) -> &A {
        &self.entries[a * self.q + b]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.q, self.p, self.ctx.clone(), |a, b| {
            self.entry(b, a).clone()
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.p, self.q) != (other.p, other.q) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.p, self.q, other.p, other.q
            )));
        }
        Ok(Self::from_fn(self.p, self.q, self.ctx.clone(), |a, b| {
            let mut v = self.entry(a, b).clone();
            v.accumulate(other.entry(a, b));
            v
        }))
    }

    /// Matrix product; entry products are taken in the order `self[a,l] * other[l,b]`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.q != other.p {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.p, self.q, other.p, other.q
            )));
        }
        Ok(Self::from_fn(self.p, other.q, self.ctx.clone(), |a, b| {
            let mut acc = A::zero_in(&self.ctx);
            for l in 1..=self.q {
                acc.accumulate(&self.entry(a, l).product(other.entry(l, b)));
            }
            acc
        }))
    }

    /// `self - c · Id` for a square matrix.
    pub fn shift(&self, c: &Q) -> Result<Self> {
        if self.p != self.q {
            return Err(Error::NonSquare {
                p: self.p,
                q: self.q,
            });
        }
        let neg = A::from_scalar(&self.ctx, &-c);
        Ok(Self::from_fn(self.p, self.q, self.ctx.clone(), |a, b| {
            let mut v = self.entry(a, b).clone();
            if a == b {
                v.accumulate(&neg);
            }
            v
        }))
    }
}

pub type MultiIndex = Vec<usize>;

/// An element of `A ⊗ (Mat_{p×q})^{⊗k}` with sparse storage.
///
/// Multi-indices are stored 0-based and printed 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement<A: Coefficient> {
    k: usize,
    p: usize,
    q: usize,
    ctx: A::Context,
    terms: BTreeMap<(MultiIndex, MultiIndex), A>,
}

impl<A: Coefficient> TensorElement<A> {
    pub fn zero(k: usize, p: usize, q: usize, ctx: A::Context) -> Self {
        TensorElement {
            k,
            p,
            q,
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of `A ⊗ (Mat_{m×m})^{⊗k}`.
    pub fn identity(k: usize, m: usize, ctx: A::Context) -> Self {
        let one = A::one_in(&ctx);
        let mut out = Self::zero(k, m, m, ctx);
        for a in multi_indices(k, m) {
            out.terms.insert((a.clone(), a), one.clone());
        }
        out
    }

    pub fn factors(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> usize {
        self.p
    }

    pub fn cols(&self) -> usize {
        self.q
    }

    pub fn context(&self) -> &A::Context {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of non-zero multi-index entries.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total number of (multi-index pair, basis term) pairs.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(A::term_count).sum()
    }

    /// Entry at 0-based multi-indices.
    pub fn get(&self, a: &[usize], b: &[usize]) -> A {
        self.terms
            .get(&(a.to_vec(), b.to_vec()))
            .cloned()
            .unwrap_or_else(|| A::zero_in(&self.ctx))
    }

    /// Non-zero entries in lexicographic order of `(row multi-index, column multi-index)`.
    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &MultiIndex, &A)> {
        self.terms.iter().map(|((a, b), v)| (a, b, v))
    }

    fn add_entry(&mut self, key: (MultiIndex, MultiIndex), v: A) {
        if v.is_null() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(v);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().accumulate(&v);
                if e.get().is_null() {
                    e.remove();
                }
            }
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if (self.k, self.p, self.q) != (other.k, other.p, other.q) || self.ctx != other.ctx {
            return Err(Error::DimensionMismatch(format!(
                "tensor shapes {}x({}x{}) and {}x({}x{})",
                self.k, self.p, self.q, other.k, other.p, other.q
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (key, v) in &other.terms {
            out.add_entry(key.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    /// `self ⊗ m`, with entries `self[a,b] · m[a_{k+1},b_{k+1}]`.
    pub fn extend_by(&self, m: &AlgMatrix<A>) -> Result<Self> {
        if (m.p, m.q) != (self.p, self.q) || m.ctx != self.ctx {
            return Err(Error::DimensionMismatch(format!(
                "tensor factors {}x{} and {}x{}",
                self.p, self.q, m.p, m.q
            )));
        }
        let mut out = TensorElement::zero(self.k + 1, self.p, self.q, self.ctx.clone());
        for ((a, b), v) in &self.terms {
            for i in 0..m.p {
                for j in 0..m.q {
                    let e = m.entry0(i, j);
                    if e.is_null() {
                        continue;
                    }
                    let (mut a2, mut b2) = (a.clone(), b.clone());
                    a2.push(i);
                    b2.push(j);
                    out.add_entry((a2, b2), v.product(e));
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.k, self.p, self.q, self.ctx.clone());
        for (key, v) in &self.terms {
            out.add_entry(key.clone(), v.scale(c));
        }
        out
    }
}

impl<A: Coefficient> fmt::Display for TensorElement<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let show = |idx: &MultiIndex| {
            let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            format!("({})", parts.join(","))
        };
        let mut first = true;
        for ((a, b), v) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{} {}: {}", show(a), show(b), v)?;
        }
        Ok(())
    }
}

/// All multi-indices in `[0, size)^k`, lexicographically.
pub fn multi_indices(k: usize, size: usize) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..size).map(move |i| {
                    let mut v = prefix.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

/// `A ⊗ B ⊗ ... ⊗ C`: entry `((a),(b))` is `A[a_1,b_1] · B[a_2,b_2] · ... · C[a_k,b_k]`
/// multiplied left to right.
pub fn tensor_product<A: Coefficient>(matrices: &[AlgMatrix<A>]) -> Result<TensorElement<A>> {
    let first = matrices
        .first()
        .ok_or_else(|| Error::DimensionMismatch("empty tensor product".into()))?;
    let (p, q) = (first.p, first.q);
    for m in matrices {
        if (m.p, m.q) != (p, q) || m.ctx != first.ctx {
            return Err(Error::DimensionMismatch(format!(
                "tensor factors {}x{} and {}x{}",
                p, q, m.p, m.q
            )));
        }
    }
    let k = matrices.len();
    let mut out = TensorElement::zero(k, p, q, first.ctx.clone());
    // partial products over the first t factors
    let mut partial: Vec<(MultiIndex, MultiIndex, A)> =
        vec![(Vec::new(), Vec::new(), A::one_in(&first.ctx))];
    for m in matrices {
        let mut next = Vec::with_capacity(partial.len() * p * q);
        for (a, b, v) in &partial {
            for i in 0..p {
                for j in 0..q {
                    let e = m.entry0(i, j);
                    if e.is_null() {
                        continue;
                    }
                    let prod = v.product(e);
                    if prod.is_null() {
                        continue;
                    }
                    let (mut a2, mut b2) = (a.clone(), b.clone());
                    a2.push(i);
                    b2.push(j);
                    next.push((a2, b2, prod));
                }
            }
        }
        partial = next;
    }
    for (a, b, v) in partial {
        out.add_entry((a, b), v);
    }
    Ok(out)
}

/// Product contracting the inner multi-index; coefficients multiply as `u[a,b] · v[b,c]`.
pub fn tensor_matmul<A: Coefficient>(
    u: &TensorElement<A>,
    v: &TensorElement<A>,
) -> Result<TensorElement<A>> {
    if u.k != v.k || u.q != v.p || u.ctx != v.ctx {
        return Err(Error::DimensionMismatch(format!(
            "{}x({}x{}) times {}x({}x{})",
            u.k, u.p, u.q, v.k, v.p, v.q
        )));
    }
    let mut rows_of_v: HashMap<&MultiIndex, Vec<(&MultiIndex, &A)>> = HashMap::new();
    for ((b, c), val) in &v.terms {
        rows_of_v.entry(b).or_default().push((c, val));
    }
    let mut out = TensorElement::zero(u.k, u.p, v.q, u.ctx.clone());
    for ((a, b), x) in &u.terms {
        if let Some(row) = rows_of_v.get(b) {
            for (c, y) in row {
                out.add_entry((a.clone(), (*c).clone()), x.product(y));
            }
        }
    }
    Ok(out)
}

/// Matrix of the place permutation `P(s)` on `(C^m)^{⊗k}`:
/// entry `((a),(b))` is `Π_t [a_t = b_{s^{-1}(t)}]`.
pub fn perm_tensor<A: Coefficient>(s: &Permutation, m: usize, ctx: A::Context) -> TensorElement<A> {
    let k = s.degree();
    let inv = s.inverse();
    let one = A::one_in(&ctx);
    let mut out = TensorElement::zero(k, m, m, ctx);
    for b in multi_indices(k, m) {
        let a: MultiIndex = (0..k).map(|t| b[inv.images0()[t]]).collect();
        out.terms.insert((a, b), one.clone());
    }
    out
}

/// `u · Σ_s g_s P(s)`.
pub fn right_mul_group_algebra<A: Coefficient>(
    u: &TensorElement<A>,
    g: &GroupAlgebraElement,
) -> Result<TensorElement<A>> {
    if g.degree() != u.k {
        return Err(Error::DegreeMismatch(u.k, g.degree()));
    }
    let mut out = TensorElement::zero(u.k, u.p, u.q, u.ctx.clone());
    for (s, coeff) in g.terms() {
        let img = s.images0();
        for ((a, b), x) in &u.terms {
            // (u P(s))[a, c] = u[a, b] with c_j = b_{s(j)}
            let c: MultiIndex = (0..u.k).map(|j| b[img[j]]).collect();
            out.add_entry((a.clone(), c), x.scale(coeff));
        }
    }
    Ok(out)
}

/// `Σ_a u[(a),(a)]`.
pub fn full_trace<A: Coefficient>(u: &TensorElement<A>) -> Result<A> {
    if u.p != u.q {
        return Err(Error::NonSquare { p: u.p, q: u.q });
    }
    let mut acc = A::zero_in(&u.ctx);
    for ((a, b), v) in &u.terms {
        if a == b {
            acc.accumulate(v);
        }
    }
    Ok(acc)
}
