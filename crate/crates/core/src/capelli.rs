//! Both sides of the higher Capelli identities, proof-step checks and quantum immanants.
//!
//! For standard tableaux `T`, `T'` of one shape with `k` boxes:
//!
//! ```text
//! (E - c_T(1)) ⊗ ... ⊗ (E - c_T(k)) · Ψ_{TT'}  =  X^{⊗k} · (D')^{⊗k} · Ψ_{TT'}
//! ```
//!
//! in `PD ⊗ (Mat_m)^{⊗k}`, where `E = X D'` has entries `E[a,b] = Σ_i x[a,i] D[b,i]`.
//! Taking the full trace with `T = T'` gives
//!
//! ```text
//! tr (E - c_T(1)) ⊗ ... ⊗ (E - c_T(k)) · Ψ_{TT}  =  (1/dim λ) tr X^{⊗k} · (D')^{⊗k} · χ^λ.
//! ```
//!
//! `Ψ` is the seminormal `Ψ̃` from [`crate::young`]; both identities are
//! homogeneous in it.

use std::fmt;
use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mattens::{
    full_trace, right_mul_group_algebra, tensor_matmul, tensor_product, AlgMatrix, Coefficient,
    TensorElement,
};
use crate::scalar::{factorial, q, Q};
use crate::symcore::{jm_element, GroupAlgebraElement};
use crate::ugl::UglElement;
use crate::weyl::{WeylDims, WeylElement};
use crate::young::{partitions, Partition, SeminormalRep, StandardTableau};

/// `X`, the `m × n` matrix of coordinates `x[a,i]`.
pub fn build_x(m: usize, n: usize) -> AlgMatrix<WeylElement> {
    let dims = WeylDims::new(m, n);
    AlgMatrix::from_fn(m, n, dims, |a, i| WeylElement::x(dims, a, i))
}

/// `D`, the `m × n` matrix of derivations `D[a,i]`.
pub fn build_d(m: usize, n: usize) -> AlgMatrix<WeylElement> {
    let dims = WeylDims::new(m, n);
    AlgMatrix::from_fn(m, n, dims, |a, i| WeylElement::d(dims, a, i))
}

/// `D'`, the transpose of [`build_d`].
pub fn build_d_transposed(m: usize, n: usize) -> AlgMatrix<WeylElement> {
    build_d(m, n).transpose()
}

/// `E` with entries `E[a,b] = Σ_i x[a,i] D[b,i]`.
pub fn build_e(m: usize, n: usize) -> AlgMatrix<WeylElement> {
    build_x(m, n)
        .matmul(&build_d_transposed(m, n))
        .expect("inner dimensions agree")
}

/// The `m × m` matrix of generators `E[a,b]` of `U(gl(m))`.
pub fn ugl_generator_matrix(m: usize) -> AlgMatrix<UglElement> {
    AlgMatrix::from_fn(m, m, m, |a, b| UglElement::generator(m, a, b))
}

/// `(E - c_1) ⊗ ... ⊗ (E - c_k)`.
pub fn shifted_tensor<A: Coefficient>(
    e: &AlgMatrix<A>,
    contents: &[i64],
) -> Result<TensorElement<A>> {
    let factors = contents
        .iter()
        .map(|&c| e.shift(&q(c)))
        .collect::<Result<Vec<_>>>()?;
    tensor_product(&factors)
}

/// `X^{⊗k} · (D')^{⊗k}`.
pub fn x_d_power(k: usize, m: usize, n: usize) -> Result<TensorElement<WeylElement>> {
    let x = vec![build_x(m, n); k];
    let dt = vec![build_d_transposed(m, n); k];
    tensor_matmul(&tensor_product(&x)?, &tensor_product(&dt)?)
}

fn check_pair(t: &StandardTableau, t2: &StandardTableau) -> Result<()> {
    if t.shape() != t2.shape() {
        return Err(Error::ShapeMismatch(
            t.shape().to_string(),
            t2.shape().to_string(),
        ));
    }
    Ok(())
}

/// Left side of the theorem, `(E - c_T(1)) ⊗ ... ⊗ (E - c_T(k)) · Ψ̃_{TT'}`.
pub fn lhs_theorem(
    t: &StandardTableau,
    t2: &StandardTableau,
    m: usize,
    n: usize,
) -> Result<TensorElement<WeylElement>> {
    check_pair(t, t2)?;
    let rep = SeminormalRep::new(t.shape());
    let psi = rep.psi(t, t2)?;
    lhs_with_element(&t.contents(), &psi, m, n)
}

/// Right side of the theorem, `X^{⊗k} · (D')^{⊗k} · Ψ̃_{TT'}`.
pub fn rhs_theorem(
    t: &StandardTableau,
    t2: &StandardTableau,
    m: usize,
    n: usize,
) -> Result<TensorElement<WeylElement>> {
    check_pair(t, t2)?;
    let rep = SeminormalRep::new(t.shape());
    let psi = rep.psi(t, t2)?;
    rhs_with_element(&psi, m, n)
}

/// `(E - c_1) ⊗ ... ⊗ (E - c_k) · g` for an arbitrary group-algebra element `g`.
pub fn lhs_with_element(
    contents: &[i64],
    g: &GroupAlgebraElement,
    m: usize,
    n: usize,
) -> Result<TensorElement<WeylElement>> {
    right_mul_group_algebra(&shifted_tensor(&build_e(m, n), contents)?, g)
}

/// `X^{⊗k} · (D')^{⊗k} · g`.
pub fn rhs_with_element(
    g: &GroupAlgebraElement,
    m: usize,
    n: usize,
) -> Result<TensorElement<WeylElement>> {
    right_mul_group_algebra(&x_d_power(g.degree(), m, n)?, g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    Theorem,
    Corollary,
    ProofSteps,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::Theorem => "theorem",
            CaseKind::Corollary => "corollary",
            CaseKind::ProofSteps => "proof-steps",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseDescriptor {
    pub kind: CaseKind,
    pub shape: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableau: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableau2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl fmt::Display for CaseDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} shape={}", self.kind, self.shape)?;
        if let Some(t) = &self.tableau {
            write!(f, " T={t}")?;
        }
        if let Some(t) = &self.tableau2 {
            write!(f, " T'={t}")?;
        }
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub case: CaseDescriptor,
    pub outcome: Outcome,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub first_diff: Option<String>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {} lhs_terms={} rhs_terms={} ({} ms)",
            self.case, self.lhs_terms, self.rhs_terms, self.millis
        )?;
        if let Some(diff) = &self.first_diff {
            write!(f, "\n  first difference: {diff}")?;
        }
        Ok(())
    }
}

fn outcome(pass: bool) -> Outcome {
    if pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

/// First monomial (in ascending order) on which two Weyl elements disagree.
pub fn weyl_first_diff(lhs: &WeylElement, rhs: &WeylElement) -> Option<String> {
    let diff = lhs.sub(rhs).ok()?;
    let (mono, _) = diff.terms().next()?;
    let one = WeylElement::from_monomial(lhs.dims(), mono.clone(), Q::one());
    Some(format!(
        "{one}: lhs {} vs rhs {}",
        lhs.coefficient(mono),
        rhs.coefficient(mono)
    ))
}

/// First `(multi-index pair, monomial)` on which two tensors disagree.
pub fn tensor_first_diff(
    lhs: &TensorElement<WeylElement>,
    rhs: &TensorElement<WeylElement>,
) -> Option<String> {
    let diff = lhs.sub(rhs).ok()?;
    let (a, b, _) = diff.entries().next()?;
    let show = |idx: &[usize]| {
        let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
        format!("({})", parts.join(","))
    };
    let detail = weyl_first_diff(&lhs.get(a, b), &rhs.get(a, b)).unwrap_or_default();
    Some(format!("[{} {}] {detail}", show(a), show(b)))
}

fn millis_since(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn compare_theorem_sides(
    case: CaseDescriptor,
    start: Instant,
    lhs: &TensorElement<WeylElement>,
    rhs: &TensorElement<WeylElement>,
) -> VerificationReport {
    let pass = lhs == rhs;
    VerificationReport {
        case,
        outcome: outcome(pass),
        lhs_terms: lhs.term_count(),
        rhs_terms: rhs.term_count(),
        first_diff: if pass {
            None
        } else {
            tensor_first_diff(lhs, rhs)
        },
        millis: millis_since(start),
    }
}

fn theorem_case(
    shape: &Partition,
    t: &StandardTableau,
    t2: &StandardTableau,
    m: usize,
    n: usize,
) -> CaseDescriptor {
    CaseDescriptor {
        kind: CaseKind::Theorem,
        shape: shape.to_string(),
        tableau: Some(t.to_string()),
        tableau2: Some(t2.to_string()),
        m: Some(m),
        n: Some(n),
    }
}

/// Checks the theorem for one ordered pair of tableaux.
pub fn verify_theorem_pair(
    t: &StandardTableau,
    t2: &StandardTableau,
    m: usize,
    n: usize,
) -> Result<VerificationReport> {
    check_pair(t, t2)?;
    let start = Instant::now();
    let lhs = lhs_theorem(t, t2, m, n)?;
    let rhs = rhs_theorem(t, t2, m, n)?;
    Ok(compare_theorem_sides(
        theorem_case(t.shape(), t, t2, m, n),
        start,
        &lhs,
        &rhs,
    ))
}

/// Checks the theorem for every ordered pair of standard tableaux of `shape`,
/// with `Ψ̃_{TT'}` multiplied by `scale`.
pub fn verify_theorem_scaled(
    shape: &Partition,
    m: usize,
    n: usize,
    scale: &Q,
) -> Vec<VerificationReport> {
    let k = shape.weight();
    let rep = SeminormalRep::new(shape);
    rep.all_matrices();
    let e = build_e(m, n);
    let xd = x_d_power(k, m, n).expect("well-formed factors");
    let shifted: Vec<TensorElement<WeylElement>> = rep
        .tableaux()
        .par_iter()
        .map(|t| shifted_tensor(&e, &t.contents()).expect("square factors"))
        .collect();
    let dim = rep.dim();
    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let start = Instant::now();
            let psi = rep.psi_by_index(i, j).scale(scale);
            let lhs = right_mul_group_algebra(&shifted[i], &psi).expect("degrees agree");
            let rhs = right_mul_group_algebra(&xd, &psi).expect("degrees agree");
            let (t, t2) = (&rep.tableaux()[i], &rep.tableaux()[j]);
            compare_theorem_sides(theorem_case(shape, t, t2, m, n), start, &lhs, &rhs)
        })
        .collect()
}

/// Checks the theorem for every ordered pair of standard tableaux of `shape`.
pub fn verify_theorem(shape: &Partition, m: usize, n: usize) -> Vec<VerificationReport> {
    verify_theorem_scaled(shape, m, n, &Q::one())
}

/// Traced left side `tr (E - c_T(1)) ⊗ ... ⊗ (E - c_T(k)) · Ψ̃_{TT}` over the Weyl algebra.
pub fn corollary_lhs(t: &StandardTableau, m: usize, n: usize) -> Result<WeylElement> {
    full_trace(&lhs_theorem(t, t, m, n)?)
}

/// Traced right side `(1/dim λ) tr X^{⊗k} · (D')^{⊗k} · χ^λ`.
pub fn corollary_rhs(shape: &Partition, m: usize, n: usize) -> Result<WeylElement> {
    let rep = SeminormalRep::new(shape);
    let chi = rep.character_element();
    let traced = full_trace(&rhs_with_element(&chi, m, n)?)?;
    Ok(traced.scale(&Q::new(1.into(), rep.dim().into())))
}

/// Checks the traced identity for every standard tableau of `shape`, and that
/// the left side does not depend on the tableau.
pub fn verify_corollary(shape: &Partition, m: usize, n: usize) -> Vec<VerificationReport> {
    let start = Instant::now();
    let rep = SeminormalRep::new(shape);
    let rhs = corollary_rhs(shape, m, n).expect("well-formed factors");
    let rhs_millis = millis_since(start);
    let e = build_e(m, n);
    let lhs_all: Vec<(WeylElement, u64)> = (0..rep.dim())
        .into_par_iter()
        .map(|i| {
            let start = Instant::now();
            let t = &rep.tableaux()[i];
            let shifted = shifted_tensor(&e, &t.contents()).expect("square factors");
            let lhs =
                right_mul_group_algebra(&shifted, &rep.psi_by_index(i, i)).expect("degrees agree");
            (
                full_trace(&lhs).expect("square factors"),
                millis_since(start),
            )
        })
        .collect();
    let reference = &lhs_all[0].0;
    rep.tableaux()
        .iter()
        .zip(&lhs_all)
        .map(|(t, (lhs, millis))| {
            let matches_rhs = lhs == &rhs;
            let independent = lhs == reference;
            let first_diff = if !matches_rhs {
                weyl_first_diff(lhs, &rhs)
            } else if !independent {
                weyl_first_diff(lhs, reference).map(|d| format!("depends on tableau: {d}"))
            } else {
                None
            };
            VerificationReport {
                case: CaseDescriptor {
                    kind: CaseKind::Corollary,
                    shape: shape.to_string(),
                    tableau: Some(t.to_string()),
                    tableau2: None,
                    m: Some(m),
                    n: Some(n),
                },
                outcome: outcome(matches_rhs && independent),
                lhs_terms: lhs.len(),
                rhs_terms: rhs.len(),
                first_diff,
                millis: millis + rhs_millis,
            }
        })
        .collect()
}

/// The branching constant `dim μ / (k-1)!` where `μ` is the shape of `T` with `k` removed.
pub fn branching_constant(t: &StandardTableau) -> Q {
    let k = t.size();
    let u = t.remove_largest().expect("non-empty tableau");
    let dim_mu = SeminormalRep::new(u.shape()).dim();
    Q::new(dim_mu.into(), factorial(k - 1))
}

/// Checks the two group-algebra facts the induction step rests on, for every
/// ordered pair `(T, T')` of standard tableaux of `shape`:
///
/// 1. branching: `Ψ̃_{TT'} = (dim μ/(k-1)!) · Ψ̃_{UU} · Ψ̃_{TT'}`, with `U = T` minus the box holding `k`;
/// 2. Jucys–Murphy annihilation: `(X_k - c_T(k)) · Ψ̃_{TT'} = 0`.
pub fn verify_proof_steps(shape: &Partition) -> Result<VerificationReport> {
    let k = shape.weight();
    if k < 2 {
        return Err(Error::OutOfRange {
            what: "shape weight",
            value: k as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    let start = Instant::now();
    let rep = SeminormalRep::new(shape);
    let jm = jm_element(k, k)?;
    let dim = rep.dim();
    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .collect();
    let results: Vec<(usize, usize, Option<String>)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let t = &rep.tableaux()[i];
            let u = t.remove_largest().expect("k >= 2");
            let sub = SeminormalRep::new(u.shape());
            let psi_uu = sub.psi(&u, &u).expect("same shape").embed(k).expect("k >= k-1");
            let psi = rep.psi_by_index(i, j);
            let c = branching_constant(t);
            let branched = psi_uu.multiply(&psi).expect("same degree").scale(&c);
            let content = q(t.content(k).expect("k in range"));
            let shifted_jm = jm
                .sub(&GroupAlgebraElement::identity(k).scale(&content))
                .expect("same degree");
            let annihilated = shifted_jm.multiply(&psi).expect("same degree");
            let t2 = &rep.tableaux()[j];
            let failure = if branched != psi {
                Some(format!(
                    "branching fails for T={t}, T'={t2}: const={c}, lhs {psi} vs rhs {branched}"
                ))
            } else if !annihilated.is_zero() {
                Some(format!(
                    "JM annihilation fails for T={t}, T'={t2}: (X_{k} - ({content}))·Ψ = {annihilated}"
                ))
            } else {
                None
            };
            (psi.len(), branched.len(), failure)
        })
        .collect();
    let first_diff = results.iter().find_map(|(_, _, f)| f.clone());
    Ok(VerificationReport {
        case: CaseDescriptor {
            kind: CaseKind::ProofSteps,
            shape: shape.to_string(),
            tableau: None,
            tableau2: None,
            m: None,
            n: None,
        },
        outcome: outcome(first_diff.is_none()),
        lhs_terms: results.iter().map(|r| r.0).sum(),
        rhs_terms: results.iter().map(|r| r.1).sum(),
        first_diff,
        millis: millis_since(start),
    })
}

/// The quantum immanant `tr (E - c_T(1)) ⊗ ... ⊗ (E - c_T(k)) · Ψ̃_{TT}` in `U(gl(m))`.
pub fn quantum_immanant(shape: &Partition, t: &StandardTableau, m: usize) -> Result<UglElement> {
    if t.shape() != shape {
        return Err(Error::ShapeMismatch(
            t.shape().to_string(),
            shape.to_string(),
        ));
    }
    let rep = SeminormalRep::new(shape);
    let psi = rep.psi(t, t)?;
    let shifted = shifted_tensor(&ugl_generator_matrix(m), &t.contents())?;
    full_trace(&right_mul_group_algebra(&shifted, &psi)?)
}

/// Theorem, corollary and proof-step reports for every shape with at most
/// `max_k` boxes and every `1 <= m <= max_m`, `1 <= n <= max_n`, in that order.
pub fn sweep(max_k: usize, max_m: usize, max_n: usize) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for shape in partitions(k) {
            for m in 1..=max_m {
                for n in 1..=max_n {
                    out.extend(verify_theorem(&shape, m, n));
                    out.extend(verify_corollary(&shape, m, n));
                }
            }
            if k >= 2 {
                out.push(verify_proof_steps(&shape).expect("k >= 2"));
            }
        }
    }
    out
}
