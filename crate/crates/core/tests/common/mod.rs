//! Independent oracles shared by the integration tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};

use capelli_core::symcore::{GroupAlgebraElement, Permutation};
use capelli_core::ugl::UglElement;
use capelli_core::weyl::{Polynomial, WeylDims, WeylElement, WeylMonomial};
use capelli_core::young::{SeminormalRep, StandardTableau};
use capelli_core::Q;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

// ---------------------------------------------------------------- Weyl

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    X(usize),
    D(usize),
}

/// Word `x^α D^β` with letters in slot order.
pub fn monomial_word(x: &[u16], d: &[u16]) -> Vec<Letter> {
    let mut w = Vec::new();
    for (s, &e) in x.iter().enumerate() {
        w.extend(std::iter::repeat_n(Letter::X(s), e as usize));
    }
    for (s, &e) in d.iter().enumerate() {
        w.extend(std::iter::repeat_n(Letter::D(s), e as usize));
    }
    w
}

/// Normal-orders a word by repeatedly rewriting the leftmost `D_s x_t` as
/// `x_t D_s + δ_st`.
pub fn naive_normal_order(dims: WeylDims, word: Vec<Letter>) -> WeylElement {
    let slots = dims.slots();
    let mut pending: BTreeMap<Vec<Letter>, Q> = BTreeMap::new();
    pending.insert(word, Q::one());
    let mut out = WeylElement::zero(dims);
    while let Some((w, c)) = pending.pop_first() {
        let swap = w
            .windows(2)
            .position(|p| matches!(p, [Letter::D(_), Letter::X(_)]));
        match swap {
            None => {
                let mut x = vec![0u16; slots];
                let mut d = vec![0u16; slots];
                for l in &w {
                    match *l {
                        Letter::X(s) => x[s] += 1,
                        Letter::D(s) => d[s] += 1,
                    }
                }
                let t = WeylElement::from_monomial(dims, WeylMonomial::new(x, d), c);
                out = out.add(&t).unwrap();
            }
            Some(i) => {
                let (Letter::D(s), Letter::X(t)) = (w[i], w[i + 1]) else {
                    unreachable!()
                };
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                push(&mut pending, swapped, c.clone());
                if s == t {
                    let mut dropped = w;
                    dropped.drain(i..i + 2);
                    push(&mut pending, dropped, c);
                }
            }
        }
    }
    out
}

fn push(pending: &mut BTreeMap<Vec<Letter>, Q>, w: Vec<Letter>, c: Q) {
    let e = pending.entry(w).or_insert_with(Q::zero);
    *e += c;
}

/// Naive product of two Weyl elements: concatenate words, then rewrite.
pub fn naive_multiply(u: &WeylElement, v: &WeylElement) -> WeylElement {
    let dims = u.dims();
    let mut out = WeylElement::zero(dims);
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let mut w = monomial_word(a.x_exponents(), a.d_exponents());
            w.extend(monomial_word(b.x_exponents(), b.d_exponents()));
            out = out
                .add(&naive_normal_order(dims, w).scale(&(ca * cb)))
                .unwrap();
        }
    }
    out
}

pub fn random_weyl_monomial(rng: &mut impl Rng, dims: WeylDims, max_exp: u16) -> WeylMonomial {
    let slots = dims.slots();
    let x = (0..slots).map(|_| rng.gen_range(0..=max_exp)).collect();
    let d = (0..slots).map(|_| rng.gen_range(0..=max_exp)).collect();
    WeylMonomial::new(x, d)
}

pub fn random_weyl(rng: &mut impl Rng, dims: WeylDims, terms: usize, max_exp: u16) -> WeylElement {
    let mut out = WeylElement::zero(dims);
    for _ in 0..terms {
        let c = Q::from_integer(rng.gen_range(-3i64..=3).into());
        let mono = random_weyl_monomial(rng, dims, max_exp);
        out = out.add(&WeylElement::from_monomial(dims, mono, c)).unwrap();
    }
    out
}

// ---------------------------------------------------------------- U(gl(m))

/// Random combination of products of at most `max_degree` generators.
pub fn random_ugl(rng: &mut impl Rng, m: usize, terms: usize, max_degree: usize) -> UglElement {
    let mut out = UglElement::zero(m);
    for _ in 0..terms {
        let c = Q::from_integer(rng.gen_range(-3i64..=3).into());
        let mut t = UglElement::constant(m, c);
        for _ in 0..rng.gen_range(0..=max_degree) {
            let g = UglElement::generator(m, rng.gen_range(1..=m), rng.gen_range(1..=m));
            t = t.multiply(&g).unwrap();
        }
        out = out.add(&t).unwrap();
    }
    out
}

// ---------------------------------------------------------------- combinatorics

/// `k! / Π hook lengths`.
pub fn hook_length_dimension(shape: &[usize]) -> u64 {
    let k: usize = shape.iter().sum();
    let mut num: u64 = (1..=k as u64).product();
    let mut den: u64 = 1;
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&r| r > j).count();
            den *= (arm + leg + 1) as u64;
        }
    }
    let g = gcd(num, den);
    num /= g;
    den /= g;
    assert_eq!(den, 1);
    num
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `χ^λ` on the class of the given cycle type, by rim-hook removal on a beta-set.
pub fn murnaghan_nakayama(shape: &[usize], cycle_type: &[usize]) -> i64 {
    let l = shape.len();
    let beta: Vec<usize> = (0..l).map(|i| shape[i] + l - 1 - i).collect();
    mn_rec(&beta, cycle_type)
}

fn mn_rec(beta: &[usize], parts: &[usize]) -> i64 {
    let Some((&r, rest)) = parts.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let nb = b - r;
        let crossed = beta.iter().filter(|&&c| c > nb && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = nb;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&next, rest);
    }
    total
}

/// All permutations of `0..k` as one-line vectors, with the sign of each.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            (p, if inv % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

// ---------------------------------------------------------------- orthonormal representation

fn cell_of(t: &StandardTableau, r: usize) -> (usize, usize) {
    for (i, row) in t.rows().iter().enumerate() {
        if let Some(j) = row.iter().position(|&v| v == r) {
            return (i, j);
        }
    }
    panic!("{r} not in {t}");
}

fn swapped(t: &StandardTableau, r: usize) -> Vec<Vec<usize>> {
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| {
                    if v == r {
                        r + 1
                    } else if v == r + 1 {
                        r
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect()
}

type FloatMatrix = Vec<Vec<f64>>;

/// Young's orthogonal form: `ρ(s_r)` has `1/d` on the diagonal and `√(1 - 1/d²)`
/// coupling `T` with `s_r T`.
pub fn orthonormal_generators(rep: &SeminormalRep) -> Vec<FloatMatrix> {
    let tabs = rep.tableaux();
    let dim = tabs.len();
    let k = rep.shape().weight();
    let index: HashMap<Vec<Vec<usize>>, usize> = tabs
        .iter()
        .enumerate()
        .map(|(i, t)| (t.rows().to_vec(), i))
        .collect();
    (1..k)
        .map(|r| {
            let mut mat = vec![vec![0.0; dim]; dim];
            for (col, t) in tabs.iter().enumerate() {
                let (i1, j1) = cell_of(t, r);
                let (i2, j2) = cell_of(t, r + 1);
                let d = (j2 as f64 - i2 as f64) - (j1 as f64 - i1 as f64);
                mat[col][col] = 1.0 / d;
                if let Some(&other) = index.get(&swapped(t, r)) {
                    mat[other][col] = (1.0 - 1.0 / (d * d)).sqrt();
                }
            }
            mat
        })
        .collect()
}

fn float_mul(a: &FloatMatrix, b: &FloatMatrix) -> FloatMatrix {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for l in 0..n {
            if a[i][l] == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    out
}

/// Orthogonal matrices of every permutation, reached by breadth-first search
/// through `ρ(s ∘ s_r) = ρ(s) ρ(s_r)`.
pub fn orthonormal_matrices(rep: &SeminormalRep) -> Vec<(Vec<usize>, FloatMatrix)> {
    let k = rep.shape().weight();
    let gens = orthonormal_generators(rep);
    let dim = rep.dim();
    let id: Vec<usize> = (0..k).collect();
    let eye: FloatMatrix = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut seen: HashMap<Vec<usize>, FloatMatrix> = HashMap::new();
    seen.insert(id.clone(), eye);
    let mut queue = VecDeque::from([id]);
    while let Some(s) = queue.pop_front() {
        for r in 1..k {
            let mut t = s.clone();
            t.swap(r - 1, r);
            if seen.contains_key(&t) {
                continue;
            }
            let mat = float_mul(&seen[&s], &gens[r - 1]);
            seen.insert(t.clone(), mat);
            queue.push_back(t);
        }
    }
    seen.into_iter().collect()
}

/// `Σ_s ρ(s)_{T'T} s^{-1}` in the orthogonal form, keyed by `s^{-1}` in one-line notation (1-based).
pub fn orthonormal_psi(
    matrices: &[(Vec<usize>, FloatMatrix)],
    t: usize,
    t2: usize,
) -> Vec<(Vec<usize>, f64)> {
    matrices
        .iter()
        .map(|(s, mat)| {
            let mut inv = vec![0; s.len()];
            for (i, &v) in s.iter().enumerate() {
                inv[v] = i + 1;
            }
            (inv, mat[t2][t])
        })
        .collect()
}

/// Largest relative deviation of `float / exact` from its value on the first
/// support element; `None` if the supports differ.
pub fn ratio_deviation(exact: &GroupAlgebraElement, float: &[(Vec<usize>, f64)]) -> Option<f64> {
    let mut reference: Option<f64> = None;
    let mut worst: f64 = 0.0;
    for (one_line, v) in float {
        let p = Permutation::from_one_line(one_line).unwrap();
        let c = exact.coefficient(&p);
        if c.is_zero() {
            if v.abs() > 1e-12 {
                return None;
            }
            continue;
        }
        if v.abs() < 1e-12 {
            return None;
        }
        let ratio = v / c.to_f64().unwrap();
        match reference {
            None => reference = Some(ratio),
            Some(r) => worst = worst.max(((ratio - r) / r).abs()),
        }
    }
    reference.map(|_| worst)
}

// ---------------------------------------------------------------- highest weights

/// Leading `r × r` minor of `(x[a,i])` by the Leibniz sum.
pub fn leading_minor(dims: WeylDims, r: usize) -> Polynomial {
    let mut out = Polynomial::zero(dims);
    for (p, sign) in signed_permutations(r) {
        let mut term = Polynomial::constant(dims, Q::from_integer(sign.into()));
        for (a, &i) in p.iter().enumerate() {
            term = term.mul(&Polynomial::var(dims, a + 1, i + 1));
        }
        out = out.add(&term);
    }
    out
}

/// `Π_r Δ_r^{λ_r - λ_{r+1}}` on the `m × m` grid.
pub fn highest_weight_vector(weights: &[u32]) -> Polynomial {
    let m = weights.len();
    let dims = WeylDims::new(m, m);
    let mut f = Polynomial::one(dims);
    for r in 1..=m {
        let next = if r < m { weights[r] } else { 0 };
        f = f.mul(&leading_minor(dims, r).pow(weights[r - 1] - next));
    }
    f
}

/// The scalar `c` with `g = c · f`, if one exists.
pub fn polynomial_ratio(g: &Polynomial, f: &Polynomial) -> Option<Q> {
    let (e, fc) = f.terms().next()?;
    let gc = g
        .terms()
        .find(|(e2, _)| *e2 == e)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Q::zero);
    let c = gc / fc;
    (f.scale(&c) == *g).then_some(c)
}

// ---------------------------------------------------------------- linear algebra

/// Rank over `Q` by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &p;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= y * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficient vectors of Weyl elements over the union of their supports.
pub fn weyl_coefficient_rows(elems: &[WeylElement]) -> Vec<Vec<Q>> {
    let mut support: Vec<WeylMonomial> = elems
        .iter()
        .flat_map(|e| e.terms().map(|(m, _)| m.clone()))
        .collect();
    support.sort();
    support.dedup();
    elems
        .iter()
        .map(|e| support.iter().map(|m| e.coefficient(m)).collect())
        .collect()
}

pub fn is_integer(c: &Q) -> bool {
    c.is_integer() && !c.denom().is_negative()
}
