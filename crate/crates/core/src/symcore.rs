//! Permutations, the rational group algebra `Q[S_k]` and Jucys–Murphy elements.
//!
//! Composition convention: `p.compose(&q)` applies `q` first, then `p`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{write_sum, Q};

/// A permutation of `{1..k}` stored in one-line notation.
///
/// Ordering is lexicographic on the one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based images: images[i] = p(i+1) - 1
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        let mut zero_based = Vec::with_capacity(k);
        for &v in images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// The transposition `(i j)` in `S_k` (1-based, `i != j`).
    pub fn transposition(k: usize, i: usize, j: usize) -> Result<Self> {
        Self::cycle(k, &[i, j])
    }

    /// The cycle `(c_1 c_2 ... c_l)` in `S_k` (1-based).
    pub fn cycle(k: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut seen = vec![false; k];
        for &c in cycle {
            if c == 0 || c > k || seen[c - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "cycle {cycle:?} in S_{k}"
                )));
            }
            seen[c - 1] = true;
        }
        for (idx, &c) in cycle.iter().enumerate() {
            let next = cycle[(idx + 1) % cycle.len()];
            images[c - 1] = next - 1;
        }
        Ok(Permutation { images })
    }

    /// Adjacent transposition `s_r = (r r+1)`, 1-based.
    pub fn adjacent(k: usize, r: usize) -> Result<Self> {
        if r == 0 || r >= k {
            return Err(Error::OutOfRange {
                what: "adjacent transposition index",
                value: r as i64,
                lo: 1,
                hi: k as i64 - 1,
            });
        }
        Self::transposition(k, r, r + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub(crate) fn images0(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    /// The same permutation viewed in `S_k` for `k >= degree`, fixing the new points.
    pub fn embed(&self, k: usize) -> Result<Self> {
        if k < self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), k));
        }
        let mut images = self.images.clone();
        images.extend(self.degree()..k);
        Ok(Permutation { images })
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point (1-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.images[i];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Sequence of adjacent transpositions `r_1, ..., r_L` with
    /// `self = s_{r_1} s_{r_2} ... s_{r_L}`, obtained by bubble-sorting the
    /// one-line notation. `L` is the number of inversions.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut swaps = Vec::new();
        let k = w.len();
        for pass in 0..k {
            for i in 0..k.saturating_sub(1 + pass) {
                if w[i] > w[i + 1] {
                    // w ∘ s_{i+1}
                    w.swap(i, i + 1);
                    swaps.push(i + 1);
                }
            }
        }
        // w s_{a_1} ... s_{a_L} = e  =>  w = s_{a_L} ... s_{a_1}
        swaps.reverse();
        swaps
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"` or `"()"` for an element of `S_k`.
    ///
    /// Points inside a cycle may be separated by whitespace or commas; a cycle
    /// written without separators (`"(123)"`) is read digit by digit.
    pub fn parse_cycles(s: &str, k: usize) -> Result<Self> {
        let mut result = Permutation::identity(k);
        for cyc in parse_cycle_list(s)? {
            if cyc.len() < 2 {
                if let Some(&c) = cyc.first() {
                    if c == 0 || c > k {
                        return Err(Error::InvalidPermutation(s.to_string()));
                    }
                }
                continue;
            }
            let c = Permutation::cycle(k, &cyc)?;
            result = result.compose_unchecked(&c);
        }
        Ok(result)
    }

    /// One-line notation `"[2,1,4,3]"`.
    pub fn to_one_line_string(&self) -> String {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Cycle notation `"(1 2)(3 4)"`; the identity prints as `"()"`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                format!("({})", parts.join(" "))
            })
            .collect()
    }
}

fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let bad = || Error::InvalidPermutation(s.to_string());
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let body = rest[..close].trim();
        rest = rest[close + 1..].trim_start();
        let has_sep = body.contains(|c: char| c.is_whitespace() || c == ',');
        let cyc: Vec<usize> = if has_sep {
            body.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        out.push(cyc);
    }
    Ok(out)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// Parses one-line notation `"[2,1,3]"` (degree = length) or cycle notation
/// (degree = largest point mentioned).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let images: Vec<usize> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|v| {
                        v.trim()
                            .parse()
                            .map_err(|_| Error::InvalidPermutation(s.into()))
                    })
                    .collect::<Result<_>>()?
            };
            return Permutation::from_one_line(&images);
        }
        let k = parse_cycle_list(t)?
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0);
        Permutation::parse_cycles(t, k)
    }
}

/// All permutations of degree `k` in lexicographic order of one-line notation.
pub fn all_permutations(k: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..k).collect();
    let mut out = vec![Permutation {
        images: current.clone(),
    }];
    // next lexicographic permutation
    while let Some(i) = (0..k.saturating_sub(1))
        .rev()
        .find(|&i| current[i] < current[i + 1])
    {
        let j = (i + 1..k).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(Permutation {
            images: current.clone(),
        });
    }
    out
}

/// `compose(p, q)`: apply `q` first, then `p`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

/// A finite rational linear combination of permutations of a fixed degree.
///
/// Terms are kept sorted by one-line notation with zero coefficients removed,
/// so structural equality is equality in `Q[S_k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(k: usize) -> Self {
        GroupAlgebraElement {
            degree: k,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_permutation(Permutation::identity(k))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let degree = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, Q::one());
        GroupAlgebraElement { degree, terms }
    }

    /// Collects `(permutation, coefficient)` pairs, merging repeats and dropping zeros.
    pub fn from_terms<I>(k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Q)>,
    {
        let mut out = Self::zero(k);
        for (p, c) in terms {
            if p.degree() != k {
                return Err(Error::DegreeMismatch(k, p.degree()));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, p: Permutation, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Q)> {
        self.terms.iter()
    }

    /// Sum of all coefficients (the image under the trivial character).
    pub fn coefficient_sum(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Bilinear extension of [`Permutation::compose`].
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose_unchecked(q), a * b);
            }
        }
        Ok(out)
    }

    /// Image under the embedding `S_j ⊂ S_k` fixing `j+1..k`.
    pub fn embed(&self, k: usize) -> Result<Self> {
        let mut out = Self::zero(k);
        for (p, c) in &self.terms {
            out.add_term(p.embed(k)?, c.clone());
        }
        Ok(out)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(p, c)| (c, p.to_cycle_string())))
    }
}

pub fn ga_multiply(
    u: &GroupAlgebraElement,
    v: &GroupAlgebraElement,
) -> Result<GroupAlgebraElement> {
    u.multiply(v)
}

/// The Jucys–Murphy element `X_r = (1 r) + (2 r) + ... + (r-1 r)` in `Q[S_k]`.
pub fn jm_element(k: usize, r: usize) -> Result<GroupAlgebraElement> {
    if r == 0 || r > k {
        return Err(Error::OutOfRange {
            what: "Jucys-Murphy index",
            value: r as i64,
            lo: 1,
            hi: k as i64,
        });
    }
    GroupAlgebraElement::from_terms(
        k,
        (1..r).map(|i| (Permutation::transposition(k, i, r).unwrap(), Q::one())),
    )
}
