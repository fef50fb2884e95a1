//! Partitions, standard Young tableaux, contents and Young's seminormal representation.
//!
//! The seminormal form is used instead of the orthonormal one so that every
//! matrix coefficient is rational. For a standard tableau `T` and adjacent
//! transposition `s_r = (r r+1)` let `d = c_T(r+1) - c_T(r)` be the axial
//! distance. Then
//!
//! ```text
//! ρ(s_r) v_T = (1/d) v_T + β_T v_{s_r T}
//! ```
//!
//! where the second term is present only when `s_r T` is standard, and
//! `β_T = 1` if `r` lies in a higher row of `T` than `r+1`, else `β_T = 1 - 1/d²`.
//! Diagonal matrix coefficients agree with the orthonormal form; off-diagonal
//! ones differ by a diagonal change of basis.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{factorial, Q};
use crate::symcore::{all_permutations, GroupAlgebraElement, Permutation};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes `k`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..cols)
                .map(|j| self.parts.iter().filter(|&&p| p > j).count())
                .collect(),
        }
    }

    /// Number of standard tableaux of this shape, by enumeration.
    pub fn dimension(&self) -> usize {
        enumerate_standard_tableaux(self).len()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `"2,1"`; whitespace around parts is ignored.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `k`, in decreasing lexicographic order: `(k), (k-1,1), ..., (1^k)`.
pub fn partitions(k: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau; cells are 1-based `(row, column)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    // positions[r-1] = cell holding entry r
    positions: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// Builds a tableau from its rows, checking standardness.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = || Error::InvalidTableau(format_rows(&rows));
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).map_err(|_| bad())?;
        let k = shape.weight();
        let mut positions = vec![(0, 0); k];
        let mut seen = vec![false; k];
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > k || seen[v - 1] {
                    return Err(bad());
                }
                seen[v - 1] = true;
                positions[v - 1] = (i + 1, j + 1);
                if j > 0 && row[j - 1] >= v {
                    return Err(bad());
                }
                if i > 0 && rows[i - 1][j] >= v {
                    return Err(bad());
                }
            }
        }
        Ok(StandardTableau {
            shape,
            rows,
            positions,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Cell `(i, j)` holding entry `r`.
    pub fn position(&self, r: usize) -> Result<(usize, usize)> {
        if r == 0 || r > self.size() {
            return Err(Error::OutOfRange {
                what: "tableau entry",
                value: r as i64,
                lo: 1,
                hi: self.size() as i64,
            });
        }
        Ok(self.positions[r - 1])
    }

    /// Content `c_T(r) = j - i` of the cell holding `r`.
    pub fn content(&self, r: usize) -> Result<i64> {
        let (i, j) = self.position(r)?;
        Ok(j as i64 - i as i64)
    }

    /// Contents `c_T(1), ..., c_T(k)`.
    pub fn contents(&self) -> Vec<i64> {
        self.positions
            .iter()
            .map(|&(i, j)| j as i64 - i as i64)
            .collect()
    }

    /// The tableau obtained by removing the cell holding the largest entry.
    pub fn remove_largest(&self) -> Option<StandardTableau> {
        let k = self.size();
        if k == 0 {
            return None;
        }
        let (i, _) = self.positions[k - 1];
        let mut rows = self.rows.clone();
        rows[i - 1].pop();
        if rows[i - 1].is_empty() {
            rows.pop();
        }
        Some(
            StandardTableau::from_rows(rows)
                .expect("removing the largest entry keeps a standard tableau"),
        )
    }

    /// The tableau with entries `r` and `r+1` exchanged, if it is standard.
    pub fn swap_adjacent(&self, r: usize) -> Option<StandardTableau> {
        let (i1, j1) = self.positions[r - 1];
        let (i2, j2) = self.positions[r];
        if i1 == i2 || j1 == j2 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[i1 - 1][j1 - 1] = r + 1;
        rows[i2 - 1][j2 - 1] = r;
        StandardTableau::from_rows(rows).ok()
    }
}

fn format_rows(rows: &[Vec<usize>]) -> String {
    let inner: Vec<String> = rows
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", inner.join(","))
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rows(&self.rows))
    }
}

/// Parses row-major nested lists `"[[1,2],[3]]"`.
impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid tableau {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut rows = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('[').ok_or_else(bad)?;
            let close = body.find(']').ok_or_else(bad)?;
            let row = body[..close]
                .split(',')
                .map(|v| v.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
            rest = &body[close + 1..];
            rest = rest.strip_prefix(',').unwrap_or(rest);
        }
        StandardTableau::from_rows(rows)
    }
}

/// All standard tableaux of shape `shape`, ordered lexicographically by the
/// sequence of cells holding `1, 2, ..., k`.
pub fn enumerate_standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &[usize],
        next: usize,
        k: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > k {
            let filled: Vec<Vec<usize>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
            out.push(
                StandardTableau::from_rows(filled)
                    .expect("construction keeps rows and columns increasing"),
            );
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next);
                rec(shape, next + 1, k, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.length()];
    rec(shape.parts(), 1, shape.weight(), &mut rows, &mut out);
    out
}

/// Square matrix of rationals indexed by the standard tableaux of a shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    dim: usize,
    entries: Vec<Q>,
}

impl RepMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Q::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        RepMatrix {
            dim,
            entries: vec![Q::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Q {
        &self.entries[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, v: Q) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn mul(&self, other: &RepMatrix) -> RepMatrix {
        let n = self.dim;
        let mut out = RepMatrix::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RepMatrix) -> RepMatrix {
        RepMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn trace(&self) -> Q {
        (0..self.dim).fold(Q::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }
}

/// Young's seminormal representation of one shape, with a lazily filled
/// table of the matrices of all permutations.
pub struct SeminormalRep {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    generators: Vec<RepMatrix>,
    all: OnceLock<HashMap<Permutation, RepMatrix>>,
}

impl SeminormalRep {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = enumerate_standard_tableaux(shape);
        let index: HashMap<&StandardTableau, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let k = shape.weight();
        let dim = tableaux.len();
        let generators = (1..k)
            .map(|r| {
                let mut m = RepMatrix::zero(dim);
                for (col, t) in tableaux.iter().enumerate() {
                    let (row_r, _) = t.positions[r - 1];
                    let (row_next, _) = t.positions[r];
                    let d = t.contents()[r] - t.contents()[r - 1];
                    let inv_d = Q::new(1.into(), d.into());
                    if let Some(swapped) = t.swap_adjacent(r) {
                        let beta = if row_r < row_next {
                            Q::one()
                        } else {
                            Q::one() - &inv_d * &inv_d
                        };
                        m.set(index[&swapped], col, beta);
                    }
                    m.set(col, col, inv_d);
                }
                m
            })
            .collect();
        SeminormalRep {
            shape: shape.clone(),
            tableaux,
            generators,
            all: OnceLock::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn index_of(&self, t: &StandardTableau) -> Result<usize> {
        self.tableaux
            .iter()
            .position(|x| x == t)
            .ok_or_else(|| Error::ShapeMismatch(t.shape().to_string(), self.shape.to_string()))
    }

    /// `ρ(s_r)` for `1 <= r < k`.
    pub fn generator(&self, r: usize) -> &RepMatrix {
        &self.generators[r - 1]
    }

    /// `ρ(s)`, by multiplying generator matrices along a reduced word of `s`.
    pub fn matrix(&self, s: &Permutation) -> Result<RepMatrix> {
        let k = self.shape.weight();
        if s.degree() != k {
            return Err(Error::DegreeMismatch(s.degree(), k));
        }
        if let Some(all) = self.all.get() {
            return Ok(all[s].clone());
        }
        Ok(self.compute_matrix(s))
    }

    fn compute_matrix(&self, s: &Permutation) -> RepMatrix {
        s.reduced_word()
            .iter()
            .fold(RepMatrix::identity(self.dim()), |acc, &r| {
                acc.mul(self.generator(r))
            })
    }

    /// Matrices of every permutation of `S_k`.
    pub fn all_matrices(&self) -> &HashMap<Permutation, RepMatrix> {
        self.all.get_or_init(|| {
            all_permutations(self.shape.weight())
                .into_iter()
                .map(|s| {
                    let m = self.compute_matrix(&s);
                    (s, m)
                })
                .collect()
        })
    }

    /// `Ψ̃_{TT'} = Σ_s ρ(s)_{T'T} s^{-1}`, addressed by tableau indices.
    pub fn psi_by_index(&self, t: usize, t2: usize) -> GroupAlgebraElement {
        let k = self.shape.weight();
        let mut out = GroupAlgebraElement::zero(k);
        for (s, m) in self.all_matrices() {
            out.add_term(s.inverse(), m.get(t2, t).clone());
        }
        out
    }

    pub fn psi(&self, t: &StandardTableau, t2: &StandardTableau) -> Result<GroupAlgebraElement> {
        if t.shape() != t2.shape() {
            return Err(Error::ShapeMismatch(
                t.shape().to_string(),
                t2.shape().to_string(),
            ));
        }
        Ok(self.psi_by_index(self.index_of(t)?, self.index_of(t2)?))
    }

    /// `χ^λ = Σ_s tr ρ(s) · s`.
    pub fn character_element(&self) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.shape.weight());
        for (s, m) in self.all_matrices() {
            out.add_term(s.clone(), m.trace());
        }
        out
    }

    /// The normalising factor `dim λ / k!` that turns `Ψ̃_{TT}` into an idempotent.
    pub fn idempotent_factor(&self) -> Q {
        Q::new(self.dim().into(), factorial(self.shape.weight()))
    }
}

pub fn seminormal_matrix(shape: &Partition, s: &Permutation) -> Result<RepMatrix> {
    SeminormalRep::new(shape).matrix(s)
}

/// Matrix element `Ψ̃_{TT'} = Σ_s ρ(s)_{T'T} s^{-1}` in the seminormal normalisation.
pub fn psi(t: &StandardTableau, t2: &StandardTableau) -> Result<GroupAlgebraElement> {
    if t.shape() != t2.shape() {
        return Err(Error::ShapeMismatch(
            t.shape().to_string(),
            t2.shape().to_string(),
        ));
    }
    SeminormalRep::new(t.shape()).psi(t, t2)
}

pub fn character_element(shape: &Partition) -> GroupAlgebraElement {
    SeminormalRep::new(shape).character_element()
}

/// Integer character value `χ^λ(s)`.
pub fn character_value(shape: &Partition, s: &Permutation) -> Result<Q> {
    Ok(seminormal_matrix(shape, s)?.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, q_frac};
    use crate::symcore::jm_element;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn perm(s: &str, k: usize) -> Permutation {
        Permutation::parse_cycles(s, k).unwrap()
    }

    fn hook_length_dim(shape: &Partition) -> usize {
        let conj = shape.conjugate();
        let mut hooks = 1usize;
        for (i, &row) in shape.parts().iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j - 1) + (conj.parts()[j] - i - 1) + 1;
            }
        }
        let k: usize = (1..=shape.weight()).product();
        k / hooks
    }

    #[test]
    fn partition_syntax() {
        assert_eq!(part("2,1").to_string(), "2,1");
        assert_eq!(part(" 3, 1 ,1").parts(), &[3, 1, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
    }

    #[test]
    fn partition_enumeration() {
        let counts: Vec<usize> = (1..=6).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11]);
        assert_eq!(partitions(3), vec![part("3"), part("2,1"), part("1,1,1")]);
    }

    #[test]
    fn tableau_syntax() {
        let t = tab("[[1,2],[3]]");
        assert_eq!(t.to_string(), "[[1,2],[3]]");
        assert_eq!(tab("[ [1, 3], [2] ]").to_string(), "[[1,3],[2]]");
        assert!("[[2,1],[3]]".parse::<StandardTableau>().is_err());
        assert!("[[1,2],[2]]".parse::<StandardTableau>().is_err());
        assert!("[[1],[2,3]]".parse::<StandardTableau>().is_err());
        assert!("[[1,3],[4]]".parse::<StandardTableau>().is_err());
        assert!("[1,2]".parse::<StandardTableau>().is_err());
    }

    #[test]
    fn tableaux_examples() {
        assert_eq!(enumerate_standard_tableaux(&part("1,1,1")).len(), 1);
        let ts = enumerate_standard_tableaux(&part("2,1"));
        assert_eq!(ts, vec![tab("[[1,2],[3]]"), tab("[[1,3],[2]]")]);
        assert_eq!(enumerate_standard_tableaux(&part("2,2")).len(), 2);
    }

    #[test]
    fn dimension_matches_hook_length() {
        for k in 1..=7 {
            for p in partitions(k) {
                assert_eq!(p.dimension(), hook_length_dim(&p), "shape {p}");
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_in_positions() {
        for p in partitions(5) {
            let ts = enumerate_standard_tableaux(&p);
            assert!(ts.windows(2).all(|w| w[0].positions < w[1].positions));
        }
    }

    #[test]
    fn contents() {
        let t = tab("[[1,2],[3]]");
        assert_eq!(t.content(2).unwrap(), 1);
        assert_eq!(t.content(3).unwrap(), -1);
        assert_eq!(t.content(1).unwrap(), 0);
        assert!(t.content(0).is_err());
        assert!(t.content(4).is_err());
        for p in partitions(4) {
            for t in enumerate_standard_tableaux(&p) {
                assert_eq!(t.content(1).unwrap(), 0);
            }
        }
    }

    #[test]
    fn removing_largest_entry() {
        let t = tab("[[1,3],[2,4]]");
        assert_eq!(t.remove_largest().unwrap(), tab("[[1,3],[2]]"));
        assert_eq!(tab("[[1,2],[3]]").remove_largest().unwrap(), tab("[[1,2]]"));
    }

    #[test]
    fn seminormal_examples() {
        let shape = part("2,1");
        let m = seminormal_matrix(&shape, &perm("(1 2)", 3)).unwrap();
        assert_eq!(m.get(0, 0), &q(1));
        assert_eq!(m.get(1, 1), &q(-1));
        assert!(m.is_diagonal());
        assert_eq!(
            seminormal_matrix(&shape, &Permutation::identity(3)).unwrap(),
            RepMatrix::identity(2)
        );
        let m23 = seminormal_matrix(&shape, &perm("(2 3)", 3)).unwrap();
        assert_eq!(m23.get(0, 0), &q_frac(-1, 2));
        assert!(seminormal_matrix(&shape, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn generators_are_involutions_and_satisfy_braid_relations() {
        for k in 2..=6 {
            for p in partitions(k) {
                let rep = SeminormalRep::new(&p);
                let id = RepMatrix::identity(rep.dim());
                for r in 1..k {
                    let g = rep.generator(r);
                    assert_eq!(g.mul(g), id);
                    if r + 1 < k {
                        let h = rep.generator(r + 1);
                        assert_eq!(g.mul(h).mul(g), h.mul(g).mul(h), "braid {p} r={r}");
                    }
                    for s in r + 2..k {
                        let h = rep.generator(s);
                        assert_eq!(g.mul(h), h.mul(g));
                    }
                }
            }
        }
    }

    #[test]
    fn homomorphism_exhaustive_k4() {
        for k in 1..=4 {
            let perms = all_permutations(k);
            for p in partitions(k) {
                let rep = SeminormalRep::new(&p);
                for s in &perms {
                    for t in &perms {
                        assert_eq!(
                            rep.matrix(&s.compose(t).unwrap()).unwrap(),
                            rep.matrix(s).unwrap().mul(&rep.matrix(t).unwrap())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn jm_matrices_are_diagonal_with_contents() {
        for k in 1..=5 {
            for p in partitions(k) {
                let rep = SeminormalRep::new(&p);
                for r in 1..=k {
                    let mut sum = RepMatrix::zero(rep.dim());
                    for (s, _) in jm_element(k, r).unwrap().terms() {
                        sum = sum.add(&rep.matrix(s).unwrap());
                    }
                    assert!(sum.is_diagonal());
                    for (i, t) in rep.tableaux().iter().enumerate() {
                        assert_eq!(sum.get(i, i), &q(t.content(r).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        let t = tab("[[1,2]]");
        assert_eq!(psi(&t, &t).unwrap().to_string(), "() + (1 2)");
        let t = tab("[[1],[2]]");
        assert_eq!(psi(&t, &t).unwrap().to_string(), "() - (1 2)");
        let t1 = tab("[[1,2],[3]]");
        let expected = GroupAlgebraElement::from_terms(
            3,
            [
                ("()", q(1)),
                ("(1 2)", q(1)),
                ("(2 3)", q_frac(-1, 2)),
                ("(1 3)", q_frac(-1, 2)),
                ("(1 2 3)", q_frac(-1, 2)),
                ("(1 3 2)", q_frac(-1, 2)),
            ]
            .into_iter()
            .map(|(s, c)| (perm(s, 3), c)),
        )
        .unwrap();
        assert_eq!(psi(&t1, &t1).unwrap(), expected);
        assert!(psi(&t1, &tab("[[1,2,3]]")).is_err());
    }

    #[test]
    fn idempotent_example_by_brute_force() {
        // ((1/3) Ψ̃_{T1T1})² = (1/3) Ψ̃_{T1T1}, expanding all 36 products
        let t1 = tab("[[1,2],[3]]");
        let e = psi(&t1, &t1).unwrap().scale(&q_frac(1, 3));
        let mut square = GroupAlgebraElement::zero(3);
        for (a, x) in e.terms() {
            for (b, y) in e.terms() {
                square.add_term(a.compose(b).unwrap(), x * y);
            }
        }
        assert_eq!(square, e);
    }

    #[test]
    fn matrix_units() {
        for k in 1..=4 {
            for p in partitions(k) {
                let rep = SeminormalRep::new(&p);
                let n = rep.idempotent_factor();
                for i in 0..rep.dim() {
                    let e = rep.psi_by_index(i, i).scale(&n);
                    assert_eq!(e.multiply(&e).unwrap(), e);
                    for j in 0..rep.dim() {
                        if i != j {
                            let f = rep.psi_by_index(j, j);
                            assert!(e.multiply(&f).unwrap().is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn character_examples() {
        let chi = character_element(&part("1,1"));
        assert_eq!(chi.coefficient(&perm("(1 2)", 2)), q(-1));
        let chi = character_element(&part("2,1"));
        assert_eq!(chi.coefficient(&Permutation::identity(3)), q(2));
        assert_eq!(chi.coefficient(&perm("(1 2 3)", 3)), q(-1));
        assert_eq!(chi.coefficient(&perm("(1 2)", 3)), q(0));
    }

    #[test]
    fn sum_of_squared_dimensions() {
        for k in 1..=5 {
            let total: Q = partitions(k)
                .iter()
                .map(|p| {
                    let d = character_element(p).coefficient(&Permutation::identity(k));
                    &d * &d
                })
                .fold(Q::zero(), |a, b| a + b);
            assert_eq!(total, Q::from_integer(factorial(k)));
        }
    }
}
