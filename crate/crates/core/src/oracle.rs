//! Ground-truth engines for small inputs: the Macaulay-matrix resultant,
//! adjacency characteristic polynomials of graphs, and exhaustive matching
//! counts.
//!
//! The Macaulay matrix is assembled by multiplying the eigen-system
//! polynomials `F_i = l x_i^(r-1) - sum_{e in E_i} x_(e - i)` by monomials,
//! so it shares no code with the toppling model it is used to check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::linalg::{bareiss_det, charpoly_dense, interpolate_consecutive};
use crate::matching::MatchingProfile;
use crate::poly::IntPoly;

pub const DEFAULT_MACAULAY_CAP: usize = 300;
pub const DEFAULT_BRUTE_EDGE_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("Macaulay system has {size} monomials, cap is {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("the reduced-monomial minor D' vanishes identically")]
    DegenerateMinor,
    #[error("D' does not divide D")]
    InexactQuotient,
    #[error("ordering must list every vertex exactly once")]
    BadOrdering,
    #[error("expected a 2-graph, got r = {0}")]
    NotAGraph(usize),
    #[error("brute force over {m} edges exceeds the cap of {cap}")]
    TooManyEdges { m: usize, cap: usize },
}

/// A term of `F_i`: coefficient `l` (the diagonal) or the constant -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Coef {
    Lambda,
    MinusOne,
}

/// The degree-d part of the eigen-system: monomials, their classes, and the
/// coefficient matrix whose determinant is D_n.
#[derive(Clone, Debug)]
pub struct MacaulaySystem {
    pub r: usize,
    pub n_vars: usize,
    pub d: usize,
    /// Variables from highest to lowest priority; the last one is "x_i last".
    pub priority: Vec<usize>,
    pub monomials: Vec<Vec<u32>>,
    /// Class S_i of each monomial.
    pub class_of: Vec<usize>,
    pub reduced: Vec<bool>,
    rows: Vec<Vec<(usize, Coef)>>,
}

impl MacaulaySystem {
    /// Builds the system with the default priority `x_0 > x_1 > ... > x_n`.
    pub fn new(h: &Hypergraph, cap: usize) -> Result<Self, OracleError> {
        Self::with_priority(h, (0..h.n()).collect(), cap)
    }

    pub fn with_priority(
        h: &Hypergraph,
        priority: Vec<usize>,
        cap: usize,
    ) -> Result<Self, OracleError> {
        let n = h.n();
        let r = h.r();
        let mut seen = vec![false; n];
        if priority.len() != n
            || priority
                .iter()
                .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        {
            return Err(OracleError::BadOrdering);
        }
        let d = n * (r - 2) + 1;
        let size = binomial(d + n - 1, n - 1);
        if size > cap as u128 {
            return Err(OracleError::CapExceeded {
                size: size.min(usize::MAX as u128) as usize,
                cap,
            });
        }
        let mut monomials = Vec::with_capacity(size as usize);
        compositions(d as u32, n, &mut vec![0; n], 0, &mut monomials);
        monomials.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        let index: HashMap<Vec<u32>, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();

        let k = (r - 1) as u32;
        // F_i as (exponent vector, coefficient) pairs.
        let systems: Vec<Vec<(Vec<u32>, Coef)>> = (0..n)
            .map(|i| {
                let mut lead = vec![0; n];
                lead[i] = k;
                let mut terms = vec![(lead, Coef::Lambda)];
                for &e in h.incident_edges(i) {
                    let mut t = vec![0; n];
                    for &v in h.edge(e) {
                        if v != i {
                            t[v] += 1;
                        }
                    }
                    terms.push((t, Coef::MinusOne));
                }
                terms
            })
            .collect();

        let mut class_of = Vec::with_capacity(monomials.len());
        let mut reduced = Vec::with_capacity(monomials.len());
        let mut rows = Vec::with_capacity(monomials.len());
        for m in &monomials {
            let i = *priority
                .iter()
                .find(|&&v| m[v] >= k)
                .expect("degree d forces some x_i^(r-1)");
            class_of.push(i);
            reduced.push(m.iter().filter(|&&a| a >= k).count() == 1);
            let mut multiplier = m.clone();
            multiplier[i] -= k;
            let row = systems[i]
                .iter()
                .map(|(t, c)| {
                    let prod: Vec<u32> = multiplier.iter().zip(t).map(|(a, b)| a + b).collect();
                    (index[&prod], *c)
                })
                .collect();
            rows.push(row);
        }
        Ok(Self {
            r,
            n_vars: n,
            d,
            priority,
            monomials,
            class_of,
            reduced,
            rows,
        })
    }

    /// N, the number of degree-d monomials.
    pub fn size(&self) -> usize {
        self.monomials.len()
    }

    pub fn reduced_count(&self) -> usize {
        self.reduced.iter().filter(|&&b| b).count()
    }

    pub fn class_size(&self, i: usize) -> usize {
        self.class_of.iter().filter(|&&c| c == i).count()
    }

    fn matrix_at(
        &self,
        lambda: &BigInt,
        keep: &[usize],
        scale: Option<(usize, &BigInt)>,
    ) -> Vec<Vec<BigInt>> {
        let mut pos = vec![usize::MAX; self.size()];
        for (p, &i) in keep.iter().enumerate() {
            pos[i] = p;
        }
        keep.iter()
            .map(|&i| {
                let mut row = vec![BigInt::zero(); keep.len()];
                for &(j, c) in &self.rows[i] {
                    if pos[j] == usize::MAX {
                        continue;
                    }
                    match c {
                        Coef::Lambda => row[pos[j]] += lambda,
                        Coef::MinusOne => row[pos[j]] -= 1,
                    }
                }
                if let Some((class, t)) = scale {
                    if self.class_of[i] == class {
                        for x in row.iter_mut() {
                            *x *= t;
                        }
                    }
                }
                row
            })
            .collect()
    }

    /// D_n evaluated at `lambda`.
    pub fn d_full_at(&self, lambda: &BigInt) -> BigInt {
        let all: Vec<usize> = (0..self.size()).collect();
        bareiss_det(self.matrix_at(lambda, &all, None))
    }

    /// D_n with every row of class S_i multiplied by `t`.
    pub fn d_full_scaled_at(&self, lambda: &BigInt, class: usize, t: &BigInt) -> BigInt {
        let all: Vec<usize> = (0..self.size()).collect();
        bareiss_det(self.matrix_at(lambda, &all, Some((class, t))))
    }

    /// D_n' (rows and columns of non-reduced monomials) at `lambda`.
    pub fn d_minor_at(&self, lambda: &BigInt) -> BigInt {
        let keep: Vec<usize> = (0..self.size()).filter(|&i| !self.reduced[i]).collect();
        bareiss_det(self.matrix_at(lambda, &keep, None))
    }

    /// D_n as a polynomial in l, from its values at `offset, offset+1, ...`.
    pub fn d_full(&self, offset: i64) -> IntPoly {
        interpolate_from(self.size(), offset, |x| self.d_full_at(x))
    }

    pub fn d_minor(&self, offset: i64) -> IntPoly {
        let size = self.size() - self.reduced_count();
        interpolate_from(size, offset, |x| self.d_minor_at(x))
    }
}

// Values at offset..=offset+deg, interpolated and shifted back to l.
fn interpolate_from(deg: usize, offset: i64, f: impl Fn(&BigInt) -> BigInt + Sync) -> IntPoly {
    let values: Vec<BigInt> = (0..=deg as i64)
        .into_par_iter()
        .map(|k| f(&BigInt::from(offset + k)))
        .collect();
    let q = interpolate_consecutive(&values).expect("determinants are integer polynomials in l");
    // q(x) = p(x + offset); recover p(l) = q(l - offset).
    translate(&q, -offset)
}

/// p(l + a)
fn translate(p: &IntPoly, a: i64) -> IntPoly {
    if a == 0 {
        return p.clone();
    }
    let lin = IntPoly::from_terms([(1u64, BigInt::one()), (0, BigInt::from(a))]);
    let mut out = IntPoly::zero();
    let dense = p.to_dense();
    for c in dense.iter().rev() {
        out = &(&out * &lin) + &IntPoly::constant(c.clone());
    }
    out
}

fn compositions(left: u32, n: usize, cur: &mut Vec<u32>, at: usize, out: &mut Vec<Vec<u32>>) {
    if at == n - 1 {
        cur[at] = left;
        out.push(cur.clone());
        return;
    }
    for v in 0..=left {
        cur[at] = v;
        compositions(left - v, n, cur, at + 1, out);
    }
    cur[at] = 0;
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn monic(p: IntPoly) -> IntPoly {
    if p.leading_coeff().is_negative() {
        -&p
    } else {
        p
    }
}

/// Characteristic polynomial as the resultant `D_n / D_n'`, normalized monic.
pub fn macaulay_charpoly_with(sys: &MacaulaySystem, offset: i64) -> Result<IntPoly, OracleError> {
    let full = sys.d_full(offset);
    let minor = sys.d_minor(offset);
    if minor.is_zero() {
        return Err(OracleError::DegenerateMinor);
    }
    let q = full.div_exact(&minor).ok_or(OracleError::InexactQuotient)?;
    Ok(monic(q))
}

pub fn macaulay_charpoly(h: &Hypergraph, cap: usize) -> Result<IntPoly, OracleError> {
    macaulay_charpoly_with(&MacaulaySystem::new(h, cap)?, 0)
}

/// Greatest common divisor of D_n over every choice of last variable, made
/// monic. The resultant always divides it; with the eigen-system's specific
/// coefficients it can be a strict multiple (the single edge gives l^3 Res).
pub fn gcd_over_last_variable(h: &Hypergraph, cap: usize) -> Result<IntPoly, OracleError> {
    let n = h.n();
    let mut acc: Option<IntPoly> = None;
    for last in 0..n {
        let mut priority: Vec<usize> = (0..n).filter(|&v| v != last).collect();
        priority.push(last);
        let sys = MacaulaySystem::with_priority(h, priority, cap)?;
        let d = sys.d_full(0);
        acc = Some(match acc {
            None => d.primitive_part(),
            Some(g) => g.gcd(&d).expect("nonzero determinants"),
        });
    }
    Ok(monic(acc.unwrap_or_else(IntPoly::one)))
}

/// Checks `D_n(t F_i) = t^|S_i| D_n(F)` at one value of l.
pub fn homogeneity_holds(sys: &MacaulaySystem, class: usize, t: i64, lambda: i64) -> bool {
    let l = BigInt::from(lambda);
    let t_big = BigInt::from(t);
    let base = sys.d_full_at(&l);
    let scaled = sys.d_full_scaled_at(&l, class, &t_big);
    scaled == base * Pow::pow(&t_big, sys.class_size(class) as u32)
}

/// `det(l I - A)` for a 2-graph.
pub fn adjacency_charpoly_2graph(g: &Hypergraph) -> Result<IntPoly, OracleError> {
    if g.r() != 2 {
        return Err(OracleError::NotAGraph(g.r()));
    }
    let mut rows = vec![Vec::new(); g.n()];
    for e in g.edges() {
        rows[e[0]].push((e[1], 1));
        rows[e[1]].push((e[0], 1));
    }
    Ok(charpoly_dense(&rows))
}

/// k-matching counts by walking every edge subset.
pub fn brute_matchings(h: &Hypergraph, cap: usize) -> Result<MatchingProfile, OracleError> {
    let m = h.m();
    if m > cap || m >= 63 {
        return Err(OracleError::TooManyEdges { m, cap });
    }
    let words = h.n().div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut w = vec![0u64; words];
            for &v in e {
                w[v / 64] |= 1 << (v % 64);
            }
            w
        })
        .collect();
    let mut counts = vec![0u128; m + 1];
    let mut used = vec![0u64; words];
    'subsets: for subset in 0u64..(1u64 << m) {
        used.iter_mut().for_each(|w| *w = 0);
        for (e, mask) in masks.iter().enumerate() {
            if subset >> e & 1 == 1 {
                for (u, w) in used.iter_mut().zip(mask) {
                    if *u & w != 0 {
                        continue 'subsets;
                    }
                    *u |= w;
                }
            }
        }
        counts[subset.count_ones() as usize] += 1;
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    Ok(MatchingProfile {
        nu: counts.len() - 1,
        counts,
        order: h.n(),
    })
}
