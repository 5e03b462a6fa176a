//! Factored characteristic polynomials of hypertrees.
//!
//! The characteristic polynomial of an r-tree T of size m is
//! `prod_{H connected} phi_H(l)^{a_H}` with
//! `a_H = b^(m - e(H) - |dH|) * c^e(H) * (b - c)^|dH|`,
//! `b = (r-1)^(r-1)` and `c = r^(r-2)`; `phi_H` is the matching polynomial.
//! Everything downstream (unions, vertex-deleted subgraphs, nullity,
//! divisibility, loose paths) is assembled from that product.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{
    delete_vertices, for_each_connected_subgraph, good_ordering, EdgeSet, Hypergraph,
    HypergraphError, Hypertree, SubgraphHandle,
};
use crate::matching::{
    matching_polynomial, union_matching, MatchingCounter, MatchingProfile, Pivot,
};
use crate::poly::{BigExponent, FactoredPoly, IntPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("inconsistent subgraph statistics: e(H) + |dH| = {used} exceeds m = {m}")]
    InconsistentHandle { used: usize, m: usize },
    #[error("degree identity violated: sum |H| a_H = {got}, expected {expected}")]
    DegreeIdentity { expected: BigUint, got: BigUint },
    #[error("components must share the uniformity {expected}, found {found}")]
    MixedUniformity { expected: usize, found: usize },
    #[error("loose paths need m >= 1 and r >= 3 (got m = {m}, r = {r})")]
    LoosePathParams { m: usize, r: usize },
}

/// The constants `b = (r-1)^(r-1)`, `c = r^(r-2)` and the tree size `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentParams {
    pub r: usize,
    pub m: usize,
    pub b: BigUint,
    pub c: BigUint,
    /// `b - c`; zero exactly when r = 2.
    pub b_minus_c: BigUint,
}

impl ExponentParams {
    pub fn new(r: usize, m: usize) -> Self {
        assert!(r >= 2, "uniformity must be at least 2");
        let b = Pow::pow(BigUint::from(r - 1), (r - 1) as u32);
        let c = Pow::pow(BigUint::from(r), (r - 2) as u32);
        let b_minus_c = &b - &c;
        Self {
            r,
            m,
            b,
            c,
            b_minus_c,
        }
    }
}

/// a_H for one connected subgraph. Zero only when r = 2 and H has a boundary.
pub fn exponent_a(params: &ExponentParams, h: &SubgraphHandle) -> Result<BigUint, SpectraError> {
    let used = h.size() + h.boundary_size;
    if used > params.m {
        return Err(SpectraError::InconsistentHandle { used, m: params.m });
    }
    let free = (params.m - used) as u32;
    let boundary = h.boundary_size as u32;
    // (b - c)^0 = 1 even when b = c.
    let bmc = if boundary == 0 {
        BigUint::one()
    } else {
        Pow::pow(&params.b_minus_c, boundary)
    };
    Ok(Pow::pow(&params.b, free) * Pow::pow(&params.c, h.size() as u32) * bmc)
}

/// One row of the per-subgraph breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphTerm {
    pub handle: SubgraphHandle,
    pub profile: MatchingProfile,
    pub base: IntPoly,
    pub exponent: BigExponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyReport {
    pub factored: FactoredPoly,
    pub per_subgraph: Vec<SubgraphTerm>,
    pub total_degree: BigExponent,
    /// sum_H a_H (|H| - r nu(H))
    pub nullity: BigExponent,
}

/// n (r-1)^(n-1), the degree of the characteristic polynomial of any
/// r-uniform hypergraph on n vertices.
pub fn charpoly_degree(r: usize, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    BigUint::from(n) * Pow::pow(BigUint::from(r - 1), (n - 1) as u32)
}

/// Factored characteristic polynomial of a hypertree with the full
/// per-subgraph breakdown.
pub fn charpoly_hypertree(t: &Hypertree, cap: usize) -> Result<CharPolyReport, SpectraError> {
    let h = t.graph();
    let r = h.r();
    let params = ExponentParams::new(r, h.m());
    let mut handles = Vec::new();
    for_each_connected_subgraph(h, cap, |s| handles.push(s))?;

    let mut counter = MatchingCounter::new(h, Pivot::MaxDegree);
    let mut per_subgraph = Vec::with_capacity(handles.len());
    let mut grouped: HashMap<IntPoly, BigUint> = HashMap::new();
    let mut first_seen: Vec<IntPoly> = Vec::new();
    let mut total_degree = BigUint::zero();
    let mut nullity = BigUint::zero();
    for handle in handles {
        let a = exponent_a(&params, &handle)?;
        if a.is_zero() {
            continue;
        }
        let counts = counter.counts(&EdgeSet::from_ids(h.m(), handle.edges.iter().copied()));
        let profile = MatchingProfile {
            nu: counts.len() - 1,
            counts,
            order: handle.order(),
        };
        let base = profile.polynomial(r);
        total_degree += &a * BigUint::from(handle.order());
        nullity += &a * BigUint::from(handle.order() - r * profile.nu);
        match grouped.get_mut(&base) {
            Some(e) => *e += &a,
            None => {
                grouped.insert(base.clone(), a.clone());
                first_seen.push(base.clone());
            }
        }
        per_subgraph.push(SubgraphTerm {
            handle,
            profile,
            base,
            exponent: BigExponent(a),
        });
    }
    let expected = charpoly_degree(r, h.n());
    if total_degree != expected {
        return Err(SpectraError::DegreeIdentity {
            expected,
            got: total_degree,
        });
    }
    let factored = FactoredPoly::from_factors(first_seen.into_iter().map(|b| {
        let e = grouped.remove(&b).expect("grouped base");
        (b, BigExponent(e))
    }))?;
    Ok(CharPolyReport {
        factored,
        per_subgraph,
        total_degree: BigExponent(total_degree),
        nullity: BigExponent(nullity),
    })
}

/// Characteristic polynomial of a vertex-disjoint union, folded pairwise:
/// `phi_{H1 + H2} = phi_{H1}^{(r-1)^|H2|} * phi_{H2}^{(r-1)^|H1|}`.
pub fn charpoly_union(
    components: &[(Hypergraph, FactoredPoly)],
) -> Result<FactoredPoly, SpectraError> {
    let Some((first, _)) = components.first() else {
        return Ok(FactoredPoly::one());
    };
    let r = first.r();
    let base = BigUint::from(r - 1);
    let mut acc_order = 0usize;
    let mut acc = FactoredPoly::one();
    for (g, phi) in components {
        if g.r() != r {
            return Err(SpectraError::MixedUniformity {
                expected: r,
                found: g.r(),
            });
        }
        let left = acc.pow(&Pow::pow(&base, g.n() as u32))?;
        let right = phi.pow(&Pow::pow(&base, acc_order as u32))?;
        acc = left.mul(&right);
        acc_order += g.n();
    }
    Ok(acc)
}

/// Characteristic polynomial of the subgraph induced by `keep`, computed
/// component by component and combined with [`charpoly_union`].
pub fn charpoly_subgraph(
    t: &Hypertree,
    keep: &[usize],
    cap: usize,
) -> Result<FactoredPoly, SpectraError> {
    let h = t.graph();
    let removed = complement(h, keep)?;
    let (_, comps) = delete_vertices(h, &removed)?;
    let mut parts = Vec::with_capacity(comps.len());
    for comp in comps {
        let tree = good_ordering(&comp.graph, 0)?;
        let report = charpoly_hypertree(&tree, cap)?;
        parts.push((comp.graph, report.factored));
    }
    charpoly_union(&parts)
}

fn complement(h: &Hypergraph, keep: &[usize]) -> Result<Vec<usize>, SpectraError> {
    let mut kept = vec![false; h.n()];
    for &v in keep {
        if v >= h.n() {
            return Err(HypergraphError::UnknownVertex(v).into());
        }
        kept[v] = true;
    }
    Ok((0..h.n()).filter(|&v| !kept[v]).collect())
}

/// Nullity from the per-subgraph sum `sum_H a_H (|H| - r nu(H))`.
pub fn nullity(report: &CharPolyReport) -> BigUint {
    report
        .per_subgraph
        .iter()
        .map(|t| &t.exponent.0 * BigUint::from(t.handle.order() - t.base_r_nu()))
        .sum()
}

impl SubgraphTerm {
    fn base_r_nu(&self) -> usize {
        // |H| - deg_min(phi_H) = r nu(H)
        self.handle.order() - self.base.valuation().unwrap_or(0) as usize
    }
}

/// Outcome of comparing a vertex-induced subgraph against the whole tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityVerdict {
    pub matching_divides: bool,
    pub charpoly_divides: bool,
    /// The corollary guarantees the characteristic polynomial divides
    /// (r >= 4, or r = 3 with a connected subgraph).
    pub corollary_predicts: bool,
    pub subgraph_connected: bool,
    pub components: usize,
}

pub fn check_divisibility(
    t: &Hypertree,
    keep: &[usize],
    cap: usize,
) -> Result<DivisibilityVerdict, SpectraError> {
    let h = t.graph();
    let whole = charpoly_hypertree(t, cap)?.factored;
    let removed = complement(h, keep)?;
    let (_, comps) = delete_vertices(h, &removed)?;
    let graphs: Vec<Hypergraph> = comps.iter().map(|c| c.graph.clone()).collect();
    let phi_match = union_matching(&graphs);
    let matching_divides = FactoredPoly::power(phi_match, 1u64)?.divides(&whole);
    let sub = charpoly_subgraph(t, keep, cap)?;
    let charpoly_divides = sub.divides(&whole);
    let connected = comps.len() <= 1;
    let r = h.r();
    Ok(DivisibilityVerdict {
        matching_divides,
        charpoly_divides,
        corollary_predicts: r >= 4 || (r == 3 && connected),
        subgraph_connected: connected,
        components: comps.len(),
    })
}

/// The loose path P_m^r: m edges of size r, consecutive edges sharing one vertex.
pub fn loose_path(m: usize, r: usize) -> Hypergraph {
    let n = m * (r - 1) + 1;
    let edges = (0..m)
        .map(|i| (i * (r - 1)..=(i + 1) * (r - 1)).collect())
        .collect();
    Hypergraph::new(r, n, edges).expect("loose path is well formed")
}

/// The 2-path with j edges.
fn graph_path(j: usize) -> Hypergraph {
    Hypergraph::new(2, j + 1, (0..j).map(|i| vec![i, i + 1]).collect())
        .expect("path is well formed")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoosePathRow {
    pub j: usize,
    /// Closed-form exponent of phi_{P_j}(l^(r/2)).
    pub closed_form: String,
    /// Exponent of phi_{P_j^r} in the factored characteristic polynomial.
    pub theorem: String,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoosePathComparison {
    pub m: usize,
    pub r: usize,
    pub k1: String,
    pub k2: String,
    pub rows: Vec<LoosePathRow>,
    /// a(0, m) recovered from the degree identity.
    pub a0_from_degree: String,
    /// Power of the bare variable implied by the closed form.
    pub closed_form_lambda: String,
    pub theorem_lambda: String,
    pub all_agree: bool,
    pub factored: String,
}

/// Closed-form loose-path exponents a(j, m) for 1 <= j <= m.
pub fn loose_path_exponents(m: usize, r: usize) -> Vec<BigRational> {
    let big = |x: BigUint| BigRational::from_integer(BigInt::from(x));
    let k2u = Pow::pow(BigUint::from(r), (r - 2) as u32);
    let k1u = Pow::pow(BigUint::from(r - 1), (r - 1) as u32) - &k2u;
    let (k1, k2) = (big(k1u), big(k2u));
    let k12 = &k1 + &k2;
    (1..=m)
        .map(|j| {
            if j == m {
                Pow::pow(&k2, m as i32)
            } else {
                let lead = BigRational::from_integer(BigInt::from(m - j + 1)) * &k1
                    + BigRational::from_integer(BigInt::from(2)) * &k2;
                lead * &k1 * Pow::pow(&k2, j as i32) * Pow::pow(&k12, m as i32 - j as i32 - 2)
            }
        })
        .collect()
}

/// Compares the factored characteristic polynomial of P_m^r with the closed
/// form for the exponents a(j, m), j >= 1. The j = 0 exponent comes from the
/// degree identity.
pub fn loose_path_crosscheck(
    m: usize,
    r: usize,
    cap: usize,
) -> Result<LoosePathComparison, SpectraError> {
    if m == 0 || r < 3 {
        return Err(SpectraError::LoosePathParams { m, r });
    }
    let path = loose_path(m, r);
    let tree = good_ordering(&path, 0)?;
    let report = charpoly_hypertree(&tree, cap)?;
    let closed = loose_path_exponents(m, r);

    let mut rows = Vec::with_capacity(m);
    let mut all_agree = true;
    let mut weighted = BigRational::zero();
    let mut lambda_shift = BigRational::zero();
    let half = |x: BigRational| x / BigRational::from_integer(BigInt::from(2));
    for j in 1..=m {
        let base = matching_polynomial(&loose_path(j, r));
        let theorem = report.factored.exponent_of(&base);
        let cf = &closed[j - 1];
        let agree = cf.is_integer() && cf.to_integer() == BigInt::from(theorem.clone());
        all_agree &= agree;
        rows.push(LoosePathRow {
            j,
            closed_form: cf.to_string(),
            theorem: theorem.to_string(),
            agree,
        });
        weighted += cf * BigRational::from_integer(BigInt::from(j + 1));
        // phi_{P_j}(l^(r/2)) = l^{-(j-1)(r-2)/2} phi_{P_j^r}(l)
        lambda_shift -= half(cf * BigRational::from_integer(BigInt::from((j - 1) * (r - 2))));
    }
    let n = path.n();
    let total = BigRational::from_integer(BigInt::from(charpoly_degree(r, n)));
    let r_big = BigRational::from_integer(BigInt::from(r));
    let a0 = &total * BigRational::from_integer(BigInt::from(2)) / &r_big - weighted;
    // phi_{P_0}(l^(r/2)) = l^(r/2)
    lambda_shift += half(&a0 * &r_big);
    let theorem_lambda = report.factored.exponent_of(&IntPoly::x());
    let lambda_agree = lambda_shift.is_integer()
        && lambda_shift.to_integer() == BigInt::from(theorem_lambda.clone());
    // Sanity: the P_1 base is l^r - 1 and must carry no bare-variable factor.
    debug_assert!(matching_polynomial(&graph_path(1)).valuation() == Some(0));
    Ok(LoosePathComparison {
        m,
        r,
        k1: (Pow::pow(BigUint::from(r - 1), (r - 1) as u32)
            - Pow::pow(BigUint::from(r), (r - 2) as u32))
        .to_string(),
        k2: Pow::pow(BigUint::from(r), (r - 2) as u32).to_string(),
        rows,
        a0_from_degree: a0.to_string(),
        closed_form_lambda: lambda_shift.to_string(),
        theorem_lambda: theorem_lambda.to_string(),
        all_agree: all_agree && lambda_agree,
        factored: report.factored.to_string(),
    })
}

/// Exponent as `u64` when it fits; handy in tests and small reports.
pub fn small(e: &BigExponent) -> Option<u64> {
    e.0.to_u64()
}
