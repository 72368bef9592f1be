//! Node sets, the evaluation map on the polynomials of bounded degree,
//! poisedness tests, Lagrange bases and the interpolation/error projectors.
//!
//! Node order is stable and meaningful: bases and matrices are indexed by it.
//! Set equality of `NodeSet` is order-insensitive, but every matrix-valued
//! output is order-sensitive.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::QMat;
use crate::poly::{monomials_upto, Point, Poly};
use crate::scalar::Scalar;

/// Dimension of the space of bivariate polynomials of total degree `<= n`.
pub fn dim_pi(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

/// An ordered list of pairwise distinct points.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "NodeSetDto", into = "NodeSetDto")]
pub struct NodeSet {
    nodes: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct NodeSetDto {
    nodes: Vec<Point>,
}

impl TryFrom<NodeSetDto> for NodeSet {
    type Error = String;
    fn try_from(dto: NodeSetDto) -> std::result::Result<Self, String> {
        NodeSet::new(dto.nodes).map_err(|e| e.to_string())
    }
}

impl From<NodeSet> for NodeSetDto {
    fn from(ns: NodeSet) -> NodeSetDto {
        NodeSetDto { nodes: ns.nodes }
    }
}

impl NodeSet {
    pub fn new(nodes: Vec<Point>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for p in &nodes {
            if !seen.insert(p.clone()) {
                return Err(Error::DuplicateNode(p.to_string()));
            }
        }
        Ok(NodeSet { nodes })
    }

    pub fn empty() -> Self {
        NodeSet { nodes: Vec::new() }
    }

    /// Convenience constructor for integer fixtures; panics on duplicates.
    pub fn from_ints(pts: &[(i64, i64)]) -> Self {
        NodeSet::new(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
            .expect("distinct points")
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.nodes.iter()
    }

    pub fn points(&self) -> &[Point] {
        &self.nodes
    }

    pub fn get(&self, i: usize) -> &Point {
        &self.nodes[i]
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.nodes.contains(p)
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.nodes.iter().position(|q| q == p)
    }

    pub fn is_subset_of(&self, other: &NodeSet) -> bool {
        self.nodes.iter().all(|p| other.contains(p))
    }

    /// Appends points, preserving order; errors on duplicates.
    pub fn union(&self, extra: &[Point]) -> Result<NodeSet> {
        let mut nodes = self.nodes.clone();
        nodes.extend_from_slice(extra);
        NodeSet::new(nodes)
    }

    /// The nodes not satisfying the predicate, in their original order.
    pub fn filter_out(&self, mut drop: impl FnMut(&Point) -> bool) -> NodeSet {
        NodeSet {
            nodes: self.nodes.iter().filter(|p| !drop(p)).cloned().collect(),
        }
    }
}

/// Order-insensitive equality; matrix-valued outputs stay order-sensitive.
impl PartialEq for NodeSet {
    fn eq(&self, other: &Self) -> bool {
        if self.nodes.len() != other.nodes.len() {
            return false;
        }
        let mut a = self.nodes.clone();
        let mut b = other.nodes.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl Eq for NodeSet {}

/// Matrix of the evaluation map restricted to degree `<= n`: one row per
/// node, columns indexed by the monomials in canonical (leading-first) order.
pub fn vandermonde(y: &NodeSet, n: usize) -> QMat {
    let monos = monomials_upto(n);
    let rows = y
        .iter()
        .map(|p| {
            monos
                .iter()
                .map(|m| p.x.pow(m.e1) * p.y.pow(m.e2))
                .collect()
        })
        .collect();
    QMat::from_rows_with_cols(rows, monos.len())
}

/// Every node admits a fundamental polynomial of degree `<= n` (interpolation
/// is always solvable, possibly non-uniquely).
pub fn is_independent(y: &NodeSet, n: usize) -> bool {
    vandermonde(y, n).rank() == y.len()
}

/// Interpolation from degree `<= n` on `y` has exactly one solution for every
/// data vector.
pub fn is_poised(y: &NodeSet, n: usize) -> bool {
    y.len() == dim_pi(n) && vandermonde(y, n).rank() == y.len()
}

fn require_poised(y: &NodeSet, n: usize) -> Result<()> {
    let expected = dim_pi(n);
    let rank = vandermonde(y, n).rank();
    if y.len() != expected || rank != y.len() {
        return Err(Error::NotPoised {
            degree: n,
            rank,
            expected,
            size: y.len(),
        });
    }
    Ok(())
}

/// The fundamental (Lagrange) polynomials of a poised set, aligned with the
/// node order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LagrangeBasis {
    pub degree: usize,
    pub nodes: NodeSet,
    pub polys: Vec<Poly>,
}

impl LagrangeBasis {
    pub fn poly_for(&self, p: &Point) -> Option<&Poly> {
        self.nodes.index_of(p).map(|i| &self.polys[i])
    }

    /// Exact delta-property check of every basis polynomial at every node.
    pub fn verify(&self) -> Result<()> {
        for (i, poly) in self.polys.iter().enumerate() {
            for (j, node) in self.nodes.iter().enumerate() {
                let v = poly.evaluate(node);
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                if v != expected {
                    return Err(Error::Internal(format!(
                        "fundamental polynomial {i} takes value {v} at node {node}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Fundamental polynomials via one inversion of the evaluation matrix
/// (solving against the identity amortizes the elimination over all nodes).
pub fn lagrange_basis(y: &NodeSet, n: usize) -> Result<LagrangeBasis> {
    require_poised(y, n)?;
    let v = vandermonde(y, n);
    let inv = v
        .inverse()
        .ok_or_else(|| Error::Internal("poised evaluation matrix must be invertible".into()))?;
    let polys = (0..y.len())
        .map(|i| Poly::from_coeff_vec(&inv.col(i), n))
        .collect();
    Ok(LagrangeBasis {
        degree: n,
        nodes: y.clone(),
        polys,
    })
}

/// The unique polynomial of degree `<= n` matching `values` on the nodes
/// (aligned with the node order).
pub fn interpolate(y: &NodeSet, n: usize, values: &[Scalar]) -> Result<Poly> {
    if values.len() != y.len() {
        return Err(Error::MissingValues {
            expected: y.len(),
            got: values.len(),
        });
    }
    require_poised(y, n)?;
    let v = vandermonde(y, n);
    let coeffs = v
        .solve(values)
        .ok_or_else(|| Error::Internal("poised system must be solvable".into()))?;
    Ok(Poly::from_coeff_vec(&coeffs, n))
}

/// Interpolates the evaluations of `f` on the nodes.
pub fn interpolate_poly(y: &NodeSet, n: usize, f: &Poly) -> Result<Poly> {
    let values: Vec<Scalar> = y.iter().map(|p| f.evaluate(p)).collect();
    interpolate(y, n, &values)
}

/// The interpolation error projector `p - L[p]`; its image is the vanishing
/// ideal of the node set.
pub fn error_operator(y: &NodeSet, n: usize, p: &Poly) -> Result<Poly> {
    Ok(p - &interpolate_poly(y, n, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    pub(crate) fn triangle() -> NodeSet {
        NodeSet::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
        ])
        .unwrap()
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(dim_pi(0), 1);
        assert_eq!(dim_pi(1), 3);
        assert_eq!(dim_pi(5), 21);
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let r = NodeSet::new(vec![Point::from_ints(1, 2), Point::from_ints(1, 2)]);
        assert!(matches!(r, Err(Error::DuplicateNode(_))));
    }

    #[test]
    fn nodeset_equality_ignores_order() {
        let a = NodeSet::new(vec![Point::from_ints(0, 0), Point::from_ints(1, 0)]).unwrap();
        let b = NodeSet::new(vec![Point::from_ints(1, 0), Point::from_ints(0, 0)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn vandermonde_values() {
        let single = NodeSet::new(vec![Point::from_ints(0, 0)]).unwrap();
        let v = vandermonde(&single, 0);
        assert_eq!((v.nrows(), v.ncols()), (1, 1));
        assert_eq!(v[(0, 0)], s(1));

        let v = vandermonde(&triangle(), 1);
        assert_eq!(v.det(), s(1));

        let collinear = NodeSet::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 1),
            Point::from_ints(2, 2),
        ])
        .unwrap();
        assert_eq!(vandermonde(&collinear, 1).rank(), 2);
    }

    #[test]
    fn independence_and_poisedness() {
        let single = NodeSet::new(vec![Point::from_ints(3, 4)]).unwrap();
        assert!(is_independent(&single, 0));
        assert!(is_poised(&single, 0));

        let collinear = NodeSet::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(2, 0),
        ])
        .unwrap();
        assert!(!is_independent(&collinear, 1));
        assert!(!is_poised(&collinear, 1));

        // More nodes than the dimension: never independent.
        let four = NodeSet::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
            Point::from_ints(1, 1),
        ])
        .unwrap();
        assert!(!is_independent(&four, 1));
        assert!(!is_poised(&four, 1));

        assert!(is_poised(&triangle(), 1));
    }

    #[test]
    fn lagrange_basis_of_triangle() {
        let basis = lagrange_basis(&triangle(), 1).unwrap();
        basis.verify().unwrap();
        // 1 - x1 - x2, x1, x2
        let expect0 = Poly::one() - Poly::x1() - Poly::x2();
        assert_eq!(basis.polys[0], expect0);
        assert_eq!(basis.polys[1], Poly::x1());
        assert_eq!(basis.polys[2], Poly::x2());

        let single = NodeSet::new(vec![Point::from_ints(5, -2)]).unwrap();
        assert_eq!(lagrange_basis(&single, 0).unwrap().polys[0], Poly::one());
    }

    #[test]
    fn non_poised_error_names_rank() {
        let collinear = NodeSet::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(2, 0),
        ])
        .unwrap();
        match lagrange_basis(&collinear, 1) {
            Err(Error::NotPoised { rank, expected, .. }) => {
                assert_eq!(rank, 2);
                assert_eq!(expected, 3);
            }
            other => panic!("expected NotPoised, got {other:?}"),
        }
    }

    #[test]
    fn interpolation_examples() {
        let y = triangle();
        let zero = interpolate(&y, 1, &[s(0), s(0), s(0)]).unwrap();
        assert!(zero.is_zero());

        // Projection property on a member of the space.
        let q = Poly::x1().scale(&s(3)) - Poly::x2() + Poly::constant(Scalar::from_frac(1, 2));
        assert_eq!(interpolate_poly(&y, 1, &q).unwrap(), q);

        let p = interpolate(&y, 1, &[s(1), s(2), s(3)]).unwrap();
        let expect = Poly::one() + Poly::x1() + Poly::x2().scale(&s(2));
        assert_eq!(p, expect);

        assert!(matches!(
            interpolate(&y, 1, &[s(1)]),
            Err(Error::MissingValues { .. })
        ));
    }

    #[test]
    fn error_projector() {
        let y = triangle();
        let inside = Poly::x1() + Poly::x2().scale(&s(7));
        assert!(error_operator(&y, 1, &inside).unwrap().is_zero());

        let x1_sq = Poly::monomial(Monomial::new(2, 0), s(1));
        let e = error_operator(&y, 1, &x1_sq).unwrap();
        assert_eq!(e, &x1_sq - &Poly::x1());
        for node in y.iter() {
            assert!(e.evaluate(node).is_zero());
        }
        // Idempotence.
        assert_eq!(error_operator(&y, 1, &e).unwrap(), e);
    }
}
