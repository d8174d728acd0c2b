//! Intersection lattice of the Milnor fiber `M(p,q,r)` of `x^p + y^q + z^r`.
//!
//! The fiber is built from the `(p,q)` torus-link Lefschetz fibration by
//! attaching `(p-1)(q-1)(r-1)` Legendrian 2-handles along the vanishing
//! cycles of `phi_{p,q}^{r-1}`, level by level. Handle `h^k_{i,j}` sits on
//! curve `gamma_{i,j}` at level `k`, and handles are attached in the order
//! `k`, then `j`, then `i`.
//!
//! Linking between two attaching circles depends on which one is attached
//! first: for `a = (i,j,k)` attached before `b = (i',j',l)`,
//!
//! | `(i'-i, j'-j)` | entry |
//! |----------------|-------|
//! | `(0, 0)`       | -1    |
//! | `(1, 0)`       | +1    |
//! | `(0, 1)`       | +1    |
//! | `(1, 1)`       | -1    |
//! | anything else  | 0     |
//!
//! Self-intersections are -2 (page framing -1 minus one).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::linalg::IntMatrix;

/// Handle label `(i, j, k)`, 1-based.
pub type HandleLabel = [usize; 3];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionLattice {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub labels: Vec<HandleLabel>,
    pub gram: IntMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    NegativeDefinite,
    NegativeSemidefinite,
    Indefinite,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInvariants {
    pub rank: usize,
    pub positive_count: usize,
    pub nullity: usize,
    pub negative_count: usize,
    pub signature: i64,
    #[serde(rename = "det", with = "bigint_as_number")]
    pub determinant: BigInt,
    pub even: bool,
    pub definiteness: Definiteness,
}

impl LatticeInvariants {
    pub fn abs_determinant(&self) -> BigInt {
        self.determinant.abs()
    }

    pub fn is_unimodular(&self) -> bool {
        self.abs_determinant() == BigInt::from(1)
    }
}

mod bigint_as_number {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(x) {
            Ok(v) => v.serialize(s),
            Err(_) => s.collect_str(x),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(v.into()),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

pub fn milnor_number(p: usize, q: usize, r: usize) -> usize {
    (p - 1) * (q - 1) * (r - 1)
}

fn check_triple(p: usize, q: usize, r: usize) -> Result<()> {
    require("p", p as i64, 2)?;
    require("q", q as i64, 2)?;
    require("r", r as i64, 2)
}

/// Handle labels in attachment order: `k` slowest, `i` fastest.
pub fn handle_labels(p: usize, q: usize, r: usize) -> Vec<HandleLabel> {
    (1..r)
        .flat_map(|k| (1..q).flat_map(move |j| (1..p).map(move |i| [i, j, k])))
        .collect()
}

fn later_linking(earlier: HandleLabel, later: HandleLabel) -> i64 {
    let di = later[0] as i64 - earlier[0] as i64;
    let dj = later[1] as i64 - earlier[1] as i64;
    match (di, dj) {
        (0, 0) | (1, 1) => -1,
        (1, 0) | (0, 1) => 1,
        _ => 0,
    }
}

pub fn intersection_matrix(p: usize, q: usize, r: usize) -> Result<IntersectionLattice> {
    check_triple(p, q, r)?;
    let labels = handle_labels(p, q, r);
    let n = labels.len();
    let mut gram = IntMatrix::zeros(n, n);
    for a in 0..n {
        gram[(a, a)] = -2;
        for b in a + 1..n {
            let v = later_linking(labels[a], labels[b]);
            gram[(a, b)] = v;
            gram[(b, a)] = v;
        }
    }
    Ok(IntersectionLattice {
        p,
        q,
        r,
        labels,
        gram,
    })
}

pub fn lattice_invariants(gram: &IntMatrix) -> Result<LatticeInvariants> {
    if let Some((row, col)) = gram.symmetry_defect() {
        return Err(Error::NotSymmetric { row, col });
    }
    let inertia = gram.inertia()?;
    let determinant = gram.determinant()?;
    let rank = gram.nrows();
    let even = (0..rank).all(|i| gram[(i, i)].is_even());
    let definiteness = match (inertia.positive, inertia.zero, inertia.negative) {
        (0, _, 0) => Definiteness::Zero,
        (_, 0, 0) => Definiteness::PositiveDefinite,
        (0, 0, _) => Definiteness::NegativeDefinite,
        (_, _, 0) => Definiteness::PositiveSemidefinite,
        (0, _, _) => Definiteness::NegativeSemidefinite,
        _ => Definiteness::Indefinite,
    };
    Ok(LatticeInvariants {
        rank,
        positive_count: inertia.positive,
        nullity: inertia.zero,
        negative_count: inertia.negative,
        signature: inertia.signature(),
        determinant,
        even,
        definiteness,
    })
}

impl IntersectionLattice {
    pub fn invariants(&self) -> LatticeInvariants {
        lattice_invariants(&self.gram).expect("constructed gram matrices are symmetric")
    }

    pub fn index_of(&self, label: HandleLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

/// Signature of the Milnor fiber of `x^p + y^q + z^r` by counting lattice
/// points: triples `0 < a < p, 0 < b < q, 0 < c < r` with
/// `s = a/p + b/q + c/r` (mod 2) in `(0,1)` count `+1`, in `(1,2)` count
/// `-1`. Integer values of `s` contribute to the nullity instead.
pub fn brieskorn_signature_oracle(p: usize, q: usize, r: usize) -> i64 {
    // scale by pqr so the comparison is in integers
    let (p, q, r) = (p as i64, q as i64, r as i64);
    let unit = p * q * r;
    let mut sigma = 0;
    for a in 1..p {
        for b in 1..q {
            for c in 1..r {
                let s = (a * q * r + b * p * r + c * p * q).rem_euclid(2 * unit);
                if s > 0 && s < unit {
                    sigma += 1;
                } else if s > unit {
                    sigma -= 1;
                }
            }
        }
    }
    sigma
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinHandle {
    pub label: HandleLabel,
    pub tb: i64,
    pub rotation: i64,
    pub smooth_framing: i64,
}

/// Legendrian surgery diagram: every attaching circle is a standard
/// Legendrian unknot (`tb = -1`, `rot = 0`), so the smooth framing is
/// `tb - 1 = -2` and `c_1` evaluates to zero on every handle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinDiagram {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub handles: Vec<SteinHandle>,
    pub linking: IntMatrix,
    pub c1: Vec<i64>,
}

pub fn stein_handles(p: usize, q: usize, r: usize) -> Result<SteinDiagram> {
    let lattice = intersection_matrix(p, q, r)?;
    let n = lattice.labels.len();
    let mut linking = lattice.gram.clone();
    for i in 0..n {
        linking[(i, i)] = 0;
    }
    let handles: Vec<SteinHandle> = lattice
        .labels
        .iter()
        .map(|&label| SteinHandle {
            label,
            tb: -1,
            rotation: 0,
            smooth_framing: -2,
        })
        .collect();
    let c1 = handles.iter().map(|h| h.rotation).collect();
    Ok(SteinDiagram {
        p,
        q,
        r,
        handles,
        linking,
        c1,
    })
}

impl SteinDiagram {
    /// Rebuild the intersection form: framings on the diagonal, linking off it.
    pub fn intersection_form(&self) -> IntMatrix {
        let mut m = self.linking.clone();
        for (i, h) in self.handles.iter().enumerate() {
            m[(i, i)] = h.smooth_framing;
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDelta {
    pub added_handles: usize,
    pub principal_sublattice: bool,
}

/// Stein embedding `M(p,q,r) -> M(p',q',r')` by adding 2-handles. Also checks
/// that the smaller gram matrix is the principal submatrix of the larger one
/// on the labels with `i < p`, `j < q`, `k < r`.
pub fn embedding_delta(small: [usize; 3], large: [usize; 3]) -> Result<EmbeddingDelta> {
    let [p, q, r] = small;
    let [p2, q2, r2] = large;
    check_triple(p, q, r)?;
    check_triple(p2, q2, r2)?;
    if p > p2 || q > q2 || r > r2 {
        return Err(Error::NonMonotoneEmbedding(
            format!("{p},{q},{r}"),
            format!("{p2},{q2},{r2}"),
        ));
    }
    let a = intersection_matrix(p, q, r)?;
    let b = intersection_matrix(p2, q2, r2)?;
    let indices: Vec<usize> = a
        .labels
        .iter()
        .map(|&l| b.index_of(l).expect("label range is monotone"))
        .collect();
    let principal_sublattice = b.gram.principal_submatrix(&indices) == a.gram;
    Ok(EmbeddingDelta {
        added_handles: milnor_number(p2, q2, r2) - milnor_number(p, q, r),
        principal_sublattice,
    })
}

/// `|det|` as a machine integer, for callers that know it is small.
pub fn abs_det_u64(inv: &LatticeInvariants) -> Option<u64> {
    if inv.determinant.is_zero() {
        return Some(0);
    }
    inv.abs_determinant().to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1() {
        let l = intersection_matrix(2, 2, 2).unwrap();
        assert_eq!(l.gram.to_rows(), vec![vec![-2]]);
        assert_eq!(l.labels, vec![[1, 1, 1]]);
    }

    #[test]
    fn a2() {
        let l = intersection_matrix(2, 2, 3).unwrap();
        assert_eq!(l.gram.to_rows(), vec![vec![-2, -1], vec![-1, -2]]);
        let inv = l.invariants();
        assert_eq!(inv.determinant, 3.into());
        assert_eq!(inv.signature, -2);
    }

    #[test]
    fn basis_order() {
        let l = intersection_matrix(3, 3, 3).unwrap();
        assert_eq!(
            &l.labels[..5],
            &[[1, 1, 1], [2, 1, 1], [1, 2, 1], [2, 2, 1], [1, 1, 2]]
        );
    }

    #[test]
    fn r_equal_two_is_packing_incidence() {
        // within one level the form is the symmetrised packing pattern
        let l = intersection_matrix(3, 3, 2).unwrap();
        let idx = |i, j| l.index_of([i, j, 1]).unwrap();
        assert_eq!(l.gram[(idx(1, 1), idx(2, 1))], 1);
        assert_eq!(l.gram[(idx(1, 1), idx(1, 2))], 1);
        assert_eq!(l.gram[(idx(1, 1), idx(2, 2))], -1);
        assert_eq!(l.gram[(idx(2, 1), idx(1, 2))], 0);
    }

    #[test]
    fn reversed_adjacency_across_levels_vanishes() {
        let l = intersection_matrix(3, 3, 3).unwrap();
        let a = l.index_of([2, 1, 1]).unwrap();
        let b = l.index_of([1, 1, 2]).unwrap();
        assert_eq!(l.gram[(a, b)], 0);
        let c = l.index_of([1, 1, 1]).unwrap();
        assert_eq!(l.gram[(c, b)], -1);
    }

    #[test]
    fn invariants_known_lattices() {
        let e8 = intersection_matrix(2, 3, 5).unwrap().invariants();
        assert_eq!((e8.rank, e8.signature), (8, -8));
        assert!(e8.is_unimodular() && e8.even);
        assert_eq!(e8.definiteness, Definiteness::NegativeDefinite);

        let m333 = intersection_matrix(3, 3, 3).unwrap().invariants();
        assert_eq!((m333.rank, m333.signature, m333.nullity), (8, -6, 2));
        assert!(m333.determinant.is_zero());
        assert_eq!(m333.definiteness, Definiteness::NegativeSemidefinite);

        let e6 = intersection_matrix(2, 3, 4).unwrap().invariants();
        assert_eq!((e6.rank, e6.signature), (6, -6));
        assert_eq!(abs_det_u64(&e6), Some(3));
    }

    #[test]
    fn invariants_reject_asymmetric() {
        let m = IntMatrix::from_rows(vec![vec![-2, 1], vec![0, -2]]).unwrap();
        assert!(matches!(
            lattice_invariants(&m),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(milnor_number(2, 3, 5), 8);
        assert_eq!(milnor_number(2, 2, 2), 1);
        assert_eq!(milnor_number(3, 3, 3), 8);
    }

    #[test]
    fn oracle_values() {
        assert_eq!(brieskorn_signature_oracle(2, 2, 2), -1);
        assert_eq!(brieskorn_signature_oracle(2, 3, 5), -8);
        assert_eq!(brieskorn_signature_oracle(2, 3, 4), -6);
    }

    #[test]
    fn stein() {
        let d = stein_handles(2, 2, 2).unwrap();
        assert_eq!(d.handles.len(), 1);
        assert_eq!(d.handles[0].smooth_framing, -2);
        let d = stein_handles(2, 3, 5).unwrap();
        assert_eq!(d.handles.len(), 8);
        assert!(d.handles.iter().all(|h| h.rotation == 0 && h.tb == -1));
        assert!(d.c1.iter().all(|&x| x == 0));
        assert_eq!(
            d.intersection_form(),
            intersection_matrix(2, 3, 5).unwrap().gram
        );
    }

    #[test]
    fn embeddings() {
        let d = embedding_delta([2, 2, 2], [2, 2, 3]).unwrap();
        assert_eq!(d.added_handles, 1);
        assert!(d.principal_sublattice);
        let d = embedding_delta([3, 3, 3], [3, 3, 3]).unwrap();
        assert_eq!(d.added_handles, 0);
        let d = embedding_delta([2, 3, 3], [2, 3, 5]).unwrap();
        assert_eq!(d.added_handles, 4);
        assert!(d.principal_sublattice);
        // D4 is the leading block of E8 in this basis
        let e8 = intersection_matrix(2, 3, 5).unwrap().gram;
        let d4 = intersection_matrix(2, 3, 3).unwrap().gram;
        assert_eq!(e8.principal_submatrix(&[0, 1, 2, 3]), d4);
        assert!(matches!(
            embedding_delta([3, 2, 2], [2, 3, 3]),
            Err(Error::NonMonotoneEmbedding(..))
        ));
    }

    #[test]
    fn json_layout() {
        let l = intersection_matrix(2, 2, 3).unwrap();
        let v = serde_json::to_value(&l).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "p": 2, "q": 2, "r": 3,
                "labels": [[1, 1, 1], [1, 1, 2]],
                "gram": [[-2, -1], [-1, -2]],
            })
        );
    }
}
