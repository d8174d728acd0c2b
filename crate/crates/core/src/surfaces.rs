//! Compact oriented surfaces and systems of simple closed curves on them.
//!
//! A curve system only records the algebraic intersection pairing of its
//! curves; there is no embedded geometry here.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::linalg::IntMatrix;

/// A surface of genus `genus` with `boundary_count` boundary circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: u64,
    pub boundary_count: u64,
}

impl SurfaceSpec {
    pub fn new(genus: u64, boundary_count: u64) -> Self {
        SurfaceSpec {
            genus,
            boundary_count,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sigma_{}^{}", self.genus, self.boundary_count)
    }
}

/// Label of a curve in a grid-shaped system, 1-based. Chain curves are
/// labelled as the single row of a `1 x m` packing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveId {
    pub row: usize,
    pub col: usize,
}

impl CurveId {
    pub fn new(row: usize, col: usize) -> Self {
        CurveId { row, col }
    }

    /// The `k`-th curve of a chain.
    pub fn chain(k: usize) -> Self {
        CurveId { row: 1, col: k }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}_{}", self.row, self.col)
    }
}

impl FromStr for CurveId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix('g')
            .ok_or_else(|| Error::Parse(format!("curve label {s:?} must start with 'g'")))?;
        parse_pair(body).ok_or_else(|| Error::Parse(format!("malformed curve label {s:?}")))
    }
}

pub(crate) fn parse_pair(body: &str) -> Option<CurveId> {
    let (r, c) = body.split_once('_')?;
    let row: usize = r.parse().ok()?;
    let col: usize = c.parse().ok()?;
    (row >= 1 && col >= 1).then_some(CurveId { row, col })
}

impl Serialize for CurveId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CurveId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SystemKind {
    Packing { rows: usize, cols: usize },
    Chain { length: usize },
    Custom,
}

/// An indexed family of curves together with their skew intersection pairing.
///
/// `pairing` is stored with the orientation signs already applied: flipping
/// `signs[a]` negates row and column `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSystem {
    kind: SystemKind,
    curves: Vec<CurveId>,
    pairing: IntMatrix,
    signs: Vec<i8>,
}

const PACKING_PATTERN: [((usize, usize), i64); 3] = [((1, 0), 1), ((0, 1), 1), ((1, 1), -1)];

/// `(rows x cols)` packing: horizontal and vertical neighbours pair to `+1`,
/// the `(i+1, j+1)` diagonal neighbour pairs to `-1`. Curves are listed row
/// by row.
pub fn build_packing(rows: usize, cols: usize) -> Result<CurveSystem> {
    require("rows", rows as i64, 1)?;
    require("cols", cols as i64, 1)?;
    let curves: Vec<CurveId> = (1..=rows)
        .flat_map(|i| (1..=cols).map(move |j| CurveId::new(i, j)))
        .collect();
    let index = |c: CurveId| (c.row - 1) * cols + (c.col - 1);
    let n = curves.len();
    let mut pairing = IntMatrix::zeros(n, n);
    for &c in &curves {
        for ((di, dj), v) in PACKING_PATTERN {
            let other = CurveId::new(c.row + di, c.col + dj);
            if other.row <= rows && other.col <= cols {
                pairing[(index(c), index(other))] = v;
                pairing[(index(other), index(c))] = -v;
            }
        }
    }
    Ok(CurveSystem {
        kind: SystemKind::Packing { rows, cols },
        curves,
        pairing,
        signs: vec![1; n],
    })
}

/// `m`-chain: consecutive curves pair to `+1`, everything else to 0.
pub fn build_chain(m: usize) -> Result<CurveSystem> {
    require("m", m as i64, 1)?;
    let mut pairing = IntMatrix::zeros(m, m);
    for a in 0..m.saturating_sub(1) {
        pairing[(a, a + 1)] = 1;
        pairing[(a + 1, a)] = -1;
    }
    Ok(CurveSystem {
        kind: SystemKind::Chain { length: m },
        curves: (1..=m).map(CurveId::chain).collect(),
        pairing,
        signs: vec![1; m],
    })
}

impl CurveSystem {
    /// A system with an arbitrary skew-symmetric pairing.
    pub fn custom(curves: Vec<CurveId>, pairing: IntMatrix) -> Result<Self> {
        let n = curves.len();
        if pairing.nrows() != n || pairing.ncols() != n {
            return Err(Error::Shape(format!(
                "{n} curves but a {}x{} pairing",
                pairing.nrows(),
                pairing.ncols()
            )));
        }
        for a in 0..n {
            for b in a..n {
                if pairing[(a, b)] != -pairing[(b, a)] {
                    return Err(Error::NotSkew { row: a, col: b });
                }
            }
        }
        Ok(CurveSystem {
            kind: SystemKind::Custom,
            curves,
            pairing,
            signs: vec![1; n],
        })
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn curves(&self) -> &[CurveId] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn pairing(&self) -> &IntMatrix {
        &self.pairing
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn index_of(&self, curve: CurveId) -> Result<usize> {
        self.curves
            .iter()
            .position(|&c| c == curve)
            .ok_or(Error::UnknownCurve(curve))
    }

    /// `<a, b>` by curve label.
    pub fn pair(&self, a: CurveId, b: CurveId) -> Result<i64> {
        Ok(self.pairing[(self.index_of(a)?, self.index_of(b)?)])
    }

    /// Reverse the orientation of curve `a`.
    pub fn flip(&self, a: usize) -> CurveSystem {
        let mut out = self.clone();
        let n = out.len();
        for b in 0..n {
            if b != a {
                out.pairing[(a, b)] = -out.pairing[(a, b)];
                out.pairing[(b, a)] = -out.pairing[(b, a)];
            }
        }
        out.signs[a] = -out.signs[a];
        out
    }

    /// Re-orient so that curve `a` carries sign `signs[a]` relative to the
    /// unflipped system.
    pub fn with_signs(&self, signs: &[i8]) -> Result<CurveSystem> {
        if signs.len() != self.len() {
            return Err(Error::Shape(format!(
                "{} signs for {} curves",
                signs.len(),
                self.len()
            )));
        }
        let mut out = self.clone();
        for (a, (&want, &have)) in signs.iter().zip(&self.signs).enumerate() {
            if want != 1 && want != -1 {
                return Err(Error::InvalidParameter {
                    name: "sign",
                    value: want as i64,
                    reason: "orientation signs must be +1 or -1",
                });
            }
            if want != have {
                out = out.flip(a);
            }
        }
        Ok(out)
    }
}

/// Regular neighbourhood of a square packing or a chain, as a surface type.
///
/// A `(p-1) x (p-1)` packing sits in `Sigma_g^p` with `g = (p-1)(p-2)/2`;
/// a `2g`-chain in `Sigma_g^1` and a `(2g+1)`-chain in `Sigma_g^2`.
pub fn neighborhood_surface(system: &CurveSystem) -> Result<SurfaceSpec> {
    match system.kind {
        SystemKind::Packing { rows, cols } => {
            if rows != cols {
                return Err(Error::NonSquarePacking { rows, cols });
            }
            let p = rows as u64 + 1;
            Ok(SurfaceSpec::new(genus_of_degree(p), p))
        }
        SystemKind::Chain { length } => {
            let m = length as u64;
            Ok(if m.is_even() {
                SurfaceSpec::new(m / 2, 1)
            } else {
                SurfaceSpec::new(m / 2, 2)
            })
        }
        SystemKind::Custom => Err(Error::Parse(
            "neighborhood surface needs a packing or chain system".into(),
        )),
    }
}

/// Fiber surface of the Milnor fibration of `x^p + y^q`: `p` disks joined by
/// `(p-1)q` bands, with `gcd(p, q)` boundary circles.
pub fn torus_link_fiber(p: u64, q: u64) -> Result<SurfaceSpec> {
    require("p", p as i64, 2)?;
    require("q", q as i64, 2)?;
    let b = p.gcd(&q);
    let chi = p as i64 - ((p - 1) * q) as i64;
    let twice_genus = 2 - b as i64 - chi;
    debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
    Ok(SurfaceSpec::new((twice_genus / 2) as u64, b))
}

/// Genus of a smooth plane curve of degree `p`.
pub fn genus_of_degree(p: u64) -> u64 {
    debug_assert!(p >= 1);
    (p - 1) * p.saturating_sub(2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nonzero_pairs(s: &CurveSystem) -> Vec<(String, String, i64)> {
        let n = s.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let v = s.pairing()[(a, b)];
                if v != 0 {
                    out.push((s.curves()[a].to_string(), s.curves()[b].to_string(), v));
                }
            }
        }
        out
    }

    #[test]
    fn packing_two_by_two() {
        let s = build_packing(2, 2).unwrap();
        assert_eq!(s.len(), 4);
        let g = |i, j| CurveId::new(i, j);
        assert_eq!(s.pair(g(1, 1), g(2, 1)).unwrap(), 1);
        assert_eq!(s.pair(g(1, 1), g(1, 2)).unwrap(), 1);
        assert_eq!(s.pair(g(1, 1), g(2, 2)).unwrap(), -1);
        assert_eq!(s.pair(g(2, 1), g(2, 2)).unwrap(), 1);
        assert_eq!(s.pair(g(1, 2), g(2, 2)).unwrap(), 1);
        // anti-diagonal
        assert_eq!(s.pair(g(1, 2), g(2, 1)).unwrap(), 0);
        assert_eq!(nonzero_pairs(&s).len(), 5);
    }

    #[test]
    fn degenerate_packings() {
        let s = build_packing(1, 1).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.pairing().is_zero());
        let s = build_packing(1, 2).unwrap();
        assert_eq!(nonzero_pairs(&s), vec![("g1_1".into(), "g1_2".into(), 1)]);
    }

    #[test]
    fn zero_dimensions_rejected() {
        assert!(build_packing(0, 3).is_err());
        assert!(build_packing(3, 0).is_err());
        assert!(build_chain(0).is_err());
    }

    #[test]
    fn chains() {
        let c = build_chain(3).unwrap();
        assert_eq!(c.pair(CurveId::chain(1), CurveId::chain(2)).unwrap(), 1);
        assert_eq!(c.pair(CurveId::chain(2), CurveId::chain(3)).unwrap(), 1);
        assert_eq!(nonzero_pairs(&c).len(), 2);
        assert!(build_chain(1).unwrap().pairing().is_zero());
        let c4 = build_chain(4).unwrap();
        assert_eq!(c4.pair(CurveId::chain(1), CurveId::chain(3)).unwrap(), 0);
    }

    #[test]
    fn neighborhoods() {
        let s = build_packing(2, 2).unwrap();
        assert_eq!(neighborhood_surface(&s).unwrap(), SurfaceSpec::new(1, 3));
        assert_eq!(
            neighborhood_surface(&build_chain(4).unwrap()).unwrap(),
            SurfaceSpec::new(2, 1)
        );
        assert_eq!(
            neighborhood_surface(&build_chain(5).unwrap()).unwrap(),
            SurfaceSpec::new(2, 2)
        );
        assert_eq!(
            neighborhood_surface(&build_packing(2, 3).unwrap()),
            Err(Error::NonSquarePacking { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn torus_link_fibers() {
        assert_eq!(torus_link_fiber(3, 3).unwrap(), SurfaceSpec::new(1, 3));
        assert_eq!(torus_link_fiber(2, 2).unwrap(), SurfaceSpec::new(0, 2));
        assert_eq!(torus_link_fiber(4, 4).unwrap(), SurfaceSpec::new(3, 4));
        // trefoil: genus one Seifert surface
        assert_eq!(torus_link_fiber(2, 3).unwrap(), SurfaceSpec::new(1, 1));
        assert!(torus_link_fiber(1, 3).is_err());
    }

    #[test]
    fn genus_table() {
        assert_eq!(genus_of_degree(2), 0);
        assert_eq!(genus_of_degree(3), 1);
        assert_eq!(genus_of_degree(5), 6);
    }

    #[test]
    fn euler_consistency() {
        for p in 2..=10u64 {
            let s = build_packing(p as usize - 1, p as usize - 1).unwrap();
            let chi = neighborhood_surface(&s).unwrap().euler_characteristic();
            assert_eq!(chi, 2 - ((p - 1) * (p - 2)) as i64 - p as i64);
        }
    }

    #[test]
    fn json_export_shape() {
        let s = build_packing(1, 2).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "kind": {"type": "packing", "rows": 1, "cols": 2},
                "curves": ["g1_1", "g1_2"],
                "pairing": [[0, 1], [-1, 0]],
                "signs": [1, 1],
            })
        );
        let back: CurveSystem = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn custom_rejects_non_skew() {
        let m = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let err = CurveSystem::custom(vec![CurveId::chain(1), CurveId::chain(2)], m);
        assert_eq!(err, Err(Error::NotSkew { row: 0, col: 1 }));
    }

    #[test]
    fn with_signs_validates() {
        let s = build_chain(2).unwrap();
        assert!(s.with_signs(&[1]).is_err());
        assert!(s.with_signs(&[1, 0]).is_err());
        let f = s.with_signs(&[-1, 1]).unwrap();
        assert_eq!(f.pairing()[(0, 1)], -1);
        assert_eq!(f.with_signs(&[1, 1]).unwrap(), s);
    }
}
