//! Euler characteristic and signature bookkeeping for branched covers,
//! degree-`p` hypersurfaces `S_p` in CP^3 and generalized chain (GC)
//! surgeries.
//!
//! A GC blow-up removes the neighbourhood `N` of a genus
//! `g = (p-1)(p-2)/2` surface of square `-p` and glues in the Milnor fiber
//! `M(p,p,p)`. All deltas are additive by Novikov additivity along the
//! common boundary.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::milnorlattice::{intersection_matrix, milnor_number};
use crate::resolution::ChainParity;
use crate::surfaces::genus_of_degree;

/// Signature of the disk bundle of Euler number `-p` over a closed surface.
pub const SIGMA_NEGATIVE_BUNDLE: i64 = -1;
/// Signature of the disk bundle of Euler number `+p` over a closed surface.
pub const SIGMA_POSITIVE_BUNDLE: i64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourManifoldInvariants {
    pub euler: i64,
    pub signature: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b2: Option<i64>,
}

impl FourManifoldInvariants {
    pub fn new(euler: i64, signature: i64) -> Self {
        FourManifoldInvariants {
            euler,
            signature,
            b2: None,
        }
    }
}

/// Degree-`d` cyclic branched cover of `Y` along `B`:
/// `e = d e(Y) - (d-1) e(B)`, `sigma = d sigma(Y) - (d^2-1)/(3d) B.B`.
pub fn branched_cover_invariants(
    d: i64,
    e_y: i64,
    sigma_y: i64,
    e_b: i64,
    b_squared: i64,
) -> Result<FourManifoldInvariants> {
    require("d", d, 1)?;
    let euler = d * e_y - (d - 1) * e_b;
    let numerator = (d * d - 1) * b_squared;
    let denominator = 3 * d;
    if numerator % denominator != 0 {
        return Err(Error::NonIntegralSignature {
            numerator,
            denominator,
        });
    }
    Ok(FourManifoldInvariants::new(
        euler,
        d * sigma_y - numerator / denominator,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceInvariants {
    pub p: i64,
    pub euler: i64,
    pub signature: i64,
    pub fiber_genus: i64,
    pub vanishing_cycles: i64,
}

/// Closed forms for `S_p` and the pencil fibration on `S_p # p CP^2-bar`.
pub fn hypersurface_invariants(p: i64) -> Result<HypersurfaceInvariants> {
    require("p", p, 2)?;
    Ok(HypersurfaceInvariants {
        p,
        euler: p * p * p - 4 * p * p + 6 * p,
        signature: p - (p + 1) * (p - 1) * p / 3,
        fiber_genus: (p - 1) * (p - 2) / 2,
        vanishing_cycles: p * (p - 1) * (p - 1),
    })
}

impl HypersurfaceInvariants {
    pub fn as_four_manifold(&self) -> FourManifoldInvariants {
        FourManifoldInvariants::new(self.euler, self.signature)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub p: i64,
    pub fiber_genus: i64,
    pub singular_fibers: i64,
    pub total_space_label: String,
    /// `(e, sigma)` of `S_p` itself, before the `p` blow-ups.
    pub euler: i64,
    pub signature: i64,
}

fn total_space_label(p: i64) -> &'static str {
    match p {
        2 => "CP² # 3C̄P²",
        3 => "CP² # 9C̄P²",
        4 => "K3 # 4C̄P²",
        5 => "complex surface of general type",
        _ => "unlabeled",
    }
}

pub fn sp_fibration_table(p_max: i64) -> Result<Vec<TableRow>> {
    require("p_max", p_max, 2)?;
    (2..=p_max)
        .map(|p| {
            let h = hypersurface_invariants(p)?;
            Ok(TableRow {
                p,
                fiber_genus: h.fiber_genus,
                singular_fibers: h.vanishing_cycles,
                total_space_label: total_space_label(p).to_owned(),
                euler: h.euler,
                signature: h.signature,
            })
        })
        .collect()
}

/// Aligned plain-text rendering of the table.
pub fn format_table(rows: &[TableRow]) -> String {
    let header = [
        "p",
        "fiber genus",
        "singular fibers",
        "e(S_p)",
        "sigma(S_p)",
        "total space",
    ];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.p.to_string(),
                r.fiber_genus.to_string(),
                r.singular_fibers.to_string(),
                r.euler.to_string(),
                r.signature.to_string(),
                r.total_space_label.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |items: Vec<&str>| {
        items
            .iter()
            .zip(widths)
            .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_owned()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in &cells {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Blowup,
    Blowdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryDeltas {
    pub delta_euler: i64,
    pub delta_signature: i64,
    pub delta_b2: i64,
}

impl SurgeryDeltas {
    pub fn negate(self) -> Self {
        SurgeryDeltas {
            delta_euler: -self.delta_euler,
            delta_signature: -self.delta_signature,
            delta_b2: -self.delta_b2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryReport {
    pub direction: Direction,
    pub p: i64,
    #[serde(flatten)]
    pub deltas: SurgeryDeltas,
    pub before: FourManifoldInvariants,
    pub after: FourManifoldInvariants,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Signature of `M(p,p,p)` from its intersection lattice.
pub fn milnor_fiber_signature(p: i64) -> Result<i64> {
    require("p", p, 2)?;
    static CACHE: OnceLock<Mutex<HashMap<i64, i64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&sigma) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&p) {
        return Ok(sigma);
    }
    let n = p as usize;
    let sigma = intersection_matrix(n, n, n)?.invariants().signature;
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(p, sigma);
    Ok(sigma)
}

/// Blow-up deltas `M(p,p,p) - N`: `e(M) = 1 + mu`, `e(N) = 2 - 2g`,
/// `sigma(N) = -1`, `b2(N) = 1`.
pub fn gc_surgery_delta(p: i64) -> Result<SurgeryDeltas> {
    require("p", p, 2)?;
    let mu = milnor_number(p as usize, p as usize, p as usize) as i64;
    let g = genus_of_degree(p as u64) as i64;
    Ok(SurgeryDeltas {
        delta_euler: (1 + mu) - (2 - 2 * g),
        delta_signature: milnor_fiber_signature(p)? - SIGMA_NEGATIVE_BUNDLE,
        delta_b2: mu - 1,
    })
}

fn bundle_label(p: i64) -> String {
    let g = genus_of_degree(p as u64);
    let base = match g {
        0 => "S²".to_owned(),
        1 => "T²".to_owned(),
        g => format!("Σ_{g}"),
    };
    let twist = if p % 2 == 1 { "twisted" } else { "untwisted" };
    format!("{twist} S²-bundle over {base}")
}

/// Applies a GC surgery to `before`. Blowing down the hypersurface `S_p`
/// itself doubles the `+p` disk bundle over `Sigma_g` and yields an
/// `S^2`-bundle, which is labelled (twisted iff `p` is odd).
pub fn apply_gc(
    before: FourManifoldInvariants,
    direction: Direction,
    p: i64,
) -> Result<SurgeryReport> {
    let up = gc_surgery_delta(p)?;
    let deltas = match direction {
        Direction::Blowup => up,
        Direction::Blowdown => up.negate(),
    };
    let after = FourManifoldInvariants {
        euler: before.euler + deltas.delta_euler,
        signature: before.signature + deltas.delta_signature,
        b2: before.b2.map(|b| b + deltas.delta_b2),
    };
    let canonical = hypersurface_invariants(p)?.as_four_manifold();
    let label = (direction == Direction::Blowdown
        && before.euler == canonical.euler
        && before.signature == canonical.signature)
        .then(|| bundle_label(p));
    Ok(SurgeryReport {
        direction,
        p,
        deltas,
        before,
        after,
        label,
    })
}

/// `(e, sigma)` of an `S^2`-bundle over `Sigma_g`: `(2(2-2g), 0)`.
pub fn sphere_bundle_invariants(g: i64) -> FourManifoldInvariants {
    FourManifoldInvariants::new(2 * (2 - 2 * g), 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticSumCheck {
    pub p: i64,
    pub excision: FourManifoldInvariants,
    pub fiber_sum: FourManifoldInvariants,
    pub pass: bool,
}

/// Compares GC blow-up (cut out `N`, glue in `M(p,p,p)`) with the symplectic
/// sum `X #_Sigma S_p` along the genus-`g` surface:
/// `e = e(X) + e(S_p) - 2(2-2g)`, `sigma = sigma(X) + sigma(S_p)`; the
/// `-1` and `+1` signatures of the two removed disk bundles cancel.
pub fn symplectic_sum_check(p: i64, x: FourManifoldInvariants) -> Result<SymplecticSumCheck> {
    let excision = apply_gc(x, Direction::Blowup, p)?.after;
    let sp = hypersurface_invariants(p)?;
    let g = sp.fiber_genus;
    let fiber_sum = FourManifoldInvariants {
        euler: x.euler + sp.euler - 2 * (2 - 2 * g),
        signature: x.signature + sp.signature + SIGMA_NEGATIVE_BUNDLE + SIGMA_POSITIVE_BUNDLE,
        b2: excision.b2,
    };
    Ok(SymplecticSumCheck {
        p,
        excision,
        fiber_sum,
        pass: excision == fiber_sum,
    })
}

/// Stein fillings of the link of `x^p + y^p + z^p` told apart by `b2`.
pub fn fillings_lower_bound(p: i64) -> Result<i64> {
    if p < 3 {
        return Err(Error::InvalidParameter {
            name: "p",
            value: p,
            reason: "must be at least 3",
        });
    }
    Ok(2 * (p - 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCorrespondence {
    pub g: i64,
    pub parity: ChainParity,
    pub milnor_triple: [i64; 3],
    pub resolution_vertex: (i64, i64),
    pub word_length: i64,
    pub letter_count_consistent: bool,
}

/// Even `2g`-chain: `M(2, 2g+1, 4g+2)` against a genus-`g` curve of square
/// `-1`. Odd `(2g+1)`-chain: `M(2, 2g+2, 2g+2)` against square `-2`.
pub fn chain_surgery_correspondence(g: i64, parity: ChainParity) -> Result<ChainCorrespondence> {
    require("g", g, 1)?;
    let (triple, weight, chain_len, power) = match parity {
        ChainParity::Even => ([2, 2 * g + 1, 4 * g + 2], -1, 2 * g, 4 * g + 2),
        ChainParity::Odd => ([2, 2 * g + 2, 2 * g + 2], -2, 2 * g + 1, 2 * g + 2),
    };
    let word_length = chain_len * power;
    let [p, q, r] = triple;
    Ok(ChainCorrespondence {
        g,
        parity,
        milnor_triple: triple,
        resolution_vertex: (g, weight),
        word_length,
        letter_count_consistent: word_length == (p - 1) * (q - 1) * r,
    })
}
