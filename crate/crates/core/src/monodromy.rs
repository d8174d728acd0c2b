//! Dehn-twist words, Lefschetz fibrations over the disk and the open books
//! they induce on the boundary.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::surfaces::{
    build_chain, build_packing, genus_of_degree, parse_pair, torus_link_fiber, CurveId,
    CurveSystem, SurfaceSpec,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Twist {
    Curve(CurveId),
    /// Twist about the curve parallel to boundary component `k` (1-based).
    Boundary(usize),
}

/// A signed Dehn twist. `sign = +1` is right-handed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub twist: Twist,
    pub sign: i8,
}

impl Letter {
    pub fn curve(c: CurveId) -> Self {
        Letter {
            twist: Twist::Curve(c),
            sign: 1,
        }
    }

    pub fn boundary(k: usize) -> Self {
        Letter {
            twist: Twist::Boundary(k),
            sign: 1,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            twist: self.twist,
            sign: -self.sign,
        }
    }
}

/// Tokens: `t<i>_<j>` / `T<i>_<j>` for a curve twist and its inverse,
/// `d<k>` / `D<k>` for a boundary twist and its inverse.
impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let positive = self.sign > 0;
        match self.twist {
            Twist::Curve(c) => {
                let t = if positive { 't' } else { 'T' };
                write!(f, "{t}{}_{}", c.row, c.col)
            }
            Twist::Boundary(k) => {
                let d = if positive { 'd' } else { 'D' };
                write!(f, "{d}{k}")
            }
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad twist token {tok:?}"));
        let mut chars = tok.chars();
        let head = chars.next().ok_or_else(bad)?;
        let body = chars.as_str();
        let (twist, sign) = match head {
            't' | 'T' => (
                Twist::Curve(parse_pair(body).ok_or_else(bad)?),
                if head == 't' { 1 } else { -1 },
            ),
            'd' | 'D' => {
                let k: usize = body.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                (Twist::Boundary(k), if head == 'd' { 1 } else { -1 })
            }
            _ => return Err(bad()),
        };
        Ok(Letter { twist, sign })
    }
}

/// An ordered product of twists. The leftmost letter acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwistWord {
    letters: Vec<Letter>,
}

impl TwistWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        TwistWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn pow(&self, k: usize) -> TwistWord {
        TwistWord::new(self.letters.repeat(k))
    }

    pub fn concat(&self, other: &TwistWord) -> TwistWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TwistWord::new(letters)
    }

    /// Word whose action undoes this one: reversed, every sign flipped.
    pub fn inverse(&self) -> TwistWord {
        TwistWord::new(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Start positions of every contiguous occurrence of `pattern`.
    pub fn occurrences(&self, pattern: &TwistWord) -> Vec<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return Vec::new();
        }
        self.letters
            .windows(pattern.len())
            .enumerate()
            .filter(|(_, w)| *w == pattern.letters.as_slice())
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for TwistWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(TwistWord::new)
    }
}

impl Serialize for TwistWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TwistWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// JSON wrapper carrying a word together with its fiber surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordDocument {
    pub fiber: SurfaceSpec,
    pub word: TwistWord,
}

impl WordDocument {
    /// Accepts either the JSON wrapper or a bare token list.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))
        } else {
            let word: TwistWord = text.parse()?;
            let boundary = word
                .letters()
                .iter()
                .filter_map(|l| match l.twist {
                    Twist::Boundary(k) => Some(k as u64),
                    Twist::Curve(_) => None,
                })
                .max()
                .unwrap_or(0);
            Ok(WordDocument {
                fiber: SurfaceSpec::new(0, boundary),
                word,
            })
        }
    }
}

/// Order in which a two-index product over a packing is expanded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductOrder {
    /// `t_{1,1} t_{2,1} ... t_{p-1,1} t_{1,2} ...` (row index fastest).
    RowFastest,
    /// `t_{1,1} t_{1,2} ... t_{1,q-1} t_{2,1} ...` (column index fastest).
    ColumnFastest,
}

/// Positive word over a `rows x cols` packing in the given order.
pub fn packing_word(rows: usize, cols: usize, order: ProductOrder) -> TwistWord {
    let letters = match order {
        ProductOrder::RowFastest => (1..=cols)
            .flat_map(|j| (1..=rows).map(move |i| Letter::curve(CurveId::new(i, j))))
            .collect(),
        ProductOrder::ColumnFastest => (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| Letter::curve(CurveId::new(i, j))))
            .collect(),
    };
    TwistWord::new(letters)
}

/// Monodromy of the Milnor fibration of `x^p + y^q`, row index fastest.
pub fn torus_link_word(p: usize, q: usize) -> Result<TwistWord> {
    torus_link_word_ordered(p, q, ProductOrder::RowFastest)
}

pub fn torus_link_word_ordered(p: usize, q: usize, order: ProductOrder) -> Result<TwistWord> {
    require("p", p as i64, 2)?;
    require("q", q as i64, 2)?;
    Ok(packing_word(p - 1, q - 1, order))
}

/// `w = (t_{1,1}...t_{1,p-1}) ... (t_{p-1,1}...t_{p-1,p-1})`
pub fn packing_product(p: usize) -> Result<TwistWord> {
    torus_link_word_ordered(p, p, ProductOrder::ColumnFastest)
}

/// `w_0 = t_{d1} ... t_{dp}`
pub fn boundary_product(p: usize) -> TwistWord {
    TwistWord::new((1..=p).map(Letter::boundary).collect())
}

/// `(t_1 ... t_m)` over an `m`-chain.
pub fn chain_product(m: usize) -> TwistWord {
    TwistWord::new((1..=m).map(|k| Letter::curve(CurveId::chain(k))).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FibrationKind {
    /// `phi_{p,q}^r` on the Milnor fiber `M(p,q,r)`.
    Milnor {
        p: usize,
        q: usize,
        r: usize,
    },
    /// Boundary twists on the minimal resolution neighbourhood of
    /// `x^p + y^p + z^p`.
    BoundaryTwist {
        p: usize,
    },
    /// `(t_1 ... t_m)^k` over an `m`-chain.
    Chain {
        length: usize,
        power: usize,
    },
    Custom,
}

impl fmt::Display for FibrationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibrationKind::Milnor { p, q, r } => write!(f, "milnor({p},{q},{r})"),
            FibrationKind::BoundaryTwist { p } => write!(f, "boundary({p})"),
            FibrationKind::Chain { length, power } => write!(f, "chain({length})^{power}"),
            FibrationKind::Custom => f.write_str("custom"),
        }
    }
}

/// Lefschetz fibration over the disk, described by its fiber, a curve system
/// on the fiber and a positive factorization of the monodromy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzFibration {
    pub kind: FibrationKind,
    pub fiber: SurfaceSpec,
    pub system: CurveSystem,
    pub word: TwistWord,
    /// 2-handles attached on top of the base piece the word starts from.
    pub handle_count: usize,
}

impl LefschetzFibration {
    /// Builds a fibration after checking every letter against the fiber.
    pub fn new(
        kind: FibrationKind,
        fiber: SurfaceSpec,
        system: CurveSystem,
        word: TwistWord,
        handle_count: usize,
    ) -> Result<Self> {
        for l in word.letters() {
            match l.twist {
                Twist::Curve(c) => {
                    system.index_of(c)?;
                }
                Twist::Boundary(k) => {
                    if k > fiber.boundary_count as usize {
                        return Err(Error::UnknownBoundary {
                            index: k,
                            boundary_count: fiber.boundary_count as usize,
                        });
                    }
                }
            }
        }
        Ok(LefschetzFibration {
            kind,
            fiber,
            system,
            word,
            handle_count,
        })
    }
}

pub fn milnor_fiber_word(p: usize, q: usize, r: usize) -> Result<LefschetzFibration> {
    require("r", r as i64, 2)?;
    let phi = torus_link_word(p, q)?;
    let fiber = torus_link_fiber(p as u64, q as u64)?;
    LefschetzFibration::new(
        FibrationKind::Milnor { p, q, r },
        fiber,
        build_packing(p - 1, q - 1)?,
        phi.pow(r),
        (p - 1) * (q - 1) * (r - 1),
    )
}

pub fn boundary_twist_word(p: usize) -> Result<LefschetzFibration> {
    require("p", p as i64, 2)?;
    let fiber = SurfaceSpec::new(genus_of_degree(p as u64), p as u64);
    LefschetzFibration::new(
        FibrationKind::BoundaryTwist { p },
        fiber,
        build_packing(p - 1, p - 1)?,
        boundary_product(p),
        p,
    )
}

/// `(t_1 ... t_m)^power` on the neighbourhood of an `m`-chain.
pub fn chain_fibration(m: usize, power: usize) -> Result<LefschetzFibration> {
    let system = build_chain(m)?;
    let fiber = crate::surfaces::neighborhood_surface(&system)?;
    let word = chain_product(m).pow(power);
    let handles = word.len();
    LefschetzFibration::new(
        FibrationKind::Chain { length: m, power },
        fiber,
        system,
        word,
        handles,
    )
}

/// Replace the `occurrence`-th (0-based) contiguous copy of `pattern`.
pub fn substitute(
    word: &TwistWord,
    pattern: &TwistWord,
    replacement: &TwistWord,
    occurrence: usize,
) -> Result<TwistWord> {
    let hits = word.occurrences(pattern);
    let start = *hits.get(occurrence).ok_or(Error::PatternNotFound {
        occurrence,
        found: hits.len(),
        word_len: word.len(),
        pattern_len: pattern.len(),
    })?;
    let mut letters = Vec::with_capacity(word.len() - pattern.len() + replacement.len());
    letters.extend_from_slice(&word.letters()[..start]);
    letters.extend_from_slice(replacement.letters());
    letters.extend_from_slice(&word.letters()[start + pattern.len()..]);
    Ok(TwistWord::new(letters))
}

/// Replace the copy of `pattern` starting exactly at `position`.
pub fn substitute_at(
    word: &TwistWord,
    pattern: &TwistWord,
    replacement: &TwistWord,
    position: usize,
) -> Result<TwistWord> {
    let hits = word.occurrences(pattern);
    match hits.iter().position(|&h| h == position) {
        Some(k) => substitute(word, pattern, replacement, k),
        None => Err(Error::PatternNotFound {
            occurrence: position,
            found: hits.len(),
            word_len: word.len(),
            pattern_len: pattern.len(),
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzInvariants {
    pub euler: i64,
    pub letter_count: usize,
    pub fiber_euler: i64,
}

/// `fiber x D^2` plus one 2-handle per vanishing cycle.
pub fn lefschetz_invariants(fib: &LefschetzFibration) -> LefschetzInvariants {
    let fiber_euler = fib.fiber.euler_characteristic();
    LefschetzInvariants {
        euler: fiber_euler + fib.word.len() as i64,
        letter_count: fib.word.len(),
        fiber_euler,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenBookDescriptor {
    pub page: SurfaceSpec,
    pub monodromy: TwistWord,
    pub binding_vector: Vec<u64>,
}

impl OpenBookDescriptor {
    /// Horizontal open books on the same plumbed 3-manifold are isomorphic
    /// exactly when their binding vectors agree.
    pub fn is_isomorphic(&self, other: &OpenBookDescriptor) -> bool {
        self.page == other.page && self.binding_vector == other.binding_vector
    }
}

/// Open book on the boundary. Only the two `x^p + y^p + z^p` families are
/// known to be horizontal with binding vector `(p)`.
pub fn open_book_descriptor(fib: &LefschetzFibration) -> Result<OpenBookDescriptor> {
    let p = match fib.kind {
        FibrationKind::Milnor { p, q, r } if p == q && q == r => p,
        FibrationKind::BoundaryTwist { p } => p,
        other => return Err(Error::BindingVectorUnknown(other.to_string())),
    };
    Ok(OpenBookDescriptor {
        page: fib.fiber,
        monodromy: fib.word.clone(),
        binding_vector: vec![p as u64],
    })
}
