//! Action of Dehn-twist words on the free module spanned by a curve system.
//!
//! A right-handed twist about `c` acts as the transvection
//! `x -> x + <x, c> c`. Boundary-parallel curves pair trivially with
//! everything, so boundary letters act as the identity. Checking that a
//! relation's two sides agree here is a necessary condition for the relation
//! in the mapping class group, not a proof of it.
//!
//! Matrices act on column vectors; column `b` of a letter's matrix is the
//! image of basis curve `b`. Since the leftmost letter acts first, the
//! matrix of `l_1 l_2 ... l_n` is `M(l_n) ... M(l_2) M(l_1)`.

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::linalg::IntMatrix;
use crate::monodromy::{chain_product, packing_product, Twist, TwistWord};
use crate::surfaces::{build_chain, build_packing, CurveId, CurveSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransvectionModule {
    system: CurveSystem,
}

impl TransvectionModule {
    pub fn new(system: CurveSystem) -> Self {
        TransvectionModule { system }
    }

    pub fn system(&self) -> &CurveSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.len()
    }

    pub fn basis(&self) -> &[CurveId] {
        self.system.curves()
    }
}

/// Matrix of `x -> x + sign <x, c> c`.
pub fn transvection_matrix(
    module: &TransvectionModule,
    curve: CurveId,
    sign: i8,
) -> Result<IntMatrix> {
    let c = module.system.index_of(curve)?;
    let pairing = module.system.pairing();
    let n = module.rank();
    let mut m = IntMatrix::identity(n);
    for b in 0..n {
        m[(c, b)] += i64::from(sign) * pairing[(b, c)];
    }
    Ok(m)
}

pub fn word_action(word: &TwistWord, module: &TransvectionModule) -> Result<IntMatrix> {
    let mut acc = IntMatrix::identity(module.rank());
    for letter in word.letters() {
        let Twist::Curve(c) = letter.twist else {
            continue;
        };
        let t = transvection_matrix(module, c, letter.sign)?;
        acc = t
            .checked_mul(&acc)
            .ok_or(Error::Overflow("composing twist matrices"))?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum RelationId {
    /// `(prod t_{i,j})^p = d_1 ... d_p` over a `(p-1) x (p-1)` packing.
    GeneralizedChain { p: usize },
    /// `(t_1 ... t_{2g})^{4g+2} = t_d`
    ChainEven { g: usize },
    /// `(t_1 ... t_{2g+1})^{2g+2} = t_{d_1} t_{d_2}`
    ChainOdd { g: usize },
}

impl RelationId {
    fn system_and_factor(&self) -> Result<(CurveSystem, TwistWord, usize)> {
        match *self {
            RelationId::GeneralizedChain { p } => {
                require("p", p as i64, 2)?;
                Ok((build_packing(p - 1, p - 1)?, packing_product(p)?, p))
            }
            RelationId::ChainEven { g } => {
                require("g", g as i64, 1)?;
                Ok((build_chain(2 * g)?, chain_product(2 * g), 4 * g + 2))
            }
            RelationId::ChainOdd { g } => {
                require("g", g as i64, 1)?;
                Ok((build_chain(2 * g + 1)?, chain_product(2 * g + 1), 2 * g + 2))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(flatten)]
    pub relation_id: RelationId,
    pub exponent: usize,
    pub pass: bool,
    pub calibration: Vec<i8>,
    /// Smallest `k >= 1` with `factor^k` acting trivially, searched up to
    /// twice the relation's exponent.
    pub minimal_exponent: Option<usize>,
    pub lhs_matrix: IntMatrix,
    pub rhs_matrix: IntMatrix,
}

/// Largest system for which the orientation search is exhaustive.
const MAX_CALIBRATION_CURVES: usize = 16;

/// Checks the homological shadow of a relation. If the default orientation
/// fails, every sign assignment is tried (systems of up to 16 curves) and the
/// first passing one is reported.
pub fn verify_relation(relation: RelationId) -> Result<VerificationReport> {
    let (system, factor, exponent) = relation.system_and_factor()?;
    let lhs_word = factor.pow(exponent);
    let n = system.len();
    let rhs = IntMatrix::identity(n);

    let attempt = |sys: CurveSystem| -> Result<(IntMatrix, TransvectionModule)> {
        let module = TransvectionModule::new(sys);
        Ok((word_action(&lhs_word, &module)?, module))
    };

    let (mut lhs, mut module) = attempt(system.clone())?;
    if lhs != rhs && n <= MAX_CALIBRATION_CURVES {
        for mask in 1u32..(1u32 << n) {
            let signs: Vec<i8> = (0..n)
                .map(|a| if mask >> a & 1 == 1 { -1 } else { 1 })
                .collect();
            let (l, m) = attempt(system.with_signs(&signs)?)?;
            if l == rhs {
                lhs = l;
                module = m;
                break;
            }
        }
    }

    let step = word_action(&factor, &module)?;
    let mut power = IntMatrix::identity(n);
    let mut minimal_exponent = None;
    for k in 1..=2 * exponent {
        power = step
            .checked_mul(&power)
            .ok_or(Error::Overflow("powering the factor"))?;
        if power.is_identity() {
            minimal_exponent = Some(k);
            break;
        }
    }

    Ok(VerificationReport {
        relation_id: relation,
        exponent,
        pass: lhs == rhs,
        calibration: module.system().signs().to_vec(),
        minimal_exponent,
        lhs_matrix: lhs,
        rhs_matrix: rhs,
    })
}
