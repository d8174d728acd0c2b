//! End-to-end consistency checks run by `brieskorn selftest`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::milnorlattice::{
    brieskorn_signature_oracle, intersection_matrix, milnor_number, Definiteness,
};
use crate::monodromy::{
    boundary_twist_word, lefschetz_invariants, milnor_fiber_word, open_book_descriptor,
};
use crate::resolution::{
    negative_continued_fraction, torus_link_resolution_graph, validate_s3, NegContFrac,
};
use crate::surfaces::genus_of_degree;
use crate::surgery::{
    apply_gc, gc_surgery_delta, hypersurface_invariants, milnor_fiber_signature,
    sp_fibration_table, symplectic_sum_check, Direction, FourManifoldInvariants,
};
use crate::twistrep::{verify_relation, word_action, RelationId, TransvectionModule};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn from(id: u32, name: &'static str, outcome: Result<std::result::Result<(), String>>) -> Self {
        let (pass, detail) = match outcome {
            Ok(Ok(())) => (true, "ok".to_owned()),
            Ok(Err(why)) => (false, why),
            Err(e) => (false, format!("error: {e}")),
        };
        CheckResult {
            id,
            name,
            pass,
            detail,
        }
    }
}

type Check = fn() -> Result<std::result::Result<(), String>>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($fmt)+)));
        }
    };
}

fn e8() -> Result<std::result::Result<(), String>> {
    let inv = intersection_matrix(2, 3, 5)?.invariants();
    ensure!(inv.rank == 8, "rank {}", inv.rank);
    ensure!(inv.signature == -8, "signature {}", inv.signature);
    ensure!(inv.is_unimodular(), "det {}", inv.determinant);
    ensure!(inv.even, "odd form");
    ensure!(
        inv.definiteness == Definiteness::NegativeDefinite,
        "{:?}",
        inv.definiteness
    );
    Ok(Ok(()))
}

fn ade() -> Result<std::result::Result<(), String>> {
    let mut cases: Vec<([usize; 3], i64, i64)> = (3..=9)
        .map(|r| ([2, 2, r], r as i64, -(r as i64 - 1)))
        .collect();
    cases.push(([2, 3, 3], 4, -4));
    cases.push(([2, 3, 4], 3, -6));
    for ([p, q, r], det, sigma) in cases {
        let inv = intersection_matrix(p, q, r)?.invariants();
        ensure!(
            inv.abs_determinant() == BigInt::from(det) && inv.signature == sigma,
            "({p},{q},{r}): |det| {} sigma {}",
            inv.abs_determinant(),
            inv.signature
        );
    }
    Ok(Ok(()))
}

fn sweep() -> impl Iterator<Item = [usize; 3]> {
    (2..=6).flat_map(|p| (p..=6).flat_map(move |q| (q..=6).map(move |r| [p, q, r])))
}

fn oracle() -> Result<std::result::Result<(), String>> {
    for [p, q, r] in sweep() {
        let sigma = intersection_matrix(p, q, r)?.invariants().signature;
        let count = brieskorn_signature_oracle(p, q, r);
        ensure!(
            sigma == count,
            "({p},{q},{r}): matrix {sigma}, lattice points {count}"
        );
    }
    Ok(Ok(()))
}

fn mu_and_parity() -> Result<std::result::Result<(), String>> {
    for [p, q, r] in sweep() {
        let l = intersection_matrix(p, q, r)?;
        let n = l.gram.nrows();
        ensure!(n == milnor_number(p, q, r), "({p},{q},{r}): size {n}");
        ensure!(
            (0..n).all(|i| l.gram[(i, i)] == -2),
            "({p},{q},{r}): diagonal not -2"
        );
    }
    Ok(Ok(()))
}

fn relations() -> Result<std::result::Result<(), String>> {
    for p in 3..=5 {
        let r = verify_relation(RelationId::GeneralizedChain { p })?;
        ensure!(r.pass, "generalized chain p={p} fails");
    }
    for g in 1..=4 {
        ensure!(
            verify_relation(RelationId::ChainEven { g })?.pass,
            "even chain g={g}"
        );
        ensure!(
            verify_relation(RelationId::ChainOdd { g })?.pass,
            "odd chain g={g}"
        );
    }
    let module = TransvectionModule::new(crate::surfaces::build_packing(2, 2)?);
    let w = crate::monodromy::packing_product(3)?;
    for k in 1..=2 {
        ensure!(
            !word_action(&w.pow(k), &module)?.is_identity(),
            "p=3 power {k} acts trivially"
        );
    }
    Ok(Ok(()))
}

fn table() -> Result<std::result::Result<(), String>> {
    let rows = sp_fibration_table(5)?;
    let got: Vec<_> = rows
        .iter()
        .map(|r| (r.fiber_genus, r.singular_fibers, r.euler, r.signature))
        .collect();
    let want = vec![
        (0, 2, 4, 0),
        (1, 12, 9, -5),
        (3, 36, 24, -16),
        (6, 80, 55, -35),
    ];
    ensure!(got == want, "table rows {got:?}");
    Ok(Ok(()))
}

fn case_studies() -> Result<std::result::Result<(), String>> {
    let s3 = hypersurface_invariants(3)?.as_four_manifold();
    let down = apply_gc(s3, Direction::Blowdown, 3)?;
    ensure!(
        (down.after.euler, down.after.signature) == (0, 0),
        "S_3 blow-down gives {:?}",
        down.after
    );
    ensure!(
        down.label.as_deref() == Some("twisted S²-bundle over T²"),
        "label {:?}",
        down.label
    );
    let d2 = gc_surgery_delta(2)?;
    ensure!(
        (d2.delta_euler, d2.delta_signature, d2.delta_b2) == (0, 0, 0),
        "p=2 deltas {d2:?}"
    );
    Ok(Ok(()))
}

fn novikov() -> Result<std::result::Result<(), String>> {
    for p in 3..=5 {
        let lattice = milnor_fiber_signature(p)?;
        let closed = hypersurface_invariants(p)?.signature - 1;
        ensure!(
            lattice == closed,
            "p={p}: lattice {lattice}, S_p - 1 = {closed}"
        );
    }
    Ok(Ok(()))
}

fn symplectic_sum() -> Result<std::result::Result<(), String>> {
    for p in 2..=6 {
        for x in [
            FourManifoldInvariants::new(0, 0),
            FourManifoldInvariants::new(3, 1),
        ] {
            let c = symplectic_sum_check(p, x)?;
            ensure!(c.pass, "p={p}: {:?} vs {:?}", c.excision, c.fiber_sum);
        }
    }
    Ok(Ok(()))
}

fn continued_fractions() -> Result<std::result::Result<(), String>> {
    for n in 1..=50i64 {
        for d in 1..n {
            let Ok(cf) = negative_continued_fraction(n, d) else {
                continue;
            };
            ensure!(
                NegContFrac::evaluate(&cf.terms) == Some((n, d)),
                "{n}/{d} -> {:?}",
                cf.terms
            );
        }
    }
    for p in 2..=8 {
        for q in 2..=8 {
            let g = torus_link_resolution_graph(p, q)?;
            ensure!(validate_s3(&g), "({p},{q}) fails unimodularity");
        }
    }
    Ok(Ok(()))
}

fn words() -> Result<std::result::Result<(), String>> {
    for p in 2..=8 {
        for q in 2..=8 {
            for r in 2..=8 {
                let e = lefschetz_invariants(&milnor_fiber_word(p, q, r)?).euler;
                let want = 1 + milnor_number(p, q, r) as i64;
                ensure!(e == want, "({p},{q},{r}): e = {e}");
            }
        }
    }
    for p in 2..=8 {
        let boundary = boundary_twist_word(p)?;
        let e = lefschetz_invariants(&boundary).euler;
        ensure!(
            e == 2 - 2 * genus_of_degree(p as u64) as i64,
            "boundary word p={p}: e = {e}"
        );
        let a = open_book_descriptor(&milnor_fiber_word(p, p, p)?)?;
        let b = open_book_descriptor(&boundary)?;
        ensure!(
            a.is_isomorphic(&b) && a.binding_vector == vec![p as u64],
            "p={p}: open books differ"
        );
    }
    Ok(Ok(()))
}

const CHECKS: [(u32, &str, Check); 11] = [
    (1, "E8 reproduction", e8),
    (2, "ADE series", ade),
    (3, "Brieskorn oracle equality", oracle),
    (4, "Milnor number and parity", mu_and_parity),
    (5, "relation verification", relations),
    (6, "S_p fibration table", table),
    (7, "case studies", case_studies),
    (8, "Novikov constraint", novikov),
    (9, "symplectic-sum consistency", symplectic_sum),
    (
        10,
        "continued fractions and S^3 plumbing",
        continued_fractions,
    ),
    (11, "word and Euler identities", words),
];

/// Runs every check on its own thread.
pub fn run_all() -> Vec<CheckResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS
            .iter()
            .map(|&(id, name, check)| s.spawn(move || CheckResult::from(id, name, check())))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("selftest check panicked"))
            .collect()
    })
}
