//! Check twist relations on first homology with exact integer matrices.

use brieskorn::monodromy::packing_product;
use brieskorn::surfaces::build_packing;
use brieskorn::twistrep::{verify_relation, word_action, RelationId, TransvectionModule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for relation in [
        RelationId::GeneralizedChain { p: 3 },
        RelationId::GeneralizedChain { p: 5 },
        RelationId::ChainEven { g: 3 },
        RelationId::ChainOdd { g: 3 },
    ] {
        let report = verify_relation(relation)?;
        println!(
            "{relation:?}: exponent {}, pass {}, minimal exponent {:?}",
            report.exponent, report.pass, report.minimal_exponent
        );
    }

    let module = TransvectionModule::new(build_packing(2, 2)?);
    let w = packing_product(3)?;
    for k in 1..=3 {
        let m = word_action(&w.pow(k), &module)?;
        println!("\n(product)^{k} on H_1, identity: {}", m.is_identity());
        print!("{m}");
    }
    Ok(())
}
