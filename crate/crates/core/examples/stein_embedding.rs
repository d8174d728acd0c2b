//! Legendrian handle data and monotone embeddings between Milnor fibers.

use brieskorn::milnorlattice::{embedding_delta, stein_handles};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let diagram = stein_handles(2, 3, 4)?;
    for h in &diagram.handles {
        println!(
            "handle {:?}: tb {} rot {} framing {}",
            h.label, h.tb, h.rotation, h.smooth_framing
        );
    }
    println!("c1 = {:?}", diagram.c1);
    print!(
        "intersection form from linking:\n{}",
        diagram.intersection_form()
    );

    for (small, big) in [
        ([2, 3, 4], [2, 3, 5]),
        ([2, 3, 5], [3, 3, 5]),
        ([3, 3, 3], [3, 4, 5]),
    ] {
        let d = embedding_delta(small, big)?;
        println!(
            "{small:?} -> {big:?}: {} added handles, principal sublattice {}",
            d.added_handles, d.principal_sublattice
        );
    }
    if let Err(e) = embedding_delta([2, 3, 5], [2, 3, 4]) {
        println!("{e}");
    }
    Ok(())
}
