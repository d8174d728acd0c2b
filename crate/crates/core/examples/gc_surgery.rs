//! Euler characteristic and signature bookkeeping for GC blow-ups.

use brieskorn::surgery::{
    apply_gc, format_table, gc_surgery_delta, hypersurface_invariants, sp_fibration_table,
    symplectic_sum_check, Direction, FourManifoldInvariants,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", format_table(&sp_fibration_table(6)?));

    println!();
    for p in 2..=5 {
        let d = gc_surgery_delta(p)?;
        println!(
            "p = {p}: delta e {:>4}  delta sigma {:>4}  delta b2 {:>4}",
            d.delta_euler, d.delta_signature, d.delta_b2
        );
    }

    println!();
    for p in 3..=5 {
        let sp = hypersurface_invariants(p)?.as_four_manifold();
        let down = apply_gc(sp, Direction::Blowdown, p)?;
        println!(
            "blow down S_{p} ({}, {}): ({}, {}) {}",
            sp.euler,
            sp.signature,
            down.after.euler,
            down.after.signature,
            down.label.unwrap_or_default()
        );
    }

    let x = FourManifoldInvariants::new(12, -8);
    let check = symplectic_sum_check(4, x)?;
    println!(
        "\nX = (12, -8), p = 4: excision {:?} fiber sum {:?} agree {}",
        (check.excision.euler, check.excision.signature),
        (check.fiber_sum.euler, check.fiber_sum.signature),
        check.pass
    );
    Ok(())
}
