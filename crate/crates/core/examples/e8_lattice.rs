//! Intersection lattices of Milnor fibers: E8 and the ADE series.

use brieskorn::milnorlattice::{brieskorn_signature_oracle, intersection_matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e8 = intersection_matrix(2, 3, 5)?;
    print!("{}", e8.gram);
    let inv = e8.invariants();
    println!(
        "rank {} signature {} det {} even {} {:?}\n",
        inv.rank, inv.signature, inv.determinant, inv.even, inv.definiteness
    );

    println!(
        "{:>10} {:>4} {:>6} {:>5} {:>7}",
        "(p,q,r)", "mu", "sigma", "det", "oracle"
    );
    for (p, q, r) in [
        (2, 2, 5),
        (2, 3, 3),
        (2, 3, 4),
        (2, 3, 5),
        (2, 3, 6),
        (3, 3, 3),
        (2, 4, 5),
        (3, 4, 5),
    ] {
        let inv = intersection_matrix(p, q, r)?.invariants();
        println!(
            "{:>10} {:>4} {:>6} {:>5} {:>7}",
            format!("({p},{q},{r})"),
            inv.rank,
            inv.signature,
            inv.determinant,
            brieskorn_signature_oracle(p, q, r)
        );
    }
    Ok(())
}
