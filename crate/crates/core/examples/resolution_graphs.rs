//! Negative continued fractions and resolution graphs, with DOT output.

use brieskorn::resolution::{
    chain_singularity_resolution, fermat_resolution_graph, negative_continued_fraction,
    torus_link_resolution_graph, validate_s3, ChainParity,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, d) in [(7, 3), (13, 5), (21, 8)] {
        println!("{n}/{d} = {:?}", negative_continued_fraction(n, d)?.terms);
    }

    let g = torus_link_resolution_graph(3, 5)?;
    println!("\nT(3,5): unimodular S^3 plumbing {}", validate_s3(&g));
    print!("{}", g.plumbing_matrix());
    println!("{}", g.to_dot());

    let fermat = fermat_resolution_graph(4)?;
    println!("x^4 + y^4 + z^4: {}", fermat.to_dot());

    for parity in [ChainParity::Even, ChainParity::Odd] {
        let g = chain_singularity_resolution(2, parity)?;
        let v = g.vertices[0];
        println!(
            "chain g=2 {parity:?}: genus {} curve of square {}",
            v.genus, v.euler_weight
        );
    }
    Ok(())
}
