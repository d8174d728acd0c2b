//! Build the packing and chain curve systems and print their pairings.

use brieskorn::surfaces::{build_chain, build_packing, neighborhood_surface, torus_link_fiber};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let packing = build_packing(3, 3)?;
    let fiber = neighborhood_surface(&packing)?;
    println!(
        "3x3 packing: {} curves on a genus {} surface with {} boundary components",
        packing.len(),
        fiber.genus,
        fiber.boundary_count
    );
    let labels: Vec<String> = packing.curves().iter().map(ToString::to_string).collect();
    println!("curves: {}", labels.join(" "));
    print!("{}", packing.pairing());

    let chain = build_chain(5)?;
    println!("\n5-chain lives on {:?}", neighborhood_surface(&chain)?);
    print!("{}", chain.pairing());

    let flipped = packing.flip(4);
    println!("\nreversing g2_2 negates its row and column:");
    print!("{}", flipped.pairing());

    for (p, q) in [(2, 3), (3, 4), (4, 6)] {
        println!("T({p},{q}) fiber: {:?}", torus_link_fiber(p, q)?);
    }

    println!("\n{}", serde_json::to_string(&build_chain(2)?)?);
    Ok(())
}
