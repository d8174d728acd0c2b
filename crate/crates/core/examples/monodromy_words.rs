//! Monodromy words for Milnor fibers and the GC blow-up substitution.

use brieskorn::monodromy::{
    boundary_product, boundary_twist_word, lefschetz_invariants, milnor_fiber_word,
    open_book_descriptor, packing_product, substitute,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fib = milnor_fiber_word(2, 3, 5)?;
    let inv = lefschetz_invariants(&fib);
    println!("M(2,3,5): {} letters, e = {}", inv.letter_count, inv.euler);
    println!("  {}", fib.word);

    let p = 4;
    let milnor = milnor_fiber_word(p, p, p)?;
    let boundary = boundary_twist_word(p)?;
    let a = open_book_descriptor(&milnor)?;
    let b = open_book_descriptor(&boundary)?;
    println!(
        "\nopen books for p = {p}: page {:?}, bindings {:?} and {:?}, isomorphic: {}",
        a.page,
        a.binding_vector,
        b.binding_vector,
        a.is_isomorphic(&b)
    );
    println!(
        "e(M({p},{p},{p})) = {}, e(boundary word) = {}",
        lefschetz_invariants(&milnor).euler,
        lefschetz_invariants(&boundary).euler
    );

    // replace one boundary product by the packing product to the p-th power
    let w0 = boundary_product(p);
    let wp = packing_product(p)?.pow(p);
    let word = "t1_1 t1_2"
        .parse::<brieskorn::monodromy::TwistWord>()?
        .concat(&w0);
    let blown_up = substitute(&word, &w0, &wp, 0)?;
    println!(
        "\nGC blow-up: {} letters -> {} letters",
        word.len(),
        blown_up.len()
    );
    let back = substitute(&blown_up, &wp, &w0, 0)?;
    assert_eq!(back, word);
    println!("blow-down restores: {back}");
    Ok(())
}
