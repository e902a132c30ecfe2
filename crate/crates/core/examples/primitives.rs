//! Primitive elements: the kernel of the coproduct in each degree, the
//! bracket images of trees, and the PBW basis of products of primitives.

use hoch::verify::coordinate_matrix;
use hoch::{
    enumerate_forests, enumerate_trees, nary_bracket, pbw_basis_element, tree_to_primitive,
    Alphabet, Coproduct, Element,
};

fn main() -> hoch::Result<()> {
    let delta = Coproduct::new();
    let alphabet = Alphabet::default();

    for n in 1..=5 {
        let basis = delta.primitive_basis(n, alphabet)?;
        println!(
            "dim Prim_{n} = {:>2}   (trees with {n} leaves: {})",
            basis.len(),
            enumerate_trees(n, alphabet)?.len()
        );
    }

    println!("\nprimitive basis in degree 3 (row-reduced):");
    for p in delta.primitive_basis(3, alphabet)? {
        println!("  {p}");
    }

    println!("\nbracket images of trees:");
    for t in enumerate_trees(3, alphabet)? {
        let p = tree_to_primitive(&t);
        println!("  P({t}) = {p}   primitive: {}", delta.is_primitive(&p));
    }

    let a: Element = "|".parse()?;
    let b = tree_to_primitive(&"[|,|]".parse()?);
    let bracket = nary_bracket(&[a.clone(), b.clone(), a])?;
    println!(
        "\n[|, P([|,|]), |]_3 = {bracket}\n  primitive: {}",
        delta.is_primitive(&bracket)
    );

    println!("\nPBW basis in degree 3:");
    let forests = enumerate_forests(3, alphabet)?;
    let images: Vec<Element> = forests.iter().map(pbw_basis_element).collect();
    for (f, x) in forests.iter().zip(&images) {
        println!("  {f:<10} -> {x}");
    }
    let m = coordinate_matrix(&forests, &images);
    println!(
        "change of basis unitriangular: {}",
        m.is_upper_unitriangular()
    );
    Ok(())
}
