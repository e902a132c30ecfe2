//! The two products of the free Hoch-algebra and the two-cocycle relation
//! `(x ≻ y) * z + (x * y) ≻ z = x ≻ (y * z) + x * (y ≻ z)`.

use hoch::{star, succ, Element};

fn main() -> hoch::Result<()> {
    let e = |s: &str| s.parse::<Element>();

    let (three, one) = (e("| | |")?, e("|")?);
    println!("(| | |) > (|)       = {}", succ(&three, &one));
    println!("(|) > (| [|,|])     = {}", succ(&one, &e("| [|,|]")?));
    println!("(| |) * [|,|]       = {}", star(&e("| |")?, &e("[|,|]")?));

    let leaf = e("|")?;
    let left = succ(&succ(&leaf, &leaf), &leaf);
    let right = succ(&leaf, &succ(&leaf, &leaf));
    println!("\n> is not associative: {left}  vs  {right}");

    let x = e("2*| - [|,|]")?;
    let y = e("1/3*| |")?;
    let z = e("[|,[|,|]] + |")?;
    let lhs = star(&succ(&x, &y), &z) + succ(&star(&x, &y), &z);
    let rhs = succ(&x, &star(&y, &z)) + star(&x, &succ(&y, &z));
    println!("\ncocycle relation for x = {x}, y = {y}, z = {z}:");
    println!(
        "  both sides have {} terms, equal: {}",
        lhs.len(),
        lhs == rhs
    );
    Ok(())
}
