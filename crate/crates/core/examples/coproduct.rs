//! The infinitesimal coproduct, its iterates, the filtration level and the
//! unital coproduct on `K·1 ⊕ Hoch`.

use hoch::{Coproduct, Element, Op, UnitalElement};

fn main() -> hoch::Result<()> {
    let delta = Coproduct::new();
    for text in ["|", "| |", "[|,|]", "[|,|,|]", "[|,|] - | |", "[|,[|,|]] |"] {
        let x: Element = text.parse()?;
        println!("Delta({text}) = {}", delta.apply(&x));
    }

    let word: Element = "| | | |".parse()?;
    for r in 1..=4 {
        println!("Delta^({r})(| | | |) = {}", delta.iterated(&word, r)?);
    }

    for text in ["|", "| |", "[|,|] |", "| | [|,[|,|]]"] {
        let level = delta.filtration_level(&text.parse()?)?;
        println!(
            "filtration level of {text}: {}",
            level.map_or("-".into(), |r| r.to_string())
        );
    }

    let x: Element = "| [|,|]".parse()?;
    let y: Element = "[|,|]".parse()?;
    for op in [Op::Star, Op::Succ] {
        println!(
            "Delta(x {} y) matches the compatibility rule: {}",
            op.symbol(),
            delta.check_compatibility(&x, &y, op)
        );
    }

    for text in ["1", "|", "| |"] {
        let u: UnitalElement = text.parse()?;
        println!("delta({text}) = {}", delta.unital(&u));
    }
    Ok(())
}
