//! Generating functions for trees and forests, and the identity
//! `f_Hoch = x/(1−x) ∘ f_T`.

use hoch::{hoch_series, schroeder, tinf_series, PowerSeries, SchroederKind};

fn main() -> hoch::Result<()> {
    let order = 10;
    let trees = tinf_series(order)?;
    let forests = hoch_series(order)?;
    println!("f_T    = {trees}");
    println!("f_Hoch = {forests}");

    let composed = PowerSeries::geometric(order).compose(&trees);
    println!("x/(1-x) o f_T equals f_Hoch: {}", composed == forests);

    let little: Vec<_> = (1..=order)
        .map(|n| schroeder(SchroederKind::Little, n))
        .collect::<Result<_, _>>()?;
    let large: Vec<_> = (1..=order)
        .map(|n| schroeder(SchroederKind::Large, n))
        .collect::<Result<_, _>>()?;
    println!("little Schroeder: {little:?}");
    println!("large Schroeder:  {large:?}");
    Ok(())
}
