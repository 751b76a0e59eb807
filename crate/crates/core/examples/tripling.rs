//! Tripling: an equitably 3-coloured KTS(3v) gives a KTS(9v) with an
//! equitable weak 3-colouring.

use kirkman::catalog::{kts15, kts9};
use kirkman::constructions::tripling;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut current = kts9().coloured_with("3x3").expect("3x3");
    for _ in 0..2 {
        let next = tripling(&current)?;
        println!(
            "KTS({}) -> KTS({}): {} blocks, {} classes, colour type {}",
            current.kts.v(),
            next.kts.v(),
            next.kts.design.num_blocks(),
            next.kts.resolution.len(),
            next.colouring.colour_type()
        );
        current = next;
    }
    let k45 = tripling(&kts15().coloured())?;
    println!("KTS(15) -> KTS(45): colour type {}", k45.colouring.colour_type());
    Ok(())
}
