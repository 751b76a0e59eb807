//! Rainbow KTS(3v + w) from a Kirkman frame and a rainbow ingredient.
//! Deleting a point of KTS(9) gives a frame of type 2^4, and KTS(9) with
//! its rainbow 3-colouring and a block of the rainbow class as sub-KTS(3)
//! fills every group.

use kirkman::catalog::kts9;
use kirkman::constructions::{rainbow_frame_construction, RainbowIngredient};
use kirkman::design::delete_point;
use kirkman::solver::{chromatic_number, Chromatic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k9 = kts9();
    let ingredient = k9.coloured_with("3x3").expect("3x3");
    let class = ingredient.rainbow()?.rainbow_class().expect("rainbow");
    let b = ingredient.kts.resolution.classes[class].blocks[0];
    let sub = ingredient.kts.design.block(b).to_vec();
    let ing = RainbowIngredient { kts: ingredient, sub };

    let frame = delete_point(&k9.kts, 0)?;
    let k27 = rainbow_frame_construction(&frame, 3, std::slice::from_ref(&ing))?;
    let chi = chromatic_number(&k27.kts.design, 4, None, 1)?;
    println!(
        "KTS({}) with {} blocks, rainbow classes {:?}, chromatic number {}",
        k27.kts.v(),
        k27.kts.design.num_blocks(),
        k27.rainbow()?.rainbow_classes,
        match chi.result {
            Chromatic::Exact { delta, .. } => delta.to_string(),
            other => format!("{other:?}"),
        }
    );

    // Frames of type 2^13 and 2^40 from the new systems, each filled again.
    let mut outer = k27;
    for _ in 0..2 {
        let frame = delete_point(&outer.kts, 0)?;
        let next = rainbow_frame_construction(&frame, 3, std::slice::from_ref(&ing))?;
        println!("frame 2^{} -> rainbow KTS({})", frame.groups.len(), next.kts.v());
        outer = next;
    }
    Ok(())
}
