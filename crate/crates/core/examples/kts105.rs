//! KTS(8w + 1) from a quadruple system of order w: every block carries a
//! coloured frame of type 8^4 and every group is closed off with a KTS(9).
//! Here w = 13, first with nothing embedded, then with a single triple.

use kirkman::catalog::q13;
use kirkman::constructions::{sts_to_kts_pipeline, Embedding};
use kirkman::design::{Colouring, Design};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = q13();
    let empty = Design::new(0, 3, Vec::<[u32; 3]>::new())?;
    let out = sts_to_kts_pipeline(&empty, &Colouring::from_colours(vec![]), &q.design, &Embedding::default(), 4)?;
    println!(
        "KTS({}): {} blocks, {} classes, colour type {}",
        out.kts.v(),
        out.kts.design.num_blocks(),
        out.kts.resolution.len(),
        out.colouring.colour_type()
    );

    // One triple {0,1,2} placed on block {0,1,3,9} with 9 as the extra point.
    let s = Design::new(3, 3, [[0, 1, 2]])?;
    let colouring = Colouring::new(vec![0, 0, 1], 4)?;
    let embedding = Embedding { point_map: vec![0, 1, 3], extra: vec![9] };
    let out = sts_to_kts_pipeline(&s, &colouring, &q.design, &embedding, 4)?;
    println!("triple {{0,8,24}} present: {}", out.kts.design.find_block(&[0, 8, 24]).is_some());
    Ok(())
}
