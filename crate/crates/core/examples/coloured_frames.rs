//! Coloured resolvable GDDs of type 4^3 and coloured frames of type 8^4.

use kirkman::constructions::{default_base_frame, frame_8_4_coloured, rgdd_4_3_with_method, RgddMethod};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (g, _) = rgdd_4_3_with_method([0, 2, 4], 5)?;
    println!("delta 5, offsets (0,2,4):");
    for class in &g.rgdd.resolution.classes {
        let blocks: Vec<Vec<u32>> = class.blocks.iter().map(|&b| g.rgdd.design.block(b).to_vec()).collect();
        println!("  {blocks:?}");
    }

    let mut searched = 0;
    let mut total = 0;
    for delta in 4..=8 {
        for c0 in 0..delta {
            for c1 in 0..delta {
                for c2 in 0..delta {
                    total += 1;
                    if rgdd_4_3_with_method([c0, c1, c2], delta)?.1 == RgddMethod::Search {
                        searched += 1;
                    }
                }
            }
        }
    }
    println!("{total} offset triples for delta 4..8, {searched} needed the search fallback");

    let base = default_base_frame();
    for c in [[0, 0, 0, 0], [0, 1, 2, 3], [3, 3, 1, 0]] {
        let f = frame_8_4_coloured(c, 4, &base)?;
        println!(
            "frame 8^4 with {c:?}: {} blocks, {} partial classes, contains {{0,8,16}}: {}",
            f.frame.design.num_blocks(),
            f.frame.resolution.len(),
            f.frame.design.find_block(&[0, 8, 16]).is_some()
        );
    }
    Ok(())
}
