//! A 4-chromatic KTS(129): blow the 4-GDD of type 4^4 up by a coloured
//! frame of type 8^4 into a frame of type 32^4, then fill each group and a
//! new point with a copy of a 4-chromatic KTS(33).

use kirkman::catalog::{gdd_4x4, tv_kts33};
use kirkman::constructions::{
    align_fill, default_base_frame, frame_8_4_coloured, frame_fill_one_point_coloured, gdd_blowup,
};
use kirkman::design::verify_subsystem;
use kirkman::solver::{search_weak_colouring, SearchOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f84 = frame_8_4_coloured([0, 0, 0, 0], 4, &default_base_frame())?;
    let f32 = gdd_blowup(&gdd_4x4(), 4, &f84.frame)?;
    println!("frame type {}", f32.frame.groups.group_type());

    let tv = tv_kts33(1)?.coloured();
    let mut fills = Vec::new();
    for g in f32.frame.groups.groups() {
        let colours: Vec<u32> = g.iter().map(|&p| f32.colouring.colour(p)).collect();
        fills.push(align_fill(&tv, &colours, 0)?);
    }
    let k129 = frame_fill_one_point_coloured(&f32, &fills)?;
    println!(
        "KTS({}): {} blocks, {} classes, colour type {}",
        k129.kts.v(),
        k129.kts.design.num_blocks(),
        k129.kts.resolution.len(),
        k129.colouring.colour_type()
    );

    // Group 0 with the new point carries a copy of the KTS(33), which has no
    // weak 3-colouring, so neither does the KTS(129).
    let mut sub: Vec<u32> = f32.frame.groups.group(0).to_vec();
    sub.push(128);
    println!("sub-KTS(33) present: {}", verify_subsystem(&k129.kts.design, &k129.kts.resolution, &sub)?.ok());
    let three = search_weak_colouring(&tv.kts.design, &SearchOptions::new(3))?;
    println!("KTS(33) 3-colourable: {}", three.status);
    Ok(())
}
