//! Exact weak chromatic numbers: KTS(9) is 3-chromatic, the TV systems
//! are 4-chromatic, and every colour type of KTS(9) can be realised.

use std::time::Duration;

use kirkman::catalog::{kts9, tv_kts33};
use kirkman::design::PartitionType;
use kirkman::solver::{chromatic_number, search_weak_colouring, Chromatic, SearchOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k9 = kts9().kts.design;
    let out = chromatic_number(&k9, 5, None, 1)?;
    if let Chromatic::Exact { delta, colouring } = &out.result {
        println!("chi(KTS(9)) = {delta}, witness type {}", colouring.colour_type());
    }
    for t in ["3^3", "2^1 3^1 4^1", "1^1 4^2"] {
        let opts = SearchOptions::new(3).with_type(PartitionType::parse(t).expect("valid type"));
        println!("KTS(9) type {t}: {}", search_weak_colouring(&k9, &opts)?.status);
    }

    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    for i in [1, 17, 30] {
        let d = tv_kts33(i)?.kts.design;
        let three = search_weak_colouring(&d, &SearchOptions::new(3).threads(threads))?;
        let four = search_weak_colouring(&d, &SearchOptions::new(4).equitable().budget(Duration::from_secs(60)))?;
        println!(
            "tv33-{i}: delta 3 {} ({} nodes), delta 4 equitable {}",
            three.status,
            three.stats.nodes,
            four.colouring().map_or("none".into(), |c| c.colour_type().to_string())
        );
    }
    Ok(())
}
