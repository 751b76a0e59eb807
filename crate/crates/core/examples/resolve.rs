//! Recovers parallel classes from a bare block list.

use kirkman::catalog::{kts15, rotational_kts33_design};
use kirkman::design::{verify_resolution, Design};
use kirkman::solver::{find_resolution, ResolveOptions};

fn report(name: &str, d: &Design, opts: &ResolveOptions) -> Result<(), Box<dyn std::error::Error>> {
    let r = find_resolution(d, opts);
    match r.resolution() {
        Some(res) => println!(
            "{name}: {} classes, verified {}, {} candidate classes, {} nodes, {:?}",
            res.len(),
            verify_resolution(d, res, None)?.ok(),
            r.stats.candidate_classes.unwrap_or(0),
            r.stats.nodes,
            r.stats.elapsed
        ),
        None => println!("{name}: {:?}", r.outcome),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k15 = kts15().kts.design;
    report("KTS(15)", &k15, &ResolveOptions::default())?;
    // The block-level fallback with randomised restarts.
    report("KTS(15), no class enumeration", &k15, &ResolveOptions { class_cap: 0, ..Default::default() })?;
    if std::env::args().any(|a| a == "--rot33") {
        // About half a minute in release mode.
        report("rotational KTS(33)", &rotational_kts33_design()?, &ResolveOptions::default())?;
    }
    Ok(())
}
