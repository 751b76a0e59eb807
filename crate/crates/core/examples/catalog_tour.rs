//! Walks the catalog and runs every verifier on each entry.

use kirkman::catalog::{ids, lookup, self_test};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for id in ids() {
        let entry = lookup(&id)?;
        let report = self_test(&entry)?;
        let names: Vec<&str> = entry.colourings.iter().map(|c| c.name).collect();
        println!(
            "{id:>10}  v={:<3} blocks={:<4} classes={:<3} colourings={:?}  {}",
            entry.design.v(),
            entry.design.num_blocks(),
            entry.resolution.as_ref().map_or(0, |r| r.len()),
            names,
            if report.ok() { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
