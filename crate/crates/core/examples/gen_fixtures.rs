//! Writes the fixture catalog as canonical JSON files.
//!
//! Usage: cargo run --example gen_fixtures [-- <output dir>]

use std::path::PathBuf;

use homjordan::fixtures::catalog;
use homjordan::io::write_algebra_file;

fn main() -> homjordan::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    std::fs::create_dir_all(&dir)?;
    for (name, file) in catalog() {
        let path = dir.join(format!("{name}.json"));
        write_algebra_file(&path, &file)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
