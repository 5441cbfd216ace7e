//! Writes every witness machine to `<dir>/<name>.m` (default `machines`).

use std::path::PathBuf;

use pdt::transducer::format;
use pdt::witnesses::machines;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "machines".into()));
    std::fs::create_dir_all(&dir)?;
    for (name, spec) in machines::corpus() {
        let path = dir.join(format!("{name}.m"));
        std::fs::write(&path, format::serialize(&spec))?;
        println!("{}", path.display());
    }
    Ok(())
}
