//! Code parameters (n,k,d,r,δ) of a matrix read from a file; defaults to
//! the bundled (6,3,2) example.

use matcyc::input::load;
use matcyc::CodeAnalysis;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/example1.mat").into());
    let m = load(&path)?.matroid()?;
    let analysis = CodeAnalysis::new(&m)?;
    println!("d = {}", analysis.code_distance()?);
    for (delta, r) in analysis.locality_profile()? {
        println!("delta = {delta}: r = {r}");
    }
    let report = analysis.verify_lrc(2, 2)?;
    print!("{}", report.render());
    Ok(())
}
