//! The four text formats and their auto-detection.

use matcyc::input::parse;

fn main() -> matcyc::Result<()> {
    let texts = [
        "q 3\n1 0 1 1\n0 1 1 2\n",
        "uniform 5 2",
        "n 3 ranktable\n- 0\n1 1\n2 1\n3 1\n1,2 2\n1,3 2\n2,3 1\n1,2,3 2\n",
        include_str!("data/u42_bases.txt"),
    ];
    for text in texts {
        let spec = parse(text, "inline")?;
        let m = spec.matroid()?;
        println!("{}: n={} k={} uniform={:?}", spec.kind, m.size(), m.full_rank(), m.uniform_test());
        print!("{}", spec.to_text());
    }
    Ok(())
}
