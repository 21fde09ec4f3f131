//! Rank, closure and cyclic part on a generator matrix, then the same
//! queries on a restriction, a contraction and the dual.

use matcyc::catalog::example_matrix;
use matcyc::{ElementSet, Matroid, MinorSpec};

fn main() -> matcyc::Result<()> {
    let m = Matroid::linear(example_matrix());
    let a: ElementSet = "2,3,4".parse()?;
    println!("{}", m.provenance());
    println!("rank{a} = {}", m.rank(a)?);
    println!("cl{{1,2}} = {}", m.closure(ElementSet::of(&[1, 2]))?);
    println!("cyc{{1,2,4,5,6}} = {}", m.cyc(ElementSet::of(&[1, 2, 4, 5, 6]))?);

    let contracted = m.contract(ElementSet::of(&[1]))?;
    let restricted = m.restrict(ElementSet::of(&[2, 3, 4, 5]))?;
    println!("in M/{{1}}: rank{a} = {}", contracted.rank(a)?);
    println!("in M|{{2,3,4,5}}: rank{a} = {}", restricted.rank(a)?);
    println!("in M*: rank{a} = {}", m.dual().rank(a)?);

    let spec = MinorSpec::new(ElementSet::of(&[1, 2, 3, 5, 6]), ElementSet::of(&[5]))?;
    let minor = m.minor(&spec)?;
    println!("M|{}/{} has ground set {} and rank {}", spec.restrict_to(), spec.contract_by(), minor.ground(), minor.full_rank());
    Ok(())
}
