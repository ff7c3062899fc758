// Outer and inner measure of a set that is not measurable.

use sectionkit::measure::{atom_set, inner_measure, outer_measure, SampleSpace, SigmaAlgebra};
use sectionkit::rational::{format, from_ratio};

pub fn run_example() -> sectionkit::Result<()> {
    let space = SampleSpace::new(
        vec!["w1".into(), "w2".into(), "w3".into()],
        vec![from_ratio(1, 2), from_ratio(1, 4), from_ratio(1, 4)],
    )?;
    let sigma = SigmaAlgebra::from_blocks(3, vec![atom_set(3, [0]), atom_set(3, [1, 2])])?;
    let a = atom_set(3, [0, 1]);

    println!("measurable: {}", sigma.is_measurable(&a));
    let cover = sigma.measurable_cover(&a);
    println!("cover = {:?}", cover.ones().map(|i| &space.atoms()[i]).collect::<Vec<_>>());
    println!("P*(A) = {}", format(&outer_measure(&a, &sigma, &space)));
    println!("P_*(A) = {}", format(&inner_measure(&a, &sigma, &space)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
