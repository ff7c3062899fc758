// Splits a stopping time into accessible and totally inaccessible parts.

use sectionkit::measure::{atom_set, SampleSpace, SigmaAlgebra};
use sectionkit::rational::format;
use sectionkit::time::{FilteredSpace, RandomTime, Tick, TimeGrid};

pub fn run_example() -> sectionkit::Result<()> {
    let halves = SigmaAlgebra::from_blocks(4, vec![atom_set(4, [0, 1]), atom_set(4, [2, 3])])?;
    let x = FilteredSpace::new(
        SampleSpace::uniform(4)?,
        TimeGrid::integers(3)?,
        vec![SigmaAlgebra::trivial(4), halves, SigmaAlgebra::discrete(4)],
    )?;
    let tau = RandomTime::new(vec![Tick::At(2), Tick::Never, Tick::At(1), Tick::At(1)], 3)?;

    let c = x.classify_time(&tau)?;
    for rho in &c.accessible_cover {
        println!("cover {:?}  predictable {}", rho.ticks(), x.is_predictable_time(rho));
    }
    println!("accessible part {:?}", c.accessible.ticks());
    println!("P(inaccessible < ∞) = {}", format(&c.inaccessible_mass));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
