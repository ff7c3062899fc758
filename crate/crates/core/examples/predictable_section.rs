// Sections a predictable set with both strategies and shows how the scheme
// strategy spends its epsilon.

use sectionkit::measure::{atom_set, SampleSpace, SigmaAlgebra};
use sectionkit::rational::{format, from_ratio};
use sectionkit::section::{predictable_section, Strategy};
use sectionkit::time::{FilteredSpace, TimeGrid};

pub fn run_example() -> sectionkit::Result<()> {
    let halves = SigmaAlgebra::from_blocks(4, vec![atom_set(4, [0, 1]), atom_set(4, [2, 3])])?;
    let x = FilteredSpace::new(
        SampleSpace::uniform(4)?,
        TimeGrid::integers(3)?,
        vec![SigmaAlgebra::trivial(4), halves, SigmaAlgebra::discrete(4)],
    )?;
    let mut p = x.empty_set();
    p.set_slice(2, &atom_set(4, 0..4));

    for (strategy, eps) in [
        (Strategy::Debut, from_ratio(0, 1)),
        (Strategy::Souslin, from_ratio(0, 1)),
        (Strategy::Souslin, from_ratio(1, 2)),
    ] {
        let r = predictable_section(&p, &x, &eps, strategy)?;
        println!(
            "{:<7} eps {:<4} time {:?} deficit {} m* {:?}",
            strategy.name(),
            format(&eps),
            r.time.ticks(),
            format(&r.deficit),
            r.trace.chosen_prefix
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
