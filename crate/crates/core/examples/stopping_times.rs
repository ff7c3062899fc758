// Stopping and predictable times on a two-step filtration, and the debut of
// an optional set.

use sectionkit::measure::{atom_set, SampleSpace, SigmaAlgebra};
use sectionkit::time::{debut, FilteredSpace, RandomTime, SetKind, Tick, TimeGrid};

pub fn run_example() -> sectionkit::Result<()> {
    let halves = SigmaAlgebra::from_blocks(4, vec![atom_set(4, [0, 1]), atom_set(4, [2, 3])])?;
    let x = FilteredSpace::new(
        SampleSpace::uniform(4)?,
        TimeGrid::integers(3)?,
        vec![SigmaAlgebra::trivial(4), halves, SigmaAlgebra::discrete(4)],
    )?;

    let tau = RandomTime::new(vec![Tick::At(1), Tick::At(1), Tick::At(2), Tick::Never], 3)?;
    println!("tau = {:?}", tau.ticks());
    println!("stopping {}, predictable {}", x.is_stopping_time(&tau), x.is_predictable_time(&tau));

    let later = tau.shift(1);
    println!("tau + 1 = {:?}, predictable {}", later.ticks(), x.is_predictable_time(&later));

    let mut o = x.empty_set();
    o.insert(0, 1);
    o.insert(1, 1);
    o.insert(2, 2);
    o.insert(3, 2);
    println!("O optional {}, predictable {}", x.is_set_of_kind(&o, SetKind::Optional), x.is_set_of_kind(&o, SetKind::Predictable));
    println!("debut(O) = {:?}", debut(&o).ticks());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
