// Exact section of an arbitrary set: the selector is finite exactly on the
// projection.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sectionkit::gen;
use sectionkit::section::{measurable_section, projection, Strategy};
use sectionkit::time::TimeGrid;

pub fn run_example() -> sectionkit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let space = gen::space(&mut rng, 6, true);
    let grid = TimeGrid::integers(4)?;
    let s = gen::any_set(&mut rng, 6, 4);

    let r = measurable_section(&s, &space, &grid, Strategy::Souslin)?;
    println!("projection {:?}", projection(&s).ones().collect::<Vec<_>>());
    println!("selector   {:?}", r.time.ticks());
    println!("exact: {}", r.time.finite_set() == projection(&s));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
