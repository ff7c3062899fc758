// Optional section of a random optional set: predictable part plus thin
// remainder, each given half of epsilon.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sectionkit::gen;
use sectionkit::rational::{format, from_ratio};
use sectionkit::section::{decompose_optional, optional_section, Strategy};

pub fn run_example() -> sectionkit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let x = gen::filtered_space(&mut rng, 8, 4, false);
    let o = gen::optional_set(&mut rng, &x);

    let parts = decompose_optional(&o, &x)?;
    println!("{} cells, {} in the predictable part, {} thin times", o.cells().count(), parts.predictable.cells().count(), parts.thin.len());

    let r = optional_section(&o, &x, &from_ratio(1, 4), Strategy::Souslin)?;
    let split = r.trace.split.as_ref().expect("optional sections record the split");
    println!("time {:?}", r.time.ticks());
    println!(
        "deficit {} (predictable {} of {}, thin residual {} of {}, {} of {} thin times used)",
        format(&r.deficit),
        format(&split.predictable_deficit),
        format(&split.predictable_budget),
        format(&split.thin_residual),
        format(&split.thin_budget),
        split.thin_used,
        split.thin_total
    );
    println!("stopping time: {}", x.is_stopping_time(&r.time));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
