// Builds two Souslin schemes over a three-point ground set, merges them and
// makes one monotone.

use std::sync::Arc;

use sectionkit::souslin::{merge_intersection, merge_union, monotonize, theta, Paving, SchemeIndex, SouslinScheme};
use sectionkit::measure::atom_set;

pub fn run_example() -> sectionkit::Result<()> {
    let ground: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let paving = Arc::new(Paving::power_set(ground)?);
    let node = |index: &str, members: &[usize]| -> (SchemeIndex, _) {
        (index.parse().unwrap(), atom_set(3, members.iter().copied()))
    };

    let a = SouslinScheme::from_nodes(
        paving.clone(),
        2,
        2,
        [node("1", &[0, 1]), node("2", &[2]), node("1.1", &[0]), node("1.2", &[1]), node("2.2", &[])],
    )?;
    let b = SouslinScheme::from_nodes(paving.clone(), 1, 2, [node("1", &[1]), node("2", &[2])])?;

    println!("A = {:?}", paving.format_set(&a.eval()));
    println!("B = {:?}", paving.format_set(&b.eval()));

    let union = merge_union(&[a.clone(), b.clone()])?;
    let meet = merge_intersection(&[a.clone(), b])?;
    println!("A ∪ B = {:?}  (branching {})", paving.format_set(&union.eval()), union.branching());
    println!("A ∩ B = {:?}  (depth {})", paving.format_set(&meet.eval()), meet.depth());

    let mono = monotonize(&a)?;
    let m = mono.check_monotone();
    println!("monotone A = {:?}, vertical {} horizontal {}", paving.format_set(&mono.eval()), m.vertical, m.horizontal);

    println!("theta(2, 3) = {}", theta(2, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
