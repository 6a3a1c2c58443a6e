//! Joins of nearness structures: the least structure containing both.
//!
//! cargo run -p merotopy --example join

use merotopy::enumeration::enumerate_structures;
use merotopy::reflection::join;
use merotopy::{Cover, GroundSet, MerotopicStructure};

fn main() -> merotopy::Result<()> {
    let x = GroundSet::new(3)?;
    let left = MerotopicStructure::generate(
        x,
        &[Cover::canonicalize(x, [x.subset([0, 1])?, x.subset([2])?])?],
    )?;
    let right = MerotopicStructure::generate(
        x,
        &[Cover::canonicalize(x, [x.subset([0])?, x.subset([1, 2])?])?],
    )?;
    let j = join(&left, &right)?;
    println!("{left} ∨ {right} = {j}");
    println!("nearness: {}", j.is_nearness());

    let upper_bounds: Vec<String> = enumerate_structures(x)?
        .into_iter()
        .filter(|m| left.is_subset_of(m).unwrap() && right.is_subset_of(m).unwrap())
        .map(|m| m.to_string())
        .collect();
    println!("structures containing both: {}", upper_bounds.join(", "));
    Ok(())
}
