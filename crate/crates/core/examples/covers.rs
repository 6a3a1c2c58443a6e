//! Canonical covers, refinement and the wedge on a three-point set.
//!
//! cargo run -p merotopy --example covers

use merotopy::covers::preimage_cover;
use merotopy::enumeration::enumerate_canonical_covers;
use merotopy::{Cover, GroundSet, SetMap};

fn main() -> merotopy::Result<()> {
    let x = GroundSet::new(3)?;

    // nested and empty blocks are absorbed
    let raw = [
        x.subset([0])?,
        x.subset([0, 1])?,
        x.subset([])?,
        x.subset([1, 2])?,
    ];
    let a = Cover::canonicalize(x, raw)?;
    println!("canonical form of {{0}},{{0,1}},∅,{{1,2}}: [{a}]");

    let b = Cover::canonicalize(x, [x.subset([0])?, x.subset([1, 2])?])?;
    println!("[{b}] ≺ [{a}]: {}", b.refines(&a)?);
    println!("[{a}] ≺ [{b}]: {}", a.refines(&b)?);

    let c = Cover::canonicalize(x, [x.subset([0, 1])?, x.subset([2])?])?;
    println!("[{c}] ∧ [{b}] = [{}]", c.wedge(&b)?);

    let squash = SetMap::new(x, GroundSet::new(2)?, vec![0, 1, 1])?;
    let halves = Cover::singletons(GroundSet::new(2)?);
    println!(
        "preimage of [{halves}] under {squash}: [{}]",
        preimage_cover(&squash, &halves)?
    );

    println!();
    for n in 1..=5 {
        let universe = enumerate_canonical_covers(GroundSet::new(n)?)?;
        println!("n={n}: {} canonical covers", universe.len());
    }
    Ok(())
}
