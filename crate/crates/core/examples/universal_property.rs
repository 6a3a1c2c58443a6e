//! Verifies that the reflection is universal: every uniformly continuous
//! map out of mu into a small nearness space stays uniformly continuous out
//! of the reflection.
//!
//! cargo run -p merotopy --example universal_property

use merotopy::reflection::verify_bireflection;
use merotopy::{Cover, GroundSet, MerotopicStructure};

fn main() -> merotopy::Result<()> {
    let x = GroundSet::new(3)?;
    let mu = MerotopicStructure::generate(
        x,
        &[Cover::canonicalize(
            x,
            [x.subset([0, 1])?, x.subset([1, 2])?],
        )?],
    )?;
    let report = verify_bireflection(&mu, 3)?;
    print!("{report}");
    println!("all clauses pass: {}", report.passed());
    Ok(())
}
