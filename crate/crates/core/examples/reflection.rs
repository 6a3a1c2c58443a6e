//! The nearness reflection of every structure on three points, computed by
//! fixpoint descent and by joining all nearness substructures.
//!
//! cargo run -p merotopy --example reflection

use merotopy::enumeration::{enumerate_nearness_substructures, enumerate_structures};
use merotopy::reflection::{reflect_iterative_counted, reflect_maximal};
use merotopy::GroundSet;

fn main() -> merotopy::Result<()> {
    let x = GroundSet::new(3)?;
    println!(
        "{:<16} {:<10} {:<16} {:>6} {:>10}",
        "mu", "nearness", "reflection", "rounds", "candidates"
    );
    for mu in enumerate_structures(x)? {
        let (iterative, rounds) = reflect_iterative_counted(&mu)?;
        let maximal = reflect_maximal(&mu)?;
        assert_eq!(iterative, maximal);
        println!(
            "{:<16} {:<10} {:<16} {:>6} {:>10}",
            mu.to_string(),
            mu.is_nearness(),
            iterative.to_string(),
            rounds,
            enumerate_nearness_substructures(&mu)?.len()
        );
    }
    Ok(())
}
