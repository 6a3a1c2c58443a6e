//! Initial structures of maps, and why the codomain must be a nearness
//! space for the initial structure to be one.
//!
//! cargo run -p merotopy --example initial_structure

use merotopy::enumeration::find_counterexample;
use merotopy::reflection::initial_structure;
use merotopy::structures::uniformly_continuous;
use merotopy::{GroundSet, MerotopicStructure, SetMap};

fn main() -> merotopy::Result<()> {
    let x = GroundSet::new(3)?;
    let y = GroundSet::new(2)?;
    let f = SetMap::new(x, y, vec![0, 1, 1])?;
    let nu = MerotopicStructure::discrete(y);
    let mu_f = initial_structure(&f, &nu)?;
    println!("f = {f}, nu = {nu}");
    println!("initial structure {mu_f}, nearness: {}", mu_f.is_nearness());
    println!(
        "f continuous out of it: {}",
        uniformly_continuous(&f, &mu_f, &nu)?
    );

    for n in 1..=3 {
        match find_counterexample(GroundSet::new(n)?)? {
            None => println!("n={n}: every initial structure into a merotopic space is nearness"),
            Some(found) => println!(
                "n={n}: f = {} into non-nearness {} gives non-nearness {}",
                found.map, found.codomain_structure, found.initial
            ),
        }
    }
    Ok(())
}
