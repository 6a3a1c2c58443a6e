//! Interiors, interior images and the nearness test.
//!
//! cargo run -p merotopy --example interior

use merotopy::{Cover, GroundSet, MerotopicStructure};

fn main() -> merotopy::Result<()> {
    let x = GroundSet::new(3)?;
    let pair = Cover::canonicalize(x, [x.subset([0, 1])?, x.subset([1, 2])?])?;
    let mu = MerotopicStructure::generate(x, std::slice::from_ref(&pair))?;

    println!("mu generated by [{pair}]");
    for a in x.subsets() {
        println!("  int({{{a}}}) = {{{}}}", mu.interior(a));
    }
    let image: Vec<String> = mu
        .interior_image(&pair)?
        .iter()
        .map(|s| format!("{{{s}}}"))
        .collect();
    println!("interior image of [{pair}]: {}", image.join(" "));
    println!("nearness: {}", mu.is_nearness());

    let partition = Cover::canonicalize(x, [x.subset([0, 1])?, x.subset([2])?])?;
    let nu = MerotopicStructure::generate(x, std::slice::from_ref(&partition))?;
    println!(
        "mu generated by the partition [{partition}] is nearness: {}",
        nu.is_nearness()
    );
    Ok(())
}
