#![allow(dead_code)]

use merotopy::enumeration::enumerate_structures;
use merotopy::{Cover, GroundSet, MerotopicStructure, Subset};
use rand::Rng;

pub fn g(n: usize) -> GroundSet {
    GroundSet::new(n).unwrap()
}

pub fn cover(n: usize, blocks: &[&[usize]]) -> Cover {
    Cover::canonicalize(
        g(n),
        blocks
            .iter()
            .map(|b| g(n).subset(b.iter().copied()).unwrap()),
    )
    .unwrap()
}

pub fn generated(n: usize, blocks: &[&[usize]]) -> MerotopicStructure {
    MerotopicStructure::generate(g(n), &[cover(n, blocks)]).unwrap()
}

/// Every structure on 1, 2 and 3 points.
pub fn all_structures() -> Vec<MerotopicStructure> {
    (1..=3)
        .flat_map(|n| enumerate_structures(g(n)).unwrap())
        .collect()
}

/// A raw random family of subsets, patched with one extra block so that it
/// covers the ground set.
pub fn random_raw_cover<R: Rng>(rng: &mut R, ground: GroundSet) -> Vec<Subset> {
    let k = rng.gen_range(1..=4);
    let full = ground.full().bits();
    let mut raw: Vec<Subset> = (0..k)
        .map(|_| Subset::from_bits(rng.gen::<u32>() & full))
        .collect();
    let union = raw.iter().fold(Subset::EMPTY, |acc, s| acc.union(*s));
    let missing = ground.complement(union);
    if !missing.is_empty() {
        raw.push(missing);
    }
    raw
}

pub fn random_cover<R: Rng>(rng: &mut R, ground: GroundSet) -> Cover {
    Cover::canonicalize(ground, random_raw_cover(rng, ground)).unwrap()
}

pub fn random_structure<R: Rng>(rng: &mut R, ground: GroundSet) -> MerotopicStructure {
    let k = rng.gen_range(1..=3);
    let gens: Vec<Cover> = (0..k).map(|_| random_cover(rng, ground)).collect();
    MerotopicStructure::generate(ground, &gens).unwrap()
}

pub fn random_subset<R: Rng>(rng: &mut R, ground: GroundSet) -> Subset {
    Subset::from_bits(rng.gen::<u32>() & ground.full().bits())
}
