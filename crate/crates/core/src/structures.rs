//! Merotopic structures, the interior operator, nearness, and uniformly
//! continuous maps.
//!
//! A merotopic structure is an up-closed, wedge-closed family of coverings,
//! which on canonical covers is exactly a filter of the refinement
//! meet-semilattice. It is stored as the antichain of its ≺-minimal members;
//! membership of `𝒜` means some basis cover refines `𝒜`.
//!
//! On a finite ground set every such filter is principal (the wedge of all
//! members is a member and refines each of them), so the basis of any
//! structure built here has exactly one cover. The code keeps the general
//! antichain form anyway and the property is checked by tests.

use std::fmt;

use crate::covers::{is_cover, preimage_cover, Cover, GroundSet, Subset};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MerotopicStructure {
    ground: GroundSet,
    basis: Vec<Cover>,
}

/// The ≺-minimal members of `candidates`, deduplicated and sorted.
pub(crate) fn minimal_antichain(mut candidates: Vec<Cover>) -> Vec<Cover> {
    candidates.sort();
    candidates.dedup();
    let minimal: Vec<Cover> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d != *c && d.refines_unchecked(c)))
        .cloned()
        .collect();
    minimal
}

impl MerotopicStructure {
    /// The smallest merotopic structure containing every generator.
    pub fn generate(ground: GroundSet, gens: &[Cover]) -> Result<Self> {
        let (first, rest) = gens.split_first().ok_or(Error::EmptyGenerators)?;
        ground.check_same(&first.ground())?;
        let mut meet = first.clone();
        for g in rest {
            ground.check_same(&g.ground())?;
            meet = meet.wedge_unchecked(g);
        }
        Ok(Self {
            ground,
            basis: vec![meet],
        })
    }

    /// Builds a structure from covers already known to be a wedge-closed
    /// antichain of minimal members.
    pub(crate) fn from_basis_unchecked(ground: GroundSet, basis: Vec<Cover>) -> Self {
        let basis = minimal_antichain(basis);
        debug_assert!(!basis.is_empty());
        Self { ground, basis }
    }

    /// The smallest structure: every covering that has `X` as a block.
    pub fn indiscrete(ground: GroundSet) -> Self {
        Self {
            ground,
            basis: vec![Cover::whole(ground)],
        }
    }

    /// The largest structure, all of `c(X)`.
    pub fn discrete(ground: GroundSet) -> Self {
        Self {
            ground,
            basis: vec![Cover::singletons(ground)],
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn basis(&self) -> &[Cover] {
        &self.basis
    }

    pub fn contains(&self, cover: &Cover) -> Result<bool> {
        self.ground.check_same(&cover.ground())?;
        Ok(self.contains_unchecked(cover))
    }

    pub(crate) fn contains_unchecked(&self, cover: &Cover) -> bool {
        self.basis.iter().any(|b| b.refines_unchecked(cover))
    }

    /// Whether a raw family is a covering whose canonical form is uniform.
    pub(crate) fn contains_raw(&self, raw: &[Subset]) -> bool {
        is_cover(raw, self.ground)
            && self.contains_unchecked(&Cover::absorb(self.ground, raw.to_vec()))
    }

    /// `int_μ(A) = { x : {A, X∖{x}} ∈ μ }`.
    ///
    /// When `x ∉ A` the pair does not cover `X` and `x` is not interior.
    pub fn interior(&self, a: Subset) -> Subset {
        let mut interior = Subset::EMPTY;
        for x in a.iter() {
            if x >= self.ground.len() {
                continue;
            }
            if self.contains_raw(&[a, self.ground.without(x)]) {
                interior = interior.union(Subset::singleton(x));
            }
        }
        interior
    }

    /// Interiors of all blocks, in block order. Not canonicalized.
    pub fn interior_image(&self, cover: &Cover) -> Result<Vec<Subset>> {
        self.ground.check_same(&cover.ground())?;
        Ok(cover.blocks().iter().map(|b| self.interior(*b)).collect())
    }

    /// Whether the interior image of every uniform covering is uniform.
    ///
    /// Only basis covers are inspected: interiors are monotone, so the
    /// interior image of a basis cover refines that of anything it refines.
    pub fn is_nearness(&self) -> bool {
        self.basis.iter().all(|b| {
            let image: Vec<Subset> = b.blocks().iter().map(|a| self.interior(*a)).collect();
            self.contains_raw(&image)
        })
    }

    /// `self ⊆ other` as families of coverings.
    pub fn is_subset_of(&self, other: &MerotopicStructure) -> Result<bool> {
        self.ground.check_same(&other.ground)?;
        Ok(self.is_subset_of_unchecked(other))
    }

    pub(crate) fn is_subset_of_unchecked(&self, other: &MerotopicStructure) -> bool {
        self.basis.iter().all(|b| other.contains_unchecked(b))
    }
}

impl fmt::Display for MerotopicStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "[{b}]")?;
        }
        Ok(())
    }
}

impl PartialOrd for MerotopicStructure {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on structures by ground set then basis, used only to make
/// enumeration output deterministic. Not the inclusion order.
impl Ord for MerotopicStructure {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ground
            .cmp(&other.ground)
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

/// A total function between two finite ground sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetMap {
    domain: GroundSet,
    codomain: GroundSet,
    images: Vec<usize>,
}

impl SetMap {
    pub fn new(domain: GroundSet, codomain: GroundSet, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain.len() {
            return Err(Error::InvalidMap(format!(
                "{} images given for a domain of {} elements",
                images.len(),
                domain.len()
            )));
        }
        if let Some((x, y)) = images
            .iter()
            .enumerate()
            .find(|(_, y)| **y >= codomain.len())
        {
            return Err(Error::InvalidMap(format!(
                "{x} maps to {y}, outside a codomain of {} elements",
                codomain.len()
            )));
        }
        Ok(Self {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(ground: GroundSet) -> Self {
        Self {
            domain: ground,
            codomain: ground,
            images: (0..ground.len()).collect(),
        }
    }

    pub fn domain(&self) -> GroundSet {
        self.domain
    }

    pub fn codomain(&self) -> GroundSet {
        self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.images.iter().enumerate().all(|(x, y)| x == *y)
    }

    pub fn preimage(&self, target: Subset) -> Subset {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, y)| target.contains(**y))
            .fold(Subset::EMPTY, |acc, (x, _)| acc.union(Subset::singleton(x)))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SetMap) -> Result<SetMap> {
        self.codomain.check_same(&next.domain)?;
        Ok(SetMap {
            domain: self.domain,
            codomain: next.codomain,
            images: self.images.iter().map(|y| next.images[*y]).collect(),
        })
    }
}

impl fmt::Display for SetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, y) in self.images.iter().enumerate() {
            if x > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}->{y}")?;
        }
        Ok(())
    }
}

/// `f⁻¹[𝒜] ∈ μ` for every `𝒜 ∈ ν`; checking the basis of `ν` suffices
/// since preimages preserve refinement.
pub fn uniformly_continuous(
    f: &SetMap,
    mu: &MerotopicStructure,
    nu: &MerotopicStructure,
) -> Result<bool> {
    mu.ground.check_same(&f.domain)?;
    nu.ground.check_same(&f.codomain)?;
    for b in &nu.basis {
        if !mu.contains_unchecked(&preimage_cover(f, b)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn s(elems: &[usize]) -> Subset {
        Subset::from_bits(elems.iter().fold(0, |acc, x| acc | (1 << x)))
    }

    fn cover(n: usize, blocks: &[&[usize]]) -> Cover {
        Cover::canonicalize(g(n), blocks.iter().map(|b| s(b))).unwrap()
    }

    fn chain3() -> MerotopicStructure {
        MerotopicStructure::generate(g(3), &[cover(3, &[&[0, 1], &[1, 2]])]).unwrap()
    }

    #[test]
    fn generate_examples() {
        let mu = MerotopicStructure::generate(
            g(3),
            &[cover(3, &[&[0, 1], &[2]]), cover(3, &[&[0], &[1, 2]])],
        )
        .unwrap();
        assert_eq!(mu.basis(), &[Cover::singletons(g(3))]);
        assert_eq!(
            MerotopicStructure::generate(g(3), &[Cover::whole(g(3))]).unwrap(),
            MerotopicStructure::indiscrete(g(3))
        );
        assert_eq!(chain3().basis(), &[cover(3, &[&[0, 1], &[1, 2]])]);
        assert_eq!(
            MerotopicStructure::generate(g(3), &[]),
            Err(Error::EmptyGenerators)
        );
        assert!(MerotopicStructure::generate(g(3), &[Cover::whole(g(2))]).is_err());
    }

    #[test]
    fn contains_examples() {
        let indiscrete = MerotopicStructure::indiscrete(g(3));
        assert!(!indiscrete.contains(&cover(3, &[&[0, 1], &[1, 2]])).unwrap());
        assert!(chain3()
            .contains(&cover(3, &[&[0, 1], &[0, 2], &[1, 2]]))
            .unwrap());
        assert!(chain3().contains(&Cover::whole(g(3))).unwrap());
        assert!(chain3().contains(&Cover::whole(g(2))).is_err());
    }

    #[test]
    fn indiscrete_and_discrete() {
        assert_eq!(
            MerotopicStructure::indiscrete(g(1)).basis(),
            &[cover(1, &[&[0]])]
        );
        assert_eq!(
            MerotopicStructure::discrete(g(2)).basis(),
            &[cover(2, &[&[0], &[1]])]
        );
        assert!(MerotopicStructure::indiscrete(g(3))
            .contains(&cover(3, &[&[0, 1, 2], &[0]]))
            .unwrap());
        assert!(MerotopicStructure::discrete(g(3)).is_nearness());
        assert!(MerotopicStructure::indiscrete(g(3)).is_nearness());
    }

    #[test]
    fn interior_examples() {
        assert_eq!(chain3().interior(s(&[0, 1])), s(&[0]));
        assert_eq!(chain3().interior(s(&[1, 2])), s(&[2]));
        assert_eq!(chain3().interior(g(3).full()), g(3).full());
        assert_eq!(chain3().interior(Subset::EMPTY), Subset::EMPTY);
        assert_eq!(
            MerotopicStructure::discrete(g(3)).interior(s(&[0])),
            s(&[0])
        );
        assert_eq!(
            MerotopicStructure::indiscrete(g(3)).interior(s(&[0, 1])),
            Subset::EMPTY
        );
    }

    #[test]
    fn interior_image_examples() {
        let basis = cover(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(
            chain3().interior_image(&basis).unwrap(),
            vec![s(&[0]), s(&[2])]
        );
        let a = cover(3, &[&[0], &[1, 2]]);
        assert_eq!(
            MerotopicStructure::discrete(g(3))
                .interior_image(&a)
                .unwrap(),
            a.blocks().to_vec()
        );
        assert_eq!(
            MerotopicStructure::indiscrete(g(3))
                .interior_image(&Cover::whole(g(3)))
                .unwrap(),
            vec![g(3).full()]
        );
    }

    #[test]
    fn nearness_examples() {
        assert!(!chain3().is_nearness());
        let partition = MerotopicStructure::generate(g(3), &[cover(3, &[&[0, 1], &[2]])]).unwrap();
        assert!(partition.is_nearness());
    }

    #[test]
    fn subset_examples() {
        let indiscrete = MerotopicStructure::indiscrete(g(3));
        let discrete = MerotopicStructure::discrete(g(3));
        assert!(indiscrete.is_subset_of(&chain3()).unwrap());
        assert!(chain3().is_subset_of(&discrete).unwrap());
        assert!(!chain3().is_subset_of(&indiscrete).unwrap());
        assert!(chain3()
            .is_subset_of(&MerotopicStructure::discrete(g(2)))
            .is_err());
    }

    #[test]
    fn uniform_continuity_examples() {
        let id = SetMap::identity(g(3));
        assert!(uniformly_continuous(&id, &chain3(), &chain3()).unwrap());
        assert!(
            !uniformly_continuous(&id, &chain3(), &MerotopicStructure::discrete(g(3))).unwrap()
        );
        let constant = SetMap::new(g(3), g(2), vec![0, 0, 0]).unwrap();
        assert!(uniformly_continuous(
            &constant,
            &MerotopicStructure::indiscrete(g(3)),
            &MerotopicStructure::discrete(g(2))
        )
        .unwrap());
        assert!(uniformly_continuous(&constant, &chain3(), &chain3()).is_err());
    }

    #[test]
    fn set_map_validation() {
        assert!(matches!(
            SetMap::new(g(2), g(2), vec![0]),
            Err(Error::InvalidMap(_))
        ));
        assert!(matches!(
            SetMap::new(g(2), g(2), vec![0, 2]),
            Err(Error::InvalidMap(_))
        ));
        let f = SetMap::new(g(3), g(2), vec![0, 1, 1]).unwrap();
        assert_eq!(f.preimage(s(&[1])), s(&[1, 2]));
        assert_eq!(f.to_string(), "0->0,1->1,2->1");
        let h = SetMap::new(g(2), g(1), vec![0, 0]).unwrap();
        assert_eq!(f.then(&h).unwrap().images(), &[0, 0, 0]);
        assert!(h.then(&f).is_err());
    }
}
