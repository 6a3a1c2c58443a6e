//! Exhaustive universes over small ground sets and brute-force oracles.
//!
//! Everything here is exponential or worse in `n`; each entry point has a
//! hard size gate and fails with [`Error::GroundSetTooLarge`] instead of
//! starting work it cannot finish.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::covers::{Cover, GroundSet, Subset};
use crate::error::{Error, Result};
use crate::reflection::initial_structure;
use crate::structures::{minimal_antichain, MerotopicStructure, SetMap};

/// Largest ground set for which canonical covers are enumerated.
pub const MAX_COVER_ELEMENTS: usize = 5;
/// Largest ground set for the filter-everything cover enumerator.
pub const MAX_NAIVE_COVER_ELEMENTS: usize = 4;
/// Largest ground set for which all structures are enumerated.
pub const MAX_STRUCTURE_ELEMENTS: usize = 3;
/// Largest number of maps `enumerate_maps` will produce (`3^3`).
pub const MAP_BUDGET: u64 = 27;

fn gate(ground: GroundSet, max: usize) -> Result<()> {
    if ground.len() > max {
        Err(Error::GroundSetTooLarge {
            n: ground.len(),
            max,
        })
    } else {
        Ok(())
    }
}

/// Every canonical cover of a ground set together with the refinement
/// relation between them.
#[derive(Debug, Clone)]
pub struct CoverUniverse {
    ground: GroundSet,
    covers: Vec<Cover>,
    index: HashMap<Cover, usize>,
    // built on first use; quadratic in the universe size
    refinement: OnceLock<Vec<Vec<bool>>>,
}

impl CoverUniverse {
    fn new(ground: GroundSet, mut covers: Vec<Cover>) -> Self {
        covers.sort();
        let index = covers
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        Self {
            ground,
            covers,
            index,
            refinement: OnceLock::new(),
        }
    }

    /// The full ≺ relation. `A ≺ B` iff `A ∧ B = A`: computed through the
    /// meet rather than block containment, so it independently checks
    /// `Cover::refines`.
    pub fn refinement_matrix(&self) -> &[Vec<bool>] {
        self.refinement.get_or_init(|| {
            self.covers
                .iter()
                .map(|a| {
                    self.covers
                        .iter()
                        .map(|b| a.wedge_unchecked(b) == *a)
                        .collect()
                })
                .collect()
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Covers in output order.
    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn index_of(&self, cover: &Cover) -> Option<usize> {
        self.index.get(cover).copied()
    }

    /// `covers[i] ≺ covers[j]`.
    pub fn refines(&self, i: usize, j: usize) -> bool {
        self.refinement_matrix()[i][j]
    }

    /// The canonical members of `mu`, in output order.
    pub fn members(&self, mu: &MerotopicStructure) -> Result<Vec<Cover>> {
        self.ground.check_same(&mu.ground())?;
        Ok(self
            .covers
            .iter()
            .filter(|c| mu.contains_unchecked(c))
            .cloned()
            .collect())
    }
}

/// All canonical covers of `ground`.
///
/// Backtracks over the non-empty subsets in bitmask order, adding a subset
/// only when it is incomparable with every block chosen so far.
pub fn enumerate_canonical_covers(ground: GroundSet) -> Result<CoverUniverse> {
    gate(ground, MAX_COVER_ELEMENTS)?;
    let candidates: Vec<Subset> = ground.subsets().skip(1).collect();
    // suffix_union[i]: union of candidates[i..], for pruning branches that
    // can no longer reach the whole ground set.
    let mut suffix_union = vec![Subset::EMPTY; candidates.len() + 1];
    for i in (0..candidates.len()).rev() {
        suffix_union[i] = suffix_union[i + 1].union(candidates[i]);
    }

    fn walk(
        i: usize,
        candidates: &[Subset],
        suffix_union: &[Subset],
        full: Subset,
        chosen: &mut Vec<Subset>,
        covered: Subset,
        out: &mut Vec<Vec<Subset>>,
    ) {
        if covered.union(suffix_union[i]) != full {
            return;
        }
        if i == candidates.len() {
            out.push(chosen.clone());
            return;
        }
        let s = candidates[i];
        if chosen.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
            chosen.push(s);
            walk(
                i + 1,
                candidates,
                suffix_union,
                full,
                chosen,
                covered.union(s),
                out,
            );
            chosen.pop();
        }
        walk(i + 1, candidates, suffix_union, full, chosen, covered, out);
    }

    let mut families = Vec::new();
    walk(
        0,
        &candidates,
        &suffix_union,
        ground.full(),
        &mut Vec::new(),
        Subset::EMPTY,
        &mut families,
    );
    let covers = families
        .into_iter()
        .map(|blocks| Cover::absorb(ground, blocks))
        .collect();
    Ok(CoverUniverse::new(ground, covers))
}

/// Oracle for [`enumerate_canonical_covers`]: tests every family of
/// non-empty subsets for being a covering antichain.
pub fn naive_canonical_covers(ground: GroundSet) -> Result<Vec<Cover>> {
    gate(ground, MAX_NAIVE_COVER_ELEMENTS)?;
    let subsets: Vec<Subset> = ground.subsets().skip(1).collect();
    let mut out = Vec::new();
    for family in 1u64..(1u64 << subsets.len()) {
        let blocks: Vec<Subset> = (0..subsets.len())
            .filter(|i| family & (1 << i) != 0)
            .map(|i| subsets[i])
            .collect();
        let union = blocks.iter().fold(Subset::EMPTY, |acc, b| acc.union(*b));
        if union != ground.full() {
            continue;
        }
        let antichain = blocks.iter().enumerate().all(|(i, a)| {
            blocks
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset(*b))
        });
        if antichain {
            out.push(Cover::absorb(ground, blocks));
        }
    }
    out.sort();
    Ok(out)
}

/// All merotopic structures on `ground`, found as antichains of covers
/// whose pairwise wedges are again refined by a member of the antichain.
pub fn enumerate_structures(ground: GroundSet) -> Result<Vec<MerotopicStructure>> {
    gate(ground, MAX_STRUCTURE_ELEMENTS)?;
    let universe = enumerate_canonical_covers(ground)?;
    let n = universe.len();

    fn walk(
        i: usize,
        universe: &CoverUniverse,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == universe.len() {
            if !chosen.is_empty() {
                out.push(chosen.clone());
            }
            return;
        }
        if chosen
            .iter()
            .all(|&c| !universe.refines(c, i) && !universe.refines(i, c))
        {
            chosen.push(i);
            walk(i + 1, universe, chosen, out);
            chosen.pop();
        }
        walk(i + 1, universe, chosen, out);
    }

    let mut antichains = Vec::new();
    walk(0, &universe, &mut Vec::with_capacity(n), &mut antichains);

    let covers = universe.covers();
    let mut out: Vec<MerotopicStructure> = antichains
        .into_iter()
        .filter(|chain| {
            chain.iter().all(|&a| {
                chain.iter().all(|&b| {
                    let meet = covers[a].wedge_unchecked(&covers[b]);
                    chain.iter().any(|&c| covers[c].refines_unchecked(&meet))
                })
            })
        })
        .map(|chain| {
            MerotopicStructure::from_basis_unchecked(
                ground,
                chain.into_iter().map(|i| covers[i].clone()).collect(),
            )
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Oracle for [`enumerate_structures`]: tests every subfamily of the cover
/// universe for being non-empty, up-closed and wedge-closed.
pub fn enumerate_structures_by_filtering(ground: GroundSet) -> Result<Vec<MerotopicStructure>> {
    gate(ground, MAX_STRUCTURE_ELEMENTS)?;
    let universe = enumerate_canonical_covers(ground)?;
    let covers = universe.covers();
    let n = covers.len();
    let wedge_index: Vec<Vec<usize>> = covers
        .iter()
        .map(|a| {
            covers
                .iter()
                .map(|b| {
                    universe
                        .index_of(&a.wedge_unchecked(b))
                        .expect("wedge of canonical covers is in the universe")
                })
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for family in 1u64..(1u64 << n) {
        let member = |i: usize| family & (1 << i) != 0;
        let up_closed =
            (0..n).all(|i| !member(i) || (0..n).all(|j| !universe.refines(i, j) || member(j)));
        if !up_closed {
            continue;
        }
        let wedge_closed =
            (0..n).all(|i| !member(i) || (0..n).all(|j| !member(j) || member(wedge_index[i][j])));
        if !wedge_closed {
            continue;
        }
        let basis = minimal_antichain(
            (0..n)
                .filter(|&i| member(i))
                .map(|i| covers[i].clone())
                .collect(),
        );
        out.push(MerotopicStructure::from_basis_unchecked(ground, basis));
    }
    out.sort();
    Ok(out)
}

/// `{ ν : ν nearness, ν ⊆ μ }`, in output order.
pub fn enumerate_nearness_substructures(
    mu: &MerotopicStructure,
) -> Result<Vec<MerotopicStructure>> {
    Ok(enumerate_structures(mu.ground())?
        .into_iter()
        .filter(|nu| nu.is_nearness() && nu.is_subset_of_unchecked(mu))
        .collect())
}

/// All maps `domain → codomain`, lexicographic in the image of 0, then 1, ...
pub fn enumerate_maps(domain: GroundSet, codomain: GroundSet) -> Result<Vec<SetMap>> {
    let count = (codomain.len() as u64)
        .checked_pow(domain.len() as u32)
        .unwrap_or(u64::MAX);
    if count > MAP_BUDGET {
        return Err(Error::MapBudgetExceeded {
            count,
            budget: MAP_BUDGET,
        });
    }
    let (n, m) = (domain.len(), codomain.len());
    let mut out = Vec::with_capacity(count as usize);
    let mut images = vec![0usize; n];
    loop {
        out.push(SetMap::new(domain, codomain, images.clone())?);
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            images[pos] += 1;
            if images[pos] < m {
                break;
            }
            images[pos] = 0;
        }
    }
}

/// Membership by explicit closure: starting from the basis, adds every
/// universe cover refined by a member and every wedge of two members until
/// nothing changes, then looks the query up.
pub fn membership_oracle(basis: &[Cover], query: &Cover, universe: &CoverUniverse) -> Result<bool> {
    let ground = universe.ground();
    ground.check_same(&query.ground())?;
    let mut family: HashSet<usize> = HashSet::new();
    for b in basis {
        ground.check_same(&b.ground())?;
        let i = universe
            .index_of(b)
            .expect("canonical covers are in the universe");
        family.insert(i);
    }
    loop {
        let mut next = family.clone();
        for &i in &family {
            next.extend((0..universe.len()).filter(|&j| universe.refines(i, j)));
            for &j in &family {
                let meet = universe.covers()[i].wedge_unchecked(&universe.covers()[j]);
                next.insert(universe.index_of(&meet).expect("meet is canonical"));
            }
        }
        if next.len() == family.len() {
            break;
        }
        family = next;
    }
    Ok(universe
        .index_of(query)
        .is_some_and(|q| family.contains(&q)))
}

/// Nearness checked against its definition: every canonical member of `mu`,
/// not just the basis, must have a uniform interior image.
pub fn is_nearness_exhaustive(mu: &MerotopicStructure, universe: &CoverUniverse) -> Result<bool> {
    Ok(universe.members(mu)?.iter().all(|a| {
        let image: Vec<Subset> = a.blocks().iter().map(|b| mu.interior(*b)).collect();
        mu.contains_raw(&image)
    }))
}

/// A map into a merely merotopic space whose initial structure is not a
/// nearness structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub map: SetMap,
    pub codomain_structure: MerotopicStructure,
    pub initial: MerotopicStructure,
}

/// Searches codomain sizes `1..=3`, then non-nearness structures `ν` in
/// output order, then maps, for an `f` with `μ_f` not a nearness structure.
pub fn find_counterexample(ground: GroundSet) -> Result<Option<Counterexample>> {
    gate(ground, MAX_STRUCTURE_ELEMENTS)?;
    for m in 1..=MAX_STRUCTURE_ELEMENTS {
        let codomain = GroundSet::new(m)?;
        let maps = enumerate_maps(ground, codomain)?;
        for nu in enumerate_structures(codomain)? {
            if nu.is_nearness() {
                continue;
            }
            for f in &maps {
                let initial = initial_structure(f, &nu)?;
                if !initial.is_nearness() {
                    return Ok(Some(Counterexample {
                        map: f.clone(),
                        codomain_structure: nu,
                        initial,
                    }));
                }
            }
        }
    }
    Ok(None)
}
