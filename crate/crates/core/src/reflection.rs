//! Joins, initial structures, and the nearness reflection.
//!
//! The reflection `μ̃` of a merotopic structure `μ` is the largest nearness
//! structure contained in `μ`. Two independent routes compute it:
//!
//! - [`reflect_iterative`] starts from the explicit family of members of `μ`
//!   and repeatedly drops every cover whose interior image (taken in the
//!   current family) is not itself in the family. Each round is again a
//!   merotopic structure and contains every nearness structure inside `μ`,
//!   so the fixpoint is `μ̃`.
//! - [`reflect_maximal`] enumerates every nearness structure inside `μ` and
//!   joins them. The join of two nearness structures is a nearness
//!   structure, so the join of all of them is the unique maximum.

use std::collections::HashSet;
use std::fmt;

use crate::covers::{is_cover, preimage_cover, Cover, GroundSet, Subset};
use crate::enumeration::{
    enumerate_canonical_covers, enumerate_maps, enumerate_nearness_substructures,
    enumerate_structures, MAX_COVER_ELEMENTS, MAX_STRUCTURE_ELEMENTS,
};
use crate::error::{Error, Result};
use crate::structures::{minimal_antichain, uniformly_continuous, MerotopicStructure, SetMap};

/// Least merotopic structure containing both inputs; a nearness structure
/// whenever both inputs are.
pub fn join(mu1: &MerotopicStructure, mu2: &MerotopicStructure) -> Result<MerotopicStructure> {
    mu1.ground().check_same(&mu2.ground())?;
    let wedges = mu1
        .basis()
        .iter()
        .flat_map(|a| mu2.basis().iter().map(move |b| a.wedge_unchecked(b)))
        .collect();
    Ok(MerotopicStructure::from_basis_unchecked(
        mu1.ground(),
        minimal_antichain(wedges),
    ))
}

/// `μ_f`: the coarsest structure on the domain of `f` making `f` uniformly
/// continuous into `(Y, ν)`.
pub fn initial_structure(f: &SetMap, nu: &MerotopicStructure) -> Result<MerotopicStructure> {
    f.codomain().check_same(&nu.ground())?;
    let preimages = nu
        .basis()
        .iter()
        .map(|b| preimage_cover(f, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(MerotopicStructure::from_basis_unchecked(
        f.domain(),
        minimal_antichain(preimages),
    ))
}

/// One descent over an explicit family of canonical covers. Returns the
/// surviving family in input order and the number of rounds run, counting
/// the final round that removes nothing.
pub(crate) fn descend(ground: GroundSet, members: Vec<Cover>) -> (Vec<Cover>, usize) {
    let mut family = members;
    let mut rounds = 0;
    loop {
        rounds += 1;
        let lookup: HashSet<&Cover> = family.iter().collect();
        let in_family = |raw: Vec<Subset>| -> bool {
            is_cover(&raw, ground) && lookup.contains(&Cover::absorb(ground, raw))
        };
        // interior of every subset with respect to the current family
        let interiors: Vec<Subset> = ground
            .subsets()
            .map(|a| {
                a.iter()
                    .filter(|&x| in_family(vec![a, ground.without(x)]))
                    .fold(Subset::EMPTY, |acc, x| acc.union(Subset::singleton(x)))
            })
            .collect();
        let next: Vec<Cover> = family
            .iter()
            .filter(|c| {
                let image = c
                    .blocks()
                    .iter()
                    .map(|b| interiors[b.bits() as usize])
                    .collect();
                in_family(image)
            })
            .cloned()
            .collect();
        if next.len() == family.len() {
            return (family, rounds);
        }
        family = next;
    }
}

/// Structure whose members are exactly `family`, a wedge-closed up-set.
/// Its least member is the wedge of everything in it.
fn basis_of_family(ground: GroundSet, family: Vec<Cover>) -> MerotopicStructure {
    let meet = family
        .iter()
        .skip(1)
        .fold(family[0].clone(), |acc, c| acc.wedge_unchecked(c));
    if family.contains(&meet) {
        MerotopicStructure::from_basis_unchecked(ground, vec![meet])
    } else {
        MerotopicStructure::from_basis_unchecked(ground, minimal_antichain(family))
    }
}

/// Reflection by fixpoint descent, with the number of rounds taken.
pub fn reflect_iterative_counted(mu: &MerotopicStructure) -> Result<(MerotopicStructure, usize)> {
    let ground = mu.ground();
    if ground.len() > MAX_COVER_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n: ground.len(),
            max: MAX_COVER_ELEMENTS,
        });
    }
    let universe = enumerate_canonical_covers(ground)?;
    let (survivors, rounds) = descend(ground, universe.members(mu)?);
    Ok((basis_of_family(ground, survivors), rounds))
}

/// Reflection by fixpoint descent over the explicit members of `mu`.
pub fn reflect_iterative(mu: &MerotopicStructure) -> Result<MerotopicStructure> {
    reflect_iterative_counted(mu).map(|(r, _)| r)
}

/// Reflection as the join of every nearness structure contained in `mu`.
///
/// Fails with [`Error::NotMaximal`] if the join is not itself a nearness
/// structure inside `mu` or is strictly contained in one.
pub fn reflect_maximal(mu: &MerotopicStructure) -> Result<MerotopicStructure> {
    let ground = mu.ground();
    if ground.len() > MAX_STRUCTURE_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n: ground.len(),
            max: MAX_STRUCTURE_ELEMENTS,
        });
    }
    let candidates = enumerate_nearness_substructures(mu)?;
    let mut top = MerotopicStructure::indiscrete(ground);
    for nu in &candidates {
        top = join(&top, nu)?;
    }
    if !top.is_nearness() || !top.is_subset_of_unchecked(mu) {
        return Err(Error::NotMaximal(format!(
            "join {top} left the candidate set"
        )));
    }
    if let Some(bigger) = candidates
        .iter()
        .find(|nu| **nu != top && top.is_subset_of_unchecked(nu))
    {
        return Err(Error::NotMaximal(format!(
            "{bigger} strictly contains {top}"
        )));
    }
    Ok(top)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Iterative,
    Maximal,
    /// Runs both and fails if they differ.
    Both,
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "iterative" => Ok(Algorithm::Iterative),
            "maximal" => Ok(Algorithm::Maximal),
            "both" => Ok(Algorithm::Both),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

pub fn reflect(mu: &MerotopicStructure, algorithm: Algorithm) -> Result<MerotopicStructure> {
    match algorithm {
        Algorithm::Iterative => reflect_iterative(mu),
        Algorithm::Maximal => reflect_maximal(mu),
        Algorithm::Both => {
            let iterative = reflect_iterative(mu)?;
            let maximal = reflect_maximal(mu)?;
            if iterative == maximal {
                Ok(iterative)
            } else {
                Err(Error::AlgorithmDisagreement {
                    iterative: Box::new(iterative),
                    maximal: Box::new(maximal),
                })
            }
        }
    }
}

/// Outcome of one clause of the universal property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Number of instances examined.
    pub cases: usize,
    /// First failing instance, if any.
    pub witness: Option<String>,
}

impl ClauseCheck {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: true,
            cases: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.witness = Some(witness());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionReport {
    pub input: MerotopicStructure,
    pub reflection: MerotopicStructure,
    pub iterations: usize,
    pub checks: Vec<ClauseCheck>,
}

impl ReflectionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for ReflectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input      {}", self.input)?;
        writeln!(
            f,
            "reflection {} ({} rounds)",
            self.reflection, self.iterations
        )?;
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            write!(f, "  {verdict} {:<36} {:>6} cases", c.name, c.cases)?;
            if let Some(w) = &c.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Largest codomain size `verify_bireflection` sweeps.
pub const MAX_VERIFY_BOUND: usize = 3;

/// Computes `μ̃` with both algorithms and checks that the identity carrier
/// `(X, μ) → (X, μ̃)` is the universal arrow into nearness spaces: for every
/// nearness `(Y, ν)` with `|Y| ≤ bound` and every `f: X → Y` uniformly
/// continuous out of `μ`, both `μ_f ⊆ μ̃` and a direct check show `f`
/// uniformly continuous out of `μ̃`.
pub fn verify_bireflection(mu: &MerotopicStructure, bound: usize) -> Result<ReflectionReport> {
    let ground = mu.ground();
    if ground.len() > MAX_STRUCTURE_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n: ground.len(),
            max: MAX_STRUCTURE_ELEMENTS,
        });
    }
    if bound > MAX_VERIFY_BOUND {
        return Err(Error::GroundSetTooLarge {
            n: bound,
            max: MAX_VERIFY_BOUND,
        });
    }
    let (reflection, iterations) = reflect_iterative_counted(mu)?;
    let maximal = reflect_maximal(mu)?;
    let mut agree = ClauseCheck::new("algorithms agree");
    agree.record(reflection == maximal, || format!("maximal gave {maximal}"));

    let mut contained = ClauseCheck::new("identity carrier continuous");
    contained.record(
        uniformly_continuous(&SetMap::identity(ground), mu, &reflection)?,
        || format!("{reflection} is not contained in {mu}"),
    );

    let mut nearness = ClauseCheck::new("reflection is nearness");
    nearness.record(reflection.is_nearness(), || reflection.to_string());

    let mut initial_in_input = ClauseCheck::new("initial structure inside input");
    let mut initial_in_reflection = ClauseCheck::new("initial structure inside reflection");
    let mut direct = ClauseCheck::new("continuous out of reflection");
    let mut routes = ClauseCheck::new("routes agree");

    for m in 1..=bound {
        let codomain = GroundSet::new(m)?;
        let maps = enumerate_maps(ground, codomain)?;
        for nu in enumerate_structures(codomain)?
            .into_iter()
            .filter(|nu| nu.is_nearness())
        {
            for f in &maps {
                if !uniformly_continuous(f, mu, &nu)? {
                    continue;
                }
                let witness = || format!("Y={m} nu={nu} f={f}");
                let initial = initial_structure(f, &nu)?;
                let inside_input = initial.is_subset_of_unchecked(mu);
                let inside_reflection = initial.is_subset_of_unchecked(&reflection);
                let continuous = uniformly_continuous(f, &reflection, &nu)?;
                initial_in_input.record(inside_input, witness);
                initial_in_reflection.record(inside_reflection, witness);
                direct.record(continuous, witness);
                routes.record(inside_reflection == continuous, witness);
            }
        }
    }

    Ok(ReflectionReport {
        input: mu.clone(),
        reflection,
        iterations,
        checks: vec![
            agree,
            contained,
            nearness,
            initial_in_input,
            initial_in_reflection,
            direct,
            routes,
        ],
    })
}
