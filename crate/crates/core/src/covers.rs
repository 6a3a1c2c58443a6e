//! Ground sets, subsets, canonical coverings, refinement and the wedge.
//!
//! A covering is kept only in canonical form: no empty block and no block
//! contained in another. Two coverings that refine each other have the same
//! canonical form, and membership in a merotopic structure only depends on
//! that equivalence class, so nothing is lost.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::structures::SetMap;

/// Largest supported ground set; subsets are `u32` bitmasks.
pub const MAX_ELEMENTS: usize = 32;

/// A finite set `{0, .., n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::InvalidGroundSet(n));
        }
        Ok(Self { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn full(&self) -> Subset {
        if self.n == MAX_ELEMENTS {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << self.n) - 1)
        }
    }

    /// Builds a subset, rejecting indices outside the ground set.
    pub fn subset<I: IntoIterator<Item = usize>>(&self, elements: I) -> Result<Subset> {
        let mut bits = 0u32;
        for element in elements {
            if element >= self.n {
                return Err(Error::ElementOutOfRange { element, n: self.n });
            }
            bits |= 1 << element;
        }
        Ok(Subset(bits))
    }

    pub fn owns(&self, subset: Subset) -> bool {
        subset.0 & !self.full().0 == 0
    }

    /// `X \ A`.
    pub fn complement(&self, subset: Subset) -> Subset {
        Subset(self.full().0 & !subset.0)
    }

    /// `X \ {x}`.
    pub fn without(&self, x: usize) -> Subset {
        self.complement(Subset::singleton(x))
    }

    /// All `2^n` subsets in increasing bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        let count = 1u64 << self.n;
        (0..count).map(|bits| Subset(bits as u32))
    }

    pub(crate) fn check_same(&self, other: &GroundSet) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }
}

/// A subset of a ground set, stored as a bitmask over element indices.
///
/// Subsets are ordered by size first and then lexicographically by their
/// ascending element lists; this is the block order used for output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn singleton(x: usize) -> Self {
        Subset(1 << x)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_ELEMENTS && self.0 & (1 << x) != 0
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(x)
            }
        })
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// True iff `raw` is non-empty and its union is the whole ground set.
pub fn is_cover(raw: &[Subset], ground: GroundSet) -> bool {
    !raw.is_empty() && raw.iter().fold(Subset::EMPTY, |acc, s| acc.union(*s)) == ground.full()
}

/// A canonical covering: a non-empty antichain of non-empty blocks whose
/// union is the ground set, blocks kept in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cover {
    ground: GroundSet,
    blocks: Vec<Subset>,
}

impl Cover {
    /// Canonical form of a raw covering: drops empty blocks and every block
    /// contained in a distinct block.
    pub fn canonicalize<I: IntoIterator<Item = Subset>>(
        ground: GroundSet,
        raw: I,
    ) -> Result<Cover> {
        let raw: Vec<Subset> = raw.into_iter().collect();
        if let Some(bad) = raw.iter().find(|s| !ground.owns(**s)) {
            let element = bad.difference(ground.full()).iter().next().unwrap_or(0);
            return Err(Error::ElementOutOfRange {
                element,
                n: ground.len(),
            });
        }
        if !is_cover(&raw, ground) {
            return Err(Error::NotACover);
        }
        Ok(Self::absorb(ground, raw))
    }

    /// Canonical form of a family already known to cover `ground`.
    pub(crate) fn absorb(ground: GroundSet, mut raw: Vec<Subset>) -> Cover {
        raw.retain(|s| !s.is_empty());
        raw.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.bits().cmp(&b.bits())));
        raw.dedup();
        let mut kept: Vec<Subset> = Vec::with_capacity(raw.len());
        for block in raw {
            if !kept.iter().any(|k| block.is_subset(*k)) {
                kept.push(block);
            }
        }
        kept.sort_unstable();
        Cover {
            ground,
            blocks: kept,
        }
    }

    /// The single-block cover `[X]`.
    pub fn whole(ground: GroundSet) -> Cover {
        Cover {
            ground,
            blocks: vec![ground.full()],
        }
    }

    /// The partition of `X` into singletons.
    pub fn singletons(ground: GroundSet) -> Cover {
        Cover {
            ground,
            blocks: (0..ground.len()).map(Subset::singleton).collect(),
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// Whether the blocks are pairwise disjoint.
    pub fn is_partition(&self) -> bool {
        self.blocks.iter().map(|b| b.len()).sum::<usize>() == self.ground.len()
    }

    /// `self ≺ other`: every block of `self` lies inside some block of `other`.
    pub fn refines(&self, other: &Cover) -> Result<bool> {
        self.ground.check_same(&other.ground)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Cover) -> bool {
        self.blocks
            .iter()
            .all(|a| other.blocks.iter().any(|b| a.is_subset(*b)))
    }

    /// The meet `self ∧ other` of pairwise intersections.
    pub fn wedge(&self, other: &Cover) -> Result<Cover> {
        self.ground.check_same(&other.ground)?;
        Ok(self.wedge_unchecked(other))
    }

    pub(crate) fn wedge_unchecked(&self, other: &Cover) -> Cover {
        let raw = self
            .blocks
            .iter()
            .flat_map(|a| other.blocks.iter().map(move |b| a.intersection(*b)))
            .collect();
        Self::absorb(self.ground, raw)
    }
}

impl Ord for Cover {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground
            .cmp(&other.ground)
            .then_with(|| self.blocks.len().cmp(&other.blocks.len()))
            .then_with(|| self.blocks.cmp(&other.blocks))
    }
}

impl PartialOrd for Cover {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Blocks separated by `;`, elements by `,`.
impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{block}")?;
        }
        Ok(())
    }
}

/// `f⁻¹[𝒜]`, canonicalized. Always a cover of the domain.
pub fn preimage_cover(f: &SetMap, cover: &Cover) -> Result<Cover> {
    f.codomain().check_same(&cover.ground)?;
    let raw = cover.blocks.iter().map(|b| f.preimage(*b)).collect();
    Ok(Cover::absorb(f.domain(), raw))
}
