//! Permutation groups with cached stabilizer chains and element sets.

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::perm::{prime_divisors, Permutation};
use std::sync::{Arc, OnceLock};

/// Resource bounds for element-enumeration and quotient construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order for which full element enumeration (and the
    /// filter-based subgroup operations built on it) is permitted.
    pub exhaustive: u128,
    /// Largest coset-space size a quotient construction may create.
    pub quotient: u128,
}

pub const DEFAULT_EXHAUSTIVE_CAP: u128 = 2_000_000;
pub const DEFAULT_QUOTIENT_CAP: u128 = 50_000;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            exhaustive: DEFAULT_EXHAUSTIVE_CAP,
            quotient: DEFAULT_QUOTIENT_CAP,
        }
    }
}

struct Inner {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabilizerChain,
    order: u128,
    elements: OnceLock<Vec<Permutation>>,
}

/// An immutable permutation group. Cloning is cheap (shared internals), and
/// the element cache is populated at most once.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

impl PermGroup {
    /// Builds the group generated by `gens` via deterministic Schreier–Sims.
    pub fn new(gens: Vec<Permutation>) -> Result<Self> {
        let degree = match gens.first() {
            Some(g) => g.degree(),
            None => {
                return Err(Error::Constructor(
                    "a group needs at least one generator".into(),
                ))
            }
        };
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let chain = StabilizerChain::new(&gens, degree);
        Self::from_parts(gens, chain)
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        Self::new(vec![Permutation::identity(degree)]).expect("trivial group")
    }

    pub(crate) fn from_parts(gens: Vec<Permutation>, chain: StabilizerChain) -> Result<Self> {
        let order = chain.try_order().ok_or(Error::Overflow)?;
        Ok(PermGroup {
            inner: Arc::new(Inner {
                degree: chain.degree(),
                gens,
                chain,
                order,
                elements: OnceLock::new(),
            }),
        })
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.gens
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.inner.chain
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    /// Ascending primes dividing the group order.
    pub fn pi(&self) -> Vec<u64> {
        prime_divisors(self.inner.order)
    }

    /// Membership test by sifting. A permutation of a different degree is
    /// never a member.
    pub fn contains(&self, g: &Permutation) -> bool {
        self.inner.chain.contains(g)
    }

    /// All elements, ordered lexicographically by image table. Memoized;
    /// refuses to enumerate groups larger than `cap`.
    pub fn elements(&self, cap: u128) -> Result<&[Permutation]> {
        if self.inner.order > cap {
            return Err(Error::CapExceeded {
                order: self.inner.order,
                cap,
            });
        }
        let els = self.inner.elements.get_or_init(|| {
            let mut v = self.inner.chain.elements_vec();
            v.sort_unstable();
            v
        });
        debug_assert_eq!(els.len() as u128, self.inner.order);
        Ok(els)
    }

    /// True iff every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    /// True iff the two groups contain each other.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {})",
            self.degree(),
            self.order()
        )
    }
}

/// Grows a group from a deterministic element stream, keeping as generators
/// exactly the streamed elements that were new to the growing chain.
pub(crate) fn group_from_stream<'a, I>(degree: usize, elems: I) -> Result<PermGroup>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut chain = StabilizerChain::new(&[], degree);
    let mut gens: Vec<Permutation> = Vec::new();
    for e in elems {
        if !chain.contains(e) {
            gens.push(e.clone());
            chain.add_gen_and_fix(e);
        }
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    PermGroup::from_parts(gens, chain)
}

/// A subgroup together with the witness that it lives inside its parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: PermGroup,
    group: PermGroup,
}

impl Subgroup {
    /// Checks every generator of `group` for membership in `parent`.
    pub fn new(parent: &PermGroup, group: PermGroup) -> Result<Self> {
        if parent.degree() != group.degree() {
            return Err(Error::DegreeMismatch {
                left: parent.degree(),
                right: group.degree(),
            });
        }
        for g in group.generators() {
            if !parent.contains(g) {
                return Err(Error::NotInGroup(format!(
                    "subgroup generator {g} lies outside the parent group"
                )));
            }
        }
        debug_assert_eq!(parent.order() % group.order(), 0, "Lagrange violation");
        Ok(Subgroup {
            parent: parent.clone(),
            group,
        })
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }
}
