//! Subgroup-level computations: Sylow subgroups, normalizers, centralizers,
//! centers, normal closures, derived and chief series, perfect cores, and
//! quotients by normal subgroups.
//!
//! Normalizers, centralizers and element filters work by exhaustive sweeps
//! over `elements()`, so every operation here is guarded by the exhaustive
//! cap; quotients are guarded by the quotient cap. Sweeps run in the lex
//! order of the element list, which makes every result deterministic.

use std::collections::HashMap;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::gf::is_prime;
use crate::group::{group_from_stream, Caps, PermGroup, Subgroup};
use crate::perm::{p_part, prime_divisors, Permutation};

/// `x · h · x⁻¹` with products read left to right ("apply x, then h, then
/// x⁻¹"). The callers only ever test membership of the result in a subgroup,
/// which is orientation-independent, but one convention is fixed throughout.
fn conj(h: &Permutation, x: &Permutation, x_inv: &Permutation) -> Permutation {
    h.conjugate_by(x_inv, x)
}

/// The commutator `[x, h] = x⁻¹ · h⁻¹ · x · h` (products left to right).
fn commutator(x: &Permutation, x_inv: &Permutation, h: &Permutation) -> Permutation {
    x_inv
        .compose_fast(&h.inverse())
        .compose_fast(x)
        .compose_fast(h)
}

/// True iff `x` normalizes the group with the given generators and chain:
/// `x · h · x⁻¹` lands back in the group for every generator `h`.
fn normalizes(
    x: &Permutation,
    x_inv: &Permutation,
    gens: &[Permutation],
    chain: &StabilizerChain,
) -> bool {
    gens.iter().all(|h| chain.contains(&conj(h, x, x_inv)))
}

fn filter_subgroup<F>(g: &PermGroup, cap: u128, mut keep: F) -> Result<Subgroup>
where
    F: FnMut(&Permutation) -> bool,
{
    let elems = g.elements(cap)?;
    let sub = group_from_stream(g.degree(), elems.iter().filter(|x| keep(x)))?;
    Subgroup::new(g, sub)
}

/// `N_G(H) = { x ∈ G : x·h·x⁻¹ ∈ H for every generator h of H }`, computed
/// by filtering the lex-ordered element list of `G`. Contains `H`.
pub fn normalizer(g: &PermGroup, h: &Subgroup, cap: u128) -> Result<Subgroup> {
    let gens = h.group().generators().to_vec();
    let chain = h.group().chain();
    filter_subgroup(g, cap, |x| {
        let x_inv = x.inverse();
        normalizes(x, &x_inv, &gens, chain)
    })
}

/// `C_G(H) = { x ∈ G : x·h = h·x for every generator h of H }`.
pub fn centralizer(g: &PermGroup, h: &Subgroup, cap: u128) -> Result<Subgroup> {
    let gens = h.group().generators().to_vec();
    filter_subgroup(g, cap, |x| {
        gens.iter()
            .all(|hh| x.compose_fast(hh) == hh.compose_fast(x))
    })
}

/// `Z(G)`, the center, as a subgroup of `G`.
pub fn center(g: &PermGroup, cap: u128) -> Result<Subgroup> {
    let gens = g.generators().to_vec();
    filter_subgroup(g, cap, |x| {
        gens.iter()
            .all(|hh| x.compose_fast(hh) == hh.compose_fast(x))
    })
}

/// A Sylow `p`-subgroup of `G`, grown deterministically: seed with the
/// `p`-part power of the first element (in lex order) whose order `p`
/// divides, then repeatedly adjoin the first `p`-element of the current
/// normalizer that lies outside the subgroup — a proper `p`-subgroup is
/// always proper in its normalizer's Sylow subgroup, so this terminates
/// with the full `p`-part of `|G|`.
pub fn sylow(g: &PermGroup, p: u64, cap: u128) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("sylow: {p} is not prime")));
    }
    if !g.order().is_multiple_of(p as u128) {
        return Err(Error::PrimeDoesNotDivide {
            p,
            order: g.order(),
        });
    }
    let elems = g.elements(cap)?;
    let seed = elems
        .iter()
        .find_map(|x| {
            let ord = x.order();
            if ord % p as u128 == 0 {
                Some(x.pow(ord / p_part(ord, p)))
            } else {
                None
            }
        })
        .expect("p divides |G|, so a p-element exists by Cauchy's theorem");
    sylow_from_seed(g, p, cap, seed)
}

/// Sylow growth from an explicit seed `p`-element (used by [`sylow`] and by
/// the conjugacy-invariance tests, which start from a different seed).
pub(crate) fn sylow_from_seed(
    g: &PermGroup,
    p: u64,
    cap: u128,
    seed: Permutation,
) -> Result<Subgroup> {
    let target = p_part(g.order(), p);
    debug_assert!(seed.order() == p_part(seed.order(), p) && !seed.is_identity());
    let elems = g.elements(cap)?;
    let mut current = PermGroup::new(vec![seed])?;
    while current.order() < target {
        let grown = elems
            .iter()
            .filter(|x| {
                let x_inv = x.inverse();
                normalizes(x, &x_inv, current.generators(), current.chain())
            })
            .find_map(|z| {
                let ord = z.order();
                if ord > 1 && ord == p_part(ord, p) && !current.contains(z) {
                    let mut gens = current.generators().to_vec();
                    gens.push(z.clone());
                    Some(PermGroup::new(gens))
                } else {
                    None
                }
            })
            .expect("a proper p-subgroup grows inside its normalizer")?;
        debug_assert!(grown.order() > current.order());
        if grown.order() != p_part(grown.order(), p) {
            return Err(Error::Constructor(format!(
                "sylow({p}): adjoining a normalizing {p}-element left the {p}-group property, order {}",
                grown.order()
            )));
        }
        current = grown;
    }
    Subgroup::new(g, current)
}

/// The smallest subgroup of `G` containing `seeds` and closed under
/// conjugation by `G`'s generators (fixpoint iteration over conjugates).
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation], cap: u128) -> Result<Subgroup> {
    for s in seeds {
        if !g.contains(s) {
            return Err(Error::NotInGroup(format!(
                "normal_closure seed {s} lies outside the group"
            )));
        }
    }
    let mut chain = StabilizerChain::new(&[], g.degree());
    let mut kept: Vec<Permutation> = Vec::new();
    let mut work: Vec<Permutation> = Vec::new();
    for s in seeds {
        if !s.is_identity() && !chain.contains(s) {
            chain.add_gen_and_fix(s);
            kept.push(s.clone());
            work.push(s.clone());
        }
    }
    let conjugators: Vec<(Permutation, Permutation)> = g
        .generators()
        .iter()
        .map(|c| (c.clone(), c.inverse()))
        .collect();
    let mut cursor = 0;
    while cursor < work.len() {
        let x = work[cursor].clone();
        cursor += 1;
        for (c, c_inv) in &conjugators {
            let y = conj(&x, c, c_inv);
            if !chain.contains(&y) {
                chain.add_gen_and_fix(&y);
                kept.push(y.clone());
                work.push(y);
            }
        }
    }
    let group = if kept.is_empty() {
        PermGroup::trivial(g.degree())
    } else {
        PermGroup::from_parts(kept, chain)?
    };
    if group.order() > cap {
        return Err(Error::CapExceeded {
            order: group.order(),
            cap,
        });
    }
    Subgroup::new(g, group)
}

/// The derived subgroup `[G, G]`: the normal closure of the commutators of
/// all generator pairs.
pub fn derived_subgroup(g: &PermGroup, cap: u128) -> Result<Subgroup> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        let a_inv = a.inverse();
        for b in &gens[i + 1..] {
            comms.push(commutator(a, &a_inv, b));
        }
    }
    normal_closure(g, &comms, cap)
}

/// The derived series `G ≥ G' ≥ G'' ≥ …` down to its fixpoint (the last
/// entry repeats no further: it is trivial exactly when `G` is solvable).
pub fn derived_series(g: &PermGroup, cap: u128) -> Result<Vec<PermGroup>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("series is nonempty");
        let next = derived_subgroup(last, cap)?.group().clone();
        if next.order() == last.order() {
            break;
        }
        series.push(next);
    }
    Ok(series)
}

/// The perfect core `G^∞`, the limit of the derived series — the largest
/// perfect subgroup of `G`.
pub fn perfect_core(g: &PermGroup, cap: u128) -> Result<Subgroup> {
    let series = derived_series(g, cap)?;
    let core = series.last().expect("series is nonempty").clone();
    Subgroup::new(g, core)
}

/// True iff the derived series reaches the trivial group.
pub fn is_solvable(g: &PermGroup, cap: u128) -> Result<bool> {
    Ok(perfect_core(g, cap)?.order() == 1)
}

/// True iff `G = [G, G]`.
pub fn is_perfect(g: &PermGroup, cap: u128) -> Result<bool> {
    Ok(derived_subgroup(g, cap)?.order() == g.order())
}

/// True iff every Sylow subgroup is normal (its normalizer is all of `G`).
pub fn is_nilpotent(g: &PermGroup, cap: u128) -> Result<bool> {
    for p in g.pi() {
        let syl = sylow(g, p, cap)?;
        if normalizer(g, &syl, cap)?.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The quotient `G/N` realized as the regular action of `G` on the right
/// cosets of `N`, together with the projection and a pullback. Coset labels
/// come from canonical coset representatives, so the construction never
/// enumerates the parent's elements and is bounded by the quotient cap only.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    parent: PermGroup,
    kernel: PermGroup,
    quotient: PermGroup,
    reps: Vec<Permutation>,
    coset_of: HashMap<Permutation, usize>,
}

impl QuotientMap {
    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    /// The normal subgroup the quotient was taken by; exactly the kernel of
    /// [`QuotientMap::project`].
    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn quotient(&self) -> &PermGroup {
        &self.quotient
    }

    /// Canonical representatives of the cosets, indexed by coset label;
    /// label 0 is the kernel's own coset.
    pub fn coset_reps(&self) -> &[Permutation] {
        &self.reps
    }

    /// The coset permutation induced by `x`; identity iff `x ∈ N`.
    pub fn project(&self, x: &Permutation) -> Result<Permutation> {
        if !self.parent.contains(x) {
            return Err(Error::NotInGroup(format!(
                "cannot project {x}: not an element of the parent group"
            )));
        }
        let nchain = self.kernel.chain();
        let images = self
            .reps
            .iter()
            .map(|r| {
                let rep = nchain.canonical_coset_rep(&r.compose_fast(x));
                self.coset_of[&rep] as u16
            })
            .collect();
        Permutation::from_images(images)
    }

    /// An element of `G` projecting to `q` (the representative of the coset
    /// `q` sends the kernel's coset to).
    pub fn pullback(&self, q: &Permutation) -> Result<Permutation> {
        if !self.quotient.contains(q) {
            return Err(Error::NotInGroup(format!(
                "cannot pull back {q}: not an element of the quotient"
            )));
        }
        Ok(self.reps[q.image(0)].clone())
    }
}

/// Form `G/N` for `N` normal in `G`. Errors with [`Error::NotNormal`] when a
/// generator conjugate escapes `N`, and with [`Error::QuotientCapExceeded`]
/// when the index `|G:N|` exceeds `quotient_cap`.
pub fn quotient(g: &PermGroup, n: &Subgroup, quotient_cap: u128) -> Result<QuotientMap> {
    let ngroup = n.group();
    for c in g.generators() {
        let c_inv = c.inverse();
        for h in ngroup.generators() {
            if !ngroup.contains(&conj(h, c, &c_inv)) {
                return Err(Error::NotNormal);
            }
        }
    }
    let index = g.order() / ngroup.order();
    debug_assert_eq!(index * ngroup.order(), g.order());
    if index > quotient_cap {
        return Err(Error::QuotientCapExceeded {
            index,
            cap: quotient_cap,
        });
    }
    if index as usize > crate::perm::MAX_DEGREE {
        return Err(Error::DegreeOutOfRange {
            degree: index as usize,
        });
    }

    // Breadth-first sweep over cosets, labeling each by its canonical
    // representative; generators act by right multiplication.
    let nchain = ngroup.chain();
    let r0 = nchain.canonical_coset_rep(&Permutation::identity(g.degree()));
    let mut reps = vec![r0.clone()];
    let mut coset_of = HashMap::from([(r0, 0usize)]);
    let mut cursor = 0;
    while cursor < reps.len() {
        for s in g.generators() {
            let rep = nchain.canonical_coset_rep(&reps[cursor].compose_fast(s));
            if !coset_of.contains_key(&rep) {
                coset_of.insert(rep.clone(), reps.len());
                reps.push(rep);
            }
        }
        cursor += 1;
    }
    assert_eq!(reps.len() as u128, index, "coset sweep covers G/N");

    let mut qgens = Vec::new();
    for s in g.generators() {
        let images = reps
            .iter()
            .map(|r| coset_of[&nchain.canonical_coset_rep(&r.compose_fast(s))] as u16)
            .collect();
        let qperm = Permutation::from_images(images)?;
        if !qperm.is_identity() {
            qgens.push(qperm);
        }
    }
    let quotient_group = if qgens.is_empty() {
        PermGroup::trivial(index as usize)
    } else {
        PermGroup::new(qgens)?
    };
    assert_eq!(
        quotient_group.order(),
        index,
        "coset action has kernel exactly N"
    );
    Ok(QuotientMap {
        parent: g.clone(),
        kernel: ngroup.clone(),
        quotient: quotient_group,
        reps,
        coset_of,
    })
}

/// `C_G(H/K) = { g ∈ G : [g, h] ∈ K for every generator h of H }` — the
/// kernel of the action of `G` on the factor `H/K`. Preconditions (`K`
/// normal in `G`, `K ≤ H`, `H` normal in `G`) are each reported distinctly.
pub fn action_kernel_on_factor(
    g: &PermGroup,
    h: &Subgroup,
    k: &Subgroup,
    cap: u128,
) -> Result<Subgroup> {
    let is_normal = |sub: &PermGroup| {
        g.generators().iter().all(|c| {
            let c_inv = c.inverse();
            sub.generators()
                .iter()
                .all(|x| sub.contains(&conj(x, c, &c_inv)))
        })
    };
    if !is_normal(k.group()) {
        return Err(Error::Precondition(
            "action kernel: K is not normal in G".to_string(),
        ));
    }
    if !k.group().is_subgroup_of(h.group()) {
        return Err(Error::Precondition(
            "action kernel: K is not contained in H".to_string(),
        ));
    }
    if !is_normal(h.group()) {
        return Err(Error::Precondition(
            "action kernel: H is not normal in G".to_string(),
        ));
    }
    let hgens = h.group().generators().to_vec();
    let kchain = k.group().chain();
    filter_subgroup(g, cap, |x| {
        let x_inv = x.inverse();
        hgens
            .iter()
            .all(|hh| kchain.contains(&commutator(x, &x_inv, hh)))
    })
}

/// One factor of a chief series: its order, the primes dividing it, and the
/// order of the action kernel `C_G(K_{i+1}/K_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiefFactor {
    pub order: u128,
    pub primes: Vec<u64>,
    pub kernel_order: u128,
}

/// An ascending chief series `1 = K₀ < K₁ < … < K_m = G` with per-factor
/// records; `terms` has one more entry than `factors`.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    terms: Vec<Subgroup>,
    factors: Vec<ChiefFactor>,
}

impl ChiefSeries {
    /// The normal subgroups `K₀ … K_m`, ascending.
    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    /// Factor records for `K_{i+1}/K_i`, bottom up.
    pub fn factors(&self) -> &[ChiefFactor] {
        &self.factors
    }
}

/// Compute a chief series bottom-up. At each stage the quotient `Q = G/K`
/// is swept in element lex order; the normal closure of each nontrivial
/// element is a candidate next step, and the smallest-order closure (first
/// in sweep order on ties) is an inclusion-minimal normal subgroup of `Q`
/// — any smaller normal subgroup would itself appear as a closure. The
/// sweep stops early once a closure's order hits the smallest prime
/// divisor of `|Q|`, the least possible.
pub fn chief_series(g: &PermGroup, caps: &Caps) -> Result<ChiefSeries> {
    let mut terms = vec![Subgroup::new(g, PermGroup::trivial(g.degree()))?];
    let mut factors = Vec::new();
    while terms.last().expect("nonempty").order() < g.order() {
        let k = terms.last().expect("nonempty");
        let qm = quotient(g, k, caps.quotient)?;
        let q = qm.quotient();
        let smallest_prime = *prime_divisors(q.order())
            .first()
            .expect("nontrivial quotient has a prime divisor") as u128;
        let mut best: Option<Subgroup> = None;
        for x in q.elements(caps.exhaustive)? {
            if x.is_identity() {
                continue;
            }
            let closure = normal_closure(q, std::slice::from_ref(x), caps.exhaustive)?;
            let better = match &best {
                Some(b) => closure.order() < b.order(),
                None => true,
            };
            if better {
                let done = closure.order() == smallest_prime;
                best = Some(closure);
                if done {
                    break;
                }
            }
        }
        let chosen = best.expect("nontrivial quotient has a nontrivial closure");
        let mut gens: Vec<Permutation> = k
            .group()
            .generators()
            .iter()
            .filter(|h| !h.is_identity())
            .cloned()
            .collect();
        for cg in chosen.group().generators() {
            gens.push(qm.pullback(cg)?);
        }
        let next_group = PermGroup::new(gens)?;
        assert_eq!(
            next_group.order(),
            k.order() * chosen.order(),
            "pullback order multiplies"
        );
        let next = Subgroup::new(g, next_group)?;
        let kernel = action_kernel_on_factor(g, &next, k, caps.exhaustive)?;
        factors.push(ChiefFactor {
            order: chosen.order(),
            primes: prime_divisors(chosen.order()),
            kernel_order: kernel.order(),
        });
        terms.push(next);
    }
    Ok(ChiefSeries { terms, factors })
}
