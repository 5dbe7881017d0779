//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Base points are chosen greedily as the first point moved by the
//! generator being installed. A strong generator stored at level `j` fixes
//! the base points of all levels `< j`; the group of level `l` is generated
//! by the union of the generators stored at levels `>= l`. Transversal
//! representatives satisfy `t_p(base) = p`, giving the decomposition
//! `g = h · t_{g(base)}` with `h` fixing the base ("h then t").

use crate::perm::{Permutation, Point};

struct Level {
    base: Point,
    gens: Vec<Permutation>,
    /// Orbit of `base` in BFS discovery order.
    orbit: Vec<Point>,
    /// Point-indexed transversal representatives and their inverses.
    trans: Vec<Option<Permutation>>,
    trans_inv: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: Point, degree: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            trans: vec![None; degree],
            trans_inv: vec![None; degree],
        }
    }

    fn sorted_orbit(&self) -> Vec<Point> {
        let mut pts = self.orbit.clone();
        pts.sort_unstable();
        pts
    }
}

pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a chain for the group generated by `gens` (all of degree
    /// `degree`; the caller guarantees this).
    pub fn new(gens: &[Permutation], degree: usize) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            debug_assert_eq!(g.degree(), degree);
            if !g.is_identity() {
                chain.add_gen_and_fix(g);
            }
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Group order as the product of orbit sizes; `None` on `u128` overflow.
    pub fn try_order(&self) -> Option<u128> {
        let mut o: u128 = 1;
        for lvl in &self.levels {
            o = o.checked_mul(lvl.orbit.len() as u128)?;
        }
        Some(o)
    }

    /// Membership by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, _) = self.strip(g.clone(), 0);
        res.is_identity()
    }

    /// Base points, outermost first (0-based).
    pub fn base_points(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    /// Per-level orbit sizes, outermost first.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators with the level they are stored at.
    pub fn strong_generators(&self) -> Vec<(usize, &Permutation)> {
        self.levels
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.gens.iter().map(move |g| (i, g)))
            .collect()
    }

    /// Union of the generators stored at levels `>= l`.
    fn gens_from(&self, l: usize) -> Vec<Permutation> {
        self.levels[l..]
            .iter()
            .flat_map(|lvl| lvl.gens.iter().cloned())
            .collect()
    }

    /// Recomputes the orbit and transversal of level `i` from scratch.
    fn orbit_transversal(&mut self, i: usize) {
        let base = self.levels[i].base;
        let gens = self.gens_from(i);
        let mut trans: Vec<Option<Permutation>> = vec![None; self.degree];
        let mut orbit: Vec<Point> = vec![base];
        trans[base as usize] = Some(Permutation::identity(self.degree));
        let mut cursor = 0;
        while cursor < orbit.len() {
            let p = orbit[cursor];
            cursor += 1;
            let rp = trans[p as usize].clone().expect("orbit point has a rep");
            for s in &gens {
                let q = s.img(p);
                if trans[q as usize].is_none() {
                    trans[q as usize] = Some(rp.compose_fast(s));
                    orbit.push(q);
                }
            }
        }
        let trans_inv = trans
            .iter()
            .map(|t| t.as_ref().map(Permutation::inverse))
            .collect();
        let lvl = &mut self.levels[i];
        lvl.orbit = orbit;
        lvl.trans = trans;
        lvl.trans_inv = trans_inv;
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` on full success).
    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for i in start..self.levels.len() {
            let lvl = &self.levels[i];
            let p = g.img(lvl.base);
            match &lvl.trans_inv[p as usize] {
                None => return (g, i),
                Some(t_inv) => g = g.compose_fast(t_inv),
            }
        }
        (g, self.levels.len())
    }

    /// Installs a generator and restores the strong-generation invariant by
    /// re-verifying Schreier generators from the deepest level upward, with
    /// down-jumps to any level that received a new generator.
    pub fn add_gen_and_fix(&mut self, g: &Permutation) {
        let (res, j) = self.strip(g.clone(), 0);
        if res.is_identity() {
            return;
        }
        if j == self.levels.len() {
            let base = res.first_moved().expect("non-identity residue") as Point;
            self.levels.push(Level::new(base, self.degree));
        }
        self.levels[j].gens.push(res);

        let mut i = self.levels.len() - 1;
        loop {
            self.orbit_transversal(i);
            let pts = self.levels[i].sorted_orbit();
            let gens_i = self.gens_from(i);
            let mut dirty = false;
            'sweep: for &p in &pts {
                let rp = self.levels[i].trans[p as usize]
                    .clone()
                    .expect("orbit point has a rep");
                for s in &gens_i {
                    let q = s.img(p);
                    let tq_inv = self.levels[i].trans_inv[q as usize]
                        .clone()
                        .expect("orbit is closed under the generators");
                    let schreier = rp.compose_fast(s).compose_fast(&tq_inv);
                    let (res2, j2) = self.strip(schreier, i + 1);
                    if !res2.is_identity() {
                        if j2 == self.levels.len() {
                            let base = res2.first_moved().expect("non-identity residue") as Point;
                            self.levels.push(Level::new(base, self.degree));
                        }
                        self.levels[j2].gens.push(res2);
                        i = j2;
                        dirty = true;
                        break 'sweep;
                    }
                }
            }
            if !dirty {
                if i == 0 {
                    break;
                }
                i -= 1;
            }
        }
    }

    /// Enumerates all group elements as transversal products (unsorted).
    pub fn elements_vec(&self) -> Vec<Permutation> {
        let mut result = vec![Permutation::identity(self.degree)];
        for i in (0..self.levels.len()).rev() {
            let pts = self.levels[i].sorted_orbit();
            let mut next = Vec::with_capacity(result.len() * pts.len());
            for tail in &result {
                for &p in &pts {
                    let rep = self.levels[i].trans[p as usize]
                        .as_ref()
                        .expect("orbit point has a rep");
                    next.push(tail.compose_fast(rep));
                }
            }
            result = next;
        }
        result
    }

    /// Canonical representative of the right coset `H·g` of this chain's
    /// group `H`: at each level the transversal element minimizing the
    /// image of the orbit under the running product is applied in front.
    /// Two elements get the same representative iff they lie in the same
    /// coset, which gives quotient construction a deterministic labeling.
    pub fn canonical_coset_rep(&self, g: &Permutation) -> Permutation {
        let mut r = g.clone();
        for lvl in &self.levels {
            let mut best_p = lvl.base;
            let mut best_img = r.img(lvl.base);
            for &p in &lvl.orbit {
                let im = r.img(p);
                if im < best_img {
                    best_img = im;
                    best_p = p;
                }
            }
            let t = lvl.trans[best_p as usize]
                .as_ref()
                .expect("orbit point has a rep");
            r = t.compose_fast(&r);
        }
        r
    }
}
