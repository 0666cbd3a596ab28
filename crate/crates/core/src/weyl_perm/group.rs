use crate::N_LINES;

use super::Permutation;

/// One level of a stabilizer chain: the orbit of `base_point` under the
/// strong generators fixing all earlier base points, with coset representatives.
#[derive(Clone, Debug)]
pub struct BasicOrbit {
    pub base_point: usize,
    pub orbit: Vec<usize>,
    /// `transversal[b]` maps `base_point` to `b`, for `b` in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl BasicOrbit {
    fn build(base_point: usize, gens: &[&Permutation]) -> BasicOrbit {
        let mut transversal = vec![None; N_LINES];
        transversal[base_point] = Some(Permutation::identity());
        let mut orbit = vec![base_point];
        let mut next = 0;
        while next < orbit.len() {
            let b = orbit[next];
            let u = transversal[b].expect("orbit point has a representative");
            for s in gens {
                let c = s.apply(b);
                if transversal[c].is_none() {
                    transversal[c] = Some(u.then(s));
                    orbit.push(c);
                }
            }
            next += 1;
        }
        BasicOrbit {
            base_point,
            orbit,
            transversal,
        }
    }

    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit.is_empty()
    }

    pub fn representative(&self, b: usize) -> Option<&Permutation> {
        self.transversal[b].as_ref()
    }
}

/// A permutation group on 27 points with a verified base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    generators: Vec<Permutation>,
    strong_gens: Vec<Permutation>,
    levels: Vec<BasicOrbit>,
}

fn fixes_prefix(p: &Permutation, base: &[usize]) -> bool {
    base.iter().all(|&b| p.apply(b) == b)
}

fn build_level(i: usize, base: &[usize], strong: &[Permutation]) -> BasicOrbit {
    let gens: Vec<&Permutation> = strong.iter().filter(|s| fixes_prefix(s, &base[..i])).collect();
    BasicOrbit::build(base[i], &gens)
}

/// Strips `h` through `levels[from..]`. Returns the residue and the level where it stopped.
fn sift(levels: &[BasicOrbit], mut h: Permutation, from: usize) -> (Permutation, usize) {
    for (j, level) in levels.iter().enumerate().skip(from) {
        match level.representative(h.apply(level.base_point)) {
            Some(u) => h = h.then(&u.inverse()),
            None => return (h, j),
        }
    }
    (h, levels.len())
}

/// Deterministic Schreier-Sims.
///
/// New base points are always the smallest point moved by the element that
/// forced the extension, so the chain depends only on the generator list.
pub fn schreier_sims(gens: &[Permutation]) -> PermGroup {
    let mut strong: Vec<Permutation> = Vec::new();
    let mut base: Vec<usize> = Vec::new();
    for g in gens {
        if g.is_identity() || strong.contains(g) {
            continue;
        }
        if fixes_prefix(g, &base) {
            base.push(g.first_moved_point().expect("non-identity moves a point"));
        }
        strong.push(*g);
    }
    let mut levels: Vec<BasicOrbit> = (0..base.len()).map(|i| build_level(i, &base, &strong)).collect();

    // Levels above `i` form a verified chain for the stabilizer of base[..=i].
    let mut i = base.len();
    while i > 0 {
        let level = i - 1;
        let gens: Vec<Permutation> = strong
            .iter()
            .filter(|s| fixes_prefix(s, &base[..level]))
            .copied()
            .collect();
        let mut residue = None;
        'search: for &b in &levels[level].orbit {
            let u = *levels[level].representative(b).expect("orbit point");
            for s in &gens {
                let c = s.apply(b);
                let uc = levels[level].representative(c).expect("orbit is closed");
                let schreier_gen = u.then(s).then(&uc.inverse());
                let (h, j) = sift(&levels, schreier_gen, level + 1);
                if !h.is_identity() {
                    residue = Some((h, j));
                    break 'search;
                }
            }
        }
        match residue {
            None => i -= 1,
            Some((h, j)) => {
                strong.push(h);
                if j == base.len() {
                    base.push(h.first_moved_point().expect("non-identity residue"));
                    levels.push(build_level(j, &base, &strong));
                }
                for (m, lvl) in levels.iter_mut().enumerate().take(j + 1) {
                    *lvl = build_level(m, &base, &strong);
                }
                i = j + 1;
            }
        }
    }

    PermGroup {
        generators: gens.to_vec(),
        strong_gens: strong,
        levels,
    }
}

impl PermGroup {
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_gens
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn basic_orbits(&self) -> &[BasicOrbit] {
        &self.levels
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(BasicOrbit::len).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.len() as u128).product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        let (h, j) = sift(&self.levels, *p, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Every original generator sifts to the identity.
    pub fn verify_generators(&self) -> bool {
        self.generators.iter().all(|g| self.contains(g))
    }

    /// All elements, each written once as `u_0 * u_1 * ... * u_k` over the transversals.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity()];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.len());
            for &b in &level.orbit {
                let u = level.representative(b).expect("orbit point");
                // first apply the deeper part, then the coset representative
                next.extend(out.iter().map(|g| g.then(u)));
            }
            out = next;
        }
        out
    }
}
