use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{PermGroup, Permutation};

/// Largest group order for which classes are found by listing every element.
pub const ENUMERATION_BOUND: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Lexicographically least element of the class (by image list).
    pub representative: Permutation,
    pub size: usize,
    /// Cycle lengths in decreasing order, fixed points included.
    pub cycle_type: Vec<usize>,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Conjugacy classes by full enumeration and closure under conjugation by the generators.
///
/// Classes are ordered by size, then cycle type (lexicographic on the decreasing
/// cycle-length list), then representative.
pub fn conjugacy_classes(g: &PermGroup) -> Result<Vec<ConjugacyClass>> {
    let order = g.order();
    if order > ENUMERATION_BOUND {
        return Err(Error::UnsupportedScale {
            order,
            bound: ENUMERATION_BOUND,
        });
    }
    let elements = g.elements();
    let index: HashMap<Permutation, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (*p, i as u32))
        .collect();
    if index.len() != elements.len() {
        return Err(Error::inconsistent("stabilizer chain listed an element twice"));
    }

    let mut uf = UnionFind::new(elements.len());
    for (i, x) in elements.iter().enumerate() {
        for s in g.generators() {
            let y = x.conjugate_by(s);
            let j = *index
                .get(&y)
                .ok_or_else(|| Error::inconsistent("conjugate of an element left the group"))?;
            uf.union(i as u32, j);
        }
    }

    let mut members: HashMap<u32, Vec<u32>> = HashMap::new();
    for i in 0..elements.len() as u32 {
        members.entry(uf.find(i)).or_default().push(i);
    }
    let mut classes: Vec<ConjugacyClass> = members
        .into_values()
        .map(|idx| {
            let representative = idx
                .iter()
                .map(|&i| elements[i as usize])
                .min()
                .expect("classes are non-empty");
            ConjugacyClass {
                representative,
                size: idx.len(),
                cycle_type: representative.cycle_type(),
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.size, &a.cycle_type, &a.representative).cmp(&(b.size, &b.cycle_type, &b.representative))
    });
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_perm::schreier_sims;

    #[test]
    fn trivial_group_has_one_class() {
        let g = schreier_sims(&[Permutation::identity()]);
        let cl = conjugacy_classes(&g).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].size, 1);
    }

    #[test]
    fn s3_has_three_classes() {
        let g = schreier_sims(&[
            Permutation::from_cycles(&[&[0, 1]]).unwrap(),
            Permutation::from_cycles(&[&[0, 1, 2]]).unwrap(),
        ]);
        let cl = conjugacy_classes(&g).unwrap();
        let sizes: Vec<usize> = cl.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(cl[1].cycle_type[..2], [3, 1]);
    }

    #[test]
    fn large_groups_are_refused() {
        let cycle: Vec<usize> = (0..27).collect();
        let g = schreier_sims(&[
            Permutation::from_cycles(&[&[0, 1]]).unwrap(),
            Permutation::from_cycles(&[&cycle]).unwrap(),
        ]);
        assert!(matches!(conjugacy_classes(&g), Err(Error::UnsupportedScale { .. })));
    }
}
