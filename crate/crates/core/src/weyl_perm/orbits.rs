use crate::N_LINES;

use super::Permutation;

/// Orbits of the group generated by `gens` on `{0..26}`, each sorted, ordered by least point.
pub fn orbits_on_points(gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = [false; N_LINES];
    let mut orbits = Vec::new();
    for start in 0..N_LINES {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut next = 0;
        while next < orbit.len() {
            let x = orbit[next];
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            next += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Orbits on ordered pairs (orbitals), ordered by least pair.
pub fn orbitals(gens: &[Permutation]) -> Vec<Vec<(usize, usize)>> {
    let n = N_LINES;
    let mut seen = vec![false; n * n];
    let mut out = Vec::new();
    for start in 0..n * n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut next = 0;
        while next < orbit.len() {
            let (a, b) = (orbit[next] / n, orbit[next] % n);
            for g in gens {
                let y = g.apply(a) * n + g.apply(b);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            next += 1;
        }
        orbit.sort_unstable();
        out.push(orbit.into_iter().map(|p| (p / n, p % n)).collect());
    }
    out
}

pub fn orbit_count_on_ordered_pairs(gens: &[Permutation]) -> usize {
    orbitals(gens).len()
}
