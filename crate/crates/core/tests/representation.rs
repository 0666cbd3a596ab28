mod common;

use lines27::linalg::{q, rank, QMatrix, Rational};
use lines27::picard::LineLabel;
use lines27::rep::{
    commutes_with, constituent_character, inner_product, is_strongly_regular, meeting_matrix, permutation_character,
    reflection_character, spectral_decomposition, ClassFunction,
};
use lines27::weyl_perm::orbit_count_on_ordered_pairs;
use num_traits::{One, Zero};

fn idx(s: &str) -> usize {
    s.parse::<LineLabel>().unwrap().index()
}

#[test]
fn meeting_matrix_entries() {
    let m = common::model();
    let a = meeting_matrix(&m.lines);
    assert!(a[(idx("E1"), idx("F12"))].is_one());
    assert!(a[(idx("E1"), idx("G1"))].is_zero());
    assert!(a[(idx("E1"), idx("G2"))].is_one());
    assert!(a.is_symmetric());
    for i in 0..27 {
        assert!(a[(i, i)].is_zero());
        assert_eq!(a.row(i).sum(), q(10));
    }
}

#[test]
fn strongly_regular_identity() {
    let a = &common::model().meeting;
    assert!(is_strongly_regular(a, 10, 1, 5));
    // any other parameter set fails
    assert!(!is_strongly_regular(a, 10, 0, 5));
    assert!(!is_strongly_regular(a, 10, 1, 4));
}

#[test]
fn eigenspace_dimensions_by_independent_rank() {
    let a = &common::model().meeting;
    let rows = common::int_rows(a);
    let shifted = |lambda: i64| -> Vec<Vec<i64>> {
        rows.iter()
            .enumerate()
            .map(|(i, r)| r.iter().enumerate().map(|(j, &x)| x - if i == j { lambda } else { 0 }).collect())
            .collect()
    };
    let dims: Vec<(i64, usize)> = (-10..=10)
        .rev()
        .map(|l| (l, 27 - common::bareiss_rank(&shifted(l))))
        .filter(|&(_, d)| d > 0)
        .collect();
    assert_eq!(dims, vec![(10, 1), (1, 20), (-5, 6)]);

    let comps = spectral_decomposition(a).unwrap();
    let got: Vec<(i64, usize)> = comps.iter().map(|c| (c.eigenvalue, c.dimension)).collect();
    assert_eq!(got, dims);
    assert_eq!(27 - rank(&a.shift(&q(1))), 20);
}

#[test]
fn projector_identities() {
    let m = common::model();
    let comps: Vec<_> = m.decomposition.constituents.iter().map(|c| &c.component).collect();
    let n = 27;
    let mut sum = QMatrix::zeros(n, n);
    let mut recon = QMatrix::zeros(n, n);
    for (i, c) in comps.iter().enumerate() {
        let p = &c.projector;
        assert_eq!(&(p * p), p);
        assert!(p.is_symmetric());
        assert_eq!(p.trace(), q(c.dimension as i64));
        for g in &m.generators {
            assert!(commutes_with(p, g));
        }
        for (j, d) in comps.iter().enumerate() {
            if i != j {
                assert!((p * &d.projector).is_zero());
            }
        }
        for v in c.subspace.basis_vectors() {
            assert_eq!(p.mul_vec(&v), v);
            assert_eq!(m.meeting.mul_vec(&v), v.scale(&q(c.eigenvalue)));
        }
        sum = &sum + p;
        recon = &recon + &p.scale(&q(c.eigenvalue));
    }
    assert_eq!(sum, QMatrix::identity(n));
    assert_eq!(recon, m.meeting);
    // the trivial projector is J / 27
    assert_eq!(comps[0].projector, QMatrix::from_fn(n, n, |_, _| Rational::new(1.into(), 27.into())));
}

#[test]
fn permutation_character_facts() {
    let m = common::model();
    let chi = permutation_character(&m.classes);
    assert_eq!(chi.values()[0], q(27));
    let one = ClassFunction::trivial(25);
    assert_eq!(inner_product(&chi, &one, &m.classes, 51_840).unwrap(), q(1));
    let norm = inner_product(&chi, &chi, &m.classes, 51_840).unwrap();
    assert_eq!(norm, q(orbit_count_on_ordered_pairs(&m.generators) as i64));
    assert_eq!(norm, q(3));
    assert_eq!(inner_product(&one, &one, &m.classes, 51_840).unwrap(), q(1));
    assert!(inner_product(&chi, &ClassFunction::trivial(3), &m.classes, 51_840).is_err());
}

#[test]
fn constituent_characters() {
    let m = common::model();
    let chars: Vec<&ClassFunction> = m.decomposition.constituents.iter().map(|c| &c.character).collect();
    let dims: Vec<usize> = m.decomposition.constituents.iter().map(|c| c.component.dimension).collect();
    for (chi, d) in chars.iter().zip(&dims) {
        assert_eq!(chi.values()[0], q(*d as i64));
        assert!(chi.to_i64().is_some());
        assert_eq!(inner_product(chi, chi, &m.classes, 51_840).unwrap(), q(1));
    }
    assert_eq!(*chars[0], ClassFunction::trivial(25));
    let total = chars[0].add(chars[1]).add(chars[2]);
    assert_eq!(total, permutation_character(&m.classes));
    // distinct irreducibles are orthogonal
    for i in 0..3 {
        for j in i + 1..3 {
            assert!(inner_product(chars[i], chars[j], &m.classes, 51_840).unwrap().is_zero());
        }
    }
    // recompute one directly
    let c20 = &m.component(1).component;
    assert_eq!(&constituent_character(c20, &m.classes, &m.generators).unwrap(), chars[1]);
}

#[test]
fn six_part_is_the_reflection_representation() {
    let m = common::model();
    let refl = reflection_character(&m.lines, &m.classes).unwrap();
    assert_eq!(refl, m.component(-5).character);
    // a reflection acts on K-perp with trace 6 - 2 = 4
    let s = m.generators[0];
    let single = vec![lines27::ConjugacyClass { representative: s, size: 1, cycle_type: s.cycle_type() }];
    assert_eq!(reflection_character(&m.lines, &single).unwrap().values()[0], q(4));
}

#[test]
fn non_commuting_projector_is_rejected() {
    let m = common::model();
    let mut bogus = m.component(1).component.clone();
    bogus.projector = QMatrix::from_fn(27, 27, |i, j| q((i == 0 && j == 0) as i64));
    assert!(constituent_character(&bogus, &m.classes, &m.generators).is_err());
}
