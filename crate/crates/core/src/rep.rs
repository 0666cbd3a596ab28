//! The 27-dimensional permutation representation of W(E6).
//!
//! The meeting matrix `A` of the lines lies in the commutant of the action.
//! Its eigenspaces are the isotypic components; their projectors come from
//! Lagrange interpolation in `A`, and their characters from traces against
//! permutation matrices.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{kernel, q, to_i64, QMatrix, Rational, Subspace};
use crate::picard::{pairing, Line, PicVector, K};
use crate::weyl_perm::{ConjugacyClass, Permutation};
use crate::N_LINES;

/// `A[i][j] = 1` iff lines `i` and `j` meet.
pub fn meeting_matrix(lines: &[Line]) -> QMatrix {
    QMatrix::from_fn(lines.len(), lines.len(), |i, j| {
        q((pairing(&lines[i].cls, &lines[j].cls) == 1) as i64)
    })
}

/// The matrix sending `e_i` to `e_{g(i)}`.
pub fn permutation_matrix(g: &Permutation) -> QMatrix {
    QMatrix::from_fn(N_LINES, N_LINES, |i, j| q((g.apply(j) == i) as i64))
}

pub fn commutes_with(m: &QMatrix, g: &Permutation) -> bool {
    let pm = permutation_matrix(g);
    &pm * m == m * &pm
}

/// `A^2 = k I + lambda A + mu (J - I - A)`, checked entry by entry.
pub fn is_strongly_regular(a: &QMatrix, k: i64, lambda: i64, mu: i64) -> bool {
    a.rows() == a.cols() && strongly_regular_mismatches(a, k, lambda, mu).is_empty()
}

/// Entries `(i, j)` where `A^2` differs from the strongly regular prediction,
/// or where `A` is not a 0/1 matrix.
pub fn strongly_regular_mismatches(a: &QMatrix, k: i64, lambda: i64, mu: i64) -> Vec<(usize, usize)> {
    let n = a.rows();
    assert_eq!(a.cols(), n, "strong regularity of a non-square matrix");
    let a2 = a * a;
    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j {
                Some(q(k))
            } else if a[(i, j)].is_one() {
                Some(q(lambda))
            } else if a[(i, j)].is_zero() {
                Some(q(mu))
            } else {
                None
            };
            if expected.as_ref() != Some(&a2[(i, j)]) {
                bad.push((i, j));
            }
        }
    }
    bad
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicComponent {
    pub eigenvalue: i64,
    pub dimension: usize,
    pub projector: QMatrix,
    pub subspace: Subspace,
}

/// Eigenspaces of a symmetric integer matrix with integral spectrum, largest eigenvalue first.
///
/// Candidates are the integers within the Gershgorin bound; the kernel
/// dimensions must add up to the size of the matrix.
pub fn spectral_decomposition(a: &QMatrix) -> Result<Vec<IsotypicComponent>> {
    let n = a.rows();
    if a.cols() != n || !a.is_symmetric() {
        return Err(Error::UnsupportedInput("spectral decomposition needs a symmetric matrix".into()));
    }
    let ints = a
        .to_i64_rows()
        .ok_or_else(|| Error::UnsupportedInput("spectral decomposition needs integer entries".into()))?;
    let bound = ints
        .iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<i64>())
        .max()
        .unwrap_or(0);

    let mut spaces = Vec::new();
    for lambda in (-bound..=bound).rev() {
        let space = kernel(&a.shift(&q(lambda)));
        if space.dim() > 0 {
            spaces.push((lambda, space));
        }
    }
    let total: usize = spaces.iter().map(|(_, s)| s.dim()).sum();
    if total != n {
        return Err(Error::UnsupportedInput(format!(
            "spectrum is not integral: integer eigenspaces have total dimension {total} of {n}"
        )));
    }

    let eigenvalues: Vec<i64> = spaces.iter().map(|(l, _)| *l).collect();
    let components = spaces
        .into_iter()
        .map(|(lambda, subspace)| {
            let mut projector = QMatrix::identity(n);
            for &mu in eigenvalues.iter().filter(|&&mu| mu != lambda) {
                let factor = a.shift(&q(mu)).scale(&Rational::new(1.into(), (lambda - mu).into()));
                projector = &projector * &factor;
            }
            IsotypicComponent {
                eigenvalue: lambda,
                dimension: subspace.dim(),
                projector,
                subspace,
            }
        })
        .collect();
    Ok(components)
}

/// A function on conjugacy classes, in the canonical class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction(pub Vec<Rational>);

impl ClassFunction {
    pub fn trivial(n_classes: usize) -> Self {
        ClassFunction(vec![Rational::one(); n_classes])
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(to_i64).collect()
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Number of fixed points of each class representative.
pub fn permutation_character(classes: &[ConjugacyClass]) -> ClassFunction {
    ClassFunction(
        classes
            .iter()
            .map(|c| q(c.representative.fixed_points() as i64))
            .collect(),
    )
}

/// `(1/|G|) sum_c |c| f1(c) f2(c)`. Characters here are rational, so no conjugation.
pub fn inner_product(
    f1: &ClassFunction,
    f2: &ClassFunction,
    classes: &[ConjugacyClass],
    group_order: u128,
) -> Result<Rational> {
    for f in [f1, f2] {
        if f.len() != classes.len() {
            return Err(Error::DimensionMismatch {
                expected: classes.len(),
                found: f.len(),
            });
        }
    }
    let sum = classes
        .iter()
        .zip(f1.0.iter().zip(&f2.0))
        .fold(Rational::zero(), |acc, (c, (a, b))| acc + q(c.size as i64) * a * b);
    Ok(sum / Rational::from_integer(group_order.into()))
}

/// `trace(P M(g))` on each class representative `g`.
///
/// The projector must commute with every generator and every value must be an integer.
pub fn constituent_character(
    comp: &IsotypicComponent,
    classes: &[ConjugacyClass],
    generators: &[Permutation],
) -> Result<ClassFunction> {
    if let Some(g) = generators.iter().find(|g| !commutes_with(&comp.projector, g)) {
        return Err(Error::inconsistent(format!(
            "projector for eigenvalue {} does not commute with {g:?}",
            comp.eigenvalue
        )));
    }
    let values = classes
        .iter()
        .map(|c| {
            let g = &c.representative;
            // (P M(g))[i][i] = P[i][g(i)]
            let value = (0..N_LINES).fold(Rational::zero(), |acc, i| acc + &comp.projector[(i, g.apply(i))]);
            if !value.is_integer() {
                return Err(Error::inconsistent(format!(
                    "character of eigenvalue-{} component is {value} on class of {g:?}",
                    comp.eigenvalue
                )));
            }
            Ok(value)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction(values))
}

/// The linear map of `Pic ⊗ Q` induced by a line permutation, in the `(h, e1..e6)` basis.
///
/// Built from the seven lines `E1, ..., E6, F12`, whose classes form a basis.
pub fn picard_action(lines: &[Line], g: &Permutation) -> Result<QMatrix> {
    let basis_lines = [0, 1, 2, 3, 4, 5, 6];
    let as_column_matrix = |classes: Vec<PicVector>| {
        QMatrix::from_fn(7, 7, |i, j| q(classes[j].0[i]))
    };
    let source = as_column_matrix(basis_lines.iter().map(|&i| lines[i].cls).collect());
    let target = as_column_matrix(basis_lines.iter().map(|&i| lines[g.apply(i)].cls).collect());
    let inv = source
        .inverse()
        .ok_or_else(|| Error::inconsistent("basis lines are dependent"))?;
    let t = &target * &inv;
    for l in lines {
        let v: Vec<Rational> = l.cls.0.iter().map(|&x| q(x)).collect();
        let image = t.mul_vec(&v.into());
        let expected: Vec<Rational> = lines[g.apply(l.index)].cls.0.iter().map(|&x| q(x)).collect();
        if image.entries() != expected.as_slice() {
            return Err(Error::inconsistent(format!(
                "{g:?} is not induced by a linear map of the Picard lattice (fails at {})",
                l.label
            )));
        }
    }
    Ok(t)
}

/// Character of W on `K^⊥ ⊗ Q`: trace on `Pic ⊗ Q` minus the fixed line `Q K`.
pub fn reflection_character(lines: &[Line], classes: &[ConjugacyClass]) -> Result<ClassFunction> {
    let k: Vec<Rational> = K.0.iter().map(|&x| q(x)).collect();
    let k = crate::linalg::QVector::from(k);
    let values = classes
        .iter()
        .map(|c| {
            let t = picard_action(lines, &c.representative)?;
            if t.mul_vec(&k) != k {
                return Err(Error::inconsistent("Picard action moves K"));
            }
            Ok(t.trace() - Rational::one())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction(values))
}

/// One isotypic component with its certified character.
#[derive(Clone, Debug)]
pub struct Constituent {
    pub component: IsotypicComponent,
    pub character: ClassFunction,
    pub norm: Rational,
}

/// The certified decomposition of the permutation representation.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Largest eigenvalue first.
    pub constituents: Vec<Constituent>,
    pub permutation_character: ClassFunction,
    /// `<chi_perm, 1>`.
    pub trivial_multiplicity: Rational,
    /// `<chi_perm, chi_perm>`.
    pub permutation_norm: Rational,
}

impl Decomposition {
    /// Constituent dimensions, sorted ascending.
    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.constituents.iter().map(|c| c.component.dimension).collect();
        d.sort_unstable();
        d
    }

    pub fn by_eigenvalue(&self, lambda: i64) -> Option<&Constituent> {
        self.constituents.iter().find(|c| c.component.eigenvalue == lambda)
    }
}

/// Decomposes the permutation representation using the spectrum of `meeting`.
///
/// Certificates: `<chi_perm, 1>` equals the number of point orbits,
/// `<chi_perm, chi_perm>` equals the number of orbitals and of components,
/// every constituent has norm 1, and the constituents add up to `chi_perm`.
pub fn decompose(
    meeting: &QMatrix,
    classes: &[ConjugacyClass],
    generators: &[Permutation],
    group_order: u128,
) -> Result<Decomposition> {
    let components = spectral_decomposition(meeting)?;
    let chi = permutation_character(classes);
    let trivial = ClassFunction::trivial(classes.len());
    let trivial_multiplicity = inner_product(&chi, &trivial, classes, group_order)?;
    let permutation_norm = inner_product(&chi, &chi, classes, group_order)?;

    let point_orbits = crate::weyl_perm::orbits_on_points(generators).len();
    if trivial_multiplicity != q(point_orbits as i64) {
        return Err(Error::certificate(
            "burnside",
            format!("<chi_perm, 1> = {trivial_multiplicity}, but there are {point_orbits} orbits"),
        ));
    }
    let orbitals = crate::weyl_perm::orbit_count_on_ordered_pairs(generators);
    if permutation_norm != q(orbitals as i64) {
        return Err(Error::certificate(
            "orbital_count",
            format!("<chi_perm, chi_perm> = {permutation_norm}, but there are {orbitals} orbitals"),
        ));
    }
    if permutation_norm != q(components.len() as i64) {
        return Err(Error::certificate(
            "multiplicity_free",
            format!(
                "<chi_perm, chi_perm> = {permutation_norm}, but the meeting matrix has {} eigenspaces",
                components.len()
            ),
        ));
    }

    let mut constituents = Vec::with_capacity(components.len());
    let mut total = ClassFunction(vec![Rational::zero(); classes.len()]);
    for component in components {
        let character = constituent_character(&component, classes, generators)?;
        let norm = inner_product(&character, &character, classes, group_order)?;
        if !norm.is_one() {
            return Err(Error::certificate(
                "irreducible",
                format!("eigenvalue-{} constituent has norm {norm}", component.eigenvalue),
            ));
        }
        total = total.add(&character);
        constituents.push(Constituent {
            component,
            character,
            norm,
        });
    }
    if total != chi {
        return Err(Error::certificate(
            "character_sum",
            "constituent characters do not add up to the permutation character",
        ));
    }
    Ok(Decomposition {
        constituents,
        permutation_character: chi,
        trivial_multiplicity,
        permutation_norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_one_component() {
        let comps = spectral_decomposition(&QMatrix::identity(27)).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].eigenvalue, comps[0].dimension), (1, 27));
        assert_eq!(comps[0].projector, QMatrix::identity(27));
    }

    #[test]
    fn all_ones_matrix() {
        let j = QMatrix::from_fn(27, 27, |_, _| q(1));
        let comps = spectral_decomposition(&j).unwrap();
        let spec: Vec<(i64, usize)> = comps.iter().map(|c| (c.eigenvalue, c.dimension)).collect();
        assert_eq!(spec, vec![(27, 1), (0, 26)]);
        assert_eq!(comps[0].projector, j.scale(&Rational::new(1.into(), 27.into())));
    }

    #[test]
    fn non_integral_spectrum_is_refused() {
        // eigenvalues of [[1,1],[1,0]] are the golden ratio and its conjugate
        let m = QMatrix::from_ints(&[vec![1, 1], vec![1, 0]]);
        assert!(matches!(spectral_decomposition(&m), Err(Error::UnsupportedInput(_))));
        let asym = QMatrix::from_ints(&[vec![1, 1], vec![0, 1]]);
        assert!(spectral_decomposition(&asym).is_err());
    }

    #[test]
    fn strongly_regular_detects_a_flip() {
        // the 5-cycle is strongly regular with parameters (5, 2, 0, 1)
        let c5 = QMatrix::from_fn(5, 5, |i, j| q(((i + 5 - j) % 5 == 1 || (j + 5 - i) % 5 == 1) as i64));
        assert!(is_strongly_regular(&c5, 2, 0, 1));
        let mut broken = c5.clone();
        broken[(0, 2)] = q(1);
        assert!(!is_strongly_regular(&broken, 2, 0, 1));
    }
}
