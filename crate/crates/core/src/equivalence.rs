//! Linear model of the relations among the 27 Abel-Prym curve classes.
//!
//! Coordinates are indexed by the 27 lines. The triangle vectors span
//! `V_tet`; relations inside it are its coordinate-sum-zero slice. The
//! W-invariant subspaces are the eight sums of isotypic components, and the
//! relation space is singled out among them by four constraints.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{kernel, q, span_in, QMatrix, QVector, Rational, Subspace};
use crate::picard::{Line, Triangle};
use crate::rep::IsotypicComponent;
use crate::weyl_perm::Permutation;
use crate::N_LINES;

pub const V_TET_DIM: usize = 21;
pub const R_TET_DIM: usize = 20;

/// One 0/1 vector per triangle, with 1's at its three lines.
pub fn triangle_vectors(triangles: &[Triangle]) -> Vec<QVector> {
    triangles
        .iter()
        .map(|t| (0..N_LINES).map(|i| q(t.contains(i) as i64)).collect())
        .collect()
}

pub fn triangle_matrix(triangles: &[Triangle]) -> QMatrix {
    QMatrix::from_rows(N_LINES, &triangle_vectors(triangles)).expect("triangle vectors have length 27")
}

fn expect_dim(name: &str, s: Subspace, dim: usize) -> Result<Subspace> {
    if s.dim() != dim {
        return Err(Error::inconsistent(format!("{name} has dimension {}, expected {dim}", s.dim())));
    }
    Ok(s)
}

/// Span of the triangle vectors. Must have dimension 21.
pub fn v_tet(triangles: &[Triangle]) -> Result<Subspace> {
    expect_dim("V_tet", span_in(N_LINES, &triangle_vectors(triangles))?, V_TET_DIM)
}

/// `V_tet ∩ {sum = 0}`. Must have dimension 20.
pub fn r_tet(v_tet: &Subspace) -> Result<Subspace> {
    expect_dim("R_tet", v_tet.intersect(&Subspace::sum_zero(N_LINES))?, R_TET_DIM)
}

/// The 7x27 matrix whose columns are the line classes.
pub fn picard_class_map(lines: &[Line]) -> QMatrix {
    QMatrix::from_fn(7, lines.len(), |i, j| q(lines[j].cls.0[i]))
}

pub fn picard_class_map_kernel(lines: &[Line]) -> Subspace {
    kernel(&picard_class_map(lines))
}

pub fn permute_vector(g: &Permutation, v: &QVector) -> QVector {
    let mut out = vec![Rational::zero(); v.len()];
    for (i, x) in v.entries().iter().enumerate() {
        out[g.apply(i)] = x.clone();
    }
    out.into()
}

/// True when every generator maps the subspace into itself.
pub fn is_invariant(s: &Subspace, generators: &[Permutation]) -> Result<bool> {
    for g in generators {
        for b in s.basis_vectors() {
            if !s.contains(&permute_vector(g, &b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeElement {
    /// Dimensions of the isotypic components summed, in component order.
    pub parts: Vec<usize>,
    pub subspace: Subspace,
}

impl LatticeElement {
    pub fn label(&self) -> String {
        if self.parts.is_empty() {
            return "0".to_string();
        }
        self.parts.iter().map(usize::to_string).collect::<Vec<_>>().join("+")
    }
}

/// The sums of all subsets of the isotypic components.
#[derive(Clone, Debug)]
pub struct InvariantSubspaceLattice {
    pub elements: Vec<LatticeElement>,
}

impl InvariantSubspaceLattice {
    pub fn find(&self, s: &Subspace) -> Option<&LatticeElement> {
        self.elements.iter().find(|e| &e.subspace == s)
    }

    /// Every pairwise sum and intersection is again an element.
    pub fn is_closed(&self) -> Result<bool> {
        for a in &self.elements {
            for b in &self.elements {
                if self.find(&a.subspace.sum(&b.subspace)?).is_none()
                    || self.find(&a.subspace.intersect(&b.subspace)?).is_none()
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Element `mask` is the sum of the components whose bit is set.
pub fn invariant_subspace_lattice(
    components: &[IsotypicComponent],
    generators: &[Permutation],
) -> Result<InvariantSubspaceLattice> {
    let n = components.len();
    let mut elements = Vec::with_capacity(1 << n);
    for mask in 0..1usize << n {
        let chosen: Vec<&IsotypicComponent> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| &components[b]).collect();
        let mut subspace = Subspace::zero(N_LINES);
        for c in &chosen {
            subspace = subspace.sum(&c.subspace)?;
        }
        if !is_invariant(&subspace, generators)? {
            return Err(Error::inconsistent(format!(
                "sum of components {:?} is not invariant",
                chosen.iter().map(|c| c.dimension).collect::<Vec<_>>()
            )));
        }
        elements.push(LatticeElement {
            parts: chosen.iter().map(|c| c.dimension).collect(),
            subspace,
        });
    }
    Ok(InvariantSubspaceLattice { elements })
}

/// The constraints that cut the invariant lattice down to the relation space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constraint {
    /// (a) contains the triangle relations `R_tet`.
    ContainsTriangleRelations,
    /// (b) is mapped into itself by every generator.
    MonodromyInvariant,
    /// (c) does not contain the all-ones direction.
    AvoidsDegreeZeroDirection,
    /// (d) does not contain `e_i - e_j` for the chosen pair.
    SeparatesPair,
}

impl Constraint {
    pub const ALL: [Constraint; 4] = [
        Constraint::ContainsTriangleRelations,
        Constraint::MonodromyInvariant,
        Constraint::AvoidsDegreeZeroDirection,
        Constraint::SeparatesPair,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Constraint::ContainsTriangleRelations => "a",
            Constraint::MonodromyInvariant => "b",
            Constraint::AvoidsDegreeZeroDirection => "c",
            Constraint::SeparatesPair => "d",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Constraint::ContainsTriangleRelations => "contains_triangle_relations",
            Constraint::MonodromyInvariant => "monodromy_invariant",
            Constraint::AvoidsDegreeZeroDirection => "avoids_degree_zero_direction",
            Constraint::SeparatesPair => "separates_pair",
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.tag(), self.name())
    }
}

/// Inputs shared by all constraints.
pub struct FilterContext<'a> {
    pub r_tet: &'a Subspace,
    pub generators: &'a [Permutation],
    /// Lines whose curve classes must stay separated, for (d).
    pub separated_pair: (usize, usize),
}

impl FilterContext<'_> {
    pub fn holds(&self, c: Constraint, s: &Subspace) -> Result<bool> {
        match c {
            Constraint::ContainsTriangleRelations => s.contains_subspace(self.r_tet),
            Constraint::MonodromyInvariant => is_invariant(s, self.generators),
            Constraint::AvoidsDegreeZeroDirection => {
                Ok(!s.contains(&(0..N_LINES).map(|_| q(1)).collect())?)
            }
            Constraint::SeparatesPair => {
                let (i, j) = self.separated_pair;
                let diff = &QVector::unit(N_LINES, i) - &QVector::unit(N_LINES, j);
                Ok(!s.contains(&diff)?)
            }
        }
    }

    /// The candidates satisfying every constraint in `constraints`.
    pub fn survivors<'s>(&self, candidates: &'s [LatticeElement], constraints: &[Constraint]) -> Result<Vec<&'s LatticeElement>> {
        let mut out = Vec::new();
        for cand in candidates {
            let mut ok = true;
            for &c in constraints {
                if !self.holds(c, &cand.subspace)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(cand);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditEntry {
    pub label: String,
    pub dim: usize,
    /// First constraint (in `a, b, c, d` order) the candidate fails.
    pub eliminated_by: Option<Constraint>,
}

#[derive(Clone, Debug)]
pub struct TheoremOutcome {
    pub survivor: LatticeElement,
    pub audit: Vec<AuditEntry>,
}

/// Runs all four constraints over the lattice and returns the unique survivor.
pub fn theorem_assembly(lattice: &InvariantSubspaceLattice, ctx: &FilterContext<'_>) -> Result<TheoremOutcome> {
    let mut audit = Vec::with_capacity(lattice.elements.len());
    let mut survivors = Vec::new();
    for cand in &lattice.elements {
        let mut eliminated_by = None;
        for c in Constraint::ALL {
            if !ctx.holds(c, &cand.subspace)? {
                eliminated_by = Some(c);
                break;
            }
        }
        if eliminated_by.is_none() {
            survivors.push(cand);
        }
        audit.push(AuditEntry {
            label: cand.label(),
            dim: cand.subspace.dim(),
            eliminated_by,
        });
    }
    match survivors.as_slice() {
        [one] => Ok(TheoremOutcome {
            survivor: (*one).clone(),
            audit,
        }),
        many => Err(Error::inconsistent(format!(
            "theorem filter left {} survivors: {:?}",
            many.len(),
            many.iter().map(|e| e.label()).collect::<Vec<_>>()
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    /// Lines whose six-part projection vanishes (should be empty).
    pub zero_projections: Vec<usize>,
    /// Unordered pairs with proportional projections (should be empty).
    pub proportional_pairs: Vec<(usize, usize)>,
    pub pairs_checked: usize,
    /// Triangles not annihilated by the six-part projector (should be empty).
    pub triangles_not_annihilated: Vec<Triangle>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.zero_projections.is_empty()
            && self.proportional_pairs.is_empty()
            && self.triangles_not_annihilated.is_empty()
    }
}

/// Checks the degree-2 model `P e_i` for the six-dimensional projector `P`.
pub fn corollary_checks(six_part_projector: &QMatrix, triangles: &[Triangle]) -> CorollaryReport {
    let projections: Vec<QVector> = (0..N_LINES).map(|i| six_part_projector.column(i)).collect();
    let zero_projections = (0..N_LINES).filter(|&i| projections[i].is_zero()).collect();
    let mut proportional_pairs = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..N_LINES {
        for j in i + 1..N_LINES {
            pairs_checked += 1;
            if projections[i].is_proportional(&projections[j]) {
                proportional_pairs.push((i, j));
            }
        }
    }
    let triangles_not_annihilated = triangles
        .iter()
        .zip(triangle_vectors(triangles))
        .filter(|(_, v)| !six_part_projector.mul_vec(v).is_zero())
        .map(|(t, _)| *t)
        .collect();
    CorollaryReport {
        zero_projections,
        proportional_pairs,
        pairs_checked,
        triangles_not_annihilated,
    }
}

/// Standard monomials `x1^a x3^b` of a monomial ideal, graded by `deg x1 = 1`, `deg x3 = 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautMonomialBasis {
    pub monomials: Vec<(u32, u32)>,
    /// `graded_dims[d]` counts monomials of degree `d`.
    pub graded_dims: Vec<usize>,
}

impl TautMonomialBasis {
    pub fn total_dim(&self) -> usize {
        self.monomials.len()
    }
}

pub const TAUT_IDEAL: [(u32, u32); 3] = [(6, 0), (0, 2), (2, 1)];
pub const TAUT_WEIGHTS: (u32, u32) = (1, 3);

/// Monomials not divisible by any generator. The ideal must contain a pure
/// power of each variable, which bounds the search.
pub fn standard_monomials(ideal: &[(u32, u32)], weights: (u32, u32)) -> Result<TautMonomialBasis> {
    let bound_a = ideal.iter().filter(|g| g.1 == 0).map(|g| g.0).min();
    let bound_b = ideal.iter().filter(|g| g.0 == 0).map(|g| g.1).min();
    let (Some(bound_a), Some(bound_b)) = (bound_a, bound_b) else {
        return Err(Error::UnsupportedInput("ideal needs a pure power of each variable".into()));
    };
    let mut monomials = Vec::new();
    for b in 0..bound_b {
        for a in 0..bound_a {
            if !ideal.iter().any(|&(ga, gb)| a >= ga && b >= gb) {
                monomials.push((a, b));
            }
        }
    }
    monomials.sort_by_key(|&(a, b)| (a * weights.0 + b * weights.1, b, a));
    let top = monomials.iter().map(|&(a, b)| a * weights.0 + b * weights.1).max().unwrap_or(0);
    let mut graded_dims = vec![0; top as usize + 1];
    for &(a, b) in &monomials {
        graded_dims[(a * weights.0 + b * weights.1) as usize] += 1;
    }
    Ok(TautMonomialBasis {
        monomials,
        graded_dims,
    })
}

/// Basis of `Q[x1, x3] / (x1^6, x3^2, x1^2 x3)`.
pub fn taut_ring_basis() -> TautMonomialBasis {
    standard_monomials(&TAUT_IDEAL, TAUT_WEIGHTS).expect("the ideal has pure powers")
}

pub fn monomial_name((a, b): (u32, u32)) -> String {
    let part = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let s: Vec<String> = [part("x1", a), part("x3", b)].into_iter().filter(|p| !p.is_empty()).collect();
    if s.is_empty() {
        "1".to_string()
    } else {
        s.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taut_ring_small_facts() {
        let t = taut_ring_basis();
        assert_eq!(t.total_dim(), 8);
        assert!(!t.monomials.contains(&(2, 1)));
        assert_eq!(t.graded_dims, vec![1, 1, 1, 2, 2, 1]);
        assert_eq!(monomial_name((1, 1)), "x1*x3");
        assert_eq!(monomial_name((0, 0)), "1");
        assert_eq!(monomial_name((5, 0)), "x1^5");
    }

    #[test]
    fn ideal_without_pure_powers_is_refused() {
        assert!(standard_monomials(&[(1, 1)], (1, 1)).is_err());
    }

    #[test]
    fn permute_vector_moves_coordinates() {
        let g = Permutation::from_cycles(&[&[0, 1, 2]]).unwrap();
        let v = permute_vector(&g, &QVector::unit(N_LINES, 0));
        assert_eq!(v, QVector::unit(N_LINES, 1));
    }
}
