//! All checks of the computation as named pass/fail certificates, in dependency order.

use num_traits::{One, Zero};

use crate::equivalence::{self, Constraint};
use crate::error::Result;
use crate::linalg::{q, rank, QMatrix, QVector, Rational, Subspace};
use crate::model::{Configuration, Model, REFLECTION_EIGENVALUE, RELATION_EIGENVALUE, TRIVIAL_EIGENVALUE};
use crate::picard::{self, pairing, Line, Root, Triangle, MINUS_K};
use crate::rep::{self, ClassFunction};
use crate::weyl_perm::{self, Permutation, WEYL_E6_ORDER};
use crate::N_LINES;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Deliberate corruption of an intermediate result, for exercising failure paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flip entry `(i, j)` of the meeting matrix between 0 and 1.
    FlipMeetingEntry(usize, usize),
}

/// An ordered list of certificates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificates(pub Vec<Certificate>);

impl Certificates {
    pub fn all_passed(&self) -> bool {
        self.0.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Certificate> {
        self.0.iter().find(|c| !c.passed)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Certificate> {
        self.0.iter()
    }

    pub fn extend(&mut self, other: Certificates) {
        self.0.extend(other.0);
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Certificate {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn check_result(&mut self, name: &str, r: Result<(bool, String)>) {
        match r {
            Ok((passed, detail)) => self.check(name, passed, detail),
            Err(e) => self.check(name, false, e.to_string()),
        }
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub certificates: Certificates,
    /// Present when every layer could be built.
    pub model: Option<Model>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.certificates.all_passed()
    }

    pub fn first_failure(&self) -> Option<&Certificate> {
        self.certificates.first_failure()
    }
}

pub fn verify_all() -> Report {
    verify_all_with(None)
}

pub fn verify_all_with(fault: Option<Fault>) -> Report {
    let mut report = Report::default();
    let config = match Configuration::build() {
        Ok(c) => c,
        Err(e) => {
            report.certificates.check("configuration", false, e.to_string());
            return report;
        }
    };
    report
        .certificates
        .extend(geometry_certificates(&config.lines, &config.roots, &config.triangles));
    report.certificates.extend(group_certificates(&config));

    let mut meeting = rep::meeting_matrix(&config.lines);
    if let Some(Fault::FlipMeetingEntry(i, j)) = fault {
        meeting[(i, j)] = Rational::one() - &meeting[(i, j)];
    }
    report.certificates.extend(meeting_certificates(&meeting));

    match Model::from_parts(config, meeting) {
        Ok(model) => {
            report.certificates.extend(decomposition_certificates(&model));
            report.certificates.extend(equivalence_certificates(&model));
            report.model = Some(model);
        }
        Err(e) => report.certificates.check("model_build", false, e.to_string()),
    }
    report
}

pub fn geometry_certificates(lines: &[Line], roots: &[Root], triangles: &[Triangle]) -> Certificates {
    let mut report = Certificates::default();
    report.check("line_count", lines.len() == 27, format!("{} lines", lines.len()));
    report.check(
        "line_numerology",
        lines
            .iter()
            .all(|l| pairing(&l.cls, &l.cls) == -1 && pairing(&l.cls, &picard::K) == -1),
        "every line has self-pairing -1 and K-pairing -1",
    );
    let meet_counts: Vec<usize> = lines
        .iter()
        .map(|a| lines.iter().filter(|b| picard::meets(a, b)).count())
        .collect();
    report.check(
        "lines_meet_ten",
        meet_counts.iter().all(|&m| m == 10),
        format!("meeting counts {:?}", dedup(&meet_counts)),
    );
    report.check("root_count", roots.len() == 72, format!("{} roots", roots.len()));
    let roots_closed = roots.iter().all(|r| {
        roots
            .iter()
            .all(|s| Root::new(picard::reflect(r, s.vec())).is_ok_and(|t| roots.contains(&t)))
    });
    report.check("roots_closed_under_reflection", roots_closed, "s_r(s) is a root for all roots r, s");
    report.check("triangle_count", triangles.len() == 45, format!("{} triangles", triangles.len()));
    report.check(
        "triangles_sum_to_minus_k",
        triangles
            .iter()
            .all(|t| t.members.iter().fold(picard::PicVector::ZERO, |acc, &i| acc + lines[i].cls) == MINUS_K),
        "each triangle's classes add up to -K",
    );
    let per_line: Vec<usize> = (0..N_LINES)
        .map(|i| triangles.iter().filter(|t| t.contains(i)).count())
        .collect();
    report.check(
        "lines_in_five_triangles",
        per_line.iter().all(|&m| m == 5),
        format!("triangles per line {:?}", dedup(&per_line)),
    );
    report
}

pub fn group_certificates(c: &Configuration) -> Certificates {
    let mut report = Certificates::default();
    let lines = &c.lines;
    let gens = &c.generators;
    report.check(
        "generators_are_involutions",
        gens.iter().all(|g| g.order() == 2),
        "each simple reflection has order 2",
    );
    let simple = picard::simple_roots();
    let mut braid_ok = true;
    for i in 0..6 {
        for j in i + 1..6 {
            let expected = if pairing(simple[i].vec(), simple[j].vec()) != 0 { 3 } else { 2 };
            braid_ok &= gens[i].then(&gens[j]).order() == expected;
        }
    }
    report.check("coxeter_braid_relations", braid_ok, "orders of products follow the E6 diagram");
    report.check(
        "generators_preserve_meeting",
        gens.iter().all(|g| {
            (0..N_LINES).all(|i| {
                (0..N_LINES).all(|j| {
                    picard::meets(&lines[i], &lines[j]) == picard::meets(&lines[g.apply(i)], &lines[g.apply(j)])
                })
            })
        }),
        "meet(i, j) = meet(g i, g j) for every generator",
    );
    report.check(
        "bsgs_sifts_generators",
        c.group.verify_generators(),
        format!("base {:?}, basic orbit lengths {:?}", c.group.base(), c.group.basic_orbit_lengths()),
    );
    let order = c.group.order();
    report.check(
        "group_order",
        order == WEYL_E6_ORDER && order == 2u128.pow(7) * 3u128.pow(4) * 5,
        format!("order {order}"),
    );
    report.check("class_count", c.classes.len() == 25, format!("{} classes", c.classes.len()));
    let class_sum: u128 = c.classes.iter().map(|cl| cl.size as u128).sum();
    report.check(
        "class_equation",
        class_sum == order && c.classes.iter().all(|cl| order % cl.size as u128 == 0),
        format!("class sizes sum to {class_sum}, each divides {order}"),
    );
    let orbits = c.group.orbits_on_points();
    report.check("transitive_on_lines", orbits.len() == 1, format!("{} orbit(s) on lines", orbits.len()));
    let orbitals = weyl_perm::orbitals(gens);
    let orbital_pairings: Vec<Vec<i64>> = orbitals
        .iter()
        .map(|o| dedup(&o.iter().map(|&(i, j)| pairing(&lines[i].cls, &lines[j].cls)).collect::<Vec<_>>()))
        .collect();
    report.check(
        "orbitals",
        orbitals.len() == 3 && orbital_pairings.iter().all(|p| p.len() == 1),
        format!("{} orbitals with pairings {orbital_pairings:?}", orbitals.len()),
    );
    report
}

pub fn meeting_certificates(a: &QMatrix) -> Certificates {
    let mut report = Certificates::default();
    let bad = rep::strongly_regular_mismatches(a, 10, 1, 5);
    report.check(
        "strongly_regular_27_10_1_5",
        bad.is_empty(),
        if bad.is_empty() {
            "A^2 = 10 I + A + 5 (J - I - A)".to_string()
        } else {
            format!("{} entries of A^2 disagree, first at {:?}", bad.len(), bad[0])
        },
    );
    let mut problems = Vec::new();
    if !a.is_symmetric() {
        problems.push("not symmetric".to_string());
    }
    if let Some(i) = (0..a.rows()).find(|&i| !a[(i, i)].is_zero()) {
        problems.push(format!("nonzero diagonal at {i}"));
    }
    if let Some(i) = (0..a.rows()).find(|&i| a.row(i).sum() != q(10)) {
        problems.push(format!("row {i} sums to {}", a.row(i).sum()));
    }
    report.check(
        "meeting_matrix_shape",
        problems.is_empty(),
        if problems.is_empty() {
            "symmetric, zero diagonal, row sums 10".to_string()
        } else {
            problems.join("; ")
        },
    );
    report
}

pub fn decomposition_certificates(m: &Model) -> Certificates {
    let mut report = Certificates::default();
    let d = &m.decomposition;
    let spectrum: Vec<(i64, usize)> = d
        .constituents
        .iter()
        .map(|c| (c.component.eigenvalue, c.component.dimension))
        .collect();
    report.check(
        "eigenspace_dimensions",
        spectrum == [(TRIVIAL_EIGENVALUE, 1), (RELATION_EIGENVALUE, 20), (REFLECTION_EIGENVALUE, 6)],
        format!("(eigenvalue, dim) = {spectrum:?}"),
    );
    report.check("decomposition_dims", d.dims() == [1, 6, 20], format!("dims {:?}", d.dims()));
    report.check(
        "burnside_trivial_multiplicity",
        d.trivial_multiplicity.is_one(),
        format!("<chi_perm, 1> = {}", d.trivial_multiplicity),
    );
    report.check(
        "permutation_norm",
        d.permutation_norm == q(3),
        format!("<chi_perm, chi_perm> = {}", d.permutation_norm),
    );
    report.check(
        "constituent_norms",
        d.constituents.iter().all(|c| c.norm.is_one()),
        format!(
            "norms {:?}",
            d.constituents.iter().map(|c| c.norm.to_string()).collect::<Vec<_>>()
        ),
    );
    report.check(
        "trivial_constituent",
        m.component(TRIVIAL_EIGENVALUE).character == ClassFunction::trivial(m.classes.len()),
        "eigenvalue-10 character is trivial",
    );
    report.check_result("projector_algebra", projector_algebra(m));
    report.check_result("reflection_character", reflection_character_matches(m));
    report
}

pub fn equivalence_certificates(m: &Model) -> Certificates {
    let mut report = Certificates::default();

    let tri = equivalence::triangle_matrix(&m.triangles);
    let tri_rank = rank(&tri);
    report.check("triangle_rank", tri_rank == 21, format!("rank {tri_rank}"));
    report.check("v_tet_dim", m.v_tet.dim() == 21, format!("dim {}", m.v_tet.dim()));
    report.check("r_tet_dim", m.r_tet.dim() == 20, format!("dim {}", m.r_tet.dim()));
    let ones: QVector = (0..N_LINES).map(|_| q(1)).collect();
    report.check_result(
        "v_tet_membership",
        (|| {
            let ones_in = m.v_tet.contains(&ones)?;
            let e1_in = m.v_tet.contains(&QVector::unit(N_LINES, 0))?;
            Ok((ones_in && !e1_in, format!("all-ones in V_tet: {ones_in}; e1 in V_tet: {e1_in}")))
        })(),
    );
    let eigen1 = &m.component(RELATION_EIGENVALUE).component.subspace;
    report.check(
        "relation_space_constructions_agree",
        m.r_tet == m.picard_kernel && m.r_tet == *eigen1 && m.r_tet == m.theorem.survivor.subspace,
        "V_tet ∩ sum-zero = ker(class map) = eigenvalue-1 space = theorem survivor",
    );
    let class_map = equivalence::picard_class_map(&m.lines);
    let minus_k: QVector = MINUS_K.0.iter().map(|&x| q(x)).collect();
    report.check(
        "triangles_map_to_minus_k",
        equivalence::triangle_vectors(&m.triangles)
            .iter()
            .all(|v| class_map.mul_vec(v) == minus_k),
        "class map sends every triangle vector to -K",
    );
    report.check(
        "triangles_permuted_by_generators",
        m.generators.iter().all(|g| {
            m.triangles.iter().all(|t| {
                let image = picard::Triangle::new(t.members.map(|i| g.apply(i)));
                m.triangles.binary_search(&image).is_ok()
            })
        }),
        "each generator permutes the 45 triangles",
    );
    report.check_result("quotient_character", quotient_character_matches(m));

    let dims: Vec<usize> = m.lattice.elements.iter().map(|e| e.subspace.dim()).collect();
    let mut sorted = dims.clone();
    sorted.sort_unstable();
    report.check(
        "invariant_lattice",
        sorted == [0, 1, 6, 7, 20, 21, 26, 27],
        format!("element dims {dims:?}"),
    );
    report.check_result("invariant_lattice_closed", m.lattice.is_closed().map(|ok| (ok, "closed under sum and intersection".into())));
    report.check(
        "v_tet_in_lattice",
        m.lattice.find(&m.v_tet).map(|e| e.parts.clone()) == Some(vec![1, 20]),
        "V_tet is the sum of the 1- and 20-dimensional parts",
    );
    let eliminated: Vec<String> = m
        .theorem
        .audit
        .iter()
        .filter_map(|a| a.eliminated_by.map(|c| format!("{}:{}", a.label, c.tag())))
        .collect();
    report.check(
        "theorem_survivor",
        m.theorem.survivor.subspace.dim() == 20,
        format!("survivor {} of dim {}; eliminated {eliminated:?}", m.theorem.survivor.label(), m.theorem.survivor.subspace.dim()),
    );
    report.check_result("theorem_without_pair_constraint", survivors_without_d(m));
    report.check_result("theorem_pair_independence", pair_independence(m));
    report.check_result(
        "survivor_contains_no_basis_vector",
        (|| {
            for i in 0..N_LINES {
                if m.theorem.survivor.subspace.contains(&QVector::unit(N_LINES, i))? {
                    return Ok((false, format!("e_{i} lies in the survivor")));
                }
            }
            Ok((true, "no e_i in the survivor".into()))
        })(),
    );
    let c = &m.corollary;
    report.check(
        "corollary",
        c.passed(),
        format!(
            "{} zero projections, {} proportional pairs of {}, {} triangles not annihilated",
            c.zero_projections.len(),
            c.proportional_pairs.len(),
            c.pairs_checked,
            c.triangles_not_annihilated.len()
        ),
    );
    report.check(
        "tautological_ring",
        m.taut.total_dim() == 8 && m.taut.graded_dims == [1, 1, 1, 2, 2, 1],
        format!("total {} graded {:?}", m.taut.total_dim(), m.taut.graded_dims),
    );
    report
}

fn projector_algebra(m: &Model) -> Result<(bool, String)> {
    let n = N_LINES;
    let comps: Vec<&rep::IsotypicComponent> = m.decomposition.constituents.iter().map(|c| &c.component).collect();
    let mut sum = QMatrix::zeros(n, n);
    let mut weighted = QMatrix::zeros(n, n);
    for (i, c) in comps.iter().enumerate() {
        let p = &c.projector;
        if &(p * p) != p {
            return Ok((false, format!("P_{} is not idempotent", c.eigenvalue)));
        }
        if !p.is_symmetric() {
            return Ok((false, format!("P_{} is not symmetric", c.eigenvalue)));
        }
        if p.trace() != q(c.dimension as i64) {
            return Ok((false, format!("trace P_{} = {}", c.eigenvalue, p.trace())));
        }
        if let Some(g) = m.generators.iter().find(|g| !rep::commutes_with(p, g)) {
            return Ok((false, format!("P_{} does not commute with {g:?}", c.eigenvalue)));
        }
        for other in &comps[i + 1..] {
            if !(p * &other.projector).is_zero() {
                return Ok((false, format!("P_{} P_{} != 0", c.eigenvalue, other.eigenvalue)));
            }
        }
        let image = Subspace::from_spanning(n, &p.row_vectors())?;
        if image != c.subspace {
            return Ok((false, format!("image of P_{} is not its eigenspace", c.eigenvalue)));
        }
        sum = &sum + p;
        weighted = &weighted + &p.scale(&q(c.eigenvalue));
    }
    if sum != QMatrix::identity(n) {
        return Ok((false, "projectors do not sum to I".into()));
    }
    if weighted != m.meeting {
        return Ok((false, "sum of eigenvalue * projector differs from A".into()));
    }
    Ok((true, "idempotent, symmetric, orthogonal, complete, equivariant; A = sum lambda P".into()))
}

fn reflection_character_matches(m: &Model) -> Result<(bool, String)> {
    let chi6 = &m.component(REFLECTION_EIGENVALUE).character;
    let refl = rep::reflection_character(&m.lines, &m.classes)?;
    Ok((chi6 == &refl, "eigenvalue -5 character = trace on K-perp".into()))
}

/// Trace of `g` on an invariant subspace, read off the canonical basis.
pub fn trace_on_subspace(s: &Subspace, g: &Permutation) -> Result<Rational> {
    let mut tr = Rational::zero();
    for (k, b) in s.basis_vectors().iter().enumerate() {
        let coords = s
            .coordinates(&equivalence::permute_vector(g, b))?
            .ok_or_else(|| crate::Error::inconsistent("subspace is not invariant"))?;
        tr += &coords[k];
    }
    Ok(tr)
}

/// Character of `Q^27 / V_tet`, compared with the 6-part character.
pub fn quotient_character(m: &Model) -> Result<ClassFunction> {
    let values = m
        .classes
        .iter()
        .map(|c| {
            let perm = q(c.representative.fixed_points() as i64);
            Ok(perm - trace_on_subspace(&m.v_tet, &c.representative)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction(values))
}

fn quotient_character_matches(m: &Model) -> Result<(bool, String)> {
    let quot = quotient_character(m)?;
    let codim = N_LINES - m.v_tet.dim();
    Ok((
        codim == 6 && quot == m.component(REFLECTION_EIGENVALUE).character,
        format!("dim Q^27/V_tet = {codim}; its character equals the 6-part character"),
    ))
}

fn survivors_without_d(m: &Model) -> Result<(bool, String)> {
    let ctx = m.filter_context();
    let s = ctx.survivors(
        &m.lattice.elements,
        &[
            Constraint::ContainsTriangleRelations,
            Constraint::MonodromyInvariant,
            Constraint::AvoidsDegreeZeroDirection,
        ],
    )?;
    let labels: Vec<String> = s.iter().map(|e| e.label()).collect();
    Ok((s.len() == 2, format!("survivors without (d): {labels:?}")))
}

fn pair_independence(m: &Model) -> Result<(bool, String)> {
    let ctx = m.filter_context();
    let base = ctx.survivors(
        &m.lattice.elements,
        &[
            Constraint::ContainsTriangleRelations,
            Constraint::MonodromyInvariant,
            Constraint::AvoidsDegreeZeroDirection,
        ],
    )?;
    for i in 0..N_LINES {
        for j in i + 1..N_LINES {
            let diff = &QVector::unit(N_LINES, i) - &QVector::unit(N_LINES, j);
            let mut left = Vec::new();
            for e in &base {
                if !e.subspace.contains(&diff)? {
                    left.push(*e);
                }
            }
            if left.len() != 1 || left[0].subspace != m.theorem.survivor.subspace {
                return Ok((false, format!("pair ({i}, {j}) gives a different survivor set")));
            }
        }
    }
    Ok((true, "every pair e_i - e_j yields the same survivor".into()))
}

fn dedup<T: Ord + Clone>(xs: &[T]) -> Vec<T> {
    let mut v = xs.to_vec();
    v.sort();
    v.dedup();
    v
}
