use crate::equivalence::{
    self, CorollaryReport, FilterContext, InvariantSubspaceLattice, TautMonomialBasis, TheoremOutcome,
};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Subspace};
use crate::picard::{self, Line, Root, Triangle};
use crate::rep::{self, Decomposition};
use crate::weyl_perm::{self, ConjugacyClass, PermGroup, Permutation};

/// Eigenvalues of the meeting matrix on the 1-, 20- and 6-dimensional parts.
pub const TRIVIAL_EIGENVALUE: i64 = 10;
pub const RELATION_EIGENVALUE: i64 = 1;
pub const REFLECTION_EIGENVALUE: i64 = -5;

/// Every object of the computation, built once in dependency order.
#[derive(Clone, Debug)]
pub struct Model {
    pub lines: Vec<Line>,
    pub roots: Vec<Root>,
    pub triangles: Vec<Triangle>,
    pub generators: Vec<Permutation>,
    pub group: PermGroup,
    pub classes: Vec<ConjugacyClass>,
    pub meeting: QMatrix,
    pub decomposition: Decomposition,
    pub v_tet: Subspace,
    pub r_tet: Subspace,
    pub picard_kernel: Subspace,
    pub lattice: InvariantSubspaceLattice,
    pub theorem: TheoremOutcome,
    pub corollary: CorollaryReport,
    pub taut: TautMonomialBasis,
}

/// The lines, roots, triangles and group, which do not depend on the meeting matrix.
#[derive(Clone, Debug)]
pub struct Configuration {
    pub lines: Vec<Line>,
    pub roots: Vec<Root>,
    pub triangles: Vec<Triangle>,
    pub generators: Vec<Permutation>,
    pub group: PermGroup,
    pub classes: Vec<ConjugacyClass>,
}

impl Configuration {
    pub fn build() -> Result<Configuration> {
        let lines = picard::enumerate_lines()?;
        let roots = picard::enumerate_roots()?;
        let triangles = picard::enumerate_triangles(&lines)?;
        let generators = weyl_perm::simple_reflection_generators(&lines)?;
        let group = weyl_perm::schreier_sims(&generators);
        let classes = weyl_perm::conjugacy_classes(&group)?;
        Ok(Configuration {
            lines,
            roots,
            triangles,
            generators,
            group,
            classes,
        })
    }
}

impl Model {
    pub fn build() -> Result<Model> {
        let config = Configuration::build()?;
        let meeting = rep::meeting_matrix(&config.lines);
        Model::from_parts(config, meeting)
    }

    /// Builds the representation-theoretic layers on top of a given meeting matrix.
    pub fn from_parts(config: Configuration, meeting: QMatrix) -> Result<Model> {
        let Configuration {
            lines,
            roots,
            triangles,
            generators,
            group,
            classes,
        } = config;
        let decomposition = rep::decompose(&meeting, &classes, &generators, group.order())?;
        let v_tet = equivalence::v_tet(&triangles)?;
        let r_tet = equivalence::r_tet(&v_tet)?;
        let picard_kernel = equivalence::picard_class_map_kernel(&lines);
        let components: Vec<_> = decomposition
            .constituents
            .iter()
            .map(|c| c.component.clone())
            .collect();
        let lattice = equivalence::invariant_subspace_lattice(&components, &generators)?;
        let theorem = equivalence::theorem_assembly(
            &lattice,
            &FilterContext {
                r_tet: &r_tet,
                generators: &generators,
                separated_pair: (0, 1),
            },
        )?;
        let six = decomposition
            .by_eigenvalue(REFLECTION_EIGENVALUE)
            .ok_or_else(|| Error::inconsistent("no eigenvalue -5 component"))?;
        let corollary = equivalence::corollary_checks(&six.component.projector, &triangles);
        let taut = equivalence::taut_ring_basis();
        Ok(Model {
            lines,
            roots,
            triangles,
            generators,
            group,
            classes,
            meeting,
            decomposition,
            v_tet,
            r_tet,
            picard_kernel,
            lattice,
            theorem,
            corollary,
            taut,
        })
    }

    pub fn component(&self, eigenvalue: i64) -> &rep::Constituent {
        self.decomposition
            .by_eigenvalue(eigenvalue)
            .unwrap_or_else(|| panic!("no component with eigenvalue {eigenvalue}"))
    }

    pub fn filter_context(&self) -> FilterContext<'_> {
        FilterContext {
            r_tet: &self.r_tet,
            generators: &self.generators,
            separated_pair: (0, 1),
        }
    }
}
