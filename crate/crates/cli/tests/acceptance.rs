//! The nine acceptance criteria, each reported as one PASS/FAIL line.
//! Run with `cargo test -p lines27-cli --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;
use std::process::Command;

use lines27::equivalence::{self, Constraint, TAUT_IDEAL};
use lines27::linalg::{kernel, q, rank, rref, QMatrix, QVector, Subspace};
use lines27::model::Model;
use lines27::picard::{pairing, MINUS_K};
use lines27::rep::{commutes_with, inner_product, is_strongly_regular, permutation_character, ClassFunction};
use lines27::N_LINES;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn enumeration(m: &Model) -> Outcome {
    ensure(m.lines.len() == 27, format!("{} lines", m.lines.len()))?;
    ensure(m.triangles.len() == 45, format!("{} triangles", m.triangles.len()))?;
    ensure(m.roots.len() == 72, format!("{} roots", m.roots.len()))?;
    for t in &m.triangles {
        let sum = t.members.iter().fold(lines27::PicVector([0; 7]), |acc, &i| acc + m.lines[i].cls);
        ensure(sum == MINUS_K, format!("triangle {:?} sums to {:?}", t.members, sum.0))?;
    }
    for l in &m.lines {
        let tri = m.triangles.iter().filter(|t| t.contains(l.index)).count();
        let meets = m.lines.iter().filter(|o| pairing(&l.cls, &o.cls) == 1).count();
        ensure(tri == 5 && meets == 10, format!("line {} in {tri} triangles, meets {meets}", l.label))?;
    }
    Ok(())
}

fn group(m: &Model) -> Outcome {
    ensure(m.group.verify_generators(), "generators do not sift")?;
    ensure(m.group.order() == 51_840, format!("order {}", m.group.order()))?;
    ensure(m.classes.len() == 25, format!("{} classes", m.classes.len()))?;
    let total: u128 = m.classes.iter().map(|c| c.size as u128).sum();
    ensure(total == 51_840, format!("class equation sums to {total}"))
}

fn decomposition(m: &Model) -> Outcome {
    let d = &m.decomposition;
    ensure(d.dims() == vec![1, 6, 20], format!("dims {:?}", d.dims()))?;
    let chi = permutation_character(&m.classes);
    let order = m.group.order();
    let one = ClassFunction::trivial(m.classes.len());
    let ip = |a, b| inner_product(a, b, &m.classes, order).map_err(|e| e.to_string());
    ensure(ip(&chi, &one)? == q(1), "<chi, 1> != 1")?;
    ensure(ip(&chi, &chi)? == q(3), "<chi, chi> != 3")?;
    for (lambda, dim) in [(10, 1), (1, 20), (-5, 6)] {
        let k = N_LINES - rank(&m.meeting.shift(&q(lambda)));
        ensure(k == dim, format!("kernel of A - ({lambda})I has dim {k}"))?;
    }
    for c in &d.constituents {
        let n = ip(&c.character, &c.character)?;
        ensure(n == q(1), format!("constituent {} has norm {n}", c.component.dimension))?;
    }
    Ok(())
}

fn triangle_span(m: &Model) -> Outcome {
    let tm = equivalence::triangle_matrix(&m.triangles);
    ensure(tm.rows() == 45 && tm.cols() == 27, "triangle matrix is not 45x27")?;
    let r = rank(&tm);
    ensure(r == 21, format!("rank {r}"))
}

fn relation_space(m: &Model) -> Outcome {
    let via_sum_zero = m.v_tet.intersect(&Subspace::sum_zero(N_LINES)).map_err(|e| e.to_string())?;
    let via_picard = equivalence::picard_class_map_kernel(&m.lines);
    let via_eigen = m.component(1).component.subspace.clone();
    let via_theorem = m.theorem.survivor.subspace.clone();
    ensure(via_sum_zero.dim() == 20, format!("dim R_tet = {}", via_sum_zero.dim()))?;
    ensure(via_sum_zero == via_picard, "V_tet ∩ sum-zero differs from the Picard kernel")?;
    ensure(via_sum_zero == via_eigen, "V_tet ∩ sum-zero differs from the eigenvalue-1 space")?;
    ensure(via_sum_zero == via_theorem, "V_tet ∩ sum-zero differs from the theorem survivor")
}

fn theorem(m: &Model) -> Outcome {
    let ctx = m.filter_context();
    let els = &m.lattice.elements;
    ensure(els.len() == 8, format!("{} invariant subspaces", els.len()))?;
    let all = ctx.survivors(els, &Constraint::ALL).map_err(|e| e.to_string())?;
    ensure(all.len() == 1, format!("{} survivors", all.len()))?;
    ensure(all[0].subspace.dim() == 20, format!("survivor has dim {}", all[0].subspace.dim()))?;
    let without_d = ctx.survivors(els, &Constraint::ALL[..3]).map_err(|e| e.to_string())?;
    ensure(without_d.len() == 2, format!("{} survivors without (d)", without_d.len()))
}

fn corollary(m: &Model) -> Outcome {
    let p = &m.component(-5).component.projector;
    let cols: Vec<QVector> = (0..N_LINES).map(|i| p.mul_vec(&QVector::unit(N_LINES, i))).collect();
    for (i, c) in cols.iter().enumerate() {
        ensure(!c.is_zero(), format!("P e_{i} = 0"))?;
    }
    // independent of the library check: two vectors are proportional iff the pair has rank 1
    for i in 0..N_LINES {
        for j in i + 1..N_LINES {
            let pair = QMatrix::from_rows(N_LINES, &[cols[i].clone(), cols[j].clone()]).map_err(|e| e.to_string())?;
            ensure(rank(&pair) == 2, format!("P e_{i} and P e_{j} are proportional"))?;
        }
    }
    for v in equivalence::triangle_vectors(&m.triangles) {
        ensure(p.mul_vec(&v).is_zero(), "a triangle vector survives P")?;
    }
    ensure(m.corollary.passed(), "library corollary report failed")
}

fn random_matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(-6i64..=6, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(|ch| ch.to_vec()).collect();
            QMatrix::from_ints(&rows)
        })
    })
}

fn run_binary(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_lines27"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), format!("{args:?} exited with {}", out.status))?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn strip_wall_time(s: &str) -> Result<String, String> {
    let mut v: Value = serde_json::from_str(s).map_err(|e| e.to_string())?;
    v["result"]
        .as_object_mut()
        .ok_or("verify-all result is not an object")?
        .remove("wall_time_ms");
    Ok(v.to_string())
}

fn property_suites(m: &Model) -> Outcome {
    // projector algebra
    let ps: Vec<&QMatrix> = m.decomposition.constituents.iter().map(|c| &c.component.projector).collect();
    let mut sum = QMatrix::zeros(N_LINES, N_LINES);
    for (i, p) in ps.iter().enumerate() {
        ensure(&(*p * *p) == *p, "projector not idempotent")?;
        for (j, r) in ps.iter().enumerate() {
            ensure(i == j || (*p * *r).is_zero(), "projectors not orthogonal")?;
        }
        for g in &m.generators {
            ensure(commutes_with(p, g), "projector not equivariant")?;
        }
        sum = &sum + *p;
    }
    ensure(sum == QMatrix::identity(N_LINES), "projectors do not sum to I")?;

    // strongly regular identity
    ensure(is_strongly_regular(&m.meeting, 10, 1, 5), "A^2 != 10I + A + 5(J - I - A)")?;

    // generators preserve the pairing
    for g in &m.generators {
        for a in &m.lines {
            for b in &m.lines {
                let (ga, gb) = (&m.lines[g.apply(a.index)], &m.lines[g.apply(b.index)]);
                ensure(pairing(&a.cls, &b.cls) == pairing(&ga.cls, &gb.cls), "pairing not preserved")?;
            }
        }
    }

    // rref idempotence and rank-nullity on seeded random matrices
    let mut runner = TestRunner::new_with_rng(
        Config { cases: 200, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    runner
        .run(&random_matrix(), |a| {
            let r = rref(&a);
            prop_assert_eq!(rref(&r), r);
            prop_assert_eq!(rank(&a) + kernel(&a).dim(), a.cols());
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    // byte-stable JSON across two runs
    for cmd in ["lines", "roots", "triangles", "group", "decompose", "equivalences", "theorem"] {
        let a = run_binary(&["--format", "json", cmd])?;
        let b = run_binary(&["--format", "json", cmd])?;
        ensure(a == b, format!("{cmd} output differs between runs"))?;
    }
    let a = strip_wall_time(&run_binary(&["--format", "json", "verify-all"])?)?;
    let b = strip_wall_time(&run_binary(&["--format", "json", "verify-all"])?)?;
    ensure(a == b, "verify-all output differs between runs")
}

fn tautological_ring(_: &Model) -> Outcome {
    let basis = equivalence::taut_ring_basis();
    // oracle: walk a box far past the ideal's corners
    let mut brute = BTreeSet::new();
    let mut graded = vec![0usize; 6];
    for a in 0..40u32 {
        for b in 0..40u32 {
            if !TAUT_IDEAL.iter().any(|&(ga, gb)| a >= ga && b >= gb) {
                brute.insert((a, b));
                let deg = (a + 3 * b) as usize;
                if deg >= graded.len() {
                    return Err(format!("monomial of degree {deg}"));
                }
                graded[deg] += 1;
            }
        }
    }
    let got: BTreeSet<(u32, u32)> = basis.monomials.iter().copied().collect();
    ensure(got == brute, "standard monomials disagree with brute force")?;
    ensure(brute.len() == 8, format!("total dim {}", brute.len()))?;
    ensure(graded == vec![1, 1, 1, 2, 2, 1], format!("graded dims {graded:?}"))?;
    ensure(basis.graded_dims == graded, format!("library graded dims {:?}", basis.graded_dims))
}

#[test]
fn acceptance() {
    let model = Model::build().expect("model builds");
    let criteria: [(&str, fn(&Model) -> Outcome); 9] = [
        ("1 enumeration: 27 lines, 45 triangles, 72 roots", enumeration),
        ("2 group: order 51840, 25 classes", group),
        ("3 decomposition: dims [1, 6, 20]", decomposition),
        ("4 triangle span: rank 21", triangle_span),
        ("5 relation space: dim 20, four constructions agree", relation_space),
        ("6 theorem assembly: one survivor, two without (d)", theorem),
        ("7 corollary: six-part projections separate lines", corollary),
        ("8 property suites", property_suites),
        ("9 tautological ring: dim 8, graded [1,1,1,2,2,1]", tautological_ring),
    ];
    let mut failures = Vec::new();
    for (name, check) in criteria {
        match check(&model) {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
