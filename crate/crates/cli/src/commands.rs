use std::time::Instant;

use lines27::equivalence::{self, monomial_name, Constraint, TautMonomialBasis};
use lines27::linalg::{rank, Rational};
use lines27::model::{Configuration, Model};
use lines27::picard::{self, pairing, MINUS_K};
use lines27::rep::ClassFunction;
use lines27::verify::{self, Certificates, Fault};
use lines27::{Permutation, Result};
use serde_json::{json, Value};

use crate::envelope::Envelope;

fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn integral_class_function(f: &ClassFunction) -> Value {
    match f.to_i64() {
        Some(v) => json!(v),
        None => json!(f.values().iter().map(rational).collect::<Vec<_>>()),
    }
}

fn perm(p: &Permutation) -> Value {
    json!(p.images())
}

fn taut_json(t: &TautMonomialBasis) -> Value {
    json!({
        "ideal": equivalence::TAUT_IDEAL.iter().map(|&m| monomial_name(m)).collect::<Vec<_>>(),
        "monomials": t.monomials.iter().map(|&m| monomial_name(m)).collect::<Vec<_>>(),
        "graded_dims": t.graded_dims,
        "total_dim": t.total_dim(),
    })
}

pub fn lines() -> Result<Envelope> {
    let lines = picard::enumerate_lines()?;
    let roots = picard::enumerate_roots()?;
    let triangles = picard::enumerate_triangles(&lines)?;
    let pairing_matrix: Vec<Vec<i64>> = lines
        .iter()
        .map(|a| lines.iter().map(|b| pairing(&a.cls, &b.cls)).collect())
        .collect();
    let entries: Vec<Value> = lines
        .iter()
        .map(|l| json!({ "index": l.index, "label": l.label.to_string(), "class": l.cls.0 }))
        .collect();
    let text = lines
        .iter()
        .map(|l| format!("{:>2} {:<3} {:?}", l.index, l.label.to_string(), l.cls.0))
        .collect();
    Ok(Envelope {
        command: "lines",
        parameters: json!({}),
        result: json!({ "count": lines.len(), "lines": entries, "pairing_matrix": pairing_matrix }),
        certificates: verify::geometry_certificates(&lines, &roots, &triangles),
        text,
    })
}

pub fn roots() -> Result<Envelope> {
    let lines = picard::enumerate_lines()?;
    let roots = picard::enumerate_roots()?;
    let triangles = picard::enumerate_triangles(&lines)?;
    let entries: Vec<Value> = roots.iter().map(|r| json!(r.vec().0)).collect();
    let mut text = vec![format!("{} roots", roots.len())];
    text.extend(roots.iter().map(|r| format!("{:?}", r.vec().0)));
    Ok(Envelope {
        command: "roots",
        parameters: json!({}),
        result: json!({ "count": roots.len(), "roots": entries }),
        certificates: verify::geometry_certificates(&lines, &roots, &triangles),
        text,
    })
}

pub fn triangles() -> Result<Envelope> {
    let lines = picard::enumerate_lines()?;
    let roots = picard::enumerate_roots()?;
    let triangles = picard::enumerate_triangles(&lines)?;
    let entries: Vec<Value> = triangles
        .iter()
        .map(|t| {
            let sum = t.members.iter().fold(picard::PicVector::ZERO, |acc, &i| acc + lines[i].cls);
            json!({
                "members": t.members,
                "labels": t.members.iter().map(|&i| lines[i].label.to_string()).collect::<Vec<_>>(),
                "sum_is_minus_K": sum == MINUS_K,
            })
        })
        .collect();
    let text = triangles
        .iter()
        .map(|t| {
            let labels: Vec<String> = t.members.iter().map(|&i| lines[i].label.to_string()).collect();
            format!("{:?} {}", t.members, labels.join(" "))
        })
        .collect();
    Ok(Envelope {
        command: "triangles",
        parameters: json!({}),
        result: json!({ "count": triangles.len(), "triangles": entries }),
        certificates: verify::geometry_certificates(&lines, &roots, &triangles),
        text,
    })
}

pub fn group() -> Result<Envelope> {
    let config = Configuration::build()?;
    let g = &config.group;
    let classes: Vec<Value> = config
        .classes
        .iter()
        .map(|c| {
            json!({
                "size": c.size,
                "cycle_type": c.cycle_type,
                "representative": perm(&c.representative),
                "element_order": c.representative.order(),
            })
        })
        .collect();
    let orbitals = g.orbit_count_on_ordered_pairs();
    let mut text = vec![
        format!("order {}", g.order()),
        format!("base {:?}", g.base()),
        format!("basic orbit lengths {:?}", g.basic_orbit_lengths()),
        format!("{} conjugacy classes, {} orbitals", config.classes.len(), orbitals),
    ];
    text.extend(
        config
            .classes
            .iter()
            .map(|c| format!("size {:>5}  order {:>2}  cycle type {:?}", c.size, c.representative.order(), c.cycle_type)),
    );
    Ok(Envelope {
        command: "group",
        parameters: json!({}),
        result: json!({
            "order": u64::try_from(g.order()).expect("order fits in u64"),
            "base": g.base(),
            "basic_orbit_lengths": g.basic_orbit_lengths(),
            "strong_generator_count": g.strong_generators().len(),
            "generators": config.generators.iter().map(perm).collect::<Vec<_>>(),
            "class_count": config.classes.len(),
            "classes": classes,
            "orbits_on_lines": g.orbits_on_points().len(),
            "orbitals": orbitals,
        }),
        certificates: verify::group_certificates(&config),
        text,
    })
}

fn model_with_certificates() -> Result<(Model, Certificates)> {
    let config = Configuration::build()?;
    let meeting = lines27::rep::meeting_matrix(&config.lines);
    let certs = verify::meeting_certificates(&meeting);
    Ok((Model::from_parts(config, meeting)?, certs))
}

pub fn decompose() -> Result<Envelope> {
    let (m, mut certs) = model_with_certificates()?;
    certs.extend(verify::decomposition_certificates(&m));
    let d = &m.decomposition;
    let components: Vec<Value> = d
        .constituents
        .iter()
        .map(|c| {
            json!({
                "eigenvalue": c.component.eigenvalue,
                "dimension": c.component.dimension,
                "character": integral_class_function(&c.character),
                "norm": rational(&c.norm),
            })
        })
        .collect();
    let mut text = vec![format!("dims {:?}", d.dims())];
    text.extend(d.constituents.iter().map(|c| {
        format!(
            "eigenvalue {:>3}: dim {:>2}, norm {}, character {:?}",
            c.component.eigenvalue,
            c.component.dimension,
            c.norm,
            c.character.to_i64().unwrap_or_default()
        )
    }));
    Ok(Envelope {
        command: "decompose",
        parameters: json!({}),
        result: json!({
            "eigenvalues": d.constituents.iter().map(|c| c.component.eigenvalue).collect::<Vec<_>>(),
            "dims": d.dims(),
            "components": components,
            "class_sizes": m.classes.iter().map(|c| c.size).collect::<Vec<_>>(),
            "permutation_character": integral_class_function(&d.permutation_character),
            "trivial_multiplicity": rational(&d.trivial_multiplicity),
            "permutation_norm": rational(&d.permutation_norm),
        }),
        certificates: certs,
        text,
    })
}

fn subspace_rows(s: &lines27::Subspace) -> Vec<Vec<Value>> {
    s.basis_vectors()
        .iter()
        .map(|v| v.entries().iter().map(rational).collect())
        .collect()
}

pub fn equivalences() -> Result<Envelope> {
    let (m, mut certs) = model_with_certificates()?;
    certs.extend(verify::equivalence_certificates(&m));
    let lattice: Vec<Value> = m
        .lattice
        .elements
        .iter()
        .map(|e| json!({ "parts": e.parts, "dim": e.subspace.dim() }))
        .collect();
    let text = vec![
        format!("triangle matrix rank {}", rank(&equivalence::triangle_matrix(&m.triangles))),
        format!("dim V_tet = {}", m.v_tet.dim()),
        format!("dim R_tet = {}", m.r_tet.dim()),
        format!("dim ker(class map) = {}", m.picard_kernel.dim()),
        format!("tautological ring: total dim {}, graded {:?}", m.taut.total_dim(), m.taut.graded_dims),
    ];
    Ok(Envelope {
        command: "equivalences",
        parameters: json!({}),
        result: json!({
            "triangle_rank": rank(&equivalence::triangle_matrix(&m.triangles)),
            "v_tet_dim": m.v_tet.dim(),
            "r_tet_dim": m.r_tet.dim(),
            "r_tet_basis": subspace_rows(&m.r_tet),
            "picard_kernel_dim": m.picard_kernel.dim(),
            "r_tet_equals_picard_kernel": m.r_tet == m.picard_kernel,
            "invariant_lattice": lattice,
            "taut_ring": taut_json(&m.taut),
        }),
        certificates: certs,
        text,
    })
}

pub fn theorem() -> Result<Envelope> {
    let (m, mut certs) = model_with_certificates()?;
    certs.extend(verify::equivalence_certificates(&m));
    let audit: Vec<Value> = m
        .theorem
        .audit
        .iter()
        .map(|a| {
            json!({
                "candidate": a.label,
                "dim": a.dim,
                "eliminated_by": a.eliminated_by.map(|c| c.to_string()),
            })
        })
        .collect();
    let constraints: Vec<Value> = Constraint::ALL
        .iter()
        .map(|c| json!({ "tag": c.tag(), "name": c.name() }))
        .collect();
    let c = &m.corollary;
    let mut text = vec![format!(
        "survivor {} (dim {})",
        m.theorem.survivor.label(),
        m.theorem.survivor.subspace.dim()
    )];
    text.extend(m.theorem.audit.iter().map(|a| match a.eliminated_by {
        Some(c) => format!("candidate {:<8} dim {:>2}  eliminated by {c}", a.label, a.dim),
        None => format!("candidate {:<8} dim {:>2}  survives", a.label, a.dim),
    }));
    text.push(format!(
        "corollary: {} zero projections, {} proportional pairs of {}",
        c.zero_projections.len(),
        c.proportional_pairs.len(),
        c.pairs_checked
    ));
    Ok(Envelope {
        command: "theorem",
        parameters: json!({ "separated_pair": [0, 1] }),
        result: json!({
            "constraints": constraints,
            "survivor": {
                "label": m.theorem.survivor.label(),
                "dim": m.theorem.survivor.subspace.dim(),
                "equals_r_tet": m.theorem.survivor.subspace == m.r_tet,
                "basis": subspace_rows(&m.theorem.survivor.subspace),
            },
            "audit": audit,
            "corollary": {
                "passed": c.passed(),
                "zero_projections": c.zero_projections,
                "proportional_pairs": c.proportional_pairs,
                "pairs_checked": c.pairs_checked,
                "triangles_not_annihilated": c.triangles_not_annihilated.iter().map(|t| t.members).collect::<Vec<_>>(),
            },
            "taut_ring": taut_json(&m.taut),
        }),
        certificates: certs,
        text,
    })
}

pub fn verify_all(fault: Option<(usize, usize)>) -> Envelope {
    let start = Instant::now();
    let report = verify::verify_all_with(fault.map(|(i, j)| Fault::FlipMeetingEntry(i, j)));
    let wall_time_ms = start.elapsed().as_millis() as u64;
    let failed: Vec<&str> = report
        .certificates
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    let summary = report.model.as_ref().map(|m| {
        json!({
            "lines": m.lines.len(),
            "roots": m.roots.len(),
            "triangles": m.triangles.len(),
            "group_order": u64::try_from(m.group.order()).expect("order fits in u64"),
            "classes": m.classes.len(),
            "dims": m.decomposition.dims(),
            "v_tet_dim": m.v_tet.dim(),
            "r_tet_dim": m.r_tet.dim(),
            "survivor_dim": m.theorem.survivor.subspace.dim(),
            "taut_ring_dim": m.taut.total_dim(),
        })
    });
    let first_failure = report.first_failure().map(|c| c.name.clone());
    let mut text = vec![format!(
        "{} of {} certificates passed in {wall_time_ms} ms",
        report.certificates.iter().filter(|c| c.passed).count(),
        report.certificates.0.len()
    )];
    if let Some(name) = &first_failure {
        text.push(format!("first failure: {name}"));
    }
    let parameters = match fault {
        Some((i, j)) => json!({ "inject_fault": [i, j] }),
        None => json!({}),
    };
    Envelope {
        command: "verify-all",
        parameters,
        result: json!({
            "passed": report.all_passed(),
            "certificate_count": report.certificates.0.len(),
            "failed": failed,
            "first_failure": first_failure,
            "summary": summary,
            "wall_time_ms": wall_time_ms,
        }),
        certificates: report.certificates,
        text,
    }
}

/// Envelope for a command that aborted before producing a result.
pub fn aborted(command: &'static str, err: &lines27::Error) -> Envelope {
    let mut certs = Certificates::default();
    certs.check("completed", false, err.to_string());
    Envelope {
        command,
        parameters: json!({}),
        result: Value::Null,
        certificates: certs,
        text: vec![format!("aborted: {err}")],
    }
}
