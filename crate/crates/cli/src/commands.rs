use crate::bundle::{a_q_parameter, Bundle};
use crate::MorphismKind;
use gl2q::fusion::{
    parse_generic_label, parse_root_label, relabel_automorphism, semiring_product,
    tensor_root_partial, FusionCase, SemiringElement,
};
use gl2q::invariants::{
    invariant_report, verify_galois_iso_witness, verify_galois_pair,
    verify_iso_witness, Genericity, InvariantReport, Orientation, WitnessVerdict,
};
use gl2q::ncpoly::NCPoly;
use gl2q::quantum::{
    antipode, build_appendix_system, build_gab, build_gabcd, comultiplication, congruence_morphism,
    counit, extend_with_localization, hopf_congruence_morphism, hopf_flip_morphism,
    inversion_morphism, verify_hopf_identities, verify_star_structure, verify_structural_map,
    GabcdData, MapCertificate,
};
use gl2q::rewrite::{
    check_diamond as diamond, irreducible_words, normal_form as nf, IdealBasis, ReductionSystem,
    DEFAULT_MAX_LEN,
};
use gl2q::scalar::{Scalar, ScalarMatrix};
use gl2q::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::fmt::Write;

pub struct Options {
    pub bound: usize,
    pub max_len: Option<usize>,
    pub seed: u64,
}

pub struct Report {
    pub text: String,
    pub json: Value,
    pub pass: bool,
}

fn s<T: ToString>(v: &T) -> String {
    v.to_string()
}

fn opt_s<T: ToString>(v: &Option<T>) -> Value {
    v.as_ref().map_or(Value::Null, |x| Value::String(x.to_string()))
}

/// The normalized system when `A = B = A_q`, else the system of a bounded
/// completion of the raw relations.
fn oriented_system(b: &Bundle, o: &Options) -> Result<(ReductionSystem, &'static str)> {
    let [a, bm, c, d] = b.gabcd()?;
    if let Some(q) = a_q_parameter(&a).filter(|_| a == bm) {
        let sys = build_appendix_system(&q, &c, &d)?;
        let sys = if b.with_d_inv {
            extend_with_localization(&sys, &q, &c, &d)?
        } else {
            sys
        };
        return Ok((sys, "normalized"));
    }
    let p = build_gabcd(&a, &bm, &c, &d, b.with_d_inv)?;
    let mut basis = basis_with(&p.relations, o)?;
    let done = basis.complete(o.bound)?;
    let kind = if done { "completed" } else { "partially completed" };
    Ok((basis.system().clone(), kind))
}

pub fn check_diamond(input: &str, o: &Options) -> Result<Report> {
    let (sys, kind) = oriented_system(&Bundle::load(input)?, o)?;
    let report = diamond(&sys);
    let mut text = format!("system: {kind}\nrules: {}\n", sys.len());
    for amb in report.ambiguities.iter().filter(|a| !a.resolvable) {
        let _ = writeln!(
            text,
            "unresolved {:?} {} (rules {}, {}): {} vs {}",
            amb.kind,
            amb.witness,
            amb.rule_a,
            amb.rule_b,
            amb.left_normal_form.as_deref().unwrap_or("?"),
            amb.right_normal_form.as_deref().unwrap_or("?"),
        );
    }
    let _ = writeln!(
        text,
        "ambiguities: {}, resolved: {}\nconfluent: {}",
        report.total, report.resolved, report.confluent
    );
    Ok(Report {
        text,
        pass: report.confluent,
        json: serde_json::to_value(&report).expect("report serializes"),
    })
}

pub fn normal_form(input: &str, poly: &str, o: &Options) -> Result<Report> {
    let (sys, _) = oriented_system(&Bundle::load(input)?, o)?;
    let p: NCPoly = poly.parse()?;
    let r = nf(&p, &sys)?;
    let trace: Vec<(usize, usize)> = r.trace.iter().map(|st| (st.rule, st.position)).collect();
    Ok(Report {
        text: format!("{}\nsteps: {}\n", r.poly, trace.len()),
        json: json!({"input": s(&p), "normal_form": s(&r.poly), "trace": trace}),
        pass: true,
    })
}

pub fn basis(input: &str, o: &Options) -> Result<Report> {
    let (sys, _) = oriented_system(&Bundle::load(input)?, o)?;
    let max_len = o.max_len.unwrap_or(2);
    let words = irreducible_words(&sys, max_len);
    let mut counts = vec![0usize; max_len + 1];
    for w in &words {
        counts[w.len()] += 1;
    }
    let mut text = String::new();
    for (l, c) in counts.iter().enumerate() {
        let _ = writeln!(text, "length {l}: {c}");
    }
    let _ = writeln!(text, "total: {}", words.len());
    for w in &words {
        let _ = writeln!(text, "{}", if w.is_empty() { "1".into() } else { w.to_string() });
    }
    Ok(Report {
        text,
        json: json!({
            "max_len": max_len,
            "counts": counts,
            "total": words.len(),
            "words": words.iter().map(s).collect::<Vec<_>>(),
        }),
        pass: true,
    })
}

fn map_summary(text: &mut String, c: &MapCertificate) {
    let ok = c.relations.iter().filter(|v| v.verified).count();
    let _ = writeln!(text, "{}: {}/{} relations verified", c.map, ok, c.relations.len());
    for v in c.relations.iter().filter(|v| !v.verified) {
        let _ = writeln!(
            text,
            "  unknown: {} (residue {})",
            v.relation,
            v.residue.as_deref().unwrap_or("?")
        );
    }
}

fn basis_with(relations: &[NCPoly], o: &Options) -> Result<IdealBasis> {
    IdealBasis::new(relations, o.max_len.unwrap_or(DEFAULT_MAX_LEN))
}

pub fn verify_hopf(input: &str, o: &Options) -> Result<Report> {
    let b = Bundle::load(input)?;
    let [a, bm, c, d] = b.gabcd()?;
    if a != c || bm != d {
        return Err(Error::PreconditionFailed {
            condition: "(C, D) = (A, B)".into(),
            detail: "Hopf structure needs the algebra G(A,B)".into(),
        });
    }
    let g = build_gab(&a, &bm, true)?;
    let mut own = basis_with(&g.relations, o)?;
    let (delta, tensor) = comultiplication(&g, &a, &bm)?;
    let delta_cert = verify_structural_map(&delta, &g, &mut basis_with(&tensor.relations, o)?, o.bound)?;
    let eps_cert = verify_structural_map(&counit(&g)?, &g, &mut basis_with(&[], o)?, o.bound)?;
    let (s_map, s_target) = antipode(&g)?;
    let s_cert = verify_structural_map(&s_map, &g, &mut basis_with(&s_target.relations, o)?, o.bound)?;
    let hopf = verify_hopf_identities(&g, &mut own, o.bound)?;
    let mut text = String::new();
    for c in [&delta_cert, &eps_cert, &s_cert] {
        map_summary(&mut text, c);
    }
    let count = |vs: &[gl2q::quantum::RelationVerdict]| vs.iter().filter(|v| v.verified).count();
    let _ = writeln!(
        text,
        "coassociativity: {}\ncounit identities: {}, {}\nantipode identities: {}/{} right, {}/{} left",
        hopf.coassociativity,
        hopf.counit_left,
        hopf.counit_right,
        count(&hopf.antipode_right),
        hopf.antipode_right.len(),
        count(&hopf.antipode_left),
        hopf.antipode_left.len(),
    );
    let pass = delta_cert.pass && eps_cert.pass && s_cert.pass && hopf.pass;
    let _ = writeln!(text, "pass: {pass}");
    Ok(Report {
        text,
        json: json!({
            "comultiplication": delta_cert,
            "counit": eps_cert,
            "antipode": s_cert,
            "identities": hopf,
            "pass": pass,
        }),
        pass,
    })
}

/// Invertible matrix with small integer entries.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> ScalarMatrix {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| Scalar::from_int(rng.gen_range(-4..=4))).collect())
            .collect();
        let m = ScalarMatrix::from_rows(rows).expect("square");
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn verify_morphism(input: &str, kind: MorphismKind, o: &Options) -> Result<Report> {
    let b = Bundle::load(input)?;
    let [a, bm, c, d] = b.gabcd()?;
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let p = match b.get("P")? {
        Some(p) => p,
        None => random_invertible(&mut rng, a.rows()),
    };
    let q = match b.get("Q")? {
        Some(q) => q,
        None => random_invertible(&mut rng, c.rows()),
    };
    let dt = GabcdData { a, b: bm, c, d };
    let hopf_only = || -> Result<()> {
        if dt.a != dt.c || dt.b != dt.d {
            return Err(Error::PreconditionFailed {
                condition: "(C, D) = (A, B)".into(),
                detail: "this map is defined on G(A,B)".into(),
            });
        }
        Ok(())
    };
    let (spec, used): (_, Vec<(&str, &ScalarMatrix)>) = match kind {
        MorphismKind::Congruence => (congruence_morphism(&dt, &p, &q)?, vec![("P", &p), ("Q", &q)]),
        MorphismKind::Inversion => (inversion_morphism(&dt)?, vec![]),
        MorphismKind::HopfCongruence => {
            hopf_only()?;
            (hopf_congruence_morphism(&dt.a, &dt.b, &p)?, vec![("P", &p)])
        }
        MorphismKind::HopfFlip => {
            hopf_only()?;
            (hopf_flip_morphism(&dt.a, &dt.b, &q)?, vec![("Q", &q)])
        }
    };
    let cert = gl2q::quantum::verify_morphism(&spec, o.bound)?;
    let mut text = String::new();
    for (name, m) in &used {
        let _ = writeln!(text, "{name} = {m}");
    }
    map_summary(&mut text, &cert.forward);
    if let Some(bk) = &cert.backward {
        map_summary(&mut text, bk);
    }
    let _ = writeln!(
        text,
        "round trip: {}\npass: {}",
        cert.round_trip.map_or("n/a".into(), |r| r.to_string()),
        cert.pass
    );
    let witnesses: serde_json::Map<String, Value> = used
        .iter()
        .map(|(n, m)| (n.to_string(), json!(m.to_strings())))
        .collect();
    Ok(Report {
        text,
        json: json!({"witnesses": witnesses, "certificate": cert}),
        pass: cert.pass,
    })
}

pub fn verify_star(input: &str, o: &Options) -> Result<Report> {
    let b = Bundle::load(input)?;
    let e = match b.get("E")? {
        Some(e) => e,
        None => b.require("A")?,
    };
    let cert = verify_star_structure(&e, o.bound)?;
    let count = |vs: &[gl2q::quantum::RelationVerdict]| {
        format!("{}/{}", vs.iter().filter(|v| v.verified).count(), vs.len())
    };
    let text = format!(
        "lambda: {} ({:?})\nwell-defined: {}\ninvolutive: {}\nunitary: {}\npass: {}\n",
        cert.lambda,
        cert.positivity,
        count(&cert.well_defined),
        count(&cert.involutive),
        count(&cert.unitary),
        cert.pass
    );
    Ok(Report {
        text,
        pass: cert.pass,
        json: serde_json::to_value(&cert).expect("certificate serializes"),
    })
}

pub fn fusion(labels: &[String], root: Option<u32>, relabel: bool) -> Result<Report> {
    match root {
        None => {
            let mut acc: Option<SemiringElement<_>> = None;
            for l in labels {
                let x = SemiringElement::simple(parse_generic_label(l)?);
                acc = Some(match acc {
                    None => x,
                    Some(a) => semiring_product(&a, &x),
                });
            }
            let mut out = acc.expect("at least one label");
            if relabel {
                out = relabel_automorphism(-1, &out)?;
            }
            Ok(Report {
                text: format!("{out}\n"),
                json: json!({"case": "generic", "result": s(&out), "dim": out.dim()}),
                pass: true,
            })
        }
        Some(n) => {
            if labels.len() != 2 || relabel {
                return Err(Error::Invalid(
                    "root-of-unity products take exactly two labels and no relabelling".into(),
                ));
            }
            let case = FusionCase::root(n)?;
            let a = parse_root_label(&labels[0])?;
            let b = parse_root_label(&labels[1])?;
            let r = tensor_root_partial(a, b, case)?;
            let semisimple = matches!(r, gl2q::fusion::RootProduct::Semisimple(_));
            Ok(Report {
                text: format!("{r}\n"),
                json: json!({
                    "case": {"root_of_unity": n, "n0": case.n0()},
                    "result": s(&r),
                    "semisimple": semisimple,
                    "dim": r.dim(),
                }),
                pass: true,
            })
        }
    }
}

fn genericity_json(g: &Option<Genericity>) -> Value {
    match g {
        None => Value::Null,
        Some(Genericity::Generic) => json!("Generic"),
        Some(Genericity::UndecidedParametric) => json!("UndecidedParametric"),
        Some(Genericity::RootOfUnity(o)) => json!({"RootOfUnity": o}),
    }
}

fn genericity_text(g: &Option<Genericity>) -> String {
    match g {
        None => "n/a".into(),
        Some(Genericity::RootOfUnity(o)) => format!("RootOfUnity (order {o:?})"),
        Some(g) => format!("{g:?}"),
    }
}

fn report_json(r: &InvariantReport) -> Value {
    json!({
        "lambda": opt_s(&r.lambda),
        "mu": s(&r.mu),
        "kappa": opt_s(&r.kappa),
        "condition_ok": r.condition_ok,
        "genericity": genericity_json(&r.genericity),
    })
}

fn report_text(label: &str, r: &InvariantReport) -> String {
    let show = |v: &Option<Scalar>| v.as_ref().map_or("n/a".into(), s);
    format!(
        "{label}lambda = {}\n{label}mu = {}\n{label}kappa = {}\n{label}condition: {}\n{label}genericity: {}\n",
        show(&r.lambda),
        r.mu,
        show(&r.kappa),
        if r.condition_ok { "ok" } else { "failed" },
        genericity_text(&r.genericity),
    )
}

pub fn invariants(input: &str) -> Result<Report> {
    let b = Bundle::load(input)?;
    let a = b.require("A")?;
    let bm = b.require("B")?;
    let r1 = invariant_report(&a, &bm)?;
    let (Some(c), Some(d)) = (b.get("C")?, b.get("D")?) else {
        return Ok(Report {
            text: report_text("", &r1),
            json: report_json(&r1),
            pass: r1.condition_ok,
        });
    };
    let r2 = invariant_report(&c, &d)?;
    let both = r1.condition_ok && r2.condition_ok;
    let equivalent = both && r1.kappa == r2.kappa;
    let mut text = report_text("(A,B) ", &r1);
    text += &report_text("(C,D) ", &r2);
    let _ = writeln!(
        text,
        "monoidally equivalent: {}",
        if both { equivalent.to_string() } else { "n/a".into() }
    );
    Ok(Report {
        text,
        json: json!({
            "ab": report_json(&r1),
            "cd": report_json(&r2),
            "monoidally_equivalent": if both { json!(equivalent) } else { Value::Null },
        }),
        pass: equivalent,
    })
}

fn witness_json(v: &WitnessVerdict) -> Value {
    json!({
        "pass": v.pass,
        "alpha": opt_s(&v.alpha),
        "beta": opt_s(&v.beta),
        "mismatches": v.mismatches.iter().map(|(c, i, j)| format!("{c}({i},{j})")).collect::<Vec<_>>(),
    })
}

fn witness_text(v: &WitnessVerdict) -> String {
    let mut t = String::new();
    if let Some(a) = &v.alpha {
        let _ = writeln!(t, "alpha = {a}");
    }
    if let Some(b) = &v.beta {
        let _ = writeln!(t, "beta = {b}");
    }
    for (c, i, j) in &v.mismatches {
        let _ = writeln!(t, "mismatch: {c}({i},{j})");
    }
    let _ = writeln!(t, "pass: {}", v.pass);
    t
}

pub fn verify_witness(input: &str) -> Result<Report> {
    let b = Bundle::load(input)?;
    let [a, bm, c, d] = [b.require("A")?, b.require("B")?, b.require("C")?, b.require("D")?];
    let p = b.require("P")?;
    let orientation = match b.orientation.as_deref().unwrap_or("direct") {
        "direct" | "Direct" => Orientation::Direct,
        "inverse" | "Inverse" => Orientation::Inverse,
        o => return Err(Error::Invalid(format!("orientation must be direct or inverse, got {o}"))),
    };
    let v = verify_iso_witness(&a, &bm, &c, &d, &p, orientation)?;
    Ok(Report {
        text: witness_text(&v),
        json: witness_json(&v),
        pass: v.pass,
    })
}

pub fn galois_check(input: &str) -> Result<Report> {
    let b = Bundle::load(input)?;
    let [a, bm, c, d] = [b.require("A")?, b.require("B")?, b.require("C")?, b.require("D")?];
    let v = verify_galois_pair(&a, &bm, &c, &d)?;
    let show = |x: &Option<Scalar>| x.as_ref().map_or("n/a".into(), s);
    let mut text = format!(
        "lambda(A,B) = {}\nlambda(C,D) = {}\ntr(AB^t) = {}\ntr(CD^t) = {}\n",
        show(&v.lambda_ab),
        show(&v.lambda_cd),
        v.trace_ab,
        v.trace_cd
    );
    for f in &v.failures {
        let _ = writeln!(text, "failed: {f}");
    }
    let _ = writeln!(text, "galois pair: {}", v.pass);
    let mut json = json!({
        "galois_pair": {
            "pass": v.pass,
            "lambda_ab": opt_s(&v.lambda_ab),
            "lambda_cd": opt_s(&v.lambda_cd),
            "trace_ab": s(&v.trace_ab),
            "trace_cd": s(&v.trace_cd),
            "failures": v.failures,
        }
    });
    let mut pass = v.pass;
    if let Some(m) = b.get("M")? {
        let w = verify_galois_iso_witness(&c, &d, &b.require("C2")?, &b.require("D2")?, &m)?;
        text += "witness M:\n";
        text += &witness_text(&w);
        json["witness"] = witness_json(&w);
        pass &= w.pass;
    }
    Ok(Report { text, json, pass })
}
