use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use hopfpi::brace::{aut_indexed_brace, check_automorphisms, check_brace, check_antipode_brace_identity, check_module_properties, left_action};
use hopfpi::braiding::{
    all_grade_triples, braid_intertwiner_check, braid_intertwiner_check_with, braiding_c, braiding_sigma,
    check_braid_equation,
};
use hopfpi::enumerate::{enumerate_group_rb, enumerate_group_rb_naive, is_group_rb, linearize_group_rb};
use hopfpi::hopf::{check_antipode_identities, check_hopf_pi_algebra, group_algebra};
use hopfpi::linalg::invert;
use hopfpi::matched_pair::{bicrossed_product, brace_to_matched_pair, check_matched_pair, check_circle_identity, matched_pair_to_brace};
use hopfpi::post_hopf::{
    brace_from_post_hopf, check_post_hopf, check_post_hopf_consequences, check_post_hopf_derived, check_subadjacent, post_hopf_from_brace, subadjacent,
};
use hopfpi::rota_baxter::{
    antipode_rb, aut_indexed_rb, brace_from_rb, check_rb, descendent_hopf, factorization_rb, twist_rb,
};
use hopfpi::smash::{smash_brace_modlike, smash_brace_pimod};
use hopfpi::{
    CheckReport, DenseMatrix, Field, FiniteGroup, GradedLinearMap, HopfPiAlgebra, HopfPiBrace, MatchedPair,
    PostHopfStructure, RotaBaxterOperator,
};

use crate::args::{Cli, Command, Construct};
use crate::error::CliError;
use crate::format::{encode, parse_document, Document, GroupWithGradings, RbEnumeration, Structure};
use crate::report::Outcome;

/// Runs a parsed command line. Never panics on bad input; every error
/// lands in the outcome with its exit code.
pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let (mut outcome, result) = match &cli.command {
        Command::Validate { file } => {
            let mut o = Outcome::new(format!("validate {}", file.display()));
            let r = validate_file(file, &mut o);
            (o, r)
        }
        Command::Construct { op, out } => {
            let mut o = Outcome::new(format!("construct {}", op.name()));
            let r = construct(op, out.as_deref(), &mut o);
            (o, r)
        }
        Command::EnumerateRb { group, deg, bound, oracle, field, out } => {
            let mut o = Outcome::new(format!("enumerate-rb --deg {deg} --bound {bound}{}", if *oracle { " --oracle" } else { "" }));
            let r = enumerate_rb(group, deg, *bound, *oracle, field, out.as_deref(), &mut o);
            (o, r)
        }
        Command::Ybe { file, n, perturb } => {
            let mut o = Outcome::new(format!("ybe {} --n {n}{}", file.display(), if *perturb { " --perturb" } else { "" }));
            let r = ybe(file, *n as usize, *perturb, &mut o);
            (o, r)
        }
        Command::Gallery { out } => {
            let mut o = Outcome::new(format!("gallery --out {}", out.display()));
            let r = crate::gallery::write_gallery(out).map(|files| {
                o.message(format!("wrote {} fixtures", files.len()));
            });
            (o, r)
        }
    };
    if let Err(e) = result {
        outcome.error = Some(e);
    }
    outcome.elapsed = start.elapsed();
    outcome
}

pub fn load(path: &Path) -> Result<Document, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io { path: path.display().to_string(), reason: e.to_string() })?;
    parse_document(&bytes)
}

fn wrong_kind(path: &Path, want: &str, doc: &Document) -> CliError {
    CliError::Usage(format!("{} holds a {} document, expected {want}", path.display(), doc.structure.kind()))
}

fn load_hopf(path: &Path) -> Result<(Field, HopfPiAlgebra), CliError> {
    let doc = load(path)?;
    match doc.structure {
        Structure::Hopf(h) => Ok((doc.field, h)),
        _ => Err(wrong_kind(path, "hopf_pi_algebra", &doc)),
    }
}

fn load_brace(path: &Path) -> Result<(Field, HopfPiBrace), CliError> {
    let doc = load(path)?;
    match doc.structure {
        Structure::Brace(b) => Ok((doc.field, b)),
        _ => Err(wrong_kind(path, "brace", &doc)),
    }
}

fn load_mp(path: &Path) -> Result<(Field, MatchedPair), CliError> {
    let doc = load(path)?;
    match doc.structure {
        Structure::MatchedPair(mp) => Ok((doc.field, mp)),
        _ => Err(wrong_kind(path, "matched_pair", &doc)),
    }
}

fn load_post_hopf(path: &Path) -> Result<(Field, PostHopfStructure), CliError> {
    let doc = load(path)?;
    match doc.structure {
        Structure::PostHopf { base, triangle } => Ok((doc.field, PostHopfStructure::new(base, triangle)?)),
        _ => Err(wrong_kind(path, "post_hopf", &doc)),
    }
}

fn load_rb(path: &Path) -> Result<(Field, RotaBaxterOperator), CliError> {
    let doc = load(path)?;
    match doc.structure {
        Structure::RotaBaxter { carrier, operator } => Ok((doc.field, RotaBaxterOperator::new(carrier, operator)?)),
        _ => Err(wrong_kind(path, "rota_baxter", &doc)),
    }
}

fn load_group(path: &Path) -> Result<GroupWithGradings, CliError> {
    let doc = load(path)?;
    match doc.structure {
        Structure::Group(g) => Ok(g),
        _ => Err(wrong_kind(path, "group", &doc)),
    }
}

fn load_autos(path: &Path, field: Field) -> Result<(Arc<FiniteGroup>, Vec<DenseMatrix>), CliError> {
    let doc = load(path)?;
    same_field(field, doc.field)?;
    match doc.structure {
        Structure::Automorphisms { group, matrices } => Ok((group, matrices)),
        _ => Err(wrong_kind(path, "automorphisms", &doc)),
    }
}

fn same_field(a: Field, b: Field) -> Result<(), CliError> {
    if a != b {
        return Err(hopfpi::Error::FieldMismatch(format!("inputs over {a} and {b}")).into());
    }
    Ok(())
}

fn validate_file(path: &Path, o: &mut Outcome) -> Result<(), CliError> {
    let doc = load(path)?;
    o.message(format!("kind: {}, field: {}", doc.structure.kind(), doc.field.descriptor()));
    validate_structure(&doc, o)
}

fn hopf_suite(o: &mut Outcome, prefix: &str, h: &HopfPiAlgebra) {
    o.section(format!("{prefix}Hopf π-algebra axioms"), check_hopf_pi_algebra(h));
    o.section(format!("{prefix}antipode identities"), check_antipode_identities(h));
}

/// Full checker suite for one document, as report sections.
pub fn validate_structure(doc: &Document, o: &mut Outcome) -> Result<(), CliError> {
    match &doc.structure {
        Structure::Group(g) => {
            let names: Vec<&str> = g.gradings.iter().map(|(n, _)| n.as_str()).collect();
            o.message(format!("group of order {}, gradings: {}", g.group.size(), names.join(", ")));
        }
        Structure::Hopf(h) => {
            hopf_suite(o, "", h);
            o.message(format!("cocommutative: {}", h.is_cocommutative()));
        }
        Structure::Brace(b) => {
            hopf_suite(o, "dot: ", b.dot());
            hopf_suite(o, "circle: ", b.circle());
            o.section("brace compatibility", check_brace(b));
            o.section("antipode brace identity", check_antipode_brace_identity(b));
            o.section("action laws", check_module_properties(b));
        }
        Structure::MatchedPair(mp) => {
            hopf_suite(o, "K: ", mp.k());
            hopf_suite(o, "H: ", mp.h());
            o.section("matched pair", check_matched_pair(mp));
            if mp.k() == mp.h() && mp.h().group().is_abelian() {
                let r = check_circle_identity(mp)?;
                o.message(format!(
                    "circle identity: {}",
                    if r.passed() { "holds".to_string() } else { format!("fails at {} checks", r.total_failures()) }
                ));
            }
        }
        Structure::PostHopf { base, triangle } => {
            hopf_suite(o, "base: ", base);
            let (report, structure) = check_post_hopf(base, triangle)?;
            o.section("post-Hopf axioms", report);
            match structure {
                Some(p) => {
                    o.section("post-Hopf consequences", check_post_hopf_derived(&p)?);
                    if p.is_cocommutative() {
                        o.section("subadjacent structure", check_subadjacent(&p)?);
                    }
                }
                None => o.section("post-Hopf consequences", check_post_hopf_consequences(base, triangle)?),
            }
        }
        Structure::RotaBaxter { carrier, operator } => {
            hopf_suite(o, "carrier: ", carrier);
            let report = check_rb(carrier, operator)?;
            let passed = report.passed();
            o.section("Rota-Baxter identity", report);
            if passed && carrier.group().is_abelian() {
                let rb = RotaBaxterOperator::new(carrier.clone(), operator.clone())?;
                o.section("descendent structure", descendent_hopf(&rb)?.1);
            }
        }
        Structure::Factorization { carrier, factorization } => {
            hopf_suite(o, "carrier: ", carrier);
            let rb = factorization_rb(carrier, factorization)?;
            o.section("induced Rota-Baxter operator", check_rb(rb.carrier(), rb.operator())?);
        }
        Structure::Action { acting, target, action } => {
            hopf_suite(o, "acting: ", acting);
            hopf_suite(o, "target: ", target);
            o.section("module-like bialgebra action", hopfpi::action::check_left_modulelike_bialgebra(acting, target, action)?);
        }
        Structure::Automorphisms { group, matrices } => o.section("automorphism family", check_aut_family(group, matrices)?),
        Structure::LinearMap { blocks } => o.message(format!("linear map with {} blocks", blocks.len())),
        Structure::RbEnumeration(e) => o.section("enumeration results", check_enumeration(e)),
    }
    Ok(())
}

fn check_aut_family(group: &FiniteGroup, m: &[DenseMatrix]) -> Result<CheckReport, CliError> {
    let mut r = CheckReport::new();
    for (a, x) in m.iter().enumerate() {
        let ok = x.is_square() && x.rows() == m[0].rows() && invert(x)?.is_some();
        r.check_flag("invertible square matrices", &[a], &[], ok);
    }
    if !r.passed() {
        return Ok(r);
    }
    r.check_flag("identity at e", &[group.identity()], &[], m[group.identity()].is_identity());
    for a in group.elements() {
        for b in group.elements() {
            r.check_flag("φ_αβ = φ_α φ_β", &[a, b], &[], m[group.mul(a, b)] == m[a].mul(&m[b]));
        }
    }
    Ok(r)
}

fn check_enumeration(e: &RbEnumeration) -> CheckReport {
    let mut r = CheckReport::new();
    r.check_flag("count matches tables", &[], &[], e.count == e.tables.len());
    r.check_flag("tables sorted and distinct", &[], &[], e.tables.windows(2).all(|w| w[0] < w[1]));
    for (i, t) in e.tables.iter().enumerate() {
        r.check_flag("group-like Rota-Baxter identity", &[], &[i], is_group_rb(&e.deg, t));
    }
    r
}

fn emit(o: &mut Outcome, doc: Document, out: Option<&Path>) -> Result<(), CliError> {
    let mut check = Outcome::new("");
    validate_structure(&doc, &mut check)?;
    let passed = check.passed();
    o.sections.extend(check.sections.into_iter().map(|mut s| {
        s.name = format!("output: {}", s.name);
        s
    }));
    o.messages.extend(check.messages);
    if !passed {
        o.message("output failed validation; nothing written");
        return Ok(());
    }
    let text = encode(&doc);
    match out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Io { path: path.display().to_string(), reason: e.to_string() })?;
            o.message(format!("wrote {} document to {}", doc.structure.kind(), path.display()));
        }
        None => o.document = Some(text),
    }
    Ok(())
}

fn construct(op: &Construct, out: Option<&Path>, o: &mut Outcome) -> Result<(), CliError> {
    let (field, structure) = match op {
        Construct::GroupAlgebra { group, deg, field } => {
            let field = Field::parse_descriptor(field)?;
            let g = load_group(group)?;
            (field, Structure::Hopf(group_algebra(field, g.grading(deg)?)))
        }
        Construct::SmashPimod(a) | Construct::SmashModlike(a) => {
            let doc = load(&a.action)?;
            let Structure::Action { acting, target, action } = doc.structure else {
                return Err(wrong_kind(&a.action, "action", &doc));
            };
            let b = if matches!(op, Construct::SmashPimod(_)) {
                smash_brace_pimod(&target, &acting, &action)?
            } else {
                smash_brace_modlike(&acting, &target, &action)?
            };
            (doc.field, Structure::Brace(b))
        }
        Construct::AutBrace { brace, autos } => {
            let (field, b) = load_brace(brace)?;
            let (pi, m) = load_autos(autos, field)?;
            (field, Structure::Brace(aut_indexed_brace(&b, &m, pi)?))
        }
        Construct::Bicrossed(m) => {
            let (field, mp) = load_mp(&m.mp)?;
            (field, Structure::Hopf(bicrossed_product(&mp)?))
        }
        Construct::BraceToMp(b) => {
            let (field, b) = load_brace(&b.brace)?;
            (field, Structure::MatchedPair(brace_to_matched_pair(&b)?))
        }
        Construct::MpToBrace(m) => {
            let (field, mp) = load_mp(&m.mp)?;
            (field, Structure::Brace(matched_pair_to_brace(&mp)?))
        }
        Construct::PostHopfFromBrace(b) => {
            let (field, b) = load_brace(&b.brace)?;
            let p = post_hopf_from_brace(&b)?;
            (field, Structure::PostHopf { base: p.base().clone(), triangle: p.triangle().clone() })
        }
        Construct::BraceFromPostHopf(p) => {
            let (field, p) = load_post_hopf(&p.post_hopf)?;
            (field, Structure::Brace(brace_from_post_hopf(&p)?))
        }
        Construct::Subadjacent(p) => {
            let (field, p) = load_post_hopf(&p.post_hopf)?;
            (field, Structure::Hopf(subadjacent(&p)?))
        }
        Construct::AntipodeRb { hopf } => {
            let (field, h) = load_hopf(hopf)?;
            (field, rb_structure(antipode_rb(&h)?))
        }
        Construct::TwistRb { rb, phi } => {
            let (field, rb) = load_rb(rb)?;
            let doc = load(phi)?;
            same_field(field, doc.field)?;
            let Structure::LinearMap { blocks } = doc.structure else {
                return Err(wrong_kind(phi, "linear_map", &doc));
            };
            let space = rb.carrier().space();
            let map = GradedLinearMap::grade_preserving(space, space, blocks)?;
            (field, rb_structure(twist_rb(&rb, &map)?))
        }
        Construct::FactorizationRb { factorization } => {
            let doc = load(factorization)?;
            let Structure::Factorization { carrier, factorization: fac } = doc.structure else {
                return Err(wrong_kind(factorization, "factorization", &doc));
            };
            (doc.field, rb_structure(factorization_rb(&carrier, &fac)?))
        }
        Construct::AutRb { rb, autos } => {
            let (field, rb) = load_rb(rb)?;
            let (pi, m) = load_autos(autos, field)?;
            check_automorphisms(&[rb.carrier()], &m)?;
            (field, rb_structure(aut_indexed_rb(&rb, &m, pi)?))
        }
        Construct::Descendent(r) => {
            let (field, rb) = load_rb(&r.rb)?;
            let (h, report) = descendent_hopf(&rb)?;
            let passed = report.passed();
            o.section("descendent consistency", report);
            if !passed {
                return Ok(());
            }
            (field, Structure::Hopf(h))
        }
        Construct::BraceFromRb(r) => {
            let (field, rb) = load_rb(&r.rb)?;
            (field, Structure::Brace(brace_from_rb(&rb)?))
        }
    };
    emit(o, Document { field, structure }, out)
}

fn rb_structure(rb: RotaBaxterOperator) -> Structure {
    Structure::RotaBaxter { carrier: rb.carrier().clone(), operator: rb.operator().clone() }
}

fn enumerate_rb(
    group: &Path,
    deg: &str,
    bound: u128,
    oracle: bool,
    field: &str,
    out: Option<&Path>,
    o: &mut Outcome,
) -> Result<(), CliError> {
    let field = Field::parse_descriptor(field)?;
    let g = load_group(group)?;
    let hom = g.grading(deg)?.clone();
    let tables = enumerate_group_rb(&hom, bound)?;
    o.message(format!("count: {}", tables.len()));
    if oracle {
        let naive = enumerate_group_rb_naive(&hom, bound)?;
        let mut r = CheckReport::new();
        r.check_flag("pruned search equals unpruned search", &[], &[], naive == tables);
        o.message(format!("oracle count: {}", naive.len()));
        o.section("oracle", r);
    }
    let mut lin = CheckReport::new();
    for (i, t) in tables.iter().enumerate() {
        let rb = linearize_group_rb(field, &hom, t)?;
        lin.check_flag("linearized operator passes the Rota-Baxter checker", &[], &[i], check_rb(rb.carrier(), rb.operator())?.passed());
    }
    o.section("linearized operators", lin);
    for t in &tables {
        let names: Vec<&str> = t.iter().map(|&x| hom.source().name(x)).collect();
        o.message(format!("  [{}]", names.join(", ")));
    }
    if !o.passed() {
        return Ok(());
    }
    let count = tables.len();
    let e = RbEnumeration { grading_name: deg.to_string(), deg: hom, tables, count };
    if let Some(path) = out {
        emit(o, Document { field, structure: Structure::RbEnumeration(e) }, Some(path))?;
    }
    Ok(())
}

fn ybe(path: &Path, n: usize, perturb: bool, o: &mut Outcome) -> Result<(), CliError> {
    let (_, b) = load_brace(path)?;
    let h = b.dot();
    let mut c = braiding_c(&b)?;
    let sigma = braiding_sigma(h)?;
    if perturb {
        let (a, bb) = h
            .grades()
            .flat_map(|a| h.grades().map(move |bb| (a, bb)))
            .find(|&(a, bb)| h.dim(a) * h.dim(bb) > 0)
            .ok_or_else(|| CliError::Usage("no nonzero component to perturb".into()))?;
        let mut m = c.map(a, bb).clone();
        let bumped = m.get(0, 0) + &h.field().one();
        m.set(0, 0, bumped);
        c = c.with_map(a, bb, m)?;
        o.message(format!("perturbed c at grades ({}, {})", h.group().name(a), h.group().name(bb)));
    }
    let triples = all_grade_triples(h.space());
    o.section("braid equation for c", check_braid_equation(h, &c, &triples));
    o.section("braid equation for σ", check_braid_equation(h, &sigma, &triples));
    let inter = if perturb {
        braid_intertwiner_check_with(h, &left_action(&b), &c, &sigma, n)?
    } else {
        braid_intertwiner_check(&b, n)?
    };
    o.message(format!("intertwiner orientation: {}", inter.orientation()));
    o.section(format!("intertwiner f_{n}"), inter.report);
    Ok(())
}
