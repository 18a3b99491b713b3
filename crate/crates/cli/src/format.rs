//! The JSON document format shared by every command.
//!
//! A document is `{format_version, field, kind, payload}`. Scalars are
//! strings in canonical form, tensors and matrices are sparse lists of
//! `[index.., "value"]` entries, and every object rejects unknown keys.
//! [`encode`] is canonical: keys sorted, zero entries omitted, entries in
//! index order.

use std::sync::Arc;

use hopfpi::coalgebra::Coalgebra;
use hopfpi::{
    ActionFamily, ActionSide, DenseMatrix, Factorization, Field, FiniteGroup, GradedLinearMap, GradedSpace,
    GroupHom, HopfPiAlgebra, HopfPiBrace, MatchedPair, PiBialgebra, Scalar, StructureTensor, Vector,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use serde_json::Value;

use crate::error::CliError;

pub const FORMAT_VERSION: &str = "1";

type Entry1 = (usize, String);
type Entry2 = (usize, usize, String);
type Entry3 = (usize, usize, usize, String);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope<'a> {
    format_version: String,
    field: String,
    kind: String,
    #[serde(borrow)]
    payload: &'a RawValue,
}

#[derive(Serialize)]
struct EnvelopeOut {
    format_version: &'static str,
    field: String,
    kind: &'static str,
    payload: Value,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupData {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GradingData {
    name: String,
    target: GroupData,
    map: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDoc {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    gradings: Vec<GradingData>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoalgebraData {
    comult: Vec<Entry3>,
    counit: Vec<Entry1>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraData {
    mult: Vec<Vec<Entry3>>,
    unit: Vec<Entry1>,
    antipode: Vec<Vec<Entry2>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfData {
    group: GroupData,
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    coalgebras: Vec<CoalgebraData>,
    mult: Vec<Vec<Entry3>>,
    unit: Vec<Entry1>,
    antipode: Vec<Vec<Entry2>>,
}

/// Two structures on one coalgebra family.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BraceData {
    group: GroupData,
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    coalgebras: Vec<CoalgebraData>,
    dot: AlgebraData,
    circle: AlgebraData,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchedPairData {
    k: HopfData,
    h: HopfData,
    left: Vec<Vec<Entry3>>,
    right: Vec<Vec<Entry3>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PostHopfData {
    base: HopfData,
    triangle: Vec<Vec<Entry3>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RotaBaxterData {
    carrier: HopfData,
    operator: Vec<Vec<Entry2>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixData {
    rows: usize,
    cols: usize,
    entries: Vec<Entry2>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorizationData {
    carrier: HopfData,
    g: MatrixData,
    k: Vec<MatrixData>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionData {
    acting: HopfData,
    target: HopfData,
    blocks: Vec<Vec<Entry3>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomorphismsData {
    group: GroupData,
    matrices: Vec<MatrixData>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinearMapData {
    blocks: Vec<MatrixData>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RbEnumerationData {
    group: GroupData,
    grading: GradingData,
    count: usize,
    tables: Vec<Vec<usize>>,
}

/// A group with named gradings.
#[derive(Clone, Debug)]
pub struct GroupWithGradings {
    pub group: Arc<FiniteGroup>,
    pub gradings: Vec<(String, GroupHom)>,
}

impl GroupWithGradings {
    pub fn grading(&self, name: &str) -> Result<&GroupHom, CliError> {
        self.gradings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, h)| h)
            .ok_or_else(|| {
                let known: Vec<&str> = self.gradings.iter().map(|(n, _)| n.as_str()).collect();
                CliError::Usage(format!("no grading named {name:?} (available: {})", known.join(", ")))
            })
    }
}

/// Result set of a set-level Rota-Baxter search.
#[derive(Clone, Debug)]
pub struct RbEnumeration {
    pub grading_name: String,
    pub deg: GroupHom,
    pub tables: Vec<Vec<usize>>,
    pub count: usize,
}

/// Parsed payload. Structures whose defining axioms are what validation
/// tests (post-Hopf, Rota-Baxter) are kept as raw parts.
#[derive(Clone, Debug)]
pub enum Structure {
    Group(GroupWithGradings),
    Hopf(HopfPiAlgebra),
    Brace(HopfPiBrace),
    MatchedPair(MatchedPair),
    PostHopf { base: HopfPiAlgebra, triangle: ActionFamily },
    RotaBaxter { carrier: HopfPiAlgebra, operator: GradedLinearMap },
    Factorization { carrier: HopfPiAlgebra, factorization: Factorization },
    Action { acting: HopfPiAlgebra, target: HopfPiAlgebra, action: ActionFamily },
    Automorphisms { group: Arc<FiniteGroup>, matrices: Vec<DenseMatrix> },
    LinearMap { blocks: Vec<DenseMatrix> },
    RbEnumeration(RbEnumeration),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Group(_) => "group",
            Structure::Hopf(_) => "hopf_pi_algebra",
            Structure::Brace(_) => "brace",
            Structure::MatchedPair(_) => "matched_pair",
            Structure::PostHopf { .. } => "post_hopf",
            Structure::RotaBaxter { .. } => "rota_baxter",
            Structure::Factorization { .. } => "factorization",
            Structure::Action { .. } => "action",
            Structure::Automorphisms { .. } => "automorphisms",
            Structure::LinearMap { .. } => "linear_map",
            Structure::RbEnumeration(_) => "rb_enumeration",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Document {
    pub field: Field,
    pub structure: Structure,
}

// ---------------------------------------------------------------- parsing

/// Byte offset of `inner` inside `outer`, when it is a subslice.
fn offset_in(outer: &str, inner: &str) -> usize {
    (inner.as_ptr() as usize).saturating_sub(outer.as_ptr() as usize).min(outer.len())
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, col)
}

fn syntax_error(err: &serde_json::Error) -> CliError {
    CliError::Parse(format!("line {} column {}: {}", err.line(), err.column(), strip_position(err)))
}

fn strip_position(err: &serde_json::Error) -> String {
    let text = err.to_string();
    match text.rfind(" at line ") {
        Some(p) => text[..p].to_string(),
        None => text,
    }
}

fn payload<T: DeserializeOwned>(text: &str, raw: &RawValue) -> Result<T, CliError> {
    serde_json::from_str(raw.get()).map_err(|e| {
        let (line0, col0) = line_col(text, offset_in(text, raw.get()));
        let line = line0 + e.line() - 1;
        let col = if e.line() == 1 { col0 + e.column() - 1 } else { e.column() };
        CliError::Parse(format!("line {line} column {col}: payload: {}", strip_position(&e)))
    })
}

/// Strict parse: every object rejects unknown keys, every index is range
/// checked and every structure is shape-checked before any math runs.
pub fn parse_document(bytes: &[u8]) -> Result<Document, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        CliError::Parse(format!("byte offset {}: input is not UTF-8", e.valid_up_to()))
    })?;
    let env: Envelope = serde_json::from_str(text).map_err(|e| syntax_error(&e))?;
    if env.format_version != FORMAT_VERSION {
        return Err(CliError::Parse(format!(
            "unsupported format_version {:?} (expected {FORMAT_VERSION:?})",
            env.format_version
        )));
    }
    let field = Field::parse_descriptor(&env.field)?;
    let raw = env.payload;
    let structure = match env.kind.as_str() {
        "group" => Structure::Group(decode_group_doc(payload(text, raw)?)?),
        "hopf_pi_algebra" => Structure::Hopf(decode_hopf(field, payload(text, raw)?)?),
        "brace" => Structure::Brace(decode_brace(field, payload(text, raw)?)?),
        "matched_pair" => {
            let d: MatchedPairData = payload(text, raw)?;
            let k = decode_hopf(field, d.k)?;
            let h = decode_hopf(field, d.h)?;
            let left = decode_action(field, ActionSide::Left, h.space(), k.space(), &d.left, "left")?;
            let right = decode_action(field, ActionSide::Right, h.space(), k.space(), &d.right, "right")?;
            Structure::MatchedPair(MatchedPair::new(k, h, left, right)?)
        }
        "post_hopf" => {
            let d: PostHopfData = payload(text, raw)?;
            let base = decode_hopf(field, d.base)?;
            let triangle = decode_action(field, ActionSide::Left, base.space(), base.space(), &d.triangle, "triangle")?;
            Structure::PostHopf { base, triangle }
        }
        "rota_baxter" => {
            let d: RotaBaxterData = payload(text, raw)?;
            let carrier = decode_hopf(field, d.carrier)?;
            let operator = decode_grade_inverting(field, carrier.space(), &d.operator, "operator")?;
            Structure::RotaBaxter { carrier, operator }
        }
        "factorization" => {
            let d: FactorizationData = payload(text, raw)?;
            let carrier = decode_hopf(field, d.carrier)?;
            let g = decode_matrix(field, &d.g, "g")?;
            if g.rows() != carrier.dim(carrier.group().identity()) {
                return Err(CliError::Parse("g: rows must match the identity grade".into()));
            }
            if d.k.len() != carrier.group().size() {
                return Err(CliError::Parse("k: one inclusion per grade".into()));
            }
            let mut k = Vec::new();
            for (a, m) in d.k.iter().enumerate() {
                let m = decode_matrix(field, m, &format!("k[{a}]"))?;
                if m.rows() != carrier.dim(a) {
                    return Err(CliError::Parse(format!("k[{a}]: rows must match grade dimension")));
                }
                k.push(m);
            }
            Structure::Factorization { carrier, factorization: Factorization::new(g, k) }
        }
        "action" => {
            let d: ActionData = payload(text, raw)?;
            let acting = decode_hopf(field, d.acting)?;
            let target = decode_hopf(field, d.target)?;
            let action = decode_action(field, ActionSide::Left, acting.space(), target.space(), &d.blocks, "blocks")?;
            Structure::Action { acting, target, action }
        }
        "automorphisms" => {
            let d: AutomorphismsData = payload(text, raw)?;
            let group = Arc::new(decode_group(d.group)?);
            if d.matrices.len() != group.size() {
                return Err(CliError::Parse("matrices: one per group element".into()));
            }
            let matrices = d
                .matrices
                .iter()
                .enumerate()
                .map(|(i, m)| decode_matrix(field, m, &format!("matrices[{i}]")))
                .collect::<Result<_, _>>()?;
            Structure::Automorphisms { group, matrices }
        }
        "linear_map" => {
            let d: LinearMapData = payload(text, raw)?;
            let blocks = d
                .blocks
                .iter()
                .enumerate()
                .map(|(i, m)| decode_matrix(field, m, &format!("blocks[{i}]")))
                .collect::<Result<_, _>>()?;
            Structure::LinearMap { blocks }
        }
        "rb_enumeration" => {
            let d: RbEnumerationData = payload(text, raw)?;
            let group = Arc::new(decode_group(d.group)?);
            let (grading_name, deg) = decode_grading(&group, d.grading)?;
            if d.tables.iter().any(|t| t.len() != group.size() || t.iter().any(|&x| x >= group.size())) {
                return Err(CliError::Parse("tables: each table maps every element into the group".into()));
            }
            Structure::RbEnumeration(RbEnumeration { grading_name, deg, tables: d.tables, count: d.count })
        }
        other => return Err(CliError::Parse(format!("unknown kind {other:?}"))),
    };
    Ok(Document { field, structure })
}

fn decode_group(d: GroupData) -> Result<FiniteGroup, CliError> {
    Ok(FiniteGroup::new(d.names, d.table)?)
}

fn decode_grading(source: &Arc<FiniteGroup>, d: GradingData) -> Result<(String, GroupHom), CliError> {
    let target = Arc::new(decode_group(d.target)?);
    Ok((d.name, GroupHom::new(source.clone(), target, d.map)?))
}

fn decode_group_doc(d: GroupDoc) -> Result<GroupWithGradings, CliError> {
    let group = Arc::new(decode_group(GroupData { names: d.names, table: d.table })?);
    let mut gradings = Vec::new();
    for g in d.gradings {
        if gradings.iter().any(|(n, _): &(String, GroupHom)| *n == g.name) {
            return Err(CliError::Parse(format!("duplicate grading name {:?}", g.name)));
        }
        gradings.push(decode_grading(&group, g)?);
    }
    Ok(GroupWithGradings { group, gradings })
}

fn scalar(field: Field, text: &str, ctx: &str) -> Result<Scalar, CliError> {
    field.parse_scalar(text).map_err(|e| CliError::Parse(format!("{ctx}: {e}")))
}

fn out_of_range(ctx: &str, index: &str, shape: &str) -> CliError {
    CliError::Parse(format!("{ctx}: entry {index} outside shape {shape}"))
}

fn duplicate(ctx: &str, index: &str) -> CliError {
    CliError::Parse(format!("{ctx}: duplicate entry {index}"))
}

fn decode_tensor(
    field: Field,
    shape: (usize, usize, usize),
    entries: &[Entry3],
    ctx: &str,
) -> Result<StructureTensor, CliError> {
    let (a, b, c) = shape;
    let mut dense = vec![field.zero(); a * b * c];
    let mut seen = vec![false; a * b * c];
    for (i, j, k, v) in entries {
        let idx = format!("[{i}, {j}, {k}]");
        if *i >= a || *j >= b || *k >= c {
            return Err(out_of_range(ctx, &idx, &format!("{a}x{b}x{c}")));
        }
        let p = (i * b + j) * c + k;
        if std::mem::replace(&mut seen[p], true) {
            return Err(duplicate(ctx, &idx));
        }
        dense[p] = scalar(field, v, ctx)?;
    }
    Ok(StructureTensor::new(field, shape, dense)?)
}

fn decode_dense(field: Field, rows: usize, cols: usize, entries: &[Entry2], ctx: &str) -> Result<DenseMatrix, CliError> {
    let mut dense = vec![field.zero(); rows * cols];
    let mut seen = vec![false; rows * cols];
    for (r, c, v) in entries {
        let idx = format!("[{r}, {c}]");
        if *r >= rows || *c >= cols {
            return Err(out_of_range(ctx, &idx, &format!("{rows}x{cols}")));
        }
        let p = r * cols + c;
        if std::mem::replace(&mut seen[p], true) {
            return Err(duplicate(ctx, &idx));
        }
        dense[p] = scalar(field, v, ctx)?;
    }
    Ok(DenseMatrix::new(field, rows, cols, dense)?)
}

fn decode_matrix(field: Field, m: &MatrixData, ctx: &str) -> Result<DenseMatrix, CliError> {
    decode_dense(field, m.rows, m.cols, &m.entries, ctx)
}

fn decode_vector(field: Field, len: usize, entries: &[Entry1], ctx: &str) -> Result<Vector, CliError> {
    let mut dense = vec![field.zero(); len];
    let mut seen = vec![false; len];
    for (i, v) in entries {
        let idx = format!("[{i}]");
        if *i >= len {
            return Err(out_of_range(ctx, &idx, &len.to_string()));
        }
        if std::mem::replace(&mut seen[*i], true) {
            return Err(duplicate(ctx, &idx));
        }
        dense[*i] = scalar(field, v, ctx)?;
    }
    Ok(dense)
}

fn expect_len<T>(items: &[T], n: usize, ctx: &str) -> Result<(), CliError> {
    if items.len() != n {
        return Err(CliError::Parse(format!("{ctx}: {} blocks, expected {n}", items.len())));
    }
    Ok(())
}

fn decode_space(
    field: Field,
    group: GroupData,
    dims: Vec<usize>,
    coalgebras: &[CoalgebraData],
) -> Result<(GradedSpace, Vec<Coalgebra>), CliError> {
    let group = Arc::new(decode_group(group)?);
    expect_len(&dims, group.size(), "dims")?;
    let space = GradedSpace::new(field, group.clone(), dims)?;
    expect_len(coalgebras, group.size(), "coalgebras")?;
    let mut out = Vec::new();
    for (a, c) in coalgebras.iter().enumerate() {
        let d = space.dim(a);
        let ctx = format!("coalgebras[{a}]");
        let comult = decode_tensor(field, (d, d, d), &c.comult, &format!("{ctx}.comult"))?;
        let counit = decode_vector(field, d, &c.counit, &format!("{ctx}.counit"))?;
        out.push(Coalgebra::new(field, d, comult, counit)?);
    }
    Ok((space, out))
}

fn decode_algebra(
    field: Field,
    space: &GradedSpace,
    coalgebras: Vec<Coalgebra>,
    labels: Vec<Vec<String>>,
    alg: &AlgebraData,
    ctx: &str,
) -> Result<HopfPiAlgebra, CliError> {
    let g = space.group().clone();
    let n = g.size();
    expect_len(&alg.mult, n * n, &format!("{ctx}mult"))?;
    let mut mult = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            let shape = (space.dim(g.mul(a, b)), space.dim(a), space.dim(b));
            mult.push(decode_tensor(field, shape, &alg.mult[a * n + b], &format!("{ctx}mult[{}]", a * n + b))?);
        }
    }
    let unit = decode_vector(field, space.dim(g.identity()), &alg.unit, &format!("{ctx}unit"))?;
    let bi = PiBialgebra::with_labels(space.clone(), coalgebras, mult, unit, labels)?;
    let s = decode_grade_inverting(field, space, &alg.antipode, &format!("{ctx}antipode"))?;
    Ok(HopfPiAlgebra::new(bi, s)?)
}

fn decode_grade_inverting(
    field: Field,
    space: &GradedSpace,
    blocks: &[Vec<Entry2>],
    ctx: &str,
) -> Result<GradedLinearMap, CliError> {
    let g = space.group();
    expect_len(blocks, g.size(), ctx)?;
    let mats = g
        .elements()
        .map(|a| decode_dense(field, space.dim(g.inv(a)), space.dim(a), &blocks[a], &format!("{ctx}[{a}]")))
        .collect::<Result<_, _>>()?;
    Ok(GradedLinearMap::grade_inverting(space, mats)?)
}

fn decode_hopf(field: Field, d: HopfData) -> Result<HopfPiAlgebra, CliError> {
    let (space, coalgebras) = decode_space(field, d.group, d.dims, &d.coalgebras)?;
    let alg = AlgebraData { mult: d.mult, unit: d.unit, antipode: d.antipode };
    decode_algebra(field, &space, coalgebras, d.labels, &alg, "")
}

fn decode_brace(field: Field, d: BraceData) -> Result<HopfPiBrace, CliError> {
    let (space, coalgebras) = decode_space(field, d.group, d.dims, &d.coalgebras)?;
    let dot = decode_algebra(field, &space, coalgebras.clone(), d.labels.clone(), &d.dot, "dot.")?;
    let circle = decode_algebra(field, &space, coalgebras, d.labels, &d.circle, "circle.")?;
    Ok(HopfPiBrace::new(dot, circle)?)
}

fn decode_action(
    field: Field,
    side: ActionSide,
    first: &GradedSpace,
    second: &GradedSpace,
    blocks: &[Vec<Entry3>],
    ctx: &str,
) -> Result<ActionFamily, CliError> {
    let n2 = second.group().size();
    expect_len(blocks, first.group().size() * n2, ctx)?;
    let mut tensors = Vec::new();
    for a in first.grades() {
        for b in second.grades() {
            let out = match side {
                ActionSide::Left => second.dim(b),
                ActionSide::Right => first.dim(a),
            };
            let shape = (out, first.dim(a), second.dim(b));
            tensors.push(decode_tensor(field, shape, &blocks[a * n2 + b], &format!("{ctx}[{}]", a * n2 + b))?);
        }
    }
    Ok(ActionFamily::new(side, first.clone(), second.clone(), tensors)?)
}

// ---------------------------------------------------------------- encoding

fn enc_group(g: &FiniteGroup) -> GroupData {
    GroupData { names: g.names().to_vec(), table: g.table_rows() }
}

fn enc_grading(name: &str, hom: &GroupHom) -> GradingData {
    GradingData { name: name.to_string(), target: enc_group(hom.target()), map: hom.map().to_vec() }
}

fn enc_tensor(t: &StructureTensor) -> Vec<Entry3> {
    let (_, b, c) = t.shape();
    t.entries()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(p, v)| (p / (b * c), (p / c) % b, p % c, v.to_string()))
        .collect()
}

fn enc_dense(m: &DenseMatrix) -> Vec<Entry2> {
    let cols = m.cols();
    m.entries()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(p, v)| (p / cols, p % cols, v.to_string()))
        .collect()
}

fn enc_matrix(m: &DenseMatrix) -> MatrixData {
    MatrixData { rows: m.rows(), cols: m.cols(), entries: enc_dense(m) }
}

fn enc_vector(v: &[Scalar]) -> Vec<Entry1> {
    v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.to_string())).collect()
}

fn enc_coalgebras(h: &HopfPiAlgebra) -> Vec<CoalgebraData> {
    h.coalgebras()
        .iter()
        .map(|c| CoalgebraData { comult: enc_tensor(c.comult_tensor()), counit: enc_vector(c.counit()) })
        .collect()
}

fn enc_algebra(h: &HopfPiAlgebra) -> AlgebraData {
    AlgebraData {
        mult: h.mult_tensors().iter().map(enc_tensor).collect(),
        unit: enc_vector(h.unit()),
        antipode: h.antipode().blocks().iter().map(enc_dense).collect(),
    }
}

fn enc_hopf(h: &HopfPiAlgebra) -> HopfData {
    let alg = enc_algebra(h);
    HopfData {
        group: enc_group(h.group()),
        dims: h.space().dims().to_vec(),
        labels: h.all_labels().to_vec(),
        coalgebras: enc_coalgebras(h),
        mult: alg.mult,
        unit: alg.unit,
        antipode: alg.antipode,
    }
}

fn enc_action(act: &ActionFamily) -> Vec<Vec<Entry3>> {
    act.tensors().iter().map(enc_tensor).collect()
}

fn to_value<T: Serialize>(t: T) -> Value {
    serde_json::to_value(t).expect("payload serializes")
}

fn payload_value(s: &Structure) -> Value {
    match s {
        Structure::Group(g) => to_value(GroupDoc {
            names: g.group.names().to_vec(),
            table: g.group.table_rows(),
            gradings: g.gradings.iter().map(|(n, h)| enc_grading(n, h)).collect(),
        }),
        Structure::Hopf(h) => to_value(enc_hopf(h)),
        Structure::Brace(b) => to_value(BraceData {
            group: enc_group(b.group()),
            dims: b.space().dims().to_vec(),
            labels: b.dot().all_labels().to_vec(),
            coalgebras: enc_coalgebras(b.dot()),
            dot: enc_algebra(b.dot()),
            circle: enc_algebra(b.circle()),
        }),
        Structure::MatchedPair(mp) => to_value(MatchedPairData {
            k: enc_hopf(mp.k()),
            h: enc_hopf(mp.h()),
            left: enc_action(mp.left()),
            right: enc_action(mp.right()),
        }),
        Structure::PostHopf { base, triangle } => {
            to_value(PostHopfData { base: enc_hopf(base), triangle: enc_action(triangle) })
        }
        Structure::RotaBaxter { carrier, operator } => to_value(RotaBaxterData {
            carrier: enc_hopf(carrier),
            operator: operator.blocks().iter().map(enc_dense).collect(),
        }),
        Structure::Factorization { carrier, factorization } => to_value(FactorizationData {
            carrier: enc_hopf(carrier),
            g: enc_matrix(factorization.g()),
            k: factorization.k().iter().map(enc_matrix).collect(),
        }),
        Structure::Action { acting, target, action } => to_value(ActionData {
            acting: enc_hopf(acting),
            target: enc_hopf(target),
            blocks: enc_action(action),
        }),
        Structure::Automorphisms { group, matrices } => to_value(AutomorphismsData {
            group: enc_group(group),
            matrices: matrices.iter().map(enc_matrix).collect(),
        }),
        Structure::LinearMap { blocks } => to_value(LinearMapData { blocks: blocks.iter().map(enc_matrix).collect() }),
        Structure::RbEnumeration(e) => to_value(RbEnumerationData {
            group: enc_group(e.deg.source()),
            grading: enc_grading(&e.grading_name, &e.deg),
            count: e.count,
            tables: e.tables.clone(),
        }),
    }
}

/// Canonical text of a document, newline-terminated.
pub fn encode(doc: &Document) -> String {
    let env = to_value(EnvelopeOut {
        format_version: FORMAT_VERSION,
        field: doc.field.descriptor(),
        kind: doc.structure.kind(),
        payload: payload_value(&doc.structure),
    });
    let mut out = String::new();
    write_value(&env, 0, &mut out);
    out.push('\n');
    out
}

/// Objects expand one key per line; arrays holding no objects stay on one
/// line so sparse entry lists remain compact.
pub fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            let mut first = true;
            for (k, val) in map {
                if !first {
                    out.push_str(",\n");
                }
                first = false;
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                write_value(val, indent + 1, out);
            }
            out.push('\n');
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(contains_object) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(",\n");
                }
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
            }
            out.push('\n');
            out.push_str(&pad(indent));
            out.push(']');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("value")),
    }
}

fn contains_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(contains_object),
        _ => false,
    }
}
