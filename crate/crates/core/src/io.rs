//! Canonical JSON file format for Hopf (super)algebra data.
//!
//! A file carries the declared cyclotomic order, basis labels, optional
//! parity vector, the structure tensors (sparse `mult`/`comult`, dense
//! `antipode`), and optional `rmatrix`/`twist` elements. Emission is
//! canonical: keys sorted, sparse entries sorted by index, every scalar
//! reduced and printed as `{"c": [...], "n": order}`, so `emit(parse(f))`
//! is byte-identical for canonical inputs.

use crate::algebra::AlgebraData;
use crate::error::ExactError;
use crate::hopf::HopfData;
use crate::linalg::{Matrix, Tensor3};
use crate::scalar::{format_rational, parse_rational, CycScalar};
use crate::superalg::SuperHopfData;
use crate::tensor::PairElement;
use serde_json::{json, Map, Value};

/// Parsed contents of a file: the Hopf data plus the optional extras.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FileBundle {
    pub order: u64,
    pub labels: Vec<String>,
    pub parity: Option<Vec<usize>>,
    pub hopf: HopfData,
    pub rmatrix: Option<PairElement>,
    pub twist: Option<PairElement>,
}

impl FileBundle {
    pub fn from_hopf(h: HopfData) -> Self {
        let dim = h.dim();
        FileBundle {
            order: scalar_order_of(&h),
            labels: (0..dim).map(|i| format!("e{i}")).collect(),
            parity: None,
            hopf: h,
            rmatrix: None,
            twist: None,
        }
    }

    pub fn from_super(s: SuperHopfData) -> Self {
        let mut b = Self::from_hopf(s.hopf);
        b.parity = Some(s.parity);
        b
    }

    pub fn with_rmatrix(mut self, r: PairElement) -> Self {
        self.order = lcm_order(self.order, pair_order(&r));
        self.rmatrix = Some(r);
        self
    }

    pub fn with_twist(mut self, j: PairElement) -> Self {
        self.order = lcm_order(self.order, pair_order(&j));
        self.twist = Some(j);
        self
    }

    /// The parity-annotated view, when a parity vector is present.
    pub fn super_hopf(&self) -> Option<SuperHopfData> {
        self.parity.as_ref().map(|p| SuperHopfData {
            hopf: self.hopf.clone(),
            parity: p.clone(),
        })
    }
}

fn lcm_order(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

fn scalar_order_of(h: &HopfData) -> u64 {
    let mut n = 1;
    for c in &h.alg.unit {
        n = lcm_order(n, c.order());
    }
    for (_, c) in h.alg.mult.iter() {
        n = lcm_order(n, c.order());
    }
    for (_, c) in h.comult.iter() {
        n = lcm_order(n, c.order());
    }
    for c in &h.counit {
        n = lcm_order(n, c.order());
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            n = lcm_order(n, h.antipode.get(i, j).order());
        }
    }
    n
}

fn pair_order(x: &PairElement) -> u64 {
    let mut n = 1;
    for v in x.to_vec() {
        n = lcm_order(n, v.order());
    }
    n
}

// ---- emission ----

fn scalar_value(c: &CycScalar, order: u64) -> Value {
    let c = c.coerce_to_order(order).expect("declared order divides all scalar orders");
    let coeffs: Vec<Value> = c
        .coeffs()
        .iter()
        .map(|r| Value::String(format_rational(r)))
        .collect();
    let mut m = Map::new();
    m.insert("c".into(), Value::Array(coeffs));
    m.insert("n".into(), Value::Number(order.into()));
    Value::Object(m)
}

fn sparse_tensor_value(t: &Tensor3, order: u64) -> Value {
    let mut entries: Vec<(usize, usize, usize)> = t.iter().map(|(&k, _)| k).collect();
    entries.sort();
    Value::Array(
        entries
            .into_iter()
            .map(|(i, j, k)| {
                json!([i, j, k, scalar_value(&t.get(i, j, k), order)])
            })
            .collect(),
    )
}

fn sparse_pair_value(x: &PairElement, order: u64) -> Value {
    let d = x.dim;
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let c = x.get(i, j);
            if !c.is_zero() {
                out.push(json!([i, j, scalar_value(c, order)]));
            }
        }
    }
    Value::Array(out)
}

/// Serialize to the canonical byte form.
pub fn emit_file(b: &FileBundle) -> String {
    let order = b.order;
    let dim = b.hopf.dim();
    let mut root = Map::new();
    root.insert(
        "scalar_field".into(),
        json!({ "cyclotomic_order": order }),
    );
    root.insert("dimension".into(), Value::Number(dim.into()));
    root.insert(
        "basis".into(),
        Value::Array(b.labels.iter().map(|s| Value::String(s.clone())).collect()),
    );
    if let Some(p) = &b.parity {
        root.insert(
            "parity".into(),
            Value::Array(p.iter().map(|&v| Value::Number(v.into())).collect()),
        );
    }
    root.insert(
        "unit".into(),
        Value::Array(b.hopf.alg.unit.iter().map(|c| scalar_value(c, order)).collect()),
    );
    root.insert("mult".into(), sparse_tensor_value(&b.hopf.alg.mult, order));
    root.insert("comult".into(), sparse_tensor_value(&b.hopf.comult, order));
    root.insert(
        "counit".into(),
        Value::Array(b.hopf.counit.iter().map(|c| scalar_value(c, order)).collect()),
    );
    let antipode: Vec<Value> = (0..dim)
        .map(|i| {
            Value::Array(
                (0..dim)
                    .map(|j| scalar_value(b.hopf.antipode.get(i, j), order))
                    .collect(),
            )
        })
        .collect();
    root.insert("antipode".into(), Value::Array(antipode));
    if let Some(r) = &b.rmatrix {
        root.insert("rmatrix".into(), sparse_pair_value(r, order));
    }
    if let Some(j) = &b.twist {
        root.insert("twist".into(), sparse_pair_value(j, order));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("serializable");
    s.push('\n');
    s
}

// ---- parsing ----

fn perr(field: &str, reason: impl Into<String>) -> ExactError {
    ExactError::Parse {
        field: field.to_string(),
        reason: reason.into(),
    }
}

fn get_field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value, ExactError> {
    obj.get(name).ok_or_else(|| perr(name, format!("{name} required")))
}

fn as_usize(v: &Value, field: &str) -> Result<usize, ExactError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| perr(field, "expected a nonnegative integer"))
}

fn parse_scalar(v: &Value, order: u64, field: &str) -> Result<CycScalar, ExactError> {
    match v {
        Value::String(s) => {
            let r = parse_rational(s).map_err(|e| perr(field, e.to_string()))?;
            CycScalar::from_rational(r)
                .coerce_to_order(order)
                .map_err(|e| perr(field, e.to_string()))
        }
        Value::Object(m) => {
            let n = as_usize(get_field(m, "n").map_err(|_| perr(field, "scalar needs \"n\""))?, field)? as u64;
            let Some(Value::Array(cs)) = m.get("c") else {
                return Err(perr(field, "scalar needs coefficient array \"c\""));
            };
            let mut coeffs = Vec::with_capacity(cs.len());
            for c in cs {
                let Value::String(s) = c else {
                    return Err(perr(field, "scalar coefficients must be strings"));
                };
                coeffs.push(parse_rational(s).map_err(|e| perr(field, e.to_string()))?);
            }
            CycScalar::from_coeffs(n, coeffs)
                .and_then(|c| c.coerce_to_order(order))
                .map_err(|e| perr(field, e.to_string()))
        }
        _ => Err(perr(field, "expected a scalar (string or {\"c\",\"n\"} object)")),
    }
}

fn parse_scalar_vec(v: &Value, dim: usize, order: u64, field: &str) -> Result<Vec<CycScalar>, ExactError> {
    let Value::Array(items) = v else {
        return Err(perr(field, "expected an array"));
    };
    if items.len() != dim {
        return Err(perr(field, format!("expected {dim} entries, found {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, item)| parse_scalar(item, order, &format!("{field}[{i}]")))
        .collect()
}

fn parse_sparse_tensor(v: &Value, dim: usize, order: u64, field: &str) -> Result<Tensor3, ExactError> {
    let Value::Array(items) = v else {
        return Err(perr(field, "expected an array of [i, j, k, scalar] entries"));
    };
    let mut t = Tensor3::new((dim, dim, dim));
    for (pos, item) in items.iter().enumerate() {
        let here = format!("{field}[{pos}]");
        let Value::Array(quad) = item else {
            return Err(perr(&here, "expected [i, j, k, scalar]"));
        };
        if quad.len() != 4 {
            return Err(perr(&here, "expected exactly 4 components"));
        }
        let i = as_usize(&quad[0], &here)?;
        let j = as_usize(&quad[1], &here)?;
        let k = as_usize(&quad[2], &here)?;
        if i >= dim || j >= dim || k >= dim {
            return Err(perr(&here, format!("index out of range for dimension {dim}")));
        }
        let c = parse_scalar(&quad[3], order, &here)?;
        t.set(i, j, k, c);
    }
    Ok(t)
}

fn parse_sparse_pair(v: &Value, dim: usize, order: u64, field: &str) -> Result<PairElement, ExactError> {
    let Value::Array(items) = v else {
        return Err(perr(field, "expected an array of [i, j, scalar] entries"));
    };
    let mut x = PairElement::zero(dim);
    for (pos, item) in items.iter().enumerate() {
        let here = format!("{field}[{pos}]");
        let Value::Array(triple) = item else {
            return Err(perr(&here, "expected [i, j, scalar]"));
        };
        if triple.len() != 3 {
            return Err(perr(&here, "expected exactly 3 components"));
        }
        let i = as_usize(&triple[0], &here)?;
        let j = as_usize(&triple[1], &here)?;
        if i >= dim || j >= dim {
            return Err(perr(&here, format!("index out of range for dimension {dim}")));
        }
        x.set(i, j, parse_scalar(&triple[2], order, &here)?);
    }
    Ok(x)
}

/// Parse a document. Structural validation only (indices, shapes, scalars);
/// Hopf axiom checking is a separate concern.
pub fn parse_file(text: &str) -> Result<FileBundle, ExactError> {
    let value: Value = serde_json::from_str(text).map_err(|e| perr("document", e.to_string()))?;
    let Value::Object(root) = value else {
        return Err(perr("document", "top level must be an object"));
    };

    let field_obj = get_field(&root, "scalar_field")?;
    let Value::Object(sf) = field_obj else {
        return Err(perr("scalar_field", "expected an object"));
    };
    let order = as_usize(get_field(sf, "cyclotomic_order")?, "scalar_field.cyclotomic_order")? as u64;
    if order == 0 {
        return Err(perr("scalar_field.cyclotomic_order", "order must be positive"));
    }

    let dim = as_usize(get_field(&root, "dimension")?, "dimension")?;
    if dim == 0 {
        return Err(perr("dimension", "dimension must be positive"));
    }

    let labels = match get_field(&root, "basis")? {
        Value::Array(items) => {
            if items.len() != dim {
                return Err(perr("basis", format!("expected {dim} labels, found {}", items.len())));
            }
            items
                .iter()
                .map(|v| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| perr("basis", "labels must be strings"))
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        _ => return Err(perr("basis", "expected an array of labels")),
    };

    let parity = match root.get("parity") {
        None => None,
        Some(Value::Array(items)) => {
            if items.len() != dim {
                return Err(perr("parity", format!("expected {dim} entries, found {}", items.len())));
            }
            let mut p = Vec::with_capacity(dim);
            for (i, item) in items.iter().enumerate() {
                let b = as_usize(item, &format!("parity[{i}]"))?;
                if b > 1 {
                    return Err(perr(&format!("parity[{i}]"), "parity must be 0 or 1"));
                }
                p.push(b);
            }
            Some(p)
        }
        Some(_) => return Err(perr("parity", "expected an array of 0/1")),
    };

    let unit = parse_scalar_vec(get_field(&root, "unit")?, dim, order, "unit")?;
    let mult = parse_sparse_tensor(get_field(&root, "mult")?, dim, order, "mult")?;
    let comult = parse_sparse_tensor(get_field(&root, "comult")?, dim, order, "comult")?;
    let counit = parse_scalar_vec(get_field(&root, "counit")?, dim, order, "counit")?;

    let antipode_value = root
        .get("antipode")
        .ok_or_else(|| perr("antipode", "antipode required"))?;
    let Value::Array(rows) = antipode_value else {
        return Err(perr("antipode", "expected a dense matrix (array of rows)"));
    };
    if rows.len() != dim {
        return Err(perr("antipode", format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut antipode = Matrix::zero(dim, dim);
    for (i, row) in rows.iter().enumerate() {
        let entries = parse_scalar_vec(row, dim, order, &format!("antipode[{i}]"))?;
        for (j, c) in entries.into_iter().enumerate() {
            antipode.set(i, j, c);
        }
    }

    let rmatrix = match root.get("rmatrix") {
        None => None,
        Some(v) => Some(parse_sparse_pair(v, dim, order, "rmatrix")?),
    };
    let twist = match root.get("twist") {
        None => None,
        Some(v) => Some(parse_sparse_pair(v, dim, order, "twist")?),
    };

    let hopf = HopfData {
        alg: AlgebraData::new(dim, unit, mult),
        comult,
        counit,
        antipode,
    };
    Ok(FileBundle {
        order,
        labels,
        parity,
        hopf,
        rmatrix,
        twist,
    })
}

// ---- fusion ring files ----

/// Parse `{"rank": n, "unit": 0, "matrices": [[[...]]]}`.
pub fn parse_fusion(text: &str) -> Result<crate::catdim::FusionRingData, ExactError> {
    let value: Value = serde_json::from_str(text).map_err(|e| perr("document", e.to_string()))?;
    let Value::Object(root) = value else {
        return Err(perr("document", "top level must be an object"));
    };
    let rank = as_usize(get_field(&root, "rank")?, "rank")?;
    let unit = as_usize(get_field(&root, "unit")?, "unit")?;
    let Value::Array(ms) = get_field(&root, "matrices")? else {
        return Err(perr("matrices", "expected an array of matrices"));
    };
    let mut matrices = Vec::with_capacity(ms.len());
    for (i, m) in ms.iter().enumerate() {
        let Value::Array(rows) = m else {
            return Err(perr(&format!("matrices[{i}]"), "expected a matrix"));
        };
        let mut mat = Vec::with_capacity(rows.len());
        for (j, row) in rows.iter().enumerate() {
            let Value::Array(cells) = row else {
                return Err(perr(&format!("matrices[{i}][{j}]"), "expected a row"));
            };
            let mut r = Vec::with_capacity(cells.len());
            for (k, cell) in cells.iter().enumerate() {
                let v = cell
                    .as_i64()
                    .ok_or_else(|| perr(&format!("matrices[{i}][{j}][{k}]"), "expected an integer"))?;
                r.push(v);
            }
            mat.push(r);
        }
        matrices.push(mat);
    }
    let f = crate::catdim::FusionRingData { rank, unit, matrices };
    crate::catdim::check_fusion_ring(&f)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangular::sweedler;

    fn int(v: i64) -> CycScalar {
        CycScalar::from_int(v)
    }

    #[test]
    fn sweedler_round_trip_is_byte_identical() {
        let t = sweedler(&int(1));
        let b = FileBundle::from_hopf(t.hopf).with_rmatrix(t.r);
        let text = emit_file(&b);
        let parsed = parse_file(&text).unwrap();
        assert_eq!(parsed, b);
        assert_eq!(emit_file(&parsed), text);
    }

    #[test]
    fn parity_and_twist_round_trip() {
        let e2 = crate::superalg::exterior_hopf(2);
        let mut rmat = Matrix::zero(2, 2);
        rmat.set(0, 1, int(1));
        rmat.set(1, 0, int(1));
        let j = crate::twist::exp_twist(&e2, &rmat).unwrap();
        let b = FileBundle::from_super(e2).with_twist(j);
        let text = emit_file(&b);
        let parsed = parse_file(&text).unwrap();
        assert_eq!(parsed, b);
        assert_eq!(emit_file(&parsed), text);
    }

    #[test]
    fn shorthand_scalars_canonicalize() {
        let b = FileBundle::from_hopf(
            crate::superalg::group_algebra(&crate::superalg::GroupTable::cyclic(2)).unwrap(),
        );
        let canonical = emit_file(&b);
        // rewrite one canonical scalar as the "p/q" shorthand
        let mut v: Value = serde_json::from_str(&canonical).unwrap();
        v["unit"][0] = Value::String("2/2".into());
        let shorthand = serde_json::to_string(&v).unwrap();
        assert_ne!(shorthand, canonical);
        let parsed = parse_file(&shorthand).unwrap();
        assert_eq!(emit_file(&parsed), canonical);
    }

    #[test]
    fn division_by_zero_names_the_field() {
        let b = FileBundle::from_hopf(
            crate::superalg::group_algebra(&crate::superalg::GroupTable::cyclic(2)).unwrap(),
        );
        let mut v: Value = serde_json::from_str(&emit_file(&b)).unwrap();
        v["unit"][0]["c"][0] = Value::String("1/0".into());
        let err = parse_file(&serde_json::to_string(&v).unwrap()).unwrap_err();
        match err {
            ExactError::Parse { field, .. } => assert_eq!(field, "unit[0]"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn missing_antipode_is_reported() {
        let b = FileBundle::from_hopf(
            crate::superalg::group_algebra(&crate::superalg::GroupTable::cyclic(2)).unwrap(),
        );
        let text = emit_file(&b);
        let v: Value = serde_json::from_str(&text).unwrap();
        let Value::Object(mut root) = v else { unreachable!() };
        root.remove("antipode");
        let without = serde_json::to_string(&Value::Object(root)).unwrap();
        let err = parse_file(&without).unwrap_err();
        match err {
            ExactError::Parse { field, reason } => {
                assert_eq!(field, "antipode");
                assert_eq!(reason, "antipode required");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let b = FileBundle::from_hopf(
            crate::superalg::group_algebra(&crate::superalg::GroupTable::cyclic(2)).unwrap(),
        );
        let mut v: Value = serde_json::from_str(&emit_file(&b)).unwrap();
        v["mult"][0][2] = Value::Number(9.into());
        let err = parse_file(&serde_json::to_string(&v).unwrap()).unwrap_err();
        match err {
            ExactError::Parse { field, reason } => {
                assert_eq!(field, "mult[0]");
                assert!(reason.contains("out of range"), "reason {reason}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn cyclotomic_scalars_survive_the_round_trip() {
        // supergroup algebra over Z_4 acting by zeta_4 has order-4 scalars
        let g = crate::superalg::GroupTable::cyclic(4);
        let action: Vec<Matrix> = (0..4u64)
            .map(|k| {
                let mut m = Matrix::zero(1, 1);
                m.set(0, 0, CycScalar::zeta_pow(4, k));
                m
            })
            .collect();
        let s = crate::superalg::supergroup_algebra(&g, 1, &action).unwrap();
        let b = FileBundle::from_super(s);
        assert_eq!(b.order, 4);
        let text = emit_file(&b);
        let parsed = parse_file(&text).unwrap();
        assert_eq!(parsed, b);
        assert_eq!(emit_file(&parsed), text);
    }

    #[test]
    fn fusion_file_round_trip() {
        let f = parse_fusion("{\"rank\": 2, \"unit\": 0, \"matrices\": [[[1,0],[0,1]],[[0,1],[1,0]]]}").unwrap();
        assert_eq!(f.rank, 2);
        assert!(parse_fusion("{\"rank\": 2, \"unit\": 5, \"matrices\": []}").is_err());
    }
}
