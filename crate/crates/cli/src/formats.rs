//! JSON and text formats: quandle tables, cocycles, sparse matrices as
//! triplets, and braid diagrams.

use std::fs;
use std::path::Path;

use quandle_core::alexander::AlexanderQuandle;
use quandle_core::cocycle::{Cocycle2, CyclicGroup};
use quandle_core::poly::LaurentPoly;
use quandle_core::vknot::{GroupRingValue, VirtualLinkDiagram};
use quandle_core::{AbelianGroupDescriptor, Coeffs, FiniteQuandle, Int, SparseMatrix};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// `{"label": ..., "size": n, "table": [[...]], "names": [...]}` with
/// `table[a][b] = a * b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub size: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl QuandleFile {
    pub fn from_quandle(x: &FiniteQuandle) -> Self {
        let names: Vec<String> = x.names().to_vec();
        let plain = names.iter().enumerate().all(|(i, n)| *n == i.to_string());
        QuandleFile { label: Some(x.label().to_string()), size: x.size(), table: x.table(), names: (!plain).then_some(names) }
    }

    pub fn into_quandle(self) -> Result<FiniteQuandle> {
        if self.table.len() != self.size {
            return Err(CliError::Usage(format!("table has {} rows, size is {}", self.table.len(), self.size)));
        }
        let mut x = FiniteQuandle::validate(self.table, self.label.unwrap_or_else(|| "X".into()))?;
        if let Some(names) = self.names {
            x = x.with_names(names)?;
        }
        Ok(x)
    }
}

/// A quandle together with its polynomial presentation when it has one.
#[derive(Clone, Debug)]
pub struct LoadedQuandle {
    pub quandle: FiniteQuandle,
    pub alexander: Option<AlexanderQuandle>,
}

impl LoadedQuandle {
    /// Resolves an element by polynomial (Alexander quandles), name or index.
    pub fn element(&self, s: &str) -> quandle_core::Result<usize> {
        if let Some(a) = &self.alexander {
            if let Ok(k) = a.parse_element(s) {
                return Ok(k);
            }
        }
        if let Some(k) = self.quandle.element_named(s) {
            return Ok(k);
        }
        match s.parse::<usize>() {
            Ok(k) if k < self.quandle.size() => Ok(k),
            _ => Err(quandle_core::Error::InvalidArgument(format!("{s:?} is not an element of {}", self.quandle.label()))),
        }
    }
}

/// Built-in quandles: `T<m>` (trivial), `R<k>` (dihedral), `QS5`, `S4`, and
/// Alexander quandles written `Z<n>[T]/(<h>)`. Anything else is read as a
/// JSON file.
pub fn load_quandle(spec: &str) -> Result<LoadedQuandle> {
    let plain = |quandle| Ok(LoadedQuandle { quandle, alexander: None });
    let num = |s: &str| s.parse::<usize>().ok().filter(|&k| k >= 1);
    if let Some(m) = spec.strip_prefix('T').and_then(num) {
        return plain(FiniteQuandle::trivial(m).with_label(format!("T{m}")));
    }
    if let Some(k) = spec.strip_prefix('R').and_then(num) {
        return plain(FiniteQuandle::dihedral(k));
    }
    if spec.eq_ignore_ascii_case("QS5") {
        return plain(FiniteQuandle::qs5());
    }
    if spec.eq_ignore_ascii_case("S4") {
        return alexander(2, "T^2+T+1", Some("S4"));
    }
    if let Some(rest) = spec.strip_prefix('Z') {
        if let Some((n, h)) = rest.split_once("[T]/(") {
            let h = h.strip_suffix(')').ok_or_else(|| CliError::Usage(format!("missing ')' in {spec:?}")))?;
            let n: u64 = n.trim_start_matches('_').parse().map_err(|_| CliError::Usage(format!("bad modulus in {spec:?}")))?;
            return alexander(n, h, None);
        }
    }
    let path = Path::new(spec);
    if path.exists() {
        let file: QuandleFile = serde_json::from_str(&read_file(path)?)?;
        return plain(file.into_quandle()?);
    }
    Err(CliError::Usage(format!("unknown quandle {spec:?}: expected T<m>, R<k>, QS5, S4, Z<n>[T]/(h) or a JSON file")))
}

fn alexander(n: u64, h: &str, label: Option<&str>) -> Result<LoadedQuandle> {
    let h: LaurentPoly = LaurentPoly::parse(h, 0)?;
    let a = AlexanderQuandle::new(n, &h)?;
    let mut quandle = a.quandle().clone();
    if let Some(l) = label {
        quandle = quandle.with_label(l);
    }
    Ok(LoadedQuandle { quandle, alexander: Some(a) })
}

pub fn group_for(coeffs: Coeffs) -> CyclicGroup {
    CyclicGroup::cyclic(coeffs.modulus())
}

/// `{"group": [orders], "values": [[[..]]]}` with `values[a][b]` the
/// coordinates of `phi(a, b)`, or `{"group": [d], "support": [[a, b], ...]}`
/// for the characteristic function of a set of pairs. Elements in `support`
/// are indices or names. `0` in `group` stands for `Z`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CocycleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<[Value; 2]>>,
}

impl CocycleFile {
    pub fn from_cocycle(phi: &Cocycle2) -> Self {
        CocycleFile { group: Some(phi.group().orders.clone()), values: Some(phi.table()), support: None }
    }
}

/// Loads a cocycle and checks the cocycle condition. `coeffs` supplies the
/// group when the file has none, and must agree with it otherwise.
pub fn load_cocycle(path: &Path, x: &LoadedQuandle, coeffs: Option<Coeffs>) -> Result<Cocycle2> {
    let file: CocycleFile = serde_json::from_str(&read_file(path)?)?;
    cocycle_from_file(file, x, coeffs)
}

pub fn cocycle_from_file(file: CocycleFile, x: &LoadedQuandle, coeffs: Option<Coeffs>) -> Result<Cocycle2> {
    let group = match (&file.group, coeffs) {
        (Some(g), Some(c)) if *g != [c.modulus()] => {
            return Err(CliError::Usage(format!("cocycle group {g:?} does not match coefficients {c}")));
        }
        (Some(g), _) => CyclicGroup::new(g.clone())?,
        (None, Some(c)) => group_for(c),
        (None, None) => return Err(CliError::Usage("cocycle has no group; pass --coeffs".into())),
    };
    let q = &x.quandle;
    let phi = match (file.values, file.support) {
        (Some(v), None) => Cocycle2::from_table(q, group, v)?,
        (None, Some(pairs)) => {
            if group.factors() != 1 {
                return Err(CliError::Usage("a support list needs a cyclic group".into()));
            }
            let elt = |v: &Value| -> Result<usize> {
                match v {
                    Value::Number(n) => n
                        .as_u64()
                        .map(|k| k as usize)
                        .filter(|&k| k < q.size())
                        .ok_or_else(|| CliError::Usage(format!("bad element {n}"))),
                    Value::String(s) => Ok(x.element(s)?),
                    other => Err(CliError::Usage(format!("bad element {other}"))),
                }
            };
            let pairs: Vec<(usize, usize)> = pairs.iter().map(|[a, b]| Ok((elt(a)?, elt(b)?))).collect::<Result<_>>()?;
            Cocycle2::characteristic(q, group.orders[0], &pairs)?
        }
        _ => return Err(CliError::Usage("cocycle needs exactly one of \"values\" and \"support\"".into())),
    };
    if !phi.is_cocycle(q) {
        return Err(CliError::Usage("the given function is not a 2-cocycle".into()));
    }
    Ok(phi)
}

/// Diagram text: braid letters, optional `strands=N`, and `loop ...` lines.
pub fn load_diagram(path: &Path, x: &LoadedQuandle) -> Result<VirtualLinkDiagram> {
    parse_diagram(&read_file(path)?, x)
}

pub fn parse_diagram(text: &str, x: &LoadedQuandle) -> Result<VirtualLinkDiagram> {
    Ok(VirtualLinkDiagram::parse(text, |s| x.element(s))?)
}

pub fn int_json(k: &Int) -> Value {
    match k.to_i64() {
        Some(v) => json!(v),
        None => json!(k.to_string()),
    }
}

pub fn descriptor_json(g: &AbelianGroupDescriptor) -> Value {
    json!({ "free_rank": g.free_rank, "torsion": g.torsion.iter().map(int_json).collect::<Vec<_>>() })
}

/// Keys are group element names in the order of the group.
pub fn group_ring_json(v: &GroupRingValue) -> Value {
    let mut m = Map::new();
    for (g, k) in v.terms() {
        m.insert(v.element_name(g), json!(k));
    }
    Value::Object(m)
}

/// One `row col value` line per nonzero entry, after a `rows cols nnz` header.
pub fn triplets(m: &SparseMatrix) -> String {
    let mut s = format!("{} {} {}\n", m.rows(), m.cols(), m.nnz());
    for (i, j, v) in m.triplets() {
        s += &format!("{i} {j} {v}\n");
    }
    s
}

pub fn parse_triplets(text: &str) -> Result<SparseMatrix> {
    let bad = |l: &str| CliError::Usage(format!("bad triplet line {l:?}"));
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head = lines.next().ok_or_else(|| CliError::Usage("empty triplet file".into()))?;
    let h: Vec<usize> = head.split_whitespace().map(|t| t.parse().map_err(|_| bad(head))).collect::<Result<_>>()?;
    let [rows, cols, _] = h[..] else { return Err(bad(head)) };
    let mut t = Vec::new();
    for l in lines {
        let f: Vec<&str> = l.split_whitespace().collect();
        let [i, j, v] = f[..] else { return Err(bad(l)) };
        t.push((i.parse().map_err(|_| bad(l))?, j.parse().map_err(|_| bad(l))?, v.parse().map_err(|_| bad(l))?));
    }
    Ok(SparseMatrix::from_triplets(rows, cols, &t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quandle_round_trip() {
        for spec in ["R4", "T3", "QS5", "S4", "Z3[T]/(T^2+1)"] {
            let q = load_quandle(spec).unwrap().quandle;
            let back = QuandleFile::from_quandle(&q).into_quandle().unwrap();
            assert_eq!(back.table(), q.table());
        }
        assert!(load_quandle("nonsense").is_err());
    }

    #[test]
    fn s4_elements_by_polynomial() {
        let s4 = load_quandle("S4").unwrap();
        assert_eq!(s4.element("T+1").unwrap(), 3);
        assert_eq!(s4.element("1").unwrap(), 1);
    }

    #[test]
    fn triplets_round_trip() {
        let m = SparseMatrix::from_triplets(3, 2, &[(0, 0, 1), (2, 1, -2)]);
        assert_eq!(parse_triplets(&triplets(&m)).unwrap(), m);
    }
}
