//! One function per subcommand, each returning the JSON it prints.

use quandle_core::chain::{ChainComplex, ComplexKind};
use quandle_core::cocycle::CocycleSpace;
use quandle_core::connecting::index_s;
use quandle_core::homology::{cohomology, homology_descriptor, homology_mod_p, is_prime};
use quandle_core::transfer::{betti_lower_bound, cokernel_of_projection};
use quandle_core::vknot::coloring::{enumerate_colorings, state_sum_over};
use quandle_core::vknot::{enumerate_shadow_colorings, shadow_cycle, VirtualLinkDiagram};
use quandle_core::cocycle::Cocycle2;
use quandle_core::chain::Chain;
use quandle_core::{Coeffs, FiniteQuandle};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::formats::{descriptor_json, group_ring_json, int_json, triplets, CocycleFile, LoadedQuandle, QuandleFile};

fn complex(x: &FiniteQuandle, kind: ComplexKind, cap: Option<u128>) -> Result<ChainComplex> {
    Ok(ChainComplex::new(x, kind)?.with_cap(cap))
}

pub fn make(x: &LoadedQuandle) -> Value {
    serde_json::to_value(QuandleFile::from_quandle(&x.quandle)).expect("serializable")
}

pub fn orbits(x: &LoadedQuandle) -> Value {
    let q = &x.quandle;
    let orb = q.orbits();
    let names: Vec<Vec<&str>> = orb.orbits.iter().map(|o| o.iter().map(|&a| q.name(a)).collect()).collect();
    json!({ "quandle": q.label(), "count": orb.count(), "orbits": names, "is_quandle": q.is_quandle() })
}

pub fn boundary(x: &LoadedQuandle, n: usize, kind: ComplexKind, cap: Option<u128>) -> Result<String> {
    Ok(triplets(&complex(&x.quandle, kind, cap)?.boundary(n)?))
}

pub fn homology(x: &LoadedQuandle, n: usize, kind: ComplexKind, coeffs: Coeffs, co: bool, cap: Option<u128>) -> Result<Value> {
    let cx = complex(&x.quandle, kind, cap)?;
    let g = if co { cohomology(&cx, n, coeffs)? } else { homology_descriptor(&cx, n, coeffs)? };
    Ok(descriptor_json(&g))
}

/// Generator counts, Betti numbers and transfer lower bounds for `1..=n_max`.
pub fn betti(x: &LoadedQuandle, n_max: usize, cap: Option<u128>) -> Result<Value> {
    let q = &x.quandle;
    let m = q.orbits().count();
    let kinds = [ComplexKind::D, ComplexKind::R, ComplexKind::Q];
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut generators = serde_json::Map::new();
        let mut betti = serde_json::Map::new();
        let mut bound = serde_json::Map::new();
        for kind in kinds {
            let cx = complex(q, kind, cap)?;
            generators.insert(kind.name().into(), json!(cx.rank(n)? as u64));
            betti.insert(kind.name().into(), json!(homology_descriptor(&cx, n, Coeffs::Z)?.free_rank));
            bound.insert(kind.name().into(), json!(betti_lower_bound(m, n, kind)? as u64));
        }
        rows.push(json!({ "n": n, "generators": generators, "betti": betti, "lower_bound": bound }));
    }
    Ok(json!({ "quandle": q.label(), "orbits": m, "rows": rows }))
}

pub fn sx(x: &LoadedQuandle, n_max: usize) -> Result<Value> {
    Ok(json!({ "quandle": x.quandle.label(), "checked_through": n_max, "index": index_s(&x.quandle, n_max)?.to_string() }))
}

pub fn coker(x: &LoadedQuandle, n: usize, kind: ComplexKind) -> Result<Value> {
    let r = cokernel_of_projection(&x.quandle, n, kind)?;
    let gens: Vec<Value> = r
        .generators
        .iter()
        .map(|g| json!({ "omega": g.omega, "order": int_json(&g.order), "bound": int_json(&g.bound) }))
        .collect();
    Ok(json!({ "kind": kind.name(), "degree": n, "cokernel": descriptor_json(&r.cokernel), "bounds_hold": r.bounds_hold(), "generators": gens }))
}

/// `H^2_Q(X; G)` and a generating set of 2-cocycles.
pub fn cocycles(x: &LoadedQuandle, coeffs: Coeffs) -> Result<Value> {
    let q = &x.quandle;
    let space = CocycleSpace::new(q, crate::formats::group_for(coeffs))?;
    let h2 = cohomology(&ChainComplex::new(q, ComplexKind::Q)?, 2, coeffs)?;
    let gens: Vec<Value> = space
        .generators
        .iter()
        .map(|g| {
            let mut v = serde_json::to_value(CocycleFile::from_cocycle(g)).expect("serializable");
            v["coboundary"] = json!(space.is_coboundary(g));
            v
        })
        .collect();
    Ok(json!({ "quandle": q.label(), "coefficients": coeffs.to_string(), "h2": descriptor_json(&h2), "generators": gens }))
}

pub fn invariant(d: &VirtualLinkDiagram, x: &LoadedQuandle, phi: &Cocycle2) -> Result<Value> {
    let q = &x.quandle;
    if phi.size() != q.size() {
        return Err(CliError::Usage("cocycle and quandle sizes differ".into()));
    }
    let colorings = enumerate_colorings(d, q)?;
    let sum = state_sum_over(d, q, phi, &colorings);
    Ok(json!({ "colorings": colorings.len(), "state_sum": group_ring_json(&sum) }))
}

/// Shadow cycles of every shadow coloring and whether each is a nonzero
/// class in `H_3^R(X; Z_p)`.
pub fn shadow(d: &VirtualLinkDiagram, x: &LoadedQuandle, p: u64) -> Result<Value> {
    if !is_prime(p) {
        return Err(CliError::Usage(format!("shadow classes need a prime modulus, got {p}")));
    }
    let q = &x.quandle;
    let h = homology_mod_p(&ChainComplex::new(q, ComplexKind::R)?, 3, p)?;
    let mut cycles = Vec::new();
    let mut nonzero = 0;
    let name = |t: &[usize]| t.iter().map(|&a| q.name(a).to_string()).collect::<Vec<_>>();
    for sc in enumerate_shadow_colorings(d, q)? {
        let z: Chain = shadow_cycle(d, q, &sc)?;
        let nz = h.is_nonzero_class(&z)?;
        nonzero += nz as usize;
        let terms: Vec<Value> = z.terms().map(|(t, k)| json!([name(&t), int_json(k)])).collect();
        cycles.push(json!({ "top": name(&sc.coloring.top), "outer": q.name(sc.outer), "cycle": terms, "nonzero": nz }));
    }
    Ok(json!({ "shadow_colorings": cycles.len(), "nonzero_classes": nonzero, "modulus": p, "cycles": cycles }))
}
