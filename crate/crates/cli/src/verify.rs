//! The named verification suites behind `crystal-grid verify`.

use serde_json::{json, Value};

use crystal_grid::an::{an_components_up_to, AnComponent, AnCrystal, AnStarCrystal};
use crystal_grid::binfty::{words_distinct, IotaSequence, PolyhedralModel};
use crystal_grid::crystal::{check_crystal_axioms, check_strict_morphism, AxiomReport, Crystal, Relabeled};
use crystal_grid::g22::{
    apply_word, components_in_box, components_up_to, connectivity_word, counterexample_words, epsilon, epsilon_prime,
    epsilon_star, Component2x2, ExtendedNat, G22Crystal, G22StarCrystal,
};
use crystal_grid::graph::{build_crystal_graph, is_connected_within};
use crystal_grid::modules::{cbs_check, generic_decomposition};
use crystal_grid::oracle::{
    certify_decomposition, estimate_component_invariant, sample_component_point, OracleKind, SampleConfig,
};

use crate::{usage, Failure, Outcome};

const DEFAULT_BOUND: u32 = 8;
const DEFAULT_BOX: u32 = 4;
const SHOWN: usize = 20;
const MAX_CHAIN: usize = 5;

pub const SUITES: [&str; 10] = [
    "axioms2x2",
    "axiomsAn",
    "star",
    "duality",
    "oracle",
    "decomp",
    "cbs",
    "counterexample",
    "connectivity",
    "seminormal",
];

fn verdict(clean: bool, report: Value) -> Outcome {
    if clean {
        Ok(report)
    } else {
        Err(Failure::Violation(report))
    }
}

fn axiom_json<E: std::fmt::Debug>(family: &str, report: &AxiomReport<E>) -> Value {
    let shown: Vec<Value> = report
        .violations
        .iter()
        .take(SHOWN)
        .map(|v| json!({ "axiom": v.axiom, "element": format!("{:?}", v.element), "color": v.color, "detail": v.detail }))
        .collect();
    json!({
        "family": family,
        "elements": report.elements_checked,
        "skipped": report.skipped,
        "violations": report.violations.len(),
        "first_violations": shown,
    })
}

fn square_axioms<C: Crystal<Element = Component2x2>>(crystal: &C, family: &str, bound: u32) -> (bool, Value) {
    let report = check_crystal_axioms(crystal, &components_up_to(bound), |c| c.total() <= bound);
    (report.is_clean(), axiom_json(family, &report))
}

fn chain_axioms<C: Crystal<Element = AnComponent>>(crystal: &C, n: usize, family: &str, bound: u32) -> (bool, Value) {
    let report = check_crystal_axioms(crystal, &an_components_up_to(n, bound), |c| c.total() <= bound);
    (report.is_clean(), axiom_json(&format!("{family} A_{n}"), &report))
}

fn collect(bound: u32, parts: Vec<(bool, Value)>) -> Outcome {
    let clean = parts.iter().all(|(ok, _)| *ok);
    let families: Vec<Value> = parts.into_iter().map(|(_, v)| v).collect();
    verdict(clean, json!({ "bound": bound, "clean": clean, "families": families }))
}

fn duality(bound: u32) -> Outcome {
    let domain = G22StarCrystal::new();
    let codomain = Relabeled::new(G22Crystal::new(), vec![4, 3, 2, 1]);
    let fragment = components_up_to(bound);
    let report = check_strict_morphism(&domain, &codomain, &fragment, |c| Some(c.dual()), |c| c.total() <= bound);
    let shown: Vec<Value> = report
        .violations
        .iter()
        .take(SHOWN)
        .map(|v| json!({ "clause": v.clause, "element": v.element.to_string(), "color": v.color, "detail": v.detail }))
        .collect();
    verdict(
        report.is_clean(),
        json!({ "bound": bound, "elements": report.elements_checked, "violations": report.violations.len(), "first_violations": shown }),
    )
}

fn oracle(max: u32, cfg: &SampleConfig) -> Outcome {
    let mut mismatches = Vec::new();
    let comps = components_in_box(max);
    for c in &comps {
        for i in 1..=4 {
            for (kind, formula) in [(OracleKind::Epsilon, epsilon(c, i)), (OracleKind::EpsilonStar, epsilon_star(c, i))]
            {
                let seen = estimate_component_invariant(c, i, kind, cfg).map_err(usage)?;
                if seen as i64 != formula {
                    mismatches.push(json!({ "component": c.to_string(), "i": i, "kind": format!("{kind:?}"), "sampled": seen, "formula": formula }));
                }
            }
        }
    }
    verdict(
        mismatches.is_empty(),
        json!({ "max_dim": max, "components": comps.len(), "seed": cfg.seed, "prime": cfg.prime, "samples": cfg.count, "mismatches": mismatches }),
    )
}

fn decomp(max: u32, cfg: &SampleConfig) -> Outcome {
    let mut mismatches = Vec::new();
    let comps = components_in_box(max);
    for (k, c) in comps.iter().enumerate() {
        let expected = generic_decomposition(c);
        let rep = sample_component_point(c, cfg, k as u64);
        match certify_decomposition(&rep) {
            Ok(found) if found == expected => {}
            Ok(found) => mismatches.push(
                json!({ "component": c.to_string(), "generic": expected.to_string(), "sampled": found.to_string() }),
            ),
            Err(e) => mismatches.push(json!({ "component": c.to_string(), "error": e.to_string() })),
        }
    }
    verdict(
        mismatches.is_empty(),
        json!({ "max_dim": max, "components": comps.len(), "seed": cfg.seed, "mismatches": mismatches }),
    )
}

fn cbs(max: u32) -> Outcome {
    let comps = components_in_box(max);
    let failures: Vec<Value> = comps
        .iter()
        .map(|c| (c, generic_decomposition(c)))
        .filter(|(_, d)| !cbs_check(d))
        .map(|(c, d)| json!({ "component": c.to_string(), "summands": d.to_string() }))
        .collect();
    verdict(failures.is_empty(), json!({ "max_dim": max, "components": comps.len(), "failures": failures }))
}

fn counterexample() -> Outcome {
    let (a, b) = counterexample_words();
    let u = Component2x2::highest();
    let ra = apply_word(&a, u).map_err(usage)?.result;
    let rb = apply_word(&b, u).map_err(usage)?.result;
    let bc_equal = ra.is_some() && ra == rb;
    let model = PolyhedralModel::square(IotaSequence::standard()).map_err(usage)?;
    let binfty_distinct = words_distinct(&model, &a, &b).map_err(usage)?.distinct;
    verdict(bc_equal && binfty_distinct, json!({ "bc_equal": bc_equal, "binfty_distinct": binfty_distinct }))
}

fn connectivity(bound: u32) -> Outcome {
    let comps = components_up_to(bound);
    let u = Component2x2::highest();
    let mut failures = Vec::new();
    for c in &comps {
        let word = connectivity_word(c);
        let trace = apply_word(&word, *c).map_err(usage)?;
        if trace.result != Some(u) {
            failures.push(json!({ "component": c.to_string(), "word": word.to_string() }));
        }
    }
    let graph = build_crystal_graph(&G22Crystal::new(), &[u], bound).map_err(usage)?;
    let expected: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
    let report = is_connected_within(&graph, &u.to_string(), &expected);
    verdict(
        failures.is_empty() && report.connected,
        json!({ "bound": bound, "components": comps.len(), "connected": report.connected, "unreachable": report.unreachable, "word_failures": failures }),
    )
}

fn seminormal() -> Outcome {
    let c: Component2x2 = "1,1,1,2:1,1".parse().expect("valid witness");
    let eps = epsilon(&c, 1);
    let eps_prime = epsilon_prime(&c, 1);
    let fails = matches!(eps_prime, ExtendedNat::Finite(k) if i64::from(k) < eps);
    verdict(fails, json!({ "component": c.to_string(), "i": 1, "epsilon": eps, "epsilon_prime": eps_prime }))
}

/// The bound a suite runs with: a per-vertex bound for the sampling suites,
/// a total-dimension bound otherwise.
pub fn effective_bound(name: &str, bound: Option<u32>) -> u32 {
    match name {
        "oracle" | "decomp" | "cbs" => bound.unwrap_or(DEFAULT_BOX),
        _ => bound.unwrap_or(DEFAULT_BOUND),
    }
}

pub fn run_suite(name: &str, bound: u32, cfg: &SampleConfig) -> Outcome {
    match name {
        "axioms2x2" => collect(bound, vec![square_axioms(&G22Crystal::new(), "square", bound)]),
        "axiomsAn" => {
            collect(bound, (1..=MAX_CHAIN).map(|n| chain_axioms(&AnCrystal::new(n), n, "plain", bound)).collect())
        }
        "star" => {
            let mut parts = vec![square_axioms(&G22StarCrystal::new(), "star square", bound)];
            parts.extend((1..=MAX_CHAIN).map(|n| chain_axioms(&AnStarCrystal::new(n), n, "star", bound)));
            collect(bound, parts)
        }
        "duality" => duality(bound),
        "oracle" => oracle(bound, cfg),
        "decomp" => decomp(bound, cfg),
        "cbs" => cbs(bound),
        "counterexample" => counterexample(),
        "connectivity" => connectivity(bound),
        "seminormal" => seminormal(),
        other => Err(usage(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
}
