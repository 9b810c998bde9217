//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

mod common;

use std::time::{Duration, Instant};

use kirwan_core::algebra::{q, Ideal, MonomialOrder, Polynomial, Ring};
use kirwan_core::blowup::{blowup_charts, crosscheck_truncation, rees_presentation, Chart, ReesRelation};
use kirwan_core::cdga::{classical_truncation, fixed_locus, validate_presentation, GradedCdga, SubtorusBasis};
use kirwan_core::io::cli::{run_command_styled, Style};
use kirwan_core::io::parse_polynomial;
use kirwan_core::reduction::{quasi_smooth_check, stabilizer_reduce, ReductionConfig, ReductionNode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use common::{monomials_up_to, random_scene, scene_path, MacaulaySpan};

const CORPUS_SEED: u64 = 0x6b69_7277_616e;
const CORPUS_SIZE: usize = 200;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["kirwan"];
    argv.extend_from_slice(args);
    let code = run_command_styled(argv, &mut out, &mut err, Style::Plain);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut full = args.to_vec();
    full.extend_from_slice(&["--json", "-"]);
    let (code, out, err) = cli(&full);
    ensure(code == 0, || format!("`{}` exited {code}: {err}", args.join(" ")))?;
    serde_json::from_str(&out).map_err(|e| e.to_string())
}

fn ideal_of(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(ring, gens.iter().map(|g| parse_polynomial(g, ring).unwrap()).collect())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

/// Ring of a chart as reported in JSON, with the reported truncation.
fn chart_from_json(chart: &Value) -> (Ring, Ideal, Vec<String>) {
    let names: Vec<String> = chart["cdga"]["variables"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["name"].as_str().unwrap().to_string())
        .collect();
    let ring = Ring::new(&names);
    let trunc = strings(&chart["cdga"]["truncation"]);
    let refs: Vec<&str> = trunc.iter().map(String::as_str).collect();
    (ring.clone(), ideal_of(&ring, &refs), names)
}

fn intrinsic_regression() -> Outcome {
    let scene = scene_path("xy2-x2y.json");
    let doc = cli_json(&["blowup", "--scene", scene.to_str().unwrap()])?;
    let charts = doc["result"]["charts"].as_array().unwrap();
    let mut seen = Vec::new();
    ensure(charts.len() == 2, || format!("expected 2 charts, got {}", charts.len()))?;
    for chart in charts {
        let center = chart["center"].as_str().unwrap();
        let (ring, got, names) = chart_from_json(chart);
        let xi = chart["exceptional"].as_str().unwrap();
        let slope = names.iter().find(|n| n.as_str() != xi).unwrap();
        let expected = ideal_of(&ring, &[&format!("{xi}^2*{slope}"), &format!("{xi}^2*{slope}^2")]);
        ensure(got.equals(&expected), || format!("chart {center}: truncation {:?}", got.generators()))?;
        seen.push(format!("chart_{center} = ({xi}^2*{slope}, {xi}^2*{slope}^2)"));
    }
    Ok(seen.join(", "))
}

fn rees_regression() -> Outcome {
    let scene = scene_path("xy2-x2y.json");
    let doc = cli_json(&["rees", "--scene", scene.to_str().unwrap(), "--order", "lex"])?;
    let rels = doc["result"]["relations"].as_array().unwrap();
    let mut deg0: Vec<String> = rels
        .iter()
        .filter(|r| r["homological_degree"] == 0 && r["homogeneous_degree"] == 0)
        .map(|r| r["expression"].as_str().unwrap().to_string())
        .collect();
    deg0.sort();
    ensure(deg0 == ["tinv*v1 - x", "tinv*v2 - y"], || format!("degree-0 relations {deg0:?}"))?;

    let x = kirwan_core::io::load_scene(&scene).map_err(|e| e.to_string())?;
    let h = SubtorusBasis::full(1);
    let ours = rees_presentation(&x, &h, &MonomialOrder::lex(2)).map_err(|e| e.to_string())?;
    let mut displayed = ours.clone();
    displayed.relations.retain(|r| r.homogeneous_degree != 1);
    for (src, text) in [("w1", "x^2*v2"), ("w2", "y^2*v1")] {
        displayed.relations.push(ReesRelation {
            homological_degree: 0,
            homogeneous_degree: 1,
            source: src.into(),
            expression: parse_polynomial(text, &ours.ring).unwrap(),
        });
    }
    for chart in blowup_charts(&x, &h).map_err(|e| e.to_string())? {
        let a = ours.chart_ideal(&chart).map_err(|e| e.to_string())?;
        let b = displayed.chart_ideal(&chart).map_err(|e| e.to_string())?;
        ensure(a.equals(&b), || format!("chart {}: lambda choices disagree", chart.center))?;
        ensure(crosscheck_truncation(&chart, &x, &h), || format!("chart {}: crosscheck failed", chart.center))?;
        ensure(a.equals(&classical_truncation(&chart.cdga)), || format!("chart {}: Rees chart ideal differs from chart truncation", chart.center))?;
    }
    Ok("degree-0 relations {tinv*v1 - x, tinv*v2 - y}; lambda equivalent to (y^2*w1, x^2*w2) on both charts".into())
}

fn kirwan_deletion() -> Outcome {
    let scene = scene_path("a2-hyperbolic.json");
    let doc = cli_json(&["reduce", "--scene", scene.to_str().unwrap()])?;
    let summary = &doc["result"]["summary"];
    ensure(summary["height"] == 1 && summary["blowups"] == 1 && summary["dm_charts"] == 2, || format!("summary {summary}"))?;
    let x = kirwan_core::io::load_scene(&scene).map_err(|e| e.to_string())?;
    let tree = stabilizer_reduce(&x, &ReductionConfig::default()).map_err(|e| e.to_string())?;
    let leaves = tree.leaves();
    ensure(leaves.len() == 2, || format!("{} leaves", leaves.len()))?;
    let mut excluded = Vec::new();
    for leaf in leaves {
        ensure(leaf.leaf_report.as_ref().unwrap().dm, || format!("{} not DM", leaf.id))?;
        let ring = leaf.cdga.ring();
        let slope = ring.names().iter().find(|n| n.starts_with("u_")).unwrap();
        let expected = ideal_of(ring, &[slope]);
        ensure(leaf.cdga.excluded_ideal().equals(&expected), || format!("{}: excluded {:?}", leaf.id, leaf.cdga.excluded_ideal().generators()))?;
        excluded.push(format!("({slope})"));
    }
    Ok(format!("depth 1, two DM charts, excluded {}", excluded.join(" and ")))
}

fn non_classical_fixed_locus() -> Outcome {
    let scene = scene_path("xy.json");
    let doc = cli_json(&["fixed-locus", "--scene", scene.to_str().unwrap()])?;
    let f = &doc["result"]["fixed_locus"];
    ensure(f["variables"].as_array().unwrap().is_empty(), || format!("ring {}", f["variables"]))?;
    let gens1 = f["gens1"].as_array().unwrap();
    ensure(gens1.len() == 1 && gens1[0]["differential"] == "0", || format!("gens1 {}", f["gens1"]))?;
    ensure(f["gens2"].as_array().unwrap().is_empty(), || "unexpected gens2".into())?;
    Ok("empty ring, one degree-1 generator with zero differential".into())
}

fn virtual_dimension_zero() -> Outcome {
    let scene = scene_path("darboux-x2y2.json");
    cli_json(&["reduce", "--scene", scene.to_str().unwrap()])?;
    let doc = cli_json(&["report", "--scene", scene.to_str().unwrap()])?;
    let leaves = doc["result"].as_array().unwrap();
    ensure(!leaves.is_empty(), || "no DM leaves".into())?;
    for l in leaves {
        let r = &l["report"];
        ensure(r["dagger"] == true && r["vdim"] == 0 && r["e_ranks"] == serde_json::json!([1, 1]), || format!("{}: {r}", l["id"]))?;
    }
    Ok(format!("{} DM leaves with dagger, vdim 0, e_ranks (1,1)", leaves.len()))
}

fn corpus() -> Vec<GradedCdga> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..CORPUS_SIZE).map(|_| random_scene(&mut rng)).collect()
}

fn truncation_equivalence(corpus: &[GradedCdga]) -> Outcome {
    let h = SubtorusBasis::full(1);
    let mut charts = 0;
    for (i, x) in corpus.iter().enumerate() {
        for chart in blowup_charts(x, &h).map_err(|e| format!("scene {i}: {e}"))? {
            charts += 1;
            ensure(crosscheck_truncation(&chart, x, &h), || format!("scene {i}, chart {}", chart.center))?;
        }
    }
    Ok(format!("{} scenes, {charts} charts, zero failures", corpus.len()))
}

fn edges_decrease(node: &ReductionNode) -> bool {
    node.children().all(|c| match &c.node {
        Some(n) => n.stabilizer.max_dim < node.stabilizer.max_dim && edges_decrease(n),
        None => true,
    })
}

fn same_truncations(a: &[Chart], b: &[Chart]) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(p, q)| classical_truncation(&p.cdga).equals(&classical_truncation(&q.cdga)))
}

fn invariant_suite(corpus: &[GradedCdga]) -> Outcome {
    let h = SubtorusBasis::full(1);
    let mut edges = 0;
    for (i, x) in corpus.iter().enumerate() {
        let err = |what: &str| format!("scene {i}: {what}");
        let f = fixed_locus(x, &h).map_err(|e| err(&e.to_string()))?;
        ensure(validate_presentation(&f).passed(), || err("fixed locus invalid"))?;
        let charts = blowup_charts(x, &h).map_err(|e| err(&e.to_string()))?;
        for c in &charts {
            ensure(validate_presentation(&c.cdga).passed(), || err(&format!("chart {} invalid", c.center)))?;
            if quasi_smooth_check(x) {
                ensure(quasi_smooth_check(&c.cdga), || err("quasi-smoothness lost"))?;
            }
        }
        let plain = blowup_charts(&x.without_gens2(), &h).map_err(|e| err(&e.to_string()))?;
        ensure(same_truncations(&charts, &plain), || err("chart truncation depends on gens2"))?;

        let lex = rees_presentation(x, &h, &MonomialOrder::lex(x.ring().len())).map_err(|e| err(&e.to_string()))?;
        let grevlex = rees_presentation(x, &h, &MonomialOrder::grevlex(x.ring().len())).map_err(|e| err(&e.to_string()))?;
        for c in &charts {
            let a = lex.chart_ideal(c).map_err(|e| err(&e.to_string()))?;
            let b = grevlex.chart_ideal(c).map_err(|e| err(&e.to_string()))?;
            ensure(a.equals(&b), || err(&format!("lambda order dependence on chart {}", c.center)))?;
        }

        let tree = stabilizer_reduce(x, &ReductionConfig::default()).map_err(|e| err(&e.to_string()))?;
        ensure(edges_decrease(&tree), || err("max_dim did not drop"))?;
        ensure(tree.all_checks().iter().all(|c| c.passed), || err("tree invariant check failed"))?;
        if quasi_smooth_check(x) {
            ensure(tree.nodes().iter().all(|n| quasi_smooth_check(&n.cdga)), || err("quasi-smoothness lost in tree"))?;
        }
        edges += tree.nodes().len() - 1;
    }
    Ok(format!("{} scenes, {edges} tree edges, zero failures", corpus.len()))
}

/// Two-variable generator pool: 1, every monomial of degree 1..=3, and every
/// `m1 ± m2` of two distinct such monomials (including the constant).
fn kernel_pool(ring: &Ring) -> Vec<Polynomial> {
    let monos = monomials_up_to(2, 3);
    let mut pool: Vec<Polynomial> = monos.iter().map(|m| Polynomial::monomial(ring, m.clone(), q(1))).collect();
    for i in 0..monos.len() {
        for j in i + 1..monos.len() {
            for s in [1, -1] {
                pool.push(Polynomial::from_terms(ring, [(monos[i].clone(), q(1)), (monos[j].clone(), q(s))]));
            }
        }
    }
    pool
}

const LOW_BOUND: u32 = 7;
const HIGH_BOUND: u32 = 15;

/// Oracle answers come from degree-bounded certificates. A certificate found
/// is a proof of membership; when none exists at the low bound but the kernel
/// claims membership, the bound is raised before reporting a disagreement.
struct Oracle<'a> {
    gens: &'a [Polynomial],
    low: MacaulaySpan,
    high: Option<MacaulaySpan>,
}

impl<'a> Oracle<'a> {
    fn new(gens: &'a [Polynomial], nvars: usize) -> Oracle<'a> {
        Oracle { gens, low: MacaulaySpan::new(gens, nvars, LOW_BOUND), high: None }
    }

    fn high(&mut self) -> &MacaulaySpan {
        let (gens, n) = (self.gens, self.low.nvars());
        self.high.get_or_insert_with(|| MacaulaySpan::new(gens, n, HIGH_BOUND))
    }

    fn agrees(&mut self, kernel: bool, test: impl Fn(&MacaulaySpan) -> bool) -> bool {
        if test(&self.low) {
            return kernel;
        }
        if !kernel {
            return true;
        }
        test(self.high())
    }
}

fn kernel_oracle() -> Outcome {
    let ring = Ring::new(&["x", "y"]);
    let pool = kernel_pool(&ring);
    let x = Polynomial::var(&ring, 0);
    let y = Polynomial::var(&ring, 1);
    let probes: Vec<Polynomial> = ["x", "y", "x*y", "x^2 - y", "x + 1", "y^3", "x*y - 1", "1"]
        .iter()
        .map(|s| parse_polynomial(s, &ring).unwrap())
        .collect();

    let mut gen_sets: Vec<Vec<Polynomial>> = vec![vec![]];
    for i in 0..pool.len() {
        gen_sets.push(vec![pool[i].clone()]);
        for j in i + 1..pool.len() {
            gen_sets.push(vec![pool[i].clone(), pool[j].clone()]);
        }
    }
    let (mut checks, mut disagreements) = (0usize, Vec::new());
    for gens in &gen_sets {
        let ideal = Ideal::new(&ring, gens.clone());
        let mut oracle = Oracle::new(gens, 2);
        let mut tests = probes.clone();
        if let [g1, g2] = gens.as_slice() {
            tests.push(&(&x * g1) + &(&y * g2));
            tests.push(&(&x * g1) + &y);
        }
        for f in &tests {
            checks += 1;
            if !oracle.agrees(ideal.contains(f), |s| s.contains(f)) {
                disagreements.push(format!("membership of {f} in {gens:?}"));
            }
        }
        if let [g1, g2] = gens.as_slice() {
            // (g1, g2) = (g1 + g2, g2) always; (g1, g2) = (x*g1, g2) iff g1 is in the latter
            checks += 1;
            if !ideal.equals(&Ideal::new(&ring, vec![g1 + g2, g2.clone()])) {
                disagreements.push(format!("equality of {gens:?} with its sum presentation"));
            }
            let other_gens = vec![g1 * &x, g2.clone()];
            let mut other = Oracle::new(&other_gens, 2);
            checks += 1;
            if !other.agrees(ideal.equals(&Ideal::new(&ring, other_gens.clone())), |s| s.contains(g1)) {
                disagreements.push(format!("equality of {gens:?} with ({g1}*x, {g2})"));
            }
        }
        let sat = ideal.saturate(&x);
        for f in &probes {
            checks += 1;
            if !oracle.agrees(sat.contains(f), |s| s.saturation_contains(f, 0)) {
                disagreements.push(format!("saturation: {f} vs ({gens:?}) : x^inf"));
            }
        }
        if !sat.saturate(&x).equals(&sat) {
            disagreements.push(format!("saturation not idempotent for {gens:?}"));
        }
        if disagreements.len() > 5 {
            break;
        }
    }
    ensure(disagreements.is_empty(), || disagreements.join("; "))?;
    Ok(format!("{} ideals, {checks} oracle comparisons, zero disagreements", gen_sets.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
}

fn main() {
    let mut failed = 0;
    let mut report = |c: Criterion, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow: {elapsed:.2?} > {:?}", c.limit)),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] criterion {}: {} ({:.2?}) {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed,
            detail
        );
    };
    let s = |n| Duration::from_secs(n);
    report(Criterion { id: 1, name: "intrinsic blow-up regression", limit: s(1) }, &mut intrinsic_regression);
    report(Criterion { id: 2, name: "Rees presentation regression", limit: s(1) }, &mut rees_regression);
    report(Criterion { id: 3, name: "Kirwan deletion regression", limit: s(1) }, &mut kirwan_deletion);
    report(Criterion { id: 4, name: "non-classical fixed locus", limit: s(1) }, &mut non_classical_fixed_locus);
    report(Criterion { id: 5, name: "virtual dimension zero", limit: s(2) }, &mut virtual_dimension_zero);
    let scenes = corpus();
    report(Criterion { id: 6, name: "truncation equivalence on random scenes", limit: s(60) }, &mut || truncation_equivalence(&scenes));
    report(Criterion { id: 7, name: "invariant suite on random scenes", limit: s(60) }, &mut || invariant_suite(&scenes));
    report(Criterion { id: 8, name: "kernel oracle equivalence", limit: s(30) }, &mut kernel_oracle);
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
