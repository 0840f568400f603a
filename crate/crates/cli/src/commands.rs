use std::fmt::Write as _;
use std::io::BufRead;

use num_bigint::BigUint;
use pathcover_core::families::FamilySpec::{self, *};
use pathcover_core::sample::{parse_probability, random_graph, Model, Sampler};
use pathcover_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{
    Check, Cli, CliError, CoverArgs, CoverMode, FreeArgs, GraphArgs, Invariant, InvariantsArgs,
    Output, RunReport, SampleArgs, Suite, VerifyArgs,
};

const THREADS_VAR: &str = "PATHCOVER_LAB_THREADS";

/// A family spec if the text has a parenthesis, graph6 otherwise.
fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let text = text.trim();
    if text.contains('(') {
        Ok(text.parse::<FamilySpec>()?.generate()?)
    } else {
        Ok(from_graph6(text)?)
    }
}

fn read_graphs(args: &GraphArgs, stdin: &mut dyn BufRead) -> Result<Vec<(String, Graph)>, CliError> {
    let texts: Vec<String> = if args.graphs.is_empty() {
        let mut lines = Vec::new();
        for line in stdin.lines() {
            let line = line?;
            if !line.trim().is_empty() {
                lines.push(line.trim().to_string());
            }
        }
        lines
    } else {
        args.graphs.clone()
    };
    if texts.is_empty() {
        return Err(CliError::Usage("no graphs given on the command line or standard input".into()));
    }
    texts
        .into_iter()
        .map(|t| parse_graph(&t).map(|g| (t, g)))
        .collect()
}

fn finish(report: RunReport, text: String) -> Result<Output, CliError> {
    Ok(Output { report, text })
}

pub fn gen(spec: &str) -> Result<Output, CliError> {
    let parsed: FamilySpec = spec.parse()?;
    let g = parsed.generate()?;
    let g6 = to_graph6(&g);
    let mut report = RunReport::new("gen", json!({ "spec": spec }));
    report.results = json!({
        "spec": parsed.to_string(),
        "graph6": g6,
        "order": g.order(),
        "size": g.size(),
    });
    finish(report, format!("{g6}\n"))
}

fn budget(cli: &Cli, which: Invariant) -> Option<usize> {
    cli.max_order_exact.or(match which {
        Invariant::Pc | Invariant::Pp => Some(18),
        Invariant::Cc | Invariant::Cp => Some(16),
        Invariant::Alpha | Invariant::Ham => None,
    })
}

fn name(which: Invariant) -> &'static str {
    match which {
        Invariant::Alpha => "alpha",
        Invariant::Pc => "pc",
        Invariant::Pp => "pp",
        Invariant::Cc => "cc",
        Invariant::Cp => "cp",
        Invariant::Ham => "ham",
    }
}

pub fn invariants(cli: &Cli, args: &InvariantsArgs, stdin: &mut dyn BufRead) -> Result<Output, CliError> {
    use Invariant::*;
    let which = if args.which.is_empty() {
        vec![Alpha, Pc, Pp, Cc, Cp, Ham]
    } else {
        args.which.clone()
    };
    let graphs = read_graphs(&args.input, stdin)?;
    for (text, g) in &graphs {
        for &w in &which {
            if let Some(limit) = budget(cli, w).filter(|&l| g.order() > l) {
                return Err(CliError::Usage(format!(
                    "{text}: order {} is above the exact budget {limit} for {}; raise --max-order-exact to override",
                    g.order(),
                    name(w)
                )));
            }
        }
    }
    let mut report = RunReport::new(
        "invariants",
        json!({
            "graphs": graphs.iter().map(|(t, _)| t).collect::<Vec<_>>(),
            "which": which.iter().map(|&w| name(w)).collect::<Vec<_>>(),
            "max_order_exact": cli.max_order_exact,
        }),
    );
    let mut text = String::new();
    let mut results = Vec::new();
    for (input, g) in &graphs {
        let g6 = to_graph6(g);
        let mut entry = serde_json::Map::new();
        entry.insert("input".into(), json!(input));
        entry.insert("graph6".into(), json!(g6));
        entry.insert("order".into(), json!(g.order()));
        entry.insert("size".into(), json!(g.size()));
        let _ = write!(text, "{g6}");
        let mut values = std::collections::HashMap::new();
        for &w in &which {
            let (value, witness): (Value, Value) = match w {
                Alpha => {
                    let set = maximum_independent_set(g);
                    (json!(set.len()), json!(set))
                }
                Ham => {
                    let p = hamiltonian_path(g);
                    (json!(p.is_some()), json!(p))
                }
                Pc | Pp => {
                    let (k, sys) = if w == Pc { path_cover_number(g)? } else { path_partition_number(g)? };
                    report.checks.push(Check::new(
                        format!("{} witness valid", name(w)),
                        sys.validate(g).is_ok() && sys.len() == k,
                        g6.clone(),
                    ));
                    (json!(k), json!(sys))
                }
                Cc | Cp => {
                    let (k, sys) = if w == Cc { cycle_cover_number(g)? } else { cycle_partition_number(g)? };
                    report.checks.push(Check::new(
                        format!("{} witness valid", name(w)),
                        sys.validate(g).is_ok() && sys.len() == k,
                        g6.clone(),
                    ));
                    (json!(k), json!(sys))
                }
            };
            let _ = write!(text, " {}={}", name(w), value);
            values.insert(name(w), value.clone());
            entry.insert(name(w).into(), json!({ "value": value, "witness": witness }));
        }
        if let (Some(pc), Some(pp), Some(alpha)) = (values.get("pc"), values.get("pp"), values.get("alpha")) {
            let (pc, pp, alpha) = (pc.as_u64(), pp.as_u64(), alpha.as_u64());
            report.checks.push(Check::new(
                "pc <= pp <= alpha",
                pc <= pp && pp <= alpha,
                format!("{g6}: pc={pc:?} pp={pp:?} alpha={alpha:?}"),
            ));
        }
        text.push('\n');
        results.push(Value::Object(entry));
    }
    report.results = json!({ "graphs": results });
    finish(report, text)
}

pub fn free(args: &FreeArgs, stdin: &mut dyn BufRead) -> Result<Output, CliError> {
    let family: Vec<(String, Graph)> = args
        .family
        .iter()
        .map(|t| parse_graph(t).map(|g| (t.clone(), g)))
        .collect::<Result<_, _>>()?;
    let graphs = read_graphs(&args.input, stdin)?;
    let mut report = RunReport::new(
        "free",
        json!({
            "graphs": graphs.iter().map(|(t, _)| t).collect::<Vec<_>>(),
            "family": args.family,
        }),
    );
    let mut text = String::new();
    let mut results = Vec::new();
    for (input, g) in &graphs {
        let g6 = to_graph6(g);
        let mut members = Vec::new();
        let mut found = Vec::new();
        for (member, h) in &family {
            let hit = find_induced(g, h);
            report.checks.push(Check::new(
                format!("free of {member}"),
                hit.is_none(),
                match &hit {
                    None => g6.clone(),
                    Some(e) => format!("{g6} contains {member} at {:?}", e.mapping),
                },
            ));
            if let Some(e) = &hit {
                found.push(format!("{member} at {:?}", e.mapping));
            }
            members.push(json!({
                "member": member,
                "graph6": to_graph6(h),
                "present": hit.is_some(),
                "witness": hit.map(|e| e.mapping),
            }));
        }
        let free = found.is_empty();
        if free {
            let _ = writeln!(text, "{g6} free");
        } else {
            let _ = writeln!(text, "{g6} contains {}", found.join(", "));
        }
        results.push(json!({ "input": input, "graph6": g6, "free": free, "members": members }));
    }
    report.results = json!({ "graphs": results });
    finish(report, text)
}

pub fn cover(args: &CoverArgs, stdin: &mut dyn BufRead) -> Result<Output, CliError> {
    let graphs = read_graphs(&args.input, stdin)?;
    let mode = match args.mode {
        CoverMode::Cover => "cover",
        CoverMode::Partition => "partition",
    };
    let mut report = RunReport::new(
        "cover",
        json!({
            "graphs": graphs.iter().map(|(t, _)| t).collect::<Vec<_>>(),
            "n": args.n,
            "mode": mode,
            "check_freeness": args.check_freeness,
        }),
    );
    let mut text = String::new();
    let mut results = Vec::new();
    for (input, g) in &graphs {
        let g6 = to_graph6(g);
        let built = match args.mode {
            CoverMode::Cover => bounded_path_cover(g, args.n, args.check_freeness),
            CoverMode::Partition => bounded_path_partition(g, args.n, args.check_freeness),
        };
        match built {
            Ok((sys, cert)) => {
                let valid = sys.validate(g);
                report.checks.push(Check::new(
                    format!("valid path {mode}"),
                    valid.is_ok(),
                    match &valid {
                        Ok(()) => g6.clone(),
                        Err(e) => format!("{g6}: {e}"),
                    },
                ));
                report.checks.push(Check::new(
                    "size within certificate bound",
                    cert.holds(),
                    format!("{g6}: {} <= {}", sys.len(), cert.total_bound),
                ));
                let _ = writeln!(text, "{g6}: {} paths (bound {})", sys.len(), cert.total_bound);
                for p in &sys.paths {
                    let _ = writeln!(text, "  {p:?}");
                }
                results.push(json!({ "input": input, "graph6": g6, "paths": sys, "certificate": cert }));
            }
            Err(e @ (Error::NotFree { .. } | Error::HypothesisViolated { .. })) => {
                report.checks.push(Check::fail("hypothesis", format!("{g6}: {e}")));
                let _ = writeln!(text, "{g6}: {e}");
                results.push(json!({ "input": input, "graph6": g6, "error": e.to_string() }));
            }
            Err(e) => return Err(CliError::Core(e)),
        }
    }
    report.results = json!({ "graphs": results });
    finish(report, text)
}

fn pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got `{v}`")))?;
        builder = builder.num_threads(n.max(1));
    }
    Ok(builder.build()?)
}

fn exact_claims() -> Vec<(String, FamilySpec, Invariant, usize)> {
    let mut claims = Vec::new();
    let mut add = |spec: FamilySpec, which: Invariant, want: usize| {
        let label = format!(
            "{}({spec}) = {want}",
            match which {
                Invariant::Pc => "pc",
                Invariant::Pp => "pp",
                _ => "cc",
            }
        );
        claims.push((label, spec, which, want));
    };
    for c in 1..=3 {
        add(Star(2 * c + 1), Invariant::Pc, c + 1);
        add(KStar(2 * c + 1), Invariant::Pc, c + 1);
        add(Path(2 * c + 1), Invariant::Cc, c + 1);
        add(Star(c + 1), Invariant::Cc, c + 1);
    }
    for s in 2..=4usize {
        add(H1(s, 3), Invariant::Pc, (s + 1).div_ceil(2));
        add(H2(s, 3), Invariant::Pc, (s + 1).div_ceil(2));
    }
    for s in 2..=3 {
        add(H3(s, 3), Invariant::Pp, s);
        add(H4(s, 3), Invariant::Pp, s);
    }
    claims
}

fn verify_lemmas() -> Result<Vec<Check>, CliError> {
    let claims = exact_claims();
    let checks = pool()?.install(|| {
        claims
            .par_iter()
            .map(|(label, spec, which, want)| {
                let g = spec.generate()?;
                let got = match which {
                    Invariant::Pc => path_cover_number(&g)?.0,
                    Invariant::Pp => path_partition_number(&g)?.0,
                    _ => cycle_cover_number(&g)?.0,
                };
                Ok(Check::new(
                    label.clone(),
                    got == *want,
                    format!("{}: got {got}", to_graph6(&g)),
                ))
            })
            .collect::<Result<Vec<_>, pathcover_core::Error>>()
    })?;
    Ok(checks)
}

struct RandomFacts {
    g6: String,
    pc: usize,
    pp: usize,
    alpha: usize,
    greedy_paths: usize,
    ham: bool,
    cp: usize,
    greedy_cycles: usize,
    ramsey: BigUint,
}

fn random_facts(g: &Graph) -> Result<RandomFacts, pathcover_core::Error> {
    let alpha = independence_number(g);
    Ok(RandomFacts {
        g6: to_graph6(g),
        pc: path_cover_number(g)?.0,
        pp: path_partition_number(g)?.0,
        alpha,
        greedy_paths: greedy_path_partition(g).len(),
        ham: has_hamiltonian_path(g),
        cp: cycle_partition_number(g)?.0,
        greedy_cycles: greedy_cycle_partition(g).len(),
        ramsey: ramsey_upper(alpha + 1, alpha + 1)?.value,
    })
}

fn verify_random(seed: u64, count: usize) -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..count)
        .map(|_| {
            let order = rng.gen_range(1..=9);
            let p = rng.gen_range(0.1..0.9);
            random_graph(&mut rng, order, p, Model::Uniform)
        })
        .collect();
    let facts = pool()?.install(|| {
        graphs
            .par_iter()
            .map(random_facts)
            .collect::<Result<Vec<_>, _>>()
    })?;
    type Property = (&'static str, fn(&RandomFacts) -> bool);
    let properties: [Property; 4] = [
        ("pc <= pp <= alpha", |f| f.pc <= f.pp && f.pp <= f.alpha),
        ("greedy path partition <= alpha", |f| f.greedy_paths <= f.alpha),
        ("Hamiltonian path iff pp = 1", |f| f.ham == (f.pp == 1)),
        ("cp <= greedy cycle partition <= R(alpha+1, alpha+1) - 1", |f| {
            f.cp <= f.greedy_cycles && BigUint::from(f.greedy_cycles + 1) <= f.ramsey
        }),
    ];
    let mut checks = Vec::new();
    for (name, holds) in properties {
        let bad: Vec<&RandomFacts> = facts.iter().filter(|f| !holds(f)).collect();
        checks.push(Check::new(
            name,
            bad.is_empty(),
            format!("{} of {} graphs violate", bad.len(), facts.len()),
        ));
        for f in bad {
            checks.push(Check::fail(
                name,
                format!(
                    "{}: pc={} pp={} alpha={} greedy_paths={} cp={} greedy_cycles={}",
                    f.g6, f.pc, f.pp, f.alpha, f.greedy_paths, f.cp, f.greedy_cycles
                ),
            ));
        }
    }
    Ok(checks)
}

fn verify_ramsey() -> Result<Vec<Check>, CliError> {
    let mut checks = vec![Check::new(
        "R(3,3) = 6 by brute force",
        verify_ramsey_33(),
        "all 32768 labelled graphs of order 6, and the pentagon",
    )];
    let mut bad = Vec::new();
    for a in 2..=8 {
        for b in 2..=8 {
            let v = |x, y| ramsey_upper(x, y).map(|r| r.value);
            if v(a, b)? != v(a - 1, b)? + v(a, b - 1)? {
                bad.push(format!("({a},{b})"));
            }
        }
    }
    checks.push(Check::new(
        "Pascal identity for 2 <= m, n <= 8",
        bad.is_empty(),
        if bad.is_empty() { "49 pairs".to_string() } else { bad.join(" ") },
    ));
    let r33 = ramsey_upper(3, 3)?;
    checks.push(Check::new(
        "upper bound R(3,3) = 6 is marked exact",
        r33.exact && r33.value == BigUint::from(6u32),
        r33.value.to_string(),
    ));
    Ok(checks)
}

pub fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Output, CliError> {
    let (suite, checks) = match args.suite {
        Suite::Lemmas => ("lemmas", verify_lemmas()?),
        Suite::Random => ("random", verify_random(cli.seed, args.count)?),
        Suite::Ramsey => ("ramsey", verify_ramsey()?),
    };
    let mut report = RunReport::new(
        "verify",
        json!({ "suite": suite, "seed": cli.seed, "count": args.count }),
    );
    report.checks = checks;
    let failed = report.failures().count();
    report.results = json!({
        "suite": suite,
        "passed": report.checks.len() - failed,
        "failed": failed,
    });
    let mut text = String::new();
    for c in &report.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{tag} {}: {}", c.name, c.detail);
    }
    let _ = writeln!(text, "{} passed, {failed} failed", report.checks.len() - failed);
    finish(report, text)
}

pub fn sample(cli: &Cli, args: &SampleArgs) -> Result<Output, CliError> {
    if !(1..=62).contains(&args.order) {
        return Err(CliError::Usage(format!("order must be in 1..=62, got {}", args.order)));
    }
    let p = parse_probability(&args.edge_prob)?;
    let model = if args.backbone { Model::PathBackbone } else { Model::Uniform };
    let mut sampler = Sampler::new(cli.seed, args.order, p)?
        .model(model)
        .connected_only(args.connected_only);
    let graphs = (0..args.count)
        .map(|_| sampler.next_graph().map(|g| to_graph6(&g)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = RunReport::new(
        "sample",
        json!({
            "order": args.order,
            "edge_prob": args.edge_prob,
            "seed": cli.seed,
            "count": args.count,
            "connected_only": args.connected_only,
            "backbone": args.backbone,
            "generator": "ChaCha8, seed_from_u64",
        }),
    );
    let mut text = graphs.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    report.results = json!({ "graphs": graphs });
    finish(report, text)
}
