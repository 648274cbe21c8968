use std::path::Path;

use anyhow::Context;
use dichroma::constructions::{
    build_f5, build_f7, dichromatic_lower_bound_via_gallai_roy, shift_digraph,
    verify_neighborhood_tournament_partition, verify_no_cyclic_triangle, verify_triangle_profile_f5,
    LabeledConstruction, NeighbourhoodPartition, ZOrder,
};
use dichroma::decomposition::{
    bag_chain_failure, dicolor_broom_free, find_pmct, nice_set_failure, BagChain, BagMode, BroomColoring,
    DecompositionError, NiceSetCertificate,
};
use dichroma::digraph::io::{parse_edge_list, to_dot, write_edge_list_with_comments};
use dichroma::digraph::{induced, maximum_clique, scc_condensation, underlying_clique_number};
use dichroma::patterns::{build, find_induced, find_subgraph, stars_of_degree, BroomSpec, PatternTag};
use dichroma::solver::{
    chromatic_number_undirected, dichromatic_number, maximum_stable_set, monochromatic_cycle, Dicoloring,
};
use dichroma::{Budget, Digraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{Run, Stop, Verdict};
use crate::{
    BagModeArg, Cli, ColorAlgorithm, Command, ConstructionArgs, Expect, GenTarget, OrderArgs, OrderKind, OutArgs,
    Quantity, SuiteArgs, SuiteCheck, VerifyTarget,
};

pub fn dispatch(cli: &Cli, run: &mut Run) -> Result<(), Stop> {
    let budget = cli.global.budget();
    match &cli.command {
        Command::Gen { target } => gen(target, run),
        Command::Verify { target } => verify(target, run, &budget),
        Command::Exact { what, input, expect } => exact(*what, input, *expect, run, &budget),
        Command::Pattern {
            input,
            find,
            subgraph,
            induced: _,
            expect,
        } => pattern(input, find, *subgraph, *expect, run, &budget),
        Command::Color { algorithm } => color(algorithm, run, &budget),
        Command::Pmct { input } => pmct(input, run),
    }
}

// ---------------------------------------------------------------- input

fn read(path: &Path) -> Result<String, Stop> {
    Ok(std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?)
}

fn load_digraph(path: &Path) -> Result<Digraph, Stop> {
    parse_edge_list(&read(path)?).map_err(|e| Stop::input(format!("{}: {e}", path.display())))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Stop> {
    Ok(serde_json::from_str(&read(path)?).with_context(|| format!("cannot parse {}", path.display()))?)
}

fn write(path: &Path, text: &str) -> Result<(), Stop> {
    Ok(std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?)
}

fn parse_tag(tag: &str) -> Result<PatternTag, Stop> {
    Ok(tag.parse::<PatternTag>()?)
}

fn parse_broom(tag: &str) -> Result<BroomSpec, Stop> {
    match parse_tag(tag)? {
        PatternTag::Broom(b) => Ok(b),
        other => Err(Stop::input(format!("{other} is not a broom"))),
    }
}

fn order(args: &OrderArgs, run: &mut Run) -> ZOrder {
    match args.order {
        OrderKind::Lex => ZOrder::Lex,
        OrderKind::Random => {
            let seed = args.seed.expect("clap requires a seed for a random order");
            run.seed = Some(seed);
            ZOrder::Random(seed)
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

// ---------------------------------------------------------------- gen

fn gen(target: &GenTarget, run: &mut Run) -> Result<(), Stop> {
    let (id, graph, text, labels, out) = match target {
        GenTarget::F7(args) | GenTarget::F5(args) => {
            let f7 = matches!(target, GenTarget::F7(_));
            let c = construction(f7, args, run)?;
            let id = if f7 { "gen.f7" } else { "gen.f5" };
            (id, c.graph.clone(), c.to_edge_list(), Some(tuple_labels(&c)), &args.out)
        }
        GenTarget::Shift { k, n, out } => {
            let c = shift_digraph(*k, *n)?;
            (
                "gen.shift",
                c.graph.clone(),
                c.to_edge_list(),
                Some(tuple_labels(&c)),
                out,
            )
        }
        GenTarget::Random { n, p, seed, out } => {
            run.seed = Some(*seed);
            let d = random_digraph(*n, *p, *seed)?;
            let comments = [format!("random n={n} p={p} seed={seed}")];
            let text = write_edge_list_with_comments(&d, &comments);
            ("gen.random", d, text, None, out)
        }
        GenTarget::Pattern { tag, out } => {
            let p = build(&parse_tag(tag)?)?;
            let text = write_edge_list_with_comments(&p.graph, &[format!("pattern {}", p.tag)]);
            ("gen.pattern", p.graph, text, None, out)
        }
    };
    emit(id, &graph, &text, labels.as_deref(), out, run)
}

fn construction(f7: bool, args: &ConstructionArgs, run: &mut Run) -> Result<LabeledConstruction, Stop> {
    let z = order(&args.order, run);
    Ok(if f7 { build_f7(args.n, z)? } else { build_f5(args.n, z)? })
}

fn tuple_labels(c: &LabeledConstruction) -> Vec<String> {
    c.labels
        .iter()
        .map(|t| t.iter().map(u16::to_string).collect::<Vec<_>>().join(","))
        .collect()
}

fn random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph, Stop> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Stop::input(format!("p must lie in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    Digraph::from_arcs(n, arcs).map_err(Stop::input)
}

fn emit(
    id: &str,
    d: &Digraph,
    text: &str,
    labels: Option<&[String]>,
    out: &OutArgs,
    run: &mut Run,
) -> Result<(), Stop> {
    write(&out.out, text)?;
    if let Some(dot) = &out.dot {
        write(dot, &to_dot(d, labels))?;
    }
    run.check(id, || {
        Ok(Verdict::Pass(json!({
            "path": out.out.display().to_string(),
            "vertices": d.n(),
            "arcs": d.arc_count(),
        })))
    })?;
    Ok(())
}

// ---------------------------------------------------------------- verify

fn verify(target: &VerifyTarget, run: &mut Run, budget: &Budget) -> Result<(), Stop> {
    match target {
        VerifyTarget::F7(args) => suite(true, args, run, budget),
        VerifyTarget::F5(args) => suite(false, args, run, budget),
        VerifyTarget::NiceSet { input, cert } => {
            let d = load_digraph(input)?;
            let cert: NiceSetCertificate = load_json(cert)?;
            if !cert.s1.is_disjoint(&cert.s2) {
                return Err(Stop::input("s1 and s2 overlap"));
            }
            run.check("verify.nice-set", || {
                Ok(match nice_set_failure(&d, &cert)? {
                    None => Verdict::Pass(json!({"size": cert.set().len(), "k": cert.k})),
                    Some(reason) => Verdict::Fail(json!({"reason": reason})),
                })
            })?;
            Ok(())
        }
        VerifyTarget::BagChain { input, chain, mode } => {
            let d = load_digraph(input)?;
            let chain: BagChain = load_json(chain)?;
            let mode = match mode {
                BagModeArg::Exact => BagMode::Exact,
                BagModeArg::AtLeast => BagMode::AtLeast,
            };
            let failure = match bag_chain_failure(&d, &chain, mode, budget) {
                Err(DecompositionError::BadPartition(m)) => return Err(Stop::input(m)),
                other => other,
            };
            run.check("verify.bag-chain", || {
                Ok(match failure? {
                    None => Verdict::Pass(json!({"bags": chain.bags.len(), "c": chain.c, "beta": chain.beta})),
                    Some(reason) => Verdict::Fail(json!({"reason": reason})),
                })
            })?;
            Ok(())
        }
        VerifyTarget::Coloring { input, coloring } => {
            let d = load_digraph(input)?;
            let f: Dicoloring = load_json(coloring)?;
            let cycle = monochromatic_cycle(&d, &f)?;
            run.check("verify.coloring", || {
                Ok(match cycle {
                    None => Verdict::Pass(json!({"colors": f.used()})),
                    Some(cycle) => Verdict::Fail(json!({"monochromatic_cycle": cycle})),
                })
            })?;
            Ok(())
        }
    }
}

fn suite_checks(f7: bool) -> &'static [SuiteCheck] {
    use SuiteCheck::*;
    if f7 {
        &[Rules, NoCyclicTriangle, Tournaments, StarFree, LowerBound]
    } else {
        &[Rules, TriangleProfile, Tournaments, InTriangleFree, LowerBound]
    }
}

fn check_name(check: SuiteCheck) -> &'static str {
    match check {
        SuiteCheck::Rules => "arc-rules",
        SuiteCheck::NoCyclicTriangle => "no-cyclic-triangle",
        SuiteCheck::TriangleProfile => "triangle-profile",
        SuiteCheck::Tournaments => "neighbourhood-tournaments",
        SuiteCheck::StarFree => "star-free",
        SuiteCheck::InTriangleFree => "in-triangle-free",
        SuiteCheck::LowerBound => "lower-bound",
    }
}

fn suite(f7: bool, args: &SuiteArgs, run: &mut Run, budget: &Budget) -> Result<(), Stop> {
    let family = if f7 { "f7" } else { "f5" };
    let k = if f7 { 7 } else { 5 };
    let c = match (&args.input, args.n) {
        (Some(path), _) => {
            let c = LabeledConstruction::from_edge_list(&read(path)?)
                .map_err(|e| Stop::input(format!("{}: {e}", path.display())))?;
            if c.k != k {
                return Err(Stop::input(format!(
                    "{} holds a k = {} construction, not {family}",
                    path.display(),
                    c.k
                )));
            }
            c
        }
        (None, Some(n)) => {
            let z = order(&args.order, run);
            if f7 {
                build_f7(n, z)?
            } else {
                build_f5(n, z)?
            }
        }
        (None, None) => unreachable!("clap requires --n or --in"),
    };
    let selected: Vec<SuiteCheck> = if args.check.is_empty() {
        suite_checks(f7).to_vec()
    } else {
        args.check.clone()
    };
    for check in selected {
        let id = format!("{family}.{}", check_name(check));
        if !suite_checks(f7).contains(&check) {
            run.check(&id, || {
                Ok(Verdict::Skipped(
                    json!({"reason": format!("not part of the {family} suite")}),
                ))
            })?;
            continue;
        }
        run.check(&id, || suite_check(check, &c, budget))?;
    }
    Ok(())
}

fn suite_check(check: SuiteCheck, c: &LabeledConstruction, budget: &Budget) -> Result<Verdict, Stop> {
    let d = &c.graph;
    let embedding_verdict = |found: Option<dichroma::patterns::Embedding>, tag: &str| match found {
        None => Verdict::Pass(json!({"pattern": tag})),
        Some(e) => Verdict::Fail(json!({"pattern": tag, "embedding": e.map})),
    };
    Ok(match check {
        SuiteCheck::Rules => {
            if c.matches_rules() {
                Verdict::Pass(json!({"vertices": d.n(), "arcs": d.arc_count()}))
            } else {
                Verdict::Fail(json!({"reason": "arcs or classes differ from the construction rules"}))
            }
        }
        SuiteCheck::NoCyclicTriangle => match verify_no_cyclic_triangle(d) {
            None => Verdict::Pass(Value::Null),
            Some(t) => Verdict::Fail(json!({"triangle": t})),
        },
        SuiteCheck::TriangleProfile => match verify_triangle_profile_f5(c) {
            None => Verdict::Pass(Value::Null),
            Some(w) => Verdict::Fail(to_value(&w)),
        },
        SuiteCheck::Tournaments => {
            let max_parts = if c.k == 7 { 4 } else { 3 };
            let results: Vec<_> = d
                .vertices()
                .into_par_iter()
                .map(|v| verify_neighborhood_tournament_partition(c, v, max_parts, budget))
                .collect();
            let mut most = 0;
            for (v, r) in results.into_iter().enumerate() {
                match r? {
                    NeighbourhoodPartition::Partition { parts } => most = most.max(parts.len()),
                    violation => {
                        let mut w = to_value(&violation);
                        w["vertex"] = json!(v);
                        return Ok(Verdict::Fail(w));
                    }
                }
            }
            Verdict::Pass(json!({"max_parts": max_parts, "most_used": most}))
        }
        SuiteCheck::StarFree => {
            for star in stars_of_degree(5) {
                let tag = star.tag.to_string();
                if let Some(e) = find_induced(d, &star, budget)? {
                    return Ok(embedding_verdict(Some(e), &tag));
                }
            }
            Verdict::Pass(json!({"stars": 6, "degree": 5}))
        }
        SuiteCheck::InTriangleFree => {
            let it = build(&PatternTag::InTriangle)?;
            embedding_verdict(find_subgraph(d, &it, budget)?, "it")
        }
        SuiteCheck::LowerBound => {
            let lower = dichromatic_lower_bound_via_gallai_roy(c, budget)?;
            let exact = dichromatic_number(d, budget)?;
            let value = json!({
                "chi_shift": lower.chi_shift,
                "divisor": lower.divisor,
                "bound": lower.bound,
                "chi_dir": exact.chi,
            });
            if lower.bound <= exact.chi {
                Verdict::Pass(value)
            } else {
                Verdict::Fail(json!({"bound": lower.bound, "chi_dir": exact.chi, "coloring": exact.coloring.colors}))
            }
        }
    })
}

// ---------------------------------------------------------------- exact

fn exact(what: Quantity, input: &Path, expect: Option<usize>, run: &mut Run, budget: &Budget) -> Result<(), Stop> {
    let d = load_digraph(input)?;
    let id = match what {
        Quantity::ChiDir => "exact.chi_dir",
        Quantity::Chi => "exact.chi",
        Quantity::Omega => "exact.omega",
        Quantity::Alpha => "exact.alpha",
    };
    run.check(id, || {
        let (value, certificate) = match what {
            Quantity::ChiDir => {
                let r = dichromatic_number(&d, budget)?;
                (r.chi, json!({"coloring": r.coloring.colors}))
            }
            Quantity::Chi => {
                let (chi, colors) = chromatic_number_undirected(&d, budget)?;
                (chi, json!({"coloring": colors}))
            }
            Quantity::Omega => {
                let clique = maximum_clique(&d);
                (clique.len(), json!({"clique": clique}))
            }
            Quantity::Alpha => {
                let stable = maximum_stable_set(&d, budget)?;
                (stable.len(), json!({"stable_set": stable}))
            }
        };
        Ok(match expect {
            Some(e) if e != value => Verdict::Fail(json!({"expected": e, "value": value, "certificate": certificate})),
            _ => Verdict::Pass(json!({"value": value, "certificate": certificate})),
        })
    })?;
    Ok(())
}

// ---------------------------------------------------------------- pattern

fn pattern(
    input: &Path,
    tag: &str,
    subgraph: bool,
    expect: Expect,
    run: &mut Run,
    budget: &Budget,
) -> Result<(), Stop> {
    let d = load_digraph(input)?;
    let p = build(&parse_tag(tag)?)?;
    let mode = if subgraph { "subgraph" } else { "induced" };
    let id = match expect {
        Expect::Absent => "pattern.absent",
        Expect::Found => "pattern.found",
    };
    run.check(id, || {
        let found = if subgraph {
            find_subgraph(&d, &p, budget)?
        } else {
            find_induced(&d, &p, budget)?
        };
        let tag = p.tag.to_string();
        Ok(match (expect, found) {
            (Expect::Absent, None) => Verdict::Pass(json!({"pattern": tag, "mode": mode, "found": false})),
            (Expect::Absent, Some(e)) => Verdict::Fail(json!({"pattern": tag, "mode": mode, "embedding": e.map})),
            (Expect::Found, Some(e)) => {
                Verdict::Pass(json!({"pattern": tag, "mode": mode, "found": true, "embedding": e.map}))
            }
            (Expect::Found, None) => Verdict::Fail(json!({"pattern": tag, "mode": mode, "reason": "no embedding"})),
        })
    })?;
    Ok(())
}

// ---------------------------------------------------------------- color

fn color(algorithm: &ColorAlgorithm, run: &mut Run, budget: &Budget) -> Result<(), Stop> {
    match algorithm {
        ColorAlgorithm::Broomfree {
            b,
            bprime,
            t,
            input,
            trace,
            out,
        } => {
            let d = load_digraph(input)?;
            let (b, b2) = (parse_broom(b)?, parse_broom(bprime)?);
            if let Some(t) = *t {
                let tt = build(&PatternTag::Tt(t))?;
                run.check("color.tt-free", || {
                    Ok(match find_induced(&d, &tt, budget)? {
                        None => Verdict::Pass(json!({"t": t})),
                        Some(e) => Verdict::Fail(json!({"pattern": tt.tag.to_string(), "embedding": e.map})),
                    })
                })?;
            }
            let mut result: Option<BroomColoring> = None;
            run.check("color.broom-free", || {
                match dicolor_broom_free(&d, &b, &b2, *t, budget) {
                    Ok(r) => {
                        result = Some(r);
                        Ok(Verdict::Pass(json!({"b": b.to_string(), "bprime": b2.to_string()})))
                    }
                    Err(DecompositionError::FreenessViolated { index, embedding }) => {
                        let broom = [b, b2][index].to_string();
                        Ok(Verdict::Fail(json!({"pattern": broom, "embedding": embedding.map})))
                    }
                    Err(e) => Err(e.into()),
                }
            })?;
            let Some(r) = result else {
                return Ok(());
            };
            check_coloring(&d, &r.coloring, run)?;
            run.check("color.within-bound", || {
                let value = json!({
                    "colors": r.colors(),
                    "bound": r.bound.to_string(),
                    "omega": r.omega,
                    "k": r.k,
                    "k_policy": r.k_policy,
                });
                Ok(if r.within_bound() {
                    Verdict::Pass(value)
                } else {
                    Verdict::Fail(value)
                })
            })?;
            if let Some(class_bound) = r.class_bound {
                run.check("color.class-bound", || {
                    let value = json!({"colors": r.colors(), "class_bound": class_bound.to_string()});
                    Ok(if r.colors() as u128 <= class_bound {
                        Verdict::Pass(value)
                    } else {
                        Verdict::Fail(value)
                    })
                })?;
            }
            if let Some(path) = trace {
                let trace = json!({
                    "b": r.b,
                    "bprime": r.b_prime,
                    "omega": r.omega,
                    "k": r.k,
                    "k_policy": r.k_policy,
                    "bound": r.bound.to_string(),
                    "class_bound": r.class_bound.map(|x| x.to_string()),
                    "levels": r.levels,
                });
                write(path, &pretty(&trace))?;
            }
            if let Some(path) = out {
                write(path, &pretty(&r.coloring))?;
            }
            Ok(())
        }
        ColorAlgorithm::Exact { input, out } => {
            let d = load_digraph(input)?;
            let r = dichromatic_number(&d, budget)?;
            check_coloring(&d, &r.coloring, run)?;
            run.check("color.optimal", || {
                Ok(Verdict::Pass(json!({"chi_dir": r.chi, "nodes": r.nodes})))
            })?;
            if let Some(path) = out {
                write(path, &pretty(&r.coloring))?;
            }
            Ok(())
        }
    }
}

fn check_coloring(d: &Digraph, f: &Dicoloring, run: &mut Run) -> Result<(), Stop> {
    run.check("color.valid", || {
        Ok(match monochromatic_cycle(d, f)? {
            None => Verdict::Pass(json!({"colors": f.used()})),
            Some(cycle) => Verdict::Fail(json!({"monochromatic_cycle": cycle})),
        })
    })?;
    Ok(())
}

fn pretty<T: serde::Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("plain data serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------- pmct

fn pmct(input: &Path, run: &mut Run) -> Result<(), Stop> {
    let d = load_digraph(input)?;
    let scc = scc_condensation(&d);
    let strong = run.check("pmct.strong", || {
        Ok(if scc.is_strongly_connected() {
            Verdict::Pass(Value::Null)
        } else {
            Verdict::Fail(json!({"components": scc.components.len(), "first": scc.components[0]}))
        })
    })?;
    if strong != crate::report::Status::Pass {
        return Ok(());
    }
    let c = find_pmct(&d)?;
    run.check("pmct.found", || {
        Ok(Verdict::Pass(json!({"k": c.k, "path": c.path, "size": c.len()})))
    })?;
    run.check("pmct.maximum", || {
        let omega = underlying_clique_number(&d);
        Ok(if d.is_clique(&c.k) && c.k.len() == omega {
            Verdict::Pass(json!({"omega": omega}))
        } else {
            Verdict::Fail(json!({"k": c.k, "omega": omega}))
        })
    })?;
    run.check("pmct.closed", || {
        let bad_arc = c.path.windows(2).find(|w| !d.has_arc(w[0], w[1]));
        let closed = scc_condensation(&induced(&d, &c.vertices()).graph).is_strongly_connected();
        Ok(match bad_arc {
            Some(w) => Verdict::Fail(json!({"missing_arc": w})),
            None if !closed => Verdict::Fail(json!({"reason": "K and its path do not induce a strong digraph"})),
            None => Verdict::Pass(Value::Null),
        })
    })?;
    Ok(())
}
