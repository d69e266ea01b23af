//! Commands run over a parsed document.

use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::document::{Document, Item};
use super::write::{category_section, complex_section, datum_section, decomp_section, render, ts_sections, ComplexNames};
use crate::ainf::{check_a_infinity, check_functor, AInfCategory};
use crate::cobordism::{
    assemble_functor_value, build_iterated_cones, build_snake, check_composition_compatibility, snake_inclusion,
    snake_projection, CobordismDatum,
};
use crate::cone_calc::{
    check_cone_decomposition, classify_index, compose_ts, fredholm_index, project_ts, ConeDecomposition, IndexCase,
    Summand, TSMorphism,
};
use crate::f2::{induced_on_homology, BitMatrix, ChainMap};
use crate::k_theory::{k0_of_datum, k0_of_decomposition, stage_relation, theta_well_defined, verify_null_cobordism, KError};
use crate::modules::{check_module, check_module_morphism, check_yoneda_functor, yoneda_probe};
use crate::report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckComplex,
    CheckAinf,
    CheckModule,
    CheckMorphism,
    Snake,
    ConeDecomp,
    TsCompose,
    Assemble,
    ComposeCompat,
    K0,
    Index,
    YonedaProbe,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::CheckComplex,
        Command::CheckAinf,
        Command::CheckModule,
        Command::CheckMorphism,
        Command::Snake,
        Command::ConeDecomp,
        Command::TsCompose,
        Command::Assemble,
        Command::ComposeCompat,
        Command::K0,
        Command::Index,
        Command::YonedaProbe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::CheckComplex => "check-complex",
            Command::CheckAinf => "check-ainf",
            Command::CheckModule => "check-module",
            Command::CheckMorphism => "check-morphism",
            Command::Snake => "snake",
            Command::ConeDecomp => "cone-decomp",
            Command::TsCompose => "ts-compose",
            Command::Assemble => "assemble",
            Command::ComposeCompat => "compose-compat",
            Command::K0 => "k0",
            Command::Index => "index",
            Command::YonedaProbe => "yoneda-probe",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown command {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flags {
    pub arity_cap: usize,
    pub seed: Option<u64>,
    pub json: bool,
    pub quiet: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags { arity_cap: crate::ainf::arity_cap_from_env(), seed: None, json: false, quiet: false }
    }
}

/// Reports in input order, an optional emitted file, and the exit code:
/// 0 all passed, 1 some check failed, 2 input error.
#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub command: &'static str,
    pub reports: Vec<Report>,
    pub emitted: Option<String>,
    pub error: Option<String>,
    pub exit: i32,
}

impl Outcome {
    fn input_error(command: Command, msg: impl Into<String>) -> Self {
        Outcome { command: command.name(), reports: Vec::new(), emitted: None, error: Some(msg.into()), exit: 2 }
    }

    fn from_reports(command: Command, reports: Vec<Report>, emitted: Option<String>) -> Self {
        let exit = if reports.iter().any(|r| r.status == Status::Error) {
            2
        } else if reports.iter().any(|r| r.status == Status::Fail) {
            1
        } else {
            0
        };
        Outcome { command: command.name(), reports, emitted, error: None, exit }
    }

    /// Text for standard output.
    pub fn render(&self, flags: &Flags) -> String {
        if flags.quiet {
            return String::new();
        }
        if flags.json {
            return serde_json::to_string_pretty(self).expect("serializable") + "\n";
        }
        let mut s: String = self.reports.iter().map(Report::render).collect();
        if let Some(e) = &self.error {
            s.push_str(&format!("ERROR {e}\n"));
        }
        if let Some(f) = &self.emitted {
            s.push_str(f);
        }
        s
    }
}

/// Parses `text` and runs `command`. `args` name the sections to use where a
/// command needs specific ones.
pub fn run(command: Command, text: &[u8], args: &[String], flags: &Flags) -> Outcome {
    let doc = match super::document::parse_bytes(text, flags.arity_cap) {
        Ok(d) => d,
        Err(e) => return Outcome::input_error(command, e.to_string()),
    };
    run_document(command, &doc, args)
}

pub fn run_document(command: Command, doc: &Document, args: &[String]) -> Outcome {
    let result = match command {
        Command::CheckComplex => check_complexes(doc),
        Command::CheckAinf => check_categories(doc),
        Command::CheckModule => per_item(doc, "module", |name, item| match item {
            Item::Module { module, .. } => Some(named(check_module(module), "module", name)),
            _ => None,
        }),
        Command::CheckMorphism => per_item(doc, "morphism", |name, item| match item {
            Item::Morphism { morphism, .. } => Some(named(check_module_morphism(morphism), "morphism", name)),
            _ => None,
        }),
        Command::Snake => snakes(doc),
        Command::ConeDecomp => per_item(doc, "decomp", |name, item| match item {
            Item::Decomp(p) => Some(check_decomp(doc, name, p)),
            _ => None,
        }),
        Command::TsCompose => ts_compose(doc, args),
        Command::Assemble => assemble(doc),
        Command::ComposeCompat => compose_compat(doc, args),
        Command::K0 => k0(doc),
        Command::Index => per_item(doc, "profile", |name, item| match item {
            Item::Profile(p) => Some(index_report(name, p)),
            _ => None,
        }),
        Command::YonedaProbe => per_item(doc, "category", |name, item| match item {
            Item::Category(a) => Some(probe(name, a)),
            _ => None,
        }),
    };
    match result {
        Ok((reports, emitted)) => Outcome::from_reports(command, reports, emitted),
        Err(e) => Outcome::input_error(command, e),
    }
}

type CmdResult = Result<(Vec<Report>, Option<String>), String>;

fn named(mut r: Report, kind: &str, name: &str) -> Report {
    r.check = format!("{kind}:{name}");
    r
}

/// Runs `f` on every matching entry concurrently, keeping input order.
fn per_item(doc: &Document, kind: &str, f: impl Fn(&str, &Item) -> Option<Report> + Sync) -> CmdResult {
    let entries: Vec<(&str, &Item)> = doc.entries().collect();
    let reports: Vec<Report> = entries.par_iter().filter_map(|(n, i)| f(n, i)).collect();
    if reports.is_empty() {
        return Err(format!("no {kind} sections in input"));
    }
    Ok((reports, None))
}

fn check_complexes(doc: &Document) -> CmdResult {
    per_item(doc, "complex or chainmap", |name, item| match item {
        Item::Complex(d) | Item::Snake { d, .. } => {
            let mut r = Report::new(format!("complex:{name}"));
            r.tick(1);
            match crate::f2::ChainComplex::new(d.clone()) {
                Ok(c) => r.note(format!("dim={} homology={}", c.dim(), c.homology().rank)),
                Err(e) => r.violation("d", e.to_string()),
            }
            Some(r)
        }
        Item::ChainMap { from, to, f } => {
            let mut r = Report::new(format!("chainmap:{name}"));
            r.tick(1);
            match (doc.complex(from), doc.complex(to)) {
                (Some(x), Some(y)) => {
                    if let Err(e) = ChainMap::new(x, y, f.clone()) {
                        r.violation("f", e.to_string());
                    }
                }
                _ => r.violation("complexes", "source or target is not a complex"),
            }
            Some(r)
        }
        _ => None,
    })
}

fn check_categories(doc: &Document) -> CmdResult {
    per_item(doc, "category or functor", |name, item| match item {
        Item::Category(a) => Some(named(check_a_infinity(a), "ainf", name)),
        Item::Functor { from, to, map } => {
            let (Some(Item::Category(a)), Some(Item::Category(b))) = (doc.item(from), doc.item(to)) else { return None };
            Some(named(check_functor(map, a, b), "functor", name))
        }
        _ => None,
    })
}

fn snakes(doc: &Document) -> CmdResult {
    let (reports, _) = per_item(doc, "snake", |name, item| match item {
        Item::Snake { base, l, .. } => Some(snake_report(doc, name, base, *l)),
        _ => None,
    })?;
    let mut emitted = Vec::new();
    for (name, item) in doc.entries() {
        if let Item::Snake { d, .. } = item {
            if let Ok(c) = crate::f2::ChainComplex::new(d.clone()) {
                emitted.push(complex_section(name, &c));
            }
        }
    }
    Ok((reports, Some(render(&emitted))))
}

fn snake_report(doc: &Document, name: &str, base: &str, l: usize) -> Report {
    let mut r = Report::new(format!("snake:{name}"));
    let Some(b) = doc.complex(base) else {
        r.violation("base", format!("{base} is not a complex"));
        return r;
    };
    let s = match build_snake(&b, l) {
        Ok(s) => s,
        Err(e) => {
            r.violation("build", e.to_string());
            return r;
        }
    };
    r.tick(1);
    let (hb, hs) = (b.homology().rank, s.total.homology().rank);
    if hb != hs {
        r.violation("homology", format!("base rank {hb}, snake rank {hs}"));
    }
    let e = snake_inclusion(&s);
    if ChainMap::new(e.source.clone(), e.target.clone(), e.f.clone()).is_err() {
        r.violation("inclusion", "not a chain map");
    }
    for j in (1..=l).step_by(2) {
        r.tick(1);
        let c = snake_projection(&s, j).expect("odd index in range");
        if ChainMap::new(c.source.clone(), c.target.clone(), c.f.clone()).is_err() {
            r.violation(format!("c_{j}"), "not a chain map");
        } else if c.f.mul(&e.f) != BitMatrix::identity(b.dim()) {
            r.violation(format!("c_{j}"), "c_j ∘ e is not the identity");
        }
    }
    r.note(format!("dim={} homology={hs}", s.total.dim()));
    r
}

fn build_decomp(doc: &Document, pieces: &[(String, BitMatrix)]) -> Result<ConeDecomposition, String> {
    let mut out = Vec::with_capacity(pieces.len());
    for (x, u) in pieces {
        let c = doc.complex(x).ok_or_else(|| format!("{x} is not a complex"))?;
        out.push((c, u.clone()));
    }
    ConeDecomposition::strict(out).map_err(|e| e.to_string())
}

fn check_decomp(doc: &Document, name: &str, pieces: &[(String, BitMatrix)]) -> Report {
    let mut r = Report::new(format!("decomp:{name}"));
    match build_decomp(doc, pieces) {
        Ok(eta) => {
            r.absorb(check_cone_decomposition(&eta));
            let k0 = k0_of_decomposition(&eta);
            let mut names = vec![format!("Y{}", eta.len() + 1)];
            names.extend((1..=eta.len()).map(|i| format!("X{i}")));
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            r.tick(1);
            if !k0.presentation.is_relation(&k0.presentation.vector(&refs).expect("declared")) {
                r.violation("k0", "[A] + Σ[X_i] is not a relation");
            }
            r.note(format!("length={} top-dim={}", eta.len(), eta.top().dim()));
        }
        Err(e) => r.violation("pieces", e),
    }
    r
}

fn build_ts(doc: &Document, summands: &[(String, String, BitMatrix)]) -> Result<TSMorphism, String> {
    let mut out = Vec::with_capacity(summands.len());
    for (d, src, f) in summands {
        let Some(Item::Decomp(p)) = doc.item(d) else { return Err(format!("{d} is not a decomposition")) };
        let eta = build_decomp(doc, p)?;
        let x = doc.complex(src).ok_or_else(|| format!("{src} is not a complex"))?;
        let phi = ChainMap::new(x, eta.top().clone(), f.clone()).map_err(|e| e.to_string())?;
        out.push(Summand::new(phi, eta).map_err(|e| e.to_string())?);
    }
    Ok(TSMorphism::new(out))
}

fn pick<'a>(doc: &'a Document, args: &'a [String], n: usize, pred: impl Fn(&Item) -> bool) -> Result<Vec<&'a str>, String> {
    if !args.is_empty() {
        for a in args.iter().take(n) {
            if !doc.item(a).is_some_and(&pred) {
                return Err(format!("no suitable section named {a}"));
            }
        }
        if args.len() < n {
            return Err(format!("expected {n} section names"));
        }
        return Ok(args.iter().take(n).map(String::as_str).collect());
    }
    let found: Vec<&str> = doc.entries().filter(|(_, i)| pred(i)).map(|(n, _)| n).take(n).collect();
    if found.len() < n {
        return Err(format!("expected {n} suitable sections, found {}", found.len()));
    }
    Ok(found)
}

/// `ts-compose P Q` is `Q ∘ P`: `P` first.
fn ts_compose(doc: &Document, args: &[String]) -> CmdResult {
    let names = pick(doc, args, 2, |i| matches!(i, Item::Ts(_)))?;
    let get = |n: &str| match doc.item(n) {
        Some(Item::Ts(s)) => build_ts(doc, s),
        _ => unreachable!(),
    };
    let mut r = Report::new(format!("ts-compose:{}∘{}", names[1], names[0]));
    let (p, q) = match (get(names[0]), get(names[1])) {
        (Ok(p), Ok(q)) => (p, q),
        (Err(e), _) | (_, Err(e)) => {
            r.violation("input", e);
            return Ok((vec![r], None));
        }
    };
    let c = match compose_ts(&q, &p) {
        Ok(c) => c,
        Err(e) => {
            r.violation("compose", e.to_string());
            return Ok((vec![r], None));
        }
    };
    for (i, s) in c.summands().iter().enumerate() {
        let cr = check_cone_decomposition(&s.decomposition);
        r.tick(1);
        if !cr.passed() {
            r.violation(format!("summand {i}"), cr.detail());
        }
    }
    if p.summands().len() == 1 {
        r.tick(1);
        let h = |m: &ChainMap| induced_on_homology(m).map_err(|e| e.to_string());
        let lhs = project_ts(&c).map_err(|e| e.to_string()).and_then(|m| h(&m));
        let rhs = project_ts(&q)
            .map_err(|e| e.to_string())
            .and_then(|mq| project_ts(&p).map_err(|e| e.to_string()).and_then(|mp| Ok(h(&mq)?.mul(&h(&mp)?))));
        if lhs != rhs {
            r.violation("projection", "projection of the composite differs on homology");
        }
    }
    let name = format!("{}_{}", names[1], names[0]);
    Ok((vec![r], Some(render(&ts_sections(&name, &c)))))
}

fn datum<'a>(doc: &'a Document, name: &str) -> Option<&'a CobordismDatum> {
    match doc.item(name) {
        Some(Item::Datum(v)) => Some(v),
        _ => None,
    }
}

fn assemble(doc: &Document) -> CmdResult {
    let mut reports = Vec::new();
    let mut emitted = Vec::new();
    for (name, item) in doc.entries() {
        let Item::Datum(v) = item else { continue };
        let a = &v.category;
        let mut r = Report::new(format!("assemble:{name}"));
        match build_iterated_cones(v) {
            Ok(built) => {
                for t in &built.triangles {
                    r.tick(1);
                    match crate::modules::verify_exact_triangle(t) {
                        Ok(tr) if tr.passed() => {}
                        Ok(tr) => r.violation("triangle", tr.detail()),
                        Err(e) => r.violation("triangle", e.to_string()),
                    }
                }
            }
            Err(e) => r.violation("iterated cones", e.to_string()),
        }
        for &n in &v.test_objects {
            r.tick(1);
            match assemble_functor_value(v, n) {
                Ok(phi) => emitted.extend(ts_sections(&format!("{name}_{}", a.name(n)), &phi)),
                Err(e) => r.violation(format!("test object {}", a.name(n)), e.to_string()),
            }
        }
        reports.push(r);
    }
    if reports.is_empty() {
        return Err("no datum sections in input".into());
    }
    Ok((reports, Some(render(&emitted))))
}

/// `compose-compat V V' V'' [i]`, `i` the one-based end of `V` that `V'`
/// starts from (default: the first end equal to the positive end of `V'`).
fn compose_compat(doc: &Document, args: &[String]) -> CmdResult {
    let names = pick(doc, args, 3, |i| matches!(i, Item::Datum(_)))?;
    let (v, vp, vg) = (datum(doc, names[0]).unwrap(), datum(doc, names[1]).unwrap(), datum(doc, names[2]).unwrap());
    let i = match args.get(3) {
        Some(s) => s.parse::<usize>().ok().filter(|&i| i >= 1).ok_or_else(|| format!("bad end index {s:?}"))? - 1,
        None => v
            .negative_ends
            .iter()
            .position(|&e| e == vp.positive_end)
            .ok_or_else(|| format!("{} does not start at an end of {}", names[1], names[0]))?,
    };
    let r = match check_composition_compatibility(v, vp, vg, i, None) {
        Ok(r) => named(r, "compose-compat", &names.join(",")),
        Err(e) => return Err(e.to_string()),
    };
    Ok((vec![r], None))
}

fn k0(doc: &Document) -> CmdResult {
    let mut reports = Vec::new();
    let k0s: Vec<(&str, &crate::k_theory::K0Presentation)> =
        doc.entries().filter_map(|(n, i)| if let Item::K0(k) = i { Some((n, k)) } else { None }).collect();
    for (name, item) in doc.entries() {
        match item {
            Item::Presentation(g) => {
                let mut r = Report::new(format!("presentation:{name}"));
                r.note(format!("rank={}", crate::k_theory::quotient_rank(g)));
                reports.push(r);
                for (kname, k) in &k0s {
                    let mut r = Report::new(format!("theta:{name}->{kname}"));
                    let map: Option<Vec<usize>> = g.generators().iter().map(|x| k.presentation.index_of(x)).collect();
                    match map {
                        Some(m) => match theta_well_defined(g, k, &m) {
                            Ok(t) => r.absorb(t),
                            Err(e) => r.violation("map", e.to_string()),
                        },
                        None => r.violation("map", "a generator has no K0 counterpart"),
                    }
                    reports.push(r);
                }
            }
            Item::K0(k) => {
                let mut r = Report::new(format!("k0:{name}"));
                r.note(format!("rank={}", k.rank()));
                reports.push(r);
            }
            Item::Datum(v) => reports.push(datum_k0(name, v, &k0s)),
            _ => {}
        }
    }
    if reports.is_empty() {
        return Err("no presentation, k0 or datum sections in input".into());
    }
    Ok((reports, None))
}

fn datum_k0(name: &str, v: &CobordismDatum, k0s: &[(&str, &crate::k_theory::K0Presentation)]) -> Report {
    let mut r = Report::new(format!("k0-datum:{name}"));
    let ledger = match k0_of_datum(v) {
        Ok(k) => k,
        Err(e) => {
            r.violation("datum", e.to_string());
            return r;
        }
    };
    r.tick(1);
    match stage_relation(v, &ledger) {
        Ok(rel) if ledger.presentation.is_relation(&rel) => {}
        Ok(_) => r.violation("ledger", "[M_m] + Σ[L_i] is not a relation"),
        Err(e) => r.violation("ledger", e.to_string()),
    }
    let names: Vec<String> = (0..v.category.objects()).map(|i| v.category.name(i).to_string()).collect();
    let free = crate::k_theory::k0_from_triangles::<String>(&names, &[]).expect("declared");
    let base = k0s.first().map(|(_, k)| (*k).clone()).unwrap_or(free);
    match verify_null_cobordism(v, &base) {
        Ok(nr) => r.absorb(nr),
        Err(KError::NotAcyclic(_)) => r.note("top module is not acyclic; null-cobordism check skipped"),
        Err(e) => r.violation("null-cobordism", e.to_string()),
    }
    r
}

fn index_report(name: &str, p: &crate::cone_calc::MorseIndexProfile) -> Report {
    let mut r = Report::new(format!("index:{name}"));
    let ind = fredholm_index(p);
    let case = classify_index(p);
    r.tick(1);
    let agrees = match case {
        IndexCase::Negative => ind < 0,
        c => ind == c.index_sign(),
    };
    if !agrees {
        r.violation("case", format!("index {ind} disagrees with case {case:?}"));
    }
    r.note(format!("index={ind} case={case:?}"));
    r
}

fn probe(name: &str, a: &Arc<AInfCategory>) -> Report {
    let mut r = Report::new(format!("yoneda-probe:{name}"));
    match yoneda_probe(a) {
        Ok((pr, _)) => r.absorb(pr),
        Err(e) => r.violation("probe", e.to_string()),
    }
    r.absorb(check_yoneda_functor(a, 2));
    r
}

/// Kinds accepted by [`random_input`].
pub const RANDOM_KINDS: &[&str] = &["complex", "category", "decomp", "ts", "datum"];

/// A seeded random instance file: `complex`, `category`, `decomp`, `ts`
/// (two composable morphisms `P`, `Q`) or `datum` (category `A`, datum `V`).
pub fn random_input(kind: &str, seed: u64) -> Result<String, String> {
    use crate::gen;
    use rand::Rng;
    let mut rng = gen::rng(seed);
    let sections = match kind {
        "complex" => {
            let n = rng.gen_range(1..=4);
            vec![complex_section("C", &gen::random_complex(&mut rng, n))]
        }
        "category" => {
            let k = rng.gen_range(1..=3);
            vec![category_section("A", &gen::random_dg_category(&mut rng, k, 2, 4))]
        }
        "decomp" => {
            let len = rng.gen_range(1..=3);
            let eta = gen::random_decomposition(&mut rng, len, 2);
            let mut names = ComplexNames::new("X");
            let d = decomp_section("D", &eta, &mut names);
            let mut out = names.sections();
            out.push(d);
            out
        }
        "ts" => {
            let n = rng.gen_range(0..=2);
            let x = gen::random_complex(&mut rng, n);
            let p = gen::random_ts_from(&mut rng, &[x], 2, 2);
            let q = gen::random_ts_from(&mut rng, &p.target(), 2, 2);
            let mut out = ts_sections("P", &p);
            // Q's sources must be P's targets by name, so share the names
            let mut all = ts_sections("Q", &q);
            out.append(&mut all);
            out
        }
        "datum" => {
            let m = rng.gen_range(2..=3);
            let t = crate::cobordism::Tower::random(&mut rng, m, 2);
            let (a, data) = crate::cobordism::realize_towers(&[t], &[crate::f2::ChainComplex::trivial(1)], 4)
                .map_err(|e| e.to_string())?;
            vec![category_section("A", &a), datum_section("V", "A", &data[0])]
        }
        k => return Err(format!("unknown random kind {k:?}; expected one of {}", RANDOM_KINDS.join(", "))),
    };
    Ok(render(&sections))
}
