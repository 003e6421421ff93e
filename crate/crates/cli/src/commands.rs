use std::io::Read;

use serde::Serialize;

use neurocode::code::{apply_elementary_map, cc_family, cr_family, parse_code, ElementaryMapSpec};
use neurocode::graph::{ccg, gr_complex, grg, CodeGraph, Label};
use neurocode::ideal::{canonical_form_oracle, predict_cf};
use neurocode::realize::{cc_m_intervals, cf_from_intervals, cr_k_polygon, Cover};
use neurocode::sweep::{run_suite, Counterexample, Suite, SweepParams};
use neurocode::{canonical_form, CanonicalForm, Code, Error, Result};

use crate::report::RunReport;
use crate::{GraphKind, Input};

pub enum Output {
    Report(RunReport),
    Raw(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Cc(usize),
    Cr(usize),
}

impl Family {
    fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("family must be cc:<m> or cr:<k>, got {s:?}"));
        let (kind, num) = s.split_once(':').ok_or_else(bad)?;
        let num: usize = num.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "cc" => Ok(Family::Cc(num)),
            "cr" => Ok(Family::Cr(num)),
            _ => Err(bad()),
        }
    }

    fn code(self) -> Result<Code> {
        match self {
            Family::Cc(m) => cc_family(m),
            Family::Cr(k) => cr_family(k),
        }
    }
}

/// Argument text, with `-` meaning stdin and `@path` a file.
fn read_arg(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn load_code(input: &Input) -> Result<Code> {
    match (&input.code, &input.family) {
        (_, Some(f)) => Family::parse(f)?.code(),
        (Some(text), None) => parse_code(&read_arg(text)?),
        (None, None) => Err(Error::Parse("expected code text or --family".into())),
    }
}

fn cf_lines(report: &mut RunReport, key: &str, cf: &CanonicalForm) {
    report.output(key, cf.to_json());
    report.line(key, cf);
}

pub fn cf(command: String, input: &Input, oracle: bool) -> Result<Output> {
    let code = load_code(input)?;
    let form = canonical_form(&code);
    let mut report = RunReport::new(command, &format!("code:{}", code.to_text()));
    report.output("code", &code);
    report.line("code", code.to_text());
    cf_lines(&mut report, "cf", &form);
    if oracle {
        let brute = canonical_form_oracle(&code)?;
        let agree = brute == form;
        let detail = (!agree).then(|| format!("oracle gives {brute}"));
        let cx = (!agree).then(|| Counterexample {
            command: format!("neurocode cf --oracle \"{}\"", code.to_text()),
            detail: format!("incremental {form}, oracle {brute}"),
        });
        report.check("oracle-agreement", agree, detail, cx);
    }
    Ok(Output::Report(report))
}

#[derive(Serialize)]
struct GraphSummary {
    vertices: usize,
    edges: usize,
    connected: bool,
    complete: bool,
    degrees: Vec<usize>,
    diameter: Option<usize>,
}

fn summarize<L: Label>(report: &mut RunReport, g: &CodeGraph<L>) {
    let s = GraphSummary {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        complete: g.is_complete(),
        degrees: g.degrees(),
        diameter: g.diameter(),
    };
    let verts: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    report.line("vertices", verts.join(" "));
    report.line("edges", edges.join(" "));
    report.line("connected", s.connected);
    report.line("complete", s.complete);
    let degrees: Vec<String> = s.degrees.iter().map(|d| d.to_string()).collect();
    report.line("degrees", degrees.join(","));
    report.line(
        "diameter",
        s.diameter.map_or("inf".to_string(), |d| d.to_string()),
    );
    report.output("graph", g.to_json());
    report.output("dot", g.to_dot());
    report.output("summary", s);
}

pub fn graph(
    command: String,
    which: GraphKind,
    input: &Input,
    cf_text: Option<&str>,
    n: Option<usize>,
    dot_only: bool,
) -> Result<Output> {
    let (form, digest_input, code) = match cf_text {
        Some(text) => {
            let form = CanonicalForm::parse(&read_arg(text)?, n)?;
            let key = format!("cf:n={}:{form}", form.n());
            (form, key, None)
        }
        None => {
            let code = load_code(input)?;
            (
                canonical_form(&code),
                format!("code:{}", code.to_text()),
                Some(code),
            )
        }
    };
    let mut report = RunReport::new(command, &digest_input);
    if let Some(c) = &code {
        report.output("code", c);
        report.line("code", c.to_text());
    }
    match which {
        GraphKind::Ccg => {
            let c =
                code.ok_or_else(|| Error::Parse("ccg needs a code, not a canonical form".into()))?;
            let g = ccg(&c);
            if dot_only {
                return Ok(Output::Raw(g.to_dot()));
            }
            summarize(&mut report, &g);
        }
        GraphKind::Grg => {
            let g = grg(&form);
            if dot_only {
                return Ok(Output::Raw(g.to_dot()));
            }
            cf_lines(&mut report, "cf", &form);
            summarize(&mut report, &g);
        }
        GraphKind::GrComplex => {
            let complex = gr_complex(&form);
            if dot_only {
                return Ok(Output::Raw(grg(&form).to_dot()));
            }
            cf_lines(&mut report, "cf", &form);
            let facets: Vec<String> = complex.facets().iter().map(|f| f.to_string()).collect();
            report.line("facets", facets.join(" "));
            report.line("dimension", complex.dimension());
            report.output("complex", complex.to_json());
        }
    }
    Ok(Output::Report(report))
}

pub struct SpecArgs {
    pub permute: Option<String>,
    pub add_on: bool,
    pub add_off: bool,
    pub duplicate: Option<usize>,
    pub delete: Option<usize>,
    pub include: Option<String>,
}

impl SpecArgs {
    fn spec(&self) -> Result<ElementaryMapSpec> {
        if let Some(p) = &self.permute {
            let images = p
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::InvalidSpec(format!("bad permutation {p:?}")))?;
            return Ok(ElementaryMapSpec::Permutation(images));
        }
        if self.add_on {
            return Ok(ElementaryMapSpec::AddTrivialOn);
        }
        if self.add_off {
            return Ok(ElementaryMapSpec::AddTrivialOff);
        }
        if let Some(i) = self.duplicate {
            return Ok(ElementaryMapSpec::Duplicate(i));
        }
        if let Some(i) = self.delete {
            return Ok(ElementaryMapSpec::Delete(i));
        }
        if let Some(t) = &self.include {
            return Ok(ElementaryMapSpec::Inclusion(parse_code(&read_arg(t)?)?));
        }
        Err(Error::InvalidSpec("no map given".into()))
    }
}

pub fn map(command: String, input: &Input, args: &SpecArgs) -> Result<Output> {
    let code = load_code(input)?;
    let spec = args.spec()?;
    let (target, f) = apply_elementary_map(&code, &spec)?;
    let image = f.image_code();
    let mut report = RunReport::new(command, &format!("code:{} map:{spec}", code.to_text()));
    report.output("code", &code);
    report.output("map", spec.to_string());
    report.output("image", &image);
    report.line("code", code.to_text());
    report.line("map", &spec);
    report.line("image", image.to_text());
    if target != image {
        report.output("codomain", &target);
        report.line("codomain", target.to_text());
    }
    let computed = canonical_form(&target);
    cf_lines(&mut report, "cf", &computed);
    let reproduce = || format!("neurocode map {spec} \"{}\"", code.to_text());
    report.check(
        "morphism",
        f.is_morphism(),
        None,
        (!f.is_morphism()).then(|| Counterexample {
            command: reproduce(),
            detail: "induced map is not a morphism".into(),
        }),
    );
    match predict_cf(&canonical_form(&code), &spec) {
        Ok(predicted) => {
            cf_lines(&mut report, "predicted", &predicted);
            let agree = predicted == computed;
            let cx = (!agree).then(|| Counterexample {
                command: reproduce(),
                detail: format!("predicted {predicted}, computed {computed}"),
            });
            report.check("prediction", agree, None, cx);
        }
        Err(Error::UnsupportedPrediction) => {
            report.output("predicted", "unsupported");
            report.line(
                "predicted",
                "unsupported (no transformation rule for inclusion)",
            );
        }
        Err(e) => return Err(e),
    }
    Ok(Output::Report(report))
}

pub fn realize(
    command: String,
    cover_arg: Option<&str>,
    family: Option<&str>,
    with_cf: bool,
) -> Result<Output> {
    let (cover, want) = match (cover_arg, family) {
        (_, Some(f)) => match Family::parse(f)? {
            Family::Cc(m) => (Cover::Intervals(cc_m_intervals(m)?), Some(cc_family(m)?)),
            Family::Cr(k) => (Cover::Segments(cr_k_polygon(k)?), Some(cr_family(k)?)),
        },
        (Some(text), None) => (Cover::from_json(&read_arg(text)?)?, None),
        (None, None) => return Err(Error::Parse("expected cover JSON or --family".into())),
    };
    let cover_json = cover.to_json();
    let digest_input = serde_json::to_string(&cover_json).expect("plain json");
    let mut report = RunReport::new(command.clone(), &digest_input);
    let code = cover.code();
    report.output("cover", &cover_json);
    report.output("code", &code);
    report.line("code", code.to_text());
    if let Some(want) = want {
        let ok = want == code;
        let cx = (!ok).then(|| Counterexample {
            command: command.clone(),
            detail: format!("expected {}", want.to_text()),
        });
        report.check("family-match", ok, None, cx);
    }
    if with_cf {
        let Cover::Intervals(u) = &cover else {
            return Err(Error::InvalidCover("--cf needs an interval cover".into()));
        };
        let from_cover = cf_from_intervals(u)?;
        let from_code = canonical_form(&code);
        cf_lines(&mut report, "cf", &from_cover);
        let ok = from_cover == from_code;
        let cx = (!ok).then(|| Counterexample {
            command: format!("neurocode realize --cf '{digest_input}'"),
            detail: format!("from cover {from_cover}, from code {from_code}"),
        });
        report.check("cf-agreement", ok, None, cx);
    }
    Ok(Output::Report(report))
}

fn default_n(suite: Suite) -> usize {
    match suite {
        Suite::Parity | Suite::UnionClosure => 3,
        Suite::CompleteIso => 4,
        _ => 5,
    }
}

pub fn verify(
    command: String,
    suite: &str,
    n: Option<usize>,
    exhaustive: bool,
    samples: usize,
    seed: u64,
    max: usize,
) -> Result<Output> {
    let suite: Suite = suite.parse()?;
    let params = SweepParams {
        n: n.unwrap_or(default_n(suite)),
        exhaustive,
        samples,
        seed,
        max,
    };
    let input = format!(
        "verify:{suite} n={} exhaustive={} samples={} seed={} max={}",
        params.n, params.exhaustive, params.samples, params.seed, params.max
    );
    let sweep = run_suite(suite, &params)?;
    let mut report = RunReport::new(command, &input);
    report.line("suite", suite);
    report.output("sweep", &sweep);
    for c in &sweep.checks {
        let mut detail = format!("scanned={}", c.scanned);
        if let Some(p) = c.premises {
            detail.push_str(&format!(" premises={p}"));
        }
        detail.push_str(&format!(" violations={}", c.violations));
        report.check(&c.name, c.passed(), Some(detail), c.counterexample.clone());
    }
    Ok(Output::Report(report))
}

pub fn family(command: String, spec: &str) -> Result<Output> {
    let code = Family::parse(spec)?.code()?;
    let mut report = RunReport::new(command, &format!("family:{spec}"));
    report.output("code", &code);
    report.line("code", code.to_text());
    report.line("codewords", code.len());
    Ok(Output::Report(report))
}
