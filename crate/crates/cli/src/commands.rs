use equimult_core::defo::{self, SectionSolution};
use equimult_core::plane::{self, PlaneCurve};
use equimult_core::poly::{BiPoly, Rational, SectionGerm};
use equimult_core::singular::CurveGerm;
use equimult_core::Error;
use serde_json::{json, Map, Value};

use crate::parse::{parse_poly, parse_rational, ParseError};
use crate::report::{Report, Status};

/// Input failure of a command, mapped onto a report status.
#[derive(Debug)]
pub enum Failure {
    Parse { arg: &'static str, err: ParseError },
    Domain(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(msg) => Failure::Internal(msg),
            other => Failure::Domain(other),
        }
    }
}

impl Failure {
    fn into_report(self, command: &str, inputs: Map<String, Value>) -> Report {
        let (status, msg) = match self {
            Failure::Parse { arg, err } => (Status::Error, format!("{arg}: {err}")),
            Failure::Domain(e) => (Status::Error, e.to_string()),
            Failure::Internal(msg) => (Status::Internal, format!("internal assertion failed: {msg}")),
        };
        Report::failed(command, inputs, status, msg)
    }
}

/// Optional translation putting the point `(px, py)` at the origin.
#[derive(Clone, Debug, Default)]
pub struct Translation {
    pub source: Option<(String, String)>,
}

impl Translation {
    fn resolve(&self) -> Result<Option<(Rational, Rational)>, Failure> {
        let Some((sx, sy)) = &self.source else {
            return Ok(None);
        };
        let px = parse_rational(sx).map_err(|err| Failure::Parse { arg: "at.x", err })?;
        let py = parse_rational(sy).map_err(|err| Failure::Parse { arg: "at.y", err })?;
        Ok(Some((px, py)))
    }

    fn echo(&self, inputs: &mut Map<String, Value>) {
        if let Some((x, y)) = &self.source {
            inputs.insert("at".into(), json!([x, y]));
        }
    }
}

fn parse_arg(arg: &'static str, src: &str) -> Result<BiPoly, Failure> {
    parse_poly(src).map_err(|err| Failure::Parse { arg, err })
}

fn translate(p: BiPoly, at: &Option<(Rational, Rational)>) -> BiPoly {
    match at {
        None => p,
        Some((px, py)) => {
            let sx = &BiPoly::x() + &BiPoly::constant(px.clone());
            let sy = &BiPoly::y() + &BiPoly::constant(py.clone());
            p.substitute(&sx, &sy)
        }
    }
}

fn finish(
    command: &str,
    inputs: Map<String, Value>,
    results: Result<Map<String, Value>, Failure>,
) -> Report {
    match results {
        Ok(r) => Report::ok(command, inputs, r),
        Err(f) => f.into_report(command, inputs),
    }
}

fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| json!(r.to_string())).collect())
}

fn solutions_value(sol: &SectionSolution) -> Value {
    let mut obj = Map::new();
    let Some(particular) = sol.solutions.particular() else {
        obj.insert("kind".into(), json!("empty"));
        return Value::Object(obj);
    };
    let dirs = sol.solutions.directions();
    let kind = match dirs.len() {
        0 => "point",
        1 => "line",
        _ => "plane",
    };
    obj.insert("kind".into(), json!(kind));
    obj.insert("dimension".into(), json!(dirs.len()));
    obj.insert("particular".into(), rationals(particular));
    obj.insert(
        "directions".into(),
        Value::Array(dirs.iter().map(|d| rationals(d)).collect()),
    );
    Value::Object(obj)
}

pub fn analyze(f_src: &str, at: &Translation) -> Report {
    let mut inputs = Map::new();
    inputs.insert("f".into(), json!(f_src));
    at.echo(&mut inputs);
    let results = (|| {
        let shift = at.resolve()?;
        let f = translate(parse_arg("f", f_src)?, &shift);
        let germ = CurveGerm::new(f.clone())?;
        let r = germ.analyze();
        let mut out = Map::new();
        out.insert("f".into(), json!(f.to_string()));
        out.insert("multiplicity".into(), json!(r.m));
        out.insert("tangent_cone".into(), json!(r.tangent_cone.to_string()));
        out.insert("unitangential".into(), json!(r.unitangential));
        out.insert("deg_z".into(), json!(r.deg_z));
        out.insert("section_ambiguity".into(), json!(r.ambiguity));
        Ok(out)
    })();
    finish("analyze", inputs, results)
}

pub fn deform(f_src: &str, g_src: &str, section: Option<(&str, &str)>, at: &Translation) -> Report {
    let mut inputs = Map::new();
    inputs.insert("f".into(), json!(f_src));
    inputs.insert("g".into(), json!(g_src));
    if let Some((a, b)) = section {
        inputs.insert("section".into(), json!([a, b]));
    }
    at.echo(&mut inputs);
    let results = (|| {
        let shift = at.resolve()?;
        let f = translate(parse_arg("f", f_src)?, &shift);
        let g = translate(parse_arg("g", g_src)?, &shift);
        let section = match section {
            Some((a, b)) => Some(SectionGerm::new(
                translate(parse_arg("a", a)?, &shift),
                translate(parse_arg("b", b)?, &shift),
            )),
            None => None,
        };
        let germ = CurveGerm::new(f.clone())?;
        let mut out = Map::new();
        out.insert("f".into(), json!(f.to_string()));
        out.insert("g".into(), json!(g.to_string()));
        out.insert("multiplicity".into(), json!(germ.multiplicity()));
        out.insert("admits_section".into(), json!(defo::admits_section(&f, &g)?));
        match section {
            Some(s) => {
                let algebraic = defo::is_equimultiple_along(&f, &g, &s)?;
                let direct = defo::is_equimultiple_along_direct(&f, &g, &s)?;
                if algebraic != direct {
                    return Err(Failure::Internal(format!(
                        "criterion says {algebraic}, direct check says {direct}"
                    )));
                }
                out.insert(
                    "residual".into(),
                    json!(defo::section_residual(&f, &g, &s).to_string()),
                );
                out.insert("equimultiple".into(), json!(algebraic));
            }
            None => {
                out.insert("solutions".into(), solutions_value(&defo::solve_sections(&f, &g)?));
            }
        }
        Ok(out)
    })();
    finish("deform", inputs, results)
}

pub fn sections(f_src: &str, g_src: &str, at: &Translation) -> Report {
    let mut inputs = Map::new();
    inputs.insert("f".into(), json!(f_src));
    inputs.insert("g".into(), json!(g_src));
    at.echo(&mut inputs);
    let results = (|| {
        let shift = at.resolve()?;
        let f = translate(parse_arg("f", f_src)?, &shift);
        let g = translate(parse_arg("g", g_src)?, &shift);
        let germ = CurveGerm::new(f.clone())?;
        let sol = defo::solve_sections(&f, &g)?;
        let mut out = Map::new();
        out.insert("f".into(), json!(f.to_string()));
        out.insert("g".into(), json!(g.to_string()));
        out.insert("multiplicity".into(), json!(germ.multiplicity()));
        out.insert("section_ambiguity".into(), json!(germ.section_ambiguity()));
        out.insert("admits_section".into(), json!(!sol.is_empty()));
        out.insert("solutions".into(), solutions_value(&sol));
        out.insert("higher_order_terms".into(), json!("free"));
        Ok(out)
    })();
    finish("sections", inputs, results)
}

pub fn p2(f_src: &str, degree: i64, at: &Translation) -> Report {
    let mut inputs = Map::new();
    inputs.insert("f".into(), json!(f_src));
    inputs.insert("degree".into(), json!(degree));
    at.echo(&mut inputs);
    let results = (|| {
        let shift = at.resolve()?;
        let f = translate(parse_arg("f", f_src)?, &shift);
        let curve = PlaneCurve::new(f.clone(), degree)?;
        let r = plane::verify_smooth_expected(&curve)?;
        let mut out = Map::new();
        out.insert("f".into(), json!(f.to_string()));
        out.insert("d".into(), json!(r.d));
        out.insert("m".into(), json!(r.m));
        out.insert("dim_l".into(), json!(r.dim_l));
        out.insert("unitangential".into(), json!(r.unitangential));
        out.insert("deg_z".into(), json!(r.deg_z));
        out.insert("h0_jz".into(), json!(r.h0_jz));
        out.insert("tangent_dim".into(), json!(r.tangent_dim));
        out.insert("expected_dim".into(), json!(r.expected_dim));
        out.insert("jacobian_rank".into(), json!(r.jacobian_rank));
        out.insert("smooth_of_expected".into(), json!(r.smooth_of_expected));
        if !r.smooth_of_expected {
            out.insert(
                "flag".into(),
                json!(format!(
                    "tangent dimension {} differs from expected dimension {} (unitangential germ)",
                    r.tangent_dim, r.expected_dim
                )),
            );
        }
        Ok(out)
    })();
    finish("p2", inputs, results)
}
