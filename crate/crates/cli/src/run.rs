use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use keller_core::diophantine::{
    cor1_sum_of_squares, curve_cf, curve_cfm, line_preimage, nonzero_point_exists_with, search_box_threaded,
    EquationSystem, Verdict,
};
use keller_core::elim::target_vars;
use keller_core::expr_io::{parse_polynomial, MapFile, SystemFile};
use keller_core::fibers::{
    assertion3_feasible, bifurcation_data_with, hurwitz_genus, sigma_from_data, BifurcationOptions, ComponentData,
    Line,
};
use keller_core::keller::{as_cubic_linear, default_degree_cap, formal_inverse, is_keller, jacobian_det};
use keller_core::lattice::{map_primitive_pair, sl_complete, PrimitiveVector, UnimodularMatrix};
use keller_core::polyring::{PolyMap, Polynomial, Rational};
use keller_core::transforms::{
    clear_denominators, conjugate_by_linear, cor1_extension, extend_variables, scale_conjugate, theorem_b_diagonal,
    translate_to_origin, DiagonalTransform,
};

use crate::args::{Cli, Command, CurveKind, TransformOp};

#[derive(Debug)]
pub enum CliError {
    Core(keller_core::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<keller_core::Error> for CliError {
    fn from(e: keller_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub fn exit_status(e: &CliError) -> u8 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Core(keller_core::Error::BudgetExceeded(_)) => 3,
        _ => 1,
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub struct Output {
    pub text: String,
    pub json: Value,
    pub status: u8,
}

struct Ctx {
    hasher: Sha256,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> CliResult<String> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        self.hasher.update(text.as_bytes());
        self.hasher.update([0u8]);
        Ok(text)
    }

    fn map(&mut self, path: &Path) -> CliResult<PolyMap> {
        let text = self.read(path)?;
        Ok(MapFile::parse(&text)?.to_map()?)
    }

    fn system(&mut self, path: &Path) -> CliResult<EquationSystem> {
        let text = self.read(path)?;
        Ok(EquationSystem::new(SystemFile::parse(&text)?.to_polynomials()?)?)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn rationals(s: &str) -> CliResult<Vec<Rational>> {
    s.split(',')
        .map(|c| c.trim().parse::<Rational>().map_err(|_| usage(format!("`{c}` is not a rational number"))))
        .collect()
}

fn integers(s: &str) -> CliResult<Vec<BigInt>> {
    s.split(',')
        .map(|c| c.trim().parse::<BigInt>().map_err(|_| usage(format!("`{c}` is not an integer"))))
        .collect()
}

fn rational_matrix(s: &str) -> CliResult<Vec<Vec<Rational>>> {
    s.split(';').map(rationals).collect()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::to_string).collect()
}

fn point_string(p: &[BigInt]) -> String {
    p.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" ")
}

fn matrix_json(m: &UnimodularMatrix) -> Value {
    json!(m.entries().iter().map(|r| r.iter().map(BigInt::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit_text(out: &Option<PathBuf>, text: String) -> CliResult<String> {
    match out {
        Some(p) => {
            fs::write(p, &text).map_err(|e| CliError::Io(p.clone(), e))?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(text),
    }
}

pub fn execute(cli: Cli) -> CliResult<Output> {
    let mut ctx = Ctx { hasher: Sha256::new() };
    for a in std::env::args().skip(1) {
        ctx.hasher.update(a.as_bytes());
        ctx.hasher.update([0u8]);
    }
    let (verb, text, results, status) = dispatch(cli.command, &mut ctx)?;
    let digest = hex::encode(ctx.hasher.finalize());
    Ok(Output { text, json: json!({ "verb": verb, "inputs_sha256": digest, "results": results }), status })
}

fn dispatch(command: Command, ctx: &mut Ctx) -> CliResult<(&'static str, String, Value, u8)> {
    match command {
        Command::Check { map, degree_cap, show_inverse } => {
            let f = ctx.map(&map)?;
            let keller = is_keller(&f)?;
            let jac = jacobian_det(&f)?;
            let cubic = as_cubic_linear(&f);
            let cap = degree_cap.unwrap_or_else(|| default_degree_cap(f.len()));
            let (inv_text, inv_json, inverse) = match formal_inverse(&f, cap) {
                Ok(inv) if inv.exact => {
                    let d = inv.map.degree();
                    (format!("exact (degree {d})"), json!({ "exact": true, "degree": d, "degree_cap": cap }), Some(inv))
                }
                Ok(inv) => (
                    format!("not invertible within degree cap {cap}"),
                    json!({ "exact": false, "degree_cap": cap }),
                    Some(inv),
                ),
                Err(e) => (format!("unavailable ({e})"), json!({ "exact": false, "unavailable": e.to_string() }), None),
            };
            let cubic_text = match &cubic {
                Ok(c) if c.is_integral() => "yes".to_string(),
                Ok(_) => "yes (rational rows)".to_string(),
                Err(_) => "no".to_string(),
            };
            let mut text = format!("keller: {}, cubic-linear: {}, inverse: {}\n", yes(keller), cubic_text, inv_text);
            if let (true, Some(inv)) = (show_inverse, &inverse) {
                for (i, g) in inv.map.components().iter().enumerate() {
                    text.push_str(&format!("G{} = {}\n", i + 1, g));
                }
            }
            let mut inv_json = inv_json;
            if let Some(inv) = &inverse {
                inv_json["map"] = json!(strings(inv.map.components()));
            }
            let cubic_json = match &cubic {
                Ok(c) => json!({
                    "recognized": true,
                    "integral": c.is_integral(),
                    "rows": c.rows().iter().map(|r| r.iter().map(|a| a.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                }),
                Err(e) => json!({ "recognized": false, "component": e.component, "reason": e.reason }),
            };
            let results = json!({
                "keller": keller,
                "jacobian": jac.to_string(),
                "cubic_linear": cubic_json,
                "inverse": inv_json,
            });
            Ok(("check", text, results, 0))
        }
        Command::Bifurcation { map, no_fiber_degree, seed } => {
            let f = ctx.map(&map)?;
            let opts = BifurcationOptions { fiber_degree: !no_fiber_degree, seed, ..Default::default() };
            let d = bifurcation_data_with(&f, &opts)?;
            let mut text = String::new();
            for (i, h) in d.h.iter().enumerate() {
                text.push_str(&format!("h{} = {}\n", i + 1, h));
            }
            for (i, a) in d.a.iter().enumerate() {
                text.push_str(&format!("a{} = {}\n", i + 1, a));
            }
            text.push_str(&format!("H = {}\n", d.big_h));
            let cone = d.cone_form.as_ref().map(Polynomial::to_string);
            text.push_str(&format!("cone = {}\n", cone.as_deref().unwrap_or("none")));
            if let Some(df) = d.fiber_degree {
                text.push_str(&format!("d_F = {df}\n"));
            }
            let results = json!({
                "h": strings(&d.h),
                "a": strings(&d.a),
                "H": d.big_h.to_string(),
                "cone": cone,
                "fiber_degree": d.fiber_degree,
            });
            Ok(("bifurcation", text, results, 0))
        }
        Command::Sigma { map, component, eval } => {
            let f = ctx.map(&map)?;
            let n = f.len();
            let ys = target_vars(n);
            let mut comps = Vec::new();
            for c in &component {
                let parts = c
                    .split(';')
                    .map(|p| parse_polynomial(p.trim(), &ys).map_err(keller_core::Error::from))
                    .collect::<Result<Vec<_>, _>>()?;
                let (h_w, g_list) = parts.split_first().ok_or_else(|| usage("empty --component"))?;
                comps.push(ComponentData { h_w: h_w.clone(), g_list: g_list.to_vec() });
            }
            let opts = BifurcationOptions { fiber_degree: false, ..Default::default() };
            let data = bifurcation_data_with(&f, &opts)?;
            let s = sigma_from_data(&data, &comps)?;
            let mut text = format!("sigma = {s}\n");
            let mut results = json!({ "sigma": s.to_string() });
            if let Some(e) = eval {
                let point = rationals(&e)?;
                if point.len() != 2 * n {
                    return Err(usage(format!("--eval needs {} values (u then v), got {}", 2 * n, point.len())));
                }
                let value = s.eval(&point)?;
                text.push_str(&format!("sigma(u, v) = {value}\n"));
                results["value"] = json!(value.to_string());
            }
            Ok(("sigma", text, results, 0))
        }
        Command::Transform(t) => {
            let (name, result) = match &t.op {
                TransformOp::Scale { map, r } => {
                    let f = ctx.map(map)?;
                    let r = rationals(r)?;
                    let [r] = r.as_slice() else { return Err(usage("--r takes one rational")) };
                    ("scale", scale_conjugate(&f, r)?)
                }
                TransformOp::Extend { map, m } => ("extend", extend_variables(&ctx.map(map)?, *m)?),
                TransformOp::Conjugate { map, matrix } => {
                    ("conjugate", conjugate_by_linear(&ctx.map(map)?, &rational_matrix(matrix)?)?)
                }
                TransformOp::Translate { map, point } => {
                    ("translate", translate_to_origin(&ctx.map(map)?, &rationals(point)?)?)
                }
                TransformOp::TheoremB { map, weights } => {
                    let form = cubic_form(&ctx.map(map)?)?;
                    let t = DiagonalTransform::new(integers(weights)?)?;
                    ("theoremB", theorem_b_diagonal(&form, &t)?.to_map())
                }
                TransformOp::Cor1 { map } => ("cor1", cor1_extension(&cubic_form(&ctx.map(map)?)?)?.to_map()),
                TransformOp::ClearDenominators { map } => {
                    let (s, form) = clear_denominators(&cubic_form(&ctx.map(map)?)?)?;
                    let file = MapFile::from_map(&form.to_map()).with_metadata("scale", &s.to_string());
                    let results = json!({ "op": "clear-denominators", "scale": s.to_string(), "map": file.render() });
                    return Ok(("transform", emit_text(&t.out, file.render())?, results, 0));
                }
            };
            let file = MapFile::from_map(&result).with_metadata("transform", name);
            let results = json!({ "op": name, "variables": result.vars().to_vec(), "components": strings(result.components()) });
            Ok(("transform", emit_text(&t.out, file.render())?, results, 0))
        }
        Command::SlComplete { vector } => {
            let v = PrimitiveVector::new(integers(&vector)?)?;
            let a = sl_complete(&v)?;
            Ok(("sl-complete", a.to_string(), json!({ "matrix": matrix_json(&a) }), 0))
        }
        Command::SlMap { from, to } => {
            let v = PrimitiveVector::new(integers(&from)?)?;
            let w = PrimitiveVector::new(integers(&to)?)?;
            let a = map_primitive_pair(&v, &w)?;
            Ok(("sl-map", a.to_string(), json!({ "matrix": matrix_json(&a) }), 0))
        }
        Command::Curve { kind, map, m, u, v, out } => {
            let f = ctx.map(&map)?;
            let (label, eqs) = match kind {
                CurveKind::Cf => ("cf", curve_cf(&f)?.equations().to_vec()),
                CurveKind::Cfm => ("cfm", curve_cfm(&f, m)?.equations().to_vec()),
                CurveKind::Line => {
                    let u = u.ok_or_else(|| usage("`curve line` needs --u"))?;
                    let v = v.ok_or_else(|| usage("`curve line` needs --v"))?;
                    let line = Line::new(rationals(&u)?, rationals(&v)?)?;
                    ("line", line_preimage(&f, &line)?.equations().to_vec())
                }
                CurveKind::Sos => ("sos", vec![cor1_sum_of_squares(&f)?]),
            };
            let file = SystemFile::from_polynomials(&eqs)?.with_metadata("curve", label);
            let results = json!({ "kind": label, "variables": f.vars().to_vec(), "equations": strings(&eqs) });
            Ok(("curve", emit_text(&out, file.render())?, results, 0))
        }
        Command::Search { system, radius, budget, threads, nonzero } => {
            let sys = ctx.system(&system)?;
            if threads == 0 {
                return Err(usage("--threads must be at least 1"));
            }
            if nonzero {
                let verdict = nonzero_point_exists_with(&sys, radius, budget, threads);
                let status = if verdict == Verdict::BudgetExceeded { 3 } else { 0 };
                let results = match &verdict {
                    Verdict::Found(p) => json!({ "verdict": "found", "point": p.iter().map(BigInt::to_string).collect::<Vec<_>>() }),
                    Verdict::NoneInBox(b) => json!({ "verdict": "none_in_box", "radius": b, "message": verdict.to_string() }),
                    Verdict::BudgetExceeded => json!({ "verdict": "budget_exceeded" }),
                };
                return Ok(("search", format!("{verdict}\n"), results, status));
            }
            let report = search_box_threaded(&sys, radius, budget, threads);
            let results = json!({
                "radius": report.radius,
                "points": report.points.iter().map(|p| point_string(p)).collect::<Vec<_>>(),
                "exhausted": report.exhausted,
                "nodes": report.nodes_visited,
            });
            let status = if report.exhausted { 0 } else { 3 };
            Ok(("search", report.to_text(), results, status))
        }
        Command::Hurwitz { d, branches, genus } => {
            let degrees = branches
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| usage(format!("`{c}` is not a local degree"))))
                .collect::<CliResult<Vec<_>>>()?;
            let g = genus.as_deref().map(rationals).transpose()?;
            let g = match g.as_deref() {
                None => None,
                Some([g]) => Some(g.clone()),
                Some(_) => return Err(usage("--genus takes one rational")),
            };
            let computed = hurwitz_genus(d, &degrees)?;
            let f = assertion3_feasible(d, &degrees, g.as_ref())?;
            let verdict = if f.feasible { "feasible" } else { "infeasible" };
            let text = format!("genus: {computed}\n{verdict}: {}\n", f.reason);
            let results = json!({ "genus": computed.to_string(), "feasible": f.feasible, "reason": f.reason });
            Ok(("hurwitz", text, results, if f.feasible { 0 } else { 1 }))
        }
    }
}

fn cubic_form(f: &PolyMap) -> CliResult<keller_core::keller::CubicLinearForm> {
    as_cubic_linear(f).map_err(|e| CliError::Core(keller_core::Error::InvalidArgument(e.to_string())))
}
