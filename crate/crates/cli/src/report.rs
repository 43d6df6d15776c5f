//! Line-oriented text reports and their JSON twins.

use ratcubic::oracle::{
    compare, resultant_implicitize, verify_conic_composition, verify_vanishing_identity,
};
use ratcubic::scalar::sign;
use ratcubic::{
    analyze, ConicClass, ConicImplicit, ControlPolygon, EvalMode, ImplicitCubic, ImplicitResult,
    ParameterRoots, PhiSet, Piece, Point2, Scalar, SingularityReport,
};
use serde_json::{json, Value};

/// Report lines for one curve, plus the same content as JSON.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Block {
    pub lines: Vec<String>,
    pub json: serde_json::Map<String, Value>,
}

impl Block {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn set(&mut self, key: &str, v: Value) {
        self.json.insert(key.to_string(), v);
    }

    /// Appends a nested block indented one level.
    fn nest(&mut self, header: String, inner: Block) {
        self.lines.push(header);
        self.lines.extend(inner.lines.into_iter().map(|l| format!("  {l}")));
    }

    pub fn into_json(self) -> Value {
        Value::Object(self.json)
    }
}

pub fn tuple(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn strings(v: &[Scalar]) -> Value {
    json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn point_json(p: &Point2) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn interval(iv: &(Scalar, Scalar)) -> String {
    format!("[{}, {}]", iv.0, iv.1)
}

fn phi_lines(out: &mut Block, lambdas: &[Scalar], us: &[Scalar], ps: &PhiSet) {
    out.line(format!("lambda = {}", tuple(lambdas)));
    out.line(format!("u = {}", tuple(us)));
    let phi = [ps.phi1.clone(), ps.phi2.clone(), ps.phi3.clone()];
    let big = [ps.big_phi1.clone(), ps.big_phi2.clone(), ps.big_phi3.clone()];
    out.line(format!("phi = {}", tuple(&phi)));
    out.line(format!("Phi = {}", tuple(&big)));
    out.set("lambda", strings(lambdas));
    out.set("u", strings(us));
    out.set("phi", strings(&phi));
    out.set("big_phi", strings(&big));
}

fn cubic_block(ic: &ImplicitCubic) -> Block {
    let mut out = Block::default();
    let ps = PhiSet::new(&ic.profile());
    out.set("form", json!("cubic"));
    phi_lines(&mut out, &ic.lambdas, &ic.us, &ps);
    out.line(format!("b = {}", tuple(&ic.b)));
    out.set("b", strings(&ic.b));
    match &ic.normalized_b {
        Some(nb) => {
            out.line(format!("b / (U Lambda) = {}", tuple(nb)));
            out.set("normalized_b", strings(nb));
        }
        None => {
            out.line("b / (U Lambda) = undefined");
            out.set("normalized_b", Value::Null);
        }
    }
    let power = ic.expand_power_basis();
    out.line(format!("power = {power}"));
    out.set("power", strings(&power.coeffs));
    out
}

fn eta_text(c: &ConicClass) -> String {
    match &c.eta_sq_exact {
        Some(e) => e.to_string(),
        None => format!("{} (approx)", c.eta_sq),
    }
}

fn conic_block(p: &ControlPolygon, q: &ConicImplicit, c: &ConicClass) -> Block {
    let mut out = Block::default();
    let prof = p.profile();
    let ps = PhiSet::new(&prof);
    out.set("form", json!("conic"));
    phi_lines(&mut out, &prof.lambdas, &prof.us, &ps);
    let b = ratcubic::coefficients(&prof);
    out.line(format!("b = {}", tuple(&b)));
    out.set("b", strings(&b));
    out.line(format!("conic: {}, eta^2 = {}", c.class, eta_text(c)));
    out.line(format!("q2 = {}", q.power));
    match &c.c_star {
        Some(s) => out.line(format!("c* = {s}")),
        None => out.line("c* = at-infinity"),
    }
    out.set("class", json!(c.class.as_str()));
    out.set("eta4", json!(c.eta4.to_string()));
    out.set("eta_sq", json!(c.eta_sq));
    out.set(
        "eta_sq_exact",
        c.eta_sq_exact.as_ref().map_or(Value::Null, |e| json!(e.to_string())),
    );
    out.set("q2", strings(&q.power.coeffs));
    out.set("c_star", c.c_star.as_ref().map_or(Value::Null, point_json));
    out
}

fn net_line(p: &ControlPolygon) -> String {
    let pts: Vec<String> = p.points.iter().map(|q| q.to_string()).collect();
    format!("net = {}; weights = {}", pts.join(" "), tuple(&p.weights))
}

fn net_json(p: &ControlPolygon) -> Value {
    json!({
        "points": p.points.iter().map(point_json).collect::<Vec<_>>(),
        "weights": strings(&p.weights),
    })
}

fn piece_header(k: usize, piece: &Piece) -> String {
    let mut h = format!("piece {k}: t in {}, depth {}", interval(&piece.interval), piece.depth);
    if piece.basis_interval != piece.interval {
        h.push_str(&format!(", basis from {}", interval(&piece.basis_interval)));
    }
    h
}

fn piece_json(piece: &Piece, inner: Block) -> Value {
    let mut m = inner.json;
    m.insert("interval".into(), strings(&[piece.interval.0.clone(), piece.interval.1.clone()]));
    m.insert(
        "basis_interval".into(),
        strings(&[piece.basis_interval.0.clone(), piece.basis_interval.1.clone()]),
    );
    m.insert("depth".into(), json!(piece.depth));
    m.insert("net".into(), net_json(&piece.polygon));
    Value::Object(m)
}

type LeafFn<'a> = dyn Fn(&ImplicitResult, &ControlPolygon) -> Result<Block, ratcubic::Error> + 'a;

/// Renders each leaf with `f`, which also receives the net the leaf's form
/// was built from.
fn per_piece(p: &ControlPolygon, res: &ImplicitResult, f: &LeafFn) -> Result<Block, ratcubic::Error> {
    let ImplicitResult::Piecewise(pieces) = res else {
        return f(res, p);
    };
    let mut out = Block::default();
    out.set("form", json!("piecewise"));
    out.line(format!("piecewise: {} pieces", pieces.len()));
    let mut js = Vec::new();
    for (k, piece) in pieces.iter().enumerate() {
        let net = if piece.basis_interval == piece.interval {
            piece.polygon.clone()
        } else {
            p.reparametrize(&piece.basis_interval.0, &piece.basis_interval.1)?
        };
        let mut inner = f(&piece.result, &net)?;
        inner.lines.insert(0, net_line(&piece.polygon));
        js.push(piece_json(piece, inner.clone()));
        out.nest(piece_header(k, piece), inner);
    }
    out.set("pieces", Value::Array(js));
    Ok(out)
}

const LEAF: &str = "leaves are single forms";

pub fn implicitize_report(p: &ControlPolygon, res: &ImplicitResult) -> Result<Block, ratcubic::Error> {
    per_piece(p, res, &|r, net| {
        Ok(match r {
            ImplicitResult::Cubic(ic) => cubic_block(ic),
            ImplicitResult::Conic(q, c) => conic_block(net, q, c),
            ImplicitResult::Piecewise(_) => unreachable!("{LEAF}"),
        })
    })
}

fn roots_text(r: &ParameterRoots) -> (String, Value) {
    match r {
        ParameterRoots::Real(a, b) => (format!("t1 = {a}, t2 = {b}"), json!({"real": [a, b]})),
        ParameterRoots::Complex { re, im } => {
            (format!("t = {re} +- {im}i"), json!({"complex": {"re": re, "im": im}}))
        }
        ParameterRoots::Single(t) => (format!("t = {t} and infinity"), json!({"single": t})),
        ParameterRoots::NoFinite => ("none finite".to_string(), json!("none")),
    }
}

fn singularity_block(rep: &SingularityReport) -> Block {
    let mut out = Block::default();
    let dp = &rep.double_point;
    let place = match dp.location.point() {
        Some(s) => format!("s = {s}"),
        None => "location: at-infinity".to_string(),
    };
    out.line(format!(
        "kind: {}; unwanted: {}; {place}; parameter-at-infinity: {}",
        dp.kind, dp.unwanted, dp.parameter_at_infinity
    ));
    out.line(format!("phi1 phi2 = {}", rep.phi.phi_product()));
    out.line(format!("discriminant = {}", dp.discriminant));
    let (rt, rj) = roots_text(&dp.parameters);
    out.line(format!("parameters: {rt}"));
    let ends = match (rep.endpoint.at_c0, rep.endpoint.at_c3) {
        (false, false) => "none",
        (true, false) => "c0",
        (false, true) => "c3",
        (true, true) => "c0, c3",
    };
    out.line(format!("endpoint singularity: {ends}"));
    match &rep.split {
        Ok(s) => {
            out.line(format!("S1~ = {}", s.s1_tilde));
            out.line(format!("S2~ = {}", s.s2_tilde));
            out.set(
                "split",
                json!({
                    "s1_tilde": strings(&[s.s1_tilde.a.clone(), s.s1_tilde.b.clone(), s.s1_tilde.c.clone()]),
                    "s2_tilde": strings(&[s.s2_tilde.a.clone(), s.s2_tilde.b.clone(), s.s2_tilde.c.clone()]),
                }),
            );
        }
        Err(why) => {
            out.line(format!("split lines: omitted ({})", why.as_str()));
            out.set("split", json!({"omitted": why.as_str()}));
        }
    }
    out.set("form", json!("cubic"));
    out.set("kind", json!(dp.kind.as_str()));
    out.set("unwanted", json!(dp.unwanted));
    out.set(
        "location",
        dp.location.point().map_or(json!("at-infinity"), point_json),
    );
    out.set("parameter_at_infinity", json!(dp.parameter_at_infinity));
    out.set("phi_product", json!(rep.phi.phi_product().to_string()));
    out.set("discriminant", json!(dp.discriminant.to_string()));
    out.set("parameters", rj);
    out.set("endpoint_singularity", json!({"c0": rep.endpoint.at_c0, "c3": rep.endpoint.at_c3}));
    out
}

pub fn analyze_report(p: &ControlPolygon, res: &ImplicitResult) -> Result<Block, ratcubic::Error> {
    per_piece(p, res, &|r, net| match r {
        ImplicitResult::Cubic(_) => Ok(singularity_block(&analyze(net)?)),
        ImplicitResult::Conic(_, c) => {
            let mut out = Block::default();
            out.line(format!("conic: {}, eta^2 = {}; no double point", c.class, eta_text(c)));
            out.set("form", json!("conic"));
            out.set("class", json!(c.class.as_str()));
            Ok(out)
        }
        ImplicitResult::Piecewise(_) => unreachable!("{LEAF}"),
    })
}

pub fn eval_report(
    p: &ControlPolygon,
    res: &ImplicitResult,
    pt: &Point2,
    mode: EvalMode,
) -> Result<Block, ratcubic::Error> {
    per_piece(p, res, &|r, net| {
        let mut out = Block::default();
        let v = match r {
            ImplicitResult::Cubic(ic) => ic.eval(pt, mode),
            ImplicitResult::Conic(q, _) => q.eval(pt),
            ImplicitResult::Piecewise(_) => unreachable!("{LEAF}"),
        };
        out.line(format!("value = {v}; sign = {}", sign(&v)));
        out.set("value", json!(v.to_string()));
        out.set("sign", json!(sign(&v)));
        if let ImplicitResult::Cubic(_) = r {
            if let Some(s) = analyze(net)?.split_lines() {
                let (a, b) = s.quadrant(pt);
                out.line(format!("split signs: S1~ = {a}, S2~ = {b}"));
                out.set("split_signs", json!([a, b]));
            }
        }
        Ok(out)
    })
}

/// Oracle cross-checks for every leaf; a mismatch is reported, not raised.
pub fn verify_report(p: &ControlPolygon, res: &ImplicitResult) -> Result<Block, ratcubic::Error> {
    per_piece(p, res, &|r, net| {
        let mut out = Block::default();
        let power = match r {
            ImplicitResult::Cubic(ic) => ic.expand_power_basis(),
            ImplicitResult::Conic(q, _) => q.power.to_cubic(),
            ImplicitResult::Piecewise(_) => unreachable!("{LEAF}"),
        };
        match resultant_implicitize(net) {
            Ok(reference) => {
                let v = compare(&power, &reference);
                match (&v.scale, &v.residual) {
                    (Some(k), _) => out.line(format!("verify: resultant agrees, scale = {k}")),
                    (None, Some(why)) => out.line(format!("verify: resultant disagrees, {why}")),
                    (None, None) => out.line("verify: resultant disagrees"),
                }
                out.set(
                    "resultant",
                    json!({
                        "matched": v.matched,
                        "scale": v.scale.as_ref().map(|k| k.to_string()),
                        "residual": v.residual,
                    }),
                );
            }
            Err(e) => {
                out.line(format!("verify: resultant unavailable, {e}"));
                out.set("resultant", json!({"matched": false, "error": e.to_string()}));
            }
        }
        if let ImplicitResult::Cubic(_) = r {
            let ok = verify_vanishing_identity(net);
            out.line(format!("verify: vanishing identity {}", if ok { "holds" } else { "fails" }));
            out.set("vanishing_identity", json!(ok));
        }
        let ok = verify_conic_composition(net);
        out.line(format!("verify: conic composition {}", if ok { "holds" } else { "fails" }));
        out.set("conic_composition", json!(ok));
        Ok(out)
    })
}
