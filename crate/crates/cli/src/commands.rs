//! Value commands: evaluate expressions and print one result.

use qiso_expr::{mentions_uq, parse, Env, Expr};
use qiso_ncalg::NCPoly;
use qiso_podles::label;
use qiso_scalars::{Coeff, Scalar};
use qiso_somu3::{Coefficients, So3Generators};
use serde_json::json;

use crate::error::CliError;
use crate::suites::Workbench;

const SPHERE_NAMES: [&str; 5] = ["A", "B", "x-1", "x0", "x1"];
const SO3_NAMES: [&str; 5] = ["N", "M", "C", "G", "L"];
const TS_NAMES: [&str; 8] = ["T1", "T2", "T3", "T4", "S1", "S2", "S3", "S4"];

/// A printed result: its text form and its JSON form.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
}

impl Output {
    fn value(input: &str, algebra: &str, value: String) -> Self {
        Output { text: value.clone(), json: json!({ "input": input, "algebra": algebra, "value": value }) }
    }
}

/// Which algebra an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    Su2,
    Uq,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Su2 => "su2",
            Tag::Uq => "uq",
        }
    }
}

pub fn infer(e: &Expr) -> Tag {
    if mentions_uq(e) {
        Tag::Uq
    } else {
        Tag::Su2
    }
}

/// Evaluate in the given algebra. Sphere, SO_μ(3) and T/S names are bound
/// only when the expression uses them.
pub fn eval(wb: &Workbench, e: &Expr, tag: Tag) -> Result<NCPoly<Scalar>, CliError> {
    let qg = wb.qg()?;
    if tag == Tag::Uq {
        return Ok(Env::new(&qg.uq, &qg.params).eval(e)?);
    }
    let ids = e.identifiers();
    let uses = |names: &[&str]| ids.iter().any(|i| names.contains(i));
    let mut env = Env::new(&qg.su2, &qg.params);
    if uses(&SPHERE_NAMES) {
        let s = wb.sphere()?;
        env.bind("A", s.a.clone()).bind("B", s.b.clone()).bind("x-1", s.xm1.clone()).bind("x0", s.x0.clone()).bind("x1", s.x1.clone());
    }
    if uses(&SO3_NAMES) {
        let g = So3Generators::new(qg);
        for n in SO3_NAMES {
            env.bind(n, g.named(n).expect("generator").clone());
        }
    }
    if uses(&TS_NAMES) {
        env = env.with(Coefficients::extract(wb.sphere()?)?.bindings());
    }
    Ok(env.eval(e)?)
}

fn parse_in(wb: &Workbench, src: &str, want: Option<Tag>) -> Result<(NCPoly<Scalar>, Tag), CliError> {
    let e = parse(src)?;
    let tag = infer(&e);
    if let Some(w) = want {
        if w != tag {
            return Err(CliError::Usage(format!("{src:?} is not an element of {}", w.name())));
        }
    }
    Ok((eval(wb, &e, tag)?, tag))
}

pub fn normalize(wb: &Workbench, src: &str) -> Result<Output, CliError> {
    let (x, tag) = parse_in(wb, src, None)?;
    Ok(Output::value(src, tag.name(), x.render()))
}

pub fn coproduct(wb: &Workbench, src: &str) -> Result<Output, CliError> {
    let (x, tag) = parse_in(wb, src, None)?;
    Ok(Output::value(src, tag.name(), wb.qg()?.coproduct(&x)?.render()))
}

pub fn counit(wb: &Workbench, src: &str) -> Result<Output, CliError> {
    let (x, tag) = parse_in(wb, src, None)?;
    Ok(Output::value(src, tag.name(), wb.qg()?.counit(&x)?.render()))
}

pub fn antipode(wb: &Workbench, src: &str) -> Result<Output, CliError> {
    let (x, tag) = parse_in(wb, src, None)?;
    Ok(Output::value(src, tag.name(), wb.qg()?.antipode(&x)?.render()))
}

pub fn haar(wb: &Workbench, src: &str) -> Result<Output, CliError> {
    let (x, tag) = parse_in(wb, src, Some(Tag::Su2))?;
    Ok(Output::value(src, tag.name(), wb.qg()?.haar(&x)?.render()))
}

pub fn pair(wb: &Workbench, f: &str, x: &str) -> Result<Output, CliError> {
    let (fp, _) = parse_in(wb, f, Some(Tag::Uq))?;
    let (xp, _) = parse_in(wb, x, Some(Tag::Su2))?;
    let v = wb.qg()?.pair(&fp, &xp)?.render();
    Ok(Output { text: v.clone(), json: json!({ "f": f, "x": x, "value": v }) })
}

pub fn act(wb: &Workbench, f: &str, x: &str, right: bool) -> Result<Output, CliError> {
    let (fp, _) = parse_in(wb, f, Some(Tag::Uq))?;
    let (xp, _) = parse_in(wb, x, Some(Tag::Su2))?;
    let qg = wb.qg()?;
    let v = if right { qg.act_right(&xp, &fp)? } else { qg.act_left(&fp, &xp)? }.render();
    Ok(Output { text: v.clone(), json: json!({ "f": f, "x": x, "side": if right { "right" } else { "left" }, "value": v }) })
}

pub fn basis(wb: &Workbench, l2: i32) -> Result<Output, CliError> {
    let b = wb.spectral()?.build_level(l2)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for v in &b.vectors {
        text.push_str(&format!("{} = {}\n  <v, v> = {}\n", v.key, v.payload.render(), v.norm2.render()));
        rows.push(json!({ "l2": v.key.l2, "m2": v.key.m2, "n2": v.key.n2, "vector": v.payload.render(), "norm2": v.norm2.render() }));
    }
    Ok(Output { text: text.trim_end().to_string(), json: json!({ "l2": l2, "vectors": rows }) })
}

pub fn gram(wb: &Workbench, l2: i32) -> Result<Output, CliError> {
    let b = wb.spectral()?.build_level(l2)?;
    let keys = b.keys();
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, row) in b.gram.iter().enumerate() {
        for (j, g) in row.iter().enumerate() {
            if !g.is_zero_coeff() {
                text.push_str(&format!("<{}, {}> = {}\n", keys[i], keys[j], g.render()));
                rows.push(json!({ "i": i, "j": j, "value": g.render() }));
            }
        }
    }
    Ok(Output { text: text.trim_end().to_string(), json: json!({ "l2": l2, "entries": rows }) })
}

pub fn corep(wb: &Workbench, l2: i32) -> Result<Output, CliError> {
    let c = wb.spectral()?.coaction_block(l2)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (a, row) in c.q.iter().enumerate() {
        for (i, q) in row.iter().enumerate() {
            if !q.is_zero() {
                text.push_str(&format!("Q[{}; {}] = {}\n", c.keys[a], c.keys[i], q.render()));
                rows.push(json!({ "a": a, "i": i, "value": q.render() }));
            }
        }
    }
    Ok(Output { text: text.trim_end().to_string(), json: json!({ "l2": l2, "entries": rows }) })
}

pub fn extract(wb: &Workbench, what: &str) -> Result<Output, CliError> {
    if what != "ts" {
        return Err(CliError::Usage(format!("extract knows only `ts`, got {what:?}")));
    }
    let s = wb.sphere()?;
    let co = Coefficients::extract(s)?;
    let basis: Vec<String> = [(0, 0), (1, 0), (0, 1), (0, -1)].iter().map(|&(k, l)| label(k, l)).collect();
    let mut text = format!("Delta(A), Delta(B) over {{{}}}\n", basis.join(", "));
    let mut obj = serde_json::Map::new();
    for (name, p) in co.iter() {
        text.push_str(&format!("{name} = {}\n", p.render()));
        obj.insert(name.to_string(), json!(p.render()));
    }
    Ok(Output { text: text.trim_end().to_string(), json: serde_json::Value::Object(obj) })
}
