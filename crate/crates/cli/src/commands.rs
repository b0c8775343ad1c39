use clap::ValueEnum;
use num_complex::Complex64;
use serde_json::{json, Value};

use sl2char::chars::{
    character_of_pair, character_of_triple, construct_pair as build_pair,
    construct_triple as build_triple, Branch, CharacterF2, SixTraces,
};
use sl2char::covers::{ring_map, RingMap};
use sl2char::fricke::{
    fn_to_traces, h1z2_action, member_c02, member_c11, member_s03, member_s04, member_s11,
    member_s12, pants_curve_count, s04_residual, CharacterS04, CharacterS12, FnCoords, S04Verdict,
    S12Verdict,
};
use sl2char::mat2::{evaluate_word, Mat2};
use sl2char::scalar::format_complex;
use sl2char::tracepoly::{kappa_value, s12_relations, trace_poly as poly_of_word};
use sl2char::words::parse_word;

use crate::coords;
use crate::{CliError, Report};

const PAIR: [&str; 3] = ["x", "y", "z"];
const SIX: [&str; 6] = ["t1", "t2", "t3", "t12", "t13", "t23"];
const S04: [&str; 7] = ["a", "b", "c", "d", "x", "y", "z"];
const S12: [&str; 8] = ["a", "b", "u", "v", "w", "x", "y", "z"];
const PQR: [&str; 3] = ["p", "q", "r"];

#[derive(Clone, Copy, ValueEnum)]
pub enum Surface {
    S03,
    S11,
    S04,
    S12,
    C02,
    C11,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum MapName {
    C02s04,
    C11s12,
    Deck,
    Embed,
}

impl MapName {
    fn key(self) -> &'static str {
        match self {
            Self::C02s04 => "c02s04",
            Self::C11s12 => "c11s12",
            Self::Deck => "deck",
            Self::Embed => "embed",
        }
    }
}

fn matrix_text(m: &Mat2<Complex64>) -> String {
    let e = m.entries().map(format_complex);
    format!("[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
}

/// `key: value` lines from a flat JSON object.
fn json_lines(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        other => other.to_string(),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

pub fn trace_poly(word: &str, rank: usize) -> Result<Report, CliError> {
    let w = parse_word(word, rank)?;
    let p = poly_of_word(&w)?;
    Ok(Report {
        text: p.to_string(),
        json: json!({
            "word": w.to_string(),
            "rank": rank,
            "polynomial": p.to_string(),
            "terms": p.to_json(),
        }),
        ok: true,
    })
}

fn six_traces(v: &[Complex64]) -> SixTraces {
    SixTraces {
        t1: v[0],
        t2: v[1],
        t3: v[2],
        t12: v[3],
        t13: v[4],
        t23: v[5],
    }
}

fn generators(
    rank: usize,
    at: &str,
    branch: Branch,
) -> Result<(Vec<Mat2<Complex64>>, Vec<Complex64>), CliError> {
    if rank == 2 {
        let v = coords::complexes(at, &PAIR)?;
        let (a, b) = build_pair(&CharacterF2::new(v[0], v[1], v[2]));
        let ch = character_of_pair(&a, &b);
        Ok((vec![a, b], ch.as_array().to_vec()))
    } else {
        let v = coords::complexes(at, &SIX)?;
        let m = build_triple(&six_traces(&v), branch)?;
        let ch = character_of_triple(&m[0], &m[1], &m[2]);
        Ok((m.to_vec(), ch.coordinates().to_vec()))
    }
}

pub fn eval_word(word: &str, rank: usize, at: &str, branch: Branch) -> Result<Report, CliError> {
    let w = parse_word(word, rank)?;
    let (gens, character) = generators(rank, at, branch)?;
    let m = evaluate_word(&w, &gens)?;
    let by_matrix = m.trace();
    let by_poly = poly_of_word(&w)?.evaluate(&character);
    let diff = (by_matrix - by_poly).norm();
    Ok(Report {
        text: format!(
            "matrix: {}\ntrace: {}\npolynomial: {}\ndifference: {diff:e}\n",
            matrix_text(&m),
            format_complex(by_matrix),
            format_complex(by_poly)
        ),
        json: json!({
            "word": w.to_string(),
            "matrix": m.to_json(),
            "trace": format_complex(by_matrix),
            "polynomial_value": format_complex(by_poly),
            "difference": diff,
        }),
        ok: true,
    })
}

fn matrices_report(mats: &[Mat2<Complex64>], character: Value) -> Report {
    let names = ["X1", "X2", "X3"];
    let mut text = String::new();
    for (n, m) in names.iter().zip(mats) {
        text.push_str(&format!("{n} = {}\n", matrix_text(m)));
    }
    text.push_str(&json_lines(&character));
    Report {
        text,
        json: json!({
            "matrices": mats.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
            "character": character,
        }),
        ok: true,
    }
}

pub fn construct_pair(text: &str) -> Result<Report, CliError> {
    let v = coords::complexes(text, &PAIR)?;
    let (a, b) = build_pair(&CharacterF2::new(v[0], v[1], v[2]));
    let ch = character_of_pair(&a, &b);
    Ok(matrices_report(&[a, b], ch.to_json()))
}

pub fn construct_triple(text: &str, branch: Branch) -> Result<Report, CliError> {
    let v = coords::complexes(text, &SIX)?;
    let m = build_triple(&six_traces(&v), branch)?;
    let ch = character_of_triple(&m[0], &m[1], &m[2]);
    Ok(matrices_report(&m, ch.to_json()))
}

/// A verdict is an answer, not a failure: membership queries always exit 0.
fn verdict_report(mut value: Value, surface: &str) -> Report {
    value["surface"] = json!(surface);
    Report {
        text: json_lines(&value),
        json: value,
        ok: true,
    }
}

pub fn fricke_test(surface: Surface, text: &str, exact: bool) -> Result<Report, CliError> {
    let no_exact = |name: &str| {
        if exact {
            Err(CliError::Usage(format!(
                "--exact has no meaning for {name}: it has no defining relation"
            )))
        } else {
            Ok(())
        }
    };
    let report = match surface {
        Surface::S03 => {
            no_exact("s03")?;
            let v = coords::reals(text, &PAIR)?;
            let r = member_s03(v[0], v[1], v[2]);
            verdict_report(to_json(&r), "s03")
        }
        Surface::S11 => {
            no_exact("s11")?;
            let v = coords::reals(text, &PAIR)?;
            let r = member_s11(v[0], v[1], v[2]);
            verdict_report(to_json(&r), "s11")
        }
        Surface::C02 | Surface::C11 => {
            let name = if matches!(surface, Surface::C02) {
                "c02"
            } else {
                "c11"
            };
            no_exact(name)?;
            let v = coords::reals(text, &PQR)?;
            let member = if matches!(surface, Surface::C02) {
                member_c02(v[0], v[1], v[2])
            } else {
                member_c11(v[0], v[1], v[2])
            };
            let verdict = if member { "member" } else { "nonmember" };
            verdict_report(json!({ "verdict": verdict }), name)
        }
        Surface::S04 => {
            let v = coords::reals(text, &S04)?;
            let mut r = member_s04(&CharacterS04::from_values(v.try_into().expect("seven")));
            let mut value = to_json(&r);
            if exact {
                let q = coords::rationals(text, &S04)?;
                let res = s04_residual(&<[_; 7]>::try_from(q).expect("seven"));
                let on = res == sl2char::polyring::rat(0);
                if !on && r.verdict != S04Verdict::NonmemberRange {
                    r.verdict = S04Verdict::NonmemberOffVariety;
                }
                value = to_json(&r);
                value["exact_residual"] = json!(res.to_string());
            }
            verdict_report(value, "s04")
        }
        Surface::S12 => {
            let v = coords::reals(text, &S12)?;
            let mut r = member_s12(&CharacterS12::from_values(v.try_into().expect("eight")));
            let mut value = to_json(&r);
            if exact {
                let q = coords::rationals(text, &S12)?;
                let (r1, r2) = s12_relations();
                let (e1, e2) = (r1.evaluate(&q), r2.evaluate(&q));
                let zero = sl2char::polyring::rat(0);
                if (e1 != zero || e2 != zero) && r.verdict != S12Verdict::NonmemberOffVariety {
                    r.verdict = S12Verdict::NonmemberOffVariety;
                }
                value = to_json(&r);
                value["exact_residual_sum"] = json!(e1.to_string());
                value["exact_residual_product"] = json!(e2.to_string());
            }
            verdict_report(value, "s12")
        }
    };
    Ok(report)
}

pub fn fricke_signs(text: &str) -> Result<Report, CliError> {
    let v = coords::reals(text, &PAIR)?;
    let images = h1z2_action(v[0], v[1], v[2]);
    let text = images
        .iter()
        .map(|t| format!("({}, {}, {})\n", t[0], t[1], t[2]))
        .collect();
    Ok(Report {
        text,
        json: json!({ "images": images }),
        ok: true,
    })
}

pub fn pants(genus: i64, boundary: i64) -> Result<Report, CliError> {
    let n = pants_curve_count(genus, boundary)?;
    Ok(Report {
        text: n.to_string(),
        json: json!({ "genus": genus, "boundary": boundary, "curves": n }),
        ok: true,
    })
}

pub fn fn2trace(l: &str, tau: &str, b: &str) -> Result<Report, CliError> {
    let f = FnCoords::new(coords::real(l)?, coords::real(tau)?, coords::real(b)?)?;
    let (x, y, z) = fn_to_traces(&f);
    let value = json!({
        "x": x,
        "y": y,
        "z": z,
        "kappa": kappa_value(x, y, z),
        "expected_kappa": -2.0 * (f.b / 2.0).cosh(),
        "s11": to_json(&member_s11(x, y, z).verdict),
    });
    Ok(Report {
        text: json_lines(&value),
        json: value,
        ok: true,
    })
}

fn table(m: &RingMap) -> (String, Value) {
    let mut text = String::new();
    let mut obj = serde_json::Map::new();
    for (name, img) in m.source.names().iter().zip(&m.images) {
        text.push_str(&format!("{name} -> {img}\n"));
        obj.insert(name.clone(), json!(img.to_string()));
    }
    (text, Value::Object(obj))
}

pub fn cover_map(
    name: MapName,
    eval: Option<&str>,
    symbolic_check: bool,
) -> Result<Report, CliError> {
    let m = ring_map(name.key()).expect("every MapName is registered");
    let (mut text, images) = table(&m);
    let mut value = json!({
        "map": m.name,
        "source": m.source.names(),
        "target": m.target.names(),
        "images": images,
    });
    let mut ok = true;
    if let Some(at) = eval {
        let names: Vec<&str> = m.target.names().iter().map(String::as_str).collect();
        let v = coords::complexes(at, &names)?;
        let out = m.evaluate(&v)?;
        let mut obj = serde_json::Map::new();
        text.push_str("values:\n");
        for (n, val) in m.source.names().iter().zip(&out) {
            text.push_str(&format!("{n} = {}\n", format_complex(*val)));
            obj.insert(n.clone(), json!(format_complex(*val)));
        }
        value["values"] = Value::Object(obj);
    }
    if symbolic_check {
        let mut checks = serde_json::Map::new();
        text.push_str("relation images:\n");
        for (rel, img) in m.relation_images()? {
            text.push_str(&format!("{rel}: {img}\n"));
            ok &= img.is_zero();
            checks.insert(rel, json!(img.to_string()));
        }
        value["relation_images"] = Value::Object(checks);
        value["pass"] = json!(ok);
    }
    Ok(Report {
        text,
        json: value,
        ok,
    })
}
