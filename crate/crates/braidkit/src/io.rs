//! JSON presentation files.
//!
//! ```json
//! {"name": "...",
//!  "generators": [{"id": "k", "mu": 1, "nu": 1, "star": "kstar", "inverse": "k_inv"}],
//!  "relations": [{"lhs": ["e", "k"], "rhs": [{"coeff": SCALAR, "word": ["k", "e"]}]}],
//!  "coproduct": {"k": [{"coeff": SCALAR, "words": [["k"], ["k"]]}]},
//!  "counit": {"k": SCALAR},
//!  "antipode": {"k": [{"coeff": SCALAR, "word": ["k_inv"]}]},
//!  "parameters": ["lam", "rho"]}
//! ```
//!
//! A SCALAR is `{"num": [[coeff, exps], ...], "den": [...]}` with `exps` the
//! exponents of (s, u, w, p0, …, p7) and `coeff` a rational string such as
//! `"-3/2"` or a pair `["re", "im"]`. Optional generator field `weight` and
//! top-level fields `braided`, `star_structure` default to 1, true, true.

use std::collections::BTreeSet;
use std::path::Path;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use braidkit_core::ncpoly::{Alphabet, Gen, GeneratorInfo, NCPoly, Word};
use braidkit_core::presentations::{Presentation, PresentationError};
use braidkit_core::scalars::{GaussRat, Mono, Scalar, NVARS};
use braidkit_core::tensor::TensorPoly;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<PresentationError> for IoError {
    fn from(e: PresentationError) -> IoError {
        match e {
            PresentationError::Schema(s) => IoError::Schema(s),
            other => IoError::Validation(other.to_string()),
        }
    }
}

fn schema<T>(msg: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Schema(msg.into()))
}

fn rat_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn coeff_json(c: &GaussRat) -> Value {
    if c.im.is_zero() {
        json!(rat_str(&c.re))
    } else {
        json!([rat_str(&c.re), rat_str(&c.im)])
    }
}

fn parse_rat(v: &Value) -> Result<BigRational, IoError> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(BigRational::from_integer(i.into())),
            None => schema(format!("non-integer number {n}; write rationals as strings")),
        },
        Value::String(s) => {
            let (n, d) = s.split_once('/').unwrap_or((s, "1"));
            let n: BigInt = n.trim().parse().or_else(|_| schema(format!("bad rational {s:?}")))?;
            let d: BigInt = d.trim().parse().or_else(|_| schema(format!("bad rational {s:?}")))?;
            if d.is_zero() {
                return schema(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(n, d))
        }
        _ => schema(format!("expected a rational, found {v}")),
    }
}

fn parse_coeff(v: &Value) -> Result<GaussRat, IoError> {
    match v {
        Value::Array(a) if a.len() == 2 => Ok(Complex::new(parse_rat(&a[0])?, parse_rat(&a[1])?)),
        _ => Ok(Complex::new(parse_rat(v)?, BigRational::zero())),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    let terms = |p: &braidkit_core::scalars::Poly| -> Value {
        Value::Array(p.terms().map(|(m, c)| json!([coeff_json(c), m.0.to_vec()])).collect())
    };
    json!({"num": terms(s.num()), "den": terms(s.den())})
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar, IoError> {
    let terms = |key: &str| -> Result<Vec<(Mono, GaussRat)>, IoError> {
        let Some(Value::Array(ts)) = v.get(key) else {
            return schema(format!("scalar without {key:?} array"));
        };
        ts.iter()
            .map(|t| {
                let (Some(c), Some(Value::Array(ex))) = (t.get(0), t.get(1)) else {
                    return schema("scalar term must be [coeff, exps]");
                };
                if ex.len() != NVARS {
                    return schema(format!("exponent tuple must have {NVARS} entries"));
                }
                let mut m = Mono::one();
                for (i, e) in ex.iter().enumerate() {
                    m.0[i] = e.as_i64().and_then(|x| i32::try_from(x).ok()).map_or_else(|| schema("exponent must be an integer"), Ok)?;
                }
                Ok((m, parse_coeff(c)?))
            })
            .collect()
    };
    Scalar::from_terms(&terms("num")?, &terms("den")?).or_else(|e| schema(format!("scalar: {e}")))
}

fn word_json(al: &Alphabet, w: &Word) -> Value {
    Value::Array(w.gens().iter().map(|&g| json!(al.gen(g).id)).collect())
}

fn poly_json(al: &Alphabet, p: &NCPoly) -> Value {
    Value::Array(p.terms().map(|(w, c)| json!({"coeff": scalar_to_json(c), "word": word_json(al, w)})).collect())
}

fn parse_word(al: &Alphabet, v: &Value) -> Result<Word, IoError> {
    let Value::Array(ids) = v else { return schema("a word is an array of generator ids") };
    let gens = ids
        .iter()
        .map(|x| {
            let id = x.as_str().map_or_else(|| schema("generator ids are strings"), Ok)?;
            al.index(id).map_or_else(|| schema(format!("unknown generator {id:?}")), Ok)
        })
        .collect::<Result<Vec<Gen>, IoError>>()?;
    Ok(al.word(&gens))
}

fn parse_poly(al: &Alphabet, v: &Value) -> Result<NCPoly, IoError> {
    let Value::Array(ts) = v else { return schema("a polynomial is an array of terms") };
    let mut p = NCPoly::zero();
    for t in ts {
        let (Some(c), Some(w)) = (t.get("coeff"), t.get("word")) else {
            return schema("polynomial term needs \"coeff\" and \"word\"");
        };
        p = p.add(&NCPoly::term(parse_word(al, w)?, scalar_from_json(c)?));
    }
    Ok(p)
}

pub fn presentation_to_json(p: &Presentation) -> Value {
    let al = &p.alphabet;
    let gens: Vec<Value> = al
        .gens
        .iter()
        .map(|g| {
            let mut o = Map::new();
            o.insert("id".into(), json!(g.id));
            o.insert("mu".into(), json!(g.mu));
            o.insert("nu".into(), json!(g.nu));
            o.insert("star".into(), json!(al.gen(g.star).id));
            if let Some(i) = g.inverse {
                o.insert("inverse".into(), json!(al.gen(i).id));
            }
            if g.weight != 1 {
                o.insert("weight".into(), json!(g.weight));
            }
            Value::Object(o)
        })
        .collect();
    let rels: Vec<Value> = p
        .rules
        .rules()
        .iter()
        .map(|r| json!({"lhs": word_json(al, &r.lhs), "rhs": poly_json(al, &r.rhs)}))
        .collect();
    let per_gen = |f: &dyn Fn(usize) -> Value| -> Value {
        Value::Object(al.gens.iter().enumerate().map(|(i, g)| (g.id.clone(), f(i))).collect())
    };
    let mut doc = Map::new();
    doc.insert("name".into(), json!(p.name));
    doc.insert("generators".into(), Value::Array(gens));
    doc.insert("relations".into(), Value::Array(rels));
    if let Some(cop) = &p.coproduct {
        doc.insert(
            "coproduct".into(),
            per_gen(&|i| {
                Value::Array(
                    cop[i]
                        .terms()
                        .map(|(ws, c)| {
                            json!({"coeff": scalar_to_json(c), "words": ws.iter().map(|w| word_json(al, w)).collect::<Vec<_>>()})
                        })
                        .collect(),
                )
            }),
        );
    }
    if let Some(eps) = &p.counit {
        doc.insert("counit".into(), per_gen(&|i| scalar_to_json(&eps[i])));
    }
    if let Some(s) = &p.antipode {
        doc.insert("antipode".into(), per_gen(&|i| poly_json(al, &s[i])));
    }
    doc.insert("parameters".into(), json!(p.params));
    if !p.braided {
        doc.insert("braided".into(), json!(false));
    }
    if !p.has_star {
        doc.insert("star_structure".into(), json!(false));
    }
    Value::Object(doc)
}

fn get_i32(o: &Value, key: &str, ctx: &str) -> Result<i32, IoError> {
    o.get(key)
        .and_then(Value::as_i64)
        .and_then(|x| i32::try_from(x).ok())
        .map_or_else(|| schema(format!("{ctx}: missing integer {key:?}")), Ok)
}

fn get_str<'a>(o: &'a Value, key: &str, ctx: &str) -> Result<&'a str, IoError> {
    o.get(key).and_then(Value::as_str).map_or_else(|| schema(format!("{ctx}: missing string {key:?}")), Ok)
}

fn parse_alphabet(doc: &Value) -> Result<Alphabet, IoError> {
    let Some(Value::Array(gs)) = doc.get("generators") else { return schema("missing \"generators\" array") };
    let ids: Vec<&str> = gs.iter().map(|g| get_str(g, "id", "generator")).collect::<Result<_, _>>()?;
    if ids.iter().collect::<BTreeSet<_>>().len() != ids.len() {
        return schema("duplicate generator id");
    }
    if ids.len() > Gen::MAX as usize {
        return schema("too many generators");
    }
    let find = |id: &str, what: &str, of: &str| -> Result<Gen, IoError> {
        ids.iter().position(|x| *x == id).map(|i| i as Gen).map_or_else(|| schema(format!("{what} {id:?} of {of:?} is not a generator")), Ok)
    };
    let mut out = Vec::new();
    for (g, id) in gs.iter().zip(&ids) {
        let star = find(get_str(g, "star", id)?, "star partner", id)?;
        let inverse = match g.get("inverse") {
            None | Some(Value::Null) => None,
            Some(v) => Some(find(v.as_str().map_or_else(|| schema("inverse must be a string"), Ok)?, "inverse", id)?),
        };
        let weight = match g.get("weight") {
            None => 1,
            Some(v) => v.as_u64().and_then(|x| u32::try_from(x).ok()).map_or_else(|| schema("weight must be a non-negative integer"), Ok)?,
        };
        out.push(GeneratorInfo {
            id: id.to_string(),
            mu: get_i32(g, "mu", id)?,
            nu: get_i32(g, "nu", id)?,
            star,
            inverse,
            weight,
        });
    }
    Ok(Alphabet::new(out))
}

/// Parse and fully validate a presentation document.
pub fn load_presentation(doc: &Value) -> Result<Presentation, IoError> {
    let name = get_str(doc, "name", "document")?;
    let al = parse_alphabet(doc)?;
    let Some(Value::Array(rs)) = doc.get("relations") else { return schema("missing \"relations\" array") };
    let mut rels = Vec::new();
    for r in rs {
        let (Some(l), Some(rhs)) = (r.get("lhs"), r.get("rhs")) else {
            return schema("relation needs \"lhs\" and \"rhs\"");
        };
        rels.push(NCPoly::from_word(parse_word(&al, l)?).sub(&parse_poly(&al, rhs)?));
    }
    let params = match doc.get("parameters") {
        None => Vec::new(),
        Some(Value::Array(ps)) => ps.iter().map(|p| p.as_str().map(str::to_string).map_or_else(|| schema("parameters are strings"), Ok)).collect::<Result<_, _>>()?,
        Some(_) => return schema("\"parameters\" must be an array"),
    };
    let flag = |key: &str| -> Result<bool, IoError> {
        match doc.get(key) {
            None => Ok(true),
            Some(v) => v.as_bool().map_or_else(|| schema(format!("{key:?} must be a boolean")), Ok),
        }
    };
    let has_star = flag("star_structure")?;
    let braided = flag("braided")?;
    // grading is checked before any rewriting so the error names it
    for r in &rels {
        if r.delta_degree(&al).is_err() {
            return Err(IoError::Validation(format!("relation {} is not delta-homogeneous", r.display(&al))));
        }
    }
    let mut p = Presentation::from_parts(name, al, rels, has_star, params)?;
    p.braided = braided;
    let tables = ["coproduct", "counit", "antipode"].map(|k| doc.get(k));
    match tables {
        [None, None, None] => {}
        [Some(cop), Some(eps), Some(ant)] => {
            let al = p.alphabet.clone();
            let entry = |t: &Value, what: &str, id: &str| -> Result<Value, IoError> {
                t.get(id).cloned().map_or_else(|| schema(format!("{what} has no entry for {id:?}")), Ok)
            };
            let mut cops = Vec::new();
            let mut epss = Vec::new();
            let mut ants = Vec::new();
            for g in &al.gens {
                let Value::Array(ts) = entry(cop, "coproduct", &g.id)? else { return schema("coproduct entries are arrays") };
                let mut t = TensorPoly::zero(2);
                for term in &ts {
                    let (Some(c), Some(Value::Array(ws))) = (term.get("coeff"), term.get("words")) else {
                        return schema("coproduct term needs \"coeff\" and \"words\"");
                    };
                    if ws.len() != 2 {
                        return schema("coproduct terms have two tensor slots");
                    }
                    let words = ws.iter().map(|w| parse_word(&al, w)).collect::<Result<Vec<_>, _>>()?;
                    t.add_term(words, scalar_from_json(c)?);
                }
                cops.push(t);
                epss.push(scalar_from_json(&entry(eps, "counit", &g.id)?)?);
                ants.push(parse_poly(&al, &entry(ant, "antipode", &g.id)?)?);
            }
            p = p.with_hopf(cops, epss, ants)?;
        }
        _ => return schema("coproduct, counit and antipode come together"),
    }
    p.validate()?;
    Ok(p)
}

pub fn load_presentation_file(path: &Path) -> Result<Presentation, IoError> {
    let text = std::fs::read_to_string(path)?;
    load_presentation(&serde_json::from_str(&text)?)
}

pub fn save_presentation(p: &Presentation, path: &Path) -> Result<(), IoError> {
    let text = serde_json::to_string_pretty(&presentation_to_json(p))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// Equality of everything a presentation file records.
pub fn same_structure(a: &Presentation, b: &Presentation) -> bool {
    a.name == b.name
        && a.alphabet == b.alphabet
        && a.rules.rules() == b.rules.rules()
        && a.coproduct == b.coproduct
        && a.counit == b.counit
        && a.antipode == b.antipode
        && a.has_star == b.has_star
        && a.braided == b.braided
        && a.params == b.params
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidkit_core::presentations::{builtin, podles_sphere, SphereParams};

    #[test]
    fn builtins_round_trip() {
        for name in ["su-qphi2", "hat-u2", "u2", "su2"] {
            let p = builtin(name).unwrap();
            let doc = presentation_to_json(&p);
            let back = load_presentation(&doc).unwrap();
            assert!(same_structure(&p, &back), "{name}");
            let text = serde_json::to_string(&doc).unwrap();
            assert_eq!(text, serde_json::to_string(&presentation_to_json(&back)).unwrap());
        }
        let sp = podles_sphere(&SphereParams::formal()).unwrap();
        assert!(same_structure(&sp, &load_presentation(&presentation_to_json(&sp)).unwrap()));
    }

    #[test]
    fn scalar_literals() {
        let s = &(&Scalar::q_pow(-1) - &Scalar::q()).inv().unwrap() * &Scalar::i();
        assert_eq!(scalar_from_json(&scalar_to_json(&s)).unwrap(), s);
        let zero = vec![0; NVARS];
        let v = json!({"num": [["-3/2", [0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0]]], "den": [[1, zero]]});
        assert_eq!(scalar_from_json(&v).unwrap(), Scalar::from_ratio(-3, 2) * Scalar::u_pow(2));
        let bad = json!({"num": [["1", [0, 1]]], "den": [[1, zero]]});
        assert!(matches!(scalar_from_json(&bad), Err(IoError::Schema(_))));
    }

    #[test]
    fn missing_star_partner() {
        let mut doc = presentation_to_json(&builtin("hat-u2").unwrap());
        let gens = doc["generators"].as_array_mut().unwrap();
        gens.retain(|g| g["id"] != "kstar_inv");
        assert!(matches!(load_presentation(&doc), Err(IoError::Schema(_))));
    }

    #[test]
    fn inhomogeneous_relation() {
        let mut doc = presentation_to_json(&builtin("hat-u2").unwrap());
        let one = scalar_to_json(&Scalar::one());
        doc["relations"].as_array_mut().unwrap().push(json!({"lhs": ["e", "e"], "rhs": [{"coeff": one, "word": ["f"]}]}));
        let err = load_presentation(&doc).unwrap_err();
        assert!(matches!(err, IoError::Validation(ref m) if m.contains("homogeneous")), "{err}");
    }

    #[test]
    fn counit_must_be_multiplicative() {
        let mut doc = presentation_to_json(&builtin("hat-u2").unwrap());
        doc["counit"]["e"] = scalar_to_json(&Scalar::one());
        assert!(matches!(load_presentation(&doc), Err(IoError::Validation(_))));
    }
}
