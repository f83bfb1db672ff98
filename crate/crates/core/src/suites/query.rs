//! One-shot computations for the command line.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ladic::PrimePower;
use crate::partitions::{d_core, two_core, Partition};
use crate::qpoly::{generic_degree_typea, in_uch_phid_prime_typea, is_degenerate_d};
use crate::rationality::{extension_field_type_a, Sign};
use crate::symbols::{symbol_d_core, SymbolBCD};
use crate::weyl::{compare_with_prediction, weyl_group, Twist, WeylType};
use crate::wreath::{conductor_of_char, WreathCharLabel};

pub const QUERY_KINDS: &[&str] = &["d-core", "2-core", "symbol-core", "conductor", "generic-degree", "weyl", "field"];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QueryResult {
    pub kind: String,
    pub args: BTreeMap<String, String>,
    pub text: String,
    pub value: Value,
}

/// Splits on whitespace outside brackets.
fn tokens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if ch.is_whitespace() && depth <= 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

struct Args {
    map: BTreeMap<String, String>,
}

impl Args {
    /// `key=value` tokens; a bare token is bound to `positional`.
    fn parse(text: &str, positional: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for t in tokens(text) {
            let (k, v) = match t.split_once('=') {
                Some((k, v)) if !k.contains(['(', '[', '{']) => (k.trim().to_string(), v.trim().to_string()),
                _ => (positional.to_string(), t.clone()),
            };
            if map.insert(k.clone(), v).is_some() {
                return Err(Error::InvalidParameter(format!("'{k}' given twice")));
            }
        }
        Ok(Args { map })
    }

    fn get(&self, key: &str) -> Result<&str> {
        self.map
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::InvalidParameter(format!("missing argument '{key}'")))
    }

    fn get_or<'a>(&'a self, key: &str, default: &'a str) -> &'a str {
        self.map.get(key).map(String::as_str).unwrap_or(default)
    }

    fn num(&self, key: &str) -> Result<u64> {
        let s = self.get(key)?;
        s.parse().map_err(|_| Error::InvalidParameter(format!("{key} must be a non-negative integer, got '{s}'")))
    }

    fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.map.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::InvalidParameter(format!("unexpected argument '{k}'"))),
            None => Ok(()),
        }
    }
}

pub fn query(kind: &str, text: &str) -> Result<QueryResult> {
    let (text_out, value, args) = match kind {
        "d-core" => {
            let a = Args::parse(text, "lambda")?;
            a.only(&["lambda", "d"])?;
            let lambda: Partition = a.get("lambda")?.parse()?;
            let d = a.num("d")?;
            if d == 0 {
                return Err(Error::InvalidParameter("d must be positive".into()));
            }
            let (core, weight) = d_core(&lambda, d);
            (core.to_string(), json!({"core": core, "weight": weight}), a)
        }
        "2-core" => {
            let a = Args::parse(text, "lambda")?;
            a.only(&["lambda"])?;
            let lambda: Partition = a.get("lambda")?.parse()?;
            let core = two_core(&lambda);
            (core.to_string(), json!({"core": core}), a)
        }
        "symbol-core" => {
            let a = Args::parse(text, "symbol")?;
            a.only(&["symbol", "d"])?;
            let s: SymbolBCD = a.get("symbol")?.parse()?;
            let core = symbol_d_core(&s, a.num("d")?)?;
            (core.to_string(), json!({"core": core.to_string(), "defect": core.defect(), "rank": core.rank()}), a)
        }
        "conductor" => {
            let a = Args::parse(text, "label")?;
            a.only(&["label"])?;
            let label: WreathCharLabel = a.get("label")?.parse()?;
            let c = conductor_of_char(&label, label.modulus(), label.size())?;
            (c.to_string(), json!({"conductor": c, "m": label.modulus(), "a": label.size()}), a)
        }
        "generic-degree" => {
            let a = Args::parse(text, "lambda")?;
            a.only(&["lambda", "d"])?;
            let lambda: Partition = a.get("lambda")?.parse()?;
            let poly = generic_degree_typea(&lambda)?;
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            let mut value = json!({"polynomial": poly.to_string(), "coefficients": coeffs});
            let mut text = poly.to_string();
            if a.map.contains_key("d") {
                let d = a.num("d")?;
                let prime = in_uch_phid_prime_typea(&lambda, d)?;
                value["phi_d_prime"] = json!(prime);
                value["degenerate_d"] = json!(is_degenerate_d(d));
                text = format!(
                    "{text}; {} by Φ_{d}{}",
                    if prime { "not divisible" } else { "divisible" },
                    if is_degenerate_d(d) { " (degenerate d = 1)" } else { "" }
                );
            }
            (text, value, a)
        }
        "weyl" => {
            let a = Args::parse(text, "type")?;
            a.only(&["type", "rank", "d", "twist"])?;
            let ty: WeylType = a.get("type")?.parse()?;
            let rank = u32::try_from(a.num("rank")?).map_err(|_| Error::InvalidParameter("rank too large".into()))?;
            let d = a.num("d")?;
            if d == 0 {
                return Err(Error::InvalidParameter("d must be positive".into()));
            }
            let twist: Twist = a.get_or("twist", "id").parse()?;
            let cmp = compare_with_prediction(&weyl_group(ty, rank)?, d, twist)?;
            let predicted = cmp.predicted.map(|g| g.to_string()).unwrap_or_else(|| "trivial".into());
            let text = format!(
                "W_d has order {} with degrees {:?}; predicted {}; {}",
                cmp.oracle.0,
                cmp.oracle.1,
                predicted,
                if cmp.matches { "match" } else { "mismatch" }
            );
            let value = json!({
                "order": cmp.oracle.0, "degrees": cmp.oracle.1, "a": cmp.a,
                "predicted": predicted, "matches": cmp.matches, "hd_fixed": cmp.hd_fixed,
            });
            (text, value, a)
        }
        "field" => {
            let a = Args::parse(text, "lambda")?;
            a.only(&["eps", "lambda", "ell", "q", "r"])?;
            let eps: Sign = a.get("eps")?.parse()?;
            let lambda: Partition = a.get("lambda")?.parse()?;
            let ell = a.num("ell")?;
            let q = PrimePower::from_value(a.num("q")?)?;
            let r = a.num("r")?;
            let field = extension_field_type_a(eps, &lambda, ell, &q, r)?;
            let text = if field.is_trivial() {
                format!("trivial over Q_{ell}")
            } else {
                let gens: Vec<String> = field.generators().iter().map(|g| g.to_string()).collect();
                format!("Q_{ell}({})", gens.join(", "))
            };
            (text, json!({"trivial": field.is_trivial(), "field": field}), a)
        }
        other => return Err(Error::UnknownQuery(other.to_string())),
    };
    Ok(QueryResult { kind: kind.to_string(), args: args.map, text: text_out, value })
}
