//! Plain-text rendering of command output. Ring elements are recognised by
//! their JSON layout; rational functions are printed in factored form when
//! every root is a Gaussian rational.

use serde_json::Value;
use whfactor_core::codec;
use whfactor_core::rings::factor_numeric;

const INDENT: &str = "  ";
const FACTOR_TOLERANCE: f64 = 1e-9;

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    match inline(v) {
        Some(s) => {
            out.push_str(&s);
            out.push('\n');
        }
        None => block(v, 0, &mut out),
    }
    out
}

fn is_object_with(v: &Value, required: &[&str], allowed: &[&str]) -> bool {
    match v {
        Value::Object(o) => {
            required.iter().all(|k| o.contains_key(*k)) && o.keys().all(|k| allowed.contains(&k.as_str()))
        }
        _ => false,
    }
}

/// Single-line rendering of scalars and ring elements.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(_) if is_object_with(v, &["num"], &["num", "den"]) => {
            let f = codec::decode_rational_function(v).ok()?;
            Some(match factor_numeric(&f, FACTOR_TOLERANCE) {
                Ok(nf) if nf.exact => nf.factored.to_string(),
                _ => f.to_string(),
            })
        }
        Value::Object(o) if !o.is_empty() && is_object_with(v, &[], &["re", "im"]) => {
            codec::decode_gaussian(v).ok().map(|z| z.to_string())
        }
        Value::Object(_) if is_object_with(v, &["lead", "factors"], &["lead", "factors"]) => {
            codec::decode_factored(v).ok().map(|f| f.to_string())
        }
        Value::Array(a) if !a.is_empty() && a.iter().all(|t| is_object_with(t, &["freq", "coeff"], &["freq", "coeff"])) => {
            codec::decode_appoly(v)
                .map(|p| p.to_string())
                .or_else(|_| codec::decode_mixed(v).map(|p| p.to_string()))
                .ok()
        }
        Value::Array(a) => {
            let parts: Option<Vec<String>> = a.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

fn block(v: &Value, depth: usize, out: &mut String) {
    let pad = INDENT.repeat(depth);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        block(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        block(x, depth + 1, out);
                    }
                }
            }
        }
        other => {
            if let Some(s) = inline(other) {
                out.push_str(&format!("{pad}{s}\n"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn ring_elements_inline() {
        let gr = json!({"re": [1, 2], "im": [3, 1]});
        assert_eq!(inline(&gr).unwrap(), codec::decode_gaussian(&gr).unwrap().to_string());
        // (ξ − i)/(ξ + i) has exact roots, so it is shown factored.
        let rf = json!({"num": [{"im": [-1, 1]}, {"re": [1, 1]}], "den": [{"im": [1, 1]}, {"re": [1, 1]}]});
        let f = codec::decode_rational_function(&rf).unwrap();
        let shown = inline(&rf).unwrap();
        assert_eq!(shown, factor_numeric(&f, FACTOR_TOLERANCE).unwrap().factored.to_string());
        let ap = json!([{"freq": [1, 2], "coeff": {"re": [1, 1]}}]);
        assert_eq!(inline(&ap).unwrap(), codec::decode_appoly(&ap).unwrap().to_string());
    }

    #[test]
    fn nested_blocks() {
        let v = json!({"a": {"b": 1, "c": [[1, 2], [3, 4]]}, "d": "x"});
        assert_eq!(render(&v), "a:\n  b: 1\n  c: [[1, 2], [3, 4]]\nd: x\n");
    }
}
