//! Line-oriented JSON: objects and nested arrays one item per line, flat
//! arrays of scalars on a single line, so structure constants and matrix
//! rows diff cleanly.

use serde_json::Value;

pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => {
            let scalars = xs.iter().filter(|x| !x.is_object() && !x.is_array()).count();
            scalars == xs.len() || (scalars > 0 && xs.iter().all(|x| !x.is_object() && (!x.is_array() || is_leaf_list(x))))
        }
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

// an index list inside a cochain entry such as [[1, 2, 1], "3"]
fn is_leaf_list(v: &Value) -> bool {
    matches!(v, Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()))
}

fn write(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        Value::Array(xs) if !xs.is_empty() && !is_flat(v) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                write(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Array(xs) => {
            out.push('[');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write(x, indent, out);
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}
