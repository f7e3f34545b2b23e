//! The line-oriented algebra file format.
//!
//! ```text
//! algebra B2
//! size 2
//! elements 0 1
//! signature & | => ~ 0 1
//! const 0 0
//! const 1 1
//! op &
//! 0 0
//! 0 1
//! ```
//!
//! Binary tables are `n` rows of `n` element names, the row being the left
//! argument; unary tables are a single row. `#` starts a comment.

use std::collections::BTreeMap;

use super::{AlgebraError, FiniteAlgebra, Op, Table};

fn syntax(line: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Syntax { line, msg: msg.into() }
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, AlgebraError> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
        .collect();

    let mut name = None;
    let mut size = None;
    let mut elements: Option<Vec<String>> = None;
    let mut signature: Option<Vec<Op>> = None;
    let mut tables = BTreeMap::new();

    let mut i = 0;
    while i < lines.len() {
        let (ln, toks) = &lines[i];
        let ln = *ln;
        i += 1;
        match toks[0] {
            "algebra" => {
                if toks.len() != 2 {
                    return Err(syntax(ln, "expected `algebra <name>`"));
                }
                name = Some(toks[1].to_string());
            }
            "size" => {
                let n: usize = toks
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .filter(|_| toks.len() == 2)
                    .ok_or_else(|| syntax(ln, "expected `size <n>`"))?;
                size = Some(n);
            }
            "elements" => {
                elements = Some(toks[1..].iter().map(|s| s.to_string()).collect());
            }
            "signature" => {
                let ops = toks[1..]
                    .iter()
                    .map(|s| Op::from_symbol(s).ok_or_else(|| syntax(ln, format!("unknown symbol `{s}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                signature = Some(ops);
            }
            "const" | "op" => {
                let elems = elements.as_ref().ok_or_else(|| syntax(ln, "`elements` must come first"))?;
                let idx = |s: &str, l: usize| {
                    elems.iter().position(|e| e == s).ok_or_else(|| syntax(l, format!("unknown element `{s}`")))
                };
                let op = toks
                    .get(1)
                    .and_then(|s| Op::from_symbol(s))
                    .ok_or_else(|| syntax(ln, "expected an operation symbol"))?;
                if tables.contains_key(&op) {
                    return Err(syntax(ln, format!("`{op}` defined twice")));
                }
                if toks[0] == "const" {
                    if op.arity() != 0 || toks.len() != 3 {
                        return Err(syntax(ln, "expected `const <0|1> <element>`"));
                    }
                    tables.insert(op, Table::Constant(idx(toks[2], ln)?));
                    continue;
                }
                if op.arity() == 0 || toks.len() != 2 {
                    return Err(syntax(ln, "expected `op <symbol>` followed by rows"));
                }
                let n = elems.len();
                let rows = if op.arity() == 1 { 1 } else { n };
                let mut entries = Vec::with_capacity(rows * n);
                for _ in 0..rows {
                    let (rl, row) = lines.get(i).ok_or_else(|| syntax(ln, format!("table `{op}` is truncated")))?;
                    if row.len() != n {
                        return Err(syntax(*rl, format!("expected {n} entries, found {}", row.len())));
                    }
                    for s in row {
                        entries.push(idx(s, *rl)?);
                    }
                    i += 1;
                }
                let table = if op.arity() == 1 { Table::Unary(entries) } else { Table::Binary(entries) };
                tables.insert(op, table);
            }
            other => return Err(syntax(ln, format!("unexpected keyword `{other}`"))),
        }
    }

    let name = name.ok_or_else(|| syntax(0, "missing `algebra` line"))?;
    let elements = elements.ok_or_else(|| syntax(0, "missing `elements` line"))?;
    if let Some(n) = size {
        if n != elements.len() {
            return Err(syntax(0, format!("size {n} but {} elements listed", elements.len())));
        }
    }
    if let Some(sig) = signature {
        for op in &sig {
            if !tables.contains_key(op) {
                return Err(syntax(0, format!("signature lists `{op}` but no table is given")));
            }
        }
        if let Some(op) = tables.keys().find(|o| !sig.contains(o)) {
            return Err(syntax(0, format!("table for `{op}` is not in the signature")));
        }
    }
    FiniteAlgebra::new(name, elements, tables)
}

/// Deterministic rendering; `parse_algebra(&write_algebra(a)) == Ok(a)`.
pub fn write_algebra(a: &FiniteAlgebra) -> String {
    let mut out = String::new();
    let name = |e: usize| a.element_name(e);
    out.push_str(&format!("algebra {}\n", a.name()));
    out.push_str(&format!("size {}\n", a.size()));
    out.push_str(&format!("elements {}\n", a.elements().join(" ")));
    out.push_str(&format!("signature {}\n", a.signature()));
    for (op, t) in a.tables() {
        if let Table::Constant(c) = t {
            out.push_str(&format!("const {op} {}\n", name(*c)));
        }
    }
    let width = a.elements().iter().map(|e| e.chars().count()).max().unwrap_or(1);
    let row = |cells: &[usize]| {
        let cells: Vec<String> = cells.iter().map(|&c| format!("{:<width$}", name(c))).collect();
        cells.join(" ").trim_end().to_string() + "\n"
    };
    for (op, t) in a.tables() {
        match t {
            Table::Constant(_) => {}
            Table::Unary(v) => {
                out.push_str(&format!("op {op}\n"));
                out.push_str(&row(v));
            }
            Table::Binary(v) => {
                out.push_str(&format!("op {op}\n"));
                for r in v.chunks(a.size()) {
                    out.push_str(&row(r));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const B2: &str = "\
# two-element Boolean algebra
algebra B2
size 2
elements 0 1
signature & | ~ 0 1
const 0 0
const 1 1
op &
0 0
0 1
op |
0 1
1 1
op ~
1 0
";

    #[test]
    fn parses_and_writes_back() {
        let a = parse_algebra(B2).unwrap();
        assert_eq!(a.size(), 2);
        assert_eq!(a.un(Op::Neg, 0), 1);
        let again = parse_algebra(&write_algebra(&a)).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn reports_bad_rows() {
        let bad = B2.replace("0 0\n0 1\nop |", "0 0\n0\nop |");
        match parse_algebra(&bad) {
            Err(AlgebraError::Syntax { line, .. }) => assert_eq!(line, 10),
            other => panic!("unexpected {other:?}"),
        }
        let bad = B2.replace("1 0\n", "1 x\n");
        assert!(matches!(parse_algebra(&bad), Err(AlgebraError::Syntax { .. })));
        let bad = B2.replace("size 2", "size 3");
        assert!(parse_algebra(&bad).is_err());
        let bad = B2.replace("signature & | ~ 0 1", "signature & | ~ 0 1 =>");
        assert!(parse_algebra(&bad).is_err());
    }
}
