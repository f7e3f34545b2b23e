use super::Formula;

/// Every binary operand that is itself binary gets parentheses; negation
/// and atoms never do. This is more than precedence requires, but it
/// reads like the usual presentation of axiom schemata and is trivially
/// unambiguous.
pub(super) fn render(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out);
    out
}

fn write(f: &Formula, out: &mut String) {
    match f {
        Formula::Var(v) => out.push_str(v),
        Formula::Zero => out.push('0'),
        Formula::One => out.push('1'),
        Formula::Not(g) => {
            out.push('~');
            write_operand(g, out);
        }
        Formula::Bin(op, l, r) => {
            write_operand(l, out);
            out.push(' ');
            out.push_str(op.ascii());
            out.push(' ');
            write_operand(r, out);
        }
    }
}

fn write_operand(f: &Formula, out: &mut String) {
    if matches!(f, Formula::Bin(..)) {
        out.push('(');
        write(f, out);
        out.push(')');
    } else {
        write(f, out);
    }
}
