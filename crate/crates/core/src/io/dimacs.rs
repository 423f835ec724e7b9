//! DIMACS CNF restricted to three literals per clause.

use crate::sat::{Clause, CnfFormula, Literal};

use super::{tokens, ParseCode, ParseDiagnostic, Token};

struct Header {
    n: u32,
    m: usize,
    line: usize,
    column: usize,
}

fn parse_header(toks: &[Token<'_>]) -> Result<Header, ParseDiagnostic> {
    let first = &toks[0];
    let bad = || first.error(ParseCode::BadHeader, "expected \"p cnf <vars> <clauses>\"");
    let [_, fmt, n, m] = toks else {
        return Err(bad());
    };
    if fmt.text != "cnf" {
        return Err(bad());
    }
    let n = n.text.parse::<u32>().map_err(|_| bad())?;
    let m = m.text.parse::<usize>().map_err(|_| bad())?;
    if n > i32::MAX as u32 {
        return Err(bad());
    }
    Ok(Header {
        n,
        m,
        line: first.line,
        column: first.column,
    })
}

pub fn parse_dimacs3(text: &str) -> Result<CnfFormula, ParseDiagnostic> {
    let mut header: Option<Header> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    // literals of the open clause, with the position of its first token
    let mut open: Vec<Literal> = Vec::new();
    let mut open_at = (0, 0);

    for (i, line) in text.lines().enumerate() {
        let toks = tokens(line, i + 1);
        let Some(first) = toks.first() else { continue };
        if first.text.starts_with('c') {
            continue;
        }
        if first.text == "p" {
            if header.is_some() {
                return Err(first.error(ParseCode::BadHeader, "second problem line"));
            }
            header = Some(parse_header(&toks)?);
            continue;
        }
        let Some(h) = &header else {
            return Err(first.error(ParseCode::BadHeader, "clause before the problem line"));
        };
        for tok in &toks {
            let value = parse_lit(tok)?;
            if value == 0 {
                if open.len() != 3 {
                    let (line, column) = if open.is_empty() {
                        (tok.line, tok.column)
                    } else {
                        open_at
                    };
                    return Err(ParseDiagnostic::new(
                        line,
                        column,
                        ParseCode::ClauseNotTernary,
                        format!("clause has {} literals, expected 3", open.len()),
                    ));
                }
                clauses.push([open[0], open[1], open[2]]);
                open.clear();
                continue;
            }
            let lit = Literal::from_dimacs(value)
                .filter(|l| l.variable <= h.n)
                .ok_or_else(|| {
                    tok.error(
                        ParseCode::VarOutOfRange,
                        format!("variable {} outside 1..={}", value.unsigned_abs(), h.n),
                    )
                })?;
            if open.is_empty() {
                open_at = (tok.line, tok.column);
            }
            open.push(lit);
        }
    }

    let Some(h) = header else {
        return Err(ParseDiagnostic::new(
            1,
            1,
            ParseCode::BadHeader,
            "missing problem line",
        ));
    };
    if !open.is_empty() {
        return Err(ParseDiagnostic::new(
            open_at.0,
            open_at.1,
            ParseCode::ClauseNotTernary,
            "clause is not terminated by 0",
        ));
    }
    if clauses.len() != h.m {
        return Err(ParseDiagnostic::new(
            h.line,
            h.column,
            ParseCode::ClauseCountMismatch,
            format!("header declares {} clauses, found {}", h.m, clauses.len()),
        ));
    }
    Ok(CnfFormula::new(h.n, clauses).expect("variables checked against the header"))
}

fn parse_lit(tok: &Token<'_>) -> Result<i64, ParseDiagnostic> {
    let digits = tok.text.strip_prefix('-').unwrap_or(tok.text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(tok.error(
            ParseCode::MalformedToken,
            format!("not a literal: {:?}", tok.text),
        ));
    }
    tok.text.parse::<i64>().map_err(|_| {
        tok.error(
            ParseCode::VarOutOfRange,
            format!("literal out of range: {}", tok.text),
        )
    })
}

pub fn emit_dimacs3(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.n_vars(), phi.n_clauses());
    for [a, b, c] in phi.clauses() {
        out.push_str(&format!(
            "{} {} {} 0\n",
            a.to_dimacs(),
            b.to_dimacs(),
            c.to_dimacs()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(text: &str) -> (ParseCode, usize, usize) {
        let d = parse_dimacs3(text).unwrap_err();
        (d.code, d.line, d.column)
    }

    #[test]
    fn example_formula() {
        let phi = parse_dimacs3("c example\np cnf 4 2\n1 -2 -3 0\n-1 3 4 0\n").unwrap();
        assert_eq!(phi, CnfFormula::from_dimacs(4, &[[1, -2, -3], [-1, 3, 4]]));
        assert_eq!(emit_dimacs3(&phi), "p cnf 4 2\n1 -2 -3 0\n-1 3 4 0\n");
        let one = parse_dimacs3("p cnf 1 0").unwrap();
        assert_eq!((one.n_vars(), one.n_clauses()), (1, 0));
    }

    #[test]
    fn clauses_may_span_lines() {
        let phi = parse_dimacs3("p cnf 3 2\n1 2\n3 0 -1\n-2 -3 0").unwrap();
        assert_eq!(phi, CnfFormula::from_dimacs(3, &[[1, 2, 3], [-1, -2, -3]]));
    }

    #[test]
    fn error_codes() {
        assert_eq!(
            code("p cnf 2 1\n1 -2 0\n"),
            (ParseCode::ClauseNotTernary, 2, 1)
        );
        assert_eq!(
            code("p cnf 2 1\n1 -2 1 2 0\n").0,
            ParseCode::ClauseNotTernary
        );
        assert_eq!(code("p cnf 2 1\n0\n").0, ParseCode::ClauseNotTernary);
        assert_eq!(
            code("p cnf 2 1\n1 2 1\n"),
            (ParseCode::ClauseNotTernary, 2, 1)
        );
        assert_eq!(
            code("p cnf 2 1\n1 2 -3 0\n"),
            (ParseCode::VarOutOfRange, 2, 5)
        );
        assert_eq!(
            code("p cnf 2 2\n1 2 1 0\n"),
            (ParseCode::ClauseCountMismatch, 1, 1)
        );
        assert_eq!(code(""), (ParseCode::BadHeader, 1, 1));
        assert_eq!(code("1 2 3 0\n").0, ParseCode::BadHeader);
        assert_eq!(code("p cnf 2\n").0, ParseCode::BadHeader);
        assert_eq!(code("p dnf 2 0\n").0, ParseCode::BadHeader);
        assert_eq!(code("p cnf 2 0\np cnf 2 0\n"), (ParseCode::BadHeader, 2, 1));
        assert_eq!(
            code("p cnf 2 1\n1 x 2 0\n"),
            (ParseCode::MalformedToken, 2, 3)
        );
    }
}
