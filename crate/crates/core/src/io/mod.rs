//! Text formats: sequence genomes (`.seq`), set genomes (`.set`), the DIMACS
//! 3-CNF subset (`.cnf`) and gene name tables (`.tsv`). Certificates reuse
//! the genome formats. Emitters are canonical: single spaces, one record per
//! line, newline-terminated, no comments.

mod dimacs;

pub use dimacs::{emit_dimacs3, parse_dimacs3};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::model::{GeneFamily, SeqGenome, SetChromosome, SetGenome, SignedGene};
use crate::sat::{GeneNameTable, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParseCode {
    ZeroGene,
    MalformedToken,
    EmptyInput,
    DuplicateInChromosome,
    BadHeader,
    ClauseNotTernary,
    VarOutOfRange,
    ClauseCountMismatch,
    DuplicateFamily,
    DuplicateRole,
}

impl ParseCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseCode::ZeroGene => "ZeroGene",
            ParseCode::MalformedToken => "MalformedToken",
            ParseCode::EmptyInput => "EmptyInput",
            ParseCode::DuplicateInChromosome => "DuplicateInChromosome",
            ParseCode::BadHeader => "BadHeader",
            ParseCode::ClauseNotTernary => "ClauseNotTernary",
            ParseCode::VarOutOfRange => "VarOutOfRange",
            ParseCode::ClauseCountMismatch => "ClauseCountMismatch",
            ParseCode::DuplicateFamily => "DuplicateFamily",
            ParseCode::DuplicateRole => "DuplicateRole",
        }
    }
}

impl fmt::Display for ParseCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where and why a parse failed. Line and column are 1-based; the column is
/// the byte offset of the offending token.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {code}: {message}")]
pub struct ParseDiagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub code: ParseCode,
}

impl ParseDiagnostic {
    pub(crate) fn new(
        line: usize,
        column: usize,
        code: ParseCode,
        message: impl Into<String>,
    ) -> Self {
        ParseDiagnostic {
            line,
            column,
            message: message.into(),
            code,
        }
    }
}

pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl Token<'_> {
    pub fn error(&self, code: ParseCode, message: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic::new(self.line, self.column, code, message)
    }
}

/// Whitespace-separated tokens of one line, with 1-based columns.
pub(crate) fn tokens(line: &str, line_no: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, b) in line.bytes().enumerate().chain([(line.len(), b' ')]) {
        match (b.is_ascii_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    line: line_no,
                    column: s + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

/// Non-blank lines that are not `#` comments, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim_start();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

/// Optional sign followed by ASCII digits; no other characters.
fn parse_int(tok: &Token<'_>) -> Result<i64, ParseDiagnostic> {
    let digits = tok.text.strip_prefix(['+', '-']).unwrap_or(tok.text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(tok.error(
            ParseCode::MalformedToken,
            format!("not an integer: {:?}", tok.text),
        ));
    }
    tok.text.parse::<i64>().map_err(|_| {
        tok.error(
            ParseCode::MalformedToken,
            format!("integer out of range: {}", tok.text),
        )
    })
}

fn parse_family(tok: &Token<'_>, value: i64) -> Result<GeneFamily, ParseDiagnostic> {
    if value == 0 {
        return Err(tok.error(ParseCode::ZeroGene, "gene 0 is not a family"));
    }
    u32::try_from(value.unsigned_abs())
        .ok()
        .and_then(GeneFamily::new)
        .ok_or_else(|| {
            tok.error(
                ParseCode::MalformedToken,
                format!("family id out of range: {}", tok.text),
            )
        })
}

pub fn parse_seq_genome(text: &str) -> Result<SeqGenome, ParseDiagnostic> {
    let mut genes = Vec::new();
    for (line_no, line) in content_lines(text) {
        for tok in tokens(line, line_no) {
            let value = parse_int(&tok)?;
            parse_family(&tok, value)?;
            genes.push(SignedGene::from_signed(value).expect("nonzero, in range"));
        }
    }
    if genes.is_empty() {
        return Err(ParseDiagnostic::new(
            1,
            1,
            ParseCode::EmptyInput,
            "no genes in input",
        ));
    }
    Ok(SeqGenome::new(genes))
}

pub fn emit_seq_genome(g: &SeqGenome) -> String {
    let mut out = g
        .to_signed()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

pub fn parse_set_genome(text: &str) -> Result<SetGenome, ParseDiagnostic> {
    let mut chromosomes = Vec::new();
    for (line_no, line) in content_lines(text) {
        let toks = tokens(line, line_no);
        if toks.len() == 1 && toks[0].text == "-" {
            chromosomes.push(SetChromosome::default());
            continue;
        }
        let mut members = BTreeSet::new();
        for tok in &toks {
            let value = parse_int(tok)?;
            if value < 0 {
                return Err(tok.error(ParseCode::MalformedToken, "set genes are unsigned"));
            }
            let f = parse_family(tok, value)?;
            if !members.insert(f) {
                return Err(tok.error(
                    ParseCode::DuplicateInChromosome,
                    format!("family {f} repeated in one chromosome"),
                ));
            }
        }
        chromosomes.push(SetChromosome::new(members));
    }
    Ok(SetGenome::new(chromosomes))
}

pub fn emit_set_genome(g: &SetGenome) -> String {
    let mut out = String::new();
    for c in g.chromosomes() {
        if c.is_empty() {
            out.push('-');
        } else {
            let ids: Vec<String> = c.members().iter().map(|f| f.id().to_string()).collect();
            out.push_str(&ids.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn emit_name_table(table: &GeneNameTable) -> String {
    table
        .iter()
        .map(|(f, r)| format!("{}\t{}\n", f.id(), r))
        .collect()
}

pub fn parse_name_table(text: &str) -> Result<GeneNameTable, ParseDiagnostic> {
    let mut table = GeneNameTable::new();
    for (line_no, line) in content_lines(text) {
        let toks = tokens(line, line_no);
        let [fam_tok, role_tok] = toks.as_slice() else {
            let col = toks.get(2).map_or(1, |t| t.column);
            return Err(ParseDiagnostic::new(
                line_no,
                col,
                ParseCode::MalformedToken,
                "expected \"family<TAB>role\"",
            ));
        };
        let value = parse_int(fam_tok)?;
        if value < 0 || fam_tok.text.starts_with('+') {
            return Err(fam_tok.error(ParseCode::MalformedToken, "family ids are unsigned"));
        }
        let family = parse_family(fam_tok, value)?;
        let role: Role = role_tok.text.parse().map_err(|_| {
            role_tok.error(
                ParseCode::MalformedToken,
                format!("unknown role {:?}", role_tok.text),
            )
        })?;
        if table.role(family).is_some() {
            return Err(fam_tok.error(
                ParseCode::DuplicateFamily,
                format!("family {family} listed twice"),
            ));
        }
        if !table.insert(family, role) {
            return Err(role_tok.error(
                ParseCode::DuplicateRole,
                format!("role {role} listed twice"),
            ));
        }
    }
    Ok(table)
}

/// Genes as role names, space separated. Families without a role print as
/// their id.
pub fn render_seq_roles(g: &SeqGenome, names: &GeneNameTable) -> String {
    g.genes()
        .iter()
        .map(|x| names.name(x.family))
        .collect::<Vec<_>>()
        .join(" ")
}

/// One chromosome per line as `{r_1, x_1}`, members in family order.
pub fn render_set_roles(g: &SetGenome, names: &GeneNameTable) -> String {
    g.chromosomes()
        .iter()
        .map(|c| {
            let parts: Vec<String> = c.members().iter().map(|&f| names.name(f)).collect();
            format!("{{{}}}\n", parts.join(", "))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::reduce_3sat_to_seq_zed;
    use crate::sat::CnfFormula;

    fn code<T: fmt::Debug>(r: Result<T, ParseDiagnostic>) -> (ParseCode, usize, usize) {
        let d = r.unwrap_err();
        (d.code, d.line, d.column)
    }

    #[test]
    fn seq_examples() {
        let g = parse_seq_genome("-4 +1 +2 +3 -5 +1 +2 +3 -6").unwrap();
        assert_eq!(g, SeqGenome::from_signed(&[-4, 1, 2, 3, -5, 1, 2, 3, -6]));
        assert_eq!(
            parse_seq_genome("# comment\n\n+1").unwrap(),
            SeqGenome::from_signed(&[1])
        );
        assert_eq!(code(parse_seq_genome("3 0 2")), (ParseCode::ZeroGene, 1, 3));
        assert_eq!(emit_seq_genome(&g), "-4 1 2 3 -5 1 2 3 -6\n");
    }

    #[test]
    fn seq_lines_concatenate() {
        let g = parse_seq_genome("1 -2\n  # c\n3\r\n").unwrap();
        assert_eq!(g, SeqGenome::from_signed(&[1, -2, 3]));
    }

    #[test]
    fn seq_errors() {
        assert_eq!(code(parse_seq_genome("")), (ParseCode::EmptyInput, 1, 1));
        assert_eq!(
            code(parse_seq_genome("# only\n\n")).0,
            ParseCode::EmptyInput
        );
        assert_eq!(
            code(parse_seq_genome("1\n 2 x3")),
            (ParseCode::MalformedToken, 2, 4)
        );
        for bad in ["+-1", "1.5", "--2", "+", "99999999999"] {
            assert_eq!(
                code(parse_seq_genome(bad)).0,
                ParseCode::MalformedToken,
                "{bad}"
            );
        }
        assert_eq!(code(parse_seq_genome("-0")).0, ParseCode::ZeroGene);
    }

    #[test]
    fn set_examples() {
        let g = parse_set_genome("1 2 3\n2 3 4\n4 5").unwrap();
        assert_eq!(g, SetGenome::from_ids(&[&[1, 2, 3], &[2, 3, 4], &[4, 5]]));
        let e = parse_set_genome("-").unwrap();
        assert_eq!(e.k(), 1);
        assert!(e.chromosomes()[0].is_empty());
        assert_eq!(
            code(parse_set_genome("1 1 2")),
            (ParseCode::DuplicateInChromosome, 1, 3)
        );
        assert_eq!(code(parse_set_genome("1 0")).0, ParseCode::ZeroGene);
        assert_eq!(code(parse_set_genome("1 -2")).0, ParseCode::MalformedToken);
        assert_eq!(code(parse_set_genome("1 - 2")).0, ParseCode::MalformedToken);
        assert_eq!(
            emit_set_genome(&SetGenome::from_ids(&[&[3, 1], &[]])),
            "1 3\n-\n"
        );
        assert_eq!(parse_set_genome("").unwrap().k(), 0);
    }

    #[test]
    fn name_tables() {
        let phi = CnfFormula::from_dimacs(4, &[[1, -2, -3], [-1, 3, 4]]);
        let red = reduce_3sat_to_seq_zed(&phi);
        let text = emit_name_table(&red.names);
        // 2n + 6m + 1 families
        assert_eq!(text.lines().count(), 21);
        assert!(text.starts_with("1\tx_1\n2\tx_2\n"));
        assert_eq!(parse_name_table(&text).unwrap(), red.names);
        assert_eq!(emit_name_table(&GeneNameTable::new()), "");

        assert_eq!(
            code(parse_name_table("1\tz\n1\tx_1\n")),
            (ParseCode::DuplicateFamily, 2, 1)
        );
        assert_eq!(
            code(parse_name_table("1\tz\n2\tz\n")),
            (ParseCode::DuplicateRole, 2, 3)
        );
        assert_eq!(
            code(parse_name_table("1\tq_1\n")).0,
            ParseCode::MalformedToken
        );
        assert_eq!(code(parse_name_table("1\n")).0, ParseCode::MalformedToken);
        assert_eq!(
            code(parse_name_table("-1\tz\n")).0,
            ParseCode::MalformedToken
        );
    }

    #[test]
    fn role_rendering() {
        let mut t = GeneNameTable::new();
        t.insert(GeneFamily::of(1), Role::X(1));
        t.insert(GeneFamily::of(2), Role::APrime(3));
        assert_eq!(
            render_seq_roles(&SeqGenome::from_signed(&[2, -1, 7]), &t),
            "a'_3 x_1 7"
        );
        assert_eq!(
            render_set_roles(&SetGenome::from_ids(&[&[1, 2], &[]]), &t),
            "{x_1, a'_3}\n{}\n"
        );
    }
}
