//! 3SAT to zero exemplar distance on sequences.
//!
//! Per variable `i` with positive literal genes `p…` and negative ones `q…`:
//!
//! ```text
//! G1<v_i>: y_i p… x_i q… y_i        G2<v_i>: p… x_i y_i x_i q…
//! ```
//!
//! per clause `j`:
//!
//! ```text
//! G1<e_j>: r a b c s a b c t        G2<e_j>: a r b a s c b t c
//! ```
//!
//! and the genomes are all variable gadgets, a separator `z`, then all clause
//! gadgets. Every gene is in forward orientation.

use crate::error::ZedError;
use crate::model::{check_seq_certificate, GeneFamily, Orientation, SeqGenome, SignedGene};

use super::{
    clause_case, literal_genes, taken_literals, Assignment, ClauseCase, CnfFormula, GeneNameTable,
    Role,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqReduction {
    pub g1: SeqGenome,
    pub g2: SeqGenome,
    pub names: GeneNameTable,
}

/// Family numbering: `x_i = i`, `y_i = n + i`, `z = 2n + 1`, then the
/// clause genes `a, b, c` in blocks of three, then the literal genes
/// `r, s, t` in blocks of three.
fn seq_names(n: u32, m: u32) -> GeneNameTable {
    let mut t = GeneNameTable::new();
    let mut bind = |id: u32, role| {
        t.insert(GeneFamily::of(id), role);
    };
    for i in 1..=n {
        bind(i, Role::X(i));
        bind(n + i, Role::Y(i));
    }
    bind(2 * n + 1, Role::Z);
    for j in 1..=m {
        let base = 2 * n + 1 + 3 * (j - 1);
        bind(base + 1, Role::A(j));
        bind(base + 2, Role::B(j));
        bind(base + 3, Role::C(j));
        let base = 2 * n + 3 * m + 1 + 3 * (j - 1);
        bind(base + 1, Role::R(j));
        bind(base + 2, Role::S(j));
        bind(base + 3, Role::T(j));
    }
    t
}

fn genome(names: &GeneNameTable, roles: impl IntoIterator<Item = Role>) -> SeqGenome {
    roles
        .into_iter()
        .map(|r| SignedGene::new(names.gene(r), Orientation::Forward))
        .collect()
}

pub fn reduce_3sat_to_seq_zed(phi: &CnfFormula) -> SeqReduction {
    let n = phi.n_vars();
    let m = phi.n_clauses() as u32;
    let names = seq_names(n, m);
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    for (i, (pos, neg)) in literal_genes(phi).into_iter().enumerate() {
        let i = i as u32 + 1;
        let (x, y) = (Role::X(i), Role::Y(i));
        r1.push(y);
        r1.extend(&pos);
        r1.push(x);
        r1.extend(&neg);
        r1.push(y);

        r2.extend(&pos);
        r2.extend([x, y, x]);
        r2.extend(&neg);
    }
    r1.push(Role::Z);
    r2.push(Role::Z);
    for j in 1..=m {
        let (a, b, c) = (Role::A(j), Role::B(j), Role::C(j));
        let (r, s, t) = (Role::R(j), Role::S(j), Role::T(j));
        r1.extend([r, a, b, c, s, a, b, c, t]);
        r2.extend([a, r, b, a, s, c, b, t, c]);
    }
    SeqReduction {
        g1: genome(&names, r1),
        g2: genome(&names, r2),
        names,
    }
}

/// Common exemplar subsequence induced by a satisfying assignment.
///
/// A true variable contributes `p… x y`, a false one `y x q…`. Each clause
/// gadget follows the first taken literal among r, s, t:
/// `a b s c t`, `r b a c t`, or `r a s b c`, where a literal gene already
/// placed in a variable gadget is left out.
pub fn seq_certificate_from_assignment(
    phi: &CnfFormula,
    sigma: &Assignment,
) -> Result<SeqGenome, ZedError> {
    let taken = taken_literals(phi, sigma)?;
    let names = seq_names(phi.n_vars(), phi.n_clauses() as u32);
    let mut out = Vec::new();
    for (i, (pos, neg)) in literal_genes(phi).into_iter().enumerate() {
        let i = i as u32 + 1;
        if sigma.value(i) {
            out.extend(pos);
            out.extend([Role::X(i), Role::Y(i)]);
        } else {
            out.extend([Role::Y(i), Role::X(i)]);
            out.extend(neg);
        }
    }
    out.push(Role::Z);
    for j in 1..=phi.n_clauses() as u32 {
        let (a, b, c) = (Role::A(j), Role::B(j), Role::C(j));
        let (r, s, t) = (Role::R(j), Role::S(j), Role::T(j));
        let pattern = match clause_case(j, &taken) {
            ClauseCase::R => [a, b, s, c, t],
            ClauseCase::S => [r, b, a, c, t],
            ClauseCase::T => [r, a, s, b, c],
        };
        out.extend(pattern.into_iter().filter(|role| !taken.contains(role)));
    }
    Ok(genome(&names, out))
}

/// Reads the assignment back off a certificate: `v_i` is true iff `x_i`
/// comes before `y_i`.
pub fn assignment_from_seq_certificate(
    phi: &CnfFormula,
    cert: &SeqGenome,
) -> Result<Assignment, ZedError> {
    let red = reduce_3sat_to_seq_zed(phi);
    check_seq_certificate(&red.g1, &red.g2, cert)
        .map_err(|why| ZedError::precondition(format!("certificate does not verify: {why}")))?;
    let position = |family: GeneFamily| {
        cert.genes()
            .iter()
            .position(|g| g.family == family)
            .expect("verified certificate holds every family")
    };
    let values = (1..=phi.n_vars())
        .map(|i| position(red.names.gene(Role::X(i))) < position(red.names.gene(Role::Y(i))))
        .collect();
    Ok(Assignment::new(values))
}
