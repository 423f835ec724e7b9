//! 3-CNF formulas, a brute-force SAT oracle, and the gadget reductions from
//! 3SAT to both zero-exemplar-distance variants, with converters between
//! satisfying assignments and common reduced genomes in each direction.

mod cnf;
mod names;
mod reduce_seq;
mod reduce_set;

pub use cnf::{
    brute_force_sat, brute_force_sat_with_cap, eval_assignment, Assignment, Clause, CnfFormula,
    Literal, DEFAULT_SAT_CAP,
};
pub use names::{GeneNameTable, Role, RoleParseError};
pub use reduce_seq::{
    assignment_from_seq_certificate, reduce_3sat_to_seq_zed, seq_certificate_from_assignment,
    SeqReduction,
};
pub use reduce_set::{
    assignment_from_set_certificate, reduce_3sat_to_set_zed, set_certificate_from_assignment,
    SetReduction,
};

use std::collections::HashSet;

use crate::error::ZedError;

/// Literal genes of each variable: `(positive, negative)`, each ordered by
/// clause index and then by position in the clause.
pub(crate) fn literal_genes(phi: &CnfFormula) -> Vec<(Vec<Role>, Vec<Role>)> {
    let mut out = vec![(Vec::new(), Vec::new()); phi.n_vars() as usize];
    for (j, clause) in phi.clauses().iter().enumerate() {
        for (pos, lit) in clause.iter().enumerate() {
            let role = Role::literal(j as u32 + 1, pos);
            let entry = &mut out[lit.variable as usize - 1];
            if lit.positive {
                entry.0.push(role);
            } else {
                entry.1.push(role);
            }
        }
    }
    out
}

/// Literal genes placed in variable gadgets under `sigma`: the positive ones
/// of true variables and the negative ones of false variables.
pub(crate) fn taken_literals(
    phi: &CnfFormula,
    sigma: &Assignment,
) -> Result<HashSet<Role>, ZedError> {
    if sigma.len() != phi.n_vars() as usize {
        return Err(ZedError::precondition(format!(
            "assignment has {} values for {} variables",
            sigma.len(),
            phi.n_vars()
        )));
    }
    if !eval_assignment(phi, sigma) {
        return Err(ZedError::precondition(
            "assignment does not satisfy the formula",
        ));
    }
    let mut taken = HashSet::new();
    for (i, (pos, neg)) in literal_genes(phi).into_iter().enumerate() {
        taken.extend(if sigma.value(i as u32 + 1) { pos } else { neg });
    }
    Ok(taken)
}

/// Which literal of clause `j` drives its gadget: the first of r, s, t that
/// is already taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ClauseCase {
    R,
    S,
    T,
}

pub(crate) fn clause_case(j: u32, taken: &HashSet<Role>) -> ClauseCase {
    if taken.contains(&Role::R(j)) {
        ClauseCase::R
    } else if taken.contains(&Role::S(j)) {
        ClauseCase::S
    } else {
        debug_assert!(
            taken.contains(&Role::T(j)),
            "clause {j} has no taken literal"
        );
        ClauseCase::T
    }
}
