//! 3SAT to zero exemplar distance on set genomes.
//!
//! Per variable `i` with positive literal genes `p…` and negative ones `q…`,
//! G1 holds `{p…, x_i, q…}` and G2 holds `{p…, x_i}`, `{x_i, q…}`. Per
//! clause `j`:
//!
//! ```text
//! G1<e_j>: {a,b} {b,c} {c,a} {a',r} {b',s} {c',t}
//! G2<e_j>: {a,b,c} {a,a',r} {b,b',s} {c,c',t} {a'} {b'} {c'}
//! ```
//!
//! Clauses must not mention a variable twice.

use crate::error::ZedError;
use crate::model::{GeneFamily, SetChromosome, SetGenome};
use crate::set::check_set_certificate;

use super::{
    clause_case, literal_genes, taken_literals, Assignment, ClauseCase, CnfFormula, GeneNameTable,
    Role,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetReduction {
    pub g1: SetGenome,
    pub g2: SetGenome,
    pub names: GeneNameTable,
}

/// Family numbering: `x_i = i`, then `a, b, c, a', b', c'` in blocks of six
/// per clause, then `r, s, t` in blocks of three.
fn set_names(n: u32, m: u32) -> GeneNameTable {
    let mut t = GeneNameTable::new();
    let mut bind = |id: u32, role| {
        t.insert(GeneFamily::of(id), role);
    };
    for i in 1..=n {
        bind(i, Role::X(i));
    }
    for j in 1..=m {
        let base = n + 6 * (j - 1);
        bind(base + 1, Role::A(j));
        bind(base + 2, Role::B(j));
        bind(base + 3, Role::C(j));
        bind(base + 4, Role::APrime(j));
        bind(base + 5, Role::BPrime(j));
        bind(base + 6, Role::CPrime(j));
        let base = n + 6 * m + 3 * (j - 1);
        bind(base + 1, Role::R(j));
        bind(base + 2, Role::S(j));
        bind(base + 3, Role::T(j));
    }
    t
}

fn chromosome<'a>(
    names: &GeneNameTable,
    roles: impl IntoIterator<Item = &'a Role>,
) -> SetChromosome {
    roles.into_iter().map(|&r| names.gene(r)).collect()
}

fn require_distinct(phi: &CnfFormula) -> Result<(), ZedError> {
    if phi.distinct_vars_per_clause() {
        Ok(())
    } else {
        Err(ZedError::precondition(
            "a clause contains two literals of the same variable",
        ))
    }
}

pub fn reduce_3sat_to_set_zed(phi: &CnfFormula) -> Result<SetReduction, ZedError> {
    require_distinct(phi)?;
    let n = phi.n_vars();
    let m = phi.n_clauses() as u32;
    let names = set_names(n, m);
    let mut c1 = Vec::new();
    let mut c2 = Vec::new();
    for (i, (pos, neg)) in literal_genes(phi).into_iter().enumerate() {
        let x = Role::X(i as u32 + 1);
        c1.push(chromosome(&names, pos.iter().chain([&x]).chain(&neg)));
        c2.push(chromosome(&names, pos.iter().chain([&x])));
        c2.push(chromosome(&names, [&x].into_iter().chain(&neg)));
    }
    for j in 1..=m {
        let (a, b, c) = (Role::A(j), Role::B(j), Role::C(j));
        let (a2, b2, c2_) = (Role::APrime(j), Role::BPrime(j), Role::CPrime(j));
        let (r, s, t) = (Role::R(j), Role::S(j), Role::T(j));
        for set in [&[a, b][..], &[b, c], &[c, a], &[a2, r], &[b2, s], &[c2_, t]] {
            c1.push(chromosome(&names, set));
        }
        for set in [
            &[a, b, c][..],
            &[a, a2, r],
            &[b, b2, s],
            &[c, c2_, t],
            &[a2],
            &[b2],
            &[c2_],
        ] {
            c2.push(chromosome(&names, set));
        }
    }
    Ok(SetReduction {
        g1: SetGenome::new(c1),
        g2: SetGenome::new(c2),
        names,
    })
}

/// Common reduced genome induced by a satisfying assignment. A true variable
/// contributes `{p…, x}`, a false one `{x, q…}`; each clause follows the
/// first taken literal among r, s, t, leaving out literal genes already
/// placed with a variable.
pub fn set_certificate_from_assignment(
    phi: &CnfFormula,
    sigma: &Assignment,
) -> Result<SetGenome, ZedError> {
    require_distinct(phi)?;
    let taken = taken_literals(phi, sigma)?;
    let names = set_names(phi.n_vars(), phi.n_clauses() as u32);
    let mut blocks = Vec::new();
    for (i, (pos, neg)) in literal_genes(phi).into_iter().enumerate() {
        let x = Role::X(i as u32 + 1);
        blocks.push(if sigma.value(i as u32 + 1) {
            chromosome(&names, pos.iter().chain([&x]))
        } else {
            chromosome(&names, [&x].into_iter().chain(&neg))
        });
    }
    for j in 1..=phi.n_clauses() as u32 {
        let (a, b, c) = (Role::A(j), Role::B(j), Role::C(j));
        let (a2, b2, c2) = (Role::APrime(j), Role::BPrime(j), Role::CPrime(j));
        let (r, s, t) = (Role::R(j), Role::S(j), Role::T(j));
        let sets: [Vec<Role>; 5] = match clause_case(j, &taken) {
            ClauseCase::R => [vec![a], vec![b, c], vec![a2], vec![b2, s], vec![c2, t]],
            ClauseCase::S => [vec![b], vec![c, a], vec![a2, r], vec![b2], vec![c2, t]],
            ClauseCase::T => [vec![c], vec![a, b], vec![a2, r], vec![b2, s], vec![c2]],
        };
        for set in sets {
            blocks.push(chromosome(
                &names,
                set.iter().filter(|role| !taken.contains(role)),
            ));
        }
    }
    Ok(SetGenome::new(blocks))
}

/// Reads the assignment back off a certificate: `v_i` is true iff the block
/// holding `x_i` also holds a literal gene of a positive literal of `v_i`.
pub fn assignment_from_set_certificate(
    phi: &CnfFormula,
    cert: &SetGenome,
) -> Result<Assignment, ZedError> {
    let red = reduce_3sat_to_set_zed(phi)?;
    check_set_certificate(&red.g1, &red.g2, cert)
        .map_err(|why| ZedError::precondition(format!("certificate does not verify: {why}")))?;
    let values = literal_genes(phi)
        .into_iter()
        .enumerate()
        .map(|(i, (pos, _))| {
            let x = red.names.gene(Role::X(i as u32 + 1));
            let block = cert
                .chromosomes()
                .iter()
                .find(|c| c.contains(x))
                .expect("verified certificate holds every family");
            pos.iter().any(|&r| block.contains(red.names.gene(r)))
        })
        .collect();
    Ok(Assignment::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Genome;
    use crate::sat::eval_assignment;
    use crate::set::verify_set_certificate;

    fn example() -> CnfFormula {
        CnfFormula::from_dimacs(4, &[[1, -2, -3], [-1, 3, 4]])
    }

    fn roles(g: &SetGenome, names: &GeneNameTable) -> Vec<Vec<String>> {
        g.chromosomes()
            .iter()
            .map(|c| {
                let mut v: Vec<String> = c.members().iter().map(|&f| names.name(f)).collect();
                v.sort();
                v
            })
            .collect()
    }

    fn listing(text: &str) -> Vec<Vec<String>> {
        text.split('|')
            .map(|block| {
                let mut v: Vec<String> = block.split_whitespace().map(String::from).collect();
                v.sort();
                v
            })
            .collect()
    }

    #[test]
    fn example_listing() {
        let red = reduce_3sat_to_set_zed(&example()).unwrap();
        assert_eq!(
            roles(&red.g1, &red.names),
            listing(
                "r_1 x_1 r_2|x_2 s_1|s_2 x_3 t_1|t_2 x_4|\
                 a_1 b_1|b_1 c_1|c_1 a_1|a'_1 r_1|b'_1 s_1|c'_1 t_1|\
                 a_2 b_2|b_2 c_2|c_2 a_2|a'_2 r_2|b'_2 s_2|c'_2 t_2"
            )
        );
        assert_eq!(
            roles(&red.g2, &red.names),
            listing(
                "r_1 x_1|x_1 r_2|x_2|x_2 s_1|s_2 x_3|x_3 t_1|t_2 x_4|x_4|\
                 a_1 b_1 c_1|a_1 a'_1 r_1|b_1 b'_1 s_1|c_1 c'_1 t_1|a'_1|b'_1|c'_1|\
                 a_2 b_2 c_2|a_2 a'_2 r_2|b_2 b'_2 s_2|c_2 c'_2 t_2|a'_2|b'_2|c'_2"
            )
        );
        assert_eq!(red.g1.total_genes(), 34);
        assert_eq!(red.g2.total_genes(), 44);
    }

    #[test]
    fn example_certificate() {
        let phi = example();
        let sigma = Assignment::new(vec![true, false, false, true]);
        let red = reduce_3sat_to_set_zed(&phi).unwrap();
        let cert = set_certificate_from_assignment(&phi, &sigma).unwrap();
        assert_eq!(
            roles(&cert, &red.names),
            listing(
                "r_1 x_1|x_2 s_1|x_3 t_1|t_2 x_4|a_1|b_1 c_1|a'_1|b'_1|c'_1|\
                 c_2|a_2 b_2|a'_2 r_2|b'_2 s_2|c'_2"
            )
        );
        assert!(verify_set_certificate(&red.g1, &red.g2, &cert));
        assert_eq!(assignment_from_set_certificate(&phi, &cert).unwrap(), sigma);
    }

    #[test]
    fn single_unused_variable() {
        let phi = CnfFormula::from_dimacs(1, &[]);
        let red = reduce_3sat_to_set_zed(&phi).unwrap();
        assert_eq!(red.g1, SetGenome::from_ids(&[&[1]]));
        assert_eq!(red.g2, SetGenome::from_ids(&[&[1], &[1]]));
        let cert = set_certificate_from_assignment(&phi, &Assignment::new(vec![false])).unwrap();
        assert_eq!(cert, SetGenome::from_ids(&[&[1]]));
    }

    #[test]
    fn variable_gadgets_of_one_clause() {
        let phi = CnfFormula::from_dimacs(3, &[[1, -2, 3]]);
        let red = reduce_3sat_to_set_zed(&phi).unwrap();
        let r = roles(&red.g1, &red.names);
        assert_eq!(&r[..3], &listing("r_1 x_1|x_2 s_1|t_1 x_3")[..]);
    }

    #[test]
    fn case_two_subsets() {
        // satisfied only through s_1 = ¬v2
        let phi = CnfFormula::from_dimacs(3, &[[1, -2, 3]]);
        let sigma = Assignment::new(vec![false, false, false]);
        let red = reduce_3sat_to_set_zed(&phi).unwrap();
        let cert = set_certificate_from_assignment(&phi, &sigma).unwrap();
        let r = roles(&cert, &red.names);
        assert_eq!(&r[3..], &listing("b_1|c_1 a_1|a'_1 r_1|b'_1|c'_1 t_1")[..]);
        assert!(verify_set_certificate(&red.g1, &red.g2, &cert));
        assert_eq!(assignment_from_set_certificate(&phi, &cert).unwrap(), sigma);
    }

    #[test]
    fn size_formulas() {
        let phi = CnfFormula::from_dimacs(5, &[[1, 2, 3], [-4, 5, 1], [2, -3, 4]]);
        let red = reduce_3sat_to_set_zed(&phi).unwrap();
        let (n, m) = (5, 3);
        assert_eq!(red.g1.total_genes(), n + 15 * m);
        assert_eq!(red.g2.total_genes(), 2 * n + 18 * m);
        assert_eq!(red.g1.ground_set().len(), n + 9 * m);
        assert_eq!((red.g1.k(), red.g2.k()), (n + 6 * m, 2 * n + 7 * m));
        assert!(red.g1.occurrence_profile().max_count() <= 2);
        assert!(red.g2.occurrence_profile().max_count() <= 2);
    }

    #[test]
    fn rejects_repeated_variables() {
        let phi = CnfFormula::from_dimacs(2, &[[1, 1, 2]]);
        assert!(matches!(
            reduce_3sat_to_set_zed(&phi),
            Err(ZedError::PreconditionViolated(_))
        ));
        let sigma = Assignment::new(vec![true, true]);
        assert!(eval_assignment(&phi, &sigma));
        assert!(set_certificate_from_assignment(&phi, &sigma).is_err());
    }
}
