use std::fmt;

use crate::error::ZedError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// One-based variable index.
    pub variable: u32,
    pub positive: bool,
}

impl Literal {
    pub fn pos(variable: u32) -> Self {
        Literal {
            variable,
            positive: true,
        }
    }

    pub fn neg(variable: u32) -> Self {
        Literal {
            variable,
            positive: false,
        }
    }

    /// DIMACS form: `v` or `-v`.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        let variable = u32::try_from(value.unsigned_abs())
            .ok()
            .filter(|&v| v > 0)?;
        Some(Literal {
            variable,
            positive: value > 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = i64::from(self.variable);
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn eval(self, assignment: &Assignment) -> bool {
        assignment.value(self.variable) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "v{}", self.variable)
        } else {
            write!(f, "¬v{}", self.variable)
        }
    }
}

pub type Clause = [Literal; 3];

/// A 3-CNF formula over variables `1..=n_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(n_vars: u32, clauses: Vec<Clause>) -> Result<Self, ZedError> {
        for clause in &clauses {
            for lit in clause {
                if lit.variable == 0 || lit.variable > n_vars {
                    return Err(ZedError::precondition(format!(
                        "literal {lit} is outside variables 1..={n_vars}"
                    )));
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    /// Builds from DIMACS-style triples. Panics on out-of-range literals.
    pub fn from_dimacs(n_vars: u32, clauses: &[[i64; 3]]) -> Self {
        let clauses = clauses
            .iter()
            .map(|c| c.map(|v| Literal::from_dimacs(v).expect("nonzero literal")))
            .collect();
        CnfFormula::new(n_vars, clauses).expect("literals in range")
    }

    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn n_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// True iff no clause mentions a variable twice.
    pub fn distinct_vars_per_clause(&self) -> bool {
        self.clauses.iter().all(|[a, b, c]| {
            a.variable != b.variable && a.variable != c.variable && b.variable != c.variable
        })
    }
}

/// A total truth assignment; `values[v - 1]` is the value of variable `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn value(&self, variable: u32) -> bool {
        self.values[variable as usize - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let var = i as i64 + 1;
            write!(f, "{}", if v { var } else { -var })?;
        }
        Ok(())
    }
}

pub fn eval_assignment(phi: &CnfFormula, sigma: &Assignment) -> bool {
    phi.clauses()
        .iter()
        .all(|clause| clause.iter().any(|lit| lit.eval(sigma)))
}

pub const DEFAULT_SAT_CAP: u32 = 24;

pub fn brute_force_sat(phi: &CnfFormula) -> Result<Option<Assignment>, ZedError> {
    brute_force_sat_with_cap(phi, DEFAULT_SAT_CAP)
}

/// Tries all 2^n assignments, counting up from all-false with variable 1 as
/// the lowest bit, and returns the first satisfying one.
pub fn brute_force_sat_with_cap(
    phi: &CnfFormula,
    cap: u32,
) -> Result<Option<Assignment>, ZedError> {
    let n = phi.n_vars();
    let cap = cap.min(63);
    if n > cap {
        return Err(ZedError::CapExceeded {
            what: "number of variables",
            actual: n as usize,
            cap: cap as usize,
        });
    }
    let found = (0u64..1 << n).find(|&mask| {
        phi.clauses().iter().all(|clause| {
            clause
                .iter()
                .any(|lit| (mask >> (lit.variable - 1) & 1 == 1) == lit.positive)
        })
    });
    Ok(found.map(|mask| Assignment::new((0..n).map(|v| mask >> v & 1 == 1).collect())))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_formula() -> CnfFormula {
        CnfFormula::from_dimacs(4, &[[1, -2, -3], [-1, 3, 4]])
    }

    #[test]
    fn eval_examples() {
        let phi = example_formula();
        assert!(eval_assignment(
            &phi,
            &Assignment::new(vec![true, false, false, true])
        ));
        let x = CnfFormula::from_dimacs(1, &[[1, 1, 1]]);
        assert!(!eval_assignment(&x, &Assignment::new(vec![false])));
        let empty = CnfFormula::from_dimacs(2, &[]);
        assert!(eval_assignment(&empty, &Assignment::new(vec![false, true])));
    }

    #[test]
    fn brute_force_examples() {
        let phi = example_formula();
        let sigma = brute_force_sat(&phi).unwrap().unwrap();
        assert!(eval_assignment(&phi, &sigma));
        // all-false falsifies neither clause: -2 and -1 are true
        assert_eq!(sigma, Assignment::new(vec![false; 4]));

        let contra = CnfFormula::from_dimacs(1, &[[1, 1, 1], [-1, -1, -1]]);
        assert_eq!(brute_force_sat(&contra).unwrap(), None);

        let mut all = Vec::new();
        for mask in 0..8 {
            let lit = |v: i64| if mask >> (v - 1) & 1 == 1 { v } else { -v };
            all.push([lit(1), lit(2), lit(3)]);
        }
        assert_eq!(
            brute_force_sat(&CnfFormula::from_dimacs(3, &all)).unwrap(),
            None
        );
    }

    #[test]
    fn cap_and_validation() {
        let big = CnfFormula::from_dimacs(30, &[]);
        assert!(brute_force_sat(&big).is_err());
        assert!(
            CnfFormula::new(2, vec![[Literal::pos(1), Literal::pos(2), Literal::pos(3)]]).is_err()
        );
        assert!(example_formula().distinct_vars_per_clause());
        assert!(!CnfFormula::from_dimacs(2, &[[1, -1, 2]]).distinct_vars_per_clause());
    }
}
