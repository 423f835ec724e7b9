//! Cross-checks between the fast algorithms, the exact oracles and the
//! reductions on seeded random instances.

use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::generate::{
    random_cnf, random_seq_pair, random_set_pair, rng_from_seed, SeqGenParams, SetGenParams,
};
use crate::model::{verify_seq_certificate, Alphabet, Genome, SeqGenome};
use crate::sat::{
    assignment_from_seq_certificate, assignment_from_set_certificate, brute_force_sat,
    eval_assignment, reduce_3sat_to_seq_zed, reduce_3sat_to_set_zed,
};
use crate::seq::{
    algorithm2_elcs, elcs_exact_oracle, elcs_with_mandatory_weight, is_subsequence, zed_seq_exact,
    zed_seq_special,
};
use crate::set::{algorithm3_special, algorithm4_fpt, verify_set_certificate, zed_set_exact};

/// Deliberately broken variants, used to check that the suites catch bugs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutant {
    /// Exemplar LCS with mandatory weight 1 instead of `min(n, m) + 1`.
    WrongWeight,
}

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub budget: Duration,
    pub seed: u64,
    /// Instances every suite must finish for the run to count.
    pub min_per_suite: usize,
    /// Instances per suite after which the run stops early.
    pub target_per_suite: usize,
    pub mutant: Option<Mutant>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            budget: Duration::from_secs(60),
            seed: 0x5eed,
            min_per_suite: 10,
            target_per_suite: 60,
            mutant: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelftestOutcome {
    Passed,
    Failed {
        suite: &'static str,
    },
    /// The budget ran out before every suite reached its minimum.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub suites: Vec<SuiteReport>,
    pub outcome: SelftestOutcome,
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            write!(
                f,
                "{:<16} passed {:>4}  failed {:>4}",
                s.name, s.passed, s.failed
            )?;
            if let Some(why) = &s.first_failure {
                write!(f, "  first failure: {why}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type Check = fn(&mut ChaCha8Rng, Option<Mutant>) -> Result<(), String>;

const SUITES: [(&str, Check); 6] = [
    ("seq-special", seq_special),
    ("elcs-special", elcs_special),
    ("set-special", set_special),
    ("set-general", set_general),
    ("sat-seq", sat_seq),
    ("sat-set", sat_set),
];

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn seq_special(rng: &mut ChaCha8Rng, _: Option<Mutant>) -> Result<(), String> {
    let p = SeqGenParams {
        families: rng.random_range(1..=7),
        max_copies: 3,
        special: true,
        signs: rng.random_bool(0.3),
        planted: rng.random_bool(0.5),
    };
    let (g1, g2) = random_seq_pair(rng, &p);
    let fast = zed_seq_special(&g1, &g2).map_err(err)?;
    let exact = zed_seq_exact(&g1, &g2).map_err(err)?;
    if fast.is_yes() != exact.is_yes() {
        return Err(format!(
            "special {} vs exact {} on {g1} / {g2}",
            fast.is_yes(),
            exact.is_yes()
        ));
    }
    for cert in fast.certificate.iter().chain(&exact.certificate) {
        if !verify_seq_certificate(&g1, &g2, cert) {
            return Err(format!("certificate {cert} fails on {g1} / {g2}"));
        }
    }
    Ok(())
}

fn elcs_special(rng: &mut ChaCha8Rng, mutant: Option<Mutant>) -> Result<(), String> {
    let p = SeqGenParams {
        families: rng.random_range(2..=7),
        max_copies: 3,
        special: true,
        signs: false,
        planted: rng.random_bool(0.5),
    };
    let (a, b) = random_seq_pair(rng, &p);
    let mandatory: Vec<_> = a
        .families()
        .into_iter()
        .filter(|_| rng.random_bool(0.5))
        .collect();
    let alphabet = Alphabet::from_mandatory(mandatory, &a, &b);
    let fast = match mutant {
        Some(Mutant::WrongWeight) => elcs_with_mandatory_weight(&a, &b, &alphabet, 1),
        None => algorithm2_elcs(&a, &b, &alphabet),
    }
    .map_err(err)?;
    let oracle = elcs_exact_oracle(&a, &b, &alphabet).map_err(err)?;
    let len = |s: &Option<SeqGenome>| s.as_ref().map(SeqGenome::len);
    if len(&fast) != len(&oracle) {
        return Err(format!(
            "ELCS length {:?} vs oracle {:?} on {a} / {b}",
            len(&fast),
            len(&oracle)
        ));
    }
    if let Some(c) = &fast {
        let prof = c.occurrence_profile();
        let exemplar = alphabet.mandatory().iter().all(|&f| prof.count(f) == 1);
        if !exemplar || !is_subsequence(c, &a) || !is_subsequence(c, &b) {
            return Err(format!("ELCS {c} is not a valid answer on {a} / {b}"));
        }
    }
    Ok(())
}

fn set_params(rng: &mut ChaCha8Rng, special: bool) -> SetGenParams {
    SetGenParams {
        ground: rng.random_range(1..=10),
        k1: rng.random_range(1..=5),
        k2: rng.random_range(1..=5),
        max_copies: 3,
        special,
        planted: rng.random_bool(0.5),
    }
}

fn set_special(rng: &mut ChaCha8Rng, _: Option<Mutant>) -> Result<(), String> {
    let p = set_params(rng, true);
    let (g1, g2) = random_set_pair(rng, &p);
    let a3 = algorithm3_special(&g1, &g2).map_err(err)?;
    let a4 = algorithm4_fpt(&g1, &g2).map_err(err)?;
    let ex = zed_set_exact(&g1, &g2).map_err(err)?;
    if a3.is_yes() != a4.is_yes() || a4.is_yes() != ex.is_yes() {
        return Err(format!(
            "matching {} / fpt {} / exact {} on {g1} / {g2}",
            a3.is_yes(),
            a4.is_yes(),
            ex.is_yes()
        ));
    }
    for cert in [&a3, &a4, &ex]
        .into_iter()
        .filter_map(|d| d.certificate.as_ref())
    {
        if !verify_set_certificate(&g1, &g2, cert) {
            return Err(format!("certificate {cert} fails"));
        }
    }
    Ok(())
}

fn set_general(rng: &mut ChaCha8Rng, _: Option<Mutant>) -> Result<(), String> {
    let p = set_params(rng, false);
    let (g1, g2) = random_set_pair(rng, &p);
    let a4 = algorithm4_fpt(&g1, &g2).map_err(err)?;
    let ex = zed_set_exact(&g1, &g2).map_err(err)?;
    if a4.is_yes() != ex.is_yes() {
        return Err(format!(
            "fpt {} / exact {} on {g1} / {g2}",
            a4.is_yes(),
            ex.is_yes()
        ));
    }
    Ok(())
}

fn sat_seq(rng: &mut ChaCha8Rng, _: Option<Mutant>) -> Result<(), String> {
    let (n, m) = (rng.random_range(1..=3), rng.random_range(0..=2));
    let phi = random_cnf(rng, n, m, false);
    let sat = brute_force_sat(&phi).map_err(err)?;
    let red = reduce_3sat_to_seq_zed(&phi);
    let zed = zed_seq_exact(&red.g1, &red.g2).map_err(err)?;
    if sat.is_some() != zed.is_yes() {
        return Err(format!(
            "SAT {} but ZED {} on {:?}",
            sat.is_some(),
            zed.is_yes(),
            phi.clauses()
        ));
    }
    if let Some(cert) = &zed.certificate {
        let sigma = assignment_from_seq_certificate(&phi, cert).map_err(err)?;
        if !eval_assignment(&phi, &sigma) {
            return Err(format!(
                "extracted assignment {sigma} falsifies the formula"
            ));
        }
    }
    Ok(())
}

fn sat_set(rng: &mut ChaCha8Rng, _: Option<Mutant>) -> Result<(), String> {
    let (n, m) = (rng.random_range(3..=4), rng.random_range(0..=2));
    let phi = random_cnf(rng, n, m, true);
    let sat = brute_force_sat(&phi).map_err(err)?;
    let red = reduce_3sat_to_set_zed(&phi).map_err(err)?;
    let zed = zed_set_exact(&red.g1, &red.g2).map_err(err)?;
    if sat.is_some() != zed.is_yes() {
        return Err(format!(
            "SAT {} but ZED {} on {:?}",
            sat.is_some(),
            zed.is_yes(),
            phi.clauses()
        ));
    }
    if let Some(cert) = &zed.certificate {
        let sigma = assignment_from_set_certificate(&phi, cert).map_err(err)?;
        if !eval_assignment(&phi, &sigma) {
            return Err(format!(
                "extracted assignment {sigma} falsifies the formula"
            ));
        }
    }
    Ok(())
}

/// Runs the suites round-robin, one instance at a time, until every suite
/// reaches its target or the budget runs out. Stops at the first failure.
pub fn run_selftest(config: &SelftestConfig) -> SelftestReport {
    let start = Instant::now();
    let mut rngs: Vec<ChaCha8Rng> = (0..SUITES.len())
        .map(|i| rng_from_seed(config.seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)))
        .collect();
    let mut suites: Vec<SuiteReport> = SUITES
        .iter()
        .map(|&(name, _)| SuiteReport {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
        })
        .collect();

    for _ in 0..config.target_per_suite {
        for (i, &(name, check)) in SUITES.iter().enumerate() {
            if start.elapsed() >= config.budget {
                let covered = suites.iter().all(|s| s.passed >= config.min_per_suite);
                let outcome = if covered {
                    SelftestOutcome::Passed
                } else {
                    SelftestOutcome::BudgetExhausted
                };
                return SelftestReport { suites, outcome };
            }
            match check(&mut rngs[i], config.mutant) {
                Ok(()) => suites[i].passed += 1,
                Err(why) => {
                    suites[i].failed += 1;
                    suites[i].first_failure = Some(why);
                    return SelftestReport {
                        suites,
                        outcome: SelftestOutcome::Failed { suite: name },
                    };
                }
            }
        }
    }
    SelftestReport {
        suites,
        outcome: SelftestOutcome::Passed,
    }
}
