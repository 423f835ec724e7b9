//! Backtracking oracle for set genomes.
//!
//! Every family is assigned a covering pair `(i, j)` with the family in
//! `A_i ∩ B_j`; the distinct pairs in use must form a matching. Families
//! are chosen fail-first (fewest consistent pairs left), and a family with
//! no consistent pair left fails the branch immediately. A family that can
//! join a pair already in use is put there without branching: it adds no
//! constraint, so any solution can be rewritten to use that pair.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::error::ZedError;
use crate::model::{check_same_universe, GeneFamily, Genome, SetChromosome, SetGenome};

use super::{holders, Matching, SetDecision};

#[derive(Clone, Debug)]
pub struct ExactSetConfig {
    /// Upper bound on the candidate pairs of any single family.
    pub max_pairs_per_gene: usize,
    /// Wall-clock budget; `None` searches to completion.
    pub timeout: Option<Duration>,
}

impl Default for ExactSetConfig {
    fn default() -> Self {
        ExactSetConfig {
            max_pairs_per_gene: 64,
            timeout: Some(Duration::from_secs(120)),
        }
    }
}

const FREE: u32 = u32::MAX;

struct Search {
    candidates: Vec<Vec<(u32, u32)>>,
    assigned: Vec<Option<(u32, u32)>>,
    row_partner: Vec<u32>,
    col_partner: Vec<u32>,
    row_load: Vec<u32>,
    trail: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    budget: Duration,
}

impl Search {
    fn consistent(&self, (i, j): (u32, u32)) -> bool {
        let (rp, cp) = (self.row_partner[i as usize], self.col_partner[j as usize]);
        rp == j || (rp == FREE && cp == FREE)
    }

    fn established(&self, (i, j): (u32, u32)) -> bool {
        self.row_partner[i as usize] == j
    }

    fn assign(&mut self, gene: usize, (i, j): (u32, u32)) {
        if self.row_load[i as usize] == 0 {
            self.row_partner[i as usize] = j;
            self.col_partner[j as usize] = i;
        }
        self.row_load[i as usize] += 1;
        self.assigned[gene] = Some((i, j));
        self.trail.push(gene);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let gene = self.trail.pop().expect("nonempty trail");
            let (i, j) = self.assigned[gene].take().expect("assigned gene");
            self.row_load[i as usize] -= 1;
            if self.row_load[i as usize] == 0 {
                self.row_partner[i as usize] = FREE;
                self.col_partner[j as usize] = FREE;
            }
        }
    }

    fn solve(&mut self) -> Result<bool, ZedError> {
        self.nodes += 1;
        if self.nodes % 4096 == 1 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(ZedError::Timeout {
                        budget_ms: self.budget.as_millis(),
                    });
                }
            }
        }
        let mark = self.trail.len();

        for gene in 0..self.candidates.len() {
            if self.assigned[gene].is_some() {
                continue;
            }
            let open = self.candidates[gene]
                .iter()
                .copied()
                .find(|&p| self.established(p));
            if let Some(pair) = open {
                self.assign(gene, pair);
            }
        }

        let mut pick: Option<(usize, usize)> = None;
        for gene in 0..self.candidates.len() {
            if self.assigned[gene].is_some() {
                continue;
            }
            let options = self.candidates[gene]
                .iter()
                .filter(|&&p| self.consistent(p))
                .count();
            if options == 0 {
                self.undo_to(mark);
                return Ok(false);
            }
            if pick.is_none_or(|(_, best)| options < best) {
                pick = Some((gene, options));
            }
        }
        let Some((gene, _)) = pick else {
            return Ok(true);
        };

        let options: Vec<(u32, u32)> = self.candidates[gene]
            .iter()
            .copied()
            .filter(|&p| self.consistent(p))
            .collect();
        for pair in options {
            let inner = self.trail.len();
            self.assign(gene, pair);
            if self.solve()? {
                return Ok(true);
            }
            self.undo_to(inner);
        }
        self.undo_to(mark);
        Ok(false)
    }
}

pub fn zed_set_exact(g1: &SetGenome, g2: &SetGenome) -> Result<SetDecision, ZedError> {
    zed_set_exact_with(g1, g2, &ExactSetConfig::default())
}

/// Exact decision for arbitrary occurrence counts. Exceeding the time
/// budget is an error, never a no.
pub fn zed_set_exact_with(
    g1: &SetGenome,
    g2: &SetGenome,
    config: &ExactSetConfig,
) -> Result<SetDecision, ZedError> {
    if check_same_universe(&g1.occurrence_profile(), &g2.occurrence_profile()).is_err() {
        return Ok(SetDecision::no());
    }
    let rows = holders(g1);
    let cols = holders(g2);
    let families: Vec<GeneFamily> = rows.keys().copied().collect();
    let mut candidates = Vec::with_capacity(families.len());
    for f in &families {
        let pairs: Vec<(u32, u32)> = rows[f]
            .iter()
            .flat_map(|&i| cols[f].iter().map(move |&j| (i as u32, j as u32)))
            .collect();
        if pairs.len() > config.max_pairs_per_gene {
            return Err(ZedError::CapExceeded {
                what: "candidate pairs for one family",
                actual: pairs.len(),
                cap: config.max_pairs_per_gene,
            });
        }
        candidates.push(pairs);
    }

    let budget = config.timeout.unwrap_or(Duration::MAX);
    let mut search = Search {
        assigned: vec![None; families.len()],
        candidates,
        row_partner: vec![FREE; g1.k()],
        col_partner: vec![FREE; g2.k()],
        row_load: vec![0; g1.k()],
        trail: Vec::new(),
        nodes: 0,
        deadline: config.timeout.and_then(|t| Instant::now().checked_add(t)),
        budget,
    };
    if !search.solve()? {
        return Ok(SetDecision::no());
    }

    let mut groups: BTreeMap<(u32, u32), Vec<GeneFamily>> = BTreeMap::new();
    for (gene, pair) in search.assigned.iter().enumerate() {
        groups
            .entry(pair.expect("complete assignment"))
            .or_default()
            .push(families[gene]);
    }
    let pairs = groups
        .iter()
        .map(|(&(i, j), _)| (i as usize, j as usize))
        .collect();
    let total_weight = families.len() as u64;
    let blocks = groups.into_values().map(SetChromosome::from_iter).collect();
    Ok(SetDecision {
        certificate: Some(SetGenome::new(blocks)),
        witness_matching: Some(Matching {
            pairs,
            total_weight,
        }),
        witness_permutation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::verify_set_certificate;

    fn g(c: &[&[u32]]) -> SetGenome {
        SetGenome::from_ids(c)
    }

    #[test]
    fn introduction_example() {
        let g1 = g(&[&[1, 2, 3], &[2, 3, 4], &[4, 5]]);
        let g2 = g(&[&[1, 2], &[2, 3, 4], &[3, 4, 5], &[1, 5]]);
        let cert = zed_set_exact(&g1, &g2).unwrap().certificate.unwrap();
        assert!(verify_set_certificate(&g1, &g2, &cert));
    }

    #[test]
    fn pigeonhole_no() {
        assert!(!zed_set_exact(&g(&[&[1, 2]]), &g(&[&[1], &[2]]))
            .unwrap()
            .is_yes());
    }

    #[test]
    fn clause_gadget_alone_is_infeasible() {
        // a b c a' b' c' r s t = 1..9
        let g1 = g(&[&[1, 2], &[2, 3], &[3, 1], &[4, 7], &[5, 8], &[6, 9]]);
        let g2 = g(&[
            &[1, 2, 3],
            &[1, 4, 7],
            &[2, 5, 8],
            &[3, 6, 9],
            &[4],
            &[5],
            &[6],
        ]);
        assert!(!zed_set_exact(&g1, &g2).unwrap().is_yes());
    }

    #[test]
    fn pair_cap() {
        let g1 = g(&[&[1], &[1], &[1]]);
        let cfg = ExactSetConfig {
            max_pairs_per_gene: 4,
            timeout: None,
        };
        assert!(matches!(
            zed_set_exact_with(&g1, &g1, &cfg),
            Err(ZedError::CapExceeded { actual: 9, .. })
        ));
    }

    #[test]
    fn zero_budget_times_out() {
        let x = g(&[&[1, 2]]);
        let cfg = ExactSetConfig {
            max_pairs_per_gene: 64,
            timeout: Some(Duration::ZERO),
        };
        assert!(matches!(
            zed_set_exact_with(&x, &x, &cfg),
            Err(ZedError::Timeout { budget_ms: 0 })
        ));
    }
}
