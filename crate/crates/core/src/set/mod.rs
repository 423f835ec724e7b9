//! Algorithms on unordered multichromosomal genomes.
//!
//! A common reduced genome pairs chromosomes of the two inputs injectively;
//! each of its chromosomes is a subset of `A_i ∩ B_j` for its pair `(i, j)`.
//! Everything here searches over such pairings.

mod exact;
mod fpt;
mod matching;

use std::collections::BTreeSet;
use std::fmt;

pub use exact::{zed_set_exact, zed_set_exact_with, ExactSetConfig};
pub use fpt::{algorithm4_fpt, algorithm4_fpt_with_cap, DEFAULT_K_CAP};

use crate::error::ZedError;
use crate::model::{
    check_same_universe, classify_instance, GeneFamily, Genome, SetChromosome, SetGenome,
};

/// Complete bipartite graph between the chromosomes of two genomes, each
/// edge carrying the reduced chromosome `A_i ∩ B_j`.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    left_size: usize,
    right_size: usize,
    reduced: Vec<SetChromosome>,
}

impl IntersectionGraph {
    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn reduced_chromosome(&self, i: usize, j: usize) -> &SetChromosome {
        &self.reduced[i * self.right_size + j]
    }

    pub fn weight(&self, i: usize, j: usize) -> u64 {
        self.reduced_chromosome(i, j).len() as u64
    }
}

/// Builds every `A_i ∩ B_j` by walking, for each family, the chromosomes
/// that contain it on both sides.
pub fn build_intersection_graph(g1: &SetGenome, g2: &SetGenome) -> IntersectionGraph {
    let (k1, k2) = (g1.k(), g2.k());
    let rows = holders(g1);
    let cols = holders(g2);
    let mut members: Vec<Vec<GeneFamily>> = vec![Vec::new(); k1 * k2];
    for (family, left) in &rows {
        if let Some(right) = cols.get(family) {
            for &i in left {
                for &j in right {
                    members[i * k2 + j].push(*family);
                }
            }
        }
    }
    IntersectionGraph {
        left_size: k1,
        right_size: k2,
        reduced: members.into_iter().map(SetChromosome::from_iter).collect(),
    }
}

/// Family -> indices of the chromosomes containing it, in chromosome order.
pub(crate) fn holders(g: &SetGenome) -> std::collections::BTreeMap<GeneFamily, Vec<usize>> {
    let mut map: std::collections::BTreeMap<GeneFamily, Vec<usize>> = Default::default();
    for (i, c) in g.chromosomes().iter().enumerate() {
        for &f in c.members() {
            map.entry(f).or_default().push(i);
        }
    }
    map
}

/// A set of chromosome pairs, no index used twice on either side.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub total_weight: u64,
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (i, j)) in self.pairs.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// Maximum-weight matching of the intersection graph. The smaller side is
/// padded with zero-weight dummies so the Hungarian method runs on a k×k
/// matrix, k = max(k1, k2).
pub fn max_weight_bipartite_matching(graph: &IntersectionGraph) -> Matching {
    let (k1, k2) = (graph.left_size, graph.right_size);
    let k = k1.max(k2);
    let weights: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i < k1 && j < k2 {
                        graph.weight(i, j) as i64
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let assignment = matching::hungarian_max(&weights);
    let pairs: Vec<(usize, usize)> = assignment
        .into_iter()
        .enumerate()
        .filter(|&(i, j)| i < k1 && j < k2)
        .collect();
    let total_weight = pairs.iter().map(|&(i, j)| graph.weight(i, j)).sum();
    Matching {
        pairs,
        total_weight,
    }
}

/// Result of a set-genome decision procedure. `certificate` is present
/// exactly when the answer is yes; the witnesses say how it was found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetDecision {
    pub certificate: Option<SetGenome>,
    pub witness_matching: Option<Matching>,
    /// Zero-based: chromosome `i` of the padded first genome is paired with
    /// chromosome `permutation[i]` of the padded second genome.
    pub witness_permutation: Option<Vec<usize>>,
}

impl SetDecision {
    pub fn no() -> Self {
        SetDecision::default()
    }

    pub fn is_yes(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Polynomial algorithm for the per-gene special case: a maximum-weight
/// matching of the intersection graph covers every family iff the answer is
/// yes. Runs in O(n² + k³).
pub fn algorithm3_special(g1: &SetGenome, g2: &SetGenome) -> Result<SetDecision, ZedError> {
    let class = match classify_instance(g1, g2) {
        Ok(class) => class,
        Err(ZedError::FamilyMismatch { .. }) => return Ok(SetDecision::no()),
        Err(e) => return Err(e),
    };
    if !class.is_special() {
        return Err(ZedError::precondition(
            "some family occurs at least twice in both genomes",
        ));
    }
    let graph = build_intersection_graph(g1, g2);
    let matching = max_weight_bipartite_matching(&graph);
    if matching.total_weight as usize != g1.ground_set().len() {
        return Ok(SetDecision::no());
    }
    let certificate = matching
        .pairs
        .iter()
        .map(|&(i, j)| graph.reduced_chromosome(i, j).clone())
        .filter(|c| !c.is_empty())
        .collect();
    Ok(SetDecision {
        certificate: Some(SetGenome::new(certificate)),
        witness_matching: Some(matching),
        witness_permutation: None,
    })
}

/// Pads the genome with fewer chromosomes with empty ones so both have
/// `max(k1, k2)`.
pub fn pad_to_equal_k(g1: &SetGenome, g2: &SetGenome) -> (SetGenome, SetGenome) {
    let k = g1.k().max(g2.k());
    (g1.with_padding(k - g1.k()), g2.with_padding(k - g2.k()))
}

/// Why a set certificate was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetCertFailure {
    NotPartition,
    NoEmbeddingInG1,
    NoEmbeddingInG2,
}

impl SetCertFailure {
    pub fn code(self) -> &'static str {
        match self {
            SetCertFailure::NotPartition => "NotPartition",
            SetCertFailure::NoEmbeddingInG1 => "NoEmbeddingInG1",
            SetCertFailure::NoEmbeddingInG2 => "NoEmbeddingInG2",
        }
    }
}

impl fmt::Display for SetCertFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

fn embeds(cert: &SetGenome, host: &SetGenome) -> bool {
    let adj: Vec<Vec<usize>> = cert
        .chromosomes()
        .iter()
        .map(|c| {
            host.chromosomes()
                .iter()
                .enumerate()
                .filter(|(_, h)| c.is_subset(h))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    matching::max_cardinality(&adj, host.k()) == cert.k()
}

/// Checks that `cert` partitions the common ground set into nonempty blocks
/// and that its blocks can be hosted injectively by chromosomes of each input.
pub fn check_set_certificate(
    g1: &SetGenome,
    g2: &SetGenome,
    cert: &SetGenome,
) -> Result<(), SetCertFailure> {
    if check_same_universe(&g1.occurrence_profile(), &g2.occurrence_profile()).is_err() {
        return Err(SetCertFailure::NotPartition);
    }
    let mut seen = BTreeSet::new();
    for c in cert.chromosomes() {
        if c.is_empty() {
            return Err(SetCertFailure::NotPartition);
        }
        for &f in c.members() {
            if !seen.insert(f) {
                return Err(SetCertFailure::NotPartition);
            }
        }
    }
    if &seen != g1.ground_set() {
        return Err(SetCertFailure::NotPartition);
    }
    if !embeds(cert, g1) {
        return Err(SetCertFailure::NoEmbeddingInG1);
    }
    if !embeds(cert, g2) {
        return Err(SetCertFailure::NoEmbeddingInG2);
    }
    Ok(())
}

pub fn verify_set_certificate(g1: &SetGenome, g2: &SetGenome, cert: &SetGenome) -> bool {
    check_set_certificate(g1, g2, cert).is_ok()
}
