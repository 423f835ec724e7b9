//! Exact zero-exemplar-distance decision for arbitrary occurrence counts.
//!
//! Dynamic programming over subsets of families. A state is a subset `U`
//! together with a pair `(i, j)` of consumed prefix lengths such that some
//! arrangement of `U`, one signed occurrence per family, is a common
//! subsequence of `g1[..i]` and `g2[..j]`. Extending `U` by a family takes
//! the earliest next match of one of its signed forms in both genomes. Only
//! the Pareto-minimal pairs are kept per subset, since a smaller pair leaves
//! every continuation of a larger one available.

use rustc_hash::FxHashMap;

use crate::error::ZedError;
use crate::model::{check_same_universe, GeneFamily, Genome, Orientation, SeqGenome, SignedGene};

use super::SeqDecision;

/// Default bound on the number of distinct families.
pub const DEFAULT_FAMILY_CAP: usize = 25;

const HARD_FAMILY_LIMIT: usize = 63;
const NONE: u32 = u32::MAX;

#[derive(Clone, Copy)]
struct Node {
    i: u32,
    j: u32,
    pred: u32,
    gene: u32,
}

struct Encoded {
    families: Vec<GeneFamily>,
    seq1: Vec<u32>,
    seq2: Vec<u32>,
}

impl Encoded {
    fn new(g1: &SeqGenome, g2: &SeqGenome) -> Self {
        let families: Vec<GeneFamily> = g1.families().into_iter().collect();
        let index = |g: &SignedGene| -> u32 {
            let f = families.binary_search(&g.family).expect("shared universe") as u32;
            2 * f + u32::from(g.orientation == Orientation::Reverse)
        };
        Encoded {
            seq1: g1.genes().iter().map(index).collect(),
            seq2: g2.genes().iter().map(index).collect(),
            families,
        }
    }

    fn decode(&self, gene: u32) -> SignedGene {
        let orientation = if gene % 2 == 1 {
            Orientation::Reverse
        } else {
            Orientation::Forward
        };
        SignedGene::new(self.families[gene as usize / 2], orientation)
    }
}

/// `table[i * width + s]` is the first position `>= i` holding signed gene `s`.
fn next_occurrence(seq: &[u32], width: usize) -> Vec<u32> {
    let mut table = vec![NONE; (seq.len() + 1) * width];
    for i in (0..seq.len()).rev() {
        let (head, tail) = table.split_at_mut((i + 1) * width);
        head[i * width..].copy_from_slice(&tail[..width]);
        head[i * width + seq[i] as usize] = i as u32;
    }
    table
}

/// Last position of each signed gene, or `None`.
fn last_occurrence(seq: &[u32], width: usize) -> Vec<Option<u32>> {
    let mut last = vec![None; width];
    for (p, &s) in seq.iter().enumerate() {
        last[s as usize] = Some(p as u32);
    }
    last
}

fn insert_pareto(frontier: &mut Vec<Node>, node: Node) {
    if frontier.iter().any(|e| e.i <= node.i && e.j <= node.j) {
        return;
    }
    frontier.retain(|e| !(node.i <= e.i && node.j <= e.j));
    frontier.push(node);
}

pub fn zed_seq_exact(g1: &SeqGenome, g2: &SeqGenome) -> Result<SeqDecision, ZedError> {
    zed_seq_exact_with_cap(g1, g2, DEFAULT_FAMILY_CAP)
}

/// Exact decision with an explicit bound on the number of distinct families.
/// Family-universe mismatches answer no.
pub fn zed_seq_exact_with_cap(
    g1: &SeqGenome,
    g2: &SeqGenome,
    cap: usize,
) -> Result<SeqDecision, ZedError> {
    if check_same_universe(&g1.occurrence_profile(), &g2.occurrence_profile()).is_err() {
        return Ok(SeqDecision::no());
    }
    let enc = Encoded::new(g1, g2);
    let d = enc.families.len();
    let cap = cap.min(HARD_FAMILY_LIMIT);
    if d > cap {
        return Err(ZedError::CapExceeded {
            what: "number of distinct families",
            actual: d,
            cap,
        });
    }
    if d == 0 {
        return Ok(SeqDecision::yes(SeqGenome::default()));
    }

    let width = 2 * d;
    let next1 = next_occurrence(&enc.seq1, width);
    let next2 = next_occurrence(&enc.seq2, width);
    let last1 = last_occurrence(&enc.seq1, width);
    let last2 = last_occurrence(&enc.seq2, width);
    let full: u64 = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };

    // A family is still placeable after consuming (i, j) if one of its signed
    // forms occurs at or after both positions.
    let placeable = |f: usize, i: u32, j: u32| {
        (2 * f..2 * f + 2)
            .any(|s| matches!((last1[s], last2[s]), (Some(p), Some(q)) if p >= i && q >= j))
    };

    let mut layers: Vec<FxHashMap<u64, Vec<Node>>> = Vec::with_capacity(d + 1);
    let mut start = FxHashMap::default();
    start.insert(
        0u64,
        vec![Node {
            i: 0,
            j: 0,
            pred: NONE,
            gene: NONE,
        }],
    );
    layers.push(start);

    for _ in 0..d {
        let mut next: FxHashMap<u64, Vec<Node>> = FxHashMap::default();
        let current = layers.last().expect("nonempty");
        for (&mask, nodes) in current {
            for (idx, node) in nodes.iter().enumerate() {
                for f in 0..d {
                    if mask >> f & 1 == 1 {
                        continue;
                    }
                    let grown = mask | 1 << f;
                    for s in 2 * f..2 * f + 2 {
                        let p = next1[node.i as usize * width + s];
                        let q = next2[node.j as usize * width + s];
                        if p == NONE || q == NONE {
                            continue;
                        }
                        let (ni, nj) = (p + 1, q + 1);
                        let viable = (0..d).all(|h| grown >> h & 1 == 1 || placeable(h, ni, nj));
                        if !viable {
                            continue;
                        }
                        insert_pareto(
                            next.entry(grown).or_default(),
                            Node {
                                i: ni,
                                j: nj,
                                pred: idx as u32,
                                gene: s as u32,
                            },
                        );
                    }
                }
            }
        }
        if next.is_empty() {
            return Ok(SeqDecision::no());
        }
        layers.push(next);
    }

    let Some(end) = layers[d].get(&full).and_then(|nodes| nodes.first()) else {
        return Ok(SeqDecision::no());
    };
    let mut genes = Vec::with_capacity(d);
    let mut mask = full;
    let mut node = *end;
    for level in (1..=d).rev() {
        genes.push(enc.decode(node.gene));
        mask &= !(1u64 << (node.gene / 2));
        node = layers[level - 1][&mask][node.pred as usize];
    }
    genes.reverse();
    Ok(SeqDecision::yes(SeqGenome::new(genes)))
}
