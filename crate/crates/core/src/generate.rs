//! Seeded random instances. All generators draw from ChaCha8 seeded with a
//! `u64`, so a seed fixes the output on every platform.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::{GeneFamily, Orientation, SeqGenome, SetChromosome, SetGenome, SignedGene};
use crate::sat::{CnfFormula, Literal};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` clauses over `n` variables. With `distinct`, each clause uses three
/// different variables, which needs `n >= 3` when `m > 0`.
pub fn random_cnf<R: Rng>(rng: &mut R, n: u32, m: usize, distinct: bool) -> CnfFormula {
    assert!(n >= 1, "need at least one variable");
    assert!(
        !distinct || m == 0 || n >= 3,
        "distinct clauses need three variables"
    );
    let clauses = (0..m)
        .map(|_| {
            let vars: Vec<u32> = if distinct {
                rand::seq::index::sample(rng, n as usize, 3)
                    .into_iter()
                    .map(|v| v as u32 + 1)
                    .collect()
            } else {
                (0..3).map(|_| rng.random_range(1..=n)).collect()
            };
            let lit = |v: u32, r: &mut R| Literal {
                variable: v,
                positive: r.random_bool(0.5),
            };
            [lit(vars[0], rng), lit(vars[1], rng), lit(vars[2], rng)]
        })
        .collect();
    CnfFormula::new(n, clauses).expect("variables drawn in range")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeqGenParams {
    pub families: u32,
    /// Upper bound on copies of one family in one genome.
    pub max_copies: usize,
    /// Every family occurs exactly once in at least one genome.
    pub special: bool,
    /// Occurrences are reversed with probability 1/2; otherwise all forward.
    pub signs: bool,
    /// Both genomes are built around a hidden common exemplar genome, so the
    /// instance is a YES instance.
    pub planted: bool,
}

impl Default for SeqGenParams {
    fn default() -> Self {
        SeqGenParams {
            families: 6,
            max_copies: 2,
            special: false,
            signs: false,
            planted: false,
        }
    }
}

/// Copy counts per family for the two genomes; every family gets at least
/// one copy on each side.
fn copy_counts<R: Rng>(
    rng: &mut R,
    families: u32,
    max_copies: usize,
    special: bool,
) -> Vec<(usize, usize)> {
    let max = max_copies.max(1);
    (0..families)
        .map(|_| {
            let mut c = (rng.random_range(1..=max), rng.random_range(1..=max));
            if special && c.0 > 1 && c.1 > 1 {
                if rng.random_bool(0.5) {
                    c.0 = 1;
                } else {
                    c.1 = 1;
                }
            }
            c
        })
        .collect()
}

fn orientation<R: Rng>(rng: &mut R, signs: bool) -> Orientation {
    if signs && rng.random_bool(0.5) {
        Orientation::Reverse
    } else {
        Orientation::Forward
    }
}

/// Inserts `extra` copies of each family into `base` at random positions.
fn with_extra_copies<R: Rng>(
    rng: &mut R,
    base: &[SignedGene],
    extra: &[(GeneFamily, usize)],
    signs: bool,
) -> SeqGenome {
    let mut genes = base.to_vec();
    for &(f, k) in extra {
        for _ in 0..k {
            let at = rng.random_range(0..=genes.len());
            genes.insert(at, SignedGene::new(f, orientation(rng, signs)));
        }
    }
    SeqGenome::new(genes)
}

pub fn random_seq_pair<R: Rng>(rng: &mut R, p: &SeqGenParams) -> (SeqGenome, SeqGenome) {
    let counts = copy_counts(rng, p.families, p.max_copies, p.special);
    let families: Vec<GeneFamily> = (1..=p.families).map(GeneFamily::of).collect();
    if p.planted {
        let mut hidden: Vec<SignedGene> = families
            .iter()
            .map(|&f| SignedGene::new(f, orientation(rng, p.signs)))
            .collect();
        hidden.shuffle(rng);
        let extra1: Vec<_> = families
            .iter()
            .zip(&counts)
            .map(|(&f, c)| (f, c.0 - 1))
            .collect();
        let extra2: Vec<_> = families
            .iter()
            .zip(&counts)
            .map(|(&f, c)| (f, c.1 - 1))
            .collect();
        let g1 = with_extra_copies(rng, &hidden, &extra1, p.signs);
        let g2 = with_extra_copies(rng, &hidden, &extra2, p.signs);
        (g1, g2)
    } else {
        let side = |pick: fn(&(usize, usize)) -> usize, rng: &mut R| {
            let mut genes: Vec<SignedGene> = families
                .iter()
                .zip(&counts)
                .flat_map(|(&f, c)| std::iter::repeat_n(f, pick(c)))
                .map(|f| SignedGene::new(f, orientation(rng, p.signs)))
                .collect();
            genes.shuffle(rng);
            SeqGenome::new(genes)
        };
        let g1 = side(|c| c.0, rng);
        let g2 = side(|c| c.1, rng);
        (g1, g2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetGenParams {
    /// Size of the ground set `S = {1..=ground}`.
    pub ground: u32,
    pub k1: usize,
    pub k2: usize,
    pub max_copies: usize,
    pub special: bool,
    /// Both genomes embed a hidden partition of `S`, so the instance is a YES
    /// instance.
    pub planted: bool,
}

impl Default for SetGenParams {
    fn default() -> Self {
        SetGenParams {
            ground: 8,
            k1: 4,
            k2: 4,
            max_copies: 2,
            special: false,
            planted: false,
        }
    }
}

/// Puts each family into `count` distinct chromosomes out of `k`, always
/// including `home` when given.
fn scatter<R: Rng>(
    rng: &mut R,
    chromosomes: &mut [Vec<u32>],
    family: u32,
    count: usize,
    home: Option<usize>,
) {
    let k = chromosomes.len();
    let mut chosen: Vec<usize> = home.into_iter().collect();
    let others: Vec<usize> = rand::seq::index::sample(rng, k, count.min(k))
        .into_iter()
        .filter(|c| Some(*c) != home)
        .collect();
    chosen.extend(others);
    chosen.truncate(count.clamp(1, k));
    for c in chosen {
        chromosomes[c].push(family);
    }
}

pub fn random_set_pair<R: Rng>(rng: &mut R, p: &SetGenParams) -> (SetGenome, SetGenome) {
    assert!(p.k1 >= 1 && p.k2 >= 1, "each genome needs a chromosome");
    let counts = copy_counts(rng, p.ground, p.max_copies, p.special);
    let mut c1 = vec![Vec::new(); p.k1];
    let mut c2 = vec![Vec::new(); p.k2];
    // home chromosomes of each family on both sides, if planted
    let homes: Vec<(Option<usize>, Option<usize>)> = if p.planted {
        let blocks = p.k1.min(p.k2);
        let mut to1: Vec<usize> = (0..p.k1).collect();
        let mut to2: Vec<usize> = (0..p.k2).collect();
        to1.shuffle(rng);
        to2.shuffle(rng);
        (0..p.ground)
            .map(|_| {
                let b = rng.random_range(0..blocks);
                (Some(to1[b]), Some(to2[b]))
            })
            .collect()
    } else {
        vec![(None, None); p.ground as usize]
    };
    for (i, (&(n1, n2), &(h1, h2))) in counts.iter().zip(&homes).enumerate() {
        let f = i as u32 + 1;
        scatter(rng, &mut c1, f, n1, h1);
        scatter(rng, &mut c2, f, n2, h2);
    }
    let build = |c: Vec<Vec<u32>>| {
        SetGenome::new(c.iter().map(|ids| SetChromosome::from_ids(ids)).collect())
    };
    (build(c1), build(c2))
}
