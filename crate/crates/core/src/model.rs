//! Genes, genomes, and the instance classifier shared by every solver.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::num::NonZeroU32;

use crate::error::ZedError;

/// Unsigned gene identity. Zero is reserved as a terminator in the text
/// formats, so a family id is always at least one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneFamily(NonZeroU32);

impl GeneFamily {
    pub fn new(id: u32) -> Option<Self> {
        NonZeroU32::new(id).map(GeneFamily)
    }

    /// Panics on zero. Meant for literals in tests and constructions where
    /// the id is known to be positive.
    pub fn of(id: u32) -> Self {
        Self::new(id).expect("gene family ids are positive")
    }

    pub fn id(self) -> u32 {
        self.0.get()
    }
}

impl fmt::Display for GeneFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Forward,
    Reverse,
}

/// A gene occurrence: family plus orientation. Two signed genes match only
/// if both parts are equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedGene {
    pub family: GeneFamily,
    pub orientation: Orientation,
}

impl SignedGene {
    pub fn new(family: GeneFamily, orientation: Orientation) -> Self {
        SignedGene {
            family,
            orientation,
        }
    }

    pub fn forward(id: u32) -> Self {
        Self::new(GeneFamily::of(id), Orientation::Forward)
    }

    /// Builds a gene from its signed-integer form; `None` for zero.
    pub fn from_signed(value: i64) -> Option<Self> {
        let id = u32::try_from(value.unsigned_abs()).ok()?;
        let family = GeneFamily::new(id)?;
        let orientation = if value < 0 {
            Orientation::Reverse
        } else {
            Orientation::Forward
        };
        Some(SignedGene {
            family,
            orientation,
        })
    }

    pub fn to_signed(self) -> i64 {
        let id = i64::from(self.family.id());
        match self.orientation {
            Orientation::Forward => id,
            Orientation::Reverse => -id,
        }
    }
}

impl fmt::Display for SignedGene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation {
            Orientation::Forward => write!(f, "+{}", self.family),
            Orientation::Reverse => write!(f, "-{}", self.family),
        }
    }
}

/// A monochromosomal genome: an ordered sequence of signed genes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SeqGenome {
    genes: Vec<SignedGene>,
}

impl SeqGenome {
    pub fn new(genes: Vec<SignedGene>) -> Self {
        SeqGenome { genes }
    }

    /// Convenience constructor from signed integers. Panics on zero.
    pub fn from_signed(values: &[i64]) -> Self {
        values
            .iter()
            .map(|&v| SignedGene::from_signed(v).expect("nonzero gene"))
            .collect()
    }

    pub fn genes(&self) -> &[SignedGene] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    pub fn families(&self) -> BTreeSet<GeneFamily> {
        self.genes.iter().map(|g| g.family).collect()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.genes.iter().map(|g| g.to_signed()).collect()
    }

    /// Drops every occurrence whose family fails `keep`.
    pub fn retain_families(&self, mut keep: impl FnMut(GeneFamily) -> bool) -> SeqGenome {
        self.genes
            .iter()
            .copied()
            .filter(|g| keep(g.family))
            .collect()
    }
}

impl FromIterator<SignedGene> for SeqGenome {
    fn from_iter<I: IntoIterator<Item = SignedGene>>(iter: I) -> Self {
        SeqGenome::new(iter.into_iter().collect())
    }
}

impl fmt::Display for SeqGenome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.genes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// An unordered chromosome: a set of gene families.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetChromosome {
    members: BTreeSet<GeneFamily>,
}

impl SetChromosome {
    pub fn new(members: BTreeSet<GeneFamily>) -> Self {
        SetChromosome { members }
    }

    pub fn from_ids(ids: &[u32]) -> Self {
        ids.iter().map(|&id| GeneFamily::of(id)).collect()
    }

    pub fn members(&self) -> &BTreeSet<GeneFamily> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, family: GeneFamily) -> bool {
        self.members.contains(&family)
    }

    pub fn intersection(&self, other: &SetChromosome) -> SetChromosome {
        self.members.intersection(&other.members).copied().collect()
    }

    pub fn is_subset(&self, other: &SetChromosome) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl FromIterator<GeneFamily> for SetChromosome {
    fn from_iter<I: IntoIterator<Item = GeneFamily>>(iter: I) -> Self {
        SetChromosome::new(iter.into_iter().collect())
    }
}

impl fmt::Display for SetChromosome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// A multichromosomal genome without gene order. Chromosome order is kept as
/// read but carries no meaning; duplicate chromosomes are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetGenome {
    chromosomes: Vec<SetChromosome>,
    ground_set: BTreeSet<GeneFamily>,
}

impl SetGenome {
    pub fn new(chromosomes: Vec<SetChromosome>) -> Self {
        let ground_set = chromosomes
            .iter()
            .flat_map(|c| c.members.iter().copied())
            .collect();
        SetGenome {
            chromosomes,
            ground_set,
        }
    }

    pub fn from_ids(chromosomes: &[&[u32]]) -> Self {
        SetGenome::new(
            chromosomes
                .iter()
                .map(|c| SetChromosome::from_ids(c))
                .collect(),
        )
    }

    pub fn chromosomes(&self) -> &[SetChromosome] {
        &self.chromosomes
    }

    pub fn ground_set(&self) -> &BTreeSet<GeneFamily> {
        &self.ground_set
    }

    /// Number of chromosomes, empty ones included.
    pub fn k(&self) -> usize {
        self.chromosomes.len()
    }

    /// Total gene count with duplicates.
    pub fn total_genes(&self) -> usize {
        self.chromosomes.iter().map(SetChromosome::len).sum()
    }

    /// Order-insensitive comparison of the chromosome multisets.
    pub fn same_collection(&self, other: &SetGenome) -> bool {
        let mut a = self.chromosomes.clone();
        let mut b = other.chromosomes.clone();
        a.sort();
        b.sort();
        a == b
    }

    pub(crate) fn with_padding(&self, extra: usize) -> SetGenome {
        let mut chromosomes = self.chromosomes.clone();
        chromosomes.extend(std::iter::repeat_n(SetChromosome::default(), extra));
        SetGenome {
            chromosomes,
            ground_set: self.ground_set.clone(),
        }
    }
}

impl fmt::Display for SetGenome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.chromosomes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Mandatory and optional symbols for exemplar LCS. Any family outside both
/// sets is treated as optional by the solvers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    mandatory: BTreeSet<GeneFamily>,
    optional: BTreeSet<GeneFamily>,
}

impl Alphabet {
    pub fn new(
        mandatory: BTreeSet<GeneFamily>,
        optional: BTreeSet<GeneFamily>,
    ) -> Result<Self, ZedError> {
        if let Some(&f) = mandatory.intersection(&optional).next() {
            return Err(ZedError::PreconditionViolated(format!(
                "family {f} is both mandatory and optional"
            )));
        }
        Ok(Alphabet {
            mandatory,
            optional,
        })
    }

    /// Alphabet whose optional part is every family of `a` and `b` not listed
    /// as mandatory.
    pub fn from_mandatory(
        mandatory: impl IntoIterator<Item = GeneFamily>,
        a: &SeqGenome,
        b: &SeqGenome,
    ) -> Self {
        let mandatory: BTreeSet<_> = mandatory.into_iter().collect();
        let optional = a
            .families()
            .union(&b.families())
            .filter(|f| !mandatory.contains(f))
            .copied()
            .collect();
        Alphabet {
            mandatory,
            optional,
        }
    }

    pub fn mandatory(&self) -> &BTreeSet<GeneFamily> {
        &self.mandatory
    }

    pub fn optional(&self) -> &BTreeSet<GeneFamily> {
        &self.optional
    }

    pub fn is_mandatory(&self, family: GeneFamily) -> bool {
        self.mandatory.contains(&family)
    }
}

/// Occurrence count of every family present in a genome.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OccurrenceProfile {
    counts: BTreeMap<GeneFamily, usize>,
}

impl OccurrenceProfile {
    pub fn counts(&self) -> &BTreeMap<GeneFamily, usize> {
        &self.counts
    }

    pub fn count(&self, family: GeneFamily) -> usize {
        self.counts.get(&family).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max_count(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }

    pub fn is_exemplar(&self) -> bool {
        self.counts.values().all(|&c| c == 1)
    }

    pub fn families(&self) -> impl Iterator<Item = GeneFamily> + '_ {
        self.counts.keys().copied()
    }
}

impl FromIterator<GeneFamily> for OccurrenceProfile {
    fn from_iter<I: IntoIterator<Item = GeneFamily>>(iter: I) -> Self {
        let mut counts = BTreeMap::new();
        for f in iter {
            *counts.entry(f).or_insert(0) += 1;
        }
        OccurrenceProfile { counts }
    }
}

/// Anything whose genes can be counted per family.
pub trait Genome {
    fn occurrence_profile(&self) -> OccurrenceProfile;
}

impl Genome for SeqGenome {
    fn occurrence_profile(&self) -> OccurrenceProfile {
        self.genes.iter().map(|g| g.family).collect()
    }
}

impl Genome for SetGenome {
    fn occurrence_profile(&self) -> OccurrenceProfile {
        self.chromosomes
            .iter()
            .flat_map(|c| c.members.iter().copied())
            .collect()
    }
}

pub fn occurrence_profile<G: Genome + ?Sized>(genome: &G) -> OccurrenceProfile {
    genome.occurrence_profile()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceClass {
    /// Every family occurs exactly once in both genomes.
    BothExemplar,
    /// The genome on `exemplar_side` has no duplicates.
    OneSideDuplicateFree {
        exemplar_side: Side,
    },
    /// For every family, at least one genome holds it exactly once.
    PerGeneSpecial,
    General,
}

impl InstanceClass {
    /// True for the classes on which the polynomial algorithms are exact.
    pub fn is_special(self) -> bool {
        !matches!(self, InstanceClass::General)
    }

    pub fn name(self) -> &'static str {
        match self {
            InstanceClass::BothExemplar => "both-exemplar",
            InstanceClass::OneSideDuplicateFree { .. } => "one-side-duplicate-free",
            InstanceClass::PerGeneSpecial => "per-gene-special",
            InstanceClass::General => "general",
        }
    }
}

/// Classifies a pair of genomes over the same family universe.
///
/// Fails with [`ZedError::FamilyMismatch`] if some family occurs in only one
/// genome; for zero exemplar distance that is an immediate NO.
pub fn classify_instance<G: Genome + ?Sized>(g1: &G, g2: &G) -> Result<InstanceClass, ZedError> {
    classify_profiles(&g1.occurrence_profile(), &g2.occurrence_profile())
}

pub fn classify_profiles(
    p1: &OccurrenceProfile,
    p2: &OccurrenceProfile,
) -> Result<InstanceClass, ZedError> {
    check_same_universe(p1, p2)?;
    let ex1 = p1.is_exemplar();
    let ex2 = p2.is_exemplar();
    Ok(match (ex1, ex2) {
        (true, true) => InstanceClass::BothExemplar,
        (true, false) => InstanceClass::OneSideDuplicateFree {
            exemplar_side: Side::First,
        },
        (false, true) => InstanceClass::OneSideDuplicateFree {
            exemplar_side: Side::Second,
        },
        (false, false) => {
            if p1.families().all(|f| p1.count(f).min(p2.count(f)) == 1) {
                InstanceClass::PerGeneSpecial
            } else {
                InstanceClass::General
            }
        }
    })
}

pub(crate) fn check_same_universe(
    p1: &OccurrenceProfile,
    p2: &OccurrenceProfile,
) -> Result<(), ZedError> {
    let missing = p1
        .families()
        .find(|&f| p2.count(f) == 0)
        .or_else(|| p2.families().find(|&f| p1.count(f) == 0));
    match missing {
        Some(family) => Err(ZedError::FamilyMismatch { family }),
        None => Ok(()),
    }
}

/// Why a sequence certificate was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqCertFailure {
    DuplicateFamily(GeneFamily),
    MissingFamily(GeneFamily),
    NotSubsequenceOfG1,
    NotSubsequenceOfG2,
}

impl SeqCertFailure {
    pub fn code(self) -> &'static str {
        match self {
            SeqCertFailure::DuplicateFamily(_) => "DuplicateFamily",
            SeqCertFailure::MissingFamily(_) => "MissingFamily",
            SeqCertFailure::NotSubsequenceOfG1 => "NotSubsequenceOfG1",
            SeqCertFailure::NotSubsequenceOfG2 => "NotSubsequenceOfG2",
        }
    }
}

impl fmt::Display for SeqCertFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqCertFailure::DuplicateFamily(g) => write!(f, "DuplicateFamily: family {g}"),
            SeqCertFailure::MissingFamily(g) => write!(f, "MissingFamily: family {g}"),
            other => f.write_str(other.code()),
        }
    }
}

/// Checks that `cert` holds every family of the two genomes exactly once and
/// embeds, sign for sign, into both.
pub fn check_seq_certificate(
    g1: &SeqGenome,
    g2: &SeqGenome,
    cert: &SeqGenome,
) -> Result<(), SeqCertFailure> {
    let mut seen = BTreeSet::new();
    for g in cert.genes() {
        if !seen.insert(g.family) {
            return Err(SeqCertFailure::DuplicateFamily(g.family));
        }
    }
    let universe: BTreeSet<_> = g1.families().union(&g2.families()).copied().collect();
    if let Some(&f) = universe.difference(&seen).next() {
        return Err(SeqCertFailure::MissingFamily(f));
    }
    if !crate::seq::is_subsequence(cert, g1) {
        return Err(SeqCertFailure::NotSubsequenceOfG1);
    }
    if !crate::seq::is_subsequence(cert, g2) {
        return Err(SeqCertFailure::NotSubsequenceOfG2);
    }
    Ok(())
}

pub fn verify_seq_certificate(g1: &SeqGenome, g2: &SeqGenome, cert: &SeqGenome) -> bool {
    check_seq_certificate(g1, g2, cert).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> SeqGenome {
        SeqGenome::from_signed(&[-4, 1, 2, 3, -5, 1, 2, 3, -6])
    }

    fn g2() -> SeqGenome {
        SeqGenome::from_signed(&[-1, -4, 1, 2, -5, 3, -2, -6, 3])
    }

    fn counts(p: &OccurrenceProfile) -> Vec<(u32, usize)> {
        p.counts().iter().map(|(f, &c)| (f.id(), c)).collect()
    }

    #[test]
    fn profile_of_sequence_example() {
        let p = occurrence_profile(&g1());
        assert_eq!(
            counts(&p),
            vec![(1, 2), (2, 2), (3, 2), (4, 1), (5, 1), (6, 1)]
        );
        assert_eq!(p.total(), 9);
    }

    #[test]
    fn profile_of_empty_genome() {
        assert!(occurrence_profile(&SeqGenome::default())
            .counts()
            .is_empty());
    }

    #[test]
    fn profile_of_set_genome() {
        let g = SetGenome::from_ids(&[&[1, 2, 3], &[2, 3, 4], &[4, 5]]);
        let p = occurrence_profile(&g);
        assert_eq!(counts(&p), vec![(1, 1), (2, 2), (3, 2), (4, 2), (5, 1)]);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_instance(&g1(), &g2()).unwrap(),
            InstanceClass::General
        );

        let a = SeqGenome::from_signed(&[1, 2, 3]);
        let b = SeqGenome::from_signed(&[2, 1, 2, 3]);
        assert_eq!(
            classify_instance(&a, &b).unwrap(),
            InstanceClass::OneSideDuplicateFree {
                exemplar_side: Side::First
            }
        );
        assert_eq!(
            classify_instance(&b, &a).unwrap(),
            InstanceClass::OneSideDuplicateFree {
                exemplar_side: Side::Second
            }
        );

        let a = SeqGenome::from_signed(&[1, 1, 2]);
        let b = SeqGenome::from_signed(&[1, 2, 2]);
        assert_eq!(
            classify_instance(&a, &b).unwrap(),
            InstanceClass::PerGeneSpecial
        );
        assert_eq!(classify_instance(&a, &a).unwrap(), InstanceClass::General);
        assert_eq!(
            classify_instance(&g1(), &g1()).unwrap(),
            InstanceClass::General
        );
        let ex = SeqGenome::from_signed(&[3, -1, 2]);
        assert_eq!(
            classify_instance(&ex, &ex).unwrap(),
            InstanceClass::BothExemplar
        );
    }

    #[test]
    fn classify_reports_family_mismatch() {
        let a = SeqGenome::from_signed(&[1, 2]);
        let b = SeqGenome::from_signed(&[1, 3]);
        assert!(matches!(
            classify_instance(&a, &b),
            Err(ZedError::FamilyMismatch { .. })
        ));
    }

    #[test]
    fn certificate_examples() {
        let cert = SeqGenome::from_signed(&[-4, 1, 2, -5, 3, -6]);
        assert!(verify_seq_certificate(&g1(), &g2(), &cert));
        assert!(verify_seq_certificate(&g2(), &g1(), &cert));

        let one = SeqGenome::from_signed(&[1]);
        assert!(verify_seq_certificate(&one, &one, &one));

        let flipped = SeqGenome::from_signed(&[4, 1, 2, -5, 3, -6]);
        assert_eq!(
            check_seq_certificate(&g1(), &g2(), &flipped),
            Err(SeqCertFailure::NotSubsequenceOfG1)
        );
    }

    #[test]
    fn certificate_reason_codes() {
        let dup = SeqGenome::from_signed(&[-4, 1, 1, 2, -5, 3, -6]);
        assert_eq!(
            check_seq_certificate(&g1(), &g2(), &dup),
            Err(SeqCertFailure::DuplicateFamily(GeneFamily::of(1)))
        );
        let short = SeqGenome::from_signed(&[-4, 1, 2, -5, 3]);
        assert_eq!(
            check_seq_certificate(&g1(), &g2(), &short),
            Err(SeqCertFailure::MissingFamily(GeneFamily::of(6)))
        );
        let g2_only = SeqGenome::from_signed(&[-4, 1, 2, -5, -6, 3]);
        assert_eq!(
            check_seq_certificate(&g1(), &g2(), &g2_only),
            Err(SeqCertFailure::NotSubsequenceOfG1)
        );
        let g1_only = SeqGenome::from_signed(&[-4, 1, 2, 3, -5, -6]);
        assert_eq!(
            check_seq_certificate(&g1(), &g2(), &g1_only),
            Err(SeqCertFailure::NotSubsequenceOfG2)
        );
    }

    #[test]
    fn alphabet_rejects_overlap() {
        let m: BTreeSet<_> = [GeneFamily::of(1)].into();
        assert!(Alphabet::new(m.clone(), m).is_err());
    }

    #[test]
    fn signed_gene_round_trip() {
        for v in [-7i64, -1, 1, 42] {
            assert_eq!(SignedGene::from_signed(v).unwrap().to_signed(), v);
        }
        assert!(SignedGene::from_signed(0).is_none());
        assert!(SignedGene::from_signed(1 << 33).is_none());
    }
}
