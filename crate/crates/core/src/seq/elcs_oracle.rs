//! Exhaustive exemplar-LCS search, correct for any occurrence counts. Used
//! to check the special-case algorithms on small inputs.

use rustc_hash::FxHashMap;

use crate::error::ZedError;
use crate::model::{Alphabet, SeqGenome, SignedGene};

pub const DEFAULT_MANDATORY_CAP: usize = 15;

struct Search<'a> {
    a: &'a [SignedGene],
    b: &'a [SignedGene],
    /// Bit index of each mandatory family occurrence in `a`, if mandatory.
    bit_a: Vec<Option<u32>>,
    full: u32,
    memo: FxHashMap<(u32, u32, u32), Option<u32>>,
}

impl Search<'_> {
    /// Longest common subsequence of `a[i..]`, `b[j..]` that uses every
    /// mandatory family outside `used` exactly once and none inside it.
    fn best(&mut self, i: usize, j: usize, used: u32) -> Option<u32> {
        if i == self.a.len() || j == self.b.len() {
            return (used == self.full).then_some(0);
        }
        let key = (i as u32, j as u32, used);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut best = self.best(i + 1, j, used).max(self.best(i, j + 1, used));
        if let Some(next) = self.take(i, j, used) {
            best = best.max(self.best(i + 1, j + 1, next).map(|v| v + 1));
        }
        self.memo.insert(key, best);
        best
    }

    /// Mask after matching `a[i]` with `b[j]`, if that match is allowed.
    fn take(&self, i: usize, j: usize, used: u32) -> Option<u32> {
        if self.a[i] != self.b[j] {
            return None;
        }
        match self.bit_a[i] {
            Some(bit) if used >> bit & 1 == 1 => None,
            Some(bit) => Some(used | 1 << bit),
            None => Some(used),
        }
    }

    fn reconstruct(&mut self) -> Option<SeqGenome> {
        let target = self.best(0, 0, 0)?;
        let (mut i, mut j, mut used) = (0, 0, 0);
        let mut out = Vec::with_capacity(target as usize);
        let mut remaining = target;
        while i < self.a.len() && j < self.b.len() {
            if let (Some(next), true) = (self.take(i, j, used), remaining > 0) {
                if self.best(i + 1, j + 1, next) == Some(remaining - 1) {
                    out.push(self.a[i]);
                    remaining -= 1;
                    used = next;
                    i += 1;
                    j += 1;
                    continue;
                }
            }
            if self.best(i + 1, j, used) == Some(remaining) {
                i += 1;
            } else {
                j += 1;
            }
        }
        Some(SeqGenome::new(out))
    }
}

pub fn elcs_exact_oracle(
    a: &SeqGenome,
    b: &SeqGenome,
    alphabet: &Alphabet,
) -> Result<Option<SeqGenome>, ZedError> {
    elcs_exact_oracle_with_cap(a, b, alphabet, DEFAULT_MANDATORY_CAP)
}

/// Longest common subsequence that contains every mandatory family exactly
/// once, or `None` if no common subsequence contains them all.
pub fn elcs_exact_oracle_with_cap(
    a: &SeqGenome,
    b: &SeqGenome,
    alphabet: &Alphabet,
    cap: usize,
) -> Result<Option<SeqGenome>, ZedError> {
    let mandatory: Vec<_> = alphabet.mandatory().iter().copied().collect();
    let cap = cap.min(31);
    if mandatory.len() > cap {
        return Err(ZedError::CapExceeded {
            what: "number of mandatory families",
            actual: mandatory.len(),
            cap,
        });
    }
    let bit_a = a
        .genes()
        .iter()
        .map(|g| mandatory.binary_search(&g.family).ok().map(|b| b as u32))
        .collect();
    let mut search = Search {
        a: a.genes(),
        b: b.genes(),
        bit_a,
        full: (1u32 << mandatory.len()) - 1,
        memo: FxHashMap::default(),
    };
    Ok(search.reconstruct())
}
