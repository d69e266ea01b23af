//! Index arithmetic for polygons with corners at critical points.

use serde::Serialize;

/// Morse indices `|p_1|, …, |p_k|` at the entries and `|p_{k+1}|` at the
/// exit, each 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorseIndexProfile {
    pub entries: Vec<u8>,
    pub exit: u8,
}

impl MorseIndexProfile {
    /// `None` unless `k ≥ 1` and every index is 0 or 1.
    pub fn new(entries: Vec<u8>, exit: u8) -> Option<Self> {
        if entries.is_empty() || exit > 1 || entries.iter().any(|&e| e > 1) {
            return None;
        }
        Some(MorseIndexProfile { entries, exit })
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }
}

/// `Σ |p_i| − |p_{k+1}| − (k − 1)`.
pub fn fredholm_index(p: &MorseIndexProfile) -> i64 {
    let sum: i64 = p.entries.iter().map(|&e| e as i64).sum();
    sum - p.exit as i64 - (p.k() as i64 - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IndexCase {
    /// `k = 1` and the entry index equals the exit index.
    SingleMatching,
    /// `k ≥ 2` and every index, exit included, is 1.
    AllOnes,
    /// Exit index 0 and exactly one entry of index 0.
    OneEntryZero,
    /// Every entry 1 and exit 0: index one.
    IndexOne,
    /// Any other profile: negative index.
    Negative,
}

impl IndexCase {
    pub fn index_sign(self) -> i64 {
        match self {
            IndexCase::SingleMatching | IndexCase::AllOnes | IndexCase::OneEntryZero => 0,
            IndexCase::IndexOne => 1,
            IndexCase::Negative => -1,
        }
    }
}

/// Which case of the classification a profile falls into, decided from
/// the case list alone.
pub fn classify_index(p: &MorseIndexProfile) -> IndexCase {
    let k = p.k();
    let zeros = p.entries.iter().filter(|&&e| e == 0).count();
    if k == 1 && p.entries[0] == p.exit {
        IndexCase::SingleMatching
    } else if k >= 2 && zeros == 0 && p.exit == 1 {
        IndexCase::AllOnes
    } else if p.exit == 0 && zeros == 1 {
        IndexCase::OneEntryZero
    } else if zeros == 0 && p.exit == 0 {
        IndexCase::IndexOne
    } else {
        IndexCase::Negative
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_profiles() {
        let p = |e: &[u8], x| MorseIndexProfile::new(e.to_vec(), x).unwrap();
        assert_eq!(fredholm_index(&p(&[1], 1)), 0);
        assert_eq!(fredholm_index(&p(&[1, 1], 1)), 0);
        assert_eq!(fredholm_index(&p(&[1, 1], 0)), 1);
        assert_eq!(classify_index(&p(&[1, 1], 0)), IndexCase::IndexOne);
        assert_eq!(classify_index(&p(&[0], 0)), IndexCase::SingleMatching);
        assert!(MorseIndexProfile::new(vec![], 0).is_none());
        assert!(MorseIndexProfile::new(vec![2], 0).is_none());
    }
}
