//! Compositions, their per-composition statistics, and the family predicates
//! used by the combinatorial arguments.
//!
//! A composition is stored as its sequence of parts together with the cached
//! sum `n`. Most of the crate works with *binary* compositions, whose parts all
//! lie in `{1, 2}`; the capacity statistic itself is defined for any
//! composition through its bargraph.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("parts must be positive, found 0 at position {0}")]
    ZeroPart(usize),
    #[error("composition {0} has a part larger than 2")]
    NotBinary(String),
    #[error("cannot parse composition from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A finite sequence of positive parts.
///
/// Ordering is lexicographic on the part sequence, so a shorter sequence that
/// is a prefix of a longer one sorts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
    n: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(CompositionError::ZeroPart(pos));
        }
        Ok(Self::from_positive(parts))
    }

    /// Builds a composition from parts already known to be positive.
    pub(crate) fn from_positive(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        let n = parts.iter().sum();
        Composition { parts, n }
    }

    pub fn empty() -> Self {
        Composition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// The integer being composed.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when every part is 1 or 2.
    pub fn is_binary(&self) -> bool {
        self.parts.iter().all(|&p| p <= 2)
    }

    fn require_binary(&self) -> Result<(), CompositionError> {
        if self.is_binary() {
            Ok(())
        } else {
            Err(CompositionError::NotBinary(self.to_string()))
        }
    }

    pub fn count_of(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Number of water cells of the bargraph.
    ///
    /// Column `i` holds `min(max left, max right) - h_i` cells when that is
    /// positive, the maxima taken over columns strictly left and strictly right
    /// of `i`.
    pub fn capacity(&self) -> u64 {
        let m = self.parts.len();
        if m < 3 {
            return 0;
        }
        let mut right_max = vec![0u32; m];
        for i in (0..m - 1).rev() {
            right_max[i] = right_max[i + 1].max(self.parts[i + 1]);
        }
        let mut left_max = 0u32;
        let mut total = 0u64;
        for (i, &h) in self.parts.iter().enumerate() {
            let level = left_max.min(right_max[i]);
            if level > h {
                total += u64::from(level - h);
            }
            left_max = left_max.max(h);
        }
        total
    }

    /// Number of 1-parts strictly between the first and the last 2.
    ///
    /// For binary compositions this coincides with [`Composition::capacity`].
    pub fn ones_between_outer_twos(&self) -> u64 {
        let first = self.parts.iter().position(|&p| p == 2);
        let last = self.parts.iter().rposition(|&p| p == 2);
        match (first, last) {
            (Some(a), Some(b)) if a < b => {
                self.parts[a..b].iter().filter(|&&p| p == 1).count() as u64
            }
            _ => 0,
        }
    }

    /// Number of 2s plus, for each 2, the sum of the parts strictly left of it.
    /// `None` unless the composition is binary.
    pub fn sigma(&self) -> Option<u64> {
        if !self.is_binary() {
            return None;
        }
        let mut prefix = 0u64;
        let mut sigma = 0u64;
        for &p in &self.parts {
            if p == 2 {
                sigma += 1 + prefix;
            }
            prefix += u64::from(p);
        }
        Some(sigma)
    }

    pub fn stats(&self) -> StatProfile {
        let capacity = self.capacity();
        StatProfile {
            capacity,
            tau: self.count_of(1) as u64,
            mu: self.count_of(2) as u64,
            sigma: self.sigma(),
            sign: if capacity.is_multiple_of(2) { 1 } else { -1 },
        }
    }

    /// At least two 2s with at least one part strictly between the first and
    /// the last of them.
    pub fn in_k(&self) -> Result<bool, CompositionError> {
        self.require_binary()?;
        let first = self.parts.iter().position(|&p| p == 2);
        let last = self.parts.iter().rposition(|&p| p == 2);
        Ok(matches!((first, last), (Some(a), Some(b)) if b > a + 1))
    }

    /// Ends in 1.
    pub fn in_u(&self) -> Result<bool, CompositionError> {
        self.require_binary()?;
        Ok(self.parts.last() == Some(&1))
    }

    /// At least two 2s, with at least one 1 between the rightmost two.
    pub fn in_v(&self) -> Result<bool, CompositionError> {
        self.require_binary()?;
        Ok(matches!(self.rightmost_two_twos(), Some((a, b)) if b > a + 1))
    }

    /// At least two 2s, with the rightmost two adjacent.
    pub fn in_w(&self) -> Result<bool, CompositionError> {
        self.require_binary()?;
        Ok(matches!(self.rightmost_two_twos(), Some((a, b)) if b == a + 1))
    }

    /// Ends in 2, 1.
    pub fn in_x(&self) -> Result<bool, CompositionError> {
        self.require_binary()?;
        Ok(self.parts.ends_with(&[2, 1]))
    }

    fn rightmost_two_twos(&self) -> Option<(usize, usize)> {
        let last = self.parts.iter().rposition(|&p| p == 2)?;
        let prev = self.parts[..last].iter().rposition(|&p| p == 2)?;
        Some((prev, last))
    }

    /// ASCII picture of the bargraph, top row first: `#` for bar cells, `~`
    /// for water cells, and a space elsewhere. Every row has one character
    /// per part.
    pub fn render_bargraph(&self) -> String {
        let height = self.parts.iter().copied().max().unwrap_or(0);
        let m = self.parts.len();
        let mut right_max = vec![0u32; m];
        for i in (0..m.saturating_sub(1)).rev() {
            right_max[i] = right_max[i + 1].max(self.parts[i + 1]);
        }
        let mut water = vec![0u32; m];
        let mut left_max = 0;
        for i in 0..m {
            water[i] = left_max.min(right_max[i]).max(self.parts[i]);
            left_max = left_max.max(self.parts[i]);
        }
        let mut out = String::new();
        for level in (1..=height).rev() {
            for (&h, &w) in self.parts.iter().zip(&water) {
                let c = if h >= level {
                    '#'
                } else if w >= level {
                    '~'
                } else {
                    ' '
                };
                out.push(c);
            }
            out.push('\n');
        }
        out
    }
}

/// The statistic bundle of one composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatProfile {
    pub capacity: u64,
    /// Number of parts equal to 1.
    pub tau: u64,
    /// Number of parts equal to 2.
    pub mu: u64,
    /// Defined only for binary compositions.
    pub sigma: Option<u64>,
    /// `(-1)^capacity`.
    pub sign: i8,
}

impl fmt::Display for Composition {
    /// Compact digit string when every part is a single digit, otherwise a
    /// comma-separated list. The empty composition renders as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&p| p <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let joined: Vec<String> = self.parts.iter().map(u32::to_string).collect();
            f.write_str(&joined.join(","))
        }
    }
}

impl FromStr for Composition {
    type Err = CompositionError;

    /// Accepts `"21121"` (one digit per part) or `"3,1,2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = |reason: &str| CompositionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|tok| tok.trim().parse::<u32>().map_err(|e| err(&e.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| err("expected decimal digits")))
                .collect::<Result<_, _>>()?
        };
        Composition::new(parts).map_err(|e| err(&e.to_string()))
    }
}

impl TryFrom<&[u32]> for Composition {
    type Error = CompositionError;

    fn try_from(parts: &[u32]) -> Result<Self, Self::Error> {
        Composition::new(parts.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    /// Per-cell drainage simulation: every cell outside the bars starts wet,
    /// and a wet cell dries when a horizontal neighbour is dry or off-grid, or
    /// the cell below it is dry.
    fn flood_capacity(comp: &Composition) -> u64 {
        let parts = comp.parts();
        let m = parts.len();
        let h = parts.iter().copied().max().unwrap_or(0) as usize;
        // grid[col][level], level 0 is the bottom row
        let mut wet: Vec<Vec<bool>> = (0..m)
            .map(|i| (0..h).map(|lvl| lvl >= parts[i] as usize).collect())
            .collect();
        let solid = |i: usize, lvl: usize| lvl < parts[i] as usize;
        loop {
            let mut changed = false;
            for i in 0..m {
                for lvl in 0..h {
                    if !wet[i][lvl] {
                        continue;
                    }
                    let dry_at = |j: Option<usize>, l: usize, wet: &Vec<Vec<bool>>| match j {
                        None => true,
                        Some(j) if j >= m => true,
                        Some(j) => !solid(j, l) && !wet[j][l],
                    };
                    let left = dry_at(i.checked_sub(1), lvl, &wet);
                    let right = dry_at(Some(i + 1), lvl, &wet);
                    let below = lvl > 0 && !solid(i, lvl - 1) && !wet[i][lvl - 1];
                    if left || right || below {
                        wet[i][lvl] = false;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        wet.iter().flatten().filter(|&&w| w).count() as u64
    }

    #[test]
    fn capacity_examples() {
        assert_eq!(c("212").capacity(), 1);
        assert_eq!(c("1111").capacity(), 0);
        assert_eq!(c("211212").capacity(), 3);
        assert_eq!(c("221112").capacity(), 3);
        assert_eq!(c("3,1,2").capacity(), 1);
        assert_eq!(flood_capacity(&c("3,1,2")), 1);
        assert_eq!(Composition::empty().capacity(), 0);
    }

    #[test]
    fn capacity_matches_flood_on_all_small_compositions() {
        for n in 0..=12 {
            for comp in crate::enumerate::all_compositions(n) {
                assert_eq!(comp.capacity(), flood_capacity(&comp), "{comp}");
            }
        }
        // a few taller shapes
        for s in ["4,1,3,1,5", "1,5,2,5,1", "3,3,1,1,2", "2,7,1,4,1,6,2"] {
            let comp = c(s);
            assert_eq!(comp.capacity(), flood_capacity(&comp), "{s}");
        }
    }

    #[test]
    fn stats_examples() {
        let s = c("222").stats();
        assert_eq!((s.sigma, s.tau, s.mu, s.capacity), (Some(9), 0, 3, 0));
        let s = c("111111").stats();
        assert_eq!((s.sigma, s.tau, s.capacity), (Some(0), 6, 0));
        let s = c("1212").stats();
        assert_eq!((s.sigma, s.capacity), (Some(7), 1));
        assert_eq!(c("212").stats().sigma, Some(5));
        assert_eq!(c("3,1,2").stats().sigma, None);
        let e = Composition::empty().stats();
        assert_eq!(
            e,
            StatProfile {
                capacity: 0,
                tau: 0,
                mu: 0,
                sigma: Some(0),
                sign: 1
            }
        );
    }

    #[test]
    fn family_predicates() {
        assert!(c("212").in_k().unwrap());
        assert!(!c("221").in_k().unwrap());
        assert!(c("222").in_k().unwrap());
        let x = c("2121");
        assert!(x.in_u().unwrap() && x.in_v().unwrap() && !x.in_w().unwrap() && x.in_x().unwrap());
        let x = c("122");
        assert!(x.in_w().unwrap() && !x.in_u().unwrap());
        assert!(matches!(
            c("312").in_k(),
            Err(CompositionError::NotBinary(_))
        ));
        assert!(c("3,1,2").in_u().is_err());
    }

    #[test]
    fn parse_and_emit() {
        assert_eq!(c("21121").parts(), &[2, 1, 1, 2, 1]);
        assert_eq!(c("3,1,2").parts(), &[3, 1, 2]);
        assert_eq!(c("12,1").to_string(), "12,1");
        assert_eq!(c("3,1,2").to_string(), "312");
        assert_eq!(c("").n(), 0);
        assert!("2a1".parse::<Composition>().is_err());
        assert!("2,0,1".parse::<Composition>().is_err());
        assert!("201".parse::<Composition>().is_err());
    }

    #[test]
    fn bargraph_rendering() {
        assert_eq!(c("212").render_bargraph(), "#~#\n###\n");
        assert_eq!(c("1").render_bargraph(), "#\n");
        let pic = c("211212").render_bargraph();
        assert_eq!(pic.matches('~').count(), 3);
        assert_eq!(c("3,1,2").render_bargraph(), "#  \n#~#\n###\n");
        assert_eq!(Composition::empty().render_bargraph(), "");
    }
}
