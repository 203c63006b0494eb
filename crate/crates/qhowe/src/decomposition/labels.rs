use std::fmt;

use serde::{Serialize, Serializer};

use super::DecompError;

/// A partition, stored by its nonzero parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartitionLabel {
    parts: Vec<usize>,
}

impl PartitionLabel {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PartitionLabel { parts }
    }

    pub fn empty() -> Self {
        PartitionLabel::default()
    }

    /// The partition whose conjugate has the given column heights.
    pub fn from_conjugate(cols: &[usize]) -> Self {
        PartitionLabel::new(conjugate_of(cols))
    }

    /// A single column of height `h`.
    pub fn column(h: usize) -> Self {
        PartitionLabel::new(vec![1; h])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Column heights `μ'_1 ≥ μ'_2 ≥ …`.
    pub fn conjugate(&self) -> Vec<usize> {
        conjugate_of(&self.parts)
    }

    /// `μ'_k`, zero past the last column.
    pub fn col(&self, k: usize) -> usize {
        self.conjugate().get(k - 1).copied().unwrap_or(0)
    }

    /// `μ_1`, the number of columns.
    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `μ'_1`, the number of rows.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parse(text: &str) -> Result<Self, DecompError> {
        let t = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Ok(PartitionLabel::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| DecompError::Label(format!("cannot parse partition {text:?}")))?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(DecompError::Label(format!("parts of {text:?} are not weakly decreasing")));
        }
        Ok(PartitionLabel::new(parts))
    }
}

fn conjugate_of(parts: &[usize]) -> Vec<usize> {
    let w = parts.iter().copied().max().unwrap_or(0);
    (1..=w).map(|k| parts.iter().filter(|&&p| p >= k).count()).collect()
}

impl fmt::Display for PartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for PartitionLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Whether `μ` labels an `O(n_ambient)`-module: `μ'_1 + μ'_2 ≤ n_ambient`.
pub fn is_admissible(mu: &PartitionLabel, n_ambient: usize) -> bool {
    mu.col(1) + mu.col(2) <= n_ambient
}

/// Partitions with at most `2n` rows and `r = ⌊m/2⌋` columns satisfying
/// `μ'_1 + μ'_2 ≤ 2n`, ordered lexicographically by `(μ'_r, …, μ'_1)`.
pub fn enumerate_labels(n: usize, m: usize) -> Result<Vec<PartitionLabel>, DecompError> {
    if n < 2 || m < 2 {
        return Err(DecompError::Label(format!("labels need n >= 2 and m >= 2, got n = {n}, m = {m}")));
    }
    let r = m / 2;
    let mut cols: Vec<Vec<usize>> = Vec::new();
    fn extend(prefix: &mut Vec<usize>, r: usize, cap: usize, two_n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        for h in 0..=cap {
            if prefix.len() == 1 && prefix[0] + h > two_n {
                break;
            }
            prefix.push(h);
            extend(prefix, r, h, two_n, out);
            prefix.pop();
        }
    }
    extend(&mut Vec::new(), r, 2 * n, 2 * n, &mut cols);
    cols.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    Ok(cols.iter().map(|c| PartitionLabel::from_conjugate(c)).collect())
}

/// `μ̄_i = n_ambient/2 − μ'_{r+1−i}` for `i = 1..r`.
pub fn mu_bar(mu: &PartitionLabel, n_ambient: usize, r: usize) -> Result<Vec<i64>, DecompError> {
    if !n_ambient.is_multiple_of(2) {
        return Err(DecompError::Label(format!("ambient dimension {n_ambient} must be even")));
    }
    if mu.width() > r || !is_admissible(mu, n_ambient) {
        return Err(DecompError::Label(format!("{mu} is not admissible for O({n_ambient}) with r = {r}")));
    }
    let half = (n_ambient / 2) as i64;
    Ok((1..=r).map(|i| half - mu.col(r + 1 - i) as i64).collect())
}

/// `μ` with its first column replaced by `n_ambient − μ'_1` boxes.
pub fn mu_dagger(mu: &PartitionLabel, n_ambient: usize) -> Result<PartitionLabel, DecompError> {
    if !is_admissible(mu, n_ambient) {
        return Err(DecompError::Label(format!("{mu} is not admissible for O({n_ambient})")));
    }
    let mut cols = mu.conjugate();
    if cols.is_empty() {
        cols.push(0);
    }
    cols[0] = n_ambient - cols[0];
    cols.retain(|&c| c > 0);
    Ok(PartitionLabel::from_conjugate(&cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> PartitionLabel {
        PartitionLabel::new(parts.to_vec())
    }

    #[test]
    fn conjugation_is_an_involution() {
        for parts in [vec![], vec![3, 1], vec![2, 2, 1], vec![1, 1, 1, 1]] {
            let mu = p(&parts);
            assert_eq!(PartitionLabel::new(mu.conjugate()).conjugate(), mu.parts());
            assert_eq!(mu.col(1), mu.height());
        }
    }

    #[test]
    fn label_counts() {
        assert_eq!(enumerate_labels(2, 2).unwrap().len(), 5);
        assert_eq!(enumerate_labels(3, 2).unwrap().len(), 7);
        assert_eq!(enumerate_labels(2, 3).unwrap().len(), 5);
        let l = enumerate_labels(2, 4).unwrap();
        let cols: Vec<(usize, usize)> = l.iter().map(|mu| (mu.col(1), mu.col(2))).collect();
        assert_eq!(cols, vec![(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (1, 1), (2, 1), (3, 1), (2, 2)]);
        assert!(enumerate_labels(1, 2).is_err());
    }

    #[test]
    fn small_cases_of_two_n_plus_one() {
        let l = enumerate_labels(2, 2).unwrap();
        assert_eq!(l, (0..=4).map(PartitionLabel::column).collect::<Vec<_>>());
    }

    #[test]
    fn bar_and_dagger() {
        assert_eq!(mu_bar(&p(&[]), 4, 1).unwrap(), vec![2]);
        assert_eq!(mu_bar(&p(&[2, 1]), 6, 2).unwrap(), vec![2, 1]);
        assert_eq!(mu_dagger(&p(&[1]), 4).unwrap(), p(&[1, 1, 1]));
        assert_eq!(mu_dagger(&p(&[]), 4).unwrap(), p(&[1, 1, 1, 1]));
        assert!(mu_bar(&p(&[2]), 4, 1).is_err());
        assert!(mu_dagger(&p(&[2, 2, 2]), 4).is_err());
    }

    #[test]
    fn dagger_is_an_involution() {
        for mu in enumerate_labels(3, 4).unwrap() {
            assert_eq!(mu_dagger(&mu_dagger(&mu, 6).unwrap(), 6).unwrap(), mu);
        }
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(PartitionLabel::parse("(2,1)").unwrap(), p(&[2, 1]));
        assert_eq!(PartitionLabel::parse("").unwrap(), p(&[]));
        assert_eq!(PartitionLabel::parse("[1, 1]").unwrap(), p(&[1, 1]));
        assert!(PartitionLabel::parse("1,2").is_err());
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
    }
}
