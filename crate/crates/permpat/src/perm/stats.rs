use super::Permutation;

/// Classical statistics of a single permutation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StatRecord {
    pub ascents: usize,
    pub inversions: usize,
    pub ltr_minima_count: usize,
    /// 1-indexed positions of the left-to-right minima.
    pub ltr_minima_positions: Vec<usize>,
    pub rtl_maxima_count: usize,
    pub fixed_points: usize,
    pub bonds: usize,
}

pub fn stats(perm: &Permutation) -> StatRecord {
    let e = perm.entries();
    let n = e.len();
    let mut r = StatRecord::default();
    let mut min = u32::MAX;
    for (i, &v) in e.iter().enumerate() {
        if v < min {
            min = v;
            r.ltr_minima_positions.push(i + 1);
        }
        if v as usize == i + 1 {
            r.fixed_points += 1;
        }
    }
    r.ltr_minima_count = r.ltr_minima_positions.len();
    let mut max = 0;
    for &v in e.iter().rev() {
        if v > max {
            max = v;
            r.rtl_maxima_count += 1;
        }
    }
    for w in e.windows(2) {
        if w[0] < w[1] {
            r.ascents += 1;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if e[i] > e[j] {
                r.inversions += 1;
            }
        }
    }
    r.bonds = bonds(perm);
    r
}

/// Adjacent positions holding consecutive values.
pub fn bonds(perm: &Permutation) -> usize {
    perm.entries()
        .windows(2)
        .filter(|w| w[0].abs_diff(w[1]) == 1)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn bond_examples() {
        assert_eq!(bonds(&Permutation::decreasing(6)), 5);
        assert_eq!(bonds(&p("2413")), 0);
    }

    #[test]
    fn ascent_polynomial_on_s3() {
        let mut hist = [0usize; 3];
        for q in all_permutations(3) {
            hist[stats(&q).ascents] += 1;
        }
        assert_eq!(hist, [1, 4, 1]);
    }

    #[test]
    fn record_for_a_sample() {
        let r = stats(&p("4213"));
        assert_eq!(r.ascents, 1);
        assert_eq!(r.inversions, 4);
        assert_eq!(r.ltr_minima_positions, vec![1, 2, 3]);
        assert_eq!(r.rtl_maxima_count, 2);
        assert_eq!(r.fixed_points, 1);
        assert_eq!(r.bonds, 1);
    }

    #[test]
    fn bounds_and_complement_law() {
        for n in 1..=6 {
            for q in all_permutations(n) {
                let r = stats(&q);
                let c = stats(&q.complement());
                assert!(r.ascents < n && r.bonds < n && r.fixed_points <= n);
                assert_eq!(r.ascents + c.ascents, n - 1);
            }
        }
    }
}
