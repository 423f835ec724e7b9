//! Bipartite matching: Hungarian method for maximum weight, augmenting paths
//! for maximum cardinality.

/// Maximum-weight perfect assignment on a square matrix via the
/// potential-based Hungarian method, O(n³). `weight[r][c]` must be
/// non-negative. Returns `assignment[r] = c`.
pub(crate) fn hungarian_max(weight: &[Vec<i64>]) -> Vec<usize> {
    let n = weight.len();
    if n == 0 {
        return Vec::new();
    }
    // Minimise cost = -weight. Rows and columns are 1-based inside; index 0
    // is the virtual root of each augmenting search.
    let cost = |r: usize, c: usize| -weight[r - 1][c - 1];
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut row_of_col = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for r in 1..=n {
        row_of_col[0] = r;
        let mut col = 0usize;
        let mut min_to = vec![i64::MAX; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[col] = true;
            let row = row_of_col[col];
            let mut delta = i64::MAX;
            let mut next = 0usize;
            for c in 1..=n {
                if used[c] {
                    continue;
                }
                let reduced = cost(row, c) - u[row] - v[c];
                if reduced < min_to[c] {
                    min_to[c] = reduced;
                    way[c] = col;
                }
                if min_to[c] < delta {
                    delta = min_to[c];
                    next = c;
                }
            }
            for c in 0..=n {
                if used[c] {
                    u[row_of_col[c]] += delta;
                    v[c] -= delta;
                } else {
                    min_to[c] -= delta;
                }
            }
            col = next;
            if row_of_col[col] == 0 {
                break;
            }
        }
        loop {
            let prev = way[col];
            row_of_col[col] = row_of_col[prev];
            col = prev;
            if col == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0usize; n];
    for c in 1..=n {
        assignment[row_of_col[c] - 1] = c - 1;
    }
    assignment
}

/// Size of a maximum matching between `adj.len()` left vertices and
/// `right` right vertices (Kuhn's augmenting paths).
pub(crate) fn max_cardinality(adj: &[Vec<usize>], right: usize) -> usize {
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }

    let mut owner = vec![None; right];
    let mut size = 0;
    for u in 0..adj.len() {
        let mut seen = vec![false; right];
        if augment(u, adj, &mut seen, &mut owner) {
            size += 1;
        }
    }
    size
}

#[cfg(test)]
mod tests {
    use super::*;

    fn total(w: &[Vec<i64>], a: &[usize]) -> i64 {
        a.iter().enumerate().map(|(r, &c)| w[r][c]).sum()
    }

    fn brute(w: &[Vec<i64>]) -> i64 {
        fn go(w: &[Vec<i64>], r: usize, used: &mut Vec<bool>) -> i64 {
            if r == w.len() {
                return 0;
            }
            let mut best = i64::MIN;
            for c in 0..w.len() {
                if !used[c] {
                    used[c] = true;
                    best = best.max(w[r][c] + go(w, r + 1, used));
                    used[c] = false;
                }
            }
            best
        }
        go(w, 0, &mut vec![false; w.len()])
    }

    #[test]
    fn hungarian_small_cases() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(hungarian_max(&id), vec![0, 1, 2]);
        let w = vec![vec![2, 1], vec![1, 1]];
        assert_eq!(total(&w, &hungarian_max(&w)), 3);
        let w = vec![vec![7, 5, 1], vec![8, 1, 1], vec![6, 6, 9]];
        assert_eq!(total(&w, &hungarian_max(&w)), brute(&w));
        assert!(hungarian_max(&[]).is_empty());
    }

    #[test]
    fn hungarian_matches_enumeration() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 10) as i64
        };
        for n in 1..=6 {
            for _ in 0..30 {
                let w: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
                let a = hungarian_max(&w);
                let mut cols = a.clone();
                cols.sort();
                assert_eq!(cols, (0..n).collect::<Vec<_>>());
                assert_eq!(total(&w, &a), brute(&w));
            }
        }
    }

    #[test]
    fn kuhn() {
        assert_eq!(max_cardinality(&[vec![0, 1], vec![0]], 2), 2);
        assert_eq!(max_cardinality(&[vec![0], vec![0]], 2), 1);
        assert_eq!(max_cardinality(&[], 3), 0);
    }
}
