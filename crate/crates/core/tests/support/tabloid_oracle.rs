//! Brute-force `dim D^λ` from James's construction: polytabloids of
//! standard tableaux in the tabloid basis of `M^λ`, their Gram matrix under
//! the form making tabloids orthonormal, and its rank mod `p`.
//! Shares nothing with the library beyond the standard library.

use std::collections::HashMap;

/// Standard fillings of `shape`, each as the row index of every entry `0..r`.
fn standard_tableaux(shape: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, r: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next == r {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next);
                rec(shape, rows, next + 1, r, out);
                rows[i].pop();
            }
        }
    }
    let r = shape.iter().sum();
    let mut out = Vec::new();
    rec(shape, &mut vec![Vec::new(); shape.len()], 0, r, &mut out);
    out
}

/// Every permutation of `items` with its sign.
fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if items.is_empty() {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for (mut tail, s) in signed_permutations(&rest) {
            tail.insert(0, first);
            out.push((tail, s * sign));
        }
    }
    out
}

/// The polytabloid `e_t` as a map from tabloid (row of each entry) to coefficient.
fn polytabloid(rows: &[Vec<usize>], r: usize) -> HashMap<Vec<usize>, i64> {
    let width = rows[0].len();
    let columns: Vec<Vec<usize>> =
        (0..width).map(|j| rows.iter().filter(|row| row.len() > j).map(|row| row[j]).collect()).collect();
    let mut out: HashMap<Vec<usize>, i64> = HashMap::new();
    let mut choice = vec![0usize; width];
    let options: Vec<Vec<(Vec<usize>, i64)>> = columns.iter().map(|c| signed_permutations(c)).collect();
    loop {
        let mut tabloid = vec![0usize; r];
        let mut sign = 1;
        for (j, col) in columns.iter().enumerate() {
            let (perm, s) = &options[j][choice[j]];
            sign *= s;
            for (i, &entry) in perm.iter().enumerate() {
                debug_assert!(col.contains(&entry));
                tabloid[entry] = i;
            }
        }
        *out.entry(tabloid).or_insert(0) += sign;
        let mut j = 0;
        loop {
            if j == width {
                return out;
            }
            choice[j] += 1;
            if choice[j] < options[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

fn rank_mod(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    let inv = |a: i64| -> i64 {
        let (mut x, mut e, mut acc) = (a.rem_euclid(p), p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * x % p;
            }
            x = x * x % p;
            e >>= 1;
        }
        acc
    };
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * scale % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Number of standard tableaux of `shape`, by listing them.
pub fn specht_dim(shape: &[usize]) -> usize {
    standard_tableaux(shape).len()
}

/// `dim D^λ` over GF(p) for a nonempty `p`-regular `shape`.
pub fn irreducible_dim(shape: &[usize], p: i64) -> usize {
    let r: usize = shape.iter().sum();
    let polys: Vec<HashMap<Vec<usize>, i64>> = standard_tableaux(shape).iter().map(|t| polytabloid(t, r)).collect();
    let gram: Vec<Vec<i64>> = polys
        .iter()
        .map(|a| polys.iter().map(|b| a.iter().map(|(k, x)| x * b.get(k).copied().unwrap_or(0)).sum::<i64>()).collect())
        .collect();
    rank_mod(gram, p)
}

/// Partitions of `r` in decreasing lexicographic order.
pub fn partitions(r: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}

pub fn is_p_regular(shape: &[usize], p: usize) -> bool {
    shape.windows(p).all(|w| w[0] != w[p - 1])
}
