//! Small dense linear algebra on row-major `Vec<Vec<S>>`, sized for k <= 6.

use crate::scalar::Scalar;

#[inline]
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

#[inline]
pub fn norm<S: Scalar>(a: &[S]) -> S {
    dot(a, a).sqrt()
}

#[inline]
pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

#[inline]
pub fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

#[inline]
pub fn scale<S: Scalar>(a: &[S], c: S) -> Vec<S> {
    a.iter().map(|&x| x * c).collect()
}

#[inline]
pub fn distance<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y) * (x - y))
        .sum::<S>()
        .sqrt()
}

/// Determinant by LU with partial pivoting. Consumes its input.
pub fn det<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let k = m.len();
    let mut d = S::one();
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
            .unwrap();
        if m[pivot][col] == S::zero() {
            return S::zero();
        }
        if pivot != col {
            m.swap(pivot, col);
            d = -d;
        }
        let p = m[col][col];
        d *= p;
        for row in col + 1..k {
            let f = m[row][col] / p;
            if f != S::zero() {
                for c in col..k {
                    let v = m[col][c];
                    m[row][c] -= f * v;
                }
            }
        }
    }
    d
}

/// Sum over the permutation expansion of `|m_ij|` products, bounded above by
/// the product of row 1-norms. Used as a floating-point error scale for `det`.
pub fn abs_row_product<S: Scalar>(m: &[Vec<S>]) -> S {
    m.iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<S>())
        .fold(S::one(), |acc, x| acc * x)
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting.
/// Returns `None` when a pivot vanishes.
pub fn solve<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>) -> Option<Vec<S>> {
    let k = a.len();
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&x, &y| a[x][col].abs().partial_cmp(&a[y][col].abs()).unwrap())
            .unwrap();
        if a[pivot][col] == S::zero() {
            return None;
        }
        a.swap(pivot, col);
        b.swap(pivot, col);
        for row in col + 1..k {
            let f = a[row][col] / a[col][col];
            for c in col..k {
                let v = a[col][c];
                a[row][c] -= f * v;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    let mut x = vec![S::zero(); k];
    for row in (0..k).rev() {
        let mut acc = b[row];
        for c in row + 1..k {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// Matrix inverse via column-wise solves.
pub fn inverse<S: Scalar>(a: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let k = a.len();
    let mut cols = Vec::with_capacity(k);
    for j in 0..k {
        let mut e = vec![S::zero(); k];
        e[j] = S::one();
        cols.push(solve(a.to_vec(), e)?);
    }
    Some((0..k).map(|i| (0..k).map(|j| cols[j][i]).collect()).collect())
}

pub fn mat_vec<S: Scalar>(m: &[Vec<S>], v: &[S]) -> Vec<S> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(&x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn identity<S: Scalar>(k: usize) -> Vec<Vec<S>> {
    (0..k)
        .map(|i| (0..k).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect()
}

/// Diagonal of the R factor of a Householder QR of the `h x k` matrix `rows`.
///
/// Working on the (centered) data instead of the cross-product matrix keeps
/// the relative accuracy of small diagonal entries when coordinates are large.
pub fn householder_r_diagonal<S: Scalar>(mut rows: Vec<Vec<S>>) -> Vec<S> {
    let h = rows.len();
    let k = rows.first().map_or(0, Vec::len);
    let mut diag = Vec::with_capacity(k);
    for col in 0..k.min(h) {
        let alpha_sq: S = (col..h).map(|r| rows[r][col] * rows[r][col]).sum();
        let alpha = alpha_sq.sqrt();
        if alpha == S::zero() {
            diag.push(S::zero());
            continue;
        }
        let x0 = rows[col][col];
        let beta = if x0 >= S::zero() { -alpha } else { alpha };
        // v = x - beta e1, stored in place
        let mut v: Vec<S> = (col..h).map(|r| rows[r][col]).collect();
        v[0] -= beta;
        let vnorm_sq: S = v.iter().map(|&x| x * x).sum();
        diag.push(beta);
        if vnorm_sq == S::zero() {
            continue;
        }
        for c in col + 1..k {
            let proj: S = v
                .iter()
                .enumerate()
                .map(|(i, &vi)| vi * rows[col + i][c])
                .sum();
            let f = S::lit(2.0) * proj / vnorm_sq;
            for (i, &vi) in v.iter().enumerate() {
                rows[col + i][c] -= f * vi;
            }
        }
    }
    while diag.len() < k {
        diag.push(S::zero());
    }
    diag
}

pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Lexicographic r-combinations of `0..n`.
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, r: usize) -> Self {
        Self {
            n,
            idx: (0..r).collect(),
            done: r > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let r = self.idx.len();
        let mut i = r;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - r + i {
                self.idx[i] += 1;
                for j in i + 1..r {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_matches_cofactor_expansion() {
        let m: Vec<Vec<f64>> = vec![
            vec![2.0, -1.0, 0.5],
            vec![1.0, 3.0, -2.0],
            vec![0.0, 4.0, 1.0],
        ];
        let cof = 2.0 * (3.0 * 1.0 - (-2.0) * 4.0) - (-1.0) * (1.0 * 1.0 - 0.0)
            + 0.5 * (4.0 - 0.0);
        assert!((det(m) - cof).abs() < 1e-12);
    }

    #[test]
    fn householder_diagonal_gives_gram_determinant() {
        let rows = vec![
            vec![1.0, 2.0],
            vec![-0.5, 0.3],
            vec![2.0, -1.0],
            vec![0.1, 0.7],
        ];
        let d = householder_r_diagonal(rows.clone());
        let g00: f64 = rows.iter().map(|r| r[0] * r[0]).sum();
        let g11: f64 = rows.iter().map(|r| r[1] * r[1]).sum();
        let g01: f64 = rows.iter().map(|r| r[0] * r[1]).sum();
        let gram = g00 * g11 - g01 * g01;
        let prod: f64 = d.iter().map(|x| x * x).product();
        assert!((gram - prod).abs() < 1e-12 * gram);
    }

    #[test]
    fn combinations_count_and_order() {
        let all: Vec<_> = Combinations::new(5, 3).collect();
        assert_eq!(all.len() as u128, binomial(5, 3));
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all.last().unwrap(), &vec![2, 3, 4]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let a: Vec<Vec<f64>> = vec![vec![4.0, 1.0], vec![2.0, 3.0]];
        let inv = inverse(&a).unwrap();
        let p = mat_mul(&a, &inv);
        for i in 0..2 {
            for j in 0..2 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((p[i][j] - e).abs() < 1e-14);
            }
        }
    }
}
