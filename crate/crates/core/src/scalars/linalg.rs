//! Exact Gaussian elimination over the scalar field: one particular
//! solution plus a kernel basis, or inconsistency. Feeds the vanishing
//! solver and the lattice dual-basis computations.

use super::cyclotomic::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

/// Solve `A x = b` exactly. Rows of `a` must share one length.
pub fn solve_linear(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<LinearSolution> {
    let rows = a.len();
    if rows != b.len() {
        return Err(Error::InvalidInput("matrix/vector size mismatch".into()));
    }
    let cols = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }

    // Reduced row echelon form on the augmented matrix.
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][c].inverse()?;
        for j in c..=cols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in c..=cols {
                    let t = &f * &m[rank][j];
                    m[r][j] = &m[r][j] - &t;
                }
            }
        }
        pivot_cols.push(c);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return Err(Error::Inconsistent);
        }
    }

    let mut particular = vec![Scalar::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        particular[c] = m[r][cols].clone();
    }

    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let mut kernel = Vec::new();
    for f in 0..cols {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (r, &c) in pivot_cols.iter().enumerate() {
            v[c] = -&m[r][f];
        }
        kernel.push(v);
    }

    Ok(LinearSolution { particular, kernel })
}

/// Exact inverse of a square matrix.
pub fn mat_inverse(a: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("matrix not square".into()));
    }
    let mut cols_out: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[j] = Scalar::one();
        let sol = solve_linear(a, &e).map_err(|err| match err {
            Error::Inconsistent => Error::SingularMatrix,
            other => other,
        })?;
        if !sol.kernel.is_empty() {
            return Err(Error::SingularMatrix);
        }
        cols_out.push(sol.particular);
    }
    // cols_out[j] is the j-th column of the inverse; transpose to rows.
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for (j, col) in cols_out.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            out[i][j] = v.clone();
        }
    }
    Ok(out)
}

pub(crate) fn mat_vec(a: &[Vec<Scalar>], x: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| {
            let mut acc = Scalar::zero();
            for (c, xi) in row.iter().zip(x) {
                if !c.is_zero() && !xi.is_zero() {
                    acc = &acc + &(c * xi);
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn identity_system() {
        let a = vec![vec![s(1), s(0)], vec![s(0), s(1)]];
        let b = vec![s(3), s(-7)];
        let sol = solve_linear(&a, &b).unwrap();
        assert_eq!(sol.particular, b);
        assert!(sol.kernel.is_empty());
    }

    #[test]
    fn zero_row_gives_full_kernel() {
        let a = vec![vec![s(0)]];
        let b = vec![s(0)];
        let sol = solve_linear(&a, &b).unwrap();
        assert_eq!(sol.kernel.len(), 1);
        assert!(matches!(
            solve_linear(&a, &[s(1)]),
            Err(Error::Inconsistent)
        ));
    }

    #[test]
    fn random_rectangular_residual_is_zero() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let a: Vec<Vec<Scalar>> = (0..4)
                .map(|_| (0..6).map(|_| Scalar::from_ratio(rng.random_range(-9..10), 1 + rng.random_range(0..4))).collect())
                .collect();
            let b: Vec<Scalar> =
                (0..4).map(|_| Scalar::from_int(rng.random_range(-9..10))).collect();
            match solve_linear(&a, &b) {
                Ok(sol) => {
                    let r = mat_vec(&a, &sol.particular);
                    assert_eq!(r, b);
                    for k in &sol.kernel {
                        let z = mat_vec(&a, k);
                        assert!(z.iter().all(|x| x.is_zero()));
                    }
                }
                Err(Error::Inconsistent) => {}
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn inverse_of_invertible_matrix() {
        let a = vec![vec![s(2), s(1)], vec![s(1), s(1)]];
        let inv = mat_inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![s(1), s(-1)], vec![s(-1), s(2)]]);
        let singular = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert!(matches!(mat_inverse(&singular), Err(Error::SingularMatrix)));
    }
}
