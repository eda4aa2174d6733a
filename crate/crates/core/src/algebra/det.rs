//! Exact determinants over ℚ[x] and ℚ(x).

use super::{Polynomial, RationalFunction};
use crate::cancel::Cancellation;
use crate::error::{Error, Result};

fn check_square<T>(matrix: &[Vec<T>]) -> Result<()> {
    let n = matrix.len();
    match matrix.iter().position(|row| row.len() != n) {
        Some(row) => Err(Error::NonSquare {
            row,
            len: matrix[row].len(),
            expected: n,
        }),
        None => Ok(()),
    }
}

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination. The empty matrix has determinant 1.
pub fn det_poly(matrix: &[Vec<Polynomial>]) -> Result<Polynomial> {
    det_poly_cancellable(matrix, &Cancellation::new())
}

/// [`det_poly`] polling `cancel` once per pivot.
pub fn det_poly_cancellable(
    matrix: &[Vec<Polynomial>],
    cancel: &Cancellation,
) -> Result<Polynomial> {
    check_square(matrix)?;
    let n = matrix.len();
    match n {
        0 => return Ok(Polynomial::one()),
        1 => return Ok(matrix[0][0].clone()),
        2 => {
            return Ok(&(&matrix[0][0] * &matrix[1][1]) - &(&matrix[0][1] * &matrix[1][0]));
        }
        _ => {}
    }
    let mut a: Vec<Vec<Polynomial>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        cancel.check()?;
        if a[k][k].is_zero() {
            // pick the lowest-degree nonzero pivot below
            let swap = (k + 1..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].degree());
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = if prev.is_one() {
                    cross
                } else {
                    cross.exact_div(&prev)
                };
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant over ℚ(x): each row is cleared of denominators, the polynomial
/// determinant taken, and the row scalings divided back out.
pub fn det_rational(matrix: &[Vec<RationalFunction>]) -> Result<RationalFunction> {
    det_rational_cancellable(matrix, &Cancellation::new())
}

pub fn det_rational_cancellable(
    matrix: &[Vec<RationalFunction>],
    cancel: &Cancellation,
) -> Result<RationalFunction> {
    check_square(matrix)?;
    let mut scale = Polynomial::one();
    let mut rows = Vec::with_capacity(matrix.len());
    for row in matrix {
        let lcm = row
            .iter()
            .filter(|e| !e.is_polynomial())
            .fold(Polynomial::one(), |acc, e| {
                let g = acc.gcd(e.den());
                &acc * &e.den().exact_div(&g)
            });
        rows.push(
            row.iter()
                .map(|e| {
                    if lcm.is_one() {
                        e.num().clone()
                    } else {
                        e.num() * &lcm.exact_div(e.den())
                    }
                })
                .collect::<Vec<_>>(),
        );
        scale = &scale * &lcm;
    }
    let det = det_poly_cancellable(&rows, cancel)?;
    Ok(RationalFunction::new(det, scale))
}

/// Leibniz expansion; exponential cost, kept as an independent reference.
pub fn det_poly_leibniz(matrix: &[Vec<Polynomial>]) -> Result<Polynomial> {
    check_square(matrix)?;
    let n = matrix.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Polynomial::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let term = (0..n).fold(Polynomial::one(), |acc, i| &acc * &matrix[i][p[i]]);
        total = if inversions % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    });
    Ok(total)
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}
