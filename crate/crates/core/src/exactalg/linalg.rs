use alloc::vec::Vec;

use num_traits::Zero;

use super::rational::Rational;
use crate::{Error, Result};

/// Dense row-major rational matrix.
pub type RationalMatrix = Vec<Vec<Rational>>;

/// Solves `a·x = b` exactly by Gaussian elimination; `a` must be square and
/// nonsingular.
pub fn solve(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "solve: dimension mismatch");
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "solve: matrix not square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        m.swap(col, pivot);
        let inv = Rational::from_integer(1.into()) / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Ok(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use alloc::vec;

    #[test]
    fn solves_small_system() {
        let a = vec![vec![int(1), int(1)], vec![int(0), int(-1)]];
        let x = solve(&a, &[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(x, vec![int(1), rat(-1, 2)]);
    }

    #[test]
    fn singular_is_rejected() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&a, &[int(0), int(0)]), Err(Error::SingularMatrix));
    }
}
