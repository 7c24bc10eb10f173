use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Minimal commutative-ring surface needed for division-free determinants.
pub trait CommRing: Clone {
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

/// Determinant by cofactor expansion along the first row, skipping zero
/// entries and memoizing minors on the set of remaining columns.
///
/// `one` is the multiplicative identity returned for the empty matrix (it
/// also fixes e.g. the truncation order of series entries).
pub fn determinant<R: CommRing>(matrix: &[Vec<R>], one: &R) -> R {
    let n = matrix.len();
    assert!(n < 64, "determinant: matrix too large");
    assert!(matrix.iter().all(|row| row.len() == n), "determinant: matrix not square");
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut memo = BTreeMap::new();
    minor(matrix, full, one, &mut memo)
}

fn minor<R: CommRing>(matrix: &[Vec<R>], cols: u64, one: &R, memo: &mut BTreeMap<u64, R>) -> R {
    if cols == 0 {
        return one.clone();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let row = matrix.len() - cols.count_ones() as usize;
    let mut acc: Option<R> = None;
    let mut sign_positive = true;
    for c in 0..matrix.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &matrix[row][c];
        if !entry.ring_is_zero() {
            let sub = minor(matrix, cols & !(1 << c), one, memo);
            let term = entry.ring_mul(&sub);
            acc = Some(match acc {
                None if sign_positive => term,
                None => one.ring_sub(one).ring_sub(&term),
                Some(a) if sign_positive => a.ring_add(&term),
                Some(a) => a.ring_sub(&term),
            });
        }
        sign_positive = !sign_positive;
    }
    let out = acc.unwrap_or_else(|| one.ring_sub(one));
    memo.insert(cols, out.clone());
    out
}
