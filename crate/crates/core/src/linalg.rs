//! Rank over the fraction field `F_p(T)` of matrices with Laurent-polynomial
//! entries, by fraction-free (Bareiss) elimination with full pivoting.

use crate::arith::LaurentPoly;

/// Rank over `F_p(T)` of a row-major matrix.
///
/// Every intermediate entry is a minor of the (permuted) input, so the
/// Bareiss division by the previous pivot is exact.
pub fn rank_over_fraction_field(rows: &[Vec<LaurentPoly>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let p = first.first().map_or(2, LaurentPoly::modulus);
    let ncols = first.len();
    let mut m: Vec<Vec<LaurentPoly>> = rows.to_vec();
    let nrows = m.len();
    let mut prev = LaurentPoly::one(p);
    let mut rank = 0;
    let mut cols: Vec<usize> = (0..ncols).collect();

    while rank < nrows.min(ncols) {
        // pivot: nonzero entry of lowest "size" in the trailing block
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in m.iter().enumerate().skip(rank) {
            for (ci, &c) in cols.iter().enumerate().skip(rank) {
                let e = &row[c];
                if !e.is_zero() && best.is_none_or(|(_, _, sz)| e.len() < sz) {
                    best = Some((r, ci, e.len()));
                }
            }
        }
        let Some((pr, pc, _)) = best else {
            break;
        };
        m.swap(rank, pr);
        cols.swap(rank, pc);
        let pivot_col = cols[rank];
        let pivot = m[rank][pivot_col].clone();
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[pivot_col].clone();
            for &c in cols.iter().skip(rank + 1) {
                let mut num = &pivot * &row[c];
                if !factor.is_zero() && !pivot_row[c].is_zero() {
                    num = &num - &(&factor * &pivot_row[c]);
                }
                row[c] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            row[pivot_col] = LaurentPoly::zero(p);
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
