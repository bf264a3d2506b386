use num_integer::Integer;
use num_traits::Signed;

use super::DenseMatrix;

/// Invariant factors `d_1 | d_2 | …`, all positive; `rank` is their count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub factors: Vec<T>,
}

impl<T> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Smallest nonzero entry by absolute value in the block `[t.., t..]`.
fn least_pivot<T: Integer + Signed + Clone>(a: &DenseMatrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows() {
        for c in t..a.cols() {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| v.abs() < a.get(br, bc).abs()) {
                best = Some((r, c));
                if v.is_one() || (-v.clone()).is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn add_row_multiple<T: Integer + Clone>(a: &mut DenseMatrix<T>, dst: usize, src: usize, q: &T) {
    for c in 0..a.cols() {
        let s = a.get(src, c).clone();
        if !s.is_zero() {
            let v = a.get(dst, c).clone() - q.clone() * s;
            a.set(dst, c, v);
        }
    }
}

fn add_col_multiple<T: Integer + Clone>(a: &mut DenseMatrix<T>, dst: usize, src: usize, q: &T) {
    for r in 0..a.rows() {
        let s = a.get(r, src).clone();
        if !s.is_zero() {
            let v = a.get(r, dst).clone() - q.clone() * s;
            a.set(r, dst, v);
        }
    }
}

/// Smith normal form by unimodular row and column operations, always pivoting
/// on an entry of least absolute value.
pub fn smith_normal_form<T: Integer + Signed + Clone>(m: &DenseMatrix<T>) -> SmithForm<T> {
    let mut a = m.clone();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < a.rows().min(a.cols()) {
        let Some((pr, pc)) = least_pivot(&a, t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let p = a.get(t, t).clone();
            let mut smaller = None;
            for r in t + 1..a.rows() {
                let q = a.get(r, t).div_floor(&p);
                if !q.is_zero() {
                    add_row_multiple(&mut a, r, t, &q);
                }
                if !a.get(r, t).is_zero() {
                    smaller = Some((r, t));
                }
            }
            for c in t + 1..a.cols() {
                let q = a.get(t, c).div_floor(&p);
                if !q.is_zero() {
                    add_col_multiple(&mut a, c, t, &q);
                }
                if !a.get(t, c).is_zero() {
                    smaller = Some((t, c));
                }
            }
            if let Some((r, c)) = smaller {
                // a nonzero remainder is strictly smaller than the pivot
                a.swap_rows(t, r);
                a.swap_cols(t, c);
                continue;
            }
            // row and column cleared; enforce divisibility on the rest
            let bad = (t + 1..a.rows())
                .flat_map(|r| (t + 1..a.cols()).map(move |c| (r, c)))
                .find(|&(r, c)| !a.get(r, c).is_multiple_of(&p));
            match bad {
                Some((r, _)) => {
                    let one = T::one();
                    add_row_multiple(&mut a, t, r, &(T::zero() - one));
                }
                None => break,
            }
        }
        factors.push(a.get(t, t).abs());
        t += 1;
    }
    SmithForm { factors }
}
