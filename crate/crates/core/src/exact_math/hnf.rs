use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::rational::Integer;

/// `(g, x, y)` with `g = gcd(a, b) >= 0` and `g = x*a + y*b`.
fn extended_gcd(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Integer::one(), Integer::zero());
    let (mut old_t, mut t) = (Integer::zero(), Integer::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Applies the 2x2 row operation `[[p, q], [r, s]]` to rows `i < j`.
fn combine_rows(m: &mut [Vec<Integer>], i: usize, j: usize, coeffs: [&Integer; 4]) {
    let [p, q, r, s] = coeffs;
    let (head, tail) = m.split_at_mut(j);
    let (ri, rj) = (&mut head[i], &mut tail[0]);
    for (a, b) in ri.iter_mut().zip(rj.iter_mut()) {
        let na = p * &*a + q * &*b;
        let nb = r * &*a + s * &*b;
        *a = na;
        *b = nb;
    }
}

fn sub_multiple(m: &mut [Vec<Integer>], target: usize, source: usize, factor: &Integer) {
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(&src) {
        *t -= factor * s;
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U * A = H`,
/// `det U = ±1`, pivots strictly moving right, positive pivots, zero rows
/// last, and entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (nrows, ncols) = (a.rows(), a.cols());
    let mut h = a.to_rows();
    let mut u = IntMatrix::identity(nrows).to_rows();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        for i in r + 1..nrows {
            if h[i][c].is_zero() {
                continue;
            }
            let (g, x, y) = extended_gcd(&h[r][c], &h[i][c]);
            let p = -(&h[i][c] / &g);
            let q = &h[r][c] / &g;
            // [[x, y], [-b/g, a/g]] has determinant (xa + yb)/g = 1.
            combine_rows(&mut h, r, i, [&x, &y, &p, &q]);
            combine_rows(&mut u, r, i, [&x, &y, &p, &q]);
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for v in h[r].iter_mut().chain(u[r].iter_mut()) {
                *v = -&*v;
            }
        }
        for i in 0..r {
            let factor = h[i][c].div_floor(&h[r][c]);
            if !factor.is_zero() {
                sub_multiple(&mut h, i, r, &factor);
                sub_multiple(&mut u, i, r, &factor);
            }
        }
        r += 1;
    }
    (
        IntMatrix::from_rows(ncols, h).expect("shape preserved"),
        IntMatrix::from_rows(nrows, u).expect("shape preserved"),
    )
}

/// Checks the staircase shape produced by [`hermite_normal_form`].
pub fn is_hermite_normal_form(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero_row = false;
    for r in 0..h.rows() {
        let row = h.row(r);
        match row.iter().position(|x| !x.is_zero()) {
            None => seen_zero_row = true,
            Some(c) => {
                if seen_zero_row || last_pivot.is_some_and(|p| c <= p) {
                    return false;
                }
                let pivot = &row[c];
                if !pivot.is_positive() {
                    return false;
                }
                if (0..r).any(|above| {
                    let v = h.get(above, c);
                    v.is_negative() || v >= pivot
                }) {
                    return false;
                }
                last_pivot = Some(c);
            }
        }
    }
    true
}
