//! Integer lattice algorithms: Hermite and Smith normal forms with explicit
//! unimodular transforms, integer kernels, rank and fraction-free determinants.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, IntMat, IntVec};

/// Column-style Hermite form: `matrix * transform = form`, with `transform` unimodular.
///
/// The first `rank` columns of `form` are in column echelon form with positive
/// pivots; the remaining columns are zero, so the matching columns of
/// `transform` are a basis of the integer kernel.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub form: IntMat,
    pub transform: IntMat,
    pub rank: usize,
    /// Row index of the pivot of each of the first `rank` columns.
    pub pivot_rows: Vec<usize>,
}

pub fn hermite_column_form(m: &IntMat) -> HermiteForm {
    let mut w = m.clone();
    let n = m.cols();
    let mut u = IntMat::identity(n);
    let mut pcol = 0;
    let mut pivot_rows = Vec::new();
    for i in 0..m.rows() {
        if pcol == n {
            break;
        }
        loop {
            // smallest nonzero |entry| in row i among the unprocessed columns
            let best = (pcol..n)
                .filter(|&k| !w[(i, k)].is_zero())
                .min_by(|&a, &b| w[(i, a)].abs().cmp(&w[(i, b)].abs()));
            let Some(best) = best else { break };
            w.swap_cols(pcol, best);
            u.swap_cols(pcol, best);
            let mut clean = true;
            for k in pcol + 1..n {
                if w[(i, k)].is_zero() {
                    continue;
                }
                let q = w[(i, k)].div_floor(&w[(i, pcol)]);
                let neg_q = -q;
                w.add_col_multiple(k, pcol, &neg_q);
                u.add_col_multiple(k, pcol, &neg_q);
                if !w[(i, k)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if pcol < n && !w[(i, pcol)].is_zero() {
            if w[(i, pcol)].is_negative() {
                w.negate_col(pcol);
                u.negate_col(pcol);
            }
            // reduce earlier columns modulo the pivot
            for k in 0..pcol {
                let q = w[(i, k)].div_floor(&w[(i, pcol)]);
                if !q.is_zero() {
                    let neg_q = -q;
                    w.add_col_multiple(k, pcol, &neg_q);
                    u.add_col_multiple(k, pcol, &neg_q);
                }
            }
            pivot_rows.push(i);
            pcol += 1;
        }
    }
    HermiteForm {
        form: w,
        transform: u,
        rank: pcol,
        pivot_rows,
    }
}

/// A basis of `{v ∈ Z^n : M v = 0}` as a free abelian group.
pub fn kernel_lattice_basis(m: &IntMat) -> Vec<IntVec> {
    let h = hermite_column_form(m);
    (h.rank..m.cols()).map(|j| h.transform.column(j)).collect()
}

/// Smith form: `left * matrix * right = diagonal`, with both transforms unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: IntMat,
    pub diagonal: IntMat,
    pub right: IntMat,
}

impl SmithForm {
    /// Nonzero elementary divisors, each dividing the next.
    pub fn divisors(&self) -> Vec<Int> {
        let k = self.diagonal.rows().min(self.diagonal.cols());
        (0..k)
            .map(|i| self.diagonal[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMat) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMat::identity(r);
    let mut right = IntMat::identity(c);

    let min_entry = |a: &IntMat, t: usize| -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    };

    for t in 0..r.min(c) {
        let Some((pi, pj)) = min_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                // bring the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..r {
                    if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..c {
                    if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                        best = (t, j);
                    }
                }
                a.swap_rows(t, best.0);
                left.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                right.swap_cols(t, best.1);
                continue;
            }
            // divisibility: the pivot must divide the rest of the submatrix
            let offender = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[(i, j)] % &a[(t, t)]).is_zero());
            match offender {
                Some((i, _)) => {
                    a.add_row_multiple(t, i, &Int::one());
                    left.add_row_multiple(t, i, &Int::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    SmithForm {
        left,
        diagonal: a,
        right,
    }
}

/// True iff the integer span of `points` (each of length `d`) is all of `Z^d`.
pub fn lattice_span_is_full(points: &[IntVec], d: usize) -> bool {
    if d == 0 {
        return true;
    }
    if points.len() < d {
        return false;
    }
    let m = IntMat::from_columns(d, points);
    let divisors = smith_normal_form(&m).divisors();
    divisors.len() == d && divisors.iter().all(One::is_one)
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &IntMat) -> Int {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Int::one();
    }
    let mut a = m.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
            return Int::zero();
        };
        if p != k {
            a.swap_rows(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, k)] = Int::zero();
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

/// Rank over the rationals.
pub fn rank(m: &IntMat) -> usize {
    let mut a = m.clone();
    let (r, c) = (a.rows(), a.cols());
    let mut row = 0;
    for col in 0..c {
        if row == r {
            break;
        }
        let Some(p) = (row..r).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, row);
        for i in row + 1..r {
            if a[(i, col)].is_zero() {
                continue;
            }
            let f = a[(i, col)].clone();
            let g = a[(row, col)].clone();
            for j in col..c {
                let v = &a[(i, j)] * &g - &a[(row, j)] * &f;
                a[(i, j)] = v;
            }
            // keep entries small
            let content = (col..c).fold(Int::zero(), |acc, j| acc.gcd(&a[(i, j)]));
            if !content.is_zero() && !content.is_one() {
                for j in col..c {
                    a[(i, j)] = &a[(i, j)] / &content;
                }
            }
        }
        row += 1;
    }
    row
}

/// Coordinates of `points` in a basis of the affine lattice they generate.
///
/// The first point becomes the origin; the differences are written in the
/// basis given by the Hermite form of the difference matrix. The result has
/// one entry per dimension of the affine hull, and affine-integral relations
/// among the points are preserved.
pub fn affine_lattice_coordinates(points: &[IntVec]) -> Vec<IntVec> {
    let Some(base) = points.first() else {
        return Vec::new();
    };
    let d = base.len();
    let diffs: Vec<IntVec> = points.iter().map(|p| p.sub(base)).collect();
    let h = hermite_column_form(&IntMat::from_columns(d, &diffs));
    diffs
        .iter()
        .map(|v| {
            // forward substitution down the pivots of the echelon basis
            let mut rest = v.clone();
            let mut coords = Vec::with_capacity(h.rank);
            for (k, &row) in h.pivot_rows.iter().enumerate() {
                let (q, r) = rest[row].div_rem(&h.form[(row, k)]);
                debug_assert!(r.is_zero(), "point outside its own lattice");
                for i in 0..d {
                    let delta = &h.form[(i, k)] * &q;
                    rest[i] -= delta;
                }
                coords.push(q);
            }
            debug_assert!(rest.is_zero());
            IntVec::new(coords)
        })
        .collect()
}
