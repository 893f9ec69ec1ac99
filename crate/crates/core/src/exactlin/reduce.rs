//! Gauss-Jordan elimination with a fixed pivot rule, and everything derived
//! from it: rank, kernels, images, solving and quotient spaces.
//!
//! Pivot rule: columns are scanned left to right; within a column the first
//! row (in current order) with a nonzero entry becomes the pivot row. Every
//! canonical form in the crate is the reduced row echelon form this produces.

use super::{Mat, Scalar};

#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    /// Nonzero rows of the reduced row echelon form.
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

pub(crate) fn rref(rows: Vec<Vec<Scalar>>, ncols: usize) -> Echelon {
    let mut e = rref_prefix(rows, ncols);
    e.rows.truncate(e.pivots.len());
    e
}

/// A subspace of `Q(z)^n`, stored as the reduced row echelon basis.
///
/// Two subspaces are equal iff their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| super::mat::unit_vector(ambient_dim, i))
                .collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector outside ambient space");
        }
        let e = rref(vectors, ambient_dim);
        Subspace {
            ambient_dim,
            basis: e.rows,
            pivots: e.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a matrix.
    pub fn to_mat(&self) -> Mat {
        if self.basis.is_empty() {
            return Mat::zeros(0, self.ambient_dim);
        }
        Mat::from_rows(self.basis.clone())
    }

    /// `v` minus its projection along the pivots; zero iff `v` lies in the span.
    pub fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(&f * b);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        super::mat::is_zero_vec(&self.residual(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }
}

/// Output of [`row_reduce`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub rank: usize,
    pub kernel: Subspace,
    pub image: Subspace,
}

pub fn row_reduce(m: &Mat) -> Reduction {
    let kernel = kernel(m);
    let image = image(m);
    Reduction {
        rank: image.dim(),
        kernel,
        image,
    }
}

pub fn kernel(m: &Mat) -> Subspace {
    let e = rref(m.row_vecs(), m.cols());
    kernel_from_echelon(&e, m.cols())
}

fn kernel_from_echelon(e: &Echelon, ncols: usize) -> Subspace {
    let mut is_pivot = vec![false; ncols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); ncols];
            v[free] = Scalar::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                if !row[free].is_zero() {
                    v[p] = -&row[free];
                }
            }
            v
        })
        .collect();
    Subspace::span(ncols, vectors)
}

/// Column space of `m`.
pub fn image(m: &Mat) -> Subspace {
    Subspace::span(m.rows(), m.transpose().row_vecs())
}

/// Some `x` with `m x = target`: free variables are zero, pivot variables read
/// off the reduced augmented system. `None` when the system is inconsistent.
pub fn solve(m: &Mat, target: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(target.len(), m.rows(), "target length must equal row count");
    let n = m.cols();
    let rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(target[r].clone());
            row
        })
        .collect();
    let e = rref(rows, n + 1);
    if e.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Solve `m X = targets` column by column with one elimination.
pub fn solve_many(m: &Mat, targets: &[Vec<Scalar>]) -> Vec<Option<Vec<Scalar>>> {
    let n = m.cols();
    let k = targets.len();
    let rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend(targets.iter().map(|t| t[r].clone()));
            row
        })
        .collect();
    // eliminate only on the coefficient columns
    let e = rref_prefix(rows, n);
    (0..k)
        .map(|t| {
            let col = n + t;
            let inconsistent = e.rows[e.pivots.len()..].iter().any(|row| !row[col].is_zero());
            if inconsistent {
                return None;
            }
            let mut x = vec![Scalar::zero(); n];
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                x[p] = row[col].clone();
            }
            Some(x)
        })
        .collect()
}

/// Like [`rref`] but pivots only in the first `ncols` columns and keeps every row.
fn rref_prefix(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Echelon {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].inv().expect("pivot is nonzero");
        for x in rows[next][col..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let support: Vec<usize> = (col..width).filter(|&c| !rows[next][c].is_zero()).collect();
        let (before, rest) = rows.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for row in before.iter_mut().chain(after.iter_mut()) {
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for &c in &support {
                let delta = &factor * &pivot_row[c];
                row[c] -= &delta;
            }
        }
        pivots.push(col);
        next += 1;
    }
    Echelon { rows, pivots }
}

/// `ambient / relations`, with a projection onto coordinates and a section back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub dim: usize,
    /// `dim × ambient`, kernel exactly the relations.
    pub project: Mat,
    /// `ambient × dim`; the k-th quotient basis vector lifts to a standard basis vector.
    pub section: Mat,
    /// Ambient coordinates chosen as quotient basis (the non-pivot columns of the relations).
    pub representatives: Vec<usize>,
}

pub fn quotient(ambient_dim: usize, relations: &Subspace) -> Quotient {
    assert_eq!(relations.ambient_dim(), ambient_dim, "relations live elsewhere");
    let mut is_pivot = vec![false; ambient_dim];
    for &p in relations.pivots() {
        is_pivot[p] = true;
    }
    let reps: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let dim = reps.len();
    let mut project = Mat::zeros(dim, ambient_dim);
    let mut section = Mat::zeros(ambient_dim, dim);
    for (k, &c) in reps.iter().enumerate() {
        project.set(k, c, Scalar::one());
        section.set(c, k, Scalar::one());
    }
    // e_p ≡ e_p - row_p, which has no pivot components
    for (row, &p) in relations.basis().iter().zip(relations.pivots()) {
        for (k, &c) in reps.iter().enumerate() {
            if !row[c].is_zero() {
                project.set(k, p, -&row[c]);
            }
        }
    }
    Quotient {
        dim,
        project,
        section,
        representatives: reps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn identity_has_full_rank() {
        let r = row_reduce(&Mat::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.kernel.dim(), 0);
    }

    #[test]
    fn degenerate_two_by_two() {
        let m = Mat::from_i64(&[&[1, 1], &[1, 1]]);
        let r = row_reduce(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel, Subspace::span(2, vec![v(&[1, -1])]));
        assert_eq!(r.image, Subspace::span(2, vec![v(&[1, 1])]));
    }

    #[test]
    fn solve_examples() {
        let t = v(&[3, -4]);
        assert_eq!(solve(&Mat::identity(2), &t), Some(t.clone()));
        let m = Mat::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&m, &v(&[1, 0])), None);
        let x = solve(&m, &v(&[2, 2])).unwrap();
        assert_eq!(x, v(&[2, 0]));
        assert_eq!(m.mul_vec(&x), v(&[2, 2]));
    }

    #[test]
    fn solve_many_matches_solve() {
        let m = Mat::from_i64(&[&[1, 2, 0], &[0, 1, 1], &[1, 3, 1]]);
        let targets = vec![v(&[1, 1, 2]), v(&[1, 0, 0]), v(&[0, 0, 0])];
        let many = solve_many(&m, &targets);
        for (t, got) in targets.iter().zip(many) {
            assert_eq!(got, solve(&m, t));
        }
    }

    #[test]
    fn quotient_edge_cases() {
        let q = quotient(3, &Subspace::zero(3));
        assert_eq!(q.dim, 3);
        assert_eq!(q.project, Mat::identity(3));
        let q = quotient(3, &Subspace::full(3));
        assert_eq!(q.dim, 0);
    }

    #[test]
    fn quotient_annihilates_relations() {
        let rel = Subspace::span(4, vec![v(&[1, -1, 0, 2]), v(&[0, 0, 1, 1])]);
        let q = quotient(4, &rel);
        assert_eq!(q.dim, 2);
        assert!(q.project.mul(&q.section).is_identity());
        for b in rel.basis() {
            assert!(is_zero(&q.project.mul_vec(b)));
        }
        assert_eq!(kernel(&q.project), rel);
    }

    fn is_zero(x: &[Scalar]) -> bool {
        x.iter().all(Scalar::is_zero)
    }

    #[test]
    fn subspace_membership_and_coordinates() {
        let s = Subspace::span(3, vec![v(&[1, 2, 3]), v(&[2, 4, 7])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[3, 6, 10])));
        assert!(!s.contains(&v(&[0, 1, 0])));
        let c = s.coordinates(&v(&[3, 6, 10])).unwrap();
        let back: Vec<Scalar> = (0..3)
            .map(|i| &(&c[0] * &s.basis()[0][i]) + &(&c[1] * &s.basis()[1][i]))
            .collect();
        assert_eq!(back, v(&[3, 6, 10]));
    }
}
