//! Finite-dimensional algebras given by structure constants, and the raw
//! entry lists used to build them.

use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, kron_vec, Mat, Scalar};

/// `(i, s)`: coefficient `s` at basis index `i`.
pub type Entry1 = (usize, Scalar);
/// `(i, j, s)`.
pub type Entry2 = (usize, usize, Scalar);
/// `(i, j, k, s)`.
pub type Entry3 = (usize, usize, usize, Scalar);

/// An element of a finite-dimensional space in coordinates.
pub type Vector = Vec<Scalar>;

/// Associative unital algebra by structure constants.
///
/// `mult` is `dim × dim²`: column `i*dim + j` holds `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    mult: Mat,
    unit: Vector,
}

impl Algebra {
    pub fn new(dim: usize, mult: &[Entry3], unit: &[Entry1], what: &str) -> Result<Self> {
        Ok(Algebra {
            dim,
            mult: mat_from_entries3(
                (dim, dim, dim),
                (dim, dim * dim),
                mult,
                |i, j, k| (k, i * dim + j),
                what,
                "mult",
            )?,
            unit: vec_from_entries(dim, unit, what, "unit")?,
        })
    }

    pub fn from_parts(mult: Mat, unit: Vector) -> Self {
        let dim = unit.len();
        assert_eq!((mult.rows(), mult.cols()), (dim, dim * dim));
        Algebra { dim, mult, unit }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn mult_matrix(&self) -> &Mat {
        &self.mult
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.mult.column(i * self.dim + j)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.mult.get(k, i * n + j);
                    if !c.is_zero() {
                        *o += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    /// Multiply pure-tensor-wise in `self ⊗ other`.
    pub fn tensor_mul(&self, other: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vector {
        let (n, m) = (self.dim, other.dim);
        let mut out = vec![Scalar::zero(); n * m];
        for i in 0..n {
            for a in 0..m {
                let xi = &x[i * m + a];
                if xi.is_zero() {
                    continue;
                }
                for j in 0..n {
                    for b in 0..m {
                        let yj = &y[j * m + b];
                        if yj.is_zero() {
                            continue;
                        }
                        let left = self.basis_product(i, j);
                        let right = other.basis_product(a, b);
                        add_scaled(&mut out, &(xi * yj), &kron_vec(&left, &right));
                    }
                }
            }
        }
        out
    }

    /// Appends one violation (with the first witness found) per failing axiom.
    pub fn check(&self, violations: &mut Vec<crate::hopf::Violation>) {
        use crate::hopf::{Axiom, Violation};
        let n = self.dim;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    let lhs = self.mul(&ij, &crate::exactlin::unit_vector(n, k));
                    let rhs = self.mul(&crate::exactlin::unit_vector(n, i), &jk);
                    if lhs != rhs {
                        violations.push(Violation::new(Axiom::Associativity, vec![i, j, k]));
                        break 'assoc;
                    }
                }
            }
        }
        for i in 0..n {
            let e = crate::exactlin::unit_vector(n, i);
            if self.mul(&self.unit, &e) != e {
                violations.push(Violation::new(Axiom::LeftUnit, vec![i]));
                break;
            }
        }
        for i in 0..n {
            let e = crate::exactlin::unit_vector(n, i);
            if self.mul(&e, &self.unit) != e {
                violations.push(Violation::new(Axiom::RightUnit, vec![i]));
                break;
            }
        }
    }

    pub fn entries(&self) -> (Vec<Entry3>, Vec<Entry1>) {
        let n = self.dim;
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = self.mult.get(k, i * n + j);
                    if !s.is_zero() {
                        mult.push((i, j, k, s.clone()));
                    }
                }
            }
        }
        (mult, vec_entries(&self.unit))
    }
}

pub(crate) fn vec_entries(v: &[Scalar]) -> Vec<Entry1> {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i, s.clone()))
        .collect()
}

fn out_of_range(what: &str, field: &str, entry: String, dims: String) -> Error {
    Error::Malformed(format!("{what}: {field} entry {entry} out of range for {dims}"))
}

pub(crate) fn vec_from_entries(dim: usize, entries: &[Entry1], what: &str, field: &str) -> Result<Vector> {
    let mut v = vec![Scalar::zero(); dim];
    for (i, s) in entries {
        if *i >= dim {
            return Err(out_of_range(what, field, format!("({i})"), format!("dim {dim}")));
        }
        v[*i] += s;
    }
    Ok(v)
}

/// Build a matrix from 3-index entries; `place` maps `(i, j, k)` to `(row, col)`.
pub(crate) fn mat_from_entries3(
    (d0, d1, d2): (usize, usize, usize),
    (rows, cols): (usize, usize),
    entries: &[Entry3],
    place: impl Fn(usize, usize, usize) -> (usize, usize),
    what: &str,
    field: &str,
) -> Result<Mat> {
    let mut m = Mat::zeros(rows, cols);
    for (i, j, k, s) in entries {
        if *i >= d0 || *j >= d1 || *k >= d2 {
            return Err(out_of_range(
                what,
                field,
                format!("({i}, {j}, {k})"),
                format!("dims ({d0}, {d1}, {d2})"),
            ));
        }
        let (r, c) = place(*i, *j, *k);
        m.add_at(r, c, s);
    }
    Ok(m)
}

pub(crate) fn mat_from_entries2(d0: usize, d1: usize, entries: &[Entry2], what: &str, field: &str) -> Result<Mat> {
    // (i, j, s): image of e_i has coefficient s at e_j, so column i
    let mut m = Mat::zeros(d1, d0);
    for (i, j, s) in entries {
        if *i >= d0 || *j >= d1 {
            return Err(out_of_range(
                what,
                field,
                format!("({i}, {j})"),
                format!("dims ({d0}, {d1})"),
            ));
        }
        m.add_at(*j, *i, s);
    }
    Ok(m)
}

pub(crate) fn mat_entries2(m: &Mat) -> Vec<Entry2> {
    let mut out = Vec::new();
    for i in 0..m.cols() {
        for j in 0..m.rows() {
            let s = m.get(j, i);
            if !s.is_zero() {
                out.push((i, j, s.clone()));
            }
        }
    }
    out
}
