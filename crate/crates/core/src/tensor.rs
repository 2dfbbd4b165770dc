//! Dense complex linear algebra over registers of qutrits.
//!
//! Matrices are stored row-major. Registers are ordered lists of string
//! labels; the leftmost label is the most significant base-3 digit of a
//! basis index, so `|q0 q1 q2>` sits at `9*q0 + 3*q1 + q2`.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

pub const QUTRIT_DIM: usize = 3;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `ω^k` with `ω = exp(2πi/3)`.
pub fn omega_pow(k: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k % 3) as f64 / 3.0)
}

/// `3^n`.
pub fn qutrit_dim(num_qutrits: usize) -> usize {
    QUTRIT_DIM.pow(num_qutrits as u32)
}

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries, rejecting bad lengths and
    /// non-finite values.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("empty matrix {rows}x{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(pos) = data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite {
                row: pos / cols,
                col: pos % cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from nested rows. Panics on ragged input; meant for
    /// literal tables.
    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Self {
        let cols = rows[0].as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let converted: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&converted)
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &z) in entries.iter().enumerate() {
            m.data[i * n + i] = z;
        }
        m
    }

    /// `|u><v|`.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        let mut m = Self::zeros(u.len(), v.len());
        for (i, &a) in u.iter().enumerate() {
            for (j, &b) in v.iter().enumerate() {
                m.data[i * v.len() + j] = a * b.conj();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let rhs_row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `self * v`.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let d = (self.data[i * n + j] - self.data[j * n + i].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.is_square() {
            return Err(Error::Shape("eigenvalues need a square matrix".into()));
        }
        let m = DMatrix::from_row_slice(self.rows, self.cols, &self.data);
        let mut eig: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        eig.sort_by(f64::total_cmp);
        Ok(eig)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in add"
        );
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on a shape mismatch; use [`ComplexMatrix::matmul`] for the
    /// fallible form.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("shape mismatch in mul")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.data[i * self.cols + j];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product with the default dimension limit.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    kron_with_limit(a, b, tol::MAX_DIMENSION)
}

pub fn kron_with_limit(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    limit: usize,
) -> Result<ComplexMatrix> {
    let rows = a.rows.checked_mul(b.rows);
    let cols = a.cols.checked_mul(b.cols);
    let (rows, cols) = match (rows, cols) {
        (Some(r), Some(c)) if r <= limit && c <= limit => (r, c),
        _ => {
            return Err(Error::DimensionLimit {
                rows: a.rows.saturating_mul(b.rows),
                cols: a.cols.saturating_mul(b.cols),
                limit,
            })
        }
    };
    let mut out = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let aij = a.data[i * a.cols + j];
            if aij == ZERO {
                continue;
            }
            for k in 0..b.rows {
                let dst = (i * b.rows + k) * cols + j * b.cols;
                let src = &b.data[k * b.cols..(k + 1) * b.cols];
                for (o, &bkl) in out.data[dst..dst + b.cols].iter_mut().zip(src) {
                    *o = aij * bkl;
                }
            }
        }
    }
    Ok(out)
}

/// Conjugate transpose.
pub fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.cols, a.rows);
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.data[j * a.rows + i] = a.data[i * a.cols + j].conj();
        }
    }
    out
}

pub fn trace(a: &ComplexMatrix) -> Result<Complex64> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "trace of a non-square {}x{} matrix",
            a.rows, a.cols
        )));
    }
    Ok((0..a.rows).map(|i| a.data[i * a.cols + i]).sum())
}

fn check_labels(labels: &[String], num_qutrits: usize) -> Result<()> {
    if labels.len() != num_qutrits {
        return Err(Error::Label(format!(
            "{} labels for {num_qutrits} qutrits",
            labels.len()
        )));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::Label(format!("duplicate label '{l}'")));
        }
    }
    Ok(())
}

fn num_qutrits_for(dim: usize) -> Option<usize> {
    let mut n = 0;
    let mut d = 1;
    while d < dim {
        d *= QUTRIT_DIM;
        n += 1;
    }
    (d == dim && n > 0).then_some(n)
}

fn owned_labels<S: AsRef<str>>(labels: &[S]) -> Vec<String> {
    labels.iter().map(|s| s.as_ref().to_owned()).collect()
}

/// A normalized amplitude vector over a labeled qutrit register.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    labels: Vec<String>,
}

impl PureState {
    pub fn new<S: AsRef<str>>(labels: &[S], amplitudes: Vec<Complex64>) -> Result<Self> {
        let labels = owned_labels(labels);
        let n = labels.len();
        if n == 0 {
            return Err(Error::Label("a register needs at least one qutrit".into()));
        }
        if amplitudes.len() != qutrit_dim(n) {
            return Err(Error::Shape(format!(
                "{} amplitudes for {n} qutrits",
                amplitudes.len()
            )));
        }
        check_labels(&labels, n)?;
        if let Some(pos) = amplitudes
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite { row: pos, col: 0 });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > tol::NORM {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amplitudes, labels })
    }

    /// Computational basis ket, one digit per label.
    pub fn basis<S: AsRef<str>>(labels: &[S], digits: &[usize]) -> Result<Self> {
        if digits.len() != labels.len() || digits.iter().any(|&d| d >= QUTRIT_DIM) {
            return Err(Error::Shape(format!("invalid basis digits {digits:?}")));
        }
        let mut amps = vec![ZERO; qutrit_dim(labels.len())];
        amps[digits.iter().fold(0, |acc, &d| acc * QUTRIT_DIM + d)] = ONE;
        Self::new(labels, amps)
    }

    pub fn num_qutrits(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::Shape("inner product of different dimensions".into()));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amps.push(a * b);
            }
        }
        PureState::new(&labels, amps)
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix {
            matrix: self.projector(),
            labels: self.labels.clone(),
            normalized: true,
        }
    }
}

/// Hermitian matrix over a labeled register. Normalized instances have unit
/// trace; the unnormalized variant carries intermediate post-measurement
/// products whose trace is an outcome probability.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    labels: Vec<String>,
    normalized: bool,
}

impl DensityMatrix {
    pub fn new<S: AsRef<str>>(labels: &[S], matrix: ComplexMatrix) -> Result<Self> {
        let rho = Self::unnormalized(labels, matrix)?;
        let tr = trace(&rho.matrix)?.re;
        if (tr - 1.0).abs() > tol::TRACE {
            return Err(Error::TraceNotOne { trace: tr });
        }
        Ok(Self {
            normalized: true,
            ..rho
        })
    }

    pub fn unnormalized<S: AsRef<str>>(labels: &[S], matrix: ComplexMatrix) -> Result<Self> {
        let labels = owned_labels(labels);
        if !matrix.is_square() {
            return Err(Error::Shape("density matrix must be square".into()));
        }
        let n = num_qutrits_for(matrix.rows()).ok_or_else(|| {
            Error::Shape(format!("dimension {} is not a power of 3", matrix.rows()))
        })?;
        check_labels(&labels, n)?;
        let deviation = matrix.hermitian_deviation();
        if deviation > tol::ALGEBRAIC {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self {
            matrix,
            labels,
            normalized: false,
        })
    }

    pub fn maximally_mixed<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let d = qutrit_dim(labels.len());
        Self::new(
            labels,
            ComplexMatrix::identity(d).scale_real(1.0 / d as f64),
        )
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_qutrits(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn trace(&self) -> f64 {
        trace(&self.matrix).expect("square by construction").re
    }

    /// Divides by the trace, producing a normalized state.
    pub fn normalize(&self) -> Result<Self> {
        let tr = self.trace();
        if tr <= 0.0 {
            return Err(Error::TraceNotOne { trace: tr });
        }
        DensityMatrix::new(&self.labels, self.matrix.scale_real(1.0 / tr))
    }

    /// Register-ordered tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let matrix = kron(&self.matrix, &other.matrix)?;
        let rho = DensityMatrix::unnormalized(&labels, matrix)?;
        Ok(DensityMatrix {
            normalized: self.normalized && other.normalized,
            ..rho
        })
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self.matrix.hermitian_eigenvalues()?[0])
    }

    /// Validation-mode PSD check.
    pub fn check_psd(&self) -> Result<()> {
        let min = self.min_eigenvalue()?;
        if min < -tol::TRACE {
            return Err(Error::PsdViolation { value: min });
        }
        Ok(())
    }
}

/// Traces out the registers named in `discard`, keeping the others in their
/// original order.
pub fn partial_trace<S: AsRef<str>>(rho: &DensityMatrix, discard: &[S]) -> Result<DensityMatrix> {
    let labels = rho.labels();
    let mut drop = vec![false; labels.len()];
    for name in discard {
        let name = name.as_ref();
        let pos = labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::Label(format!("unknown label '{name}'")))?;
        drop[pos] = true;
    }
    if drop.iter().all(|&d| d) {
        return Err(Error::Label("cannot trace out every register".into()));
    }
    if !drop.iter().any(|&d| d) {
        return Ok(rho.clone());
    }

    let n = labels.len();
    let dim = rho.dim();
    let kept_labels: Vec<String> = labels
        .iter()
        .zip(&drop)
        .filter(|(_, &d)| !d)
        .map(|(l, _)| l.clone())
        .collect();
    let kept_dim = qutrit_dim(kept_labels.len());

    // Split every full index into (kept part, discarded part).
    let split: Vec<(usize, usize)> = (0..dim)
        .map(|index| {
            let mut rest = index;
            let mut digits = vec![0; n];
            for slot in (0..n).rev() {
                digits[slot] = rest % QUTRIT_DIM;
                rest /= QUTRIT_DIM;
            }
            let mut kept = 0;
            let mut dropped = 0;
            for (slot, &digit) in digits.iter().enumerate() {
                if drop[slot] {
                    dropped = dropped * QUTRIT_DIM + digit;
                } else {
                    kept = kept * QUTRIT_DIM + digit;
                }
            }
            (kept, dropped)
        })
        .collect();

    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(kept_dim, kept_dim);
    for (i, &(ki, di)) in split.iter().enumerate() {
        for (j, &(kj, dj)) in split.iter().enumerate() {
            if di == dj {
                out[(ki, kj)] += m[(i, j)];
            }
        }
    }

    let reduced = DensityMatrix::unnormalized(&kept_labels, out)?;
    if rho.is_normalized() {
        DensityMatrix::new(&kept_labels, reduced.matrix)
    } else {
        Ok(reduced)
    }
}

/// `<φ|ρ|φ>` as a real number, the unsquared overlap.
pub fn overlap(phi: &PureState, rho: &DensityMatrix) -> Result<f64> {
    if phi.dim() != rho.dim() {
        return Err(Error::Shape(format!(
            "state of dimension {} against density matrix of dimension {}",
            phi.dim(),
            rho.dim()
        )));
    }
    let rho_phi = rho.matrix().apply(phi.amplitudes())?;
    let value: Complex64 = phi
        .amplitudes()
        .iter()
        .zip(&rho_phi)
        .map(|(a, b)| a.conj() * b)
        .sum();
    Ok(value.re)
}

/// `F(|φ>, ρ) = sqrt(<φ|ρ|φ>)`, clamped into [0, 1] when within tolerance.
pub fn fidelity_pure_mixed(phi: &PureState, rho: &DensityMatrix) -> Result<f64> {
    let value = overlap(phi, rho)?;
    if value < -tol::TRACE {
        return Err(Error::PsdViolation { value });
    }
    if value > 1.0 + tol::TRACE {
        return Err(Error::Shape(format!(
            "overlap {value} exceeds 1; is the density matrix normalized?"
        )));
    }
    Ok(value.clamp(0.0, 1.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::{weyl, WeylIndex};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
        let data = (0..rows * cols)
            .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        ComplexMatrix::from_vec(rows, cols, data).unwrap()
    }

    fn random_density(rng: &mut ChaCha8Rng, labels: &[&str]) -> DensityMatrix {
        let d = qutrit_dim(labels.len());
        let a = random_matrix(rng, d, d);
        let aa = &a * &dagger(&a);
        let tr = trace(&aa).unwrap().re;
        DensityMatrix::new(labels, aa.scale_real(1.0 / tr)).unwrap()
    }

    #[test]
    fn kron_of_identities() {
        let i9 = kron(&ComplexMatrix::identity(3), &ComplexMatrix::identity(3)).unwrap();
        assert_eq!(i9, ComplexMatrix::identity(9));
    }

    #[test]
    fn kron_projector_block_structure() {
        let p0 = ComplexMatrix::diagonal(&[ONE, ZERO, ZERO]);
        let k = kron(&p0, &ComplexMatrix::identity(3)).unwrap();
        let mut expected = ComplexMatrix::zeros(9, 9);
        for i in 0..3 {
            expected[(i, i)] = ONE;
        }
        assert_eq!(k, expected);
    }

    #[test]
    fn kron_weyl_matches_index_formula() {
        let a = weyl(WeylIndex::new(0, 1).unwrap());
        let b = weyl(WeylIndex::new(1, 0).unwrap());
        let k = kron(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for p in 0..3 {
                    for q in 0..3 {
                        let expect = a[(i, j)] * b[(p, q)];
                        assert!((k[(3 * i + p, 3 * j + q)] - expect).norm() < 1e-15);
                    }
                }
            }
        }
        // W01 (x) W10 maps |1,1> to ω|0,1>.
        assert!((k[(1, 4)] - c(-0.5, 3f64.sqrt() / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn kron_rejects_oversized_products() {
        let i3 = ComplexMatrix::identity(3);
        let err = kron_with_limit(&i3, &i3, 8).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionLimit {
                rows: 9,
                cols: 9,
                limit: 8
            }
        );
        assert!(kron_with_limit(&i3, &i3, 9).is_ok());
        let wide = ComplexMatrix::zeros(1, 6561);
        assert!(matches!(
            kron(&wide, &ComplexMatrix::zeros(1, 3)),
            Err(Error::DimensionLimit { .. })
        ));
    }

    #[test]
    fn dagger_cases() {
        assert_eq!(
            dagger(&ComplexMatrix::identity(3)),
            ComplexMatrix::identity(3)
        );
        let w = weyl(WeylIndex::new(1, 1).unwrap());
        let prod = &dagger(&w) * &w;
        assert!(prod.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-14);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_matrix(&mut rng, 9, 9);
        assert_eq!(dagger(&dagger(&a)), a);
    }

    #[test]
    fn trace_cases() {
        assert_eq!(trace(&ComplexMatrix::identity(27)).unwrap(), c(27.0, 0.0));
        let w10 = weyl(WeylIndex::new(1, 0).unwrap());
        assert!(trace(&w10).unwrap().norm() < 1e-15);
        assert!(matches!(
            trace(&ComplexMatrix::zeros(2, 3)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn from_vec_rejects_non_finite() {
        let err = ComplexMatrix::from_vec(1, 2, vec![ONE, c(f64::NAN, 0.0)]).unwrap_err();
        assert_eq!(err, Error::NonFinite { row: 0, col: 1 });
        assert!(ComplexMatrix::from_vec(2, 2, vec![ONE; 3]).is_err());
    }

    #[test]
    fn pure_state_invariants() {
        assert!(matches!(
            PureState::new(&["a"], vec![ONE, ONE, ZERO]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            PureState::new(&["a", "a"], {
                let mut v = vec![ZERO; 9];
                v[0] = ONE;
                v
            }),
            Err(Error::Label(_))
        ));
        let s = PureState::basis(&["x", "y"], &[2, 1]).unwrap();
        assert_eq!(s.amplitudes()[7], ONE);
    }

    #[test]
    fn partial_trace_of_product_factorizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = random_density(&mut rng, &["A"]);
            let b = random_density(&mut rng, &["B"]);
            let ab = a.tensor(&b).unwrap();
            let ra = partial_trace(&ab, &["B"]).unwrap();
            assert!(ra.matrix().max_abs_diff(a.matrix()) < 1e-13);
            assert_eq!(ra.labels(), &["A".to_string()]);
            let rb = partial_trace(&ab, &["A"]).unwrap();
            assert!(rb.matrix().max_abs_diff(b.matrix()) < 1e-13);
        }
    }

    /// Direct index-sum oracle for a single discarded trailing block.
    fn brute_trace_last(m: &ComplexMatrix, keep_dim: usize, drop_dim: usize) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(keep_dim, keep_dim);
        for i in 0..keep_dim {
            for j in 0..keep_dim {
                let mut s = ZERO;
                for k in 0..drop_dim {
                    s += m[(i * drop_dim + k, j * drop_dim + k)];
                }
                out[(i, j)] = s;
            }
        }
        out
    }

    #[test]
    fn maximally_correlated_marginal_is_maximally_mixed() {
        let s = 1.0 / 3f64.sqrt();
        let mut amps = vec![ZERO; 27];
        for d in 0..3 {
            amps[d * 13] = c(s, 0.0);
        }
        let psi = PureState::new(&["a", "0", "1"], amps).unwrap();
        let rho = psi.to_density();
        let reduced = partial_trace(&rho, &["0", "1"]).unwrap();
        let oracle = brute_trace_last(rho.matrix(), 3, 9);
        assert!(reduced.matrix().max_abs_diff(&oracle) < 1e-15);
        let mixed = ComplexMatrix::identity(3).scale_real(1.0 / 3.0);
        assert!(reduced.matrix().max_abs_diff(&mixed) < 1e-15);
    }

    #[test]
    fn partial_trace_keeps_order_for_interior_labels() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_density(&mut rng, &["a"]);
        let b = random_density(&mut rng, &["b"]);
        let cc = random_density(&mut rng, &["c"]);
        let abc = a.tensor(&b).unwrap().tensor(&cc).unwrap();
        let ac = partial_trace(&abc, &["b"]).unwrap();
        let expected = a.tensor(&cc).unwrap();
        assert_eq!(ac.labels(), expected.labels());
        assert!(ac.matrix().max_abs_diff(expected.matrix()) < 1e-13);
    }

    #[test]
    fn partial_trace_errors_and_identity() {
        let rho = DensityMatrix::maximally_mixed(&["a", "b"]).unwrap();
        assert!(matches!(partial_trace(&rho, &["z"]), Err(Error::Label(_))));
        assert!(matches!(
            partial_trace(&rho, &["a", "b"]),
            Err(Error::Label(_))
        ));
        let same = partial_trace::<&str>(&rho, &[]).unwrap();
        assert_eq!(same, rho);
    }

    #[test]
    fn partial_trace_preserves_trace_and_hermiticity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let rho = random_density(&mut rng, &["a", "0", "1"]);
            for discard in [&["a"][..], &["0"], &["1"], &["a", "1"], &["0", "1"]] {
                let r = partial_trace(&rho, discard).unwrap();
                assert!((r.trace() - rho.trace()).abs() < 1e-12);
                assert!(r.matrix().hermitian_deviation() < 1e-12);
            }
        }
    }

    #[test]
    fn fidelity_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let raw: Vec<Complex64> = (0..3)
            .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let phi = PureState::new(&["a"], raw.iter().map(|z| z / norm).collect()).unwrap();
        assert!((fidelity_pure_mixed(&phi, &phi.to_density()).unwrap() - 1.0).abs() < 1e-12);

        let zero = PureState::basis(&["a"], &[0]).unwrap();
        let one = PureState::basis(&["a"], &[1]).unwrap();
        assert_eq!(fidelity_pure_mixed(&zero, &one.to_density()).unwrap(), 0.0);

        let mixed = DensityMatrix::maximally_mixed(&["a"]).unwrap();
        let f = fidelity_pure_mixed(&zero, &mixed).unwrap();
        assert!((f - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((overlap(&zero, &mixed).unwrap() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn fidelity_flags_negative_overlap() {
        let m = ComplexMatrix::diagonal(&[c(-0.5, 0.0), c(1.5, 0.0), ZERO]);
        let rho = DensityMatrix::new(&["a"], m).unwrap();
        let zero = PureState::basis(&["a"], &[0]).unwrap();
        assert!(matches!(
            fidelity_pure_mixed(&zero, &rho),
            Err(Error::PsdViolation { .. })
        ));
        assert!(matches!(rho.check_psd(), Err(Error::PsdViolation { .. })));
    }

    #[test]
    fn density_matrix_validation() {
        let mut m = ComplexMatrix::identity(3).scale_real(1.0 / 3.0);
        m[(0, 1)] = c(0.1, 0.0);
        assert!(matches!(
            DensityMatrix::new(&["a"], m),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            DensityMatrix::new(&["a"], ComplexMatrix::identity(3)),
            Err(Error::TraceNotOne { .. })
        ));
        assert!(DensityMatrix::unnormalized(&["a"], ComplexMatrix::identity(3)).is_ok());
        assert!(matches!(
            DensityMatrix::new(&["a"], ComplexMatrix::identity(4)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn eigenvalues_of_mixed_state() {
        let rho = DensityMatrix::maximally_mixed(&["a", "b"]).unwrap();
        for e in rho.matrix().hermitian_eigenvalues().unwrap() {
            assert!((e - 1.0 / 9.0).abs() < 1e-14);
        }
    }

    fn seeded(seed: u64, n: usize) -> ComplexMatrix {
        random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), n, n)
    }

    proptest::proptest! {
        #[test]
        fn kron_is_associative(a in proptest::prelude::any::<u64>(), b in proptest::prelude::any::<u64>(), c in proptest::prelude::any::<u64>()) {
            let (a, b, c) = (seeded(a, 3), seeded(b, 3), seeded(c, 3));
            let left = kron(&kron(&a, &b).unwrap(), &c).unwrap();
            let right = kron(&a, &kron(&b, &c).unwrap()).unwrap();
            proptest::prop_assert!(left.max_abs_diff(&right) < 1e-13);
        }

        #[test]
        fn trace_is_cyclic(a in proptest::prelude::any::<u64>(), b in proptest::prelude::any::<u64>()) {
            let (a, b) = (seeded(a, 9), seeded(b, 9));
            let ab = trace(&(&a * &b)).unwrap();
            let ba = trace(&(&b * &a)).unwrap();
            proptest::prop_assert!((ab - ba).norm() < 1e-12);
        }
    }
}
