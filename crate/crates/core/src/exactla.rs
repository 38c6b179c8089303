//! Exact linear algebra over the prime field `GF(p)`.
//!
//! Subspaces are kept in canonical reduced row echelon form, so two
//! [`Subspace`]s compare equal as sets exactly when their stored bases are
//! identical. Rows are stored sparsely. Spans over an ambient space of
//! dimension at most [`DENSE_LIMIT`] are eliminated densely, larger ones with
//! a sparse semi-echelon followed by back substitution; both produce the
//! same canonical basis.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// Ambient dimension up to which [`Subspace::span`] uses dense elimination.
pub const DENSE_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn scalar(self, x: i64) -> FieldScalar {
        FieldScalar { residue: self.from_i64(x), field: self }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `GF(p)` carrying its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    residue: u32,
    field: PrimeField,
}

impl FieldScalar {
    pub fn residue(self) -> u32 {
        self.residue
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| Self { residue: self.field.inv(self.residue), field: self.field })
    }

    fn check(self, other: Self) {
        assert_eq!(self.field, other.field, "scalars from different fields");
    }
}

impl Add for FieldScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        Self { residue: self.field.add(self.residue, rhs.residue), field: self.field }
    }
}

impl Sub for FieldScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        Self { residue: self.field.sub(self.residue, rhs.residue), field: self.field }
    }
}

impl Mul for FieldScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        Self { residue: self.field.mul(self.residue, rhs.residue), field: self.field }
    }
}

impl Neg for FieldScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self { residue: self.field.neg(self.residue), field: self.field }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// A sparse vector: sorted `(index, coefficient)` pairs with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldVector {
    field: PrimeField,
    dim: usize,
    entries: Vec<(usize, u32)>,
}

impl FieldVector {
    pub fn zero(field: PrimeField, dim: usize) -> Self {
        Self { field, dim, entries: Vec::new() }
    }

    pub fn unit(field: PrimeField, dim: usize, i: usize) -> Self {
        assert!(i < dim, "index {i} out of range {dim}");
        Self { field, dim, entries: vec![(i, 1 % field.modulus())] }.trimmed()
    }

    /// Collects arbitrary `(index, integer)` terms, summing duplicates.
    pub fn from_terms(field: PrimeField, dim: usize, terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut raw: Vec<(usize, u32)> = terms
            .into_iter()
            .map(|(i, c)| {
                assert!(i < dim, "index {i} out of range {dim}");
                (i, field.from_i64(c))
            })
            .collect();
        raw.sort_unstable_by_key(|&(i, _)| i);
        let mut entries: Vec<(usize, u32)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match entries.last_mut() {
                Some(last) if last.0 == i => last.1 = field.add(last.1, c),
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|&(_, c)| c != 0);
        Self { field, dim, entries }
    }

    /// Builds from entries already sorted by index with residues in range.
    pub(crate) fn from_sorted(field: PrimeField, dim: usize, entries: Vec<(usize, u32)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|&(i, c)| i < dim && c != 0 && c < field.modulus()));
        Self { field, dim, entries }
    }

    pub fn from_dense(field: PrimeField, values: &[u32]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| {
                let c = c % field.modulus();
                (c != 0).then_some((i, c))
            })
            .collect();
        Self { field, dim: values.len(), entries }
    }

    fn trimmed(mut self) -> Self {
        self.entries.retain(|&(_, c)| c != 0);
        self
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, u32)] {
        &self.entries
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.entries.binary_search_by_key(&i, |&(j, _)| j).map(|k| self.entries[k].1).unwrap_or(0)
    }

    pub fn lead(&self) -> Option<(usize, u32)> {
        self.entries.first().copied()
    }

    pub fn to_dense(&self) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for &(i, c) in &self.entries {
            out[i] = c;
        }
        out
    }

    pub fn scale(&self, c: u32) -> Self {
        if c.is_multiple_of(self.field.modulus()) {
            return Self::zero(self.field, self.dim);
        }
        let entries = self.entries.iter().map(|&(i, x)| (i, self.field.mul(x, c))).collect();
        Self { field: self.field, dim: self.dim, entries }
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: u32, other: &FieldVector) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        debug_assert_eq!(self.field, other.field);
        if c == 0 {
            return self.clone();
        }
        let f = self.field;
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, f.mul(b[j].1, c)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = f.add(a[i].1, f.mul(b[j].1, c));
                    if s != 0 {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(k, x)| (k, f.mul(x, c))));
        Self { field: f, dim: self.dim, entries: out }
    }

    pub fn sub(&self, other: &FieldVector) -> Self {
        self.add_scaled(self.field.neg(1 % self.field.modulus()), other)
    }

    /// The standard (orthonormal) bilinear form.
    pub fn dot(&self, other: &FieldVector) -> u32 {
        let f = self.field;
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j, mut acc) = (0, 0, 0u32);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc = f.add(acc, f.mul(a[i].1, b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Applies an index map `i ↦ image(i)`; the map must be injective on the support.
    pub fn permuted(&self, mut image: impl FnMut(usize) -> usize) -> Self {
        let mut entries: Vec<(usize, u32)> = self.entries.iter().map(|&(i, c)| (image(i), c)).collect();
        entries.sort_unstable_by_key(|&(i, _)| i);
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        Self { field: self.field, dim: self.dim, entries }
    }
}

/// A dense row-major matrix over `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.modulus();
        }
        m
    }

    /// From integer rows; every row must have length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(row.len(), cols));
            }
            data.extend(row.iter().map(|&x| field.from_i64(x)));
        }
        Ok(Self { field, rows: rows.len(), cols, data })
    }

    pub fn from_vectors(field: PrimeField, cols: usize, vectors: &[FieldVector]) -> Self {
        let mut m = Self::zeros(field, vectors.len(), cols);
        for (r, v) in vectors.iter().enumerate() {
            for &(i, c) in v.entries() {
                m.data[r * cols + i] = c;
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x % self.field.modulus();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> FieldVector {
        FieldVector::from_dense(self.field, self.row(r))
    }

    /// `A·v` for a vector of length `cols`.
    pub fn apply(&self, v: &FieldVector) -> FieldVector {
        assert_eq!(v.dim(), self.cols);
        let f = self.field;
        let out: Vec<u32> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                v.entries().iter().fold(0, |acc, &(i, c)| f.add(acc, f.mul(row[i], c)))
            })
            .collect();
        FieldVector::from_dense(f, &out)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// In-place Gauss–Jordan elimination; returns the pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry at or below the current
    /// row, scanning columns left to right.
    fn eliminate(&mut self) -> Vec<usize> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..cols {
            if prow == self.rows {
                break;
            }
            let Some(src) = (prow..self.rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if src != prow {
                for j in 0..cols {
                    self.data.swap(src * cols + j, prow * cols + j);
                }
            }
            let inv = f.inv(self.data[prow * cols + col]);
            for j in col..cols {
                let idx = prow * cols + j;
                self.data[idx] = f.mul(self.data[idx], inv);
            }
            for r in 0..self.rows {
                if r == prow {
                    continue;
                }
                let factor = self.data[r * cols + col];
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in col..cols {
                    let x = self.data[prow * cols + j];
                    if x != 0 {
                        let idx = r * cols + j;
                        self.data[idx] = f.add(self.data[idx], f.mul(neg, x));
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }
}

/// Canonical row space of `m` and its rank.
pub fn rref(m: &Matrix) -> (Subspace, usize) {
    let mut work = m.clone();
    let pivots = work.eliminate();
    let rank = pivots.len();
    let rows = (0..rank).map(|r| work.row_vector(r)).collect();
    (Subspace { field: m.field, ambient: m.cols, rows, pivots }, rank)
}

/// `{v : A v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let mut work = m.clone();
    let pivots = work.eliminate();
    let f = m.field;
    let mut is_pivot = vec![None; m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let basis: Vec<FieldVector> = (0..m.cols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut terms = vec![(free, 1i64)];
            for (r, &pc) in pivots.iter().enumerate() {
                let x = work.get(r, free);
                if x != 0 {
                    terms.push((pc, -(x as i64)));
                }
            }
            FieldVector::from_terms(f, m.cols, terms)
        })
        .collect();
    Subspace::span_sparse(f, m.cols, basis)
}

/// A linear map given by the images of the source basis vectors.
#[derive(Debug, Clone)]
pub struct LinearMap {
    field: PrimeField,
    source_dim: usize,
    target_dim: usize,
    columns: Vec<FieldVector>,
}

impl LinearMap {
    pub fn from_columns(field: PrimeField, target_dim: usize, columns: Vec<FieldVector>) -> Result<Self> {
        for c in &columns {
            if c.dim() != target_dim {
                return Err(Error::DimensionMismatch(c.dim(), target_dim));
            }
            if c.field() != field {
                return Err(Error::ModulusMismatch(c.field().modulus(), field.modulus()));
            }
        }
        Ok(Self { field, source_dim: columns.len(), target_dim, columns })
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let (rows, cols) = m.shape();
        let columns = (0..cols)
            .map(|c| {
                let col: Vec<u32> = (0..rows).map(|r| m.get(r, c)).collect();
                FieldVector::from_dense(m.field, &col)
            })
            .collect();
        Self { field: m.field, source_dim: cols, target_dim: rows, columns }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn columns(&self) -> &[FieldVector] {
        &self.columns
    }

    pub fn apply(&self, x: &FieldVector) -> FieldVector {
        assert_eq!(x.dim(), self.source_dim);
        x.entries()
            .iter()
            .fold(FieldVector::zero(self.field, self.target_dim), |acc, &(i, c)| acc.add_scaled(c, &self.columns[i]))
    }

    pub fn kernel(&self) -> Subspace {
        kernel_of_columns(self.field, self.source_dim, self.target_dim, &self.columns)
    }

    pub fn image(&self) -> Subspace {
        Subspace::span_unchecked(self.field, self.target_dim, self.columns.clone())
    }
}

/// `{x : Σ x_j columns[j] = 0}` by elimination with a tracked combination.
fn kernel_of_columns(field: PrimeField, source_dim: usize, target_dim: usize, columns: &[FieldVector]) -> Subspace {
    // Each echelon row remembers which combination of source vectors produced it.
    let mut rows: Vec<(FieldVector, FieldVector)> = Vec::new();
    let mut by_pivot: HashMap<usize, usize> = HashMap::new();
    let mut kernel_basis = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        debug_assert_eq!(col.dim(), target_dim);
        let mut v = col.clone();
        let mut combo = FieldVector::unit(field, source_dim, j);
        while let Some((lead, c)) = v.lead() {
            let Some(&k) = by_pivot.get(&lead) else { break };
            let (row, row_combo) = &rows[k];
            let factor = field.neg(c);
            v = v.add_scaled(factor, row);
            combo = combo.add_scaled(factor, row_combo);
        }
        match v.lead() {
            None => kernel_basis.push(combo),
            Some((lead, c)) => {
                let inv = field.inv(c);
                by_pivot.insert(lead, rows.len());
                rows.push((v.scale(inv), combo.scale(inv)));
            }
        }
    }
    Subspace::span_unchecked(field, source_dim, kernel_basis)
}

/// Incremental semi-echelon basis: every row has leading coefficient 1 and
/// distinct leading columns. Used for spin (orbit-closure) computations.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    ambient: usize,
    rows: Vec<FieldVector>,
    by_pivot: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        Self { field, ambient, rows: Vec::new(), by_pivot: HashMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[FieldVector] {
        &self.rows
    }

    /// Removes leading terms that sit on existing pivots. Zero iff `v` is in the span.
    pub fn reduce(&self, mut v: FieldVector) -> FieldVector {
        while let Some((lead, c)) = v.lead() {
            let Some(&k) = self.by_pivot.get(&lead) else { break };
            v = v.add_scaled(self.field.neg(c), &self.rows[k]);
        }
        v
    }

    /// Adds `v` if independent; returns the normalized new row.
    pub fn insert(&mut self, v: FieldVector) -> Option<&FieldVector> {
        debug_assert_eq!(v.dim(), self.ambient);
        let v = self.reduce(v);
        let (lead, c) = v.lead()?;
        let row = v.scale(self.field.inv(c));
        self.by_pivot.insert(lead, self.rows.len());
        self.rows.push(row);
        self.rows.last()
    }

    /// Back substitution into canonical reduced form.
    pub fn into_subspace(self) -> Subspace {
        let Echelon { field, ambient, mut rows, .. } = self;
        rows.sort_unstable_by_key(|r| r.lead().map(|(i, _)| i));
        let pivots: Vec<usize> = rows.iter().map(|r| r.lead().unwrap().0).collect();
        let pivot_row: HashMap<usize, usize> = pivots.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        for i in (0..rows.len()).rev() {
            let mut pos = 1;
            let mut row = std::mem::replace(&mut rows[i], FieldVector::zero(field, ambient));
            while pos < row.entries.len() {
                let (col, c) = row.entries[pos];
                match pivot_row.get(&col) {
                    Some(&k) => row = row.add_scaled(field.neg(c), &rows[k]),
                    None => pos += 1,
                }
            }
            rows[i] = row;
        }
        Subspace { field, ambient, rows, pivots }
    }
}

/// A subspace of `GF(p)^ambient` in canonical reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<FieldVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| FieldVector::unit(field, ambient, i)).collect();
        Self { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    /// Canonical span of `vectors`, validating their dimensions and fields.
    pub fn span(field: PrimeField, ambient: usize, vectors: impl IntoIterator<Item = FieldVector>) -> Result<Self> {
        let vectors: Vec<FieldVector> = vectors.into_iter().collect();
        for v in &vectors {
            if v.dim() != ambient {
                return Err(Error::DimensionMismatch(v.dim(), ambient));
            }
            if v.field() != field {
                return Err(Error::ModulusMismatch(v.field().modulus(), field.modulus()));
            }
        }
        Ok(Self::span_unchecked(field, ambient, vectors))
    }

    pub(crate) fn span_unchecked(field: PrimeField, ambient: usize, vectors: Vec<FieldVector>) -> Self {
        if ambient <= DENSE_LIMIT {
            Self::span_dense(field, ambient, vectors)
        } else {
            Self::span_sparse(field, ambient, vectors)
        }
    }

    /// Dense Gauss–Jordan path.
    pub fn span_dense(field: PrimeField, ambient: usize, vectors: Vec<FieldVector>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        rref(&Matrix::from_vectors(field, ambient, &vectors)).0
    }

    /// Sparse semi-echelon path.
    pub fn span_sparse(field: PrimeField, ambient: usize, vectors: Vec<FieldVector>) -> Self {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            ech.insert(v);
        }
        ech.into_subspace()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[FieldVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(self.ambient, other.ambient));
        }
        if self.field != other.field {
            return Err(Error::ModulusMismatch(self.field.modulus(), other.field.modulus()));
        }
        Ok(())
    }

    /// Canonical representative of `v + self`: zero at every pivot column.
    /// This is the projection onto the non-pivot coordinates along `self`.
    pub fn reduce(&self, v: &FieldVector) -> FieldVector {
        let mut out = v.clone();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = out.get(pc);
            if c != 0 {
                out = out.add_scaled(self.field.neg(c), row);
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &FieldVector) -> bool {
        v.dim() == self.ambient && self.reduce(v).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        Ok(other.dim() <= self.dim() && other.rows.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let vectors = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::span_unchecked(self.field, self.ambient, vectors))
    }

    /// Via the kernel of `(α, β) ↦ Σ α_i a_i − Σ β_j b_j`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let f = self.field;
        let minus_one = f.neg(1 % f.modulus());
        let columns: Vec<FieldVector> =
            self.rows.iter().cloned().chain(other.rows.iter().map(|b| b.scale(minus_one))).collect();
        let k = self.dim();
        let relations = kernel_of_columns(f, columns.len(), self.ambient, &columns);
        let vectors = relations
            .rows
            .iter()
            .map(|rel| {
                rel.entries()
                    .iter()
                    .take_while(|&&(i, _)| i < k)
                    .fold(FieldVector::zero(f, self.ambient), |acc, &(i, c)| acc.add_scaled(c, &self.rows[i]))
            })
            .collect();
        Ok(Self::span_unchecked(f, self.ambient, vectors))
    }
}

/// `{x : map(x) ∈ w}`, computed as the kernel of `reduce_w ∘ map`.
pub fn preimage(map: &LinearMap, w: &Subspace) -> Result<Subspace> {
    if w.ambient() != map.target_dim() {
        return Err(Error::DimensionMismatch(map.target_dim(), w.ambient()));
    }
    if w.field() != map.field {
        return Err(Error::ModulusMismatch(map.field.modulus(), w.field().modulus()));
    }
    let residues: Vec<FieldVector> = map.columns().iter().map(|c| w.reduce(c)).collect();
    Ok(kernel_of_columns(map.field, map.source_dim(), map.target_dim(), &residues))
}
