//! The representation `σ_r : KG(r) → End(E^{⊗r})` and its kernel.
//!
//! `σ_r(π)` sends `v_{i_1}⊗⋯⊗v_{i_r}` to `v_{i_{π⁻¹(1)}}⊗⋯⊗v_{i_{π⁻¹(r)}}`,
//! which on words is exactly the place action of [`WordSpace::act`].
//! Group algebra elements are vectors over `G(r)` indexed by Lehmer rank.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{kernel, Echelon, FieldVector, Matrix, PrimeField, Subspace};
use crate::perm::{factorial, Permutation};
use crate::wordspace::{Guard, WordSpace};

/// Bound on `n^r` for the `σ_r` computations.
pub const SIGMA_LIMIT: u64 = 1 << 12;
/// Largest degree handled without an override.
pub const MAX_DEGREE: usize = 7;

fn sigma_space(r: usize, n: usize, guard: Guard) -> Result<WordSpace> {
    if r > MAX_DEGREE && !guard.is_overridden() {
        return Err(Error::GuardExceeded { n, r, limit: SIGMA_LIMIT });
    }
    WordSpace::new(n, r, guard.tightened(SIGMA_LIMIT))
}

/// The permutation matrix `σ_r(π)` stored as a column map on word indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaMatrix {
    space: WordSpace,
    images: Vec<usize>,
}

impl SigmaMatrix {
    pub fn new(pi: &Permutation, space: WordSpace) -> Self {
        let images = (0..space.dim()).map(|w| space.act_index(pi, w)).collect();
        Self { space, images }
    }

    /// Image of basis word `w`.
    pub fn image(&self, w: usize) -> usize {
        self.images[w]
    }

    /// `self · other`.
    pub fn compose(&self, other: &SigmaMatrix) -> SigmaMatrix {
        assert_eq!(self.space, other.space);
        Self { space: self.space, images: other.images.iter().map(|&w| self.images[w]).collect() }
    }

    pub fn to_matrix(&self, field: PrimeField) -> Matrix {
        let d = self.space.dim();
        let mut m = Matrix::zeros(field, d, d);
        for (w, &img) in self.images.iter().enumerate() {
            m.set(img, w, 1);
        }
        m
    }

    /// Row-major flattening into `GF(p)^{d²}`.
    pub fn flattened(&self, field: PrimeField) -> FieldVector {
        let d = self.space.dim();
        let terms = self.images.iter().enumerate().map(|(w, &img)| (img * d + w, 1));
        FieldVector::from_terms(field, d * d, terms)
    }
}

pub fn sigma(pi: &Permutation, r: usize, n: usize) -> Result<SigmaMatrix> {
    if pi.degree() > r {
        return Err(Error::InvalidArgument(format!("{pi} does not lie in G({r})")));
    }
    Ok(SigmaMatrix::new(&pi.extend(r), WordSpace::new(n, r, Guard::default())?))
}

/// A sparse element of `KG(r)`, keyed by Lehmer rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    r: usize,
    field: PrimeField,
    coeffs: BTreeMap<usize, u32>,
}

impl GroupAlgebraElement {
    pub fn zero(r: usize, field: PrimeField) -> Self {
        Self { r, field, coeffs: BTreeMap::new() }
    }

    pub fn from_permutation(pi: &Permutation, r: usize, field: PrimeField) -> Self {
        let mut e = Self::zero(r, field);
        e.add_term(&pi.extend(r), 1);
        e
    }

    /// `Σ_{σ ∈ G(k)} sgn(σ) σ` inside `KG(r)`.
    pub fn alternating(k: usize, r: usize, field: PrimeField) -> Self {
        assert!(k <= r);
        let mut e = Self::zero(r, field);
        for s in Permutation::all(k) {
            e.add_term(&s.extend(r), s.sign());
        }
        e
    }

    fn add_term(&mut self, pi: &Permutation, c: i64) {
        let key = pi.rank();
        let entry = self.coeffs.entry(key).or_insert(0);
        *entry = self.field.add(*entry, self.field.from_i64(c));
        if *entry == 0 {
            self.coeffs.remove(&key);
        }
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn support(&self) -> impl Iterator<Item = (Permutation, u32)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (Permutation::unrank(self.r, k), c))
    }

    pub fn mul(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.r, other.r);
        let mut out = Self::zero(self.r, self.field);
        for (a, x) in self.support() {
            for (b, y) in other.support() {
                out.add_term(&a.compose(&b), self.field.mul(x, y) as i64);
            }
        }
        out
    }

    pub fn to_vector(&self) -> FieldVector {
        let terms = self.coeffs.iter().map(|(&k, &c)| (k, c as i64));
        FieldVector::from_terms(self.field, factorial(self.r), terms)
    }

    pub fn from_vector(r: usize, v: &FieldVector) -> Self {
        let coeffs = v.entries().iter().copied().collect();
        Self { r, field: v.field(), coeffs }
    }

    /// `Σ c_π σ_r(π)` as a dense matrix.
    pub fn represent(&self, space: WordSpace) -> Matrix {
        let d = space.dim();
        let mut m = Matrix::zeros(self.field, d, d);
        for (pi, c) in self.support() {
            for w in 0..d {
                let img = space.act_index(&pi, w);
                m.set(img, w, self.field.add(m.get(img, w), c));
            }
        }
        m
    }
}

/// `dim span{σ_r(π) : π ∈ G(r)}`, from the flattened permutation matrices.
pub fn image_rank(r: usize, n: usize, field: PrimeField, guard: Guard) -> Result<usize> {
    let space = sigma_space(r, n, guard)?;
    let d = space.dim();
    let mut ech = Echelon::new(field, d * d);
    for pi in Permutation::all(r) {
        ech.insert(SigmaMatrix::new(&pi, space).flattened(field));
    }
    Ok(ech.dim())
}

/// `Ker σ_r ⊆ KG(r)`.
///
/// Entry `(w', w)` of `Σ c_π σ_r(π)` is the sum of `c_π` over the `π` with
/// `π·w = w'`; the kernel is cut out by one such linear form per entry.
pub fn sigma_kernel(r: usize, n: usize, field: PrimeField, guard: Guard) -> Result<Subspace> {
    let space = sigma_space(r, n, guard)?;
    let perms = Permutation::all(r);
    let order = perms.len();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut constraints = Echelon::new(field, order);
    for w in 0..space.dim() {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, pi) in perms.iter().enumerate() {
            groups.entry(space.act_index(pi, w)).or_default().push(k);
        }
        for (_, members) in groups {
            if seen.insert(members.clone()) {
                let v = FieldVector::from_terms(field, order, members.into_iter().map(|k| (k, 1)));
                constraints.insert(v);
            }
        }
    }
    let rows = constraints.into_subspace();
    Ok(kernel(&Matrix::from_vectors(field, order, rows.basis())))
}

/// Two-sided ideal of `KG(r)` generated by `Σ_{σ ∈ G(k)} sgn(σ) σ`, closed
/// under left and right multiplication by the Coxeter generators.
pub fn alternating_ideal(r: usize, k: usize, field: PrimeField) -> Subspace {
    let order = factorial(r);
    let gens: Vec<Permutation> = (1..r).map(|i| Permutation::adjacent(r, i)).collect();
    let perms = Permutation::all(r);
    let left: Vec<Vec<usize>> = gens.iter().map(|s| perms.iter().map(|p| s.compose(p).rank()).collect()).collect();
    let right: Vec<Vec<usize>> = gens.iter().map(|s| perms.iter().map(|p| p.compose(s).rank()).collect()).collect();
    let mut ech = Echelon::new(field, order);
    let mut queue = VecDeque::new();
    if let Some(row) = ech.insert(GroupAlgebraElement::alternating(k, r, field).to_vector()) {
        queue.push_back(row.clone());
    }
    while let Some(v) = queue.pop_front() {
        for table in left.iter().chain(&right) {
            if let Some(row) = ech.insert(v.permuted(|i| table[i])) {
                queue.push_back(row.clone());
            }
        }
    }
    ech.into_subspace()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelIdealReport {
    pub r: usize,
    pub n: usize,
    pub p: u32,
    pub group_order: usize,
    pub image_rank: usize,
    pub kernel_dim: usize,
    /// `None` when `r ≤ n`, where no alternating generator of degree `n+1` exists.
    pub ideal_dim: Option<usize>,
    pub equal: bool,
}

/// Compares `Ker σ_r` with the ideal generated by the alternating sum over `G(n+1)`.
pub fn kernel_ideal_check(r: usize, n: usize, field: PrimeField, guard: Guard) -> Result<KernelIdealReport> {
    let ker = sigma_kernel(r, n, field, guard)?;
    let rank = image_rank(r, n, field, guard)?;
    let group_order = factorial(r);
    let (ideal_dim, equal) = if r <= n {
        (None, ker.is_zero())
    } else {
        let ideal = alternating_ideal(r, n + 1, field);
        (Some(ideal.dim()), ideal == ker)
    };
    Ok(KernelIdealReport {
        r,
        n,
        p: field.modulus(),
        group_order,
        image_rank: rank,
        kernel_dim: ker.dim(),
        ideal_dim,
        equal,
    })
}
