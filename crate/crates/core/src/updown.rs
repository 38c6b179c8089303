//! The induction operator `U↑` and restriction operator `V↓`.
//!
//! Both are built from the map `f ↦ f·[x_{r+1}, …, x_{r+n}]` from `F_n^r`
//! to `F_n^{r+n}`. `U↑` is the `G(r+n)`-submodule generated by the image of
//! `U`; `V↓` is the preimage of `V`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{preimage, FieldVector, LinearMap, PrimeField};
use crate::partitions::Partition;
use crate::perm::Permutation;
use crate::wordspace::{radical_module, GModule, Guard, ModuleKind, WordSpace};

/// `f ↦ f·[x_{r+1}, …, x_{r+n}]` in word coordinates.
#[derive(Debug, Clone)]
pub struct MultiplicationMap {
    source: WordSpace,
    target: WordSpace,
    field: PrimeField,
    /// Index of each signed suffix `σ(1)…σ(n)` among words of length `n`.
    suffixes: Vec<(usize, i64)>,
}

impl MultiplicationMap {
    pub fn new(source: WordSpace, field: PrimeField, guard: Guard) -> Result<Self> {
        let n = source.n();
        let target = WordSpace::new(n, source.r() + n, guard)?;
        let tail = WordSpace::new(n, n, Guard::overridden())?;
        let suffixes = Permutation::all(n)
            .into_iter()
            .map(|s| {
                let letters: Vec<u8> = s.images0().iter().map(|&x| x as u8 + 1).collect();
                (tail.index_of_letters(&letters), s.sign())
            })
            .collect();
        Ok(Self { source, target, field, suffixes })
    }

    pub fn source(&self) -> &WordSpace {
        &self.source
    }

    pub fn target(&self) -> &WordSpace {
        &self.target
    }

    fn shift(&self) -> usize {
        self.source.n().pow(self.source.n() as u32)
    }

    pub fn apply(&self, v: &FieldVector) -> FieldVector {
        assert_eq!(v.dim(), self.source.dim());
        let shift = self.shift();
        let terms = v
            .entries()
            .iter()
            .flat_map(|&(i, c)| self.suffixes.iter().map(move |&(s, sign)| (i * shift + s, sign * c as i64)));
        FieldVector::from_terms(self.field, self.target.dim(), terms)
    }

    /// Matrix form, one column per source word.
    pub fn linear_map(&self) -> LinearMap {
        let columns =
            (0..self.source.dim()).map(|i| self.apply(&FieldVector::unit(self.field, self.source.dim(), i))).collect();
        LinearMap::from_columns(self.field, self.target.dim(), columns).expect("columns built in target space")
    }
}

/// `U↑^steps`, materializing every intermediate module.
pub fn up(u: &GModule, steps: usize, guard: Guard) -> Result<GModule> {
    let mut current = u.clone();
    for _ in 0..steps {
        current = up_once(&current, guard)?;
    }
    Ok(current)
}

fn up_once(u: &GModule, guard: Guard) -> Result<GModule> {
    let mult = MultiplicationMap::new(*u.space(), u.field(), guard)?;
    let generators: Vec<FieldVector> = u.carrier().basis().iter().map(|b| mult.apply(b)).collect();
    let shifted = shifted_label(u, 1);
    Ok(GModule::generated(*mult.target(), u.field(), generators).with_label(ModuleKind::Up, shifted))
}

fn shifted_label(m: &GModule, by: i64) -> Option<Partition> {
    m.partition().and_then(|l| l.shift(by, m.space().n()).ok())
}

/// `V↓ = {f ∈ F_n^{r} : f·[x_{r+1}, …, x_{r+n}] ∈ V}` for `V ⊆ F_n^{r+n}`.
pub fn down(v: &GModule) -> Result<GModule> {
    let n = v.space().n();
    let Some(r) = v.space().r().checked_sub(n) else {
        return Err(Error::InvalidArgument(format!("restriction needs rank at least n = {n}, got {}", v.space().r())));
    };
    let source = WordSpace::new(n, r, Guard::overridden())?;
    let mult = MultiplicationMap::new(source, v.field(), Guard::overridden())?;
    let carrier = preimage(&mult.linear_map(), v.carrier())?;
    let shifted = shifted_label(v, -1);
    Ok(GModule::from_closed_subspace(source, carrier)?.with_label(ModuleKind::Down, shifted))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpDownLawReport {
    pub n: usize,
    pub r: usize,
    pub p: u32,
    pub dim_u: usize,
    pub dim_down: usize,
    pub dim_down_up: usize,
    pub dim_up_down: usize,
    /// `U↓↑ ⊆ U`
    pub down_up_within: bool,
    /// `U ⊆ U↑↓`
    pub within_up_down: bool,
    /// `U↓↑↓ = U↓`
    pub down_up_down_is_down: bool,
}

impl UpDownLawReport {
    pub fn all_hold(&self) -> bool {
        self.down_up_within && self.within_up_down && self.down_up_down_is_down
    }
}

/// Checks `U↓↑ ⊆ U ⊆ U↑↓` and `U↓↑↓ = U↓` for `U ⊆ F_n^r`, `r ≥ n`.
pub fn verify_updown_laws(u: &GModule, guard: Guard) -> Result<UpDownLawReport> {
    let (n, r) = (u.space().n(), u.space().r());
    if r < n {
        return Err(Error::InvalidArgument(format!("the laws need r ≥ n (r = {r}, n = {n})")));
    }
    let d = down(u)?;
    let du = up(&d, 1, guard)?;
    let ud = down(&up(u, 1, guard)?)?;
    let dud = down(&du)?;
    Ok(UpDownLawReport {
        n,
        r,
        p: u.field().modulus(),
        dim_u: u.dim(),
        dim_down: d.dim(),
        dim_down_up: du.dim(),
        dim_up_down: ud.dim(),
        down_up_within: u.contains(&du)?,
        within_up_down: ud.contains(u)?,
        down_up_down_is_down: dud == d,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalIdentityReport {
    pub nu: Partition,
    pub lower: Partition,
    pub n: usize,
    pub p: u32,
    pub dim_radical: usize,
    pub dim_lower_radical: usize,
    pub dim_down: usize,
    /// `P^ν↓ = P^{ν−(1ⁿ)}`
    pub down_equal: bool,
    pub dim_up: Option<usize>,
    /// `P^{ν−(1ⁿ)}↑ = P^ν`, when requested.
    pub up_equal: Option<bool>,
}

/// Compares `P^ν↓` with `P^{ν−(1ⁿ)}` and, if `with_up`, `P^{ν−(1ⁿ)}↑` with `P^ν`.
///
/// `ν` must be nondegenerate and `p`-regular. Whether the upward equality is
/// expected to hold depends on hypotheses the caller checks.
pub fn verify_radical_identities(
    nu: &Partition,
    n: usize,
    field: PrimeField,
    with_up: bool,
    guard: Guard,
) -> Result<RadicalIdentityReport> {
    if nu.len() > n {
        return Err(Error::TooManyParts { parts: nu.len(), n });
    }
    if nu.is_degenerate(n) {
        return Err(Error::InvalidArgument(format!("{nu} is degenerate for n = {n}")));
    }
    let lower = nu.shift(-1, n)?;
    let top = radical_module(nu, n, field, guard)?;
    let bottom = radical_module(&lower, n, field, guard)?;
    let restricted = down(&top)?;
    let (dim_up, up_equal) = if with_up {
        let induced = up(&bottom, 1, guard)?;
        (Some(induced.dim()), Some(induced == top))
    } else {
        (None, None)
    };
    Ok(RadicalIdentityReport {
        nu: nu.clone(),
        lower,
        n,
        p: field.modulus(),
        dim_radical: top.dim(),
        dim_lower_radical: bottom.dim(),
        dim_down: restricted.dim(),
        down_equal: restricted == bottom,
        dim_up,
        up_equal,
    })
}
