//! The word space `F_n^r ≅ E^{⊗r}`, its place-permutation action, Specht
//! modules, Gram radicals and irreducible dimensions.
//!
//! A word `w = (w(1), …, w(r))` with letters in `{1, …, n}` stands for the
//! monomial `x_1^{w(1)}⋯x_r^{w(r)}`, equivalently the simple tensor
//! `v_{w(1)}⊗⋯⊗v_{w(r)}`. Words are indexed lexicographically, letter `1`
//! smallest and position `1` most significant. A permutation `π` moves the
//! letter at place `t` to place `π(t)`: `(π·w)(π(t)) = w(t)`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactla::{kernel, Echelon, FieldVector, Matrix, PrimeField, Subspace};
use crate::partitions::Partition;
use crate::perm::Permutation;

/// Default bound on `n^r`.
pub const GUARD_LIMIT: u64 = 1 << 24;

/// Resource guard on the size of the word space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    limit: Option<u64>,
}

impl Default for Guard {
    fn default() -> Self {
        Self { limit: Some(GUARD_LIMIT) }
    }
}

impl Guard {
    pub fn with_limit(limit: u64) -> Self {
        Self { limit: Some(limit) }
    }

    /// Accepts any size that fits in memory indices.
    pub fn overridden() -> Self {
        Self { limit: None }
    }

    pub fn is_overridden(self) -> bool {
        self.limit.is_none()
    }

    /// The tighter of `self` and `limit`; an overridden guard stays overridden.
    pub fn tightened(self, limit: u64) -> Self {
        Self { limit: self.limit.map(|l| l.min(limit)) }
    }

    pub fn check(self, n: usize, r: usize) -> Result<()> {
        let size = (n as u64).checked_pow(r as u32);
        match (size, self.limit) {
            (Some(s), Some(limit)) if s <= limit => Ok(()),
            (Some(s), None) if s <= usize::MAX as u64 && s <= u32::MAX as u64 * 16 => Ok(()),
            _ => Err(Error::GuardExceeded { n, r, limit: self.limit.unwrap_or(u64::MAX) }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: impl Into<Vec<u8>>) -> Self {
        Self(letters.into())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter multiplicities `(#1s, …, #ns)`.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut w = vec![0; n];
        for &l in &self.0 {
            w[l as usize - 1] += 1;
        }
        w
    }

    /// Positions carrying each letter, i.e. the rows of the matching tabloid.
    pub fn tabloid(&self, n: usize) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); n];
        for (t, &l) in self.0.iter().enumerate() {
            rows[l as usize - 1].push(t + 1);
        }
        rows
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// The basis of `F_n^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordSpace {
    n: usize,
    r: usize,
    dim: usize,
}

impl WordSpace {
    pub fn new(n: usize, r: usize, guard: Guard) -> Result<Self> {
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidArgument(format!("alphabet size n = {n} out of range")));
        }
        guard.check(n, r)?;
        Ok(Self { n, r, dim: n.pow(r as u32) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self, w: &Word) -> usize {
        assert_eq!(w.len(), self.r, "word length");
        self.index_of_letters(w.letters())
    }

    pub fn index_of_letters(&self, letters: &[u8]) -> usize {
        letters.iter().fold(0, |acc, &l| {
            debug_assert!(l >= 1 && l as usize <= self.n);
            acc * self.n + (l as usize - 1)
        })
    }

    pub fn word(&self, index: usize) -> Word {
        let mut letters = vec![0; self.r];
        self.decode(index, &mut letters);
        Word(letters)
    }

    fn decode(&self, mut index: usize, letters: &mut [u8]) {
        for slot in letters.iter_mut().rev() {
            *slot = (index % self.n) as u8 + 1;
            index /= self.n;
        }
    }

    /// Index of `π·w`.
    pub fn act_index(&self, pi: &Permutation, index: usize) -> usize {
        let mut letters = vec![0; self.r];
        self.decode(index, &mut letters);
        let mut moved = vec![0; self.r];
        for (t, &l) in letters.iter().enumerate() {
            moved[pi.apply0(t)] = l;
        }
        self.index_of_letters(&moved)
    }

    /// `π·v`, extended linearly.
    pub fn act(&self, pi: &Permutation, v: &FieldVector) -> FieldVector {
        debug_assert!(pi.images0().iter().enumerate().skip(self.r).all(|(t, &x)| t == x));
        v.permuted(|i| self.act_index(pi, i))
    }

    /// `s_i·v` for the adjacent transposition `(i, i+1)`, 1-based.
    pub fn act_adjacent(&self, i: usize, v: &FieldVector) -> FieldVector {
        let (hi, lo) = (self.n.pow((self.r - i) as u32), self.n.pow((self.r - i - 1) as u32));
        v.permuted(|idx| {
            let a = (idx / hi) % self.n;
            let b = (idx / lo) % self.n;
            idx - a * hi - b * lo + b * hi + a * lo
        })
    }

    /// All words of the given weight, in basis order.
    pub fn weight_space_words(&self, weight: &[u32]) -> Result<Vec<Word>> {
        if weight.len() != self.n || weight.iter().map(|&x| x as usize).sum::<usize>() != self.r {
            return Err(Error::WeightMismatch { weight: weight.to_vec(), r: self.r });
        }
        fn rec(remaining: &mut [u32], cur: &mut Vec<u8>, r: usize, out: &mut Vec<Word>) {
            if cur.len() == r {
                out.push(Word(cur.clone()));
                return;
            }
            for l in 0..remaining.len() {
                if remaining[l] > 0 {
                    remaining[l] -= 1;
                    cur.push(l as u8 + 1);
                    rec(remaining, cur, r, out);
                    cur.pop();
                    remaining[l] += 1;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut weight.to_vec(), &mut Vec::with_capacity(self.r), self.r, &mut out);
        Ok(out)
    }
}

/// Dimension of the `weight`-weight space of `E^{⊗r}`, by listing its words.
pub fn weight_space_dim(r: usize, n: usize, weight: &[u32]) -> Result<usize> {
    let space = WordSpace::new(n, r, Guard::overridden())?;
    Ok(space.weight_space_words(weight)?.len())
}

/// A filling of the shape `λ` given column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    /// Columns hold 1-based entries; together they must be exactly `{1, …, r}`.
    pub fn new(shape: Partition, columns: Vec<Vec<usize>>) -> Result<Self> {
        let conj = shape.conjugate();
        if columns.len() != conj.len() {
            return Err(Error::InvalidTableau(format!("{} columns for shape {shape}", columns.len())));
        }
        let r = shape.size();
        let mut seen = vec![false; r];
        for (i, col) in columns.iter().enumerate() {
            if col.len() != conj.part(i) as usize {
                return Err(Error::InvalidTableau(format!("column {} has length {}", i + 1, col.len())));
            }
            for &t in col {
                if t == 0 || t > r || seen[t - 1] {
                    return Err(Error::InvalidTableau(format!("entry {t} repeated or out of range")));
                }
                seen[t - 1] = true;
            }
        }
        Ok(Self { shape, columns })
    }

    /// Columns filled left to right with consecutive integers.
    pub fn column_superstandard(shape: &Partition) -> Self {
        let mut next = 1;
        let columns = shape
            .conjugate()
            .parts()
            .iter()
            .map(|&len| {
                let col: Vec<usize> = (next..next + len as usize).collect();
                next += len as usize;
                col
            })
            .collect();
        Self { shape: shape.clone(), columns }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }
}

/// `∏_i [x_{t_{i,1}}, …, x_{t_{i,μ_i}}]` expanded in the word basis.
pub fn column_bracket_product(t: &Tableau, space: &WordSpace, field: PrimeField) -> Result<FieldVector> {
    if t.shape.size() != space.r() {
        return Err(Error::DimensionMismatch(t.shape.size(), space.r()));
    }
    if let Some(col) = t.columns.iter().find(|c| c.len() > space.n()) {
        return Err(Error::ColumnTooLong { len: col.len(), n: space.n() });
    }
    let column_perms: Vec<Vec<(Permutation, i64)>> = t
        .columns
        .iter()
        .map(|c| {
            Permutation::all(c.len())
                .into_iter()
                .map(|s| {
                    let sign = s.sign();
                    (s, sign)
                })
                .collect()
        })
        .collect();
    let mut terms = Vec::new();
    let mut letters = vec![0u8; space.r()];
    fn rec(
        k: usize,
        sign: i64,
        t: &Tableau,
        perms: &[Vec<(Permutation, i64)>],
        letters: &mut [u8],
        space: &WordSpace,
        terms: &mut Vec<(usize, i64)>,
    ) {
        if k == t.columns.len() {
            terms.push((space.index_of_letters(letters), sign));
            return;
        }
        for (sigma, s) in &perms[k] {
            for (j, &pos) in t.columns[k].iter().enumerate() {
                letters[pos - 1] = sigma.apply0(j) as u8 + 1;
            }
            rec(k + 1, sign * s, t, perms, letters, space, terms);
        }
    }
    rec(0, 1, t, &column_perms, &mut letters, space, &mut terms);
    Ok(FieldVector::from_terms(field, space.dim(), terms))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Specht,
    Radical,
    Up,
    Down,
    Zero,
    Full,
    Generated,
}

impl ModuleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModuleKind::Specht => "specht",
            ModuleKind::Radical => "radical",
            ModuleKind::Up => "up",
            ModuleKind::Down => "down",
            ModuleKind::Zero => "zero",
            ModuleKind::Full => "full",
            ModuleKind::Generated => "generated",
        }
    }
}

impl FromStr for ModuleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "specht" => ModuleKind::Specht,
            "radical" => ModuleKind::Radical,
            "up" => ModuleKind::Up,
            "down" => ModuleKind::Down,
            "zero" => ModuleKind::Zero,
            "full" => ModuleKind::Full,
            "generated" => ModuleKind::Generated,
            other => return Err(Error::Format(format!("unknown module kind `{other}`"))),
        })
    }
}

/// A `G(r)`-submodule of `F_n^r`.
#[derive(Debug, Clone)]
pub struct GModule {
    space: WordSpace,
    field: PrimeField,
    carrier: Subspace,
    kind: ModuleKind,
    partition: Option<Partition>,
}

impl PartialEq for GModule {
    /// Compares the underlying subspaces; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.field == other.field && self.carrier == other.carrier
    }
}

impl Eq for GModule {}

impl GModule {
    pub fn zero(space: WordSpace, field: PrimeField) -> Self {
        Self { space, field, carrier: Subspace::zero(field, space.dim()), kind: ModuleKind::Zero, partition: None }
    }

    pub fn full(space: WordSpace, field: PrimeField) -> Self {
        Self { space, field, carrier: Subspace::full(field, space.dim()), kind: ModuleKind::Full, partition: None }
    }

    /// The submodule generated by `generators`, by spinning with the
    /// adjacent transpositions until the span stops growing.
    pub fn generated(space: WordSpace, field: PrimeField, generators: impl IntoIterator<Item = FieldVector>) -> Self {
        let mut ech = Echelon::new(field, space.dim());
        let mut queue = VecDeque::new();
        for g in generators {
            if let Some(row) = ech.insert(g) {
                queue.push_back(row.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for i in 1..space.r() {
                if let Some(row) = ech.insert(space.act_adjacent(i, &v)) {
                    queue.push_back(row.clone());
                }
            }
        }
        Self { space, field, carrier: ech.into_subspace(), kind: ModuleKind::Generated, partition: None }
    }

    /// Wraps a subspace after checking it is closed under every `s_i`.
    pub fn from_closed_subspace(space: WordSpace, carrier: Subspace) -> Result<Self> {
        if carrier.ambient() != space.dim() {
            return Err(Error::DimensionMismatch(carrier.ambient(), space.dim()));
        }
        let m = Self { space, field: carrier.field(), carrier, kind: ModuleKind::Generated, partition: None };
        if !m.is_g_closed() {
            return Err(Error::NotClosed);
        }
        Ok(m)
    }

    pub fn with_label(mut self, kind: ModuleKind, partition: Option<Partition>) -> Self {
        self.kind = kind;
        self.partition = partition;
        self
    }

    pub fn space(&self) -> &WordSpace {
        &self.space
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn partition(&self) -> Option<&Partition> {
        self.partition.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_zero()
    }

    /// Checks `s_i·b ∈ M` for every basis vector `b` and every `i < r`.
    pub fn is_g_closed(&self) -> bool {
        (1..self.space.r())
            .all(|i| self.carrier.basis().iter().all(|b| self.carrier.contains_vector(&self.space.act_adjacent(i, b))))
    }

    fn compatible(&self, other: &GModule) -> Result<()> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch(self.space.dim(), other.space.dim()));
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &GModule) -> Result<bool> {
        self.compatible(other)?;
        self.carrier.contains(&other.carrier)
    }

    pub fn sum(&self, other: &GModule) -> Result<GModule> {
        self.compatible(other)?;
        Ok(Self { carrier: self.carrier.sum(&other.carrier)?, ..self.clone() }.with_label(ModuleKind::Generated, None))
    }

    pub fn intersection(&self, other: &GModule) -> Result<GModule> {
        self.compatible(other)?;
        let carrier = self.carrier.intersection(&other.carrier)?;
        Ok(Self { carrier, ..self.clone() }.with_label(ModuleKind::Generated, None))
    }

    /// Versioned text form: a header, then one canonical basis row per line
    /// as `index:coefficient` pairs.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str("spechtkit-gmodule 1\n");
        s.push_str(&format!("n {}\nr {}\np {}\n", self.space.n(), self.space.r(), self.field.modulus()));
        s.push_str(&format!("kind {}\n", self.kind.as_str()));
        match &self.partition {
            Some(l) => s.push_str(&format!("lambda {l}\n")),
            None => s.push_str("lambda -\n"),
        }
        s.push_str(&format!("ambient {}\ndim {}\n", self.space.dim(), self.dim()));
        for row in self.carrier.basis() {
            let cells: Vec<String> = row.entries().iter().map(|(i, c)| format!("{i}:{c}")).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s.push_str("end\n");
        s
    }

    /// Parses [`GModule::to_text`] output; rejects non-canonical or non-closed data.
    pub fn from_text(text: &str, guard: Guard) -> Result<Self> {
        let bad = |m: &str| Error::Format(m.to_string());
        let mut lines = text.lines();
        if lines.next() != Some("spechtkit-gmodule 1") {
            return Err(bad("missing or unsupported version header"));
        }
        let mut field_value = |key: &str| -> Result<String> {
            let line = lines.next().ok_or_else(|| bad("truncated header"))?;
            let (k, v) = line.split_once(' ').ok_or_else(|| bad("malformed header line"))?;
            if k != key {
                return Err(Error::Format(format!("expected `{key}`, found `{k}`")));
            }
            Ok(v.to_string())
        };
        let num = |s: String| s.parse::<u64>().map_err(|_| bad("expected an integer"));
        let n = num(field_value("n")?)? as usize;
        let r = num(field_value("r")?)? as usize;
        let p = num(field_value("p")?)?;
        let kind: ModuleKind = field_value("kind")?.parse()?;
        let lambda = field_value("lambda")?;
        let ambient = num(field_value("ambient")?)? as usize;
        let dim = num(field_value("dim")?)? as usize;
        let field = PrimeField::new(p)?;
        let space = WordSpace::new(n, r, guard)?;
        if ambient != space.dim() {
            return Err(bad("ambient dimension disagrees with n^r"));
        }
        let partition = match lambda.as_str() {
            "-" => None,
            l => Some(l.parse::<Partition>()?),
        };
        let mut rows = Vec::with_capacity(dim);
        for _ in 0..dim {
            let line = lines.next().ok_or_else(|| bad("truncated basis"))?;
            let mut entries = Vec::new();
            for cell in line.split_whitespace() {
                let (i, c) = cell.split_once(':').ok_or_else(|| bad("malformed basis entry"))?;
                let i: usize = i.parse().map_err(|_| bad("bad index"))?;
                let c: u32 = c.parse().map_err(|_| bad("bad coefficient"))?;
                if i >= ambient || c == 0 || c >= field.modulus() {
                    return Err(bad("basis entry out of range"));
                }
                entries.push((i, c));
            }
            if entries.windows(2).any(|w| w[0].0 >= w[1].0) {
                return Err(bad("basis entries not sorted"));
            }
            rows.push(FieldVector::from_sorted(field, ambient, entries));
        }
        if lines.next() != Some("end") {
            return Err(bad("missing end marker"));
        }
        let carrier = Subspace::span(field, ambient, rows.clone())?;
        if carrier.basis() != rows.as_slice() {
            return Err(bad("basis is not in canonical reduced form"));
        }
        Ok(Self::from_closed_subspace(space, carrier)?.with_label(kind, partition))
    }
}

/// `S^λ ⊆ F_n^r` as the submodule generated by the column-superstandard
/// bracket product.
pub fn specht_module(lambda: &Partition, n: usize, field: PrimeField, guard: Guard) -> Result<GModule> {
    if lambda.len() > n {
        return Err(Error::TooManyParts { parts: lambda.len(), n });
    }
    let space = WordSpace::new(n, lambda.size(), guard)?;
    let generator = column_bracket_product(&Tableau::column_superstandard(lambda), &space, field)?;
    Ok(GModule::generated(space, field, [generator]).with_label(ModuleKind::Specht, Some(lambda.clone())))
}

/// Gram matrix of the word-basis form restricted to the canonical basis of `m`.
pub fn gram_matrix(m: &GModule) -> Matrix {
    let basis = m.carrier().basis();
    let d = basis.len();
    let mut g = Matrix::zeros(m.field(), d, d);
    for i in 0..d {
        for j in i..d {
            let x = basis[i].dot(&basis[j]);
            g.set(i, j, x);
            g.set(j, i, x);
        }
    }
    g
}

/// `P^λ = {v ∈ S^λ : ⟨v, S^λ⟩ = 0}` for a Specht module with `p`-regular label.
pub fn gram_radical(m: &GModule) -> Result<GModule> {
    let lambda = match (m.kind(), m.partition()) {
        (ModuleKind::Specht, Some(l)) => l.clone(),
        _ => return Err(Error::InvalidArgument("the radical is defined here for Specht modules only".into())),
    };
    let p = m.field().modulus();
    if !lambda.is_p_regular(p) {
        return Err(Error::Singular(lambda.to_string(), p));
    }
    let basis = m.carrier().basis();
    let relations = kernel(&gram_matrix(m));
    let vectors: Vec<FieldVector> = relations
        .basis()
        .iter()
        .map(|c| {
            c.entries()
                .iter()
                .fold(FieldVector::zero(m.field(), m.space().dim()), |acc, &(i, x)| acc.add_scaled(x, &basis[i]))
        })
        .collect();
    let carrier = Subspace::span(m.field(), m.space().dim(), vectors)?;
    Ok(GModule::from_closed_subspace(*m.space(), carrier)?.with_label(ModuleKind::Radical, Some(lambda)))
}

/// `P^λ` built directly from `λ`.
pub fn radical_module(lambda: &Partition, n: usize, field: PrimeField, guard: Guard) -> Result<GModule> {
    if !lambda.is_p_regular(field.modulus()) {
        return Err(Error::Singular(lambda.to_string(), field.modulus()));
    }
    gram_radical(&specht_module(lambda, n, field, guard)?)
}

/// `dim D^λ = dim S^λ − dim P^λ`.
pub fn dim_irreducible(lambda: &Partition, n: usize, field: PrimeField, guard: Guard) -> Result<usize> {
    if !lambda.is_p_regular(field.modulus()) {
        return Err(Error::Singular(lambda.to_string(), field.modulus()));
    }
    let s = specht_module(lambda, n, field, guard)?;
    Ok(s.dim() - gram_radical(&s)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn space(n: usize, r: usize) -> WordSpace {
        WordSpace::new(n, r, Guard::default()).unwrap()
    }

    fn basis_vec(sp: &WordSpace, f: PrimeField, w: &[u8]) -> FieldVector {
        FieldVector::unit(f, sp.dim(), sp.index(&Word::new(w)))
    }

    fn random_vector(rng: &mut ChaCha8Rng, sp: &WordSpace, f: PrimeField) -> FieldVector {
        let mut terms: Vec<(usize, i64)> = Vec::new();
        for i in 0..sp.dim() {
            if rng.gen_bool(0.5) {
                terms.push((i, rng.gen_range(0..f.modulus()) as i64));
            }
        }
        FieldVector::from_terms(f, sp.dim(), terms)
    }

    #[test]
    fn action_examples() {
        let f = gf(5);
        let sp = space(2, 2);
        let swap = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
        assert_eq!(sp.act(&swap, &basis_vec(&sp, f, &[1, 2])), basis_vec(&sp, f, &[2, 1]));
        let v = basis_vec(&sp, f, &[1, 2]).add_scaled(3, &basis_vec(&sp, f, &[2, 2]));
        assert_eq!(sp.act(&Permutation::identity(2), &v), v);
        let sp3 = space(3, 3);
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(sp3.act(&c, &basis_vec(&sp3, f, &[1, 2, 3])), basis_vec(&sp3, f, &[3, 1, 2]));
    }

    #[test]
    fn action_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = gf(3);
        for r in 1..=6 {
            let sp = space(2, r);
            let all = Permutation::all(r);
            for _ in 0..10 {
                let v = random_vector(&mut rng, &sp, f);
                let a = &all[rng.gen_range(0..all.len())];
                let b = &all[rng.gen_range(0..all.len())];
                assert_eq!(sp.act(a, &sp.act(b, &v)), sp.act(&a.compose(b), &v));
            }
            for i in 1..r {
                let v = random_vector(&mut rng, &sp, f);
                assert_eq!(sp.act_adjacent(i, &v), sp.act(&Permutation::adjacent(r, i), &v));
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let f = gf(5);
        let sp = space(2, 2);
        let t = Tableau::new(part("1,1"), vec![vec![1, 2]]).unwrap();
        let expected = basis_vec(&sp, f, &[1, 2]).sub(&basis_vec(&sp, f, &[2, 1]));
        assert_eq!(column_bracket_product(&t, &sp, f).unwrap(), expected);
        let t = Tableau::new(part("2"), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(column_bracket_product(&t, &sp, f).unwrap(), basis_vec(&sp, f, &[1, 1]));
        let sp3 = space(2, 3);
        let t = Tableau::new(part("2,1"), vec![vec![1, 2], vec![3]]).unwrap();
        let expected = basis_vec(&sp3, f, &[1, 2, 1]).sub(&basis_vec(&sp3, f, &[2, 1, 1]));
        assert_eq!(column_bracket_product(&t, &sp3, f).unwrap(), expected);
        assert_eq!(Tableau::column_superstandard(&part("2,1")), t);
    }

    #[test]
    fn bracket_rejects_long_column() {
        let t = Tableau::column_superstandard(&part("1,1,1"));
        let err = column_bracket_product(&t, &space(2, 3), gf(3)).unwrap_err();
        assert_eq!(err, Error::ColumnTooLong { len: 3, n: 2 });
        assert!(Tableau::new(part("2,1"), vec![vec![1, 1], vec![3]]).is_err());
        assert!(Tableau::new(part("2,1"), vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn bracket_support_has_weight_lambda() {
        let f = gf(7);
        for r in 1..=6 {
            for n in 1..=4 {
                let sp = space(n, r);
                for lam in enumerate_partitions(r, n) {
                    let t = Tableau::column_superstandard(&lam);
                    let v = column_bracket_product(&t, &sp, f).unwrap();
                    let expected_support: usize =
                        lam.conjugate().parts().iter().map(|&m| crate::perm::factorial(m as usize)).product();
                    assert_eq!(v.support_len(), expected_support);
                    let weight = lam.padded(n).unwrap();
                    for &(i, c) in v.entries() {
                        assert_eq!(sp.word(i).weight(n), weight);
                        assert!(c == 1 || c == f.modulus() - 1);
                    }
                }
            }
        }
    }

    #[test]
    fn specht_examples() {
        for p in [2, 3, 5] {
            let f = gf(p);
            assert_eq!(specht_module(&part("2"), 2, f, Guard::default()).unwrap().dim(), 1);
            assert_eq!(specht_module(&part("1,1"), 2, f, Guard::default()).unwrap().dim(), 1);
        }
        let s = specht_module(&part("2,1"), 2, gf(3), Guard::default()).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.is_g_closed());
        assert!(matches!(specht_module(&part("1,1,1"), 2, gf(3), Guard::default()), Err(Error::TooManyParts { .. })));
        // r = 0: the empty product spans the one-dimensional space
        let s0 = specht_module(&Partition::empty(), 2, gf(3), Guard::default()).unwrap();
        assert_eq!(s0.dim(), 1);
    }

    #[test]
    fn unsigned_bracket_generates_a_different_module() {
        let f = gf(5);
        let sp = space(2, 2);
        let wrong = basis_vec(&sp, f, &[1, 2]).add_scaled(1, &basis_vec(&sp, f, &[2, 1]));
        let right = column_bracket_product(&Tableau::column_superstandard(&part("1,1")), &sp, f).unwrap();
        assert_ne!(GModule::generated(sp, f, [wrong]), GModule::generated(sp, f, [right]));
    }

    #[test]
    fn radical_examples() {
        for p in [2, 3, 5] {
            assert!(radical_module(&part("2"), 2, gf(p), Guard::default()).unwrap().is_zero());
        }
        assert_eq!(radical_module(&part("2,1"), 2, gf(3), Guard::default()).unwrap().dim(), 1);
        assert_eq!(radical_module(&part("2,1"), 2, gf(2), Guard::default()).unwrap().dim(), 0);
        assert_eq!(dim_irreducible(&part("2"), 2, gf(2), Guard::default()).unwrap(), 1);
        assert_eq!(dim_irreducible(&part("2,1"), 2, gf(3), Guard::default()).unwrap(), 1);
        assert_eq!(dim_irreducible(&part("2,1"), 2, gf(5), Guard::default()).unwrap(), 2);
        assert_eq!(dim_irreducible(&part("1,1"), 2, gf(2), Guard::default()), Err(Error::Singular("1,1".into(), 2)));
        let g = GModule::full(space(2, 2), gf(3));
        assert!(gram_radical(&g).is_err());
    }

    #[test]
    fn radical_is_proper_and_closed() {
        for p in [2, 3, 5, 7] {
            let f = gf(p);
            for r in 1..=7 {
                for lam in enumerate_partitions(r, 3) {
                    if !lam.is_p_regular(p as u32) {
                        continue;
                    }
                    let s = specht_module(&lam, 3, f, Guard::default()).unwrap();
                    let rad = gram_radical(&s).unwrap();
                    assert!(rad.dim() < s.dim(), "{lam} p={p}");
                    assert!(rad.is_g_closed());
                    assert!(s.contains(&rad).unwrap());
                }
            }
        }
    }

    #[test]
    fn form_is_contravariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = gf(5);
        let sp = space(3, 4);
        let all = Permutation::all(4);
        for _ in 0..30 {
            let v = random_vector(&mut rng, &sp, f);
            let u = random_vector(&mut rng, &sp, f);
            let s = &all[rng.gen_range(0..all.len())];
            assert_eq!(sp.act(s, &v).dot(&u), v.dot(&sp.act(&s.inverse(), &u)));
        }
    }

    #[test]
    fn weight_space_examples() {
        assert_eq!(weight_space_dim(2, 2, &[1, 1]).unwrap(), 2);
        assert_eq!(weight_space_dim(3, 2, &[3, 0]).unwrap(), 1);
        assert_eq!(weight_space_dim(4, 2, &[2, 2]).unwrap(), 6);
        assert!(matches!(weight_space_dim(4, 2, &[2, 1]), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn tabloid_correspondence_is_equivariant() {
        // word ↦ (positions of letter j)_j matches the tabloid action π{t} = {π t}
        let sp = space(3, 4);
        for pi in Permutation::all(4) {
            for idx in 0..sp.dim() {
                let w = sp.word(idx);
                let moved = sp.word(sp.act_index(&pi, idx));
                let mut expected: Vec<Vec<usize>> =
                    w.tabloid(3).iter().map(|row| row.iter().map(|&t| pi.apply(t)).collect()).collect();
                for row in &mut expected {
                    row.sort_unstable();
                }
                assert_eq!(moved.tabloid(3), expected);
            }
        }
    }

    #[test]
    fn text_roundtrip_and_rejection() {
        let m = radical_module(&part("2,1"), 2, gf(3), Guard::default()).unwrap();
        let text = m.to_text();
        let back = GModule::from_text(&text, Guard::default()).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.kind(), ModuleKind::Radical);
        assert_eq!(back.partition(), Some(&part("2,1")));
        assert!(GModule::from_text("spechtkit-gmodule 2\n", Guard::default()).is_err());
        let truncated = text.replace("end\n", "");
        assert!(GModule::from_text(&truncated, Guard::default()).is_err());
        // a single non-closed vector
        let bogus = "spechtkit-gmodule 1\nn 2\nr 2\np 3\nkind generated\nlambda -\nambient 4\ndim 1\n1:1\nend\n";
        assert_eq!(GModule::from_text(bogus, Guard::default()), Err(Error::NotClosed));
    }

    #[test]
    fn guard_refuses_large_spaces() {
        assert!(matches!(WordSpace::new(2, 25, Guard::default()), Err(Error::GuardExceeded { .. })));
        assert!(WordSpace::new(2, 24, Guard::default()).is_ok());
        assert!(WordSpace::new(2, 25, Guard::overridden()).is_ok());
    }
}
