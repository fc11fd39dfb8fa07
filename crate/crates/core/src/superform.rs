//! Sparse exact arithmetic in the superalgebra
//! `Omega_n = Q[x_1..x_n] (x) Lambda(dx_1..dx_n)`.
//!
//! A [`SuperForm`] is a sparse rational linear combination of super-monomials
//! `x^a dx_S`; it is the universal value type of the crate. All values are
//! immutable after construction and every operation is pure.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient type used everywhere.
pub type Coeff = BigRational;

pub fn coeff_int(v: i64) -> Coeff {
    Coeff::from_integer(v.into())
}

/// Exponent vector `(j_1, ..., j_n)` of a monomial `x^J`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|J|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn set(&self, i: usize, v: u32) -> Self {
        let mut e = self.0.clone();
        e[i] = v;
        ExponentVector(e)
    }
}

impl Ord for ExponentVector {
    /// Graded order: total degree first, then lexicographic with larger
    /// `x_1`-exponents sorting first. Fixes matrix column order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.total().cmp(&other.total()))
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A strictly increasing word `dx_{i_1} ^ ... ^ dx_{i_k}` stored as a bit set
/// (bit `i-1` set means `dx_i` present). `n <= 16` is plenty, so `u32` bits
/// give O(1) sign bookkeeping.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WedgeWord(u32);

impl WedgeWord {
    pub const EMPTY: WedgeWord = WedgeWord(0);

    pub fn from_bits(bits: u32) -> Self {
        WedgeWord(bits)
    }

    /// Builds a word from strictly increasing 1-based indices.
    pub fn from_sorted_indices(indices: &[usize]) -> Self {
        let mut bits = 0u32;
        for &i in indices {
            debug_assert!(i >= 1);
            bits |= 1 << (i - 1);
        }
        WedgeWord(bits)
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    /// Form degree `k = |indices|`.
    pub fn size(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && (self.0 >> (i - 1)) & 1 == 1
    }

    /// 1-based indices, ascending.
    pub fn indices(&self) -> Vec<usize> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }

    /// Left-wedges `dx_i` onto this word: `dx_i ^ dx_S`. Returns `None` when
    /// `i` already occurs; otherwise the parity counts the generators of `S`
    /// that precede `i`.
    pub fn wedge_left(&self, i: usize) -> Option<(WedgeWord, i64)> {
        let bit = 1u32 << (i - 1);
        if self.0 & bit != 0 {
            return None;
        }
        let below = (self.0 & (bit - 1)).count_ones();
        let sign = if below % 2 == 0 { 1 } else { -1 };
        Some((WedgeWord(self.0 | bit), sign))
    }

    /// Contraction bookkeeping: removes `dx_i` if present, with the sign
    /// `(-1)^(r-1)` where `r` is the 1-based position of `i` in the word.
    pub fn remove(&self, i: usize) -> Option<(WedgeWord, i64)> {
        let bit = 1u32 << (i - 1);
        if self.0 & bit == 0 {
            return None;
        }
        let below = (self.0 & (bit - 1)).count_ones();
        let sign = if below % 2 == 0 { 1 } else { -1 };
        Some((WedgeWord(self.0 & !bit), sign))
    }

    /// Koszul product of two disjoint words; `None` when they overlap. The
    /// sign is the parity of pairs `(a, b)` with `a` in `self`, `b` in
    /// `other`, `a > b`.
    pub fn wedge(&self, other: &WedgeWord) -> Option<(WedgeWord, i64)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let pos = rest.trailing_zeros();
            inversions += (self.0 >> (pos + 1)).count_ones();
            rest &= rest - 1;
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((WedgeWord(self.0 | other.0), sign))
    }
}

/// Result of canonicalizing a raw index sequence into a wedge word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WedgeNormalization {
    /// A repeated generator occurred; the whole term is zero.
    Zero,
    Word { word: WedgeWord, sign: i64 },
}

/// Sorts a sequence of distinct 1-based indices into a [`WedgeWord`] together
/// with the parity of the sorting permutation. Repeated indices signal a zero
/// wedge; out-of-range indices are an argument error.
pub fn normalize_wedge(n: usize, indices: &[usize]) -> Result<WedgeNormalization> {
    let mut bits = 0u32;
    let mut inversions = 0u32;
    for &i in indices {
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let bit = 1u32 << (i - 1);
        if bits & bit != 0 {
            return Ok(WedgeNormalization::Zero);
        }
        // generators already placed that must move past this one
        inversions += (bits >> i).count_ones();
        bits |= bit;
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Ok(WedgeNormalization::Word {
        word: WedgeWord(bits),
        sign,
    })
}

/// Bidegree `(l, k)`: polynomial degree `l` and form degree `k`.
#[derive(
    Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, serde::Serialize, serde::Deserialize,
)]
pub struct Bidegree {
    pub poly: u32,
    pub form: u32,
}

impl Bidegree {
    pub fn new(poly: u32, form: u32) -> Self {
        Bidegree { poly, form }
    }

    pub fn total(&self) -> u32 {
        self.poly + self.form
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.poly, self.form)
    }
}

/// A single basis monomial `x^a dx_S`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SuperMonomial {
    pub exps: ExponentVector,
    pub wedge: WedgeWord,
}

impl SuperMonomial {
    pub fn new(exps: ExponentVector, wedge: WedgeWord) -> Self {
        SuperMonomial { exps, wedge }
    }

    pub fn one(n: usize) -> Self {
        SuperMonomial {
            exps: ExponentVector::zero(n),
            wedge: WedgeWord::EMPTY,
        }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.exps.total(), self.wedge.size())
    }
}

impl Ord for SuperMonomial {
    /// Canonical order: wedge word ascending as a bit pattern, then the
    /// graded order on exponents.
    fn cmp(&self, other: &Self) -> Ordering {
        self.wedge
            .cmp(&other.wedge)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse rational linear combination of super-monomials. No zero
/// coefficients are stored and every monomial carries the same ambient `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperForm {
    n: usize,
    terms: BTreeMap<SuperMonomial, Coeff>,
}

impl SuperForm {
    pub fn zero(n: usize) -> Self {
        SuperForm {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_monomial(n, SuperMonomial::one(n), Coeff::one())
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "variable index out of range");
        let exps = ExponentVector::zero(n).set(i - 1, 1);
        Self::from_monomial(n, SuperMonomial::new(exps, WedgeWord::EMPTY), Coeff::one())
    }

    /// The generator `dx_i` (1-based).
    pub fn dvar(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "generator index out of range");
        let wedge = WedgeWord::from_sorted_indices(&[i]);
        Self::from_monomial(
            n,
            SuperMonomial::new(ExponentVector::zero(n), wedge),
            Coeff::one(),
        )
    }

    pub fn from_monomial(n: usize, m: SuperMonomial, c: Coeff) -> Self {
        assert_eq!(m.n(), n, "monomial ambient mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SuperForm { n, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (SuperMonomial, Coeff)>>(n: usize, iter: I) -> Self {
        let mut f = SuperForm::zero(n);
        for (m, c) in iter {
            f.add_term(m, c);
        }
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Leading (smallest) monomial in the canonical order.
    pub fn leading_monomial(&self) -> Option<&SuperMonomial> {
        self.terms.keys().next()
    }

    pub(crate) fn add_term(&mut self, m: SuperMonomial, c: Coeff) {
        debug_assert_eq!(m.n(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SuperForm) -> SuperForm {
        assert_eq!(self.n, other.n, "ambient mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SuperForm) -> SuperForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SuperForm {
        SuperForm {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> SuperForm {
        if c.is_zero() {
            return SuperForm::zero(self.n);
        }
        SuperForm {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Super-commutative product. Panics on ambient mismatch; use
    /// [`wedge_mul`] for the checked variant.
    pub fn mul(&self, other: &SuperForm) -> SuperForm {
        assert_eq!(self.n, other.n, "ambient mismatch in mul");
        let mut out = SuperForm::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((wedge, sign)) = ma.wedge.wedge(&mb.wedge) {
                    let exps = ExponentVector::new(
                        ma.exps
                            .as_slice()
                            .iter()
                            .zip(mb.exps.as_slice())
                            .map(|(a, b)| a + b)
                            .collect(),
                    );
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(SuperMonomial::new(exps, wedge), c);
                }
            }
        }
        out
    }

    /// Integer power; for odd-degree forms anything past the square is zero.
    pub fn pow(&self, e: u32) -> SuperForm {
        let mut out = SuperForm::one(self.n);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Projection onto the `(l, k)` component. Idempotent; the components of
    /// a form are pairwise disjoint and sum to the form.
    pub fn bidegree_component(&self, d: Bidegree) -> SuperForm {
        SuperForm {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits into homogeneous components, keyed by bidegree.
    pub fn components(&self) -> BTreeMap<Bidegree, SuperForm> {
        let mut out: BTreeMap<Bidegree, SuperForm> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| SuperForm::zero(self.n))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// The bidegree when the form is homogeneous (zero forms have none).
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys();
        let first = it.next()?.bidegree();
        for m in it {
            if m.bidegree() != first {
                return None;
            }
        }
        Some(first)
    }
}

/// Checked super-commutative product: bilinear, Koszul signs on wedge words,
/// terms with a repeated `dx` vanish.
pub fn wedge_mul(a: &SuperForm, b: &SuperForm) -> Result<SuperForm> {
    if a.n() != b.n() {
        return Err(Error::AmbientMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(a.mul(b))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension of the `(l, k)` component: `C(n,k) * C(l+n-1, n-1)`.
pub fn component_dim(n: usize, d: Bidegree) -> usize {
    if d.form as usize > n {
        return 0;
    }
    let wedge = binomial(n as u64, d.form as u64);
    let poly = binomial(d.poly as u64 + n as u64 - 1, n as u64 - 1);
    (wedge * poly) as usize
}

fn exponent_vectors(n: usize, total: u32) -> Vec<ExponentVector> {
    // Enumerated in the canonical (x1-major descending) order.
    fn rec(out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>, rest: u32, slots: usize) {
        if slots == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=rest).rev() {
            prefix.push(e);
            rec(out, prefix, rest - e, slots - 1);
            prefix.pop();
        }
    }
    if n == 0 {
        return if total == 0 {
            vec![ExponentVector::new(vec![])]
        } else {
            vec![]
        };
    }
    let mut raw = Vec::new();
    rec(&mut raw, &mut Vec::new(), total, n);
    raw.into_iter().map(ExponentVector::new).collect()
}

fn wedge_words(n: usize, k: u32) -> Vec<WedgeWord> {
    (0u32..(1 << n))
        .filter(|bits| bits.count_ones() == k)
        .map(WedgeWord::from_bits)
        .collect()
}

/// Ordered basis of the `(l, k)` component of `Omega_n`, in the canonical
/// monomial order. Used to coordinatize all linear algebra.
pub fn monomial_basis(n: usize, d: Bidegree) -> Vec<SuperMonomial> {
    let mut out = Vec::with_capacity(component_dim(n, d));
    for w in wedge_words(n, d.form) {
        for e in exponent_vectors(n, d.poly) {
            out.push(SuperMonomial::new(e, w));
        }
    }
    debug_assert!(out.windows(2).all(|p| p[0] < p[1]));
    out
}

// ---------------------------------------------------------------------------
// Text grammar: `c * x1^a1 ... xn^an dx(i1,...,ik)` terms joined by ` + `.
// This is the fixture format for golden tests.
// ---------------------------------------------------------------------------

fn render_monomial(m: &SuperMonomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps.as_slice().iter().enumerate() {
        if e > 0 {
            parts.push(format!("x{}^{}", i + 1, e));
        }
    }
    if m.wedge.size() > 0 {
        let idx: Vec<String> = m.wedge.indices().iter().map(|i| i.to_string()).collect();
        parts.push(format!("dx({})", idx.join(",")));
    }
    parts.join(" ")
}

impl fmt::Display for SuperForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl SuperForm {
    /// Renders in the fixture grammar; [`SuperForm::parse`] inverts this.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut pieces = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mono = render_monomial(m);
            if mono.is_empty() {
                pieces.push(format!("{}", c));
            } else {
                pieces.push(format!("{} * {}", c, mono));
            }
        }
        pieces.join(" + ")
    }

    /// Parses the grammar produced by [`SuperForm::render`].
    pub fn parse(n: usize, input: &str) -> Result<SuperForm> {
        let input = input.trim();
        if input == "0" {
            return Ok(SuperForm::zero(n));
        }
        let mut form = SuperForm::zero(n);
        for term in input.split(" + ") {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse("empty term".into()));
            }
            let (coeff_str, mono_str) = match term.split_once(" * ") {
                Some((c, m)) => (c, m),
                None => (term, ""),
            };
            let coeff: Coeff = coeff_str
                .parse()
                .map_err(|e| Error::Parse(format!("bad coefficient {coeff_str:?}: {e}")))?;
            let mut exps = vec![0u32; n];
            let mut wedge = WedgeWord::EMPTY;
            for tok in mono_str.split_whitespace() {
                if let Some(rest) = tok.strip_prefix("dx(") {
                    let inner = rest
                        .strip_suffix(')')
                        .ok_or_else(|| Error::Parse(format!("bad wedge token {tok:?}")))?;
                    let mut indices = Vec::new();
                    for p in inner.split(',') {
                        let i: usize = p
                            .trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("bad wedge index {p:?}: {e}")))?;
                        indices.push(i);
                    }
                    match normalize_wedge(n, &indices)? {
                        WedgeNormalization::Zero => {
                            return Err(Error::Parse(format!("repeated index in {tok:?}")))
                        }
                        WedgeNormalization::Word { word, sign } => {
                            if sign < 0 {
                                return Err(Error::Parse(format!("unsorted wedge in {tok:?}")));
                            }
                            wedge = word;
                        }
                    }
                } else if let Some(rest) = tok.strip_prefix('x') {
                    let (var, exp) = rest
                        .split_once('^')
                        .ok_or_else(|| Error::Parse(format!("bad variable token {tok:?}")))?;
                    let i: usize = var
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad variable index {var:?}: {e}")))?;
                    if i < 1 || i > n {
                        return Err(Error::IndexOutOfRange { index: i, n });
                    }
                    let e: u32 = exp
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad exponent {exp:?}: {e}")))?;
                    exps[i - 1] += e;
                } else {
                    return Err(Error::Parse(format!("unrecognized token {tok:?}")));
                }
            }
            form.add_term(SuperMonomial::new(ExponentVector::new(exps), wedge), coeff);
        }
        Ok(form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> SuperForm {
        SuperForm::var(n, i)
    }

    fn dx(n: usize, i: usize) -> SuperForm {
        SuperForm::dvar(n, i)
    }

    /// Brute-force permutation sign by counting inversions of the raw list.
    fn perm_sign_oracle(indices: &[usize]) -> i64 {
        let mut inv = 0;
        for i in 0..indices.len() {
            for j in i + 1..indices.len() {
                if indices[i] > indices[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn normalize_wedge_examples() {
        match normalize_wedge(3, &[2, 1]).unwrap() {
            WedgeNormalization::Word { word, sign } => {
                assert_eq!(word.indices(), vec![1, 2]);
                assert_eq!(sign, -1);
            }
            _ => panic!("unexpected zero"),
        }
        match normalize_wedge(3, &[1, 2, 3]).unwrap() {
            WedgeNormalization::Word { word, sign } => {
                assert_eq!(word.indices(), vec![1, 2, 3]);
                assert_eq!(sign, 1);
            }
            _ => panic!("unexpected zero"),
        }
        // 3-cycle parity against the brute-force oracle
        let input = [3usize, 1, 2];
        match normalize_wedge(3, &input).unwrap() {
            WedgeNormalization::Word { sign, .. } => {
                assert_eq!(sign, perm_sign_oracle(&input));
                assert_eq!(sign, 1);
            }
            _ => panic!("unexpected zero"),
        }
        assert_eq!(
            normalize_wedge(3, &[1, 1]).unwrap(),
            WedgeNormalization::Zero
        );
        assert!(normalize_wedge(2, &[3]).is_err());
    }

    #[test]
    fn normalize_wedge_random_parity() {
        // all permutations of [1..4]
        use itertools::Itertools;
        for perm in (1..=4usize).permutations(4) {
            match normalize_wedge(4, &perm).unwrap() {
                WedgeNormalization::Word { word, sign } => {
                    assert_eq!(word.indices(), vec![1, 2, 3, 4]);
                    assert_eq!(sign, perm_sign_oracle(&perm));
                }
                _ => panic!("unexpected zero"),
            }
        }
    }

    #[test]
    fn wedge_mul_examples() {
        let n = 3;
        let d12 = wedge_mul(&dx(n, 1), &dx(n, 2)).unwrap();
        let d21 = wedge_mul(&dx(n, 2), &dx(n, 1)).unwrap();
        assert_eq!(d21, d12.neg());
        assert!(!d12.is_zero());

        let a = x(n, 1).mul(&dx(n, 1));
        let b = x(n, 2).mul(&dx(n, 2));
        let ab = wedge_mul(&a, &b).unwrap();
        let expect = x(n, 1).mul(&x(n, 2)).mul(&d12);
        assert_eq!(ab, expect);

        let zero = wedge_mul(&dx(n, 1), &x(n, 3).mul(&dx(n, 1))).unwrap();
        assert!(zero.is_zero());

        assert!(wedge_mul(&dx(2, 1), &dx(3, 1)).is_err());
    }

    #[test]
    fn bidegree_component_examples() {
        let n = 2;
        let f = x(n, 1).add(&dx(n, 1));
        assert_eq!(f.bidegree_component(Bidegree::new(1, 0)), x(n, 1));
        assert!(x(n, 1)
            .bidegree_component(Bidegree::new(5, 0))
            .is_zero());
        let g = x(n, 1).pow(2).mul(&dx(n, 2)).add(&x(n, 1).mul(&x(n, 2)).mul(&dx(n, 2)));
        assert_eq!(g.bidegree_component(Bidegree::new(2, 1)), g);

        // components are disjoint and sum to the form
        let mixed = f.add(&g).add(&SuperForm::one(n));
        let comps = mixed.components();
        let mut sum = SuperForm::zero(n);
        for (d, c) in &comps {
            assert_eq!(c.bidegree(), Some(*d));
            sum = sum.add(c);
        }
        assert_eq!(sum, mixed);
    }

    #[test]
    fn monomial_basis_counts() {
        let b = monomial_basis(2, Bidegree::new(0, 1));
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].wedge.indices(), vec![1]);
        assert_eq!(b[1].wedge.indices(), vec![2]);

        let b = monomial_basis(2, Bidegree::new(1, 0));
        assert_eq!(b.len(), 2);
        // canonical order puts x1 first
        assert_eq!(b[0].exps.as_slice(), &[1, 0]);
        assert_eq!(b[1].exps.as_slice(), &[0, 1]);

        // stars-and-bars oracle for n=3, (2,2)
        let n = 3;
        let d = Bidegree::new(2, 2);
        let stars_and_bars =
            |deg: usize, vars: usize| -> usize {
                // count exponent vectors by brute enumeration
                let mut count = 0;
                for a in 0..=deg {
                    for b in 0..=deg - a {
                        let _c = deg - a - b;
                        count += 1;
                        let _ = (a, b, vars);
                    }
                }
                count
            };
        let expected = 3 * stars_and_bars(2, 3);
        assert_eq!(expected, 18);
        assert_eq!(monomial_basis(n, d).len(), 18);
        assert_eq!(component_dim(n, d), 18);
    }

    #[test]
    fn render_parse_roundtrip_simple() {
        let n = 3;
        let f = x(n, 1)
            .pow(2)
            .mul(&dx(n, 2))
            .scale(&Coeff::new(3.into(), 2.into()))
            .add(&dx(n, 1).mul(&dx(n, 3)).neg())
            .add(&SuperForm::one(n).scale(&coeff_int(5)));
        let text = f.render();
        let back = SuperForm::parse(n, &text).unwrap();
        assert_eq!(back, f);
        assert_eq!(SuperForm::parse(2, "0").unwrap(), SuperForm::zero(2));
    }

    #[test]
    fn supercommutativity_small() {
        // a ^ b = (-1)^(ka kb) b ^ a on homogeneous forms
        let n = 3;
        let a = dx(n, 1).mul(&x(n, 2));
        let b = dx(n, 2).add(&dx(n, 3)).mul(&x(n, 1));
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        assert_eq!(ab, ba.neg()); // both odd
        let c = dx(n, 1).mul(&dx(n, 2));
        assert_eq!(c.mul(&a), a.mul(&c)); // even times odd
    }
}
