//! Diagonal action of `S_n` on superforms: `x` and `dx` indices are permuted
//! the same way, with Koszul resorting signs on wedge words.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::memo;
use crate::superform::{
    coeff_int, Coeff, ExponentVector, SuperForm, SuperMonomial, WedgeNormalization,
};

/// A permutation of `{1, ..., n}` in one-line notation (`images[i-1] = s(i)`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            if seen[v - 1] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation: {images:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Adjacent or general transposition `(i j)`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i64 {
        let mut inv = 0u64;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
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

    pub fn cycle_type(&self) -> CycleType {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur - 1] {
                seen[cur - 1] = true;
                cur = self.apply(cur);
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }
}

/// A partition of `n`, weakly decreasing, labelling a conjugacy class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("zero part in cycle type".into()));
        }
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of cycles (including fixed points).
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Centralizer order `z = prod j^{m_j} m_j!`.
    pub fn centralizer_order(&self) -> u64 {
        let mut mult: BTreeMap<usize, u64> = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        let mut z = 1u64;
        for (j, m) in mult {
            for _ in 0..m {
                z *= j as u64;
            }
            z *= factorial(m);
        }
        z
    }

    /// Canonical class representative: cycles on consecutive integers.
    pub fn representative(&self) -> Permutation {
        let n = self.n();
        let mut images: Vec<usize> = (1..=n).collect();
        let mut start = 1;
        for &p in &self.parts {
            for offset in 0..p {
                let from = start + offset;
                let to = start + (offset + 1) % p;
                images[from - 1] = to;
            }
            start += p;
        }
        Permutation { images }
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn factorial(m: u64) -> u64 {
    (1..=m).product::<u64>().max(1)
}

/// All partitions of `n`, in a fixed (descending-lex) order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>, rest: usize, max: usize) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(out, prefix, rest - p, p);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), n, n);
    out
}

/// One conjugacy class of `S_n`.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub cycle_type: CycleType,
    pub size: u64,
    pub representative: Permutation,
}

/// One entry per partition of `n`; class sizes sum to `n!`.
pub fn conjugacy_classes(n: usize) -> Vec<ConjugacyClass> {
    partitions(n)
        .into_iter()
        .map(|parts| {
            let ct = CycleType { parts };
            let size = factorial(n as u64) / ct.centralizer_order();
            let representative = ct.representative();
            ConjugacyClass {
                cycle_type: ct,
                size,
                representative,
            }
        })
        .collect()
}

/// All `n!` permutations (memoized; `n <= 8` guard keeps this sane).
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    assert!(n <= 8, "full group enumeration capped at n = 8");
    memo::all_permutations(n, || {
        use itertools::Itertools;
        (1..=n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    })
}

/// Applies the diagonal action of `s` to a form. Algebra automorphism,
/// preserves bidegree, and `act(s, act(t, f)) = act(s∘t, f)`.
pub fn act(s: &Permutation, f: &SuperForm) -> SuperForm {
    assert_eq!(s.n(), f.n(), "ambient mismatch in act");
    let n = f.n();
    let mut out = SuperForm::zero(n);
    for (m, c) in f.terms() {
        let mut exps = vec![0u32; n];
        for i in 1..=n {
            exps[s.apply(i) - 1] = m.exps.get(i - 1);
        }
        let mapped: Vec<usize> = m.wedge.indices().iter().map(|&i| s.apply(i)).collect();
        match crate::superform::normalize_wedge(n, &mapped).expect("indices in range") {
            WedgeNormalization::Zero => unreachable!("permutation keeps indices distinct"),
            WedgeNormalization::Word { word, sign } => {
                let mut coeff = c.clone();
                if sign < 0 {
                    coeff = -coeff;
                }
                out.add_term(SuperMonomial::new(ExponentVector::new(exps), word), coeff);
            }
        }
    }
    out
}

/// Checked variant of [`act`].
pub fn act_checked(s: &Permutation, f: &SuperForm) -> Result<SuperForm> {
    if s.n() != f.n() {
        return Err(Error::AmbientMismatch {
            left: s.n(),
            right: f.n(),
        });
    }
    Ok(act(s, f))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsotypicMode {
    Invariant,
    Sign,
}

/// Group-averaging projector onto the invariant or sign isotypic component.
/// Idempotent; introduces denominators dividing `n!`.
pub fn project_isotypic(f: &SuperForm, mode: IsotypicMode) -> SuperForm {
    let n = f.n();
    let mut sum = SuperForm::zero(n);
    for s in &all_permutations(n) {
        let mut g = act(s, f);
        if mode == IsotypicMode::Sign && s.sign() < 0 {
            g = g.neg();
        }
        sum = sum.add(&g);
    }
    let order = coeff_int(factorial(n as u64) as i64);
    sum.scale(&(Coeff::one() / order))
}

fn check_generators(f: &SuperForm, signed: bool) -> bool {
    let n = f.n();
    for i in 1..n {
        let t = Permutation::transposition(n, i, i + 1);
        let g = act(&t, f);
        let want = if signed { f.neg() } else { f.clone() };
        if g != want {
            return false;
        }
    }
    true
}

/// True when `act(s, f) = f` for the adjacent transpositions (which generate
/// the full group).
pub fn is_invariant(f: &SuperForm) -> bool {
    check_generators(f, false)
}

/// True when `act(s, f) = sgn(s) f` for the adjacent transpositions.
pub fn is_alternant(f: &SuperForm) -> bool {
    check_generators(f, true)
}

/// Signed orbit sum `sum_s sgn(s) s(mono)`; integer-coefficient alternant
/// companion of the sign projector (`n!` times the projection of the
/// monomial). Zero exactly when the monomial has a symmetry with odd sign.
pub fn alternantize(n: usize, m: &SuperMonomial) -> SuperForm {
    let mono = SuperForm::from_monomial(n, m.clone(), Coeff::one());
    let mut sum = SuperForm::zero(n);
    for s in &all_permutations(n) {
        let mut g = act(s, &mono);
        if s.sign() < 0 {
            g = g.neg();
        }
        sum = sum.add(&g);
    }
    sum
}
