//! Deterministic exact linear algebra over `Q` on vectors coordinatized by
//! the canonical monomial basis: span, rank, kernel, membership.
//!
//! The exact engine clears denominators and runs a fraction-free elimination
//! over `BigInt` with per-row content stripping, then rescales to a reduced
//! echelon form with unit pivots. Reduced row echelon form is unique, so a
//! basis depends only on the spanned subspace, which keeps every report
//! byte-deterministic. A word-size modular engine provides rank bounds that
//! are always confirmed exactly before anything is reported.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::operators::OperatorTag;
use crate::superform::{
    component_dim, monomial_basis, Bidegree, Coeff, SuperForm, SuperMonomial,
};

/// Resource guard for per-component work.
#[derive(Clone, Copy, Debug)]
pub struct ResourceCaps {
    /// Maximal allowed monomial-basis size of a single bidegree component.
    pub max_component: usize,
}

impl Default for ResourceCaps {
    fn default() -> Self {
        ResourceCaps {
            max_component: 200_000,
        }
    }
}

impl ResourceCaps {
    pub fn check(&self, n: usize, d: Bidegree) -> Result<()> {
        let dim = component_dim(n, d);
        if dim > self.max_component {
            Err(Error::ResourceCapExceeded {
                bidegree: d,
                dim,
                cap: self.max_component,
            })
        } else {
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Sparse rows
// ---------------------------------------------------------------------------

/// Sparse rational row, sorted by column.
pub(crate) type QRow = Vec<(u32, Coeff)>;
/// Sparse integer row, sorted by column.
pub(crate) type IRow = Vec<(u32, BigInt)>;

pub(crate) fn clear_denominators(row: &QRow) -> IRow {
    let mut lcm = BigInt::one();
    for (_, c) in row {
        lcm = lcm.lcm(c.denom());
    }
    row.iter()
        .map(|(col, c)| (*col, c.numer() * &lcm / c.denom()))
        .collect()
}

fn strip_content(row: &mut IRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `ca * a - cb * b`, sparse merge; entries hitting zero are dropped.
fn combine(ca: &BigInt, a: &IRow, cb: &BigInt, b: &IRow) -> IRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0, ca * &a[i].1));
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(cb * &b[j].1)));
            j += 1;
        } else {
            let v = ca * &a[i].1 - cb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

struct IntEchelon {
    rows: Vec<IRow>,
    pivots: Vec<u32>,
}

/// Fraction-free forward elimination. Pivot selection: first nonzero column
/// in the canonical order, then largest absolute head coefficient.
fn forward_eliminate(mut rows: Vec<IRow>) -> IntEchelon {
    rows.retain(|r| !r.is_empty());
    for r in rows.iter_mut() {
        strip_content(r);
    }
    let mut ech_rows: Vec<IRow> = Vec::new();
    let mut pivots: Vec<u32> = Vec::new();
    while !rows.is_empty() {
        let mut best = 0usize;
        for i in 1..rows.len() {
            let (ci, vi) = (rows[i][0].0, &rows[i][0].1);
            let (cb, vb) = (rows[best][0].0, &rows[best][0].1);
            if ci < cb || (ci == cb && vi.abs() > vb.abs()) {
                best = i;
            }
        }
        let pivot = rows.swap_remove(best);
        let (pc, pv) = (pivot[0].0, pivot[0].1.clone());
        let mut next = Vec::with_capacity(rows.len());
        for r in rows {
            if r[0].0 == pc {
                let lead = r[0].1.clone();
                let g = pv.gcd(&lead);
                let mut nr = combine(&(&pv / &g), &r, &(&lead / &g), &pivot);
                strip_content(&mut nr);
                if !nr.is_empty() {
                    next.push(nr);
                }
            } else {
                next.push(r);
            }
        }
        rows = next;
        pivots.push(pc);
        ech_rows.push(pivot);
    }
    IntEchelon {
        rows: ech_rows,
        pivots,
    }
}

fn row_sub_scaled(a: &QRow, factor: &Coeff, b: &QRow) -> QRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(factor * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - factor * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rational reduced echelon rows (unit pivots, each pivot column cleared from
/// every other row), sorted by pivot column.
pub(crate) struct ReducedEchelon {
    pub rows: Vec<QRow>,
    pub pivots: Vec<u32>,
}

pub(crate) fn reduced_echelon_int(rows: Vec<IRow>) -> ReducedEchelon {
    let ech = forward_eliminate(rows);
    let k = ech.rows.len();
    let mut q: Vec<QRow> = ech
        .rows
        .iter()
        .map(|r| {
            let lead = Coeff::from_integer(r[0].1.clone());
            r.iter()
                .map(|(c, v)| (*c, Coeff::from_integer(v.clone()) / &lead))
                .collect()
        })
        .collect();
    for i in (0..k).rev() {
        let pc = ech.pivots[i];
        let row_i = q[i].clone();
        for qj in q.iter_mut().take(i) {
            if let Some(pos) = qj.iter().position(|(c, _)| *c == pc) {
                let factor = qj[pos].1.clone();
                *qj = row_sub_scaled(qj, &factor, &row_i);
            }
        }
    }
    ReducedEchelon {
        rows: q,
        pivots: ech.pivots,
    }
}

pub(crate) fn reduced_echelon_q(rows: &[QRow]) -> ReducedEchelon {
    reduced_echelon_int(rows.iter().map(clear_denominators).collect())
}

pub(crate) fn rank_of_rows(rows: &[QRow]) -> usize {
    forward_eliminate(rows.iter().map(clear_denominators).collect())
        .rows
        .len()
}

/// Kernel of the linear map whose constraint rows are given, as dense
/// solution vectors of length `ncols`, one per free column (ascending).
pub(crate) fn kernel_of_rows(rows: &[QRow], ncols: usize) -> Vec<Vec<Coeff>> {
    let ech = reduced_echelon_q(rows);
    let pivot_set: BTreeSet<u32> = ech.pivots.iter().copied().collect();
    let mut kernel = Vec::new();
    for f in 0..ncols as u32 {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut v = vec![Coeff::zero(); ncols];
        v[f as usize] = Coeff::one();
        for (i, row) in ech.rows.iter().enumerate() {
            if let Some((_, c)) = row.iter().find(|(col, _)| *col == f) {
                v[ech.pivots[i] as usize] = -c.clone();
            }
        }
        kernel.push(v);
    }
    kernel
}

// ---------------------------------------------------------------------------
// Subspace bases of bidegree components
// ---------------------------------------------------------------------------

/// Echelonized basis of a subspace of one bidegree component. Rows are
/// reduced (unit pivot coefficient, pivot monomial absent from every other
/// row), so membership is a single reduction pass.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    n: usize,
    bidegree: Bidegree,
    rows: Vec<SuperForm>,
    pivots: Vec<SuperMonomial>,
}

impl SubspaceBasis {
    pub fn empty(n: usize, d: Bidegree) -> Self {
        SubspaceBasis {
            n,
            bidegree: d,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bidegree(&self) -> Bidegree {
        self.bidegree
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SuperForm] {
        &self.rows
    }

    pub fn pivots(&self) -> &[SuperMonomial] {
        &self.pivots
    }

    /// Remainder of `f` after reduction against the basis.
    pub fn reduce(&self, f: &SuperForm) -> SuperForm {
        let mut out = f.clone();
        for (row, pivot) in self.rows.iter().zip(&self.pivots) {
            let c = out.coeff(pivot);
            if !c.is_zero() {
                out = out.sub(&row.scale(&c));
            }
        }
        out
    }

    /// True iff `f` reduces to zero against the basis. The form must be zero
    /// or homogeneous of the basis bidegree.
    pub fn contains(&self, f: &SuperForm) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if f.n() != self.n {
            return Err(Error::AmbientMismatch {
                left: f.n(),
                right: self.n,
            });
        }
        match f.bidegree() {
            Some(d) if d == self.bidegree => Ok(self.reduce(f).is_zero()),
            got => Err(Error::BidegreeMismatch {
                expected: self.bidegree,
                got: got.unwrap_or(Bidegree::new(0, 0)),
            }),
        }
    }

    /// Coordinates of an in-span vector with respect to the rows: the values
    /// at the pivot monomials. Returns `None` when `f` is not in the span.
    pub fn coordinates(&self, f: &SuperForm) -> Option<Vec<Coeff>> {
        let coords: Vec<Coeff> = self.pivots.iter().map(|p| f.coeff(p)).collect();
        let mut rec = SuperForm::zero(self.n);
        for (c, row) in coords.iter().zip(&self.rows) {
            rec = rec.add(&row.scale(c));
        }
        if &rec == f {
            Some(coords)
        } else {
            None
        }
    }
}

pub(crate) fn form_to_row(f: &SuperForm, basis: &[SuperMonomial]) -> QRow {
    let mut row: QRow = Vec::with_capacity(f.num_terms());
    for (m, c) in f.terms() {
        let idx = basis
            .binary_search(m)
            .expect("monomial outside component basis");
        row.push((idx as u32, c.clone()));
    }
    row.sort_by_key(|(c, _)| *c);
    row
}

pub(crate) fn row_to_form(n: usize, row: &QRow, basis: &[SuperMonomial]) -> SuperForm {
    SuperForm::from_terms(
        n,
        row.iter()
            .map(|(col, c)| (basis[*col as usize].clone(), c.clone())),
    )
}

/// Reduced echelon basis of the span of the given forms, all homogeneous of
/// bidegree `d` (zero forms are ignored).
pub fn span(n: usize, d: Bidegree, forms: &[SuperForm]) -> Result<SubspaceBasis> {
    let basis = monomial_basis(n, d);
    let mut rows: Vec<IRow> = Vec::with_capacity(forms.len());
    for f in forms {
        if f.is_zero() {
            continue;
        }
        if f.n() != n {
            return Err(Error::AmbientMismatch {
                left: f.n(),
                right: n,
            });
        }
        match f.bidegree() {
            Some(fd) if fd == d => {}
            got => {
                return Err(Error::BidegreeMismatch {
                    expected: d,
                    got: got.unwrap_or(Bidegree::new(0, 0)),
                })
            }
        }
        rows.push(clear_denominators(&form_to_row(f, &basis)));
    }
    let ech = reduced_echelon_int(rows);
    let pivots: Vec<SuperMonomial> = ech
        .pivots
        .iter()
        .map(|&c| basis[c as usize].clone())
        .collect();
    let rows: Vec<SuperForm> = ech.rows.iter().map(|r| row_to_form(n, r, &basis)).collect();
    Ok(SubspaceBasis {
        n,
        bidegree: d,
        rows,
        pivots,
    })
}

/// Builds a basis directly from rows already known to be reduced echelon
/// (used by the kernel pipelines, which end with a [`span`] call anyway).
pub(crate) fn basis_from_vectors(
    n: usize,
    d: Bidegree,
    vectors: &[SuperForm],
) -> Result<SubspaceBasis> {
    span(n, d, vectors)
}

// ---------------------------------------------------------------------------
// Operator kernels
// ---------------------------------------------------------------------------

/// Restricts the joint kernel of the listed operators within the span of
/// `vectors` (iterated one-operator restriction, exact).
pub(crate) fn restrict_kernel(
    ops: &[OperatorTag],
    mut vectors: Vec<SuperForm>,
) -> Vec<SuperForm> {
    for op in ops {
        if vectors.is_empty() {
            break;
        }
        let mut constraints: BTreeMap<SuperMonomial, QRow> = BTreeMap::new();
        for (i, v) in vectors.iter().enumerate() {
            let img = op.apply(v);
            for (m, c) in img.terms() {
                constraints
                    .entry(m.clone())
                    .or_default()
                    .push((i as u32, c.clone()));
            }
        }
        let rows: Vec<QRow> = constraints.into_values().collect();
        let combos = kernel_of_rows(&rows, vectors.len());
        vectors = combos
            .iter()
            .map(|combo| {
                let n = vectors[0].n();
                let mut acc = SuperForm::zero(n);
                for (c, v) in combo.iter().zip(&vectors) {
                    if !c.is_zero() {
                        acc = acc.add(&v.scale(c));
                    }
                }
                acc
            })
            .collect();
    }
    vectors
}

/// Basis of the joint kernel of the listed operators on the `(l, k)`
/// component of `Omega_n`. Coefficientwise operators are handled on the
/// polynomial factor and tensored with the wedge words; the remaining
/// operators are restricted iteratively.
pub fn kernel(
    ops: &[OperatorTag],
    n: usize,
    d: Bidegree,
    caps: &ResourceCaps,
) -> Result<SubspaceBasis> {
    caps.check(n, d)?;
    if d.form as usize > n {
        return Ok(SubspaceBasis::empty(n, d));
    }
    let mut coeffwise = Vec::new();
    let mut mixing = Vec::new();
    for op in ops {
        if op.is_coefficientwise() {
            coeffwise.push(*op);
        } else {
            mixing.push(*op);
        }
    }

    let poly_d = Bidegree::new(d.poly, 0);
    let poly_vectors: Vec<SuperForm> = {
        let start: Vec<SuperForm> = monomial_basis(n, poly_d)
            .into_iter()
            .map(|m| SuperForm::from_monomial(n, m, num::One::one()))
            .collect();
        if coeffwise.is_empty() {
            start
        } else {
            let standard: BTreeSet<OperatorTag> =
                (1..=n as u32).map(OperatorTag::BigD).collect();
            let given: BTreeSet<OperatorTag> = coeffwise.iter().copied().collect();
            if given == standard {
                crate::harmonics::harmonic_poly_basis(n, d.poly).rows().to_vec()
            } else {
                restrict_kernel(&coeffwise, start)
            }
        }
    };

    let mut vectors: Vec<SuperForm> = Vec::new();
    for word in monomial_basis(n, Bidegree::new(0, d.form)) {
        let dxw = SuperForm::from_monomial(n, word, num::One::one());
        for h in &poly_vectors {
            vectors.push(h.mul(&dxw));
        }
    }
    let vectors = restrict_kernel(&mixing, vectors);
    span(n, d, &vectors)
}

// Ordering on OperatorTag so tag sets can live in BTreeSets.
impl PartialOrd for OperatorTag {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OperatorTag {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        fn key(t: &OperatorTag) -> (u8, u64) {
            match *t {
                OperatorTag::BigD(l) => (0, l as u64),
                OperatorTag::Delta(l) => (1, l as u64),
                OperatorTag::LowerD(j) => (2, j as u64),
                OperatorTag::ExteriorD => (3, 0),
                OperatorTag::Iota(j) => (4, j as u64),
                OperatorTag::Partial(i) => (5, i as u64),
            }
        }
        key(self).cmp(&key(other))
    }
}

// ---------------------------------------------------------------------------
// Word-size modular engine
// ---------------------------------------------------------------------------

pub(crate) mod modp {
    /// Fixed large primes, tried in order; determinism requires a fixed list.
    pub const PRIMES: &[u64] = &[
        2305843009213693951, // 2^61 - 1
        4611686018427388039,
        4611686018427388073,
        4611686018427388081,
        4611686018427388091,
    ];

    pub fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    pub fn add(a: u64, b: u64, p: u64) -> u64 {
        let s = a + b;
        if s >= p {
            s - p
        } else {
            s
        }
    }

    pub fn sub(a: u64, b: u64, p: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + p - b
        }
    }

    pub fn pow(mut base: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        base %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base, p);
            }
            base = mul(base, base, p);
            e >>= 1;
        }
        acc
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn from_bigint(v: &num::BigInt, p: u64) -> u64 {
        use num::{Integer, ToPrimitive};
        v.mod_floor(&num::BigInt::from(p)).to_u64().unwrap()
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref_dense(m: &mut Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..ncols {
            let mut sel = None;
            for r in row..m.len() {
                if m[r][col] != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            m.swap(row, sel);
            let piv_inv = inv(m[row][col], p);
            for c in col..ncols {
                m[row][c] = mul(m[row][c], piv_inv, p);
            }
            let pivot_row = m[row].clone();
            for (r, mr) in m.iter_mut().enumerate() {
                if r != row && mr[col] != 0 {
                    let factor = mr[col];
                    for c in col..ncols {
                        let t = mul(factor, pivot_row[c], p);
                        mr[c] = sub(mr[c], t, p);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        m.truncate(row);
        pivots
    }

    pub fn rank_dense(mut m: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
        rref_dense(&mut m, ncols, p).len()
    }

    /// Kernel basis from a dense constraint matrix; one vector per free
    /// column, ascending.
    pub fn kernel_dense(mut m: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
        let pivots = rref_dense(&mut m, ncols, p);
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut out = Vec::new();
        for f in 0..ncols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (i, row) in m.iter().enumerate() {
                if row[f] != 0 {
                    v[pivots[i]] = p - row[f];
                }
            }
            out.push(v);
        }
        out
    }
}
