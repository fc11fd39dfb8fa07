//! Internal memo tables for expensive, deterministic intermediates. Values
//! are pure functions of their keys, so concurrent duplicate computation is
//! harmless; the first insert wins.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::action::Permutation;
use crate::linalg::SubspaceBasis;
use crate::superform::Bidegree;

type PermTable = Mutex<HashMap<usize, Vec<Permutation>>>;

static PERMS: OnceLock<PermTable> = OnceLock::new();

pub fn all_permutations(n: usize, compute: impl FnOnce() -> Vec<Permutation>) -> Vec<Permutation> {
    let table = PERMS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = table.lock().unwrap().get(&n) {
        return v.clone();
    }
    let v = compute();
    table
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| v.clone());
    v
}

static HARMONIC_POLY: OnceLock<Mutex<HashMap<(usize, u32), SubspaceBasis>>> = OnceLock::new();

pub fn harmonic_poly(
    n: usize,
    degree: u32,
    compute: impl FnOnce() -> SubspaceBasis,
) -> SubspaceBasis {
    let table = HARMONIC_POLY.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = table.lock().unwrap().get(&(n, degree)) {
        return v.clone();
    }
    let v = compute();
    table
        .lock()
        .unwrap()
        .entry((n, degree))
        .or_insert_with(|| v.clone());
    v
}

static HARMONIC_POLY_MODP: OnceLock<Mutex<HashMap<(usize, u32, u64), Vec<Vec<u64>>>>> =
    OnceLock::new();

pub fn harmonic_poly_modp(
    n: usize,
    degree: u32,
    p: u64,
    compute: impl FnOnce() -> Vec<Vec<u64>>,
) -> Vec<Vec<u64>> {
    let table = HARMONIC_POLY_MODP.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = table.lock().unwrap().get(&(n, degree, p)) {
        return v.clone();
    }
    let v = compute();
    table
        .lock()
        .unwrap()
        .entry((n, degree, p))
        .or_insert_with(|| v.clone());
    v
}

static HARMONIC_SPACE: OnceLock<Mutex<HashMap<(usize, Bidegree), SubspaceBasis>>> =
    OnceLock::new();

pub fn harmonic_space(
    n: usize,
    d: Bidegree,
    compute: impl FnOnce() -> SubspaceBasis,
) -> SubspaceBasis {
    let table = HARMONIC_SPACE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = table.lock().unwrap().get(&(n, d)) {
        return v.clone();
    }
    let v = compute();
    table
        .lock()
        .unwrap()
        .entry((n, d))
        .or_insert_with(|| v.clone());
    v
}

static CELL_DIMS: OnceLock<Mutex<HashMap<(usize, Bidegree, u8), crate::harmonics::CellDims>>> =
    OnceLock::new();

pub fn cell_dims(
    n: usize,
    d: Bidegree,
    family: u8,
    compute: impl FnOnce() -> crate::harmonics::CellDims,
) -> crate::harmonics::CellDims {
    let table = CELL_DIMS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = table.lock().unwrap().get(&(n, d, family)) {
        return v.clone();
    }
    let v = compute();
    table
        .lock()
        .unwrap()
        .entry((n, d, family))
        .or_insert_with(|| v.clone());
    v
}

/// Seeds the cell-dimension memo (used by the CLI disk cache).
pub fn seed_cell_dims(n: usize, d: Bidegree, family: u8, dims: crate::harmonics::CellDims) {
    let table = CELL_DIMS.get_or_init(|| Mutex::new(HashMap::new()));
    table.lock().unwrap().entry((n, d, family)).or_insert(dims);
}
