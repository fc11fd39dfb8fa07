//! Verification of the invariant subalgebra structure: the products of
//! symmetric generators and their exterior derivatives span the invariants
//! freely, degree by degree, and the counts match the closed bigraded series.

use num::One;
use rayon::prelude::*;

use crate::action::{all_permutations, project_isotypic, IsotypicMode};
use crate::error::Result;
use crate::linalg::{self, ResourceCaps};
use crate::operators::exterior_derivative;
use crate::report::Report;
use crate::superform::{component_dim, monomial_basis, Bidegree, SuperForm};
use crate::symfunc;

/// Which family of symmetric generators to use for the invariant ring and
/// the ideal it generates. Both give the same spans over `Q`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum GeneratorFamily {
    #[default]
    PowerSum,
    Elementary,
}

impl GeneratorFamily {
    pub fn generator(&self, n: usize, j: u32) -> SuperForm {
        match self {
            GeneratorFamily::PowerSum => symfunc::power_sum(n, j),
            GeneratorFamily::Elementary => symfunc::elementary(n, j),
        }
    }

    pub fn d_generator(&self, n: usize, j: u32) -> SuperForm {
        exterior_derivative(&self.generator(n, j))
    }

    pub fn name(&self) -> &'static str {
        match self {
            GeneratorFamily::PowerSum => "p",
            GeneratorFamily::Elementary => "e",
        }
    }

    pub(crate) fn code(&self) -> u8 {
        match self {
            GeneratorFamily::PowerSum => 0,
            GeneratorFamily::Elementary => 1,
        }
    }
}

/// All products `g_1^{a_1} ... g_n^{a_n} dg_{i_1} ^ ... ^ dg_{i_k}` landing
/// in bidegree `d` (`dg_j` has bidegree `(j-1, 1)`).
pub fn invariant_monomials(n: usize, d: Bidegree, family: GeneratorFamily) -> Vec<SuperForm> {
    let k = d.form;
    let mut out = Vec::new();
    if k as usize > n {
        return out;
    }
    // wedge subsets 1 <= i_1 < ... < i_k <= n contribute sum (i_r - 1)
    for bits in 0u32..(1 << n) {
        if bits.count_ones() != k {
            continue;
        }
        let wedge_degree: u32 = (0..n)
            .filter(|i| (bits >> i) & 1 == 1)
            .map(|i| i as u32)
            .sum();
        if wedge_degree > d.poly {
            continue;
        }
        let mut wedge_part = SuperForm::one(n);
        for i in 0..n {
            if (bits >> i) & 1 == 1 {
                wedge_part = wedge_part.mul(&family.d_generator(n, (i + 1) as u32));
            }
        }
        // exponent solutions of sum j a_j = remaining degree
        let remaining = d.poly - wedge_degree;
        let mut stack: Vec<(u32, u32, SuperForm)> = vec![(1, remaining, wedge_part)];
        while let Some((j, rest, acc)) = stack.pop() {
            if rest == 0 {
                out.push(acc);
                continue;
            }
            if j as usize > n {
                continue;
            }
            for a in 0..=(rest / j) {
                let mut f = acc.clone();
                for _ in 0..a {
                    f = f.mul(&family.generator(n, j));
                }
                stack.push((j + 1, rest - a * j, f));
            }
        }
    }
    out
}

/// Dimension of the invariant subspace of the `(l, k)` component, computed
/// as the rank of the image of the group-averaging projector.
pub fn invariant_dimension(n: usize, d: Bidegree) -> usize {
    let basis = monomial_basis(n, d);
    // one projection per orbit: orbit mates project to the same line
    let mut seen = std::collections::BTreeSet::new();
    let mut projected = Vec::new();
    let perms = all_permutations(n);
    for m in basis {
        if seen.contains(&m) {
            continue;
        }
        let mono = SuperForm::from_monomial(n, m.clone(), One::one());
        for s in &perms {
            let image = crate::action::act(s, &mono);
            let (mm, _) = image.terms().next().expect("monomial image");
            seen.insert(mm.clone());
        }
        let p = project_isotypic(&mono, IsotypicMode::Invariant);
        if !p.is_zero() {
            projected.push(p);
        }
    }
    linalg::span(n, d, &projected).expect("homogeneous projections").dim()
}

/// Degreewise freeness check: for every bidegree within the cutoff, the
/// generator products are independent, their count matches the closed
/// series, and both match the projector-computed invariant dimension.
pub fn verify_free_generation(
    n: usize,
    q_cutoff: u32,
    family: GeneratorFamily,
) -> Result<Report> {
    let mut report = Report::new("free-generation", n);
    let closed = symfunc::invariant_hilbert_closed(n, q_cutoff);
    let cells: Vec<(u32, u32)> = (0..=q_cutoff)
        .flat_map(|l| (0..=n as u32).map(move |k| (l, k)))
        .collect();
    let outcomes: Vec<((u32, u32), i64, usize, usize, usize)> = cells
        .par_iter()
        .map(|&(l, k)| {
            let d = Bidegree::new(l, k);
            let family_forms = invariant_monomials(n, d, family);
            let count = family_forms.len();
            let rank = linalg::span(n, d, &family_forms)
                .expect("invariant monomials are homogeneous")
                .dim();
            let proj_dim = invariant_dimension(n, d);
            ((l, k), closed.coeff(l, k), count, rank, proj_dim)
        })
        .collect();
    for ((l, k), closed_coeff, count, rank, proj_dim) in outcomes {
        let pass = closed_coeff == count as i64 && rank == count && proj_dim == count;
        report.push(
            (l, k),
            format!("{closed_coeff}"),
            format!("count {count}, rank {rank}, projector {proj_dim}"),
            pass,
        );
    }
    report.note(format!("generator family: {}/d{}", family.name(), family.name()));
    Ok(report)
}

/// Expands `dg_1 ^ ... ^ dg_n` and checks it is `sign * n! * Delta * dx_1 ^
/// ... ^ dx_n` for some sign, which is reported rather than asserted.
pub fn jacobian_identity_check(n: usize) -> Result<Report> {
    let mut report = Report::new("jacobian-identity", n);
    let mut product = SuperForm::one(n);
    for j in 1..=n as u32 {
        product = product.mul(&GeneratorFamily::PowerSum.d_generator(n, j));
    }
    let mut top = crate::harmonics::vandermonde(n);
    for i in 1..=n {
        top = top.mul(&SuperForm::dvar(n, i));
    }
    let factorial: i64 = (1..=n as i64).product();
    let expected = top.scale(&crate::superform::coeff_int(factorial));
    let (pass, sign) = if product == expected {
        (true, 1i64)
    } else if product == expected.neg() {
        (true, -1i64)
    } else {
        (false, 0)
    };
    let c2 = (n * (n - 1) / 2) as u32;
    report.push(
        (c2, n as u32),
        format!("+/- {factorial} * Delta * dx(1..{n})"),
        if pass {
            format!("matched with sign {sign:+}")
        } else {
            "mismatch".to_string()
        },
        pass,
    );
    report.note(format!("computed sign: {sign:+}"));
    Ok(report)
}

/// Reference count for a free-generation cell, used by tests.
pub fn expected_cell_count(n: usize, d: Bidegree) -> i64 {
    symfunc::invariant_hilbert_closed(n, d.poly).coeff(d.poly, d.form)
}

/// Guard helper shared with the CLI: free generation at the default window.
pub fn default_cutoff(n: usize) -> u32 {
    (n * (n - 1) / 2 + n) as u32
}

pub fn caps_for_tests() -> ResourceCaps {
    ResourceCaps::default()
}
