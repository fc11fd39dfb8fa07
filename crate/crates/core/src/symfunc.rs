//! Symmetric polynomials as 0-forms, the invariant 1-form `u`, and the
//! closed-form bigraded series they generate.

use num::One;

use crate::operators::exterior_derivative;
use crate::series::BigradedSeries;
use crate::superform::{Coeff, ExponentVector, SuperForm, SuperMonomial, WedgeWord};

/// Power sum `p_j = x_1^j + ... + x_n^j`.
pub fn power_sum(n: usize, j: u32) -> SuperForm {
    assert!(j >= 1);
    let mut f = SuperForm::zero(n);
    for i in 0..n {
        let exps = ExponentVector::zero(n).set(i, j);
        f = f.add(&SuperForm::from_monomial(
            n,
            SuperMonomial::new(exps, WedgeWord::EMPTY),
            Coeff::one(),
        ));
    }
    f
}

/// Elementary symmetric polynomial `e_k` in `x_1..x_n`.
pub fn elementary(n: usize, k: u32) -> SuperForm {
    assert!(k >= 1 && (k as usize) <= n);
    let mut f = SuperForm::zero(n);
    for bits in 0u32..(1 << n) {
        if bits.count_ones() != k {
            continue;
        }
        let mut exps = vec![0u32; n];
        for (i, e) in exps.iter_mut().enumerate() {
            if (bits >> i) & 1 == 1 {
                *e = 1;
            }
        }
        f = f.add(&SuperForm::from_monomial(
            n,
            SuperMonomial::new(ExponentVector::new(exps), WedgeWord::EMPTY),
            Coeff::one(),
        ));
    }
    f
}

/// Complete homogeneous polynomial of degree `k` in the window variables
/// (1-based indices into `x_1..x_n`).
pub fn complete_h_window(n: usize, k: u32, window: &[usize]) -> SuperForm {
    assert!(window.iter().all(|&i| (1..=n).contains(&i)));
    let mut f = SuperForm::zero(n);
    // all multisets of size k over the window
    fn rec(
        f: &mut SuperForm,
        n: usize,
        window: &[usize],
        pos: usize,
        rest: u32,
        exps: &mut Vec<u32>,
    ) {
        if pos + 1 == window.len() {
            let mut full = vec![0u32; n];
            for (w, e) in window.iter().zip(exps.iter()) {
                full[w - 1] = *e;
            }
            full[window[pos] - 1] = rest;
            *f = f.add(&SuperForm::from_monomial(
                n,
                SuperMonomial::new(ExponentVector::new(full), WedgeWord::EMPTY),
                Coeff::one(),
            ));
            return;
        }
        for e in 0..=rest {
            exps.push(e);
            rec(f, n, window, pos + 1, rest - e, exps);
            exps.pop();
        }
    }
    if window.is_empty() {
        return if k == 0 { SuperForm::one(n) } else { f };
    }
    rec(&mut f, n, window, 0, k, &mut Vec::new());
    f
}

/// Complete homogeneous polynomial `h_k` in all of `x_1..x_n`.
pub fn complete_h(n: usize, k: u32) -> SuperForm {
    let window: Vec<usize> = (1..=n).collect();
    complete_h_window(n, k, &window)
}

/// The invariant 1-form `u = dx_1 + ... + dx_n = d p_1`.
pub fn u_form(n: usize) -> SuperForm {
    let mut f = SuperForm::zero(n);
    for i in 1..=n {
        f = f.add(&SuperForm::dvar(n, i));
    }
    f
}

pub fn d_power_sum(n: usize, j: u32) -> SuperForm {
    exterior_derivative(&power_sum(n, j))
}

pub fn d_elementary(n: usize, k: u32) -> SuperForm {
    exterior_derivative(&elementary(n, k))
}

/// Truncated expansion of `prod_{j=1}^{n} (1 + q^{j-1} t) / (1 - q^j)`: the
/// bigraded Hilbert series of the invariant subalgebra.
pub fn invariant_hilbert_closed(n: usize, q_cutoff: u32) -> BigradedSeries {
    let mut s = BigradedSeries::one().truncate(q_cutoff);
    for j in 1..=n as u32 {
        let factor = BigradedSeries::one().add(&BigradedSeries::monomial(j - 1, 1, 1));
        s = s.mul(&factor).mul_geometric(j, q_cutoff);
    }
    s
}

/// Exact polynomial `prod_{j=1}^{n-1} (q^j + t)`: the bigraded Hilbert series
/// of the harmonic alternants, with `2^{n-1}` terms.
pub fn alternant_hilbert_closed(n: usize) -> BigradedSeries {
    let mut s = BigradedSeries::one();
    for j in 1..n as u32 {
        let factor = BigradedSeries::monomial(j, 0, 1).add(&BigradedSeries::monomial(0, 1, 1));
        s = s.mul(&factor);
    }
    s
}

/// `e_k(q, q^2, ..., q^{n-1})` as a `q`-only series: the generating function
/// of the `k`-th hook multiplicities in the coinvariant algebra.
pub fn e_eval_geometric(n: usize, k: u32) -> BigradedSeries {
    assert!((k as usize) < n.max(1), "e_k window is {{1, ..., n-1}}");
    let mut s = BigradedSeries::zero();
    // subsets of {1, ..., n-1} of size k, adding q^{sum}
    let m = n - 1;
    for bits in 0u32..(1 << m) {
        if bits.count_ones() != k {
            continue;
        }
        let mut total = 0u32;
        for j in 0..m {
            if (bits >> j) & 1 == 1 {
                total += (j + 1) as u32;
            }
        }
        s.add_coeff(total, 0, 1);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::is_invariant;
    use crate::linalg;
    use crate::operators::partial;
    use crate::superform::{coeff_int, Bidegree};

    fn x(n: usize, i: usize) -> SuperForm {
        SuperForm::var(n, i)
    }

    #[test]
    fn generators_match_known_expansions() {
        let p2 = power_sum(2, 2);
        assert_eq!(p2, x(2, 1).pow(2).add(&x(2, 2).pow(2)));
        let e2 = elementary(3, 2);
        let expect = x(3, 1)
            .mul(&x(3, 2))
            .add(&x(3, 1).mul(&x(3, 3)))
            .add(&x(3, 2).mul(&x(3, 3)));
        assert_eq!(e2, expect);
        let h2 = complete_h(2, 2);
        let expect = x(2, 1)
            .pow(2)
            .add(&x(2, 1).mul(&x(2, 2)))
            .add(&x(2, 2).pow(2));
        assert_eq!(h2, expect);
        for n in 1..=4 {
            for j in 1..=3 {
                assert!(is_invariant(&power_sum(n, j)));
            }
            for k in 1..=n as u32 {
                assert!(is_invariant(&elementary(n, k)));
            }
            for k in 0..=3 {
                assert!(is_invariant(&complete_h(n, k)));
            }
        }
    }

    #[test]
    fn u_form_properties() {
        let u = u_form(2);
        assert_eq!(u, SuperForm::dvar(2, 1).add(&SuperForm::dvar(2, 2)));
        assert!(u.mul(&u).is_zero());
        assert!(is_invariant(&u));
        assert_eq!(u, d_power_sum(2, 1));
    }

    #[test]
    fn invariant_series_examples() {
        let s = invariant_hilbert_closed(2, 4);
        assert_eq!(s.coeff(0, 0), 1);
        assert_eq!(s.coeff(1, 0), 1);
        assert_eq!(s.coeff(0, 1), 1);
        assert_eq!(s.coeff(1, 1), 2);
        assert!(s.t_degree().unwrap() <= 2);

        // one variable: 1/(1-q) * (1+t)
        let s1 = invariant_hilbert_closed(1, 5);
        for q in 0..=5 {
            assert_eq!(s1.coeff(q, 0), 1);
            assert_eq!(s1.coeff(q, 1), 1);
        }
        // t-degree never exceeds n
        for n in 1..=4usize {
            let s = invariant_hilbert_closed(n, 6);
            assert!(s.t_degree().unwrap() as usize <= n);
        }
    }

    #[test]
    fn alternant_series_examples() {
        assert_eq!(alternant_hilbert_closed(3).render(), "q^3 + q^2 t + q t + t^2");
        assert_eq!(alternant_hilbert_closed(2).render(), "q + t");
        assert_eq!(alternant_hilbert_closed(1).render(), "1");
        for n in 1..=6usize {
            let total: i64 = alternant_hilbert_closed(n).terms().map(|(_, c)| c).sum();
            assert_eq!(total, 1 << (n - 1));
        }
    }

    #[test]
    fn e_eval_examples() {
        assert_eq!(e_eval_geometric(3, 1).render(), "q + q^2");
        assert_eq!(e_eval_geometric(3, 0).render(), "1");
        assert_eq!(e_eval_geometric(3, 2).render(), "q^3");
        assert_eq!(e_eval_geometric(5, 0).render(), "1");
    }

    #[test]
    fn h_derivative_sum_identity() {
        // sum_i d_i h_k = (k + n - 1) h_{k-1}
        for n in 1..=4usize {
            for k in 1..=5u32 {
                let h = complete_h(n, k);
                let mut sum = SuperForm::zero(n);
                for i in 1..=n {
                    sum = sum.add(&partial(&h, i, 1));
                }
                let rhs = complete_h(n, k - 1).scale(&coeff_int((k as i64) + (n as i64) - 1));
                assert_eq!(sum, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn h_window_recursion() {
        // h_k(x) = x_i h_{k-1}(x) + h_k(x with x_i removed)
        for n in 2..=4usize {
            for k in 1..=4u32 {
                for i in 1..=n {
                    let lhs = complete_h(n, k);
                    let without: Vec<usize> = (1..=n).filter(|&v| v != i).collect();
                    let rhs = x(n, i)
                        .mul(&complete_h(n, k - 1))
                        .add(&complete_h_window(n, k, &without));
                    assert_eq!(lhs, rhs, "n={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn p_and_e_generate_the_same_invariant_spans() {
        // per polynomial degree <= 4: spans of degree-d products of p's and
        // of e's agree, checked by mutual membership
        for n in 2..=4usize {
            for d in 1..=4u32 {
                let p_prods = degree_products(n, d, &|n, j| power_sum(n, j));
                let e_prods = degree_products(n, d, &|n, j| elementary(n, j));
                let dd = Bidegree::new(d, 0);
                let p_span = linalg::span(n, dd, &p_prods).unwrap();
                let e_span = linalg::span(n, dd, &e_prods).unwrap();
                assert_eq!(p_span.dim(), e_span.dim());
                for f in &e_prods {
                    assert!(p_span.contains(f).unwrap());
                }
                for f in &p_prods {
                    assert!(e_span.contains(f).unwrap());
                }
            }
        }
    }

    fn degree_products(
        n: usize,
        d: u32,
        gen: &dyn Fn(usize, u32) -> SuperForm,
    ) -> Vec<SuperForm> {
        // products g_{j1} ... g_{jm} with j1 <= ... <= jm, sum = d, j <= n
        fn rec(
            out: &mut Vec<SuperForm>,
            n: usize,
            rest: u32,
            min_j: u32,
            acc: &SuperForm,
            gen: &dyn Fn(usize, u32) -> SuperForm,
        ) {
            if rest == 0 {
                out.push(acc.clone());
                return;
            }
            for j in min_j..=rest.min(n as u32) {
                rec(out, n, rest - j, j, &acc.mul(&gen(n, j)), gen);
            }
        }
        let mut out = Vec::new();
        rec(&mut out, n, d, 1, &SuperForm::one(n), gen);
        out
    }
}
