//! Differential and contraction operators on superforms, plus the apolarity
//! inner product.
//!
//! The inner product is normalized so that `<x^a dx_S, x^b dx_T> =
//! delta_{a,b} delta_{S,T} * a!` (the apolarity/Bombieri pairing on the
//! polynomial factor, orthonormal `dx` words on the exterior factor). This is
//! the unique standard choice under which multiplication by a power sum is
//! adjoint to the coefficientwise derivative operator, and left wedging by an
//! exact invariant generator is adjoint to a contraction operator — which is
//! what makes the joint kernel below an orthogonal complement of the
//! invariant ideal.

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::superform::{Bidegree, Coeff, ExponentVector, SuperForm, SuperMonomial};

/// Tags for the operator family, used to request matrix kernels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OperatorTag {
    /// `D_l = sum_i (d/dx_i)^l`, coefficientwise; `l >= 1`.
    BigD(u32),
    /// `delta_l = sum_j (d/dx_j)^l iota_j`; `l >= 0`.
    Delta(u32),
    /// `d_j = sum_l (d/dx_l)^j dx_l ^ -`; `j >= 0`.
    LowerD(u32),
    /// Exterior derivative, equal to `LowerD(1)`.
    ExteriorD,
    /// Contraction by `dx_j`; `j` in `[1, n]`.
    Iota(usize),
    /// First-order partial `d/dx_i`.
    Partial(usize),
}

impl OperatorTag {
    /// Bidegree shift `(dl, dk)` of the operator.
    pub fn shift(&self) -> (i64, i64) {
        match self {
            OperatorTag::BigD(l) => (-(*l as i64), 0),
            OperatorTag::Delta(l) => (-(*l as i64), -1),
            OperatorTag::LowerD(j) => (-(*j as i64), 1),
            OperatorTag::ExteriorD => (-1, 1),
            OperatorTag::Iota(_) => (0, -1),
            OperatorTag::Partial(_) => (-1, 0),
        }
    }

    /// Whether the operator acts on the polynomial factor only (identically
    /// on every wedge word).
    pub fn is_coefficientwise(&self) -> bool {
        matches!(self, OperatorTag::BigD(_) | OperatorTag::Partial(_))
    }

    pub fn apply(&self, f: &SuperForm) -> SuperForm {
        match *self {
            OperatorTag::BigD(l) => op_big_d(l, f),
            OperatorTag::Delta(l) => op_delta(l, f),
            OperatorTag::LowerD(j) => op_d(j, f),
            OperatorTag::ExteriorD => exterior_derivative(f),
            OperatorTag::Iota(j) => iota(j, f),
            OperatorTag::Partial(i) => partial(f, i, 1),
        }
    }

    /// Target bidegree when applied to the `d` component, if nonnegative.
    pub fn target(&self, n: usize, d: Bidegree) -> Option<Bidegree> {
        let (dl, dk) = self.shift();
        let l = d.poly as i64 + dl;
        let k = d.form as i64 + dk;
        if l < 0 || k < 0 || k > n as i64 {
            None
        } else {
            Some(Bidegree::new(l as u32, k as u32))
        }
    }
}

impl std::fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OperatorTag::BigD(l) => write!(f, "D_{l}"),
            OperatorTag::Delta(l) => write!(f, "delta_{l}"),
            OperatorTag::LowerD(j) => write!(f, "d_{j}"),
            OperatorTag::ExteriorD => write!(f, "d"),
            OperatorTag::Iota(j) => write!(f, "iota_{j}"),
            OperatorTag::Partial(i) => write!(f, "partial_{i}"),
        }
    }
}

/// Falling factorial `e (e-1) ... (e-j+1)` as a coefficient.
fn falling(e: u32, j: u32) -> Coeff {
    let mut acc = BigInt::one();
    for step in 0..j {
        acc *= BigInt::from(e - step);
    }
    Coeff::from_integer(acc)
}

/// `j`-th partial derivative in `x_i` applied to every coefficient; wedge
/// parts untouched. Order 0 is the identity.
pub fn partial(f: &SuperForm, i: usize, order: u32) -> SuperForm {
    assert!((1..=f.n()).contains(&i), "variable index out of range");
    if order == 0 {
        return f.clone();
    }
    let n = f.n();
    let mut out = SuperForm::zero(n);
    for (m, c) in f.terms() {
        let e = m.exps.get(i - 1);
        if e < order {
            continue;
        }
        let coeff = c * falling(e, order);
        let exps = m.exps.set(i - 1, e - order);
        out.add_term(SuperMonomial::new(exps, m.wedge), coeff);
    }
    out
}

/// `D_l = sum_i (d/dx_i)^l`, coefficientwise. Shifts `(r, s) -> (r-l, s)`.
pub fn op_big_d(l: u32, f: &SuperForm) -> SuperForm {
    assert!(l >= 1, "D_l needs l >= 1");
    let mut out = SuperForm::zero(f.n());
    for i in 1..=f.n() {
        out = out.add(&partial(f, i, l));
    }
    debug_assert_contract(OperatorTag::BigD(l), f, &out);
    out
}

/// Contraction by `dx_j`: a super-derivation of form degree -1 with
/// `iota_j . iota_j = 0`.
pub fn iota(j: usize, f: &SuperForm) -> SuperForm {
    assert!((1..=f.n()).contains(&j), "contraction index out of range");
    let mut out = SuperForm::zero(f.n());
    for (m, c) in f.terms() {
        if let Some((word, sign)) = m.wedge.remove(j) {
            let mut coeff = c.clone();
            if sign < 0 {
                coeff = -coeff;
            }
            out.add_term(SuperMonomial::new(m.exps.clone(), word), coeff);
        }
    }
    out
}

/// `delta_l = sum_j (d/dx_j)^l iota_j`. Shifts `(r, s) -> (r-l, s-1)`;
/// `delta_0` is pure contraction by the sum of the `dx_j`.
pub fn op_delta(l: u32, f: &SuperForm) -> SuperForm {
    let mut out = SuperForm::zero(f.n());
    for j in 1..=f.n() {
        out = out.add(&partial(&iota(j, f), j, l));
    }
    debug_assert_contract(OperatorTag::Delta(l), f, &out);
    out
}

/// `d_j = sum_l (d/dx_l)^j dx_l ^ -`. Shifts `(r, s) -> (r-j, s+1)`; `d_1`
/// restricted to 0-forms is the classical exterior derivative and `d_0` is
/// left multiplication by `dx_1 + ... + dx_n`.
pub fn op_d(j: u32, f: &SuperForm) -> SuperForm {
    let n = f.n();
    let mut out = SuperForm::zero(n);
    for (m, c) in f.terms() {
        for l in 1..=n {
            let e = m.exps.get(l - 1);
            if e < j {
                continue;
            }
            if let Some((word, sign)) = m.wedge.wedge_left(l) {
                let mut coeff = c * falling(e, j);
                if sign < 0 {
                    coeff = -coeff;
                }
                let exps = m.exps.set(l - 1, e - j);
                out.add_term(SuperMonomial::new(exps, word), coeff);
            }
        }
    }
    debug_assert_contract(OperatorTag::LowerD(j), f, &out);
    out
}

/// Exterior derivative `d(h dx_I) = (sum_i d_i h dx_i) ^ dx_I`; equals
/// [`op_d`] with `j = 1` and satisfies `d . d = 0`.
pub fn exterior_derivative(f: &SuperForm) -> SuperForm {
    op_d(1, f)
}

#[cfg(debug_assertions)]
fn debug_assert_contract(tag: OperatorTag, input: &SuperForm, output: &SuperForm) {
    let (dl, dk) = tag.shift();
    for (m, _) in output.terms() {
        let d = m.bidegree();
        let ok = input.terms().any(|(mi, _)| {
            let di = mi.bidegree();
            di.poly as i64 + dl == d.poly as i64 && di.form as i64 + dk == d.form as i64
        });
        assert!(ok, "{tag} violated its bidegree contract at {d}");
    }
}

#[cfg(not(debug_assertions))]
fn debug_assert_contract(_tag: OperatorTag, _input: &SuperForm, _output: &SuperForm) {}

fn factorial_big(e: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=e {
        acc *= BigInt::from(i);
    }
    acc
}

/// Apolarity weight `a! = prod_i a_i!` of a monomial.
pub fn apolarity_weight(m: &SuperMonomial) -> BigInt {
    let mut acc = BigInt::one();
    for &e in m.exps.as_slice() {
        acc *= factorial_big(e);
    }
    acc
}

/// Apolarity inner product: bilinear, symmetric, positive definite, with
/// `<x^a dx_S, x^b dx_T> = delta delta * a!`.
pub fn inner(a: &SuperForm, b: &SuperForm) -> Result<Coeff> {
    if a.n() != b.n() {
        return Err(Error::AmbientMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let mut acc = Coeff::zero();
    for (m, ca) in a.terms() {
        let cb = b.coeff(m);
        if !cb.is_zero() {
            acc += ca * cb * Coeff::from_integer(apolarity_weight(m));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superform::coeff_int;

    fn x(n: usize, i: usize) -> SuperForm {
        SuperForm::var(n, i)
    }

    fn dx(n: usize, i: usize) -> SuperForm {
        SuperForm::dvar(n, i)
    }

    #[test]
    fn partial_examples() {
        let n = 2;
        assert_eq!(
            partial(&x(n, 1).pow(2).mul(&dx(n, 2)), 1, 1),
            x(n, 1).mul(&dx(n, 2)).scale(&coeff_int(2))
        );
        assert_eq!(
            partial(&x(n, 2).pow(3), 2, 2),
            x(n, 2).scale(&coeff_int(6))
        );
        assert!(partial(&x(n, 2), 1, 1).is_zero());
        assert_eq!(partial(&x(n, 1), 1, 0), x(n, 1));
    }

    #[test]
    fn big_d_examples() {
        let n = 2;
        let p2 = x(n, 1).pow(2).add(&x(n, 2).pow(2));
        assert_eq!(
            op_big_d(1, &p2),
            x(n, 1).add(&x(n, 2)).scale(&coeff_int(2))
        );
        assert_eq!(op_big_d(2, &p2), SuperForm::one(n).scale(&coeff_int(4)));
        let delta = x(n, 1).sub(&x(n, 2));
        assert!(op_big_d(1, &delta).is_zero());
    }

    #[test]
    fn iota_examples() {
        let n = 3;
        let d12 = dx(n, 1).mul(&dx(n, 2));
        assert_eq!(iota(1, &d12), dx(n, 2));
        assert_eq!(iota(2, &d12), dx(n, 1).neg());
        assert!(iota(3, &d12).is_zero());
        assert!(iota(1, &iota(1, &d12)).is_zero());
    }

    #[test]
    fn iota_is_a_superderivation() {
        let n = 3;
        // iota_j(a^b) = iota_j(a)^b + (-1)^deg(a) a^iota_j(b)
        let a = dx(n, 1).mul(&x(n, 2)); // odd
        let b = dx(n, 2).mul(&dx(n, 3)).add(&x(n, 1).pow(2).mul(&dx(n, 2)).mul(&dx(n, 1)));
        for j in 1..=n {
            let lhs = iota(j, &a.mul(&b));
            let rhs = iota(j, &a).mul(&b).sub(&a.mul(&iota(j, &b)));
            assert_eq!(lhs, rhs, "iota_{j}");
        }
    }

    #[test]
    fn delta_examples() {
        let n = 2;
        let d12 = dx(n, 1).mul(&dx(n, 2));
        assert_eq!(op_delta(0, &d12), dx(n, 2).sub(&dx(n, 1)));
        assert_eq!(op_delta(1, &x(n, 1).mul(&dx(n, 1))), SuperForm::one(n));
        assert!(op_delta(1, &x(n, 2).mul(&dx(n, 1))).is_zero());
    }

    #[test]
    fn lower_d_examples() {
        let n = 2;
        assert_eq!(
            op_d(1, &x(n, 1).sub(&x(n, 2))),
            dx(n, 1).sub(&dx(n, 2))
        );
        // d_0 is left multiplication by u = dx1 + dx2
        let f = x(n, 1).pow(3).mul(&dx(n, 1));
        let u = dx(n, 1).add(&dx(n, 2));
        assert_eq!(op_d(0, &f), u.mul(&f));
        assert_eq!(
            op_d(2, &x(n, 1).pow(3)),
            x(n, 1).mul(&dx(n, 1)).scale(&coeff_int(6))
        );
    }

    #[test]
    fn exterior_derivative_examples() {
        let n = 2;
        let f = x(n, 1).mul(&x(n, 2)).mul(&dx(n, 1));
        assert_eq!(
            exterior_derivative(&f),
            x(n, 1).mul(&dx(n, 1)).mul(&dx(n, 2)).neg()
        );
        let g = x(n, 1).pow(3).mul(&x(n, 2)).add(&x(n, 2).pow(2).mul(&dx(n, 1)));
        assert!(exterior_derivative(&exterior_derivative(&g)).is_zero());
        assert_eq!(
            exterior_derivative(&x(n, 1).sub(&x(n, 2))),
            dx(n, 1).sub(&dx(n, 2))
        );
    }

    #[test]
    fn graded_leibniz() {
        let n = 3;
        let a = x(n, 1).pow(2).mul(&dx(n, 2)); // odd
        let b = x(n, 3).mul(&dx(n, 1)).add(&x(n, 2).pow(2).mul(&dx(n, 3)));
        let lhs = exterior_derivative(&a.mul(&b));
        let rhs = exterior_derivative(&a)
            .mul(&b)
            .sub(&a.mul(&exterior_derivative(&b)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inner_examples() {
        let n = 2;
        assert_eq!(
            inner(&x(n, 1).pow(2), &x(n, 1).pow(2)).unwrap(),
            coeff_int(2)
        );
        assert!(inner(&dx(n, 1), &dx(n, 2)).unwrap().is_zero());
        assert!(inner(&x(n, 1).mul(&dx(n, 1)), &x(n, 2).mul(&dx(n, 1)))
            .unwrap()
            .is_zero());
        assert!(inner(&dx(2, 1), &dx(3, 1)).is_err());
    }

    #[test]
    fn adjointness_on_small_components() {
        // <p_l mu, nu> = <mu, D_l nu> and <dp_l ^ mu, nu> = l <mu, delta_{l-1} nu>
        use crate::superform::monomial_basis;
        use crate::symfunc;
        for n in 2..=3usize {
            for l in 1..=3u32 {
                let p = symfunc::power_sum(n, l);
                let dp = exterior_derivative(&p);
                for k in 0..=n as u32 {
                    for deg in 0..=2u32 {
                        let src = monomial_basis(n, Bidegree::new(deg, k));
                        let tgt = monomial_basis(n, Bidegree::new(deg + l, k));
                        for ms in &src {
                            let fs = SuperForm::from_monomial(n, ms.clone(), num::One::one());
                            let pf = p.mul(&fs);
                            for mt in &tgt {
                                let ft =
                                    SuperForm::from_monomial(n, mt.clone(), num::One::one());
                                let lhs = inner(&pf, &ft).unwrap();
                                let rhs = inner(&fs, &op_big_d(l, &ft)).unwrap();
                                assert_eq!(lhs, rhs, "p_{l} adjoint failure");
                            }
                        }
                        // dp_l raises form degree by one and poly degree by l-1
                        if k + 1 <= n as u32 {
                            let tgt =
                                monomial_basis(n, Bidegree::new(deg + l - 1, k + 1));
                            for ms in &src {
                                let fs =
                                    SuperForm::from_monomial(n, ms.clone(), num::One::one());
                                let dpf = dp.mul(&fs);
                                for mt in &tgt {
                                    let ft =
                                        SuperForm::from_monomial(n, mt.clone(), num::One::one());
                                    let lhs = inner(&dpf, &ft).unwrap();
                                    let rhs = inner(&fs, &op_delta(l - 1, &ft)).unwrap()
                                        * coeff_int(l as i64);
                                    assert_eq!(lhs, rhs, "dp_{l} adjoint failure");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn operators_are_equivariant() {
        use crate::action::{act, Permutation};
        let n = 3;
        let f = x(n, 1).pow(2).mul(&dx(n, 2)).add(&x(n, 3).mul(&dx(n, 1)).mul(&dx(n, 3)));
        let perms = [
            Permutation::transposition(n, 1, 2),
            Permutation::transposition(n, 2, 3),
            Permutation::new(vec![2, 3, 1]).unwrap(),
        ];
        for s in &perms {
            for l in 1..=2 {
                assert_eq!(act(s, &op_big_d(l, &f)), op_big_d(l, &act(s, &f)));
                assert_eq!(act(s, &op_delta(l, &f)), op_delta(l, &act(s, &f)));
                assert_eq!(act(s, &op_d(l, &f)), op_d(l, &act(s, &f)));
            }
            assert_eq!(act(s, &op_delta(0, &f)), op_delta(0, &act(s, &f)));
            assert_eq!(act(s, &op_d(0, &f)), op_d(0, &act(s, &f)));
        }
    }
}
