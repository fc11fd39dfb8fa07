//! Integer-coefficient polynomials in the formal variables `q` and `t`, with
//! an optional hard truncation bound on the `q`-power. All arithmetic
//! respects the truncation, so geometric factors like `1/(1-q^j)` stay
//! finitely supported.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Bigraded Hilbert series / graded character container.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigradedSeries {
    coeffs: BTreeMap<(u32, u32), i64>,
    q_cutoff: Option<u32>,
}

/// One series term in the JSON fixture format.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub q: u32,
    pub t: u32,
    pub c: i64,
}

impl BigradedSeries {
    pub fn zero() -> Self {
        BigradedSeries {
            coeffs: BTreeMap::new(),
            q_cutoff: None,
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(q: u32, t: u32, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert((q, t), c);
        }
        BigradedSeries {
            coeffs,
            q_cutoff: None,
        }
    }

    pub fn q_cutoff(&self) -> Option<u32> {
        self.q_cutoff
    }

    /// Returns the series truncated to `q`-powers `<= cutoff`; the cutoff is
    /// sticky through subsequent arithmetic.
    pub fn truncate(&self, cutoff: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|((q, _), _)| *q <= cutoff)
            .map(|(k, v)| (*k, *v))
            .collect();
        BigradedSeries {
            coeffs,
            q_cutoff: Some(match self.q_cutoff {
                Some(c) => c.min(cutoff),
                None => cutoff,
            }),
        }
    }

    pub fn coeff(&self, q: u32, t: u32) -> i64 {
        self.coeffs.get(&(q, t)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.coeffs.iter().map(|(k, v)| (*k, *v))
    }

    pub fn set(&mut self, q: u32, t: u32, c: i64) {
        if let Some(cut) = self.q_cutoff {
            if q > cut {
                return;
            }
        }
        if c == 0 {
            self.coeffs.remove(&(q, t));
        } else {
            self.coeffs.insert((q, t), c);
        }
    }

    pub fn add_coeff(&mut self, q: u32, t: u32, c: i64) {
        self.set(q, t, self.coeff(q, t) + c);
    }

    fn merged_cutoff(&self, other: &Self) -> Option<u32> {
        match (self.q_cutoff, other.q_cutoff) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let cutoff = self.merged_cutoff(other);
        let mut out = BigradedSeries {
            coeffs: BTreeMap::new(),
            q_cutoff: cutoff,
        };
        for ((q, t), c) in self.terms().chain(other.terms()) {
            out.add_coeff(q, t, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return BigradedSeries {
                coeffs: BTreeMap::new(),
                q_cutoff: self.q_cutoff,
            };
        }
        BigradedSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
            q_cutoff: self.q_cutoff,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cutoff = self.merged_cutoff(other);
        let mut out = BigradedSeries {
            coeffs: BTreeMap::new(),
            q_cutoff: cutoff,
        };
        for ((qa, ta), ca) in self.terms() {
            for ((qb, tb), cb) in other.terms() {
                let q = qa + qb;
                if let Some(cut) = cutoff {
                    if q > cut {
                        continue;
                    }
                }
                out.add_coeff(q, ta + tb, ca * cb);
            }
        }
        out
    }

    /// Multiplies by the truncated geometric series `1/(1 - q^j)`. Requires a
    /// cutoff (either already present or passed explicitly).
    pub fn mul_geometric(&self, j: u32, cutoff: u32) -> Self {
        assert!(j >= 1);
        let mut geo = BigradedSeries::zero().truncate(cutoff);
        let mut power = 0u32;
        while power <= cutoff {
            geo.add_coeff(power, 0, 1);
            power += j;
        }
        self.truncate(cutoff).mul(&geo)
    }

    /// Maximal `t`-power with a nonzero coefficient.
    pub fn t_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(_, t)| t).max()
    }

    /// Maximal `q`-power with a nonzero coefficient.
    pub fn q_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(q, _)| q).max()
    }

    /// First differing `(q, t)` cell between two series (scanning in `(t, q)`
    /// order), for diagnostics.
    pub fn first_diff(&self, other: &Self) -> Option<((u32, u32), i64, i64)> {
        let mut keys: Vec<(u32, u32)> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        keys.sort_by_key(|&(q, t)| (t, q));
        keys.dedup();
        for (q, t) in keys {
            let a = self.coeff(q, t);
            let b = other.coeff(q, t);
            if a != b {
                return Some(((q, t), a, b));
            }
        }
        None
    }

    /// Terms in the JSON fixture order: sorted by `(t, q)`.
    pub fn to_terms(&self) -> Vec<SeriesTerm> {
        let mut terms: Vec<SeriesTerm> = self
            .coeffs
            .iter()
            .map(|(&(q, t), &c)| SeriesTerm { q, t, c })
            .collect();
        terms.sort_by_key(|term| (term.t, term.q));
        terms
    }

    pub fn from_terms(terms: &[SeriesTerm]) -> Self {
        let mut out = BigradedSeries::zero();
        for term in terms {
            out.add_coeff(term.q, term.t, term.c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_terms()).expect("series serialization")
    }

    /// Human-readable rendering: terms sorted by `(t, q descending)`, e.g.
    /// `q^3 + q^2 t + q t + t^2`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<(u32, u32)> = self.coeffs.keys().copied().collect();
        keys.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
        let mut pieces = Vec::new();
        for (q, t) in keys {
            let c = self.coeffs[&(q, t)];
            let mut factors: Vec<String> = Vec::new();
            if c != 1 || (q == 0 && t == 0) {
                factors.push(c.to_string());
            }
            match q {
                0 => {}
                1 => factors.push("q".into()),
                _ => factors.push(format!("q^{q}")),
            }
            match t {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{t}")),
            }
            pieces.push(factors.join(" "));
        }
        pieces.join(" + ")
    }
}

impl std::fmt::Display for BigradedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_respects_cutoff() {
        let a = BigradedSeries::monomial(1, 0, 1).truncate(3);
        let b = BigradedSeries::monomial(3, 0, 1);
        assert_eq!(a.mul(&b).coeff(4, 0), 0);
        let geo = BigradedSeries::one().mul_geometric(1, 4);
        assert_eq!(geo.coeff(4, 0), 1);
        assert_eq!(geo.coeff(5, 0), 0);
    }

    #[test]
    fn render_matches_expected_order() {
        let mut s = BigradedSeries::zero();
        s.add_coeff(3, 0, 1);
        s.add_coeff(2, 1, 1);
        s.add_coeff(1, 1, 1);
        s.add_coeff(0, 2, 1);
        assert_eq!(s.render(), "q^3 + q^2 t + q t + t^2");
        let mut v = BigradedSeries::zero();
        v.add_coeff(1, 1, 2);
        v.add_coeff(0, 0, 1);
        assert_eq!(v.render(), "1 + 2 q t");
    }

    #[test]
    fn diff_reports_first_cell() {
        let a = BigradedSeries::monomial(1, 0, 1);
        let b = BigradedSeries::monomial(1, 0, 2);
        assert_eq!(a.first_diff(&b), Some(((1, 0), 1, 2)));
        assert_eq!(a.first_diff(&a), None);
    }

    #[test]
    fn json_terms_sorted_by_t_then_q() {
        let mut s = BigradedSeries::zero();
        s.add_coeff(2, 0, 1);
        s.add_coeff(0, 1, 3);
        s.add_coeff(1, 0, 2);
        let terms = s.to_terms();
        assert_eq!(
            terms,
            vec![
                SeriesTerm { q: 1, t: 0, c: 2 },
                SeriesTerm { q: 2, t: 0, c: 1 },
                SeriesTerm { q: 0, t: 1, c: 3 },
            ]
        );
        assert_eq!(BigradedSeries::from_terms(&terms), s);
    }
}
