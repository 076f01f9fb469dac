//! Numerical geometry of a weighted projective 4-space `P(1, a1, a2, a3, a4)`.
//!
//! Coordinates are indexed `0..=4` in ascending-weight order, so index 0 is
//! always the weight-one coordinate `x0` and index 4 carries the top weight.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::WeightsError;
use crate::rational::Rational;

/// Weights `(1, a1, a2, a3, a4)` of a well-formed ambient space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weights([i64; 5]);

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.abs()
}

pub(crate) fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    gcd(gcd(a, b), c)
}

pub fn hcf(a: i64, b: i64) -> i64 {
    gcd(a, b)
}

impl Weights {
    pub fn new(a: [i64; 5]) -> Result<Weights, WeightsError> {
        if a.iter().any(|&w| w <= 0) {
            return Err(WeightsError::NonPositive);
        }
        if a[0] != 1 {
            return Err(WeightsError::LeadingWeight(a[0]));
        }
        if a.windows(2).any(|p| p[0] > p[1]) {
            return Err(WeightsError::NotAscending);
        }
        let tail = [a[1], a[2], a[3], a[4]];
        for skip in 0..4 {
            let three: Vec<i64> = (0..4).filter(|&i| i != skip).map(|i| tail[i]).collect();
            if gcd3(three[0], three[1], three[2]) != 1 {
                return Err(WeightsError::NotWellFormed([three[0], three[1], three[2]]));
            }
        }
        Ok(Weights(a))
    }

    pub fn as_array(&self) -> [i64; 5] {
        self.0
    }

    /// Weight of coordinate `i`. Panics if `i > 4`.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn a1(&self) -> i64 {
        self.0[1]
    }
    pub fn a2(&self) -> i64 {
        self.0[2]
    }
    pub fn a3(&self) -> i64 {
        self.0[3]
    }
    pub fn a4(&self) -> i64 {
        self.0[4]
    }

    /// `a1 + a2 + a3 + a4`, the degree of an anticanonical hypersurface.
    pub fn anticanonical_degree(&self) -> i64 {
        self.0[1..].iter().sum()
    }

    /// `a1 a2 a3 a4`, panicking on overflow.
    pub fn top_product(&self) -> i64 {
        self.0[1..]
            .iter()
            .try_fold(1i64, |acc, &w| acc.checked_mul(w))
            .expect("weight product overflow")
    }
}

impl TryFrom<Vec<i64>> for Weights {
    type Error = WeightsError;

    fn try_from(v: Vec<i64>) -> Result<Weights, WeightsError> {
        let arr: [i64; 5] = v
            .as_slice()
            .try_into()
            .map_err(|_| WeightsError::Arity(v.len()))?;
        Weights::new(arr)
    }
}

impl From<Weights> for Vec<i64> {
    fn from(w: Weights) -> Vec<i64> {
        w.0.to_vec()
    }
}

impl fmt::Debug for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0;
        write!(f, "P({},{},{},{},{})", a[0], a[1], a[2], a[3], a[4])
    }
}

/// A curve cut out by three coordinate hyperplanes; it is the weighted
/// projective line on the two surviving coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StratumCurve {
    vanishing: [usize; 3],
    surviving: [usize; 2],
    surviving_weights: [i64; 2],
}

impl StratumCurve {
    /// Builds the stratum `{x_i = x_j = x_k = 0}`. Returns `None` unless the
    /// three indices are distinct and in `0..=4`.
    pub fn new(weights: &Weights, vanishing: [usize; 3]) -> Option<StratumCurve> {
        let mut v = vanishing;
        v.sort_unstable();
        if v[2] > 4 || v[0] == v[1] || v[1] == v[2] {
            return None;
        }
        let mut surviving = (0..5).filter(|i| !v.contains(i));
        let s = [surviving.next()?, surviving.next()?];
        Some(StratumCurve {
            vanishing: v,
            surviving: s,
            surviving_weights: [weights.get(s[0]), weights.get(s[1])],
        })
    }

    pub fn vanishing(&self) -> [usize; 3] {
        self.vanishing
    }

    pub fn surviving(&self) -> [usize; 2] {
        self.surviving
    }

    pub fn surviving_weights(&self) -> [i64; 2] {
        self.surviving_weights
    }
}

/// `A^3 = d / (a1 a2 a3 a4)`.
pub fn anticanonical_cube(d: i64, weights: &Weights) -> Rational {
    Rational::new(d, weights.top_product())
}

/// Degree `1/(w1 w2)` of a stratum curve with surviving weights `w1, w2`.
pub fn stratum_degree(curve: &StratumCurve) -> Rational {
    let [w1, w2] = curve.surviving_weights;
    Rational::new(1, w1.checked_mul(w2).expect("stratum weight overflow"))
}

/// Whether the coordinate point `P_i` lies on a general `X_d`: exactly when no
/// pure power of `x_i` has degree `d`.
pub fn coordinate_point_on_x(d: i64, weights: &Weights, i: usize) -> bool {
    d % weights.get(i) != 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: [i64; 5]) -> Weights {
        Weights::new(a).unwrap()
    }

    #[test]
    fn anticanonical_cube_examples() {
        assert_eq!(
            anticanonical_cube(13, &w([1, 1, 3, 4, 5])),
            Rational::new(13, 60)
        );
        assert_eq!(
            anticanonical_cube(20, &w([1, 2, 4, 5, 9])),
            Rational::new(1, 18)
        );
        assert_eq!(
            anticanonical_cube(4, &w([1, 1, 1, 1, 1])),
            Rational::integer(4)
        );
    }

    #[test]
    fn stratum_degree_examples() {
        let fam20 = w([1, 1, 3, 4, 5]);
        // {x0 = y = z = 0} keeps x1 and t.
        let c = StratumCurve::new(&fam20, [0, 2, 3]).unwrap();
        assert_eq!(c.surviving_weights(), [1, 5]);
        assert_eq!(stratum_degree(&c), Rational::new(1, 5));

        let line = StratumCurve::new(&w([1, 1, 1, 1, 1]), [2, 3, 4]).unwrap();
        assert_eq!(stratum_degree(&line), Rational::ONE);

        let c23 = StratumCurve::new(&w([1, 2, 3, 5, 7]), [0, 3, 4]).unwrap();
        assert_eq!(c23.surviving_weights(), [2, 3]);
        assert_eq!(
            stratum_degree(&c23),
            Rational::new(1, 2) * Rational::new(1, 3)
        );
    }

    #[test]
    fn stratum_rejects_bad_index_sets() {
        let a = w([1, 1, 1, 1, 1]);
        assert!(StratumCurve::new(&a, [0, 0, 1]).is_none());
        assert!(StratumCurve::new(&a, [0, 1, 5]).is_none());
        assert_eq!(
            StratumCurve::new(&a, [3, 0, 2]).unwrap().vanishing(),
            [0, 2, 3]
        );
    }

    #[test]
    fn coordinate_point_examples() {
        assert!(coordinate_point_on_x(13, &w([1, 1, 3, 4, 5]), 4));
        assert!(!coordinate_point_on_x(6, &w([1, 1, 1, 1, 3]), 4));
        assert!(!coordinate_point_on_x(8, &w([1, 1, 1, 2, 4]), 0));
    }

    #[test]
    fn weight_validation() {
        assert_eq!(
            Weights::new([2, 2, 3, 4, 5]),
            Err(WeightsError::LeadingWeight(2))
        );
        assert_eq!(
            Weights::new([1, 3, 2, 4, 5]),
            Err(WeightsError::NotAscending)
        );
        assert_eq!(
            Weights::new([1, 0, 2, 4, 5]),
            Err(WeightsError::NonPositive)
        );
        assert_eq!(
            Weights::new([1, 2, 4, 6, 7]),
            Err(WeightsError::NotWellFormed([2, 4, 6]))
        );
        assert!(Weights::new([1, 2, 2, 3, 5]).is_ok());
        assert_eq!(Weights::try_from(vec![1, 1]), Err(WeightsError::Arity(2)));
    }

    #[test]
    fn weights_serde_roundtrip() {
        let a = w([1, 4, 5, 6, 15]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[1,4,5,6,15]");
        assert_eq!(serde_json::from_str::<Weights>(&json).unwrap(), a);
        assert!(serde_json::from_str::<Weights>("[1,2,4,6,8]").is_err());
    }
}
