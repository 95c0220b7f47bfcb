//! Exact slope arithmetic on the circle of slopes, Farey tessellation
//! predicates, and negative continued fraction expansions.
//!
//! Slopes are reduced rationals together with a single point at infinity,
//! i.e. the vertex set of the Farey tessellation.  All arithmetic is exact
//! integer arithmetic; there is no floating point anywhere in this crate.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A reduced rational slope `num/den`, or `∞` stored as `1/0`.
///
/// Invariants: `gcd(|num|, den) == 1`, the sign lives in `num`, and
/// `den == 0` only for the single value `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Bezout coefficients `(x, y)` with `x*a + y*b == gcd(a, b)`.
fn bezout(a: i64, b: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-x0, -y0)
    } else {
        (x0, y0)
    }
}

impl Slope {
    /// The point at infinity, `1/0`.
    pub const INFINITY: Slope = Slope { num: 1, den: 0 };

    /// Builds the reduced representative of `num/den`.
    ///
    /// Any `a/0` with `a != 0` normalizes to `∞`; `0/0` is rejected.
    pub fn new(num: i64, den: i64) -> Result<Slope> {
        if num == 0 && den == 0 {
            return Err(Error::ZeroSlope);
        }
        if den == 0 {
            return Ok(Slope::INFINITY);
        }
        let g = gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Slope { num, den })
    }

    pub fn integer(n: i64) -> Slope {
        Slope { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    /// Strict order on finite slopes by rational value.
    fn lt(self, other: Slope) -> bool {
        debug_assert!(!self.is_infinite() && !other.is_infinite());
        self.num * other.den < other.num * self.den
    }

    /// Whether `self` lies strictly inside the counterclockwise interval
    /// from `start` to `end` on the circle of slopes.
    ///
    /// Counterclockwise runs `∞ → positive slopes → 0 → negative slopes → ∞`:
    /// finite slopes decrease along it, wrapping through `∞` between the
    /// negative and positive ends.
    pub fn is_ccw_between(self, start: Slope, end: Slope) -> bool {
        if self == start || self == end || start == end {
            return false;
        }
        match (start.is_infinite(), end.is_infinite()) {
            (true, true) => false,
            // everything below the start, not wrapping
            (false, true) => !self.is_infinite() && self.lt(start),
            // everything above the end
            (true, false) => !self.is_infinite() && end.lt(self),
            (false, false) => {
                if end.lt(start) {
                    !self.is_infinite() && end.lt(self) && self.lt(start)
                } else {
                    self.is_infinite() || self.lt(start) || end.lt(self)
                }
            }
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Slope::INFINITY);
        }
        let bad = || Error::BadSlope(s.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let num = n.trim().parse::<i64>().map_err(|_| bad())?;
                let den = d.trim().parse::<i64>().map_err(|_| bad())?;
                Slope::new(num, den)
            }
            None => {
                let num = t.parse::<i64>().map_err(|_| bad())?;
                Ok(Slope::integer(num))
            }
        }
    }
}

/// Determinant of the shortest integer vectors of two slopes:
/// `a.num * b.den - a.den * b.num`.
pub fn farey_det(a: Slope, b: Slope) -> i64 {
    a.num * b.den - a.den * b.num
}

/// Two slopes span an edge of the Farey tessellation exactly when their
/// shortest integer vectors form a basis of the integer lattice.
pub fn is_farey_edge(a: Slope, b: Slope) -> bool {
    farey_det(a, b).abs() == 1
}

/// Negative continued fraction `(r_0, ..., r_k)` with every `r_i <= -2`,
/// expanding a rational `-p/q < -1` as `r_0 - 1/(r_1 - 1/(... - 1/r_k))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    coeffs: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(coeffs: Vec<i64>) -> Result<ContinuedFraction> {
        if coeffs.is_empty() {
            return Err(Error::EmptyContinuedFraction);
        }
        if let Some(&bad) = coeffs.iter().find(|&&r| r > -2) {
            return Err(Error::BadCoefficient(bad));
        }
        Ok(ContinuedFraction { coeffs })
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exact evaluation back to a slope; inverse of [`cf_expand`].
    pub fn to_slope(&self) -> Slope {
        eval_coefficients(&self.coeffs)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn eval_coefficients(coeffs: &[i64]) -> Slope {
    let mut num = *coeffs.last().expect("nonempty");
    let mut den = 1i64;
    for &r in coeffs.iter().rev().skip(1) {
        // r - 1/(num/den) = (r*num - den)/num
        (num, den) = (r * num - den, num);
    }
    Slope::new(num, den).expect("continued fraction evaluates to a valid slope")
}

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(a > 0 && b > 0);
    (a + b - 1) / b
}

/// Expands `-p/q` (coprime, `p > q >= 1`) as a negative continued fraction
/// with all coefficients `<= -2`.
///
/// The expansion is unique.  The terminal slope `-1` (that is `p == q == 1`)
/// has no such expansion and is rejected.
pub fn cf_expand(p: i64, q: i64) -> Result<ContinuedFraction> {
    if p <= 0 {
        return Err(Error::NotPositive(p));
    }
    if q <= 0 {
        return Err(Error::NotPositive(q));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    if p <= q {
        return Err(Error::NotExpandable { p, q });
    }
    let (mut p, mut q) = (p, q);
    let mut coeffs = Vec::new();
    loop {
        let c = div_ceil(p, q);
        coeffs.push(-c);
        let r = c * q - p;
        if r == 0 {
            break;
        }
        (p, q) = (q, r);
    }
    Ok(ContinuedFraction { coeffs })
}

/// Exact evaluation of a negative continued fraction; see
/// [`ContinuedFraction::to_slope`].
pub fn cf_to_slope(cf: &ContinuedFraction) -> Slope {
    cf.to_slope()
}

/// The peeling path from `-p/q` down to `-1`: the shortest sequence of
/// slopes in which each step moves to the Farey neighbor given by
/// incrementing the final continued fraction coefficient, collapsing a
/// trailing `-1` into the previous coefficient.
pub fn peel_path(p: i64, q: i64) -> Result<Vec<Slope>> {
    if p == 1 && q == 1 {
        return Ok(vec![Slope::integer(-1)]);
    }
    let cf = cf_expand(p, q)?;
    let mut coeffs = cf.coeffs;
    let mut path = vec![eval_coefficients(&coeffs)];
    while coeffs != [-1] {
        *coeffs.last_mut().unwrap() += 1;
        while coeffs.len() > 1 && *coeffs.last().unwrap() == -1 {
            coeffs.pop();
            *coeffs.last_mut().unwrap() += 1;
        }
        path.push(eval_coefficients(&coeffs));
    }
    Ok(path)
}

/// The slope produced by attaching a bypass along a curve of slope
/// `attach` to a torus whose two dividing curves have slope `s`.
///
/// Returns the unique point of the open counterclockwise interval
/// `(attach, s)` that is closest to `attach` and spans a Farey edge with
/// `s`.  Computed by an integral linear map sending `s` to `∞`, where the
/// Farey neighbors are exactly the integers and the closest one is the
/// greatest integer counterclockwise of the image of `attach`.
pub fn bypass_slope(s: Slope, attach: Slope) -> Result<Slope> {
    if s == attach {
        return Err(Error::EqualSlopes);
    }
    let (p, q) = (s.num, s.den);
    // rows (a b; c d) with det = a*p + b*q = 1 send (p, q) to (1, 0)
    let (a, b) = bezout(p, q);
    let (c, d) = (-q, p);
    let tn = a * attach.num + b * attach.den;
    let td = c * attach.num + d * attach.den;
    debug_assert!(td != 0, "distinct slopes stay distinct under the map");
    let (tn, td) = if td < 0 { (-tn, -td) } else { (tn, td) };
    // greatest integer strictly below tn/td
    let m = if tn.rem_euclid(td) == 0 {
        tn / td - 1
    } else {
        tn.div_euclid(td)
    };
    // pull (m, 1) back through the inverse (d -b; -c a)
    let out = Slope::new(d * m - b, a - c * m)?;
    debug_assert!(is_farey_edge(out, s));
    debug_assert!(out.is_ccw_between(attach, s));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(num: i64, den: i64) -> Slope {
        Slope::new(num, den).unwrap()
    }

    #[test]
    fn slope_normalization() {
        assert_eq!(s(-28, 10), s(-14, 5));
        assert_eq!(s(-28, 10).num(), -14);
        assert_eq!(s(3, 0), Slope::INFINITY);
        assert_eq!(s(-7, 0), Slope::INFINITY);
        assert_eq!(s(5, -2), s(-5, 2));
        assert_eq!(s(5, -2).den(), 2);
        assert_eq!(Slope::new(0, 0), Err(Error::ZeroSlope));
    }

    #[test]
    fn slope_parse_and_display() {
        assert_eq!("-14/5".parse::<Slope>().unwrap(), s(-14, 5));
        assert_eq!("inf".parse::<Slope>().unwrap(), Slope::INFINITY);
        assert_eq!("-2".parse::<Slope>().unwrap(), Slope::integer(-2));
        assert_eq!("6/-4".parse::<Slope>().unwrap(), s(-3, 2));
        assert!("0/0".parse::<Slope>().is_err());
        assert!("x".parse::<Slope>().is_err());
        assert_eq!(s(-11, 4).to_string(), "-11/4");
        assert_eq!(Slope::INFINITY.to_string(), "inf");
        assert_eq!(Slope::integer(-2).to_string(), "-2");
    }

    #[test]
    fn det_examples() {
        assert_eq!(farey_det(s(0, 1), Slope::INFINITY), -1);
        assert_eq!(farey_det(s(-14, 5), s(-11, 4)), -1);
        assert_eq!(farey_det(s(-14, 5), s(-8, 3)), -2);
    }

    #[test]
    fn edge_examples() {
        assert!(is_farey_edge(s(0, 1), Slope::INFINITY));
        assert!(is_farey_edge(s(-14, 5), s(-11, 4)));
        assert!(!is_farey_edge(s(-14, 5), s(-8, 3)));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(cf_expand(14, 5).unwrap().coefficients(), &[-3, -5]);
        assert_eq!(cf_expand(11, 4).unwrap().coefficients(), &[-3, -4]);
        assert_eq!(cf_expand(2, 1).unwrap().coefficients(), &[-2]);
    }

    #[test]
    fn expand_rejections() {
        assert_eq!(cf_expand(4, 2), Err(Error::NotCoprime(4, 2)));
        assert_eq!(cf_expand(1, 1), Err(Error::NotExpandable { p: 1, q: 1 }));
        assert_eq!(cf_expand(3, 5), Err(Error::NotExpandable { p: 3, q: 5 }));
        assert!(cf_expand(0, 1).is_err());
        assert!(cf_expand(5, -1).is_err());
    }

    #[test]
    fn eval_examples() {
        let cf = ContinuedFraction::new(vec![-3, -5]).unwrap();
        assert_eq!(cf.to_slope(), s(-14, 5));
        assert_eq!(ContinuedFraction::new(vec![-2]).unwrap().to_slope(), s(-2, 1));
        let cf = ContinuedFraction::new(vec![-3, -3]).unwrap();
        assert_eq!(cf_to_slope(&cf), s(-8, 3));
    }

    #[test]
    fn cf_constructor_rejects_large_coefficients() {
        assert_eq!(
            ContinuedFraction::new(vec![-3, -1]),
            Err(Error::BadCoefficient(-1))
        );
        assert_eq!(ContinuedFraction::new(vec![]), Err(Error::EmptyContinuedFraction));
    }

    #[test]
    fn peel_path_examples() {
        let path = peel_path(14, 5).unwrap();
        let expected: Vec<Slope> = [(-14, 5), (-11, 4), (-8, 3), (-5, 2), (-2, 1), (-1, 1)]
            .iter()
            .map(|&(n, d)| s(n, d))
            .collect();
        assert_eq!(path, expected);

        assert_eq!(peel_path(1, 1).unwrap(), vec![s(-1, 1)]);
        assert_eq!(
            peel_path(3, 1).unwrap(),
            vec![s(-3, 1), s(-2, 1), s(-1, 1)]
        );
        // collapses can cascade through several coefficients
        assert_eq!(peel_path(4, 3).unwrap(), vec![s(-4, 3), s(-1, 1)]);
    }

    #[test]
    fn peel_path_steps_are_farey_edges() {
        for path in [peel_path(14, 5).unwrap(), peel_path(7, 3).unwrap()] {
            for w in path.windows(2) {
                assert!(is_farey_edge(w[0], w[1]));
            }
        }
    }

    #[test]
    fn bypass_examples() {
        assert_eq!(bypass_slope(s(-14, 5), s(0, 1)).unwrap(), s(-11, 4));
        assert_eq!(bypass_slope(s(-2, 1), s(0, 1)).unwrap(), s(-1, 1));
        assert_eq!(bypass_slope(s(-1, 1), s(0, 1)).unwrap(), s(-1, 2));
        assert_eq!(
            bypass_slope(s(-1, 1), s(-1, 1)),
            Err(Error::EqualSlopes)
        );
    }

    #[test]
    fn bypass_from_infinity() {
        // neighbors of ∞ are the integers; the closest one counterclockwise
        // of the attaching slope is its floor (or the next integer down).
        assert_eq!(bypass_slope(Slope::INFINITY, s(5, 2)).unwrap(), s(2, 1));
        assert_eq!(bypass_slope(Slope::INFINITY, s(3, 1)).unwrap(), s(2, 1));
        assert_eq!(bypass_slope(s(-2, 1), Slope::INFINITY).unwrap(), s(-1, 1));
    }

    #[test]
    fn ccw_interval() {
        // the interval (0, -14/5) is the band of slopes between them
        assert!(s(-11, 4).is_ccw_between(s(0, 1), s(-14, 5)));
        assert!(!s(-3, 1).is_ccw_between(s(0, 1), s(-14, 5)));
        assert!(!Slope::INFINITY.is_ccw_between(s(0, 1), s(-14, 5)));
        // wrapping interval from -1 to 1 passes through ∞
        assert!(Slope::INFINITY.is_ccw_between(s(-1, 1), s(1, 1)));
        assert!(s(-5, 1).is_ccw_between(s(-1, 1), s(1, 1)));
        assert!(s(5, 1).is_ccw_between(s(-1, 1), s(1, 1)));
        assert!(!s(0, 1).is_ccw_between(s(-1, 1), s(1, 1)));
        // endpoints are excluded
        assert!(!s(0, 1).is_ccw_between(s(0, 1), s(-1, 1)));
    }
}
