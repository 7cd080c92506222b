use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

/// Arbitrary precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn qi(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    if let Some((a, b)) = t.split_once('/') {
        let n = BigInt::from_str(a.trim()).map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
        let d = BigInt::from_str(b.trim()).map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
        if d == BigInt::from(0) {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(BigRational::new(n, d))
    } else {
        BigInt::from_str(t)
            .map(BigRational::from_integer)
            .map_err(|e| format!("bad rational {s:?}: {e}"))
    }
}
