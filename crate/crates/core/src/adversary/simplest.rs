//! Simplest rational in a closed interval: least denominator, then least
//! absolute numerator, found by descending the Stern–Brocot tree through
//! continued-fraction steps.

use crate::rational::Rational;

/// The simplest rational in `[lo, hi]`. Returns `0` when the interval contains it.
pub fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "empty range [{lo}, {hi}]");
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_positive(&-hi, &-lo);
    }
    simplest_positive(lo, hi)
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let ceil = lo.ceil();
    if &ceil <= hi {
        return ceil;
    }
    // lo and hi share the integer part f; recurse on the reciprocals of the fractional parts.
    let f = lo.floor();
    let inner = simplest_positive(&(hi - &f).recip(), &(lo - &f).recip());
    f + inner.recip()
}
