//! Fixed enumeration of the nonzero rationals.
//!
//! Positive rationals follow the Calkin–Wilf breadth-first order produced by
//! Newman's recurrence `c_1 = 1`, `c_{k+1} = 1 / (2 floor(c_k) - c_k + 1)`;
//! signs are interleaved so that index `2k` holds `+c_{k+1}` and `2k + 1`
//! holds `-c_{k+1}`.

use crate::rational::Rational;

/// Iterator over `q_0, q_1, ...`.
#[derive(Debug, Clone)]
pub struct RationalEnumeration {
    current: Rational,
    emit_negative: bool,
}

impl RationalEnumeration {
    pub fn new() -> Self {
        RationalEnumeration { current: Rational::one(), emit_negative: false }
    }
}

impl Default for RationalEnumeration {
    fn default() -> Self {
        Self::new()
    }
}

/// One step of Newman's recurrence.
pub fn calkin_wilf_next(c: &Rational) -> Rational {
    let two_floor = Rational::from_integer(2) * c.floor();
    (two_floor - c + Rational::one()).recip()
}

impl Iterator for RationalEnumeration {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        if self.emit_negative {
            let out = -&self.current;
            self.current = calkin_wilf_next(&self.current);
            self.emit_negative = false;
            Some(out)
        } else {
            self.emit_negative = true;
            Some(self.current.clone())
        }
    }
}

/// The rational at index `j`.
pub fn enumerate_rationals(j: usize) -> Rational {
    RationalEnumeration::new().nth(j).expect("enumeration is infinite")
}

/// The first `n` rationals of the enumeration.
pub fn first_rationals(n: usize) -> Vec<Rational> {
    RationalEnumeration::new().take(n).collect()
}
