//! Exact rational arithmetic used everywhere a formula divides.
//!
//! All residuals and genera are `Rat` values; nothing in this crate ever
//! touches floating point.

use num_rational::Ratio;

/// Exact rational number. i128 components keep desk-scale sweeps far from overflow.
pub type Rat = Ratio<i128>;

/// Shorthand constructor.
pub fn rat(num: i128, den: i128) -> Rat {
    Rat::new(num, den)
}

/// Rational from an integer.
pub fn rint(n: i128) -> Rat {
    Rat::from_integer(n)
}

/// Render as "a/b", with "/1" kept explicit so reports stay uniformly rational.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Render as "a" when integral, "a/b" otherwise (human-readable text reports).
pub fn rat_display(r: &Rat) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
