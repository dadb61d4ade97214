//! Exact calculators for degree–diameter bounds on surfaces.
//!
//! Everything is evaluated with big integers. The one irrational quantity,
//! `c = 2·g^{1/3} + 6` for even `k`, enters the upper bound only through
//! `K·g^{1/3}` with `K` an integer, which is rounded up once as
//! `⌈∛(K³g)⌉`. The value returned by [`thm_main_upper`] is therefore the
//! ceiling of the bound and stays a strict upper bound on the order.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::constructions;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("Δ = {0} must be at least 3")]
    DegreeTooSmall(u64),
    #[error("k = {0} must be at least 2")]
    DiameterTooSmall(u64),
    #[error("k = {0} must be odd and at least 3")]
    NotOdd(u64),
    #[error("p = {p} must lie in [3, Δ] = [3, {delta}]")]
    POutOfRange { p: u64, delta: u64 },
    #[error("K_{p} does not embed in Euler genus {g}: need p ≥ ⌈√(6g+9)⌉ = {min}")]
    PTooSmallForGenus { p: u64, g: u64, min: u64 },
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// `M(Δ, l) = 1 + Δ + Δ(Δ−1) + … + Δ(Δ−1)^{l−1}`.
pub fn moore(delta: u64, l: u32) -> Result<BigUint, BoundsError> {
    if delta < 3 {
        return Err(BoundsError::DegreeTooSmall(delta));
    }
    let mut total = BigUint::one();
    let mut term = big(delta);
    for _ in 0..l {
        total += &term;
        term *= delta - 1;
    }
    Ok(total)
}

/// `1 + Δ((Δ−1)^l − 1)/(Δ−2)`.
pub fn moore_closed_form(delta: u64, l: u32) -> Result<BigUint, BoundsError> {
    if delta < 3 {
        return Err(BoundsError::DegreeTooSmall(delta));
    }
    let power: BigUint = Pow::pow(big(delta - 1), l);
    Ok(BigUint::one() + big(delta) * (power - 1u32) / (delta - 2))
}

pub fn ceil_sqrt(x: &BigUint) -> BigUint {
    let r = x.sqrt();
    if &r * &r == *x {
        r
    } else {
        r + 1u32
    }
}

pub fn ceil_cbrt(x: &BigUint) -> BigUint {
    let r = x.cbrt();
    if &r * &r * &r == *x {
        r
    } else {
        r + 1u32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: u64) -> Self {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The coefficient `c` of the leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coefficient {
    Integer(BigUint),
    /// `2·g^{1/3} + 6` with `g` not a perfect cube.
    TwiceCubeRootPlusSix(u64),
}

impl Coefficient {
    pub fn as_integer(&self) -> Option<&BigUint> {
        match self {
            Coefficient::Integer(c) => Some(c),
            Coefficient::TwiceCubeRootPlusSix(_) => None,
        }
    }

    /// `⌈factor · c⌉`.
    pub fn times_ceil(&self, factor: &BigUint) -> BigUint {
        match self {
            Coefficient::Integer(c) => factor * c,
            Coefficient::TwiceCubeRootPlusSix(g) => {
                let k = factor * 2u32;
                ceil_cbrt(&(&k * &k * &k * big(*g))) + factor * 6u32
            }
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Integer(c) => write!(f, "{c}"),
            Coefficient::TwiceCubeRootPlusSix(g) => write!(f, "2*{g}^(1/3)+6"),
        }
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Coefficient::Integer(c) => serialize_big(c, s),
            Coefficient::TwiceCubeRootPlusSix(_) => s.serialize_str(&self.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllC {
    pub ell: u64,
    pub c: Coefficient,
}

/// `⌈g^{2/3} + g^{1/2}⌉`.
fn ceil_two_thirds_plus_half(g: u64) -> u64 {
    let gb = big(g);
    let sq = gb.sqrt();
    let cb = (&gb * &gb).cbrt();
    let square = &sq * &sq == gb;
    let cube = &cb * &cb * &cb == &gb * &gb;
    if square && cube {
        return (sq + cb).to_u64().expect("fits");
    }
    // One of the roots is irrational, so is the sum; refine the enclosure
    // (A + B, A + B + 2) / 2^p until it contains no integer.
    let mut p = 32u32;
    loop {
        let scale = BigUint::one() << p;
        let a = (&gb * &gb * &scale * &scale * &scale).cbrt();
        let b = (&gb * &scale * &scale).sqrt();
        let low = a + b;
        let mid = &low + 1u32;
        if (&mid % &scale) != BigUint::zero() {
            return (low / &scale + 1u32).to_u64().expect("fits");
        }
        p *= 2;
    }
}

pub fn params_ell_c(g: u64, parity: Parity) -> EllC {
    match parity {
        Parity::Even => {
            let ell = ceil_two_thirds_plus_half(g) + 6;
            let cb = big(g).cbrt();
            let c = if &cb * &cb * &cb == big(g) {
                Coefficient::Integer(cb * 2u32 + 6u32)
            } else {
                Coefficient::TwiceCubeRootPlusSix(g)
            };
            EllC { ell, c }
        }
        Parity::Odd => {
            let ell = ceil_sqrt(&big(42 * g)).to_u64().expect("fits") + 33;
            EllC {
                ell,
                c: Coefficient::Integer(big(2 * ell + 2 * g - 1)),
            }
        }
    }
}

/// `⌈(2ℓ+1)c(Δ−1)^{⌊k/2⌋} + (2ℓ+1)(2k+1)(g+ℓ)M + ℓ(3+2g)k + ℓ⌉` with
/// `M = M(Δ, ⌊k/2⌋−1)`; every graph of Euler genus at most `g`, max degree
/// `Δ` and diameter `k` has fewer vertices.
pub fn thm_main_upper(g: u64, delta: u64, k: u64) -> Result<BigUint, BoundsError> {
    if delta < 3 {
        return Err(BoundsError::DegreeTooSmall(delta));
    }
    if k < 2 {
        return Err(BoundsError::DiameterTooSmall(k));
    }
    let EllC { ell, c } = params_ell_c(g, Parity::of(k));
    let half = (k / 2) as u32;
    let m = moore(delta, half - 1)?;
    let p: BigUint = Pow::pow(big(delta - 1), half);
    let two_ell_1 = big(2 * ell + 1);
    let lead = c.times_ceil(&(&two_ell_1 * p));
    let second = &two_ell_1 * big(2 * k + 1) * big(g + ell) * m;
    let tail = big(ell) * big(3 + 2 * g) * big(k) + big(ell);
    Ok(lead + second + tail)
}

/// `⌈√(6g+9)⌉`, the smallest `p` for which `K_p` is guaranteed to embed.
pub fn min_clique_for_genus(g: u64) -> u64 {
    ceil_sqrt(&big(6 * g + 9)).to_u64().expect("fits")
}

/// `p(Δ−p+1)(Δ−1)^{(k−3)/2}` for odd `k ≥ 3`.
pub fn eq2_lower(g: u64, delta: u64, k: u64, p: u64) -> Result<BigUint, BoundsError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(BoundsError::NotOdd(k));
    }
    if p < 3 || p > delta {
        return Err(BoundsError::POutOfRange { p, delta });
    }
    let min = min_clique_for_genus(g);
    if p < min {
        return Err(BoundsError::PTooSmallForGenus { p, g, min });
    }
    let power: BigUint = Pow::pow(big(delta - 1), ((k - 3) / 2) as u32);
    Ok(big(p) * big(delta - p + 1) * power)
}

fn serialize_big<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    let n: serde_json::Number = x.to_string().parse().map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

fn serialize_opt_big<S: Serializer>(x: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => serialize_big(x, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub g: u64,
    pub delta: u64,
    pub k: u64,
    /// `M(Δ, k)`.
    #[serde(serialize_with = "serialize_big")]
    pub moore_k: BigUint,
    /// `M(Δ, ⌊k/2⌋−1)`.
    #[serde(serialize_with = "serialize_big")]
    pub moore_half: BigUint,
    pub parity: Parity,
    pub ell: u64,
    pub c: Coefficient,
    #[serde(serialize_with = "serialize_big")]
    pub thm_main_upper: BigUint,
    /// Asymptotic shape of the headline bound; its constant is unspecified.
    pub headline_shape: &'static str,
    pub headline_precondition: &'static str,
    /// `Δ < k` (even) or `Δ < 2k+1` (odd).
    pub preconditions_possibly_unmet: bool,
    /// Clique size of the built-in lower-bound construction.
    pub p: Option<u64>,
    #[serde(serialize_with = "serialize_opt_big")]
    pub eq2_lower_formula: Option<BigUint>,
    #[serde(serialize_with = "serialize_opt_big")]
    pub construction_order: Option<BigUint>,
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn bounds_report(g: u64, delta: u64, k: u64) -> Result<BoundReport, BoundsError> {
    let upper = thm_main_upper(g, delta, k)?;
    let parity = Parity::of(k);
    let EllC { ell, c } = params_ell_c(g, parity);
    let (shape, precondition, unmet) = match parity {
        Parity::Even => ("c(g+1)(Δ−1)^⌊k/2⌋", "Δ ≥ c(g^(2/3)+1)k", delta < k),
        Parity::Odd => ("c(g^(3/2)+1)(Δ−1)^⌊k/2⌋", "Δ ≥ 2k+1", delta < 2 * k + 1),
    };
    let p = (parity == Parity::Odd)
        .then(|| constructions::builtin_clique(g))
        .flatten()
        .filter(|&p| p <= delta);
    let (eq2, order) = match p {
        Some(p) => (
            Some(eq2_lower(g, delta, k, p)?),
            Some(constructions::construction_order(p, delta, k)),
        ),
        None => (None, None),
    };
    Ok(BoundReport {
        g,
        delta,
        k,
        moore_k: moore(delta, k as u32)?,
        moore_half: moore(delta, (k / 2) as u32 - 1)?,
        parity,
        ell,
        c,
        thm_main_upper: upper,
        headline_shape: shape,
        headline_precondition: precondition,
        preconditions_possibly_unmet: unmet,
        p,
        eq2_lower_formula: eq2,
        construction_order: order,
    })
}
