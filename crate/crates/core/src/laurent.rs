//! Exact trivariate Laurent polynomials in the torus coordinates `x` (for
//! SU(2)) and `y, z` (for SU(3)).
//!
//! Coefficients live in a dense block over a tight exponent window. Every
//! public operation returns a normalized value whose window is the bounding
//! box of its nonzero coefficients, so structural equality is coefficient
//! equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentTriple {
    pub ex: i32,
    pub ey: i32,
    pub ez: i32,
}

impl ExponentTriple {
    pub const ZERO: ExponentTriple = ExponentTriple { ex: 0, ey: 0, ez: 0 };

    pub const fn new(ex: i32, ey: i32, ez: i32) -> Self {
        ExponentTriple { ex, ey, ez }
    }

    pub fn scale(self, k: i32) -> Self {
        ExponentTriple::new(self.ex * k, self.ey * k, self.ez * k)
    }

    fn as_array(self) -> [i32; 3] {
        [self.ex, self.ey, self.ez]
    }

    fn from_array(a: [i32; 3]) -> Self {
        ExponentTriple::new(a[0], a[1], a[2])
    }
}

impl Add for ExponentTriple {
    type Output = ExponentTriple;

    fn add(self, o: ExponentTriple) -> ExponentTriple {
        ExponentTriple::new(self.ex + o.ex, self.ey + o.ey, self.ez + o.ez)
    }
}

impl Neg for ExponentTriple {
    type Output = ExponentTriple;

    fn neg(self) -> ExponentTriple {
        self.scale(-1)
    }
}

impl fmt::Display for ExponentTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.ex, self.ey, self.ez)
    }
}

/// Inclusive exponent box `lo ..= hi` in each variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub lo: ExponentTriple,
    pub hi: ExponentTriple,
}

impl Window {
    pub fn new(lo: ExponentTriple, hi: ExponentTriple) -> Self {
        assert!(lo.ex <= hi.ex && lo.ey <= hi.ey && lo.ez <= hi.ez, "empty window");
        Window { lo, hi }
    }

    /// The cube `-r ..= r` in every variable.
    pub fn symmetric(r: i32) -> Self {
        Window::new(ExponentTriple::new(-r, -r, -r), ExponentTriple::new(r, r, r))
    }

    pub fn dims(&self) -> [usize; 3] {
        let (lo, hi) = (self.lo.as_array(), self.hi.as_array());
        [0, 1, 2].map(|i| (hi[i] - lo[i] + 1) as usize)
    }

    pub fn len(&self) -> u64 {
        self.dims().iter().map(|&d| d as u64).product()
    }

    pub fn contains(&self, e: ExponentTriple) -> bool {
        (self.lo.ex..=self.hi.ex).contains(&e.ex)
            && (self.lo.ey..=self.hi.ey).contains(&e.ey)
            && (self.lo.ez..=self.hi.ez).contains(&e.ez)
    }

    pub fn contains_window(&self, w: &Window) -> bool {
        self.contains(w.lo) && self.contains(w.hi)
    }

    pub fn minkowski_sum(&self, other: &Window) -> Window {
        Window::new(self.lo + other.lo, self.hi + other.hi)
    }

    pub fn union(&self, other: &Window) -> Window {
        let (a, b) = (self.lo.as_array(), other.lo.as_array());
        let lo = ExponentTriple::from_array([0, 1, 2].map(|i| a[i].min(b[i])));
        let (a, b) = (self.hi.as_array(), other.hi.as_array());
        let hi = ExponentTriple::from_array([0, 1, 2].map(|i| a[i].max(b[i])));
        Window::new(lo, hi)
    }

    fn index(&self, e: ExponentTriple) -> usize {
        let [_, ny, nz] = self.dims();
        let ix = (e.ex - self.lo.ex) as usize;
        let iy = (e.ey - self.lo.ey) as usize;
        let iz = (e.ez - self.lo.ez) as usize;
        (ix * ny + iy) * nz + iz
    }

    fn exponent(&self, idx: usize) -> ExponentTriple {
        let [_, ny, nz] = self.dims();
        let iz = idx % nz;
        let iy = (idx / nz) % ny;
        let ix = idx / (ny * nz);
        ExponentTriple::new(
            self.lo.ex + ix as i32,
            self.lo.ey + iy as i32,
            self.lo.ez + iz as i32,
        )
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [nx, ny, nz] = self.dims();
        write!(f, "{}..={} ({nx}x{ny}x{nz})", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error(
        "window {window} needs about {bytes} bytes for {entries} coefficients, over the memory budget of {budget} bytes"
    )]
    BudgetExceeded { window: Window, entries: u64, bytes: u64, budget: u64 },
    #[error("coefficient at {exponent} is not divisible by {divisor}")]
    NotDivisible { exponent: ExponentTriple, divisor: BigInt },
}

/// Upper bound on the bytes a single dense coefficient block may occupy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MemoryBudget {
    bytes: u64,
}

impl MemoryBudget {
    /// Rough per-coefficient footprint: the `BigInt` header plus two limbs.
    pub const BYTES_PER_COEFFICIENT: u64 = std::mem::size_of::<BigInt>() as u64 + 16;

    pub const fn bytes(bytes: u64) -> Self {
        MemoryBudget { bytes }
    }

    pub const fn unlimited() -> Self {
        MemoryBudget { bytes: u64::MAX }
    }

    pub fn limit(&self) -> u64 {
        self.bytes
    }

    pub fn estimate(entries: u64) -> u64 {
        entries.saturating_mul(Self::BYTES_PER_COEFFICIENT)
    }

    pub fn check(&self, window: &Window) -> Result<(), LaurentError> {
        let entries = window.len();
        let bytes = Self::estimate(entries);
        if bytes > self.bytes {
            return Err(LaurentError::BudgetExceeded {
                window: *window,
                entries,
                bytes,
                budget: self.bytes,
            });
        }
        Ok(())
    }
}

impl Default for MemoryBudget {
    /// 1 GiB.
    fn default() -> Self {
        MemoryBudget::bytes(1 << 30)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly3 {
    // `None` iff the polynomial is zero.
    window: Option<Window>,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly3 {
    pub fn zero() -> Self {
        LaurentPoly3 { window: None, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(ExponentTriple::ZERO, 1)
    }

    pub fn monomial(e: ExponentTriple, c: impl Into<BigInt>) -> Self {
        Self::from_terms([(e, c.into())])
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<T: Into<BigInt>>(terms: impl IntoIterator<Item = (ExponentTriple, T)>) -> Self {
        let terms: Vec<(ExponentTriple, BigInt)> =
            terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(window) = terms
            .iter()
            .map(|(e, _)| Window::new(*e, *e))
            .reduce(|a, b| a.union(&b))
        else {
            return Self::zero();
        };
        let mut p = Self::zeros_over(window);
        for (e, c) in terms {
            p.coeffs[window.index(e)] += c;
        }
        p.normalize();
        p
    }

    fn zeros_over(window: Window) -> Self {
        LaurentPoly3 { window: Some(window), coeffs: vec![BigInt::zero(); window.len() as usize] }
    }

    pub fn window(&self) -> Option<Window> {
        self.window
    }

    pub fn is_zero(&self) -> bool {
        self.window.is_none()
    }

    pub fn coeff(&self, e: ExponentTriple) -> BigInt {
        match self.window {
            Some(w) if w.contains(e) => self.coeffs[w.index(e)].clone(),
            _ => BigInt::zero(),
        }
    }

    /// Nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (ExponentTriple, &BigInt)> + '_ {
        let w = self.window;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (w.expect("nonzero coefficient in zero polynomial").exponent(i), c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficient of `x^0 y^0 z^0`.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(ExponentTriple::ZERO)
    }

    /// Constant term of `a * b`, without forming the product.
    pub fn constant_term_of_product(a: &LaurentPoly3, b: &LaurentPoly3) -> BigInt {
        let (small, large) = if a.num_terms() <= b.num_terms() { (a, b) } else { (b, a) };
        small
            .terms()
            .fold(BigInt::zero(), |acc, (e, c)| acc + c * large.coeff(-e))
    }

    /// Value at `x = y = z = 1`.
    pub fn sum_coefficients(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `f(x^k, y^k, z^k)`.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1, "power substitution needs k >= 1");
        let k = k as i32;
        let Some(w) = self.window else {
            return Self::zero();
        };
        let mut out = Self::zeros_over(Window::new(w.lo.scale(k), w.hi.scale(k)));
        let ow = out.window.unwrap();
        for (e, c) in self.terms() {
            out.coeffs[ow.index(e.scale(k))] = c.clone();
        }
        out
    }

    /// `f(1/x, 1/y, 1/z)`.
    pub fn reversed(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|x| *x *= c);
        out.normalize();
        out
    }

    /// Divides every coefficient by `d`, failing on the first remainder.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self, LaurentError> {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible {
                    exponent: self.window.unwrap().exponent(i),
                    divisor: d.clone(),
                });
            }
            *c = q;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self, budget: &MemoryBudget) -> Result<Self, LaurentError> {
        let (Some(wa), Some(wb)) = (self.window, other.window) else {
            return Ok(Self::zero());
        };
        let w = wa.minkowski_sum(&wb);
        budget.check(&w)?;
        let mut out = Self::zeros_over(w);
        out.accumulate_product(self, other);
        out.normalize();
        Ok(out)
    }

    /// `self += a * b` with `self` already covering the Minkowski window of
    /// `a` and `b`. Leaves the result unnormalized; callers that expose it
    /// must call `normalize`.
    pub(crate) fn accumulate_product(&mut self, a: &Self, b: &Self) {
        let (Some(wa), Some(wb)) = (a.window, b.window) else {
            return;
        };
        let w = self.window.expect("accumulator must have a window");
        assert!(w.contains_window(&wa.minkowski_sum(&wb)), "accumulator window too small");
        // Iterate the sparser factor term by term; sweep the other as
        // contiguous z-rows.
        let (sparse, dense, wd) =
            if a.num_terms() <= b.num_terms() { (a, b, wb) } else { (b, a, wa) };
        let [dx, dy, dz] = wd.dims();
        let one = BigInt::one();
        let minus_one = -BigInt::one();
        for (e, c) in sparse.terms() {
            for ix in 0..dx {
                for iy in 0..dy {
                    let src_start = (ix * dy + iy) * dz;
                    let src = &dense.coeffs[src_start..src_start + dz];
                    let target = e + ExponentTriple::new(
                        wd.lo.ex + ix as i32,
                        wd.lo.ey + iy as i32,
                        wd.lo.ez,
                    );
                    let dst_start = w.index(target);
                    let dst = &mut self.coeffs[dst_start..dst_start + dz];
                    for (d, s) in dst.iter_mut().zip(src) {
                        if s.is_zero() {
                            continue;
                        }
                        if *c == one {
                            *d += s;
                        } else if *c == minus_one {
                            *d -= s;
                        } else {
                            *d += s * c;
                        }
                    }
                }
            }
        }
    }

    /// Grows the window to cover `target` (keeping existing coefficients).
    pub(crate) fn widen_to(&mut self, target: Window) {
        let w = match self.window {
            None => {
                *self = Self::zeros_over(target);
                return;
            }
            Some(w) if w.contains_window(&target) => return,
            Some(w) => w.union(&target),
        };
        let mut out = Self::zeros_over(w);
        for (i, c) in std::mem::take(&mut self.coeffs).into_iter().enumerate() {
            if !c.is_zero() {
                let e = self.window.unwrap().exponent(i);
                out.coeffs[w.index(e)] = c;
            }
        }
        *self = out;
    }

    /// Shrinks the window to the bounding box of the nonzero coefficients.
    pub(crate) fn normalize(&mut self) {
        let Some(w) = self.window else {
            return;
        };
        let mut lo = [i32::MAX; 3];
        let mut hi = [i32::MIN; 3];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = w.exponent(i).as_array();
            for a in 0..3 {
                lo[a] = lo[a].min(e[a]);
                hi[a] = hi[a].max(e[a]);
            }
        }
        if lo[0] == i32::MAX {
            *self = Self::zero();
            return;
        }
        let tight = Window::new(ExponentTriple::from_array(lo), ExponentTriple::from_array(hi));
        if tight == w {
            return;
        }
        let mut out = Self::zeros_over(tight);
        for (i, c) in std::mem::take(&mut self.coeffs).into_iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[tight.index(w.exponent(i))] = c;
            }
        }
        *self = out;
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let w = match (self.window, other.window) {
            (None, None) => return Self::zero(),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.union(&b),
        };
        let mut out = self.clone();
        out.widen_to(w);
        for (e, c) in other.terms() {
            let slot = &mut out.coeffs[w.index(e)];
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        out.normalize();
        out
    }
}

impl Add for &LaurentPoly3 {
    type Output = LaurentPoly3;

    fn add(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        self.combine(rhs, false)
    }
}

impl Sub for &LaurentPoly3 {
    type Output = LaurentPoly3;

    fn sub(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        self.combine(rhs, true)
    }
}

impl Neg for &LaurentPoly3 {
    type Output = LaurentPoly3;

    fn neg(self) -> LaurentPoly3 {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|c| *c = -&*c);
        out
    }
}

/// Unbudgeted product.
impl Mul for &LaurentPoly3 {
    type Output = LaurentPoly3;

    fn mul(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        self.checked_mul(rhs, &MemoryBudget::unlimited())
            .expect("unlimited budget cannot be exceeded")
    }
}

impl fmt::Display for LaurentPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            for (name, p) in [("x", e.ex), ("y", e.ey), ("z", e.ez)] {
                match p {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{p}")),
                }
            }
            match (parts.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", parts.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", parts.join("*"))?,
            }
        }
        Ok(())
    }
}
