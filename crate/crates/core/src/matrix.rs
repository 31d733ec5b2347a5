//! 2×2 matrices over the field with three elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Row-major entries in `{0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2F3(pub [u8; 4]);

impl Matrix2F3 {
    pub const ZERO: Self = Matrix2F3([0, 0, 0, 0]);
    pub const I: Self = Matrix2F3([1, 0, 0, 1]);
    pub const M1: Self = Matrix2F3([0, 1, 1, 1]);
    pub const M2: Self = Matrix2F3([0, 2, 1, 2]);

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |x: i64| x.rem_euclid(3) as u8;
        Matrix2F3([r(a), r(b), r(c), r(d)])
    }

    /// `C(λ) = [[1, λ], [0, 1]]`.
    pub fn c(lambda: i64) -> Self {
        Self::new(1, lambda, 0, 1)
    }

    pub fn det(self) -> u8 {
        let [a, b, c, d] = self.0.map(i64::from);
        (a * d - b * c).rem_euclid(3) as u8
    }

    pub fn is_invertible(self) -> bool {
        self.det() != 0
    }

    /// `M (u, v)ᵀ` over `F3`.
    pub fn apply(self, v: [u8; 2]) -> [u8; 2] {
        let [a, b, c, d] = self.0;
        [(a * v[0] + b * v[1]) % 3, (c * v[0] + d * v[1]) % 3]
    }

    /// `M1` for `λ ∈ {0, 2}` and `M2` for `λ = 1`: the choice for which
    /// `M + I`, `M − C(λ)` and `M + I − C(λ)` are all invertible.
    pub fn pair_choice(lambda: i64) -> Self {
        if lambda.rem_euclid(3) == 1 {
            Self::M2
        } else {
            Self::M1
        }
    }
}

impl Add for Matrix2F3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        Matrix2F3(std::array::from_fn(|i| (a[i] + b[i]) % 3))
    }
}

impl Neg for Matrix2F3 {
    type Output = Self;
    fn neg(self) -> Self {
        Matrix2F3(self.0.map(|x| (3 - x) % 3))
    }
}

impl Sub for Matrix2F3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + -o
    }
}

impl Mul for Matrix2F3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let ([a, b, c, d], [e, f, g, h]) = (self.0, o.0);
        Matrix2F3([(a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3])
    }
}

impl fmt::Display for Matrix2F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}
