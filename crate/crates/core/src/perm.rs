//! Bijections of a group and the colouring-bijection family of predicates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, ORDER_CAP};

const SEEN_WORDS: usize = ORDER_CAP.div_ceil(64);

/// Fixed-size bitset over element indices; lives on the stack.
#[derive(Clone, Copy)]
pub(crate) struct Seen([u64; SEEN_WORDS]);

impl Seen {
    #[inline]
    pub(crate) fn new() -> Self {
        Seen([0; SEEN_WORDS])
    }

    /// Marks `x`; returns `false` if it was already marked.
    #[inline]
    pub(crate) fn insert(&mut self, x: Elem) -> bool {
        let (w, b) = (x / 64, 1u64 << (x % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }
}

/// A bijection of `0..n`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Perm {
    images: Vec<Elem>,
}

impl Perm {
    pub fn new(images: Vec<Elem>) -> Result<Self> {
        if !is_permutation(&images) {
            return Err(Error::InvalidPerm(format!("{} images do not form a bijection", images.len())));
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn into_images(self) -> Vec<Elem> {
        self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            out[y] = x;
        }
        Perm { images: out }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn fixes(&self, x: Elem) -> bool {
        self.images[x] == x
    }

    pub(crate) fn check_len(&self, g: &FiniteGroup) -> Result<()> {
        if self.images.len() != g.order() {
            return Err(Error::DimensionMismatch { expected: g.order(), got: self.images.len() });
        }
        Ok(())
    }
}

/// Single pass with a seen-bitmask.
pub fn is_permutation(images: &[Elem]) -> bool {
    let n = images.len();
    if n > ORDER_CAP {
        let mut seen = vec![false; n];
        return images.iter().all(|&y| y < n && !std::mem::replace(&mut seen[y], true));
    }
    let mut seen = Seen::new();
    images.iter().all(|&y| y < n && seen.insert(y))
}

/// `Δ1(x) = σ(x)x`, `Δ2(x) = x⁻¹σ(x)`, `Δ3(x) = x⁻¹σ(x)x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaTriple {
    pub d1: Vec<Elem>,
    pub d2: Vec<Elem>,
    pub d3: Vec<Elem>,
}

pub fn deltas(g: &FiniteGroup, sigma: &Perm) -> DeltaTriple {
    let n = g.order();
    let (mut d1, mut d2, mut d3) = (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
    for x in g.elements() {
        let s = sigma.apply(x);
        let xi = g.inv(x);
        let left = g.mul(xi, s);
        d1.push(g.mul(s, x));
        d2.push(left);
        d3.push(g.mul(left, x));
    }
    DeltaTriple { d1, d2, d3 }
}

/// Fused check of the three Δ maps, stopping at the first repeated value.
pub fn is_colouring_bijection(g: &FiniteGroup, sigma: &Perm) -> bool {
    if sigma.len() != g.order() {
        return false;
    }
    let domain: Vec<Elem> = g.elements().collect();
    is_colouring_bijection_on(g, &domain, sigma.images())
}

/// The colouring-bijection test for a map given on a subset `domain` of `G`
/// (`images[i]` is the image of `domain[i]`). Used for maps on a subgroup;
/// closure of the images in the subgroup is the caller's concern.
pub fn is_colouring_bijection_on(g: &FiniteGroup, domain: &[Elem], images: &[Elem]) -> bool {
    let (mut s0, mut s1, mut s2, mut s3) = (Seen::new(), Seen::new(), Seen::new(), Seen::new());
    domain.iter().zip(images).all(|(&x, &s)| {
        let left = g.mul(g.inv(x), s);
        s0.insert(s) && s1.insert(g.mul(s, x)) && s2.insert(left) && s3.insert(g.mul(left, x))
    })
}

/// `x ↦ σ(x)` and `x ↦ xσ(x)` and `x ↦ x⁻¹σ(x)` all bijective.
pub fn is_strong_complete_mapping(g: &FiniteGroup, sigma: &Perm) -> bool {
    if sigma.len() != g.order() {
        return false;
    }
    let (mut s0, mut s1, mut s2) = (Seen::new(), Seen::new(), Seen::new());
    g.elements().all(|x| {
        let s = sigma.apply(x);
        s0.insert(s) && s1.insert(g.mul(x, s)) && s2.insert(g.mul(g.inv(x), s))
    })
}

/// `x ↦ σ(x)` and `x ↦ xσ(x)` bijective.
pub fn is_complete_mapping(g: &FiniteGroup, sigma: &Perm) -> bool {
    if sigma.len() != g.order() {
        return false;
    }
    let (mut s0, mut s1) = (Seen::new(), Seen::new());
    g.elements().all(|x| {
        let s = sigma.apply(x);
        s0.insert(s) && s1.insert(g.mul(x, s))
    })
}

/// `θᶜ(x) = τ(x)⁻¹ x τ(x)`.
pub fn theta_conjugacy(g: &FiniteGroup, tau: &Perm) -> Vec<Elem> {
    g.elements()
        .map(|x| {
            let t = tau.apply(x);
            g.mul(g.mul(g.inv(t), x), t)
        })
        .collect()
}

pub fn is_automorphism(g: &FiniteGroup, phi: &Perm) -> bool {
    phi.len() == g.order()
        && g.elements().all(|x| g.elements().all(|y| phi.apply(g.mul(x, y)) == g.mul(phi.apply(x), phi.apply(y))))
}

/// `φ⁻¹ ∘ σ ∘ φ`.
pub fn conj_by_automorphism(g: &FiniteGroup, sigma: &Perm, phi: &Perm) -> Result<Perm> {
    sigma.check_len(g)?;
    if !is_automorphism(g, phi) {
        return Err(Error::NotAutomorphism(g.name().to_string()));
    }
    Ok(phi.inverse().compose(&sigma.compose(phi)))
}

/// `σ(a, b) = (σ_A(a), σ_B(b))` on `A × B` indexed as `a·|B| + b`.
pub fn product_bijection(a: &FiniteGroup, sigma_a: &Perm, b: &FiniteGroup, sigma_b: &Perm) -> Result<Perm> {
    sigma_a.check_len(a)?;
    sigma_b.check_len(b)?;
    let nb = b.order();
    let images = (0..a.order() * nb).map(|x| sigma_a.apply(x / nb) * nb + sigma_b.apply(x % nb)).collect();
    Ok(Perm { images })
}

/// `x ↦ x²`, when that is a bijection.
pub fn square_map(g: &FiniteGroup) -> Result<Perm> {
    let images: Vec<Elem> = g.elements().map(|x| g.mul(x, x)).collect();
    Perm::new(images).map_err(|_| Error::InvalidPerm(format!("squaring is not a bijection of {}", g.name())))
}
