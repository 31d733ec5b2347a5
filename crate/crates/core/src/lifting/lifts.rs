use std::collections::HashMap;

use serde::Serialize;

use super::scheme::{check_layers, transversal_scheme, LayerReport, TransversalScheme};
use crate::error::{Error, Result};
use crate::group::{
    center, conjugation_params, quotient, split_c9c3, C9C3Split, CosetDecomposition, Elem, FiniteGroup, SubgroupData,
};
use crate::matrix::Matrix2F3;
use crate::perm::{is_colouring_bijection, is_colouring_bijection_on, Perm};
use crate::tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftCase {
    /// `H` central, `ψ` supplied.
    Central,
    /// `H ≅ C3 × C3` central, `ψ` the linear map `M1`.
    C3C3Central,
    /// `H ≅ C3 × C3` normal but not central.
    C3C3,
    /// `H ≅ C9 × C3` central, `ψ = α0`.
    C9C3Central,
    /// `H = <c> × <b>` with `|c| = 9` central and `|b| = 3`.
    C9C3OrderNineCentral,
    /// `H = <b> × <c>` with `|b| = 9` and `|c| = 3` central.
    C9C3OrderThreeCentral,
}

#[derive(Clone, Debug)]
pub struct Lift {
    pub sigma: Perm,
    pub case: LiftCase,
    pub layers: LayerReport,
    pub verified: bool,
}

/// `σ(ht) = ψ_t(h) φ(t)`, where `psi(q, h)` gives `ψ_t(h)` for `t = τ(q)`.
fn assemble(scheme: &TransversalScheme<'_, '_>, psi: impl Fn(usize, Elem) -> Elem) -> Result<Perm> {
    let dec = scheme.decomposition;
    let g = dec.parent;
    let images = g
        .elements()
        .map(|x| {
            let (h, _) = dec.decompose(x);
            let q = dec.pi(x);
            g.mul(psi(q, h), scheme.phi[q])
        })
        .collect();
    Perm::new(images).map_err(|_| Error::Invariant("lifted map is not a bijection".into()))
}

fn finish(scheme: &TransversalScheme<'_, '_>, sigma: Perm, case: LiftCase) -> Lift {
    let g = scheme.decomposition.parent;
    let layers = check_layers(scheme, &sigma);
    let verified = is_colouring_bijection(g, &sigma);
    Lift { sigma, case, layers, verified }
}

fn require_verified(lift: Lift) -> Result<Lift> {
    if lift.verified && lift.layers.all() {
        Ok(lift)
    } else {
        Err(Error::Invariant(format!("{:?} lift did not produce a colouring bijection", lift.case)))
    }
}

/// Coordinates `h = e1^a e2^b ↔ (a, b)` with `a < r1`, `b < r2`, as a pair index `a·r2 + b`.
struct Coordinates {
    index_of: HashMap<Elem, usize>,
    element: Vec<Elem>,
    r2: usize,
}

impl Coordinates {
    fn new(g: &FiniteGroup, e1: Elem, r1: usize, e2: Elem, r2: usize) -> Self {
        let mut element = Vec::with_capacity(r1 * r2);
        for a in 0..r1 {
            for b in 0..r2 {
                element.push(g.mul(g.pow(e1, a as i64), g.pow(e2, b as i64)));
            }
        }
        let index_of = element.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Coordinates { index_of, element, r2 }
    }

    fn of(&self, h: Elem) -> [u8; 2] {
        let i = self.index_of[&h];
        [(i / self.r2) as u8, (i % self.r2) as u8]
    }

    fn elem(&self, p: [u8; 2]) -> Elem {
        self.element[p[0] as usize * self.r2 + p[1] as usize]
    }
}

fn order_three_elements(g: &FiniteGroup, h: &SubgroupData) -> Vec<Elem> {
    h.elements.iter().copied().filter(|&x| g.element_order(x) == 3).collect()
}

fn check_c3c3(g: &FiniteGroup, h: &SubgroupData) -> Result<()> {
    if h.order() != 9 || order_three_elements(g, h).len() != 8 {
        return Err(Error::WrongSubgroupType(format!("subgroup of {} is not C3xC3", g.name())));
    }
    Ok(())
}

/// `ψ(h) = M·h` on `H ≅ F3²` in the basis `(e1, e2)`.
fn linear_map(coords: &Coordinates, m: Matrix2F3, h: Elem) -> Elem {
    coords.elem(m.apply(coords.of(h)))
}

/// `k(g)` with `g b g⁻¹ = zᵏ b`, `z = c^(|c|/3)`.
fn k_of(g: &FiniteGroup, c: Elem, b: Elem, x: Elem) -> Result<usize> {
    let p = conjugation_params(g, c, b, x)?;
    Ok(p.l / (g.element_order(c) / 3))
}

pub fn lift_central(g: &FiniteGroup, h: &SubgroupData, quotient_cb: &Perm, psi: &[Elem]) -> Result<Lift> {
    let dec = quotient(g, h)?;
    lift_central_on(&dec, quotient_cb, |x| psi[h.position(x).expect("h in H")], psi, LiftCase::Central)
}

fn lift_central_on(
    dec: &CosetDecomposition<'_>,
    quotient_cb: &Perm,
    psi: impl Fn(Elem) -> Elem,
    psi_images: &[Elem],
    case: LiftCase,
) -> Result<Lift> {
    let g = dec.parent;
    let h = &dec.subgroup;
    if !h.is_subset_of(&center(g)) {
        return Err(Error::NotCentral(g.name().to_string()));
    }
    if psi_images.len() != h.order() {
        return Err(Error::DimensionMismatch { expected: h.order(), got: psi_images.len() });
    }
    if !psi_images.iter().all(|&y| h.contains(y)) || !is_colouring_bijection_on(g, &h.elements, psi_images) {
        return Err(Error::Precondition("the map on H is not a colouring bijection".into()));
    }
    let scheme = transversal_scheme(dec, quotient_cb)?;
    let sigma = assemble(&scheme, |_, x| psi(x))?;
    require_verified(finish(&scheme, sigma, case))
}

pub fn lift_c3c3(g: &FiniteGroup, h: &SubgroupData, quotient_cb: &Perm) -> Result<Lift> {
    check_c3c3(g, h)?;
    let dec = quotient(g, h)?;
    let z_g = center(g);
    let threes = order_three_elements(g, h);
    let z = *threes
        .iter()
        .find(|&&x| z_g.contains(x))
        .ok_or_else(|| Error::Precondition("H has no central element of order 3".into()))?;
    let z2 = g.mul(z, z);
    let b = *threes.iter().find(|&&x| x != z && x != z2).expect("H is not cyclic");
    let coords = Coordinates::new(g, z, 3, b, 3);

    if h.is_subset_of(&z_g) {
        let psi_images: Vec<Elem> = h.elements.iter().map(|&x| linear_map(&coords, Matrix2F3::M1, x)).collect();
        return lift_central_on(
            &dec,
            quotient_cb,
            |x| linear_map(&coords, Matrix2F3::M1, x),
            &psi_images,
            LiftCase::C3C3Central,
        );
    }

    let scheme = transversal_scheme(&dec, quotient_cb)?;
    let mut matrices = Vec::with_capacity(dec.index());
    for &phi in &scheme.phi {
        let alpha = k_of(g, z, b, g.inv(phi))? as i64;
        matrices.push(Matrix2F3::c(-alpha) * Matrix2F3::pair_choice(alpha));
    }
    let sigma = assemble(&scheme, |q, x| linear_map(&coords, matrices[q], x))?;
    require_verified(finish(&scheme, sigma, LiftCase::C3C3))
}

fn check_c9c3(g: &FiniteGroup, h: &SubgroupData) -> Result<()> {
    let abelian = h.elements.iter().all(|&x| h.elements.iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    let max_order = h.elements.iter().map(|&x| g.element_order(x)).max().unwrap_or(1);
    if h.order() != 27 || !abelian || max_order != 9 {
        return Err(Error::WrongSubgroupType(format!("subgroup of {} is not C9xC3", g.name())));
    }
    Ok(())
}

pub fn lift_c9c3(g: &FiniteGroup, h: &SubgroupData, quotient_cb: &Perm) -> Result<Lift> {
    let alphas = [tables::twisted_alpha(0), tables::twisted_alpha(1), tables::twisted_alpha(2)];
    require_verified(lift_c9c3_with_alpha(g, h, quotient_cb, &alphas)?)
}

/// The `C9 × C3` lift with caller-supplied `α0, α1, α2` for the split with a
/// central element of order 9. The result is returned unverified; check
/// [`Lift::verified`].
pub fn lift_c9c3_with_alpha(
    g: &FiniteGroup,
    h: &SubgroupData,
    quotient_cb: &Perm,
    alphas: &[[usize; 27]; 3],
) -> Result<Lift> {
    check_c9c3(g, h)?;
    let dec = quotient(g, h)?;
    let split = split_c9c3(g, h, &center(g))
        .ok_or_else(|| Error::WrongSubgroupType("C9xC3 without a split <c> x <b> with c central".into()))?;
    match split {
        C9C3Split::Central { c, b } => {
            let coords = Coordinates::new(g, c, 9, b, 3);
            let psi = |x: Elem| coords.elem(tables::pair_of(alphas[0][tables::pair_index(coords.of(x))]));
            let psi_images: Vec<Elem> = h.elements.iter().map(|&x| psi(x)).collect();
            let scheme = transversal_scheme(&dec, quotient_cb)?;
            if !is_colouring_bijection_on(g, &h.elements, &psi_images) {
                let sigma = assemble(&scheme, |_, x| psi(x))?;
                return Ok(finish(&scheme, sigma, LiftCase::C9C3Central));
            }
            lift_central_on(&dec, quotient_cb, psi, &psi_images, LiftCase::C9C3Central)
        }
        C9C3Split::OrderNineCentral { c, b } => {
            let coords = Coordinates::new(g, c, 9, b, 3);
            let scheme = transversal_scheme(&dec, quotient_cb)?;
            let u: Vec<usize> = scheme.phi.iter().map(|&phi| k_of(g, c, b, phi)).collect::<Result<_>>()?;
            let sigma =
                assemble(&scheme, |q, x| coords.elem(tables::pair_of(alphas[u[q]][tables::pair_index(coords.of(x))])))?;
            Ok(finish(&scheme, sigma, LiftCase::C9C3OrderNineCentral))
        }
        C9C3Split::OrderThreeCentral { c, b } => {
            let coords = Coordinates::new(g, b, 9, c, 3);
            let scheme = transversal_scheme(&dec, quotient_cb)?;
            let mut maps = Vec::with_capacity(dec.index());
            for &phi in &scheme.phi {
                let p = conjugation_params(g, c, b, phi)?;
                maps.push(tables::f_map(p.m, p.l));
            }
            let sigma =
                assemble(&scheme, |q, x| coords.elem(tables::pair_of(maps[q][tables::pair_index(coords.of(x))])))?;
            Ok(finish(&scheme, sigma, LiftCase::C9C3OrderThreeCentral))
        }
    }
}

/// The linear colouring bijection `v ↦ Mv` of `C3xC3` (labels read as vectors).
pub fn linear_c3c3(g: &FiniteGroup, m: Matrix2F3) -> Perm {
    let images = g
        .elements()
        .map(|x| {
            let l = &g.label(x).0;
            let v = m.apply([l[0] as u8, l[1] as u8]);
            v[0] as usize * 3 + v[1] as usize
        })
        .collect();
    Perm::new(images).expect("invertible matrix")
}
