use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CosetDecomposition, Elem};
use crate::perm::{deltas, is_colouring_bijection, is_permutation, Perm};

/// Coset data induced by a colouring bijection `Φ` of `G/H`.
///
/// Everything is indexed by the quotient index `q` of the transversal element
/// `t = τ(q)`. With `φ(t) = τ(Φ(π(t)))`:
/// `φ(t)t = ξ(t)t₁(t)`, `t⁻¹φ(t) = ζ(t)t₂(t)` and `t⁻¹φ(t)t = ω(t)t₃(t)`.
#[derive(Clone, Debug)]
pub struct TransversalScheme<'d, 'g> {
    pub decomposition: &'d CosetDecomposition<'g>,
    pub phi: Vec<Elem>,
    pub xi: Vec<Elem>,
    pub zeta: Vec<Elem>,
    pub omega: Vec<Elem>,
    /// Quotient indices of `t₁(t)`, `t₂(t)`, `t₃(t)`.
    pub t1: Vec<usize>,
    pub t2: Vec<usize>,
    pub t3: Vec<usize>,
}

pub fn transversal_scheme<'d, 'g>(
    dec: &'d CosetDecomposition<'g>,
    quotient_cb: &Perm,
) -> Result<TransversalScheme<'d, 'g>> {
    let q = &dec.quotient;
    if quotient_cb.len() != q.order() {
        return Err(Error::DimensionMismatch { expected: q.order(), got: quotient_cb.len() });
    }
    if !is_colouring_bijection(q, quotient_cb) {
        return Err(Error::Precondition(format!("the map on {} is not a colouring bijection", q.name())));
    }
    let g = dec.parent;
    let m = dec.index();
    let mut s = TransversalScheme {
        decomposition: dec,
        phi: Vec::with_capacity(m),
        xi: Vec::with_capacity(m),
        zeta: Vec::with_capacity(m),
        omega: Vec::with_capacity(m),
        t1: Vec::with_capacity(m),
        t2: Vec::with_capacity(m),
        t3: Vec::with_capacity(m),
    };
    for i in 0..m {
        let t = dec.tau(i);
        let phi = dec.tau(quotient_cb.apply(i));
        let ti = g.inv(t);
        let (xi, t1) = dec.decompose(g.mul(phi, t));
        let (zeta, t2) = dec.decompose(g.mul(ti, phi));
        let (omega, t3) = dec.decompose(g.mul(g.mul(ti, phi), t));
        s.phi.push(phi);
        s.xi.push(xi);
        s.zeta.push(zeta);
        s.omega.push(omega);
        s.t1.push(dec.pi(t1));
        s.t2.push(dec.pi(t2));
        s.t3.push(dec.pi(t3));
    }
    s.check()?;
    Ok(s)
}

impl TransversalScheme<'_, '_> {
    /// Re-checks the three defining identities in `G` and that every `tᵢ`
    /// permutes the transversal.
    pub fn check(&self) -> Result<()> {
        let dec = self.decomposition;
        let g = dec.parent;
        for i in 0..dec.index() {
            let t = dec.tau(i);
            let ti = g.inv(t);
            let phi = self.phi[i];
            let ok = g.mul(phi, t) == g.mul(self.xi[i], dec.tau(self.t1[i]))
                && g.mul(ti, phi) == g.mul(self.zeta[i], dec.tau(self.t2[i]))
                && g.mul(g.mul(ti, phi), t) == g.mul(self.omega[i], dec.tau(self.t3[i]))
                && [self.xi[i], self.zeta[i], self.omega[i]].iter().all(|&h| dec.subgroup.contains(h));
            if !ok {
                return Err(Error::Invariant(format!("transversal scheme identity fails at {}", g.label(t))));
            }
        }
        for (name, map) in [("t1", &self.t1), ("t2", &self.t2), ("t3", &self.t3)] {
            if !is_permutation(map) {
                return Err(Error::Invariant(format!("{name} does not permute the transversal")));
            }
        }
        Ok(())
    }
}

/// Per-coset check of the layer property: each `Δᵢ` maps `Ht` onto
/// `H tᵢ(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    /// `holds[i]` for `Δ(i+1)`.
    pub holds: [bool; 3],
    /// First failing `(map, coset representative label)`.
    pub first_failure: Option<(usize, String)>,
}

impl LayerReport {
    pub fn all(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }
}

pub fn check_layers(scheme: &TransversalScheme<'_, '_>, sigma: &Perm) -> LayerReport {
    let dec = scheme.decomposition;
    let g = dec.parent;
    let d = deltas(g, sigma);
    let mut holds = [true; 3];
    let mut first_failure = None;
    for (k, (map, targets)) in [(&d.d1, &scheme.t1), (&d.d2, &scheme.t2), (&d.d3, &scheme.t3)].into_iter().enumerate() {
        for (i, &target) in targets.iter().enumerate() {
            let t = dec.tau(i);
            let images: Vec<Elem> = dec.subgroup.elements.iter().map(|&h| map[g.mul(h, t)]).collect();
            let on_target = images.iter().all(|&y| dec.pi(y) == target);
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if !on_target || sorted.len() != images.len() {
                holds[k] = false;
                first_failure.get_or_insert((k + 1, g.label(t).to_string()));
                break;
            }
        }
    }
    LayerReport { holds, first_failure }
}
