//! Structural queries: classification, conjugation parameters, and the
//! inventory of normal subgroups the lifting constructions can use.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{center, quotient, Elem, FiniteGroup, SubgroupData};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Cyclic,
    /// Invariant factors, largest first.
    Abelian(Vec<usize>),
    /// `L_r`: a nonabelian 3-group of order `3^r` with a cyclic maximal subgroup.
    Lr(u32),
    OtherNonabelian,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Cyclic => write!(f, "cyclic"),
            Classification::Abelian(factors) => {
                let parts: Vec<String> = factors.iter().map(|d| d.to_string()).collect();
                write!(f, "abelian({})", parts.join(","))
            }
            Classification::Lr(r) => write!(f, "L{r}"),
            Classification::OtherNonabelian => write!(f, "other-nonabelian"),
        }
    }
}

pub fn is_three_group(g: &FiniteGroup) -> bool {
    power_of(g.order(), 3).is_some()
}

/// `Some(k)` when `n = p^k`.
pub(crate) fn power_of(mut n: usize, p: usize) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

pub fn classify(g: &FiniteGroup) -> Classification {
    let n = g.order();
    if g.elements().any(|x| g.element_order(x) == n) {
        return Classification::Cyclic;
    }
    if g.is_abelian() {
        return Classification::Abelian(invariant_factors(g));
    }
    if let Some(r) = power_of(n, 3) {
        if g.elements().any(|x| g.element_order(x) * 3 == n) {
            return Classification::Lr(r);
        }
    }
    Classification::OtherNonabelian
}

/// Invariant factors of an abelian group, from the counts of elements killed
/// by each prime power.
fn invariant_factors(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }

    let mut factors: Vec<usize> = Vec::new();
    for p in primes {
        // rank_at_least[k-1] = number of cyclic p-factors of order >= p^k
        let mut rank_at_least = Vec::new();
        let mut prev_log = 0u32;
        let mut pk = p;
        loop {
            let killed = g.elements().filter(|&x| pk % g.element_order(x) == 0).count();
            let log = power_of(killed, p).expect("p-torsion has p-power order");
            if log == prev_log {
                break;
            }
            rank_at_least.push((log - prev_log) as usize);
            prev_log = log;
            pk *= p;
        }
        // exponents of the p-primary part, largest first
        let rank = rank_at_least.first().copied().unwrap_or(0);
        let exps: Vec<u32> = (0..rank).map(|i| rank_at_least.iter().filter(|&&r| r > i).count() as u32).collect();
        for (i, e) in exps.into_iter().enumerate() {
            if i >= factors.len() {
                factors.push(1);
            }
            factors[i] *= p.pow(e);
        }
    }
    factors
}

/// The unique `(m, l)` with `t b t^-1 = b^(1+3m) c^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationParams {
    pub m: usize,
    pub l: usize,
}

impl ConjugationParams {
    /// `k(t) = m mod 3`, so that `t b t^-1 = b z^k c^l` with `z = b^3`.
    pub fn k(&self) -> usize {
        self.m % 3
    }
}

/// Solves `t b t^-1 = b^(1+3m) c^l` by enumerating `m < |b|/3` and `l < |c|`.
pub fn conjugation_params(g: &FiniteGroup, c: Elem, b: Elem, t: Elem) -> Result<ConjugationParams> {
    let target = g.conj(t, b);
    let b_order = g.element_order(b);
    let c_order = g.element_order(c);
    let m_range = (b_order / 3).max(1);
    for m in 0..m_range {
        let base = g.pow(b, 1 + 3 * m as i64);
        let mut acc = base;
        for l in 0..c_order {
            if acc == target {
                return Ok(ConjugationParams { m, l });
            }
            acc = g.mul(acc, c);
        }
    }
    Err(Error::NoConjugationSolution {
        c: g.label(c).to_string(),
        b: g.label(b).to_string(),
        t: g.label(t).to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LiftingKind {
    /// Central `C3 x C3`.
    CentralC3C3,
    /// Normal, noncentral `C3 x C3`.
    C3C3,
    /// Abelian normal `C9 x C3` admitting a split `<c> x <b>` with `c` central.
    C9C3,
}

impl fmt::Display for LiftingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftingKind::CentralC3C3 => "C3xC3-central",
            LiftingKind::C3C3 => "C3xC3",
            LiftingKind::C9C3 => "C9xC3",
        })
    }
}

#[derive(Clone, Debug)]
pub struct LiftingSubgroup {
    pub subgroup: SubgroupData,
    pub kind: LiftingKind,
    pub central: bool,
    pub quotient_noncyclic: bool,
}

/// How a `C9 x C3` subgroup splits as `<c> x <b>` with `c` central.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum C9C3Split {
    /// The whole subgroup is central; `c` has order 9, `b` order 3.
    Central { c: Elem, b: Elem },
    /// `|c| = 9` central, `|b| = 3`.
    OrderNineCentral { c: Elem, b: Elem },
    /// `|c| = 3` central, `|b| = 9`.
    OrderThreeCentral { c: Elem, b: Elem },
}

/// Finds the split used by the `C9 x C3` lift, preferring a central element of
/// order 9. `h` must be abelian of type `C9 x C3`.
pub fn split_c9c3(g: &FiniteGroup, h: &SubgroupData, z: &SubgroupData) -> Option<C9C3Split> {
    let order_nine: Vec<Elem> = h.elements.iter().copied().filter(|&x| g.element_order(x) == 9).collect();
    let order_three: Vec<Elem> = h.elements.iter().copied().filter(|&x| g.element_order(x) == 3).collect();
    let complement_of_nine = |c: Elem| {
        let c3 = g.pow(c, 3);
        let c6 = g.pow(c, 6);
        order_three.iter().copied().find(|&b| b != c3 && b != c6)
    };
    if h.is_subset_of(z) {
        let c = *order_nine.first()?;
        return Some(C9C3Split::Central { c, b: complement_of_nine(c)? });
    }
    if let Some(&c) = order_nine.iter().find(|&&c| z.contains(c)) {
        return Some(C9C3Split::OrderNineCentral { c, b: complement_of_nine(c)? });
    }
    for &c in order_three.iter().filter(|&&c| z.contains(c)) {
        if let Some(&b) = order_nine.iter().find(|&&b| {
            let b3 = g.pow(b, 3);
            c != b3 && c != g.pow(b, 6)
        }) {
            return Some(C9C3Split::OrderThreeCentral { c, b });
        }
    }
    None
}

/// All normal `C3 x C3` subgroups and all abelian normal `C9 x C3` subgroups
/// that admit a split with a central factor, in deterministic order.
pub fn enumerate_lifting_subgroups(g: &FiniteGroup) -> Vec<LiftingSubgroup> {
    let z = center(g);
    let order_three: Vec<Elem> = g.elements().filter(|&x| g.element_order(x) == 3).collect();
    let order_nine: Vec<Elem> = g.elements().filter(|&x| g.element_order(x) == 9).collect();

    let span = |a: Elem, b: Elem, ord_a: i64| -> Vec<Elem> {
        let mut els: Vec<Elem> = (0..ord_a)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| g.mul(g.pow(a, i), g.pow(b, j)))
            .collect();
        els.sort_unstable();
        els.dedup();
        els
    };

    let mut elementary: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for (i, &a) in order_three.iter().enumerate() {
        for &b in &order_three[i + 1..] {
            if g.mul(a, b) != g.mul(b, a) {
                continue;
            }
            let els = span(a, b, 3);
            if els.len() == 9 {
                elementary.insert(els);
            }
        }
    }
    let mut mixed: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for &c in &order_nine {
        for &b in &order_three {
            if g.mul(c, b) != g.mul(b, c) {
                continue;
            }
            let els = span(c, b, 9);
            if els.len() == 27 {
                mixed.insert(els);
            }
        }
    }

    let mut out = Vec::new();
    let mut push = |elements: Vec<Elem>, is_c9c3: bool| {
        let generators = canonical_generators(g, &elements);
        let subgroup = SubgroupData { elements, generators };
        if !super::is_normal(g, &subgroup) {
            return;
        }
        let central = subgroup.is_subset_of(&z);
        let kind = match (is_c9c3, central) {
            (false, true) => LiftingKind::CentralC3C3,
            (false, false) => LiftingKind::C3C3,
            (true, _) => {
                if split_c9c3(g, &subgroup, &z).is_none() {
                    return;
                }
                LiftingKind::C9C3
            }
        };
        let quotient_noncyclic = quotient(g, &subgroup)
            .map(|dec| {
                let m = dec.quotient.order();
                m > 1 && !dec.quotient.elements().any(|x| dec.quotient.element_order(x) == m)
            })
            .unwrap_or(false);
        out.push(LiftingSubgroup { subgroup, kind, central, quotient_noncyclic });
    };
    for els in elementary {
        push(els, false);
    }
    for els in mixed {
        push(els, true);
    }
    out.sort_by(|a, b| (a.kind, &a.subgroup.elements).cmp(&(b.kind, &b.subgroup.elements)));
    out
}

/// Greedy generators: repeatedly take the least element outside the span so far.
fn canonical_generators(g: &FiniteGroup, elements: &[Elem]) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = super::subgroup_generated(g, &gens);
    for &x in elements {
        if !span.contains(x) {
            gens.push(x);
            span = super::subgroup_generated(g, &gens);
            if span.order() == elements.len() {
                break;
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_from_spec, subgroup_generated, Label};

    fn el(g: &FiniteGroup, coords: &[u32]) -> Elem {
        g.element_by_label(&Label(coords.to_vec())).unwrap()
    }

    #[test]
    fn classification_examples() {
        let cases = [
            ("C9xC3", Classification::Abelian(vec![9, 3])),
            ("C3xC3xC3", Classification::Abelian(vec![3, 3, 3])),
            ("C2xC3", Classification::Cyclic),
            ("C2xC4xC3", Classification::Abelian(vec![12, 2])),
            ("C27", Classification::Cyclic),
            ("C1", Classification::Cyclic),
            ("L3", Classification::Lr(3)),
            ("L4", Classification::Lr(4)),
            ("H3", Classification::OtherNonabelian),
            ("H3xC3", Classification::OtherNonabelian),
            ("M16", Classification::OtherNonabelian),
        ];
        for (spec, expected) in cases {
            assert_eq!(classify(&build_from_spec(spec).unwrap()), expected, "{spec}");
        }
        assert_eq!(Classification::Abelian(vec![9, 3]).to_string(), "abelian(9,3)");
    }

    #[test]
    fn conjugation_params_examples() {
        let h3 = build_from_spec("H3").unwrap();
        let (x, y, z) = (el(&h3, &[1, 0, 0]), el(&h3, &[0, 1, 0]), el(&h3, &[0, 0, 1]));
        assert_eq!(conjugation_params(&h3, z, x, 0).unwrap(), ConjugationParams { m: 0, l: 0 });
        assert_eq!(conjugation_params(&h3, z, x, y).unwrap(), ConjugationParams { m: 0, l: 2 });

        // c = a^3 is central in L3
        let l3 = build_from_spec("L3").unwrap();
        let (a, b) = (el(&l3, &[1, 0]), el(&l3, &[0, 1]));
        let c = el(&l3, &[3, 0]);
        let p = conjugation_params(&l3, c, b, a).unwrap();
        let rebuilt = l3.mul(l3.pow(b, 1 + 3 * p.m as i64), l3.pow(c, p.l as i64));
        assert_eq!(rebuilt, l3.conj(a, b));
        assert_eq!(p, ConjugationParams { m: 0, l: 2 });
    }

    #[test]
    fn conjugation_params_fails_outside_subgroup() {
        let h3 = build_from_spec("H3").unwrap();
        let (x, y) = (el(&h3, &[1, 0, 0]), el(&h3, &[0, 1, 0]));
        // <x> is not normal: y x y^-1 = z^2 x lies outside <x>
        let err = conjugation_params(&h3, 0, x, y);
        assert!(matches!(err, Err(Error::NoConjugationSolution { .. })));
    }

    #[test]
    fn cyclic_group_has_no_lifting_subgroup() {
        let g = build_from_spec("C27").unwrap();
        assert!(enumerate_lifting_subgroups(&g).is_empty());
    }

    #[test]
    fn h3xc3_inventory() {
        let g = build_from_spec("H3xC3").unwrap();
        let subs = enumerate_lifting_subgroups(&g);
        let z = el(&g, &[0, 0, 1, 0]);
        let w = el(&g, &[0, 0, 0, 1]);
        let xw = el(&g, &[1, 0, 0, 1]);
        let central = subgroup_generated(&g, &[z, w]);
        let noncentral = subgroup_generated(&g, &[z, xw]);
        let find = |h: &SubgroupData| subs.iter().find(|s| s.subgroup.elements == h.elements).cloned();
        let c = find(&central).expect("<z,w> listed");
        assert_eq!(c.kind, LiftingKind::CentralC3C3);
        assert!(c.quotient_noncyclic);
        let nc = find(&noncentral).expect("<z,xw> listed");
        assert_eq!(nc.kind, LiftingKind::C3C3);
        assert!(nc.quotient_noncyclic);
        // deterministic ordering by kind
        assert!(subs.windows(2).all(|w| w[0].kind <= w[1].kind));
    }

    #[test]
    fn l3xc3xc3_has_mixed_subgroup() {
        let g = build_from_spec("L3xC3xC3").unwrap();
        let subs = enumerate_lifting_subgroups(&g);
        let a = el(&g, &[1, 0, 0, 0]);
        let w1 = el(&g, &[0, 0, 1, 0]);
        let h = subgroup_generated(&g, &[a, w1]);
        let found = subs.iter().find(|s| s.subgroup.elements == h.elements).expect("<a,w1> listed");
        assert_eq!(found.kind, LiftingKind::C9C3);
        assert!(!found.central);
        assert!(found.quotient_noncyclic);
        let split = split_c9c3(&g, &found.subgroup, &center(&g)).unwrap();
        assert!(matches!(split, C9C3Split::OrderThreeCentral { .. }));
    }

    #[test]
    fn power_of_three() {
        assert_eq!(power_of(243, 3), Some(5));
        assert_eq!(power_of(1, 3), Some(0));
        assert_eq!(power_of(16, 3), None);
    }
}
