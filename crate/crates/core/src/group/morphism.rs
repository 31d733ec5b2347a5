//! Homomorphisms determined by generator images.

use super::structure::power_of;
use super::{subgroup_generated, Elem, FiniteGroup, SubgroupData};
use crate::error::{Error, Result};

/// Largest order accepted by [`automorphisms`].
pub const AUT_ORDER_CAP: usize = 243;
const AUT_GENERATOR_CAP: usize = 3;

/// A minimal generating tuple. For a `p`-group this is the greedy basis
/// modulo the Frattini subgroup; otherwise the lexicographically first
/// tuple of minimal length.
pub fn generating_tuple(g: &FiniteGroup) -> Vec<Elem> {
    if g.order() == 1 {
        return Vec::new();
    }
    if let Some(p) = prime_power_base(g.order()) {
        let frattini = frattini_p_group(g, p);
        let mut gens: Vec<Elem> = Vec::new();
        let mut span = frattini.clone();
        while span.order() < g.order() {
            let next = g.elements().find(|&x| !span.contains(x)).expect("span is proper");
            gens.push(next);
            let mut with_frattini = gens.clone();
            with_frattini.extend_from_slice(&frattini.generators);
            span = subgroup_generated(g, &with_frattini);
        }
        return gens;
    }
    for d in 1.. {
        let mut tuple = Vec::with_capacity(d);
        if first_generating_tuple(g, d, &mut tuple) {
            return tuple;
        }
    }
    unreachable!()
}

fn first_generating_tuple(g: &FiniteGroup, d: usize, tuple: &mut Vec<Elem>) -> bool {
    let span = subgroup_generated(g, tuple);
    if tuple.len() == d {
        return span.order() == g.order();
    }
    let start = tuple.last().map_or(1, |&x| x + 1);
    for x in start..g.order() {
        if span.contains(x) {
            continue;
        }
        tuple.push(x);
        if first_generating_tuple(g, d, tuple) {
            return true;
        }
        tuple.pop();
    }
    false
}

fn prime_power_base(n: usize) -> Option<usize> {
    let p = (2..=n).find(|p| n.is_multiple_of(*p))?;
    power_of(n, p).map(|_| p)
}

/// `Phi(G) = G^p [G,G]` for a `p`-group.
fn frattini_p_group(g: &FiniteGroup, p: usize) -> SubgroupData {
    let mut gens: Vec<Elem> = g.elements().map(|x| g.pow(x, p as i64)).collect();
    for a in g.elements() {
        for b in g.elements() {
            gens.push(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    gens.retain(|&x| x != 0);
    let mut data = subgroup_generated(g, &gens);
    data.generators = data.elements.clone();
    data
}

/// Extends `gens[i] -> images[i]` to the subgroup generated by `gens`,
/// walking the right Cayley graph. Returns `None` if the assignment is not a
/// homomorphism.
fn extend(src: &FiniteGroup, dst: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut map = vec![usize::MAX; src.order()];
    map[0] = 0;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for (&s, &img) in gens.iter().zip(images) {
            let y = src.mul(x, s);
            let v = dst.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    Some(map)
}

/// Depth-first over image tuples; calls `visit` on every injective
/// homomorphism of the whole group and stops when it returns `false`.
fn for_each_embedding(src: &FiniteGroup, dst: &FiniteGroup, gens: &[Elem], visit: &mut dyn FnMut(Vec<Elem>) -> bool) {
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| dst.elements().filter(|&y| dst.element_order(y) == src.element_order(s)).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    descend(src, dst, gens, &candidates, &mut images, visit);
}

fn descend(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
    visit: &mut dyn FnMut(Vec<Elem>) -> bool,
) -> bool {
    let k = images.len();
    let partial = match extend(src, dst, &gens[..k], images) {
        Some(m) => m,
        None => return true,
    };
    if k == gens.len() {
        let mut seen = vec![false; dst.order()];
        for &v in &partial {
            if v == usize::MAX || std::mem::replace(&mut seen[v], true) {
                return true;
            }
        }
        return visit(partial);
    }
    let image_span = subgroup_generated(dst, images);
    for &y in &candidates[k] {
        if image_span.contains(y) {
            continue;
        }
        images.push(y);
        let go_on = descend(src, dst, gens, candidates, images, visit);
        images.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// All automorphisms as image arrays, ordered lexicographically by the images
/// of the generating tuple.
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<Vec<Elem>>> {
    if g.order() > AUT_ORDER_CAP {
        return Err(Error::Guard(format!("automorphism enumeration needs |G| <= {AUT_ORDER_CAP}, got {}", g.order())));
    }
    let gens = generating_tuple(g);
    if gens.len() > AUT_GENERATOR_CAP {
        return Err(Error::Guard(format!(
            "automorphism enumeration needs at most {AUT_GENERATOR_CAP} generators, {} has {}",
            g.name(),
            gens.len()
        )));
    }
    let mut out = Vec::new();
    for_each_embedding(g, g, &gens, &mut |m| {
        out.push(m);
        true
    });
    Ok(out)
}

/// An isomorphism `a -> b` as an image array, if one exists.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<Elem>> {
    if a.order() != b.order() {
        return None;
    }
    let profile = |g: &FiniteGroup| {
        let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    };
    if profile(a) != profile(b) {
        return None;
    }
    let gens = generating_tuple(a);
    let mut found = None;
    for_each_embedding(a, b, &gens, &mut |m| {
        found = Some(m);
        false
    });
    found
}
