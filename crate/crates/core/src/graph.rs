//! The Cayley graph `𝒢₃(G) = Cay(G³, S₃)`, handled implicitly.
//!
//! `S₃` consists of `(g,e,e), (e,g,e), (e,e,g), (g,g,e), (e,g,g), (g,g,g)`
//! for `g ≠ e`; a vertex `v` is adjacent to `s·v` for every `s ∈ S₃`.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::{is_colouring_bijection, Perm};

/// Largest group for which [`verify_proper`] runs.
pub const GRAPH_ORDER_CAP: usize = 81;
/// Largest group for which the edge list is exported.
pub const DIMACS_ORDER_CAP: usize = 9;

/// Supports of the six generator patterns.
pub const PATTERNS: [[bool; 3]; 6] = [
    [true, false, false],
    [false, true, false],
    [false, false, true],
    [true, true, false],
    [false, true, true],
    [true, true, true],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
}

impl Vertex {
    pub fn new(x: Elem, y: Elem, z: Elem) -> Self {
        Vertex { x, y, z }
    }

    fn index(self, n: usize) -> usize {
        (self.x * n + self.y) * n + self.z
    }

    fn from_index(i: usize, n: usize) -> Self {
        Vertex { x: i / (n * n), y: (i / n) % n, z: i % n }
    }
}

/// The `6(n−1)` neighbours of `v`, pattern by pattern, `g` ascending.
pub fn neighbors(g: &FiniteGroup, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
    PATTERNS.iter().flat_map(move |p| {
        (1..g.order()).map(move |s| {
            let m = |on: bool, c: Elem| if on { g.mul(s, c) } else { c };
            Vertex { x: m(p[0], v.x), y: m(p[1], v.y), z: m(p[2], v.z) }
        })
    })
}

/// `u` and `v` are adjacent iff `v·u⁻¹` (componentwise) lies in `S₃`.
pub fn adjacent(g: &FiniteGroup, u: Vertex, v: Vertex) -> bool {
    let d = [g.mul(v.x, g.inv(u.x)), g.mul(v.y, g.inv(u.y)), g.mul(v.z, g.inv(u.z))];
    let s = d.iter().copied().find(|&c| c != 0);
    match s {
        None => false,
        Some(s) => PATTERNS.iter().any(|p| (0..3).all(|i| d[i] == if p[i] { s } else { 0 })),
    }
}

/// `c(x, y, z) = x⁻¹σ(y)z`.
pub fn colour_value(g: &FiniteGroup, sigma: &Perm, v: Vertex) -> Elem {
    g.mul(g.inv(v.x), g.mul(sigma.apply(v.y), v.z))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub colour: Elem,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChromaticCertificate {
    pub group: String,
    pub order: usize,
    pub sigma: Perm,
    pub sigma_is_colouring_bijection: bool,
    pub vertices: usize,
    /// Ordered adjacent pairs compared.
    pub checks: u64,
    pub colours_used: usize,
    /// Every colour class has `n²` vertices.
    pub classes_uniform: bool,
    pub clique: Vec<Vertex>,
    pub clique_verified: bool,
    pub proper: bool,
    /// Lexicographically least `(u, v)` with equal colours.
    pub first_violation: Option<Violation>,
    /// `χ(𝒢₃(G))` when the colouring is proper and the clique checks out.
    pub conclusion: Option<usize>,
}

/// Checks every ordered adjacent pair for a colour clash. The vertex range is
/// split by `x` across `jobs` workers; the reported violation is the global
/// lexicographic minimum, so the result does not depend on `jobs`.
pub fn verify_proper(g: &FiniteGroup, sigma: &Perm, jobs: usize) -> Result<ChromaticCertificate> {
    let n = g.order();
    if n > GRAPH_ORDER_CAP {
        return Err(Error::Guard(format!("graph check needs |G| <= {GRAPH_ORDER_CAP}, got {n}")));
    }
    sigma.check_len(g)?;
    let total = n * n * n;
    let colours: Vec<Elem> = (0..total).map(|i| colour_value(g, sigma, Vertex::from_index(i, n))).collect();

    let scan = |xs: std::ops::Range<Elem>| -> Option<Violation> {
        for i in xs.start * n * n..xs.end * n * n {
            let u = Vertex::from_index(i, n);
            let c = colours[i];
            let bad = neighbors(g, u).filter(|v| colours[v.index(n)] == c).min();
            if let Some(v) = bad {
                return Some(Violation { u, v, colour: c });
            }
        }
        None
    };
    let jobs = jobs.max(1).min(n);
    let first_violation = if jobs == 1 {
        scan(0..n)
    } else {
        let chunk = n.div_ceil(jobs);
        let ranges: Vec<_> = (0..n).step_by(chunk).map(|s| s..(s + chunk).min(n)).collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
        pool.install(|| ranges.into_par_iter().map(scan).collect::<Vec<_>>())
            .into_iter()
            .flatten()
            .min_by_key(|w| (w.u, w.v))
    };

    let mut sizes = vec![0usize; n];
    for &c in &colours {
        sizes[c] += 1;
    }
    let colours_used = sizes.iter().filter(|&&s| s > 0).count();
    let classes_uniform = sizes.iter().all(|&s| s == n * n);
    let clique: Vec<Vertex> = g.elements().map(|x| Vertex::new(x, 0, 0)).collect();
    let clique_verified = clique
        .iter()
        .enumerate()
        .all(|(i, &u)| clique[i + 1..].iter().all(|&v| adjacent(g, u, v) && adjacent(g, v, u)));
    let proper = first_violation.is_none();
    Ok(ChromaticCertificate {
        group: g.name().to_string(),
        order: n,
        sigma: sigma.clone(),
        sigma_is_colouring_bijection: is_colouring_bijection(g, sigma),
        vertices: total,
        checks: (total * 6 * (n - 1)) as u64,
        colours_used,
        classes_uniform,
        clique,
        clique_verified,
        proper,
        first_violation,
        conclusion: (proper && clique_verified && colours_used == n).then_some(n),
    })
}

/// Writes the edge list of `𝒢₃(G)` in DIMACS format (vertices `1..=n³`,
/// vertex `(x, y, z)` numbered `x·n² + y·n + z + 1`).
pub fn write_dimacs(g: &FiniteGroup, out: &mut impl Write) -> Result<()> {
    let n = g.order();
    if n > DIMACS_ORDER_CAP {
        return Err(Error::Guard(format!("DIMACS export needs |G| <= {DIMACS_ORDER_CAP}, got {n}")));
    }
    let total = n * n * n;
    let edges = total * 6 * (n - 1) / 2;
    writeln!(out, "c G3({})", g.name())?;
    writeln!(out, "p edge {total} {edges}")?;
    for i in 0..total {
        let u = Vertex::from_index(i, n);
        let mut higher: Vec<usize> = neighbors(g, u).map(|v| v.index(n)).filter(|&j| j > i).collect();
        higher.sort_unstable();
        for j in higher {
            writeln!(out, "e {} {}", i + 1, j + 1)?;
        }
    }
    Ok(())
}
