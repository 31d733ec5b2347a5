//! Finite groups as explicit multiplication tables.
//!
//! Every group is stored as a full `n x n` Cayley table with the identity at
//! index 0. Elements carry coordinate labels in the mixed-radix notation of
//! the family constructors (for `H3` the label `(i,j,k)` means `x^i y^j z^k`),
//! and element indices enumerate labels lexicographically.

mod morphism;
mod quotient;
mod spec;
mod structure;
mod subgroup;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub use morphism::{automorphisms, find_isomorphism, generating_tuple, AUT_ORDER_CAP};
pub use quotient::{quotient, CosetDecomposition};
pub use spec::build_from_spec;
pub use structure::{
    classify, conjugation_params, enumerate_lifting_subgroups, is_three_group, split_c9c3, C9C3Split, Classification,
    ConjugationParams, LiftingKind, LiftingSubgroup,
};
pub use subgroup::{center, is_normal, subgroup_generated, SubgroupData};

/// Element index into a group's table.
pub type Elem = usize;

/// Largest order for which a table is built (the table holds `n^2` entries).
pub const ORDER_CAP: usize = 2187;

/// A coordinate label such as `(1,0,2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(pub Vec<u32>);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("label `{s}` is not of the form (a,b,...)"))?;
        inner
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|e| format!("label `{s}`: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Label)
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    orders: Vec<u32>,
    labels: Vec<Label>,
    by_label: HashMap<Label, Elem>,
}

impl FiniteGroup {
    /// Builds a group from a full table, checking identity, inverses and the
    /// Latin property. Associativity is not checked here (it is `O(n^3)`);
    /// see [`FiniteGroup::check_axioms`].
    pub fn from_table(name: impl Into<String>, table: Vec<Elem>, labels: Vec<Label>) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if order > ORDER_CAP {
            return Err(Error::TooLarge { order, cap: ORDER_CAP });
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!("table has {} entries, expected {}", table.len(), order * order)));
        }
        let name = name.into();
        let mut inv = vec![u16::MAX; order];
        let mut row_seen = vec![false; order];
        for a in 0..order {
            row_seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                let p = table[a * order + b];
                if p >= order || row_seen[p] {
                    return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
                }
                row_seen[p] = true;
                if p == 0 {
                    inv[a] = b as u16;
                }
            }
            if table[a] != a || table[a * order] != a {
                return Err(Error::InvalidTable(format!("index 0 is not an identity at {a}")));
            }
        }
        for b in 0..order {
            row_seen.iter_mut().for_each(|s| *s = false);
            for a in 0..order {
                let p = table[a * order + b];
                if row_seen[p] {
                    return Err(Error::InvalidTable(format!("column {b} is not a permutation")));
                }
                row_seen[p] = true;
            }
        }
        for a in 0..order {
            if table[inv[a] as usize * order + a] != 0 {
                return Err(Error::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
        }

        let table: Vec<u16> = table.into_iter().map(|x| x as u16).collect();
        let mut orders = vec![0u32; order];
        for (g, slot) in orders.iter_mut().enumerate() {
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                x = table[x * order + g] as usize;
                k += 1;
            }
            *slot = if g == 0 { 1 } else { k };
        }
        let by_label = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect::<HashMap<_, _>>();
        if by_label.len() != order {
            return Err(Error::InvalidTable("duplicate element labels".into()));
        }
        Ok(FiniteGroup { name, order, table, inv, orders, labels, by_label })
    }

    /// Builds a group on the mixed-radix coordinate space `radices`, with
    /// elements indexed lexicographically.
    pub fn from_coordinates(
        name: impl Into<String>,
        radices: &[u32],
        mul: impl Fn(&[u32], &[u32]) -> Vec<u32>,
    ) -> Result<Self> {
        let order = radices.iter().try_fold(1usize, |acc, &r| {
            let next = acc.saturating_mul(r as usize);
            (next <= ORDER_CAP).then_some(next).ok_or(Error::TooLarge { order: next, cap: ORDER_CAP })
        })?;
        let labels: Vec<Label> = (0..order).map(|i| Label(decode_mixed(i, radices))).collect();
        let mut table = Vec::with_capacity(order * order);
        for a in &labels {
            for b in &labels {
                let c: Vec<u32> = mul(&a.0, &b.0).iter().zip(radices).map(|(&x, &r)| x % r).collect();
                table.push(encode_mixed(&c, radices));
            }
        }
        Self::from_table(name, table, labels)
    }

    /// Direct product with lexicographic indexing `(a, b) -> a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let order = a.order * b.order;
        if order > ORDER_CAP {
            return Err(Error::TooLarge { order, cap: ORDER_CAP });
        }
        let nb = b.order;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                table.push(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
            }
        }
        let labels = (0..order)
            .map(|x| {
                let mut l = a.labels[x / nb].0.clone();
                l.extend_from_slice(&b.labels[x % nb].0);
                Label(l)
            })
            .collect();
        Self::from_table(format!("{}x{}", a.name, b.name), table, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    /// `g h g^-1`
    #[inline]
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn pow(&self, g: Elem, k: i64) -> Elem {
        let ord = self.element_order(g) as i64;
        let k = k.rem_euclid(ord);
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: Elem) -> usize {
        self.orders[g] as usize
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn label(&self, g: Elem) -> &Label {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &Label) -> Option<Elem> {
        self.by_label.get(label).copied()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive check of all group axioms, associativity included.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(Error::InvalidTable(format!("bad inverse at {a}")));
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn decode_mixed(mut index: usize, radices: &[u32]) -> Vec<u32> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = (index % r as usize) as u32;
        index /= r as usize;
    }
    out
}

pub(crate) fn encode_mixed(coords: &[u32], radices: &[u32]) -> usize {
    coords.iter().zip(radices).fold(0usize, |acc, (&c, &r)| acc * r as usize + c as usize)
}
