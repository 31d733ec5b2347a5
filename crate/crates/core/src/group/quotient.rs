use super::{is_normal, Elem, FiniteGroup, SubgroupData};
use crate::error::{Error, Result};

/// `G = ⊔ H t` over a transversal `T`, with the quotient `G/H` realised as its
/// own table. Quotient index `q` is represented by `transversal[q]`, the least
/// element index of its coset, and quotient indices follow representative order.
#[derive(Clone, Debug)]
pub struct CosetDecomposition<'g> {
    pub parent: &'g FiniteGroup,
    pub subgroup: SubgroupData,
    pub transversal: Vec<Elem>,
    pub quotient: FiniteGroup,
    coset_of: Vec<usize>,
}

impl<'g> CosetDecomposition<'g> {
    /// Natural projection `G -> G/H`.
    #[inline]
    pub fn pi(&self, g: Elem) -> usize {
        self.coset_of[g]
    }

    /// Section `G/H -> T`.
    #[inline]
    pub fn tau(&self, q: usize) -> Elem {
        self.transversal[q]
    }

    /// The unique `(h, t)` with `h ∈ H`, `t ∈ T` and `g = h t`.
    #[inline]
    pub fn decompose(&self, g: Elem) -> (Elem, Elem) {
        let t = self.tau(self.pi(g));
        (self.parent.mul(g, self.parent.inv(t)), t)
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }
}

pub fn quotient<'g>(g: &'g FiniteGroup, h: &SubgroupData) -> Result<CosetDecomposition<'g>> {
    if !is_normal(g, h) {
        return Err(Error::NotNormal(g.name().to_string()));
    }
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut transversal = Vec::with_capacity(n / h.order());
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let q = transversal.len();
        transversal.push(x);
        for &s in &h.elements {
            coset_of[g.mul(s, x)] = q;
        }
    }
    let m = transversal.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &transversal {
        for &b in &transversal {
            table.push(coset_of[g.mul(a, b)]);
        }
    }
    let labels = transversal.iter().map(|&t| g.label(t).clone()).collect();
    let gens = h.generators.iter().map(|&s| g.label(s).to_string()).collect::<Vec<_>>().join(",");
    let quotient = FiniteGroup::from_table(format!("{}/<{}>", g.name(), gens), table, labels)?;
    Ok(CosetDecomposition { parent: g, subgroup: h.clone(), transversal, quotient, coset_of })
}
