use super::{Elem, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupData {
    /// Sorted element indices.
    pub elements: Vec<Elem>,
    pub generators: Vec<Elem>,
}

impl SubgroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of `g` in the sorted element list.
    pub fn position(&self, g: Elem) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_subset_of(&self, other: &SubgroupData) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }
}

pub fn center(g: &FiniteGroup) -> SubgroupData {
    let elements: Vec<Elem> = g.elements().filter(|&a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a))).collect();
    SubgroupData { generators: elements.clone(), elements }
}

/// Smallest subgroup containing `gens`; an empty list yields the trivial subgroup.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[Elem]) -> SubgroupData {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                queue.push(y);
            }
        }
    }
    SubgroupData {
        elements: member.iter().enumerate().filter_map(|(i, &m)| m.then_some(i)).collect(),
        generators: gens.to_vec(),
    }
}

pub fn is_normal(g: &FiniteGroup, h: &SubgroupData) -> bool {
    g.elements().all(|x| h.elements.iter().all(|&s| h.contains(g.conj(x, s))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_from_spec, Label};

    fn el(g: &FiniteGroup, coords: &[u32]) -> Elem {
        g.element_by_label(&Label(coords.to_vec())).unwrap()
    }

    #[test]
    fn centers() {
        let c9 = build_from_spec("C9").unwrap();
        assert_eq!(center(&c9).order(), 9);

        let h3 = build_from_spec("H3").unwrap();
        let z = center(&h3);
        let labels: Vec<_> = z.elements.iter().map(|&e| h3.label(e).0.clone()).collect();
        assert_eq!(labels, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 2]]);

        // b a b^-1 = a^10 in L4, so a^i is central exactly when 3 | i
        let l4 = build_from_spec("L4").unwrap();
        let z = center(&l4);
        assert_eq!(z.order(), 9);
        assert_eq!(z.elements, subgroup_generated(&l4, &[el(&l4, &[3, 0])]).elements);
    }

    #[test]
    fn generated_subgroups() {
        let h3 = build_from_spec("H3").unwrap();
        assert_eq!(subgroup_generated(&h3, &[el(&h3, &[0, 0, 1])]).order(), 3);
        assert_eq!(subgroup_generated(&h3, &[el(&h3, &[1, 0, 0]), el(&h3, &[0, 1, 0])]).order(), 27);

        let l3 = build_from_spec("L3").unwrap();
        let s = subgroup_generated(&l3, &[el(&l3, &[3, 0]), el(&l3, &[0, 1])]);
        assert_eq!(s.order(), 9);
        assert!(s.elements.iter().all(|&x| l3.element_order(x) <= 3));
    }

    #[test]
    fn normality() {
        let h3 = build_from_spec("H3").unwrap();
        assert!(is_normal(&h3, &center(&h3)));
        let x = el(&h3, &[1, 0, 0]);
        let z = el(&h3, &[0, 0, 1]);
        assert!(!is_normal(&h3, &subgroup_generated(&h3, &[x])));
        assert!(is_normal(&h3, &subgroup_generated(&h3, &[x, z])));

        let l3 = build_from_spec("L3").unwrap();
        let s = subgroup_generated(&l3, &[el(&l3, &[3, 0]), el(&l3, &[0, 1])]);
        assert!(is_normal(&l3, &s));
    }
}
