use std::sync::OnceLock;

use colouring_core::group::{automorphisms, build_from_spec, FiniteGroup};
use colouring_core::perm::{
    conj_by_automorphism, deltas, is_colouring_bijection, is_permutation, is_strong_complete_mapping, theta_conjugacy,
    Perm,
};
use colouring_core::search::{search, Mode, SearchConfig, Target};
use colouring_core::tables;
use proptest::prelude::*;
use proptest::test_runner::Config;

struct Fixture {
    group: FiniteGroup,
    /// Maps with many of the properties, so both sides of each equivalence get exercised.
    special: Vec<Perm>,
}

fn enumerate(g: &FiniteGroup, target: Target, limit: usize) -> Vec<Perm> {
    let config = SearchConfig::new(target, Mode::Enumerate(limit)).fix_identity(true);
    search(g, &config).unwrap().found
}

fn fixture(spec: &'static str) -> &'static Fixture {
    static C33: OnceLock<Fixture> = OnceLock::new();
    static C9: OnceLock<Fixture> = OnceLock::new();
    static H3: OnceLock<Fixture> = OnceLock::new();
    static M16: OnceLock<Fixture> = OnceLock::new();
    let cell = match spec {
        "C3xC3" => &C33,
        "C9" => &C9,
        "H3" => &H3,
        "M16" => &M16,
        _ => unreachable!(),
    };
    cell.get_or_init(|| {
        let group = build_from_spec(spec).unwrap();
        let special = match spec {
            "H3" => {
                let sigma = tables::h3_sigma();
                automorphisms(&group)
                    .unwrap()
                    .iter()
                    .map(|phi| conj_by_automorphism(&group, &sigma, &Perm::new(phi.clone()).unwrap()).unwrap())
                    .flat_map(|s| [s.inverse(), s])
                    .collect()
            }
            "C9" => enumerate(&group, Target::Cm, 500),
            _ => {
                let mut v = enumerate(&group, Target::Scm, 500);
                v.extend(v.iter().map(Perm::inverse).collect::<Vec<_>>());
                v
            }
        };
        assert!(!special.is_empty() || spec == "C9");
        Fixture { group, special }
    })
}

fn sigma_strategy(spec: &'static str) -> impl Strategy<Value = Perm> {
    let f = fixture(spec);
    let n = f.group.order();
    let random = Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::new(v).unwrap());
    if f.special.is_empty() {
        return random.boxed();
    }
    let special = (0..f.special.len()).prop_map(move |i| f.special[i].clone());
    prop_oneof![random, special].boxed()
}

fn config() -> Config {
    Config { cases: 1000, failure_persistence: None, ..Config::default() }
}

fn delta_identities(g: &FiniteGroup, sigma: &Perm) {
    let d = deltas(g, sigma);
    for x in g.elements() {
        assert_eq!(d.d3[x], g.mul(g.inv(x), d.d1[x]));
        assert_eq!(d.d3[x], g.mul(d.d2[x], x));
    }
}

fn part_one(g: &FiniteGroup, sigma: &Perm) -> bool {
    let d = deltas(g, sigma);
    (is_permutation(&d.d1) && is_permutation(&d.d2)) == is_strong_complete_mapping(g, &sigma.inverse())
}

fn theta_criterion(g: &FiniteGroup, sigma: &Perm) -> bool {
    let tau = sigma.inverse();
    is_colouring_bijection(g, sigma)
        == (is_strong_complete_mapping(g, &tau) && is_permutation(&theta_conjugacy(g, &tau)))
}

macro_rules! group_suite {
    ($name:ident, $spec:literal, abelian = $abelian:literal) => {
        mod $name {
            use super::*;

            proptest! {
                #![proptest_config(config())]

                #[test]
                fn delta_three_is_x_inverse_delta_one(sigma in sigma_strategy($spec)) {
                    delta_identities(&fixture($spec).group, &sigma);
                }

                #[test]
                fn abelian_cb_iff_scm(sigma in sigma_strategy($spec)) {
                    let g = &fixture($spec).group;
                    if $abelian {
                        prop_assert_eq!(is_colouring_bijection(g, &sigma), is_strong_complete_mapping(g, &sigma));
                        prop_assert_eq!(deltas(g, &sigma).d3, sigma.images().to_vec());
                    }
                }

                #[test]
                fn first_two_deltas_iff_inverse_is_scm(sigma in sigma_strategy($spec)) {
                    prop_assert!(part_one(&fixture($spec).group, &sigma));
                }

                #[test]
                fn cb_iff_inverse_scm_and_theta_bijective(sigma in sigma_strategy($spec)) {
                    prop_assert!(theta_criterion(&fixture($spec).group, &sigma));
                }
            }
        }
    };
}

group_suite!(c3xc3, "C3xC3", abelian = true);
group_suite!(c9, "C9", abelian = true);
group_suite!(h3, "H3", abelian = false);
group_suite!(m16, "M16", abelian = false);

#[test]
fn special_families_cover_both_verdicts() {
    let h3 = fixture("H3");
    let cbs = h3.special.iter().filter(|s| is_colouring_bijection(&h3.group, s)).count();
    assert_eq!(cbs, 432);
    let m16 = fixture("M16");
    assert!(m16.special.iter().any(|s| !is_colouring_bijection(&m16.group, s)));
    assert!(m16
        .special
        .iter()
        .all(|s| is_strong_complete_mapping(&m16.group, s) || is_strong_complete_mapping(&m16.group, &s.inverse())));
}
