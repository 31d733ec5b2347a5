//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use colouring_core::group::{build_from_spec, quotient, subgroup_generated, Elem, FiniteGroup, Label, SubgroupData};
use colouring_core::lifting::{colour, lift_c3c3, lift_c9c3, linear_c3c3, Lift};
use colouring_core::matrix::Matrix2F3;
use colouring_core::perm::{
    deltas, is_colouring_bijection, is_permutation, is_strong_complete_mapping, theta_conjugacy, Perm,
};
use colouring_core::perm_file::{read_perm_file, write_perm_file};
use colouring_core::search::{scm_census, search, Mode, SearchConfig, Target};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const M16_RATIO: (f64, f64) = (0.0212, 0.0222);
const PROPERTY_SAMPLES: usize = 1000;

struct Run {
    stdout: String,
    code: i32,
}

fn colouring(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_colouring")).args(args).output().expect("binary runs");
    Run { stdout: String::from_utf8_lossy(&out.stdout).into_owned(), code: out.status.code().unwrap_or(-1) }
}

impl Run {
    fn value(&self, key: &str) -> Option<&str> {
        let prefix = format!("{key}: ");
        self.stdout.lines().find_map(|l| l.strip_prefix(&prefix))
    }
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn el(g: &FiniteGroup, c: &[u32]) -> Elem {
    g.element_by_label(&Label(c.to_vec())).unwrap()
}

type Verdict = Result<String, String>;
/// Name, check, time limit in seconds.
type Criterion = (&'static str, fn() -> Verdict, u64);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Verdict {
    let r = colouring(&["tables", "verify"]);
    ensure(r.code == 0, format!("exit {}", r.code))?;
    ensure(r.value("all passed") == Some("yes"), "not all tables passed")?;
    ensure(r.value("tables") == Some("16"), "expected 16 table checks")?;
    Ok("16 table checks pass".into())
}

fn criterion_2() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for spec in ["H3", "L3"] {
        let out = dir.path().join(format!("{spec}.perm"));
        let start = Instant::now();
        let r = colouring(&[
            "search",
            "--group",
            spec,
            "--target",
            "cb",
            "--first",
            "--fix-identity",
            "--out",
            out.to_str().unwrap(),
        ]);
        let t = start.elapsed();
        ensure(r.code == 0, format!("{spec}: exit {}", r.code))?;
        ensure(t < Duration::from_secs(60), format!("{spec}: {t:?} over 60 s"))?;
        let (g, sigma) = read_perm_file(&out).map_err(|e| e.to_string())?;
        ensure(g.name() == spec && is_colouring_bijection(&g, &sigma), format!("{spec}: output fails the checker"))?;
        notes.push(format!("{spec} {:.1}s", t.as_secs_f64()));
    }
    Ok(notes.join(", "))
}

fn oracle_counts(g: &FiniteGroup) -> (usize, usize) {
    let (mut cb, mut scm) = (0, 0);
    for images in (0..g.order()).permutations(g.order()) {
        let sigma = Perm::new(images).unwrap();
        cb += usize::from(is_colouring_bijection(g, &sigma));
        scm += usize::from(is_strong_complete_mapping(g, &sigma));
    }
    (cb, scm)
}

fn criterion_3() -> Verdict {
    let g = build_from_spec("C3").unwrap();
    let cb = colouring(&["search", "--group", "C3", "--target", "cb", "--count"]);
    let scm = colouring(&["search", "--group", "C3", "--target", "scm", "--count"]);
    let oracle = oracle_counts(&g);
    ensure(cb.value("count") == Some("0") && scm.value("count") == Some("0"), "nonzero count on C3")?;
    ensure(oracle == (0, 0), format!("oracle gives {oracle:?}"))?;
    Ok("0 CB, 0 SCM; oracle over 6 permutations agrees".into())
}

fn criterion_4() -> Verdict {
    let g = build_from_spec("C3xC3").unwrap();
    let pruned = search(&g, &SearchConfig::new(Target::Cb, Mode::Count)).map_err(|e| e.to_string())?;
    let (oracle, _) = oracle_counts(&g);
    ensure(pruned.count == oracle as u64, format!("pruned {} vs oracle {oracle}", pruned.count))?;
    Ok(format!("{oracle} colouring bijections, both ways"))
}

fn criterion_5() -> Verdict {
    let mut notes = Vec::new();
    for (spec, file, size) in [("H3", "h3_sigma.perm", "432"), ("L3", "l3_sigma.perm", "54")] {
        let r = colouring(&["aut", "--group", spec, "--orbit", &data(file)]);
        ensure(r.code == 0, format!("{spec}: exit {}", r.code))?;
        ensure(r.value("automorphisms") == Some(size), format!("{spec}: |Aut| = {:?}", r.value("automorphisms")))?;
        ensure(r.value("orbit size") == Some(size), format!("{spec}: orbit {:?}", r.value("orbit size")))?;
        ensure(r.value("stabiliser order") == Some("1"), format!("{spec}: stabiliser not trivial"))?;
        ensure(r.value("colouring bijections in orbit") == Some(size), format!("{spec}: orbit member fails"))?;
        notes.push(format!("{spec} {size}"));
    }
    Ok(notes.join(", "))
}

fn quotient_cb(g: &FiniteGroup, h: &SubgroupData) -> Perm {
    let dec = quotient(g, h).unwrap();
    colour(&dec.quotient).unwrap().sigma().cloned().expect("quotient coloured")
}

fn amalgam_times_c3() -> (FiniteGroup, SubgroupData) {
    let big = build_from_spec("C9xH3").unwrap();
    let n = subgroup_generated(&big, &[el(&big, &[3, 0, 0, 2])]);
    let dec = quotient(&big, &n).unwrap();
    let g = FiniteGroup::direct_product(&dec.quotient, &build_from_spec("C3").unwrap()).unwrap();
    let c = dec.pi(el(&big, &[1, 0, 0, 0])) * 3;
    let x = dec.pi(el(&big, &[0, 1, 0, 0])) * 3;
    let h = subgroup_generated(&g, &[c, x]);
    (g, h)
}

fn criterion_6() -> Verdict {
    let check = |name: &str, g: &FiniteGroup, lift: colouring_core::Result<Lift>| -> Result<(), String> {
        let lift = lift.map_err(|e| format!("{name}: {e}"))?;
        ensure(is_colouring_bijection(g, &lift.sigma), format!("{name}: not a colouring bijection"))?;
        ensure(lift.layers.all(), format!("{name}: layer property fails {:?}", lift.layers))
    };
    let h3c3 = build_from_spec("H3xC3").unwrap();
    let z = el(&h3c3, &[0, 0, 1, 0]);
    let central = subgroup_generated(&h3c3, &[z, el(&h3c3, &[0, 0, 0, 1])]);
    check("(a)", &h3c3, lift_c3c3(&h3c3, &central, &quotient_cb(&h3c3, &central)))?;
    let noncentral = subgroup_generated(&h3c3, &[z, el(&h3c3, &[1, 0, 0, 1])]);
    check("(b)", &h3c3, lift_c3c3(&h3c3, &noncentral, &quotient_cb(&h3c3, &noncentral)))?;
    let l3 = build_from_spec("L3xC3xC3").unwrap();
    let h = subgroup_generated(&l3, &[el(&l3, &[1, 0, 0, 0]), el(&l3, &[0, 0, 1, 0])]);
    check("(c)", &l3, lift_c9c3(&l3, &h, &quotient_cb(&l3, &h)))?;
    let (g, h) = amalgam_times_c3();
    check("(d)", &g, lift_c9c3(&g, &h, &quotient_cb(&g, &h)))?;
    Ok("(a) (b) (c) (d) lift and keep the layer property".into())
}

fn criterion_7() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let c33 = build_from_spec("C3xC3").unwrap();
    let c33_file = dir.path().join("c33.perm");
    write_perm_file(&c33_file, &c33, &linear_c3c3(&c33, Matrix2F3::M1)).map_err(|e| e.to_string())?;
    let h3_file = data("h3_sigma.perm");
    let mut notes = Vec::new();
    for (spec, file, n, checks) in
        [("H3", h3_file.as_str(), "27", "3070548"), ("C3xC3", c33_file.to_str().unwrap(), "9", "34992")]
    {
        let r = colouring(&["graph", "check", "--group", spec, "--perm", file]);
        ensure(r.code == 0, format!("{spec}: exit {}", r.code))?;
        ensure(
            r.value("proper") == Some("yes") && r.value("clique verified") == Some("yes"),
            format!("{spec}: not certified"),
        )?;
        ensure(r.value("checks") == Some(checks), format!("{spec}: {:?} checks", r.value("checks")))?;
        ensure(r.value("chromatic number") == Some(n), format!("{spec}: chi {:?}", r.value("chromatic number")))?;
        notes.push(format!("chi({spec}) = {n}"));
    }
    Ok(notes.join(", "))
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3c0105);
    let mut total = 0;
    for spec in ["C3xC3", "C9", "H3", "M16"] {
        let g = build_from_spec(spec).unwrap();
        let n = g.order();
        // Known solutions keep the positive side of each equivalence in play.
        let family: Vec<Perm> = match spec {
            "C9" => Vec::new(),
            "H3" => vec![colouring_core::tables::h3_sigma()],
            _ => search(&g, &SearchConfig::new(Target::Scm, Mode::Enumerate(200)).fix_identity(true)).unwrap().found,
        };
        for i in 0..PROPERTY_SAMPLES {
            let sigma = if i % 2 == 1 && !family.is_empty() {
                let s = family.choose(&mut rng).unwrap();
                if i % 4 == 1 {
                    s.clone()
                } else {
                    s.inverse()
                }
            } else {
                let mut v: Vec<Elem> = (0..n).collect();
                v.shuffle(&mut rng);
                Perm::new(v).unwrap()
            };
            let d = deltas(&g, &sigma);
            for x in g.elements() {
                ensure(d.d3[x] == g.mul(g.inv(x), d.d1[x]), format!("{spec}: Δ3 ≠ x⁻¹Δ1 at {x}"))?;
            }
            let cb = is_colouring_bijection(&g, &sigma);
            let tau = sigma.inverse();
            let tau_scm = is_strong_complete_mapping(&g, &tau);
            if g.is_abelian() {
                ensure(cb == is_strong_complete_mapping(&g, &sigma), format!("{spec}: CB and SCM differ"))?;
            }
            ensure(
                (is_permutation(&d.d1) && is_permutation(&d.d2)) == tau_scm,
                format!("{spec}: Δ1, Δ2 bijective ⇎ σ⁻¹ SCM"),
            )?;
            ensure(
                cb == (tau_scm && is_permutation(&theta_conjugacy(&g, &tau))),
                format!("{spec}: θ criterion fails"),
            )?;
            total += 1;
        }
    }
    Ok(format!("{total} samples, 0 failures"))
}

fn criterion_9() -> Verdict {
    let g = build_from_spec("M16").unwrap();
    let c = scm_census(&g, None, false, 1).map_err(|e| e.to_string())?;
    ensure(c.exhausted, "census did not finish")?;
    let ratio = c.ratio.ok_or("no SCMs")?;
    ensure(
        (M16_RATIO.0..=M16_RATIO.1).contains(&ratio),
        format!("ratio {ratio:.6} outside [{}, {}]", M16_RATIO.0, M16_RATIO.1),
    )?;
    Ok(format!("{} / {} = {ratio:.6}", c.cb_count, c.scm_count))
}

fn criterion_10() -> Verdict {
    for spec in ["C3xC3", "C3xC3xC3", "C9xC3", "C9xC9", "H3", "L3", "H3xC3", "L3xC3"] {
        let r = colouring(&["colour", "--group", spec]);
        ensure(r.code == 0 && r.value("colouring bijection") == Some("yes"), format!("{spec}: exit {}", r.code))?;
    }
    for spec in ["C27", "L4", "L5"] {
        let r = colouring(&["colour", "--group", spec]);
        let status = r.value("status").unwrap_or("");
        ensure(r.code == 1 && status.starts_with("no construction known"), format!("{spec}: {status}"))?;
    }
    Ok("8 coloured, 3 without a known construction".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("table fidelity", criterion_1, 1),
        ("base-case search", criterion_2, 120),
        ("negative control", criterion_3, 1),
        ("oracle equivalence", criterion_4, 300),
        ("aut orbits", criterion_5, 120),
        ("lifting validity", criterion_6, 120),
        ("chromatic certificate", criterion_7, 60),
        ("property suites", criterion_8, 60),
        ("M16 census", criterion_9, 4 * 3600),
        ("end-to-end colour", criterion_10, 300),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let t = start.elapsed();
        let verdict = verdict.and_then(|note| {
            if t <= Duration::from_secs(*limit) {
                Ok(note)
            } else {
                Err(format!("took {:.1}s, limit {limit}s", t.as_secs_f64()))
            }
        });
        match verdict {
            Ok(note) => println!("criterion {:>2} PASS {name}: {note} ({:.2}s)", i + 1, t.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} ({:.2}s)", i + 1, t.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
