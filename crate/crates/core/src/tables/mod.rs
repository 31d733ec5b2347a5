//! Embedded reference tables and their verification.
//!
//! * `H3_ROWS`, `L3_ROWS`: colouring bijections of `H3` and `L3` with their
//!   three Δ columns.
//! * `ALPHA_ROWS`: maps `α0, α1, α2` on `Z9 × Z3` together with `Δ1α0`, `Δ2α0`,
//!   `Δ2αλ` and `Tλ(h) = λj·z + h + αλ(h)`, `z = (3,0)`, `h = (u,j)`.
//! * `F_ROWS` and the derived `A_ROWS`, `B_ROWS`, `C_ROWS`: the maps `f(λ,ℓ)` on
//!   `Z9 × Z3` with `q(j,m) = (3λj, ℓj)`, `A = q + h + f`, `B = f − h`, `C = q + f`.
//! * `TWISTED_ALPHA_ROWS`: replacements `α'1`, `α'2` used by the `C9 × C3` lift
//!   with a central element of order 9 (see [`crate::lifting`]).
//!
//! All `Z9 × Z3` data is in additive coordinates and indexed like the group
//! `C9xC3`: pair `(a, b)` has index `3a + b`.

mod data;

use serde::Serialize;

use crate::group::{build_from_spec, Elem, FiniteGroup, Label};
use crate::perm::{deltas, is_permutation, Perm};

pub use data::{ALPHA_ROWS, A_ROWS, B_ROWS, C_ROWS, F_ROWS, H3_ROWS, L3_ROWS, TWISTED_ALPHA_ROWS};

/// Index of `(a, b)` in `Z9 × Z3`.
#[inline]
pub fn pair_index(p: [u8; 2]) -> usize {
    p[0] as usize * 3 + p[1] as usize
}

#[inline]
pub fn pair_of(i: usize) -> [u8; 2] {
    [(i / 3) as u8, (i % 3) as u8]
}

pub fn pair_add(p: [u8; 2], q: [u8; 2]) -> [u8; 2] {
    [(p[0] + q[0]) % 9, (p[1] + q[1]) % 3]
}

pub fn pair_neg(p: [u8; 2]) -> [u8; 2] {
    [(9 - p[0]) % 9, (3 - p[1]) % 3]
}

/// Column `col` of a `Z9 × Z3` table as an index map.
fn pair_column<const W: usize>(rows: &[[[u8; 2]; W]; 27], col: usize) -> [usize; 27] {
    let mut out = [usize::MAX; 27];
    for row in rows {
        out[pair_index(row[0])] = pair_index(row[col]);
    }
    out
}

fn h3_index(p: [u8; 3]) -> usize {
    p[0] as usize * 9 + p[1] as usize * 3 + p[2] as usize
}

fn l3_index(p: [u8; 2]) -> usize {
    p[0] as usize * 3 + p[1] as usize
}

fn column<T: Copy, const W: usize>(rows: &[[T; W]; 27], col: usize, index: impl Fn(T) -> usize) -> Vec<Elem> {
    let mut out = vec![usize::MAX; 27];
    for row in rows {
        out[index(row[0])] = index(row[col]);
    }
    out
}

/// The reference colouring bijection of `H3`, on the indices of `build_from_spec("H3")`.
pub fn h3_sigma() -> Perm {
    Perm::new(column(&H3_ROWS, 1, h3_index)).expect("reference table is a bijection")
}

/// The reference colouring bijection of `L3`, on the indices of `build_from_spec("L3")`.
pub fn l3_sigma() -> Perm {
    Perm::new(column(&L3_ROWS, 1, l3_index)).expect("reference table is a bijection")
}

/// `αλ` exactly as tabulated.
pub fn alpha(lambda: usize) -> [usize; 27] {
    pair_column(&ALPHA_ROWS, [1, 4, 6][lambda])
}

/// `α0` followed by the replacements `α'1`, `α'2`.
pub fn twisted_alpha(lambda: usize) -> [usize; 27] {
    match lambda {
        0 => alpha(0),
        _ => pair_column(&TWISTED_ALPHA_ROWS, lambda),
    }
}

/// `f(λ, ℓ)`.
pub fn f_map(lambda: usize, ell: usize) -> [usize; 27] {
    pair_column(&F_ROWS, 1 + 3 * lambda + ell)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCheck {
    pub table: String,
    pub passed: bool,
    /// First failure, naming row, expected and found values.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub checks: Vec<TableCheck>,
}

impl TableReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Collects the first failure of one table.
struct Checker {
    table: String,
    failure: Option<String>,
}

impl Checker {
    fn new(table: impl Into<String>) -> Self {
        Checker { table: table.into(), failure: None }
    }

    fn expect_eq(&mut self, what: &str, row: &str, expected: &str, got: &str) {
        if self.failure.is_none() && expected != got {
            self.failure = Some(format!("{what}, row {row}: expected {expected}, got {got}"));
        }
    }

    fn expect_perm(&mut self, what: &str, images: &[usize]) {
        if self.failure.is_none() && !is_permutation(images) {
            self.failure = Some(format!("{what} is not a bijection"));
        }
    }

    fn expect_domain(&mut self, inputs: impl Iterator<Item = usize>) {
        let inputs: Vec<usize> = inputs.collect();
        if self.failure.is_none() && (inputs.len() != 27 || !is_permutation(&inputs)) {
            self.failure = Some("input column does not list all 27 elements once".into());
        }
    }

    fn finish(self) -> TableCheck {
        TableCheck { table: self.table, passed: self.failure.is_none(), detail: self.failure }
    }
}

fn pair_str(p: [u8; 2]) -> String {
    format!("({},{})", p[0], p[1])
}

fn check_group_table<T: Copy>(
    name: &str,
    g: &FiniteGroup,
    rows: &[[T; 5]; 27],
    label: impl Fn(T) -> Label,
) -> TableCheck {
    let mut ck = Checker::new(name);
    let index = |p: T| g.element_by_label(&label(p)).expect("table coordinates are group labels");
    ck.expect_domain(rows.iter().map(|r| index(r[0])));
    let sigma_images = column(rows, 1, index);
    if !is_permutation(&sigma_images) {
        ck.expect_perm("σ", &sigma_images);
        return ck.finish();
    }
    let d = deltas(g, &Perm::new(sigma_images).expect("checked above"));
    for row in rows {
        let x = index(row[0]);
        let row_name = g.label(x).to_string();
        for (k, computed) in [(2, &d.d1), (3, &d.d2), (4, &d.d3)] {
            ck.expect_eq(
                &format!("Δ{}", k - 1),
                &row_name,
                &g.label(computed[x]).to_string(),
                &label(row[k]).to_string(),
            );
        }
    }
    for k in 2..5 {
        ck.expect_perm(&format!("Δ{}", k - 1), &column(rows, k, index));
    }
    ck.finish()
}

const Z: [u8; 2] = [3, 0];

fn scale(p: [u8; 2], k: u8) -> [u8; 2] {
    (0..k).fold([0, 0], |acc, _| pair_add(acc, p))
}

fn check_alpha0() -> TableCheck {
    let mut ck = Checker::new("alpha0");
    ck.expect_domain(ALPHA_ROWS.iter().map(|r| pair_index(r[0])));
    for row in &ALPHA_ROWS {
        let (h, a) = (row[0], row[1]);
        ck.expect_eq("Δ1α0", &pair_str(h), &pair_str(pair_add(a, h)), &pair_str(row[2]));
        ck.expect_eq("Δ2α0", &pair_str(h), &pair_str(pair_add(a, pair_neg(h))), &pair_str(row[3]));
    }
    for (what, col) in [("α0", 1), ("Δ1α0", 2), ("Δ2α0", 3)] {
        ck.expect_perm(what, &pair_column(&ALPHA_ROWS, col));
    }
    ck.finish()
}

/// `λ ∈ {1, 2}`: the `Δ2` and `T` columns.
fn check_alpha(lambda: u8) -> TableCheck {
    let mut ck = Checker::new(format!("alpha{lambda}"));
    let (a_col, d_col, t_col) = if lambda == 1 { (4, 5, 8) } else { (6, 7, 9) };
    for row in &ALPHA_ROWS {
        let (h, a) = (row[0], row[a_col]);
        ck.expect_eq(&format!("Δ2α{lambda}"), &pair_str(h), &pair_str(pair_add(a, pair_neg(h))), &pair_str(row[d_col]));
        let t = pair_add(pair_add(scale(Z, lambda * h[1]), h), a);
        ck.expect_eq(&format!("T{lambda}"), &pair_str(h), &pair_str(t), &pair_str(row[t_col]));
    }
    for (what, col) in [("α", a_col), ("Δ2α", d_col), ("T", t_col)] {
        ck.expect_perm(&format!("{what} (λ={lambda})"), &pair_column(&ALPHA_ROWS, col));
    }
    ck.finish()
}

/// `h ↦ λj·z + α(h)`, the map the order-9 case needs besides `T` and `Δ2`.
pub fn twisted_image(lambda: u8, alpha_map: &[usize; 27]) -> [usize; 27] {
    std::array::from_fn(|i| {
        let h = pair_of(i);
        pair_index(pair_add(scale(Z, lambda * h[1]), pair_of(alpha_map[i])))
    })
}

fn check_replacement(lambda: u8) -> TableCheck {
    let mut ck = Checker::new(format!("alpha'{lambda}"));
    ck.expect_domain(TWISTED_ALPHA_ROWS.iter().map(|r| pair_index(r[0])));
    let a = twisted_alpha(lambda as usize);
    let delta2: Vec<usize> = (0..27).map(|i| pair_index(pair_add(pair_of(a[i]), pair_neg(pair_of(i))))).collect();
    let t: Vec<usize> = (0..27)
        .map(|i| {
            let h = pair_of(i);
            pair_index(pair_add(pair_add(scale(Z, lambda * h[1]), h), pair_of(a[i])))
        })
        .collect();
    ck.expect_perm("α'", &a);
    ck.expect_perm("Δ2α'", &delta2);
    ck.expect_perm("T'", &t);
    ck.expect_perm("λj·z + α'", &twisted_image(lambda, &a));
    ck.finish()
}

fn check_f(lambda: u8, ell: u8) -> TableCheck {
    let mut ck = Checker::new(format!("f({lambda},{ell})"));
    let col = 1 + 3 * lambda as usize + ell as usize;
    ck.expect_domain(F_ROWS.iter().map(|r| pair_index(r[0])));
    let lookup = |rows: &[[[u8; 2]; 10]; 27], h: [u8; 2]| rows.iter().find(|r| r[0] == h).map(|r| r[col]);
    for row in &F_ROWS {
        let (h, f) = (row[0], row[col]);
        let q = [(3 * lambda * h[0]) % 9, (ell * h[0]) % 3];
        let a = pair_add(pair_add(q, h), f);
        let b = pair_add(pair_neg(h), f);
        let c = pair_add(q, f);
        for (name, rows, computed) in [("A", &A_ROWS, a), ("B", &B_ROWS, b), ("C", &C_ROWS, c)] {
            let got = lookup(rows, h).map_or_else(|| "missing row".to_string(), pair_str);
            ck.expect_eq(name, &pair_str(h), &pair_str(computed), &got);
        }
    }
    ck.expect_perm("f", &pair_column(&F_ROWS, col));
    for (name, rows) in [("A", &A_ROWS), ("B", &B_ROWS), ("C", &C_ROWS)] {
        ck.expect_perm(name, &pair_column(rows, col));
    }
    ck.finish()
}

/// Recomputes every derived column of every table and checks that all
/// columns are bijections.
pub fn verify_tables() -> TableReport {
    let h3 = build_from_spec("H3").expect("H3");
    let l3 = build_from_spec("L3").expect("L3");
    let mut checks = vec![
        check_group_table("H3 sigma", &h3, &H3_ROWS, |p| Label(p.map(u32::from).to_vec())),
        check_group_table("L3 sigma", &l3, &L3_ROWS, |p| Label(p.map(u32::from).to_vec())),
        check_alpha0(),
        check_alpha(1),
        check_alpha(2),
    ];
    for lambda in 0..3 {
        for ell in 0..3 {
            checks.push(check_f(lambda, ell));
        }
    }
    checks.push(check_replacement(1));
    checks.push(check_replacement(2));
    TableReport { checks }
}

/// One named map per table column, on the group it acts on.
pub struct ExportedMap {
    pub file_stem: String,
    pub group_spec: &'static str,
    pub images: Vec<Elem>,
}

/// Every tabulated column as a permutation of its group, for writing to disk.
pub fn exported_maps() -> Vec<ExportedMap> {
    let mut out = Vec::new();
    let mut push = |stem: String, spec: &'static str, images: Vec<Elem>| {
        out.push(ExportedMap { file_stem: stem, group_spec: spec, images });
    };
    for (k, name) in ["sigma", "delta1", "delta2", "delta3"].iter().enumerate() {
        push(format!("h3_{name}"), "H3", column(&H3_ROWS, k + 1, h3_index));
        push(format!("l3_{name}"), "L3", column(&L3_ROWS, k + 1, l3_index));
    }
    let alpha_names =
        ["alpha0", "alpha0_delta1", "alpha0_delta2", "alpha1", "alpha1_delta2", "alpha2", "alpha2_delta2", "t1", "t2"];
    for (k, name) in alpha_names.iter().enumerate() {
        push(name.to_string(), "C9xC3", pair_column(&ALPHA_ROWS, k + 1).to_vec());
    }
    for lambda in 0..3 {
        for ell in 0..3 {
            let col = 1 + 3 * lambda + ell;
            for (prefix, rows) in [("f", &F_ROWS), ("a", &A_ROWS), ("b", &B_ROWS), ("c", &C_ROWS)] {
                push(format!("{prefix}_{lambda}{ell}"), "C9xC3", pair_column(rows, col).to_vec());
            }
        }
    }
    for lambda in 1..3 {
        push(format!("alpha{lambda}_replacement"), "C9xC3", twisted_alpha(lambda).to_vec());
    }
    out
}
