use serde::Serialize;

use super::lifts::{lift_c3c3, lift_c9c3, linear_c3c3, Lift};
use crate::error::{Error, Result};
use crate::group::{
    build_from_spec, classify, enumerate_lifting_subgroups, find_isomorphism, is_three_group, quotient, Classification,
    FiniteGroup, LiftingKind,
};
use crate::matrix::Matrix2F3;
use crate::perm::{is_colouring_bijection, Perm};
use crate::search::{search, Mode, SearchConfig, Target};
use crate::tables;

/// Largest group accepted by [`colour`].
pub const COLOUR_ORDER_CAP: usize = 243;
/// Node budget of the search used when no lift applies.
pub const FALLBACK_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub depth: usize,
    pub group: String,
    pub order: usize,
    pub classification: String,
    pub method: String,
    /// Generator labels of the subgroup lifted over.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layers_hold: Option<bool>,
    pub verified: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum ColourOutcome {
    Coloured { sigma: Perm },
    NoConstructionKnown { reason: String },
    SearchExhausted { nodes: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct ColourReport {
    pub outcome: ColourOutcome,
    pub trace: Vec<TraceStep>,
}

impl ColourReport {
    pub fn sigma(&self) -> Option<&Perm> {
        match &self.outcome {
            ColourOutcome::Coloured { sigma } => Some(sigma),
            _ => None,
        }
    }
}

/// Colours a 3-group: stored bases up to order 27, otherwise a lift over a
/// normal `C3 × C3` or `C9 × C3` whose quotient is coloured recursively, and
/// a budgeted search as the last resort. Cyclic groups and `L_r` with
/// `r >= 4` are reported as having no known construction.
pub fn colour(g: &FiniteGroup) -> Result<ColourReport> {
    if g.order() > COLOUR_ORDER_CAP {
        return Err(Error::Guard(format!("colour needs |G| <= {COLOUR_ORDER_CAP}, got {}", g.order())));
    }
    if !is_three_group(g) {
        return Err(Error::Guard(format!("colour needs a 3-group, {} has order {}", g.name(), g.order())));
    }
    let mut trace = Vec::new();
    let outcome = colour_at(g, 0, &mut trace)?;
    if let ColourOutcome::Coloured { sigma } = &outcome {
        if !is_colouring_bijection(g, sigma) {
            return Err(Error::Invariant("colour produced a map that fails the check".into()));
        }
    }
    Ok(ColourReport { outcome, trace })
}

fn step(g: &FiniteGroup, depth: usize, class: &Classification, method: impl Into<String>) -> TraceStep {
    TraceStep {
        depth,
        group: g.name().to_string(),
        order: g.order(),
        classification: class.to_string(),
        method: method.into(),
        subgroup: None,
        case: None,
        layers_hold: None,
        verified: None,
    }
}

/// The stored colouring bijection for groups of order at most 27.
fn base(g: &FiniteGroup, class: &Classification) -> Result<Option<(Perm, &'static str)>> {
    let (spec, sigma, name): (&str, fn(&FiniteGroup) -> Perm, &'static str) = match (g.order(), class) {
        (9, Classification::Abelian(_)) => ("C3xC3", |b| linear_c3c3(b, Matrix2F3::M1), "linear map M1"),
        (27, Classification::Abelian(f)) if f == &[3, 3, 3] => {
            ("C3xC3xC3", cubic_companion, "companion matrix of x^3 - x + 1")
        }
        (27, Classification::Abelian(_)) => ("C9xC3", |_| alpha0(), "alpha0"),
        (27, Classification::Lr(3)) => ("L3", |_| tables::l3_sigma(), "stored L3 table"),
        (27, Classification::OtherNonabelian) => ("H3", |_| tables::h3_sigma(), "stored H3 table"),
        _ => return Ok(None),
    };
    let b = build_from_spec(spec)?;
    let moved = transport(&sigma(&b), &b, g)
        .ok_or_else(|| Error::Invariant(format!("{} is not isomorphic to {spec}", g.name())))?;
    Ok(Some((moved, name)))
}

fn alpha0() -> Perm {
    Perm::new(tables::alpha(0).to_vec()).expect("alpha0 is a bijection")
}

/// `v ↦ Av` on `F3³` with `A` the companion matrix of `x³ − x + 1`, which has
/// no root in `F3`, so `A`, `A + I` and `A − I` are all invertible.
fn cubic_companion(g: &FiniteGroup) -> Perm {
    const A: [[u32; 3]; 3] = [[0, 0, 2], [1, 0, 1], [0, 1, 0]];
    let images = g
        .elements()
        .map(|x| {
            let v = &g.label(x).0;
            let w: Vec<u32> = A.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % 3).collect();
            (w[0] * 9 + w[1] * 3 + w[2]) as usize
        })
        .collect();
    Perm::new(images).expect("invertible matrix")
}

fn colour_at(g: &FiniteGroup, depth: usize, trace: &mut Vec<TraceStep>) -> Result<ColourOutcome> {
    let class = classify(g);
    match class {
        Classification::Cyclic => {
            trace.push(step(g, depth, &class, "none"));
            return Ok(ColourOutcome::NoConstructionKnown {
                reason: "cyclic 3-groups have no colouring bijection".into(),
            });
        }
        Classification::Lr(r) if r >= 4 => {
            trace.push(step(g, depth, &class, "none"));
            return Ok(ColourOutcome::NoConstructionKnown {
                reason: format!("L{r}: colourability is open for r >= 4"),
            });
        }
        _ => {}
    }

    if let Some((sigma, name)) = base(g, &class)? {
        let ok = is_colouring_bijection(g, &sigma);
        let mut s = step(g, depth, &class, format!("base: {name}"));
        s.verified = Some(ok);
        trace.push(s);
        if !ok {
            return Err(Error::Invariant(format!("stored base for {} fails the check", g.name())));
        }
        return Ok(ColourOutcome::Coloured { sigma });
    }

    for candidate in enumerate_lifting_subgroups(g).into_iter().filter(|c| c.quotient_noncyclic) {
        let dec = quotient(g, &candidate.subgroup)?;
        let mut sub_trace = Vec::new();
        let ColourOutcome::Coloured { sigma: phi } = colour_at(&dec.quotient, depth + 1, &mut sub_trace)? else {
            continue;
        };
        let lift: Lift = match candidate.kind {
            LiftingKind::CentralC3C3 | LiftingKind::C3C3 => lift_c3c3(g, &candidate.subgroup, &phi)?,
            LiftingKind::C9C3 => lift_c9c3(g, &candidate.subgroup, &phi)?,
        };
        let mut s = step(g, depth, &class, format!("lift over {}", candidate.kind));
        s.subgroup = Some(candidate.subgroup.generators.iter().map(|&x| g.label(x).to_string()).collect());
        s.case = Some(format!("{:?}", lift.case));
        s.layers_hold = Some(lift.layers.all());
        s.verified = Some(lift.verified);
        trace.push(s);
        trace.extend(sub_trace);
        return Ok(ColourOutcome::Coloured { sigma: lift.sigma });
    }

    let config = SearchConfig::new(Target::Cb, Mode::First).fix_identity(true).budget(Some(FALLBACK_BUDGET));
    let result = search(g, &config)?;
    let mut s = step(g, depth, &class, "search");
    match result.found.into_iter().next() {
        Some(sigma) => {
            s.verified = Some(is_colouring_bijection(g, &sigma));
            trace.push(s);
            Ok(ColourOutcome::Coloured { sigma })
        }
        None => {
            trace.push(s);
            if result.exhausted {
                Ok(ColourOutcome::NoConstructionKnown {
                    reason: "exhaustive search found no colouring bijection".into(),
                })
            } else {
                Ok(ColourOutcome::SearchExhausted { nodes: result.nodes_explored })
            }
        }
    }
}

/// Carries `sigma` on `from` over to `to` along an isomorphism, if any.
pub fn transport(sigma: &Perm, from: &FiniteGroup, to: &FiniteGroup) -> Option<Perm> {
    let iso = find_isomorphism(from, to)?;
    let mut images = vec![0; to.order()];
    for x in from.elements() {
        images[iso[x]] = iso[sigma.apply(x)];
    }
    Perm::new(images).ok()
}
