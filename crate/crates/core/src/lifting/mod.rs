//! Lifting colouring bijections from `G/H` to `G`.
//!
//! Given a colouring bijection `Φ` of `G/H` and the transversal scheme it
//! induces, the lifted map is `σ(ht) = ψ_t(h) φ(t)` with `ψ_t` a bijection of
//! `H` chosen per coset:
//!
//! * `H` central: one colouring bijection `ψ` of `H` for every coset.
//! * `H ≅ C3 × C3` not central: `ψ_t` linear in a basis `(z, b)` with `z`
//!   central, `M(ψ_t) = C(−α) M_α` where `α = k(φ(t)⁻¹)`, `g b g⁻¹ = z^k(g) b`
//!   and `M_α` is [`Matrix2F3::pair_choice`](crate::matrix::Matrix2F3::pair_choice).
//! * `H ≅ C9 × C3 = <c> × <b>`, `|c| = 9` central: `ψ_t = α_u` with
//!   `u = k(φ(t))`, where `g b g⁻¹ = c^(3k(g)) b`. Writing `h = (u, j)` and
//!   `z = c³`, the three layer maps are `h ↦ αᵤ(h) + h + uj·z`,
//!   `h ↦ αᵤ(h) − h` and `h ↦ αᵤ(h) + uj·z`, up to automorphisms of `H` and
//!   translations. The last one is not a bijection for the tabulated `α1`,
//!   `α2`, so this case uses the replacements `α'1`, `α'2`, which satisfy all
//!   three conditions.
//! * `H ≅ C9 × C3 = <b> × <c>`, `|c| = 3` central: `ψ_t = f(λ, ℓ)` with
//!   `φ(t) b φ(t)⁻¹ = b^(1+3λ) c^ℓ`.

mod colour;
mod lifts;
mod scheme;

pub use colour::{colour, transport, ColourOutcome, ColourReport, TraceStep, COLOUR_ORDER_CAP, FALLBACK_BUDGET};
pub use lifts::{lift_c3c3, lift_c9c3, lift_c9c3_with_alpha, lift_central, linear_c3c3, Lift, LiftCase};
pub use scheme::{check_layers, transversal_scheme, LayerReport, TransversalScheme};
