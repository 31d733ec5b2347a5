//! The group-spec mini-language: `C{n}`, `H3`, `L{r}` (r >= 3), `M16`, and
//! products of these joined by `x`, e.g. `H3xC3` or `L3xC3xC3`.

use super::FiniteGroup;
use crate::error::{Error, Result};

pub fn build_from_spec(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let parse_err = |reason: &str| Error::Parse { spec: spec.to_string(), reason: reason.to_string() };
    if spec.is_empty() {
        return Err(parse_err("empty spec"));
    }
    let mut factors = spec.split('x').map(|f| build_factor(f.trim(), spec));
    let first = factors.next().ok_or_else(|| parse_err("empty spec"))??;
    let group = factors.try_fold(first, |acc, f| FiniteGroup::direct_product(&acc, &f?))?;
    Ok(group.with_name(spec))
}

fn build_factor(factor: &str, spec: &str) -> Result<FiniteGroup> {
    let parse_err = |reason: String| Error::Parse { spec: spec.to_string(), reason };
    let number = |digits: &str| -> Result<u32> {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(format!("`{factor}` needs a decimal parameter")));
        }
        digits.parse::<u32>().map_err(|e| parse_err(format!("`{factor}`: {e}")))
    };
    match factor {
        "" => Err(parse_err("empty factor".into())),
        "H3" => heisenberg(),
        "M16" => modular16(),
        _ if factor.starts_with('C') => {
            let n = number(&factor[1..])?;
            if n == 0 {
                return Err(parse_err("cyclic group of order 0".into()));
            }
            if n as usize > super::ORDER_CAP {
                return Err(Error::TooLarge { order: n as usize, cap: super::ORDER_CAP });
            }
            cyclic(n)
        }
        _ if factor.starts_with('L') => {
            let r = number(&factor[1..])?;
            if r < 3 {
                return Err(Error::UnsupportedFamily(format!("{factor} (L_r needs r >= 3)")));
            }
            maximal_class(r)
        }
        _ => Err(parse_err(format!("unknown factor `{factor}`"))),
    }
}

fn cyclic(n: u32) -> Result<FiniteGroup> {
    FiniteGroup::from_coordinates(format!("C{n}"), &[n], |a, b| vec![a[0] + b[0]])
}

/// `(i,j,k)(r,s,t) = (i+r, j+s, k+t+is)` mod 3.
fn heisenberg() -> Result<FiniteGroup> {
    FiniteGroup::from_coordinates("H3", &[3, 3, 3], |a, b| vec![a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]])
}

/// `L_r = <a, b | a^(3^(r-1)) = b^3 = 1, b a b^-1 = a^(1+3^(r-2))>` on pairs
/// `(i,j) = a^i b^j`.
fn maximal_class(r: u32) -> Result<FiniteGroup> {
    let order = 3usize.checked_pow(r).unwrap_or(usize::MAX);
    if order > super::ORDER_CAP {
        return Err(Error::TooLarge { order, cap: super::ORDER_CAP });
    }
    let modulus = (order / 3) as u64;
    let twist = 1 + 3u64.pow(r - 2);
    FiniteGroup::from_coordinates(format!("L{r}"), &[modulus as u32, 3], move |a, b| {
        let scale = twist.pow(a[1]) % modulus;
        vec![((a[0] as u64 + scale * b[0] as u64) % modulus) as u32, a[1] + b[1]]
    })
}

/// Modular group of order 16: `(i,j)(r,s) = (i + 5^j r mod 8, j+s mod 2)`.
fn modular16() -> Result<FiniteGroup> {
    FiniteGroup::from_coordinates("M16", &[8, 2], |a, b| vec![a[0] + 5u32.pow(a[1]) * b[0], a[1] + b[1]])
}
