use num_bigint::BigInt;
use num_traits::Zero;

use crate::abgrp::FgAbGroup;
use crate::error::{input, Error, Result};

/// Parses `Z`, `Z^r`, `Z/k` summands joined by `+` (or the single term `0`) and
/// returns the canonical form, so `Z/2 + Z/3` is `Z/6`.
pub fn parse_group(s: &str) -> Result<FgAbGroup> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return input("empty group expression");
    }
    if s == "0" {
        return Ok(FgAbGroup::trivial());
    }
    let mut free = 0usize;
    let mut orders = Vec::new();
    for term in s.split('+') {
        if term == "Z" {
            free += 1;
        } else if let Some(r) = term.strip_prefix("Z^") {
            free += r
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("bad exponent in '{term}'")))?;
        } else if let Some(k) = term.strip_prefix("Z/") {
            let k: BigInt = k
                .parse()
                .map_err(|_| Error::Input(format!("bad order in '{term}'")))?;
            if k <= BigInt::zero() {
                return input(format!("cyclic order must be positive in '{term}'"));
            }
            orders.push(k);
        } else {
            return input(format!(
                "cannot parse summand '{term}' (expected Z, Z^r or Z/k)"
            ));
        }
    }
    Ok(FgAbGroup::from_cyclic_orders(free, &orders))
}

/// `"Z^r + Z/d1 + ..."` in canonical form, `"0"` for the trivial group.
pub fn render_group(a: &FgAbGroup) -> String {
    a.to_string()
}
