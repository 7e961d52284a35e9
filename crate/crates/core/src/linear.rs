//! Exact reduction of linear systems whose equations are affine polynomials.
//!
//! Each equation is a [`Poly`] of total degree <= 1, read as `= 0`. Reduction
//! produces canonical reduced row-echelon rows (pivot coefficient 1, pivots
//! eliminated everywhere else), so two systems span the same constraints iff
//! their canonical rows are equal.

use crate::poly::{Monomial, Poly};
use crate::Error;
use num::Zero;
use std::collections::BTreeMap;

/// A reduced linear system together with the substitutions it solves for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSystem {
    /// Canonical rows, each an affine Poly equal to zero.
    pub rows: Vec<Poly>,
    /// Pivot unknowns in row order.
    pub pivots: Vec<String>,
}

impl ReducedSystem {
    /// pivot -> expression in the free unknowns.
    pub fn substitutions(&self) -> BTreeMap<String, Poly> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, pivot)| {
                let rest = row - &Poly::var(pivot);
                (pivot.clone(), -rest)
            })
            .collect()
    }

    /// Applies the solved substitutions to a polynomial.
    pub fn apply(&self, p: &Poly) -> Poly {
        p.substitute_map(&self.substitutions())
    }
}

fn check_affine(eq: &Poly) -> Result<(), Error> {
    if eq.total_degree() > 1 {
        return Err(Error::NonLinear(eq.to_string()));
    }
    Ok(())
}

/// Gauss–Jordan over the rationals.
///
/// Unknowns listed in `preferred` are eliminated first (in the given order);
/// remaining unknowns follow in name order and stay free when possible.
/// Fails with [`Error::Inconsistent`] when the system forces `c = 0` for a
/// nonzero constant c.
pub fn reduce(equations: &[Poly], preferred: &[String]) -> Result<ReducedSystem, Error> {
    for eq in equations {
        check_affine(eq)?;
    }
    let mut columns: Vec<String> = preferred.to_vec();
    for eq in equations {
        for name in eq.unknowns() {
            if !columns.contains(&name) {
                columns.push(name);
            }
        }
    }
    let (pref, mut rest): (Vec<_>, Vec<_>) =
        columns.into_iter().partition(|c| preferred.contains(c));
    rest.sort();
    let columns: Vec<String> = pref.into_iter().chain(rest).collect();

    let mut rows: Vec<Poly> = equations.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut pivots: Vec<(usize, String)> = Vec::new();
    let mut next_row = 0usize;
    for col in &columns {
        let m = Monomial::var(col);
        let Some(r) = (next_row..rows.len()).find(|&r| !rows[r].coefficient(&m).is_zero()) else {
            continue;
        };
        rows.swap(next_row, r);
        let lead = rows[next_row].coefficient(&m);
        rows[next_row] = rows[next_row].scale(&lead.recip());
        for r in 0..rows.len() {
            if r == next_row {
                continue;
            }
            let c = rows[r].coefficient(&m);
            if !c.is_zero() {
                rows[r] = &rows[r] - &rows[next_row].scale(&c);
            }
        }
        pivots.push((next_row, col.clone()));
        next_row += 1;
    }
    for row in rows.iter().skip(next_row) {
        if let Some(c) = row.as_constant() {
            if !c.is_zero() {
                return Err(Error::Inconsistent(row.to_string()));
            }
        }
    }
    rows.truncate(next_row);
    Ok(ReducedSystem { rows, pivots: pivots.into_iter().map(|(_, c)| c).collect() })
}

/// Canonical rows with no pivot preference: the unique RREF under name order.
pub fn canonical_rows(equations: &[Poly]) -> Result<Vec<Poly>, Error> {
    Ok(reduce(equations, &[])?.rows)
}

/// True iff the two systems cut out the same affine subspace.
pub fn equivalent(a: &[Poly], b: &[Poly]) -> Result<bool, Error> {
    Ok(canonical_rows(a)? == canonical_rows(b)?)
}
