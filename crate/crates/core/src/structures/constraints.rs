//! Polynomial constraints extracted from residual forms, exact checks of
//! claimed solution sets and K-linear span membership.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::exterior::{Blade, Form};
use crate::scalars::{AlgebraicScalar, Bindings, FourierComponent, Monomial, ParamPoly, Unknown};

use super::ansatz::{residuals, AnsatzFamily, System};
use super::report::{SubCheck, VerificationReport};

/// One polynomial in (λ, a, b, μ): the `component` Fourier part of the
/// coefficient of `blade` in a residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub blade: Blade,
    pub component: FourierComponent,
    pub poly: ParamPoly,
}

impl Constraint {
    pub fn render(&self, names: &[&str]) -> String {
        let blade: Vec<&str> = self.blade.indices().map(|i| names[i]).collect();
        format!("[{} | {}] {} = 0", blade.join("^"), self.component, self.poly)
    }
}

/// One constraint per (base monomial, Fourier component); the residual
/// vanishes for all t iff every emitted polynomial does.
pub fn extract_constraints(residual: &Form) -> Vec<Constraint> {
    let mut out = Vec::new();
    for (b, c) in residual.terms() {
        for (component, poly) in c.fourier_parts() {
            out.push(Constraint { blade: *b, component, poly });
        }
    }
    out
}

pub fn family_constraints(family: AnsatzFamily, system: System) -> Vec<Constraint> {
    residuals(family, system).iter().flat_map(extract_constraints).collect()
}

/// Specialize every constraint, dropping those that become zero.
pub fn specialize_all(constraints: &[Constraint], at: &Bindings) -> Vec<Constraint> {
    constraints
        .iter()
        .map(|c| Constraint {
            poly: c.poly.specialize(at),
            ..c.clone()
        })
        .filter(|c| !c.poly.is_zero())
        .collect()
}

/// μ from the first constraint that is linear in μ once (λ, a, b) are bound.
pub fn solve_mu(constraints: &[Constraint], at: &Bindings) -> Option<AlgebraicScalar> {
    let at = at.clone().without(Unknown::Mu);
    for c in constraints {
        let p = c.poly.specialize(&at);
        if p.degree_in(Unknown::Mu) != 1 {
            continue;
        }
        let c1 = p.coefficient_of(Unknown::Mu, 1).as_constant()?;
        let c0 = p.coefficient_of(Unknown::Mu, 0).as_constant()?;
        return Some(-(&c0 / &c1));
    }
    None
}

/// The first constraint not vanishing at the fully bound point.
pub fn first_violation<'a>(constraints: &'a [Constraint], at: &Bindings) -> Option<&'a Constraint> {
    constraints.iter().find(|c| !c.poly.specialize(at).is_zero())
}

/// Bind μ (solving it when absent) and check every constraint.
fn check_claim(constraints: &[Constraint], claim: &Bindings) -> std::result::Result<Bindings, String> {
    let mut at = claim.clone();
    if at.get(Unknown::Mu).is_none() {
        match solve_mu(constraints, &at) {
            Some(mu) => at.set(Unknown::Mu, mu),
            None => return Err("no constraint determines mu".into()),
        }
    }
    match first_violation(constraints, &at) {
        None => Ok(at),
        Some(c) => Err(format!("{} at {at}", c.poly.specialize(&at))),
    }
}

fn perturbations(claim: &Bindings) -> Vec<Bindings> {
    let step = AlgebraicScalar::ratio(1, 7);
    [Unknown::A, Unknown::B]
        .iter()
        .filter_map(|&u| {
            let v = claim.get(u)?;
            Some(claim.clone().with(u, v + &step).without(Unknown::Mu))
        })
        .collect()
}

/// Every claimed binding zeroes all constraints of the family; binding
/// perturbations a + 1/7 and b + 1/7 must each violate some constraint.
pub fn verify_solution_set(
    identity: &str,
    family: AnsatzFamily,
    system: System,
    claimed: &[Bindings],
) -> Result<VerificationReport> {
    let start = Instant::now();
    let constraints = family_constraints(family, system);
    let mut solved = Vec::new();
    for claim in claimed {
        match check_claim(&constraints, claim) {
            Ok(at) => solved.push(at.to_string()),
            Err(constraint) => {
                return Err(Error::ClaimFails {
                    binding: claim.to_string(),
                    constraint,
                })
            }
        }
    }
    let mut rejected = 0usize;
    let mut accepted = Vec::new();
    for claim in claimed {
        for p in perturbations(claim) {
            match check_claim(&constraints, &p) {
                Ok(at) => accepted.push(at.to_string()),
                Err(_) => rejected += 1,
            }
        }
    }
    let checks = vec![
        SubCheck::new("claimed bindings zero every constraint", true, String::new),
        SubCheck::new("perturbed bindings are rejected", accepted.is_empty(), || accepted.join(", ")),
    ];
    let mut r = VerificationReport::from_checks(identity, checks);
    if let Some(serde_json::Value::Object(m)) = r.detail.as_mut() {
        m.insert("family".into(), serde_json::json!(family.to_string()));
        m.insert("system".into(), serde_json::json!(system.to_string()));
        m.insert("constraints".into(), serde_json::json!(constraints.len()));
        m.insert("solutions".into(), serde_json::json!(solved));
        m.insert("rejected_perturbations".into(), serde_json::json!(rejected));
    }
    Ok(r.timed(start))
}

/// Every constraint vanishes with μ = num/den, where num and den are
/// polynomials in the remaining unknowns: den·c₀ + num·c₁ = 0.
pub fn vanishes_with_mu_ratio(constraints: &[Constraint], at: &Bindings, num: &ParamPoly, den: &ParamPoly) -> bool {
    constraints.iter().all(|c| {
        let p = c.poly.specialize(at);
        if p.degree_in(Unknown::Mu) > 1 {
            return false;
        }
        let c0 = p.coefficient_of(Unknown::Mu, 0);
        let c1 = p.coefficient_of(Unknown::Mu, 1);
        (&(den * &c0) + &(num * &c1)).is_zero()
    })
}

type Row = BTreeMap<Monomial, AlgebraicScalar>;

fn as_row(p: &ParamPoly) -> Option<Row> {
    p.terms().map(|(m, c)| c.as_constant().map(|v| (*m, v))).collect()
}

/// Row-echelon basis of the K-span of polynomials with constant coefficients.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<(Monomial, Row)>,
}

impl Span {
    pub fn new(polys: impl IntoIterator<Item = ParamPoly>) -> Self {
        let mut s = Span::default();
        for p in polys {
            if let Some(r) = as_row(&p) {
                s.insert(r);
            }
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut r: Row) -> Row {
        for (pivot, row) in &self.rows {
            if let Some(c) = r.get(pivot).cloned() {
                for (m, v) in row {
                    let e = r.entry(*m).or_default();
                    *e = &*e - &(&c * v);
                }
                r.retain(|_, v| !v.is_zero());
            }
        }
        r
    }

    fn insert(&mut self, r: Row) {
        let r = self.reduce(r);
        let Some((&pivot, lead)) = r.iter().next_back() else {
            return;
        };
        let inv = lead.inverse().expect("nonzero");
        let r: Row = r.iter().map(|(m, v)| (*m, v * &inv)).collect();
        // keep earlier rows reduced against the new pivot
        for (_, row) in &mut self.rows {
            if let Some(c) = row.get(&pivot).cloned() {
                for (m, v) in &r {
                    let e = row.entry(*m).or_default();
                    *e = &*e - &(&c * v);
                }
                row.retain(|_, v| !v.is_zero());
            }
        }
        self.rows.push((pivot, r));
    }

    pub fn contains(&self, p: &ParamPoly) -> bool {
        as_row(p).is_some_and(|r| self.reduce(r).is_empty())
    }

    /// The least j ≤ `max_power` with λ^j·p in the span.
    pub fn contains_lambda_multiple(&self, p: &ParamPoly, max_power: u32) -> Option<u32> {
        let lam = ParamPoly::var(Unknown::Lambda);
        (0..=max_power).find(|&j| self.contains(&(&lam.pow(j) * p)))
    }
}
