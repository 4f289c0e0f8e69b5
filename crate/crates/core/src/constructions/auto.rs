//! Picks the construction whose arithmetic preconditions an input meets.

use super::{
    color_complete_bipartite, color_even_dense_circulant, color_odd_circulant,
    color_perfect_cayley, color_unitary_even, dense, odd, Construction, ConstructionError, Method,
    Strategy,
};
use crate::graph::arith::split_two_power;
use crate::graph::Graph;
use crate::oracles::{exact_chromatic, is_perfect, SearchBudget};
use crate::exec::Exec;

/// The selected method and why each earlier candidate was skipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodChoice {
    pub method: Method,
    pub reason: String,
    pub skipped: Vec<(Method, String)>,
}

fn unitary_power_of_two(g: &Graph) -> Result<String, String> {
    let spec = g.circulant_spec().ok_or("not a circulant")?;
    let n = spec.n();
    if !spec.is_unitary() {
        return Err("not a unitary Cayley graph".into());
    }
    if n < 2 || !n.is_power_of_two() {
        return Err(format!("n = {n} is not a power of two"));
    }
    Ok(format!("U_{n} with n a power of two is complete bipartite"))
}

fn unitary_even(g: &Graph) -> Result<String, String> {
    let spec = g.circulant_spec().ok_or("not a circulant")?;
    let n = spec.n();
    if !spec.is_unitary() {
        return Err("not a unitary Cayley graph".into());
    }
    if n % 2 == 1 {
        return Err(format!("n = {n} is odd"));
    }
    let (k, m) = split_two_power(n);
    if m == 1 {
        return Err(format!("n = {n} is a power of two"));
    }
    Ok(format!("U_{n}, n = 2^{k}·{m}"))
}

fn odd_circulant(g: &Graph) -> Result<String, String> {
    let spec = g.circulant_spec().ok_or("not a circulant")?;
    odd::check_preconditions(spec)
        .map(|q| format!("odd order, Δ+1 = {q} divides {}", spec.n()))
        .map_err(|e| e.to_string())
}

fn even_dense(g: &Graph) -> Result<String, String> {
    let spec = g.circulant_spec().ok_or("not a circulant")?;
    dense::check_preconditions(spec)
        .map(|k| format!("n = 2(2k+1) with k = {k}, n/2 <= Δ < n-1"))
        .map_err(|e| e.to_string())
}

fn perfect(g: &Graph, budget: &SearchBudget) -> Result<String, String> {
    if g.origin().is_none() {
        return Err("not a Cayley graph".into());
    }
    if g.is_complete() {
        return if g.n() % 2 == 1 {
            Ok("complete graph of odd order".into())
        } else {
            Err("complete graph of even order".into())
        };
    }
    match is_perfect(g) {
        Ok(true) => {}
        Ok(false) => return Err("not perfect".into()),
        Err(e) => return Err(e.to_string()),
    }
    let chi = exact_chromatic(g, budget, Exec::default()).map_err(|e| e.to_string())?;
    let x = chi.value;
    if x % 2 == 0 || !g.n().is_multiple_of(x) {
        return Err(format!("χ = {x} is even or does not divide {}", g.n()));
    }
    Ok(format!("perfect with χ = {x} odd, dividing {}", g.n()))
}

fn check(g: &Graph, method: Method, budget: &SearchBudget) -> Result<String, String> {
    match method {
        Method::CompleteBipartite => unitary_power_of_two(g),
        Method::UnitaryEven => unitary_even(g),
        Method::OddCirculant => odd_circulant(g),
        Method::EvenDenseCirculant => even_dense(g),
        Method::PerfectCayley | Method::CompleteOdd => perfect(g, budget),
    }
}

const ORDER: [Method; 5] = [
    Method::CompleteBipartite,
    Method::UnitaryEven,
    Method::OddCirculant,
    Method::EvenDenseCirculant,
    Method::PerfectCayley,
];

/// First method, in a fixed order, whose preconditions hold.
pub fn select_method(g: &Graph, budget: &SearchBudget) -> Result<MethodChoice, ConstructionError> {
    let mut skipped = Vec::new();
    for method in ORDER {
        match check(g, method, budget) {
            Ok(reason) => {
                return Ok(MethodChoice {
                    method,
                    reason,
                    skipped,
                })
            }
            Err(why) => skipped.push((method, why)),
        }
    }
    let summary: Vec<String> = skipped.iter().map(|(m, why)| format!("{m}: {why}")).collect();
    Err(ConstructionError::Precondition(format!(
        "no construction applies ({})",
        summary.join("; ")
    )))
}

/// Runs `method`, or the automatically selected one when `None`.
pub fn construct(
    g: &Graph,
    method: Option<Method>,
    strategy: Strategy,
    budget: &SearchBudget,
) -> Result<Construction, ConstructionError> {
    let (method, mut notes) = match method {
        Some(m) => (m, Vec::new()),
        None => {
            let choice = select_method(g, budget)?;
            let mut notes = vec![format!("selected {}: {}", choice.method, choice.reason)];
            notes.extend(choice.skipped.iter().map(|(m, why)| format!("skipped {m}: {why}")));
            (choice.method, notes)
        }
    };
    let circulant = || {
        g.circulant_spec()
            .ok_or_else(|| ConstructionError::Precondition("not a circulant".into()))
    };
    let mut result = match method {
        Method::CompleteBipartite => {
            unitary_power_of_two(g).map_err(ConstructionError::Precondition)?;
            color_complete_bipartite(g.n() / 2)
        }
        Method::UnitaryEven => {
            let spec = circulant()?;
            if !spec.is_unitary() {
                return Err(ConstructionError::Precondition("not a unitary Cayley graph".into()));
            }
            color_unitary_even(spec.n())
        }
        Method::OddCirculant => color_odd_circulant(circulant()?, strategy),
        Method::EvenDenseCirculant => color_even_dense_circulant(circulant()?),
        Method::PerfectCayley | Method::CompleteOdd => color_perfect_cayley(g, budget),
    }?;
    notes.append(&mut result.notes);
    result.notes = notes;
    Ok(result)
}
