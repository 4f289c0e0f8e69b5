//! Δ+1 total coloring of odd-order circulants with `(Δ+1) | n`.

use std::fmt;
use std::str::FromStr;

use super::{
    fill_diagonals, finish, start_entries, starter_search, Construction, ConstructionError, Method,
};
use crate::coloring::{verify_total, Color};
use crate::graph::{build_circulant, CirculantSpec};

/// How start values are chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Literal column rules, then the starter search if they clash.
    #[default]
    Auto,
    Literal,
    Starter,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "literal" => Ok(Strategy::Literal),
            "starter" => Ok(Strategy::Starter),
            _ => Err(format!("unknown strategy {s:?} (expected auto, literal or starter)")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Literal => "literal",
            Strategy::Starter => "starter",
        })
    }
}

pub(crate) fn check_preconditions(spec: &CirculantSpec) -> Result<usize, ConstructionError> {
    let n = spec.n();
    let pre = |msg: String| Err(ConstructionError::Precondition(msg));
    if n.is_multiple_of(2) {
        return pre(format!("n = {n} is even"));
    }
    let q = spec.degree() + 1;
    if q < 3 {
        return pre("connection set is empty".into());
    }
    if !n.is_multiple_of(q) {
        return pre(format!("Δ+1 = {q} does not divide n = {n}"));
    }
    let half = spec.half_set();
    if let Some(s) = half.iter().find(|&&s| s % q == 0) {
        return pre(format!("generator {s} is divisible by Δ+1 = {q}"));
    }
    for (i, a) in half.iter().enumerate() {
        for b in &half[i + 1..] {
            if a % q == b % q {
                return pre(format!("generators {a} and {b} are congruent modulo {q}"));
            }
        }
    }
    Ok(q)
}

/// Colors `C_n(S)` with Δ+1 colors; vertex `v` gets `(v mod (Δ+1)) + 1`.
/// The notes record which strategy produced the result.
pub fn color_odd_circulant(spec: &CirculantSpec, strategy: Strategy) -> Result<Construction, ConstructionError> {
    let q = check_preconditions(spec)?;
    let n = spec.n();
    let g = build_circulant(spec);
    let half = spec.half_set();
    let mut notes = vec![format!("modulus {q}; generators {half:?}")];

    if strategy != Strategy::Starter {
        let columns: Vec<usize> = half.iter().map(|s| s + 1).collect();
        let table = start_entries(q, &columns, n)?;
        let gens: Vec<(usize, Color)> = half.iter().map(|&s| (s, table.start(s + 1))).collect();
        let c = fill_diagonals(n, q, &gens);
        let report = verify_total(&g, &c);
        if report.is_valid() {
            notes.push(format!("literal rules used: starts {:?}", starts(&gens)));
            return finish(&g, Method::OddCirculant, c, notes, None);
        }
        notes.push(format!(
            "literal rules gave {} conflicts (starts {:?})",
            report.conflicts.len(),
            starts(&gens)
        ));
        if strategy == Strategy::Literal {
            return Err(ConstructionError::VerificationFailed {
                context: "literal column rules".into(),
                report: Box::new(report),
            });
        }
    }

    let diffs: Vec<usize> = half.iter().map(|s| s % q).collect();
    let Some(pairing) = starter_search(q, &diffs) else {
        return Err(ConstructionError::StrategiesExhausted(format!(
            "{}; no starter pairing mod {q} for differences {diffs:?}",
            notes.join("; ")
        )));
    };
    let gens: Vec<(usize, Color)> = half
        .iter()
        .zip(&pairing.pairs)
        .map(|(&s, p)| (s, p.high as Color + 1))
        .collect();
    let pairs: Vec<(usize, usize)> = pairing.pairs.iter().map(|p| (p.high, p.low)).collect();
    notes.push(format!("starter fallback used: pairs {pairs:?}"));
    let c = fill_diagonals(n, q, &gens);
    finish(&g, Method::OddCirculant, c, notes, None)
}

fn starts(gens: &[(usize, Color)]) -> Vec<Color> {
    gens.iter().map(|g| g.1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::residue_partition;

    fn spec(n: usize, half: &[usize]) -> CirculantSpec {
        CirculantSpec::from_half_set(n, half.iter().copied()).unwrap()
    }

    #[test]
    fn literal_rules_instance() {
        let r = color_odd_circulant(&spec(21, &[1, 2, 3]), Strategy::Literal).unwrap();
        assert_eq!(r.color_count(), 7);
        assert!(r.notes.iter().any(|n| n.starts_with("literal rules used")));
    }

    #[test]
    fn worked_example_needs_fallback() {
        let s = spec(21, &[1, 3, 4]);
        assert!(matches!(
            color_odd_circulant(&s, Strategy::Literal),
            Err(ConstructionError::VerificationFailed { .. })
        ));
        let r = color_odd_circulant(&s, Strategy::Auto).unwrap();
        assert_eq!(r.color_count(), 7);
        assert!(r.notes.iter().any(|n| n.starts_with("starter fallback used")));
        let classes = residue_partition(21, 7).unwrap();
        for class in classes.classes() {
            let colors: Vec<_> = class.iter().map(|&v| r.coloring.vertex_color(v)).collect();
            assert!(colors.windows(2).all(|w| w[0] == w[1]));
        }
        assert_eq!(r.coloring.vertex_color(14), Some(1));
    }

    #[test]
    fn triangle() {
        let r = color_odd_circulant(&spec(3, &[1]), Strategy::Auto).unwrap();
        assert_eq!(r.color_count(), 3);
    }

    #[test]
    fn preconditions() {
        assert!(color_odd_circulant(&spec(20, &[1, 2]), Strategy::Auto).is_err());
        assert!(color_odd_circulant(&spec(21, &[1, 7, 3]), Strategy::Auto).is_err());
        assert!(color_odd_circulant(&spec(21, &[1, 8, 3]), Strategy::Auto).is_err());
        assert!(color_odd_circulant(&spec(25, &[1, 2]), Strategy::Auto).is_ok());
        assert!(color_odd_circulant(&spec(9, &[1, 2, 3]), Strategy::Auto).is_err());
    }
}
