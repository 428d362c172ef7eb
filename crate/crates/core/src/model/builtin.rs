use super::{check_equation, check_law, load, Law, Model, ModelError};
use crate::check::Mode;
use crate::equations::alias;
use crate::freeoml;

pub const BUILTIN_NAMES: [&str; 5] = ["boolean_<n>", "mo2", "o6", "free2", "woml20"];

const O6: &str = include_str!("../../data/o6.model");
const MO2: &str = include_str!("../../data/mo2.model");
const WOML20: &str = include_str!("../../data/woml20.model");

/// Looks up a built-in model: `boolean_<n>` (n ≤ 5), `mo2`, `o6`, `free2`, `woml20`.
pub fn builtin(name: &str) -> Result<Model, ModelError> {
    match name {
        "mo2" => load(MO2),
        "o6" => load(O6),
        "woml20" => load(WOML20),
        "free2" => Ok(freeoml::as_model()),
        _ => match name.strip_prefix("boolean_").map(str::parse::<u32>) {
            Some(Ok(n)) if n <= 5 => Ok(boolean(n)),
            _ => Err(ModelError::UnknownName(name.to_string())),
        },
    }
}

/// The Boolean algebra of subsets of an `n`-element set, elements named by
/// their bit strings.
fn boolean(n: u32) -> Model {
    let size = 1usize << n;
    let width = n.max(1) as usize;
    let names = (0..size).map(|s| format!("{s:0width$b}")).collect();
    let mut le = vec![false; size * size];
    for i in 0..size {
        for j in 0..size {
            le[i * size + j] = i & j == i;
        }
    }
    let ortho = (0..size).map(|i| !i & (size - 1)).collect();
    Model::from_order(format!("boolean_{n}"), names, le, ortho).expect("Boolean algebras are ortholattices")
}

/// One gate of a validation profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Acceptance gates for the 20-element WOML: ortholattice with the labelled
/// complement pairs, WOML law holds, OML law fails, EQ4 fails, EQ6 holds.
pub fn woml20_profile(m: &Model) -> Vec<Gate> {
    let pairs = ["x", "y", "z", "w", "r", "s", "t", "u", "v"];
    let labelled = m.len() == 20
        && m.index_of("0").is_some_and(|z| z == m.bottom())
        && m.index_of("1").is_some_and(|o| o == m.top())
        && pairs.iter().all(|p| {
            match (m.index_of(p), m.index_of(&format!("{p}'"))) {
                (Some(a), Some(b)) => m.ortho(a) == b,
                _ => false,
            }
        });
    let woml = check_law(m, Law::Woml);
    let oml = check_law(m, Law::Oml);
    let eq4 = check_equation(m, &alias("EQ4").unwrap(), Mode::Exhaustive);
    let eq6 = check_equation(m, &alias("EQ6").unwrap(), Mode::Exhaustive);
    let witness = |r: &crate::check::CheckResult<super::ElemId>| {
        r.witness
            .as_ref()
            .map(|w| w.map(|&e| m.name_of(e).to_string()).to_string())
            .unwrap_or_default()
    };
    vec![
        Gate {
            name: "ortholattice",
            passed: labelled,
            detail: format!("{} elements", m.len()),
        },
        Gate {
            name: "woml-law-holds",
            passed: woml.is_holds(),
            detail: format!("{} pairs", woml.assignments_checked),
        },
        Gate {
            name: "oml-law-fails",
            passed: !oml.is_holds(),
            detail: witness(&oml),
        },
        Gate {
            name: "eq4-fails",
            passed: !eq4.is_holds(),
            detail: witness(&eq4),
        },
        Gate {
            name: "eq6-holds",
            passed: eq6.is_holds(),
            detail: format!("{} assignments", eq6.assignments_checked),
        },
    ]
}
