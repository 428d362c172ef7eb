//! Shared fixtures for the criterion benchmarks.

use omlkit_core::equations::alias;
use omlkit_core::model::builtin;
use omlkit_core::{Equation, Model};

pub fn model(name: &str) -> Model {
    builtin(name).expect("built-in model")
}

pub fn equation(name: &str) -> Equation {
    alias(name).expect("built-in equation")
}
