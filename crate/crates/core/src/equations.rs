//! Named equations `EQ1` … `EQ7`.
//!
//! `EQ1`–`EQ6` are identities of orthomodular lattices involving the
//! equivalence `a == b` (index 5); `EQ7` is the weak orthomodularity law.

use crate::term::{Equation, ParseError};

pub const ALIASES: [(&str, &str); 7] = [
    (
        "EQ1",
        "(a ->1 b) ^ (b ->2 c) ^ (c ->1 d) ^ (d ->2 a) = (a == b) ^ (b == c) ^ (c == d)",
    ),
    (
        "EQ2",
        "(a ->5 b) ^ (b ->5 c) ^ (c ->5 d) ^ (d ->5 a) = (a == b) ^ (b == c) ^ (c == d)",
    ),
    ("EQ3", "(a ->1 b) ^ (b ->2 c) ^ (c ->1 a) <= a == c"),
    (
        "EQ4",
        "(a == b) ^ ((b == c) v (a == c)) = ((a == b) ^ (b == c)) v ((a == b) ^ (a == c))",
    ),
    ("EQ5", "(a == b) ^ ((b == c) v (a == c)) <= a == c"),
    ("EQ6", "(a == b) ->0 ((a == c) == (b == c)) = 1"),
    ("EQ7", "(a' ^ (a v b)) v b' v (a ^ b) = 1"),
];

pub fn alias(name: &str) -> Option<Equation> {
    ALIASES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, text)| Equation::parse(text).expect("built-in equations parse"))
}

/// An alias name or the text of an equation.
pub fn resolve(text: &str) -> Result<Equation, ParseError> {
    match alias(text.trim()) {
        Some(eq) => Ok(eq),
        None => Equation::parse(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Relation;

    #[test]
    fn all_aliases_parse() {
        for (name, _) in ALIASES {
            assert!(alias(name).is_some(), "{name}");
        }
        assert_eq!(alias("eq3").unwrap().rel, Relation::Le);
        assert_eq!(alias("EQ1").unwrap().variables(), ["a", "b", "c", "d"]);
        assert_eq!(alias("EQ4").unwrap().variables(), ["a", "b", "c"]);
    }

    #[test]
    fn resolve_falls_back_to_parsing() {
        assert_eq!(resolve("a = a").unwrap().to_string(), "a = a");
        assert!(resolve("EQ9").is_err());
    }
}
