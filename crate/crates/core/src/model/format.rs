//! Line-oriented model files.
//!
//! ```text
//! # comment
//! model o6
//! elements 0 1 p q p' q'
//! bottom 0
//! top 1
//! cover 0 p        # 0 is covered by p
//! ortho p p'       # mutual
//! end
//! ```
//!
//! The order is the reflexive-transitive closure of the `cover` edges.
//! `bottom` and `top` are complements of each other unless declared otherwise.

use std::collections::HashMap;

use super::{Model, ModelError};

fn format_err(line: usize, message: impl Into<String>) -> ModelError {
    ModelError::Format {
        line,
        message: message.into(),
    }
}

pub fn load(source: &str) -> Result<Model, ModelError> {
    let mut name: Option<String> = None;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut bottom: Option<(usize, String)> = None;
    let mut top: Option<(usize, String)> = None;
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut ortho: HashMap<usize, usize> = HashMap::new();
    let mut ended = false;

    for (no, raw) in source.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if ended {
            return Err(format_err(line_no, "content after `end`"));
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap();
        let args: Vec<&str> = words.collect();
        if keyword != "model" && name.is_none() {
            return Err(format_err(line_no, "file must start with `model <name>`"));
        }
        let lookup = |w: &str| {
            index
                .get(w)
                .copied()
                .ok_or_else(|| format_err(line_no, format!("unknown element `{w}`")))
        };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(format_err(
                    line_no,
                    format!("`{keyword}` takes {k} argument(s), got {}", args.len()),
                ))
            }
        };
        match keyword {
            "model" => {
                if name.is_some() {
                    return Err(format_err(line_no, "duplicate `model` line"));
                }
                arity(1)?;
                name = Some(args[0].to_string());
            }
            "elements" => {
                for w in &args {
                    if index.insert(w.to_string(), names.len()).is_some() {
                        return Err(format_err(line_no, format!("duplicate element `{w}`")));
                    }
                    names.push(w.to_string());
                }
            }
            "bottom" | "top" => {
                arity(1)?;
                let slot = if keyword == "bottom" { &mut bottom } else { &mut top };
                if slot.is_some() {
                    return Err(format_err(line_no, format!("duplicate `{keyword}`")));
                }
                *slot = Some((lookup(args[0])?, args[0].to_string()));
            }
            "cover" => {
                arity(2)?;
                covers.push((lookup(args[0])?, lookup(args[1])?));
            }
            "ortho" => {
                arity(2)?;
                let (p, q) = (lookup(args[0])?, lookup(args[1])?);
                for (x, y) in [(p, q), (q, p)] {
                    match ortho.insert(x, y) {
                        Some(prev) if prev != y => {
                            return Err(ModelError::NotOrtholattice {
                                law: "involution p'' = p",
                                witness: format!(
                                    "{} has complements {} and {}",
                                    names[x], names[prev], names[y]
                                ),
                            })
                        }
                        _ => {}
                    }
                }
            }
            "end" => {
                arity(0)?;
                ended = true;
            }
            other => return Err(format_err(line_no, format!("unknown keyword `{other}`"))),
        }
    }

    let last = source.lines().count();
    let name = name.ok_or_else(|| format_err(last, "missing `model` line"))?;
    if !ended {
        return Err(format_err(last, "missing `end`"));
    }
    let n = names.len();
    if n == 0 {
        return Err(format_err(last, "no elements"));
    }
    if let (Some((b, _)), Some((t, _))) = (&bottom, &top) {
        if !ortho.contains_key(b) && !ortho.contains_key(t) {
            ortho.insert(*b, *t);
            ortho.insert(*t, *b);
        }
    }
    let ortho_map = (0..n)
        .map(|i| {
            ortho
                .get(&i)
                .copied()
                .ok_or_else(|| format_err(last, format!("`{}` has no orthocomplement", names[i])))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut le = vec![false; n * n];
    for i in 0..n {
        le[i * n + i] = true;
    }
    for &(p, q) in &covers {
        le[p * n + q] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if le[i * n + k] {
                for j in 0..n {
                    if le[k * n + j] {
                        le[i * n + j] = true;
                    }
                }
            }
        }
    }

    let model = Model::from_order(name, names, le, ortho_map)?;
    for (declared, what, actual) in [
        (bottom, "bottom", model.bottom()),
        (top, "top", model.top()),
    ] {
        match declared {
            Some((id, w)) if id != usize::from(actual) => {
                return Err(ModelError::NotAPartialOrder(format!(
                    "declared {what} `{w}` but the {what} is `{}`",
                    model.name_of(actual)
                )))
            }
            Some(_) => {}
            None => return Err(format_err(last, format!("missing `{what}`"))),
        }
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;

    const O6: &str = "
# benzene ring
model o6
elements 0 1 p q p' q'
bottom 0
top 1
cover 0 p
cover p q'
cover q' 1
cover 0 q
cover q p'
cover p' 1
ortho 0 1
ortho p p'
ortho q q'
end
";

    #[test]
    fn loads_benzene() {
        let m = load(O6).unwrap();
        assert_eq!(m.len(), 6);
        assert_eq!(m.name(), "o6");
        let (p, q) = (m.index_of("p").unwrap(), m.index_of("q").unwrap());
        assert_eq!(m.join(p, q), m.top());
        assert_eq!(m.name_of(m.ortho(p)), "p'");
    }

    #[test]
    fn non_involutive_ortho_rejected() {
        let src = O6.replace("ortho q q'", "ortho q q'\northo p' q");
        assert!(matches!(
            load(&src),
            Err(ModelError::NotOrtholattice { .. })
        ));
    }

    #[test]
    fn format_errors_name_the_line() {
        let src = O6.replace("cover 0 q\n", "cover 0 z\n");
        match load(&src) {
            Err(ModelError::Format { line, message }) => {
                assert_eq!(line, 10);
                assert!(message.contains("`z`"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            load("elements a\n"),
            Err(ModelError::Format { line: 1, .. })
        ));
        assert!(matches!(
            load(&O6.replace("end", "")),
            Err(ModelError::Format { .. })
        ));
        assert!(matches!(
            load(&O6.replace("ortho q q'", "")),
            Err(ModelError::Format { .. })
        ));
    }

    #[test]
    fn wrong_declared_bottom() {
        let src = O6.replace("bottom 0", "bottom p");
        assert!(matches!(load(&src), Err(ModelError::NotAPartialOrder(_))));
    }

    #[test]
    fn text_round_trip() {
        let m = load(O6).unwrap();
        assert_eq!(load(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn bounds_default_to_complements() {
        let m = load(&O6.replace("ortho 0 1\n", "")).unwrap();
        assert_eq!(m, load(O6).unwrap());
    }
}
