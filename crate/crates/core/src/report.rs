//! Line-oriented `key<TAB>value` reports.

use std::fmt;

/// Process exit status carried by a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Violation = 1,
    Usage = 2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    records: Vec<(String, String)>,
    exit: Exit,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Report {
        Report {
            records: Vec::new(),
            exit: Exit::Ok,
        }
    }

    /// Appends a record; tabs and newlines in either part become spaces.
    pub fn push(&mut self, key: impl fmt::Display, value: impl fmt::Display) {
        let clean = |s: String| s.replace(['\t', '\n'], " ");
        self.records
            .push((clean(key.to_string()), clean(value.to_string())));
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
        self.exit = self.exit.max_with(other.exit);
    }

    /// Raises the exit status; a report never goes back to a lower one.
    pub fn fail(&mut self, exit: Exit) {
        self.exit = self.exit.max_with(exit);
    }

    pub fn exit(&self) -> Exit {
        self.exit
    }

    pub fn records(&self) -> &[(String, String)] {
        &self.records
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.records
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl Exit {
    fn max_with(self, other: Exit) -> Exit {
        if other as u8 > self as u8 {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.records {
            writeln!(f, "{k}\t{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_tab_separated() {
        let mut r = Report::new();
        r.push("beran", 22);
        r.push("note", "a\tb\nc");
        assert_eq!(r.to_string(), "beran\t22\nnote\ta b c\n");
        assert_eq!(r.get("beran"), Some("22"));
    }

    #[test]
    fn exit_only_rises() {
        let mut r = Report::new();
        r.fail(Exit::Usage);
        r.fail(Exit::Violation);
        assert_eq!(r.exit(), Exit::Usage);
    }
}
