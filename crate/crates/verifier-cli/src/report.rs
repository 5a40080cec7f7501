//! Case parameters, outcomes and the two report formats.

use std::fmt;

use crate::catalog::Status;

/// Parameters of one case. Ordering is numeric on `n`, then `k`, `l`, `r`,
/// then the variant tag, which fixes the report order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params {
    pub n: usize,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub r: Option<usize>,
    pub variant: Option<String>,
}

impl Params {
    pub fn n(n: usize) -> Params {
        Params { n, ..Params::default() }
    }

    pub fn k(mut self, k: usize) -> Params {
        self.k = Some(k);
        self
    }

    pub fn l(mut self, l: usize) -> Params {
        self.l = Some(l);
        self
    }

    pub fn r(mut self, r: usize) -> Params {
        self.r = Some(r);
        self
    }

    pub fn variant(mut self, v: impl Into<String>) -> Params {
        self.variant = Some(v.into());
        self
    }

    /// `k`, panicking if the case was built without one.
    pub fn k_value(&self) -> usize {
        self.k.expect("case has a k parameter")
    }

    pub fn l_value(&self) -> usize {
        self.l.expect("case has an l parameter")
    }

    pub fn variant_str(&self) -> &str {
        self.variant.as_deref().unwrap_or("")
    }

    fn pairs(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("n", self.n.to_string())];
        for (key, v) in [("k", self.k), ("l", self.l), ("r", self.r)] {
            if let Some(v) = v {
                out.push((key, v.to_string()));
            }
        }
        if let Some(v) = &self.variant {
            out.push(("variant", v.clone()));
        }
        out
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.pairs().iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&text.join(" "))
    }
}

/// Result of one exact comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The two sides differ; both are kept in serialized form.
    Mismatch {
        what: String,
        left: String,
        right: String,
    },
    /// The computation itself failed (for example a degree above the engine cap).
    Error(String),
}

impl Outcome {
    pub fn mismatch(what: impl Into<String>, left: impl fmt::Display, right: impl fmt::Display) -> Outcome {
        Outcome::Mismatch { what: what.into(), left: left.to_string(), right: right.to_string() }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn word(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Mismatch { .. } => "mismatch",
            Outcome::Error(_) => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub check: &'static str,
    pub status: Status,
    pub params: Params,
    pub outcome: Outcome,
}

impl CaseResult {
    /// A theorem-status case that did not pass.
    pub fn is_theorem_failure(&self) -> bool {
        self.status == Status::Theorem && !self.outcome.is_pass()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

/// All cases of one run, sorted by check name and then parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub cases: Vec<CaseResult>,
}

impl Report {
    pub fn new(mut cases: Vec<CaseResult>) -> Report {
        cases.sort_by(|a, b| (a.check, &a.params).cmp(&(b.check, &b.params)));
        Report { cases }
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    pub fn cases_of<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a CaseResult> + 'a {
        self.cases.iter().filter(move |c| c.check == check)
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.outcome.is_pass()).count()
    }

    pub fn theorem_failures(&self) -> usize {
        self.cases.iter().filter(|c| c.is_theorem_failure()).count()
    }

    pub fn conjecture_mismatches(&self) -> usize {
        self.cases.iter().filter(|c| c.status == Status::Conjecture && !c.outcome.is_pass()).count()
    }

    /// 0 when every theorem-status case passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.theorem_failures() > 0)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Structured => self.render_structured(),
        }
    }

    fn summary(&self) -> [(&'static str, usize); 4] {
        [
            ("cases", self.cases.len()),
            ("passed", self.passed()),
            ("theorem_failures", self.theorem_failures()),
            ("conjecture_mismatches", self.conjecture_mismatches()),
        ]
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&format!("{} [{}] {}: {}\n", c.check, c.status, c.params, c.outcome.word()));
            match &c.outcome {
                Outcome::Pass => {}
                Outcome::Mismatch { what, left, right } => {
                    out.push_str(&format!("    {what}\n    left:  {left}\n    right: {right}\n"));
                }
                Outcome::Error(e) => out.push_str(&format!("    {e}\n")),
            }
        }
        let summary: Vec<String> = self.summary().iter().map(|(k, v)| format!("{k} {v}")).collect();
        out.push_str(&format!("summary: {}\n", summary.join(", ")));
        out
    }

    /// One record per case, fields on their own `key=value` lines, records
    /// separated by a blank line. Values run to the end of the line; newlines
    /// inside values are written as `\n`.
    fn render_structured(&self) -> String {
        let escape = |s: &str| s.replace('\\', "\\\\").replace('\n', "\\n");
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&format!("check={}\nstatus={}\n", c.check, c.status));
            for (k, v) in c.params.pairs() {
                out.push_str(&format!("param.{k}={}\n", escape(&v)));
            }
            out.push_str(&format!("result={}\n", c.outcome.word()));
            match &c.outcome {
                Outcome::Pass => {}
                Outcome::Mismatch { what, left, right } => {
                    out.push_str(&format!("what={}\nleft={}\nright={}\n", escape(what), escape(left), escape(right)));
                }
                Outcome::Error(e) => out.push_str(&format!("error={}\n", escape(e))),
            }
            out.push('\n');
        }
        for (k, v) in self.summary() {
            out.push_str(&format!("summary.{k}={v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_sort_numerically() {
        let mut v = [Params::n(10).k(0), Params::n(2).k(3), Params::n(2).k(1).variant("b"), Params::n(2).k(1)];
        v.sort();
        let text: Vec<String> = v.iter().map(|p| p.to_string()).collect();
        assert_eq!(text, ["n=2 k=1", "n=2 k=1 variant=b", "n=2 k=3", "n=10 k=0"]);
    }

    #[test]
    fn empty_report() {
        let r = Report::default();
        assert_eq!(r.exit_code(), 0);
        assert!(r.render(Format::Structured).ends_with("summary.conjecture_mismatches=0\n"));
    }
}
