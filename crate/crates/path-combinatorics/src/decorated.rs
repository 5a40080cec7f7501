//! Labeled Dyck paths decorated on double rises, double falls or contractible valleys.

use std::fmt;

use crate::dyck::{parse_record, write_list, DyckPath, LabeledPath};
use crate::labels::{for_each_subset, LabelSpec};
use crate::PathError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Rise,
    Fall,
    Val,
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decoration::Rise => "rise",
            Decoration::Fall => "fall",
            Decoration::Val => "val",
        })
    }
}

impl Decoration {
    /// Rows (rise, valley) or columns (fall) that may carry a decoration.
    pub fn legal(self, p: &LabeledPath) -> Vec<usize> {
        match self {
            Decoration::Rise => p.path().rises(),
            Decoration::Fall => p.path().falls(),
            Decoration::Val => p.valleys(),
        }
    }
}

/// A labeled Dyck path with a set of decorated rows or columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DecoratedPath {
    path: LabeledPath,
    kind: Decoration,
    set: Vec<usize>,
}

impl DecoratedPath {
    pub fn new(path: LabeledPath, kind: Decoration, mut set: Vec<usize>) -> Result<DecoratedPath, PathError> {
        set.sort_unstable();
        set.dedup();
        let legal = kind.legal(&path);
        if let Some(&index) = set.iter().find(|i| !legal.contains(i)) {
            return Err(PathError::IllegalDecoration { kind, index });
        }
        Ok(DecoratedPath { path, kind, set })
    }

    /// All decorated paths with `size` decorations, ordered by path and then by
    /// decoration set.
    pub fn all(kind: Decoration, n: usize, size: usize, spec: &LabelSpec) -> Vec<DecoratedPath> {
        let mut out = Vec::new();
        for path in LabeledPath::all(n, spec) {
            let legal = kind.legal(&path);
            for_each_subset(&legal, size, &mut |s| {
                out.push(DecoratedPath { path: path.clone(), kind, set: s.to_vec() });
            });
        }
        out
    }

    pub fn path(&self) -> &LabeledPath {
        &self.path
    }

    pub fn kind(&self) -> Decoration {
        self.kind
    }

    pub fn set(&self) -> &[usize] {
        &self.set
    }

    /// `area⁻`: the area with decorated rows (rise) or columns (fall) removed;
    /// the full area for valley decorations.
    pub fn area_minus(&self) -> usize {
        let p = self.path.path();
        match self.kind {
            Decoration::Rise => sum_except(p.area_vector(), &self.set),
            Decoration::Fall => sum_except(&p.column_areas(), &self.set),
            Decoration::Val => p.area(),
        }
    }

    /// `dinv⁻`: for valley decorations, the dinv of undecorated rows minus the
    /// number of decorations; the plain dinv otherwise. Signed so that callers
    /// can check nonnegativity rather than assume it.
    pub fn dinv_minus(&self) -> i64 {
        let d = self.path.d_vector();
        match self.kind {
            Decoration::Val => sum_except(&d, &self.set) as i64 - self.set.len() as i64,
            _ => d.iter().sum::<usize>() as i64,
        }
    }

    /// Parses the `a=[..];l=[..];dec=[..]` record.
    pub fn parse(kind: Decoration, s: &str) -> Result<DecoratedPath, PathError> {
        let (a, l, dec) = parse_record(s)?;
        DecoratedPath::new(LabeledPath::new(DyckPath::new(a)?, l)?, kind, dec)
    }
}

fn sum_except(v: &[usize], skip: &[usize]) -> usize {
    v.iter().enumerate().filter(|(i, _)| !skip.contains(&(i + 1))).map(|(_, x)| x).sum()
}

impl fmt::Display for DecoratedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, "a", self.path.path().area_vector())?;
        f.write_str(";")?;
        write_list(f, "l", self.path.labels())?;
        f.write_str(";")?;
        write_list(f, "dec", &self.set)
    }
}
