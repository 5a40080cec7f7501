//! LLT polynomials of stack shapes, Yamanouchi reading words and XY diagrams.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use exact_algebra::{Monomial, MultiPoly};
use symfunc_core::{Composition, Partition};

use crate::content::ContentGf;
use crate::labels::LabelSpec;
use crate::stack::{StackPath, StackShape};
use crate::PathError;

/// True if every suffix of `w` has at least as many `i`'s as `i+1`'s.
pub fn is_yamanouchi(w: &[usize]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &v in w.iter().rev() {
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

fn qpow(e: usize) -> MultiPoly {
    MultiPoly::monomial(Monomial::qt(e as u32, 0))
}

/// `LLT_{S,D}` by content: `Σ q^{hdinv(P)}` over labelings `P` of a fixed shape.
pub fn llt_content(shape: &StackShape) -> ContentGf {
    let n = shape.order();
    let mut out = ContentGf::zero(n);
    for alpha in Composition::all(n) {
        let mut c = MultiPoly::zero();
        for p in StackPath::labelings(shape, &LabelSpec::Content(alpha.clone())) {
            c += &qpow(p.hdinv());
        }
        out.add(&alpha, &c);
    }
    out
}

/// `LLT_{S,D}(x_1, ..., x_N; q)`.
pub fn llt(shape: &StackShape, n_vars: usize) -> Result<MultiPoly, PathError> {
    llt_content(shape).to_x_poly(n_vars)
}

fn require_two_columns(shape: &StackShape) -> Result<(), PathError> {
    if shape.k() > 1 {
        return Err(PathError::NotTwoColumn(shape.k()));
    }
    Ok(())
}

/// For a shape with at most two columns, `λ ↦ Σ q^{hdinv(P)}` over labelings of
/// content `λ` whose reading word is Yamanouchi. Zero entries are omitted.
pub fn yamanouchi_schur(shape: &StackShape) -> Result<BTreeMap<Partition, MultiPoly>, PathError> {
    require_two_columns(shape)?;
    let mut out = BTreeMap::new();
    for lambda in Partition::all(shape.order()) {
        let alpha = Composition::new(lambda.parts().to_vec()).expect("positive parts");
        let mut c = MultiPoly::zero();
        for p in StackPath::labelings(shape, &LabelSpec::Content(alpha)) {
            if is_yamanouchi(&p.reading_word()) {
                c += &qpow(p.hdinv());
            }
        }
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

/// Every labeled path in `LD(S)` for `S ∈ Stack_{n,0} ∪ Stack_{n,1}` whose reading
/// word is Yamanouchi.
pub fn two_column_instances(n: usize) -> Vec<StackPath> {
    let mut out = Vec::new();
    for k in 0..=1.min(n.saturating_sub(1)) {
        for shape in StackShape::all(n, k) {
            for m in 0..=n / 2 {
                let lambda =
                    Composition::new(Partition::two_column(m, n - 2 * m).parts().to_vec()).expect("positive parts");
                out.extend(
                    StackPath::labelings(&shape, &LabelSpec::Content(lambda))
                        .into_iter()
                        .filter(|p| is_yamanouchi(&p.reading_word())),
                );
            }
        }
    }
    out
}

/// `(m, j) ↦ Σ q^{hdinv}` over [`two_column_instances`] with content `2^m 1^{n-2m}`
/// and area `j`: the coefficient of `t^j s_{2^m,1^{n-2m}}` in `Rise_{n,0} + Rise_{n,1}`.
pub fn two_column_table(n: usize) -> BTreeMap<(usize, usize), MultiPoly> {
    let mut out: BTreeMap<(usize, usize), MultiPoly> = BTreeMap::new();
    for p in two_column_instances(n) {
        let m = p.labels().len() - p.content().len();
        *out.entry((m, p.area())).or_insert_with(MultiPoly::zero) += &qpow(p.hdinv());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The two shapes an XY diagram can take, read from the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum XYClass {
    /// `a` left-only X rows, `b` XY rows, `c` XX rows, then `d` single X rows all
    /// on one side (`side` is `None` when `d = 0`).
    TypeI { a: usize, b: usize, c: usize, d: usize, side: Option<Side> },
    /// `a` left-only X rows, `b ≥ 1` XY rows, `1 ≤ c ≤ a` right-only Y rows, then
    /// `d` right-only X rows.
    TypeII { a: usize, b: usize, c: usize, d: usize },
}

/// A two-column array of X's and Y's. The left column fills heights
/// `0..left.len()`, the right column starts at height `area`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XYDiagram {
    area: usize,
    left: Vec<Letter>,
    right: Vec<Letter>,
}

type Row = (Option<Letter>, Option<Letter>);

impl XYDiagram {
    pub fn new(area: usize, left: Vec<Letter>, right: Vec<Letter>) -> Result<XYDiagram, PathError> {
        let bad = |why: &str| Err(PathError::InvalidDiagram(why.to_string()));
        if left.first() != Some(&Letter::X) {
            return bad("the lower left square must hold an X");
        }
        if area >= left.len() {
            return bad("the right column must start below the top of the left column");
        }
        if left.contains(&Letter::Y) {
            return bad("a Y in the left column");
        }
        if right.windows(2).any(|w| w[0] == Letter::X && w[1] == Letter::Y) {
            return bad("a Y directly above an X");
        }
        let d = XYDiagram { area, left, right };
        let (mut xs, mut ys) = (0usize, 0usize);
        for (l, r) in d.rows() {
            for letter in [l, r].into_iter().flatten() {
                match letter {
                    Letter::X => xs += 1,
                    Letter::Y => ys += 1,
                }
                if ys > xs {
                    return bad("more Y's than X's in a bottom-to-top prefix");
                }
            }
        }
        Ok(d)
    }

    pub fn area(&self) -> usize {
        self.area
    }

    pub fn left(&self) -> &[Letter] {
        &self.left
    }

    pub fn right(&self) -> &[Letter] {
        &self.right
    }

    /// Rows from height 0 upward.
    pub fn rows(&self) -> Vec<Row> {
        let top = self.left.len().max(self.area + self.right.len());
        (0..top)
            .map(|h| {
                let r = h.checked_sub(self.area).and_then(|i| self.right.get(i)).copied();
                (self.left.get(h).copied(), r)
            })
            .collect()
    }

    /// Left squares immediately northwest of a right square, plus rows holding two X's.
    pub fn hdinv(&self) -> usize {
        let rows = self.rows();
        let diagonal =
            (0..rows.len().saturating_sub(1)).filter(|&h| rows[h].1.is_some() && rows[h + 1].0.is_some()).count();
        let double_x = rows.iter().filter(|r| **r == (Some(Letter::X), Some(Letter::X))).count();
        diagonal + double_x
    }

    pub fn classify(&self) -> Result<XYClass, PathError> {
        use Letter::{X, Y};
        let rows = self.rows();
        let a = self.area;
        let run = |from: usize, want: Row| rows[from..].iter().take_while(|r| **r == want).count();
        let b = run(a, (Some(X), Some(Y)));
        let after_b = a + b;
        let c = run(after_b, (Some(X), Some(X)));
        let rest = &rows[after_b + c..];
        let unclassifiable = || Err(PathError::Unclassifiable(self.to_string()));
        if rest.iter().all(|r| *r == (Some(X), None)) {
            let side = (!rest.is_empty()).then_some(Side::Left);
            return Ok(XYClass::TypeI { a, b, c, d: rest.len(), side });
        }
        if rest.iter().all(|r| *r == (None, Some(X))) {
            return Ok(XYClass::TypeI { a, b, c, d: rest.len(), side: Some(Side::Right) });
        }
        if c > 0 || b == 0 {
            return unclassifiable();
        }
        let cy = run(after_b, (None, Some(Y)));
        let dx = run(after_b + cy, (None, Some(X)));
        if cy == 0 || cy > a || after_b + cy + dx != rows.len() {
            return unclassifiable();
        }
        Ok(XYClass::TypeII { a, b, c: cy, d: dx })
    }

    /// The labeled path with this diagram: X's and Y's are numbered separately in
    /// bottom-to-top, left-to-right order. A one-column diagram with area 0 is
    /// the path of the all-vertical stack.
    pub fn to_path(&self) -> Result<StackPath, PathError> {
        let (mut xs, mut ys) = (0, 0);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (l, r) in self.rows() {
            for (letter, col) in [(l, &mut left), (r, &mut right)] {
                if let Some(letter) = letter {
                    let label = match letter {
                        Letter::X => {
                            xs += 1;
                            xs
                        }
                        Letter::Y => {
                            ys += 1;
                            ys
                        }
                    };
                    col.push(label);
                }
            }
        }
        let n = left.len() + right.len();
        let (diag, x): (Vec<usize>, Vec<usize>) = if right.is_empty() && self.area == 0 {
            (vec![1], vec![0; n])
        } else {
            let s = left.len() + 1 - self.area;
            let x = (0..n).map(|i| usize::from(i >= left.len())).collect();
            (vec![1, s], x)
        };
        let labels = left.into_iter().chain(right).collect();
        StackPath::new(StackShape::new(&diag, x)?, labels)
    }
}

/// The XY diagram of a path with at most two columns and a Yamanouchi reading word.
pub fn xy_diagram(p: &StackPath) -> Result<XYDiagram, PathError> {
    require_two_columns(p.shape())?;
    let w = p.reading_word();
    if !is_yamanouchi(&w) {
        return Err(PathError::NotYamanouchi(w));
    }
    let h = p.h();
    let x = p.shape().x_positions();
    let top = h.iter().copied().max().unwrap_or(0);
    let mut seen = vec![false; p.labels().iter().copied().max().unwrap_or(0) + 1];
    let mut left = Vec::new();
    let mut right = Vec::new();
    for height in 0..=top {
        for col in 0..=1 {
            if let Some(i) = (0..p.order()).find(|&i| h[i] == height && x[i] == col) {
                let l = p.labels()[i];
                let letter = if seen[l] { Letter::Y } else { Letter::X };
                seen[l] = true;
                if col == 0 { &mut left } else { &mut right }.push(letter);
            }
        }
    }
    XYDiagram::new(p.area(), left, right)
}

impl fmt::Display for XYDiagram {
    /// Rows from the top down, `.` for a missing square, separated by `/`. A
    /// one-column diagram with positive area carries a trailing ` area=N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |l: Option<Letter>| match l {
            Some(Letter::X) => 'X',
            Some(Letter::Y) => 'Y',
            None => '.',
        };
        let rows: Vec<String> = self.rows().iter().rev().map(|&(l, r)| [show(l), show(r)].iter().collect()).collect();
        f.write_str(&rows.join("/"))?;
        if self.right.is_empty() && self.area > 0 {
            write!(f, " area={}", self.area)?;
        }
        Ok(())
    }
}

impl FromStr for XYDiagram {
    type Err = PathError;

    /// Inverse of `Display`; the area is the height of the lowest right square,
    /// or the ` area=N` suffix (default 0) for a one-column diagram.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || PathError::Parse(text.to_string());
        let (s, area) = match text.trim().split_once(" area=") {
            Some((rows, a)) => (rows, Some(a.trim().parse::<usize>().map_err(|_| bad())?)),
            None => (text.trim(), None),
        };
        let mut left = Vec::new();
        let mut right: Vec<Letter> = Vec::new();
        let mut right_start = None;
        for (h, row) in s.split('/').rev().enumerate() {
            let cells: Vec<char> = row.trim().chars().collect();
            if cells.len() != 2 {
                return Err(bad());
            }
            let parse = |c: char| match c {
                'X' => Ok(Some(Letter::X)),
                'Y' => Ok(Some(Letter::Y)),
                '.' => Ok(None),
                _ => Err(bad()),
            };
            if let Some(l) = parse(cells[0])? {
                if left.len() != h {
                    return Err(bad());
                }
                left.push(l);
            }
            if let Some(r) = parse(cells[1])? {
                let start = *right_start.get_or_insert(h);
                if start + right.len() != h {
                    return Err(bad());
                }
                right.push(r);
            }
        }
        match (right_start, area) {
            (Some(_), Some(_)) => Err(bad()),
            (Some(start), None) => XYDiagram::new(start, left, right),
            (None, a) => XYDiagram::new(a.unwrap_or(0), left, right),
        }
    }
}
