//! γ: ordered multiset partitions with `k + 1` blocks to densely labeled paths
//! of order `k + 1` with `wdinv = 0`, taking minimaj to area.
//!
//! The entries of the `i`-th run of τ (counted from the right) land in squares
//! of area `i`. Run 0's blocks form a staircase `(NE)^p`. The block straddling
//! runs `i + 1` and `i` (or ending run `i + 1`) is split: its left part becomes
//! a new north square above the topmost area-`i` north square, its right part
//! an east square beside it. Entries of that area-`i` square larger than the
//! straddling block's first entry ride along in the new east square and are
//! later pushed up to the highest east square of area `i`. So are right-part
//! entries that would not fit below the north square stacked on that east
//! square once the next run's blocks are inserted.

use symfunc_core::Composition;

use path_combinatorics::{DensePath, DyckPath};

use crate::osp::OrderedMultisetPartition;
use crate::OspError;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Step {
    north: bool,
    labels: Vec<usize>,
}

impl Step {
    fn north(labels: Vec<usize>) -> Step {
        Step { north: true, labels }
    }

    fn east(labels: Vec<usize>) -> Step {
        Step { north: false, labels }
    }
}

/// Area of the square each step reaches, `y - 1 - x` after the step.
fn areas(steps: &[Step]) -> Vec<i64> {
    let (mut x, mut y) = (0i64, 0i64);
    steps
        .iter()
        .map(|s| {
            if s.north {
                y += 1;
            } else {
                x += 1;
            }
            y - 1 - x
        })
        .collect()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn check_shape(alpha: &Composition, k: usize, content: Composition, blocks: usize) -> Result<(), OspError> {
    if &content != alpha || blocks != k + 1 {
        return Err(OspError::Mismatch {
            alpha: format!("{:?}", alpha.parts()),
            blocks: k + 1,
            found: format!("content {:?} with {blocks} blocks", content.parts()),
        });
    }
    Ok(())
}

/// `γ_{α,k}(π)` for `π ∈ OSP(α, k + 1)`.
pub fn gamma(alpha: &Composition, k: usize, pi: &OrderedMultisetPartition) -> Result<DensePath, OspError> {
    check_shape(alpha, k, pi.content(), pi.block_count())?;
    let w = pi.minimaj_word();
    let tau = w.tau();
    let r = w.boundaries();
    let s = w.runs();
    let block = |start: usize| sorted(tau[w.spans()[w.block_at(start - 1)].clone()].to_vec());

    let mut steps: Vec<Step> = Vec::new();
    let (mut last_e, mut straddle_n) = (0, 0);
    let mut moved: Vec<usize> = Vec::new();
    let mut right: Vec<usize> = Vec::new();
    for i in 0..s {
        let full = w.full_blocks(i);
        let top_n = if i == 0 {
            for &b in full.iter().rev() {
                steps.push(Step::north(block(b)));
                steps.push(Step::east(Vec::new()));
            }
            steps.len() - 2
        } else {
            let mut pos = last_e + 1;
            for &b in full.iter().rev() {
                steps.insert(pos, Step::north(block(b)));
                steps.insert(pos + 1, Step::east(Vec::new()));
                pos += 2;
            }
            if full.is_empty() {
                straddle_n
            } else {
                // The lowest new north square sits on the straddle's east square,
                // so right-part entries not below it must move up as well.
                let above = steps[last_e + 1].labels[0];
                moved.extend(right.iter().copied().filter(|&v| v >= above));
                steps[last_e].labels.retain(|v| !moved.contains(v));
                steps[pos - 1].labels = sorted(std::mem::take(&mut moved));
                pos - 2
            }
        };
        if i + 1 < s {
            let cut = r[i + 1];
            let span = w.spans()[w.block_at(cut - 1)].clone();
            let lead = tau[span.start];
            let c = steps[top_n].labels.iter().copied().filter(|&v| v < lead).max().ok_or_else(|| {
                OspError::Invalid(format!("{pi}: no entry below {lead} in the square {:?}", steps[top_n].labels))
            })?;
            moved = steps[top_n].labels.iter().copied().filter(|&v| v > c).collect();
            steps[top_n].labels.retain(|&v| v <= c);
            right = sorted(tau[cut..span.end].to_vec());
            let east = sorted(right.iter().chain(&moved).copied().collect());
            steps.insert(top_n + 1, Step::north(sorted(tau[span.start..cut].to_vec())));
            steps.insert(top_n + 2, Step::east(east));
            straddle_n = top_n + 1;
            last_e = top_n + 2;
        }
    }
    to_dense(&steps)
}

fn to_dense(steps: &[Step]) -> Result<DensePath, OspError> {
    let word: String = steps.iter().map(|s| if s.north { 'N' } else { 'E' }).collect();
    let mut labels = Vec::new();
    for (step, area) in steps.iter().zip(areas(steps)) {
        if area >= 0 {
            labels.push(step.labels.clone());
        } else if !step.labels.is_empty() {
            return Err(OspError::Invalid(format!("labels {:?} below the diagonal", step.labels)));
        }
    }
    Ok(DensePath::new(DyckPath::from_word(&word)?, labels)?)
}

fn from_dense(p: &DensePath) -> Vec<Step> {
    let mut squares = p.squares().iter();
    let (mut x, mut y) = (0, 0);
    p.path()
        .word()
        .chars()
        .map(|ch| {
            let north = ch == 'N';
            if north {
                y += 1;
            } else {
                x += 1;
            }
            let labels = if y > x { squares.next().expect("one square per slot").labels.clone() } else { Vec::new() };
            Step { north, labels }
        })
        .collect()
}

/// Indices of north steps reaching area `a`, in path order.
fn north_at(steps: &[Step], a: i64) -> Vec<usize> {
    let ar = areas(steps);
    (0..steps.len()).filter(|&i| steps[i].north && ar[i] == a).collect()
}

/// Undoes the insertions of [`gamma`] level by level, from the highest area down.
pub fn gamma_inverse(alpha: &Composition, k: usize, p: &DensePath) -> Result<OrderedMultisetPartition, OspError> {
    check_shape(alpha, k, p.content(), p.path().order())?;
    let reject = |why: &str| OspError::NotInImage(format!("{p}: {why}"));
    if p.wdinv() != 0 {
        return Err(reject(&format!("wdinv is {}", p.wdinv())));
    }
    let mut steps = from_dense(p);
    let s =
        areas(&steps).iter().zip(&steps).filter(|(_, st)| st.north).map(|(a, _)| *a).max().unwrap_or(0) as usize + 1;
    let mut full: Vec<Vec<Vec<usize>>> = vec![Vec::new(); s];
    let mut straddles: Vec<Vec<usize>> = vec![Vec::new(); s];
    for i in (0..s).rev() {
        if i + 1 < s {
            let ns = north_at(&steps, i as i64 + 1);
            let &[n] = ns.as_slice() else {
                return Err(reject(&format!("{} north squares at area {}", ns.len(), i + 1)));
            };
            if n == 0 || !steps[n - 1].north || steps.get(n + 1).is_none_or(|st| st.north) {
                return Err(reject(&format!("the area {} square is not a split block", i + 1)));
            }
            let c = *steps[n - 1].labels.last().expect("north squares are nonempty");
            let left = steps[n].labels.clone();
            let (moved, right): (Vec<usize>, Vec<usize>) = steps[n + 1].labels.iter().partition(|&&v| v > c);
            if left[0] <= c || moved.iter().any(|&v| v < left[0]) {
                return Err(reject(&format!("labels at area {} are out of order", i + 1)));
            }
            steps[n - 1].labels = sorted([steps[n - 1].labels.clone(), moved].concat());
            steps.drain(n..n + 2);
            straddles[i] = sorted([left, right].concat());
        }
        let ns = north_at(&steps, i as i64);
        if i == 0 {
            if steps.len() != 2 * ns.len()
                || (0..ns.len()).any(|j| ns[j] != 2 * j || !steps[2 * j + 1].labels.is_empty())
            {
                return Err(reject("area 0 is not a staircase"));
            }
            full[0] = ns.iter().rev().map(|&j| steps[j].labels.clone()).collect();
            steps.clear();
            continue;
        }
        let first = *ns.first().ok_or_else(|| reject(&format!("no north square at area {i}")))?;
        let pcount = ns.len() - 1;
        let staircase = (0..pcount).all(|j| ns[j + 1] == first + 2 + 2 * j && !steps[first + 3 + 2 * j].north);
        if !staircase || steps.get(first + 1).is_none_or(|st| st.north) {
            return Err(reject(&format!("area {i} is not a staircase")));
        }
        if pcount > 0 {
            if (0..pcount - 1).any(|j| !steps[first + 3 + 2 * j].labels.is_empty()) {
                return Err(reject(&format!("a lower east square beside area {i} is labeled")));
            }
            let moved = std::mem::take(&mut steps[first + 1 + 2 * pcount].labels);
            steps[first + 1].labels = sorted([steps[first + 1].labels.clone(), moved].concat());
        }
        full[i] = ns[1..].iter().rev().map(|&j| steps[j].labels.clone()).collect();
        steps.drain(first + 2..first + 2 + 2 * pcount);
    }
    let mut blocks = Vec::new();
    for i in (0..s).rev() {
        blocks.extend(full[i].iter().cloned());
        if i > 0 {
            blocks.push(straddles[i - 1].clone());
        }
    }
    let pi = OrderedMultisetPartition::new(blocks)?;
    if pi.content() != *alpha || gamma(alpha, k, &pi)? != *p {
        return Err(reject("the recovered partition maps elsewhere"));
    }
    Ok(pi)
}
