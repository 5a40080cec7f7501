//! Cells of a French-notation Young diagram and the alphabets `B_μ`, `T_μ`.

use exact_algebra::Monomial;
use symfunc_core::{Alphabet, Partition};

/// Position and hook data of one cell. Row 0 is the bottom row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellStats {
    pub row: usize,
    pub col: usize,
    /// Cells strictly to the left.
    pub coarm: usize,
    /// Cells strictly below.
    pub coleg: usize,
    /// Cells strictly to the right in the same row.
    pub arm: usize,
    /// Cells strictly above in the same column.
    pub leg: usize,
}

/// All cells of `μ`, bottom row first, left to right within a row.
pub fn cells(mu: &Partition) -> Vec<CellStats> {
    let conj = mu.conjugate();
    let mut out = Vec::with_capacity(mu.size());
    for (row, &len) in mu.parts().iter().enumerate() {
        for col in 0..len {
            out.push(CellStats { row, col, coarm: col, coleg: row, arm: len - col - 1, leg: conj.part(col) - row - 1 });
        }
    }
    out
}

fn qt(a: usize, b: usize) -> Monomial {
    Monomial::qt(a as u32, b as u32)
}

/// `B_μ = Σ_c q^{a′(c)} t^{ℓ′(c)}`.
pub fn bmu(mu: &Partition) -> Alphabet {
    Alphabet::from_monomials(cells(mu).iter().map(|c| qt(c.coarm, c.coleg)))
}

/// `B_μ - 1`.
pub fn bmu_minus_one(mu: &Partition) -> Alphabet {
    bmu(mu).minus(Monomial::ONE)
}

/// `T_μ = Π_c q^{a′(c)} t^{ℓ′(c)}`.
pub fn tmu(mu: &Partition) -> Monomial {
    let (a, b) = cells(mu).iter().fold((0, 0), |(a, b), c| (a + c.coarm, b + c.coleg));
    qt(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::MultiPoly;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_by_two() {
        let b = bmu(&p(&[2, 2])).as_poly();
        let q = MultiPoly::q();
        let t = MultiPoly::t();
        assert_eq!(b, &(&MultiPoly::one() + &q) + &(&t + &(&q * &t)));
        // Coarms sum to n(μ′) = 2 and colegs to n(μ) = 2.
        assert_eq!(tmu(&p(&[2, 2])), qt(2, 2));
        assert_eq!(bmu(&p(&[1])).as_poly(), MultiPoly::one());
    }

    #[test]
    fn four_three_has_the_marked_cell() {
        let c = cells(&p(&[4, 3]));
        assert_eq!(c.len(), 7);
        assert!(c.iter().any(|c| c.coarm == 2 && c.coleg == 1));
        assert_eq!((c[0].coarm, c[0].coleg), (0, 0));
        // Bottom-left cell of (4,3): three cells to the right, one above.
        assert_eq!((c[0].arm, c[0].leg), (3, 1));
    }
}
