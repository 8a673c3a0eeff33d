use super::field::FieldTable;
use crate::error::Result;

/// An `n × n` array over symbols `0..n`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<usize>,
}

impl LatinSquare {
    pub fn new(order: usize, cells: Vec<usize>) -> Self {
        assert_eq!(cells.len(), order * order, "cell count");
        Self { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.order + col]
    }

    /// Every symbol exactly once in each row and column.
    pub fn is_latin(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            (0..n).all(|j| {
                let (a, b) = (self.get(i, j), self.get(j, i));
                a < n && b < n && !std::mem::replace(&mut row[a], true) && !std::mem::replace(&mut col[b], true)
            })
        })
    }

    /// Superimposing the two squares yields every ordered symbol pair once.
    pub fn is_orthogonal_to(&self, other: &Self) -> bool {
        let n = self.order;
        if other.order != n {
            return false;
        }
        let mut seen = vec![false; n * n];
        self.cells
            .iter()
            .zip(&other.cells)
            .all(|(&a, &b)| a < n && b < n && !std::mem::replace(&mut seen[a * n + b], true))
    }
}

/// The `q − 1` squares `L_a(x, y) = a·x + y`, `a ∈ GF(q)^*`.
pub fn mols_from_field(q: usize) -> Result<Vec<LatinSquare>> {
    let f = FieldTable::new(q)?;
    Ok((1..q)
        .map(|a| {
            let cells = (0..q).flat_map(|x| (0..q).map(move |y| (x, y))).map(|(x, y)| f.add(f.mul(a, x), y)).collect();
            LatinSquare::new(q, cells)
        })
        .collect())
}
