use super::linalg::rref;
use crate::arith::Rational;
use crate::p1::P1List;
use num_traits::{One, Zero};

/// The quotient of the free Q-module on P1(Z/N) by
/// xi(g) + xi(gS) = 0 and xi(g) + xi(gR) + xi(gR^2) = 0.
///
/// The two-term relations are applied first (pairing g with gS); the three-term
/// relations are then put in reduced echelon form over the pair variables, and the
/// free columns give canonical coordinates.
#[derive(Clone, Debug)]
pub struct HomologyPresentation {
    rank: usize,
    images: Vec<Vec<Rational>>,
    two_term: Vec<(usize, usize)>,
    three_term: Vec<[usize; 3]>,
}

impl HomologyPresentation {
    pub fn new(list: &P1List) -> Self {
        let n = list.len();
        // pair variable and sign for each generator; None when xi(g) is torsion
        let mut var_of: Vec<Option<(usize, bool)>> = vec![None; n];
        let mut two_term = Vec::new();
        let mut nvars = 0;
        for i in 0..n {
            let j = list.times_s(i);
            two_term.push((i, j));
            if i < j {
                var_of[i] = Some((nvars, true));
                var_of[j] = Some((nvars, false));
                nvars += 1;
            }
        }
        let mut three_term = Vec::new();
        let mut rows = Vec::new();
        for i in 0..n {
            let j = list.times_r(i);
            let k = list.times_r(j);
            if i > j || i > k {
                continue;
            }
            three_term.push([i, j, k]);
            let mut row = vec![Rational::zero(); nvars];
            for t in [i, j, k] {
                if let Some((v, pos)) = var_of[t] {
                    if pos {
                        row[v] += Rational::one();
                    } else {
                        row[v] -= Rational::one();
                    }
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
        let pivots = rref(&mut rows, nvars);
        let free: Vec<usize> = (0..nvars).filter(|v| !pivots.contains(v)).collect();
        let rank = free.len();
        let mut var_image = vec![vec![Rational::zero(); rank]; nvars];
        for (slot, &v) in free.iter().enumerate() {
            var_image[v][slot] = Rational::one();
        }
        for (row, &p) in rows.iter().zip(&pivots) {
            for (slot, &f) in free.iter().enumerate() {
                var_image[p][slot] = -row[f].clone();
            }
        }
        let images = var_of
            .iter()
            .map(|vs| match vs {
                None => vec![Rational::zero(); rank],
                Some((v, true)) => var_image[*v].clone(),
                Some((v, false)) => var_image[*v].iter().map(|x| -x).collect(),
            })
            .collect();
        HomologyPresentation { rank, images, two_term, three_term }
    }

    /// Dimension of the quotient.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coordinates of the generator with the given list index.
    pub fn image(&self, i: usize) -> &[Rational] {
        &self.images[i]
    }

    pub fn two_term_relations(&self) -> &[(usize, usize)] {
        &self.two_term
    }

    pub fn three_term_relations(&self) -> &[[usize; 3]] {
        &self.three_term
    }
}
