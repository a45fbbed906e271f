//! Wedge monomials `e^{i1} ∧ ... ∧ e^{ik}` (i1 < ... < ik) encoded as bit masks.
//!
//! Bit `i` stands for the 0-based index `i`; the public 1-based numbering only
//! appears at the serialization boundary. Monomials of equal degree are ordered
//! lexicographically on their increasing index tuples, which is the coordinate
//! order for every form in this crate.

use std::cmp::Ordering;
use std::collections::HashMap;

pub const MAX_DIM: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_indices(idx: &[usize]) -> Option<Monomial> {
        let mut m = 0u32;
        let mut last = None;
        for &i in idx {
            if i >= MAX_DIM || last.is_some_and(|l| i <= l) {
                return None;
            }
            m |= 1 << i;
            last = Some(i);
        }
        Some(Monomial(m))
    }

    pub fn single(i: usize) -> Monomial {
        Monomial(1 << i)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        })
    }

    /// Sign of `e^self ∧ e^other` relative to the sorted monomial, or `None`
    /// if they share an index.
    pub fn wedge_sign(self, other: Monomial) -> Option<i8> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // count pairs (i in self, j in other) with i > j
        let mut inversions = 0u32;
        for j in other.indices() {
            let above = if j + 1 >= 32 { 0 } else { self.0 >> (j + 1) };
            inversions += above.count_ones();
        }
        Some(if inversions % 2 == 0 { 1 } else { -1 })
    }

    /// `ι_{v_i} e^self = sign * e^{self \ i}`; `None` if `i` is absent.
    pub fn interior_sign(self, i: usize) -> Option<(i8, Monomial)> {
        if !self.contains(i) {
            return None;
        }
        let before = (self.0 & ((1u32 << i) - 1)).count_ones();
        let sign = if before % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial(self.0 & !(1 << i))))
    }

    pub fn complement(self, dim: usize) -> Monomial {
        let full = if dim == 32 { u32::MAX } else { (1u32 << dim) - 1 };
        Monomial(full & !self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Degree first, then lexicographic on the increasing index tuple: the
    /// monomial holding the lowest differing index comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.0, other.0);
        match a.count_ones().cmp(&b.count_ones()) {
            Ordering::Equal => {}
            o => return o,
        }
        if a == b {
            return Ordering::Equal;
        }
        let low = (a ^ b).trailing_zeros();
        if a & (1 << low) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The ordered monomial basis of `Λ^k` on `R^dim`.
#[derive(Clone, Debug)]
pub struct FormBasis {
    dim: usize,
    degree: usize,
    monos: Vec<Monomial>,
    index: HashMap<u32, usize>,
}

impl FormBasis {
    pub fn new(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_DIM, "ambient dimension {dim} exceeds {MAX_DIM}");
        let mut monos = Vec::with_capacity(binomial(dim, degree));
        if degree <= dim {
            let mut idx: Vec<usize> = (0..degree).collect();
            loop {
                monos.push(Monomial::from_indices(&idx).expect("increasing indices"));
                // next combination in lexicographic order
                let mut i = degree;
                loop {
                    if i == 0 {
                        let index = monos.iter().enumerate().map(|(k, m)| (m.0, k)).collect();
                        return FormBasis { dim, degree, monos, index };
                    }
                    i -= 1;
                    if idx[i] != i + dim - degree {
                        break;
                    }
                }
                idx[i] += 1;
                for j in i + 1..degree {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        FormBasis { dim, degree, monos, index: HashMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, i: usize) -> Monomial {
        self.monos[i]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        self.index.get(&m.0).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order_of_two_forms_in_three_dims() {
        let b = FormBasis::new(3, 2);
        let tuples: Vec<Vec<usize>> = b.monomials().iter().map(|m| m.indices().collect()).collect();
        assert_eq!(tuples, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn basis_sizes_and_sorted_order() {
        for (n, k) in [(12, 0), (12, 1), (12, 4), (12, 5), (6, 6), (4, 5)] {
            let b = FormBasis::new(n, k);
            assert_eq!(b.len(), binomial(n, k));
            assert!(b.monomials().windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(binomial(12, 5), 792);
    }

    #[test]
    fn interior_signs() {
        let e12 = Monomial::from_indices(&[0, 1]).unwrap();
        assert_eq!(e12.interior_sign(0), Some((1, Monomial::single(1))));
        assert_eq!(e12.interior_sign(1), Some((-1, Monomial::single(0))));
        assert_eq!(e12.interior_sign(2), None);
    }

    #[test]
    fn wedge_signs() {
        let e1 = Monomial::single(0);
        let e2 = Monomial::single(1);
        assert_eq!(e1.wedge_sign(e2), Some(1));
        assert_eq!(e2.wedge_sign(e1), Some(-1));
        assert_eq!(e1.wedge_sign(e1), None);
        // e13 ∧ e24 = e1324 = -e1234
        let a = Monomial::from_indices(&[0, 2]).unwrap();
        let b = Monomial::from_indices(&[1, 3]).unwrap();
        assert_eq!(a.wedge_sign(b), Some(-1));
    }
}
