//! Classical stabilizer forms, used to cross-check the generic engine away from
//! the quaternionic case.

use crate::error::Result;
use crate::exterior::{KForm, Monomial};
use crate::linalg::scalar::q;

/// `φ = e123 + e145 + e167 + e246 - e257 - e347 - e356` on R^7, stabilizer G₂.
pub fn g2_form() -> Result<KForm> {
    associative(7, 0)
}

fn associative(dim: usize, shift: usize) -> Result<KForm> {
    const TERMS: [([usize; 3], i64); 7] = [
        ([1, 2, 3], 1),
        ([1, 4, 5], 1),
        ([1, 6, 7], 1),
        ([2, 4, 6], 1),
        ([2, 5, 7], -1),
        ([3, 4, 7], -1),
        ([3, 5, 6], -1),
    ];
    let terms = TERMS.iter().map(|(idx, c)| {
        let zero_based: Vec<usize> = idx.iter().map(|i| i - 1 + shift).collect();
        (Monomial::from_indices(&zero_based).expect("increasing"), q(*c))
    });
    KForm::from_terms(dim, 3, terms)
}

/// `Φ = e⁰∧φ + *φ` on R^8 = R ⊕ R^7, stabilizer Spin(7).
pub fn spin7_form() -> Result<KForm> {
    let phi = associative(8, 1)?;
    let e0 = KForm::monomial(8, &[0])?;
    let psi7 = g2_form()?.hodge();
    let psi = KForm::from_terms(
        8,
        4,
        psi7.terms().map(|(m, c)| (Monomial::from_indices(&m.indices().map(|i| i + 1).collect::<Vec<_>>()).expect("increasing"), c.clone())),
    )?;
    e0.wedge(&phi)?.add(&psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gstructure::engine::{is_bracket_closed, is_skew_algebra};
    use crate::gstructure::StructureForm;

    #[test]
    fn stabilizer_dimensions() {
        let g2 = StructureForm::single(g2_form().unwrap()).unwrap().isotropy_algebra();
        assert_eq!(g2.dim(), 14);
        assert!(is_bracket_closed(&g2).unwrap() && is_skew_algebra(&g2).unwrap());
        let spin7 = StructureForm::single(spin7_form().unwrap()).unwrap().isotropy_algebra();
        assert_eq!(spin7.dim(), 21);
        assert!(is_bracket_closed(&spin7).unwrap());
    }
}
