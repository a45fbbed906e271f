//! Helpers shared by the property tests and the acceptance run.
#![allow(dead_code)]

use qkcheck::exterior::{FormBasis, KForm, Monomial};
use qkcheck::linalg::scalar::q;
use qkcheck::linalg::Scalar;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn mono(dim: usize, mask: u32) -> KForm {
    KForm::from_terms(dim, mask.count_ones() as usize, [(Monomial(mask), q(1))]).unwrap()
}

pub fn sign(e: usize) -> Scalar {
    if e % 2 == 0 {
        q(1)
    } else {
        q(-1)
    }
}

/// Every identity we rely on, for one pair of forms.
pub fn check_pair(a: &KForm, b: &KForm) {
    let (dim, p, r) = (a.dim(), a.degree(), b.degree());
    if p + r <= dim {
        assert_eq!(a.wedge(b).unwrap(), b.wedge(a).unwrap().scale(&sign(p * r)), "graded commutativity");
        for i in (0..dim).filter(|_| p + r > 0) {
            let lhs = a.wedge(b).unwrap().interior_basis(i).unwrap();
            let mut rhs = KForm::zero(dim, p + r - 1);
            if p > 0 {
                rhs = rhs.add(&a.interior_basis(i).unwrap().wedge(b).unwrap()).unwrap();
            }
            if r > 0 {
                rhs = rhs.add(&a.wedge(&b.interior_basis(i).unwrap()).unwrap().scale(&sign(p))).unwrap();
            }
            assert_eq!(lhs, rhs, "anti-derivation at v_{i}");
        }
    }
    assert_eq!(a.hodge().hodge(), a.scale(&sign(p * (dim - p))), "** sign");
    if p == r {
        let inner = a.inner(b).unwrap();
        assert_eq!(a.wedge(&b.hodge()).unwrap(), KForm::volume(dim).scale(&inner), "α∧*β = ⟨α,β⟩vol");
        assert_eq!(a.hodge().inner(&b.hodge()).unwrap(), inner, "isometry");
    }
}

pub fn random_form(rng: &mut ChaCha8Rng, dim: usize, degree: usize, terms: usize) -> KForm {
    let basis = FormBasis::new(dim, degree);
    let entries = (0..terms).map(|_| {
        let m = basis.monomial(rng.gen_range(0..basis.len()));
        let c = Scalar::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=7).into());
        (m, c)
    });
    let mut f = KForm::zero(dim, degree);
    for (m, c) in entries {
        f = f.add(&KForm::from_terms(dim, degree, [(m, c)]).unwrap()).unwrap();
    }
    f
}

/// Monomial pairs for every `N ≤ max_dim`.
pub fn check_all_monomial_pairs(max_dim: usize) {
    for dim in 1..=max_dim {
        for x in 0..1u32 << dim {
            for y in 0..1u32 << dim {
                check_pair(&mono(dim, x), &mono(dim, y));
            }
        }
    }
}

/// 100 seeded random forms on R^12, each paired with its neighbour, itself
/// and a fresh form of equal degree.
pub fn check_random_forms_dim12(seed: u64) {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forms: Vec<KForm> = (0..100)
        .map(|_| {
            let degree = rng.gen_range(0..=12);
            random_form(&mut rng, 12, degree, 6)
        })
        .collect();
    for pair in forms.chunks(2) {
        check_pair(&pair[0], &pair[1]);
        check_pair(&pair[1], &pair[0]);
        check_pair(&pair[0], &pair[0]);
        let partner = random_form(&mut rng, 12, pair[0].degree(), 6);
        check_pair(&pair[0], &partner);
    }
}
