//! Suite orchestration: which checks run, in which mode, and for which `n`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exterior::{binomial, Endomorphism, FormBasis};
use crate::gstructure::conditions::{condition_c2_check, rank_one_decompose, reconstructs};
use crate::gstructure::engine::{a_map_check, is_bracket_closed, is_skew_algebra, so_algebra};
use crate::gstructure::symbol::{exactness_at_1, random_covector, seeded_rng, symbol_map};
use crate::gstructure::{GStructure, StructureForm};
use crate::hodge::{invariant_subspace, j_matrix, split_e1, trivial_summand_crosscheck, verify_j_eigenvalues, E1Splitting};
use crate::linalg::scalar::{frac, q, render};
use crate::linalg::{LinearSubspace, Scalar};
use crate::quaternionic::{basis_covector, build_phi, build_triple, explicit_structure_algebra, kahler_forms, structure_constants};
use crate::rep::bochner::audit_bochner;
use crate::rep::casimir::{format_isotypic, CasimirOracle, IsotypicDecomposition};
use crate::rep::tables::{exterior_target, table_dimension_check, DecompositionTable, Space};
use crate::rep::weyl::{lambda_dim, weight_of, weyl_dim, weyl_dim_classical};
use crate::report::{CheckReport, Report, TableExport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Isotropy,
    Dims,
    Symbols,
    Weyl,
    Tables,
    Casimir,
    Hodge,
    Invariants,
    Bochner,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Isotropy,
        Suite::Dims,
        Suite::Symbols,
        Suite::Weyl,
        Suite::Tables,
        Suite::Casimir,
        Suite::Hodge,
        Suite::Invariants,
        Suite::Bochner,
    ];

    /// Parses a comma-separated list; `all` selects every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument("no suite selected".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Isotropy => "isotropy",
            Suite::Dims => "dims",
            Suite::Symbols => "symbols",
            Suite::Weyl => "weyl",
            Suite::Tables => "tables",
            Suite::Casimir => "casimir",
            Suite::Hodge => "hodge",
            Suite::Invariants => "invariants",
            Suite::Bochner => "bochner",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Assert,
    Observe,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "assert" => Ok(Mode::Assert),
            "observe" => Ok(Mode::Observe),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: usize,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub mode: Mode,
    /// Record wall-clock times; off by default so reruns are byte-identical.
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(n: usize, suites: Vec<Suite>, seed: u64) -> Self {
        SuiteConfig { n, suites, seed, mode: Mode::Assert, timings: false }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::InvalidArgument("no suite selected".into()));
        }
        Ok(())
    }
}

/// Objects shared between suites, built on first use.
pub struct Model {
    pub n: usize,
    gs: OnceLock<GStructure>,
    explicit: OnceLock<LinearSubspace>,
    split: OnceLock<E1Splitting>,
    oracles: [OnceLock<CasimirOracle>; 6],
}

impl Model {
    pub fn new(n: usize) -> Self {
        Model {
            n,
            gs: OnceLock::new(),
            explicit: OnceLock::new(),
            split: OnceLock::new(),
            oracles: Default::default(),
        }
    }

    pub fn dim(&self) -> usize {
        4 * self.n
    }

    /// The structure with its computed isotropy algebra.
    pub fn gs(&self) -> &GStructure {
        self.gs.get_or_init(|| {
            let form = StructureForm::single(build_phi(self.n).expect("n ≥ 1")).expect("Φ is nonzero");
            GStructure::new(form).expect("isotropy lives in End(V)")
        })
    }

    pub fn explicit(&self) -> &LinearSubspace {
        self.explicit.get_or_init(|| explicit_structure_algebra(self.n).expect("n ≥ 1"))
    }

    pub fn split(&self) -> Result<&E1Splitting> {
        if let Some(s) = self.split.get() {
            return Ok(s);
        }
        let s = split_e1(self.gs())?;
        Ok(self.split.get_or_init(|| s))
    }

    pub fn oracle(&self, k: usize) -> Result<&CasimirOracle> {
        if let Some(o) = self.oracles[k].get() {
            return Ok(o);
        }
        let o = CasimirOracle::new(self.n, k)?;
        Ok(self.oracles[k].get_or_init(|| o))
    }
}

/// A report plus the smallest `n` for which its claim is asserted.
struct Gated(CheckReport, usize);

fn g(r: CheckReport, min_n: usize) -> Gated {
    Gated(r, min_n)
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn isotropy(m: &Model) -> Result<Vec<Gated>> {
    let n = m.n;
    let gs = m.gs();
    let alg = gs.algebra();
    let t = build_triple(n)?;
    let minus_id = Endomorphism::identity(4 * n).scale(&q(-1));
    let quaternionic = [&t.i, &t.j, &t.k].iter().all(|x| x.compose(x).ok() == Some(minus_id.clone()))
        && t.i.compose(&t.j)? == t.k
        && [&t.i, &t.j, &t.k].iter().all(|x| x.is_skew());
    let sp1_kills = [&t.i, &t.j, &t.k].iter().all(|x| gs.form().annihilated_by(x).unwrap_or(false));
    let explicit_kills = crate::quaternionic::algebra_basis(m.explicit())
        .iter()
        .all(|a| gs.form().annihilated_by(a).unwrap_or(false));
    let [wi, _, _] = kahler_forms(&t)?;
    let consts = structure_constants(n)?;
    let formula = 2 * n * n + n + 3;
    Ok(vec![
        g(CheckReport::compare("isotropy.dim", "dim of the isotropy algebra of Φ is 2n² + n + 3", formula, alg.dim()), 2),
        g(CheckReport::compare("isotropy.explicit", "the isotropy algebra equals sp(n) ⊕ sp(1)", "true", yes(alg.equals(m.explicit())?)), 2),
        g(CheckReport::compare("isotropy.bracket_closed", "the isotropy algebra is closed under the bracket", "true", yes(is_bracket_closed(alg)?)), 1),
        g(CheckReport::compare("isotropy.in_so", "the isotropy algebra lies in so(4n)", "true", yes(is_skew_algebra(alg)?)), 2),
        g(CheckReport::compare("isotropy.explicit_annihilates", "every element of sp(n) ⊕ sp(1) annihilates Φ", "true", yes(explicit_kills)), 1),
        g(CheckReport::compare("isotropy.sp1_annihilates", "I, J, K annihilate Φ", "true", yes(sp1_kills)), 1),
        g(CheckReport::compare("isotropy.triple", "I² = J² = K² = -Id, IJ = K, all skew", "true", yes(quaternionic)), 1),
        g(CheckReport::compare("isotropy.omega_norm", "|ω_I|² = 2n", 2 * n, render(&wi.norm2())), 1),
        g(CheckReport::observed("isotropy.c_n", "Φ^n = c_n vol", render(&consts.c_n)), 1),
        g(CheckReport::observed("isotropy.phi_norm2", "|Φ|²", render(&consts.phi_norm2)), 1),
    ])
}

fn dims(m: &Model) -> Result<Vec<Gated>> {
    let n = m.n;
    let gs = m.gs();
    let big_n = 4 * n;
    let formula = 24 * n * n * n - 12 * n * n - 12 * n;
    let g2 = gs.gk(2)?.dim();
    let p2 = gs.tensor_dim(2) - g2;
    let mut out = vec![
        g(CheckReport::compare("dims.dim_e2", "dim E² = 24n³ - 12n² - 12n", formula, gs.ak_rank(2)?), 3),
        g(CheckReport::compare("dims.dim_p2", "dim P² = dim Λ²⊗V - dim V*⊗g = 24n³ - 12n² - 12n", formula, p2), 3),
        g(CheckReport::compare("dims.dim_g2", "dim g² = dim V*⊗g", big_n * (2 * n * n + n + 3), g2), 2),
        g(CheckReport::compare("dims.e0", "dim E⁰ = 4n", big_n, gs.ak_rank(0)?), 2),
        g(CheckReport::compare("dims.e1", "dim E¹ = dim P¹ = dim End(V) - dim g", big_n * big_n - gs.algebra().dim(), gs.ak_rank(1)?), 2),
    ];
    let a1_id = gs.form().pieces()[0].scale(&q(4));
    let computed = crate::gstructure::engine::apply_a1(gs.form(), &Endomorphism::identity(big_n))?;
    out.push(g(CheckReport::compare("dims.a1_identity", "A¹(Id) = 4Φ", "true", yes(computed[0] == a1_id)), 1));
    for r in a_map_check(big_n, gs.algebra()).or_else(|_| a_map_check(big_n, &LinearSubspace::zero(big_n * big_n)))? {
        let min = if r.id == "amap.rank_so" { 1 } else { 2 };
        out.push(g(r, min));
    }
    for k in 0..=2 {
        out.push(g(gs.abar_iso_check(k)?, if k == 2 { 3 } else { 2 }));
    }
    Ok(out)
}

fn symbols(m: &Model, seed: u64) -> Result<Vec<Gated>> {
    let gs = m.gs();
    let big_n = m.dim();
    let mut out: Vec<Gated> =
        condition_c2_check(gs.algebra(), &[0, 1, 2])?.into_iter().map(|r| g(r, 2)).collect();
    let axis = basis_covector(big_n, 0);
    out.push(g(
        CheckReport::compare("symbols.sb0_rank", "Sb₀(u) is injective", big_n, symbol_map(gs, &axis, 0)?.rank()),
        2,
    ));
    let mut structured = vec![Scalar::zero(); big_n];
    structured[0] = q(1);
    structured[4.min(big_n - 1)] += q(2);
    structured[big_n - 1] += frac(-1, 3);
    let mut rng = seeded_rng(seed);
    let mut us = vec![("symbols.exact_axis".to_string(), axis, None), ("symbols.exact_structured".into(), structured, None)];
    for i in 0..5 {
        us.push((format!("symbols.exact_random{i}"), random_covector(&mut rng, big_n), Some(seed)));
    }
    for (id, u, s) in us {
        let mut r = exactness_at_1(gs, &u)?;
        r.id = id;
        r.seed = s;
        out.push(g(r, 2));
    }
    out.push(g(rank_one_roundtrip(gs, seed, 20)?, 2));
    Ok(out)
}

/// Builds `a = b + u ⊗ w` with seeded `b ∈ g`, `u`, `w` and checks that the
/// recovered witnesses reproduce `a`.
pub fn rank_one_roundtrip(gs: &GStructure, seed: u64, count: usize) -> Result<CheckReport> {
    use rand::Rng;
    let big_n = gs.dim();
    let mut rng = seeded_rng(seed.wrapping_add(42));
    let mut ok = 0;
    for _ in 0..count {
        let mut b = Endomorphism::zero(big_n);
        for x in gs.algebra_basis() {
            b = b.add(&x.scale(&q(rng.gen_range(-3..=3))))?;
        }
        let u = random_covector(&mut rng, big_n);
        let w: Vec<Scalar> = (0..big_n).map(|_| q(rng.gen_range(-5..=5))).collect();
        let a = b.add(&Endomorphism::tensor(&u, &w)?)?;
        if let Ok((b2, w2)) = rank_one_decompose(gs, &a, &u) {
            if reconstructs(gs, &a, &u, &b2, &w2)? {
                ok += 1;
            }
        }
    }
    Ok(CheckReport::compare(
        "decompose.roundtrip",
        "a = b + u⊗w is recovered with b ∈ g whenever u∧a ∈ g²",
        format!("{count}/{count}"),
        format!("{ok}/{count}"),
    )
    .with_seed(seed))
}

fn weyl(m: &Model) -> Result<Vec<Gated>> {
    let n = m.n;
    let mut agree = true;
    for p in 0..=(2 * n as u32) {
        for qq in 0..=p / 2 {
            if let Some(w) = weight_of(p, qq, n)? {
                agree &= weyl_dim(&w) == weyl_dim_classical(&w);
            }
        }
    }
    let mut out = vec![
        g(CheckReport::compare("weyl.dim_lambda10", "dim λ^1_0 = 2n", 2 * n, lambda_dim(1, 0, n)?), 1),
        g(CheckReport::compare("weyl.routes_agree", "the μ̃ form of the Weyl formula equals the classical one", "true", yes(agree)), 1),
    ];
    if n >= 2 {
        out.push(g(CheckReport::compare("weyl.dim_lambda20", "dim λ^2_0 = 2n² - n - 1", 2 * n * n - n - 1, lambda_dim(2, 0, n)?), 2));
    }
    if n >= 2 {
        out.push(g(CheckReport::observed("weyl.dim_lambda31", "dim λ^3_1", lambda_dim(3, 1, n)?), 2));
    }
    Ok(out)
}

fn tables(m: &Model) -> Result<(Vec<Gated>, Vec<TableExport>)> {
    let n = m.n;
    let gs = m.gs();
    let mut out = Vec::new();
    let mut exports = Vec::new();
    for space in Space::ALL {
        let target = match exterior_target(space, n) {
            Some(t) => t,
            None => {
                let k = match space {
                    Space::E0 => 0,
                    Space::E1 => 1,
                    _ => 2,
                };
                gs.ak_rank(k)? as u64
            }
        };
        let mut r = table_dimension_check(space, n, target)?;
        if space == Space::Lambda5 && !r.passed() {
            let extra = format!("printed total {} differs from {}; see casimir.lambda5_table", r.computed, r.claimed);
            let note = match r.note.take() {
                Some(v) => format!("{v}; {extra}"),
                None => extra,
            };
            r = r.with_note(note).into_observed();
        }
        out.push(g(r, 3));
        exports.push(DecompositionTable::printed(space).export(n)?);
    }
    Ok((out, exports))
}

fn isotypic_compare(id: &str, claim: &str, expected: &std::collections::BTreeMap<(crate::rep::WeightVector, u32), u64>, d: &IsotypicDecomposition) -> CheckReport {
    let mut computed = format_isotypic(&d.as_map());
    if !d.unidentified.is_empty() {
        let parts: Vec<String> = d
            .unidentified
            .iter()
            .map(|u| format!("unidentified{}: {}", u.sigma.map(|s| format!(" σ^{s}")).unwrap_or_default(), u.dim))
            .collect();
        computed = format!("{computed}; {}", parts.join(", "));
    }
    CheckReport::compare(id, claim, format_isotypic(expected), computed)
}

fn casimir(m: &Model) -> Result<Vec<Gated>> {
    let n = m.n;
    let gs = m.gs();
    let mut out = Vec::new();
    let o1 = m.oracle(1)?;
    let scalar = o1.c_sp.is_scalar_multiple_of_identity().is_some() && o1.c_sp1.is_scalar_multiple_of_identity().is_some();
    out.push(g(CheckReport::compare("casimir.lambda1_scalar", "both Casimirs are scalar on Λ¹", "true", yes(scalar)), 1));
    for (k, space) in [(3, Space::Lambda3), (4, Space::Lambda4)] {
        let d = m.oracle(k)?.decompose(None)?;
        let expected = DecompositionTable::printed(space).isotypic(n)?;
        out.push(g(isotypic_compare(&format!("casimir.lambda{k}"), &format!("isotypic dimensions of Λ^{k} ⊗ C match the printed table"), &expected, &d), 3));
    }
    let o5 = m.oracle(5)?;
    let d5 = o5.decompose(None)?;
    out.push(g(
        CheckReport::compare("casimir.lambda5_total", "the Casimir eigenspaces of Λ⁵ are all identified and fill it", binomial(4 * n, 5), d5.identified_dim()),
        1,
    ));
    let printed = DecompositionTable::printed(Space::Lambda5).isotypic(n)?;
    let computed = d5.as_map();
    let mut diffs = Vec::new();
    for (key, v) in &printed {
        let c = computed.get(key).copied().unwrap_or(0);
        if c != *v {
            diffs.push(format!("{}σ^{}: printed {v}, computed {c}", key.0, key.1));
        }
    }
    for (key, c) in &computed {
        if !printed.contains_key(key) {
            diffs.push(format!("{}σ^{}: printed 0, computed {c}", key.0, key.1));
        }
    }
    let mut r = isotypic_compare("casimir.lambda5_table", "isotypic dimensions of Λ⁵ ⊗ C against the printed table", &printed, &d5).into_observed();
    if !diffs.is_empty() {
        r = r.with_note(format!("differs from the printed table: {}", diffs.join("; ")));
    }
    out.push(g(r, 1));
    for (id, k, space, sub) in [("casimir.e1", 4, Space::E1, gs.ek(1)?), ("casimir.e2", 5, Space::E2, gs.ek(2)?)] {
        let d = m.oracle(k)?.decompose(Some(sub))?;
        let expected = DecompositionTable::printed(space).isotypic(n)?;
        out.push(g(isotypic_compare(id, &format!("isotypic dimensions of {space} ⊗ C match the printed table"), &expected, &d), 3));
    }
    if n >= 2 {
        let split = m.split()?;
        let o4 = m.oracle(4)?;
        let key = |p, qq, r| -> Result<((crate::rep::WeightVector, u32), u64)> {
            let w = weight_of(p, qq, n)?.ok_or_else(|| Error::Precondition("weight vanishes".into()))?;
            let d = weyl_dim(&w) * (r as u64 + 1);
            Ok(((w, r), d))
        };
        let trivial = ((crate::rep::WeightVector::trivial(n), 0u32), 1u64);
        let parts: [(&str, &str, &LinearSubspace, Vec<((crate::rep::WeightVector, u32), u64)>); 3] = [
            ("casimir.a_plus", "A⁺ ⊗ C ≅ λ^2_0σ^2", &split.a_plus, vec![key(2, 0, 2)?]),
            ("casimir.a_minus", "A⁻ ⊗ C ≅ λ^2_1σ^2 ⊕ λ^2_0", &split.a_minus, vec![key(2, 1, 2)?, key(2, 0, 0)?]),
            ("casimir.r_phi", "CΦ ≅ σ^0", &split.r_phi, vec![trivial]),
        ];
        for (id, claim, sub, expected) in parts {
            let d = o4.decompose(Some(sub))?;
            out.push(g(isotypic_compare(id, claim, &expected.into_iter().collect(), &d), 3));
        }
    }
    Ok(out)
}

fn hodge(m: &Model) -> Result<Vec<Gated>> {
    let n = m.n;
    if n < 2 {
        return Ok(Vec::new());
    }
    let gs = m.gs();
    let split = m.split()?;
    let mut out = vec![
        g(
            CheckReport::compare(
                "hodge.split_dims",
                "dim A⁺ + dim RΦ + dim A⁻ = dim E¹",
                gs.ak_rank(1)?,
                split.a_plus.dim() + split.r_phi.dim() + split.a_minus.dim(),
            ),
            2,
        ),
        g(CheckReport::compare("hodge.split_sum", "A⁺ ⊕ RΦ ⊕ A⁻ = E¹", "true", yes(split.sums_to_e1()?)), 2),
        g(CheckReport::compare("hodge.orthogonal", "A⁺, RΦ, A⁻ are pairwise orthogonal", "true", yes(split.pairwise_orthogonal()?)), 2),
    ];
    let phi = &gs.form().pieces()[0];
    let j = j_matrix(phi, n)?;
    out.push(g(CheckReport::compare("hodge.j_self_adjoint", "J is self-adjoint on Λ⁴", "true", yes(j == j.transpose())), 2));
    let preserves = split.e1.basis_vectors().all(|v| j.mul_sparse_vec(v).map(|w| split.e1.contains_vector(&w)).unwrap_or(false));
    out.push(g(CheckReport::compare("hodge.j_preserves_e1", "J maps E¹ to E¹", "true", yes(preserves)), 2));
    for r in verify_j_eigenvalues(gs, split)? {
        let min = if r.id == "hodge.star_phi" || r.id == "hodge.j_scale_derived" { 2 } else { 3 };
        out.push(g(r, min));
    }
    Ok(out)
}

fn invariants(m: &Model) -> Result<Vec<Gated>> {
    let n = m.n;
    let alg = m.explicit();
    let inv4 = invariant_subspace(alg, 4)?;
    let phi = build_phi(n)?;
    let phi_in = inv4.contains_vector(&phi.sparse_coordinates(&FormBasis::new(4 * n, 4)));
    let mut out = vec![
        g(CheckReport::compare("invariants.dim_lambda4", "(Λ⁴)^{sp(n)⊕sp(1)} is one-dimensional", 1, inv4.dim()), 2),
        g(CheckReport::compare("invariants.contains_phi", "Φ is an invariant 4-form", "true", yes(phi_in)), 1),
        g(CheckReport::compare("invariants.dim_lambda1", "no invariant 1-forms", 0, invariant_subspace(alg, 1)?.dim()), 1),
        g(CheckReport::observed("invariants.dim_lambda2", "invariant 2-forms", invariant_subspace(alg, 2)?.dim()), 1),
        g(CheckReport::compare("invariants.so_lambda4", "so(4n) has no invariant 4-form", 0, invariant_subspace(&so_algebra(4 * n), 4)?.dim()), 2),
    ];
    for k in [3, 4] {
        out.push(g(trivial_summand_crosscheck(n, k)?, 3));
    }
    Ok(out)
}

/// Runs the configured suites. Verdicts below the `n` a claim is made for,
/// and every verdict in observe mode, become OBSERVED.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let model = Model::new(config.n);
    let mut checks = Vec::new();
    let mut tables_out = Vec::new();
    for suite in &config.suites {
        // Instant is unavailable on wasm32, so only touch the clock on request
        let start = config.timings.then(Instant::now);
        let gated = match suite {
            Suite::Isotropy => isotropy(&model)?,
            Suite::Dims => dims(&model)?,
            Suite::Symbols => symbols(&model, config.seed)?,
            Suite::Weyl => weyl(&model)?,
            Suite::Tables => {
                let (c, t) = tables(&model)?;
                tables_out.extend(t);
                c
            }
            Suite::Casimir => casimir(&model)?,
            Suite::Hodge => hodge(&model)?,
            Suite::Invariants => invariants(&model)?,
            Suite::Bochner => audit_bochner().into_iter().map(|r| g(r, 1)).collect(),
        };
        let elapsed = start.map(|t| t.elapsed().as_millis() as u64);
        for Gated(mut r, min_n) in gated {
            if config.mode == Mode::Observe || config.n < min_n {
                r = r.into_observed();
            }
            r.elapsed_ms = elapsed;
            checks.push(r);
        }
    }
    Ok(Report::new(checks, tables_out))
}
