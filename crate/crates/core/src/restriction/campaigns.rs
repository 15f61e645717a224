use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use super::outcome::Recorder;
use super::{MultiplicityReport, RestrictionContext, VerificationOutcome, VerifyOptions};
use crate::characters::{
    degree, ecycle_products_value, is_odd_degree, mn_value, nu_p_degree, odd_degree_count_formula,
    AlgebraicValue, SignChoice,
};
use crate::error::{Error, Result};
use crate::lr::{
    lr_by_characters, lr_coefficient, restriction_pairs, verify_two_hook_configurations,
};
use crate::partitions::{two_hook_grid, two_hook_shape, Partition};
use crate::sylow::{
    construct_g_lambda, find_odd_normalizer, gamma, in_sylow, omega2, omega_padic, wreath_value,
    Ambient, EnumeratedGroup, LinearCharLabel, SylowLayout,
};

/// The irreducible characters of `A_n`: one `φ^λ` per conjugate pair
/// `{λ, λ'}` (taking the larger of the two), and `φ^λ_±` for `λ = λ'`.
pub fn an_irreducibles(n: usize) -> Vec<(Partition, Option<SignChoice>)> {
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        let conj = lambda.conjugate();
        if lambda == conj && n >= 2 {
            out.push((lambda.clone(), Some(SignChoice::Plus)));
            out.push((lambda, Some(SignChoice::Minus)));
        } else if lambda >= conj {
            out.push((lambda, None));
        }
    }
    out
}

fn an_degree(lambda: &Partition, sign: Option<SignChoice>) -> BigUint {
    let d = degree(lambda);
    if sign.is_some() {
        d / 2u32
    } else {
        d
    }
}

/// The restriction of each hook character of `S_{2^k}` to `P_{2^k}`.
#[derive(Clone, Debug)]
pub struct HookBijection {
    pub k: u32,
    pub reports: Vec<MultiplicityReport>,
    pub labels: Vec<LinearCharLabel>,
}

impl HookBijection {
    /// The linear constituent of the `i`-th hook, if it is unique.
    pub fn image(&self, i: usize) -> Option<&LinearCharLabel> {
        let mut it = self.reports[i].constituents();
        match (it.next(), it.next()) {
            (Some(m), None) => Some(&m.label),
            _ => None,
        }
    }

    /// `(hook, f(hook))` for every hook with a unique linear constituent.
    pub fn map(&self) -> Vec<(&Partition, &LinearCharLabel)> {
        (0..self.reports.len())
            .filter_map(|i| Some((&self.reports[i].lambda, self.image(i)?)))
            .collect()
    }

    pub fn is_bijection(&self) -> bool {
        let images: BTreeSet<String> = self.map().iter().map(|(_, l)| l.to_string()).collect();
        self.map().len() == self.reports.len()
            && images.len() == self.labels.len()
            && self.reports.len() == self.labels.len()
    }
}

/// Restricts every hook character of `S_{2^k}` to `P_{2^k}`.
pub fn f_bijection(k: u32, options: &VerifyOptions) -> Result<HookBijection> {
    let n = 1usize << k;
    let ctx = RestrictionContext::new(n, 2, Ambient::P, options.budget)?;
    let hooks: Vec<Partition> = Partition::all(n)
        .into_iter()
        .filter(Partition::is_hook_partition)
        .collect();
    let reports = options.map(&hooks, |h| ctx.restrict(h, None))?;
    Ok(HookBijection {
        k,
        reports,
        labels: ctx.characters.labels().to_vec(),
    })
}

/// One Frobenius cross-check between `P_{2^k}` and `P_{2^{k-1}} × P_{2^{k-1}}`.
#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusCase {
    pub lambda: Partition,
    pub label: LinearCharLabel,
    /// `m(θ_0) + m(θ_1)` for the two extensions of `φ × φ` to `P_{2^k}`.
    pub direct: u64,
    /// `Σ C^λ_{μν} m(φ, χ^μ) m(φ, χ^ν)`.
    pub via_pairs: u64,
}

/// Compares the multiplicity of `φ × φ` in `χ^λ` restricted to the base
/// group of `P_{2^k}`, computed once from `P_{2^k}` and once through
/// Littlewood–Richardson pairs and restrictions to `P_{2^{k-1}}`.
pub fn frobenius_check(k: u32, options: &VerifyOptions) -> Result<Vec<FrobeniusCase>> {
    if k < 2 {
        return Err(Error::OutOfRange(format!(
            "the base-group comparison needs k ≥ 2, got {k}"
        )));
    }
    let (n, q) = (1usize << k, 1usize << (k - 1));
    let big = RestrictionContext::new(n, 2, Ambient::P, options.budget)?;
    let small = RestrictionContext::new(q, 2, Ambient::P, options.budget)?;
    let small_reports: BTreeMap<Partition, MultiplicityReport> = Partition::all(q)
        .into_iter()
        .map(|mu| Ok((mu.clone(), small.restrict(&mu, None)?)))
        .collect::<Result<_>>()?;
    let lambdas = Partition::all(n);
    let per_lambda = options.map(&lambdas, |lambda| {
        let report = big.restrict(lambda, None)?;
        let pairs = restriction_pairs(lambda, q)?;
        let mut cases = Vec::new();
        for (j, label) in small.characters.labels().iter().enumerate() {
            let LinearCharLabel::Wreath(blocks) = label else {
                unreachable!("wreath labels on P")
            };
            let extension = |t: u32| {
                let mut c = blocks[0].clone();
                c.push(t);
                LinearCharLabel::Wreath(vec![c])
            };
            let direct = report.multiplicity_of(&extension(0)).unwrap_or(0)
                + report.multiplicity_of(&extension(1)).unwrap_or(0);
            let via_pairs = pairs
                .iter()
                .map(|((mu, nu), c)| {
                    c * small_reports[mu].multiplicities[j].multiplicity
                        * small_reports[nu].multiplicities[j].multiplicity
                })
                .sum();
            cases.push(FrobeniusCase {
                lambda: lambda.clone(),
                label: label.clone(),
                direct,
                via_pairs,
            });
        }
        Ok(cases)
    })?;
    Ok(per_lambda.into_iter().flatten().collect())
}

/// Parameters of one campaign. Empty lists mean the statement does not use them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CampaignParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub n: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub k: Vec<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub e: Vec<usize>,
}

impl CampaignParams {
    fn pn(p: usize, n: impl IntoIterator<Item = usize>) -> Self {
        CampaignParams {
            p: Some(p),
            n: n.into_iter().collect(),
            ..Default::default()
        }
    }

    fn n(n: impl IntoIterator<Item = usize>) -> Self {
        CampaignParams {
            n: n.into_iter().collect(),
            ..Default::default()
        }
    }

    fn k(k: impl IntoIterator<Item = u32>) -> Self {
        CampaignParams {
            k: k.into_iter().collect(),
            ..Default::default()
        }
    }
}

/// A checkable statement, identified on the command line by [`Statement::id`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    /// Every irreducible of `A_n` of degree divisible by `p` has at least `p`
    /// distinct linear constituents on `Q_n`.
    TheoremA,
    /// Each hook of `2^k` has a unique linear constituent on `P_{2^k}`, and
    /// the resulting map is a bijection onto `Lin(P_{2^k})`.
    HookBijection,
    /// For odd `p`: `θ(ω_n)` is a `p`-th root of unity, `|C_P(ω_n)| = |Lin(P_n)|`,
    /// every `φ` of degree divisible by `p` has `p` distinct constituents on
    /// `P_n`, and every `φ` has a linear constituent on `P_n`.
    OddPPipeline,
    /// Linear characters of `P_{2^k}` are `±1` at `γ_k` and `ω_k`, whose
    /// centralizers have order `2^k`.
    GammaOmegaLemma,
    /// `χ^λ(g_λ) = 0` on an even cycle type realized in `Q_n`.
    GLambda,
    /// Linear constituents on `P_n` restrict to constituents of every
    /// `A_n`-constituent on `Q_n`.
    QDescent,
    /// Hook characterizations of `ν_2(χ^λ(1)) ∈ {1, ≥ 2}` for `λ ⊢ 2^k`, the
    /// two-hook shapes, and the two-linears lemma.
    Nu2Structure,
    /// The restriction theorem at `n ∈ {2^k, 2^k + 1}`, tagging each case by `ν_2(χ^λ(1))`.
    TwoKPlusOne,
    /// The hook-removal test for odd degree and the count of odd-degree characters.
    OddDegree,
    /// Littlewood–Richardson coefficients against character inner products,
    /// with the swap and conjugation symmetries.
    LrOracle,
    /// The `e`-quotient formula for `χ^λ` on products of `e`-cycles.
    EcycleLemma,
    /// The explicit Littlewood–Richardson fillings for two-hook shapes.
    TwoHookConfigurations,
    /// An odd permutation normalizing `P_n`, found by search.
    OddNormalizer,
    /// Base-group multiplicities through `P_{2^k}` and through LR pairs.
    Frobenius,
}

impl Statement {
    pub const ALL: [Statement; 14] = [
        Statement::TheoremA,
        Statement::HookBijection,
        Statement::OddPPipeline,
        Statement::GammaOmegaLemma,
        Statement::GLambda,
        Statement::QDescent,
        Statement::Nu2Structure,
        Statement::TwoKPlusOne,
        Statement::OddDegree,
        Statement::LrOracle,
        Statement::EcycleLemma,
        Statement::TwoHookConfigurations,
        Statement::OddNormalizer,
        Statement::Frobenius,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::TheoremA => "theorem-a",
            Statement::HookBijection => "hook-bijection",
            Statement::OddPPipeline => "odd-p-pipeline",
            Statement::GammaOmegaLemma => "gamma-omega-lemma",
            Statement::GLambda => "g-lambda",
            Statement::QDescent => "q-descent",
            Statement::Nu2Structure => "nu2-structure",
            Statement::TwoKPlusOne => "two-k-plus-one",
            Statement::OddDegree => "odd-degree",
            Statement::LrOracle => "lr-oracle",
            Statement::EcycleLemma => "ecycle-lemma",
            Statement::TwoHookConfigurations => "two-hook-configurations",
            Statement::OddNormalizer => "odd-normalizer",
            Statement::Frobenius => "frobenius",
        }
    }

    fn uses_p(self) -> bool {
        matches!(
            self,
            Statement::TheoremA | Statement::OddPPipeline | Statement::OddNormalizer
        )
    }

    fn uses_n(self) -> bool {
        matches!(
            self,
            Statement::TheoremA
                | Statement::OddPPipeline
                | Statement::GLambda
                | Statement::QDescent
                | Statement::OddDegree
                | Statement::LrOracle
                | Statement::EcycleLemma
                | Statement::OddNormalizer
        )
    }

    /// The ranges run by `verify --all`.
    pub fn default_params(self) -> Vec<CampaignParams> {
        match self {
            Statement::TheoremA => vec![
                CampaignParams::pn(2, (1..=13).chain([16])),
                CampaignParams::pn(3, 1..=12),
                CampaignParams::pn(5, 1..=10),
            ],
            Statement::OddPPipeline => {
                vec![CampaignParams::pn(3, 1..=12), CampaignParams::pn(5, 1..=10)]
            }
            Statement::HookBijection
            | Statement::GammaOmegaLemma
            | Statement::Nu2Structure
            | Statement::TwoHookConfigurations => vec![CampaignParams::k(1..=4)],
            Statement::TwoKPlusOne => vec![CampaignParams::k(0..=4)],
            Statement::Frobenius => vec![CampaignParams::k(2..=3)],
            Statement::GLambda => vec![CampaignParams::n([12, 14, 20])],
            Statement::QDescent => vec![CampaignParams::n(1..=10)],
            Statement::OddDegree => vec![CampaignParams::n(0..=25)],
            Statement::LrOracle => vec![CampaignParams::n(0..=8)],
            Statement::EcycleLemma => vec![CampaignParams {
                e: vec![2, 3, 4, 5],
                ..CampaignParams::n(1..=12)
            }],
            Statement::OddNormalizer => {
                vec![CampaignParams::pn(3, [3, 9]), CampaignParams::pn(5, [5])]
            }
        }
    }

    /// Campaign parameters from optional overrides of the defaults.
    pub fn params(
        self,
        p: Option<usize>,
        n: Option<Vec<usize>>,
        k: Option<Vec<u32>>,
    ) -> Result<Vec<CampaignParams>> {
        let id = self.id();
        if p.is_some() && !self.uses_p() {
            return Err(Error::Parse(format!("{id} does not take --p")));
        }
        if n.is_some() && !self.uses_n() {
            return Err(Error::Parse(format!("{id} does not take --n")));
        }
        if k.is_some() && self.uses_n() {
            return Err(Error::Parse(format!("{id} does not take --k")));
        }
        let mut runs = self.default_params();
        if let Some(p) = p {
            runs = match runs.iter().find(|r| r.p == Some(p)) {
                Some(r) => vec![r.clone()],
                None => vec![CampaignParams {
                    p: Some(p),
                    ..runs[0].clone()
                }],
            };
        }
        for run in &mut runs {
            if let Some(n) = &n {
                run.n = n.clone();
            }
            if let Some(k) = &k {
                run.k = k.clone();
            }
        }
        Ok(runs)
    }

    pub fn run(
        self,
        params: &CampaignParams,
        options: &VerifyOptions,
    ) -> Result<VerificationOutcome> {
        let mut rec = Recorder::new(options);
        let p = params.p.unwrap_or(2);
        match self {
            Statement::TheoremA => theorem_a(&mut rec, p, &params.n, false, options)?,
            Statement::HookBijection => hook_bijection(&mut rec, &params.k, options)?,
            Statement::OddPPipeline => odd_p_pipeline(&mut rec, p, &params.n, options)?,
            Statement::GammaOmegaLemma => gamma_omega(&mut rec, &params.k, options)?,
            Statement::GLambda => g_lambda(&mut rec, &params.n)?,
            Statement::QDescent => q_descent(&mut rec, &params.n, options)?,
            Statement::Nu2Structure => nu2_structure(&mut rec, &params.k, options)?,
            Statement::TwoKPlusOne => {
                let ns: Vec<usize> = params
                    .k
                    .iter()
                    .flat_map(|&k| [1usize << k, (1usize << k) + 1])
                    .collect();
                let ns: Vec<usize> = ns
                    .into_iter()
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                theorem_a(&mut rec, 2, &ns, true, options)?
            }
            Statement::OddDegree => odd_degree(&mut rec, &params.n),
            Statement::LrOracle => lr_oracle(&mut rec, &params.n, options)?,
            Statement::EcycleLemma => ecycle_lemma(&mut rec, &params.n, &params.e, options)?,
            Statement::TwoHookConfigurations => two_hook_configurations(&mut rec, &params.k)?,
            Statement::OddNormalizer => odd_normalizer(&mut rec, p, &params.n)?,
            Statement::Frobenius => frobenius(&mut rec, &params.k, options)?,
        }
        let params = serde_json::to_value(params).expect("parameters serialize");
        Ok(rec.finish(self.id(), params, options))
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "jlms-bijection" {
            return Ok(Statement::HookBijection);
        }
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = Statement::ALL.iter().map(|st| st.id()).collect();
                Error::Parse(format!(
                    "unknown statement {s:?}; expected one of {}",
                    ids.join(", ")
                ))
            })
    }
}

/// Every statement with its default ranges.
pub fn default_suite() -> Vec<(Statement, CampaignParams)> {
    Statement::ALL
        .into_iter()
        .flat_map(|s| s.default_params().into_iter().map(move |p| (s, p)))
        .collect()
}

fn theorem_a(
    rec: &mut Recorder,
    p: usize,
    ns: &[usize],
    tagged: bool,
    o: &VerifyOptions,
) -> Result<()> {
    for &n in ns {
        let ctx = RestrictionContext::new(n, p, Ambient::Q, o.budget)?;
        let chars: Vec<(Partition, Option<SignChoice>)> = an_irreducibles(n)
            .into_iter()
            .filter(|(l, s)| (an_degree(l, *s) % p) == BigUint::ZERO)
            .collect();
        if chars.is_empty() {
            rec.note(format!(
                "n = {n}: no irreducible of A_{n} has degree divisible by {p}"
            ));
            continue;
        }
        let reports = o.map(&chars, |(l, s)| ctx.restrict(l, *s))?;
        let mut tags = [0usize; 2];
        for r in &reports {
            rec.report(r);
            rec.case((r.distinct_count < p).then(|| {
                json!({ "n": n, "character": r.character(), "degree": r.degree, "distinct_count": r.distinct_count, "required": p })
            }));
            tags[usize::from(nu_p_degree(&r.lambda, 2) >= 2)] += 1;
        }
        if p == 2 {
            for pair in reports.windows(2) {
                let [a, b] = pair else { continue };
                if a.sign == Some(SignChoice::Plus)
                    && b.sign == Some(SignChoice::Minus)
                    && a.distinct_count != b.distinct_count
                {
                    rec.fail(json!({
                        "n": n, "lambda": a.lambda, "conjugation_symmetry": [a.distinct_count, b.distinct_count]
                    }));
                }
            }
        }
        if tagged {
            rec.note(format!(
                "n = {n}: {} cases with 4 | χ^λ(1), {} cases with ν₂(χ^λ(1)) = 1",
                tags[1], tags[0]
            ));
        }
    }
    Ok(())
}

fn hook_bijection(rec: &mut Recorder, ks: &[u32], o: &VerifyOptions) -> Result<()> {
    for &k in ks {
        let f = f_bijection(k, o)?;
        for (i, r) in f.reports.iter().enumerate() {
            rec.report(r);
            rec.case(f.image(i).is_none().then(|| {
                let found: Vec<String> = r.constituents().map(|m| m.label.to_string()).collect();
                json!({ "k": k, "hook": r.lambda, "constituents": found })
            }));
        }
        if !f.is_bijection() {
            let images: Vec<String> = f.map().iter().map(|(h, l)| format!("{h} ↦ {l}")).collect();
            rec.fail(
                json!({ "k": k, "not_bijective": images, "linear_characters": f.labels.len() }),
            );
        }
        let rendered: Vec<String> = f.map().iter().map(|(h, l)| format!("{h} ↦ {l}")).collect();
        rec.note(format!("k = {k}: {}", rendered.join("; ")));
    }
    Ok(())
}

fn odd_p_pipeline(rec: &mut Recorder, p: usize, ns: &[usize], o: &VerifyOptions) -> Result<()> {
    if p == 2 {
        return Err(Error::OutOfRange(
            "odd-p-pipeline needs an odd prime".into(),
        ));
    }
    for &n in ns {
        let ctx = RestrictionContext::new(n, p, Ambient::P, o.budget)?;
        let omega = omega_padic(n, p)?;
        let at = ctx
            .group
            .index_of(&omega)
            .ok_or_else(|| Error::NotInGroup(format!("ω_{n} = {omega}")))?;
        let one = AlgebraicValue::integer(1);
        for (c, label) in ctx.characters.labels().iter().enumerate() {
            let v = ctx.characters.value(c, at);
            let power = (1..p).fold(v.clone(), |acc, _| &acc * &v);
            rec.case(
                (power != one).then(|| json!({ "n": n, "theta": label, "value_at_omega": v })),
            );
        }
        let centralizer = ctx.group.centralizer_order(&omega)?;
        rec.case((centralizer != ctx.characters.len()).then(|| {
            json!({ "n": n, "centralizer_of_omega": centralizer, "linear_characters": ctx.characters.len() })
        }));
        let chars = an_irreducibles(n);
        let reports = o.map(&chars, |(l, s)| ctx.restrict(l, *s))?;
        for r in &reports {
            rec.report(r);
            if r.distinct_count == 0 {
                rec.fail(
                    json!({ "n": n, "character": r.character(), "no_linear_constituent_on": "P" }),
                );
            }
            if BigUint::from(r.degree) % p == BigUint::ZERO {
                rec.case((r.distinct_count < p).then(|| {
                    json!({ "n": n, "character": r.character(), "distinct_count": r.distinct_count, "required": p })
                }));
            }
        }
    }
    rec.note("the unique-linear check restricts each irreducible of A_n to P_n");
    Ok(())
}

fn gamma_omega(rec: &mut Recorder, ks: &[u32], o: &VerifyOptions) -> Result<()> {
    for &k in ks {
        let n = 1usize << k;
        let group = EnumeratedGroup::sylow(n, 2, o.budget)?;
        let layout = SylowLayout::new(n, 2)?;
        let mut elements = vec![("omega", omega2(n)?)];
        if k >= 2 {
            elements.push(("gamma", gamma(n)?));
        }
        let labels = crate::sylow::wreath_labels(&layout);
        let (one, minus) = (AlgebraicValue::integer(1), AlgebraicValue::integer(-1));
        for (name, g) in &elements {
            for label in &labels {
                let v = wreath_value(label, g, &layout)?;
                rec.case(
                    (v != one && v != minus)
                        .then(|| json!({ "k": k, "element": name, "theta": label, "value": v })),
                );
            }
            let centralizer = group.centralizer_order(g)?;
            rec.case((centralizer != n || labels.len() != n).then(|| {
                json!({ "k": k, "element": name, "centralizer": centralizer, "linear_characters": labels.len() })
            }));
        }
    }
    Ok(())
}

fn g_lambda(rec: &mut Recorder, ns: &[usize]) -> Result<()> {
    for &n in ns {
        let layout = SylowLayout::new(n, 2)?;
        let labels = crate::sylow::wreath_labels(&layout);
        let (one, minus) = (AlgebraicValue::integer(1), AlgebraicValue::integer(-1));
        let mut count = 0;
        for lambda in Partition::all(n).into_iter().filter(|l| !is_odd_degree(l)) {
            let g = match construct_g_lambda(&lambda) {
                Ok(g) => g,
                Err(Error::HypothesisViolated(why)) => {
                    rec.note(format!("n = {n}: {why}"));
                    break;
                }
                Err(e) => return Err(e),
            };
            count += 1;
            let value = mn_value(&lambda, &g.cycle_type)?;
            let mut problems = Vec::new();
            if value != 0 {
                problems.push(format!("χ^λ(g_λ) = {value}"));
            }
            if !g.cycle_type.is_even_cycle_type() || !g.element.is_even() {
                problems.push("g_λ is odd".to_string());
            }
            if !in_sylow(&g.element, &layout) {
                problems.push("g_λ is not in P_n".to_string());
            }
            for label in &labels {
                let v = wreath_value(label, &g.element, &layout)?;
                if v != one && v != minus {
                    problems.push(format!("{label}(g_λ) = {v}"));
                }
            }
            rec.case((!problems.is_empty()).then(|| {
                json!({ "n": n, "lambda": lambda, "cycle_type": g.cycle_type, "problems": problems })
            }));
        }
        rec.note(format!("n = {n}: {count} even-degree characters"));
    }
    Ok(())
}

fn q_descent(rec: &mut Recorder, ns: &[usize], o: &VerifyOptions) -> Result<()> {
    for &n in ns {
        let p_ctx = RestrictionContext::new(n, 2, Ambient::P, o.budget)?;
        let q_ctx = RestrictionContext::new(n, 2, Ambient::Q, o.budget)?;
        let map =
            p_ctx
                .characters
                .restriction_map(&p_ctx.group, &q_ctx.characters, &q_ctx.group)?;
        let lambdas = Partition::all(n);
        let results = o.map(&lambdas, |lambda| {
            let top = p_ctx.restrict(lambda, None)?;
            let signs = if lambda.is_self_conjugate() && n >= 2 {
                vec![Some(SignChoice::Plus), Some(SignChoice::Minus)]
            } else {
                vec![None]
            };
            let below = signs
                .into_iter()
                .map(|s| q_ctx.restrict(lambda, s))
                .collect::<Result<Vec<_>>>()?;
            Ok((top, below))
        })?;
        for (top, below) in &results {
            rec.report(top);
            for phi in below {
                rec.report(phi);
                for (c, m) in top.multiplicities.iter().enumerate() {
                    if m.multiplicity == 0 {
                        continue;
                    }
                    let image = &phi.multiplicities[map[c]];
                    rec.case((image.multiplicity == 0).then(|| {
                        json!({ "n": n, "theta": m.label, "restricted": image.label, "phi": phi.character() })
                    }));
                }
            }
        }
    }
    Ok(())
}

fn nu2_structure(rec: &mut Recorder, ks: &[u32], o: &VerifyOptions) -> Result<()> {
    for &k in ks.iter().filter(|&&k| k >= 1) {
        let (n, q) = (1usize << k, 1usize << (k - 1));
        let lambdas = Partition::all(n);
        // (a) hook characterizations of ν₂ = 1 and ν₂ ≥ 2
        for lambda in &lambdas {
            let v = nu_p_degree(lambda, 2);
            let top = lambda.hooks_divisible(n).len();
            let half = lambda.hooks_divisible(q).len();
            let ok = (v == 1) == (top == 0 && half == 2) && (v >= 2) == (half <= 1);
            rec.case((!ok).then(
                || json!({ "k": k, "lambda": lambda, "nu2": v, "hooks_n": top, "hooks_q": half }),
            ));
        }
        // (b) ν₂ = 1 shapes are exactly the two-hook shapes
        let nu2_one: BTreeSet<Partition> = lambdas
            .iter()
            .filter(|l| nu_p_degree(l, 2) == 1)
            .cloned()
            .collect();
        let mut shapes: BTreeMap<Partition, Vec<(usize, usize)>> = BTreeMap::new();
        if q >= 2 {
            for (x, y) in two_hook_grid(q) {
                shapes
                    .entry(two_hook_shape(q, x, y)?)
                    .or_default()
                    .push((x, y));
            }
        }
        for lambda in nu2_one.iter().chain(shapes.keys()).collect::<BTreeSet<_>>() {
            let coords = shapes.get(lambda).map(Vec::as_slice).unwrap_or(&[]);
            let ok = nu2_one.contains(lambda) && coords.len() == 1;
            rec.case((!ok).then(|| json!({ "k": k, "lambda": lambda, "nu2_one": nu2_one.contains(lambda), "shapes": coords })));
        }
        // (c) two-linears lemma and (d) two constituents off the diagonal
        let p_ctx = RestrictionContext::new(n, 2, Ambient::P, o.budget)?;
        let q_ctx = RestrictionContext::new(n, 2, Ambient::Q, o.budget)?;
        let targets: Vec<Partition> = nu2_one.into_iter().collect();
        let reports = o.map(&targets, |l| {
            Ok((q_ctx.restrict(l, None)?, p_ctx.restrict(l, None)?))
        })?;
        let mut hypothesis = 0;
        for (on_q, on_p) in &reports {
            rec.report(on_q);
            rec.report(on_p);
            if on_q.distinct_count == 1 {
                hypothesis += 1;
                let ok =
                    on_p.distinct_count == 2 && on_p.constituents().all(|m| m.multiplicity == 1);
                rec.case((!ok).then(|| {
                    let found: Vec<(String, u64)> = on_p
                        .constituents()
                        .map(|m| (m.label.to_string(), m.multiplicity))
                        .collect();
                    json!({ "k": k, "lambda": on_q.lambda, "two_linears_on_p": found })
                }));
            }
            if !on_q.lambda.is_self_conjugate() {
                rec.case((on_q.distinct_count < 2).then(|| {
                    json!({ "k": k, "lambda": on_q.lambda, "distinct_count_on_q": on_q.distinct_count })
                }));
            }
        }
        rec.note(format!(
            "k = {k}: {} shapes with ν₂ = 1, {hypothesis} with a unique linear constituent on Q",
            targets.len()
        ));
    }
    Ok(())
}

fn odd_degree(rec: &mut Recorder, ns: &[usize]) {
    for &n in ns {
        let mut count = 0u64;
        for lambda in Partition::all(n) {
            let fast = is_odd_degree(&lambda);
            let slow = nu_p_degree(&lambda, 2) == 0;
            count += u64::from(slow);
            rec.case((fast != slow).then(
                || json!({ "n": n, "lambda": lambda, "hook_removal": fast, "valuation": slow }),
            ));
        }
        let formula = odd_degree_count_formula(n);
        rec.case(
            (count != formula)
                .then(|| json!({ "n": n, "odd_degree_count": count, "formula": formula })),
        );
        rec.note(format!("n = {n}: {count} odd-degree characters"));
    }
}

fn lr_oracle(rec: &mut Recorder, sizes: &[usize], o: &VerifyOptions) -> Result<()> {
    for &s in sizes {
        let lambdas = Partition::all(s);
        let results = o.map(&lambdas, |lambda| {
            let mut cases = 0usize;
            let mut failures = Vec::new();
            for a in 0..=s {
                for mu in Partition::all(a) {
                    for nu in Partition::all(s - a) {
                        cases += 1;
                        let c = lr_coefficient(lambda, &mu, &nu)?.coefficient;
                        let oracle = lr_by_characters(lambda, &mu, &nu)?;
                        let swapped = lr_coefficient(lambda, &nu, &mu)?.coefficient;
                        let conj =
                            lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate())?
                                .coefficient;
                        if c != oracle || c != swapped || c != conj {
                            failures.push(json!({
                                "lambda": lambda, "mu": mu, "nu": nu,
                                "lr": c, "oracle": oracle, "swapped": swapped, "conjugated": conj
                            }));
                        }
                    }
                }
            }
            Ok((cases, failures))
        })?;
        for (cases, failures) in results {
            rec.cases += cases;
            rec.counterexamples.extend(failures);
        }
    }
    Ok(())
}

fn ecycle_lemma(rec: &mut Recorder, ns: &[usize], es: &[usize], o: &VerifyOptions) -> Result<()> {
    let es = if es.is_empty() { &[2, 3, 4, 5][..] } else { es };
    for &n in ns {
        let lambdas = Partition::all(n);
        let results = o.map(&lambdas, |lambda| {
            let mut cases = 0usize;
            let mut failures = Vec::new();
            for &e in es {
                let weight = lambda.weight(e);
                for w in 0..=n / e {
                    for gamma in Partition::all(n - w * e) {
                        let got = ecycle_products_value(lambda, e, w, &gamma);
                        if w < weight {
                            if !matches!(got, Err(Error::HypothesisViolated(_))) {
                                failures.push(json!({ "lambda": lambda, "e": e, "w": w, "gamma": gamma, "below_weight": format!("{got:?}") }));
                            }
                            continue;
                        }
                        cases += 1;
                        let class = gamma.union(&Partition::new(vec![e; w])?);
                        let expected = mn_value(lambda, &class)?;
                        match got {
                            Ok(v) if v == expected => {}
                            other => failures.push(json!({
                                "lambda": lambda, "e": e, "w": w, "gamma": gamma,
                                "lemma": format!("{other:?}"), "murnaghan_nakayama": expected
                            })),
                        }
                    }
                }
            }
            Ok((cases, failures))
        })?;
        for (cases, failures) in results {
            rec.cases += cases;
            rec.counterexamples.extend(failures);
        }
    }
    Ok(())
}

fn two_hook_configurations(rec: &mut Recorder, ks: &[u32]) -> Result<()> {
    for &k in ks.iter().filter(|&&k| k >= 1) {
        let q = 1usize << (k - 1);
        if q < 2 {
            continue;
        }
        for (x, y) in two_hook_grid(q) {
            let report = verify_two_hook_configurations(q, x, y)?;
            let mut problems = report.problems.clone();
            if nu_p_degree(&report.lambda, 2) != 1 {
                problems.push(format!("ν₂(χ^{}(1)) ≠ 1", report.lambda));
            }
            rec.case((!report.pass || !problems.is_empty()).then(
                || json!({ "q": q, "x": x, "y": y, "lambda": report.lambda, "problems": problems }),
            ));
        }
    }
    Ok(())
}

fn odd_normalizer(rec: &mut Recorder, p: usize, ns: &[usize]) -> Result<()> {
    for &n in ns {
        let search = find_odd_normalizer(n, p)?;
        match &search.found {
            Some(s) => rec.note(format!(
                "n = {n}, p = {p}: {s} after {} candidates",
                search.candidates
            )),
            None => rec.note(format!(
                "n = {n}, p = {p}: none among {} candidates",
                search.candidates
            )),
        }
        rec.case(
            search
                .found
                .is_none()
                .then(|| json!({ "n": n, "p": p, "candidates": search.candidates })),
        );
    }
    Ok(())
}

fn frobenius(rec: &mut Recorder, ks: &[u32], o: &VerifyOptions) -> Result<()> {
    for &k in ks {
        if k < 2 {
            rec.note(format!("k = {k}: no base group to compare against"));
            continue;
        }
        for case in frobenius_check(k, o)? {
            rec.case((case.direct != case.via_pairs).then(|| json!({ "k": k, "case": case })));
        }
    }
    Ok(())
}
