//! Verification sweeps. Each suite checks one family of claims over every
//! case of a given size and returns a deterministic report.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use schubkit::bpd::{self, grothendieck_via_bpd};
use schubkit::bubbling::{build_a, build_a_chain, enumerate_sbd_bounded, weights_with_excess, AVariant};
use schubkit::convexity::{hull_lattice_points, is_m_convex, m_convexity, support_points, PointSet};
use schubkit::diagram::{rothe, skyline};
use schubkit::orthodontia::{eval_orthodontia, eval_orthodontia_flat};
use schubkit::polynomial::{castelnuovo_mumford, grothendieck, homogenized_grothendieck, lascoux};
use schubkit::weyl::{chi_support, dual_character_bounded, find_snowy_equivalent, scalar_multiple, schubitope_lattice_points};
use schubkit::{Cell, Diagram, MultiPolynomial, Permutation, WeakComposition};
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{CliError, CliResult};
use crate::oracles;
use crate::report::{run_cases, CaseOutcome, VerificationReport};
use crate::search::search_a;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
pub enum Suite {
    /// Recursion, orthodontia and bumpless pipe dreams give the same Grothendieck polynomial.
    Engines,
    /// Orthodontia of skylines and their column shuffles gives Lascoux polynomials.
    Lascoux,
    /// Bubbling with the left, right and new distinguished sets gives the support.
    VexillarySupports,
    /// Top components of vexillary Grothendieck polynomials are multiples of dual characters.
    #[value(name = "vexillary-top", alias = "thm-1.1")]
    VexillaryTop,
    /// Support-level version of `vexillary-top`.
    #[value(name = "vexillary-top-support", alias = "thm-1.1-support")]
    VexillaryTopSupport,
    /// Snow diagrams and top Lascoux polynomials.
    Snow,
    /// Top support of fireworks permutations is one point, the upward closure weight.
    FireworksTop,
    /// Southmost bubbling for fireworks permutations; M-convex homogenized support.
    FireworksSbd,
    /// Grothendieck polynomials multiply across sampled layered pairs.
    Layering,
    /// The fixed block-shift instance plus sampled block shifts.
    BlockShift,
    /// Fixed initial segments give symmetry in the leading variables.
    Symmetry,
    /// Pattern and diagram characterizations of almost vexillary agree.
    AlmostVexillary,
    /// Top components of almost vexillary permutations versus the snow witness.
    AlmostVexillaryTop,
    /// Chain decompositions: bubbling support, M-convexity, schubitope top support.
    Chains,
    /// Excess-lifted bubbling weights of vexillary permutations are M-convex.
    LiftedMConvexity,
    /// The M-convexity test against a submodular base-polytope oracle.
    MConvexOracle,
    /// Hull lattice points against exhaustive convex-combination search.
    HullOracle,
    /// Report only: M-convexity of homogenized supports for all permutations.
    ExploreMConvexity,
    /// Report only: searches for bubbling witnesses of almost vexillary permutations.
    ExploreSearchA,
}

impl Suite {
    pub fn id(self) -> String {
        clap::ValueEnum::to_possible_value(&self).expect("no skipped variants").get_name().to_string()
    }

    pub fn default_n(self) -> usize {
        match self {
            Suite::Engines | Suite::FireworksTop | Suite::VexillarySupports | Suite::VexillaryTopSupport | Suite::Chains => 6,
            Suite::Symmetry => 6,
            Suite::Layering | Suite::AlmostVexillary | Suite::BlockShift => 7,
            Suite::Lascoux | Suite::Snow => 4,
            Suite::MConvexOracle | Suite::HullOracle => 3,
            _ => 5,
        }
    }

    pub fn all() -> Vec<Suite> {
        <Suite as clap::ValueEnum>::value_variants().to_vec()
    }
}

/// Knobs shared by the suites; `n` is the permutation size or composition
/// length.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n: usize,
    pub max_total: usize,
    pub samples: usize,
}

impl SuiteParams {
    pub fn defaults(suite: Suite) -> Self {
        let samples = match suite {
            Suite::Lascoux => 200,
            Suite::MConvexOracle => 500,
            Suite::HullOracle => 200,
            _ => 50,
        };
        SuiteParams { n: suite.default_n(), max_total: 6, samples }
    }
}

pub fn run_suite(cfg: &Config, suite: Suite, p: &SuiteParams) -> CliResult<VerificationReport> {
    cfg.validate()?;
    match suite {
        Suite::MConvexOracle | Suite::HullOracle | Suite::Lascoux | Suite::Snow => {}
        _ => cfg.check_n(p.n)?,
    }
    let report = VerificationReport::new(&suite.id(), p.n);
    cfg.thread_pool()?.install(|| match suite {
        Suite::Engines => engines(cfg, report, p),
        Suite::Lascoux => lascoux_suite(cfg, report, p),
        Suite::VexillarySupports => vexillary_supports(cfg, report, p),
        Suite::VexillaryTop => vexillary_top(cfg, report, p),
        Suite::VexillaryTopSupport => vexillary_top_support(report, p),
        Suite::Snow => snow(cfg, report, p),
        Suite::FireworksTop => fireworks_top(report, p),
        Suite::FireworksSbd => fireworks_sbd(cfg, report, p),
        Suite::Layering => layering(cfg, report, p),
        Suite::BlockShift => block_shift(cfg, report, p),
        Suite::Symmetry => symmetry(report, p),
        Suite::AlmostVexillary => almost_vexillary(report, p),
        Suite::AlmostVexillaryTop => almost_vexillary_top(cfg, report, p),
        Suite::Chains => chains(cfg, report, p),
        Suite::LiftedMConvexity => lifted_m_convexity(cfg, report, p),
        Suite::MConvexOracle => m_convex_oracle(cfg, report, p),
        Suite::HullOracle => hull_oracle(cfg, report, p),
        Suite::ExploreMConvexity => explore_m_convexity(report, p),
        Suite::ExploreSearchA => explore_search_a(cfg, report, p),
    })
}

fn same(a: &MultiPolynomial, b: &MultiPolynomial) -> bool {
    let n = a.num_vars().max(b.num_vars());
    a.with_num_vars(n).ok() == b.with_num_vars(n).ok()
}

fn supp(f: &MultiPolynomial) -> BTreeSet<Vec<usize>> {
    f.support().into_iter().map(|e| e.into_iter().map(|a| a as usize).collect()).collect()
}

fn sbd_support(cfg: &Config, d: &Diagram, a: &BTreeSet<Cell>) -> CliResult<BTreeSet<Vec<usize>>> {
    Ok(enumerate_sbd_bounded(d, a, cfg.sbd_state_bound)?.iter().map(|s| s.weight()).collect())
}

fn fmt_set<T: std::fmt::Debug>(s: &BTreeSet<T>) -> String {
    format!("{} points {:?}", s.len(), s)
}

fn perms_where(n: usize, pred: impl Fn(&Permutation) -> bool) -> Vec<Permutation> {
    Permutation::all(n).into_iter().filter(|w| pred(w)).collect()
}

fn engines(_cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let with_bpd = p.n <= bpd::DEFAULT_MAX_N;
    let report = report.param("bpd", with_bpd);
    run_cases(report, &Permutation::all(p.n), |w| {
        let mut out = CaseOutcome::default();
        let g = grothendieck(w);
        let o = eval_orthodontia(&rothe(w))?;
        out.check(same(&g, &o), w, "orthodontia", &g, &o);
        if with_bpd {
            let b = grothendieck_via_bpd(w)?;
            out.check(same(&g, &b), w, "bpd", &g, &b);
        }
        Ok(out)
    })
}

enum LascouxCase {
    Plain(WeakComposition),
    Shuffled(WeakComposition, Vec<usize>),
}

fn lascoux_suite(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let comps = WeakComposition::all_bounded(p.n, p.max_total);
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut cases: Vec<LascouxCase> = comps.iter().cloned().map(LascouxCase::Plain).collect();
    let nontrivial: Vec<&WeakComposition> = comps.iter().filter(|a| a.total() > 0).collect();
    for _ in 0..p.samples {
        let Some(a) = nontrivial.choose(&mut rng) else { break };
        let mut order: Vec<usize> = (1..=skyline(a).n_cols).collect();
        order.shuffle(&mut rng);
        cases.push(LascouxCase::Shuffled((*a).clone(), order));
    }
    let report = report.param("max_total", p.max_total).param("shuffles", p.samples).param("seed", cfg.seed);
    run_cases(report, &cases, |case| {
        let mut out = CaseOutcome::default();
        match case {
            LascouxCase::Plain(a) => {
                let l = lascoux(a);
                let o = eval_orthodontia(&skyline(a))?;
                out.check(same(&l, &o), a, "orthodontia", &l, &o);
            }
            LascouxCase::Shuffled(a, order) => {
                let l = lascoux(a);
                let d = skyline(a).permute_columns(order)?;
                let name = format!("{a} shuffled {order:?}");
                let o = eval_orthodontia(&d)?;
                out.check(same(&l, &o), &name, "shuffle", &l, &o);
                let f = eval_orthodontia_flat(&d)?;
                out.check(same(&l, &f), &name, "shuffle-flat", &l, &f);
            }
        }
        Ok(out)
    })
}

fn vexillary_supports(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    run_cases(report, &perms_where(p.n, Permutation::is_vexillary), |w| {
        let mut out = CaseOutcome::default();
        let d = rothe(w);
        let target = supp(&grothendieck(w));
        let mut tops = Vec::new();
        for (variant, claim) in [(AVariant::Left, "left"), (AVariant::Right, "right"), (AVariant::New, "new")] {
            let a = build_a(w, variant)?;
            let got = sbd_support(cfg, &d, &a)?;
            out.check(got == target, w, claim, fmt_set(&target), fmt_set(&got));
            tops.push(d.d_top(&a)?);
        }
        let (top_l, top_r, top_new) = (&tops[0], &tops[1], &tops[2]);
        out.check(top_r == top_new, w, "top right = top new", top_r.render(), top_new.render());
        out.check(
            top_l.column_multiset() == top_r.column_multiset(),
            w,
            "top left ~ top right",
            format!("{:?}", top_r.column_multiset()),
            format!("{:?}", top_l.column_multiset()),
        );
        Ok(out)
    })
}

fn vexillary_top(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    run_cases(report, &perms_where(p.n, Permutation::is_vexillary), |w| {
        let mut out = CaseOutcome::default();
        let top = rothe(w).d_top(&build_a(w, AVariant::Left)?)?;
        let g = castelnuovo_mumford(w);
        let chi = dual_character_bounded(&top, cfg.weyl_size_bound)?;
        match scalar_multiple(&g, &chi.with_num_vars(g.num_vars())?) {
            Some(c) => out.note(w, format!("c = {c}")),
            None => out.fail(w, "scalar multiple", format!("c * ({chi})"), &g),
        }
        Ok(out)
    })
}

fn vexillary_top_support(report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    run_cases(report, &perms_where(p.n, Permutation::is_vexillary), |w| {
        let mut out = CaseOutcome::default();
        let top = rothe(w).d_top(&build_a(w, AVariant::Left)?)?;
        let g = support_points(&castelnuovo_mumford(w));
        let chi = chi_support(&top);
        out.check(g == chi, w, "support = dominated weights", fmt_set(&chi), fmt_set(&g));
        let hull = schubitope_lattice_points(&top)?;
        out.check(g == hull, w, "support = schubitope points", fmt_set(&hull), fmt_set(&g));
        Ok(out)
    })
}

fn snow(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let comps = WeakComposition::all_bounded(p.n, p.max_total);
    let report = report.param("max_total", p.max_total);
    run_cases(report, &comps, |a| {
        let mut out = CaseOutcome::default();
        let top = lascoux(a).top_component()?;
        let snow_d = skyline(a).snow();
        let wt: Vec<u32> = snow_d.weight().iter().map(|&k| k as u32).collect();
        let lead = pad(leading_exponent_last_first(&top), wt.len());
        out.check(lead == pad(wt.clone(), lead.len()), a, "leading term", format!("{wt:?}"), format!("{lead:?}"));

        let gamma = find_snowy_equivalent(a)?;
        let gamma_snow = skyline(&gamma).snow();
        out.check(
            gamma_snow.cells() == snow_d.cells(),
            a,
            "snowy equivalent",
            snow_d.render(),
            gamma_snow.render(),
        );
        let top_gamma = lascoux(&gamma).top_component()?;
        let n = top.num_vars().max(top_gamma.num_vars());
        let ratio = scalar_multiple(&top.with_num_vars(n)?, &top_gamma.with_num_vars(n)?);
        match &ratio {
            Some(c) => out.note(a, format!("snowy {gamma}, ratio {c}")),
            None => out.fail(a, "proportional to snowy", format!("multiple of {top_gamma}"), &top),
        }

        let chi = dual_character_bounded(&snow_d, cfg.weyl_size_bound)?;
        let n = top.num_vars().max(chi.num_vars());
        let c = scalar_multiple(&top.with_num_vars(n)?, &chi.with_num_vars(n)?);
        out.check(c.is_some(), a, "multiple of snow character", format!("multiple of {chi}"), &top);
        Ok(out)
    })
}

/// Leading exponent of a homogeneous polynomial in lex order with
/// `x_n > ... > x_1`.
fn leading_exponent_last_first(f: &MultiPolynomial) -> Vec<u32> {
    f.terms()
        .map(|(e, _)| e)
        .max_by(|a, b| a.iter().rev().cmp(b.iter().rev()))
        .cloned()
        .unwrap_or_default()
}

fn pad<T: Clone + Default>(mut v: Vec<T>, n: usize) -> Vec<T> {
    if v.len() < n {
        v.resize(n, T::default());
    }
    v
}

fn fireworks_top(report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    run_cases(report, &perms_where(p.n, Permutation::is_fireworks), |w| {
        let mut out = CaseOutcome::default();
        let got = supp(&castelnuovo_mumford(w));
        let want: BTreeSet<Vec<usize>> = [rothe(w).upward_closure().weight()].into();
        out.check(got == want, w, "top support", fmt_set(&want), fmt_set(&got));
        Ok(out)
    })
}

fn fireworks_sbd(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    run_cases(report, &perms_where(p.n, Permutation::is_fireworks), |w| {
        let mut out = CaseOutcome::default();
        let target = supp(&grothendieck(w));
        let a = build_a(w, AVariant::Southmost)?;
        let got = sbd_support(cfg, &rothe(w), &a)?;
        out.check(got == target, w, "southmost bubbling", fmt_set(&target), fmt_set(&got));
        check_m_convex(&mut out, w, "homogenized M-convex", &support_points(&homogenized_grothendieck(w)?));
        Ok(out)
    })
}

fn check_m_convex(out: &mut CaseOutcome, case: impl ToString, claim: &str, s: &PointSet) {
    if let Err(witness) = m_convexity(s) {
        out.fail(case, claim, "M-convex", format!("{witness:?}"));
    }
}

fn random_perm(rng: &mut StdRng, values: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    let mut v: Vec<usize> = values.collect();
    v.shuffle(rng);
    v
}

fn layering(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    if p.n < 2 {
        return Err(CliError::Usage("layering needs n >= 2".into()));
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    for _ in 0..p.samples {
        let k = rng.gen_range(1..p.n);
        let w = Permutation::new(random_perm(&mut rng, 1..=k))?;
        let mut w2 = (1..=k).collect::<Vec<_>>();
        w2.extend(random_perm(&mut rng, k + 1..=p.n));
        cases.push((w, Permutation::new(w2)?));
    }
    let report = report.param("samples", p.samples).param("seed", cfg.seed);
    run_cases(report, &cases, |(w, w2)| {
        let mut out = CaseOutcome::default();
        let mut images = w.images().to_vec();
        images.extend_from_slice(&w2.images()[w.size()..]);
        let w3 = Permutation::new(images)?;
        let lhs = grothendieck(&w3);
        let rhs = &grothendieck(w) * &grothendieck(w2);
        out.check(same(&lhs, &rhs), format!("{w3} = {w} . {w2}"), "product", &rhs, &lhs);
        Ok(out)
    })
}

/// `w'(1)+a, ..., w'(b)+a, w(1), ..., w(a)` for `w` in `S_a` and `w'` in `S_b`.
pub fn block_shift_perm(w: &Permutation, w2: &Permutation) -> CliResult<Permutation> {
    let a = w.size();
    let mut images: Vec<usize> = w2.images().iter().map(|&v| v + a).collect();
    images.extend_from_slice(w.images());
    Ok(Permutation::new(images)?)
}

/// `G_w(x_{b+1}, ..., x_{b+a}) G_{w'}(x_1, ..., x_b) (x_1 ... x_b)^a`.
pub fn block_shift_product(w: &Permutation, w2: &Permutation) -> CliResult<MultiPolynomial> {
    let (a, b) = (w.size(), w2.size());
    let total = a + b;
    let shifted = grothendieck(w).shift_vars(b, total)?;
    let low = grothendieck(w2).with_num_vars(total)?;
    let mut exp = vec![0u32; total];
    exp[..b].fill(a as u32);
    Ok((&shifted * &low).mul_monomial(&exp))
}

fn block_shift(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let mut cases = vec![(Permutation::new(vec![1, 3, 2, 4])?, Permutation::new(vec![2, 1, 4, 3])?)];
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for _ in 0..p.samples.min(20) {
        if p.n < 2 {
            break;
        }
        let a = rng.gen_range(1..p.n);
        cases.push((Permutation::new(random_perm(&mut rng, 1..=a))?, Permutation::new(random_perm(&mut rng, 1..=p.n - a))?));
    }
    let report = report.param("seed", cfg.seed);
    run_cases(report, &cases, |(w, w2)| {
        let mut out = CaseOutcome::default();
        let w3 = block_shift_perm(w, w2)?;
        let lhs = grothendieck(&w3);
        let rhs = block_shift_product(w, w2)?;
        out.check(same(&lhs, &rhs), format!("{w3} from {w}, {w2}"), "block shift", &rhs, &lhs);
        Ok(out)
    })
}

fn fixed_prefix(w: &Permutation) -> usize {
    (1..=w.size()).take_while(|&i| w.at(i) == i).count()
}

fn symmetry(report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let cases = perms_where(p.n, |w| fixed_prefix(w) >= 1);
    run_cases(report, &cases, |w| {
        let mut out = CaseOutcome::default();
        let g = grothendieck(w);
        for k in 1..=fixed_prefix(w).min(w.size() - 1) {
            out.check(g.is_symmetric_in(k), w, &format!("symmetric in x{k}, x{}", k + 1), "symmetric", "not symmetric");
        }
        Ok(out)
    })
}

fn almost_vexillary(report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    run_cases(report, &Permutation::all(p.n), |w| {
        let mut out = CaseOutcome::default();
        let (a, b) = (w.is_almost_vexillary_by_patterns(), w.is_almost_vexillary_by_diagram());
        out.check(a == b, w, "pattern = diagram", a, b);
        Ok(out)
    })
}

/// Snow of the skyline underlying the stripped Rothe diagram, with the
/// packed columns appended back.
pub fn almost_vexillary_witness(w: &Permutation) -> CliResult<Diagram> {
    let d = rothe(w);
    let alpha = d
        .strip_packed()
        .column_perm_of_skyline()
        .ok_or_else(|| CliError::Usage(format!("{w} is not almost vexillary")))?;
    let packed: Vec<Vec<usize>> = d.packed_columns().into_iter().map(|j| d.column(j)).collect();
    Ok(skyline(&alpha).snow().resized(d.n_rows, d.n_cols)?.with_appended_columns(&packed)?)
}

fn almost_vexillary_top(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let cases = perms_where(p.n, |w| w.is_almost_vexillary_by_diagram());
    run_cases(report, &cases, |w| {
        let mut out = CaseOutcome::default();
        let d = almost_vexillary_witness(w)?;
        let g = castelnuovo_mumford(w);
        let chi = dual_character_bounded(&d, cfg.weyl_size_bound)?;
        let n = g.num_vars().max(chi.num_vars());
        match scalar_multiple(&g.with_num_vars(n)?, &chi.with_num_vars(n)?) {
            Some(c) => out.note(w, format!("c = {c}")),
            None => out.fail(w, "scalar multiple", format!("c * ({chi})"), &g),
        }
        let hull = pad_points(schubitope_lattice_points(&d)?, n);
        let gs = pad_points(support_points(&g), n);
        out.check(gs == hull, w, "support = schubitope points", fmt_set(&hull), fmt_set(&gs));
        Ok(out)
    })
}

fn pad_points(s: PointSet, n: usize) -> PointSet {
    s.into_iter().map(|v| pad(v, n)).collect()
}

fn chains(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let cases: Vec<_> = Permutation::all(p.n).into_iter().filter_map(|w| w.chain_decomposition().map(|c| (w, c))).collect();
    run_cases(report, &cases, |(w, chain)| {
        let mut out = CaseOutcome::default();
        let d = rothe(w);
        let a = build_a_chain(w, chain)?;
        let target = supp(&grothendieck(w));
        let got = sbd_support(cfg, &d, &a)?;
        out.check(got == target, w, "chain bubbling", fmt_set(&target), fmt_set(&got));
        check_m_convex(&mut out, w, "homogenized M-convex", &support_points(&homogenized_grothendieck(w)?));
        let top = d.d_top(&a)?;
        let hull = schubitope_lattice_points(&top)?;
        let g = support_points(&castelnuovo_mumford(w));
        out.check(g == hull, w, "top support = schubitope points", fmt_set(&hull), fmt_set(&g));
        Ok(out)
    })
}

fn lifted_m_convexity(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    run_cases(report, &perms_where(p.n, Permutation::is_vexillary), |w| {
        let mut out = CaseOutcome::default();
        let a = build_a(w, AVariant::Left)?;
        let sbds = enumerate_sbd_bounded(&rothe(w), &a, cfg.sbd_state_bound)?;
        check_m_convex(&mut out, w, "lifted weights M-convex", &weights_with_excess(&sbds));
        Ok(out)
    })
}

fn m_convex_oracle(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let cases: Vec<PointSet> = (0..p.samples).map(|_| oracles::random_test_set(&mut rng, p.n.max(1))).collect();
    let report = report.param("samples", p.samples).param("seed", cfg.seed);
    let balance = std::sync::atomic::AtomicUsize::new(0);
    let mut report = run_cases(report, &cases, |s| {
        let mut out = CaseOutcome::default();
        let want = oracles::is_m_convex_by_base_polytope(s);
        if want {
            balance.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        let got = is_m_convex(s);
        out.check(got == want, format!("{s:?}"), "agrees with oracle", want, got);
        Ok(out)
    })?;
    let m = balance.into_inner();
    report.notes.push(crate::report::Note { case: "summary".into(), text: format!("{m} of {} sets M-convex", cases.len()) });
    Ok(report)
}

fn hull_oracle(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let cases: Vec<PointSet> = (0..p.samples)
        .map(|k| oracles::random_point_set(&mut rng, 1 + k % p.n.clamp(1, 3)))
        .collect();
    let report = report.param("samples", p.samples).param("seed", cfg.seed);
    run_cases(report, &cases, |s| {
        let mut out = CaseOutcome::default();
        let want = oracles::hull_points_by_caratheodory(s);
        let got = hull_lattice_points(s)?;
        out.check(got == want, format!("{s:?}"), "hull lattice points", fmt_set(&want), fmt_set(&got));
        Ok(out)
    })
}

fn explore_m_convexity(report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let mut report = report;
    report.report_only = true;
    run_cases(report, &Permutation::all(p.n), |w| {
        let mut out = CaseOutcome::default();
        if let Err(witness) = m_convexity(&support_points(&homogenized_grothendieck(w)?)) {
            out.note(w, format!("homogenized support not M-convex: {witness:?}"));
        }
        Ok(out)
    })
    .map(|mut r| {
        let bad = r.notes.len();
        r.notes.push(crate::report::Note {
            case: "summary".into(),
            text: format!("{} of {} homogenized supports M-convex", r.cases_run - bad, r.cases_run),
        });
        r
    })
}

fn explore_search_a(cfg: &Config, report: VerificationReport, p: &SuiteParams) -> CliResult<VerificationReport> {
    let mut report = report;
    report.report_only = true;
    let cases = perms_where(p.n, |w| w.is_almost_vexillary_by_diagram());
    run_cases(report, &cases, |w| {
        let mut out = CaseOutcome::default();
        let found = search_a(w, cfg.sbd_state_bound, crate::search::DEFAULT_SEARCH_BOUND)?;
        let text = match &found.witness {
            Some(a) => format!("witness {a:?} after {} candidates", found.candidates_tried),
            None => format!("no witness among {} candidates", found.candidates_tried),
        };
        out.note(w, text);
        Ok(out)
    })
}
