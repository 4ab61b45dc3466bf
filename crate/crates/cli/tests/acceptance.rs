//! Acceptance criteria at full scale. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::time::{Duration, Instant};

use schubkit::polynomial::grothendieck;
use schubkit::{MultiPolynomial, Permutation};
use schubkit_cli::{run_suite, Config, Suite, SuiteParams, VerificationReport};

struct Criterion {
    id: usize,
    title: &'static str,
    lines: Vec<String>,
    ok: bool,
}

impl Criterion {
    fn new(id: usize, title: &'static str) -> Self {
        Criterion { id, title, lines: Vec::new(), ok: true }
    }

    fn suite(&mut self, suite: Suite, n: usize, limit_secs: u64, tweak: impl FnOnce(&mut SuiteParams)) -> Option<VerificationReport> {
        let mut p = SuiteParams::defaults(suite);
        p.n = n;
        tweak(&mut p);
        let cfg = Config { max_n: 8, ..Config::default() };
        let start = Instant::now();
        let result = run_suite(&cfg, suite, &p);
        let elapsed = start.elapsed();
        match result {
            Ok(r) => {
                let within = elapsed <= Duration::from_secs(limit_secs);
                let good = r.passed() && r.is_consistent() && r.cases_run > 0 && within;
                self.ok &= good;
                self.lines.push(format!(
                    "{} n={}: {}/{} cases, {} failures, {:.1}s (limit {limit_secs}s)",
                    suite.id(),
                    n,
                    r.cases_passed,
                    r.cases_run,
                    r.failures.len(),
                    elapsed.as_secs_f64()
                ));
                for f in r.failures.iter().take(5) {
                    self.lines.push(format!("  {} [{}] expected {} got {}", f.case, f.claim, f.expected, f.actual));
                }
                Some(r)
            }
            Err(e) => {
                self.ok = false;
                self.lines.push(format!("{} n={n}: error {e}", suite.id()));
                None
            }
        }
    }

    fn check(&mut self, ok: bool, what: String) {
        self.ok &= ok;
        self.lines.push(format!("{what}: {}", if ok { "ok" } else { "FAILED" }));
    }

    fn print(&self) {
        println!("criterion {:>2} {}: {}", self.id, if self.ok { "PASS" } else { "FAIL" }, self.title);
        for l in &self.lines {
            println!("    {l}");
        }
    }
}

fn engines() -> Criterion {
    let mut c = Criterion::new(1, "engine triangulation");
    c.suite(Suite::Engines, 5, 300, |_| {});
    c.suite(Suite::Engines, 6, 600, |_| {});
    c
}

fn lascoux() -> Criterion {
    let mut c = Criterion::new(2, "Lascoux agreement and column-shuffle invariance");
    if let Some(r) = c.suite(Suite::Lascoux, 4, 600, |p| {
        p.max_total = 6;
        p.samples = 200;
    }) {
        let shuffled = r.params.iter().any(|(k, v)| k == "shuffles" && v == "200");
        c.check(shuffled, "200 shuffles included".into());
    }
    c
}

fn vexillary_supports() -> Criterion {
    let mut c = Criterion::new(3, "vexillary supports from left, right and new distinguished sets");
    c.suite(Suite::VexillarySupports, 6, 900, |_| {});
    c
}

fn top_vexillary() -> Criterion {
    let mut c = Criterion::new(4, "vexillary top components as multiples of dual characters");
    if let Some(r) = c.suite(Suite::VexillaryTop, 5, 600, |_| {}) {
        let scalars: std::collections::BTreeSet<&str> = r.notes.iter().map(|n| n.text.as_str()).collect();
        c.lines.push(format!("scalars seen: {scalars:?}"));
    }
    c.suite(Suite::VexillaryTopSupport, 6, 600, |_| {});
    c
}

fn snow() -> Criterion {
    let mut c = Criterion::new(5, "snow diagrams and top Lascoux polynomials");
    c.suite(Suite::Snow, 4, 600, |p| p.max_total = 6);
    c
}

fn fireworks() -> Criterion {
    let mut c = Criterion::new(6, "fireworks top support and southmost bubbling");
    c.suite(Suite::FireworksTop, 6, 600, |_| {});
    c.suite(Suite::FireworksSbd, 5, 600, |_| {});
    c
}

/// Built directly from shifted variables rather than through the suite helper.
fn block_shift_instance() -> bool {
    let p = |s: &str| s.parse::<Permutation>().unwrap();
    let high = grothendieck(&p("1324")).shift_vars(4, 8).unwrap();
    let low = grothendieck(&p("2143")).with_num_vars(8).unwrap();
    let monomial = MultiPolynomial::monomial(vec![4, 4, 4, 4, 0, 0, 0, 0], 1.into());
    let rhs = &(&high * &low) * &monomial;
    grothendieck(&p("65871324")) == rhs
}

fn composition() -> Criterion {
    let mut c = Criterion::new(7, "layering, block shift and symmetry");
    c.suite(Suite::Layering, 7, 600, |p| p.samples = 50);
    c.check(block_shift_instance(), "G_65871324 = G_1324(x5..x8) G_2143(x1..x4) (x1x2x3x4)^4".into());
    c.suite(Suite::BlockShift, 7, 600, |_| {});
    c.suite(Suite::Symmetry, 6, 600, |_| {});
    c
}

fn almost_vexillary() -> Criterion {
    let mut c = Criterion::new(8, "almost vexillary characterizations and top components");
    c.suite(Suite::AlmostVexillary, 7, 900, |_| {});
    c.suite(Suite::AlmostVexillaryTop, 5, 900, |_| {});
    c
}

fn chains() -> Criterion {
    let mut c = Criterion::new(9, "dominant fireworks-vexillary chains");
    c.suite(Suite::Chains, 6, 1200, |_| {});
    c
}

fn m_convexity() -> Criterion {
    let mut c = Criterion::new(10, "M-convexity and hull machinery");
    c.suite(Suite::LiftedMConvexity, 5, 600, |_| {});
    c.suite(Suite::MConvexOracle, 3, 600, |p| p.samples = 500);
    c.suite(Suite::HullOracle, 3, 600, |_| {});
    c
}

fn exploration() -> Criterion {
    let mut c = Criterion::new(11, "exploration reports");
    for (suite, n) in [(Suite::ExploreMConvexity, 5), (Suite::ExploreSearchA, 5)] {
        if let Some(r) = c.suite(suite, n, 600, |_| {}) {
            c.check(r.report_only, format!("{} is report-only", suite.id()));
            for note in r.notes.iter().filter(|n| n.case == "summary" || n.case == "31542") {
                c.lines.push(format!("{}: {}", note.case, note.text));
            }
        }
    }
    c
}

fn main() {
    let criteria: Vec<fn() -> Criterion> = vec![
        engines,
        lascoux,
        vexillary_supports,
        top_vexillary,
        snow,
        fireworks,
        composition,
        almost_vexillary,
        chains,
        m_convexity,
        exploration,
    ];
    let mut failed = 0;
    for run in criteria {
        let c = run();
        c.print();
        if !c.ok {
            failed += 1;
        }
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
