use schubkit::polynomial::{castelnuovo_mumford, grothendieck, homogenized_grothendieck, lascoux, schubert};
use schubkit::weyl::dual_character_bounded;
use schubkit::MultiPolynomial;
use serde::{Deserialize, Serialize};

use crate::cache::Cache;
use crate::config::Config;
use crate::error::{CliError, CliResult};
use crate::input;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Grothendieck,
    Schubert,
    Lascoux,
    Top,
    Homogenized,
    Chi,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Grothendieck => "grothendieck",
            Kind::Schubert => "schubert",
            Kind::Lascoux => "lascoux",
            Kind::Top => "top",
            Kind::Homogenized => "homogenized",
            Kind::Chi => "chi",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Computed {
    pub kind: Kind,
    pub input: String,
    pub polynomial: MultiPolynomial,
}

impl Computed {
    /// Homogenized polynomials carry `z` as their last variable.
    pub fn to_text(&self) -> String {
        self.polynomial.to_text(self.kind == Kind::Homogenized)
    }
}

/// Parses `input`, checks size bounds and computes, going through the cache
/// when one is configured. The cache key is the canonical form of the input.
pub fn compute(cfg: &Config, kind: Kind, raw: &str) -> CliResult<Computed> {
    let (key, thunk): (String, Box<dyn FnOnce() -> CliResult<MultiPolynomial>>) = match kind {
        Kind::Lascoux => {
            let a = input::composition(raw)?;
            cfg.check_n(a.len())?;
            (a.to_string(), Box::new(move || Ok(lascoux(&a))))
        }
        Kind::Chi => {
            let d = input::diagram(raw)?;
            let key = format!("{}x{}:{:?}", d.n_rows, d.n_cols, d.cells());
            let bound = cfg.weyl_size_bound;
            (key, Box::new(move || Ok(dual_character_bounded(&d, bound)?)))
        }
        _ => {
            let w = input::permutation(raw)?;
            cfg.check_n(w.size())?;
            let key = w.to_string();
            let f: Box<dyn FnOnce() -> CliResult<MultiPolynomial>> = match kind {
                Kind::Grothendieck => Box::new(move || Ok(grothendieck(&w))),
                Kind::Schubert => Box::new(move || Ok(schubert(&w))),
                Kind::Top => Box::new(move || Ok(castelnuovo_mumford(&w))),
                Kind::Homogenized => Box::new(move || Ok(homogenized_grothendieck(&w)?)),
                Kind::Lascoux | Kind::Chi => unreachable!(),
            };
            (key, f)
        }
    };
    let polynomial = match &cfg.cache_dir {
        Some(dir) => Cache::new(dir).get_or_compute(kind.name(), &key, thunk)?,
        None => thunk()?,
    };
    Ok(Computed { kind, input: key, polynomial })
}

pub fn parse_kind(s: &str) -> CliResult<Kind> {
    <Kind as clap::ValueEnum>::from_str(s, true).map_err(|_| CliError::Usage(format!("unknown kind {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(kind: Kind, input: &str) -> String {
        compute(&Config::default(), kind, input).unwrap().to_text()
    }

    #[test]
    fn examples() {
        assert_eq!(text(Kind::Grothendieck, "132"), "x1 + x2 - x1*x2");
        assert_eq!(text(Kind::Top, "132"), "-x1*x2");
        assert_eq!(text(Kind::Lascoux, "2,1"), "x1^2*x2");
        assert_eq!(text(Kind::Schubert, "132"), "x1 + x2");
        assert_eq!(text(Kind::Chi, "2,1"), "x1 + x2");
    }

    #[test]
    fn bounds_and_parse_errors() {
        let cfg = Config { max_n: 3, ..Config::default() };
        assert!(compute(&cfg, Kind::Grothendieck, "1243").is_err());
        assert!(compute(&cfg, Kind::Grothendieck, "1x3").is_err());
        let cfg = Config { weyl_size_bound: 1, ..Config::default() };
        assert!(compute(&cfg, Kind::Chi, "rothe:1432").is_err());
    }

    #[test]
    fn cache_is_transparent() {
        let dir = tempfile::tempdir().unwrap();
        let cached = Config { cache_dir: Some(dir.path().to_path_buf()), ..Config::default() };
        for (kind, input) in [(Kind::Grothendieck, "1432"), (Kind::Homogenized, "2143"), (Kind::Lascoux, "0,2,1")] {
            let plain = compute(&Config::default(), kind, input).unwrap().polynomial;
            let cold = compute(&cached, kind, input).unwrap().polynomial;
            let warm = compute(&cached, kind, input).unwrap().polynomial;
            assert_eq!(plain, cold);
            assert_eq!(cold, warm);
        }
    }
}
