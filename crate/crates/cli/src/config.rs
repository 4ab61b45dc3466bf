use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    #[default]
    Text,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Config {
    pub max_n: usize,
    pub sbd_state_bound: usize,
    pub weyl_size_bound: usize,
    pub cache_dir: Option<PathBuf>,
    pub output_format: OutputFormat,
    /// 0 lets rayon pick.
    pub thread_count: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: 7,
            sbd_state_bound: schubkit::bubbling::DEFAULT_CLOSURE_BOUND,
            weyl_size_bound: schubkit::weyl::DEFAULT_DOMINATED_BOUND,
            cache_dir: None,
            output_format: OutputFormat::Text,
            thread_count: 0,
            seed: 0,
        }
    }
}

impl Config {
    pub fn validate(&self) -> CliResult<()> {
        for (name, v) in [
            ("max_n", self.max_n),
            ("sbd_state_bound", self.sbd_state_bound),
            ("weyl_size_bound", self.weyl_size_bound),
        ] {
            if v == 0 {
                return Err(CliError::Usage(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    pub fn check_n(&self, n: usize) -> CliResult<()> {
        if n > self.max_n {
            return Err(CliError::Usage(format!("n = {n} exceeds max_n = {}", self.max_n)));
        }
        Ok(())
    }

    pub fn thread_pool(&self) -> CliResult<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(self.thread_count).build()?)
    }
}
