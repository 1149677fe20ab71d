//! Registry of identity checks and the runner that turns them into a
//! [`VerificationReport`].
//!
//! Identities in a free variable `t` are checked at sample points. With at
//! least `depth + 2` distinct samples this decides polynomial identities of
//! degree `<= depth + 1`; identities with a `1/(1+t)` factor stay pointwise
//! evidence, and `t = -1` is refused for them.

mod registry;
mod report;

use std::thread;

use crate::error::{Error, Result};
use crate::kernel::{int, rat, render};
use crate::Rational;

pub use registry::{corrupted_check, registry, GEN_GRID, REGISTRY_VERSION};
pub use report::{IdSummary, ReportEntry, Status, Summary, VerificationReport, WitnessPair};

/// Parameters shared by every check in a run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub depth: usize,
    pub t_samples: Vec<Rational>,
    pub lambda_samples: Vec<Rational>,
}

impl RunConfig {
    /// Default samples: the first `depth + 2` entries of [`default_t_samples`]
    /// and the four fixed `λ` values.
    pub fn new(depth: usize) -> Self {
        Self {
            depth,
            t_samples: default_t_samples(depth + 2),
            lambda_samples: default_lambda_samples(),
        }
    }

    pub fn with_t_samples(mut self, t: Vec<Rational>) -> Self {
        self.t_samples = t;
        self
    }

    pub fn with_lambda_samples(mut self, l: Vec<Rational>) -> Self {
        self.lambda_samples = l;
        self
    }
}

/// A fixed enumeration of rationals avoiding `-1`.
///
/// Starts `1, 2, -1/2, 3/7, 5, -2/3, 7/11`, then continues through the
/// Calkin–Wilf sequence with alternating signs, skipping repeats and `-1`.
pub fn default_t_samples(count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> =
        vec![int(1), int(2), rat(-1, 2), rat(3, 7), int(5), rat(-2, 3), rat(7, 11)];
    let mut q = int(1);
    let mut index = 0usize;
    while out.len() < count {
        let candidate = if index.is_multiple_of(2) { q.clone() } else { -q.clone() };
        if candidate != int(-1) && !out.contains(&candidate) {
            out.push(candidate);
        }
        index += 1;
        // Calkin–Wilf successor: 1 / (2⌊q⌋ - q + 1)
        q = (int(2) * q.floor() - &q + int(1)).recip();
    }
    out.truncate(count);
    out
}

pub fn default_lambda_samples() -> Vec<Rational> {
    vec![int(-1), int(2), int(-3), rat(5, 2)]
}

/// What a checker returns for one parameter point.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub params: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub note: Option<String>,
}

impl Outcome {
    pub fn compare(params: Vec<(String, String)>, lhs: &Rational, rhs: &Rational) -> Self {
        Self { params, lhs: render(lhs), rhs: render(rhs), holds: lhs == rhs, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub type Checker = fn(&RunConfig) -> Result<Vec<Outcome>>;

/// Which sample sets a check draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleNeeds {
    pub t: bool,
    pub lambda: bool,
}

/// A registered identity with its executable predicate.
#[derive(Clone, Copy, Debug)]
pub struct IdentityCheck {
    pub id: &'static str,
    /// The identity, written out.
    pub anchor: &'static str,
    pub parameter_space: &'static str,
    pub needs: SampleNeeds,
    pub checker: Checker,
}

impl IdentityCheck {
    fn validate(&self, config: &RunConfig) -> Result<()> {
        if self.needs.t {
            if config.t_samples.is_empty() {
                return Err(Error::EmptySamples("t"));
            }
            if config.t_samples.contains(&int(-1)) {
                return Err(Error::ExcludedSample);
            }
        }
        if self.needs.lambda {
            if config.lambda_samples.is_empty() {
                return Err(Error::EmptySamples("lambda"));
            }
            if config.lambda_samples.contains(&int(1)) {
                return Err(Error::LambdaPole);
            }
        }
        Ok(())
    }

    pub fn run(&self, config: &RunConfig) -> Result<Vec<ReportEntry>> {
        self.validate(config)?;
        Ok((self.checker)(config)?
            .into_iter()
            .map(|o| ReportEntry {
                id: self.id.to_string(),
                anchor: self.anchor.to_string(),
                params: o.params,
                status: if o.holds { Status::Pass } else { Status::Fail },
                witness: (!o.holds).then_some(WitnessPair { lhs: o.lhs, rhs: o.rhs }),
                note: o.note,
            })
            .collect())
    }
}

pub fn find(id: &str) -> Result<IdentityCheck> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Runs the given checks concurrently; the report order does not depend on scheduling.
pub fn run_checks(checks: &[IdentityCheck], config: &RunConfig) -> Result<VerificationReport> {
    for c in checks {
        c.validate(config)?;
    }
    let results: Vec<Result<Vec<ReportEntry>>> = thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| s.spawn(move || c.run(config))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("identity check panicked"))
            .collect()
    });
    let mut entries = Vec::new();
    for r in results {
        entries.extend(r?);
    }
    Ok(VerificationReport::from_entries(REGISTRY_VERSION, entries))
}

pub fn run_identity(
    id: &str,
    depth: usize,
    t_samples: &[Rational],
    lambda_samples: &[Rational],
) -> Result<VerificationReport> {
    let check = find(id)?;
    let config = RunConfig {
        depth,
        t_samples: t_samples.to_vec(),
        lambda_samples: lambda_samples.to_vec(),
    };
    run_checks(&[check], &config)
}

pub fn run_all(depth: usize, t_samples: &[Rational], lambda_samples: &[Rational]) -> Result<VerificationReport> {
    let config = RunConfig {
        depth,
        t_samples: t_samples.to_vec(),
        lambda_samples: lambda_samples.to_vec(),
    };
    run_checks(&registry(), &config)
}
