//! Exhaustive search: all solutions, counts, orbits under the symmetry group,
//! maximum independent sets and domination numbers.
//!
//! Everything here is exponential and guarded by [`Caps`]. The solution
//! search splits on the column of the first row; the subtrees run on a rayon
//! pool and are merged in column order, so results do not depend on the
//! number of workers.

mod domination;
mod orbits;
mod search;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::board::{BoardSpec, Placement};
use crate::certificate::is_solvable;
use crate::construct::{construct_n_minus_1, construct_solution};
use crate::error::Error;
use crate::solution::SolutionPermutation;
use crate::verify::verify_nonattacking;

pub use orbits::{orbit_of, partition, Orbit};

/// Largest orders the exhaustive searches accept by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub enumerate: usize,
    pub count: usize,
    pub dominate: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumerate: 14,
            count: 16,
            dominate: 8,
        }
    }
}

/// Orders up to which [`Search::max_independent`] also runs the exhaustive
/// check.
pub const MAX_INDEPENDENT_EXHAUSTIVE: usize = 10;

#[derive(Debug, Clone)]
pub struct EnumerationReport {
    pub n: usize,
    pub total_count: u64,
    /// `None` when only counting was requested.
    pub fundamental_count: Option<u64>,
    /// Smallest member of each orbit, in lexicographic order.
    pub representatives: Vec<SolutionPermutation>,
    pub orbit_sizes: Vec<usize>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    pub n: usize,
    pub gamma: usize,
    pub witness: Placement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxIndependent {
    pub k: usize,
    pub witness: Placement,
    /// True when an exhaustive search confirmed that no `k + 1` queens fit.
    pub exhaustive: bool,
}

/// Search configuration: caps and the worker count.
#[derive(Debug, Clone, Default)]
pub struct Search {
    pub caps: Caps,
    /// `None` uses rayon's global pool; `Some(k)` a dedicated pool of `k`.
    pub threads: Option<usize>,
}

fn check_cap(
    n: usize,
    cap: usize,
    hard: usize,
    what: &'static str,
    hint: &'static str,
) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidOrder { n, min: 1 });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap, what, hint });
    }
    if n > hard {
        return Err(Error::CapExceeded {
            n,
            cap: hard,
            what,
            hint: "this is a hard limit of the search representation",
        });
    }
    Ok(())
}

impl Search {
    pub fn with_caps(caps: Caps) -> Self {
        Search {
            caps,
            threads: None,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            None => job(),
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("failed to build thread pool")
                .install(job),
        }
    }

    fn check_enumerate(&self, n: usize) -> Result<(), Error> {
        check_cap(
            n,
            self.caps.enumerate,
            search::MAX_ORDER,
            "enumeration",
            "use count-only mode or raise the cap",
        )
    }

    /// All solutions of `T_n` in lexicographic order.
    pub fn enumerate_solutions(&self, n: usize) -> Result<Vec<SolutionPermutation>, Error> {
        self.check_enumerate(n)?;
        let firsts = search::first_row_choices(n);
        let parts: Vec<Vec<SolutionPermutation>> = self.run(|| {
            firsts
                .par_iter()
                .map(|&c| search::collect_subtree(n, c))
                .collect()
        });
        Ok(parts.into_iter().flatten().collect())
    }

    /// Number of solutions, without storing them.
    pub fn count_solutions(&self, n: usize) -> Result<u64, Error> {
        check_cap(
            n,
            self.caps.count,
            search::MAX_ORDER,
            "count",
            "raise the cap",
        )?;
        let firsts = search::first_row_choices(n);
        Ok(self.run(|| {
            firsts
                .par_iter()
                .map(|&c| search::count_subtree(n, c))
                .sum()
        }))
    }

    /// Full enumeration followed by the orbit partition.
    pub fn count_fundamental(&self, n: usize) -> Result<EnumerationReport, Error> {
        let start = Instant::now();
        let solutions = self.enumerate_solutions(n)?;
        let orbits = partition(&solutions);
        let report = EnumerationReport {
            n,
            total_count: solutions.len() as u64,
            fundamental_count: Some(orbits.len() as u64),
            orbit_sizes: orbits.iter().map(|o| o.size).collect(),
            representatives: orbits.into_iter().map(|o| o.representative).collect(),
            elapsed: start.elapsed(),
        };
        debug_assert_eq!(
            report.orbit_sizes.iter().sum::<usize>() as u64,
            report.total_count
        );
        Ok(report)
    }

    /// Full enumeration reporting only the total.
    pub fn enumerate_report(&self, n: usize) -> Result<EnumerationReport, Error> {
        let start = Instant::now();
        let total_count = self.enumerate_solutions(n)?.len() as u64;
        Ok(EnumerationReport {
            n,
            total_count,
            fundamental_count: None,
            representatives: Vec::new(),
            orbit_sizes: Vec::new(),
            elapsed: start.elapsed(),
        })
    }

    /// Count-only report: no orbits, no representatives.
    pub fn count_report(&self, n: usize) -> Result<EnumerationReport, Error> {
        let start = Instant::now();
        let total_count = self.count_solutions(n)?;
        Ok(EnumerationReport {
            n,
            total_count,
            fundamental_count: None,
            representatives: Vec::new(),
            orbit_sizes: Vec::new(),
            elapsed: start.elapsed(),
        })
    }

    /// The largest number of mutually nonattacking queens on the full board.
    ///
    /// `n` for solvable orders and `n - 1` otherwise. Up to
    /// [`MAX_INDEPENDENT_EXHAUSTIVE`] the absence of an `n`-queen solution is
    /// additionally confirmed by exhaustive search.
    pub fn max_independent(&self, n: usize) -> Result<MaxIndependent, Error> {
        let (k, witness) = if is_solvable(n)? {
            (n, construct_solution(n)?.0.to_placement())
        } else {
            (n - 1, construct_n_minus_1(n)?)
        };
        let spec = BoardSpec::full(n)?;
        if let Err(v) = verify_nonattacking(&witness, &spec) {
            panic!("independent set witness for n = {n} is invalid: {v}");
        }
        // n queens is the most a board with n rows can hold.
        let exhaustive = k == n || n <= MAX_INDEPENDENT_EXHAUSTIVE;
        if k < n && n <= MAX_INDEPENDENT_EXHAUSTIVE {
            let unrestricted = Search {
                caps: Caps {
                    count: n,
                    ..self.caps
                },
                threads: self.threads,
            };
            let found = unrestricted.count_solutions(n)?;
            assert_eq!(
                found, 0,
                "n = {n}: exhaustive search found {found} full solutions"
            );
        }
        Ok(MaxIndependent {
            k,
            witness,
            exhaustive,
        })
    }

    pub fn domination_number(&self, n: usize) -> Result<DominationReport, Error> {
        check_cap(
            n,
            self.caps.dominate,
            domination::MAX_ORDER,
            "domination",
            "the search is exponential; raise the cap to go further",
        )?;
        let (gamma, witness) = domination::minimum(n);
        Ok(DominationReport { n, gamma, witness })
    }
}

pub fn enumerate_solutions(n: usize) -> Result<Vec<SolutionPermutation>, Error> {
    Search::default().enumerate_solutions(n)
}

pub fn count_solutions(n: usize) -> Result<u64, Error> {
    Search::default().count_solutions(n)
}

pub fn count_fundamental(n: usize) -> Result<EnumerationReport, Error> {
    Search::default().count_fundamental(n)
}

pub fn max_independent(n: usize) -> Result<MaxIndependent, Error> {
    Search::default().max_independent(n)
}

pub fn domination_number(n: usize) -> Result<DominationReport, Error> {
    Search::default().domination_number(n)
}
