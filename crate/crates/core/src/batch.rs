//! Batch drafting and scoring over many questions or ontologies.
//!
//! With the `parallel` feature the work is spread over a rayon pool;
//! without it, or with [`Execution::Sequential`], items run in order on the
//! calling thread. Results always come back in input order.

use crate::draft::{draft_cq, DraftOutcome, DraftSettings};
use crate::metrics::{compute_metrics, MetricsReport};
use crate::rdf::Graph;
use crate::source::{CompetencyQuestion, MachineReader, SourceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

/// How a batch runs: the execution strategy and, for parallel runs, an
/// optional worker count (the global pool is used when `None`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Batch {
    pub execution: Execution,
    pub jobs: Option<usize>,
}

impl Batch {
    pub fn sequential() -> Self {
        Batch {
            execution: Execution::Sequential,
            jobs: None,
        }
    }

    pub fn parallel(jobs: Option<usize>) -> Self {
        Batch {
            execution: Execution::Parallel,
            jobs,
        }
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self.execution {
            Execution::Sequential => items.iter().map(f).collect(),
            Execution::Parallel => self.map_parallel(items, f),
        }
    }

    #[cfg(feature = "parallel")]
    fn map_parallel<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        use rayon::prelude::*;
        let run = || items.par_iter().map(&f).collect();
        match self.jobs {
            Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(run),
                Err(e) => {
                    log::warn!("could not build a {n}-thread pool ({e}); using the global pool");
                    run()
                }
            },
            _ => run(),
        }
    }

    #[cfg(not(feature = "parallel"))]
    fn map_parallel<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        items.iter().map(f).collect()
    }

    /// Fetches and drafts every question.
    pub fn draft_questions(
        &self,
        reader: &MachineReader,
        cqs: &[CompetencyQuestion],
        settings: &DraftSettings,
    ) -> Vec<Result<DraftOutcome, SourceError>> {
        self.map(cqs, |cq| {
            reader.fetch_graph(cq).map(|g| draft_cq(cq, &g, settings))
        })
    }

    /// Drafts already-fetched graphs.
    pub fn draft_graphs(
        &self,
        items: &[(CompetencyQuestion, Graph)],
        settings: &DraftSettings,
    ) -> Vec<DraftOutcome> {
        self.map(items, |(cq, g)| draft_cq(cq, g, settings))
    }

    pub fn metrics(&self, graphs: &[Graph]) -> Vec<MetricsReport> {
        self.map(graphs, compute_metrics)
    }
}
