use std::collections::BTreeMap;
use std::sync::Arc;

use crate::elimination::{determinant_bareiss, subresultant_resultant, sylvester_main};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::GcdDomain;

/// One way of computing `Res(a, b)` with respect to the main variable.
pub trait ResultantStrategy<R: GcdDomain>: Send + Sync {
    fn name(&self) -> &'static str;

    fn resultant(&self, a: &Poly<R>, b: &Poly<R>) -> Result<R>;
}

/// Subresultant polynomial remainder sequence.
#[derive(Debug, Clone, Copy, Default)]
pub struct SubresultantPrs;

impl<R: GcdDomain> ResultantStrategy<R> for SubresultantPrs {
    fn name(&self) -> &'static str {
        "subresultant"
    }

    fn resultant(&self, a: &Poly<R>, b: &Poly<R>) -> Result<R> {
        subresultant_resultant(a, b)
    }
}

/// Determinant of the Sylvester matrix by fraction-free elimination.
#[derive(Debug, Clone, Copy, Default)]
pub struct SylvesterBareiss;

impl<R: GcdDomain> ResultantStrategy<R> for SylvesterBareiss {
    fn name(&self) -> &'static str {
        "sylvester"
    }

    fn resultant(&self, a: &Poly<R>, b: &Poly<R>) -> Result<R> {
        let s = sylvester_main(a, b)?;
        determinant_bareiss(&s.entries)
    }
}

/// Resultant strategies addressable by name.
pub struct ResultantRegistry<R> {
    strategies: BTreeMap<String, Arc<dyn ResultantStrategy<R>>>,
}

impl<R: GcdDomain> ResultantRegistry<R> {
    pub const DEFAULT: &'static str = "subresultant";

    pub fn empty() -> Self {
        ResultantRegistry {
            strategies: BTreeMap::new(),
        }
    }

    /// Registry holding `subresultant` and `sylvester`.
    pub fn with_builtins() -> Self {
        let mut reg = Self::empty();
        reg.register(Arc::new(SubresultantPrs));
        reg.register(Arc::new(SylvesterBareiss));
        reg
    }

    /// Registers a strategy under its own name, replacing any previous one.
    pub fn register(&mut self, strategy: Arc<dyn ResultantStrategy<R>>) {
        self.strategies.insert(strategy.name().to_owned(), strategy);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn ResultantStrategy<R>>> {
        self.strategies.get(name).cloned().ok_or_else(|| {
            Error::Validation(format!(
                "unknown resultant strategy `{name}` (available: {})",
                self.names().join(", ")
            ))
        })
    }

    pub fn names(&self) -> Vec<&str> {
        self.strategies.keys().map(String::as_str).collect()
    }
}

impl<R: GcdDomain> Default for ResultantRegistry<R> {
    fn default() -> Self {
        Self::with_builtins()
    }
}
