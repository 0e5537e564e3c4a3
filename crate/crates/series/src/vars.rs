use std::fmt;
use std::sync::Arc;

use crate::error::{Result, SeriesError};

/// Ordered list of distinct variable names. Starred variables such as `x_star`
/// are ordinary independent names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().to_string();
            if out.contains(&n) {
                return Err(SeriesError::DuplicateVar(n));
            }
            out.push(n);
        }
        Ok(VarSet(out.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index(name).ok_or_else(|| SeriesError::UnknownVar(name.to_string()))
    }

    pub fn without(&self, name: &str) -> Result<VarSet> {
        let i = self.require(name)?;
        let v: Vec<String> = self.0.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, n)| n.clone()).collect();
        Ok(VarSet(v.into()))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
