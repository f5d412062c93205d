//! Variable registry: the shared name table behind every polynomial ring.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Maps variable names to dense ids. Declaration order is the id order, which
/// keeps variable naming (and everything downstream) deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
    index: BTreeMap<String, u32>,
}

impl VarRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_names<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut reg = Self::new();
        for n in names {
            reg.add(n)?;
        }
        Ok(reg)
    }

    pub fn add(&mut self, name: impl Into<String>) -> Result<u32> {
        let name = name.into();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::invalid(format!("bad variable name `{name}`")));
        }
        if self.index.contains_key(&name) {
            return Err(Error::invalid(format!("duplicate variable name `{name}`")));
        }
        let id = self.names.len() as u32;
        self.names.push(name.clone());
        self.index.insert(name, id);
        Ok(id)
    }

    pub fn id(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<u32> {
        self.id(name)
            .ok_or_else(|| Error::invalid(format!("unknown variable `{name}`")))
    }

    pub fn name(&self, id: u32) -> &str {
        &self.names[id as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    pub fn all_ids(&self) -> Vec<u32> {
        (0..self.names.len() as u32).collect()
    }
}
