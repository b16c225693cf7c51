//! Process-wide registry of formal parameter names.
//!
//! Parameters are interned once and referred to by a small integer id. The
//! monomial order on parameters follows interning order, which is
//! deterministic for a given sequence of parses.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

/// Interned parameter (a formal transcendental such as `q` or `p1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub(crate) u32);

#[derive(Default)]
struct Registry {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(Registry::default()))
}

impl Var {
    /// Interns `name`, returning the existing id when already registered.
    pub fn new(name: &str) -> Var {
        if let Some(&id) = registry().read().unwrap().ids.get(name) {
            return Var(id);
        }
        let mut reg = registry().write().unwrap();
        if let Some(&id) = reg.ids.get(name) {
            return Var(id);
        }
        let id = reg.names.len() as u32;
        reg.names.push(name.to_string());
        reg.ids.insert(name.to_string(), id);
        Var(id)
    }

    pub fn name(self) -> String {
        registry().read().unwrap().names[self.0 as usize].clone()
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}
