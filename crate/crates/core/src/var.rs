//! Ordered variable universes.
//!
//! A `VarSet` is an explicit, user-supplied ordered list of variable names.
//! Position in the list is the variable's precedence for monomial orders
//! (index 0 is the most significant), so ties never arise.

use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl VarSet {
    /// Build a universe from distinct names. Panics on duplicates; universes
    /// are constructed from validated input everywhere in this crate.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(n),
                "duplicate variable `{n}` in universe"
            );
        }
        VarSet { names: Arc::new(names) }
    }

    pub fn empty() -> Self {
        VarSet { names: Arc::new(Vec::new()) }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    /// Same universe with `extra` new names appended in order.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> VarSet {
        let mut names: Vec<String> = self.names.as_ref().clone();
        for e in extra {
            let e = e.as_ref();
            assert!(!names.iter().any(|n| n == e), "variable `{e}` already present");
            names.push(e.to_string());
        }
        VarSet { names: Arc::new(names) }
    }

    /// Union preserving `self`'s order, then `other`'s new names in order.
    pub fn union(&self, other: &VarSet) -> VarSet {
        if self == other {
            return self.clone();
        }
        let mut names: Vec<String> = self.names.as_ref().clone();
        for n in other.names.iter() {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        VarSet { names: Arc::new(names) }
    }

    /// First name of the form `base`, `base_1`, `base_2`, ... not in use.
    pub fn fresh_name(&self, base: &str) -> String {
        if !self.contains(base) {
            return base.to_string();
        }
        for k in 1.. {
            let cand = format!("{base}_{k}");
            if !self.contains(&cand) {
                return cand;
            }
        }
        unreachable!()
    }
}

impl std::fmt::Display for VarSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_keeps_left_order() {
        let a = VarSet::new(vec!["b", "m"]);
        let b = VarSet::new(vec!["t", "m"]);
        let u = a.union(&b);
        assert_eq!(u.iter().collect::<Vec<_>>(), vec!["b", "m", "t"]);
    }

    #[test]
    fn fresh_name_skips_taken() {
        let a = VarSet::new(vec!["t", "t_1"]);
        assert_eq!(a.fresh_name("t"), "t_2");
        assert_eq!(a.fresh_name("u"), "u");
    }
}
