use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered list of distinct variable names. Cloning is cheap; indices never change.
#[derive(Clone)]
pub struct VarCtx(Arc<Inner>);

struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarCtx {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<VarCtx, PolyError> {
        let mut index = HashMap::with_capacity(names.len());
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if !is_ident(n) {
                return Err(PolyError::BadVariableName(n.to_string()));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(PolyError::DuplicateVariable(n.to_string()));
            }
            owned.push(n.to_string());
        }
        Ok(VarCtx(Arc::new(Inner { names: owned, index })))
    }

    /// Convenience constructor for a fixed, known-valid list of names.
    pub fn of(names: &[&str]) -> VarCtx {
        VarCtx::new(names).expect("valid variable list")
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn same(&self, other: &VarCtx) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

pub(crate) fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => chars.all(|c| c.is_alphanumeric() || c == '_'),
        _ => false,
    }
}

impl PartialEq for VarCtx {
    fn eq(&self, other: &VarCtx) -> bool {
        self.same(other)
    }
}

impl Eq for VarCtx {}

impl fmt::Debug for VarCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(VarCtx::new(&["a", "a"]), Err(PolyError::DuplicateVariable(_))));
        assert!(matches!(VarCtx::new(&["1a"]), Err(PolyError::BadVariableName(_))));
        assert!(VarCtx::new(&["ζ", "h_111"]).is_ok());
    }

    #[test]
    fn indices_are_stable() {
        let c = VarCtx::of(&["x", "y", "z"]);
        assert_eq!(c.index_of("z"), Some(2));
        assert_eq!(c.clone().index_of("x"), Some(0));
        assert_eq!(c, VarCtx::of(&["x", "y", "z"]));
        assert_ne!(c, VarCtx::of(&["x", "z", "y"]));
    }
}
