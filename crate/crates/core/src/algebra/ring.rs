use std::fmt;
use std::sync::Arc;

/// An ordered list of variable names. Polynomials carry the ring they live in
/// and arithmetic between polynomials of different rings is a logic error.
#[derive(Clone, Eq)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A new ring with `extra` prepended.
    pub fn with_front<S: AsRef<str>>(&self, extra: &[S]) -> Ring {
        let mut names: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend(self.names.iter().cloned());
        Ring::new(&names)
    }

    /// A fresh variable name based on `base` that is not yet used in this ring
    /// or in `also_taken`.
    pub fn fresh_name(&self, base: &str, also_taken: &[String]) -> String {
        let taken = |s: &str| self.index_of(s).is_some() || also_taken.iter().any(|t| t == s);
        if !taken(base) {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}{i}"))
            .find(|c| !taken(c))
            .expect("unbounded search")
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &self.names[..])
    }
}
