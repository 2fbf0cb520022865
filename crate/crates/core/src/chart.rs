use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of coordinate names. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    coords: Arc<[String]>,
}

impl Chart {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Chart> {
        if names.is_empty() {
            return Err(Error::Shape("a chart needs at least one coordinate".into()));
        }
        let mut coords: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(Error::Shape(format!("`{n}` is not a valid coordinate name")));
            }
            if coords.iter().any(|c| c == n) {
                return Err(Error::Shape(format!("duplicate coordinate `{n}`")));
            }
            coords.push(n.to_string());
        }
        Ok(Chart { coords: coords.into() })
    }

    /// Convenience for literal charts in code and tests.
    pub fn from_names(names: &str) -> Chart {
        let v: Vec<&str> = names.split_whitespace().collect();
        Chart::new(&v).expect("valid chart literal")
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn names(&self) -> &[String] {
        &self.coords
    }

    pub fn name(&self, i: usize) -> &str {
        &self.coords[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.coords.iter().position(|c| c == name)
    }
}

impl fmt::Debug for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chart({})", self.coords.join(", "))
    }
}

/// Letters followed by digits.
pub fn is_identifier(s: &str) -> bool {
    let letters = s.chars().take_while(|c| c.is_ascii_alphabetic()).count();
    letters > 0 && s.chars().skip(letters).all(|c| c.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(Chart::new(&["x1", "x1"]).is_err());
        assert!(Chart::new(&["1x"]).is_err());
        assert!(Chart::new(&["x1y"]).is_err());
        assert!(Chart::new::<&str>(&[]).is_err());
    }

    #[test]
    fn finds_coordinates() {
        let c = Chart::from_names("x1 x2 y1");
        assert_eq!(c.dim(), 3);
        assert_eq!(c.index_of("y1"), Some(2));
        assert_eq!(c.index_of("z"), None);
    }
}
