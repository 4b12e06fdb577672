//! Site-dependent parameters: explicit values on a window, a default outside.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Deserialize<'de>"))]
pub struct Profile<T> {
    #[serde(default)]
    pub start: i64,
    #[serde(default)]
    pub values: Vec<T>,
    pub default: T,
}

impl<T: Clone> Profile<T> {
    pub fn constant(value: T) -> Self {
        Profile { start: 0, values: Vec::new(), default: value }
    }

    pub fn new(start: i64, values: Vec<T>, default: T) -> Self {
        Profile { start, values, default }
    }

    pub fn at(&self, i: i64) -> T {
        let k = i - self.start;
        if k >= 0 && (k as usize) < self.values.len() {
            self.values[k as usize].clone()
        } else {
            self.default.clone()
        }
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Profile<U> {
        Profile { start: self.start, values: self.values.iter().map(&f).collect(), default: f(&self.default) }
    }
}

impl<T: fmt::Display> fmt::Display for Profile<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            write!(f, "{v},")?;
        }
        write!(f, "{}*", self.default)
    }
}

/// Parses `"2,1,3*40,1"`-style lists: `v*n` repeats `v` n times. A trailing
/// `v*` (no count) sets the default; otherwise the last value is the default.
impl<T: FromStr + Clone> FromStr for Profile<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut default = None;
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let parse = |t: &str| t.parse::<T>().map_err(|_| Error::Parse(format!("bad profile entry {t:?}")));
            match item.split_once('*') {
                Some((v, "")) => default = Some(parse(v)?),
                Some((v, n)) => {
                    let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad repeat count in {item:?}")))?;
                    values.extend(std::iter::repeat_n(parse(v)?, n));
                }
                None => values.push(parse(item)?),
            }
        }
        let default = match default.or_else(|| values.last().cloned()) {
            Some(d) => d,
            None => return Err(Error::Parse(format!("empty profile {s:?}"))),
        };
        Ok(Profile { start: 0, values, default })
    }
}
