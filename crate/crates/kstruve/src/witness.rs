//! Witness points: the parameter tuple at which a check was evaluated,
//! serialized with only the fields that apply.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Point {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut field = |f: &mut fmt::Formatter<'_>, name: &str, v: String| -> fmt::Result {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{name}={v}")
        };
        if let Some(v) = self.nu {
            field(f, "nu", v.to_string())?;
        }
        if let Some(v) = self.mu {
            field(f, "mu", v.to_string())?;
        }
        if let Some(v) = self.k {
            field(f, "k", v.to_string())?;
        }
        if let Some(v) = self.c {
            field(f, "c", v.to_string())?;
        }
        if let Some(v) = self.x {
            field(f, "x", v.to_string())?;
        }
        if let Some(v) = self.alpha {
            field(f, "alpha", v.to_string())?;
        }
        if let Some(v) = self.a {
            field(f, "a", v.to_string())?;
        }
        if let Some(v) = self.r {
            field(f, "r", v.to_string())?;
        }
        Ok(())
    }
}
