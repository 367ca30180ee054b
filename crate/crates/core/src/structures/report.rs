//! Verification reports and their JSON/text rendering.

use std::time::Instant;

use serde::Serialize;

use crate::scalars::AlgebraicScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    HoldsWithMu,
    Fails,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::HoldsWithMu => "holds-with-mu",
            Status::Fails => "fails",
        }
    }

    pub fn ok(self) -> bool {
        self != Status::Fails
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MuValue {
    pub exact: String,
    pub approx: f64,
    pub sign: &'static str,
}

impl MuValue {
    pub fn new(mu: &AlgebraicScalar) -> Self {
        MuValue {
            exact: mu.to_string(),
            approx: round_sig12(mu.to_f64()),
            sign: if mu.is_negative() { "-" } else { "+" },
        }
    }
}

/// One named step of a composite verification.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl SubCheck {
    pub fn new(name: &str, holds: bool, residual: impl FnOnce() -> String) -> Self {
        SubCheck {
            name: name.to_string(),
            holds,
            residual: if holds { None } else { Some(residual()) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub status: Status,
    pub mu: Option<MuValue>,
    pub residual: Option<String>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl VerificationReport {
    pub fn holds(identity: &str) -> Self {
        Self::with_status(identity, Status::Holds)
    }

    pub fn fails(identity: &str, residual: impl Into<String>) -> Self {
        let mut r = Self::with_status(identity, Status::Fails);
        r.residual = Some(residual.into());
        r
    }

    pub fn holds_with_mu(identity: &str, mu: &AlgebraicScalar) -> Self {
        let mut r = Self::with_status(identity, Status::HoldsWithMu);
        r.mu = Some(MuValue::new(mu));
        r
    }

    /// `holds` when `ok`, otherwise `fails` with the given residual.
    pub fn check(identity: &str, ok: bool, residual: impl FnOnce() -> String) -> Self {
        if ok {
            Self::holds(identity)
        } else {
            Self::fails(identity, residual())
        }
    }

    /// `holds` iff every sub-check holds; the first failure becomes the residual.
    pub fn from_checks(identity: &str, checks: Vec<SubCheck>) -> Self {
        let first_fail = checks.iter().find(|c| !c.holds);
        let mut r = match first_fail {
            None => Self::holds(identity),
            Some(c) => Self::fails(identity, format!("{}: {}", c.name, c.residual.clone().unwrap_or_default())),
        };
        r.detail = Some(serde_json::json!({ "checks": checks }));
        r
    }

    fn with_status(identity: &str, status: Status) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            status,
            mu: None,
            residual: None,
            elapsed_ms: 0,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: serde_json::Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn ok(&self) -> bool {
        self.status.ok()
    }

    pub fn render_text(&self) -> String {
        let mut line = format!("[{}] {}", self.status.as_str(), self.identity);
        if let Some(mu) = &self.mu {
            line.push_str(&format!("  mu = {} (~ {})", mu.exact, format_sig12(mu.approx)));
        }
        if let Some(r) = &self.residual {
            line.push_str(&format!("  residual: {r}"));
        }
        line
    }
}

/// Decimal with 12 significant digits, ties to even.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    // Rust's formatter rounds the exact binary value half-to-even
    let s = format!("{:.11e}", x);
    let (mant, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if exp >= 11 {
        format!("{}{}", digits, "0".repeat((exp - 11) as usize))
    } else if exp >= 0 {
        let cut = (exp + 1) as usize;
        format!("{}.{}", &digits[..cut], &digits[cut..])
    } else {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// `x` rounded to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    format_sig12(x).parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(format_sig12(-6.0 / 5f64.sqrt()), "-2.68328157300");
        assert_eq!(format_sig12(0.5), "0.500000000000");
        assert_eq!(format_sig12(123456789012345.0), "123456789012000");
        assert_eq!(format_sig12(0.000123), "0.000123000000000");
        // 0.125 is exact in binary; 12 digits need no tie-break but 2.5e-12-scale ties do
        assert_eq!(format_sig12(1.0000000000005), "1.00000000000");
    }

    #[test]
    fn json_shape() {
        let r = VerificationReport::holds_with_mu("np2", &AlgebraicScalar::sqrt5_times(-6, 5));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "holds-with-mu");
        assert_eq!(v["mu"]["exact"], "-(6/5)*sqrt5");
        assert_eq!(v["mu"]["sign"], "-");
        assert!(v["residual"].is_null());
        assert!(v.get("detail").is_none());
    }
}
