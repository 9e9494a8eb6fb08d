//! Checking one identity.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use crate::arith::BigRat;
use crate::dsl::IdentityRecord;
use crate::error::QResult;
use crate::eval::to_node;

/// Truncation order used when neither the identity nor the caller sets one.
pub const DEFAULT_ORDER: u32 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub status: Status,
    pub order: u32,
    pub first_mismatch: Option<BigRat>,
    pub lhs_coeff: Option<String>,
    pub rhs_coeff: Option<String>,
    pub message: Option<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

enum Outcome {
    Agree,
    Differ(BigRat, String, String),
}

fn compare(r: &IdentityRecord, order: &BigRat) -> QResult<Outcome> {
    let lhs = to_node(&r.lhs)?.eval(order)?;
    let rhs = to_node(&r.rhs)?.eval(order)?;
    Ok(match lhs.first_mismatch(&rhs, order) {
        None => Outcome::Agree,
        Some((e, a, b)) => Outcome::Differ(e, a.to_string(), b.to_string()),
    })
}

/// Evaluates both sides below `q^order`, where the order is the identity's
/// own override or `default_order`, and compares every coefficient.
/// Evaluation errors and panics become `Status::Error`.
pub fn verify_identity(r: &IdentityRecord, default_order: u32) -> VerificationReport {
    let order = r.order.unwrap_or(default_order);
    let start = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(|| {
        compare(r, &BigRat::from_int(order as i64))
    }));
    let mut rep = VerificationReport {
        name: r.name.clone(),
        status: Status::Pass,
        order,
        first_mismatch: None,
        lhs_coeff: None,
        rhs_coeff: None,
        message: None,
        elapsed: Duration::ZERO,
    };
    match res {
        Ok(Ok(Outcome::Agree)) => {}
        Ok(Ok(Outcome::Differ(e, a, b))) => {
            rep.status = Status::Fail;
            rep.message = Some(format!("coefficients of q^{e} differ: {a} vs {b}"));
            rep.first_mismatch = Some(e);
            rep.lhs_coeff = Some(a);
            rep.rhs_coeff = Some(b);
        }
        Ok(Err(err)) => {
            rep.status = Status::Error;
            rep.message = Some(err.to_string());
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "evaluation panicked".into());
            rep.status = Status::Error;
            rep.message = Some(format!("internal error: {msg}"));
        }
    }
    rep.elapsed = start.elapsed();
    rep
}
