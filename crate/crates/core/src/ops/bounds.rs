//! Closed-form maxima for operations on non-returning languages, where the
//! left operand has complexity `m` and the right (or only) operand `n`.

use std::fmt;
use std::str::FromStr;

use super::{BooleanOp, OpMode};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpId {
    Reverse,
    Star,
    Product(OpMode),
    Boolean(BooleanOp, OpMode),
}

impl OpId {
    pub fn is_binary(self) -> bool {
        matches!(self, OpId::Product(_) | OpId::Boolean(..))
    }
}

impl fmt::Display for OpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpId::Reverse => f.write_str("reverse"),
            OpId::Star => f.write_str("star"),
            OpId::Product(mode) => write!(f, "product-{mode}"),
            OpId::Boolean(op, mode) => write!(f, "{op}-{mode}"),
        }
    }
}

impl FromStr for OpId {
    type Err = Error;

    /// Accepts `reverse`, `star`, and `<op>[-restricted|-unrestricted]` for
    /// `product`, `union`, `intersection`, `difference` and `symdiff`. The
    /// mode defaults to restricted.
    fn from_str(s: &str) -> Result<Self> {
        let (name, mode) = if let Some(base) = s.strip_suffix("-unrestricted") {
            (base, OpMode::Unrestricted)
        } else if let Some(base) = s.strip_suffix("-restricted") {
            (base, OpMode::Restricted)
        } else {
            (s, OpMode::Restricted)
        };
        match name {
            "reverse" if name == s => Ok(OpId::Reverse),
            "star" if name == s => Ok(OpId::Star),
            "product" => Ok(OpId::Product(mode)),
            other => other
                .parse::<BooleanOp>()
                .map(|op| OpId::Boolean(op, mode))
                .map_err(|_| Error::UnknownOperation(s.to_string())),
        }
    }
}

/// A named formula in `m` and `n`.
#[derive(Clone, Copy)]
pub struct BoundFormula {
    pub op: OpId,
    pub formula: &'static str,
    eval: fn(u64, u64) -> u64,
}

impl BoundFormula {
    pub fn eval(&self, m: usize, n: usize) -> u64 {
        (self.eval)(m as u64, n as u64)
    }
}

impl fmt::Debug for BoundFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.op, self.formula)
    }
}

fn pow2(e: u64) -> u64 {
    1u64 << e
}

/// The bound the harness treats as the prediction for `op`.
pub fn formula_for(op: OpId) -> BoundFormula {
    let (formula, eval): (&'static str, fn(u64, u64) -> u64) = match op {
        OpId::Reverse => ("2^n", |_, n| pow2(n)),
        OpId::Star => ("2^(n-1)", |_, n| pow2(n - 1)),
        OpId::Product(OpMode::Restricted) => ("(m-1)2^(n-1)+1", |m, n| (m - 1) * pow2(n - 1) + 1),
        OpId::Product(OpMode::Unrestricted) => ("m2^(n-1)+1", |m, n| m * pow2(n - 1) + 1),
        OpId::Boolean(_, OpMode::Restricted)
        | OpId::Boolean(BooleanOp::Intersection, OpMode::Unrestricted) => {
            ("mn-(m+n-2)", |m, n| m * n - (m + n - 2))
        }
        OpId::Boolean(BooleanOp::Union | BooleanOp::SymmetricDifference, OpMode::Unrestricted) => {
            ("mn+1", |m, n| m * n + 1)
        }
        OpId::Boolean(BooleanOp::Difference, OpMode::Unrestricted) => ("mn-n+1", |m, n| m * n - n + 1),
    };
    BoundFormula { op, formula, eval }
}

/// Competing forms of the same bound that appear elsewhere in the literature
/// for this result: the difference bound as `mn-n+2`, and the unrestricted
/// product bound with exponent `n+1`.
pub fn alternative_bounds(op: OpId) -> Vec<BoundFormula> {
    match op {
        OpId::Boolean(BooleanOp::Difference, OpMode::Unrestricted) => vec![BoundFormula {
            op,
            formula: "mn-n+2",
            eval: |m, n| m * n - n + 2,
        }],
        OpId::Product(OpMode::Unrestricted) => vec![BoundFormula {
            op,
            formula: "m2^(n+1)+1",
            eval: |m, n| m * pow2(n + 1) + 1,
        }],
        _ => Vec::new(),
    }
}

/// Evaluates the bound for an operation name such as `star` or
/// `union-unrestricted`.
pub fn bound_for(op: &str, m: usize, n: usize) -> Result<u64> {
    let id: OpId = op.parse()?;
    if n < 1 || (id.is_binary() && m < 1) {
        return Err(Error::Precondition(format!("bound for {id} needs positive sizes")));
    }
    Ok(formula_for(id).eval(m, n))
}
