//! The Power-IRS partial decoder.
//!
//! 1. Build the key-equation Padé problem and compute its shifted-minimal
//!    solution.
//! 2. Recover `f_t = psi_{u_t} / lambda_0`; each quotient must be an exact
//!    polynomial of degree below `k`.
//! 3. Re-encode and accept only if the result lies within `tau` burst errors
//!    of the received word.

use std::fmt;

use crate::code::{burst_weight, encode, CodeSpec, MessageVector, WordMatrix};
use crate::error::{Error, Result};
use crate::keyeq::{build_context, build_pade_problem};
use crate::multiindex::MultiIndex;
use crate::pade::solve_shifted_minimal;
use crate::radius::radius_new;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecoderParams {
    ell: u32,
    s: u32,
    tau: usize,
    /// Set when a requested `tau` above the radius was lowered to it.
    tau_clamped: bool,
}

impl DecoderParams {
    /// Parameters with `tau` equal to the decoding radius for this code.
    pub fn new(code: &CodeSpec, ell: u32, s: u32) -> Result<Self> {
        let r = radius_new(code.n(), code.k(), code.m(), ell, s)?;
        if r < 0 {
            return Err(Error::InvalidParams(format!(
                "decoding radius is negative ({r}) for ell={ell}, s={s}"
            )));
        }
        Ok(DecoderParams {
            ell,
            s,
            tau: r as usize,
            tau_clamped: false,
        })
    }

    /// Lowers `tau`. Requests above the radius are refused: `tau` stays at
    /// the radius and [`DecoderParams::tau_clamped`] reports it.
    pub fn with_tau(mut self, tau: usize) -> Self {
        if tau > self.tau {
            self.tau_clamped = true;
        } else {
            self.tau = tau;
            self.tau_clamped = false;
        }
        self
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn tau_clamped(&self) -> bool {
        self.tau_clamped
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailStage {
    NoPadeSolution,
    NonPolynomialQuotient,
    DegreeTooLarge,
    WeightExceedsTau,
}

impl fmt::Display for FailStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FailStage::NoPadeSolution => "no-pade-solution",
            FailStage::NonPolynomialQuotient => "non-polynomial-quotient",
            FailStage::DegreeTooLarge => "degree-too-large",
            FailStage::WeightExceedsTau => "weight-exceeds-tau",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    Success {
        codeword: WordMatrix,
        message: MessageVector,
    },
    Fail(FailStage),
}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, DecodeOutcome::Success { .. })
    }
}

pub fn decode(r: &WordMatrix, code: &CodeSpec, params: &DecoderParams) -> Result<DecodeOutcome> {
    r.check_shape(code)?;
    let f = code.field();
    let ctx = build_context(r, code, params.ell, params.s, params.tau)?;
    let problem = build_pade_problem(&ctx);
    let Some(sol) = solve_shifted_minimal(&problem) else {
        return Ok(DecodeOutcome::Fail(FailStage::NoPadeSolution));
    };
    let leader = &sol.lambda[problem.leader()];

    let mut polys = Vec::with_capacity(code.m());
    for t in 0..code.m() {
        let unit = MultiIndex::unit(code.m(), t);
        let col = problem
            .col_indices()
            .iter()
            .position(|j| *j == unit)
            .expect("unit indices are always present");
        let ft = match sol.psi[col].exact_div(leader, f) {
            Ok(q) => q,
            Err(Error::InexactDivision) => {
                return Ok(DecodeOutcome::Fail(FailStage::NonPolynomialQuotient))
            }
            Err(e) => return Err(e),
        };
        if !ft.degree_below(code.k()) {
            return Ok(DecodeOutcome::Fail(FailStage::DegreeTooLarge));
        }
        polys.push(ft);
    }

    let message = MessageVector::new(polys);
    let codeword = encode(&message, code)?;
    if burst_weight(&r.sub(&codeword, f)?) <= params.tau {
        Ok(DecodeOutcome::Success { codeword, message })
    } else {
        Ok(DecodeOutcome::Fail(FailStage::WeightExceedsTau))
    }
}
