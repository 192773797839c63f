//! Exact synthesis over the Clifford+V and Pauli+V gate sets.
//!
//! The algorithm reduces the first column of the input to `e₁ = (1, 0)` in
//! three stages — a single Clifford normalization clearing the column's
//! `√2`-exponent, then one V gate per unit of the `√5`-exponent, then a
//! monomial cleanup — and finishes by emitting the residual diagonal
//! `diag(1, i^m)` as a phase word. The V-count of the result is therefore
//! exactly the least `√5`-denominator exponent of the input, which is the
//! minimum possible.
//!
//! In the Pauli+V restriction (inputs with `√2`-exponent 0 and determinant
//! `±1`) the same reduction runs with the Pauli table in place of the
//! Clifford table; the first stage is vacuous and the residual is `I` or `Z`.

use std::fmt;

use crate::clifford::{clifford_v, pauli_v};
use crate::gate::{Circuit, Gate, GateTag};
use crate::matrix::VMatrix;
use ring_core::GaussInt;

/// Why exact synthesis refused an input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthError {
    pub reason: String,
}

impl SynthError {
    fn new(reason: impl Into<String>) -> SynthError {
        SynthError {
            reason: reason.into(),
        }
    }
}

impl fmt::Display for SynthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not exactly representable: {}", self.reason)
    }
}

impl std::error::Error for SynthError {}

/// Tracks the word `prefix` and matrix `mtx` with the invariant
/// `input = eval(prefix)·mtx`; applying an operator `C` (with word `w`)
/// maps `mtx ← C·mtx` and `prefix ← prefix·w†`.
struct Reduction {
    mtx: VMatrix,
    prefix: Circuit,
}

impl Reduction {
    fn apply(&mut self, c: &VMatrix, word: &Circuit) {
        self.mtx = c.mul(&self.mtx);
        self.prefix = self.prefix.concat(&word.dagger());
    }
}

/// Exact synthesis over Clifford+V. The resulting word evaluates to the
/// input exactly (global phase included) and its V-count equals the least
/// `√5`-denominator exponent of the input.
pub fn exact_synth_v(u: &VMatrix) -> Result<Circuit, SynthError> {
    synth_v_impl(u, false)
}

/// Exact synthesis over Pauli+V: inputs must additionally have least
/// `√2`-exponent 0 and determinant `±1`.
pub fn exact_synth_pauli_v(u: &VMatrix) -> Result<Circuit, SynthError> {
    synth_v_impl(u, true)
}

fn synth_v_impl(u: &VMatrix, pauli_only: bool) -> Result<Circuit, SynthError> {
    if !u.is_unitary() {
        return Err(SynthError::new("matrix is not unitary"));
    }
    let det = u
        .det_power_of_i()
        .ok_or_else(|| SynthError::new("determinant is not a power of i"))?;
    if u.k > 2 {
        return Err(SynthError::new(format!(
            "least √2-denominator exponent is {} (at most 2 is representable)",
            u.k
        )));
    }
    if pauli_only {
        if u.k != 0 {
            return Err(SynthError::new(
                "Pauli+V requires least √2-denominator exponent 0",
            ));
        }
        if det % 2 != 0 {
            return Err(SynthError::new("Pauli+V requires determinant ±1"));
        }
    }
    let table = if pauli_only { pauli_v() } else { clifford_v() };
    let mut red = Reduction {
        mtx: u.clone(),
        prefix: Circuit::empty(),
    };

    // Stage 1: one Clifford clears the column's √2-exponent. (Vacuous in the
    // Pauli+V case, where the whole matrix already has exponent 0.)
    if red.mtx.column_exponents().0 > 0 {
        let found = table
            .iter()
            .find(|(c, _)| c.mul(&red.mtx).column_exponents().0 == 0);
        let (c, w) = found.expect("a Clifford clearing the column √2-exponent must exist");
        red.apply(&c.clone(), &w.clone());
    }

    // Stage 2: each V gate lowers the column's √5-exponent by exactly one.
    let v_gates: Vec<(Gate, VMatrix)> = [GateTag::Vx, GateTag::Vy, GateTag::Vz]
        .into_iter()
        .flat_map(|t| [Gate::new(t, false), Gate::new(t, true)])
        .map(|g| (g, VMatrix::gate(g).unwrap()))
        .collect();
    loop {
        let (ck, cl) = red.mtx.column_exponents();
        assert_eq!(ck, 0, "√2-exponent must stay cleared during V-reduction");
        if cl == 0 {
            break;
        }
        let found = v_gates
            .iter()
            .find(|(_, m)| m.mul(&red.mtx).column_exponents().1 == cl - 1);
        let (g, m) = found.expect("a V gate lowering the column √5-exponent must exist");
        red.apply(&m.clone(), &Circuit::new(vec![*g]));
    }

    // Stage 3: a monomial cleanup sends the unit column to e₁.
    if !red.mtx.column_is_e1() {
        let found = table.iter().find(|(c, _)| c.mul(&red.mtx).column_is_e1());
        let (c, w) = found.expect("a table element completing the column reduction must exist");
        red.apply(&c.clone(), &w.clone());
    }

    // The residual is diag(1, i^m); append a word for it.
    let m = &red.mtx;
    assert!(
        (m.k, m.l) == (0, 0)
            && m.m[0] == GaussInt::one()
            && m.m[1].is_zero()
            && m.m[2].is_zero(),
        "column reduction must leave diag(1, i^m)"
    );
    let phase = (0..4u8)
        .find(|&p| m.m[3] == GaussInt::one().mul_i_pow(p))
        .expect("residual diagonal entry must be a power of i");
    let fix: &[Gate] = match phase {
        0 => &[],
        1 => &[Gate {
            tag: GateTag::S,
            inverse: false,
        }],
        2 => &[Gate {
            tag: GateTag::Z,
            inverse: false,
        }],
        _ => &[Gate {
            tag: GateTag::S,
            inverse: true,
        }],
    };
    if pauli_only {
        assert!(phase % 2 == 0, "Pauli+V residual must have determinant ±1");
    }
    let mut out = red.prefix;
    out.gates.extend_from_slice(fix);
    Ok(out)
}
