//! The finite Clifford and Pauli groups as precomputed lookup tables.
//!
//! The single-qubit Clifford group generated by `H`, `S` and the global phase
//! `W = ω·I` has 192 elements (24 modulo the eight phases `ω^j`); the Pauli
//! group generated by `X`, `Y`, `Z` has 16 (the four Paulis times the phases
//! `i^a`, which arise as products such as `XYZ = i·I`). Each table pairs the
//! exact matrix with a shortest word for it, is built once by breadth-first
//! closure, and is read-only afterwards.

use once_cell::sync::Lazy;
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::gate::{Circuit, Gate, GateTag};
use crate::matrix::{TMatrix, VMatrix};

/// Breadth-first closure of `gens` under left multiplication, recording for
/// each element a shortest word (in product order) that evaluates to it.
fn closure<M, F>(gens: &[(GateTag, M)], identity: M, mul: F, expect: usize) -> Vec<(M, Circuit)>
where
    M: Clone + Eq + Hash,
    F: Fn(&M, &M) -> M,
{
    let mut seen: HashMap<M, ()> = HashMap::new();
    let mut out: Vec<(M, Circuit)> = Vec::new();
    let mut queue: VecDeque<(M, Circuit)> = VecDeque::new();
    seen.insert(identity.clone(), ());
    queue.push_back((identity.clone(), Circuit::empty()));
    out.push((identity, Circuit::empty()));
    while let Some((m, word)) = queue.pop_front() {
        for (tag, gm) in gens {
            let next = mul(gm, &m);
            if seen.contains_key(&next) {
                continue;
            }
            // next = G·m, so a word for next is [G] followed by the word for m.
            let mut gates = vec![Gate::plain(*tag)];
            gates.extend_from_slice(&word.gates);
            let next_word = Circuit::new(gates);
            seen.insert(next.clone(), ());
            out.push((next.clone(), next_word.clone()));
            queue.push_back((next, next_word));
        }
    }
    assert_eq!(
        out.len(),
        expect,
        "group closure has unexpected order {} (expected {expect})",
        out.len()
    );
    out
}

static CLIFFORD_T: Lazy<Vec<(TMatrix, Circuit)>> = Lazy::new(|| {
    let gens: Vec<(GateTag, TMatrix)> = [GateTag::H, GateTag::S, GateTag::W]
        .into_iter()
        .map(|t| (t, TMatrix::gate(Gate::plain(t)).unwrap()))
        .collect();
    closure(&gens, TMatrix::identity(), |a, b| a.mul(b), 192)
});

static CLIFFORD_V: Lazy<Vec<(VMatrix, Circuit)>> = Lazy::new(|| {
    let gens: Vec<(GateTag, VMatrix)> = [GateTag::H, GateTag::S, GateTag::W]
        .into_iter()
        .map(|t| (t, VMatrix::gate(Gate::plain(t)).unwrap()))
        .collect();
    closure(&gens, VMatrix::identity(), |a, b| a.mul(b), 192)
});

static PAULI_V: Lazy<Vec<(VMatrix, Circuit)>> = Lazy::new(|| {
    let gens: Vec<(GateTag, VMatrix)> = [GateTag::X, GateTag::Y, GateTag::Z]
        .into_iter()
        .map(|t| (t, VMatrix::gate(Gate::plain(t)).unwrap()))
        .collect();
    closure(&gens, VMatrix::identity(), |a, b| a.mul(b), 16)
});

/// The 192 Clifford operators over `Z[ω]/√2^k`, shortest words first.
pub fn clifford_t() -> &'static [(TMatrix, Circuit)] {
    &CLIFFORD_T
}

/// The 192 Clifford operators over `Z[i]/(√2^k·√5^ℓ)`, shortest words first.
pub fn clifford_v() -> &'static [(VMatrix, Circuit)] {
    &CLIFFORD_V
}

/// The 16-element Pauli group (with `i^a` phases) over the `V` ring.
pub fn pauli_v() -> &'static [(VMatrix, Circuit)] {
    &PAULI_V
}
