//! Gates, circuits (gate words), and their text encoding.
//!
//! A [`Circuit`] is a word of [`Gate`]s in *matrix product order*: the
//! leftmost gate is the leftmost factor of the evaluated product, i.e. the
//! gate that is applied last. Words therefore read like matrix expressions —
//! the word `HT` denotes the operator `H·T` (apply `T` first, then `H`).
//!
//! Text encoding: every gate is one of the tokens `H S T X Y Z W Vx Vy Vz`,
//! an inverse is marked by a trailing `!`. Words over the V gate set are
//! written whitespace-separated (`H Vx! W`), words over the T gate set are
//! concatenated (`HTS!H`). The parser accepts both shapes.

use std::fmt;

/// The gate alphabet.
///
/// `H` and `S` generate the Clifford group together with the global phase
/// `W = ω·I` (`ω = e^{iπ/4}`); `X`, `Y`, `Z` are the Paulis; `T = diag(1, ω)`;
/// and the `V` gates are `V_X = (I + 2iX)/√5`, `V_Y = (I + 2iY)/√5`,
/// `V_Z = (I + 2iZ)/√5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateTag {
    H,
    S,
    T,
    X,
    Y,
    Z,
    W,
    Vx,
    Vy,
    Vz,
}

impl GateTag {
    /// Gates that equal their own inverse (`g† = g`).
    pub fn is_self_inverse(self) -> bool {
        matches!(self, GateTag::H | GateTag::X | GateTag::Y | GateTag::Z)
    }

    /// The serialization token.
    pub fn token(self) -> &'static str {
        match self {
            GateTag::H => "H",
            GateTag::S => "S",
            GateTag::T => "T",
            GateTag::X => "X",
            GateTag::Y => "Y",
            GateTag::Z => "Z",
            GateTag::W => "W",
            GateTag::Vx => "Vx",
            GateTag::Vy => "Vy",
            GateTag::Vz => "Vz",
        }
    }
}

/// A single gate: a tag plus an inverse flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gate {
    pub tag: GateTag,
    pub inverse: bool,
}

impl Gate {
    /// A gate, with the inverse flag dropped on self-inverse tags so that
    /// equal operators have equal representations.
    pub fn new(tag: GateTag, inverse: bool) -> Gate {
        Gate {
            tag,
            inverse: inverse && !tag.is_self_inverse(),
        }
    }

    /// The non-inverted gate.
    pub fn plain(tag: GateTag) -> Gate {
        Gate::new(tag, false)
    }

    /// The conjugate transpose.
    pub fn dagger(self) -> Gate {
        Gate::new(self.tag, !self.inverse)
    }

    /// Is this `T` or `T†`?
    pub fn is_t(self) -> bool {
        self.tag == GateTag::T
    }

    /// Is this one of the six `V`-type gates (`Vx`, `Vy`, `Vz` or an inverse)?
    pub fn is_v(self) -> bool {
        matches!(self.tag, GateTag::Vx | GateTag::Vy | GateTag::Vz)
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tag.token(), if self.inverse { "!" } else { "" })
    }
}

/// Which textual shape to emit; see the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordFormat {
    /// Tokens separated by single spaces (the V gate set convention).
    Spaced,
    /// Tokens written back to back (the T gate set convention).
    Concatenated,
}

/// A gate word in matrix product order (leftmost factor applied last).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(gates: Vec<Gate>) -> Circuit {
        Circuit { gates }
    }

    pub fn empty() -> Circuit {
        Circuit { gates: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Number of `T`/`T†` gates.
    pub fn t_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_t()).count()
    }

    /// Number of `V`-type gates, inverses included.
    pub fn v_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_v()).count()
    }

    /// The word for the conjugate transpose: reversed, with every gate
    /// daggered.
    pub fn dagger(&self) -> Circuit {
        Circuit::new(self.gates.iter().rev().map(|g| g.dagger()).collect())
    }

    /// `self` followed (as a matrix product) by `rhs`: the word `self · rhs`.
    pub fn concat(&self, rhs: &Circuit) -> Circuit {
        let mut gates = self.gates.clone();
        gates.extend_from_slice(&rhs.gates);
        Circuit::new(gates)
    }

    /// Renders the word in the requested format. The empty word encodes as
    /// the empty string.
    pub fn encode(&self, format: WordFormat) -> String {
        let sep = match format {
            WordFormat::Spaced => " ",
            WordFormat::Concatenated => "",
        };
        self.gates
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a gate word. Whitespace between tokens is optional; `!` inverts
    /// the preceding gate.
    pub fn parse(text: &str) -> Result<Circuit, ParseCircuitError> {
        let mut gates: Vec<Gate> = Vec::new();
        let mut chars = text.char_indices().peekable();
        while let Some((pos, c)) = chars.next() {
            let tag = match c {
                c if c.is_whitespace() => continue,
                '!' => {
                    let last = gates.pop().ok_or(ParseCircuitError {
                        position: pos,
                        message: "'!' must follow a gate".into(),
                    })?;
                    gates.push(last.dagger());
                    continue;
                }
                'H' => GateTag::H,
                'S' => GateTag::S,
                'T' => GateTag::T,
                'X' => GateTag::X,
                'Y' => GateTag::Y,
                'Z' => GateTag::Z,
                'W' => GateTag::W,
                'V' => match chars.next() {
                    Some((_, 'x')) => GateTag::Vx,
                    Some((_, 'y')) => GateTag::Vy,
                    Some((_, 'z')) => GateTag::Vz,
                    _ => {
                        return Err(ParseCircuitError {
                            position: pos,
                            message: "'V' must be followed by one of 'x', 'y', 'z'".into(),
                        })
                    }
                },
                other => {
                    return Err(ParseCircuitError {
                        position: pos,
                        message: format!("unknown gate character '{other}'"),
                    })
                }
            };
            gates.push(Gate::plain(tag));
        }
        Ok(Circuit::new(gates))
    }
}

impl fmt::Display for Circuit {
    /// Spaced when the word uses V gates, concatenated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let format = if self.gates.iter().any(|g| g.is_v()) {
            WordFormat::Spaced
        } else {
            WordFormat::Concatenated
        };
        write!(f, "{}", self.encode(format))
    }
}

/// A parse failure, annotated with the byte offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCircuitError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseCircuitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseCircuitError {}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(tag: GateTag) -> Gate {
        Gate::plain(tag)
    }

    #[test]
    fn self_inverse_gates_normalize() {
        assert_eq!(Gate::new(GateTag::H, true), g(GateTag::H));
        assert_eq!(Gate::new(GateTag::S, true).dagger(), g(GateTag::S));
        assert_eq!(g(GateTag::X).dagger(), g(GateTag::X));
    }

    #[test]
    fn counts() {
        let c = Circuit::parse("H T S! T! Vx Vy! Z").unwrap();
        assert_eq!(c.t_count(), 2);
        assert_eq!(c.v_count(), 2);
        assert_eq!(c.len(), 7);
    }

    #[test]
    fn encode_spaced_and_concatenated() {
        let c = Circuit::new(vec![
            g(GateTag::H),
            Gate::new(GateTag::Vx, true),
            g(GateTag::W),
        ]);
        assert_eq!(c.encode(WordFormat::Spaced), "H Vx! W");
        let t = Circuit::new(vec![g(GateTag::H), g(GateTag::T), Gate::new(GateTag::S, true)]);
        assert_eq!(t.encode(WordFormat::Concatenated), "HTS!");
        assert_eq!(Circuit::empty().encode(WordFormat::Concatenated), "");
    }

    #[test]
    fn parse_round_trips_both_formats() {
        for text in ["H Vx! W", "HTS!", "S!T!HT", "Vz Vz! H S W!"] {
            let c = Circuit::parse(text).unwrap();
            let re = Circuit::parse(&c.encode(WordFormat::Spaced)).unwrap();
            assert_eq!(c, re);
            let re2 = Circuit::parse(&c.encode(WordFormat::Concatenated)).unwrap();
            assert_eq!(c, re2);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = Circuit::parse("HT!Q").unwrap_err();
        assert_eq!(e.position, 3);
        let e = Circuit::parse("!H").unwrap_err();
        assert_eq!(e.position, 0);
        let e = Circuit::parse("H Va").unwrap_err();
        assert_eq!(e.position, 2);
    }

    #[test]
    fn dagger_reverses_and_inverts() {
        let c = Circuit::parse("HTS").unwrap();
        assert_eq!(c.dagger().encode(WordFormat::Concatenated), "S!T!H");
        assert_eq!(c.dagger().dagger(), c);
    }
}
