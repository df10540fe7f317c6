//! Thurston type of an element of PMod(0,4) ≅ F₂ = ⟨a, b⟩.
//!
//! A nontrivial element is reducible exactly when it is conjugate to a nonzero
//! power of `a`, `b` or `ab` (the twist about the third curve is `(ab)⁻¹`);
//! every other nontrivial element is pseudo-Anosov. Conjugacy classes in a free
//! group are cyclic-rotation classes of cyclically reduced words, so the test
//! only has to inspect the cyclic core.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::word::{cancelling_prefix_len, Letter, Word};

/// The three conjugacy axes carrying reducible elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    A,
    B,
    AB,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::A, Axis::B, Axis::AB];

    /// Defining word: `a`, `b` or `ab`.
    pub fn word(self) -> Word {
        match self {
            Axis::A => Word::reduce([Letter::A]),
            Axis::B => Word::reduce([Letter::B]),
            Axis::AB => Word::reduce([Letter::A, Letter::B]),
        }
    }

    pub fn swap(self) -> Axis {
        match self {
            Axis::A => Axis::B,
            Axis::B => Axis::A,
            Axis::AB => Axis::AB,
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::A => "A",
            Axis::B => "B",
            Axis::AB => "AB",
        })
    }
}

/// `conjugator · axis^exponent · conjugator⁻¹`, with the conjugator of
/// minimal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AxisPower {
    pub axis: Axis,
    pub exponent: i64,
    pub conjugator: Word,
}

impl AxisPower {
    pub fn to_word(&self) -> Word {
        self.axis.word().pow(self.exponent).conjugate_by(&self.conjugator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Classification {
    Identity,
    Reducible(AxisPower),
    PseudoAnosov,
    /// Finite order; only arises in the extended group, never in F₂.
    Periodic,
}

impl Classification {
    pub fn tag(&self) -> ClassTag {
        match self {
            Classification::Identity => ClassTag::Identity,
            Classification::Reducible(_) => ClassTag::Reducible,
            Classification::PseudoAnosov => ClassTag::PseudoAnosov,
            Classification::Periodic => ClassTag::Periodic,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("classification serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Identity,
    Reducible,
    PseudoAnosov,
    Periodic,
}

/// Allocation-free result of [`classify_letters`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Identity,
    Reducible(Axis),
    PseudoAnosov,
}

/// Shape of a cyclically reduced core that is a rotation of a power.
struct PowerCore {
    axis: Axis,
    exponent: i64,
    /// The core is `(ba)^k` or `(AB)^k`, one rotation away from the axis word.
    rotated: bool,
}

fn match_core(core: &[Letter]) -> Option<PowerCore> {
    use Letter::*;
    let first = *core.first()?;
    if core.iter().all(|&l| l == first) {
        let axis = match first {
            A | AInv => Axis::A,
            B | BInv => Axis::B,
        };
        let k = core.len() as i64;
        return Some(PowerCore {
            axis,
            exponent: if first.is_inverse() { -k } else { k },
            rotated: false,
        });
    }
    if !core.len().is_multiple_of(2) {
        return None;
    }
    let (sign, rotated) = match (core[0], core[1]) {
        (A, B) => (1, false),
        (B, A) => (1, true),
        (BInv, AInv) => (-1, false),
        (AInv, BInv) => (-1, true),
        _ => return None,
    };
    if core.chunks_exact(2).all(|p| p[0] == core[0] && p[1] == core[1]) {
        Some(PowerCore {
            axis: Axis::AB,
            exponent: sign * (core.len() / 2) as i64,
            rotated,
        })
    } else {
        None
    }
}

/// Fast path used by the enumerators: the tag and axis of a reduced word.
#[inline]
pub fn classify_letters(letters: &[Letter]) -> Kind {
    if letters.is_empty() {
        return Kind::Identity;
    }
    let c = cancelling_prefix_len(letters);
    match match_core(&letters[c..letters.len() - c]) {
        Some(p) => Kind::Reducible(p.axis),
        None => Kind::PseudoAnosov,
    }
}

/// The decomposition `w = u · γ^k · u⁻¹` when `w` is reducible.
///
/// For a core `(ba)^k` the first core letter moves into the conjugator,
/// `ba = b·(ab)·b⁻¹`, and likewise `AB = A·(BA)·a`.
pub fn axis_power_form(w: &Word) -> Option<AxisPower> {
    let letters = w.letters();
    if letters.is_empty() {
        return None;
    }
    let c = cancelling_prefix_len(letters);
    let core = &letters[c..letters.len() - c];
    let shape = match_core(core)?;
    let mut conjugator = letters[..c].to_vec();
    if shape.rotated {
        // u never ends in the inverse of the core's first letter, so this stays reduced
        conjugator.push(core[0]);
    }
    Some(AxisPower {
        axis: shape.axis,
        exponent: shape.exponent,
        conjugator: Word::from_reduced_unchecked(conjugator),
    })
}

pub fn classify(w: &Word) -> Classification {
    if w.is_empty() {
        return Classification::Identity;
    }
    match axis_power_form(w) {
        Some(p) => Classification::Reducible(p),
        None => Classification::PseudoAnosov,
    }
}
