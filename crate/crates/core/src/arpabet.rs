//! ARPABET phoneme inventory.
//!
//! The 39 symbols of General American English as used by the CMU
//! Pronouncing Dictionary. Vowels carry a stress digit (0 none,
//! 1 primary, 2 secondary); consonants never do.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One of the 39 ARPABET phoneme codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum Symbol {
    // Vowels
    AA, AE, AH, AO, AW, AY, EH, ER, EY, IH, IY, OW, OY, UH, UW,
    // Consonants
    B, CH, D, DH, F, G, HH, JH, K, L, M, N, NG, P, R, S, SH, T, TH, V, W, Y, Z, ZH,
}

/// All 39 symbols, vowels first.
pub const INVENTORY: [Symbol; 39] = [
    Symbol::AA, Symbol::AE, Symbol::AH, Symbol::AO, Symbol::AW, Symbol::AY,
    Symbol::EH, Symbol::ER, Symbol::EY, Symbol::IH, Symbol::IY, Symbol::OW,
    Symbol::OY, Symbol::UH, Symbol::UW,
    Symbol::B, Symbol::CH, Symbol::D, Symbol::DH, Symbol::F, Symbol::G,
    Symbol::HH, Symbol::JH, Symbol::K, Symbol::L, Symbol::M, Symbol::N,
    Symbol::NG, Symbol::P, Symbol::R, Symbol::S, Symbol::SH, Symbol::T,
    Symbol::TH, Symbol::V, Symbol::W, Symbol::Y, Symbol::Z, Symbol::ZH,
];

impl Symbol {
    pub fn is_vowel(self) -> bool {
        matches!(
            self,
            Symbol::AA | Symbol::AE | Symbol::AH | Symbol::AO | Symbol::AW
                | Symbol::AY | Symbol::EH | Symbol::ER | Symbol::EY | Symbol::IH
                | Symbol::IY | Symbol::OW | Symbol::OY | Symbol::UH | Symbol::UW
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::AA => "AA", Symbol::AE => "AE", Symbol::AH => "AH",
            Symbol::AO => "AO", Symbol::AW => "AW", Symbol::AY => "AY",
            Symbol::EH => "EH", Symbol::ER => "ER", Symbol::EY => "EY",
            Symbol::IH => "IH", Symbol::IY => "IY", Symbol::OW => "OW",
            Symbol::OY => "OY", Symbol::UH => "UH", Symbol::UW => "UW",
            Symbol::B => "B", Symbol::CH => "CH", Symbol::D => "D",
            Symbol::DH => "DH", Symbol::F => "F", Symbol::G => "G",
            Symbol::HH => "HH", Symbol::JH => "JH", Symbol::K => "K",
            Symbol::L => "L", Symbol::M => "M", Symbol::N => "N",
            Symbol::NG => "NG", Symbol::P => "P", Symbol::R => "R",
            Symbol::S => "S", Symbol::SH => "SH", Symbol::T => "T",
            Symbol::TH => "TH", Symbol::V => "V", Symbol::W => "W",
            Symbol::Y => "Y", Symbol::Z => "Z", Symbol::ZH => "ZH",
        }
    }

    pub fn parse(s: &str) -> Option<Symbol> {
        Some(match s {
            "AA" => Symbol::AA, "AE" => Symbol::AE, "AH" => Symbol::AH,
            "AO" => Symbol::AO, "AW" => Symbol::AW, "AY" => Symbol::AY,
            "EH" => Symbol::EH, "ER" => Symbol::ER, "EY" => Symbol::EY,
            "IH" => Symbol::IH, "IY" => Symbol::IY, "OW" => Symbol::OW,
            "OY" => Symbol::OY, "UH" => Symbol::UH, "UW" => Symbol::UW,
            "B" => Symbol::B, "CH" => Symbol::CH, "D" => Symbol::D,
            "DH" => Symbol::DH, "F" => Symbol::F, "G" => Symbol::G,
            "HH" => Symbol::HH, "JH" => Symbol::JH, "K" => Symbol::K,
            "L" => Symbol::L, "M" => Symbol::M, "N" => Symbol::N,
            "NG" => Symbol::NG, "P" => Symbol::P, "R" => Symbol::R,
            "S" => Symbol::S, "SH" => Symbol::SH, "T" => Symbol::T,
            "TH" => Symbol::TH, "V" => Symbol::V, "W" => Symbol::W,
            "Y" => Symbol::Y, "Z" => Symbol::Z, "ZH" => Symbol::ZH,
            _ => return None,
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Vowel stress level from the dictionary's trailing digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stress {
    Unstressed,
    Primary,
    Secondary,
}

impl Stress {
    pub fn digit(self) -> u8 {
        match self {
            Stress::Unstressed => 0,
            Stress::Primary => 1,
            Stress::Secondary => 2,
        }
    }

    pub fn from_digit(d: u8) -> Option<Stress> {
        Some(match d {
            0 => Stress::Unstressed,
            1 => Stress::Primary,
            2 => Stress::Secondary,
            _ => return None,
        })
    }
}

/// A phoneme: symbol plus stress digit on vowels.
///
/// The stress field is `Some` exactly when the symbol is a vowel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Phoneme {
    symbol: Symbol,
    stress: Option<Stress>,
}

impl Phoneme {
    pub fn vowel(symbol: Symbol, stress: Stress) -> Phoneme {
        debug_assert!(symbol.is_vowel());
        Phoneme { symbol, stress: Some(stress) }
    }

    pub fn consonant(symbol: Symbol) -> Phoneme {
        debug_assert!(!symbol.is_vowel());
        Phoneme { symbol, stress: None }
    }

    /// Parse a dictionary token such as `AE1` or `R`.
    ///
    /// Vowels must carry a stress digit and consonants must not;
    /// anything else is rejected.
    pub fn parse(token: &str) -> Option<Phoneme> {
        let (base, digit) = match token.as_bytes().last() {
            Some(b @ b'0'..=b'2') => (&token[..token.len() - 1], Some(b - b'0')),
            _ => (token, None),
        };
        let symbol = Symbol::parse(base)?;
        match (symbol.is_vowel(), digit) {
            (true, Some(d)) => Some(Phoneme::vowel(symbol, Stress::from_digit(d)?)),
            (false, None) => Some(Phoneme::consonant(symbol)),
            _ => None,
        }
    }

    pub fn symbol(&self) -> Symbol {
        self.symbol
    }

    pub fn stress(&self) -> Option<Stress> {
        self.stress
    }

    pub fn is_vowel(&self) -> bool {
        self.symbol.is_vowel()
    }

    /// True for vowels with primary or secondary stress.
    pub fn is_stressed(&self) -> bool {
        matches!(self.stress, Some(Stress::Primary) | Some(Stress::Secondary))
    }
}

impl fmt::Display for Phoneme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.stress {
            Some(s) => write!(f, "{}{}", self.symbol, s.digit()),
            None => write!(f, "{}", self.symbol),
        }
    }
}

impl Serialize for Phoneme {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Phoneme {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Phoneme::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad phoneme {s:?}")))
    }
}

/// Render a phoneme sequence as space-separated tokens.
pub fn join(phonemes: &[Phoneme]) -> String {
    phonemes
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inventory_is_39_symbols() {
        assert_eq!(INVENTORY.len(), 39);
        assert_eq!(INVENTORY.iter().filter(|s| s.is_vowel()).count(), 15);
    }

    #[test]
    fn parse_round_trips() {
        for sym in INVENTORY {
            if sym.is_vowel() {
                for d in 0..=2 {
                    let tok = format!("{}{}", sym, d);
                    let ph = Phoneme::parse(&tok).unwrap();
                    assert_eq!(ph.to_string(), tok);
                }
            } else {
                let ph = Phoneme::parse(sym.as_str()).unwrap();
                assert_eq!(ph.to_string(), sym.as_str());
            }
        }
    }

    #[test]
    fn stress_only_on_vowels() {
        assert!(Phoneme::parse("AE").is_none());
        assert!(Phoneme::parse("R1").is_none());
        assert!(Phoneme::parse("AE3").is_none());
        assert!(Phoneme::parse("QQ").is_none());
    }

    #[test]
    fn stressed_means_primary_or_secondary() {
        assert!(Phoneme::parse("AE1").unwrap().is_stressed());
        assert!(Phoneme::parse("AE2").unwrap().is_stressed());
        assert!(!Phoneme::parse("AE0").unwrap().is_stressed());
        assert!(!Phoneme::parse("R").unwrap().is_stressed());
    }
}
