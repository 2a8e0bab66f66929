//! The closed 46-tag Penn Treebank tagset: 36 word-class tags and 10
//! punctuation/symbol tags (the usual nine plus `HYPH` for free-standing
//! hyphens and dashes).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PosTag {
    CC,
    CD,
    DT,
    EX,
    FW,
    IN,
    JJ,
    JJR,
    JJS,
    LS,
    MD,
    NN,
    NNS,
    NNP,
    NNPS,
    PDT,
    POS,
    PRP,
    PRPS,
    RB,
    RBR,
    RBS,
    RP,
    SYM,
    TO,
    UH,
    VB,
    VBD,
    VBG,
    VBN,
    VBP,
    VBZ,
    WDT,
    WP,
    WPS,
    WRB,
    Dollar,
    Pound,
    OpenQuote,
    CloseQuote,
    LeftParen,
    RightParen,
    Comma,
    Period,
    Colon,
    Hyph,
}

/// Coarse grouping used by the sentiment lookup filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TagClass {
    Noun,
    Pronoun,
    Other,
}

use PosTag::*;

impl PosTag {
    pub const ALL: [PosTag; 46] = [
        CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD, NN, NNS, NNP, NNPS, PDT, POS, PRP, PRPS, RB, RBR, RBS, RP, SYM,
        TO, UH, VB, VBD, VBG, VBN, VBP, VBZ, WDT, WP, WPS, WRB, Dollar, Pound, OpenQuote, CloseQuote, LeftParen,
        RightParen, Comma, Period, Colon, Hyph,
    ];

    pub const COUNT: usize = 46;

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<PosTag> {
        PosTag::ALL.get(i).copied()
    }

    /// The Penn Treebank symbol, e.g. `PRP$` or `''`.
    pub fn symbol(self) -> &'static str {
        match self {
            CC => "CC",
            CD => "CD",
            DT => "DT",
            EX => "EX",
            FW => "FW",
            IN => "IN",
            JJ => "JJ",
            JJR => "JJR",
            JJS => "JJS",
            LS => "LS",
            MD => "MD",
            NN => "NN",
            NNS => "NNS",
            NNP => "NNP",
            NNPS => "NNPS",
            PDT => "PDT",
            POS => "POS",
            PRP => "PRP",
            PRPS => "PRP$",
            RB => "RB",
            RBR => "RBR",
            RBS => "RBS",
            RP => "RP",
            SYM => "SYM",
            TO => "TO",
            UH => "UH",
            VB => "VB",
            VBD => "VBD",
            VBG => "VBG",
            VBN => "VBN",
            VBP => "VBP",
            VBZ => "VBZ",
            WDT => "WDT",
            WP => "WP",
            WPS => "WP$",
            WRB => "WRB",
            Dollar => "$",
            Pound => "#",
            OpenQuote => "``",
            CloseQuote => "''",
            LeftParen => "(",
            RightParen => ")",
            Comma => ",",
            Period => ".",
            Colon => ":",
            Hyph => "HYPH",
        }
    }

    pub fn class(self) -> TagClass {
        match self {
            NN | NNS | NNP | NNPS => TagClass::Noun,
            PRP | PRPS | WP | WPS => TagClass::Pronoun,
            _ => TagClass::Other,
        }
    }

    pub fn is_noun(self) -> bool {
        self.class() == TagClass::Noun
    }

    pub fn is_adjective(self) -> bool {
        matches!(self, JJ | JJR | JJS)
    }

    pub fn is_adverb(self) -> bool {
        matches!(self, RB | RBR | RBS)
    }

    pub fn is_verb(self) -> bool {
        matches!(self, VB | VBD | VBG | VBN | VBP | VBZ)
    }

    pub fn is_comparative(self) -> bool {
        matches!(self, JJR | JJS | RBR | RBS)
    }

    pub fn is_punctuation(self) -> bool {
        self.index() >= Dollar.index()
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown part-of-speech tag {0:?}")]
pub struct UnknownTag(pub String);

impl FromStr for PosTag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PosTag::ALL
            .into_iter()
            .find(|t| t.symbol() == s)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

impl Serialize for PosTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

impl<'de> Deserialize<'de> for PosTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn tagset_is_closed_and_has_46_tags() {
        assert_eq!(PosTag::ALL.len(), 46);
        let symbols: HashSet<_> = PosTag::ALL.iter().map(|t| t.symbol()).collect();
        assert_eq!(symbols.len(), 46);
        let word: Vec<_> = PosTag::ALL.iter().filter(|t| !t.is_punctuation()).collect();
        assert_eq!(word.len(), 36);
        for (i, t) in PosTag::ALL.iter().enumerate() {
            assert_eq!(t.index(), i);
            assert_eq!(t.symbol().parse::<PosTag>().unwrap(), *t);
        }
    }

    #[test]
    fn classes() {
        assert_eq!(NNS.class(), TagClass::Noun);
        assert_eq!(PRPS.class(), TagClass::Pronoun);
        assert_eq!(JJ.class(), TagClass::Other);
        assert!(RBS.is_comparative() && !RB.is_comparative());
        assert!("XX".parse::<PosTag>().is_err());
    }

    #[test]
    fn serde_uses_symbols() {
        assert_eq!(serde_json::to_string(&PRPS).unwrap(), "\"PRP$\"");
        assert_eq!(serde_json::from_str::<PosTag>("\"''\"").unwrap(), CloseQuote);
    }
}
