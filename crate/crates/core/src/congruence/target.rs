use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Every congruence the suite can verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CongruenceTarget {
    #[serde(rename = "THM11_4K")]
    Thm11FourK,
    #[serde(rename = "THM11_16K")]
    Thm11SixteenK,
    #[serde(rename = "THM12_4K")]
    Thm12FourK,
    #[serde(rename = "THM12_16K")]
    Thm12SixteenK,
    #[serde(rename = "THM13_K2_4K")]
    Thm13SquareFourK,
    #[serde(rename = "THM13_K2_16K")]
    Thm13SquareSixteenK,
    #[serde(rename = "THM13_K_4K")]
    Thm13LinearFourK,
    #[serde(rename = "THM13_K_16K")]
    Thm13LinearSixteenK,
    #[serde(rename = "CONJ1_DP1")]
    Conj1,
    #[serde(rename = "CONJ2_MODP2")]
    Conj2,
    #[serde(rename = "MUSUN_P5")]
    MuSun,
    #[serde(rename = "LEMMA22")]
    Lemma22,
    #[serde(rename = "LEMMA_MPT")]
    LemmaMpt,
    #[serde(rename = "LEMMA_P2J")]
    LemmaP2j,
    #[serde(rename = "LEMMA_SUNH")]
    LemmaSunh,
    #[serde(rename = "LEMMA_SH55")]
    LemmaSh55,
}

/// Which residue class of `p mod 3` a target covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeClass {
    Any,
    OneModThree,
    TwoModThree,
}

impl PrimeClass {
    pub fn contains(self, p: u64) -> bool {
        match self {
            PrimeClass::Any => true,
            PrimeClass::OneModThree => p % 3 == 1,
            PrimeClass::TwoModThree => p % 3 == 2,
        }
    }
}

use CongruenceTarget::*;

impl CongruenceTarget {
    pub const ALL: [CongruenceTarget; 16] = [
        Thm11FourK,
        Thm11SixteenK,
        Thm12FourK,
        Thm12SixteenK,
        Thm13SquareFourK,
        Thm13SquareSixteenK,
        Thm13LinearFourK,
        Thm13LinearSixteenK,
        Conj1,
        Conj2,
        MuSun,
        Lemma22,
        LemmaMpt,
        LemmaP2j,
        LemmaSunh,
        LemmaSh55,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Thm11FourK => "THM11_4K",
            Thm11SixteenK => "THM11_16K",
            Thm12FourK => "THM12_4K",
            Thm12SixteenK => "THM12_16K",
            Thm13SquareFourK => "THM13_K2_4K",
            Thm13SquareSixteenK => "THM13_K2_16K",
            Thm13LinearFourK => "THM13_K_4K",
            Thm13LinearSixteenK => "THM13_K_16K",
            Conj1 => "CONJ1_DP1",
            Conj2 => "CONJ2_MODP2",
            MuSun => "MUSUN_P5",
            Lemma22 => "LEMMA22",
            LemmaMpt => "LEMMA_MPT",
            LemmaP2j => "LEMMA_P2J",
            LemmaSunh => "LEMMA_SUNH",
            LemmaSh55 => "LEMMA_SH55",
        }
    }

    pub fn prime_class(self) -> PrimeClass {
        match self {
            Thm12FourK | Thm12SixteenK | Lemma22 | LemmaMpt => PrimeClass::OneModThree,
            Thm13LinearFourK | Thm13LinearSixteenK => PrimeClass::TwoModThree,
            _ => PrimeClass::Any,
        }
    }

    /// Smallest prime the target is stated for.
    pub fn min_prime(self) -> u64 {
        match self {
            LemmaSunh => 7,
            _ => 5,
        }
    }

    pub fn applies_to(self, p: u64) -> bool {
        p >= self.min_prime() && self.prime_class().contains(p)
    }

    /// Exponent `m` of the modulus `p^m` the congruence is stated at.
    pub fn modulus_exponent(self, p: u64) -> u32 {
        match self {
            Thm13SquareFourK | Thm13SquareSixteenK => {
                if p % 3 == 1 {
                    3
                } else {
                    2
                }
            }
            Thm13LinearFourK | Thm13LinearSixteenK | Conj2 | LemmaMpt | LemmaSunh => 2,
            Conj1 => 4,
            MuSun => 5,
            _ => 3,
        }
    }

    /// Default upper bound on primes swept for this target.
    pub fn default_cap(self) -> u64 {
        match self {
            Conj1 | MuSun | LemmaSunh => 1000,
            _ => 2000,
        }
    }

    /// Resolve a user-facing name: an enumeration id or a group label such as
    /// `thm1.1`, `conj1`, `lemmas`, `all`.
    pub fn parse_group(name: &str) -> Result<Vec<CongruenceTarget>, Error> {
        let lower = name.trim().to_ascii_lowercase();
        let group: &[CongruenceTarget] = match lower.as_str() {
            "all" => &Self::ALL,
            "thm1.1" | "thm11" => &[Thm11FourK, Thm11SixteenK],
            "thm1.2" | "thm12" => &[Thm12FourK, Thm12SixteenK],
            "thm1.3" | "thm13" => &[
                Thm13SquareFourK,
                Thm13SquareSixteenK,
                Thm13LinearFourK,
                Thm13LinearSixteenK,
            ],
            "conj1" => &[Conj1],
            "conj2" => &[Conj2],
            "musun" => &[MuSun],
            "lemmas" => &[Lemma22, LemmaMpt, LemmaP2j, LemmaSunh, LemmaSh55],
            _ => return lower.parse::<CongruenceTarget>().map(|t| vec![t]),
        };
        Ok(group.to_vec())
    }
}

impl FromStr for CongruenceTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown target '{s}'")))
    }
}

impl fmt::Display for CongruenceTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.id())
    }
}
