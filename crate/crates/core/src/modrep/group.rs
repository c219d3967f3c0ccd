use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Group algebra of `(Z/p)^r`, generators `x_i = g_i - 1`.
    ElementaryAbelian,
    /// `G_{a(1)}^{×r}`, primitive generators.
    AdditiveInfinitesimal,
    /// Restricted `gl_n`, probed one p-nilpotent matrix at a time.
    GlRestricted,
    /// Second Frobenius kernel of `SL_2`, through its two commuting operators
    /// `e` and `e^{(p)}`.
    Sl2SecondFrobenius,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hopf {
    /// Primitive generators: `Δx = x⊗1 + 1⊗x`.
    Additive,
    /// Group-like `1 + x`.
    Multiplicative,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::ElementaryAbelian, Family::AdditiveInfinitesimal, Family::GlRestricted, Family::Sl2SecondFrobenius];

    pub fn name(self) -> &'static str {
        match self {
            Family::ElementaryAbelian => "elementary-abelian",
            Family::AdditiveInfinitesimal => "additive-infinitesimal",
            Family::GlRestricted => "gl-restricted",
            Family::Sl2SecondFrobenius => "sl2-second-frobenius",
        }
    }

    pub fn default_hopf(self) -> Hopf {
        match self {
            Family::ElementaryAbelian => Hopf::Multiplicative,
            _ => Hopf::Additive,
        }
    }

    /// Families whose algebra is `k[x_1..x_r]/(x_i^p)` with a known Heller shift.
    pub fn supports_heller(self) -> bool {
        matches!(self, Family::ElementaryAbelian | Family::AdditiveInfinitesimal)
    }
}

impl Hopf {
    pub fn name(self) -> &'static str {
        match self {
            Hopf::Additive => "additive",
            Hopf::Multiplicative => "multiplicative",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::Parse(format!("unknown family '{s}'")))
    }
}

impl FromStr for Hopf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "additive" => Ok(Hopf::Additive),
            "multiplicative" => Ok(Hopf::Multiplicative),
            _ => Err(Error::Parse(format!("unknown hopf structure '{s}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Hopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The group scheme a module lives over: `r` commuting p-nilpotent algebra
/// generators plus the rule for tensor products and duals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupData {
    pub family: Family,
    pub p: u32,
    pub r: usize,
    pub hopf: Hopf,
}

impl GroupData {
    pub fn new(family: Family, p: u32, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::out_of_range("number of generators", 0, "1.."));
        }
        crate::ff::Field::prime(p)?;
        Ok(GroupData { family, p, r, hopf: family.default_hopf() })
    }

    pub fn elementary_abelian(p: u32, r: usize) -> Result<Self> {
        Self::new(Family::ElementaryAbelian, p, r)
    }

    pub fn additive(p: u32, r: usize) -> Result<Self> {
        Self::new(Family::AdditiveInfinitesimal, p, r)
    }

    pub fn with_hopf(mut self, hopf: Hopf) -> Self {
        self.hopf = hopf;
        self
    }

    /// Dimension of the group algebra `k[x_1..x_r]/(x_i^p)`.
    pub fn algebra_dim(&self) -> usize {
        (self.p as usize).pow(self.r as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("klein".parse::<Family>().is_err());
        assert_eq!(GroupData::elementary_abelian(5, 2).unwrap().hopf, Hopf::Multiplicative);
        assert_eq!(GroupData::additive(5, 2).unwrap().hopf, Hopf::Additive);
    }
}
