//! Shortness-exponent tables: `log_n` of the longest cycle along a family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{balanced_cubic_tree, h_family, square, FamilyMetrics};
use crate::twdp::longest_cycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    HFamily,
    CubicSquare,
}

impl Family {
    /// Largest level computed by the decomposition DP.
    pub fn dp_limit(self) -> usize {
        match self {
            Family::HFamily => 2,
            Family::CubicSquare => 10,
        }
    }

    /// `log_30 22` and `0`.
    pub fn limit(self) -> f64 {
        match self {
            Family::HFamily => 22f64.ln() / 30f64.ln(),
            Family::CubicSquare => 0.0,
        }
    }

    fn first_level(self) -> usize {
        match self {
            Family::HFamily => 0,
            Family::CubicSquare => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::HFamily => "h-family",
            Family::CubicSquare => "cubic-square",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h-family" => Ok(Family::HFamily),
            "cubic-square" => Ok(Family::CubicSquare),
            _ => Err(Error::InvalidArgument(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Dp,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShortnessRow {
    pub family: Family,
    /// `n` for `H_n`, `r` for cubic squares.
    pub level: usize,
    pub n: u128,
    pub cycle: u128,
    /// Display only: `ln(cycle) / ln(n)`.
    pub ratio: f64,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShortnessTable {
    pub family: Family,
    pub rows: Vec<ShortnessRow>,
    pub limit: f64,
}

fn closed_form(family: Family, level: usize) -> Result<(u128, u128)> {
    let overflow = || Error::InvalidArgument(format!("level {level} overflows 128-bit vertex counts"));
    match family {
        Family::HFamily => {
            let m = FamilyMetrics::at(level).ok_or_else(overflow)?;
            Ok((m.f, m.c))
        }
        Family::CubicSquare => {
            let n = 1u128.checked_shl(level as u32).and_then(|p| p.checked_mul(3)).ok_or_else(overflow)? - 2;
            Ok((n, 4 * level as u128))
        }
    }
}

fn by_dp(family: Family, level: usize) -> Result<(u128, u128)> {
    let g = match family {
        Family::HFamily => h_family(level)?,
        Family::CubicSquare => square(&balanced_cubic_tree(level)?),
    };
    let (c, _) = longest_cycle(&g, None)?;
    Ok((g.n() as u128, c as u128))
}

/// Rows for every level up to `max_level`. Levels past the DP range need
/// `closed_form`.
pub fn shortness_table(family: Family, max_level: usize, closed_form_ok: bool) -> Result<ShortnessTable> {
    let first = family.first_level();
    if max_level < first {
        return Err(Error::InvalidArgument(format!("{family} starts at level {first}")));
    }
    if max_level > family.dp_limit() && !closed_form_ok {
        return Err(Error::InvalidArgument(format!(
            "level {max_level} is past the DP range ({}) of {family}; pass the closed-form option",
            family.dp_limit()
        )));
    }
    let mut rows = Vec::new();
    for level in first..=max_level {
        let (source, (n, cycle)) = if level <= family.dp_limit() {
            (Source::Dp, by_dp(family, level)?)
        } else {
            (Source::ClosedForm, closed_form(family, level)?)
        };
        rows.push(ShortnessRow { family, level, n, cycle, ratio: (cycle as f64).ln() / (n as f64).ln(), source });
    }
    Ok(ShortnessTable { family, rows, limit: family.limit() })
}

/// Closed-form rows only, for the DP-free view of a family.
pub fn closed_form_table(family: Family, max_level: usize) -> Result<ShortnessTable> {
    let rows = (family.first_level()..=max_level)
        .map(|level| {
            let (n, cycle) = closed_form(family, level)?;
            Ok(ShortnessRow {
                family,
                level,
                n,
                cycle,
                ratio: (cycle as f64).ln() / (n as f64).ln(),
                source: Source::ClosedForm,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ShortnessTable { family, rows, limit: family.limit() })
}

impl fmt::Display for ShortnessTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>5} {:>24} {:>20} {:>8}  source", "level", "n", "cycle", "ratio")?;
        for r in &self.rows {
            let src = match r.source {
                Source::Dp => "dp",
                Source::ClosedForm => "closed-form",
            };
            writeln!(f, "{:>5} {:>24} {:>20} {:>8.4}  {src}", r.level, r.n, r.cycle, r.ratio)?;
        }
        write!(f, "limit {:.4}", self.limit)
    }
}
