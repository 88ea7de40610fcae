//! The ten extended Reidemeister moves on planar diagrams, random move walks,
//! planar realization of abstract links, canonical codes and bounded
//! equivalence search.
//!
//! A move site is written as one line, `TAG direction anchor...`, for example
//! `R1 expand a v=2` or `R2 reduce e4 e7`. Anchors are edge labels, crossing
//! identifiers and `key=value` parameters.

mod code;
mod local;
mod realize;
mod search;
mod work;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::{tld_check, PlanarDiagram};
use crate::{Error, Result};

pub use code::{canonical_code, planar_code, ABSTRACT_CODE_CAP};
pub use realize::realize;
pub use search::{equiv_search, equiv_search_with_cap, random_walk, random_walk_steps, WalkCaps, DEFAULT_FRONTIER_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveTag {
    R1,
    R2,
    R3,
    V1,
    V2,
    V3,
    V4,
    T1,
    T2,
    T3,
}

impl MoveTag {
    pub const ALL: [MoveTag; 10] = [
        MoveTag::R1,
        MoveTag::R2,
        MoveTag::R3,
        MoveTag::V1,
        MoveTag::V2,
        MoveTag::V3,
        MoveTag::V4,
        MoveTag::T1,
        MoveTag::T2,
        MoveTag::T3,
    ];
}

impl fmt::Display for MoveTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for MoveTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MoveTag::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidDiagram(format!("unknown move tag '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Expand,
    Reduce,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Expand => "expand",
            Direction::Reduce => "reduce",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MoveSite {
    pub tag: MoveTag,
    pub direction: Direction,
    pub anchors: Vec<String>,
}

impl MoveSite {
    pub fn new(tag: MoveTag, direction: Direction, anchors: Vec<String>) -> Self {
        Self { tag, direction, anchors }
    }

    /// Value of a `key=value` anchor.
    pub(crate) fn param(&self, key: &str) -> Option<&str> {
        self.anchors.iter().find_map(|a| a.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
    }

    pub(crate) fn num(&self, key: &str) -> Result<u32> {
        self.param(key)
            .unwrap_or("0")
            .parse()
            .map_err(|_| Error::StaleSite(format!("bad parameter '{key}' in {self}")))
    }

    /// Positional (non-parameter) anchor.
    pub(crate) fn pos(&self, i: usize) -> Result<&str> {
        self.anchors
            .iter()
            .filter(|a| !a.contains('='))
            .nth(i)
            .map(String::as_str)
            .ok_or_else(|| Error::StaleSite(format!("missing anchor in {self}")))
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.tag, self.direction)?;
        for a in &self.anchors {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveSite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut toks = s.split_whitespace();
        let tag = toks.next().ok_or_else(|| Error::InvalidDiagram("empty move line".into()))?.parse()?;
        let direction = match toks.next() {
            Some("expand") => Direction::Expand,
            Some("reduce") => Direction::Reduce,
            other => return Err(Error::InvalidDiagram(format!("bad move direction {other:?}"))),
        };
        Ok(MoveSite { tag, direction, anchors: toks.map(String::from).collect() })
    }
}

/// Parse a move sequence, one site per line; blank lines and `#` comments
/// are skipped.
pub fn parse_sequence(text: &str) -> Result<Vec<MoveSite>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::parse)
        .collect()
}

pub fn format_sequence(seq: &[MoveSite]) -> String {
    seq.iter().map(|s| format!("{s}\n")).collect()
}

/// All reduction sites and a generating family of expansion sites,
/// optionally restricted to some tags. Order is deterministic.
pub fn find_moves(d: &PlanarDiagram, tags: Option<&[MoveTag]>) -> Vec<MoveSite> {
    if tld_check(d).is_err() {
        return Vec::new();
    }
    let mut out = local::find_all(d);
    if let Some(tags) = tags {
        out.retain(|s| tags.contains(&s.tag));
    }
    out
}

/// Apply a move. A site whose pattern does not match `d` is rejected with
/// [`Error::StaleSite`].
pub fn apply_move(d: &PlanarDiagram, site: &MoveSite) -> Result<PlanarDiagram> {
    tld_check(d)?;
    local::apply(d, site)
}

/// Apply a sequence of moves in order.
pub fn apply_sequence(d: &PlanarDiagram, seq: &[MoveSite]) -> Result<PlanarDiagram> {
    seq.iter().try_fold(d.clone(), |acc, s| apply_move(&acc, s))
}
