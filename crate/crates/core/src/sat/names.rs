//! Symbolic names for the genes of the reductions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::model::GeneFamily;

/// Role of a gene in a reduced instance. Indices are one-based variable or
/// clause numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    X(u32),
    Y(u32),
    Z,
    A(u32),
    B(u32),
    C(u32),
    APrime(u32),
    BPrime(u32),
    CPrime(u32),
    R(u32),
    S(u32),
    T(u32),
}

impl Role {
    /// Literal gene for position 0, 1, 2 of clause `j`.
    pub fn literal(clause: u32, position: usize) -> Role {
        match position {
            0 => Role::R(clause),
            1 => Role::S(clause),
            _ => Role::T(clause),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::X(i) => write!(f, "x_{i}"),
            Role::Y(i) => write!(f, "y_{i}"),
            Role::Z => f.write_str("z"),
            Role::A(j) => write!(f, "a_{j}"),
            Role::B(j) => write!(f, "b_{j}"),
            Role::C(j) => write!(f, "c_{j}"),
            Role::APrime(j) => write!(f, "a'_{j}"),
            Role::BPrime(j) => write!(f, "b'_{j}"),
            Role::CPrime(j) => write!(f, "c'_{j}"),
            Role::R(j) => write!(f, "r_{j}"),
            Role::S(j) => write!(f, "s_{j}"),
            Role::T(j) => write!(f, "t_{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoleParseError;

impl FromStr for Role {
    type Err = RoleParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "z" {
            return Ok(Role::Z);
        }
        let (head, index) = s.split_once('_').ok_or(RoleParseError)?;
        if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) || index.starts_with('0')
        {
            return Err(RoleParseError);
        }
        let i: u32 = index.parse().map_err(|_| RoleParseError)?;
        Ok(match head {
            "x" => Role::X(i),
            "y" => Role::Y(i),
            "a" => Role::A(i),
            "b" => Role::B(i),
            "c" => Role::C(i),
            "a'" => Role::APrime(i),
            "b'" => Role::BPrime(i),
            "c'" => Role::CPrime(i),
            "r" => Role::R(i),
            "s" => Role::S(i),
            "t" => Role::T(i),
            _ => return Err(RoleParseError),
        })
    }
}

/// Bijection between gene families and their roles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneNameTable {
    by_family: BTreeMap<GeneFamily, Role>,
    by_role: HashMap<Role, GeneFamily>,
}

impl GeneNameTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a binding; returns false (and changes nothing) if either side is
    /// already bound.
    pub fn insert(&mut self, family: GeneFamily, role: Role) -> bool {
        if self.by_family.contains_key(&family) || self.by_role.contains_key(&role) {
            return false;
        }
        self.by_family.insert(family, role);
        self.by_role.insert(role, family);
        true
    }

    pub fn role(&self, family: GeneFamily) -> Option<Role> {
        self.by_family.get(&family).copied()
    }

    pub fn family(&self, role: Role) -> Option<GeneFamily> {
        self.by_role.get(&role).copied()
    }

    /// Family of a role that the construction guarantees is present.
    pub(crate) fn gene(&self, role: Role) -> GeneFamily {
        self.by_role[&role]
    }

    pub fn len(&self) -> usize {
        self.by_family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_family.is_empty()
    }

    /// Bindings in ascending family order.
    pub fn iter(&self) -> impl Iterator<Item = (GeneFamily, Role)> + '_ {
        self.by_family.iter().map(|(&f, &r)| (f, r))
    }

    pub fn name(&self, family: GeneFamily) -> String {
        self.role(family)
            .map(|r| r.to_string())
            .unwrap_or_else(|| family.to_string())
    }
}
