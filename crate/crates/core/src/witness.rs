//! The witness DFA `D_n(Σ)` and its dialects.
//!
//! `D_n` has states `0..n`, initial state 0 and the single final state
//! `n - 1`. Each letter induces one of the role transformations below; a
//! dialect chooses which letter name plays which role and may leave roles
//! unassigned.
//!
//! | role | transformation | type |
//! |------|----------------|------|
//! | a | `(1, 2, ..., n-1)(0 -> 1)` | `{0, n-1}` |
//! | b | `(1, 2)(0 -> 2)` | `{0, 1}` |
//! | c | `(2, ..., n-1)(1 -> 2)(0 -> 1)` | `{1, n-1}` |
//! | d | `(0 -> 2)` | `{0, 2}` |
//! | `g_i_j` | canonical rank `n-1` map of type `{i, j}` | `{i, j}` |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automata::{complexity, is_non_returning, Dfa, DfaBuilder, Letter};
use crate::report::{ClaimReport, Params, Relation};
use crate::transform::{PairType, Transformation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    A,
    B,
    C,
    D,
    Gamma(usize, usize),
}

impl Role {
    /// The four named roles in positional order.
    pub const NAMED: [Role; 4] = [Role::A, Role::B, Role::C, Role::D];

    /// The transformation this role induces on `Q_n`.
    pub fn transformation(self, n: usize) -> Transformation {
        let images: Vec<usize> = match self {
            Role::A => (0..n).map(|q| if q == n - 1 { 1 } else { q + 1 }).collect(),
            Role::B => (0..n)
                .map(|q| match q {
                    0 => 2,
                    1 => 2,
                    2 => 1,
                    _ => q,
                })
                .collect(),
            Role::C => (0..n)
                .map(|q| match q {
                    0 => 1,
                    1 => 2,
                    q if q == n - 1 => 2,
                    _ => q + 1,
                })
                .collect(),
            Role::D => (0..n).map(|q| if q == 0 { 2 } else { q }).collect(),
            Role::Gamma(i, j) => {
                let mut images: Vec<usize> = (0..n).collect();
                if i == 0 {
                    images[0] = j;
                } else {
                    images[0] = i;
                    images[i] = j;
                }
                images
            }
        };
        Transformation::from_images_unchecked(images)
    }

    /// Default letter name: `a`..`d` or `g_i_j`.
    pub fn default_letter(self) -> String {
        match self {
            Role::A => "a".into(),
            Role::B => "b".into(),
            Role::C => "c".into(),
            Role::D => "d".into(),
            Role::Gamma(i, j) => format!("g_{i}_{j}"),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Gamma(i, j) => write!(f, "a_{{{i},{j}}}"),
            other => write!(f, "{}", other.default_letter()),
        }
    }
}

/// Which pair types make up `Γ'`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaVariant {
    /// Excludes `{0,n-1}, {0,1}, {1,n-1}, {0,2}`: the types already carried by
    /// `a, b, c, d`, so `Σ` has exactly one letter of each type.
    #[default]
    Corrected,
    /// Excludes `{0,n-1}, {0,1}, {1,n-1}, {1,2}`. This leaves two letters of
    /// type `{0,2}` and none of type `{1,2}`.
    Printed,
}

impl GammaVariant {
    pub fn excluded(self, n: usize) -> [PairType; 4] {
        let fourth = match self {
            GammaVariant::Corrected => PairType::new(0, 2),
            GammaVariant::Printed => PairType::new(1, 2),
        };
        [
            PairType::new(0, n - 1),
            PairType::new(0, 1),
            PairType::new(1, n - 1),
            fourth,
        ]
    }

    /// The `Γ'` roles for `Q_n`, ordered by type.
    pub fn roles(self, n: usize) -> Vec<Role> {
        let excluded = self.excluded(n);
        PairType::all(n)
            .filter(|p| !excluded.contains(p))
            .map(|p| Role::Gamma(p.i, p.j))
            .collect()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GammaVariant::Corrected => "corrected",
            GammaVariant::Printed => "printed",
        }
    }
}

impl FromStr for GammaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" => Ok(GammaVariant::Corrected),
            "printed" => Ok(GammaVariant::Printed),
            other => Err(Error::InvalidDialect(format!(
                "unknown gamma variant '{other}' (expected corrected or printed)"
            ))),
        }
    }
}

/// Positional assignment of letters to the roles `a, b, c, d`, plus whether
/// the `Γ'` letters are included.
///
/// The textual form lists one entry per slot in the order `a, b, c, d`, then
/// optionally `G`: `"b,a"` makes the letter `b` play role a and the letter
/// `a` play role b; `"a,-,b"` deletes role b and lets the letter `b` play
/// role c.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DialectSpec {
    slots: [Option<Letter>; 4],
    gamma: bool,
}

impl DialectSpec {
    pub fn new(slots: [Option<Letter>; 4], gamma: bool) -> Result<DialectSpec> {
        let spec = DialectSpec { slots, gamma };
        if spec.slots.iter().all(Option::is_none) && !gamma {
            return Err(Error::InvalidDialect("no role is assigned".into()));
        }
        let mut seen: Vec<&Letter> = Vec::new();
        for l in spec.slots.iter().flatten() {
            if seen.contains(&l) {
                return Err(Error::InvalidDialect(format!(
                    "letter '{l}' is assigned to two roles"
                )));
            }
            if l.as_str().starts_with("g_") && gamma {
                return Err(Error::InvalidDialect(format!(
                    "letter '{l}' collides with the Γ' letter names"
                )));
            }
            seen.push(l);
        }
        Ok(spec)
    }

    /// `a, b, c, d` and `Γ'`.
    pub fn full() -> DialectSpec {
        "a,b,c,d,G".parse().expect("static dialect")
    }

    pub fn slots(&self) -> &[Option<Letter>; 4] {
        &self.slots
    }

    pub fn includes_gamma(&self) -> bool {
        self.gamma
    }

    /// Concrete (role, letter) pairs for `Q_n`, in slot order followed by
    /// `Γ'` in type order.
    pub fn assignment(&self, n: usize, gamma: GammaVariant) -> Vec<(Role, Letter)> {
        let mut out: Vec<(Role, Letter)> = Role::NAMED
            .iter()
            .zip(&self.slots)
            .filter_map(|(&r, l)| l.clone().map(|l| (r, l)))
            .collect();
        if self.gamma {
            for r in gamma.roles(n) {
                let name = Letter::new(r.default_letter()).expect("generated name is valid");
                out.push((r, name));
            }
        }
        out
    }
}

impl FromStr for DialectSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let gamma = parts.last() == Some(&"G");
        if gamma {
            parts.pop();
        }
        if parts.len() > 4 {
            return Err(Error::InvalidDialect(format!(
                "'{s}' has {} positional slots, at most 4 are allowed",
                parts.len()
            )));
        }
        if parts.contains(&"G") {
            return Err(Error::InvalidDialect(format!("'{s}': G must come last")));
        }
        let mut slots: [Option<Letter>; 4] = Default::default();
        for (slot, part) in slots.iter_mut().zip(&parts) {
            match *part {
                "-" => {}
                "" => return Err(Error::InvalidDialect(format!("'{s}' has an empty slot"))),
                name => {
                    *slot = Some(Letter::new(name).map_err(|e| {
                        Error::InvalidDialect(format!("'{s}': {e}"))
                    })?)
                }
            }
        }
        DialectSpec::new(slots, gamma)
    }
}

impl fmt::Display for DialectSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.slots.iter().rposition(Option::is_some).map_or(0, |p| p + 1);
        let mut parts: Vec<&str> = self.slots[..last]
            .iter()
            .map(|l| l.as_ref().map_or("-", Letter::as_str))
            .collect();
        if self.gamma {
            parts.push("G");
        }
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WitnessId {
    pub n: usize,
    pub dialect: DialectSpec,
    /// Left operands of binary operations are written with primed states.
    /// This affects naming only.
    pub primed: bool,
    pub gamma: GammaVariant,
}

impl WitnessId {
    pub fn new(n: usize, dialect: &str) -> Result<WitnessId> {
        Ok(WitnessId {
            n,
            dialect: dialect.parse()?,
            primed: false,
            gamma: GammaVariant::Corrected,
        })
    }

    pub fn primed(mut self) -> WitnessId {
        self.primed = true;
        self
    }

    pub fn with_gamma(mut self, gamma: GammaVariant) -> WitnessId {
        self.gamma = gamma;
        self
    }

    /// Display name such as `L'_5(a,b)`.
    pub fn name(&self) -> String {
        let prime = if self.primed { "'" } else { "" };
        let suffix = match (self.dialect.includes_gamma(), self.gamma) {
            (true, GammaVariant::Printed) => "[printed]",
            _ => "",
        };
        format!("L{prime}_{}({}){suffix}", self.n, self.dialect)
    }
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub id: WitnessId,
    pub dfa: Dfa,
    /// Size of the minimal DFA of the built language.
    pub complexity: usize,
}

impl Witness {
    pub fn is_minimal(&self) -> bool {
        self.complexity == self.dfa.states()
    }

    /// State names, `q'` for primed witnesses.
    pub fn state_name(&self, q: usize) -> String {
        if self.id.primed {
            format!("{q}'")
        } else {
            q.to_string()
        }
    }

    /// The role each letter of the alphabet plays.
    pub fn roles(&self) -> Vec<(Role, Letter)> {
        self.id.dialect.assignment(self.id.n, self.id.gamma)
    }
}

pub fn build_witness(id: &WitnessId) -> Result<Witness> {
    let n = id.n;
    if n < 4 {
        return Err(Error::WitnessTooSmall(n));
    }
    let assignment = id.dialect.assignment(n, id.gamma);
    let mut builder = DfaBuilder::new(n).initial(0).finals([n - 1]);
    for (role, letter) in &assignment {
        builder = builder.images(letter.as_str(), &role.transformation(n).images());
    }
    let dfa = builder.build()?;
    let complexity = complexity(&dfa);
    Ok(Witness {
        id: id.clone(),
        dfa,
        complexity,
    })
}

/// Shorthand for `build_witness` with the corrected `Γ'`.
pub fn witness(n: usize, dialect: &str) -> Result<Witness> {
    build_witness(&WitnessId::new(n, dialect)?)
}

/// Checks that `d` is minimal and non-returning.
pub fn witness_is_valid(d: &Dfa) -> ClaimReport {
    let n = d.states();
    let kappa = complexity(d) as u64;
    let mut report = ClaimReport::new(
        "thm1.0-witness-valid",
        Params::n(n),
        "n",
        n as u64,
        Relation::Equal,
        kappa,
    );
    if !is_non_returning(d) {
        report = report.fail("a transition enters the initial state");
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn images(w: &Witness, letter: &str) -> Vec<usize> {
        let c = w.dfa.alphabet().index_of(letter).unwrap();
        w.dfa.letter_transformation(c).images()
    }

    #[test]
    fn role_images_for_n4() {
        let w = witness(4, "a,b,c,d").unwrap();
        assert_eq!(images(&w, "a"), vec![1, 2, 3, 1]);
        assert_eq!(images(&w, "b"), vec![2, 2, 1, 3]);
        assert_eq!(images(&w, "c"), vec![1, 2, 3, 2]);
        assert_eq!(images(&w, "d"), vec![2, 1, 2, 3]);
    }

    #[test]
    fn role_types() {
        for n in 4..=10 {
            assert_eq!(Role::A.transformation(n).type_of(), Some(PairType::new(0, n - 1)));
            assert_eq!(Role::B.transformation(n).type_of(), Some(PairType::new(0, 1)));
            assert_eq!(Role::C.transformation(n).type_of(), Some(PairType::new(1, n - 1)));
            assert_eq!(Role::D.transformation(n).type_of(), Some(PairType::new(0, 2)));
            for p in PairType::all(n) {
                let t = Role::Gamma(p.i, p.j).transformation(n);
                assert_eq!(t.type_of(), Some(p));
                assert!(t.is_non_returning());
            }
        }
    }

    #[test]
    fn swapped_dialect() {
        let w = witness(5, "b,a").unwrap();
        assert_eq!(images(&w, "a"), Role::B.transformation(5).images());
        assert_eq!(images(&w, "b"), Role::A.transformation(5).images());
    }

    #[test]
    fn gap_dialect() {
        let w = witness(5, "a,-,b").unwrap();
        assert_eq!(images(&w, "b"), Role::C.transformation(5).images());
        assert_eq!(w.dfa.alphabet().len(), 2);
    }

    #[test]
    fn gamma_sizes() {
        for n in 4..=7 {
            let full = witness(n, "a,b,c,d,G").unwrap();
            assert_eq!(full.dfa.alphabet().len(), n * (n - 1) / 2);
            let printed = build_witness(
                &WitnessId::new(n, "a,b,c,d,G").unwrap().with_gamma(GammaVariant::Printed),
            )
            .unwrap();
            assert_eq!(printed.dfa.alphabet().len(), n * (n - 1) / 2);
            assert!(printed.dfa.alphabet().contains("g_0_2"));
            assert!(!full.dfa.alphabet().contains("g_0_2"));
        }
    }

    #[test]
    fn dialect_parse_errors() {
        assert!("a,a".parse::<DialectSpec>().is_err());
        assert!("-,-".parse::<DialectSpec>().is_err());
        assert!("a,b,c,d,e".parse::<DialectSpec>().is_err());
        assert!("a,,b".parse::<DialectSpec>().is_err());
        assert!("G,a".parse::<DialectSpec>().is_err());
        assert!("g_1_2,G".parse::<DialectSpec>().is_err());
        assert_eq!("a,-,b".parse::<DialectSpec>().unwrap().to_string(), "a,-,b");
        assert_eq!("G".parse::<DialectSpec>().unwrap().to_string(), "G");
    }

    #[test]
    fn too_small() {
        assert_eq!(witness(3, "a,b").unwrap_err(), Error::WitnessTooSmall(3));
    }

    #[test]
    fn validity() {
        let w = witness(6, "a,b,c,d,G").unwrap();
        assert!(witness_is_valid(&w.dfa).passed());
        let empty = w.dfa.with_finals([]).unwrap();
        assert!(!witness_is_valid(&empty).passed());
    }
}
