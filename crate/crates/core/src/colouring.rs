use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Colouring discipline. Each is strictly stronger than the one before:
/// injective colourings are star, star colourings are acyclic, and all are
/// proper.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyKind {
    Proper,
    Acyclic,
    Star,
    Injective,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 4] = [
        PropertyKind::Proper,
        PropertyKind::Acyclic,
        PropertyKind::Star,
        PropertyKind::Injective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::Proper => "proper",
            PropertyKind::Acyclic => "acyclic",
            PropertyKind::Star => "star",
            PropertyKind::Injective => "injective",
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "proper" => Ok(PropertyKind::Proper),
            "acyclic" => Ok(PropertyKind::Acyclic),
            "star" => Ok(PropertyKind::Star),
            "injective" => Ok(PropertyKind::Injective),
            other => Err(Error::InvalidParameter(format!("unknown property `{other}`"))),
        }
    }
}

/// Total vertex colouring with 0-based colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring(pub Vec<usize>);

impl Colouring {
    pub fn new(colours: Vec<usize>) -> Self {
        Colouring(colours)
    }

    /// `1 + max` colour, zero for the empty colouring.
    pub fn num_colours(&self) -> usize {
        self.0.iter().max().map_or(0, |&c| c + 1)
    }

    /// Number of distinct colours actually used.
    pub fn distinct_colours(&self) -> usize {
        let mut seen: Vec<usize> = self.0.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Colour classes indexed by colour; unused colours give empty classes.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_colours()];
        for (v, &c) in self.0.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Renames colours to `0..` in order of first appearance.
    pub fn normalized(&self) -> Colouring {
        let mut map = std::collections::HashMap::new();
        Colouring(
            self.0
                .iter()
                .map(|&c| {
                    let next = map.len();
                    *map.entry(c).or_insert(next)
                })
                .collect(),
        )
    }

    pub(crate) fn check_total(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::NotTotal {
                expected: n,
                got: self.0.len(),
            });
        }
        Ok(())
    }

    /// Parses `n` whitespace-separated colours, optionally preceded by a
    /// `k <value>` header line.
    pub fn parse(text: &str) -> Result<Colouring> {
        let mut colours = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if colours.is_empty() && t.starts_with('k') {
                continue;
            }
            for tok in t.split_whitespace() {
                let c = tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: i + 1,
                    column: line.find(tok).unwrap_or(0) + 1,
                    message: format!("`{tok}` is not a colour"),
                })?;
                colours.push(c);
            }
        }
        Ok(Colouring(colours))
    }

    /// `k <colours>` header followed by one colour per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("k {}\n", self.num_colours());
        for c in &self.0 {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }
}

impl From<Vec<usize>> for Colouring {
    fn from(v: Vec<usize>) -> Self {
        Colouring(v)
    }
}

/// Total edge colouring indexed by multigraph edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColouring(pub Vec<usize>);

impl EdgeColouring {
    pub fn get(&self, id: usize) -> usize {
        self.0[id]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The same map read as a vertex colouring of the line graph.
    pub fn as_vertex_colouring(&self) -> Colouring {
        Colouring(self.0.clone())
    }
}

impl From<Vec<usize>> for EdgeColouring {
    fn from(v: Vec<usize>) -> Self {
        EdgeColouring(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_and_classes() {
        let c = Colouring::new(vec![2, 0, 2, 5]);
        assert_eq!(c.num_colours(), 6);
        assert_eq!(c.distinct_colours(), 3);
        assert_eq!(c.classes()[2], vec![0, 2]);
        assert_eq!(c.normalized(), Colouring::new(vec![0, 1, 0, 2]));
    }

    #[test]
    fn text_format() {
        let c = Colouring::new(vec![0, 1, 0]);
        assert_eq!(c.to_text(), "k 2\n0\n1\n0\n");
        assert_eq!(Colouring::parse(&c.to_text()).unwrap(), c);
        assert_eq!(Colouring::parse("0 1\n2\n").unwrap(), Colouring::new(vec![0, 1, 2]));
        assert!(matches!(Colouring::parse("0\nz\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn property_names() {
        for p in PropertyKind::ALL {
            assert_eq!(p.name().parse::<PropertyKind>().unwrap(), p);
        }
        assert!("harmonious".parse::<PropertyKind>().is_err());
    }
}
