//! Named fixtures, standard families, exhaustive enumeration of small
//! meet-semilattices and seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::order::{MeetSemilattice, Poset};

/// Largest size accepted by [`enumerate_all`].
pub const ENUMERATION_LIMIT: usize = 6;
/// Attempts before [`random_instance`] gives up.
pub const RANDOM_RETRY_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// Three pairwise incomparable atoms over `0`, no top.
    Fig1,
    /// Ten-element modular lattice with atoms `a b c d`.
    Fig2,
    /// Nine-element lattice in which `a` is not sharp.
    Fig3,
    /// Eight-element modular lattice with coatoms `d e f`.
    Fig4,
    /// `0 < a, b < m < 1`.
    Remark5,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Fig1,
        Fixture::Fig2,
        Fixture::Fig3,
        Fixture::Fig4,
        Fixture::Remark5,
    ];

    /// The four diagram fixtures, excluding the five-element remark lattice.
    pub const FIGURES: [Fixture; 4] = [Fixture::Fig1, Fixture::Fig2, Fixture::Fig3, Fixture::Fig4];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Fig1 => "fig1",
            Fixture::Fig2 => "fig2",
            Fixture::Fig3 => "fig3",
            Fixture::Fig4 => "fig4",
            Fixture::Remark5 => "remark5",
        }
    }

    fn diagram(
        self,
    ) -> (
        &'static [&'static str],
        &'static [(&'static str, &'static str)],
    ) {
        match self {
            Fixture::Fig1 => (&["0", "a", "b", "c"], &[("0", "a"), ("0", "b"), ("0", "c")]),
            Fixture::Fig2 => (
                &["0", "a", "b", "c", "d", "e", "f", "g", "h", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("0", "d"),
                    ("a", "e"),
                    ("a", "f"),
                    ("b", "e"),
                    ("b", "g"),
                    ("c", "e"),
                    ("c", "h"),
                    ("d", "f"),
                    ("d", "g"),
                    ("d", "h"),
                    ("e", "1"),
                    ("f", "1"),
                    ("g", "1"),
                    ("h", "1"),
                ],
            ),
            Fixture::Fig3 => (
                &["0", "a", "b", "c", "d", "e", "f", "g", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("a", "d"),
                    ("a", "e"),
                    ("b", "e"),
                    ("c", "e"),
                    ("d", "f"),
                    ("e", "g"),
                    ("f", "1"),
                    ("g", "1"),
                ],
            ),
            Fixture::Fig4 => (
                &["0", "a", "b", "c", "d", "e", "f", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("a", "d"),
                    ("b", "d"),
                    ("c", "d"),
                    ("c", "e"),
                    ("c", "f"),
                    ("d", "1"),
                    ("e", "1"),
                    ("f", "1"),
                ],
            ),
            Fixture::Remark5 => (
                &["0", "a", "b", "m", "1"],
                &[("0", "a"), ("0", "b"), ("a", "m"), ("b", "m"), ("m", "1")],
            ),
        }
    }

    pub fn build(self) -> MeetSemilattice {
        let (names, covers) = self.diagram();
        MeetSemilattice::build(names, covers)
            .expect("fixture diagrams are valid")
            .with_label(self.name())
    }
}

/// Description of a structure to construct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StructureSpec {
    Fixture(Fixture),
    Chain(usize),
    Boolean(usize),
    /// Bounded lattice of length 2 with `n` atoms.
    Mn(usize),
    Product(Vec<StructureSpec>),
}

impl fmt::Display for StructureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureSpec::Fixture(x) => f.write_str(x.name()),
            StructureSpec::Chain(n) => write!(f, "chain:{n}"),
            StructureSpec::Boolean(k) => write!(f, "bool:{k}"),
            StructureSpec::Mn(n) => write!(f, "mn:{n}"),
            StructureSpec::Product(parts) => {
                f.write_str("prod:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for StructureSpec {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(src.to_owned());
        let number = |s: &str| s.parse::<usize>().map_err(|_| bad());
        if let Some(fx) = Fixture::ALL.iter().find(|f| f.name() == src) {
            return Ok(StructureSpec::Fixture(*fx));
        }
        let (kind, arg) = src.split_once(':').ok_or_else(bad)?;
        let spec = match kind {
            "chain" => StructureSpec::Chain(number(arg)?),
            "bool" => StructureSpec::Boolean(number(arg)?),
            "mn" => StructureSpec::Mn(number(arg)?),
            "prod" => StructureSpec::Product(
                arg.split('+')
                    .map(str::parse)
                    .collect::<Result<Vec<StructureSpec>>>()?,
            ),
            _ => return Err(bad()),
        };
        spec.validate().map_err(|_| bad())?;
        Ok(spec)
    }
}

impl StructureSpec {
    fn validate(&self) -> Result<()> {
        let ok = match self {
            StructureSpec::Fixture(_) | StructureSpec::Boolean(_) => true,
            StructureSpec::Chain(n) | StructureSpec::Mn(n) => *n >= 1,
            StructureSpec::Product(parts) => parts.len() >= 2,
        };
        if !ok {
            return Err(Error::InvalidSpec(self.to_string()));
        }
        if let StructureSpec::Product(parts) = self {
            parts.iter().try_for_each(StructureSpec::validate)?;
        }
        Ok(())
    }
}

/// Constructs the structure described by `spec`, labelled with its spec
/// string.
pub fn build(spec: &StructureSpec) -> Result<MeetSemilattice> {
    spec.validate()?;
    let s = match spec {
        StructureSpec::Fixture(f) => f.build(),
        StructureSpec::Chain(n) => chain(*n)?,
        StructureSpec::Boolean(0) => MeetSemilattice::build::<&str>(&["0"], &[])?,
        StructureSpec::Boolean(k) => {
            let two = chain(2)?;
            if *k == 1 {
                two
            } else {
                product(&vec![two; *k])?
            }
        }
        StructureSpec::Mn(n) => mn(*n)?,
        StructureSpec::Product(parts) => {
            let factors = parts.iter().map(build).collect::<Result<Vec<_>>>()?;
            product(&factors)?
        }
    };
    Ok(s.with_label(spec.to_string()))
}

fn chain(n: usize) -> Result<MeetSemilattice> {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    MeetSemilattice::from_poset(Poset::from_covers(names, &covers)?)
}

fn mn(n: usize) -> Result<MeetSemilattice> {
    let mut names = vec!["0".to_string()];
    names.extend((1..=n).map(|i| format!("a{i}")));
    names.push("1".into());
    let top = n + 1;
    let covers: Vec<(usize, usize)> = (1..=n).flat_map(|i| [(0, i), (i, top)]).collect();
    MeetSemilattice::from_poset(Poset::from_covers(names, &covers)?)
}

/// Direct product with componentwise order; element names join the
/// component names with `_`.
pub fn product(factors: &[MeetSemilattice]) -> Result<MeetSemilattice> {
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for f in factors {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..f.len()).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    let names: Vec<String> = tuples
        .iter()
        .map(|t| {
            t.iter()
                .zip(factors)
                .map(|(&i, f)| f.name(i))
                .collect::<Vec<_>>()
                .join("_")
        })
        .collect();
    let poset = Poset::from_relation(names, |i, j| {
        tuples[i]
            .iter()
            .zip(&tuples[j])
            .zip(factors)
            .all(|((&a, &b), f)| f.leq(a, b))
    })?;
    MeetSemilattice::from_poset(poset)
}

/// Names `0, a, b, …, z, e27, e28, …` by declaration index.
pub fn element_name(i: usize) -> String {
    match i {
        0 => "0".into(),
        1..=26 => ((b'a' + (i - 1) as u8) as char).to_string(),
        _ => format!("e{i}"),
    }
}

/// Every poset on `n` elements with least element `0` (declared first) and
/// all binary meets, whose order is compatible with declaration order.
/// Isomorphic copies under different labelings may both appear.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = MeetSemilattice>> {
    if n == 0 {
        return Err(Error::InvalidSpec("enumeration size 0".into()));
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let names: Vec<String> = (0..n).map(element_name).collect();
    // strictly increasing pairs among the non-bottom elements
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let mut lt = vec![false; n * n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                lt[i * n + j] = true;
            }
        }
        let transitive = (1..n).all(|i| {
            (i + 1..n)
                .all(|j| !lt[i * n + j] || (j + 1..n).all(|k| !lt[j * n + k] || lt[i * n + k]))
        });
        if !transitive {
            continue;
        }
        let poset = Poset::from_relation(names.clone(), |i, j| i == j || i == 0 || lt[i * n + j])
            .expect("closed relation is a partial order");
        if let Ok(s) = MeetSemilattice::from_poset(poset) {
            let label = format!("enum{n}#{}", out.len());
            out.push(s.with_label(label));
        }
    }
    Ok(out.into_iter())
}

/// A seeded random meet-semilattice with `n` elements.
///
/// Non-bottom elements get a random cover DAG over a shuffled linear
/// extension; a bottom is adjoined and samples lacking some meet are
/// rejected.
pub fn random_instance(n: usize, seed: u64) -> Result<MeetSemilattice> {
    if n == 0 {
        return Err(Error::InvalidSpec("random instance of size 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..n).map(element_name).collect();
    let mut extension: Vec<usize> = (1..n).collect();
    for _ in 0..RANDOM_RETRY_CAP {
        extension.shuffle(&mut rng);
        let density = rng.gen_range(0.1..0.6);
        let mut covers: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
        for (a, &lo) in extension.iter().enumerate() {
            for &hi in &extension[a + 1..] {
                if rng.gen_bool(density) {
                    covers.push((lo, hi));
                }
            }
        }
        let poset = Poset::from_covers(names.clone(), &covers)?;
        if let Ok(s) = MeetSemilattice::from_poset(poset) {
            return Ok(s.with_label(format!("random{n}@{seed}")));
        }
    }
    Err(Error::RetriesExhausted(RANDOM_RETRY_CAP))
}
