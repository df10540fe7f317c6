//! The extension Γ = ⟨t_a, t_b, ι, ȷ⟩ ≅ PMod(0,4) × Z₂ × Z₂.
//!
//! ι and ȷ are central involutions, so an element is a reduced word together
//! with two bits. Word length with respect to `{t_a, t_b, ι, ȷ}` is the
//! direct-product length `|w| + ε_ι + ε_ȷ`.

use std::collections::HashMap;
use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::census::{closed_form_reducible, closed_form_total, fold_sphere, EnumOptions, JsonInt, RATIO_DIGITS};
use crate::classify::{classify, classify_letters, Classification, Kind};
use crate::error::CensusError;
use crate::ratio::format_significant;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaElement {
    pub word: Word,
    pub eps_i: bool,
    pub eps_j: bool,
}

/// Generators of Γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaGenerator {
    Twist(Letter),
    Iota,
    Jota,
}

impl GammaGenerator {
    pub const ALL: [GammaGenerator; 6] = [
        GammaGenerator::Twist(Letter::A),
        GammaGenerator::Twist(Letter::AInv),
        GammaGenerator::Twist(Letter::B),
        GammaGenerator::Twist(Letter::BInv),
        GammaGenerator::Iota,
        GammaGenerator::Jota,
    ];
}

impl GammaElement {
    pub fn new(word: Word, eps_i: bool, eps_j: bool) -> Self {
        GammaElement { word, eps_i, eps_j }
    }

    pub fn identity() -> Self {
        GammaElement::new(Word::identity(), false, false)
    }

    pub fn generator(g: GammaGenerator) -> Self {
        match g {
            GammaGenerator::Twist(l) => GammaElement::new(Word::reduce([l]), false, false),
            GammaGenerator::Iota => GammaElement::new(Word::identity(), true, false),
            GammaGenerator::Jota => GammaElement::new(Word::identity(), false, true),
        }
    }

    pub fn multiply(&self, other: &GammaElement) -> GammaElement {
        GammaElement {
            word: self.word.multiply(&other.word),
            eps_i: self.eps_i ^ other.eps_i,
            eps_j: self.eps_j ^ other.eps_j,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty() && !self.eps_i && !self.eps_j
    }
}

pub fn gamma_length(g: &GammaElement) -> usize {
    g.word.len() + g.eps_i as usize + g.eps_j as usize
}

/// Periodic exactly for the three nontrivial torsion elements; otherwise the
/// type of the word component. Since `(w, e, f)² = (w², 0, 0)`, a mixed
/// element with nontrivial word has infinite order.
pub fn gamma_classify(g: &GammaElement) -> Classification {
    if g.word.is_empty() {
        if g.eps_i || g.eps_j {
            Classification::Periodic
        } else {
            Classification::Identity
        }
    } else {
        classify(&g.word)
    }
}

/// F₂ sphere size with `s(k) = 0` for negative `k`.
fn f2_sphere(k: i64) -> BigUint {
    if k < 0 {
        BigUint::zero()
    } else {
        closed_form_total(k as usize)
    }
}

/// `s(n) + 2·s(n−1) + s(n−2)`.
pub fn gamma_sphere_count(n: usize) -> BigUint {
    let n = n as i64;
    f2_sphere(n) + f2_sphere(n - 1) * 2u32 + f2_sphere(n - 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRow {
    pub n: usize,
    pub total: BigUint,
    pub periodic: BigUint,
    pub reducible: BigUint,
    pub pseudo_anosov: BigUint,
    pub cum_total: BigUint,
    pub cum_pa: BigUint,
    /// `cum_pa / cum_total`
    pub ratio: BigRational,
}

impl GammaRow {
    pub const CSV_HEADER: &'static str =
        "n,total,periodic,reducible,pseudo_anosov,cum_total,cum_pa,ratio_exact,ratio_decimal";

    /// `cum_pa/cum_total`, not reduced.
    pub fn ratio_exact(&self) -> String {
        format!("{}/{}", self.cum_pa, self.cum_total)
    }

    pub fn ratio_decimal(&self) -> String {
        format_significant(&self.ratio, RATIO_DIGITS)
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.total,
            self.periodic,
            self.reducible,
            self.pseudo_anosov,
            self.cum_total,
            self.cum_pa,
            self.ratio_exact(),
            self.ratio_decimal()
        )
    }

    pub fn check_against(&self, expected: &GammaRow) -> Result<(), CensusError> {
        let fields: [(&'static str, &BigUint, &BigUint); 6] = [
            ("total", &self.total, &expected.total),
            ("periodic", &self.periodic, &expected.periodic),
            ("reducible", &self.reducible, &expected.reducible),
            ("pseudo_anosov", &self.pseudo_anosov, &expected.pseudo_anosov),
            ("cum_total", &self.cum_total, &expected.cum_total),
            ("cum_pa", &self.cum_pa, &expected.cum_pa),
        ];
        for (field, got, want) in fields {
            if got != want {
                return Err(CensusError::Mismatch {
                    n: self.n,
                    field,
                    enumerated: got.to_string(),
                    expected: want.to_string(),
                });
            }
        }
        Ok(())
    }
}

impl Serialize for GammaRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("GammaRow", 9)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("total", &JsonInt(&self.total))?;
        s.serialize_field("periodic", &JsonInt(&self.periodic))?;
        s.serialize_field("reducible", &JsonInt(&self.reducible))?;
        s.serialize_field("pseudo_anosov", &JsonInt(&self.pseudo_anosov))?;
        s.serialize_field("cum_total", &JsonInt(&self.cum_total))?;
        s.serialize_field("cum_pa", &JsonInt(&self.cum_pa))?;
        s.serialize_field("ratio_exact", &self.ratio_exact())?;
        s.serialize_field("ratio_decimal", &self.ratio_decimal())?;
        s.end()
    }
}

/// Per-sphere tallies of Γ.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GammaCounts {
    pub total: u64,
    pub identity: u64,
    pub periodic: u64,
    pub reducible: u64,
    pub pseudo_anosov: u64,
}

impl GammaCounts {
    fn merge(mut self, o: GammaCounts) -> GammaCounts {
        self.total += o.total;
        self.identity += o.identity;
        self.periodic += o.periodic;
        self.reducible += o.reducible;
        self.pseudo_anosov += o.pseudo_anosov;
        self
    }
}

const TORSION: [(bool, bool); 4] = [(false, false), (true, false), (false, true), (true, true)];

/// Enumerates the Γ-sphere of radius `n` as `(w, ε_ι, ε_ȷ)` with
/// `|w| = n − ε_ι − ε_ȷ`.
pub fn gamma_sphere_counts(n: usize, opts: &EnumOptions) -> Result<GammaCounts, CensusError> {
    opts.check_cap(n)?;
    let mut acc = GammaCounts::default();
    for (ei, ej) in TORSION {
        let cost = ei as usize + ej as usize;
        let Some(len) = n.checked_sub(cost) else { continue };
        let torsion = ei || ej;
        let part = fold_sphere(
            len,
            opts,
            GammaCounts::default,
            |acc, w| {
                acc.total += 1;
                match classify_letters(w) {
                    Kind::Identity if torsion => acc.periodic += 1,
                    Kind::Identity => acc.identity += 1,
                    Kind::Reducible(_) => acc.reducible += 1,
                    Kind::PseudoAnosov => acc.pseudo_anosov += 1,
                }
            },
            GammaCounts::merge,
        )?;
        acc = acc.merge(part);
    }
    Ok(acc)
}

fn gamma_rows(spheres: impl Iterator<Item = (BigUint, BigUint, BigUint, BigUint)>) -> Vec<GammaRow> {
    let mut cum_total = BigUint::zero();
    let mut cum_pa = BigUint::zero();
    spheres
        .enumerate()
        .map(|(n, (total, periodic, reducible, pa))| {
            cum_total += &total;
            cum_pa += &pa;
            GammaRow {
                n,
                ratio: BigRational::new(BigInt::from(cum_pa.clone()), BigInt::from(cum_total.clone())),
                total,
                periodic,
                reducible,
                pseudo_anosov: pa,
                cum_total: cum_total.clone(),
                cum_pa: cum_pa.clone(),
            }
        })
        .collect()
}

/// Exhaustive census of Γ for radii `0..=max_n`.
pub fn gamma_census(max_n: usize, opts: &EnumOptions) -> Result<Vec<GammaRow>, CensusError> {
    opts.check_cap(max_n)?;
    let counts = (0..=max_n)
        .map(|n| gamma_sphere_counts(n, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(gamma_rows(counts.into_iter().map(|c| {
        (
            BigUint::from(c.total),
            BigUint::from(c.periodic),
            BigUint::from(c.reducible),
            BigUint::from(c.pseudo_anosov),
        )
    })))
}

/// Γ census rows from the F₂ closed forms convolved with `(1 + x)²`.
pub fn gamma_closed_form_rows(max_n: usize) -> Vec<GammaRow> {
    let reducible = |k: i64| {
        if k <= 0 {
            BigUint::zero()
        } else {
            closed_form_reducible(k as usize)
        }
    };
    let pa = |k: i64| {
        if k <= 0 {
            BigUint::zero()
        } else {
            closed_form_total(k as usize) - closed_form_reducible(k as usize)
        }
    };
    let conv = |f: &dyn Fn(i64) -> BigUint, n: i64| f(n) + f(n - 1) * 2u32 + f(n - 2);
    gamma_rows((0..=max_n as i64).map(|n| {
        let periodic = match n {
            1 => 2u32,
            2 => 1,
            _ => 0,
        };
        (
            gamma_sphere_count(n as usize),
            BigUint::from(periodic),
            conv(&reducible, n),
            conv(&pa, n),
        )
    }))
}

/// Sphere sizes of the Cayley graph of Γ by breadth-first search, using only
/// the group law.
pub fn gamma_bfs_sphere_sizes(max_n: usize) -> Vec<u64> {
    let mut dist: HashMap<GammaElement, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut sizes = vec![0u64; max_n + 1];
    let start = GammaElement::identity();
    dist.insert(start.clone(), 0);
    queue.push_back(start);
    while let Some(g) = queue.pop_front() {
        let d = dist[&g];
        sizes[d] += 1;
        if d == max_n {
            continue;
        }
        for s in GammaGenerator::ALL {
            let h = g.multiply(&GammaElement::generator(s));
            if !dist.contains_key(&h) {
                dist.insert(h.clone(), d + 1);
                queue.push_back(h);
            }
        }
    }
    sizes
}
