//! Exhaustive sphere census and its closed-form counterparts.
//!
//! Counts of reducible and pseudo-Anosov elements per word-metric sphere are
//! obtained by walking every reduced word and classifying it. The closed forms
//! they are checked against:
//!
//! * reducible elements of length `2r+1`: `4·3^r`; of length `2r+2`: `8·3^r`
//! * `h_n = 2·3ⁿ − 1`
//! * `r_n = 10·3^r − 6` for `n = 2r+1`, `r_n = 2·3^{r+1} − 6` for `n = 2r`
//! * `p_n = h_n − r_n − 1`

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::{axis_power_form, classify_letters, Axis, Kind};
use crate::error::CensusError;
use crate::ratio::format_significant;
use crate::word::{enumerate_sphere, prefixes, Letter, SphereWalker, Word};

/// Largest radius enumerated unless overridden.
pub const DEFAULT_CAP: usize = 16;
/// Largest radius accepted by [`count_conjugates_bruteforce`].
pub const BRUTE_FORCE_CAP: usize = 10;
/// Largest `r` accepted by [`verify_partition_phi`] by default.
pub const DEFAULT_PHI_CAP: usize = 4;
/// Significant digits of `ratio_decimal`.
pub const RATIO_DIGITS: usize = 6;

/// How an enumeration is split and scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub cap: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Length of the prefixes the sphere is split on. `None` picks
    /// `min(n, 3)`.
    pub prefix_depth: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            cap: DEFAULT_CAP,
            threads: None,
            prefix_depth: None,
        }
    }
}

impl EnumOptions {
    pub fn sequential() -> Self {
        EnumOptions {
            threads: Some(1),
            prefix_depth: Some(0),
            ..Default::default()
        }
    }

    pub fn check_cap(&self, n: usize) -> Result<(), CensusError> {
        if n > self.cap {
            Err(CensusError::CapExceeded {
                requested: n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> Result<R, CensusError> {
        match self.threads {
            None => Ok(job()),
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map(|pool| pool.install(job))
                .map_err(|e| CensusError::ThreadPool(e.to_string())),
        }
    }
}

/// Folds `visit` over every word of `sphere(n)`, fanning out over prefixes.
///
/// Partial accumulators are merged in prefix order, so any associative
/// `merge` gives the same result regardless of the schedule.
pub fn fold_sphere<A, I, V, M>(
    n: usize,
    opts: &EnumOptions,
    init: I,
    visit: V,
    merge: M,
) -> Result<A, CensusError>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[Letter]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    opts.check_cap(n)?;
    let depth = opts.prefix_depth.unwrap_or(3).min(n);
    let parts = prefixes(depth);
    opts.run(|| {
        let partials: Vec<A> = parts
            .par_iter()
            .map(|p| {
                let mut acc = init();
                let mut walker = SphereWalker::new(n, p);
                while let Some(w) = walker.advance() {
                    visit(&mut acc, w);
                }
                acc
            })
            .collect();
        partials.into_iter().fold(init(), &merge)
    })
}

/// Raw per-sphere tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SphereCounts {
    pub total: u64,
    pub identity: u64,
    /// Reducible elements per axis, indexed `A, B, AB`.
    pub by_axis: [u64; 3],
    pub pseudo_anosov: u64,
}

impl SphereCounts {
    pub fn reducible(&self) -> u64 {
        self.by_axis.iter().sum()
    }

    pub fn axis(&self, axis: Axis) -> u64 {
        self.by_axis[axis.index()]
    }

    pub fn record(&mut self, kind: Kind) {
        self.total += 1;
        match kind {
            Kind::Identity => self.identity += 1,
            Kind::Reducible(a) => self.by_axis[a.index()] += 1,
            Kind::PseudoAnosov => self.pseudo_anosov += 1,
        }
    }

    pub fn merge(mut self, other: SphereCounts) -> SphereCounts {
        self.total += other.total;
        self.identity += other.identity;
        for i in 0..3 {
            self.by_axis[i] += other.by_axis[i];
        }
        self.pseudo_anosov += other.pseudo_anosov;
        self
    }
}

/// Classifies every element of `sphere(n)`.
pub fn sphere_counts(n: usize, opts: &EnumOptions) -> Result<SphereCounts, CensusError> {
    fold_sphere(
        n,
        opts,
        SphereCounts::default,
        |acc, w| acc.record(classify_letters(w)),
        SphereCounts::merge,
    )
}

/// One radius of the census: sphere counts plus cumulative ball counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub total: BigUint,
    pub reducible: BigUint,
    pub pseudo_anosov: BigUint,
    pub h_n: BigUint,
    pub r_n: BigUint,
    pub p_n: BigUint,
    /// `p_n / h_n`
    pub ratio: BigRational,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str =
        "n,total,reducible,pseudo_anosov,h_n,r_n,p_n,ratio_exact,ratio_decimal";

    fn new(
        n: usize,
        total: BigUint,
        reducible: BigUint,
        pseudo_anosov: BigUint,
        h_n: BigUint,
        r_n: BigUint,
        p_n: BigUint,
    ) -> Self {
        let ratio = BigRational::new(BigInt::from(p_n.clone()), BigInt::from(h_n.clone()));
        CensusRow {
            n,
            total,
            reducible,
            pseudo_anosov,
            h_n,
            r_n,
            p_n,
            ratio,
        }
    }

    /// `p_n/h_n` as counted, not reduced to lowest terms.
    pub fn ratio_exact(&self) -> String {
        format!("{}/{}", self.p_n, self.h_n)
    }

    pub fn ratio_decimal(&self) -> String {
        format_significant(&self.ratio, RATIO_DIGITS)
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.total,
            self.reducible,
            self.pseudo_anosov,
            self.h_n,
            self.r_n,
            self.p_n,
            self.ratio_exact(),
            self.ratio_decimal()
        )
    }

    /// Compares every field against `other` and names the first difference.
    pub fn check_against(&self, expected: &CensusRow) -> Result<(), CensusError> {
        let fields: [(&'static str, &BigUint, &BigUint); 6] = [
            ("total", &self.total, &expected.total),
            ("reducible", &self.reducible, &expected.reducible),
            ("pseudo_anosov", &self.pseudo_anosov, &expected.pseudo_anosov),
            ("h_n", &self.h_n, &expected.h_n),
            ("r_n", &self.r_n, &expected.r_n),
            ("p_n", &self.p_n, &expected.p_n),
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

/// Arbitrary-precision integers as bare JSON numbers.
pub(crate) struct JsonInt<'a, T: ToString>(pub &'a T);

impl<T: ToString> Serialize for JsonInt<'_, T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let number: serde_json::Number = self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

impl Serialize for CensusRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("CensusRow", 9)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("total", &JsonInt(&self.total))?;
        s.serialize_field("reducible", &JsonInt(&self.reducible))?;
        s.serialize_field("pseudo_anosov", &JsonInt(&self.pseudo_anosov))?;
        s.serialize_field("h_n", &JsonInt(&self.h_n))?;
        s.serialize_field("r_n", &JsonInt(&self.r_n))?;
        s.serialize_field("p_n", &JsonInt(&self.p_n))?;
        s.serialize_field("ratio_exact", &self.ratio_exact())?;
        s.serialize_field("ratio_decimal", &self.ratio_decimal())?;
        s.end()
    }
}

fn pow3(e: usize) -> BigUint {
    BigUint::from(3u32).pow(e as u32)
}

/// Reducible elements of length exactly `n`.
pub fn closed_form_reducible(n: usize) -> BigUint {
    match n {
        0 => BigUint::zero(),
        _ if n % 2 == 1 => pow3((n - 1) / 2) * 4u32,
        _ => pow3((n - 2) / 2) * 8u32,
    }
}

/// Size of the sphere of radius `n`.
pub fn closed_form_total(n: usize) -> BigUint {
    match n {
        0 => BigUint::from(1u32),
        _ => pow3(n - 1) * 4u32,
    }
}

/// `(h_n, r_n, p_n)`: all, reducible and pseudo-Anosov elements of length
/// at most `n`.
pub fn closed_form_cumulative(n: usize) -> (BigUint, BigUint, BigUint) {
    let h = pow3(n) * 2u32 - 1u32;
    let r = if n == 0 {
        BigUint::zero()
    } else if n % 2 == 1 {
        pow3((n - 1) / 2) * 10u32 - 6u32
    } else {
        pow3(n / 2 + 1) * 2u32 - 6u32
    };
    let p = &h - &r - 1u32;
    (h, r, p)
}

pub fn closed_form_row(n: usize) -> CensusRow {
    let total = closed_form_total(n);
    let reducible = closed_form_reducible(n);
    let pseudo_anosov = if n == 0 {
        BigUint::zero()
    } else {
        &total - &reducible
    };
    let (h, r, p) = closed_form_cumulative(n);
    CensusRow::new(n, total, reducible, pseudo_anosov, h, r, p)
}

/// Census rows `0..=max_n` accumulated from enumerated sphere counts.
pub fn rows_from_counts(counts: &[SphereCounts]) -> Vec<CensusRow> {
    let mut h = BigUint::zero();
    let mut r = BigUint::zero();
    let mut p = BigUint::zero();
    counts
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let total = BigUint::from(c.total);
            let reducible = BigUint::from(c.reducible());
            let pa = BigUint::from(c.pseudo_anosov);
            h += &total;
            r += &reducible;
            p += &pa;
            CensusRow::new(n, total, reducible, pa, h.clone(), r.clone(), p.clone())
        })
        .collect()
}

/// Enumerated rows for every radius up to `max_n`.
pub fn enumerated_rows(max_n: usize, opts: &EnumOptions) -> Result<Vec<CensusRow>, CensusError> {
    opts.check_cap(max_n)?;
    let counts = (0..=max_n)
        .map(|n| sphere_counts(n, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(rows_from_counts(&counts))
}

/// The census row of radius `n` by full enumeration of the ball.
pub fn count_sphere_by_class(n: usize, opts: &EnumOptions) -> Result<CensusRow, CensusError> {
    Ok(enumerated_rows(n, opts)?.pop().expect("at least one row"))
}

/// `|C(γ, n)|`: elements of length `n` conjugate to a nonzero power of the
/// axis word.
pub fn count_conjugacy_set(axis: Axis, n: usize, opts: &EnumOptions) -> Result<u64, CensusError> {
    fold_sphere(
        n,
        opts,
        || 0u64,
        |acc, w| {
            if classify_letters(w) == Kind::Reducible(axis) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )
}

/// `|C(γ, n)|` from the lemma's formulas.
pub fn closed_form_conjugacy_set(axis: Axis, n: usize) -> BigUint {
    match (axis, n) {
        (_, 0) => BigUint::zero(),
        (Axis::A | Axis::B, _) => pow3((n - 1) / 2) * 2u32,
        (Axis::AB, _) if n % 2 == 1 => BigUint::zero(),
        (Axis::AB, _) => pow3((n - 2) / 2) * 4u32,
    }
}

/// Independent count of `C(γ, n)`: reduce `u γ^k u⁻¹` for all `|u| ≤ n`,
/// `0 < |k| ≤ n`, deduplicate by word text and keep length `n`.
pub fn count_conjugates_bruteforce(axis: Axis, n: usize) -> Result<u64, CensusError> {
    if n > BRUTE_FORCE_CAP {
        return Err(CensusError::CapExceeded {
            requested: n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let gamma = axis.word();
    let powers: Vec<Word> = (1..=n as i64)
        .flat_map(|k| [gamma.pow(k), gamma.pow(-k)])
        .collect();
    let mut seen: HashSet<String> = HashSet::new();
    for len in 0..=n {
        for u in enumerate_sphere(len, None) {
            let u_inv = u.invert();
            for g in &powers {
                let x = u.multiply(g).multiply(&u_inv);
                if x.len() == n {
                    seen.insert(x.to_string());
                }
            }
        }
    }
    Ok(seen.len() as u64)
}

/// How census rows are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    ClosedForm,
    /// Enumerate, then require agreement with the closed forms row by row.
    Verify(EnumOptions),
}

pub fn ratio_table(max_n: usize, mode: TableMode) -> Result<Vec<CensusRow>, CensusError> {
    match mode {
        TableMode::ClosedForm => Ok((0..=max_n).map(closed_form_row).collect()),
        TableMode::Verify(opts) => {
            let rows = enumerated_rows(max_n, &opts)?;
            for row in &rows {
                row.check_against(&closed_form_row(row.n))?;
            }
            Ok(rows)
        }
    }
}

/// Result of checking that the images of the map φ partition `C(a, 2r+3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub r: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub images: Vec<(Word, [Word; 3])>,
    pub failures: Vec<String>,
}

impl PartitionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Elements of `C(a, n)`, found by enumeration and classification.
fn conjugacy_set_words(axis: Axis, n: usize) -> Vec<Word> {
    enumerate_sphere(n, None)
        .filter(|w| classify_letters(w.letters()) == Kind::Reducible(axis))
        .collect()
}

fn concat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// The six-case map φ from `C(a, 2r+1)` to triples in `C(a, 2r+3)`, as raw
/// letter sequences (not reduced).
fn phi(x: &Word) -> [Vec<Letter>; 3] {
    use Letter::*;
    let l = x.letters();
    let conj = |c: Letter| concat(&[&[c], l, &[c.inverse()]]);
    if l.iter().all(|&c| c == A) {
        return [concat(&[l, &[A, A]]), conj(B), conj(BInv)];
    }
    if l.iter().all(|&c| c == AInv) {
        return [concat(&[l, &[AInv, AInv]]), conj(B), conj(BInv)];
    }
    let first = l[0];
    let inner = &l[1..l.len() - 1];
    let doubled = concat(&[&[first, first], inner, &[first.inverse(), first.inverse()]]);
    let other = match first {
        A | AInv => B,
        B | BInv => A,
    };
    [doubled, conj(other), conj(other.inverse())]
}

/// Materializes `C(a, 2r+1)`, applies φ, and checks that the images are
/// disjoint triples whose union is `C(a, 2r+3)`.
pub fn verify_partition_phi(r: usize, cap: usize) -> Result<PartitionReport, CensusError> {
    if r > cap {
        return Err(CensusError::CapExceeded { requested: r, cap });
    }
    let domain = conjugacy_set_words(Axis::A, 2 * r + 1);
    let codomain: BTreeSet<Word> = conjugacy_set_words(Axis::A, 2 * r + 3).into_iter().collect();
    let mut failures = Vec::new();
    let mut covered: BTreeSet<Word> = BTreeSet::new();
    let mut images = Vec::with_capacity(domain.len());

    for x in &domain {
        let raw = phi(x);
        let image: [Word; 3] = raw.clone().map(Word::reduce);
        for (raw, y) in raw.iter().zip(&image) {
            if raw.len() != y.len() {
                failures.push(format!("φ({x}) produced the unreduced word {}", Word::reduce(raw.clone())));
            }
            if axis_power_form(y).map(|p| p.axis) != Some(Axis::A) || y.len() != 2 * r + 3 {
                failures.push(format!("φ({x}) contains {y}, which is not in C(a, {})", 2 * r + 3));
            }
        }
        let distinct: BTreeSet<&Word> = image.iter().collect();
        if distinct.len() != 3 {
            failures.push(format!("φ({x}) has only {} distinct elements", distinct.len()));
        }
        for y in distinct {
            if !covered.insert(y.clone()) {
                failures.push(format!("{y} lies in two images, one of them φ({x})"));
            }
        }
        images.push((x.clone(), image));
    }
    for missing in codomain.difference(&covered) {
        failures.push(format!("{missing} is not covered by any image"));
    }

    Ok(PartitionReport {
        r,
        domain_size: domain.len(),
        codomain_size: codomain.len(),
        images,
        failures,
    })
}
