//! Verification suites run by `check-theorems` and the acceptance tests.
//!
//! Every suite is exhaustive up to its size bound, except `shuffle-dominance`
//! beyond total length 8, which samples shuffles with the configured seed.
//! Jobs run on the rayon pool; results are merged in job order so reports do
//! not depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{cc_shuffle_basis, charge_basis, descent_basis, hilbert_series, qualifying_tableaux, MonomialSet};
use crate::catabolism::{
    adjacent_swap_check, blasiak_ctype, catabolize, ctype_cat, ctype_direct, ctype_of_permutation, m_catabolize,
};
use crate::chains::{adjacent_swap_chains, build_seed_filling, chains_run, modified_row_insert, Pair};
use crate::charge::{
    charge, charge_word, cocharge, cocharge_word, cocharge_word_inverse, descent_word, is_cocharge_word,
    tableau_charge, tableau_cocharge,
};
use crate::error::{Error, Result};
use crate::partition::{enumerate_compositions, enumerate_partitions, Partition};
use crate::perm::{all_permutations, parse_word, Permutation};
use crate::qpoly::QPolynomial;
use crate::quotient::certify::{certify_antisym_basis, certify_basis, CertifyOptions, QuotientRing};
use crate::symfun::{
    e_coeff_combinatorial, e_coeff_symmetric, modified_hl, modified_hl_via_qkostka, SymBasis, SymmetricFunction,
};
use crate::tableau::{enumerate_all_syt, Tableau};

/// Failure messages kept per report; the total count is always exact.
pub const MAX_REPORTED_FAILURES: usize = 20;

/// Largest total length for which every shuffle of two words is checked.
pub const EXHAUSTIVE_SHUFFLE_LEN: usize = 8;

/// Sampled shuffles per total length above [`EXHAUSTIVE_SHUFFLE_LEN`].
pub const SHUFFLE_SAMPLES: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `charge_basis(μ) = cc_shuffle_basis(μ)`.
    ThmA,
    Cardinality,
    /// Hilbert series of `C_μ` against the charge generating function.
    Hilbert,
    /// Hilbert series of `C_μ` against Gröbner standard monomial counts.
    GroebnerHilbert,
    Certify,
    ShuffleDominance,
    Swap,
    Cocharge,
    PropB,
    Frobenius,
    HlRoutes,
    CtypeOracles,
    Golden,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Golden,
        Suite::ThmA,
        Suite::Cardinality,
        Suite::Hilbert,
        Suite::GroebnerHilbert,
        Suite::Certify,
        Suite::ShuffleDominance,
        Suite::Swap,
        Suite::Cocharge,
        Suite::PropB,
        Suite::Frobenius,
        Suite::HlRoutes,
        Suite::CtypeOracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ThmA => "thm-a",
            Suite::Cardinality => "cardinality",
            Suite::Hilbert => "hilbert",
            Suite::GroebnerHilbert => "groebner-hilbert",
            Suite::Certify => "certify",
            Suite::ShuffleDominance => "shuffle-dominance",
            Suite::Swap => "swap",
            Suite::Cocharge => "cocharge",
            Suite::PropB => "prop-b",
            Suite::Frobenius => "frobenius",
            Suite::HlRoutes => "hl-routes",
            Suite::CtypeOracles => "ctype-oracles",
            Suite::Golden => "golden",
        }
    }

    /// Size bound used when none is given.
    pub fn default_n(self) -> usize {
        match self {
            Suite::ThmA | Suite::Hilbert | Suite::Swap | Suite::Cocharge | Suite::CtypeOracles => 7,
            Suite::Cardinality | Suite::ShuffleDominance => 8,
            Suite::GroebnerHilbert | Suite::Certify => 5,
            Suite::PropB => 4,
            Suite::Frobenius | Suite::HlRoutes => 6,
            Suite::Golden => 0,
        }
    }

    pub fn max_n(self, groebner_n6: bool) -> usize {
        let groebner = if groebner_n6 { 6 } else { 5 };
        match self {
            Suite::GroebnerHilbert | Suite::Certify | Suite::PropB => groebner,
            Suite::ThmA | Suite::Hilbert | Suite::Swap | Suite::CtypeOracles => 8,
            Suite::Cardinality => 9,
            Suite::ShuffleDominance => 12,
            Suite::Cocharge | Suite::Frobenius | Suite::HlRoutes => 7,
            Suite::Golden => usize::MAX,
        }
    }

    /// Parses a suite name, or `all`.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub certify: CertifyOptions,
    /// Seed for sampled checks.
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub checked: u64,
    pub failure_count: u64,
    /// The first [`MAX_REPORTED_FAILURES`] failures.
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    failure_count: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(msg);
        }
    }

    /// Records `r`'s error as a failure and returns its value otherwise.
    fn ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", context()));
                None
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failure_count += other.failure_count;
        let room = MAX_REPORTED_FAILURES - self.failures.len();
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }

    fn finish(self, suite: Suite, n: usize) -> SuiteReport {
        SuiteReport {
            suite,
            n,
            checked: self.checked,
            pass: self.failure_count == 0,
            failure_count: self.failure_count,
            failures: self.failures,
        }
    }
}

fn par_tally<T: Sync>(jobs: &[T], f: impl Fn(&T) -> Result<Tally> + Sync + Send) -> Result<Tally> {
    let parts = jobs.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(Tally::default(), Tally::merge))
}

fn partitions_upto(n: usize) -> Vec<Partition> {
    (1..=n).flat_map(enumerate_partitions).collect()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn multinomial(mu: &Partition) -> u64 {
    factorial(mu.size()) / mu.parts().iter().map(|&p| factorial(p)).product::<u64>()
}

fn words(list: &[&str]) -> BTreeSet<Vec<usize>> {
    list.iter().map(|s| parse_word(s).expect("literal word")).collect()
}

/// Runs one suite on all sizes `1..=n`.
pub fn run_suite(suite: Suite, n: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    let max = suite.max_n(opts.certify.groebner_n6);
    if n > max {
        return Err(Error::Precondition(format!("suite {suite} supports n <= {max}, got {n}")));
    }
    let tally = match suite {
        Suite::ThmA => thm_a(n)?,
        Suite::Cardinality => cardinality(n)?,
        Suite::Hilbert => hilbert(n)?,
        Suite::GroebnerHilbert => groebner_hilbert(n, &opts.certify)?,
        Suite::Certify => certify(n, &opts.certify)?,
        Suite::ShuffleDominance => shuffle_dominance(n, opts.seed)?,
        Suite::Swap => swap(n)?,
        Suite::Cocharge => cocharge_suite(n)?,
        Suite::PropB => prop_b(n, &opts.certify)?,
        Suite::Frobenius => frobenius(n)?,
        Suite::HlRoutes => hl_routes(n)?,
        Suite::CtypeOracles => ctype_oracles(n)?,
        Suite::Golden => golden(),
    };
    Ok(tally.finish(suite, n))
}

fn thm_a(n: usize) -> Result<Tally> {
    par_tally(&partitions_upto(n), |mu| {
        let mut t = Tally::default();
        let c = charge_basis(mu).to_set();
        let d = cc_shuffle_basis(mu).to_set();
        t.check(c == d, || {
            let first = c.symmetric_difference(&d).next().cloned().unwrap_or_default();
            format!(
                "{mu}: charge basis has {} monomials, shuffle basis {}; first difference {first:?}",
                c.len(),
                d.len()
            )
        });
        Ok(t)
    })
}

fn cardinality(n: usize) -> Result<Tally> {
    par_tally(&partitions_upto(n), |mu| {
        let mut t = Tally::default();
        let got = charge_basis(mu).len() as u64;
        let expect = multinomial(&mu.transpose());
        t.check(got == expect, || format!("{mu}: |C| = {got}, expected {expect}"));
        Ok(t)
    })
}

/// `Σ q^{charge(P)} f^{shape(P)}` over the qualifying tableaux of `μ`.
fn charge_generating_function(mu: &Partition) -> QPolynomial {
    qualifying_tableaux(mu).iter().map(|p| QPolynomial::monomial(p.shape().count_syt() as i64, tableau_charge(p))).sum()
}

fn hilbert(n: usize) -> Result<Tally> {
    par_tally(&partitions_upto(n), |mu| {
        let mut t = Tally::default();
        let got = hilbert_series(&charge_basis(mu));
        let expect = charge_generating_function(mu);
        t.check(got == expect, || format!("{mu}: Hilbert series {got}, charge generating function {expect}"));
        Ok(t)
    })
}

fn groebner_hilbert(n: usize, opts: &CertifyOptions) -> Result<Tally> {
    opts.check_size(n)?;
    let mut t = par_tally(&partitions_upto(n), |mu| {
        let mut t = Tally::default();
        let ideal = mu.transpose();
        let ring = QuotientRing::cached(&ideal, opts)?;
        let series = hilbert_series(&charge_basis(mu));
        let graded: Vec<usize> = series.coeffs().iter().map(|&c| c as usize).collect();
        t.check(graded == ring.graded_dimension(), || {
            format!(
                "{mu}: Hilbert series {series}, standard monomials of R_{ideal} by degree {:?}",
                ring.graded_dimension()
            )
        });
        let expect = multinomial(&ideal);
        t.check(ring.dimension() as u64 == expect, || {
            format!("R_{ideal}: dimension {}, expected {expect}", ring.dimension())
        });
        Ok(t)
    })?;
    if n >= 4 {
        let mu = Partition::new(vec![3, 1])?;
        let ring = QuotientRing::cached(&mu.transpose(), opts)?;
        let graded = ring.graded_dimension();
        t.check(graded == [1, 3, 5, 3], || format!("R_(2,1,1): graded dimension {graded:?}, expected [1, 3, 5, 3]"));
    }
    Ok(t)
}

fn certify(n: usize, opts: &CertifyOptions) -> Result<Tally> {
    opts.check_size(n)?;
    par_tally(&partitions_upto(n), |mu| {
        let mut t = Tally::default();
        let report = certify_basis(&charge_basis(mu), mu, opts)?;
        t.check(report.pass, || {
            format!(
                "{mu}: rank {} of {} candidates in a quotient of dimension {}",
                report.rank, report.candidates, report.dimension
            )
        });
        Ok(t)
    })
}

/// Interleaves `x` and `y`, taking from `x` at the positions in `first` (1-based, sorted).
fn interleave(x: &[usize], y: &[usize], first: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let total = x.len() + y.len();
    let (mut xi, mut yi) = (0, 0);
    let mut z = Vec::with_capacity(total);
    let mut second = Vec::with_capacity(y.len());
    for pos in 1..=total {
        if first.binary_search(&pos).is_ok() {
            z.push(x[xi]);
            xi += 1;
        } else {
            z.push(y[yi]);
            yi += 1;
            second.push(pos);
        }
    }
    (z, second)
}

fn check_shuffle(t: &mut Tally, u: &Permutation, v: &Permutation, first: &[usize]) {
    let (x, y) = (cocharge_word(u), cocharge_word(v));
    let (z, second) = interleave(&x, &y, first);
    let label = || format!("shuffle of cc({u}) and cc({v}) at {first:?}");
    let floor = ctype_of_permutation(u).partwise_sum(&ctype_of_permutation(v));
    let Some(w) = t.ok(cocharge_word_inverse(&z), label) else { return };
    let ct = ctype_of_permutation(&w);
    let Some(up) = t.ok(ct.dominates(&floor), label) else { return };
    t.check(up, || format!("{}: ctype {ct} does not dominate {floor}", label()));
    let Some(seed) = t.ok(build_seed_filling(&z, &[first.to_vec(), second]), label) else { return };
    let Some(out) = t.ok(chains_run(&z, &seed), label) else { return };
    let monotone = out.shape_trace.windows(2).all(|s| s[1].dominates(&s[0]).unwrap_or(false));
    let ok = seed.shape() == floor && out.ctype == ct && out.filling.shape() == ct && monotone;
    t.check(ok, || format!("{}: chains gave {} from seed {}, expected {ct}", label(), out.ctype, seed.shape()));
}

fn shuffle_dominance(n: usize, seed: u64) -> Result<Tally> {
    let mut jobs = Vec::new();
    for total in 2..=n.min(EXHAUSTIVE_SHUFFLE_LEN) {
        for a in 1..total {
            let vs = all_permutations(total - a);
            for u in all_permutations(a) {
                for v in &vs {
                    jobs.push((u.clone(), v.clone(), total));
                }
            }
        }
    }
    let mut t = par_tally(&jobs, |(u, v, total)| {
        let mut t = Tally::default();
        let a = u.len();
        for mask in 0u32..(1 << total) {
            if mask.count_ones() as usize == a {
                let first: Vec<usize> = (0..*total).filter(|&p| mask >> p & 1 == 1).map(|p| p + 1).collect();
                check_shuffle(&mut t, u, v, &first);
            }
        }
        Ok(t)
    })?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut samples = Vec::new();
    for total in EXHAUSTIVE_SHUFFLE_LEN + 1..=n {
        for _ in 0..SHUFFLE_SAMPLES {
            let a = index::sample(&mut rng, total - 1, 1).index(0) + 1;
            let mut u: Vec<usize> = (1..=a).collect();
            let mut v: Vec<usize> = (1..=total - a).collect();
            u.shuffle(&mut rng);
            v.shuffle(&mut rng);
            let mut first: Vec<usize> = index::sample(&mut rng, total, a).into_iter().map(|p| p + 1).collect();
            first.sort_unstable();
            samples.push((Permutation::new(u)?, Permutation::new(v)?, first));
        }
    }
    t = t.merge(par_tally(&samples, |(u, v, first)| {
        let mut t = Tally::default();
        check_shuffle(&mut t, u, v, first);
        Ok(t)
    })?);
    Ok(t)
}

fn swap(n: usize) -> Result<Tally> {
    let perms: Vec<Permutation> = (2..=n).flat_map(all_permutations).collect();
    par_tally(&perms, |w| {
        let mut t = Tally::default();
        for i in 1..w.len() {
            if w.at(i) + 1 >= w.at(i + 1) {
                continue;
            }
            let label = || format!("{w} at {i}");
            let Some((swapped, up)) = t.ok(adjacent_swap_check(w, i), label) else { continue };
            t.check(up, || format!("{}: ctype({swapped}) does not dominate ctype({w})", label()));
            if let Some(out) = t.ok(adjacent_swap_chains(w, i), label) {
                let expect = ctype_of_permutation(&swapped);
                t.check(out.ctype == expect, || format!("{}: chains gave {}, expected {expect}", label(), out.ctype));
            }
        }
        Ok(t)
    })
}

/// All words of length `m` over `0..m`.
fn all_words(m: usize) -> Vec<Vec<usize>> {
    let total = m.pow(m as u32);
    (0..total)
        .map(|mut code| {
            let mut w = vec![0; m];
            for slot in w.iter_mut().rev() {
                *slot = code % m;
                code /= m;
            }
            w
        })
        .collect()
}

fn insert_at(z: &[usize], k: usize, x: usize) -> Vec<usize> {
    let mut out = z.to_vec();
    out.insert(k - 1, x);
    out
}

/// Largest size for the insertion cases, which run over every position.
const INSERTION_CASES_MAX_N: usize = 5;

fn cocharge_suite(n: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for m in 1..=n {
        let perms = all_permutations(m);
        let from_perms: BTreeSet<Vec<usize>> = perms.iter().map(cocharge_word).collect();
        let predicate: BTreeSet<Vec<usize>> =
            all_words(m).into_par_iter().filter(|z| is_cocharge_word(z)).collect::<Vec<_>>().into_iter().collect();
        t.check(from_perms == predicate, || {
            format!("n = {m}: {} cocharge words, {} words satisfy the predicate", from_perms.len(), predicate.len())
        });

        let total = m * (m - 1) / 2;
        t = t.merge(par_tally(&perms, |w| {
            let mut t = Tally::default();
            t.check(charge(w) + cocharge(w) == total, || format!("{w}: charge + cocharge != {total}"));
            let p = w.insertion_tableau();
            t.check(charge(w) == tableau_charge(&p), || format!("{w}: charge differs from charge of P = {p}"));
            let g = descent_word(&w.inverse().reverse());
            t.check(charge_word(w) == g, || {
                format!("{w}: cw = {:?}, descent word of rev(w^-1) = {g:?}", charge_word(w))
            });
            Ok(t)
        })?);
        let d: BTreeSet<Vec<usize>> = descent_basis(m).to_set();
        let cw: BTreeSet<Vec<usize>> = perms.iter().map(charge_word).collect();
        t.check(d == cw, || format!("n = {m}: charge words differ from descent words"));
        for s in enumerate_all_syt(m) {
            t.check(tableau_charge(&s) == tableau_cocharge(&s.transpose()), || {
                format!("{s}: charge(T) != cocharge(T^t)")
            });
        }

        if m <= INSERTION_CASES_MAX_N {
            t = t.merge(par_tally(&perms, |w| {
                let mut t = Tally::default();
                let z = cocharge_word(w);
                let values: BTreeSet<usize> = z.iter().copied().collect();
                for &x in &values {
                    for k in 1..=m + 1 {
                        let ext = insert_at(&z, k, x);
                        t.check(is_cocharge_word(&ext), || format!("cc({w}) with {x} inserted at {k}: {ext:?}"));
                    }
                }
                let max = *z.iter().max().expect("nonempty");
                let rightmost = z.iter().rposition(|&c| c == max).expect("max present") + 1;
                for k in 1..rightmost {
                    let ext = insert_at(&z, k, max + 1);
                    t.check(is_cocharge_word(&ext), || format!("cc({w}) with {} inserted at {k}: {ext:?}", max + 1));
                }
                Ok(t)
            })?);
        }
    }
    Ok(t)
}

fn prop_b(n: usize, opts: &CertifyOptions) -> Result<Tally> {
    opts.check_size(n)?;
    let jobs: Vec<_> = (1..=n)
        .flat_map(|m| {
            let gammas = enumerate_compositions(m);
            enumerate_partitions(m)
                .into_iter()
                .flat_map(move |mu| gammas.clone().into_iter().map(move |g| (mu.clone(), g)))
        })
        .collect();
    let mut t = par_tally(&jobs, |(mu, gamma)| {
        let mut t = Tally::default();
        let r = certify_antisym_basis(mu, gamma, opts)?;
        t.check(r.pass, || {
            format!(
                "({mu}, {gamma}): rank {} of {}, graded {:?}, expected {:?}, ambient {:?}",
                r.rank, r.candidates, r.graded_ranks, r.expected_graded, r.ambient_graded
            )
        });
        Ok(t)
    })?;
    if n >= 4 {
        let r = certify_antisym_basis(&Partition::new(vec![3, 1])?, &"2,2".parse()?, opts)?;
        let expect = ["x2*x4 - x2*x3 - x1*x4 + x1*x3", "x2*x4^2 - x2*x3^2 - x1*x4^2 + x1*x3^2"];
        let mut got = r.polynomials.clone();
        got.sort();
        t.check(got == expect, || format!("((3,1), (2,2)): polynomials {got:?}"));
        t.check(r.graded_ranks == [0, 0, 1, 1], || format!("((3,1), (2,2)): graded ranks {:?}", r.graded_ranks));
    }
    Ok(t)
}

fn frobenius(n: usize) -> Result<Tally> {
    let jobs: Vec<_> = (1..=n)
        .flat_map(|m| {
            let gammas = enumerate_compositions(m);
            enumerate_partitions(m)
                .into_iter()
                .flat_map(move |mu| gammas.clone().into_iter().map(move |g| (mu.clone(), g)))
        })
        .collect();
    par_tally(&jobs, |(mu, gamma)| {
        let mut t = Tally::default();
        let comb = e_coeff_combinatorial(mu, gamma)?;
        let sym = e_coeff_symmetric(mu, gamma)?;
        t.check(comb == sym, || format!("({mu}, {gamma}): combinatorial {comb}, symmetric {sym}"));
        if mu.size() <= 4 {
            let graded = crate::basis::antisym_index_set(mu, gamma).map(|s| s.graded_count());
            let graded = graded.unwrap_or_else(|_| QPolynomial::zero());
            t.check(graded == comb, || {
                format!("({mu}, {gamma}): antisymmetrized index set counts {graded}, expected {comb}")
            });
        }
        Ok(t)
    })
}

fn hl_routes(n: usize) -> Result<Tally> {
    par_tally(&partitions_upto(n), |mu| {
        let mut t = Tally::default();
        let a = modified_hl(mu);
        let b = modified_hl_via_qkostka(mu);
        t.check(a == b, || format!("{mu}: catabolizability route {a}, cocharge route {b}"));
        let h = SymmetricFunction::basis_element(SymBasis::H, mu).to_basis(SymBasis::S);
        t.check(a.eval_q(1) == h, || format!("{mu}: specialization at q = 1 is not h_{mu}"));
        Ok(t)
    })
}

fn ctype_oracles(n: usize) -> Result<Tally> {
    let syts: Vec<Tableau> = (1..=n).flat_map(enumerate_all_syt).collect();
    let mut t = par_tally(&syts, |s| {
        let mut t = Tally::default();
        let direct = ctype_direct(s)?;
        let cat = ctype_cat(s)?;
        let blasiak = blasiak_ctype(&cocharge_word(&Permutation::new(s.reading_word())?))?.shape;
        t.check(direct == cat && cat == blasiak, || {
            format!("{s}: direct {direct}, m-catabolism {cat}, Blasiak {blasiak}")
        });
        Ok(t)
    })?;
    let perms: Vec<Permutation> = (1..=n).flat_map(all_permutations).collect();
    t = t.merge(par_tally(&perms, |w| {
        let mut t = Tally::default();
        let z = cocharge_word(w);
        let out = blasiak_ctype(&z)?;
        let ok = (0..w.len()).all(|i| out.passes[i] + z[i] == out.rows[i]);
        t.check(ok, || format!("{w}: pass count plus cocharge label differs from the row"));
        let p = ctype_cat(&w.insertion_tableau())?;
        t.check(out.shape == p, || format!("{w}: Blasiak {} but ctype(P) = {p}", out.shape));
        Ok(t)
    })?);
    Ok(t)
}

fn golden() -> Tally {
    let mut t = Tally::default();
    let perm = |s: &str| -> Permutation { s.parse().expect("literal permutation") };
    let tab = |rows: &[&[usize]]| Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).expect("literal tableau");
    let part = |v: &[usize]| Partition::new(v.to_vec()).expect("literal partition");

    let w = perm("3516247");
    t.check(cocharge_word(&w) == parse_word("1202012").unwrap(), || "cc(3516247) != 1202012".into());
    t.check(cocharge(&w) == 8, || format!("cocharge(3516247) = {}", cocharge(&w)));
    let cw = charge_word(&perm("7426153"));
    t.check(cw == parse_word("2102021").unwrap(), || format!("cw(7426153) = {cw:?}"));

    let s = tab(&[&[1, 3, 4], &[2, 5], &[6]]);
    let k = catabolize(&s);
    t.check(k == perm("134625").insertion_tableau(), || format!("K(T) = {k}"));
    t.check(k == tab(&[&[1, 2, 4, 5], &[3, 6]]), || format!("K(T) = {k}"));
    t.check((tableau_cocharge(&s), tableau_cocharge(&k)) == (8, 5), || "cocharge drop from 8 to 5".into());

    let big = tab(&[&[1, 2, 3, 7], &[4, 5], &[6, 8]]);
    match m_catabolize(&big, 3) {
        Ok(c) => t.check(c == tab(&[&[4, 5], &[6, 8], &[7]]), || format!("3-catabolism gave {c}")),
        Err(e) => t.fail(format!("3-catabolism: {e}")),
    }
    match ctype_cat(&big) {
        Ok(c) => t.check(c == part(&[3, 2, 1, 1, 1]), || format!("ctype = {c}")),
        Err(e) => t.fail(format!("ctype: {e}")),
    }

    let z = cocharge_word(&perm("634125"));
    t.check(z == parse_word("211001").unwrap(), || format!("cc(634125) = {z:?}"));
    match blasiak_ctype(&z) {
        Ok(out) => {
            t.check(out.shape == part(&[2, 2, 2]), || format!("Blasiak shape {}", out.shape));
            t.check(out.filling == tab(&[&[5, 4], &[3, 2], &[1, 6]]).clone(), || format!("T_w = {}", out.filling));
        }
        Err(e) => t.fail(format!("Blasiak on 211001: {e}")),
    }

    t.check(descent_basis(3).to_set() == words(&["012", "011", "101", "001", "010", "000"]), || "D_3".into());
    let c31 = words(&["0012", "0102", "0120", "0011", "0101", "1001", "1010", "0110", "0001", "0010", "0100", "0000"]);
    t.check(cc_shuffle_basis(&part(&[3, 1])).to_set() == c31, || "D_(3,1)".into());
    let charge31: MonomialSet = charge_basis(&part(&[3, 1]));
    t.check(charge31.to_set() == c31, || "C_(3,1)".into());

    golden_insertions(&mut t);
    golden_chains(&mut t);
    t
}

fn golden_insertions(t: &mut Tally) {
    let filling = |rows: Vec<Vec<Pair>>| Tableau::from_rows_unchecked(rows);
    let f = filling(vec![vec![(1, 1), (2, 5), (2, 7), (3, 8), (5, 2)], vec![(2, 4), (3, 2), (3, 3), (4, 1)]]);
    match modified_row_insert(&f, 2, (2, 6)) {
        Ok((g, popped)) => {
            t.check(popped == Some((3, 3)), || format!("first insertion popped {popped:?}"));
            t.check(g.rows()[1] == [(2, 4), (2, 6), (3, 2), (4, 1)], || {
                format!("first insertion row {:?}", g.rows()[1])
            });
        }
        Err(e) => t.fail(format!("first insertion: {e}")),
    }
    let f = filling(vec![vec![(1, 1), (2, 5), (2, 7)], vec![(2, 4), (3, 2)]]);
    match modified_row_insert(&f, 2, (2, 6)) {
        Ok((g, popped)) => {
            t.check(popped.is_none(), || format!("second insertion popped {popped:?}"));
            t.check(g.rows()[1] == [(2, 4), (2, 6), (3, 2)], || format!("second insertion row {:?}", g.rows()[1]));
        }
        Err(e) => t.fail(format!("second insertion: {e}")),
    }
}

fn golden_chains(t: &mut Tally) {
    let z = parse_word("1200112010").expect("literal word");
    let blocks = [vec![1, 2, 3, 4, 6, 7], vec![5, 8, 9, 10]];
    let seed = match build_seed_filling(&z, &blocks) {
        Ok(s) => s,
        Err(e) => return t.fail(format!("chains seed: {e}")),
    };
    let expect_seed: Vec<Vec<Pair>> = vec![
        vec![(1, 1), (1, 3), (1, 7), (1, 8)],
        vec![(1, 2), (1, 6), (1, 10)],
        vec![(2, 5)],
        vec![(2, 9)],
        vec![(3, 4)],
    ];
    t.check(seed.rows() == expect_seed.as_slice(), || format!("chains seed {:?}", seed.rows()));
    let out = match chains_run(&z, &seed) {
        Ok(o) => o,
        Err(e) => return t.fail(format!("chains run: {e}")),
    };
    let expect: Vec<Vec<Pair>> =
        vec![vec![(1, 1), (1, 3), (1, 7), (1, 8)], vec![(1, 2), (1, 5), (1, 10)], vec![(1, 4), (1, 9), (2, 6)]];
    t.check(out.ctype == Partition::new(vec![4, 3, 3]).unwrap(), || format!("chains ctype {}", out.ctype));
    t.check(out.filling.rows() == expect.as_slice(), || format!("chains filling {:?}", out.filling.rows()));
    let fourth = &out.steps[3];
    t.check(
        fourth.moved_from == Some(5)
            && fourth.filling.rows()
                == [
                    vec![(1, 1), (1, 3), (1, 7), (1, 8)],
                    vec![(1, 2), (1, 6), (1, 10)],
                    vec![(1, 4), (2, 5)],
                    vec![(2, 9)],
                ],
        || format!("chains step 4 {:?}", fourth.filling.rows()),
    );
    let fifth = &out.steps[4];
    t.check(
        fifth.popped == [(1, 6)]
            && fifth.filling.rows()
                == [
                    vec![(1, 1), (1, 3), (1, 7), (1, 8)],
                    vec![(1, 2), (1, 5), (1, 10)],
                    vec![(1, 4), (2, 6)],
                    vec![(2, 9)],
                ],
        || format!("chains step 5 {:?}", fifth.filling.rows()),
    );
    let monotone = out.shape_trace.windows(2).all(|s| s[1].dominates(&s[0]).unwrap_or(false));
    t.check(monotone, || "chains shape trace is not dominance monotone".into());
}
