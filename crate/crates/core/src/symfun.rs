//! Symmetric functions of a fixed degree with coefficients in `Z[q]`.
//!
//! Every conversion goes through the Schur basis using the Kostka matrix and
//! its exact inverse. The matrices are built once per degree and shared.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::basis::qualifying_tableaux;
use crate::catabolism::ctype;
use crate::charge::{cocharge_on_content_word, tableau_charge, tableau_cocharge};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Composition, Partition};
use crate::qpoly::QPolynomial;
use crate::tableau::{enumerate_all_syt, enumerate_ssyt, enumerate_syt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymBasis {
    M,
    E,
    H,
    S,
}

impl std::str::FromStr for SymBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(SymBasis::M),
            "e" => Ok(SymBasis::E),
            "h" => Ok(SymBasis::H),
            "s" => Ok(SymBasis::S),
            _ => Err(Error::Parse(format!("unknown basis {s:?}; expected m, e, h or s"))),
        }
    }
}

impl fmt::Display for SymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymBasis::M => "m",
            SymBasis::E => "e",
            SymBasis::H => "h",
            SymBasis::S => "s",
        })
    }
}

/// `K_{λ,γ}` by counting semistandard tableaux.
pub fn kostka_ssyt(lambda: &Partition, gamma: &Composition) -> Result<u64> {
    check_size(lambda.size(), gamma.size())?;
    Ok(enumerate_ssyt(lambda, gamma).len() as u64)
}

/// `K_{λ,γ}` as the number of standard tableaux of shape λ whose descents
/// lie in the partial sums of γ.
pub fn kostka_descents(lambda: &Partition, gamma: &Composition) -> Result<u64> {
    check_size(lambda.size(), gamma.size())?;
    let allowed: BTreeSet<usize> = gamma.partial_sums().into_iter().collect();
    Ok(enumerate_syt(lambda).iter().filter(|t| t.descent_set().expect("SYT").is_subset(&allowed)).count() as u64)
}

/// `K_{λ,γ}`, computed both ways.
pub fn kostka(lambda: &Partition, gamma: &Composition) -> Result<u64> {
    let a = kostka_ssyt(lambda, gamma)?;
    let b = kostka_descents(lambda, gamma)?;
    assert_eq!(a, b, "Kostka methods disagree for {lambda}, {gamma}");
    Ok(a)
}

/// `K̃_{λ,μ}(q) = sum q^cocharge(T)` over SSYT of shape λ and content μ.
pub fn qkostka_modified(lambda: &Partition, mu: &Partition) -> Result<QPolynomial> {
    check_size(lambda.size(), mu.size())?;
    let weight = Composition::from(mu.clone());
    let mut degrees = Vec::new();
    for t in enumerate_ssyt(lambda, &weight) {
        degrees.push(cocharge_on_content_word(&t.reading_word(), mu)?);
    }
    Ok(QPolynomial::from_degrees(degrees))
}

fn check_size(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

/// Kostka matrix of one degree, indexed by partitions in decreasing
/// lexicographic order (a linear extension of dominance), so it is upper
/// unitriangular.
struct Tables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    kostka: Vec<Vec<i64>>,
    kostka_inv: Vec<Vec<i64>>,
}

impl Tables {
    fn build(n: usize) -> Tables {
        let mut parts = enumerate_partitions(n);
        parts.reverse();
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let len = parts.len();
        let mut kostka = vec![vec![0i64; len]; len];
        for (i, la) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate().skip(i) {
                kostka[i][j] = kostka_ssyt(la, &Composition::from(mu.clone())).expect("same size") as i64;
            }
        }
        // Back-substitution for K X = I.
        let mut kostka_inv = vec![vec![0i64; len]; len];
        for j in 0..len {
            for i in (0..=j).rev() {
                let delta = i64::from(i == j);
                let acc: i64 = (i + 1..=j).map(|k| kostka[i][k] * kostka_inv[k][j]).sum();
                kostka_inv[i][j] = delta - acc;
            }
        }
        Tables { parts, index, kostka, kostka_inv }
    }

    fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

fn tables(n: usize) -> Arc<Tables> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("cache lock").get(&n) {
        return Arc::clone(t);
    }
    let mut guard = cache.write().expect("cache lock");
    Arc::clone(guard.entry(n).or_insert_with(|| Arc::new(Tables::build(n))))
}

/// A homogeneous symmetric function of degree `n`, expanded in one basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricFunction {
    pub n: usize,
    pub basis: SymBasis,
    /// Only nonzero coefficients are stored.
    terms: BTreeMap<Partition, QPolynomial>,
}

impl SymmetricFunction {
    pub fn zero(n: usize, basis: SymBasis) -> Self {
        SymmetricFunction { n, basis, terms: BTreeMap::new() }
    }

    /// The basis element indexed by `lambda`, e.g. `s_λ`.
    pub fn basis_element(basis: SymBasis, lambda: &Partition) -> Self {
        let mut f = SymmetricFunction::zero(lambda.size(), basis);
        f.add_term(lambda, &QPolynomial::one()).expect("same size");
        f
    }

    pub fn add_term(&mut self, lambda: &Partition, c: &QPolynomial) -> Result<()> {
        check_size(lambda.size(), self.n)?;
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(lambda);
        }
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPolynomial> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes an integer for `q`.
    pub fn eval_q(&self, q: i64) -> SymmetricFunction {
        let mut out = SymmetricFunction::zero(self.n, self.basis);
        for (la, c) in &self.terms {
            out.add_term(la, &QPolynomial::new(vec![c.eval(q)])).expect("same size");
        }
        out
    }

    fn to_schur(&self) -> SymmetricFunction {
        let t = tables(self.n);
        let mut out = SymmetricFunction::zero(self.n, SymBasis::S);
        for (mu, c) in &self.terms {
            let j = t.idx(mu);
            match self.basis {
                SymBasis::S => out.add_term(mu, c).expect("same size"),
                // h_μ = sum_λ K_{λμ} s_λ
                SymBasis::H => {
                    for (i, la) in t.parts.iter().enumerate() {
                        if t.kostka[i][j] != 0 {
                            out.add_term(la, &c.scale(t.kostka[i][j])).expect("same size");
                        }
                    }
                }
                // e_μ = ω h_μ = sum_λ K_{λμ} s_{λᵗ}
                SymBasis::E => {
                    for (i, la) in t.parts.iter().enumerate() {
                        if t.kostka[i][j] != 0 {
                            out.add_term(&la.transpose(), &c.scale(t.kostka[i][j])).expect("same size");
                        }
                    }
                }
                // m_μ = sum_λ (K⁻¹)_{μλ} s_λ
                SymBasis::M => {
                    for (i, la) in t.parts.iter().enumerate() {
                        if t.kostka_inv[j][i] != 0 {
                            out.add_term(la, &c.scale(t.kostka_inv[j][i])).expect("same size");
                        }
                    }
                }
            }
        }
        out
    }

    /// Re-expands in `target`.
    pub fn to_basis(&self, target: SymBasis) -> SymmetricFunction {
        let s = self.to_schur();
        if target == SymBasis::E {
            return omega(&omega(&s).to_basis(SymBasis::H));
        }
        let t = tables(self.n);
        let mut out = SymmetricFunction::zero(self.n, target);
        for (la, c) in &s.terms {
            let i = t.idx(la);
            match target {
                SymBasis::S => out.add_term(la, c).expect("same size"),
                // s_λ = sum_μ K_{λμ} m_μ
                SymBasis::M => {
                    for (j, mu) in t.parts.iter().enumerate() {
                        if t.kostka[i][j] != 0 {
                            out.add_term(mu, &c.scale(t.kostka[i][j])).expect("same size");
                        }
                    }
                }
                // s_λ = sum_μ (K⁻¹)_{μλ} h_μ
                SymBasis::H => {
                    for (j, mu) in t.parts.iter().enumerate() {
                        if t.kostka_inv[j][i] != 0 {
                            out.add_term(mu, &c.scale(t.kostka_inv[j][i])).expect("same size");
                        }
                    }
                }
                SymBasis::E => unreachable!(),
            }
        }
        out
    }

    fn with_tag(mut self, basis: SymBasis) -> SymmetricFunction {
        self.basis = basis;
        self
    }

    /// JSON-friendly map from `"2,1,1"` to the coefficient list in `q`.
    pub fn to_coefficient_map(&self) -> BTreeMap<String, Vec<i64>> {
        self.terms
            .iter()
            .map(|(la, c)| {
                let key = la.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
                (key, c.coeffs().to_vec())
            })
            .collect()
    }
}

impl std::ops::Add for &SymmetricFunction {
    type Output = SymmetricFunction;

    fn add(self, rhs: &SymmetricFunction) -> SymmetricFunction {
        assert_eq!(self.n, rhs.n, "degree mismatch");
        let rhs = rhs.to_basis(self.basis);
        let mut out = self.clone();
        for (la, c) in &rhs.terms {
            out.add_term(la, c).expect("same size");
        }
        out
    }
}

impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (la, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {}{la}", self.basis)?;
        }
        Ok(())
    }
}

/// The involution with `ω s_λ = s_{λᵗ}` and `ω e_λ = h_λ`.
pub fn omega(f: &SymmetricFunction) -> SymmetricFunction {
    match f.basis {
        SymBasis::S => {
            let mut out = SymmetricFunction::zero(f.n, SymBasis::S);
            for (la, c) in &f.terms {
                out.add_term(&la.transpose(), c).expect("same size");
            }
            out
        }
        SymBasis::E => f.clone().with_tag(SymBasis::H),
        SymBasis::H => f.clone().with_tag(SymBasis::E),
        SymBasis::M => omega(&f.to_basis(SymBasis::S)).to_basis(SymBasis::M),
    }
}

/// Hall inner product, with Schur functions orthonormal.
pub fn hall_inner_product(f: &SymmetricFunction, g: &SymmetricFunction) -> Result<QPolynomial> {
    check_size(f.n, g.n)?;
    let (fs, gs) = (f.to_basis(SymBasis::S), g.to_basis(SymBasis::S));
    Ok(fs.terms.iter().filter_map(|(la, c)| gs.terms.get(la).map(|d| c * d)).sum())
}

/// `H̃_μ[X;q] = sum q^cocharge(T) s_shape(T)` over SYT with `ctype(T) ⊵ μ`.
pub fn modified_hl(mu: &Partition) -> SymmetricFunction {
    let mut out = SymmetricFunction::zero(mu.size(), SymBasis::S);
    for t in enumerate_all_syt(mu.size()) {
        if ctype(&t).expect("SYT").dominates(mu).expect("same size") {
            out.add_term(&t.shape(), &QPolynomial::monomial(1, tableau_cocharge(&t))).expect("same size");
        }
    }
    out
}

/// `H̃_μ[X;q] = sum_λ K̃_{λμ}(q) s_λ`.
pub fn modified_hl_via_qkostka(mu: &Partition) -> SymmetricFunction {
    let mut out = SymmetricFunction::zero(mu.size(), SymBasis::S);
    for la in enumerate_partitions(mu.size()) {
        out.add_term(&la, &qkostka_modified(&la, mu).expect("same size")).expect("same size");
    }
    out
}

/// `sum_S q^charge(S) K_{shape(S),γ}` over SYT `S` with `ctype(Sᵗ) ⊵ μᵗ`.
pub fn e_coeff_combinatorial(mu: &Partition, gamma: &Composition) -> Result<QPolynomial> {
    check_size(mu.size(), gamma.size())?;
    let mut out = QPolynomial::zero();
    for s in qualifying_tableaux(mu) {
        let k = kostka_descents(&s.shape(), gamma)? as i64;
        out += &QPolynomial::monomial(k, tableau_charge(&s));
    }
    Ok(out)
}

/// `⟨e_γ, H̃_{μᵗ}[X;q]⟩` through the Hall inner product.
pub fn e_coeff_symmetric(mu: &Partition, gamma: &Composition) -> Result<QPolynomial> {
    check_size(mu.size(), gamma.size())?;
    let e = SymmetricFunction::basis_element(SymBasis::E, &gamma.sorted());
    hall_inner_product(&e, &modified_hl(&mu.transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_compositions;
    use rand::{Rng, SeedableRng};

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn q(c: &[i64]) -> QPolynomial {
        QPolynomial::new(c.to_vec())
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&part(&[2, 2]), &comp(&[2, 1, 1])).unwrap(), 1);
        for n in 1..=5 {
            for g in enumerate_compositions(n) {
                assert_eq!(kostka(&Partition::row(n), &g).unwrap(), 1);
            }
        }
        assert!(kostka(&part(&[2]), &comp(&[1])).is_err());
    }

    #[test]
    fn kostka_methods_agree() {
        for n in 1..=6 {
            for la in enumerate_partitions(n) {
                assert_eq!(kostka(&la, &Composition::ones(n)).unwrap() as u128, la.count_syt());
                for g in enumerate_compositions(n) {
                    kostka(&la, &g).unwrap();
                }
            }
        }
    }

    #[test]
    fn qkostka_examples() {
        assert_eq!(qkostka_modified(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), q(&[0, 1, 1]));
        assert_eq!(qkostka_modified(&part(&[2, 1]), &part(&[2, 1])).unwrap(), q(&[0, 1]));
        for n in 1..=6 {
            for mu in enumerate_partitions(n) {
                assert_eq!(qkostka_modified(&Partition::row(n), &mu).unwrap(), QPolynomial::one());
                for la in enumerate_partitions(n) {
                    let k = qkostka_modified(&la, &mu).unwrap().eval(1) as u64;
                    assert_eq!(k, kostka(&la, &Composition::from(mu.clone())).unwrap());
                }
            }
        }
    }

    #[test]
    fn inverse_kostka_is_inverse() {
        for n in 1..=7 {
            let t = tables(n);
            let len = t.parts.len();
            for i in 0..len {
                for j in 0..len {
                    let prod: i64 = (0..len).map(|k| t.kostka[i][k] * t.kostka_inv[k][j]).sum();
                    assert_eq!(prod, i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn conversions_round_trip() {
        let bases = [SymBasis::M, SymBasis::E, SymBasis::H, SymBasis::S];
        for n in 1..=5 {
            for la in enumerate_partitions(n) {
                for &b in &bases {
                    let f = SymmetricFunction::basis_element(b, &la);
                    for &c in &bases {
                        assert_eq!(f.to_basis(c).to_basis(b), f, "{b}{la} via {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn conversion_spot_checks() {
        // h_2 = m_2 + m_11, e_2 = m_11, h_11 = s_2 + s_11.
        let h2 = SymmetricFunction::basis_element(SymBasis::H, &part(&[2])).to_basis(SymBasis::M);
        assert_eq!(h2.coeff(&part(&[2])), QPolynomial::one());
        assert_eq!(h2.coeff(&part(&[1, 1])), QPolynomial::one());
        let e2 = SymmetricFunction::basis_element(SymBasis::E, &part(&[2])).to_basis(SymBasis::M);
        assert_eq!(e2.terms().len(), 1);
        assert_eq!(e2.coeff(&part(&[1, 1])), QPolynomial::one());
        let h11 = SymmetricFunction::basis_element(SymBasis::H, &part(&[1, 1])).to_basis(SymBasis::S);
        assert_eq!(h11.terms().len(), 2);
        // e_21 in the h basis: h_1^3 - h_21.
        let e21 = SymmetricFunction::basis_element(SymBasis::E, &part(&[2, 1])).to_basis(SymBasis::H);
        assert_eq!(e21.coeff(&part(&[1, 1, 1])), QPolynomial::one());
        assert_eq!(e21.coeff(&part(&[2, 1])), q(&[-1]));
        assert_eq!(e21.terms().len(), 2);
    }

    #[test]
    fn omega_and_inner_product() {
        let s31 = SymmetricFunction::basis_element(SymBasis::S, &part(&[3, 1]));
        assert_eq!(omega(&s31), SymmetricFunction::basis_element(SymBasis::S, &part(&[2, 1, 1])));
        let e22 = SymmetricFunction::basis_element(SymBasis::E, &part(&[2, 2]));
        let h211 = SymmetricFunction::basis_element(SymBasis::H, &part(&[2, 1, 1]));
        assert_eq!(hall_inner_product(&e22, &h211).unwrap(), q(&[2]));
        for la in enumerate_partitions(4) {
            for mu in enumerate_partitions(4) {
                let a = SymmetricFunction::basis_element(SymBasis::S, &la);
                let b = SymmetricFunction::basis_element(SymBasis::S, &mu);
                assert_eq!(hall_inner_product(&a, &b).unwrap(), q(&[i64::from(la == mu)]));
                // m and h are dual.
                let m = SymmetricFunction::basis_element(SymBasis::M, &la);
                let h = SymmetricFunction::basis_element(SymBasis::H, &mu);
                assert_eq!(hall_inner_product(&m, &h).unwrap(), q(&[i64::from(la == mu)]));
            }
        }
        let one = SymmetricFunction::basis_element(SymBasis::S, &part(&[1]));
        assert!(hall_inner_product(&one, &s31).is_err());
    }

    fn random_element(rng: &mut rand::rngs::StdRng, n: usize) -> SymmetricFunction {
        let bases = [SymBasis::M, SymBasis::E, SymBasis::H, SymBasis::S];
        let mut f = SymmetricFunction::zero(n, bases[rng.gen_range(0..4)]);
        for la in enumerate_partitions(n) {
            let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
            f.add_term(&la, &QPolynomial::new(c)).unwrap();
        }
        f
    }

    #[test]
    fn omega_is_an_isometric_involution() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let f = random_element(&mut rng, 5);
            let g = random_element(&mut rng, 5);
            assert_eq!(omega(&omega(&f)), f);
            assert_eq!(hall_inner_product(&f, &g).unwrap(), hall_inner_product(&omega(&f), &omega(&g)).unwrap());
            assert_eq!((&f + &g).to_basis(SymBasis::S), (&f.to_basis(SymBasis::S) + &g));
        }
    }

    #[test]
    fn modified_hl_small_cases() {
        for n in 1..=5 {
            let row = Partition::row(n);
            assert_eq!(modified_hl(&row), SymmetricFunction::basis_element(SymBasis::S, &row));
        }
        let h21 = modified_hl(&part(&[2, 1]));
        assert_eq!(h21.coeff(&part(&[3])), QPolynomial::one());
        assert_eq!(h21.coeff(&part(&[2, 1])), q(&[0, 1]));
        assert_eq!(h21.terms().len(), 2);
        let ones = modified_hl(&Partition::column(3));
        assert_eq!(ones.coeff(&Partition::column(3)), q(&[0, 0, 0, 1]));
    }

    #[test]
    fn modified_hl_routes_agree_to_five() {
        for n in 1..=5 {
            for mu in enumerate_partitions(n) {
                assert_eq!(modified_hl(&mu), modified_hl_via_qkostka(&mu), "mu = {mu}");
            }
        }
    }

    #[test]
    fn modified_hl_at_one_is_h() {
        for n in 1..=6 {
            for mu in enumerate_partitions(n) {
                let at_one = modified_hl(&mu).eval_q(1).to_basis(SymBasis::H);
                assert_eq!(at_one, SymmetricFunction::basis_element(SymBasis::H, &mu), "mu = {mu}");
                // q^n(μ) is the top degree and occurs only in the coefficient of s_μ.
                let f = modified_hl(&mu);
                for (la, c) in f.terms() {
                    assert!(c.degree() <= Some(mu.n_statistic()));
                    if *la != mu {
                        assert_eq!(c.coeff(mu.n_statistic()), 0);
                    }
                }
                assert_eq!(f.coeff(&mu).coeff(mu.n_statistic()), 1);
                assert_eq!(f.coeff(&Partition::row(n)), QPolynomial::one());
            }
        }
    }

    #[test]
    fn e_coeff_examples() {
        let mu = part(&[3, 1]);
        assert_eq!(e_coeff_combinatorial(&mu, &comp(&[2, 2])).unwrap(), q(&[0, 0, 1, 1]));
        assert_eq!(e_coeff_symmetric(&mu, &comp(&[2, 2])).unwrap(), q(&[0, 0, 1, 1]));
        assert_eq!(
            e_coeff_combinatorial(&mu, &Composition::ones(4)).unwrap(),
            crate::basis::hilbert_series(&crate::basis::charge_basis(&mu))
        );
    }

    #[test]
    fn e_coeff_routes_agree_to_five() {
        for n in 1..=5 {
            for mu in enumerate_partitions(n) {
                let h = SymmetricFunction::basis_element(SymBasis::H, &mu.transpose());
                for g in enumerate_compositions(n) {
                    let comb = e_coeff_combinatorial(&mu, &g).unwrap();
                    assert_eq!(comb, e_coeff_symmetric(&mu, &g).unwrap(), "mu = {mu}, gamma = {g}");
                    let e = SymmetricFunction::basis_element(SymBasis::E, &g.sorted());
                    assert_eq!(comb.eval(1), hall_inner_product(&e, &h).unwrap().eval(0));
                    let perms = crate::basis::antisym_index_set(&mu, &g).unwrap().graded_count();
                    assert_eq!(comb, perms);
                }
            }
        }
    }
}
