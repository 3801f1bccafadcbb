//! The antisymmetrizer of a Young subgroup acting on variable indices.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::mvpoly::MVPolynomial;
use crate::error::{Error, Result};
use crate::partition::Composition;
use crate::perm::next_permutation;

/// Elements of `S_γ` as 0-based index maps with their signs, in a fixed order.
pub fn young_subgroup(gamma: &Composition) -> Vec<(Vec<usize>, i64)> {
    let mut out = vec![(Vec::new(), 1i64)];
    let mut start = 0;
    for &len in gamma.parts() {
        let mut block: Vec<usize> = (start..start + len).collect();
        let mut perms = Vec::new();
        loop {
            let inversions = (0..len).map(|i| (i + 1..len).filter(|&j| block[j] < block[i]).count()).sum::<usize>();
            perms.push((block.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            if !next_permutation(&mut block) {
                break;
            }
        }
        out = out
            .iter()
            .flat_map(|(prefix, s)| {
                perms.iter().map(move |(p, t)| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p);
                    (v, s * t)
                })
            })
            .collect();
        start += len;
    }
    out
}

/// `N_γ p = sum over σ in S_γ of sgn(σ) σ·p`, with `σ` sending `x_i` to `x_σ(i)`.
pub fn apply_antisymmetrizer(p: &MVPolynomial, gamma: &Composition) -> Result<MVPolynomial> {
    if gamma.size() != p.n() {
        return Err(Error::SizeMismatch { left: p.n(), right: gamma.size() });
    }
    let terms = young_subgroup(gamma).into_iter().flat_map(|(sigma, sign)| {
        let sign = BigRational::from_integer(BigInt::from(sign));
        p.act(&sigma).terms().iter().map(|(m, c)| (m.clone(), c * &sign)).collect::<Vec<_>>()
    });
    Ok(MVPolynomial::from_terms(p.n(), p.order(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_compositions;
    use crate::quotient::mvpoly::MonomialOrder;

    const G: MonomialOrder = MonomialOrder::Grevlex;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn group_sizes_and_signs() {
        let g = young_subgroup(&comp(&[2, 3]));
        assert_eq!(g.len(), 12);
        assert_eq!(g.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert_eq!(young_subgroup(&comp(&[1, 1, 1])), vec![(vec![0, 1, 2], 1)]);
    }

    #[test]
    fn examples() {
        let x2 = MVPolynomial::variable(2, G, 2);
        let expect = x2.sub(&MVPolynomial::variable(2, G, 1));
        assert_eq!(apply_antisymmetrizer(&x2, &comp(&[2])).unwrap(), expect);
        let x1x2 = MVPolynomial::monomial(&[1, 1], G);
        assert!(apply_antisymmetrizer(&x1x2, &comp(&[2])).unwrap().is_zero());
        let p = MVPolynomial::monomial(&[0, 1, 0, 2], G);
        let expect = MVPolynomial::from_terms(
            4,
            G,
            [(vec![0, 1, 0, 2], r(1)), (vec![1, 0, 0, 2], r(-1)), (vec![0, 1, 2, 0], r(-1)), (vec![1, 0, 2, 0], r(1))],
        );
        assert_eq!(apply_antisymmetrizer(&p, &comp(&[2, 2])).unwrap(), expect);
        assert!(apply_antisymmetrizer(&p, &comp(&[2])).is_err());
    }

    #[test]
    fn sign_twisted_invariance() {
        let p = MVPolynomial::from_terms(
            4,
            G,
            [(vec![0, 1, 2, 0], r(3)), (vec![2, 0, 0, 1], r(-1)), (vec![0, 0, 1, 1], r(2))],
        );
        for gamma in enumerate_compositions(4) {
            let np = apply_antisymmetrizer(&p, &gamma).unwrap();
            for (sigma, sign) in young_subgroup(&gamma) {
                let lhs = apply_antisymmetrizer(&p.act(&sigma), &gamma).unwrap();
                assert_eq!(lhs, np.scale(&r(sign)));
            }
            // Applying twice multiplies by the group order.
            let order = young_subgroup(&gamma).len() as i64;
            assert_eq!(apply_antisymmetrizer(&np, &gamma).unwrap(), np.scale(&r(order)));
        }
    }
}
