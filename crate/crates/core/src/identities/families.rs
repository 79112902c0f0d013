//! Generating series of the seven constraint families.

use crate::enumerate::Family;
use crate::products::{sum_of_products, MonomialParam, PochFactor, Summand};
use crate::series::{rat, QSeries};

fn q(e: usize) -> MonomialParam {
    MonomialParam::q_pow(e as i64)
}

fn neg_q(e: usize) -> MonomialParam {
    MonomialParam::neg_q_pow(e as i64)
}

/// The `n`-th summand of the family's generating series: a power of `q`
/// times the Pochhammer factors generating each part slot.
pub fn family_summand(family: Family, n: usize) -> Summand {
    let inf = |a| PochFactor::infinite(a, 1);
    let fin = |a, len| PochFactor::finite(a, 1, len);
    let head = |e: usize| Summand::new(rat(1), e as i64);
    match family {
        Family::F => head(n).with(inf(q(n + 1))).with(fin(q(n), n)),
        Family::G => head(n).with(inf(q(n + 1))).with(fin(neg_q(n), n)),
        Family::A => head(n).with(inf(q(n + 1)).pow(3)).with(fin(q(n), n)),
        Family::A2 => head(n)
            .with(inf(neg_q(n + 1)).pow(2))
            .with(inf(q(n + 1)))
            .with(fin(q(n), n)),
        Family::B => head(n)
            .with(inf(neg_q(n + 1)).pow(2))
            .with(inf(q(n + 1)))
            .with(fin(q(n + 1), n)),
        Family::C => head(n)
            .with(inf(q(n + 1)).pow(2))
            .with(inf(q(n)))
            .with(fin(q(n), n)),
        Family::D => head(2 * n).with(inf(q(n + 1)).pow(3)).with(fin(q(n), n)),
    }
}

/// `sum_{n >= 1} family_summand(family, n)` truncated at `order`.
pub fn gen_family(family: Family, order: usize) -> QSeries {
    sum_of_products(1, order, |n| family_summand(family, n))
        .expect("family summands have nonnegative exponents and no vanishing denominators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Rational;

    fn c(s: &QSeries, n: usize) -> Rational {
        s.coeff(n).unwrap().clone()
    }

    #[test]
    fn worked_values() {
        assert_eq!(c(&gen_family(Family::F, 10), 4), rat(0));
        assert_eq!(c(&gen_family(Family::A, 10), 3), rat(-2));
        assert_eq!(c(&gen_family(Family::A2, 10), 3), rat(2));
        assert_eq!(c(&gen_family(Family::B, 10), 3), rat(1));
        assert_eq!(c(&gen_family(Family::C, 10), 3), rat(-1));
        assert_eq!(c(&gen_family(Family::D, 10), 4), rat(-2));
        assert_eq!(c(&gen_family(Family::D, 10), 1), rat(0));
    }

    #[test]
    fn order_zero_is_zero() {
        for fam in Family::ALL {
            assert!(gen_family(fam, 0).is_zero());
        }
    }

    #[test]
    fn truncation_stable() {
        for fam in Family::ALL {
            let a = gen_family(fam, 30);
            let b = gen_family(fam, 60);
            assert!(a.equal_up_to(&b, 30).unwrap().is_equal(), "{fam}");
        }
    }
}
