//! Every intermediate equality on the way from a generating series to its
//! closed form, one stage per step, so a transcription error shows up at the
//! step where it happens rather than only end to end.
//!
//! Stages compare two expressions up to the smaller of their orders. Steps
//! that pass to `q^2` compare `s(q^2)` at the same order; steps that pass to
//! the `8n + 2` scale build the inner series at `inner_order(order)` and
//! spread it.

use std::time::Instant;

use crate::enumerate::Family;
use crate::products::{
    phi32, product, quad_double_sum, sum_of_products, theta1d, theta2d, MonomialParam, PochFactor, ProductError,
    QuadForm, SignRule, Summand, Theta1DSpec, Theta2DSpec, Weight,
};
use crate::report::VerificationReport;
use crate::series::{rat, ratio, QSeries, Rational};

use super::bailey::{bp_b, bp_d, lemma_sides, BaileyError};
use super::families::gen_family;
use super::theorems::{inner_order, psi, rhs_theorem, TheoremId};

type Expr = fn(usize) -> Result<QSeries, ProductError>;

/// One displayed equality: `lhs(order) = rhs(order)`.
#[derive(Clone, Copy)]
pub struct Stage {
    pub id: &'static str,
    pub description: &'static str,
    lhs: Expr,
    rhs: Expr,
}

impl Stage {
    pub fn sides(&self, order: usize) -> Result<(QSeries, QSeries), ProductError> {
        Ok(((self.lhs)(order)?, (self.rhs)(order)?))
    }

    pub fn verify(&self, order: usize) -> VerificationReport {
        let started = Instant::now();
        match self.sides(order) {
            Ok((l, r)) => {
                let m = l.order().min(r.order());
                VerificationReport::compare(format!("chain:{}", self.id), &l, &r, m, started)
            }
            Err(e) => VerificationReport::failed(format!("chain:{}", self.id), order, e, started),
        }
    }
}

impl std::fmt::Debug for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Stage({}: {})", self.id, self.description)
    }
}

fn q(e: i64) -> MonomialParam {
    MonomialParam::q_pow(e)
}

fn nq(e: i64) -> MonomialParam {
    MonomialParam::neg_q_pow(e)
}

fn fin(a: MonomialParam, base: usize, n: i64) -> PochFactor {
    PochFactor::finite(a, base, n as usize)
}

fn inf(a: MonomialParam, base: usize) -> PochFactor {
    PochFactor::infinite(a, base)
}

fn term(e: i64) -> Summand {
    Summand::new(rat(1), e)
}

fn prod(f: &[PochFactor], o: usize) -> Result<QSeries, ProductError> {
    product(f, o)
}

fn sop(start: usize, o: usize, f: impl Fn(i64) -> Summand) -> Result<QSeries, ProductError> {
    sum_of_products(start, o, |n| f(n as i64))
}

fn th1(spec: Theta1DSpec, o: usize) -> Result<QSeries, ProductError> {
    theta1d(&spec, o)
}

fn th2(spec: Theta2DSpec, o: usize) -> Result<QSeries, ProductError> {
    theta2d(&spec, o)
}

/// `sum_{n >= 0, r >= r0} q^{form(n, r)}`.
fn qds(form: [i64; 6], r0: i64, o: usize) -> Result<QSeries, ProductError> {
    let [nn, nr, rr, nl, rl, c] = form;
    quad_double_sum(&QuadForm::new(nn, nr, rr, nl, rl, c), 0, r0, 1, o)
}

/// `sum_{n >= 0, r >= r0} q^{form(n, r)} prod_i (1 - q^{a_i n + b_i r + c_i})`,
/// expanded into signed quadratic double sums.
fn qds_times(form: [i64; 6], factors: &[(i64, i64, i64)], r0: i64, o: usize) -> Result<QSeries, ProductError> {
    let mut total = QSeries::zero(o);
    for mask in 0u32..(1 << factors.len()) {
        let mut f = form;
        let mut sign = 1;
        for (i, &(a, b, c)) in factors.iter().enumerate() {
            if mask & (1 << i) != 0 {
                f[3] += a;
                f[4] += b;
                f[5] += c;
                sign = -sign;
            }
        }
        let [nn, nr, rr, nl, rl, c] = f;
        total.add_assign_ref(&quad_double_sum(&QuadForm::new(nn, nr, rr, nl, rl, c), 0, r0, sign, o)?);
    }
    Ok(total)
}

fn half(s: &QSeries) -> QSeries {
    s.scale(&ratio(1, 2))
}

fn times(k: i64, s: &QSeries) -> QSeries {
    s.scale(&rat(k))
}

fn euler(o: usize) -> Result<QSeries, ProductError> {
    prod(&[inf(q(1), 1)], o)
}

fn euler_cubed(o: usize) -> Result<QSeries, ProductError> {
    prod(&[inf(q(1), 1).pow(3)], o)
}

/// `sum_{n >= 0} (-1)^n (2n+1) q^{n(n+1)/2}`.
fn jacobi_theta(o: usize) -> Result<QSeries, ProductError> {
    th1(
        Theta1DSpec::new(1, 1, 0, 2)
            .signed(SignRule::Alternating)
            .weighted(Weight::ODD),
        o,
    )
}

fn gen(f: Family) -> impl Fn(usize) -> Result<QSeries, ProductError> {
    move |o| Ok(gen_family(f, o))
}

// ---- unilateral pentagonal sums -------------------------------------------

fn fine_common(o: usize, sign: SignRule) -> Result<QSeries, ProductError> {
    th1(Theta1DSpec::new(3, 1, 0, 2).signed(sign), o)
}

fn pentagonal_split_tail(o: usize) -> Result<QSeries, ProductError> {
    let plus = th1(Theta1DSpec::new(3, 1, 0, 2).starting_at(1).signed(SignRule::Alternating), o)?;
    let minus = th1(Theta1DSpec::new(3, -1, 0, 2).starting_at(1).signed(SignRule::Alternating), o)?;
    Ok(&(&QSeries::one(o) + &plus) + &minus)
}

fn fa1(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| term(n).with(fin(q(n), 1, n)).with(fin(q(1), 1, n).inv()))?;
    Ok(&euler(o)? * &s)
}

fn fa2(o: usize) -> Result<QSeries, ProductError> {
    let e = euler(o)?;
    let s = sop(0, o, |n| term(n).with(fin(q(n), 1, n)).with(fin(q(1), 1, n).inv()))?;
    Ok(&(&e * &s) - &e)
}

fn fa3(o: usize) -> Result<QSeries, ProductError> {
    let e = euler(o)?;
    Ok(&(&(&e * &e.invert()?) * &fine_common(o, SignRule::Alternating)?) - &e)
}

fn fa4(o: usize) -> Result<QSeries, ProductError> {
    Ok(&fine_common(o, SignRule::Alternating)? - &pentagonal_split_tail(o)?)
}

fn fb1(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| term(n).with(fin(nq(n), 1, n)).with(fin(q(1), 1, n).inv()))?;
    Ok(&euler(o)? * &s)
}

fn fb2(o: usize) -> Result<QSeries, ProductError> {
    let e = euler(o)?;
    let s = sop(0, o, |n| term(n).with(fin(nq(n), 1, n)).with(fin(q(1), 1, n).inv()))?;
    Ok(&(&e * &s) - &e)
}

/// Fine's transformation at `(-q^{-1}, q)` gives the unsigned sum.
fn fb3(o: usize) -> Result<QSeries, ProductError> {
    let e = euler(o)?;
    Ok(&(&(&e * &e.invert()?) * &fine_common(o, SignRule::Plus)?) - &e)
}

fn fb4(o: usize) -> Result<QSeries, ProductError> {
    Ok(&fine_common(o, SignRule::Plus)? - &pentagonal_split_tail(o)?)
}

fn fb5(o: usize) -> Result<QSeries, ProductError> {
    let odd = th1(Theta1DSpec::new(12, 14, 4, 2).scaled(2), o)?;
    let tail = th1(Theta1DSpec::new(3, -1, 0, 2).starting_at(1).signed(SignRule::Alternating), o)?;
    Ok(&odd - &tail)
}

// ---- A' -------------------------------------------------------------------

fn ja1(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| {
        term(n)
            .with(fin(q(1), 1, 2 * n - 1))
            .with(fin(q(1), 1, n).pow(-3))
            .with(fin(q(1), 1, n - 1).inv())
    })?;
    Ok(&euler_cubed(o)? * &s)
}

fn q2_cubed(o: usize) -> Result<QSeries, ProductError> {
    prod(&[inf(q(2), 2).pow(3)], o)
}

fn jf(o: usize, numer: fn(i64) -> Vec<PochFactor>, denom_extra: bool) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| {
        let mut t = term(2 * n).with(fin(q(2), 2, n).pow(-3));
        if denom_extra {
            t = t.with(fin(q(2), 2, n - 1).inv());
        }
        for f in numer(n) {
            t = t.with(f);
        }
        t
    })?;
    Ok(&q2_cubed(o)? * &s)
}

fn jf1(o: usize) -> Result<QSeries, ProductError> {
    jf(o, |n| vec![fin(q(2), 2, 2 * n - 1)], true)
}

fn jf2(o: usize) -> Result<QSeries, ProductError> {
    jf(o, |n| vec![fin(q(2), 4, n), fin(q(4), 4, n - 1)], true)
}

fn jf3(o: usize) -> Result<QSeries, ProductError> {
    jf(o, |n| vec![fin(nq(2), 2, n - 1), fin(q(1), 2, n), fin(nq(1), 2, n)], false)
}

fn jg0(o: usize) -> Result<QSeries, ProductError> {
    phi32([MonomialParam::new(-1, 0), q(1), nq(1)], [q(2), q(2)], q(2), 2, o)
}

fn jf4(o: usize) -> Result<QSeries, ProductError> {
    let inner = half(&(&jg0(o)? - &QSeries::one(o)));
    Ok(&q2_cubed(o)? * &inner)
}

fn jg_phi(o: usize) -> Result<QSeries, ProductError> {
    phi32([q(1), q(1), q(2)], [nq(3), nq(2)], q(1), 2, o)
}

fn jg1(o: usize) -> Result<QSeries, ProductError> {
    let pre = prod(
        &[inf(q(1), 2), inf(nq(3), 2), inf(nq(2), 2), inf(q(2), 2).pow(-3)],
        o,
    )?;
    Ok(&pre * &jg_phi(o)?)
}

fn jg2(o: usize) -> Result<QSeries, ProductError> {
    let pre = prod(&[fin(nq(1), 1, 1).inv(), inf(q(2), 2).pow(-3)], o)?;
    Ok(&pre * &jg_phi(o)?)
}

fn jg3(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(0, o, |n| {
        term(n)
            .with(fin(q(1), 2, n).pow(2))
            .with(fin(nq(1), 1, 2 * n + 1).inv())
    })?;
    Ok(&prod(&[inf(q(2), 2).pow(-3)], o)? * &s)
}

fn alt_pronic(o: usize) -> Result<QSeries, ProductError> {
    th1(Theta1DSpec::new(1, 1, 0, 1).signed(SignRule::Alternating), o)
}

fn jg4(o: usize) -> Result<QSeries, ProductError> {
    Ok(&prod(&[inf(q(2), 2).pow(-3)], o)? * &alt_pronic(o)?)
}

fn gen_a_q2(o: usize) -> Result<QSeries, ProductError> {
    Ok(gen_family(Family::A, o).dilate(2))
}

fn jh0(o: usize) -> Result<QSeries, ProductError> {
    Ok(&q2_cubed(o)? + &times(2, &gen_a_q2(o)?))
}

fn jh1(o: usize) -> Result<QSeries, ProductError> {
    let odd = th1(
        Theta1DSpec::new(1, 1, 0, 1)
            .signed(SignRule::Alternating)
            .weighted(Weight::ODD),
        o,
    )?;
    Ok(half(&(&alt_pronic(o)? - &odd)))
}

fn jh2(o: usize) -> Result<QSeries, ProductError> {
    Ok(-th1(
        Theta1DSpec::new(1, 1, 0, 1)
            .signed(SignRule::Alternating)
            .weighted(Weight::LINEAR),
        o,
    )?)
}

fn jh3(o: usize) -> Result<QSeries, ProductError> {
    Ok(rhs_theorem(TheoremId::A, o).dilate(2))
}

// ---- A'' ------------------------------------------------------------------

fn ga1(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| {
        term(n)
            .with(fin(q(1), 1, 2 * n - 1))
            .with(fin(nq(1), 1, n).pow(-2))
            .with(fin(q(1), 1, n).inv())
            .with(fin(q(1), 1, n - 1).inv())
    })?;
    Ok(&prod(&[inf(nq(1), 1).pow(2), inf(q(1), 1)], o)? * &s)
}

fn ga2(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| {
        term(n)
            .with(fin(q(1), 2, n))
            .with(fin(nq(1), 1, n - 1))
            .with(fin(q(2), 2, n).inv())
            .with(fin(nq(1), 1, n).inv())
    })?;
    Ok(&psi(o) * &s)
}

fn ga2_q2(o: usize) -> Result<QSeries, ProductError> {
    Ok(ga2(o)?.dilate(2))
}

/// `psi(q^2)` as the quotient `(q^4;q^4)_inf / (q^2;q^4)_inf`.
fn psi_q2(o: usize) -> Result<QSeries, ProductError> {
    prod(&[inf(q(4), 4), inf(q(2), 4).inv()], o)
}

fn gp0(o: usize) -> Result<QSeries, ProductError> {
    phi32([nq(1), MonomialParam::new(-1, 0), q(1)], [nq(2), nq(2)], q(2), 2, o)
}

fn ga3(o: usize) -> Result<QSeries, ProductError> {
    Ok(&psi_q2(o)? * &half(&(&gp0(o)? - &QSeries::one(o))))
}

fn gh_lhs(o: usize) -> Result<QSeries, ProductError> {
    Ok(&psi_q2(o)? + &times(2, &gen_family(Family::A2, o).dilate(2)))
}

fn ga4(o: usize) -> Result<QSeries, ProductError> {
    Ok(&psi_q2(o)? * &gp0(o)?)
}

fn gp_phi(o: usize) -> Result<QSeries, ProductError> {
    phi32([nq(1), q(2), nq(1)], [nq(2), nq(3)], q(1), 2, o)
}

fn gp1(o: usize) -> Result<QSeries, ProductError> {
    let pre = prod(
        &[inf(q(1), 2), inf(nq(3), 2), inf(nq(2), 2).inv(), inf(q(2), 2).inv()],
        o,
    )?;
    Ok(&pre * &gp_phi(o)?)
}

fn gp2(o: usize) -> Result<QSeries, ProductError> {
    let pre = prod(
        &[
            inf(q(2), 4),
            fin(nq(1), 1, 1).inv(),
            inf(nq(2), 2).inv(),
            inf(q(2), 2).inv(),
        ],
        o,
    )?;
    Ok(&pre * &gp_phi(o)?)
}

fn gp3(o: usize) -> Result<QSeries, ProductError> {
    let pre = &prod(&[fin(nq(1), 1, 1).inv()], o)? * &psi_q2(o)?.invert()?;
    Ok(&pre * &phi32([q(2), nq(1), nq(1)], [nq(2), nq(3)], q(1), 2, o)?)
}

fn gp4(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(0, o, |n| {
        term(n)
            .with(fin(nq(1), 2, n).pow(2))
            .with(fin(nq(2), 2, n).inv())
            .with(fin(nq(1), 2, n + 1).inv())
    })?;
    Ok(&psi_q2(o)?.invert()? * &s)
}

fn gp5(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(0, o, |n| {
        term(n)
            .with(fin(nq(1), 2, n).pow(2))
            .with(fin(nq(1), 1, 2 * n + 1).inv())
    })?;
    Ok(&psi_q2(o)?.invert()? * &s)
}

fn odd_pronic(o: usize) -> Result<QSeries, ProductError> {
    th1(Theta1DSpec::new(1, 1, 0, 1).weighted(Weight::ODD), o)
}

fn gp6(o: usize) -> Result<QSeries, ProductError> {
    Ok(&psi_q2(o)?.invert()? * &odd_pronic(o)?)
}

fn gen_a2_q2(o: usize) -> Result<QSeries, ProductError> {
    Ok(gen_family(Family::A2, o).dilate(2))
}

fn gh1(o: usize) -> Result<QSeries, ProductError> {
    Ok(&half(&odd_pronic(o)?) - &half(&th1(Theta1DSpec::new(1, 1, 0, 1), o)?))
}

fn gh2(o: usize) -> Result<QSeries, ProductError> {
    th1(Theta1DSpec::new(1, 1, 0, 1).weighted(Weight::LINEAR), o)
}

fn gh3(o: usize) -> Result<QSeries, ProductError> {
    Ok(rhs_theorem(TheoremId::A2, o).dilate(2))
}

// ---- B' -------------------------------------------------------------------

fn e1(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| {
        term(n)
            .with(inf(q(2 * n + 2), 2))
            .with(fin(q(n + 1), 1, n))
            .with(fin(nq(1), 1, n).inv())
    })?;
    Ok(&prod(&[inf(nq(1), 1)], o)? * &s)
}

fn e2(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| {
        term(n)
            .with(inf(q(2 * n + 2), 2))
            .with(fin(q(1), 1, 2 * n))
            .with(fin(q(2), 2, n).inv())
    })?;
    Ok(&prod(&[inf(nq(1), 1)], o)? * &s)
}

fn e3(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| term(n).with(inf(q(2 * n + 2), 2)).with(fin(q(1), 2, n)))?;
    Ok(&prod(&[inf(q(1), 2).inv()], o)? * &s)
}

fn e_ratio_sum(start: usize, o: usize) -> Result<QSeries, ProductError> {
    sop(start, o, |n| term(n).with(inf(q(2 * n + 2), 2)).with(inf(q(2 * n + 1), 2).inv()))
}

fn gauss_quotient(o: usize) -> Result<QSeries, ProductError> {
    prod(&[inf(q(2), 2), inf(q(1), 2).inv()], o)
}

fn e4(o: usize) -> Result<QSeries, ProductError> {
    e_ratio_sum(1, o)
}

fn e5(o: usize) -> Result<QSeries, ProductError> {
    Ok(&e_ratio_sum(0, o)? - &gauss_quotient(o)?)
}

fn e6(o: usize) -> Result<QSeries, ProductError> {
    let g = gauss_quotient(o)?;
    let s = sop(0, o, |n| term(n).with(fin(q(1), 2, n)).with(fin(q(2), 2, n).inv()))?;
    Ok(&(&g * &s) - &g)
}

fn e7(o: usize) -> Result<QSeries, ProductError> {
    let g = gauss_quotient(o)?;
    Ok(&(&g * &g) - &g)
}

// ---- C' -------------------------------------------------------------------

fn lemma_error(e: BaileyError) -> ProductError {
    match e {
        BaileyError::Product(p) => p,
        other => ProductError::InvalidSpec(other.to_string()),
    }
}

fn one_minus_q(o: usize) -> QSeries {
    let mut s = QSeries::one(o);
    s.mul_one_minus(1, 1);
    s
}

fn c_lemma_lhs(o: usize) -> Result<QSeries, ProductError> {
    let (l, _) = lemma_sides(&bp_d(), nq(1), o).map_err(lemma_error)?;
    Ok(&one_minus_q(o) * &l)
}

fn c_lemma_rhs(o: usize) -> Result<QSeries, ProductError> {
    let (_, r) = lemma_sides(&bp_d(), nq(1), o).map_err(lemma_error)?;
    Ok(&one_minus_q(o) * &r)
}

fn bpd1_lhs(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(0, o, |n| {
        term(n)
            .with(fin(nq(1), 1, n))
            .with(fin(q(3), 2, n))
            .with(fin(q(2), 1, n).pow(-2))
            .with(fin(q(1), 1, n).inv())
    })?;
    let pre = prod(&[fin(q(1), 1, 1), inf(q(1), 1), inf(q(2), 1).pow(2)], o)?;
    Ok(&pre * &s)
}

const C_FORM: [i64; 6] = [2, 2, 1, 3, 2, 0];

fn bpd1_rhs(o: usize) -> Result<QSeries, ProductError> {
    qds_times(C_FORM, &[(0, 1, 1), (2, 1, 2)], 0, o)
}

fn l1(o: usize) -> Result<QSeries, ProductError> {
    sop(0, o, |n| {
        term(n)
            .with(fin(nq(1), 1, n))
            .with(fin(q(1), 2, n + 1))
            .with(inf(q(n + 1), 1))
            .with(inf(q(n + 2), 1).pow(2))
    })
}

fn l2_sum(o: usize) -> Result<QSeries, ProductError> {
    sop(0, o, |n| {
        term(n)
            .with(fin(q(1), 2, n + 1))
            .with(inf(q(n + 1), 1))
            .with(inf(q(n + 2), 1).pow(2))
            .with(inf(nq(n + 1), 1).inv())
    })
}

fn l2(o: usize) -> Result<QSeries, ProductError> {
    Ok(&prod(&[inf(nq(1), 1)], o)? * &l2_sum(o)?)
}

fn l3(o: usize) -> Result<QSeries, ProductError> {
    Ok(&prod(&[inf(q(1), 2).inv()], o)? * &l2_sum(o)?)
}

fn l4(o: usize) -> Result<QSeries, ProductError> {
    sop(0, o, |n| {
        term(n)
            .with(inf(q(n + 1), 1))
            .with(inf(q(n + 2), 1).pow(2))
            .with(inf(nq(n + 1), 1).inv())
            .with(inf(q(2 * n + 3), 2).inv())
    })
}

fn l5(o: usize) -> Result<QSeries, ProductError> {
    sop(0, o, |n| {
        term(n)
            .with(inf(q(n + 1), 1).pow(2))
            .with(inf(q(n + 2), 1).pow(2))
            .with(inf(q(2 * n + 2), 2).inv())
            .with(inf(q(2 * n + 3), 2).inv())
    })
}

fn l6(o: usize) -> Result<QSeries, ProductError> {
    sop(0, o, |n| {
        term(n)
            .with(inf(q(n + 1), 1).pow(2))
            .with(inf(q(n + 2), 1).pow(2))
            .with(inf(q(2 * n + 2), 1).inv())
    })
}

fn l7(o: usize) -> Result<QSeries, ProductError> {
    sop(0, o, |n| {
        term(n)
            .with(inf(q(n + 1), 1))
            .with(fin(q(n + 1), 1, n + 1))
            .with(inf(q(n + 2), 1).pow(2))
    })
}

fn l7_shifted(o: usize) -> Result<QSeries, ProductError> {
    Ok(l7(o)?.shift(1))
}

fn r0(o: usize) -> Result<QSeries, ProductError> {
    Ok(bpd1_rhs(o)?.shift(1))
}

fn r1(o: usize) -> Result<QSeries, ProductError> {
    let plus = &qds([2, 2, 1, 3, 2, 1], 0, o)? + &qds([2, 2, 1, 5, 4, 4], 0, o)?;
    let minus = &qds([2, 2, 1, 5, 3, 3], 0, o)? + &qds([2, 2, 1, 3, 3, 2], 0, o)?;
    Ok(&plus - &minus)
}

fn r2(o: usize) -> Result<QSeries, ProductError> {
    let plus = &th1(Theta1DSpec::new(2, 3, 1, 1), o)? + &times(2, &qds([2, 2, 1, 5, 4, 4], 0, o)?);
    let minus = &qds([2, 2, 1, 5, 3, 3], 0, o)? + &qds([2, 2, 1, 3, 3, 2], 0, o)?;
    Ok(&plus - &minus)
}

fn eighth(spec: Theta2DSpec) -> Theta2DSpec {
    spec.reduced(2, 8)
}

fn r3(o: usize) -> Result<QSeries, ProductError> {
    let a = th1(Theta1DSpec::new(16, 24, 8, 8), o)?;
    let b = th2(eighth(Theta2DSpec::new(2, 3, 4, 2)), o)?;
    let c = th2(eighth(Theta2DSpec::new(2, 3, 4, 0)), o)?;
    let d = th2(eighth(Theta2DSpec::new(2, 1, 4, 4)), o)?;
    Ok(&(&(&a + &times(2, &b)) - &c) - &d)
}

fn r3_spread(o: usize) -> Result<QSeries, ProductError> {
    Ok(r3(inner_order(o))?.spread(8, 2))
}

fn r4(o: usize) -> Result<QSeries, ProductError> {
    let a = th1(Theta1DSpec::new(16, 24, 10, 1), o)?;
    let b = th2(Theta2DSpec::new(2, 3, 4, 2), o)?;
    let c = th2(Theta2DSpec::new(2, 3, 4, 0), o)?;
    let d = th2(Theta2DSpec::new(2, 1, 4, 4), o)?;
    Ok(&(&(&a + &times(2, &b)) - &c) - &d)
}

fn c_double(o: usize) -> Result<QSeries, ProductError> {
    th2(
        Theta2DSpec::new(2, 3, 2, 0)
            .signed(SignRule::AlternatingShifted)
            .scaled(2),
        o,
    )
}

fn r5(o: usize) -> Result<QSeries, ProductError> {
    let a = th1(Theta1DSpec::new(16, 24, 10, 1), o)?;
    let c = th2(Theta2DSpec::new(2, 3, 4, 0), o)?;
    let d = th2(Theta2DSpec::new(2, 1, 4, 4), o)?;
    Ok(&(&(&a + &c_double(o)?) + &c) - &d)
}

/// The regrouped form with `sum q^{(4n+1)^2+1}` taken over `n >= 0`, as
/// stated on the way to the closed form.
fn r6(o: usize) -> Result<QSeries, ProductError> {
    let plus3 = th1(Theta1DSpec::new(16, 24, 10, 1), o)?;
    let minus1 = th1(Theta1DSpec::new(16, 8, 2, 1), o)?;
    let diag = th1(Theta1DSpec::new(8, 8, 2, 1).starting_at(1), o)?;
    Ok(&(&(&c_double(o)? + &plus3) - &minus1) + &diag)
}

/// The regrouping with `sum q^{(4n+1)^2+1}` over `n >= 1`, which is what
/// the preceding step actually produces.
pub fn c_regrouped_from_one(o: usize) -> Result<QSeries, ProductError> {
    let plus3 = th1(Theta1DSpec::new(16, 24, 10, 1), o)?;
    let minus1 = th1(Theta1DSpec::new(16, 8, 2, 1).starting_at(1), o)?;
    let diag = th1(Theta1DSpec::new(8, 8, 2, 1).starting_at(1), o)?;
    Ok(&(&(&c_double(o)? + &plus3) - &minus1) + &diag)
}

fn r7(o: usize) -> Result<QSeries, ProductError> {
    Ok(rhs_theorem(TheoremId::C, o))
}

// ---- D' -------------------------------------------------------------------

fn d_lemma_lhs(o: usize) -> Result<QSeries, ProductError> {
    Ok(lemma_sides(&bp_b(), MonomialParam::new(-1, 0), o).map_err(lemma_error)?.0)
}

fn d_lemma_rhs(o: usize) -> Result<QSeries, ProductError> {
    Ok(lemma_sides(&bp_b(), MonomialParam::new(-1, 0), o).map_err(lemma_error)?.1)
}

fn t0(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(0, o, |n| {
        term(2 * n)
            .with(fin(MonomialParam::new(-1, 0), 1, n))
            .with(fin(q(1), 2, n))
            .with(fin(q(1), 1, n).pow(-3))
    })?;
    Ok(&euler_cubed(o)? * &s)
}

/// `sum_{n >= 0} (1 - q^{2n+1}) q^{2n^2+n}`.
fn d_single(o: usize) -> Result<QSeries, ProductError> {
    Ok(&th1(Theta1DSpec::new(2, 1, 0, 1), o)? - &th1(Theta1DSpec::new(2, 3, 1, 1), o)?)
}

/// `sum_{r >= 1} inner(r) / (1 + q^r)`, where `inner(r)` starts at `q^{r^2}`.
fn over_one_plus(o: usize, inner: fn(i64, usize) -> QSeries) -> Result<QSeries, ProductError> {
    let mut total = QSeries::zero(o);
    let mut r = 1i64;
    while (r * r) as usize <= o {
        let mut s = inner(r, o);
        s.div_one_minus(-1, r as usize)?;
        total.add_assign_ref(&s);
        r += 1;
    }
    Ok(total)
}

/// Terms `sum_n sum_k c_k q^{e_k(n)}` for a fixed `r`, with exponents
/// `2n^2 + 2nr + n + extra` and `extra` drawn from `offsets`.
fn inner_terms(r: i64, o: usize, offsets: &[(i64, i64, i64)]) -> QSeries {
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    let mut n = 0i64;
    loop {
        let base = 2 * n * n + 2 * n * r + n;
        if base > o as i64 {
            break;
        }
        for &(n_coef, extra, c) in offsets {
            let e = base + n_coef * n + extra;
            if e >= 0 && e <= o as i64 {
                terms.push((e as usize, rat(c)));
            }
        }
        n += 1;
    }
    QSeries::from_terms(terms, o)
}

fn t1(o: usize) -> Result<QSeries, ProductError> {
    // (1 - q^{r+2n+1}) q^{2n^2+2nr+n+r} (q^{r^2+r} - q^{r^2-r})
    let tail = over_one_plus(o, |r, o| {
        inner_terms(
            r,
            o,
            &[
                (0, r + r * r + r, 1),
                (0, r + r * r - r, -1),
                (2, 2 * r + 1 + r * r + r, -1),
                (2, 2 * r + 1 + r * r - r, 1),
            ],
        )
    })?;
    Ok(&times(2, &half(&d_single(o)?)) + &times(2, &tail))
}

fn t2(o: usize) -> Result<QSeries, ProductError> {
    // (1 - q^{r+2n+1}) q^{2n^2+2nr+r^2+n} (q^{2r} - 1)
    let tail = over_one_plus(o, |r, o| {
        inner_terms(
            r,
            o,
            &[
                (0, r * r + 2 * r, 1),
                (0, r * r, -1),
                (2, r * r + r + 1 + 2 * r, -1),
                (2, r * r + r + 1, 1),
            ],
        )
    })?;
    Ok(&d_single(o)? + &times(2, &tail))
}

fn half_t0(o: usize) -> Result<QSeries, ProductError> {
    Ok(half(&t0(o)?))
}

fn half_t2(o: usize) -> Result<QSeries, ProductError> {
    Ok(half(&t2(o)?))
}

fn hb2_lhs(o: usize) -> Result<QSeries, ProductError> {
    let s = sop(1, o, |n| {
        term(2 * n)
            .with(fin(nq(1), 1, n - 1))
            .with(fin(q(1), 2, n))
            .with(fin(q(1), 1, n).pow(-3))
    })?;
    Ok(&euler_cubed(o)? * &s)
}

fn hb1_lhs(o: usize) -> Result<QSeries, ProductError> {
    Ok(&half(&euler_cubed(o)?) + &hb2_lhs(o)?)
}

const D_FORM: [i64; 6] = [2, 2, 1, 1, 0, 0];

fn u1(o: usize) -> Result<QSeries, ProductError> {
    let double = qds_times(D_FORM, &[(0, 1, 0), (2, 1, 1)], 1, o)?;
    Ok(&half(&d_single(o)?) - &double)
}

fn u_split(r0: i64, o: usize) -> Result<QSeries, ProductError> {
    let minus = &qds(D_FORM, r0, o)? + &qds([2, 2, 1, 3, 2, 1], r0, o)?;
    let plus = &qds([2, 2, 1, 1, 1, 0], r0, o)? + &qds([2, 2, 1, 3, 1, 1], r0, o)?;
    Ok(&(&half(&d_single(o)?) - &minus) + &plus)
}

fn u2(o: usize) -> Result<QSeries, ProductError> {
    u_split(1, o)
}

fn u3(o: usize) -> Result<QSeries, ProductError> {
    u_split(0, o)
}

fn u4(o: usize) -> Result<QSeries, ProductError> {
    let single = &half(&d_single(o)?) - &th1(Theta1DSpec::new(2, 1, 0, 1), o)?;
    let plus = &qds([2, 2, 1, 1, 1, 0], 0, o)? + &qds([2, 2, 1, 3, 1, 1], 0, o)?;
    Ok(&(&single - &times(2, &qds([2, 2, 1, 3, 2, 1], 0, o)?)) + &plus)
}

fn quarter_odd(lin: i64, c: i64, o: usize) -> Result<QSeries, ProductError> {
    th1(Theta1DSpec::new(16, lin, c, 8), o)
}

fn u5(o: usize) -> Result<QSeries, ProductError> {
    let singles = &(-half(&quarter_odd(8, 0, o)?)) - &half(&quarter_odd(24, 8, o)?);
    let a = th2(eighth(Theta2DSpec::new(2, 1, 4, 2)), o)?;
    let b = th2(eighth(Theta2DSpec::new(2, 1, 4, 0)), o)?;
    let c = th2(eighth(Theta2DSpec::new(2, -1, 4, 4)), o)?;
    Ok(&(&(&singles - &times(2, &a)) + &b) + &c)
}

fn pronic(o: usize) -> Result<QSeries, ProductError> {
    th1(Theta1DSpec::new(8, 8, 0, 8), o)
}

fn u6(o: usize) -> Result<QSeries, ProductError> {
    let singles = &(&(-half(&quarter_odd(8, 0, o)?)) + &half(&quarter_odd(24, 8, o)?)) - &pronic(o)?;
    let a = th2(eighth(Theta2DSpec::new(2, 1, 4, 2)), o)?;
    let b = th2(eighth(Theta2DSpec::new(2, 1, 4, 0)), o)?;
    Ok(&(&singles - &times(2, &a)) + &times(2, &b))
}

fn u6_minus_half_cube(o: usize) -> Result<QSeries, ProductError> {
    Ok(&u6(o)? - &half(&euler_cubed(o)?))
}

fn v1(o: usize) -> Result<QSeries, ProductError> {
    let b = th2(eighth(Theta2DSpec::new(2, 1, 4, 0)), o)?;
    let a = th2(eighth(Theta2DSpec::new(2, 1, 4, 2)), o)?;
    let singles = &(&(-half(&quarter_odd(8, 0, o)?)) + &half(&quarter_odd(24, 8, o)?)) - &pronic(o)?;
    Ok(&(&(&times(2, &b) - &times(2, &a)) + &singles) - &half(&jacobi_theta(o)?))
}

fn v2(o: usize) -> Result<QSeries, ProductError> {
    let double = th2(eighth(Theta2DSpec::new(2, 1, 2, 0).signed(SignRule::Alternating)), o)?;
    let odd = th1(Theta1DSpec::new(4, 4, 0, 8).signed(SignRule::Alternating), o)?;
    Ok(&(&(&times(2, &double) - &half(&odd)) - &pronic(o)?) - &half(&jacobi_theta(o)?))
}

fn w1(o: usize) -> Result<QSeries, ProductError> {
    sop(1, o, |n| {
        term(2 * n)
            .with(fin(nq(1), 1, n - 1))
            .with(fin(q(1), 1, 2 * n))
            .with(inf(q(n + 1), 1).pow(3))
            .with(fin(q(2), 2, n).inv())
    })
}

fn w2(o: usize) -> Result<QSeries, ProductError> {
    sop(1, o, |n| {
        term(2 * n)
            .with(fin(q(2), 2, n - 1))
            .with(fin(q(n), 1, n + 1))
            .with(inf(q(n + 1), 1).pow(3))
            .with(fin(q(2), 2, n).inv())
    })
}

fn w3(o: usize) -> Result<QSeries, ProductError> {
    sop(1, o, |n| term(2 * n).with(fin(q(n), 1, n)).with(inf(q(n + 1), 1).pow(3)))
}

fn v2_spread(o: usize) -> Result<QSeries, ProductError> {
    Ok(v2(inner_order(o))?.spread(8, 2))
}

fn x1(o: usize) -> Result<QSeries, ProductError> {
    let double = th2(Theta2DSpec::new(2, 1, 2, 0).signed(SignRule::Alternating).scaled(2), o)?;
    let odd = th1(Theta1DSpec::new(4, 4, 2, 1).signed(SignRule::Alternating), o)?;
    let diag = th1(Theta1DSpec::new(8, 8, 2, 1), o)?;
    let weighted = th1(
        Theta1DSpec::new(4, 4, 2, 1)
            .signed(SignRule::Alternating)
            .weighted(Weight::ODD),
        o,
    )?;
    Ok(&(&(&double - &half(&odd)) - &diag) - &half(&weighted))
}

fn x2(o: usize) -> Result<QSeries, ProductError> {
    Ok(rhs_theorem(TheoremId::D, o))
}

macro_rules! stage {
    ($id:literal, $desc:literal, $l:expr, $r:expr) => {
        Stage {
            id: $id,
            description: $desc,
            lhs: $l,
            rhs: $r,
        }
    };
}

/// All stages, grouped by chain (`fg-a`, `fg-b`, `a1`, `a2`, `b`, `c`, `d`).
pub fn stages() -> Vec<Stage> {
    vec![
        stage!("fg-a:1", "F series = (q)_inf sum_{n>=1} q^n (q^n)_n/(q)_n", |o| gen(Family::F)(o), fa1),
        stage!("fg-a:2", "split off the n = 0 term", fa1, fa2),
        stage!("fg-a:3", "Fine at (q^-1, q)", fa2, fa3),
        stage!("fg-a:4", "unilateral pentagonal expansion of (q)_inf", fa3, fa4),
        stage!("fg-a:5", "collect to the closed form", fa4, |o| Ok(rhs_theorem(TheoremId::FgA, o))),
        stage!("fg-b:1", "G series = (q)_inf sum_{n>=1} q^n (-q^n)_n/(q)_n", |o| gen(Family::G)(o), fb1),
        stage!("fg-b:2", "split off the n = 0 term", fb1, fb2),
        stage!("fg-b:3", "Fine at (-q^-1, q)", fb2, fb3),
        stage!("fg-b:4", "unilateral pentagonal expansion of (q)_inf", fb3, fb4),
        stage!("fg-b:5", "odd-index terms double", fb4, fb5),
        stage!("fg-b:6", "collect to the closed form", fb5, |o| Ok(rhs_theorem(TheoremId::FgB, o))),
        stage!("a1:1", "A series as (q)^3_inf times a sum", |o| gen(Family::A)(o), ja1),
        stage!("a1:2", "q -> q^2", |o| Ok(ja1(o)?.dilate(2)), jf1),
        stage!("a1:3", "(q^2;q^2)_{2n-1} split by parity", jf1, jf2),
        stage!("a1:4", "rewrite over (q^2;q^2)_n^3", jf2, jf3),
        stage!("a1:5", "as a 3phi2 on base q^2", jf3, jf4),
        stage!("a1:6", "three-term 3phi2 transformation", jg0, jg1),
        stage!("a1:7", "cancel the prefactor", jg1, jg2),
        stage!("a1:8", "expand the 3phi2", jg2, jg3),
        stage!("a1:9", "Andrews-Warnaar at z = -1", jg3, jg4),
        stage!("a1:10", "(q^2;q^2)^3 + 2 A(q^2) = sum (-1)^n q^{n^2+n}", jh0, alt_pronic),
        stage!("a1:11", "Jacobi", gen_a_q2, jh1),
        stage!("a1:12", "simplify", jh1, jh2),
        stage!("a1:13", "closed form at q^2", jh2, jh3),
        stage!("a2:1", "A'' series as a quotient sum", |o| gen(Family::A2)(o), ga1),
        stage!("a2:2", "Gauss product for psi(q)", ga1, ga2),
        stage!("a2:3", "q -> q^2 as a 3phi2 on base q^2", ga2_q2, ga3),
        stage!("a2:4", "psi(q^2) + 2 A''(q^2) = psi(q^2) 3phi2", gh_lhs, ga4),
        stage!("a2:5", "two-term-prefactor 3phi2 transformation", gp0, gp1),
        stage!("a2:6", "merge (q, -q^3; q^2)_inf", gp1, gp2),
        stage!("a2:7", "Gauss quotient for psi(q^2)", gp2, gp3),
        stage!("a2:8", "expand the 3phi2", gp3, gp4),
        stage!("a2:9", "merge the denominators", gp4, gp5),
        stage!("a2:10", "Andrews-Warnaar at z = 1", gp5, gp6),
        stage!("a2:11", "psi(q^2) + 2 A''(q^2) = sum (2n+1) q^{n^2+n}", gh_lhs, odd_pronic),
        stage!("a2:12", "Gauss", gen_a2_q2, gh1),
        stage!("a2:13", "simplify", gh1, gh2),
        stage!("a2:14", "closed form at q^2", gh2, gh3),
        stage!("b:1", "pull out (-q)_inf", |o| gen(Family::B)(o), e1),
        stage!("b:2", "(q^{n+1})_n / (-q)_n = (q)_{2n} / (q^2;q^2)_n", e1, e2),
        stage!("b:3", "Euler", e2, e3),
        stage!("b:4", "absorb 1/(q;q^2)_inf", e3, e4),
        stage!("b:5", "add the n = 0 term", e4, e5),
        stage!("b:6", "factor out the Gauss quotient", e5, e6),
        stage!("b:7", "q-binomial theorem", e6, e7),
        stage!("b:8", "Gauss", e7, |o| Ok(rhs_theorem(TheoremId::B, o))),
        stage!("c:1", "(1-q) lemma lhs for the pair relative to q^2 at a = -q", c_lemma_lhs, bpd1_lhs),
        stage!("c:2", "lemma instance: product side = double sum", bpd1_lhs, bpd1_rhs),
        stage!("c:3", "(1-q) lemma rhs at a = -q", c_lemma_rhs, bpd1_rhs),
        stage!("c:4", "basic facts and Euler", bpd1_lhs, l1),
        stage!("c:5", "pull out (-q)_inf", l1, l2),
        stage!("c:6", "Euler", l2, l3),
        stage!("c:7", "absorb 1/(q;q^2)_inf", l3, l4),
        stage!("c:8", "(-q^{n+1})_inf (q^{n+1})_inf = (q^{2n+2};q^2)_inf", l4, l5),
        stage!("c:9", "merge base-q^2 products", l5, l6),
        stage!("c:10", "cancel against (q^{2n+2})_inf", l6, l7),
        stage!("c:11", "shift n -> n - 1 gives the C series", l7_shifted, |o| gen(Family::C)(o)),
        stage!("c:12", "C series = q times the double sum", |o| gen(Family::C)(o), r0),
        stage!("c:13", "expand the two binomials", r0, r1),
        stage!("c:14", "r -> r + 1 in the first sum", r1, r2),
        stage!("c:15", "complete squares", r2, r3),
        stage!("c:16", "q -> q^8, times q^2", r3_spread, r4),
        stage!("c:17", "parity split of the n-sum", r4, r5),
        stage!("c:18", "boundary terms of the double sums", r5, r6),
        stage!("c:19", "merge the single sums", r6, r7),
        stage!("d:1", "lemma lhs for the pair relative to 1 at a = -1", d_lemma_lhs, t0),
        stage!("d:2", "lemma rhs at a = -1", d_lemma_rhs, t1),
        stage!("d:3", "expand alpha_r", t1, t2),
        stage!("d:4", "halve: (q)^3/2 + (q)^3 sum_{n>=1}", half_t0, hb1_lhs),
        stage!("d:5", "halve the double-sum side", half_t2, u1),
        stage!("d:6", "halved lemma instance", hb1_lhs, u1),
        stage!("d:7", "expand the two binomials", u1, u2),
        stage!("d:8", "extend r to r >= 0", u2, u3),
        stage!("d:9", "r -> r + 1 in one sum", u3, u4),
        stage!("d:10", "complete squares", u4, u5),
        stage!("d:11", "split off r = 0 of the shifted sum", u5, u6),
        stage!("d:12", "Jacobi", u6_minus_half_cube, v1),
        stage!("d:13", "product side after Jacobi", hb2_lhs, v1),
        stage!("d:14", "merge into alternating sums", v1, v2),
        stage!("d:15", "basic facts", hb2_lhs, w1),
        stage!("d:16", "(-q)_{n-1} (q)_{2n} = (q^2;q^2)_{n-1} (q^n)_{n+1}", w1, w2),
        stage!("d:17", "cancel (q^2;q^2)", w2, w3),
        stage!("d:18", "the D series", w3, |o| gen(Family::D)(o)),
        stage!("d:19", "q -> q^8, times q^2", v2_spread, x1),
        stage!("d:20", "merge the single sums", x1, x2),
    ]
}

/// Stages whose id equals `selector` or lies in the chain it names.
pub fn select(selector: &str) -> Vec<Stage> {
    let prefix = format!("{selector}:");
    stages()
        .into_iter()
        .filter(|s| s.id == selector || s.id.starts_with(&prefix))
        .collect()
}

pub fn chain_stages(order: usize) -> Vec<VerificationReport> {
    stages().iter().map(|s| s.verify(order)).collect()
}

/// All stages of the two Bailey-pair chains (`c` and `d`), folded into one
/// report that names the first failing stage.
pub fn verify_bailey_chain(order: usize) -> VerificationReport {
    let parts: Vec<VerificationReport> = stages()
        .iter()
        .filter(|s| s.id.starts_with("c:") || s.id.starts_with("d:"))
        .map(|s| s.verify(order))
        .collect();
    VerificationReport::combine("chain:bailey", order, &parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let all = stages();
        let mut ids: Vec<&str> = all.iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
    }

    #[test]
    fn selection() {
        assert_eq!(select("b").len(), 8);
        assert_eq!(select("d:3").len(), 1);
        assert!(select("nope").is_empty());
    }

    #[test]
    fn regrouping_from_one_matches_the_previous_step() {
        let o = 400;
        assert_eq!(r5(o).unwrap(), c_regrouped_from_one(o).unwrap());
        let diff = &r6(o).unwrap() - &r5(o).unwrap();
        assert_eq!(diff, QSeries::monomial(rat(-1), 2, o));
    }

    #[test]
    fn fine_b_needs_the_unsigned_sum() {
        let o = 30;
        let l = fb2(o).unwrap();
        assert_eq!(l, fb3(o).unwrap());
        assert_ne!(l, fa3(o).unwrap());
    }
}
