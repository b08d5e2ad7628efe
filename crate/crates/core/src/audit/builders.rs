use alloc::format;

use super::{BuildError, Ctx};
use crate::pseries::{MonomialArg, MultiIndex, MultiSeries, VarTable};
use crate::qcore::{
    binom2, dq_k, phi_series, q_factorial, qbinom, qpoch_multi, qpoch_n, qpoch_scalar, PhiSpec,
};
use crate::qfield::{rat, PolyQ, RatFunQ};
use crate::qops::{hahn, heine_apply, t_apply};
use crate::Result;

type Built = core::result::Result<MultiSeries, BuildError>;

impl Ctx {
    fn m(&self, names: &[&str]) -> MonomialArg {
        MonomialArg::vars_product(&self.vars, names).expect("catalog variable")
    }

    /// `q^j` times the product of the named variables.
    fn mq(&self, j: i64, names: &[&str]) -> MonomialArg {
        self.m(names).times_q_pow(j)
    }

    fn scalar(&self, c: RatFunQ) -> MonomialArg {
        MonomialArg::scalar(&self.vars, c)
    }

    fn qs(&self, j: i64) -> MonomialArg {
        self.scalar(RatFunQ::q_pow(j))
    }

    fn one(&self) -> MultiSeries {
        MultiSeries::one(&self.vars, self.order)
    }

    fn zero(&self) -> MultiSeries {
        MultiSeries::zero(&self.vars, self.order)
    }

    fn series(&self, m: &MonomialArg) -> MultiSeries {
        m.to_series(self.order)
    }

    fn constant(&self, c: RatFunQ) -> MultiSeries {
        MultiSeries::constant(&self.vars, self.order, c)
    }

    fn inf(&self, args: &[MonomialArg]) -> Result<MultiSeries> {
        qpoch_multi(&self.vars, args, self.order)
    }

    fn inv_inf(&self, args: &[MonomialArg]) -> Result<MultiSeries> {
        self.inf(args)?.inverse()
    }

    /// `1 / (u;q)_n`
    fn inv_fin(&self, u: &MonomialArg, n: u32) -> Result<MultiSeries> {
        qpoch_n(u, n as i64, self.order)?.inverse()
    }

    fn phi(&self, num: &[MonomialArg], den: &[MonomialArg], z: MonomialArg) -> Built {
        Ok(phi_series(
            &PhiSpec::new(num.to_vec(), den.to_vec(), z),
            self.order,
        )?)
    }

    /// `Phi_m^(alpha)(x, y|q)` with monomial arguments.
    fn hahn(
        &self,
        m: u32,
        alpha: &MonomialArg,
        x: &MonomialArg,
        y: &MonomialArg,
    ) -> Result<MultiSeries> {
        hahn(m, &self.series(alpha), &self.series(x), &self.series(y))
    }

    fn x_pow(&self, var: &str, m: u32) -> MonomialArg {
        MonomialArg::new(&self.vars, RatFunQ::one(), &[(var, m)]).expect("catalog variable")
    }
}

fn q_poch(j: i64, k: u32) -> RatFunQ {
    qpoch_scalar(&RatFunQ::q_pow(j), k as usize)
}

fn recip_fact(k: u32) -> RatFunQ {
    q_factorial(k as usize).inv().expect("(q;q)_k is nonzero")
}

fn sign_q(e: u32) -> RatFunQ {
    let s = if e.is_multiple_of(2) { 1 } else { -1 };
    RatFunQ::q_pow(binom2(e as u64)).scale(&rat(s))
}

fn gauss(n: u32, k: u32) -> RatFunQ {
    qbinom(n as i64, k as i64).expect("non-negative index")
}

// ---- preliminaries ----

pub(super) fn i1_lhs(c: &Ctx) -> Built {
    Ok(qpoch_n(&c.m(&["a"]), c.n as i64, c.order)?)
}

pub(super) fn i1_rhs(c: &Ctx) -> Built {
    let a = c.m(&["a"]);
    Ok(c.inf(core::slice::from_ref(&a))?
        .mul(&c.inv_inf(&[a.times_q_pow(c.n as i64)])?)?)
}

pub(super) fn i2_lhs(c: &Ctx) -> Built {
    Ok(qpoch_n(&c.m(&["a"]), (c.n + c.k) as i64, c.order)?)
}

pub(super) fn i2_rhs(c: &Ctx) -> Built {
    let a = c.m(&["a"]);
    let head = qpoch_n(&a, c.n as i64, c.order)?;
    Ok(head.mul(&qpoch_n(&a.times_q_pow(c.n as i64), c.k as i64, c.order)?)?)
}

/// `(a;q)_{n-k} prod_{j<k} (a - q^{1-n+j})`
pub(super) fn i3_lhs(c: &Ctx) -> Built {
    let a = c.m(&["a"]);
    let mut s = qpoch_n(&a, c.n as i64 - c.k as i64, c.order)?;
    for j in 0..c.k as i64 {
        let factor = c
            .series(&a)
            .sub(&c.constant(RatFunQ::q_pow(1 - c.n as i64 + j)))?;
        s = s.mul(&factor)?;
    }
    Ok(s)
}

/// `(a;q)_n (-q)^k q^{binom(k,2) - nk}`
pub(super) fn i3_rhs(c: &Ctx) -> Built {
    let (n, k) = (c.n as i64, c.k as i64);
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let factor = RatFunQ::q_pow(k + binom2(k as u64) - n * k).scale(&rat(sign));
    Ok(qpoch_n(&c.m(&["a"]), n, c.order)?.scale(&factor))
}

/// How the `q`-shift enters the Leibniz sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeibnizForm {
    /// `q^{k(n-k)} [n,k] D^k f . D^{n-k}{g(q^k x)}`
    Printed,
    /// `q^{k(n-k)} [n,k] D^k f . (D^{n-k} g)(q^k x)`
    ShiftAfter,
    /// `q^{k(k-n)} [n,k] D^k f . D^{n-k}{g(q^k x)}`
    ProofForm,
}

/// Both sides of the Leibniz rule for `D_q^n (f g)` in `var`.
pub fn leibniz_sides(
    f: &MultiSeries,
    g: &MultiSeries,
    n: u32,
    var: &str,
    form: LeibnizForm,
) -> Result<(MultiSeries, MultiSeries)> {
    let lhs = dq_k(&f.mul(g)?, var, n)?;
    let mut rhs = MultiSeries::zero(f.vars(), lhs.order());
    for k in 0..=n {
        let shift = k as i64;
        let gpart = match form {
            LeibnizForm::ShiftAfter => dq_k(g, var, n - k)?.subst_qscale(var, shift)?,
            _ => dq_k(&g.subst_qscale(var, shift)?, var, n - k)?,
        };
        let e = (k * (n - k)) as i64;
        let power = if form == LeibnizForm::ProofForm {
            -e
        } else {
            e
        };
        let weight = gauss(n, k).mul_q_pow(power);
        rhs = rhs.add(&dq_k(f, var, k)?.mul(&gpart)?.scale(&weight))?;
    }
    Ok((lhs, rhs))
}

/// The fixed pair used by the catalog entry.
fn leibniz_pair(vars: &VarTable, order: u32) -> Result<(MultiSeries, MultiSeries)> {
    let poly = |cs: &[&[i64]]| {
        MultiSeries::polynomial(
            vars,
            order,
            cs.iter().enumerate().map(|(i, c)| {
                (
                    MultiIndex::new(alloc::vec![i as u32]),
                    RatFunQ::from_poly(PolyQ::from_ints(c)),
                )
            }),
        )
    };
    Ok((
        poly(&[&[1], &[1], &[0, -1], &[2]])?,
        poly(&[&[2], &[-1], &[1, 1], &[], &[1]])?,
    ))
}

fn leibniz(c: &Ctx, form: LeibnizForm, side: usize) -> Built {
    let (f, g) = leibniz_pair(&c.vars, c.order.max(8))?;
    let (l, r) = leibniz_sides(&f, &g, c.n, "x", form)?;
    Ok(if side == 0 { l } else { r })
}

pub(super) fn i4_lhs(c: &Ctx) -> Built {
    leibniz(c, LeibnizForm::Printed, 0)
}

pub(super) fn i4_rhs(c: &Ctx) -> Built {
    leibniz(c, LeibnizForm::Printed, 1)
}

pub(super) fn i4_shift_after(c: &Ctx) -> Built {
    leibniz(c, LeibnizForm::ShiftAfter, 1)
}

pub(super) fn i4_proof_form(c: &Ctx) -> Built {
    leibniz(c, LeibnizForm::ProofForm, 1)
}

pub(super) fn i5_lhs(c: &Ctx) -> Built {
    c.phi(&[c.m(&["a"])], &[], c.m(&["z"]))
}

pub(super) fn i5_rhs(c: &Ctx) -> Built {
    Ok(c.inf(&[c.m(&["a", "z"])])?
        .mul(&c.inv_inf(&[c.m(&["z"])])?)?)
}

pub(super) fn i6_lhs(c: &Ctx) -> Built {
    Ok(c.inv_fin(&c.m(&["x"]), c.n)?)
}

pub(super) fn i6_rhs(c: &Ctx) -> Built {
    let terms = (0..=c.order).map(|j| {
        let idx = MultiIndex::new(alloc::vec![j]);
        (idx, gauss(c.n + j - 1, j))
    });
    Ok(MultiSeries::from_terms(&c.vars, c.order, terms)?)
}

// ---- operator actions ----

pub(super) fn t1_lhs(c: &Ctx) -> Built {
    let mut s = c.zero();
    for m in 0..=c.order {
        let xm = c.series(&c.x_pow("x", m));
        s = s.add(&heine_apply(c.n, &c.m(&["b"]), "x", &xm)?)?;
    }
    Ok(s)
}

pub(super) fn t1_rhs(c: &Ctx) -> Built {
    let mut s = c.zero();
    for m in 0..=c.order {
        s = s.add(&c.hahn(m, &c.qs(c.n as i64), &c.m(&["b"]), &c.m(&["x"]))?)?;
    }
    Ok(s)
}

pub(super) fn t2_lhs(c: &Ctx) -> Built {
    let f = c.inv_inf(&[c.m(&["a", "x"])])?;
    Ok(heine_apply(c.n, &c.m(&["b"]), "x", &f)?)
}

pub(super) fn t2_rhs(c: &Ctx) -> Built {
    let top = c.inf(&[c.mq(c.n as i64, &["a", "b"])])?;
    Ok(top.mul(&c.inv_inf(&[c.m(&["a", "x"]), c.m(&["a", "b"])])?)?)
}

pub(super) fn t3_lhs(c: &Ctx) -> Built {
    let f = c.inf(&[c.m(&["a", "x"])])?;
    Ok(heine_apply(c.n, &c.m(&["b"]), "x", &f)?)
}

fn t3_form(c: &Ctx, num: &[MonomialArg], den: MonomialArg) -> Built {
    let pre = c.inf(&[c.m(&["a", "x"])])?;
    Ok(pre.mul(&c.phi(num, &[den], c.m(&["a", "b"]))?)?)
}

pub(super) fn t3_rhs(c: &Ctx) -> Built {
    t3_form(c, &[c.qs(c.n as i64), c.qs_zero()], c.m(&["a", "x"]).neg())
}

pub(super) fn t3_proof(c: &Ctx) -> Built {
    t3_form(c, &[c.qs(c.n as i64), c.qs_zero()], c.m(&["a", "x"]))
}

pub(super) fn t3_derived(c: &Ctx) -> Built {
    t3_form(c, &[c.qs(c.n as i64)], c.m(&["a", "x"]))
}

impl Ctx {
    fn qs_zero(&self) -> MonomialArg {
        self.scalar(RatFunQ::zero())
    }
}

pub(super) fn t4_lhs(c: &Ctx) -> Built {
    let f = c.inv_inf(&[c.m(&["b", "x"]), c.m(&["c", "x"])])?;
    Ok(heine_apply(c.n, &c.m(&["a"]), "x", &f)?)
}

pub(super) fn t4_rhs(c: &Ctx) -> Built {
    let n = c.n as i64;
    let pre = c.inf(&[c.mq(n, &["a", "c"])])?.mul(&c.inv_inf(&[
        c.m(&["b", "x"]),
        c.m(&["c", "x"]),
        c.m(&["a", "c"]),
    ])?)?;
    let phi = c.phi(
        &[c.qs(n), c.m(&["c", "x"])],
        &[c.mq(n, &["a", "c"])],
        c.m(&["a", "b"]),
    )?;
    Ok(pre.mul(&phi)?)
}

pub(super) fn t5_lhs(c: &Ctx) -> Built {
    let f = c
        .inf(&[c.m(&["c", "x"])])?
        .mul(&c.inv_inf(&[c.m(&["a", "x"]), c.m(&["b", "x"])])?)?;
    Ok(heine_apply(c.n, &c.m(&["d"]), "x", &f)?)
}

/// `(cx)_inf/(ax,bx)_inf sum_l (q^n)_l/((q)_l (cx)_l) w^l sum_m [l,m] Phi_m^(bx)(a,b) s_{l-m} c^{l-m}`
fn t5_form(c: &Ctx, weight: &str, signed: bool) -> Built {
    let pre = c
        .inf(&[c.m(&["c", "x"])])?
        .mul(&c.inv_inf(&[c.m(&["a", "x"]), c.m(&["b", "x"])])?)?;
    let (a, b, bx) = (c.m(&["a"]), c.m(&["b"]), c.m(&["b", "x"]));
    let mut sum = c.zero();
    for l in 0..=c.order {
        // every summand has degree at least 2l
        if 2 * l > c.order {
            break;
        }
        let mut inner = c.zero();
        for m in 0..=l {
            let mut coef = gauss(l, m);
            if signed {
                coef = &coef * &sign_q(l - m);
            }
            let cpow = c.m(&["c"]).pow(l - m).scaled(&coef);
            inner = inner.add(
                &c.hahn(m, &bx, &a, &b)?
                    .mul_monomial(&cpow)?
                    .truncate(c.order),
            )?;
        }
        let w = c
            .m(&[weight])
            .pow(l)
            .scaled(&(&q_poch(c.n as i64, l) * &recip_fact(l)));
        let term = inner
            .mul(&c.inv_fin(&c.m(&["c", "x"]), l)?)?
            .mul_monomial(&w)?;
        sum = sum.add(&term.truncate(c.order))?;
    }
    Ok(pre.mul(&sum)?)
}

pub(super) fn t5_rhs(c: &Ctx) -> Built {
    t5_form(c, "b", false)
}

pub(super) fn t5_proof(c: &Ctx) -> Built {
    t5_form(c, "d", false)
}

pub(super) fn t5_derived(c: &Ctx) -> Built {
    t5_form(c, "d", true)
}

// ---- generating functions ----

/// `sum_m w_m Phi_m^(q^n)(b,x) y^m` summed directly from Hahn polynomials.
fn hahn_gf(c: &Ctx, weight: impl Fn(u32) -> RatFunQ) -> Built {
    let mut s = c.zero();
    for m in 0..=c.order / 2 {
        let ym = c.x_pow("y", m).scaled(&weight(m));
        let h = c.hahn(m, &c.qs(c.n as i64), &c.m(&["b"]), &c.m(&["x"]))?;
        s = s.add(&h.mul_monomial(&ym)?.truncate(c.order))?;
    }
    Ok(s)
}

pub(super) fn t7_lhs(c: &Ctx) -> Built {
    hahn_gf(c, |_| RatFunQ::one())
}

pub(super) fn t7_rhs(c: &Ctx) -> Built {
    let pre = c.one().sub(&c.series(&c.m(&["x", "y"])))?.inverse()?;
    let phi = c.phi(
        &[c.qs(c.n as i64), c.qs(1)],
        &[c.mq(1, &["x", "y"])],
        c.m(&["b", "y"]),
    )?;
    Ok(pre.mul(&phi)?)
}

pub(super) fn t8_lhs(c: &Ctx) -> Built {
    hahn_gf(c, recip_fact)
}

pub(super) fn t8_rhs(c: &Ctx) -> Built {
    let top = c.inf(&[c.mq(c.n as i64, &["b", "y"])])?;
    Ok(top.mul(&c.inv_inf(&[c.m(&["x", "y"]), c.m(&["b", "y"])])?)?)
}

pub(super) fn t9_lhs(c: &Ctx) -> Built {
    hahn_gf(c, |m| recip_fact(m).mul_q_pow(binom2(m as u64)))
}

pub(super) fn t9_rhs(c: &Ctx) -> Built {
    let xy = c.m(&["x", "y"]);
    let phi = c.phi(
        &[c.qs(c.n as i64), c.qs_zero()],
        &[xy.neg()],
        c.m(&["b", "y"]),
    )?;
    Ok(c.inf(&[xy])?.mul(&phi)?)
}

pub(super) fn t9_proof(c: &Ctx) -> Built {
    let xy = c.m(&["x", "y"]);
    let phi = c.phi(
        &[c.qs(c.n as i64), c.qs_zero()],
        core::slice::from_ref(&xy),
        c.m(&["b", "y"]),
    )?;
    Ok(c.inf(&[xy])?.mul(&phi)?)
}

pub(super) fn t9_derived(c: &Ctx) -> Built {
    let mxy = c.m(&["x", "y"]).neg();
    let phi = c.phi(
        &[c.qs(c.n as i64)],
        core::slice::from_ref(&mxy),
        c.m(&["b", "y"]).neg(),
    )?;
    Ok(c.inf(&[mxy])?.mul(&phi)?)
}

/// `sum_m w_m Phi_m^(q^n)(a,x) Phi_m^(q^k)(b,y) z^m`
fn mehler_lhs(c: &Ctx, weight: impl Fn(u32) -> RatFunQ) -> Built {
    let mut s = c.zero();
    for m in 0..=c.order / 3 {
        let zm = c.x_pow("z", m).scaled(&weight(m));
        let h1 = c.hahn(m, &c.qs(c.n as i64), &c.m(&["a"]), &c.m(&["x"]))?;
        let h2 = c.hahn(m, &c.qs(c.k as i64), &c.m(&["b"]), &c.m(&["y"]))?;
        s = s.add(&h1.mul(&h2)?.mul_monomial(&zm)?.truncate(c.order))?;
    }
    Ok(s)
}

pub(super) fn t10_lhs(c: &Ctx) -> Built {
    mehler_lhs(c, |_| RatFunQ::one())
}

pub(super) fn t10_rhs(c: &Ctx) -> Built {
    let (n, k) = (c.n as i64, c.k as i64);
    let xyz = c.m(&["x", "y", "z"]);
    let mut s = c.zero();
    for m in 0..=c.order / 2 {
        let outer = &q_poch(k, m) * &q_factorial(m as usize);
        for i in 0..=(c.order / 2 - m) {
            let mid = (&q_poch(n, i) * &recip_fact(i)) * recip_fact(i);
            let mut inner = c.zero();
            for l in 0..=m {
                let den = q_poch(i as i64, l);
                if den.is_zero() {
                    return Err(BuildError::Undefined(format!(
                        "(q^{i};q)_l vanishes for l >= 1 (first at m={m}, i={i}, l={l})"
                    )));
                }
                let coef = (&q_poch(n + i as i64, l) * &recip_fact(l))
                    .checked_div(&den)
                    .map_err(BuildError::from)?;
                let coef = &coef * &recip_fact(m - l);
                inner = inner.add(&c.series(&c.x_pow("x", m - l).scaled(&coef)))?;
            }
            let mono = c
                .m(&["b", "z"])
                .pow(m)
                .mul(&c.m(&["y", "z"]).pow(i))
                .map_err(BuildError::from)?;
            let mono = mono.scaled(&(&outer * &mid));
            let term = inner
                .mul(&c.inv_fin(&xyz, m + i + 1)?)?
                .mul_monomial(&mono)?;
            s = s.add(&term.truncate(c.order))?;
        }
    }
    Ok(s)
}

pub(super) fn t11_lhs(c: &Ctx) -> Built {
    mehler_lhs(c, recip_fact)
}

/// `(q^k bxz)_inf/(xyz,bxz)_inf sum_m (q^n)_m/((q)_m (q^k bxz)_m) w_m sum_l [m,l] Phi_l^(bxz)(yz,bz) s_{m-l} (q^k bz)^{m-l}`
fn t11_form(c: &Ctx, weight: &[&str], signed: bool) -> Built {
    let (n, k) = (c.n as i64, c.k as i64);
    let qkbxz = c.mq(k, &["b", "x", "z"]);
    let pre = c
        .inf(core::slice::from_ref(&qkbxz))?
        .mul(&c.inv_inf(&[c.m(&["x", "y", "z"]), c.m(&["b", "x", "z"])])?)?;
    let (bxz, yz, bz) = (c.m(&["b", "x", "z"]), c.m(&["y", "z"]), c.m(&["b", "z"]));
    let wdeg = c.m(weight).degree();
    let mut sum = c.zero();
    for m in 0..=c.order {
        // summand m has degree at least (deg w + 2) m
        if (wdeg + 2) * m > c.order {
            break;
        }
        let mut inner = c.zero();
        for l in 0..=m {
            let mut coef = gauss(m, l);
            if signed {
                coef = &coef * &sign_q(m - l);
            }
            let tail = c.mq(k, &["b", "z"]).pow(m - l).scaled(&coef);
            let h = c.hahn(l, &bxz, &yz, &bz)?;
            inner = inner.add(&h.mul_monomial(&tail)?.truncate(c.order))?;
        }
        let w = c.m(weight).pow(m).scaled(&(&q_poch(n, m) * &recip_fact(m)));
        let term = inner.mul(&c.inv_fin(&qkbxz, m)?)?.mul_monomial(&w)?;
        sum = sum.add(&term.truncate(c.order))?;
    }
    Ok(pre.mul(&sum)?)
}

pub(super) fn t11_rhs(c: &Ctx) -> Built {
    t11_form(c, &["b", "z"], false)
}

pub(super) fn t11_operator_parameter(c: &Ctx) -> Built {
    t11_form(c, &["a"], false)
}

pub(super) fn t11_derived(c: &Ctx) -> Built {
    t11_form(c, &["a"], true)
}

/// `sum_{n,m} w_n w_m Phi_{n+m}^(q^k)(b,x) z^n y^m`
fn double_gf(c: &Ctx, weight: fn(u32) -> RatFunQ) -> Built {
    let mut s = c.zero();
    for total in 0..=c.order / 2 {
        let h = c.hahn(total, &c.qs(c.k as i64), &c.m(&["b"]), &c.m(&["x"]))?;
        for i in 0..=total {
            let mono = c
                .x_pow("z", i)
                .mul(&c.x_pow("y", total - i))
                .map_err(BuildError::from)?
                .scaled(&(&weight(i) * &weight(total - i)));
            s = s.add(&h.mul_monomial(&mono)?.truncate(c.order))?;
        }
    }
    Ok(s)
}

pub(super) fn t12_lhs(c: &Ctx) -> Built {
    double_gf(c, |_| RatFunQ::one())
}

fn t12_form(c: &Ctx, per_term: bool) -> Built {
    let k = c.k as i64;
    let mut sum = c.zero();
    for i in 0..=c.order / 2 {
        let bz = c.m(&["b", "z"]).pow(i).scaled(&q_poch(k, i));
        let phi = c.phi(
            &[c.qs(k + i as i64), c.qs(1)],
            &[c.mq(i as i64 + 1, &["x", "y"])],
            c.m(&["b", "y"]),
        )?;
        let mut term = phi.mul(&c.inv_fin(&c.m(&["x", "z"]), i + 1)?)?;
        if per_term {
            let shifted = c.one().sub(&c.series(&c.mq(i as i64, &["x", "y"])))?;
            term = term.mul(&shifted.inverse()?)?;
        }
        sum = sum.add(&term.mul_monomial(&bz)?.truncate(c.order))?;
    }
    if per_term {
        return Ok(sum);
    }
    let pre = c
        .one()
        .sub(&c.series(&c.m(&["x", "z"])))?
        .mul(&c.one().sub(&c.series(&c.m(&["x", "y"])))?)?
        .inverse()?;
    Ok(pre.mul(&sum)?)
}

pub(super) fn t12_rhs(c: &Ctx) -> Built {
    t12_form(c, false)
}

pub(super) fn t12_per_term(c: &Ctx) -> Built {
    t12_form(c, true)
}

pub(super) fn t13_lhs(c: &Ctx) -> Built {
    double_gf(c, recip_fact)
}

pub(super) fn t13_rhs(c: &Ctx) -> Built {
    let k = c.k as i64;
    let pre = c.inf(&[c.mq(k, &["b", "z"])])?.mul(&c.inv_inf(&[
        c.m(&["x", "y"]),
        c.m(&["x", "z"]),
        c.m(&["b", "z"]),
    ])?)?;
    let phi = c.phi(
        &[c.qs(k), c.m(&["x", "z"])],
        &[c.mq(k, &["b", "z"])],
        c.m(&["b", "y"]),
    )?;
    Ok(pre.mul(&phi)?)
}

// ---- limits n -> infinity ----

pub(super) fn c1_lhs(c: &Ctx) -> Built {
    let f = c.inv_inf(&[c.m(&["a", "x"])])?;
    Ok(t_apply(&c.m(&["b"]), "x", &f)?)
}

pub(super) fn c1_rhs(c: &Ctx) -> Built {
    Ok(c.inv_inf(&[c.m(&["a", "x"]), c.m(&["a", "b"])])?)
}

pub(super) fn c2_lhs(c: &Ctx) -> Built {
    let f = c.inf(&[c.m(&["a", "x"])])?;
    Ok(t_apply(&c.m(&["b"]), "x", &f)?)
}

pub(super) fn c2_rhs(c: &Ctx) -> Built {
    t3_form(c, &[c.qs_zero(), c.qs_zero()], c.m(&["a", "x"]))
}

pub(super) fn c2_derived(c: &Ctx) -> Built {
    t3_form(c, &[c.qs_zero()], c.m(&["a", "x"]))
}

pub(super) fn c3_lhs(c: &Ctx) -> Built {
    let f = c.inv_inf(&[c.m(&["b", "x"]), c.m(&["c", "x"])])?;
    Ok(t_apply(&c.m(&["a"]), "x", &f)?)
}

pub(super) fn c3_rhs(c: &Ctx) -> Built {
    let top = c.inf(&[c.m(&["a", "b", "c", "x"])])?;
    let den = [
        c.m(&["b", "x"]),
        c.m(&["c", "x"]),
        c.m(&["a", "c"]),
        c.m(&["a", "b"]),
    ];
    Ok(top.mul(&c.inv_inf(&den)?)?)
}
