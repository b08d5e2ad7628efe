use alloc::vec;
use alloc::vec::Vec;

use super::builders::*;
use super::{IdentitySpec, ParamUse, Params, Variant};

fn any(_: Params) -> bool {
    true
}

fn k_at_most_n(p: Params) -> bool {
    p.k.unwrap_or(0) <= p.n.unwrap_or(0)
}

fn n_positive(p: Params) -> bool {
    p.n.unwrap_or(0) >= 1
}

const SKIP_T6: &str = "skipped: uses (1\\ominus_{1,1}qxy)_{q}^{(-k-1)} and Theta_0(xy,q^{-1}), \
notation that is not defined here; the limit computation that follows it is left unfinished";

const NOTE_T10: &str =
    "printed right-hand side does not contain a, the parameter of the operator H_n(aD_q)";

const NOTE_I3: &str =
    "(a^{q}q^{1-n};q)_k read as (a^{-1}q^{1-n};q)_k; both sides multiplied by a^k \
to clear negative powers of a";

/// Every audited identity, in a fixed order.
pub fn catalog() -> Vec<IdentitySpec> {
    let e = |id, description, location, anchor, vars, params, sides, variants: Vec<Variant>| {
        IdentitySpec {
            id,
            description,
            location,
            anchor,
            vars,
            params,
            sides: Some(sides),
            variants,
            note: "",
            admits: any,
        }
    };
    let v = |label, build| Variant { label, build };
    let mut out = vec![
        e(
            "I1",
            "finite Pochhammer symbol as a ratio of infinite ones",
            "preliminaries",
            r"(a;q)_{n}&=\frac{(a;q)_{\infty}}{(aq^n;q)_{\infty}}",
            &["a"],
            ParamUse::N,
            (i1_lhs, i1_rhs),
            vec![],
        ),
        e(
            "I2",
            "splitting a finite Pochhammer symbol",
            "preliminaries",
            r"(a;q)_{n+k}&=(a;q)_{n}(aq^n;q)_{k}",
            &["a"],
            ParamUse::NK,
            (i2_lhs, i2_rhs),
            vec![],
        ),
        IdentitySpec {
            note: NOTE_I3,
            admits: k_at_most_n,
            ..e(
                "I3",
                "Pochhammer symbol of length n-k",
                "preliminaries",
                r"(-qa^{-1})^{k}q^{\binom{k}{2}-nk}",
                &["a"],
                ParamUse::NK,
                (i3_lhs, i3_rhs),
                vec![],
            )
        },
        e(
            "I4",
            "Leibniz rule for D_q^n on a fixed pair of polynomials",
            "preliminaries",
            r"D_{q}^{n}\{f(x)g(x)\}",
            &["x"],
            ParamUse::N,
            (i4_lhs, i4_rhs),
            vec![
                v(
                    "q^{k(n-k)} with the shift applied after differentiating",
                    i4_shift_after,
                ),
                v(
                    "q^{k(k-n)} with D_q^{n-k} applied to g(q^k x)",
                    i4_proof_form,
                ),
            ],
        ),
        e(
            "I5",
            "q-binomial theorem",
            "preliminaries",
            r"{}_1\phi_{0}(a;q,z)=\frac{(az;q)_{\infty}}{(z;q)_{\infty}}",
            &["a", "z"],
            ParamUse::None,
            (i5_lhs, i5_rhs),
            vec![],
        ),
        IdentitySpec {
            admits: n_positive,
            ..e(
                "I6",
                "Heine binomial formula",
                "Heine operators",
                r"\frac{1}{(x;q)_{n}}=\sum_{k=0}^{\infty}\genfrac{[}{]}{0pt}{}{n+k-1}{k}_{q}x^k",
                &["x"],
                ParamUse::N,
                (i6_lhs, i6_rhs),
                vec![],
            )
        },
        e(
            "T1",
            "H_n(bD_q) on x^m gives the Hahn polynomial, summed over m",
            "Heine operators",
            r"\Phi_{m}^{(q^n)}(b,x|q)=\sum",
            &["b", "x"],
            ParamUse::N,
            (t1_lhs, t1_rhs),
            vec![],
        ),
        e(
            "T2",
            "H_n(bD_q) on 1/(ax;q)_inf",
            "operator actions",
            r"\frac{(q^nab;q)_{\infty}}{(ax,ab;q)_{\infty}}",
            &["a", "b", "x"],
            ParamUse::N,
            (t2_lhs, t2_rhs),
            vec![],
        ),
        e(
            "T3",
            "H_n(bD_q) on (ax;q)_inf",
            "operator actions",
            r"(ax;q)_{\infty}{}_{2}\varphi_{1}",
            &["a", "b", "x"],
            ParamUse::N,
            (t3_lhs, t3_rhs),
            vec![
                v("2phi1(q^n,0;ax;q,ab) as in the proof", t3_proof),
                v("(ax;q)_inf 1phi1(q^n;ax;q,ab)", t3_derived),
            ],
        ),
        e(
            "T4",
            "H_n(aD_q) on 1/(bx,cx;q)_inf",
            "operator actions",
            r"\frac{(q^{n}ac;q)_{\infty}}{(bx,cx,ac;q)_{\infty}}",
            &["a", "b", "c", "x"],
            ParamUse::N,
            (t4_lhs, t4_rhs),
            vec![],
        ),
        e(
            "T5",
            "H_n(dD_q) on (cx;q)_inf/(ax,bx;q)_inf",
            "operator actions",
            r"\Phi_{m}^{(bx)}(a,b)c^{l-m}",
            &["a", "b", "c", "d", "x"],
            ParamUse::N,
            (t5_lhs, t5_rhs),
            vec![
                v("d^l in place of b^l as in the proof", t5_proof),
                v("d^l with (-1)^{l-m} q^{binom(l-m,2)} c^{l-m}", t5_derived),
            ],
        ),
        IdentitySpec {
            sides: None,
            note: SKIP_T6,
            ..e(
                "T6",
                "generating function weighted by q^{-binom(k,2)}",
                "generating functions",
                r"(1\ominus_{1,1}qxy)_{q}^{(-k-1)}",
                &["b", "x", "y"],
                ParamUse::N,
                (t7_lhs, t7_rhs),
                vec![],
            )
        },
        e(
            "T7",
            "ordinary generating function of the Hahn polynomials",
            "generating functions",
            r"\frac{1}{1-xy}{}_{2}\varphi_{1}",
            &["b", "x", "y"],
            ParamUse::N,
            (t7_lhs, t7_rhs),
            vec![],
        ),
        e(
            "T8",
            "q-exponential generating function",
            "generating functions",
            r"\frac{(q^{n}by;q)_{\infty}}{(xy,by;q)_{\infty}}",
            &["b", "x", "y"],
            ParamUse::N,
            (t8_lhs, t8_rhs),
            vec![],
        ),
        e(
            "T9",
            "generating function weighted by q^{binom(m,2)}/(q;q)_m",
            "generating functions",
            r"q^{\binom{m}{2}}\Phi_{m}^{(q^n)}(b,x|q)",
            &["b", "x", "y"],
            ParamUse::N,
            (t9_lhs, t9_rhs),
            vec![
                v("(xy;q)_inf 2phi1(q^n,0;xy;q,by) as in the proof", t9_proof),
                v("(-xy;q)_inf 1phi1(q^n;-xy;q,-by)", t9_derived),
            ],
        ),
        IdentitySpec {
            note: NOTE_T10,
            ..e(
                "T10",
                "Mehler-type formula, ordinary weights",
                "Mehler-type formulas",
                r"(q^k;q)_{m}(q;q)_{m}(bz)^m",
                &["a", "b", "x", "y", "z"],
                ParamUse::NK,
                (t10_lhs, t10_rhs),
                vec![],
            )
        },
        e(
            "T11",
            "Mehler-type formula, weights 1/(q;q)_m",
            "Mehler-type formulas",
            r"\Phi_{l}^{(bxz)}(yz,bz)(q^kbz)^{m-l}",
            &["a", "b", "x", "y", "z"],
            ParamUse::NK,
            (t11_lhs, t11_rhs),
            vec![
                v("a^m in place of (bz)^m", t11_operator_parameter),
                v(
                    "a^m with (-1)^{m-l} q^{binom(m-l,2)} (q^k bz)^{m-l}",
                    t11_derived,
                ),
            ],
        ),
        e(
            "T12",
            "Rogers-type formula, ordinary weights",
            "Rogers-type formulas",
            r"\frac{(q^k;q)_{i}(bz)^i}{(xz;q)_{i+1}}",
            &["b", "x", "y", "z"],
            ParamUse::K,
            (t12_lhs, t12_rhs),
            vec![v(
                "1/(1-q^i xy) inside the sum over i, no global prefactor",
                t12_per_term,
            )],
        ),
        e(
            "T13",
            "Rogers-type formula, weights 1/((q;q)_n (q;q)_m)",
            "Rogers-type formulas",
            r"\frac{(q^{k}bz;q)_{\infty}}{(yx,xz,bz;q)_{\infty}}",
            &["b", "x", "y", "z"],
            ParamUse::K,
            (t13_lhs, t13_rhs),
            vec![],
        ),
        e(
            "C1",
            "T(bD_q) on 1/(ax;q)_inf",
            "limits of the operator actions",
            r"\frac{1}{(ax,ab;q)_{\infty}}",
            &["a", "b", "x"],
            ParamUse::None,
            (c1_lhs, c1_rhs),
            vec![],
        ),
        e(
            "C2",
            "T(bD_q) on (ax;q)_inf",
            "limits of the operator actions",
            r"{}_{2}\varphi_{1}\left(\begin{array}{c} 0,0",
            &["a", "b", "x"],
            ParamUse::None,
            (c2_lhs, c2_rhs),
            vec![v("(ax;q)_inf 1phi1(0;ax;q,ab)", c2_derived)],
        ),
        e(
            "C3",
            "T(aD_q) on 1/(bx,cx;q)_inf",
            "limits of the operator actions",
            r"\frac{(a b cx;q)_{\infty}}{(bx,cx,ac,ab;q)_{\infty}}",
            &["a", "b", "c", "x"],
            ParamUse::None,
            (c3_lhs, c3_rhs),
            vec![],
        ),
    ];
    out.shrink_to_fit();
    out
}
