"""Closed-form local L-factors as exact rational functions.

Conventions: the uniform series variable is t = q_F^(-s). The
Rankin-Selberg factor is native in t_E = q_E^(-s), which equals t^2
for unramified pairs and t for ramified ones (t_E = t^f in general);
it converts on request. All factories return canonical reduced
RatFunc values and also expose their factor lists (coefficient c and
power k per factor 1 - c*t^k) for display purposes.
"""

from __future__ import annotations

from .ratfunc import RatFunc, eval_at
from .rational import rat
from .scalars import ALG_ONE, AlgNum, GaussRat
from .segments import GenericRep, UnramifiedModule, is_unramified_rep, pi_u

FactorList = list[tuple[GaussRat, int]]


def asai_factor_list(mod: UnramifiedModule) -> FactorList:
    """Denominator factors of the Asai factor of an unramified module."""
    a = mod.satake
    r = len(a)
    factors: FactorList = []
    if mod.fp.ramified:
        for i in range(r):
            for j in range(i, r):
                factors.append((a[i] * a[j], 1))
    else:
        for i in range(r):
            factors.append((a[i], 1))
        for i in range(r):
            for j in range(i + 1, r):
                factors.append((a[i] * a[j], 2))
    return factors


def asai_L(mod: UnramifiedModule) -> RatFunc:
    """Asai L-factor of an unramified module, in t = q_F^(-s)."""
    return RatFunc.from_factors(asai_factor_list(mod))


def rs_factor_list(m1: UnramifiedModule, m2: UnramifiedModule, as_t: bool = False) -> FactorList:
    fp = m1.fp
    if fp != m2.fp:
        raise ValueError("modules live over different field pairs")
    power = fp.f if as_t else 1
    return [(x * y, power) for x in m1.satake for y in m2.satake]


def rs_L(m1: UnramifiedModule, m2: UnramifiedModule, as_t: bool = False) -> RatFunc:
    """Rankin-Selberg L-factor of two unramified modules.

    Native variable is t_E; pass as_t=True to substitute t_E = t^f and
    express the factor in t.
    """
    return RatFunc.from_factors(rs_factor_list(m1, m2, as_t))


def tate_L(value_at_unif: GaussRat, power: int) -> RatFunc:
    """Tate factor 1/(1 - value * t^power) of an unramified character."""
    if power < 1:
        raise ValueError("power must be >= 1")
    return RatFunc.from_factors([(value_at_unif, power)])


def asai_L_multiplicative(mod: UnramifiedModule) -> RatFunc:
    """Asai factor assembled from the standard-module product formula:
    rank-one Asai factors (Tate factors of the restrictions to F*) times
    the Rankin-Selberg factors of the distinct pairs."""
    fp = mod.fp
    out = RatFunc.one()
    for x in mod.satake:
        restriction = x**fp.e  # value of the character restricted to F*
        out = out * tate_L(restriction, 1)
    r = mod.r
    for i in range(r):
        for j in range(i + 1, r):
            pair_i = UnramifiedModule(fp, (mod.satake[i],))
            pair_j = UnramifiedModule(fp, (mod.satake[j],))  # sigma-fixed
            out = out * rs_L(pair_i, pair_j, as_t=True)
    return out


def lstar_at_1(rep: GenericRep) -> AlgNum:
    """Normalized value at the edge point s=1, t = 1/q_F.

    For a representation that is ramified as a representation this is
    the Asai factor of the unramified support evaluated at 1/q_F; for
    an unramified representation the Asai factor is divided by the
    rank-n Tate factor first.
    """
    fp = rep.fp
    t0 = GaussRat(rat(1, fp.q_F))
    mod = pi_u(rep)
    try:
        val = eval_at(asai_L(mod), t0)
    except ZeroDivisionError:
        raise ValueError("non-holomorphic at s=1") from None
    if is_unramified_rep(rep):
        val = val * (ALG_ONE - AlgNum(t0 ** rep.n))
    return val


def kable_factorization_check(mod: UnramifiedModule) -> bool:
    """Rankin-Selberg self-pairing against the twisted-tensor square:
    RS(pi, pi^sigma) must equal Asai(pi) * Asai(pi twisted by the
    unramified quadratic character). Unramified pairs only."""
    if mod.fp.ramified:
        raise ValueError("the quadratic twist character is ramified here: out of scope")
    lhs = rs_L(mod, mod, as_t=True)  # unramified modules are sigma-fixed
    rhs = asai_L(mod) * asai_L(mod.twist_by_sign())
    return lhs == rhs
