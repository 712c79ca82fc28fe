"""Lattice-sum period integrals and theorem-level verification reports.

The three integrals in scope (the twisted-tensor integral against the
standard lattice Schwartz function, the mirabolic period, and the
Rankin-Selberg pairing) all collapse under the Iwasawa decomposition
to sums over dominant cocharacter lattices, with all compact volumes
normalized to one. Each sum is truncated by total t-degree, which is
exact: every omitted term has strictly larger degree. Analytic
continuation is implemented as exact rational reconstruction of the
truncated series followed by evaluation, never by summing at a point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lfactors import asai_L, lstar_at_1, rs_L
from .ratfunc import RatFunc, eval_at, reconstruct, series_of
from .rational import rat
from .scalars import ALG_ONE, ALG_ZERO, AlgNum, GaussRat
from .segments import (
    GenericRep,
    UnramifiedModule,
    contragredient,
    epsilon_twist_sign,
    is_conjugate_selfdual,
    is_unramified_rep,
    pi_u,
)
from .series import Poly, Series
from .whittaker import essential_value, modulus_exponent, spherical_value


def _partitions(total: int, max_parts: int, cap: int | None = None):
    """Weakly decreasing positive tuples with sum total, at most
    max_parts parts; () for total 0."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    first = total if cap is None else min(total, cap)
    for head in range(first, 0, -1):
        for tail in _partitions(total - head, max_parts - 1, head):
            yield (head,) + tail


def flicker_series(mod: UnramifiedModule, order: int) -> Series:
    """Twisted-tensor integral of the spherical vector against the unit
    lattice function, as a truncated series in t = q_F^(-s).

    Iwasawa form: sum over dominant lam >= 0 in Z^r of the spherical
    value at e*lam times q_F^(modulus exponent of lam) times t^|lam|.
    """
    fp, m, e = mod.fp, mod.r, mod.fp.e
    coeffs = [ALG_ZERO] * (order + 1)
    for d in range(order + 1):
        acc = ALG_ZERO
        for part in _partitions(d, m):
            lam = part + (0,) * (m - len(part))
            term = spherical_value(mod, tuple(e * x for x in lam))
            if not term.is_zero():
                acc = acc + term * fp.q_F_pow(modulus_exponent(lam))
        coeffs[d] = acc
    return Series(coeffs)


def _mirabolic_unramified(mod: UnramifiedModule, order: int) -> Series:
    fp, n, e = mod.fp, mod.r, mod.fp.e
    if n <= 1:
        return Series.constant(ALG_ONE, order)
    coeffs = [ALG_ZERO] * (order + 1)
    for d in range(order + 1):
        acc = ALG_ZERO
        for part in _partitions(d, n - 1):
            lam = part + (0,) * (n - 1 - len(part))
            w = spherical_value(mod, tuple(e * x for x in lam) + (0,))
            if not w.is_zero():
                acc = acc + w * fp.q_F_pow(modulus_exponent(lam) + d)
        coeffs[d] = acc
    return Series(coeffs)


def _mirabolic_ramified(rep: GenericRep, order: int) -> Series:
    fp, n = rep.fp, rep.n
    e = fp.e
    r = pi_u(rep).r
    if n == 1:
        return Series.constant(ALG_ONE, order)
    coeffs = [ALG_ZERO] * (order + 1)
    for d in range(order + 1):
        acc = ALG_ZERO
        for part in _partitions(d, r):
            lam = part + (0,) * (n - 1 - len(part))
            w = essential_value(rep, tuple(e * x for x in lam))
            if not w.is_zero():
                acc = acc + w * fp.q_F_pow(modulus_exponent(lam) + d)
        coeffs[d] = acc
    return Series(coeffs)


def mirabolic_series(rep, order: int) -> Series:
    """Mirabolic period sum over the F-points of the (n-1)-torus, with
    the determinant twist |det|^(s-1), as a series in t = q_F^(-s).

    Accepts a GenericRep (spherical route when it is unramified as a
    representation, essential-vector route otherwise) or a bare
    UnramifiedModule.
    """
    if isinstance(rep, UnramifiedModule):
        return _mirabolic_unramified(rep, order)
    if isinstance(rep, GenericRep):
        if is_unramified_rep(rep):
            return _mirabolic_unramified(pi_u(rep), order)
        return _mirabolic_ramified(rep, order)
    raise TypeError("expected GenericRep or UnramifiedModule")


def rs_series(m1: UnramifiedModule, m2: UnramifiedModule, order: int) -> Series:
    """Rankin-Selberg pairing of the two spherical vectors over the
    E-points of the (n-1)-torus, as a series in t_E = q_E^(-s)."""
    if m1.fp != m2.fp:
        raise ValueError("modules live over different field pairs")
    if m1.r != m2.r + 1:
        raise ValueError("rank mismatch: need modules of ranks n and n-1")
    fp = m1.fp
    n = m1.r
    coeffs = [ALG_ZERO] * (order + 1)
    for d in range(order + 1):
        acc = ALG_ZERO
        for part in _partitions(d, n - 1):
            lam = part + (0,) * (n - 1 - len(part))
            w1 = spherical_value(m1, lam + (0,))
            if w1.is_zero():
                continue
            w2 = spherical_value(m2, lam)
            if w2.is_zero():
                continue
            weight = fp.q_E_half(2 * modulus_exponent(lam) + d)
            acc = acc + w1 * w2 * weight
        coeffs[d] = acc
    return Series(coeffs)


@dataclass
class PeriodReport:
    """Outcome of one period computation against its closed form."""

    series: Series
    reconstructed: RatFunc | None
    closed_form: RatFunc
    match: bool
    value_at_1: AlgNum | None  # None encodes a pole at the edge point


def closed_form_for(rep: GenericRep) -> RatFunc:
    """Closed form of the mirabolic period series: the Asai factor of
    the unramified support, times (1 - t^n) when the representation is
    unramified (the rank-n Tate factor moves to the other side)."""
    cf = asai_L(pi_u(rep))
    if is_unramified_rep(rep):
        cf = cf * RatFunc(Poly.one_minus(GaussRat(1), rep.n))
    return cf


def verify_theorem1(rep: GenericRep, order: int) -> PeriodReport:
    """Check the mirabolic period series against its closed form.

    The report carries the truncated series, its rational
    reconstruction (None when reconstruction fails), the closed form,
    the match flag (series and reconstruction both agree), and the
    exact edge value (None on a pole).
    """
    series = mirabolic_series(rep, order)
    cf = closed_form_for(rep)
    bounds = (cf.num_degree, cf.den_degree)
    if order < bounds[0] + bounds[1] + 1:
        raise ValueError(
            "order %d too small to certify reconstruction with bounds %r" % (order, bounds)
        )
    try:
        rec = reconstruct(series, bounds[0], bounds[1])
    except ValueError:
        rec = None
    match = series == series_of(cf, order) and rec == cf
    try:
        v1 = lstar_at_1(rep)
    except ValueError:
        v1 = None
    return PeriodReport(series, rec, cf, match, v1)


def verify_c_pi(rep: GenericRep) -> bool:
    """Endpoint check that the two natural invariant forms agree.

    Preconditions: the representation must be conjugate-self-dual.
    Verifies that the unramified supports of the representation and its
    contragredient coincide as multisets, that their edge values agree,
    and, over a ramified pair, that the quadratic epsilon twisting sign
    is +1 (the even-conductor obstruction vanishes).
    """
    if not is_conjugate_selfdual(rep):
        raise ValueError("not distinguished-compatible")
    dual = contragredient(rep)
    own = sorted(((v.re, v.im) for v in pi_u(rep).satake))
    other = sorted(((v.re, v.im) for v in pi_u(dual).satake))
    if own != other:
        return False
    if lstar_at_1(rep) != lstar_at_1(dual):
        return False
    if rep.fp.ramified:
        if epsilon_twist_sign(rep, GaussRat(-1)) != GaussRat(1):
            return False
    return True


def essential_rs_check(rep: GenericRep, t_module: UnramifiedModule, order: int) -> bool:
    """Rankin-Selberg pairing of an unramified representation against a
    rank n-1 module agrees with the closed-form factor through the
    requested order."""
    if not is_unramified_rep(rep):
        raise ValueError("out of scope: the pairing is modeled for unramified reps only")
    mod = pi_u(rep)
    return rs_series(mod, t_module, order) == series_of(rs_L(mod, t_module), order)


def lattice_value_at(rep: GenericRep, s: int) -> AlgNum:
    """Exact closed-form value of the mirabolic period at integer s >= 1,
    t = q_F^(-s). Raises ZeroDivisionError on a pole."""
    if s < 1:
        raise ValueError("s must be a positive integer")
    t0 = GaussRat(rat(1, rep.fp.q_F)) ** s
    return eval_at(closed_form_for(rep), t0)
