"""Rational functions in t, series expansion, and series reconstruction.

RatFunc is always kept in canonical reduced form: numerator and
denominator coprime, denominator constant term equal to 1. With that
normalization componentwise equality is true equality of rational
functions.

reconstruct is the computational stand-in for analytic continuation:
it recovers the unique rational function within given degree bounds
from a long enough truncated expansion, by exact Gaussian elimination
on the linear relations satisfied by the denominator coefficients, and
then re-checks every available coefficient.
"""

from __future__ import annotations

from .scalars import ALG_ONE, ALG_ZERO, AlgNum
from .series import Poly, Series, poly_gcd


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.coeff(0).is_zero():
            raise ValueError("denominator constant term is zero (pole at t=0)")
        if num.is_zero():
            self.num = Poly.zero()
            self.den = Poly.one()
            return
        if num.degree > 0 and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        c = den.coeff(0).inverse()
        if c != ALG_ONE:
            num = num * c
            den = den * c
        self.num = num
        self.den = den

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(Poly.one())

    @classmethod
    def from_factors(cls, factors) -> "RatFunc":
        """1 / prod(1 - c*t^k) for (c, k) pairs."""
        den = Poly.one()
        for c, k in factors:
            den = den * Poly.one_minus(c, k)
        return cls(Poly.one(), den)

    @property
    def num_degree(self) -> int:
        return self.num.degree

    @property
    def den_degree(self) -> int:
        return self.den.degree

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.num, self.den * other.den)
        if isinstance(other, Poly):
            return RatFunc(self.num * other, self.den)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RatFunc((%s) / (%s))" % (self.num.to_str(), self.den.to_str())

    def substitute_power(self, k: int) -> "RatFunc":
        """Replace t by t^k (used to move between t_E and t)."""
        if k < 1:
            raise ValueError("power must be >= 1")
        if k == 1:
            return self

        def blow(p: Poly) -> Poly:
            out = [ALG_ZERO] * (k * p.degree + 1) if not p.is_zero() else []
            for i, c in enumerate(p.coeffs):
                out[k * i] = c
            return Poly(out)

        return RatFunc(blow(self.num), blow(self.den))


def series_of(rf: RatFunc, order: int) -> Series:
    """Maclaurin coefficients 0..order of rf, exact."""
    if order < 0:
        raise ValueError("order must be >= 0")
    den = rf.den.coeffs
    coeffs = [ALG_ZERO] * (order + 1)
    for k in range(order + 1):
        acc = rf.num.coeff(k)
        for j in range(1, min(k, len(den) - 1) + 1):
            dj = den[j]
            if not dj.is_zero():
                acc = acc - dj * coeffs[k - j]
        coeffs[k] = acc
    return Series(coeffs)


def eval_at(rf: RatFunc, t0) -> AlgNum:
    """Exact value at t0; raises ZeroDivisionError on a pole."""
    x = AlgNum._coerce(t0)
    if x is None:
        raise TypeError("evaluation point must be a scalar")
    d = rf.den(x)
    if d.is_zero():
        raise ZeroDivisionError("pole at evaluation point")
    return rf.num(x) / d


def _solve_exact(rows, rhs):
    """Gaussian elimination over AlgNum. rows: list of coefficient lists.

    Returns the solution with free variables set to zero, or None when
    the system is inconsistent.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    mat = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if not mat[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = mat[row][col].inverse()
        mat[row] = [x * inv for x in mat[row]]
        for r in range(m):
            if r != row and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if not mat[r][n].is_zero():
            return None
    sol = [ALG_ZERO] * n
    for r, col in enumerate(pivots):
        sol[col] = mat[r][n]
    return sol


def reconstruct(s: Series, max_num_deg: int, max_den_deg: int) -> RatFunc:
    """Unique rational function within the degree bounds matching s.

    Requires s.order >= max_num_deg + max_den_deg + 1. Raises
    ValueError("reconstruction inconsistent") when no rational function
    with the given bounds reproduces every stored coefficient.
    """
    if max_num_deg < 0 or max_den_deg < 0:
        raise ValueError("degree bounds must be >= 0")
    if s.order < max_num_deg + max_den_deg + 1:
        raise ValueError(
            "series order %d too small for degree bounds (%d, %d)"
            % (s.order, max_num_deg, max_den_deg)
        )
    c = s.coeffs
    rows = []
    rhs = []
    for j in range(max_num_deg + 1, s.order + 1):
        rows.append([(c[j - i] if j - i >= 0 else ALG_ZERO) for i in range(1, max_den_deg + 1)])
        rhs.append(-c[j])
    if max_den_deg == 0:
        for v in rhs:
            if not v.is_zero():
                raise ValueError("reconstruction inconsistent")
        sol = []
    else:
        sol = _solve_exact(rows, rhs)
        if sol is None:
            raise ValueError("reconstruction inconsistent")
    den = Poly([ALG_ONE] + list(sol))
    num_coeffs = []
    for k in range(max_num_deg + 1):
        acc = ALG_ZERO
        for i in range(0, min(k, den.degree) + 1):
            di = den.coeff(i)
            if not di.is_zero():
                acc = acc + di * c[k - i]
        num_coeffs.append(acc)
    candidate = RatFunc(Poly(num_coeffs), den)
    if series_of(candidate, s.order) != s:
        raise ValueError("reconstruction inconsistent")
    return candidate
