"""Numerical model of a quadratic extension E/F of p-adic fields.

The extension is carried purely by numerical invariants: residue
cardinality q_F, whether E/F is ramified, and (when ramified) the
conductor exponent of the extension. Everything downstream depends
only on q_F, q_E, the ramification index e, the residue degree f, and
valuations; no element arithmetic in E is modeled.

Also houses the conductor calculus for additive characters: the
conductor of the trace-composed character, the shift that renormalizes
a character trivial on F to conductor zero, and the kind of trace-zero
element available.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import rat
from .scalars import AlgNum, GaussRat


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = None
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            p = d
            while m % d == 0:
                m //= d
            break
        d += 1
    if p is None:
        return True  # n itself prime
    return m == 1


@dataclass(frozen=True)
class FieldPair:
    """Quadratic extension E/F, ramified or unramified (e*f = 2)."""

    q_F: int
    ramified: bool
    ext_conductor: int | None = None

    def __post_init__(self):
        if not (isinstance(self.q_F, int) and is_prime_power(self.q_F)):
            raise ValueError("q_F must be a prime power >= 2")
        if self.ramified:
            ec = 1 if self.ext_conductor is None else self.ext_conductor
            if not (isinstance(ec, int) and ec >= 1):
                raise ValueError("ext_conductor must be a positive integer")
            object.__setattr__(self, "ext_conductor", ec)
        else:
            if self.ext_conductor is not None:
                raise ValueError("ext_conductor applies to ramified extensions only")

    @property
    def e(self) -> int:
        """Ramification index of E/F."""
        return 2 if self.ramified else 1

    @property
    def f(self) -> int:
        """Residue degree of E/F."""
        return 1 if self.ramified else 2

    @property
    def q_E(self) -> int:
        return self.q_F if self.ramified else self.q_F * self.q_F

    @property
    def v_E_of_unif_F(self) -> int:
        """Valuation in E of a uniformizer of F."""
        return self.e

    def q_F_pow(self, h: int):
        """Exact rational q_F^h."""
        return rat(self.q_F) ** h

    def q_E_half(self, h: int) -> AlgNum:
        """Exact q_E^(h/2) for integer h, as an AlgNum over sqrt(q_F).

        Unramified pairs have q_E = q_F^2, so every half power is an
        integer power of q_F; ramified pairs put odd h on the sqrt(q_F)
        component.
        """
        if not self.ramified:
            return AlgNum(GaussRat(rat(self.q_F) ** h))
        if h % 2 == 0:
            return AlgNum(GaussRat(rat(self.q_F) ** (h // 2)))
        return AlgNum(0, GaussRat(rat(self.q_F) ** ((h - 1) // 2)), self.q_F)


@dataclass(frozen=True)
class AddCharData:
    """Additive character data: conductor exponent and F-triviality flag.

    A character trivial on F over a ramified pair must have even
    conductor; the constraint is enforced where it is consumed
    (conductor_zero_shift), since the data object does not know its
    field pair.
    """

    conductor: int
    trivial_on_F: bool = False


def trace_conductor(fp: FieldPair, n_psi_prime: int) -> int:
    """Conductor of psi' composed with the trace of E/F.

    Equals n(psi') for unramified pairs and 2*n(psi') + ext_conductor
    for ramified ones.
    """
    if fp.ramified:
        return 2 * n_psi_prime + fp.ext_conductor
    return n_psi_prime


def conductor_zero_shift(fp: FieldPair, psi: AddCharData) -> int:
    """Exponent m such that x -> psi(unif_F^-m * x) has conductor zero."""
    if not psi.trivial_on_F:
        raise ValueError("shift applies to characters trivial on F")
    k = psi.conductor
    if not fp.ramified:
        return k
    if k % 2 != 0:
        raise ValueError(
            "a character trivial on F over a ramified pair has even conductor; got %d" % k
        )
    return k // 2


def trace_zero_element_kind(fp: FieldPair) -> str:
    """Kind of trace-zero element guaranteed to exist: any/uniformizer/unit."""
    if not fp.ramified:
        return "any"
    return "uniformizer" if fp.ext_conductor % 2 == 1 else "unit"
