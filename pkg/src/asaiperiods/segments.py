"""Segment data model for generic representations with character supports.

A segment (rho, k) stands for the essentially square integrable
representation attached to the length-k chain of unramified twists of
the multiplicative character rho of E*; a generic representation is a
commutative product of pairwise unlinked segments. Characters carry
their value at a uniformizer, an opaque label for the restriction to
units, and user-supplied Galois-twist data validated to be involutive.

Unramified characters are completely determined by their value at the
uniformizer and are fixed by the Galois involution, so their twist
data is forced at construction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .localfields import FieldPair
from .rational import RAT_ONE, rat
from .scalars import GaussRat

UNRAMIFIED_LABEL = "triv"
_INV_PREFIX = "inv:"


class NotGenericError(ValueError):
    """Raised when a segment multiset contains a linked pair."""


def inverse_label(label: str) -> str:
    """Designated label of the inverse character: an involutive toggle."""
    if label == UNRAMIFIED_LABEL:
        return UNRAMIFIED_LABEL
    if label.startswith(_INV_PREFIX):
        return label[len(_INV_PREFIX):]
    return _INV_PREFIX + label


@dataclass(frozen=True, eq=False)
class MultChar:
    """Multiplicative character of E* with Galois-twist data.

    unit_label identifies the restriction to units; "triv" is reserved
    for the unramified case (unit_conductor 0). at_unif is the value at
    a uniformizer of E. The sigma_* fields describe the Galois twist;
    applying them twice must return the original character, which holds
    by construction since the twist simply swaps the two data slots.
    """

    unit_label: str
    unit_conductor: int
    at_unif: GaussRat
    sigma_unit_label: str
    sigma_at_unif: GaussRat

    def __post_init__(self):
        if self.at_unif.is_zero() or self.sigma_at_unif.is_zero():
            raise ValueError("character values at the uniformizer must be nonzero")
        if self.unit_conductor < 0:
            raise ValueError("unit conductor must be >= 0")
        unram = self.unit_conductor == 0
        if unram != (self.unit_label == UNRAMIFIED_LABEL):
            raise ValueError(
                'unit_conductor 0 and unit_label "%s" must occur together' % UNRAMIFIED_LABEL
            )
        if unram:
            if self.sigma_unit_label != UNRAMIFIED_LABEL or self.sigma_at_unif != self.at_unif:
                raise ValueError("unramified characters are fixed by the Galois twist")

    @classmethod
    def unramified(cls, at_unif: GaussRat) -> "MultChar":
        return cls(UNRAMIFIED_LABEL, 0, at_unif, UNRAMIFIED_LABEL, at_unif)

    @property
    def is_unramified(self) -> bool:
        return self.unit_conductor == 0

    def key(self):
        return (self.unit_label, self.at_unif)

    def inverse(self) -> "MultChar":
        return MultChar(
            inverse_label(self.unit_label),
            self.unit_conductor,
            self.at_unif.inverse(),
            inverse_label(self.sigma_unit_label),
            self.sigma_at_unif.inverse(),
        )

    def sigma(self) -> "MultChar":
        return MultChar(
            self.sigma_unit_label,
            self.unit_conductor,
            self.sigma_at_unif,
            self.unit_label,
            self.at_unif,
        )

    # character identity is (unit restriction, value at uniformizer)
    def __eq__(self, other):
        if not isinstance(other, MultChar):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True)
class Segment:
    """The chain of k successive unramified twists topped by rho."""

    rho: MultChar
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("segment length k must be >= 1")

    @property
    def is_unramified_piece(self) -> bool:
        """True when the segment is an unramified character of GL(1)."""
        return self.k == 1 and self.rho.is_unramified

    def contragredient(self) -> "Segment":
        return Segment(self.rho.inverse(), self.k)

    def sigma(self) -> "Segment":
        return Segment(self.rho.sigma(), self.k)

    def conductor(self) -> int:
        # newform exponents: k-1 for unramified rho, k*f(rho) otherwise
        if self.rho.is_unramified:
            return self.k - 1
        return self.k * self.rho.unit_conductor


def precedes(d1: Segment, d2: Segment, q_E: int) -> bool:
    """Segment precedence: rho2 is a positive twist of rho1 in the range
    that makes the two chains linked with d1 starting lower."""
    if d1.rho.unit_label != d2.rho.unit_label:
        return False
    lo = max(1, d2.k - d1.k + 1)
    ratio = d2.rho.at_unif / d1.rho.at_unif
    step = GaussRat(rat(1, q_E))
    tw = step**lo
    for _ in range(lo, d2.k + 1):
        if ratio == tw:
            return True
        tw = tw * step
    return False


def is_generic(segments: Sequence[Segment], q_E: int) -> bool:
    """True when no pair of segments is linked (in either direction)."""
    segs = list(segments)
    for i, a in enumerate(segs):
        for j, b in enumerate(segs):
            if i != j and precedes(a, b, q_E):
                return False
    return True


def standard_order(segments: Sequence[Segment], q_E: int) -> list[Segment]:
    """Permutation in which no earlier segment precedes a later one.

    Deterministic: repeatedly selects the earliest remaining input
    segment that precedes none of the other remaining segments, so
    unlinked inputs keep their order.
    """
    remaining = list(segments)
    out = []
    while remaining:
        pick = None
        for i, cand in enumerate(remaining):
            if not any(
                precedes(cand, other, q_E) for j, other in enumerate(remaining) if j != i
            ):
                pick = i
                break
        if pick is None:
            raise RuntimeError("cycle in the precedence relation")
        out.append(remaining.pop(pick))
    return out


def _alpha_sort_key(value: GaussRat):
    # |alpha|^2 ascending; exact rational comparisons
    return value.abs2()


@dataclass(frozen=True)
class UnramifiedModule:
    """Unramified standard module given by its Satake values.

    Values are stored sorted by |alpha|^2 ascending (ties keep the
    construction order), which realizes the standard-module condition.
    r = 0 (the empty module) is legal.
    """

    fp: FieldPair
    satake: tuple[GaussRat, ...]

    def __post_init__(self):
        vals = tuple(self.satake)
        for v in vals:
            if v.is_zero():
                raise ValueError("Satake values must be nonzero")
        object.__setattr__(self, "satake", tuple(sorted(vals, key=_alpha_sort_key)))

    @property
    def r(self) -> int:
        return len(self.satake)

    def twist_by_sign(self) -> "UnramifiedModule":
        return UnramifiedModule(self.fp, tuple(-v for v in self.satake))

    def omega_at_unif(self) -> GaussRat:
        """Central character value at the F-uniformizer: prod alpha_i^e."""
        out = GaussRat(RAT_ONE)
        for v in self.satake:
            out = out * v**self.fp.e
        return out


@dataclass(frozen=True)
class GenericRep:
    """Product of pairwise unlinked segments over a fixed field pair."""

    fp: FieldPair
    segments: tuple[Segment, ...]

    def __post_init__(self):
        segs = tuple(self.segments)
        if not segs:
            raise ValueError("a representation needs at least one segment")
        object.__setattr__(self, "segments", segs)
        if not is_generic(segs, self.fp.q_E):
            raise NotGenericError("segments are linked: the product is not generic")

    @property
    def n(self) -> int:
        return sum(s.k for s in self.segments)


def is_unramified_rep(rep: GenericRep) -> bool:
    return all(s.is_unramified_piece for s in rep.segments)


def contragredient(rep: GenericRep) -> GenericRep:
    return GenericRep(rep.fp, tuple(s.contragredient() for s in rep.segments))


def sigma_twist(rep: GenericRep) -> GenericRep:
    return GenericRep(rep.fp, tuple(s.sigma() for s in rep.segments))


def _segment_key(s: Segment):
    return (s.rho.key(), s.k)


def is_conjugate_selfdual(rep: GenericRep) -> bool:
    """True when the segment multiset is closed under the twisted dual."""
    own = Counter(_segment_key(s) for s in rep.segments)
    dual = Counter(_segment_key(s.contragredient().sigma()) for s in rep.segments)
    return own == dual


def pi_u(rep: GenericRep) -> UnramifiedModule:
    """Unramified part of the cuspidal support: one Satake value per
    segment whose base character is unramified."""
    vals = [s.rho.at_unif for s in rep.segments if s.rho.is_unramified]
    return UnramifiedModule(rep.fp, tuple(vals))


def conductor(rep: GenericRep) -> int:
    return sum(s.conductor() for s in rep.segments)


def epsilon_twist_sign(rep: GenericRep, mu_at_unif: GaussRat) -> GaussRat:
    """Twisting ratio mu(unif_E)^f for an unramified twist mu, with the
    additive character normalized to conductor zero."""
    return mu_at_unif ** conductor(rep)


def asai_holomorphic_witness(rep: GenericRep) -> bool:
    """No segment precedes the twisted dual of any segment.

    The executable core of the holomorphy-at-the-edge argument for
    conjugate-self-dual generic data; requires such input.
    """
    if not is_conjugate_selfdual(rep):
        raise ValueError("witness requires conjugate-self-dual input")
    q_E = rep.fp.q_E
    duals = [s.contragredient().sigma() for s in rep.segments]
    for a in rep.segments:
        for b in duals:
            if precedes(a, b, q_E):
                return False
    return True


def make_rep(fp: FieldPair, segments: Iterable[Segment]) -> GenericRep:
    return GenericRep(fp, tuple(segments))
