"""Segment combinatorics: precedence, genericity, ordering, involutions,
unramified support extraction, conductor and epsilon bookkeeping."""

import random

import pytest

from asaiperiods.rational import rat
from asaiperiods.scalars import GaussRat
from asaiperiods.localfields import FieldPair
from asaiperiods.segments import (
    GenericRep,
    MultChar,
    NotGenericError,
    Segment,
    asai_holomorphic_witness,
    conductor,
    contragredient,
    epsilon_twist_sign,
    is_conjugate_selfdual,
    is_generic,
    is_unramified_rep,
    pi_u,
    precedes,
    sigma_twist,
    standard_order,
)
from asaiperiods import corpus

# q_E = 4: keeps the (3, 1/3) fixtures unlinked (1/9 is not a power of q_E)
UFP = FieldPair(2, False)
RFP = FieldPair(3, True, 1)  # q_E = 3


def uchar(p, q=1, ip=0, iq=1):
    return MultChar.unramified(GaussRat(rat(p, q), rat(ip, iq)))


def useg(p, q=1, k=1, ip=0, iq=1):
    return Segment(uchar(p, q, ip, iq), k)


def rchar(label, at, sigma_label=None, sigma_at=None, cond=1):
    sl = sigma_label if sigma_label is not None else label
    sa = sigma_at if sigma_at is not None else at
    return MultChar(label, cond, at, sl, sa)


# -- MultChar -----------------------------------------------------------


def test_multchar_unramified_constraints():
    with pytest.raises(ValueError):
        MultChar("triv", 1, GaussRat(rat(1)), "triv", GaussRat(rat(1)))
    with pytest.raises(ValueError):
        MultChar("chi", 0, GaussRat(rat(1)), "chi", GaussRat(rat(1)))
    with pytest.raises(ValueError):
        MultChar.unramified(GaussRat(rat(0)))


def test_multchar_sigma_fixed_when_unramified():
    c = uchar(5)
    assert c.sigma() == c
    assert c.inverse().at_unif == GaussRat(rat(1, 5))


def test_sigma_is_involution_on_ramified_data():
    c = rchar("eta", GaussRat(rat(2)), "etaSig", GaussRat(rat(3)))
    assert c.sigma().sigma() == c
    assert c.sigma().at_unif == GaussRat(rat(3))


# -- precedes -----------------------------------------------------------


def test_precedes_spec_instances():
    q_E = UFP.q_E
    # l range {2} when k2=2, k1=1: ratio must be q_E^-2
    assert precedes(useg(1), useg(1, q_E * q_E, k=2), q_E)
    # adjacent singletons: l=1
    assert precedes(useg(1), useg(1, q_E), q_E)
    assert not precedes(useg(1, q_E), useg(1), q_E)


def test_precedes_needs_same_unit_label():
    a = Segment(rchar("x", GaussRat(rat(1))), 1)
    b = useg(1, UFP.q_E)
    assert not precedes(a, b, UFP.q_E)
    assert not precedes(b, a, UFP.q_E)


def test_precedes_l_range_bounds():
    q_E = UFP.q_E
    # k1=2, k2=1: l range is {1} only
    assert precedes(useg(1, 1, k=2), useg(1, q_E), q_E)
    assert not precedes(useg(1, 1, k=2), useg(1, q_E * q_E), q_E)
    # k1=1, k2=3: l range {3}
    assert precedes(useg(1), useg(1, q_E**3, k=3), q_E)
    assert not precedes(useg(1), useg(1, q_E, k=3), q_E)


# -- is_generic ---------------------------------------------------------


def test_is_generic_spec_instances():
    q_E = UFP.q_E
    assert is_generic([useg(1)], q_E)
    assert not is_generic([useg(1), useg(1, q_E)], q_E)
    assert is_generic([useg(1), useg(1, q_E**3)], q_E)


def test_generic_rep_rejects_linked():
    with pytest.raises(NotGenericError):
        GenericRep(UFP, (useg(1), useg(1, UFP.q_E)))


# -- standard_order -----------------------------------------------------


def test_standard_order_forced_swap():
    q_E = UFP.q_E
    lo, hi = useg(1, q_E), useg(1)
    assert standard_order([hi, lo], q_E) == [lo, hi]
    # hi precedes lo is false, lo precedes hi is true: lo must come first


def test_standard_order_stable_on_unlinked():
    a, b = useg(2), useg(5)
    assert standard_order([a, b], UFP.q_E) == [a, b]
    assert standard_order([b, a], UFP.q_E) == [b, a]


def test_standard_order_empty():
    assert standard_order([], UFP.q_E) == []


def test_standard_order_no_earlier_precedes_later():
    rng = random.Random(404)
    q_E = UFP.q_E
    for _ in range(30):
        segs = [useg(q_E ** rng.randint(0, 3), k=rng.randint(1, 2))
                for _ in range(rng.randint(1, 5))]
        ordered = standard_order(segs, q_E)
        assert sorted(map(id, ordered)) == sorted(map(id, segs))
        for i in range(len(ordered)):
            for j in range(i + 1, len(ordered)):
                assert not precedes(ordered[i], ordered[j], q_E)


# -- involutions --------------------------------------------------------


def test_contragredient_spec_instances():
    rep = GenericRep(UFP, (useg(3, k=2),))
    assert contragredient(rep).segments[0].rho.at_unif == GaussRat(rat(1, 3))
    assert contragredient(contragredient(rep)) == rep
    z = GenericRep(UFP, (Segment(uchar(0, 1, 1, 1), 1),))  # alpha = i
    assert contragredient(z).segments[0].rho.at_unif == GaussRat(rat(0), rat(-1))


def test_sigma_twist_fixes_unramified():
    rep = GenericRep(UFP, (useg(7, k=2),))
    assert sigma_twist(rep) == rep


def test_sigma_twist_involution_on_ramified():
    c = rchar("eta", GaussRat(rat(2)), "etaSig", GaussRat(rat(5)))
    rep = GenericRep(RFP, (Segment(c, 1),))
    assert sigma_twist(sigma_twist(rep)) == rep
    assert sigma_twist(rep) != rep


def test_involutions_commute():
    c = rchar("eta", GaussRat(rat(2)), "etaSig", GaussRat(rat(5)))
    rep = GenericRep(RFP, (Segment(c, 1), useg(3)))
    assert sigma_twist(contragredient(rep)) == contragredient(sigma_twist(rep))


# -- is_conjugate_selfdual ----------------------------------------------


def test_csd_spec_instances():
    assert is_conjugate_selfdual(GenericRep(UFP, (useg(3), useg(1, 3))))
    assert not is_conjugate_selfdual(GenericRep(UFP, (useg(3),)))
    assert is_conjugate_selfdual(GenericRep(UFP, (useg(1, 1, k=2),)))


def test_csd_corpus_generators_produce_csd():
    rng = random.Random(505)
    for ramified in (False, True):
        fp = corpus.rand_field(rng, ramified)
        for _ in range(10):
            rep = corpus.csd_rep(rng, fp)
            assert is_conjugate_selfdual(rep)


# -- pi_u ---------------------------------------------------------------


def test_pi_u_steinberg():
    mod = pi_u(GenericRep(UFP, (useg(1, 1, k=2),)))
    assert mod.r == 1
    assert mod.satake == (GaussRat(rat(1)),)


def test_pi_u_all_ramified_is_empty():
    c = rchar("eta", GaussRat(rat(2)))
    mod = pi_u(GenericRep(RFP, (Segment(c, 1),)))
    assert mod.r == 0
    assert mod.satake == ()


def test_pi_u_mixed_collects_and_orders():
    c = rchar("eta", GaussRat(rat(2)))
    rep = GenericRep(UFP, (useg(5), Segment(c, 1), useg(1, 2, k=2)))
    mod = pi_u(rep)
    # |5|^2 = 25 > |1/2|^2: ascending order puts 1/2 first
    assert mod.satake == (GaussRat(rat(1, 2)), GaussRat(rat(5)))


def test_pi_u_of_unramified_rep_is_whole_rep():
    rep = GenericRep(UFP, (useg(3), useg(1, 3)))
    assert is_unramified_rep(rep)
    assert pi_u(rep).r == 2


def test_unramified_module_ordering_invariant():
    mod = corpus.rand_module(random.Random(1), UFP, 5)
    for i in range(mod.r - 1):
        assert mod.satake[i].abs2() <= mod.satake[i + 1].abs2()


# -- conductor ----------------------------------------------------------


def test_conductor_values():
    assert conductor(GenericRep(UFP, (useg(3), useg(1, 3)))) == 0
    assert conductor(GenericRep(UFP, (useg(1, 1, k=2),))) == 1
    c = rchar("eta", GaussRat(rat(2)), cond=2)
    assert conductor(GenericRep(RFP, (Segment(c, 3),))) == 6


def test_conductor_additive_over_segments():
    c = rchar("eta", GaussRat(rat(2)), cond=1)
    rep = GenericRep(UFP, (useg(1, 1, k=2), Segment(c, 2)))
    assert conductor(rep) == 1 + 2


# -- epsilon_twist_sign --------------------------------------------------


def test_epsilon_twist_sign():
    minus = GaussRat(rat(-1))
    plus = GaussRat(rat(1))
    even = GenericRep(RFP, (Segment(rchar("eta", GaussRat(rat(2)), cond=2), 1),))
    assert conductor(even) == 2
    assert epsilon_twist_sign(even, minus) == plus
    steinberg = GenericRep(UFP, (useg(1, 1, k=2),))
    assert epsilon_twist_sign(steinberg, minus) == minus
    assert epsilon_twist_sign(steinberg, plus) == plus


def test_epsilon_parity_matches_conductor_parity():
    rng = random.Random(606)
    minus = GaussRat(rat(-1))
    for _ in range(20):
        rep = corpus.ramified_rep(rng, corpus.rand_field(rng, bool(rng.getrandbits(1))))
        sign = epsilon_twist_sign(rep, minus)
        expect = GaussRat(rat(1)) if conductor(rep) % 2 == 0 else minus
        assert sign == expect


# -- asai_holomorphic_witness --------------------------------------------


def test_witness_spec_instances():
    assert asai_holomorphic_witness(GenericRep(UFP, (useg(3), useg(1, 3))))
    assert asai_holomorphic_witness(GenericRep(UFP, (useg(1, 1, k=2),)))


def test_witness_requires_csd():
    with pytest.raises(ValueError, match="conjugate-self-dual"):
        asai_holomorphic_witness(GenericRep(UFP, (useg(3),)))


def test_witness_true_on_csd_corpus():
    rng = random.Random(707)
    for ramified in (False, True):
        fp = corpus.rand_field(rng, ramified)
        for _ in range(25):
            assert asai_holomorphic_witness(corpus.csd_rep(rng, fp))
