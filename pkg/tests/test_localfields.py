"""Field-pair invariants and the additive-character conductor calculus."""

import pytest

from asaiperiods.localfields import (
    AddCharData,
    FieldPair,
    conductor_zero_shift,
    trace_conductor,
    trace_zero_element_kind,
)


def test_field_pair_derived_quantities():
    u = FieldPair(3, False)
    assert u.q_E == 9 and u.e == 1 and u.f == 2
    assert u.v_E_of_unif_F == 1
    r = FieldPair(3, True, 1)
    assert r.q_E == 3 and r.e == 2 and r.f == 1
    assert r.v_E_of_unif_F == 2


def test_field_pair_validation():
    with pytest.raises(ValueError):
        FieldPair(6, False)  # not a prime power
    with pytest.raises(ValueError):
        FieldPair(1, False)
    with pytest.raises(ValueError):
        FieldPair(4, False, ext_conductor=1)  # unramified forbids it
    with pytest.raises(ValueError):
        FieldPair(5, True, ext_conductor=0)


def test_field_pair_ramified_default_conductor():
    assert FieldPair(5, True).ext_conductor == 1


def test_prime_powers_accepted():
    for q in (2, 4, 8, 9, 25, 27, 121):
        assert FieldPair(q, False).q_E == q * q


def test_q_E_half():
    u = FieldPair(2, False)
    assert u.q_E_half(2).gauss().re == 4  # q_E^1 = 4
    assert u.q_E_half(-2) == u.q_E_half(2).inverse()
    r = FieldPair(2, True, 1)
    x = r.q_E_half(1)  # sqrt(2), irrational part
    assert x * x == r.q_E_half(2)
    assert r.q_E_half(3) == r.q_E_half(1) * r.q_E_half(2)
    assert r.q_E_half(-1) * r.q_E_half(1) == r.q_E_half(0)


def test_trace_conductor_pinned_values():
    assert trace_conductor(FieldPair(3, False), 0) == 0
    assert trace_conductor(FieldPair(3, True, 1), 0) == 1
    assert trace_conductor(FieldPair(3, True, 2), 3) == 8


def test_trace_conductor_grid():
    for n_psi in range(-5, 6):
        assert trace_conductor(FieldPair(7, False), n_psi) == n_psi
        for f_ext in (1, 2, 3):
            got = trace_conductor(FieldPair(7, True, f_ext), n_psi)
            assert got == 2 * n_psi + f_ext


def test_trace_conductor_even_parity_when_ext_even():
    for n_psi in range(-5, 6):
        assert trace_conductor(FieldPair(5, True, 2), n_psi) % 2 == 0


def test_conductor_zero_shift_values():
    u = FieldPair(2, False)
    assert conductor_zero_shift(u, AddCharData(3, True)) == 3
    r = FieldPair(2, True, 2)
    assert conductor_zero_shift(r, AddCharData(4, True)) == 2


def test_conductor_zero_shift_re_derives_zero():
    # shifting by m multiplies the conductor by -m uniformizer valuations:
    # unramified subtracts m, ramified subtracts 2m
    for k in (-4, -2, 0, 2, 6):
        u = FieldPair(3, False)
        m = conductor_zero_shift(u, AddCharData(k, True))
        assert k - m == 0
        r = FieldPair(3, True, 2)
        m = conductor_zero_shift(r, AddCharData(k, True))
        assert k - 2 * m == 0


def test_conductor_zero_shift_rejects_odd_ramified():
    r = FieldPair(2, True, 1)
    with pytest.raises(ValueError, match="even conductor"):
        conductor_zero_shift(r, AddCharData(5, True))


def test_conductor_zero_shift_requires_trivial_on_F():
    with pytest.raises(ValueError, match="trivial on F"):
        conductor_zero_shift(FieldPair(2, False), AddCharData(3, False))


def test_trace_zero_element_kind():
    assert trace_zero_element_kind(FieldPair(5, False)) == "any"
    assert trace_zero_element_kind(FieldPair(5, True, 1)) == "uniformizer"
    assert trace_zero_element_kind(FieldPair(5, True, 2)) == "unit"
