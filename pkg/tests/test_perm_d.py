"""Unit and property tests for the even-signed permutation module."""

import doctest
import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxcodes import perm_b, perm_d


def all_even_signed(n):
    for base in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                yield tuple(v * e for v, e in zip(base, signs))


def all_codes_d(n):
    return itertools.product(
        (1,), *([c for c in range(-i, i + 1) if c != 0] for i in range(2, n + 1))
    )


@st.composite
def even_signed_perms(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    base = draw(st.permutations(list(range(1, n + 1))))
    signs = [draw(st.sampled_from((1, -1))) for _ in range(n)]
    if signs.count(-1) % 2:
        signs[0] = -signs[0]
    return tuple(v * e for v, e in zip(base, signs))


def test_doctests():
    assert doctest.testmod(perm_d).failed == 0


def test_validate_even_signed():
    assert perm_d.validate_even_signed([-2, -1]) == (-2, -1)
    with pytest.raises(ValueError):
        perm_d.validate_even_signed([-1, 2])
    with pytest.raises(ValueError):
        perm_d.validate_even_signed([1, 1])


def test_apply_generator():
    e = perm_b.identity(4)
    assert perm_d.apply_generator(e, 1, 3) == (3, 2, 1, 4)
    assert perm_d.apply_generator(e, -1, 3) == (-3, 2, -1, 4)
    # the composite move negates places 1 and j
    assert perm_d.apply_generator(e, -3, 3) == (-1, 2, -3, 4)
    assert perm_d.apply_generator((2, -4, 5, -1, -3), -5, 5) == (-2, -4, 5, -1, 3)
    # (j, j) is an accepted identity marker
    assert perm_d.apply_generator(e, 3, 3) == e
    with pytest.raises(ValueError):
        perm_d.apply_generator(e, 4, 3)
    with pytest.raises(ValueError):
        perm_d.apply_generator(e, 0, 2)


def test_inv_d_golden():
    assert perm_d.inv_d((2, -4, 5, -1, -3)) == 11
    assert perm_d.inv_d(perm_b.identity(4)) == 0
    assert perm_d.inv_d((-2, -1)) == 1


def test_inv_d_is_b_minus_negatives():
    for n in range(2, 5):
        for s in all_even_signed(n):
            assert perm_d.inv_d(s) == perm_b.inv_b(s) - perm_b.neg_count(s)


def test_sor_d_golden():
    s = (-2, -4, 5, -1, -3)
    assert perm_d.sor_d(s) == 11
    assert perm_d.sor_d_prime(s) == 11
    assert perm_d.cosort_factorization(s) == ((1, 2), (-3, 3), (-2, 4), (3, 5))
    assert perm_d.sor_d(perm_b.identity(3)) == 0


def test_cosort_reconstructs():
    for n in range(2, 5):
        for s in all_even_signed(n):
            factors = perm_d.cosort_factorization(s)
            js = [j for _, j in factors]
            assert js == sorted(js) and len(set(js)) == len(js)
            acc = perm_b.identity(n)
            for a, j in factors:  # successive right multiplications
                acc = perm_d.apply_generator(acc, a, j)
            assert acc == s


def test_sor_d_prime_equals_sor_d_exhaustive():
    for n in range(2, 6):
        for s in all_even_signed(n):
            assert perm_d.sor_d_prime(s) == perm_d.sor_d(s)


def test_nmin_d_golden():
    assert perm_d.nmin_d((2, -4, 5, 1, -3)) == 4
    assert perm_d.nmin_d(perm_b.identity(4)) == 0


def test_reflection_length_golden():
    assert perm_d.reflection_length_d((-2, -4, 5, -1, -3)) == 4
    assert perm_d.reflection_length_d(perm_b.identity(4)) == 0


def test_ecode_golden():
    assert perm_d.ecode_encode((2, -4, 5, 1, -3)) == (1, 1, -3, -2, 3)
    assert perm_d.ecode_decode((1, 1, -3, -2, 3)) == (2, -4, 5, 1, -3)


def test_fcode_golden():
    assert perm_d.fcode_encode((-2, -4, 5, -1, -3)) == (1, 1, -3, -2, 3)
    assert perm_d.fcode_decode((1, 1, -3, -2, 3)) == (-2, -4, 5, -1, -3)


def test_validate_code_d():
    perm_d.validate_code_d((1, -2, 3))
    with pytest.raises(ValueError):
        perm_d.validate_code_d((2, 1))
    with pytest.raises(ValueError):
        perm_d.validate_code_d((1, 0))
    with pytest.raises(ValueError):
        perm_d.validate_code_d((1, 3))


def test_rho_golden():
    assert perm_d.rho((2, -4, 5, 1, -3)) == (-2, -4, 5, -1, -3)
    assert perm_d.rho_inverse((-2, -4, 5, -1, -3)) == (2, -4, 5, 1, -3)


def test_code_round_trips_exhaustive():
    for n in range(2, 6):
        group = list(all_even_signed(n))
        for s in group:
            assert perm_d.ecode_decode(perm_d.ecode_encode(s)) == s
            assert perm_d.fcode_decode(perm_d.fcode_encode(s)) == s
        # decode is a bijection from the full code space onto the group
        seen_e = set()
        seen_f = set()
        for code in all_codes_d(n):
            e = perm_d.ecode_decode(code)
            f = perm_d.fcode_decode(code)
            assert perm_d.ecode_encode(e) == code
            assert perm_d.fcode_encode(f) == code
            seen_e.add(e)
            seen_f.add(f)
        assert len(seen_e) == len(group)
        assert len(seen_f) == len(group)


def test_statistics_from_codes_exhaustive():
    for n in range(2, 6):
        for s in all_even_signed(n):
            e = perm_d.ecode_encode(s)
            assert perm_d.inv_d(s) == sum(
                r - er - (2 if er < 0 else 0) for r, er in enumerate(e, 1)
            )
            assert perm_d.nmin_d(s) == n - sum(
                1 for r, er in enumerate(e, 1) if er == r
            )
            f = perm_d.fcode_encode(s)
            assert perm_d.sor_d(s) == sum(
                r - fr - (2 if fr < 0 else 0) for r, fr in enumerate(f, 1)
            )
            assert perm_d.reflection_length_d(s) == n - sum(
                1 for r, fr in enumerate(f, 1) if fr == r
            )


def test_rho_transport_exhaustive():
    for n in range(2, 6):
        count = 0
        images = set()
        for s in all_even_signed(n):
            count += 1
            t = perm_d.rho(s)
            images.add(t)
            assert perm_d.inv_d(s) == perm_d.sor_d(t)
            assert perm_d.nmin_d(s) == perm_d.reflection_length_d(t)
            assert perm_d.rho_inverse(t) == s
        assert len(images) == count


@given(even_signed_perms())
def test_round_trips_random(s):
    assert perm_d.ecode_decode(perm_d.ecode_encode(s)) == s
    assert perm_d.fcode_decode(perm_d.fcode_encode(s)) == s


@given(even_signed_perms())
def test_sor_d_prime_random(s):
    assert perm_d.sor_d_prime(s) == perm_d.sor_d(s)


@given(even_signed_perms())
def test_rho_transport_random(s):
    t = perm_d.rho(s)
    assert perm_d.inv_d(s) == perm_d.sor_d(t)
    assert perm_d.nmin_d(s) == perm_d.reflection_length_d(t)
    assert perm_d.rho_inverse(t) == s


@given(even_signed_perms())
def test_code_formulas_random(s):
    e = perm_d.ecode_encode(s)
    f = perm_d.fcode_encode(s)
    assert perm_d.inv_d(s) == sum(
        r - er - (2 if er < 0 else 0) for r, er in enumerate(e, 1)
    )
    assert perm_d.sor_d(s) == sum(
        r - fr - (2 if fr < 0 else 0) for r, fr in enumerate(f, 1)
    )
