import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockzero.ring import (
    FactoredElement,
    ModulusContext,
    PreconditionError,
    factorize,
    is_cubic_residue,
    is_prime,
    mod_factor,
    pow_cycle,
    sqrt_3mod4,
)


def test_factorize_basics():
    assert factorize(12) == ((2, 2), (3, 1))
    assert factorize(7) == ((7, 1),)
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    with pytest.raises(PreconditionError):
        factorize(1)


@given(st.integers(min_value=2, max_value=5000))
def test_factorize_reconstructs(n):
    fac = factorize(n)
    prod = 1
    for p, e in fac:
        assert is_prime(p)
        assert e >= 1
        prod *= p**e
    assert prod == n
    assert [p for p, _ in fac] == sorted({p for p, _ in fac})


def test_mod_factor_examples():
    ctx = ModulusContext(12)
    assert mod_factor(8, ctx) == FactoredElement(False, 1, (3, 0))
    assert mod_factor(6, ctx) == FactoredElement(False, 1, (1, 1))
    assert mod_factor(0, ctx).is_zero


def test_mod_factor_round_trip_exhaustive():
    for n in range(2, 61):
        ctx = ModulusContext(n)
        for a in range(n):
            f = mod_factor(a, ctx)
            assert f.reconstruct(ctx) == a
            if not f.is_zero:
                assert all(e <= ctx.alpha_bound for e in f.exponents)


def test_alpha_bound_dominates_exponents():
    for n in range(2, 200):
        ctx = ModulusContext(n)
        assert ctx.alpha_bound >= max(e for _, e in ctx.factorization)


def test_pow_cycle_examples():
    pc = pow_cycle(2, ModulusContext(4))
    assert (pc.preperiod, pc.cycle_len) == (1, 1)
    pc = pow_cycle(3, ModulusContext(7))
    assert (pc.preperiod, pc.cycle_len) == (0, 6)
    pc = pow_cycle(1, ModulusContext(5))
    assert (pc.preperiod, pc.cycle_len) == (0, 1)


def test_pow_cycle_sound_and_minimal_exhaustive():
    for n in range(2, 31):
        ctx = ModulusContext(n)
        for g in range(n):
            pc = pow_cycle(g, ctx)
            a, b = pc.preperiod, pc.cycle_len
            seq = [pow(g, k + 1, n) for k in range(a + 2 * b + 2)]
            assert seq[a + b] == seq[a]

            def holds(a2, b2):
                # window long enough to reach well inside the true cycle
                return all(
                    pow(g, k + b2 + 1, n) == pow(g, k + 1, n)
                    for k in range(a2, a + 2 * (b + b2 + 1))
                )

            assert holds(a, b)
            # alpha minimal, then beta minimal for that alpha
            assert not any(holds(a2, b) for a2 in range(a))
            assert not any(holds(a, b2) for b2 in range(1, b))


def test_sqrt_3mod4_examples():
    assert sqrt_3mod4(4, 7) == 2
    assert sqrt_3mod4(3, 7) is None
    assert sqrt_3mod4(0, 7) == 0
    with pytest.raises(PreconditionError):
        sqrt_3mod4(1, 13)  # 13 = 1 mod 4
    with pytest.raises(PreconditionError):
        sqrt_3mod4(1, 15)  # not prime


def test_sqrt_3mod4_against_square_tables():
    for p in range(3, 100, 4):
        if not is_prime(p):
            continue
        squares = {x * x % p for x in range(p)}
        for a in range(p):
            r = sqrt_3mod4(a, p)
            if a in squares:
                assert r is not None and r * r % p == a
            else:
                assert r is None


def test_is_cubic_residue_examples():
    assert is_cubic_residue(6, 7)
    assert not is_cubic_residue(4, 7)
    assert is_cubic_residue(4, 5)  # p = 2 mod 3: everything is a cube


def test_is_cubic_residue_against_cube_tables():
    for p in range(2, 100):
        if not is_prime(p):
            continue
        cubes = {pow(x, 3, p) for x in range(p)}
        for a in range(p):
            assert is_cubic_residue(a, p) == (a in cubes)


def test_inverse_table():
    ctx = ModulusContext(12)
    for u in (1, 5, 7, 11):
        assert ctx.inv(u) * u % 12 == 1
    with pytest.raises(PreconditionError):
        ctx.inv(6)
