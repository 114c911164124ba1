"""Capped-ideal factorization and extension chains."""

import itertools
import random

import pytest

from polyquot import (
    ChainVerificationError,
    extends_by_linear_quotients,
    NotPolymatroidalError,
    VeroneseSpec,
    chain_absorb_maximal_ideal,
    chain_absorb_monomial,
    chain_absorb_variable,
    chain_raise_caps,
    concat_chains,
    is_admissible_order,
    is_componentwise_sep,
    maximal_ideal,
    minimalize,
    product,
    satisfies_strong_exchange,
    sep_admissible_order,
    sep_factorization,
    translate,
    translate_chain,
    verify_chain,
    veronese,
)
from polyquot.families import random_componentwise_sep
from conftest import ideal, SQUARE_REGRESSION


def test_spec_normalization_and_validation():
    spec = VeroneseSpec(3, 2, (5, 1, 2))
    assert spec.caps == (2, 1, 2)  # clamped to the degree
    assert spec.ideal() == veronese(3, 2, (5, 1, 2))
    with pytest.raises(ValueError):
        VeroneseSpec(2, 3, (1, 1))  # zero ideal
    with pytest.raises(ValueError):
        VeroneseSpec(2, 2, (1,))


def test_sep_factorization_example():
    I = translate(veronese(3, 4, (1, 3, 3)), (2, 1, 0))
    u, spec = sep_factorization(I)
    assert u == (2, 1, 0)
    assert spec == VeroneseSpec(3, 4, (1, 3, 3))
    # not itself of capped form: the only candidate misses a generator
    V = veronese(3, 7, (3, 4, 3))
    assert I != V
    missing = V.gen_set - I.gen_set
    assert (0, 4, 3) in missing
    assert all(g[0] < 2 or g[1] < 1 for g in missing)


def test_sep_factorization_of_capped_ideal_is_trivial():
    # every variable is avoidable, so the gcd is 1
    V = veronese(3, 3, (2, 2, 2))
    u, spec = sep_factorization(V)
    assert u == (0, 0, 0)
    assert spec == VeroneseSpec(3, 3, (2, 2, 2))
    # caps that force a variable into every generator pull it into the factor
    forced = veronese(3, 5, (2, 2, 3))
    u, spec = sep_factorization(forced)
    assert u == (0, 0, 1)
    assert spec == VeroneseSpec(3, 4, (2, 2, 2))
    assert translate(spec.ideal(), u) == forced


def test_sep_factorization_requires_strong_exchange():
    bumped = product(maximal_ideal(4), veronese(4, 6, (3, 2, 1, 4)))
    with pytest.raises(NotPolymatroidalError):
        sep_factorization(bumped)


def test_sep_factorization_roundtrip_random():
    rng = random.Random(101)
    for _ in range(60):
        n = rng.randint(2, 3)
        d = rng.randint(1, 5)
        caps = tuple(rng.randint(1, d) for _ in range(n))
        if sum(caps) < d:
            continue
        shift = tuple(rng.randint(0, 2) for _ in range(n))
        I = translate(veronese(n, d, caps), shift)
        u, spec = sep_factorization(I)
        assert translate(spec.ideal(), u) == I


def test_veronese_ideals_have_strong_exchange():
    # exhaustive for up to three variables; the four-variable box is too
    # large for a routine run, so it gets a seeded random slice
    for n in (2, 3):
        for d in range(1, 6):
            for caps in itertools.product(range(0, 6), repeat=n):
                if sum(min(c, d) for c in caps) < d:
                    continue
                assert satisfies_strong_exchange(veronese(n, d, caps))
    rng = random.Random(103)
    for _ in range(60):
        d = rng.randint(1, 5)
        caps = tuple(rng.randint(0, 5) for _ in range(4))
        if sum(min(c, d) for c in caps) < d:
            continue
        assert satisfies_strong_exchange(veronese(4, d, caps))


def test_absorb_variable_smallest_case():
    # x * (x, y) reaches only the cap-bumped target; nothing to append
    ch = chain_absorb_variable(VeroneseSpec(2, 1, (1, 1)), 0)
    assert ch.start == ideal(2, (2, 0), (1, 1))
    assert ch.end == veronese(2, 2, (2, 1))
    assert ch.appended == ()
    # the step on to the full square appends y^2 with colon (x)
    verify_chain(ch.end, veronese(2, 2, (2, 2)), [(0, 2)])


def test_absorb_variable_squarefree_case():
    ch = chain_absorb_variable(VeroneseSpec(3, 2, (1, 1, 1)), 1)
    # no degree-3 generator of the target avoids the absorbed variable
    assert ch.appended == ()
    assert ch.start == ch.end == veronese(3, 3, (1, 2, 1))


def test_absorb_variable_desk_scale():
    ch = chain_absorb_variable(VeroneseSpec(4, 6, (3, 2, 1, 4)), 0)
    assert ch.end == veronese(4, 7, (4, 2, 1, 4))
    assert set(ch.appended) == ch.end.gen_set - ch.start.gen_set
    verify_chain(ch.start, ch.end, ch.appended)


def test_absorb_monomial_examples():
    spec = VeroneseSpec(3, 4, (1, 3, 3))
    empty = chain_absorb_monomial(spec, (0, 0, 0))
    assert empty.appended == () and empty.start == empty.end == spec.ideal()
    one = chain_absorb_monomial(spec, (1, 0, 0))
    step = chain_absorb_variable(spec, 0)
    assert one.start == step.start and one.end == step.end
    assert one.appended == step.appended
    full = chain_absorb_monomial(spec, (2, 1, 0))
    assert full.start == translate(spec.ideal(), (2, 1, 0))
    assert full.end == veronese(3, 7, (3, 4, 3))
    assert len(full.appended) == len(full.end.gens) - len(full.start.gens)


def test_raise_caps_examples():
    same = chain_raise_caps(VeroneseSpec(3, 3, (1, 2, 2)), VeroneseSpec(3, 3, (1, 2, 2)))
    assert same.appended == ()
    ch = chain_raise_caps(VeroneseSpec(3, 3, (1, 1, 2)), VeroneseSpec(3, 3, (1, 2, 2)))
    assert all(g[1] == 2 for g in ch.appended)
    big = chain_raise_caps(VeroneseSpec(4, 6, (3, 2, 1, 4)), VeroneseSpec(4, 6, (6, 6, 6, 6)))
    assert big.end == veronese(4, 6, (6, 6, 6, 6))


def test_raise_caps_requires_domination():
    with pytest.raises(ValueError):
        chain_raise_caps(VeroneseSpec(2, 3, (2, 2)), VeroneseSpec(2, 3, (1, 3)))
    with pytest.raises(ValueError):
        chain_raise_caps(VeroneseSpec(2, 3, (2, 2)), VeroneseSpec(2, 4, (2, 2)))


def test_absorb_maximal_ideal():
    rng = random.Random(107)
    for _ in range(30):
        n = rng.randint(2, 3)
        d = rng.randint(1, 4)
        caps = tuple(rng.randint(1, d) for _ in range(n))
        if sum(caps) < d:
            continue
        spec = VeroneseSpec(n, d, caps)
        ch = chain_absorb_maximal_ideal(spec)
        assert ch.start == product(maximal_ideal(n), spec.ideal())
        assert ch.end == veronese(n, d + 1, tuple(c + 1 for c in spec.caps))
    unitish = chain_absorb_maximal_ideal(VeroneseSpec(2, 0, (0, 0)))
    assert unitish.start == unitish.end == maximal_ideal(2)


def test_absorb_maximal_ideal_fallback_search_agrees():
    # the backtracking fallback must be able to produce the same extension
    # the sweep candidate provides
    rng = random.Random(131)
    for _ in range(10):
        n = rng.randint(2, 3)
        d = rng.randint(1, 3)
        caps = tuple(rng.randint(1, d) for _ in range(n))
        if sum(caps) < d:
            continue
        spec = VeroneseSpec(n, d, caps)
        start = product(maximal_ideal(n), spec.ideal())
        end = veronese(n, d + 1, tuple(c + 1 for c in spec.caps))
        res = extends_by_linear_quotients(start, end)
        assert res.status == "found"
        verify_chain(start, end, res.order)


def test_chain_concatenation_verifies():
    a = chain_raise_caps(VeroneseSpec(3, 3, (1, 1, 2)), VeroneseSpec(3, 3, (1, 2, 2)))
    b = chain_raise_caps(VeroneseSpec(3, 3, (1, 2, 2)), VeroneseSpec(3, 3, (3, 3, 3)))
    both = concat_chains(a, b)
    verify_chain(both.start, both.end, both.appended)
    with pytest.raises(ValueError):
        concat_chains(b, a)


def test_chain_translation_verifies():
    rng = random.Random(109)
    ch = chain_raise_caps(VeroneseSpec(2, 3, (1, 2)), VeroneseSpec(2, 3, (3, 3)))
    for _ in range(10):
        u = (rng.randint(0, 3), rng.randint(0, 3))
        moved = translate_chain(ch, u)
        verify_chain(moved.start, moved.end, moved.appended)


def test_verify_chain_rejects_bad_orders():
    start = ideal(2, (2, 0), (1, 1))
    end = veronese(2, 2, (2, 2))
    with pytest.raises(ChainVerificationError):
        verify_chain(end, start, [])  # not nested this way round
    with pytest.raises(ChainVerificationError):
        verify_chain(start, end, [])  # does not cover the difference
    lone = ideal(2, (3, 0))
    target = ideal(2, (3, 0), (0, 3))
    with pytest.raises(ChainVerificationError):
        verify_chain(lone, target, [(0, 3)])  # colon (x^3) is not a variable


def test_sep_admissible_order_regression_ideal():
    I = ideal(3, *SQUARE_REGRESSION)
    order = sep_admissible_order(I)
    assert is_admissible_order(order)
    assert len(order.order) == 6
    degs = [sum(g) for g in order.order]
    assert degs == sorted(degs)


def test_sep_admissible_order_equigenerated():
    V = translate(veronese(3, 3, (2, 2, 2)), (1, 0, 0))
    order = sep_admissible_order(V)
    assert order.order == tuple(sorted(V.gens, reverse=True))
    assert is_admissible_order(order)


def test_sep_admissible_order_requires_property():
    with pytest.raises(ValueError):
        sep_admissible_order(ideal(2, (3, 0), (0, 3)))


def test_sep_admissible_order_random():
    rng = random.Random(113)
    for _ in range(40):
        I = random_componentwise_sep(rng, rng.randint(2, 3), 6)
        order = sep_admissible_order(I)
        assert is_admissible_order(order)


def test_componentwise_capped_sums():
    # sums of capped ideals across degrees (componentwise capped form)
    rng = random.Random(127)
    done = 0
    while done < 20:
        n = rng.randint(2, 3)
        d1 = rng.randint(1, 3)
        caps1 = tuple(rng.randint(1, d1) for _ in range(n))
        d2 = rng.randint(d1, 5)
        caps2 = tuple(rng.randint(1, d2) for _ in range(n))
        if sum(caps1) < d1 or sum(caps2) < d2:
            continue
        I = minimalize(
            n, list(veronese(n, d1, caps1).gens) + list(veronese(n, d2, caps2).gens)
        )
        if not is_componentwise_sep(I):
            continue
        assert is_admissible_order(sep_admissible_order(I))
        done += 1
