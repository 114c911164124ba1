"""Exchange predicates against the worked examples and small exhaustive boxes."""

import itertools
import random

import pytest

from polyquot import (
    DualExchangeViolationError,
    NotEquigeneratedError,
    NotPolymatroidalError,
    ZeroIdealError,
    contains,
    exchange_walk,
    graded_component,
    is_componentwise_polymatroidal,
    is_componentwise_sep,
    is_polymatroidal,
    maximal_ideal,
    minimalize,
    product,
    satisfies_nonpure_dual_exchange,
    satisfies_nonpure_exchange,
    satisfies_strong_exchange,
    translate,
    veronese,
    zero_ideal,
)
from polyquot.families import iter_equigenerated_ideals
from conftest import ideal, DUAL_ONLY, NONPURE_ONLY, SQUARE_REGRESSION
from oracles import naive_dual_exchange


def replay_witness(I, w, mode):
    """Confirm a failure witness: every admissible partner index misses."""
    n = I.nvars
    u, v, i = w.u, w.v, w.index
    assert u in I.gen_set and v in I.gen_set
    checked = 0
    for j in range(n):
        if mode == "polymatroidal" or mode == "strong":
            if u[j] >= v[j]:
                continue
            cand = list(u)
            cand[i] -= 1
        elif mode == "nonpure":
            if v[j] >= u[j]:
                continue
            cand = list(v)
            cand[i] -= 1
        else:  # dual
            if v[j] <= u[j]:
                continue
            cand = list(v)
            cand[i] += 1
        if mode == "dual":
            cand[j] -= 1
        else:
            cand[j] += 1
        checked += 1
        assert not contains(I, tuple(cand))
    return checked


# ---------------------------------------------------------------------------
# the worked examples


def test_nonpure_only_ideal():
    I = ideal(6, *NONPURE_ONLY)
    assert satisfies_nonpure_exchange(I)
    res = satisfies_nonpure_dual_exchange(I)
    assert not res
    replay_witness(I, res.witness, "dual")
    # the published failing pair: u = x1 x2^2 x6, v = x3 x4^2 x5^2 at x6
    u, v, i = (1, 2, 0, 0, 0, 1), (0, 0, 1, 2, 2, 0), 5
    for j in range(6):
        if v[j] > u[j]:
            cand = list(v)
            cand[i] += 1
            cand[j] -= 1
            assert not contains(I, tuple(cand))


def test_dual_only_ideal():
    I = ideal(4, *DUAL_ONLY)
    assert satisfies_nonpure_dual_exchange(I)
    res = satisfies_nonpure_exchange(I)
    assert not res
    replay_witness(I, res.witness, "nonpure")


def test_single_generator_vacuous():
    I = ideal(3, (2, 1, 0))
    assert satisfies_nonpure_exchange(I)
    assert satisfies_nonpure_dual_exchange(I)
    assert is_polymatroidal(I)


def test_zero_ideal_errors():
    for fn in (
        satisfies_nonpure_exchange,
        satisfies_nonpure_dual_exchange,
        is_polymatroidal,
        is_componentwise_polymatroidal,
    ):
        with pytest.raises(ZeroIdealError):
            fn(zero_ideal(2))


def test_polymatroidal_examples():
    # power of the maximal ideal in two variables
    assert is_polymatroidal(graded_component(maximal_ideal(2), 4))
    I = ideal(4, (1, 1, 0, 0), (1, 0, 0, 2), (0, 1, 0, 2), (0, 0, 1, 2))
    comp = graded_component(I, 3)
    res = is_polymatroidal(comp)
    assert not res
    replay_witness(comp, res.witness, "polymatroidal")


def test_polymatroidal_requires_equigenerated():
    with pytest.raises(NotEquigeneratedError):
        is_polymatroidal(ideal(2, (2, 0), (0, 3)))


def test_equivalence_with_dual_exchange_exhaustive():
    # equigenerated: polymatroidal iff dual exchange (small box)
    for d in range(1, 4):
        for I in iter_equigenerated_ideals(2, d, 4):
            assert bool(is_polymatroidal(I)) == bool(
                satisfies_nonpure_dual_exchange(I)
            )
    for I in iter_equigenerated_ideals(3, 3, 4):
        assert bool(is_polymatroidal(I)) == bool(satisfies_nonpure_dual_exchange(I))


def test_witness_is_canonical_first():
    # the reported witness is the first failing (u, v, i) when pairs run in
    # canonical generator order with the variable index ascending
    def first_failing_dual(I):
        gens = I.gens
        n = I.nvars
        for u in gens:
            for v in gens:
                if u == v or sum(u) > sum(v):
                    continue
                for i in range(n):
                    if v[i] >= u[i]:
                        continue
                    hit = False
                    for j in range(n):
                        if v[j] <= u[j]:
                            continue
                        cand = list(v)
                        cand[i] += 1
                        cand[j] -= 1
                        if contains(I, tuple(cand)):
                            hit = True
                            break
                    if not hit:
                        return u, v, i
        return None

    rng = random.Random(211)
    seen = 0
    for _ in range(300):
        n = rng.randint(2, 4)
        I = minimalize(n, [tuple(rng.randint(0, 3) for _ in range(n))
                           for _ in range(rng.randint(2, 5))])
        res = satisfies_nonpure_dual_exchange(I)
        if res:
            continue
        seen += 1
        w = res.witness
        assert (w.u, w.v, w.index) == first_failing_dual(I)
        again = satisfies_nonpure_dual_exchange(I)
        assert again.witness == w
    assert seen > 20


def test_dual_exchange_matches_naive_oracle_random():
    rng = random.Random(23)
    for _ in range(150):
        n = rng.randint(2, 4)
        d = rng.randint(2, 5)
        pool = [t for t in itertools.product(range(d + 1), repeat=n) if sum(t) == d]
        gens = rng.sample(pool, min(len(pool), rng.randint(1, 5)))
        I = minimalize(n, gens)
        assert bool(satisfies_nonpure_dual_exchange(I)) == naive_dual_exchange(I)


def test_componentwise_polymatroidal_examples():
    I = ideal(3, *SQUARE_REGRESSION)
    assert is_componentwise_polymatroidal(I)
    J = ideal(4, *DUAL_ONLY)
    res = is_componentwise_polymatroidal(J)
    assert not res and res.degree == 3
    # equigenerated polymatroidal: the single relevant component
    V = veronese(3, 3, (2, 2, 2))
    assert is_componentwise_polymatroidal(V)


def test_componentwise_implies_both_nonpure_properties():
    rng = random.Random(29)
    cases = 0
    for _ in range(400):
        n = rng.randint(2, 3)
        I = minimalize(n, [tuple(rng.randint(0, 3) for _ in range(n))
                           for _ in range(rng.randint(1, 4))])
        if is_componentwise_polymatroidal(I):
            cases += 1
            assert satisfies_nonpure_exchange(I)
            assert satisfies_nonpure_dual_exchange(I)
    assert cases > 20


def test_componentwise_stays_polymatroidal_beyond_top_degree():
    # sanity for the mindeg..maxdeg restriction
    rng = random.Random(31)
    checked = 0
    for _ in range(200):
        n = rng.randint(2, 3)
        I = minimalize(n, [tuple(rng.randint(0, 2) for _ in range(n))
                           for _ in range(rng.randint(1, 3))])
        if is_componentwise_polymatroidal(I):
            checked += 1
            for extra in (1, 2):
                assert is_polymatroidal(graded_component(I, I.maxdeg + extra))
    assert checked > 10


def test_strong_exchange_examples():
    assert satisfies_strong_exchange(veronese(4, 6, (3, 2, 1, 4)))
    bumped = product(maximal_ideal(4), veronese(4, 6, (3, 2, 1, 4)))
    res = satisfies_strong_exchange(bumped)
    assert not res
    replay = (4, 2, 1, 0), (0, 3, 0, 4)
    assert replay[0] in bumped.gen_set and replay[1] in bumped.gen_set
    assert (4, 3, 0, 0) not in bumped.gen_set
    assert satisfies_strong_exchange(translate(veronese(3, 4, (1, 3, 3)), (2, 1, 0)))


def test_strong_exchange_preconditions_distinct():
    with pytest.raises(NotEquigeneratedError):
        satisfies_strong_exchange(ideal(2, (2, 0), (0, 3)))
    bad = graded_component(ideal(4, *DUAL_ONLY), 3)
    with pytest.raises(NotPolymatroidalError):
        satisfies_strong_exchange(bad)


def test_componentwise_sep_examples():
    assert is_componentwise_sep(ideal(3, *SQUARE_REGRESSION))
    assert not is_componentwise_sep(ideal(4, *DUAL_ONLY))
    assert is_componentwise_sep(veronese(3, 4, (2, 3, 1)))


def test_square_of_regression_ideal_fails():
    I = ideal(3, *SQUARE_REGRESSION)
    sq = product(I, I)
    assert not is_componentwise_polymatroidal(sq)


def test_generalized_exchange_on_ideal_members():
    # componentwise polymatroidal ideals satisfy the exchange for arbitrary
    # members (not only minimal generators) up to maxdeg + 2
    rng = random.Random(37)
    done = 0
    while done < 25:
        n = rng.randint(2, 3)
        I = minimalize(n, [tuple(rng.randint(0, 2) for _ in range(n))
                           for _ in range(rng.randint(1, 3))])
        if not is_componentwise_polymatroidal(I):
            continue
        done += 1
        top = I.maxdeg + 2
        members = [
            t
            for j in range(I.mindeg, top + 1)
            for t in graded_component(I, j).gens
        ]
        for u in rng.sample(members, min(10, len(members))):
            for v in rng.sample(members, min(10, len(members))):
                if sum(u) > sum(v) or all(a <= b for a, b in zip(u, v)):
                    continue
                for i in range(n):
                    if v[i] <= u[i]:
                        continue
                    assert any(
                        v[j] < u[j]
                        and contains(
                            I,
                            tuple(
                                e + (1 if q == j else 0) - (1 if q == i else 0)
                                for q, e in enumerate(v)
                            ),
                        )
                        for j in range(n)
                    )


# ---------------------------------------------------------------------------
# the exchange walk


def test_walk_trivial_cases():
    V = veronese(2, 3, (3, 3))
    u = (1, 2)
    # u already dominates v off the frozen index: no steps
    assert exchange_walk(V, u, (3, 0), 0) == u


def test_walk_adjacent_pairs_need_no_step():
    # at swap distance 1 the start already dominates the target off the
    # frozen index, so the walk stops immediately
    V = veronese(3, 3, (2, 2, 2))
    gens = list(V.gens)
    found = 0
    for u in gens:
        for v in gens:
            if sum(abs(a - b) for a, b in zip(u, v)) != 2:
                continue
            i = next(q for q in range(3) if u[q] < v[q])
            assert exchange_walk(V, u, v, i) == u
            found += 1
    assert found > 0


def test_walk_single_step_swaps_two_coordinates():
    V = veronese(4, 4, (2, 2, 2, 2))
    u, v = (0, 0, 2, 2), (1, 1, 1, 1)
    assert u in V.gen_set and v in V.gen_set
    w = exchange_walk(V, u, v, 0)
    assert w != u
    assert sum(1 for a, b in zip(w, u) if a != b) == 2
    assert w[0] == 0 and w[1] >= 1


def test_walk_contract_on_random_polymatroidal():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(2, 4)
        d = rng.randint(2, 5)
        caps = tuple(rng.randint(1, d) for _ in range(n))
        if sum(caps) < d:
            continue
        V = veronese(n, d, caps)
        gens = list(V.gens)
        u = rng.choice(gens)
        v = rng.choice(gens)
        idxs = [i for i in range(n) if u[i] < v[i]]
        if not idxs:
            continue
        i = rng.choice(idxs)
        w = exchange_walk(V, u, v, i)
        assert w in V.gen_set
        assert w[i] == u[i]
        assert all(w[j] >= v[j] for j in range(n) if j != i)


def test_walk_stalls_on_non_dual_exchange_input():
    comp = graded_component(ideal(4, *DUAL_ONLY), 3)
    assert not is_polymatroidal(comp)
    stalled = False
    for u in comp.gens:
        for v in comp.gens:
            for i in range(4):
                if u[i] >= v[i]:
                    continue
                try:
                    exchange_walk(comp, u, v, i)
                except DualExchangeViolationError:
                    stalled = True
    assert stalled


def test_walk_rejects_bad_arguments():
    V = veronese(2, 2, (2, 2))
    with pytest.raises(ValueError):
        exchange_walk(V, (2, 0), (0, 2), 0)  # u_i >= v_i
    with pytest.raises(ValueError):
        exchange_walk(V, (1, 0), (0, 2), 1)  # u not a generator
