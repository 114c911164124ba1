"""Admissible-order verification and backtracking search for linear quotients.

An ordering u_1, ..., u_m of the minimal generators is admissible when each
colon ideal (u_1, ..., u_{i-1}) : u_i is generated by variables.  For an
antichain that holds iff for every k < i some l < i has u_l : u_i equal to
a single variable dividing u_k : u_i, which is what the incremental check
below computes; the search caches these per-pair facts up front.

Search nodes count attempted placements.  Whether a generator may extend a
partial order depends only on the *set* already placed, so failed prefix
sets are memoized and an exhausted verdict is a complete proof that no
admissible order exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .ideal import (
    MonomialIdeal,
    Monomial,
    ZeroIdealError,
    graded_component,
    monomial_colon,
)

DEFAULT_BUDGET = 10**6

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class GeneratorOrder:
    """A permutation of the minimal generators of an ideal."""

    ideal: MonomialIdeal
    order: tuple

    def __post_init__(self):
        order = tuple(tuple(g) for g in self.order)
        object.__setattr__(self, "order", order)
        if len(order) != len(self.ideal.gens) or set(order) != self.ideal.gen_set:
            raise ValueError("order is not a permutation of the minimal generators")


@dataclass(frozen=True)
class AdmissibilityCheck:
    ok: bool
    fail_index: Optional[int]  # position whose colon is not variable-generated

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # FOUND / EXHAUSTED / BUDGET_EXCEEDED
    order: Optional[tuple]  # the (partial-universe) ordering found
    nodes: int


@dataclass(frozen=True)
class ComponentwiseLQ:
    """Tri-state componentwise verdict: True / False / None (budget ran out)."""

    value: Optional[bool]
    outcomes: dict = field(compare=False)

    def __bool__(self) -> bool:
        return self.value is True


# ---------------------------------------------------------------------------
# verification


def _colon_is_variable_generated(acc: Sequence[Monomial], v: Monomial) -> bool:
    """Is (acc) : v generated by variables?

    acc and v must live in a common antichain, so no colon generator is 1.
    An empty acc passes vacuously.
    """
    colon_vecs = []
    var_positions = set()
    for g in acc:
        c = monomial_colon(g, v)
        s = sum(c)
        if s == 0:
            return False  # g divides v: the colon is the unit ideal
        colon_vecs.append(c)
        if s == 1:
            var_positions.add(c.index(1))
    for c in colon_vecs:
        if not any(c[r] for r in var_positions):
            return False
    return True


def _first_bad_step(base: Sequence[Monomial], appended: Sequence[Monomial]):
    """Index into `appended` of the first failing colon, or None."""
    acc = list(base)
    for idx, v in enumerate(appended):
        if acc and not _colon_is_variable_generated(acc, v):
            return idx
        acc.append(v)
    return None


def is_admissible_order(order: GeneratorOrder) -> AdmissibilityCheck:
    """Check each successive colon of the ordering for variable generation.

    On failure, ``fail_index`` is the 0-based position of the generator
    whose colon against its predecessors is not variable-generated.
    """
    bad = _first_bad_step((), order.order)
    return AdmissibilityCheck(bad is None, bad)


def order_colon_variables(order: GeneratorOrder) -> tuple:
    """Audit trail of an admissible order: the variables generating each colon.

    Entry i (for i >= 1) lists the 0-based variable indices whose first
    powers generate (u_1, ..., u_i) : u_{i+1}; entry 0 is empty.  Raises
    if some colon is not variable-generated.
    """
    seq = order.order
    out = [()]
    for i in range(1, len(seq)):
        v = seq[i]
        vars_present = set()
        colon_vecs = []
        for g in seq[:i]:
            c = monomial_colon(g, v)
            colon_vecs.append(c)
            if sum(c) == 1:
                vars_present.add(c.index(1))
        if any(not any(c[r] for r in vars_present) for c in colon_vecs):
            raise ValueError(f"colon at position {i} is not variable-generated")
        out.append(tuple(sorted(vars_present)))
    return tuple(out)


# ---------------------------------------------------------------------------
# backtracking search


class _BudgetExceeded(Exception):
    pass


def _search_extension(base, cands, budget):
    """Order `cands` over the fixed prefix `base` so every colon step passes.

    All monomials must belong to one antichain.  Returns (status, order,
    nodes) with order a tuple over cands on success.
    """
    ncand = len(cands)
    if ncand == 0:
        return FOUND, (), 0
    universe = list(base) + list(cands)
    nu = len(universe)
    nb = len(base)
    # wit_bit[l][c]: bit of the variable r if universe[l] : cands[c] is
    # exactly x_r, else 0.  needs[k][c]: support mask of universe[k] : cands[c].
    wit_bit = [[0] * ncand for _ in range(nu)]
    needs = [[0] * ncand for _ in range(nu)]
    for l in range(nu):
        gl = universe[l]
        for c in range(ncand):
            gc = cands[c]
            if gl == gc:
                continue
            col = monomial_colon(gl, gc)
            mask = 0
            s = 0
            for r, e in enumerate(col):
                if e:
                    mask |= 1 << r
                    s += e
            needs[l][c] = mask
            if s == 1:
                wit_bit[l][c] = mask

    nodes = 0
    dead: set[int] = set()

    def step_valid(chosen, c):
        avail = 0
        for l in range(nb):
            avail |= wit_bit[l][c]
        for l in chosen:
            avail |= wit_bit[nb + l][c]
        for k in range(nb):
            if needs[k][c] & avail == 0:
                return False
        for k in chosen:
            if needs[nb + k][c] & avail == 0:
                return False
        return True

    chosen: list[int] = []

    def dfs(chosen_mask: int) -> bool:
        nonlocal nodes
        if len(chosen) == ncand:
            return True
        if chosen_mask in dead:
            return False
        for c in range(ncand):
            bit = 1 << c
            if chosen_mask & bit:
                continue
            nodes += 1
            if nodes > budget:
                raise _BudgetExceeded
            if step_valid(chosen, c):
                chosen.append(c)
                if dfs(chosen_mask | bit):
                    return True
                chosen.pop()
        dead.add(chosen_mask)
        return False

    try:
        if dfs(0):
            return FOUND, tuple(cands[c] for c in chosen), nodes
        return EXHAUSTED, None, nodes
    except _BudgetExceeded:
        return BUDGET_EXCEEDED, None, nodes


def find_admissible_order(
    ideal: MonomialIdeal, budget: int = DEFAULT_BUDGET
) -> SearchOutcome:
    """Backtracking search for an admissible order of the minimal generators.

    Candidates are tried in canonical generator order, so node counts are
    reproducible.  ``exhausted`` is a proof that no admissible order
    exists; ``budget-exceeded`` is inconclusive.
    """
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no generator ordering")
    status, order, nodes = _search_extension((), ideal.gens, budget)
    return SearchOutcome(status, order, nodes)


def extends_by_linear_quotients(
    inner: MonomialIdeal, outer: MonomialIdeal, budget: int = DEFAULT_BUDGET
) -> SearchOutcome:
    """Search for an ordering of G(outer) minus G(inner) extending inner.

    Requires G(inner) to be a subset of G(outer).  Found outcomes carry
    the appended ordering; with a zero inner ideal this is exactly
    :func:`find_admissible_order` on outer.
    """
    if inner.nvars != outer.nvars:
        raise ValueError("variable counts differ")
    if not inner.gen_set <= outer.gen_set:
        raise ValueError("generators of the inner ideal must all be "
                         "minimal generators of the outer ideal")
    cands = tuple(g for g in outer.gens if g not in inner.gen_set)
    status, order, nodes = _search_extension(inner.gens, cands, budget)
    return SearchOutcome(status, order, nodes)


def has_componentwise_linear_quotients(
    ideal: MonomialIdeal, budget: int = DEFAULT_BUDGET
) -> ComponentwiseLQ:
    """Run the admissible-order search over every graded component.

    Components beyond the top generator degree inherit linear quotients
    from the top component, so only mindeg..maxdeg are searched.  The
    verdict is False as soon as one component is exhausted, None when a
    component ran out of budget and none was exhausted, True otherwise.
    """
    if ideal.is_zero:
        raise ZeroIdealError("predicate undefined on the zero ideal")
    outcomes: dict[int, SearchOutcome] = {}
    saw_budget = False
    for j in range(ideal.mindeg, ideal.maxdeg + 1):
        res = find_admissible_order(graded_component(ideal, j), budget)
        outcomes[j] = res
        if res.status == EXHAUSTED:
            return ComponentwiseLQ(False, outcomes)
        if res.status == BUDGET_EXCEEDED:
            saw_budget = True
    return ComponentwiseLQ(None if saw_budget else True, outcomes)
