"""Exchange-property predicates on minimal generators, with failure witnesses.

Every predicate walks the generator pairs in canonical order (as stored on
the ideal), the exchanged variable index ascending, and stops at the first
failure, so the reported witness is deterministic.  A failing witness is
independently re-checkable: replaying (u, v, i) against membership must
show every admissible exchange monomial absent from the ideal.

Variable indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ideal import (
    MonomialIdeal,
    Monomial,
    ZeroIdealError,
    graded_component,
)


class NotEquigeneratedError(ValueError):
    """The operation requires all minimal generators to share one degree."""


class NotPolymatroidalError(ValueError):
    """The operation requires a polymatroidal input ideal."""


class DualExchangeViolationError(RuntimeError):
    """An exchange walk stalled: the claimed dual exchange property is false."""


@dataclass(frozen=True)
class ExchangeWitness:
    """A failing instance of an exchange predicate.

    ``u`` and ``v`` are the generator pair, ``index`` the variable whose
    exchange cannot be completed, and ``missing`` the first exchange
    candidate that is absent from the ideal (None when no admissible
    partner index existed at all).
    """

    u: Monomial
    v: Monomial
    index: int
    missing: Optional[Monomial]


@dataclass(frozen=True)
class ExchangeCheck:
    ok: bool
    witness: Optional[ExchangeWitness]

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ComponentCheck:
    """Verdict of a componentwise predicate; degree/witness set on failure."""

    ok: bool
    degree: Optional[int]
    witness: Optional[ExchangeWitness]

    def __bool__(self) -> bool:
        return self.ok


_PASS = ExchangeCheck(True, None)


def _require_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ZeroIdealError("predicate undefined on the zero ideal")


def _require_equigenerated(ideal: MonomialIdeal) -> None:
    if not ideal.is_equigenerated:
        raise NotEquigeneratedError(
            "generators span degrees "
            f"{ideal.mindeg}..{ideal.maxdeg}; a single degree is required"
        )


def is_polymatroidal(ideal: MonomialIdeal) -> ExchangeCheck:
    """Exchange property for an equigenerated ideal.

    For every pair u, v of minimal generators and every i with u_i > v_i
    there must be some j with u_j < v_j such that x_j * u / x_i lies in
    the ideal.  Since all generators share one degree, membership of the
    exchanged monomial reduces to membership in the generator set.
    """
    _require_nonzero(ideal)
    _require_equigenerated(ideal)
    gens = ideal.gens
    gen_set = ideal.gen_set
    n = ideal.nvars
    for u in gens:
        for v in gens:
            if u is v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                base = list(u)
                base[i] -= 1
                missing = None
                for j in range(n):
                    if u[j] >= v[j]:
                        continue
                    base[j] += 1
                    cand = tuple(base)
                    base[j] -= 1
                    if cand in gen_set:
                        break
                    if missing is None:
                        missing = cand
                else:
                    return ExchangeCheck(False, ExchangeWitness(u, v, i, missing))
    return _PASS


def satisfies_nonpure_exchange(ideal: MonomialIdeal) -> ExchangeCheck:
    """Exchange across degrees, correcting the larger-degree generator.

    For u, v in G(I) with deg(u) <= deg(v) and every i with v_i > u_i,
    some j with v_j < u_j must make x_j * v / x_i a member of the ideal.
    """
    _require_nonzero(ideal)
    gens = ideal.gens
    n = ideal.nvars
    degs = [sum(g) for g in gens]
    for iu, u in enumerate(gens):
        for iv, v in enumerate(gens):
            if iu == iv or degs[iu] > degs[iv]:
                continue
            for i in range(n):
                if v[i] <= u[i]:
                    continue
                base = list(v)
                base[i] -= 1
                missing = None
                for j in range(n):
                    if v[j] >= u[j]:
                        continue
                    base[j] += 1
                    cand = tuple(base)
                    base[j] -= 1
                    if ideal.contains(cand):
                        break
                    if missing is None:
                        missing = cand
                else:
                    return ExchangeCheck(False, ExchangeWitness(u, v, i, missing))
    return _PASS


def satisfies_nonpure_dual_exchange(ideal: MonomialIdeal) -> ExchangeCheck:
    """Dual exchange across degrees, raising the larger-degree generator.

    For u, v in G(I) with deg(u) <= deg(v) and every i with v_i < u_i,
    some j with v_j > u_j must make x_i * v / x_j a member of the ideal.
    """
    _require_nonzero(ideal)
    gens = ideal.gens
    n = ideal.nvars
    degs = [sum(g) for g in gens]
    for iu, u in enumerate(gens):
        for iv, v in enumerate(gens):
            if iu == iv or degs[iu] > degs[iv]:
                continue
            for i in range(n):
                if v[i] >= u[i]:
                    continue
                base = list(v)
                base[i] += 1
                missing = None
                for j in range(n):
                    if v[j] <= u[j]:
                        continue
                    base[j] -= 1
                    cand = tuple(base)
                    base[j] += 1
                    if ideal.contains(cand):
                        break
                    if missing is None:
                        missing = cand
                else:
                    return ExchangeCheck(False, ExchangeWitness(u, v, i, missing))
    return _PASS


def satisfies_strong_exchange(ideal: MonomialIdeal) -> ExchangeCheck:
    """Exchange for every admissible index pair, not merely some partner.

    Defined only on polymatroidal ideals: for all u, v in G(I) and all
    i, j with u_i > v_i and u_j < v_j, the monomial x_j * u / x_i must
    lie in the ideal.
    """
    _require_nonzero(ideal)
    _require_equigenerated(ideal)
    chk = is_polymatroidal(ideal)
    if not chk:
        raise NotPolymatroidalError(
            f"ideal is not polymatroidal (witness {chk.witness})"
        )
    gens = ideal.gens
    gen_set = ideal.gen_set
    n = ideal.nvars
    for u in gens:
        for v in gens:
            if u is v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                base = list(u)
                base[i] -= 1
                for j in range(n):
                    if u[j] >= v[j]:
                        continue
                    base[j] += 1
                    cand = tuple(base)
                    base[j] -= 1
                    if cand not in gen_set:
                        return ExchangeCheck(
                            False, ExchangeWitness(u, v, i, cand)
                        )
    return _PASS


def is_componentwise_polymatroidal(ideal: MonomialIdeal) -> ComponentCheck:
    """Every graded component between mindeg and maxdeg is polymatroidal.

    Components beyond maxdeg need no check: each is the product of the
    maximal ideal with the previous component, and products of
    polymatroidal ideals stay polymatroidal.
    """
    _require_nonzero(ideal)
    for j in range(ideal.mindeg, ideal.maxdeg + 1):
        chk = is_polymatroidal(graded_component(ideal, j))
        if not chk:
            return ComponentCheck(False, j, chk.witness)
    return ComponentCheck(True, None, None)


def is_componentwise_sep(ideal: MonomialIdeal) -> bool:
    """Every graded component is polymatroidal with the strong exchange
    property."""
    _require_nonzero(ideal)
    for j in range(ideal.mindeg, ideal.maxdeg + 1):
        comp = graded_component(ideal, j)
        if not is_polymatroidal(comp):
            return False
        if not satisfies_strong_exchange(comp):
            return False
    return True


def exchange_walk(
    ideal: MonomialIdeal, u: Monomial, v: Monomial, i: int
) -> Monomial:
    """Walk from u toward v through generator exchanges, freezing index i.

    Requires an equigenerated ideal with the dual exchange property,
    u, v in G(I) and u_i < v_i.  Each step replaces the current generator
    w by x_k * w / x_l in G(I) with w_k < v_k and w_l > v_l, strictly
    decreasing the L1 distance to v.  The result w satisfies w_i = u_i
    and w_j >= v_j for every j != i.

    A stalled walk means the dual exchange property fails for the input
    ideal and raises :class:`DualExchangeViolationError`.
    """
    _require_nonzero(ideal)
    _require_equigenerated(ideal)
    u, v = tuple(u), tuple(v)
    gen_set = ideal.gen_set
    if u not in gen_set or v not in gen_set:
        raise ValueError("u and v must be minimal generators")
    if not 0 <= i < ideal.nvars:
        raise ValueError(f"variable index {i} out of range")
    if u[i] >= v[i]:
        raise ValueError("need deg_i(u) < deg_i(v)")
    n = ideal.nvars
    w = u
    dist2 = sum(abs(a - b) for a, b in zip(w, v))
    while True:
        ks = [k for k in range(n) if k != i and w[k] < v[k]]
        if not ks:
            break
        k = ks[0]
        nxt = None
        for l in range(n):
            if w[l] <= v[l]:
                continue
            cand = list(w)
            cand[k] += 1
            cand[l] -= 1
            cand = tuple(cand)
            if cand in gen_set:
                nxt = cand
                break
        if nxt is None:
            raise DualExchangeViolationError(
                f"walk stalled at {w} toward {v} (index {k}): the ideal "
                "does not satisfy the dual exchange property"
            )
        new_dist2 = sum(abs(a - b) for a, b in zip(nxt, v))
        assert new_dist2 < dist2, "walk step failed to decrease distance"
        w, dist2 = nxt, new_dist2
    assert w[i] == u[i]
    assert all(w[j] >= v[j] for j in range(n) if j != i)
    return w
