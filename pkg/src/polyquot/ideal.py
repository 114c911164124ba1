"""Exact arithmetic on monomials and monomial ideals.

A monomial in n variables is an exponent tuple of n nonnegative integers;
its degree is the sum of the entries.  A :class:`MonomialIdeal` stores the
unique minimal generating set (a divisibility antichain) in a fixed
graded-lexicographic order, so equal ideals compare and serialize equally.
All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Monomial = tuple  # exponent vector: tuple[int, ...]

#: Largest degree `graded_component` will expand to.  The expansion
#: enumerates all monomials of the target degree over each generator,
#: which grows like C(j + n - 1, n - 1).
DEGREE_GUARD = 64


class ZeroIdealError(ValueError):
    """Raised by operations that are undefined on the zero ideal."""


class DegreeGuardError(ValueError):
    """Raised when a graded-component degree exceeds ``DEGREE_GUARD``."""


# ---------------------------------------------------------------------------
# monomial helpers


def degree(u: Monomial) -> int:
    return sum(u)


def divides(u: Monomial, v: Monomial) -> bool:
    """True if u divides v componentwise."""
    return all(a <= b for a, b in zip(u, v))


def monomial_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def monomial_gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def monomial_colon(g: Monomial, u: Monomial) -> Monomial:
    """g / gcd(g, u), i.e. componentwise truncated subtraction."""
    return tuple(a - b if a > b else 0 for a, b in zip(g, u))


def monomial_div(u: Monomial, v: Monomial) -> Monomial:
    """Exact quotient u / v; raises if v does not divide u."""
    if not divides(v, u):
        raise ValueError(f"{v} does not divide {u}")
    return tuple(a - b for a, b in zip(u, v))


def unit_monomial(nvars: int) -> Monomial:
    return (0,) * nvars


def variable(nvars: int, i: int) -> Monomial:
    """The monomial x_i (0-based variable index)."""
    e = [0] * nvars
    e[i] = 1
    return tuple(e)


def compositions(total: int, nvars: int) -> Iterator[Monomial]:
    """All exponent tuples of length nvars summing to total."""
    return bounded_compositions(total, (total,) * nvars)


def bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[Monomial]:
    """All exponent tuples with sum `total` and entry i at most caps[i].

    Tuples are produced in descending lexicographic order.
    """
    n = len(caps)
    if n == 0:
        if total == 0:
            yield ()
        return
    # suffix[i] = caps[i] + ... + caps[n-1], for pruning
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    out = [0] * n

    def rec(i: int, rem: int) -> Iterator[Monomial]:
        if i == n - 1:
            if rem <= caps[i]:
                out[i] = rem
                yield tuple(out)
            return
        lo = max(0, rem - suffix[i + 1])
        for e in range(min(caps[i], rem), lo - 1, -1):
            out[i] = e
            yield from rec(i + 1, rem - e)

    if 0 <= total <= suffix[0]:
        yield from rec(0, total)


def _canonical_key(g: Monomial):
    # graded-lex with x_1 > ... > x_n; used descending (largest first)
    return (sum(g), g)


def _validate_monomial(nvars: int, g) -> Monomial:
    g = tuple(g)
    if len(g) != nvars:
        raise ValueError(
            f"exponent vector {g} has length {len(g)}, expected {nvars}"
        )
    for e in g:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"exponent vector {g} has invalid entry {e!r}")
    return g


# ---------------------------------------------------------------------------
# the ideal type


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generating set.

    The constructor minimalizes its input: generators divisible by another
    generator are dropped, duplicates collapse.  ``gens`` is the resulting
    antichain as a tuple sorted in descending graded-lex order;  ``gen_set``
    is the same set as a frozenset for O(1) membership of exponent tuples.

    An empty generating set is the zero ideal; a single all-zero generator
    is the unit ideal (the whole ring).
    """

    __slots__ = ("nvars", "gens", "gen_set")

    def __init__(self, nvars: int, gens: Iterable[Monomial] = (), *, _trusted=False):
        if nvars < 1:
            raise ValueError("number of variables must be positive")
        self.nvars = nvars
        if _trusted:
            seen = frozenset(gens)
        else:
            raw = [_validate_monomial(nvars, g) for g in gens]
            seen = frozenset(_minimal_subset(raw))
        self.gens = tuple(sorted(seen, key=_canonical_key, reverse=True))
        self.gen_set = seen

    # construction shortcuts -------------------------------------------------

    @classmethod
    def _equigenerated(cls, nvars: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        # generators of one common degree form an antichain automatically
        return cls(nvars, frozenset(gens), _trusted=True)

    # basic queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and sum(self.gens[0]) == 0

    @property
    def mindeg(self) -> int:
        if self.is_zero:
            raise ZeroIdealError("zero ideal has no generator degrees")
        return min(sum(g) for g in self.gens)

    @property
    def maxdeg(self) -> int:
        if self.is_zero:
            raise ZeroIdealError("zero ideal has no generator degrees")
        return max(sum(g) for g in self.gens)

    @property
    def is_equigenerated(self) -> bool:
        if self.is_zero:
            return False
        it = iter(self.gens)
        d = sum(next(it))
        return all(sum(g) == d for g in it)

    def contains(self, u: Monomial) -> bool:
        """Membership of the monomial u in the ideal."""
        if len(u) != self.nvars:
            raise ValueError(
                f"monomial {u} has length {len(u)}, expected {self.nvars}"
            )
        du = sum(u)
        for g in self.gens:
            if sum(g) <= du and divides(g, u):
                return True
        return False

    __contains__ = contains

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gen_set == other.gen_set

    def __hash__(self) -> int:
        return hash((self.nvars, self.gen_set))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"MonomialIdeal({self.nvars}, zero)"
        return f"MonomialIdeal({self.nvars}, {list(self.gens)})"


def _minimal_subset(raw: Sequence[Monomial]) -> list:
    """Divisibility-minimal elements of raw (duplicates collapse)."""
    # degree-ascending scan: only already-kept (lower or equal degree)
    # elements can divide the current one
    uniq = sorted(set(raw), key=lambda g: (sum(g), g))
    kept: list = []
    for g in uniq:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return kept


# ---------------------------------------------------------------------------
# operations


def minimalize(nvars: int, raw: Iterable[Monomial]) -> MonomialIdeal:
    """The ideal generated by `raw`, reduced to its minimal generators.

    Idempotent; the result generates the same ideal and its generating set
    is an antichain under divisibility.  An empty input gives the zero
    ideal.
    """
    return MonomialIdeal(nvars, raw)


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    """True iff some minimal generator divides u.  False on the zero ideal."""
    return ideal.contains(tuple(u))


def colon_by_monomial(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The colon ideal (I : u) = (g / gcd(g, u) : g in G(I)), minimalized."""
    if ideal.is_zero:
        raise ZeroIdealError("colon of the zero ideal is undefined here")
    u = _validate_monomial(ideal.nvars, u)
    return MonomialIdeal(ideal.nvars, (monomial_colon(g, u) for g in ideal.gens))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The product ideal IJ, via pairwise generator products.

    Commutes; the product with a zero factor is the zero ideal, the
    product with the unit ideal is the other factor.
    """
    if I.nvars != J.nvars:
        raise ValueError(f"variable counts differ: {I.nvars} vs {J.nvars}")
    if I.is_zero or J.is_zero:
        return MonomialIdeal(I.nvars, (), _trusted=True)
    prods = {monomial_mul(g, h) for g in I.gens for h in J.gens}
    return MonomialIdeal(I.nvars, prods)


def translate(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The ideal u * I.  Shifting preserves minimality of the generators."""
    u = _validate_monomial(ideal.nvars, u)
    return MonomialIdeal(
        ideal.nvars,
        frozenset(monomial_mul(u, g) for g in ideal.gens),
        _trusted=True,
    )


def deflate(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The ideal I / u, defined when u divides every generator."""
    u = _validate_monomial(ideal.nvars, u)
    return MonomialIdeal(
        ideal.nvars,
        frozenset(monomial_div(g, u) for g in ideal.gens),
        _trusted=True,
    )


def graded_component(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """The ideal generated by all degree-j monomials of I.

    The generating set is exactly the set of degree-j monomials contained
    in I (an antichain, all of one degree).  Empty below the minimal
    generator degree.  Degrees beyond ``DEGREE_GUARD`` are refused because
    the expansion enumerates every monomial of degree j over each
    generator.
    """
    if j < 0:
        raise ValueError("degree must be nonnegative")
    if j > DEGREE_GUARD:
        raise DegreeGuardError(
            f"graded component degree {j} exceeds guard {DEGREE_GUARD}; "
            "the expansion would enumerate too many monomials"
        )
    n = ideal.nvars
    found = set()
    for g in ideal.gens:
        dg = sum(g)
        if dg > j:
            continue
        for t in compositions(j - dg, n):
            found.add(monomial_mul(g, t))
    return MonomialIdeal._equigenerated(n, found)


def veronese(nvars: int, d: int, caps: Sequence[int]) -> MonomialIdeal:
    """The capped degree-d ideal: all degree-d monomials u with u_i <= caps[i].

    Zero ideal when the caps cannot reach degree d.  ``d = 0`` gives the
    unit ideal.
    """
    if nvars < 1:
        raise ValueError("number of variables must be positive")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    caps = tuple(caps)
    if len(caps) != nvars:
        raise ValueError(f"expected {nvars} caps, got {len(caps)}")
    if any(c < 0 for c in caps):
        raise ValueError("caps must be nonnegative")
    gens = frozenset(bounded_compositions(d, tuple(min(c, d) for c in caps)))
    return MonomialIdeal._equigenerated(nvars, gens)


def maximal_ideal(nvars: int) -> MonomialIdeal:
    """The ideal (x_1, ..., x_n)."""
    return MonomialIdeal(
        nvars, frozenset(variable(nvars, i) for i in range(nvars)), _trusted=True
    )


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, (unit_monomial(nvars),), _trusted=True)


def zero_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, (), _trusted=True)
