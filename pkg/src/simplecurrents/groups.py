"""Closure, multiplication tables, and isomorphism types of small permutation groups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

Perm = tuple[int, ...]


class ClosureCapExceededError(RuntimeError):
    """Closure under composition grew past the configured cap."""


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose_perms(p: Perm, q: Perm) -> Perm:
    """p after q: (p . q)(i) = p[q[i]]."""
    return tuple(p[x] for x in q)


def inverse_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_order(p: Perm) -> int:
    e = identity_perm(len(p))
    q = p
    m = 1
    while q != e:
        q = compose_perms(q, p)
        m += 1
    return m


def close_under_composition(perms: list[Perm], cap: int = 1024) -> list[Perm]:
    """Group generated by the given permutations, as a sorted element list."""
    if not perms:
        raise ValueError("need at least one generator")
    n = len(perms[0])
    if any(len(p) != n for p in perms):
        raise ValueError("generators act on different sets")
    elements = {identity_perm(n)}
    frontier = [p for p in perms if p not in elements]
    elements.update(frontier)
    if len(elements) > cap:
        raise ClosureCapExceededError(f"closure exceeded cap of {cap} elements")
    while frontier:
        new = []
        for p in frontier:
            for q in list(elements):
                for r in (compose_perms(p, q), compose_perms(q, p)):
                    if r not in elements:
                        elements.add(r)
                        new.append(r)
                        if len(elements) > cap:
                            raise ClosureCapExceededError(
                                f"closure exceeded cap of {cap} elements")
        frontier = new
    return sorted(elements)


def multiplication_table(elements: list[Perm]) -> tuple[tuple[int, ...], ...]:
    """table[i][j] = index of elements[i] . elements[j]."""
    index = {p: i for i, p in enumerate(elements)}
    return tuple(tuple(index[compose_perms(p, q)] for q in elements) for p in elements)


# ---------------------------------------------------------------------------
# isomorphism type from a multiplication table


def _identity_of(table) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    raise ValueError("table has no identity element")


def _element_orders(table) -> list[int]:
    e = _identity_of(table)
    orders = []
    for a in range(len(table)):
        x = a
        m = 1
        while x != e:
            x = table[x][a]
            m += 1
        orders.append(m)
    return orders


def _abelian_summands(table) -> list[int]:
    """Cyclic invariant factors of an abelian group, largest first.

    An element of maximal order generates a direct summand, so we can split
    it off and recurse on the quotient (cosets stay well defined because
    everything is normal).
    """
    n = len(table)
    if n == 1:
        return []
    orders = _element_orders(table)
    a = max(range(n), key=lambda i: orders[i])
    sub = {_identity_of(table)}
    x = a
    while x not in sub:
        sub.add(x)
        x = table[x][a]
    cosets: list[frozenset[int]] = []
    seen: set[int] = set()
    for g in range(n):
        if g in seen:
            continue
        cs = frozenset(table[g][h] for h in sub)
        seen |= cs
        cosets.append(cs)
    rep = {g: i for i, cs in enumerate(cosets) for g in cs}
    sample = [min(cs) for cs in cosets]
    qtable = tuple(tuple(rep[table[sample[i]][sample[j]]] for j in range(len(cosets)))
                   for i in range(len(cosets)))
    return [orders[a]] + _abelian_summands(qtable)


_NONABELIAN_BY_SIGNATURE = {
    (6, ((1, 1), (2, 3), (3, 2))): "S3",
    (8, ((1, 1), (2, 5), (4, 2))): "D4",
    (8, ((1, 1), (2, 1), (4, 6))): "Q8",
    (10, ((1, 1), (2, 5), (5, 4))): "D5",
    (12, ((1, 1), (2, 3), (3, 8))): "A4",
    (12, ((1, 1), (2, 7), (3, 2), (6, 2))): "D6",
    (12, ((1, 1), (2, 1), (3, 2), (4, 6), (6, 2))): "Dic3",
    (14, ((1, 1), (2, 7), (7, 6))): "D7",
    (16, ((1, 1), (2, 9), (4, 2), (8, 4))): "D8",
    (16, ((1, 1), (2, 1), (4, 10), (8, 4))): "Q16",
    (16, ((1, 1), (2, 5), (4, 6), (8, 4))): "SD16",
    (16, ((1, 1), (2, 3), (4, 4), (8, 8))): "M4(16)",
    (16, ((1, 1), (2, 11), (4, 4))): "D4 x Z2",
    (16, ((1, 1), (2, 7), (4, 8))): "D4 o Z4",
}


def isomorphism_type(table) -> str:
    """Readable isomorphism type for groups of order <= 16.

    Abelian groups are identified exactly (invariant factors); non-abelian
    ones by their element-order signature, with a descriptive fallback.
    """
    n = len(table)
    if n == 1:
        return "trivial"
    abelian = all(table[i][j] == table[j][i] for i in range(n) for j in range(i))
    if abelian:
        return " x ".join(f"Z{d}" for d in _abelian_summands(table))
    if n <= 16:
        sig = (n, tuple(sorted(Counter(_element_orders(table)).items())))
        if sig in _NONABELIAN_BY_SIGNATURE:
            return _NONABELIAN_BY_SIGNATURE[sig]
        return f"non-abelian group of order {n}"
    return f"group of order {n}"


@dataclass(frozen=True)
class GroupReport:
    """A closed permutation group with its table and identified type."""

    elements: tuple[Perm, ...]
    table: tuple[tuple[int, ...], ...]
    iso_type: str
    caveat: str
