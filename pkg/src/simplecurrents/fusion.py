"""Abstract fusion rings: axioms, invertible objects, and ring automorphisms.

A ring is a finite list of simple-object labels, a distinguished unit, a dual
involution, and the sparse fusion tensor N^c_{ab}.  Everything here is exact
integer arithmetic; the only numpy use is vectorising the associativity and
automorphism checks, which stay in int64 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import lcm

import numpy as np


class NotInvertibleError(ValueError):
    """An operation that requires an invertible object got a non-invertible one."""


@dataclass(eq=True)
class FusionRing:
    """A fusion ring over an ordered set of simple objects.

    ``tensor`` is sparse, keyed by the pair (a, b); the fiber over each pair
    maps c -> N^c_{ab} with only nonzero entries stored.  Instances are
    immutable after construction; all queries are read-only and thread-safe.
    """

    simples: tuple[str, ...]
    unit_index: int
    dual: tuple[int, ...]
    tensor: dict[tuple[int, int], dict[int, int]] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.simples)

    def N(self, a: int, b: int, c: int) -> int:
        return self.tensor.get((a, b), {}).get(c, 0)

    def product(self, a: int, b: int) -> dict[int, int]:
        """The multiset a (x) b as a dict c -> multiplicity."""
        return dict(self.tensor.get((a, b), {}))

    @cached_property
    def table(self) -> np.ndarray:
        """Dense int64 view T[a, b, c] = N^c_{ab} (cached)."""
        n = self.size
        t = np.zeros((n, n, n), dtype=np.int64)
        for (a, b), fiber in self.tensor.items():
            for c, m in fiber.items():
                t[a, b, c] = m
        t.setflags(write=False)
        return t

    def index(self, label: str) -> int:
        try:
            return self.simples.index(label)
        except ValueError:
            raise KeyError(f"no simple object labelled {label!r}") from None


def axiom_violation(ring: FusionRing) -> str | None:
    """First violated fusion-ring identity, or None when all axioms hold."""
    n = ring.size
    u = ring.unit_index
    t = ring.table
    if not 0 <= u < n:
        return f"unit index {u} out of range"
    if sorted(ring.dual) != list(range(n)):
        return "dual is not a permutation of the simples"
    for a in range(n):
        if ring.dual[ring.dual[a]] != a:
            return f"dual involution fails at a={a}"
    if (t < 0).any():
        a, b, c = map(int, np.argwhere(t < 0)[0])
        return f"negative multiplicity N^{c}_{{{a},{b}}}"
    for a in range(n):
        for c in range(n):
            if t[a, u, c] != (a == c):
                return f"right unit law fails: N^{c}_{{{a},unit}} = {t[a, u, c]}"
            if t[u, a, c] != (a == c):
                return f"left unit law fails: N^{c}_{{unit,{a}}} = {t[u, a, c]}"
    for a in range(n):
        for b in range(n):
            if t[a, b, u] != (b == ring.dual[a]):
                return f"duality fails: N^unit_{{{a},{b}}} = {t[a, b, u]}"
    # Associativity: sum_e N^e_{ab} N^d_{ec} = sum_f N^f_{bc} N^d_{af}.
    lhs = np.einsum("abe,ecd->abcd", t, t)
    rhs = np.einsum("bcf,afd->abcd", t, t)
    if not (lhs == rhs).all():
        a, b, c, d = map(int, np.argwhere(lhs != rhs)[0])
        return (f"associativity fails at (a,b,c,d)=({a},{b},{c},{d}): "
                f"{lhs[a, b, c, d]} != {rhs[a, b, c, d]}")
    return None


def verify_axioms(ring: FusionRing) -> bool:
    """Whether the unit, duality, involution, and associativity axioms all hold."""
    return axiom_violation(ring) is None


def invertibles(ring: FusionRing) -> list[int]:
    """Indices of all invertible simples (fusion by them is a permutation)."""
    n = ring.size
    t = ring.table
    out = []
    for a in range(n):
        if t[a].sum() == n and ring.N(a, ring.dual[a], ring.unit_index) == 1:
            out.append(a)
    return out


def _require_invertible(ring: FusionRing, g: int) -> None:
    t = ring.table
    if not (0 <= g < ring.size and t[g].sum() == ring.size
            and ring.N(g, ring.dual[g], ring.unit_index) == 1):
        raise NotInvertibleError(f"object {ring.simples[g] if 0 <= g < ring.size else g} "
                                 f"is not invertible")


def fuse_permutation(ring: FusionRing, g: int) -> tuple[int, ...]:
    """The permutation X -> g (x) X induced by an invertible object."""
    _require_invertible(ring, g)
    t = ring.table
    perm = []
    for b in range(ring.size):
        (c,) = np.flatnonzero(t[g, b])
        perm.append(int(c))
    return tuple(perm)


def invertible_order(ring: FusionRing, g: int) -> int:
    """Least M >= 1 with the M-th fusion power of g equal to the unit."""
    perm = fuse_permutation(ring, g)
    m = 1
    x = perm[ring.unit_index]
    while x != ring.unit_index:
        x = perm[x]
        m += 1
    return m


def invertible_group_exponent(ring: FusionRing) -> int:
    """lcm of the orders of all invertible objects."""
    return lcm(*(invertible_order(ring, g) for g in invertibles(ring)))


def is_ring_automorphism(ring: FusionRing, perm) -> bool:
    """Whether N^{perm(c)}_{perm(a) perm(b)} = N^c_{ab} for all a, b, c."""
    perm = tuple(perm)
    if sorted(perm) != list(range(ring.size)):
        raise ValueError("perm is not a bijection of the simples")
    if perm[ring.unit_index] != ring.unit_index:
        raise ValueError("perm does not fix the unit")
    p = np.array(perm)
    t = ring.table
    return bool((t[p][:, p][:, :, p] == t).all())
