"""Braided/modular structure constants on top of a fusion ring.

The data carried here is deliberately minimal: a twist angle per simple
object (the conformal weight mod 1, exact) and a quantum dimension per
simple object (float, used only for sign decisions).  Monodromy scalars and
the cyclic grading induced by an invertible object are all derived from the
twists through the ribbon identity, which keeps the whole pipeline exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm

from . import fusion, lie
from .angles import RationalAngle
from .fusion import FusionRing
from .lie import LieAlgebraSpec, Weight

QDIM_TOL = 1e-9  # tolerance for the +-1 decisions consuming quantum dimensions


class InconsistentDataError(RuntimeError):
    """Category data violates an identity it is required to satisfy."""


@dataclass(eq=True)
class ModularCategoryData:
    """A fusion ring with twist angles and quantum dimensions per simple."""

    ring: FusionRing
    twist: tuple[RationalAngle, ...]
    qdim: tuple[float, ...]
    weights: tuple[Weight, ...] | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return self.ring.size


@dataclass(frozen=True)
class InvertibleProfile:
    """The data an invertible object feeds into the auto-equivalence machine.

    M is the fusion order of g, q the eigenvalue of its self-braiding, and
    A = M / order(q^2), the integer controlling both the coprimality gate
    and the degree shift of the induced grading permutation.
    """

    g: int
    M: int
    q: RationalAngle
    q_squared: RationalAngle
    A: int


def validate(data: ModularCategoryData) -> None:
    """Check the structural invariants; raise InconsistentDataError on failure."""
    ring = data.ring
    n = ring.size
    if len(data.twist) != n or len(data.qdim) != n:
        raise InconsistentDataError("twist/qdim lists must match the simple count")
    u = ring.unit_index
    if not data.twist[u].is_zero:
        raise InconsistentDataError(f"unit twist must vanish, got {data.twist[u]}")
    if abs(data.qdim[u] - 1.0) > QDIM_TOL:
        raise InconsistentDataError(f"unit quantum dimension must be 1, got {data.qdim[u]}")
    for a in range(n):
        if data.twist[ring.dual[a]] != data.twist[a]:
            raise InconsistentDataError(
                f"twist not dual-invariant at {ring.simples[a]}")
    for g in fusion.invertibles(ring):
        if abs(abs(data.qdim[g]) - 1.0) > QDIM_TOL:
            raise InconsistentDataError(
                f"invertible {ring.simples[g]} has |qdim| = {abs(data.qdim[g])}, expected 1")


# ---------------------------------------------------------------------------
# level-k category builder


@lru_cache(maxsize=None)
def build_wzw_data(spec: LieAlgebraSpec, k: int) -> ModularCategoryData:
    """Modular data of the level-k category attached to a simple Lie algebra.

    Simple objects are the level-k alcove weights in lexicographic order
    (unit first); the fusion tensor comes from the Kac-Walton fold, twists
    from conformal weights mod 1, quantum dimensions from the sine product.
    The result is cached per (algebra, level) and must be treated as
    immutable by callers.
    """
    if k < 1:
        raise ValueError(f"level must be >= 1, got {k}")
    weights = lie.alcove_weights(spec, k)
    index = {w: i for i, w in enumerate(weights)}
    n = len(weights)
    unit = index[(0,) * spec.rank]

    tensor: dict[tuple[int, int], dict[int, int]] = {}
    for a in range(n):
        for b in range(a, n):
            prod = lie.fusion_coefficients(spec, k, weights[a], weights[b])
            fiber = {index[w]: m for w, m in prod.items()}
            tensor[(a, b)] = fiber
            if a != b:
                tensor[(b, a)] = dict(fiber)

    dual = []
    for a in range(n):
        partners = [b for b in range(n) if tensor[(a, b)].get(unit, 0) == 1]
        if len(partners) != 1:
            raise InconsistentDataError(f"no unique dual for {weights[a]}")
        dual.append(partners[0])

    ring = FusionRing(
        simples=tuple(lie.weight_label(w) for w in weights),
        unit_index=unit,
        dual=tuple(dual),
        tensor=tensor,
    )
    violation = fusion.axiom_violation(ring)
    if violation is not None:
        raise InconsistentDataError(f"built ring violates fusion axioms: {violation}")

    def twist_of(w):
        h = lie.conformal_weight(spec, k, w)
        return RationalAngle(h.numerator, h.denominator)

    data = ModularCategoryData(
        ring=ring,
        twist=tuple(twist_of(w) for w in weights),
        qdim=tuple(lie.quantum_dimension(spec, k, w) for w in weights),
        weights=tuple(weights),
    )
    validate(data)
    check_modular_grading(data)
    return data


# ---------------------------------------------------------------------------
# braiding scalars derived from twists


def self_braiding(data: ModularCategoryData, g: int) -> RationalAngle:
    """Eigenvalue of the self-braiding of an invertible object, as an angle.

    Derived from the ribbon partial-trace identity theta_g = q * d_g: the
    angle is the twist of g, shifted by a half turn when d_g = -1.  (No
    object with d_g = -1 occurs in the unitary level-k examples; the shift
    is a convention, fixed here once and for all.)
    """
    fusion._require_invertible(data.ring, g)
    d = data.qdim[g]
    if abs(abs(d) - 1.0) > QDIM_TOL:
        raise InconsistentDataError(
            f"invertible {data.ring.simples[g]} has |qdim| = {abs(d)}, expected 1")
    q = data.twist[g]
    if d < 0:
        q = q + RationalAngle(1, 2)
    return q


def monodromy(data: ModularCategoryData, g: int, x: int) -> RationalAngle:
    """Scalar of the double braiding of an invertible g with a simple x.

    Valid because g (x) x is simple, so the ribbon identity collapses to
    twist(g (x) x) - twist(g) - twist(x) in angle arithmetic.
    """
    perm = fusion.fuse_permutation(data.ring, g)
    return data.twist[perm[x]] - data.twist[g] - data.twist[x]


def grading(data: ModularCategoryData, profile: InvertibleProfile,
            zeta: RationalAngle) -> tuple[int, ...]:
    """Grade of every simple in the Z/M grading induced by g, relative to zeta.

    zeta must be a primitive M-th root of unity; grade(X) is the unique n
    with monodromy(g, X) = zeta^n.  Monodromies that are not M-th roots of
    unity mean the data is inconsistent.
    """
    m = profile.M
    if not zeta.is_primitive(m):
        raise ValueError(f"{zeta} is not a primitive {m}-th root of unity")
    perm = fusion.fuse_permutation(data.ring, profile.g)
    tg = data.twist[profile.g]
    grades = []
    for x in range(data.size):
        mono = data.twist[perm[x]] - tg - data.twist[x]
        if m % mono.order != 0:
            raise InconsistentDataError(
                f"monodromy {mono} of {data.ring.simples[x]} is not an order-{m} root")
        if m == 1:
            grades.append(0)
            continue
        r = mono.num * (m // mono.den)
        grades.append(r * pow(zeta.num, -1, m) % m)
    return tuple(grades)


def grading_support(data: ModularCategoryData, profile: InvertibleProfile) -> int:
    """Order of the subgroup of Z/M actually hit by the grading of g.

    Computed as the lcm of the multiplicative orders of all monodromy
    scalars; equals M exactly when the grading is faithful.
    """
    return _support_of(data, profile.g)


def _support_of(data: ModularCategoryData, g: int) -> int:
    perm = fusion.fuse_permutation(data.ring, g)
    tg = data.twist[g]
    return lcm(*((data.twist[perm[x]] - tg - data.twist[x]).order
                 for x in range(data.size)))


def check_modular_grading(data: ModularCategoryData) -> None:
    """Reject data whose gradings are unfaithful (symmetric-centre objects).

    For each invertible g of order M, a grading support N < M means g^N
    braids trivially with everything and the category cannot be modular.
    """
    ring = data.ring
    for g in fusion.invertibles(ring):
        m = fusion.invertible_order(ring, g)
        n = _support_of(data, g)
        if n != m:
            label = ring.simples[g]
            raise InconsistentDataError(
                f"grading by {label} has support {n} < order {m}: "
                f"{label}^{n} lies in the symmetric centre, data is not modular")
