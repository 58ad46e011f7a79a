"""Weights, roots, and level-k fusion data for simple Lie algebras.

Everything is driven by the Cartan matrix, so the code is type-agnostic:
weights are tuples of Dynkin labels (coefficients in the fundamental-weight
basis), roots are tuples of coordinates in the simple-root basis, and all
inner products go through the exact rational Gram matrix of the fundamental
weights, normalised so long roots have squared length 2.

The expensive pieces (positive roots, weight diagrams) are memoized per
(algebra, highest weight).  All functions are pure; the caches are plain
``functools.lru_cache`` dictionaries, safe under concurrent reads and
idempotent concurrent inserts.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]

_DUAL_COXETER = {
    "A": lambda r: r + 1,
    "B": lambda r: 2 * r - 1,
    "C": lambda r: r + 1,
    "D": lambda r: 2 * r - 2,
    "E": {6: 12, 7: 18, 8: 30}.get,
    "F": {4: 9}.get,
    "G": {2: 4}.get,
}

_FOLD_CAP = 100_000  # safety bound on reflection loops


class OutOfAlcoveError(ValueError):
    """A weight lies outside the level-k alcove it was required to be in."""


@dataclass(frozen=True)
class LieAlgebraSpec:
    """Static data of a simple Lie algebra in the fundamental-weight basis.

    Attributes
    ----------
    family, rank : str, int
        Cartan-Killing type, e.g. ("A", 3) for sl_4 or ("D", 4) for so_8.
    cartan : rank x rank integer matrix
        cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
    symmetrizer : diagonal d_i = (alpha_i, alpha_i) / 2
        Equal to 1 on long roots; rational on short roots.
    gram : (Lambda_i, Lambda_j), the inverse Cartan matrix times the symmetrizer.
    rho_pairing : (Lambda_i, 2 rho) where rho is the Weyl vector.
    dual_coxeter : the dual Coxeter number.
    comark : dual marks of the highest root; a weight lies in the level-k
        alcove iff sum(comark[i] * label[i]) <= k.
    theta_labels : Dynkin labels of the highest root.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    rho_pairing: tuple[Fraction, ...]
    dual_coxeter: int
    comark: tuple[int, ...]
    theta_labels: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


# ---------------------------------------------------------------------------
# construction


def _cartan_matrix(family: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in ("A", "B", "C"):
        for i in range(rank - 1):
            bond(i, i + 1)
        if family == "B" and rank >= 2:
            bond(rank - 2, rank - 1, -1, -2)
        if family == "C" and rank >= 2:
            bond(rank - 2, rank - 1, -2, -1)
    elif family == "D":
        if rank < 3:
            raise ValueError("family D needs rank >= 3")
        for i in range(rank - 3):
            bond(i, i + 1)
        bond(rank - 3, rank - 2)
        bond(rank - 3, rank - 1)
    elif family == "E":
        if rank not in (6, 7, 8):
            raise ValueError("family E needs rank in {6, 7, 8}")
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(2, rank - 1)
    elif family == "F":
        if rank != 4:
            raise ValueError("family F needs rank 4")
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif family == "G":
        if rank != 2:
            raise ValueError("family G needs rank 2")
        bond(0, 1, -1, -3)
    else:
        raise ValueError(f"unknown family {family!r}")
    return a


def _symmetrizer(family: str, rank: int) -> list[Fraction]:
    one = Fraction(1)
    d = [one] * rank
    if family == "B":
        d[rank - 1] = Fraction(1, 2)
    elif family == "C":
        d = [Fraction(1, 2)] * rank
        d[rank - 1] = one
    elif family == "F":
        d[2] = d[3] = Fraction(1, 2)
    elif family == "G":
        d[1] = Fraction(1, 3)
    return d


def _invert_exact(m: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def lie_algebra(family: str, rank: int) -> LieAlgebraSpec:
    """Build the LieAlgebraSpec for the given Cartan-Killing type."""
    family = family.upper()
    if rank < 1:
        raise ValueError(f"rank must be positive, got {rank}")
    cartan = _cartan_matrix(family, rank)
    d = _symmetrizer(family, rank)
    # (Lambda_i, Lambda_j): G A = diag(d), hence G = diag(d) A^{-1}.
    ainv = _invert_exact([[Fraction(x) for x in row] for row in cartan])
    gram = [[d[i] * ainv[i][j] for j in range(rank)] for i in range(rank)]
    for i in range(rank):
        for j in range(i):
            assert gram[i][j] == gram[j][i], "Gram matrix must be symmetric"
    rho_pairing = [2 * sum(gram[i][j] for j in range(rank)) for i in range(rank)]

    # Highest root and dual marks, from the root system itself.
    roots = _positive_root_coords(tuple(tuple(r) for r in cartan))
    theta = max(roots, key=sum)
    comark = []
    for i in range(rank):
        cm = theta[i] * d[i]
        assert cm.denominator == 1, "dual marks must be integers"
        comark.append(int(cm))
    hv = 1 + sum(comark)
    table = _DUAL_COXETER[family](rank)
    assert table is not None and hv == table, f"dual Coxeter mismatch for {family}{rank}"
    theta_labels = tuple(sum(cartan[k][i] * theta[i] for i in range(rank))
                         for k in range(rank))

    return LieAlgebraSpec(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=tuple(d),
        gram=tuple(tuple(row) for row in gram),
        rho_pairing=tuple(rho_pairing),
        dual_coxeter=hv,
        comark=tuple(comark),
        theta_labels=theta_labels,
    )


# ---------------------------------------------------------------------------
# roots


@lru_cache(maxsize=None)
def _positive_root_coords(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, by root-string closure."""
    rank = len(cartan)
    simple = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            labels = [sum(cartan[k][i] * beta[i] for i in range(rank)) for k in range(rank)]
            for i in range(rank):
                if beta == simple[i]:
                    continue  # 2*alpha_i is never a root
                p = 0
                gamma = list(beta)
                gamma[i] -= 1
                while tuple(gamma) in roots:
                    p += 1
                    gamma[i] -= 1
                if p - labels[i] >= 1:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        nxt.add(up)
        roots |= nxt
        layer = list(nxt)
    return tuple(sorted(roots, key=lambda c: (sum(c), c)))


@dataclass(frozen=True)
class _RootData:
    coords: tuple[int, ...]
    dco: tuple[Fraction, ...]   # d_i * c_i, so (mu, root) = sum(mu_i * dco_i)
    norm: Fraction              # (root, root)


@lru_cache(maxsize=None)
def _positive_roots(spec: LieAlgebraSpec) -> tuple[_RootData, ...]:
    out = []
    for c in _positive_root_coords(spec.cartan):
        dco = tuple(spec.symmetrizer[i] * c[i] for i in range(spec.rank))
        labels = [sum(spec.cartan[k][i] * c[i] for i in range(spec.rank))
                  for k in range(spec.rank)]
        norm = sum(dco[j] * labels[j] for j in range(spec.rank))
        out.append(_RootData(coords=c, dco=dco, norm=norm))
    return tuple(out)


def _pair_weight_root(mu: Weight, root: _RootData) -> Fraction:
    return sum(m * d for m, d in zip(mu, root.dco))


# ---------------------------------------------------------------------------
# inner products and alcoves


def _check_weight(spec: LieAlgebraSpec, lam) -> Weight:
    lam = tuple(lam)
    if len(lam) != spec.rank:
        raise ValueError(f"weight {lam} has length {len(lam)}, expected rank {spec.rank}")
    return lam


def inner_product(spec: LieAlgebraSpec, lam, mu) -> Fraction:
    """Bilinear form (lam, mu) via the Gram matrix of fundamental weights."""
    lam = _check_weight(spec, lam)
    mu = _check_weight(spec, mu)
    total = Fraction(0)
    for i, li in enumerate(lam):
        if li:
            row = spec.gram[i]
            total += li * sum(mj * row[j] for j, mj in enumerate(mu) if mj)
    return total


def level(spec: LieAlgebraSpec, lam) -> int:
    """Pairing of a weight with the highest coroot, sum(comark_i * lam_i)."""
    lam = _check_weight(spec, lam)
    return sum(c * x for c, x in zip(spec.comark, lam))


def in_alcove(spec: LieAlgebraSpec, k: int, lam) -> bool:
    lam = _check_weight(spec, lam)
    return all(x >= 0 for x in lam) and level(spec, lam) <= k


def alcove_weights(spec: LieAlgebraSpec, k: int) -> list[Weight]:
    """All dominant weights of level <= k, sorted lexicographically by labels."""
    if k < 0:
        raise ValueError(f"level must be non-negative, got {k}")
    out: list[Weight] = []

    def rec(prefix: list[int], budget: int):
        i = len(prefix)
        if i == spec.rank:
            out.append(tuple(prefix))
            return
        for x in range(budget // spec.comark[i] + 1):
            rec(prefix + [x], budget - x * spec.comark[i])

    rec([], k)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# weight diagrams (Freudenthal recursion)


def _minus_simple_root(spec: LieAlgebraSpec, mu: Weight, i: int) -> Weight:
    return tuple(mu[k] - spec.cartan[k][i] for k in range(spec.rank))


def _plus_root(mu: Weight, root_labels: tuple[int, ...], j: int = 1) -> Weight:
    return tuple(m + j * r for m, r in zip(mu, root_labels))


@lru_cache(maxsize=None)
def _root_labels(spec: LieAlgebraSpec, coords: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(spec.cartan[k][i] * coords[i] for i in range(spec.rank))
                 for k in range(spec.rank))


@lru_cache(maxsize=None)
def weight_multiplicities(spec: LieAlgebraSpec, lam: Weight) -> dict[Weight, int]:
    """Full weight diagram of the irreducible module with highest weight lam.

    Uses the Freudenthal recursion, working downward from lam one simple-root
    step at a time.  A candidate at depth d (height of lam - mu) sums over
    every translate mu + j*alpha with j*height(alpha) <= d, skipping gaps, so
    the recursion is exact for non-weight candidates as well.  The returned
    dict maps each weight of the module to its multiplicity; the total count
    equals the Weyl dimension.
    """
    lam = _check_weight(spec, lam)
    if any(x < 0 for x in lam):
        raise ValueError(f"highest weight must be dominant, got {lam}")
    roots = _positive_roots(spec)
    root_data = [(r, _root_labels(spec, r.coords), sum(r.coords)) for r in roots]
    lam_rho = tuple(x + 1 for x in lam)
    lam_rho_norm = inner_product(spec, lam_rho, lam_rho)

    mults: dict[Weight, int] = {lam: 1}
    frontier = [lam]
    depth = 0
    while frontier:
        depth += 1
        candidates = {_minus_simple_root(spec, mu, i)
                      for mu in frontier for i in range(spec.rank)}
        frontier = []
        for mu in sorted(candidates - mults.keys()):
            num = Fraction(0)
            for root, labels, height in root_data:
                base = _pair_weight_root(mu, root)
                for j in range(1, depth // height + 1):
                    m_up = mults.get(_plus_root(mu, labels, j))
                    if m_up:
                        num += (base + j * root.norm) * m_up
            if num == 0:
                continue
            mu_rho = tuple(x + 1 for x in mu)
            den = lam_rho_norm - inner_product(spec, mu_rho, mu_rho)
            m = 2 * num / den
            assert m.denominator == 1 and m > 0, "Freudenthal recursion must yield positive integers"
            mults[mu] = int(m)
            frontier.append(mu)
    return mults


def weyl_dimension(spec: LieAlgebraSpec, lam) -> int:
    """Dimension of the irreducible module, by the Weyl product formula."""
    lam = _check_weight(spec, lam)
    lam_rho = tuple(x + 1 for x in lam)
    dim = Fraction(1)
    for root in _positive_roots(spec):
        dim *= _pair_weight_root(lam_rho, root) / _pair_weight_root((1,) * spec.rank, root)
    assert dim.denominator == 1
    return int(dim)


# ---------------------------------------------------------------------------
# tensor products: classical (Racah-Speiser) and level-k fused (Kac-Walton)


def _reflect_simple(spec: LieAlgebraSpec, xi: Weight, i: int) -> Weight:
    c = xi[i]
    return tuple(xi[k] - c * spec.cartan[k][i] for k in range(spec.rank))


def _to_dominant_strict(spec: LieAlgebraSpec, xi: Weight) -> tuple[Weight | None, int]:
    """Reflect a rho-shifted weight into the open dominant chamber.

    Returns (weight, sign) where sign tracks the parity of reflections used,
    or (None, 0) when xi lies on a reflection wall and cancels.
    """
    sign = 1
    for _ in range(_FOLD_CAP):
        neg = None
        for i, x in enumerate(xi):
            if x == 0:
                return None, 0
            if x < 0:
                neg = i
                break
        if neg is None:
            return xi, sign
        xi = _reflect_simple(spec, xi, neg)
        sign = -sign
    raise RuntimeError("reflection loop failed to terminate")


def _fold_alcove(spec: LieAlgebraSpec, kappa: int, xi: Weight) -> tuple[Weight | None, int]:
    """Fold a rho-shifted weight into the interior of the level alcove.

    Alternates finite reflections with the affine reflection about the wall
    (xi, theta) = kappa; weights landing on any wall cancel.
    """
    sign = 1
    for _ in range(_FOLD_CAP):
        neg = None
        for i, x in enumerate(xi):
            if x == 0:
                return None, 0
            if x < 0:
                neg = i
                break
        if neg is not None:
            xi = _reflect_simple(spec, xi, neg)
            sign = -sign
            continue
        lvl = level(spec, xi)
        if lvl == kappa:
            return None, 0
        if lvl < kappa:
            return xi, sign
        c = lvl - kappa
        xi = tuple(x - c * t for x, t in zip(xi, spec.theta_labels))
        sign = -sign
    raise RuntimeError("alcove folding failed to terminate")


def tensor_decompose(spec: LieAlgebraSpec, lam, mu) -> Counter:
    """Decomposition of the classical tensor product V_lam (x) V_mu.

    Racah-Speiser: shift every weight of the smaller factor by the other
    highest weight plus rho, reflect into the open dominant chamber with
    sign, and cancel.  Returns a Counter of dominant highest weights.
    """
    lam = _check_weight(spec, lam)
    mu = _check_weight(spec, mu)
    if any(x < 0 for x in lam) or any(x < 0 for x in mu):
        raise ValueError("tensor factors must be dominant")
    if weyl_dimension(spec, mu) > weyl_dimension(spec, lam):
        lam, mu = mu, lam
    shift = tuple(x + 1 for x in lam)
    out: Counter = Counter()
    for nu, m in weight_multiplicities(spec, mu).items():
        xi = tuple(s + n for s, n in zip(shift, nu))
        folded, sign = _to_dominant_strict(spec, xi)
        if sign:
            out[tuple(x - 1 for x in folded)] += sign * m
    bad = {w: v for w, v in out.items() if v < 0}
    assert not bad, f"negative classical multiplicity at {bad}"
    return +out


def fusion_coefficients(spec: LieAlgebraSpec, k: int, lam, mu) -> Counter:
    """Level-k fusion product of two alcove weights (Kac-Walton).

    Same signed reflection scheme as the classical decomposition, but folded
    by the affine Weyl group at level k; terms fixed by a shifted wall
    annihilate.  Returns a Counter supported on the level-k alcove.

    Commutativity is a theorem, so the cheaper weight diagram is used; the
    directional computation is available as :func:`fusion_with_second_diagram`.
    """
    lam = _check_weight(spec, lam)
    mu = _check_weight(spec, mu)
    if weyl_dimension(spec, mu) > weyl_dimension(spec, lam):
        lam, mu = mu, lam
    return fusion_with_second_diagram(spec, k, lam, mu)


def fusion_with_second_diagram(spec: LieAlgebraSpec, k: int, lam, mu) -> Counter:
    """Level-k fusion computed by folding the weight diagram of mu shifted
    by lam + rho; no argument reordering."""
    lam = _check_weight(spec, lam)
    mu = _check_weight(spec, mu)
    for w in (lam, mu):
        if not in_alcove(spec, k, w):
            raise OutOfAlcoveError(f"weight {w} is outside the level-{k} alcove of {spec}")
    kappa = k + spec.dual_coxeter
    shift = tuple(x + 1 for x in lam)
    out: Counter = Counter()
    for nu, m in weight_multiplicities(spec, mu).items():
        xi = tuple(s + n for s, n in zip(shift, nu))
        folded, sign = _fold_alcove(spec, kappa, xi)
        if sign:
            out[tuple(x - 1 for x in folded)] += sign * m
    bad = {w: v for w, v in out.items() if v < 0}
    assert not bad, f"negative fusion multiplicity at {bad}"
    return +out


# ---------------------------------------------------------------------------
# modular structure constants


def conformal_weight(spec: LieAlgebraSpec, k: int, lam) -> Fraction:
    """Exact h_lam = (lam, lam + 2 rho) / (2 (k + h_vee)) for an alcove weight."""
    lam = _check_weight(spec, lam)
    if not in_alcove(spec, k, lam):
        raise OutOfAlcoveError(f"weight {lam} is outside the level-{k} alcove of {spec}")
    quad = inner_product(spec, lam, lam) + sum(
        x * r for x, r in zip(lam, spec.rho_pairing))
    return quad / (2 * (k + spec.dual_coxeter))


def quantum_dimension(spec: LieAlgebraSpec, k: int, lam) -> float:
    """Quantum dimension as a sine product over positive roots (float)."""
    lam = _check_weight(spec, lam)
    if not in_alcove(spec, k, lam):
        raise OutOfAlcoveError(f"weight {lam} is outside the level-{k} alcove of {spec}")
    kappa = k + spec.dual_coxeter
    lam_rho = tuple(x + 1 for x in lam)
    rho = (1,) * spec.rank
    dim = 1.0
    for root in _positive_roots(spec):
        dim *= (math.sin(math.pi * float(_pair_weight_root(lam_rho, root)) / kappa)
                / math.sin(math.pi * float(_pair_weight_root(rho, root)) / kappa))
    return dim


# ---------------------------------------------------------------------------
# label rendering ("2L1", "L1+L2", "0")


def weight_label(lam: Weight) -> str:
    """Compact label for a weight: "0", "L2", "2L1+L3", ..."""
    if not any(lam):
        return "0"
    parts = []
    for i, c in enumerate(lam):
        if c == 0:
            continue
        parts.append(f"L{i + 1}" if c == 1 else f"{c}L{i + 1}")
    return "+".join(parts)


def parse_weight_label(text: str, rank: int) -> Weight:
    """Inverse of :func:`weight_label`; also accepts "unit" for the zero weight."""
    text = text.strip()
    if text in ("0", "unit"):
        return (0,) * rank
    labels = [0] * rank
    for part in text.split("+"):
        part = part.strip()
        head, _, idx = part.partition("L")
        if not idx:
            raise ValueError(f"cannot parse weight label {text!r}")
        try:
            coef = int(head) if head else 1
            i = int(idx)
        except ValueError:
            raise ValueError(f"cannot parse weight label {text!r}") from None
        if not 1 <= i <= rank:
            raise ValueError(f"index L{i} out of range for rank {rank}")
        labels[i - 1] += coef
    return tuple(labels)
