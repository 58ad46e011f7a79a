"""Constructing auto-equivalences from invertible objects.

Every invertible g gives a profile (M, q, A).  When gcd(A+1, M) = 1, each
admissible primitive M-th root zeta (zeta^A = q^2) produces a monoidal
auto-equivalence X -> g^grade(X) (x) X.  The choice of zeta changes the
permutation: for the order-4 current of the sl_4 level-2 category, one
choice gives charge conjugation and is braided, the other is not.
"""

from simplecurrents import (admissible_zetas, build_wzw_data, construct_autoeq,
                            exists_autoequivalence, invertibles, lie_algebra,
                            profile)

data = build_wzw_data(lie_algebra("A", 3), 2)
ring = data.ring

print("invertible objects and their profiles:")
for g in invertibles(ring):
    p = profile(data, g)
    gate = "passes" if exists_autoequivalence(p) else "fails"
    print(f"  {ring.simples[g]:4}  M={p.M}  q={p.q}  A={p.A}  gate {gate},"
          f" zetas {[str(z) for z in admissible_zetas(p)]}")

g = ring.index("2L1")
for zeta in admissible_zetas(profile(data, g)):
    ae = construct_autoeq(data, g, zeta)
    moved = {ring.simples[i]: ring.simples[x]
             for i, x in enumerate(ae.permutation) if i != x}
    print(f"\nF(2L1, {zeta}):")
    print("  braided:", ae.braided, " pivotal:", ae.pivotal,
          " order bound:", ae.order_bound)
    print("  moved objects:", moved)
    print("  equals charge conjugation:", ae.permutation == ring.dual)
