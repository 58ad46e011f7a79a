"""Composing auto-equivalences and identifying the groups they generate.

Composition is tracked at the level of permutations of simple objects.  The
two zeta-choices for the order-4 current of the sl_4 level-2 category close
into a Klein four-group; the three order-2 currents of the so_8 level-2
category pairwise braid symmetrically, so their composites commute and the
permutation-level group is again Z2 x Z2.
"""

from simplecurrents import (build_wzw_data, commute_test, compose,
                            construct_autoeq, generated_group, lie_algebra)
from simplecurrents.angles import angle

# Klein four-group from one order-4 current
data = build_wzw_data(lie_algebra("A", 3), 2)
g = data.ring.index("2L1")
f_i = construct_autoeq(data, g, angle(1, 4))
f_mi = construct_autoeq(data, g, angle(3, 4))
f_sq = construct_autoeq(data, data.ring.index("2L2"), angle(1, 2))

print("F(g,i) o F(g,i)   = id :", compose(f_i, f_i) == tuple(range(data.size)))
print("F(g,i) o F(g,-i)  = F(g^2,-1) :", compose(f_i, f_mi) == f_sq.permutation)
rep = generated_group([f_i, f_mi])
print("generated group:", rep.iso_type)

# the so_8 case: three commuting currents
data8 = build_wzw_data(lie_algebra("D", 4), 2)
labels = ("2L1", "2L3", "2L4")
idx = {lab: data8.ring.index(lab) for lab in labels}
aes = {lab: construct_autoeq(data8, idx[lab], angle(1, 2)) for lab in labels}

print("\nso_8 level 2:")
for a in labels:
    for b in labels:
        if a < b:
            print(f"  {a} and {b} braid symmetrically:",
                  commute_test(data8, idx[a], idx[b]))
print("  F(2L1) o F(2L3) == F(2L4):",
      compose(aes["2L1"], aes["2L3"]) == aes["2L4"].permutation)
rep8 = generated_group(list(aes.values()))
print("  generated group:", rep8.iso_type)
print("  caveat:", rep8.caveat)
