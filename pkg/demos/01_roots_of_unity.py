"""Exact root-of-unity arithmetic with RationalAngle.

Braiding eigenvalues, twists, and monodromies are all single roots of unity,
so we store them as reduced rational angles in turns: angle(3, 4) is
e^(2*pi*i*3/4) = -i.  Multiplying roots of unity is adding angles mod 1;
nothing here ever touches floating point.
"""

from simplecurrents import angle, primitive_angles

q = angle(3, 4)          # -i
print("q        =", q)
print("q * q    =", q + q)           # angles add: (-i)^2 = -1
print("q^4      =", 4 * q)           # integer scaling is powering
print("order    =", q.order)         # multiplicative order = reduced denominator

# normalisation happens on construction
print("6/4 turn =", angle(6, 4))     # reduced to 1/2
print("-1/4 turn =", angle(-1, 4))   # normalised to 3/4

# primitivity drives the zeta choices later on
print("primitive 4th roots:", [str(z) for z in primitive_angles(4)])
print("is 1/2 a primitive 4th root?", angle(1, 2).is_primitive(4))

# inverses: the conjugate root
print("q + (-q) =", q + (-q))
