"""
Can this knot be the closure of a u-even braid?
===============================================

Two necessary conditions on the Alexander polynomial: a reduction mod 2
and a factorization over the integers.  Either one failing rules the
symmetry out.
"""

from singforge.obstruction import symmetry_report

knots = {
    "unknot": [1],
    "trefoil": [1, -1, 1],
    "figure eight": [-1, 3, -1],
    "8_16": [1, -4, 8, -9, 8, -4, 1],
}

for name, delta in knots.items():
    rep = symmetry_report(delta)
    print(f"{name:13s} murasugi={rep['murasugi']['verdict']:10s} "
          f"hartley={rep['hartley']['verdict']:10s} -> {rep['verdict']}")

# the trefoil: Delta(t^2) = 1 - t^2 + t^4 is irreducible, so no factor f
# with f(t) f(-t) = Delta(t^2) exists
print(symmetry_report([1, -1, 1])["hartley"]["details"]["factors"])
