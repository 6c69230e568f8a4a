"""
Gluing two P-fibered braids
===========================

A compatible sequence of braids can be realized by one semiholomorphic
polynomial whose Newton boundary has one face per braid.
"""

from singforge.looppoly import LoopPoly
from singforge.mixedpoly import face_function, g_polynomial, newton
from singforge.nondegeneracy import check_strongly_inner_nondegenerate
from singforge.pfibered import PFiberData, realize, verify_compatible
from singforge.trigpoly import TrigPoly

hopf = LoopPoly([TrigPoly({2: -1}), 0, 1])
seq = [
    PFiberData(hopf, 0, TrigPoly({4: -1})),
    PFiberData(LoopPoly([TrigPoly({4: -1}), 1]), 2),
]

rep = verify_compatible(seq)
for line in rep.lines:
    print(line)
print([c.margin for c in rep.certificates])

res = realize(seq)
f = res.poly
print(f)
print(newton(f).boundary_vertices)

# every face function gives back the loop it came from
for P, G in zip(res.weights, res.loops):
    print(P, g_polynomial(face_function(f, P), P).max_coeff_diff(G))

print(check_strongly_inner_nondegenerate(f).status)

# breaking the ladder condition is reported, not silently accepted
bad = [seq[0], PFiberData(LoopPoly([TrigPoly({4: -2}), 1]), 2)]
bad_rep = verify_compatible(bad)
print(bad_rep.ok, [line for line in bad_rep.lines if not line.startswith("ok")])
