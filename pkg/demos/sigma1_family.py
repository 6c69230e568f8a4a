"""
The family built from a single crossing
=======================================

Starting from sigma_1 on two strands we build the sequence of braids
indexed by m and check the P-fibered margin of each member.
"""

from singforge.braid import BraidWord
from singforge.pfibered import proposition_T

res = proposition_T(BraidWord.parse("s=2: s1"))
print("threshold M =", res.M)
print("dominance:", res.dominance)
for m, cert in sorted(res.certificates.items()):
    print(m, cert.status, round(cert.margin, 4), "expected about", 2 * m + 2)
