"""
From a braid to a polynomial: the Hopf link
============================================

The closure of the square of the single generator on two strands is the
Hopf link.  We read a loop of polynomials off the geometric braid, turn it
into a mixed polynomial and ask the certificates whether the result has a
weakly isolated singularity.
"""

import numpy as np

from singforge.braid import BraidWord, detect_symmetry, from_word
from singforge.looppoly import from_braid, simple_root_margin
from singforge.mixedpoly import from_loop, newton
from singforge.nondegeneracy import check_inner_nondegenerate, check_strongly_inner_nondegenerate

word = BraidWord.parse("s=2: s1 s1")
B = from_word(word)
print(B.samples.shape, B.closure)

# which symmetries does the braid carry?
report = detect_symmetry(B)
print(sorted(report.tags))

# the loop g_t(u) whose roots are the strands at time t
g = from_braid(B)
print(g)
print(simple_root_margin(g))

# lift to a mixed polynomial with weight k = 1
f = from_loop(g, 1)
print(f)
nd = newton(f)
print(nd.boundary_vertices, nd.n_faces)

# both nondegeneracy checks should pass with a healthy margin
for check in (check_inner_nondegenerate, check_strongly_inner_nondegenerate):
    cert = check(f)
    print(cert.check, cert.status, np.round(cert.margin, 4))
