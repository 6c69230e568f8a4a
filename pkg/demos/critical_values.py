"""
Critical values of u^{s+1} + a_t u
===================================

For the loop g_t(u) = u^{s+1} - e^{2imt} u the critical values in the
u-plane have a closed form.  We compare it with what the library computes
and with the winding margin of the certificate.
"""

import numpy as np

from singforge.looppoly import LoopPoly
from singforge.pfibered import PFiberData, certify, critical_values
from singforge.trigpoly import TrigPoly

ts = np.linspace(0, 2 * np.pi, 9)

for s in (1, 2, 3):
    for m in (1, 2):
        data = PFiberData(LoopPoly([TrigPoly({2 * m: -1}), 1]), s)
        worst = 0.0
        for t in ts:
            vals = critical_values(data, t)
            vals = vals[np.abs(vals) > 1e-12]
            expected = -(s ** s / (s + 1) ** (s + 1)) * np.exp(2j * m * (s + 1) * t)
            worst = max(worst, np.abs(vals - expected).max())
        cert = certify(data)
        print(f"s={s} m={m}  value error {worst:.1e}  margin {cert.margin:.4f}  (expected {2 * m * (s + 1)})")
