# Lower-bound instances: one per piece of the strong ratio, plus the plain one.
from fractions import Fraction

from favgame import poa_certificate, spoa_certificate, verify
from favgame.bounds import compute_breakpoints

bps = compute_breakpoints()
for k in range(1, 9):
    lo, hi = bps.segment(k)
    hi = min(hi, 3)
    s = Fraction((float(lo) + float(hi)) / 2).limit_denominator(100)
    cert = spoa_certificate(k, s)
    report = verify(cert)
    sizes = ", ".join(f"{lab}={j.size}" for lab, j in zip(cert.labels, cert.instance.jobs))
    print(f"piece {k} at s={s}: ratio {report.values['ratio']}  passed={report.passed}")
    print("   ", sizes)

# The plain-equilibrium construction at s = 2 reaches 15/7.
report = verify(poa_certificate(2))
print(report.details)
print(report.to_json())
