#!/usr/bin/env python3
"""Emit Taylor coefficients (in z = p - 1/2) of the Riemann-Siegel remainder
functions C0..C4 as a C++ include file.

  Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
  C0 = Psi
  C1 = -Psi'''/(96 pi^2)
  C2 = Psi''/(64 pi^2) + Psi^(6)/(18432 pi^4)
  C3 = -Psi'/(64 pi^2) - Psi^(5)/(3840 pi^4) - Psi^(9)/(5308416 pi^6)
  C4 = Psi/(128 pi^2) + 19 Psi^(4)/(24576 pi^4) + 11 Psi^(8)/(5898240 pi^6)
       + Psi^(12)/(2038431744 pi^8)
"""
import sys
import mpmath as mp

mp.mp.dps = 80
DEG = 72   # Psi is entire; 72 terms is far past double-extended resolution on |z| <= 1/2
KEEP = 48


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


# Taylor expansion around a regular point; z = 1/2 is not a pole of the quotient.
a = mp.taylor(psi, mp.mpf(1) / 2, DEG)


def deriv(m):
    out = []
    for n in range(m, len(a)):
        out.append(a[n] * mp.factorial(n) / mp.factorial(n - m))
    return out


def combo(terms):
    size = min(len(deriv(m)) for _, m in terms)
    res = [mp.mpf(0)] * size
    for coef, m in terms:
        d = deriv(m)
        for i in range(size):
            res[i] += coef * d[i]
    return res[:KEEP]


pi = mp.pi
series = [
    combo([(1, 0)]),
    combo([(-1 / (96 * pi**2), 3)]),
    combo([(1 / (64 * pi**2), 2), (1 / (18432 * pi**4), 6)]),
    combo([(-1 / (64 * pi**2), 1), (-1 / (3840 * pi**4), 5), (-1 / (5308416 * pi**6), 9)]),
    combo([(1 / (128 * pi**2), 0), (19 / (24576 * pi**4), 4),
           (11 / (5898240 * pi**6), 8), (1 / (2038431744 * pi**8), 12)]),
]

out = sys.stdout
out.write("// Generated by gen_rs_coefficients.py; do not edit.\n")
out.write("// Taylor coefficients of C0..C4 in powers of (p - 1/2).\n")
out.write("inline constexpr int kRsTerms = %d;\n" % KEEP)
out.write("inline constexpr long double kRsCoeff[5][kRsTerms] = {\n")
for s in series:
    out.write("  {\n")
    for c in s:
        out.write("    %sL,\n" % mp.nstr(c, 30, min_fixed=0, max_fixed=0))
    out.write("  },\n")
out.write("};\n")
