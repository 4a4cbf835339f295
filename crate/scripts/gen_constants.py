#!/usr/bin/env python3
"""Regenerate crates/xn-arith/src/constants.rs.

Each constant is computed from a defining series with mpmath at 100 working
digits and written with 80 digits after the decimal point:

  PI           Chudnovsky-type evaluation (mpmath.pi)
  EULER_GAMMA  lim (H_n - log n), mpmath.euler
  LN_GLAISHER  log A via zeta'(-1) = 1/12 - log A
  ZETA_PRIME_M1  zeta'(-1) by mpmath.zeta(-1, derivative=1)
  SCATTERING_C   1 - log(4 pi) + zeta'(-1)/zeta(-1)

Usage: python3 scripts/gen_constants.py > crates/xn-arith/src/constants.rs
"""
import mpmath as mp

mp.mp.dps = 100
DIGITS = 80


def fmt(x):
    s = mp.nstr(x, DIGITS + 10, strip_zeros=False, min_fixed=-mp.inf, max_fixed=mp.inf)
    sign = ""
    if s.startswith("-"):
        sign, s = "-", s[1:]
    whole, frac = s.split(".")
    return sign + whole + "." + (frac + "0" * DIGITS)[:DIGITS]


zp = mp.zeta(-1, derivative=1)
values = [
    ("PI", mp.pi, "pi"),
    ("EULER_GAMMA", mp.euler, "Euler-Mascheroni constant"),
    ("ZETA_PRIME_M1", zp, "derivative of the Riemann zeta function at -1"),
    ("LN_GLAISHER", mp.mpf(1) / 12 - zp, "logarithm of the Glaisher-Kinkelin constant"),
    ("SCATTERING_C", 1 - mp.log(4 * mp.pi) + zp / mp.zeta(-1),
     "1 - log(4 pi) + zeta'(-1)/zeta(-1)"),
]

print("//! High-precision constants, generated by `scripts/gen_constants.py`.")
print("//! Do not edit by hand.")
print()
for name, val, doc in values:
    print(f"/// {doc[0].upper() + doc[1:]}.")
    print(f'pub const {name}: &str = "{fmt(val)}";')
