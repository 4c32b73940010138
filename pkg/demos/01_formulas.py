#!/usr/bin/env python3
"""Walk through the closed-form invariants.

The Yagita invariant of GL_n over a ring depends on the ring only through
l = [F(zeta_p) : F].  Below l is computed symbolically for a few rings and
the GL/SL tables are printed; note the factor-of-2 ambiguity in the SL
column over rings missing roots of -1, and how the Z-specific values
resolve it.
"""

from yagita import (
    Cyclotomic,
    QuadraticOrder,
    RationalIntegers,
    compute_l,
    table,
    yagita_gl,
    yagita_sl,
    yagita_sl_Z,
)
from yagita.harness import table_tsv

Z = RationalIntegers()

print("degrees l = [F(zeta_p) : F]")
for ring in (Z, Cyclotomic(4), Cyclotomic(5), QuadraticOrder(-7)):
    row = {p: compute_l(ring, p) for p in (2, 3, 5, 7)}
    print(f"  {str(ring):12s} -> {row}")

print()
print("GL_n(Z) and SL_n(Z) for p = 5 (note the n = 4 special value):")
print(table_tsv(table(5, Z, 8)))

print()
print("p = 2 over Z: the value is simply twice the largest 2-power <= n")
print(table_tsv(table(2, Z, 8)))

print()
print("rings missing roots of -1 leave SL_2 pinned only up to a factor of 2:")
print("  SL_2 over Z[zeta_5]:", yagita_sl(5, 2, 1, Cyclotomic(5)))
print("  SL_2 over Z[zeta_20]:", yagita_sl(5, 2, 1, Cyclotomic(20)))
print("  SL_2 over Z:", yagita_sl(2, 2, 1, Z), "-> resolved over Z to", yagita_sl_Z(2, 2))

print()
print("l enters the GL value through n/l:")
for n in (6, 12, 18, 54):
    print(f"  n={n:3d}: over Z[zeta_3] (l=1): {yagita_gl(3, n, 1):4d}   over Z (l=2): {yagita_gl(3, n, 2):4d}")
