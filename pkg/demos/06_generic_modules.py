"""Modules on a lattice window around a regular point.

The basis is the set of shifted staircase points within the window;
generators act by evaluated coefficients.  Relations hold exactly on
interior vectors, whose neighbors all stay inside the window.
"""

from fractions import Fraction

from skewgt import gtmodules as gt

print("rank 2, base entry 1/3, radius 2:")
mod = gt.build_generic_module([(Fraction(1, 3),), (1, 0)], radius=2)
print(f"  dimension {mod.dim}, interior {mod.interior}")
print("  X11 spectrum:", [str(v) for v in mod.spectrum("X11")])
print(gt.generic_module_report(mod).table())
print()

print("rank 3, radius 1 (the row-2 Vandermonde now moves with the orbit):")
point = [(Fraction(1, 2),), (Fraction(1, 3), Fraction(-1, 7)), (2, 1, 0)]
mod3 = gt.build_generic_module(point, radius=1)
print(f"  dimension {mod3.dim}, {len(mod3.interior)} interior")
print("  distinct V2 values:", sorted({str(v) for v in mod3.spectrum('V2')}))
print(gt.generic_module_report(mod3).table())
