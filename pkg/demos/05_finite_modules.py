"""Finite-dimensional modules on pattern bases.

Builds the eight-dimensional module with top row (2,1,0), shows the
diagonal spectra, checks every relation as an exact matrix identity,
and exhibits the two-dimensional glued module whose Vandermonde action
is not diagonalizable over the chosen line.
"""

from skewgt import gtmodules as gt

top = (2, 1, 0)
mod = gt.build_module(top)
print(f"top row {top}: dimension {mod.dim} "
      f"(Weyl formula gives {gt.weyl_dim(top)})")
print("row fillings:",
      {k: gt.count_row_fillings(top, k) for k in (2, 3)})
print("V2 spectrum:", [str(v) for v in mod.spectrum("V2")])
print("V3 spectrum:", [str(v) for v in mod.spectrum("V3")])
print()

report = gt.module_relation_report(mod)
print(report.table())
print()

print("a sign flip changes the Vandermonde action only:")
signs = gt.SignData.from_vectors(top, {2: [1, -1, 1, -1]})
flipped = gt.build_module(top, signs)
print("V2 spectrum now:", [str(v) for v in flipped.spectrum("V2")])
print()

print("the glued two-dimensional module:")
ns = gt.example_nonsemisimple(1)
print("V2 matrix:", ns.matrices["V2"])
print(gt.nonsemisimple_report(ns).table())
