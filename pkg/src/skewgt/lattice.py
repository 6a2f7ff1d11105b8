"""Integer lattice span checks for shift-support sets.

A set of shift vectors generates the full shift group exactly when the
integer row span of the stacked matrix is all of Z^d.  That holds iff
integer elimination leaves d pivots whose product is a unit, i.e. every
invariant factor equals 1.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple


def lattice_spans_ambient(vectors: Iterable[Sequence[int]], rank: int) -> bool:
    """True iff the integer span of the vectors is all of Z^rank."""
    if rank == 0:
        return True
    rows = [list(v) for v in vectors if any(v)]
    pivots = []
    col = 0
    while col < rank and rows:
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not live:
            col += 1
            rows = rest
            continue
        # euclidean reduction in this column until one nonzero entry remains
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            base = live[0]
            reduced = [base]
            for r in live[1:]:
                q = r[col] // base[col]
                for j in range(col, rank):
                    r[j] -= q * base[j]
                if r[col] != 0:
                    reduced.append(r)
                else:
                    rest.append(r)
            live = reduced
        pivots.append(abs(live[0][col]))
        rows = rest
        col += 1
    if len(pivots) < rank:
        return False
    prod = 1
    for p in pivots:
        prod *= p
    return prod == 1


def supports_generate_group(supports: Iterable[Tuple[int, ...]], rank: int) -> bool:
    """Span check for a symmetric support set (closed under negation).

    Symmetry makes monoid generation and group generation coincide; a
    non-symmetric input is rejected rather than answered wrongly.
    """
    vecs = {tuple(v) for v in supports}
    for v in vecs:
        if tuple(-x for x in v) not in vecs:
            raise ValueError(
                "monoid case unsupported: support set is not closed under negation")
    return lattice_spans_ambient(sorted(vecs), rank)
