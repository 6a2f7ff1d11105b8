"""Skew monoid ring of shift operators with rational-function coefficients.

Elements are finite sums  sum_mu  a_mu * mu  where mu ranges over the
free abelian group generated by one unit shift per shiftable variable
(the generator d_v sends x_v to x_v - 1 and fixes everything else) and
a_mu is a :class:`RatFunc`.  Coefficients are stored on the left; the
product twists the right factor's coefficients through the left
factor's shift:

    (a * mu) (b * nu) = (a * mu(b)) * (mu nu).

Row permutations act on everything: on coefficients by permuting the
variables of each row, and on shifts by conjugation, which permutes the
shift exponents within each row.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .polys import Context, Poly, VarId
from .ratfunc import RatFunc

ShiftKey = Tuple[int, ...]


class RowPermutation:
    """A permutation of each row's variable indices (rows act independently)."""

    __slots__ = ("perms",)

    def __init__(self, perms: Mapping[int, Tuple[int, ...]]):
        clean = {}
        for row, images in perms.items():
            images = tuple(images)
            if sorted(images) != list(range(1, len(images) + 1)):
                raise ValueError(f"row {row}: not a permutation of 1..{len(images)}")
            if images != tuple(range(1, len(images) + 1)):
                clean[row] = images
        self.perms = clean

    @staticmethod
    def identity() -> "RowPermutation":
        return RowPermutation({})

    @staticmethod
    def transposition(ctx: Context, row: int, i: int, j: int) -> "RowPermutation":
        size = len(ctx.rows[row])
        images = list(range(1, size + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return RowPermutation({row: tuple(images)})

    @staticmethod
    def cycle(ctx: Context, row: int, cycle: Tuple[int, ...]) -> "RowPermutation":
        size = len(ctx.rows[row])
        images = list(range(1, size + 1))
        for pos, cur in enumerate(cycle):
            images[cur - 1] = cycle[(pos + 1) % len(cycle)]
        return RowPermutation({row: tuple(images)})

    def image(self, row: int, i: int) -> int:
        p = self.perms.get(row)
        return p[i - 1] if p is not None else i

    def of_var(self, v: VarId) -> VarId:
        return (v[0], self.image(v[0], v[1]))

    def var_mapping(self, ctx: Context) -> Dict[VarId, VarId]:
        out = {}
        for row in self.perms:
            for v in ctx.rows.get(row, ()):
                out[v] = self.of_var(v)
        return out

    def compose(self, other: "RowPermutation") -> "RowPermutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        rows = set(self.perms) | set(other.perms)
        out = {}
        for row in rows:
            size = len(self.perms.get(row, ())) or len(other.perms.get(row, ()))
            out[row] = tuple(self.image(row, other.image(row, i))
                             for i in range(1, size + 1))
        return RowPermutation(out)

    def inverse(self) -> "RowPermutation":
        out = {}
        for row, images in self.perms.items():
            inv = [0] * len(images)
            for i, img in enumerate(images, start=1):
                inv[img - 1] = i
            out[row] = tuple(inv)
        return RowPermutation(out)

    def row_parity(self, row: int) -> int:
        """0 for even, 1 for odd."""
        images = self.perms.get(row)
        if images is None:
            return 0
        inv = 0
        for i in range(len(images)):
            for j in range(i + 1, len(images)):
                if images[i] > images[j]:
                    inv += 1
        return inv % 2

    @property
    def is_even_product(self) -> bool:
        return all(self.row_parity(row) == 0 for row in self.perms)

    def __eq__(self, other):
        return isinstance(other, RowPermutation) and self.perms == other.perms

    def __hash__(self):
        return hash(tuple(sorted(self.perms.items())))

    def __repr__(self):
        if not self.perms:
            return "RowPermutation(id)"
        body = ", ".join(f"{row}:{images}" for row, images in sorted(self.perms.items()))
        return f"RowPermutation({body})"


def sym_generators(ctx: Context):
    """Adjacent transpositions per row: they generate the product of
    symmetric groups acting on the rows."""
    gens = []
    for row in sorted(ctx.rows):
        size = len(ctx.rows[row])
        for i in range(1, size):
            gens.append(RowPermutation.transposition(ctx, row, i, i + 1))
    return gens


def alt_generators(ctx: Context):
    """Consecutive 3-cycles per row: they generate the product of
    alternating groups (rows of size < 3 contribute nothing)."""
    gens = []
    for row in sorted(ctx.rows):
        size = len(ctx.rows[row])
        for i in range(1, size - 1):
            gens.append(RowPermutation.cycle(ctx, row, (i, i + 1, i + 2)))
    return gens


class SkewElement:
    """Finite sum of shifts with left rational-function coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: Mapping[ShiftKey, RatFunc]):
        self.ctx = ctx
        clean = {}
        for key, coeff in terms.items():
            if not coeff.is_zero:
                clean[key] = coeff
        self.terms = clean

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(ctx: Context) -> "SkewElement":
        return SkewElement(ctx, {})

    @staticmethod
    def identity_shift(ctx: Context) -> ShiftKey:
        return (0,) * ctx.shift_rank

    @staticmethod
    def from_coeff(coeff, ctx: Optional[Context] = None) -> "SkewElement":
        """Embed a rational function (or polynomial, or scalar) at the
        identity shift."""
        if isinstance(coeff, RatFunc):
            return SkewElement(coeff.ctx, {SkewElement.identity_shift(coeff.ctx): coeff})
        if isinstance(coeff, Poly):
            return SkewElement.from_coeff(RatFunc(coeff))
        if ctx is None:
            raise ValueError("scalar embedding needs an explicit context")
        return SkewElement.from_coeff(RatFunc.const(ctx, coeff))

    @staticmethod
    def one(ctx: Context) -> "SkewElement":
        return SkewElement.from_coeff(RatFunc.one(ctx))

    @staticmethod
    def shift_gen(ctx: Context, v: VarId, power: int = 1) -> "SkewElement":
        key = [0] * ctx.shift_rank
        key[ctx.shift_pos(v)] = power
        return SkewElement(ctx, {tuple(key): RatFunc.one(ctx)})

    @staticmethod
    def from_right(ctx: Context, terms: Mapping[ShiftKey, RatFunc]) -> "SkewElement":
        """Build from right-coefficient data: mu * alpha = mu(alpha) * mu."""
        out = {}
        for key, coeff in terms.items():
            out[key] = coeff.shifted(_shift_map(ctx, key))
        return SkewElement(ctx, out)

    # -- views -----------------------------------------------------------

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def right_coefficients(self) -> Dict[ShiftKey, RatFunc]:
        """Re-express each term as mu * alpha; round trips with from_right."""
        return {key: coeff.shifted(_neg_shift_map(self.ctx, key))
                for key, coeff in self.terms.items()}

    def coefficient(self, key: ShiftKey) -> RatFunc:
        return self.terms.get(key, RatFunc.zero(self.ctx))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def identity_coefficient(self) -> RatFunc:
        return self.coefficient(SkewElement.identity_shift(self.ctx))

    # -- ring operations ---------------------------------------------------

    def _promote(self, other) -> Optional["SkewElement"]:
        if isinstance(other, SkewElement):
            if other.ctx != self.ctx:
                raise ValueError("elements from different contexts")
            return other
        if isinstance(other, (RatFunc, Poly)):
            return SkewElement.from_coeff(other)
        if isinstance(other, (int, Fraction)):
            return SkewElement.from_coeff(other, self.ctx)
        return None

    def __add__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            cur = out.get(key)
            out[key] = coeff if cur is None else cur + coeff
        return SkewElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return SkewElement(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        out: Dict[ShiftKey, RatFunc] = {}
        for k1, a1 in self.terms.items():
            smap = _shift_map(self.ctx, k1)
            for k2, a2 in other.terms.items():
                coeff = a1 * a2.shifted(smap)
                key = tuple(x + y for x, y in zip(k1, k2))
                cur = out.get(key)
                out[key] = coeff if cur is None else cur + coeff
        return SkewElement(self.ctx, out)

    def __rmul__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers must be nonnegative integers")
        out = SkewElement.one(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    # -- evaluation -----------------------------------------------------

    def evaluate(self, a) -> RatFunc:
        """Apply the element to a field element: sum_mu mu(alpha_mu * a)
        with right coefficients alpha_mu."""
        a = _coerce_ratfunc(self.ctx, a)
        total = RatFunc.zero(self.ctx)
        for key, alpha in self.right_coefficients().items():
            total = total + (alpha * a).shifted(_shift_map(self.ctx, key))
        return total

    def coevaluate(self, a) -> RatFunc:
        """The transposed action: sum_mu alpha_mu * mu^{-1}(a)."""
        a = _coerce_ratfunc(self.ctx, a)
        total = RatFunc.zero(self.ctx)
        for key, alpha in self.right_coefficients().items():
            total = total + alpha * a.shifted(_neg_shift_map(self.ctx, key))
        return total

    # -- group action ------------------------------------------------------

    def act(self, g: RowPermutation) -> "SkewElement":
        """Automorphism induced by a row permutation: coefficients are
        permuted and each shift is conjugated (its exponents move within
        their row)."""
        mapping = g.var_mapping(self.ctx)
        out: Dict[ShiftKey, RatFunc] = {}
        for key, coeff in self.terms.items():
            # conjugated shift: exponent at g(v) = old exponent at v
            new_key = [0] * len(key)
            for pos, m in enumerate(key):
                if m:
                    v = self.ctx.shift_vars[pos]
                    w = mapping.get(v, v)
                    new_key[self.ctx.shift_pos(w)] += m
            cur = out.get(tuple(new_key))
            moved = coeff.permuted(mapping)
            out[tuple(new_key)] = moved if cur is None else cur + moved
        return SkewElement(self.ctx, out)

    # -- i/o ------------------------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for key in sorted(self.terms):
            shift = {self.ctx.var_key(self.ctx.shift_vars[p]): m
                     for p, m in enumerate(key) if m}
            terms.append({"shift": shift, "coeff": self.terms[key].to_json()})
        return {"terms": terms}

    @staticmethod
    def from_json(ctx: Context, data: dict) -> "SkewElement":
        out = {}
        for entry in data["terms"]:
            key = [0] * ctx.shift_rank
            for skey, m in entry["shift"].items():
                k, i = skey.split(",")
                key[ctx.shift_pos((int(k), int(i)))] = int(m)
            out[tuple(key)] = RatFunc.from_json(ctx, entry["coeff"])
        return SkewElement(ctx, out)

    def _shift_str(self, key: ShiftKey) -> str:
        parts = []
        for pos, m in enumerate(key):
            if m:
                name = self.ctx.shift_name(self.ctx.shift_vars[pos])
                parts.append(name if m == 1 else f"{name}^{m}")
        return "*".join(parts) if parts else "e"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms):
            pieces.append(f"[{self.terms[key]}] {self._shift_str(key)}")
        return "  +  ".join(pieces)

    __repr__ = __str__


def _shift_map(ctx: Context, key: ShiftKey) -> Dict[VarId, int]:
    return {ctx.shift_vars[p]: m for p, m in enumerate(key) if m}


def _neg_shift_map(ctx: Context, key: ShiftKey) -> Dict[VarId, int]:
    return {ctx.shift_vars[p]: -m for p, m in enumerate(key) if m}


def _coerce_ratfunc(ctx: Context, a) -> RatFunc:
    if isinstance(a, RatFunc):
        return a
    if isinstance(a, Poly):
        return RatFunc(a)
    return RatFunc.const(ctx, a)


def commutator(a: SkewElement, b: SkewElement) -> SkewElement:
    return a * b - b * a


def convert_coefficients(u: SkewElement, side: str) -> Dict[ShiftKey, RatFunc]:
    """Coefficient view of an element on the chosen side of the shifts.

    The stored convention is left; "right" re-expresses each term as
    mu * alpha.  Converting back with `from_right` is the identity.
    """
    if side == "left":
        return dict(u.terms)
    if side == "right":
        return u.right_coefficients()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def is_invariant(u: SkewElement, group: str) -> bool:
    """Whether every generator of the chosen row-permutation group fixes u.

    group: "S" (product of symmetric groups) or "A" (product of
    alternating groups).  Generator checks suffice because the action is
    by automorphisms.
    """
    name = group.split("-")[0].upper()
    if name == "S":
        gens = sym_generators(u.ctx)
    elif name == "A":
        gens = alt_generators(u.ctx)
    else:
        raise ValueError(f"unknown group {group!r}; expected 'S' or 'A'")
    return all(u.act(g) == u for g in gens)
