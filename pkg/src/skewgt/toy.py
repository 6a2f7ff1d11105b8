"""Rank-one shift algebra over one variable, with centralizer witnesses.

Over C[x] with the single shift d (d sends x to x-1), fix a polynomial
f with f(0) != 0 and set

    X = d * f(x)/x        Y = d^{-1}.

The algebra generated by C[x], X, Y contains 1/(x+c) for every integer
c, and the containment is effective: each inverse is produced as an
explicit word in X and Y, cleared by a polynomial multiple, and finished
with one exact linear division.  `witness_inverse` builds that word,
performs the division, and checks the result against the target, all in
exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .polys import Context, Poly
from .ratfunc import LinearFactor, RatFunc
from .skew import SkewElement

X_VAR = (1, 1)


def line_context() -> Context:
    return Context.line()


@dataclass
class ToySpec:
    """The defining polynomial; its constant term must not vanish."""

    f: Poly

    def __post_init__(self):
        if self.f.ctx.kind != "line":
            raise ValueError("f must live in the one-variable context")
        if self.f.constant_term() == 0:
            raise ValueError("f(0) must be nonzero")


def build_toy(spec: ToySpec) -> Tuple[SkewElement, SkewElement]:
    """The pair (X, Y) = (d * f(x)/x, d^{-1})."""
    ctx = spec.f.ctx
    fx_over_x = RatFunc(spec.f, [LinearFactor(X_VAR, None, Fraction(0))])
    X = SkewElement.from_right(ctx, {(1,): fx_over_x})
    Y = SkewElement(ctx, {(-1,): RatFunc.one(ctx)})
    return X, Y


def target_ratfunc(ctx: Context, c: int) -> RatFunc:
    """1/(x + c)."""
    return RatFunc(Poly.one(ctx), [LinearFactor(X_VAR, None, Fraction(c))])


def _shift_f(spec: ToySpec, j: int) -> Poly:
    """f(x + j)."""
    return spec.f.subs_shift({X_VAR: -j})


def _multiplicity(p: Poly, c: int) -> int:
    """Multiplicity of (x + c) in p."""
    m = 0
    while True:
        q = p.exact_div_linear(X_VAR, None, Fraction(c))
        if q is None:
            return m
        p = q
        m += 1


@dataclass
class WitnessTrace:
    """How an inverse was extracted: the word, its identity coefficient,
    the clearing polynomial, the division data, and the verified result."""

    target_c: int
    word: str
    multiplicity: int
    word_element: SkewElement
    clear_poly: Poly
    quotient: Poly
    constant: Fraction
    witness: SkewElement

    def describe(self) -> str:
        return (f"1/(x{self.target_c:+d})" if self.target_c else "1/x") + \
            f" = (1/{self.constant}) * ( ({self.clear_poly}) * {self.word}" \
            f" - ({self.quotient}) )"


def witness_inverse(spec: ToySpec, c: int) -> WitnessTrace:
    """Produce 1/(x+c) as an explicit algebra element and verify it.

    c = 0 uses the identity coefficient of YX, c = -1 that of XY; other
    integers use the balanced words Y^{k+1}(XY)^m X^{k+1} (c = k >= 1)
    and X^k (YX)^m Y^k (c = -k <= -2), where m is the exact multiplicity
    of the target factor in the accumulated product of shifted f's.
    """
    ctx = spec.f.ctx
    X, Y = build_toy(spec)
    one = Poly.one(ctx)

    if c == 0:
        word, element, m = "YX", Y * X, 0
        clear = one
    elif c == -1:
        word, element, m = "XY", X * Y, 0
        clear = one
    elif c >= 1:
        k = c
        aux = one
        for j in range(0, k):
            aux = aux * _shift_f(spec, j)
        m = _multiplicity(aux, k)
        word = f"Y^{k + 1}(XY)^{m}X^{k + 1}"
        element = (Y ** (k + 1)) * ((X * Y) ** m) * (X ** (k + 1))
        clear = one
        for j in range(0, k):
            clear = clear * (Poly.var(ctx, X_VAR) + j)
    else:
        k = -c
        aux = one
        for j in range(1, k):
            aux = aux * _shift_f(spec, -j)
        m = _multiplicity(aux, -k)
        word = f"X^{k}(YX)^{m}Y^{k}"
        element = (X ** k) * ((Y * X) ** m) * (Y ** k)
        clear = one
        for j in range(1, k):
            clear = clear * (Poly.var(ctx, X_VAR) - j)

    cleared = SkewElement.from_coeff(clear) * element
    if cleared.support() != frozenset({(0,)}):
        raise ArithmeticError("witness word is not a pure coefficient")
    coeff = cleared.identity_coefficient()
    if tuple(coeff.den) != (LinearFactor(X_VAR, None, Fraction(c)),):
        raise ArithmeticError(
            f"cleared coefficient should have exactly one factor x{c:+d} "
            f"below, got {coeff}")
    quotient, remainder = coeff.num.divmod_linear(X_VAR, None, Fraction(c))
    if remainder.degree() > 0:
        raise ArithmeticError("division remainder is not a constant")
    constant = coeff.scale * remainder.constant_term()
    if constant == 0:
        raise ArithmeticError("division left no constant term to solve for")
    quotient_poly = quotient * coeff.scale
    witness = Fraction(1, 1) / constant * (
        cleared - SkewElement.from_coeff(quotient_poly))

    expected = SkewElement.from_coeff(target_ratfunc(ctx, c))
    if witness != expected:
        raise ArithmeticError(f"witness for 1/(x+{c}) failed to verify")
    return WitnessTrace(c, word, m, element, clear, quotient_poly,
                        constant, witness)


def degree_zero_form(u: SkewElement) -> Optional[RatFunc]:
    """The identity coefficient of an element supported only at the
    identity shift, or None.  Asserts the coefficient's denominator
    factors are integer translates of x, the shape every balanced word
    in X and Y produces."""
    if u.is_zero:
        return RatFunc.zero(u.ctx)
    if u.support() != frozenset({(0,)}):
        return None
    coeff = u.identity_coefficient()
    for f in coeff.den:
        if f.b is not None or f.c.denominator != 1:
            raise ValueError(f"denominator factor {f} is outside the "
                             "integer-translate class")
    return coeff


def parse_univariate(ctx: Context, text: str) -> Poly:
    """Parse '3x^3 + x + 5' style univariate polynomials (also with '*')."""
    s = text.replace(" ", "").replace("**", "^").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out = Poly.zero(ctx)
    i = 0
    while i < len(s):
        sign = 1 if s[i] == "+" else -1
        i += 1
        j = i
        while j < len(s) and (s[j].isdigit() or s[j] == "/"):
            j += 1
        coeff = Fraction(s[i:j]) if j > i else Fraction(1)
        i = j
        power = 0
        if i < len(s) and s[i] == "x":
            power = 1
            i += 1
            if i < len(s) and s[i] == "^":
                i += 1
                j = i
                while j < len(s) and s[j].isdigit():
                    j += 1
                if j == i:
                    raise ValueError(f"missing exponent in {text!r}")
                power = int(s[i:j])
                i = j
        out = out + sign * coeff * Poly.var(ctx, X_VAR) ** power
    return out


def parse_inverse_target(text: str) -> int:
    """Parse '1/x', '1/(x-2)', '1/(x+3)' to the integer translate c."""
    s = text.replace(" ", "")
    if s == "1/x":
        return 0
    if s.startswith("1/(x") and s.endswith(")"):
        body = s[4:-1]
        if body == "":
            return 0
        if body[0] in "+-":
            return int(body)
    raise ValueError(f"cannot parse inverse target {text!r}")
