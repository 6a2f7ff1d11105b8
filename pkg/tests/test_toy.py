import itertools
import random
from fractions import Fraction

import pytest

from skewgt import toy
from skewgt.polys import Poly
from skewgt.ratfunc import LinearFactor, RatFunc
from skewgt.skew import SkewElement
from skewgt.lattice import supports_generate_group


@pytest.fixture
def ctx():
    return toy.line_context()


def xvar(ctx):
    return Poly.var(ctx, toy.X_VAR)


def test_spec_validation(ctx):
    x = xvar(ctx)
    with pytest.raises(ValueError):
        toy.ToySpec(x ** 2 + x)
    toy.ToySpec(x + 2)


def test_products_for_linear_f(ctx):
    x = xvar(ctx)
    X, Y = toy.build_toy(toy.ToySpec(x + 2))
    x_fac = LinearFactor(toy.X_VAR, None, Fraction(0))
    assert Y * X == SkewElement.from_coeff(RatFunc(x + 2, [x_fac]))
    # X Y carries the shifted coefficient f(x-1)/(x-1)
    shifted_fac = LinearFactor(toy.X_VAR, None, Fraction(-1))
    assert X * Y == SkewElement.from_coeff(RatFunc(x + 1, [shifted_fac]))


def test_constant_f(ctx):
    x = xvar(ctx)
    X, Y = toy.build_toy(toy.ToySpec(Poly.one(ctx)))
    x_fac = LinearFactor(toy.X_VAR, None, Fraction(0))
    assert Y * X == SkewElement.from_coeff(RatFunc(Poly.one(ctx), [x_fac]))


def test_witness_inverse_x_matches_hand_division(ctx):
    x = xvar(ctx)
    spec = toy.ToySpec(x + 2)
    trace = toy.witness_inverse(spec, 0)
    assert trace.constant == 2
    assert trace.quotient == Poly.one(ctx)
    X, Y = toy.build_toy(spec)
    manual = Fraction(1, 2) * (Y * X - SkewElement.one(ctx))
    assert manual == trace.witness
    assert trace.witness == SkewElement.from_coeff(toy.target_ratfunc(ctx, 0))


def test_balanced_word_bookkeeping(ctx):
    x = xvar(ctx)
    spec = toy.ToySpec(x + 2)
    X, Y = toy.build_toy(spec)
    yyxx = (Y ** 2) * (X ** 2)
    coeff = yyxx.identity_coefficient()
    # direct skew product: (x+3)(x+2)/((x+1) x)
    f0 = LinearFactor(toy.X_VAR, None, Fraction(0))
    f1 = LinearFactor(toy.X_VAR, None, Fraction(1))
    assert coeff == RatFunc((x + 3) * (x + 2), [f0, f1])
    tr = toy.witness_inverse(spec, 1)
    assert tr.multiplicity == 0
    tr2 = toy.witness_inverse(spec, 2)
    assert tr2.multiplicity == 1


def test_witnesses_for_all_required_targets(ctx):
    x = xvar(ctx)
    for f in (x + 2, x ** 2 + 1, 3 * x ** 3 + x + 5):
        spec = toy.ToySpec(f)
        for c in (0, -1, 1, 2, -2, -3):
            trace = toy.witness_inverse(spec, c)
            assert trace.witness == SkewElement.from_coeff(toy.target_ratfunc(ctx, c))


def test_witnesses_random_polynomials(ctx):
    rng = random.Random(97)
    x = xvar(ctx)
    done = 0
    while done < 12:
        coeffs = [rng.randint(-3, 3) for _ in range(rng.randint(0, 4))]
        f = Poly.const(ctx, rng.randint(1, 4))
        for d, c in enumerate(coeffs, start=1):
            f = f + c * x ** d
        spec = toy.ToySpec(f)
        c = rng.choice([0, -1, 1, 2, -2])
        trace = toy.witness_inverse(spec, c)
        assert trace.witness == SkewElement.from_coeff(toy.target_ratfunc(ctx, c))
        done += 1


def test_degree_zero_form(ctx):
    x = xvar(ctx)
    spec = toy.ToySpec(x + 2)
    X, Y = toy.build_toy(spec)
    d0 = toy.degree_zero_form(Y * X)
    assert d0 is not None and len(d0.den) == 1
    assert toy.degree_zero_form(X) is None
    prod = (X * Y) * (Y * X)
    d1 = toy.degree_zero_form(prod)
    assert d1 is not None
    assert all(f.b is None and f.c.denominator == 1 for f in d1.den)


def test_balanced_words_stay_in_integer_translate_class(ctx):
    x = xvar(ctx)
    spec = toy.ToySpec(x ** 2 + 1)
    X, Y = toy.build_toy(spec)
    checked = 0
    for length in range(0, 7):
        for word in itertools.product("XY", repeat=length):
            if word.count("X") != word.count("Y"):
                continue
            u = SkewElement.one(ctx)
            for letter in word:
                u = u * (X if letter == "X" else Y)
            coeff = toy.degree_zero_form(u)
            assert coeff is not None
            checked += 1
    assert checked > 20


def test_supports_generate_the_shift_group(ctx):
    x = xvar(ctx)
    X, Y = toy.build_toy(toy.ToySpec(x + 2))
    supports = X.support() | Y.support()
    assert supports_generate_group(supports, 1)


def test_parsers(ctx):
    x = xvar(ctx)
    assert toy.parse_univariate(ctx, "3x^3+x+5") == 3 * x ** 3 + x + 5
    assert toy.parse_univariate(ctx, "x^2 + 1") == x ** 2 + 1
    assert toy.parse_univariate(ctx, "-2x + 1/2") == -2 * x + Fraction(1, 2)
    assert toy.parse_univariate(ctx, "3*x^2") == 3 * x ** 2
    with pytest.raises(ValueError):
        toy.parse_univariate(ctx, "")
    assert toy.parse_inverse_target("1/x") == 0
    assert toy.parse_inverse_target("1/(x-2)") == -2
    assert toy.parse_inverse_target("1/(x+3)") == 3
    with pytest.raises(ValueError):
        toy.parse_inverse_target("2/x")
