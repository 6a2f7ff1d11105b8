import random
from fractions import Fraction

import pytest

from skewgt.polys import Context, Poly
from skewgt.ratfunc import LinearFactor, RatFunc, linear_factor
from skewgt.skew import RowPermutation, SkewElement


@pytest.fixture
def ctx2():
    return Context.triangle(2)


@pytest.fixture
def ctx3():
    return Context.triangle(3)


def rand_poly(rng: random.Random, ctx: Context, max_terms=3, max_deg=2) -> Poly:
    terms = {}
    nv = len(ctx.vars)
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * nv
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(nv)] += 1
        coeff = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return Poly(ctx, terms)


def rand_factor(rng: random.Random, ctx: Context) -> LinearFactor:
    c = Fraction(rng.randint(-2, 2))
    if len(ctx.vars) == 1 or rng.random() < 0.3:
        return LinearFactor(ctx.vars[0], None, c)
    a, b = rng.sample(range(len(ctx.vars)), 2)
    f, _ = linear_factor(ctx.vars[a], ctx.vars[b], c)
    return f


def rand_ratfunc(rng: random.Random, ctx: Context) -> RatFunc:
    num = rand_poly(rng, ctx)
    if num.is_zero and rng.random() < 0.7:
        num = Poly.one(ctx)
    den = [rand_factor(rng, ctx) for _ in range(rng.randint(0, 2))]
    scale = Fraction(rng.choice([-2, -1, 1, 1, 2]), rng.choice([1, 2]))
    return RatFunc(num, den, scale)


def rand_shift(rng: random.Random, ctx: Context):
    return tuple(rng.randint(-1, 1) for _ in range(ctx.shift_rank))


def rand_skew(rng: random.Random, ctx: Context, max_terms=2) -> SkewElement:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rand_shift(rng, ctx)] = rand_ratfunc(rng, ctx)
    return SkewElement(ctx, terms)


def rand_rowperm(rng: random.Random, ctx: Context) -> RowPermutation:
    perms = {}
    for row, vars in ctx.rows.items():
        images = list(range(1, len(vars) + 1))
        rng.shuffle(images)
        perms[row] = tuple(images)
    return RowPermutation(perms)
