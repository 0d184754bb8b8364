"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately avoid the code paths they check: minimal primes
and dimension by brute-force subset enumeration, and ideal membership by
degree-truncated linear algebra over the rationals.
"""

import itertools
import random
from fractions import Fraction

import pytest

from noncat.poly import (
    FieldDescriptor,
    GREVLEX,
    Polynomial,
    VariableContext,
    variables,
)

QQ = FieldDescriptor(0)


@pytest.fixture
def qq():
    return QQ


def ctx(*names):
    return VariableContext(names)


def poly_vars(context, field=QQ):
    return variables(field, context)


# -- brute-force spectrum oracles --

def brute_minimal_covers(supports, v):
    """All inclusion-minimal variable subsets hitting every support,
    by enumerating all 2^v subsets."""
    supports = [frozenset(s) for s in supports]
    hitting = []
    for mask in range(1 << v):
        subset = frozenset(i for i in range(v) if mask >> i & 1)
        if all(subset & s for s in supports):
            hitting.append(subset)
    return {s for s in hitting if not any(t < s for t in hitting)}


def brute_dimension(gens, v):
    """v minus the smallest hitting-set size of the generator supports."""
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    if not supports:
        return v
    covers = brute_minimal_covers(supports, v)
    return v - min(len(s) for s in covers)


# -- linear-algebra membership oracle (valid for homogeneous ideals) --

def monomials_of_degree(v, d):
    """All exponent vectors of total degree d over v variables."""
    if v == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in monomials_of_degree(v - 1, d - first):
            yield (first,) + rest


def _row_reduce(rows):
    """In-place fraction Gaussian elimination; returns the pivot count."""
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def la_membership(f, gens):
    """Whether the homogeneous polynomial f lies in the ideal the
    homogeneous generators span, by solving for f in the span of the
    degree-matched shifts of the generators."""
    if f.is_zero:
        return True
    context = f.context
    v = context.count
    degrees = {sum(e) for _, e in f.pairs()}
    assert len(degrees) == 1, "oracle input must be homogeneous"
    d = degrees.pop()
    columns = {e: i for i, e in enumerate(monomials_of_degree(v, d))}

    def vectorize(poly):
        row = [Fraction(0)] * len(columns)
        for c, e in poly.pairs():
            row[columns[e]] = Fraction(c)
        return row

    rows = []
    for g in gens:
        gdeg = {sum(e) for _, e in g.pairs()}
        assert len(gdeg) == 1, "oracle generators must be homogeneous"
        gd = gdeg.pop()
        if gd > d:
            continue
        for shift in monomials_of_degree(v, d - gd):
            rows.append(vectorize(g.term_multiple(1, shift)))
    if not rows:
        return False
    base_rank = _row_reduce([row[:] for row in rows])
    extended_rank = _row_reduce([row[:] for row in rows] + [vectorize(f)])
    return base_rank == extended_rank


# -- randomized inputs --

def random_monomial_ideal(rng, v, max_gens, max_exp=2, squarefree=False):
    """Random nonunit monomial ideal as a list of exponent vectors."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        while True:
            if squarefree:
                e = tuple(rng.randint(0, 1) for _ in range(v))
            else:
                e = tuple(max(0, rng.randint(-1, max_exp)) for _ in range(v))
            if any(e):
                gens.append(e)
                break
    return gens


def random_polynomial(rng, context, max_terms=3, max_deg=3, field=QQ):
    """Random polynomial, possibly zero."""
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        e = [0] * context.count
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(context.count)] += 1
        coeff = rng.randint(-4, 4)
        terms.append((coeff, tuple(e)))
    return Polynomial(field, context, terms)


def random_nonzero_polynomial(rng, context, max_terms=3, max_deg=3, field=QQ):
    while True:
        f = random_polynomial(rng, context, max_terms, max_deg, field)
        if not f.is_zero:
            return f
