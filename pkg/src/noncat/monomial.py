"""Combinatorics of monomial ideals: minimal primes as minimal vertex
covers of generator supports, associated primes through irreducible
decomposition, and localization at monomial primes.

Exact for monomial ideals, where the polynomial model and the
power-series quotient share Min, Ass and dimension. All values are
immutable apart from fill-once caches.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import (
    EmptyLocalizationError,
    UnitIdealError,
    UnsupportedInputError,
)
from .poly import Polynomial, VariableContext, exps_divides, exps_lcm


@dataclass(frozen=True)
class MonomialPrime:
    """Prime ideal generated by a subset of the variables; the empty subset
    is the zero prime of a domain."""

    indices: frozenset

    @classmethod
    def of(cls, context, *names):
        return cls(frozenset(context.index(n) for n in names))

    @property
    def sort_key(self):
        return (len(self.indices), tuple(sorted(self.indices)))

    def quotient_dim(self, var_count):
        """dim of the residue ring modulo this prime: variables minus rank."""
        return var_count - len(self.indices)

    def contains(self, other):
        return other.indices <= self.indices

    def contains_exps(self, exps):
        """Whether the monomial x^exps lies in the prime."""
        return any(exps[i] for i in self.indices)

    def names(self, context):
        return tuple(context.names[i] for i in sorted(self.indices))

    def render(self, context):
        names = self.names(context)
        return f"({','.join(names)})" if names else "(0)"


def _minimalize(vectors):
    """Unique minimal generating set: drop any monomial divisible by
    another, deduplicate, sort by (degree, exponents)."""
    ordered = sorted(set(vectors), key=lambda e: (sum(e), e))
    kept = []
    for m in ordered:
        if not any(exps_divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


def _intersect_gens(a, b):
    return _minimalize(exps_lcm(x, y) for x in a for y in b)


def _gens_contained(a, b):
    """Whether the monomial ideal generated by a is inside the one
    generated by b."""
    return all(any(exps_divides(g, m) for g in b) for m in a)


class MonomialIdeal:
    """Monomial ideal held by its unique minimal generating set."""

    __slots__ = ("context", "gens", "_lock", "_min", "_primary")

    def __init__(self, context, exponent_vectors):
        vectors = []
        for e in exponent_vectors:
            e = tuple(e)
            if len(e) != context.count:
                raise ValueError("exponent vector length does not match context")
            if any(x < 0 for x in e):
                raise ValueError("exponents must be nonnegative")
            vectors.append(e)
        self.context = context
        self.gens = _minimalize(vectors)
        self._lock = threading.Lock()
        self._min = None
        self._primary = None

    @classmethod
    def from_polynomials(cls, context, polys):
        vectors = []
        for f in polys:
            if f.is_zero:
                continue
            if not f.is_term:
                raise UnsupportedInputError(
                    "non-monomial generator; the monomial engine only handles "
                    "ideals generated by single terms")
            vectors.append(f.pairs()[0][1])
        return cls(context, vectors)

    def to_polynomials(self, field):
        return tuple(Polynomial(field, self.context, ((field.one, e),))
                     for e in self.gens)

    # -- basic structure --

    @property
    def is_unit(self):
        return bool(self.gens) and not any(self.gens[0])

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_squarefree(self):
        return all(all(e <= 1 for e in g) for g in self.gens)

    def radical(self):
        return MonomialIdeal(self.context,
                             (tuple(min(e, 1) for e in g) for g in self.gens))

    def contains_exps(self, exps):
        return any(exps_divides(g, exps) for g in self.gens)

    def plus(self, vectors):
        return MonomialIdeal(self.context, self.gens + tuple(vectors))

    def intersect(self, other):
        if self.context != other.context:
            raise ValueError("monomial ideals over different contexts")
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.context, ())
        return MonomialIdeal(self.context, _intersect_gens(self.gens, other.gens))

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.context == other.context and self.gens == other.gens)

    def __hash__(self):
        return hash((self.context, self.gens))

    def render(self):
        if not self.gens:
            return "(0)"
        names = self.context.names
        parts = []
        for g in self.gens:
            factors = [n if e == 1 else f"{n}^{e}"
                       for n, e in zip(names, g) if e]
            parts.append("*".join(factors) if factors else "1")
        return f"({', '.join(parts)})"

    def __repr__(self):
        return f"MonomialIdeal{self.render()}"

    # -- primes --

    def minimal_primes(self):
        """Minimal primes over the ideal: minimal hitting sets of the
        generator supports."""
        if self.is_unit:
            raise UnitIdealError("the unit ideal has no minimal primes")
        with self._lock:
            if self._min is not None:
                return self._min
        if self.is_zero:
            result = (MonomialPrime(frozenset()),)
        else:
            supports = sorted(
                {frozenset(i for i, e in enumerate(g) if e) for g in self.gens},
                key=lambda s: (len(s), sorted(s)))
            supports = [s for s in supports
                        if not any(t < s for t in supports)]
            found = set()

            def cover(chosen):
                for s in supports:
                    if not (s & chosen):
                        for var in sorted(s):
                            cover(chosen | {var})
                        return
                found.add(frozenset(chosen))

            cover(frozenset())
            minimal = [s for s in found if not any(t < s for t in found)]
            result = tuple(sorted((MonomialPrime(s) for s in minimal),
                                  key=lambda p: p.sort_key))
        with self._lock:
            if self._min is None:
                self._min = result
            return self._min

    def irreducible_components(self):
        """Irreducible decomposition by recursively splitting a generator
        with at least two variables into coprime factors; components are
        ideals generated by pure variable powers."""
        if self.is_unit:
            raise UnitIdealError("the unit ideal has no decomposition")
        memo = {}

        def split(gens):
            if gens in memo:
                return memo[gens]
            target = None
            for m in gens:
                support = [i for i, e in enumerate(m) if e]
                if len(support) >= 2:
                    target = (m, support[0])
                    break
            if target is None:
                result = (gens,)
            else:
                m, i = target
                u = tuple(e if j == i else 0 for j, e in enumerate(m))
                w = tuple(0 if j == i else e for j, e in enumerate(m))
                rest = tuple(g for g in gens if g != m)
                parts = split(_minimalize(rest + (u,))) + split(_minimalize(rest + (w,)))
                result = tuple(dict.fromkeys(parts))
            memo[gens] = result
            return result

        return tuple(MonomialIdeal(self.context, comp)
                     for comp in split(self.gens))

    def primary_components(self):
        """Irredundant primary decomposition, as (prime, component) pairs:
        irreducible components grouped by radical and intersected, then
        redundant components dropped."""
        if self.is_unit:
            raise UnitIdealError("the unit ideal has no decomposition")
        with self._lock:
            if self._primary is not None:
                return self._primary
        groups = {}
        for comp in self.irreducible_components():
            prime = frozenset(i for g in comp.gens for i, e in enumerate(g) if e)
            if prime in groups:
                groups[prime] = groups[prime].intersect(comp)
            else:
                groups[prime] = comp
        items = sorted(groups.items(), key=lambda kv: MonomialPrime(kv[0]).sort_key)
        changed = True
        while changed and len(items) > 1:
            changed = False
            for idx in range(len(items)):
                rest = [c.gens for j, (_, c) in enumerate(items) if j != idx]
                inter = rest[0]
                for gens in rest[1:]:
                    inter = _intersect_gens(inter, gens)
                if _gens_contained(inter, items[idx][1].gens):
                    del items[idx]
                    changed = True
                    break
        result = tuple((MonomialPrime(p), comp) for p, comp in items)
        with self._lock:
            if self._primary is None:
                self._primary = result
            return self._primary

    def associated_primes(self):
        """Exact Ass(R/I): radicals of the irredundant primary components.
        Always a superset of the minimal primes."""
        if self.is_zero:
            return (MonomialPrime(frozenset()),)
        return tuple(sorted((p for p, _ in self.primary_components()),
                            key=lambda p: p.sort_key))

    def primary_component(self, prime):
        for p, comp in self.primary_components():
            if p == prime:
                return comp
        raise ValueError(f"{prime} is not an associated prime of {self.render()}")

    # -- derived facts --

    def dimension(self):
        if self.is_unit:
            raise UnitIdealError("the unit ideal has no Krull dimension")
        v = self.context.count
        return max(p.quotient_dim(v) for p in self.minimal_primes())

    def is_regular_monomial(self, exps):
        """A monomial is regular on the quotient exactly when it avoids
        every associated prime."""
        if self.contains_exps(exps):
            return False
        return not any(p.contains_exps(exps) for p in self.associated_primes())

    def localize(self, prime):
        """Localization at a monomial prime: variables outside the prime
        become units, so each generator drops its outside factors. Valid
        when the prime contains a minimal prime of the ideal."""
        if self.is_unit:
            raise UnitIdealError("cannot localize the unit ideal")
        if not any(prime.contains(p) for p in self.minimal_primes()):
            raise EmptyLocalizationError(
                f"{prime.render(self.context)} contains no minimal prime; "
                "the localization is the zero ring")
        keep = sorted(prime.indices)
        new_ctx = VariableContext(tuple(self.context.names[i] for i in keep))
        new_gens = []
        for g in self.gens:
            reduced = tuple(g[i] for i in keep)
            if not any(reduced):
                raise AssertionError("generator became a unit despite the "
                                     "minimal-prime precondition")
            new_gens.append(reduced)
        return MonomialIdeal(new_ctx, new_gens)
