"""The poset of monomial primes containing a monomial ideal: heights,
saturated chains with avoidance properties, the noncatenarity profile,
and DOT renderings of posets and chains.

Nodes are variable subsets that meet every generator's support, ordered
by inclusion; the poset is graded, every covering step adding exactly
one variable. Chain construction walks upward one variable at a time,
keeping each interior node outside Ass and above a unique minimal prime;
these are exactly the properties the downstream classifiers certify.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, ChainInfeasibleError, DegenerateInputError
from .monomial import MonomialIdeal, MonomialPrime

DEFAULT_MAX_POSET_VARS = 16
_EAGER_VARS = 12  # below this the node list is materialized at build time


class SpecPoset:
    """Finite poset of the monomial primes containing a monomial ideal,
    with the minimal and associated primes marked."""

    def __init__(self, ideal, max_vars=DEFAULT_MAX_POSET_VARS):
        if ideal.is_unit:
            raise DegenerateInputError("the unit ideal has an empty spectrum")
        v = ideal.context.count
        if v > max_vars:
            raise BudgetExceededError(
                f"poset over {v} variables exceeds the cap of {max_vars} "
                f"(2^{v} nodes)")
        self.ideal = ideal
        self.context = ideal.context
        self.min_primes = ideal.minimal_primes()
        self.ass_primes = ideal.associated_primes()
        self.top = MonomialPrime(frozenset(range(v)))
        self._supports = [frozenset(i for i, e in enumerate(g) if e)
                          for g in ideal.gens]
        self._nodes = self._enumerate() if v <= _EAGER_VARS else None

    def _enumerate(self):
        v = self.context.count
        found = []
        for mask in range(1 << v):
            subset = frozenset(i for i in range(v) if mask >> i & 1)
            if all(subset & s for s in self._supports):
                found.append(MonomialPrime(subset))
        found.sort(key=lambda p: p.sort_key)
        return tuple(found)

    def nodes(self):
        if self._nodes is None:
            self._nodes = self._enumerate()
        return self._nodes

    def is_node(self, prime):
        return all(prime.indices & s for s in self._supports)

    def upper_covers(self, prime):
        """Nodes obtained by adding exactly one variable."""
        out = []
        for i in range(self.context.count):
            if i not in prime.indices:
                out.append(MonomialPrime(prime.indices | {i}))
        return out

    def dim_of(self, prime):
        return prime.quotient_dim(self.context.count)

    def height(self, prime):
        """Height inside the quotient ring: the best drop from a minimal
        prime below, dim(T/P) - dim(T/Q). Valid because the quotient by a
        monomial prime is a power series ring, hence catenary."""
        if not self.is_node(prime):
            raise DegenerateInputError(
                f"{prime.render(self.context)} does not contain the ideal")
        below = [p for p in self.min_primes if prime.contains(p)]
        if not below:
            raise AssertionError("poset node without a minimal prime below")
        return max(len(prime.indices) - len(p.indices) for p in below)


def build_poset(ideal, max_vars=DEFAULT_MAX_POSET_VARS):
    return SpecPoset(ideal, max_vars)


@dataclass(frozen=True)
class PrimeChain:
    """Strictly increasing chain of monomial primes with its annotations."""

    context: object
    primes: tuple
    start_height: int

    @property
    def length(self):
        return len(self.primes) - 1

    @property
    def dims(self):
        v = self.context.count
        return tuple(p.quotient_dim(v) for p in self.primes)

    def render(self):
        return " < ".join(p.render(self.context) for p in self.primes)

    def __str__(self):
        return self.render()


def construct_chain(poset, start):
    """Saturated chain from a minimal prime up to the maximal ideal, of
    length dim(T/P), every interior node avoiding Ass and containing no
    minimal prime besides the start.

    Deterministic: at each step the smallest eligible variable in declared
    order is added. A step with no eligible variable raises, naming the
    step, rather than silently relaxing the avoidance properties.
    """
    if start not in poset.min_primes:
        raise DegenerateInputError(
            f"{start.render(poset.context)} is not a minimal prime of the ideal")
    v = poset.context.count
    n = start.quotient_dim(v)
    if n < 1:
        raise DegenerateInputError("the start prime is already maximal")
    if poset.top in poset.ass_primes:
        raise DegenerateInputError(
            "the maximal ideal is associated; no avoidance chain exists")
    ass = set(poset.ass_primes)
    chain = [start]
    current = start.indices
    for step in range(1, n):
        found = None
        for i in range(v):
            if i in current:
                continue
            candidate = MonomialPrime(current | {i})
            if candidate in ass:
                continue
            below = [p for p in poset.min_primes if candidate.contains(p)]
            if below != [start]:
                continue
            found = candidate
            break
        if found is None:
            raise ChainInfeasibleError(
                f"no eligible variable at step {step} above "
                f"{MonomialPrime(current).render(poset.context)}",
                step=step, node=MonomialPrime(current))
        chain.append(found)
        current = found.indices
    chain.append(poset.top)
    return PrimeChain(poset.context, tuple(chain), poset.height(start))


def verify_chain(poset, chain, start=None):
    """Independent checks on a constructed chain; returns a list of
    problems, empty when the chain is valid."""
    problems = []
    primes = chain.primes
    ctx = poset.context
    if len(primes) < 2:
        problems.append("chain has fewer than two nodes")
        return problems
    first, last = primes[0], primes[-1]
    if start is not None and first != start:
        problems.append("chain does not start at the requested prime")
    if first not in poset.ideal.minimal_primes():
        problems.append(f"start {first.render(ctx)} is not a minimal prime")
    if last != MonomialPrime(frozenset(range(ctx.count))):
        problems.append("chain does not end at the maximal ideal")
    if chain.length != first.quotient_dim(ctx.count):
        problems.append(
            f"length {chain.length} differs from dim(T/P) = "
            f"{first.quotient_dim(ctx.count)}")
    ass = set(poset.ideal.associated_primes())
    mins = poset.ideal.minimal_primes()
    for a, b in zip(primes, primes[1:]):
        if not (a.indices < b.indices):
            problems.append(f"{b.render(ctx)} does not strictly contain "
                            f"{a.render(ctx)}")
        elif len(b.indices) - len(a.indices) != 1:
            problems.append(f"step {a.render(ctx)} -> {b.render(ctx)} "
                            "is not saturated")
        if not poset.is_node(b):
            problems.append(f"{b.render(ctx)} does not contain the ideal")
    for q in primes[1:-1]:
        if q in ass:
            problems.append(f"interior node {q.render(ctx)} is associated")
        below = [p for p in mins if q.contains(p)]
        if below != [first]:
            problems.append(
                f"interior node {q.render(ctx)} contains minimal primes "
                f"{[p.render(ctx) for p in below]} instead of only the start")
    return problems


def noncat_profile(ideal):
    """The multiset of dim(T/P) over the minimal primes, descending. Its
    largest entry is dim T, and saturated chain lengths from (0) to the
    maximal ideal in any domain completing to T are confined to it."""
    v = ideal.context.count
    return tuple(sorted((p.quotient_dim(v) for p in ideal.minimal_primes()),
                        reverse=True))


# -- DOT emission --

def _node_attrs(poset, prime):
    attrs = []
    if prime in poset.min_primes:
        attrs.append("shape=box")
    if prime in poset.ass_primes:
        attrs.append("style=filled")
        attrs.append("fillcolor=lightgray")
    if prime == poset.top:
        attrs.append("penwidth=2")
    return attrs


def _quoted(label):
    return '"' + label.replace('"', '\\"') + '"'


def poset_dot(poset, highlight_chains=()):
    """DOT digraph of the whole poset, edges being covering relations;
    minimal primes boxed, associated primes filled, the maximal ideal
    bold. Optional chains are overlaid in red."""
    ctx = poset.context
    highlight = set()
    for chain in highlight_chains:
        for a, b in zip(chain.primes, chain.primes[1:]):
            highlight.add((a, b))
    lines = ["digraph spec_poset {", "  rankdir=BT;"]
    nodes = poset.nodes()
    for p in nodes:
        attrs = _node_attrs(poset, p)
        suffix = f" [{','.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quoted(p.render(ctx))}{suffix};")
    node_set = set(nodes)
    for p in nodes:
        for q in poset.upper_covers(p):
            if q in node_set:
                extra = " [color=red,penwidth=2]" if (p, q) in highlight else ""
                lines.append(
                    f"  {_quoted(p.render(ctx))} -> {_quoted(q.render(ctx))}{extra};")
    lines.append("}")
    return "\n".join(lines)


def chain_dot(poset, chains):
    """DOT digraph of just the given chains (they meet at shared nodes);
    edge count equals the sum of the chain lengths."""
    ctx = poset.context
    nodes = []
    for chain in chains:
        for p in chain.primes:
            if p not in nodes:
                nodes.append(p)
    nodes.sort(key=lambda p: p.sort_key)
    lines = ["digraph prime_chains {", "  rankdir=BT;"]
    for p in nodes:
        attrs = _node_attrs(poset, p)
        suffix = f" [{','.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quoted(p.render(ctx))}{suffix};")
    seen = set()
    for chain in chains:
        for a, b in zip(chain.primes, chain.primes[1:]):
            if (a, b) not in seen:
                seen.add((a, b))
                lines.append(
                    f"  {_quoted(a.render(ctx))} -> {_quoted(b.render(ctx))};")
    lines.append("}")
    return "\n".join(lines)
