"""Monomials, equigenerated monomial ideals and brute-force Hilbert functions.

Hilbert values are computed by exhaustive enumeration of all monomials of a
given degree.  That enumeration is deliberately the single source of truth:
every closed form elsewhere in the package is cross-checked against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .combinatorics import binomial


@dataclass(frozen=True)
class Monomial:
    """A monomial as its exponent vector; position i holds the exponent of x_{i+1}."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.exponents:
            raise ValueError("monomial needs at least one variable slot")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    @classmethod
    def squarefree(cls, n: int, variables: Iterable[int]) -> Monomial:
        """Build the square-free monomial on the given 1-indexed variables."""
        exps = [0] * n
        for v in variables:
            if not 1 <= v <= n:
                raise ValueError(f"variable x{v} outside 1..{n}")
            if exps[v - 1]:
                raise ValueError(f"variable x{v} repeated")
            exps[v - 1] = 1
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self) -> frozenset[int]:
        """1-indexed variables appearing with positive exponent."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    def divides(self, other: Monomial) -> bool:
        if len(self.exponents) != len(other.exponents):
            raise ValueError("monomials live over different variable counts")
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by a minimal generating set.

    The ideals this package certifies are equigenerated (all generators of
    one degree), and for those ``generation_degree`` is set; it is also set
    explicitly for the zero ideal so the Gotzmann certifier knows which
    degrees to compare.  Mixed-degree square-free ideals (minimal non-faces
    of a complex, for instance) are allowed with generation_degree = None.
    """

    ambient_vars: int
    generation_degree: int | None
    generators: frozenset[Monomial]

    def __post_init__(self) -> None:
        if self.ambient_vars < 1:
            raise ValueError("need at least one ambient variable")
        for g in self.generators:
            if len(g.exponents) != self.ambient_vars:
                raise ValueError("generator over wrong number of variables")
            if g.degree == 0:
                raise ValueError("the unit monomial cannot be a generator")
        if self.generation_degree is not None:
            if self.generation_degree < 1:
                raise ValueError("generation degree must be positive")
            for g in self.generators:
                if g.degree != self.generation_degree:
                    raise ValueError(
                        f"generator {g} has degree {g.degree}, "
                        f"expected {self.generation_degree}"
                    )
        for a in self.generators:
            for b in self.generators:
                if a != b and a.divides(b):
                    raise ValueError(f"generator {b} is redundant: {a} divides it")

    @classmethod
    def from_generators(
        cls,
        ambient_vars: int,
        generators: Iterable[Monomial],
        degree: int | None = None,
    ) -> MonomialIdeal:
        """Normalize a generator list into a minimal one and build the ideal.

        Duplicates and generators divisible by another generator are dropped.
        A common degree is recorded when all surviving generators share one;
        the zero ideal requires an explicit degree.
        """
        gens = set(generators)
        minimal = frozenset(
            g for g in gens
            if not any(h != g and h.divides(g) for h in gens)
        )
        degrees = {g.degree for g in minimal}
        if len(degrees) == 1:
            inferred = degrees.pop()
            if degree is not None and degree != inferred:
                raise ValueError("declared degree disagrees with generators")
            degree = inferred
        elif degrees:
            if degree is not None:
                raise ValueError("declared degree disagrees with generators")
        elif degree is None:
            raise ValueError("zero ideal needs an explicit generation degree")
        return cls(ambient_vars, degree, minimal)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_equigenerated(self) -> bool:
        return self.generation_degree is not None

    @property
    def min_generator_degree(self) -> int | None:
        if self.generation_degree is not None:
            return self.generation_degree
        return min((g.degree for g in self.generators), default=None)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def sorted_generators(self) -> list[Monomial]:
        """Generators in descending lexicographic order (x1 largest)."""
        return sorted(self.generators, key=lambda m: m.exponents, reverse=True)


@lru_cache(maxsize=None)
def degree_monomials(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of degree k in n variables, lex-descending (x1 > ... > xn)."""
    if n < 1:
        raise ValueError("need at least one variable")
    if n == 1:
        return ((k,),)
    out = []
    for e in range(k, -1, -1):
        for tail in degree_monomials(n - 1, k - e):
            out.append((e,) + tail)
    return tuple(out)


def hilbert_ring(n: int, k: int) -> int:
    """H(P, k) = C(n + k - 1, n - 1): all monomials of degree k in n variables."""
    if n < 1:
        raise ValueError("need at least one variable")
    if k < 0:
        raise ValueError("degree must be non-negative")
    return binomial(n + k - 1, n - 1)


def hilbert_ideal(ideal: MonomialIdeal, k: int) -> int:
    """H(I, k) by enumeration: degree-k monomials divisible by some generator."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    if ideal.is_zero or k < ideal.min_generator_degree:
        return 0
    gens = [g.exponents for g in ideal.generators]
    count = 0
    for m in degree_monomials(ideal.ambient_vars, k):
        for g in gens:
            for a, b in zip(g, m):
                if a > b:
                    break
            else:
                count += 1
                break
    return count


def hilbert_quotient(ideal: MonomialIdeal, k: int) -> int:
    """H(P/I, k) = H(P, k) - H(I, k)."""
    return hilbert_ring(ideal.ambient_vars, k) - hilbert_ideal(ideal, k)


def lex_segment_ideal(n: int, d: int, count: int) -> MonomialIdeal:
    """Ideal generated by the first ``count`` degree-d monomials in lex order."""
    total = hilbert_ring(n, d)
    if not 0 <= count <= total:
        raise ValueError(
            f"segment size {count} out of range 0..{total} for n={n}, d={d}"
        )
    gens = [Monomial(e) for e in degree_monomials(n, d)[:count]]
    return MonomialIdeal.from_generators(n, gens, degree=d)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Membership test for monomials: true iff some generator divides m."""
    if len(m.exponents) != ideal.ambient_vars:
        raise ValueError("monomial over wrong number of variables")
    return any(g.divides(m) for g in ideal.generators)
