#!/usr/bin/env python3
"""
CatCheck Monoid Tables

Finite monoids and groups given by multiplication tables, the standard small
examples, and enumeration of all monoids of a given order up to isomorphism.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

from sympy.combinatorics import SymmetricGroup

from catcheck_utils import NotAGroupError, PreconditionError, ShapeError, debug_print


@dataclass(frozen=True)
class FiniteMonoid:
    """
    A monoid on {0, ..., n-1}; table[a][b] is the product a*b

    Labels are display metadata only.
    """
    table: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...] = ()
    name: str = "M"

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        object.__setattr__(self, "labels", tuple(self.labels))
        n = len(self.table)
        if n == 0:
            raise ShapeError("a monoid has at least one element")
        for row in self.table:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ShapeError(f"{self.name}: multiplication table is not an {n}x{n} table on 0..{n - 1}")
        if self.labels and len(self.labels) != n:
            raise ShapeError(f"{self.name}: {len(self.labels)} labels for {n} elements")

    @property
    def size(self):
        return len(self.table)

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def multiply(self, a, b):
        return self.table[a][b]

    def identity_element(self):
        """Two-sided identity, or None"""
        rn = range(self.size)
        for e in rn:
            if all(self.table[e][x] == x == self.table[x][e] for x in rn):
                return e
        return None

    @property
    def unit(self):
        e = self.identity_element()
        if e is None:
            raise PreconditionError(f"{self.name} has no two-sided identity")
        return e

    def associativity_witness(self):
        """First triple (a, b, c) with (ab)c != a(bc), or None"""
        t = self.table
        for a, b, c in itertools.product(range(self.size), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                return (a, b, c)
        return None

    def validate(self):
        witness = self.associativity_witness()
        if witness is not None:
            raise PreconditionError(f"{self.name} is not associative at {witness}", witness={"triple": list(witness)})
        self.unit
        return self

    def is_commutative(self):
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.size) for b in range(self.size))

    def inverse(self, a):
        e = self.unit
        for b in range(self.size):
            if self.table[a][b] == e == self.table[b][a]:
                return b
        return None

    def non_invertible_element(self):
        for a in range(self.size):
            if self.inverse(a) is None:
                return a
        return None

    def is_group(self):
        return self.non_invertible_element() is None

    def inverse_table(self):
        """
        Inversion as a table

        Raises:
            NotAGroupError: witness names an element without inverse
        """
        bad = self.non_invertible_element()
        if bad is not None:
            raise NotAGroupError(f"{self.name}: element {self.label(bad)} has no inverse",
                                 witness={"element": bad})
        return tuple(self.inverse(a) for a in range(self.size))

    def relabel(self, perm):
        """Isomorphic copy where element a becomes perm[a]"""
        n = self.size
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                table[perm[a]][perm[b]] = perm[self.table[a][b]]
        return FiniteMonoid(table, name=self.name)

    def canonical_form(self):
        """
        Lexicographically least flattened table over relabelings fixing 0

        Only meaningful when the identity is element 0.
        """
        n = self.size
        best = None
        for rest in itertools.permutations(range(1, n)):
            perm = (0,) + rest
            flat = tuple(v for row in self.relabel(perm).table for v in row)
            if best is None or flat < best:
                best = flat
        return best

    def product(self, other, name=None):
        """Direct product; the pair (a, b) has index a * |other| + b"""
        m = other.size
        table = [[self.table[a1][a2] * m + other.table[b1][b2]
                  for a2 in range(self.size) for b2 in range(m)]
                 for a1 in range(self.size) for b1 in range(m)]
        labels = ()
        if self.labels and other.labels:
            labels = tuple(f"({x},{y})" for x in self.labels for y in other.labels)
        return FiniteMonoid(table, labels, name or f"{self.name}x{other.name}")

    def to_json(self):
        data = {"name": self.name, "table": [list(row) for row in self.table]}
        if self.labels:
            data["labels"] = list(self.labels)
        return data


# ===================================
# Standard examples
# ===================================

def trivial_group():
    return FiniteMonoid(((0,),), ("e",), "1")


def cyclic_group(n):
    labels = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteMonoid(table, labels, f"C_{n}")


def symmetric_group(n):
    """
    Symmetric group from sympy permutations

    Elements are ordered by array form, so element 0 is the identity; the
    product a*b is "apply b, then a".
    """
    elements = sorted(SymmetricGroup(n).elements, key=lambda p: p.array_form)
    index = {tuple(p.array_form): i for i, p in enumerate(elements)}
    # sympy's p * q applies p first
    table = [[index[tuple((b * a).array_form)] for b in elements] for a in elements]
    labels = ["".join(str(v) for v in p.array_form) for p in elements]
    return FiniteMonoid(table, labels, f"S_{n}")


def truncated_naturals(k):
    """{0, ..., k} under addition capped at k; a monoid but not a group for k > 0"""
    table = [[min(a + b, k) for b in range(k + 1)] for a in range(k + 1)]
    return FiniteMonoid(table, [str(a) for a in range(k + 1)], f"N_{k}")


def idempotent_monoid():
    """{e, x} with x * x = x"""
    return FiniteMonoid(((0, 1), (1, 1)), ("e", "x"), "E")


# ===================================
# Enumeration up to isomorphism
# ===================================

def enumerate_monoids(n, debug=False):
    """
    All monoids of order n up to isomorphism

    The identity is fixed at 0, so only the (n-1) x (n-1) block of the table
    is searched; isomorphism classes are separated by canonical form.

    Args:
        n (int): order
        debug (bool): print progress

    Returns:
        list: FiniteMonoid representatives ordered by canonical form
    """
    if n <= 0:
        return []
    if n == 1:
        return [FiniteMonoid(((0,),), name="M1_0")]
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    seen = {}
    checked = 0
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [[b if a == 0 else (a if b == 0 else 0) for b in range(n)] for a in range(n)]
        for (a, b), v in zip(cells, values):
            table[a][b] = v
        checked += 1
        if not _associative(table, n):
            continue
        candidate = FiniteMonoid(table)
        key = candidate.canonical_form()
        if key not in seen:
            seen[key] = key
    debug_print(debug, f"order {n}: {checked} tables searched, {len(seen)} classes")
    monoids = []
    for i, key in enumerate(sorted(seen)):
        table = [key[r * n:(r + 1) * n] for r in range(n)]
        monoids.append(FiniteMonoid(table, name=f"M{n}_{i}"))
    return monoids


def _associative(table, n):
    for a in range(1, n):
        for b in range(1, n):
            ab = table[a][b]
            for c in range(1, n):
                if table[ab][c] != table[a][table[b][c]]:
                    return False
    return True
