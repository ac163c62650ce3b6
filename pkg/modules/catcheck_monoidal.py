#!/usr/bin/env python3
"""
CatCheck Monoidal Core

Exact, finitely computable strict symmetric monoidal categories: matrices over
a prime field or the rationals, and finite sets with lexicographic products.
Small finite categories given by tables live here too.

Conventions (fixed globally):
    * A matrix morphism A -> B is a B x A matrix; column j is the image of
      basis vector j.
    * Tensor factors flatten row-major: basis pair (i, j) of A (x) B has index
      i * dim(B) + j. This makes the Kronecker product strictly associative.
    * Associators and unitors are identities, so every diagram check is an
      equality check.
"""

import itertools
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Any

from sympy.polys.domains import FF, QQ
from sympy.polys.matrices import DomainMatrix

from catcheck_utils import (
    CheckResult,
    CatCheckError,
    CompositionError,
    DimensionBoundError,
    InstanceMismatchError,
    PreconditionError,
    ShapeError,
    DEFAULT_DIM_BOUND,
    DEFAULT_POPULATION,
    DEFAULT_PRIME,
    DEFAULT_SEED,
    HOM_ENUMERATION_LIMIT,
    is_prime,
)


# ===================================
# Abstract categories
# ===================================

@dataclass
class InvertibilityResult:
    """Decision for is_invertible, with the inverse or a witness"""
    invertible: bool
    inverse: Any = None
    witness: Any = None
    reason: str = ""

    def __bool__(self):
        return self.invertible


class ComputableCategory(ABC):
    """A category whose objects and morphisms are finite data"""

    name = "category"

    @abstractmethod
    def identity(self, obj):
        """Identity morphism of obj"""

    @abstractmethod
    def compose(self, g, f):
        """g after f; raises CompositionError unless codomain(f) == domain(g)"""

    @abstractmethod
    def domain(self, f):
        pass

    @abstractmethod
    def codomain(self, f):
        pass

    def morphisms_equal(self, f, g):
        return f == g

    def objects(self):
        raise NotImplementedError(f"{self.name} has no finite object population")

    def hom(self, a, b, limit=HOM_ENUMERATION_LIMIT):
        raise NotImplementedError(f"{self.name} does not enumerate hom-sets")

    def spanning_hom(self, a, b, limit=HOM_ENUMERATION_LIMIT):
        """A set whose linear span is hom(a, b); the whole hom-set unless the category is linear"""
        return self.hom(a, b, limit=limit)

    def compose_all(self, *morphisms):
        """compose_all(h, g, f) is h after g after f"""
        if not morphisms:
            raise CatCheckError("compose_all needs at least one morphism")
        return reduce(lambda acc, f: self.compose(acc, f), morphisms)

    def _composition_error(self, g, f):
        return CompositionError(
            f"cannot compose {g!r} after {f!r}: codomain {self.codomain(f)!r} "
            f"!= domain {self.domain(g)!r}")


class MonoidalCategory(ComputableCategory):
    """A strict symmetric monoidal computable category"""

    @abstractmethod
    def unit(self):
        pass

    @abstractmethod
    def tensor_obj(self, a, b):
        pass

    @abstractmethod
    def tensor_mor(self, f, g):
        pass

    @abstractmethod
    def braiding(self, a, b):
        """sigma_{a,b}: a (x) b -> b (x) a"""

    @abstractmethod
    def is_invertible(self, f):
        """Return an InvertibilityResult"""

    @abstractmethod
    def random_morphism(self, a, b, rng):
        pass

    def tensor_objects(self, objects):
        return reduce(self.tensor_obj, objects, self.unit())

    def tensor_morphisms(self, morphisms):
        morphisms = list(morphisms)
        if not morphisms:
            return self.identity(self.unit())
        return reduce(self.tensor_mor, morphisms)

    def precomposition_solutions(self, a, b, constraints, limit=HOM_ENUMERATION_LIMIT):
        """
        Every k: a -> b with k o u = v for each (u, v) in constraints

        Returns:
            tuple: (solutions, number of candidates searched)
        """
        candidates = self.hom(a, b, limit=limit)
        solutions = [k for k in candidates
                     if all(self.morphisms_equal(self.compose(k, u), v) for u, v in constraints)]
        return solutions, len(candidates)

    def shuffle(self, objects, order):
        """
        Permutation morphism built from adjacent braidings

        Args:
            objects (list): factors A_0, ..., A_{n-1}
            order (sequence): a permutation of range(n)

        Returns:
            morphism from A_0 (x) ... (x) A_{n-1} to A_{order[0]} (x) ... (x) A_{order[n-1]}
        """
        objects = list(objects)
        n = len(objects)
        if sorted(order) != list(range(n)):
            raise ShapeError(f"{list(order)} is not a permutation of {n} factors")
        rank = {label: position for position, label in enumerate(order)}
        arrangement = list(range(n))
        result = self.identity(self.tensor_objects(objects))
        swapped = True
        # bubble sort; every swap is one braiding between neighbours
        while swapped:
            swapped = False
            for j in range(n - 1):
                a, b = arrangement[j], arrangement[j + 1]
                if rank[a] > rank[b]:
                    left = self.identity(self.tensor_objects([objects[x] for x in arrangement[:j]]))
                    right = self.identity(self.tensor_objects([objects[x] for x in arrangement[j + 2:]]))
                    step = self.tensor_morphisms([left, self.braiding(objects[a], objects[b]), right])
                    result = self.compose(step, result)
                    arrangement[j], arrangement[j + 1] = b, a
                    swapped = True
        return result


# ===================================
# Matrix instance
# ===================================

@lru_cache(maxsize=None)
def _sympy_domain(characteristic):
    return QQ if characteristic == 0 else FF(characteristic)


@dataclass(frozen=True)
class ScalarRing:
    """Prime field F_p (characteristic p) or the rationals (characteristic 0)"""
    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise PreconditionError(f"{self.characteristic} is not prime")

    @classmethod
    def prime_field(cls, p=DEFAULT_PRIME):
        return cls(p)

    @classmethod
    def rationals(cls):
        return cls(0)

    @property
    def domain(self):
        return _sympy_domain(self.characteristic)

    @property
    def label(self):
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"

    def element(self, value):
        """Convert an int, Fraction or "a/b" string into a domain element"""
        value = Fraction(value) if isinstance(value, str) else value
        if isinstance(value, Fraction):
            if self.characteristic == 0:
                return self.domain(value.numerator, value.denominator)
            if value.denominator % self.characteristic == 0:
                raise ShapeError(f"{value} has no image in {self.label}")
            return self.domain(value.numerator) / self.domain(value.denominator)
        if isinstance(value, bool) or not isinstance(value, int):
            raise ShapeError(f"matrix entry {value!r} is not an exact scalar")
        return self.domain(value)

    def canonical(self, element):
        """Plain Python value of a domain element: int in [0, p) or Fraction"""
        if self.characteristic == 0:
            return Fraction(int(element.numerator), int(element.denominator))
        return int(element) % self.characteristic

    def random_value(self, rng):
        if self.characteristic == 0:
            return Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3)))
        return rng.randrange(self.characteristic)


class MatrixMorphism:
    """An exact matrix with recorded shape; source is the column count"""

    __slots__ = ("ring", "matrix")

    def __init__(self, ring, matrix):
        self.ring = ring
        self.matrix = matrix.to_sparse()

    @property
    def source(self):
        return self.matrix.shape[1]

    @property
    def target(self):
        return self.matrix.shape[0]

    def entries(self):
        """Nonzero entries as {(row, col): value}"""
        values = {}
        for key, element in self.matrix.to_dok().items():
            value = self.ring.canonical(element)
            if value:
                values[key] = value
        return values

    def rows(self):
        zero = Fraction(0) if self.ring.characteristic == 0 else 0
        dense = [[zero] * self.source for _ in range(self.target)]
        for (i, j), value in self.entries().items():
            dense[i][j] = value
        return dense

    def column(self, j):
        return [row[j] for row in self.rows()]

    def is_permutation(self):
        entries = self.entries()
        if self.source != self.target or len(entries) != self.source:
            return False
        return (all(v == 1 for v in entries.values())
                and len({i for i, _ in entries}) == self.target
                and len({j for _, j in entries}) == self.source)

    def __eq__(self, other):
        if not isinstance(other, MatrixMorphism):
            return NotImplemented
        if self.ring != other.ring or self.matrix.shape != other.matrix.shape:
            return False
        return (self.matrix - other.matrix).is_zero_matrix

    def __hash__(self):
        return hash((self.ring, self.matrix.shape, frozenset(self.entries().items())))

    def to_json(self):
        rows = [[str(v) if isinstance(v, Fraction) and v.denominator != 1 else int(v)
                 for v in row] for row in self.rows()]
        return {"from": self.source, "to": self.target, "matrix": rows}

    def __repr__(self):
        return f"MatrixMorphism({self.ring.label}, {self.target}x{self.source}, {self.to_json()['matrix']})"


def kronecker(a, b):
    """Kronecker product of two sparse DomainMatrix values, row-major flattening"""
    (ar, ac), (br, bc) = a.shape, b.shape
    b_items = list(b.to_dok().items())
    dok = {}
    for (i, j), x in a.to_dok().items():
        for (k, l), y in b_items:
            dok[(i * br + k, j * bc + l)] = x * y
    return DomainMatrix.from_dok(dok, (ar * br, ac * bc), a.domain)


class MatrixCategory(MonoidalCategory):
    """
    Finite-dimensional vector spaces over F_p or Q with exact matrices

    Objects are non-negative integers (dimensions); the unit is 1.
    """

    def __init__(self, ring=None, dim_bound=DEFAULT_DIM_BOUND, debug=False):
        self.ring = ring if ring is not None else ScalarRing()
        self.dim_bound = dim_bound
        self.debug = debug

    @property
    def name(self):
        return f"Mat({self.ring.label})"

    def __eq__(self, other):
        return isinstance(other, MatrixCategory) and other.ring == self.ring

    def __hash__(self):
        return hash(("matrix", self.ring))

    def __repr__(self):
        return f"MatrixCategory({self.ring.label})"

    # construction helpers

    def _check_object(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, int) or obj < 0:
            raise InstanceMismatchError(f"{obj!r} is not an object of {self.name}")
        return obj

    def _own(self, *morphisms):
        for f in morphisms:
            if not isinstance(f, MatrixMorphism) or f.ring != self.ring:
                raise InstanceMismatchError(f"{f!r} is not a morphism of {self.name}")

    def matrix(self, rows, shape=None):
        """
        Build a morphism from dense rows

        Args:
            rows (list): list of rows of ints, Fractions or "a/b" strings
            shape (tuple): (rows, cols); required when rows is empty

        Returns:
            MatrixMorphism
        """
        if shape is None:
            if not rows:
                raise ShapeError("empty matrix needs an explicit shape")
            shape = (len(rows), len(rows[0]))
        if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
            raise ShapeError(f"rows do not form a {shape[0]}x{shape[1]} matrix")
        dok = {}
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                dok[(i, j)] = self.ring.element(value)
        return MatrixMorphism(self.ring, DomainMatrix.from_dok(dok, tuple(shape), self.ring.domain))

    def from_columns(self, source, target, columns):
        """
        Build a morphism from sparse column images

        Args:
            columns (list): columns[j] is a dict {row: coefficient}
        """
        if len(columns) != source:
            raise ShapeError(f"expected {source} columns, got {len(columns)}")
        dok = {}
        for j, column in enumerate(columns):
            for i, value in column.items():
                if not 0 <= i < target:
                    raise ShapeError(f"row index {i} outside target dimension {target}")
                dok[(i, j)] = self.ring.element(value)
        return MatrixMorphism(self.ring, DomainMatrix.from_dok(dok, (target, source), self.ring.domain))

    def zero(self, source, target):
        return MatrixMorphism(self.ring, DomainMatrix.zeros((target, source), self.ring.domain))

    def apply(self, f, vector):
        """Image of a coordinate vector, as canonical values"""
        column = self.matrix([[v] for v in vector], shape=(len(vector), 1))
        return [row[0] for row in self.compose(f, column).rows()]

    # category structure

    def identity(self, obj):
        self._check_object(obj)
        return MatrixMorphism(self.ring, DomainMatrix.eye(obj, self.ring.domain))

    def domain(self, f):
        return f.source

    def codomain(self, f):
        return f.target

    def compose(self, g, f):
        self._own(g, f)
        if f.target != g.source:
            raise self._composition_error(g, f)
        return MatrixMorphism(self.ring, g.matrix.matmul(f.matrix))

    def unit(self):
        return 1

    def tensor_obj(self, a, b):
        return self._check_object(a) * self._check_object(b)

    def tensor_mor(self, f, g):
        self._own(f, g)
        return MatrixMorphism(self.ring, kronecker(f.matrix, g.matrix))

    def braiding(self, a, b):
        self._check_object(a)
        self._check_object(b)
        one = self.ring.domain.one
        # basis pair (i, j) of a (x) b goes to pair (j, i) of b (x) a
        dok = {(j * a + i, i * b + j): one for i in range(a) for j in range(b)}
        return MatrixMorphism(self.ring, DomainMatrix.from_dok(dok, (a * b, a * b), self.ring.domain))

    def is_invertible(self, f):
        """
        Exact rank test

        Returns:
            InvertibilityResult: inverse on success; otherwise a shape witness
            for non-square input or a nonzero kernel vector
        """
        self._own(f)
        rows, cols = f.target, f.source
        if rows != cols:
            return InvertibilityResult(False, witness={"shape": [rows, cols]},
                                       reason=f"{rows}x{cols} matrix is not square")
        if cols == 0:
            return InvertibilityResult(True, inverse=f)
        rref, pivots = f.matrix.rref()
        if len(pivots) == cols:
            return InvertibilityResult(True, inverse=MatrixMorphism(self.ring, f.matrix.inv()))
        basis = rref.nullspace_from_rref(pivots)
        vector = [0] * cols
        for (i, j), element in basis.to_dok().items():
            if i == 0:
                vector[j] = self.ring.canonical(element)
        return InvertibilityResult(False, witness={"kernel": vector},
                                   reason=f"rank {len(pivots)} < {cols}")

    def random_morphism(self, a, b, rng):
        rows = [[self.ring.random_value(rng) for _ in range(a)] for _ in range(b)]
        return self.matrix(rows, shape=(b, a))

    def objects(self):
        return list(range(1, self.dim_bound + 1))

    def hom(self, a, b, limit=HOM_ENUMERATION_LIMIT):
        """All b x a matrices; only over a prime field and below the limit"""
        if self.ring.characteristic == 0:
            raise PreconditionError("hom-sets over Q are infinite")
        p = self.ring.characteristic
        if p ** (a * b) > limit:
            raise DimensionBoundError(f"hom({a}, {b}) over {self.ring.label} has {p ** (a * b)} elements")
        morphisms = []
        for values in itertools.product(range(p), repeat=a * b):
            rows = [list(values[i * a:(i + 1) * a]) for i in range(b)]
            morphisms.append(self.matrix(rows, shape=(b, a)))
        return morphisms

    def spanning_hom(self, a, b, limit=HOM_ENUMERATION_LIMIT):
        """The matrix units, a basis of hom(a, b); the zero map when it is the only one"""
        if a * b == 0:
            return [self.zero(a, b)]
        if a * b > limit:
            raise DimensionBoundError(f"hom({a}, {b}) has a basis of {a * b} matrix units")
        return [self.from_columns(a, b, [{r: 1} if j == c else {} for j in range(a)])
                for r in range(b) for c in range(a)]

    def precomposition_solutions(self, a, b, constraints, limit=HOM_ENUMERATION_LIMIT):
        """
        Exhaustive search of hom(a, b) for k with k o u = v

        Row i of k o u only involves row i of k, so each row is searched on
        its own over all p^a vectors; the solutions are the products of the
        per-row solutions.
        """
        if self.ring.characteristic == 0:
            raise PreconditionError("hom-sets over Q are infinite")
        p = self.ring.characteristic
        self._own(*(m for pair in constraints for m in pair))
        if p ** a * b > limit:
            raise DimensionBoundError(f"row search of hom({a}, {b}) over {self.ring.label} is too large")
        columns = [(u.rows(), v.rows()) for u, v in constraints]
        per_row = []
        for i in range(b):
            found = []
            for row in itertools.product(range(p), repeat=a):
                if all(sum(row[t] * U[t][c] for t in range(a)) % p == V[i][c]
                       for U, V in columns for c in range(len(V[i]))):
                    found.append(list(row))
            per_row.append(found)
        solutions = [self.matrix(list(rows), shape=(b, a)) for rows in itertools.product(*per_row)]
        return solutions, p ** (a * b)


# ===================================
# Finite-set instance
# ===================================

@dataclass(frozen=True)
class FiniteSet:
    """The set {0, ..., size-1}; labels are display metadata only"""
    size: int
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 0:
            raise ShapeError(f"finite set size must be a non-negative integer, got {self.size!r}")
        if self.labels and len(self.labels) != self.size:
            raise ShapeError(f"{len(self.labels)} labels for a set of size {self.size}")

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def to_json(self):
        data = {"size": self.size}
        if self.labels:
            data["labels"] = list(self.labels)
        return data


@dataclass(frozen=True)
class FunctionMorphism:
    """A total function between finite sets as a lookup table"""
    source: FiniteSet
    target: FiniteSet
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.source.size:
            raise ShapeError(f"table of length {len(self.table)} on a set of size {self.source.size}")
        for value in self.table:
            if not 0 <= value < self.target.size:
                raise ShapeError(f"table value {value} outside target of size {self.target.size}")

    def __call__(self, i):
        return self.table[i]

    def to_json(self):
        return {"from": self.source.size, "to": self.target.size, "table": list(self.table)}


class FiniteSetCategory(MonoidalCategory):
    """Finite sets and functions, cartesian product with lexicographic flattening"""

    name = "FinSet"

    def __init__(self, size_bound=DEFAULT_DIM_BOUND, debug=False):
        self.size_bound = size_bound
        self.debug = debug

    def __eq__(self, other):
        return isinstance(other, FiniteSetCategory)

    def __hash__(self):
        return hash("finite-set")

    def __repr__(self):
        return "FiniteSetCategory()"

    def _own(self, *morphisms):
        for f in morphisms:
            if not isinstance(f, FunctionMorphism):
                raise InstanceMismatchError(f"{f!r} is not a morphism of {self.name}")

    def _check_object(self, obj):
        if not isinstance(obj, FiniteSet):
            raise InstanceMismatchError(f"{obj!r} is not an object of {self.name}")
        return obj

    def function(self, source, target, table):
        source = source if isinstance(source, FiniteSet) else FiniteSet(source)
        target = target if isinstance(target, FiniteSet) else FiniteSet(target)
        return FunctionMorphism(source, target, tuple(table))

    def identity(self, obj):
        self._check_object(obj)
        return FunctionMorphism(obj, obj, tuple(range(obj.size)))

    def domain(self, f):
        return f.source

    def codomain(self, f):
        return f.target

    def compose(self, g, f):
        self._own(g, f)
        if f.target != g.source:
            raise self._composition_error(g, f)
        return FunctionMorphism(f.source, g.target, tuple(g.table[x] for x in f.table))

    def unit(self):
        return FiniteSet(1, ("*",))

    def tensor_obj(self, a, b):
        """Cartesian product; every one-point set is the strict unit, so it drops out"""
        self._check_object(a)
        self._check_object(b)
        if a.size == 1:
            return b
        if b.size == 1:
            return a
        labels = ()
        if a.labels and b.labels:
            labels = tuple(f"({x},{y})" for x in a.labels for y in b.labels)
        return FiniteSet(a.size * b.size, labels)

    def tensor_mor(self, f, g):
        self._own(f, g)
        width = g.target.size
        table = tuple(f.table[i] * width + g.table[j]
                      for i in range(f.source.size) for j in range(g.source.size))
        return FunctionMorphism(self.tensor_obj(f.source, g.source),
                                self.tensor_obj(f.target, g.target), table)

    def braiding(self, a, b):
        source = self.tensor_obj(a, b)
        target = self.tensor_obj(b, a)
        table = tuple(j * a.size + i for i in range(a.size) for j in range(b.size))
        return FunctionMorphism(source, target, table)

    def is_invertible(self, f):
        """
        Bijectivity test

        Returns:
            InvertibilityResult: inverse table, or a colliding pair, or an
            element missed by f
        """
        self._own(f)
        seen = {}
        for x, y in enumerate(f.table):
            if y in seen:
                return InvertibilityResult(False, witness={"collision": [seen[y], x]},
                                           reason=f"{seen[y]} and {x} both map to {y}")
            seen[y] = x
        for y in range(f.target.size):
            if y not in seen:
                return InvertibilityResult(False, witness={"omission": y},
                                           reason=f"{y} is not in the image")
        inverse = tuple(seen[y] for y in range(f.target.size))
        return InvertibilityResult(True, inverse=FunctionMorphism(f.target, f.source, inverse))

    def random_morphism(self, a, b, rng):
        if b.size == 0 and a.size > 0:
            raise ShapeError(f"no function from a set of size {a.size} to the empty set")
        return FunctionMorphism(a, b, tuple(rng.randrange(b.size) for _ in range(a.size)))

    def objects(self):
        return [FiniteSet(n) for n in range(1, self.size_bound + 1)]

    def hom(self, a, b, limit=HOM_ENUMERATION_LIMIT):
        if b.size ** a.size > limit:
            raise DimensionBoundError(f"hom({a.size}, {b.size}) has {b.size ** a.size} elements")
        return [FunctionMorphism(a, b, table)
                for table in itertools.product(range(b.size), repeat=a.size)]


# ===================================
# Opposite category
# ===================================

class OppositeCategory(MonoidalCategory):
    """
    The opposite of a symmetric monoidal category

    Morphisms are the base morphisms read backwards; the tensor is unchanged.
    """

    def __init__(self, base):
        self.base = base

    @property
    def name(self):
        return f"{self.base.name}^op"

    def __eq__(self, other):
        return isinstance(other, OppositeCategory) and other.base == self.base

    def __hash__(self):
        return hash(("op", self.base))

    def identity(self, obj):
        return self.base.identity(obj)

    def compose(self, g, f):
        return self.base.compose(f, g)

    def domain(self, f):
        return self.base.codomain(f)

    def codomain(self, f):
        return self.base.domain(f)

    def morphisms_equal(self, f, g):
        return self.base.morphisms_equal(f, g)

    def unit(self):
        return self.base.unit()

    def tensor_obj(self, a, b):
        return self.base.tensor_obj(a, b)

    def tensor_mor(self, f, g):
        return self.base.tensor_mor(f, g)

    def braiding(self, a, b):
        return self.base.braiding(b, a)

    def is_invertible(self, f):
        return self.base.is_invertible(f)

    def random_morphism(self, a, b, rng):
        return self.base.random_morphism(b, a, rng)

    def objects(self):
        return self.base.objects()

    def hom(self, a, b, **kwargs):
        return self.base.hom(b, a, **kwargs)

    def spanning_hom(self, a, b, **kwargs):
        return self.base.spanning_hom(b, a, **kwargs)


# ===================================
# Small categories given by tables
# ===================================

@dataclass(frozen=True)
class Arrow:
    """A named morphism of a FiniteCategory"""
    name: str
    source: Any
    target: Any

    def to_json(self):
        return self.name

    def __repr__(self):
        return f"{self.name}: {self.source} -> {self.target}"


class FiniteCategory(ComputableCategory):
    """
    A small category given by a composition table

    Identity arrows named ``id_<object>`` are added unless identities are
    passed explicitly; composites with identities need not be listed.
    """

    def __init__(self, objects, arrows, composition, identities=None, name="C"):
        self.name = name
        self._objects = list(objects)
        identities = dict(identities or {})
        self._arrows = {}
        for obj in self._objects:
            if obj not in identities:
                identities[obj] = f"id_{obj}"
                self._arrows[identities[obj]] = Arrow(identities[obj], obj, obj)
        for arrow_name, (source, target) in arrows.items():
            if source not in self._objects or target not in self._objects:
                raise ShapeError(f"arrow {arrow_name} has an endpoint outside the object list")
            self._arrows[arrow_name] = Arrow(arrow_name, source, target)
        self._identities = {obj: self._arrows[n] for obj, n in identities.items()}
        self._composition = {}
        for (g, f), h in composition.items():
            self._composition[(g, f)] = self._arrows[h]
        self._hom = {}
        for arrow in self._arrows.values():
            self._hom.setdefault((arrow.source, arrow.target), []).append(arrow)

    def __repr__(self):
        return f"FiniteCategory({self.name}, {len(self._objects)} objects, {len(self._arrows)} arrows)"

    def objects(self):
        return list(self._objects)

    def arrows(self):
        return list(self._arrows.values())

    def arrow(self, arrow_name):
        return self._arrows[arrow_name]

    def hom(self, a, b):
        return list(self._hom.get((a, b), []))

    def identity(self, obj):
        return self._identities[obj]

    def domain(self, f):
        return f.source

    def codomain(self, f):
        return f.target

    def compose(self, g, f):
        if f.target != g.source:
            raise self._composition_error(g, f)
        if f == self._identities[f.source]:
            return g
        if g == self._identities[g.source]:
            return f
        try:
            return self._composition[(g.name, f.name)]
        except KeyError:
            raise CatCheckError(f"composition table of {self.name} has no entry for {g.name} o {f.name}")

    def is_invertible(self, f):
        for g in self.hom(f.target, f.source):
            if (self.compose(g, f) == self.identity(f.source)
                    and self.compose(f, g) == self.identity(f.target)):
                return InvertibilityResult(True, inverse=g)
        return InvertibilityResult(False, witness={"arrow": f.name}, reason=f"{f.name} has no inverse")

    def check_laws(self):
        """Exhaustive associativity and unit checks"""
        results = []
        unit_failure = None
        for f in self.arrows():
            if (self.compose(self.identity(f.target), f) != f
                    or self.compose(f, self.identity(f.source)) != f):
                unit_failure = f.name
                break
        results.append(CheckResult("unit laws", unit_failure is None,
                                   witness=unit_failure and {"arrow": unit_failure}))
        assoc_failure = None
        count = 0
        for f in self.arrows():
            for g in self.arrows():
                if g.source != f.target:
                    continue
                for h in self.arrows():
                    if h.source != g.target:
                        continue
                    count += 1
                    if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                        assoc_failure = {"triple": [f.name, g.name, h.name]}
                        break
                if assoc_failure:
                    break
            if assoc_failure:
                break
        results.append(CheckResult("associativity", assoc_failure is None,
                                   witness=assoc_failure, detail=f"{count} triples"))
        return results

    @classmethod
    def linear_order(cls, n, name=None):
        """The poset 0 < 1 < ... < n as a category; n = 1 is the arrow category"""
        objects = list(range(n + 1))
        arrows = {f"{i}<{j}": (i, j) for i in objects for j in objects if i < j}
        composition = {(f"{j}<{k}", f"{i}<{j}"): f"{i}<{k}"
                       for i in objects for j in objects for k in objects if i < j < k}
        return cls(objects, arrows, composition, name=name or f"[{n}]")

    @classmethod
    def from_monoid(cls, table, labels=None, unit=0, name="BM"):
        """One-object category of a monoid; composition g o f is table[g][f]"""
        size = len(table)
        labels = list(labels) if labels else [f"m{i}" for i in range(size)]
        arrows = {labels[i]: ("*", "*") for i in range(size)}
        composition = {(labels[g], labels[f]): labels[table[g][f]]
                       for g in range(size) for f in range(size)}
        return cls(["*"], arrows, composition, identities={"*": labels[unit]}, name=name)

    def product(self, other, name=None):
        """Product category with componentwise composition"""
        objects = [(a, b) for a in self.objects() for b in other.objects()]
        pairs = {}
        for f in self.arrows():
            for g in other.arrows():
                pairs[f"({f.name},{g.name})"] = (f, g)
        identities = {(a, b): f"({self.identity(a).name},{other.identity(b).name})"
                      for a, b in objects}
        arrows = {key: ((f.source, g.source), (f.target, g.target)) for key, (f, g) in pairs.items()}
        composition = {}
        for key2, (f2, g2) in pairs.items():
            for key1, (f1, g1) in pairs.items():
                if f1.target == f2.source and g1.target == g2.source:
                    f = self.compose(f2, f1)
                    g = other.compose(g2, g1)
                    composition[(key2, key1)] = f"({f.name},{g.name})"
        return FiniteCategory(objects, arrows, composition, identities=identities,
                              name=name or f"{self.name}x{other.name}")


# ===================================
# Law checks on populations
# ===================================

def composable_triples(category, seed=DEFAULT_SEED, count=DEFAULT_POPULATION, objects=None, extra=()):
    """
    Seeded population of composable triples (f, g, h) with h o g o f defined

    Args:
        category (MonoidalCategory): instance providing random_morphism
        objects (list): object population; defaults to category.objects()
        extra (iterable): named morphisms to seed the population with

    Returns:
        list: tuples (f, g, h)
    """
    rng = random.Random(seed)
    objects = list(objects) if objects is not None else category.objects()
    triples = []
    for f in extra:
        a, b = category.domain(f), category.codomain(f)
        c, d = rng.choice(objects), rng.choice(objects)
        triples.append((f, category.random_morphism(b, c, rng), category.random_morphism(c, d, rng)))
    while len(triples) < count:
        a, b, c, d = (rng.choice(objects) for _ in range(4))
        triples.append((category.random_morphism(a, b, rng),
                        category.random_morphism(b, c, rng),
                        category.random_morphism(c, d, rng)))
    return triples


def check_category_laws(category, triples):
    """Associativity and unit laws on every triple of the population"""
    assoc_witness = None
    unit_witness = None
    for index, (f, g, h) in enumerate(triples):
        left = category.compose(h, category.compose(g, f))
        right = category.compose(category.compose(h, g), f)
        if assoc_witness is None and not category.morphisms_equal(left, right):
            assoc_witness = {"index": index, "f": f, "g": g, "h": h}
        for m in (f, g, h):
            if unit_witness is not None:
                break
            if not (category.morphisms_equal(category.compose(category.identity(category.codomain(m)), m), m)
                    and category.morphisms_equal(category.compose(m, category.identity(category.domain(m))), m)):
                unit_witness = {"index": index, "morphism": m}
    return [
        CheckResult("associativity", assoc_witness is None, witness=assoc_witness,
                    detail=f"{len(triples)} triples"),
        CheckResult("unit laws", unit_witness is None, witness=unit_witness),
    ]


def check_monoidal_laws(category, triples):
    """
    Interchange, symmetry, braiding naturality, hexagon and strictness checks

    Consecutive triples are paired up to produce tensor pairs.
    """
    failures = {}

    def record(name, witness):
        failures.setdefault(name, witness)

    equal = category.morphisms_equal
    unit = category.unit()
    for index in range(len(triples)):
        f1, g1, h1 = triples[index]
        f2, g2, h2 = triples[(index + 1) % len(triples)]

        left = category.tensor_mor(category.compose(g1, f1), category.compose(g2, f2))
        right = category.compose(category.tensor_mor(g1, g2), category.tensor_mor(f1, f2))
        if not equal(left, right):
            record("interchange", {"index": index})

        a, b = category.domain(f1), category.domain(f2)
        sigma = category.braiding(a, b)
        if not equal(category.compose(category.braiding(b, a), sigma),
                     category.identity(category.tensor_obj(a, b))):
            record("symmetry", {"objects": [a, b]})

        c, d = category.codomain(f1), category.codomain(f2)
        lhs = category.compose(category.braiding(c, d), category.tensor_mor(f1, f2))
        rhs = category.compose(category.tensor_mor(f2, f1), sigma)
        if not equal(lhs, rhs):
            record("braiding naturality", {"index": index, "f": f1, "g": f2})

        if not equal(category.tensor_mor(category.tensor_mor(f1, f2), h1),
                     category.tensor_mor(f1, category.tensor_mor(f2, h1))):
            record("strict tensor associativity", {"index": index})

        e = category.domain(h1)
        hexagon = category.compose(
            category.tensor_mor(category.identity(b), category.braiding(a, e)),
            category.tensor_mor(category.braiding(a, b), category.identity(e)))
        if not equal(category.braiding(a, category.tensor_obj(b, e)), hexagon):
            record("hexagon", {"objects": [a, b, e]})

        id_unit = category.identity(unit)
        if not (equal(category.tensor_mor(id_unit, f1), f1) and equal(category.tensor_mor(f1, id_unit), f1)
                and equal(category.braiding(unit, a), category.identity(a))):
            record("strict unit", {"index": index})

    names = ["interchange", "symmetry", "braiding naturality", "hexagon",
             "strict tensor associativity", "strict unit"]
    return [CheckResult(name, name not in failures, witness=failures.get(name),
                        detail=f"{len(triples)} pairs") for name in names]
