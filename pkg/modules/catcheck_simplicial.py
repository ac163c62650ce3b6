#!/usr/bin/env python3
"""
CatCheck Simplicial

Truncated simplicial sets, nerves of small categories, horn filling, the
coherent cubes c[n] and the homotopy-coherent nerve of small simplicial
categories.

Conventions:
    * A nerve simplex is (x0, (f1, ..., fk)) with f_i: x_{i-1} -> x_i.
    * In c[n] the mapping space from i to j is the nerve of the poset of
      subsets of {i, ..., j} containing both ends; a k-simplex is a chain
      S_0 <= ... <= S_k of sorted tuples. Composition is levelwise union.
    * Every claim is made up to the dimension bound of the object at hand.
"""

import itertools
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Optional, Tuple

from catcheck_monoidal import FiniteCategory
from catcheck_utils import (
    CheckResult,
    DimensionBoundError,
    PreconditionError,
    ShapeError,
    DEFAULT_DIM_BOUND,
    debug_print,
    to_jsonable,
)

MAX_HC_DIMENSION = 3
MAX_UNIT_DIMENSION = 2


# ===================================
# Truncated simplicial sets
# ===================================

class TruncatedSimplicialSet:
    """
    Simplex sets X_0..X_D with face and degeneracy tables

    faces[(k, i)] maps X_k -> X_{k-1}; degeneracies[(k, i)] maps X_k -> X_{k+1}.
    """

    def __init__(self, dimension, simplices, faces, degeneracies, name="X"):
        self.dimension = dimension
        self.simplices = [list(level) for level in simplices]
        self.faces = faces
        self.degeneracies = degeneracies
        self.name = name
        self._degenerate = [set() for _ in range(dimension + 1)]
        for (k, i), table in degeneracies.items():
            self._degenerate[k + 1].update(table.values())

    @classmethod
    def from_functions(cls, dimension, level, face, degeneracy, name="X"):
        """Tabulate a lazily given simplicial set up to dimension"""
        simplices = [list(level(k)) for k in range(dimension + 1)]
        faces = {(k, i): {x: face(i, x, k) for x in simplices[k]}
                 for k in range(1, dimension + 1) for i in range(k + 1)}
        degeneracies = {(k, i): {x: degeneracy(i, x, k) for x in simplices[k]}
                        for k in range(dimension) for i in range(k + 1)}
        return cls(dimension, simplices, faces, degeneracies, name)

    def level(self, k):
        return self.simplices[k]

    def face(self, i, x, k):
        return self.faces[(k, i)][x]

    def degeneracy(self, i, x, k):
        return self.degeneracies[(k, i)][x]

    def is_degenerate(self, x, k):
        return x in self._degenerate[k]

    def nondegenerate(self, k):
        return [x for x in self.simplices[k] if not self.is_degenerate(x, k)]

    def counts(self):
        return [len(level) for level in self.simplices]

    def check_simplicial_identities(self):
        """
        Every face/degeneracy identity whose two sides lie within the bound

        Returns:
            list: one CheckResult per family of identities
        """
        D = self.dimension
        d, s = self.face, self.degeneracy
        failures = {}
        for k in range(D + 1):
            for x in self.simplices[k]:
                if k >= 2:
                    for i, j in itertools.combinations(range(k + 1), 2):
                        if d(i, d(j, x, k), k - 1) != d(j - 1, d(i, x, k), k - 1):
                            failures.setdefault("face-face", {"simplex": x, "i": i, "j": j})
                if k + 1 <= D:
                    for j in range(k + 1):
                        y = s(j, x, k)
                        if d(j, y, k + 1) != x or d(j + 1, y, k + 1) != x:
                            failures.setdefault("face-degeneracy (identity)", {"simplex": x, "j": j})
                        for i in range(k + 2):
                            if i < j and k >= 1:
                                if d(i, y, k + 1) != s(j - 1, d(i, x, k), k - 1):
                                    failures.setdefault("face-degeneracy (below)", {"simplex": x, "i": i, "j": j})
                            elif i > j + 1:
                                if d(i, y, k + 1) != s(j, d(i - 1, x, k), k - 1):
                                    failures.setdefault("face-degeneracy (above)", {"simplex": x, "i": i, "j": j})
                if k + 2 <= D:
                    for i in range(k + 1):
                        for j in range(i, k + 1):
                            if s(i, s(j, x, k), k + 1) != s(j + 1, s(i, x, k), k + 1):
                                failures.setdefault("degeneracy-degeneracy", {"simplex": x, "i": i, "j": j})
        names = ["face-face", "face-degeneracy (identity)", "face-degeneracy (below)",
                 "face-degeneracy (above)", "degeneracy-degeneracy"]
        return [CheckResult(f"{self.name} {n}", n not in failures, witness=failures.get(n),
                            detail=f"up to dimension {D}") for n in names]

    def to_tables(self):
        """
        Level-indexed tables: simplices are rendered in JSON and faces and
        degeneracies refer to positions in the neighbouring level
        """
        index = [{x: p for p, x in enumerate(level)} for level in self.simplices]
        levels = []
        for k, level in enumerate(self.simplices):
            entry = {"simplices": [to_jsonable(x) for x in level]}
            if k >= 1:
                entry["faces"] = [[index[k - 1][self.face(i, x, k)] for i in range(k + 1)] for x in level]
            if k < self.dimension:
                entry["degeneracies"] = [[index[k + 1][self.degeneracy(i, x, k)] for i in range(k + 1)]
                                         for x in level]
            levels.append(entry)
        return {"name": self.name, "dimension": self.dimension, "levels": levels}

    @classmethod
    def from_tables(cls, data):
        """
        Inverse of to_tables; simplices are identified by their JSON text

        Raises:
            ShapeError: a table refers outside its neighbouring level
        """
        dimension = data["dimension"]
        levels = data["levels"]
        if len(levels) != dimension + 1:
            raise ShapeError(f"{len(levels)} levels for dimension {dimension}")
        simplices = [[json.dumps(x, sort_keys=True) for x in level["simplices"]] for level in levels]
        faces, degeneracies = {}, {}
        try:
            for k in range(1, dimension + 1):
                for i in range(k + 1):
                    faces[(k, i)] = {x: simplices[k - 1][row[i]]
                                     for x, row in zip(simplices[k], levels[k]["faces"])}
            for k in range(dimension):
                for i in range(k + 1):
                    degeneracies[(k, i)] = {x: simplices[k + 1][row[i]]
                                            for x, row in zip(simplices[k], levels[k]["degeneracies"])}
        except (IndexError, KeyError) as e:
            raise ShapeError(f"malformed simplicial tables: {e}")
        return cls(dimension, simplices, faces, degeneracies, data.get("name", "X"))


@dataclass
class SimplicialMap:
    """A levelwise map of simplicial sets given by a function on simplices"""
    source: Any
    target: Any
    function: Any
    dimension: int
    name: str = "f"

    def __call__(self, x, k):
        return self.function(x, k)

    def check(self, simplices=None):
        """
        Faces and degeneracies commute with the map

        Args:
            simplices (dict): optional {level: [simplex]} sample; defaults to
                every simplex of the source
        """
        failure = None
        checked = 0
        for k in range(self.dimension + 1):
            level = simplices.get(k, []) if simplices is not None else self.source.level(k)
            for x in level:
                checked += 1
                fx = self(x, k)
                for i in range(k + 1):
                    if k >= 1 and self(self.source.face(i, x, k), k - 1) != self.target.face(i, fx, k):
                        failure = {"simplex": x, "face": i}
                    if k < self.dimension and self(self.source.degeneracy(i, x, k), k + 1) != \
                            self.target.degeneracy(i, fx, k):
                        failure = {"simplex": x, "degeneracy": i}
                    if failure:
                        return CheckResult(f"{self.name} is simplicial", False, witness=failure)
        return CheckResult(f"{self.name} is simplicial", True, detail=f"{checked} simplices")


# ===================================
# Nerves and horns
# ===================================

class CategoryNerve:
    """
    The nerve of a category, computed lazily

    Levels can be enumerated whenever the category has finite objects and
    hom-sets; faces and degeneracies only need composition.
    """

    def __init__(self, category, dimension=DEFAULT_DIM_BOUND):
        self.category = category
        self.dimension = dimension

    def vertex(self, x, m):
        start, arrows = x
        return start if m == 0 else self.category.codomain(arrows[m - 1])

    def level(self, k):
        chains = [(obj, ()) for obj in self.category.objects()]
        for _ in range(k):
            extended = []
            for start, arrows in chains:
                end = self.category.codomain(arrows[-1]) if arrows else start
                for target in self.category.objects():
                    for f in self.category.hom(end, target):
                        extended.append((start, arrows + (f,)))
            chains = extended
        return chains

    def face(self, i, x, k=None):
        start, arrows = x
        k = len(arrows)
        if k == 0:
            raise ShapeError("a vertex has no faces")
        if i == 0:
            return (self.category.codomain(arrows[0]), arrows[1:])
        if i == k:
            return (start, arrows[:-1])
        merged = self.category.compose(arrows[i], arrows[i - 1])
        return (start, arrows[:i - 1] + (merged,) + arrows[i + 1:])

    def degeneracy(self, i, x, k=None):
        start, arrows = x
        identity = self.category.identity(self.vertex(x, i))
        return (start, arrows[:i] + (identity,) + arrows[i:])

    def to_simplicial_set(self, name=None):
        return TruncatedSimplicialSet.from_functions(self.dimension, self.level, self.face, self.degeneracy,
                                                     name or f"N({self.category.name})")


def nerve(category, dimension=DEFAULT_DIM_BOUND):
    """N(C) truncated at dimension"""
    return CategoryNerve(category, dimension).to_simplicial_set()


@dataclass
class HornReport:
    """Outcome of a horn-filling search"""
    kind: str
    dimension: int
    horns: int = 0
    passed: bool = True
    unique: bool = True
    failure: Optional[dict] = None

    def to_result(self, name=None):
        detail = f"{self.horns} horns up to dimension {self.dimension}"
        if self.passed:
            detail += ", fillers unique" if self.unique else ", fillers not unique"
        return CheckResult(name or f"{self.kind} horns fill", self.passed, witness=self.failure, detail=detail)


def _horns(X, n, k):
    """Every compatible family (y_i)_{i != k} of (n-1)-simplices"""
    indices = [i for i in range(n + 1) if i != k]
    candidates = X.level(n - 1)

    def extend(assigned):
        if len(assigned) == len(indices):
            yield dict(assigned)
            return
        j = indices[len(assigned)]
        for y in candidates:
            ok = True
            if n >= 2:
                for i, yi in assigned:
                    # i < j: d_i y_j = d_{j-1} y_i
                    if X.face(i, y, n - 1) != X.face(j - 1, yi, n - 1):
                        ok = False
                        break
            if ok:
                assigned.append((j, y))
                yield from extend(assigned)
                assigned.pop()

    yield from extend([])


def horn_check(X, kind="inner", dimension=None, only=None, debug=False):
    """
    Search a filler for every horn up to dimension

    Args:
        X (TruncatedSimplicialSet): simplicial set to audit
        kind (str): "inner" (0 < k < n) or "all"
        dimension (int): top dimension; defaults to the bound of X
        only (list): restrict to these (n, k) pairs

    Returns:
        HornReport: first unfillable horn as witness on failure
    """
    if kind not in ("inner", "all"):
        raise PreconditionError(f"unknown horn kind {kind!r}")
    D = X.dimension if dimension is None else dimension
    if D > X.dimension:
        raise DimensionBoundError(f"horn dimension {D} exceeds the bound {X.dimension} of {X.name}")
    report = HornReport(kind, D)
    for n in range(1 if kind == "all" else 2, D + 1):
        fillers = {}
        for x in X.level(n):
            key = tuple(X.face(i, x, n) for i in range(n + 1))
            fillers.setdefault(key, []).append(x)
        for k in range(n + 1):
            if kind == "inner" and not 0 < k < n:
                continue
            if only is not None and (n, k) not in only:
                continue
            by_horn = {}
            for key, xs in fillers.items():
                horn_key = key[:k] + key[k + 1:]
                by_horn[horn_key] = by_horn.get(horn_key, 0) + len(xs)
            for horn in _horns(X, n, k):
                report.horns += 1
                horn_key = tuple(horn[i] for i in sorted(horn))
                found = by_horn.get(horn_key, 0)
                if found == 0:
                    report.passed = False
                    report.failure = {"n": n, "k": k, "faces": {str(i): horn[i] for i in sorted(horn)}}
                    debug_print(debug, f"unfillable horn ({n}, {k}) in {X.name}")
                    return report
                if found > 1:
                    report.unique = False
        debug_print(debug, f"{X.name}: dimension {n} done, {report.horns} horns so far")
    return report


# ===================================
# Simplicial categories
# ===================================

class SimplicialCategory(ABC):
    """A category enriched in simplicial sets with finite levels"""

    name = "C"
    top_level = None

    @abstractmethod
    def objects(self):
        pass

    @abstractmethod
    def hom_level(self, a, b, k):
        """k-simplices of the mapping space from a to b"""

    @abstractmethod
    def compose(self, g, f):
        """Composition of two simplices of the same level"""

    @abstractmethod
    def identity(self, a, k):
        pass

    @abstractmethod
    def face(self, t, x):
        pass

    @abstractmethod
    def degeneracy(self, t, x):
        pass

    def mapping_space(self, a, b, dimension):
        """Map(a, b) as a truncated simplicial set"""
        return TruncatedSimplicialSet.from_functions(
            dimension, lambda k: self.hom_level(a, b, k),
            lambda i, x, k: self.face(i, x), lambda i, x, k: self.degeneracy(i, x),
            name=f"Map({a},{b})")

    def check_fibrant(self, dimension=None):
        """Every mapping space fills all horns up to dimension"""
        D = self.top_level if dimension is None else dimension
        for a in self.objects():
            for b in self.objects():
                space = self.mapping_space(a, b, D)
                report = horn_check(space, "all")
                if not report.passed:
                    return CheckResult(f"{self.name} mapping spaces are Kan", False,
                                       witness={"source": a, "target": b, "horn": report.failure})
        return CheckResult(f"{self.name} mapping spaces are Kan", True, detail=f"up to dimension {D}")


@dataclass(frozen=True)
class LevelMorphism:
    """An arrow of the level-k category of a levelwise simplicial category"""
    level: int
    arrow: Any

    def to_json(self):
        return {"level": self.level, "arrow": self.arrow.name}


class LevelwiseSimplicialCategory(SimplicialCategory):
    """
    A simplicial object in small categories with a fixed object set,
    truncated at top_level

    Face and degeneracy functors are given on arrows by name:
    faces[(k, i)] maps arrow names of level k to level k-1, and
    degeneracies[(k, i)] maps level k to level k+1.
    """

    def __init__(self, levels, faces, degeneracies, name="C"):
        self.levels = list(levels)
        self.faces = faces
        self.degeneracies = degeneracies
        self.name = name
        self.top_level = len(self.levels) - 1
        objects = self.levels[0].objects()
        for k, category in enumerate(self.levels):
            if category.objects() != objects:
                raise ShapeError(f"level {k} of {name} has a different object set")

    @classmethod
    def discrete(cls, category, top_level=DEFAULT_DIM_BOUND, name=None):
        """The constant simplicial category on a category"""
        names = {f.name: f.name for f in category.arrows()}
        faces = {(k, i): names for k in range(1, top_level + 1) for i in range(k + 1)}
        degeneracies = {(k, i): names for k in range(top_level) for i in range(k + 1)}
        return cls([category] * (top_level + 1), faces, degeneracies, name or f"disc({category.name})")

    @classmethod
    def walking_homotopy(cls):
        """
        Two objects a, b; two parallel arrows f, g at level 0 and, at level 1,
        their degeneracies plus one edge h from f to g
        """
        level0 = FiniteCategory(["a", "b"], {"f": ("a", "b"), "g": ("a", "b")}, {}, name="H0")
        level1 = FiniteCategory(["a", "b"], {"f'": ("a", "b"), "g'": ("a", "b"), "h": ("a", "b")}, {},
                                name="H1")
        ids = {"id_a": "id_a", "id_b": "id_b"}
        faces = {
            (1, 0): {**ids, "f'": "f", "g'": "g", "h": "g"},
            (1, 1): {**ids, "f'": "f", "g'": "g", "h": "f"},
        }
        degeneracies = {(0, 0): {**ids, "f": "f'", "g": "g'"}}
        return cls([level0, level1], faces, degeneracies, name="H")

    def objects(self):
        return self.levels[0].objects()

    def _level(self, k):
        if k > self.top_level:
            raise DimensionBoundError(f"{self.name} is truncated at level {self.top_level}, level {k} requested")
        return self.levels[k]

    def hom_level(self, a, b, k):
        return [LevelMorphism(k, f) for f in self._level(k).hom(a, b)]

    def compose(self, g, f):
        if g.level != f.level:
            raise ShapeError(f"cannot compose simplices of levels {g.level} and {f.level}")
        return LevelMorphism(f.level, self.levels[f.level].compose(g.arrow, f.arrow))

    def identity(self, a, k):
        return LevelMorphism(k, self._level(k).identity(a))

    def face(self, t, x):
        if x.level == 0:
            raise ShapeError("a level-0 arrow has no faces")
        return LevelMorphism(x.level - 1, self.levels[x.level - 1].arrow(self.faces[(x.level, t)][x.arrow.name]))

    def degeneracy(self, t, x):
        target = self._level(x.level + 1)
        return LevelMorphism(x.level + 1, target.arrow(self.degeneracies[(x.level, t)][x.arrow.name]))

    def check_structure(self):
        """
        Level category laws, functoriality of faces and degeneracies, and the
        simplicial identities on arrows
        """
        results = []
        for k, category in enumerate(self.levels):
            results.extend(CheckResult(f"level {k} {r.name}", r.passed, r.witness, r.detail)
                           for r in category.check_laws())
        functor_failure = None
        for k in range(self.top_level + 1):
            arrows = self.levels[k].arrows()
            for t in range(k + 1):
                maps = []
                if k >= 1:
                    maps.append(self.face)
                if k < self.top_level:
                    maps.append(self.degeneracy)
                for functor in maps:
                    for f in arrows:
                        image = functor(t, LevelMorphism(k, f))
                        if (image.arrow.source, image.arrow.target) != (f.source, f.target):
                            functor_failure = functor_failure or {"level": k, "index": t, "arrow": f.name}
                        for g in arrows:
                            if g.source != f.target:
                                continue
                            left = functor(t, LevelMorphism(k, self.levels[k].compose(g, f)))
                            right = self.compose(functor(t, LevelMorphism(k, g)), image)
                            if left != right:
                                functor_failure = functor_failure or {"level": k, "index": t,
                                                                      "arrows": [f.name, g.name]}
                    for a in self.objects():
                        image = functor(t, self.identity(a, k))
                        if image != self.identity(a, image.level):
                            functor_failure = functor_failure or {"level": k, "index": t, "object": a}
        results.append(CheckResult(f"{self.name} face and degeneracy functors", functor_failure is None,
                                   witness=functor_failure))
        for a in self.objects():
            for b in self.objects():
                for r in self.mapping_space(a, b, self.top_level).check_simplicial_identities():
                    if not r.passed:
                        results.append(r)
                        return results
        results.append(CheckResult(f"{self.name} simplicial identities", True,
                                   detail=f"up to level {self.top_level}"))
        return results


class CoherentCube(SimplicialCategory):
    """c[n]: objects 0..n, Map(i, j) the nerve of the subset poset P(i, j)"""

    def __init__(self, n):
        self.n = n
        self.name = f"c[{n}]"

    def objects(self):
        return list(range(self.n + 1))

    def subsets(self, i, j):
        """P(i, j) as sorted tuples; P(i, i) = {{i}}"""
        if i > j:
            return []
        if i == j:
            return [(i,)]
        inner = list(range(i + 1, j))
        result = []
        for r in range(len(inner) + 1):
            for chosen in itertools.combinations(inner, r):
                result.append(tuple(sorted((i, j) + chosen)))
        return result

    def poset_size(self, i, j):
        return len(self.subsets(i, j))

    def hom_level(self, a, b, k):
        """Chains S_0 <= ... <= S_k in P(a, b)"""
        chains = [(s,) for s in self.subsets(a, b)]
        for _ in range(k):
            chains = [c + (s,) for c in chains for s in self.subsets(a, b) if set(c[-1]) <= set(s)]
        return chains

    def strict_chains(self, a, b, k):
        return [c for c in self.hom_level(a, b, k) if all(c[t] != c[t + 1] for t in range(k))]

    def compose(self, g, f):
        if len(g) != len(f) or f[0][-1] != g[0][0]:
            raise ShapeError(f"chains {f} and {g} are not composable")
        return tuple(tuple(sorted(set(a) | set(b))) for a, b in zip(f, g))

    def identity(self, a, k):
        return ((a,),) * (k + 1)

    def face(self, t, x):
        return x[:t] + x[t + 1:]

    def degeneracy(self, t, x):
        return x[:t + 1] + x[t:]

    def check_laws(self):
        """Poset sizes 2^(j-i-1) and associativity/unit of union on vertices and edges"""
        size_failure = None
        for i in range(self.n + 1):
            for j in range(i + 1, self.n + 1):
                if self.poset_size(i, j) != 2 ** (j - i - 1):
                    size_failure = {"i": i, "j": j, "size": self.poset_size(i, j)}
        assoc_failure = None
        for k in (0, 1):
            for a, b, c, d in itertools.combinations_with_replacement(range(self.n + 1), 4):
                for f in self.hom_level(a, b, k):
                    if self.compose(f, self.identity(a, k)) != f or self.compose(self.identity(b, k), f) != f:
                        assoc_failure = {"unit": f}
                    for g in self.hom_level(b, c, k):
                        for h in self.hom_level(c, d, k):
                            if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                                assoc_failure = {"chains": [f, g, h]}
        return [CheckResult(f"{self.name} poset sizes", size_failure is None, witness=size_failure),
                CheckResult(f"{self.name} composition laws", assoc_failure is None, witness=assoc_failure)]


def coherent_cube(n, dim_bound=5):
    if n > dim_bound:
        raise DimensionBoundError(f"c[{n}] exceeds the bound {dim_bound}")
    return CoherentCube(n)


class ProductSimplicialCategory(SimplicialCategory):
    """Levelwise product of two simplicial categories"""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        self.name = f"{first.name}x{second.name}"
        tops = [t for t in (first.top_level, second.top_level) if t is not None]
        self.top_level = min(tops) if tops else None

    def objects(self):
        return [(a, b) for a in self.first.objects() for b in self.second.objects()]

    def hom_level(self, a, b, k):
        return [(x, y) for x in self.first.hom_level(a[0], b[0], k)
                for y in self.second.hom_level(a[1], b[1], k)]

    def compose(self, g, f):
        return (self.first.compose(g[0], f[0]), self.second.compose(g[1], f[1]))

    def identity(self, a, k):
        return (self.first.identity(a[0], k), self.second.identity(a[1], k))

    def face(self, t, x):
        return (self.first.face(t, x[0]), self.second.face(t, x[1]))

    def degeneracy(self, t, x):
        return (self.first.degeneracy(t, x[0]), self.second.degeneracy(t, x[1]))


# ===================================
# Homotopy-coherent nerve
# ===================================

def image_chain(theta, chain):
    """Push a chain of subsets forward along a monotone map given as a tuple"""
    return tuple(tuple(sorted({theta[v] for v in s})) for s in chain)


def coface_map(n, m):
    """delta^m: [n-1] -> [n] skipping m"""
    return tuple(v if v < m else v + 1 for v in range(n))


def codegeneracy_map(n, m):
    """sigma^m: [n+1] -> [n] hitting m twice"""
    return tuple(v if v <= m else v - 1 for v in range(n + 2))


def free_chains(n):
    """
    Strict chains whose first set is {i, k}, i < k, ordered by gap and then
    by dimension; these carry the independent data of an hc-nerve simplex
    """
    cube = CoherentCube(n)
    chains = []
    for gap in range(1, n + 1):
        for i in range(0, n - gap + 1):
            k = i + gap
            for dim in range(gap):
                for c in cube.strict_chains(i, k, dim):
                    if c[0] == (i, k):
                        chains.append(c)
    return chains


@dataclass(frozen=True)
class HCSimplex:
    """A simplicial functor c[n] -> C given by objects and values on free chains"""
    objects: Tuple[Any, ...]
    values: Tuple[Tuple[Any, Any], ...]

    @property
    def dimension(self):
        return len(self.objects) - 1

    @cached_property
    def table(self):
        return dict(self.values)

    def to_json(self):
        return {"objects": to_jsonable(list(self.objects)),
                "values": [[to_jsonable(c), to_jsonable(v)] for c, v in self.values]}


class HCNerve:
    """
    The homotopy-coherent nerve of a simplicial category

    Values on non-free chains are derived: identities when the chain starts
    and ends at the same vertex, degeneracies for repeated sets, and
    composites when every set contains an interior vertex.
    """

    def __init__(self, category, debug=False):
        self.category = category
        self.debug = debug

    def value(self, objects, table, chain):
        C = self.category
        dim = len(chain) - 1
        i, k = chain[0][0], chain[0][-1]
        if i == k:
            return C.identity(objects[i], dim)
        for t in range(dim):
            if chain[t] == chain[t + 1]:
                reduced = chain[:t + 1] + chain[t + 2:]
                return C.degeneracy(t, self.value(objects, table, reduced))
        interior = [v for v in chain[0] if i < v < k]
        if interior:
            j = interior[0]
            left = tuple(tuple(v for v in s if v <= j) for s in chain)
            right = tuple(tuple(v for v in s if v >= j) for s in chain)
            return C.compose(self.value(objects, table, right), self.value(objects, table, left))
        return table[chain]

    def simplex_value(self, simplex, chain):
        return self.value(simplex.objects, simplex.table, chain)

    def _candidates(self, objects, table, chain):
        C = self.category
        dim = len(chain) - 1
        i, k = chain[0][0], chain[0][-1]
        faces = [self.value(objects, table, chain[:t] + chain[t + 1:]) for t in range(dim + 1)] if dim else []
        return [e for e in C.hom_level(objects[i], objects[k], dim)
                if all(C.face(t, e) == faces[t] for t in range(len(faces)))]

    def level(self, n):
        """Every simplicial functor c[n] -> C"""
        chains = free_chains(n)
        simplices = []
        for objects in itertools.product(self.category.objects(), repeat=n + 1):
            table = {}

            def extend(index):
                if index == len(chains):
                    simplices.append(HCSimplex(objects, tuple((c, table[c]) for c in chains)))
                    return
                chain = chains[index]
                for e in self._candidates(objects, table, chain):
                    table[chain] = e
                    extend(index + 1)
                table.pop(chain, None)

            extend(0)
        debug_print(self.debug, f"hc-nerve of {self.category.name}: {len(simplices)} simplices in dimension {n}")
        return simplices

    def is_valid(self, simplex):
        """Face conditions on every free chain"""
        C = self.category
        for chain in free_chains(simplex.dimension):
            dim = len(chain) - 1
            e = simplex.table.get(chain)
            if e is None:
                return False
            for t in range(dim + 1 if dim else 0):
                if C.face(t, e) != self.simplex_value(simplex, chain[:t] + chain[t + 1:]):
                    return False
        return True

    def _precompose(self, simplex, theta, objects):
        n = len(objects) - 1
        values = tuple((c, self.simplex_value(simplex, image_chain(theta, c))) for c in free_chains(n))
        return HCSimplex(tuple(objects), values)

    def face(self, m, simplex, k=None):
        n = simplex.dimension
        if n == 0:
            raise ShapeError("a vertex has no faces")
        objects = simplex.objects[:m] + simplex.objects[m + 1:]
        return self._precompose(simplex, coface_map(n, m), objects)

    def degeneracy(self, m, simplex, k=None):
        n = simplex.dimension
        objects = simplex.objects[:m + 1] + simplex.objects[m:]
        return self._precompose(simplex, codegeneracy_map(n, m), objects)

    def to_simplicial_set(self, dimension):
        return TruncatedSimplicialSet.from_functions(dimension, self.level, self.face, self.degeneracy,
                                                     name=f"N^s({self.category.name})")


def hc_nerve_simplices(category, n, debug=False):
    """
    All n-simplices of the homotopy-coherent nerve

    Raises:
        DimensionBoundError: n > 3, or free chains would need a level above
            the truncation of the category
    """
    if n > MAX_HC_DIMENSION:
        raise DimensionBoundError(f"hc-nerve enumeration is bounded at dimension {MAX_HC_DIMENSION}")
    if category.top_level is not None and n - 1 > category.top_level:
        raise DimensionBoundError(f"{category.name} is truncated at level {category.top_level}; "
                                  f"{n}-simplices need level {n - 1}")
    return HCNerve(category, debug).level(n)


def discrete_simplex(nerve_simplex, category, n):
    """The hc-simplex of the discrete simplicial category matching a nerve simplex"""
    start, arrows = nerve_simplex
    objects = [start] + [f.target for f in arrows]
    values = []
    for chain in free_chains(n):
        i, k = chain[0][0], chain[0][-1]
        composite = arrows[i]
        for f in arrows[i + 1:k]:
            composite = category.compose(f, composite)
        values.append((chain, LevelMorphism(len(chain) - 1, composite)))
    return HCSimplex(tuple(objects), tuple(values))


def compare_discrete_hc_nerve(category, dimension=DEFAULT_DIM_BOUND, debug=False):
    """
    N^s of the constant simplicial category on C against N(C)

    The comparison map must be a bijection in every dimension and commute
    with faces and degeneracies.
    """
    if dimension > MAX_HC_DIMENSION:
        raise DimensionBoundError(f"comparison is bounded at dimension {MAX_HC_DIMENSION}")
    discrete = LevelwiseSimplicialCategory.discrete(category, max(dimension, 1))
    hc = HCNerve(discrete, debug)
    ordinary = CategoryNerve(category, dimension)
    results = []
    for n in range(dimension + 1):
        expected = set(hc.level(n))
        images = {discrete_simplex(x, category, n) for x in ordinary.level(n)}
        count = len(ordinary.level(n))
        results.append(CheckResult(f"hc-nerve bijection n={n}", images == expected and len(images) == count,
                                   witness=None if images == expected else
                                   {"n": n, "nerve": count, "hc": len(expected), "image": len(images)},
                                   detail=f"{count} simplices"))
    comparison = SimplicialMap(ordinary, hc, lambda x, k: discrete_simplex(x, category, k),
                               dimension, name="N(C) -> N^s(disc C)")
    results.append(comparison.check())
    return results


# ===================================
# Simplicial functors and the adjunction unit
# ===================================

class SimplicialFunctor:
    """
    A functor of levelwise simplicial categories given by an object map and
    arrow-name maps per level
    """

    def __init__(self, source, target, object_map, arrow_maps, name="G"):
        self.source = source
        self.target = target
        self.object_map = object_map
        self.arrow_maps = arrow_maps
        self.name = name

    def on_object(self, a):
        return self.object_map[a]

    def on_morphism(self, x):
        level = self.target.levels[x.level]
        return LevelMorphism(x.level, level.arrow(self.arrow_maps[x.level][x.arrow.name]))

    def on_simplex(self, simplex):
        return HCSimplex(tuple(self.on_object(a) for a in simplex.objects),
                         tuple((c, self.on_morphism(v)) for c, v in simplex.values))

    def check(self):
        """Composition, identities, faces and degeneracies are preserved"""
        S, T = self.source, self.target
        for k in range(S.top_level + 1):
            arrows = S.levels[k].arrows()
            for f in arrows:
                x = LevelMorphism(k, f)
                image = self.on_morphism(x)
                if (image.arrow.source, image.arrow.target) != (self.on_object(f.source), self.on_object(f.target)):
                    return CheckResult(f"{self.name} is a simplicial functor", False, witness={"arrow": x})
                for g in arrows:
                    if g.source == f.target and self.on_morphism(S.compose(LevelMorphism(k, g), x)) != \
                            T.compose(self.on_morphism(LevelMorphism(k, g)), image):
                        return CheckResult(f"{self.name} is a simplicial functor", False,
                                           witness={"composite": [x, LevelMorphism(k, g)]})
                for t in range(k + 1):
                    if k >= 1 and self.on_morphism(S.face(t, x)) != T.face(t, image):
                        return CheckResult(f"{self.name} is a simplicial functor", False,
                                           witness={"face": t, "arrow": x})
                    if k < S.top_level and self.on_morphism(S.degeneracy(t, x)) != T.degeneracy(t, image):
                        return CheckResult(f"{self.name} is a simplicial functor", False,
                                           witness={"degeneracy": t, "arrow": x})
            for a in S.objects():
                if self.on_morphism(S.identity(a, k)) != T.identity(self.on_object(a), k):
                    return CheckResult(f"{self.name} is a simplicial functor", False, witness={"identity": a})
        return CheckResult(f"{self.name} is a simplicial functor", True)


def monotone_maps(k, n):
    """Monotone maps [k] -> [n] as nondecreasing tuples"""
    return list(itertools.combinations_with_replacement(range(n + 1), k + 1))


class AdjunctionUnit:
    """
    The map Delta^n x N^s(C) -> N^s(c[n] x C), (theta, F) |-> (c[theta], F)

    A k-simplex (theta, F) goes to the simplicial functor whose value on a
    free chain is the pair of the pushed-forward chain and the value of F.
    """

    def __init__(self, n, category, dimension=MAX_UNIT_DIMENSION, debug=False):
        if n > MAX_UNIT_DIMENSION:
            raise DimensionBoundError(f"adjunction unit is bounded at n = {MAX_UNIT_DIMENSION}")
        self.n = n
        self.category = category
        self.dimension = dimension
        self.cube = CoherentCube(n)
        self.source_nerve = HCNerve(category, debug)
        self.target_nerve = HCNerve(ProductSimplicialCategory(self.cube, category), debug)

    def __call__(self, theta, simplex):
        objects = tuple(zip(theta, simplex.objects))
        values = tuple((c, (image_chain(theta, c), self.source_nerve.simplex_value(simplex, c)))
                       for c in free_chains(simplex.dimension))
        return HCSimplex(objects, values)

    def simplices(self, k):
        return [(theta, F) for theta in monotone_maps(k, self.n)
                for F in hc_nerve_simplices(self.category, k)]

    def check(self):
        """
        Images are valid hc-simplices and the map commutes with faces and
        degeneracies up to the dimension bound
        """
        failure = None
        checked = 0
        top = self.category.top_level
        for k in range(self.dimension + 1):
            if top is not None and k - 1 > top:
                break
            for theta, F in self.simplices(k):
                checked += 1
                image = self(theta, F)
                if not self.target_nerve.is_valid(image):
                    failure = {"invalid image": image, "theta": list(theta)}
                for m in range(k + 1):
                    if failure:
                        break
                    if k >= 1:
                        face = self(theta[:m] + theta[m + 1:], self.source_nerve.face(m, F))
                        if face != self.target_nerve.face(m, image):
                            failure = {"face": m, "theta": list(theta), "simplex": F}
                    if top is None or k <= top:
                        degenerate = self(theta[:m + 1] + theta[m:], self.source_nerve.degeneracy(m, F))
                        if degenerate != self.target_nerve.degeneracy(m, image):
                            failure = {"degeneracy": m, "theta": list(theta), "simplex": F}
                if failure:
                    return CheckResult(f"unit for n={self.n} is simplicial", False, witness=failure)
        return CheckResult(f"unit for n={self.n} is simplicial", True, detail=f"{checked} simplices")

    def check_naturality(self, functor, other):
        """
        functor: C -> C' with other the unit for C'; (id x G) o unit_C = unit_C' o (id x G)
        """
        for k in range(self.dimension + 1):
            if self.category.top_level is not None and k - 1 > self.category.top_level:
                break
            for theta, F in self.simplices(k):
                image = self(theta, F)
                left = HCSimplex(tuple((a, functor.on_object(b)) for a, b in image.objects),
                                 tuple((c, (v[0], functor.on_morphism(v[1]))) for c, v in image.values))
                right = other(theta, functor.on_simplex(F))
                if left != right:
                    return CheckResult("unit naturality", False, witness={"theta": list(theta), "simplex": F})
        return CheckResult("unit naturality", True)


def adjunction_unit(n, category, dimension=MAX_UNIT_DIMENSION, debug=False):
    return AdjunctionUnit(n, category, dimension, debug)


def product_nerve_comparison(category, dimension=MAX_UNIT_DIMENSION):
    """
    For the constant simplicial category on C, the unit at n = 1 against the
    nerve of [1] x C

    Each image is translated into a chain of [1] x C: arrow t pairs the
    c[1]-value of the edge chain {t-1, t} with the C-value of the same chain.
    The translation must be a bijection onto N([1] x C) in every dimension.
    """
    discrete = LevelwiseSimplicialCategory.discrete(category, max(dimension, 1))
    unit = AdjunctionUnit(1, discrete, dimension)
    interval = FiniteCategory.linear_order(1)
    product = interval.product(category)
    ordinary = CategoryNerve(product, dimension)
    for k in range(dimension + 1):
        translated = set()
        for theta, F in unit.simplices(k):
            image = unit(theta, F)
            arrows = []
            for t in range(1, k + 1):
                first, second = image.objects[t - 1][0], image.objects[t][0]
                step = interval.identity(first) if first == second else interval.arrow(f"{first}<{second}")
                value = unit.target_nerve.simplex_value(image, ((t - 1, t),))[1]
                arrows.append(product.arrow(f"({step.name},{value.arrow.name})"))
            translated.add((image.objects[0], tuple(arrows)))
        expected = set(ordinary.level(k))
        if translated != expected or len(translated) != len(unit.simplices(k)):
            return CheckResult("unit against N([1] x C)", False,
                               witness={"dimension": k, "images": len(translated), "nerve": len(expected)})
    return CheckResult("unit against N([1] x C)", True, detail=f"up to dimension {dimension}")
