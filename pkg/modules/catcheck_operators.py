#!/usr/bin/env python3
"""
CatCheck Operators

The skeleton of finite pointed sets, categories of operators over a strict
symmetric monoidal category, set operads (Comm, Assoc) and their operator
categories.

Conventions:
    * [n]_+ = {*, 1, ..., n}; the basepoint * is stored as 0 and a pointed
      map keeps its values on 1..n in ``table`` (table[i-1] is the image of i).
    * Preimages are tensored in increasing index order.
    * Operator morphisms store component k at index k-1.
"""

import itertools
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from math import prod
from typing import Any, Tuple

from catcheck_monoidal import ComputableCategory
from catcheck_utils import (
    CheckResult,
    ArityBoundError,
    CatCheckError,
    CompositionError,
    DimensionBoundError,
    PreconditionError,
    ShapeError,
    DEFAULT_ARITY_BOUND,
    DEFAULT_SEED,
    HOM_ENUMERATION_LIMIT,
    debug_print,
    to_jsonable,
)

# Fiber hom-sets the Segal check is willing to enumerate
SEGAL_HOM_LIMIT = 1 << 8

# Composable triples the associativity audit is willing to compose
ASSOCIATIVITY_TRIPLE_LIMIT = 1 << 12

# Comm^(x) composition is compared with Fin_* on pairs up to this arity
FIN_STAR_COMPOSITION_ARITY = 3


# ===================================
# Finite pointed sets
# ===================================

@dataclass(frozen=True)
class PointedMap:
    """A basepoint-preserving map [source]_+ -> [target]_+"""
    source: int
    target: int
    table: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if self.source < 0 or self.target < 0:
            raise ShapeError(f"pointed set sizes must be non-negative: {self.source}, {self.target}")
        if len(self.table) != self.source:
            raise ShapeError(f"table {list(self.table)} does not cover [{self.source}]_+")
        for value in self.table:
            if not 0 <= value <= self.target:
                raise ShapeError(f"table value {value} outside [{self.target}]_+")

    def __call__(self, i):
        return 0 if i == 0 else self.table[i - 1]

    def preimage(self, j):
        """Sorted preimage of j (j = 0 gives the collapsed points)"""
        return tuple(i for i in range(1, self.source + 1) if self.table[i - 1] == j)

    def is_inert(self):
        return all(len(self.preimage(j)) == 1 for j in range(1, self.target + 1))

    def is_active(self):
        return all(v != 0 for v in self.table)

    def is_identity(self):
        return self.source == self.target and self.table == tuple(range(1, self.source + 1))

    def to_json(self):
        return {"from": self.source, "to": self.target, "table": list(self.table)}

    def __repr__(self):
        values = ",".join("*" if v == 0 else str(v) for v in self.table)
        return f"<[{self.source}]+ -> [{self.target}]+ : ({values})>"


def identity_map(n):
    return PointedMap(n, n, tuple(range(1, n + 1)))


def fold_map(m):
    """The active map [m]_+ -> [1]_+"""
    return PointedMap(m, 1, (1,) * m)


def inert_projection(n, i):
    """rho^i: [n]_+ -> [1]_+ keeping only i"""
    return PointedMap(n, 1, tuple(1 if k == i else 0 for k in range(1, n + 1)))


def compose_pointed(beta, alpha):
    """beta after alpha"""
    if alpha.target != beta.source:
        raise CompositionError(f"cannot compose {beta!r} after {alpha!r}")
    return PointedMap(alpha.source, beta.target, tuple(beta(v) for v in alpha.table))


def enumerate_pointed_maps(m, n):
    for table in itertools.product(range(n + 1), repeat=m):
        yield PointedMap(m, n, table)


def count_pointed_maps(m, n):
    """Number of pointed maps [m]_+ -> [n]_+, by enumeration"""
    return sum(1 for _ in enumerate_pointed_maps(m, n))


def check_pointed_map_counts(bound):
    """Enumerated hom-set sizes against (n+1)^m for all m, n <= bound"""
    for m in range(bound + 1):
        for n in range(bound + 1):
            counted = count_pointed_maps(m, n)
            if counted != (n + 1) ** m:
                return CheckResult("pointed map counts", False,
                                   witness={"m": m, "n": n, "counted": counted, "expected": (n + 1) ** m})
    return CheckResult("pointed map counts", True, detail=f"m, n <= {bound}")


def inert_active_factorize(alpha):
    """
    Factor alpha as active after inert

    The middle object is the set of points not sent to *, reindexed in
    increasing order.

    Returns:
        tuple: (inert, active)
    """
    kept = [i for i in range(1, alpha.source + 1) if alpha(i) != 0]
    position = {i: p + 1 for p, i in enumerate(kept)}
    inert = PointedMap(alpha.source, len(kept),
                       tuple(position.get(i, 0) for i in range(1, alpha.source + 1)))
    active = PointedMap(len(kept), alpha.target, tuple(alpha(i) for i in kept))
    return inert, active


def check_factorizations(bound):
    """Exhaustive inert/active factorization check for m, n <= bound"""
    count = 0
    for m in range(bound + 1):
        for n in range(bound + 1):
            for alpha in enumerate_pointed_maps(m, n):
                inert, active = inert_active_factorize(alpha)
                count += 1
                if not (inert.is_inert() and active.is_active()
                        and compose_pointed(active, inert) == alpha):
                    return CheckResult("inert-active factorization", False,
                                       witness={"alpha": alpha, "inert": inert, "active": active})
    return CheckResult("inert-active factorization", True, detail=f"{count} maps")


class PointedSetCategory(ComputableCategory):
    """The skeleton Fin_* up to a size bound"""

    name = "Fin_*"

    def __init__(self, bound=DEFAULT_ARITY_BOUND):
        self.bound = bound

    def identity(self, obj):
        return identity_map(obj)

    def compose(self, g, f):
        return compose_pointed(g, f)

    def domain(self, f):
        return f.source

    def codomain(self, f):
        return f.target

    def objects(self):
        return list(range(self.bound + 1))

    def hom(self, a, b):
        return list(enumerate_pointed_maps(a, b))


def _block_order(beta, alpha, k):
    """
    Bookkeeping for the component over k of beta after alpha

    Returns:
        tuple: (blocks, concat, order) where blocks is the sorted preimage of k
        under beta, concat lists the points of (beta alpha)^-1(k) block by
        block, and order[t] is the sorted position of concat[t]
    """
    blocks = beta.preimage(k)
    concat = [i for j in blocks for i in alpha.preimage(j)]
    ranks = {i: r for r, i in enumerate(sorted(concat))}
    return blocks, concat, tuple(ranks[i] for i in concat)


# ===================================
# Categories of operators
# ===================================

@dataclass(frozen=True)
class OperatorMorphism:
    """A morphism (alpha, {f_j}) of a category of operators"""
    alpha: PointedMap
    source: tuple
    target: tuple
    components: tuple

    def to_json(self):
        return {"alpha": list(self.alpha.table), "components": to_jsonable(list(self.components))}


class OperatorCategory(ComputableCategory):
    """
    The category of operators of a strict symmetric monoidal category

    Objects are tuples of base objects (a tuple of length n lies over
    [n]_+); a morphism over alpha has one base component
    (x)_{i in alpha^-1(j)} X_i -> Y_j for each j.
    """

    def __init__(self, base, debug=False):
        self.base = base
        self.debug = debug
        self._homs = {}

    @property
    def name(self):
        return f"{self.base.name}^(x)"

    def domain(self, f):
        return f.source

    def codomain(self, f):
        return f.target

    def fiber_source(self, alpha, source, j):
        return self.base.tensor_objects([source[i - 1] for i in alpha.preimage(j)])

    def morphism(self, alpha, source, target, components):
        """
        Build and shape-check an operator morphism

        Raises:
            ShapeError: names the first bad component
        """
        source, target, components = tuple(source), tuple(target), tuple(components)
        if len(source) != alpha.source or len(target) != alpha.target:
            raise ShapeError(f"tuples of length {len(source)}, {len(target)} do not lie over {alpha!r}")
        if len(components) != alpha.target:
            raise ShapeError(f"{len(components)} components for {alpha.target} target points")
        for j, component in enumerate(components, start=1):
            expected_source = self.fiber_source(alpha, source, j)
            if (self.base.domain(component) != expected_source
                    or self.base.codomain(component) != target[j - 1]):
                raise ShapeError(
                    f"component {j}: expected {expected_source!r} -> {target[j - 1]!r}, "
                    f"got {self.base.domain(component)!r} -> {self.base.codomain(component)!r}",
                    witness={"component": j})
        return OperatorMorphism(alpha, source, target, components)

    def identity(self, obj):
        obj = tuple(obj)
        return OperatorMorphism(identity_map(len(obj)), obj, obj,
                                tuple(self.base.identity(x) for x in obj))

    def compose(self, g, f):
        """
        g after f, componentwise h_k = g_k o (x)_{j in beta^-1(k)} f_j o pi_k

        pi_k reorders the factors of (beta alpha)^-1(k) from increasing order
        into block order.
        """
        if f.alpha.target != g.alpha.source or f.target != g.source:
            raise CompositionError(f"cannot compose {g!r} after {f!r}: target tuple "
                                   f"{f.target!r} != source tuple {g.source!r}")
        alpha, beta = f.alpha, g.alpha
        components = []
        for k in range(1, beta.target + 1):
            blocks, concat, order = _block_order(beta, alpha, k)
            sorted_objects = [f.source[i - 1] for i in sorted(concat)]
            try:
                pi = self.base.shuffle(sorted_objects, order)
                middle = self.base.tensor_morphisms([f.components[j - 1] for j in blocks])
                components.append(self.base.compose_all(g.components[k - 1], middle, pi))
            except CatCheckError as e:
                raise ShapeError(f"component {k}: {e}", witness={"component": k}) from e
        return OperatorMorphism(compose_pointed(beta, alpha), f.source, g.target, tuple(components))

    def morphisms_equal(self, f, g):
        return (f.alpha == g.alpha and f.source == g.source and f.target == g.target
                and all(self.base.morphisms_equal(a, b) for a, b in zip(f.components, g.components)))

    def pushforward(self, alpha, source):
        """alpha_!(X) = ((x)_{i in alpha^-1(j)} X_i)_j; empty preimages give the unit"""
        source = tuple(source)
        if len(source) != alpha.source:
            raise ShapeError(f"tuple of length {len(source)} does not lie over [{alpha.source}]_+")
        return tuple(self.fiber_source(alpha, source, j) for j in range(1, alpha.target + 1))

    def cocartesian_lift(self, alpha, source):
        target = self.pushforward(alpha, source)
        return OperatorMorphism(alpha, tuple(source), target,
                                tuple(self.base.identity(y) for y in target))

    def factor_through_lift(self, morphism, alpha, beta=None):
        """
        The unique G over beta with G o lift(alpha) = morphism

        Args:
            morphism (OperatorMorphism): lies over beta o alpha
            alpha (PointedMap): the map whose cocartesian lift is factored out
            beta (PointedMap): defaults to the identity of alpha's target

        Returns:
            OperatorMorphism
        """
        beta = beta if beta is not None else identity_map(alpha.target)
        if compose_pointed(beta, alpha) != morphism.alpha:
            raise PreconditionError(f"{morphism.alpha!r} is not {beta!r} after {alpha!r}")
        middle = self.pushforward(alpha, morphism.source)
        components = []
        for k in range(1, beta.target + 1):
            blocks, concat, order = _block_order(beta, alpha, k)
            inverse = [0] * len(order)
            for t, position in enumerate(order):
                inverse[position] = t
            block_objects = [morphism.source[i - 1] for i in concat]
            undo = self.base.shuffle(block_objects, inverse)
            components.append(self.base.compose(morphism.components[k - 1], undo))
        factor = OperatorMorphism(beta, middle, morphism.target, tuple(components))
        if not self.morphisms_equal(self.compose(factor, self.cocartesian_lift(alpha, morphism.source)), morphism):
            raise CatCheckError(f"factorization through the lift of {alpha!r} failed",
                                witness={"morphism": morphism})
        return factor

    def _base_hom(self, a, b, limit, spanning=False):
        key = (a, b, spanning)
        if key not in self._homs:
            enumerate_hom = self.base.spanning_hom if spanning else self.base.hom
            self._homs[key] = enumerate_hom(a, b, limit=limit)
        elif len(self._homs[key]) > limit:
            raise DimensionBoundError(f"hom({a!r}, {b!r}) has {len(self._homs[key])} elements")
        return self._homs[key]

    def hom_over(self, alpha, source, target, limit=HOM_ENUMERATION_LIMIT, spanning=False):
        """
        Every morphism over alpha from source to target

        With spanning, components run over a spanning set of each base
        hom-set instead.
        """
        source, target = tuple(source), tuple(target)
        choices = [self._base_hom(self.fiber_source(alpha, source, j), target[j - 1], limit, spanning)
                   for j in range(1, alpha.target + 1)]
        total = prod(len(c) for c in choices)
        if total > limit:
            raise DimensionBoundError(f"{total} morphisms over {alpha!r} exceed the enumeration limit")
        return [OperatorMorphism(alpha, source, target, components)
                for components in itertools.product(*choices)]

    def morphisms_out(self, source, arity_bound, population, spanning=False, limit=HOM_ENUMERATION_LIMIT):
        """Every morphism out of source into a tuple of length <= arity_bound over population"""
        source = tuple(source)
        morphisms = []
        for n in range(arity_bound + 1):
            for alpha in enumerate_pointed_maps(len(source), n):
                for target in itertools.product(population, repeat=n):
                    morphisms.extend(self.hom_over(alpha, source, target, limit, spanning))
        return morphisms

    def count_composable_triples(self, arity_bound, population, spanning=False):
        """
        Number of composable triples h, g, f between tuples of length
        <= arity_bound over population, from hom-set sizes alone
        """
        objects = [x for n in range(arity_bound + 1) for x in itertools.product(population, repeat=n)]
        counts = {}
        for x in objects:
            for y in objects:
                counts[(x, y)] = sum(
                    prod(len(self._base_hom(self.fiber_source(alpha, x, j), y[j - 1], ASSOCIATIVITY_TRIPLE_LIMIT,
                                            spanning))
                         for j in range(1, len(y) + 1))
                    for alpha in enumerate_pointed_maps(len(x), len(y)))
        # paths of length three in the weighted graph of objects
        paths = {x: 1 for x in objects}
        for _ in range(3):
            paths = {y: sum(paths[x] * counts[(x, y)] for x in objects) for y in objects}
        return sum(paths.values())

    def check_cocartesian(self, alpha, source, beta, target, limit=HOM_ENUMERATION_LIMIT):
        """
        Set-level cocartesian criterion for lift(alpha)

        Precomposition with the lift must be a bijection from morphisms over
        beta out of alpha_!(source) to morphisms over beta o alpha out of source.
        """
        lift = self.cocartesian_lift(alpha, source)
        over_beta = self.hom_over(beta, lift.target, target, limit)
        over_composite = self.hom_over(compose_pointed(beta, alpha), source, target, limit)
        images = {}
        for g in over_beta:
            key = self._key(self.compose(g, lift))
            if key in images:
                return CheckResult("cocartesian lift", False,
                                   witness={"alpha": alpha, "collision": [images[key], g]})
            images[key] = g
        missing = [h for h in over_composite if self._key(h) not in images]
        if missing:
            return CheckResult("cocartesian lift", False, witness={"alpha": alpha, "not hit": missing[0]})
        return CheckResult("cocartesian lift", True,
                           detail=f"{len(over_beta)} morphisms over {list(beta.table)}")

    def _key(self, f):
        return (f.alpha, f.source, f.target, tuple(f.components))

    def induced_component(self, f, n, i):
        """rho^i_!(f) for a fiber morphism f over id_[n], as a morphism over id_[1]"""
        rho = inert_projection(n, i)
        pushed = self.compose(self.cocartesian_lift(rho, f.target), f)
        return self.factor_through_lift(pushed, rho, identity_map(1))

    def segal_check(self, n, population, seed=DEFAULT_SEED, max_pairs=16, limit=SEGAL_HOM_LIMIT):
        """
        Segal condition over [n]_+ on a population of base objects

        Fiber hom-sets larger than limit are skipped; the hom-set check is
        refused when every sampled pair was skipped.

        Returns:
            list: CheckResult for objects and for fiber hom-sets
        """
        population = list(population)
        fiber = list(itertools.product(population, repeat=n))
        images = {tuple(self.pushforward(inert_projection(n, i), x) for i in range(1, n + 1)) for x in fiber}
        expected = {tuple((y,) for y in x) for x in fiber}
        results = [CheckResult(f"segal objects n={n}", images == expected and len(images) == len(fiber),
                               witness=None if images == expected else {"n": n},
                               detail=f"{len(fiber)} objects")]
        pairs = list(itertools.product(fiber, repeat=2))
        if len(pairs) > max_pairs:
            # the constant pair on the first object is always kept
            pairs = pairs[:1] + random.Random(seed).sample(pairs[1:], max_pairs - 1)
        identity_n = identity_map(n)
        skipped = 0
        for x, y in pairs:
            try:
                morphisms = self.hom_over(identity_n, x, y, limit)
            except DimensionBoundError:
                skipped += 1
                continue
            seen = {}
            for f in morphisms:
                key = tuple(self.induced_component(f, n, i).components[0] for i in range(1, n + 1))
                if key in seen:
                    results.append(CheckResult(f"segal homs n={n}", False,
                                               witness={"source": x, "target": y, "collision": [seen[key], f]}))
                    return results
                seen[key] = f
            expected_count = prod(len(self.base.hom(a, b)) for a, b in zip(x, y))
            if len(seen) != expected_count:
                results.append(CheckResult(f"segal homs n={n}", False,
                                           witness={"source": x, "target": y,
                                                    "image": len(seen), "product": expected_count}))
                return results
            debug_print(self.debug, f"segal n={n}: {len(seen)} morphisms between {x} and {y}")
        if skipped == len(pairs):
            results.append(CheckResult(f"segal homs n={n}", False, refused=True,
                                       witness={"skipped": skipped, "limit": limit},
                                       detail=f"all {skipped} pairs beyond enumeration"))
        else:
            results.append(CheckResult(f"segal homs n={n}", True,
                                       detail=f"{len(pairs) - skipped} pairs, {skipped} beyond enumeration"))
        return results

    def audit_associativity(self, arity_bound, population, spanning=False, limit=ASSOCIATIVITY_TRIPLE_LIMIT):
        """
        Associativity on every composable triple with arities <= arity_bound

        Composition is multilinear in the components, so with spanning the
        triples whose components come from spanning sets decide all of them.

        Raises:
            DimensionBoundError: more than limit triples
        """
        population = list(population)
        total = self.count_composable_triples(arity_bound, population, spanning)
        if total > limit:
            raise DimensionBoundError(f"{total} composable triples with arities <= {arity_bound} exceed {limit}",
                                      witness={"triples": total, "limit": limit})
        out = {}

        def morphisms_out(x):
            if x not in out:
                out[x] = self.morphisms_out(x, arity_bound, population, spanning)
            return out[x]

        checked = 0
        sources = [x for n in range(arity_bound + 1) for x in itertools.product(population, repeat=n)]
        for x in sources:
            for f in morphisms_out(x):
                for g in morphisms_out(f.target):
                    gf = self.compose(g, f)
                    for h in morphisms_out(g.target):
                        checked += 1
                        if not self.morphisms_equal(self.compose(h, gf), self.compose(self.compose(h, g), f)):
                            return CheckResult("operator composition associativity", False,
                                               witness={"f": f, "g": g, "h": h})
        kind = "spanning " if spanning else ""
        debug_print(self.debug, f"associativity: {checked} {kind}triples over {population}")
        return CheckResult("operator composition associativity", True,
                           detail=f"{checked} {kind}triples, arities <= {arity_bound} over {len(population)} objects")

    def largest_auditable_arity(self, arity_bound, population, spanning=False, limit=ASSOCIATIVITY_TRIPLE_LIMIT):
        """Largest arity <= arity_bound whose composable triples fit the limit, or None"""
        best = None
        for n in range(1, arity_bound + 1):
            try:
                if self.count_composable_triples(n, population, spanning) > limit:
                    break
            except DimensionBoundError:
                break
            best = n
        return best


# ===================================
# Set operads
# ===================================

class SetOperad(ABC):
    """A symmetric operad in sets, stored up to an arity bound"""

    name = "O"

    def __init__(self, arity_bound=DEFAULT_ARITY_BOUND):
        self.arity_bound = arity_bound

    def _check_arity(self, n):
        if n > self.arity_bound:
            raise ArityBoundError(f"{self.name}: arity {n} exceeds the bound {self.arity_bound}",
                                  witness={"arity": n})

    @abstractmethod
    def operations(self, n):
        """O(n) as a list"""

    @abstractmethod
    def unit(self):
        pass

    @abstractmethod
    def arity(self, op):
        pass

    @abstractmethod
    def compose(self, op, inputs):
        """gamma(op; inputs)"""

    @abstractmethod
    def relabel(self, op, perm):
        """Right action of a permutation of the inputs"""

    @abstractmethod
    def structure_map(self, algebra, op):
        """The morphism carrier^(x)n -> carrier realizing op on an algebra"""

    def render(self, op):
        return op

    def input_tuples(self, count, budget):
        """Every tuple of count operations whose arities sum to at most budget"""
        if count == 0:
            yield ()
            return
        for n in range(budget + 1):
            for op in self.operations(n):
                for rest in self.input_tuples(count - 1, budget - n):
                    yield (op,) + rest

    def check_laws(self, arity_bound=None):
        """
        Unit, associativity and both equivariance laws on every composable
        tuple whose arities stay within arity_bound (the operad's bound by
        default)

        Returns:
            list: CheckResult per law
        """
        N = self.arity_bound if arity_bound is None else min(arity_bound, self.arity_bound)
        unit = self.unit()
        unit_witness = None
        for n in range(N + 1):
            for op in self.operations(n):
                if self.compose(unit, [op]) != op or self.compose(op, [unit] * n) != op:
                    unit_witness = {"op": self.render(op)}
                    break
            if unit_witness:
                break

        assoc_witness = top_witness = bottom_witness = None
        triples = pairs = 0
        for k in range(N + 1):
            for rho in self.operations(k):
                for sigma in self.input_tuples(k, N):
                    arities = [self.arity(s) for s in sigma]
                    offsets = _offsets(arities)
                    inner = self.compose(rho, list(sigma))
                    pairs += 1

                    # associativity
                    for tau in self.input_tuples(sum(arities), N):
                        triples += 1
                        grouped = [self.compose(s, list(tau[offsets[a]:offsets[a] + arities[a]]))
                                   for a, s in enumerate(sigma)]
                        if assoc_witness is None and self.compose(inner, list(tau)) != self.compose(rho, grouped):
                            assoc_witness = {"rho": self.render(rho), "sigma": [self.render(s) for s in sigma],
                                             "tau": [self.render(t) for t in tau]}

                    # equivariance in the top operation
                    for pi in itertools.permutations(range(k)):
                        permuted = [sigma[pi[b]] for b in range(k)]
                        big = tuple(offsets[pi[b]] + s for b in range(k) for s in range(arities[pi[b]]))
                        lhs = self.compose(self.relabel(rho, pi), list(sigma))
                        rhs = self.relabel(self.compose(rho, permuted), big)
                        if top_witness is None and lhs != rhs:
                            top_witness = {"rho": self.render(rho), "perm": list(pi)}

                    # equivariance in the inputs
                    for perms in itertools.product(*(itertools.permutations(range(n)) for n in arities)):
                        block_sum = tuple(offsets[a] + perms[a][s] for a in range(k) for s in range(arities[a]))
                        lhs = self.compose(rho, [self.relabel(s, p) for s, p in zip(sigma, perms)])
                        rhs = self.relabel(inner, block_sum)
                        if bottom_witness is None and lhs != rhs:
                            bottom_witness = {"rho": self.render(rho), "perms": [list(p) for p in perms]}

        return [
            CheckResult(f"{self.name} unit", unit_witness is None, witness=unit_witness),
            CheckResult(f"{self.name} associativity", assoc_witness is None, witness=assoc_witness,
                        detail=f"{triples} composable triples, arity <= {N}"),
            CheckResult(f"{self.name} top equivariance", top_witness is None, witness=top_witness,
                        detail=f"{pairs} composable pairs"),
            CheckResult(f"{self.name} input equivariance", bottom_witness is None, witness=bottom_witness),
        ]


def _offsets(arities):
    offsets, running = [], 0
    for n in arities:
        offsets.append(running)
        running += n
    return offsets


def iterated_product(algebra, n):
    """Left-nested n-fold multiplication; n = 0 is the unit, n = 1 the identity"""
    category = algebra.category
    if n == 0:
        return algebra.eta
    result = category.identity(algebra.carrier)
    for _ in range(n - 1):
        result = category.compose(algebra.mu, category.tensor_mor(result, category.identity(algebra.carrier)))
    return result


class CommOperad(SetOperad):
    """One operation in each arity; an operation is its arity"""

    name = "Comm"

    def operations(self, n):
        self._check_arity(n)
        return [n]

    def unit(self):
        return 1

    def arity(self, op):
        return op

    def compose(self, op, inputs):
        if len(inputs) != op:
            raise ShapeError(f"Comm: {len(inputs)} inputs for an operation of arity {op}")
        total = sum(inputs)
        self._check_arity(total)
        return total

    def relabel(self, op, perm):
        return op

    def structure_map(self, algebra, op):
        return iterated_product(algebra, op)


class AssocOperad(SetOperad):
    """
    Linear orders: an operation of arity n is a permutation tuple, read as
    "multiply input op[0], then op[1], ..."
    """

    name = "Assoc"

    def operations(self, n):
        self._check_arity(n)
        return list(itertools.permutations(range(n)))

    def unit(self):
        return (0,)

    def arity(self, op):
        return len(op)

    def compose(self, op, inputs):
        if len(inputs) != len(op):
            raise ShapeError(f"Assoc: {len(inputs)} inputs for an operation of arity {len(op)}")
        offsets = _offsets([len(s) for s in inputs])
        result = tuple(offsets[a] + s for a in op for s in inputs[a])
        self._check_arity(len(result))
        return result

    def relabel(self, op, perm):
        return tuple(perm[a] for a in op)

    def render(self, op):
        return list(op)

    def structure_map(self, algebra, op):
        category = algebra.category
        n = len(op)
        shuffle = category.shuffle([algebra.carrier] * n, op)
        return category.compose(iterated_product(algebra, n), shuffle)


# ===================================
# Operator categories of operads
# ===================================

@dataclass(frozen=True)
class OperadOperatorMorphism:
    """(alpha, {op_j}) with op_j an operation on the preimage of j"""
    alpha: PointedMap
    ops: Tuple[Any, ...]

    def to_json(self):
        return {"alpha": list(self.alpha.table), "ops": [list(o) if isinstance(o, tuple) else o for o in self.ops]}


class OperadOperatorCategory(ComputableCategory):
    """
    O^(x): objects are arities, hom([m]_+, [n]_+) is the disjoint union over
    alpha of the products of O(|alpha^-1(j)|)
    """

    def __init__(self, operad):
        self.operad = operad

    @property
    def name(self):
        return f"{self.operad.name}^(x)"

    def morphism(self, alpha, ops):
        ops = tuple(ops)
        if len(ops) != alpha.target:
            raise ShapeError(f"{len(ops)} operations for {alpha.target} target points")
        for j, op in enumerate(ops, start=1):
            size = len(alpha.preimage(j))
            self.operad._check_arity(size)
            if self.operad.arity(op) != size:
                raise ShapeError(f"component {j}: operation of arity {self.operad.arity(op)} "
                                 f"on a preimage of size {size}", witness={"component": j})
        return OperadOperatorMorphism(alpha, ops)

    def lift(self, alpha):
        """alpha with identity orderings; over an inert alpha this is the cocartesian lift"""
        ops = []
        for j in range(1, alpha.target + 1):
            size = len(alpha.preimage(j))
            ops.append(self._identity_op(size))
        return self.morphism(alpha, ops)

    def _identity_op(self, size):
        if isinstance(self.operad, AssocOperad):
            self.operad._check_arity(size)
            return tuple(range(size))
        return self.operad.operations(size)[0]

    def identity(self, obj):
        return OperadOperatorMorphism(identity_map(obj), (self.operad.unit(),) * obj)

    def domain(self, f):
        return f.alpha.source

    def codomain(self, f):
        return f.alpha.target

    def compose(self, g, f):
        """h_k = gamma(g_k; f_j for j in beta^-1(k)) relabelled into increasing order"""
        if f.alpha.target != g.alpha.source:
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        ops = []
        for k in range(1, g.alpha.target + 1):
            blocks, concat, order = _block_order(g.alpha, f.alpha, k)
            composite = self.operad.compose(g.ops[k - 1], [f.ops[j - 1] for j in blocks])
            ops.append(self.operad.relabel(composite, order))
        return OperadOperatorMorphism(compose_pointed(g.alpha, f.alpha), tuple(ops))

    def objects(self):
        return list(range(self.operad.arity_bound + 1))

    def hom(self, m, n):
        morphisms = []
        for alpha in enumerate_pointed_maps(m, n):
            choices = [self.operad.operations(len(alpha.preimage(j))) for j in range(1, n + 1)]
            for ops in itertools.product(*choices):
                morphisms.append(OperadOperatorMorphism(alpha, tuple(ops)))
        return morphisms

    def hom_over(self, alpha):
        choices = [self.operad.operations(len(alpha.preimage(j))) for j in range(1, alpha.target + 1)]
        return [OperadOperatorMorphism(alpha, tuple(ops)) for ops in itertools.product(*choices)]

    def projection(self, f):
        return f.alpha

    def composable_pairs(self, arity_bound, seed=DEFAULT_SEED, samples=None):
        """All composable pairs with arities <= arity_bound, or a seeded sample of them"""
        pairs = []
        objects = range(arity_bound + 1)
        for m, n, k in itertools.product(objects, repeat=3):
            for f in self.hom(m, n):
                for g in self.hom(n, k):
                    pairs.append((f, g))
        if samples is not None and len(pairs) > samples:
            pairs = random.Random(seed).sample(pairs, samples)
        return pairs

    def check_laws(self, arity_bound):
        """Unit laws on every morphism and associativity on every composable triple up to arity_bound"""
        objects = range(arity_bound + 1)
        homs = {(m, n): self.hom(m, n) for m in objects for n in objects}
        for (m, n), morphisms in homs.items():
            for f in morphisms:
                if self.compose(self.identity(n), f) != f or self.compose(f, self.identity(m)) != f:
                    return CheckResult(f"{self.name} category laws", False, witness={"unit": f})
        triples = 0
        for m, n, k in itertools.product(objects, repeat=3):
            for f in homs[(m, n)]:
                for g in homs[(n, k)]:
                    gf = self.compose(g, f)
                    for l in objects:
                        for h in homs[(k, l)]:
                            triples += 1
                            if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                                return CheckResult(f"{self.name} category laws", False,
                                                   witness={"f": f, "g": g, "h": h})
        return CheckResult(f"{self.name} category laws", True,
                           detail=f"{triples} composable triples, arity <= {arity_bound}")


def operad_operator_category(operad):
    return OperadOperatorCategory(operad)


def check_comm_is_fin_star(bound):
    """
    Comm^(x) against Fin_* on the skeleton up to bound

    The projection must be bijective on every hom-set up to bound and
    preserve composition on every composable pair up to
    FIN_STAR_COMPOSITION_ARITY.
    """
    category = operad_operator_category(CommOperad(bound))
    for m in range(bound + 1):
        for n in range(bound + 1):
            morphisms = category.hom(m, n)
            alphas = {category.projection(f) for f in morphisms}
            if len(morphisms) != count_pointed_maps(m, n) or len(alphas) != len(morphisms):
                return CheckResult("Comm^(x) = Fin_*", False,
                                   witness={"m": m, "n": n, "morphisms": len(morphisms),
                                            "pointed maps": count_pointed_maps(m, n)})
    composition_bound = min(bound, FIN_STAR_COMPOSITION_ARITY)
    pairs = category.composable_pairs(composition_bound)
    for f, g in pairs:
        if category.projection(category.compose(g, f)) != compose_pointed(g.alpha, f.alpha):
            return CheckResult("Comm^(x) = Fin_*", False, witness={"f": f, "g": g})
    return CheckResult("Comm^(x) = Fin_*", True,
                       detail=f"hom-sets up to [{bound}]_+, "
                              f"{len(pairs)} composable pairs up to [{composition_bound}]_+")
