#!/usr/bin/env python3
"""
CatCheck Algebra

Algebras, coalgebras, bialgebras and Hopf algebras in a computable strict
symmetric monoidal category, with the shear-map calculus.

Unitors are identities throughout: 1 (x) R and R (x) 1 are R itself, so maps
such as (epsilon (x) id) o sh^-1 o (id (x) eta) are taken as endomorphisms of R.
"""

import itertools
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List

from catcheck_monoidal import (
    FiniteSet,
    FiniteSetCategory,
    FunctionMorphism,
    MatrixCategory,
    OppositeCategory,
    ScalarRing,
    InvertibilityResult,
)
from catcheck_monoids import enumerate_monoids
from catcheck_operators import AssocOperad, CommOperad
from catcheck_utils import (
    CheckResult,
    CatCheckError,
    DimensionBoundError,
    InstanceMismatchError,
    NotAlgebraMapError,
    NotHopfError,
    PreconditionError,
    ShapeError,
    ShearDisagreementError,
    DEFAULT_ARITY_BOUND,
    DEFAULT_PRIME,
    all_passed,
    debug_print,
    first_failure,
    refused,
)


# ===================================
# Structures
# ===================================

@dataclass
class AlgebraStructure:
    """An algebra (R, mu, eta) in a strict symmetric monoidal category"""
    category: Any
    carrier: Any
    mu: Any
    eta: Any
    commutative: bool = False
    name: str = "R"

    def validate(self):
        """
        Raises:
            ShapeError: mu is not R(x)R -> R or eta is not 1 -> R
        """
        c = self.category
        double = c.tensor_obj(self.carrier, self.carrier)
        _require_shape(c, self.mu, double, self.carrier, f"{self.name}.mu")
        _require_shape(c, self.eta, c.unit(), self.carrier, f"{self.name}.eta")
        return self


@dataclass
class CoalgebraStructure:
    """A coalgebra (R, delta, epsilon); checked as an algebra in the opposite category"""
    category: Any
    carrier: Any
    delta: Any
    epsilon: Any
    cocommutative: bool = False
    name: str = "R"

    def as_opposite_algebra(self):
        return AlgebraStructure(OppositeCategory(self.category), self.carrier,
                                self.delta, self.epsilon, self.cocommutative, self.name)


@dataclass
class BialgebraPresentation:
    """One carrier with algebra and coalgebra structure and an optional antipode"""
    category: Any
    carrier: Any
    mu: Any
    eta: Any
    delta: Any
    epsilon: Any
    antipode: Any = None
    commutative: bool = False
    cocommutative: bool = False
    name: str = "B"

    def algebra(self):
        return AlgebraStructure(self.category, self.carrier, self.mu, self.eta,
                                self.commutative, self.name)

    def coalgebra(self):
        return CoalgebraStructure(self.category, self.carrier, self.delta, self.epsilon,
                                  self.cocommutative, self.name)


@dataclass
class HopfDecision:
    """Invertibility of both shear maps, with the inverse or witness of each"""
    hopf: bool
    right: InvertibilityResult
    left: InvertibilityResult

    @property
    def witness(self):
        return None if self.hopf else self.right.witness

    def to_result(self, name="hopf"):
        detail = "right and left shear invertible" if self.hopf else self.right.reason
        return CheckResult(name, self.hopf, witness=self.witness, detail=detail)


@dataclass
class CoproductCheck:
    """Outcome of the coproduct universal property check"""
    morphism: Any
    results: List[CheckResult] = field(default_factory=list)
    candidates: int = 0

    @property
    def passed(self):
        return all_passed(self.results)


def _require_shape(category, f, source, target, label):
    if category.domain(f) != source or category.codomain(f) != target:
        raise ShapeError(f"{label} has shape {category.domain(f)!r} -> {category.codomain(f)!r}, "
                         f"expected {source!r} -> {target!r}")


def _equality(category, name, left, right, detail=""):
    if category.morphisms_equal(left, right):
        return CheckResult(name, True, detail=detail)
    return CheckResult(name, False, witness={"left": left, "right": right}, detail=detail)


# ===================================
# Axiom checks
# ===================================

def check_algebra(algebra, names=None):
    """
    Associativity, both unit laws and, if flagged, commutativity

    Args:
        algebra (AlgebraStructure): structure to check
        names (dict): optional renaming of the check names

    Returns:
        list: CheckResult per axiom, with both composites as witness on failure
    """
    names = names or {}
    algebra.validate()
    c, R, mu, eta = algebra.category, algebra.carrier, algebra.mu, algebra.eta
    idR = c.identity(R)
    results = [
        _equality(c, names.get("associativity", "associativity"),
                  c.compose(mu, c.tensor_mor(mu, idR)), c.compose(mu, c.tensor_mor(idR, mu))),
        _equality(c, names.get("left unit", "left unit"), c.compose(mu, c.tensor_mor(eta, idR)), idR),
        _equality(c, names.get("right unit", "right unit"), c.compose(mu, c.tensor_mor(idR, eta)), idR),
    ]
    if algebra.commutative:
        results.append(_equality(c, names.get("commutativity", "commutativity"),
                                 c.compose(mu, c.braiding(R, R)), mu))
    return [replace(r, name=f"{algebra.name} {r.name}") for r in results]


def check_coalgebra(coalgebra):
    """Coassociativity and counit laws, run as algebra checks in the opposite category"""
    names = {"associativity": "coassociativity", "left unit": "left counit",
             "right unit": "right counit", "commutativity": "cocommutativity"}
    return check_algebra(coalgebra.as_opposite_algebra(), names)


def check_bialgebra(bialgebra):
    """
    Algebra, coalgebra and the four compatibility equalities

    delta o mu = (mu(x)mu) o (id(x)sigma(x)id) o (delta(x)delta),
    epsilon o mu = epsilon(x)epsilon, delta o eta = eta(x)eta and
    epsilon o eta = id_1.
    """
    c, R = bialgebra.category, bialgebra.carrier
    mu, eta, delta, eps = bialgebra.mu, bialgebra.eta, bialgebra.delta, bialgebra.epsilon
    results = check_algebra(bialgebra.algebra()) + check_coalgebra(bialgebra.coalgebra())
    idR = c.identity(R)
    middle = c.tensor_morphisms([idR, c.braiding(R, R), idR])
    results.extend([
        _equality(c, "comultiplication is multiplicative", c.compose(delta, mu),
                  c.compose_all(c.tensor_mor(mu, mu), middle, c.tensor_mor(delta, delta))),
        _equality(c, "counit is multiplicative", c.compose(eps, mu), c.tensor_mor(eps, eps)),
        _equality(c, "comultiplication is unital", c.compose(delta, eta), c.tensor_mor(eta, eta)),
        _equality(c, "counit is unital", c.compose(eps, eta), c.identity(c.unit())),
    ])
    return results


def require_bialgebra(bialgebra):
    """
    Raises:
        PreconditionError: the first failing bialgebra axiom, with its witness
    """
    failure = first_failure(check_bialgebra(bialgebra))
    if failure is not None:
        raise PreconditionError(f"{bialgebra.name} is not a bialgebra: {failure.name} fails",
                                witness=failure.witness)
    return bialgebra


def unit_bialgebra(category):
    one = category.identity(category.unit())
    return BialgebraPresentation(category, category.unit(), one, one, one, one,
                                 antipode=one, commutative=True, cocommutative=True, name="1")


def tensor_algebras(R, S):
    """
    Algebra structure on R (x) S

    mu = (mu_R (x) mu_S) o (id (x) sigma_{S,R} (x) id), eta = eta_R (x) eta_S.
    """
    if R.category != S.category:
        raise InstanceMismatchError(f"{R.name} and {S.name} live in different categories")
    c = R.category
    middle = c.tensor_morphisms([c.identity(R.carrier), c.braiding(S.carrier, R.carrier), c.identity(S.carrier)])
    mu = c.compose(c.tensor_mor(R.mu, S.mu), middle)
    eta = c.tensor_mor(R.eta, S.eta)
    return AlgebraStructure(c, c.tensor_obj(R.carrier, S.carrier), mu, eta,
                            R.commutative and S.commutative, f"{R.name}(x){S.name}")


def check_algebra_map(f, R, S):
    """
    Decide whether f: R -> S preserves multiplication and unit

    Returns:
        CheckResult: witness names the failing equation and both sides
    """
    c = R.category
    _require_shape(c, f, R.carrier, S.carrier, "algebra map")
    left = c.compose(f, R.mu)
    right = c.compose(S.mu, c.tensor_mor(f, f))
    if not c.morphisms_equal(left, right):
        return CheckResult("algebra map", False,
                           witness={"equation": "multiplication", "left": left, "right": right})
    if not c.morphisms_equal(c.compose(f, R.eta), S.eta):
        return CheckResult("algebra map", False,
                           witness={"equation": "unit", "left": c.compose(f, R.eta), "right": S.eta})
    return CheckResult("algebra map", True)


def coproduct_universal_check(R, S, T, f, g, debug=False):
    """
    The coproduct property of R (x) S among commutative algebras

    h = mu_T o (f (x) g) is the candidate; uniqueness is decided by searching
    the whole hom-set for other algebra maps with the same restrictions.

    Raises:
        PreconditionError: an algebra is not commutative
        NotAlgebraMapError: f or g is not an algebra map

    Returns:
        CoproductCheck
    """
    for algebra in (R, S, T):
        failure = first_failure(check_algebra(replace(algebra, commutative=True)))
        if failure is not None:
            raise PreconditionError(f"{algebra.name} is not a commutative algebra: {failure.name}",
                                    witness=failure.witness)
    for label, m, source in (("f", f, R), ("g", g, S)):
        decision = check_algebra_map(m, source, T)
        if not decision.passed:
            raise NotAlgebraMapError(f"{label} is not an algebra map", witness=decision.witness)

    c = R.category
    RS = tensor_algebras(R, S)
    h = c.compose(T.mu, c.tensor_mor(f, g))
    insert_R = c.tensor_mor(c.identity(R.carrier), S.eta)
    insert_S = c.tensor_mor(R.eta, c.identity(S.carrier))
    check = CoproductCheck(h)
    check.results.append(replace(check_algebra_map(h, RS, T), name="induced map is an algebra map"))
    check.results.append(_equality(c, "restriction to R", c.compose(h, insert_R), f))
    check.results.append(_equality(c, "restriction to S", c.compose(h, insert_S), g))
    try:
        restricted, searched = c.precomposition_solutions(RS.carrier, T.carrier, [(insert_R, f), (insert_S, g)])
    except (DimensionBoundError, PreconditionError, NotImplementedError) as e:
        check.results.append(refused("uniqueness", e))
        return check
    matching = [k for k in restricted if check_algebra_map(k, RS, T).passed]
    check.candidates = searched
    debug_print(debug, f"coproduct: {searched} candidates, {len(restricted)} restrict correctly, "
                       f"{len(matching)} algebra maps")
    unique = len(matching) == 1 and c.morphisms_equal(matching[0], h)
    check.results.append(CheckResult("uniqueness", unique,
                                     witness=None if unique else {"factorizations": matching},
                                     detail=f"{searched} candidates searched"))
    return check


# ===================================
# Shear maps and antipodes
# ===================================

def right_shear(bialgebra, verify=True):
    """sh = (id (x) mu) o (delta (x) id)"""
    if verify:
        require_bialgebra(bialgebra)
    c, idR = bialgebra.category, bialgebra.category.identity(bialgebra.carrier)
    return c.compose(c.tensor_mor(idR, bialgebra.mu), c.tensor_mor(bialgebra.delta, idR))


def left_shear(bialgebra, verify=True):
    """(mu (x) id) o (id (x) delta)"""
    if verify:
        require_bialgebra(bialgebra)
    c, idR = bialgebra.category, bialgebra.category.identity(bialgebra.carrier)
    return c.compose(c.tensor_mor(bialgebra.mu, idR), c.tensor_mor(idR, bialgebra.delta))


def is_hopf(bialgebra, verify=True):
    """
    Decide the Hopf property by invertibility of the right shear

    The left shear is decided as well; the two must agree.

    Raises:
        ShearDisagreementError: exactly one of the shears is invertible

    Returns:
        HopfDecision
    """
    c = bialgebra.category
    right = c.is_invertible(right_shear(bialgebra, verify))
    left = c.is_invertible(left_shear(bialgebra, verify=False))
    if right.invertible != left.invertible:
        raise ShearDisagreementError(
            f"{bialgebra.name}: right shear invertible={right.invertible}, left shear invertible={left.invertible}",
            witness={"right": right.witness, "left": left.witness})
    return HopfDecision(right.invertible, right, left)


def check_antipode(bialgebra, antipode):
    """
    mu o (S (x) id) o delta = eta o epsilon = mu o (id (x) S) o delta

    Returns:
        CheckResult
    """
    c, R = bialgebra.category, bialgebra.carrier
    _require_shape(c, antipode, R, R, "antipode")
    idR = c.identity(R)
    target = c.compose(bialgebra.eta, bialgebra.epsilon)
    left = c.compose_all(bialgebra.mu, c.tensor_mor(antipode, idR), bialgebra.delta)
    right = c.compose_all(bialgebra.mu, c.tensor_mor(idR, antipode), bialgebra.delta)
    if not c.morphisms_equal(left, target):
        return CheckResult("antipode", False, witness={"side": "left", "left": left, "right": target})
    if not c.morphisms_equal(right, target):
        return CheckResult("antipode", False, witness={"side": "right", "left": right, "right": target})
    return CheckResult("antipode", True)


def antipode_from_shear(bialgebra, decision=None):
    """
    S = (epsilon (x) id) o sh^-1 o (id (x) eta)

    Raises:
        NotHopfError: the shear is not invertible; witness is the kernel vector
            or the colliding pair
    """
    decision = decision or is_hopf(bialgebra)
    if not decision.hopf:
        raise NotHopfError(f"{bialgebra.name}: right shear is not invertible ({decision.right.reason})",
                           witness=decision.right.witness)
    c, idR = bialgebra.category, bialgebra.category.identity(bialgebra.carrier)
    antipode = c.compose_all(c.tensor_mor(bialgebra.epsilon, idR), decision.right.inverse,
                             c.tensor_mor(idR, bialgebra.eta))
    verdict = check_antipode(bialgebra, antipode)
    if not verdict.passed:
        raise CatCheckError(f"{bialgebra.name}: derived antipode fails the antipode equations",
                            witness=verdict.witness)
    return antipode


def shear_inverse_from_antipode(bialgebra, antipode):
    """
    phi = (id (x) mu) o (id (x) S (x) id) o (delta (x) id), a two-sided inverse of sh

    Raises:
        PreconditionError: antipode fails check_antipode
    """
    verdict = check_antipode(bialgebra, antipode)
    if not verdict.passed:
        raise PreconditionError(f"{bialgebra.name}: not an antipode", witness=verdict.witness)
    c, R = bialgebra.category, bialgebra.carrier
    idR = c.identity(R)
    phi = c.compose_all(c.tensor_mor(idR, bialgebra.mu),
                        c.tensor_morphisms([idR, antipode, idR]),
                        c.tensor_mor(bialgebra.delta, idR))
    sh = right_shear(bialgebra, verify=False)
    identity = c.identity(c.tensor_obj(R, R))
    for label, composite in (("phi o sh", c.compose(phi, sh)), ("sh o phi", c.compose(sh, phi))):
        if not c.morphisms_equal(composite, identity):
            raise CatCheckError(f"{bialgebra.name}: {label} is not the identity", witness={label: composite})
    return phi


def shear_identities(bialgebra):
    """
    Identities every bialgebra satisfies, for the right shear and mirrored
    for the left shear

    Returns:
        list: one CheckResult per identity
    """
    c, R = bialgebra.category, bialgebra.carrier
    mu, eta, delta, eps = bialgebra.mu, bialgebra.eta, bialgebra.delta, bialgebra.epsilon
    idR = c.identity(R)
    sh = right_shear(bialgebra, verify=False)
    lsh = left_shear(bialgebra, verify=False)
    t = c.tensor_mor
    return [
        _equality(c, "right shear commutes with multiplication",
                  c.compose(sh, t(idR, mu)), c.compose(t(idR, mu), t(sh, idR))),
        _equality(c, "right shear commutes with comultiplication",
                  c.compose(t(delta, idR), sh), c.compose(t(idR, sh), t(delta, idR))),
        _equality(c, "right shear on the unit is the comultiplication", c.compose(sh, t(idR, eta)), delta),
        _equality(c, "counit after right shear is the multiplication", c.compose(t(eps, idR), sh), mu),
        _equality(c, "left shear commutes with multiplication",
                  c.compose(lsh, t(mu, idR)), c.compose(t(mu, idR), t(idR, lsh))),
        _equality(c, "left shear commutes with comultiplication",
                  c.compose(t(idR, delta), lsh), c.compose(t(lsh, idR), t(idR, delta))),
        _equality(c, "left shear on the unit is the comultiplication", c.compose(lsh, t(eta, idR)), delta),
        _equality(c, "counit after left shear is the multiplication", c.compose(t(idR, eps), lsh), mu),
    ]


# ===================================
# Monoids, group algebras and linearization
# ===================================

def monoid_bialgebra(monoid):
    """
    A monoid as a bialgebra in finite sets

    Comultiplication is the diagonal and the counit is the unique map to the
    one-point set.
    """
    monoid.validate()
    cat = FiniteSetCategory()
    n = monoid.size
    R = _carrier(monoid)
    mu = FunctionMorphism(cat.tensor_obj(R, R), R,
                          tuple(monoid.table[a][b] for a in range(n) for b in range(n)))
    eta = FunctionMorphism(cat.unit(), R, (monoid.unit,))
    delta = FunctionMorphism(R, cat.tensor_obj(R, R), tuple(a * n + a for a in range(n)))
    eps = FunctionMorphism(R, cat.unit(), (0,) * n)
    return BialgebraPresentation(cat, R, mu, eta, delta, eps, commutative=monoid.is_commutative(),
                                 cocommutative=True, name=monoid.name)


def _carrier(monoid):
    return FiniteSet(monoid.size, monoid.labels)


class LinearizationFunctor:
    """
    Free vector space functor from finite sets to matrices over a field

    A function becomes its 0/1 matrix; the functor is strong monoidal with
    identity structure maps because both products flatten lexicographically.
    """

    def __init__(self, ring=None):
        self.ring = ring if ring is not None else ScalarRing()
        self.source = FiniteSetCategory()
        self.target = MatrixCategory(self.ring)

    def on_object(self, obj):
        return obj.size

    def on_morphism(self, f):
        columns = [{f.table[j]: 1} for j in range(f.source.size)]
        return self.target.from_columns(f.source.size, f.target.size, columns)

    def check_strong_monoidal(self, morphisms, objects):
        """
        F(g o f) = F(g)F(f), F(f (x) g) = F(f) (x) F(g), F(id) = id,
        F(sigma) = sigma and F(1) = 1 on the given morphisms and objects
        """
        S, T = self.source, self.target
        failures = {}
        for f in morphisms:
            for g in morphisms:
                if g.source == f.target and not T.morphisms_equal(
                        self.on_morphism(S.compose(g, f)), T.compose(self.on_morphism(g), self.on_morphism(f))):
                    failures.setdefault("preserves composition", {"f": f, "g": g})
                if not T.morphisms_equal(self.on_morphism(S.tensor_mor(f, g)),
                                         T.tensor_mor(self.on_morphism(f), self.on_morphism(g))):
                    failures.setdefault("preserves tensor", {"f": f, "g": g})
        for a in objects:
            if not T.morphisms_equal(self.on_morphism(S.identity(a)), T.identity(self.on_object(a))):
                failures.setdefault("preserves identities", {"object": a})
            for b in objects:
                if not T.morphisms_equal(self.on_morphism(S.braiding(a, b)),
                                         T.braiding(self.on_object(a), self.on_object(b))):
                    failures.setdefault("preserves braiding", {"objects": [a, b]})
        if self.on_object(S.unit()) != T.unit():
            failures.setdefault("preserves unit", {"unit": S.unit()})
        names = ["preserves composition", "preserves tensor", "preserves identities",
                 "preserves braiding", "preserves unit"]
        return [CheckResult(n, n not in failures, witness=failures.get(n)) for n in names]

    def map_bialgebra(self, bialgebra):
        """Image of a bialgebra in finite sets; an antipode is carried along"""
        F = self.on_morphism
        return BialgebraPresentation(
            self.target, self.on_object(bialgebra.carrier), F(bialgebra.mu), F(bialgebra.eta),
            F(bialgebra.delta), F(bialgebra.epsilon),
            antipode=F(bialgebra.antipode) if bialgebra.antipode is not None else None,
            commutative=bialgebra.commutative, cocommutative=bialgebra.cocommutative,
            name=f"F_{self.ring.characteristic}[{bialgebra.name}]" if self.ring.characteristic
            else f"Q[{bialgebra.name}]")


def linearize_monoid(monoid, p=DEFAULT_PRIME):
    """The monoid bialgebra F_p[M] (p = 0 gives Q[M])"""
    return LinearizationFunctor(ScalarRing(p)).map_bialgebra(monoid_bialgebra(monoid))


def linearize(group, p=DEFAULT_PRIME):
    """
    The group bialgebra F_p[G]

    Raises:
        NotAGroupError: some element has no inverse
    """
    group.inverse_table()
    return linearize_monoid(group, p)


def inversion_morphism(group, category):
    """Inversion of a group as a table or as a permutation matrix"""
    inverse = group.inverse_table()
    n = group.size
    if isinstance(category, FiniteSetCategory):
        R = _carrier(group)
        return FunctionMorphism(R, R, inverse)
    return category.from_columns(n, n, [{inverse[a]: 1} for a in range(n)])


def monoid_sweep(max_size, p=DEFAULT_PRIME, debug=False):
    """
    For every monoid of order <= max_size up to isomorphism, F_p[M] is Hopf
    exactly when M is a group

    Returns:
        tuple: (list of CheckResult, list of per-monoid rows)
    """
    rows = []
    mismatch = None
    for n in range(1, max_size + 1):
        monoids = enumerate_monoids(n, debug=debug)
        for monoid in monoids:
            decision = is_hopf(linearize_monoid(monoid, p), verify=False)
            rows.append({"monoid": monoid.name, "order": n, "group": monoid.is_group(), "hopf": decision.hopf})
            if decision.hopf != monoid.is_group() and mismatch is None:
                mismatch = {"monoid": monoid, "hopf": decision.hopf, "witness": decision.witness}
        debug_print(debug, f"order {n}: {len(monoids)} monoids")
    return [CheckResult("Hopf iff group", mismatch is None, witness=mismatch,
                        detail=f"{len(rows)} monoids of order <= {max_size} over F_{p}")], rows


# ===================================
# Operad algebras
# ===================================

@dataclass
class OperadAlgebra:
    """A carrier with a structure morphism for every operation up to the arity bound"""
    operad: Any
    category: Any
    carrier: Any
    structure: Dict[Any, Any]
    name: str = "X"

    def structure_map(self, op):
        return self.structure[op]


def operad_algebra_from_algebra(algebra, operad, arity_bound=DEFAULT_ARITY_BOUND):
    """
    The Comm- or Assoc-algebra determined by (mu, eta)

    Raises:
        PreconditionError: a Comm structure was requested on a noncommutative
            algebra
    """
    if isinstance(operad, CommOperad):
        c = algebra.category
        if not c.morphisms_equal(c.compose(algebra.mu, c.braiding(algebra.carrier, algebra.carrier)), algebra.mu):
            raise PreconditionError(f"{algebra.name} is not commutative")
    bound = min(arity_bound, operad.arity_bound)
    structure = {}
    for n in range(bound + 1):
        for op in operad.operations(n):
            structure[op] = operad.structure_map(algebra, op)
    return OperadAlgebra(operad, algebra.category, algebra.carrier, structure, algebra.name)


def check_operad_algebra(X):
    """
    Compatibility of structure maps with operadic composition, symmetric
    action and unit, over every operation in the table
    """
    c, O = X.category, X.operad
    bound = O.arity_bound
    unit_ok = c.morphisms_equal(X.structure_map(O.unit()), c.identity(X.carrier))
    composition_witness = equivariance_witness = None
    ops = [op for n in range(bound + 1) for op in O.operations(n) if op in X.structure]
    for rho in ops:
        k = O.arity(rho)
        objects = [X.carrier] * k
        if isinstance(O, AssocOperad):
            for pi in itertools.permutations(range(k)):
                left = X.structure_map(O.relabel(rho, pi))
                right = c.compose(X.structure_map(rho), c.shuffle(objects, pi))
                if equivariance_witness is None and not c.morphisms_equal(left, right):
                    equivariance_witness = {"op": O.render(rho), "perm": list(pi)}
        for arities in _bounded_arities(k, bound):
            for inputs in itertools.product(*[O.operations(n) for n in arities]):
                composite = O.compose(rho, list(inputs))
                left = X.structure_map(composite)
                right = c.compose(X.structure_map(rho),
                                  c.tensor_morphisms([X.structure_map(s) for s in inputs]))
                if composition_witness is None and not c.morphisms_equal(left, right):
                    composition_witness = {"op": O.render(rho), "inputs": [O.render(s) for s in inputs]}
    return [
        CheckResult(f"{X.name} {O.name}-unit", unit_ok),
        CheckResult(f"{X.name} {O.name}-composition", composition_witness is None, witness=composition_witness),
        CheckResult(f"{X.name} {O.name}-equivariance", equivariance_witness is None, witness=equivariance_witness),
    ]


def _bounded_arities(k, bound):
    for arities in itertools.product(range(bound + 1), repeat=k):
        if sum(arities) <= bound:
            yield arities


def check_operad_algebra_map(f, X, Y):
    """f o mu^X_rho = mu^Y_rho o f^(x)n for every operation in both tables"""
    c = X.category
    for op, mu_x in X.structure.items():
        if op not in Y.structure:
            continue
        n = X.operad.arity(op)
        left = c.compose(f, mu_x)
        right = c.compose(Y.structure_map(op), c.tensor_morphisms([f] * n))
        if not c.morphisms_equal(left, right):
            return CheckResult("operad algebra map", False,
                               witness={"op": X.operad.render(op), "left": left, "right": right})
    return CheckResult("operad algebra map", True, detail=f"{len(X.structure)} operations")
