#!/usr/bin/env python3
"""
CatCheck Interchange

Algebras as functors of operator categories O^(x) -> C^(x), their nerves,
algebra maps as cylinders over {0 -> 1}, and the comparison between the
pairing functor pushed along the fold and the tensor-product algebra.

Only the strictly commuting finite shadow is decided here: simplices are
handled up to dimension 3 for the discrete operator categories involved.
"""

import itertools
import random
from dataclasses import dataclass, replace

from catcheck_algebra import check_algebra, check_algebra_map, tensor_algebras
from catcheck_operators import (
    AssocOperad,
    CommOperad,
    OperadOperatorCategory,
    OperatorCategory,
    PointedMap,
    compose_pointed,
    enumerate_pointed_maps,
    fold_map,
    identity_map,
)
from catcheck_simplicial import CategoryNerve, SimplicialMap
from catcheck_utils import (
    CheckResult,
    CatCheckError,
    DimensionBoundError,
    InstanceMismatchError,
    NotAlgebraMapError,
    PreconditionError,
    DEFAULT_ARITY_BOUND,
    DEFAULT_POPULATION,
    DEFAULT_SEED,
    debug_print,
    first_failure,
)

MAX_NERVE_DIMENSION = 3
AUDIT_ARITY = 3
INERT_HOM_LIMIT = 1 << 10


# ===================================
# Algebras as functors
# ===================================

class AlgebraFunctor:
    """
    The functor O^(x) -> C^(x) of an algebra R

    [n]_+ goes to (R, ..., R); a morphism (alpha, {op_j}) goes to
    (alpha, {mu_op_j}) where mu_op is the structure map of op on R.
    """

    def __init__(self, operad, algebra, debug=False):
        self.operad = operad
        self.algebra = algebra
        self.source = OperadOperatorCategory(operad)
        self.target = OperatorCategory(algebra.category, debug)
        self.debug = debug
        self._structure = {}

    @property
    def name(self):
        return f"{self.algebra.name}^(x)"

    @property
    def arity_bound(self):
        return self.operad.arity_bound

    def on_object(self, n):
        return (self.algebra.carrier,) * n

    def structure_map(self, op):
        if op not in self._structure:
            self._structure[op] = self.operad.structure_map(self.algebra, op)
        return self._structure[op]

    def on_morphism(self, f):
        return self.target.morphism(f.alpha, self.on_object(f.alpha.source), self.on_object(f.alpha.target),
                                    [self.structure_map(op) for op in f.ops])

    def fold(self, ordering=None):
        """The image of the fold [2]_+ -> [1]_+ with the given ordering of its preimage"""
        alpha = fold_map(2)
        if ordering is None:
            return self.on_morphism(self.source.lift(alpha))
        return self.on_morphism(self.source.morphism(alpha, [tuple(ordering)]))

    def check_functoriality(self, arity_bound=AUDIT_ARITY, seed=DEFAULT_SEED, samples=None):
        """
        F(g o f) = F(g) o F(f) on composable pairs with arities <= arity_bound,
        and F(id) = id; exhaustive unless samples is given
        """
        bound = min(arity_bound, self.arity_bound)
        pairs = self.source.composable_pairs(bound, seed, samples)
        for f, g in pairs:
            left = self.on_morphism(self.source.compose(g, f))
            right = self.target.compose(self.on_morphism(g), self.on_morphism(f))
            if not self.target.morphisms_equal(left, right):
                return CheckResult(f"{self.name} functoriality", False,
                                   witness={"f": f, "g": g, "left": left, "right": right})
        for n in range(bound + 1):
            if not self.target.morphisms_equal(self.on_morphism(self.source.identity(n)),
                                               self.target.identity(self.on_object(n))):
                return CheckResult(f"{self.name} functoriality", False, witness={"identity": n})
        kind = "sampled" if samples is not None and len(pairs) == samples else "all"
        return CheckResult(f"{self.name} functoriality", True,
                           detail=f"{kind} {len(pairs)} composable pairs, arity <= {bound}")

    def check_inert_preservation(self, arity_bound=AUDIT_ARITY, limit=INERT_HOM_LIMIT):
        """
        Images of inert lifts are cocartesian lifts, and the lift of every
        inert alpha with source arity <= arity_bound passes the enumeration
        criterion against every beta out of its target with at most two
        target points, for target tuples of copies of R or of 1

        Hom-sets beyond the limit are skipped; the criterion is refused when
        no hom-set could be enumerated at all.

        Returns:
            list: equality result and criterion result
        """
        bound = min(arity_bound, self.arity_bound)
        inert = [alpha for m in range(bound + 1) for n in range(m + 1)
                 for alpha in enumerate_pointed_maps(m, n) if alpha.is_inert()]
        mismatch = None
        for alpha in inert:
            image = self.on_morphism(self.source.lift(alpha))
            lift = self.target.cocartesian_lift(alpha, self.on_object(alpha.source))
            if not self.target.morphisms_equal(image, lift):
                mismatch = {"alpha": alpha, "image": image}
                break
        results = [CheckResult(f"{self.name} inert lifts", mismatch is None, witness=mismatch,
                               detail=f"{len(inert)} inert maps")]
        name = f"{self.name} inert images are cocartesian"
        base = self.algebra.category
        checked = skipped = 0
        for alpha in inert:
            for k in range(1, 3):
                for beta in enumerate_pointed_maps(alpha.target, k):
                    for obj in (self.algebra.carrier, base.unit()):
                        try:
                            verdict = self.target.check_cocartesian(alpha, self.on_object(alpha.source), beta,
                                                                    (obj,) * k, limit)
                        except (DimensionBoundError, PreconditionError, NotImplementedError):
                            skipped += 1
                            continue
                        checked += 1
                        if not verdict.passed:
                            results.append(CheckResult(name, False, witness=verdict.witness))
                            return results
        debug_print(self.debug, f"{self.name}: {checked} hom-set bijections, {skipped} skipped")
        if checked == 0:
            results.append(CheckResult(name, False, witness={"skipped": skipped, "limit": limit},
                                       detail=f"all {skipped} hom-sets beyond enumeration", refused=True))
        else:
            results.append(CheckResult(name, True,
                                       detail=f"{checked} hom-set bijections, {skipped} beyond enumeration"))
        return results


def comm_algebra_functor(algebra, arity_bound=DEFAULT_ARITY_BOUND, debug=False):
    """
    R^(x): Comm^(x) -> C^(x) for a commutative algebra

    Raises:
        PreconditionError: R fails a commutative algebra check
    """
    failure = first_failure(check_algebra(_flagged(algebra, True)))
    if failure is not None:
        raise PreconditionError(f"{algebra.name} is not a commutative algebra: {failure.name}",
                                witness=failure.witness)
    return AlgebraFunctor(CommOperad(arity_bound), algebra, debug)


def assoc_algebra_functor(algebra, arity_bound=DEFAULT_ARITY_BOUND, debug=False):
    """
    R^(x): Assoc^(x) -> C^(x); an ordered preimage multiplies in its order

    Raises:
        PreconditionError: R fails an algebra check
    """
    failure = first_failure(check_algebra(_flagged(algebra, False)))
    if failure is not None:
        raise PreconditionError(f"{algebra.name} is not an algebra: {failure.name}", witness=failure.witness)
    return AlgebraFunctor(AssocOperad(arity_bound), algebra, debug)


def _flagged(algebra, commutative):
    return replace(algebra, commutative=commutative)


def algebra_functor(algebra, arity_bound=DEFAULT_ARITY_BOUND, debug=False):
    """Comm for commutative-flagged algebras, Assoc otherwise"""
    if algebra.commutative:
        return comm_algebra_functor(algebra, arity_bound, debug)
    return assoc_algebra_functor(algebra, arity_bound, debug)


def homotopy_category_multiplication(functor):
    """
    Factor the image of the fold through the cocartesian lift and return the
    fiber component, which must be mu itself

    Raises:
        CatCheckError: the factor differs from mu
    """
    alpha = fold_map(2)
    edge = functor.fold()
    factor = functor.target.factor_through_lift(edge, alpha, identity_map(1))
    multiplication = factor.components[0]
    category = functor.algebra.category
    if not category.morphisms_equal(multiplication, functor.algebra.mu):
        raise CatCheckError(f"{functor.name}: factor over the fold is not the multiplication",
                            witness={"factor": multiplication, "mu": functor.algebra.mu})
    return multiplication


# ===================================
# Nerves of algebra functors
# ===================================

class AlgebraNerve:
    """
    N(F): N(O^(x)) -> N(C^(x)) applied chainwise, up to dimension 3

    Both nerves are too large to list, so the simplicial-map check runs on
    seeded samples of chains.
    """

    def __init__(self, functor, dimension=MAX_NERVE_DIMENSION):
        if dimension > MAX_NERVE_DIMENSION:
            raise DimensionBoundError(f"algebra nerves are bounded at dimension {MAX_NERVE_DIMENSION}")
        self.functor = functor
        self.dimension = dimension
        self.source = CategoryNerve(functor.source, dimension)
        self.target = CategoryNerve(functor.target, dimension)
        self.map = SimplicialMap(self.source, self.target, self, dimension, name=f"N({functor.name})")

    def __call__(self, simplex, k=None):
        start, arrows = simplex
        return (self.functor.on_object(start), tuple(self.functor.on_morphism(f) for f in arrows))

    def edge(self, morphism):
        return self((morphism.alpha.source, (morphism,)))

    def fold_edge(self):
        return self.edge(self.functor.source.lift(fold_map(2)))

    def sample(self, arity_bound=AUDIT_ARITY, seed=DEFAULT_SEED, count=DEFAULT_POPULATION):
        """Seeded chains of composable morphisms, count per dimension"""
        rng = random.Random(seed)
        bound = min(arity_bound, self.functor.arity_bound)
        source = self.functor.source
        homs = {}
        simplices = {}
        for k in range(self.dimension + 1):
            level = []
            for _ in range(count if k else bound + 1):
                start = rng.randint(0, bound)
                current, arrows = start, []
                for _ in range(k):
                    nxt = rng.randint(0, bound)
                    if (current, nxt) not in homs:
                        homs[(current, nxt)] = source.hom(current, nxt)
                    arrows.append(rng.choice(homs[(current, nxt)]))
                    current = nxt
                level.append((start, tuple(arrows)))
            simplices[k] = level
        return simplices

    def check(self, arity_bound=AUDIT_ARITY, seed=DEFAULT_SEED, count=DEFAULT_POPULATION):
        """
        Simplicial on sampled chains, lies over N(Fin_*), and the fold edge
        is (fold, {mu})
        """
        sample = self.sample(arity_bound, seed, count)
        results = [self.map.check(sample)]
        over = None
        for k, level in sample.items():
            for simplex in level:
                _, image = self(simplex)
                if tuple(f.alpha for f in image) != tuple(f.alpha for f in simplex[1]):
                    over = {"simplex": simplex}
                    break
        results.append(CheckResult(f"{self.map.name} lies over N(Fin_*)", over is None, witness=over))
        _, (edge,) = self.fold_edge()
        mu = self.functor.algebra.mu
        fold_ok = edge.alpha == fold_map(2) and self.functor.algebra.category.morphisms_equal(edge.components[0], mu)
        results.append(CheckResult(f"{self.map.name} fold edge is (fold, mu)", fold_ok,
                                   witness=None if fold_ok else {"edge": edge, "mu": mu}))
        return results


def nerve_algebra(functor, dimension=MAX_NERVE_DIMENSION):
    """
    Raises:
        DimensionBoundError: dimension > 3
    """
    return AlgebraNerve(functor, dimension)


# ===================================
# Cylinders of algebra maps
# ===================================

class AlgebraMapCylinder:
    """
    A functor {0 -> 1} x O^(x) -> C^(x) restricting to start and end

    Over (0 -> 1, g) the value is ``transition(g)``; over (l -> l, g) it is
    the endpoint functor at l.
    """

    def __init__(self, start, end, transition, name="cyl", algebra_map=None):
        if start.operad.name != end.operad.name or start.target.base != end.target.base:
            raise InstanceMismatchError(f"{name}: endpoint functors have different source or target")
        self.start = start
        self.end = end
        self.transition = transition
        self.name = name
        self.algebra_map = algebra_map

    def on_object(self, level, n):
        return (self.start if level == 0 else self.end).on_object(n)

    def on_morphism(self, g, source_level=0, target_level=1):
        if source_level > target_level:
            raise PreconditionError(f"no arrow {source_level} -> {target_level} in {{0 -> 1}}")
        if source_level == target_level:
            return (self.start if source_level == 0 else self.end).on_morphism(g)
        return self.transition(g)

    def check(self, arity_bound=AUDIT_ARITY, seed=DEFAULT_SEED, samples=None):
        """
        Restrictions hold on the nose and composition is preserved along
        every chain l0 <= l1 <= l2 of levels

        Returns:
            list: restriction and functoriality results
        """
        source = self.start.source
        target = self.start.target
        bound = min(arity_bound, self.start.arity_bound)
        pairs = source.composable_pairs(bound, seed, samples)
        restriction = None
        for n in range(bound + 1):
            for level, functor in ((0, self.start), (1, self.end)):
                g = source.identity(n)
                if self.on_morphism(g, level, level) != functor.on_morphism(g):
                    restriction = {"level": level, "arity": n}
        failure = None
        for f, g in pairs:
            composite = source.compose(g, f)
            for l0, l1, l2 in itertools.combinations_with_replacement((0, 1), 3):
                left = self.on_morphism(composite, l0, l2)
                right = target.compose(self.on_morphism(g, l1, l2), self.on_morphism(f, l0, l1))
                if not target.morphisms_equal(left, right):
                    failure = {"levels": [l0, l1, l2], "f": f, "g": g}
                    break
            if failure:
                break
        return [
            CheckResult(f"{self.name} restricts to its ends", restriction is None, witness=restriction),
            CheckResult(f"{self.name} functoriality", failure is None, witness=failure,
                        detail=f"{len(pairs)} composable pairs"),
        ]


def _power_map(functor, f, n):
    """(id_[n], f, ..., f): R^n -> S^n"""
    carrier_map = [f] * n
    target = functor.target
    return target.morphism(identity_map(n), (functor.algebra.category.domain(f),) * n,
                           (functor.algebra.category.codomain(f),) * n, carrier_map)


def cylinder_from_algebra_map(f, R, S, arity_bound=AUDIT_ARITY, operad=None, debug=False):
    """
    The cylinder of an algebra map: over (0 -> 1, g) the value is
    S^(x)(g) o (id, f, ..., f)

    Raises:
        NotAlgebraMapError: f does not preserve multiplication or unit
    """
    decision = check_algebra_map(f, R, S)
    if not decision.passed:
        raise NotAlgebraMapError(f"{R.name} -> {S.name} is not an algebra map", witness=decision.witness)
    if operad is None:
        operad = CommOperad(arity_bound) if R.commutative and S.commutative else AssocOperad(arity_bound)
    start = AlgebraFunctor(operad, R, debug)
    end = AlgebraFunctor(operad, S, debug)

    def transition(g):
        return end.target.compose(end.on_morphism(g), _power_map(start, f, g.alpha.source))

    return AlgebraMapCylinder(start, end, transition, name=f"cyl({R.name} -> {S.name})", algebra_map=f)


def compose_cylinders(first, second):
    """
    Paste two cylinders along the shared end: over (0 -> 1, g) the value is
    second(0 -> 1, g) o first(0 -> 1, id)

    Raises:
        InstanceMismatchError: the end of first is not the start of second
    """
    shared, other = first.end.algebra, second.start.algebra
    category = shared.category
    if (shared.carrier != other.carrier or not category.morphisms_equal(shared.mu, other.mu)
            or not category.morphisms_equal(shared.eta, other.eta)):
        raise InstanceMismatchError(f"cannot paste {first.name} and {second.name}: ends differ")
    source = first.start.source

    def transition(g):
        step = first.transition(source.identity(g.alpha.source))
        return second.start.target.compose(second.transition(g), step)

    return AlgebraMapCylinder(first.start, second.end, transition,
                              name=f"{second.name} o {first.name}")


def cylinders_agree(first, second, arity_bound=AUDIT_ARITY):
    """Equal transition components on every morphism with arities <= arity_bound"""
    source = first.start.source
    target = first.start.target
    bound = min(arity_bound, first.start.arity_bound)
    count = 0
    for m in range(bound + 1):
        for n in range(bound + 1):
            for g in source.hom(m, n):
                count += 1
                if not target.morphisms_equal(first.on_morphism(g), second.on_morphism(g)):
                    return CheckResult(f"{first.name} = {second.name}", False,
                                       witness={"morphism": g, "left": first.on_morphism(g),
                                                "right": second.on_morphism(g)})
    return CheckResult(f"{first.name} = {second.name}", True, detail=f"{count} morphisms")


# ===================================
# Pairing and pushforward
# ===================================

def pairing_map(alpha):
    """
    [2]_+ x alpha, flattened: point b*m + i goes to b*n + alpha(i), the
    basepoint staying put
    """
    m, n = alpha.source, alpha.target
    table = tuple(0 if alpha(i) == 0 else b * n + alpha(i) for b in range(2) for i in range(1, m + 1))
    return PointedMap(2 * m, 2 * n, table)


def pair_fold(m):
    """The active fold [2m]_+ -> [m]_+ identifying b*m + i with i"""
    return PointedMap(2 * m, m, tuple(i for _ in range(2) for i in range(1, m + 1)))


@dataclass
class PairingComparison:
    """Per-arity comparison of the pushed pairing functor with (R (x) S)^(x)"""
    results: list
    compared: int = 0


class PairingFunctor:
    """
    (R, S)^(x): over alpha the morphism (pairing(alpha), {mu_R...}, {mu_S...})
    from (R^m, S^m) to (R^n, S^n)
    """

    def __init__(self, R_functor, S_functor):
        self.R = R_functor
        self.S = S_functor
        self.target = R_functor.target

    def on_object(self, m):
        return self.R.on_object(m) + self.S.on_object(m)

    def on_morphism(self, g):
        alpha = g.alpha
        components = [self.R.structure_map(op) for op in g.ops] + [self.S.structure_map(op) for op in g.ops]
        return self.target.morphism(pairing_map(alpha), self.on_object(alpha.source),
                                    self.on_object(alpha.target), components)

    def pushed(self, g):
        """The morphism over alpha induced on pushforwards along the folds"""
        alpha = g.alpha
        m, n = alpha.source, alpha.target
        image = self.on_morphism(g)
        lift = self.target.cocartesian_lift(pair_fold(n), image.target)
        return self.target.factor_through_lift(self.target.compose(lift, image), pair_fold(m), beta=alpha)


def pairing_and_pushforward(R, S, arity_bound=AUDIT_ARITY, debug=False):
    """
    Compare the pairing functor pushed along the fold with the functor of
    R (x) S, and the insertions with id (x) eta_S and eta_R (x) id

    Raises:
        PreconditionError: R or S is not commutative

    Returns:
        PairingComparison
    """
    R_functor = comm_algebra_functor(R, arity_bound, debug)
    S_functor = comm_algebra_functor(S, arity_bound, debug)
    RS_functor = comm_algebra_functor(tensor_algebras(R, S), arity_bound, debug)
    pairing = PairingFunctor(R_functor, S_functor)
    target = R_functor.target
    c = R.category
    results = []
    compared = 0
    for m in range(arity_bound + 1):
        mismatch = None
        for n in range(arity_bound + 1):
            for g in R_functor.source.hom(m, n):
                compared += 1
                pushed = pairing.pushed(g)
                expected = RS_functor.on_morphism(g)
                if not target.morphisms_equal(pushed, expected):
                    index = next(k for k, (a, b) in enumerate(zip(pushed.components, expected.components), start=1)
                                 if not c.morphisms_equal(a, b))
                    mismatch = {"alpha": g.alpha, "component": index,
                                "pushed": pushed.components[index - 1],
                                "expected": expected.components[index - 1]}
                    break
            if mismatch:
                break
        results.append(CheckResult(f"pushforward = ({R.name}(x){S.name})^(x) from arity {m}", mismatch is None,
                                   witness=mismatch))
        debug_print(debug, f"pairing: arity {m} compared")

    fold = pair_fold(1)
    for label, point, algebra, expected in (
            ("R", 1, R, c.tensor_mor(c.identity(R.carrier), S.eta)),
            ("S", 2, S, c.tensor_mor(R.eta, c.identity(S.carrier)))):
        inclusion = PointedMap(1, 2, (point,))
        components = [c.identity(R.carrier), S.eta] if point == 1 else [R.eta, c.identity(S.carrier)]
        insertion = target.morphism(inclusion, (algebra.carrier,), pairing.on_object(1), components)
        pushed = target.compose(target.cocartesian_lift(fold, pairing.on_object(1)), insertion)
        ok = pushed.alpha == compose_pointed(fold, inclusion) and c.morphisms_equal(pushed.components[0], expected)
        results.append(CheckResult(f"insertion of {label} is {'id (x) eta' if point == 1 else 'eta (x) id'}", ok,
                                   witness=None if ok else {"pushed": pushed.components[0], "expected": expected}))
    return PairingComparison(results, compared)
