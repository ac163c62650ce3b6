#!/usr/bin/env python3
"""
CatCheck Commands

One pipeline per CLI command. Every pipeline reads parsed descriptions and
the job options, appends CheckResults and artifacts to a Report, and never
raises for a negative decision: errors raised by the library become failed
or refused checks.
"""

import os
import time
from dataclasses import replace
from pathlib import Path

from catcheck_algebra import (
    antipode_from_shear,
    check_algebra,
    check_antipode,
    check_bialgebra,
    coproduct_universal_check,
    inversion_morphism,
    is_hopf,
    left_shear,
    monoid_sweep,
    right_shear,
    shear_identities,
    shear_inverse_from_antipode,
    tensor_algebras,
)
from catcheck_interchange import (
    AUDIT_ARITY,
    algebra_functor,
    assoc_algebra_functor,
    homotopy_category_multiplication,
    nerve_algebra,
    pairing_and_pushforward,
)
from catcheck_monoidal import (
    FiniteSetCategory,
    MatrixCategory,
    ScalarRing,
    check_category_laws,
    check_monoidal_laws,
    composable_triples,
)
from catcheck_operators import (
    AssocOperad,
    CommOperad,
    OperadOperatorCategory,
    OperatorCategory,
    check_comm_is_fin_star,
    check_factorizations,
    check_pointed_map_counts,
)
from catcheck_schema import load, resolve
from catcheck_simplicial import (
    AdjunctionUnit,
    HCNerve,
    LevelwiseSimplicialCategory,
    coherent_cube,
    compare_discrete_hc_nerve,
    horn_check,
    nerve,
    product_nerve_comparison,
)
from catcheck_utils import (
    CheckResult,
    CatCheckError,
    InstanceMismatchError,
    JobDescription,
    NotHopfError,
    PreconditionError,
    Report,
    SchemaError,
    ShearDisagreementError,
    CORPUS_ENV_VAR,
    DEFAULT_POPULATION,
    VERSION,
    debug_print,
    error_witness,
    input_digest,
    refused,
)

# Carriers up to this size get exhaustive functoriality checks
EXHAUSTIVE_CARRIER_SIZE = 2
SEGAL_POPULATION = 2
MAX_CUBE = 5
# Operad operator categories are checked on every triple up to this arity
OPERATOR_LAW_ARITY = 2


def _prefixed(results, prefix):
    return [replace(r, name=f"{prefix}: {r.name}") for r in results]


def _carrier_size(algebra):
    carrier = algebra.carrier
    return carrier.size if hasattr(carrier, "size") else carrier


def _base(description, job):
    """Monoidal instance of a description; Mat(F_p) with no description"""
    if description is None:
        return MatrixCategory(ScalarRing(job.prime))
    if description.category is None:
        raise PreconditionError(f"{description.name}: a {description.kind} description has no monoidal instance")
    return description.category


def _population(description, job):
    """Declared objects of a description, or the two smallest objects of its instance"""
    if description is not None and description.objects:
        return list(description.objects.values())
    category = _base(description, job)
    if isinstance(category, FiniteSetCategory):
        return category.objects()[:SEGAL_POPULATION]
    return list(range(1, SEGAL_POPULATION + 1))


# ===================================
# Monoidal and algebra pipelines
# ===================================

def check_monoidal_command(descriptions, job, report):
    targets = descriptions or [None]
    for description in targets:
        category = _base(description, job)
        objects = list(description.objects.values()) if description is not None and description.objects else None
        extra = list(description.morphisms.values()) if description is not None else []
        triples = composable_triples(category, job.seed, DEFAULT_POPULATION, objects, extra)
        prefix = description.name if description is not None else category.name
        report.extend(_prefixed(check_category_laws(category, triples), prefix))
        report.extend(_prefixed(check_monoidal_laws(category, triples), prefix))


def check_algebra_command(descriptions, job, report):
    for description in _require(descriptions, "check-algebra"):
        report.extend(check_algebra(description.algebra()))


def check_bialgebra_command(descriptions, job, report):
    for description in _require(descriptions, "check-bialgebra"):
        report.extend(check_bialgebra(description.bialgebra()))


def check_hopf_command(descriptions, job, report):
    """Bialgebra axioms, both shears, the derived antipode and any declared one"""
    for description in _require(descriptions, "check-hopf"):
        bialgebra = description.bialgebra()
        axioms = check_bialgebra(bialgebra)
        report.extend(axioms)
        if not all(r.passed for r in axioms):
            continue
        try:
            decision = is_hopf(bialgebra, verify=False)
        except ShearDisagreementError as e:
            report.add(refused(f"{bialgebra.name} hopf", e))
            continue
        report.add(decision.to_result(f"{bialgebra.name} hopf"))
        report.add(CheckResult(f"{bialgebra.name} left shear invertible", decision.left.invertible,
                               witness=None if decision.left.invertible else decision.left.witness,
                               detail=decision.left.reason))
        if bialgebra.antipode is not None:
            report.add(replace(check_antipode(bialgebra, bialgebra.antipode),
                               name=f"{bialgebra.name} declared antipode"))
        if not decision.hopf:
            continue
        antipode = _derive(bialgebra, decision, report)
        if antipode is None:
            continue
        report.artifacts[f"{bialgebra.name} antipode"] = antipode
        if description.kind == "monoid":
            inverse = inversion_morphism(description.monoid(), bialgebra.category)
            equal = bialgebra.category.morphisms_equal(antipode, inverse)
            report.add(CheckResult(f"{bialgebra.name} antipode is inversion", equal,
                                   witness=None if equal else {"antipode": antipode, "inversion": inverse}))


def _derive(bialgebra, decision, report):
    try:
        return antipode_from_shear(bialgebra, decision)
    except CatCheckError as e:
        report.add(CheckResult(f"{bialgebra.name} antipode from shear", False, witness=error_witness(e), detail=str(e)))
        return None


def derive_antipode_command(descriptions, job, report):
    """Antipode from the shear inverse, checked, and the shear inverse rebuilt from it"""
    for description in _require(descriptions, "derive-antipode"):
        bialgebra = description.bialgebra()
        try:
            antipode = antipode_from_shear(bialgebra)
        except NotHopfError as e:
            report.add(CheckResult(f"{bialgebra.name} antipode from shear", False, witness=error_witness(e),
                                   detail=str(e)))
            continue
        except PreconditionError as e:
            report.add(CheckResult(f"{bialgebra.name} is a bialgebra", False, witness=error_witness(e), detail=str(e)))
            continue
        report.artifacts[f"{bialgebra.name} antipode"] = antipode
        report.add(replace(check_antipode(bialgebra, antipode), name=f"{bialgebra.name} antipode"))
        try:
            phi = shear_inverse_from_antipode(bialgebra, antipode)
            report.artifacts[f"{bialgebra.name} shear inverse"] = phi
            report.add(CheckResult(f"{bialgebra.name} shear inverse from antipode", True,
                                   detail="two-sided inverse of the right shear"))
        except CatCheckError as e:
            report.add(CheckResult(f"{bialgebra.name} shear inverse from antipode", False, witness=error_witness(e),
                                   detail=str(e)))


def shear_command(descriptions, job, report):
    for description in _require(descriptions, "shear"):
        bialgebra = description.bialgebra()
        report.artifacts[f"{bialgebra.name} right shear"] = right_shear(bialgebra, verify=False)
        report.artifacts[f"{bialgebra.name} left shear"] = left_shear(bialgebra, verify=False)
        report.extend(_prefixed(shear_identities(bialgebra), bialgebra.name))


def coproduct_audit_command(descriptions, job, report):
    """
    R (x) S as the coproduct of commutative algebras, with the insertions
    id (x) eta and eta (x) id, and the pairing pushforward comparison
    """
    algebras = [d.algebra() for d in _require(descriptions, "coproduct-audit")]
    if len(algebras) > 2:
        raise PreconditionError("coproduct-audit takes one or two algebras")
    R = algebras[0]
    S = algebras[-1]
    R, S = replace(R, commutative=True), replace(S, commutative=True)
    if R.category != S.category:
        report.add(refused("coproduct", InstanceMismatchError(f"{R.name} and {S.name} live in different categories")))
        return
    c = R.category
    T = tensor_algebras(R, S)
    f = c.tensor_mor(c.identity(R.carrier), S.eta)
    g = c.tensor_mor(R.eta, c.identity(S.carrier))
    check = coproduct_universal_check(R, S, T, f, g, debug=job.debug)
    report.extend(_prefixed(check.results, f"{T.name} coproduct"))
    report.artifacts[f"{T.name} induced map"] = check.morphism
    comparison = pairing_and_pushforward(R, S, min(job.arity_bound, AUDIT_ARITY), debug=job.debug)
    report.extend(comparison.results)


# ===================================
# Operator pipelines
# ===================================

def operators_audit_command(descriptions, job, report):
    """Operator-category associativity, pointed-map counts and both operads"""
    bound = job.arity_bound
    for description in descriptions or [None]:
        base = _base(description, job)
        population = _population(description, job)
        operators = OperatorCategory(base, job.debug)
        # the full population first, then its first object alone reaches further
        for objects in (population, population[:1]):
            arity = operators.largest_auditable_arity(min(bound, AUDIT_ARITY), objects, spanning=True)
            if arity is None:
                report.artifacts[f"{operators.name} associativity over {len(objects)} objects"] = "beyond enumeration"
                continue
            report.add(operators.audit_associativity(arity, objects, spanning=True))
    report.add(check_pointed_map_counts(bound))
    report.add(check_factorizations(min(bound, AUDIT_ARITY)))
    report.add(check_comm_is_fin_star(bound))
    report.extend(CommOperad(bound).check_laws())
    report.extend(AssocOperad(bound).check_laws(min(bound, AUDIT_ARITY)))
    for operad in (CommOperad(bound), AssocOperad(bound)):
        report.add(OperadOperatorCategory(operad).check_laws(min(bound, OPERATOR_LAW_ARITY)))


def segal_command(descriptions, job, report):
    for description in descriptions or [None]:
        base = _base(description, job)
        operators = OperatorCategory(base, job.debug)
        population = _population(description, job)
        for n in range(1, min(job.arity_bound, AUDIT_ARITY) + 1):
            try:
                report.extend(operators.segal_check(n, population, job.seed))
            except CatCheckError as e:
                report.add(refused(f"segal n={n}", e))


# ===================================
# Simplicial pipelines
# ===================================

def nerve_command(descriptions, job, report):
    for description in _require(descriptions, "nerve"):
        category = description.finite_category()
        report.extend(_prefixed(category.check_laws(), category.name))
        X = nerve(category, job.dim_bound)
        report.extend(X.check_simplicial_identities())
        report.artifacts[f"{X.name} simplices"] = X.counts()
        report.artifacts[f"{X.name} nondegenerate"] = [len(X.nondegenerate(k)) for k in range(X.dimension + 1)]


def horn_audit_command(descriptions, job, report):
    """Inner horns must fill; all horns fill exactly when every arrow is invertible"""
    for description in _require(descriptions, "horn-audit"):
        category = description.finite_category()
        X = nerve(category, job.dim_bound)
        inner = horn_check(X, "inner", debug=job.debug)
        report.add(inner.to_result(f"{X.name} inner horns fill"))
        kan = horn_check(X, "all", debug=job.debug)
        groupoid = all(category.is_invertible(f).invertible for f in category.arrows())
        report.add(CheckResult(f"{X.name} all horns fill iff groupoid", kan.passed == groupoid,
                               witness=None if kan.passed == groupoid else {"groupoid": groupoid,
                                                                             "horn": kan.failure},
                               detail=f"groupoid={groupoid}, kan={kan.passed}"))
        if kan.failure is not None:
            report.artifacts[f"{X.name} unfillable horn"] = kan.failure


def hc_nerve_command(descriptions, job, report):
    """
    Discrete hc-nerves against ordinary nerves, coherent cubes, and the
    adjunction unit; with no input the walking homotopy is used
    """
    dimension = min(job.dim_bound, 3)
    for n in range(1, MAX_CUBE + 1):
        report.extend(coherent_cube(n).check_laws())
    if not descriptions:
        H = LevelwiseSimplicialCategory.walking_homotopy()
        report.extend(H.check_structure())
        hc = HCNerve(H, job.debug)
        report.artifacts["N^s(H) simplices"] = [len(hc.level(k)) for k in range(3)]
        for n in range(3):
            report.add(AdjunctionUnit(n, H).check())
        return
    for description in _require(descriptions, "hc-nerve"):
        category = description.finite_category()
        report.extend(_prefixed(compare_discrete_hc_nerve(category, dimension, debug=job.debug), category.name))
        discrete = LevelwiseSimplicialCategory.discrete(category, max(dimension, 1))
        for n in range(3):
            report.add(replace(AdjunctionUnit(n, discrete, min(dimension, 2)).check(),
                               name=f"{category.name}: unit for n={n} is simplicial"))
        report.extend(_prefixed([product_nerve_comparison(category, min(dimension, 2))], category.name))


# ===================================
# Interchange pipeline
# ===================================

def interchange_audit_command(descriptions, job, report):
    bound = min(job.arity_bound, AUDIT_ARITY)
    for description in _require(descriptions, "interchange-audit"):
        algebra = description.algebra()
        try:
            functor = algebra_functor(algebra, job.arity_bound, job.debug)
        except PreconditionError as e:
            report.add(CheckResult(f"{algebra.name} algebra functor", False, witness=error_witness(e), detail=str(e)))
            continue
        samples = None if _carrier_size(algebra) <= EXHAUSTIVE_CARRIER_SIZE else DEFAULT_POPULATION
        report.add(functor.check_functoriality(bound, job.seed, samples))
        report.extend(functor.check_inert_preservation(bound))
        report.extend(nerve_algebra(functor, min(job.dim_bound, 3)).check(bound, job.seed))
        try:
            mu = homotopy_category_multiplication(functor)
            report.add(CheckResult(f"{functor.name} fold factor is mu", True))
            report.artifacts[f"{functor.name} fold factor"] = mu
        except CatCheckError as e:
            report.add(CheckResult(f"{functor.name} fold factor is mu", False, witness=error_witness(e), detail=str(e)))
        ordered = assoc_algebra_functor(algebra, job.arity_bound, job.debug)
        forward, backward = ordered.fold((0, 1)), ordered.fold((1, 0))
        same = ordered.target.morphisms_equal(forward, backward)
        report.artifacts[f"{algebra.name} orderings of the fold agree"] = same
        if algebra.commutative:
            report.add(CheckResult(f"{algebra.name} orderings agree", same,
                                   witness=None if same else {"(1,2)": forward, "(2,1)": backward}))


# ===================================
# Sweeps and the corpus
# ===================================

def monoid_sweep_command(descriptions, job, report):
    results, rows = monoid_sweep(job.dim_bound, job.prime, job.debug)
    report.extend(results)
    report.artifacts["monoids"] = rows


COMMANDS = {
    "check-monoidal": check_monoidal_command,
    "check-algebra": check_algebra_command,
    "check-bialgebra": check_bialgebra_command,
    "check-hopf": check_hopf_command,
    "derive-antipode": derive_antipode_command,
    "shear": shear_command,
    "operators-audit": operators_audit_command,
    "segal": segal_command,
    "nerve": nerve_command,
    "hc-nerve": hc_nerve_command,
    "horn-audit": horn_audit_command,
    "interchange-audit": interchange_audit_command,
    "coproduct-audit": coproduct_audit_command,
    "monoid-sweep": monoid_sweep_command,
}

# Commands the corpus run applies to each kind of description
CORPUS_COMMANDS = {
    "category": ["check-monoidal", "segal"],
    "algebra": ["check-algebra", "interchange-audit"],
    "bialgebra": ["check-bialgebra", "check-hopf", "derive-antipode", "shear"],
    "monoid": ["check-bialgebra", "check-hopf", "derive-antipode", "shear"],
    "finite-category": ["nerve", "horn-audit", "hc-nerve"],
}


def corpus_commands(description):
    """Commands the corpus run applies to one description"""
    commands = list(CORPUS_COMMANDS[description.kind])
    if description.kind == "algebra" and description.data.get("structure", {}).get("commutative"):
        commands.append("coproduct-audit")
    return commands


def _require(descriptions, command):
    if not descriptions:
        raise PreconditionError(f"{command} needs at least one description file")
    return descriptions


def corpus_directory(job):
    """--corpus, then $CATCHECK_CORPUS, then the corpus shipped next to the script"""
    if job.corpus:
        return Path(job.corpus)
    if os.environ.get(CORPUS_ENV_VAR):
        return Path(os.environ[CORPUS_ENV_VAR])
    return Path(__file__).resolve().parent.parent / "corpus"


def corpus_command(descriptions, job, report):
    """
    Every applicable command on every corpus file; a file's "expect" entry
    gives the exit status a command must produce (default 0)
    """
    for description in descriptions:
        for command in corpus_commands(description):
            sub = Report(command, VERSION, "")
            start = time.perf_counter()
            _dispatch(command, [description], replace(job, command=command), sub)
            report.timings[f"{description.name} {command}"] = time.perf_counter() - start
            expected = description.expect.get(command, 0)
            actual = sub.exit_code()
            failure = next((r for r in sub.results if r.outcome != "pass"), None)
            report.add(CheckResult(f"{Path(description.path).name}: {command} exits {expected}", actual == expected,
                                   witness=None if actual == expected else
                                   {"exit": actual, "first": failure.to_dict() if failure else None},
                                   detail=f"{len(sub.results)} checks"))


def _dispatch(command, descriptions, job, report):
    try:
        COMMANDS[command](descriptions, job, report)
    except SchemaError:
        raise
    except CatCheckError as e:
        report.add(refused(command, e))


def run(command, inputs, options=None):
    """
    Run one command on description files

    Args:
        command (str): a name from COMMANDS or "corpus"
        inputs (list): file paths; names are also looked up in the corpus
        options (dict): JobDescription fields

    Raises:
        SchemaError: an input is missing, empty or malformed
        PreconditionError: invalid options

    Returns:
        Report: exit_code() is 0 when every check passed
    """
    job = JobDescription(command, list(inputs), **(options or {})).validate()
    if command not in COMMANDS and command != "corpus":
        raise PreconditionError(f"unknown command {command!r}")
    corpus = corpus_directory(job)
    paths = [resolve(name, corpus) for name in job.inputs]
    descriptions = [load(path, job.prime) for path in paths]
    if command == "corpus" and not descriptions:
        paths = sorted(corpus.glob("*.json"))
        descriptions = [load(path, job.prime) for path in paths]
    payloads = [d.payload for d in descriptions]
    report = Report(command, VERSION, input_digest(payloads, job.options()), job.options())
    debug_print(job.debug, f"{command}: {len(descriptions)} inputs, options {job.options()}")
    start = time.perf_counter()
    if command == "corpus":
        corpus_command(descriptions, job, report)
    else:
        _dispatch(command, descriptions, job, report)
    report.timings["total"] = time.perf_counter() - start
    return report
