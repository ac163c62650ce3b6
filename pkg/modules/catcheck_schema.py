#!/usr/bin/env python3
"""
CatCheck Description Files

Parser for the catcheck/v1 JSON schema. A description names its kind, an
instance (matrices over F_p or Q, or finite sets), named objects and
morphisms, and the structure maps built from them.

    {
      "schema": "catcheck/v1",
      "kind": "bialgebra",
      "name": "F_2[C_2]",
      "instance": {"type": "matrix", "prime": 2},
      "objects": {"R": 2},
      "morphisms": {
        "mu": {"from": ["R", "R"], "to": ["R"], "matrix": [[1, 0, 0, 1], [0, 1, 1, 0]]},
        ...
      },
      "structure": {"carrier": "R", "mu": "mu", "eta": "eta",
                    "delta": "delta", "epsilon": "epsilon", "commutative": true}
    }

Kinds: category, algebra, bialgebra, monoid, finite-category. Errors carry
path, line and the violated rule.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict

from catcheck_algebra import AlgebraStructure, BialgebraPresentation, linearize_monoid, monoid_bialgebra
from catcheck_monoidal import FiniteCategory, FiniteSet, FiniteSetCategory, MatrixCategory, ScalarRing
from catcheck_monoids import FiniteMonoid
from catcheck_utils import CatCheckError, SchemaError, SCHEMA_TAG, DEFAULT_PRIME

KINDS = ("category", "algebra", "bialgebra", "monoid", "finite-category")
INSTANCE_TYPES = ("matrix", "finite-set")


def _line_of(text, key):
    """First line mentioning "key", or None"""
    needle = f'"{key}"'
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


@dataclass
class Description:
    """A parsed description file; builders turn it into library objects"""
    path: str
    payload: bytes
    data: Dict[str, Any]
    text: str = ""
    category: Any = None
    objects: Dict[str, Any] = field(default_factory=dict)
    morphisms: Dict[str, Any] = field(default_factory=dict)
    prime: int = DEFAULT_PRIME

    @property
    def kind(self):
        return self.data["kind"]

    @property
    def name(self):
        return self.data.get("name", Path(self.path).stem)

    @property
    def expect(self):
        return self.data.get("expect", {})

    def error(self, key, rule):
        return SchemaError(self.path, _line_of(self.text, key), rule)

    # ----- structures -----

    def _structure(self):
        structure = self.data.get("structure")
        if not isinstance(structure, dict):
            raise self.error("kind", f"kind {self.kind!r} requires a \"structure\" object")
        return structure

    def _named(self, structure, role, required=True):
        name = structure.get(role)
        if name is None:
            if required:
                raise self.error("structure", f"structure.{role} is required")
            return None
        if name not in self.morphisms:
            raise self.error(role, f"structure.{role} names unknown morphism {name!r}")
        return self.morphisms[name]

    def _carrier(self, structure):
        carrier = structure.get("carrier")
        if carrier not in self.objects:
            raise self.error("carrier", f"structure.carrier names unknown object {carrier!r}")
        return self.objects[carrier]

    def monoid(self):
        if self.kind != "monoid":
            raise self.error("kind", f"a monoid description is required, got {self.kind!r}")
        try:
            return FiniteMonoid(self.data["table"], self.data.get("labels", ()), self.name).validate()
        except CatCheckError as e:
            raise self.error("table", f"table is not a monoid: {e}")

    def algebra(self):
        """AlgebraStructure of an algebra, bialgebra or monoid description"""
        if self.kind in ("bialgebra", "monoid"):
            return self.bialgebra().algebra()
        if self.kind != "algebra":
            raise self.error("kind", f"an algebra description is required, got {self.kind!r}")
        structure = self._structure()
        return AlgebraStructure(self.category, self._carrier(structure), self._named(structure, "mu"),
                                self._named(structure, "eta"), bool(structure.get("commutative", False)),
                                self.name)

    def bialgebra(self):
        if self.kind == "monoid":
            monoid = self.monoid()
            if isinstance(self.category, FiniteSetCategory):
                return monoid_bialgebra(monoid)
            return linearize_monoid(monoid, self.category.ring.characteristic)
        if self.kind != "bialgebra":
            raise self.error("kind", f"a bialgebra description is required, got {self.kind!r}")
        structure = self._structure()
        return BialgebraPresentation(
            self.category, self._carrier(structure), self._named(structure, "mu"), self._named(structure, "eta"),
            self._named(structure, "delta"), self._named(structure, "epsilon"),
            antipode=self._named(structure, "antipode", required=False),
            commutative=bool(structure.get("commutative", False)),
            cocommutative=bool(structure.get("cocommutative", False)), name=self.name)

    def finite_category(self):
        if self.kind != "finite-category":
            raise self.error("kind", f"a finite-category description is required, got {self.kind!r}")
        data = self.data
        if "linear-order" in data:
            return FiniteCategory.linear_order(data["linear-order"], name=self.name)
        if "monoid" in data:
            spec = data["monoid"]
            try:
                monoid = FiniteMonoid(spec["table"], spec.get("labels", ()), self.name).validate()
            except (CatCheckError, KeyError, TypeError) as e:
                raise self.error("monoid", f"monoid is not a valid table: {e}")
            labels = [monoid.label(a) for a in range(monoid.size)]
            return FiniteCategory.from_monoid(monoid.table, labels, monoid.unit, name=self.name)
        for key in ("objects", "arrows"):
            if key not in data:
                raise self.error("kind", f"finite-category requires {key!r}, \"linear-order\" or \"monoid\"")
        arrows = {}
        for arrow_name, ends in data["arrows"].items():
            if not (isinstance(ends, list) and len(ends) == 2):
                raise self.error(arrow_name, f"arrow {arrow_name!r} must be [source, target]")
            arrows[arrow_name] = tuple(ends)
        composition = {}
        for entry in data.get("composition", []):
            if not (isinstance(entry, list) and len(entry) == 3):
                raise self.error("composition", "composition entries are [g, f, g o f]")
            composition[(entry[0], entry[1])] = entry[2]
        try:
            category = FiniteCategory(data["objects"], arrows, composition, name=self.name)
        except (CatCheckError, KeyError) as e:
            raise self.error("arrows", f"inconsistent category tables: {e}")
        return category


# ===================================
# Parsing
# ===================================

def _instance(description, prime):
    data = description.data
    instance = data.get("instance", {"type": "matrix"})
    if not isinstance(instance, dict) or instance.get("type") not in INSTANCE_TYPES:
        raise description.error("instance", f"instance.type must be one of {', '.join(INSTANCE_TYPES)}")
    if instance["type"] == "finite-set":
        return FiniteSetCategory()
    if instance.get("field") == "Q":
        return MatrixCategory(ScalarRing.rationals())
    p = instance.get("prime", prime)
    try:
        return MatrixCategory(ScalarRing.prime_field(p))
    except CatCheckError:
        raise description.error("prime", f"instance.prime {p!r} is not prime")


def _object(description, name, value):
    category = description.category
    if isinstance(category, FiniteSetCategory):
        labels = ()
        if isinstance(value, dict):
            labels = tuple(value.get("labels", ()))
            value = value.get("size", len(labels))
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise description.error(name, f"object {name!r} must be a non-negative size")
        try:
            return FiniteSet(value, labels)
        except CatCheckError as e:
            raise description.error(name, str(e))
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise description.error(name, f"object {name!r} must be a non-negative dimension")
    return value


def _tensor(description, names, key):
    category = description.category
    if isinstance(names, str):
        names = [names]
    objects = []
    for name in names:
        if name not in description.objects:
            raise description.error(key, f"morphism {key!r} refers to unknown object {name!r}")
        objects.append(description.objects[name])
    return category.tensor_objects(objects)


def _morphism(description, name, spec):
    category = description.category
    if not isinstance(spec, dict) or "from" not in spec or "to" not in spec:
        raise description.error(name, f"morphism {name!r} needs \"from\" and \"to\" object lists")
    source = _tensor(description, spec["from"], name)
    target = _tensor(description, spec["to"], name)
    try:
        if isinstance(category, FiniteSetCategory):
            if "table" not in spec:
                raise description.error(name, f"finite-set morphism {name!r} needs a \"table\"")
            return category.function(source, target, spec["table"])
        if "matrix" not in spec:
            raise description.error(name, f"matrix morphism {name!r} needs a \"matrix\"")
        return category.matrix(spec["matrix"], shape=(target, source))
    except SchemaError:
        raise
    except CatCheckError as e:
        raise description.error(name, f"morphism {name!r}: {e}")


def parse_bytes(payload, path="<input>", prime=DEFAULT_PRIME):
    """
    Parse one description

    Raises:
        SchemaError: empty input, invalid JSON, wrong schema tag or kind, or
            structure maps of the wrong shape
    """
    text = payload.decode("utf-8", errors="replace")
    if not text.strip():
        raise SchemaError(path, None, "file is empty")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(path, e.lineno, f"invalid JSON: {e.msg}")
    if not isinstance(data, dict):
        raise SchemaError(path, 1, "top level must be an object")
    description = Description(str(path), payload, data, text)
    if data.get("schema") != SCHEMA_TAG:
        raise description.error("schema", f"schema must be {SCHEMA_TAG!r}")
    if data.get("kind") not in KINDS:
        raise description.error("kind", f"kind must be one of {', '.join(KINDS)}")
    if description.kind == "finite-category":
        return description
    description.category = _instance(description, prime)
    if isinstance(description.category, MatrixCategory):
        description.prime = description.category.ring.characteristic
    if description.kind == "monoid":
        if not isinstance(data.get("table"), list):
            raise description.error("kind", "a monoid description needs a \"table\"")
        return description
    objects = data.get("objects", {})
    if not isinstance(objects, dict):
        raise description.error("objects", "objects must map names to sizes")
    description.objects = {name: _object(description, name, value) for name, value in objects.items()}
    morphisms = data.get("morphisms", {})
    if not isinstance(morphisms, dict):
        raise description.error("morphisms", "morphisms must map names to definitions")
    description.morphisms = {name: _morphism(description, name, spec) for name, spec in morphisms.items()}
    if description.kind in ("algebra", "bialgebra"):
        try:
            built = description.algebra() if description.kind == "algebra" else description.bialgebra()
            built = built if description.kind == "algebra" else built.algebra()
            built.validate()
        except SchemaError:
            raise
        except CatCheckError as e:
            raise description.error("structure", str(e))
    return description


def load(path, prime=DEFAULT_PRIME):
    path = Path(path)
    try:
        payload = path.read_bytes()
    except OSError as e:
        raise SchemaError(path, None, f"cannot read file: {e.strerror}")
    return parse_bytes(payload, str(path), prime)


def resolve(name, corpus=None):
    """A path as given, or relative to the corpus directory"""
    path = Path(name)
    if path.exists() or corpus is None:
        return path
    candidate = Path(corpus) / name
    return candidate if candidate.exists() else path
