#!/usr/bin/env python3
"""
CatCheck Utility Functions

Shared defaults, the exception hierarchy, check results and reports.
"""

import hashlib
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

# ANSI color codes
RED = '\033[0;31m'
GREEN = '\033[0;32m'
YELLOW = '\033[1;33m'
NC = '\033[0m'  # No Color

VERSION = "1.0.0"
SCHEMA_TAG = "catcheck/v1"

DEFAULT_PRIME = 2
DEFAULT_ARITY_BOUND = 4
DEFAULT_DIM_BOUND = 3
DEFAULT_SEED = 0
DEFAULT_POPULATION = 100

# Largest hom-set the enumerators will materialize
HOM_ENUMERATION_LIMIT = 1 << 16

CORPUS_ENV_VAR = "CATCHECK_CORPUS"


# ===================================
# Exceptions
# ===================================

class CatCheckError(ValueError):
    """Base class for every error raised by CatCheck"""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CompositionError(CatCheckError):
    """Codomain of the inner morphism differs from the domain of the outer one"""


class InstanceMismatchError(CatCheckError):
    """Morphisms or objects from two different category instances were mixed"""


class ShapeError(CatCheckError):
    """A structure morphism does not have the domain/codomain it must have"""


class ArityBoundError(CatCheckError):
    """An operad operation beyond the configured arity bound was requested"""


class DimensionBoundError(CatCheckError):
    """An enumeration or simplicial dimension exceeds its configured bound"""


class PreconditionError(CatCheckError):
    """An operation was called on input that fails its precondition checks"""


class NotAlgebraMapError(PreconditionError):
    """A morphism expected to be an algebra map is not one"""


class NotHopfError(CatCheckError):
    """The shear map is not invertible; witness holds the kernel or collision"""


class NotAGroupError(PreconditionError):
    """A monoid table has an element without inverse"""


class ShearDisagreementError(CatCheckError):
    """Exactly one of the right and left shear maps is invertible"""


class SchemaError(CatCheckError):
    """A description file violates the catcheck/v1 schema"""

    def __init__(self, path, line, rule):
        location = f"{path}:{line}" if line else str(path)
        super().__init__(f"{location}: {rule}")
        self.path = str(path)
        self.line = line
        self.rule = rule


# ===================================
# Results and reports
# ===================================

@dataclass
class CheckResult:
    """Outcome of a single decision, with a witness when it is negative"""
    name: str
    passed: bool
    witness: Any = None
    detail: str = ""
    refused: bool = False

    @property
    def outcome(self):
        if self.refused:
            return "refused"
        return "pass" if self.passed else "fail"

    def to_dict(self):
        data = {"name": self.name, "outcome": self.outcome}
        if self.detail:
            data["detail"] = self.detail
        if self.witness is not None:
            data["witness"] = to_jsonable(self.witness)
        return data


def error_witness(error):
    """The error's own witness, or its type and message when it carries none"""
    witness = getattr(error, "witness", None)
    if witness is None:
        return {"error": type(error).__name__, "detail": str(error)}
    return witness


def refused(name, error):
    """Build a refused CheckResult from a CatCheckError"""
    return CheckResult(name, False, witness=error_witness(error), detail=str(error), refused=True)


def all_passed(results):
    return all(r.passed and not r.refused for r in results)


def first_failure(results):
    for result in results:
        if not result.passed or result.refused:
            return result
    return None


def to_jsonable(value):
    """
    Convert witnesses and artifacts into plain JSON values

    Morphisms provide ``to_json()``; fractions become "a/b" strings so rational
    entries round-trip through the schema.
    """
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(to_jsonable(v) for v in value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


@dataclass
class Report:
    """
    Machine-readable result of one CLI job

    Timings live in their own section; ``deterministic_view`` drops them, and
    everything else is a function of inputs and options only.
    """
    command: str
    version: str
    input_digest: str
    options: Dict[str, Any] = field(default_factory=dict)
    results: List[CheckResult] = field(default_factory=list)
    artifacts: Dict[str, Any] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    def add(self, result):
        self.results.append(result)
        return result

    def extend(self, results):
        self.results.extend(results)

    @property
    def passed(self):
        return all_passed(self.results)

    def exit_code(self):
        return 0 if self.passed else 1

    def deterministic_view(self):
        return self.to_dict(include_timings=False)

    def to_dict(self, include_timings=True):
        data = {
            "command": self.command,
            "version": self.version,
            "input_digest": self.input_digest,
            "options": to_jsonable(self.options),
            "summary": {
                "total": len(self.results),
                "passed": sum(1 for r in self.results if r.outcome == "pass"),
                "failed": sum(1 for r in self.results if r.outcome == "fail"),
                "refused": sum(1 for r in self.results if r.outcome == "refused"),
            },
            "results": [r.to_dict() for r in self.results],
            "artifacts": to_jsonable(self.artifacts),
        }
        if include_timings:
            data["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return data

    def to_json(self, include_timings=True):
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True,
                          ensure_ascii=False)

    def render_text(self, color=False, include_timings=True):
        """Render the report as the structured text block printed by the CLI"""
        ok = f"{GREEN}✓{NC}" if color else "✓"
        bad = f"{RED}✗{NC}" if color else "✗"
        warn = f"{YELLOW}⚠{NC}" if color else "⚠"

        lines = ["=" * 80, f"CATCHECK REPORT: {self.command}", "=" * 80]
        lines.append(f"version      : {self.version}")
        lines.append(f"input digest : {self.input_digest}")
        for key in sorted(self.options):
            lines.append(f"option       : {key} = {to_jsonable(self.options[key])}")
        lines.append("-" * 40)
        for result in self.results:
            marker = {"pass": ok, "fail": bad, "refused": warn}[result.outcome]
            line = f"{marker} {result.name}"
            if result.detail:
                line += f" ({result.detail})"
            lines.append(line)
            if result.witness is not None and result.outcome != "pass":
                rendered = json.dumps(to_jsonable(result.witness), sort_keys=True,
                                      ensure_ascii=False)
                lines.append(f"    witness: {rendered}")
        if self.artifacts:
            lines.append("-" * 40)
            for key in sorted(self.artifacts):
                rendered = json.dumps(to_jsonable(self.artifacts[key]), sort_keys=True,
                                      ensure_ascii=False)
                lines.append(f"{key}: {rendered}")
        summary = self.to_dict(include_timings=False)["summary"]
        lines.append("=" * 80)
        lines.append(f"{summary['passed']}/{summary['total']} checks passed, "
                     f"{summary['failed']} failed, {summary['refused']} refused")
        if include_timings and self.timings:
            lines.append("timings:")
            for key in sorted(self.timings):
                lines.append(f"  {key:30}: {self.timings[key]:.6f}s")
        return "\n".join(lines)


# ===================================
# Job description
# ===================================

def is_prime(n):
    """Trial-division primality test"""
    if not isinstance(n, int) or n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass
class JobDescription:
    """Command name, inputs and options of one CLI invocation"""
    command: str
    inputs: List[str] = field(default_factory=list)
    prime: int = DEFAULT_PRIME
    arity_bound: int = DEFAULT_ARITY_BOUND
    dim_bound: int = DEFAULT_DIM_BOUND
    report_format: str = "text"
    seed: int = DEFAULT_SEED
    corpus: Optional[str] = None
    debug: bool = False

    def validate(self):
        """
        Check bounds and the prime

        Raises:
            PreconditionError: on a non-positive bound, an unknown format or a
                composite "prime"
        """
        for name in ("arity_bound", "dim_bound"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise PreconditionError(f"{name} must be a positive integer, got {value!r}")
        if not is_prime(self.prime):
            raise PreconditionError(f"--prime {self.prime} is not prime")
        if self.report_format not in ("text", "json"):
            raise PreconditionError(f"unknown report format {self.report_format!r}")
        return self

    def options(self):
        return {
            "prime": self.prime,
            "arity_bound": self.arity_bound,
            "dim_bound": self.dim_bound,
            "seed": self.seed,
        }


def input_digest(payloads, options):
    """
    Stable sha256 digest over input file bytes and options

    Args:
        payloads (list): raw bytes of each input, in command-line order
        options (dict): job options

    Returns:
        str: hex digest
    """
    digest = hashlib.sha256()
    for payload in payloads:
        digest.update(hashlib.sha256(payload).digest())
    digest.update(json.dumps(options, sort_keys=True).encode("utf-8"))
    return digest.hexdigest()


def debug_print(enabled, message):
    if enabled:
        print(f"DEBUG: {message}", file=sys.stderr)


def status_print(message, kind="info", color=True):
    """Print a status line with the usual markers to stderr"""
    markers = {
        "ok": f"{GREEN}✓{NC}" if color else "✓",
        "fail": f"{RED}✗{NC}" if color else "✗",
        "warn": f"{YELLOW}⚠{NC}" if color else "⚠",
    }
    prefix = markers.get(kind)
    print(f"{prefix} {message}" if prefix else message, file=sys.stderr)
