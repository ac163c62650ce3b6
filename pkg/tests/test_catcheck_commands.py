# tests/test_catcheck_commands.py
import json
import shutil

import pytest

from catcheck_commands import COMMANDS, corpus_commands, run
from catcheck_utils import CORPUS_ENV_VAR, PreconditionError, SchemaError


def names(report):
    return [r.name for r in report.results]


def failed(report):
    return [r.name for r in report.results if not r.passed]


# ---------------------------------------------------------
# Hopf pipelines
# ---------------------------------------------------------

def test_check_hopf_on_a_group_algebra():
    report = run("check-hopf", ["group_algebra_c2.json"])
    assert report.exit_code() == 0, failed(report)
    assert "F_2[C_2] hopf" in names(report)
    assert "F_2[C_2] declared antipode" in names(report)
    assert "F_2[C_2] antipode" in report.artifacts


def test_check_hopf_on_a_monoid_that_is_not_a_group():
    report = run("check-hopf", ["idempotent_monoid.json"])
    assert report.exit_code() == 1
    hopf = next(r for r in report.results if r.name.endswith(" hopf"))
    assert not hopf.passed
    assert "kernel" in hopf.witness


def test_group_in_finite_sets_has_inversion_as_antipode():
    report = run("check-hopf", ["cyclic_group_sets.json"])
    assert report.exit_code() == 0, failed(report)
    assert "C_3 antipode is inversion" in names(report)


def test_derive_antipode():
    report = run("derive-antipode", ["group_algebra_c2.json"])
    assert report.exit_code() == 0, failed(report)
    assert "F_2[C_2] shear inverse" in report.artifacts
    refused_report = run("derive-antipode", ["idempotent_monoid.json"])
    assert failed(refused_report) == ["F_2[E] antipode from shear"]


def test_shear_reports_both_maps():
    report = run("shear", ["idempotent_monoid.json"])
    assert report.exit_code() == 0, failed(report)
    assert sum(key.endswith("shear") for key in report.artifacts) == 2


def test_coproduct_audit():
    report = run("coproduct-audit", ["dual_numbers_f2.json"], {"arity_bound": 2})
    assert report.exit_code() == 0, failed(report)
    assert any(key.endswith("induced map") for key in report.artifacts)


def test_monoid_sweep():
    report = run("monoid-sweep", [], {"dim_bound": 3})
    assert report.exit_code() == 0, failed(report)
    assert len(report.artifacts["monoids"]) == 10


# ---------------------------------------------------------
# Monoidal and operator pipelines
# ---------------------------------------------------------

def test_check_monoidal_defaults_to_matrices():
    assert run("check-monoidal", []).exit_code() == 0


def test_check_monoidal_prefixes_the_description():
    report = run("check-monoidal", ["matrices_f3.json"])
    assert report.exit_code() == 0, failed(report)
    assert all(name.startswith("Mat(F_3): ") for name in names(report))


def test_finite_category_has_no_monoidal_instance():
    report = run("check-monoidal", ["arrow.json"])
    assert report.exit_code() == 1
    assert report.results[-1].refused


def test_operators_audit():
    report = run("operators-audit", [], {"arity_bound": 2})
    assert report.exit_code() == 0, failed(report)
    audits = [r for r in report.results if r.name == "operator composition associativity"]
    assert audits and all("spanning triples" in r.detail for r in audits)


def test_segal():
    report = run("segal", [], {"arity_bound": 2})
    assert report.exit_code() == 0, failed(report)


def test_interchange_audit():
    report = run("interchange-audit", ["dual_numbers_f2.json"], {"arity_bound": 2})
    assert report.exit_code() == 0, failed(report)
    assert report.artifacts["F_2[x]/x^2 orderings of the fold agree"] is True


def test_interchange_audit_sees_the_order_of_a_noncommutative_product():
    report = run("interchange-audit", ["upper_triangular_f2.json"], {"arity_bound": 2})
    assert report.artifacts["T_2(F_2) orderings of the fold agree"] is False


# ---------------------------------------------------------
# Simplicial pipelines
# ---------------------------------------------------------

def test_nerve_artifacts():
    report = run("nerve", ["arrow.json"])
    assert report.exit_code() == 0, failed(report)
    assert report.artifacts["N([1]) simplices"] == [2, 3, 4, 5]
    assert report.artifacts["N([1]) nondegenerate"] == [2, 1, 0, 0]


def test_horn_audit():
    arrow = run("horn-audit", ["arrow.json"])
    assert arrow.exit_code() == 0, failed(arrow)
    assert "N([1]) unfillable horn" in arrow.artifacts
    group = run("horn-audit", ["groupoid_c2.json"])
    assert group.exit_code() == 0, failed(group)
    assert not any(key.endswith("unfillable horn") for key in group.artifacts)


def test_hc_nerve_of_the_walking_homotopy():
    report = run("hc-nerve", [])
    assert report.artifacts["N^s(H) simplices"] == [2, 4, 8]
    assert "c[5] poset sizes" in names(report)


def test_hc_nerve_of_a_finite_category():
    report = run("hc-nerve", ["arrow.json"], {"dim_bound": 2})
    assert report.exit_code() == 0, failed(report)
    assert "[1]: unit for n=2 is simplicial" in names(report)


# ---------------------------------------------------------
# Dispatch and errors
# ---------------------------------------------------------

def test_unknown_command_and_bad_options():
    with pytest.raises(PreconditionError):
        run("check-everything", [])
    with pytest.raises(PreconditionError):
        run("nerve", ["arrow.json"], {"prime": 6})


def test_missing_input_is_refused():
    report = run("check-algebra", [])
    assert report.exit_code() == 1
    assert report.results[0].refused
    assert report.results[0].witness == {"error": "PreconditionError",
                                         "detail": "check-algebra needs at least one description file"}


@pytest.mark.parametrize("command, inputs", [
    ("check-algebra", []),
    ("check-bialgebra", []),
    ("check-hopf", ["idempotent_monoid.json"]),
    ("derive-antipode", ["idempotent_monoid.json"]),
    ("check-monoidal", ["arrow.json"]),
])
def test_failing_reports_carry_a_witness(command, inputs):
    report = run(command, inputs)
    assert report.exit_code() == 1
    failing = [r for r in report.results if r.outcome != "pass"]
    assert failing
    assert all(r.witness is not None for r in failing)
    assert all("witness" in r for r in report.to_dict()["results"] if r["outcome"] != "pass")


def test_missing_file_is_a_schema_error():
    with pytest.raises(SchemaError):
        run("nerve", ["no_such_file.json"])


def test_reports_are_deterministic():
    first = run("check-hopf", ["group_algebra_c2.json"])
    second = run("check-hopf", ["group_algebra_c2.json"])
    assert first.input_digest == second.input_digest
    assert first.to_json(include_timings=False) == second.to_json(include_timings=False)
    assert first.input_digest != run("check-hopf", ["group_algebra_c2.json"], {"seed": 1}).input_digest


# ---------------------------------------------------------
# Corpus
# ---------------------------------------------------------

def test_every_command_is_reachable_from_the_corpus(description):
    reachable = set()
    for name in ("arrow.json", "dual_numbers_f2.json", "group_algebra_c2.json", "matrices_f3.json"):
        reachable.update(corpus_commands(description(name)))
    assert reachable <= set(COMMANDS)
    assert "coproduct-audit" in reachable
    assert "coproduct-audit" not in corpus_commands(description("upper_triangular_f2.json"))


def test_corpus_run_honours_expectations():
    report = run("corpus", ["arrow.json", "idempotent_monoid.json"])
    assert report.exit_code() == 0, failed(report)
    assert "arrow.json: nerve exits 0" in names(report)
    assert "idempotent_monoid.json: check-hopf exits 1" in names(report)


def test_corpus_run_flags_an_unexpected_exit(tmp_path, corpus_path):
    with open(corpus_path("idempotent_monoid.json")) as f:
        data = json.load(f)
    del data["expect"]
    (tmp_path / "idempotent.json").write_text(json.dumps(data))
    report = run("corpus", [], {"corpus": str(tmp_path)})
    assert report.exit_code() == 1
    bad = next(r for r in report.results if not r.passed)
    assert bad.name == "idempotent.json: check-hopf exits 0"
    assert bad.witness["exit"] == 1


def test_corpus_directory_from_the_environment(tmp_path, monkeypatch, corpus_path):
    shutil.copy(corpus_path("arrow.json"), tmp_path / "only.json")
    monkeypatch.setenv(CORPUS_ENV_VAR, str(tmp_path))
    report = run("nerve", ["only.json"])
    assert report.exit_code() == 0
    assert run("corpus", []).results[0].name.startswith("only.json: ")
