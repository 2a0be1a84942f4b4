# SPDX-License-Identifier: MPL-2.0
import pytest

from metta_kb.api import MettaRuntime
from metta_kb.atoms import render
from metta_kb.errors import ParseError, ProgramIOError
from metta_kb.schema.config import EvalConfig
from metta_kb.space import AtomSpace

ROBOTS = """
(Sam is a frog)
(Tom is a cat)
(Sophia is a robot)
!(match &self ($x is a robot) (I know $x the robot))
"""


def test_run_source_reports_every_directive(runtime):
    report = runtime.run_source(ROBOTS, origin="robots")
    assert report.origin == "robots"
    assert report.status == "COMPLETED_SUCCESS"
    assert report.atoms_added == 3
    assert [d.line for d in report.directives] == ["[(I know Sophia the robot)]"]
    assert report.directives[0].directive == (
        "(match &self ($x is a robot) (I know $x the robot))"
    )
    assert report.end_time is not None
    assert report.duration_seconds >= 0


def test_directives_are_not_stored(runtime):
    runtime.run_source("(a b)\n!(a b)")
    assert runtime.dump() == "(a b)\n"


def test_program_order_is_respected(runtime):
    report = runtime.run_source("!(f)\n(= (f) late)\n!(f)")
    assert [d.line for d in report.directives] == ["[(f)]", "[late]"]


def test_error_results_mark_the_report(runtime):
    report = runtime.run_source("!(/ 1 0)\n!(+ 1 1)")
    assert report.status == "COMPLETED_WITH_ERRORS"
    assert report.has_errors
    assert [d.has_error for d in report.directives] == [True, False]


def test_listener_interleaves_with_printed_output():
    events = []
    runtime = MettaRuntime(printer=lambda text: events.append(f"printed {text}"))
    runtime.run_source(
        '!(println! "first")\n!(+ 1 2)',
        listener=lambda directive: events.append(directive.line),
    )
    assert events == ['printed "first"', "[()]", "[3]"]


def test_state_persists_between_runs(runtime):
    runtime.run_source("(= (greeting) hello)")
    report = runtime.run_source("!(greeting)")
    assert report.atoms_added == 0
    assert report.directives[0].line == "[hello]"


def test_parse_errors_propagate(runtime):
    with pytest.raises(ParseError) as excinfo:
        runtime.run_source("(Sam is a frog")
    assert excinfo.value.line == 1
    assert len(runtime.space) == 0


def test_run_file(runtime, metta_file):
    path = metta_file(ROBOTS)
    report = runtime.run_file(path)
    assert report.origin == str(path)
    assert report.directives[0].line == "[(I know Sophia the robot)]"


def test_run_file_missing(runtime, tmp_path):
    with pytest.raises(ProgramIOError) as excinfo:
        runtime.run_file(tmp_path / "absent.metta")
    assert "absent.metta" in excinfo.value.message


def test_run_file_rejects_undecodable_bytes(runtime, tmp_path):
    path = tmp_path / "binary.metta"
    path.write_bytes(b"(a \xff)")
    with pytest.raises(ProgramIOError):
        runtime.run_file(path)


def test_evaluate_source_treats_every_form_as_directive(runtime):
    report = runtime.evaluate_source("(+ 1 2) (* 2 3)")
    assert report.atoms_added == 0
    assert [d.line for d in report.directives] == ["[3]", "[6]"]
    assert len(runtime.space) == 0


def test_add_source_stores_without_evaluating(runtime):
    assert runtime.add_source("(= (f) (+ 1 2)) (f)") == 2
    assert runtime.dump() == "(= (f) (+ 1 2))\n(f)\n"


def test_add_source_rejects_directives(runtime):
    with pytest.raises(ParseError):
        runtime.add_source("(kept? no) !(f)")
    assert len(runtime.space) == 0


def test_deeply_nested_directive_is_reported(runtime):
    nested = "(a " * 1500 + "z" + ")" * 1500
    report = runtime.run_source("!" + nested)
    assert report.directives[0].line == f"[{nested}]"
    assert report.status == "COMPLETED_SUCCESS"


def test_evaluate_accepts_text_or_atoms(runtime):
    runtime.add_source("(parent Tom Bob) (parent Bob Ann)")
    results = runtime.evaluate("(match &self (parent $x $y) $x)")
    assert [render(r.atom) for r in results] == ["Tom", "Bob"]
    [result] = runtime.evaluate(results[0].atom)
    assert render(result.atom) == "Tom"


def test_evaluate_returns_bindings_of_the_query_variables(runtime):
    runtime.add_source("(= (pick) A) (= (pick) B)")
    results = runtime.evaluate("(match &self (= (pick) $v) $v)")
    assert [render(r.bindings.resolve(r.atom)) for r in results] == ["A", "B"]


def test_runtime_over_an_existing_space():
    space = AtomSpace(indexed=False)
    runtime = MettaRuntime(space=space, printer=lambda text: None)
    runtime.run_source("(Tom is a cat)\n!(add-atom &self (Sam is a frog))")
    assert len(space) == 2
    assert runtime.space is space


def test_runtime_honours_evaluation_config():
    runtime = MettaRuntime(
        EvalConfig(max_depth=3, typecheck_enabled=True), printer=lambda text: None
    )
    report = runtime.run_source(
        "(: Z Nat)\n(: S (-> Nat Nat))\n!(S \"zero\")\n(= (loop) (loop))\n!(loop)"
    )
    assert [d.line for d in report.directives] == [
        '[(Error (S "zero") Nat)]',
        "[(Error (loop) StackOverflow)]",
    ]
