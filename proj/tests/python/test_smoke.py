import json
import pathlib

import pytest

import germlab

GERMS = pathlib.Path(__file__).resolve().parents[2] / "data" / "germs"


def test_version_and_schema():
    assert germlab.__version__ == "0.1.0"
    report = germlab.sigma(GERMS / "briancon_speder_f0.json")
    assert report["schema"] == germlab.REPORT_SCHEMA


def test_a_family_verdicts():
    assert germlab.run_command("analyze", GERMS / "a1.json").exit_code == 0
    for k in range(2, 7):
        result = germlab.run_command("analyze", GERMS / f"a{k}.json")
        assert result.exit_code == 10
        assert result.report["analysis"]["verdict"] == "FAST_CYCLE_FOUND"


def test_dict_input_and_assumption_flag():
    germ = json.loads((GERMS / "quadric_cone.json").read_text())
    assert germlab.analyze(germ)["analysis"]["verdict"] == "HYPOTHESES_UNVERIFIED"
    flagged = germlab.analyze(germ, assume_milnor_fibre=True)
    assert flagged["analysis"]["verdict"] == "FAST_CYCLE_FOUND"


def test_sigma_component():
    loc = germlab.sigma(GERMS / "briancon_speder_f0.json")["obstruction_locus"]
    assert loc["is_origin_only"] is False
    assert any(c.get("coordinate_subspace") == "V(x,z)" for c in loc["components"])


def test_newton_and_milnor():
    faces = germlab.newton(GERMS / "x2y3z7.json")["newton"]["top_faces"]
    assert faces[0]["two_lowest_weights_differ"] is True
    assert germlab.milnor(GERMS / "x3y3.json") == 4
    assert germlab.milnor({"variables": ["x", "y"], "equations": ["x^2*y^2"]}) is None
    assert germlab.milnor_number("x^4+y^5", ["x", "y"]) == 12


def test_groebner_helpers():
    basis = germlab.groebner_basis(["x^2-y", "x*y-1"], ["x", "y"])
    assert len(basis) == 3
    assert germlab.krull_dimension(["x*y"], ["x", "y"]) == 1
    with pytest.raises(germlab.BudgetExhausted):
        germlab.groebner_basis(
            ["x^3*y+y^4+x*z", "y^3*z+x^2", "z^3+x*y^2"], ["x", "y", "z"], budget=5
        )


def test_foliate_is_deterministic():
    a = germlab.run_command("foliate", GERMS / "a1_z3.json", epsilon="1/2", samples=8, seed=5)
    b = germlab.run_command("foliate", GERMS / "a1_z3.json", epsilon="1/2", samples=8, seed=5)
    assert a.exit_code == 0
    assert a.report == b.report
    assert a.csv == b.csv and a.csv.startswith("seed,")


def test_errors():
    with pytest.raises(germlab.ParseError):
        germlab.analyze({"variables": ["x"], "equations": ["x^2+*"]})
    with pytest.raises(germlab.GermlabError):
        germlab.newton(GERMS / "non_convenient.json")
    with pytest.raises(ValueError):
        germlab.analyze({"variables": ["x"], "equations": ["x^2"], "colour": "red"})
