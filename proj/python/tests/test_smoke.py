"""Smoke tests for the python bindings; exercises the main entry points."""

import json
import os
import sys

import gauge2verify as gv


def test_simplex_integral():
    # iterated-integration values for low-degree monomials
    assert gv.simplex_monomial_integral([0]) == "1"
    assert gv.simplex_monomial_integral([1]) == "1/2"
    assert gv.simplex_monomial_integral([0, 0]) == "1/2"
    assert gv.simplex_monomial_integral([1, 0]) == "1/6"
    assert gv.simplex_monomial_integral([1, 1]) == "1/24"
    assert gv.simplex_monomial_integral([2, 1]) == "1/60"


def test_validate_builtins():
    for name in ("gl2", "so3", "poincare2"):
        ok, summary = gv.validate_builtin(name)
        assert ok, f"{name}: {summary}"


def test_bianchi():
    assert gv.bianchi_residual_terms("gl2", dim=4, degree=1, seed=3) == 0


def test_scenario_roundtrip():
    text = """
algebra gl 2
pairing symtrace n=1
dim 4
degree 1
seed 11
connection c0 random degree=1
connection c1 random degree=1
suite bianchi
suite chern-weil
"""
    out = gv.run_scenario_text(text, machine=True)
    doc = json.loads(out)
    assert doc["all_pass"], out
    assert any(c["name"].startswith("chern-weil") for c in doc["checks"])
    # determinism: byte-identical machine report on a repeated run
    assert gv.run_scenario_text(text, machine=True) == out
    assert gv.scenario_all_pass(text)


def test_default_scenario_file():
    scen_dir = os.environ.get("GAUGE2_SCENARIOS")
    if not scen_dir:
        return
    human = gv.run_scenario_file(os.path.join(scen_dir, "smoke.scn"), machine=False)
    assert "SUITE PASS" in human, human


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
