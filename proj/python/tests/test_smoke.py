import json
import pathlib

import pytest

import kleene_energy as ke

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_plus_two_star_is_top_everywhere():
    s = ke.star(load("plus2.json"))
    assert ke.evaluate(s, 0) == "top"
    assert ke.evaluate(s, "bot") == "bot"


def test_identity_omega():
    assert ke.omega(load("identity.json")) == {"tag": "from", "threshold": "0", "inclusive": True}


def test_eval_and_compose():
    f = load("plus2.json")
    assert ke.evaluate(f, "3/2") == "7/2"
    assert ke.evaluate(ke.compose(f, f), 1) == "5"
    assert ke.canonical(ke.join(f, f)) == ke.canonical(f)


def test_pump_queries():
    r = ke.reach(load("pump.json"), 0, verify=True)
    assert r["answer"] and r["oracle"]["answer"]
    b = ke.buchi(load("pump_buchi.json"), 0, verify=True)
    assert b["answer"] and b["oracle"]["answer"]
    assert not ke.buchi(load("decreasing_loop.json"), 100)["answer"]


def test_errors():
    with pytest.raises(ke.ValidationError):
        ke.star(load("half_slope.json"))
    with pytest.raises(ke.ParseError):
        ke.reach((FIXTURES / "malformed.json").read_text())
    with pytest.raises(ke.UnknownIdentity):
        ke.wordcheck("nope")
    assert issubclass(ke.ParseError, ValueError)


def test_laws_pass():
    reports = ke.laws(seed=3, cases=10)
    assert reports and all(r["verdict"] == "Pass" for r in reports)
    assert ke.wordcheck("conway-star", cases=5)["verdict"] == "Pass"


def test_lang_equal():
    assert ke.lang_equal("ab", "(a|b)*", "(a*b)*a*")
    assert not ke.lang_equal("ab", "a*", "(a|b)*")
