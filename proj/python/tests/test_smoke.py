import json

import pytest

import bicyclic_topology as bt


def test_mul_and_inverse():
    assert bt.mul(bt.Element(2, 3), bt.Element(5, 1)) == bt.Element(4, 1)
    x = bt.Element.parse("q^4 p^7")
    assert bt.inv(x).tuple() == (7, 4)
    assert x * bt.inv(x) * x == x
    assert str(bt.Element(4, 1)) == "q^4 p"


def test_big_exponents_round_trip():
    big = 10**30 + 7
    x = bt.Element(big, 5)
    assert x.i == big
    assert bt.mul(x, bt.Element(7, 2)).tuple() == (big + 2, 2)


def test_parse_error():
    with pytest.raises(ValueError):
        bt.Element.parse("q^x")


def test_regions():
    q = bt.quadrant(3)
    assert bt.Element(5, 3) in q
    assert bt.Element(2, 9) not in q
    assert (q & bt.down_set(bt.Element(1, 2))) == bt.diagonal_tail(bt.Element(1, 2), 2)
    assert (~bt.Region.full()).is_empty()
    assert bt.up_set(bt.Element(9, 4)).cardinality() == 5
    assert bt.down_set(bt.Element(0, 0)).cardinality() is None
    r = bt.Region.from_json(q.to_json())
    assert r == q
    assert [e.tuple() for e in bt.quadrant(2).enumerate(3)] == [(2, 2), (2, 3), (3, 2), (3, 3)]


def test_topology():
    u = bt.basic("tau2", bt.Element(1, 2), 1)
    assert bt.closure("tau2", u) == bt.updown_set(bt.Element(1, 2))
    assert not bt.is_isolated("tau1", bt.Element(0, 0))
    assert bt.is_isolated("discrete", bt.Element(3, 3))
    assert bt.t1_separation("tau1", bt.Element(0, 0), bt.Element(5, 5)) == (6, 1)
    with pytest.raises(ValueError):
        bt.basic("tau9", bt.Element(0, 0), 1)


def test_solvers():
    assert bt.solve_left(bt.Element(0, 1), bt.Element(0, 0)) == [bt.Element(1, 0)]
    s = bt.solve_two_sided(bt.Element(2, 1), bt.Element(0, 2), bt.Element(2, 2))
    assert [e.tuple() for e in s] == [(1, 0)]


def test_reports():
    r = bt.verify("prop3", 3, 10)
    assert r["claim_id"] == "prop3"
    assert r["verdict"] == "verified"
    p1 = bt.verify("prop1", 3, 3)
    assert p1["verdict"] == "counterexample"
    assert p1["parameters"]["corrected_m_failures"] == 0


def test_cli():
    code, out, _ = bt.run_cli(["--format", "json", "mul", "q^2 p^3", "q^5 p^1"])
    assert code == 0
    assert json.loads(out) == {"i": 4, "j": 1}
    code, _, err = bt.run_cli(["mul", "q^x", "1"])
    assert code == 2
    assert "position" in err
