import json

import mppa

A2 = json.dumps({"vertices": ["1", "2"], "edges": [{"id": "e", "src": "1", "tgt": "2"}]})
JORDAN = json.dumps({"vertices": ["o"], "edges": [{"id": "e", "src": "o", "tgt": "o"}], "q": {"o": "3"}})


def test_normal_form():
    assert mppa.nf("a2loc", "estar*e*l") == "id(1) - l"
    assert mppa.nf("laurent", "x*xinv + x") == "id(o) + x"


def test_suite_runs():
    results = mppa.verify(["invrels", "interval"])
    assert len(results) == 10
    assert all(r["passed"] for r in results)


def test_negative_control():
    results = mppa.verify(["laurent"], flip_connes_sign=True)
    assert not all(r["passed"] for r in results)


def test_moment_and_upsilon():
    mu = mppa.moment_map(A2)
    assert mu == {"1": "l_e", "2": "id(2) + e*estar"}
    dg = json.loads(mppa.build_upsilon(JORDAN))
    assert dg["q"] == {"o": "3"}
    assert "zprime_o" in dg["differential"]


def test_oracle_and_errors():
    assert mppa.oracle_equals("a2loc", "a2inv*e", "e*a1inv")
    assert not mppa.oracle_equals("a2loc", "e", "estar")
    try:
        mppa.nf("a2loc", "e*(")
    except mppa.MppaError:
        pass
    else:
        raise AssertionError("parse error not raised")


def test_critical_pairs():
    assert all(j for _, j in mppa.critical_pairs("a2loc"))


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
    print("python smoke tests passed")
