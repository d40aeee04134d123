"""Smoke test for the pycrlab extension.

Build and install first:  maturin develop -m crates/python/Cargo.toml
"""
import json

import pycrlab


def main():
    tw, cr, ia = pycrlab.construct_family("bose-bush", q=4)
    assert (tw.n, tw.k, tw.q) == (6, 3, 4)
    assert ia == "{18, 15; 1, 6}"
    assert tw.weight_distribution() == {0: 1, 4: 45, 6: 18}
    assert cr.covering_radius() == 2
    assert cr.intersection_array() == ([18, 15], [1, 6])

    report = json.loads(cr.report_json())
    assert report["schema"] == 1
    assert "CR.4" in report["family_matches"]

    back = pycrlab.Code.from_gfc(cr.to_gfc())
    assert back.same_code(cr) and not back.same_code(tw)
    assert back.dual().k == 3

    _, ham, _ = pycrlab.construct_family("ext-hamming", m=3)
    assert ham.intersection_array() == ([8, 7], [1, 8])

    assert len(pycrlab.dm(2, 1, 1)) == 4
    assert pycrlab.arcs(5, 7) == (False, None)
    assert pycrlab.arcs(4, 6, count=True) == (True, 168)
    assert "CR.4" in pycrlab.classify(4, 3, 6)

    cond = json.loads(pycrlab.conditions(4, 6, 64, 4, k=3))
    assert cond["thm41"]["right_equality"]

    try:
        pycrlab.construct_family("bose-bush", q=5)
    except ValueError as e:
        assert "odd q" in str(e)
    else:
        raise AssertionError("odd q accepted")

    print("pycrlab smoke test: ok")


if __name__ == "__main__":
    main()
