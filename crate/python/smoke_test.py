"""Smoke test for the Python bindings.

Build first with `pip install --no-build-isolation -e crates/py`, then run
`python3 python/smoke_test.py`.
"""

import autsurf


def main():
    g = autsurf.Group("metacyclic:13,4,5")
    assert g.order == 52 and len(g) == 52
    assert not g.is_abelian()
    assert g.element_order("b") == 4
    assert g.mul("a", g.inverse("a")) == g.elements()[0]

    sig = autsurf.Signature("0;2,2,4,4")
    assert sig.periods == [2, 2, 4, 4]
    assert sig.surface_genus(g.order) == 14
    assert ("0;2,2,2,4", 2) in sig.extensions()

    vectors = autsurf.generating_vectors(g.spec, str(sig))
    assert vectors and all(len(v) == 4 for v in vectors)
    orbits = autsurf.orbit_classes(g.spec, str(sig), workers=2)
    assert orbits["class_count"] == 1

    report = autsurf.classify(14)
    assert [s["group"] for s in report["strata"]] == ["dihedral:26", "metacyclic:13,4,5"]
    assert report["theorem1_consistent"]

    f2 = autsurf.jacobian("F2", 11)
    genera = sorted(f["genus"] for f in f2["factors"] for _ in range(f["multiplicity"]))
    assert genera == [1, 5, 6] and f2["residual"] == 0

    assert autsurf.boundary(17, "ord8")["subgroup_ok"]
    assert autsurf.counterexample("q8", 5)["genus"] == 11

    try:
        autsurf.classify(9)
    except ValueError:
        pass
    else:
        raise AssertionError("genus 9 should be refused")

    assert all(passed for _, passed, _ in autsurf.selftest())
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
