"""Smoke test for the Python bindings. Run after `pip install ./crates/py`."""

import json

import nczero as nz


def main():
    f = nz.Poly("1 - [x1,x2]", 2)
    assert f.degree == 2 and not f.is_homogeneous()
    assert str(f.cyclic_reduce()) == "1"

    x = nz.MatTuple.weyl(4)
    assert nz.rank(f, x) == 1
    assert nz.evaluate(f, x)[3][3] == "4"
    assert nz.MatTuple.from_json(x.to_json()).n == 4

    y = nz.MatTuple([[[0, "1/2"], [0, 0]], [[1, 0], [0, -1]]])
    assert y.d == 2 and y.direct_sum(y).n == 4

    assert nz.pi_test(nz.standard_poly(4), 2)
    assert not nz.pi_test(nz.standard_poly(3), 2)

    x1, x2 = nz.Poly("x1", 2), nz.Poly("x2", 2)
    c = nz.member_left([x1], x2 * x1)
    assert c.decision == "member" and c.verify()
    c = nz.member_left([x1], x1 * x2)
    assert c.decision == "not_member" and c.verify()
    again = nz.Certificate.from_json(c.to_json())
    assert again.verify() and json.loads(again.to_json())["kind"] == "left_ideal"

    c = nz.member_hom([nz.Poly("x1^2", 1)], nz.Poly("x1", 1))
    assert c.decision == "not_member" and c.verify()

    c = nz.member_trace([f], x1)
    assert c is not None and c.verify()
    assert nz.member_trace([x1], x2) is None

    c = nz.member_span([x1, x2], x1 ** 2, seed=1)
    assert c is not None and c.decision == "not_member" and c.verify()

    assert nz.composition_coefficients(nz.Poly("(x1*x2)^2 - 2", 2), x1 * x2) == ["-2", "0", "1"]
    c = nz.member_comp(x2, x1, seed=1)
    assert c is not None and c.verify()

    g = nz.Poly("x1*x2*x1 + x1", 2)
    certs = nz.factorize(g)
    assert len(certs) == 2 and all(c.verify() for c in certs)
    assert sorted(len(fs) for fs in nz.factors(g)) == [2, 2]

    c = nz.stable_assoc(nz.Poly("x1*x2 + 1", 2), nz.Poly("x2*x1 + 1", 2))
    assert c.decision == "yes" and c.verify()

    c = nz.detzero([nz.Poly("x1*x2 + 1", 2)], nz.Poly("x1*(x2*x1 + 1)", 2))
    assert c.decision == "yes" and c.verify()

    objective, point, r = nz.lowrank_search(f, 3, 1, seed=2024)
    assert objective < 1e-12 and r == 1 and nz.rank(f, point) == 1

    assert nz.known_witness_ranks() == [1, 1]

    try:
        nz.Poly("x3", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range variable accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
