import pytest

import defext


def test_fixtures_load():
    assert defext.fixture_names() == ["ex1", "ex2", "ex3_r3", "ex3_r4", "ex3_r5", "ex4", "ex5"]
    s = defext.Session.fixture("ex1")
    assert s.dim == 9
    assert s.degree == 6
    assert "a3*a4" in s.basis


def test_cocycle_and_resolution():
    s = defext.Session.fixture("ex1")
    assert defext.cocycle_check(s).text.startswith("cocycle: PASS")
    r = defext.resolve(s, "4", over="deformed", degree=2, method="theorem")
    assert r.ok
    assert r.data["terms"] == [["4"], ["4", "2", "3"], ["4", "2", "3", "1"]]
    assert r.data["agrees_with_generic"] is True


def test_ext_dims_identity():
    r = defext.ext_dims(defext.Session.fixture("ex2"), over="deformed", degree=4)
    assert r.data["dims"] == [2, 4, 6, 8, 10]
    assert r.data["identity_holds"] is True


def test_yoneda_methods_agree():
    s = defext.Session.fixture("ex2")
    products = {m: defext.yoneda(s, "1:[1 0|0 0]", "1:[0 0|1 0]", method=m).data["product"]
                for m in ("formula", "structured", "generic")}
    assert len(set(products.values())) == 1


def test_errors_are_typed():
    with pytest.raises(defext.InputError, match="line 2"):
        defext.Session.parse("name = 1\n[quiver\n")
    with pytest.raises(defext.MathError, match="StarNotCertified"):
        defext.resolve(defext.Session.fixture("ex5"), "1", over="deformed", method="theorem")
    assert defext.star_check(defext.Session.fixture("ex4"), "2").exit_code == 1


def test_dot():
    assert defext.emit_dot(defext.Session.fixture("ex3_r3")).count("->") == 1
