"""Smoke tests for the python bindings: a few exact values per entry point."""

import pytest

import liext


def test_catalog_round_trip():
    names = liext.catalog_names()
    assert "sl2" in names and "gl2" in names and "perfect5" in names
    text = liext.catalog_algebra("sl2")
    assert text.startswith("algebra sl2\nfield Q\ndim 3\n")
    verdict = liext.check(text)
    assert verdict["passed"] is True
    assert verdict["dim"] == 3
    assert verdict["field"] == "Q"


def test_check_rejects_non_lie():
    bad = "algebra x\nfield Q\ndim 3\n[1,2] = 1*3\n[1,3] = 1*1\n[2,3] = 1*2\n"
    verdict = liext.check(bad)
    assert verdict["passed"] is False
    assert "jacobi fail" in verdict["report"]


def test_format_error_carries_line():
    with pytest.raises(liext.FormatError) as err:
        liext.check("algebra x\nfield Q\ndim 2\n[2,1] = 1*1\n")
    assert "(line 4)" in str(err.value)


def test_derivation_and_lambda_dims():
    sl2 = liext.catalog_algebra("sl2")
    assert liext.derivation_dims(sl2) == {"der": 3, "inner": 3, "outer": 0}
    perfect5 = liext.catalog_algebra("perfect5")
    assert liext.derivation_dims(perfect5) == {"der": 6, "inner": 5, "outer": 1}
    gl2 = liext.catalog_algebra("gl2")
    assert liext.lambda_dim(gl2) == 1
    assert liext.lambda_dim(sl2) == 0
    # The twisted space on the trace line keeps dimension 4, scale or no scale.
    for q in ("0", "1", "2", "-1"):
        lam = ",".join(q if k in (0, 3) else "0" for k in range(4))
        assert liext.dspace_dim(gl2, lam) == 4


def test_pair_check_and_equivalence():
    sl2 = liext.catalog_algebra("sl2")
    inner = "lambda 0 0 0\nd 0 0 -2\nd 0 0 0\nd 0 1 0\n"
    zero = "lambda 0 0 0\nd 0 0 0\nd 0 0 0\nd 0 0 0\n"
    assert liext.check_pair(sl2, inner)["passed"] is True
    witness = liext.equivalent(sl2, inner, zero)
    assert witness is not None and witness["q"] == "1"
    assert witness["g0"] == ["1", "0", "0"]
    assert liext.cohomologous(sl2, inner, zero) == ["1", "0", "0"]


def test_codim1_and_extract_round_trip():
    gl2 = liext.catalog_algebra("gl2")
    trace = "\n".join(["1 0 0 1", "0 0 0 0", "0 0 0 0", "1 0 0 1"]) + "\n"
    ext = liext.codim1(gl2, "1,0,0,1", trace)
    assert liext.check(ext)["passed"] is True
    assert liext.check(ext)["dim"] == 5
    datum = liext.extract(ext, 4)
    assert "dimV 1" in datum
    # A nonzero functional on a perfect algebra violates the first law.
    sl2 = liext.catalog_algebra("sl2")
    zero3 = "0 0 0\n0 0 0\n0 0 0\n"
    with pytest.raises(liext.AxiomFailure):
        liext.codim1(sl2, "1,0,0", zero3)


def test_product_kinds():
    datum = (
        "algebra a1\nfield Q\ndim 1\ndimV 2\ncocycle 1,2 = 1*1\n"
    )
    heis = liext.product(datum, "unified")
    assert liext.check(heis)["passed"] is True

    def body(text):  # identical bracket tables; the name records the kind
        return text.split("\n", 1)[1]

    assert body(liext.product(datum, "twisted")) == body(heis)
    assert body(liext.product(datum, "crossed")) == body(heis)
    with pytest.raises(liext.SolverError):
        liext.product(datum, "diagonal")


def test_census_and_bijection():
    assert liext.census(2, "abelian:1") == {
        "raw": 16,
        "valid": 4,
        "cross_check_failures": 0,
        "orbits_equiv": 0,
        "orbits_cohom": 0,
    }
    equiv = liext.census(2, "abelian:1", relation="equiv")
    assert equiv["orbits_equiv"] == 3
    cohom = liext.census(3, "abelian:1", dimv=1, relation="cohom", threads=2)
    assert cohom["valid"] == 9 and cohom["orbits_cohom"] == 5
    report = liext.bijection(3, "abelian:1")
    assert report == {"data": 9, "pairs": 9, "match": True}
