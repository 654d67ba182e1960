import json

import pytest

from qschur_hh.algebra import build_A_e
from qschur_hh.linalg import GF, QQ
from qschur_hh.resolution import (REPAIR_SPACE, Repair, ResolutionError, _assemble_paper_complex,
                                  cached_paper_resolution, complex_from_json, complex_to_json,
                                  ext_simple_dims, find_repair, generator_multiset,
                                  generic_minimal_resolution, paper_differential, paper_resolution,
                                  paper_resolution_term, verify_complex)


def test_term_shapes_small():
    assert paper_resolution_term(2, 0) == [(1, 1), (2, 2)]
    assert paper_resolution_term(2, 1) == [(1, 2), (2, 1)]
    assert paper_resolution_term(2, 2) == [(2, 2)]
    assert paper_resolution_term(2, 3) == []
    assert paper_resolution_term(3, 2) == [(2, 2), (3, 3), (1, 3), (3, 1)]


@pytest.mark.parametrize("e", range(2, 7))
def test_terms_stop_at_global_dimension(e):
    for n in range(2 * e + 2):
        assert bool(paper_resolution_term(e, n)) == (n <= 2 * (e - 1))
    assert paper_resolution_term(e, 2 * (e - 1)) == [(e, e)]


@pytest.mark.parametrize("e", range(2, 6))
def test_generic_resolution_matches_shape(e):
    A = build_A_e(e)
    gen = generic_minimal_resolution(A, 2 * e)
    assert gen.info["complete"]
    assert gen.length == 2 * (e - 1)
    for n in range(2 * e + 1):
        got = generator_multiset(gen.generators(n)) if n <= gen.length else {}
        assert got == generator_multiset(paper_resolution_term(e, n))
    assert verify_complex(gen).ok


def test_first_differential_on_generator():
    d1 = paper_differential(3, 1)
    g = d1.source.generators.index((1, 2))
    assert d1.target.format(d1.images[g]) == "-1*e1(x)b1@(1, 1) + 1*b1(x)e2@(2, 2)"


@pytest.mark.parametrize("e", range(2, 6))
def test_repaired_resolution_verifies(e):
    rpt = verify_complex(paper_resolution(e))
    assert rpt.dd_ok and rpt.exact_ok and rpt.minimal_ok


def test_repair_choices():
    assert find_repair(4).repair == Repair("resolution", "resolution", "shifted")
    assert find_repair(5).passing == [Repair("resolution", "resolution", "shifted")]
    assert find_repair(2).repair == Repair("resolution", "printed", "printed")
    assert find_repair(3).repair == Repair("resolution", "resolution", "printed")


def test_unrepaired_print_fails():
    A = build_A_e(4)
    rpt = verify_complex(_assemble_paper_complex(A, 4, Repair("resolution", "resolution", "printed")))
    assert not rpt.dd_ok
    with pytest.raises(ResolutionError, match="no printed branch"):
        _assemble_paper_complex(build_A_e(5), 5, Repair("resolution", "resolution", "printed"))
    failures = [r for r in REPAIR_SPACE if r not in find_repair(5).passing]
    assert len(failures) == len(REPAIR_SPACE) - 1


@pytest.mark.parametrize("p", [2, 3])
def test_resolution_over_prime_fields(p):
    assert verify_complex(paper_resolution(4, GF(p))).ok


def test_ext_between_simples():
    A = build_A_e(3)
    table = [[ext_simple_dims(A, i, j, 1) for j in (1, 2, 3)] for i in (1, 2, 3)]
    assert table == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


def test_ext_matches_bimodule_generators():
    # P(i,j) multiplicity in R_n equals dim Ext^n(S_j, S_i)
    e = 4
    A = build_A_e(e)
    for n in range(4):
        mult = generator_multiset(paper_resolution_term(e, n))
        for i in range(1, e + 1):
            for j in range(1, e + 1):
                assert mult.get((i, j), 0) == ext_simple_dims(A, j, i, n)


def test_json_round_trip_and_cache(tmp_path):
    cx = paper_resolution(3)
    doc = json.loads(json.dumps(complex_to_json(cx, 3)))
    back = complex_from_json(doc)
    for n in range(1, cx.length + 1):
        assert back.maps[n].matrix() == cx.maps[n].matrix()
    path = tmp_path / "res.json"
    cx1, r1, hit1 = cached_paper_resolution(3, QQ, path)
    cx2, r2, hit2 = cached_paper_resolution(3, QQ, path)
    assert (hit1, hit2) == (False, True)
    assert r1.to_json() == r2.to_json()
    assert complex_to_json(cx1, 3, r1) == complex_to_json(cx2, 3, r2)
    # a cache for another e is ignored
    _, _, hit3 = cached_paper_resolution(2, QQ, path)
    assert not hit3


def test_bad_cache_document():
    with pytest.raises(ResolutionError):
        complex_from_json({"format": "other"})
