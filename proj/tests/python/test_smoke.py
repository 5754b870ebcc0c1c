import os

import pytest

import msk

FIXTURES = os.environ.get("MSK_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def fixture(name):
    return msk.load(os.path.join(FIXTURES, name))


def test_fig2_graph():
    g = fixture("fig2.graph.json")
    assert msk.validate(g) == []
    assert msk.euler_characteristic(g) == 2
    assert msk.face_count(g) == 6


def test_moves_round_trip():
    base = msk.base_sphere()
    moves = msk.enumerate_moves(base)
    assert len(moves) == 2
    g = msk.apply_move(base, moves[0])
    assert msk.validate(g) == []
    assert msk.census_size(6) == 7


def test_connect_fig3():
    a, b = fixture("fig3_left.graph.json"), fixture("fig3_right.graph.json")
    seq = msk.connect(a, b, max_depth=12, max_vertices=10)
    assert seq is not None
    g = a
    for m in seq:
        g = msk.apply_move(g, m)
    assert msk.canonical_code(g) == msk.canonical_code(b)


def test_fig3_persistence():
    a, b = fixture("fig3_left.graph.json"), fixture("fig3_right.graph.json")
    assert msk.barcodes_equal(msk.sublevel_barcode(a), msk.sublevel_barcode(b), strict=True)
    assert not msk.graph_equivalent(a, b)
    assert msk.homologically_equivalent(a, b)


def test_worm_and_shotglass():
    worm, shot = fixture("worm.history.json"), fixture("shotglass.history.json")
    bw, bs = msk.levelset_barcode(worm), msk.levelset_barcode(shot)
    assert msk.barcodes_equal(bw, bs)
    assert not msk.barcodes_equal(bw, bs, strict=True)
    assert not msk.poset_equivalent(worm, shot)
    assert msk.poset_at(worm, 2.5) != msk.poset_at(shot, 2.5)


def test_counting_and_realization():
    b = fixture("nested3.barcode.json")
    assert msk.lower_bound(b) == 8
    hs = msk.enumerate_embeddings(b)
    assert len(hs) >= 8
    for h in hs:
        assert msk.barcodes_equal(msk.levelset_barcode(h), b)
    h = msk.history_from_barcode(fixture("fig17.barcode.json"))
    assert msk.barcodes_equal(msk.levelset_barcode(h), fixture("fig17.barcode.json"))
    assert msk.reeb_dot(b).startswith("graph")
    ok, reason = msk.is_realizable(fixture("sublevel_forbidden.barcode.json"))
    assert not ok and reason


def test_errors():
    with pytest.raises(msk.MalformedInput):
        msk.levelset_barcode({"events": "nope"})
    with pytest.raises(ValueError):
        msk.enumerate_embeddings(fixture("sublevel_forbidden.barcode.json"))
