import random

import pytest

from heegaard import curves as C
from heegaard import splitting as S
from heegaard.errors import NotSeparating, ValidationError
from heegaard.schema import SurfaceSchema

S3 = SurfaceSchema(3)


def cc(text):
    return C.curve_class(text, S3)


def dual_handlebody(label, letters):
    return S.SplittingSide(S3, label, "handlebody", [cc(t) for t in letters])


def chain_compression_body():
    pieces = [
        S.TorusPiece("T1", (cc("a1"), cc("b1"))),
        S.TorusPiece("T2", (cc("a2"), cc("b2"))),
        S.TorusPiece("T3", (cc("a3"), cc("b3"))),
    ]
    return S.SplittingSide(S3, "V", "compression-body",
                           [cc("a1 b1 A1 B1"), cc("a3 b3 A3 B3")], pieces)


def test_handlebody_validation():
    dual_handlebody("V", ["a1", "a2", "a3"])
    with pytest.raises(ValidationError):
        dual_handlebody("V", ["a1", "a2"])
    with pytest.raises(ValidationError):
        dual_handlebody("V", ["a1", "a2", "b1"])  # a1 and b1 cross


def test_bounds_disk_handlebody():
    V = dual_handlebody("V", ["a1", "a2", "a3"])
    W = dual_handlebody("W", ["b1", "b2", "b3"])
    assert S.bounds_disk(cc("a1"), V)
    assert not S.bounds_disk(cc("b1"), V)
    assert not S.bounds_disk(cc("a1"), W)
    assert S.bounds_disk(cc("b2"), W)
    # band of two meridians bounds; the handle commutator bounds on both sides
    assert S.bounds_disk(cc("a1 a2"), V)
    assert S.bounds_disk(cc("a1 b1 A1 B1"), V)
    assert S.bounds_disk(cc("a1 b1 A1 B1"), W)
    assert not S.bounds_disk(cc("a1 b2"), V)


def test_bounds_disk_oracle_agreement():
    V = dual_handlebody("V", ["a1", "a2", "a3"])
    CB = chain_compression_body()
    rng = random.Random(3)
    for text in ["a1", "b1", "a1 b1 A1 B1", "b1 a2 B1", "a1 b2", "a2 b2 A2 B2"]:
        c = cc(text)
        for side in (V, CB):
            assert S.bounds_disk_oracle(c, side, rng) == S.bounds_disk(c, side)


def test_compression_body_disk_words():
    CB = chain_compression_body()
    # system members bound; duals do not (nonzero Z^2 content)
    assert S.bounds_disk(cc("a1 b1 A1 B1"), CB)
    assert S.bounds_disk(cc("a3 b3 A3 B3"), CB)
    # the middle-handle commutator is null-homotopic in the product piece
    assert S.bounds_disk(cc("a2 b2 A2 B2"), CB)
    for text in ["a1", "a2", "a3", "b1", "b2", "b3"]:
        assert not S.bounds_disk(cc(text), CB)
    w = S.crossing_word(cc("a2"), CB)
    assert w.tokens and w.tokens[0][0] == "g" and w.tokens[0][1] == "T2"
    assert not w.is_trivial()


def test_crossing_word_examples():
    V = dual_handlebody("V", ["a1", "a2", "a3"])
    # a parallel copy of a cut-system curve has the empty crossing word
    assert S.crossing_word(cc("a1"), V).reduced().tokens == ()
    # the dual handle curve crosses exactly one meridian once
    w = S.crossing_word(cc("b1"), V).reduced()
    assert len(w.tokens) == 1 and w.tokens[0][:2] == ("x", 0)


def test_cuts_off_solid_torus():
    V = dual_handlebody("V", ["a1", "a2", "a3"])
    CB = chain_compression_body()
    sep = S.DiskClass(cc("a1 b1 A1 B1"), "V")
    assert S.cuts_off_solid_torus(sep, V) is True
    assert S.cuts_off_solid_torus(sep, CB) is False
    nonsep = S.DiskClass(cc("a1"), "V")
    with pytest.raises(NotSeparating):
        S.cuts_off_solid_torus(nonsep, V)


def test_homology_invariants():
    V = dual_handlebody("V", ["a1", "a2", "a3"])
    W = dual_handlebody("W", ["b1", "b2", "b3"])
    sp = S.Splitting(S3, V, W)
    assert sp.homology_invariants() == (0, [])
    CB = chain_compression_body()
    W2 = dual_handlebody("W", ["b1", "b2", "b3"])
    sp2 = S.Splitting(S3, CB, W2)
    rank, torsion = sp2.homology_invariants()
    assert rank == 3 and torsion == []


def test_enumerate_disks_contains_system_and_monotone():
    V = dual_handlebody("V", ["a1", "a2", "a3"])
    small = S.enumerate_disks(V, max_len=1, band_depth=0)
    assert {d.word_str() for d in small} == {"A1", "A2", "A3"}
    bigger = S.enumerate_disks(V, max_len=2, band_depth=0)
    keys_small = {d.key for d in small}
    keys_big = {d.key for d in bigger}
    assert keys_small <= keys_big
    deeper = S.enumerate_disks(V, max_len=2, band_depth=1)
    assert keys_big <= {d.key for d in deeper}
    # dedup soundness
    for ds in (small, bigger, deeper):
        keys = [d.key for d in ds]
        assert len(keys) == len(set(keys))


def test_enumerate_disks_loop_theorem_surrogate():
    V = dual_handlebody("V", ["a1", "a2", "a3"])
    disks = S.enumerate_disks(V, max_len=3, band_depth=0)
    kernel = V.kernel_rows()
    from heegaard import intmat
    for d in disks:
        assert intmat.saturation_contains(kernel, list(d.boundary.homology))


def test_splitting_json_roundtrip():
    CB = chain_compression_body()
    W = dual_handlebody("W", ["b1", "b2", "b3"])
    sp = S.Splitting(S3, CB, W)
    data = sp.to_json()
    sp2 = S.Splitting.from_json(data)
    assert [c.key for c in sp2.V.cut_system] == [c.key for c in sp.V.cut_system]
    assert [c.key for c in sp2.W.cut_system] == [c.key for c in sp.W.cut_system]
    assert [p.piece_id for p in sp2.V.pieces] == ["T1", "T2", "T3"]
