import random

import pytest
from hypothesis import given, settings, strategies as st

from heegaard import curves as C
from heegaard import diagram as D
from heegaard.errors import ArcIntersectsCurves, NotDisjoint, ValidationError
from heegaard.schema import SurfaceSchema

S2 = SurfaceSchema(2)
S3 = SurfaceSchema(3)


def words(schema, max_size=8):
    letters = list(range(1, schema.num_letters + 1))
    alphabet = letters + [-x for x in letters]
    return st.lists(st.sampled_from(alphabet), min_size=1, max_size=max_size)


def admit(schema, text_or_word):
    return C.curve_class(text_or_word, schema)


def test_normalize_examples():
    assert C.normalize_curve(S3.parse("a1 A1"), S3) == ()
    assert C.normalize_curve(S3.parse("a1"), S3) == (1,)
    assert C.normalize_curve(S3.parse("a1 b1 B1"), S3) == (1,)
    w = S3.parse("a2 B3")
    assert C.normalize_curve(C.normalize_curve(w, S3), S3) == C.normalize_curve(w, S3)


def test_essential_examples():
    assert not C.is_essential((), S3)
    assert C.is_essential(S3.parse("a1"), S3)
    # boundary of a genus-1 subsurface is essential though null-homologous
    assert C.is_essential(S3.parse("a1 b1 A1 B1"), S3)


def test_simplicity_values():
    # frozen from the taut-position engine; a1 b1 a1 is the slope-(2,1)
    # curve in the handle and is embedded
    assert C.is_simple(S2.parse("a1"), S2)
    assert C.is_simple(S2.parse("a1 b1 a1"), S2)
    assert C.is_simple(S2.parse("a1 b1 A1 B1"), S2)
    assert not C.is_simple(S2.parse("a1 a1"), S2)
    assert not C.is_simple(S2.parse("a1 a1 b1 b1"), S2)
    assert not C.is_simple(S2.parse("a1 b1 A1 b1"), S2)


def test_admission_rejects_bad_curves():
    with pytest.raises(ValidationError):
        C.curve_class("a1 A1", S3)
    with pytest.raises(ValidationError):
        C.curve_class("a1 a1", S3)


def test_intersection_fixed_values():
    a1, b1 = admit(S3, "a1"), admit(S3, "b1")
    a2 = admit(S3, "a2")
    assert C.geometric_intersection(a1, b1) == 1
    assert C.geometric_intersection(a1, a2) == 0
    assert C.geometric_intersection(a1, a1) == 0
    comm = admit(S3, "a1 b1 A1 B1")
    assert C.geometric_intersection(comm, a1) == 0
    assert C.geometric_intersection(comm, b1) == 0
    assert C.geometric_intersection(comm, a2) == 0


def test_cut_fixed_values():
    # one non-separating curve: one component, genus 2, two scars
    r = C.cut_surface(S3, [admit(S3, "a1")])
    assert [(c.genus, c.n_scars) for c in r.components] == [(2, 2)]
    # separating curve bounding a genus-1 side
    r = C.cut_surface(S3, [admit(S3, "a1 b1 A1 B1")])
    assert sorted((c.genus, c.n_scars) for c in r.components) == [(1, 1), (2, 1)]
    # separating + non-separating inside the genus-1 side: pair of pants
    r = C.cut_surface(S3, [admit(S3, "a1 b1 A1 B1"), admit(S3, "a1")])
    assert (0, 3) in {(c.genus, c.n_scars) for c in r.components}


def test_cut_rejects_crossing_curves():
    with pytest.raises(NotDisjoint):
        C.cut_surface(S3, [admit(S3, "a1"), admit(S3, "b1")])


def test_separating_iff_cut_disconnects():
    for text in ("a1", "a2 b2", "a1 b1 A1 B1", "a1 a2"):
        c = admit(S3, text)
        r = C.cut_surface(S3, [c])
        assert c.is_separating == (len(r.components) >= 2)


def test_band_sum_examples():
    a1, a2 = admit(S3, "a1"), admit(S3, "a2")
    w, cls = C.band_sum(a1, a1, C.ArcDatum(0, "L", 0, "R"))
    assert cls is None  # inessential, flagged
    w, cls = C.band_sum(a1, a1, C.ArcDatum(0, "L", 0, "R", S3.parse("b1")))
    assert cls is not None and cls.is_separating
    assert C.is_essential(cls.key, S3)
    w, cls = C.band_sum(a1, a2, C.ArcDatum(0, "L", 0, "L"))
    assert cls is not None
    assert cls.mod2_class == tuple((x + y) % 2 for x, y in
                                   zip(a1.mod2_class, a2.mod2_class))
    with pytest.raises(ArcIntersectsCurves):
        C.band_sum(a1, a1, C.ArcDatum(0, "L", 0, "L"))
    with pytest.raises(NotDisjoint):
        C.band_sum(admit(S3, "a1"), admit(S3, "b1"), C.ArcDatum(0, "L", 0, "L"))


@settings(max_examples=40, deadline=None)
@given(words(S2, max_size=6), words(S2, max_size=6), st.integers(0, 2 ** 32 - 1))
def test_intersection_symmetric_and_order_independent(w1, w2, seed):
    w1, w2 = tuple(w1), tuple(w2)
    if not (C.is_essential(w1, S2) and C.is_essential(w2, S2)):
        return
    if not (C.is_simple(w1, S2) and C.is_simple(w2, S2)):
        return
    c1, c2 = C.curve_class(w1, S2), C.curve_class(w2, S2)
    n = C.geometric_intersection(c1, c2)
    assert C.geometric_intersection(c2, c1) == n
    rng = random.Random(seed)
    assert C.geometric_intersection(c1, c2, rng=rng) == n
    if n == 0:
        C.cut_surface(S2, [c1] if c1.key == c2.key else [c1, c2])


@settings(max_examples=30, deadline=None)
@given(words(S3, max_size=5))
def test_chi_bookkeeping_on_single_cuts(w):
    w = tuple(w)
    if not C.is_essential(w, S3) or not C.is_simple(w, S3):
        return
    r = C.cut_surface(S3, [C.curve_class(w, S3)])
    assert r.euler_check == 2 - 2 * S3.genus


def test_signed_pairing_matches_symplectic_structure():
    # dual curves of the same handle pair to +-1, different handles to 0
    for g, schema in ((2, S2), (3, S3)):
        for i in range(g):
            a = schema.parse([2 * i + 1])
            b = schema.parse([2 * i + 2])
            assert abs(D.signed_pairing(schema, a, b)) == 1
            for j in range(g):
                if i != j:
                    other = schema.parse([2 * j + 1])
                    assert D.signed_pairing(schema, a, other) == 0
