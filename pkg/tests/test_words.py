from hypothesis import given, settings, strategies as st

from heegaard import words as W
from heegaard.schema import SurfaceSchema

S2 = SurfaceSchema(2)
S3 = SurfaceSchema(3)


def tokens(schema, max_size=12):
    letters = list(range(1, schema.num_letters + 1))
    alphabet = letters + [-x for x in letters]
    return st.lists(st.sampled_from(alphabet), min_size=0, max_size=max_size)


def test_parse_and_str_roundtrip():
    w = S3.parse("a1 B2 A3 b1")
    assert w == (1, -4, -5, 2)
    assert W.word_str(w) == "a1 B2 A3 b1"


def test_free_and_cyclic_reduction():
    assert W.free_reduce((1, -1)) == ()
    assert W.free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert W.cyclic_reduce((1, 2, -1)) == (2,)


def test_dual_relator_structure():
    # each letter appears exactly once with each sign; C'(1/6): no common
    # length-2 subword between distinct cyclic positions of R and R^-1
    for schema in (S2, S3):
        r = schema.dual_relator
        assert len(r) == schema.num_sides
        counts = W.signed_counts(r, schema.num_letters)
        assert all(c == 0 for c in counts)
        seen = set()
        for base in (r, W.inverse(r)):
            n = len(base)
            doubled = base + base
            for i in range(n):
                piece = doubled[i:i + 2]
                assert piece not in seen
                seen.add(piece)


@settings(max_examples=150, deadline=None)
@given(tokens(S3))
def test_canonical_key_idempotent_and_rotation_invariant(w):
    w = tuple(w)
    key = S3.canonical_key(w)
    assert S3.canonical_key(key) == key
    for i in range(len(w)):
        assert S3.canonical_key(w[i:] + w[:i]) == key
    assert S3.canonical_key(W.inverse(w)) == key


@settings(max_examples=100, deadline=None)
@given(tokens(S2, max_size=8), st.data())
def test_canonical_key_conjugacy_invariant(w, data):
    w = tuple(w)
    key = S2.canonical_key(w)
    letters = list(range(1, 5)) + [-x for x in range(1, 5)]
    g = tuple(data.draw(st.lists(st.sampled_from(letters), max_size=4)))
    conj = g + w + W.inverse(g)
    assert S2.canonical_key(conj) == key
    # inserting a relator variant does not change the class
    rel = S2.dual_relator
    pos = data.draw(st.integers(min_value=0, max_value=len(w)))
    stuffed = w[:pos] + rel + w[pos:]
    assert S2.canonical_key(stuffed) == key


def test_trivial_and_essential():
    assert S3.is_trivial(S3.parse("a1 A1"))
    assert S3.is_trivial(S3.dual_relator)
    assert not S3.is_trivial(S3.parse("a1"))


def test_homology_counts():
    w = S3.parse("a1 b2 A1 b2")
    assert S3.homology_class(w) == (0, 0, 0, 2, 0, 0)
    assert S3.mod2_class(w) == (0, 0, 0, 0, 0, 0)


def test_edge_pushoff_classes_agree_on_both_sides():
    for schema in (S2, S3):
        for letter in range(1, schema.num_letters + 1):
            w0 = schema.edge_pushoff_word(letter, 0)
            w1 = schema.edge_pushoff_word(letter, 1)
            assert schema.same_class(w0, w1)
            assert not schema.is_trivial(w0)
