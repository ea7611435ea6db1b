"""Isotopy classes of curves on a schema: admission, intersection, cutting,
band sums.

A CurveClass is keyed by the canonical form of its unoriented free-homotopy
class; for essential simple closed curves on a closed orientable surface
free homotopy and isotopy agree, so the key decides isotopy.  Inessential or
non-simple curves are rejected at admission.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import diagram as D
from . import words as W
from .errors import (ArcIntersectsCurves, BudgetExceeded, MalformedWord,
                     NotDisjoint, ValidationError)
from .schema import SurfaceSchema
from .words import Word


@dataclass(frozen=True)
class CurveClass:
    """An isotopy class of essential simple closed curve."""
    schema: SurfaceSchema
    key: Word

    @property
    def is_separating(self) -> bool:
        return all(p == 0 for p in self.mod2_class)

    @property
    def mod2_class(self) -> tuple[int, ...]:
        return self.schema.mod2_class(self.key)

    @property
    def homology(self) -> tuple[int, ...]:
        return self.schema.homology_class(self.key)

    def word_str(self) -> str:
        return W.word_str(self.key)

    def __repr__(self):
        return f"CurveClass({self.word_str()})"

    def __lt__(self, other):
        return (len(self.key), self.key) < (len(other.key), other.key)


def normalize_curve(word: Word, schema: SurfaceSchema) -> Word:
    """Spur-free, relator-reduced cyclic word in the same class; idempotent."""
    schema.validate_word(word)
    return schema.reduce(tuple(word))


def is_essential(word: Word, schema: SurfaceSchema) -> bool:
    """True iff the curve is not null-homotopic on the closed surface."""
    return schema.canonical_key(tuple(word)) != ()


def _gcd_list(values):
    from math import gcd
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g


@lru_cache(maxsize=100000)
def _simplicity(schema: SurfaceSchema, key: Word):
    """True/False for an essential class.

    Non-primitive nonzero homology is an immediate obstruction; otherwise
    the exact layout search decides.  Raises BudgetExceeded only when the
    layout enumeration is too large (never on the enumeration window).
    """
    hom = schema.homology_class(key)
    if any(hom) and _gcd_list(hom) >= 2:
        return False
    count, _, _ = D.self_intersection(schema, key)
    return count == 0


def is_simple(word: Word, schema: SurfaceSchema) -> bool:
    """True iff the class has an embedded representative."""
    key = schema.canonical_key(tuple(word))
    if key == ():
        raise ValidationError("is_simple expects an essential curve")
    return _simplicity(schema, key)


def simplicity_verdict(word: Word, schema: SurfaceSchema):
    """is_simple that returns None instead of raising on budget exhaustion."""
    key = schema.canonical_key(tuple(word))
    if key == ():
        return False
    try:
        return _simplicity(schema, key)
    except BudgetExceeded:
        return None


def curve_class(word, schema: SurfaceSchema) -> CurveClass:
    """Admit a word as a CurveClass; rejects inessential and non-simple input."""
    if isinstance(word, (str, list)):
        word = schema.parse(word)
    key = schema.canonical_key(tuple(word))
    if key == ():
        raise ValidationError(f"inessential curve rejected: {W.word_str(tuple(word))}")
    if not _simplicity(schema, key):
        raise ValidationError(f"non-simple curve rejected: {W.word_str(tuple(word))}")
    return CurveClass(schema, key)


@lru_cache(maxsize=200000)
def _intersection_cached(schema: SurfaceSchema, k1: Word, k2: Word) -> int:
    return D.intersection_number(schema, k1, k2)


def geometric_intersection(c1: CurveClass, c2: CurveClass,
                           schema: SurfaceSchema | None = None,
                           rng=None) -> int:
    """Minimal transverse intersection number of the two classes."""
    schema = schema or c1.schema
    if rng is not None:
        return D.intersection_number(schema, c1.key, c2.key, rng=rng)
    k1, k2 = sorted((c1.key, c2.key))
    return _intersection_cached(schema, k1, k2)


@dataclass(frozen=True)
class CutComponent:
    genus: int
    scars: tuple[tuple[int, int], ...]   # (curve index, copy index)

    @property
    def n_scars(self):
        return len(self.scars)


@dataclass(frozen=True)
class CutResult:
    components: tuple[CutComponent, ...]
    euler_check: int

    def genus_multiset(self):
        return sorted(c.genus for c in self.components)


def cut_surface(schema: SurfaceSchema, curves, rng=None) -> CutResult:
    """Cut the surface along pairwise disjoint classes (repeats allowed:
    parallel copies).  Components carry genus and scar labels; the chi
    bookkeeping sum over components of (2 - 2 genus - #scars) must equal
    2 - 2 genus(F) and is returned for auditing."""
    curves = list(curves)
    words = [c.key for c in curves]
    diag = D.minimal_overlay(schema, words, rng=rng)
    if diag.total_crossings() != 0:
        raise NotDisjoint("curves do not admit a disjoint realization")
    analysis = D.CutAnalysis(diag)
    comps = []
    for comp in analysis.components:
        scars = []
        for b in comp.boundaries:
            ids = analysis.boundary_curve_ids(b)
            assert len(ids) == 1, "scar traverses several curves"
            side = analysis.boundary_halfedge_directions(b)
            assert len(side) == 1
            scars.append((ids[0], side[0]))
        comps.append(CutComponent(comp.genus, tuple(sorted(scars))))
    total = sum(2 - 2 * c.genus - c.n_scars for c in comps)
    expected = 2 - 2 * schema.genus
    if total != expected:
        raise AssertionError(f"chi bookkeeping failed: {total} != {expected}")
    return CutResult(tuple(sorted(comps, key=lambda c: (c.genus, c.scars))), total)


# ---------------------------------------------------------------------------
# band sums


@dataclass(frozen=True)
class ArcDatum:
    """A band-sum arc given combinatorially.

    attach1/attach2: index into the first/second curve's canonical word;
    the band foot sits on the curve segment following that crossing.
    side1/side2: which side of the (oriented canonical) curve the arc
    leaves from / arrives at, "L" or "R".  word: the arc's own crossing
    tokens from curve 1 to curve 2.
    """
    attach1: int
    side1: str
    attach2: int
    side2: str
    word: Word = ()


def band_sum_word(schema: SurfaceSchema, w1: Word, w2: Word,
                  arc: ArcDatum) -> Word:
    """Crossing word of the band sum along the arc.

    Cutting both curves at the feet and connecting them through the two
    sides of the band traverses the second curve forward when the arc
    leaves and arrives on the same side, backward otherwise.
    """
    if arc.side1 not in ("L", "R") or arc.side2 not in ("L", "R"):
        raise ValidationError("arc sides must be 'L' or 'R'")
    n1, n2 = len(w1), len(w2)
    i = arc.attach1 % n1
    j = arc.attach2 % n2
    loop1 = w1[i + 1:] + w1[:i + 1]
    loop2 = w2[j + 1:] + w2[:j + 1]
    if arc.side1 != arc.side2:
        loop2 = W.inverse(loop2)
    return loop1 + tuple(arc.word) + loop2 + W.inverse(tuple(arc.word))


def band_sum(c1: CurveClass, c2: CurveClass, arc: ArcDatum,
             schema: SurfaceSchema | None = None):
    """Band sum of two disjoint classes along an arc.

    Returns (word, CurveClass or None): the class is None when the result
    is inessential (e.g. parallel copies joined by a trivial arc), which is
    flagged rather than silently dropped.  Raises ArcIntersectsCurves when
    the resulting curve cannot be disjoint from the inputs, which certifies
    the arc could not have avoided them.
    """
    schema = schema or c1.schema
    if geometric_intersection(c1, c2) != 0:
        raise NotDisjoint("band sum requires disjoint curves")
    word = band_sum_word(schema, c1.key, c2.key, arc)
    key = schema.canonical_key(word)
    if key == ():
        return word, None
    if not _simplicity(schema, key):
        raise ArcIntersectsCurves(
            "arc datum does not yield an embedded band sum")
    result = CurveClass(schema, key)
    for c in {c1.key, c2.key}:
        if key != c and _intersection_cached(schema, *sorted((key, c))) != 0:
            raise ArcIntersectsCurves(
                "band sum result cannot avoid the input curves")
    return word, result
