"""Sides of a Heegaard splitting: disk-bounding tests and disk enumeration.

A side is specified purely by surface data: a cut system of disk-bounding
curve classes, plus (for a compression body) the torus pieces of its minus
boundary with a fixed basis pair of curves per piece.  Whether a curve
bounds a disk in a side is the word problem for the curve's crossing
sequence with the cut system: trivial in the free group for a handlebody,
trivial in the free product of the pieces' Z^2 groups for a compression
body; by the loop theorem this equals bounding an embedded disk.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import curves as C
from . import diagram as D
from . import intmat
from . import words as W
from .curves import ArcDatum, CurveClass
from .errors import (BudgetExceeded, NotSeparating, ValidationError)
from .schema import SurfaceSchema
from .words import Word


@dataclass(frozen=True)
class TorusPiece:
    """One torus component of a compression body's minus boundary, tied to a
    genus-1 piece of the cut-open surface via a fixed basis pair of curves."""
    piece_id: str
    basis: tuple[CurveClass, CurveClass]


class SplittingSide:
    """One side (V or W) of a Heegaard splitting."""

    HANDLEBODY = "handlebody"
    COMPRESSION_BODY = "compression-body"

    def __init__(self, schema: SurfaceSchema, label: str, kind: str,
                 cut_system, pieces=(), check: bool = True):
        self.schema = schema
        self.label = label
        self.kind = kind
        self.cut_system: list[CurveClass] = list(cut_system)
        self.pieces: list[TorusPiece] = list(pieces)
        if check:
            self.validate()

    # -- validation ----------------------------------------------------------

    def validate(self):
        if self.kind not in (self.HANDLEBODY, self.COMPRESSION_BODY):
            raise ValidationError(f"unknown side kind {self.kind!r}")
        keys = [c.key for c in self.cut_system]
        if len(set(keys)) != len(keys):
            raise ValidationError("cut system curves must be pairwise non-isotopic")
        for c1, c2 in itertools.combinations(self.cut_system, 2):
            if C.geometric_intersection(c1, c2) != 0:
                raise ValidationError("cut system curves must be disjoint")
        cut = C.cut_surface(self.schema, self.cut_system)
        if self.kind == self.HANDLEBODY:
            if self.pieces:
                raise ValidationError("handlebody has no minus boundary")
            if len(self.cut_system) != self.schema.genus:
                raise ValidationError("handlebody cut system needs genus many disks")
            if len(cut.components) != 1 or cut.components[0].genus != 0:
                raise ValidationError(
                    "cut system does not cut the surface to a planar piece")
        else:
            comps = cut.components
            if len(comps) != len(self.pieces) or not self.pieces:
                raise ValidationError(
                    "compression body needs one genus-1 piece per torus")
            if any(c.genus != 1 for c in comps):
                raise ValidationError("compression body pieces must have genus 1")
            seen = set()
            for piece in self.pieces:
                b1, b2 = piece.basis
                comp1 = self._component_of(b1)
                comp2 = self._component_of(b2)
                if comp1 != comp2:
                    raise ValidationError(
                        f"basis curves of {piece.piece_id} lie in different pieces")
                if comp1 in seen:
                    raise ValidationError("two pieces share a component")
                seen.add(comp1)
                if C.geometric_intersection(b1, b2) != 1:
                    raise ValidationError(
                        f"basis pair of {piece.piece_id} must intersect once")

    def _component_of(self, probe: CurveClass):
        """Index of the cut-system complement component containing `probe`."""
        words = [c.key for c in self.cut_system] + [probe.key]
        diag = D.minimal_overlay(self.schema, words)
        if diag.total_crossings() != 0:
            raise ValidationError("probe curve crosses the cut system")
        analysis = D.CutAnalysis(diag, cut_curves=range(len(self.cut_system)))
        return analysis.component_of_curve(len(self.cut_system))

    # -- homology ------------------------------------------------------------

    def kernel_rows(self):
        """Integer row span whose saturation is ker(H1(F) -> H1(side))."""
        return [list(c.homology) for c in self.cut_system]

    def homology_admits_disk(self, c: CurveClass) -> bool:
        """Necessary condition for bounding: [c] dies in H1(side; Q)."""
        return intmat.saturation_contains(self.kernel_rows(), list(c.homology))

    # -- serialization ---------------------------------------------------------

    def to_json(self, curve_ids):
        data = {"kind": self.kind,
                "cutSystem": [curve_ids[c.key] for c in self.cut_system]}
        if self.pieces:
            data["minusBoundary"] = [
                {"piece": p.piece_id, "kind": "torus"} for p in self.pieces]
        return data

    def __repr__(self):
        return (f"SplittingSide({self.label}, {self.kind}, "
                f"|system|={len(self.cut_system)})")


@dataclass(frozen=True)
class CrossingWord:
    """Cyclic crossing sequence of a curve with a side's cut system.

    Tokens: ("x", j, s) crossing disk j with sign s; ("g", piece, (m, n))
    for the Z^2 class of a sub-arc inside a compression-body piece.
    """
    tokens: tuple

    def reduced(self) -> "CrossingWord":
        toks = list(self.tokens)
        changed = True
        while changed and toks:
            changed = False
            # merge adjacent piece letters, drop zeros (cyclically)
            out = []
            for t in toks:
                if (t[0] == "g" and out and out[-1][0] == "g"
                        and out[-1][1] == t[1]):
                    prev = out.pop()
                    merged = ("g", t[1], (prev[2][0] + t[2][0],
                                          prev[2][1] + t[2][1]))
                    out.append(merged)
                    changed = True
                else:
                    out.append(t)
            toks = [t for t in out if not (t[0] == "g" and t[2] == (0, 0))]
            if len(toks) != len(out):
                changed = True
            if len(toks) >= 2 and toks[0][0] == "g" and toks[-1][0] == "g" \
                    and toks[0][1] == toks[-1][1]:
                first, last = toks[0], toks[-1]
                merged = ("g", first[1], (first[2][0] + last[2][0],
                                          first[2][1] + last[2][1]))
                toks = [merged] + toks[1:-1]
                changed = True
                continue
            # cancel adjacent opposite disk crossings (cyclically)
            n = len(toks)
            for i in range(n):
                j = (i + 1) % n
                if n >= 2 and toks[i][0] == "x" and toks[j][0] == "x" \
                        and toks[i][1] == toks[j][1] \
                        and toks[i][2] == -toks[j][2]:
                    if j > i:
                        toks = toks[:i] + toks[j + 1:]
                    else:
                        toks = toks[1:i]
                    changed = True
                    break
        return CrossingWord(tuple(toks))

    def is_trivial(self) -> bool:
        return not self.reduced().tokens


def _system_placement(side: SplittingSide):
    """Disjoint placement of the cut system, cached on the side."""
    if "_system_layout" not in side.__dict__:
        diag = D.disjoint_overlay(side.schema, [s.key for s in side.cut_system])
        side._system_layout = D.layout_of(diag)
    return side._system_layout


def _curve_over_system(side: SplittingSide, key):
    """Layout of one extra curve placed against the system only (reduced
    moving the new curve; the system placement is never modified)."""
    base_words, base_layout = _system_placement(side)
    diag = D.insert_curve(side.schema, base_words, base_layout, key)
    return D.layout_of(diag)


def _overlay_with_system(side: SplittingSide, c: CurveClass):
    """Merged diagram: system + probe + basis curves.

    The probe and each basis curve are positioned against the system
    independently (each rigorously minimal against it), then interleaved
    gap by gap between the fixed system slots.  Mutual crossings between
    probe and basis curves are whatever the interleaving forces; only
    their signed counts are read, and those are position-independent once
    each basis curve is disjoint from the system.
    """
    schema = side.schema
    base_words, base_layout = _system_placement(side)
    n_sys = len(base_words)
    extra_keys = [c.key]
    for piece in side.pieces:
        extra_keys += [piece.basis[0].key, piece.basis[1].key]
    cache = side.__dict__.setdefault("_over_system", {})
    placements = []
    for key in extra_keys:
        if key not in cache:
            cache[key] = _curve_over_system(side, key)
        placements.append(cache[key])

    all_words = list(base_words) + [pl[0][n_sys] for pl in placements]
    merged = {}
    for letter in range(1, schema.num_letters + 1):
        base_entries = base_layout.get(letter, [])
        per_gap = [[] for _ in range(len(base_entries) + 1)]
        for pi, (p_words, p_layout) in enumerate(placements):
            gap = 0
            for (ci, pos) in p_layout.get(letter, []):
                if ci < n_sys:
                    gap += 1
                else:
                    per_gap[gap].append((n_sys + pi, pos))
        out = []
        for g in range(len(base_entries) + 1):
            out.extend(per_gap[g])
            if g < len(base_entries):
                out.append(base_entries[g])
        merged[letter] = out
    diag = D.place_curves(schema, all_words, merged)
    # probe lives at index n_sys; reorder so callers see it as curve 0
    return diag, n_sys


def _token_sign(diag, cid, role_of_probe):
    """Crossing sign relative to (probe direction, other direction)."""
    sign = diag.crossing_signs[cid]
    return sign if role_of_probe == 0 else -sign


def crossing_word(c: CurveClass, side: SplittingSide) -> CrossingWord:
    """Cyclic sequence of signed crossings of c with the side's cut system,
    interleaved for compression bodies with the Z^2 classes of the sub-arcs
    inside the torus pieces (read off the fixed basis curves)."""
    cached = side.__dict__.setdefault("_crossing_words", {})
    if c.key in cached:
        return cached[c.key]
    diag, probe = _overlay_with_system(side, c)
    n_sys = len(side.cut_system)
    events = diag.curves[probe]
    passages = diag.crossing_pairs()

    def other_passage(cid, j):
        ps = passages[cid]
        others = [(ci, k) for ci, k in ps if (ci, k) != (probe, j)]
        assert len(others) == 1
        return others[0][0]

    basis_info = {}
    for pi in range(len(side.pieces)):
        basis_info[probe + 1 + 2 * pi] = (pi, 0)
        basis_info[probe + 1 + 2 * pi + 1] = (pi, 1)

    segment_piece = {}
    if side.pieces:
        analysis = D.CutAnalysis(diag, cut_curves=range(n_sys),
                                 boundaries=False)
        comp_piece = {}
        for pi in range(len(side.pieces)):
            ci = probe + 1 + 2 * pi
            comp = analysis.component_of_curve(ci)
            if analysis.component_of_curve(ci + 1) != comp:
                raise ValidationError("basis pair split across pieces")
            comp_piece[comp] = pi
        for j in range(len(events)):
            comp = analysis.component_of_face[
                analysis.face_of[(("c", probe, j), 0)]]
            segment_piece[j] = comp_piece.get(comp)

    n = len(events)
    sys_events = []
    basis_hits = {}
    for j, ev in enumerate(events):
        if ev[0] != D.E_CROSS:
            continue
        cid, role = ev[1], ev[2]
        oc = other_passage(cid, j)
        sign = _token_sign(diag, cid, role)
        if oc < n_sys:
            sys_events.append((j, oc, sign))
        elif oc in basis_info:
            basis_hits[j] = (basis_info[oc], sign)

    tokens = []
    if not sys_events:
        if side.pieces:
            m = sum(s for (pi, which), s in basis_hits.values() if which == 0)
            nn = sum(s for (pi, which), s in basis_hits.values() if which == 1)
            piece = segment_piece[0]
            if piece is None:
                raise ValidationError("curve segment outside all pieces")
            tokens.append(("g", side.pieces[piece].piece_id, (m, nn)))
        result = CrossingWord(tuple(tokens))
        cached[c.key] = result
        return result

    for idx, (p, disk_index, sign) in enumerate(sys_events):
        tokens.append(("x", disk_index, sign))
        q = sys_events[(idx + 1) % len(sys_events)][0]
        if side.pieces:
            m = nn = 0
            j = (p + 1) % n
            while j != q:
                if j in basis_hits:
                    (pi, which), s = basis_hits[j]
                    if which == 0:
                        m += s
                    else:
                        nn += s
                j = (j + 1) % n
            piece = segment_piece[p]
            if piece is None:
                raise ValidationError("curve segment outside all pieces")
            tokens.append(("g", side.pieces[piece].piece_id, (m, nn)))
    result = CrossingWord(tuple(tokens))
    cached[c.key] = result
    return result


def bounds_disk(c: CurveClass, side: SplittingSide) -> bool:
    """True iff c bounds an embedded disk in the side (loop theorem + word
    problem for the crossing sequence)."""
    cached = side.__dict__.setdefault("_bounds", {})
    if c.key in cached:
        return cached[c.key]
    if not side.homology_admits_disk(c):
        cached[c.key] = False
        return False
    result = crossing_word(c, side).is_trivial()
    cached[c.key] = result
    return result


def bounds_disk_oracle(c: CurveClass, side: SplittingSide, rng) -> bool:
    """Brute-force cancellation oracle: reduce the crossing word by applying
    cancellations in a random order; free (product) reduction is confluent,
    so any order must agree with the deterministic reduction."""
    toks = list(crossing_word(c, side).tokens)
    while True:
        cancels = []
        n = len(toks)
        for i in range(n):
            j = (i + 1) % n
            if n >= 2 and toks[i][0] == "x" and toks[j][0] == "x" \
                    and toks[i][1] == toks[j][1] and toks[i][2] == -toks[j][2]:
                cancels.append((i, "x"))
            if toks[i][0] == "g" and toks[i][2] == (0, 0):
                cancels.append((i, "g0"))
            if n >= 2 and toks[i][0] == "g" and toks[j][0] == "g" \
                    and toks[i][1] == toks[j][1]:
                cancels.append((i, "gg"))
        if not cancels:
            break
        i, kind = cancels[rng.randrange(len(cancels))]
        j = (i + 1) % len(toks)
        if kind == "x":
            toks = [t for k, t in enumerate(toks) if k not in (i, j)]
        elif kind == "g0":
            toks = [t for k, t in enumerate(toks) if k != i]
        else:
            merged = ("g", toks[i][1], (toks[i][2][0] + toks[j][2][0],
                                        toks[i][2][1] + toks[j][2][1]))
            if j > i:
                toks = toks[:i] + [merged] + toks[j + 1:]
            else:
                toks = [merged] + toks[1:i]
    return not toks


@dataclass(frozen=True)
class DiskClass:
    """An isotopy class of compressing disk, keyed by its boundary curve."""
    boundary: CurveClass
    side: str

    @property
    def key(self) -> Word:
        return self.boundary.key

    @property
    def separating_in_side(self) -> bool:
        # a disk separates a side iff its boundary separates the surface
        return self.boundary.is_separating

    def word_str(self):
        return self.boundary.word_str()

    def __repr__(self):
        return f"DiskClass({self.side}: {self.word_str()})"

    def __lt__(self, other):
        return (self.side, len(self.key), self.key) < \
            (other.side, len(other.key), other.key)


def cuts_off_solid_torus(d: DiskClass, side: SplittingSide):
    """Does the disk cut off a solid torus from its side?

    Handlebody of genus 3: always true for a separating disk (the genus-1
    piece is a solid torus).  Compression body: true iff the genus-1 side
    of the boundary carries no minus-boundary torus; each torus is located
    by whichever basis curve of its piece misses the disk boundary.
    Returns None when some piece cannot be attributed within the probe set.
    """
    if not d.separating_in_side:
        raise NotSeparating("cuts_off_solid_torus needs a separating disk")
    if side.kind == SplittingSide.HANDLEBODY:
        if side.schema.genus != 3:
            raise ValidationError("only genus-3 handlebodies are supported")
        return True
    cut = C.cut_surface(side.schema, [d.boundary])
    genus_one_count = sum(1 for comp in cut.components if comp.genus == 1)
    if genus_one_count != 1:
        raise ValidationError("separating disk should split off a genus-1 side")

    def side_of(probe: CurveClass):
        if C.geometric_intersection(d.boundary, probe) != 0:
            return None
        words = [d.boundary.key, probe.key]
        diag = D.minimal_overlay(side.schema, words)
        analysis = D.CutAnalysis(diag, cut_curves=[0])
        comp = analysis.component_of_curve(1)
        return analysis.components[comp].genus

    genus1_pieces = 0
    for piece in side.pieces:
        located = None
        for probe in piece.basis:
            g = side_of(probe)
            if g is not None:
                located = g
                break
        if located is None:
            return None
        if located == 1:
            genus1_pieces += 1
    return genus1_pieces == 0


# ---------------------------------------------------------------------------
# disk enumeration


def _reduced_words_up_to_rotation(num_letters: int, max_len: int):
    """Freely cyclically reduced words, minimal among their rotations."""
    alphabet = [x for k in range(1, num_letters + 1) for x in (k, -k)]
    out = []

    def extend(prefix):
        n = len(prefix)
        if 0 < n:
            word = tuple(prefix)
            if n >= 1 and prefix[0] != -prefix[-1] and word == W.min_rotation(word):
                out.append(word)
        if n == max_len:
            return
        for t in alphabet:
            if prefix and t == -prefix[-1]:
                continue
            if prefix and t < prefix[0]:
                continue  # cannot be minimal rotation if a smaller token appears
            prefix.append(t)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


class DiskSet:
    """Result of enumerate_disks: sorted disks plus enumeration accounting."""

    def __init__(self, disks, info):
        self.disks = list(disks)
        self.info = dict(info)

    def __iter__(self):
        return iter(self.disks)

    def __len__(self):
        return len(self.disks)

    def boundaries(self):
        return [d.boundary for d in self.disks]


def enumerate_disks(side: SplittingSide, max_len: int, band_depth: int = 1,
                    hard_cap: int = 50000, arc_word_len: int = 1,
                    jobs: int = 1) -> DiskSet:
    """All disk classes with canonical boundary word length <= max_len,
    closed under band sums (including between parallel copies) whose
    results stay within max_len; deterministic, sorted by boundary key."""
    if max_len < 1:
        raise ValidationError("max_len must be >= 1")
    schema = side.schema
    info = {"uncertified_words": 0, "budget_exceeded": False,
            "seed_count": 0, "band_added": 0}

    candidates = _reduced_words_up_to_rotation(schema.num_letters, max_len)
    if jobs > 1:
        keys = _scan_candidates_parallel(side, candidates, max_len, jobs, info)
    else:
        keys = _scan_candidates(side, candidates, max_len, info)
    found: dict[Word, DiskClass] = {}
    for key in keys:
        cls = CurveClass(schema, key)
        found[key] = DiskClass(cls, side.label)
    info["seed_count"] = len(found)

    arcs = _arc_data(schema, arc_word_len)
    for _ in range(band_depth):
        frontier = sorted(found.values())
        new_keys = {}
        for i1 in range(len(frontier)):
            for i2 in range(i1, len(frontier)):
                d1, d2 = frontier[i1], frontier[i2]
                if C.geometric_intersection(d1.boundary, d2.boundary) != 0:
                    continue
                for arc in arcs:
                    n1, n2 = len(d1.key), len(d2.key)
                    datum = ArcDatum(arc[0] % n1, arc[1], arc[2] % n2,
                                     arc[3], arc[4])
                    word = C.band_sum_word(schema, d1.key, d2.key, datum)
                    key = schema.canonical_key(word)
                    if key == () or len(key) > max_len:
                        continue
                    if key in found or key in new_keys:
                        continue
                    verdict = C.simplicity_verdict(key, schema)
                    if verdict is None:
                        info["uncertified_words"] += 1
                        continue
                    if not verdict:
                        continue
                    cls = CurveClass(schema, key)
                    if C.geometric_intersection(cls, d1.boundary) != 0:
                        continue
                    if C.geometric_intersection(cls, d2.boundary) != 0:
                        continue
                    if bounds_disk(cls, side):
                        new_keys[key] = DiskClass(cls, side.label)
                    if len(found) + len(new_keys) > hard_cap:
                        info["budget_exceeded"] = True
                        raise BudgetExceeded(
                            f"disk enumeration exceeded {hard_cap} classes")
        info["band_added"] += len(new_keys)
        found.update(new_keys)
        if not new_keys:
            break
    disks = sorted(found.values())
    return DiskSet(disks, info)


def _arc_data(schema: SurfaceSchema, arc_word_len: int):
    """Deterministic small family of band-sum arc data."""
    arcs = []
    arc_words = [()]
    if arc_word_len >= 1:
        for letter in range(1, schema.num_letters + 1):
            arc_words.append((letter,))
            arc_words.append((-letter,))
    for word in arc_words:
        for pos1 in range(2):
            for pos2 in range(2):
                for s1 in "LR":
                    for s2 in "LR":
                        arcs.append((pos1, s1, pos2, s2, word))
    return arcs


def _scan_candidates(side: SplittingSide, candidate_words, max_len, info):
    schema = side.schema
    kernel = side.kernel_rows()
    seen = set()
    keys = []
    for word in candidate_words:
        hom = schema.homology_class(word)
        if not intmat.saturation_contains(kernel, list(hom)):
            continue
        key = schema.canonical_key(word)
        if key == () or len(key) > max_len or key in seen:
            continue
        seen.add(key)
        verdict = C.simplicity_verdict(key, schema)
        if verdict is None:
            info["uncertified_words"] += 1
            continue
        if not verdict:
            continue
        cls = CurveClass(schema, key)
        if bounds_disk(cls, side):
            keys.append(key)
    return sorted(keys)


def _scan_candidates_parallel(side, candidate_words, max_len, jobs, info):
    """Deterministic fan-out of the seed scan across processes."""
    import concurrent.futures as cf

    spec = side_spec(side)
    chunks = [candidate_words[i::jobs] for i in range(jobs)]
    keys = set()
    with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_scan_worker, spec, chunk, max_len)
                   for chunk in chunks]
        for fut in futures:
            part_keys, uncertified = fut.result()
            keys.update(part_keys)
            info["uncertified_words"] += uncertified
    return sorted(keys)


def side_spec(side: SplittingSide):
    """Plain-data description of a side (for serialization and workers)."""
    return {
        "genus": side.schema.genus,
        "label": side.label,
        "kind": side.kind,
        "cutSystem": [list(c.key) for c in side.cut_system],
        "pieces": [{"piece": p.piece_id,
                    "basis": [list(p.basis[0].key), list(p.basis[1].key)]}
                   for p in side.pieces],
    }


def side_from_spec(spec) -> SplittingSide:
    schema = SurfaceSchema(spec["genus"])
    cut = [C.curve_class(tuple(w), schema) for w in spec["cutSystem"]]
    pieces = [TorusPiece(p["piece"],
                         (C.curve_class(tuple(p["basis"][0]), schema),
                          C.curve_class(tuple(p["basis"][1]), schema)))
              for p in spec.get("pieces", [])]
    return SplittingSide(schema, spec["label"], spec["kind"], cut, pieces)


def _scan_worker(spec, chunk, max_len):
    side = side_from_spec(spec)
    info = {"uncertified_words": 0}
    keys = _scan_candidates(side, chunk, max_len, info)
    return keys, info["uncertified_words"]


# ---------------------------------------------------------------------------
# the splitting itself


class Splitting:
    """A Heegaard splitting given by its two sides over one schema."""

    def __init__(self, schema: SurfaceSchema, v_side: SplittingSide,
                 w_side: SplittingSide):
        if v_side.label != "V" or w_side.label != "W":
            raise ValidationError("sides must be labelled V and W")
        self.schema = schema
        self.V = v_side
        self.W = w_side

    def side(self, label: str) -> SplittingSide:
        if label == "V":
            return self.V
        if label == "W":
            return self.W
        raise ValidationError(f"unknown side {label!r}")

    def is_closed(self) -> bool:
        return (self.V.kind == SplittingSide.HANDLEBODY
                and self.W.kind == SplittingSide.HANDLEBODY)

    def homology_invariants(self):
        """H1 of the glued manifold: free rank and torsion, from the span of
        all cut-system boundary classes in H1(F)."""
        rows = self.V.kernel_rows() + self.W.kernel_rows()
        return intmat.cokernel_invariants(rows, 2 * self.schema.genus)

    def to_json(self):
        curve_list = []
        curve_ids = {}

        def register(c: CurveClass):
            if c.key not in curve_ids:
                curve_ids[c.key] = f"c{len(curve_list)}"
                curve_list.append(c)
            return curve_ids[c.key]

        for c in self.V.cut_system + self.W.cut_system:
            register(c)
        bases = {}
        for side in (self.V, self.W):
            for piece in side.pieces:
                bases[piece.piece_id] = [register(piece.basis[0]),
                                         register(piece.basis[1])]
        data = {
            "surface": {
                **self.schema.to_json(),
                "curves": [{"id": curve_ids[c.key],
                            "word": [W.token_str(t) for t in c.key]}
                           for c in curve_list],
            },
            "V": self.V.to_json(curve_ids),
            "W": self.W.to_json(curve_ids),
        }
        if bases:
            data["bases"] = bases
        return data

    @classmethod
    def from_json(cls, data) -> "Splitting":
        schema = SurfaceSchema.from_json(data["surface"])
        curves = {}
        for entry in data["surface"].get("curves", []):
            curves[entry["id"]] = C.curve_class(entry["word"], schema)
        bases = data.get("bases", {})

        def build_side(label):
            side_data = data[label]
            cut = [curves[cid] for cid in side_data["cutSystem"]]
            pieces = []
            for piece in side_data.get("minusBoundary", []):
                pid = piece["piece"]
                if piece.get("kind", "torus") != "torus":
                    raise ValidationError("only torus minus boundaries supported")
                b1, b2 = bases[pid]
                pieces.append(TorusPiece(pid, (curves[b1], curves[b2])))
            kind = side_data["kind"]
            return SplittingSide(schema, label, kind, cut, pieces)

        return cls(schema, build_side("V"), build_side("W"))
