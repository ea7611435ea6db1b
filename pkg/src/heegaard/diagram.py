"""Explicit curve diagrams on a polygon schema.

A Diagram holds a system of oriented closed curves transverse to the edge
system of a SurfaceSchema.  Each curve is a cyclic list of events: edge
crossings ('e', token, slot_id) and curve crossings ('x', crossing_id, role).
Every edge keeps the ordered list of slot ids along it (order taken along
the positive side's ccw direction).  Crossing signs are stored relative to
the role-0 passage: sign = +1 when (tangent of role 0, tangent of role 1)
is a positively oriented frame of the surface.

From this data the full combinatorial map of (curves + edge graph) on the
closed surface is rebuilt on demand; its faces, and components of the
complement of any subset of the curves, drive every geometric question:
intersection counts, bigon reduction, simplicity, cutting, genus and scar
bookkeeping.

Initial placements realize chords as straight segments between rational
points on a circle (exact Fraction arithmetic, deterministic perturbation
until generic), which fixes crossing orders and signs unambiguously; all
subsequent Reidemeister-style moves are purely combinatorial map surgery.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import BudgetExceeded, MalformedWord, NotDisjoint
from .schema import SurfaceSchema
from .words import Word

# Re-validate the combinatorial map after every move (slow; used in tests).
VALIDATE_MOVES = False

# ---------------------------------------------------------------------------
# events

E_EDGE = "e"
E_CROSS = "x"


def edge_event(token: int, slot_id: int):
    return (E_EDGE, token, slot_id)


def cross_event(crossing_id: int, role: int):
    return (E_CROSS, crossing_id, role)


class Diagram:
    def __init__(self, schema: SurfaceSchema, curves, edge_slots, crossing_signs,
                 next_slot: int, next_crossing: int):
        self.schema = schema
        self.curves = [list(ev) for ev in curves]
        # letter -> list of slot ids along the edge
        self.edge_slots = {k: list(v) for k, v in edge_slots.items()}
        self.crossing_signs = dict(crossing_signs)
        self.next_slot = next_slot
        self.next_crossing = next_crossing

    # -- basic accessors ----------------------------------------------------

    def copy(self) -> "Diagram":
        return Diagram(self.schema, [list(c) for c in self.curves],
                       self.edge_slots, self.crossing_signs,
                       self.next_slot, self.next_crossing)

    def word(self, curve_index: int) -> Word:
        return tuple(ev[1] for ev in self.curves[curve_index] if ev[0] == E_EDGE)

    def crossing_pairs(self):
        """crossing_id -> list of (curve, event index) of its two passages."""
        where: dict[int, list[tuple[int, int]]] = {}
        for ci, events in enumerate(self.curves):
            for j, ev in enumerate(events):
                if ev[0] == E_CROSS:
                    where.setdefault(ev[1], []).append((ci, j))
        return where

    def crossings_between(self, i: int, j: int) -> int:
        count = 0
        for cid, passages in self.crossing_pairs().items():
            curves = sorted(p[0] for p in passages)
            if curves == sorted((i, j)):
                count += 1
        return count

    def total_crossings(self) -> int:
        return len(self.crossing_signs)

    def self_crossings(self, i: int) -> int:
        return sum(1 for cid, ps in self.crossing_pairs().items()
                   if ps[0][0] == i and ps[1][0] == i)

    def slot_usage(self):
        """slot_id -> (letter, curve, event index)."""
        usage = {}
        for ci, events in enumerate(self.curves):
            for j, ev in enumerate(events):
                if ev[0] == E_EDGE:
                    usage[ev[2]] = (abs(ev[1]), ci, j)
        return usage

    def validate(self):
        usage = self.slot_usage()
        listed = {}
        for letter, slots in self.edge_slots.items():
            for s in slots:
                if s in listed:
                    raise AssertionError("slot listed twice")
                listed[s] = letter
        if set(listed) != set(usage):
            raise AssertionError("slot lists and events disagree")
        for s, (letter, _, _) in usage.items():
            if listed[s] != letter:
                raise AssertionError("slot on wrong edge")
        for cid, passages in self.crossing_pairs().items():
            if len(passages) != 2:
                raise AssertionError(f"crossing {cid} has {len(passages)} passages")
            roles = sorted(self.curves[ci][j][2] for ci, j in passages)
            if roles != [0, 1]:
                raise AssertionError(f"crossing {cid} roles {roles}")
            if cid not in self.crossing_signs:
                raise AssertionError(f"crossing {cid} missing sign")
        m = SurfaceMap(self)
        chi = m.euler_characteristic()
        expected = 2 - 2 * self.schema.genus
        if chi != expected:
            raise AssertionError(f"map chi {chi} != {expected}")


# ---------------------------------------------------------------------------
# combinatorial map (half-edge structure with rotations)


class SurfaceMap:
    """Half-edge map of (curves + edge graph) on the closed surface.

    Map edges are keyed:
      ('g', letter, i)   i-th segment of the edge (between slots i-1 and i)
      ('c', curve, j)    curve segment from event j to event j+1 (cyclic)
    A half-edge is (key, d) with d = 0 along the segment's direction.
    Rotations list out-going half-edges counterclockwise at each vertex.
    """

    def __init__(self, diag: Diagram):
        self.diag = diag
        schema = diag.schema
        self.rot: dict[tuple, list] = {}
        usage = diag.slot_usage()

        # vertex keys
        def slot_vertex(s):
            return ("s", s)

        def cross_vertex(c):
            return ("x", c)

        v = ("v",)

        # G-segments per edge letter
        self.g_segments = {}
        for letter in range(1, schema.num_letters + 1):
            slots = diag.edge_slots.get(letter, [])
            segs = []
            for i in range(len(slots) + 1):
                segs.append(("g", letter, i))
            self.g_segments[letter] = segs

        # head/tail maps
        self.tail = {}
        self.head = {}
        for letter, segs in self.g_segments.items():
            slots = diag.edge_slots.get(letter, [])
            for i, seg in enumerate(segs):
                self.tail[seg] = v if i == 0 else slot_vertex(slots[i - 1])
                self.head[seg] = v if i == len(slots) else slot_vertex(slots[i])
        for ci, events in enumerate(diag.curves):
            n = len(events)
            if n == 0:
                raise MalformedWord("curve with no events cannot be embedded")
            for j in range(n):
                seg = ("c", ci, j)
                self.tail[seg] = self._event_vertex(events[j])
                self.head[seg] = self._event_vertex(events[(j + 1) % n])

        # rotations at slot vertices
        for s, (letter, ci, j) in usage.items():
            events = diag.curves[ci]
            token = events[j][1]
            slots = diag.edge_slots[letter]
            i = slots.index(s)
            g_prev = (self.g_segments[letter][i], 1)      # out-going toward previous
            g_next = (self.g_segments[letter][i + 1], 0)  # out-going toward next
            c_in = (("c", ci, (j - 1) % len(events)), 1)
            c_out = (("c", ci, j), 0)
            if token > 0:
                # curve crosses left-to-right w.r.t. edge direction
                order = [g_prev, c_out, g_next, c_in]
            else:
                order = [g_prev, c_in, g_next, c_out]
            self.rot[("s", s)] = order

        # rotations at crossings
        passages = diag.crossing_pairs()
        for cid, ps in passages.items():
            by_role = {}
            for ci, j in ps:
                role = diag.curves[ci][j][2]
                by_role[role] = (ci, j)
            (c0, j0), (c1, j1) = by_role[0], by_role[1]
            n0, n1 = len(diag.curves[c0]), len(diag.curves[c1])
            in0 = (("c", c0, (j0 - 1) % n0), 1)
            out0 = (("c", c0, j0), 0)
            in1 = (("c", c1, (j1 - 1) % n1), 1)
            out1 = (("c", c1, j1), 0)
            if diag.crossing_signs[cid] > 0:
                order = [in0, in1, out0, out1]
            else:
                order = [in0, out1, out0, in1]
            self.rot[("x", cid)] = order

        # rotation at the schema vertex: the vertex-link trace crosses the
        # edge-end germs in clockwise order, so reverse it for ccw rotation
        ends = []
        for corner, tok in schema.vertex_cycle:
            letter = abs(tok)
            segs = self.g_segments[letter]
            if tok > 0:
                ends.append((segs[0], 0))
            else:
                ends.append((segs[-1], 1))
        ends.reverse()
        self.rot[v] = ends

        # index of each out-going half-edge within its rotation
        self.rot_index = {}
        self.halfedges = []
        for vert, order in self.rot.items():
            for idx, h in enumerate(order):
                self.rot_index[h] = (vert, idx)
                self.halfedges.append(h)
        self.halfedges.sort()

        self._faces = None

    def _event_vertex(self, ev):
        if ev[0] == E_EDGE:
            return ("s", ev[2])
        return ("x", ev[1])

    def twin(self, h):
        key, d = h
        return (key, 1 - d)

    def halfedge_head(self, h):
        key, d = h
        return self.head[key] if d == 0 else self.tail[key]

    def halfedge_tail(self, h):
        key, d = h
        return self.tail[key] if d == 0 else self.head[key]

    def next_in_face(self, h):
        """Next half-edge of the face lying on the left of h."""
        t = self.twin(h)
        vert, idx = self.rot_index[t]
        order = self.rot[vert]
        return order[(idx - 1) % len(order)]

    def faces(self):
        """List of faces, each a list of half-edges (face kept on the left)."""
        if self._faces is not None:
            return self._faces
        seen = set()
        out = []
        for h in self.halfedges:
            if h in seen:
                continue
            face = []
            cur = h
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                cur = self.next_in_face(cur)
            out.append(face)
        self._faces = out
        return out

    def euler_characteristic(self):
        n_v = len(self.rot)
        n_e = len(self.tail)
        n_f = len(self.faces())
        return n_v - n_e + n_f


# ---------------------------------------------------------------------------
# components of the complement of a subset of the curves


class Component:
    """One component of the surface cut along a set of curves."""

    def __init__(self, faces, chi, boundaries, genus):
        self.faces = faces            # face indices of the underlying map
        self.chi = chi
        self.boundaries = boundaries  # list of boundary walks, see below
        self.genus = genus

    def boundary_count(self):
        return len(self.boundaries)

    def corner_visits(self):
        return sum(b["corners"] for b in self.boundaries)

    def is_disk(self):
        return self.chi == 1 and len(self.boundaries) == 1


def _face_of_halfedge(faces):
    where = {}
    for fi, face in enumerate(faces):
        for h in face:
            where[h] = fi
    return where


class CutAnalysis:
    """Components of F minus a chosen subset of the diagram's curves.

    Boundary walks record, per step, the curve half-edge traversed and the
    corner data of the gap-class joining it to the next step (whether the
    gap sits at a crossing vertex, and which G-segment end, if any, was
    crossed inside the gap-class).
    """

    def __init__(self, diag: Diagram, cut_curves=None, boundaries=True):
        self.diag = diag
        self.map = SurfaceMap(diag)
        self.cut_curves = set(range(len(diag.curves))) if cut_curves is None \
            else set(cut_curves)
        self.with_boundaries = boundaries
        self._analyze()

    def _is_cut_edge(self, key):
        return key[0] == "c" and key[1] in self.cut_curves

    def _analyze(self):
        m = self.map
        diag = self.diag
        # With boundary walks requested, reject crossings between a cut
        # strand and a non-cut strand.  Without them (pure component
        # attribution), probes may cross the cut set: merging faces across
        # non-cut segments still computes the complement components.
        if self.with_boundaries:
            for cid, ps in diag.crossing_pairs().items():
                cut_flags = {ps[0][0] in self.cut_curves,
                             ps[1][0] in self.cut_curves}
                if cut_flags == {True, False}:
                    raise NotDisjoint("cut curves meet a curve that is not cut")
        faces = m.faces()
        face_of = _face_of_halfedge(faces)
        self.face_of = face_of

        # union-find over faces across every non-cut edge
        parent = list(range(len(faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for key in m.tail:
            if not self._is_cut_edge(key):
                union(face_of[(key, 0)], face_of[(key, 1)])
        self._find = find
        comp_faces: dict[int, list[int]] = {}
        for fi in range(len(faces)):
            comp_faces.setdefault(find(fi), []).append(fi)

        # Boundary walks.  From a boundary (= cut-curve) half-edge, the next
        # boundary half-edge is reached by following face continuations
        # across non-cut edges: x = next_in_face(h), and while x is not cut,
        # x = next_in_face(twin(x)).  The skipped half-edges are exactly the
        # ends crossed inside the merged corner; at a slot passage that is a
        # single G-end and records which side of the edge the face is on.
        all_halfedges = m.halfedges
        boundary_halfedges = [] if not self.with_boundaries else \
            [h for h in all_halfedges if self._is_cut_edge(h[0])]

        def boundary_successor(h):
            skipped = []
            x = m.next_in_face(h)
            guard = 0
            while not self._is_cut_edge(x[0]):
                skipped.append(x)
                x = m.next_in_face(m.twin(x))
                guard += 1
                if guard > 4 * len(all_halfedges):
                    raise AssertionError("boundary walk does not close")
            return x, skipped

        visited = set()
        comp_boundaries: dict[int, list[dict]] = {}
        for h in boundary_halfedges:
            if h in visited:
                continue
            walk = []
            corners = 0
            cur = h
            while cur not in visited:
                visited.add(cur)
                nxt, skipped = boundary_successor(cur)
                vert = m.halfedge_head(cur)
                is_corner = vert[0] == "x" and not skipped
                if is_corner:
                    corners += 1
                walk.append({"h": cur, "head": vert, "corner": is_corner,
                             "skipped": skipped})
                cur = nxt
            fi = face_of[walk[0]["h"]]
            comp = find(fi)
            comp_boundaries.setdefault(comp, []).append(
                {"walk": walk, "corners": corners})

        # chi per component via interior cells: for the open complement,
        # chi = V_int - E_int + F.  Interior vertices are those all of whose
        # incident edges are uncut (slot and crossing vertices on cut curves
        # are split by the cut and belong to the boundary).
        interior_vertex_comp: dict[int, list] = {}
        vertex_has_cut: dict = {}
        vertex_face: dict = {}
        for h in all_halfedges:
            vert = m.halfedge_tail(h)
            cut = self._is_cut_edge(h[0])
            vertex_has_cut[vert] = vertex_has_cut.get(vert, False) or cut
            vertex_face[vert] = face_of[h]
        comp_interior_vertices: dict[int, int] = {}
        for vert, has_cut in vertex_has_cut.items():
            if not has_cut:
                root = find(vertex_face[vert])
                comp_interior_vertices[root] = comp_interior_vertices.get(root, 0) + 1

        comp_interior_edges: dict[int, int] = {}
        for key in m.tail:
            if not self._is_cut_edge(key):
                root = find(face_of[(key, 0)])
                comp_interior_edges[root] = comp_interior_edges.get(root, 0) + 1

        self.components = []
        self.component_of_face = {}
        order_roots = sorted(comp_faces, key=lambda r: min(comp_faces[r]))
        for root in order_roots:
            flist = comp_faces[root]
            chi = (comp_interior_vertices.get(root, 0)
                   - comp_interior_edges.get(root, 0) + len(flist))
            bounds = comp_boundaries.get(root, [])
            if self.with_boundaries:
                genus2 = 2 - chi - len(bounds)
                if genus2 % 2 != 0:
                    raise AssertionError("non-integral genus")
                genus = genus2 // 2
            else:
                genus = None
            comp = Component(sorted(flist), chi, bounds, genus)
            for fi in flist:
                self.component_of_face[fi] = len(self.components)
            self.components.append(comp)

    def component_of_curve(self, curve_index: int):
        """Component containing a non-cut curve."""
        if curve_index in self.cut_curves:
            raise ValueError("curve was cut")
        seg = ("c", curve_index, 0)
        return self.component_of_face[self.face_of[(seg, 0)]]

    def boundary_curve_ids(self, boundary):
        return sorted({step["h"][0][1] for step in boundary["walk"]})

    def boundary_halfedge_directions(self, boundary):
        return sorted({step["h"][1] for step in boundary["walk"]})


# ---------------------------------------------------------------------------
# initial placement: straight chords between rational circle points


def _circle_point(u: Fraction):
    d = 1 + u * u
    return (Fraction(1 - u * u, 1) / d, Fraction(2, 1) * u / d)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _interleaved(r1, r2, r3, r4):
    """Do chords with boundary ranks (r1,r2) and (r3,r4) interleave?"""
    a, b = min(r1, r2), max(r1, r2)
    return (a < r3 < b) != (a < r4 < b)


def _segment_params(p1, p2, p3, p4):
    """Intersection of segments p1p2 and p3p4, as parameters (t, s) with
    intersection = p1 + t*(p2-p1).  Assumes the segments genuinely cross."""
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (p4[0] - p3[0], p4[1] - p3[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom == 0:
        raise ArithmeticError("parallel chords should not interleave")
    w = (p3[0] - p1[0], p3[1] - p1[1])
    t = (w[0] * d2[1] - w[1] * d2[0]) / denom
    s = (w[0] * d1[1] - w[1] * d1[0]) / denom
    return t, s


def default_layout(schema: SurfaceSchema, curve_words):
    """Slot layout: per edge, curves in order, occurrences in word order."""
    layout = {letter: [] for letter in range(1, schema.num_letters + 1)}
    for ci, word in enumerate(curve_words):
        for j, tok in enumerate(word):
            layout[abs(tok)].append((ci, j))
    return layout


def place_curves(schema: SurfaceSchema, curve_words, layout=None) -> Diagram:
    """Realize closed curves with straight chords; exact rational geometry.

    `layout` maps each edge letter to the ordered list of (curve, word
    position) crossings along the edge.  The perturbation parameter is
    retried deterministically until the chord arrangement is generic.
    """
    curve_words = [tuple(w) for w in curve_words]
    for w in curve_words:
        schema.validate_word(w)
        if not w:
            raise MalformedWord("cannot place a curve with empty crossing word")
    if layout is None:
        layout = default_layout(schema, curve_words)

    # slot ids in deterministic order
    slot_of = {}
    edge_slots = {}
    next_slot = 0
    for letter in range(1, schema.num_letters + 1):
        edge_slots[letter] = []
        for (ci, j) in layout.get(letter, []):
            if abs(curve_words[ci][j]) != letter:
                raise MalformedWord("layout does not match words")
            slot_of[(ci, j)] = next_slot
            edge_slots[letter].append(next_slot)
            next_slot += 1
    for ci, w in enumerate(curve_words):
        for j in range(len(w)):
            if (ci, j) not in slot_of:
                raise MalformedWord("layout missing a crossing")

    # boundary appearances in ccw order: (slot, side), rank
    appearances = []
    for side in range(schema.num_sides):
        letter = abs(schema.polygon[side])
        slots = edge_slots[letter]
        ordered = slots if schema.polygon[side] > 0 else list(reversed(slots))
        for s in ordered:
            appearances.append((s, side))
    rank = {app: k for k, app in enumerate(appearances)}

    # chords: chord (ci, j) runs from the entry appearance of event j to the
    # exit appearance of event j+1
    chords = {}
    for ci, w in enumerate(curve_words):
        n = len(w)
        for j in range(n):
            jn = (j + 1) % n
            a = (slot_of[(ci, j)], schema.entry_side(w[j]))
            b = (slot_of[(ci, jn)], schema.exit_side(w[jn]))
            chords[(ci, j)] = (rank[a], rank[b])

    chord_keys = sorted(chords)
    for attempt in range(32):
        pts = {}
        m = len(appearances)
        for k in range(m):
            u = Fraction(k) + Fraction(attempt * (k * k + 1), 97 * m + 13)
            pts[k] = _circle_point(u)
        # find crossings among interleaved chords
        ok = True
        per_chord = {key: [] for key in chord_keys}
        crossing_records = []
        for idx1 in range(len(chord_keys)):
            for idx2 in range(idx1 + 1, len(chord_keys)):
                k1, k2 = chord_keys[idx1], chord_keys[idx2]
                r1, r2 = chords[k1]
                r3, r4 = chords[k2]
                if not _interleaved(r1, r2, r3, r4):
                    continue
                p1, p2 = pts[r1], pts[r2]
                p3, p4 = pts[r3], pts[r4]
                t, s = _segment_params(p1, p2, p3, p4)
                if not (0 < t < 1 and 0 < s < 1):
                    ok = False
                    break
                d1 = (p2[0] - p1[0], p2[1] - p1[1])
                d2 = (p4[0] - p3[0], p4[1] - p3[1])
                sign = 1 if d1[0] * d2[1] - d1[1] * d2[0] > 0 else -1
                cid = len(crossing_records)
                crossing_records.append((k1, k2, sign))
                per_chord[k1].append((t, cid, 0))
                per_chord[k2].append((s, cid, 1))
            if not ok:
                break
        if not ok:
            continue
        # generic: distinct parameters along every chord
        generic = True
        for key, lst in per_chord.items():
            params = sorted(p for p, _, _ in lst)
            if any(params[i] == params[i + 1] for i in range(len(params) - 1)):
                generic = False
                break
        if not generic:
            continue
        # assemble event lists
        curves = []
        for ci, w in enumerate(curve_words):
            events = []
            for j in range(len(w)):
                events.append(edge_event(w[j], slot_of[(ci, j)]))
                for _, cid, role in sorted(per_chord[(ci, j)]):
                    events.append(cross_event(cid, role))
            curves.append(events)
        signs = {cid: rec[2] for cid, rec in enumerate(crossing_records)}
        diag = Diagram(schema, curves, edge_slots, signs,
                       next_slot, len(crossing_records))
        diag.validate()
        return diag
    raise BudgetExceeded("could not reach generic position for chords")


# ---------------------------------------------------------------------------
# faces eligible for moves


def _side_split(walk):
    """Split a boundary walk at its corner steps.

    Returns the list of sides; each side is the list of consecutive steps
    after one corner up to and including the step ending at the next corner.
    Requires at least one corner.
    """
    corner_positions = [i for i, step in enumerate(walk) if step["corner"]]
    if not corner_positions:
        return []
    n = len(walk)
    sides = []
    for a, b in zip(corner_positions, corner_positions[1:] + [corner_positions[0] + n]):
        side = [walk[(i + 1) % n] for i in range(a, b)]
        sides.append(side)
    return sides


def _side_info(diag: Diagram, side):
    """Orientation data of one side of a face.

    Returns dict with: curve, dir (0 = walk runs with the curve), the
    mover-span event indices (corner event at each end and slot events
    between, in walk order), and per-slot face-side data.
    """
    first = side[0]["h"]
    (kind, curve, j0), d = first[0], first[1]
    assert kind == "c"
    events = diag.curves[curve]
    n = len(events)
    for step in side:
        (k2, c2, _), d2 = step["h"][0], step["h"][1]
        if k2 != "c" or c2 != curve or d2 != d:
            raise AssertionError("face side is not a single strand passage")
    if d == 0:
        start_event = j0
        idxs = [(j0 + t + 1) % n for t in range(len(side) - 1)]
        end_event = (j0 + len(side)) % n
    else:
        start_event = (j0 + 1) % n
        idxs = [(j0 - t) % n for t in range(len(side) - 1)]
        end_event = (j0 - len(side) + 1) % n
    slot_steps = side[:-1]
    return {
        "curve": curve,
        "dir": d,
        "start_event": start_event,
        "end_event": end_event,
        "slot_events": idxs,
        "slot_steps": slot_steps,
    }


# ---------------------------------------------------------------------------
# move application


def _face_side_insertion(diag: Diagram, step):
    """Where a strand parallel to the kept side, outside the face, crosses
    the edge at this slot passage: (letter, anchor slot, insert_before)."""
    skipped = step["skipped"]
    assert len(skipped) == 1, "slot passage should skip exactly one edge end"
    (seg, dirg) = skipped[0]
    assert seg[0] == "g"
    letter = seg[1]
    vert = step["head"]
    assert vert[0] == "s"
    anchor = vert[1]
    i = diag.edge_slots[letter].index(anchor)
    if seg[2] == i + 1 and dirg == 0:
        # face lies on the forward side of the edge; go on the backward side
        return letter, anchor, True
    if seg[2] == i and dirg == 1:
        return letter, anchor, False
    raise AssertionError("unexpected skipped end at slot passage")


def _copies_of_side(diag: Diagram, info, fresh_slot):
    """Events and slot insertions for a strand running parallel to a kept
    side, traversed opposite to the boundary walk.  Returns (events, inserts,
    next_fresh) where inserts are (letter, anchor_slot, before, new_slot)."""
    events = []
    inserts = []
    keeper = diag.curves[info["curve"]]
    d = info["dir"]
    pairs = list(zip(info["slot_events"], info["slot_steps"]))
    for idx, step in reversed(pairs):
        tok = keeper[idx][1]
        new_tok = tok if d == 1 else -tok
        letter, anchor, before = _face_side_insertion(diag, step)
        assert letter == abs(tok)
        events.append(edge_event(new_tok, fresh_slot))
        inserts.append((letter, anchor, before, fresh_slot))
        fresh_slot += 1
    return events, inserts, fresh_slot


class _CurveEdits:
    """Accumulated edits to one curve's cyclic event list."""

    def __init__(self, n):
        self.n = n
        self.span = None          # (indices_in_list_order, replacement_events)
        self.deletions = set()
        self.insertions = []      # (anchor index, before?, event)

    def apply(self, events):
        n = self.n
        span_set = set()
        span_start = None
        replacement = []
        if self.span is not None:
            block, replacement = self.span
            span_set = set(block)
            span_start = block[0]
        out = []
        for i in range(n):
            for anchor, before, ev in self.insertions:
                if anchor == i and before:
                    out.append(ev)
            if i in span_set:
                if i == span_start:
                    out.extend(replacement)
            elif i in self.deletions:
                pass
            else:
                out.append(events[i])
            for anchor, before, ev in self.insertions:
                if anchor == i and not before:
                    out.append(ev)
        return out


def _cyclic_block(start, end, step, n):
    """Indices from start to end inclusive moving by step (+1/-1), cyclic."""
    out = [start % n]
    i = start % n
    guard = 0
    while i != end % n:
        i = (i + step) % n
        out.append(i)
        guard += 1
        if guard > n:
            raise AssertionError("span does not close")
    return out


def _event_index_of_crossing(events, cid):
    return [j for j, ev in enumerate(events) if ev[0] == E_CROSS and ev[1] == cid]


def _rebuild(diag: Diagram, edits: dict, slot_inserts, slots_removed,
             crossings_removed, new_signs) -> Diagram:
    new_curves = []
    for ci, events in enumerate(diag.curves):
        if ci in edits:
            new_curves.append(edits[ci].apply(events))
        else:
            new_curves.append(list(events))
    edge_slots = {k: [s for s in v if s not in slots_removed]
                  for k, v in diag.edge_slots.items()}
    for letter, anchor, before, new_slot in slot_inserts:
        lst = edge_slots[letter]
        i = lst.index(anchor)
        lst.insert(i if before else i + 1, new_slot)
    signs = {cid: s for cid, s in diag.crossing_signs.items()
             if cid not in crossings_removed}
    signs.update(new_signs)
    next_slot = diag.next_slot + len(slot_inserts)
    next_crossing = diag.next_crossing + len(new_signs)
    out = Diagram(diag.schema, new_curves, edge_slots, signs,
                  next_slot, next_crossing)
    if VALIDATE_MOVES:
        out.validate()
    return out


def _mover_span_block(info, n):
    """The mover side's event indices as a list-order block starting at the
    list-order start, plus whether list order runs with the traversal."""
    if info["dir"] == 0:
        block = _cyclic_block(info["start_event"], info["end_event"], 1, n)
        forward = True
    else:
        block = _cyclic_block(info["end_event"], info["start_event"], 1, n)
        forward = False
    return block, forward


def _orient_replacement(new_events, forward):
    """Replacement events are built in the mover's traversal orientation;
    against list order they must be reversed with edge tokens inverted."""
    if forward:
        return list(new_events)
    out = []
    for ev in reversed(new_events):
        if ev[0] == E_EDGE:
            out.append(edge_event(-ev[1], ev[2]))
        else:
            out.append(ev)
    return out


def apply_bigon(diag: Diagram, walk, mover_index=0) -> Diagram:
    """Remove an empty bigon face: the chosen side slides across the other."""
    sides = _side_split(walk)
    assert len(sides) == 2
    mover = _side_info(diag, sides[mover_index])
    keeper = _side_info(diag, sides[1 - mover_index])
    cm, ck = mover["curve"], keeper["curve"]
    ev_m, ev_k = diag.curves[cm], diag.curves[ck]
    x_ev = ev_m[mover["start_event"]]
    y_ev = ev_m[mover["end_event"]]
    assert x_ev[0] == E_CROSS and y_ev[0] == E_CROSS
    x_id, y_id = x_ev[1], y_ev[1]
    assert x_id != y_id, "degenerate bigon"

    new_events, inserts, _ = _copies_of_side(diag, keeper, diag.next_slot)

    edits = {}
    n_m = len(ev_m)
    edits[cm] = _CurveEdits(n_m)
    block, forward = _mover_span_block(mover, n_m)
    edits[cm].span = (block, _orient_replacement(new_events, forward))
    slots_removed = {ev_m[i][2] for i in block if ev_m[i][0] == E_EDGE}

    if ck != cm:
        edits[ck] = _CurveEdits(len(ev_k))
    for cid in (x_id, y_id):
        for j in _event_index_of_crossing(ev_k, cid):
            if ck == cm and j in set(block):
                continue
            edits[ck].deletions.add(j)

    return _rebuild(diag, edits, inserts, slots_removed, {x_id, y_id}, {})


def apply_monogon(diag: Diagram, walk) -> Diagram:
    """Remove an empty monogon face (an innermost curl)."""
    sides = _side_split(walk)
    assert len(sides) == 1
    info = _side_info(diag, sides[0])
    c = info["curve"]
    events = diag.curves[c]
    n = len(events)
    x_ev = events[info["start_event"]]
    assert x_ev[0] == E_CROSS
    x_id = x_ev[1]
    assert events[info["end_event"]][0] == E_CROSS
    assert events[info["end_event"]][1] == x_id
    block, _ = _mover_span_block(info, n)
    edits = {c: _CurveEdits(n)}
    edits[c].span = (block, [])
    slots_removed = {events[i][2] for i in block if events[i][0] == E_EDGE}
    return _rebuild(diag, edits, [], slots_removed, {x_id}, {})


# ---------------------------------------------------------------------------
# reduction drivers


def _walk_signature(walk):
    return tuple(sorted(step["h"] for step in walk))


def move_sites(diag: Diagram, distinct_curves=False):
    """Empty bigon faces of the curve complement, as move sites."""
    analysis = CutAnalysis(diag)
    sites = []
    for comp in analysis.components:
        if not comp.is_disk():
            continue
        b = comp.boundaries[0]
        walk, corners = b["walk"], b["corners"]
        corner_ids = [step["head"][1] for step in walk if step["corner"]]
        if corners == 2:
            if len(set(corner_ids)) != 2:
                continue
            sides = _side_split(walk)
            curves = {_side_info(diag, s)["curve"] for s in sides}
            if distinct_curves and len(curves) != 2:
                continue
            for mi in range(2):
                sites.append(("RII", walk, mi))
    sites.sort(key=lambda site: (site[0], _walk_signature(site[1]), site[2]))
    return sites


def apply_move(diag: Diagram, site) -> Diagram:
    kind, walk, arg = site
    return apply_bigon(diag, walk, arg)


def reduce_pairwise(diag: Diagram, rng=None) -> Diagram:
    """Remove bigons between distinct curves until none remain.

    For systems of essential simple closed curves this reaches pairwise
    minimal position (bigon criterion); crossing count decreases by 2 per
    step, so termination is guaranteed.
    """
    while True:
        sites = move_sites(diag, distinct_curves=True)
        if not sites:
            return diag
        site = rng.choice(sites) if rng is not None else sites[0]
        diag = apply_move(diag, site)


# ---------------------------------------------------------------------------
# exact self-intersection by layout search
#
# A self-minimal position of a curve can be made graph-minimal by an ambient
# isotopy (which never changes self-crossings), so some geodesic cyclic word
# u of the class, with some ordering of its crossings along each edge,
# realizes the minimal self-intersection; and for fixed (u, layout) the
# minimum realizable crossing number is the number of interleaved chord
# pairs (interleaved chords must cross, non-interleaved need not).  Hence
# the self-intersection number is the minimum interleave count over all
# geodesic representatives and all slot layouts, a finite exact search.


def _geodesic_words(schema: SurfaceSchema, word: Word):
    if schema.genus >= 2:
        from .words import dehn_cyclic_reduce, half_swap_closure
        w = dehn_cyclic_reduce(word, schema.relator_table)
        if not w:
            return []
        return sorted(half_swap_closure(w, schema.relator_table))
    # torus: geodesics are all shuffles of the signed letter counts
    from itertools import permutations
    from .words import signed_counts
    p, q = signed_counts(word, 2)
    if p == 0 and q == 0:
        return []
    letters = [1 if p > 0 else -1] * abs(p) + [2 if q > 0 else -2] * abs(q)
    return sorted({tuple(s) for s in permutations(letters)})


def _interleave_count(chords):
    total = 0
    n = len(chords)
    for i in range(n):
        r1, r2 = chords[i]
        a, b = (r1, r2) if r1 < r2 else (r2, r1)
        for j in range(i + 1, n):
            r3, r4 = chords[j]
            if (a < r3 < b) != (a < r4 < b):
                total += 1
    return total


def _layout_chord_ranks(schema: SurfaceSchema, word: Word, per_edge):
    """Boundary rank pairs of the word's chords for a given layout.

    per_edge: letter -> ordered list of word positions along the edge.
    """
    rank = {}
    k = 0
    for side in range(schema.num_sides):
        letter = abs(schema.polygon[side])
        order = per_edge.get(letter, [])
        ordered = order if schema.polygon[side] > 0 else list(reversed(order))
        for pos in ordered:
            rank[(pos, side)] = k
            k += 1
    n = len(word)
    chords = []
    for j in range(n):
        jn = (j + 1) % n
        a = rank[(j, schema.entry_side(word[j]))]
        b = rank[(jn, schema.exit_side(word[jn]))]
        chords.append((a, b))
    return chords


def self_intersection(schema: SurfaceSchema, word: Word, cap: int = 200000):
    """Exact minimal self-intersection number and a realizing layout.

    Returns (count, word, per_edge layout).  Raises BudgetExceeded if the
    layout enumeration would exceed `cap` configurations.
    """
    from itertools import permutations
    from math import factorial

    candidates = _geodesic_words(schema, tuple(word))
    if not candidates:
        raise MalformedWord("self_intersection expects an essential curve")
    total_layouts = 0
    best = None
    for u in candidates:
        positions = {}
        for j, tok in enumerate(u):
            positions.setdefault(abs(tok), []).append(j)
        letters = sorted(positions)
        count = 1
        for letter in letters:
            count *= factorial(len(positions[letter]))
        total_layouts += count
        if total_layouts > cap:
            raise BudgetExceeded(
                f"layout search for self-intersection exceeds {cap}")
        perm_lists = [list(permutations(positions[letter])) for letter in letters]
        idx = [0] * len(letters)
        while True:
            per_edge = {letter: list(perm_lists[k][idx[k]])
                        for k, letter in enumerate(letters)}
            chords = _layout_chord_ranks(schema, u, per_edge)
            c = _interleave_count(chords)
            if best is None or c < best[0]:
                best = (c, u, per_edge)
                if c == 0:
                    return best
            # advance mixed-radix counter
            k = 0
            while k < len(letters):
                idx[k] += 1
                if idx[k] < len(perm_lists[k]):
                    break
                idx[k] = 0
                k += 1
            if k == len(letters):
                break
    return best


def taut_diagram(schema: SurfaceSchema, word: Word, cap: int = 200000):
    """Self-minimal diagram of one curve: (diagram, self-crossings, exact)."""
    count, u, per_edge = self_intersection(schema, word, cap=cap)
    layout = {letter: [(0, pos) for pos in order]
              for letter, order in per_edge.items()}
    diag = place_curves(schema, [u], layout)
    assert diag.total_crossings() == count
    return diag, count, True


def _taut_layout_entry(taut: Diagram):
    """Per-edge occurrence order of a taut one-curve diagram, as word positions."""
    events = taut.curves[0]
    word_pos = {}
    k = 0
    for j, ev in enumerate(events):
        if ev[0] == E_EDGE:
            word_pos[ev[2]] = k
            k += 1
    per_edge = {}
    for letter, slots in taut.edge_slots.items():
        per_edge[letter] = [word_pos[s] for s in slots]
    return taut.word(0), per_edge


def layout_of(diag: Diagram):
    """Current words and per-edge slot layout of a diagram."""
    words = [diag.word(ci) for ci in range(len(diag.curves))]
    word_pos = {}
    for ci, events in enumerate(diag.curves):
        k = 0
        for ev in events:
            if ev[0] == E_EDGE:
                word_pos[ev[2]] = (ci, k)
                k += 1
    layout = {letter: [word_pos[s] for s in slots]
              for letter, slots in diag.edge_slots.items()}
    return words, layout


def _probe_sites(diag: Diagram, probe_index: int, against=None, rng=None):
    """Bigon-face moves whose mover side lies on the probe curve and whose
    other side lies on an earlier curve (optionally restricted)."""
    sites = []
    for kind, walk, mi in move_sites(diag, distinct_curves=True):
        sides = _side_split(walk)
        infos = [_side_info(diag, s) for s in sides]
        curves = [info["curve"] for info in infos]
        if probe_index not in curves:
            continue
        other = curves[1 - curves.index(probe_index)]
        if other == probe_index:
            continue
        if against is not None and other not in against:
            continue
        if curves[mi] == probe_index:
            sites.append((kind, walk, mi))
    return sites


def insert_curve(schema: SurfaceSchema, words, layout, new_word,
                 reduce_against=None, rng=None):
    """Append a curve to a placed system and slide it off the earlier curves.

    The earlier curves must be pairwise disjoint in the current placement
    (the callers guarantee it); then, whenever the new curve has a removable
    bigon with one of them, some empty bigon face has a side on the new
    curve, so greedy removal reaches pairwise-minimal position of the new
    curve against every earlier one.  Earlier curves are never modified.
    Returns the new diagram.
    """
    taut, self_crossings, _ = taut_diagram(schema, new_word)
    if self_crossings != 0:
        raise ValueError(f"curve is not simple: {new_word}")
    tw, per_edge = _taut_layout_entry(taut)
    n = len(words)
    all_words = list(words) + [tw]
    combined = {letter: list(entries) for letter, entries in layout.items()}
    for letter in range(1, schema.num_letters + 1):
        combined.setdefault(letter, [])
        for j in per_edge.get(letter, []):
            combined[letter].append((n, j))
    diag = place_curves(schema, all_words, combined)
    while True:
        sites = _probe_sites(diag, n, against=reduce_against, rng=rng)
        if not sites:
            return diag
        site = rng.choice(sites) if rng is not None else sites[0]
        diag = apply_move(diag, site)


def staged_overlay(schema: SurfaceSchema, words, rng=None) -> Diagram:
    """Place curves one at a time, each reduced against all earlier ones.

    Valid when after each insertion the earlier curves are pairwise
    disjoint, which holds for all uses: disjoint systems, and a single
    probe over a disjoint system.
    """
    diag = None
    placed_words: list = []
    layout = {letter: [] for letter in range(1, schema.num_letters + 1)}
    for w in words:
        diag = insert_curve(schema, placed_words, layout, w, rng=rng)
        placed_words, layout = layout_of(diag)
    if diag is None:
        raise MalformedWord("no curves to place")
    return diag


def disjoint_overlay(schema: SurfaceSchema, words, rng=None) -> Diagram:
    """Simultaneous disjoint position of pairwise disjoint classes."""
    diag = staged_overlay(schema, words, rng=rng)
    if diag.total_crossings() != 0:
        raise NotDisjoint("curves do not admit a disjoint realization")
    return diag


def minimal_overlay(schema: SurfaceSchema, words, rng=None) -> Diagram:
    """Pairwise-minimal position; rigorous for up to two curves and for
    systems whose earlier stages are disjoint (see staged_overlay)."""
    return staged_overlay(schema, words, rng=rng)


def intersection_number(schema: SurfaceSchema, w1: Word, w2: Word,
                        rng=None) -> int:
    d = staged_overlay(schema, [w1, w2], rng=rng)
    return d.crossings_between(0, 1)


def signed_pairing(schema: SurfaceSchema, w1: Word, w2: Word) -> int:
    """Homological intersection pairing (orientation-dependent)."""
    d = place_curves(schema, [w1, w2])
    total = 0
    for cid, ps in d.crossing_pairs().items():
        curves = sorted((ps[0][0], ps[1][0]))
        if curves == [0, 1]:
            total += d.crossing_signs[cid]
    return total
