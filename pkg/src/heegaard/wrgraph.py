"""The graph of weak reducing pairs and its structural audits.

Vertices are weak reducing pairs (D, E): disjoint compressing disks on
opposite sides; an edge keeps one disk (isotopic) and moves the other to a
disjoint non-isotopic disk, labelled "D" when the E-disk is shared (the
D-disk varies) and "E" when the D-disk is shared.  On unstabilized
irreducible genus-3 data the graph is a disjoint union of stars ("clusters")
plus isolated edges and vertices, and the criticality gate certifies the
main sufficient condition with explicit curve witnesses.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import curves as C
from . import splitting as S
from .curves import ArcDatum, CurveClass
from .errors import (ArcBudgetExceeded, ClusterAnomaly, GenusTooSmall,
                     InvalidSequence, NotAPath, NotCanceling,
                     NotNonSeparating, ValidationError)
from .splitting import DiskClass, Splitting, SplittingSide


@dataclass(frozen=True)
class WRVertex:
    d: DiskClass
    e: DiskClass
    equal_boundary: bool = False

    @property
    def sort_key(self):
        return (self.d.key, self.e.key)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        flag = "=" if self.equal_boundary else ""
        return f"({self.d.word_str()} | {self.e.word_str()}){flag}"


@dataclass(frozen=True)
class WREdge:
    v1: WRVertex
    v2: WRVertex
    label: str  # "D": shared E-disk, varying D; "E": shared D-disk

    @property
    def sort_key(self):
        return (self.v1.sort_key, self.v2.sort_key, self.label)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def endpoints(self):
        return (self.v1, self.v2)

    def __repr__(self):
        return f"{self.v1}-[{self.label}]-{self.v2}"


class WRGraph:
    def __init__(self, vertices, edges, disks_v, disks_w):
        self.vertices = sorted(vertices)
        self.edges = sorted(edges)
        self.disks_v = list(disks_v)
        self.disks_w = list(disks_w)
        self.adj: dict[WRVertex, list[WREdge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            self.adj[e.v1].append(e)
            self.adj[e.v2].append(e)

    def reducibility_witnesses(self):
        return [v for v in self.vertices if v.equal_boundary]

    def vertex_count(self):
        return len(self.vertices)

    def edge_count(self):
        return len(self.edges)

    def neighbors(self, v):
        out = []
        for e in self.adj[v]:
            out.append(e.v2 if e.v1 == v else e.v1)
        return out

    def has_edge(self, u, v):
        return any(w == v for w in self.neighbors(u))

    def find_edge(self, u, v):
        for e in self.adj.get(u, []):
            if v in e.endpoints():
                return e
        return None


def _disjoint(c1: CurveClass, c2: CurveClass) -> bool:
    return c1.key != c2.key and C.geometric_intersection(c1, c2) == 0


def build_wr(disks_v, disks_w) -> WRGraph:
    """All weak reducing pairs over the two disk sets, with labelled edges.

    Pairs whose boundaries are isotopic are recorded as reducibility
    witnesses (flagged vertices, excluded from edges and from the gate).
    """
    disks_v = sorted(disks_v)
    disks_w = sorted(disks_w)
    vertices = []
    for d in disks_v:
        for e in disks_w:
            if d.key == e.key:
                vertices.append(WRVertex(d, e, equal_boundary=True))
            elif C.geometric_intersection(d.boundary, e.boundary) == 0:
                vertices.append(WRVertex(d, e))
    plain = [v for v in vertices if not v.equal_boundary]
    edges = []
    # label "E": shared D-disk, E-disks disjoint and non-isotopic
    by_d: dict = {}
    for v in plain:
        by_d.setdefault(v.d.key, []).append(v)
    for group in by_d.values():
        group.sort()
        for v1, v2 in itertools.combinations(group, 2):
            if _disjoint(v1.e.boundary, v2.e.boundary):
                edges.append(WREdge(v1, v2, "E"))
    # label "D": shared E-disk, D-disks disjoint and non-isotopic
    by_e: dict = {}
    for v in plain:
        by_e.setdefault(v.e.key, []).append(v)
    for group in by_e.values():
        group.sort()
        for v1, v2 in itertools.combinations(group, 2):
            if _disjoint(v1.d.boundary, v2.d.boundary):
                edges.append(WREdge(v1, v2, "D"))
    return WRGraph(vertices, edges, disks_v, disks_w)


# ---------------------------------------------------------------------------
# cliques, dimension, simplex shapes


def maximal_cliques(graph: WRGraph):
    """Degeneracy-ordered Bron-Kerbosch with pivoting; deterministic."""
    adj = {v: set(graph.neighbors(v)) for v in graph.vertices}
    # degeneracy order: repeatedly remove a vertex of smallest degree
    order = []
    remaining = dict(adj)
    degrees = {v: len(ns) for v, ns in remaining.items()}
    while remaining:
        v = min(remaining, key=lambda u: (degrees[u], u.sort_key))
        order.append(v)
        for u in remaining[v]:
            if u in remaining:
                degrees[u] -= 1
        others = remaining.pop(v)
        for u in others:
            if u in remaining:
                remaining[u] = remaining[u] - {v}
    index = {v: i for i, v in enumerate(order)}

    cliques = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(sorted(r))
            return
        pivot_pool = p | x
        pivot = max(pivot_pool, key=lambda u: (len(adj[u] & p), u.sort_key))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    for v in order:
        later = {u for u in adj[v] if index[u] > index[v]}
        earlier = {u for u in adj[v] if index[u] < index[v]}
        expand({v}, later, earlier)
    return sorted(cliques)


def dimension(graph: WRGraph) -> int:
    """-1 for the empty graph, else (max clique size) - 1."""
    if not graph.vertices:
        return -1
    if not graph.edges:
        return 0
    return max(len(c) for c in maximal_cliques(graph)) - 1


def check_simplex_shape(graph: WRGraph):
    """Every clique of size >= 3 must share its D-disk or its E-disk.

    Returns the list of violating maximal cliques (empty on genuine data).
    """
    violations = []
    for clique in maximal_cliques(graph):
        if len(clique) < 3:
            continue
        d_keys = {v.d.key for v in clique}
        e_keys = {v.e.key for v in clique}
        if len(d_keys) != 1 and len(e_keys) != 1:
            violations.append(clique)
    return violations


# ---------------------------------------------------------------------------
# clusters


@dataclass
class Cluster:
    label: str
    edges: list
    center: WRVertex
    hands: list

    def shared_disk(self) -> DiskClass:
        """The disk common to all vertices (E-disk of a D-cluster)."""
        return self.center.e if self.label == "D" else self.center.d

    def varying_center_disk(self) -> DiskClass:
        return self.center.d if self.label == "D" else self.center.e

    def varying_hand_disk(self, hand: WRVertex) -> DiskClass:
        return hand.d if self.label == "D" else hand.e


@dataclass
class ClusterDecomposition:
    clusters: list
    leftover_edges: list   # single same-label edges, legal at finite bounds

    def __iter__(self):
        return iter(self.clusters)


def decompose_clusters(graph: WRGraph) -> ClusterDecomposition:
    """Maximal connected same-label subgraphs with >= 2 edges, as stars.

    Raises ClusterAnomaly when a same-label component is not a star (two
    vertices of degree >= 2, or a cycle): that cannot happen over genuine
    unstabilized irreducible genus-3 splitting data.
    """
    clusters = []
    leftovers = []
    for label in ("D", "E"):
        edges = [e for e in graph.edges if e.label == label]
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in edges:
            for v in e.endpoints():
                parent.setdefault(v, v)
            a, b = find(e.v1), find(e.v2)
            if a != b:
                parent[a] = b
        comps: dict = {}
        for e in edges:
            comps.setdefault(find(e.v1), []).append(e)
        for root in sorted(comps, key=lambda v: v.sort_key):
            comp_edges = sorted(comps[root])
            if len(comp_edges) == 1:
                leftovers.append(comp_edges[0])
                continue
            degree: dict = {}
            verts = set()
            for e in comp_edges:
                for v in e.endpoints():
                    degree[v] = degree.get(v, 0) + 1
                    verts.add(v)
            if len(comp_edges) != len(verts) - 1:
                raise ClusterAnomaly(
                    f"{label}-component with {len(comp_edges)} edges on "
                    f"{len(verts)} vertices contains a cycle")
            centers = [v for v, deg in degree.items() if deg >= 2]
            if len(centers) != 1:
                raise ClusterAnomaly(
                    f"{label}-component with {len(centers)} branch vertices")
            center = centers[0]
            hands = sorted(v for v in verts if v != center)
            clusters.append(Cluster(label, comp_edges, center, hands))
    clusters.sort(key=lambda c: (c.label, c.center.sort_key))
    return ClusterDecomposition(clusters, sorted(leftovers))


def audit_cluster_separating_pattern(decomp: ClusterDecomposition):
    """Center's varying disk non-separating, every hand's separating.

    Returns violation strings (empty on genuine data)."""
    problems = []
    for cluster in decomp.clusters:
        if cluster.varying_center_disk().separating_in_side:
            problems.append(
                f"center of {cluster.label}-cluster at {cluster.center} "
                "has a separating varying disk")
        for hand in cluster.hands:
            if not cluster.varying_hand_disk(hand).separating_in_side:
                problems.append(
                    f"hand {hand} of {cluster.label}-cluster has a "
                    "non-separating varying disk")
    return problems


def audit_edge_pants_pattern(graph: WRGraph):
    """For every edge: exactly one varying boundary separating, and the two
    varying boundaries cut off a pair of pants.  Returns violations."""
    problems = []
    for e in graph.edges:
        if e.label == "D":
            c1, c2 = e.v1.d.boundary, e.v2.d.boundary
        else:
            c1, c2 = e.v1.e.boundary, e.v2.e.boundary
        seps = int(c1.is_separating) + int(c2.is_separating)
        if seps != 1:
            problems.append(f"edge {e}: {seps} separating varying disks")
            continue
        schema = c1.schema
        cut = C.cut_surface(schema, [c1, c2])
        if not any(comp.genus == 0 and comp.n_scars == 3
                   for comp in cut.components):
            problems.append(f"edge {e}: no pair of pants cut off")
    return problems


def audit_no_long_same_label_path(graph: WRGraph):
    """No same-label simple path of length 3: equivalently no same-label
    edge both of whose endpoints have same-label degree >= 2."""
    problems = []
    for label in ("D", "E"):
        adj: dict = {}
        for e in graph.edges:
            if e.label != label:
                continue
            adj.setdefault(e.v1, set()).add(e.v2)
            adj.setdefault(e.v2, set()).add(e.v1)
        for e in graph.edges:
            if e.label != label:
                continue
            if len(adj[e.v1]) >= 2 and len(adj[e.v2]) >= 2:
                problems.append(f"{label}-segment of length 3 through {e}")
    return sorted(set(problems))


# ---------------------------------------------------------------------------
# four-disk configurations (consecutive differently-labelled edges)


@dataclass
class FourDiskReport:
    distinct: bool
    separating_split: bool | None
    pants_v: bool | None
    pants_w: bool | None
    pants_disjoint: bool | None
    all_disjoint: bool
    replacement: DiskClass | None
    notes: list = field(default_factory=list)

    def satisfied(self) -> bool:
        base = (self.distinct and bool(self.separating_split)
                and bool(self.pants_v) and bool(self.pants_w))
        if not base:
            return False
        if self.all_disjoint:
            return self.pants_disjoint is not False
        return self.replacement is not None


def _pants_faces(analysis, want_pants=True):
    for idx, comp in enumerate(analysis.components):
        if comp.genus == 0 and len(comp.boundaries) == 3:
            return set(comp.faces)
    return None


def check_four_disk_config(d_bar: DiskClass, d_tilde: DiskClass,
                           e_bar: DiskClass, e_tilde: DiskClass,
                           replacement_pool=None) -> FourDiskReport:
    """Evaluate the four conditions a consecutive differently-labelled edge
    pair imposes on its four disks: distinct boundary classes, one
    separating disk per side, a pair of pants cut off on each side (the two
    pants disjoint when the four curves are), and all four disjoint or a
    separating disk replaceable to make them so."""
    from . import diagram as D

    schema = d_bar.boundary.schema
    disks = [d_bar, d_tilde, e_bar, e_tilde]
    keys = [d.key for d in disks]
    report = FourDiskReport(distinct=len(set(keys)) == 4,
                            separating_split=None, pants_v=None,
                            pants_w=None, pants_disjoint=None,
                            all_disjoint=False, replacement=None)
    sep_v = int(d_bar.separating_in_side) + int(d_tilde.separating_in_side)
    sep_w = int(e_bar.separating_in_side) + int(e_tilde.separating_in_side)
    report.separating_split = (sep_v == 1 and sep_w == 1)

    def pair_pants(c1, c2):
        if c1.key == c2.key or C.geometric_intersection(c1, c2) != 0:
            return None
        cut = C.cut_surface(schema, [c1, c2])
        return any(comp.genus == 0 and comp.n_scars == 3
                   for comp in cut.components)

    report.pants_v = pair_pants(d_bar.boundary, d_tilde.boundary)
    report.pants_w = pair_pants(e_bar.boundary, e_tilde.boundary)

    pairwise = {}
    for i in range(4):
        for j in range(i + 1, 4):
            ci, cj = disks[i].boundary, disks[j].boundary
            pairwise[(i, j)] = (ci.key != cj.key
                                and C.geometric_intersection(ci, cj) == 0)
    report.all_disjoint = all(pairwise.values())

    if report.all_disjoint and report.pants_v and report.pants_w:
        diag = D.disjoint_overlay(schema, keys)
        ana_d = D.CutAnalysis(diag, cut_curves=[0, 1])
        ana_e = D.CutAnalysis(diag, cut_curves=[2, 3])
        faces_d = _pants_faces(ana_d)
        faces_e = _pants_faces(ana_e)
        if faces_d is None or faces_e is None:
            report.notes.append("pants component not visible in joint cut")
        else:
            report.pants_disjoint = not (faces_d & faces_e)

    if not report.all_disjoint and replacement_pool is not None:
        for candidate in sorted(replacement_pool):
            if not candidate.separating_in_side:
                continue
            for slot in range(4):
                if not disks[slot].separating_in_side:
                    continue
                trial = list(disks)
                trial[slot] = candidate
                if len({t.key for t in trial}) != 4:
                    continue
                ok = True
                for i in range(4):
                    for j in range(i + 1, 4):
                        ci, cj = trial[i].boundary, trial[j].boundary
                        if ci.key == cj.key or \
                                C.geometric_intersection(ci, cj) != 0:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
                sub = check_four_disk_config(trial[0], trial[1], trial[2],
                                             trial[3])
                if sub.satisfied():
                    report.replacement = candidate
                    report.notes.append(
                        f"replaced disk {slot} by {candidate.word_str()}")
                    return report
    return report


# ---------------------------------------------------------------------------
# sphere audit (mixed S^2 components)


def audit_sphere_components(fixed: DiskClass, others):
    """Cut along all boundaries; report genus-0 components whose scars mix
    the fixed disk with at least one of the others (a stabilization or
    reducibility alarm on genuine data)."""
    if not others:
        return []
    schema = fixed.boundary.schema
    curves = [fixed.boundary] + [d.boundary for d in others]
    cut = C.cut_surface(schema, curves)
    witnesses = []
    for comp in cut.components:
        if comp.genus != 0:
            continue
        ids = {scar[0] for scar in comp.scars}
        if 0 in ids and ids & set(range(1, len(curves))):
            witnesses.append(comp)
    return witnesses


# ---------------------------------------------------------------------------
# canceling pairs


def detect_canceling_pairs(disks_v, disks_w):
    """Cross-side pairs meeting in exactly one point (stabilization)."""
    out = []
    for d in sorted(disks_v):
        for e in sorted(disks_w):
            if C.geometric_intersection(d.boundary, e.boundary) == 1:
                out.append((d, e))
    return out


def canceling_to_weak_reducing(d_bar: DiskClass, e_bar: DiskClass,
                               splitting: Splitting) -> WRVertex:
    """From a canceling pair, produce a weak reducing pair keeping one disk:
    the boundary of a regular neighborhood of the union of the two
    boundaries bounds a disk on the compressed side."""
    schema = splitting.schema
    if schema.genus < 2:
        raise GenusTooSmall("need ambient genus at least two")
    if C.geometric_intersection(d_bar.boundary, e_bar.boundary) != 1:
        raise NotCanceling("disks do not intersect in a single point")
    from . import diagram as D
    diag = D.staged_overlay(schema, [d_bar.key, e_bar.key])
    assert diag.crossings_between(0, 1) == 1
    words = []
    for ci in range(2):
        events = diag.curves[ci]
        pos = next(j for j, ev in enumerate(events) if ev[0] == D.E_CROSS)
        rotated = events[pos + 1:] + events[:pos + 1]
        words.append(tuple(ev[1] for ev in rotated if ev[0] == D.E_EDGE))
    u, v = words
    from . import words as W
    neighborhood_boundary = u + v + W.inverse(u) + W.inverse(v)
    cls = C.curve_class(neighborhood_boundary, schema)
    if C.geometric_intersection(cls, d_bar.boundary) == 0 and \
            S.bounds_disk(cls, splitting.W):
        return WRVertex(d_bar, DiskClass(cls, "W"),
                        equal_boundary=cls.key == d_bar.key)
    if C.geometric_intersection(cls, e_bar.boundary) == 0 and \
            S.bounds_disk(cls, splitting.V):
        return WRVertex(DiskClass(cls, "V"), e_bar,
                        equal_boundary=cls.key == e_bar.key)
    raise ValidationError(
        "neighborhood boundary of the canceling pair bounds on neither side")


# ---------------------------------------------------------------------------
# band-sum families (cluster hands)


def generate_band_sum_disks(vertex: WRVertex, k: int, vary: str,
                            splitting: Splitting,
                            max_candidates: int = 400):
    """At least k edges at `vertex` obtained by band-summing two parallel
    copies of its disk on the varying side along arcs in distinct isotopy
    classes; the produced disks are pairwise non-isotopic separating disks
    disjoint from both disks of the vertex."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    if vary not in ("V", "W"):
        raise ValidationError("vary must be 'V' or 'W'")
    schema = splitting.schema
    moving = vertex.d if vary == "V" else vertex.e
    fixed = vertex.e if vary == "V" else vertex.d
    if moving.boundary.is_separating:
        raise NotNonSeparating("varying disk must be non-separating")
    side = splitting.side(vary)
    label = "E" if vary == "W" else "D"

    results = []
    seen = {moving.key, fixed.key}
    candidates = _band_arc_candidates(schema, moving.boundary, max_candidates)
    for datum in candidates:
        try:
            word, cls = C.band_sum(moving.boundary, moving.boundary, datum)
        except ValidationError:
            continue
        if cls is None or cls.key in seen:
            continue
        if not cls.is_separating:
            continue
        if C.geometric_intersection(cls, moving.boundary) != 0:
            continue
        if C.geometric_intersection(cls, fixed.boundary) != 0:
            continue
        if not S.bounds_disk(cls, side):
            continue
        seen.add(cls.key)
        new_disk = DiskClass(cls, vary)
        if vary == "V":
            new_vertex = WRVertex(new_disk, vertex.e)
            edge = WREdge(*sorted((vertex, new_vertex)), label="D")
        else:
            new_vertex = WRVertex(vertex.d, new_disk)
            edge = WREdge(*sorted((vertex, new_vertex)), label="E")
        results.append(edge)
        if len(results) >= k:
            return results
    raise ArcBudgetExceeded(
        f"found only {len(results)} of {k} band-sum disks within budget")


def _band_arc_candidates(schema, curve: CurveClass, cap: int):
    """Deterministic arc data stream: words ordered by length then value."""
    tokens = []
    for letter in range(1, schema.num_letters + 1):
        tokens.extend([letter, -letter])
    words = [()]
    frontier = [()]
    while len(words) < cap:
        nxt = []
        for w in frontier:
            for t in tokens:
                if w and t == -w[-1]:
                    continue
                nw = w + (t,)
                nxt.append(nw)
        frontier = nxt
        words.extend(frontier)
        if not frontier:
            break
    out = []
    n = len(curve.key)
    for w in words[:cap]:
        for pos1 in range(min(n, 2)):
            for s1, s2 in (("L", "R"), ("L", "L"), ("R", "R"), ("R", "L")):
                out.append(ArcDatum(pos1, s1, 0, s2, w))
                if len(out) >= cap:
                    return out
    return out


# ---------------------------------------------------------------------------
# Bachman sequences


@dataclass(frozen=True)
class BachmanSequence:
    """Alternating disk sequence D0-E0-D1-E1-...-Dm-Em with the step rules:
    consecutive D's (and E's) equal or disjoint, every (Di, Ei) and every
    (D_{i+1}, Ei) a weak reducing pair."""
    entries: tuple  # tuple of (DiskClass, DiskClass) pairs

    def length(self):
        return len(self.entries)

    def validate(self):
        if not self.entries:
            raise InvalidSequence("empty sequence")
        for (d1, e1), (d2, e2) in zip(self.entries, self.entries[1:]):
            for a, b in ((d1, d2), (e1, e2)):
                if a.key != b.key and \
                        C.geometric_intersection(a.boundary, b.boundary) != 0:
                    raise InvalidSequence(
                        "consecutive disks neither equal nor disjoint")
            if C.geometric_intersection(d2.boundary, e1.boundary) != 0 \
                    and d2.key != e1.key:
                raise InvalidSequence("(D_{i+1}, E_i) is not weak reducing")
        for d, e in self.entries:
            if C.geometric_intersection(d.boundary, e.boundary) != 0 \
                    and d.key != e.key:
                raise InvalidSequence("(D_i, E_i) is not weak reducing")


def path_to_sequence(path) -> BachmanSequence:
    """Concatenate the per-edge sequences, identifying common segments.

    `path` is a list of vertices forming a simple edge path (a single
    vertex is allowed and yields the one-pair sequence)."""
    if not path:
        raise NotAPath("empty path")
    if len(set(v.sort_key for v in path)) != len(path):
        raise NotAPath("path revisits a vertex")
    entries = [(path[0].d, path[0].e)]
    for u, w in zip(path, path[1:]):
        shared_d = u.d.key == w.d.key
        shared_e = u.e.key == w.e.key
        if shared_d == shared_e:
            raise NotAPath("consecutive pairs do not span an edge")
        entries.append((u.d, w.e) if shared_d else (u.d, u.e))
        entries.append((w.d, w.e))
    seq = BachmanSequence(tuple(entries))
    seq.validate()
    return seq


def sequence_to_path(seq: BachmanSequence):
    """Read the sequence pair by pair, emitting an edge whenever the moving
    disk changes; returns the vertex path (endpoints preserved)."""
    seq.validate()
    entries = seq.entries
    path = [WRVertex(entries[0][0], entries[0][1],
                     equal_boundary=entries[0][0].key == entries[0][1].key)]
    for (d1, e1), (d2, e2) in zip(entries, entries[1:]):
        cur = path[-1]
        # D-step: D1-E1-D2 gives the vertex (D2, E1)
        if d2.key != cur.d.key:
            nxt = WRVertex(d2, cur.e, equal_boundary=d2.key == cur.e.key)
            path.append(nxt)
        # E-step: E1-D2-E2 gives the vertex (D2, E2)
        cur = path[-1]
        if e2.key != cur.e.key:
            nxt = WRVertex(cur.d, e2, equal_boundary=cur.d.key == e2.key)
            path.append(nxt)
    return path


# ---------------------------------------------------------------------------
# the criticality gate


@dataclass
class GateReport:
    verdict: str   # CriticalCertified | AmalgamationDetected | HypothesisFailed | Inconclusive
    witnesses: tuple | None
    bounds_used: tuple
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def summary_lineses(self):
        return self.summary_lines()

    def summary_lines(self):
        lines = [f"verdict: {self.verdict}",
                 f"bounds: max-word-length={self.bounds_used[0]} "
                 f"band-sum-depth={self.bounds_used[1]}"]
        if self.witnesses:
            (v0, v1, i01, i10) = self.witnesses
            lines.append(f"witness pair 0: {v0}")
            lines.append(f"witness pair 1: {v1}")
            lines.append(f"i(D0,E1) = {i01}, i(D1,E0) = {i10}")
        for c in self.counterexamples:
            lines.append(f"counterexample: {c}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return lines


def criticality_gate(splitting: Splitting, bounds, disks_v=None, disks_w=None,
                     graph: WRGraph | None = None) -> GateReport:
    """Certify the criticality criterion over the enumerated window.

    (i) searches weak reducing pairs (D0,E0), (D1,E1) with both cross
    intersections positive (existential: a finite witness is sound);
    (ii) scans for a pair whose two disks each cut off a solid torus in
    their sides (universal: verified only within the window, so the verdict
    is always stamped with the bounds).  Standing hypotheses are checked
    first: a canceling pair (stabilized) or a shared-boundary pair
    (reducible) makes the criterion inapplicable.
    """
    max_len, band_depth = bounds
    if disks_v is None:
        disks_v = list(S.enumerate_disks(splitting.V, max_len, band_depth))
    if disks_w is None:
        disks_w = list(S.enumerate_disks(splitting.W, max_len, band_depth))
    if graph is None:
        graph = build_wr(disks_v, disks_w)

    report = GateReport(verdict="Inconclusive", witnesses=None,
                        bounds_used=(max_len, band_depth))

    # (ii) excluded configuration: both disks cut off solid tori
    genus3 = splitting.schema.genus == 3
    unknowns = []
    if genus3:
        for v in graph.vertices:
            if v.equal_boundary:
                continue
            if not (v.d.separating_in_side and v.e.separating_in_side):
                continue
            c1 = S.cuts_off_solid_torus(v.d, splitting.V)
            c2 = S.cuts_off_solid_torus(v.e, splitting.W)
            if c1 is None or c2 is None:
                unknowns.append(v)
            elif c1 and c2:
                report.counterexamples.append(
                    f"both disks of {v} cut off solid tori")
                report.verdict = ("AmalgamationDetected"
                                  if splitting.is_closed()
                                  else "HypothesisFailed")
                return report

    reducible = graph.reducibility_witnesses()
    if reducible:
        report.counterexamples.extend(
            f"reducing pair with shared boundary: {v}" for v in reducible)
        report.notes.append("splitting is reducible; criterion not applicable")
        return report

    canceling = detect_canceling_pairs(disks_v, disks_w)
    if canceling:
        report.counterexamples.extend(
            f"canceling pair: ({d.word_str()}, {e.word_str()})"
            for d, e in canceling)
        report.notes.append("splitting is stabilized; criterion not applicable")
        return report

    if not genus3:
        report.notes.append("criterion applies to genus-3 splittings only")
        return report

    if unknowns:
        report.notes.append(
            f"{len(unknowns)} separating pairs with unknown solid-torus status")
        return report

    # (i) witness search
    plain = [v for v in graph.vertices if not v.equal_boundary]
    for v0, v1 in itertools.combinations(plain, 2):
        i01 = C.geometric_intersection(v0.d.boundary, v1.e.boundary)
        if i01 == 0:
            continue
        i10 = C.geometric_intersection(v1.d.boundary, v0.e.boundary)
        if i10 == 0:
            continue
        report.witnesses = (v0, v1, i01, i10)
        report.verdict = "CriticalCertified"
        return report
    report.notes.append("no witness pair with both cross intersections found")
    return report
