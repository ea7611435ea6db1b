"""Closed orientable surface as an oriented polygon gluing.

The standard genus-g schema is the 4g-gon with counterclockwise boundary
word a1 b1 A1 B1 a2 b2 A2 B2 ... (uppercase = inverse).  Side s is
parameterized by t in [0,1] along the ccw direction and is glued to its
partner side with t <-> 1-t, which makes the quotient orientable with a
single vertex.

Curves transverse to the edge system are recorded by their cyclic crossing
words; token +k means the curve exits the polygon through the positive side
of edge k-1 (and re-enters through the negative side), token -k the reverse.
Free homotopy classes of such curves are conjugacy classes in the one-relator
group on the edge alphabet whose relator is the word read by a small loop
around the vertex; for genus >= 2 that presentation is C'(1/6), so Dehn's
algorithm plus half-relator swaps canonicalize conjugacy classes.  Genus 1 is
handled by abelianization (the group is Z^2).
"""
from __future__ import annotations

from functools import lru_cache

from . import words as W
from .errors import MalformedWord, ValidationError
from .words import Word


class SurfaceSchema:
    """Polygon gluing for a closed orientable genus-g surface, g >= 1."""

    def __init__(self, genus: int):
        if genus < 1:
            raise ValidationError("genus must be >= 1")
        self.genus = genus
        self.num_letters = 2 * genus
        self.num_sides = 4 * genus
        # polygon[s] = signed letter of side s (1-based letter, sign = orientation)
        polygon = []
        for i in range(genus):
            a, b = 2 * i + 1, 2 * i + 2
            polygon += [a, b, -a, -b]
        self.polygon: tuple[int, ...] = tuple(polygon)
        # partner side under the gluing
        pos = {}
        self.partner = [0] * self.num_sides
        for s, tok in enumerate(self.polygon):
            if -tok in pos:
                o = pos.pop(-tok)
                self.partner[s], self.partner[o] = o, s
            else:
                pos[tok] = s
        if pos:
            raise ValidationError("polygon word does not glue sides in pairs")
        self._positive_side = {}
        self._negative_side = {}
        for s, tok in enumerate(self.polygon):
            if tok > 0:
                self._positive_side[tok] = s
            else:
                self._negative_side[-tok] = s
        self.vertex_cycle = self._trace_vertex_link()
        self.dual_relator: Word = tuple(tok for _, tok in self.vertex_cycle)
        if self.genus >= 2:
            self.relator_table = W.RelatorTable(self.dual_relator)
        else:
            self.relator_table = None

    # -- basic structure ---------------------------------------------------

    def positive_side(self, letter: int) -> int:
        """Side carrying letter (1-based) with positive orientation."""
        return self._positive_side[letter]

    def negative_side(self, letter: int) -> int:
        return self._negative_side[letter]

    def exit_side(self, token: int) -> int:
        """Polygon side through which a crossing with this token exits."""
        return self.positive_side(token) if token > 0 else self.negative_side(-token)

    def entry_side(self, token: int) -> int:
        return self.partner[self.exit_side(token)]

    def _trace_vertex_link(self):
        """Walk a small loop around the vertex.

        From the wedge at corner k (between side k-1 and side k) the loop
        crosses edge(side k) near its t=0 end and lands in the wedge at
        corner partner(k)+1.  Returns the list of (corner, token crossed)
        in loop order and checks the gluing has a single vertex.
        """
        n = self.num_sides
        seen = []
        k = 0
        visited = set()
        while True:
            if k in visited:
                break
            visited.add(k)
            tok_letter = abs(self.polygon[k])
            tok = tok_letter if self.polygon[k] > 0 else -tok_letter
            seen.append((k, tok))
            k = (self.partner[k] + 1) % n
        if len(seen) != n or k != 0:
            raise ValidationError("gluing does not have a single vertex")
        return seen

    def euler_characteristic(self) -> int:
        # one vertex, 2g edges, one face
        return 1 - self.num_letters + 1

    # -- words and canonical keys ------------------------------------------

    def parse(self, tokens) -> Word:
        return W.parse_word(tokens, self.num_letters)

    def reduce(self, word: Word) -> Word:
        """Cyclic Dehn reduction of a crossing word (free reduction at genus 1)."""
        if self.genus == 1:
            return self._torus_normal_form(word)
        return W.dehn_cyclic_reduce(word, self.relator_table)

    def _torus_normal_form(self, word: Word) -> Word:
        p, q = W.signed_counts(word, 2)
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        return tuple([1] * p + [2] * q) if (p or q) else ()

    def canonical_key(self, word: Word) -> Word:
        """Canonical form of the unoriented free-homotopy class of `word`.

        Genus >= 2: lexicographically minimal rotation over the half-swap
        closure of the Dehn-reduced word and of its inverse.  Genus 1:
        abelianized normal form up to sign.
        """
        return self._canonical_key_cached(tuple(word))

    @lru_cache(maxsize=200000)
    def _canonical_key_cached(self, word: Word) -> Word:
        if self.genus == 1:
            return self._torus_normal_form(word)
        w = W.dehn_cyclic_reduce(word, self.relator_table)
        while True:
            closure = W.half_swap_closure(w, self.relator_table)
            best = min(closure, key=lambda u: (len(u), u))
            if len(best) < len(w):
                w = W.dehn_cyclic_reduce(best, self.relator_table)
                continue
            break
        candidates = []
        for u in closure:
            candidates.append(W.min_rotation(u))
            candidates.append(W.min_rotation(W.cyclic_reduce(W.inverse(u))))
        return min(candidates)

    def oriented_key(self, word: Word) -> Word:
        """Like canonical_key but keeping the curve's orientation."""
        if self.genus == 1:
            p, q = W.signed_counts(word, 2)
            return tuple([1] * p + [2] * q) if p >= 0 else tuple([-1] * (-p) + [-2] * (-q))
        w = W.dehn_cyclic_reduce(word, self.relator_table)
        closure = W.half_swap_closure(w, self.relator_table)
        return min(W.min_rotation(u) for u in closure)

    def same_class(self, w1: Word, w2: Word) -> bool:
        return self.canonical_key(w1) == self.canonical_key(w2)

    def is_trivial(self, word: Word) -> bool:
        return self.canonical_key(word) == ()

    # -- homology -----------------------------------------------------------

    def homology_class(self, word: Word) -> tuple[int, ...]:
        """Class in H_1(F; Z) in the basis of single-crossing dual curves."""
        return tuple(W.signed_counts(word, self.num_letters))

    def mod2_class(self, word: Word) -> tuple[int, ...]:
        return tuple(W.parity_counts(word, self.num_letters))

    def validate_word(self, word: Word) -> None:
        for t in word:
            if t == 0 or abs(t) > self.num_letters:
                raise MalformedWord(f"token {t} outside alphabet")

    # -- edge push-offs ------------------------------------------------------

    def edge_pushoff_word(self, letter: int, side: int = 0) -> Word:
        """Crossing word of a parallel push-off of the edge-loop `letter`.

        The push-off follows the edge and closes up around the vertex,
        crossing the edge-ends strictly between this edge's finish end and
        its start end in the vertex cycle (side 0) or the complementary way
        around (side 1).  Both choices are freely homotopic to the edge loop.
        """
        if not 1 <= letter <= self.num_letters:
            raise MalformedWord(f"letter {letter} outside alphabet")
        cycle = self.vertex_cycle
        n = len(cycle)
        start_pos = finish_pos = None
        for i, (corner, tok) in enumerate(cycle):
            side_letter = self.polygon[corner]
            if abs(side_letter) == letter:
                if side_letter > 0:
                    start_pos = i     # crossing the t=0 end of the positive side
                else:
                    finish_pos = i    # t=0 of the negative side = finish end
        assert start_pos is not None and finish_pos is not None
        if side == 0:
            # forward in the cycle from just after finish to just before start
            toks = []
            i = (finish_pos + 1) % n
            while i != start_pos:
                toks.append(cycle[i][1])
                i = (i + 1) % n
            return tuple(toks)
        # backward: from just before finish to just after start, inverted
        toks = []
        i = (finish_pos - 1) % n
        while i != start_pos:
            toks.append(-cycle[i][1])
            i = (i - 1) % n
        return tuple(toks)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "polygon": [W.token_str(t) for t in self.polygon],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SurfaceSchema":
        schema = cls(int(data["genus"]))
        if "polygon" in data:
            given = tuple(W.parse_word(data["polygon"], schema.num_letters))
            if given != schema.polygon:
                raise ValidationError("only the standard 4g-gon polygon word is supported")
        return schema

    def __repr__(self):
        return f"SurfaceSchema(genus={self.genus})"

    def __eq__(self, other):
        return isinstance(other, SurfaceSchema) and other.genus == self.genus

    def __hash__(self):
        return hash(("SurfaceSchema", self.genus))
