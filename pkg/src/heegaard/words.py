"""Crossing words over a polygon schema's edge alphabet.

A word is a tuple of nonzero ints: token +k is a positive crossing of edge
k-1, token -k the reverse crossing.  Edge 2i is "a(i+1)", edge 2i+1 is
"b(i+1)"; string form uses lowercase for positive tokens and uppercase for
inverse tokens ("a1", "B2", ...).  Words are cyclic unless stated otherwise.
"""
from __future__ import annotations

import re
from collections import deque

from .errors import BudgetExceeded, MalformedWord

Word = tuple[int, ...]

_TOKEN_RE = re.compile(r"([a-zA-Z])(\d+)")


def letter_name(index: int) -> str:
    """Name of edge letter `index` (0-based): a1, b1, a2, b2, ..."""
    base = "a" if index % 2 == 0 else "b"
    return f"{base}{index // 2 + 1}"


def token_str(token: int) -> str:
    name = letter_name(abs(token) - 1)
    return name if token > 0 else name.upper()


def word_str(word: Word) -> str:
    return " ".join(token_str(t) for t in word) if word else "1"


def parse_token(text: str, num_letters: int) -> int:
    m = _TOKEN_RE.fullmatch(text.strip())
    if not m:
        raise MalformedWord(f"bad token {text!r}")
    char, num = m.group(1), int(m.group(2))
    if char.lower() not in ("a", "b") or num < 1:
        raise MalformedWord(f"bad token {text!r}")
    index = 2 * (num - 1) + (0 if char.lower() == "a" else 1)
    if index >= num_letters:
        raise MalformedWord(f"token {text!r} outside genus-{num_letters // 2} alphabet")
    return (index + 1) if char.islower() else -(index + 1)


def parse_word(tokens, num_letters: int) -> Word:
    """Parse a word given as a list of token strings or of signed ints."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    out = []
    for t in tokens:
        if isinstance(t, int):
            if t == 0 or abs(t) > num_letters:
                raise MalformedWord(f"bad integer token {t}")
            out.append(t)
        else:
            out.append(parse_token(t, num_letters))
    return tuple(out)


def inverse(word: Word) -> Word:
    return tuple(-t for t in reversed(word))


def free_reduce(word: Word) -> Word:
    out: list[int] = []
    for t in word:
        if out and out[-1] == -t:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def cyclic_reduce(word: Word) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def rotations(word: Word):
    for i in range(len(word)):
        yield word[i:] + word[:i]


def min_rotation(word: Word) -> Word:
    if not word:
        return word
    return min(rotations(word))


def is_cyclically_reduced(word: Word) -> bool:
    return word == cyclic_reduce(word)


class RelatorTable:
    """Subword lookup for the symmetrized set of one relator.

    Holds every cyclic rotation of the relator and of its inverse, and
    answers "which relators contain subword s starting where" queries used
    by Dehn reduction and half-relator swaps.
    """

    def __init__(self, relator: Word):
        self.relator = relator
        self.length = len(relator)
        variants = set()
        for base in (relator, inverse(relator)):
            for rot in rotations(base):
                variants.add(rot)
        self.variants = sorted(variants)
        # Map each subword of length > half to its completion; map each
        # subword of length exactly half to the set of completions.
        self.half = self.length // 2
        self._completions: dict[Word, set[Word]] = {}
        for r in self.variants:
            for ln in range(self.half, self.length):
                s = r[:ln]
                t = r[ln:]
                self._completions.setdefault(s, set()).add(t)

    def replacements(self, s: Word):
        """All words u with s * u^-1 a relator variant, i.e. s = u in the group."""
        outs = set()
        for t in self._completions.get(s, ()):
            outs.add(inverse(t))
        return outs


def dehn_cyclic_reduce(word: Word, table: RelatorTable) -> Word:
    """Shorten a cyclic word with Dehn's algorithm until no subword longer
    than half of the relator remains.  Deterministic: leftmost longest match
    on the minimal rotation is replaced first."""
    w = cyclic_reduce(word)
    n_rel = table.length
    variant_set = set(table.variants)
    while True:
        if not w:
            return w
        w = min_rotation(w)
        n = len(w)
        if n == n_rel and any(rot in variant_set for rot in rotations(w)):
            return ()
        doubled = w + w
        best = None
        max_len = min(n, n_rel - 1)
        for ln in range(max_len, n_rel // 2, -1):
            for start in range(n):
                s = doubled[start:start + ln]
                reps = table.replacements(s)
                if reps:
                    best = (start, ln, min(reps))
                    break
            if best:
                break
        if best is None:
            return w
        start, ln, rep = best
        # Cyclically w = s . remainder and s equals rep in the group.
        remainder = doubled[start + ln:start + n]
        w = cyclic_reduce(rep + remainder)


def half_swap_closure(word: Word, table: RelatorTable, cap: int = 20000) -> set[Word]:
    """All cyclic words reachable from `word` by swapping a subword equal to
    exactly half of a relator variant for the complementary half.

    Words are stored as minimal rotations.  Raises BudgetExceeded if the
    closure grows past `cap` (not expected for genuine curve classes).
    """
    half = table.half
    start = min_rotation(cyclic_reduce(word))
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        n = len(w)
        if n < half:
            continue
        doubled = w + w
        for pos in range(n):
            s = doubled[pos:pos + half]
            for rep in table.replacements(s):
                if rep == s:
                    continue
                candidate = cyclic_reduce(rep + doubled[pos + half:pos + n])
                if len(candidate) < n:
                    # A swap never shortens a Dehn-reduced word; if it does,
                    # the input was not fully reduced.  Reduce and restart.
                    candidate = dehn_cyclic_reduce(candidate, table)
                candidate = min_rotation(candidate)
                if candidate not in seen:
                    seen.add(candidate)
                    queue.append(candidate)
                    if len(seen) > cap:
                        raise BudgetExceeded(
                            f"half-swap closure exceeded {cap} words")
    return seen


def signed_counts(word: Word, num_letters: int) -> list[int]:
    counts = [0] * num_letters
    for t in word:
        counts[abs(t) - 1] += 1 if t > 0 else -1
    return counts


def parity_counts(word: Word, num_letters: int) -> list[int]:
    counts = [0] * num_letters
    for t in word:
        counts[abs(t) - 1] ^= 1
    return counts
