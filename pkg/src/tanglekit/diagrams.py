"""Unoriented link diagrams as PD codes, plus braid words and closures.

A crossing is a 4-tuple of arc labels read counterclockwise starting at
an end of the under-strand, so positions 0 and 2 carry the under-strand
and positions 1 and 3 the over-strand.  Labels name the *edges* of the
diagram (segments between crossing ends); the two over-strand edges at
a crossing belong to the same strand of the link, and `strand_classes`
merges them into the arcs used by colorings and Kei presentations.
Crossing-free circles are carried as an explicit counter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedDiagram, ParseError


def _unionfind_roots(parent: list[int]) -> None:
    for i in range(len(parent)):
        r = i
        while parent[r] != r:
            r = parent[r]
        while parent[i] != r:
            parent[i], i = r, parent[i]


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@dataclass(frozen=True)
class LinkDiagram:
    """Immutable PD diagram. `crossings` is a tuple of 4-tuples of arc ids."""

    crossings: tuple[tuple[int, int, int, int], ...]
    arc_count: int
    unknotted_split_circles: int = 0

    def __post_init__(self):
        seen: dict[int, int] = {}
        for x in self.crossings:
            if len(x) != 4:
                raise MalformedDiagram(f"crossing {x!r} does not have 4 ends")
            for a in x:
                seen[a] = seen.get(a, 0) + 1
        for a, k in seen.items():
            if k != 2:
                raise MalformedDiagram(f"arc {a} appears {k} times, expected 2")
        if seen and (min(seen) != 0 or max(seen) != self.arc_count - 1):
            raise MalformedDiagram("arc ids are not dense in 0..arc_count-1")
        if len(seen) != self.arc_count:
            raise MalformedDiagram("arc_count does not match the crossing data")
        if self.unknotted_split_circles < 0:
            raise MalformedDiagram("negative split circle count")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def strand_classes(self) -> list[int]:
        """Map each arc id to its strand (over-strand edges merged).

        Returns a dense relabeling arc id -> strand id; strands are the
        coloring variables of the diagram.
        """
        parent = list(range(self.arc_count))
        for _, b, _, d in self.crossings:
            rb, rd = _find(parent, b), _find(parent, d)
            if rb != rd:
                parent[max(rb, rd)] = min(rb, rd)
        _unionfind_roots(parent)
        label: dict[int, int] = {}
        out = []
        for a in range(self.arc_count):
            r = parent[a]
            if r not in label:
                label[r] = len(label)
            out.append(label[r])
        return out

    def strand_count(self) -> int:
        classes = self.strand_classes()
        return (max(classes) + 1 if classes else 0) + self.unknotted_split_circles

    def component_count(self) -> int:
        parent = list(range(self.arc_count))
        for a, b, c, d in self.crossings:
            for x, y in ((a, c), (b, d)):
                rx, ry = _find(parent, x), _find(parent, y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        roots = {_find(parent, a) for a in range(self.arc_count)}
        return len(roots) + self.unknotted_split_circles

    def mirror(self) -> "LinkDiagram":
        """Switch every crossing by rotating its tuple one position."""
        return LinkDiagram(
            tuple((b, c, d, a) for a, b, c, d in self.crossings),
            self.arc_count,
            self.unknotted_split_circles,
        )

    def canonical_key(self):
        """Key identifying the diagram up to the 2-fold tuple rotation.

        Rotating a crossing tuple by two positions names the same
        unoriented crossing, so the key quotients that out.
        """
        norm = tuple(
            sorted(min((a, b, c, d), (c, d, a, b)) for a, b, c, d in self.crossings)
        )
        return (norm, self.arc_count, self.unknotted_split_circles)

    def serialize(self) -> str:
        lines = [f"X {a} {b} {c} {d}" for a, b, c, d in self.crossings]
        if self.unknotted_split_circles:
            lines.append(f"O {self.unknotted_split_circles}")
        return "\n".join(lines) + ("\n" if lines else "")


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD-code text: lines `X a b c d` plus optional `O k` lines."""
    crossings = []
    circles = 0
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind, args = tokens[0].upper(), tokens[1:]
        try:
            values = [int(t) for t in args]
        except ValueError as exc:
            raise ParseError(f"line {ln}: non-integer token in {raw!r}") from exc
        if kind == "X":
            if len(values) != 4:
                raise ParseError(f"line {ln}: crossing needs 4 arc ids, got {len(values)}")
            crossings.append(tuple(values))
        elif kind == "O":
            if len(values) != 1 or values[0] < 0:
                raise ParseError(f"line {ln}: O takes one non-negative count")
            circles += values[0]
        else:
            raise ParseError(f"line {ln}: unknown record {kind!r}")

    # normalize arc ids to a dense 0..n-1 range, preserving order of first use
    relabel: dict[int, int] = {}
    for x in crossings:
        for a in x:
            if a not in relabel:
                relabel[a] = len(relabel)
    dense = tuple(tuple(relabel[a] for a in x) for x in crossings)
    return LinkDiagram(dense, len(relabel), circles)


@dataclass(frozen=True)
class BraidWord:
    """Braid word in B_n: letters are nonzero ints i, |i| <= strands-1."""

    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise ValueError(f"letter {g} not a generator of B_{self.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def __pow__(self, n: int) -> "BraidWord":
        w = self if n >= 0 else self.inverse()
        return BraidWord(self.strands, w.letters * abs(n))

    def permutation(self) -> list[int]:
        """Image in the symmetric group (0-indexed, position map top to bottom)."""
        perm = list(range(self.strands))
        for g in self.letters:
            i = abs(g) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        cycles = 0
        for i in range(self.strands):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return cycles


def braid(letters, strands: int | None = None) -> BraidWord:
    letters = tuple(letters)
    if strands is None:
        strands = max((abs(g) for g in letters), default=0) + 1
        strands = max(strands, 1)
    return BraidWord(strands, letters)


def delta3() -> BraidWord:
    """The half twist in B_3."""
    return BraidWord(3, (1, 2, 1))


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    try:
        letters = tuple(int(t) for t in text.split())
    except ValueError as exc:
        raise ParseError(f"bad braid word {text!r}") from exc
    return braid(letters, strands)


def braid_closure(w: BraidWord) -> LinkDiagram:
    """Standard closure of a braid word as a PD diagram.

    One crossing per letter; strands untouched by any letter close up
    into split circles.  With the strands running downward, a positive
    letter takes strand i over strand i+1; its PD tuple starts at the
    incoming upper-right under-end, a negative letter's at upper-left.
    """
    n = w.strands
    # ends[i] = current dangling edge token at strand position i
    ends = [("top", i) for i in range(n)]
    touched = [False] * n
    joins: list[tuple[object, object]] = []
    crossings_ports = []
    for k, g in enumerate(w.letters):
        i = abs(g) - 1
        touched[i] = touched[i + 1] = True
        nw, ne = (k, 0), (k, 1)
        sw, se = (k, 2), (k, 3)
        joins.append((ends[i], nw))
        joins.append((ends[i + 1], ne))
        if g > 0:
            crossings_ports.append((ne, nw, sw, se))
        else:
            crossings_ports.append((nw, sw, se, ne))
        ends[i], ends[i + 1] = sw, se
    circles = 0
    for i in range(n):
        if touched[i]:
            joins.append((ends[i], ("top", i)))
        else:
            circles += 1

    # connected chains of joins become the PD edges
    tokens: dict[object, int] = {}

    def tid(tok):
        if tok not in tokens:
            tokens[tok] = len(tokens)
        return tokens[tok]

    for k in range(len(w.letters)):
        for p in range(4):
            tid((k, p))
    parent = list(range(len(tokens) + 2 * len(joins)))
    for a, b in joins:
        ra, rb = _find(parent, tid(a)), _find(parent, tid(b))
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    label: dict[int, int] = {}
    pd = []
    for k in range(len(w.letters)):
        quad = []
        for port in crossings_ports[k]:
            r = _find(parent, tokens[port])
            if r not in label:
                label[r] = len(label)
            quad.append(label[r])
        pd.append(tuple(quad))
    return LinkDiagram(tuple(pd), len(label), circles)


def unlink(m: int) -> LinkDiagram:
    """Trivial link of m components."""
    return LinkDiagram((), 0, m)
