"""Rational tangle arithmetic and algebraic tangle expression trees.

Tangles sit in a disk with four boundary ends NW, NE, SW, SE.  The
numerator closure joins NW-NE and SW-SE, the denominator closure joins
NW-SW and NE-SE.  Horizontal composition glues the east side of the
left operand to the west side of the right one; `r` rotates a tangle a
quarter turn (on fractions: p/q -> -q/p).

A twist word [a1, a2, ..., ak] names the rational tangle with fraction
ak + 1/(a_{k-1} + 1/(... + 1/a1)), built by alternating twist stages
that end with a horizontal stage, so [2, 2] is the 5/2 tangle and [n]
the n/1 tangle of the n-move.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .coloring import AbelianGroupStructure, _divisor_chain, col_group, smith_normal_form
from .diagrams import LinkDiagram
from .errors import InvalidModulus, InvalidMoveSite, MalformedDiagram, ParseError


@dataclass(frozen=True)
class RationalTangle:
    """Reduced fraction p/q with q >= 0; (1, 0) is the infinity tangle."""

    p: int
    q: int
    twist_word: tuple[int, ...] | None = None

    @staticmethod
    def make(p: int, q: int, twist_word=None) -> "RationalTangle":
        if q == 0:
            return RationalTangle(1, 0, twist_word)
        if q < 0:
            p, q = -p, -q
        g = gcd(abs(p), q)
        if g > 1:
            p, q = p // g, q // g
        return RationalTangle(p, q, twist_word)

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def fraction(self) -> tuple[int, int]:
        return (self.p, self.q)

    def __str__(self):
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


def fraction_of_twists(twists) -> RationalTangle:
    """Continued-fraction value of a twist word; [] is the 0-tangle."""
    twists = tuple(int(a) for a in twists)
    if not twists:
        return RationalTangle.make(0, 1, twists)
    p, q = twists[0], 1
    for a in twists[1:]:
        # a + 1/(p/q)
        p, q = a * p + q, p
    return RationalTangle.make(p, q, twists)


def rotate(t: RationalTangle) -> RationalTangle:
    """Quarter-turn rotation: p/q -> -q/p."""
    rt = RationalTangle.make(-t.q, t.p)
    word = None if rt.q == 0 else tuple(cf_expand(rt.p, rt.q))
    return RationalTangle.make(rt.p, rt.q, word)


def cf_expand(p: int, q: int) -> list[int]:
    """A twist word evaluating to p/q (q >= 1) under fraction_of_twists."""
    if q < 1:
        raise ValueError("cf_expand needs a finite fraction with q >= 1")
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    terms.reverse()
    return terms


# --- expression trees ----------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    kind: str  # one of: t0, tinf, x+, x-

    def __post_init__(self):
        if self.kind not in ("t0", "tinf", "x+", "x-"):
            raise ValueError(f"unknown leaf {self.kind!r}")


@dataclass(frozen=True)
class TwistLeaf:
    twists: tuple[int, ...]


@dataclass(frozen=True)
class Comp:
    """Horizontal composition r^i(left) * r^j(right), i and j in {0, 1}."""

    i: int
    j: int
    left: "TangleExpr"
    right: "TangleExpr"

    def __post_init__(self):
        if self.i not in (0, 1) or self.j not in (0, 1):
            raise ValueError("rotation exponents are taken in {0, 1}")


TangleExpr = Leaf | TwistLeaf | Comp

T0 = Leaf("t0")
TINF = Leaf("tinf")
XPLUS = Leaf("x+")
XMINUS = Leaf("x-")


def serialize_expr(t: TangleExpr) -> str:
    if isinstance(t, Leaf):
        return t.kind
    if isinstance(t, TwistLeaf):
        return "(tw " + " ".join(str(a) for a in t.twists) + ")"
    return f"(comp {t.i} {t.j} {serialize_expr(t.left)} {serialize_expr(t.right)})"


def parse_expr(text: str) -> TangleExpr:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> TangleExpr:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of tangle expression")
        tok = tokens[pos]
        pos += 1
        if tok in ("t0", "tinf", "x+", "x-"):
            return Leaf(tok)
        if tok != "(":
            raise ParseError(f"unexpected token {tok!r}")
        head = tokens[pos]
        pos += 1
        if head == "tw":
            vals = []
            while tokens[pos] != ")":
                vals.append(int(tokens[pos]))
                pos += 1
            pos += 1
            return TwistLeaf(tuple(vals))
        if head == "comp":
            i = int(tokens[pos]); pos += 1
            j = int(tokens[pos]); pos += 1
            left = parse()
            right = parse()
            if tokens[pos] != ")":
                raise ParseError("missing ')' in comp node")
            pos += 1
            return Comp(i, j, left, right)
        raise ParseError(f"unknown node {head!r}")

    try:
        out = parse()
    except (IndexError, ValueError) as exc:
        raise ParseError(f"bad tangle expression {text!r}") from exc
    if pos != len(tokens):
        raise ParseError("trailing tokens in tangle expression")
    return out


def leaf_sites(t: TangleExpr, kind: str = "t0") -> list[tuple[int, ...]]:
    """Paths (0 = left, 1 = right) of all leaves of the given kind."""
    out: list[tuple[int, ...]] = []

    def walk(node, path):
        if isinstance(node, Comp):
            walk(node.left, path + (0,))
            walk(node.right, path + (1,))
        elif isinstance(node, Leaf) and node.kind == kind:
            out.append(path)

    walk(t, ())
    return out


def apply_rational_move(
    t: TangleExpr, site: tuple[int, ...], n: int, q: int, sign: int = 1
) -> TangleExpr:
    """Replace the 0-tangle leaf at `site` with the +-n/q rational tangle.

    (n, q) = (5, 2) with sign +1 is the insertion of the [2, 2] clasp
    pair; sign -1 inserts its mirror [-2, -2].
    """
    if n < 1 or q < 1 or gcd(n, q) != 1:
        raise ValueError("rational move needs a reduced fraction n/q with n, q >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    word = cf_expand(n, q)
    if sign < 0:
        word = [-a for a in word]
    replacement = TwistLeaf(tuple(word))

    def rebuild(node, path):
        if not path:
            if not (isinstance(node, Leaf) and node.kind == "t0"):
                raise InvalidMoveSite(f"site does not address a 0-tangle leaf: {node}")
            return replacement
        if not isinstance(node, Comp):
            raise InvalidMoveSite("site walks past a leaf")
        if path[0] == 0:
            return Comp(node.i, node.j, rebuild(node.left, path[1:]), node.right)
        return Comp(node.i, node.j, node.left, rebuild(node.right, path[1:]))

    return rebuild(t, tuple(site))


# --- geometric realization ------------------------------------------------


class _Assembler:
    """Port/wire bookkeeping: tokens are wire ends, joins glue them."""

    def __init__(self):
        self.n = 0
        self.joins: list[tuple[int, int]] = []
        self.crossings: list[tuple[int, int, int, int]] = []

    def token(self) -> int:
        self.n += 1
        return self.n - 1

    def join(self, a: int, b: int) -> None:
        self.joins.append((a, b))

    def wire(self) -> tuple[int, int]:
        a, b = self.token(), self.token()
        self.join(a, b)
        return a, b

    def crossing(self, kind: str) -> tuple[int, int, int, int]:
        """Returns boundary (nw, ne, sw, se); records the PD tuple.

        Tuples run counterclockwise from an under-strand end: x+ has
        the SW-NE strand under, x- the SE-NW strand.
        """
        nw, ne, sw, se = (self.token() for _ in range(4))
        if kind == "x+":
            self.crossings.append((sw, se, ne, nw))
        else:
            self.crossings.append((se, ne, nw, sw))
        return nw, ne, sw, se


Bounds = tuple[int, int, int, int]  # nw, ne, sw, se


def _h_compose(asm: _Assembler, a: Bounds, b: Bounds) -> Bounds:
    asm.join(a[1], b[0])
    asm.join(a[3], b[2])
    return (a[0], b[1], a[2], b[3])


def _v_compose(asm: _Assembler, top: Bounds, bot: Bounds) -> Bounds:
    asm.join(top[2], bot[0])
    asm.join(top[3], bot[1])
    return (top[0], top[1], bot[2], bot[3])


def _rotated(b: Bounds, times: int) -> Bounds:
    for _ in range(times % 4):
        b = (b[1], b[3], b[0], b[2])
    return b


def _build_t0(asm: _Assembler) -> Bounds:
    nw, ne = asm.wire()
    sw, se = asm.wire()
    return (nw, ne, sw, se)


def _build_tinf(asm: _Assembler) -> Bounds:
    nw, sw = asm.wire()
    ne, se = asm.wire()
    return (nw, ne, sw, se)


def _build_twist_stage(asm: _Assembler, count: int, horizontal: bool) -> Bounds:
    kind = "x+" if count > 0 else "x-"
    if count == 0:
        return _build_t0(asm) if horizontal else _build_tinf(asm)
    cur = asm.crossing(kind)
    for _ in range(abs(count) - 1):
        nxt = asm.crossing(kind)
        cur = _h_compose(asm, cur, nxt) if horizontal else _v_compose(asm, cur, nxt)
    return cur


def _build_twists(asm: _Assembler, twists: tuple[int, ...]) -> Bounds:
    if not twists:
        return _build_t0(asm)
    k = len(twists)
    cur: Bounds | None = None
    for idx, a in enumerate(twists, 1):
        horizontal = (idx % 2) == (k % 2)
        block = _build_twist_stage(asm, a, horizontal)
        if cur is None:
            cur = block
        elif horizontal:
            cur = _h_compose(asm, cur, block)
        else:
            cur = _v_compose(asm, cur, block)
    return cur


def _build(asm: _Assembler, t: TangleExpr) -> Bounds:
    if isinstance(t, Leaf):
        if t.kind == "t0":
            return _build_t0(asm)
        if t.kind == "tinf":
            return _build_tinf(asm)
        return asm.crossing(t.kind)
    if isinstance(t, TwistLeaf):
        return _build_twists(asm, t.twists)
    left = _rotated(_build(asm, t.left), t.i)
    right = _rotated(_build(asm, t.right), t.j)
    return _h_compose(asm, left, right)


@dataclass(frozen=True)
class TangleDiagram:
    """PD data of an open tangle: four boundary arcs left dangling."""

    crossings: tuple[tuple[int, int, int, int], ...]
    arc_count: int
    boundary: tuple[int, int, int, int]  # arc ids at nw, ne, sw, se
    circles: int


def _finalize(asm: _Assembler, bounds: Bounds, closure: str | None):
    if closure == "numerator":
        asm.join(bounds[0], bounds[1])
        asm.join(bounds[2], bounds[3])
    elif closure == "denominator":
        asm.join(bounds[0], bounds[2])
        asm.join(bounds[1], bounds[3])
    elif closure is not None:
        raise ValueError(f"unknown closure kind {closure!r}")

    parent = list(range(asm.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in asm.joins:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    label: dict[int, int] = {}
    port_uses: dict[int, int] = {}
    for quad in asm.crossings:
        for tok in quad:
            r = find(tok)
            if r not in label:
                label[r] = len(label)
            port_uses[r] = port_uses.get(r, 0) + 1
    boundary_roots = [find(tok) for tok in bounds]
    if closure is None:
        for r in boundary_roots:
            if r not in label:
                label[r] = len(label)
    # classes touching neither a crossing nor the boundary are circles
    roots = {find(x) for x in range(asm.n)}
    circles = sum(1 for r in roots if r not in label)
    # every arc has exactly two ends, counting crossing ports and
    # (for an open tangle) dangling boundary ends
    ends: dict[int, int] = dict(port_uses)
    if closure is None:
        for r in boundary_roots:
            ends[r] = ends.get(r, 0) + 1
    for r, uses in ends.items():
        if uses != 2:
            raise MalformedDiagram("tangle wiring produced a bad arc valence")
    crossings = tuple(tuple(label[find(tok)] for tok in quad) for quad in asm.crossings)
    if closure is None:
        return TangleDiagram(
            crossings,
            len(label),
            tuple(label[r] for r in boundary_roots),
            circles,
        )
    return LinkDiagram(crossings, len(label), circles)


def closure_diagram(t: TangleExpr, kind: str = "numerator") -> LinkDiagram:
    """Close the tangle without new crossings and return its PD diagram."""
    if kind in ("num", "numerator"):
        kind = "numerator"
    elif kind in ("den", "denominator"):
        kind = "denominator"
    else:
        raise ValueError(f"closure kind must be numerator or denominator, got {kind!r}")
    asm = _Assembler()
    bounds = _build(asm, t)
    return _finalize(asm, bounds, kind)


def tangle_diagram(t: TangleExpr) -> TangleDiagram:
    asm = _Assembler()
    bounds = _build(asm, t)
    return _finalize(asm, bounds, None)


# --- the coloring obstruction to tangle embedding -------------------------


def _strand_classes_open(td: TangleDiagram) -> list[int]:
    parent = list(range(td.arc_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, b, _, dd in td.crossings:
        rb, rd = find(b), find(dd)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)
    label: dict[int, int] = {}
    out = []
    for a in range(td.arc_count):
        r = find(a)
        if r not in label:
            label[r] = len(label)
        out.append(label[r])
    return out


def tangle_coloring_counts(t: TangleExpr, n: int) -> tuple[int, int]:
    """(all tangle colorings, colorings vanishing on the boundary) mod n."""
    if not isinstance(n, int) or n < 2:
        raise InvalidModulus(f"modulus must be an integer >= 2, got {n!r}")
    td = tangle_diagram(t)
    classes = _strand_classes_open(td)
    n_strands = (max(classes) + 1) if classes else 0
    cols = n_strands + td.circles
    rows = []
    for a, b, c, _ in td.crossings:
        row = [0] * cols
        row[classes[a]] += 1
        row[classes[c]] += 1
        row[classes[b]] -= 2
        rows.append(row)

    def solution_count(mat) -> int:
        factors = smith_normal_form(mat) if mat else []
        orders = [gcd(n, f) for f in factors] + [n] * (cols - len(factors))
        return AbelianGroupStructure(_divisor_chain(orders)).order

    total = solution_count(rows)
    pinned = list(rows)
    for strand in sorted({classes[a] for a in td.boundary}):
        row = [0] * cols
        row[strand] = 1
        pinned.append(row)
    return total, solution_count(pinned)


def embedding_obstruction(t: TangleExpr, target: LinkDiagram, n: int) -> str:
    """'obstructed' when the tangle cannot sit inside the target link.

    If some coloring of the tangle vanishes on all four boundary ends
    without vanishing inside, then every link containing the tangle has
    a non-constant coloring extending the constant one outside; a
    target with only constant colorings therefore excludes the tangle.
    """
    _, pinned = tangle_coloring_counts(t, n)
    target_only_trivial = col_group(target, n).order == n
    if pinned > 1 and target_only_trivial:
        return "obstructed"
    return "inconclusive"
