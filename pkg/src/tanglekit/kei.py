"""Finite Kei (involutive quandles) as explicit operation tables.

A Kei is a set with a binary operation * satisfying

    (i)   a*a = a
    (ii)  (a*b)*b = a
    (iii) (a*b)*c = (a*c)*(b*c)

Elements are dense indices 0..size-1; `table[a][b]` holds a*b.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .errors import NotAGroup


@dataclass(frozen=True)
class FiniteKei:
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.table)
        for row in self.table:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise ValueError("operation table is not square over 0..n-1")

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def as_array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    def serialize(self) -> str:
        lines = [str(self.size)]
        lines += [" ".join(str(v) for v in row) for row in self.table]
        return "\n".join(lines) + "\n"


def parse_kei(text: str) -> FiniteKei:
    tokens = text.split()
    n = int(tokens[0])
    vals = [int(t) for t in tokens[1:]]
    if len(vals) != n * n:
        raise ValueError(f"expected {n * n} table entries, got {len(vals)}")
    return FiniteKei(tuple(tuple(vals[i * n : (i + 1) * n]) for i in range(n)))


def dihedral_kei(n: int) -> FiniteKei:
    """Z_n with i*j = 2j - i mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    return FiniteKei(tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n)))


def trivial_kei(n: int) -> FiniteKei:
    """a*b = a for all a, b."""
    return FiniteKei(tuple(tuple(i for _ in range(n)) for i in range(n)))


def core_kei(group_table) -> FiniteKei:
    """Core Kei of a finite group: a*b = b a^{-1} b."""
    t = [list(map(int, row)) for row in group_table]
    n = len(t)
    if any(len(row) != n for row in t) or any(
        not (0 <= v < n) for row in t for v in row
    ):
        raise NotAGroup("multiplication table is not square over 0..n-1")
    identity = None
    for e in range(n):
        if all(t[e][x] == x and t[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no identity element")
    inv = [None] * n
    for a in range(n):
        for b in range(n):
            if t[a][b] == identity and t[b][a] == identity:
                inv[a] = b
                break
        if inv[a] is None:
            raise NotAGroup(f"element {a} has no inverse")
    arr = np.array(t, dtype=np.int64)
    # (ab)c vs a(bc) on all triples
    if not np.array_equal(arr[arr, :], arr[:, arr]):
        raise NotAGroup("multiplication is not associative")
    return FiniteKei(
        tuple(tuple(t[b][t[inv[a]][b]] for b in range(n)) for a in range(n))
    )


def cyclic_group(n: int):
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def group_product(g1, g2):
    n1, n2 = len(g1), len(g2)
    out = []
    for a1 in range(n1):
        for a2 in range(n2):
            row = []
            for b1 in range(n1):
                for b2 in range(n2):
                    row.append(g1[a1][b1] * n2 + g2[a2][b2])
            out.append(tuple(row))
    return tuple(out)


def kei_product(k1: FiniteKei, k2: FiniteKei) -> FiniteKei:
    n1, n2 = k1.size, k2.size
    out = []
    for a1 in range(n1):
        for a2 in range(n2):
            row = []
            for b1 in range(n1):
                for b2 in range(n2):
                    row.append(k1.table[a1][b1] * n2 + k2.table[a2][b2])
            out.append(tuple(row))
    return FiniteKei(tuple(out))


def check_axioms(k: FiniteKei) -> list[tuple]:
    """All axiom violations as (axiom index, offending elements...)."""
    t = k.as_array()
    n = k.size
    out: list[tuple] = []
    if n == 0:
        return out
    idx = np.arange(n)

    bad = np.nonzero(np.diagonal(t) != idx)[0]
    out += [(1, int(a)) for a in bad]

    # (a*b)*b = a, column by column
    for b in range(n):
        col = t[:, b]
        bad = np.nonzero(col[col] != idx)[0]
        out += [(2, int(a), b) for a in bad]

    # (a*b)*c = (a*c)*(b*c), plane by plane in c
    for c in range(n):
        rho = t[:, c]
        lhs = rho[t]
        rhs = t[np.ix_(rho, rho)]
        for a, b in zip(*np.nonzero(lhs != rhs)):
            out.append((3, int(a), int(b), c))
    return out


def is_kei(table) -> bool:
    return not check_axioms(FiniteKei(tuple(tuple(r) for r in table)))


def _refine_colors(k: FiniteKei) -> tuple[tuple[int, ...], int]:
    """Iterated structural refinement; isomorphism-invariant coloring."""
    n = k.size
    t = k.table
    colors = [0] * n
    classes = 1
    while True:
        sigs = []
        for x in range(n):
            local = sorted(
                (colors[y], colors[t[x][y]], colors[t[y][x]]) for y in range(n)
            )
            sigs.append((colors[x], tuple(local)))
        lookup: dict = {}
        new = []
        for s in sorted(set(sigs)):
            lookup[s] = len(lookup)
        for x in range(n):
            new.append(lookup[sigs[x]])
        if len(lookup) == classes and new == colors:
            return tuple(colors), classes
        colors, classes = new, len(lookup)


def canonical_fingerprint(k: FiniteKei) -> tuple:
    """Isomorphism-invariant hash material (not a complete invariant)."""
    colors, _ = _refine_colors(k)
    return (k.size, tuple(sorted(colors)))


def kei_isomorphic(k1: FiniteKei, k2: FiniteKei) -> list[int] | None:
    """A table-preserving bijection k1 -> k2, or None.

    Backtracking over refinement classes with product propagation;
    intended for tables up to a few hundred elements.
    """
    if k1.size != k2.size:
        return None
    n = k1.size
    if n == 0:
        return []
    c1, _ = _refine_colors(k1)
    c2, _ = _refine_colors(k2)
    if sorted(c1) != sorted(c2):
        return None
    t1, t2 = k1.table, k2.table
    candidates = [
        [y for y in range(n) if c2[y] == c1[x]] for x in range(n)
    ]
    mapping: list[int | None] = [None] * n
    used = [False] * n

    def assign(x: int, y: int, trail: list[int]) -> bool:
        """Set f(x) = y and propagate through known products."""
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if mapping[a] is not None:
                if mapping[a] != b:
                    return False
                continue
            if used[b] or c1[a] != c2[b]:
                return False
            mapping[a] = b
            used[b] = True
            trail.append(a)
            for z in range(n):
                fz = mapping[z]
                if fz is None:
                    continue
                stack.append((t1[a][z], t2[b][fz]))
                stack.append((t1[z][a], t2[fz][b]))
        return True

    def undo(trail: list[int], mark: int):
        while len(trail) > mark:
            a = trail.pop()
            used[mapping[a]] = False
            mapping[a] = None

    def search() -> bool:
        pending = [x for x in range(n) if mapping[x] is None]
        if not pending:
            return True
        x = min(pending, key=lambda v: len(candidates[v]))
        trail: list[int] = []
        for y in candidates[x]:
            if used[y]:
                continue
            mark = len(trail)
            if assign(x, y, trail) and search():
                return True
            undo(trail, mark)
        return False

    if search():
        return [int(v) for v in mapping]
    return None


@dataclass(frozen=True)
class LeftNormedWord:
    """(...((x1*x2)*x3)...)*xk as the plain letter sequence x1..xk."""

    letters: tuple

    def __post_init__(self):
        if len(self.letters) == 0:
            raise ValueError("a left-normed word needs at least one letter")
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return "*".join(str(x) for x in self.letters)


def word(text: str) -> LeftNormedWord:
    return LeftNormedWord(tuple(text.replace(" ", "").split("*")))


def phi_eval(w: LeftNormedWord) -> int:
    """Value of the two-generator free Kei word under a=0, b=1.

    The dihedral model on Z gives the fold phi(w*x) = 2 phi(x) - phi(w).
    """
    base = {"a": 0, "b": 1, 0: 0, 1: 1}
    letters = w.letters if isinstance(w, LeftNormedWord) else tuple(w)
    try:
        val = base[letters[0]]
        for x in letters[1:]:
            val = 2 * base[x] - val
    except KeyError as exc:
        raise ValueError("phi_eval expects letters in {a, b}") from exc
    return val


def eval_word(k: FiniteKei, w, env) -> int:
    """Evaluate a left-normed word in a finite Kei under a letter->element map."""
    letters = w.letters if isinstance(w, LeftNormedWord) else tuple(w)
    val = env[letters[0]]
    for x in letters[1:]:
        val = k.table[val][env[x]]
    return val
