"""Kauffman bracket and Jones polynomial with exact evaluation at the
primitive tenth root of unity (t**5 = -1, t != -1).

The bracket is the state sum over all smoothings:

    <X> = A <0-smoothing> + A^-1 <infinity-smoothing>,
    one extra circle contributes delta = -A^2 - A^-2,
    normalized so a single circle has bracket 1.

The Jones polynomial V = (-A^3)^(-w) <D> is rewritten in s = t^(1/2)
via s = A^-2.  Evaluation at t = e^(i pi/5) happens in the cyclotomic
integers Z[s]/(s^8 - s^6 + s^4 - s^2 + 1), where the zero test is
exact: the modulus is the minimal polynomial of a primitive 20th root
of unity, so the residue ring is an integral domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from .diagrams import LinkDiagram
from .errors import TooLarge
from .laurent import LaurentPoly
from . import _enumpy

try:
    from . import _enumcore as _kernel
except ImportError:
    _kernel = _enumpy

BRACKET_CROSSING_CAP = 16


def kauffman_bracket(d: LinkDiagram, backend: str | None = None) -> LaurentPoly:
    """State-sum bracket in the variable A, single circle normalized to 1."""
    c = d.crossing_count
    if c > BRACKET_CROSSING_CAP:
        raise TooLarge(f"{c} crossings exceeds the bracket cap {BRACKET_CROSSING_CAP}")
    if c == 0 and d.unknotted_split_circles == 0:
        raise ValueError("the empty diagram has no bracket")
    kernel = _enumpy if backend == "pure" else _kernel
    if c == 0:
        counts = {(0, 0): 1}
    else:
        counts = kernel.bracket_statesum(d.crossings, d.arc_count)
    delta = LaurentPoly({2: -1, -2: -1})
    deltas: dict[int, LaurentPoly] = {0: LaurentPoly.one()}

    def delta_pow(k: int) -> LaurentPoly:
        if k not in deltas:
            deltas[k] = delta_pow(k - 1) * delta
        return deltas[k]

    total = LaurentPoly.zero()
    for (exponent, circles), mult in sorted(counts.items()):
        circles += d.unknotted_split_circles
        total = total + delta_pow(circles - 1).shift(exponent) * mult
    return total


def trace_components(d: LinkDiagram) -> list[list[tuple[int, int]]]:
    """Components as walks: lists of (arc, entry appearance index).

    Appearances of an arc are its two slots among the crossing tuples;
    a walk leaves a crossing at the slot opposite the one it entered.
    """
    appearances: dict[int, list[tuple[int, int]]] = {}
    for k, quad in enumerate(d.crossings):
        for pos, a in enumerate(quad):
            appearances.setdefault(a, []).append((k, pos))
    seen: set[int] = set()
    components = []
    for start in range(d.arc_count):
        if start in seen:
            continue
        walk = []
        arc, entry = start, 0
        while True:
            seen.add(arc)
            walk.append((arc, entry))
            k, pos = appearances[arc][1 - entry]
            nxt = d.crossings[k][(pos + 2) % 4]
            nk, npos = (k, (pos + 2) % 4)
            which = appearances[nxt].index((nk, npos))
            arc, entry = nxt, which
            if arc == start and entry == 0:
                break
        components.append(walk)
    return components


def writhe(d: LinkDiagram, orientation: tuple[bool, ...] | None = None) -> int:
    """Sum of crossing signs for the chosen per-component directions."""
    comps = trace_components(d)
    if orientation is None:
        orientation = (False,) * len(comps)
    if len(orientation) != len(comps):
        raise ValueError(f"need {len(comps)} orientation flags")
    appearances: dict[int, list[tuple[int, int]]] = {}
    for k, quad in enumerate(d.crossings):
        for pos, a in enumerate(quad):
            appearances.setdefault(a, []).append((k, pos))
    # exit_slot[(k, pos)] = True when the strand leaves the crossing there
    exits: dict[tuple[int, int], bool] = {}
    for walk, flip in zip(comps, orientation):
        for arc, entry in walk:
            into = appearances[arc][1 - entry]
            outof = appearances[arc][entry]
            if flip:
                into, outof = outof, into
            exits[into] = False
            exits[outof] = True
    w = 0
    for k in range(d.crossing_count):
        pu = 0 if not exits[(k, 0)] else 2
        po = 1 if not exits[(k, 1)] else 3
        w += 1 if (pu - po) % 4 == 1 else -1
    return w


def jones(d: LinkDiagram, orientation: tuple[bool, ...] | None = None) -> LaurentPoly:
    """Jones polynomial in s = t^(1/2) (exponents of t are halves of s)."""
    bracket = kauffman_bracket(d)
    w = writhe(d, orientation)
    signed = bracket.shift(-3 * w) if w % 2 == 0 else -bracket.shift(-3 * w)
    out: dict[int, int] = {}
    for e, coeff in signed.coeffs.items():
        if e % 2:
            raise AssertionError("bracket of a closed diagram has even exponents")
        out[-e // 2] = coeff
    return LaurentPoly(out)


# --- exact arithmetic at s = e^(i pi / 10) ------------------------------

# s^8 = s^6 - s^4 + s^2 - 1 modulo the 20th cyclotomic polynomial
_RED8 = (-1, 0, 1, 0, -1, 0, 1, 0)


def _power_table() -> list[tuple[int, ...]]:
    table = []
    vec = [1, 0, 0, 0, 0, 0, 0, 0]
    for _ in range(20):
        table.append(tuple(vec))
        carry = vec[7]
        vec = [0] + vec[:7]
        if carry:
            vec = [v + carry * r for v, r in zip(vec, _RED8)]
    return table


_POW20 = _power_table()


@dataclass(frozen=True)
class CyclotomicValue:
    """Element of Z[s]/(s^8 - s^6 + s^4 - s^2 + 1) as 8 coordinates."""

    coords: tuple[int, int, int, int, int, int, int, int]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords)

    def __add__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        return CyclotomicValue(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        prod = [0] * 15
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    prod[i + j] += a * b
        for e in range(14, 7, -1):
            coeff = prod[e]
            if coeff:
                prod[e] = 0
                for k, r in enumerate(_RED8):
                    prod[e - 8 + k] += coeff * r
        return CyclotomicValue(tuple(prod[:8]))

    @classmethod
    def zero(cls) -> "CyclotomicValue":
        return cls((0,) * 8)

    @classmethod
    def one(cls) -> "CyclotomicValue":
        return cls((1, 0, 0, 0, 0, 0, 0, 0))


def eval_at_fifth_root(p: LaurentPoly) -> CyclotomicValue:
    """Evaluate a polynomial in s at the primitive 20th root of unity.

    Exponents fold mod 20 first (s has order 20), then reduce through
    the minimal polynomial; the result is zero iff the complex value is.
    """
    acc = [0] * 8
    for e, c in p.coeffs.items():
        vec = _POW20[e % 20]
        for k in range(8):
            acc[k] += c * vec[k]
    return CyclotomicValue(tuple(acc))


def jones_at_fifth_root(d: LinkDiagram) -> CyclotomicValue:
    return eval_at_fifth_root(jones(d))


def five_move_obstruction(d: LinkDiagram) -> str:
    """'not-5-move-trivializable' when the fifth-root value vanishes.

    Trivial links evaluate to (-s - s^-1)^(n-1) != 0, and 5-moves only
    change the value by a unit, which cannot turn zero into nonzero.
    """
    value = jones_at_fifth_root(d)
    return "not-5-move-trivializable" if value.is_zero() else "inconclusive"


def determinant(d: LinkDiagram) -> int:
    """|V(-1)| via s = i, computed as an exact Gaussian integer."""
    v = jones(d)
    re, im = 0, 0
    for e, c in v.coeffs.items():
        k = e % 4
        if k == 0:
            re += c
        elif k == 1:
            im += c
        elif k == 2:
            re -= c
        else:
            im -= c
    if re and im:
        raise AssertionError("V(-1) is neither real nor purely imaginary")
    return abs(re) if re else abs(im)
