import itertools

import pytest

from tanglekit.errors import NotAGroup
from tanglekit.kei import (
    FiniteKei,
    LeftNormedWord,
    check_axioms,
    core_kei,
    cyclic_group,
    dihedral_kei,
    group_product,
    kei_isomorphic,
    kei_product,
    parse_kei,
    phi_eval,
    trivial_kei,
    word,
)


def symmetric_group_table(n):
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    return tuple(
        tuple(index[tuple(p[q[i]] for i in range(n))] for q in perms) for p in perms
    )


def test_dihedral_formula():
    k = dihedral_kei(3)
    assert k.op(1, 0) == 2  # 2*0 - 1 mod 3


@pytest.mark.parametrize("n", [1, 2, 3, 5, 7, 10])
def test_dihedral_satisfies_axioms(n):
    assert check_axioms(dihedral_kei(n)) == []


def test_trivial_kei_axioms():
    assert check_axioms(trivial_kei(4)) == []


def test_core_of_cyclic_is_dihedral():
    for n in (2, 3, 5, 8):
        assert core_kei(cyclic_group(n)).table == dihedral_kei(n).table


def test_core_of_trivial_group():
    assert core_kei(cyclic_group(1)).size == 1


def test_core_of_symmetric_group():
    k = core_kei(symmetric_group_table(3))
    assert k.size == 6
    assert check_axioms(k) == []


def test_core_rejects_non_group():
    with pytest.raises(NotAGroup):
        core_kei([[0, 0], [0, 0]])
    # associativity failure
    with pytest.raises(NotAGroup):
        core_kei([[0, 1, 2], [1, 2, 2], [2, 0, 1]])


def test_axiom_violation_reporting():
    bad = [[1, 0], [1, 1]]  # 0*0 = 1 breaks idempotency
    violations = check_axioms(FiniteKei(tuple(map(tuple, bad))))
    assert (1, 0) in violations


def test_distributivity_violation_reported():
    table = [list(r) for r in dihedral_kei(3).table]
    table[0][1] = 0  # perturb
    violations = check_axioms(FiniteKei(tuple(map(tuple, table))))
    assert any(v[0] == 3 for v in violations)


def test_isomorphism_identity():
    k = dihedral_kei(5)
    assert kei_isomorphic(k, k) is not None


def test_non_isomorphic_same_size():
    assert kei_isomorphic(dihedral_kei(4), trivial_kei(4)) is None


def test_isomorphism_respects_tables():
    k1 = core_kei(group_product(cyclic_group(5), cyclic_group(5)))
    k2 = kei_product(dihedral_kei(5), dihedral_kei(5))
    f = kei_isomorphic(k1, k2)
    assert f is not None
    for a in range(25):
        for b in range(25):
            assert f[k1.op(a, b)] == k2.op(f[a], f[b])


def test_isomorphism_after_relabeling():
    import random

    rng = random.Random(2)
    k = core_kei(symmetric_group_table(3))
    perm = list(range(6))
    rng.shuffle(perm)
    inv = [perm.index(i) for i in range(6)]
    relabeled = FiniteKei(
        tuple(
            tuple(perm[k.op(inv[a], inv[b])] for b in range(6)) for a in range(6)
        )
    )
    assert kei_isomorphic(k, relabeled) is not None


@pytest.mark.parametrize(
    "text,value",
    [("a", 0), ("b", 1), ("b*a", -1), ("a*b", 2), ("a*b*a", -2), ("b*a*b", 3),
     ("b*a*b*a", -3), ("a*b*a*b", 4), ("b*a*b*a*b", 5)],
)
def test_phi_values(text, value):
    assert phi_eval(word(text)) == value


def test_phi_alternating_bijection():
    """Alternating left-normed words in a, b hit each integer exactly once
    over lengths up to 12."""
    values = {}
    for length in range(1, 13):
        for first in "ab":
            letters = tuple(
                first if i % 2 == 0 else ("b" if first == "a" else "a")
                for i in range(length)
            )
            v = phi_eval(LeftNormedWord(letters))
            assert v not in values, (letters, values[v])
            values[v] = letters
    assert len(values) == 24
    # b-initial odd words give the odd positive values
    for k in range(6):
        assert values[2 * k + 1][0] == "b" and len(values[2 * k + 1]) == 2 * k + 1


def test_phi_rejects_other_letters():
    with pytest.raises(ValueError):
        phi_eval(word("a*c"))


@pytest.mark.parametrize("size", [3, 5, 6, 8, 10])
def test_derived_left_norm_identity(size):
    """x*(y*z) = ((x*z)*y)*z holds in any Kei."""
    keis = [dihedral_kei(size), trivial_kei(size)]
    if size == 6:
        keis.append(core_kei(symmetric_group_table(3)))
    for k in keis:
        t = k.table
        for x in range(size):
            for y in range(size):
                for z in range(size):
                    assert t[x][t[y][z]] == t[t[t[x][z]][y]][z]


def test_serialize_round_trip():
    k = dihedral_kei(4)
    assert parse_kei(k.serialize()).table == k.table
