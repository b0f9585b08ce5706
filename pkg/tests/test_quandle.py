import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quandle_posets.errors import (
    NotAUnit,
    NotDistributive,
    NotIdempotent,
    OrderTooLarge,
    OutOfRange,
    ParseError,
    RightNotBijective,
)
from quandle_posets.quandle import (
    Permutation,
    PermGroup,
    Quandle,
    alexander,
    canonical_form,
    dihedral,
    enumerate_quandles,
    inner_group,
    is_connected,
    is_latin,
    left_mult,
    orbits,
    parse_quandle_json,
    parse_quandle_text,
    quandle_automorphisms,
    quandle_isomorphic,
    quandle_to_json,
    quandle_to_text,
    right_mult,
    trivial,
    validate_quandle,
)

TABLE2 = ((0, 0, 1), (1, 1, 0), (2, 2, 2))


def is_hom(q1, q2, f):
    n = q1.n
    return all(f[q1.table[i][j]] == q2.table[f[i]][f[j]] for i in range(n) for j in range(n))


def brute_isomorphic(q1, q2):
    return any(is_hom(q1, q2, p) for p in itertools.permutations(range(q1.n)))


# validation -----------------------------------------------------------------

def test_trivial_table_is_valid():
    q = validate_quandle(3, [[i] * 3 for i in range(3)])
    assert q == trivial(3)


def test_order_three_table_is_valid():
    q = validate_quandle(3, TABLE2)
    assert q.table == TABLE2


def test_column_not_bijective():
    with pytest.raises(RightNotBijective) as exc:
        validate_quandle(2, [[0, 0], [0, 1]])
    assert exc.value.j == 0
    assert exc.value.witness == (0,)


def test_not_idempotent():
    with pytest.raises(NotIdempotent) as exc:
        validate_quandle(2, [[1, 0], [0, 1]])
    assert exc.value.i == 0


def test_out_of_range():
    with pytest.raises(OutOfRange):
        validate_quandle(2, [[0, 2], [1, 1]])


def test_not_distributive_witness_is_real():
    # idempotent with permutation columns, yet not self-distributive
    bad = [[0, 2, 1], [1, 1, 0], [2, 0, 2]]
    with pytest.raises(NotDistributive) as exc:
        validate_quandle(3, bad)
    i, j, k = exc.value.witness
    assert bad[bad[i][j]][k] != bad[bad[i][k]][bad[j][k]]


# multiplications ------------------------------------------------------------

def test_right_mult_examples():
    assert right_mult(dihedral(4), 1).image == (2, 1, 0, 3)
    assert right_mult(trivial(3), 2).is_identity()
    assert right_mult(Quandle(TABLE2), 2).image == (1, 0, 2)


def test_left_mult_examples():
    assert left_mult(Quandle(TABLE2), 2) == (2, 2, 2)
    assert left_mult(trivial(4), 3) == (3, 3, 3, 3)
    assert left_mult(dihedral(4), 0) == (0, 2, 0, 2)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([q for n in range(1, 5) for q in enumerate_quandles(n)]), st.data())
def test_right_mult_is_automorphism(q, data):
    y = data.draw(st.integers(0, q.n - 1))
    assert is_hom(q, q, right_mult(q, y).image)


def test_permutation_algebra():
    p = Permutation((1, 2, 0))
    q = Permutation((0, 2, 1))
    assert (p * q)(1) == p(q(1))
    assert (p * p.inverse()).is_identity()
    assert p.cycle_type() == (3,)
    with pytest.raises(ValueError):
        Permutation((0, 0))


# group and orbits -------------------------------------------------------

def test_inner_group_orders():
    assert inner_group(trivial(4)).order == 1
    assert inner_group(dihedral(4)).order == 4


def test_inner_group_closed_and_words():
    for q in (dihedral(3), dihedral(6), alexander(5, 2), Quandle(TABLE2)):
        g = inner_group(q)
        elements = set(g.elements)
        assert all(a * b in elements and a.inverse() in elements for a in g for b in g)
        for p in g:
            w = Permutation.identity(q.n)
            for a in g.word_of(p):
                w = w * g.generators[a]
            assert w == p


def test_dihedral3_group_is_transitive():
    g = inner_group(dihedral(3))
    assert {p(0) for p in g} == {0, 1, 2}


def test_perm_group_membership():
    g = PermGroup.generated_by(3, [Permutation((1, 0, 2))])
    assert Permutation((0, 1, 2)) in g and Permutation((1, 2, 0)) not in g


def test_orbit_examples():
    assert orbits(dihedral(6)).orbits == ((0, 2, 4), (1, 3, 5))
    assert orbits(trivial(3)).orbits == ((0,), (1,), (2,))
    assert orbits(Quandle(TABLE2)).orbits == ((0, 1), (2,))
    assert len(orbits(trivial(4))) == 4


def test_orbits_invariant_under_group():
    for n in range(1, 6):
        for q in enumerate_quandles(n):
            part = orbits(q)
            for p in inner_group(q):
                for block in part.orbits:
                    assert {p(x) for x in block} == set(block)


def test_connected_and_latin_examples():
    assert is_connected(dihedral(3))
    assert not is_connected(dihedral(4))
    assert not is_connected(trivial(2))
    assert is_latin(dihedral(5))
    assert not is_latin(dihedral(4))
    assert not is_latin(trivial(2))


def test_latin_implies_connected():
    for n in range(1, 7):
        for q in enumerate_quandles(n):
            if is_latin(q):
                assert is_connected(q), q.table


# constructors ---------------------------------------------------------------

def test_dihedral_formula():
    assert dihedral(4).column(1) == (2, 1, 0, 3)
    assert dihedral(1).table == ((0,),)


@pytest.mark.parametrize("n", range(1, 10))
def test_alexander_minus_one_is_dihedral(n):
    assert alexander(n, n - 1).table == dihedral(n).table


def test_alexander_examples():
    q = alexander(5, 2)
    assert is_connected(q)
    with pytest.raises(NotAUnit):
        alexander(6, 2)


# isomorphism ----------------------------------------------------------------

def test_isomorphism_examples():
    q = dihedral(4)
    assert quandle_isomorphic(q, q) == (0, 1, 2, 3)
    assert quandle_isomorphic(dihedral(4), trivial(4)) is None
    a, b = alexander(5, 2), alexander(5, 3)
    found = quandle_isomorphic(a, b)
    assert (found is not None) == brute_isomorphic(a, b)
    if found is not None:
        assert is_hom(a, b, found)


SMALL = [q for n in range(2, 6) for q in enumerate_quandles(n)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
def test_relabelled_copy_is_isomorphic(q, rnd):
    sigma = list(range(q.n))
    rnd.shuffle(sigma)
    r = q.relabel(sigma)
    f = quandle_isomorphic(q, r)
    assert f is not None and is_hom(q, r, f)


def test_isomorphism_agrees_with_brute_force():
    for a, b in itertools.combinations(enumerate_quandles(4), 2):
        assert (quandle_isomorphic(a, b) is not None) == brute_isomorphic(a, b)


def test_automorphisms_brute_force():
    for q in enumerate_quandles(4):
        brute = {p for p in itertools.permutations(range(4)) if is_hom(q, q, p)}
        assert set(quandle_automorphisms(q)) == brute


def test_canonical_form_is_invariant():
    q = alexander(5, 2)
    for sigma in [(4, 3, 2, 1, 0), (1, 3, 0, 4, 2)]:
        assert canonical_form(q.relabel(sigma)) == canonical_form(q)


# enumeration ----------------------------------------------------------------

@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 7), (5, 22)])
def test_enumeration_counts(n, count):
    assert len(enumerate_quandles(n)) == count


def test_enumeration_pairwise_non_isomorphic():
    for n in (3, 4, 5):
        qs = enumerate_quandles(n)
        for a, b in itertools.combinations(qs, 2):
            assert quandle_isomorphic(a, b) is None


def test_enumeration_order_two_is_trivial():
    assert enumerate_quandles(2)[0] == trivial(2)


def test_enumeration_deterministic():
    assert [q.table for q in enumerate_quandles(4)] == [q.table for q in enumerate_quandles(4)]


def test_enumeration_cap():
    with pytest.raises(OrderTooLarge):
        enumerate_quandles(7)


# parsing --------------------------------------------------------------------

def test_text_round_trip():
    q = dihedral(6)
    assert parse_quandle_text(quandle_to_text(q)) == q


def test_json_round_trip():
    q = alexander(5, 2)
    assert parse_quandle_json(json.dumps(quandle_to_json(q))) == q


@pytest.mark.parametrize("text,line,column", [
    ("", 1, 1),
    ("2 2\n0 0\n1 1\n", 1, 1),
    ("3\n0 0 1\n1 1 0\n", 3, None),
    ("2\n0 x\n1 1\n", 2, 3),
    ("2\n0 0\n1 5\n", 3, 3),
    ("2\n0 0\n1\n", 3, 2),
])
def test_text_parser_diagnostics(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_quandle_text(text)
    assert exc.value.line == line
    assert exc.value.column == column


def test_text_parser_rejects_axiom_violation():
    with pytest.raises(NotIdempotent):
        parse_quandle_text("2\n1 1\n0 0\n")


@pytest.mark.parametrize("text", [
    "{", "[]", '{"n": 2}', '{"n": 0, "table": []}', '{"n": 2, "table": [[0, 0]]}',
    '{"n": 2, "table": [[0, 0], [1, "1"]]}', '{"n": 2, "table": [[0, 0], [1, true]]}',
])
def test_json_parser_rejects(text):
    with pytest.raises(ParseError):
        parse_quandle_json(text)


def test_json_parser_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_quandle_json('{"n": 2,\n "table": [[0, 0], [1, 7]]}')
    assert (exc.value.line, exc.value.column) == (2, 2)
