import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from honeycomb434.isometry import (
    BASE_VERTEX,
    EXPECTED_ANGLES,
    GENERATORS,
    IDENTITY,
    MIRROR_NORMALS,
    RELATORS,
    Isometry,
    WordError,
    check_presentation,
    dihedral_angle,
    dihedral_angle_check,
    eval_word,
    generator,
    parse_word,
    perturbed_generators,
    presentation_holds,
    translation,
)


def test_generator_actions():
    assert GENERATORS["P"].apply((3, 5, 2)) == (3, 5, -1)
    assert GENERATORS["Q"].apply((3, 5, 2)) == (2, 5, 3)
    assert GENERATORS["R"].apply((3, 5, 2)) == (5, 3, 2)
    assert GENERATORS["S"].apply((3, 5, 2)) == (3, -5, 2)


def test_generators_are_involutions():
    for name, g in GENERATORS.items():
        assert g * g == IDENTITY, name
        assert g.order() == 2, name


def test_mirror_fixed_points():
    # each generator fixes a point of its mirror plane (doubled coordinates
    # for the half-integer plane of P)
    assert GENERATORS["Q"].apply((4, 7, 4)) == (4, 7, 4)
    assert GENERATORS["R"].apply((6, 6, 1)) == (6, 6, 1)
    assert GENERATORS["S"].apply((2, 0, 9)) == (2, 0, 9)
    doubled = Isometry(GENERATORS["P"].perm, GENERATORS["P"].signs, (0, 0, 2))
    assert doubled.apply((5, 3, 1)) == (5, 3, 1)


def test_base_vertex_stabilized():
    assert GENERATORS["Q"].apply(BASE_VERTEX) == BASE_VERTEX
    assert GENERATORS["R"].apply(BASE_VERTEX) == BASE_VERTEX
    assert eval_word("PQRSRQP").apply(BASE_VERTEX) == BASE_VERTEX


def test_all_relators_hold():
    checks = check_presentation()
    assert len(checks) == 10
    assert all(c.ok for c in checks)
    assert all(c.residual == IDENTITY for c in checks)
    assert presentation_holds()


def test_relator_labels():
    labels = [label for label, _ in RELATORS]
    assert labels == [
        "P^2", "Q^2", "R^2", "S^2",
        "(PQ)^4", "(QR)^3", "(RS)^4", "(PR)^2", "(PS)^2", "(QS)^2",
    ]


def test_dihedral_angles_in_order():
    checks, ok = dihedral_angle_check()
    assert ok
    assert tuple(c.angle for c in checks) == EXPECTED_ANGLES
    assert EXPECTED_ANGLES == ("pi/4", "pi/3", "pi/4", "pi/2", "pi/2", "pi/2")


def test_dihedral_angle_exactness():
    assert dihedral_angle((0, 0, 1), (0, 1, 0)) == "pi/2"
    assert dihedral_angle((1, 0, -1), (1, -1, 0)) == "pi/3"
    assert dihedral_angle((0, 0, 1), (1, 0, -1)) == "pi/4"
    with pytest.raises(ValueError):
        dihedral_angle((0, 0, 1), (0, 0, 1))  # parallel planes


def test_mirror_normals():
    assert MIRROR_NORMALS == {
        "P": (0, 0, 1),
        "Q": (1, 0, -1),
        "R": (1, -1, 0),
        "S": (0, 1, 0),
    }


def test_parse_word_basics():
    assert parse_word("PQP") == ("P", "Q", "P")
    assert parse_word("(SRQPQR)^2") == tuple("SRQPQR") * 2
    assert parse_word(" P (QR)^2 S ") == ("P", "Q", "R", "Q", "R", "S")
    assert parse_word("((PQ)^2)^3") == tuple("PQ") * 6


def test_parse_word_negative_power_reverses():
    # letters are involutions, so the inverse of a word is its reversal
    assert parse_word("(PQRS)^-1") == ("S", "R", "Q", "P")
    assert parse_word("(PQ)^-2") == ("Q", "P", "Q", "P")
    assert parse_word("(PQ)^0") == ()


@pytest.mark.parametrize(
    "bad", ["", "X", "P!", "(PQ)", "(PQ)^", "()^2", "PQ)", "(PQ", "(PQ)^x", "P^2"]
)
def test_parse_word_rejects(bad):
    with pytest.raises(WordError):
        parse_word(bad)


def test_eval_word_rightmost_first():
    v = (2, 0, 5)
    pq = eval_word("PQ")
    assert pq.apply(v) == GENERATORS["P"].apply(GENERATORS["Q"].apply(v))
    assert eval_word(()) == IDENTITY
    assert eval_word(("P", "Q")) == pq


def test_eval_word_custom_generators():
    perturbed = perturbed_generators()
    assert eval_word("Q", perturbed) != GENERATORS["Q"]
    assert eval_word("P", perturbed) == GENERATORS["P"]


def test_generator_lookup():
    assert generator("P") == GENERATORS["P"]
    with pytest.raises(WordError):
        generator("Z")


def test_perturbed_presentation_breaks_exactly_two_relators():
    checks = check_presentation(perturbed_generators())
    broken = {c.relator: c.residual for c in checks if not c.ok}
    assert set(broken) == {"(PQ)^4", "(QR)^3"}
    assert broken["(PQ)^4"] == translation((0, 0, 8))


def test_translation_and_inverse():
    t = translation((3, -1, 4))
    assert t.is_translation
    assert t.apply((0, 0, 0)) == (3, -1, 4)
    assert t.inverse() == translation((-3, 1, -4))
    assert t.order() is None


def test_from_matrix_roundtrip_and_validation():
    g = eval_word("PQRS")
    again = Isometry.from_matrix(g.linear, g.translation)
    assert again == g
    with pytest.raises(ValueError):
        Isometry.from_matrix(((1, 1, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))
    with pytest.raises(ValueError):
        Isometry.from_matrix(((2, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))


letters = st.lists(st.sampled_from("PQRS"), max_size=12).map(tuple)
vectors = st.tuples(
    st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)
)


@settings(max_examples=60, deadline=None)
@given(letters, vectors)
def test_word_evaluation_matches_letterwise_application(word, v):
    g = eval_word(word)
    out = v
    for letter in reversed(word):
        out = GENERATORS[letter].apply(out)
    assert g.apply(v) == out


@settings(max_examples=60, deadline=None)
@given(letters)
def test_reversed_word_is_inverse(word):
    g = eval_word(word)
    assert eval_word(tuple(reversed(word))) == g.inverse()
    assert g * g.inverse() == IDENTITY


@settings(max_examples=60, deadline=None)
@given(letters, letters, vectors)
def test_composition_is_application_order(w1, w2, v):
    a, b = eval_word(w1), eval_word(w2)
    assert (a * b).apply(v) == a.apply(b.apply(v))


@settings(max_examples=60, deadline=None)
@given(letters)
def test_linear_part_is_signed_permutation(word):
    g = eval_word(word)
    rows = g.linear
    for row in rows:
        assert sorted(abs(x) for x in row) == [0, 0, 1]
    cols = list(zip(*rows))
    for col in cols:
        assert sorted(abs(x) for x in col) == [0, 0, 1]
