import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twovalued.construct import abelian_coset, AbelianSpec, dihedral_group
from twovalued.core import Pair, Table
from twovalued.io import (
    GroupTable,
    NotAGroupError,
    ParseError,
    parse_group,
    parse_table,
    serialize_group,
    serialize_table,
)

from conftest import permutation_cayley, zmod_oracle

TRIVIAL_TEXT = "2vg 1\norder 1\n0 0 : 0 0"
Z2_TEXT = "2vg 1\norder 2\n0 0 : 0 0\n0 1 : 1 1\n1 0 : 1 1\n1 1 : 0 0"


def test_parse_trivial():
    t = parse_table(TRIVIAL_TEXT)
    assert t == Table.trivial()


def test_parse_z2():
    assert parse_table(Z2_TEXT) == zmod_oracle(2)


def test_unordered_pair_rejected():
    with pytest.raises(ParseError) as exc:
        parse_table(Z2_TEXT.replace("1 1 : 0 0", "1 1 : 1 0"))
    assert (exc.value.line, exc.value.column) == (6, 7)


def test_serialize_trivial_exact():
    assert serialize_table(Table.trivial()) == TRIVIAL_TEXT


def test_serialize_z5():
    text = serialize_table(zmod_oracle(5))
    lines = text.split("\n")
    assert len(lines) == 2 + 9
    assert "1 2 : 1 2" in lines and "2 2 : 0 1" in lines


def test_any_line_order_comments_and_names():
    text = """
    # Z/3 modulo negation
    2vg 1
    order 2
    names e x    # display names

    1 1 : 0 1
    1 0 : 1 1
    0 1 : 1 1
    0 0 : 0 0
    """
    t = parse_table(text)
    assert t.names == ("e", "x") and t[1, 1] == Pair(0, 1)
    out = serialize_table(t)
    assert out.startswith("2vg 1\norder 2\nnames e x\n0 0 : 0 0\n")
    assert parse_table(out) == t
    assert serialize_table(parse_table(out)) == out


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 0),
        ("2vg 2\norder 1\n0 0 : 0 0", 1),
        ("2vg 1\norder 0", 2),
        ("2vg 1\norder x\n0 0 : 0 0", 2),
        ("2vg 1\norder 1\n0 0 : 0 0\n0 0 : 0 0", 4),  # duplicate
        ("2vg 1\norder 2\n0 0 : 0 0\n0 1 : 1 1\n1 0 : 1 1", 0),  # missing
        ("2vg 1\norder 1\n0 0 : 0 1", 3),  # out of range
        ("2vg 1\norder 1\n0 0 0 0", 3),  # no colon
        ("2vg 1\norder 2\n0 0 : 0 0\n0 1 : 0 1\n1 0 : 1 1\n1 1 : 0 0", 4),  # identity row
        ("2vg 1\norder 2\nnames a\n0 0 : 0 0", 3),
        ("2vg 1\norder 2\nnames a a\n0 0 : 0 0", 3),
        ("2vg 1\norder 99999999999\n", 2),
        (b"2vg 1\norder 1\n0 0 : 0 \xff", 0),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_table(text)
    assert exc.value.line == line


@given(st.integers(1, 12), st.data())
def test_roundtrip_constructed(m, data):
    t = zmod_oracle(m)
    text = serialize_table(t)
    assert parse_table(text) == t
    assert serialize_table(parse_table(text)) == text
    assert text.isascii() and "\r" not in text


@settings(max_examples=500)
@given(st.one_of(st.text(max_size=80), st.binary(max_size=80)))
def test_parser_never_crashes(blob):
    for parse in (parse_table, parse_group):
        try:
            parse(blob)
        except (ParseError, NotAGroupError):
            pass


def _s3() -> GroupTable:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    return GroupTable(6, permutation_cayley(perms))


def test_parse_group_examples():
    g = parse_group("grp 1\norder 1\n0 0 : 0")
    assert g.n == 1
    z4 = "grp 1\norder 4\n" + "\n".join(f"{i} {j} : {(i + j) % 4}" for i in range(4) for j in range(4))
    g = parse_group(z4)
    assert g.cells == tuple(tuple((i + j) % 4 for j in range(4)) for i in range(4))
    assert g.is_abelian
    assert parse_group(serialize_group(g)) == g


def test_corrupted_s3_reports_associativity_witness():
    s3 = _s3()
    assert not s3.is_abelian
    cells = [list(row) for row in s3.cells]
    cells[1][3] = cells[1][4]
    lines = ["grp 1", "order 6"] + [f"{i} {j} : {cells[i][j]}" for i in range(6) for j in range(6)]
    with pytest.raises(NotAGroupError) as exc:
        parse_group("\n".join(lines))
    assert exc.value.kind == "associativity"
    x, y, z = exc.value.witness
    assert cells[cells[x][y]][z] != cells[x][cells[y][z]]


def test_group_identity_and_inverse_errors():
    with pytest.raises(NotAGroupError) as exc:
        GroupTable(2, ((1, 0), (0, 1)))
    assert exc.value.kind == "identity"
    # the trivial-semigroup extension {e, a} with a*a = a is associative but a has no inverse
    with pytest.raises(NotAGroupError) as exc:
        GroupTable(2, ((0, 1), (1, 1)))
    assert exc.value.kind == "inverse"


def test_dihedral_and_z4_round_trip():
    for g in (dihedral_group(3), dihedral_group(4)):
        assert parse_group(serialize_group(g)) == g
    t = abelian_coset(AbelianSpec((4,)))
    assert parse_table(serialize_table(t)) == t
