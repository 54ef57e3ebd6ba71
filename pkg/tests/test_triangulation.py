import pytest

from nscrush import perms
from nscrush.errors import GluingFormatError, InvolutionError
from nscrush.triangulation import (Triangulation, parse_triangulation,
                                   serialize_triangulation)


def test_empty_complex():
    tri = parse_triangulation("tets 0\n")
    assert tri.n == 0
    assert tri.gluing_records() == []


def test_doubled_tet_round_trip(double):
    text = serialize_triangulation(double)
    again = parse_triangulation(text)
    assert again == double
    assert serialize_triangulation(again) == text
    # 8 gluing half-records, 4 per direction
    assert len(double.gluing_records()) == 4
    assert all(double.gluing(i, f) is not None
               for i in range(2) for f in range(4))


def test_involution_violation_reports_faces():
    text = "tets 2\n0 0 : 1 0 0123\n1 0 : 0 1 1023\n"
    with pytest.raises((InvolutionError, GluingFormatError)) as err:
        parse_triangulation(text)
    assert "0" in str(err.value)


def test_face_glued_to_itself_rejected():
    with pytest.raises(InvolutionError):
        Triangulation(1, {(0, 0): (0, perms.IDENTITY)})


def test_syntax_error_carries_line_number():
    with pytest.raises(GluingFormatError) as err:
        parse_triangulation("tets 1\nnot a gluing line\n")
    assert err.value.line == 2


def test_out_of_range_index():
    with pytest.raises(GluingFormatError) as err:
        parse_triangulation("tets 1\n0 0 : 5 0 0123\n")
    assert err.value.line == 2


def test_bad_permutation_word():
    with pytest.raises(GluingFormatError):
        parse_triangulation("tets 2\n0 0 : 1 0 0113\n")


def test_permutation_face_mismatch():
    # perm sends face 0 to 1, but line claims target face 0
    with pytest.raises(GluingFormatError):
        parse_triangulation("tets 2\n0 0 : 1 0 1023\n")


def test_comments_and_blank_lines():
    text = "# a comment\n\ntets 2\n0 0 : 1 0 0123  # trailing\n"
    tri = parse_triangulation(text)
    assert tri.n == 2
    assert tri.gluing(0, 0) == (1, 0, perms.IDENTITY)
    assert tri.is_boundary_face(0, 1)


def test_missing_header():
    with pytest.raises(GluingFormatError):
        parse_triangulation("0 0 : 1 0 0123\n")


def test_serializer_emits_lex_smaller_side():
    tri = Triangulation(2, {(1, 2): (0, perms.transposition(2, 3))})
    lines = serialize_triangulation(tri).splitlines()
    assert lines[1].startswith("0 ")


def test_relabelling_round_trip(double):
    tet_map = {0: 1, 1: 0}
    vmaps = {0: (2, 3, 0, 1), 1: (1, 0, 3, 2)}
    moved = double.relabelled(tet_map, vmaps)
    assert moved.n == 2
    back = moved.relabelled(
        tet_map, {tet_map[i]: perms.inverse(vmaps[i]) for i in (0, 1)})
    assert back == double
