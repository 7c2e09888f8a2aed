"""The interchange formats: space documents, matrices, group tables."""

from pathlib import Path

import pytest

from simphom.catalog import catalog
from simphom.covers import FiniteGroup
from simphom.intmatrix import IntegerMatrix
from simphom.io import (
    SpaceDocumentError,
    parse_group,
    parse_matrix,
    parse_space,
    print_group,
    print_matrix,
    print_space,
)
from simphom.sset import is_valid

CONFORMANCE = Path(__file__).parent / "conformance"


def test_parse_interval_document():
    doc = (CONFORMANCE / "valid_interval.sset").read_text()
    space = parse_space(doc)
    assert space.counts() == (2, 1)
    assert space.name == "interval"
    assert is_valid(space).ok


def test_round_trip_on_catalog():
    for name in ("point", "circle", "torus", "rp2", "klein", "sphere:2",
                 "delta:3", "boundary:3", "horn:3:1", "discrete:2"):
        space = catalog(name)
        doc = print_space(space)
        space2 = parse_space(doc)
        assert print_space(space2) == doc
        assert space2.counts() == space.counts()
        for d in range(space.top_dim + 1):
            for g, h in zip(space2.gens(d), space.gens(d)):
                assert g.faces == h.faces


def test_parse_is_idempotent_on_conformance_corpus():
    for path in sorted(CONFORMANCE.glob("valid_*.sset")):
        space = parse_space(path.read_text())
        doc = print_space(space)
        assert print_space(parse_space(doc)) == doc, path.name


def test_invalid_documents_rejected():
    expectations = {
        "invalid_header.sset": "header",
        "invalid_dangling.sset": "dangle",
        "invalid_word.sset": "decreasing",
        "invalid_face_count.sset": "faces",
        "invalid_identity.sset": "identity",
        "invalid_sparse_ids.sset": "dense",
        "invalid_json.sset": "face list",
    }
    for name, needle in expectations.items():
        text = (CONFORMANCE / name).read_text()
        with pytest.raises(SpaceDocumentError) as err:
            parse_space(text)
        assert needle in str(err.value), (name, str(err.value))


def test_dangling_error_names_the_id():
    text = (CONFORMANCE / "invalid_dangling.sset").read_text()
    with pytest.raises(SpaceDocumentError) as err:
        parse_space(text)
    assert "(0,3)" in str(err.value)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(SpaceDocumentError) as err:
        parse_space("sset v1\ndim 0\nnonsense []\n")
    assert err.value.line == 3


def test_matrix_round_trip():
    m = IntegerMatrix([[1, -2, 3], [0, 5, -7]])
    assert parse_matrix(print_matrix(m)) == m
    zero = IntegerMatrix.zero(0, 3)
    assert parse_matrix(print_matrix(zero)).shape == (0, 3)
    with pytest.raises(ValueError):
        parse_matrix("matrix v2\nrows 1 cols 1\n3\n")


def test_group_round_trip():
    z3 = FiniteGroup.cyclic(3)
    back = parse_group(print_group(z3))
    assert back.names == z3.names
    assert back.table == z3.table
    with pytest.raises(ValueError):
        parse_group("group v1\nelements a a\ntable\na a\na a\n")
