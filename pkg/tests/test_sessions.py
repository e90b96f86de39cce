"""Session file parsing, serialization round trips, error reporting."""

import pytest

from hkprod import Session, load_session, parse_session
from hkprod.sessions import SessionError

EXAMPLE = """\
# a hypersurface session
ring: p=2 vars=x,y,z mod=[x^3+y^3+z^3] order=grevlex

ideal J = [y, z]
ideal m = [x, y, z]  # trailing comment
"""


def test_parse_example():
    sess = parse_session(EXAMPLE)
    assert sess.ring.p == 2 and sess.ring.variables == ("x", "y", "z")
    assert len(sess.ring.relations) == 1
    assert [str(g) for g in sess.ideal("J").gens] == ["y", "z"]
    assert sess.ideal("J").colength() == 3


def test_parse_regular_ring_without_mod():
    sess = parse_session("ring: p=5 vars=x,y\nideal I = [x^2 - y, y^2]\n")
    assert sess.ring.is_regular
    assert sess.ideal("I").colength() == 4


def test_parse_bracketed_generators_with_commas_inside_parens():
    sess = parse_session("ring: p=2 vars=x,y\nideal I = [(x+y)^2, y^2]\n")
    assert [str(g) for g in sess.ideal("I").gens] == ["x^2 + y^2", "y^2"]


def test_serialize_round_trip():
    sess = parse_session(EXAMPLE)
    again = parse_session(sess.serialize())
    assert again.ring.same_as(sess.ring)
    assert set(again.ideals) == set(sess.ideals)
    for name in sess.ideals:
        assert again.ideal(name).equals(sess.ideal(name))


def test_missing_ideal_name():
    sess = parse_session(EXAMPLE)
    with pytest.raises(SessionError):
        sess.ideal("K")


@pytest.mark.parametrize("text", [
    "ideal I = [x]\n",                           # no ring block
    "ring: vars=x,y\n",                          # missing p
    "ring: p=2 vars=x,y\nring: p=3 vars=x\n",    # duplicate ring
    "ring: p=2 vars=x,y\nideal I [x]\n",         # missing '='
    "ring: p=2 vars=x,y\nideal I = x, y\n",      # not a bracket list
    "ring: p=2 vars=x,y\nideal 2bad = [x]\n",    # bad name
    "ring: p=2 vars=x,y\nideal I = [x]\nideal I = [y]\n",  # duplicate
    "ring: p=2 vars=x,y\nwhat is this\n",        # unrecognized line
])
def test_malformed_sessions(text):
    with pytest.raises(SessionError):
        parse_session(text)


def test_load_session(tmp_path):
    path = tmp_path / "s.hk"
    path.write_text(EXAMPLE)
    sess = load_session(str(path))
    assert isinstance(sess, Session) and "J" in sess.ideals
