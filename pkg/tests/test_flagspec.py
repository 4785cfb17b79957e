from pathlib import Path

import pytest

from flagforge.errors import FlagSpecError
from flagforge.flagspec import load_flag, load_flag_file, parse_document
from flagforge.orbit import orbit, subgroup

F9_F81 = """\
# (F_9, F_81) on F_{3^8}
field p=3 n=8
subspace: 1, a^820
subspace: 1, a^82, a^164, a^246   # F_81 = <a^82> plus zero
subgroup l=1
"""


def test_parse_and_build():
    parsed = load_flag(F9_F81)
    assert parsed.flag.type_vector == (2, 4)
    assert parsed.l == 1
    assert parsed.ctx.key[:2] == (3, 8)
    assert parsed.document.generator_texts() == [["1", "a^820"], ["1", "a^82", "a^164", "a^246"]]


def test_explicit_modulus_and_coordinates():
    parsed = load_flag("field p=2 n=4 poly=1,1,0,0,1\nsubspace: [1,0,0,0], [0,1,1,0]\n")
    assert parsed.ctx.modulus == (1, 1, 0, 0, 1)
    assert parsed.flag.type_vector == (2,)
    assert parsed.l is None


def _error(text):
    with pytest.raises(FlagSpecError) as info:
        load_flag(text)
    return info.value


def test_positioned_errors():
    e = _error("field p=3 n=8\nsubspace: 1, b^3\n")
    assert (e.line, e.column) == (2, 14)
    assert str(e).startswith("line 2, column 14:")
    e = _error("field p=3 n=8\nsubspace: 1,, a\n")
    assert (e.line, e.column) == (2, 13)
    e = _error("field p=3 x=8\n")
    assert (e.line, e.column) == (1, 11)
    e = _error("subspace: 1\n")
    assert e.line == 1
    e = _error("field p=3 n=8\nsubspace: 1, a\nsubspace: a^3\n")  # not nested
    assert e.line == 3
    e = _error("field p=4 n=2\nsubspace: 1\n")
    assert e.line == 1 and "not prime" in e.reason
    e = _error("field p=3 n=8\nwhatever\n")
    assert (e.line, e.column) == (2, 1)
    e = _error("field p=3 n=8\nsubspace: 1\nsubgroup l=x\n")
    assert (e.line, e.column) == (3, 12)
    e = _error("field p=3 n=8\nsubspace: 0\n")
    assert e.line == 2
    e = _error("field p=3 n=8\n")
    assert "no subspace" in e.reason


def test_document_only_syntax():
    doc = parse_document("field p=2 n=5\nsubspace: a^99999\n")
    assert doc.subspaces[0][0].text == "a^99999"


def test_shipped_flagspecs_load():
    root = Path(__file__).parent.parent / "flagspecs"
    f9_f81 = load_flag_file(str(root / "f9_f81.flag"))
    assert (f9_f81.flag.type_vector, f9_f81.l) == ((2, 4), 1)
    t14 = load_flag_file(str(root / "type_1_4.flag"))
    assert (t14.flag.type_vector, t14.l) == ((1, 4), 9)
    assert orbit(t14.flag, subgroup(t14.ctx, 9)).size == 7
