import pytest

from conftest import FIXTURES
from hopfk import builtin, formats
from hopfk.errors import HopfAxiomError, ParseError
from hopfk.galois import crossed_product

ALL = sorted(p.name for p in FIXTURES.iterdir() if p.is_file())


@pytest.mark.parametrize("name", ALL)
def test_fixture_round_trip(name):
    spec = formats.load(FIXTURES / name)
    text = formats.dumps(spec.value, spec.name, spec.refs)
    again = formats.parse(text, path=FIXTURES / name)
    assert formats.same_value(spec.value, again.value)
    # a second pass is a fixed point of the emitter
    assert formats.dumps(again.value, again.name, again.refs) == text


def test_builtin_constructors_match_fixtures():
    assert formats.same_value(formats.load(FIXTURES / "f2c2.hopf").value, builtin.f2c2())
    assert formats.same_value(formats.load(FIXTURES / "sweedler.hopf").value, builtin.sweedler())
    assert formats.same_value(formats.load(FIXTURES / "taft3_f4.hopf").value, builtin.taft3_f4())
    assert formats.same_value(formats.load(FIXTURES / "ut2_c2.cross").value, builtin.ut2_c2_spec())
    m2 = crossed_product(builtin.b2xb2_swap_spec()).algebra
    assert formats.same_value(formats.load(FIXTURES / "m2.alg").value, m2)


ALG = """kind = "algebra"

[field]
p = 2

[algebra]
dim = 2
unit = [1, 0]
mult = [
  [0, 0, 0, 1],
  [0, 1, 1, 1],
  [1, 0, 1, 1],
  [1, 1, 0, 1],
]
"""


def test_minimal_algebra_parses():
    A = formats.parse(ALG).value
    assert A.dim == 2


@pytest.mark.parametrize("edit,where", [
    (lambda s: s.replace("dim = 2\n", "dim = 2\ncolour = 3\n"), (8, 1)),
    (lambda s: s.replace("[1, 1, 0, 1]", "[1, 1, 0, 2]"), (13, 3)),
    (lambda s: s.replace("[1, 1, 0, 1]", "[0, 1, 1, 1]"), (13, 3)),
    (lambda s: s.replace("[1, 1, 0, 1]", "[1, 1, 5, 1]"), (13, 3)),
    (lambda s: s.replace("[0, 1, 1, 1],", "[0, 1, 1],"), (11, 3)),
    (lambda s: s.replace("p = 2", "p = 4"), (4, 1)),
    (lambda s: s.replace("unit = [1, 0]", "unit = [1, true]"), (8, 1)),
    (lambda s: s.replace("[algebra]", "[algebra"), (6, 9)),
])
def test_parse_errors_carry_location(edit, where):
    with pytest.raises(ParseError) as info:
        formats.parse(edit(ALG))
    assert (info.value.line, info.value.column) == where
    assert str(info.value).startswith(f"{where[0]}:{where[1]}:")


def test_unknown_kind_and_expect():
    with pytest.raises(ParseError):
        formats.parse(ALG.replace('"algebra"', '"monoid"', 1))
    with pytest.raises(ParseError):
        formats.parse(ALG, expect=("hopf",))


def test_axiom_errors_are_not_parse_errors():
    text = (FIXTURES / "mutations" / "f2c2_counit_g0.hopf").read_text()
    with pytest.raises(HopfAxiomError):
        formats.parse(text)


def test_missing_reference():
    text = (FIXTURES / "ut2_s1.mod").read_text().replace("ut2.alg", "nowhere.alg")
    with pytest.raises(ParseError):
        formats.parse(text, path=FIXTURES / "ut2_s1.mod")


def _doc_examples():
    import re
    text = (FIXTURES.parent.parent.parent / "docs" / "formats.md").read_text()
    return re.findall(r"```toml\n(.*?)```", text, re.S)


@pytest.mark.parametrize("block", _doc_examples())
def test_documented_examples_parse(block):
    spec = formats.parse(block, path=FIXTURES / "example.toml")
    assert spec.kind in formats.KINDS


def test_every_kind_documented():
    kinds = {formats.parse(b, path=FIXTURES / "example.toml").kind for b in _doc_examples()}
    assert kinds == set(formats.KINDS)
