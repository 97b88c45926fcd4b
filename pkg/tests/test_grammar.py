import pytest

from sadicwords.fixtures import chacon, fibonacci, random_primitive
from sadicwords.grammar import FixtureError, parse_fixture, render_fixture
from sadicwords.sadic import level_language

FIB = """\
alphabet a b
morphism fib { a -> a b ; b -> a }
schedule repeat(fib)
horizon 16
"""


def test_fibonacci_fixture():
    spec = parse_fixture(FIB, name="fib")
    seq = spec.sequence()
    assert len(spec.alphabets[""]) == 2
    assert spec.period == ("fib",) and spec.prefix == ()
    assert seq.horizon == 16 and seq.is_periodic
    assert seq.morphism(0) == fibonacci().morphism(0)
    assert len(spec.sha256) == 64


def test_comments_and_compact_images():
    text = "# a comment\nalphabet a b   # letters\nmorphism f { a -> ab ; b -> a }\nschedule repeat(f)\n"
    seq = parse_fixture(text).sequence()
    assert seq.morphism(0) == fibonacci().morphism(0)
    assert seq.horizon == 32


def test_named_alphabets_prefix_and_finite_schedules():
    text = """\
name mixed
alphabet X: a b
alphabet Y: x y z
morphism down Y -> X { x -> a b ; y -> b ; z -> a }
morphism up X -> Y { a -> x y ; b -> z x }
morphism sw X -> X { a -> b ; b -> a }
schedule sw, down repeat(up, down)
horizon 10
"""
    spec = parse_fixture(text)
    seq = spec.sequence()
    assert spec.name == "mixed" and spec.prefix == ("sw", "down")
    assert len(seq.alphabet(1)) == 2 and len(seq.alphabet(2)) == 3 and len(seq.alphabet(3)) == 2
    finite = parse_fixture("alphabet a b\nmorphism f { a -> ab ; b -> a }\nschedule f, f, f\n")
    assert finite.sequence().horizon == 3 and not finite.sequence().is_periodic


def expect_error(text, fragment, line=None):
    with pytest.raises(FixtureError) as info:
        parse_fixture(text)
    assert fragment in info.value.message
    if line is not None:
        assert info.value.line == line
    return info.value


def test_errors_with_positions():
    err = expect_error("alphabet a b\nmorphism f { a -> ; b -> a }\nschedule repeat(f)\n",
                       "empty image", line=2)
    assert err.column == 14
    expect_error("alphabet a b\nmorphism f { a -> ab ; b -> a }\nschedule repeat(g)\n",
                 "undefined morphism g", line=3)
    expect_error("alphabet a b\nmorphism f { a -> ab }\nschedule repeat(f)\n", "no rule", line=2)
    expect_error("alphabet a b\nmorphism f { a -> ac ; b -> a }\n", "not in alphabet", line=2)
    expect_error("alphabet a b\nfrobnicate\n", "unknown statement", line=2)
    expect_error("alphabet a b\nmorphism f { a -> ab ; b -> a }\nhorizon -3\nschedule repeat(f)\n",
                 "horizon", line=3)
    expect_error("morphism f { a -> ab }\n", "undefined alphabet", line=1)
    expect_error("alphabet a b\nmorphism f { a -> ab ; b -> a }\n", "no schedule")


def test_alphabet_chain_mismatch():
    text = """\
alphabet X: a b
alphabet Y: x y z
morphism down Y -> X { x -> a b ; y -> b ; z -> a }
schedule repeat(down)
"""
    expect_error(text, "chain mismatch", line=4)


def test_render_round_trip():
    for seq in (fibonacci(), chacon(), random_primitive(41)):
        again = parse_fixture(render_fixture(seq)).sequence()
        assert again.morphism(0) == seq.morphism(0) and again.horizon == seq.horizon
        assert level_language(again, 0, 6).by_length == level_language(seq, 0, 6).by_length
