import pytest

from qdg import boxtilde as bt
from qdg.boxtilde import central_gen, generator, reduce_word, s_element
from qdg.expr import ParseError, eval_text, evaluate, parse, render
from qdg.freealg import serre_elements, word_elem
from qdg.qcoeff import DEFAULT_RING, NotInvertibleError

from corpus import CORPUS

R = DEFAULT_RING
Q = R.gen("q")


def test_grammar_examples():
    node = parse("q^2*x0*x1 + (1-q^2)*c0")
    assert evaluate(node) == reduce_word((1, 0))
    assert eval_text("x1*x0") == reduce_word((1, 0))
    assert eval_text("qint(3)") == bt.one() * R.qint(3)


def test_serre_via_surface_syntax():
    text = "x0^3*x2 - qint(3)*x0^2*x2*x0 + qint(3)*x0*x2*x0^2 - x2*x0^3"
    assert eval_text(text) == s_element(0)


def test_zero_and_unary_minus():
    assert render(eval_text("0")) == "0"
    assert eval_text("-q^2") == -(Q ** 2) * bt.one()
    assert eval_text("-q^2") == eval_text("0 - q^2")


def test_whitespace_is_insignificant():
    assert eval_text(" x1 * x0 ") == eval_text("x1*x0")


def test_juxtaposition_is_not_multiplication():
    with pytest.raises(ParseError):
        parse("x0 x1")


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse("q^2 + $")
    assert err.value.position == 6
    with pytest.raises(ParseError) as err:
        parse("q^")
    assert err.value.position == 2


def test_mode_validation():
    with pytest.raises(ParseError):
        parse("x*y", mode="box")
    with pytest.raises(ParseError):
        parse("x0*x1", mode="free")
    with pytest.raises(ParseError):
        parse("[x0 | - | -]", mode="free")
    with pytest.raises(ValueError):
        parse("x0", mode="tensor")


def test_negative_powers():
    assert eval_text("c0^-1") == central_gen(0, -1)
    assert eval_text("q^-2") == Q ** -2 * bt.one()
    with pytest.raises(NotInvertibleError):
        eval_text("x0^-1")
    with pytest.raises(NotInvertibleError):
        eval_text("(1 + q)^-1")


def test_bracket_monomials():
    e = eval_text("[x0.x2 | x1 | c0^2]")
    ((mono, coeff),) = e.terms.items()
    assert mono.even == (0, 2) and mono.odd == (1,) and mono.central == (2, 0, 0, 0)
    assert coeff == R.one()
    with pytest.raises(ParseError):
        parse("[x1 | - | -]")  # odd letter in the even slot


def test_free_mode():
    s_x, s_y = serre_elements()
    text = "x^3*y - qint(3)*x^2*y*x + qint(3)*x*y*x^2 - y*x^3"
    assert eval_text(text, mode="free") == s_x
    assert eval_text("x*y", mode="free") == word_elem("xy")
    value = eval_text("x*y - y*x", mode="free")
    assert eval_text(render(value), mode="free") == value


def test_nf_rendering_contract():
    assert render(eval_text("x1*x0")) == "q^2 * [x0 | x1 | -] + (1 - q^2) * [- | - | c0]"
    assert render(eval_text("x0*x1")) == "[x0 | x1 | -]"
    assert render(eval_text("x3*x0")) == "q^-2 * [x0 | x3 | -] + (1 - q^-2) * [- | - | c3]"


def test_corpus_round_trip():
    assert len(CORPUS) == 50
    for text in CORPUS:
        value = eval_text(text)
        printed = render(value)
        again = eval_text(printed)
        assert again == value, "round trip failed for %r" % text
        # a second pass is stable as well
        assert render(again) == printed


def test_corpus_consistency_pairs():
    # expansion expressions equal their product forms
    assert eval_text(CORPUS[16]) == eval_text(CORPUS[17])
    assert eval_text(CORPUS[18]) == eval_text(CORPUS[19])
    assert eval_text(CORPUS[20]) == eval_text(CORPUS[21])
    assert eval_text(CORPUS[22]) == eval_text(CORPUS[23])


def test_render_rejects_foreign_values():
    with pytest.raises(TypeError):
        render(42)
