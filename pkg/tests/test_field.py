import pytest
from hypothesis import given, strategies as st

from abellab.errors import FieldMismatchError, ZeroDivisorError
from abellab.field import (
    ONE,
    ZERO,
    Scalar,
    format_scalar,
    parse_scalar,
    rational,
    scalar_arith,
    sqrtD,
)

R3 = sqrtD(3)


def test_difference_of_squares():
    x = rational(1, 2) + R3
    y = rational(1, 2) - R3
    assert x * y == rational(-11, 4)


def test_reduction():
    assert scalar_arith("add", rational(2, 6), rational(1, 6)) == rational(1, 2)


def test_rationalized_inverse():
    inv = rational(1) / (rational(1) + R3)
    assert inv == Scalar(rational(-1, 2).rat, rational(1, 2).rat, 3)
    assert inv * (rational(1) + R3) == ONE


def test_zero_divisor():
    with pytest.raises(ZeroDivisorError):
        scalar_arith("div", ONE, ZERO)


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        sqrtD(2) + sqrtD(3)


def test_rationals_embed_into_any_extension():
    assert rational(2) + R3 == Scalar(2, 1, 3)
    assert (R3 * R3) == rational(3)
    assert (R3 * R3).D is None  # canonical: rational values drop the tag


def test_d_validation():
    with pytest.raises(ValueError):
        Scalar(0, 1, 1)
    with pytest.raises(ValueError):
        Scalar(0, 1, 12)
    with pytest.raises(ValueError):
        Scalar(0, 1, None)


def test_text_grammar_round_trip():
    cases = ["0", "5", "-7/3", "1*r3", "-3/4*r3", "1/2-3/4*r3", "2+1/3*r5"]
    for text in cases:
        x = parse_scalar(text)
        assert parse_scalar(format_scalar(x)) == x


def test_text_grammar_examples():
    x = parse_scalar("-3/4*r3")
    assert x == Scalar(0, rational(-3, 4).rat, 3)
    with pytest.raises(ValueError):
        parse_scalar("1/2+1/3")
    with pytest.raises(ValueError):
        parse_scalar("1.5")
    with pytest.raises(FieldMismatchError):
        parse_scalar("1*r2", D=3)


def test_ordering_is_the_real_order():
    # sqrt(3) is between 1 and 2; 1/2 + sqrt(3) > 2
    assert rational(1) < R3 < rational(2)
    assert rational(1, 2) + R3 > rational(2)
    assert (-R3).sign() == -1
    assert ZERO.sign() == 0


def test_pow():
    assert (rational(1, 2) + R3) ** 2 == rational(13, 4) + R3


small = st.integers(-6, 6)
denom = st.integers(1, 4)


def scalars(with_root=True):
    def build(a, b, c, d, use_root):
        if with_root and use_root:
            return Scalar(rational(a, b).rat, rational(c, d).rat, 3)
        return rational(a, b)

    return st.builds(build, small, denom, small, denom, st.booleans())


@given(scalars(), scalars(), scalars())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@given(scalars())
def test_inverses(x):
    assert x + (-x) == ZERO
    if x:
        assert x * (ONE / x) == ONE


@given(scalars())
def test_canonical_idempotence(x):
    again = Scalar(x.rat, x.irr, x.D if x.irr else None)
    assert again == x
    assert hash(again) == hash(x)
    assert format_scalar(again) == format_scalar(x)
