from .. import constants as const, errors as err
from ..library import SchemaWordLib, WordLib
from ..types import AffineExpr, Generator, SchemaWord, Word


"""Library of the universal words over {x, y} used as images of the source generators.

    a_i   = y^((x y^i)^2 x^-1) (y^x)^-1       general images, length 4i+10
    ā_i   = y^((x y^i)^2 x^-1)                torsion-free images, length 4i+7
    t_i   = y^i x y^i x^-1                    passage words, length 2i+2
    e_i   = the older HNN-based universal words over {a, b}, length 4i+12

Each family has a conjugate construction and an independent letter-by-letter formula; the two must agree.
"""
X = WordLib.gen(const.X_NAME)
Y = WordLib.gen(const.Y_NAME)
Z = WordLib.gen(const.Z_NAME)
_x = Generator(const.X_NAME)
_y = Generator(const.Y_NAME)


def _check_index(i: int) -> None:
    if i < 1:
        raise err.WordError(f"{err.UNIVERSAL_INDEX_INVALID}: {i}")


def a_word() -> Word:
    """y^x, the image of a single free generator conjugated into place."""
    return WordLib.conj(Y, X)


def z_word() -> Word:
    """y^(x^-1) = x y x^-1."""
    return WordLib.conj(Y, WordLib.inv(X))


def conjugator(i: int) -> Word:
    """(x y^i)^2 x^-1."""
    _check_index(i)
    return WordLib.mul(WordLib.pow(WordLib.mul(X, WordLib.pow(Y, i)), 2), WordLib.inv(X))


def universal_word_tf(i: int) -> Word:
    """Torsion-free image of the i-th generator, y conjugated by (x y^i)^2 x^-1.

    Raises:
        WordError: If i < 1
    """
    return WordLib.conj(Y, conjugator(i))


def universal_word(i: int) -> Word:
    """General image of the i-th generator, the torsion-free word followed by (y^x)^-1.

    Raises:
        WordError: If i < 1
    """
    return WordLib.mul(universal_word_tf(i), WordLib.inv(a_word()))


def universal_word_expanded(i: int) -> Word:
    """x (y^-i x^-1)^2 y (x y^i)^2 x^-2 y^-1 x, written out syllable by syllable."""
    _check_index(i)
    return WordLib.from_syllables([
        (_x, 1), (_y, -i), (_x, -1), (_y, -i), (_x, -1),
        (_y, 1),
        (_x, 1), (_y, i), (_x, 1), (_y, i),
        (_x, -2), (_y, -1), (_x, 1),
    ])


def universal_word_tf_expanded(i: int) -> Word:
    """x (y^-i x^-1)^2 y (x y^i)^2 x^-1, written out syllable by syllable."""
    _check_index(i)
    return WordLib.from_syllables([
        (_x, 1), (_y, -i), (_x, -1), (_y, -i), (_x, -1),
        (_y, 1),
        (_x, 1), (_y, i), (_x, 1), (_y, i),
        (_x, -1),
    ])


def passage_word(i: int) -> Word:
    """t_i = y^i x y^i x^-1.

    Raises:
        WordError: If i < 1
    """
    _check_index(i)
    return WordLib.mul(WordLib.pow(Y, i), X, WordLib.pow(Y, i), WordLib.inv(X))


def passage_word_yz(i: int) -> Word:
    """t'_i = y^i z^i over the alphabet {y, z}."""
    _check_index(i)
    return WordLib.mul(WordLib.pow(Y, i), WordLib.pow(Z, i))


def hnn_word(i: int) -> Word:
    """e_i = a^-1 b^-1 a b^-i a b^-1 a^-1 b^i a^-1 b a b^-i a b a^-1 b^i over {a, b}.

    Raises:
        WordError: If i < 1
    """
    _check_index(i)
    a = Generator(const.HNN_A_NAME)
    b = Generator(const.HNN_B_NAME)
    return WordLib.from_syllables([
        (a, -1), (b, -1), (a, 1), (b, -i),
        (a, 1), (b, -1), (a, -1), (b, i),
        (a, -1), (b, 1), (a, 1), (b, -i),
        (a, 1), (b, 1), (a, -1), (b, i),
    ])


# Schema-level images, index affine in the schema parameters
def conjugator_schema(i: AffineExpr) -> SchemaWord:
    x = SchemaWordLib.syllable(const.X_NAME)
    y_i = SchemaWordLib.syllable(const.Y_NAME, None, i)
    return SchemaWordLib.concat(x, y_i, x, y_i, SchemaWordLib.inverse(x))


def universal_word_tf_schema(i: AffineExpr, exponent: AffineExpr | int = 1) -> SchemaWord:
    """The torsion-free image of a[i]^exponent, y^exponent conjugated by (x y^i)^2 x^-1."""
    return SchemaWordLib.conj(SchemaWordLib.syllable(const.Y_NAME, None, exponent), conjugator_schema(i))


def universal_word_schema(i: AffineExpr) -> SchemaWord:
    x = SchemaWordLib.syllable(const.X_NAME)
    y = SchemaWordLib.syllable(const.Y_NAME)
    return SchemaWordLib.concat(universal_word_tf_schema(i), SchemaWordLib.inverse(SchemaWordLib.conj(y, x)))
