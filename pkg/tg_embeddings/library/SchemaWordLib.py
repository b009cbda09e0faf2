from typing import Mapping

from .. import constants as const, errors as err
from ..types import AffineExpr, Generator, SchemaLetter, SchemaWord, Word
from . import AffineLib, WordLib


"""Library for word templates whose indices and exponents are affine in the schema parameters.

A SchemaWord is a sequence of syllables name[index]^exponent. Products, inverses, conjugates and commutators
concatenate syllables; a power by a parameter-dependent exponent is only representable for a single syllable.
"""
EMPTY: SchemaWord = ()


def syllable(name: str, index: AffineExpr | None = None, exponent: AffineExpr | int = 1) -> SchemaWord:
    if isinstance(exponent, int):
        exponent = AffineLib.constant(exponent)
    return (SchemaLetter(name, index, exponent),)


def from_word(u: Word) -> SchemaWord:
    return tuple(
        SchemaLetter(
            generator.name,
            None if generator.index is None else AffineLib.constant(generator.index),
            AffineLib.constant(exponent),
        )
        for generator, exponent in WordLib.syllables(u)
    )


def concat(*words: SchemaWord) -> SchemaWord:
    return reduce(tuple(part for word in words for part in word))


def inverse(w: SchemaWord) -> SchemaWord:
    return tuple(SchemaLetter(part.name, part.index, AffineLib.negate(part.exponent)) for part in reversed(w))


def power(w: SchemaWord, exponent: AffineExpr) -> SchemaWord:
    """Raise a template to an affine exponent.

    Raises:
        PresentationError: If the exponent depends on a parameter and the template is not a single syllable
    """
    if exponent.is_constant():
        base = w if exponent.constant >= 0 else inverse(w)
        return reduce(base * abs(exponent.constant))
    if not w:
        return EMPTY
    if len(w) != 1:
        raise err.PresentationError(err.PARAMETRIC_POWER_OF_COMPOUND)
    part = w[0]
    return (SchemaLetter(part.name, part.index, AffineLib.multiply(part.exponent, exponent)),)


def conj(u: SchemaWord, h: SchemaWord) -> SchemaWord:
    return concat(inverse(h), u, h)


def comm(u: SchemaWord, v: SchemaWord) -> SchemaWord:
    return concat(inverse(u), inverse(v), u, v)


def reduce(w: SchemaWord) -> SchemaWord:
    """Merge neighbouring syllables on the same generator and drop identically zero exponents.

    The result is freely equal to the input at every parameter value. A merged exponent that vanishes only for some
    parameter values is kept, so instantiation may still reduce further there.
    """
    stack: list[SchemaLetter] = []
    for part in w:
        if AffineLib.is_zero(part.exponent):
            continue
        if stack and stack[-1].name == part.name and stack[-1].index == part.index:
            merged = AffineLib.add(stack.pop().exponent, part.exponent)
            if not AffineLib.is_zero(merged):
                stack.append(SchemaLetter(part.name, part.index, merged))
        else:
            stack.append(part)
    return tuple(stack)


def substitute_constants(w: SchemaWord, constants: Mapping[str, int]) -> SchemaWord:
    return reduce(tuple(
        SchemaLetter(
            part.name,
            None if part.index is None else AffineLib.substitute_constants(part.index, constants),
            AffineLib.substitute_constants(part.exponent, constants),
        )
        for part in w
    ))


def params(w: SchemaWord) -> frozenset[str]:
    names: set[str] = set()
    for part in w:
        names.update(part.exponent.params)
        if part.index is not None:
            names.update(part.index.params)
    return frozenset(names)


def is_concrete(w: SchemaWord) -> bool:
    return not params(w)


def instantiate(w: SchemaWord, env: Mapping[str, int]) -> Word:
    factors = []
    for part in w:
        index = None if part.index is None else AffineLib.evaluate(part.index, env)
        exponent = AffineLib.evaluate(part.exponent, env)
        factors.append(WordLib.pow(WordLib.letter_word(Generator(part.name, index)), exponent))
    return WordLib.mul(*factors)


def format_schema_word(w: SchemaWord) -> str:
    """Canonical DSL text, e.g. `a[s]^s a[s-1]^-1` or `x y^(k-l) x^-1`."""
    if not w:
        return const.IDENTITY_TEXT
    parts = []
    for part in w:
        text = part.name if part.index is None else f"{part.name}[{AffineLib.format_affine(part.index)}]"
        parts.append(text + _format_exponent(part.exponent))
    return " ".join(parts)


def _format_exponent(exponent: AffineExpr) -> str:
    if exponent.is_constant():
        return "" if exponent.constant == 1 else f"^{exponent.constant}"
    if exponent.constant == 0 and len(exponent.terms) == 1 and abs(exponent.terms[0][1]) == 1:
        name, coefficient = exponent.terms[0]
        return f"^{name}" if coefficient == 1 else f"^-{name}"
    return f"^({AffineLib.format_affine(exponent)})"
