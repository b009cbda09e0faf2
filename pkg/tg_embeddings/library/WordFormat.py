from enum import Enum

from .. import constants as const
from ..types import Generator, Word
from . import WordLib


class WordStyle(Enum):
    DSL = "dsl"
    DISPLAY = "display"
    GAP = "gap"


def format_generator(generator: Generator, style: WordStyle = WordStyle.DSL) -> str:
    if generator.index is None:
        return generator.name
    if style is WordStyle.DSL:
        return f"{generator.name}[{generator.index}]"
    if style is WordStyle.GAP:
        return f"{generator.name}{generator.index}"
    return f"{generator.name}_{generator.index}"


def format_word(u: Word, style: WordStyle = WordStyle.DSL) -> str:
    """Print a word syllable by syllable, e.g. `x y^-1 x^-2` (DSL) or `x*y^-1*x^-2` (GAP)."""
    if not u.letters:
        return "One(F)" if style is WordStyle.GAP else const.IDENTITY_TEXT
    runs = WordLib.syllables(u)
    if style is WordStyle.GAP:
        commutator = _as_letter_commutator(runs)
        if commutator is not None:
            first, second = commutator
            return f"Comm({format_generator(first, style)}, {format_generator(second, style)})"
    parts = []
    for generator, exponent in runs:
        text = format_generator(generator, style)
        parts.append(text if exponent == 1 else f"{text}^{exponent}")
    return ("*" if style is WordStyle.GAP else " ").join(parts)


def _as_letter_commutator(runs: list[tuple[Generator, int]]) -> tuple[Generator, Generator] | None:
    # g^-1 h^-1 g h
    if len(runs) != 4:
        return None
    (g1, e1), (h1, f1), (g2, e2), (h2, f2) = runs
    if g1 == g2 and h1 == h2 and (e1, f1, e2, f2) == (-1, -1, 1, 1):
        return g1, h1
    return None
