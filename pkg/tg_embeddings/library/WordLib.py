from typing import Iterable

from .. import errors as err
from ..types import Generator, Letter, Substitution, UnmappedPolicy, Word


"""Library for free group word arithmetic over arbitrary generator alphabets.

Words are reduced at construction, so every function here returns freely reduced words. Conventions:
    conj(u, h) = h^-1 u h       (u^h)
    comm(u, v) = u^-1 v^-1 u v  ([u, v])
"""
IDENTITY = Word()


def gen(name: str, index: int | None = None) -> Word:
    return Word((Letter(Generator(name, index), 1),))


def letter_word(generator: Generator, sign: int = 1) -> Word:
    return Word((Letter(generator, sign),))


def reduce(letters: Iterable[Letter]) -> Word:
    return Word(tuple(letters))


def mul(*words: Word) -> Word:
    return Word(tuple(letter for word in words for letter in word.letters))


def inv(u: Word) -> Word:
    return Word(tuple(letter.inverse() for letter in reversed(u.letters)))


def conj(u: Word, h: Word) -> Word:
    return mul(inv(h), u, h)


def comm(u: Word, v: Word) -> Word:
    return mul(inv(u), inv(v), u, v)


def pow(u: Word, n: int) -> Word:
    base = u if n >= 0 else inv(u)
    return Word(base.letters * abs(n))


def substitute(u: Word, substitution: Substitution) -> Word:
    """Image of a word under the homomorphism defined by the substitution.

    Args:
        u: The word to map
        substitution: Images of generators and the policy for generators without an image

    Raises:
        WordError: If a generator has no image and the policy is ERROR_ON_UNMAPPED
    """
    images: list[Word] = []
    for letter in u.letters:
        image = substitution.mapping.get(letter.gen)
        if image is None:
            if substitution.policy is UnmappedPolicy.ERROR_ON_UNMAPPED:
                raise err.WordError(f"{err.UNMAPPED_GENERATOR}: {letter.gen}")
            image = letter_word(letter.gen)
        images.append(image if letter.sign == 1 else inv(image))
    return mul(*images)


def cyclic_reduce(u: Word) -> Word:
    """Strip letters from both ends while the first letter cancels the last one."""
    letters = u.letters
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == letters[end - 1].inverse():
        start += 1
        end -= 1
    return Word(letters[start:end])


def syllables(u: Word) -> list[tuple[Generator, int]]:
    """Maximal runs of one generator, as (generator, exponent) pairs."""
    runs: list[tuple[Generator, int]] = []
    for letter in u.letters:
        if runs and runs[-1][0] == letter.gen:
            runs[-1] = (letter.gen, runs[-1][1] + letter.sign)
        else:
            runs.append((letter.gen, letter.sign))
    return runs


def from_syllables(runs: Iterable[tuple[Generator, int]]) -> Word:
    return mul(*(pow(letter_word(generator), exponent) for generator, exponent in runs))


def drop_last_letter(u: Word) -> Word:
    return Word(u.letters[:-1])
