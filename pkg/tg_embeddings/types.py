from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, TypeAlias

from . import constants as const, errors as err


@dataclass(frozen=True, slots=True)
class Generator:
    name: str
    index: int | None = None

    def __post_init__(self) -> None:
        if self.index is not None and self.index < 0:
            raise err.WordError(err.GENERATOR_INDEX_NEGATIVE)

    def sort_key(self) -> tuple[str, int]:
        return self.name, -1 if self.index is None else self.index

    def __str__(self) -> str:
        return self.name if self.index is None else f"{self.name}_{self.index}"


@dataclass(frozen=True, slots=True)
class Letter:
    gen: Generator
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise err.WordError(err.LETTER_SIGN_INVALID)

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)


def _freely_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if stack and stack[-1].gen == letter.gen and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True, slots=True)
class Word:
    """Element of a free group, always stored freely reduced.

    Any letter sequence given to the constructor is reduced, so no unreduced word can exist. The empty word is the
    identity.
    """
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _freely_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def generators(self) -> frozenset[Generator]:
        return frozenset(letter.gen for letter in self.letters)

    def __str__(self) -> str:
        from .library.WordFormat import format_word

        return format_word(self)


class UnmappedPolicy(Enum):
    ERROR_ON_UNMAPPED = "error"
    IDENTITY_ON_UNMAPPED = "identity"


@dataclass(frozen=True)
class Substitution:
    """Homomorphism of free groups given by the images of finitely many generators."""
    mapping: Mapping[Generator, Word] = field(default_factory=dict)
    policy: UnmappedPolicy = UnmappedPolicy.ERROR_ON_UNMAPPED


@dataclass(frozen=True, slots=True)
class AffineExpr:
    """Integer expression c0 + c1*p + c2*q over at most two named parameters.

    Terms are kept sorted by parameter name with zero coefficients dropped, so structural equality is equality of
    expressions.
    """
    constant: int = 0
    terms: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[str, int] = {}
        for name, coefficient in self.terms:
            merged[name] = merged.get(name, 0) + coefficient
        terms = tuple(sorted((name, c) for name, c in merged.items() if c != 0))
        if len(terms) > const.MAX_SCHEMA_PARAMS:
            raise err.PresentationError(err.AFFINE_TOO_MANY_PARAMS)
        object.__setattr__(self, "terms", terms)

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.terms)

    def is_constant(self) -> bool:
        return not self.terms


@dataclass(frozen=True, slots=True)
class ParamBound:
    name: str
    lower: int
    # None means unbounded
    upper: int | None = None

    def __post_init__(self) -> None:
        if self.upper is not None and self.lower > self.upper:
            raise err.PresentationError(err.RANGE_BOUNDS_INVERTED)

    def is_bounded(self) -> bool:
        return self.upper is not None


@dataclass(frozen=True, slots=True)
class ParamRange:
    bounds: tuple[ParamBound, ...] = ()

    def __post_init__(self) -> None:
        names = [bound.name for bound in self.bounds]
        if len(names) != len(set(names)):
            raise err.PresentationError(err.RANGE_DUPLICATE_PARAM)
        if len(names) > const.MAX_SCHEMA_PARAMS:
            raise err.PresentationError(err.SCHEMA_TOO_MANY_PARAMS)

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(bound.name for bound in self.bounds)

    def bound_of(self, name: str) -> ParamBound:
        for bound in self.bounds:
            if bound.name == name:
                return bound
        raise err.PresentationError(f"{err.AFFINE_UNBOUND_PARAM}: {name}")

    def is_bounded(self) -> bool:
        return all(bound.is_bounded() for bound in self.bounds)


@dataclass(frozen=True, slots=True)
class SchemaLetter:
    """Syllable name[index]^exponent of a relator template; index is None for plain generators."""
    name: str
    index: AffineExpr | None
    exponent: AffineExpr


# word template whose indices and exponents depend on the schema parameters
SchemaWord: TypeAlias = tuple[SchemaLetter, ...]


@dataclass(frozen=True, slots=True)
class RelatorSchema:
    template: SchemaWord
    param_range: ParamRange


@dataclass(frozen=True, slots=True)
class GeneratorFamily:
    """Indexed generators name_i for lower <= i (<= upper when bounded)."""
    name: str
    param: str
    lower: int
    upper: int | None = None

    def __post_init__(self) -> None:
        if self.lower < 1:
            raise err.PresentationError(err.FAMILY_LOWER_BELOW_ONE)
        if self.upper is not None and self.lower > self.upper:
            raise err.PresentationError(err.RANGE_BOUNDS_INVERTED)

    def contains(self, index: int) -> bool:
        return index >= self.lower and (self.upper is None or index <= self.upper)


@dataclass(frozen=True)
class Presentation:
    families: tuple[GeneratorFamily, ...] = ()
    generators: tuple[str, ...] = ()
    relators: tuple[Word, ...] = ()
    schemas: tuple[RelatorSchema, ...] = ()
    torsion_free_asserted: bool = False
    # freely trivial relators discarded while instantiating
    dropped: int = field(default=0, compare=False)

    def family(self, name: str) -> GeneratorFamily | None:
        for family in self.families:
            if family.name == name:
                return family
        return None

    def is_instantiated(self) -> bool:
        return not self.schemas


class EmbedMode(Enum):
    GENERAL = "general"
    TORSION_FREE = "tf"


class Simplify(Enum):
    NONE = "none"
    CYCLIC = "cyclic"
