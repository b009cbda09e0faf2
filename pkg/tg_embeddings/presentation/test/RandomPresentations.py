import random

from ...library import AffineLib, SchemaWordLib
from ...library.test.RandomWords import random_reduced_word
from ...types import (
    Generator,
    GeneratorFamily,
    ParamBound,
    ParamRange,
    Presentation,
    RelatorSchema,
    SchemaLetter,
    SchemaWord,
)


"""Small random presentations built directly from the value types, for checks that run them through the DSL.

Every schema index stays inside its family's range over the whole parameter range.
"""

FAMILY = "a"
PLAIN = ("x", "y")


def random_family(rng: random.Random) -> GeneratorFamily:
    lower = rng.randint(1, 3)
    upper = None if rng.random() < 0.5 else lower + rng.randint(2, 5)
    return GeneratorFamily(FAMILY, "i", lower, upper)


def random_param_range(rng: random.Random, family: GeneratorFamily) -> ParamRange:
    names = ("s",) if rng.random() < 0.5 else ("k", "l")
    bounds = []
    for name in names:
        if family.upper is None:
            lower = family.lower + rng.randint(0, 2)
            upper = None if rng.random() < 0.5 else lower + rng.randint(0, 3)
        else:
            # leaves room for an index offset of one
            lower = rng.randint(family.lower, family.upper - 1)
            upper = rng.randint(lower, family.upper - 1)
        bounds.append(ParamBound(name, lower, upper))
    return ParamRange(tuple(bounds))


def random_template(rng: random.Random, family: GeneratorFamily, plain: tuple[str, ...], names: tuple[str, ...]) -> SchemaWord:
    parts: list[SchemaLetter] = []
    for _ in range(rng.randint(1, 3)):
        roll = rng.random()
        if plain and roll < 0.25:
            name, index = rng.choice(plain), None
        elif roll < 0.5:
            name, index = FAMILY, AffineLib.constant(family.lower + rng.randint(0, 2))
        else:
            name, index = FAMILY, AffineLib.add(AffineLib.param(rng.choice(names)), AffineLib.constant(rng.randint(0, 1)))
        if rng.random() < 0.3:
            exponent = AffineLib.param(rng.choice(names))
        else:
            exponent = AffineLib.constant(rng.choice((-3, -2, -1, 1, 2, 3)))
        parts.append(SchemaLetter(name, index, exponent))
    return SchemaWordLib.reduce(tuple(parts))


def random_presentation(rng: random.Random) -> Presentation:
    family = random_family(rng)
    plain = tuple(rng.sample(PLAIN, rng.randint(0, 2)))
    alphabet = [Generator(FAMILY, family.lower + offset) for offset in range(3)]
    alphabet += [Generator(name) for name in plain]
    relators = tuple(random_reduced_word(rng, alphabet, rng.randint(1, 6)) for _ in range(rng.randint(0, 2)))
    schemas = []
    for _ in range(rng.randint(0, 2)):
        param_range = random_param_range(rng, family)
        template = random_template(rng, family, plain, param_range.params)
        if template:
            schemas.append(RelatorSchema(template, param_range))
    return Presentation(
        families=(family,),
        generators=plain,
        relators=relators,
        schemas=tuple(schemas),
        torsion_free_asserted=rng.random() < 0.5,
    )
