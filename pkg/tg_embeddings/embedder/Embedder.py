import functools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import NamedTuple

from .. import constants as const, errors as err
from ..library import AffineLib, SchemaWordLib, WordLib
from ..library.Events import emit
from ..library.WordFormat import format_word
from ..presentation.Presentation import Bound, instantiate
from ..presentation.PresentationSerializer import serialize
from ..types import (
    EmbedMode,
    Generator,
    GeneratorFamily,
    ParamRange,
    Presentation,
    RelatorSchema,
    SchemaWord,
    Simplify,
    Substitution,
    UnmappedPolicy,
    Word,
)
from . import UniversalWords


logger = logging.getLogger(__name__)


# Structs
class EmbeddingResult(NamedTuple):
    target: Presentation
    # images of the source generators used by concrete relators, or of every member of a bounded family
    gamma: Substitution
    # image of the family member with symbolic index `family_param`
    gamma_family: SchemaWord
    family_name: str
    family_param: str
    mode: EmbedMode
    # source relator, then source schemas, in target order
    provenance: tuple[str, ...]
    simplify: Simplify = Simplify.NONE


# Events
class RelatorEmbedded(NamedTuple):
    source: str
    length: int


class SchemaEmbedded(NamedTuple):
    source: str
    target: str


def check_embeddable(p: Presentation, mode: EmbedMode, allow_schemas: bool = False) -> GeneratorFamily:
    """Check the preconditions shared by both embeddings and return the source family.

    Raises:
        EmbeddingModeError: If schemas are present (unless allowed), the generators are not a single indexed family
            starting at 1 or later, or torsion-free mode is requested without the torsion_free attribute
    """
    if p.schemas and not allow_schemas:
        raise err.EmbeddingModeError(err.EMBED_SCHEMAS_PRESENT)
    if p.generators:
        raise err.EmbeddingModeError(f"{err.EMBED_UNINDEXED_GENERATOR}: {p.generators[0]}")
    if len(p.families) != 1:
        raise err.EmbeddingModeError(f"{err.EMBED_FAMILY_COUNT}: {len(p.families)}")
    family = p.families[0]
    if mode is EmbedMode.TORSION_FREE and not p.torsion_free_asserted:
        raise err.EmbeddingModeError(err.EMBED_TORSION_FREE_NOT_ASSERTED)
    return family


def image(i: int, mode: EmbedMode) -> Word:
    if mode is EmbedMode.TORSION_FREE:
        return UniversalWords.universal_word_tf(i)
    return UniversalWords.universal_word(i)


def build_gamma(p: Presentation, family: GeneratorFamily, mode: EmbedMode) -> Substitution:
    generators: set[Generator] = set()
    for relator in p.relators:
        generators.update(relator.generators())
    if family.upper is not None:
        generators.update(Generator(family.name, i) for i in range(family.lower, family.upper + 1))
    mapping = {g: image(g.index, mode) for g in sorted(generators, key=Generator.sort_key)}
    return Substitution(mapping, UnmappedPolicy.ERROR_ON_UNMAPPED)


def family_image(family: GeneratorFamily, mode: EmbedMode) -> SchemaWord:
    index = AffineLib.param(family.param)
    if mode is EmbedMode.TORSION_FREE:
        return UniversalWords.universal_word_tf_schema(index)
    return UniversalWords.universal_word_schema(index)


def _target(p: Presentation, relators: list[Word], schemas: list[RelatorSchema]) -> Presentation:
    return Presentation(
        generators=(const.X_NAME, const.Y_NAME),
        relators=tuple(relators),
        schemas=tuple(schemas),
        dropped=p.dropped,
    )


def _embed_relators(p: Presentation, gamma: Substitution, simplify: Simplify, workers: int) -> list[Word]:
    substitute = functools.partial(WordLib.substitute, substitution=gamma)
    if workers > 1 and len(p.relators) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map keeps source order
            images = list(pool.map(substitute, p.relators))
    else:
        images = [substitute(relator) for relator in p.relators]
    if simplify is Simplify.CYCLIC:
        images = [WordLib.cyclic_reduce(relator) for relator in images]
    for relator, target in zip(p.relators, images):
        emit(logger, RelatorEmbedded(format_word(relator), len(target)))
    return images


def embed(
    p: Presentation,
    mode: EmbedMode = EmbedMode.GENERAL,
    simplify: Simplify = Simplify.NONE,
    workers: int = 1,
) -> EmbeddingResult:
    """Embed an instantiated presentation into a presentation on the two generators x, y.

    Every source generator a[i] is replaced by its universal word (general mode) or by its shorter torsion-free word,
    and the target relators are the freely reduced images of the source relators, in source order.

    Args:
        p: A schema-free presentation over a single indexed generator family
        mode: GENERAL, or TORSION_FREE for presentations carrying the torsion_free attribute
        simplify: CYCLIC cyclically reduces every target relator
        workers: Number of processes substituting relators in parallel

    Returns:
        The target presentation with the substitution used

    Raises:
        EmbeddingModeError: If the presentation or the mode violates the preconditions
    """
    family = check_embeddable(p, mode)
    gamma = build_gamma(p, family, mode)
    relators = _embed_relators(p, gamma, simplify, workers)
    return EmbeddingResult(
        target=_target(p, relators, []),
        gamma=gamma,
        gamma_family=family_image(family, mode),
        family_name=family.name,
        family_param=family.param,
        mode=mode,
        provenance=tuple(format_word(relator) for relator in p.relators),
        simplify=simplify,
    )


def embed_template(template: SchemaWord, param_range: ParamRange, mode: EmbedMode) -> SchemaWord:
    """Image of a relator template, syllable by syllable, merged symbolically.

    Raises:
        SchemaRefusalError: If a parametric exponent may vanish or change sign over the range, or if a parametric power
            of a general-mode image is needed
    """
    images = []
    for part in template:
        if not part.exponent.is_constant() and AffineLib.sign_on(part.exponent, param_range) is None:
            raise err.SchemaRefusalError(
                f"{err.SCHEMA_EXPONENT_SIGN_INDEFINITE}: {SchemaWordLib.format_schema_word((part,))}"
            )
        if mode is EmbedMode.TORSION_FREE:
            # (y^e)^c rather than (y^c)^e keeps a parametric power on a single syllable
            images.append(UniversalWords.universal_word_tf_schema(part.index, part.exponent))
            continue
        if not part.exponent.is_constant():
            raise err.SchemaRefusalError(
                f"{err.SCHEMA_PARAMETRIC_POWER_OF_IMAGE}: {SchemaWordLib.format_schema_word((part,))}"
            )
        images.append(SchemaWordLib.power(UniversalWords.universal_word_schema(part.index), part.exponent))
    return SchemaWordLib.concat(*images)


def embed_schema(p: Presentation, mode: EmbedMode = EmbedMode.GENERAL, simplify: Simplify = Simplify.NONE) -> EmbeddingResult:
    """Embed a presentation keeping its relator schemas symbolic.

    Concrete relators are embedded as by `embed`; each schema becomes a schema over {x, y} with the same parameter
    range, such that instantiating the target agrees with embedding the instantiated source.

    Raises:
        EmbeddingModeError: If the presentation or the mode violates the preconditions
        SchemaRefusalError: If a schema cannot be embedded symbolically
    """
    family = check_embeddable(p, mode, allow_schemas=True)
    gamma = build_gamma(p, family, mode)
    relators = _embed_relators(p, gamma, simplify, 1)
    schemas = []
    for schema in p.schemas:
        template = embed_template(schema.template, schema.param_range, mode)
        schemas.append(RelatorSchema(template, schema.param_range))
        emit(logger, SchemaEmbedded(
            SchemaWordLib.format_schema_word(schema.template), SchemaWordLib.format_schema_word(template)
        ))
    provenance = [format_word(relator) for relator in p.relators]
    provenance += [SchemaWordLib.format_schema_word(schema.template) for schema in p.schemas]
    return EmbeddingResult(
        target=_target(p, relators, schemas),
        gamma=gamma,
        gamma_family=family_image(family, mode),
        family_name=family.name,
        family_param=family.param,
        mode=mode,
        provenance=tuple(provenance),
        simplify=simplify,
    )


def instantiate_result(result: EmbeddingResult, bound: Bound) -> Presentation:
    """Instantiate the target schemas, cyclically reducing the new relators when the result asks for it."""
    target = instantiate(result.target, bound)
    if result.simplify is Simplify.CYCLIC:
        target = replace(target, relators=tuple(WordLib.cyclic_reduce(relator) for relator in target.relators))
    return target


def gamma_lines(result: EmbeddingResult) -> list[str]:
    lines = [f"{format_word(WordLib.letter_word(g))} = {format_word(w)}" for g, w in result.gamma.mapping.items()]
    member = f"{result.family_name}[{result.family_param}]"
    lines.append(f"{member} = {SchemaWordLib.format_schema_word(result.gamma_family)}")
    return lines


def format_result(result: EmbeddingResult, format: str = "dsl") -> str:
    """Render the target presentation followed by the `gamma` section.

    In the DSL and GAP formats the section is a block of `# gamma:` comment lines, so the text still parses.

    Raises:
        SerializationError: If the format cannot express the target
    """
    if format == "json":
        document = {
            "mode": result.mode.value,
            "target": json.loads(serialize(result.target, "json")),
            "gamma": gamma_lines(result),
            "provenance": list(result.provenance),
        }
        return json.dumps(document, indent=2, sort_keys=True) + "\n"
    text = serialize(result.target, format)
    return text + "".join(f"# gamma: {line}\n" for line in gamma_lines(result))
