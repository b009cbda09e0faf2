import itertools
import logging
from dataclasses import replace
from typing import Iterator, Mapping, NamedTuple

from .. import errors as err
from ..library import AffineLib, SchemaWordLib
from ..library.Events import emit
from ..types import ParamRange, Presentation, RelatorSchema, SchemaWord, Word


logger = logging.getLogger(__name__)


# Events
class RelatorDropped(NamedTuple):
    schema: str
    params: dict


class SchemaInstantiated(NamedTuple):
    schema: str
    relators: int
    dropped: int


# per-parameter cap: one value for every parameter, or a value per parameter name
Bound = int | Mapping[str, int] | None


def check_declared(p: Presentation) -> None:
    """Check that every relator and schema only uses declared generators with in-range indices.

    Raises:
        UndeclaredGeneratorError: If a generator is not declared
        IndexRangeError: If an index can fall outside its family's range
    """
    for relator in p.relators:
        for generator in relator.generators():
            if generator.index is None:
                if generator.name not in p.generators:
                    raise err.UndeclaredGeneratorError(f"{err.GENERATOR_UNDECLARED}: {generator.name}")
                continue
            family = p.family(generator.name)
            if family is None:
                raise err.UndeclaredGeneratorError(f"{err.GENERATOR_UNDECLARED}: {generator}")
            if not family.contains(generator.index):
                raise err.IndexRangeError(f"{err.INDEX_OUT_OF_RANGE}: {generator}")
    for schema in p.schemas:
        check_template(p, schema.template, schema.param_range)


def check_template(p: Presentation, template: SchemaWord, param_range: ParamRange) -> None:
    for part in template:
        if part.index is None:
            if part.name not in p.generators:
                raise err.UndeclaredGeneratorError(f"{err.GENERATOR_UNDECLARED}: {part.name}")
            continue
        family = p.family(part.name)
        if family is None:
            raise err.UndeclaredGeneratorError(f"{err.GENERATOR_UNDECLARED}: {part.name}")
        low, high = AffineLib.bounds(part.index, param_range)
        text = f"{part.name}[{AffineLib.format_affine(part.index)}]"
        if low is None or low < family.lower:
            raise err.IndexRangeError(f"{err.INDEX_OUT_OF_RANGE}: {text}")
        if family.upper is not None and (high is None or high > family.upper):
            raise err.IndexRangeError(f"{err.INDEX_OUT_OF_RANGE}: {text}")


def iter_assignments(param_range: ParamRange, bound: Bound = None) -> Iterator[dict[str, int]]:
    """Enumerate parameter assignments in lexicographic order of the declared parameters.

    Finite upper bounds are honoured as declared and further capped by `bound` when given; unbounded parameters are
    capped by `bound`.

    Raises:
        UnboundedSchemaError: If a parameter is unbounded and no cap is given for it
    """
    axes = []
    for param_bound in param_range.bounds:
        cap = _cap_for(bound, param_bound.name)
        upper = param_bound.upper
        if upper is None:
            if cap is None:
                raise err.UnboundedSchemaError(f"{err.SCHEMA_UNBOUNDED_NO_BOUND}: {param_bound.name}")
            upper = cap
        elif cap is not None:
            upper = min(upper, cap)
        if upper < param_bound.lower:
            logger.warning("bound %s is below the lower bound of %s", upper, param_bound.name)
        axes.append(range(param_bound.lower, upper + 1))
    for values in itertools.product(*axes):
        yield dict(zip(param_range.params, values))


def _cap_for(bound: Bound, name: str) -> int | None:
    if bound is None or isinstance(bound, int):
        return bound
    return bound.get(name)


def instantiate_schema(schema: RelatorSchema, bound: Bound = None) -> tuple[list[Word], int]:
    """Concrete relators of one schema, with the number of freely trivial instances dropped."""
    text = SchemaWordLib.format_schema_word(schema.template)
    relators: list[Word] = []
    dropped = 0
    for env in iter_assignments(schema.param_range, bound):
        relator = SchemaWordLib.instantiate(schema.template, env)
        if not relator:
            dropped += 1
            emit(logger, RelatorDropped(text, env))
            continue
        relators.append(relator)
    emit(logger, SchemaInstantiated(text, len(relators), dropped))
    return relators, dropped


def instantiate(p: Presentation, bound: Bound = None) -> Presentation:
    """Expand every schema into concrete relators up to the bound.

    The result has no schemas. Freely trivial relators are dropped and counted in `dropped`.

    Args:
        p: The presentation
        bound: Cap on every parameter (int) or per parameter (mapping); required for unbounded schemas
    """
    relators = list(p.relators)
    dropped = p.dropped
    for schema in p.schemas:
        instances, schema_dropped = instantiate_schema(schema, bound)
        relators.extend(instances)
        dropped += schema_dropped
    return replace(p, relators=tuple(relators), schemas=(), dropped=dropped)
