import json

from .. import errors as err
from ..library import SchemaWordLib
from ..library.WordFormat import WordStyle, format_generator, format_word
from ..types import Generator, ParamRange, Presentation
from .interfaces import IPresentationFormat


class DslFormat(IPresentationFormat):
    """Canonical DSL text: one `gens` line, the attributes, then one `rels` line per relator and per schema."""
    @property
    def name(self) -> str:
        return "dsl"

    def serialize(self, p: Presentation) -> str:
        decls = [_format_family(f.name, f.param, f.lower, f.upper) for f in p.families] + list(p.generators)
        lines = [f"gens {', '.join(decls)};" if decls else "gens ;"]
        if p.torsion_free_asserted:
            lines.append("attrs torsion_free;")
        for relator in p.relators:
            lines.append(f"rels {format_word(relator, WordStyle.DSL)};")
        for schema in p.schemas:
            lines.append(
                f"rels {SchemaWordLib.format_schema_word(schema.template)} for {format_range(schema.param_range)};"
            )
        return "\n".join(lines) + "\n"


class GapFormat(IPresentationFormat):
    """GAP input defining the finitely presented group `G := F / rels`."""
    @property
    def name(self) -> str:
        return "gap"

    def serialize(self, p: Presentation) -> str:
        if not p.is_instantiated():
            raise err.SerializationError(err.GAP_REQUIRES_INSTANTIATED)
        generators = _gap_generators(p)
        names = [format_generator(g, WordStyle.GAP) for g in generators]
        lines = [f"F := FreeGroup({', '.join(json.dumps(n) for n in names)});" if names else "F := FreeGroup(0);"]
        for position, name in enumerate(names, start=1):
            lines.append(f"{name} := F.{position};")
        words = [format_word(relator, WordStyle.GAP) for relator in p.relators]
        lines.append(f"rels := [ {', '.join(words)} ];" if words else "rels := [ ];")
        lines.append("G := F / rels;")
        return "\n".join(lines) + "\n"


class JsonFormat(IPresentationFormat):
    @property
    def name(self) -> str:
        return "json"

    def serialize(self, p: Presentation) -> str:
        document = {
            "families": [
                {"name": f.name, "param": f.param, "lower": f.lower, "upper": f.upper} for f in p.families
            ],
            "generators": list(p.generators),
            "relators": [format_word(relator, WordStyle.DSL) for relator in p.relators],
            "schemas": [
                {
                    "template": SchemaWordLib.format_schema_word(schema.template),
                    "range": [
                        {"param": b.name, "lower": b.lower, "upper": b.upper} for b in schema.param_range.bounds
                    ],
                }
                for schema in p.schemas
            ],
            "torsion_free": p.torsion_free_asserted,
            "dropped": p.dropped,
        }
        return json.dumps(document, indent=2, sort_keys=True) + "\n"


FORMATS: dict[str, IPresentationFormat] = {f.name: f for f in (DslFormat(), GapFormat(), JsonFormat())}


def serialize(p: Presentation, format: str | IPresentationFormat = "dsl") -> str:
    """Render a presentation in a named or given format.

    Raises:
        SerializationError: If the format is unknown or cannot express the presentation
    """
    if isinstance(format, str):
        if format not in FORMATS:
            raise err.SerializationError(f"unknown format {format}")
        format = FORMATS[format]
    return format.serialize(p)


def format_range(param_range: ParamRange) -> str:
    """E.g. `k,l >= 1` or `s in 2..5, t >= 1`; neighbouring parameters with equal bounds share a group."""
    groups: list[tuple[list[str], int, int | None]] = []
    for bound in param_range.bounds:
        if groups and groups[-1][1:] == (bound.lower, bound.upper):
            groups[-1][0].append(bound.name)
        else:
            groups.append(([bound.name], bound.lower, bound.upper))
    parts = []
    for names, lower, upper in groups:
        joined = ",".join(names)
        parts.append(f"{joined} >= {lower}" if upper is None else f"{joined} in {lower}..{upper}")
    return ", ".join(parts)


def _format_family(name: str, param: str, lower: int, upper: int | None) -> str:
    if upper is None:
        return f"{name}[{param}] for {param} >= {lower}"
    return f"{name}[{param}] for {param} in {lower}..{upper}"


def _gap_generators(p: Presentation) -> list[Generator]:
    # declared plain generators, bounded families, and whatever else the relators use
    generators = {Generator(name) for name in p.generators}
    for family in p.families:
        if family.upper is not None:
            generators.update(Generator(family.name, i) for i in range(family.lower, family.upper + 1))
    for relator in p.relators:
        generators.update(relator.generators())
    return sorted(generators, key=Generator.sort_key)
