import logging
from dataclasses import dataclass
from typing import Mapping

import pyparsing as pp

from .. import errors as err
from ..library import AffineLib, SchemaWordLib
from ..types import (
    AffineExpr,
    GeneratorFamily,
    ParamBound,
    ParamRange,
    Presentation,
    RelatorSchema,
    SchemaWord,
    Word,
)
from . import Presentation as PresentationLib


"""Parser for the presentation DSL.

    gens a[i] for i >= 1, x, y;
    attrs torsion_free;
    let p = 3;
    rels a[1]^p; a[s+1]^p = a[s] for s >= 1;
    rels [a[k], a[l]] for k,l >= 1;

Words are juxtaposed (or joined with `*`). After `^` an integer, a parameter or a parenthesised affine expression is a
power; a generator, `{word}` or `(word)` is a conjugator, and a leading `-` conjugates the inverse (`y^-x` is
(y^-1)^x). `[u, v]` is the commutator u^-1 v^-1 u v, `-u` the inverse of u, `1` the identity and `u = v` the relator
u v^-1. Statements are separated by `;` or by the next keyword; `#` starts a comment.
"""
pp.ParserElement.enable_packrat()

logger = logging.getLogger(__name__)

KEYWORDS = ("gens", "rels", "for", "in", "let", "attrs")
ATTR_TORSION_FREE = "torsion_free"


# Syntax tree
@dataclass(frozen=True)
class AffineTerm:
    coefficient: int
    name: str | None


@dataclass(frozen=True)
class AffineNode:
    terms: tuple[AffineTerm, ...]
    loc: int


@dataclass(frozen=True)
class GenNode:
    name: str
    index: AffineNode | None
    loc: int


@dataclass(frozen=True)
class IdentityNode:
    loc: int


@dataclass(frozen=True)
class ProductNode:
    factors: tuple


@dataclass(frozen=True)
class InverseNode:
    body: object


@dataclass(frozen=True)
class CommNode:
    left: object
    right: object


@dataclass(frozen=True)
class ConjugatorBody:
    word: object


@dataclass(frozen=True)
class OperandNode:
    negated: bool
    value: object
    loc: int


@dataclass(frozen=True)
class PowerNode:
    base: object
    operand: OperandNode


@dataclass(frozen=True)
class RangeNode:
    names: tuple[str, ...]
    lower: int
    upper: int | None
    loc: int


@dataclass(frozen=True)
class RelatorNode:
    lhs: object
    rhs: object | None
    ranges: tuple[RangeNode, ...]
    loc: int


@dataclass(frozen=True)
class FamilyDecl:
    name: str
    param: str
    lower: int
    upper: int | None
    loc: int


@dataclass(frozen=True)
class PlainDecl:
    name: str
    loc: int


@dataclass(frozen=True)
class GensNode:
    decls: tuple


@dataclass(frozen=True)
class RelsNode:
    relators: tuple[RelatorNode, ...]


@dataclass(frozen=True)
class LetNode:
    name: str
    value: int
    loc: int


@dataclass(frozen=True)
class AttrsNode:
    names: tuple[str, ...]
    loc: int


def _term_action(tokens: pp.ParseResults) -> AffineTerm:
    sign = -1 if tokens[0] == "-" else 1
    rest = list(tokens[1:])
    if isinstance(rest[0], int):
        return AffineTerm(sign * rest[0], rest[1] if len(rest) > 1 else None)
    return AffineTerm(sign, rest[0])


def _factor_action(tokens: pp.ParseResults) -> object:
    items = list(tokens)
    negated = items[0] == "-"
    if negated:
        items = items[1:]
    node = items[0]
    for operand in items[1:]:
        node = PowerNode(node, operand)
    return InverseNode(node) if negated else node


def _range_action(s: str, loc: int, tokens: pp.ParseResults) -> RangeNode:
    items = list(tokens)
    if "in" in items:
        split = items.index("in")
        return RangeNode(tuple(items[:split]), items[split + 1], items[split + 3], loc)
    split = items.index(">=")
    return RangeNode(tuple(items[:split]), items[split + 1], None, loc)


def _relator_action(s: str, loc: int, tokens: pp.ParseResults) -> RelatorNode:
    items = list(tokens)
    ranges = tuple(item for item in items if isinstance(item, RangeNode))
    rhs = items[2] if len(items) > 2 and items[1] == "=" else None
    return RelatorNode(items[0], rhs, ranges, loc)


def _family_action(s: str, loc: int, tokens: pp.ParseResults) -> FamilyDecl:
    name, index_param, _, param = tokens[:4]
    if index_param != param:
        raise pp.ParseFatalException(s, loc, f"family index {index_param} must match range parameter {param}")
    if tokens[4] == "in":
        return FamilyDecl(name, param, tokens[5], tokens[7], loc)
    return FamilyDecl(name, param, tokens[5], None, loc)


def _build_grammar() -> pp.ParserElement:
    keyword = {name: pp.Keyword(name) for name in KEYWORDS}
    any_keyword = pp.MatchFirst(list(keyword.values()))

    lpar, rpar = pp.Suppress("("), pp.Suppress(")")
    lbrace, rbrace = pp.Suppress("{"), pp.Suppress("}")
    lbrack, rbrack = pp.Suppress("["), pp.Suppress("]")
    comma, semi, star = pp.Suppress(","), pp.Suppress(";"), pp.Suppress("*")

    ident = ~any_keyword + pp.Word(pp.alphas + "_", pp.alphanums + "_")
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    signed_int = pp.Combine(pp.Opt("-") + pp.Word(pp.nums)).set_parse_action(lambda t: int(t[0]))
    sign = pp.one_of("+ -")

    # affine expressions: 2s-1, k - l, -s, 3
    term_core = (integer + pp.Opt(pp.Opt(star) + ident)) | ident
    first_term = (pp.Opt(sign, default="+") + term_core).set_parse_action(_term_action)
    next_term = (sign + term_core).set_parse_action(_term_action)
    affine = (first_term + pp.ZeroOrMore(next_term)).set_parse_action(
        lambda s, loc, t: AffineNode(tuple(t), loc)
    )

    word = pp.Forward()
    index = pp.Literal("[").leave_whitespace().suppress() + affine + rbrack
    gen_ref = (ident + pp.Opt(index)).set_parse_action(
        lambda s, loc, t: GenNode(t[0], t[1] if len(t) > 1 else None, loc)
    )
    identity = pp.Keyword("1", ident_chars=pp.alphanums + "_").set_parse_action(lambda s, loc, t: IdentityNode(loc))
    commutator = (lbrack + word + comma + word + rbrack).set_parse_action(lambda t: CommNode(t[0], t[1]))
    atom = commutator | (lpar + word + rpar) | identity | gen_ref

    conjugator_word = ((lbrace + word + rbrace) | (lpar + word + rpar)).set_parse_action(
        lambda t: ConjugatorBody(t[0])
    )
    operand = (pp.Opt(pp.Literal("-")) + ((lpar + affine + rpar) | conjugator_word | integer | gen_ref)).set_parse_action(
        lambda s, loc, t: OperandNode(len(t) == 2, t[-1], loc)
    )
    factor = (pp.Opt(pp.Literal("-")) + atom + pp.ZeroOrMore(pp.Suppress("^") + operand)).set_parse_action(
        _factor_action
    )
    word <<= (factor + pp.ZeroOrMore(pp.Opt(star) + factor)).set_parse_action(lambda t: ProductNode(tuple(t)))

    range_group = (
        pp.DelimitedList(ident)
        + ((pp.Literal(">=") + signed_int) | (keyword["in"] + signed_int + pp.Literal("..") + signed_int))
    ).set_parse_action(_range_action)
    relator = (
        word
        + pp.Opt(pp.Literal("=") + word)
        + pp.Opt(keyword["for"].suppress() + range_group + pp.ZeroOrMore(comma + range_group))
    ).set_parse_action(_relator_action)

    family_decl = (
        ident + pp.Suppress("[") + ident + rbrack + keyword["for"] + ident
        + ((pp.Literal(">=") + signed_int) | (keyword["in"] + signed_int + pp.Literal("..") + signed_int))
    ).set_parse_action(_family_action)
    plain_decl = ident.copy().set_parse_action(lambda s, loc, t: PlainDecl(t[0], loc))
    gens_stmt = (keyword["gens"].suppress() + pp.Opt(pp.DelimitedList(family_decl | plain_decl))).set_parse_action(
        lambda t: GensNode(tuple(t))
    )
    rels_stmt = (
        keyword["rels"].suppress() + pp.Opt(relator + pp.ZeroOrMore(semi + ~any_keyword + relator))
    ).set_parse_action(lambda t: RelsNode(tuple(t)))
    let_stmt = (keyword["let"].suppress() + ident + pp.Suppress("=") + signed_int).set_parse_action(
        lambda s, loc, t: LetNode(t[0], t[1], loc)
    )
    attrs_stmt = (keyword["attrs"].suppress() + pp.DelimitedList(ident)).set_parse_action(
        lambda s, loc, t: AttrsNode(tuple(t), loc)
    )

    program = pp.ZeroOrMore(gens_stmt | rels_stmt | let_stmt | attrs_stmt | semi) + pp.StringEnd()
    program.ignore(pp.python_style_comment)
    single_word = pp.Opt(word) + pp.StringEnd()
    single_word.ignore(pp.python_style_comment)
    return program, single_word


_GRAMMAR, _WORD_GRAMMAR = _build_grammar()


class _Builder:
    def __init__(self, text: str, constants: Mapping[str, int] | None) -> None:
        self.text = text
        self.overrides = dict(constants or {})
        self.constants: dict[str, int] = {}
        self.families: list[GeneratorFamily] = []
        self.generators: list[str] = []
        self.relators: list[Word] = []
        self.schemas: list[RelatorSchema] = []
        self.torsion_free = False
        self.dropped = 0
        # parameters of the relator being built
        self.params: frozenset[str] = frozenset()

    def where(self, loc: int) -> str:
        return f"(line {pp.lineno(loc, self.text)}, column {pp.col(loc, self.text)})"

    def syntax_error(self, message: str, loc: int) -> err.DslSyntaxError:
        return err.DslSyntaxError(message, pp.lineno(loc, self.text), pp.col(loc, self.text))

    def build(self, statements: list) -> Presentation:
        # constants and declarations may follow the relators that use them
        for statement in statements:
            if isinstance(statement, LetNode):
                self.constants[statement.name] = statement.value
        self.constants.update(self.overrides)
        for statement in statements:
            if isinstance(statement, GensNode):
                self.declare(statement)
            elif isinstance(statement, AttrsNode):
                self.attributes(statement)
        for statement in statements:
            if isinstance(statement, RelsNode):
                for relator in statement.relators:
                    self.relator(relator)
        presentation = Presentation(
            families=tuple(self.families),
            generators=tuple(self.generators),
            relators=tuple(self.relators),
            schemas=tuple(self.schemas),
            torsion_free_asserted=self.torsion_free,
            dropped=self.dropped,
        )
        PresentationLib.check_declared(presentation)
        return presentation

    def declare(self, statement: GensNode) -> None:
        for decl in statement.decls:
            if decl.name in self.generators or any(f.name == decl.name for f in self.families):
                raise self.syntax_error(f"{err.GENERATOR_DECLARED_TWICE}: {decl.name}", decl.loc)
            if isinstance(decl, FamilyDecl):
                try:
                    self.families.append(GeneratorFamily(decl.name, decl.param, decl.lower, decl.upper))
                except err.PresentationError as e:
                    raise self.syntax_error(str(e), decl.loc) from e
            else:
                self.generators.append(decl.name)

    def attributes(self, statement: AttrsNode) -> None:
        for name in statement.names:
            if name != ATTR_TORSION_FREE:
                raise self.syntax_error(f"unknown attribute {name}", statement.loc)
            self.torsion_free = True

    def relator(self, node: RelatorNode) -> None:
        bounds = []
        for range_node in node.ranges:
            for name in range_node.names:
                if name in self.constants or name in self.generators or self.is_family(name):
                    raise self.syntax_error(f"parameter {name} shadows a constant or generator", range_node.loc)
                bounds.append(ParamBound(name, range_node.lower, range_node.upper))
        try:
            param_range = ParamRange(tuple(bounds))
        except err.PresentationError as e:
            raise self.syntax_error(str(e), node.loc) from e
        self.params = frozenset(param_range.params)
        template = self.word(node.lhs)
        if node.rhs is not None:
            template = SchemaWordLib.concat(template, SchemaWordLib.inverse(self.word(node.rhs)))
        if not param_range.bounds:
            relator = SchemaWordLib.instantiate(template, {})
            if relator:
                self.relators.append(relator)
            else:
                self.dropped += 1
            return
        self.schemas.append(RelatorSchema(template, param_range))

    def is_family(self, name: str) -> bool:
        return any(family.name == name for family in self.families)

    def is_exponent_name(self, name: str) -> bool:
        return name in self.params or name in self.constants

    def affine(self, node: AffineNode) -> AffineExpr:
        expr = AffineLib.constant(0)
        for term in node.terms:
            if term.name is None:
                expr = AffineLib.add(expr, AffineLib.constant(term.coefficient))
            elif term.name in self.constants:
                expr = AffineLib.add(expr, AffineLib.constant(term.coefficient * self.constants[term.name]))
            elif term.name in self.params:
                expr = AffineLib.add(expr, AffineLib.param(term.name, term.coefficient))
            else:
                raise self.syntax_error(f"{err.PARAMETER_UNKNOWN}: {term.name}", node.loc)
        return expr

    def generator(self, node: GenNode) -> SchemaWord:
        if node.index is None:
            if node.name in self.generators:
                return SchemaWordLib.syllable(node.name)
            if self.is_family(node.name):
                raise self.syntax_error(f"{err.INDEX_MISSING}: {node.name}", node.loc)
            raise err.UndeclaredGeneratorError(f"{err.GENERATOR_UNDECLARED}: {node.name} {self.where(node.loc)}")
        if node.name in self.generators:
            raise self.syntax_error(f"{err.INDEX_ON_PLAIN_GENERATOR}: {node.name}", node.loc)
        if not self.is_family(node.name):
            raise err.UndeclaredGeneratorError(f"{err.GENERATOR_UNDECLARED}: {node.name} {self.where(node.loc)}")
        index = self.affine(node.index)
        if index.is_constant() and not self.family_contains(node.name, index.constant):
            raise err.IndexRangeError(f"{err.INDEX_OUT_OF_RANGE}: {node.name}[{index.constant}] {self.where(node.loc)}")
        return SchemaWordLib.syllable(node.name, index)

    def family_contains(self, name: str, index: int) -> bool:
        return any(family.name == name and family.contains(index) for family in self.families)

    def word(self, node: object) -> SchemaWord:
        if isinstance(node, ProductNode):
            return SchemaWordLib.concat(*(self.word(factor) for factor in node.factors))
        if isinstance(node, GenNode):
            return self.generator(node)
        if isinstance(node, IdentityNode):
            return SchemaWordLib.EMPTY
        if isinstance(node, InverseNode):
            return SchemaWordLib.inverse(self.word(node.body))
        if isinstance(node, CommNode):
            return SchemaWordLib.comm(self.word(node.left), self.word(node.right))
        if isinstance(node, PowerNode):
            return self.power(node)
        raise TypeError(f"unexpected syntax node {node!r}")

    def power(self, node: PowerNode) -> SchemaWord:
        base = self.word(node.base)
        operand = node.operand
        value = operand.value
        exponent: AffineExpr | None = None
        conjugator: SchemaWord | None = None
        if isinstance(value, int):
            exponent = AffineLib.constant(value)
        elif isinstance(value, AffineNode):
            names = [term.name for term in value.terms if term.name is not None]
            if all(self.is_exponent_name(name) for name in names):
                exponent = self.affine(value)
            elif len(value.terms) == 1 and value.terms[0].coefficient == 1 and names:
                conjugator = self.generator(GenNode(names[0], None, value.loc))
            else:
                raise self.syntax_error(err.PARAMETER_UNKNOWN, value.loc)
        elif isinstance(value, GenNode):
            if value.index is None and self.is_exponent_name(value.name):
                exponent = self.affine(AffineNode((AffineTerm(1, value.name),), value.loc))
            else:
                conjugator = self.generator(value)
        else:
            conjugator = self.word(value.word)
        if exponent is not None:
            if operand.negated:
                exponent = AffineLib.negate(exponent)
            try:
                return SchemaWordLib.power(base, exponent)
            except err.PresentationError as e:
                raise self.syntax_error(str(e), operand.loc) from e
        if operand.negated:
            base = SchemaWordLib.inverse(base)
        return SchemaWordLib.conj(base, conjugator)


def parse(text: str, constants: Mapping[str, int] | None = None) -> Presentation:
    """Parse presentation source into a Presentation.

    Args:
        text: The DSL source
        constants: Values for named constants, overriding `let` statements of the source

    Raises:
        DslSyntaxError: If the text does not follow the grammar
        UndeclaredGeneratorError: If a relator uses an undeclared generator
        IndexRangeError: If an index falls outside its family's range
    """
    try:
        statements = _GRAMMAR.parse_string(text, parse_all=True).as_list()
    except pp.ParseBaseException as e:
        raise err.DslSyntaxError(f"{err.DSL_SYNTAX}: {e.msg}", e.lineno, e.col) from e
    presentation = _Builder(text, constants).build(statements)
    logger.debug("parsed presentation with %d relators and %d schemas", len(presentation.relators), len(presentation.schemas))
    return presentation


def parse_word(text: str, presentation: Presentation) -> Word:
    """Parse a single concrete word over the generators declared by a presentation."""
    try:
        nodes = (_WORD_GRAMMAR.parse_string(text, parse_all=True)).as_list()
    except pp.ParseBaseException as e:
        raise err.DslSyntaxError(f"{err.DSL_SYNTAX}: {e.msg}", e.lineno, e.col) from e
    builder = _Builder(text, None)
    builder.families = list(presentation.families)
    builder.generators = list(presentation.generators)
    if not nodes:
        return Word()
    return SchemaWordLib.instantiate(builder.word(nodes[0]), {})
