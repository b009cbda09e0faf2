LETTER_SIGN_INVALID = "Letter sign must be +1 or -1"
GENERATOR_INDEX_NEGATIVE = "Generator index must be non-negative"
UNMAPPED_GENERATOR = "Generator has no image under substitution"
UNIVERSAL_INDEX_INVALID = "Universal word index must be at least 1"

AFFINE_TOO_MANY_PARAMS = "Affine expression uses more than two parameters"
AFFINE_UNBOUND_PARAM = "Affine expression has unbound parameter"
RANGE_BOUNDS_INVERTED = "Parameter range lower bound exceeds upper bound"
RANGE_DUPLICATE_PARAM = "Parameter declared twice in range"
FAMILY_LOWER_BELOW_ONE = "Generator family must start at index 1 or above"
SCHEMA_TOO_MANY_PARAMS = "Relator schema uses more than two parameters"

DSL_SYNTAX = "Syntax error"
GENERATOR_UNDECLARED = "Undeclared generator"
GENERATOR_DECLARED_TWICE = "Generator declared twice"
INDEX_OUT_OF_RANGE = "Generator index out of declared range"
INDEX_ON_PLAIN_GENERATOR = "Plain generator cannot carry an index"
INDEX_MISSING = "Family generator requires an index"
PARAMETER_UNKNOWN = "Unknown parameter or constant"
PARAMETRIC_POWER_OF_COMPOUND = "Parametric power of a compound word is not supported"
PARAMETRIC_POWER_NONLINEAR = "Parametric power would make an exponent non-affine"
SCHEMA_UNBOUNDED_NO_BOUND = "Unbounded relator schema requires an explicit bound"
GAP_REQUIRES_INSTANTIATED = "GAP output requires a schema-free presentation"

EMBED_SCHEMAS_PRESENT = "Presentation must be instantiated before embedding"
EMBED_UNINDEXED_GENERATOR = "Embedding requires a single indexed generator family, found plain generator"
EMBED_FAMILY_COUNT = "Embedding requires exactly one indexed generator family"
EMBED_TORSION_FREE_NOT_ASSERTED = "Torsion-free mode requires the torsion_free attribute"
SCHEMA_EXPONENT_SIGN_INDEFINITE = "Exponent sign is not constant over the parameter range"
SCHEMA_PARAMETRIC_POWER_OF_IMAGE = "Parametric power of a general-mode image word cannot be expressed as a schema"

GRAPH_NOT_FOLDED = "Subgroup graph must be folded"
GRAPH_WORD_OUTSIDE_ALPHABET = "Word uses a generator outside the declared alphabet"
WITNESS_TARGET_ALPHABET = "Witness search requires relators over x and y"
WITNESS_DEGREE_INVALID = "Witness degree must be at least 1"
WITNESS_TARGET_SCHEMAS = "Witness search requires an instantiated target"

GOLDEN_UNKNOWN_EXAMPLE = "Unknown example"
RUN_SOURCE_COUNT = "Exactly one input source must be given"
RUN_BOUND_INVALID = "Bound must be at least 1"


class TgEmbeddingsError(Exception):
    """Base class of every error raised by the toolkit."""


class WordError(TgEmbeddingsError):
    pass


class PresentationError(TgEmbeddingsError):
    pass


class DslSyntaxError(PresentationError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UndeclaredGeneratorError(PresentationError):
    pass


class IndexRangeError(PresentationError):
    pass


class UnboundedSchemaError(PresentationError):
    pass


class SerializationError(PresentationError):
    pass


class EmbeddingModeError(TgEmbeddingsError):
    pass


class SchemaRefusalError(TgEmbeddingsError):
    pass


class GraphError(TgEmbeddingsError):
    pass


class WitnessError(TgEmbeddingsError):
    pass
