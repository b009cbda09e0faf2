# target alphabet of every embedding
X_NAME = "x"
Y_NAME = "y"

# auxiliary letter of the passage words t'_i = y^i z^i
Z_NAME = "z"

# alphabet of the older HNN words compared against the universal words
HNN_A_NAME = "a"
HNN_B_NAME = "b"

MAX_SCHEMA_PARAMS = 2

# printed form of the empty word
IDENTITY_TEXT = "1"

DEFAULT_SEED = 0
EXHAUSTIVE_WITNESS_DEGREE = 4
DEFAULT_WITNESS_DEGREE = 8
DEFAULT_WITNESS_STEPS = 200_000
WITNESS_RESTART_BATCH = 500

DEFAULT_IDENTITY_IMAX = 50
DEFAULT_BASIS_N = 8
DEFAULT_LENGTH_IMAX = 200

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_MODE_VIOLATION = 3
EXIT_SCHEMA_REFUSAL = 4
