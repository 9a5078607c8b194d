# Catalog names
CATALOG_GL_UPPER = "gl_upper"
CATALOG_SP = "sp"
CATALOG_HEISENBERG = "heis"
CATALOG_SEPARATOR = ":"

# Basis labels
LABEL_MATRIX_ENTRY = "e_{i},{j}"
LABEL_HEIS_P = "p_{i}"
LABEL_HEIS_Q = "q_{i}"
LABEL_HEIS_Z = "z"
LABEL_TORUS = "H_{k}"

# JSON keys
KEY_ALGEBRA = "algebra"
KEY_COEFFS = "coeffs"
KEY_DIM = "dim"
KEY_LABELS = "labels"
KEY_BRACKETS = "brackets"
KEY_I = "i"
KEY_J = "j"
KEY_K = "k"
KEY_C = "c"
KEY_OUT = "out"
KEY_ERROR = "error"
KEY_DETAIL = "detail"
KEY_CASE_NAME = "case_name"
KEY_INPUTS = "inputs"
KEY_RESULTS = "results"
KEY_PAPER_EXPECTATIONS = "paper_expectations"
KEY_MATCH = "match"
KEY_KNOWN_DISCREPANCIES = "known_discrepancies"
KEY_ANCHOR = "anchor"
KEY_EXPECTED = "expected"
KEY_CAVEATS = "caveats"

# CLI subcommands
CMD_ORBIT = "orbit"
CMD_CLASSIFY = "classify"
CMD_POLARIZE = "polarize"
CMD_STABILIZER = "stabilizer"
CMD_DEGENERATE = "degenerate"
CMD_COSETS = "cosets"
CMD_GOLDEN = "golden"

# Golden case sets
CASE_GL4 = "gl4"
CASE_GLN = "gln"
CASE_SP = "sp"
CASE_HEISENBERG = "heisenberg"
CASE_DEGENERATION = "degeneration"
CASE_COSETS = "cosets"
CASE_SETS = (CASE_GL4, CASE_GLN, CASE_SP, CASE_HEISENBERG, CASE_DEGENERATION, CASE_COSETS)

# Configuration keys and defaults
CONFIG_COCHARACTER_BOUND = "cocharacter_bound"
CONFIG_LOG_LEVEL = "log_level"
CONFIG_GOLDEN_SIZES = "golden_sizes"
CONFIG_PRETTY_INDENT = "pretty_indent"
DEFAULT_COCHARACTER_BOUND = 2
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_PRETTY_INDENT = 2
DEFAULT_GOLDEN_SIZES = {
    CASE_GLN: [4, 5, 6, 7],
    CASE_SP: [3, 4],
    CASE_HEISENBERG: [1, 2, 3],
    CASE_COSETS: [4, 5, 6, 7, 8],
}

# Exit statuses
EXIT_OK = 0
EXIT_GOLDEN_MISMATCH = 1
EXIT_ERROR = 2

# Messages
MSG_UNKNOWN_CATALOG = "unknown catalog name '{name}'"
MSG_CATALOG_PARAMETER = "catalog '{name}' needs an integer parameter >= {minimum}, got '{value}'"
MSG_UNKNOWN_LABEL = "unknown basis label '{label}'"
MSG_BAD_RATIONAL = "cannot read '{text}' as a rational number"
MSG_GOLDEN_MISMATCH = "{case}: {key} expected {expected}, got {actual} ({anchor})"
MSG_COMMAND_FAILED = "{command} failed: {error}"
MSG_EPSILON_CAVEAT = (
    "stabilizer is computed at the Lie-algebra level; the finite component "
    "group (the sign factor on the corner entries) is not represented"
)
MSG_NO_CERTIFICATE = "no horizontal certificate found with cocharacter entries in [-{bound}, {bound}]"
