# Library
SDK_NAME = "group-shifts"
SDK_VERSION = "1.0.0"
DEFAULT_INSTANCE_ID = "group-shift-analyzer"

# =Limits=
DEFAULT_SIZE_BUDGET = 10 ** 6
DEFAULT_PERIOD_BOUND = 8
ELL_BOUND_FACTOR = 2
HOM_SEARCH_LIMIT = 512

# Exit codes
EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_RESOLVE_ERROR = 3
EXIT_BUDGET_ERROR = 4
EXIT_VERIFICATION_FAILURE = 5

# Cache keys
REPORT_PREFIX = "report"

# Manifest keys
GROUPS_KEY = "groups"
SHIFTS_KEY = "shifts"
TASKS_KEY = "tasks"

# Factor extraction outcomes
FACTOR_MIDDLE = "middle"
FACTOR_SIMPLE = "simple"
