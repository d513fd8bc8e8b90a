import os

# Enumeration settings
ENUMERATION_CAP = 10000  # > 1574 (E8) with margin
CANONICAL_KEY_MAX_VERTICES = 10

# Path algebra settings
PATH_LENGTH_FACTOR = 4  # stabilization cap = factor * n

# Worker settings
DEFAULT_WORKERS = 1
SCAN_CHUNK_SIZE = 64

# Logging settings
LOG_LEVEL = "INFO"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Fixture settings
FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")
SUPPORTED_FIXTURE_TYPES = ("E6", "E7", "E8")

# Exit codes
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE_ERROR = 2
EXIT_INVARIANT_VIOLATION = 3
EXIT_VERIFICATION_FAILURE = 4
EXIT_CAP_EXCEEDED = 5
