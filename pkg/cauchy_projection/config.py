"""Package-wide defaults and numeric tolerances."""

# Monte Carlo defaults surfaced by the CLI
DEFAULT_SAMPLES = 100_000
DEFAULT_SEED = 0
DEFAULT_WORKERS = 1

# Directions are generated in fixed-size blocks; the block size is part of the
# reproducibility contract and must not depend on the worker count.
SAMPLE_BLOCK_SIZE = 4096

# Acceptance threshold for |z| in verification runs
ACCEPTANCE_SIGMAS = 4.0

# Absolute tolerance for the exact (zero-variance) ball check, relative to A_S
EXACT_PASS_TOLERANCE = 1e-9

MIN_DIMENSION = 2
MAX_TABLE_DIMENSION = 64
MAX_ANALYTIC_DIMENSION = 64
MAX_POLYTOPE_DIMENSION = 4

# Coplanarity / rank tolerance, relative to the largest vertex norm
GEOMETRY_TOLERANCE = 1e-9

# Number of coefficients known for the large-d series of k(d)
SERIES_MAX_TERMS = 5
