"""Application settings module
"""
import environs

env = environs.Env()
env.read_env()

# The master seed used when no seed is given on the command line
DEFAULT_SEED = env.int('DEFAULT_SEED', 42)

# The number of runs for each sweep point
RUNS_PER_POINT = env.int('RUNS_PER_POINT', 20)

# The default number of parallel runs
JOBS = env.int('JOBS', 1)

# Raw decayed weights above this value trigger a landmark rebase for exponential decay
REBASE_THRESHOLD = env.float('REBASE_THRESHOLD', 1e300)

# Default algorithm parameters
DEFAULT_EPSILON = env.float('DEFAULT_EPSILON', 0.001)
DEFAULT_DELTA = env.float('DEFAULT_DELTA', 0.04)
DEFAULT_PHI = env.float('DEFAULT_PHI', 0.01)
DEFAULT_LAMBDA = env.float('DEFAULT_LAMBDA', 0.99)
DEFAULT_BETA = env.float('DEFAULT_BETA', 2.0)
DEFAULT_PROBABILITY = env.float('DEFAULT_PROBABILITY', 0.96)

# Default synthetic stream parameters
DEFAULT_N = env.int('DEFAULT_N', 1_000_000)
DEFAULT_RHO = env.float('DEFAULT_RHO', 1.1)
DEFAULT_UNIVERSE = env.int('DEFAULT_UNIVERSE', 1_048_575)

# Set the caching parameters
CACHE_BACKEND = env('CACHE_BACKEND', 'cachelib.simple.SimpleCache')
CACHE_PARAMETERS = env.dict('CACHE_PARAMETERS', {})
CACHE_TIMEOUT = env.int('CACHE_TIMEOUT', 3600)

# The logging format
LOG_FORMAT = env('LOG_FORMAT', '%(asctime)s %(name)s %(levelname)s %(message)s')
