"""Default constants for tensegrity-strata."""

# Sampling
DEFAULT_SEED = 1
DEFAULT_SAMPLES = 3
COORDINATE_BOUND = 1_000_000

# 64-bit LCG (Knuth's MMIX constants)
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407

# Catalog verification
WITNESS_SAMPLES = 30
VISIBILITY_THRESHOLD = 25
TAU_WITNESS_SAMPLES = 3

# Rendering
RENDER_MARGIN = 0.1
RENDER_WIDTH = 480
RENDER_THEMES = ("paper", "slate")
