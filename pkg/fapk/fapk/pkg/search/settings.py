# Largest instance enumerated by the exhaustive solver.
BRUTE_FORCE_MAX_LINKS = 6
