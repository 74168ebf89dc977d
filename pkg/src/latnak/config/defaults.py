DEFAULT_LATNAK_TOML = """# latnak configuration file
# Generated by latnak init

# ============================================================================
# Coefficient Field
# ============================================================================
[field]
# "rationals" computes over Q, "prime" over GF(prime)
kind = "rationals"

# Characteristic used when kind = "prime" (odd prime below 2^31)
prime = 32003


# ============================================================================
# Size Caps
# ============================================================================
[limits]
# Largest algebra dimension verified with complexes; larger instances only run
# lattice chains and Coxeter certificates
max_dim = 60

# Largest degree-zero Hom space searched by the isomorphism test
iso_cap = 8

# Number of random instances drawn by property suites
max_sample = 50


# ============================================================================
# Output Configuration
# ============================================================================
[output]
# Result format
format = "text"  # "json" | "csv" | "text"

# Report verbosity, also sets the log level
verbosity = "normal"  # "minimal" | "normal" | "verbose"

# Color output in terminal
color = "auto"  # "auto" | "always" | "never"


# ============================================================================
# Run Settings
# ============================================================================
[run]
# Seed of the random property suites
seed = 0

# Check orthogonality and membership after every projection
verify = true

# Threads used for certificate batches
workers = 4
"""
