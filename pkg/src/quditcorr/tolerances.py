"""Global tolerance ladder.

Every numeric judgment in the package reads its bound from here, so there is
exactly one tunable surface.  Reports must quote the tolerance a value was
judged against; handlers pull the same constants.
"""

# Probability ingestion: entries in [-PROB_NEG_CLAMP, 0) are zeroed, anything
# lower is rejected; the entry sum must match 1 this tightly before the
# vector is renormalized.
PROB_NEG_CLAMP = 1e-12
PROB_SUM_ATOL = 1e-12

# Density-matrix validation.
HERMITIAN_ATOL = 1e-10
TRACE_ATOL = 1e-10
PSD_ATOL = 1e-10  # eigenvalue floor; the same window is clamped to 0 for entropies

# Inequality margins.
SUBADDITIVITY_ATOL = 1e-10       # classical subadditivity and the matrix-element inequalities
QUANTUM_MUTUAL_ATOL = 1e-9       # quantum mutual information floor
PRODUCT_MUTUAL_ATOL = 1e-9       # |I| for explicitly product inputs
ENTROPY_BOUND_ATOL = 1e-10       # 0 <= S <= ln N slack
CHSH_ATOL = 1e-9                 # CHSH maximum against closed-form targets

# Tomograms.
TOMOGRAM_SUM_ATOL = 1e-10        # normalization check before renormalizing
TOMOGRAM_NEG_CLAMP = 1e-12      # floating-point negative clamp window

# Qubit probability parametrization.
BLOCH_ATOL = 1e-10               # slack on the squared Bloch radius
