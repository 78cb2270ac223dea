# Primes checked by the p-adic half of the absolute-value suite
PADIC_PRIMES = (2, 3, 5)
# Search bound for integers with absolute value above 1
ARCHIMEDEAN_SEARCH_BOUND = 10_000
# Escalation exponents m exercised by the witness suite
ESCALATION_LEVELS = range(0, 21)
# n0 and r used for every escalation
ESCALATION_N0 = 2
ESCALATION_R = 1
# Members summed per shrink-contract spot check
SUMSET_SAMPLES = 20
# Heisenberg dimensions n (matrix size n + 2) covered by the reduction suite
REDUCTION_MAX_DIM = 6
# Samples per corner subgroup G_ij
CORNER_SAMPLES = 100
# Coefficient bound of the structured composition search run at level 4
STRUCTURED_SEARCH_BOUND = 1
