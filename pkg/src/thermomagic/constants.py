"""Central numerical tolerances and shared constants.

Three tiers are used throughout the package: structural checks on exact
algebraic facts (orthogonality, unit norms), identities derived from them,
and comparisons against sampling-based oracles.
"""

import numpy as np

# Structural facts (orthogonal matrices, unit vectors, polytope membership).
STRUCTURAL_TOL = 1e-12

# Derived identities (e.g. alpha^2 + h^2 = 3 for octant support coefficients).
IDENTITY_TOL = 1e-10

# Agreement between closed forms and brute-force scan oracles.
ORACLE_TOL = 1e-9

# Population-interval membership slack used by reachability tests.
INTERVAL_TOL = 1e-10

# |p - gamma| below this is treated as the thermally degenerate case.
DEGENERATE_GAP = 1e-9

# Radicands in the coherence cap may round slightly negative at interval
# endpoints; anything above this floor is clamped to zero.
RADICAND_FLOOR = -1e-12

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)

# Inverse golden ratio, used by the derivative-free 1-D maximisers.
INVPHI = (np.sqrt(5.0) - 1.0) / 2.0
