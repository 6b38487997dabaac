"""Python surface of the verification library.

Everything is re-exported from the compiled module: braid operators and their
relation residuals, the gate-factorization distances, phase-deformed entangled
states and their entropies, meson mixture criteria, lattice wave-equation
solvers, graded ladder spectra, and the consistency report serializers.
"""

from braidqi._core import *  # noqa: F401,F403
from braidqi._core import __doc__ as _core_doc

__doc__ = _core_doc if _core_doc else __doc__
