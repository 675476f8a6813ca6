"""cyclecert: exact certificates for the quintic limit-cycle bifurcation study.

Subpackages by role:

* :mod:`cyclecert.exactpoly` - rational scalars, sparse multivariate and dense
  univariate polynomials, parsing and structural queries;
* :mod:`cyclecert.resultants` - resultants, discriminants, double discriminants;
* :mod:`cyclecert.rootiso` - Sturm counts, Descartes bisection, root refinement;
* :mod:`cyclecert.signcontrol` - parametric positivity and isolated-point
  certificates;
* :mod:`cyclecert.dulac` - Bendixson-Dulac and transversality machinery;
* :mod:`cyclecert.separatrix` - invariant-curve power series, chart transfer,
  Pade approximants;
* :mod:`cyclecert.shoot` - high-order Taylor integration and the shooting
  bisection for the bifurcation values;
* :mod:`cyclecert.cli` - the ``cyclecert`` command line front end with the
  scenario runner and JSON reports.
"""

__version__ = "0.1.0"

from .exactpoly import MPoly, UniPoly, Rat, parse_poly

__all__ = ["MPoly", "UniPoly", "Rat", "parse_poly", "__version__"]
