"""Wallis-product numerics from variational hydrogen-atom energies.

Modules
-------
gamma_kit          stable gamma ratios, the Wallis ratio, bound sandwiches
wallis_series      Wallis partial products and the gamma-ratio series sums
integral_kit       radial integral closed forms + semi-infinite quadrature
variational_engine Gaussian/Lorentz variational levels, closed and numeric
verify             named invariant suites (also behind ``wallisqm verify``)
cli                CSV/JSON reproduction tables

Every quantitative claim has two independent evaluation paths (closed form
vs quadrature, telescoped sum vs direct summation, closed minimum vs
numeric minimization); the verify suites cross-check them all.
"""

from . import gamma_kit, integral_kit, variational_engine, wallis_series
from .errors import ConvergenceError, DivergenceError, DomainError

__version__ = "0.1.0"

__all__ = [
    "gamma_kit",
    "integral_kit",
    "variational_engine",
    "wallis_series",
    "DomainError",
    "DivergenceError",
    "ConvergenceError",
    "__version__",
]
