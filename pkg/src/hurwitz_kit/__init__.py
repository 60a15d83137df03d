"""Hurwitz zeta numerics, quadrature, and a verified catalog of integral identities.

The numerical functions live in :mod:`hurwitz_kit.specfun`,
:mod:`hurwitz_kit.hurwitz` and :mod:`hurwitz_kit.quad`; the identity
registry and checker in :mod:`hurwitz_kit.identities`.
"""
from .errors import (CapacityError, DivergenceError, DomainError, HurwitzKitError, PoleError,
                     QuadratureEvaluationError, SingularError)
from .hurwitz import (ComplexValue, berndt_C, berndt_G, berndt_S, clausen, eisenstein_G_alpha,
                      hurwitz_zeta, hurwitz_zeta_fourier, hurwitz_zeta_hermite, hurwitz_zeta_star,
                      hurwitz_zeta_zderiv, polylog_unit_circle)
from .quad import (LOGARITHMIC, NO_HINT, SMOOTH, Endpoint, QuadratureResult, SingularityHint,
                   integrate, integrate_crosscheck)
from .specfun import (CONSTANTS, bernoulli_number, bernoulli_poly, digamma, dirichlet_beta,
                      euler_number, gamma, log_gamma, polygamma, riemann_zeta, riemann_zeta_deriv)

__version__ = "0.1.0"
