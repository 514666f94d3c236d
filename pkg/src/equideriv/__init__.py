"""equideriv: exact computations with finite-group-equivariant graded free modules.

Modules
-------
scalar   exact arithmetic in cyclotomic fields Q(zeta_m)
group    finite groups as explicit tables, classes, subgroups
rep      representations, characters, isotypic decomposition
eqmod    block modules, the normal form, Hom tables, complexes, Koszul
descent  fixed strata, fiber representations, the descent criterion
cli      problem-file runner
"""
__version__ = "0.1.0"

from .errors import (EquiderivError, InternalConsistencyError, LimitError, ParseError,  # noqa: F401
                     ValidationError)
from .scalar import CyclotomicScalar, zeta  # noqa: F401
