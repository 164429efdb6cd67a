"""Certificate toolkit for noncrossed product division algebra constructions.

Exact local-invariant calculus over global fields, the number-theoretic
witness searches behind the degree-p^2 and degree-8 constructions, and
twisted series rings over structure-constant algebras, packaged behind a
FastAPI service with `nw` as a thin command-line client.
"""

__version__ = "0.1.0"

from .qz import QZ, lcm_list

__all__ = ["QZ", "lcm_list", "__version__"]
