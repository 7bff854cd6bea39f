"""Exact verification and construction toolkit for finite-dimensional Leibniz
algebras, coalgebras, r-matrices, bilinear forms and Nijenhuis operators."""

from .errors import (
    InconsistencyError,
    LeibnizForgeError,
    ParseError,
    PreconditionError,
    ShapeError,
    UnknownEntryError,
)
from .scalar import QQ, ScalarRing, evaluate, parse_scalar, prime_field, reduce_modulo
from .structures import (
    BilinearForm,
    Bundle,
    CheckReport,
    LeibnizAlgebra,
    LeibnizCoalgebra,
    LinearOperator,
    check_coleibniz,
    check_leibniz,
    dualize_algebra,
    dualize_coalgebra,
)
from .tensor import Tensor

__version__ = "0.1.0"
