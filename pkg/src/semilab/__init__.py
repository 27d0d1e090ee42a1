"""semilab: finite semigroups, semilattice indecomposability and semigroup algebras."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    Congruence,
    Morphism,
    Semigroup,
    congruences,
    direct_product,
    find_isomorphism,
    ideal_generated,
    idempotents,
    kernel,
    quotient,
    rees_quotient,
    validate_table,
)
from .errors import SemilabError  # noqa: E402

__all__ = [
    "Congruence",
    "Morphism",
    "Semigroup",
    "SemilabError",
    "congruences",
    "direct_product",
    "find_isomorphism",
    "ideal_generated",
    "idempotents",
    "kernel",
    "quotient",
    "rees_quotient",
    "validate_table",
]
