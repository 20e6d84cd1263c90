"""Weil polynomials of abelian threefolds over finite fields."""

from .classify import Classification, classify, p_rank
from .irreducibility import is_irreducible, real_weil_cubic
from .padic import newton_polygon, polygon_type
from .weilcheck import WeilCandidate, enumerate_box, prime_power, theorem1_check

__all__ = [
    "Classification",
    "WeilCandidate",
    "classify",
    "enumerate_box",
    "is_irreducible",
    "newton_polygon",
    "p_rank",
    "polygon_type",
    "prime_power",
    "real_weil_cubic",
    "theorem1_check",
]
