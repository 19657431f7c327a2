# File: rings/factory.py
"""Domain factory for creating ring instances from their text spec"""
from typing import List

from core.exceptions import ConfigurationError
from rings.base import Domain
from rings.integers import IntegerRing
from rings.polynomials import PolynomialRing
from rings.residues import PrimeField
from utils.logger import get_logger

logger = get_logger(__name__)


def create_domain(ring_spec: str) -> Domain:
    """Create the domain named by ``z``, ``polymod=<p>`` or ``gf=<p>``"""
    spec = (ring_spec or "z").strip().lower()

    if spec in ("z", "zz", "integers"):
        return IntegerRing()

    name, sep, value = spec.partition("=")
    if not sep:
        raise ConfigurationError(f"Unknown ring: {ring_spec}")
    try:
        modulus = int(value)
    except ValueError:
        raise ConfigurationError(f"Ring {name} needs an integer modulus, got {value!r}")

    if name == "polymod":
        domain = PolynomialRing(modulus)
    elif name == "gf":
        domain = PrimeField(modulus)
    else:
        raise ConfigurationError(f"Unknown ring: {ring_spec}")

    logger.debug(f"Created domain {domain.name} from spec {ring_spec!r}")
    return domain


def get_available_rings() -> List[str]:
    """Get list of accepted ring specs"""
    return ["z", "polymod=<p>", "gf=<p>"]
