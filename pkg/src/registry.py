"""
Registry of named test functions shared by the experiments and the CLI.

Syntax: `const[:c]`, `phi:j1,j2,j3`, `gauss:sigma`, `cone[:radius]`, `poly:n`.
"""

import logging
from typing import Optional

import numpy as np

from src.errors import UsageError
from src.hexcoords import HexIndex, HexPoint, euclid_norm, phi, reduce_to_omega, s_to_t, t_to_s
from src.operators import CoeffTable, evaluate
from src.quadrature import gaussian_transform

logger = logging.getLogger(__name__)


class RegistryFunction:
    """An H-periodic test function with a registry name.

    Attributes:
        name: Registry string that recreates the function.
        degree: Hexagonal degree when the function is a trigonometric polynomial, else None.
        invariant: True when the function is invariant under the reflection group.
    """

    name = ""
    degree: Optional[int] = None
    invariant = False

    def __call__(self, t: HexPoint) -> np.ndarray:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"


class Constant(RegistryFunction):
    invariant = True
    degree = 0

    def __init__(self, value: float = 1.0):
        self.value = float(value)
        self.name = "const" if self.value == 1.0 else f"const:{self.value!r}"

    def __call__(self, t: HexPoint) -> np.ndarray:
        return np.full(t.shape, self.value)


class Exponential(RegistryFunction):
    def __init__(self, j: HexIndex):
        self.j = j
        self.degree = j.degree
        self.invariant = j.degree == 0
        self.name = "phi:{},{},{}".format(*j.as_triple())

    def __call__(self, t: HexPoint) -> np.ndarray:
        return phi(self.j, t)


class PeriodizedGaussian(RegistryFunction):
    """Lattice sum of exp(-(t1^2 + t2^2 + t3^2) / sigma^2)."""

    invariant = True
    reach = 2

    def __init__(self, sigma: float):
        if not sigma > 0:
            raise UsageError(f"Gaussian width must be positive, got {sigma}")
        self.sigma = float(sigma)
        self.name = f"gauss:{self.sigma!r}"

    def __call__(self, t: HexPoint) -> np.ndarray:
        s1, s2 = t_to_s(t)
        s1 = s1 - np.floor(s1 + 0.5)
        s2 = s2 - np.floor(s2 + 0.5)
        total = np.zeros(np.shape(s1))
        for m1 in range(-self.reach, self.reach + 1):
            for m2 in range(-self.reach, self.reach + 1):
                p = s_to_t(s1 + m1, s2 + m2)
                r2 = p.t1 ** 2 + p.t2 ** 2 + p.t3 ** 2
                total += np.exp(-r2 / self.sigma ** 2)
        return total

    def coefficient(self, j1, j2) -> np.ndarray:
        """Exact Fourier coefficient, one third of the continuous transform."""
        return gaussian_transform(j1, j2, self.sigma) / 3.0


class Cone(RegistryFunction):
    """Periodized max(0, 1 - ||t|| / radius); Lipschitz but not differentiable."""

    def __init__(self, radius: float = 0.4):
        if not 0 < radius <= 0.7:
            raise UsageError(f"Cone radius must lie in (0, 0.7], got {radius}")
        self.radius = float(radius)
        self.name = "cone" if self.radius == 0.4 else f"cone:{self.radius!r}"

    def __call__(self, t: HexPoint) -> np.ndarray:
        return np.maximum(0.0, 1.0 - euclid_norm(reduce_to_omega(t)) / self.radius)


class RandomPolynomial(RegistryFunction):
    """Real-valued random element of H_n drawn from a seeded generator."""

    def __init__(self, n: int, seed: int = 0):
        if n < 0:
            raise UsageError(f"Polynomial degree must be non-negative, got {n}")
        self.degree = n
        self.seed = seed
        self.name = f"poly:{n}"
        rng = np.random.default_rng(seed)
        size = 2 * n + 1
        dense = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
        dense = (dense + np.conj(dense[::-1, ::-1])) / 2
        table = CoeffTable.from_dense(dense, n)
        self.table = table.with_values(table.values / np.sqrt(len(table)))

    def __call__(self, t: HexPoint) -> np.ndarray:
        return evaluate(self.table, t).real


def parse_function(spec: str, seed: int = 0) -> RegistryFunction:
    """Build a registry function from its name."""
    name, _, arg = spec.strip().partition(":")
    try:
        if name == "const":
            return Constant(float(arg)) if arg else Constant()
        if name == "phi":
            parts = [int(p) for p in arg.split(",")]
            if len(parts) != 3:
                raise UsageError(f"phi needs three indices, got '{arg}'")
            return Exponential(HexIndex.of(*parts))
        if name == "gauss":
            return PeriodizedGaussian(float(arg))
        if name == "cone":
            return Cone(float(arg)) if arg else Cone()
        if name == "poly":
            return RandomPolynomial(int(arg), seed)
    except ValueError as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError(f"Malformed function '{spec}': {e}") from e
    raise UsageError(f"Unknown function '{spec}'. Known: const, phi:j1,j2,j3, gauss:sigma, cone, poly:n")
