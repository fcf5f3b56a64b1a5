"""Bit-functions (power-of-two weightings) and their sampler."""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np

from src.utils.config import get_settings
from src.utils.errors import InputError
from src.utils.numbers import Number, power_of_two


@dataclass(frozen=True)
class BitFunction:
    """Weighting ``w_e = 2 ** exponents[e]``."""

    exponents: Tuple[int, ...]

    @property
    def weights(self) -> Tuple[Number, ...]:
        return tuple(power_of_two(exp) for exp in self.exponents)

    def integer_weights(self) -> Tuple[int, ...]:
        """Weights scaled by ``2 ** -min(exponent)`` so that all are integers.

        Scaling by a power of two changes neither lexicographic maxima nor
        robustness ratios.
        """
        low = min(self.exponents, default=0)
        return tuple(2 ** (exp - low) for exp in self.exponents)

    @property
    def scale_exponent(self) -> int:
        return min(self.exponents, default=0)

    def to_dict(self):
        return {"exponents": list(self.exponents)}


def sample_bit_functions(
    ground_size: int,
    samples: Optional[int] = None,
    low: Optional[int] = None,
    high: Optional[int] = None,
    seed: Optional[int] = None,
) -> Iterator[BitFunction]:
    """Draw random bit-functions.

    Three regimes are mixed: two-level exponents in {0, 1}, uniform
    exponents in ``[low, high]``, and uniform exponents with some entries
    replaced by the extremes ``+-(ground_size + 2)``.

    Args:
        ground_size: Number of elements
        samples: Number of functions (default from settings)
        low: Smallest uniform exponent (default from settings)
        high: Largest uniform exponent (default from settings)
        seed: Random seed (default from settings)

    Yields:
        BitFunction instances, reproducibly for a fixed seed
    """
    settings = get_settings()
    samples = samples if samples is not None else settings.bit_function_samples
    low = low if low is not None else settings.bit_exponent_low
    high = high if high is not None else settings.bit_exponent_high
    seed = seed if seed is not None else settings.default_seed
    if low > high:
        raise InputError(f"Empty exponent range [{low}, {high}]")

    rng = np.random.default_rng(seed)
    extreme = ground_size + 2
    for _ in range(samples):
        regime = rng.random()
        if regime < 0.4:
            exponents = rng.integers(0, 2, size=ground_size)
        elif regime < 0.8:
            exponents = rng.integers(low, high + 1, size=ground_size)
        else:
            exponents = rng.integers(low, high + 1, size=ground_size)
            mask = rng.random(ground_size) < 0.3
            signs = rng.choice(np.array([-1, 1]), size=ground_size)
            exponents = np.where(mask, signs * extreme, exponents)
        yield BitFunction(tuple(int(exp) for exp in exponents))
