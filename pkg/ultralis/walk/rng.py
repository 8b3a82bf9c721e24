"""Reproducible random streams.

Every replica draws from its own Philox counter-based generator, keyed by the master
seed and a tuple of integers (for example ``(n, replica)``). The stream a replica sees
depends only on its key, never on which worker runs it or in what order.
"""

from typing import Sequence, Tuple, Union

import numpy as np

SeedLike = Union[int, Sequence[int], np.random.Generator]


class StreamFactory:
    """Factory of independent, deterministically keyed random generators."""

    def __init__(self, seed: int) -> None:
        """
        Initialize a factory from a master seed.

        Args:
            seed: Non-negative master seed

        Examples:
            >>> streams = StreamFactory(7)
            >>> rng = streams.generator(1024, 3)
        """
        if seed < 0:
            raise ValueError(f"Seed must be non-negative, got {seed}")
        self.seed = int(seed)

    def generator(self, *keys: int) -> np.random.Generator:
        """
        Return the generator for one keyed stream.

        Args:
            keys: Non-negative integers identifying the stream

        Returns:
            A fresh ``numpy.random.Generator`` positioned at the start of the stream
        """
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=tuple(int(k) for k in keys))
        return np.random.Generator(np.random.Philox(sequence))


def as_generator(seed: SeedLike) -> np.random.Generator:
    """
    Coerce a seed description into a generator.

    Args:
        seed: An int master seed, a ``(seed, *keys)`` sequence, or an existing generator

    Returns:
        A ``numpy.random.Generator``
    """
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, (int, np.integer)):
        return StreamFactory(int(seed)).generator()
    parts: Tuple[int, ...] = tuple(int(part) for part in seed)
    if not parts:
        raise ValueError("Seed sequence must contain at least the master seed")
    return StreamFactory(parts[0]).generator(*parts[1:])
