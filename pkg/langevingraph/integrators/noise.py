"""
Reproducible Gaussian noise streams.

A stream is identified by ``(seed, key)``: the key is the spawn path of a
``numpy.random.SeedSequence`` and the bits come from the counter-based
``Philox`` generator, so replica ``i`` of an ensemble always sees the same
increments no matter how many workers run the ensemble or in which order.
"""

from typing import Optional, Tuple

import numpy as np

from ..utils.errors import DomainError

DEFAULT_CHUNK = 4096


class NoiseStream:
    """
    Standard Gaussian vectors of dimension ``n``, one per integrator step.

    Vectors are drawn from the generator in chunks; numpy fills a block of
    normals in the same order as repeated single draws, so the chunk size
    does not change the sequence.

    Args:
        seed (int): Non-negative 64-bit seed.
        n (int): Dimension of each increment.
        key (Tuple[int, ...]): Spawn path identifying the stream.
        chunk (int): Number of vectors drawn per refill.
    """

    def __init__(
        self,
        seed: int,
        n: int,
        key: Tuple[int, ...] = (),
        chunk: int = DEFAULT_CHUNK,
    ):
        if seed < 0 or seed >= 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
        if n < 1:
            raise DomainError(f"noise dimension must be >= 1, got {n}")
        self.seed = int(seed)
        self.n = int(n)
        self.key = tuple(int(k) for k in key)
        self.chunk = max(1, int(chunk))
        self.generator = np.random.Generator(
            np.random.Philox(np.random.SeedSequence(self.seed, spawn_key=self.key))
        )
        self._buffer = np.empty((0, self.n))
        self._pos = 0
        self.consumed = 0

    def spawn(self, index: int, n: Optional[int] = None) -> "NoiseStream":
        """
        Independent child stream for replica ``index``.
        """
        return NoiseStream(
            self.seed, self.n if n is None else n, self.key + (index,), self.chunk
        )

    def _refill(self) -> None:
        self._buffer = self.generator.standard_normal((self.chunk, self.n))
        self._pos = 0

    def normal(self) -> np.ndarray:
        """
        Next standard Gaussian vector of length ``n``.
        """
        if self._pos >= self._buffer.shape[0]:
            self._refill()
        xi = self._buffer[self._pos]
        self._pos += 1
        self.consumed += 1
        return xi

    def normals(self, count: int) -> np.ndarray:
        """
        Next ``count`` vectors as a ``(count, n)`` array.
        """
        buffered = self._buffer[self._pos : self._pos + count]
        self._pos += buffered.shape[0]
        rest = count - buffered.shape[0]
        self.consumed += count
        if rest == 0:
            return buffered.copy()
        return np.concatenate([buffered, self.generator.standard_normal((rest, self.n))])

    def __repr__(self) -> str:
        return f"NoiseStream(seed={self.seed}, n={self.n}, key={self.key})"
