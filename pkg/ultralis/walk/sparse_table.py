"""Sparse table for constant-time range argmax queries."""

from typing import Any, List

import numpy as np


class SparseTable:
    """Range-argmax index over a fixed array of distinct values."""

    def __init__(self, values: "np.ndarray[Any, Any]") -> None:
        """
        Build the table in O(n log n) time and memory.

        Level ``j`` stores, for every start ``i``, the position of the maximum of
        ``values[i : i + 2**j]``.

        Args:
            values: One-dimensional array of distinct values

        Examples:
            >>> table = SparseTable(np.array([0.1, 0.9, 0.5]))
            >>> table.argmax(0, 2)
            1
        """
        values = np.asarray(values)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("SparseTable needs a non-empty one-dimensional array")
        self._values = values
        size = values.size
        index_type = np.int32 if size < 2**31 else np.int64
        levels: List["np.ndarray[Any, Any]"] = [np.arange(size, dtype=index_type)]
        width = 1
        while 2 * width <= size:
            previous = levels[-1]
            count = size - 2 * width + 1
            left = previous[:count]
            right = previous[width : width + count]
            levels.append(np.where(values[left] >= values[right], left, right))
            width *= 2
        self._levels = levels

    @property
    def size(self) -> int:
        """Number of indexed values."""
        return int(self._values.size)

    def argmax(self, lo: int, hi: int) -> int:
        """
        Position of the maximum over the inclusive 0-based range ``[lo, hi]``.

        Args:
            lo: First position
            hi: Last position (``hi >= lo``)

        Returns:
            The position of the largest value in the range
        """
        if not 0 <= lo <= hi < self._values.size:
            raise IndexError(f"Invalid range [{lo}, {hi}] for size {self._values.size}")
        level = (hi - lo + 1).bit_length() - 1
        row = self._levels[level]
        left = int(row[lo])
        right = int(row[hi - (1 << level) + 1])
        return left if self._values[left] >= self._values[right] else right
