"""Lexicographically ordered module of formal integer combinations."""

from ultralis.ordered_space.ultra_element import (
    GeneratorId,
    Ordering,
    UltraElement,
    add,
    compare,
    negate,
    partial_sums,
    ultrafat_increment,
)

__all__ = [
    "GeneratorId",
    "Ordering",
    "UltraElement",
    "add",
    "compare",
    "negate",
    "partial_sums",
    "ultrafat_increment",
]
