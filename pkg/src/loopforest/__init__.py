"""Exact symmetric-function and forest/semigroup toolkit for oduns,
plethysm and a Foulkes-type inequality."""

from .forests import LoopAugmentedForest, RootedForest, RootedTree
from .partitions import Partition
from .plethysm import PowerSumPolynomial, plethysm
from .schur import SchurPolynomial
from .semigroup import PartialTransformation, Permutation

__all__ = [
    "LoopAugmentedForest",
    "PartialTransformation",
    "Partition",
    "Permutation",
    "PowerSumPolynomial",
    "RootedForest",
    "RootedTree",
    "SchurPolynomial",
    "plethysm",
]
