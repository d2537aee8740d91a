"""
Counter-based random streams.

Each stream is identified by (master_seed, path_index, purpose). The triple is
hashed by numpy's SeedSequence into the key of a Philox generator, so a path's
draws never depend on which worker runs it or in which order.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from inexact_euler.enums import StreamPurpose
from inexact_euler.exceptions import DomainError

MAX_SEED = 2**64 - 1
# Generator.random() returns multiples of 2**-53
SMALLEST_DRAW = 2.0**-53


@dataclass(frozen=True)
class StreamSpec:
    """Identity of one random stream."""
    master_seed: int
    path_index: int
    purpose: StreamPurpose

    def __post_init__(self):
        if not 0 <= self.master_seed <= MAX_SEED:
            raise DomainError(f"master seed must be a 64-bit unsigned integer, got {self.master_seed}")
        if self.path_index < 0:
            raise DomainError(f"path index must be nonnegative, got {self.path_index}")

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this stream."""
        seq = np.random.SeedSequence(
            entropy=self.master_seed,
            spawn_key=(self.path_index, self.purpose.value),
        )
        return np.random.Generator(np.random.Philox(seq))


def draw_uniforms(s: StreamSpec, count: int) -> np.ndarray:
    """
    First `count` draws of a stream, in the open interval (0, 1).

    Args:
        s: Stream identity
        count: Number of draws, >= 1

    Raises:
        DomainError: If count < 1

    Returns:
        Array of `count` uniforms; an exact 0.0 is replaced by 2**-53
    """
    if count < 1:
        raise DomainError(f"draw count must be positive, got {count}")
    draws = s.generator().random(count)
    draws[draws == 0.0] = SMALLEST_DRAW
    return draws


def split_for_path(master_seed: int, path_index: int) -> Tuple[StreamSpec, StreamSpec]:
    """
    The two streams a Monte-Carlo path owns.

    Args:
        master_seed: Experiment seed
        path_index: Path number within the ensemble

    Returns:
        (tau stream, noise stream)
    """
    return (
        StreamSpec(master_seed, path_index, StreamPurpose.TAU_DRAWS),
        StreamSpec(master_seed, path_index, StreamPurpose.NOISE_DRAWS),
    )
