from __future__ import annotations

from collections.abc import Iterator, Sequence
from fractions import Fraction
import json
import math
from multiprocessing import Pool
from typing import Any, Callable, TypeVar

from .const import FLOAT_DIGITS

T = TypeVar("T")
R = TypeVar("R")


def bit(v: int) -> int:
    return 1 << v


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def list_to_bits(vertices: Sequence[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def pool_map(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """Map ``func`` over ``items``, in a process pool when ``workers > 1``.

    Results keep the input order, so merges stay deterministic.
    """
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    chunksize = max(1, len(items) // (workers * 4))
    with Pool(workers) as pool:
        return pool.map(func, items, chunksize=chunksize)


def fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else str(value)


def round_floats(data: Any) -> Any:
    """Round every finite float to ``FLOAT_DIGITS`` significant digits."""
    if isinstance(data, float):
        return float(f"{data:.{FLOAT_DIGITS}g}") if math.isfinite(data) else data
    if isinstance(data, dict):
        return {key: round_floats(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [round_floats(value) for value in data]
    return data


def dump_json(data: Any) -> str:
    """Stable JSON: sorted keys and fixed float precision."""
    return json.dumps(round_floats(data), sort_keys=True, indent=2)
