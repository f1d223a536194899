from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices set in `mask`, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of `mask`, including `mask` itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def canonical_key(names: Sequence[str], mask: int) -> tuple:
    return (popcount(mask), sorted(names[i] for i in bits(mask)))


def set_label(names: Sequence[str], mask: int) -> str:
    return '{' + ','.join(sorted(names[i] for i in bits(mask))) + '}'


def sort_canonical(names: Sequence[str], masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=lambda m: canonical_key(names, m))
