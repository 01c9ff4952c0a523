"""
Z/nZ 子集的整数位集工具
"""

from collections.abc import Iterable, Iterator


def make_bitset(indexes: Iterable[int]) -> int:
    value = 0
    for idx in indexes:
        value |= 1 << idx
    return value


def full_mask(n: int) -> int:
    return (1 << n) - 1


def count_bits(value: int) -> int:
    return value.bit_count()


def iter_indexes(value: int) -> Iterator[int]:
    """按从小到大的顺序产出置位的下标"""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def rotate(value: int, shift: int, n: int) -> int:
    """n 位集合的循环移位：顶点 v 移到 v + shift mod n"""
    shift %= n
    if shift == 0:
        return value
    return ((value << shift) | (value >> (n - shift))) & full_mask(n)


def reflect(value: int, n: int) -> int:
    """集合在 v -> -v mod n 下的像"""
    return make_bitset((n - v) % n for v in iter_indexes(value))
