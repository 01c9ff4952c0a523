"""
圈幂图 C_n^s：距离、邻接、邻域与边计数

顶点是剩余类 0..n-1，所有公开输入都先对 n 取模。
子集使用 VertexSubset 位集，所有计数都是 Python 整数。
"""

from functools import lru_cache
from typing import Tuple

from app.core.errors import DomainError
from app.schemas.cycle_power import GraphSpec, VertexSubset
from app.utils import bitset


def d_plus(i: int, j: int, n: int) -> int:
    """规范代表元上的 |i - j|"""
    return abs(i % n - j % n)


def d_minus(i: int, j: int, n: int) -> int:
    """n - |i - j|；i == j 时为 n"""
    return n - d_plus(i, j, n)


def d_cyclic(i: int, j: int, n: int) -> int:
    """环上的跳数距离，取值 [0, n // 2]"""
    plus = d_plus(i, j, n)
    return min(plus, n - plus)


def adjacent(spec: GraphSpec, u: int, v: int) -> bool:
    return 1 <= d_cyclic(u, v, spec.n) <= spec.s


@lru_cache(maxsize=256)
def neighbor_masks(n: int, s: int) -> Tuple[int, ...]:
    """每个顶点 v 的邻居位集（环距离 1..s）"""
    reach = min(s, n // 2)
    base = 0
    for t in range(1, reach + 1):
        base |= 1 << t
        base |= 1 << (n - t)
    return tuple(bitset.rotate(base, v, n) for v in range(n))


def _check_subset(spec: GraphSpec, subset: VertexSubset) -> None:
    if subset.n != spec.n:
        raise DomainError(f"子集位于 n={subset.n}，图的 n={spec.n}")


def _one_sided(spec: GraphSpec, subset: VertexSubset, u: int, distance) -> VertexSubset:
    _check_subset(spec, subset)
    u = spec.canon(u)
    if u not in subset:
        raise DomainError(f"顶点 {u} 不在 {subset} 中")
    members = (
        v for v in subset.members
        if v != u and distance(u, v, spec.n) <= spec.s
    )
    return VertexSubset.from_members(spec.n, members)


def neighbors_plus(spec: GraphSpec, subset: VertexSubset, u: int) -> VertexSubset:
    """N_+^U(u) = {v in U, v != u : d_plus(u, v) <= s}"""
    return _one_sided(spec, subset, u, d_plus)


def neighbors_minus(spec: GraphSpec, subset: VertexSubset, u: int) -> VertexSubset:
    """N_-^U(u) = {v in U, v != u : d_minus(u, v) <= s}"""
    return _one_sided(spec, subset, u, d_minus)


def neighborhood(spec: GraphSpec, subset: VertexSubset, u: int) -> VertexSubset:
    plus = neighbors_plus(spec, subset, u)
    minus = neighbors_minus(spec, subset, u)
    return VertexSubset(n=spec.n, mask=plus.mask | minus.mask)


def neighborhoods_disjoint(spec: GraphSpec, subset: VertexSubset, u: int) -> bool:
    plus = neighbors_plus(spec, subset, u)
    minus = neighbors_minus(spec, subset, u)
    return plus.mask & minus.mask == 0


def edge_count_mask(n: int, s: int, mask: int) -> int:
    """
    位集 mask 在 C_n^s 中的诱导边数

    环距离 t < n/2 的点对在 popcount(U & rot(U, t)) 中恰好出现一次；
    对径距离 t = n/2 出现两次。
    """
    total = 0
    for t in range(1, min(s, n // 2) + 1):
        hits = bitset.count_bits(mask & bitset.rotate(mask, t, n))
        if 2 * t == n:
            hits //= 2
        total += hits
    return total


def edge_count(spec: GraphSpec, subset: VertexSubset) -> int:
    _check_subset(spec, subset)
    return edge_count_mask(spec.n, spec.s, subset.mask)


def edge_boundary(spec: GraphSpec, subset: VertexSubset) -> int:
    """恰有一个端点在 U 中的边数"""
    _check_subset(spec, subset)
    masks = neighbor_masks(spec.n, spec.s)
    outside = ~subset.mask
    return sum(bitset.count_bits(masks[u] & outside) for u in subset.members)


def interval(spec: GraphSpec, start: int, k: int) -> VertexSubset:
    """{start, start+1, ..., start+k-1} mod n"""
    if not 1 <= k <= spec.n:
        raise DomainError(f"区间长度 k={k} 不在 [1, {spec.n}] 内")
    return VertexSubset(
        n=spec.n,
        mask=bitset.rotate(bitset.full_mask(k), start, spec.n),
    )
