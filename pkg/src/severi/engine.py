"""Memoized computation of relative Severi degrees N^{d,delta}(alpha,beta).

The count satisfies, with I = weight and |.| = size:

  N^{d,delta}(alpha,beta) =
      sum_{k: beta_k >= 1} k . N^{d,delta}(alpha+e_k, beta-e_k)
    + sum N^{d-1,delta'}(alpha',beta')
          . C(alpha,alpha') . C(beta',beta) . I^(beta'-beta)

where the second sum runs over alpha' <= alpha and beta' >= beta with
I(alpha') + I(beta') = d-1 and delta' = delta + |beta'| - |beta| - (d-1)
in the range 0 <= delta' <= (d-1)(d-2)/2.  Base cases: zero when
delta > d(d-1)/2 or the point count is negative; degree 1 counts a
single line when delta = 0.

Evaluation is iterative (explicit work stack): dependency chains have
length about d(d+3)/2 and must not touch the native call stack.
"""

from __future__ import annotations

import math
import os
import threading
from typing import Iterable, Iterator

from .tangency import (
    ChState,
    InvalidState,
    TangencySeq,
    canonical,
    seq_from_text,
    seq_to_text,
    size,
    weight,
)

SeveriKey = tuple[int, int, TangencySeq, TangencySeq]

CACHE_MAGIC = "SEVERI-CACHE"
CACHE_VERSION = "v1"


class CacheCorruption(RuntimeError):
    """A stored value was contradicted; mathematical truth is immutable."""


class VersionMismatch(ValueError):
    """Cache file carries an unsupported version tag."""


class ParseError(ValueError):
    """Cache file is empty or malformed."""


class CacheStore:
    """Memo table keyed by canonical (d, delta, alpha, beta).

    Reads are lock-free; inserts are serialized and conflict-checked:
    writing a different value for an existing key raises CacheCorruption.
    """

    def __init__(self, entries: Iterable[tuple[SeveriKey, int]] = ()):
        self.version = CACHE_VERSION
        self.hits = 0
        self.misses = 0
        self._data: dict[SeveriKey, int] = {}
        self._lock = threading.Lock()
        for key, value in entries:
            self.put(key, value)

    def get(self, key: SeveriKey) -> int | None:
        value = self._data.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key: SeveriKey, value: int) -> None:
        with self._lock:
            old = self._data.get(key)
            if old is None:
                self._data[key] = value
            elif old != value:
                raise CacheCorruption(
                    f"key {key} already holds {old}, refusing to store {value}"
                )

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: SeveriKey) -> bool:
        return key in self._data

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0

    def items(self) -> Iterator[tuple[SeveriKey, int]]:
        return iter(sorted(self._data.items()))


_DEFAULT_CACHE = CacheStore()


def default_cache() -> CacheStore:
    """The process-wide memo table used when no cache is passed."""
    return _DEFAULT_CACHE


def _max_nodes(d: int) -> int:
    # a reduced degree-d curve has at most d(d-1)/2 nodes (d general lines)
    return d * (d - 1) // 2


def _point_count(d: int, delta: int, beta_size: int) -> int:
    return d * (d + 3) // 2 - delta - d + beta_size


def _immediate(d: int, delta: int, alpha: TangencySeq, beta: TangencySeq) -> int | None:
    if delta > _max_nodes(d):
        return 0
    if _point_count(d, delta, size(beta)) < 0:
        return 0
    if d == 1:
        return 1 if delta == 0 else 0
    return None


_PARTITIONS: dict[int, tuple[tuple[int, ...], ...]] = {0: ((),)}


def _partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n into parts >= 1, each descending."""
    got = _PARTITIONS.get(n)
    if got is not None:
        return got
    out: list[tuple[int, ...]] = []
    stack = [(n, n, ())]
    while stack:
        rem, maxp, cur = stack.pop()
        if rem == 0:
            out.append(cur)
            continue
        for p in range(1, min(rem, maxp) + 1):
            stack.append((rem - p, p, cur + (p,)))
    result = tuple(out)
    _PARTITIONS[n] = result
    return result


def _alpha_candidates(
    alpha: TangencySeq, wlo: int, whi: int
) -> Iterator[tuple[TangencySeq, int, int]]:
    """Sub-sequences alpha' <= alpha with weight in [wlo, whi].

    Yields (alpha', weight, C(alpha, alpha')).  Orders >= 2 are walked
    explicitly (their multiplicities are tiny); the order-1 entry is then
    forced by the target weight.
    """
    high = [i for i in range(1, len(alpha)) if alpha[i] > 0]
    a1 = alpha[0] if alpha else 0

    def walk(pos: int, wh: int, counts: dict[int, int], binom: int):
        if pos == len(high):
            lo = max(wlo, wh)
            for wprime in range(lo, whi + 1):
                c1 = wprime - wh
                if 0 <= c1 <= a1:
                    parts = [0] * len(alpha)
                    if alpha:
                        parts[0] = c1
                    for i, c in counts.items():
                        parts[i] = c
                    yield canonical(parts), wprime, binom * math.comb(a1, c1)
            return
        i = high[pos]
        for c in range(alpha[i] + 1):
            counts[i] = c
            yield from walk(pos + 1, wh + c * (i + 1), counts, binom * math.comb(alpha[i], c))
        del counts[i]

    yield from walk(0, 0, {}, 1)


def _transitions(key: SeveriKey) -> list[tuple[int, SeveriKey]]:
    """Weighted children of a state; the state's value is the dot product."""
    d, delta, alpha, beta = key
    out: list[tuple[int, SeveriKey]] = []
    if __debug__:
        pc = _point_count(d, delta, size(beta))

    # move one unassigned order-k tangency onto an assigned point
    for i, b in enumerate(beta):
        if b:
            a2 = list(alpha) + [0] * (i + 1 - len(alpha))
            a2[i] += 1
            b2 = list(beta)
            b2[i] -= 1
            child = (d, delta, canonical(a2), canonical(b2))
            if __debug__:
                assert _point_count(d, delta, size(child[3])) == pc - 1
            out.append((i + 1, child))

    # degenerate to degree d-1: alpha' <= alpha, beta' = beta + gamma,
    # I(gamma) = I(alpha) - I(alpha') - 1, delta' = delta + |gamma| - (d-1)
    ia = weight(alpha)
    mn_next = _max_nodes(d - 1)
    # 0 <= delta' <= mn_next pins I(alpha') to a window of width delta
    wlo = max(0, ia - d)
    whi = min(ia - 1, ia - d + delta)
    if whi < wlo:
        return out
    for alpha_p, wprime, c_alpha in _alpha_candidates(alpha, wlo, whi):
        W = ia - wprime - 1  # total weight of gamma
        e_hi = min(W, delta + W - (d - 1))  # excess(gamma) caps delta'
        e_lo = max(0, W - (mn_next + (d - 1) - delta))
        for excess in range(e_lo, e_hi + 1):
            for mu in _partitions(excess):
                # gamma has one order-(p+1) part per part p of mu, plus
                # m1 order-1 parts filling the weight budget
                m1 = W - excess - len(mu)
                if m1 < 0:
                    continue
                delta_p = delta + (W - excess) - (d - 1)
                coef = c_alpha
                top = mu[0] if mu else 0
                b2 = list(beta) + [0] * max(0, top + 1 - len(beta))
                if m1:
                    coef *= math.comb(b2[0] + m1, m1)
                    b2[0] += m1
                run_val = run_len = 0
                for p in mu + (-1,):
                    if p == run_val:
                        run_len += 1
                        continue
                    if run_len:
                        coef *= (run_val + 1) ** run_len
                        coef *= math.comb(b2[run_val] + run_len, run_len)
                        b2[run_val] += run_len
                    run_val, run_len = p, 1
                child = (d - 1, delta_p, alpha_p, canonical(b2))
                if __debug__:
                    assert 0 <= delta_p <= mn_next
                    assert _point_count(d - 1, delta_p, size(child[3])) == pc - 1
                out.append((coef, child))
    return out


def _evaluate(root: SeveriKey, cache: CacheStore) -> int:
    data = cache._data
    cached = data.get(root)
    if cached is not None:
        cache.hits += 1
        return cached
    cache.misses += 1
    stack = [root]
    scheduled = {root}
    children: dict[SeveriKey, list[tuple[int, SeveriKey]]] = {}
    while stack:
        key = stack[-1]
        if key in data:
            stack.pop()
            continue
        deps = children.get(key)
        if deps is None:
            value = _immediate(*key)
            if value is not None:
                cache.put(key, value)
                stack.pop()
                continue
            deps = _transitions(key)
            children[key] = deps
            todo = [c for _, c in deps if c not in data and c not in scheduled]
            scheduled.update(todo)
            stack.extend(todo)
        else:
            # a concurrent evaluation may have claimed a child between
            # scheduling and now; re-push anything still missing
            missing = [c for _, c in deps if c not in data]
            if missing:
                stack.extend(missing)
                continue
            cache.put(key, sum(coef * data[child] for coef, child in deps))
            del children[key]
            stack.pop()
    return data[root]


def relative_severi(
    d: int,
    delta: int,
    alpha: Iterable[int] = (),
    beta: Iterable[int] | None = None,
    cache: CacheStore | None = None,
) -> int:
    """N^{d,delta}(alpha,beta): nodal degree-d curves with line tangencies.

    beta defaults to the absolute choice: all of the remaining weight
    d - weight(alpha) as order-1 intersections.
    """
    a = canonical(alpha)
    if beta is None:
        b = canonical([d - weight(a)]) if d - weight(a) >= 0 else (-1,)
    else:
        b = canonical(beta)
    state = ChState(d, delta, a, b)  # validates the invariants
    return _evaluate(state.key, cache if cache is not None else _DEFAULT_CACHE)


def severi_degree(d: int, delta: int, cache: CacheStore | None = None) -> int:
    """N^{d,delta}: delta-nodal degree-d curves through general points."""
    return relative_severi(d, delta, (), (d,), cache=cache)


def severi_table(
    dmax: int,
    deltamax: int,
    cache: CacheStore | None = None,
    jobs: int = 1,
) -> list[list[int]]:
    """All N^{d,delta} for d <= dmax, delta <= deltamax, as rows per degree."""
    if dmax < 1 or deltamax < 0:
        raise InvalidState("table needs dmax >= 1 and deltamax >= 0")
    store = cache if cache is not None else _DEFAULT_CACHE
    queries = [(d, delta) for d in range(1, dmax + 1) for delta in range(deltamax + 1)]
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(lambda q: severi_degree(*q, cache=store), queries))
    else:
        values = [severi_degree(d, delta, cache=store) for d, delta in queries]
    width = deltamax + 1
    return [values[i : i + width] for i in range(0, len(values), width)]


def cache_save(cache: CacheStore, path: str | os.PathLike[str]) -> None:
    """Write the store as sorted "d delta alpha beta N" lines under a header."""
    lines = [f"{CACHE_MAGIC} {cache.version}"]
    for (d, delta, alpha, beta), value in cache.items():
        at = seq_to_text(alpha) or "-"
        bt = seq_to_text(beta) or "-"
        lines.append(f"{d} {delta} {at} {bt} {value}")
    text = "\n".join(lines) + "\n"
    tmp = os.fspath(path) + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def cache_load(path: str | os.PathLike[str]) -> CacheStore:
    """Parse a cache file; the round trip through cache_save is bit-exact."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].strip():
        raise ParseError(f"cache file {path} is empty")
    header = lines[0].split()
    if len(header) != 2 or header[0] != CACHE_MAGIC:
        raise ParseError(f"cache file {path} has no {CACHE_MAGIC} header")
    if header[1] != CACHE_VERSION:
        raise VersionMismatch(
            f"cache file {path} is version {header[1]}, expected {CACHE_VERSION}"
        )
    store = CacheStore()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 5:
            raise ParseError(f"{path}:{lineno}: expected 5 fields, got {len(fields)}")
        try:
            d, delta = int(fields[0]), int(fields[1])
            alpha = seq_from_text(fields[2] if fields[2] != "-" else "")
            beta = seq_from_text(fields[3] if fields[3] != "-" else "")
            value = int(fields[4])
        except ValueError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from None
        if d < 1 or delta < 0 or weight(alpha) + weight(beta) != d:
            raise ParseError(f"{path}:{lineno}: inconsistent state")
        store.put((d, delta, alpha, beta), value)
    return store
