"""Connected bounded-degree graph families.

Every generated edge is oriented from the smaller to the larger vertex id.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .quotient import derive_seed

FAMILIES = ("cycle", "path", "torus_grid", "random_regular")
GEN_STREAM = 1
MAX_RETRIES = 1000


class GenerationError(ValueError):
    pass


def _oriented(pairs):
    return tuple((a, b) if a < b else (b, a) for a, b in pairs)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GenerationError("a cycle needs at least 3 vertices")
    return Graph(n, _oriented([(i, (i + 1) % n) for i in range(n)]), 2)


def directed_cycle(n: int) -> Graph:
    """Cycle oriented ``i -> i+1 (mod n)``; vertex-transitive as a directed graph."""
    if n < 3:
        raise GenerationError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), 2)


def path(n: int) -> Graph:
    if n < 2:
        raise GenerationError("a path needs at least 2 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), 2)


def torus_grid(side: int) -> Graph:
    """``side x side`` grid with wrap-around; 4-regular for ``side >= 3``."""
    if side < 3:
        raise GenerationError("torus grid needs side >= 3 to stay simple")
    pairs = []
    for i in range(side):
        for j in range(side):
            v = i * side + j
            pairs.append((v, i * side + (j + 1) % side))
            pairs.append((v, ((i + 1) % side) * side + j))
    return Graph(side * side, _oriented(pairs), 4)


def random_regular(n: int, d: int, seed: int, max_retries: int = MAX_RETRIES) -> Graph:
    """Uniform pairing of ``n*d`` stubs, rejected until simple and connected."""
    if d < 1 or d >= n:
        raise GenerationError("random_regular needs 1 <= degree < size")
    if (n * d) % 2:
        raise GenerationError("size * degree must be even")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_retries):
        perm = rng.permutation(stubs)
        pairs = list(zip(perm[0::2].tolist(), perm[1::2].tolist()))
        if any(a == b for a, b in pairs):
            continue
        keys = {(min(a, b), max(a, b)) for a, b in pairs}
        if len(keys) != len(pairs):
            continue
        g = Graph(n, _oriented(pairs), d)
        if g.is_connected():
            return g
    raise GenerationError(f"no simple connected {d}-regular graph on {n} vertices after {max_retries} tries")


def generate(family: str, size: int, degree: int | None = None, seed: int = 0) -> Graph:
    """Instance of ``family`` at ``size``; only ``random_regular`` uses ``degree`` and ``seed``."""
    if family == "cycle":
        return cycle(size)
    if family == "path":
        return path(size)
    if family == "torus_grid":
        return torus_grid(size)
    if family == "random_regular":
        if degree is None:
            raise GenerationError("random_regular needs a degree")
        return random_regular(size, degree, derive_seed(seed, GEN_STREAM, size))
    raise GenerationError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
