"""Named small lattices and exhaustive generation up to isomorphism.

The generator walks every partial order on the interior elements that is
compatible with the natural order of the indices (bottom 0, top n-1, interior
ascending); every finite lattice has such a labeling, so filtering for the
lattice property and rejecting isomorphic duplicates yields each class
exactly once.  Duplicates are detected with a canonical form: the minimum
cover-set encoding over all relabelings that respect an iterated
neighborhood-color invariant.

The hard size cap is 8 elements; beyond that the search space grows too fast
for the exhaustive approach taken here.
"""

import itertools
from functools import lru_cache

from .errors import LatticeTooLarge, NotALattice
from .lattice import FiniteLattice

MAX_CORPUS_N = 8


def chain(k):
    """The k-element chain 0 < 1 < ... < k-1."""
    return FiniteLattice(k, {(i, i + 1) for i in range(k - 1)})


def boolean(k):
    """The Boolean lattice of subsets of a k-set; element = bitmask."""
    covers = {(m, m | (1 << b))
              for m in range(1 << k) for b in range(k) if not m >> b & 1}
    return FiniteLattice(1 << k, covers)


def b2():
    """The two-element lattice."""
    return chain(2)


def diamond():
    """M3: three atoms between bottom and top; simple, modular."""
    return FiniteLattice(5, {(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)})


def pentagon():
    """N5: the five-element nonmodular lattice 0 < a < c < 1, 0 < b < 1."""
    return FiniteLattice(5, {(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)})


def _color_classes(lat):
    """Iterated refinement of an isomorphism-invariant element coloring."""
    up_covers = {x: lat.upper_covers(x) for x in lat.elements}
    down_covers = {x: lat.lower_covers(x) for x in lat.elements}
    colors = [
        (bin(lat.lower_set(x)).count("1"), bin(lat.upper_set(x)).count("1"),
         len(down_covers[x]), len(up_covers[x]))
        for x in lat.elements
    ]
    while True:
        refined = [
            (colors[x], tuple(sorted(colors[y] for y in up_covers[x])),
             tuple(sorted(colors[y] for y in down_covers[x])))
            for x in lat.elements
        ]
        ranking = {c: i for i, c in enumerate(sorted(set(refined)))}
        new_colors = [ranking[refined[x]] for x in lat.elements]
        if len(set(new_colors)) == len(set(colors)):
            colors = new_colors
            break
        colors = new_colors
    classes = {}
    for x, c in enumerate(colors):
        classes.setdefault(c, []).append(x)
    return [classes[c] for c in sorted(classes)]


def canonical_key(lat):
    """A relabeling-invariant encoding: equal keys iff isomorphic lattices.

    Each color class is sent to a fixed contiguous index range (classes in
    color order), so the candidate relabelings of isomorphic lattices target
    identical index layouts; the minimum cover encoding is then canonical.
    """
    classes = _color_classes(lat)
    starts = []
    offset = 0
    for cls in classes:
        starts.append(offset)
        offset += len(cls)
    best = None
    for perm_parts in itertools.product(
            *(itertools.permutations(range(len(cls))) for cls in classes)):
        relabel = [0] * lat.n
        for cls, start, part in zip(classes, starts, perm_parts):
            for source, position in zip(cls, part):
                relabel[source] = start + position
        encoding = tuple(sorted((relabel[x], relabel[y]) for x, y in lat.covers))
        if best is None or encoding < best:
            best = encoding
    return lat.n, best


def canonical_form(lat):
    """The isomorphic copy of ``lat`` with the canonical labeling."""
    n, covers = canonical_key(lat)
    return FiniteLattice(n, covers)


def isomorphic(a, b):
    return canonical_key(a) == canonical_key(b)


def _natural_order_lattices(n):
    """All lattices on 0..n-1 whose order extends the order of the indices,
    with bottom 0 and top n-1.  Yields every isomorphism class at least once.
    """
    if n == 1:
        yield FiniteLattice(1)
        return
    interior = range(1, n - 1)
    slots = [(i, j) for i in interior for j in interior if i < j]
    for mask in range(1 << len(slots)):
        rel = [[False] * n for _ in range(n)]
        for bit, (i, j) in enumerate(slots):
            if mask >> bit & 1:
                rel[i][j] = True
        if any(rel[i][j] and rel[j][k] and not rel[i][k]
               for (i, j) in slots for k in interior if rel[j][k]):
            continue
        for x in range(1, n):
            rel[0][x] = True
        for x in range(n - 1):
            rel[x][n - 1] = True
        covers = {
            (x, y)
            for x in range(n) for y in range(n)
            if rel[x][y] and not any(rel[x][z] and rel[z][y] for z in range(n))
        }
        try:
            yield FiniteLattice(n, covers)
        except NotALattice:
            continue


@lru_cache(maxsize=None)
def all_lattices(n, modular_only=False):
    """All lattices with exactly n elements, one per isomorphism class,
    sorted by their canonical cover encoding."""
    if n > MAX_CORPUS_N:
        raise LatticeTooLarge(f"corpus generation is capped at n = {MAX_CORPUS_N}")
    seen = {}
    for candidate in _natural_order_lattices(n):
        if modular_only and not candidate.is_modular():
            continue
        key = canonical_key(candidate)
        if key not in seen:
            seen[key] = FiniteLattice(*key)
    return tuple(seen[key] for key in sorted(seen))


def all_lattices_up_to(max_n, modular_only=False):
    """All lattices with at most max_n elements, up to isomorphism."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(all_lattices(n, modular_only))
    return out


def generate_corpus(max_n, modular_only=False, dedupe_iso=True):
    """The lattice stream the corpus command emits, in deterministic order."""
    if max_n > MAX_CORPUS_N:
        raise LatticeTooLarge(f"corpus generation is capped at n = {MAX_CORPUS_N}")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if dedupe_iso:
        return all_lattices_up_to(max_n, modular_only)
    out = []
    for n in range(1, max_n + 1):
        for candidate in _natural_order_lattices(n):
            if modular_only and not candidate.is_modular():
                continue
            out.append(candidate)
    out.sort(key=lambda lat: (lat.n, lat.cover_pairs()))
    return out
