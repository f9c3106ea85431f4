"""Integer-backed vertex sets.

A VertexSet is a plain ``int`` whose bit ``i`` is set iff vertex ``i`` is a
member. Union, intersection and difference are ``|``, ``&`` and ``& ~``.
"""
from typing import Iterable, Iterator, List, Set, Tuple

VertexSet = int

EMPTY: VertexSet = 0


def singleton(v: int) -> VertexSet:
    return 1 << v


def from_iterable(vertices: Iterable[int]) -> VertexSet:
    """Create a bitset from vertex identifiers."""
    result = 0
    for v in vertices:
        result |= 1 << v
    return result


def all_vertices(n: int) -> VertexSet:
    """Mask with vertices 0..n-1 set."""
    return (1 << n) - 1


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield members in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: VertexSet) -> List[int]:
    return list(iter_bits(mask))


def lowest(mask: VertexSet) -> int:
    """Smallest member; -1 for the empty set."""
    return (mask & -mask).bit_length() - 1


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def canonical_key(mask: VertexSet) -> Tuple[int, ...]:
    """Sort key for families: ascending element tuples compared lexicographically."""
    return tuple(iter_bits(mask))


def canonical_family(family: Iterable[VertexSet]) -> List[VertexSet]:
    """Deduplicate and sort a family of sets into canonical order."""
    return sorted(set(family), key=canonical_key)


def lex_earlier(a: VertexSet, b: VertexSet) -> bool:
    """Compare characteristic vectors: at the smallest differing vertex, the
    set without that vertex is earlier."""
    diff = a ^ b
    if not diff:
        return False
    return not (a & diff & -diff)


def subsets_up_to(mask: VertexSet, k: int) -> Iterator[VertexSet]:
    """All subsets of ``mask`` with at most ``k`` elements, smallest first."""
    members = to_list(mask)

    def extend(start: int, current: VertexSet, remaining: int) -> Iterator[VertexSet]:
        yield current
        if remaining == 0:
            return
        for idx in range(start, len(members)):
            yield from extend(idx + 1, current | (1 << members[idx]), remaining - 1)

    yield from extend(0, 0, k)


def format_set(mask: VertexSet) -> str:
    """Sorted space-separated ids, the line format of the CLI listings."""
    return " ".join(str(v) for v in iter_bits(mask))


def unions_up_to(generators: Iterable[VertexSet], k: int) -> Set[VertexSet]:
    """Distinct unions of at most ``k`` generators (the empty union included).

    Equivalent to iterating over all k-tuples, but bounded by the number of
    distinct results.
    """
    gens = set(generators)
    level = {0}
    reached = {0}
    for _ in range(k):
        level = {u | s for u in level for s in gens} - reached
        if not level:
            break
        reached |= level
    return reached
