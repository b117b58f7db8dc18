"""
Symmetric group layer: permutations in one-line notation, length, reduced
words, the left weak and strong Bruhat orders, weak-order joins, and longest
elements of parabolic subgroups.

A permutation of {1, ..., n} is represented by the tuple
(w(1), ..., w(n)).  All functions are pure and all values immutable, so
everything here is safe to share across threads.

Simple reflections act on the left by swapping the *values* i and i+1:
``left_multiply(i, w)`` is the one-line word of s_i * w.

Orders used throughout:

- left weak order: covers w < s_i * w whenever the length goes up; tested
  via containment of inversion sets of the inverses.
- strong Bruhat order: tested via the sorted-prefix (Ehresmann) criterion.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable

Permutation = tuple[int, ...]

# Everything here is exact and intended for desk-scale exploration; S_12 has
# ~479M elements and anything bigger than that is a mistake, not a use case.
MAX_N = 12


def check_permutation(w: Permutation) -> Permutation:
    """Validate one-line notation; return the tuple unchanged."""
    w = tuple(w)
    n = len(w)
    if n == 0 or n > MAX_N:
        raise ValueError(f"permutation size must be between 1 and {MAX_N}, got {n}")
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w}")
    return w


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def simple_reflection(i: int, n: int) -> Permutation:
    """The transposition s_i = (i, i+1) as a one-line word."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"reflection index {i} out of range for n={n}")
    return left_multiply(i, identity(n))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for pos, val in enumerate(w):
        inv[val - 1] = pos + 1
    return tuple(inv)


def length(w: Permutation) -> int:
    """Coxeter length = number of inversion pairs (i < j with w(i) > w(j)).

    >>> length((1, 2, 3, 4)), length((2, 4, 1, 3)), length((4, 3, 2, 1))
    (0, 3, 6)
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def left_multiply(i: int, w: Permutation) -> Permutation:
    """One-line word of s_i * w: swap the values i and i+1 wherever they occur.

    >>> left_multiply(1, (1, 2, 3, 4))
    (2, 1, 3, 4)
    >>> left_multiply(2, (2, 1, 3, 4))
    (3, 1, 2, 4)
    """
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def inversion_pairs(w: Permutation) -> frozenset[tuple[int, int]]:
    """Value pairs (a, b) with a < b appearing out of order in the word."""
    pos = {val: p for p, val in enumerate(w)}
    n = len(w)
    return frozenset(
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if pos[a] > pos[b]
    )


def _same_n(u: Permutation, w: Permutation) -> None:
    if len(u) != len(w):
        raise ValueError(f"mismatched sizes: {len(u)} vs {len(w)}")


def left_weak_leq(u: Permutation, w: Permutation) -> bool:
    """u <= w in left weak order, via Inv(u^-1) <= Inv(w^-1).

    >>> left_weak_leq((2, 1, 3, 4), (3, 2, 1, 4))
    True
    >>> left_weak_leq((2, 1, 3, 4), (1, 3, 2, 4))
    False
    """
    _same_n(u, w)
    return inversion_pairs(inverse(u)) <= inversion_pairs(inverse(w))


def strong_bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """u <= w in strong Bruhat order, via the sorted-prefix criterion.

    >>> strong_bruhat_leq((2, 1, 4, 3), (3, 4, 1, 2))
    True
    >>> strong_bruhat_leq((3, 4, 1, 2), (2, 1, 4, 3))
    False
    """
    _same_n(u, w)
    n = len(u)
    for k in range(1, n):
        for a, b in zip(sorted(u[:k]), sorted(w[:k])):
            if a > b:
                return False
    return True


def _transitive_closure(pairs: set[tuple[int, int]], n: int) -> frozenset[tuple[int, int]]:
    """Close a set of value pairs under (a,b),(b,c) => (a,c); a < b < c."""
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        new = {
            (a, c)
            for (a, b) in closed
            for c in range(b + 1, n + 1)
            if (b, c) in closed and (a, c) not in closed
        }
        if new:
            closed |= new
            changed = True
    return frozenset(closed)


def _permutation_from_inversions(pairs: frozenset[tuple[int, int]], n: int) -> Permutation:
    """The word whose out-of-order value pairs are exactly ``pairs``.

    Requires ``pairs`` and its complement to be transitively closed; sorting
    by the induced precedence is then a total order.
    """

    def precedes(a: int, b: int) -> int:
        if a == b:
            return 0
        lo, hi = (a, b) if a < b else (b, a)
        first = hi if (lo, hi) in pairs else lo
        return -1 if a == first else 1

    word = tuple(sorted(range(1, n + 1), key=cmp_to_key(precedes)))
    if inversion_pairs(word) != pairs:
        raise ValueError("pair set is not the inversion set of any permutation")
    return word


def left_weak_join(ws: Iterable[Permutation]) -> Permutation:
    """Least upper bound in left weak order of a nonempty set.

    Computed by transitively closing the union of the inversion sets of the
    inverses; the closure grows monotonically inside a finite universe, so
    the iteration terminates, and the result is again a valid inversion set.

    >>> left_weak_join([(2, 1, 3), (1, 3, 2)])
    (3, 2, 1)
    >>> left_weak_join([(2, 1, 3, 4), (1, 2, 4, 3)])
    (2, 1, 4, 3)
    """
    ws = [tuple(w) for w in ws]
    if not ws:
        raise ValueError("join of an empty set")
    n = len(ws[0])
    for w in ws:
        _same_n(ws[0], w)
    union: set[tuple[int, int]] = set()
    for w in ws:
        union |= inversion_pairs(inverse(w))
    closed = _transitive_closure(union, n)
    return inverse(_permutation_from_inversions(closed, n))


def longest_parabolic(indices: Iterable[int], n: int) -> Permutation:
    """Longest element of the parabolic subgroup generated by {s_j : j in indices}.

    In one-line notation this reverses each maximal block of consecutive
    values determined by the index set and fixes everything else.

    >>> longest_parabolic({1, 3}, 4)
    (2, 1, 4, 3)
    >>> longest_parabolic({1, 2}, 3)
    (3, 2, 1)
    """
    idx = sorted(set(indices))
    if idx and not (1 <= idx[0] and idx[-1] <= n - 1):
        raise ValueError(f"parabolic indices {idx} out of range for n={n}")
    word = list(range(1, n + 1))
    start = 0
    while start < len(idx):
        stop = start
        while stop + 1 < len(idx) and idx[stop + 1] == idx[stop] + 1:
            stop += 1
        lo, hi = idx[start], idx[stop] + 1  # block of values lo..hi
        word[lo - 1 : hi] = reversed(word[lo - 1 : hi])
        start = stop + 1
    return tuple(word)


def right_descents(w: Permutation) -> frozenset[int]:
    """Indices i with w(i) > w(i+1); the atoms below w in left weak order."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def left_descents(w: Permutation) -> frozenset[int]:
    """Indices i with the value i appearing after i+1 in the word."""
    return right_descents(inverse(w))


def classify_longest_parabolic(w: Permutation) -> frozenset[int] | None:
    """Return J if w is the longest element of the parabolic on J, else None.

    The candidate J is forced: it must consist of the atoms below w, i.e.
    the right-descent set.

    >>> sorted(classify_longest_parabolic((2, 1, 4, 3)))
    [1, 3]
    >>> classify_longest_parabolic((2, 4, 1, 3)) is None
    True
    """
    j = right_descents(w)
    return j if longest_parabolic(j, len(w)) == w else None


def reduced_words(w: Permutation) -> set[tuple[int, ...]]:
    """All reduced words (i_1, ..., i_l) with s_{i_1} ... s_{i_l} = w.

    Enumerated recursively through left descents: each reduced word starts
    with a left descent i and continues with a reduced word of s_i * w.

    >>> sorted(reduced_words((3, 2, 1)))
    [(1, 2, 1), (2, 1, 2)]
    >>> len(reduced_words((4, 3, 2, 1)))
    16
    """
    if length(w) == 0:
        return {()}
    words = set()
    for i in sorted(left_descents(w)):
        for rest in reduced_words(left_multiply(i, w)):
            words.add((i,) + rest)
    return words


def permutation_to_string(w: Permutation) -> str:
    """Serialize: digit string for n <= 9, comma-separated otherwise.

    >>> permutation_to_string((2, 4, 1, 3))
    '2413'
    """
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def permutation_from_string(text: str) -> Permutation:
    """Inverse of :func:`permutation_to_string`.

    >>> permutation_from_string("2413")
    (2, 4, 1, 3)
    >>> permutation_from_string("10,2,1,3,4,5,6,7,8,9")[0]
    10
    """
    text = text.strip()
    if "," in text:
        word = tuple(int(part) for part in text.split(","))
    else:
        word = tuple(int(ch) for ch in text)
    return check_permutation(word)
