"""Canonical non-planar rooted trees and forests.

Rooted trees encode the nesting hierarchy of non-crossing partitions: one
vertex per block, children being the directly nested blocks.  This module
provides the bracket-text codec, tree and forest factorials, leaf removals,
linear-extension counts, the rank-k strict labeling counts ``omega_k``, and
the rational coefficient ``omega`` obtained from them by an alternating sum.
``omega`` is the weight attached to each irreducible partition in the closed
monotone-from-free cumulant conversion; ``omega_recursive`` recomputes it
through a Bernoulli-number recursion over block subsets and serves as an
independent cross-check.

All coefficients are exact ``fractions.Fraction`` values; no floating point
is used anywhere.  Trees and forests are immutable, every function is pure,
and the memo caches are the thread-safe ``functools.lru_cache``.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial


class TreeParseError(ValueError):
    """Raised for malformed bracket encodings."""


class RootedTree:
    """A non-planar rooted tree in canonical form.

    Children are stored sorted by their bracket encoding, so trees differing
    only in the order of children compare equal:

    >>> parse_tree("[[][[]]]") == parse_tree("[[[]][]]")
    True
    """

    __slots__ = ("children", "encoding", "size")

    def __init__(self, children=()):
        kids = tuple(sorted(children, key=lambda t: (t.size, t.encoding)))
        object.__setattr__(self, "children", kids)
        object.__setattr__(self, "encoding", "[" + "".join(t.encoding for t in kids) + "]")
        object.__setattr__(self, "size", 1 + sum(t.size for t in kids))

    def __setattr__(self, name, value):
        raise AttributeError("RootedTree is immutable")

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.encoding == other.encoding

    def __hash__(self):
        return hash(self.encoding)

    def __repr__(self):
        return f"RootedTree({self.encoding!r})"


class Forest:
    """A multiset of rooted trees, kept sorted by encoding.

    The encoding of a forest is the concatenation of its trees' encodings;
    the empty forest encodes as the empty string.
    """

    __slots__ = ("trees", "encoding", "size")

    def __init__(self, trees=()):
        ts = tuple(sorted(trees, key=lambda t: (t.size, t.encoding)))
        object.__setattr__(self, "trees", ts)
        object.__setattr__(self, "encoding", "".join(t.encoding for t in ts))
        object.__setattr__(self, "size", sum(t.size for t in ts))

    def __setattr__(self, name, value):
        raise AttributeError("Forest is immutable")

    def __eq__(self, other):
        return isinstance(other, Forest) and self.encoding == other.encoding

    def __hash__(self):
        return hash(("forest", self.encoding))

    def __repr__(self):
        return f"Forest({self.encoding!r})"


def parse_tree(s):
    """Parse bracket notation such as "[[][]]" into a canonical RootedTree."""
    trees = parse_forest(s).trees
    if len(trees) != 1:
        raise TreeParseError(f"expected a single tree, got {len(trees)} in {s!r}")
    return trees[0]


def parse_forest(s):
    """Parse concatenated bracket notation (e.g. "[[]][]") into a Forest."""
    text = "".join(s.split())
    if not text:
        raise TreeParseError("empty tree encoding")
    items, pos = _parse_items(text, 0)
    if pos != len(text):
        raise TreeParseError(f"unbalanced brackets in {s!r}")
    return Forest(items)


def _parse_items(s, i):
    items = []
    while i < len(s) and s[i] == "[":
        kids, i = _parse_items(s, i + 1)
        if i >= len(s) or s[i] != "]":
            raise TreeParseError(f"unbalanced brackets in {s!r}")
        items.append(RootedTree(kids))
        i += 1
    return items, i


def encode_tree(t):
    """Canonical bracket encoding of a tree; inverse of parse_tree."""
    return t.encoding


@lru_cache(maxsize=None)
def tree_factorial(t):
    """Recursive tree factorial: the vertex count times the children's factorials.

    >>> tree_factorial(parse_tree("[[][]]"))
    3
    """
    result = t.size
    for child in t.children:
        result *= tree_factorial(child)
    return result


def forest_factorial(f):
    """Product of the tree factorials over a forest; 1 for the empty forest."""
    result = 1
    for t in f.trees:
        result *= tree_factorial(t)
    return result


def leaf_removals(t):
    """Multiset of trees obtained by deleting one leaf of ``t`` (with its edge).

    One entry per leaf, so the result's length equals the leaf count.
    Removing the only vertex of a one-vertex tree is undefined.
    """
    if t.size < 2:
        raise ValueError("leaf_removals needs a tree with at least 2 vertices")
    return _leaf_removals(t)


def _leaf_removals(t):
    out = []
    kids = t.children
    for i, child in enumerate(kids):
        rest = kids[:i] + kids[i + 1 :]
        if child.size == 1:
            out.append(RootedTree(rest))
        else:
            for smaller in _leaf_removals(child):
                out.append(RootedTree(rest + (smaller,)))
    return out


def monotone_count(t):
    """Number of vertex orderings that increase from the root toward the leaves.

    Equals |t|! divided by the tree factorial, always exactly.
    """
    return factorial(t.size) // tree_factorial(t)


@lru_cache(maxsize=None)
def _overlay_count(k1, k2, k):
    # ways to choose A, B subsets of [k] with |A|=k1, |B|=k2, A union B = [k]
    return factorial(k) // (
        factorial(k - k1) * factorial(k - k2) * factorial(k1 + k2 - k)
    )


def _merge_counts(a, b):
    # a[k], b[k]: strict surjective labeling counts of two independent vertex
    # sets; returns the counts for their disjoint union.
    out = [0] * (len(a) + len(b) - 1)
    for k1, c1 in enumerate(a):
        if not c1:
            continue
        for k2, c2 in enumerate(b):
            if not c2:
                continue
            for k in range(max(k1, k2), k1 + k2 + 1):
                out[k] += c1 * c2 * _overlay_count(k1, k2, k)
    return tuple(out)


@lru_cache(maxsize=None)
def _strict_counts(t):
    # counts[k] = surjections of the vertices of t onto {1..k} that strictly
    # increase along every root-to-leaf edge.  Children merge by convolving
    # their counts with the overlay multinomial; the root then takes a fresh
    # minimal class below everything, shifting ranks up by one.
    merged = (1,)
    for child in t.children:
        merged = _merge_counts(merged, _strict_counts(child))
    return (0,) + merged


def omega_k(t, k):
    """Number of rank-k labelings of ``t``: surjections onto {1..k} strictly
    increasing away from the root.  0 when no such labeling exists.
    """
    counts = _strict_counts(t)
    if 0 <= k < len(counts):
        return counts[k]
    return 0


@lru_cache(maxsize=None)
def omega(t):
    """Alternating sum of the rank-k labeling counts: sum of (-1)^(k+1)/k * omega_k.

    >>> omega(parse_tree("[[][]]"))
    Fraction(1, 6)
    """
    counts = _strict_counts(t)
    total = Fraction(0)
    for k in range(1, len(counts)):
        if counts[k]:
            total += Fraction((-1) ** (k + 1) * counts[k], k)
    return total


def omega_forest(f):
    """Product of omega over the trees of a forest; 1 for the empty forest."""
    total = Fraction(1)
    for t in f.trees:
        total *= omega(t)
    return total


@lru_cache(maxsize=None)
def bernoulli(n):
    """The n-th Bernoulli number, with bernoulli(1) == -1/2.

    Computed by the recurrence sum(C(n+1, k) * B_k for k <= n) == 0.
    """
    if n < 0:
        raise ValueError("bernoulli is defined for n >= 0")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(n):
        acc += _binom(n + 1, k) * bernoulli(k)
    return -acc / (n + 1)


def _binom(n, k):
    return factorial(n) // (factorial(k) * factorial(n - k))


_OMEGA_REC_CACHE = {}


def omega_recursive(p):
    """Recompute omega for an irreducible partition from its block structure.

    Drops the outer block and sums, over every subset V of the remaining
    blocks that contains all of their outermost ones, the Bernoulli number
    B_|V| divided by the forest factorial of the partition V spans, times
    the product of the values on the V-rooted components.  Grounds out at 1
    on a single block.  Must agree with ``omega`` of the nesting tree.
    """
    from . import partitions as _partitions

    if not p.is_irreducible():
        raise ValueError("omega_recursive requires an irreducible partition")
    return _omega_rec(p, _partitions)


def _omega_rec(p, _partitions):
    key = _standard_key(p)
    hit = _OMEGA_REC_CACHE.get(key)
    if hit is not None:
        return hit
    inner = _partitions.NCPartition(p.blocks[1:])
    total = Fraction(0)
    for subset in _partitions.sub_families(inner):
        nu, comps = _partitions.v_components(subset)
        term = bernoulli(len(subset.selected)) / forest_factorial(
            _partitions.nesting_forest(nu)
        )
        for comp in comps:
            term *= _omega_rec(comp, _partitions)
        total += term
    _OMEGA_REC_CACHE[key] = total
    return total


def _standard_key(p):
    rank = {x: i for i, x in enumerate(p.ground)}
    return tuple(tuple(rank[x] for x in b) for b in p.blocks)


@lru_cache(maxsize=None)
def trees_of_size(n):
    """All canonical rooted trees with exactly ``n`` vertices, sorted by encoding."""
    if n < 1:
        raise ValueError("tree size must be a positive integer")
    if n == 1:
        return (RootedTree(),)
    out = [RootedTree(kids) for kids in _child_multisets(n - 1, "")]
    return tuple(sorted(out, key=lambda t: t.encoding))


def _child_multisets(total, min_encoding):
    # multisets of trees with sizes summing to `total`, listed as sequences
    # with non-decreasing encodings so each multiset appears exactly once
    if total == 0:
        return [()]
    out = []
    for size in range(1, total + 1):
        for t in trees_of_size(size):
            if t.encoding < min_encoding:
                continue
            for rest in _child_multisets(total - size, t.encoding):
                out.append((t,) + rest)
    return out


def trees_up_to(n):
    """All canonical rooted trees with at most ``n`` vertices, smallest first."""
    out = []
    for size in range(1, n + 1):
        out.extend(trees_of_size(size))
    return out
