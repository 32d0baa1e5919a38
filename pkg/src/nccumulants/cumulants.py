"""Conversions among moments and the free, Boolean and monotone cumulants.

Every conversion is an exact partition sum.  The six cumulant-to-cumulant
directions run over irreducible non-crossing partitions with a coefficient
depending only on the block count, the nesting-tree factorial, and the
omega weight of the nesting tree; moments are partition sums over all
non-crossing partitions (interval partitions only, in the Boolean case),
and the moment-to-cumulant directions invert those sums by recursion on
word length, which is always solvable because the one-block term is the
only one touching the full word.

Per-length partition data (index blocks, tree factorial, omega) is computed
once and cached; the caches are thread-safe and all functions are pure.
"""

from fractions import Fraction
from functools import lru_cache

from . import partitions, prelie, trees
from .prelie import Functional

_ZERO = Fraction(0)
_ONE = Fraction(1)

KINDS = ("moment", "free", "boolean", "monotone")
CUMULANT_KINDS = ("free", "boolean", "monotone")


class CumulantFamily:
    """A functional tagged with the family it belongs to."""

    __slots__ = ("kind", "data")

    def __init__(self, kind, data):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("CumulantFamily is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, CumulantFamily)
            and self.kind == other.kind
            and self.data == other.data
        )

    def __repr__(self):
        return f"CumulantFamily({self.kind!r}, {self.data!r})"

    def to_json(self):
        return {"kind": self.kind, "functional": self.data.to_json()}

    @classmethod
    def from_json(cls, obj):
        try:
            kind = obj["kind"]
            functional = obj["functional"]
        except (TypeError, KeyError) as exc:
            raise ValueError(f"malformed envelope: {exc}") from None
        return cls(kind, Functional.from_json(functional))


@lru_cache(maxsize=None)
def _irr_terms(n):
    # per irreducible partition of [n]: 0-based index blocks, block count,
    # nesting-tree factorial, omega of the nesting tree
    terms = []
    for p in partitions.enumerate_nc_irr(n):
        tree = partitions.nesting_forest(p).trees[0]
        idx = tuple(tuple(i - 1 for i in b) for b in p.blocks)
        terms.append((idx, len(idx), trees.tree_factorial(tree), trees.omega(tree)))
    return tuple(terms)


@lru_cache(maxsize=None)
def _nc_terms(n):
    # per partition of [n]: 0-based index blocks, block count,
    # forest factorial of the nesting forest, interval flag.  The factorial
    # is the product of the nesting-subtree sizes, taken straight off the
    # parent array; children follow their parents in canonical block order,
    # so one reverse sweep accumulates the sizes.
    terms = []
    for p in partitions.enumerate_nc(n):
        blocks = p.blocks
        idx = tuple(tuple(i - 1 for i in b) for b in blocks)
        parents = partitions._parents(p)
        sizes = [1] * len(parents)
        for j in range(len(parents) - 1, -1, -1):
            if parents[j] is not None:
                sizes[parents[j]] += sizes[j]
        ffact = 1
        for s in sizes:
            ffact *= s
        interval = all(b[-1] - b[0] == len(b) - 1 for b in blocks)
        terms.append((idx, len(idx), ffact, interval))
    return tuple(terms)


def _block_product(table, w, idx_blocks, start):
    prod = start
    for b in idx_blocks:
        v = table[tuple(w[i] for i in b)]
        if not v:
            return None
        prod *= v
    return prod


def _irr_sum(src, coeff):
    # out(w) = sum over irreducible partitions of coeff(pi) * prod src(block)
    table = {}
    st = src._table
    for w in src.words():
        total = _ZERO
        for idx_blocks, nb, tfact, om in _irr_terms(len(w)):
            c = coeff(nb, tfact, om)
            if not c:
                continue
            prod = _block_product(st, w, idx_blocks, c)
            if prod is not None:
                total += prod
        table[w] = total
    return Functional._from_table(src.alphabet, src.max_order, table)


def boolean_from_free(kappa):
    """Boolean cumulants from free ones: the plain sum over irreducible
    non-crossing partitions of the block products."""
    return _irr_sum(kappa, lambda nb, tfact, om: _ONE)


def free_from_boolean(beta):
    """Free cumulants from Boolean ones: signed by (-1)^(blocks-1)."""
    return _irr_sum(beta, lambda nb, tfact, om: _ONE if nb % 2 else -_ONE)


def free_from_monotone(rho):
    """Free cumulants from monotone ones: signed and divided by the
    nesting-tree factorial."""
    return _irr_sum(
        rho, lambda nb, tfact, om: Fraction(1 if nb % 2 else -1, tfact)
    )


def boolean_from_monotone(rho):
    """Boolean cumulants from monotone ones: divided by the nesting-tree
    factorial, all signs positive."""
    return _irr_sum(rho, lambda nb, tfact, om: Fraction(1, tfact))


def monotone_from_free(kappa):
    """Monotone cumulants from free ones: weighted by the omega coefficient
    of the nesting tree, signed by (-1)^(blocks-1).

    Agrees word-by-word with ``prelie.magnus``.
    """
    return _irr_sum(kappa, lambda nb, tfact, om: om if nb % 2 else -om)


def monotone_from_boolean(beta):
    """Monotone cumulants from Boolean ones: weighted by the omega
    coefficient, all signs positive.

    This sign-free sum follows from the free-cumulant formula by flipping
    the sign of the input and the output; it equals the negated fixed-point
    expansion of the negated input, which the test suite checks directly.
    """
    return _irr_sum(beta, lambda nb, tfact, om: om)


def _require_cumulant_kind(kind):
    if kind not in CUMULANT_KINDS:
        raise ValueError(
            f"kind must be one of {CUMULANT_KINDS}, got {kind!r}"
        )


def moments_from(kind, c):
    """Moments from a cumulant family.

    Free: sum over all non-crossing partitions of the block products.
    Boolean: the same sum restricted to interval partitions.
    Monotone: the full sum weighted by 1 over the nesting-forest factorial.
    """
    _require_cumulant_kind(kind)
    table = {}
    st = c._table
    boolean = kind == "boolean"
    monotone = kind == "monotone"
    for w in c.words():
        total = _ZERO
        for idx_blocks, nb, ffact, is_int in _nc_terms(len(w)):
            if boolean and not is_int:
                continue
            start = Fraction(1, ffact) if monotone else _ONE
            prod = _block_product(st, w, idx_blocks, start)
            if prod is not None:
                total += prod
        table[w] = total
    return Functional._from_table(c.alphabet, c.max_order, table)


def cumulants_from_moments(kind, phi):
    """The unique cumulant family of the given kind whose moments are ``phi``.

    Solved by recursion on word length: the one-block term is the only one
    involving the full word, and every other term only touches strictly
    shorter subwords already determined.
    """
    _require_cumulant_kind(kind)
    boolean = kind == "boolean"
    monotone = kind == "monotone"
    out = {}
    for w in phi.words():
        acc = phi._table[w]
        for idx_blocks, nb, ffact, is_int in _nc_terms(len(w)):
            if nb == 1 or (boolean and not is_int):
                continue
            start = Fraction(1, ffact) if monotone else _ONE
            prod = _block_product(out, w, idx_blocks, start)
            if prod is not None:
                acc -= prod
        out[w] = acc
    return Functional._from_table(phi.alphabet, phi.max_order, out)


_DIRECT = {
    ("free", "boolean"): boolean_from_free,
    ("boolean", "free"): free_from_boolean,
    ("monotone", "free"): free_from_monotone,
    ("monotone", "boolean"): boolean_from_monotone,
    ("free", "monotone"): monotone_from_free,
    ("boolean", "monotone"): monotone_from_boolean,
}


def convert(family, to_kind):
    """Convert a tagged family to any of the four kinds.

    Identity when the kinds coincide; otherwise routed through the direct
    partition sums or the moment relations.
    """
    if to_kind not in KINDS:
        raise ValueError(f"unknown kind {to_kind!r}; expected one of {KINDS}")
    if family.kind == to_kind:
        return family
    if family.kind == "moment":
        data = cumulants_from_moments(to_kind, family.data)
    elif to_kind == "moment":
        data = moments_from(family.kind, family.data)
    else:
        data = _DIRECT[(family.kind, to_kind)](family.data)
    return CumulantFamily(to_kind, data)


def expansion_terms(from_kind, to_kind, n):
    """The order-n expansion of a conversion as (partition, coefficient) rows.

    Available for the six cumulant-to-cumulant directions and for the three
    cumulant-to-moment directions; the moment-to-cumulant inversions have no
    closed partition sum.
    """
    if from_kind == to_kind:
        raise ValueError("identity conversion has no expansion")
    if to_kind == "moment":
        _require_cumulant_kind(from_kind)
        rows = []
        for p in partitions.enumerate_nc(n):
            if from_kind == "boolean":
                coeff = _ONE if partitions.is_interval(p) else _ZERO
            elif from_kind == "monotone":
                ffact = trees.forest_factorial(partitions.nesting_forest(p))
                coeff = Fraction(1, ffact)
            else:
                coeff = _ONE
            rows.append((p, coeff))
        return rows
    if from_kind == "moment":
        raise ValueError(
            "moment-to-cumulant conversions are recursive inversions with no"
            " closed order-n expansion"
        )
    _require_cumulant_kind(from_kind)
    _require_cumulant_kind(to_kind)
    coeff_fn = {
        ("free", "boolean"): lambda nb, tfact, om: _ONE,
        ("boolean", "free"): lambda nb, tfact, om: _ONE if nb % 2 else -_ONE,
        ("monotone", "free"): lambda nb, tfact, om: Fraction(
            1 if nb % 2 else -1, tfact
        ),
        ("monotone", "boolean"): lambda nb, tfact, om: Fraction(1, tfact),
        ("free", "monotone"): lambda nb, tfact, om: om if nb % 2 else -om,
        ("boolean", "monotone"): lambda nb, tfact, om: om,
    }[(from_kind, to_kind)]
    rows = []
    for p in partitions.enumerate_nc_irr(n):
        tree = partitions.nesting_forest(p).trees[0]
        rows.append(
            (p, coeff_fn(p.num_blocks, trees.tree_factorial(tree), trees.omega(tree)))
        )
    return rows


def magnus_monotone_from_free(kappa):
    """Monotone cumulants via the fixed-point expansion; the dual route to
    ``monotone_from_free`` used for cross-validation."""
    return prelie.magnus(kappa)


def magnus_monotone_from_boolean(beta):
    """Monotone cumulants as the negated fixed-point expansion of the negated
    Boolean cumulants; the dual route to ``monotone_from_boolean``."""
    return prelie.magnus(beta.negate()).negate()


def magnus_free_from_monotone(rho):
    """Free cumulants as the inverse expansion of the monotone ones; the dual
    route to ``free_from_monotone``."""
    return prelie.magnus_inverse(rho)


def magnus_boolean_from_monotone(rho):
    """Boolean cumulants as the negated inverse expansion of the negated
    monotone ones; the dual route to ``boolean_from_monotone``."""
    return prelie.magnus_inverse(rho.negate()).negate()
