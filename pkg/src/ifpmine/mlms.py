"""Frequent itemset mining with one minimum support per itemset length.

A k-itemset is frequent when its support reaches the k-th threshold. The
thresholds need not be monotone, so the classic downward-closure pruning is
unavailable: a 3-itemset can be frequent while its 2-subsets are not.

The miner recurses like the MII miner, splitting the tree on its least
support item x. Itemsets mined from the projected tree carry x as an implied
prefix, so a k-itemset found under a prefix of length p is tested against the
threshold for length k+p ("frequent*"). Itemsets whose extended length
exceeds the last configured threshold are never frequent*. Items whose own
support is below the smallest threshold cannot occur in any frequent itemset
and their projection is skipped entirely.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .data import (
    InvalidThresholdError,
    Itemset,
    SupportThreshold,
    TransactionDatabase,
    canonical_itemset,
    itemset_sort_key,
    itemsets_json,
    render_itemset_lines,
    support,
)
from .miners import unify
from .tree import IFPTree, build_tree, lf_item, projected_tree, residual_tree


@dataclass(frozen=True)
class ThresholdVector:
    """Resolved absolute minimum supports, indexed by itemset length 1..L."""

    sigmas: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sigmas:
            raise InvalidThresholdError("threshold vector must not be empty")
        for k, s in enumerate(self.sigmas, start=1):
            if s < 1:
                raise InvalidThresholdError(f"sigma_{k} must be >= 1, got {s}")

    @classmethod
    def from_text(cls, text: str, num_transactions: int) -> "ThresholdVector":
        """Parse a comma-separated list of absolute counts or percentages,
        e.g. ``"4,4,3,2,1"`` or ``"10%,8%,5%"``. The list length defines L."""
        parts = [p for p in text.split(",") if p.strip()]
        resolved = tuple(
            SupportThreshold.parse(p).resolve(num_transactions) for p in parts
        )
        return cls(resolved)

    @property
    def max_length(self) -> int:
        return len(self.sigmas)

    @property
    def sigma_low(self) -> int:
        """The smallest threshold: items below it can never appear in any
        frequent itemset of any length."""
        return min(self.sigmas)

    def sigma(self, length: int) -> int:
        return self.sigmas[length - 1]


@dataclass(frozen=True)
class PrefixContext:
    """Items already projected on to reach the current tree. The prefix
    length is what shifts the threshold index during recursion."""

    prefix: Itemset = ()

    @property
    def length(self) -> int:
        return len(self.prefix)

    def project(self, x: int) -> "PrefixContext":
        return PrefixContext(canonical_itemset((x, *self.prefix)))


def is_frequent_star(k: int, p: int, supp: int, tv: ThresholdVector) -> bool:
    """Whether a k-itemset with the given support, found under a prefix of
    length p, is frequent for its extended length k+p. Lengths beyond the
    vector have no threshold and are never frequent."""
    if k < 1 or p < 0:
        raise ValueError(f"need k >= 1 and p >= 0, got k={k}, p={p}")
    total = k + p
    return total <= tv.max_length and supp >= tv.sigma(total)


def ifp_mlms(
    tree: IFPTree,
    tv: ThresholdVector,
    ctx: PrefixContext = PrefixContext(),
    *,
    sigma_low_prune: bool = True,
) -> set[Itemset]:
    """Frequent* itemsets of the tree at the context's prefix length.

    ``sigma_low_prune=False`` disables the skip of projections for items
    below the smallest threshold; it never changes the result, only the work.
    """
    if tree.is_empty():
        return set()
    x = lf_item(tree)
    p = ctx.length
    x_supp = tree.item_support(x)

    if sigma_low_prune and x_supp < tv.sigma_low:
        s_p: set[Itemset] = set()
    else:
        s_p = ifp_mlms(
            projected_tree(tree, x), tv, ctx.project(x), sigma_low_prune=sigma_low_prune
        )
    s_r = ifp_mlms(residual_tree(tree, x), tv, ctx, sigma_low_prune=sigma_low_prune)

    out = unify(x, s_p) | s_r
    if is_frequent_star(1, p, x_supp, tv):
        out.add((x,))
    return out


@dataclass(frozen=True)
class MLMSResult:
    frequent: tuple[Itemset, ...]
    supports: dict[Itemset, int] = field(compare=False)
    thresholds: ThresholdVector | None = field(default=None, compare=False)
    elapsed: float = field(default=0.0, compare=False)

    def entries(self) -> list[tuple[Itemset, int]]:
        return [(s, self.supports[s]) for s in self.frequent]

    def to_text(self, labels: dict[int, str] | None = None) -> str:
        return render_itemset_lines(self.entries(), labels)

    def to_json(self) -> str:
        return itemsets_json(self.entries())


def mine_mlms(
    db: TransactionDatabase,
    tv: ThresholdVector,
    *,
    sigma_low_prune: bool = True,
) -> MLMSResult:
    """Build the tree, mine at the root context (empty prefix), and attach
    supports with one final counting pass over the original database."""
    start = time.perf_counter()
    found = ifp_mlms(build_tree(db), tv, sigma_low_prune=sigma_low_prune)
    ordered = tuple(sorted(found, key=itemset_sort_key))
    supports = {s: support(db, s) for s in ordered}
    return MLMSResult(
        frequent=ordered,
        supports=supports,
        thresholds=tv,
        elapsed=time.perf_counter() - start,
    )
