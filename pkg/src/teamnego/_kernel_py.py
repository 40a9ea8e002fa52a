"""Pure-Python kernels: negotiation backward induction and vote-multiset search.

Outcomes are integer indices ``0..m-1`` assigned in ascending name order, so
sorting by ``(-score, index)`` reproduces the lexicographic tie-break of the
social welfare function.  Position arrays map an outcome index to its position
in a party's order (``m - 1`` = most preferred).

The compiled module in ``_kernel_cy`` implements the same functions with the
same semantics; ``teamnego.kernel`` picks one at import time.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence

BACKEND = "pure-python"


def spe_pair(pos_t: Sequence[int], pos_o: Sequence[int]) -> tuple[int, int]:
    """Equilibrium results of the alternating-offers game, for both initiators.

    Returns ``(result when the team opens, result when the other party opens)``
    as outcome indices.  Computed by backward induction over subsets of the
    outcome set: for each set of still-available outcomes and each proposer,
    the proposer offers the outcome whose realized result it likes best, and
    the responder accepts an offer exactly when it strictly prefers the offer
    to the result of continuing with the remaining outcomes.
    """
    m = len(pos_t)
    if len(pos_o) != m:
        raise ValueError("position arrays differ in length")
    full = (1 << m) - 1
    prefs = (pos_t, pos_o)
    # value[mask*2 + proposer] = realized outcome index for that subgame
    value = [0] * ((full + 1) * 2)
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            # one outcome left: accepted in the last round
            sole = mask.bit_length() - 1
            value[mask * 2] = sole
            value[mask * 2 + 1] = sole
            continue
        for proposer in (0, 1):
            pos_p = prefs[proposer]
            pos_r = prefs[1 - proposer]
            best = -1
            best_rank = -1
            rest = mask
            while rest:
                low = rest & -rest
                rest ^= low
                offer = low.bit_length() - 1
                cont = value[(mask ^ low) * 2 + (1 - proposer)]
                # preferences are strict and cont != offer, so acceptance
                # never hinges on indifference
                assert cont != offer
                realized = offer if pos_r[offer] > pos_r[cont] else cont
                if pos_p[realized] > best_rank:
                    best_rank = pos_p[realized]
                    best = realized
            value[mask * 2 + proposer] = best
    return value[full * 2], value[full * 2 + 1]


def find_coalition(
    base_scores: Sequence[int],
    awards: Sequence[Sequence[int]],
    pos_o: Sequence[int],
    k: int,
    target: int,
    constructive: bool,
) -> tuple[int, ...] | None:
    """First vote multiset (by canonical index order) that meets the predicate.

    ``awards[v][c]`` is the score vote ``v`` gives outcome ``c``; candidate
    multisets are non-decreasing index tuples of length ``k``.  The predicate
    holds when both negotiation results equal ``target`` (constructive) or
    both differ from it (destructive).  Returns the witness index tuple, or
    ``None`` when no multiset qualifies.
    """
    m = len(base_scores)
    indices = range(m)
    # distinct aggregate rankings are few; cache the induction per ranking
    cache: dict[tuple[int, ...], tuple[int, int]] = {}
    for combo in itertools.combinations_with_replacement(range(len(awards)), k):
        scores = list(base_scores)
        for v in combo:
            row = awards[v]
            for c in indices:
                scores[c] += row[c]
        order = sorted(indices, key=lambda c: (-scores[c], c))
        key = tuple(order)
        pair = cache.get(key)
        if pair is None:
            pos_t = [0] * m
            for rank, c in enumerate(order):
                pos_t[c] = m - 1 - rank
            pair = spe_pair(pos_t, pos_o)
            cache[key] = pair
        n_t, n_o = pair
        if constructive:
            if n_t == target and n_o == target:
                return combo
        elif n_t != target and n_o != target:
            return combo
    return None
