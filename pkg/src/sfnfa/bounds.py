"""Lower-bound machinery: fooling-set certificates, fooling-set search,
an exhaustive minimal-NFA oracle for tiny instances, and the certification
reports tying upper and lower bounds together."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from . import _kernel
from .automata import (
    Nfa,
    accepts,
    canonical_dfa,
    enumerate_words,
)
from .constructions import (
    complement_sf,
    concat_sf,
    intersect_sf,
    reverse_nfa,
    star_sf,
    union_sf,
)
from .errors import BudgetExceeded, ParameterOutOfRange, SearchBudgetExceeded
from .witnesses import Family, WitnessSpec, build
from .automata import lambda_nfa, alphabet as make_alphabet


@dataclass(frozen=True)
class FoolingSet:
    """An ordered list of (x, w) label-string pairs.

    Verified against a language L it certifies that a minimal NFA for L
    needs at least ``len(pairs)`` states: every x_i w_i belongs to L and
    for i != j at least one cross product x_i w_j, x_j w_i does not.
    """

    pairs: tuple[tuple[str, str], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def to_json_pairs(self) -> list[list[str]]:
        return [list(p) for p in self.pairs]


def verify_fooling_set(a: Nfa, p: FoolingSet) -> bool:
    """Check both fooling-set conditions against L(a)."""
    words = [(a.alphabet.word(x), a.alphabet.word(w)) for x, w in p.pairs]
    member = {}

    def in_lang(u, v):
        key = u + v
        if key not in member:
            member[key] = accepts(a, key)
        return member[key]

    for x, w in words:
        if not in_lang(x, w):
            return False
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            xi, wi = words[i]
            xj, wj = words[j]
            if in_lang(xi, wj) and in_lang(xj, wi):
                return False
    return True


class FoolingFamily(enum.Enum):
    LEMMA_L1 = "lemma-l1"
    LEMMA_L2 = "lemma-l2"
    UNION = "union"
    CATENATION = "catenation"
    INTERSECTION = "intersection"
    STAR = "star"


def paper_fooling_set(op: FoolingFamily, m: int, n: int | None = None) -> FoolingSet:
    """The explicit symbolic fooling-set family for each tight operation,
    instantiated at (m, n)."""
    def need(cond, msg):
        if not cond:
            raise ParameterOutOfRange(msg)

    if op is FoolingFamily.LEMMA_L1:
        need(m >= 2, "lemma-l1 needs m >= 2")
        pairs = [("", "b")] + [("b" + "a" * i, "a" * (m - 1 - i)) for i in range(m - 1)]
    elif op is FoolingFamily.LEMMA_L2:
        need(m >= 3, "lemma-l2 needs m >= 3")
        pairs = [("", "bb")]
        pairs += [("b" + "a" * i, "a" * (m - 2 - i) + "b") for i in range(m - 2)]
        pairs += [("b" + "a" * (m - 2) + "b", "")]
    elif op is FoolingFamily.UNION:
        need(m >= 2 and n is not None and n >= 2, "union needs m, n >= 2")
        pairs = [("", "b" + "a" * (m - 1))]
        pairs += [("b" + "a" * i, "a" * (m - 1 - i)) for i in range(m - 1)]
        pairs += [("a" + "b" * j, "b" * (n - 1 - j)) for j in range(n - 1)]
    elif op is FoolingFamily.CATENATION:
        need(m >= 2 and n is not None and n >= 2, "catenation needs m, n >= 2")
        total = m + n - 2
        pairs = [("a" * i, "a" * (total - i)) for i in range(total + 1)]
    elif op is FoolingFamily.INTERSECTION:
        need(m >= 2 and n is not None and n >= 2, "intersection needs m, n >= 2")
        pairs = [("", "c")]
        for i in range(1, m):
            for j in range(1, n):
                pairs.append(
                    ("c" + "a" * i + "b" * j, "a" * (m - 1 - i) + "b" * (n - 1 - j))
                )
    elif op is FoolingFamily.STAR:
        if m == 1:
            pairs = [("", "")]
        else:
            pairs = [("", "b")] + [
                ("b" + "a" * i, "a" * (m - 1 - i)) for i in range(m - 1)
            ]
    else:
        raise ParameterOutOfRange(f"unknown fooling family: {op}")
    return FoolingSet(tuple(pairs))


_CANDIDATE_CAP = 16384
_EXACT_CLIQUE_NODES = 24


def search_fooling_set(
    a: Nfa,
    max_word_len: int,
    target_size: int,
    seed: int = 0,
    restarts: int = 64,
) -> FoolingSet | None:
    """Automated lower-bound discovery over bounded words.

    Candidates are all splits (x, w) of accepted words of length at most
    ``max_word_len``.  Two candidates are compatible when at least one
    cross product leaves the language; a clique of compatible candidates
    is a fooling set.  Clique search is exact (bitmask branch and bound)
    up to 24 candidates and seeded-greedy with restarts above.
    """
    if target_size < 1:
        raise ValueError("target_size must be at least 1")
    words = enumerate_words(a, max_word_len)
    cands = []
    seen = set()
    for w in words:
        for i in range(len(w) + 1):
            pair = (w[:i], w[i:])
            if pair not in seen:
                seen.add(pair)
                cands.append(pair)
    if len(cands) > _CANDIDATE_CAP:
        raise SearchBudgetExceeded(
            f"{len(cands)} candidate pairs exceed the search cap",
            best_size=1 if cands else 0,
        )
    if not cands:
        return None

    member = {tuple(w): True for w in words}

    def in_lang(u, v):
        key = u + v
        if len(key) <= max_word_len:
            return key in member
        return accepts(a, key)

    nc = len(cands)
    adj = [0] * nc
    for i in range(nc):
        xi, wi = cands[i]
        for j in range(i + 1, nc):
            xj, wj = cands[j]
            if not (in_lang(xi, wj) and in_lang(xj, wi)):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    if nc <= _EXACT_CLIQUE_NODES:
        best = _max_clique_exact(adj)
    else:
        best = _clique_greedy(adj, target_size, seed, restarts)
    if len(best) < target_size:
        return None
    chosen = sorted(best)
    fs = FoolingSet(
        tuple((a.alphabet.text(cands[i][0]), a.alphabet.text(cands[i][1])) for i in chosen)
    )
    assert verify_fooling_set(a, fs), "search produced an unverifiable fooling set"
    return fs


def _max_clique_exact(adj: list[int]) -> list[int]:
    n = len(adj)
    best: list[int] = []

    def expand(clique: list[int], cand_mask: int) -> None:
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        m = cand_mask
        while m:
            if len(clique) + m.bit_count() <= len(best):
                return
            v = (m & -m).bit_length() - 1
            m &= m - 1
            expand(clique + [v], cand_mask & adj[v] & ~((1 << (v + 1)) - 1))

    expand([], (1 << n) - 1)
    return best


def _clique_greedy(adj, target_size, seed, restarts) -> list[int]:
    n = len(adj)
    rng = random.Random(seed)
    degree_order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    best: list[int] = []
    orders = [degree_order]
    for _ in range(restarts):
        perm = list(range(n))
        rng.shuffle(perm)
        orders.append(perm)
    for order in orders:
        for start in order[: min(n, 64)]:
            clique = [start]
            mask = adj[start]
            for v in order:
                if mask >> v & 1:
                    clique.append(v)
                    mask &= adj[v]
            if len(clique) > len(best):
                best = clique
            if len(best) >= target_size:
                return best
    return best


# Exhaustive search ceilings: the full table space (2^k)^(k * sigma) has to
# stay enumerable; beyond these the tool degrades to fooling sets only.
_TABLE_BUDGET = 1 << 24


def _default_ceiling(alphabet_size: int) -> int:
    return 3 if alphabet_size <= 2 else 2


def _sample_trie(alphabet_size: int, depth: int):
    """BFS word trie of every word of length <= depth: parent index,
    edge symbol, and a (parent-word, symbol) expansion order."""
    parents = [-1]
    symbols = [-1]
    level = [0]
    nodes_words = [()]
    for _ in range(depth):
        nxt = []
        for node in level:
            for x in range(alphabet_size):
                parents.append(node)
                symbols.append(x)
                nodes_words.append(nodes_words[node] + (x,))
                nxt.append(len(parents) - 1)
        level = nxt
    return parents, symbols, nodes_words


def _candidate_nfa(a: Nfa, k: int, cells: tuple[int, ...], finals_mask: int) -> Nfa:
    s = a.alphabet.size
    trans = set()
    for st in range(k):
        for x in range(s):
            mask = cells[st * s + x]
            for dst in range(k):
                if mask >> dst & 1:
                    trans.add((st, x, dst))
    finals = frozenset(q for q in range(k) if finals_mask >> q & 1)
    return Nfa(k, a.alphabet, 0, finals, frozenset(trans))


def _final_mask_options(cells, k, s, parents, symbols, labels, f_max):
    """All subsets of f_max consistent with the sample labels, largest
    first.  Needed because the bounded sample cannot always distinguish
    final-set choices that only diverge on longer words."""
    reach = [1]
    for i in range(1, len(parents)):
        pm = reach[parents[i]]
        x = symbols[i]
        nm = 0
        for st in range(k):
            if pm >> st & 1:
                nm |= cells[st * s + x]
        reach.append(nm)
    accept_masks = [reach[i] for i in range(len(parents)) if labels[i]]
    options = []
    sub = f_max
    while True:
        if all(sub & am for am in accept_masks):
            options.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & f_max
    return options


def nsc_exhaustive(a: Nfa, max_states: int) -> int | None:
    """Least k <= max_states with a k-state lambda-free NFA equivalent to
    L(a), by exhaustive enumeration with start fixed at state 0.

    Candidate tables are bulk-filtered against all words of length <= 2k
    (compiled kernel when available), then survivors get a full
    determinize-and-minimize equivalence check.
    """
    sigma = a.alphabet.size
    ceiling = _default_ceiling(sigma)
    if max_states > ceiling:
        raise BudgetExceeded(
            f"max_states {max_states} exceeds the ceiling {ceiling} for a "
            f"{sigma}-symbol alphabet"
        )
    target = canonical_dfa(a)
    for k in range(1, max_states + 1):
        if (1 << k) ** (k * sigma) > _TABLE_BUDGET:
            raise BudgetExceeded(f"table space for k={k} exceeds the budget")
        parents, symbols, node_words = _sample_trie(sigma, 2 * k)
        labels = [accepts(a, w) for w in node_words]
        survivors = _kernel.filter_tables(k, sigma, parents, symbols, labels)
        for cells, f_max in survivors:
            for fmask in _final_mask_options(
                cells, k, sigma, parents, symbols, labels, f_max
            ):
                cand = _candidate_nfa(a, k, cells, fmask)
                if canonical_dfa(cand) == target:
                    return k
    return None


class Operation(enum.Enum):
    UNION = "union"
    CATENATION = "catenation"
    INTERSECTION = "intersection"
    STAR = "star"
    REVERSAL = "reversal"
    COMPLEMENTATION = "complementation"


class LowerBoundKind(enum.Enum):
    FOOLING_SET = "FoolingSet"
    EXHAUSTIVE = "Exhaustive"
    NONE = "None"


_BINARY_OPS = {Operation.UNION, Operation.CATENATION, Operation.INTERSECTION}


@dataclass(frozen=True)
class ComplexityReport:
    operation: Operation
    m: int
    n: int | None
    constructed_size: int
    lower_bound: int
    lower_bound_kind: LowerBoundKind
    formula_value: int
    tight: bool
    fooling_set: FoolingSet | None = None
    note: str | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "operation": self.operation.value,
            "m": self.m,
            "n": self.n,
            "constructed": self.constructed_size,
            "lower_bound": self.lower_bound,
            "lower_bound_kind": self.lower_bound_kind.value,
            "formula_value": self.formula_value,
            "tight": self.tight,
            "fooling_set": self.fooling_set.to_json_pairs() if self.fooling_set else None,
            "note": self.note,
        }


def formula_value(op: Operation, m: int, n: int | None) -> int:
    if op in (Operation.UNION, Operation.CATENATION):
        return m + n - 1
    if op is Operation.INTERSECTION:
        return m * n - (m + n) + 2
    if op is Operation.STAR:
        return m
    if op is Operation.REVERSAL:
        return m + 1
    if op is Operation.COMPLEMENTATION:
        return 2 ** (m - 1) + 1
    raise ParameterOutOfRange(f"unknown operation: {op}")


def certify(op: Operation, m: int, n: int | None = None, seed: int = 0) -> ComplexityReport:
    """Build witnesses, apply the construction, and certify the result's
    state complexity against the per-operation formula."""
    formula = formula_value(op, m, n)
    if op in _BINARY_OPS:
        if n is None:
            raise ParameterOutOfRange(f"{op.value} requires n")
        family = {
            Operation.UNION: Family.UNION_PAIR,
            Operation.CATENATION: Family.CONCAT_PAIR,
            Operation.INTERSECTION: Family.INTERSECT_PAIR,
        }[op]
        left, right = build(WitnessSpec(family, m, n))
        construct = {
            Operation.UNION: union_sf,
            Operation.CATENATION: concat_sf,
            Operation.INTERSECTION: intersect_sf,
        }[op]
        result = construct(left, right)
        fs = paper_fooling_set(FoolingFamily(op.value), m, n)
        ok = verify_fooling_set(result, fs)
        lower = len(fs) if ok else 0
        return ComplexityReport(
            op, m, n, result.state_count, lower,
            LowerBoundKind.FOOLING_SET if ok else LowerBoundKind.NONE,
            formula, lower == result.state_count == formula,
            fooling_set=fs if ok else None,
        )
    if op is Operation.STAR:
        witness = lambda_nfa(make_alphabet("ab")) if m == 1 else build(
            WitnessSpec(Family.STAR, m)
        )
        result = star_sf(witness)
        fs = paper_fooling_set(FoolingFamily.STAR, m)
        ok = verify_fooling_set(result, fs)
        lower = len(fs) if ok else 0
        return ComplexityReport(
            op, m, None, result.state_count, lower,
            LowerBoundKind.FOOLING_SET if ok else LowerBoundKind.NONE,
            formula, lower == result.state_count == formula,
            fooling_set=fs if ok else None,
        )
    if op is Operation.REVERSAL:
        witness = build(WitnessSpec(Family.REVERSAL, m))
        result = reverse_nfa(witness)
        fs = search_fooling_set(result, max_word_len=m + 3, target_size=m, seed=seed)
        lower = len(fs) if fs else 0
        return ComplexityReport(
            op, m, None, result.state_count, lower,
            LowerBoundKind.FOOLING_SET if fs else LowerBoundKind.NONE,
            formula, False, fooling_set=fs,
            note="m+1 lower bound paper-proved, not machine-certified",
        )
    if op is Operation.COMPLEMENTATION:
        witness = build(WitnessSpec(Family.LEMMA_L1, m))
        result = complement_sf(witness)
        return ComplexityReport(
            op, m, None, result.state_count, 0, LowerBoundKind.NONE,
            formula, False,
            note="2^(m-1)-1 lower bound needs an external witness family",
        )
    raise ParameterOutOfRange(f"unknown operation: {op}")
