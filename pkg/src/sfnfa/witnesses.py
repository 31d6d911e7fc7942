"""Parameterized witness language families for the lower-bound arguments.

Each generator emits an explicit NFA (or pair of NFAs) of exactly the
stated state count, over the smallest alphabet the family needs.  All
outputs are suffix-free and non-returning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .automata import Alphabet, Nfa, alphabet
from .errors import ParameterOutOfRange


class Family(enum.Enum):
    LEMMA_L1 = "lemma-l1"
    LEMMA_L2 = "lemma-l2"
    UNION_PAIR = "union-pair"
    CONCAT_PAIR = "concat-pair"
    INTERSECT_PAIR = "intersect-pair"
    STAR = "star"
    REVERSAL = "reversal"
    COMPLEMENT_PREFIXED = "complement-prefixed"


# Binary families need m >= 2; the two-symbol cycle family needs m >= 3;
# the reversal family needs the d + cycle + b*/c* layout, so m >= 4.
_MIN_M = {
    Family.LEMMA_L1: 2,
    Family.LEMMA_L2: 3,
    Family.UNION_PAIR: 2,
    Family.CONCAT_PAIR: 2,
    Family.INTERSECT_PAIR: 2,
    Family.STAR: 2,
    Family.REVERSAL: 4,
    Family.COMPLEMENT_PREFIXED: 2,
}

_PAIR_FAMILIES = {Family.UNION_PAIR, Family.CONCAT_PAIR, Family.INTERSECT_PAIR}


@dataclass(frozen=True)
class WitnessSpec:
    family: Family
    m: int
    n: int | None = None
    inner: Nfa | None = None  # COMPLEMENT_PREFIXED only: custom binary core

    def __post_init__(self):
        if self.m < _MIN_M[self.family]:
            raise ParameterOutOfRange(
                f"{self.family.value} requires m >= {_MIN_M[self.family]}, got {self.m}"
            )
        if self.family in _PAIR_FAMILIES:
            if self.n is None or self.n < _MIN_M[self.family]:
                raise ParameterOutOfRange(
                    f"{self.family.value} requires n >= {_MIN_M[self.family]}"
                )
        elif self.n is not None:
            raise ParameterOutOfRange(f"{self.family.value} takes no n parameter")


def _symbol_then_cycle(m: int, alpha: Alphabet, first: int, loop: int) -> Nfa:
    """NFA for first . (loop^(m-1))*: one ``first`` edge into an m-1 cycle
    of ``loop`` edges whose entry state is final."""
    trans = {(0, first, 1)}
    cycle = m - 1
    for i in range(cycle):
        trans.add((1 + i, loop, 1 + (i + 1) % cycle))
    return Nfa(m, alpha, 0, frozenset({1}), frozenset(trans))


def _lemma_l1(m: int) -> Nfa:
    return _symbol_then_cycle(m, alphabet("ab"), first=1, loop=0)  # b (a^(m-1))*


def _lemma_l2(m: int) -> Nfa:
    # b (a^(m-2))* b: b into a cycle of length m-2, b out to the final.
    alpha = alphabet("ab")
    b, a = 1, 0
    trans = {(0, b, 1), (1, b, m - 1)}
    cycle = m - 2
    for i in range(cycle):
        trans.add((1 + i, a, 1 + (i + 1) % cycle))
    return Nfa(m, alpha, 0, frozenset({m - 1}), frozenset(trans))


def _counter_after_c(m: int, counted: int, other: int) -> Nfa:
    """NFA for {c w | w over {a,b}, #counted(w) = 0 mod m-1}."""
    alpha = alphabet("abc")
    c = 2
    trans = {(0, c, 1)}
    cycle = m - 1
    for i in range(cycle):
        state = 1 + i
        trans.add((state, counted, 1 + (i + 1) % cycle))
        trans.add((state, other, state))
    return Nfa(m, alpha, 0, frozenset({1}), frozenset(trans))


def _chain(m: int) -> Nfa:
    # The singleton {a^(m-1)} over the unary alphabet.
    alpha = alphabet("a")
    trans = {(i, 0, i + 1) for i in range(m - 1)}
    return Nfa(m, alpha, 0, frozenset({m - 1}), frozenset(trans))


def _reversal_witness(m: int) -> Nfa:
    # d (a^(m-3))* (b* + c*) over {a,b,c,d}: d into an a-cycle of length
    # m-3, whose entry can leave into a b-loop or a c-loop state.
    alpha = alphabet("abcd")
    a, b, c, d = 0, 1, 2, 3
    cycle = m - 3
    p_b, p_c = m - 2, m - 1
    trans = {(0, d, 1), (1, b, p_b), (p_b, b, p_b), (1, c, p_c), (p_c, c, p_c)}
    for i in range(cycle):
        trans.add((1 + i, a, 1 + (i + 1) % cycle))
    return Nfa(m, alpha, 0, frozenset({1, p_b, p_c}), frozenset(trans))


def _default_complement_core(m: int) -> Nfa:
    # m-1 states over {a,b}: a-count = 0 mod m-1, b free.  A stand-in for
    # the external hard-to-complement binary family; it lets the pipeline
    # run end to end but claims nothing about the 2^(m-1)-1 lower bound.
    alpha = alphabet("ab")
    cycle = m - 1
    trans = set()
    for i in range(cycle):
        trans.add((i, 0, (i + 1) % cycle))
        trans.add((i, 1, i))
    return Nfa(cycle, alpha, 0, frozenset({0}), frozenset(trans))


def _complement_prefixed(m: int, inner: Nfa | None) -> Nfa:
    core = inner if inner is not None else _default_complement_core(m)
    if core.alphabet.labels != ("a", "b"):
        raise ParameterOutOfRange("complement-prefixed core must be over {a, b}")
    if core.has_lambda:
        raise ParameterOutOfRange("complement-prefixed core must be lambda-free")
    alpha = alphabet("abc")
    offset = 1
    trans = {(src + offset, sym, dst + offset) for src, sym, dst in core.transitions}
    trans.add((0, 2, core.start + offset))  # the prefixing c edge
    finals = frozenset(q + offset for q in core.finals)
    return Nfa(core.state_count + 1, alpha, 0, finals, frozenset(trans))


def build(spec: WitnessSpec):
    """Instantiate a witness family; pair families return a 2-tuple."""
    f, m, n = spec.family, spec.m, spec.n
    if f is Family.LEMMA_L1:
        return _lemma_l1(m)
    if f is Family.LEMMA_L2:
        return _lemma_l2(m)
    if f is Family.STAR:
        return _lemma_l1(m)
    if f is Family.UNION_PAIR:
        # b (a^(m-1))* and its letter-swapped twin a (b^(n-1))*.
        left = _lemma_l1(m)
        right = _symbol_then_cycle(n, alphabet("ab"), first=0, loop=1)
        return left, right
    if f is Family.CONCAT_PAIR:
        return _chain(m), _chain(n)
    if f is Family.INTERSECT_PAIR:
        return _counter_after_c(m, counted=0, other=1), _counter_after_c(
            n, counted=1, other=0
        )
    if f is Family.REVERSAL:
        return _reversal_witness(m)
    if f is Family.COMPLEMENT_PREFIXED:
        return _complement_prefixed(m, spec.inner)
    raise ParameterOutOfRange(f"unknown family: {f}")
