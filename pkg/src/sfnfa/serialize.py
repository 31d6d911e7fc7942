"""Canonical JSON automaton format and Graphviz DOT export.

Document shape (keys in exactly this order)::

    {"alphabet": ["a", "b"], "states": N, "start": i, "finals": [..],
     "transitions": [[src, "a"|"~", dst], ...]}

``"~"`` encodes a lambda edge.  Transitions are sorted by
``(src, symbol-label, dst)`` and finals ascending, so emission is
byte-deterministic and round-trips exactly.
"""

from __future__ import annotations

import json
import os
import tempfile

from .automata import Alphabet, Dfa, Nfa, dfa_to_nfa
from .errors import ParseError

LAMBDA_LABEL = "~"


def to_document(a: Nfa | Dfa) -> dict:
    if isinstance(a, Dfa):
        a = dfa_to_nfa(a)
    labels = a.alphabet.labels
    triples = sorted(
        (src, LAMBDA_LABEL if sym is None else labels[sym], dst)
        for src, sym, dst in a.transitions
    )
    return {
        "alphabet": list(labels),
        "states": a.state_count,
        "start": a.start,
        "finals": sorted(a.finals),
        "transitions": [list(t) for t in triples],
    }


def to_json(a: Nfa | Dfa) -> str:
    return json.dumps(to_document(a))


def from_document(doc) -> Nfa:
    if not isinstance(doc, dict):
        raise ParseError("automaton document must be a JSON object")
    for key in ("alphabet", "states", "start", "finals", "transitions"):
        if key not in doc:
            raise ParseError(f"missing key: {key}")
    try:
        alpha = Alphabet(tuple(doc["alphabet"]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad alphabet: {exc}") from exc
    states = doc["states"]
    if not isinstance(states, int) or states <= 0:
        raise ParseError("states must be a positive integer")
    trans = set()
    for entry in doc["transitions"]:
        try:
            src, label, dst = entry
        except (TypeError, ValueError):
            raise ParseError(f"bad transition entry: {entry!r}") from None
        if label == LAMBDA_LABEL:
            sym = None
        else:
            try:
                sym = alpha.index(label)
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
        trans.add((src, sym, dst))
    try:
        return Nfa(states, alpha, doc["start"], frozenset(doc["finals"]), frozenset(trans))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed automaton: {exc}") from exc


def from_json(text: str) -> Nfa:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def load(path) -> Nfa:
    try:
        with open(path, encoding="utf-8") as fh:
            return from_json(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def dump(a: Nfa | Dfa, path) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    write_text_atomic(path, to_json(a) + "\n")


def write_text_atomic(path, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sfnfa-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def to_dot(a: Nfa | Dfa, name: str = "automaton") -> str:
    """Graphviz DOT: double circles for finals, external arrow into start."""
    if isinstance(a, Dfa):
        a = dfa_to_nfa(a)
    labels = a.alphabet.labels
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=none, label=""];']
    for q in range(a.state_count):
        shape = "doublecircle" if q in a.finals else "circle"
        lines.append(f"  q{q} [shape={shape}, label=\"{q}\"];")
    lines.append(f"  __start -> q{a.start};")
    for src, sym, dst in sorted(
        (s, LAMBDA_LABEL if x is None else labels[x], d) for s, x, d in a.transitions
    ):
        label = "λ" if sym == LAMBDA_LABEL else sym
        lines.append(f'  q{src} -> q{dst} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
