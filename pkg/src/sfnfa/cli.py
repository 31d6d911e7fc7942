"""Command-line front end.

Exit codes: 0 success, 1 negative verdict (``check`` on a language that is
not suffix-free), 2 parse error, 3 precondition violation, 4 unexpected
certification failure.  Output files are written atomically.
"""

from __future__ import annotations

import json
import sys

import click

from . import bounds, serialize
from .automata import enumerate_words
from .bounds import (
    FoolingSet,
    LowerBoundKind,
    Operation,
    certify,
    formula_value,
    nsc_exhaustive,
    verify_fooling_set,
)
from .constructions import (
    complement_sf,
    concat_sf,
    intersect_sf,
    reverse_nfa,
    star_sf,
    union_sf,
)
from .errors import (
    BudgetExceeded,
    NonReturningViolation,
    ParameterOutOfRange,
    ParseError,
    SearchBudgetExceeded,
    SuffixFreeViolation,
)
from .suffixfree import is_non_returning, is_suffix_free
from .witnesses import Family, WitnessSpec, build


def _load(path):
    try:
        return serialize.load(path)
    except ParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


def _fail_precondition(exc):
    if isinstance(exc, NonReturningViolation):
        click.echo(
            f"error: non-returning precondition violated "
            f"(witness transition {exc.transition})",
            err=True,
        )
    else:
        click.echo(
            f"error: suffix-free precondition violated (witness pair {exc.witness})",
            err=True,
        )
    sys.exit(3)


@click.group()
def main():
    """State-optimal NFA operations on suffix-free regular languages."""


@main.command()
@click.argument("automaton", type=click.Path(exists=False))
@click.option("--json", "as_json", is_flag=True, help="emit a JSON verdict")
def check(automaton, as_json):
    """Report suffix-freeness and the non-returning flag of an automaton."""
    from .automata import remove_lambda

    nfa = remove_lambda(_load(automaton))
    verdict = is_suffix_free(nfa)
    non_ret = is_non_returning(nfa)
    if as_json:
        witness = None
        if verdict.witness is not None:
            shorter, longer = verdict.witness
            witness = [nfa.alphabet.text(shorter), nfa.alphabet.text(longer)]
        click.echo(json.dumps({"suffix_free": verdict.suffix_free, "witness": witness}))
    else:
        yn = {True: "yes", False: "no"}
        line = f"suffix-free: {yn[verdict.suffix_free]}; non-returning: {yn[non_ret]}"
        if verdict.witness is not None:
            shorter, longer = verdict.witness
            line += (
                f"; witness: ({nfa.alphabet.text(shorter) or 'λ'}, "
                f"{nfa.alphabet.text(longer)})"
            )
        click.echo(line)
    sys.exit(0 if verdict.suffix_free else 1)


_OPS = {
    "union": (union_sf, 2),
    "concat": (concat_sf, 2),
    "intersect": (intersect_sf, 2),
    "star": (star_sf, 1),
    "reverse": (reverse_nfa, 1),
    "complement": (complement_sf, 1),
}


@main.command()
@click.argument("name", type=click.Choice(sorted(_OPS)))
@click.argument("inputs", nargs=-1, type=click.Path())
@click.option("-o", "--output", type=click.Path(), required=True)
@click.option("--dot", "dot_path", type=click.Path(), default=None,
              help="also export Graphviz DOT")
@click.option("--strict", is_flag=True, help="verify suffix-freeness of inputs")
def op(name, inputs, output, dot_path, strict):
    """Apply a construction to one or two automaton files."""
    func, arity = _OPS[name]
    if len(inputs) != arity:
        click.echo(f"error: {name} takes {arity} input file(s)", err=True)
        sys.exit(2)
    automata = [_load(p) for p in inputs]
    kwargs = {} if name == "reverse" else {"strict": strict}
    try:
        result = func(*automata, **kwargs)
    except (NonReturningViolation, SuffixFreeViolation) as exc:
        _fail_precondition(exc)
    serialize.dump(result, output)
    if dot_path:
        serialize.write_text_atomic(dot_path, serialize.to_dot(result))


@main.command()
@click.argument("family", type=click.Choice([f.value for f in Family]))
@click.option("--m", "m", type=int, required=True)
@click.option("--n", "n", type=int, default=None)
@click.option("-o", "--output", type=click.Path(), default=None,
              help="write to a file instead of stdout")
def witness(family, m, n, output):
    """Emit a witness automaton (pair families emit a JSON array)."""
    try:
        result = build(WitnessSpec(Family(family), m, n))
    except ParameterOutOfRange as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if isinstance(result, tuple):
        text = json.dumps([serialize.to_document(a) for a in result])
    else:
        text = serialize.to_json(result)
    if output:
        serialize.write_text_atomic(output, text + "\n")
    else:
        click.echo(text)


@main.command("verify-fooling-set")
@click.argument("automaton", type=click.Path())
@click.argument("pairs_file", type=click.Path())
def verify_fooling_set_cmd(automaton, pairs_file):
    """Verify a fooling-set certificate ([["x","w"], ...], "" for λ)."""
    nfa = _load(automaton)
    try:
        with open(pairs_file, encoding="utf-8") as fh:
            raw = json.load(fh)
        pairs = tuple((x, w) for x, w in raw)
    except (OSError, json.JSONDecodeError, TypeError, ValueError) as exc:
        click.echo(f"error: bad pairs file: {exc}", err=True)
        sys.exit(2)
    ok = verify_fooling_set(nfa, FoolingSet(pairs))
    click.echo(
        f"verified: {'yes' if ok else 'no'}; "
        f"certified lower bound: {len(pairs) if ok else 0}"
    )
    sys.exit(0 if ok else 1)


@main.command()
@click.argument("automaton", type=click.Path())
@click.option("--max-states", "max_states", type=int, required=True)
def nsc(automaton, max_states):
    """Exhaustive minimal-NFA search up to a state ceiling."""
    nfa = _load(automaton)
    try:
        result = nsc_exhaustive(nfa, max_states)
    except BudgetExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo("none" if result is None else str(result))


@main.command("certify")
@click.argument("operation", type=click.Choice([o.value for o in Operation]))
@click.option("--m", "m", type=int, required=True)
@click.option("--n", "n", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.option("--seed", type=int, default=0)
def certify_cmd(operation, m, n, as_json, seed):
    """Certify one operation at (m, n): construction vs. lower bound."""
    try:
        report = certify(Operation(operation), m, n, seed=seed)
    except (ParameterOutOfRange, SearchBudgetExceeded) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if as_json:
        click.echo(json.dumps(report.to_dict()))
    else:
        click.echo(
            f"{report.operation.value} m={report.m}"
            + (f" n={report.n}" if report.n is not None else "")
            + f": constructed={report.constructed_size}"
            f" lower_bound={report.lower_bound}"
            f" formula={report.formula_value}"
            f" tight={'yes' if report.tight else 'no'}"
        )


_FORMULAS = {
    Operation.CATENATION: "m+n-1",
    Operation.UNION: "m+n-1",
    Operation.INTERSECTION: "mn-(m+n)+2",
    Operation.STAR: "m",
    Operation.REVERSAL: "m+1",
    Operation.COMPLEMENTATION: "2^(m-1)+1",
}

# Operation order of the paper's summary table.
_TABLE_ORDER = [
    Operation.CATENATION,
    Operation.UNION,
    Operation.INTERSECTION,
    Operation.STAR,
    Operation.REVERSAL,
    Operation.COMPLEMENTATION,
]

_TIGHT_EXPECTED = {
    Operation.CATENATION,
    Operation.UNION,
    Operation.INTERSECTION,
    Operation.STAR,
}


def _parse_range(text):
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        click.echo(f"error: bad range {text!r}, expected A..B", err=True)
        sys.exit(2)


def _verdict(report) -> str:
    if report.tight:
        return "TIGHT"
    if report.lower_bound_kind is LowerBoundKind.NONE:
        return "UPPER-ONLY"
    return "GAP"


@main.command()
@click.option("--m", "m_range", default="2..4", help="range A..B")
@click.option("--n", "n_range", default=None, help="range A..B (binary ops)")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]),
              default="text")
@click.option("--seed", type=int, default=0)
def table(m_range, n_range, fmt, seed):
    """Certification table across parameter ranges, in the order of the
    summary table (catenation, union, intersection, star, reversal,
    complementation)."""
    ms = _parse_range(m_range)
    ns = _parse_range(n_range) if n_range else ms
    rows = []
    failed = False
    for operation in _TABLE_ORDER:
        binary = operation in bounds._BINARY_OPS
        min_m = 4 if operation is Operation.REVERSAL else 2
        for m in ms:
            if m < min_m:
                continue
            for n in (ns if binary else [None]):
                if binary and n < 2:
                    continue
                report = certify(operation, m, n, seed=seed)
                verdict = _verdict(report)
                if operation in _TIGHT_EXPECTED and not report.tight:
                    failed = True
                rows.append((report, verdict))
    if fmt == "json":
        click.echo(json.dumps(
            [dict(report.to_dict(), verdict=v) for report, v in rows]
        ))
    elif fmt == "csv":
        lines = ["operation,m,n,formula,formula_value,constructed,lower_bound,verdict"]
        for report, v in rows:
            lines.append(
                f"{report.operation.value},{report.m},"
                f"{'' if report.n is None else report.n},"
                f"{_FORMULAS[report.operation]},{report.formula_value},"
                f"{report.constructed_size},{report.lower_bound},{v}"
            )
        click.echo("\n".join(lines))
    else:
        header = (
            f"{'operation':<16}{'m':>3}{'n':>3}  {'formula':<12}"
            f"{'value':>6}{'built':>6}{'lower':>6}  verdict"
        )
        click.echo(header)
        click.echo("-" * len(header))
        for report, v in rows:
            click.echo(
                f"{report.operation.value:<16}{report.m:>3}"
                f"{'' if report.n is None else report.n:>3}  "
                f"{_FORMULAS[report.operation]:<12}"
                f"{report.formula_value:>6}{report.constructed_size:>6}"
                f"{report.lower_bound:>6}  {v}"
            )
    if failed:
        sys.exit(4)


@main.command()
@click.argument("automaton", type=click.Path())
@click.option("--max-len", "max_len", type=int, required=True)
def enumerate(automaton, max_len):
    """List accepted words up to a length bound (λ prints as ~)."""
    nfa = _load(automaton)
    for word in enumerate_words(nfa, max_len):
        click.echo(nfa.alphabet.text(word) or "~")


if __name__ == "__main__":
    main()
